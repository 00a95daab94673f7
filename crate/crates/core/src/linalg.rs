//! Dense matrices over a [`FieldSpec`], stored row-major as element indices.

use crate::gfield::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<u16>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u16] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u16]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<u16>> {
        self.iter_rows().map(<[u16]>::to_vec).collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Matrix { rows: self.rows, cols: cols.len(), data }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self, f: &FieldSpec) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            if pr != lead {
                for k in 0..m.cols {
                    m.data.swap(pr * m.cols + k, lead * m.cols + k);
                }
            }
            let inv = f.inv(m.get(lead, c)).expect("pivot is nonzero");
            for v in m.row_mut(lead).iter_mut() {
                *v = f.mul(*v, inv);
            }
            let pivot_row = m.row(lead).to_vec();
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, c);
                if factor == 0 {
                    continue;
                }
                let nf = f.neg(factor);
                for (v, &pv) in m.row_mut(r).iter_mut().zip(&pivot_row) {
                    if pv != 0 {
                        *v = f.add(*v, f.mul(nf, pv));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        m.data.truncate(lead * m.cols);
        m.rows = lead;
        (m, pivots)
    }

    pub fn rank(&self, f: &FieldSpec) -> usize {
        self.rref(f).1.len()
    }

    /// Basis (as rows) of `{ v : self · vᵀ = 0 }`, in the standard form
    /// obtained from the reduced echelon form.
    pub fn nullspace(&self, f: &FieldSpec) -> Matrix {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.data[k * self.cols + fc] = 1;
            for (pi, &pc) in pivots.iter().enumerate() {
                out.data[k * self.cols + pc] = f.neg(r.get(pi, fc));
            }
        }
        out
    }

    /// `v · self` for a row vector `v` of length `rows`.
    pub fn combine(&self, f: &FieldSpec, coeffs: &[u16]) -> Vec<u16> {
        assert_eq!(coeffs.len(), self.rows);
        let mut out = vec![0u16; self.cols];
        for (r, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(c, v));
            }
        }
        out
    }
}

/// Incremental row reducer: keeps a reduced basis and reports whether new
/// vectors are independent of what it has seen so far.
pub(crate) struct Reducer<'f> {
    f: &'f FieldSpec,
    basis: Vec<(usize, Vec<u16>)>,
}

impl<'f> Reducer<'f> {
    pub(crate) fn new(f: &'f FieldSpec) -> Self {
        Reducer { f, basis: Vec::new() }
    }

    fn reduce(&self, v: &[u16]) -> Vec<u16> {
        let f = self.f;
        let mut w = v.to_vec();
        for (pc, b) in &self.basis {
            let c = w[*pc];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &y) in w.iter_mut().zip(b) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
        }
        w
    }

    /// Insert `v`; returns true when it enlarged the span.
    pub(crate) fn insert(&mut self, v: &[u16]) -> bool {
        let w = self.reduce(v);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.f.inv(w[pc]).expect("nonzero");
        let w: Vec<u16> = w.iter().map(|&x| self.f.mul(x, inv)).collect();
        self.basis.push((pc, w));
        true
    }

    #[cfg(test)]
    fn contains(&self, v: &[u16]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    #[cfg(test)]
    fn rank(&self) -> usize {
        self.basis.len()
    }
}
