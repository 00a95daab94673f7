//! Linear codes over GF(q²) from the Hermitian curve: one-point codes,
//! order-bound improved codes, duals, nested pairs, exhaustive distances and
//! a plain-text generator matrix format.

pub mod distance;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::curve::{self, CurveContext, CurveError};
use crate::gfield::FieldSpec;
use crate::linalg::{Matrix, Reducer};
use crate::semigroup::SemigroupError;

pub use distance::{DistanceOptions, DistanceReport, DEFAULT_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("designed distance {delta} outside 1..={max}")]
    DeltaOutOfRange { delta: u32, max: u32 },
    #[error("search needs {required} message visits, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("second code is not contained in the first")]
    NotNested,
    #[error("codes are equal; codimension must be at least 1")]
    ZeroCodimension,
    #[error("codes have different lengths or fields")]
    Incompatible,
    #[error("malformed generator matrix: {0}")]
    Parse(String),
}

/// How a code was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    OnePoint(i64),
    ImprovedPrimary(u32),
    ImprovedDualPerpSpan(u32),
    DualOf(Box<Descriptor>),
    Raw,
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::OnePoint(l) => write!(f, "onepoint:{l}"),
            Descriptor::ImprovedPrimary(d) => write!(f, "improved:{d}"),
            Descriptor::ImprovedDualPerpSpan(d) => write!(f, "dualperp:{d}"),
            Descriptor::DualOf(inner) => write!(f, "dual({inner})"),
            Descriptor::Raw => write!(f, "raw"),
        }
    }
}

impl FromStr for Descriptor {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CodeError::Parse(format!("unknown descriptor `{s}`"));
        if s == "raw" {
            return Ok(Descriptor::Raw);
        }
        if let Some(inner) = s.strip_prefix("dual(").and_then(|r| r.strip_suffix(')')) {
            return Ok(Descriptor::DualOf(Box::new(inner.parse()?)));
        }
        let (kind, val) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "onepoint" => val.parse().map(Descriptor::OnePoint).map_err(|_| bad()),
            "improved" => val.parse().map(Descriptor::ImprovedPrimary).map_err(|_| bad()),
            "dualperp" => val.parse().map(Descriptor::ImprovedDualPerpSpan).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LinearCode {
    q: u32,
    field: Arc<FieldSpec>,
    /// Independent generator rows in construction order (λ-ascending for
    /// codes built from monomials).
    rows: Matrix,
    canonical: Matrix,
    pivots: Vec<usize>,
    /// Pole orders of the rows, when they are monomial evaluations.
    lambdas: Option<Vec<u32>>,
    descriptor: Descriptor,
}

impl LinearCode {
    fn from_independent_rows(
        q: u32,
        field: Arc<FieldSpec>,
        rows: Matrix,
        lambdas: Option<Vec<u32>>,
        descriptor: Descriptor,
    ) -> Self {
        let (canonical, pivots) = rows.rref(&field);
        debug_assert_eq!(canonical.rows(), rows.rows());
        LinearCode { q, field, rows, canonical, pivots, lambdas, descriptor }
    }

    fn from_monomials(ctx: &CurveContext, lambdas: Vec<u32>, descriptor: Descriptor) -> Self {
        let rows = ctx.evaluation_matrix(&lambdas).expect("pole orders come from H*");
        Self::from_independent_rows(ctx.q(), ctx.shared_field(), rows, Some(lambdas), descriptor)
    }

    /// A code spanned by arbitrary rows over GF(q²); dependent rows are
    /// dropped.
    pub fn from_rows(q: u32, rows: Matrix) -> Result<Self, CodeError> {
        let field = Arc::new(curve::field_for_q(q)?);
        let (canonical, _) = rows.rref(&field);
        Ok(Self::from_independent_rows(q, field, canonical, None, Descriptor::Raw))
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.rows.cols()
    }

    pub fn k(&self) -> usize {
        self.rows.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.rows
    }

    /// Reduced row echelon basis; equal row spaces give equal matrices.
    pub fn canonical(&self) -> &Matrix {
        &self.canonical
    }

    pub fn lambdas(&self) -> Option<&[u32]> {
        self.lambdas.as_deref()
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    fn compatible(&self, other: &LinearCode) -> bool {
        self.n() == other.n() && *self.field == *other.field
    }

    pub fn same_row_space(&self, other: &LinearCode) -> bool {
        self.compatible(other) && self.canonical == other.canonical
    }

    /// Whether `other ⊆ self`.
    pub fn contains_code(&self, other: &LinearCode) -> bool {
        self.compatible(other) && other.rows.iter_rows().all(|r| self.contains_word(r))
    }

    pub fn contains_word(&self, word: &[u16]) -> bool {
        let f = &*self.field;
        let mut w = word.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &y) in w.iter_mut().zip(self.canonical.row(i)) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn encode(&self, message: &[u16]) -> Vec<u16> {
        self.rows.combine(&self.field, message)
    }

    /// `header\nrows` with header `q n k descriptor`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {} {}\n", self.q, self.n(), self.k(), self.descriptor);
        for r in self.rows.iter_rows() {
            let line: Vec<String> = r.iter().map(u16::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, CodeError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| CodeError::Parse("empty input".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(CodeError::Parse(format!("header `{header}` needs `q n k descriptor`")));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| CodeError::Parse(format!("bad number `{s}`")));
        let (q, n, k) = (num(fields[0])? as u32, num(fields[1])?, num(fields[2])?);
        let descriptor: Descriptor = fields[3].parse()?;
        let field = Arc::new(curve::field_for_q(q)?);
        let mut rows = Vec::with_capacity(k);
        for line in lines.by_ref().take(k) {
            let row = line
                .split_whitespace()
                .map(|t| match t.parse::<u32>() {
                    Ok(v) if v < field.order() => Ok(v as u16),
                    _ => Err(CodeError::Parse(format!("bad element `{t}`"))),
                })
                .collect::<Result<Vec<u16>, _>>()?;
            if row.len() != n {
                return Err(CodeError::Parse(format!("row has {} entries, expected {n}", row.len())));
            }
            rows.push(row);
        }
        if rows.len() != k {
            return Err(CodeError::Parse(format!("expected {k} rows, found {}", rows.len())));
        }
        if lines.next().is_some() {
            return Err(CodeError::Parse("trailing rows after the declared k".into()));
        }
        let rows = Matrix::from_rows(n, rows);
        if rows.rank(&field) != k {
            return Err(CodeError::Parse("rows are linearly dependent".into()));
        }
        Ok(Self::from_independent_rows(q, field, rows, None, descriptor))
    }
}

/// `C_L(D, λQ)`; negative λ gives the zero code.
pub fn onepoint_code(ctx: &CurveContext, lambda: i64) -> LinearCode {
    let ls: Vec<u32> =
        ctx.h_star().elements().iter().map(|e| e.lambda).filter(|&l| (l as i64) <= lambda).collect();
    LinearCode::from_monomials(ctx, ls, Descriptor::OnePoint(lambda))
}

/// `Ẽ(δ)`: monomials with `σ(λ) ≥ δ`.
pub fn improved_primary(ctx: &CurveContext, delta: u32) -> Result<LinearCode, CodeError> {
    let max = ctx.n() as u32;
    if delta == 0 || delta > max {
        return Err(CodeError::DeltaOutOfRange { delta, max });
    }
    let ls = ctx.h_star().elements().iter().filter(|e| e.sigma >= delta).map(|e| e.lambda).collect();
    Ok(LinearCode::from_monomials(ctx, ls, Descriptor::ImprovedPrimary(delta)))
}

/// `C̃(δ)^⊥` as a span: monomials with `μ(λ) < δ`.
pub fn improved_dual_perp(ctx: &CurveContext, delta: u32) -> Result<LinearCode, CodeError> {
    let max = ctx.n() as u32 + 1;
    if delta == 0 || delta > max {
        return Err(CodeError::DeltaOutOfRange { delta, max });
    }
    let ls = ctx.h_star().elements().iter().filter(|e| e.mu < delta).map(|e| e.lambda).collect();
    Ok(LinearCode::from_monomials(ctx, ls, Descriptor::ImprovedDualPerpSpan(delta)))
}

/// `C̃(δ)`, the improved dual code.
pub fn improved_dual(ctx: &CurveContext, delta: u32) -> Result<LinearCode, CodeError> {
    Ok(dual(&improved_dual_perp(ctx, delta)?))
}

/// Dual under the standard inner product.
pub fn dual(code: &LinearCode) -> LinearCode {
    let ns = code.canonical.nullspace(&code.field);
    let descriptor = match &code.descriptor {
        Descriptor::DualOf(inner) => (**inner).clone(),
        d => Descriptor::DualOf(Box::new(d.clone())),
    };
    LinearCode::from_independent_rows(code.q, Arc::clone(&code.field), ns, None, descriptor)
}

/// Exact minimum distance by projective enumeration.
pub fn min_distance(code: &LinearCode, opts: DistanceOptions) -> Result<DistanceReport, CodeError> {
    let res = distance::min_weight_outside(&code.field, &code.canonical, code.k(), opts)
        .map_err(|required| CodeError::BudgetExceeded { required, budget: opts.budget })?;
    res.ok_or_else(|| CodeError::Parse("the zero code has no minimum distance".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Formula,
    BruteForce,
    Padded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DistanceValue {
    pub value: u32,
    pub provenance: Provenance,
}

impl DistanceValue {
    pub fn formula(value: u32) -> Self {
        DistanceValue { value, provenance: Provenance::Formula }
    }

    pub fn brute_force(value: u32) -> Self {
        DistanceValue { value, provenance: Provenance::BruteForce }
    }
}

/// `C2 ⊊ C1` with relative distance data.
#[derive(Debug, Clone)]
pub struct NestedPair {
    pub c1: LinearCode,
    pub c2: LinearCode,
    pub d_rel: Option<DistanceValue>,
    pub d_rel_dual: Option<DistanceValue>,
}

pub fn make_pair(c1: LinearCode, c2: LinearCode) -> Result<NestedPair, CodeError> {
    if !c1.compatible(&c2) {
        return Err(CodeError::Incompatible);
    }
    if !c1.contains_code(&c2) {
        return Err(CodeError::NotNested);
    }
    if c1.k() == c2.k() {
        return Err(CodeError::ZeroCodimension);
    }
    Ok(NestedPair { c1, c2, d_rel: None, d_rel_dual: None })
}

impl NestedPair {
    pub fn n(&self) -> usize {
        self.c1.n()
    }

    pub fn codimension(&self) -> usize {
        self.c1.k() - self.c2.k()
    }

    /// Rows of `C1`, in its construction order, that extend a basis of `C2`
    /// to a basis of `C1`.
    pub fn extension_rows(&self) -> Matrix {
        let f = &*self.c1.field;
        let mut red = Reducer::new(f);
        for r in self.c2.rows.iter_rows() {
            red.insert(r);
        }
        let ext: Vec<Vec<u16>> =
            self.c1.rows.iter_rows().filter(|r| red.insert(r)).map(<[u16]>::to_vec).collect();
        Matrix::from_rows(self.n(), ext)
    }

    /// `(C1^⊥ ⊊ C2^⊥)` as a pair `(C2^⊥, C1^⊥)`.
    pub fn dual_pair(&self) -> NestedPair {
        NestedPair { c1: dual(&self.c2), c2: dual(&self.c1), d_rel: self.d_rel_dual, d_rel_dual: self.d_rel }
    }
}

/// `min { w(c) : c ∈ C1 \ C2 }` by enumeration.
pub fn relative_distance(pair: &NestedPair, opts: DistanceOptions) -> Result<DistanceReport, CodeError> {
    let basis = pair.extension_rows().stack(pair.c2.generator());
    let ell = pair.codimension();
    let res = distance::min_weight_outside(pair.c1.field(), &basis, ell, opts)
        .map_err(|required| CodeError::BudgetExceeded { required, budget: opts.budget })?;
    Ok(res.expect("codimension is at least 1"))
}

/// `d(C2^⊥, C1^⊥)` by enumeration.
pub fn relative_distance_dual(pair: &NestedPair, opts: DistanceOptions) -> Result<DistanceReport, CodeError> {
    relative_distance(&pair.dual_pair(), opts)
}
