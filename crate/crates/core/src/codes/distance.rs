//! Exhaustive minimum and relative minimum distance.
//!
//! Messages are enumerated projectively: the first nonzero coordinate among
//! the leading `ell` ("extension") coordinates is fixed to 1 and the later
//! coordinates run over the whole field. Within a chunk the free
//! coordinates are walked in a modular p-ary Gray code on their base-p
//! digits, so each step adds one precomputed vector `x^e · row` to the
//! running codeword and updates its weight in place.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::gfield::FieldSpec;
use crate::linalg::Matrix;

/// Default number of projective message visits allowed per search.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceOptions {
    pub budget: u64,
    /// Stop as soon as a word of at most this weight is found. Only sound
    /// when the value is a proven lower bound.
    pub stop_at: Option<u32>,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions { budget: DEFAULT_BUDGET, stop_at: None }
    }
}

impl DistanceOptions {
    pub fn with_budget(budget: u64) -> Self {
        DistanceOptions { budget, stop_at: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: u32,
    /// A codeword attaining the distance.
    pub witness: Vec<u16>,
    pub visits: u128,
    pub stopped_early: bool,
}

/// Projective message count for a basis with `k` rows, `ell` of which are
/// leading extension rows.
pub fn work_required(order: u32, k: usize, ell: usize) -> u128 {
    (0..ell).map(|lead| (order as u128).pow((k - lead - 1) as u32)).sum()
}

struct Chunk {
    lead: usize,
    /// value of the first free coordinate, if there is one
    first: Option<u16>,
}

struct ChunkResult {
    weight: u32,
    witness: Vec<u16>,
    visits: u128,
}

fn weight(v: &[u16]) -> u32 {
    v.iter().filter(|&&x| x != 0).count() as u32
}

/// Minimum weight over the words whose coordinates on the first `ell` rows
/// of `basis` are not all zero. `None` when `ell == 0`.
pub(crate) fn min_weight_outside(
    f: &FieldSpec,
    basis: &Matrix,
    ell: usize,
    opts: DistanceOptions,
) -> Result<Option<DistanceReport>, u128> {
    let k = basis.rows();
    assert!(ell <= k);
    if ell == 0 {
        return Ok(None);
    }
    let required = work_required(f.order(), k, ell);
    if required > opts.budget as u128 {
        return Err(required);
    }

    let p = f.characteristic();
    let m = f.degree() as usize;
    // additive basis of the field over GF(p): indices p^e
    let unit: Vec<u16> = (0..m).map(|e| p.pow(e as u32) as u16).collect();
    let scale = |c: u16, row: &[u16]| -> Vec<u16> { row.iter().map(|&x| f.mul(c, x)).collect() };

    let mut chunks = Vec::new();
    for lead in 0..ell {
        if lead + 1 < k {
            chunks.extend((0..f.order()).map(|v| Chunk { lead, first: Some(v as u16) }));
        } else {
            chunks.push(Chunk { lead, first: None });
        }
    }

    let done = AtomicBool::new(false);
    let results: Vec<ChunkResult> = chunks
        .par_iter()
        .map(|chunk| {
            if done.load(Ordering::Relaxed) {
                return None;
            }
            let mut cw = basis.row(chunk.lead).to_vec();
            let mut free_start = chunk.lead + 1;
            if let Some(v) = chunk.first {
                let r = scale(v, basis.row(chunk.lead + 1));
                for (x, y) in cw.iter_mut().zip(&r) {
                    *x = f.add(*x, *y);
                }
                free_start += 1;
            }
            let incs: Vec<Vec<u16>> = (free_start..k)
                .flat_map(|r| unit.iter().map(move |&u| (u, r)))
                .map(|(u, r)| scale(u, basis.row(r)))
                .collect();
            let res = gray_walk(f, cw, &incs, p, opts.stop_at, &done);
            if let Some(t) = opts.stop_at {
                if res.weight <= t {
                    done.store(true, Ordering::Relaxed);
                }
            }
            Some(res)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    let stopped_early = results.len() < chunks.len()
        || results.iter().map(|r| r.visits).sum::<u128>() < required;
    let visits = results.iter().map(|r| r.visits).sum();
    let best = results
        .into_iter()
        .min_by_key(|r| r.weight)
        .expect("at least one chunk runs");
    Ok(Some(DistanceReport { distance: best.weight, witness: best.witness, visits, stopped_early }))
}

fn gray_walk(
    f: &FieldSpec,
    mut cw: Vec<u16>,
    incs: &[Vec<u16>],
    p: u32,
    stop_at: Option<u32>,
    done: &AtomicBool,
) -> ChunkResult {
    let mut w = weight(&cw);
    let mut best = w;
    let mut witness = cw.clone();
    let mut visits: u128 = 1;
    let mut counter = vec![0u32; incs.len()];
    let reached = |w: u32| stop_at.is_some_and(|t| w <= t);
    if reached(best) {
        return ChunkResult { weight: best, witness, visits };
    }
    loop {
        let mut j = 0;
        while j < counter.len() && counter[j] == p - 1 {
            counter[j] = 0;
            j += 1;
        }
        if j == counter.len() {
            break;
        }
        counter[j] += 1;
        for (x, &d) in cw.iter_mut().zip(&incs[j]) {
            if d != 0 {
                let before = *x != 0;
                *x = f.add(*x, d);
                let after = *x != 0;
                if before != after {
                    if after {
                        w += 1;
                    } else {
                        w -= 1;
                    }
                }
            }
        }
        visits += 1;
        if w < best {
            best = w;
            witness.copy_from_slice(&cw);
            if reached(best) {
                break;
            }
        }
        if stop_at.is_some() && visits & 0xfff == 0 && done.load(Ordering::Relaxed) {
            break;
        }
    }
    ChunkResult { weight: best, witness, visits }
}
