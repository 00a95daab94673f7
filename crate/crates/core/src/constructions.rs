//! Nested pair families and the application parameters derived from them:
//! improved pairs `(Ẽ(δ1), C̃(δ2)^⊥)`, small-codimension one-point pairs near
//! the two corners of `H*(Q)`, CSS quantum code parameters, ramp secret
//! sharing parameters, and parameter formulas for generalized Reed-Solomon
//! and Cartesian product constructions used for comparison.
//!
//! Code parameters are written `[[n, ℓ, d_z/d_x]]_Q` where `Q` is the
//! alphabet size.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{self, AnalysisError};
use crate::codes::{self, CodeError, DistanceValue, NestedPair, Provenance};
use crate::curve::CurveContext;
use crate::interval::{self, Interval, IntervalError};
use crate::semigroup::{self, HStar, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error("indices must satisfy 0 <= i <= j < q; got i = {i}, j = {j}, q = {q}")]
    BadIndices { i: u32, j: u32, q: u32 },
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("ℓ = {ell} must be even exactly when m = {m} is odd")]
    ParityViolated { m: u32, ell: u32 },
    #[error("cannot pad length {n} down to {target}")]
    ShrinkNotAllowed { n: u32, target: u32 },
    #[error("pair has no relative distance data")]
    MissingDistance,
    #[error("no pair satisfies the constraints")]
    NoFeasiblePair,
}

fn violated(what: impl Into<String>) -> ConstructionError {
    ConstructionError::ConstraintViolated(what.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamProvenance {
    pub n: Provenance,
    pub ell: Provenance,
    pub d_z: Provenance,
    pub d_x: Provenance,
}

impl ParamProvenance {
    fn formula() -> Self {
        ParamProvenance {
            n: Provenance::Formula,
            ell: Provenance::Formula,
            d_z: Provenance::Formula,
            d_x: Provenance::Formula,
        }
    }
}

/// Asymmetric quantum code parameters `[[n, ℓ, d_z/d_x]]_alphabet`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AQCParams {
    pub n: u32,
    pub ell: u32,
    pub d_z: u32,
    pub d_x: u32,
    pub alphabet: u32,
    /// `ell` is a lower bound rather than an exact dimension.
    pub ell_at_least: bool,
    /// Whether `d_z > d(C1)` or `d_x > d(C2^⊥)`; `None` when unknown.
    pub impure: Option<bool>,
    pub provenance: ParamProvenance,
}

impl AQCParams {
    pub fn tuple(&self) -> (u32, u32, u32, u32) {
        (self.n, self.ell, self.d_z, self.d_x)
    }

    /// The same code with the roles of the two distances exchanged.
    pub fn interchanged(&self) -> AQCParams {
        let mut p = *self;
        std::mem::swap(&mut p.d_z, &mut p.d_x);
        std::mem::swap(&mut p.provenance.d_z, &mut p.provenance.d_x);
        p
    }

    /// Marks impurity given the minimum distances of `C1` and `C2^⊥`.
    pub fn with_code_distances(mut self, d_c1: Option<u32>, d_c2_dual: Option<u32>) -> AQCParams {
        let z = d_c1.map(|d| self.d_z > d);
        let x = d_c2_dual.map(|d| self.d_x > d);
        self.impure = match (z, x) {
            (Some(true), _) | (_, Some(true)) => Some(true),
            (Some(false), Some(false)) => Some(false),
            _ => None,
        };
        self
    }
}

impl fmt::Display for AQCParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ge = if self.ell_at_least { ">=" } else { "" };
        write!(f, "[[{},{}{},{}/{}]]_{}", self.n, ge, self.ell, self.d_z, self.d_x, self.alphabet)
    }
}

/// Ramp secret sharing parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RampParams {
    pub n: u32,
    pub ell: u32,
    /// Privacy number.
    pub t: u32,
    /// Reconstruction number.
    pub r: u32,
    pub provenance_t: Provenance,
    pub provenance_r: Provenance,
}

/// Where a pair comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Origin {
    Improved { delta1: u32, delta2: u32 },
    Lower { i: u32, j: u32 },
    Upper { i: u32, j: u32 },
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Improved { delta1, delta2 } => write!(f, "improved({delta1},{delta2})"),
            Origin::Lower { i, j } => write!(f, "lower({i},{j})"),
            Origin::Upper { i, j } => write!(f, "upper({i},{j})"),
        }
    }
}

/// A constructed pair with the minimum distances of `C1` and `C2^⊥` as far
/// as they are known from the order bound.
#[derive(Debug, Clone)]
pub struct Construction {
    pub origin: Origin,
    pub pair: NestedPair,
    pub d_c1: Option<u32>,
    pub d_c2_dual: Option<u32>,
}

impl Construction {
    pub fn css_params(&self) -> Result<AQCParams, ConstructionError> {
        Ok(css_params(&self.pair)?.with_code_distances(self.d_c1, self.d_c2_dual))
    }

    pub fn ramp_params(&self) -> Result<RampParams, ConstructionError> {
        ramp_params(&self.pair)
    }
}

/// `min σ(λ')` over `λ' ≤ λ`: the minimum distance of `C_L(λQ)`.
pub fn onepoint_distance(h: &HStar, lambda: i64) -> Option<u32> {
    h.elements().iter().filter(|e| (e.lambda as i64) <= lambda).map(|e| e.sigma).min()
}

/// `min μ(λ')` over `λ' > λ`: the minimum distance of `C_L(λQ)^⊥`.
pub fn onepoint_dual_distance(h: &HStar, lambda: i64) -> Option<u32> {
    h.elements().iter().filter(|e| (e.lambda as i64) > lambda).map(|e| e.mu).min()
}

fn inclusion_max(h: &HStar, delta1: u32) -> Result<u32, AnalysisError> {
    if delta1 >= 2 {
        Ok(analysis::delta2_max(h.q(), delta1)?.delta2_max_formula)
    } else {
        Ok(h.n() + 1)
    }
}

fn check_improved(h: &HStar, delta1: u32, delta2: u32) -> Result<(), ConstructionError> {
    for d in [delta1, delta2] {
        if d == 0 || d > h.n() {
            return Err(AnalysisError::DeltaOutOfRange { delta: d, min: 1, max: h.n() }.into());
        }
        if !h.is_achievable(d) {
            return Err(AnalysisError::NotAchievableDelta { q: h.q(), delta: d }.into());
        }
    }
    let max = inclusion_max(h, delta1)?;
    if delta2 > max {
        return Err(AnalysisError::InclusionViolated { delta1, delta2, max }.into());
    }
    Ok(())
}

/// `(Ẽ(δ1), C̃(δ2)^⊥)` with relative distances `δ1` and `δ2`.
pub fn improved_pair(ctx: &CurveContext, delta1: u32, delta2: u32) -> Result<Construction, ConstructionError> {
    check_improved(ctx.h_star(), delta1, delta2)?;
    let c1 = codes::improved_primary(ctx, delta1)?;
    let c2 = codes::improved_dual_perp(ctx, delta2)?;
    let mut pair = codes::make_pair(c1, c2)?;
    pair.d_rel = Some(DistanceValue::formula(delta1));
    pair.d_rel_dual = Some(DistanceValue::formula(delta2));
    Ok(Construction {
        origin: Origin::Improved { delta1, delta2 },
        pair,
        d_c1: Some(delta1),
        d_c2_dual: Some(delta2),
    })
}

fn check_indices(q: u32, i: u32, j: u32) -> Result<(), ConstructionError> {
    if i > j || j >= q {
        return Err(ConstructionError::BadIndices { i, j, q });
    }
    Ok(())
}

/// Pole orders `(λ1, λ2)` of the lower-corner pair.
pub fn lower_lambdas(q: u32, i: u32, j: u32) -> (i64, i64) {
    let (q, i, j) = (q as i64, i as i64, j as i64);
    (i * q + j * (q + 1), j * q + i * (q + 1) - 1)
}

/// Pole orders `(λ1, λ2)` of the upper-corner pair, the image of the lower
/// pair under duality.
pub fn upper_lambdas(q: u32, i: u32, j: u32) -> (i64, i64) {
    let (qq, q, i, j) = ((q * q) as i64, q as i64, i as i64, j as i64);
    ((qq - 1 - j) * q + (q - 1 - i) * (q + 1), (qq - 1 - i) * q + (q - 1 - j) * (q + 1) - 1)
}

fn onepoint_construction(
    ctx: &CurveContext,
    origin: Origin,
    (l1, l2): (i64, i64),
    d_rel: u32,
    d_rel_dual: u32,
) -> Result<Construction, ConstructionError> {
    let h = ctx.h_star();
    let c1 = codes::onepoint_code(ctx, l1);
    let c2 = codes::onepoint_code(ctx, l2);
    let mut pair = codes::make_pair(c1, c2)?;
    pair.d_rel = Some(DistanceValue::formula(d_rel));
    pair.d_rel_dual = Some(DistanceValue::formula(d_rel_dual));
    Ok(Construction {
        origin,
        pair,
        d_c1: onepoint_distance(h, l1),
        d_c2_dual: onepoint_dual_distance(h, l2),
    })
}

/// `(C_L(λ1 Q), C_L(λ2 Q))` with `λ1 = iq + j(q+1)`, `λ2 = jq + i(q+1) − 1`.
pub fn small_codim_pair_lower(ctx: &CurveContext, i: u32, j: u32) -> Result<Construction, ConstructionError> {
    let q = ctx.q();
    check_indices(q, i, j)?;
    let (l1, l2) = lower_lambdas(q, i, j);
    let d_rel = q.pow(3) - l1 as u32;
    onepoint_construction(ctx, Origin::Lower { i, j }, (l1, l2), d_rel, (i + 1) * (j + 1))
}

pub fn small_codim_pair_upper(ctx: &CurveContext, i: u32, j: u32) -> Result<Construction, ConstructionError> {
    let q = ctx.q();
    check_indices(q, i, j)?;
    let d_rel_dual = q.pow(3) - i * q - j * (q + 1);
    onepoint_construction(ctx, Origin::Upper { i, j }, upper_lambdas(q, i, j), (i + 1) * (j + 1), d_rel_dual)
}

/// Whether the small-codimension pair's dual relative distance strictly
/// beats the minimum distance of `C2^⊥`.
pub fn small_codim_strict(q: u32, i: u32, j: u32) -> bool {
    i != 0 && j != q - 1
}

fn distances(pair: &NestedPair) -> Result<(DistanceValue, DistanceValue), ConstructionError> {
    match (pair.d_rel, pair.d_rel_dual) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(ConstructionError::MissingDistance),
    }
}

/// CSS parameters `[[n, dim C1 − dim C2, d(C1,C2)/d(C2^⊥,C1^⊥)]]`.
pub fn css_params(pair: &NestedPair) -> Result<AQCParams, ConstructionError> {
    let (z, x) = distances(pair)?;
    Ok(AQCParams {
        n: pair.n() as u32,
        ell: pair.codimension() as u32,
        d_z: z.value,
        d_x: x.value,
        alphabet: pair.c1.field().order(),
        ell_at_least: false,
        impure: None,
        provenance: ParamProvenance {
            n: Provenance::Formula,
            ell: Provenance::Formula,
            d_z: z.provenance,
            d_x: x.provenance,
        },
    })
}

/// `t = d(C2^⊥, C1^⊥) − 1`, `r = n − d(C1, C2) + 1`.
pub fn ramp_params(pair: &NestedPair) -> Result<RampParams, ConstructionError> {
    let (z, x) = distances(pair)?;
    let n = pair.n() as u32;
    Ok(RampParams {
        n,
        ell: pair.codimension() as u32,
        t: x.value - 1,
        r: n - z.value + 1,
        provenance_t: x.provenance,
        provenance_r: z.provenance,
    })
}

/// Generalized Reed-Solomon comparison codes over GF(q²):
/// `[[m1·m2, m1(2k − m2 + c), d/(d − c)]]` with `d = m2 − k + 1`.
pub fn grs_subfield_params(q: u32, m1: u32, m2: u32, k: u32, c: u32) -> Result<AQCParams, ConstructionError> {
    if m1 < 1 {
        return Err(violated("m1 >= 1"));
    }
    if c < 1 {
        return Err(violated("c >= 1"));
    }
    if k <= 1 {
        return Err(violated("1 < k"));
    }
    if k >= m2 {
        return Err(violated("k < m2"));
    }
    if m2 >= 2 * k + c {
        return Err(violated("m2 < 2k + c"));
    }
    let cap = (q as u128 * q as u128).checked_pow(m1);
    if cap.is_some_and(|cap| (2 * k + c) as u128 > cap) {
        return Err(violated("2k + c <= q^(2 m1)"));
    }
    let d = m2 - k + 1;
    if d <= c + 1 {
        return Err(violated(format!("d > c + 1 (d = {d}, c = {c})")));
    }
    if m2 <= c + 1 {
        return Err(violated("m2 > c + 1"));
    }
    Ok(AQCParams {
        n: m1 * m2,
        ell: m1 * (2 * k + c - m2),
        d_z: d,
        d_x: d - c,
        alphabet: q * q,
        ell_at_least: false,
        impure: None,
        provenance: ParamProvenance::formula(),
    })
}

fn checked_pow(s: u32, m: u32) -> Result<u64, ConstructionError> {
    (s as u64).checked_pow(m).filter(|&v| v <= u32::MAX as u64).ok_or_else(|| violated("s^m fits in 32 bits"))
}

/// Cartesian product codes over GF(q²) from a point set of size `s^m`:
/// `[[s^m, ℓ, δ1/δ2]]` with `ℓ` the ceiling of the footprint bound
/// `s^m − Σ_{t=1}^{m} (δ1 ln(s^m/δ1)^{t−1} + δ2 ln(s^m/δ2)^{t−1}) / (t−1)!`.
pub fn cartesian_params_footprint(
    q: u32,
    s: u32,
    m: u32,
    delta1: u32,
    delta2: u32,
) -> Result<AQCParams, ConstructionError> {
    if m < 2 {
        return Err(violated("m >= 2"));
    }
    if s < 2 || s > q * q {
        return Err(violated("2 <= s <= q^2"));
    }
    let n = checked_pow(s, m)?;
    if delta1 < 1 || delta1 as u64 > n {
        return Err(violated("1 <= δ1 <= s^m"));
    }
    if delta2 < 1 || delta2 as u64 > n {
        return Err(violated("1 <= δ2 <= s^m"));
    }
    // largest v < m with s^v <= δ1
    let v = (0..m).rev().find(|&v| (s as u64).pow(v) <= delta1 as u64).expect("s^0 = 1 <= δ1");
    let sv = (s as u64).pow(v) as i128;
    let scale = (s as i128).pow(m - v + 1);
    let cap = ((s as i128 + 1) * sv - delta1 as i128) * scale / sv;
    if delta2 as i128 > cap {
        return Err(violated(format!("δ2 <= {cap}")));
    }
    let n_i = n as i64;
    let ell = interval::ceil_of(|bits| {
        let mut acc = Interval::int(n_i, bits);
        let mut fact: i64 = 1;
        for t in 1..=m {
            if t > 1 {
                fact *= (t - 1) as i64;
            }
            for d in [delta1 as i64, delta2 as i64] {
                let term = Interval::ln_ratio(n_i, d, bits)?.pow(t - 1).mul_int(d).div_int(fact);
                acc = acc.sub(&term);
            }
        }
        Ok(acc)
    })?;
    if ell < 1 {
        return Err(violated(format!("dimension bound {ell} is not positive")));
    }
    Ok(AQCParams {
        n: n as u32,
        ell: ell as u32,
        d_z: delta1,
        d_x: delta2,
        alphabet: q * q,
        ell_at_least: true,
        impure: None,
        provenance: ParamProvenance::formula(),
    })
}

/// Cartesian product codes over GF(q²) of length `s²` with
/// `d_z = (2s − (m−ℓ+1))(2s − (m+ℓ−1))/4` and `d_x = (m−ℓ+3)(m+ℓ+1)/4`.
pub fn cartesian_params_explicit(
    q: u32,
    s: u32,
    m: u32,
    ell: u32,
    interchange: bool,
) -> Result<AQCParams, ConstructionError> {
    if s < 2 || s > q * q {
        return Err(violated("1 < s <= q^2"));
    }
    if m > s - 1 {
        return Err(violated("m <= s - 1"));
    }
    if ell < 1 || ell > m + 1 {
        return Err(violated("1 <= ℓ <= m + 1"));
    }
    if (ell % 2 == 0) != (m % 2 == 1) {
        return Err(ConstructionError::ParityViolated { m, ell });
    }
    let d_z = (2 * s - (m + 1 - ell)) * (2 * s - (m + ell - 1)) / 4;
    let d_x = (m + 3 - ell) * (m + ell + 1) / 4;
    let p = AQCParams {
        n: s * s,
        ell,
        d_z,
        d_x,
        alphabet: q * q,
        ell_at_least: false,
        impure: None,
        provenance: ParamProvenance::formula(),
    };
    Ok(if interchange { p.interchanged() } else { p })
}

/// Lower bound on `r − t` for linear ramp schemes over GF(q²) with `n` shares
/// and secrets of length `ℓ`: the best over `m < ℓ` of
/// `((Q^m − 1)(n + 2) + (Q^{m+1} − Q^m)(ℓ − 2m)) / (Q^{m+1} − 1)`, `Q = q²`,
/// rounded up.
pub fn threshold_gap_bound(q: u32, n: u32, ell: u32) -> u32 {
    let big_q = BigInt::from(q) * BigInt::from(q);
    let mut qm = BigInt::one();
    let mut best = BigInt::from(ell);
    for m in 0..ell {
        let qm1 = &qm * &big_q;
        let num: BigInt = (&qm - BigInt::one()) * BigInt::from(n + 2) + (&qm1 - &qm) * (BigInt::from(ell) - BigInt::from(2 * m));
        let den: BigInt = &qm1 - BigInt::one();
        let v = num.div_ceil(&den);
        if v > best {
            best = v;
        }
        // later terms only shrink once the second summand turns negative
        if 2 * m > ell && qm > BigInt::from(n + 2) {
            break;
        }
        qm = qm1;
    }
    best.to_u32().expect("bound is at most n + ℓ")
}

/// Zero-pads the code to a longer length; distances and dimension are
/// unchanged.
pub fn pad_to_length(params: &AQCParams, target: u32) -> Result<AQCParams, ConstructionError> {
    if target < params.n {
        return Err(ConstructionError::ShrinkNotAllowed { n: params.n, target });
    }
    let mut p = *params;
    if target > p.n {
        p.n = target;
        p.provenance.n = Provenance::Padded;
    }
    Ok(p)
}

/// A pair's parameters as used by the searches; `interchanged` swaps the
/// roles of `C1,C2` and `C2^⊥,C1^⊥`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub origin: Origin,
    pub interchanged: bool,
    pub ell: u32,
    pub d_z: u32,
    pub d_x: u32,
}

impl Candidate {
    fn swapped(self) -> Candidate {
        Candidate { interchanged: !self.interchanged, d_z: self.d_x, d_x: self.d_z, ..self }
    }

    pub fn label(&self) -> String {
        if self.interchanged {
            format!("{} interchanged", self.origin)
        } else {
            self.origin.to_string()
        }
    }

    /// The pair itself, with `C1,C2` replaced by `C2^⊥,C1^⊥` when interchanged.
    pub fn construct(&self, ctx: &CurveContext) -> Result<NestedPair, ConstructionError> {
        let c = match self.origin {
            Origin::Improved { delta1, delta2 } => improved_pair(ctx, delta1, delta2)?,
            Origin::Lower { i, j } => small_codim_pair_lower(ctx, i, j)?,
            Origin::Upper { i, j } => small_codim_pair_upper(ctx, i, j)?,
        };
        Ok(if self.interchanged { c.pair.dual_pair() } else { c.pair })
    }
}

/// Parameters of every pair in both families for one q, without building
/// any code.
pub fn all_candidates(q: u32) -> Result<Vec<Candidate>, ConstructionError> {
    let h = semigroup::h_star(q)?;
    let ds = h.achievable_distances();
    let improved: Vec<Candidate> = ds
        .par_iter()
        .map(|&d1| -> Result<Vec<Candidate>, ConstructionError> {
            let max = inclusion_max(&h, d1)?;
            Ok(ds
                .iter()
                .filter(|&&d2| d2 <= max)
                .filter_map(|&d2| {
                    let ell = analysis::codim_exact(&h, d1, d2);
                    (ell > 0).then_some(Candidate {
                        origin: Origin::Improved { delta1: d1, delta2: d2 },
                        interchanged: false,
                        ell: ell as u32,
                        d_z: d1,
                        d_x: d2,
                    })
                })
                .collect())
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut out = improved;
    let n = q.pow(3);
    for i in 0..q {
        for j in i..q {
            let ell = j - i + 1;
            let lower = Candidate {
                origin: Origin::Lower { i, j },
                interchanged: false,
                ell,
                d_z: n - (i * q + j * (q + 1)),
                d_x: (i + 1) * (j + 1),
            };
            let upper = Candidate {
                origin: Origin::Upper { i, j },
                interchanged: false,
                ell,
                d_z: (i + 1) * (j + 1),
                d_x: n - i * q - j * (q + 1),
            };
            out.extend([lower, lower.swapped(), upper, upper.swapped()]);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    MaximizeDz,
    MaximizeEll,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchConstraints {
    pub min_ell: u32,
    pub min_dz: u32,
    pub min_dx: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub candidate: Candidate,
    pub params: AQCParams,
}

fn rank_key(obj: Objective, c: &Candidate) -> (u32, u32, u32, Reverse<(Origin, bool)>) {
    let tail = Reverse((c.origin, c.interchanged));
    match obj {
        Objective::MaximizeDz => (c.d_z, c.ell, c.d_x, tail),
        Objective::MaximizeEll => (c.ell, c.d_z, c.d_x, tail),
    }
}

/// Best pair over both families. Pairs with a relative distance of 1 are
/// not considered.
pub fn best_pair_search(
    q: u32,
    objective: Objective,
    constraints: SearchConstraints,
) -> Result<SearchHit, ConstructionError> {
    best_pair_in(&all_candidates(q)?, q, objective, constraints)
}

/// [`best_pair_search`] over a precomputed candidate list.
pub fn best_pair_in(
    candidates: &[Candidate],
    q: u32,
    objective: Objective,
    constraints: SearchConstraints,
) -> Result<SearchHit, ConstructionError> {
    let best = candidates
        .iter()
        .filter(|c| c.d_z > 1 && c.d_x > 1)
        .filter(|c| c.ell >= constraints.min_ell && c.d_z >= constraints.min_dz && c.d_x >= constraints.min_dx)
        .max_by_key(|c| rank_key(objective, c))
        .ok_or(ConstructionError::NoFeasiblePair)?;
    Ok(SearchHit { candidate: *best, params: candidate_params(q, best) })
}

fn candidate_params(q: u32, c: &Candidate) -> AQCParams {
    AQCParams {
        n: q.pow(3),
        ell: c.ell,
        d_z: c.d_z,
        d_x: c.d_x,
        alphabet: q * q,
        ell_at_least: false,
        impure: None,
        provenance: ParamProvenance::formula(),
    }
}

/// Best reconstruction number for a given privacy requirement and secret
/// length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurvePoint {
    pub ell: u32,
    pub r: Option<u32>,
    pub t: Option<u32>,
    pub source: Option<String>,
    pub baseline_r: Option<u32>,
    pub baseline_t: Option<u32>,
    pub baseline_source: Option<String>,
    pub gap_bound: u32,
    /// `t_min + gap_bound`, the smallest `r` any linear scheme can have.
    pub r_lower_bound: u32,
}

/// A pair of one-point codes judged by the Goppa bound only:
/// `d(C1, C2) ≥ n − λ1` and `d(C2^⊥, C1^⊥) ≥ λ2 − 2g + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GoppaPair {
    pub lambda1: i64,
    pub lambda2: i64,
    pub ell: u32,
    pub d_z: u32,
    pub d_x: u32,
}

pub fn goppa_baseline_pairs(q: u32) -> Result<Vec<GoppaPair>, ConstructionError> {
    let h = semigroup::h_star(q)?;
    let n = h.n() as i64;
    let g = h.genus() as i64;
    let lambdas: Vec<i64> = h.elements().iter().map(|e| e.lambda as i64).collect();
    let mut out = Vec::new();
    for a in 0..lambdas.len() {
        let l1 = lambdas[a];
        for b in 0..=a {
            // b = 0 stands for the zero code
            let l2 = if b == 0 { -1 } else { lambdas[b - 1] };
            let ell = (a + 1 - b) as u32;
            let d_z = (n - l1).max(1) as u32;
            let d_x = (l2 - 2 * g + 2).max(1) as u32;
            out.push(GoppaPair { lambda1: l1, lambda2: l2, ell, d_z, d_x });
        }
    }
    Ok(out)
}

/// For each secret length, the smallest reconstruction number reachable
/// with privacy at least `t_min`. A pair of codimension above `ℓ` serves
/// length `ℓ` by enlarging `C2`, which can only raise both distances.
pub fn sss_curve(q: u32, t_min: u32) -> Result<Vec<CurvePoint>, ConstructionError> {
    let n = q.pow(3);
    let ours = all_candidates(q)?;
    let base = goppa_baseline_pairs(q)?;
    let mut rows = Vec::new();
    for ell in 1..=n {
        let pick = ours
            .iter()
            .filter(|c| c.ell >= ell && c.d_x > t_min)
            .map(|c| (n + 1 - c.d_z, c.d_x - 1, c.label()))
            .min();
        let pick_base = base
            .iter()
            .filter(|p| p.ell >= ell && p.d_x > t_min)
            .map(|p| (n + 1 - p.d_z, p.d_x - 1, format!("onepoint({},{})", p.lambda1, p.lambda2)))
            .min();
        if pick.is_none() && pick_base.is_none() {
            continue;
        }
        let gap = threshold_gap_bound(q, n, ell);
        let (r, t, source) = match pick {
            Some((r, t, s)) => (Some(r), Some(t), Some(s)),
            None => (None, None, None),
        };
        let (baseline_r, baseline_t, baseline_source) = match pick_base {
            Some((r, t, s)) => (Some(r), Some(t), Some(s)),
            None => (None, None, None),
        };
        rows.push(CurvePoint {
            ell,
            r,
            t,
            source,
            baseline_r,
            baseline_t,
            baseline_source,
            gap_bound: gap,
            r_lower_bound: t_min + gap,
        });
    }
    Ok(rows)
}
