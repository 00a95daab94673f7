//! Closed-form bounds on improved Hermitian codes: integer-point counts,
//! dimension bounds, the largest `δ2` with `C̃(δ2)^⊥ ⊆ Ẽ(δ1)`, and
//! codimension bounds for the resulting pairs. Each formula sits next to the
//! exact count it bounds.

use serde::Serialize;
use thiserror::Error;

use crate::interval::{self, IntervalError};
use crate::semigroup::{self, HStar, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error("designed distance {delta} outside {min}..={max}")]
    DeltaOutOfRange { delta: u32, min: u32, max: u32 },
    #[error("{delta} is not a designed distance for q = {q}")]
    NotAchievableDelta { q: u32, delta: u32 },
    #[error("C̃({delta2})^⊥ is not contained in Ẽ({delta1}); the largest admissible δ2 is {max}")]
    InclusionViolated { delta1: u32, delta2: u32, max: u32 },
}

fn ln_term(delta: u32, num: i64, den: i64) -> Result<i64, AnalysisError> {
    Ok(interval::floor_delta_plus_delta_ln(delta as i64, num, den)?)
}

/// `⌊δ + δ ln δ⌋`.
fn small_term(delta: u32) -> Result<i64, AnalysisError> {
    ln_term(delta, delta as i64, 1)
}

/// `⌊δ + δ ln(q²/δ)⌋`.
fn box_term(q: u32, delta: u32) -> Result<i64, AnalysisError> {
    ln_term(delta, (q * q) as i64, delta as i64)
}

/// `Σ_{s=0}^{c} (s+1)`.
fn triangle(c: i64) -> i64 {
    if c < 0 {
        0
    } else {
        (c + 1) * (c + 2) / 2
    }
}

/// `x = aq + b(q+1)` with `0 ≤ b < q`.
fn split(q: u32, x: i64) -> (i64, i64) {
    let q = q as i64;
    let b = x.rem_euclid(q);
    (x.div_euclid(q) - b, b)
}

/// Lower bound on the number of integer points `(x, y)` in
/// `{q²−q..q²−1} × {0..q−1}` with `(q²−x)(q−y) ≥ δ`.
pub fn integer_point_bound(q: u32, delta: u32) -> Result<i64, AnalysisError> {
    semigroup::check_q(q)?;
    if delta == 0 || delta > q * q {
        return Err(AnalysisError::DeltaOutOfRange { delta, min: 1, max: q * q });
    }
    let qq = (q * q) as i64;
    if delta < q {
        Ok(qq - small_term(delta)?)
    } else {
        Ok(qq - box_term(q, delta)?)
    }
}

/// `#{λ ∈ H*(Q) : σ(λ) ≥ δ}`.
pub fn dim_improved_exact(q: u32, delta: u32) -> Result<u32, AnalysisError> {
    let h = semigroup::h_star(q)?;
    check_range(&h, delta, 1)?;
    Ok(h.count_sigma_at_least(delta) as u32)
}

fn check_range(h: &HStar, delta: u32, min: u32) -> Result<(), AnalysisError> {
    let max = h.n();
    if delta < min || delta > max {
        return Err(AnalysisError::DeltaOutOfRange { delta, min, max });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DimRule {
    #[serde(rename = "small")]
    SmallDelta,
    #[serde(rename = "mid-a-positive")]
    MidAPositive,
    #[serde(rename = "mid-a-nonpositive")]
    MidANonpositive,
    #[serde(rename = "generic")]
    Generic,
    #[serde(rename = "high")]
    HighDelta,
}

impl DimRule {
    pub fn label(self) -> &'static str {
        match self {
            DimRule::SmallDelta => "small",
            DimRule::MidAPositive => "mid-a-positive",
            DimRule::MidANonpositive => "mid-a-nonpositive",
            DimRule::Generic => "generic",
            DimRule::HighDelta => "high",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimBoundResult {
    pub requested: u32,
    /// `requested` rounded up to a designed distance.
    pub delta: u32,
    pub bound: i64,
    pub exact: u32,
    pub rule: DimRule,
    pub decomposition: Option<(i64, i64)>,
    pub vacuous: bool,
}

struct DimParts {
    bound: i64,
    rule: DimRule,
    decomposition: Option<(i64, i64)>,
}

fn dim_parts(q: u32, delta: u32) -> Result<DimParts, AnalysisError> {
    let (qi, n) = (q as i64, (q as i64).pow(3));
    let g = qi * (qi - 1) / 2;
    let d = delta as i64;
    if d <= qi {
        return Ok(DimParts { bound: n - small_term(delta)?, rule: DimRule::SmallDelta, decomposition: None });
    }
    if d <= qi * qi - qi {
        let (a, b) = split(q, qi * qi - d);
        let bound = n - d - g + 1 - triangle(a + b) + a.max(0) + qi * qi - box_term(q, delta)?;
        let rule = if a > 0 { DimRule::MidAPositive } else { DimRule::MidANonpositive };
        return Ok(DimParts { bound, rule, decomposition: Some((a, b)) });
    }
    if d < n - 2 * g + 2 {
        return Ok(DimParts { bound: n - g + 1 - d, rule: DimRule::Generic, decomposition: None });
    }
    let (a, b) = split(q, n - d);
    Ok(DimParts {
        bound: triangle(a + b) - a.max(0),
        rule: DimRule::HighDelta,
        decomposition: Some((a, b)),
    })
}

/// Dimension bound for `Ẽ(δ)`, after rounding δ up to a designed distance.
pub fn dim_bound(q: u32, delta: u32) -> Result<DimBoundResult, AnalysisError> {
    let h = semigroup::h_star(q)?;
    check_range(&h, delta, 1)?;
    let rounded = h.round_up_achievable(delta).expect("σ(0) = q³ is achievable");
    let parts = dim_parts(q, rounded)?;
    Ok(DimBoundResult {
        requested: delta,
        delta: rounded,
        bound: parts.bound,
        exact: h.count_sigma_at_least(rounded) as u32,
        rule: parts.rule,
        decomposition: parts.decomposition,
        vacuous: parts.bound <= 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InclusionRule {
    /// `δ1 ≤ q`
    Small,
    /// `q < δ1 ≤ q² − q`
    Lower,
    /// `q² − q < δ1 ≤ q³ − 2q² + 2q`
    Middle,
    /// `q³ − 2q² + 2q < δ1 ≤ q³ − q²`
    Upper,
    /// `δ1 > q³ − q²`
    Top,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionResult {
    pub delta1: u32,
    pub delta2_max_formula: u32,
    pub delta2_max_oracle: Option<u32>,
    pub rule: InclusionRule,
    pub case: &'static str,
    pub decomposition: Option<(u32, u32)>,
}

fn require_achievable(h: &HStar, delta: u32) -> Result<(), AnalysisError> {
    if h.is_achievable(delta) {
        Ok(())
    } else {
        Err(AnalysisError::NotAchievableDelta { q: h.q(), delta })
    }
}

/// Largest `δ2` with `C̃(δ2)^⊥ ⊆ Ẽ(δ1)`, by closed formula.
///
/// The ranges for the two left-hand formulas share `δ1 = q³ − q²`; that
/// value is handled by the `q³−2q²+2q < δ1 ≤ q³−q²` formula, which is the
/// one the definitional count agrees with.
pub fn delta2_max(q: u32, delta1: u32) -> Result<InclusionResult, AnalysisError> {
    let h = semigroup::h_star(q)?;
    check_range(&h, delta1, 2)?;
    require_achievable(&h, delta1)?;
    let n = q.pow(3);
    let qq = q * q;
    let (value, rule, case, decomposition) = if delta1 <= q {
        (n - (delta1 - 2) * (q + 1), InclusionRule::Small, "", None)
    } else if delta1 <= qq - q {
        let (a, b) = ((delta1 - q - 1) / q, (delta1 - q - 1) % q);
        if b <= a {
            (n - qq + q - delta1 + 2, InclusionRule::Lower, "b<=a", Some((a, b)))
        } else {
            (n - qq - a * (q + 1), InclusionRule::Lower, "b>a", Some((a, b)))
        }
    } else if delta1 <= n - 2 * qq + 2 * q {
        (n - qq + q + 2 - delta1, InclusionRule::Middle, "", None)
    } else if delta1 <= n - qq {
        let (a, b) = ((n - qq - delta1) / q, (n - qq - delta1) % q);
        if b < a {
            ((a + 1) * q + b + 2, InclusionRule::Upper, "b<a", Some((a, b)))
        } else if b < q - 1 {
            ((a + 2) * q, InclusionRule::Upper, "a<=b<q-1", Some((a, b)))
        } else {
            ((a + 2) * q + 1, InclusionRule::Upper, "b=q-1", Some((a, b)))
        }
    } else {
        let (a, b) = ((n - delta1) / q, (n - delta1) % q);
        if b < a {
            (a + 1, InclusionRule::Top, "b<a", Some((a, b)))
        } else {
            (a + 2, InclusionRule::Top, "b>=a", Some((a, b)))
        }
    };
    Ok(InclusionResult { delta1, delta2_max_formula: value, delta2_max_oracle: None, rule, case, decomposition })
}

/// `min{μ(λ) : σ(λ) < δ1}`, or `q³ + 1` when no λ qualifies.
pub fn delta2_max_oracle(q: u32, delta1: u32) -> Result<u32, AnalysisError> {
    let h = semigroup::h_star(q)?;
    Ok(oracle_from(&h, delta1))
}

fn oracle_from(h: &HStar, delta1: u32) -> u32 {
    h.elements().iter().filter(|e| e.sigma < delta1).map(|e| e.mu).min().unwrap_or(h.n() + 1)
}

/// [`delta2_max`] with the oracle value filled in.
pub fn delta2_max_checked(q: u32, delta1: u32) -> Result<InclusionResult, AnalysisError> {
    let mut r = delta2_max(q, delta1)?;
    r.delta2_max_oracle = Some(delta2_max_oracle(q, delta1)?);
    Ok(r)
}

/// `∀λ: σ(λ) < δ1 → μ(λ) ≥ δ2`.
pub fn inclusion_holds(h: &HStar, delta1: u32, delta2: u32) -> bool {
    h.elements().iter().all(|e| e.sigma >= delta1 || e.mu >= delta2)
}

/// `∀λ: μ(λ) < δ1 → σ(λ) ≥ δ2`.
pub fn inclusion_holds_mirrored(h: &HStar, delta1: u32, delta2: u32) -> bool {
    h.elements().iter().all(|e| e.mu >= delta1 || e.sigma >= delta2)
}

/// Exact codimension of `C̃(δ2)^⊥ ⊆ Ẽ(δ1)` from σ/μ counts (may be ≤ 0
/// when the inclusion fails).
pub fn codim_exact(h: &HStar, delta1: u32, delta2: u32) -> i64 {
    h.count_sigma_at_least(delta1) as i64 - h.count_mu_below(delta2) as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimBoundResult {
    pub delta1: u32,
    pub delta2: u32,
    pub bound: i64,
    pub exact: i64,
    pub rule: String,
    pub vacuous: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Regime {
    Small,
    Box,
    Generic,
    High,
}

fn regime(q: u32, delta: u32) -> Regime {
    let (q, d) = (q as i64, delta as i64);
    let n = q.pow(3);
    let g = q * (q - 1) / 2;
    if d <= q {
        Regime::Small
    } else if d <= q * q - q {
        Regime::Box
    } else if d < n - 2 * g + 2 {
        Regime::Generic
    } else {
        Regime::High
    }
}

/// Lower bound on the codimension of `C̃(δ2)^⊥ ⊆ Ẽ(δ1)`.
pub fn codim_bound(q: u32, delta1: u32, delta2: u32) -> Result<CodimBoundResult, AnalysisError> {
    let h = semigroup::h_star(q)?;
    check_range(&h, delta1, 1)?;
    check_range(&h, delta2, 1)?;
    require_achievable(&h, delta1)?;
    require_achievable(&h, delta2)?;
    let max = if delta1 >= 2 { delta2_max(q, delta1)?.delta2_max_formula } else { h.n() + 1 };
    if delta2 > max {
        return Err(AnalysisError::InclusionViolated { delta1, delta2, max });
    }

    let (qi, n) = (q as i64, (q as i64).pow(3));
    let g = qi * (qi - 1) / 2;
    let (d1, d2) = (delta1 as i64, delta2 as i64);
    let box_parts = |delta: u32| -> Result<(i64, i64, i64), AnalysisError> {
        let (a, b) = split(q, qi * qi - delta as i64);
        Ok((triangle(a + b), a.max(0), box_term(q, delta)?))
    };
    let high_parts = |delta: u32| {
        let (a, b) = split(q, n - delta as i64);
        (triangle(a + b), a.max(0))
    };

    use Regime::*;
    let literal: Option<(i64, &str)> = match (regime(q, delta1), regime(q, delta2)) {
        (Small, Small) => Some((n - small_term(delta1)? - small_term(delta2)?, "small-small")),
        (Small, Box) => {
            let (t2, m2, l2) = box_parts(delta2)?;
            Some((n + qi * qi - g + 1 - small_term(delta1)? - d2 - t2 - l2 + m2, "small-box"))
        }
        (Small, Generic) => Some((n - g + 1 - small_term(delta1)? - d2, "small-generic")),
        (Small, High) => {
            let (t2, m2) = high_parts(delta2);
            Some((t2 - small_term(delta1)? - m2, "small-high"))
        }
        (Box, Small) => {
            let (t1, m1, l1) = box_parts(delta1)?;
            Some((n + qi * qi - g + 1 - d1 - t1 + m1 - l1 - small_term(delta2)?, "box-small"))
        }
        (Box, Box) => {
            let (t1, m1, l1) = box_parts(delta1)?;
            let (t2, m2, l2) = box_parts(delta2)?;
            Some((n + 2 * qi * qi - 2 * g + 2 - (d1 + d2) - t1 + m1 - t2 + m2 - l1 - l2, "box-box"))
        }
        (Box, Generic) => {
            let (t1, m1, l1) = box_parts(delta1)?;
            Some((n + qi * qi - 2 * g + 2 - (d1 + d2) - t1 - l1 + m1, "box-generic"))
        }
        (Generic, Small) => Some((n - g + 1 - d1 - small_term(delta2)?, "generic-small")),
        (Generic, Box) => {
            let (t2, m2, l2) = box_parts(delta2)?;
            Some((n + qi * qi - 2 * g + 2 - (d1 + d2) - t2 - l2 + m2, "generic-box"))
        }
        (Generic, Generic) => Some((n - d1 - d2 - 2 * g + 2, "generic-generic")),
        (High, Small) => {
            let (t1, m1) = high_parts(delta1);
            Some((t1 - m1 - small_term(delta2)?, "high-small"))
        }
        _ => None,
    };
    let (bound, rule) = match literal {
        Some((b, r)) => (b, r.to_string()),
        None => {
            let b = dim_parts(q, delta1)?.bound + dim_parts(q, delta2)?.bound - n;
            (b, "composed".to_string())
        }
    };
    Ok(CodimBoundResult {
        delta1,
        delta2,
        bound,
        exact: codim_exact(&h, delta1, delta2),
        rule,
        vacuous: bound <= 0,
    })
}
