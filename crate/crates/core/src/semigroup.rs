//! The Weierstrass semigroup `H(Q) = ⟨q, q+1⟩` of the Hermitian curve's point
//! at infinity, the set `H*(Q)` of pole orders where one-point codes grow,
//! and the order-bound functions σ and μ.
//!
//! Every `λ ∈ H*(Q)` is written uniquely as `λ = iq + j(q+1)` with
//! `0 ≤ i ≤ q²−1` and `0 ≤ j ≤ q−1`. The closed formulas for σ and μ live
//! next to literal definitional counts ("oracles") so the two can be
//! compared exhaustively.

use serde::Serialize;
use thiserror::Error;

/// Values of q for which the curve and codes are supported (q² ≤ 256).
pub const SUPPORTED_Q: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("unsupported q = {0}; expected one of {SUPPORTED_Q:?}")]
    UnsupportedQ(u32),
    #[error("{lambda} is not in H*(Q) for q = {q}")]
    NotInHStar { q: u32, lambda: i64 },
}

pub fn check_q(q: u32) -> Result<(), SemigroupError> {
    if SUPPORTED_Q.contains(&q) {
        Ok(())
    } else {
        Err(SemigroupError::UnsupportedQ(q))
    }
}

/// Membership in `⟨q, q+1⟩`: writing `x = cq + r` with `0 ≤ r < q`, `x` is
/// a non-gap iff `c ≥ r`.
pub fn h_of_q_contains(q: u32, x: i64) -> bool {
    if x < 0 {
        return false;
    }
    let (c, r) = (x / q as i64, x % q as i64);
    c >= r
}

/// The `(i, j)` coordinates of `λ` if `λ ∈ H*(Q)`.
pub fn decompose(q: u32, lambda: i64) -> Option<(u32, u32)> {
    if lambda < 0 {
        return None;
    }
    let q64 = q as i64;
    let j = lambda % q64;
    let i = lambda / q64 - j;
    (i >= 0 && i < q64 * q64).then_some((i as u32, j as u32))
}

pub fn compose(q: u32, i: u32, j: u32) -> u32 {
    i * q + j * (q + 1)
}

/// `(q²−1−i)q + (q−1−j)(q+1)`.
pub fn mirror(q: u32, lambda: i64) -> Result<u32, SemigroupError> {
    let (i, j) = decompose(q, lambda).ok_or(SemigroupError::NotInHStar { q, lambda })?;
    Ok(compose(q, q * q - 1 - i, q - 1 - j))
}

fn sigma_ij(q: u32, i: u32, j: u32) -> u32 {
    if i < q * q - q {
        q * q * q - compose(q, i, j)
    } else {
        (q * q - i) * (q - j)
    }
}

pub fn sigma_formula(q: u32, lambda: i64) -> Result<u32, SemigroupError> {
    let (i, j) = decompose(q, lambda).ok_or(SemigroupError::NotInHStar { q, lambda })?;
    Ok(sigma_ij(q, i, j))
}

pub fn mu_formula(q: u32, lambda: i64) -> Result<u32, SemigroupError> {
    let (i, j) = decompose(q, lambda).ok_or(SemigroupError::NotInHStar { q, lambda })?;
    Ok(sigma_ij(q, q * q - 1 - i, q - 1 - j))
}

/// `#{ η ∈ H*(Q) : η − λ ∈ H(Q) }`, counted literally.
pub fn sigma_oracle(q: u32, lambda: i64) -> Result<u32, SemigroupError> {
    if decompose(q, lambda).is_none() {
        return Err(SemigroupError::NotInHStar { q, lambda });
    }
    let count = (0..q * q)
        .flat_map(|i| (0..q).map(move |j| compose(q, i, j) as i64))
        .filter(|&eta| h_of_q_contains(q, eta - lambda))
        .count();
    Ok(count as u32)
}

/// `#{ η ∈ H(Q) : λ − η ∈ H(Q) }`, counted literally.
pub fn mu_oracle(q: u32, lambda: i64) -> u32 {
    (0..=lambda.max(-1))
        .filter(|&eta| h_of_q_contains(q, eta) && h_of_q_contains(q, lambda - eta))
        .count() as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SemigroupElement {
    pub lambda: u32,
    pub i: u32,
    pub j: u32,
    pub sigma: u32,
    pub mu: u32,
}

/// `H*(Q)` for a fixed q, sorted by λ, with σ and μ precomputed.
#[derive(Debug, Clone)]
pub struct HStar {
    q: u32,
    elements: Vec<SemigroupElement>,
    /// position in `elements` by λ
    by_lambda: Vec<Option<u32>>,
}

pub fn h_star(q: u32) -> Result<HStar, SemigroupError> {
    check_q(q)?;
    Ok(HStar::build(q))
}

impl HStar {
    fn build(q: u32) -> Self {
        let mut elements: Vec<SemigroupElement> = (0..q * q)
            .flat_map(|i| (0..q).map(move |j| (i, j)))
            .map(|(i, j)| SemigroupElement {
                lambda: compose(q, i, j),
                i,
                j,
                sigma: sigma_ij(q, i, j),
                mu: sigma_ij(q, q * q - 1 - i, q - 1 - j),
            })
            .collect();
        elements.sort_by_key(|e| e.lambda);
        let max = elements.last().map_or(0, |e| e.lambda);
        let mut by_lambda = vec![None; max as usize + 1];
        for (k, e) in elements.iter().enumerate() {
            by_lambda[e.lambda as usize] = Some(k as u32);
        }
        HStar { q, elements, by_lambda }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Code length `n = q³`.
    pub fn n(&self) -> u32 {
        self.q.pow(3)
    }

    pub fn genus(&self) -> u32 {
        self.q * (self.q - 1) / 2
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SemigroupElement] {
        &self.elements
    }

    /// Largest element, `q³ + q² − q − 1`.
    pub fn max_lambda(&self) -> u32 {
        self.elements.last().map_or(0, |e| e.lambda)
    }

    pub fn get(&self, lambda: i64) -> Option<&SemigroupElement> {
        if lambda < 0 {
            return None;
        }
        self.by_lambda.get(lambda as usize).copied().flatten().map(|k| &self.elements[k as usize])
    }

    pub fn element(&self, lambda: i64) -> Result<&SemigroupElement, SemigroupError> {
        self.get(lambda).ok_or(SemigroupError::NotInHStar { q: self.q, lambda })
    }

    pub fn sigma(&self, lambda: i64) -> Result<u32, SemigroupError> {
        self.element(lambda).map(|e| e.sigma)
    }

    pub fn mu(&self, lambda: i64) -> Result<u32, SemigroupError> {
        self.element(lambda).map(|e| e.mu)
    }

    /// `#{ λ' ∈ H*(Q) : λ' ≤ λ }`.
    pub fn count_up_to(&self, lambda: i64) -> usize {
        self.elements.partition_point(|e| (e.lambda as i64) <= lambda)
    }

    /// The distinct values of σ over `H*(Q)` (equal to those of μ), ascending.
    pub fn achievable_distances(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.elements.iter().map(|e| e.sigma).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_achievable(&self, delta: u32) -> bool {
        self.elements.iter().any(|e| e.sigma == delta)
    }

    /// Smallest achievable designed distance `≥ delta`.
    pub fn round_up_achievable(&self, delta: u32) -> Option<u32> {
        self.elements.iter().map(|e| e.sigma).filter(|&s| s >= delta).min()
    }

    /// `#{ λ : σ(λ) ≥ δ }`, the dimension of the improved primary code.
    pub fn count_sigma_at_least(&self, delta: u32) -> usize {
        self.elements.iter().filter(|e| e.sigma >= delta).count()
    }

    /// `#{ λ : μ(λ) < δ }`, the dimension of `C̃(δ)^⊥`.
    pub fn count_mu_below(&self, delta: u32) -> usize {
        self.elements.iter().filter(|e| e.mu < delta).count()
    }

    /// Number of gaps of `H(Q)`.
    pub fn gap_count(&self) -> usize {
        (0..=2 * self.genus() as i64).filter(|&x| !h_of_q_contains(self.q, x)).count()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub counterexample: Option<String>,
    pub note: Option<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub q: u32,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    counterexample: Option<String>,
    note: Option<&'static str>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, counterexample: None, note: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> LemmaCheck {
        LemmaCheck {
            name: self.name,
            passed: self.counterexample.is_none(),
            cases: self.cases,
            counterexample: self.counterexample,
            note: self.note,
        }
    }
}

/// Exhaustively check the auxiliary σ/μ lemmas over their quantified ranges,
/// using the definitional oracles.
pub fn verify_sigma_mu_lemmas(q: u32) -> Result<LemmaReport, SemigroupError> {
    check_q(q)?;
    let n = q.pow(3);
    let qq = q * q;
    let lam = |i: u32, j: u32| compose(q, i, j);
    let max = compose(q, qq - 1, q - 1) as usize;
    let mut sig = vec![0u32; max + 1];
    let mut mu = vec![0u32; max + 1];
    for i in 0..qq {
        for j in 0..q {
            let l = lam(i, j);
            sig[l as usize] = sigma_oracle(q, l as i64)?;
            mu[l as usize] = mu_oracle(q, l as i64);
        }
    }
    let s = |i: u32, j: u32| sig[lam(i, j) as usize];
    let mut checks = Vec::new();

    let mut t = Tally::new("sigma-lower-bound");
    for i in 0..qq {
        for j in 0..q {
            let bound = n as i64 - lam(i, j) as i64;
            let v = s(i, j) as i64;
            let strict_expected = qq - q <= i && j >= 1;
            t.check(v >= bound && (v > bound) == strict_expected, || {
                format!("(i,j)=({i},{j}) sigma={v} n-lambda={bound}")
            });
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("sigma-step");
    for i in 1..qq - q {
        for j in 0..q - 1 {
            t.check(s(i, j) == s(i - 1, j + 1) + 1, || format!("(i,j)=({i},{j})"));
        }
    }
    for i in 0..qq - q {
        t.check(s(i, q - 1) == s(i + q, 0) + 1, || format!("second part i={i}"));
    }
    checks.push(t.finish());

    let mut t = Tally::new("sigma-boundary-decreasing");
    let seq: Vec<u32> = (0..qq).map(|i| s(i, 0)).chain((1..q).map(|j| s(qq - 1, j))).collect();
    for w in seq.windows(2) {
        t.check(w[0] > w[1], || format!("{} followed by {}", w[0], w[1]));
    }
    checks.push(t.finish());

    let mut t = Tally::new("corner-symmetry");
    for a in 0..q - 1 {
        for b in 0..q - 1 {
            t.check(s(qq - q + a, b) == s(qq - q + b, a), || format!("(s,t)=({a},{b})"));
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("corner-monotone");
    t.note = Some(
        "second part stated for 0 <= j <= q^2-1; checked for 0 <= j <= q-1, \
         which is the whole range since j+s <= q-1 forces j <= q-1",
    );
    for i in qq - q..qq {
        for sh in 0..=i - (qq - q) {
            t.check(s(i - sh, sh) >= s(i, 0), || format!("first part i={i} s={sh}"));
        }
    }
    for j in 0..q {
        for sh in 0..q - j {
            t.check(s(qq - 1 - sh, j + sh) >= s(qq - 1, j), || format!("second part j={j} s={sh}"));
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("small-sigma-corner");
    for i in 0..qq {
        for j in 0..q {
            if s(i, j) <= q {
                t.check(qq - q <= i, || format!("(i,j)=({i},{j}) sigma={}", s(i, j)));
            }
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("mu-plus-sigma");
    t.note = Some("windows checked as stated, with j in 0..q");
    let target = n - (qq - q - 1);
    for i in 0..qq {
        for j in 0..q {
            let in_window = (q <= i && i < qq - q) || (qq - q < i && j == 0) || (i < q && j == q - 1);
            if in_window {
                let l = lam(i, j) as usize;
                t.check(mu[l] + sig[l] == target, || {
                    format!("(i,j)=({i},{j}) mu+sigma={} expected {target}", mu[l] + sig[l])
                });
            }
        }
    }
    checks.push(t.finish());

    Ok(LemmaReport { q, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn membership() {
        assert!(!h_of_q_contains(2, 1));
        assert!(h_of_q_contains(2, 7));
        assert!(!h_of_q_contains(4, 11));
        // brute force over u, v
        for q in [2u32, 3, 4, 5] {
            for x in 0..200i64 {
                let brute = (0..=x / q as i64)
                    .any(|u| (x - u * q as i64) >= 0 && (x - u * q as i64) % (q as i64 + 1) == 0);
                assert_eq!(h_of_q_contains(q, x), brute, "q={q} x={x}");
            }
        }
    }

    #[test]
    fn h_star_small() {
        let h = h_star(2).unwrap();
        let l: Vec<u32> = h.elements().iter().map(|e| e.lambda).collect();
        assert_eq!(l, vec![0, 2, 3, 4, 5, 6, 7, 9]);
        let h3 = h_star(3).unwrap();
        assert_eq!(h3.len(), 27);
        assert_eq!(h3.max_lambda(), 32);
        assert_eq!(h_star(17).unwrap_err(), SemigroupError::UnsupportedQ(17));
    }

    #[test]
    fn sigma_mu_examples() {
        assert_eq!(sigma_formula(4, 0), Ok(64));
        assert_eq!(sigma_formula(4, 19), Ok(45));
        assert_eq!(sigma_formula(2, 6), Ok(2));
        assert_eq!(mu_formula(4, 0), Ok(1));
        assert_eq!(mu_formula(4, 19), Ok(8));
        assert_eq!(mu_formula(2, 4), Ok(3));
        assert_eq!(sigma_oracle(2, 2), Ok(6));
        assert_eq!(sigma_oracle(2, 0), Ok(8));
        assert_eq!(sigma_oracle(4, 75), Ok(1));
        assert_eq!(mu_oracle(2, 0), 1);
        assert_eq!(mu_oracle(2, 9), 8);
        assert_eq!(mu_oracle(4, 75), 64);
        assert_eq!(sigma_formula(2, 1), Err(SemigroupError::NotInHStar { q: 2, lambda: 1 }));
        assert_eq!(sigma_oracle(2, 8), Err(SemigroupError::NotInHStar { q: 2, lambda: 8 }));
    }

    #[test]
    fn lem6_spot_value() {
        // i = 4, j = 0 at q = 4
        assert_eq!(mu_formula(4, 16).unwrap() + sigma_formula(4, 16).unwrap(), 53);
    }

    #[test]
    fn gaps_equal_genus() {
        for q in SUPPORTED_Q {
            let h = h_star(q).unwrap();
            assert_eq!(h.gap_count() as u32, h.genus());
            assert_eq!(h.len() as u32, q.pow(3));
        }
    }

    #[test]
    fn lemmas_hold_for_q2() {
        let r = verify_sigma_mu_lemmas(2).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    proptest! {
        #[test]
        fn mirror_is_involution_and_swaps_sigma_mu(qi in 0usize..6, k in 0usize..512) {
            let q = SUPPORTED_Q[qi];
            let h = h_star(q).unwrap();
            let e = h.elements()[k % h.len()];
            let m = mirror(q, e.lambda as i64).unwrap();
            prop_assert_eq!(mirror(q, m as i64).unwrap(), e.lambda);
            prop_assert_eq!(h.mu(m as i64).unwrap(), e.sigma);
            prop_assert!(e.sigma as i64 >= q.pow(3) as i64 - e.lambda as i64);
        }
    }
}
