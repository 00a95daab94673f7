//! Invariant suites run by `hermcodes verify`. Every check reports pass,
//! fail with a counterexample, or skipped when its exhaustive search would
//! exceed the budget.

use std::fmt;

use serde::Serialize;

use crate::analysis::{self, DimRule};
use crate::codes::{self, CodeError, DistanceOptions};
use crate::constructions::{self, Construction, ConstructionError};
use crate::curve::{self, CurveContext, CurveError};
use crate::semigroup::{self, SemigroupError};
use crate::sharing::{self, DealerSpec, Randomness, Reconstruction, SharingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Semigroup,
    Lemmas,
    Duality,
    Inclusion,
    Dims,
    Distances,
    Sharing,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Semigroup,
        Suite::Lemmas,
        Suite::Duality,
        Suite::Inclusion,
        Suite::Dims,
        Suite::Distances,
        Suite::Sharing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Semigroup => "semigroup",
            Suite::Lemmas => "lemmas",
            Suite::Duality => "duality",
            Suite::Inclusion => "inclusion",
            Suite::Dims => "dims",
            Suite::Distances => "distances",
            Suite::Sharing => "sharing",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::Skipped)
    }

    pub fn passed(&self) -> usize {
        self.count(Status::Pass)
    }

    fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

struct Recorder<'a> {
    suite: &'static str,
    out: &'a mut Vec<Check>,
}

impl Recorder<'_> {
    fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.out.push(Check { suite: self.suite, name: name.into(), status, detail: detail.into() });
    }

    /// Records a pass over `cases` cases or the first counterexample.
    fn exhaustive(&mut self, name: impl Into<String>, cases: usize, first_bad: Option<String>) {
        match first_bad {
            None => self.push(name, Status::Pass, format!("{cases} cases")),
            Some(ce) => self.push(name, Status::Fail, ce),
        }
    }
}

/// Runs one suite at one q.
pub fn run_suite(q: u32, suite: Suite, budget: u64) -> Result<VerifyReport, VerifyError> {
    semigroup::check_q(q)?;
    let mut report = VerifyReport::default();
    let mut rec = Recorder { suite: suite.name(), out: &mut report.checks };
    match suite {
        Suite::Semigroup => semigroup_suite(q, &mut rec)?,
        Suite::Lemmas => {
            for c in semigroup::verify_sigma_mu_lemmas(q)?.checks {
                let detail = match (&c.counterexample, c.note) {
                    (Some(ce), _) => ce.clone(),
                    (None, Some(note)) => format!("{} cases; {note}", c.cases),
                    (None, None) => format!("{} cases", c.cases),
                };
                rec.push(c.name, if c.passed { Status::Pass } else { Status::Fail }, detail);
            }
        }
        Suite::Duality => duality_suite(q, &mut rec)?,
        Suite::Inclusion => inclusion_suite(q, &mut rec)?,
        Suite::Dims => dims_suite(q, &mut rec)?,
        Suite::Distances => distances_suite(q, budget, &mut rec)?,
        Suite::Sharing => sharing_suite(q, budget, &mut rec)?,
    }
    Ok(report)
}

/// Code-level suites build q³ × q³ matrices for every element of `H*(Q)`.
const CODE_LEVEL_MAX_Q: u32 = 5;

fn code_level(q: u32, rec: &mut Recorder<'_>, what: &str) -> Option<CurveContext> {
    if q > CODE_LEVEL_MAX_Q {
        rec.push(what, Status::Skipped, format!("code-level checks run for q <= {CODE_LEVEL_MAX_Q}"));
        return None;
    }
    Some(curve::curve_create(q).expect("supported q"))
}

fn semigroup_suite(q: u32, rec: &mut Recorder<'_>) -> Result<(), VerifyError> {
    let h = semigroup::h_star(q)?;
    let mut bad_sigma = None;
    let mut bad_mu = None;
    for e in h.elements() {
        let l = e.lambda as i64;
        let (sf, so) = (semigroup::sigma_formula(q, l)?, semigroup::sigma_oracle(q, l)?);
        if sf != so && bad_sigma.is_none() {
            bad_sigma = Some(format!("λ = {l}: formula {sf}, count {so}"));
        }
        let (mf, mo) = (semigroup::mu_formula(q, l)?, semigroup::mu_oracle(q, l));
        if mf != mo && bad_mu.is_none() {
            bad_mu = Some(format!("λ = {l}: formula {mf}, count {mo}"));
        }
    }
    rec.exhaustive("sigma formula = count", h.len(), bad_sigma);
    rec.exhaustive("mu formula = count", h.len(), bad_mu);
    let size_ok = (h.len() as u32 == q.pow(3)).then_some(()).ok_or(format!("|H*| = {}", h.len()));
    rec.exhaustive("|H*| = q^3", 1, size_ok.err());
    let gaps_ok = h.gap_count() as u32 == h.genus();
    rec.exhaustive("gaps = genus", 1, (!gaps_ok).then(|| format!("{} gaps, genus {}", h.gap_count(), h.genus())));
    Ok(())
}

fn duality_suite(q: u32, rec: &mut Recorder<'_>) -> Result<(), VerifyError> {
    let Some(ctx) = code_level(q, rec, "code-level duality") else {
        return Ok(());
    };
    let h = ctx.h_star();
    let n = q.pow(3) as i64;
    let shift = n + (q * q) as i64 - q as i64 - 2;

    let mut bad = None;
    for e in h.elements() {
        let l = e.lambda as i64;
        let d = codes::dual(&codes::onepoint_code(&ctx, l));
        if !d.same_row_space(&codes::onepoint_code(&ctx, shift - l)) {
            bad.get_or_insert(format!("λ = {l}"));
        }
    }
    rec.exhaustive(format!("C_L(λ)^⊥ = C_L({shift}−λ)"), h.len(), bad);

    let ds = h.achievable_distances();
    let mut bad = None;
    for &d in &ds {
        let e = codes::improved_primary(&ctx, d).expect("achievable");
        let c = codes::improved_dual(&ctx, d).expect("achievable");
        if !e.same_row_space(&c) {
            bad.get_or_insert(format!("δ = {d}"));
        }
    }
    rec.exhaustive("improved primary = improved dual", ds.len(), bad);

    let threshold = q * q - q;
    let mut bad = None;
    let mut cases = 0;
    for &d in ds.iter().filter(|&&d| d > threshold) {
        cases += 1;
        let e = codes::improved_primary(&ctx, d).expect("achievable");
        if !e.same_row_space(&codes::onepoint_code(&ctx, n - d as i64)) {
            bad.get_or_insert(format!("δ = {d}"));
        }
    }
    rec.exhaustive("improved = one-point above q^2-q", cases, bad);

    let e = codes::improved_primary(&ctx, threshold).expect("q^2-q is achievable");
    let c = codes::onepoint_code(&ctx, n - threshold as i64);
    let strict = e.contains_code(&c) && e.k() > c.k();
    rec.exhaustive(
        "one-point strictly inside improved at q^2-q",
        1,
        (!strict).then(|| format!("dims {} and {}", e.k(), c.k())),
    );
    Ok(())
}

fn inclusion_suite(q: u32, rec: &mut Recorder<'_>) -> Result<(), VerifyError> {
    let h = semigroup::h_star(q)?;
    let ds: Vec<u32> = h.achievable_distances().into_iter().filter(|&d| d >= 2).collect();
    let mut bad = None;
    for &d in &ds {
        let r = analysis::delta2_max(q, d).expect("achievable");
        let o = analysis::delta2_max_oracle(q, d).expect("supported q");
        if r.delta2_max_formula != o {
            bad.get_or_insert(format!("δ1 = {d}: formula {} ({:?}), count {o}", r.delta2_max_formula, r.rule));
        }
    }
    rec.exhaustive("largest δ2 formula = count", ds.len(), bad);

    let Some(ctx) = code_level(q, rec, "code-level inclusion") else {
        return Ok(());
    };
    let mut bad = None;
    for &d in &ds {
        let m = analysis::delta2_max(q, d).expect("achievable").delta2_max_formula;
        let e = codes::improved_primary(&ctx, d).expect("achievable");
        let inside = codes::improved_dual_perp(&ctx, m).expect("in range");
        if !e.contains_code(&inside) {
            bad.get_or_insert(format!("δ1 = {d}, δ2 = {m} not contained"));
        }
        if m <= q.pow(3) {
            let outside = codes::improved_dual_perp(&ctx, m + 1).expect("in range");
            if e.contains_code(&outside) {
                bad.get_or_insert(format!("δ1 = {d}, δ2 = {} still contained", m + 1));
            }
        }
    }
    rec.exhaustive("inclusion holds exactly up to the threshold", ds.len(), bad);
    Ok(())
}

fn dims_suite(q: u32, rec: &mut Recorder<'_>) -> Result<(), VerifyError> {
    let h = semigroup::h_star(q)?;
    let ds = h.achievable_distances();
    let mut bad_bound = None;
    let mut bad_eq = None;
    for &d in &ds {
        let r = analysis::dim_bound(q, d).expect("achievable");
        if r.bound > r.exact as i64 {
            bad_bound.get_or_insert(format!("δ = {d}: bound {} > {}", r.bound, r.exact));
        }
        let sharp = matches!(r.rule, DimRule::Generic | DimRule::HighDelta);
        if sharp && r.bound != r.exact as i64 {
            bad_eq.get_or_insert(format!("δ = {d}: bound {} != {}", r.bound, r.exact));
        }
    }
    rec.exhaustive("dimension bound <= exact", ds.len(), bad_bound);
    rec.exhaustive("dimension bound sharp for large δ", ds.len(), bad_eq);

    let Some(ctx) = code_level(q, rec, "code-level dimensions") else {
        return Ok(());
    };
    let mut bad = None;
    for &d in &ds {
        let k = codes::improved_primary(&ctx, d).expect("achievable").k();
        if k != h.count_sigma_at_least(d) {
            bad.get_or_insert(format!("δ = {d}: rank {k}"));
        }
    }
    rec.exhaustive("generator rank = σ count", ds.len(), bad);
    Ok(())
}

fn distance_check(
    rec: &mut Recorder<'_>,
    name: String,
    expected: u32,
    result: Result<codes::DistanceReport, CodeError>,
) {
    match result {
        Ok(rep) if rep.distance == expected => rec.push(name, Status::Pass, format!("{} visits", rep.visits)),
        Ok(rep) => rec.push(name, Status::Fail, format!("found weight {} (expected {expected})", rep.distance)),
        Err(CodeError::BudgetExceeded { required, budget }) => {
            rec.push(name, Status::Skipped, format!("needs {required} visits, budget {budget}"))
        }
        Err(e) => rec.push(name, Status::Fail, e.to_string()),
    }
}

fn small_codim_pairs(ctx: &CurveContext) -> Vec<Construction> {
    let q = ctx.q();
    let mut out = Vec::new();
    for i in 0..q {
        for j in i..q {
            out.push(constructions::small_codim_pair_lower(ctx, i, j).expect("valid indices"));
            out.push(constructions::small_codim_pair_upper(ctx, i, j).expect("valid indices"));
        }
    }
    out
}

fn distances_suite(q: u32, budget: u64, rec: &mut Recorder<'_>) -> Result<(), VerifyError> {
    let ctx = curve::curve_create(q)?;
    let opts = DistanceOptions::with_budget(budget);
    let order = q * q;
    for d in ctx.h_star().achievable_distances() {
        let code = codes::improved_primary(&ctx, d).expect("achievable");
        // cheap pre-check so oversized codes are not built into the search
        let required = codes::distance::work_required(order, code.k(), code.k());
        if required > budget as u128 {
            rec.push(format!("d(E({d})) = {d}"), Status::Skipped, format!("needs {required} visits, budget {budget}"));
            continue;
        }
        distance_check(rec, format!("d(E({d})) = {d}"), d, codes::min_distance(&code, opts));
    }
    for c in small_codim_pairs(&ctx) {
        let (z, x) = (c.pair.d_rel.expect("formula").value, c.pair.d_rel_dual.expect("formula").value);
        distance_check(rec, format!("{} d_rel = {z}", c.origin), z, codes::relative_distance(&c.pair, opts));
        distance_check(rec, format!("{} d_rel_dual = {x}", c.origin), x, codes::relative_distance_dual(&c.pair, opts));
    }
    Ok(())
}

/// Pairs used by the sharing suite: all small-codimension pairs and every
/// improved pair with both distances at least 2.
pub fn sharing_pairs(ctx: &CurveContext) -> Vec<Construction> {
    let mut out = small_codim_pairs(ctx);
    let h = ctx.h_star();
    for d1 in h.achievable_distances() {
        for d2 in h.achievable_distances() {
            if d1 >= 2 && d2 >= 2 {
                match constructions::improved_pair(ctx, d1, d2) {
                    Ok(c) => out.push(c),
                    Err(ConstructionError::Analysis(_)) | Err(ConstructionError::Code(_)) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    out
}

fn sharing_suite(q: u32, budget: u64, rec: &mut Recorder<'_>) -> Result<(), VerifyError> {
    let ctx = curve::curve_create(q)?;
    for c in sharing_pairs(&ctx) {
        let ramp = c.ramp_params().expect("formula distances");
        let spec = DealerSpec::from_pair(&c.pair, Randomness::Seeded(0));
        let name = format!("{} t = {}, r = {}", c.origin, ramp.t, ramp.r);
        match sharing::audit(&spec, budget) {
            Ok(a) if a.privacy_number == ramp.t as usize && a.reconstruction_number == ramp.r as usize => {
                rec.push(name, Status::Pass, format!("{} subsets", a.subsets_checked))
            }
            Ok(a) => rec.push(name, Status::Fail, format!("audit t = {}, r = {}", a.privacy_number, a.reconstruction_number)),
            Err(SharingError::BudgetExceeded { required, budget }) => {
                rec.push(name, Status::Skipped, format!("needs {required} subsets, budget {budget}"))
            }
            Err(e) => rec.push(name, Status::Fail, e.to_string()),
        }
    }

    // round trip with seeded randomness
    let c = constructions::small_codim_pair_lower(&ctx, 0, q - 1).expect("valid indices");
    let order = q * q;
    let mut bad = None;
    for seed in 0..100u64 {
        let spec = DealerSpec::from_pair(&c.pair, Randomness::Seeded(seed));
        let secret: Vec<u16> = (0..spec.secret_len()).map(|i| ((seed as usize * 7 + i * 3) % order as usize) as u16).collect();
        let bundle = sharing::deal(&spec, &secret).expect("valid secret");
        if sharing::reconstruct(&spec, &bundle) != Ok(Reconstruction::Determined { secret: secret.clone() }) {
            bad.get_or_insert(format!("seed {seed}"));
        }
    }
    rec.exhaustive(format!("{} deal/reconstruct round trip", c.origin), 100, bad);
    Ok(())
}

/// Runs the given suites in order.
pub fn run(q: u32, suites: &[Suite], budget: u64) -> Result<VerifyReport, VerifyError> {
    let mut all = VerifyReport::default();
    for &s in suites {
        all.checks.extend(run_suite(q, s, budget)?.checks);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_q2() {
        let r = run(2, &Suite::ALL, codes::DEFAULT_BUDGET).unwrap();
        let failures: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert_eq!(r.skipped(), 0);
    }

    #[test]
    fn small_budget_skips() {
        let r = run_suite(3, Suite::Distances, 1000).unwrap();
        assert!(r.skipped() > 0);
        assert!(r.passed() > 0);
        assert_eq!(r.failed(), 0);
    }

    #[test]
    fn unsupported_q() {
        assert!(run_suite(17, Suite::Semigroup, 10).is_err());
    }
}
