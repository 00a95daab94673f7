//! Ramp secret sharing from a nested pair `C2 ⊊ C1`.
//!
//! A basis `b_1..b_k2` of `C2` is extended by `ℓ` rows of `C1` to a basis
//! of `C1`. A secret `s ∈ GF(q²)^ℓ` is shared as the codeword
//! `Σ a_i b_i + Σ s_j b_{k2+j}` with uniformly random `a`; share `i` is
//! coordinate `i`. The auditor decides privacy and reconstruction for every
//! share subset by rank comparisons on the restricted generator matrices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::codes::{CodeError, LinearCode, NestedPair};
use crate::gfield::FieldSpec;
use crate::linalg::{Matrix, Reducer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SharingError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("element {value} is not in a field of order {order}")]
    ElementOutOfRange { value: u32, order: u32 },
    #[error("share index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("share index {0} appears twice")]
    DuplicateIndex(usize),
    #[error("shares belong to scheme {found}, not {expected}")]
    SchemeMismatch { expected: String, found: String },
    #[error("shares are not consistent with any codeword")]
    InconsistentShares,
    #[error("audit needs {required} checks, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("malformed input: {0}")]
    Parse(String),
}

/// Source of the dealer's random coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Randomness {
    /// ChaCha20 seeded from the value; reproducible.
    Seeded(u64),
    /// Operating system entropy.
    Os,
}

impl fmt::Display for Randomness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Randomness::Seeded(s) => write!(f, "seeded:{s}"),
            Randomness::Os => write!(f, "os"),
        }
    }
}

impl FromStr for Randomness {
    type Err = SharingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "os" {
            return Ok(Randomness::Os);
        }
        s.strip_prefix("seeded:")
            .and_then(|v| v.parse().ok())
            .map(Randomness::Seeded)
            .ok_or_else(|| SharingError::Parse(format!("unknown randomness `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub struct DealerSpec {
    c1: LinearCode,
    c2: LinearCode,
    extension: Matrix,
    pub randomness: Randomness,
    id: String,
}

impl DealerSpec {
    pub fn from_pair(pair: &NestedPair, randomness: Randomness) -> DealerSpec {
        Self::assemble(pair.c1.clone(), pair.c2.clone(), pair.extension_rows(), randomness)
    }

    fn assemble(c1: LinearCode, c2: LinearCode, extension: Matrix, randomness: Randomness) -> DealerSpec {
        let mut spec = DealerSpec { c1, c2, extension, randomness, id: String::new() };
        spec.id = spec.compute_id();
        spec
    }

    fn compute_id(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.c2.to_text().as_bytes());
        h.update(matrix_text(&self.extension).as_bytes());
        h.finalize().iter().take(16).map(|b| format!("{b:02x}")).collect()
    }

    /// Hex digest of the `C2` basis and extension rows.
    pub fn scheme_id(&self) -> &str {
        &self.id
    }

    pub fn field(&self) -> &FieldSpec {
        self.c1.field()
    }

    pub fn n(&self) -> usize {
        self.c1.n()
    }

    pub fn secret_len(&self) -> usize {
        self.extension.rows()
    }

    pub fn randomness_len(&self) -> usize {
        self.c2.k()
    }

    pub fn c1(&self) -> &LinearCode {
        &self.c1
    }

    pub fn c2(&self) -> &LinearCode {
        &self.c2
    }

    pub fn extension(&self) -> &Matrix {
        &self.extension
    }

    /// `[C2 basis; extension rows]`.
    pub fn full_basis(&self) -> Matrix {
        self.c2.generator().stack(&self.extension)
    }

    fn check_elements(&self, v: &[u16]) -> Result<(), SharingError> {
        let order = self.field().order();
        match v.iter().find(|&&x| x as u32 >= order) {
            Some(&x) => Err(SharingError::ElementOutOfRange { value: x as u32, order }),
            None => Ok(()),
        }
    }

    /// Scheme file: both generator matrices in the code text format and the
    /// extension rows.
    pub fn to_text(&self) -> String {
        let mut s = format!("scheme {} randomness {}\n", self.id, self.randomness);
        s.push_str("[c1]\n");
        s.push_str(&self.c1.to_text());
        s.push_str("[c2]\n");
        s.push_str(&self.c2.to_text());
        s.push_str(&format!("[extension] {}\n", self.extension.rows()));
        s.push_str(&matrix_text(&self.extension));
        s
    }

    pub fn from_text(text: &str) -> Result<DealerSpec, SharingError> {
        let bad = |m: &str| SharingError::Parse(m.to_string());
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty scheme file"))?.split_whitespace().collect();
        let (id, randomness) = match header.as_slice() {
            ["scheme", id, "randomness", r] => (id.to_string(), r.parse()?),
            _ => return Err(bad("header must be `scheme <id> randomness <source>`")),
        };
        let rest: Vec<&str> = lines.collect();
        let pos = |tag: &str| rest.iter().position(|l| l.starts_with(tag)).ok_or_else(|| bad(&format!("missing {tag}")));
        let (p1, p2, pe) = (pos("[c1]")?, pos("[c2]")?, pos("[extension]")?);
        if !(p1 < p2 && p2 < pe) {
            return Err(bad("sections must appear as [c1], [c2], [extension]"));
        }
        let c1 = LinearCode::from_text(&rest[p1 + 1..p2].join("\n"))?;
        let c2 = LinearCode::from_text(&rest[p2 + 1..pe].join("\n"))?;
        let ell: usize = rest[pe]
            .split_whitespace()
            .nth(1)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("extension header needs a row count"))?;
        let order = c1.field().order();
        let rows = rest[pe + 1..]
            .iter()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| match t.parse::<u32>() {
                        Ok(v) if v < order => Ok(v as u16),
                        _ => Err(bad(&format!("bad element `{t}`"))),
                    })
                    .collect::<Result<Vec<u16>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.len() != ell || rows.iter().any(|r| r.len() != c1.n()) {
            return Err(bad("extension rows do not match the declared shape"));
        }
        let extension = Matrix::from_rows(c1.n(), rows);
        if c2.n() != c1.n() || !c1.contains_code(&c2) {
            return Err(CodeError::NotNested.into());
        }
        if extension.iter_rows().any(|r| !c1.contains_word(r)) {
            return Err(bad("extension rows are not in C1"));
        }
        let mut red = Reducer::new(c1.field());
        let independent = c2.generator().iter_rows().chain(extension.iter_rows()).filter(|r| red.insert(r)).count();
        if independent != c1.k() || c2.k() + ell != c1.k() {
            return Err(bad("C2 basis and extension rows do not form a basis of C1"));
        }
        let spec = Self::assemble(c1, c2, extension, randomness);
        if spec.id != id {
            return Err(SharingError::SchemeMismatch { expected: spec.id, found: id });
        }
        Ok(spec)
    }
}

fn matrix_text(m: &Matrix) -> String {
    let mut s = String::new();
    for r in m.iter_rows() {
        let line: Vec<String> = r.iter().map(u16::to_string).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

/// Shares keyed by participant index `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShareBundle {
    pub scheme_id: String,
    pub shares: BTreeMap<usize, u16>,
}

impl ShareBundle {
    /// The shares held by the given participants.
    pub fn restrict(&self, indices: &[usize]) -> ShareBundle {
        ShareBundle {
            scheme_id: self.scheme_id.clone(),
            shares: indices.iter().filter_map(|i| self.shares.get(i).map(|&v| (*i, v))).collect(),
        }
    }

    /// One `index:element` line per share after a `# scheme <id>` line.
    pub fn to_text(&self) -> String {
        let mut s = format!("# scheme {}\n", self.scheme_id);
        for (i, v) in &self.shares {
            s.push_str(&format!("{i}:{v}\n"));
        }
        s
    }

    /// Parses share lines; the scheme line is optional and other `#` lines
    /// are ignored.
    pub fn from_text(text: &str) -> Result<ShareBundle, SharingError> {
        let mut scheme_id = String::new();
        let mut shares = BTreeMap::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(c) = line.strip_prefix('#') {
                if let Some(id) = c.trim().strip_prefix("scheme ") {
                    scheme_id = id.trim().to_string();
                }
                continue;
            }
            let (i, v) = line.split_once(':').ok_or_else(|| SharingError::Parse(format!("bad share line `{line}`")))?;
            let i: usize = i.trim().parse().map_err(|_| SharingError::Parse(format!("bad index `{i}`")))?;
            let v: u16 = v.trim().parse().map_err(|_| SharingError::Parse(format!("bad element `{v}`")))?;
            if shares.insert(i, v).is_some() {
                return Err(SharingError::DuplicateIndex(i));
            }
        }
        Ok(ShareBundle { scheme_id, shares })
    }
}

/// Shares for `secret` using explicit coefficients for the `C2` rows.
pub fn deal_with_randomness(spec: &DealerSpec, secret: &[u16], coeffs: &[u16]) -> Result<ShareBundle, SharingError> {
    if secret.len() != spec.secret_len() {
        return Err(SharingError::LengthMismatch { expected: spec.secret_len(), got: secret.len() });
    }
    if coeffs.len() != spec.randomness_len() {
        return Err(SharingError::LengthMismatch { expected: spec.randomness_len(), got: coeffs.len() });
    }
    spec.check_elements(secret)?;
    spec.check_elements(coeffs)?;
    let message: Vec<u16> = coeffs.iter().chain(secret).copied().collect();
    let word = spec.full_basis().combine(spec.field(), &message);
    Ok(ShareBundle { scheme_id: spec.id.clone(), shares: word.into_iter().enumerate().map(|(i, v)| (i + 1, v)).collect() })
}

pub fn deal_with_rng<R: RngCore>(spec: &DealerSpec, secret: &[u16], rng: &mut R) -> Result<ShareBundle, SharingError> {
    let order = spec.field().order();
    let coeffs: Vec<u16> = (0..spec.randomness_len()).map(|_| rng.gen_range(0..order) as u16).collect();
    deal_with_randomness(spec, secret, &coeffs)
}

/// Shares for `secret` drawn from the spec's randomness source.
pub fn deal(spec: &DealerSpec, secret: &[u16]) -> Result<ShareBundle, SharingError> {
    match spec.randomness {
        Randomness::Seeded(seed) => deal_with_rng(spec, secret, &mut ChaCha20Rng::seed_from_u64(seed)),
        Randomness::Os => deal_with_rng(spec, secret, &mut rand::rngs::OsRng),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Reconstruction {
    Determined { secret: Vec<u16> },
    /// Secret coordinates (0-based) not fixed by the shares.
    Undetermined { free: Vec<usize> },
}

/// Solves for the message on the known coordinates and reports the secret
/// when the shares pin it down.
pub fn reconstruct(spec: &DealerSpec, partial: &ShareBundle) -> Result<Reconstruction, SharingError> {
    if !partial.scheme_id.is_empty() && partial.scheme_id != spec.id {
        return Err(SharingError::SchemeMismatch { expected: spec.id.clone(), found: partial.scheme_id.clone() });
    }
    let n = spec.n();
    let f = spec.field();
    for (&i, &v) in &partial.shares {
        if i == 0 || i > n {
            return Err(SharingError::IndexOutOfRange { index: i, n });
        }
        spec.check_elements(&[v])?;
    }
    let basis = spec.full_basis();
    let k = basis.rows();
    let k2 = spec.randomness_len();
    // one equation per known share: Σ_r x_r basis[r][i] = y_i
    let rows: Vec<Vec<u16>> = partial
        .shares
        .iter()
        .map(|(&i, &y)| {
            let mut eq: Vec<u16> = (0..k).map(|r| basis.get(r, i - 1)).collect();
            eq.push(y);
            eq
        })
        .collect();
    let (rref, pivots) = Matrix::from_rows(k + 1, rows).rref(f);
    if pivots.contains(&k) {
        return Err(SharingError::InconsistentShares);
    }
    let free_cols: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    let mut secret = Vec::with_capacity(spec.secret_len());
    let mut undetermined = Vec::new();
    for s in 0..spec.secret_len() {
        let col = k2 + s;
        match pivots.iter().position(|&p| p == col) {
            Some(r) if free_cols.iter().all(|&fc| rref.get(r, fc) == 0) => secret.push(rref.get(r, k)),
            _ => undetermined.push(s),
        }
    }
    Ok(if undetermined.is_empty() {
        Reconstruction::Determined { secret }
    } else {
        Reconstruction::Undetermined { free: undetermined }
    })
}

/// What a set of shares reveals about the secret.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Knowledge {
    Nothing,
    Partial,
    Everything,
}

fn ranks_on(spec: &DealerSpec, cols: &[usize]) -> (usize, usize) {
    let restrict = |r: &[u16]| -> Vec<u16> { cols.iter().map(|&c| r[c]).collect() };
    let mut red = Reducer::new(spec.field());
    let r2 = spec.c2.generator().iter_rows().filter(|r| red.insert(&restrict(r))).count();
    let r1 = r2 + spec.extension.iter_rows().filter(|r| red.insert(&restrict(r))).count();
    (r1, r2)
}

/// Classifies a set of 0-based share positions by comparing the rank of
/// `C1` and `C2` restricted to it.
pub fn knowledge_of(spec: &DealerSpec, cols: &[usize]) -> Knowledge {
    let (r1, r2) = ranks_on(spec, cols);
    if r1 == r2 {
        Knowledge::Nothing
    } else if r1 - r2 == spec.secret_len() {
        Knowledge::Everything
    } else {
        Knowledge::Partial
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All `size`-subsets of `0..n` as bit masks (`n ≤ 64`).
fn subsets(n: usize, size: usize) -> Vec<u64> {
    if size == 0 {
        return vec![0];
    }
    let mut out = Vec::with_capacity(binomial(n, size) as usize);
    let mut m: u64 = (1u64 << size) - 1;
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    while m <= limit {
        out.push(m);
        // next mask with the same popcount
        let c = m & m.wrapping_neg();
        let r = m + c;
        if r == 0 {
            break;
        }
        m = (((r ^ m) >> 2) / c) | r;
        if m > limit {
            break;
        }
    }
    out
}

fn mask_cols(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub n: usize,
    pub ell: usize,
    /// Largest size such that every share set of that size reveals nothing.
    pub privacy_number: usize,
    /// Smallest size such that every share set of that size determines the
    /// secret.
    pub reconstruction_number: usize,
    /// A set of `privacy_number + 1` shares (1-based) that leaks.
    pub leaking_set: Option<Vec<usize>>,
    /// A set of `reconstruction_number − 1` shares (1-based) that does not
    /// determine the secret.
    pub undetermined_set: Option<Vec<usize>>,
    pub subsets_checked: u128,
}

/// Search for the first subset of the given size that fails `good`.
fn first_failure<F>(n: usize, size: usize, good: F) -> Option<Vec<usize>>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    subsets(n, size).into_par_iter().map(mask_cols).find_first(|cols| !good(cols))
}

/// Exact privacy and reconstruction numbers by checking share subsets size
/// by size. `budget` caps the number of subsets examined.
pub fn audit(spec: &DealerSpec, budget: u64) -> Result<AuditReport, SharingError> {
    let n = spec.n();
    assert!(n <= 64, "audit supports at most 64 shares");
    let ell = spec.secret_len();
    let mut checked: u128 = 0;
    let mut spend = |size: usize| -> Result<(), SharingError> {
        checked += binomial(n, size);
        if checked > budget as u128 {
            return Err(SharingError::BudgetExceeded { required: checked, budget });
        }
        Ok(())
    };

    let mut privacy_number = n;
    let mut leaking_set = None;
    for size in 1..=n {
        spend(size)?;
        if let Some(cols) = first_failure(n, size, |c| knowledge_of(spec, c) == Knowledge::Nothing) {
            privacy_number = size - 1;
            leaking_set = Some(cols.iter().map(|c| c + 1).collect());
            break;
        }
    }

    let mut reconstruction_number = 0;
    let mut undetermined_set = None;
    for size in (0..=n).rev() {
        spend(size)?;
        if let Some(cols) = first_failure(n, size, |c| knowledge_of(spec, c) == Knowledge::Everything) {
            reconstruction_number = size + 1;
            undetermined_set = Some(cols.iter().map(|c| c + 1).collect());
            break;
        }
    }

    Ok(AuditReport {
        n,
        ell,
        privacy_number,
        reconstruction_number,
        leaking_set,
        undetermined_set,
        subsets_checked: checked,
    })
}

pub fn exact_privacy_number(spec: &DealerSpec, budget: u64) -> Result<usize, SharingError> {
    Ok(audit(spec, budget)?.privacy_number)
}

pub fn exact_reconstruction_number(spec: &DealerSpec, budget: u64) -> Result<usize, SharingError> {
    Ok(audit(spec, budget)?.reconstruction_number)
}

fn all_vectors(order: u32, len: usize) -> impl Iterator<Item = Vec<u16>> {
    let total = (order as u64).pow(len as u32);
    (0..total).map(move |mut idx| {
        (0..len)
            .map(|_| {
                let d = (idx % order as u64) as u16;
                idx /= order as u64;
                d
            })
            .collect()
    })
}

/// Enumerates every secret and every choice of randomness and checks that
/// the distribution of shares on `positions` (0-based) is the same for all
/// secrets.
pub fn perfect_privacy_check(spec: &DealerSpec, positions: &[usize], budget: u64) -> Result<bool, SharingError> {
    let order = spec.field().order();
    let (k2, ell) = (spec.randomness_len(), spec.secret_len());
    let required = (order as u128).pow((k2 + ell) as u32);
    if required > budget as u128 {
        return Err(SharingError::BudgetExceeded { required, budget });
    }
    let basis = spec.full_basis();
    let f = spec.field();
    let secrets: Vec<Vec<u16>> = all_vectors(order, ell).collect();
    let distributions: Vec<HashMap<Vec<u16>, u64>> = secrets
        .par_iter()
        .map(|s| {
            let mut counts = HashMap::new();
            for a in all_vectors(order, k2) {
                let msg: Vec<u16> = a.iter().chain(s).copied().collect();
                let word = basis.combine(f, &msg);
                *counts.entry(positions.iter().map(|&p| word[p]).collect()).or_insert(0) += 1;
            }
            counts
        })
        .collect();
    Ok(distributions.windows(2).all(|w| w[0] == w[1]))
}
