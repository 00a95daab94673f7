//! Rational affine places of the Hermitian curve `x^{q+1} = y^q + y` over
//! GF(q²) and evaluation of the monomials `x^a y^b` that span the
//! Riemann–Roch spaces `L(λQ)`.

use std::sync::Arc;

use thiserror::Error;

use crate::gfield::{FieldError, FieldSpec};
use crate::linalg::Matrix;
use crate::semigroup::{self, HStar, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Prime factorisation `q = p^e` for supported q.
fn prime_power(q: u32) -> (u32, u32) {
    let p = (2..=q).find(|d| q % d == 0).expect("q >= 2");
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    (p, e)
}

/// GF(q²) for a supported q.
pub fn field_for_q(q: u32) -> Result<FieldSpec, CurveError> {
    semigroup::check_q(q)?;
    let (p, e) = prime_power(q);
    Ok(FieldSpec::new(p, 2 * e)?)
}

/// A place `(x, y)` given by element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Place {
    pub x: u16,
    pub y: u16,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialFunction {
    pub a: u32,
    pub b: u32,
    pub lambda: u32,
}

#[derive(Debug, Clone)]
pub struct CurveContext {
    q: u32,
    field: Arc<FieldSpec>,
    places: Vec<Place>,
    hstar: HStar,
}

pub fn curve_create(q: u32) -> Result<CurveContext, CurveError> {
    semigroup::check_q(q)?;
    let field = Arc::new(field_for_q(q)?);
    let mut places = Vec::with_capacity(q.pow(3) as usize);
    let order = field.order() as u16;
    for x in 0..order {
        let nx = field.pow(x, q as u64 + 1);
        for y in 0..order {
            let ty = field.add(field.pow(y, q as u64), y);
            if nx == ty {
                places.push(Place { x, y });
            }
        }
    }
    let hstar = semigroup::h_star(q)?;
    Ok(CurveContext { q, field, places, hstar })
}

impl CurveContext {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn shared_field(&self) -> Arc<FieldSpec> {
        Arc::clone(&self.field)
    }

    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn n(&self) -> usize {
        self.places.len()
    }

    pub fn genus(&self) -> u32 {
        self.q * (self.q - 1) / 2
    }

    pub fn h_star(&self) -> &HStar {
        &self.hstar
    }

    pub fn monomial_for(&self, lambda: i64) -> Result<MonomialFunction, SemigroupError> {
        let (a, b) = semigroup::decompose(self.q, lambda)
            .ok_or(SemigroupError::NotInHStar { q: self.q, lambda })?;
        Ok(MonomialFunction { a, b, lambda: lambda as u32 })
    }

    /// `(x_k^a y_k^b)_k` in place order.
    pub fn evaluate(&self, f: MonomialFunction) -> Vec<u16> {
        let fs = &self.field;
        self.places
            .iter()
            .map(|p| fs.mul(fs.pow(p.x, f.a as u64), fs.pow(p.y, f.b as u64)))
            .collect()
    }

    /// Evaluation vectors of the given pole orders, one row each.
    pub fn evaluation_matrix(&self, lambdas: &[u32]) -> Result<Matrix, SemigroupError> {
        let rows = lambdas
            .iter()
            .map(|&l| self.monomial_for(l as i64).map(|f| self.evaluate(f)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_rows(self.n(), rows))
    }
}
