//! Table-driven arithmetic in GF(p^m).
//!
//! Elements are encoded as the integer whose base-p digits are the
//! coefficients of the canonical polynomial representative, lowest degree
//! first. The modulus is always the Conway polynomial for `(p, m)`, so the
//! generator `x` is primitive and the encoding is identical across runs.
//!
//! The hot path (distance enumeration) works directly on `u16` indices via
//! [`FieldSpec::add`] and [`FieldSpec::mul`]; [`FieldElement`] is the
//! checked, field-carrying wrapper used at API boundaries.

mod conway;
mod poly;

use std::fmt;

use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field order {p}^{m} exceeds {MAX_ORDER}")]
    OrderTooLarge { p: u32, m: u32 },
    #[error("no bundled Conway polynomial for GF({p}^{m})")]
    NoBundledModulus { p: u32, m: u32 },
    #[error("bundled modulus for GF({p}^{m}) is not primitive")]
    BadModulus { p: u32, m: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field order {0} is not a perfect square")]
    NotASquareOrder(u32),
    #[error("element index {index} out of range for field of order {order}")]
    IndexOutOfRange { index: u32, order: u32 },
}

/// An immutable description of GF(p^m) together with its arithmetic tables.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    /// `exp[k] = x^k` for `k` in `0..2(order-1)`, doubled to skip a reduction.
    exp: Vec<u16>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
    /// Addition table for odd characteristic; empty for p = 2 (XOR).
    add: Vec<u16>,
    neg: Vec<u16>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Build GF(p^m) with its Conway modulus.
    pub fn new(p: u32, m: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let order = (p as u64).checked_pow(m).filter(|&o| m >= 1 && o <= MAX_ORDER as u64);
        let order = match order {
            Some(o) => o as u32,
            None => return Err(FieldError::OrderTooLarge { p, m }),
        };
        let modulus = conway::CONWAY
            .iter()
            .find(|(cp, cm, _)| *cp == p && *cm == m)
            .map(|(_, _, c)| c.to_vec())
            .ok_or(FieldError::NoBundledModulus { p, m })?;
        if !poly::is_irreducible(&modulus, p) {
            return Err(FieldError::BadModulus { p, m });
        }
        Self::with_modulus(p, m, order, modulus)
    }

    fn with_modulus(p: u32, m: u32, order: u32, modulus: Vec<u32>) -> Result<Self, FieldError> {
        let n = order as usize;
        let digits = |mut v: u32| -> Vec<u32> {
            let mut d = vec![0u32; m as usize];
            for slot in d.iter_mut() {
                *slot = v % p;
                v /= p;
            }
            d
        };
        let encode = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        // Walk powers of x by multiplying the coefficient vector by x and
        // reducing with the monic modulus.
        let mut exp = vec![0u16; 2 * (n - 1)];
        let mut log = vec![0u32; n];
        let mut cur = vec![0u32; m as usize];
        cur[0] = 1;
        for k in 0..n - 1 {
            let idx = encode(&cur);
            if k > 0 && idx == 1 {
                return Err(FieldError::BadModulus { p, m });
            }
            exp[k] = idx as u16;
            log[idx as usize] = k as u32;
            let top = cur[m as usize - 1];
            for i in (1..m as usize).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if m == 1 {
                // x is the constant -modulus[0] in GF(p).
                cur[0] = (top * ((p - modulus[0] % p) % p)) % p;
            } else {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c = (*c + top * (p - modulus[i] % p)) % p;
                }
            }
        }
        for k in n - 1..2 * (n - 1) {
            exp[k] = exp[k - (n - 1)];
        }

        let (add, neg) = if p == 2 {
            (Vec::new(), (0..n as u32).map(|a| a as u16).collect())
        } else {
            let mut add = vec![0u16; n * n];
            for a in 0..n as u32 {
                let da = digits(a);
                for b in 0..n as u32 {
                    let db = digits(b);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    add[a as usize * n + b as usize] = encode(&s) as u16;
                }
            }
            let neg = (0..n as u32)
                .map(|a| encode(&digits(a).iter().map(|x| (p - x) % p).collect::<Vec<_>>()) as u16)
                .collect();
            (add, neg)
        };

        Ok(FieldSpec { p, m, order, modulus, exp, log, add, neg })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Modulus coefficients, lowest degree first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The square root of the order when the order is an even power of p.
    pub fn subfield_order(&self) -> Option<u32> {
        (self.m % 2 == 0).then(|| self.p.pow(self.m / 2))
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        if self.p == 2 {
            a ^ b
        } else {
            self.add[a as usize * self.order as usize + b as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    #[inline]
    pub fn inv(&self, a: u16) -> Option<u16> {
        if a == 0 {
            None
        } else {
            let l = self.log[a as usize];
            Some(self.exp[((self.order - 1 - l) % (self.order - 1)) as usize])
        }
    }

    pub fn pow(&self, a: u16, e: u64) -> u16 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.order as u64 - 1));
        self.exp[(l % (self.order as u64 - 1)) as usize]
    }

    /// The primitive element `x`, i.e. the generator of the multiplicative group.
    pub fn generator(&self) -> u16 {
        self.exp[1]
    }

    pub fn element(&self, index: u32) -> Result<FieldElement<'_>, FieldError> {
        if index >= self.order {
            return Err(FieldError::IndexOutOfRange { index, order: self.order });
        }
        Ok(FieldElement { field: self, index: index as u16 })
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement { field: self, index: 0 }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement { field: self, index: 1 }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> + '_ {
        (0..self.order).map(move |i| FieldElement { field: self, index: i as u16 })
    }

    /// `a^(q+1)` where `q^2` is the field order.
    pub fn norm_to_subfield(&self, a: u16) -> Result<u16, FieldError> {
        let q = self.subfield_order().ok_or(FieldError::NotASquareOrder(self.order))?;
        Ok(self.pow(a, q as u64 + 1))
    }

    /// `a^q + a` where `q^2` is the field order.
    pub fn trace_to_subfield(&self, a: u16) -> Result<u16, FieldError> {
        let q = self.subfield_order().ok_or(FieldError::NotASquareOrder(self.order))?;
        Ok(self.add(self.pow(a, q as u64), a))
    }
}

/// A checked element carrying a reference to its field.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FieldSpec,
    index: u16,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})[{}]", self.field.p, self.field.m, self.index)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.field == other.field
    }
}

impl Eq for FieldElement<'_> {}

impl<'f> FieldElement<'f> {
    pub fn index(&self) -> u16 {
        self.index
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    fn wrap(&self, index: u16) -> Self {
        FieldElement { field: self.field, index }
    }

    pub fn add(self, other: Self) -> Result<Self, FieldError> {
        self.same_field(&other)?;
        Ok(self.wrap(self.field.add(self.index, other.index)))
    }

    pub fn sub(self, other: Self) -> Result<Self, FieldError> {
        self.same_field(&other)?;
        Ok(self.wrap(self.field.sub(self.index, other.index)))
    }

    pub fn mul(self, other: Self) -> Result<Self, FieldError> {
        self.same_field(&other)?;
        Ok(self.wrap(self.field.mul(self.index, other.index)))
    }

    pub fn div(self, other: Self) -> Result<Self, FieldError> {
        self.same_field(&other)?;
        let inv = self.field.inv(other.index).ok_or(FieldError::DivisionByZero)?;
        Ok(self.wrap(self.field.mul(self.index, inv)))
    }

    pub fn neg(self) -> Self {
        self.wrap(self.field.neg(self.index))
    }

    pub fn inv(self) -> Result<Self, FieldError> {
        self.field.inv(self.index).map(|i| self.wrap(i)).ok_or(FieldError::DivisionByZero)
    }

    pub fn pow(self, e: u64) -> Self {
        self.wrap(self.field.pow(self.index, e))
    }

    pub fn norm_to_subfield(self) -> Result<Self, FieldError> {
        self.field.norm_to_subfield(self.index).map(|i| self.wrap(i))
    }

    pub fn trace_to_subfield(self) -> Result<Self, FieldError> {
        self.field.trace_to_subfield(self.index).map(|i| self.wrap(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_and_generator() {
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let a = f.generator();
        assert_eq!(a, 2);
        // alpha^2 = alpha + 1
        assert_eq!(f.mul(a, a), 3);
        assert_eq!(f.inv(a), Some(3));
    }

    #[test]
    fn gf9_conway_and_irreducible() {
        let f = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[2, 2, 1]);
        // x^2 + 2x + 2 has no root in GF(3)
        for x in 0..3u32 {
            assert_ne!((x * x + 2 * x + 2) % 3, 0);
        }
        for a in 1..9u16 {
            assert_eq!(f.pow(a, 8), 1);
        }
    }

    #[test]
    fn order_caps() {
        assert_eq!(FieldSpec::new(2, 9).unwrap().order(), 512);
        assert_eq!(FieldSpec::new(2, 17).unwrap_err(), FieldError::OrderTooLarge { p: 2, m: 17 });
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(FieldSpec::new(3, 7).unwrap_err(), FieldError::NoBundledModulus { p: 3, m: 7 });
    }

    #[test]
    fn inverse_by_search_in_gf4() {
        let f = FieldSpec::new(2, 2).unwrap();
        let alpha = f.element(2).unwrap();
        let found = f.elements().find(|b| alpha.mul(*b).unwrap() == f.one()).unwrap();
        assert_eq!(alpha.inv().unwrap(), found);
        assert_eq!(found.index(), 3);
    }

    #[test]
    fn norm_and_trace_small() {
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.norm_to_subfield(0).unwrap(), 0);
        assert_eq!(f.trace_to_subfield(0).unwrap(), 0);
        assert_eq!(f.norm_to_subfield(2).unwrap(), 1);
        let g9 = FieldSpec::new(3, 2).unwrap();
        let ones = (0..9u16).filter(|&a| g9.norm_to_subfield(a).unwrap() == 1).count();
        assert_eq!(ones, 4);
        let g8 = FieldSpec::new(2, 3).unwrap();
        assert_eq!(g8.norm_to_subfield(1), Err(FieldError::NotASquareOrder(8)));
    }

    #[test]
    fn mismatch_is_an_error() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let f9 = FieldSpec::new(3, 2).unwrap();
        let a = f4.one();
        let b = f9.one();
        assert_eq!(a.add(b), Err(FieldError::FieldMismatch));
        assert_eq!(f4.zero().inv(), Err(FieldError::DivisionByZero));
    }

    fn bundled_small_fields() -> Vec<FieldSpec> {
        conway::CONWAY
            .iter()
            .filter(|(p, m, _)| p.pow(*m) <= 256)
            .map(|(p, m, _)| FieldSpec::new(*p, *m).unwrap())
            .collect()
    }

    #[test]
    fn axioms_exhaustive_up_to_256() {
        for f in bundled_small_fields() {
            let n = f.order() as u16;
            let p = f.characteristic() as u64;
            for a in 1..n {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "{f:?} a={a}");
            }
            for a in 0..n {
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in 0..n {
                    let lhs = f.pow(f.add(a, b), p);
                    let rhs = f.add(f.pow(a, p), f.pow(b, p));
                    assert_eq!(lhs, rhs, "Frobenius {f:?} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn norm_multiplicative_trace_linear_surjective() {
        for (p, m) in [(2, 2), (3, 2), (2, 4), (5, 2)] {
            let f = FieldSpec::new(p, m).unwrap();
            let q = f.subfield_order().unwrap() as u64;
            let n = f.order() as u16;
            let in_subfield = |x: u16| f.pow(x, q) == x;
            let subfield: Vec<u16> = (0..n).filter(|&x| in_subfield(x)).collect();
            assert_eq!(subfield.len() as u64, q);
            let mut image = std::collections::BTreeSet::new();
            for a in 0..n {
                let t = f.trace_to_subfield(a).unwrap();
                assert!(in_subfield(t));
                assert!(in_subfield(f.norm_to_subfield(a).unwrap()));
                image.insert(t);
                for b in 0..n {
                    assert_eq!(
                        f.norm_to_subfield(f.mul(a, b)).unwrap(),
                        f.mul(f.norm_to_subfield(a).unwrap(), f.norm_to_subfield(b).unwrap())
                    );
                    assert_eq!(
                        f.trace_to_subfield(f.add(a, b)).unwrap(),
                        f.add(f.trace_to_subfield(a).unwrap(), f.trace_to_subfield(b).unwrap())
                    );
                }
                for &c in &subfield {
                    assert_eq!(
                        f.trace_to_subfield(f.mul(c, a)).unwrap(),
                        f.mul(c, f.trace_to_subfield(a).unwrap())
                    );
                }
            }
            assert_eq!(image.len() as u64, q);
        }
    }

    #[test]
    fn every_bundled_modulus_builds() {
        for (p, m, _) in conway::CONWAY {
            let f = FieldSpec::new(*p, *m).unwrap();
            assert_eq!(f.order(), p.pow(*m));
        }
    }
}
