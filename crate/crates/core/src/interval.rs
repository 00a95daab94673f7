//! Directed-rounding interval arithmetic on binary fixed-point numbers, used
//! for every floor/ceiling of an expression involving natural logarithms.
//!
//! An expression is supplied as a closure from a precision (fractional
//! bits) to an enclosing [`Interval`]. [`floor_of`] and [`ceil_of`] retry at
//! doubled precision until both ends of the enclosure round to the same
//! integer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

const START_BITS: u32 = 64;
const MAX_BITS: u32 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("could not decide the rounding within {0} bits of precision")]
    PrecisionExhausted(u32),
    #[error("logarithm of a non-positive number")]
    LogDomain,
}

/// `[lo, hi] / 2^bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Interval {
    pub fn int(v: i64, bits: u32) -> Self {
        let x = BigInt::from(v) << bits;
        Interval { lo: x.clone(), hi: x, bits }
    }

    /// Enclosure of `num / den`.
    pub fn ratio(num: i64, den: i64, bits: u32) -> Self {
        assert!(den != 0);
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let n = BigInt::from(num) << bits;
        let d = BigInt::from(den);
        Interval { lo: floor_div(&n, &d), hi: ceil_div(&n, &d), bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn add(&self, o: &Interval) -> Interval {
        assert_eq!(self.bits, o.bits);
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, bits: self.bits }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        assert_eq!(self.bits, o.bits);
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo, bits: self.bits }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        assert_eq!(self.bits, o.bits);
        let products = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = products.iter().min().expect("nonempty");
        let max = products.iter().max().expect("nonempty");
        let scale = BigInt::one() << self.bits;
        Interval { lo: floor_div(min, &scale), hi: ceil_div(max, &scale), bits: self.bits }
    }

    pub fn mul_int(&self, k: i64) -> Interval {
        let k = BigInt::from(k);
        let (a, b) = (&self.lo * &k, &self.hi * &k);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval { lo, hi, bits: self.bits }
    }

    pub fn div_int(&self, k: i64) -> Interval {
        assert!(k > 0);
        let k = BigInt::from(k);
        Interval { lo: floor_div(&self.lo, &k), hi: ceil_div(&self.hi, &k), bits: self.bits }
    }

    pub fn pow(&self, e: u32) -> Interval {
        let mut r = Interval::int(1, self.bits);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Enclosure of `ln(num / den)`; exact zero when the argument is 1.
    pub fn ln_ratio(num: i64, den: i64, bits: u32) -> Result<Interval, IntervalError> {
        if num <= 0 || den <= 0 {
            return Err(IntervalError::LogDomain);
        }
        if num == den {
            return Ok(Interval::int(0, bits));
        }
        let guard = bits + 64;
        let (num, den) = (BigInt::from(num), BigInt::from(den));
        // num/den = 2^k * y with y in [1, 2)
        let mut k: i64 = num.bits() as i64 - den.bits() as i64;
        let (mut a, mut b) = if k >= 0 { (num.clone(), &den << k as u64) } else { (&num << (-k) as u64, den.clone()) };
        if a < b {
            a <<= 1;
            k -= 1;
        }
        if a >= &b << 1 {
            b <<= 1;
            k += 1;
        }
        let (ln_y, err_y) = atanh_series(&(&a - &b), &(&a + &b), guard);
        let (ln2, err2) = atanh_series(&BigInt::one(), &BigInt::from(3), guard);
        let approx = (ln_y << 1) + (ln2 << 1) * BigInt::from(k);
        let err = BigInt::from(2 * err_y + 2 * err2 * k.unsigned_abs() + 2);
        let shift = BigInt::one() << (guard - bits);
        Ok(Interval {
            lo: floor_div(&(&approx - &err), &shift),
            hi: ceil_div(&(&approx + &err), &shift),
            bits,
        })
    }

    pub fn floor_bounds(&self) -> (BigInt, BigInt) {
        let scale = BigInt::one() << self.bits;
        (floor_div(&self.lo, &scale), floor_div(&self.hi, &scale))
    }

    pub fn ceil_bounds(&self) -> (BigInt, BigInt) {
        let scale = BigInt::one() << self.bits;
        (ceil_div(&self.lo, &scale), ceil_div(&self.hi, &scale))
    }

    /// Midpoint as a float, for display only.
    pub fn approx(&self) -> f64 {
        let mid: BigInt = (&self.lo + &self.hi) / 2;
        let shift = self.bits.saturating_sub(52);
        let m = (mid >> shift).to_f64().unwrap_or(f64::NAN);
        m / 2f64.powi((self.bits - shift) as i32)
    }
}

/// `atanh(p/q) = Σ z^{2i+1}/(2i+1)` at `bits` fractional bits, for
/// `0 ≤ p/q ≤ 1/3`. Returns the approximation and an error bound in ulps.
fn atanh_series(p: &BigInt, q: &BigInt, bits: u32) -> (BigInt, u64) {
    debug_assert!(!p.is_negative() && p * 3 <= *q);
    if p.is_zero() {
        return (BigInt::zero(), 0);
    }
    let scale = BigInt::one() << bits;
    let z = floor_div(&(p << bits), q);
    let z2 = floor_div(&((p * p) << bits), &(q * q));
    let mut power = z;
    let mut sum = BigInt::zero();
    let mut err: u64 = 0;
    let mut i: u64 = 0;
    while !power.is_zero() {
        sum += &power / BigInt::from(2 * i + 1);
        err += i + 3;
        power = floor_div(&(&power * &z2), &scale);
        i += 1;
    }
    // the neglected tail is below one ulp once the power underflows
    (sum, err + 2)
}

fn resolve<F>(f: F, bounds: fn(&Interval) -> (BigInt, BigInt)) -> Result<i64, IntervalError>
where
    F: Fn(u32) -> Result<Interval, IntervalError>,
{
    let mut bits = START_BITS;
    loop {
        let iv = f(bits)?;
        let (a, b) = bounds(&iv);
        if a == b {
            return Ok(a.to_i64().expect("result fits in i64"));
        }
        if bits >= MAX_BITS {
            return Err(IntervalError::PrecisionExhausted(bits));
        }
        bits *= 2;
    }
}

/// `⌊x⌋` for the value enclosed by `f(bits)` at every precision.
pub fn floor_of<F>(f: F) -> Result<i64, IntervalError>
where
    F: Fn(u32) -> Result<Interval, IntervalError>,
{
    resolve(f, Interval::floor_bounds)
}

/// `⌈x⌉` for the value enclosed by `f(bits)` at every precision.
pub fn ceil_of<F>(f: F) -> Result<i64, IntervalError>
where
    F: Fn(u32) -> Result<Interval, IntervalError>,
{
    resolve(f, Interval::ceil_bounds)
}

/// `⌊δ + δ·ln(num/den)⌋`.
pub fn floor_delta_plus_delta_ln(delta: i64, num: i64, den: i64) -> Result<i64, IntervalError> {
    floor_of(|bits| {
        let d = Interval::int(delta, bits);
        Ok(d.add(&Interval::ln_ratio(num, den, bits)?.mul_int(delta)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enclose_ln(num: i64, den: i64) {
        let iv = Interval::ln_ratio(num, den, 80).unwrap();
        let x = (num as f64 / den as f64).ln();
        assert!((iv.approx() - x).abs() < 1e-12, "ln({num}/{den})");
        let (lo, hi) = (iv.lo.clone(), iv.hi.clone());
        assert!(lo <= hi);
        assert!((&hi - &lo) < BigInt::from(1u64 << 20));
    }

    #[test]
    fn logarithms() {
        for (a, b) in [(2, 1), (3, 1), (1, 3), (16, 3), (7, 5), (1000, 999), (625, 7), (1, 4096)] {
            enclose_ln(a, b);
        }
        assert!(Interval::ln_ratio(5, 5, 64).unwrap().is_exact());
        assert_eq!(Interval::ln_ratio(0, 1, 64), Err(IntervalError::LogDomain));
    }

    #[test]
    fn floors() {
        // 3 + 3 ln 3 = 6.2958...
        assert_eq!(floor_delta_plus_delta_ln(3, 3, 1), Ok(6));
        assert_eq!(floor_delta_plus_delta_ln(1, 1, 1), Ok(1));
        // 4 + 4 ln 4 = 9.545...
        assert_eq!(floor_delta_plus_delta_ln(4, 4, 1), Ok(9));
        assert_eq!(floor_delta_plus_delta_ln(16, 16, 16), Ok(16));
        assert_eq!(ceil_of(|b| Ok(Interval::ratio(7, 2, b))), Ok(4));
        assert_eq!(floor_of(|b| Ok(Interval::ratio(-7, 2, b))), Ok(-4));
        assert_eq!(ceil_of(|b| Ok(Interval::int(5, b))), Ok(5));
    }

    #[test]
    fn agrees_with_floats_away_from_integers() {
        for delta in 1..60i64 {
            for r in [(delta, 1), (64, delta), (25, delta.min(25))] {
                let x = delta as f64 + delta as f64 * (r.0 as f64 / r.1 as f64).ln();
                if (x - x.round()).abs() > 1e-6 {
                    assert_eq!(floor_delta_plus_delta_ln(delta, r.0, r.1).unwrap(), x.floor() as i64);
                }
            }
        }
    }
}
