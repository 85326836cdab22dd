//! Exact quadratic surds `a + b*sqrt(d)` with rational `a`, `b` and a
//! squarefree integer radicand `d`.
//!
//! These are closed under the symmetric 2x2 eigenvalue formula, which is all
//! the spectral module needs. Comparison is exact (repeated squaring over the
//! rationals); decimal rendering goes through big-integer square roots so the
//! printed tables are bit-stable.

use crate::rational::Rational;
use num::bigint::BigInt;
use num::traits::{Euclid, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// `a + b*sqrt(d)`, normalized so that `d` is squarefree and `d = 0` exactly
/// when `b = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: Rational,
    b: Rational,
    d: BigInt,
}

/// Splits `n >= 0` as `s^2 * d` with `d` squarefree; returns `(s, d)`.
///
/// Trial division up to 10^6 followed by a perfect-square check on the
/// cofactor, which is exhaustive for any cofactor below 10^18.
pub fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_negative(), "negative radicand");
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut s = BigInt::one();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= m && p <= limit {
        let p2 = &p * &p;
        while (&m % &p2).is_zero() {
            m /= &p2;
            s *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    let r = m.sqrt();
    if &r * &r == m {
        s *= &r;
        m = BigInt::one();
    }
    (s, m)
}

impl QuadraticSurd {
    pub fn from_rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    /// Builds `a + b*sqrt(d)` from raw parts, normalizing the radicand.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() || d.is_zero() {
            return Self::from_rational(a);
        }
        let (s, df) = extract_square(&d);
        if df.is_one() {
            Self::from_rational(a + b * Rational::from_integer(s))
        } else {
            Self {
                a,
                b: b * Rational::from_integer(s),
                d: df,
            }
        }
    }

    /// Exact square root of a nonnegative rational.
    pub fn sqrt_of(x: &Rational) -> Self {
        assert!(!x.is_negative(), "sqrt of negative rational");
        if x.is_zero() {
            return Self::zero();
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let m = x.numer() * x.denom();
        let (s, d) = extract_square(&m);
        let b = Rational::new(s, x.denom().clone());
        if d.is_one() {
            Self::from_rational(b)
        } else {
            Self {
                a: Rational::zero(),
                b,
                d,
            }
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> (&Rational, &BigInt) {
        (&self.b, &self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn expect_rational(&self, context: &str) -> Rational {
        assert!(self.is_rational(), "irrational value in {context}: {self}");
        self.a.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        Self {
            a: &self.a + r,
            b: self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            a: &self.a * r,
            b: &self.b * r,
            d: self.d.clone(),
        }
    }

    /// Sum of two surds sharing a radicand (or with either side rational).
    pub fn add(&self, other: &Self) -> Self {
        if self.b.is_zero() {
            return other.add_rational(&self.a);
        }
        if other.b.is_zero() {
            return self.add_rational(&other.a);
        }
        assert_eq!(self.d, other.d, "adding surds with different radicands");
        Self::new(
            &self.a + &other.a,
            &self.b + &other.b,
            self.d.clone(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product of two surds sharing a radicand (or with either side rational).
    pub fn mul(&self, other: &Self) -> Self {
        if self.b.is_zero() {
            return other.scale(&self.a);
        }
        if other.b.is_zero() {
            return self.scale(&other.a);
        }
        assert_eq!(
            self.d, other.d,
            "multiplying surds with different radicands"
        );
        let d = Rational::from_integer(self.d.clone());
        Self::new(
            &self.a * &other.a + &self.b * &other.b * d,
            &self.a * &other.b + &self.b * &other.a,
            self.d.clone(),
        )
    }

    /// Exact sign: -1, 0, +1.
    pub fn signum(&self) -> i32 {
        let sa = rational_sign(&self.a);
        if self.b.is_zero() {
            return sa;
        }
        let sb = rational_sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a^2 against b^2*d.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Exact comparison of two surds with arbitrary (possibly different)
    /// radicands, via sign determination of the difference.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let r = &self.a - &other.a;
        let sign = sign_of_two_radical_sum(&r, &self.b, &self.d, &(-other.b.clone()), &other.d);
        match sign {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    /// Value equality irrespective of internal representation.
    pub fn eq_value(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }

    pub fn to_f64(&self) -> f64 {
        let mut v = rational_to_f64(&self.a);
        if !self.b.is_zero() {
            v += rational_to_f64(&self.b) * self.d.to_f64().unwrap_or(f64::NAN).sqrt();
        }
        v
    }

    /// Deterministic fixed-point rendering with `places` digits after the
    /// point, computed with integer square roots (round half away from zero).
    pub fn to_decimal_string(&self, places: u32) -> String {
        let guard = 8u32;
        let pow = BigInt::from(10u32).pow(places + guard);
        // Common denominator form (A + B*sqrt(d)) / Q, Q > 0.
        let q = self.a.denom() * self.b.denom();
        let a_int = self.a.numer() * self.b.denom();
        let b_int = self.b.numer() * self.a.denom();
        let scaled_a = &a_int * &pow;
        let irr = if b_int.is_zero() {
            BigInt::zero()
        } else {
            let sq = &b_int * &b_int * &self.d * &pow * &pow;
            let root = sq.sqrt();
            if b_int.is_negative() {
                -(root + BigInt::one())
            } else {
                root
            }
        };
        let total = scaled_a + irr;
        let v = total.div_euclid(&q);
        // Round the guard digits half away from zero.
        let guard_pow = BigInt::from(10u32).pow(guard);
        let half = &guard_pow / 2;
        let rounded = if v.is_negative() {
            (&v - &half) / &guard_pow
        } else {
            (&v + &half) / &guard_pow
        };
        format_scaled_decimal(&rounded, places)
    }
}

fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

/// Sign of `r + p*sqrt(d1) + q*sqrt(d2)` with squarefree radicands.
fn sign_of_two_radical_sum(r: &Rational, p: &Rational, d1: &BigInt, q: &Rational, d2: &BigInt) -> i32 {
    if p.is_zero() && q.is_zero() {
        return rational_sign(r);
    }
    if q.is_zero() {
        return QuadraticSurd::new(r.clone(), p.clone(), d1.clone()).signum();
    }
    if p.is_zero() {
        return QuadraticSurd::new(r.clone(), q.clone(), d2.clone()).signum();
    }
    if d1 == d2 {
        return QuadraticSurd::new(r.clone(), p + q, d1.clone()).signum();
    }
    // Split as (r + p*sqrt(d1)) + q*sqrt(d2) and square once.
    let lhs = QuadraticSurd::new(r.clone(), p.clone(), d1.clone());
    let sl = lhs.signum();
    let sr = rational_sign(q);
    if sl == 0 {
        return sr;
    }
    if sl == sr {
        return sl;
    }
    // Opposite signs: the sum has the sign of whichever square is larger.
    let lhs_sq = lhs.mul(&lhs);
    let rhs_sq = QuadraticSurd::from_rational(q * q * Rational::from_integer(d2.clone()));
    let diff = lhs_sq.sub(&rhs_sq);
    match diff.signum() {
        1 => sl,
        -1 => sr,
        _ => 0,
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back through a scaled integer division for huge operands.
        let scale = BigInt::from(10u64).pow(17);
        let scaled = (r * Rational::from_integer(scale.clone())).to_integer();
        scaled.to_f64().unwrap() / 1e17
    })
}

/// Formats `v` (an integer holding the value scaled by 10^places) with a
/// decimal point inserted.
pub fn format_scaled_decimal(v: &BigInt, places: u32) -> String {
    let negative = v.is_negative();
    let abs = v.abs();
    let pow = BigInt::from(10u32).pow(places);
    let ip = &abs / &pow;
    let fp = &abs % &pow;
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{ip}")
    } else {
        format!(
            "{sign}{ip}.{fp:0width$}",
            width = places as usize
        )
    }
}

impl fmt::Display for QuadraticSurd {
    /// Renders `p/q + r/s*sqrt(d)`; pure rationals render as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let surd = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if self.b == -Rational::one() {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        if self.a.is_zero() {
            write!(f, "{surd}")
        } else if self.b.is_negative() {
            let mag = -self.b.clone();
            let mag_str = if mag.is_one() {
                format!("sqrt({})", self.d)
            } else {
                format!("{}*sqrt({})", mag, self.d)
            };
            write!(f, "{} - {}", self.a, mag_str)
        } else {
            write!(f, "{} + {}", self.a, surd)
        }
    }
}

impl fmt::Debug for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn squarefree_extraction() {
        let (s, d) = extract_square(&BigInt::from(72));
        assert_eq!((s, d), (BigInt::from(6), BigInt::from(2)));
        let (s, d) = extract_square(&BigInt::from(25));
        assert_eq!((s, d), (BigInt::from(5), BigInt::from(1)));
        let (s, d) = extract_square(&BigInt::from(1509308377u64));
        assert_eq!(s, BigInt::from(1));
        assert_eq!(d, BigInt::from(1509308377u64));
    }

    #[test]
    fn sqrt_of_rational() {
        // sqrt(25/16) = 5/4 exactly
        let s = QuadraticSurd::sqrt_of(&ratio(25, 16));
        assert!(s.is_rational());
        assert_eq!(s.rational_part(), &ratio(5, 4));
        // sqrt(5)/2
        let s = QuadraticSurd::sqrt_of(&ratio(5, 4));
        assert!(!s.is_rational());
        assert_eq!(s.surd_part().0, &ratio(1, 2));
    }

    #[test]
    fn exact_signs_and_ordering() {
        // 69821 - 2*sqrt(1509308377) < 0 since 69821^2 < 4*1509308377
        let x = QuadraticSurd::new(int(69821), int(-2), BigInt::from(1509308377u64));
        assert_eq!(x.signum(), -1);
        // sqrt(2) + sqrt(3) > sqrt(10) - 1/10
        let lhs = QuadraticSurd::new(ratio(1, 10), int(1), BigInt::from(2));
        let rhs = QuadraticSurd::new(int(0), int(1), BigInt::from(10));
        // lhs + sqrt(3) vs rhs: check via the two-radical sign helper
        let s = sign_of_two_radical_sum(
            &ratio(1, 10),
            &int(1),
            &BigInt::from(2),
            &int(-1),
            &BigInt::from(10),
        );
        // 1/10 + sqrt(2) - sqrt(10) < 0
        assert_eq!(s, -1);
        assert_eq!(lhs.cmp_exact(&rhs), Ordering::Less);
    }

    #[test]
    fn decimal_rendering() {
        let x = QuadraticSurd::new(int(0), int(1), BigInt::from(2));
        assert_eq!(x.to_decimal_string(6), "1.414214");
        let y = QuadraticSurd::from_rational(ratio(-9, 8));
        assert_eq!(y.to_decimal_string(4), "-1.1250");
        let z = QuadraticSurd::new(int(-3), int(-1), BigInt::from(2));
        assert_eq!(z.to_decimal_string(4), "-4.4142");
    }

    #[test]
    fn eq_value_across_forms() {
        let x = QuadraticSurd::new(int(1), int(2), BigInt::from(8));
        let y = QuadraticSurd::new(int(1), int(4), BigInt::from(2));
        assert!(x.eq_value(&y));
        assert_eq!(x, y);
    }
}
