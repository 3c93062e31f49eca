//! Exact rational scalars and small arithmetic helpers.
//!
//! Every quantity in this library is an arbitrary-precision rational;
//! no floating point appears anywhere in the computation paths.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The scalar type used throughout: an arbitrary-precision reduced fraction.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `n/d` (reduced on construction).
pub fn frac<T: Into<BigInt>, U: Into<BigInt>>(n: T, d: U) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `r^e` for a possibly negative integer exponent. `r` must be nonzero
/// when `e < 0`.
pub fn pow_i(r: &Rational, e: i64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mag = e.unsigned_abs() as u32;
    let p = Rational::new(r.numer().pow(mag), r.denom().pow(mag));
    if e > 0 {
        p
    } else {
        assert!(!r.is_zero(), "negative power of zero");
        p.recip()
    }
}

/// `2^e` for a possibly negative integer exponent.
pub fn two_pow(e: i64) -> Rational {
    pow_i(&rat(2), e)
}

/// `n!` as an exact natural number.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as an exact natural number.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Canonical text form `p/q` with `q > 0` and `gcd(p, q) = 1`.
///
/// The denominator is always written, so integers render as e.g. `3/1`;
/// this keeps data outputs uniform and trivially parseable.
pub fn render(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact square root of a rational, if it is a perfect square.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &sn * &sn == *num && &sd * &sd == *den {
        Some(Rational::new(
            BigInt::from(sn),
            BigInt::from(sd),
        ))
    } else {
        None
    }
}
