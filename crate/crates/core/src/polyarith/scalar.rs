use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Reduced rational with positive denominator; `0` is always `0/1`.
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Builds `num/den` in lowest terms. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_from_int(v: Int) -> Rat {
    Rat::from_integer(v)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Int {
    if n < 0 || k < 0 || k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Exact integer quotient; `Error::Internal` if `den` does not divide `num`.
pub fn exact_div(num: &Int, den: &Int, context: &str) -> Result<Int> {
    if den.is_zero() {
        return Err(Error::Internal(format!("{context}: division by zero")));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{context}: {num}/{den} is not an integer")));
    }
    Ok(q)
}

/// Converts a rational known to be integral; `Error::Internal` otherwise.
pub fn expect_integer(r: &Rat, context: &str) -> Result<Int> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::Internal(format!("{context}: {r} is not an integer")))
    }
}

/// Lossless `"p/q"` text form (denominator always present).
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().ok()?;
            let q: Int = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => s.parse::<Int>().ok().map(Rat::from_integer),
    }
}

/// The rational with the smallest denominator in the closed interval `[lo, hi]`
/// (ties broken by smallest absolute numerator). Requires `lo <= hi`.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rat::zero()
    }
}

// Stern-Brocot descent via continued fractions, for 0 < lo <= hi.
fn simplest_positive(lo: &Rat, hi: &Rat) -> Rat {
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if hi.floor() > fl {
        return fl + Rat::one();
    }
    // lo and hi share the integer part and lo is not an integer
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    let inner = simplest_positive(&hi_frac.recip(), &lo_frac.recip());
    fl + inner.recip()
}
