//! Small exact-integer helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact quotient, or an error naming the failed division.
pub(crate) fn exact_div(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if b.is_zero() {
        return Err(Error::InexactDivision(a.clone(), b.clone()));
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision(a.clone(), b.clone()))
    }
}

pub(crate) fn div_exact_opt(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if b.is_zero() {
        return None;
    }
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

/// Floor of the square root; `None` for negative input.
pub(crate) fn isqrt(a: &BigInt) -> Option<BigInt> {
    if a.is_negative() {
        None
    } else {
        Some(a.sqrt())
    }
}

pub(crate) fn exact_sqrt(a: &BigInt) -> Option<BigInt> {
    let s = isqrt(a)?;
    (&s * &s == *a).then_some(s)
}

/// Returns `(g, s, t)` with `g = s*a + t*b` and `g >= 0`.
pub(crate) fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub(crate) fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

pub(crate) fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Inclusive range `lo..=hi` over big integers.
pub(crate) fn range_inclusive(lo: BigInt, hi: BigInt) -> impl Iterator<Item = BigInt> {
    let mut cur = lo;
    core::iter::from_fn(move || {
        if cur > hi {
            None
        } else {
            let out = cur.clone();
            cur += 1;
            Some(out)
        }
    })
}

/// `0, 1, -1, 2, -2, ..., bound, -bound`.
pub(crate) fn centered_range(bound: &BigInt) -> impl Iterator<Item = BigInt> {
    let bound = bound.clone();
    core::iter::once(BigInt::zero()).chain(
        range_inclusive(BigInt::one(), bound).flat_map(|x| [x.clone(), -x]),
    )
}

/// Sort key matching [`centered_range`].
pub(crate) fn centered_key(x: &BigInt) -> (BigInt, bool) {
    (x.abs(), x.is_negative())
}
