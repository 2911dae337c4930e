//! Exact rational scalars and their text form.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};

/// Scalar field for weights and pairings.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
        None => s.parse::<i64>().map(q).map_err(|_| bad()),
    }
}

/// Formats as `p` for integers and `p/q` otherwise.
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn to_big(x: &Q) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

pub fn is_nonneg_integer(x: &Q) -> bool {
    x.is_integer() && !x.is_negative()
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Q>) -> i64 {
    xs.into_iter()
        .fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()))
}
