//! Exact integer and rational arithmetic shared by every module.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// gcd of a list; gcd of the empty list is 0.
pub fn gcd_many<'a, I>(xs: I) -> Int
where
    I: IntoIterator<Item = &'a Int>,
{
    xs.into_iter().fold(Int::zero(), |acc, x| acc.gcd(x))
}

/// lcm of a list of positive integers; lcm of the empty list is 1.
pub fn lcm_many<'a, I>(xs: I) -> Result<Int>
where
    I: IntoIterator<Item = &'a Int>,
{
    let mut acc = Int::one();
    for x in xs {
        if x.is_zero() {
            return Err(Error::LcmZero);
        }
        acc = acc.lcm(x);
    }
    Ok(acc)
}

pub fn int(x: i64) -> Int {
    Int::from(x)
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Exact quotient; `None` when the division is not exact.
pub fn exact_div(num: &Int, den: &Int) -> Option<Int> {
    if den.is_zero() {
        return None;
    }
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}

/// A rational as a non-negative integer, if it is one.
pub fn as_nonneg_int(x: &Rat) -> Option<Int> {
    if x.is_integer() && !x.is_negative() {
        Some(x.to_integer())
    } else {
        None
    }
}

/// Prime factorization by trial division: list of (prime, exponent).
pub fn factorize(n: &Int) -> Vec<(Int, u32)> {
    assert!(n.is_positive(), "factorize expects a positive integer");
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = int(2);
    while &p * &p <= n {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > Int::one() {
        out.push((n, 1));
    }
    out
}

/// Render a rational as "p" or "p/q".
pub fn rat_string(x: &Rat) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_many(&ints(&[2, 3, 3, 18])), int(1));
        assert_eq!(gcd_many(&ints(&[75, 50, 30])), int(5));
        assert_eq!(gcd_many(&ints(&[])), int(0));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_many(&ints(&[2, 3, 3, 18])).unwrap(), int(18));
        assert_eq!(lcm_many(&ints(&[34, 4, 2])).unwrap(), int(68));
        assert_eq!(lcm_many(&ints(&[])).unwrap(), int(1));
        assert!(matches!(lcm_many(&ints(&[3, 0])), Err(Error::LcmZero)));
    }

    #[test]
    fn gcd_lcm_product_identity() {
        for a in 1..40i64 {
            for b in 1..40i64 {
                let xs = ints(&[a, b]);
                assert_eq!(gcd_many(&xs) * lcm_many(&xs).unwrap(), int(a * b));
            }
        }
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(&int(1)), vec![]);
        assert_eq!(factorize(&int(12)), vec![(int(2), 2), (int(3), 1)]);
        assert_eq!(factorize(&int(75)), vec![(int(3), 1), (int(5), 2)]);
        assert_eq!(factorize(&int(97)), vec![(int(97), 1)]);
    }
}
