//! Terse constructors for writing closed forms.

use num_bigint::BigInt;

use super::{LaurentPoly, Rational, Var};

pub use super::rational::{big, int, ratio};

pub fn q(k: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::Q, k)
}

pub fn t(k: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::T, k)
}

pub fn u(k: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::U, k)
}

pub fn v(k: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::V, k)
}

/// `(uv)^k`.
pub fn uv(k: i32) -> LaurentPoly {
    u(k) * v(k)
}

pub fn c(n: i64) -> LaurentPoly {
    LaurentPoly::int(n)
}

pub fn cr(r: &Rational) -> LaurentPoly {
    LaurentPoly::constant(r.clone())
}

/// `1 - x`.
pub fn one_minus(x: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::one() - x
}

/// `1 + x`.
pub fn one_plus(x: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::one() + x
}

pub fn two_pow(k: u32) -> Rational {
    Rational::from_integer(BigInt::from(1) << k)
}

/// `binom(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(12, 3), BigInt::from(220));
        assert_eq!(binomial(12, 2), BigInt::from(66));
        assert_eq!(binomial(4, -1), BigInt::from(0));
        assert_eq!(binomial(4, 5), BigInt::from(0));
        assert_eq!(
            binomial(48, 24),
            "32247603683100".parse::<BigInt>().unwrap()
        );
    }
}
