//! Truncated formal power series with exact rational coefficients.
//!
//! A `TruncatedSeries` of order `N` stores the coefficients of `x^0 .. x^N`
//! densely; everything above `x^N` is discarded. Two design rules hold
//! throughout:
//!
//! - All arithmetic between two series requires equal orders. Mismatches
//!   panic rather than silently coercing: a silent truncation mismatch is
//!   the classic bug in genus computations.
//! - Coefficients are exact rationals end to end. There is no floating
//!   point anywhere in this module.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::bigint::BigInt;
use num::traits::One;

use crate::rational::Rational;

/// The elementary characteristic series the genus engine is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementaryKind {
    /// `sinh(x)/x`
    SinhOverX,
    /// `cosh(x)`
    Cosh,
    /// `x/tanh(x)`, the characteristic series of the L-genus
    XOverTanh,
    /// `(x/2)/sinh(x/2)`, the characteristic series of the A-hat genus
    XHalfOverSinhHalf,
}

/// A univariate formal power series truncated at a fixed order.
///
/// ```
/// use ci_hamilton::series::TruncatedSeries;
///
/// let f = TruncatedSeries::from_integers(&[1, 1, 0]); // 1 + x + O(x^3)
/// let g = &f * &f.inv();
/// assert!(g.is_one());
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// `coeffs[k]` is the coefficient of `x^k`; length is `order + 1`.
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Number of retained coefficients beyond degree 0.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`. Panics if `k` exceeds the order: coefficients
    /// beyond the truncation are unknown, not zero.
    pub fn coefficient(&self, k: usize) -> &Rational {
        assert!(
            k <= self.order(),
            "coefficient x^{} is beyond truncation order {}",
            k,
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// Drop coefficients above `order`. Truncation is always explicit;
    /// binary operations never do this on their own.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot truncate order-{} series up to order {}",
            self.order(),
            order
        );
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiplicative inverse at the same order, by coefficient recursion.
    /// Panics if the constant term is zero (the series is not a unit).
    pub fn inv(&self) -> Self {
        assert!(
            !self.coeffs[0].is_zero(),
            "cannot invert a series with zero constant term"
        );
        let order = self.order();
        let c0_inv = &Rational::one() / &self.coeffs[0];
        let mut out = vec![Rational::zero(); order + 1];
        out[0] = c0_inv.clone();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &(&self.coeffs[k] * &out[n - k]);
            }
            out[n] = -(&c0_inv * &acc);
        }
        TruncatedSeries { coeffs: out }
    }

    /// Nonnegative integer power by binary exponentiation.
    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitute `x -> d*x`: multiply the coefficient of `x^k` by `d^k`.
    /// The only substitutions the genus engine needs are linear.
    pub fn scale_variable(&self, d: u32) -> Self {
        let factor = BigInt::from(d);
        let mut power = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    power *= &factor;
                }
                let mut scaled = c.clone();
                scaled.scale(&power);
                scaled
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Exact Taylor expansion of one of the elementary characteristic
    /// series, to the requested order.
    ///
    /// `sinh(x)/x` and `cosh(x)` come straight from factorials;
    /// `x/tanh(x)` is `cosh(x)` divided by `sinh(x)/x`, and
    /// `(x/2)/sinh(x/2)` is the inverse of the even series `sinh(x/2)/(x/2)`.
    /// Building the latter two by series division keeps the only
    /// hand-entered constants to factorials.
    pub fn elementary(kind: ElementaryKind, order: usize) -> Self {
        match kind {
            ElementaryKind::SinhOverX => Self::even_reciprocal_factorials(order, 1, 1),
            ElementaryKind::Cosh => Self::even_reciprocal_factorials(order, 0, 1),
            ElementaryKind::XOverTanh => {
                let cosh = Self::elementary(ElementaryKind::Cosh, order);
                let sinh_over_x = Self::elementary(ElementaryKind::SinhOverX, order);
                &cosh * &sinh_over_x.inv()
            }
            ElementaryKind::XHalfOverSinhHalf => {
                // sinh(x/2)/(x/2) = sum x^{2k} / (4^k (2k+1)!)
                Self::even_reciprocal_factorials(order, 1, 4).inv()
            }
        }
    }

    /// Even series `sum_k x^{2k} / (scale^k * (2k + shift)!)`.
    ///
    /// `shift = 0, scale = 1` gives cosh; `shift = 1, scale = 1` gives
    /// sinh(x)/x; `shift = 1, scale = 4` gives sinh(x/2)/(x/2).
    fn even_reciprocal_factorials(order: usize, shift: u32, scale: u32) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        // factorial = (2k + shift)!, built incrementally
        let mut factorial = BigInt::one();
        for m in 2..=shift {
            factorial *= BigInt::from(m);
        }
        let mut scale_power = BigInt::one();
        for k in 0..=(order / 2) {
            if k > 0 {
                let m = 2 * k as u32 + shift;
                factorial *= BigInt::from(m - 1);
                factorial *= BigInt::from(m);
                scale_power *= BigInt::from(scale);
            }
            coeffs[2 * k] = Rational::new(BigInt::one(), &factorial * &scale_power);
        }
        TruncatedSeries { coeffs }
    }

    fn assert_same_order(&self, other: &Self, op: &str) {
        assert_eq!(
            self.order(),
            other.order(),
            "series order mismatch in {}: {} vs {}",
            op,
            self.order(),
            other.order()
        );
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_order(rhs, "add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_order(rhs, "sub");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product truncated to the common order.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_order(rhs, "mul");
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += &(a * b);
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*x", c)?,
                _ => write!(f, "({})*x^{}", c, k)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
