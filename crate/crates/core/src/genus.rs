//! Multiplicative genera of complete intersections by coefficient extraction.
//!
//! For a genus with characteristic power series `Q(x)`, `Q(0) = 1`, the value
//! on the complete intersection `X` of dimension `n` and multidegree
//! `(d_1, ..., d_r)` is
//!
//! ```text
//!     (prod_j d_j) * [h^n] ( Q(h)^{n+r+1} / prod_j Q(d_j h) )
//! ```
//!
//! evaluated in exact rational arithmetic at truncation order exactly `n`;
//! higher coefficients never contribute. One engine serves the Euler
//! characteristic (`Q = 1 + x`), the signature (`Q = x/tanh x`, the L-genus)
//! and the A-hat genus (`Q = (x/2)/sinh(x/2)`).

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intersection::CompleteIntersection;
use crate::rational::Rational;
use crate::series::{ElementaryKind, TruncatedSeries};

/// A multiplicative genus, named and carried by its characteristic series.
#[derive(Clone, Debug)]
pub struct GenusSpec {
    name: &'static str,
    q_series: TruncatedSeries,
}

impl GenusSpec {
    /// A custom genus. The constant term of the characteristic series must
    /// be 1.
    pub fn new(name: &'static str, q_series: TruncatedSeries) -> Self {
        assert!(
            q_series.coefficient(0).is_one(),
            "characteristic series of {} must have constant term 1",
            name
        );
        GenusSpec { name, q_series }
    }

    /// Euler characteristic: `Q(x) = 1 + x`.
    pub fn euler(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = Rational::one();
        if order >= 1 {
            coeffs[1] = Rational::one();
        }
        GenusSpec::new("euler", TruncatedSeries::from_coeffs(coeffs))
    }

    /// Signature: `Q(x) = x/tanh(x)` (the L-genus).
    pub fn l_genus(order: usize) -> Self {
        GenusSpec::new(
            "L",
            TruncatedSeries::elementary(ElementaryKind::XOverTanh, order),
        )
    }

    /// A-hat genus: `Q(x) = (x/2)/sinh(x/2)`.
    pub fn a_hat(order: usize) -> Self {
        GenusSpec::new(
            "A-hat",
            TruncatedSeries::elementary(ElementaryKind::XHalfOverSinhHalf, order),
        )
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn q_series(&self) -> &TruncatedSeries {
        &self.q_series
    }
}

/// Evaluate a genus on a complete intersection. The characteristic series
/// must be known at least to order `n`.
pub fn genus_value(ci: &CompleteIntersection, genus: &GenusSpec) -> Result<Rational> {
    let n = ci.n() as usize;
    if genus.q_series.order() < n {
        return Err(Error::InsufficientSeriesOrder {
            required: n,
            actual: genus.q_series.order(),
        });
    }
    let q = genus.q_series.truncated(n);
    let mut denominator = TruncatedSeries::one(n);
    for &d in ci.degrees() {
        denominator = &denominator * &q.scale_variable(d);
    }
    let total = &q.pow(ci.n() + ci.codimension() + 1) * &denominator.inv();
    let mut value = total.coefficient(n).clone();
    value.scale(&degree_product(ci));
    Ok(value)
}

fn degree_product(ci: &CompleteIntersection) -> BigInt {
    ci.degrees()
        .iter()
        .fold(BigInt::one(), |acc, &d| acc * BigInt::from(d))
}

impl CompleteIntersection {
    /// Exact Euler characteristic, via the genus engine with `Q = 1 + x`.
    /// Panics if the result is non-integral or exceeds `i64`: the first
    /// can only be an engine bug, the second means the input is far
    /// outside the supported scan ranges.
    pub fn euler_characteristic(&self) -> i64 {
        let value = genus_value(self, &GenusSpec::euler(self.n() as usize))
            .expect("euler series is constructed at the required order");
        expect_integer(&value, "Euler characteristic", self)
    }

    /// Second, independent route to the Euler characteristic: expand
    /// `(1+h)^{n+r+1} * prod_j (1 + d_j h)^{-1}` directly over big
    /// integers, with binomial coefficients and geometric series, never
    /// touching the rational series engine. Exists purely to cross-check
    /// the genus route.
    pub fn euler_characteristic_direct(&self) -> i64 {
        let n = self.n() as usize;
        let exponent = (self.n() + self.codimension() + 1) as u64;
        // binomial row C(exponent, k) for k = 0..=n
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(n + 1);
        let mut binomial = BigInt::one();
        coeffs.push(binomial.clone());
        for k in 1..=n as u64 {
            if k > exponent {
                coeffs.push(BigInt::zero());
                continue;
            }
            binomial = binomial * BigInt::from(exponent - k + 1) / BigInt::from(k);
            coeffs.push(binomial.clone());
        }
        // convolve with (1 + d h)^{-1} = sum (-d)^k h^k for each degree
        for &d in self.degrees() {
            let neg_d = -BigInt::from(d);
            let mut next = vec![BigInt::zero(); n + 1];
            for (k, slot) in next.iter_mut().enumerate() {
                let mut power = BigInt::one();
                let mut acc = BigInt::zero();
                for i in (0..=k).rev() {
                    acc += &coeffs[i] * &power;
                    if i > 0 {
                        power *= &neg_d;
                    }
                }
                *slot = acc;
            }
            coeffs = next;
        }
        let chi = degree_product(self) * &coeffs[n];
        i64::try_from(chi.clone())
            .unwrap_or_else(|_| panic!("Euler characteristic {} of {} exceeds i64", chi, self))
    }

    /// Exact signature of the intersection form on middle cohomology,
    /// via the L-genus. Only defined when the real dimension is divisible
    /// by 4, i.e. `n` even.
    pub fn signature(&self) -> Result<i64> {
        if !self.n().is_multiple_of(2) {
            return Err(Error::OddComplexDimension(self.n()));
        }
        let value = genus_value(self, &GenusSpec::l_genus(self.n() as usize))?;
        Ok(expect_integer(&value, "signature", self))
    }

    /// Exact A-hat genus. Integral when the intersection is spin of even
    /// complex dimension, rational in general.
    pub fn a_hat_genus(&self) -> Rational {
        genus_value(self, &GenusSpec::a_hat(self.n() as usize))
            .expect("A-hat series is constructed at the required order")
    }
}

fn expect_integer(value: &Rational, what: &str, ci: &CompleteIntersection) -> i64 {
    let as_int = value.to_bigint().unwrap_or_else(|| {
        panic!(
            "internal consistency failure: {} of {} is the non-integer {}",
            what, ci, value
        )
    });
    i64::try_from(as_int).unwrap_or_else(|_| panic!("{} of {} exceeds i64", what, ci))
}
