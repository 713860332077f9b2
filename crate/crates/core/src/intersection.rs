//! Complete intersections and their classical invariants.
//!
//! A smooth complete intersection is determined up to diffeomorphism by its
//! complex dimension `n` and multidegree `(d_1, ..., d_r)`; `r = 0` is
//! projective space itself. Degree-1 entries are linear sections and are
//! dropped on construction, so the stored multidegree is canonical: sorted
//! ascending with every entry at least 2.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A smooth complete intersection of complex dimension `n` cut out by
/// hypersurfaces of the given degrees in `CP^{n+r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CompleteIntersection {
    n: u32,
    degrees: Vec<u32>,
}

impl CompleteIntersection {
    /// Normalize raw input: reject nonpositive values, drop degree-1
    /// hypersurfaces (linear sections), sort ascending.
    pub fn new(n: u32, raw_degrees: impl IntoIterator<Item = u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(0));
        }
        let mut degrees = Vec::new();
        for d in raw_degrees {
            match d {
                0 => return Err(Error::InvalidDegree(0)),
                1 => {}
                _ => degrees.push(d),
            }
        }
        degrees.sort_unstable();
        Ok(CompleteIntersection { n, degrees })
    }

    /// Projective space `CP^n`.
    pub fn projective_space(n: u32) -> Self {
        CompleteIntersection {
            n,
            degrees: Vec::new(),
        }
    }

    /// Complex dimension.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Real dimension `2n`.
    pub fn dim_real(&self) -> u32 {
        2 * self.n
    }

    /// The canonical multidegree (ascending, all entries >= 2).
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of defining hypersurfaces after normalization.
    pub fn codimension(&self) -> u32 {
        self.degrees.len() as u32
    }

    /// Sum of the degrees.
    pub fn degree_sum(&self) -> u32 {
        self.degrees.iter().sum()
    }

    /// First Chern class positivity: `sum d_j <= n + r`.
    pub fn is_fano(&self) -> bool {
        self.degree_sum() <= self.n + self.codimension()
    }

    /// Vanishing second Stiefel-Whitney class: `n + r + 1 - sum d_j` even.
    /// Applied for all n >= 1; H^2 is generated by the hyperplane class in
    /// every case this crate reasons about, including surfaces.
    pub fn is_spin(&self) -> bool {
        (self.n + self.codimension() + 1 + self.degree_sum()).is_multiple_of(2)
    }

    /// Betti numbers via the Lefschetz hyperplane theorem: off the middle
    /// degree they agree with `CP^n`, and the middle one is pinned by the
    /// Euler characteristic.
    pub fn betti_profile(&self) -> BettiProfile {
        let n = self.n as usize;
        let chi = self.euler_characteristic();
        let middle = if n.is_multiple_of(2) {
            chi - n as i64
        } else {
            (n as i64 + 1) - chi
        };
        assert!(
            middle >= 0,
            "internal consistency failure: middle Betti number {} of {} is negative",
            middle,
            self
        );
        assert!(
            n % 2 == 1 || middle >= 1,
            "internal consistency failure: even-dimensional {} needs a middle Betti number >= 1, got {}",
            self,
            middle
        );
        let mut betti = vec![0u64; 2 * n + 1];
        for (i, b) in betti.iter_mut().enumerate() {
            *b = if i == n {
                middle as u64
            } else if i % 2 == 0 {
                1
            } else {
                0
            };
        }
        BettiProfile { betti }
    }

    /// The Atiyah-Hirzebruch test: a spin manifold of even complex
    /// dimension with nonvanishing A-hat genus admits no smooth circle
    /// action at all.
    pub fn smooth_action_obstruction(&self) -> SmoothActionObstruction {
        if !self.n.is_multiple_of(2) || !self.is_spin() {
            return SmoothActionObstruction::TestNotApplicable;
        }
        if self.a_hat_genus().is_zero() {
            SmoothActionObstruction::NoObstructionFromThisTest
        } else {
            SmoothActionObstruction::ExcludesAnySmoothCircleAction
        }
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            write!(f, "CP^{}", self.n)
        } else {
            let degrees: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
            write!(f, "X_{}({})", self.n, degrees.join(","))
        }
    }
}

/// Outcome of the smooth-circle-action obstruction test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SmoothActionObstruction {
    /// Spin with nonzero A-hat genus: no smooth circle action exists.
    ExcludesAnySmoothCircleAction,
    /// Spin with vanishing A-hat genus: this test says nothing.
    NoObstructionFromThisTest,
    /// Odd complex dimension or not spin: the test does not apply.
    TestNotApplicable,
}

impl fmt::Display for SmoothActionObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SmoothActionObstruction::ExcludesAnySmoothCircleAction => {
                "ExcludesAnySmoothCircleAction"
            }
            SmoothActionObstruction::NoObstructionFromThisTest => "NoObstructionFromThisTest",
            SmoothActionObstruction::TestNotApplicable => "TestNotApplicable",
        };
        f.write_str(name)
    }
}

/// Betti numbers `b_0, ..., b_{dim_real}` of a closed connected manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiProfile {
    betti: Vec<u64>,
}

impl BettiProfile {
    /// Validate connectivity, even dimension, and Poincare duality.
    pub fn new(betti: Vec<u64>) -> Result<Self> {
        if betti.is_empty() || betti.len().is_multiple_of(2) {
            return Err(Error::InvalidBettiProfile(format!(
                "expected b_0..b_2m for an even real dimension, got {} entries",
                betti.len()
            )));
        }
        if betti[0] != 1 {
            return Err(Error::InvalidBettiProfile(format!(
                "b_0 = {} but a connected manifold has b_0 = 1",
                betti[0]
            )));
        }
        let dim = betti.len() - 1;
        for i in 0..=dim / 2 {
            if betti[i] != betti[dim - i] {
                return Err(Error::InvalidBettiProfile(format!(
                    "Poincare duality fails: b_{} = {} but b_{} = {}",
                    i,
                    betti[i],
                    dim - i,
                    betti[dim - i]
                )));
            }
        }
        Ok(BettiProfile { betti })
    }

    /// The profile of `CP^m` (real dimension `2m`).
    pub fn projective_space(m: u32) -> Self {
        let betti = (0..=2 * m as usize).map(|i| (i % 2 == 0) as u64).collect();
        BettiProfile { betti }
    }

    pub fn dim_real(&self) -> usize {
        self.betti.len() - 1
    }

    pub fn betti(&self) -> &[u64] {
        &self.betti
    }

    /// `b_i`, with degrees outside `0..=dim_real` reading as zero.
    pub fn betti_or_zero(&self, i: isize) -> u64 {
        if i < 0 || i as usize >= self.betti.len() {
            0
        } else {
            self.betti[i as usize]
        }
    }

    /// The middle Betti number `b_{dim_real/2}`.
    pub fn middle(&self) -> u64 {
        self.betti[self.dim_real() / 2]
    }

    /// Whether `b_i = b_i(CP^{dim/2})` for every `i` other than the middle
    /// degree - the Lefschetz-type hypothesis of the localisation results.
    pub fn is_projective_like_off_middle(&self) -> bool {
        let middle = self.dim_real() / 2;
        self.betti
            .iter()
            .enumerate()
            .all(|(i, &b)| i == middle || b == (i % 2 == 0) as u64)
    }
}

impl fmt::Display for BettiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.betti.iter().map(u64::to_string).collect();
        write!(f, "({})", entries.join(","))
    }
}

/// Serialized form: `{"dim_real": 2m, "betti": [b_0, ..., b_2m]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProfile {
    dim_real: usize,
    betti: Vec<u64>,
}

impl Serialize for BettiProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawProfile {
            dim_real: self.dim_real(),
            betti: self.betti.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BettiProfile {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawProfile::deserialize(deserializer)?;
        if raw.betti.len() != raw.dim_real + 1 {
            return Err(D::Error::custom(format!(
                "dim_real {} needs {} Betti numbers, got {}",
                raw.dim_real,
                raw.dim_real + 1,
                raw.betti.len()
            )));
        }
        BettiProfile::new(raw.betti).map_err(|e| D::Error::custom(e.to_string()))
    }
}
