//! Checks for Hamiltonian circle actions with constrained fixed-point sets.
//!
//! Everything here operates on topological shadows of an action: the target
//! manifold enters as a [`BettiProfile`](crate::BettiProfile) and the fixed-point set as
//! [`FixedPointData`], a list of components that are either isolated points
//! or submanifolds of real dimension `2 mod 4`, each carrying the index
//! `lambda` (half the Morse-Bott index of the Hamiltonian along the
//! component, equally the number of negative isotropy weights). Symplectic
//! forms, Hamiltonians and generating vector fields are deliberately not
//! modelled.

mod classify;
mod enumerate;
mod localisation;

pub use classify::{
    classify_dim_8k, dim_8k4_relation, ClassificationDiagnostics, ClassificationStatus,
    ClassificationVerdict, DiffeomorphismType, DimRelationReport, DimRelationStatus,
};
pub use enumerate::{enumerate_fixed_point_data, Enumeration, EnumerationBounds};
pub use localisation::{
    alternating_even_betti, betti_localisation_check, even_betti_ones_check,
    shifted_alternating_even_sum, signature_from_fixed_points, verify_signature_identity,
    LocalisationCheck, SignatureIdentityReport, SignatureIdentityStatus,
};

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A fixed submanifold of positive dimension `2 mod 4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submanifold {
    dim_real: u32,
    betti: Vec<u64>,
    lambda: u32,
}

impl Submanifold {
    /// Validate the dimension constraint and the Betti vector: length
    /// `dim_real + 1`, Poincare duality, and every even-degree entry at
    /// least 1 (the component is a closed symplectic submanifold).
    pub fn new(dim_real: u32, betti: Vec<u64>, lambda: u32) -> Result<Self> {
        if dim_real == 0 || dim_real % 4 != 2 {
            return Err(Error::InvalidFixedComponent(format!(
                "submanifold dimension {} is not positive and 2 mod 4",
                dim_real
            )));
        }
        if betti.len() != dim_real as usize + 1 {
            return Err(Error::InvalidFixedComponent(format!(
                "submanifold of dimension {} needs {} Betti numbers, got {}",
                dim_real,
                dim_real + 1,
                betti.len()
            )));
        }
        let dim = dim_real as usize;
        for i in 0..=dim / 2 {
            if betti[i] != betti[dim - i] {
                return Err(Error::InvalidFixedComponent(format!(
                    "Poincare duality fails on component: b_{} = {} but b_{} = {}",
                    i,
                    betti[i],
                    dim - i,
                    betti[dim - i]
                )));
            }
        }
        if let Some(i) = (0..=dim).step_by(2).find(|&i| betti[i] == 0) {
            return Err(Error::InvalidFixedComponent(format!(
                "symplectic submanifold needs b_{} >= 1, got 0",
                i
            )));
        }
        Ok(Submanifold {
            dim_real,
            betti,
            lambda,
        })
    }

    pub fn dim_real(&self) -> u32 {
        self.dim_real
    }

    pub fn betti(&self) -> &[u64] {
        &self.betti
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }
}

/// One connected component of the fixed-point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedComponent {
    /// An isolated fixed point with index `lambda`.
    Point { lambda: u32 },
    /// A fixed submanifold of dimension `2 mod 4`.
    Submanifold(Submanifold),
}

impl FixedComponent {
    pub fn point(lambda: u32) -> Self {
        FixedComponent::Point { lambda }
    }

    pub fn submanifold(dim_real: u32, betti: Vec<u64>, lambda: u32) -> Result<Self> {
        Ok(FixedComponent::Submanifold(Submanifold::new(
            dim_real, betti, lambda,
        )?))
    }

    pub fn lambda(&self) -> u32 {
        match self {
            FixedComponent::Point { lambda } => *lambda,
            FixedComponent::Submanifold(sub) => sub.lambda,
        }
    }

    /// Real dimension; an isolated point has dimension 0.
    pub fn dim_real(&self) -> u32 {
        match self {
            FixedComponent::Point { .. } => 0,
            FixedComponent::Submanifold(sub) => sub.dim_real,
        }
    }

    /// `b_i` of the component, reading 0 outside `0..=dim_real`. A point
    /// has `b_0 = 1` and nothing else, so it enters every localisation
    /// sum uniformly as a degenerate component.
    pub fn betti_or_zero(&self, i: isize) -> u64 {
        match self {
            FixedComponent::Point { .. } => (i == 0) as u64,
            FixedComponent::Submanifold(sub) => {
                if i < 0 || i as usize >= sub.betti.len() {
                    0
                } else {
                    sub.betti[i as usize]
                }
            }
        }
    }

    /// Sort key implementing the canonical component order: isolated
    /// points first ordered by index, then submanifolds ordered by
    /// (dimension, index, Betti numbers).
    fn canonical_key(&self) -> (u8, u32, u32, &[u64]) {
        match self {
            FixedComponent::Point { lambda } => (0, 0, *lambda, &[]),
            FixedComponent::Submanifold(sub) => (1, sub.dim_real, sub.lambda, &sub.betti),
        }
    }
}

impl fmt::Display for FixedComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedComponent::Point { lambda } => write!(f, "{}", lambda),
            FixedComponent::Submanifold(sub) => {
                write!(f, "sub(dim={},lambda={})", sub.dim_real, sub.lambda)
            }
        }
    }
}

/// Serialized form: `{"type": "point", "lambda": k}` or
/// `{"type": "submanifold", "dim_real": d, "betti": [...], "lambda": k}`.
#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum RawComponent {
    Point {
        lambda: u32,
    },
    Submanifold {
        dim_real: u32,
        betti: Vec<u64>,
        lambda: u32,
    },
}

impl Serialize for FixedComponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let raw = match self {
            FixedComponent::Point { lambda } => RawComponent::Point { lambda: *lambda },
            FixedComponent::Submanifold(sub) => RawComponent::Submanifold {
                dim_real: sub.dim_real,
                betti: sub.betti.clone(),
                lambda: sub.lambda,
            },
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FixedComponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match RawComponent::deserialize(deserializer)? {
            RawComponent::Point { lambda } => Ok(FixedComponent::Point { lambda }),
            RawComponent::Submanifold {
                dim_real,
                betti,
                lambda,
            } => FixedComponent::submanifold(dim_real, betti, lambda)
                .map_err(|e| D::Error::custom(e.to_string())),
        }
    }
}

/// The fixed-point set of a putative Hamiltonian circle action.
///
/// Only nonemptiness is enforced here. Min/max structure (a unique
/// index-0 component and a unique top-index component) is validated when
/// data is checked or enumerated against a connected target, so that
/// deliberately inconsistent data can still be fed through the residual
/// checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointData {
    components: Vec<FixedComponent>,
}

impl FixedPointData {
    pub fn new(components: Vec<FixedComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyFixedPointSet);
        }
        let mut data = FixedPointData { components };
        data.canonicalize();
        Ok(data)
    }

    /// Isolated points only, from their indices.
    pub fn from_lambdas(lambdas: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::new(lambdas.into_iter().map(FixedComponent::point).collect())
    }

    pub fn components(&self) -> &[FixedComponent] {
        &self.components
    }

    pub fn isolated_points(&self) -> impl Iterator<Item = u32> + '_ {
        self.components.iter().filter_map(|c| match c {
            FixedComponent::Point { lambda } => Some(*lambda),
            FixedComponent::Submanifold(_) => None,
        })
    }

    pub fn submanifolds(&self) -> impl Iterator<Item = &Submanifold> {
        self.components.iter().filter_map(|c| match c {
            FixedComponent::Point { .. } => None,
            FixedComponent::Submanifold(sub) => Some(sub),
        })
    }

    fn canonicalize(&mut self) {
        self.components
            .sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    }
}

impl fmt::Display for FixedPointData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
