//! Exact-arithmetic invariants of smooth complete intersections, and
//! checkers for the circle-action obstructions those invariants decide.
//!
//! The crate is layered bottom-up:
//!
//! - [`rational`] and [`series`]: exact rational arithmetic and truncated
//!   formal power series, the substrate for every genus computation.
//! - [`genus`]: Euler characteristic, signature (L-genus) and A-hat genus
//!   of a complete intersection by coefficient extraction.
//! - [`intersection`]: the complete-intersection type itself, Betti
//!   profiles, Fano/spin predicates, and the smooth-action obstruction.
//! - [`hamiltonian`]: localisation checks for Hamiltonian circle actions
//!   with constrained fixed-point sets, the positive-definiteness
//!   classification in dimension `8k`, the signature relation in dimension
//!   `8k + 4`, and a fixed-point-data enumerator.
//! - [`scan`], [`report`], [`verify`]: batch classification scans and the
//!   report structures behind the `ci-hamilton` command-line interface.
//!
//! ```
//! use ci_hamilton::{classify_dim_8k, ClassificationStatus, CompleteIntersection, Rational};
//!
//! // the quartic surface in CP^3
//! let quartic = CompleteIntersection::new(2, [4])?;
//! assert_eq!(quartic.euler_characteristic(), 24);
//! assert_eq!(quartic.signature()?, -16);
//! assert_eq!(quartic.a_hat_genus(), Rational::from(2));
//!
//! // the intersection of two quadrics in CP^6 has positive-definite
//! // middle intersection form
//! let two_quadrics = CompleteIntersection::new(4, [2, 2])?;
//! let verdict = classify_dim_8k(&two_quadrics);
//! assert_eq!(verdict.status(), ClassificationStatus::Consistent);
//! # Ok::<(), ci_hamilton::Error>(())
//! ```

pub mod error;
pub mod genus;
pub mod hamiltonian;
pub mod intersection;
pub mod rational;
pub mod report;
pub mod scan;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use genus::{genus_value, GenusSpec};
pub use hamiltonian::{
    alternating_even_betti, betti_localisation_check, classify_dim_8k, dim_8k4_relation,
    enumerate_fixed_point_data, even_betti_ones_check, signature_from_fixed_points,
    verify_signature_identity, ClassificationStatus, ClassificationVerdict, DiffeomorphismType,
    DimRelationStatus, Enumeration, EnumerationBounds, FixedComponent, FixedPointData,
    LocalisationCheck, SignatureIdentityReport, SignatureIdentityStatus, Submanifold,
};
pub use intersection::{BettiProfile, CompleteIntersection, SmoothActionObstruction};
pub use rational::Rational;
pub use series::{ElementaryKind, TruncatedSeries};
