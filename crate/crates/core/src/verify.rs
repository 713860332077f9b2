//! Fixed-point verification documents and the checks run against them.
//!
//! A document is a single JSON object:
//!
//! ```json
//! {
//!   "target": { "dim_real": 4, "betti": [1, 0, 1, 0, 1] },
//!   "components": [
//!     { "type": "point", "lambda": 0 },
//!     { "type": "submanifold", "dim_real": 2, "betti": [1, 0, 1], "lambda": 1 }
//!   ]
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::{
    alternating_even_betti, betti_localisation_check, even_betti_ones_check,
    signature_from_fixed_points, verify_signature_identity, FixedComponent, FixedPointData,
    LocalisationCheck, SignatureIdentityReport,
};
use crate::intersection::BettiProfile;

/// A target profile together with candidate fixed-point data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointDocument {
    pub target: BettiProfile,
    #[serde(rename = "components")]
    pub data: FixedPointData,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    target: BettiProfile,
    components: Vec<FixedComponent>,
}

impl FixedPointDocument {
    pub fn new(target: BettiProfile, data: FixedPointData) -> Self {
        FixedPointDocument { target, data }
    }

    /// Parse and validate a document. Parse failures carry the line and
    /// field diagnostics from the JSON parser; schema-level validation
    /// failures (bad Betti vectors, wrong component dimensions) are
    /// reported the same way since they are detected during
    /// deserialization.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDocument =
            serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))?;
        Ok(FixedPointDocument {
            target: raw.target,
            data: FixedPointData::new(raw.components)?,
        })
    }
}

/// The result of one per-component Betti check, tagged with the component
/// it covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCheck {
    pub component: String,
    pub pass: bool,
}

/// Everything `verify-fixed-points` computes for one document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub target: BettiProfile,
    pub localisation: LocalisationCheck,
    pub component_checks: Vec<ComponentCheck>,
    pub fixed_point_signature: i64,
    pub alternating_even_sum: i64,
    pub signature_identity: SignatureIdentityReport,
}

impl VerificationReport {
    /// True when every applicable check passed. A signature-identity
    /// report of "not applicable" (for example a target whose dimension
    /// is not divisible by 8) does not count as a failure.
    pub fn all_pass(&self) -> bool {
        self.localisation.passes()
            && self.component_checks.iter().all(|c| c.pass)
            && !matches!(
                self.signature_identity.status(),
                crate::hamiltonian::SignatureIdentityStatus::IdentityFails
            )
    }
}

/// Run the full battery: Betti localisation, the per-component Betti
/// pattern check, the localised signature, and the signature identity.
pub fn run_verification(document: &FixedPointDocument) -> Result<VerificationReport> {
    let localisation = betti_localisation_check(&document.target, &document.data)?;
    let component_checks = document
        .data
        .submanifolds()
        .map(|sub| ComponentCheck {
            component: format!("sub(dim={},lambda={})", sub.dim_real(), sub.lambda()),
            pass: even_betti_ones_check(sub),
        })
        .collect();
    Ok(VerificationReport {
        target: document.target.clone(),
        localisation,
        component_checks,
        fixed_point_signature: signature_from_fixed_points(&document.data),
        alternating_even_sum: alternating_even_betti(&document.target),
        signature_identity: verify_signature_identity(&document.target, &document.data),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn document(json: &str) -> FixedPointDocument {
        FixedPointDocument::from_json(json).unwrap()
    }

    const CP2_GOOD: &str = r#"{
        "target": {"dim_real": 4, "betti": [1, 0, 1, 0, 1]},
        "components": [
            {"type": "point", "lambda": 0},
            {"type": "point", "lambda": 1},
            {"type": "point", "lambda": 2}
        ]
    }"#;

    const CP2_BAD: &str = r#"{
        "target": {"dim_real": 4, "betti": [1, 0, 1, 0, 1]},
        "components": [
            {"type": "point", "lambda": 0},
            {"type": "point", "lambda": 1},
            {"type": "point", "lambda": 1}
        ]
    }"#;

    const Q4: &str = r#"{
        "target": {"dim_real": 8, "betti": [1, 0, 1, 0, 2, 0, 1, 0, 1]},
        "components": [
            {"type": "point", "lambda": 0},
            {"type": "point", "lambda": 1},
            {"type": "point", "lambda": 2},
            {"type": "point", "lambda": 2},
            {"type": "point", "lambda": 3},
            {"type": "point", "lambda": 4}
        ]
    }"#;

    #[test]
    fn consistent_cp2_document_passes() {
        let report = run_verification(&document(CP2_GOOD)).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.fixed_point_signature, 1);
        // dimension 4 is not divisible by 8, so the identity is not asserted
        assert!(report.signature_identity.not_applicable());
    }

    #[test]
    fn inconsistent_cp2_document_fails_with_residuals() {
        let report = run_verification(&document(CP2_BAD)).unwrap();
        assert!(!report.all_pass());
        assert_eq!(report.localisation.mismatches(), vec![(2, -1), (4, 1)]);
    }

    #[test]
    fn quadric_document_verifies_signature_identity() {
        let report = run_verification(&document(Q4)).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.fixed_point_signature, 2);
        assert_eq!(report.alternating_even_sum, 2);
        assert!(report.signature_identity.verified());
    }

    #[test]
    fn parse_errors_carry_position_diagnostics() {
        let err = FixedPointDocument::from_json("{\n  \"target\": {\n").unwrap_err();
        match err {
            Error::ParseError(msg) => assert!(msg.contains("line"), "message: {}", msg),
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn schema_violations_are_parse_errors() {
        let bad_component = r#"{
            "target": {"dim_real": 4, "betti": [1, 0, 1, 0, 1]},
            "components": [{"type": "submanifold", "dim_real": 4, "betti": [1,0,1,0,1], "lambda": 0}]
        }"#;
        assert!(matches!(
            FixedPointDocument::from_json(bad_component).unwrap_err(),
            Error::ParseError(_)
        ));

        // unknown fields are rejected even when all required ones are present
        let unknown_field = r#"{
            "target": {"dim_real": 4, "betti": [1, 0, 1, 0, 1]},
            "components": [{"type": "point", "lambda": 0, "weight": 3}]
        }"#;
        let err = FixedPointDocument::from_json(unknown_field).unwrap_err();
        match err {
            Error::ParseError(msg) => assert!(msg.contains("weight"), "message: {}", msg),
            other => panic!("expected parse error, got {:?}", other),
        }

        let misspelled = r#"{
            "target": {"dim_real": 4, "betti": [1, 0, 1, 0, 1]},
            "components": [{"type": "point", "lamda": 0}]
        }"#;
        assert!(matches!(
            FixedPointDocument::from_json(misspelled).unwrap_err(),
            Error::ParseError(_)
        ));
    }

    #[test]
    fn empty_component_list_is_rejected() {
        let empty = r#"{
            "target": {"dim_real": 4, "betti": [1, 0, 1, 0, 1]},
            "components": []
        }"#;
        assert_eq!(
            FixedPointDocument::from_json(empty).unwrap_err(),
            Error::EmptyFixedPointSet
        );
    }

    #[test]
    fn out_of_range_component_is_an_input_error() {
        let deep = r#"{
            "target": {"dim_real": 4, "betti": [1, 0, 1, 0, 1]},
            "components": [{"type": "point", "lambda": 7}]
        }"#;
        let err = run_verification(&document(deep)).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange(_)));
    }

    #[test]
    fn report_serializes_with_stable_shape() {
        let report = run_verification(&document(Q4)).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["fixed_point_signature"], 2);
        assert_eq!(json["signature_identity"]["status"], "Verified");
    }
}
