//! Full invariant report for a single complete intersection.

use serde::Serialize;

use crate::hamiltonian::{classify_dim_8k, dim_8k4_relation};
use crate::intersection::{CompleteIntersection, SmoothActionObstruction};
use crate::rational::Rational;

/// Everything the `invariants` command prints for one manifold.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    pub n: u32,
    pub degrees: Vec<u32>,
    pub dim_real: u32,
    pub chi: i64,
    pub betti: Vec<u64>,
    pub middle_betti: u64,
    /// `None` when the complex dimension is odd (real dimension not
    /// divisible by 4).
    pub signature: Option<i64>,
    pub a_hat: Rational,
    pub fano: bool,
    pub spin: bool,
    pub smooth_obstruction: SmoothActionObstruction,
    pub hamiltonian_verdict: String,
    /// Explanation of the verdict, carrying its fixed-set qualifier.
    pub verdict_detail: String,
}

impl InvariantsReport {
    pub fn for_intersection(ci: &CompleteIntersection) -> Self {
        let profile = ci.betti_profile();
        let (verdict, detail) = match ci.n() % 4 {
            0 => {
                let v = classify_dim_8k(ci);
                (v.label(), v.summary())
            }
            2 => {
                let r = dim_8k4_relation(ci);
                let diag = r
                    .diagnostics()
                    .expect("diagnostics present when applicable");
                let detail = format!(
                    "signature {} vs 2 - middle Betti number = {}",
                    diag.signature,
                    2 - diag.middle_betti as i64
                );
                (r.label(), detail)
            }
            _ => (
                "NotApplicable".to_string(),
                "real dimension is 2 mod 4; the classification and the signature relation both \
                 concern dimensions divisible by 4"
                    .to_string(),
            ),
        };
        InvariantsReport {
            n: ci.n(),
            degrees: ci.degrees().to_vec(),
            dim_real: ci.dim_real(),
            chi: ci.euler_characteristic(),
            betti: profile.betti().to_vec(),
            middle_betti: profile.middle(),
            signature: ci.signature().ok(),
            a_hat: ci.a_hat_genus(),
            fano: ci.is_fano(),
            spin: ci.is_spin(),
            smooth_obstruction: ci.smooth_action_obstruction(),
            hamiltonian_verdict: verdict,
            verdict_detail: detail,
        }
    }

    /// Aligned key-value rendering for terminals.
    pub fn render_text(&self) -> String {
        let name = if self.degrees.is_empty() {
            format!("CP^{}", self.n)
        } else {
            let degrees: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
            format!("X_{}({})", self.n, degrees.join(","))
        };
        let betti: Vec<String> = self.betti.iter().map(u64::to_string).collect();
        let mut lines = vec![
            format!("manifold:            {}", name),
            format!("complex dimension:   {}", self.n),
            format!("real dimension:      {}", self.dim_real),
            format!("euler:               {}", self.chi),
            format!("betti:               ({})", betti.join(",")),
            match (self.n % 2, self.middle_betti) {
                (1, b) => format!(
                    "middle betti:        {} (informational: odd middle degree)",
                    b
                ),
                (_, b) => format!("middle betti:        {}", b),
            },
            match self.signature {
                Some(s) => format!("signature:           {}", s),
                None => {
                    "signature:           undefined (real dimension not divisible by 4)".to_string()
                }
            },
            format!("a-hat:               {}", self.a_hat),
            format!("fano:                {}", self.fano),
            format!("spin:                {}", self.spin),
            format!("smooth obstruction:  {}", self.smooth_obstruction),
            format!("hamiltonian verdict: {}", self.hamiltonian_verdict),
            format!("  {}", self.verdict_detail),
        ];
        lines.push(String::new());
        lines.join("\n")
    }
}
