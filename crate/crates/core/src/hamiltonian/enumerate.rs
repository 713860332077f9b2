//! Exhaustive search for fixed-point data consistent with a target.
//!
//! The search solves the per-degree localisation equations
//! `b_i(target) = sum_F b_{i - 2 lambda_F}(F)` exactly. The component
//! universe is isolated points plus, when enabled, submanifolds of
//! dimension `2 mod 4` carrying the projective-like Betti pattern (every
//! even-degree Betti number 1, odd ones 0). Nothing is lost by that
//! restriction for the targets these checks care about: against a profile
//! that is projective off the middle degree, a component with a vanishing
//! odd residual budget and at most one target degree above 1 can never
//! place an even-degree Betti number of 2 or more, nor any odd one.

use crate::intersection::BettiProfile;

use super::localisation::betti_localisation_check;
use super::{FixedComponent, FixedPointData};

/// Search bounds.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationBounds {
    /// Maximum number of fixed components per solution.
    pub max_components: usize,
    /// Whether positive-dimensional components are searched as well.
    pub allow_positive_dim: bool,
}

/// Search outcome. `truncated` is set when some branch was abandoned
/// because of `max_components` while demand was still outstanding, so
/// solutions beyond the bound may exist.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub solutions: Vec<FixedPointData>,
    pub truncated: bool,
}

/// All fixed-point data within the bounds that pass the Betti
/// localisation check against the target, deduplicated up to reordering
/// (components are kept in canonical order, so each multiset appears
/// once). For an isolated-only search this is exactly the multiset
/// enumeration of indices solving the per-degree equations.
pub fn enumerate_fixed_point_data(
    target: &BettiProfile,
    bounds: &EnumerationBounds,
) -> Enumeration {
    let half = target.dim_real() / 2;
    // The universe only fills even degrees, so any odd demand is unmeetable.
    if target.betti().iter().skip(1).step_by(2).any(|&b| b != 0) {
        return Enumeration {
            solutions: Vec::new(),
            truncated: false,
        };
    }
    let demand: Vec<u64> = target.betti().iter().step_by(2).copied().collect();

    // Candidate shapes by `rank`: 0 is an isolated point (fills one cell),
    // rank t >= 1 is a submanifold of dimension 4t - 2 (fills 2t
    // consecutive cells with ones).
    let max_rank = if bounds.allow_positive_dim {
        // proper submanifolds only: dimension 4t - 2 < 2 * half gives t <= half/2
        half as u32 / 2
    } else {
        0
    };

    let mut search = Search {
        demand,
        half,
        max_rank,
        max_components: bounds.max_components,
        chosen: Vec::new(),
        solutions: Vec::new(),
        truncated: false,
    };
    search.run(0, 0);

    let solutions = search
        .solutions
        .into_iter()
        .map(|components| {
            let data = FixedPointData::new(components)
                .expect("search never emits an empty component list");
            debug_assert!(
                betti_localisation_check(target, &data)
                    .map(|check| check.passes())
                    .unwrap_or(false),
                "enumerated data must re-pass the localisation check"
            );
            data
        })
        .collect();
    Enumeration {
        solutions,
        truncated: search.truncated,
    }
}

struct Search {
    /// Remaining demand per even-degree cell: `demand[j]` covers degree `2j`.
    demand: Vec<u64>,
    half: usize,
    max_rank: u32,
    max_components: usize,
    chosen: Vec<FixedComponent>,
    solutions: Vec<Vec<FixedComponent>>,
    truncated: bool,
}

impl Search {
    /// The number of cells a component of the given rank fills.
    fn span(rank: u32) -> usize {
        if rank == 0 {
            1
        } else {
            2 * rank as usize
        }
    }

    fn component(rank: u32, lambda: u32) -> FixedComponent {
        if rank == 0 {
            FixedComponent::point(lambda)
        } else {
            let dim_real = 4 * rank - 2;
            let betti = (0..=dim_real as usize)
                .map(|i| (i % 2 == 0) as u64)
                .collect();
            FixedComponent::submanifold(dim_real, betti, lambda)
                .expect("projective-like component data is always valid")
        }
    }

    /// Depth-first search. Every component fills a run of cells starting
    /// at its index, so the next component must start exactly at the
    /// lowest unmet cell; starting lower would overfill an already-met
    /// cell and starting higher would leave it unmeetable. Components
    /// sharing a start are chosen with non-decreasing rank, which makes
    /// every multiset appear exactly once.
    fn run(&mut self, min_start: usize, min_rank_at_start: u32) {
        let Some(start) = self.demand.iter().position(|&d| d > 0) else {
            self.solutions.push(self.chosen.clone());
            return;
        };
        if self.chosen.len() >= self.max_components {
            self.truncated = true;
            return;
        }
        let min_rank = if start == min_start {
            min_rank_at_start
        } else {
            0
        };
        for rank in min_rank..=self.max_rank {
            let span = Self::span(rank);
            if start + span - 1 > self.half {
                break;
            }
            if self.demand[start..start + span].contains(&0) {
                continue;
            }
            for cell in start..start + span {
                self.demand[cell] -= 1;
            }
            self.chosen.push(Self::component(rank, start as u32));
            self.run(start, rank);
            self.chosen.pop();
            for cell in start..start + span {
                self.demand[cell] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::signature_from_fixed_points;

    const ISOLATED: EnumerationBounds = EnumerationBounds {
        max_components: 24,
        allow_positive_dim: false,
    };
    const MIXED: EnumerationBounds = EnumerationBounds {
        max_components: 24,
        allow_positive_dim: true,
    };

    fn lambdas(data: &FixedPointData) -> Vec<u32> {
        data.isolated_points().collect()
    }

    #[test]
    fn cp2_has_unique_isolated_solution() {
        let result = enumerate_fixed_point_data(&BettiProfile::projective_space(2), &ISOLATED);
        assert!(!result.truncated);
        assert_eq!(result.solutions.len(), 1);
        assert_eq!(lambdas(&result.solutions[0]), vec![0, 1, 2]);
    }

    #[test]
    fn cp4_has_unique_isolated_solution() {
        let result = enumerate_fixed_point_data(&BettiProfile::projective_space(4), &ISOLATED);
        assert_eq!(result.solutions.len(), 1);
        assert_eq!(lambdas(&result.solutions[0]), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn quadric_profile_forces_doubled_index() {
        let q4 = BettiProfile::new(vec![1, 0, 1, 0, 2, 0, 1, 0, 1]).unwrap();
        let result = enumerate_fixed_point_data(&q4, &ISOLATED);
        assert_eq!(result.solutions.len(), 1);
        assert_eq!(lambdas(&result.solutions[0]), vec![0, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn cp2_mixed_solutions_are_the_three_tilings() {
        let result = enumerate_fixed_point_data(&BettiProfile::projective_space(2), &MIXED);
        let rendered: Vec<String> = result.solutions.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            rendered,
            vec![
                "{0,1,2}",
                "{0,sub(dim=2,lambda=1)}",
                "{2,sub(dim=2,lambda=0)}",
            ]
        );
    }

    #[test]
    fn cp4_mixed_solution_count_matches_tiling_recurrence() {
        // cells 5, tiles of span 1 (point), 2 (dim 2) and 4 (dim 6):
        // T(n) = T(n-1) + T(n-2) + T(n-4), T(0) = 1 -> T(5) = 10
        let result = enumerate_fixed_point_data(&BettiProfile::projective_space(4), &MIXED);
        assert_eq!(result.solutions.len(), 10);
        assert!(!result.truncated);
    }

    #[test]
    fn solutions_re_pass_localisation_and_min_max_structure() {
        let q4 = BettiProfile::new(vec![1, 0, 1, 0, 2, 0, 1, 0, 1]).unwrap();
        for target in [BettiProfile::projective_space(4), q4] {
            let result = enumerate_fixed_point_data(&target, &MIXED);
            assert!(!result.solutions.is_empty());
            for solution in &result.solutions {
                let check = betti_localisation_check(&target, solution).unwrap();
                assert!(check.passes(), "{} fails against {}", solution, target);
                let minima = solution
                    .components()
                    .iter()
                    .filter(|c| c.lambda() == 0)
                    .count();
                let half = target.dim_real() as u32 / 2;
                let maxima = solution
                    .components()
                    .iter()
                    .filter(|c| c.lambda() + c.dim_real() / 2 == half)
                    .count();
                assert_eq!(
                    (minima, maxima),
                    (1, 1),
                    "min/max structure of {}",
                    solution
                );
            }
        }
    }

    #[test]
    fn component_cap_truncates_search() {
        let bounds = EnumerationBounds {
            max_components: 3,
            allow_positive_dim: false,
        };
        let result = enumerate_fixed_point_data(&BettiProfile::projective_space(4), &bounds);
        assert!(result.solutions.is_empty());
        assert!(result.truncated);

        let mixed = EnumerationBounds {
            max_components: 3,
            allow_positive_dim: true,
        };
        let result = enumerate_fixed_point_data(&BettiProfile::projective_space(4), &mixed);
        // tilings with at most 3 tiles still exist, e.g. point + dim-6
        assert!(!result.solutions.is_empty());
        assert!(result.truncated);
        for solution in &result.solutions {
            assert!(solution.components().len() <= 3);
        }
    }

    #[test]
    fn dimension_16_mixed_search_stays_exact() {
        // cells 9, tile spans {1, 2, 4, 6, 8}:
        // T(n) = T(n-1) + T(n-2) + T(n-4) + T(n-6) + T(n-8), T(0) = 1
        // T = 1, 1, 2, 3, 6, 10, 19, 33, 61, 108
        let result = enumerate_fixed_point_data(&BettiProfile::projective_space(8), &MIXED);
        assert_eq!(result.solutions.len(), 108);
        assert!(!result.truncated);
        for solution in &result.solutions {
            assert_eq!(signature_from_fixed_points(solution), 1);
        }
    }

    #[test]
    fn odd_betti_target_has_no_solutions() {
        // a torus-like factor in the target cannot be localised by this universe
        let target = BettiProfile::new(vec![1, 2, 2, 2, 1]).unwrap();
        let result = enumerate_fixed_point_data(&target, &MIXED);
        assert!(result.solutions.is_empty());
        assert!(!result.truncated);
    }

    #[test]
    fn every_mixed_solution_satisfies_signature_identity_on_dim8_targets() {
        let q4 = BettiProfile::new(vec![1, 0, 1, 0, 2, 0, 1, 0, 1]).unwrap();
        for (target, expected) in [(BettiProfile::projective_space(4), 1), (q4, 2)] {
            for solution in enumerate_fixed_point_data(&target, &MIXED).solutions {
                assert_eq!(
                    signature_from_fixed_points(&solution),
                    expected,
                    "signature of {} against {}",
                    solution,
                    target
                );
            }
        }
    }
}
