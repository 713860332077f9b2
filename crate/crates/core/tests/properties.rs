//! Randomized invariants beyond the acceptance suite: series algebra,
//! genus-engine identities, and round trips through the public API.

use proptest::prelude::*;

use ci_hamilton::hamiltonian::{
    betti_localisation_check, enumerate_fixed_point_data, verify_signature_identity,
    EnumerationBounds,
};
use ci_hamilton::intersection::{BettiProfile, CompleteIntersection};
use ci_hamilton::rational::Rational;
use ci_hamilton::series::{ElementaryKind, TruncatedSeries};

/// The whole pipeline in one statement: a dimension-8 complete
/// intersection admits essentially one isolated fixed-point configuration
/// (forced by Betti localisation), whose localised signature is the middle
/// Betti number. Comparing that against the L-genus signature reproduces
/// the classification verdict: they agree exactly for projective space,
/// the quadric and two quadrics, and the disagreement is what excludes
/// every other multidegree.
#[test]
fn localised_signature_contradicts_l_genus_exactly_when_excluded() {
    use ci_hamilton::hamiltonian::{classify_dim_8k, ClassificationStatus};
    use ci_hamilton::scan::multidegrees;

    for degrees in multidegrees(2, 4) {
        let x = CompleteIntersection::new(4, degrees).unwrap();
        let profile = x.betti_profile();
        let needed = profile.betti().iter().sum::<u64>() as usize;
        let bounds = EnumerationBounds {
            max_components: needed,
            allow_positive_dim: false,
        };
        let result = enumerate_fixed_point_data(&profile, &bounds);
        assert_eq!(result.solutions.len(), 1, "forced configuration for {}", x);
        let data = &result.solutions[0];

        let localised = ci_hamilton::signature_from_fixed_points(data);
        assert_eq!(localised, profile.middle() as i64);

        let actual = x.signature().unwrap();
        let consistent = classify_dim_8k(&x).status() == ClassificationStatus::Consistent;
        assert_eq!(
            localised == actual,
            consistent,
            "{}: localised signature {} vs actual {}",
            x,
            localised,
            actual
        );
    }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| Rational::new(n, d))
}

fn series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(rational(), 1..=max_order + 1).prop_map(TruncatedSeries::from_coeffs)
}

fn unit_series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (
        (1i64..=10, 1i64..=10),
        proptest::collection::vec(rational(), 0..=max_order),
        proptest::bool::ANY,
    )
        .prop_map(|((n, d), tail, negate)| {
            let constant = Rational::new(if negate { -n } else { n }, d);
            let mut coeffs = vec![constant];
            coeffs.extend(tail);
            TruncatedSeries::from_coeffs(coeffs)
        })
}

fn random_ci() -> impl Strategy<Value = CompleteIntersection> {
    (1u32..=9, proptest::collection::vec(1u32..=9, 0..=5))
        .prop_map(|(n, degrees)| CompleteIntersection::new(n, degrees).unwrap())
}

proptest! {
    #[test]
    fn series_inverse_round_trips(a in unit_series(8)) {
        prop_assert!((&a * &a.inv()).is_one());
    }

    #[test]
    fn series_pow_matches_repeated_multiplication(a in series(6), e in 0u32..=5) {
        let mut expected = TruncatedSeries::one(a.order());
        for _ in 0..e {
            expected = &expected * &a;
        }
        prop_assert_eq!(a.pow(e), expected);
    }

    #[test]
    fn series_results_stay_in_lowest_terms(a in series(6), b in series(6)) {
        use num::Integer;
        use num::traits::Signed;
        let order = a.order().min(b.order());
        let product = &a.truncated(order) * &b.truncated(order);
        for k in 0..=order {
            let c = product.coefficient(k);
            prop_assert!(c.denominator().is_positive());
            prop_assert!(c.numerator().gcd(c.denominator()) == 1u32.into() || c.is_zero());
        }
    }

    #[test]
    fn elementary_series_are_even(order in 0usize..=12) {
        for kind in [
            ElementaryKind::SinhOverX,
            ElementaryKind::Cosh,
            ElementaryKind::XOverTanh,
            ElementaryKind::XHalfOverSinhHalf,
        ] {
            let s = TruncatedSeries::elementary(kind, order);
            for k in (1..=order).step_by(2) {
                prop_assert!(s.coefficient(k).is_zero(), "odd coefficient {} of {:?}", k, kind);
            }
        }
    }

    #[test]
    fn scaling_is_multiplicative_over_products(a in series(6), b in series(6), d in 0u32..=9) {
        let order = a.order().min(b.order());
        let (a, b) = (a.truncated(order), b.truncated(order));
        let scaled_product = (&a * &b).scale_variable(d);
        let product_of_scaled = &a.scale_variable(d) * &b.scale_variable(d);
        prop_assert_eq!(scaled_product, product_of_scaled);
    }

    #[test]
    fn normalization_is_idempotent(x in random_ci()) {
        let again = CompleteIntersection::new(x.n(), x.degrees().to_vec()).unwrap();
        prop_assert_eq!(&again, &x);
    }

    #[test]
    fn euler_routes_agree(x in random_ci()) {
        prop_assert_eq!(x.euler_characteristic(), x.euler_characteristic_direct());
    }

    #[test]
    fn euler_and_middle_betti_round_trip(x in random_ci()) {
        let chi = x.euler_characteristic();
        let middle = x.betti_profile().middle() as i64;
        let n = x.n() as i64;
        if n % 2 == 0 {
            prop_assert_eq!(chi, n + middle);
        } else {
            prop_assert_eq!(chi, (n + 1) - middle);
        }
    }

    #[test]
    fn spin_even_intersections_have_integral_a_hat(
        half_n in 1u32..=4,
        degrees in proptest::collection::vec(2u32..=6, 0..=4),
    ) {
        let x = CompleteIntersection::new(2 * half_n, degrees).unwrap();
        if x.is_spin() {
            prop_assert!(x.a_hat_genus().is_integer(), "a-hat of spin {} is {}", x, x.a_hat_genus());
        }
    }

    #[test]
    fn enumerated_data_re_passes_localisation(middle in 1u64..=6, allow_positive in proptest::bool::ANY) {
        // projective-like dimension-8 target with a variable middle Betti number
        let mut betti: Vec<u64> = (0..=8).map(|i| (i % 2 == 0) as u64).collect();
        betti[4] = middle;
        let target = BettiProfile::new(betti).unwrap();
        let bounds = EnumerationBounds { max_components: 12, allow_positive_dim: allow_positive };
        let result = enumerate_fixed_point_data(&target, &bounds);
        for data in &result.solutions {
            let check = betti_localisation_check(&target, data).unwrap();
            prop_assert!(check.passes());
            prop_assert!(verify_signature_identity(&target, data).verified());
        }
    }

    #[test]
    fn scan_rows_are_internally_consistent(
        branch_bit in proptest::bool::ANY,
        max_r in 0u32..=2,
        max_degree in 2u32..=5,
    ) {
        use ci_hamilton::scan::{run_scan, ScanBranch, ScanRequest};
        let branch = if branch_bit { ScanBranch::Dim8k } else { ScanBranch::Dim8kPlus4 };
        let max_n = if branch_bit { 4 } else { 6 };
        let result = run_scan(&ScanRequest { branch, max_n, max_r, max_degree });
        for row in &result.rows {
            // parity and bound, and the verdict agrees with the raw numbers
            prop_assert_eq!(row.signature.rem_euclid(2), (row.middle_betti as i64).rem_euclid(2));
            prop_assert!(row.signature.abs() <= row.middle_betti as i64);
            let expected = match branch {
                ScanBranch::Dim8k => {
                    if row.signature == row.middle_betti as i64 { "Consistent" } else { "Excluded" }
                }
                ScanBranch::Dim8kPlus4 => {
                    if row.signature == 2 - row.middle_betti as i64 { "RelationHolds" } else { "RelationFails" }
                }
            };
            prop_assert!(row.hamiltonian_verdict.starts_with(expected));
        }
    }
}
