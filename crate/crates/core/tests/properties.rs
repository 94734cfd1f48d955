mod common;

use common::*;
use proptest::prelude::*;
use skewgain::io::{parse_graph_file_as, write_graph_file};
use skewgain::prelude::*;

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_filter("nonzero", |(a, _, c, _)| *a != 0 || *c != 0)
        .prop_map(|(a, b, c, d)| {
            GaussianRational::new(
                Rational::new(a.into(), b.into()),
                Rational::new(c.into(), d.into()),
            )
        })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6)
        .prop_filter("nonzero", |(a, _)| *a != 0)
        .prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn involution() -> impl Strategy<Value = AntiInvolution> {
    prop::sample::select(AntiInvolution::ALL.to_vec())
}

fn gaussian_matrix(n: usize) -> impl Strategy<Value = Matrix<GaussianRational>> {
    prop::collection::vec(
        prop_oneof![1 => Just(GaussianRational::zero()), 3 => gaussian()],
        n * n,
    )
    .prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

/// Random connected graph from a seed, so shrinking stays meaningful.
fn connected_gaussian(max_n: usize) -> impl Strategy<Value = SkewGainGraph<GaussianRational>> {
    (1..=max_n, any::<u64>(), involution(), 0.1f64..0.9)
        .prop_map(|(n, seed, f, density)| random_connected(&mut rng(seed), n, density, f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laws_hold_on_gaussian_samples(samples in prop::collection::vec(gaussian(), 1..12), f in involution()) {
        let report = validate_anti_involution(f, &samples).unwrap();
        prop_assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn laws_hold_on_rational_samples(samples in prop::collection::vec(rational(), 1..12)) {
        for f in AntiInvolution::admissible(Domain::Rational) {
            prop_assert!(validate_anti_involution(f, &samples).unwrap().all_pass());
        }
    }

    #[test]
    fn anti_involution_reverses_products(x in gaussian(), y in gaussian(), f in involution()) {
        let lhs = f.apply(&(x.clone() * y.clone())).unwrap();
        let rhs = f.apply(&y).unwrap() * f.apply(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.apply(&f.apply(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn sharp_is_an_involution_reversing_products(
        a in gaussian_matrix(3),
        b in gaussian_matrix(3),
        f in involution(),
    ) {
        prop_assert_eq!(a.sharp(f).unwrap().sharp(f).unwrap(), a.clone());
        // Only additive maps distribute over the sums inside a product.
        if matches!(f, AntiInvolution::Identity | AntiInvolution::Conjugate) {
            prop_assert_eq!(a.mul(&b).sharp(f).unwrap(), b.sharp(f).unwrap().mul(&a.sharp(f).unwrap()));
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion(n in 1usize..=5, seed in any::<u64>()) {
        let mut rng = rng(seed);
        let rows: Vec<Vec<GaussianRational>> = (0..n).map(|_| gains(&mut rng, n)).collect();
        let m = Matrix::from_rows(rows.clone());
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&rows));
    }

    #[test]
    fn charpoly_evaluates_to_det_of_shifted_matrix(g in connected_gaussian(6), seed in any::<u64>()) {
        let poly = charpoly_subgraphs(&g);
        let a = adjacency_rows(&g);
        let mut rng = rng(seed);
        for x in gains::<GaussianRational>(&mut rng, 20) {
            let shifted: Vec<Vec<GaussianRational>> = a
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, v)| if i == j { x.clone() - v.clone() } else { -v.clone() })
                        .collect()
                })
                .collect();
            prop_assert_eq!(poly.eval(&x), cofactor_det(&shifted));
        }
    }

    #[test]
    fn hermitian_graphs_have_real_coefficients_and_spectra(n in 2usize..=7, seed in any::<u64>()) {
        let g: SkewGainGraph<GaussianRational> =
            random_connected(&mut rng(seed), n, 0.4, AntiInvolution::Conjugate);
        let poly = charpoly_subgraphs(&g);
        for c in poly.coeffs() {
            prop_assert!(c.im == Rational::from_i64(0));
        }
        for (value, _) in spectrum_numeric(&g).unwrap().entries() {
            prop_assert!(value.im.abs() < 1e-7);
        }
    }

    #[test]
    fn gain_graphs_count_edges_in_second_coefficient(g in connected_gaussian(7)) {
        prop_assume!(g.involution() == AntiInvolution::Inverse);
        let n = g.order();
        prop_assume!(n >= 2);
        let poly = charpoly_subgraphs(&g);
        prop_assert_eq!(poly.coeff(n - 2), GaussianRational::from_i64(-(g.size() as i64)));
    }

    #[test]
    fn inverse_gains_behave_like_unweighted_matchings(n in 2usize..=8, seed in any::<u64>()) {
        let mut rng = rng(seed);
        let tree: SkewGainGraph<GaussianRational> = random_tree(&mut rng, n, AntiInvolution::Inverse);
        let ones = SkewGainGraph::new(
            n,
            tree.edges().iter().map(|e| (e.u, e.v, GaussianRational::one())),
            AntiInvolution::Identity,
        )
        .unwrap();
        prop_assert_eq!(charpoly_subgraphs(&tree), charpoly_subgraphs(&ones));
    }

    #[test]
    fn file_round_trip_preserves_every_route(g in connected_gaussian(6)) {
        let text = write_graph_file(&g, &[]);
        let back: SkewGainGraph<GaussianRational> = parse_graph_file_as(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(charpoly_subgraphs(&back), charpoly_subgraphs(&g));
        prop_assert_eq!(charpoly_direct(&back), charpoly_direct(&g));
    }

    #[test]
    fn closed_form_spectra_are_roots(leaves in 1usize..=8, seed in any::<u64>(), f in involution()) {
        let mut rng = rng(seed);
        let g = SkewGainGraph::star(leaves, gains::<GaussianRational>(&mut rng, leaves), f).unwrap();
        let poly = charpoly_direct(&g);
        let spectrum = star_spectrum(&g).unwrap();
        prop_assert_eq!(spectrum.total_multiplicity(), g.order());
        for (value, _) in spectrum.entries() {
            prop_assert!(poly.eval_complex(*value).norm() < 1e-7);
        }
    }
}
