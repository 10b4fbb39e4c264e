use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::subsequence;

use xyz_spectra::algebra::{
    char_poly_exact, det_exact, laplacian, matrix_tree_count, resultant, symmetric_eigenvalues,
    IntMatrix, IntPoly, DEFAULT_EIGEN_TOL,
};
use xyz_spectra::formulas::{eval_l_exact, eval_trees, predict_spectrum, registry, Params};
use xyz_spectra::verify::{verify_fixed_multiplicities, BaseData};
use xyz_spectra::{as_regular, xyz_transform, GeneratorSpec, Graph, Part, RegularGraph, XyzCode};

fn circulant() -> impl Strategy<Value = RegularGraph> {
    (5usize..=9)
        .prop_flat_map(|n| {
            (
                Just(n),
                subsequence((1..=n / 2).collect::<Vec<_>>(), 1..=(n / 2).min(2)),
            )
        })
        .prop_map(|(n, jumps)| {
            as_regular(GeneratorSpec::Circulant(n, jumps).generate().unwrap()).unwrap()
        })
}

fn any_code() -> impl Strategy<Value = XyzCode> {
    (0usize..64).prop_map(|i| XyzCode::all()[i])
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            (Just(n), subsequence(pairs, 0..=len))
        })
        .prop_map(|(n, edges)| GeneratorSpec::EdgeList(n, edges).generate().unwrap())
}

fn params(g: &RegularGraph) -> Params {
    Params::new(g.n(), g.m(), g.degree())
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn handshake(g in any_graph()) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn complement_is_an_involution(g in any_graph()) {
        prop_assert!(g.complement().complement().same_adjacency(&g));
        let n = g.vertex_count();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn line_graph_regularity(g in circulant()) {
        let l = g.graph().line_graph();
        prop_assert!(l.degrees().iter().all(|&d| d == 2 * g.degree() - 2));
        prop_assert_eq!(l.vertex_count(), g.m());
    }

    #[test]
    fn char_poly_agrees_with_determinant(
        entries in proptest::collection::vec(-4i64..=4, 25),
        n in 1usize..=5,
        x in -6i64..=6,
    ) {
        let m = IntMatrix::from_fn(n, n, |i, j| entries[i.min(j) * 5 + i.max(j)]);
        let cp = char_poly_exact(&m).unwrap();
        prop_assert_eq!(cp.eval(&BigInt::from(x)), det_exact(&m.shifted_negation(&BigInt::from(x))).unwrap());
    }

    #[test]
    fn resultant_sign_relation(
        p in proptest::collection::vec(-5i64..=5, 2..=5),
        q in proptest::collection::vec(-5i64..=5, 2..=4),
    ) {
        let (p, q) = (IntPoly::from_i64(&p), IntPoly::from_i64(&q));
        prop_assume!(p.degree().unwrap_or(0) > 0 && q.degree().unwrap_or(0) > 0);
        let sign = if p.degree().unwrap() * q.degree().unwrap() % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(resultant(&p, &q).unwrap(), BigInt::from(sign) * resultant(&q, &p).unwrap());
    }

    #[test]
    fn predicted_spectrum_matches_direct(g in circulant(), code in any_code()) {
        let base = BaseData::new(&g).unwrap();
        let predicted = predict_spectrum(registry(code), &base.params, &base.spectrum).unwrap().spectrum();
        let direct = symmetric_eigenvalues(&laplacian(&xyz_transform(&g, code)), DEFAULT_EIGEN_TOL).unwrap();
        let dev = predicted.max_abs_deviation(&direct);
        prop_assert!(dev.is_some_and(|d| d <= 1e-8), "{code}: {dev:?}");
    }

    #[test]
    fn predicted_trees_match_matrix_tree(g in circulant(), code in any_code()) {
        let base = BaseData::new(&g).unwrap();
        let formula = eval_trees(registry(code), &base.charpoly, &base.params).unwrap();
        prop_assert_eq!(formula, matrix_tree_count(&xyz_transform(&g, code)));
    }

    #[test]
    fn bar_codes_pair_reciprocally(g in circulant(), code in any_code()) {
        let base = BaseData::new(&g).unwrap();
        let a = predict_spectrum(registry(code), &base.params, &base.spectrum).unwrap().spectrum();
        let b = predict_spectrum(registry(code.bar()), &base.params, &base.spectrum).unwrap().spectrum();
        let s = (g.n() + g.m()) as f64;
        for i in 1..g.n() + g.m() {
            prop_assert!((a.lambda(i) + b.lambda(g.n() + g.m() - i) - s).abs() <= 1e-8);
        }
    }

    #[test]
    fn z_zero_factorizes(g in circulant(), x in 0usize..4, y in 0usize..4, t in -20i64..20) {
        let (x, y) = (Part::ALL[x], Part::ALL[y]);
        let base = BaseData::new(&g).unwrap();
        let p = params(&g);
        let lam = rat(t) + BigRational::new(1.into(), 3.into());
        let eval = |c: XyzCode| eval_l_exact(registry(c), &base.charpoly, &p, &lam);
        let lhs = eval(XyzCode::new(x, y, Part::Zero)).unwrap() * num_traits::pow(lam.clone(), g.n() + g.m());
        let rhs = eval(XyzCode::new(x, Part::Zero, Part::Zero)).unwrap() * eval(XyzCode::new(Part::Zero, y, Part::Zero)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn complement_char_poly_by_exact_division(g in circulant()) {
        // L(G^{−00}, λ) = (−1)^n λ^{m+1} L(n − λ, G) / (λ − n)
        let (n, m) = (g.n() as i64, g.m());
        let base = BaseData::new(&g).unwrap();
        let reflected = base.charpoly.substitute_affine(&BigInt::from(-1), &BigInt::from(n));
        let sign = IntPoly::constant(if n % 2 == 0 { 1 } else { -1 });
        let num = &(&sign * &reflected) * &IntPoly::x().pow(m as u32 + 1);
        let predicted = num.div_exact(&IntPoly::linear(n)).unwrap();
        let direct = char_poly_exact(&laplacian(&xyz_transform(&g, "-00".parse().unwrap()))).unwrap();
        prop_assert_eq!(predicted, direct);
    }

    #[test]
    fn fixed_eigenvalues_recur(g in circulant(), code in any_code()) {
        prop_assume!(g.m() > g.n());
        prop_assert_eq!(verify_fixed_multiplicities(&g, code), Ok(()));
    }
}
