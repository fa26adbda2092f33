use proptest::prelude::*;

use forestsym::forests::{
    c_coefficients, enumerate_perms_leq, forest_from_permutation, forest_weight, wt_perm, X_of,
};
use forestsym::graphs::{concat, enumerate_hessenberg, graph_of, modular_triples};
use forestsym::oracles::{csf_oracle, llt_oracle};
use forestsym::symfunc::{monomial_expand, omega};
use forestsym::{HessenbergFunction, Rational, YBasis};

fn hessenberg(max_n: usize) -> impl Strategy<Value = HessenbergFunction> {
    (1..=max_n).prop_flat_map(|n| {
        let all = enumerate_hessenberg(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn forest_expansion_is_multiplicative(a in hessenberg(3), b in hessenberg(3)) {
        for y in [YBasis::Rho, YBasis::QE] {
            let joined = X_of(&concat(&a, &b), y);
            let product = X_of(&a, y).multiply(&X_of(&b, y)).unwrap();
            prop_assert_eq!(joined, product);
        }
    }

    #[test]
    fn coefficients_count_permutations_at_one(m in hessenberg(6)) {
        let total: Rational = c_coefficients(&m).values().map(|c| c.eval_int(1)).sum();
        let count: u64 = (1..=m.n()).map(|i| (m.at(i) - i + 1) as u64).product();
        prop_assert_eq!(total, Rational::from_integer(count.into()));
    }

    #[test]
    fn forest_map_keeps_weight_and_type(m in hessenberg(5)) {
        let g = graph_of(&m);
        for s in enumerate_perms_leq(&m) {
            let f = forest_from_permutation(&s, &m).unwrap();
            prop_assert_eq!(forest_weight(&f, &g), wt_perm(&s, &m));
            prop_assert_eq!(f.partition(), s.cycle_type());
        }
    }

    #[test]
    fn oracles_agree_with_forests(m in hessenberg(5)) {
        let x = X_of(&m, YBasis::Rho);
        let p = forestsym::symfunc::convert(&x, forestsym::Basis::P).unwrap();
        prop_assert_eq!(monomial_expand(&omega(&p).unwrap()), csf_oracle(&graph_of(&m)));
        prop_assert_eq!(monomial_expand(&X_of(&m, YBasis::QE)), llt_oracle(&graph_of(&m)));
    }

    #[test]
    fn csf_coefficients_are_palindromic(m in hessenberg(5)) {
        let g = graph_of(&m);
        let e = g.edges().len();
        for c in csf_oracle(&g).terms().values() {
            let mut padded = c.coeffs().to_vec();
            padded.resize(e + 1, Rational::from_integer(0.into()));
            let mut reversed = padded.clone();
            reversed.reverse();
            prop_assert_eq!(padded, reversed);
        }
    }
}

#[test]
fn modular_triples_exist_from_three_vertices() {
    assert!(modular_triples(2).is_empty());
    for n in 3..=6 {
        assert!(!modular_triples(n).is_empty(), "n={n}");
        for t in modular_triples(n) {
            assert!(t.validate());
        }
    }
}
