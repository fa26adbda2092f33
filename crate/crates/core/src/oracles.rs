//! Brute-force definitions: colorings, orientations and the vertical-strip
//! recursion, evaluated directly.
//!
//! A degree-n symmetric function is read off colorings with exactly n colors:
//! the coefficient of `m_λ` is the total weight of colorings in which color `c`
//! is used `λ_c` times.

use std::collections::BTreeMap;

use crate::coeffs::QPoly;
use crate::error::{Error, Result};
use crate::forests::q_minus_one;
use crate::graphs::{graph_of, restrict, Decoration, Graph, HessenbergFunction};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symfunc::{Basis, MonomialSym, SymFunc};

/// `#{(i, j) : i < j, κ(i) < κ(j), {i, j} ∈ E}`. `kappa[v - 1]` is the color of `v`.
pub fn asc(kappa: &[usize], g: &Graph) -> usize {
    g.edges().iter().filter(|&&(i, j)| kappa[i - 1] < kappa[j - 1]).count()
}

pub fn is_proper(kappa: &[usize], g: &Graph) -> bool {
    g.edges().iter().all(|&(i, j)| kappa[i - 1] != kappa[j - 1])
}

/// Visits every arrangement of the multiset with `counts[c]` copies of color `c + 1`.
fn for_each_arrangement(counts: &mut [usize], slot: usize, kappa: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    if slot == kappa.len() {
        visit(kappa);
        return;
    }
    for c in 0..counts.len() {
        if counts[c] == 0 {
            continue;
        }
        counts[c] -= 1;
        kappa[slot] = c + 1;
        for_each_arrangement(counts, slot + 1, kappa, visit);
        counts[c] += 1;
    }
}

fn coloring_sum(g: &Graph, proper_only: bool) -> MonomialSym {
    let n = g.n();
    let mut out = MonomialSym::zero(n);
    for lam in enumerate_partitions(n) {
        let mut hist: Vec<u64> = Vec::new();
        let mut counts = lam.parts().to_vec();
        let mut kappa = vec![0usize; n];
        for_each_arrangement(&mut counts, 0, &mut kappa, &mut |k| {
            if proper_only && !is_proper(k, g) {
                return;
            }
            let a = asc(k, g);
            if hist.len() <= a {
                hist.resize(a + 1, 0);
            }
            hist[a] += 1;
        });
        out.add_term(lam, &QPoly::from_counts(&hist));
    }
    out
}

/// `csf_q(G) = Σ_{κ proper} q^{asc(κ)} x_κ`.
pub fn csf_oracle(g: &Graph) -> MonomialSym {
    coloring_sum(g, true)
}

/// `LLT(G) = Σ_κ q^{asc(κ)} x_κ` over all colorings.
pub fn llt_oracle(g: &Graph) -> MonomialSym {
    coloring_sum(g, false)
}

/// `LLT(m, S)`, peeling `S` in increasing order.
pub fn llt_vertical_oracle(d: &Decoration) -> Result<MonomialSym> {
    llt_vertical_oracle_ordered(d.base(), d.set())
}

/// `LLT(m, S)` with `S` peeled in the given order:
/// `LLT(m, S) = (LLT(m, S') − LLT(m', S')) / (q − 1)`.
pub fn llt_vertical_oracle_ordered(m: &HessenbergFunction, order: &[usize]) -> Result<MonomialSym> {
    Decoration::new(m.clone(), order.to_vec())?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != order.len() {
        return Err(Error::InvalidDecoration(format!("repeated position in {order:?}")));
    }
    peel(m, order)
}

fn peel(m: &HessenbergFunction, order: &[usize]) -> Result<MonomialSym> {
    match order.split_first() {
        None => Ok(llt_oracle(&graph_of(m))),
        Some((&i, rest)) => {
            let keep = peel(m, rest)?;
            let drop = peel(&restrict(m, &[i])?, rest)?;
            let d = q_minus_one();
            keep.sub(&drop).try_map_coeffs(|c| c.exact_divide(&d))
        }
    }
}

/// Proper colorings of `g` with colors in `[k]`.
pub fn chromatic_count(g: &Graph, k: usize) -> u128 {
    fn rec(v: usize, g: &Graph, k: usize, kappa: &mut Vec<usize>) -> u128 {
        if v > g.n() {
            return 1;
        }
        let mut total = 0;
        for c in 1..=k {
            if (1..v).all(|u| !g.has_edge(u, v) || kappa[u - 1] != c) {
                kappa.push(c);
                total += rec(v + 1, g, k, kappa);
                kappa.pop();
            }
        }
        total
    }
    rec(1, g, k, &mut Vec::with_capacity(g.n()))
}

/// `Σ_o q^{wt(o)} e_{λ(o)}` over all orientations: `wt(o)` counts edges
/// oriented to the left (towards the smaller vertex) and `λ(o)` records the
/// fibres of the lowest vertex reachable along left edges.
pub fn orientation_sum(g: &Graph) -> SymFunc {
    let n = g.n();
    let edges = g.edges();
    let mut hist: BTreeMap<Partition, Vec<u64>> = BTreeMap::new();
    let mut lrv = vec![0usize; n + 1];
    for mask in 0u64..1 << edges.len() {
        for (v, slot) in lrv.iter_mut().enumerate() {
            *slot = v;
        }
        // Left edges point to smaller vertices, so increasing order suffices.
        let mut left_from: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (b, &(u, v)) in edges.iter().enumerate() {
            if mask >> b & 1 == 1 {
                left_from[v].push(u);
            }
        }
        for v in 1..=n {
            for &u in &left_from[v] {
                lrv[v] = lrv[v].min(lrv[u]);
            }
        }
        let mut fibre = vec![0usize; n + 1];
        for &r in &lrv[1..] {
            fibre[r] += 1;
        }
        let lam = Partition::new(fibre);
        let w = mask.count_ones() as usize;
        let h = hist.entry(lam).or_default();
        if h.len() <= w {
            h.resize(w + 1, 0);
        }
        h[w] += 1;
    }
    let mut out = SymFunc::zero(n, Basis::E);
    for (lam, h) in hist {
        out.add_term(lam, &QPoly::from_counts(&h));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Rational;
    use crate::forests::{X_of, YBasis};
    use crate::graphs::{concat, enumerate_decorations, enumerate_hessenberg, modular_triples};
    use crate::symfunc::monomial_expand;
    use num_traits::One;

    fn hf(s: &str) -> HessenbergFunction {
        s.parse().unwrap()
    }

    fn p(s: &[usize]) -> Partition {
        Partition::from(s)
    }

    fn path3() -> Graph {
        Graph::new(3, &[(1, 2), (2, 3)]).unwrap()
    }

    fn peo_graph() -> Graph {
        Graph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap()
    }

    fn k(n: usize) -> Graph {
        graph_of(&HessenbergFunction::complete(n))
    }

    #[test]
    fn asc_examples() {
        assert_eq!(asc(&[2, 2, 2], &path3()), 0);
        assert_eq!(asc(&[1, 2, 3], &path3()), 2);
        assert_eq!(asc(&[3, 2, 1], &path3()), 0);
    }

    #[test]
    fn csf_examples() {
        let e = csf_oracle(&Graph::edgeless(2));
        assert_eq!(e.coeff(&p(&[1, 1])), QPoly::from_int(2));
        assert_eq!(e.coeff(&p(&[2])), QPoly::one());
        let k2 = csf_oracle(&k(2));
        assert_eq!(k2.coeff(&p(&[1, 1])), QPoly::from_ints(&[1, 1]));
        assert!(k2.coeff(&p(&[2])).is_zero());

        let mut expected = SymFunc::zero(4, Basis::P);
        for (lam, c) in [(&[1, 1, 1, 1][..], 1), (&[2, 1, 1], -4), (&[2, 2], 1), (&[3, 1], 4), (&[4], -2)] {
            expected.add_term(p(lam), &QPoly::from_int(c));
        }
        assert_eq!(csf_oracle(&peo_graph()).eval_q(&Rational::one()), monomial_expand(&expected));
    }

    #[test]
    fn llt_examples() {
        let one = llt_oracle(&Graph::edgeless(1));
        assert_eq!(one.coeff(&p(&[1])), QPoly::one());
        let k2 = llt_oracle(&k(2));
        assert_eq!(k2.coeff(&p(&[1, 1])), QPoly::from_ints(&[1, 1]));
        assert_eq!(k2.coeff(&p(&[2])), QPoly::one());
        for n in 1..=6 {
            let h1n = monomial_expand(&SymFunc::basis_unit(Basis::H, &Partition::ones(n)));
            for m in enumerate_hessenberg(n).into_iter().step_by(7) {
                assert_eq!(llt_oracle(&graph_of(&m)).eval_q(&Rational::one()), h1n, "{m}");
            }
        }
    }

    #[test]
    fn vertical_oracle_examples() {
        let m = hf("2,4,4,4");
        let empty = Decoration::new(m.clone(), vec![]).unwrap();
        assert_eq!(llt_vertical_oracle(&empty).unwrap(), llt_oracle(&graph_of(&m)));
        let d = Decoration::new(hf("2,2"), vec![1]).unwrap();
        let v = llt_vertical_oracle(&d).unwrap();
        assert_eq!(v.coeff(&p(&[1, 1])), QPoly::one());
        assert!(v.coeff(&p(&[2])).is_zero());
        assert!(llt_vertical_oracle_ordered(&hf("2,2,3"), &[2]).is_err());
    }

    #[test]
    fn vertical_oracle_is_order_independent() {
        for n in 3..=5 {
            for m in enumerate_hessenberg(n) {
                for d in enumerate_decorations(&m) {
                    if d.set().len() < 2 {
                        continue;
                    }
                    let rev: Vec<usize> = d.set().iter().rev().copied().collect();
                    assert_eq!(
                        llt_vertical_oracle(&d).unwrap(),
                        llt_vertical_oracle_ordered(&m, &rev).unwrap(),
                        "{m} {rev:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn chromatic_examples() {
        for x in 1..=5u128 {
            let poly = x.pow(4) + 5 * x * x - 4 * x.pow(3) - 2 * x;
            assert_eq!(chromatic_count(&peo_graph(), x as usize), poly);
        }
        assert_eq!(chromatic_count(&k(3), 2), 0);
        assert_eq!(chromatic_count(&Graph::edgeless(4), 3), 81);
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation_sum(&Graph::edgeless(3)), SymFunc::basis_unit(Basis::E, &Partition::ones(3)));
        let mut k2 = SymFunc::zero(2, Basis::E);
        k2.add_term(p(&[1, 1]), &QPoly::one());
        k2.add_term(p(&[2]), &QPoly::q());
        assert_eq!(orientation_sum(&k(2)), k2);
        let shifted = X_of(&HessenbergFunction::complete(3), YBasis::QE).map_coeffs(QPoly::shift_q_plus_one);
        assert_eq!(orientation_sum(&k(3)), shifted);
    }

    #[test]
    fn oracles_are_multiplicative() {
        for n1 in 1..=3 {
            for n2 in 1..=6 - n1 {
                let a = &enumerate_hessenberg(n1)[n1 - 1];
                let b = enumerate_hessenberg(n2).pop().unwrap();
                let ab = graph_of(&concat(a, &b));
                let (ga, gb) = (graph_of(a), graph_of(&b));
                assert_eq!(csf_oracle(&ab), csf_oracle(&ga).mul(&csf_oracle(&gb)));
                assert_eq!(llt_oracle(&ab), llt_oracle(&ga).mul(&llt_oracle(&gb)));
            }
        }
    }

    #[test]
    fn oracles_satisfy_the_modular_law() {
        let one_plus_q = QPoly::from_ints(&[1, 1]);
        for n in 1..=4 {
            for t in modular_triples(n) {
                for f in [csf_oracle, llt_oracle] {
                    let (f0, f1, f2) = (f(&graph_of(&t.m0)), f(&graph_of(&t.m1)), f(&graph_of(&t.m2)));
                    assert_eq!(f1.scale(&one_plus_q), f0.scale(&QPoly::q()).add(&f2), "{t:?}");
                }
            }
        }
    }
}
