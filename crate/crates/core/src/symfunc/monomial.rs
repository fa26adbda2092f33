//! Monomial-symmetric coordinates: the canonical form used to decide equality
//! of symmetric functions coming from different routes.
//!
//! A degree-n symmetric function is determined by its restriction to n
//! variables, and its m_λ coefficient is the coefficient of the single monomial
//! `x_1^{λ_1} x_2^{λ_2} ...`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use super::{convert, Basis, SymFunc};
use crate::coeffs::{QPoly, Rational};
use crate::error::Result;
use crate::partitions::{enumerate_partitions, Partition};

#[derive(Clone, PartialEq, Eq)]
pub struct MonomialSym {
    degree: usize,
    nvars: usize,
    terms: BTreeMap<Partition, QPoly>,
}

impl MonomialSym {
    pub fn zero(degree: usize) -> Self {
        MonomialSym {
            degree,
            nvars: degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &QPoly) {
        assert_eq!(lambda.size(), self.degree);
        assert!(lambda.len() <= self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &MonomialSym) -> MonomialSym {
        assert_eq!(self.degree, other.degree, "adding monomial expansions of different degrees");
        let mut out = self.clone();
        for (lam, c) in &other.terms {
            out.add_term(lam.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &MonomialSym) -> MonomialSym {
        self.add(&other.scale(&QPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &QPoly) -> MonomialSym {
        self.map_coeffs(|v| v * c)
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&QPoly) -> QPoly) -> MonomialSym {
        let mut out = MonomialSym::zero(self.degree);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, mut f: impl FnMut(&QPoly) -> Result<QPoly>) -> Result<MonomialSym> {
        let mut out = MonomialSym::zero(self.degree);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), &f(c)?);
        }
        Ok(out)
    }

    pub fn eval_q(&self, q: &Rational) -> MonomialSym {
        self.map_coeffs(|c| QPoly::constant(c.eval(q)))
    }

    /// Product, computed in `deg f + deg g` variables: the coefficient of
    /// `x^μ` sums `f_α g_{μ-α}` over exponent vectors `α ≤ μ` with `|α| = deg f`.
    pub fn mul(&self, other: &MonomialSym) -> MonomialSym {
        let n = self.degree + other.degree;
        let mut out = MonomialSym::zero(n);
        for mu in enumerate_partitions(n) {
            let mut target = mu.parts().to_vec();
            target.resize(n, 0);
            let mut acc = QPoly::zero();
            let mut alpha = vec![0usize; n];
            split_exponents(&target, 0, self.degree, &mut alpha, &mut |a| {
                let left = Partition::new(a.to_vec());
                let right = Partition::new(target.iter().zip(a).map(|(t, x)| t - x).collect());
                if let (Some(x), Some(y)) = (self.terms.get(&left), other.terms.get(&right)) {
                    acc += &(x * y);
                }
            });
            out.add_term(mu, &acc);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "basis": "m",
            "nvars": self.nvars,
            "terms": self.terms.iter().map(|(lam, c)| serde_json::json!({
                "partition": lam.to_json(),
                "coeff": c.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn split_exponents(
    target: &[usize],
    pos: usize,
    remaining: usize,
    alpha: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == target.len() {
        if remaining == 0 {
            visit(alpha);
        }
        return;
    }
    let room: usize = target[pos + 1..].iter().sum();
    let lo = remaining.saturating_sub(room);
    for a in lo..=target[pos].min(remaining) {
        alpha[pos] = a;
        split_exponents(target, pos + 1, remaining - a, alpha, visit);
    }
    alpha[pos] = 0;
}

impl fmt::Display for MonomialSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})m{lam}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialSym[deg {}; {self}]", self.degree)
    }
}

/// Sparse integer polynomial in a fixed number of variables.
type IntPoly = HashMap<Vec<u8>, i64>;

fn generator_poly(basis: Basis, k: usize, nvars: usize) -> IntPoly {
    let mut out = IntPoly::new();
    match basis {
        Basis::P => {
            for i in 0..nvars {
                let mut e = vec![0u8; nvars];
                e[i] = k as u8;
                out.insert(e, 1);
            }
        }
        Basis::E | Basis::H => {
            let cap = if basis == Basis::E { 1 } else { k };
            let mut e = vec![0u8; nvars];
            fn rec(pos: usize, rest: usize, cap: usize, e: &mut Vec<u8>, out: &mut IntPoly) {
                if pos == e.len() {
                    if rest == 0 {
                        out.insert(e.clone(), 1);
                    }
                    return;
                }
                for a in 0..=rest.min(cap) {
                    e[pos] = a as u8;
                    rec(pos + 1, rest - a, cap, e, out);
                }
                e[pos] = 0;
            }
            rec(0, k, cap, &mut e, &mut out);
        }
        Basis::Rho => unreachable!("rho is routed through h"),
    }
    out
}

fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::with_capacity(a.len() * 2);
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

type Row = Arc<Vec<(Partition, i64)>>;

fn row_cache() -> &'static RwLock<HashMap<(Basis, Partition), Row>> {
    static CACHE: OnceLock<RwLock<HashMap<(Basis, Partition), Row>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// m-coefficients of a single basis element `b_λ`, computed by multiplying out
/// its generators as explicit polynomials in `|λ|` variables.
fn expansion_row(basis: Basis, lambda: &Partition) -> Row {
    let key = (basis, lambda.clone());
    if let Some(hit) = row_cache().read().expect("monomial cache poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let n = lambda.size();
    let mut poly: IntPoly = [(vec![0u8; n], 1i64)].into_iter().collect();
    for &k in lambda.parts() {
        poly = poly_mul(&poly, &generator_poly(basis, k, n));
    }
    let mut row: Vec<(Partition, i64)> = poly
        .into_iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (Partition::new(e.iter().map(|&x| x as usize).collect()), c))
        .collect();
    row.sort();
    let row = Arc::new(row);
    row_cache()
        .write()
        .expect("monomial cache poisoned")
        .entry(key)
        .or_insert_with(|| Arc::clone(&row));
    row
}

/// Coordinates of `f` in the monomial basis. ρ-basis input is expanded through h.
pub fn monomial_expand(f: &SymFunc) -> MonomialSym {
    let f = if f.basis() == Basis::Rho {
        convert(f, Basis::H).expect("rho converts to h")
    } else {
        f.clone()
    };
    let mut out = MonomialSym::zero(f.degree());
    for (lam, c) in f.terms() {
        for (mu, k) in expansion_row(f.basis(), lam).iter() {
            out.add_term(mu.clone(), &c.scale(&Rational::from_integer(BigInt::from(*k))));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(p: &[usize]) -> Partition {
        Partition::from(p)
    }

    fn mono(degree: usize, terms: &[(&[usize], i64)]) -> MonomialSym {
        let mut m = MonomialSym::zero(degree);
        for (lam, c) in terms {
            m.add_term(part(lam), &QPoly::from_int(*c));
        }
        m
    }

    #[test]
    fn small_expansions() {
        let e2 = SymFunc::basis_unit(Basis::E, &part(&[2]));
        assert_eq!(monomial_expand(&e2), mono(2, &[(&[1, 1], 1)]));
        let h2 = SymFunc::basis_unit(Basis::H, &part(&[2]));
        assert_eq!(monomial_expand(&h2), mono(2, &[(&[2], 1), (&[1, 1], 1)]));
        let p2 = SymFunc::basis_unit(Basis::P, &part(&[2]));
        assert_eq!(monomial_expand(&p2), mono(2, &[(&[2], 1)]));
        // h_1^3: multinomial coefficients.
        let h111 = SymFunc::basis_unit(Basis::H, &part(&[1, 1, 1]));
        assert_eq!(
            monomial_expand(&h111),
            mono(3, &[(&[3], 1), (&[2, 1], 3), (&[1, 1, 1], 6)])
        );
    }

    #[test]
    fn expansion_agrees_across_bases() {
        for n in 1..=6 {
            for lam in enumerate_partitions(n) {
                for b in [Basis::E, Basis::H] {
                    let f = SymFunc::basis_unit(b, &lam);
                    let via_p = convert(&f, Basis::P).unwrap();
                    assert_eq!(monomial_expand(&f), monomial_expand(&via_p), "{b}{lam}");
                }
            }
        }
    }

    #[test]
    fn product_of_monomial_expansions() {
        let e1 = monomial_expand(&SymFunc::basis_unit(Basis::E, &part(&[1])));
        let e11 = monomial_expand(&SymFunc::basis_unit(Basis::E, &part(&[1, 1])));
        assert_eq!(e1.mul(&e1), e11);
    }

    fn arb_basis() -> impl Strategy<Value = Basis> {
        prop_oneof![Just(Basis::E), Just(Basis::H), Just(Basis::P)]
    }

    fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
        (1..=max).prop_flat_map(|n| {
            let ps = enumerate_partitions(n);
            (0..ps.len()).prop_map(move |i| ps[i].clone())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn expansion_is_multiplicative(
            b in arb_basis(),
            lam in arb_partition(3),
            mu in arb_partition(3),
            c in prop::collection::vec(-3i64..=3, 1..3),
        ) {
            let coeff = QPoly::from_ints(&c);
            let f = SymFunc::basis_unit(b, &lam).scale(&coeff);
            let g = SymFunc::basis_unit(b, &mu);
            let fg = f.multiply(&g).unwrap();
            prop_assert_eq!(monomial_expand(&fg), monomial_expand(&f).mul(&monomial_expand(&g)));
        }

        #[test]
        fn expansion_is_linear(
            lam in arb_partition(4),
            c1 in prop::collection::vec(-3i64..=3, 0..3),
            c2 in prop::collection::vec(-3i64..=3, 0..3),
        ) {
            let n = lam.size();
            let others = enumerate_partitions(n);
            let mu = &others[others.len() / 2];
            let mut f = SymFunc::zero(n, Basis::H);
            f.add_term(lam.clone(), &QPoly::from_ints(&c1));
            f.add_term(mu.clone(), &QPoly::from_ints(&c2));
            let parts = monomial_expand(&SymFunc::basis_unit(Basis::H, &lam)).scale(&QPoly::from_ints(&c1))
                .add(&monomial_expand(&SymFunc::basis_unit(Basis::H, mu)).scale(&QPoly::from_ints(&c2)));
            prop_assert_eq!(monomial_expand(&f), parts);
        }
    }
}
