//! Changes of basis among e, h, p (and out of ρ), driven by the Newton
//! recurrences and the defining recurrence of ρ_n.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use super::{Basis, SymFunc};
use crate::coeffs::{q_integer, QPoly, Rational};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_compositions, sort_to_partition, Partition};

type CacheKey = (Basis, Basis, Partition);

// Append-only: entries are computed outside the lock and inserted once.
fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<SymFunc>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<SymFunc>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn unit(basis: Basis, parts: &[usize]) -> SymFunc {
    SymFunc::basis_unit(basis, &Partition::from(parts))
}

/// Expansion of the single generator `from_k` in the `to` basis.
fn generator(from: Basis, k: usize, to: Basis) -> Result<SymFunc> {
    if from == to || k == 0 {
        return Ok(unit(to, &[k]));
    }
    let mul = |a: &SymFunc, b: &SymFunc| a.multiply(b).expect("same basis");
    match (from, to) {
        (_, Basis::Rho) => Err(Error::UnsupportedBasis {
            basis: "rho",
            op: "conversion into rho",
        }),
        // k h_k = Σ_{i=1}^{k} p_i h_{k-i}
        (Basis::H, Basis::P) => {
            let mut acc = SymFunc::zero(k, Basis::P);
            for i in 1..=k {
                let rest = expansion(Basis::H, &Partition::single(k - i), Basis::P)?;
                acc = &acc + &mul(&unit(Basis::P, &[i]), &rest);
            }
            Ok(acc.scale_rational(&Rational::new(BigInt::one(), BigInt::from(k))))
        }
        // k e_k = Σ_{i=1}^{k} (-1)^{i-1} p_i e_{k-i}
        (Basis::E, Basis::P) => {
            let mut acc = SymFunc::zero(k, Basis::P);
            for i in 1..=k {
                let rest = expansion(Basis::E, &Partition::single(k - i), Basis::P)?;
                let term = mul(&unit(Basis::P, &[i]), &rest);
                acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            Ok(acc.scale_rational(&Rational::new(BigInt::one(), BigInt::from(k))))
        }
        // p_k = k h_k - Σ_{i=1}^{k-1} p_i h_{k-i}
        (Basis::P, Basis::H) => {
            let mut acc = unit(Basis::H, &[k]).scale_rational(&rational(k as i64));
            for i in 1..k {
                let p_i = expansion(Basis::P, &Partition::single(i), Basis::H)?;
                acc = &acc - &mul(&p_i, &unit(Basis::H, &[k - i]));
            }
            Ok(acc)
        }
        // (-1)^{k-1} p_k = k e_k - Σ_{i=1}^{k-1} (-1)^{i-1} p_i e_{k-i}
        (Basis::P, Basis::E) => {
            let mut acc = unit(Basis::E, &[k]).scale_rational(&rational(k as i64));
            for i in 1..k {
                let p_i = expansion(Basis::P, &Partition::single(i), Basis::E)?;
                let term = mul(&p_i, &unit(Basis::E, &[k - i]));
                acc = if i % 2 == 1 { &acc - &term } else { &acc + &term };
            }
            Ok(if k % 2 == 1 { acc } else { -&acc })
        }
        // ρ_k = [k]_q h_k - Σ_{i=1}^{k-1} ρ_i h_{k-i}
        (Basis::Rho, Basis::H) => {
            let mut acc = unit(Basis::H, &[k]).scale(&q_integer(k));
            for i in 1..k {
                let rho_i = expansion(Basis::Rho, &Partition::single(i), Basis::H)?;
                acc = &acc - &mul(&rho_i, &unit(Basis::H, &[k - i]));
            }
            Ok(acc)
        }
        (Basis::Rho, _) => {
            let in_h = expansion(Basis::Rho, &Partition::single(k), Basis::H)?;
            convert(&in_h, to)
        }
        (Basis::H, Basis::E) | (Basis::E, Basis::H) => {
            let in_p = expansion(from, &Partition::single(k), Basis::P)?;
            convert(&in_p, to)
        }
        _ => unreachable!("identity handled above"),
    }
}

/// Expansion of `from_λ` in the `to` basis, memoized.
fn expansion(from: Basis, lambda: &Partition, to: Basis) -> Result<Arc<SymFunc>> {
    let key = (from, to, lambda.clone());
    if let Some(hit) = cache().read().expect("conversion cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let value = match lambda.parts() {
        [] => SymFunc::one(to),
        [k] => generator(from, *k, to)?,
        [first, rest @ ..] => {
            let head = expansion(from, &Partition::single(*first), to)?;
            let tail = expansion(from, &Partition::from(rest), to)?;
            head.multiply(&tail)?
        }
    };
    let value = Arc::new(value);
    cache()
        .write()
        .expect("conversion cache poisoned")
        .entry(key)
        .or_insert_with(|| Arc::clone(&value));
    Ok(value)
}

/// Exact change of basis. Targets are e, h or p; ρ is only a source.
pub fn convert(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    if target == Basis::Rho {
        return Err(Error::UnsupportedBasis {
            basis: "rho",
            op: "conversion into rho",
        });
    }
    if f.basis() == target {
        return Ok(f.clone());
    }
    let mut out = SymFunc::zero(f.degree(), target);
    for (lam, c) in f.terms() {
        let ex = expansion(f.basis(), lam, target)?;
        for (mu, d) in ex.terms() {
            out.add_term(mu.clone(), &(c * d));
        }
    }
    Ok(out)
}

/// Expands a ρ-basis function in h via `ρ_n = [n]_q h_n - Σ_{i<n} ρ_i h_{n-i}`.
pub fn rho_to_h(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::Rho {
        return Err(Error::UnsupportedBasis {
            basis: f.basis().name(),
            op: "rho_to_h expects the rho basis",
        });
    }
    convert(f, Basis::H)
}

/// ρ_n as the signed composition sum `Σ_{α ⊨ n} (-1)^{ℓ(α)-1} [α_1]_q h_{λ(α)}`.
pub fn rho_n_alt(n: usize) -> SymFunc {
    let mut out = SymFunc::zero(n, Basis::H);
    for alpha in enumerate_compositions(n) {
        let c = q_integer(alpha.parts()[0]);
        let c = if alpha.len() % 2 == 1 { c } else { -c };
        out.add_term(sort_to_partition(&alpha), &c);
    }
    out
}

/// Hook Schur function `s_{(a, 1^b)} = Σ_{j=0}^{b} (-1)^j h_{a+j} e_{b-j}`, in h.
fn hook_schur(a: usize, b: usize) -> Result<SymFunc> {
    let mut out = SymFunc::zero(a + b, Basis::H);
    for j in 0..=b {
        let e_part = convert(&unit(Basis::E, &[b - j]), Basis::H)?;
        let term = unit(Basis::H, &[a + j]).multiply(&e_part)?;
        out = if j % 2 == 0 { &out + &term } else { &out - &term };
    }
    Ok(out)
}

/// Hall–Littlewood `P_n(q) = Σ_{r=0}^{n-1} (-q)^r s_{(n-r, 1^r)}`, in h.
pub fn hall_littlewood_p(n: usize) -> Result<SymFunc> {
    let mut out = SymFunc::zero(n, Basis::H);
    for r in 0..n {
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let c = QPoly::monomial(rational(sign), r);
        out = &out + &hook_schur(n - r, r)?.scale(&c);
    }
    Ok(out)
}

/// ρ_n = q^{n-1} P_n(q^{-1}), expanded in h.
pub fn rho_n_via_hall_littlewood(n: usize) -> Result<SymFunc> {
    assert!(n >= 1, "ρ_n needs n >= 1");
    hall_littlewood_p(n)?.try_map_coeffs(|c| c.reverse_and_scale(n - 1))
}
