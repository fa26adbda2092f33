//! Homogeneous symmetric functions over `Q[q]` in the multiplicative bases
//! e, h, p and ρ.
//!
//! Equality between symmetric functions is only meaningful inside a single
//! basis; mixed-basis comparisons go through [`convert`] or through
//! [`monomial_expand`].

mod convert;
mod determinant;
mod monomial;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::coeffs::{QPoly, Rational};
use crate::error::{Error, Result};
use crate::partitions::Partition;

pub use convert::{convert, hall_littlewood_p, rho_n_alt, rho_n_via_hall_littlewood, rho_to_h};
pub use determinant::{q_newton_determinant, rho_determinant};
pub(crate) use determinant::q_factorial_h;
pub use monomial::{monomial_expand, MonomialSym};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    E,
    H,
    P,
    Rho,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::Rho => "rho",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "rho" => Ok(Basis::Rho),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// A degree-`n` symmetric function `Σ c_λ b_λ` with `λ ⊢ n` and `c_λ ∈ Q[q]`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Partition, QPoly>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_unit(basis: Basis, lambda: &Partition) -> Self {
        let mut f = Self::zero(lambda.size(), basis);
        f.terms.insert(lambda.clone(), QPoly::one());
        f
    }

    /// The constant `1` (degree zero).
    pub fn one(basis: Basis) -> Self {
        Self::basis_unit(basis, &Partition::empty())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
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

    /// Adds `c · b_λ`. Panics if `|λ|` differs from the degree.
    pub fn add_term(&mut self, lambda: Partition, c: &QPoly) {
        assert_eq!(lambda.size(), self.degree, "partition {lambda} in degree {}", self.degree);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.name(),
                right: other.basis.name(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::SizeMismatch(format!(
                "adding degree {} to degree {}",
                self.degree, other.degree
            )));
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        if !self.is_zero() {
            for (lam, c) in &other.terms {
                out.add_term(lam.clone(), c);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QPoly) -> SymFunc {
        self.map_coeffs(|v| v * c)
    }

    pub fn scale_rational(&self, c: &Rational) -> SymFunc {
        self.map_coeffs(|v| v.scale(c))
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&QPoly) -> QPoly) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, mut f: impl FnMut(&QPoly) -> Result<QPoly>) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Specializes `q` to a rational value; coefficients become constants.
    pub fn eval_q(&self, q: &Rational) -> SymFunc {
        self.map_coeffs(|c| QPoly::constant(c.eval(q)))
    }

    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_compatible(other)?;
        let mut out = SymFunc::zero(self.degree + other.degree, self.basis);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "basis": self.basis.name(),
            "terms": self.terms.iter().map(|(lam, c)| serde_json::json!({
                "partition": lam.to_json(),
                "coeff": c.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){}{lam}", self.basis)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[deg {}; {self}]", self.degree)
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    /// Panics on basis mismatch; use [`SymFunc::try_add`] to handle it.
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.try_add(rhs).expect("adding symmetric functions")
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

/// ω: swaps e and h, and scales `p_λ` by `(-1)^{|λ| - ℓ(λ)}`.
pub fn omega(f: &SymFunc) -> Result<SymFunc> {
    match f.basis {
        Basis::E | Basis::H => Ok(SymFunc {
            degree: f.degree,
            basis: if f.basis == Basis::E { Basis::H } else { Basis::E },
            terms: f.terms.clone(),
        }),
        Basis::P => Ok(f.map_coeffs_with_partition(|lam, c| {
            if (lam.size() - lam.len()) % 2 == 0 {
                c.clone()
            } else {
                -c
            }
        })),
        Basis::Rho => Err(Error::UnsupportedBasis {
            basis: "rho",
            op: "omega (convert first)",
        }),
    }
}

impl SymFunc {
    fn map_coeffs_with_partition(&self, mut f: impl FnMut(&Partition, &QPoly) -> QPoly) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), &f(lam, c));
        }
        out
    }
}

/// `f[(q-1)X]` on the power sums: `p_λ ↦ Π (q^{λ_i} - 1) p_λ`.
pub fn plethysm_qminus1(f: &SymFunc) -> Result<SymFunc> {
    if f.basis != Basis::P {
        return Err(Error::UnsupportedBasis {
            basis: f.basis.name(),
            op: "plethysm by (q-1)X",
        });
    }
    Ok(f.map_coeffs_with_partition(|lam, c| {
        lam.parts().iter().fold(c.clone(), |acc, &k| {
            &acc * &(&QPoly::monomial(Rational::one(), k) - &QPoly::one())
        })
    }))
}

/// Polynomial in `x` with `Q[q]` coefficients: the image of the specialization ε.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XQPoly {
    coeffs: Vec<QPoly>,
}

impl XQPoly {
    pub fn from_coeffs(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(QPoly::is_zero) {
            coeffs.pop();
        }
        XQPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational, q: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c.eval(q))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(QPoly::to_json).collect())
    }
}

/// ε: `p_λ ↦ x^{ℓ(λ)}`.
pub fn specialize_epsilon(f: &SymFunc) -> Result<XQPoly> {
    if f.basis != Basis::P {
        return Err(Error::UnsupportedBasis {
            basis: f.basis.name(),
            op: "specialization ε",
        });
    }
    let mut coeffs = vec![QPoly::zero(); f.degree + 1];
    for (lam, c) in &f.terms {
        coeffs[lam.len()] += c;
    }
    Ok(XQPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::from(p)
    }

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn sym(basis: Basis, degree: usize, terms: &[(&[usize], &[i64])]) -> SymFunc {
        let mut f = SymFunc::zero(degree, basis);
        for (lam, c) in terms {
            f.add_term(part(lam), &poly(c));
        }
        f
    }

    #[test]
    fn units() {
        let f = SymFunc::basis_unit(Basis::H, &part(&[2, 1]));
        assert_eq!(f.degree(), 3);
        assert_eq!(f.coeff(&part(&[2, 1])), QPoly::one());
        assert_eq!(SymFunc::basis_unit(Basis::P, &part(&[])).degree(), 0);
        assert_eq!(SymFunc::basis_unit(Basis::Rho, &part(&[3])).basis(), Basis::Rho);
    }

    #[test]
    fn products_concatenate() {
        let h2 = SymFunc::basis_unit(Basis::H, &part(&[2]));
        let h1 = SymFunc::basis_unit(Basis::H, &part(&[1]));
        assert_eq!(h2.multiply(&h1).unwrap(), SymFunc::basis_unit(Basis::H, &part(&[2, 1])));
        let r1 = SymFunc::basis_unit(Basis::Rho, &part(&[1]));
        assert_eq!(r1.multiply(&r1).unwrap(), SymFunc::basis_unit(Basis::Rho, &part(&[1, 1])));
        let rho2 = sym(Basis::H, 2, &[(&[2], &[1, 1]), (&[1, 1], &[-1])]);
        let expected = sym(Basis::H, 3, &[(&[2, 1], &[1, 1]), (&[1, 1, 1], &[-1])]);
        assert_eq!(rho2.multiply(&h1).unwrap(), expected);
        assert!(matches!(rho2.multiply(&r1), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn omega_examples() {
        let e21 = SymFunc::basis_unit(Basis::E, &part(&[2, 1]));
        assert_eq!(omega(&e21).unwrap(), SymFunc::basis_unit(Basis::H, &part(&[2, 1])));
        let p3 = SymFunc::basis_unit(Basis::P, &part(&[3]));
        assert_eq!(omega(&p3).unwrap(), p3);
        let p22 = SymFunc::basis_unit(Basis::P, &part(&[2, 2]));
        assert_eq!(omega(&p22).unwrap(), p22);
        let p2 = SymFunc::basis_unit(Basis::P, &part(&[2]));
        assert_eq!(omega(&p2).unwrap(), -&p2);
        assert!(omega(&SymFunc::basis_unit(Basis::Rho, &part(&[2]))).is_err());
    }

    #[test]
    fn plethysm_examples() {
        let p1 = SymFunc::basis_unit(Basis::P, &part(&[1]));
        assert_eq!(plethysm_qminus1(&p1).unwrap(), p1.scale(&poly(&[-1, 1])));
        let p2 = SymFunc::basis_unit(Basis::P, &part(&[2]));
        assert_eq!(plethysm_qminus1(&p2).unwrap(), p2.scale(&poly(&[-1, 0, 1])));
        let p21 = SymFunc::basis_unit(Basis::P, &part(&[2, 1]));
        let factor = &poly(&[-1, 0, 1]) * &poly(&[-1, 1]);
        assert_eq!(plethysm_qminus1(&p21).unwrap(), p21.scale(&factor));
        assert!(plethysm_qminus1(&SymFunc::basis_unit(Basis::H, &part(&[1]))).is_err());
    }

    #[test]
    fn epsilon_examples() {
        let p4 = SymFunc::basis_unit(Basis::P, &part(&[4]));
        assert_eq!(specialize_epsilon(&p4).unwrap(), XQPoly::from_coeffs(vec![QPoly::zero(), QPoly::one()]));
        let csf = sym(
            Basis::P,
            4,
            &[
                (&[1, 1, 1, 1], &[1]),
                (&[2, 1, 1], &[-4]),
                (&[2, 2], &[1]),
                (&[3, 1], &[4]),
                (&[4], &[-2]),
            ],
        );
        let chi = specialize_epsilon(&csf).unwrap();
        let expected: Vec<QPoly> = [0, -2, 5, -4, 1].iter().map(|&c| QPoly::from_int(c)).collect();
        assert_eq!(chi, XQPoly::from_coeffs(expected));
        assert!(specialize_epsilon(&SymFunc::zero(3, Basis::P)).unwrap().is_zero());
    }

    #[test]
    fn json_shape() {
        let f = sym(Basis::H, 3, &[(&[2, 1], &[-2, 1]), (&[3], &[1])]);
        assert_eq!(
            f.to_json(),
            serde_json::json!({
                "degree": 3,
                "basis": "h",
                "terms": [
                    {"partition": [3], "coeff": ["1"]},
                    {"partition": [2, 1], "coeff": ["-2", "1"]},
                ]
            })
        );
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = sym(Basis::E, 2, &[(&[2], &[1])]);
        assert!((&f - &f).is_zero());
    }
}
