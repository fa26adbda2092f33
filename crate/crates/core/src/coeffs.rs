//! Univariate polynomials in `q` over the rationals, and the q-analog scalars
//! built from them.
//!
//! Storage is dense, constant term first. The zero polynomial is the empty
//! coefficient vector and every constructor trims trailing zeros, so derived
//! `PartialEq` is polynomial equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// `c * q^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Generating polynomial of a histogram: `Σ counts[i] q^i`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(
            counts
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(x)))
    }

    /// `p(q + 1)`, expanded in `q`.
    pub fn shift_q_plus_one(&self) -> Self {
        // Horner in the shifted variable: acc <- acc * (q + 1) + c.
        let q_plus_one = Self::from_ints(&[1, 1]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &q_plus_one) + &Self::constant(c.clone());
        }
        acc
    }

    /// `q^n p(1/q)`, defined when `deg p <= n`.
    pub fn reverse_and_scale(&self, n: usize) -> Result<Self> {
        match self.degree() {
            None => Ok(Self::zero()),
            Some(d) if d > n => Err(Error::DegreeTooLarge { degree: d, bound: n }),
            Some(_) => {
                let mut coeffs = vec![Rational::zero(); n + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[n - i] = c.clone();
                }
                Ok(Self::from_coeffs(coeffs))
            }
        }
    }

    /// Long division over the rationals: `(quotient, remainder)`.
    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient when `d` divides `self`; otherwise an error carrying the remainder.
    pub fn exact_divide(&self, d: &QPoly) -> Result<QPoly> {
        let (quot, rem) = self.div_rem(d)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision { remainder: rem })
        }
    }

    pub fn is_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Coefficients as strings, constant term first (`"p/q"` for non-integers).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    pub fn from_json_strings(items: &[&str]) -> Result<Self> {
        items
            .iter()
            .map(|s| {
                s.parse::<Rational>()
                    .map_err(|e| Error::Parse(format!("coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }
}

/// `[j]_q = 1 + q + ... + q^{j-1}`.
pub fn q_integer(j: usize) -> QPoly {
    QPoly::from_coeffs(vec![Rational::one(); j])
}

/// `n!_q = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial via `C(n,k) = C(n-1,k-1) + q^k C(n-1,k)`.
pub fn q_binomial(n: usize, k: i64) -> QPoly {
    if k < 0 || k as usize > n {
        return QPoly::zero();
    }
    let k = k as usize;
    // Row-by-row Pascal triangle, keeping only columns 0..=k.
    let mut row = vec![QPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity((m + 1).min(k + 1));
        for j in 0..=m.min(k) {
            let left = if j > 0 { row[j - 1].clone() } else { QPoly::zero() };
            let right = row
                .get(j)
                .map(|c| c * &QPoly::monomial(Rational::one(), j))
                .unwrap_or_default();
            next.push(&left + &right);
        }
        row = next;
    }
    row[k].clone()
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self += &(-rhs);
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}
