//! The two Hessenberg-shaped determinants relating ρ and h, expanded
//! symbolically by summing over permutations.
//!
//! Every matrix entry is a scalar times at most one generator, so every
//! permutation contributes a single basis element.

use super::{Basis, SymFunc};
use crate::coeffs::{q_factorial, q_integer, QPoly};
use crate::partitions::Partition;

/// `scalar · b_{generators}`; a missing entry is zero.
type Entry = Option<(QPoly, Vec<usize>)>;

fn expand(basis: Basis, degree: usize, matrix: &[Vec<Entry>]) -> SymFunc {
    let n = matrix.len();
    let mut out = SymFunc::zero(degree, basis);
    let mut used = vec![false; n];
    let mut cols = Vec::with_capacity(n);
    fn rec(
        row: usize,
        matrix: &[Vec<Entry>],
        used: &mut [bool],
        cols: &mut Vec<usize>,
        out: &mut SymFunc,
    ) {
        let n = matrix.len();
        if row == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| cols[i] > cols[j])
                .count();
            let mut coeff = if inversions % 2 == 0 { QPoly::one() } else { QPoly::from_int(-1) };
            let mut parts = Vec::new();
            for (r, &c) in cols.iter().enumerate() {
                let (s, g) = matrix[r][c].as_ref().expect("only nonzero entries are chosen");
                coeff = &coeff * s;
                parts.extend_from_slice(g);
            }
            out.add_term(Partition::new(parts), &coeff);
            return;
        }
        for c in 0..n {
            if used[c] || matrix[row][c].is_none() {
                continue;
            }
            used[c] = true;
            cols.push(c);
            rec(row + 1, matrix, used, cols, out);
            cols.pop();
            used[c] = false;
        }
    }
    rec(0, matrix, &mut used, &mut cols, &mut out);
    out
}

/// The n×n determinant with `ρ_{j-i+1}` on and above the diagonal and
/// `-[i]_q` on the subdiagonal; it equals `n!_q h_n`. Returned in the ρ basis.
pub fn q_newton_determinant(n: usize) -> SymFunc {
    let matrix: Vec<Vec<Entry>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j >= i {
                        Some((QPoly::one(), vec![j - i + 1]))
                    } else if j + 1 == i {
                        Some((-q_integer(i), vec![]))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    expand(Basis::Rho, n, &matrix)
}

/// The n×n determinant with first row `[j]_q h_j` and rows below
/// `(.., 0, 1, h_1, h_2, ..)`. Returned in the h basis; it equals `(-1)^{n-1} ρ_n`.
pub fn rho_determinant(n: usize) -> SymFunc {
    let matrix: Vec<Vec<Entry>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == 0 {
                        Some((q_integer(j + 1), vec![j + 1]))
                    } else if j + 1 >= i {
                        let k = j + 1 - i;
                        Some((QPoly::one(), if k == 0 { vec![] } else { vec![k] }))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    expand(Basis::H, n, &matrix)
}

/// `n!_q h_n`, the value the first determinant is compared against.
pub(crate) fn q_factorial_h(n: usize) -> SymFunc {
    SymFunc::basis_unit(Basis::H, &Partition::single(n)).scale(&q_factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{rho_n_alt, rho_to_h};

    #[test]
    fn q_newton_small() {
        // det [[ρ1, ρ2], [-1, ρ1]] = ρ1² + ρ2
        let d = q_newton_determinant(2);
        let mut expected = SymFunc::zero(2, Basis::Rho);
        expected.add_term(Partition::from([1, 1]), &QPoly::one());
        expected.add_term(Partition::from([2]), &QPoly::one());
        assert_eq!(d, expected);
        for n in 1..=6 {
            assert_eq!(rho_to_h(&q_newton_determinant(n)).unwrap(), q_factorial_h(n), "n={n}");
        }
    }

    #[test]
    fn rho_determinant_sign() {
        for n in 1..=6 {
            let d = rho_determinant(n);
            let signed = if n % 2 == 1 { d } else { -&d };
            assert_eq!(signed, rho_n_alt(n), "n={n}");
        }
    }
}
