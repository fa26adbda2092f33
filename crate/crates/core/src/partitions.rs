//! Integer partitions, compositions and domino tabloids.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::{q_integer, QPoly};
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` sorts by size first and then reverse-lexicographically, so for a fixed
/// size `(n)` comes first and `(1^n)` last. This is the order used by
/// [`enumerate_partitions`] and by every partition-keyed map in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single(n: usize) -> Self {
        Self::new(vec![n])
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sorted concatenation of parts: the index of a product of multiplicative basis elements.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::new(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
                .collect(),
        }
    }

    /// Part multiplicities, `m[k]` = number of parts equal to `k`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// A sequence of positive integers where order matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::SizeMismatch("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn sort_to_partition(alpha: &Composition) -> Partition {
    Partition::new(alpha.parts.clone())
}

/// All compositions of `n`, in lexicographic order of their part sequences.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition { parts: cur.clone() });
            return;
        }
        for first in 1..=rest {
            cur.push(first);
            rec(rest - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// λ(I): sizes of the blocks of `[n]` obtained by joining `j` and `j + 1`
/// for every `j ∈ I`, sorted.
pub fn lambda_of_subset(subset: &[usize], n: usize) -> Result<Partition> {
    let mut items = subset.to_vec();
    items.sort_unstable();
    items.dedup();
    if let Some(&bad) = items.iter().find(|&&i| i == 0 || i >= n) {
        return Err(Error::SubsetOutOfRange {
            element: bad,
            bound: n.saturating_sub(1),
        });
    }
    let mut parts = Vec::with_capacity(n - items.len());
    let mut run = 0;
    for j in 1..=n {
        run += 1;
        if items.binary_search(&j).is_err() {
            parts.push(run);
            run = 0;
        }
    }
    Ok(Partition::new(parts))
}

/// The conjugate of the sorted gap composition `(i_1, i_2 - i_1, ..., n - i_k)`.
/// Agrees with [`lambda_of_subset`] only for some subsets.
pub fn conjugate_gap_partition(subset: &[usize], n: usize) -> Partition {
    let mut items = subset.to_vec();
    items.sort_unstable();
    items.dedup();
    let mut parts = Vec::with_capacity(items.len() + 1);
    let mut prev = 0;
    for &i in &items {
        parts.push(i - prev);
        prev = i;
    }
    if n > 0 {
        parts.push(n - prev);
    }
    Partition::new(parts).conjugate()
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            cur.push(first);
            rec(rest - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A filling of the rows of `shape` by horizontal dominoes, each row listed left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominoTabloid {
    pub shape: Partition,
    pub row_fillings: Vec<Vec<usize>>,
}

impl DominoTabloid {
    /// The multiset of domino lengths.
    pub fn domino_type(&self) -> Partition {
        Partition::new(self.row_fillings.iter().flatten().copied().collect())
    }

    /// Product over rows of `[length of the leftmost domino]_q`.
    pub fn q_weight(&self) -> QPoly {
        self.row_fillings
            .iter()
            .fold(QPoly::one(), |acc, row| &acc * &q_integer(row[0]))
    }
}

/// Every domino tabloid of the given shape and type. Equal-length dominoes are
/// indistinguishable, so a tabloid is exactly a choice of one composition per row.
pub fn enumerate_domino_tabloids(shape: &Partition, ty: &Partition) -> Result<Vec<DominoTabloid>> {
    if shape.size() != ty.size() {
        return Err(Error::SizeMismatch(format!(
            "shape {shape} has size {} but type {ty} has size {}",
            shape.size(),
            ty.size()
        )));
    }
    let row_options: Vec<Vec<Composition>> =
        shape.parts().iter().map(|&r| enumerate_compositions(r)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(shape.len());
    fn rec(
        row: usize,
        options: &[Vec<Composition>],
        chosen: &mut Vec<Vec<usize>>,
        shape: &Partition,
        ty: &Partition,
        out: &mut Vec<DominoTabloid>,
    ) {
        if row == options.len() {
            let t = DominoTabloid {
                shape: shape.clone(),
                row_fillings: chosen.clone(),
            };
            if &t.domino_type() == ty {
                out.push(t);
            }
            return;
        }
        for c in &options[row] {
            chosen.push(c.parts().to_vec());
            rec(row + 1, options, chosen, shape, ty, out);
            chosen.pop();
        }
    }
    rec(0, &row_options, &mut chosen, shape, ty, &mut out);
    Ok(out)
}

/// w_{λμ}: total q-weight of the domino tabloids of shape λ and type μ.
pub fn domino_weight_sum(shape: &Partition, ty: &Partition) -> Result<QPoly> {
    Ok(enumerate_domino_tabloids(shape, ty)?
        .iter()
        .map(DominoTabloid::q_weight)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::from(p)
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&part(&[5])), Partition::ones(5));
        assert_eq!(conjugate(&part(&[3, 1])), part(&[2, 1, 1]));
        for n in 0..=8 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn sorting_compositions() {
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(sort_to_partition(&c(&[1, 3, 2])), part(&[3, 2, 1]));
        assert_eq!(sort_to_partition(&c(&[4])), part(&[4]));
        assert_eq!(sort_to_partition(&c(&[2, 2, 1])), part(&[2, 2, 1]));
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn subset_partitions() {
        assert_eq!(lambda_of_subset(&[], 4).unwrap(), part(&[1, 1, 1, 1]));
        assert_eq!(lambda_of_subset(&[1, 2, 3], 4).unwrap(), part(&[4]));
        assert_eq!(lambda_of_subset(&[2], 4).unwrap(), part(&[2, 1, 1]));
        assert_eq!(lambda_of_subset(&[1, 3], 4).unwrap(), part(&[2, 2]));
        assert_eq!(conjugate_gap_partition(&[2], 4), part(&[2, 2]));
        assert_eq!(conjugate_gap_partition(&[1, 2, 3], 4), part(&[4]));
        assert_eq!(
            lambda_of_subset(&[4], 4),
            Err(Error::SubsetOutOfRange { element: 4, bound: 3 })
        );
        assert!(lambda_of_subset(&[0], 4).is_err());
    }

    #[test]
    fn subset_partition_size_and_length() {
        for n in 1..=8usize {
            for mask in 0u32..(1 << (n - 1)) {
                let subset: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let lam = lambda_of_subset(&subset, n).unwrap();
                assert_eq!(lam.size(), n);
                assert_eq!(lam.len(), n - subset.len());
            }
        }
    }

    /// Partition counts from Euler's pentagonal recurrence.
    fn partition_count(n: usize) -> usize {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n] as usize
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![
                part(&[4]),
                part(&[3, 1]),
                part(&[2, 2]),
                part(&[2, 1, 1]),
                part(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(enumerate_partitions(8).len(), 22);
        for n in 0..=12 {
            let ps = enumerate_partitions(n);
            assert_eq!(ps.len(), partition_count(n));
            assert!(ps.windows(2).all(|w| w[0] < w[1]), "order must match Ord");
        }
    }

    #[test]
    fn composition_count() {
        for n in 1..=8 {
            assert_eq!(enumerate_compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn domino_weights() {
        assert_eq!(domino_weight_sum(&part(&[1, 1]), &part(&[2])).unwrap(), QPoly::zero());
        assert_eq!(domino_weight_sum(&part(&[2]), &part(&[2])).unwrap(), QPoly::from_ints(&[1, 1]));
        assert_eq!(domino_weight_sum(&part(&[2]), &part(&[1, 1])).unwrap(), QPoly::one());
        assert!(domino_weight_sum(&part(&[2]), &part(&[1])).is_err());
        // A row of 3 filled by {2,1}: fillings 21 and 12.
        assert_eq!(
            domino_weight_sum(&part(&[3]), &part(&[2, 1])).unwrap(),
            QPoly::from_ints(&[2, 1])
        );
    }

    #[test]
    fn tabloid_rows_fill_their_shape() {
        let shape = part(&[4, 2]);
        for ty in enumerate_partitions(6) {
            for t in enumerate_domino_tabloids(&shape, &ty).unwrap() {
                for (row, fill) in t.row_fillings.iter().enumerate() {
                    assert_eq!(fill.iter().sum::<usize>(), shape.parts()[row]);
                }
                assert_eq!(t.domino_type(), ty);
            }
        }
    }
}
