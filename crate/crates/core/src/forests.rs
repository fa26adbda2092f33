//! Permutations below a Hessenberg function, increasing spanning forests and
//! their weights, and the forest symmetric function `X_y(m)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::coeffs::{q_integer, QPoly};
use crate::error::{Error, Result};
use crate::graphs::{graph_of, restrict, Decoration, Graph, HessenbergFunction};
use crate::partitions::{lambda_of_subset, Partition};
use crate::symfunc::{Basis, SymFunc};

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    word: Vec<usize>,
}

impl Perm {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{word:?} is not a permutation of [{n}]")));
            }
            seen[v] = true;
        }
        Ok(Perm { word })
    }

    pub fn identity(n: usize) -> Self {
        Perm { word: (1..=n).collect() }
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || seen[a] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?} on [{n}]")));
                }
                seen[a] = true;
                word[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::new(word)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Cycles, each starting at its least element, ordered by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                cycle.push(a);
                a = self.apply(a);
            }
            out.push(cycle);
        }
        out
    }

    /// `λ(σ)`, the cycle type.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// `σ ≤ m`: `σ(i) ≤ m(i)` for all `i`.
    pub fn is_below(&self, m: &HessenbergFunction) -> bool {
        self.n() == m.n() && (1..=self.n()).all(|i| self.apply(i) <= m.at(i))
    }
}

impl FromStr for Perm {
    type Err = Error;
    /// One-line notation, either comma separated or as a digit string for `n ≤ 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Perm::new(word)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm")?;
        for c in self.cycles() {
            write!(f, "(")?;
            for (k, a) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The word `σ^c`: cycle notation with the parentheses dropped.
pub fn forget_cycles(sigma: &Perm) -> Vec<usize> {
    sigma.cycles().concat()
}

/// Value pairs `i < j ≤ m(i)` with `i` appearing after `j` in `w`.
pub fn inv_m(w: &[usize], m: &HessenbergFunction) -> usize {
    let n = w.len();
    let mut pos = vec![0usize; n + 1];
    for (p, &v) in w.iter().enumerate() {
        pos[v] = p;
    }
    (1..=n)
        .map(|i| (i + 1..=m.at(i).min(n)).filter(|&j| pos[i] > pos[j]).count())
        .sum()
}

/// `wt_m(σ) = inv_m(σ^c)`.
pub fn wt_perm(sigma: &Perm, m: &HessenbergFunction) -> usize {
    inv_m(&forget_cycles(sigma), m)
}

/// Calls `visit` on every `σ ≤ m`, in lexicographic order of one-line words.
pub fn for_each_perm_leq(m: &HessenbergFunction, mut visit: impl FnMut(&Perm)) {
    let n = m.n();
    let mut used = vec![false; n + 1];
    let mut perm = Perm { word: vec![0; n] };
    fn rec(i: usize, m: &HessenbergFunction, used: &mut [bool], perm: &mut Perm, visit: &mut impl FnMut(&Perm)) {
        let n = m.n();
        if i > n {
            visit(perm);
            return;
        }
        for v in 1..=m.at(i) {
            if used[v] {
                continue;
            }
            used[v] = true;
            perm.word[i - 1] = v;
            rec(i + 1, m, used, perm, visit);
            used[v] = false;
        }
    }
    rec(1, m, &mut used, &mut perm, &mut visit);
}

pub fn enumerate_perms_leq(m: &HessenbergFunction) -> Vec<Perm> {
    let mut out = Vec::new();
    for_each_perm_leq(m, |p| out.push(p.clone()));
    out
}

/// `Π (m(i) − i + 1)`, the number of permutations below `m`.
pub fn count_perms_leq(m: &HessenbergFunction) -> u64 {
    (1..=m.n()).map(|i| (m.at(i) - i + 1) as u64).product()
}

/// An increasing forest on `[n]`, given by parent pointers with `parent(j) < j`
/// and `0` marking a root.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingForest {
    parent: Vec<usize>,
}

impl IncreasingForest {
    pub fn new(parent: Vec<usize>) -> Result<Self> {
        for (idx, &p) in parent.iter().enumerate() {
            if p > idx {
                return Err(Error::InvalidGraph(format!("parent({}) = {p} is not smaller", idx + 1)));
            }
        }
        Ok(IncreasingForest { parent })
    }

    /// The forest with the given 1-based edges; each vertex's parent is its smaller neighbour.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut parent = vec![0usize; n];
        for &(a, b) in edges {
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if u == 0 || v > n || u == v || parent[v - 1] != 0 {
                return Err(Error::InvalidGraph(format!("edges {edges:?} do not form an increasing forest")));
            }
            parent[v - 1] = u;
        }
        IncreasingForest::new(parent)
    }

    pub fn singletons(n: usize) -> Self {
        IncreasingForest { parent: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// `parent(j)` for 1-based `j`; `0` for roots.
    pub fn parent(&self, j: usize) -> usize {
        self.parent[j - 1]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Edges `(parent, child)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = (1..=self.n())
            .filter(|&j| self.parent(j) != 0)
            .map(|j| (self.parent(j), j))
            .collect();
        e.sort_unstable();
        e
    }

    /// Root of every vertex, index `j - 1`.
    pub fn roots(&self) -> Vec<usize> {
        let mut root = vec![0usize; self.n()];
        for j in 1..=self.n() {
            let p = self.parent(j);
            root[j - 1] = if p == 0 { j } else { root[p - 1] };
        }
        root
    }

    /// Index of each vertex's component, components ordered by increasing root.
    pub fn component_index(&self) -> Vec<usize> {
        let roots = self.roots();
        let mut order = vec![usize::MAX; self.n() + 1];
        for (next, j) in (1..=self.n()).filter(|&j| self.parent(j) == 0).enumerate() {
            order[j] = next;
        }
        roots.iter().map(|&r| order[r]).collect()
    }

    /// Components (vertex lists), ordered by root.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let idx = self.component_index();
        let k = idx.iter().copied().max().map_or(0, |x| x + 1);
        let mut out = vec![Vec::new(); k];
        for (j0, &c) in idx.iter().enumerate() {
            out[c].push(j0 + 1);
        }
        out
    }

    /// `λ(F)`, the multiset of component sizes.
    pub fn partition(&self) -> Partition {
        Partition::new(self.components().iter().map(Vec::len).collect())
    }

    pub fn is_spanning_forest_of(&self, g: &Graph) -> bool {
        g.n() == self.n() && self.edges().iter().all(|&(u, v)| g.has_edge(u, v))
    }

    /// Whether `{v, w}` is an inversion: `v < w` with `v` in a later component.
    pub fn is_inversion(&self, v: usize, w: usize) -> bool {
        let (v, w) = if v < w { (v, w) } else { (w, v) };
        let idx = self.component_index();
        idx[v - 1] > idx[w - 1]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "parent": self.parent,
            "edges": self.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for IncreasingForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest{:?}", self.edges())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestStats {
    /// Per component, ordered by root.
    pub tree_weights: Vec<usize>,
    /// All pairs `(v, w)`, `v < w`, with `v` in a later component than `w`.
    pub inversions: Vec<(usize, usize)>,
    pub g_inversions: usize,
    pub total: usize,
}

pub fn forest_stats(f: &IncreasingForest, g: &Graph) -> Result<ForestStats> {
    if let Some(&(u, v)) = f.edges().iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::EdgeNotInGraph(u, v));
    }
    let idx = f.component_index();
    let k = idx.iter().copied().max().map_or(0, |x| x + 1);
    let mut tree_weights = vec![0usize; k];
    for (u, v) in f.edges() {
        let c = idx[v - 1];
        tree_weights[c] += (u + 1..v).filter(|&w| idx[w - 1] == c).count();
    }
    let n = f.n();
    let mut inversions = Vec::new();
    for v in 1..=n {
        for w in v + 1..=n {
            if idx[v - 1] > idx[w - 1] {
                inversions.push((v, w));
            }
        }
    }
    let g_inversions = inversions.iter().filter(|&&(v, w)| g.has_edge(v, w)).count();
    let total = g_inversions + tree_weights.iter().sum::<usize>();
    Ok(ForestStats {
        tree_weights,
        inversions,
        g_inversions,
        total,
    })
}

/// `wt_G(F)`; panics if `F` is not a forest of `g`.
pub fn forest_weight(f: &IncreasingForest, g: &Graph) -> usize {
    forest_stats(f, g).expect("forest inside graph").total
}

/// Each cycle `j_1 j_2 … j_k` becomes a tree: `j_i` hangs from the rightmost
/// earlier `j_l` smaller than it.
pub fn forest_from_permutation_simple(sigma: &Perm) -> IncreasingForest {
    let mut parent = vec![0usize; sigma.n()];
    for cycle in sigma.cycles() {
        for i in 1..cycle.len() {
            let j = cycle[i];
            let p = cycle[..i].iter().rev().find(|&&a| a < j).expect("cycle starts at its minimum");
            parent[j - 1] = *p;
        }
    }
    IncreasingForest { parent }
}

/// The weight-preserving map onto forests of `G_m`: within each cycle,
/// `g(j_l)` is the cycle element below `j_l` with exactly
/// `#{l' > l : j_{l'} < j_l ≤ m(j_{l'})}` cycle elements strictly between.
pub fn forest_from_permutation(sigma: &Perm, m: &HessenbergFunction) -> Result<IncreasingForest> {
    if !sigma.is_below(m) {
        return Err(Error::NotBelow(sigma.n()));
    }
    let mut parent = vec![0usize; sigma.n()];
    for cycle in sigma.cycles() {
        for l in 1..cycle.len() {
            let j = cycle[l];
            let target = cycle[l + 1..]
                .iter()
                .filter(|&&a| a < j && j <= m.at(a))
                .count();
            let mut smaller: Vec<usize> = cycle.iter().copied().filter(|&a| a < j).collect();
            smaller.sort_unstable_by(|a, b| b.cmp(a));
            let matches: Vec<usize> = smaller
                .iter()
                .copied()
                .filter(|&g| cycle.iter().filter(|&&a| g < a && a < j).count() == target)
                .collect();
            match matches.as_slice() {
                [g] if j <= m.at(*g) => parent[j - 1] = *g,
                _ => {
                    return Err(Error::Consistency(format!(
                        "no unique parent for {j} in cycle {cycle:?} of {sigma:?} under {m}"
                    )))
                }
            }
        }
    }
    Ok(IncreasingForest { parent })
}

/// All increasing spanning forests of `g`, lexicographic in the parent vector.
pub fn enumerate_forests(g: &Graph) -> Vec<IncreasingForest> {
    let n = g.n();
    let choices: Vec<Vec<usize>> = (1..=n)
        .map(|j| std::iter::once(0).chain((1..j).filter(|&i| g.has_edge(i, j))).collect())
        .collect();
    let mut out = Vec::new();
    let mut parent = vec![0usize; n];
    fn rec(j: usize, choices: &[Vec<usize>], parent: &mut Vec<usize>, out: &mut Vec<IncreasingForest>) {
        if j == choices.len() {
            out.push(IncreasingForest { parent: parent.clone() });
            return;
        }
        for &p in &choices[j] {
            parent[j] = p;
            rec(j + 1, choices, parent, out);
        }
    }
    rec(0, &choices, &mut parent, &mut out);
    out
}

/// The choice of `y_n` in `X_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum YBasis {
    /// `y_n = ρ_n`.
    Rho,
    /// `y_n = (q-1)^{n-1} e_n`.
    QE,
}

impl YBasis {
    pub fn name(self) -> &'static str {
        match self {
            YBasis::Rho => "rho",
            YBasis::QE => "qe",
        }
    }

    /// The basis `X_y` is expressed in.
    pub fn basis(self) -> Basis {
        match self {
            YBasis::Rho => Basis::Rho,
            YBasis::QE => Basis::E,
        }
    }

    /// The scalar multiplying `b_λ` in `y_λ`.
    pub fn scalar(self, lambda: &Partition) -> QPoly {
        match self {
            YBasis::Rho => QPoly::one(),
            YBasis::QE => q_minus_one().pow(lambda.size() - lambda.len()),
        }
    }

    pub fn element(self, lambda: &Partition) -> SymFunc {
        SymFunc::basis_unit(self.basis(), lambda).scale(&self.scalar(lambda))
    }
}

impl FromStr for YBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho" => Ok(YBasis::Rho),
            "qe" => Ok(YBasis::QE),
            other => Err(Error::Parse(format!("unknown y {other:?}; expected rho or qe"))),
        }
    }
}

pub(crate) fn q_minus_one() -> QPoly {
    QPoly::from_ints(&[-1, 1])
}

/// `c_λ(m) = Σ_{σ ≤ m, λ(σ) = λ} q^{wt_m(σ)}`; only nonzero entries are kept.
pub fn c_coefficients(m: &HessenbergFunction) -> BTreeMap<Partition, QPoly> {
    let mut hist: BTreeMap<Partition, Vec<u64>> = BTreeMap::new();
    for_each_perm_leq(m, |sigma| {
        let w = wt_perm(sigma, m);
        let h = hist.entry(sigma.cycle_type()).or_default();
        if h.len() <= w {
            h.resize(w + 1, 0);
        }
        h[w] += 1;
    });
    hist.into_iter().map(|(lam, h)| (lam, QPoly::from_counts(&h))).collect()
}

/// `Σ_λ c_λ y_λ` for a coefficient table on `[n]`.
pub fn assemble(n: usize, coeffs: &BTreeMap<Partition, QPoly>, y: YBasis) -> SymFunc {
    let mut out = SymFunc::zero(n, y.basis());
    for (lam, c) in coeffs {
        out.add_term(lam.clone(), &(c * &y.scalar(lam)));
    }
    out
}

/// `X_y(m) = Σ_{σ ≤ m} q^{wt_m(σ)} y_{λ(σ)}`.
#[allow(non_snake_case)]
pub fn X_of(m: &HessenbergFunction, y: YBasis) -> SymFunc {
    assemble(m.n(), &c_coefficients(m), y)
}

/// `X(K_n) = Σ_i X(K_{n-i}) y_i Π_{j=n-i+1}^{n-1} [j]_q`, from `X(K_0) = 1`.
#[allow(non_snake_case)]
pub fn X_complete_recursion(n: usize, y: YBasis) -> SymFunc {
    let mut table = vec![SymFunc::one(y.basis())];
    for k in 1..=n {
        let mut acc = SymFunc::zero(k, y.basis());
        for i in 1..=k {
            let mut scalar = QPoly::one();
            for j in k - i + 1..k {
                scalar = &scalar * &q_integer(j);
            }
            let term = table[k - i]
                .multiply(&y.element(&Partition::single(i)))
                .expect("same basis")
                .scale(&scalar);
            acc = &acc + &term;
        }
        table.push(acc);
    }
    table.swap_remove(n)
}

/// `X(K_n) = Σ_{I ⊆ [n-1]} y_{λ(I)} Π_{j ∈ I} [j]_q`.
#[allow(non_snake_case)]
pub fn X_complete_closed(n: usize, y: YBasis) -> SymFunc {
    if n == 0 {
        return SymFunc::one(y.basis());
    }
    let mut out = SymFunc::zero(n, y.basis());
    for mask in 0u64..1 << (n - 1) {
        let subset: Vec<usize> = (1..n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let lam = lambda_of_subset(&subset, n).expect("subset of [n-1]");
        let mut scalar = QPoly::one();
        for &j in &subset {
            scalar = &scalar * &q_integer(j);
        }
        out = &out + &y.element(&lam).scale(&scalar);
    }
    out
}

/// `s_q(n, k)` from `x(x − [1]_q)⋯(x − [n−1]_q) = Σ_k (−1)^{n−k} s_q(n,k) x^k`.
pub fn q_stirling(n: usize, k: usize) -> QPoly {
    q_stirling_row(n).into_iter().nth(k).unwrap_or_default()
}

/// `[s_q(n, 0), …, s_q(n, n)]`.
pub fn q_stirling_row(n: usize) -> Vec<QPoly> {
    // Coefficients of the product in x, lowest power first.
    let mut poly = vec![QPoly::one()];
    for i in 0..n {
        let root = q_integer(i);
        let mut next = vec![QPoly::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= &(c * &root);
        }
        poly = next;
    }
    poly.into_iter()
        .enumerate()
        .map(|(k, c)| if (n - k) % 2 == 1 { -c } else { c })
        .collect()
}

/// `Σ_{σ ≤ m} q^{wt_m(σ)}`, checked against `Π_i (1 + [m(i) − i]_q)`.
pub fn sum_of_weights(m: &HessenbergFunction) -> Result<QPoly> {
    let enumerated: QPoly = c_coefficients(m).into_values().sum();
    let product = weight_product(m);
    if enumerated != product {
        return Err(Error::Consistency(format!(
            "weight sum {enumerated} differs from product {product} for {m}"
        )));
    }
    Ok(enumerated)
}

/// `Π_i (1 + [m(i) − i]_q)`.
pub fn weight_product(m: &HessenbergFunction) -> QPoly {
    (1..=m.n()).fold(QPoly::one(), |acc, i| &acc * &(QPoly::one() + q_integer(m.at(i) - i)))
}

/// `c_λ(m, S) = Σ_{S' ⊆ S} (−1)^{|S'|} c_λ(m_{S'})`.
pub fn c_coefficients_vertical(d: &Decoration) -> BTreeMap<Partition, QPoly> {
    let s = d.set();
    let mut out: BTreeMap<Partition, QPoly> = BTreeMap::new();
    for mask in 0u32..1 << s.len() {
        let sub: Vec<usize> = (0..s.len()).filter(|b| mask >> b & 1 == 1).map(|b| s[b]).collect();
        let m_sub = restrict(d.base(), &sub).expect("decoration subsets restrict validly");
        let sign = if sub.len() % 2 == 1 { -QPoly::one() } else { QPoly::one() };
        for (lam, c) in c_coefficients(&m_sub) {
            *out.entry(lam).or_default() += &(&c * &sign);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `X_y(m, S)` by peeling the smallest element of `S`:
/// `X_y(m, S) = X_y(m, S') − X_y(m', S')`.
#[allow(non_snake_case)]
pub fn X_vertical_recursive(d: &Decoration, y: YBasis) -> SymFunc {
    match d.set().split_first() {
        None => X_of(d.base(), y),
        Some((&i, rest)) => {
            let rest = rest.to_vec();
            let keep = Decoration::new(d.base().clone(), rest.clone()).expect("subset of a decoration");
            let m_prime = restrict(d.base(), &[i]).expect("decoration position");
            let drop = Decoration::new(m_prime, rest).expect("remaining positions stay decorable");
            &X_vertical_recursive(&keep, y) - &X_vertical_recursive(&drop, y)
        }
    }
}

/// `X_y(m, S)`, computed by the recursion and by inclusion–exclusion; the two must agree.
#[allow(non_snake_case)]
pub fn X_vertical(d: &Decoration, y: YBasis) -> Result<SymFunc> {
    let rec = X_vertical_recursive(d, y);
    let incl = assemble(d.base().n(), &c_coefficients_vertical(d), y);
    if rec != incl {
        return Err(Error::Consistency(format!(
            "vertical recursion and inclusion–exclusion differ on {:?}",
            d.to_json()
        )));
    }
    Ok(rec)
}

/// `c_λ(m, S)` summed forest by forest: each forest of `G_m` in which every
/// `(i, m(i))`, `i ∈ S`, is an edge or an inversion contributes
/// `q^{wt_m(F) − k} (q − 1)^k`, `k` the number of those pairs that are inversions.
pub fn c_vertical_forest_sum(d: &Decoration) -> BTreeMap<Partition, QPoly> {
    let m = d.base();
    let g = graph_of(m);
    let mut out: BTreeMap<Partition, QPoly> = BTreeMap::new();
    for f in enumerate_forests(&g) {
        let mut k = 0;
        let mut admissible = true;
        for &i in d.set() {
            let j = m.at(i);
            if f.parent(j) == i {
                continue;
            }
            if f.is_inversion(i, j) {
                k += 1;
            } else {
                admissible = false;
                break;
            }
        }
        if !admissible {
            continue;
        }
        let wt = forest_weight(&f, &g);
        let term = &QPoly::monomial(One::one(), wt - k) * &q_minus_one().pow(k);
        *out.entry(f.partition()).or_default() += &term;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Forests of `G_m` containing every edge `{i, m(i)}`, `i ∈ S`.
pub fn forests_containing_decoration(d: &Decoration) -> Vec<IncreasingForest> {
    let m = d.base();
    enumerate_forests(&graph_of(m))
        .into_iter()
        .filter(|f| d.set().iter().all(|&i| f.parent(m.at(i)) == i))
        .collect()
}

/// Observations on one decorated function; nothing here is asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalExploration {
    pub decoration: Decoration,
    pub coefficients: BTreeMap<Partition, QPoly>,
    /// Number of forests in `F(G_m, S)` per partition.
    pub forest_tallies: BTreeMap<Partition, usize>,
    /// Partitions whose `c_λ(m, S)` has a negative or non-integral coefficient.
    pub not_in_nq: Vec<Partition>,
    /// Whether `c_λ(m, S)` at `q = 1` equals the tally for every λ.
    pub tallies_match_at_one: bool,
}

impl VerticalExploration {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "decoration": self.decoration.to_json(),
            "coefficients": self.coefficients.iter().map(|(l, c)| serde_json::json!({
                "partition": l.to_json(),
                "coeff": c.to_json(),
            })).collect::<Vec<_>>(),
            "forest_tallies": self.forest_tallies.iter().map(|(l, t)| serde_json::json!({
                "partition": l.to_json(),
                "forests": t,
            })).collect::<Vec<_>>(),
            "not_in_nq": self.not_in_nq.iter().map(Partition::to_json).collect::<Vec<_>>(),
            "tallies_match_at_one": self.tallies_match_at_one,
        })
    }
}

pub fn explore_vertical(d: &Decoration) -> VerticalExploration {
    let coefficients = c_coefficients_vertical(d);
    let mut forest_tallies: BTreeMap<Partition, usize> = BTreeMap::new();
    for f in forests_containing_decoration(d) {
        *forest_tallies.entry(f.partition()).or_default() += 1;
    }
    let not_in_nq = coefficients
        .iter()
        .filter(|(_, c)| !c.is_nonneg_integer_coeffs())
        .map(|(l, _)| l.clone())
        .collect();
    let mut keys: Vec<&Partition> = coefficients.keys().chain(forest_tallies.keys()).collect();
    keys.sort();
    keys.dedup();
    let tallies_match_at_one = keys.into_iter().all(|l| {
        let at_one = coefficients.get(l).map(|c| c.eval_int(1)).unwrap_or_default();
        let t = forest_tallies.get(l).copied().unwrap_or(0);
        at_one == crate::coeffs::Rational::from_integer((t as i64).into())
    });
    VerticalExploration {
        decoration: d.clone(),
        coefficients,
        forest_tallies,
        not_in_nq,
        tallies_match_at_one,
    }
}

/// `Σ_F (−1)^{n − ℓ(λ(F))} p_{λ(F)}` over increasing spanning forests of `g`;
/// for a graph whose natural order is a perfect elimination ordering this is
/// the chromatic symmetric function.
pub fn forest_p_sum(g: &Graph) -> SymFunc {
    let n = g.n();
    let mut out = SymFunc::zero(n, Basis::P);
    for f in enumerate_forests(g) {
        let lam = f.partition();
        let sign = if (n - lam.len()) % 2 == 1 { -1 } else { 1 };
        out.add_term(lam, &QPoly::from_int(sign));
    }
    out
}
