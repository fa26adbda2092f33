//! Hessenberg functions, indifference graphs, modular-law triples and
//! decorations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A non-decreasing `m: [n] → [n]` with `m(i) ≥ i`. Values are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            if v < i || v > n {
                return Err(Error::InvalidHessenberg(format!("m({i}) = {v} is outside [{i}, {n}]")));
            }
            if idx > 0 && values[idx - 1] > v {
                return Err(Error::InvalidHessenberg(format!(
                    "m({}) = {} exceeds m({i}) = {v}",
                    i - 1,
                    values[idx - 1]
                )));
            }
        }
        Ok(HessenbergFunction { values })
    }

    /// `m(i) = n` for all `i`.
    pub fn complete(n: usize) -> Self {
        HessenbergFunction { values: vec![n; n] }
    }

    /// `m(i) = i`.
    pub fn discrete(n: usize) -> Self {
        HessenbergFunction { values: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `m(i)` for `i ∈ [0, n]`, with `m(0) = 0`.
    pub fn at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.values[i - 1]
        }
    }

    /// Whether `{i, j}` (1-based, any order) is an edge of the graph.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        a >= 1 && a < b && b <= self.at(a)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.values)
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return HessenbergFunction::new(Vec::new());
        }
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad Hessenberg value {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        HessenbergFunction::new(values)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{self}")
    }
}

/// A simple graph on `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    /// Builds a graph from 1-based edges; duplicates are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![vec![false; n + 1]; n + 1];
        let mut list = Vec::new();
        for &(u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!("edge {{{u},{v}}} on {n} vertices")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if !adj[a][b] {
                adj[a][b] = true;
                adj[b][a] = true;
                list.push((a, b));
            }
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, adj })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph::new(n, &[]).expect("no edges")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u <= self.n && v <= self.n && self.adj[u][v]
    }

    /// Parses `"edges:1-2,2-3"`; the vertex count is the largest endpoint
    /// unless `n` is given.
    pub fn parse_edge_list(s: &str, n: Option<usize>) -> Result<Self> {
        let body = s.strip_prefix("edges:").unwrap_or(s).trim();
        let mut edges = Vec::new();
        if !body.is_empty() {
            for tok in body.split(',') {
                let (a, b) = tok
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("bad edge {tok:?}")))?;
                let parse = |x: &str| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad vertex {x:?}")))
                };
                edges.push((parse(a)?, parse(b)?));
            }
        }
        let max = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        Graph::new(n.unwrap_or(max), &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

pub fn graph_of(m: &HessenbergFunction) -> Graph {
    let n = m.n();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=m.at(i) {
            edges.push((i, j));
        }
    }
    Graph::new(n, &edges).expect("Hessenberg edges are in range")
}

/// Every edge `{i, j}` forces `{i, k}` and `{k, j}` for `i < k < j`.
pub fn is_indifference(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(i, j)| (i + 1..j).all(|k| g.has_edge(i, k) && g.has_edge(k, j)))
}

/// Reads `m(i) = max{j : {i, j} ∈ E} ∪ {i}` off an indifference graph.
pub fn hessenberg_of(g: &Graph) -> Result<HessenbergFunction> {
    if !is_indifference(g) {
        return Err(Error::InvalidGraph(format!("{g:?} is not an indifference graph")));
    }
    let values = (1..=g.n())
        .map(|i| (i + 1..=g.n()).filter(|&j| g.has_edge(i, j)).max().unwrap_or(i))
        .collect();
    HessenbergFunction::new(values)
}

/// Whether `1, …, n` is a perfect elimination ordering.
pub fn natural_peo_valid(g: &Graph) -> bool {
    (1..=g.n()).all(|j| {
        let earlier: Vec<usize> = (1..j).filter(|&i| g.has_edge(i, j)).collect();
        earlier
            .iter()
            .enumerate()
            .all(|(a, &u)| earlier[a + 1..].iter().all(|&v| g.has_edge(u, v)))
    })
}

/// All Hessenberg functions on `[n]`, in lexicographic order.
pub fn enumerate_hessenberg(n: usize) -> Vec<HessenbergFunction> {
    fn rec(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
        if i > n {
            out.push(HessenbergFunction { values: cur.clone() });
            return;
        }
        let lo = cur.last().copied().unwrap_or(0).max(i);
        for v in lo..=n {
            cur.push(v);
            rec(i + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All Hessenberg functions with `n ≤ max_n`, the empty one included, by
/// size then lexicographically.
pub fn enumerate_hessenberg_upto(max_n: usize) -> Vec<HessenbergFunction> {
    (0..=max_n).flat_map(enumerate_hessenberg).collect()
}

/// Ordered union: `m2` is shifted past the vertices of `m1`.
pub fn concat(m1: &HessenbergFunction, m2: &HessenbergFunction) -> HessenbergFunction {
    let n1 = m1.n();
    let mut values = m1.values.clone();
    values.extend(m2.values.iter().map(|v| v + n1));
    HessenbergFunction { values }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModularKind {
    First,
    Second,
}

impl ModularKind {
    pub fn label(self) -> &'static str {
        match self {
            ModularKind::First => "1",
            ModularKind::Second => "2",
        }
    }
}

/// `(m0, m1, m2)` on which `(1+q) f(m1) = q f(m0) + f(m2)` is asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularTriple {
    pub m0: HessenbergFunction,
    pub m1: HessenbergFunction,
    pub m2: HessenbergFunction,
    pub kind: ModularKind,
    /// 1-based position.
    pub position: usize,
}

impl ModularTriple {
    /// Re-checks the defining constraints of the triple's kind.
    pub fn validate(&self) -> bool {
        match triple_at(&self.m1, self.position, self.kind) {
            Some(t) => t == *self,
            None => false,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m0": self.m0.to_json(),
            "m1": self.m1.to_json(),
            "m2": self.m2.to_json(),
            "condition": self.kind.label(),
            "position": self.position,
        })
    }
}

fn triple_at(m1: &HessenbergFunction, i: usize, kind: ModularKind) -> Option<ModularTriple> {
    let n = m1.n();
    if i == 0 || i >= n {
        return None;
    }
    let m = |j: usize| m1.at(j);
    let mut v0 = m1.values.clone();
    let mut v2 = m1.values.clone();
    match kind {
        ModularKind::First => {
            if !(m(i - 1) < m(i) && m(i) < m(i + 1)) {
                return None;
            }
            let mi = m(i);
            let clique = mi == n || (mi < n && m(mi) == m(mi + 1));
            if !clique {
                return None;
            }
            v0[i - 1] = mi - 1;
            v2[i - 1] = mi + 1;
        }
        ModularKind::Second => {
            if m(i + 1) != m(i) + 1 || m1.values.contains(&i) {
                return None;
            }
            v0[i - 1] = m(i);
            v0[i] = m(i);
            v2[i - 1] = m(i + 1);
            v2[i] = m(i + 1);
        }
    }
    let m0 = HessenbergFunction::new(v0).ok()?;
    let m2 = HessenbergFunction::new(v2).ok()?;
    Some(ModularTriple {
        m0,
        m1: m1.clone(),
        m2,
        kind,
        position: i,
    })
}

/// All modular triples on `[n]`: for each `m1` in lexicographic order, each
/// position, condition 1 before condition 2.
pub fn modular_triples(n: usize) -> Vec<ModularTriple> {
    let mut out = Vec::new();
    for m1 in enumerate_hessenberg(n) {
        for i in 1..n {
            for kind in [ModularKind::First, ModularKind::Second] {
                if let Some(t) = triple_at(&m1, i, kind) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// A Hessenberg function with a set of positions where `m(i) > max(m(i-1), i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decoration {
    base: HessenbergFunction,
    set: Vec<usize>,
}

impl Decoration {
    pub fn new(base: HessenbergFunction, mut set: Vec<usize>) -> Result<Self> {
        set.sort_unstable();
        set.dedup();
        for &i in &set {
            if !is_decorable(&base, i) {
                return Err(Error::InvalidDecoration(format!(
                    "position {i} on {base}: need m(i) > max(m(i-1), i)"
                )));
            }
        }
        Ok(Decoration { base, set })
    }

    pub fn base(&self) -> &HessenbergFunction {
        &self.base
    }

    /// Positions in increasing order.
    pub fn set(&self) -> &[usize] {
        &self.set
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "m": self.base.to_json(), "S": self.set })
    }
}

fn is_decorable(m: &HessenbergFunction, i: usize) -> bool {
    i >= 1 && i < m.n() && m.at(i) > m.at(i - 1).max(i)
}

/// Positions `i ∈ [n-1]` that may belong to a decoration.
pub fn decorable_positions(m: &HessenbergFunction) -> Vec<usize> {
    (1..m.n()).filter(|&i| is_decorable(m, i)).collect()
}

/// All decorations on `m`, subsets ordered by their bitmask over the valid positions.
pub fn enumerate_decorations(m: &HessenbergFunction) -> Vec<Decoration> {
    let pos = decorable_positions(m);
    (0u32..1 << pos.len())
        .map(|mask| {
            let set = pos
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            Decoration {
                base: m.clone(),
                set,
            }
        })
        .collect()
}

/// `m` with `m(j)` decremented for every `j ∈ subset`.
pub fn restrict(m: &HessenbergFunction, subset: &[usize]) -> Result<HessenbergFunction> {
    let mut values = m.values.clone();
    for &j in subset {
        if j == 0 || j > m.n() {
            return Err(Error::SubsetOutOfRange { element: j, bound: m.n() });
        }
        values[j - 1] -= 1;
    }
    HessenbergFunction::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hf(s: &str) -> HessenbergFunction {
        s.parse().unwrap()
    }

    fn catalan(n: usize) -> usize {
        let mut c = 1usize;
        for k in 0..n {
            c = c * 2 * (2 * k + 1) / (k + 2);
        }
        c
    }

    fn peo_graph() -> Graph {
        Graph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap()
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(hf("2,4,4,4").values(), &[2, 4, 4, 4]);
        assert!("2,1".parse::<HessenbergFunction>().is_err());
        assert!("3,2,3".parse::<HessenbergFunction>().is_err());
        assert!("1,3".parse::<HessenbergFunction>().is_err());
        assert!("a".parse::<HessenbergFunction>().is_err());
    }

    #[test]
    fn graph_of_examples() {
        assert!(graph_of(&hf("1,2,3")).edges().is_empty());
        assert_eq!(graph_of(&hf("2,3,3")).edges(), &[(1, 2), (2, 3)]);
        assert_eq!(graph_of(&hf("3,3,3")).edges(), &[(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn indifference_examples() {
        assert!(is_indifference(&graph_of(&hf("3,3,3"))));
        assert!(is_indifference(&Graph::new(3, &[(1, 2), (2, 3)]).unwrap()));
        assert!(!is_indifference(&peo_graph()));
    }

    #[test]
    fn peo_examples() {
        assert!(natural_peo_valid(&peo_graph()));
        assert!(!natural_peo_valid(&Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()));
        assert!(natural_peo_valid(&Graph::edgeless(4)));
    }

    #[test]
    fn hessenberg_counts_are_catalan() {
        assert_eq!(enumerate_hessenberg(1), vec![hf("1")]);
        assert_eq!(enumerate_hessenberg(3).len(), 5);
        assert_eq!(enumerate_hessenberg(6).len(), 132);
        for n in 0..=8 {
            assert_eq!(enumerate_hessenberg(n).len(), catalan(n), "n={n}");
        }
        assert_eq!(enumerate_hessenberg_upto(6).len(), 197);
    }

    #[test]
    fn read_off_round_trip_and_peo() {
        for n in 1..=6 {
            for m in enumerate_hessenberg(n) {
                let g = graph_of(&m);
                assert!(is_indifference(&g));
                assert!(natural_peo_valid(&g));
                assert_eq!(hessenberg_of(&g).unwrap(), m);
            }
        }
    }

    #[test]
    fn indifference_graphs_are_exactly_hessenberg_graphs() {
        // All graphs on 4 vertices.
        let all: Vec<(usize, usize)> = (1..=4).flat_map(|i| (i + 1..=4).map(move |j| (i, j))).collect();
        let mut count = 0;
        for mask in 0u32..1 << all.len() {
            let edges: Vec<_> = all.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::new(4, &edges).unwrap();
            if is_indifference(&g) {
                count += 1;
                assert_eq!(graph_of(&hessenberg_of(&g).unwrap()), g);
            }
        }
        assert_eq!(count, catalan(4));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat(&hf("1"), &hf("1")), hf("1,2"));
        assert_eq!(concat(&hf("2,2"), &hf("1")), hf("2,2,3"));
        assert_eq!(concat(&hf(""), &hf("2,3,3")), hf("2,3,3"));
    }

    #[test]
    fn modular_triples_examples() {
        assert!(modular_triples(1).is_empty());
        let t3 = modular_triples(3);
        let hit = t3
            .iter()
            .find(|t| t.m1 == hf("2,3,3") && t.position == 1 && t.kind == ModularKind::First)
            .expect("(2,3,3) at position 1 is a condition-1 triple");
        assert_eq!(hit.m0, hf("1,3,3"));
        assert_eq!(hit.m2, hf("3,3,3"));
        for n in 1..=6 {
            for t in modular_triples(n) {
                assert!(t.validate(), "{t:?}");
            }
        }
    }

    #[test]
    fn condition_two_shape() {
        // m1 = (2,3,3): position 1 has m(2) = m(1)+1 and nothing maps to 1.
        let t = modular_triples(3)
            .into_iter()
            .find(|t| t.m1 == hf("2,3,3") && t.kind == ModularKind::Second)
            .unwrap();
        assert_eq!(t.position, 1);
        assert_eq!(t.m0, hf("2,2,3"));
        assert_eq!(t.m2, hf("3,3,3"));
    }

    #[test]
    fn decoration_examples() {
        let sets = |m: &str| -> Vec<Vec<usize>> {
            enumerate_decorations(&hf(m)).iter().map(|d| d.set().to_vec()).collect()
        };
        assert_eq!(sets("1,2,3"), vec![Vec::<usize>::new()]);
        assert_eq!(sets("2,2"), vec![vec![], vec![1usize]]);
        assert_eq!(sets("2,3,3"), vec![vec![], vec![1usize], vec![2], vec![1, 2]]);
        assert!(Decoration::new(hf("2,2,3"), vec![2]).is_err());
        assert_eq!(Decoration::new(hf("2,3,3"), vec![2, 1]).unwrap().to_json().to_string(), r#"{"S":[1,2],"m":[2,3,3]}"#);
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(restrict(&hf("2,3,3"), &[]).unwrap(), hf("2,3,3"));
        assert_eq!(restrict(&hf("2,3,3"), &[1]).unwrap(), hf("1,3,3"));
        assert_eq!(restrict(&hf("2,3,3"), &[1, 2]).unwrap(), hf("1,2,3"));
        assert!(restrict(&hf("2,2"), &[2]).is_err());
        for n in 1..=5 {
            for m in enumerate_hessenberg(n) {
                for d in enumerate_decorations(&m) {
                    assert!(restrict(&m, d.set()).is_ok());
                }
            }
        }
    }

    #[test]
    fn edge_list_parsing() {
        let g = Graph::parse_edge_list("edges:1-2,2-3", None).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert!(Graph::parse_edge_list("edges:1-1", None).is_err());
        assert!(Graph::parse_edge_list("edges:1_2", None).is_err());
    }

    fn arb_hessenberg(max: usize) -> impl Strategy<Value = HessenbergFunction> {
        (0..=max).prop_flat_map(|n| {
            let all = enumerate_hessenberg(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn concat_is_associative(a in arb_hessenberg(3), b in arb_hessenberg(3), c in arb_hessenberg(3)) {
            prop_assert_eq!(concat(&concat(&a, &b), &c), concat(&a, &concat(&b, &c)));
        }

        #[test]
        fn concat_is_disjoint_union(a in arb_hessenberg(4), b in arb_hessenberg(4)) {
            let g = graph_of(&concat(&a, &b));
            let n1 = a.n();
            let mut expected: Vec<(usize, usize)> = graph_of(&a).edges().to_vec();
            expected.extend(graph_of(&b).edges().iter().map(|&(u, v)| (u + n1, v + n1)));
            expected.sort_unstable();
            prop_assert_eq!(g.edges(), &expected[..]);
        }
    }
}
