//! Constructive procedures for vertex covers of graphs.
//!
//! For a graph `G` with canonical weights every cover of order `k ≥ 3`
//! splits off a cover of order 2 ([`split_order2`]); for a bipartite graph
//! with arbitrary weights every cover of order `k ≥ 2` splits off a cover
//! of order 1 ([`bipartite_split`]). [`decompose`] is the exhaustive test
//! for arbitrary weighted complexes, and [`counterexample_family`] builds
//! complexes whose cover algebras need generators of super-linear degree.

use std::collections::VecDeque;

use crate::complex::{CoverPoint, WeightedComplex};
use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

/// Default search budget for [`decompose`].
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Odd-cycle enumeration is exponential in the vertex count.
pub const MAX_CYCLE_VERTICES: usize = 12;

/// A loopless simple graph with positive edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    /// 0-indexed `(i, j)` with `i < j`, sorted.
    edges: Vec<(usize, usize)>,
    weights: Vec<u64>,
}

impl WeightedGraph {
    /// Builds a graph from 1-indexed edges; `weights = None` is canonical.
    pub fn new(n: usize, edges: &[(usize, usize)], weights: Option<&[u64]>) -> Result<Self> {
        let weights = match weights {
            Some(w) if w.len() != edges.len() => {
                return Err(Error::WeightCount {
                    facets: edges.len(),
                    weights: w.len(),
                })
            }
            Some(w) => w.to_vec(),
            None => vec![1; edges.len()],
        };
        let mut pairs = Vec::with_capacity(edges.len());
        for (idx, (&(i, j), &w)) in edges.iter().zip(&weights).enumerate() {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange {
                        facet: idx + 1,
                        vertex: v,
                        n,
                    });
                }
            }
            if i == j {
                return Err(Error::Loop(i));
            }
            if w == 0 {
                return Err(Error::ZeroWeight { facet: idx + 1 });
            }
            pairs.push(((i.min(j) - 1, i.max(j) - 1), w));
        }
        pairs.sort();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            let (i, j) = w[0].0;
            return Err(Error::MultipleEdge(i + 1, j + 1));
        }
        let (edges, weights) = pairs.into_iter().unzip();
        Ok(WeightedGraph { n, edges, weights })
    }

    /// The graph whose edges are the facets of a complex of 2-sets.
    pub fn from_complex(c: &WeightedComplex) -> Result<Self> {
        if let Some((idx, f)) = c.facets().iter().enumerate().find(|(_, f)| f.len() != 2) {
            return Err(Error::NotAGraph {
                facet: idx + 1,
                size: f.len(),
            });
        }
        let edges: Vec<(usize, usize)> = c.facets().iter().map(|f| (f[0] + 1, f[1] + 1)).collect();
        WeightedGraph::new(c.n(), &edges, Some(c.weights()))
    }

    pub fn to_complex(&self) -> WeightedComplex {
        let facets = self.edges.iter().map(|&(i, j)| vec![i, j]).collect();
        WeightedComplex::from_sorted_parts(self.n, facets, self.weights.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-indexed edges.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_canonical(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(i, j) in &self.edges {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }

    fn is_cover(&self, a: &ExponentVector, k: u64) -> bool {
        self.edges.iter().zip(&self.weights).all(|(&(i, j), &w)| {
            a.coords()[i] as u128 + a.coords()[j] as u128 >= k as u128 * w as u128
        })
    }

    fn check_cover(&self, a: &ExponentVector, k: u64) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        if !self.is_cover(a, k) {
            return Err(Error::NotACover(a.to_string(), k));
        }
        Ok(())
    }
}

/// Two-coloring of a graph or a certificate that none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// 0-indexed sides; every edge joins `u` and `v`.
    Parts { u: Vec<usize>, v: Vec<usize> },
    /// 0-indexed vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

/// BFS two-coloring; each component is rooted at its smallest vertex,
/// which goes to `u`.
pub fn bipartition(g: &WeightedGraph) -> Bipartition {
    let adj = g.adjacency();
    let mut color: Vec<Option<bool>> = vec![None; g.n];
    let mut parent = vec![usize::MAX; g.n];
    let mut depth = vec![0usize; g.n];
    for root in 0..g.n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                match color[y] {
                    None => {
                        color[y] = Some(!color[x].unwrap());
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                    Some(c) if c == color[x].unwrap() => {
                        return Bipartition::OddCycle(odd_cycle(x, y, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let (u, v) = (0..g.n).partition(|&i| color[i] == Some(false));
    Bipartition::Parts { u, v }
}

/// Closes the tree paths from `x` and `y` to their common ancestor.
fn odd_cycle(mut x: usize, mut y: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    let mut cycle = left;
    cycle.extend(right);
    // rotate to the smallest vertex and orient towards its smaller neighbour
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
        .unwrap();
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

/// Splits a cover of order `k ≥ 3` of a canonically weighted graph into a
/// cover `ε` of order 2 and the remainder `a − ε` of order `k − 2`.
///
/// With `A = {i : a(i) = 0}` and `B` the neighbours of `A`, `ε` is 0 on `A`,
/// 2 on `B` and 1 elsewhere.
pub fn split_order2(g: &WeightedGraph, a: &ExponentVector, k: u64) -> Result<(CoverPoint, CoverPoint)> {
    if !g.is_canonical() {
        return Err(Error::NotCanonical);
    }
    if k < 3 {
        return Err(Error::OrderTooSmall { min: 3, got: k });
    }
    g.check_cover(a, k)?;
    let zero: Vec<bool> = a.coords().iter().map(|&x| x == 0).collect();
    let mut near_zero = vec![false; g.n];
    for &(i, j) in &g.edges {
        if zero[i] {
            near_zero[j] = true;
        }
        if zero[j] {
            near_zero[i] = true;
        }
    }
    let eps: Vec<u64> = (0..g.n)
        .map(|i| {
            if zero[i] {
                0
            } else if near_zero[i] {
                2
            } else {
                1
            }
        })
        .collect();
    let eps = ExponentVector::new(eps);
    let rest = a
        .checked_sub(&eps)
        .expect("vertices next to a zero carry at least k >= 2");
    assert!(g.is_cover(&eps, 2), "ε must be a cover of order 2");
    assert!(g.is_cover(&rest, k - 2), "a − ε must be a cover of order k − 2");
    Ok((CoverPoint::new(eps, 2), CoverPoint::new(rest, k - 2)))
}

/// Splits a cover of order `k ≥ 2` of a bipartite weighted graph into a
/// cover `b` of order 1 and `c = a − b` of order `k − 1`, with
/// `b(i) = ⌈a(i)/k⌉` on the side `u` and `⌊a(i)/k⌋` on the other side.
pub fn bipartite_split(g: &WeightedGraph, a: &ExponentVector, k: u64) -> Result<(CoverPoint, CoverPoint)> {
    let u = match bipartition(g) {
        Bipartition::Parts { u, .. } => u,
        Bipartition::OddCycle(c) => return Err(Error::NotBipartite(c)),
    };
    bipartite_split_with(g, &u, a, k)
}

/// [`bipartite_split`] with an explicit side `u` (0-indexed).
pub fn bipartite_split_with(
    g: &WeightedGraph,
    u: &[usize],
    a: &ExponentVector,
    k: u64,
) -> Result<(CoverPoint, CoverPoint)> {
    let mut in_u = vec![false; g.n];
    for &i in u {
        if i >= g.n {
            return Err(Error::InvalidArgument(format!("vertex {} out of range", i + 1)));
        }
        in_u[i] = true;
    }
    if let Some(&(i, j)) = g.edges.iter().find(|&&(i, j)| in_u[i] == in_u[j]) {
        return Err(Error::InvalidArgument(format!(
            "edge {{{},{}}} does not cross the given bipartition",
            i + 1,
            j + 1
        )));
    }
    if k < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: k });
    }
    g.check_cover(a, k)?;
    let b: Vec<u64> = a
        .coords()
        .iter()
        .enumerate()
        .map(|(i, &x)| if in_u[i] { x.div_ceil(k) } else { x / k })
        .collect();
    let b = ExponentVector::new(b);
    let c = a.checked_sub(&b).expect("b <= a componentwise");
    for (&(i, j), &w) in g.edges.iter().zip(&g.weights) {
        let w = w as u128;
        let bs = b.coords()[i] as u128 + b.coords()[j] as u128;
        let cs = c.coords()[i] as u128 + c.coords()[j] as u128;
        assert!(bs >= w, "rounded part must cover edge {{{i},{j}}} once");
        assert!(cs >= (k as u128 - 1) * w, "remainder must cover edge {{{i},{j}}} k−1 times");
    }
    Ok((CoverPoint::new(b, 1), CoverPoint::new(c, k - 1)))
}

/// Writes a cover of order `k` of a bipartite graph as `k` covers of
/// order 1 by repeated [`bipartite_split`].
pub fn bipartite_chain(g: &WeightedGraph, a: &ExponentVector, k: u64) -> Result<Vec<CoverPoint>> {
    if k == 0 {
        return Err(Error::OrderTooSmall { min: 1, got: 0 });
    }
    let u = match bipartition(g) {
        Bipartition::Parts { u, .. } => u,
        Bipartition::OddCycle(c) => return Err(Error::NotBipartite(c)),
    };
    g.check_cover(a, k)?;
    let mut out = Vec::with_capacity(k as usize);
    let mut cur = CoverPoint::new(a.clone(), k);
    while cur.k > 1 {
        let (b, c) = bipartite_split_with(g, &u, &cur.a, cur.k)?;
        out.push(b);
        cur = c;
    }
    out.push(cur);
    Ok(out)
}

/// Vertex sets (bitmasks) of all odd cycles, via a Held–Karp style DP:
/// `ends[mask]` holds the vertices where a path starting at the lowest
/// vertex of `mask` and visiting exactly `mask` can end.
fn odd_cycle_vertex_sets(g: &WeightedGraph) -> Result<Vec<u64>> {
    let n = g.n;
    if n > MAX_CYCLE_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_CYCLE_VERTICES,
        });
    }
    let adj = g.adjacency_masks();
    let mut ends = vec![0u64; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut cycles = Vec::new();
    for mask in 1u64..(1 << n) {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        let size = mask.count_ones();
        if size >= 3 && size % 2 == 1 && e & adj[start] != 0 {
            cycles.push(mask);
        }
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // extend only by vertices above the start
            let mut next = adj[v] & !mask & !((1u64 << (start + 1)) - 1);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    Ok(cycles)
}

/// Whether every vertex has a neighbour on every odd cycle.
pub fn sees_every_odd_cycle(g: &WeightedGraph) -> Result<bool> {
    let cycles = odd_cycle_vertex_sets(g)?;
    let adj = g.adjacency_masks();
    Ok(cycles
        .iter()
        .all(|&c| (0..g.n).all(|i| adj[i] & c != 0)))
}

/// A split `a = b + c`, `k = i + j` with `i, j ≥ 1`, or a certificate that
/// none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Split { b: CoverPoint, c: CoverPoint },
    Indecomposable,
}

/// Exhaustive search for a decomposition of the cover `a` of order `k ≥ 2`.
///
/// `b` runs over the box `[0, a]` in lexicographic order (last coordinate
/// fastest); the first `b` admitting an order split is returned together
/// with the smallest admissible order `i`. Fails with
/// [`Error::BudgetExceeded`] before searching when `Π(a(m)+1)·(k−1)`
/// exceeds `budget`.
pub fn decompose(c: &WeightedComplex, a: &ExponentVector, k: u64, budget: u128) -> Result<Decomposition> {
    if !c.is_cover(a, k)? {
        return Err(Error::NotACover(a.to_string(), k));
    }
    if k < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: k });
    }
    let needed = a
        .coords()
        .iter()
        .fold(k as u128 - 1, |acc, &x| acc.saturating_mul(x as u128 + 1));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    let n = a.len();
    let mut b = vec![0u64; n];
    loop {
        let bv = ExponentVector::new(b.clone());
        let cv = a.checked_sub(&bv).expect("b stays inside [0, a]");
        let ob = c.max_order(&bv)?.unwrap_or(u64::MAX);
        let oc = c.max_order(&cv)?.unwrap_or(u64::MAX);
        let lo = k.saturating_sub(oc).max(1);
        let hi = ob.min(k - 1);
        if lo <= hi {
            return Ok(Decomposition::Split {
                b: CoverPoint::new(bv, lo),
                c: CoverPoint::new(cv, k - lo),
            });
        }
        // mixed-radix increment
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(Decomposition::Indecomposable);
            }
            i -= 1;
            if b[i] < a.coords()[i] {
                b[i] += 1;
                break;
            }
            b[i] = 0;
        }
    }
}

/// An instance of the family with generators of degree `mk + k + 1` on
/// `m + 2k + 1` vertices.
#[derive(Clone, Debug)]
pub struct Family {
    pub m: usize,
    pub k: usize,
    pub graph: WeightedGraph,
    pub complex: WeightedComplex,
    /// `a = (k, …, k, 1, …, 1)` at order `mk + k + 1`.
    pub cover: CoverPoint,
}

/// Builds the family instance for `m, k ≥ 2` on `n = m + 2k + 1` vertices.
///
/// The graph joins each of `1..=m` to every other vertex and each
/// `i ∈ m+1..=n` to `i+k` and `i+k+1`, where indices `h > n` wrap to
/// `h − n + m`. The complex has facets `V∖{i}` for `i ≤ m` and
/// `V∖{i, …, i+k−1}` (same wrap) for `i > m`.
pub fn counterexample_family(m: usize, k: usize) -> Result<Family> {
    if m < 2 || k < 2 {
        return Err(Error::FamilyRange { m, k });
    }
    let n = m + 2 * k + 1;
    let wrap = |h: usize| if h > n { h - n + m } else { h };

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            if j != i {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    for i in m + 1..=n {
        for h in [i + k, i + k + 1] {
            let j = wrap(h);
            edges.push((i.min(j), i.max(j)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = WeightedGraph::new(n, &edges, None)?;

    let all: Vec<usize> = (1..=n).collect();
    let mut facets: Vec<Vec<usize>> = Vec::with_capacity(n);
    for i in 1..=m {
        facets.push(all.iter().copied().filter(|&v| v != i).collect());
    }
    for i in m + 1..=n {
        let removed: Vec<usize> = (i..i + k).map(wrap).collect();
        facets.push(all.iter().copied().filter(|v| !removed.contains(v)).collect());
    }
    let complex = WeightedComplex::validate(n, &facets, None)?;

    let order = (m * k + k + 1) as u64;
    let a: Vec<u64> = (1..=n).map(|i| if i <= m { k as u64 } else { 1 }).collect();
    let a = ExponentVector::new(a);
    for f in complex.facets() {
        assert_eq!(crate::complex::nu(&a, f), order as u128, "every facet sum is mk+k+1");
    }
    Ok(Family {
        m,
        k,
        graph,
        complex,
        cover: CoverPoint::new(a, order),
    })
}
