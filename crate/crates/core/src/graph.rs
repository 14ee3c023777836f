//! Simple undirected graphs, oriented graphs, and the three-vertex patterns
//! that certify a graph is not complete.
//!
//! Vertices are numbered `1..=N` throughout.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{domain, Error, Result};
use crate::perm::Permutation;

/// Largest vertex count accepted by [`enumerate_undirected`].
pub const MAX_ENUMERATION_VERTICES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(vertices: usize) -> Result<Self> {
        if vertices == 0 {
            return Err(domain!("a graph needs at least one vertex"));
        }
        Ok(UndirectedGraph {
            vertices,
            edges: BTreeSet::new(),
        })
    }

    pub fn from_edges(
        vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Self::new(vertices)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn complete(vertices: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..=vertices)
            .flat_map(|a| (a + 1..=vertices).map(move |b| (a, b)))
            .collect();
        Self::from_edges(vertices, pairs)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.vertices {
            return Err(domain!("vertex {v} out of range 1..={}", self.vertices));
        }
        Ok(())
    }

    /// Adds `{a, b}`; rejects self-loops, duplicates and unknown vertices.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(domain!("self-loop on vertex {a}"));
        }
        if !self.edges.insert((a.min(b), a.max(b))) {
            return Err(domain!("duplicate edge {{{a},{b}}}"));
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.vertices)
            .filter(|&w| w != v && self.has_edge(v, w))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices;
        self.edges.len() == n * (n - 1) / 2
    }

    /// Component id of every vertex (index `v - 1`); ids are the smallest
    /// vertex of each component.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![0; self.vertices];
        for start in 1..=self.vertices {
            if comp[start - 1] != 0 {
                continue;
            }
            comp[start - 1] = start;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if comp[y - 1] == 0 {
                        comp[y - 1] = start;
                        queue.push_back(y);
                    }
                }
            }
        }
        comp
    }

    /// Shortest path from `u` to `v` by BFS, breaking ties toward lower
    /// vertex indices. `None` if `v` is unreachable.
    pub fn shortest_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let mut parent = vec![0usize; self.vertices + 1];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for y in self.neighbors(x) {
                if parent[y] == 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[v] == 0 {
            return None;
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        Some(path)
    }

    /// Finds an `h1` or `h2` pattern, or `None` when the graph is complete.
    ///
    /// Non-adjacent pairs `(u, v)` are scanned in lexicographic order. If the
    /// pair is connected, the first three vertices of a shortest path form an
    /// `h1`; otherwise an endpoint with a neighbour gives an `h2`. Edgeless
    /// graphs are rejected.
    pub fn find_witness(&self) -> Result<Option<Witness>> {
        if self.is_trivial() {
            return Err(domain!(
                "witness search needs a graph with at least one edge"
            ));
        }
        if self.is_complete() {
            return Ok(None);
        }
        let n = self.vertices;
        for u in 1..=n {
            for v in u + 1..=n {
                if self.has_edge(u, v) {
                    continue;
                }
                if let Some(path) = self.shortest_path(u, v) {
                    // non-adjacent, so the path has at least three vertices
                    return Ok(Some(Witness {
                        kind: WitnessKind::H1,
                        vertices: [path[0], path[1], path[2]],
                    }));
                }
                if let Some(&w) = self.neighbors(u).first() {
                    return Ok(Some(Witness {
                        kind: WitnessKind::H2,
                        vertices: [u, w, v],
                    }));
                }
                if let Some(&w) = self.neighbors(v).first() {
                    return Ok(Some(Witness {
                        kind: WitnessKind::H2,
                        vertices: [v, w, u],
                    }));
                }
            }
        }
        unreachable!("a non-complete graph with an edge always has a witness")
    }

    /// The graph with vertex `i` renamed to `σ(i - 1) + 1`.
    pub fn relabeled(&self, p: &Permutation) -> Result<Self> {
        if p.len() != self.vertices {
            return Err(domain!(
                "permutation of length {} applied to {} vertices",
                p.len(),
                self.vertices
            ));
        }
        Self::from_edges(
            self.vertices,
            self.edges()
                .map(|(a, b)| (p.image(a - 1) + 1, p.image(b - 1) + 1)),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// Path `u - w - v` with `{u, v}` absent.
    H1,
    /// Edge `u - w` with `v` in another component.
    H2,
}

/// Three vertices `(u, w, v)` forming an `h1` or `h2` pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: [usize; 3],
}

impl Witness {
    /// Re-checks the pattern against `g` directly.
    pub fn is_valid_for(&self, g: &UndirectedGraph) -> bool {
        let [u, w, v] = self.vertices;
        let in_range = self
            .vertices
            .iter()
            .all(|&x| (1..=g.num_vertices()).contains(&x));
        if !in_range || u == w || w == v || u == v {
            return false;
        }
        match self.kind {
            WitnessKind::H1 => g.has_edge(u, w) && g.has_edge(w, v) && !g.has_edge(u, v),
            WitnessKind::H2 => {
                let comp = g.components();
                g.has_edge(u, w) && comp[v - 1] != comp[u - 1] && comp[v - 1] != comp[w - 1]
            }
        }
    }

    /// A transposition (0-based) whose action on the graph moves an edge onto
    /// a non-edge: `(u w)` for `h1`, `(w v)` for `h2`.
    pub fn breaking_transposition(&self, n: usize) -> Result<Permutation> {
        let [u, w, v] = self.vertices;
        match self.kind {
            WitnessKind::H1 => Permutation::transposition(n, u - 1, w - 1),
            WitnessKind::H2 => Permutation::transposition(n, w - 1, v - 1),
        }
    }
}

/// All `2^(n(n-1)/2)` labeled simple graphs on `n` vertices.
///
/// Graph number `k` contains the `j`-th pair (lexicographic order) iff bit
/// `j` of `k` is set, so the edgeless graph comes first and `K_n` last.
pub fn enumerate_undirected(n: usize) -> Result<impl Iterator<Item = UndirectedGraph>> {
    if n == 0 {
        return Err(domain!("a graph needs at least one vertex"));
    }
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Capacity {
            what: "vertices for graph enumeration",
            requested: n as u128,
            limit: MAX_ENUMERATION_VERTICES as u128,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| UndirectedGraph {
        vertices: n,
        edges: pairs
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, &e)| e)
            .collect(),
    }))
}

/// A graph whose edges carry an origin. Vertex order is `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl OrientedGraph {
    pub fn new(vertices: usize) -> Result<Self> {
        if vertices < 2 {
            return Err(domain!(
                "an oriented graph needs at least two vertices, got {vertices}"
            ));
        }
        Ok(OrientedGraph {
            vertices,
            edges: Vec::new(),
        })
    }

    /// Builds from `(origin, target)` pairs.
    pub fn from_edges(
        vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Self::new(vertices)?;
        for (origin, target) in edges {
            g.add_edge(origin, target)?;
        }
        Ok(g)
    }

    /// Complete graph with every edge directed from the higher index to the
    /// lower one.
    pub fn complete_hierarchical(vertices: usize) -> Result<Self> {
        let edges: Vec<_> = (2..=vertices)
            .flat_map(|j| (1..j).map(move |i| (j, i)))
            .collect();
        Self::from_edges(vertices, edges)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.vertices {
            return Err(domain!("vertex {v} out of range 1..={}", self.vertices));
        }
        Ok(())
    }

    /// Adds `origin -> target`; at most one edge per unordered pair.
    pub fn add_edge(&mut self, origin: usize, target: usize) -> Result<()> {
        self.check_vertex(origin)?;
        self.check_vertex(target)?;
        if origin == target {
            return Err(domain!("self-loop on vertex {origin}"));
        }
        if let Some((o, t)) = self.edge_between(origin, target) {
            return Err(domain!(
                "vertices {origin} and {target} are already joined by {o}->{t}"
            ));
        }
        self.edges.push((origin, target));
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    /// `(origin, target)` pairs in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The oriented edge joining `a` and `b`, if any.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .find(|&(o, t)| (o, t) == (a, b) || (o, t) == (b, a))
    }

    /// Vertices sharing an edge with `v`, ignoring orientation.
    pub fn neighbors(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter_map(|&(o, t)| match (o == v, t == v) {
                (true, _) => Some(t),
                (_, true) => Some(o),
                _ => None,
            })
            .collect())
    }

    /// Induced subgraph on vertices `1..=m`, orientations kept.
    pub fn prefix_subgraph(&self, m: usize) -> Result<Self> {
        if m < 2 || m > self.vertices {
            return Err(domain!(
                "prefix size {m} out of range 2..={}",
                self.vertices
            ));
        }
        Ok(OrientedGraph {
            vertices: m,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(o, t)| o <= m && t <= m)
                .collect(),
        })
    }

    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph {
            vertices: self.vertices,
            edges: self
                .edges
                .iter()
                .map(|&(o, t)| (o.min(t), o.max(t)))
                .collect(),
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices;
        self.edges.len() == n * (n - 1) / 2
    }
}
