//! Loopless undirected multigraphs with positionally indexed edges.
//!
//! Parallel edges are distinct: edge identity is the index into the edge
//! list, never the endpoint pair. Vertex subsets are fixed-width bitmasks,
//! which caps graphs at [`MAX_VERTICES`] vertices.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `0..n` of some graph, `n <= 64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, self.iter())
    }
}

/// A set of edge indices, kept sorted and duplicate-free.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(Vec<usize>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn from_sorted(edges: Vec<usize>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        EdgeSet(edges)
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn insert(&mut self, e: usize) -> bool {
        match self.0.binary_search(&e) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, e);
                true
            }
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.iter().all(|e| !other.contains(e))
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        self.iter().chain(other.iter()).collect()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, self.iter())
    }
}

fn write_braced(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = usize>) -> fmt::Result {
    f.write_str("{")?;
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("}")
}

/// Immutable loopless multigraph.
#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
    neighbours: Vec<VertexSet>,
}

impl Multigraph {
    /// Builds a multigraph on `0..n`, edge `j` being `pairs[j]`.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let edges: Vec<(usize, usize)> = pairs.into_iter().collect();
        let mut incidence = vec![Vec::new(); n];
        let mut neighbours = vec![VertexSet::EMPTY; n];
        for (index, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge { index, vertex: a });
            }
            incidence[a].push(index);
            incidence[b].push(index);
            neighbours[a].insert(b);
            neighbours[b].insert(a);
        }
        Ok(Multigraph { n, edges, incidence, neighbours })
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Multigraph { n: 0, edges: Vec::new(), incidence: Vec::new(), neighbours: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, j: usize) -> Result<(usize, usize)> {
        self.edges.get(j).copied().ok_or(Error::EdgeOutOfRange { index: j, m: self.edges.len() })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// Number of edge endpoints at `v`; parallel edges count separately.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn incident_edges(&self, v: usize) -> Result<EdgeSet> {
        self.check_vertex(v)?;
        Ok(EdgeSet::from_sorted(self.incidence[v].clone()))
    }

    /// Incident edge indices of `v` in ascending order. Panics if `v >= n`.
    pub fn incidence(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Distinct neighbours of `v`. Panics if `v >= n`.
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.neighbours[v]
    }

    /// Neighbours of any vertex in `s`, excluding `s` itself.
    pub fn boundary(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbours[v])).difference(s)
    }

    /// `G - s`: the subgraph induced on the complement of `s`.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Subgraph> {
        self.check_set(s)?;
        Ok(self.restrict(self.vertices().difference(s)))
    }

    /// `G[s]` for nonempty `s`.
    pub fn induced(&self, s: VertexSet) -> Result<Subgraph> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(s)?;
        Ok(self.restrict(s))
    }

    fn restrict(&self, keep: VertexSet) -> Subgraph {
        let mut new_index = vec![None; self.n];
        let vertex_of: Vec<usize> = keep.iter().collect();
        for (new, &old) in vertex_of.iter().enumerate() {
            new_index[old] = Some(new);
        }
        let mut pairs = Vec::new();
        let mut edge_of = Vec::new();
        for (j, &(a, b)) in self.edges.iter().enumerate() {
            if let (Some(x), Some(y)) = (new_index[a], new_index[b]) {
                pairs.push((x, y));
                edge_of.push(j);
            }
        }
        let graph = Multigraph::new(vertex_of.len(), pairs).expect("restriction of a valid graph");
        Subgraph { graph, vertex_of, edge_of, new_index }
    }

    /// `G / e_j`: merge the endpoints of edge `j`, dropping `j` and every
    /// edge parallel to it. The merged vertex takes the smaller endpoint's
    /// label; labels above the larger endpoint shift down by one.
    pub fn contract_edge(&self, j: usize) -> Result<Multigraph> {
        let (a, b) = self.endpoints(j)?;
        let (keep, drop) = (a.min(b), a.max(b));
        let relabel = |v: usize| {
            let v = if v == drop { keep } else { v };
            if v > drop {
                v - 1
            } else {
                v
            }
        };
        let pairs = self
            .edges
            .iter()
            .filter(|&&(x, y)| !((x == a && y == b) || (x == b && y == a)))
            .map(|&(x, y)| (relabel(x), relabel(y)));
        Multigraph::new(self.n - 1, pairs)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.boundary(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// True iff every vertex is reachable from vertex 0. Graphs with at most
    /// one vertex are connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0) == self.vertices()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// Number of parallel edges joining `a` and `b`.
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        self.incidence[a]
            .iter()
            .filter(|&&j| {
                let (x, y) = self.edges[j];
                (x == a && y == b) || (x == b && y == a)
            })
            .count()
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

/// A subgraph together with the maps back to the parent graph's labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Multigraph,
    /// `vertex_of[new] = old`, ascending.
    pub vertex_of: Vec<usize>,
    /// `edge_of[new] = old`, ascending.
    pub edge_of: Vec<usize>,
    /// `new_index[old]`, `None` for removed vertices.
    pub new_index: Vec<Option<usize>>,
}
