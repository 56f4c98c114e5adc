//! Classical spanning-tree counts: Matrix-Tree, deletion-contraction and
//! explicit enumeration.

use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph};
use crate::weights::EdgeWeights;

/// Degree-minus-adjacency matrix; parallel edges accumulate.
pub fn laplacian(g: &Multigraph) -> IntMatrix {
    weighted_laplacian_unchecked(g, |_| BigInt::one())
}

fn weighted_laplacian_unchecked(g: &Multigraph, weight: impl Fn(usize) -> BigInt) -> IntMatrix {
    let mut l = IntMatrix::zeros(g.vertex_count());
    for (j, &(a, b)) in g.edges().iter().enumerate() {
        let w = weight(j);
        l[(a, a)] += &w;
        l[(b, b)] += &w;
        l[(a, b)] -= &w;
        l[(b, a)] -= &w;
    }
    l
}

/// Number of spanning trees as the determinant of a principal minor of the
/// Laplacian. Disconnected graphs give 0.
pub fn tau_matrix_tree(g: &Multigraph) -> Result<BigUint> {
    let det = tau_weighted_matrix_tree(g, &EdgeWeights::ones(g.edge_count()))?;
    Ok(det.to_biguint().expect("Laplacian minors of graphs are nonnegative"))
}

/// Sum over spanning trees of the product of their edge weights, evaluated
/// through the weighted Laplacian. May be negative for negative weights.
pub fn tau_weighted_matrix_tree(g: &Multigraph, w: &EdgeWeights) -> Result<BigInt> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    w.check_len(g.edge_count())?;
    let l = weighted_laplacian_unchecked(g, |j| w.big(j));
    Ok(l.minor(n - 1).determinant())
}

/// Which parallel class deletion-contraction splits on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pivot {
    /// A class at the lowest-index vertex of minimum degree, towards its
    /// lowest-index neighbour.
    #[default]
    MinDegree,
    /// The lexicographically last vertex pair carrying edges.
    LastPair,
}

/// Dense multiplicity matrix; the working form for deletion-contraction.
#[derive(Clone)]
struct Classes {
    mult: Vec<Vec<u64>>,
}

impl Classes {
    fn from_graph(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut mult = vec![vec![0u64; n]; n];
        for &(a, b) in g.edges() {
            mult[a][b] += 1;
            mult[b][a] += 1;
        }
        Classes { mult }
    }

    fn n(&self) -> usize {
        self.mult.len()
    }

    fn degree(&self, v: usize) -> u64 {
        self.mult[v].iter().sum()
    }

    fn neighbour_count(&self, v: usize) -> usize {
        self.mult[v].iter().filter(|&&x| x > 0).count()
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for (u, &m) in self.mult[v].iter().enumerate() {
                if m > 0 && !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == n
    }

    fn remove_vertex(&mut self, v: usize) {
        self.mult.remove(v);
        for row in &mut self.mult {
            row.remove(v);
        }
    }

    /// Identify `a` and `b`; edges between them become loops and vanish.
    fn merge(&mut self, a: usize, b: usize) {
        let (keep, drop) = (a.min(b), a.max(b));
        for x in 0..self.n() {
            let m = self.mult[drop][x];
            self.mult[keep][x] += m;
            self.mult[x][keep] += m;
        }
        self.mult[keep][keep] = 0;
        self.remove_vertex(drop);
    }

    fn pick(&self, pivot: Pivot) -> (usize, usize) {
        let n = self.n();
        match pivot {
            Pivot::MinDegree => {
                let v = (0..n).min_by_key(|&v| (self.degree(v), v)).expect("nonempty");
                let u = (0..n).find(|&u| self.mult[v][u] > 0).expect("connected graph");
                (v, u)
            }
            Pivot::LastPair => (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .rfind(|&(a, b)| self.mult[a][b] > 0)
                .expect("connected graph"),
        }
    }

    fn count(mut self, pivot: Pivot) -> BigUint {
        if !self.is_connected() {
            return BigUint::zero();
        }
        // a vertex with a single neighbour reaches the tree through exactly
        // one edge of that class
        let mut factor = BigUint::one();
        while self.n() > 1 {
            let Some(v) = (0..self.n()).find(|&v| self.neighbour_count(v) == 1) else {
                break;
            };
            factor *= self.degree(v);
            self.remove_vertex(v);
        }
        if self.n() == 1 {
            return factor;
        }
        let (a, b) = self.pick(pivot);
        let mu = self.mult[a][b];
        let mut merged = self.clone();
        merged.merge(a, b);
        self.mult[a][b] = 0;
        self.mult[b][a] = 0;
        factor * (self.count(pivot) + merged.count(pivot) * mu)
    }
}

pub fn tau_deletion_contraction(g: &Multigraph) -> Result<BigUint> {
    tau_deletion_contraction_with(g, Pivot::default())
}

/// `tau(G) = tau(G - class) + mu * tau(G / class)` over whole parallel
/// classes of multiplicity `mu`.
pub fn tau_deletion_contraction_with(g: &Multigraph, pivot: Pivot) -> Result<BigUint> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(Classes::from_graph(g).count(pivot))
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl Clone for Dsu {
    fn clone(&self) -> Self {
        Dsu(self.0.clone())
    }
}

/// Calls `visit` with the sorted edge indices of every spanning tree, in
/// lexicographic order. Stops early if `visit` breaks.
pub fn visit_spanning_trees<F>(g: &Multigraph, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut chosen = Vec::with_capacity(n - 1);
    let _ = grow(g, 0, Dsu::new(n), n, &mut chosen, &mut visit);
    Ok(())
}

fn grow<F>(
    g: &Multigraph,
    start: usize,
    dsu: Dsu,
    components: usize,
    chosen: &mut Vec<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if components == 1 {
        return visit(chosen);
    }
    let edges = g.edges();
    // prune unless the remaining edges can still connect the forest
    let mut probe = dsu.clone();
    let mut left = components;
    for &(a, b) in &edges[start..] {
        if probe.union(a, b) {
            left -= 1;
        }
    }
    if left > 1 {
        return ControlFlow::Continue(());
    }
    for j in start..edges.len() {
        if edges.len() - j < components - 1 {
            break;
        }
        let (a, b) = edges[j];
        let mut next = dsu.clone();
        if !next.union(a, b) {
            continue;
        }
        chosen.push(j);
        grow(g, j + 1, next, components - 1, chosen, visit)?;
        chosen.pop();
    }
    ControlFlow::Continue(())
}

/// All spanning trees, lexicographic by sorted edge-index sequence.
pub fn enumerate_spanning_trees(g: &Multigraph) -> Result<Vec<EdgeSet>> {
    let mut out = Vec::new();
    visit_spanning_trees(g, |t| {
        out.push(EdgeSet::from_sorted(t.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_by_enumeration(g: &Multigraph) -> Result<BigUint> {
    let mut count = 0u64;
    visit_spanning_trees(g, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(BigUint::from(count))
}
