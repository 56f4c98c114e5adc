//! Spanning-tree counts from vertex degrees.
//!
//! For a connected multigraph `G` and a root `u`,
//!
//! ```text
//! tau(G) = prod_{v != u} d_G(v) - sum_{T} prod_{v not in T} d_{G - V(T)}(v)
//! ```
//!
//! where `T` ranges over the subtrees of `G` that contain `u` but do not
//! span `G`. Terms sharing a vertex set `S` collapse to
//! `tau(G[S]) * prod_{v not in S} d_{G-S}(v)`, and sets whose removal leaves
//! an isolated vertex contribute nothing. [`tau_via_direct_formula`]
//! evaluates the subtree sum term by term; [`tau_via_grouped_formula`] uses
//! the collapsed form with a Matrix-Tree count per vertex set.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::counting::{tau_matrix_tree, visit_spanning_trees};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};

/// A subtree of the host graph containing `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubTree {
    pub root: usize,
    pub vertices: VertexSet,
    /// Edge indices of the host graph.
    pub edges: EdgeSet,
}

impl SubTree {
    /// Checks the rooted-tree invariants against `g`, including that the
    /// tree does not span `g`.
    pub fn is_valid_nst(&self, g: &Multigraph) -> bool {
        if !self.vertices.contains(self.root)
            || self.edges.len() + 1 != self.vertices.len()
            || self.vertices.len() >= g.vertex_count()
        {
            return false;
        }
        let mut reached = VertexSet::singleton(self.root);
        // |E| = |V| - 1 plus connectivity on V gives acyclicity
        loop {
            let mut grew = false;
            for e in self.edges.iter() {
                let Ok((a, b)) = g.endpoints(e) else { return false };
                if !self.vertices.contains(a) || !self.vertices.contains(b) {
                    return false;
                }
                if reached.contains(a) != reached.contains(b) {
                    reached = reached.with(a).with(b);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        reached == self.vertices
    }
}

/// One vertex set of the grouped formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPiece {
    pub vertices: VertexSet,
    pub tau_inside: BigUint,
    pub outside_degree_product: BigUint,
}

/// Visits every `S` with `u` in `S`, `G[S]` connected and `|S| <= max_size`,
/// each exactly once.
pub fn visit_connected_sets<F>(g: &Multigraph, u: usize, max_size: usize, mut visit: F) -> Result<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    g.check_vertex(u)?;
    if max_size == 0 {
        return Ok(());
    }
    let root = VertexSet::singleton(u);
    let _ = extend(g, root, g.neighbours(u), root, max_size, &mut visit);
    Ok(())
}

/// `candidates` holds every neighbour of `set` outside `forbidden`; the
/// branches for successive candidates forbid the earlier ones, so each
/// connected superset is reached along exactly one path.
fn extend<F>(
    g: &Multigraph,
    set: VertexSet,
    mut candidates: VertexSet,
    mut forbidden: VertexSet,
    max_size: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    visit(set)?;
    if set.len() == max_size {
        return ControlFlow::Continue(());
    }
    while let Some(v) = candidates.first() {
        candidates.remove(v);
        let grown = set.with(v);
        let next = candidates.union(g.neighbours(v)).difference(grown).difference(forbidden);
        extend(g, grown, next, forbidden.with(v), max_size, visit)?;
        forbidden.insert(v);
    }
    ControlFlow::Continue(())
}

pub fn enumerate_connected_sets(g: &Multigraph, u: usize, max_size: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    visit_connected_sets(g, u, max_size, |s| {
        out.push(s);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

fn require_connected(g: &Multigraph, u: usize) -> Result<()> {
    g.check_vertex(u)?;
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// `prod` of degrees in `G - s`, `None` if that leaves an isolated vertex.
fn outside_product(g: &Multigraph, s: VertexSet) -> Option<BigUint> {
    let rest = g.delete_vertices(s).expect("s is a vertex set of g").graph;
    let degrees = rest.degrees();
    if degrees.contains(&0) {
        None
    } else {
        Some(degrees.into_iter().map(BigUint::from).product())
    }
}

/// The pieces of the grouped formula: connected `S` containing `u` with
/// `1 <= |S| <= n - 2` such that `G - S` has no isolated vertex.
pub fn c_pieces(g: &Multigraph, u: usize) -> Result<Vec<InducedPiece>> {
    require_connected(g, u)?;
    pieces_unchecked(g, u)
}

fn pieces_unchecked(g: &Multigraph, u: usize) -> Result<Vec<InducedPiece>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 3 {
        return Ok(out);
    }
    visit_connected_sets(g, u, n - 2, |s| {
        if let Some(outside_degree_product) = outside_product(g, s) {
            let inside = g.induced(s).expect("nonempty").graph;
            out.push(InducedPiece {
                vertices: s,
                tau_inside: tau_matrix_tree(&inside).expect("nonempty"),
                outside_degree_product,
            });
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Product of degrees over every vertex except `u`; 1 when `n = 1`.
pub fn thomassen_bound(g: &Multigraph, u: usize) -> Result<BigUint> {
    g.check_vertex(u)?;
    Ok(g.degrees().into_iter().enumerate().filter(|&(v, _)| v != u).map(|(_, d)| BigUint::from(d)).product())
}

/// The root minimising [`thomassen_bound`], ties to the smallest index.
pub fn best_thomassen_bound(g: &Multigraph) -> Result<(usize, BigUint)> {
    let mut best: Option<(usize, BigUint)> = None;
    for u in 0..g.vertex_count() {
        let b = thomassen_bound(g, u)?;
        if best.as_ref().is_none_or(|(_, cur)| b < *cur) {
            best = Some((u, b));
        }
    }
    best.ok_or(Error::EmptyGraph)
}

/// Grouped formula value without the connectivity check; can be negative
/// or nonzero for inputs where it does not count anything.
pub fn grouped_formula_value(g: &Multigraph, u: usize) -> Result<BigInt> {
    let bound = BigInt::from(thomassen_bound(g, u)?);
    let correction: BigUint =
        pieces_unchecked(g, u)?.into_iter().map(|p| p.tau_inside * p.outside_degree_product).sum();
    Ok(bound - BigInt::from(correction))
}

pub fn tau_via_grouped_formula(g: &Multigraph, u: usize) -> Result<BigUint> {
    require_connected(g, u)?;
    let value = grouped_formula_value(g, u)?;
    Ok(value.to_biguint().expect("nonnegative for connected graphs"))
}

/// Visits the subtrees containing `u` that do not span `g`, grouped by
/// vertex set in connected-set order, lexicographic by edge indices within
/// a group. Includes the edgeless tree `{u}`.
pub fn visit_nst<F>(g: &Multigraph, u: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&SubTree) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    g.check_vertex(u)?;
    let mut stop = false;
    visit_connected_sets(g, u, n - 1, |s| {
        let sub = g.induced(s).expect("nonempty");
        let mut tree = SubTree { root: u, vertices: s, edges: EdgeSet::new() };
        visit_spanning_trees(&sub.graph, |local| {
            tree.edges = local.iter().map(|&j| sub.edge_of[j]).collect();
            let flow = visit(&tree);
            stop = flow.is_break();
            flow
        })
        .expect("nonempty");
        if stop {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
}

pub fn enumerate_nst(g: &Multigraph, u: usize) -> Result<Vec<SubTree>> {
    require_connected(g, u)?;
    let mut out = Vec::new();
    visit_nst(g, u, |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Number of non-spanning subtrees per vertex set.
pub fn nst_buckets(g: &Multigraph, u: usize) -> Result<BTreeMap<VertexSet, u64>> {
    require_connected(g, u)?;
    let mut buckets = BTreeMap::new();
    visit_nst(g, u, |t| {
        *buckets.entry(t.vertices).or_default() += 1;
        ControlFlow::Continue(())
    })?;
    Ok(buckets)
}

/// Direct formula value without the connectivity check.
pub fn direct_formula_value(g: &Multigraph, u: usize) -> Result<BigInt> {
    let bound = BigInt::from(thomassen_bound(g, u)?);
    let mut correction = BigUint::zero();
    let mut cached: Option<(VertexSet, BigUint)> = None;
    visit_nst(g, u, |t| {
        // the term depends only on V(T); trees arrive grouped by vertex set
        if cached.as_ref().is_none_or(|(s, _)| *s != t.vertices) {
            let term = outside_product(g, t.vertices).unwrap_or_default();
            cached = Some((t.vertices, term));
        }
        correction += &cached.as_ref().expect("just set").1;
        ControlFlow::Continue(())
    })?;
    Ok(bound - BigInt::from(correction))
}

pub fn tau_via_direct_formula(g: &Multigraph, u: usize) -> Result<BigUint> {
    require_connected(g, u)?;
    if g.vertex_count() == 1 {
        return Ok(BigUint::one());
    }
    let value = direct_formula_value(g, u)?;
    Ok(value.to_biguint().expect("nonnegative for connected graphs"))
}
