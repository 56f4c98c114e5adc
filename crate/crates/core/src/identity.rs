//! Exact evaluation of the weighted subtree identity at integer points.
//!
//! With `y_j` the weight of edge `j` and `u` the root,
//!
//! ```text
//! prod_{v != u} sum_{e in E(v)} y_e
//!     = tau(G, y) + sum_{T} (prod_{e in T} y_e) * F(G - V(T), y)
//! ```
//!
//! where `T` runs over the non-spanning subtrees containing `u`,
//! `tau(G, y)` is the spanning-tree generating sum and `F(H, y)` is the
//! product over all vertices of `H` of their incident weight sums.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counting::tau_weighted_matrix_tree;
use crate::degree::{visit_nst, SubTree};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph};
use crate::weights::EdgeWeights;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub root: usize,
    pub weight_point: EdgeWeights,
    pub lhs: BigInt,
    pub tau_term: BigInt,
    pub nst_sum: BigInt,
    pub holds: bool,
}

fn vertex_sum(g: &Multigraph, v: usize, w: &EdgeWeights) -> BigInt {
    g.incidence(v).iter().map(|&j| w.big(j)).sum()
}

/// `F(G, w)`: product over all vertices of incident weight sums; 1 on the
/// empty graph.
pub fn f_value(g: &Multigraph, w: &EdgeWeights) -> Result<BigInt> {
    w.check_len(g.edge_count())?;
    Ok((0..g.vertex_count()).map(|v| vertex_sum(g, v, w)).product())
}

/// Product of the tree's edge weights; 1 for the edgeless tree.
pub fn tree_weight(t: &SubTree, w: &EdgeWeights) -> Result<BigInt> {
    if let Some(bad) = t.edges.iter().find(|&e| e >= w.len()) {
        return Err(Error::EdgeOutOfRange { index: bad, m: w.len() });
    }
    Ok(t.edges.iter().map(|e| w.big(e)).product())
}

pub fn identity_lhs(g: &Multigraph, u: usize, w: &EdgeWeights) -> Result<BigInt> {
    g.check_vertex(u)?;
    w.check_len(g.edge_count())?;
    Ok((0..g.vertex_count()).filter(|&v| v != u).map(|v| vertex_sum(g, v, w)).product())
}

/// `(tau(G, w), sum over subtrees)`. Requires `g` connected.
pub fn identity_rhs(g: &Multigraph, u: usize, w: &EdgeWeights) -> Result<(BigInt, BigInt)> {
    g.check_vertex(u)?;
    w.check_len(g.edge_count())?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    rhs_unchecked(g, u, w)
}

fn rhs_unchecked(g: &Multigraph, u: usize, w: &EdgeWeights) -> Result<(BigInt, BigInt)> {
    let tau_term = tau_weighted_matrix_tree(g, w)?;
    let mut nst_sum = BigInt::zero();
    let mut cached = None;
    visit_nst(g, u, |t| {
        // F(G - V(T)) depends only on V(T); subtrees arrive grouped by it
        let f = match &cached {
            Some((s, f)) if *s == t.vertices => f,
            _ => {
                let rest = g.delete_vertices(t.vertices).expect("subset of g");
                let f = f_value(&rest.graph, &w.restrict(&rest.edge_of)).expect("restricted lengths agree");
                &cached.insert((t.vertices, f)).1
            }
        };
        if !f.is_zero() {
            let tw: BigInt = t.edges.iter().map(|e| w.big(e)).product();
            nst_sum += tw * f;
        }
        ControlFlow::Continue(())
    })?;
    Ok((tau_term, nst_sum))
}

fn report(g: &Multigraph, u: usize, w: &EdgeWeights, rhs: (BigInt, BigInt)) -> Result<IdentityReport> {
    let lhs = identity_lhs(g, u, w)?;
    let (tau_term, nst_sum) = rhs;
    let holds = lhs == &tau_term + &nst_sum;
    Ok(IdentityReport { root: u, weight_point: w.clone(), lhs, tau_term, nst_sum, holds })
}

/// Evaluates both sides at `w`. A failing identity is reported through
/// `holds`, never raised.
pub fn check_identity(g: &Multigraph, u: usize, w: &EdgeWeights) -> Result<IdentityReport> {
    let rhs = identity_rhs(g, u, w)?;
    report(g, u, w, rhs)
}

/// [`check_identity`] without the connectivity precondition.
pub fn probe_identity(g: &Multigraph, u: usize, w: &EdgeWeights) -> Result<IdentityReport> {
    g.check_vertex(u)?;
    w.check_len(g.edge_count())?;
    let rhs = rhs_unchecked(g, u, w)?;
    report(g, u, w, rhs)
}

/// `prod` of weights over an explicit spanning tree list; the literal
/// generating-sum route used to cross-check the weighted Laplacian.
pub fn tree_sum<'a>(trees: impl IntoIterator<Item = &'a EdgeSet>, w: &EdgeWeights) -> BigInt {
    trees.into_iter().map(|t| t.iter().map(|e| w.big(e)).product::<BigInt>()).fold(BigInt::zero(), |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{enumerate_spanning_trees, tau_matrix_tree};
    use crate::degree::thomassen_bound;
    use crate::family::{generate_family, FamilySpec};
    use crate::graph::VertexSet;
    use num_traits::One;

    fn doubled_diamond() -> Multigraph {
        Multigraph::new(4, [(0, 1), (1, 2), (0, 2), (0, 2), (2, 3), (0, 3)]).unwrap()
    }

    fn triangle() -> Multigraph {
        Multigraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn f_value_examples() {
        assert_eq!(f_value(&doubled_diamond(), &EdgeWeights::ones(6)).unwrap(), BigInt::from(64));
        assert_eq!(f_value(&Multigraph::empty(), &EdgeWeights::ones(0)).unwrap(), BigInt::one());
        let iso = Multigraph::new(3, [(0, 1)]).unwrap();
        assert!(f_value(&iso, &EdgeWeights::new(vec![17])).unwrap().is_zero());
        assert!(f_value(&iso, &EdgeWeights::ones(2)).is_err());
    }

    #[test]
    fn tree_weight_examples() {
        let w = EdgeWeights::new(vec![2, 7, 3]);
        let bare = SubTree { root: 0, vertices: VertexSet::singleton(0), edges: EdgeSet::new() };
        assert_eq!(tree_weight(&bare, &w).unwrap(), BigInt::one());
        let one = SubTree { root: 0, vertices: [0, 1].into_iter().collect(), edges: [1].into_iter().collect() };
        assert_eq!(tree_weight(&one, &w).unwrap(), BigInt::from(7));
        let two = SubTree { root: 0, vertices: [0, 1, 2].into_iter().collect(), edges: [0, 2].into_iter().collect() };
        assert_eq!(tree_weight(&two, &w).unwrap(), BigInt::from(6));
        let bad = SubTree { root: 0, vertices: [0, 1].into_iter().collect(), edges: [5].into_iter().collect() };
        assert!(tree_weight(&bad, &w).is_err());
    }

    #[test]
    fn lhs_examples() {
        let g = doubled_diamond();
        for u in 0..4 {
            assert_eq!(
                identity_lhs(&g, u, &EdgeWeights::ones(6)).unwrap(),
                BigInt::from(thomassen_bound(&g, u).unwrap())
            );
        }
        let k2 = Multigraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(identity_lhs(&k2, 1, &EdgeWeights::new(vec![5])).unwrap(), BigInt::from(5));
        // v0 carries edges 0 (v0v1) and 1 (v0v2); v1 carries 0 and 2
        let w = EdgeWeights::new(vec![1, 2, 3]);
        assert_eq!(identity_lhs(&triangle(), 2, &w).unwrap(), BigInt::from((1 + 2) * (1 + 3)));
        assert!(identity_lhs(&triangle(), 3, &w).is_err());
    }

    #[test]
    fn rhs_examples() {
        let k2 = Multigraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(identity_rhs(&k2, 1, &EdgeWeights::new(vec![5])).unwrap(), (BigInt::from(5), BigInt::zero()));
        // tau = ab + ac + bc = 2 + 3 + 6; subtrees at v2: {v2} -> F(edge 0) = 1*1,
        // one-edge trees leave an isolated vertex
        let w = EdgeWeights::new(vec![1, 2, 3]);
        let (tau, nst) = identity_rhs(&triangle(), 2, &w).unwrap();
        assert_eq!(tau, BigInt::from(11));
        assert_eq!(nst, BigInt::from(1));
        assert_eq!(identity_lhs(&triangle(), 2, &w).unwrap(), tau + nst);

        let g = doubled_diamond();
        let (tau, nst) = identity_rhs(&g, 3, &EdgeWeights::ones(6)).unwrap();
        assert_eq!(BigInt::from(tau_matrix_tree(&g).unwrap()), tau);
        assert_eq!(nst, BigInt::from(thomassen_bound(&g, 3).unwrap()) - tau);
        let split = Multigraph::new(3, [(0, 1)]).unwrap();
        assert_eq!(identity_rhs(&split, 0, &EdgeWeights::ones(1)).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn identity_holds_on_doubled_diamond_at_large_weights() {
        let g = doubled_diamond();
        for seed in 0..10 {
            let w = EdgeWeights::seeded(6, 1, 1_000_000, seed);
            let r = check_identity(&g, 3, &w).unwrap();
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn multiwheel_decomposition() {
        let g = generate_family(&FamilySpec::MultiWheel(4)).unwrap();
        let r = check_identity(&g, 4, &EdgeWeights::ones(12)).unwrap();
        assert_eq!((r.lhs, r.tau_term, r.nst_sum), (BigInt::from(256), BigInt::from(192), BigInt::from(64)));
        assert!(r.holds);
    }

    #[test]
    fn literal_tree_sum_matches_laplacian() {
        let g = doubled_diamond();
        let trees = enumerate_spanning_trees(&g).unwrap();
        for seed in 0..5 {
            let w = EdgeWeights::seeded(6, -1000, 1000, seed);
            assert_eq!(tree_sum(&trees, &w), tau_weighted_matrix_tree(&g, &w).unwrap());
        }
    }

    #[test]
    fn probe_on_disconnected_input() {
        let split = Multigraph::new(4, [(0, 1), (2, 3), (2, 3)]).unwrap();
        let r = probe_identity(&split, 0, &EdgeWeights::new(vec![3, -2, 5])).unwrap();
        assert!(r.tau_term.is_zero());
        assert!(r.holds, "{r:?}");
    }
}
