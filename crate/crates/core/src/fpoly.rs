//! Full expansion of the vertex-product polynomial `F(G) = prod_v sum_{e in E(v)} y_e`
//! and the matching and edge-cover data read off its terms.
//!
//! Every monomial has the shape `y_{i1}^2 ... y_{ir}^2 y_{j1} ... y_{jk}` with
//! `k + 2r = n`. The squared edges form a matching, all edges together an
//! edge cover; a term with no single edges is a perfect matching.

use std::fmt;

use num_bigint::BigUint;

use crate::algebra::{multiply_forms, CappedPoly, LinearForm, DEFAULT_TERM_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};

/// Default vertex limit for [`expand_f`] and the brute-force oracles.
pub const DEFAULT_MAX_VERTICES: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionBudget {
    pub max_vertices: usize,
    pub max_terms: usize,
}

impl Default for ExpansionBudget {
    fn default() -> Self {
        ExpansionBudget { max_vertices: DEFAULT_MAX_VERTICES, max_terms: DEFAULT_TERM_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverTerm {
    /// Edges with exponent 2.
    pub doubled: EdgeSet,
    /// Edges with exponent 1.
    pub single: EdgeSet,
    pub coefficient: BigUint,
}

impl CoverTerm {
    pub fn support(&self) -> EdgeSet {
        self.doubled.union(&self.single)
    }

    /// `k + 2r = n`, disjoint parts, matching part, cover property.
    pub fn is_valid_for(&self, g: &Multigraph) -> bool {
        let ends = |set: &EdgeSet| -> Option<Vec<(usize, usize)>> { set.iter().map(|e| g.endpoints(e).ok()).collect() };
        let (Some(doubled), Some(single)) = (ends(&self.doubled), ends(&self.single)) else {
            return false;
        };
        let mut matched = VertexSet::EMPTY;
        for &(a, b) in &doubled {
            if matched.contains(a) || matched.contains(b) {
                return false;
            }
            matched = matched.with(a).with(b);
        }
        let covered = single.iter().fold(matched, |acc, &(a, b)| acc.with(a).with(b));
        self.doubled.is_disjoint(&self.single)
            && self.single.len() + 2 * self.doubled.len() == g.vertex_count()
            && covered == g.vertices()
    }
}

impl fmt::Display for CoverTerm {
    /// `2:{doubled} 1:{single} c:<coefficient>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2:{} 1:{} c:{}", self.doubled, self.single, self.coefficient)
    }
}

/// One linear form per vertex: the sum of its incident edge variables.
pub fn f_factors(g: &Multigraph) -> Vec<LinearForm> {
    (0..g.vertex_count()).map(|v| LinearForm::new(g.incidence(v).iter().copied())).collect()
}

/// Number of endpoint picks, `prod_v d(v)`; an upper bound on the term count.
pub fn expansion_cost(g: &Multigraph) -> BigUint {
    g.degrees().into_iter().map(BigUint::from).product()
}

pub fn f_polynomial(g: &Multigraph, budget: ExpansionBudget) -> Result<CappedPoly> {
    if g.vertex_count() > budget.max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "{} vertices exceeds the expansion limit of {}",
            g.vertex_count(),
            budget.max_vertices
        )));
    }
    multiply_forms(g.edge_count(), &f_factors(g), budget.max_terms)
}

/// All terms of the expansion in ascending monomial order. A graph with an
/// isolated vertex has `F = 0`; that is reported as [`Error::IsolatedVertex`].
pub fn expand_f(g: &Multigraph, budget: ExpansionBudget) -> Result<Vec<CoverTerm>> {
    if let Some(v) = g.degrees().iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let poly = f_polynomial(g, budget)?;
    Ok(poly
        .terms()
        .map(|(mono, coef)| {
            let part = |e: u8| mono.exponents().iter().filter(|&&(_, x)| x == e).map(|&(v, _)| v).collect();
            CoverTerm { doubled: part(2), single: part(1), coefficient: coef.clone() }
        })
        .collect())
}

fn nonempty(terms: &[CoverTerm]) -> Result<&[CoverTerm]> {
    if terms.is_empty() {
        Err(Error::EmptyExpansion)
    } else {
        Ok(terms)
    }
}

/// Largest matching part over all terms.
pub fn matching_number_from_f(terms: &[CoverTerm]) -> Result<usize> {
    Ok(nonempty(terms)?.iter().map(|t| t.doubled.len()).max().expect("nonempty"))
}

/// Smallest support over all terms.
pub fn edge_cover_number_from_f(terms: &[CoverTerm]) -> Result<usize> {
    Ok(nonempty(terms)?.iter().map(|t| t.doubled.len() + t.single.len()).min().expect("nonempty"))
}

pub fn perfect_matchings_from_f(terms: &[CoverTerm]) -> Result<Vec<EdgeSet>> {
    Ok(nonempty(terms)?.iter().filter(|t| t.single.is_empty()).map(|t| t.doubled.clone()).collect())
}

fn guard(g: &Multigraph, max_vertices: usize) -> Result<()> {
    if g.vertex_count() > max_vertices {
        Err(Error::BudgetExceeded(format!(
            "{} vertices exceeds the exhaustive-search limit of {max_vertices}",
            g.vertex_count()
        )))
    } else {
        Ok(())
    }
}

/// Maximum matching size by exhaustive branching on the lowest unmatched
/// vertex: leave it unmatched or match it along each incident edge.
pub fn brute_force_matching(g: &Multigraph) -> Result<usize> {
    brute_force_matching_within(g, DEFAULT_MAX_VERTICES)
}

pub fn brute_force_matching_within(g: &Multigraph, max_vertices: usize) -> Result<usize> {
    guard(g, max_vertices)?;
    fn go(g: &Multigraph, free: VertexSet, size: usize, best: &mut usize) {
        // each further edge consumes two free vertices
        if size + free.len() / 2 <= *best {
            return;
        }
        let Some(v) = free.first() else {
            *best = size;
            return;
        };
        for &j in g.incidence(v) {
            let (a, b) = g.edges()[j];
            let other = if a == v { b } else { a };
            if free.contains(other) {
                go(g, free.difference(VertexSet::singleton(v).with(other)), size + 1, best);
            }
        }
        let mut rest = free;
        rest.remove(v);
        go(g, rest, size, best);
    }
    let mut best = 0;
    go(g, g.vertices(), 0, &mut best);
    Ok(best)
}

/// Minimum edge cover by branching on the lowest uncovered vertex over its
/// incident edges, pruned by the best cover found so far.
pub fn brute_force_edge_cover(g: &Multigraph) -> Result<usize> {
    brute_force_edge_cover_within(g, DEFAULT_MAX_VERTICES)
}

pub fn brute_force_edge_cover_within(g: &Multigraph, max_vertices: usize) -> Result<usize> {
    if let Some(v) = g.degrees().iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    guard(g, max_vertices)?;
    fn go(g: &Multigraph, uncovered: VertexSet, size: usize, best: &mut usize) {
        let Some(v) = uncovered.first() else {
            *best = (*best).min(size);
            return;
        };
        // an edge covers at most two new vertices
        if size + uncovered.len().div_ceil(2) >= *best {
            return;
        }
        for &j in g.incidence(v) {
            let (a, b) = g.edges()[j];
            go(g, uncovered.difference(VertexSet::singleton(a).with(b)), size + 1, best);
        }
    }
    let mut best = usize::MAX;
    go(g, g.vertices(), 0, &mut best);
    Ok(best)
}

/// Every perfect matching as an edge set, by matching the lowest free vertex
/// along each incident edge.
pub fn brute_force_perfect_matchings(g: &Multigraph) -> Result<Vec<EdgeSet>> {
    guard(g, DEFAULT_MAX_VERTICES)?;
    fn go(g: &Multigraph, free: VertexSet, chosen: &mut Vec<usize>, out: &mut Vec<EdgeSet>) {
        let Some(v) = free.first() else {
            out.push(chosen.iter().copied().collect());
            return;
        };
        for &j in g.incidence(v) {
            let (a, b) = g.edges()[j];
            let other = if a == v { b } else { a };
            if free.contains(other) {
                chosen.push(j);
                go(g, free.difference(VertexSet::singleton(v).with(other)), chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, g.vertices(), &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn doubled_diamond() -> Multigraph {
        Multigraph::new(4, [(0, 1), (1, 2), (0, 2), (0, 2), (2, 3), (0, 3)]).unwrap()
    }

    fn path3() -> Multigraph {
        Multigraph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn star(leaves: usize) -> Multigraph {
        Multigraph::new(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    fn cycle(n: usize) -> Multigraph {
        Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn es(v: &[usize]) -> EdgeSet {
        v.iter().copied().collect()
    }

    fn expand(g: &Multigraph) -> Vec<CoverTerm> {
        expand_f(g, ExpansionBudget::default()).unwrap()
    }

    #[test]
    fn doubled_diamond_terms() {
        let g = doubled_diamond();
        let terms = expand(&g);
        // e1 e5 and e2 e6 in one-based labels
        let pms = perfect_matchings_from_f(&terms).unwrap();
        assert_eq!(pms, vec![es(&[0, 4]), es(&[1, 5])]);
        for pm in &pms {
            let t = terms.iter().find(|t| t.doubled == *pm && t.single.is_empty()).unwrap();
            assert_eq!(t.coefficient, BigUint::one());
        }
        assert_eq!(matching_number_from_f(&terms).unwrap(), 2);
        assert_eq!(edge_cover_number_from_f(&terms).unwrap(), 2);
        assert!(terms.iter().all(|t| t.is_valid_for(&g)));
        let total: BigUint = terms.iter().map(|t| t.coefficient.clone()).sum();
        assert_eq!(total, BigUint::from(64u32));
        assert_eq!(brute_force_perfect_matchings(&g).unwrap(), pms);
    }

    #[test]
    fn single_edge_and_path() {
        let k2 = Multigraph::new(2, [(0, 1)]).unwrap();
        let terms = expand(&k2);
        assert_eq!(terms, vec![CoverTerm { doubled: es(&[0]), single: es(&[]), coefficient: BigUint::one() }]);
        assert_eq!(terms[0].to_string(), "2:{0} 1:{} c:1");
        assert_eq!(matching_number_from_f(&terms).unwrap(), 1);
        assert_eq!(edge_cover_number_from_f(&terms).unwrap(), 1);

        // (y0)(y0 + y1)(y1)
        let terms = expand(&path3());
        assert_eq!(terms.len(), 2);
        assert!(terms.iter().any(|t| t.doubled == es(&[0]) && t.single == es(&[1])));
        assert!(terms.iter().any(|t| t.doubled == es(&[1]) && t.single == es(&[0])));
        assert!(perfect_matchings_from_f(&terms).unwrap().is_empty());
        assert_eq!(matching_number_from_f(&terms).unwrap(), 1);
        assert_eq!(edge_cover_number_from_f(&terms).unwrap(), 2);
    }

    #[test]
    fn perfect_matchings_of_small_graphs() {
        let triangle = cycle(3);
        assert!(perfect_matchings_from_f(&expand(&triangle)).unwrap().is_empty());
        assert_eq!(perfect_matchings_from_f(&expand(&cycle(4))).unwrap().len(), 2);
    }

    #[test]
    fn errors() {
        let iso = Multigraph::new(3, [(0, 1)]).unwrap();
        assert_eq!(expand_f(&iso, ExpansionBudget::default()).unwrap_err(), Error::IsolatedVertex(2));
        assert_eq!(brute_force_edge_cover(&iso).unwrap_err(), Error::IsolatedVertex(2));
        assert_eq!(matching_number_from_f(&[]).unwrap_err(), Error::EmptyExpansion);
        assert_eq!(edge_cover_number_from_f(&[]).unwrap_err(), Error::EmptyExpansion);
        assert_eq!(perfect_matchings_from_f(&[]).unwrap_err(), Error::EmptyExpansion);
        let big = cycle(15);
        assert!(matches!(expand_f(&big, ExpansionBudget::default()), Err(Error::BudgetExceeded(_))));
        assert!(matches!(brute_force_matching(&big), Err(Error::BudgetExceeded(_))));
        let tight = ExpansionBudget { max_vertices: 14, max_terms: 3 };
        assert!(matches!(expand_f(&doubled_diamond(), tight), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn oracles() {
        assert_eq!(brute_force_matching(&doubled_diamond()).unwrap(), 2);
        assert_eq!(brute_force_matching(&star(4)).unwrap(), 1);
        assert_eq!(brute_force_matching(&cycle(6)).unwrap(), 3);
        assert_eq!(brute_force_edge_cover(&Multigraph::new(2, [(0, 1)]).unwrap()).unwrap(), 1);
        assert_eq!(brute_force_edge_cover(&path3()).unwrap(), 2);
        assert_eq!(brute_force_edge_cover(&star(4)).unwrap(), 4);
        let s = expand(&star(4));
        assert_eq!((matching_number_from_f(&s).unwrap(), edge_cover_number_from_f(&s).unwrap()), (1, 4));
    }
}
