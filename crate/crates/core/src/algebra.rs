//! Exact integer linear algebra and capped-exponent polynomials.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weights::EdgeWeights;

/// Default cap on the number of distinct monomials held during an expansion.
pub const DEFAULT_TERM_BUDGET: usize = 10_000_000;

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, data: vec![BigInt::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics unless every row has `rows.len()` entries.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            data.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The matrix with row and column `k` removed.
    pub fn minor(&self, k: usize) -> IntMatrix {
        let d = self.dim - 1;
        let mut data = Vec::with_capacity(d * d);
        for i in (0..self.dim).filter(|&i| i != k) {
            for j in (0..self.dim).filter(|&j| j != k) {
                data.push(self[(i, j)].clone());
            }
        }
        IntMatrix { dim: d, data }
    }

    /// Determinant by Bareiss fraction-free elimination. Every division in
    /// the update is exact, so entries stay integral throughout.
    pub fn determinant(&self) -> BigInt {
        let d = self.dim;
        if d == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let at = |i: usize, j: usize| i * d + j;
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..d - 1 {
            if a[at(k, k)].is_zero() {
                let Some(p) = (k + 1..d).find(|&i| !a[at(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..d {
                    a.swap(at(k, j), at(p, j));
                }
                negate = !negate;
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let v = (&a[at(i, j)] * &a[at(k, k)] - &a[at(i, k)] * &a[at(k, j)]) / &prev;
                    a[at(i, j)] = v;
                }
            }
            prev = a[at(k, k)].clone();
        }
        let det = a[at(d - 1, d - 1)].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.dim + j]
    }
}

pub fn bareiss_determinant(m: &IntMatrix) -> BigInt {
    m.determinant()
}

/// A sum of distinct variables, each with coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm(Vec<usize>);

impl LinearForm {
    pub fn new(vars: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vars.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        LinearForm(v)
    }

    pub fn vars(&self) -> &[usize] {
        &self.0
    }

    pub fn evaluate(&self, w: &EdgeWeights) -> BigInt {
        self.0.iter().map(|&j| w.big(j)).sum()
    }
}

/// Exponent vector stored sparsely as `(variable, exponent)` pairs sorted by
/// variable; exponents are 1 or 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(usize, u8)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn exponents(&self) -> &[(usize, u8)] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u8 {
        match self.0.binary_search_by_key(&var, |&(v, _)| v) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    /// Total degree with multiplicity.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&(_, e)| e as usize).sum()
    }

    fn times(&self, var: usize) -> Result<Monomial> {
        let mut v = self.0.clone();
        match v.binary_search_by_key(&var, |&(x, _)| x) {
            Ok(i) if v[i].1 >= 2 => return Err(Error::ExponentOverflow { variable: var }),
            Ok(i) => v[i].1 += 1,
            Err(i) => v.insert(i, (var, 1)),
        }
        Ok(Monomial(v))
    }

    pub fn evaluate(&self, w: &EdgeWeights) -> BigInt {
        self.0.iter().map(|&(j, e)| w.big(j).pow(e as u32)).product()
    }
}

/// Sparse polynomial over `num_vars` variables with every exponent at most 2
/// and strictly positive coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CappedPoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, BigUint>,
}

impl CappedPoly {
    pub fn one(num_vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::one(), BigUint::one());
        CappedPoly { num_vars, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigUint)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigUint {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Multiplies in one linear form, merging equal monomials as they arise.
    pub fn mul_form(&self, form: &LinearForm, budget: usize) -> Result<CappedPoly> {
        let mut terms: BTreeMap<Monomial, BigUint> = BTreeMap::new();
        for (mono, coef) in &self.terms {
            for &var in form.vars() {
                if var >= self.num_vars {
                    return Err(Error::EdgeOutOfRange { index: var, m: self.num_vars });
                }
                *terms.entry(mono.times(var)?).or_default() += coef;
                if terms.len() > budget {
                    return Err(Error::BudgetExceeded(format!("expansion exceeds {budget} distinct monomials")));
                }
            }
        }
        Ok(CappedPoly { num_vars: self.num_vars, terms })
    }

    pub fn evaluate(&self, w: &EdgeWeights) -> Result<BigInt> {
        w.check_len(self.num_vars)?;
        Ok(self.terms.iter().map(|(m, c)| BigInt::from(c.clone()) * m.evaluate(w)).sum())
    }
}

/// Product of `forms` over `num_vars` variables; the empty product is 1.
pub fn multiply_forms(num_vars: usize, forms: &[LinearForm], budget: usize) -> Result<CappedPoly> {
    forms.iter().try_fold(CappedPoly::one(num_vars), |acc, f| acc.mul_form(f, budget))
}

pub fn evaluate_poly(p: &CappedPoly, w: &EdgeWeights) -> Result<BigInt> {
    p.evaluate(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Laplace expansion along the first row; independent of elimination.
    fn cofactor_det(rows: &[Vec<i64>]) -> BigInt {
        let d = rows.len();
        if d == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for c in 0..d {
            let sub: Vec<Vec<i64>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                .collect();
            let term = BigInt::from(rows[0][c]) * cofactor_det(&sub);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn doubled_diamond_forms() -> Vec<LinearForm> {
        // edge variables y1..y6 are indices 0..5
        vec![
            LinearForm::new([0, 2, 3, 5]),
            LinearForm::new([0, 1]),
            LinearForm::new([1, 2, 3, 4]),
            LinearForm::new([4, 5]),
        ]
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]).determinant(), BigInt::from(3));
        assert_eq!(IntMatrix::identity(4).determinant(), BigInt::one());
        let m = IntMatrix::from_rows(&[vec![4, -1, -2], vec![-1, 2, -1], vec![-2, -1, 4]]);
        assert_eq!(bareiss_determinant(&m), BigInt::from(12));
        assert_eq!(IntMatrix::zeros(0).determinant(), BigInt::one());
        // zero leading pivot forces a row swap
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
        assert_eq!(IntMatrix::zeros(3).determinant(), BigInt::zero());
    }

    #[test]
    fn minor_drops_row_and_column() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(m.minor(1), IntMatrix::from_rows(&[vec![1, 3], vec![7, 9]]));
    }

    #[test]
    fn empty_product_is_one() {
        let p = multiply_forms(3, &[], DEFAULT_TERM_BUDGET).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.evaluate(&EdgeWeights::new(vec![5, 6, 7])).unwrap(), BigInt::one());
    }

    #[test]
    fn doubled_diamond_expansion() {
        let p = multiply_forms(6, &doubled_diamond_forms(), DEFAULT_TERM_BUDGET).unwrap();
        for pm in [[(0, 2), (4, 2)], [(1, 2), (5, 2)]] {
            assert_eq!(p.coefficient(&Monomial(pm.to_vec())), BigUint::one());
        }
        assert_eq!(p.evaluate(&EdgeWeights::ones(6)).unwrap(), BigInt::from(64));
        let m = Monomial(vec![(0, 2), (4, 2)]);
        assert_eq!(m.evaluate(&EdgeWeights::new(vec![3, 1, 1, 1, 2, 1])), BigInt::from(36));
    }

    #[test]
    fn square_of_single_edge() {
        let f = LinearForm::new([0]);
        let p = multiply_forms(1, &[f.clone(), f.clone()], DEFAULT_TERM_BUDGET).unwrap();
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![(&Monomial(vec![(0, 2)]), &BigUint::one())]);
        assert_eq!(
            multiply_forms(1, &[f.clone(), f.clone(), f], DEFAULT_TERM_BUDGET).unwrap_err(),
            Error::ExponentOverflow { variable: 0 }
        );
    }

    #[test]
    fn budget_and_length_errors() {
        assert!(matches!(multiply_forms(6, &doubled_diamond_forms(), 5), Err(Error::BudgetExceeded(_))));
        let p = multiply_forms(6, &doubled_diamond_forms(), DEFAULT_TERM_BUDGET).unwrap();
        assert_eq!(p.evaluate(&EdgeWeights::ones(5)).unwrap_err(), Error::LengthMismatch { expected: 6, got: 5 });
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor_expansion(
            rows in (0usize..=6).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-9i64..=9, d), d))
        ) {
            let m = IntMatrix::from_rows(&rows);
            prop_assert_eq!(m.determinant(), cofactor_det(&rows));
        }

        #[test]
        fn evaluation_is_a_homomorphism(
            vars in prop::collection::vec(prop::collection::vec(0usize..6, 1..4), 0..5),
            w in prop::collection::vec(-20i64..=20, 6),
        ) {
            // keep each variable in at most two forms so the cap is never hit
            let mut uses = [0u8; 6];
            let forms: Vec<LinearForm> = vars.into_iter().map(|vs| {
                LinearForm::new(vs.into_iter().filter(|&v| { uses[v] += 1; uses[v] <= 2 }))
            }).filter(|f| !f.vars().is_empty()).collect();
            let w = EdgeWeights::new(w);
            let p = multiply_forms(6, &forms, DEFAULT_TERM_BUDGET).unwrap();
            let direct: BigInt = forms.iter().map(|f| f.evaluate(&w)).product();
            prop_assert_eq!(p.evaluate(&w).unwrap(), direct);
            prop_assert!(p.terms().all(|(m, c)| !c.is_zero() && m.exponents().iter().all(|&(_, e)| e <= 2)));
        }
    }
}
