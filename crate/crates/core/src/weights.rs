use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// One integer weight per edge index: an evaluation point for the edge
/// variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeWeights(Vec<i64>);

impl EdgeWeights {
    pub fn new(values: Vec<i64>) -> Self {
        EdgeWeights(values)
    }

    pub fn ones(m: usize) -> Self {
        EdgeWeights(vec![1; m])
    }

    /// `m` weights drawn uniformly from `lo..=hi`.
    pub fn random(m: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> Self {
        EdgeWeights((0..m).map(|_| rng.gen_range(lo..=hi)).collect())
    }

    pub fn seeded(m: usize, lo: i64, hi: i64, seed: u64) -> Self {
        Self::random(m, lo, hi, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, j: usize) -> i64 {
        self.0[j]
    }

    pub fn big(&self, j: usize) -> BigInt {
        BigInt::from(self.0[j])
    }

    pub fn check_len(&self, m: usize) -> Result<()> {
        if self.0.len() == m {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: m, got: self.0.len() })
        }
    }

    /// Weights of a subgraph's edges, `edge_of[new] = old`.
    pub fn restrict(&self, edge_of: &[usize]) -> EdgeWeights {
        EdgeWeights(edge_of.iter().map(|&j| self.0[j]).collect())
    }

    /// Parses the weight file format: one integer per line, line `i` holding
    /// the weight of edge `i`. Blank and `#` lines are skipped.
    pub fn parse_lines(text: &str) -> Result<Self> {
        let mut out = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            out.push(
                line.parse::<i64>()
                    .map_err(|e| Error::Parse { line: i + 1, message: format!("bad weight {line:?}: {e}") })?,
            );
        }
        Ok(EdgeWeights(out))
    }
}

/// `1,2,3` inline list.
impl FromStr for EdgeWeights {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(EdgeWeights(Vec::new()));
        }
        s.split(',')
            .map(|f| {
                f.trim().parse::<i64>().map_err(|e| Error::Parse { line: 0, message: format!("bad weight {f:?}: {e}") })
            })
            .collect::<Result<Vec<_>>>()
            .map(EdgeWeights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_and_file_forms() {
        assert_eq!("1, -2,3".parse::<EdgeWeights>().unwrap().values(), &[1, -2, 3]);
        assert!("1,x".parse::<EdgeWeights>().is_err());
        let w = EdgeWeights::parse_lines("# w\n5\n\n-7\n").unwrap();
        assert_eq!(w.values(), &[5, -7]);
        assert_eq!(w.check_len(3), Err(Error::LengthMismatch { expected: 3, got: 2 }));
    }

    #[test]
    fn seeded_points_are_reproducible() {
        let a = EdgeWeights::seeded(20, -1000, 1000, 9);
        assert_eq!(a, EdgeWeights::seeded(20, -1000, 1000, 9));
        assert!(a.values().iter().all(|w| (-1000..=1000).contains(w)));
        assert_eq!(a.restrict(&[3, 0]).values(), &[a.get(3), a.get(0)]);
    }
}
