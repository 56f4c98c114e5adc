//! Graph families with known spanning-tree counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Multipartite(Vec<usize>),
    Hypercube(usize),
    /// Rim cycle of the given size plus a hub joined to every rim vertex.
    Wheel(usize),
    /// A wheel with every hub-rim edge doubled.
    MultiWheel(usize),
}

impl FamilySpec {
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Complete(n) => *n,
            FamilySpec::Multipartite(parts) => parts.iter().sum(),
            FamilySpec::Hypercube(d) => 1usize.checked_shl(*d as u32).unwrap_or(usize::MAX),
            FamilySpec::Wheel(r) | FamilySpec::MultiWheel(r) => r + 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            FamilySpec::Complete(0) => return bad("complete graph needs n >= 1".into()),
            FamilySpec::Multipartite(parts) if parts.is_empty() || parts.contains(&0) => {
                return bad("every part size must be >= 1".into())
            }
            FamilySpec::Hypercube(0) => return bad("hypercube dimension must be >= 1".into()),
            FamilySpec::Hypercube(d) if *d > 6 => {
                return bad(format!("hypercube Q{d} exceeds {MAX_VERTICES} vertices"))
            }
            FamilySpec::Wheel(r) | FamilySpec::MultiWheel(r) if *r < 3 => {
                return bad("wheel rim size must be >= 3".into())
            }
            _ => {}
        }
        if self.vertex_count() > MAX_VERTICES {
            return bad(format!("{} vertices exceeds the limit of {MAX_VERTICES}", self.vertex_count()));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::Multipartite(parts) => {
                write!(f, "multipartite")?;
                for p in parts {
                    write!(f, " {p}")?;
                }
                Ok(())
            }
            FamilySpec::Hypercube(d) => write!(f, "hypercube {d}"),
            FamilySpec::Wheel(r) => write!(f, "wheel {r}"),
            FamilySpec::MultiWheel(r) => write!(f, "multiwheel {r}"),
        }
    }
}

/// Parses `complete 5`, `multipartite 2 3`, `hypercube 3`, `wheel 4`,
/// `multiwheel 4`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let kind = words.next().unwrap_or_default().to_ascii_lowercase();
        let args: Vec<usize> = words
            .map(|w| w.parse().map_err(|_| Error::InvalidSpec(format!("bad size {w:?}"))))
            .collect::<Result<_>>()?;
        let one = |args: &[usize]| match args {
            [x] => Ok(*x),
            _ => Err(Error::InvalidSpec(format!("{kind} takes exactly one size"))),
        };
        let spec = match kind.as_str() {
            "complete" => FamilySpec::Complete(one(&args)?),
            "multipartite" => FamilySpec::Multipartite(args),
            "hypercube" => FamilySpec::Hypercube(one(&args)?),
            "wheel" => FamilySpec::Wheel(one(&args)?),
            "multiwheel" => FamilySpec::MultiWheel(one(&args)?),
            other => return Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn generate_family(spec: &FamilySpec) -> Result<Multigraph> {
    spec.validate()?;
    let mut pairs = Vec::new();
    let n = spec.vertex_count();
    match spec {
        FamilySpec::Complete(n) => {
            pairs.extend((0..*n).flat_map(|a| (a + 1..*n).map(move |b| (a, b))));
        }
        FamilySpec::Multipartite(parts) => {
            let part_of: Vec<usize> =
                parts.iter().enumerate().flat_map(|(i, &size)| std::iter::repeat_n(i, size)).collect();
            for a in 0..n {
                for b in a + 1..n {
                    if part_of[a] != part_of[b] {
                        pairs.push((a, b));
                    }
                }
            }
        }
        FamilySpec::Hypercube(d) => {
            for a in 0..n {
                for bit in 0..*d {
                    let b = a ^ (1 << bit);
                    if a < b {
                        pairs.push((a, b));
                    }
                }
            }
        }
        FamilySpec::Wheel(r) | FamilySpec::MultiWheel(r) => {
            let copies = if matches!(spec, FamilySpec::MultiWheel(_)) { 2 } else { 1 };
            pairs.extend((0..*r).map(|i| (i, (i + 1) % r)));
            for i in 0..*r {
                pairs.extend(std::iter::repeat_n((i, *r), copies));
            }
        }
    }
    Multigraph::new(n, pairs)
}

/// Closed-form spanning-tree count, or `None` where no formula is known
/// (wheels).
pub fn closed_form_tau(spec: &FamilySpec) -> Option<BigUint> {
    let pow = |b: usize, e: usize| BigUint::from(b).pow(e as u32);
    match spec {
        FamilySpec::Complete(n) => Some(if *n <= 2 { BigUint::one() } else { pow(*n, n - 2) }),
        FamilySpec::Multipartite(parts) => {
            let n: usize = parts.iter().sum();
            let k = parts.len();
            if k == 1 {
                // edgeless on n vertices
                return Some(if n == 1 { BigUint::one() } else { BigUint::zero() });
            }
            let mut t = pow(n, k - 2);
            for &p in parts {
                t *= pow(n - p, p - 1);
            }
            Some(t)
        }
        FamilySpec::Hypercube(d) => {
            let d = *d;
            let mut t = pow(2, (1 << d) - d - 1);
            for k in 2..=d {
                t *= pow(k, binomial(d, k));
            }
            Some(t)
        }
        FamilySpec::Wheel(_) | FamilySpec::MultiWheel(_) => None,
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::tau_matrix_tree;

    #[test]
    fn wheels() {
        let w = generate_family(&FamilySpec::Wheel(4)).unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (5, 8));
        assert_eq!(w.degree(4), Ok(4));
        let mw = generate_family(&FamilySpec::MultiWheel(4)).unwrap();
        assert_eq!((mw.vertex_count(), mw.edge_count()), (5, 12));
        assert_eq!(mw.degrees(), vec![4, 4, 4, 4, 8]);
    }

    #[test]
    fn square_is_q2() {
        let q = generate_family(&FamilySpec::Hypercube(2)).unwrap();
        assert_eq!(q.degrees(), vec![2, 2, 2, 2]);
        assert_eq!(q.edge_count(), 4);
        assert!(q.is_connected());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_tau(&FamilySpec::Complete(6)), Some(BigUint::from(1296u32)));
        assert_eq!(closed_form_tau(&FamilySpec::Multipartite(vec![2, 3])), Some(BigUint::from(12u32)));
        assert_eq!(closed_form_tau(&FamilySpec::Hypercube(3)), Some(BigUint::from(384u32)));
        assert_eq!(closed_form_tau(&FamilySpec::Wheel(5)), None);
        assert_eq!(closed_form_tau(&FamilySpec::Complete(1)), Some(BigUint::one()));
        assert_eq!(closed_form_tau(&FamilySpec::Multipartite(vec![3])), Some(BigUint::zero()));
    }

    #[test]
    fn closed_forms_match_matrix_tree() {
        let mut specs: Vec<FamilySpec> = (1..=10).map(FamilySpec::Complete).collect();
        specs.extend((1..=4).map(FamilySpec::Hypercube));
        for parts in [vec![1], vec![2], vec![1, 1], vec![2, 3], vec![2, 2, 2], vec![1, 2, 3, 4], vec![3, 3, 1]] {
            specs.push(FamilySpec::Multipartite(parts));
        }
        for spec in specs {
            let g = generate_family(&spec).unwrap();
            assert_eq!(Some(tau_matrix_tree(&g).unwrap()), closed_form_tau(&spec), "{spec}");
        }
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!("multipartite 2 3".parse::<FamilySpec>().unwrap(), FamilySpec::Multipartite(vec![2, 3]));
        assert_eq!("multiwheel 5".parse::<FamilySpec>().unwrap().to_string(), "multiwheel 5");
        for bad in ["wheel 2", "complete 0", "hypercube 7", "complete 65", "star 3", "wheel", "multipartite 2 0"] {
            assert!(matches!(bad.parse::<FamilySpec>(), Err(Error::InvalidSpec(_))), "{bad}");
        }
    }
}
