//! Base-graph descriptors: `path:n`, `cycle:n`, `complete:n`,
//! `bipartite:r:s`, `star:n`, `random:n:seed` and `file:<path>`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{read_edge_list, Graph};
use crate::{Error, Result};

/// Edge probability for the non-tree pairs of `random:n:seed` bases.
pub const RANDOM_EXTRA_EDGE_P: f64 = 0.3;

/// Base families in canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseFamily {
    Path,
    Cycle,
    Complete,
    Bipartite,
    Star,
    Random,
    File,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Bipartite(usize, usize),
    Star(usize),
    Random { n: usize, seed: u64 },
    File(PathBuf),
}

impl BaseSpec {
    pub fn family(&self) -> BaseFamily {
        match self {
            BaseSpec::Path(_) => BaseFamily::Path,
            BaseSpec::Cycle(_) => BaseFamily::Cycle,
            BaseSpec::Complete(_) => BaseFamily::Complete,
            BaseSpec::Bipartite(..) => BaseFamily::Bipartite,
            BaseSpec::Star(_) => BaseFamily::Star,
            BaseSpec::Random { .. } => BaseFamily::Random,
            BaseSpec::File(_) => BaseFamily::File,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            BaseSpec::Path(k) => Graph::path(k),
            BaseSpec::Cycle(k) => Graph::cycle(k),
            BaseSpec::Complete(k) => Graph::complete(k),
            BaseSpec::Bipartite(r, s) => Graph::complete_bipartite(r, s),
            BaseSpec::Star(k) => Graph::star(k),
            BaseSpec::Random { n, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok(Graph::random_connected(n, RANDOM_EXTRA_EDGE_P, &mut rng))
            }
            BaseSpec::File(ref path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                read_edge_list(&text)
            }
        }
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::Path(k) => write!(f, "path:{k}"),
            BaseSpec::Cycle(k) => write!(f, "cycle:{k}"),
            BaseSpec::Complete(k) => write!(f, "complete:{k}"),
            BaseSpec::Bipartite(r, s) => write!(f, "bipartite:{r}:{s}"),
            BaseSpec::Star(k) => write!(f, "star:{k}"),
            BaseSpec::Random { n, seed } => write!(f, "random:{n}:{seed}"),
            BaseSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for BaseSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unknown {
            what: "base spec",
            value: s.to_string(),
        };
        let (family, rest) = s.split_once(':').ok_or_else(bad)?;
        if family == "file" {
            if rest.is_empty() {
                return Err(bad());
            }
            return Ok(BaseSpec::File(PathBuf::from(rest)));
        }
        let args: Vec<&str> = rest.split(':').collect();
        let num = |i: usize| -> Result<usize> { args[i].parse().map_err(|_| bad()) };
        match (family, args.len()) {
            ("path", 1) => Ok(BaseSpec::Path(num(0)?)),
            ("cycle", 1) => Ok(BaseSpec::Cycle(num(0)?)),
            ("complete", 1) => Ok(BaseSpec::Complete(num(0)?)),
            ("star", 1) => Ok(BaseSpec::Star(num(0)?)),
            ("bipartite", 2) => Ok(BaseSpec::Bipartite(num(0)?, num(1)?)),
            ("random", 2) => Ok(BaseSpec::Random {
                n: num(0)?,
                seed: args[1].parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

serde_as_str!(BaseSpec);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "path:5",
            "cycle:3",
            "complete:4",
            "bipartite:2:3",
            "star:6",
            "random:7:42",
            "file:graphs/a b.txt",
        ] {
            let spec: BaseSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for text in [
            "",
            "path",
            "path:",
            "path:x",
            "bipartite:2",
            "cycle:3:4",
            "tree:4",
            "file:",
        ] {
            assert!(text.parse::<BaseSpec>().is_err(), "{text}");
        }
    }

    #[test]
    fn build_validates_generators() {
        assert!("cycle:2".parse::<BaseSpec>().unwrap().build().is_err());
        let g = BaseSpec::Bipartite(2, 3).build().unwrap();
        assert_eq!(g.m(), 6);
        let a = BaseSpec::Random { n: 8, seed: 3 }.build().unwrap();
        let b = BaseSpec::Random { n: 8, seed: 3 }.build().unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
    }

    #[test]
    fn family_order_is_canonical() {
        assert!(BaseFamily::Path < BaseFamily::Cycle);
        assert!(BaseFamily::Bipartite < BaseFamily::Random);
    }
}
