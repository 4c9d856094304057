//! Resource caps shared by the Gröbner engine and the combinatorial searches.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub const BUDGET_ENV: &str = "CI_IDEAL_LAB_BUDGET";

/// Exceeding any cap is an explicit failure, never a truncated answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Largest pair queue Buchberger may hold.
    pub max_pairs: usize,
    /// Elementary reduction steps per Gröbner computation.
    pub max_reductions: u64,
    /// Branch-and-bound nodes per dimension/degree search.
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { max_pairs: 5_000_000, max_reductions: 500_000_000, max_nodes: 200_000_000 }
    }
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { max_pairs: usize::MAX, max_reductions: u64::MAX, max_nodes: u64::MAX }
    }

    /// The budget named by the environment, or the default.
    pub fn from_env() -> Result<Budget> {
        match std::env::var(BUDGET_ENV) {
            Ok(s) if !s.trim().is_empty() => s.parse(),
            _ => Ok(Budget::default()),
        }
    }
}

/// Either a bare integer (applied to every cap) or a comma list of
/// `pairs=N`, `reductions=N`, `nodes=N`.
impl FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Budget> {
        let num = |v: &str| -> Result<u64> {
            v.trim().replace('_', "").parse().map_err(|_| Error::Parse(format!("bad budget value {v:?}")))
        };
        let s = s.trim();
        if !s.contains('=') {
            let n = num(s)?;
            return Ok(Budget { max_pairs: n as usize, max_reductions: n, max_nodes: n });
        }
        let mut b = Budget::default();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| Error::Parse(format!("bad budget entry {part:?}")))?;
            match k.trim() {
                "pairs" => b.max_pairs = num(v)? as usize,
                "reductions" => b.max_reductions = num(v)?,
                "nodes" => b.max_nodes = num(v)?,
                other => return Err(Error::Parse(format!("unknown budget key {other:?}"))),
            }
        }
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let b: Budget = "1000".parse().unwrap();
        assert_eq!(b.max_pairs, 1000);
        assert_eq!(b.max_nodes, 1000);
        let b: Budget = "pairs=10, nodes=5".parse().unwrap();
        assert_eq!((b.max_pairs, b.max_nodes), (10, 5));
        assert_eq!(b.max_reductions, Budget::default().max_reductions);
        assert!("walls=3".parse::<Budget>().is_err());
        assert!("lots".parse::<Budget>().is_err());
    }
}
