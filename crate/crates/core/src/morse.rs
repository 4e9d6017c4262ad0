//! Bookkeeping at fixed points of the circle action: a Hodge chain
//! `E = F_1 + ... + F_m`, the weight decomposition `U_k` of `End(E)`, the
//! dimensions of the weight pieces of `H^1`, and the Morse index.
//!
//! These are formula evaluators. A chain is not checked for realizability as
//! a stable critical point.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::triple::{Genus, MAX_RANK};

pub const MAX_CHAIN_LENGTH: usize = 1000;
pub const MAX_ABS_CHAIN_DEGREE: i64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeChain {
    ranks: Vec<i64>,
    degrees: Vec<i64>,
}

/// A comma separated list of integers, as used on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

impl FromStr for IntList {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Parse { what: "integer list", reason: "empty list".into() });
        }
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse { what: "integer list", reason: format!("{x:?}: {e}") })
            })
            .collect::<Result<Vec<_>>>()
            .map(IntList)
    }
}

impl HodgeChain {
    pub fn new(ranks: Vec<i64>, degrees: Vec<i64>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::invalid("chain", "length must be at least 1"));
        }
        if ranks.len() > MAX_CHAIN_LENGTH {
            return Err(Error::invalid("chain", format!("length {} above {MAX_CHAIN_LENGTH}", ranks.len())));
        }
        if ranks.len() != degrees.len() {
            return Err(Error::invalid("chain", format!("{} ranks but {} degrees", ranks.len(), degrees.len())));
        }
        if let Some(r) = ranks.iter().find(|r| !(1..=MAX_RANK).contains(*r)) {
            return Err(Error::invalid("chain rank", format!("{r} outside [1, {MAX_RANK}]")));
        }
        if let Some(e) = degrees.iter().find(|e| e.abs() > MAX_ABS_CHAIN_DEGREE) {
            return Err(Error::invalid("chain degree", format!("{e} out of range")));
        }
        Ok(HodgeChain { ranks, degrees })
    }

    /// Parses comma separated rank and degree lists.
    pub fn parse(ranks: &str, degrees: &str) -> Result<Self> {
        let IntList(r) = ranks.parse()?;
        let IntList(d) = degrees.parse()?;
        HodgeChain::new(r, d)
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UkProfile {
    pub k: i64,
    pub rank: i128,
    pub degree: i128,
}

/// Rank and degree of `U_k = sum over i - j = k of Hom(F_j, F_i)`.
pub fn uk_profile(c: &HodgeChain, k: i64) -> UkProfile {
    let m = c.len() as i64;
    let (mut rank, mut degree) = (0i128, 0i128);
    if k.abs() < m {
        for j in 0..m {
            let i = j + k;
            if (0..m).contains(&i) {
                let (rj, ri) = (c.ranks[j as usize] as i128, c.ranks[i as usize] as i128);
                let (ej, ei) = (c.degrees[j as usize] as i128, c.degrees[i as usize] as i128);
                rank += rj * ri;
                degree += rj * ei - ri * ej;
            }
        }
    }
    UkProfile { k, rank, degree }
}

/// Dimension of the weight-`2k` piece of `H^1`:
/// `(g-1)(rk U_{2k+1} + rk U_{2k}) + deg U_{2k+1} - deg U_{2k}`, plus one when
/// `k = 0`.
pub fn dim_h1_weight(c: &HodgeChain, k: i64, g: Genus) -> Result<i128> {
    if k < 0 {
        return Err(Error::Domain(format!("weight index k = {k} must be nonnegative")));
    }
    if k >= c.len() as i64 {
        return Ok(0);
    }
    let (even, odd) = (uk_profile(c, 2 * k), uk_profile(c, 2 * k + 1));
    let gm1 = (g.get() - 1) as i128;
    let base = gm1 * (odd.rank + even.rank) + odd.degree - even.degree;
    Ok(if k == 0 { base + 1 } else { base })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorseIndex {
    /// Complex Morse index.
    pub index: i128,
    pub real_index: i128,
    pub advisory: Option<String>,
}

/// `sum_{k=2}^{m-1} ((g-1) rk U_k + (-1)^(k+1) deg U_k)`, evaluated verbatim.
pub fn morse_index(c: &HodgeChain, g: Genus) -> MorseIndex {
    let gm1 = (g.get() - 1) as i128;
    let m = c.len() as i64;
    let index: i128 = (2..m)
        .map(|k| {
            let u = uk_profile(c, k);
            let sign = if k % 2 == 1 { 1 } else { -1 };
            gm1 * u.rank + sign * u.degree
        })
        .sum();
    let advisory =
        (index < 0).then(|| format!("negative index {index}: chain data is not realizable as a stable critical point"));
    MorseIndex { index, real_index: 2 * index, advisory }
}
