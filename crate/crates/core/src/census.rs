//! Component labels `[a, b]` of the `PU(p,q)` representation variety: orbits of
//! `(a, b)` under `(a, b) -> (a + lp, b + lq)`, their canonical
//! representatives in the fundamental region, and the Toledo fibration of the
//! label set.
//!
//! Region membership is the half-open L-shaped predicate
//! `a < p`, `b < q`, `a >= 0 or b >= 0`, together with the Milnor-Wood strip
//! `|aq - bp| <= (p + q) min(p,q) (g - 1)`. The predicate is symmetric under
//! exchanging `(p, a)` with `(q, b)`, so it serves both `p <= q` and `p > q`.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::higgs::HiggsType;
use crate::rational::Rational;
use crate::triple::Genus;

/// Upper limit on the number of region points a single enumeration may list.
pub const MAX_CENSUS_POINTS: u128 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassPair {
    pub a: i64,
    pub b: i64,
    pub canonical: bool,
}

/// `(p + q) min(p,q) (g - 1)`, the strip half-width in `aq - bp`.
fn strip(p: i64, q: i64, g: Genus) -> i128 {
    (p + q) as i128 * p.min(q) as i128 * (g.get() - 1) as i128
}

fn check_ranks(p: i64, q: i64) -> Result<()> {
    HiggsType::new(p, q, 0, 0, Genus::new(2)?).map(|_| ())
}

pub fn omega_membership(p: i64, q: i64, g: Genus, a: i64, b: i64) -> bool {
    let twisted = a as i128 * q as i128 - b as i128 * p as i128;
    a < p && b < q && (a >= 0 || b >= 0) && twisted.abs() <= strip(p, q, g)
}

/// Smallest integer `>= x / y` for `y > 0`.
fn ceil_div(x: i128, y: i128) -> i128 {
    -Integer::div_floor(&(-x), &y)
}

/// The representative of the orbit of `(a, b)` in the fundamental region.
///
/// Along an orbit the region is the half-open range
/// `min(-a/p, -b/q) <= l < min(1 - a/p, 1 - b/q)`, which has length one.
pub fn canonicalize(p: i64, q: i64, g: Genus, a: i64, b: i64) -> Result<ClassPair> {
    check_ranks(p, q)?;
    let twisted = a as i128 * q as i128 - b as i128 * p as i128;
    if twisted.abs() > strip(p, q, g) {
        return Err(Error::Domain(format!(
            "class [{a},{b}] has |tau| above min(p,q)(2g-2) and is not a component label"
        )));
    }
    let l = ceil_div(-(a as i128), p as i128).min(ceil_div(-(b as i128), q as i128));
    let ca = a as i128 + l * p as i128;
    let cb = b as i128 + l * q as i128;
    let (ca, cb) = (ca as i64, cb as i64);
    debug_assert!(omega_membership(p, q, g, ca, cb));
    Ok(ClassPair { a: ca, b: cb, canonical: true })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub p: i64,
    pub q: i64,
    pub g: i64,
    pub k: i64,
    pub count: u128,
    /// `2(p + q) min(p,q) (g - 1) + GCD(p, q)`.
    pub formula_count: u128,
    pub points: Vec<ClassPair>,
    pub coprime_points: Vec<ClassPair>,
    /// Points on the line `aq - bp = t k`, keyed by `t`.
    pub lines: BTreeMap<i64, Vec<ClassPair>>,
}

pub fn census_count(p: i64, q: i64, g: Genus) -> u128 {
    (2 * strip(p, q, g) + p.gcd(&q) as i128) as u128
}

/// Lists the fundamental region line by line.
pub fn enumerate_region(p: i64, q: i64, g: Genus) -> Result<CensusReport> {
    check_ranks(p, q)?;
    let formula_count = census_count(p, q, g);
    if formula_count > MAX_CENSUS_POINTS {
        return Err(Error::TooLarge { what: "census enumeration", count: formula_count, limit: MAX_CENSUS_POINTS });
    }
    let k = p.gcd(&q);
    let (pp, qq) = ((p / k) as i128, (q / k) as i128);
    // x qq - y pp = 1
    let e = qq.extended_gcd(&pp);
    let (x, y) = (e.x, -e.y);
    debug_assert_eq!(x * qq - y * pp, 1);

    let t_max = (strip(p, q, g) / k as i128) as i64;
    let mut lines = BTreeMap::new();
    let mut points = Vec::new();
    for t in -t_max..=t_max {
        let (a0, b0) = (x * t as i128, y * t as i128);
        // points (a0 + s pp, b0 + s qq); the region is s in [lo, hi)
        let lo = ceil_div(-a0, pp).min(ceil_div(-b0, qq));
        let hi = ceil_div(p as i128 - a0, pp).min(ceil_div(q as i128 - b0, qq));
        let line: Vec<ClassPair> =
            (lo..hi).map(|s| ClassPair { a: (a0 + s * pp) as i64, b: (b0 + s * qq) as i64, canonical: true }).collect();
        points.extend(line.iter().copied());
        lines.insert(t, line);
    }
    points.sort();
    let coprime_points = points.iter().copied().filter(|c| is_coprime(p, q, c)).collect();
    Ok(CensusReport { p, q, g: g.get(), k, count: points.len() as u128, formula_count, points, coprime_points, lines })
}

fn is_coprime(p: i64, q: i64, c: &ClassPair) -> bool {
    (p + q).gcd(&(c.a + c.b)) == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauQuotient {
    pub k: i64,
    /// The image of `tau` on labels is `step * Z` (intersected with the bound).
    pub image_lattice_step: Rational,
    pub kernel_size: i64,
    pub kernel_generator: (i64, i64),
}

pub fn tau_quotient_facts(p: i64, q: i64) -> Result<TauQuotient> {
    check_ranks(p, q)?;
    let k = p.gcd(&q);
    Ok(TauQuotient {
        k,
        image_lattice_step: Rational::new(2 * k, p + q),
        kernel_size: k,
        kernel_generator: (p / k, q / k),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoprimePartition {
    pub coprime: Vec<ClassPair>,
    pub non_coprime: Vec<ClassPair>,
    pub both_nonempty: bool,
}

pub fn coprime_partition(p: i64, q: i64, g: Genus) -> Result<CoprimePartition> {
    let report = enumerate_region(p, q, g)?;
    let (coprime, non_coprime): (Vec<_>, Vec<_>) = report.points.into_iter().partition(|c| is_coprime(p, q, c));
    let both_nonempty = !coprime.is_empty() && !non_coprime.is_empty();
    Ok(CoprimePartition { coprime, non_coprime, both_nonempty })
}
