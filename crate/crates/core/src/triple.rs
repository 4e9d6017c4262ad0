//! Discrete invariants of holomorphic triples and the exact arithmetic built on
//! them: slopes, alpha-slopes, witness checks, the alpha range, the kernel,
//! torsion and stabilization thresholds, Euler characteristics of extension
//! complexes, and moduli dimensions.
//!
//! Nothing here looks at actual bundles. A [`SubtripleWitness`] is numeric
//! data `(n1', n2', d1', d2')`; checking it against a type says whether a
//! subtriple with those invariants *would* destabilize, not whether one exists.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::walls;

pub const MAX_RANK: i64 = 10_000;
/// Bound on triple degrees. Large enough for the triples attached to Higgs data
/// (`a + p(2g - 2)`), small enough that every product in this crate fits `i64`.
pub const MAX_ABS_DEGREE: i64 = 1_000_000_000_000;
pub const MAX_GENUS: i64 = 1_000_000;

fn check_rank(what: &'static str, n: i64, allow_zero: bool) -> Result<()> {
    let min = if allow_zero { 0 } else { 1 };
    if n < min || n > MAX_RANK {
        return Err(Error::invalid(what, format!("rank {n} outside [{min}, {MAX_RANK}]")));
    }
    Ok(())
}

fn check_degree(what: &'static str, d: i64) -> Result<()> {
    if d.abs() > MAX_ABS_DEGREE {
        return Err(Error::invalid(what, format!("degree {d} outside [-{MAX_ABS_DEGREE}, {MAX_ABS_DEGREE}]")));
    }
    Ok(())
}

/// Genus of the underlying Riemann surface, `2 <= g <= MAX_GENUS`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Genus(i64);

impl Genus {
    pub fn new(g: i64) -> Result<Self> {
        if !(2..=MAX_GENUS).contains(&g) {
            return Err(Error::invalid("genus", format!("g = {g} outside [2, {MAX_GENUS}]")));
        }
        Ok(Genus(g))
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// `2g - 2`, the value of the stability parameter that links triples to
    /// Higgs bundles.
    pub fn two_g_minus_two(self) -> i64 {
        2 * self.0 - 2
    }
}

impl TryFrom<i64> for Genus {
    type Error = Error;
    fn try_from(g: i64) -> Result<Self> {
        Genus::new(g)
    }
}

impl From<Genus> for i64 {
    fn from(g: Genus) -> i64 {
        g.0
    }
}

/// The type `(n1, n2, d1, d2)` of a triple `E2 -> E1`: ranks and degrees of
/// `E1` and `E2`. Both ranks are positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawInvariants")]
pub struct TripleType {
    n1: i64,
    n2: i64,
    d1: i64,
    d2: i64,
}

#[derive(Deserialize)]
struct RawInvariants {
    n1: i64,
    n2: i64,
    d1: i64,
    d2: i64,
}

impl TryFrom<RawInvariants> for TripleType {
    type Error = Error;
    fn try_from(r: RawInvariants) -> Result<Self> {
        TripleType::new(r.n1, r.n2, r.d1, r.d2)
    }
}

impl TripleType {
    pub fn new(n1: i64, n2: i64, d1: i64, d2: i64) -> Result<Self> {
        check_rank("n1", n1, false)?;
        check_rank("n2", n2, false)?;
        check_degree("d1", d1)?;
        check_degree("d2", d2)?;
        Ok(TripleType { n1, n2, d1, d2 })
    }

    pub fn n1(&self) -> i64 {
        self.n1
    }
    pub fn n2(&self) -> i64 {
        self.n2
    }
    pub fn d1(&self) -> i64 {
        self.d1
    }
    pub fn d2(&self) -> i64 {
        self.d2
    }

    pub fn total_rank(&self) -> i64 {
        self.n1 + self.n2
    }

    pub fn total_degree(&self) -> i64 {
        self.d1 + self.d2
    }

    pub fn mu1(&self) -> Rational {
        Rational::new(self.d1, self.n1)
    }

    pub fn mu2(&self) -> Rational {
        Rational::new(self.d2, self.n2)
    }

    /// `mu1 - mu2`, which is also the lower end `alpha_m` of the alpha range.
    pub fn slope_gap(&self) -> Rational {
        self.mu1() - self.mu2()
    }

    pub fn as_witness(&self) -> SubtripleWitness {
        SubtripleWitness { n1p: self.n1, n2p: self.n2, d1p: self.d1, d2p: self.d2 }
    }

    /// Componentwise difference `self - sub`, used for quotients in extensions.
    pub fn quotient_by(&self, sub: &SubtripleWitness) -> SubtripleWitness {
        SubtripleWitness {
            n1p: self.n1 - sub.n1p,
            n2p: self.n2 - sub.n2p,
            d1p: self.d1 - sub.d1p,
            d2p: self.d2 - sub.d2p,
        }
    }
}

impl fmt::Display for TripleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n1, self.n2, self.d1, self.d2)
    }
}

/// Numeric invariants `(n1', n2', d1', d2')` of a would-be subtriple, or more
/// generally of any triple where a rank may be zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubtripleWitness {
    pub n1p: i64,
    pub n2p: i64,
    pub d1p: i64,
    pub d2p: i64,
}

impl SubtripleWitness {
    pub fn new(n1p: i64, n2p: i64, d1p: i64, d2p: i64) -> Result<Self> {
        check_rank("n1'", n1p, true)?;
        check_rank("n2'", n2p, true)?;
        // quotients of a bounded type can reach twice the degree bound
        for (what, d) in [("d1'", d1p), ("d2'", d2p)] {
            if d.abs() > 2 * MAX_ABS_DEGREE {
                return Err(Error::invalid(what, format!("degree {d} out of range")));
            }
        }
        if n1p == 0 && n2p == 0 {
            return Err(Error::invalid("witness", "ranks (0,0) describe the zero triple"));
        }
        Ok(SubtripleWitness { n1p, n2p, d1p, d2p })
    }

    pub fn total_rank(&self) -> i64 {
        self.n1p + self.n2p
    }

    pub fn total_degree(&self) -> i64 {
        self.d1p + self.d2p
    }

    /// Whether this witness can stand for a proper subtriple of `t`.
    pub fn check_proper_for(&self, t: &TripleType) -> Result<()> {
        if self.n1p < 0 || self.n1p > t.n1 || self.n2p < 0 || self.n2p > t.n2 {
            return Err(Error::Domain(format!(
                "witness ranks ({},{}) not within (0..={}, 0..={})",
                self.n1p, self.n2p, t.n1, t.n2
            )));
        }
        if self.n1p == 0 && self.n2p == 0 {
            return Err(Error::Domain("witness ranks (0,0) are not a subtriple".into()));
        }
        if *self == t.as_witness() {
            return Err(Error::Domain("witness equals the triple type itself".into()));
        }
        Ok(())
    }
}

impl fmt::Display for SubtripleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n1p, self.n2p, self.d1p, self.d2p)
    }
}

/// Parses `n1',n2',d1',d2'` (four comma separated integers).
impl FromStr for SubtripleWitness {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse { what: "witness", reason: format!("{s:?}: {e}") })?;
        match parts[..] {
            [a, b, c, d] => SubtripleWitness::new(a, b, c, d),
            _ => Err(Error::Parse {
                what: "witness",
                reason: format!("expected 4 comma separated integers, got {}", parts.len()),
            }),
        }
    }
}

/// Upper end of an alpha interval; infinite exactly for equal ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Upper {
    Finite(Rational),
    Infinite,
}

impl Upper {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Upper::Finite(r) => Some(r),
            Upper::Infinite => None,
        }
    }

    pub fn exceeds(&self, x: &Rational) -> bool {
        match self {
            Upper::Finite(r) => r > x,
            Upper::Infinite => true,
        }
    }
}

impl Serialize for Upper {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Upper::Finite(r) => r.serialize(s),
            Upper::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaInterval {
    pub lo: Rational,
    pub hi: Upper,
    /// `false` when `alpha_m < 0`: no alpha-semistable triple of this type exists.
    pub nonempty: bool,
    /// `alpha_m = alpha_M = 0` with unequal ranks; only `alpha = 0` can carry stable triples.
    pub single_point: bool,
}

impl AlphaInterval {
    /// Open interior contains `x`.
    pub fn contains_open(&self, x: &Rational) -> bool {
        *x > self.lo && self.hi.exceeds(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    /// The type the thresholds were computed for (the dual when `n1 < n2`).
    pub working_type: TripleType,
    pub via_duality: bool,
    pub alpha_m: Rational,
    pub alpha_big_m: Option<Rational>,
    /// `alpha_j` for `j = 0 .. n2 - 1`: above `alpha_j` the kernel of the
    /// triple map has rank at most `j`.
    pub alpha_j: Vec<Rational>,
    /// Injectivity threshold, `alpha_j` at `j = 0`.
    pub alpha_0: Rational,
    /// Torsion-free cokernel threshold (unequal ranks only).
    pub alpha_t: Option<Rational>,
    pub alpha_e: Rational,
    /// Beyond this value the moduli space no longer changes.
    pub alpha_l: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessOutcome {
    pub witness: SubtripleWitness,
    pub delta: Option<Rational>,
    pub pass: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub alpha: Rational,
    pub strict: bool,
    pub outcomes: Vec<WitnessOutcome>,
    pub all_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaseFactor {
    /// Moduli of stable bundles of the given rank and degree.
    StableBundles { rank: i64, degree: i64, dim: i64 },
    /// Effective divisors of the given degree on the curve.
    Divisors { degree: i64, dim: i64 },
}

impl BaseFactor {
    pub fn dim(&self) -> i64 {
        match self {
            BaseFactor::StableBundles { dim, .. } | BaseFactor::Divisors { dim, .. } => *dim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationDims {
    pub working_type: TripleType,
    pub via_duality: bool,
    pub equal_ranks: bool,
    /// Whether the large-alpha hypotheses (`mu1 > mu2`, resp. `d1 > d2`) hold.
    pub hypotheses_hold: bool,
    /// Fiber dimension of the projective fibration. For unequal ranks this is
    /// `h^1(E2 (x) F^*) - 1` by Riemann-Roch.
    pub large_alpha_fiber_n: i64,
    /// The closed form with `n1 (n1 - n2) (g - 1)` in place of the Riemann-Roch
    /// rank `n2 (n1 - n2)`; kept for comparison.
    pub printed_fiber_n: i64,
    pub base: Vec<BaseFactor>,
    pub base_dim: i64,
    pub moduli_dim: i64,
    /// `base_dim + large_alpha_fiber_n - moduli_dim`.
    pub dimension_balance: i64,
    pub empty_fiber: bool,
}

/// `d / n` in lowest terms.
pub fn slope(n: i64, d: i64) -> Result<Rational> {
    if n <= 0 {
        return Err(Error::Domain(format!("slope needs a positive rank, got {n}")));
    }
    Ok(Rational::new(d, n))
}

/// `mu_alpha(T) = (d1 + d2)/(n1 + n2) + alpha n2/(n1 + n2)`.
pub fn alpha_slope(t: &TripleType, alpha: &Rational) -> Rational {
    (alpha * t.n2 + Rational::from_int(t.total_degree())) / t.total_rank()
}

fn witness_alpha_slope(w: &SubtripleWitness, alpha: &Rational) -> Result<Rational> {
    if w.total_rank() <= 0 {
        return Err(Error::Domain("witness has total rank 0".into()));
    }
    Ok((alpha * w.n2p + Rational::from_int(w.total_degree())) / w.total_rank())
}

/// `mu_alpha(T') - mu_alpha(T)`. Negative means the witness does not
/// destabilize at `alpha`, zero puts `alpha` on a wall.
pub fn delta_alpha(t: &TripleType, w: &SubtripleWitness, alpha: &Rational) -> Result<Rational> {
    Ok(witness_alpha_slope(w, alpha)? - alpha_slope(t, alpha))
}

/// Evaluates each supplied witness at `alpha`.
///
/// This is a certificate checker over numeric data. It cannot decide whether an
/// actual triple is alpha-stable, since that depends on which subtriples exist.
/// Improper witnesses are reported individually and count as failures.
pub fn witness_check(t: &TripleType, witnesses: &[SubtripleWitness], alpha: &Rational, strict: bool) -> WitnessReport {
    let outcomes: Vec<WitnessOutcome> = witnesses
        .iter()
        .map(|w| {
            let delta = w.check_proper_for(t).and_then(|()| delta_alpha(t, w, alpha));
            match delta {
                Ok(d) => {
                    let pass = if strict { d.is_negative() } else { !d.is_positive() };
                    WitnessOutcome { witness: *w, delta: Some(d), pass, error: None }
                }
                Err(e) => WitnessOutcome { witness: *w, delta: None, pass: false, error: Some(e.to_string()) },
            }
        })
        .collect();
    let all_pass = outcomes.iter().all(|o| o.pass);
    WitnessReport { alpha: alpha.clone(), strict, outcomes, all_pass }
}

/// Necessary range `[alpha_m, alpha_M]` for alpha-semistable triples to exist.
pub fn alpha_range(t: &TripleType) -> AlphaInterval {
    let lo = t.slope_gap();
    let hi = if t.n1 == t.n2 {
        Upper::Infinite
    } else {
        let factor = Rational::one() + Rational::new(t.total_rank(), (t.n1 - t.n2).abs());
        Upper::Finite(factor * lo.clone())
    };
    let nonempty = !lo.is_negative();
    let single_point = lo.is_zero() && t.n1 != t.n2;
    AlphaInterval { lo, hi, nonempty, single_point }
}

/// `(n2, n1, -d2, -d1)`. Alpha-stability of a triple and its dual agree.
pub fn dual(t: &TripleType) -> TripleType {
    TripleType { n1: t.n2, n2: t.n1, d1: -t.d2, d2: -t.d1 }
}

fn oriented(t: &TripleType) -> (TripleType, bool) {
    if t.n1 < t.n2 {
        (dual(t), true)
    } else {
        (*t, false)
    }
}

/// Kernel, torsion and stabilization thresholds. Types with `n1 < n2` are
/// handled through the dual type.
pub fn thresholds(t: &TripleType) -> Result<Thresholds> {
    if t.mu1() < t.mu2() {
        return Err(Error::Domain(format!(
            "type {t} has mu1 < mu2, so alpha_m < 0 and no alpha-semistable triples exist \
             (duality preserves mu1 - mu2)"
        )));
    }
    let (w, via_duality) = oriented(t);
    let (n1, n2) = (w.n1, w.n2);
    let gap = w.slope_gap();
    let range = alpha_range(&w);

    let alpha_j: Vec<Rational> = (0..n2)
        .map(|j| {
            let denom = n2 * (n1 - n2) + (j + 1) * (n1 + n2);
            &gap * Rational::new(2 * n1 * n2, denom)
        })
        .collect();
    let alpha_0 = alpha_j[0].clone();

    let alpha_t = range.hi.finite().filter(|_| n1 > n2).map(|hi| hi - &Rational::new(n1 + n2, n2 * (n1 - n2)));

    let mut alpha_e = range.lo.clone().max(alpha_0.clone());
    if let Some(at) = &alpha_t {
        alpha_e = alpha_e.max(at.clone());
    }

    let alpha_l = if n1 == n2 {
        &gap * (n1 * (n1 - 1))
    } else {
        walls::largest_interior_wall(&w)?.unwrap_or_else(|| range.lo.clone())
    };

    Ok(Thresholds {
        working_type: w,
        via_duality,
        alpha_m: range.lo,
        alpha_big_m: range.hi.finite().cloned(),
        alpha_j,
        alpha_0,
        alpha_t,
        alpha_e,
        alpha_l,
    })
}

/// Euler characteristic `chi(T'', T')` of the complex computing extensions
/// of `T''` by `T'`. Depends only on the invariants.
pub fn chi(tpp: &SubtripleWitness, tp: &SubtripleWitness, g: Genus) -> i64 {
    let (a1, a2, e1, e2) = (tpp.n1p, tpp.n2p, tpp.d1p, tpp.d2p);
    let (b1, b2, f1, f2) = (tp.n1p, tp.n2p, tp.d1p, tp.d2p);
    (1 - g.get()) * (a1 * b1 + a2 * b2 - a2 * b1) + a1 * f1 - b1 * e1 + a2 * f2 - b2 * e2 - a2 * f1 + b1 * e2
}

/// Dimension of the moduli space of alpha-stable triples at a smooth point,
/// `1 - chi(T, T)`.
pub fn dim_stable_moduli(t: &TripleType, g: Genus) -> i64 {
    let (n1, n2) = (t.n1, t.n2);
    (g.get() - 1) * (n1 * n1 + n2 * n2 - n1 * n2) - n1 * t.d2 + n2 * t.d1 + 1
}

fn stable_bundles_dim(rank: i64, g: Genus) -> i64 {
    rank * rank * (g.get() - 1) + 1
}

/// Projective-fibration description of the large-alpha moduli space.
pub fn fibration_dims(t: &TripleType, g: Genus) -> FibrationDims {
    let (w, via_duality) = oriented(t);
    let (n1, n2, d1, d2) = (w.n1, w.n2, w.d1, w.d2);
    let gm1 = g.get() - 1;
    let moduli_dim = dim_stable_moduli(&w, g);

    let (hypotheses_hold, fiber, printed, base) = if n1 == n2 {
        let d = d1 - d2;
        let n = n1 * d - 1;
        let base = vec![
            BaseFactor::StableBundles { rank: n1, degree: d2, dim: stable_bundles_dim(n1, g) },
            BaseFactor::Divisors { degree: d, dim: d },
        ];
        (d > 0, n, n, base)
    } else {
        let rr = n2 * d1 - n1 * d2 + n2 * (n1 - n2) * gm1 - 1;
        let printed = n2 * d1 - n1 * d2 + n1 * (n1 - n2) * gm1 - 1;
        let base = vec![
            BaseFactor::StableBundles { rank: n1 - n2, degree: d1 - d2, dim: stable_bundles_dim(n1 - n2, g) },
            BaseFactor::StableBundles { rank: n2, degree: d2, dim: stable_bundles_dim(n2, g) },
        ];
        (w.mu1() > w.mu2(), rr, printed, base)
    };
    let base_dim: i64 = base.iter().map(BaseFactor::dim).sum();
    FibrationDims {
        working_type: w,
        via_duality,
        equal_ranks: n1 == n2,
        hypotheses_hold,
        large_alpha_fiber_n: fiber,
        printed_fiber_n: printed,
        base,
        base_dim,
        moduli_dim,
        dimension_balance: base_dim + fiber - moduli_dim,
        empty_fiber: fiber < 0,
    }
}
