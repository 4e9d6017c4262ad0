//! Critical values of the stability parameter, the chamber decomposition they
//! cut out, and dimension counts for the flip loci attached to a wall.
//!
//! Walls here are *numerically admissible*: an alpha where some rank pair and
//! integer degree sum give a would-be subtriple of equal alpha-slope. Whether a
//! strictly semistable triple realizes the wall is not decided.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::triple::{alpha_range, chi, dim_stable_moduli, Genus, SubtripleWitness, TripleType, Upper};

/// Upper limit on the number of (rank pair, degree sum) solutions a single
/// enumeration may visit.
pub const MAX_WALL_WITNESSES: u128 = 1_000_000;

/// A rank pair and degree sum `d' = d1' + d2'` solving the wall equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WallWitness {
    pub n1p: i64,
    pub n2p: i64,
    pub dsum: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Wall {
    pub alpha: Rational,
    pub witnesses: Vec<WallWitness>,
    /// Equal ranks only: the wall lies above the stabilization threshold and
    /// produces no geometric flip.
    pub stabilized: bool,
}

/// An interval of alpha values with independently open or closed ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational, lo_closed: bool, hi_closed: bool) -> Self {
        Interval { lo, hi, lo_closed, hi_closed }
    }

    pub fn open(lo: Rational, hi: Rational) -> Self {
        Interval::new(lo, hi, false, false)
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Interval::new(lo, hi, true, true)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }
}

/// The wall equation's numerator and denominator for a rank pair:
/// `alpha = (S d' - R (d1 + d2)) / D`.
#[derive(Clone, Copy, Debug)]
struct RankPair {
    n1p: i64,
    n2p: i64,
    s: i64,
    r: i64,
    d: i64,
}

fn admissible_rank_pairs(t: &TripleType) -> impl Iterator<Item = RankPair> + '_ {
    (0..=t.n1()).flat_map(move |n1p| {
        (0..=t.n2()).filter_map(move |n2p| {
            let d = n1p * t.n2() - t.n1() * n2p;
            if (n1p == 0 && n2p == 0) || d == 0 {
                return None;
            }
            Some(RankPair { n1p, n2p, s: t.total_rank(), r: n1p + n2p, d })
        })
    })
}

/// `((n1 + n2) d' - (n1' + n2')(d1 + d2)) / (n1' n2 - n1 n2')`.
pub fn wall_alpha(t: &TripleType, w: &WallWitness) -> Result<Rational> {
    let d = w.n1p * t.n2() - t.n1() * w.n2p;
    if d == 0 {
        return Err(Error::Domain(format!("rank pair ({},{}) has n1' n2 = n1 n2' and defines no wall", w.n1p, w.n2p)));
    }
    let num = t.total_rank() as i128 * w.dsum as i128 - (w.n1p + w.n2p) as i128 * t.total_degree() as i128;
    Ok(Rational::from(num_bigint::BigInt::from(num)) / d)
}

fn alpha_for(t: &TripleType, rp: &RankPair, dsum: i64) -> Rational {
    let num = rp.s as i128 * dsum as i128 - rp.r as i128 * t.total_degree() as i128;
    Rational::from(num_bigint::BigInt::from(num)) / rp.d
}

fn big_to_i64(x: num_bigint::BigInt, what: &'static str) -> Result<i64> {
    x.to_i64().ok_or(Error::TooLarge { what, count: u128::MAX, limit: MAX_WALL_WITNESSES })
}

/// All numerically admissible walls with alpha in `interval`, ascending.
pub fn enumerate_walls(t: &TripleType, interval: &Interval) -> Result<Vec<Wall>> {
    if interval.lo > interval.hi {
        return Err(Error::Domain(format!("empty interval: {} > {}", interval.lo, interval.hi)));
    }
    let total = Rational::from_int(t.total_degree());
    let mut ranges = Vec::new();
    let mut count: u128 = 0;
    for rp in admissible_rank_pairs(t) {
        // alpha D = S d' - R (d1 + d2)  =>  d' = (alpha D + R (d1 + d2)) / S
        let at = |a: &Rational| (a * rp.d + &total * rp.r) / rp.s;
        let (x, y) = (at(&interval.lo), at(&interval.hi));
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        let (dmin, dmax) = (lo.ceil(), hi.floor());
        if dmin > dmax {
            continue;
        }
        let (dmin, dmax) = (big_to_i64(dmin, "wall degree range")?, big_to_i64(dmax, "wall degree range")?);
        count += (dmax as i128 - dmin as i128 + 1) as u128;
        if count > MAX_WALL_WITNESSES {
            return Err(Error::TooLarge { what: "wall enumeration", count, limit: MAX_WALL_WITNESSES });
        }
        ranges.push((rp, dmin, dmax));
    }

    let mut by_alpha: BTreeMap<Rational, Vec<WallWitness>> = BTreeMap::new();
    for (rp, dmin, dmax) in ranges {
        for dsum in dmin..=dmax {
            let alpha = alpha_for(t, &rp, dsum);
            if interval.contains(&alpha) {
                by_alpha.entry(alpha).or_default().push(WallWitness { n1p: rp.n1p, n2p: rp.n2p, dsum });
            }
        }
    }

    let alpha_l = (t.n1() == t.n2()).then(|| t.slope_gap() * (t.n1() * (t.n1() - 1)));
    Ok(by_alpha
        .into_iter()
        .map(|(alpha, mut witnesses)| {
            witnesses.sort();
            witnesses.dedup();
            let stabilized = alpha_l.as_ref().is_some_and(|l| alpha > *l);
            Wall { alpha, witnesses, stabilized }
        })
        .collect())
}

/// Largest wall strictly inside `(alpha_m, alpha_M)`; unequal ranks only.
pub fn largest_interior_wall(t: &TripleType) -> Result<Option<Rational>> {
    let range = alpha_range(t);
    let Upper::Finite(hi) = range.hi else {
        return Err(Error::Domain("equal ranks have no finite alpha_M".into()));
    };
    if range.lo >= hi {
        return Ok(None);
    }
    let interval = Interval::open(range.lo, hi);
    let total = Rational::from_int(t.total_degree());
    let mut best: Option<Rational> = None;
    for rp in admissible_rank_pairs(t) {
        // alpha is monotone in d', so only the extreme d' can be the maximum
        let at = |a: &Rational| (a * rp.d + &total * rp.r) / rp.s;
        let (x, y) = (at(&interval.lo), at(&interval.hi));
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        let (dmin, dmax) = (big_to_i64(lo.ceil(), "wall degree range")?, big_to_i64(hi.floor(), "wall degree range")?);
        if dmin > dmax {
            continue;
        }
        let from_top = rp.d > 0;
        let candidates = if from_top { [dmax, dmax - 1] } else { [dmin, dmin + 1] };
        if let Some(alpha) = candidates
            .into_iter()
            .filter(|d| (dmin..=dmax).contains(d))
            .map(|d| alpha_for(t, &rp, d))
            .find(|a| interval.contains(a))
        {
            if best.as_ref().is_none_or(|b| alpha > *b) {
                best = Some(alpha);
            }
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalCheck {
    pub alpha: Rational,
    pub critical: bool,
    pub witnesses: Vec<WallWitness>,
}

/// Whether `alpha` solves the wall equation for some admissible rank pair and
/// integer degree sum.
pub fn is_critical(t: &TripleType, alpha: &Rational) -> CriticalCheck {
    let total = Rational::from_int(t.total_degree());
    let witnesses: Vec<WallWitness> = admissible_rank_pairs(t)
        .filter_map(|rp| {
            let dsum = (alpha * rp.d + &total * rp.r) / rp.s;
            dsum.to_i64().map(|dsum| WallWitness { n1p: rp.n1p, n2p: rp.n2p, dsum })
        })
        .collect();
    CriticalCheck { alpha: alpha.clone(), critical: !witnesses.is_empty(), witnesses }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Genericity {
    pub m: i64,
    /// `GCD(n1 + n2, d1 + d2 - m n1) = 1`: sufficient for `m` not to be critical.
    pub guaranteed_noncritical: bool,
    /// `GCD(n2, n1 + n2, d1 + d2) = 1`: sufficient for there to be no
    /// alpha-independent semistable triples.
    pub no_alpha_independent: bool,
}

/// Sufficient conditions only: `false` means "no guarantee", not "critical".
pub fn integer_genericity(t: &TripleType, m: i64) -> Genericity {
    let s = t.total_rank() as i128;
    let shifted = t.total_degree() as i128 - m as i128 * t.n1() as i128;
    let guaranteed_noncritical = s.gcd(&shifted) == 1;
    let no_alpha_independent = (t.n2() as i128).gcd(&s).gcd(&(t.total_degree() as i128)) == 1;
    Genericity { m, guaranteed_noncritical, no_alpha_independent }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chamber {
    pub lo: Rational,
    pub hi: Rational,
    pub contains_2g_minus_2: bool,
    pub is_large_chamber: bool,
}

/// Where `2g - 2` sits relative to the decomposed interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "position", rename_all = "snake_case")]
pub enum Placement {
    BelowRange,
    AtLowerEnd,
    InChamber {
        index: usize,
    },
    OnWall {
        alpha: Rational,
    },
    AtUpperEnd,
    AboveRange,
    /// The alpha range is empty or a single point; nothing to place.
    NoRange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberReport {
    pub lo: Rational,
    pub hi: Rational,
    /// `true` when `hi` is a cutoff (equal ranks) rather than `alpha_M`.
    pub hi_is_cutoff: bool,
    pub alpha_l: Option<Rational>,
    pub walls: Vec<Wall>,
    pub chambers: Vec<Chamber>,
    pub two_g_minus_two: i64,
    pub placement: Placement,
    /// Walls `w` with `2g - 2 < w <= alpha_L`: the flips separating the
    /// `2g - 2` chamber from the large chamber.
    pub walls_to_large: Option<usize>,
    pub degenerate_range: bool,
}

/// Default upper end for equal ranks: `max(alpha_L, 2g - 2, alpha_m) + 1`.
pub fn default_cutoff(t: &TripleType, g: Genus) -> Rational {
    let alpha_l = t.slope_gap() * (t.n1() * (t.n1() - 1));
    alpha_l.max(Rational::from_int(g.two_g_minus_two())).max(t.slope_gap()) + 1
}

/// Chamber decomposition of `(alpha_m, alpha_M)`, or of `(alpha_m, cutoff]`
/// for equal ranks.
pub fn chambers(t: &TripleType, g: Genus, cutoff: Option<Rational>) -> Result<ChamberReport> {
    let range = alpha_range(t);
    let equal = t.n1() == t.n2();
    let two_g = Rational::from_int(g.two_g_minus_two());
    let (hi, hi_is_cutoff) = match (&range.hi, cutoff) {
        (Upper::Infinite, Some(c)) => (c, true),
        (Upper::Infinite, None) => (default_cutoff(t, g), true),
        (Upper::Finite(h), _) => (h.clone(), false),
    };
    let lo = range.lo.clone();

    let degenerate = !range.nonempty || lo >= hi;
    if degenerate {
        if equal && range.nonempty {
            return Err(Error::Domain(format!("cutoff {hi} is not above alpha_m = {lo}")));
        }
        return Ok(ChamberReport {
            lo,
            hi,
            hi_is_cutoff,
            alpha_l: None,
            walls: vec![],
            chambers: vec![],
            two_g_minus_two: g.two_g_minus_two(),
            placement: Placement::NoRange,
            walls_to_large: None,
            degenerate_range: true,
        });
    }

    let walls = enumerate_walls(t, &Interval::new(lo.clone(), hi.clone(), false, equal))?;
    let alpha_l = if equal {
        t.slope_gap() * (t.n1() * (t.n1() - 1))
    } else {
        walls.last().map_or_else(|| lo.clone(), |w| w.alpha.clone())
    };

    let mut points = vec![lo.clone()];
    points.extend(walls.iter().map(|w| w.alpha.clone()).filter(|a| *a < hi));
    points.push(hi.clone());
    let last = points.len() - 2;
    let chambers: Vec<Chamber> = points
        .windows(2)
        .enumerate()
        .map(|(i, p)| Chamber {
            lo: p[0].clone(),
            hi: p[1].clone(),
            contains_2g_minus_2: two_g > p[0] && two_g < p[1],
            is_large_chamber: if equal { p[0] >= alpha_l } else { i == last },
        })
        .collect();

    let placement = if two_g < lo {
        Placement::BelowRange
    } else if two_g == lo {
        Placement::AtLowerEnd
    } else if two_g > hi {
        Placement::AboveRange
    } else if two_g == hi && !equal {
        Placement::AtUpperEnd
    } else if let Some(w) = walls.iter().find(|w| w.alpha == two_g) {
        Placement::OnWall { alpha: w.alpha.clone() }
    } else if two_g == hi {
        Placement::AtUpperEnd
    } else {
        let index = chambers.iter().position(|c| c.contains_2g_minus_2).expect("2g-2 lies in some chamber");
        Placement::InChamber { index }
    };
    let walls_to_large = match placement {
        Placement::InChamber { .. } | Placement::OnWall { .. } => {
            Some(walls.iter().filter(|w| w.alpha > two_g && w.alpha <= alpha_l).count())
        }
        _ => None,
    };

    Ok(ChamberReport {
        lo,
        hi,
        hi_is_cutoff,
        alpha_l: Some(alpha_l),
        walls,
        chambers,
        two_g_minus_two: g.two_g_minus_two(),
        placement,
        walls_to_large,
        degenerate_range: false,
    })
}

/// Which side of the wall the extensions of a split are stable on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `n2'/(n1'+n2') < n2''/(n1''+n2'')`: extensions live just above the wall.
    Plus,
    /// The reverse inequality: just below the wall.
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlipDims {
    pub sub: SubtripleWitness,
    pub quotient: SubtripleWitness,
    pub alpha_c: Rational,
    pub side: Side,
    /// `1 - chi(T',T') - chi(T'',T'') - chi(T'',T')`.
    pub stilde_dim: i64,
    /// Projective fiber dimension `-chi(T'',T') - 1`.
    pub fiber_dim: i64,
    /// `-chi(T'',T')`.
    pub minus_chi_cross: i64,
    /// `-chi(T',T'')`, the term by which `dim N^s` exceeds `stilde_dim`.
    pub codim_cross: i64,
    pub guaranteed_codim: i64,
    pub moduli_dim: i64,
    /// `moduli_dim == stilde_dim + codim_cross`.
    pub dimension_identity_holds: bool,
    /// `moduli_dim == stilde_dim + minus_chi_cross`; holds only when the two
    /// cross terms agree.
    pub symmetric_identity_holds: bool,
    /// `alpha_c >= 2g - 2`, the range where the fibration description applies.
    pub above_2g_minus_2: bool,
    /// Some factor has rank zero but nonzero degree.
    pub degenerate_factor: bool,
}

/// Flip-locus dimension counts for the split `T = T' + T''` at its wall.
pub fn flip_dims(t: &TripleType, sub: &SubtripleWitness, g: Genus) -> Result<FlipDims> {
    let quotient = t.quotient_by(sub);
    let ranks_ok = |w: &SubtripleWitness| w.n1p >= 0 && w.n2p >= 0 && (w.n1p, w.n2p) != (0, 0);
    if !ranks_ok(sub) || !ranks_ok(&quotient) {
        return Err(Error::Domain(format!(
            "(C1) violated: {t} = {sub} + {quotient} needs nonnegative ranks, not both zero, on each side"
        )));
    }
    let w = WallWitness { n1p: sub.n1p, n2p: sub.n2p, dsum: sub.total_degree() };
    let alpha_c = wall_alpha(t, &w).map_err(|_| {
        Error::Domain(format!("(C2) violated: split {sub} has equal alpha-slope for all alpha or none"))
    })?;
    let range = alpha_range(t);
    if !range.contains_open(&alpha_c) {
        return Err(Error::Domain(format!(
            "(C2) violated: equal alpha-slopes only at alpha = {alpha_c}, outside the open alpha range"
        )));
    }
    let side = if Rational::new(sub.n2p, sub.total_rank()) < Rational::new(quotient.n2p, quotient.total_rank()) {
        Side::Plus
    } else {
        Side::Minus
    };
    let c_qs = chi(&quotient, sub, g);
    let c_sq = chi(sub, &quotient, g);
    let stilde_dim = 1 - chi(sub, sub, g) - chi(&quotient, &quotient, g) - c_qs;
    let moduli_dim = dim_stable_moduli(t, g);
    let degenerate = |w: &SubtripleWitness| (w.n1p == 0 && w.d1p != 0) || (w.n2p == 0 && w.d2p != 0);
    Ok(FlipDims {
        sub: *sub,
        quotient,
        above_2g_minus_2: alpha_c >= Rational::from_int(g.two_g_minus_two()),
        alpha_c,
        side,
        stilde_dim,
        fiber_dim: -c_qs - 1,
        minus_chi_cross: -c_qs,
        codim_cross: -c_sq,
        guaranteed_codim: g.get() - 1,
        moduli_dim,
        dimension_identity_holds: moduli_dim == stilde_dim - c_sq,
        symmetric_identity_holds: moduli_dim == stilde_dim - c_qs,
        degenerate_factor: degenerate(sub) || degenerate(&quotient),
    })
}
