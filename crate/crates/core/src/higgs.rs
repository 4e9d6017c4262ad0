//! `U(p,q)`-Higgs bundle data `(p, q, a, b, g)` and its link to triples:
//! the Toledo invariant and its bound, the triple type whose moduli at
//! `alpha = 2g - 2` realize the local minima, expected dimensions, and the
//! splitting forced at maximal Toledo invariant when `p != q`.

use std::cmp::Ordering;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::triple::{alpha_range, Genus, TripleType, MAX_RANK};

/// Bound on Higgs degrees `a` and `b`.
pub const MAX_ABS_HIGGS_DEGREE: i64 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHiggs")]
pub struct HiggsType {
    p: i64,
    q: i64,
    a: i64,
    b: i64,
    g: Genus,
}

#[derive(Deserialize)]
struct RawHiggs {
    p: i64,
    q: i64,
    a: i64,
    b: i64,
    g: i64,
}

impl TryFrom<RawHiggs> for HiggsType {
    type Error = Error;
    fn try_from(r: RawHiggs) -> Result<Self> {
        HiggsType::new(r.p, r.q, r.a, r.b, Genus::new(r.g)?)
    }
}

impl HiggsType {
    pub fn new(p: i64, q: i64, a: i64, b: i64, g: Genus) -> Result<Self> {
        for (what, n) in [("p", p), ("q", q)] {
            if !(1..=MAX_RANK).contains(&n) {
                return Err(Error::invalid(what, format!("rank {n} outside [1, {MAX_RANK}]")));
            }
        }
        for (what, d) in [("a", a), ("b", b)] {
            if d.abs() > MAX_ABS_HIGGS_DEGREE {
                return Err(Error::invalid(
                    what,
                    format!("degree {d} outside [-{MAX_ABS_HIGGS_DEGREE}, {MAX_ABS_HIGGS_DEGREE}]"),
                ));
            }
        }
        Ok(HiggsType { p, q, a, b, g })
    }

    pub fn p(&self) -> i64 {
        self.p
    }
    pub fn q(&self) -> i64 {
        self.q
    }
    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }
    pub fn g(&self) -> Genus {
        self.g
    }

    /// `q a - p b`; the sign of the Toledo invariant.
    pub fn twisted_degree(&self) -> i64 {
        self.q * self.a - self.p * self.b
    }

    /// The same bundle data with the roles of `V` and `W` exchanged.
    pub fn swapped(&self) -> HiggsType {
        HiggsType { p: self.q, q: self.p, a: self.b, b: self.a, g: self.g }
    }

    /// The data shifted by `l` along the orbit `(a, b) -> (a + l p, b + l q)`.
    pub fn shifted(&self, l: i64) -> Result<HiggsType> {
        HiggsType::new(self.p, self.q, self.a + l * self.p, self.b + l * self.q, self.g)
    }
}

impl std::fmt::Display for HiggsType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(p={},q={},a={},b={},g={})", self.p, self.q, self.a, self.b, self.g.get())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Toledo {
    pub tau: Rational,
    pub tau_m: Rational,
    pub within_bound: bool,
    pub saturated: bool,
}

/// `tau = 2(qa - pb)/(p + q)` and the Milnor-Wood bound `min(p,q)(2g - 2)`.
pub fn toledo(h: &HiggsType) -> Toledo {
    let tau = Rational::new(2 * h.twisted_degree(), h.p + h.q);
    let tau_m = Rational::from_int(h.p.min(h.q) * h.g.two_g_minus_two());
    let within_bound = tau.abs() <= tau_m;
    let saturated = tau.abs() == tau_m;
    Toledo { tau, tau_m, within_bound, saturated }
}

/// Which Higgs-field component vanishes on the local minima.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VanishingPattern {
    GammaZero,
    BetaZero,
    BothZero,
}

impl VanishingPattern {
    pub fn tag(self) -> &'static str {
        match self {
            VanishingPattern::GammaZero => "gamma_zero",
            VanishingPattern::BetaZero => "beta_zero",
            VanishingPattern::BothZero => "both_zero",
        }
    }
}

/// `gamma_zero` when `a/p < b/q`, `beta_zero` when `a/p > b/q`, `both_zero` at
/// equal slopes.
pub fn vanishing_pattern(h: &HiggsType) -> VanishingPattern {
    match h.twisted_degree().cmp(&0) {
        Ordering::Less => VanishingPattern::GammaZero,
        Ordering::Greater => VanishingPattern::BetaZero,
        Ordering::Equal => VanishingPattern::BothZero,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BundleType {
    pub rank: i64,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimaRealization {
    pub case_tag: VanishingPattern,
    pub triple: TripleType,
    pub alpha: Rational,
    /// At `tau = 0` the minima are also the product of moduli of polystable
    /// bundles `M(p, a) x M(q, b)`.
    pub product: Option<(BundleType, BundleType)>,
}

/// Triple type whose `(2g - 2)`-moduli space is the subspace of local minima.
/// At `tau = 0` both descriptions apply; the first one is returned.
pub fn minima_triple_type(h: &HiggsType) -> MinimaRealization {
    let shift = h.g.two_g_minus_two();
    let case_tag = vanishing_pattern(h);
    let triple = if case_tag == VanishingPattern::BetaZero {
        TripleType::new(h.q, h.p, h.b + h.q * shift, h.a)
    } else {
        TripleType::new(h.p, h.q, h.a + h.p * shift, h.b)
    }
    .expect("Higgs bounds keep the minima triple within triple bounds");
    let product = (case_tag == VanishingPattern::BothZero)
        .then_some((BundleType { rank: h.p, degree: h.a }, BundleType { rank: h.q, degree: h.b }));
    MinimaRealization { case_tag, triple, alpha: Rational::from_int(shift), product }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cmp {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for Cmp {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Cmp::Less,
            Ordering::Equal => Cmp::Equal,
            Ordering::Greater => Cmp::Greater,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MwRelations {
    pub triple: TripleType,
    pub tau: Rational,
    pub tau_m: Rational,
    pub alpha_m: Rational,
    pub alpha_big_m: Option<Rational>,
    pub two_g_minus_two: i64,
    /// `alpha_m` compared with `2g - 2`.
    pub alpha_m_vs_2g2: Cmp,
    /// `alpha_M` compared with `2g - 2`; absent for `p = q`.
    pub alpha_big_m_vs_2g2: Option<Cmp>,
    pub facts: Vec<Fact>,
}

impl MwRelations {
    pub fn all_hold(&self) -> bool {
        self.facts.iter().all(|f| f.holds)
    }
}

/// Places `2g - 2` against the alpha range of the minima triple and checks the
/// relations between that placement and the Toledo invariant.
pub fn mw_relations(h: &HiggsType) -> MwRelations {
    let t = toledo(h);
    let triple = minima_triple_type(h).triple;
    let range = alpha_range(&triple);
    let two_g = Rational::from_int(h.g.two_g_minus_two());
    let alpha_big_m = range.hi.finite().cloned();

    let mut facts = vec![
        Fact { name: "2g-2 >= alpha_m", holds: two_g >= range.lo },
        Fact { name: "alpha_m = 2g-2 iff tau = 0", holds: (range.lo == two_g) == t.tau.is_zero() },
    ];
    if let Some(am) = &alpha_big_m {
        facts.push(Fact { name: "|tau| <= tau_M iff 2g-2 <= alpha_M", holds: t.within_bound == (&two_g <= am) });
        facts.push(Fact { name: "2g-2 = alpha_M iff |tau| = tau_M", holds: (&two_g == am) == t.saturated });
    } else {
        facts.push(Fact { name: "|tau| <= tau_M iff alpha_m >= 0", holds: t.within_bound == !range.lo.is_negative() });
        let full = t.tau.abs() == Rational::from_int(h.p * h.g.two_g_minus_two());
        facts.push(Fact { name: "alpha_m = 0 iff |tau| = p(2g-2)", holds: range.lo.is_zero() == full });
    }

    MwRelations {
        triple,
        tau: t.tau,
        tau_m: t.tau_m,
        alpha_m_vs_2g2: range.lo.cmp(&two_g).into(),
        alpha_big_m_vs_2g2: alpha_big_m.as_ref().map(|am| am.cmp(&two_g).into()),
        alpha_m: range.lo,
        alpha_big_m,
        two_g_minus_two: h.g.two_g_minus_two(),
        facts,
    }
}

/// `1 + (p + q)^2 (g - 1)`.
pub fn expected_dim(h: &HiggsType) -> i64 {
    let n = h.p + h.q;
    1 + n * n * (h.g.get() - 1)
}

/// `GCD(p + q, a + b) = 1`: no strictly semistable objects, so the moduli
/// space is smooth of the expected dimension wherever it is nonempty.
pub fn coprime_smooth(h: &HiggsType) -> bool {
    (h.p + h.q).gcd(&(h.a + h.b)) == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rigidity {
    pub applies: bool,
    /// The `U(m,m)` factor with maximal Toledo invariant, `m = min(p,q)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor1: Option<HiggsType>,
    /// The remaining polystable bundle of rank `|q - p|`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor2: Option<BundleType>,
    /// `[1 + (2m)^2 (g-1)] + [1 + (M-m)^2 (g-1)]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_sum: Option<i64>,
    /// `2 + (5m^2 + M^2 - 2mM)(g-1)`, with `m = min(p,q)`, `M = max(p,q)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<i64>,
    /// `2 + (m^2 + 5M^2 - 2mM)(g-1)`, the coefficient arrangement as printed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_form: Option<i64>,
    pub expected_dim: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub below_expected: Option<bool>,
    pub warnings: Vec<String>,
}

fn factors_small_first(h: &HiggsType) -> (HiggsType, BundleType) {
    // p < q here; tau = +-p(2g - 2)
    let s = h.p * h.g.two_g_minus_two();
    let sign = if h.twisted_degree() > 0 { 1 } else { -1 };
    let f1 = HiggsType { p: h.p, q: h.p, a: h.a, b: h.a - sign * s, g: h.g };
    let f2 = BundleType { rank: h.q - h.p, degree: h.b - h.a + sign * s };
    (f1, f2)
}

/// Product decomposition of the moduli space at maximal Toledo invariant with
/// `p != q`.
pub fn rigidity(h: &HiggsType) -> Rigidity {
    let t = toledo(h);
    let expected = expected_dim(h);
    if h.p == h.q || !t.saturated {
        return Rigidity {
            applies: false,
            factor1: None,
            factor2: None,
            dim_sum: None,
            closed_form: None,
            printed_form: None,
            expected_dim: expected,
            below_expected: None,
            warnings: vec![],
        };
    }
    let (f1, f2) = if h.p < h.q {
        factors_small_first(h)
    } else {
        let (f1, f2) = factors_small_first(&h.swapped());
        (f1.swapped(), f2)
    };
    let gm1 = h.g.get() - 1;
    let (m, big) = (h.p.min(h.q), h.p.max(h.q));
    let dim_sum = expected_dim(&f1) + 1 + f2.rank * f2.rank * gm1;
    let closed_form = 2 + (5 * m * m + big * big - 2 * m * big) * gm1;
    let printed_form = 2 + (m * m + 5 * big * big - 2 * m * big) * gm1;
    let mut warnings = vec![];
    if printed_form != dim_sum {
        warnings.push(format!(
            "printed closed form 2+(p^2+5q^2-2pq)(g-1) = {printed_form} disagrees with the component sum {dim_sum}; \
             the component sum equals 2+(5p^2+q^2-2pq)(g-1)"
        ));
    }
    Rigidity {
        applies: true,
        factor1: Some(f1),
        factor2: Some(f2),
        dim_sum: Some(dim_sum),
        closed_form: Some(closed_form),
        printed_form: Some(printed_form),
        expected_dim: expected,
        below_expected: Some(dim_sum < expected),
        warnings,
    }
}
