//! Verdicts on the moduli space `M(a,b)` of `U(p,q)`-Higgs bundles and on the
//! representation spaces `R_Gamma(a,b)` and `R[a,b]` built from it.
//!
//! Only what the connectedness and smoothness results establish is asserted.
//! Everything else is `unknown`, and every determined field carries a
//! citation tag (see [`tags`]).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::higgs::{coprime_smooth, expected_dim, rigidity, toledo, HiggsType, Rigidity};
use crate::rational::Rational;

/// Citation tags naming the result each verdict field rests on.
pub mod tags {
    pub const MILNOR_WOOD_BOUND: &str = "milnor-wood-bound";
    pub const TOLEDO_ZERO_CONNECTEDNESS: &str = "toledo-zero-connectedness";
    pub const TOLEDO_ZERO_STABLE_OPEN: &str = "toledo-zero-stable-locus-open";
    pub const INTERMEDIATE_TOLEDO_STABLE_LOCUS: &str = "intermediate-toledo-stable-locus";
    pub const NON_COPRIME_CONNECTEDNESS_OPEN: &str = "non-coprime-connectedness-open";
    pub const COPRIME_CONNECTEDNESS: &str = "coprime-connectedness";
    pub const EQUAL_RANK_LARGE_TOLEDO: &str = "equal-rank-large-toledo-connectedness";
    pub const EQUAL_RANK_MAXIMAL_TOLEDO: &str = "equal-rank-maximal-toledo";
    pub const MAXIMAL_TOLEDO_CONNECTEDNESS: &str = "maximal-toledo-connectedness";
    pub const MAXIMAL_TOLEDO_RIGIDITY: &str = "maximal-toledo-rigidity";
    pub const HIGGS_REPRESENTATION_HOMEOMORPHISM: &str = "higgs-representation-homeomorphism";
    pub const PROJECTIVE_QUOTIENT_FIBRATION: &str = "projective-quotient-fibration";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

/// Which case of the analysis applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    OutOfRange,
    ToledoZero,
    Intermediate,
    MaximalEqualRank,
    MaximalRigid,
}

/// Verdict for one space. For the representation spaces "stable" reads as
/// "irreducible".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceVerdict {
    pub stable_nonempty: TriState,
    pub stable_smooth_dim: Option<i64>,
    pub closure_of_stable_connected: TriState,
    pub full_space_nonempty: TriState,
    pub full_space_connected: TriState,
    pub full_space_smooth_dim: Option<i64>,
    pub citations: BTreeMap<&'static str, Vec<&'static str>>,
}

impl SpaceVerdict {
    fn cite(&mut self, field: &'static str, tag: &'static str) {
        let v = self.citations.entry(field).or_default();
        if !v.contains(&tag) {
            v.push(tag);
        }
    }

    fn tri_fields(&self) -> [(&'static str, TriState); 4] {
        [
            ("stable_nonempty", self.stable_nonempty),
            ("closure_of_stable_connected", self.closure_of_stable_connected),
            ("full_space_nonempty", self.full_space_nonempty),
            ("full_space_connected", self.full_space_connected),
        ]
    }

    /// Fields that are `yes` or carry a dimension but have no citation.
    pub fn uncited(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = self
            .tri_fields()
            .into_iter()
            .filter(|(f, s)| *s == TriState::Yes && !self.citations.contains_key(f))
            .map(|(f, _)| f)
            .collect();
        if self.stable_smooth_dim.is_some() && !self.citations.contains_key("stable_smooth_dim") {
            out.push("stable_smooth_dim");
        }
        if self.full_space_smooth_dim.is_some() && !self.citations.contains_key("full_space_smooth_dim") {
            out.push("full_space_smooth_dim");
        }
        out
    }

    pub fn has_unknown(&self) -> bool {
        self.tri_fields().iter().any(|(_, s)| *s == TriState::Unknown)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub tau: Rational,
    pub tau_m: Rational,
    pub regime: Regime,
    pub in_range: bool,
    pub coprime: bool,
    pub expected_dim: i64,
    pub rigid: bool,
    /// `M(a,b)`.
    #[serde(flatten)]
    pub higgs: SpaceVerdict,
    pub rigidity_data: Option<Rigidity>,
    /// `R_Gamma(a,b)`, representations of the central extension in `U(p,q)`.
    pub r_gamma: SpaceVerdict,
    /// `R[a,b]`, representations in `PU(p,q)`. No smoothness is asserted.
    pub r_projective: SpaceVerdict,
    pub notes: Vec<String>,
}

fn blank() -> SpaceVerdict {
    SpaceVerdict {
        stable_nonempty: TriState::Unknown,
        stable_smooth_dim: None,
        closure_of_stable_connected: TriState::Unknown,
        full_space_nonempty: TriState::Unknown,
        full_space_connected: TriState::Unknown,
        full_space_smooth_dim: None,
        citations: BTreeMap::new(),
    }
}

pub fn classify(h: &HiggsType) -> Verdict {
    use tags::*;
    use TriState::*;

    let t = toledo(h);
    let abs_tau = t.tau.abs();
    let coprime = coprime_smooth(h);
    let expected = expected_dim(h);
    let equal = h.p() == h.q();
    let mut m = blank();
    let mut notes = vec![];

    let regime = if !t.within_bound {
        Regime::OutOfRange
    } else if t.tau.is_zero() {
        Regime::ToledoZero
    } else if !t.saturated {
        Regime::Intermediate
    } else if equal {
        Regime::MaximalEqualRank
    } else {
        Regime::MaximalRigid
    };

    match regime {
        Regime::OutOfRange => {
            m.stable_nonempty = No;
            m.closure_of_stable_connected = No;
            m.full_space_nonempty = No;
            m.full_space_connected = No;
            for f in ["stable_nonempty", "closure_of_stable_connected", "full_space_nonempty", "full_space_connected"] {
                m.cite(f, MILNOR_WOOD_BOUND);
            }
            notes.push("|tau| exceeds min(p,q)(2g-2): the moduli space is empty".into());
        }
        Regime::ToledoZero => {
            m.full_space_nonempty = Yes;
            m.full_space_connected = Yes;
            m.cite("full_space_nonempty", TOLEDO_ZERO_CONNECTEDNESS);
            m.cite("full_space_connected", TOLEDO_ZERO_CONNECTEDNESS);
            m.cite("stable_nonempty", TOLEDO_ZERO_STABLE_OPEN);
            notes.push(
                "tau = 0: nonemptiness of the stable locus is open; if nonempty it is smooth and connected of the expected dimension"
                    .into(),
            );
        }
        Regime::Intermediate => {
            m.stable_nonempty = Yes;
            m.stable_smooth_dim = Some(expected);
            m.closure_of_stable_connected = Yes;
            m.full_space_nonempty = Yes;
            for f in ["stable_nonempty", "stable_smooth_dim", "closure_of_stable_connected", "full_space_nonempty"] {
                m.cite(f, INTERMEDIATE_TOLEDO_STABLE_LOCUS);
            }
            let window = equal && Rational::from_int((h.p() - 1) * h.g().two_g_minus_two()) < abs_tau;
            if coprime {
                m.full_space_connected = Yes;
                m.cite("full_space_connected", COPRIME_CONNECTEDNESS);
            }
            if window {
                m.full_space_connected = Yes;
                m.cite("full_space_connected", EQUAL_RANK_LARGE_TOLEDO);
            }
            if !coprime && !window {
                m.cite("full_space_connected", NON_COPRIME_CONNECTEDNESS_OPEN);
                notes.push("only the closure of the stable locus is known to be connected".into());
            }
        }
        Regime::MaximalEqualRank => {
            m.stable_nonempty = Yes;
            m.stable_smooth_dim = Some(expected);
            m.closure_of_stable_connected = Yes;
            m.full_space_nonempty = Yes;
            m.full_space_connected = Yes;
            for f in [
                "stable_nonempty",
                "stable_smooth_dim",
                "closure_of_stable_connected",
                "full_space_nonempty",
                "full_space_connected",
            ] {
                m.cite(f, EQUAL_RANK_MAXIMAL_TOLEDO);
            }
            m.cite("full_space_connected", EQUAL_RANK_LARGE_TOLEDO);
            if coprime {
                m.cite("full_space_connected", COPRIME_CONNECTEDNESS);
            }
        }
        Regime::MaximalRigid => {
            m.stable_nonempty = No;
            m.closure_of_stable_connected = No;
            m.full_space_nonempty = Yes;
            m.full_space_connected = Yes;
            m.cite("stable_nonempty", MAXIMAL_TOLEDO_RIGIDITY);
            m.cite("closure_of_stable_connected", MAXIMAL_TOLEDO_RIGIDITY);
            m.cite("full_space_nonempty", MAXIMAL_TOLEDO_CONNECTEDNESS);
            m.cite("full_space_connected", MAXIMAL_TOLEDO_CONNECTEDNESS);
            notes.push("every object is strictly semistable and splits; the stable locus is empty".into());
        }
    }

    if coprime && t.within_bound {
        m.full_space_smooth_dim = Some(expected);
        m.cite("full_space_smooth_dim", COPRIME_CONNECTEDNESS);
        m.cite("full_space_nonempty", COPRIME_CONNECTEDNESS);
        m.cite("full_space_connected", COPRIME_CONNECTEDNESS);
    }

    let derive = |keep_smooth: bool, via: &'static str| {
        let mut r = m.clone();
        if !keep_smooth {
            r.stable_smooth_dim = None;
            r.full_space_smooth_dim = None;
            r.citations.remove("stable_smooth_dim");
            r.citations.remove("full_space_smooth_dim");
        }
        let fields: Vec<&'static str> = r.citations.keys().copied().collect();
        for f in fields {
            r.cite(f, HIGGS_REPRESENTATION_HOMEOMORPHISM);
            if via != HIGGS_REPRESENTATION_HOMEOMORPHISM {
                r.cite(f, via);
            }
        }
        r
    };
    let r_gamma = derive(true, HIGGS_REPRESENTATION_HOMEOMORPHISM);
    let r_projective = derive(false, PROJECTIVE_QUOTIENT_FIBRATION);

    let rigid = regime == Regime::MaximalRigid;
    Verdict {
        tau: t.tau,
        tau_m: t.tau_m,
        regime,
        in_range: t.within_bound,
        coprime,
        expected_dim: expected,
        rigid,
        higgs: m,
        rigidity_data: rigid.then(|| rigidity(h)),
        r_gamma,
        r_projective,
        notes,
    }
}
