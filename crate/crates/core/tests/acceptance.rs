//! Acceptance suite: one PASS/FAIL line per criterion. Every check compares
//! the library against an oracle written here from first principles.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use upq_core::census::{canonicalize, enumerate_region, omega_membership};
use upq_core::classify::{classify, Regime, TriState};
use upq_core::higgs::{expected_dim, mw_relations, rigidity, toledo};
use upq_core::morse::{morse_index, uk_profile, HodgeChain};
use upq_core::triple::{alpha_range, chi, dim_stable_moduli, dual, thresholds, Upper};
use upq_core::walls::{enumerate_walls, flip_dims, integer_genericity, is_critical, Interval};
use upq_core::{Genus, HiggsType, Rational, SubtripleWitness, TripleType};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}
fn ri(n: i64) -> Rational {
    Rational::from_int(n)
}
fn tt(n1: i64, n2: i64, d1: i64, d2: i64) -> TripleType {
    TripleType::new(n1, n2, d1, d2).unwrap()
}
fn genus(g: i64) -> Genus {
    Genus::new(g).unwrap()
}
fn higgs(p: i64, q: i64, a: i64, b: i64, g: i64) -> HiggsType {
    HiggsType::new(p, q, a, b, genus(g)).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("{what} took {spent:?}, limit {limit:?}"))
}

// ---------------------------------------------------------------- oracles

/// Scans every rank pair and every degree sum in a box wide enough to contain
/// all solutions, solving `mu_alpha(T') = mu_alpha(T)` for alpha directly.
fn brute_walls(
    t: &TripleType,
    lo: &Rational,
    hi: &Rational,
    lo_closed: bool,
    hi_closed: bool,
) -> BTreeMap<Rational, Vec<(i64, i64, i64)>> {
    let (n1, n2, d) = (t.n1(), t.n2(), t.d1() + t.d2());
    let n = n1 + n2;
    let amax = lo.abs().max(hi.abs()).ceil();
    let amax: i64 = amax.try_into().unwrap();
    let bound = amax * n1 * n2 * 2 + n * d.abs() + n + 1;
    let mut out: BTreeMap<Rational, Vec<(i64, i64, i64)>> = BTreeMap::new();
    for a in 0..=n1 {
        for b in 0..=n2 {
            let np = a + b;
            if np == 0 {
                continue;
            }
            // alpha (b/np - n2/n) = d/n - dp/np
            let coeff = r(b, np) - r(n2, n);
            if coeff.is_zero() {
                continue;
            }
            for dp in -bound..=bound {
                let alpha = (r(d, n) - r(dp, np)) / coeff.clone();
                let above = if lo_closed { &alpha >= lo } else { &alpha > lo };
                let below = if hi_closed { &alpha <= hi } else { &alpha < hi };
                if above && below {
                    out.entry(alpha).or_default().push((a, b, dp));
                }
            }
        }
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

fn library_walls(t: &TripleType, iv: &Interval) -> BTreeMap<Rational, Vec<(i64, i64, i64)>> {
    enumerate_walls(t, iv)
        .unwrap()
        .into_iter()
        .map(|w| (w.alpha, w.witnesses.iter().map(|x| (x.n1p, x.n2p, x.dsum)).collect()))
        .collect()
}

/// `chi(T'',T')` assembled from Riemann-Roch for the three Hom bundles of the
/// extension complex: `chi(E1''* E1') + chi(E2''* E2') - chi(E2''* E1')`.
fn chi_oracle(a: &SubtripleWitness, b: &SubtripleWitness, g: i64) -> i64 {
    let rr = |ra: i64, da: i64, rb: i64, db: i64| ra * db - rb * da + ra * rb * (1 - g);
    rr(a.n1p, a.d1p, b.n1p, b.d1p) + rr(a.n2p, a.d2p, b.n2p, b.d2p) - rr(a.n2p, a.d2p, b.n1p, b.d1p)
}

fn alpha_m_of(n1: i64, n2: i64, d1: i64, d2: i64) -> Rational {
    r(d1, n1) - r(d2, n2)
}

fn alpha_big_m_of(n1: i64, n2: i64, d1: i64, d2: i64) -> Option<Rational> {
    (n1 != n2).then(|| (ri(1) + r(n1 + n2, (n1 - n2).abs())) * alpha_m_of(n1, n2, d1, d2))
}

// -------------------------------------------------------------- criteria

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cases = [
        (tt(2, 1, 4, 1), ri(1), ri(4), false, vec![r(5, 2)]),
        (tt(2, 1, 3, 1), r(1, 2), ri(2), false, vec![]),
        (tt(1, 1, 1, 0), ri(1), ri(5), true, vec![ri(3), ri(5)]),
    ];
    for (t, lo, hi, hi_closed, expected) in cases {
        let lib = library_walls(&t, &Interval::new(lo.clone(), hi.clone(), false, hi_closed));
        let oracle = brute_walls(&t, &lo, &hi, false, hi_closed);
        ensure(lib == oracle, || format!("{t}: library {lib:?} vs oracle {oracle:?}"))?;
        let got: Vec<Rational> = lib.keys().cloned().collect();
        ensure(got == expected, || format!("{t}: walls {got:?}, expected {expected:?}"))?;
    }
    let w = library_walls(&tt(2, 1, 4, 1), &Interval::open(ri(1), ri(4)));
    ensure(w[&r(5, 2)] == vec![(0, 1, 0), (2, 0, 5)], || format!("witnesses {:?}", w[&r(5, 2)]))?;
    within(start, Duration::from_secs(1), "wall enumeration")?;
    Ok("walls {5/2}, {}, {3,5} match the brute-force scan".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n1 in 1..7 {
        for n2 in 1..=(7 - n1) {
            for d1 in -10..=10 {
                for d2 in -10..=10 {
                    let t = tt(n1, n2, d1, d2);
                    let range = alpha_range(&t);
                    let hi = match &range.hi {
                        Upper::Finite(h) => h.clone(),
                        Upper::Infinite => {
                            range.lo.clone().max(ri(0)) * (n1 * (n1 - 1)) + range.lo.clone().max(ri(2)) + 1
                        }
                    };
                    if range.lo >= hi {
                        continue;
                    }
                    let iv = Interval::open(range.lo.clone(), hi);
                    let ours: Vec<Rational> = enumerate_walls(&t, &iv).unwrap().into_iter().map(|w| w.alpha).collect();
                    let theirs: Vec<Rational> =
                        enumerate_walls(&dual(&t), &iv).unwrap().into_iter().map(|w| w.alpha).collect();
                    ensure(ours == theirs, || format!("{t}: {ours:?} vs dual {theirs:?}"))?;
                    checked += 1;
                }
            }
        }
    }
    within(start, Duration::from_secs(30), "duality sweep")?;
    Ok(format!("{checked} types with nonempty range, wall sets equal to their duals"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut cases, mut guaranteed) = (0, 0);
    while cases < 10_000 {
        let n1 = rng.gen_range(1..8);
        let n2 = rng.gen_range(1..=(8 - n1));
        let t = tt(n1, n2, rng.gen_range(-12..=12), rng.gen_range(-12..=12));
        let range = alpha_range(&t);
        if range.lo.is_negative() {
            continue;
        }
        let lo: i64 = range.lo.ceil().try_into().unwrap();
        let hi: i64 = match &range.hi {
            Upper::Finite(h) => h.floor().try_into().unwrap(),
            Upper::Infinite => lo + 10,
        };
        if lo > hi {
            continue;
        }
        let m = rng.gen_range(lo..=hi);
        cases += 1;
        // the condition itself, evaluated here
        let cond = (n1 + n2).gcd(&(t.d1() + t.d2() - m * n1)) == 1;
        let lib = integer_genericity(&t, m).guaranteed_noncritical;
        ensure(cond == lib, || format!("{t}, m={m}: genericity flag {lib}, expected {cond}"))?;
        if cond {
            guaranteed += 1;
            let c = is_critical(&t, &ri(m));
            ensure(!c.critical, || {
                format!("{t}: m={m} satisfies the GCD condition but is critical via {:?}", c.witnesses)
            })?;
        }
    }
    Ok(format!("{cases} random cases, {guaranteed} with the GCD condition, 0 violations"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10_000 {
        let t = tt(rng.gen_range(1..8), rng.gen_range(1..8), rng.gen_range(-30..30), rng.gen_range(-30..30));
        let g = rng.gen_range(2..7);
        let w = t.as_witness();
        let dim = dim_stable_moduli(&t, genus(g));
        ensure(dim == 1 - chi_oracle(&w, &w, g), || format!("{t}: dim {dim} vs 1 - chi(T,T)"))?;
        ensure(chi(&w, &w, genus(g)) == chi_oracle(&w, &w, g), || format!("{t}: chi(T,T) disagrees with the oracle"))?;
        let sub = SubtripleWitness {
            n1p: rng.gen_range(0..=t.n1()),
            n2p: rng.gen_range(0..=t.n2()),
            d1p: rng.gen_range(-40..40),
            d2p: rng.gen_range(-40..40),
        };
        let quo = t.quotient_by(&sub);
        let lhs = chi_oracle(&w, &w, g);
        let rhs = chi_oracle(&sub, &sub, g)
            + chi_oracle(&quo, &quo, g)
            + chi_oracle(&quo, &sub, g)
            + chi_oracle(&sub, &quo, g);
        ensure(lhs == rhs, || format!("{t} = {sub} + {quo}: chi additivity {lhs} vs {rhs}"))?;
        let gg = genus(g);
        ensure(chi(&quo, &sub, gg) == chi_oracle(&quo, &sub, g), || format!("chi({quo},{sub}) disagrees"))?;
    }

    let (mut splits, mut symmetric) = (0, 0);
    let types = [(tt(2, 1, 4, 1), None), (tt(2, 1, 3, 1), None), (tt(1, 1, 1, 0), Some(ri(5)))];
    for (t, cutoff) in types {
        let range = alpha_range(&t);
        let hi = cutoff.unwrap_or_else(|| range.hi.finite().unwrap().clone());
        for wall in enumerate_walls(&t, &Interval::open(range.lo.clone(), hi)).unwrap() {
            for w in &wall.witnesses {
                for d1p in -20..=20 {
                    let sub = SubtripleWitness { n1p: w.n1p, n2p: w.n2p, d1p, d2p: w.dsum - d1p };
                    for g in 2..5 {
                        let f = flip_dims(&t, &sub, genus(g)).map_err(|e| format!("{t}, {sub}: {e}"))?;
                        let quo = t.quotient_by(&sub);
                        let stilde =
                            1 - chi_oracle(&sub, &sub, g) - chi_oracle(&quo, &quo, g) - chi_oracle(&quo, &sub, g);
                        let cross = -chi_oracle(&sub, &quo, g);
                        let dim = 1 - chi_oracle(&t.as_witness(), &t.as_witness(), g);
                        ensure(f.stilde_dim == stilde, || format!("{t}, {sub}: stilde {} vs {stilde}", f.stilde_dim))?;
                        ensure(dim == stilde + cross, || format!("{t}, {sub}, g={g}: {dim} != {stilde} + {cross}"))?;
                        ensure(f.moduli_dim == dim && f.codim_cross == cross, || {
                            format!("{t}, {sub}: flip record disagrees")
                        })?;
                        splits += 1;
                        if f.symmetric_identity_holds {
                            symmetric += 1;
                        }
                    }
                }
            }
        }
    }
    println!("    info: dim = S~dim - chi(T'',T') holds on {symmetric}/{splits} splits; the leftover cross term is -chi(T',T'')");
    Ok(format!("1-chi(T,T) and additivity on 10^4 random cases; dim = S~dim + (-chi(T',T'')) on all {splits} splits"))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut n = 0;
    while n < 5_000 {
        let t = tt(rng.gen_range(1..9), rng.gen_range(1..9), rng.gen_range(-25..25), rng.gen_range(-25..25));
        if t.mu1() < t.mu2() {
            continue;
        }
        n += 1;
        let th = thresholds(&t).map_err(|e| format!("{t}: {e}"))?;
        let w = th.working_type;
        let (n1, n2) = (w.n1(), w.n2());
        let gap = alpha_m_of(n1, n2, w.d1(), w.d2());
        ensure(th.alpha_m == gap, || format!("{t}: alpha_m"))?;
        // alpha_j recomputed here
        for (j, aj) in th.alpha_j.iter().enumerate() {
            let j = j as i64;
            let expect = gap.clone() * ri(2 * n1 * n2) / ri(n2 * (n1 - n2) + (j + 1) * (n1 + n2));
            ensure(*aj == expect, || format!("{t}: alpha_{j} = {aj}, expected {expect}"))?;
        }
        ensure(th.alpha_0 >= th.alpha_m, || format!("{t}: alpha_0 < alpha_m"))?;
        let eq = th.alpha_0 == th.alpha_m;
        ensure(eq == (n2 == 1 || gap.is_zero()), || format!("{t}: alpha_0 = alpha_m is {eq} with n2 = {n2}"))?;
        if gap.is_positive() {
            ensure(th.alpha_j.windows(2).all(|p| p[0] > p[1]), || format!("{t}: alpha_j not strictly decreasing"))?;
        }
        if n1 > n2 {
            let am = alpha_big_m_of(n1, n2, w.d1(), w.d2()).unwrap();
            let at = th.alpha_t.clone().ok_or_else(|| format!("{t}: alpha_t missing"))?;
            ensure(at == am.clone() - r(n1 + n2, n2 * (n1 - n2)), || format!("{t}: alpha_t"))?;
            ensure(at < am, || format!("{t}: alpha_t >= alpha_M"))?;
        }
    }
    Ok(format!("{n} random types with mu1 >= mu2"))
}

fn criterion_6() -> Outcome {
    let mut n = 0;
    for p in 1..6 {
        for q in 1..=(6 - p) {
            for a in -10..=10 {
                for b in -10..=10 {
                    for g in [2, 3] {
                        let h = higgs(p, q, a, b, g);
                        let two_g = ri(2 * g - 2);
                        let tau = r(2 * (q * a - p * b), p + q);
                        let tau_m = ri(p.min(q) * (2 * g - 2));
                        // minima triple, recomputed here
                        let (n1, n2, d1, d2) = if q * a - p * b > 0 {
                            (q, p, b + q * (2 * g - 2), a)
                        } else {
                            (p, q, a + p * (2 * g - 2), b)
                        };
                        let am = alpha_m_of(n1, n2, d1, d2);
                        ensure(two_g >= am, || format!("{h}: 2g-2 < alpha_m = {am}"))?;
                        ensure((two_g == am) == tau.is_zero(), || format!("{h}: equality case fails"))?;
                        if p != q {
                            let big = alpha_big_m_of(n1, n2, d1, d2).unwrap();
                            let within = tau.abs() <= tau_m;
                            ensure(within == (two_g <= big), || {
                                format!("{h}: |tau|<=tau_M is {within}, alpha_M = {big}")
                            })?;
                            ensure((tau.abs() == tau_m) == (two_g == big), || format!("{h}: saturation case fails"))?;
                        }
                        let lib = mw_relations(&h);
                        ensure(lib.all_hold(), || format!("{h}: library facts {:?}", lib.facts))?;
                        ensure(lib.alpha_m == am && lib.tau == tau, || format!("{h}: library alpha_m/tau differ"))?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{n} Higgs types, relations hold and match the library"))
}

fn oracle_member(p: i64, q: i64, g: i64, a: i64, b: i64) -> bool {
    // literal L-shape with excluded upper-right rays, then the strip
    let l_shape =
        ((0 <= a && a <= p && b <= q) || (0 <= b && b <= q && a <= p)) && !(a == p && b <= q) && !(b == q && a <= p);
    l_shape && (a * q - b * p).abs() <= (p + q) * p.min(q) * (g - 1)
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut combos = 0;
    for p in 1..8 {
        for q in 1..=(8 - p) {
            for g in 2..=4 {
                let gg = genus(g);
                let k = p.gcd(&q);
                let formula = 2 * (p + q) * p.min(q) * (g - 1) + k;
                let w = (p + q) * p.min(q) * (g - 1) + p + q;
                let mut brute = vec![];
                for a in -w..=p {
                    for b in -w..=q {
                        let ours = oracle_member(p, q, g, a, b);
                        ensure(ours == omega_membership(p, q, gg, a, b), || {
                            format!("({p},{q},{g}): membership differs at ({a},{b})")
                        })?;
                        if ours {
                            brute.push((a, b));
                        }
                    }
                }
                ensure(brute.len() as i64 == formula, || {
                    format!("({p},{q},{g}): |Omega_Z| = {}, formula {formula}", brute.len())
                })?;
                let rep = enumerate_region(p, q, gg).map_err(|e| e.to_string())?;
                let mut listed: Vec<(i64, i64)> = rep.points.iter().map(|c| (c.a, c.b)).collect();
                listed.sort();
                ensure(listed == brute, || format!("({p},{q},{g}): enumeration differs from scan"))?;
                for (t, line) in &rep.lines {
                    ensure(line.len() as i64 == k, || format!("({p},{q},{g}): line {t} has {} points", line.len()))?;
                    ensure(line.iter().all(|c| c.a * q - c.b * p == t * k), || format!("line {t} mislabeled"))?;
                }
                for &(a, b) in &brute {
                    let c = canonicalize(p, q, gg, a, b).map_err(|e| e.to_string())?;
                    ensure((c.a, c.b) == (a, b), || format!("({p},{q},{g}): ({a},{b}) not fixed"))?;
                }
                for _ in 0..200 {
                    let (a, b) = (rng.gen_range(-60..60), rng.gen_range(-60..60));
                    let inside = (a * q - b * p).abs() <= (p + q) * p.min(q) * (g - 1);
                    match canonicalize(p, q, gg, a, b) {
                        Ok(c) => {
                            ensure(inside, || format!("canonicalized an out-of-bound class ({a},{b})"))?;
                            ensure(brute.contains(&(c.a, c.b)), || {
                                format!("({a},{b}) -> ({},{}) outside region", c.a, c.b)
                            })?;
                            ensure((c.a - a) * q == (c.b - b) * p && (c.a - a) % p == 0, || {
                                format!("({a},{b}) left its orbit")
                            })?;
                            let l = rng.gen_range(-9..9);
                            let again = canonicalize(p, q, gg, a + l * p, b + l * q).map_err(|e| e.to_string())?;
                            ensure(again == c, || format!("({a},{b}) orbit shift {l} changed the representative"))?;
                        }
                        Err(_) => ensure(!inside, || format!("rejected in-bound class ({a},{b})"))?,
                    }
                }
                combos += 1;
            }
        }
    }
    let anchors = [((1, 1, 2), 5), ((2, 2, 2), 18), ((2, 4, 2), 26)];
    for ((p, q, g), want) in anchors {
        let got = enumerate_region(p, q, genus(g)).unwrap().count;
        ensure(got == want, || format!("({p},{q},{g}) -> {got}, expected {want}"))?;
    }
    within(start, Duration::from_secs(10), "census sweep")?;
    Ok(format!("{combos} (p,q,g) combinations; anchors 5, 18, 26"))
}

fn criterion_8() -> Outcome {
    let rig = rigidity(&higgs(1, 2, 2, 1, 2));
    ensure(rig.applies && rig.dim_sum == Some(7), || format!("(1,2,2,1,2): {rig:?}"))?;
    ensure(expected_dim(&higgs(1, 2, 2, 1, 2)) == 10 && rig.below_expected == Some(true), || "not below 10".into())?;
    ensure(!rig.warnings.is_empty(), || "printed closed form not flagged".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut flagged = 0;
    for _ in 0..1000 {
        let p = rng.gen_range(1..12);
        let q = rng.gen_range(p + 1..14);
        let g = rng.gen_range(2..9);
        let l = rng.gen_range(-5..5);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        // tau = sign * p(2g-2) at (a,b) = sign * (p(g-1), -p(g-1)), shifted along the orbit
        let h = higgs(p, q, sign * p * (g - 1) + l * p, -sign * p * (g - 1) + l * q, g);
        ensure(toledo(&h).saturated, || format!("{h} not saturated"))?;
        let rig = rigidity(&h);
        let sum = 1 + (2 * p) * (2 * p) * (g - 1) + 1 + (q - p) * (q - p) * (g - 1);
        let closed = 2 + (5 * p * p + q * q - 2 * p * q) * (g - 1);
        ensure(sum == closed, || format!("{h}: component sum {sum} vs closed form {closed}"))?;
        ensure(rig.dim_sum == Some(sum) && rig.closed_form == Some(closed), || format!("{h}: library {rig:?}"))?;
        ensure(rig.below_expected == Some(true), || format!("{h}: not below expected"))?;
        if !rig.warnings.is_empty() {
            flagged += 1;
        }
    }
    Ok(format!("(1,2,2,1,2) gives 7 < 10; closed form matches on 1000 cases; printed form flagged on {flagged}"))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let c = HodgeChain::new(vec![1, 1, 1], vec![2, 1, 0]).unwrap();
    let idx = morse_index(&c, genus(2)).index;
    ensure(idx == 3, || format!("(1,1,1)/(2,1,0) index {idx}"))?;
    for _ in 0..2000 {
        let m = rng.gen_range(1..8);
        let ranks: Vec<i64> = (0..m).map(|_| rng.gen_range(1..6)).collect();
        let degs: Vec<i64> = (0..m).map(|_| rng.gen_range(-15..15)).collect();
        let g = rng.gen_range(2..6);
        let c = HodgeChain::new(ranks.clone(), degs.clone()).unwrap();
        let mut total_deg = 0i128;
        for k in -(m as i64)..=(m as i64) {
            // U_k = sum over i - j = k of Hom(F_j, F_i)
            let (mut rk, mut dg) = (0i128, 0i128);
            for i in 0..m {
                for j in 0..m {
                    if i as i64 - j as i64 == k {
                        rk += (ranks[j] * ranks[i]) as i128;
                        dg += (ranks[j] * degs[i] - ranks[i] * degs[j]) as i128;
                    }
                }
            }
            let u = uk_profile(&c, k);
            ensure((u.rank, u.degree) == (rk, dg), || format!("U_{k} of {ranks:?}/{degs:?}"))?;
            let v = uk_profile(&c, -k);
            ensure(v.rank == u.rank && v.degree == -u.degree, || format!("U_k symmetry fails at k={k}"))?;
            total_deg += dg;
        }
        ensure(total_deg == 0, || format!("sum of deg U_k = {total_deg}"))?;
        let two = HodgeChain::new(ranks[..m.min(2)].to_vec(), degs[..m.min(2)].to_vec()).unwrap();
        ensure(morse_index(&two, genus(g)).index == 0, || format!("short chain {two:?} has nonzero index"))?;
    }
    Ok("index 3 anchor; U_k profile, symmetry and degree sum on 2000 random chains; short chains index 0".into())
}

fn criterion_10() -> Outcome {
    let mut coprime_cases = 0;
    for p in 1..6 {
        for q in 1..=(6 - p) {
            for a in -10..=10 {
                for b in -10..=10 {
                    for g in [2, 3] {
                        let h = higgs(p, q, a, b, g);
                        let v = classify(&h);
                        let coprime = (p + q).gcd(&(a + b)) == 1;
                        if coprime && v.in_range {
                            coprime_cases += 1;
                            for s in [&v.higgs, &v.r_gamma, &v.r_projective] {
                                ensure(!s.has_unknown(), || format!("{h}: unknown field in a coprime verdict"))?;
                            }
                        }
                        for l in [-3, -1, 2] {
                            let mut w = classify(&h.shifted(l).unwrap());
                            let mut v0 = v.clone();
                            for x in [&mut w, &mut v0] {
                                if let Some(rd) = x.rigidity_data.as_mut() {
                                    rd.factor1 = None;
                                    rd.factor2 = None;
                                }
                            }
                            ensure(w == v0, || format!("{h}: verdict changes under the orbit shift {l}"))?;
                        }
                    }
                }
            }
        }
    }
    let v = classify(&higgs(1, 2, 2, 1, 2));
    ensure(v.rigid && v.regime == Regime::MaximalRigid, || "(1,2,2,1,2) not rigid".into())?;
    ensure(v.higgs.stable_nonempty == TriState::No, || "(1,2,2,1,2) stable locus not empty".into())?;
    let v = classify(&higgs(2, 3, 1, 1, 2));
    ensure(v.higgs.stable_smooth_dim == Some(26), || format!("(2,3,1,1,2) dim {:?}", v.higgs.stable_smooth_dim))?;
    Ok(format!("{coprime_cases} coprime in-range instances fully determined; orbit invariance; anchors"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("wall enumeration", criterion_1),
        ("duality", criterion_2),
        ("GCD genericity", criterion_3),
        ("dimension coherence", criterion_4),
        ("threshold laws", criterion_5),
        ("Higgs bridge", criterion_6),
        ("census", criterion_7),
        ("rigidity", criterion_8),
        ("Morse", criterion_9),
        ("classifier", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{:?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
