//! Window-parameterized verification suites.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::json;

use crate::arrows::{build_arrows, down_set, satisfies_arm_leg, up_set};
use crate::blocks::blocks_report;
use crate::error::{Error, Result};
use crate::grothendieck::{
    delta_to_simple, hom_dim, nabla_to_simple, proj_to_delta, proj_to_nabla, Family, GrothendieckVector,
};
use crate::structure::{
    cosocle_closed_form, dagger, dual_kac, max_dashed_slide, max_solid_slide, neg_w0, sharp,
};
use crate::translation::{theta_prime, theta_proj, theta_simple, verify_tl};
use crate::weights::{Weight, Window};

/// Outcome of one family of identity checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub relation: String,
    pub checked: usize,
    pub failures: Vec<serde_json::Value>,
}

impl Report {
    pub fn new(relation: impl Into<String>) -> Self {
        Report { relation: relation.into(), ..Default::default() }
    }

    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> serde_json::Value) {
        self.checked += 1;
        if !ok {
            self.failures.push(counterexample());
        }
    }

    /// Records an `Err` as a failure.
    pub fn check_result<T>(&mut self, r: Result<T>, context: impl FnOnce() -> serde_json::Value) -> Option<T> {
        match r {
            Ok(v) => {
                self.checked += 1;
                Some(v)
            }
            Err(e) => {
                self.check(false, || json!({"context": context(), "error": e.to_string()}));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Arrows,
    Bgg,
    Tl,
    Proj,
    Duality,
    Socle,
    Blocks,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] =
        [Suite::Arrows, Suite::Bgg, Suite::Tl, Suite::Proj, Suite::Duality, Suite::Socle, Suite::Blocks];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Arrows => "arrows",
            Suite::Bgg => "bgg",
            Suite::Tl => "tl",
            Suite::Proj => "proj",
            Suite::Duality => "duality",
            Suite::Socle => "socle",
            Suite::Blocks => "blocks",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Runs one suite (or all of them) over the rank-n weights with balls in the window.
pub fn run_suite(suite: Suite, n: usize, window: &Window) -> Vec<Report> {
    match suite {
        Suite::Arrows => arrows_suite(n, window),
        Suite::Bgg => bgg_suite(n, window),
        Suite::Tl => verify_tl(n, window),
        Suite::Proj => proj_suite(n, window),
        Suite::Duality => duality_suite(n, window),
        Suite::Socle => socle_suite(n, window),
        Suite::Blocks => blocks_report(n, window).checks,
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, n, window)).collect(),
    }
}

fn product_of_counts(sets: impl Iterator<Item = usize>) -> usize {
    sets.map(|k| k + 1).product()
}

/// The given weights together with every weight one ball move away from
/// them, the move staying within 2n + 1 of the base weight's balls.
fn neighbourhood<'a>(w: &Weight, seeds: impl Iterator<Item = &'a Weight>) -> BTreeSet<Weight> {
    let reach = 2 * w.n() as i64 + 1;
    let (lo, hi) = (w.min_ball() - reach, w.max_ball() + reach);
    let mut out = BTreeSet::new();
    for s in seeds {
        out.insert(s.clone());
        for &b in s.balls() {
            for t in (lo..=hi).filter(|&t| !s.has_ball(t)) {
                out.insert(s.move_ball(b, t));
            }
        }
    }
    out
}

pub fn arrows_suite(n: usize, window: &Window) -> Vec<Report> {
    let mut singleton = Report::new("up_down_singleton");
    let mut counts = Report::new("set_cardinality");
    let mut membership = Report::new("membership_matches_enumeration");
    let mut disjoint = Report::new("target_sets_disjoint");
    let mut order = Report::new("sets_above_base");
    let weights = window.weights(n);
    for w in &weights {
        let a = build_arrows(w);
        let up = up_set(w);
        let down = down_set(w);
        let both: Vec<&Weight> = up.iter().filter(|m| down.contains(m)).collect();
        singleton.check(both == [w], || json!({"weight": w, "intersection": both}));
        counts.check(
            up.len() == product_of_counts(a.solid.values().map(Vec::len))
                && down.len() == product_of_counts(a.dashed.values().map(Vec::len)),
            || json!({"weight": w, "up": up.len(), "down": down.len()}),
        );
        let solid: Vec<i64> = a.solid.values().flatten().copied().collect();
        let dashed: Vec<i64> = a.dashed.values().flatten().copied().collect();
        let solid_ok = solid.iter().collect::<BTreeSet<_>>().len() == solid.len();
        let dashed_ok = dashed.iter().copied().collect::<BTreeSet<_>>() == w.balls().iter().copied().collect()
            && dashed.len() == w.n();
        disjoint.check(solid_ok && dashed_ok, || json!({"weight": w}));
        for mu in up.iter().chain(&down) {
            order.check(w.leq(mu).unwrap(), || json!({"weight": w, "member": mu}));
        }
        let up_set: BTreeSet<&Weight> = up.iter().collect();
        let down_set: BTreeSet<&Weight> = down.iter().collect();
        for mu in neighbourhood(w, up.iter().chain(&down)) {
            let ok = a.member_up(&mu) == up_set.contains(&mu) && a.member_down(&mu) == down_set.contains(&mu);
            membership.check(ok, || json!({"weight": w, "mu": mu}));
        }
    }
    let mut reports = vec![singleton, counts, membership, disjoint, order];
    let zero = Weight::zero(n);
    if window.contains_range(-(n as i64), n as i64) {
        let mut p0 = Report::new("p0_structure");
        let up: BTreeSet<Weight> = up_set(&zero).into_iter().collect();
        let n = n as i64;
        let by_rule: BTreeSet<Weight> = Window::new(1 - n, n - 1)
            .weights(n as usize)
            .into_iter()
            .filter(|w| w.has_ball(0) && (1..n).all(|i| w.has_ball(i) != w.has_ball(-i)))
            .collect();
        p0.check(up == by_rule, || json!({"up": up, "rule": by_rule}));
        p0.check(up.len() == 1 << (n - 1), || json!({"size": up.len()}));
        for w in Window::new(-2 * n, 2 * n).weights(n as usize) {
            let mu = neg_w0(&w);
            let arm_leg = mu.coords().iter().all(|&x| x >= 0) && satisfies_arm_leg(&mu).unwrap();
            p0.check(arm_leg == up.contains(&w), || json!({"weight": w}));
        }
        reports.push(p0);
    }
    reports
}

/// Window widened so that every inverse search from a weight of `window` fits.
pub fn search_window(n: usize, window: &Window) -> Window {
    let m = 2 * n as i64 + 2;
    Window::new(window.lo - m, window.hi + m)
}

/// Index from each weight ν to the weights κ of `sources` with ν in `set(κ)`.
fn inverse_index(sources: &[Weight], set: fn(&Weight) -> Vec<Weight>) -> HashMap<Weight, Vec<Weight>> {
    let mut out: HashMap<Weight, Vec<Weight>> = HashMap::new();
    for k in sources {
        for nu in set(k) {
            out.entry(nu).or_default().push(k.clone());
        }
    }
    out
}

/// Checks BGG reciprocity, multiplicity-freeness, hom symmetry and
/// unitriangularity. Pairs are visited only where one side can be nonzero,
/// found through inverse ▲/▼ indexes, so the cost is linear in the window.
pub fn bgg_suite(n: usize, window: &Window) -> Vec<Report> {
    let mut bgg1 = Report::new("bgg_delta");
    let mut bgg2 = Report::new("bgg_nabla");
    let mut mult = Report::new("multiplicity_free");
    let mut hom = Report::new("hom_symmetry");
    let mut tri = Report::new("unitriangular");
    let big = search_window(n, window);
    let bigger = search_window(n, &big);
    let weights = window.weights(n);
    let in_window = |w: &Weight| window.contains_range(w.min_ball(), w.max_ball());
    let mut shifted: Vec<Weight> = weights.iter().map(|w| w.shift(2)).collect();
    shifted.extend(weights.iter().cloned());
    let from_up = inverse_index(&weights, up_set);
    let from_down = inverse_index(&shifted, down_set);
    let none: Vec<Weight> = Vec::new();
    let one = BigInt::one();
    let ds_of: HashMap<&Weight, GrothendieckVector> =
        weights.iter().map(|m| (m, delta_to_simple(m, &big).expect("widened window"))).collect();
    let ns_of: HashMap<&Weight, GrothendieckVector> =
        weights.iter().map(|m| (m, nabla_to_simple(m, &big).expect("widened window"))).collect();
    for lam in &weights {
        let pd = proj_to_delta(lam);
        let pn = proj_to_nabla(lam);
        let (ds, ns) = (&ds_of[lam], &ns_of[lam]);
        tri.check(pd.coeff(lam) == one && pd.weights().iter().all(|x| lam.leq(x).unwrap()), || {
            json!({"proj_to_delta": lam})
        });
        tri.check(
            pn.coeff(&lam.shift(2)) == one && pn.weights().iter().all(|x| lam.leq(&x.shift(-2)).unwrap()),
            || json!({"proj_to_nabla": lam}),
        );
        tri.check(ds.coeff(lam) == one && ds.weights().iter().all(|x| x.leq(lam).unwrap()), || {
            json!({"delta_to_simple": lam})
        });
        tri.check(ns.coeff(lam) == one && ns.weights().iter().all(|x| x.leq(lam).unwrap()), || {
            json!({"nabla_to_simple": lam})
        });

        // (P(λ):Δ(μ)) = [∇(μ):L(λ)], from both sides of the support.
        for mu in pd.weights().into_iter().filter(in_window) {
            let b = ns_of[&mu].coeff(lam);
            bgg1.check(pd.coeff(&mu) == b, || json!({"lambda": lam, "mu": mu}));
        }
        for l2 in ns.weights().into_iter().filter(in_window) {
            let a = proj_to_delta(&l2).coeff(lam);
            bgg1.check(a == ns.coeff(&l2), || json!({"lambda": l2, "mu": lam}));
        }
        // (P(λ):∇(μ+2ω)) = [Δ(μ):L(λ)].
        for mu in pn.weights().into_iter().map(|x| x.shift(-2)).filter(in_window) {
            let b = ds_of[&mu].coeff(lam);
            bgg2.check(pn.coeff(&mu.shift(2)) == b, || json!({"lambda": lam, "mu": mu}));
        }
        for l2 in ds.weights().into_iter().filter(in_window) {
            let a = proj_to_nabla(&l2).coeff(&lam.shift(2));
            bgg2.check(a == ds.coeff(&l2), || json!({"lambda": l2, "mu": lam}));
        }

        // [P(λ):L(μ)] ∈ {0,1} and equals dim Hom(P(μ),P(λ)).
        let mut expanded = GrothendieckVector::zero(Family::Simple, n);
        for zeta in pd.weights() {
            let d = match ds_of.get(&zeta) {
                Some(d) => d.clone(),
                None => delta_to_simple(&zeta, &bigger).expect("widened window"),
            };
            expanded = expanded.checked_add(&d).unwrap();
        }
        mult.check(expanded.iter().all(|(_, _, c)| c.is_one()), || json!({"weight": lam, "expansion": &expanded}));
        let up = up_set(lam);
        let mut targets: BTreeSet<Weight> = expanded.weights().into_iter().filter(in_window).collect();
        targets.extend(up.iter().flat_map(|nu| from_down.get(nu).unwrap_or(&none)).filter(|k| in_window(k)).cloned());
        for mu in &targets {
            let Some(h) = mult.check_result(hom_dim(mu, lam), || json!({"lambda": lam, "mu": mu})) else { continue };
            let c = expanded.coeff(mu);
            mult.check(c == BigInt::from(h), || json!({"lambda": lam, "mu": mu, "coeff": c.to_string(), "hom": h}));
        }

        // dim Hom(P(λ),P(μ)) = dim Hom(P(μ+2ω),P(λ)) ≤ 1.
        let mut partners: BTreeSet<Weight> = BTreeSet::new();
        for nu in down_set(lam) {
            partners.extend(from_up.get(&nu).unwrap_or(&none).iter().cloned());
        }
        for nu in &up {
            partners.extend(from_down.get(nu).unwrap_or(&none).iter().map(|k| k.shift(-2)).filter(in_window));
        }
        for mu in &partners {
            let ctx = || json!({"lambda": lam, "mu": mu});
            let Some(h) = hom.check_result(hom_dim(lam, mu), ctx) else { continue };
            let Some(h2) = hom.check_result(hom_dim(&mu.shift(2), lam), ctx) else { continue };
            hom.check(h == h2 && h <= 1, || json!({"lambda": lam, "mu": mu, "hom": h, "shifted": h2}));
        }
    }
    vec![bgg1, bgg2, mult, hom, tri]
}

/// Range of i for which Θ_i P(λ) can be nonzero.
pub fn proj_range(w: &Weight) -> std::ops::RangeInclusive<i64> {
    w.min_ball() - 2 * w.n() as i64..=w.max_ball() + 2
}

pub fn proj_suite(n: usize, window: &Window) -> Vec<Report> {
    let mut filtration = Report::new("theta_proj_filtration");
    let mut simple01 = Report::new("theta_simple_coefficients");
    let mut disjoint = Report::new("theta_simple_disjoint");
    let big = search_window(n, window);
    let weights = window.weights(n);
    for w in &weights {
        let pd = proj_to_delta(w);
        for i in proj_range(w) {
            let lhs = theta_prime(i, &pd).expect("Δ family").reduced();
            let rhs = theta_proj(i, w).map_or_else(|| GrothendieckVector::zero(Family::Delta, n), |m| proj_to_delta(&m));
            filtration.check(lhs == rhs, || json!({"i": i, "weight": w, "expanded": &lhs, "theta_proj": &rhs}));
        }
    }
    for i in window.lo..=window.hi + 1 {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        for w in &weights {
            let Some(v) = simple01.check_result(theta_simple(i, w, &big), || json!({"i": i, "weight": w})) else {
                continue;
            };
            simple01.check(v.iter().all(|(_, _, c)| c.is_one()), || json!({"i": i, "weight": w, "value": &v}));
            for mu in v.weights() {
                let fresh = seen.insert(mu.clone());
                disjoint.check(fresh, || json!({"i": i, "weight": w, "repeated": mu}));
            }
        }
    }
    vec![filtration, simple01, disjoint]
}

pub fn duality_suite(n: usize, window: &Window) -> Vec<Report> {
    let mut involution = Report::new("sharp_involution");
    let mut typical = Report::new("sharp_typical");
    let mut monotone = Report::new("dagger_rightward");
    let mut kac = Report::new("dual_kac_involution");
    let shift = 1 - n as i64;
    for w in window.weights(n) {
        let (s, _) = sharp(&w);
        let back = sharp(&s).0;
        involution.check(back == w, || json!({"weight": w, "sharp": s, "back": back}));
        if w.is_typical() {
            let expected = neg_w0(&w).shift(shift);
            typical.check(s == expected, || json!({"weight": w, "sharp": s, "expected": expected}));
        }
        let d = dagger(&w);
        monotone.check(d.balls().iter().zip(w.balls()).all(|(a, b)| a >= b), || json!({"weight": w, "dagger": d}));
        for f in [Family::Delta, Family::Nabla] {
            let twice = dual_kac(f, &dual_kac(f, &w).unwrap()).unwrap();
            kac.check(twice == w, || json!({"weight": w, "family": f.name()}));
        }
    }
    vec![involution, typical, monotone, kac]
}

pub fn socle_suite(n: usize, window: &Window) -> Vec<Report> {
    let mut slide = Report::new("slide_shift");
    let mut search = Report::new("cosocle_search");
    let mut shift = Report::new("socle_shift");
    let mut typical = Report::new("typical_cosocle");
    let wide = Window::new(window.lo, window.hi + 2 * n as i64);
    let mut solid: HashMap<Weight, Vec<Weight>> = HashMap::new();
    let mut dashed: HashMap<Weight, Vec<Weight>> = HashMap::new();
    for t in wide.weights(n) {
        solid.entry(max_solid_slide(&t)).or_default().push(t.clone());
        dashed.entry(max_dashed_slide(&t)).or_default().push(t);
    }
    let in_box = |w: &Weight, t: &Weight| {
        let reach = 2 * n as i64;
        t.balls().iter().zip(w.balls()).all(|(x, c)| (*c..=c + reach).contains(x))
    };
    let unique = |index: &HashMap<Weight, Vec<Weight>>, w: &Weight| -> Option<Weight> {
        let found: Vec<&Weight> = index.get(w).into_iter().flatten().filter(|t| in_box(w, t)).collect();
        match found.as_slice() {
            [t] => Some((*t).clone()),
            _ => None,
        }
    };
    for w in window.weights(n) {
        let a = max_dashed_slide(&w.shift(2));
        let b = max_solid_slide(&w);
        slide.check(a == b, || json!({"tau": w, "dashed": a, "solid": b}));
        let closed = cosocle_closed_form(&w);
        let tau = unique(&solid, &w);
        let tau2 = unique(&dashed, &w);
        let ok = tau.as_ref() == Some(&closed) && tau2.as_ref() == Some(&closed.shift(2));
        search.check(ok, || json!({"weight": w, "cosocle": tau, "socle": tau2, "closed_form": closed}));
        let (Some(tau), Some(tau2)) = (tau, tau2) else { continue };
        shift.check(tau2 == tau.shift(2), || json!({"weight": w, "cosocle": tau, "socle": tau2}));
        if w.is_typical() {
            typical.check(tau == w, || json!({"weight": w, "cosocle": tau}));
        }
    }
    vec![slide, search, shift, typical]
}

/// All reports passed.
pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}

/// Failure count across reports.
pub fn failure_count(reports: &[Report]) -> usize {
    reports.iter().map(|r| r.failures.len()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        let win = Window::symmetric(4);
        for suite in [Suite::Arrows, Suite::Bgg, Suite::Proj, Suite::Duality, Suite::Socle] {
            for n in 1..=2 {
                for r in run_suite(suite, n, &win) {
                    assert!(r.passed(), "{suite} n={n}: {r:?}");
                    assert!(r.checked > 0, "{suite} n={n}: {} checked nothing", r.relation);
                }
            }
        }
    }

    #[test]
    fn suite_names() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn failing_report() {
        let mut r = Report::new("x");
        r.check(true, || json!(null));
        r.check(false, || json!({"k": 1}));
        assert_eq!(r.checked, 2);
        assert!(!r.passed());
        assert!(!all_passed(&[r.clone()]));
        assert_eq!(failure_count(&[r]), 1);
    }
}
