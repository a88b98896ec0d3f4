//! Translation functors θ′_k and θ_k = Π^k θ′_k on every basis, the wedge
//! model Λⁿ(U), and the Temperley–Lieb relations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use crate::arrows::{g, up_set};
use crate::blocks::BlockLabel;
use crate::error::{Error, Result};
use crate::grothendieck::{pairing, Family, GrothendieckVector, Parity};
use crate::verify::Report;
use crate::weights::{Weight, Window};

/// θ′_k[Δ(λ)], read off from d_λ at positions k−2, k−1, k.
pub fn theta_delta(k: i64, w: &Weight, parity: Parity) -> GrothendieckVector {
    let mut v = GrothendieckVector::zero(Family::Delta, w.n());
    if w.has_ball(k - 1) {
        return v;
    }
    if w.has_ball(k - 2) {
        v.add_term(w.move_ball(k - 2, k - 1), parity, 1).expect("same rank");
    }
    if w.has_ball(k) {
        v.add_term(w.move_ball(k, k - 1), parity.flip(), 1).expect("same rank");
    }
    v
}

/// θ′_k[∇(λ)], read off from d_λ at positions k−1, k, k+1.
pub fn theta_nabla(k: i64, w: &Weight, parity: Parity) -> GrothendieckVector {
    let mut v = GrothendieckVector::zero(Family::Nabla, w.n());
    if !w.has_ball(k) {
        return v;
    }
    if !w.has_ball(k + 1) {
        v.add_term(w.move_ball(k, k + 1), parity, 1).expect("same rank");
    }
    if !w.has_ball(k - 1) {
        v.add_term(w.move_ball(k, k - 1), parity.flip(), 1).expect("same rank");
    }
    v
}

/// θ′_k extended linearly to a Δ- or ∇-vector.
pub fn theta_prime(k: i64, v: &GrothendieckVector) -> Result<GrothendieckVector> {
    let basis: fn(i64, &Weight, Parity) -> GrothendieckVector = match v.family() {
        Family::Delta => theta_delta,
        Family::Nabla => theta_nabla,
        other => return Err(Error::FamilyMismatch { expected: "Delta or Nabla", found: other.name() }),
    };
    let mut out = GrothendieckVector::zero(v.family(), v.n());
    for (w, p, c) in v.iter() {
        for (u, q, d) in basis(k, w, p).iter() {
            out.add_term(u.clone(), q, c * d)?;
        }
    }
    Ok(out)
}

/// θ_k = Π^k θ′_k.
pub fn theta(k: i64, v: &GrothendieckVector) -> Result<GrothendieckVector> {
    Ok(theta_prime(k, v)?.parity_shift(k))
}

/// The weight μ with Θ_i P(λ) ≅ P(μ) up to parity, or `None` when Θ_i P(λ) = 0.
pub fn theta_proj(i: i64, w: &Weight) -> Option<Weight> {
    match (w.has_ball(i - 2), w.has_ball(i - 1)) {
        (true, false) => Some(w.move_ball(i - 2, i - 1)),
        (false, true) => None,
        (true, true) => {
            let mut sum = 0;
            let mut j = i - 2;
            loop {
                sum += g(w, j);
                if sum == 0 {
                    return Some(w.move_ball(i - 2, j));
                }
                j -= 1;
            }
        }
        (false, false) => {
            let mut sum = 1;
            for j in i..=w.max_ball() {
                sum -= g(w, j);
                if sum == 0 {
                    return Some(w.move_ball(j, i - 1));
                }
            }
            None
        }
    }
}

/// Θ_i P(λ) with the parity of its top tracked: returns (μ, ε′) with
/// Θ_i Π^ε P(λ) ≅ Π^{ε′} P(μ).
///
/// Inside P(λ) with top parity ε, the subquotient Δ(ζ) has parity ε + q(ζ) + q(λ).
/// The parity of Δ(μ) in θ_i applied to that filtration is the answer.
pub fn theta_proj_tracked(i: i64, w: &Weight, parity: Parity) -> Option<(Weight, Parity)> {
    let mu = theta_proj(i, w)?;
    let mut found: Option<Parity> = None;
    for zeta in up_set(w) {
        let pz = parity + Parity::from_bit(zeta.q_parity()) + Parity::from_bit(w.q_parity());
        let image = theta(i, &GrothendieckVector::basis(Family::Delta, zeta, pz)).expect("Δ family");
        for (u, q, _) in image.iter() {
            if *u == mu {
                assert!(
                    found.is_none_or(|f| f == q),
                    "inconsistent parities for Δ({mu}) in θ_{i} P({w})"
                );
                found = Some(q);
            }
        }
    }
    Some((mu, found.expect("Δ(μ) occurs in θ_i P(λ)")))
}

/// [Θ_i L(λ)] = Σ [L(μ)] over μ with Θ_{i+1} P(μ) ≅ P(λ).
pub fn theta_simple(i: i64, w: &Weight, window: &Window) -> Result<GrothendieckVector> {
    let n = w.n();
    let mut out = GrothendieckVector::zero(Family::Simple, n);
    if w.has_ball(i - 1) || !w.has_ball(i) {
        return Ok(out);
    }
    let reach = 2 * n as i64;
    let (lo, hi) = (w.min_ball().min(i - 1), w.max_ball().max(i - 1 + reach));
    if !window.contains_range(lo, hi) {
        return Err(Error::WindowTooSmall { lo, hi, window: *window });
    }
    let mut candidates = vec![w.move_ball(i, i - 1)];
    candidates.extend(w.balls().iter().filter(|&&j| j < i - 1).map(|&j| w.move_ball(j, i - 1)));
    candidates.extend((i + 1..=i - 1 + reach).filter(|&j| !w.has_ball(j)).map(|j| w.move_ball(i, j)));
    for mu in candidates {
        if theta_proj(i + 1, &mu).as_ref() == Some(w) {
            out.add_term(mu, Parity::Even, 1)?;
        }
    }
    Ok(out)
}

/// An integer combination of wedges u_{c₁} ∧ … ∧ u_{cₙ}, c strictly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WedgeVector {
    pub terms: BTreeMap<Vec<i64>, BigInt>,
}

impl WedgeVector {
    pub fn basis(c: Vec<i64>) -> Self {
        debug_assert!(c.windows(2).all(|p| p[0] > p[1]));
        WedgeVector { terms: BTreeMap::from([(c, BigInt::from(1))]) }
    }

    pub fn add(&mut self, c: Vec<i64>, coeff: BigInt) {
        let slot = self.terms.entry(c.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&c);
        }
    }

    pub fn plus(mut self, other: &WedgeVector) -> WedgeVector {
        for (c, x) in &other.terms {
            self.add(c.clone(), x.clone());
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Φ on Δ-vectors and Φ^∨ on ∇-vectors: [Δ(λ)], [∇(λ)] ↦ u_{c_λ}, parities forgotten.
pub fn wedge_map(v: &GrothendieckVector) -> Result<WedgeVector> {
    if !matches!(v.family(), Family::Delta | Family::Nabla) {
        return Err(Error::FamilyMismatch { expected: "Delta or Nabla", found: v.family().name() });
    }
    let mut out = WedgeVector::default();
    for (w, _, c) in v.iter() {
        out.add(w.balls().to_vec(), c.clone());
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ef {
    /// e_k = E_{k−1,k}: replaces k by k−1.
    E,
    /// f_k = E_{k,k−1}: replaces k−1 by k.
    F,
}

pub fn ef_op(k: i64, which: Ef, v: &WedgeVector) -> WedgeVector {
    let (from, to) = match which {
        Ef::E => (k, k - 1),
        Ef::F => (k - 1, k),
    };
    let mut out = WedgeVector::default();
    for (c, x) in &v.terms {
        if c.contains(&from) && !c.contains(&to) {
            let d = c.iter().map(|&b| if b == from { to } else { b }).collect();
            out.add(d, x.clone());
        }
    }
    out
}

/// e_k + f_{k−1}, the wedge image of θ′_k on Δ.
pub fn wedge_theta_delta(k: i64, v: &WedgeVector) -> WedgeVector {
    ef_op(k, Ef::E, v).plus(&ef_op(k - 1, Ef::F, v))
}

/// e_k + f_{k+1}, the wedge image of θ′_k on ∇.
pub fn wedge_theta_nabla(k: i64, v: &WedgeVector) -> WedgeVector {
    ef_op(k, Ef::E, v).plus(&ef_op(k + 1, Ef::F, v))
}

/// Range of k for which θ′_k can act on weights with balls in the window,
/// padded so that composites stay covered.
pub fn k_range(window: &Window) -> std::ops::RangeInclusive<i64> {
    window.lo - 2..=window.hi + 3
}

trait Basis {
    const NAME: &'static str;
    fn family() -> Family;
    fn apply(k: i64, v: &WedgeVector) -> WedgeVector;
}

struct DeltaBasis;
struct NablaBasis;

impl Basis for DeltaBasis {
    const NAME: &'static str = "delta";
    fn family() -> Family {
        Family::Delta
    }
    fn apply(k: i64, v: &WedgeVector) -> WedgeVector {
        wedge_theta_delta(k, v)
    }
}

impl Basis for NablaBasis {
    const NAME: &'static str = "nabla";
    fn family() -> Family {
        Family::Nabla
    }
    fn apply(k: i64, v: &WedgeVector) -> WedgeVector {
        wedge_theta_nabla(k, v)
    }
}

fn tl_checks<B: Basis>(n: usize, window: &Window, out: &mut Vec<Report>) {
    let ks: Vec<i64> = k_range(window).collect();
    let th = |k: i64, v: &GrothendieckVector| theta_prime(k, v).expect("Kac family").reduced();
    let name = |r: &str| format!("{r}_{}", B::NAME);
    let mut intertwine = Report::new(name("intertwine"));
    let mut square = Report::new(name("square_zero"));
    let mut far = Report::new(name("far_commute"));
    let mut braid = Report::new(name("braid"));
    let mut wsquare = Report::new(name("wedge_square_zero"));
    let mut wfar = Report::new(name("wedge_far_commute"));
    let mut wbraid = Report::new(name("wedge_braid"));
    for w in window.weights(n) {
        let v = GrothendieckVector::basis(B::family(), w.clone(), Parity::Even);
        let u = WedgeVector::basis(w.balls().to_vec());
        let ce = |rel: &str, k: i64, j: Option<i64>| json!({"relation": rel, "weight": &w, "k": k, "j": j});
        for &k in &ks {
            let once = th(k, &v);
            let wonce = B::apply(k, &u);
            intertwine.check(wedge_map(&once).unwrap() == wonce, || ce("intertwine", k, None));
            square.check(th(k, &once).is_zero(), || ce("square_zero", k, None));
            wsquare.check(B::apply(k, &wonce).is_zero(), || ce("wedge_square_zero", k, None));
            for j in [k - 1, k + 1] {
                let lhs = th(k, &th(j, &once));
                braid.check(lhs == once, || ce("braid", k, Some(j)));
                let wl = B::apply(k, &B::apply(j, &wonce));
                wbraid.check(wl == wonce, || ce("wedge_braid", k, Some(j)));
            }
            for &j in ks.iter().filter(|&&j| (j - k).abs() > 1) {
                far.check(th(j, &once) == th(k, &th(j, &v)), || ce("far_commute", k, Some(j)));
                wfar.check(
                    B::apply(j, &wonce) == B::apply(k, &B::apply(j, &u)),
                    || ce("wedge_far_commute", k, Some(j)),
                );
            }
        }
    }
    out.extend([intertwine, square, far, braid, wsquare, wfar, wbraid]);
}

/// ⟨θ′_k a, b⟩ = ⟨a, θ′_{k−1} b⟩ on all basis pairs from the window.
fn adjunction_check(n: usize, window: &Window) -> Report {
    let mut rep = Report::new("adjunction");
    let weights = window.weights(n);
    let delta = |w: &Weight| GrothendieckVector::basis(Family::Delta, w.clone(), Parity::Even);
    let nabla = |w: &Weight| GrothendieckVector::basis(Family::Nabla, w.clone(), Parity::Even);
    for &k in k_range(window).collect::<Vec<_>>().iter() {
        for w in &weights {
            let a = theta_prime(k, &delta(w)).unwrap();
            for mu in a.weights() {
                let lhs = pairing(&a, &nabla(&mu)).unwrap();
                let rhs = pairing(&delta(w), &theta_prime(k - 1, &nabla(&mu)).unwrap()).unwrap();
                rep.check(lhs == rhs, || json!({"k": k, "delta": w, "nabla": &mu}));
            }
            let b = theta_prime(k - 1, &nabla(w)).unwrap();
            for lam in b.weights() {
                let lhs = pairing(&theta_prime(k, &delta(&lam)).unwrap(), &nabla(w)).unwrap();
                let rhs = pairing(&delta(&lam), &b).unwrap();
                rep.check(lhs == rhs, || json!({"k": k, "delta": &lam, "nabla": w}));
            }
        }
    }
    rep
}

/// Checks intertwining, θ′² = 0, far commutation and θ′_kθ′_{k±1}θ′_k = θ′_k on
/// the Δ-basis, the ∇-basis and the wedge model, plus the adjunction shadow.
pub fn verify_tl(n: usize, window: &Window) -> Vec<Report> {
    let mut out = Vec::new();
    tl_checks::<DeltaBasis>(n, window, &mut out);
    tl_checks::<NablaBasis>(n, window, &mut out);
    out.push(adjunction_check(n, window));
    out
}

/// The block containing Θ_i M for M in the given block, as prescribed by the
/// four-case table: p moves by +2 for odd i and −2 for even i, and the sign
/// flips iff (n − p)/2 is odd. `None` means Θ_i vanishes on the block.
pub fn block_action(i: i64, label: BlockLabel, n: usize) -> Result<Option<BlockLabel>> {
    label.validate(n)?;
    let p = label.p;
    let p2 = if i.rem_euclid(2) == 1 { p + 2 } else { p - 2 };
    if p2.abs() > n as i64 {
        return Ok(None);
    }
    let flip = ((n as i64 - p) / 2).rem_euclid(2) == 1;
    let sign = if flip { label.sign.flip() } else { label.sign };
    Ok(Some(BlockLabel { p: p2, sign }))
}
