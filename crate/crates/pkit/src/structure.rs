//! Duality λ ↦ λ♯ and the socles and cosocles of Kac modules.

use serde::Serialize;

use crate::arrows::{build_arrows, solid_targets};
use crate::error::{Error, Result};
use crate::grothendieck::{box_weights, Family, Parity};
use crate::weights::Weight;

/// −w₀λ = (−λₙ, …, −λ₁).
pub fn neg_w0(w: &Weight) -> Weight {
    let coords = w.coords().into_iter().rev().map(|x| -x).collect();
    Weight::new(coords).expect("−w₀ preserves dominance")
}

/// λ†: for pairs (a,b) in lexicographic order, balls a and b (counted from the
/// right) step one position right when both positions ahead are empty.
pub fn dagger(w: &Weight) -> Weight {
    let n = w.n();
    let mut cur = w.clone();
    for a in 0..n {
        for b in a + 1..n {
            let (pa, pb) = (cur.balls()[a], cur.balls()[b]);
            if !cur.has_ball(pa + 1) && !cur.has_ball(pb + 1) {
                cur = cur.move_ball(pa, pa + 1).move_ball(pb, pb + 1);
            }
        }
    }
    cur
}

/// (λ♯, m) with L(λ♯) ≅ Π^m L(λ)*: reflect d_{λ†} at (n−1)/2.
pub fn sharp(w: &Weight) -> (Weight, Parity) {
    let n = w.n() as i64;
    let balls = dagger(w).balls().iter().map(|p| n - 1 - p).collect();
    let s = Weight::from_balls(balls).expect("reflection keeps balls distinct");
    let total = s.size() + w.size();
    assert!(total.rem_euclid(2) == 0, "|λ♯| + |λ| is odd for {w}");
    (s, Parity::from_int(total / 2))
}

/// Highest weight of the dual Kac module: Δ(λ)* = Δ(−w₀λ − (n+1)ω),
/// ∇(λ)* = ∇(−w₀λ + (1−n)ω).
pub fn dual_kac(family: Family, w: &Weight) -> Result<Weight> {
    let n = w.n() as i64;
    let base = neg_w0(w);
    match family {
        Family::Delta => Ok(base.shift(-(n + 1))),
        Family::Nabla => Ok(base.shift(1 - n)),
        other => Err(Error::FamilyMismatch { expected: "Delta or Nabla", found: other.name() }),
    }
}

/// Every ball slides through its longest solid arrow.
pub fn max_solid_slide(w: &Weight) -> Weight {
    let balls = w
        .balls()
        .iter()
        .map(|&i| solid_targets(w, i).last().copied().unwrap_or(i))
        .collect();
    Weight::from_balls(balls).expect("solid target sets are disjoint")
}

/// Every dashed source pulls back the ball at the far end of its arrows.
pub fn max_dashed_slide(w: &Weight) -> Weight {
    let arrows = build_arrows(w);
    let mut balls = w.balls().to_vec();
    for (&j, ts) in &arrows.dashed {
        let far = *ts.last().expect("dashed sets are nonempty");
        let k = balls.iter().position(|&b| b == far).expect("dashed targets are balls");
        balls[k] = j;
    }
    Weight::from_balls(balls).expect("dashed sources are distinct empty positions")
}

fn unique_preimage(w: &Weight, slide: fn(&Weight) -> Weight, what: &str) -> Result<Weight> {
    let lower = w.balls().to_vec();
    let upper: Vec<i64> = lower.iter().map(|b| b + 2 * w.n() as i64).collect();
    let found: Vec<Weight> = box_weights(&lower, &upper).into_iter().filter(|t| slide(t) == *w).collect();
    match found.as_slice() {
        [t] => Ok(t.clone()),
        [] => Err(Error::Contradiction(format!("no {what} for {w} in the search box"))),
        _ => Err(Error::Contradiction(format!("{} candidates for the {what} of {w}", found.len()))),
    }
}

/// τ = sharp(−w₀λ − (n+1)ω) − 2ω.
pub fn cosocle_closed_form(w: &Weight) -> Weight {
    let d = dual_kac(Family::Delta, w).expect("Δ family");
    sharp(&d).0.shift(-2)
}

/// τ with cosocle ∇(λ) ↠ L(τ): the unique τ with max_solid_slide(τ) = λ,
/// checked against the closed form.
pub fn cosocle_nabla(w: &Weight) -> Result<Weight> {
    let tau = unique_preimage(w, max_solid_slide, "cosocle")?;
    let closed = cosocle_closed_form(w);
    if tau != closed {
        return Err(Error::Contradiction(format!(
            "cosocle of ∇({w}): search gives {tau}, closed form gives {closed}"
        )));
    }
    Ok(tau)
}

/// τ′ with socle L(τ′) ↪ Δ(λ): the unique τ′ with max_dashed_slide(τ′) = λ,
/// checked against τ′ = τ + 2ω.
pub fn socle_delta(w: &Weight) -> Result<Weight> {
    let tau2 = unique_preimage(w, max_dashed_slide, "socle")?;
    let expected = cosocle_closed_form(w).shift(2);
    if tau2 != expected {
        return Err(Error::Contradiction(format!(
            "socle of Δ({w}): search gives {tau2}, closed form gives {expected}"
        )));
    }
    Ok(tau2)
}

/// Everything the `dual` and `socle` commands print.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualitySummary {
    pub dagger: Weight,
    pub sharp: Weight,
    pub m: Parity,
    pub delta_dual: Weight,
    pub nabla_dual: Weight,
    pub cosocle_nabla: Weight,
    pub socle_delta: Weight,
}

pub fn duality_summary(w: &Weight) -> Result<DualitySummary> {
    let (s, m) = sharp(w);
    Ok(DualitySummary {
        dagger: dagger(w),
        sharp: s,
        m,
        delta_dual: dual_kac(Family::Delta, w)?,
        nabla_dual: dual_kac(Family::Nabla, w)?,
        cosocle_nabla: cosocle_nabla(w)?,
        socle_delta: socle_delta(w)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(c: &[i64]) -> Weight {
        Weight::new(c.to_vec()).unwrap()
    }

    #[test]
    fn dagger_examples() {
        let l = coords(&[0, 0, 0, -1]);
        assert_eq!(dagger(&l).balls(), &[4, 2, 1, 0]);
        assert_eq!(dagger(&coords(&[10, 8, 4, 3, 1])), coords(&[14, 12, 8, 7, 5]));
        assert_eq!(dagger(&Weight::constant(3, 5)), Weight::constant(3, 5));
    }

    #[test]
    fn sharp_examples() {
        let l = coords(&[0, 0, 0, -1]);
        let (s, m) = sharp(&l);
        assert_eq!(s, l);
        assert_eq!(m, Parity::Odd);
        assert_eq!(sharp(&Weight::constant(3, 4)).0, Weight::constant(3, -4));
        assert_eq!(sharp(&coords(&[10, 8, 4, 3, 1])).0, coords(&[-5, -7, -8, -12, -14]));
        let t = coords(&[5, 2, -1]);
        assert_eq!(sharp(&t).0, neg_w0(&t).shift(-2));
    }

    #[test]
    fn kac_duals() {
        let z = Weight::zero(3);
        assert_eq!(dual_kac(Family::Nabla, &z).unwrap(), Weight::constant(3, -2));
        assert_eq!(dual_kac(Family::Delta, &z).unwrap(), Weight::constant(3, -4));
        let l = coords(&[3, 1, -2]);
        for f in [Family::Delta, Family::Nabla] {
            assert_eq!(dual_kac(f, &dual_kac(f, &l).unwrap()).unwrap(), l);
        }
        assert!(dual_kac(Family::Simple, &l).is_err());
    }

    #[test]
    fn slides() {
        assert_eq!(max_solid_slide(&Weight::constant(3, 2)), Weight::zero(3));
        assert_eq!(max_dashed_slide(&Weight::constant(3, 4)), Weight::zero(3));
        assert_eq!(max_solid_slide(&Weight::rho(3)), Weight::rho(3));
    }

    #[test]
    fn socles() {
        let z = Weight::zero(3);
        assert_eq!(cosocle_nabla(&z).unwrap(), Weight::constant(3, 2));
        assert_eq!(socle_delta(&z).unwrap(), Weight::constant(3, 4));
        let r = Weight::rho(3);
        assert_eq!(cosocle_nabla(&r).unwrap(), r);
        assert_eq!(socle_delta(&r).unwrap(), r.shift(2));
    }

    #[test]
    fn summary_json() {
        let s = duality_summary(&Weight::zero(2)).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["m"], 0);
        assert_eq!(v["sharp"]["coords"], serde_json::json!([0, 0]));
    }
}
