//! Arrow diagrams and the move sets ▲(λ), ▼(λ).
//!
//! Solid arrows start at a ball i and end at empty positions j < i with
//! r⁺(i,j) = 0; dashed arrows start at an empty position j and end at balls
//! i > j with r⁻(i,j) = 0. In both cases the partial sums strictly between
//! the endpoints must stay nonnegative.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use itertools::Itertools;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weights::{column_width, render_row, Weight, Window};

/// g_λ(i) = +1 on balls, −1 elsewhere.
pub fn g(w: &Weight, i: i64) -> i64 {
    if w.has_ball(i) {
        1
    } else {
        -1
    }
}

/// r⁺(i,j) = Σ_{s=j}^{i−1} g(s).
pub fn r_plus(w: &Weight, i: i64, j: i64) -> Result<i64> {
    if j >= i {
        return Err(Error::BadRange { i, j });
    }
    Ok((j..i).map(|s| g(w, s)).sum())
}

/// r⁻(i,j) = −Σ_{s=j+1}^{i} g(s).
pub fn r_minus(w: &Weight, i: i64, j: i64) -> Result<i64> {
    if j >= i {
        return Err(Error::BadRange { i, j });
    }
    Ok(-(j + 1..=i).map(|s| g(w, s)).sum::<i64>())
}

/// ▲^{←i}(λ) in decreasing order; empty unless i is a ball.
pub fn solid_targets(w: &Weight, i: i64) -> Vec<i64> {
    let mut out = Vec::new();
    if !w.has_ball(i) {
        return out;
    }
    let mut sum = 0;
    let mut j = i - 1;
    loop {
        sum += g(w, j);
        if sum < 0 {
            break;
        }
        if sum == 0 {
            out.push(j);
        }
        j -= 1;
    }
    debug_assert!(out.iter().all(|&j| i - j <= 2 * w.n() as i64));
    out
}

/// ▼_{j⇢}(λ) in increasing order; empty unless j is empty.
pub fn dashed_targets(w: &Weight, j: i64) -> Vec<i64> {
    let mut out = Vec::new();
    if w.has_ball(j) {
        return out;
    }
    let mut sum = 0;
    for i in j + 1..=w.max_ball() {
        sum -= g(w, i);
        if sum < 0 {
            break;
        }
        if sum == 0 {
            out.push(i);
        }
    }
    debug_assert!(out.iter().all(|&i| i - j <= 2 * w.n() as i64));
    out
}

/// The arrow diagram of λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDiagram {
    pub base: Weight,
    /// Ball position ↦ ▲^{←i}(λ), for every ball (possibly empty).
    pub solid: BTreeMap<i64, Vec<i64>>,
    /// Empty position ↦ ▼_{j⇢}(λ), only for nonempty target sets.
    pub dashed: BTreeMap<i64, Vec<i64>>,
}

pub fn build_arrows(w: &Weight) -> ArrowDiagram {
    let solid = w.balls().iter().map(|&i| (i, solid_targets(w, i))).collect();
    let reach = 2 * w.n() as i64;
    let dashed = (w.min_ball() - reach..w.max_ball())
        .filter_map(|j| {
            let t = dashed_targets(w, j);
            (!t.is_empty()).then_some((j, t))
        })
        .collect();
    ArrowDiagram { base: w.clone(), solid, dashed }
}

impl ArrowDiagram {
    /// [`member_up`] against this diagram's base weight.
    pub fn member_up(&self, mu: &Weight) -> bool {
        self.solid.iter().all(|(&i, ts)| {
            let hits = mu.has_ball(i) as usize + ts.iter().filter(|&&j| mu.has_ball(j)).count();
            hits == 1
        })
    }

    /// [`member_down`] against this diagram's base weight.
    pub fn member_down(&self, mu: &Weight) -> bool {
        if mu.balls().iter().any(|&b| !self.base.has_ball(b) && !self.dashed.contains_key(&b)) {
            return false;
        }
        self.dashed.iter().all(|(&j, ts)| {
            let holes = (!mu.has_ball(j)) as usize + ts.iter().filter(|&&i| !mu.has_ball(i)).count();
            holes == 1
        })
    }

    /// Solid arrows as (source ball, target) pairs.
    pub fn solid_arrows(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.solid.iter().flat_map(|(&i, ts)| ts.iter().map(move |&j| (i, j)))
    }

    /// Dashed arrows as (source empty position, target ball) pairs.
    pub fn dashed_arrows(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.dashed.iter().flat_map(|(&j, ts)| ts.iter().map(move |&i| (j, i)))
    }

    /// The diagram row followed by one line per arrow, drawn below it.
    pub fn render_ascii(&self, window: &Window) -> String {
        let mut out = render_row(window, |i| self.base.has_ball(i));
        if window.is_empty() {
            return out;
        }
        let w = column_width(window);
        let col = |p: i64| (p - window.lo) as usize * (w + 1) + w - 1;
        let mut draw = |a: i64, b: i64, fill: char, note: String| {
            if !window.contains(a) || !window.contains(b) {
                return;
            }
            let (l, r) = (a.min(b), a.max(b));
            let mut line = " ".repeat(col(l));
            line.push('└');
            line.extend(std::iter::repeat_n(fill, col(r) - col(l) - 1));
            line.push('┘');
            let _ = writeln!(out, "{line}  {note}");
        };
        for (i, j) in self.solid_arrows().sorted_by_key(|&(i, j)| (j, i)) {
            draw(j, i, '─', format!("solid {i} → {j}"));
        }
        for (j, i) in self.dashed_arrows() {
            draw(j, i, '╌', format!("dashed {j} ⇢ {i}"));
        }
        out
    }
}

impl Serialize for ArrowDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut top = s.serialize_map(Some(2))?;
        let solid: BTreeMap<String, &Vec<i64>> = self
            .solid
            .iter()
            .filter(|(_, t)| !t.is_empty())
            .map(|(i, t)| (i.to_string(), t))
            .collect();
        let dashed: BTreeMap<String, &Vec<i64>> =
            self.dashed.iter().map(|(j, t)| (j.to_string(), t)).collect();
        top.serialize_entry("solid", &solid)?;
        top.serialize_entry("dashed", &dashed)?;
        top.end()
    }
}

/// ▲(λ): every ball independently rests in place or slides along one of its solid arrows.
pub fn up_set(w: &Weight) -> Vec<Weight> {
    let choices = w.balls().iter().map(|&i| {
        let mut c = vec![i];
        c.extend(solid_targets(w, i));
        c
    });
    choices
        .multi_cartesian_product()
        .map(|b| Weight::from_balls(b).expect("solid targets are distinct empty positions"))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// ▼(λ): every dashed source either stays empty or pulls back one ball from its target set.
pub fn down_set(w: &Weight) -> Vec<Weight> {
    let arrows = build_arrows(w);
    let mut out = BTreeSet::new();
    let options: Vec<Vec<Option<(i64, i64)>>> = arrows
        .dashed
        .iter()
        .map(|(&j, ts)| std::iter::once(None).chain(ts.iter().map(|&i| Some((i, j)))).collect())
        .collect();
    if options.is_empty() {
        out.insert(w.clone());
    }
    for pick in options.into_iter().multi_cartesian_product() {
        let mut balls: Vec<i64> = w.balls().to_vec();
        for (from, to) in pick.into_iter().flatten() {
            let k = balls.iter().position(|&b| b == from).expect("dashed targets are balls");
            balls[k] = to;
        }
        out.insert(Weight::from_balls(balls).expect("dashed sources are distinct empty positions"));
    }
    out.into_iter().collect()
}

/// μ ∈ ▲(λ) by the defining equation f_μ(i) + Σ_{j∈▲^{←i}} f_μ(j) = 1 for every ball i.
pub fn member_up(w: &Weight, mu: &Weight) -> Result<bool> {
    w.check_rank(mu)?;
    Ok(build_arrows(w).member_up(mu))
}

/// μ ∈ ▼(λ) by the defining equation
/// (1 − f_μ(j)) + Σ_{i∈▼_{j⇢}} (1 − f_μ(i)) = 1 for every empty j.
pub fn member_down(w: &Weight, mu: &Weight) -> Result<bool> {
    w.check_rank(mu)?;
    Ok(build_arrows(w).member_down(mu))
}

/// Arm and leg sequences of the Young diagram of μ (nonnegative coordinates),
/// arm_i = μ_i − i + 1 and leg_i = μ^∨_i − i + 1 while positive.
pub fn arm_leg(w: &Weight) -> Result<(Vec<i64>, Vec<i64>)> {
    let mu = w.coords();
    if mu.iter().any(|&x| x < 0) {
        return Err(Error::NegativeCoordinate(mu));
    }
    let conj = |i: i64| mu.iter().filter(|&&x| x >= i).count() as i64;
    let arms = (1..)
        .map(|i: i64| mu.get(i as usize - 1).copied().unwrap_or(0) - i + 1)
        .take_while(|&a| a > 0)
        .collect();
    let legs = (1..).map(|i: i64| conj(i) - i + 1).take_while(|&l| l > 0).collect();
    Ok((arms, legs))
}

/// arm_i + 1 = leg_i wherever both are defined. For μ = −w₀λ this holds
/// exactly when λ ∈ ▲(0).
pub fn satisfies_arm_leg(w: &Weight) -> Result<bool> {
    let (arms, legs) = arm_leg(w)?;
    Ok(arms.len() == legs.len() && arms.iter().zip(&legs).all(|(a, l)| a + 1 == *l))
}

/// The pairwise condition μᵢ + n − i + μⱼ − n + j ≠ 0 for all i ≠ j (1-based),
/// taken literally. It is weaker than [`satisfies_arm_leg`]: μ = (2,0) passes it.
pub fn arm_leg_predicate(w: &Weight) -> bool {
    let mu = w.coords();
    let n = mu.len() as i64;
    (0..mu.len()).all(|a| {
        (0..mu.len()).all(|b| {
            let (i, j) = (a as i64 + 1, b as i64 + 1);
            a == b || mu[a] + n - i + mu[b] - n + j != 0
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn balls(b: &[i64]) -> Weight {
        Weight::from_balls(b.to_vec()).unwrap()
    }

    #[test]
    fn g_values() {
        let z = Weight::zero(2);
        assert_eq!(g(&z, 0), 1);
        assert_eq!(g(&z, 2), -1);
    }

    #[test]
    fn partial_sums() {
        let l = balls(&[4, 3, 1, 0]);
        assert_eq!(r_minus(&l, 1, -3).unwrap(), 0);
        assert_eq!(r_plus(&l, 4, 2).unwrap(), 0);
        for i in -3..6 {
            assert_eq!(r_plus(&l, i, i - 1).unwrap(), g(&l, i - 1));
        }
        assert!(r_plus(&l, 2, 2).is_err());
        assert!(r_minus(&l, 2, 5).is_err());
    }

    #[test]
    fn worked_arrow_example() {
        let a = build_arrows(&Weight::new(vec![1, 1, 0, 0]).unwrap());
        assert_eq!(a.solid[&4], vec![2, -2]);
        assert!(a.solid[&0].is_empty());
        assert_eq!(a.dashed[&-3], vec![1, 3]);
    }

    #[test]
    fn move_sets_small() {
        let z2 = Weight::zero(2);
        assert_eq!(up_set(&z2), vec![balls(&[0, -1]), balls(&[1, 0])]);
        let down: BTreeSet<Weight> = down_set(&z2).into_iter().collect();
        let expect: BTreeSet<Weight> =
            [[1, 0], [1, -2], [0, -3], [-2, -3]].iter().map(|b| balls(b)).collect();
        assert_eq!(down, expect);
        let up3: BTreeSet<Weight> = up_set(&Weight::zero(3)).into_iter().collect();
        let expect3: BTreeSet<Weight> = [[2, 1, 0], [0, -1, -2], [2, 0, -1], [1, 0, -2]]
            .iter()
            .map(|b| balls(b))
            .collect();
        assert_eq!(up3, expect3);
        assert_eq!(down_set(&Weight::zero(1)), vec![balls(&[-2]), balls(&[0])]);
        assert_eq!(up_set(&Weight::rho(3)), vec![Weight::rho(3)]);
    }

    #[test]
    fn membership() {
        let z2 = Weight::zero(2);
        assert!(member_up(&z2, &z2).unwrap());
        assert!(member_up(&z2, &Weight::constant(2, -1)).unwrap());
        assert!(!member_down(&z2, &Weight::constant(2, 1)).unwrap());
        assert!(member_up(&z2, &Weight::zero(3)).is_err());
    }

    #[test]
    fn arms_and_legs() {
        assert_eq!(arm_leg(&Weight::zero(2)).unwrap(), (vec![], vec![]));
        let m = Weight::new(vec![1, 1]).unwrap();
        assert_eq!(arm_leg(&m).unwrap(), (vec![1], vec![2]));
        assert!(satisfies_arm_leg(&m).unwrap());
        assert!(arm_leg_predicate(&m));
        let m = Weight::new(vec![2, 0]).unwrap();
        assert_eq!(arm_leg(&m).unwrap(), (vec![2], vec![1]));
        assert!(!satisfies_arm_leg(&m).unwrap());
        assert!(arm_leg_predicate(&m));
        assert!(arm_leg(&Weight::new(vec![0, -1]).unwrap()).is_err());
    }

    #[test]
    fn json_shape() {
        let a = build_arrows(&Weight::new(vec![1, 1, 0, 0]).unwrap());
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v["solid"]["4"], serde_json::json!([2, -2]));
        assert_eq!(v["dashed"]["-3"], serde_json::json!([1, 3]));
        assert!(v["solid"].get("0").is_none());
    }
}
