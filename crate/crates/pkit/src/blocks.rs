//! Blocks (F_n)^±_p and a slide-connectivity oracle for them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;
use serde_json::json;

use crate::arrows::build_arrows;
use crate::error::{Error, Result};
use crate::grothendieck::Parity;
use crate::translation::{block_action, theta_proj_tracked};
use crate::verify::Report;
use crate::weights::{Weight, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// The block (F_n)^sign_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockLabel {
    pub p: i64,
    pub sign: Sign,
}

impl BlockLabel {
    /// |p| ≤ n and p ≡ n mod 2.
    pub fn validate(&self, n: usize) -> Result<()> {
        let n = n as i64;
        if self.p.abs() <= n && (n - self.p).rem_euclid(2) == 0 {
            Ok(())
        } else {
            Err(Error::BadBlock { p: self.p, n: n as usize })
        }
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.sign.symbol())
    }
}

/// All 2(n+1) block labels.
pub fn all_labels(n: usize) -> Vec<BlockLabel> {
    let n = n as i64;
    (-n..=n)
        .step_by(2)
        .flat_map(|p| [Sign::Plus, Sign::Minus].map(|sign| BlockLabel { p, sign }))
        .collect()
}

/// The block of Π^ε L(λ): p = κ(λ), sign + iff ε = q(λ).
pub fn block_of(w: &Weight, parity: Parity) -> BlockLabel {
    let sign = if parity.bit() == w.q_parity() { Sign::Plus } else { Sign::Minus };
    BlockLabel { p: w.kappa(), sign }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub kappa: i64,
    pub weights: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub components: Vec<Component>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Weights of the window whose balls stay at least 2n from its edges.
pub fn is_interior(w: &Weight, n: usize, window: &Window) -> bool {
    let m = 2 * n as i64;
    window.shrink(m).contains_range(w.min_ball(), w.max_ball())
}

/// Connected components of the window weights under single slides along
/// one solid or dashed arrow, in either direction.
pub fn block_components_oracle(n: usize, window: &Window) -> Partition {
    let weights = window.weights(n);
    let index: HashMap<&Weight, usize> = weights.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut uf = UnionFind::<usize>::new(weights.len());
    for (k, w) in weights.iter().enumerate() {
        let arrows = build_arrows(w);
        let moves = arrows.solid_arrows().chain(arrows.dashed_arrows().map(|(j, i)| (i, j)));
        for (from, to) in moves {
            if let Some(&t) = index.get(&w.move_ball(from, to)) {
                uf.union(k, t);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Weight>> = BTreeMap::new();
    for (k, w) in weights.iter().enumerate() {
        groups.entry(uf.find(k)).or_default().push(w.clone());
    }
    let mut components: Vec<Component> = groups
        .into_values()
        .map(|ws| Component { kappa: ws[0].kappa(), weights: ws })
        .collect();
    components.sort_by(|a, b| (a.kappa, &a.weights[0]).cmp(&(b.kappa, &b.weights[0])));
    Partition { components }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaLevel {
    pub kappa: i64,
    pub size: usize,
    pub components: usize,
    pub interior_components: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlocksReport {
    pub n: usize,
    pub window: String,
    pub kappa_levels: Vec<KappaLevel>,
    pub blocks: usize,
    pub expected_blocks: usize,
    pub checks: Vec<Report>,
}

impl BlocksReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Report::passed)
    }
}

/// Tabulates the oracle partition by κ-level and checks the block action of
/// Θ_i on every projective in the window, both parities.
pub fn blocks_report(n: usize, window: &Window) -> BlocksReport {
    let partition = block_components_oracle(n, window);
    let mut levels: BTreeMap<i64, KappaLevel> = BTreeMap::new();
    let mut kappa_constant = Report::new("kappa_constant");
    for c in &partition.components {
        kappa_constant.check(c.weights.iter().all(|w| w.kappa() == c.kappa), || {
            json!({"kappa": c.kappa, "weights": c.weights})
        });
        let lvl = levels.entry(c.kappa).or_insert(KappaLevel {
            kappa: c.kappa,
            size: 0,
            components: 0,
            interior_components: 0,
        });
        lvl.size += c.weights.len();
        lvl.components += 1;
        if c.weights.iter().any(|w| is_interior(w, n, window)) {
            lvl.interior_components += 1;
        }
    }
    let mut connectivity = Report::new("interior_connectivity");
    for lvl in levels.values() {
        connectivity.check(lvl.interior_components == 1, || {
            json!({"kappa": lvl.kappa, "interior_components": lvl.interior_components})
        });
    }
    let expected = 2 * (n + 1);
    let blocks = 2 * levels.values().filter(|l| l.interior_components > 0).count();
    let mut count = Report::new("block_count");
    count.check(blocks == expected, || json!({"blocks": blocks, "expected": expected}));

    let mut p_rule = Report::new("block_action_p");
    let mut sign_rule = Report::new("block_action_sign");
    for w in window.weights(n) {
        let reach = 2 * n as i64;
        for i in w.min_ball() - reach..=w.max_ball() + 2 {
            for eps in [Parity::Even, Parity::Odd] {
                let Some((mu, out)) = theta_proj_tracked(i, &w, eps) else { continue };
                let from = block_of(&w, eps);
                let actual = block_of(&mu, out);
                let predicted = block_action(i, from, n).expect("valid label");
                let ce = || {
                    json!({
                        "i": i, "weight": &w, "parity": eps, "image": &mu, "image_parity": out,
                        "from": from, "actual": actual, "predicted": predicted,
                    })
                };
                p_rule.check(predicted.is_some_and(|b| b.p == actual.p), ce);
                if let Some(b) = predicted.filter(|b| b.p == actual.p) {
                    sign_rule.check(b.sign == actual.sign, ce);
                }
            }
        }
    }
    BlocksReport {
        n,
        window: window.to_string(),
        kappa_levels: levels.into_values().collect(),
        blocks,
        expected_blocks: expected,
        checks: vec![kappa_constant, connectivity, count, p_rule, sign_rule],
    }
}

/// κ-levels present among the window weights.
pub fn kappa_levels(n: usize, window: &Window) -> BTreeSet<i64> {
    window.weights(n).iter().map(Weight::kappa).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(all_labels(3).len(), 8);
        assert!(all_labels(3).iter().all(|l| l.validate(3).is_ok()));
        assert!(BlockLabel { p: 1, sign: Sign::Plus }.validate(2).is_err());
        assert!(BlockLabel { p: 4, sign: Sign::Plus }.validate(2).is_err());
    }

    #[test]
    fn zero_and_rho() {
        assert_eq!(block_of(&Weight::zero(2), Parity::Even), BlockLabel { p: 0, sign: Sign::Plus });
        assert_eq!(block_of(&Weight::zero(3), Parity::Even), BlockLabel { p: 1, sign: Sign::Plus });
        for n in 1..=9usize {
            let b = block_of(&Weight::rho(n), Parity::Even);
            assert_eq!(b.p, n as i64);
            let plus = matches!(n % 8, 7 | 0 | 1 | 2);
            assert_eq!(b.sign == Sign::Plus, plus, "n = {n}");
        }
        let w = Weight::rho(2);
        assert_eq!(block_of(&w, Parity::Odd).sign, block_of(&w, Parity::Even).sign.flip());
    }

    #[test]
    fn rank_one_components() {
        let part = block_components_oracle(1, &Window::symmetric(6));
        assert_eq!(part.len(), 2);
        for c in &part.components {
            let par = c.weights[0].balls()[0].rem_euclid(2);
            assert!(c.weights.iter().all(|w| w.balls()[0].rem_euclid(2) == par));
        }
    }

    #[test]
    fn report_shape() {
        let r = blocks_report(2, &Window::symmetric(6));
        assert_eq!(r.expected_blocks, 6);
        assert_eq!(r.blocks, 6);
        let names: Vec<_> = r.checks.iter().map(|c| c.relation.as_str()).collect();
        assert_eq!(names, ["kappa_constant", "interior_connectivity", "block_count", "block_action_p", "block_action_sign"]);
        assert!(r.checks[..4].iter().all(Report::passed));
    }
}
