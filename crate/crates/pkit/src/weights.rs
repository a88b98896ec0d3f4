//! Dominant weights of p(n), their weight diagrams, and dimension formulas.
//!
//! A weight λ = (λ₁ ≥ … ≥ λₙ) is stored through its support
//! c_λ = {λᵢ + n − i}, a strictly decreasing list of ball positions.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Closed integer interval `[lo, hi]`; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Window { lo, hi }
    }

    /// The symmetric window `[-r, r]`.
    pub const fn symmetric(r: i64) -> Self {
        Window { lo: -r, hi: r }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }

    pub fn contains(&self, i: i64) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn contains_range(&self, lo: i64, hi: i64) -> bool {
        lo > hi || (self.lo <= lo && hi <= self.hi)
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    /// Shrinks by `m` on both sides.
    pub fn shrink(&self, m: i64) -> Window {
        Window::new(self.lo + m, self.hi - m)
    }

    /// All rank-`n` weights whose balls lie in the window, in increasing order.
    pub fn weights(&self, n: usize) -> Vec<Weight> {
        let mut out: Vec<Weight> = self
            .positions()
            .combinations(n)
            .map(|mut c| {
                c.reverse();
                Weight { balls: c }
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for Window {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("window `{s}` is not of the form lo..hi")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("window bound `{t}`: {e}")))
        };
        Ok(Window::new(parse(lo)?, parse(hi)?))
    }
}

/// A dominant integral weight, stored as its strictly decreasing support c_λ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    balls: Vec<i64>,
}

impl Weight {
    /// Builds λ from its coordinates λ₁ ≥ … ≥ λₙ.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroRank);
        }
        if coords.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(coords));
        }
        let n = coords.len() as i64;
        let balls = coords
            .iter()
            .enumerate()
            .map(|(k, &x)| x + n - 1 - k as i64)
            .collect();
        Ok(Weight { balls })
    }

    /// Builds λ from its ball positions, in any order.
    pub fn from_balls(mut balls: Vec<i64>) -> Result<Self> {
        if balls.is_empty() {
            return Err(Error::ZeroRank);
        }
        balls.sort_unstable_by(|a, b| b.cmp(a));
        if balls.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedBall(balls));
        }
        Ok(Weight { balls })
    }

    pub(crate) fn from_sorted_balls(balls: Vec<i64>) -> Self {
        debug_assert!(balls.windows(2).all(|w| w[0] > w[1]));
        Weight { balls }
    }

    pub fn zero(n: usize) -> Self {
        Weight::constant(n, 0)
    }

    /// kω.
    pub fn constant(n: usize, k: i64) -> Self {
        assert!(n > 0, "rank must be positive");
        Weight::new(vec![k; n]).expect("constant weights are dominant")
    }

    /// ρ = (n−1, …, 1, 0).
    pub fn rho(n: usize) -> Self {
        assert!(n > 0, "rank must be positive");
        Weight::new((0..n as i64).rev().collect()).expect("rho is dominant")
    }

    pub fn n(&self) -> usize {
        self.balls.len()
    }

    /// c_λ, strictly decreasing.
    pub fn balls(&self) -> &[i64] {
        &self.balls
    }

    pub fn coords(&self) -> Vec<i64> {
        let n = self.n() as i64;
        self.balls
            .iter()
            .enumerate()
            .map(|(k, &c)| c - (n - 1 - k as i64))
            .collect()
    }

    /// f_λ(i).
    pub fn has_ball(&self, i: i64) -> bool {
        self.balls.binary_search_by(|b| i.cmp(b)).is_ok()
    }

    pub fn max_ball(&self) -> i64 {
        self.balls[0]
    }

    pub fn min_ball(&self) -> i64 {
        self.balls[self.balls.len() - 1]
    }

    /// |λ| = Σ λᵢ.
    pub fn size(&self) -> i64 {
        self.coords().iter().sum()
    }

    /// λ + kω.
    pub fn shift(&self, k: i64) -> Weight {
        Weight { balls: self.balls.iter().map(|b| b + k).collect() }
    }

    /// Moves the ball at `from` to the empty position `to`.
    pub fn move_ball(&self, from: i64, to: i64) -> Weight {
        debug_assert!(self.has_ball(from) && !self.has_ball(to));
        let mut balls: Vec<i64> = self.balls.iter().map(|&b| if b == from { to } else { b }).collect();
        balls.sort_unstable_by(|a, b| b.cmp(a));
        Weight { balls }
    }

    pub fn check_rank(&self, other: &Weight) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::RankMismatch { left: self.n(), right: other.n() })
        }
    }

    /// `self ≤ other` in the highest-weight order, i.e. otherᵢ ≤ selfᵢ for all i.
    pub fn leq(&self, other: &Weight) -> Result<bool> {
        self.check_rank(other)?;
        Ok(self.balls.iter().zip(&other.balls).all(|(a, b)| b <= a))
    }

    /// No two adjacent balls, equivalently λ strictly decreasing.
    pub fn is_typical(&self) -> bool {
        self.balls.windows(2).all(|w| w[0] - w[1] > 1)
    }

    /// κ(λ) = Σ_{i∈c_λ} (−1)^i.
    pub fn kappa(&self) -> i64 {
        self.balls.iter().map(|b| if b.rem_euclid(2) == 0 { 1 } else { -1 }).sum()
    }

    /// q(λ): 0 if |λ| ≡ 0, 1 mod 4, else 1.
    pub fn q_parity(&self) -> u8 {
        q_of_size(self.size())
    }

    /// dim V(λ) for gl(n) by the Weyl dimension formula.
    pub fn gl_dim(&self) -> BigUint {
        let n = self.n();
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for i in 0..n {
            for j in i + 1..n {
                num *= BigUint::from((self.balls[i] - self.balls[j]) as u64);
                den *= BigUint::from((j - i) as u64);
            }
        }
        let rem = &num % &den;
        assert!(rem.is_zero(), "Weyl dimension quotient is not integral");
        num / den
    }

    /// (dim ∇(λ), dim Δ(λ)) = (2^{n(n−1)/2}, 2^{n(n+1)/2}) · dim V(λ).
    pub fn kac_dims(&self) -> (BigUint, BigUint) {
        let n = self.n();
        let v = self.gl_dim();
        let thin = &v << (n * (n - 1) / 2);
        let thick = v << (n * (n + 1) / 2);
        (thin, thick)
    }
}

/// q as a function of |λ|.
pub fn q_of_size(size: i64) -> u8 {
    match size.rem_euclid(4) {
        0 | 1 => 0,
        _ => 1,
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{:?}", self.coords())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords().iter().join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    n: usize,
    #[serde(default)]
    coords: Option<Vec<i64>>,
    #[serde(default)]
    balls: Option<Vec<i64>>,
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightJson { n: self.n(), coords: Some(self.coords()), balls: Some(self.balls.clone()) }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = WeightJson::deserialize(d)?;
        let w = match (raw.coords, raw.balls) {
            (Some(c), balls) => {
                let w = Weight::new(c).map_err(D::Error::custom)?;
                if balls.is_some_and(|b| b != w.balls) {
                    return Err(D::Error::custom("coords and balls disagree"));
                }
                w
            }
            (None, Some(b)) => {
                if b.windows(2).any(|w| w[0] <= w[1]) {
                    return Err(D::Error::custom("balls must be strictly decreasing"));
                }
                Weight::from_balls(b).map_err(D::Error::custom)?
            }
            (None, None) => return Err(D::Error::custom("weight needs coords or balls")),
        };
        if w.n() != raw.n {
            return Err(D::Error::custom("n does not match the number of coordinates"));
        }
        Ok(w)
    }
}

/// The labeling of ℤ by ● at c_λ and ○ elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDiagram {
    balls: Vec<i64>,
}

impl WeightDiagram {
    pub fn new(balls: Vec<i64>) -> Result<Self> {
        Weight::from_balls(balls).map(|w| WeightDiagram { balls: w.balls })
    }

    pub fn n(&self) -> usize {
        self.balls.len()
    }

    pub fn balls(&self) -> &[i64] {
        &self.balls
    }

    pub fn f(&self, i: i64) -> bool {
        self.balls.binary_search_by(|b| i.cmp(b)).is_ok()
    }

    /// One row of ●/○ over the window with position labels underneath.
    pub fn render_ascii(&self, window: &Window) -> String {
        render_row(window, |i| self.f(i))
    }
}

pub fn weight_to_diagram(w: &Weight) -> WeightDiagram {
    WeightDiagram { balls: w.balls.clone() }
}

pub fn diagram_to_weight(d: &WeightDiagram) -> Weight {
    Weight { balls: d.balls.clone() }
}

pub(crate) fn column_width(window: &Window) -> usize {
    [window.lo, window.hi].iter().map(|x| x.to_string().len()).max().unwrap_or(1)
}

pub(crate) fn render_row(window: &Window, ball: impl Fn(i64) -> bool) -> String {
    if window.is_empty() {
        return String::new();
    }
    let w = column_width(window);
    let symbols = window
        .positions()
        .map(|i| format!("{:>w$}", if ball(i) { "●" } else { "○" }))
        .join(" ");
    let labels = window.positions().map(|i| format!("{i:>w$}")).join(" ");
    format!("{symbols}\n{labels}\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec()).unwrap()
    }

    #[test]
    fn diagrams_of_zero_and_rho() {
        assert_eq!(w(&[0, 0, 0, 0]).balls(), &[3, 2, 1, 0]);
        assert_eq!(Weight::rho(4).balls(), &[6, 4, 2, 0]);
        assert_eq!(w(&[5]).balls(), &[5]);
    }

    #[test]
    fn diagram_round_trip() {
        let d = WeightDiagram::new(vec![4, 3, 1, 0]).unwrap();
        assert_eq!(diagram_to_weight(&d).coords(), vec![1, 1, 0, 0]);
        let d = WeightDiagram::new(vec![4, 2, 1, 0]).unwrap();
        assert_eq!(diagram_to_weight(&d).coords(), vec![1, 0, 0, 0]);
        assert_eq!(diagram_to_weight(&WeightDiagram::new(vec![1, 0]).unwrap()), Weight::zero(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Weight::new(vec![0, 1]), Err(Error::NotDominant(vec![0, 1])));
        assert!(Weight::from_balls(vec![1, 1]).is_err());
        assert_eq!(Weight::new(vec![]), Err(Error::ZeroRank));
    }

    #[test]
    fn order() {
        assert!(w(&[0, 0]).leq(&w(&[0, 0])).unwrap());
        assert!(!w(&[0, 0]).leq(&w(&[1, 1])).unwrap());
        assert!(w(&[1, 1]).leq(&w(&[0, 0])).unwrap());
        assert!(w(&[0]).leq(&w(&[0, 0])).is_err());
    }

    #[test]
    fn typicality() {
        for n in 1..6 {
            assert!(Weight::rho(n).is_typical());
        }
        assert!(!Weight::zero(2).is_typical());
        assert!(w(&[-7]).is_typical());
    }

    #[test]
    fn shifting() {
        assert_eq!(w(&[0, 0]).shift(1), w(&[1, 1]));
        assert_eq!(w(&[1, 0]).shift(-2), w(&[-1, -2]));
    }

    #[test]
    fn dimensions() {
        assert_eq!(Weight::zero(2).gl_dim(), BigUint::from(1u8));
        assert_eq!(w(&[1, 0]).gl_dim(), BigUint::from(2u8));
        assert_eq!(w(&[1, 0, 0]).gl_dim(), BigUint::from(3u8));
        assert_eq!(Weight::zero(2).kac_dims(), (BigUint::from(2u8), BigUint::from(8u8)));
        assert_eq!(w(&[9]).kac_dims(), (BigUint::from(1u8), BigUint::from(2u8)));
        assert_eq!(Weight::zero(3).kac_dims(), (BigUint::from(8u8), BigUint::from(64u8)));
    }

    #[test]
    fn block_invariants() {
        assert_eq!(Weight::zero(4).kappa(), 0);
        assert_eq!(Weight::zero(3).kappa(), 1);
        for n in 1..7 {
            assert_eq!(Weight::rho(n).kappa(), n as i64);
        }
        let mus = [[4, 2, -1], [4, 2, 1], [4, 3, 2], [5, 4, 2]];
        let q: Vec<u8> = mus
            .iter()
            .map(|b| Weight::from_balls(b.to_vec()).unwrap())
            .inspect(|m| assert_eq!(m.kappa(), 1))
            .map(|m| m.q_parity())
            .collect();
        assert_eq!(q, vec![1, 0, 1, 0]);
    }

    #[test]
    fn window_parsing() {
        assert_eq!("-4..7".parse::<Window>().unwrap(), Window::new(-4, 7));
        assert!("3".parse::<Window>().is_err());
        assert_eq!(Window::new(0, 3).weights(2).len(), 6);
    }

    #[test]
    fn render_empty_and_width() {
        let d = weight_to_diagram(&Weight::zero(2));
        assert_eq!(d.render_ascii(&Window::new(1, 0)), "");
        let text = d.render_ascii(&Window::new(-2, 3));
        let symbols = text.lines().next().unwrap();
        assert_eq!(symbols.chars().filter(|c| *c == '●' || *c == '○').count(), 6);
    }

    #[test]
    fn json_round_trip() {
        let x = w(&[2, 0, -1]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":3,"coords":[2,0,-1],"balls":[4,1,-1]}"#);
        assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), x);
        assert!(serde_json::from_str::<Weight>(r#"{"n":2,"coords":[0,1]}"#).is_err());
        assert!(serde_json::from_str::<Weight>(r#"{"n":2,"coords":[0,0],"balls":[0,1]}"#).is_err());
    }
}
