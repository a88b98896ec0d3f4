//! Grothendieck-group vectors and the basis changes between [P], [Δ], [∇], [L].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arrows::{build_arrows, down_set, member_down, member_up, up_set};
use crate::error::{Error, Result};
use crate::weights::{Weight, Window};

/// Parity of a highest-weight vector; `Odd` means Π-shifted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Parity {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn from_int(k: i64) -> Parity {
        Parity::from_bit(k.rem_euclid(2) as u8)
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn flip(self) -> Parity {
        self + Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit((self.bit() + rhs.bit()) % 2)
    }
}

impl Serialize for Parity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.bit())
    }
}

impl<'de> Deserialize<'de> for Parity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            b => Err(serde::de::Error::custom(format!("parity must be 0 or 1, got {b}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Delta,
    Nabla,
    Simple,
    Proj,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Delta => "Delta",
            Family::Nabla => "Nabla",
            Family::Simple => "Simple",
            Family::Proj => "Proj",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Family::Delta => "Δ",
            Family::Nabla => "∇",
            Family::Simple => "L",
            Family::Proj => "P",
        }
    }
}

/// One basis symbol such as Π[Δ(λ)].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub family: Family,
    pub weight: Weight,
    pub parity: Parity,
}

/// A finite integer combination of basis symbols of one family and one rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothendieckVector {
    family: Family,
    n: usize,
    terms: BTreeMap<(Weight, Parity), BigInt>,
}

impl GrothendieckVector {
    pub fn zero(family: Family, n: usize) -> Self {
        GrothendieckVector { family, n, terms: BTreeMap::new() }
    }

    pub fn basis(family: Family, weight: Weight, parity: Parity) -> Self {
        let mut v = GrothendieckVector::zero(family, weight.n());
        v.terms.insert((weight, parity), BigInt::one());
        v
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, weight: Weight, parity: Parity, coeff: impl Into<BigInt>) -> Result<()> {
        if weight.n() != self.n {
            return Err(Error::RankMismatch { left: self.n, right: weight.n() });
        }
        let c = coeff.into();
        let key = (weight, parity);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &GrothendieckVector) -> Result<GrothendieckVector> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch { expected: self.family.name(), found: other.family.name() });
        }
        let mut out = self.clone();
        for ((w, p), c) in &other.terms {
            out.add_term(w.clone(), *p, c.clone())?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, Parity, &BigInt)> {
        self.terms.iter().map(|((w, p), c)| (w, *p, c))
    }

    pub fn labels(&self) -> impl Iterator<Item = (BasisLabel, &BigInt)> {
        self.terms.iter().map(move |((w, p), c)| {
            (BasisLabel { family: self.family, weight: w.clone(), parity: *p }, c)
        })
    }

    /// Distinct weights in the support, in increasing order.
    pub fn weights(&self) -> Vec<Weight> {
        let mut ws: Vec<Weight> = self.terms.keys().map(|(w, _)| w.clone()).collect();
        ws.dedup();
        ws
    }

    /// The image in the reduced group: parities forgotten, coefficients merged.
    pub fn reduced(&self) -> GrothendieckVector {
        let mut out = GrothendieckVector::zero(self.family, self.n);
        for ((w, _), c) in &self.terms {
            out.add_term(w.clone(), Parity::Even, c.clone()).expect("same rank");
        }
        out
    }

    /// Reduced coefficient of the weight.
    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.terms
            .range((w.clone(), Parity::Even)..=(w.clone(), Parity::Odd))
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Applies Π^k to every term.
    pub fn parity_shift(&self, k: i64) -> GrothendieckVector {
        let shift = Parity::from_int(k);
        GrothendieckVector {
            family: self.family,
            n: self.n,
            terms: self.terms.iter().map(|((w, p), c)| ((w.clone(), *p + shift), c.clone())).collect(),
        }
    }

    pub fn with_family(&self, family: Family) -> GrothendieckVector {
        GrothendieckVector { family, ..self.clone() }
    }
}

impl fmt::Display for GrothendieckVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((w, p), c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            let pi = if *p == Parity::Odd { "Π" } else { "" };
            write!(f, "{pi}[{}{w}]", self.family.symbol())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    family: Family,
    weight: Vec<i64>,
    parity: Parity,
    coeff: serde_json::Value,
}

impl Serialize for GrothendieckVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|((w, p), c)| TermJson {
                family: self.family,
                weight: w.coords(),
                parity: *p,
                coeff: match c.to_i64() {
                    Some(x) => serde_json::Value::from(x),
                    None => serde_json::Value::from(c.to_string()),
                },
            })
            .collect();
        terms.serialize(s)
    }
}

impl GrothendieckVector {
    /// Parses the JSON list form; an empty list needs the family and rank supplied.
    pub fn from_json(value: &serde_json::Value, family: Family, n: usize) -> Result<Self> {
        let terms: Vec<TermJson> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = GrothendieckVector::zero(family, n);
        for t in terms {
            if t.family != family {
                return Err(Error::FamilyMismatch { expected: family.name(), found: t.family.name() });
            }
            let coeff: BigInt = match &t.coeff {
                serde_json::Value::Number(x) => x
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {x}")))?,
                serde_json::Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad coefficient {s}")))?,
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            out.add_term(Weight::new(t.weight)?, t.parity, coeff)?;
        }
        Ok(out)
    }
}

/// [P(λ)] = Σ_{μ∈▲(λ)} [Δ(μ)].
pub fn proj_to_delta(w: &Weight) -> GrothendieckVector {
    let mut v = GrothendieckVector::zero(Family::Delta, w.n());
    for mu in up_set(w) {
        v.add_term(mu, Parity::Even, 1).expect("same rank");
    }
    v
}

/// [P(λ)] = Σ_{μ∈▼(λ)} [∇(μ + 2ω)].
pub fn proj_to_nabla(w: &Weight) -> GrothendieckVector {
    let mut v = GrothendieckVector::zero(Family::Nabla, w.n());
    for mu in down_set(w) {
        v.add_term(mu.shift(2), Parity::Even, 1).expect("same rank");
    }
    v
}

/// Default inverse-search radius: every arrow has length at most 2n.
pub fn search_radius(n: usize) -> i64 {
    2 * n as i64
}

/// All weights whose k-th ball lies in `[lower[k], upper[k]]`.
pub(crate) fn box_weights(lower: &[i64], upper: &[i64]) -> Vec<Weight> {
    fn go(k: usize, lower: &[i64], upper: &[i64], acc: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if k == lower.len() {
            out.push(Weight::from_sorted_balls(acc.clone()));
            return;
        }
        let cap = acc.last().map_or(upper[k], |&prev| upper[k].min(prev - 1));
        for b in lower[k]..=cap {
            acc.push(b);
            go(k + 1, lower, upper, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, lower, upper, &mut Vec::with_capacity(lower.len()), &mut out);
    out
}

fn require_window(window: &Window, lo: i64, hi: i64) -> Result<()> {
    if window.contains_range(lo, hi) {
        Ok(())
    } else {
        Err(Error::WindowTooSmall { lo, hi, window: *window })
    }
}

/// Number of balls at odd positions; constant along arrows.
fn odd_balls(w: &Weight) -> usize {
    w.balls().iter().filter(|b| b.rem_euclid(2) == 1).count()
}

/// [Δ(μ)] = Σ_{λ : μ∈▼(λ)} [L(λ)].
pub fn delta_to_simple(mu: &Weight, window: &Window) -> Result<GrothendieckVector> {
    delta_to_simple_with_radius(mu, window, search_radius(mu.n()))
}

pub fn delta_to_simple_with_radius(mu: &Weight, window: &Window, radius: i64) -> Result<GrothendieckVector> {
    require_window(window, mu.min_ball(), mu.max_ball() + radius)?;
    let lower = mu.balls().to_vec();
    let upper: Vec<i64> = lower.iter().map(|b| b + radius).collect();
    let odd = odd_balls(mu);
    let mut v = GrothendieckVector::zero(Family::Simple, mu.n());
    for lam in box_weights(&lower, &upper) {
        if odd_balls(&lam) == odd && member_down(&lam, mu)? {
            v.add_term(lam, Parity::Even, 1)?;
        }
    }
    Ok(v)
}

/// [∇(μ)] = Σ_{λ : μ∈▲(λ)} [L(λ)].
pub fn nabla_to_simple(mu: &Weight, window: &Window) -> Result<GrothendieckVector> {
    nabla_to_simple_with_radius(mu, window, search_radius(mu.n()))
}

pub fn nabla_to_simple_with_radius(mu: &Weight, window: &Window, radius: i64) -> Result<GrothendieckVector> {
    require_window(window, mu.min_ball(), mu.max_ball() + radius)?;
    let lower = mu.balls().to_vec();
    let upper: Vec<i64> = lower.iter().map(|b| b + radius).collect();
    let odd = odd_balls(mu);
    let mut v = GrothendieckVector::zero(Family::Simple, mu.n());
    for lam in box_weights(&lower, &upper) {
        if odd_balls(&lam) == odd && member_up(&lam, mu)? {
            v.add_term(lam, Parity::Even, 1)?;
        }
    }
    Ok(v)
}

/// dim Hom(P(λ), P(μ)) = |▲(μ) ∩ ▼(λ)|, which is at most 1.
pub fn hom_dim(lambda: &Weight, mu: &Weight) -> Result<u32> {
    lambda.check_rank(mu)?;
    let arrows = build_arrows(lambda);
    let count = up_set(mu).iter().filter(|nu| arrows.member_down(nu)).count() as u32;
    if count > 1 {
        return Err(Error::Contradiction(format!(
            "|▲({mu}) ∩ ▼({lambda})| = {count} exceeds 1"
        )));
    }
    Ok(count)
}

/// ⟨a, b⟩ for a in the Δ-span and b in the ∇-span, parities forgotten.
pub fn pairing(a: &GrothendieckVector, b: &GrothendieckVector) -> Result<BigInt> {
    if a.family() != Family::Delta {
        return Err(Error::FamilyMismatch { expected: "Delta", found: a.family().name() });
    }
    if b.family() != Family::Nabla {
        return Err(Error::FamilyMismatch { expected: "Nabla", found: b.family().name() });
    }
    if a.n() != b.n() {
        return Err(Error::RankMismatch { left: a.n(), right: b.n() });
    }
    let b = b.reduced();
    Ok(a.reduced().iter().map(|(w, _, c)| c * b.coeff(w)).sum())
}

/// The injective hull of L(λ) is Π^n P(λ − 2ω).
pub fn injective_hull(w: &Weight) -> (Weight, Parity) {
    (w.shift(-2), Parity::from_int(w.n() as i64))
}

/// Necessary condition for Ext¹(L(λ), L(μ)) ≠ 0: λ ∈ ▼(μ) or μ ∈ ▲(λ).
pub fn ext_possible(lambda: &Weight, mu: &Weight) -> Result<bool> {
    Ok(member_down(mu, lambda)? || member_up(lambda, mu)?)
}
