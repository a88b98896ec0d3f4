//! Independent oracles used by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use pkit::Weight;

/// Number of Gelfand–Tsetlin patterns with top row `top` (weakly decreasing).
pub fn gt_count(top: &[i64]) -> u64 {
    if top.len() <= 1 {
        return 1;
    }
    let ranges: Vec<Vec<i64>> = top.windows(2).map(|w| (w[1]..=w[0]).collect()).collect();
    ranges.into_iter().multi_cartesian_product().map(|row| gt_count(&row)).sum()
}

fn ball(c: &BTreeSet<i64>, i: i64) -> bool {
    c.contains(&i)
}

fn gval(c: &BTreeSet<i64>, i: i64) -> i64 {
    if ball(c, i) {
        1
    } else {
        -1
    }
}

/// Solid arrows i → j straight from the balance definition: r⁺(i,j) = 0 and
/// r⁺(i,s) ≥ 0 for j < s < i, with j empty.
pub fn brute_solid(w: &Weight) -> BTreeSet<(i64, i64)> {
    let c: BTreeSet<i64> = w.balls().iter().copied().collect();
    let reach = 4 * w.n() as i64 + 4;
    let rp = |i: i64, j: i64| (j..i).map(|s| gval(&c, s)).sum::<i64>();
    let mut out = BTreeSet::new();
    for &i in &c {
        for j in i - reach..i {
            if !ball(&c, j) && rp(i, j) == 0 && (j + 1..i).all(|s| rp(i, s) >= 0) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Dashed arrows j ⇢ i: j empty, i a ball, r⁻(i,j) = 0 and r⁻(s,j) ≥ 0 for j < s < i.
pub fn brute_dashed(w: &Weight) -> BTreeSet<(i64, i64)> {
    let c: BTreeSet<i64> = w.balls().iter().copied().collect();
    let reach = 4 * w.n() as i64 + 4;
    let rm = |i: i64, j: i64| -(j + 1..=i).map(|s| gval(&c, s)).sum::<i64>();
    let mut out = BTreeSet::new();
    for &i in &c {
        for j in i - reach..i {
            if !ball(&c, j) && rm(i, j) == 0 && (j + 1..i).all(|s| rm(s, j) >= 0) {
                out.insert((j, i));
            }
        }
    }
    out
}

/// ▲(λ) from the brute-force solid arrows.
pub fn brute_up(w: &Weight) -> BTreeSet<Weight> {
    let arrows = brute_solid(w);
    w.balls()
        .iter()
        .map(|&i| {
            std::iter::once(i)
                .chain(arrows.iter().filter(|a| a.0 == i).map(|a| a.1))
                .collect::<Vec<_>>()
        })
        .multi_cartesian_product()
        .map(|b| Weight::from_balls(b).unwrap())
        .collect()
}

/// ▼(λ) from the brute-force dashed arrows.
pub fn brute_down(w: &Weight) -> BTreeSet<Weight> {
    let arrows = brute_dashed(w);
    let sources: BTreeSet<i64> = arrows.iter().map(|a| a.0).collect();
    sources
        .iter()
        .map(|&j| {
            std::iter::once(None)
                .chain(arrows.iter().filter(|a| a.0 == j).map(|a| Some(*a)))
                .collect::<Vec<_>>()
        })
        .multi_cartesian_product()
        .map(|pick| {
            let mut b = w.balls().to_vec();
            for (j, i) in pick.into_iter().flatten() {
                let k = b.iter().position(|&x| x == i).unwrap();
                b[k] = j;
            }
            Weight::from_balls(b).unwrap()
        })
        .collect()
}

/// λ† by a chain of odd reflections: for pairs a < b in lexicographic order,
/// add ε_a + ε_b whenever λ_a ≠ λ_b and the result stays dominant.
pub fn odd_reflection_dagger(w: &Weight) -> Weight {
    let mut lam = w.coords();
    let n = lam.len();
    for a in 0..n {
        for b in a + 1..n {
            let mut next = lam.clone();
            next[a] += 1;
            next[b] += 1;
            let dominant = next.windows(2).all(|p| p[0] >= p[1]);
            if lam[a] != lam[b] && dominant {
                lam = next;
            }
        }
    }
    Weight::new(lam).unwrap()
}

/// Every rank-n weight with coordinates in [lo, hi].
pub fn coord_box(n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    (0..n)
        .map(|_| lo..=hi)
        .multi_cartesian_product()
        .filter(|c| c.windows(2).all(|p| p[0] >= p[1]))
        .map(|c| Weight::new(c).unwrap())
        .collect()
}
