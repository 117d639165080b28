//! Minimum-parameter colourings with lexicographically extremal strengths.
//!
//! `phi_minus` gives colour 1 to as many vertices as possible, then colour 2
//! to as many of the rest as possible, and so on, over all proper colourings
//! with exactly `k` colours. `phi_plus` does the same starting from colour
//! `k` downward. The search is exact: at every level it tries all maximum
//! feasible independent sets, so a greedy choice that blocks a larger later
//! class is never taken. Ties between colourings with the same strength
//! vector go to the lexicographically smallest colour sequence.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use super::{chromatic_number, Coloring};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiVariant {
    Minus,
    Plus,
}

impl PhiVariant {
    pub fn name(self) -> &'static str {
        match self {
            PhiVariant::Minus => "minus",
            PhiVariant::Plus => "plus",
        }
    }
}

impl std::fmt::Display for PhiVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for PhiVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minus" => Ok(PhiVariant::Minus),
            "plus" => Ok(PhiVariant::Plus),
            _ => Err(Error::Unknown { what: "variant", value: s.to_string() }),
        }
    }
}

pub fn phi_minus(g: &Graph, k: u32, budget: Budget) -> Result<Coloring> {
    extremal(g, k, PhiVariant::Minus, budget)
}

pub fn phi_plus(g: &Graph, k: u32, budget: Budget) -> Result<Coloring> {
    extremal(g, k, PhiVariant::Plus, budget)
}

pub(crate) fn extremal(g: &Graph, k: u32, variant: PhiVariant, budget: Budget) -> Result<Coloring> {
    budget.check(g.vertex_count())?;
    let count = g.vertex_count();
    if k == 0 || k as usize > count {
        return Err(Error::Infeasible {
            k,
            chi: chromatic_number(g),
        });
    }
    let all = if count == 64 { u64::MAX } else { (1u64 << count) - 1 };
    let mut search = Search {
        masks: g.masks(),
        k,
        variant,
        best: HashMap::new(),
        colorable: HashMap::new(),
        alpha: HashMap::new(),
    };
    match search.best(0, all) {
        Some(sol) => Coloring::new(sol.assign.iter().map(|&c| c as u32).collect()),
        None => Err(Error::Infeasible {
            k,
            chi: chromatic_number(g),
        }),
    }
}

#[derive(Debug, Clone)]
struct Partial {
    /// Strengths of the classes assigned at this level and below, in
    /// assignment order.
    strengths: Vec<u32>,
    /// Colour per vertex; zero outside the vertex set being solved.
    assign: Vec<u8>,
}

impl Partial {
    fn better_than(&self, other: &Partial) -> bool {
        match self.strengths.cmp(&other.strengths) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.assign < other.assign,
        }
    }
}

struct Search {
    masks: Vec<u64>,
    k: u32,
    variant: PhiVariant,
    best: HashMap<(u32, u64), Option<Partial>>,
    colorable: HashMap<(u32, u64), bool>,
    alpha: HashMap<u64, u32>,
}

impl Search {
    fn color_at(&self, level: u32) -> u8 {
        match self.variant {
            PhiVariant::Minus => (level + 1) as u8,
            PhiVariant::Plus => (self.k - level) as u8,
        }
    }

    fn is_independent(&self, set: u64) -> bool {
        bits(set).all(|v| self.masks[v] & set == 0)
    }

    fn best(&mut self, level: u32, rest: u64) -> Option<Partial> {
        let left = self.k - level;
        let size = rest.count_ones();
        if left == 0 {
            return (rest == 0).then(|| Partial {
                strengths: Vec::new(),
                assign: vec![0; self.masks.len()],
            });
        }
        if size < left {
            return None;
        }
        if left == 1 {
            if !self.is_independent(rest) {
                return None;
            }
            let mut assign = vec![0; self.masks.len()];
            let color = self.color_at(level);
            for v in bits(rest) {
                assign[v] = color;
            }
            return Some(Partial {
                strengths: vec![size],
                assign,
            });
        }
        if let Some(hit) = self.best.get(&(level, rest)) {
            return hit.clone();
        }
        let result = self.solve_level(level, rest);
        self.best.insert((level, rest), result.clone());
        result
    }

    fn solve_level(&mut self, level: u32, rest: u64) -> Option<Partial> {
        let left = self.k - level;
        if !self.is_colorable(rest, left) {
            return None;
        }
        let max_size = self.alpha(rest).min(rest.count_ones() - (left - 1));
        let color = self.color_at(level);
        for size in (1..=max_size).rev() {
            let mut sets = Vec::new();
            independent_sets_of_size(&self.masks, rest, size, 0, &mut sets);
            let mut champion: Option<Partial> = None;
            for set in sets {
                let remaining = rest & !set;
                if !self.is_colorable(remaining, left - 1) {
                    continue;
                }
                let Some(sub) = self.best(level + 1, remaining) else {
                    continue;
                };
                let mut strengths = Vec::with_capacity(sub.strengths.len() + 1);
                strengths.push(size);
                strengths.extend_from_slice(&sub.strengths);
                let mut assign = sub.assign;
                for v in bits(set) {
                    assign[v] = color;
                }
                let cand = Partial { strengths, assign };
                if champion.as_ref().is_none_or(|c| cand.better_than(c)) {
                    champion = Some(cand);
                }
            }
            if champion.is_some() {
                return champion;
            }
        }
        None
    }

    /// Whether `set` admits a proper colouring with at most `colors` colours.
    fn is_colorable(&mut self, set: u64, colors: u32) -> bool {
        if set == 0 {
            return true;
        }
        if colors == 0 {
            return false;
        }
        if colors == 1 {
            return self.is_independent(set);
        }
        if let Some(&hit) = self.colorable.get(&(colors, set)) {
            return hit;
        }
        // The lowest vertex goes into some maximal independent set of `set`.
        let v = set.trailing_zeros() as usize;
        let mut classes = Vec::new();
        maximal_independent_containing(&self.masks, set, v, &mut classes);
        let ok = classes
            .into_iter()
            .any(|class| self.is_colorable(set & !class, colors - 1));
        self.colorable.insert((colors, set), ok);
        ok
    }

    fn alpha(&mut self, set: u64) -> u32 {
        if set == 0 {
            return 0;
        }
        if let Some(&a) = self.alpha.get(&set) {
            return a;
        }
        // branch on the vertex of largest degree inside `set`
        let v = bits(set)
            .max_by_key(|&v| ((self.masks[v] & set).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        let result = if (self.masks[v] & set).count_ones() == 0 {
            set.count_ones()
        } else {
            let with = 1 + self.alpha(set & !(1 << v) & !self.masks[v]);
            let without = self.alpha(set & !(1 << v));
            with.max(without)
        };
        self.alpha.insert(set, result);
        result
    }
}

pub(crate) fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Independent subsets of `cand` with exactly `need` more vertices, emitted
/// in lexicographic order of their sorted vertex lists.
fn independent_sets_of_size(masks: &[u64], cand: u64, need: u32, chosen: u64, out: &mut Vec<u64>) {
    if need == 0 {
        out.push(chosen);
        return;
    }
    if cand.count_ones() < need {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    independent_sets_of_size(masks, cand & !bit & !masks[v], need - 1, chosen | bit, out);
    independent_sets_of_size(masks, cand & !bit, need, chosen, out);
}

/// Maximal independent subsets of `set` that contain `v`.
fn maximal_independent_containing(masks: &[u64], set: u64, v: usize, out: &mut Vec<u64>) {
    fn grow(masks: &[u64], chosen: u64, cand: u64, excluded: u64, out: &mut Vec<u64>) {
        if cand == 0 {
            // maximal iff no excluded vertex could still be added
            let blocked = bits(excluded).all(|w| masks[w] & chosen != 0);
            if blocked {
                out.push(chosen);
            }
            return;
        }
        let w = cand.trailing_zeros() as usize;
        let bit = 1u64 << w;
        grow(masks, chosen | bit, cand & !bit & !masks[w], excluded, out);
        grow(masks, chosen, cand & !bit, excluded | bit, out);
    }
    let bit = 1u64 << v;
    grow(masks, bit, set & !bit & !masks[v], 0, out);
}
