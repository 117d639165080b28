//! Ground truth by exhaustive search.
//!
//! [`enumerate`] walks every proper colouring with colours `1..=k` in
//! canonical order (vertex 0 varies slowest, colours ascending).
//! [`extrema`] finds the optimum of one index over that space with
//! branch-and-bound; [`extrema_exhaustive`] computes the same optimum
//! without pruning, from the enumeration and full index evaluation.
//! [`permutation_extrema`] optimises over the ℓ! relabelings of one fixed
//! class partition.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::graph::Graph;
use crate::indices::{bundle, ColorProfile, Index};

/// Quantity optimised by the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    M1,
    M2,
    M3,
    M4Paper,
    M4Std,
}

impl Objective {
    pub const ALL: [Objective; 5] = [
        Objective::M1,
        Objective::M2,
        Objective::M3,
        Objective::M4Paper,
        Objective::M4Std,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Objective::M1 => "m1",
            Objective::M2 => "m2",
            Objective::M3 => "m3",
            Objective::M4Paper => "m4_paper",
            Objective::M4Std => "m4_std",
        }
    }

    /// Objective used to check a closed form for `index`.
    pub fn for_index(index: Index) -> Objective {
        match index {
            Index::M1 => Objective::M1,
            Index::M2 => Objective::M2,
            Index::M3 => Objective::M3,
            Index::M4 => Objective::M4Paper,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "m4" {
            return Ok(Objective::M4Paper);
        }
        Objective::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::Unknown { what: "objective", value: s.to_string() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Goal {
    Min,
    Max,
}

impl Goal {
    fn improves(self, candidate: i64, incumbent: i64) -> bool {
        match self {
            Goal::Min => candidate < incumbent,
            Goal::Max => candidate > incumbent,
        }
    }
}

impl FromStr for Goal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Goal::Min),
            "max" => Ok(Goal::Max),
            _ => Err(Error::Unknown { what: "goal", value: s.to_string() }),
        }
    }
}

/// Optimal value together with the first colouring (in enumeration order)
/// that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremum {
    pub value: Rational,
    pub witness: Coloring,
}

/// Lazy stream of all proper colourings of `g` with colours from `1..=k`.
pub fn enumerate(g: &Graph, k: u32, budget: Budget) -> Result<ColoringIter> {
    budget.check(g.vertex_count())?;
    let earlier = (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| w < v).collect())
        .collect();
    Ok(ColoringIter {
        earlier,
        k,
        colors: vec![0; g.vertex_count()],
        depth: 0,
        started: false,
        done: k == 0 && g.vertex_count() > 0,
    })
}

pub struct ColoringIter {
    earlier: Vec<Vec<usize>>,
    k: u32,
    colors: Vec<u32>,
    depth: usize,
    started: bool,
    done: bool,
}

impl Iterator for ColoringIter {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let count = self.colors.len();
        if count == 0 {
            self.done = true;
            return Coloring::with_palette(Vec::new(), self.k).ok();
        }
        if self.started {
            self.depth = count - 1;
        }
        self.started = true;
        loop {
            let v = self.depth;
            let next = (self.colors[v] + 1..=self.k)
                .find(|&c| self.earlier[v].iter().all(|&w| self.colors[w] != c));
            match next {
                Some(c) => {
                    self.colors[v] = c;
                    if v + 1 == count {
                        let c = Coloring::with_palette(self.colors.clone(), self.k)
                            .expect("colours lie in 1..=k");
                        return Some(c);
                    }
                    self.depth += 1;
                }
                None => {
                    self.colors[v] = 0;
                    if v == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                }
            }
        }
    }
}

/// Optimum of `objective` over all proper colourings with colours `1..=k`,
/// by branch-and-bound. `Ok(None)` when no such colouring exists.
pub fn extrema(
    g: &Graph,
    k: u32,
    objective: Objective,
    goal: Goal,
    budget: Budget,
) -> Result<Option<Extremum>> {
    budget.check(g.vertex_count())?;
    let count = g.vertex_count();
    if count == 0 || k == 0 {
        return extrema_exhaustive(g, k, objective, goal, budget);
    }
    let kernel = Kernel::new(g, k, objective);
    // Split on the colour of vertex 0; each branch keeps its own incumbent
    // and the merge prefers the earlier branch on ties, which reproduces the
    // sequential first-attained witness.
    let branches: Vec<Option<(i64, Vec<u32>)>> = (1..=k)
        .into_par_iter()
        .map(|c0| {
            let mut state = State::new(&kernel);
            state.assign(&kernel, 0, c0);
            let mut best = None;
            kernel.descend(&mut state, 1, goal, &mut best);
            best
        })
        .collect();
    let mut winner: Option<(i64, Vec<u32>)> = None;
    for found in branches.into_iter().flatten() {
        if winner.as_ref().is_none_or(|w| goal.improves(found.0, w.0)) {
            winner = Some(found);
        }
    }
    Ok(winner.map(|(raw, colors)| Extremum {
        value: kernel.finish(raw),
        witness: Coloring::with_palette(colors, k).expect("colours lie in 1..=k"),
    }))
}

/// Same contract as [`extrema`], computed by scoring every enumerated
/// colouring with the full index evaluation.
pub fn extrema_exhaustive(
    g: &Graph,
    k: u32,
    objective: Objective,
    goal: Goal,
    budget: Budget,
) -> Result<Option<Extremum>> {
    let mut best: Option<Extremum> = None;
    for c in enumerate(g, k, budget)? {
        let b = bundle(g, &c)?;
        let value = match objective {
            Objective::M1 => int(b.m1 as i64),
            Objective::M2 => int(b.m2 as i64),
            Objective::M3 => int(b.m3 as i64),
            Objective::M4Paper => b.m4_paper,
            Objective::M4Std => int(b.m4_std as i64),
        };
        let better = match &best {
            None => true,
            Some(e) => match goal {
                Goal::Min => value < e.value,
                Goal::Max => value > e.value,
            },
        };
        if better {
            best = Some(Extremum { value, witness: c });
        }
    }
    Ok(best)
}

/// Optimum of `objective` over the ℓ! colour relabelings of the class
/// partition described by `p` (class `j` has strength `θ_j`, and `η_ts`
/// edges run between classes `t` and `s`).
pub fn permutation_extrema(p: &ColorProfile, objective: Objective, goal: Goal) -> Result<Rational> {
    permutation_optimum(p, objective, goal).map(|(value, _)| value)
}

/// Like [`permutation_extrema`], also returning the first optimal relabeling
/// in lexicographic order: class `j` receives colour `perm[j - 1]`.
pub fn permutation_optimum(
    p: &ColorProfile,
    objective: Objective,
    goal: Goal,
) -> Result<(Rational, Vec<u32>)> {
    let l = p.num_colors();
    if l > 8 {
        return Err(Error::TooManyClasses(l));
    }
    let theta = p.theta();
    let eta = p.eta_entries();
    let score = |perm: &[usize]| -> i64 {
        let lab = |j: usize| perm[j - 1] as i64;
        match objective {
            Objective::M1 => theta
                .iter()
                .enumerate()
                .map(|(j, &t)| t as i64 * lab(j + 1).pow(2))
                .sum(),
            Objective::M2 => eta.iter().map(|&(t, s, e)| e as i64 * lab(t) * lab(s)).sum(),
            Objective::M3 => eta
                .iter()
                .map(|&(t, s, e)| e as i64 * (lab(t) - lab(s)).abs())
                .sum(),
            Objective::M4Paper | Objective::M4Std => {
                let mut total = 0;
                for t in 1..=l {
                    for s in t + 1..=l {
                        total += (theta[t - 1] * theta[s - 1]) as i64 * (lab(t) - lab(s)).abs();
                    }
                }
                total
            }
        }
    };
    let mut best: Option<(i64, Vec<usize>)> = None;
    for perm in (1..=l).permutations(l) {
        let value = score(&perm);
        if best.as_ref().is_none_or(|b| goal.improves(value, b.0)) {
            best = Some((value, perm));
        }
    }
    let (raw, perm) = best.unwrap_or_default();
    let value = match objective {
        Objective::M4Paper => int(raw) / 2,
        _ => int(raw),
    };
    Ok((value, perm.into_iter().map(|c| c as u32).collect()))
}

/// Incremental scoring and optimistic bounds for one objective. Values are
/// kept as integers; the halved M4 is divided at the end.
struct Kernel {
    k: u32,
    objective: Objective,
    earlier: Vec<Vec<usize>>,
}

struct State {
    colors: Vec<u32>,
    theta: Vec<i64>,
    value: i64,
}

impl State {
    fn new(kernel: &Kernel) -> State {
        State {
            colors: vec![0; kernel.earlier.len()],
            theta: vec![0; kernel.k as usize + 1],
            value: 0,
        }
    }

    fn assign(&mut self, kernel: &Kernel, v: usize, c: u32) -> i64 {
        let delta = kernel.delta(self, v, c);
        self.colors[v] = c;
        self.theta[c as usize] += 1;
        self.value += delta;
        delta
    }

    fn unassign(&mut self, v: usize, delta: i64) {
        self.theta[self.colors[v] as usize] -= 1;
        self.colors[v] = 0;
        self.value -= delta;
    }
}

impl Kernel {
    fn new(g: &Graph, k: u32, objective: Objective) -> Kernel {
        let earlier = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().copied().filter(|&w| w < v).collect())
            .collect();
        Kernel {
            k,
            objective,
            earlier,
        }
    }

    fn finish(&self, raw: i64) -> Rational {
        match self.objective {
            Objective::M4Paper => int(raw) / 2,
            _ => int(raw),
        }
    }

    fn delta(&self, state: &State, v: usize, c: u32) -> i64 {
        let c = c as i64;
        match self.objective {
            Objective::M1 => c * c,
            Objective::M2 => self.earlier[v]
                .iter()
                .map(|&w| c * state.colors[w] as i64)
                .sum(),
            Objective::M3 => self.earlier[v]
                .iter()
                .map(|&w| (c - state.colors[w] as i64).abs())
                .sum(),
            Objective::M4Paper | Objective::M4Std => (1..=self.k as i64)
                .map(|d| state.theta[d as usize] * (c - d).abs())
                .sum(),
        }
    }

    /// Optimistic contribution of vertices `depth..` given the assigned
    /// prefix: a lower bound for `Min`, an upper bound for `Max`. `None`
    /// when some unassigned vertex has no colour left.
    fn bound(&self, state: &State, depth: usize, goal: Goal) -> Option<i64> {
        let k = self.k as i64;
        let count = state.colors.len();
        let remaining = (count - depth) as i64;
        let mut total = 0i64;
        match self.objective {
            Objective::M1 => {
                for v in depth..count {
                    let allowed = (1..=k).filter(|&c| {
                        self.earlier[v]
                            .iter()
                            .all(|&w| w >= depth || state.colors[w] as i64 != c)
                    });
                    let pick = match goal {
                        Goal::Min => allowed.min(),
                        Goal::Max => allowed.max(),
                    }?;
                    total += pick * pick;
                }
            }
            Objective::M2 | Objective::M3 => {
                for v in depth..count {
                    for &w in &self.earlier[v] {
                        let fixed = (w < depth).then(|| state.colors[w] as i64);
                        total += self.edge_bound(fixed, goal);
                    }
                }
            }
            Objective::M4Paper | Objective::M4Std => match goal {
                Goal::Min => {
                    // unassigned endpoints of an edge must still differ
                    total = (depth..count).map(|v| self.earlier[v].len() as i64).sum();
                }
                Goal::Max => {
                    let to_assigned: i64 = (1..=k)
                        .map(|d| state.theta[d as usize] * (d - 1).max(k - d))
                        .sum();
                    total = remaining * to_assigned + remaining * (remaining - 1) / 2 * (k - 1);
                }
            },
        }
        Some(total)
    }

    /// Bound for an edge whose later endpoint is unassigned; `fixed` is the
    /// colour of the other endpoint when it is already assigned.
    fn edge_bound(&self, fixed: Option<i64>, goal: Goal) -> i64 {
        let k = self.k as i64;
        match (self.objective, goal, fixed) {
            (Objective::M2, Goal::Min, Some(a)) => a * if a == 1 { 2 } else { 1 },
            (Objective::M2, Goal::Min, None) => 2,
            (Objective::M2, Goal::Max, Some(a)) => a * if a == k { k - 1 } else { k },
            (Objective::M2, Goal::Max, None) => k * (k - 1),
            (_, Goal::Min, _) => 1,
            (_, Goal::Max, Some(a)) => (a - 1).max(k - a),
            (_, Goal::Max, None) => k - 1,
        }
    }

    fn descend(&self, state: &mut State, depth: usize, goal: Goal, best: &mut Option<(i64, Vec<u32>)>) {
        if depth == state.colors.len() {
            if best.as_ref().is_none_or(|b| goal.improves(state.value, b.0)) {
                *best = Some((state.value, state.colors.clone()));
            }
            return;
        }
        if let Some((incumbent, _)) = best {
            match self.bound(state, depth, goal) {
                None => return,
                Some(b) if !goal.improves(state.value + b, *incumbent) => return,
                Some(_) => {}
            }
        }
        for c in 1..=self.k {
            if self.earlier[depth].iter().any(|&w| state.colors[w] == c) {
                continue;
            }
            let delta = state.assign(self, depth, c);
            self.descend(state, depth + 1, goal, best);
            state.unassign(depth, delta);
        }
    }
}
