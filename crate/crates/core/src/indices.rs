//! Class profiles and the four chromatic indices of a coloured graph.
//!
//! For a proper colouring ζ with ℓ colours:
//!
//! * `M1 = Σ_v ζ(v)² = Σ_j θ_j·j²`
//! * `M2 = Σ_{uv∈E} ζ(u)·ζ(v) = Σ_{t<s} t·s·η_ts`
//! * `M3 = Σ_{uv∈E} |ζ(u) − ζ(v)| = Σ_{t<s} (s − t)·η_ts`
//! * `M4` (standard) `= Σ_{unordered pairs} |ζ(u) − ζ(v)| = Σ_{t<s} θ_t·θ_s·(s − t)`
//!
//! The closed-form results in the literature use half of the standard M4, so
//! both conventions are kept; the halved one is an exact rational.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::{ensure_proper, Coloring};
use crate::error::{Error, Result};
use crate::exact::{int, serialize_rational, Rational};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Index {
    M1,
    M2,
    M3,
    M4,
}

impl Index {
    pub const ALL: [Index; 4] = [Index::M1, Index::M2, Index::M3, Index::M4];

    pub fn name(self) -> &'static str {
        match self {
            Index::M1 => "m1",
            Index::M2 => "m2",
            Index::M3 => "m3",
            Index::M4 => "m4",
        }
    }

    /// M1–M3 are integers for every colouring; M4 (halved) may not be.
    pub fn is_integral(self) -> bool {
        self != Index::M4
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Index::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Unknown { what: "index", value: s.to_string() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum M4Convention {
    /// Sum over unordered vertex pairs.
    Standard,
    /// Half of the standard value.
    Paper,
}

/// Class strengths θ and cross-class edge counts η of a proper colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorProfile {
    theta: Vec<u64>,
    /// `eta[t][s]` for 0-based `t < s`; entries with `t >= s` stay zero.
    eta: Vec<Vec<u64>>,
}

impl ColorProfile {
    pub fn new(theta: Vec<u64>, eta: Vec<Vec<u64>>) -> Result<ColorProfile> {
        let l = theta.len();
        if eta.len() != l || eta.iter().any(|row| row.len() != l) {
            return Err(Error::InvalidColoring("eta must be an ℓ×ℓ matrix".into()));
        }
        for (t, row) in eta.iter().enumerate() {
            if row[..=t].iter().any(|&x| x != 0) {
                return Err(Error::InvalidColoring(
                    "eta must be strictly upper triangular".into(),
                ));
            }
        }
        Ok(ColorProfile { theta, eta })
    }

    pub fn num_colors(&self) -> usize {
        self.theta.len()
    }

    pub fn theta(&self) -> &[u64] {
        &self.theta
    }

    /// θ(c_j), 1-based.
    pub fn strength(&self, j: usize) -> u64 {
        self.theta[j - 1]
    }

    /// η_ts for 1-based colours `t < s`.
    pub fn eta(&self, t: usize, s: usize) -> u64 {
        assert!(t < s, "eta is indexed by t < s");
        self.eta[t - 1][s - 1]
    }

    pub fn eta_matrix(&self) -> &[Vec<u64>] {
        &self.eta
    }

    pub fn vertex_total(&self) -> u64 {
        self.theta.iter().sum()
    }

    pub fn edge_total(&self) -> u64 {
        self.eta.iter().flatten().sum()
    }

    /// Non-zero `(t, s, η_ts)` entries, 1-based, in lexicographic order.
    pub fn eta_entries(&self) -> Vec<(usize, usize, u64)> {
        let l = self.num_colors();
        let mut out = Vec::new();
        for t in 0..l {
            for s in t + 1..l {
                if self.eta[t][s] > 0 {
                    out.push((t + 1, s + 1, self.eta[t][s]));
                }
            }
        }
        out
    }

    /// Profile of the same partition with class `j` recoloured `perm[j - 1]`.
    pub fn relabeled(&self, perm: &[usize]) -> ColorProfile {
        let l = self.num_colors();
        let mut theta = vec![0; l];
        let mut eta = vec![vec![0; l]; l];
        for j in 0..l {
            theta[perm[j] - 1] = self.theta[j];
        }
        for t in 0..l {
            for s in t + 1..l {
                let (a, b) = (perm[t] - 1, perm[s] - 1);
                eta[a.min(b)][a.max(b)] += self.eta[t][s];
            }
        }
        ColorProfile { theta, eta }
    }
}

pub fn profile(g: &Graph, c: &Coloring) -> Result<ColorProfile> {
    ensure_proper(g, c)?;
    let l = c.num_colors() as usize;
    let mut eta = vec![vec![0u64; l]; l];
    for (a, b) in g.edge_list() {
        let (x, y) = (c.color(a) as usize - 1, c.color(b) as usize - 1);
        eta[x.min(y)][x.max(y)] += 1;
    }
    Ok(ColorProfile {
        theta: c.strengths(),
        eta,
    })
}

/// First chromatic Zagreb index from class strengths.
pub fn m1(p: &ColorProfile) -> u64 {
    p.theta
        .iter()
        .enumerate()
        .map(|(j, &t)| t * ((j + 1) as u64).pow(2))
        .sum()
}

/// First chromatic Zagreb index as a per-vertex sum.
pub fn m1_per_vertex(c: &Coloring) -> u64 {
    c.values().iter().map(|&z| (z as u64).pow(2)).sum()
}

pub fn m2(g: &Graph, c: &Coloring) -> Result<u64> {
    ensure_proper(g, c)?;
    Ok(g.edge_list()
        .into_iter()
        .map(|(a, b)| c.color(a) as u64 * c.color(b) as u64)
        .sum())
}

pub fn m3(g: &Graph, c: &Coloring) -> Result<u64> {
    ensure_proper(g, c)?;
    Ok(g.edge_list()
        .into_iter()
        .map(|(a, b)| c.color(a).abs_diff(c.color(b)) as u64)
        .sum())
}

/// `Σ_{t<s} t·s·η_ts`.
pub fn m2_from_profile(p: &ColorProfile) -> u64 {
    weighted_eta(p, |t, s| t * s)
}

/// `Σ_{t<s} (s − t)·η_ts`.
pub fn m3_from_profile(p: &ColorProfile) -> u64 {
    weighted_eta(p, |t, s| s - t)
}

fn weighted_eta(p: &ColorProfile, w: impl Fn(u64, u64) -> u64) -> u64 {
    p.eta_entries()
        .into_iter()
        .map(|(t, s, e)| w(t as u64, s as u64) * e)
        .sum()
}

pub fn m4_standard(p: &ColorProfile) -> u64 {
    let l = p.num_colors();
    let mut total = 0;
    for t in 0..l {
        for s in t + 1..l {
            total += p.theta[t] * p.theta[s] * (s - t) as u64;
        }
    }
    total
}

pub fn m4(p: &ColorProfile, convention: M4Convention) -> Rational {
    let std = int(m4_standard(p) as i64);
    match convention {
        M4Convention::Standard => std,
        M4Convention::Paper => std / 2,
    }
}

/// All four indices of one colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexBundle {
    pub m1: u64,
    pub m2: u64,
    pub m3: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub m4_paper: Rational,
    pub m4_std: u64,
}

impl IndexBundle {
    /// Value compared against closed forms (M4 in the halved convention).
    pub fn value(&self, index: Index) -> Rational {
        match index {
            Index::M1 => int(self.m1 as i64),
            Index::M2 => int(self.m2 as i64),
            Index::M3 => int(self.m3 as i64),
            Index::M4 => self.m4_paper,
        }
    }
}

pub fn bundle(g: &Graph, c: &Coloring) -> Result<IndexBundle> {
    let p = profile(g, c)?;
    let m1_classes = m1(&p);
    assert_eq!(m1_classes, m1_per_vertex(c), "M1 class/vertex sums disagree");
    Ok(IndexBundle {
        m1: m1_classes,
        m2: m2(g, c)?,
        m3: m3(g, c)?,
        m4_paper: m4(&p, M4Convention::Paper),
        m4_std: m4_standard(&p),
    })
}
