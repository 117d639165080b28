//! Proper vertex colourings: the [`Coloring`] value type, validation, exact
//! chromatic number, extremal colourings and the explicit colourings that
//! accompany each closed-form result.

mod phi;
mod witness;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use phi::{phi_minus, phi_plus, PhiVariant};
pub use witness::{witness, WitnessKind};

/// Vertex colouring with colour values `1..=num_colors`, indexed by vertex id.
///
/// Colourings built with [`Coloring::new`] use every colour in `1..=ℓ`,
/// where ℓ is the largest value present. [`Coloring::with_palette`] allows a
/// palette with unused colours (needed when enumerating with more colours
/// than the chromatic number). Properness is checked by [`validate`], not
/// by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    zeta: Vec<u32>,
    num_colors: u32,
}

impl Coloring {
    pub fn new(zeta: Vec<u32>) -> Result<Coloring> {
        let max = zeta.iter().copied().max().unwrap_or(0);
        let c = Coloring::with_palette(zeta, max)?;
        if !c.uses_all_colors() {
            return Err(Error::InvalidColoring(format!(
                "colours 1..={max} are not all used"
            )));
        }
        Ok(c)
    }

    pub fn with_palette(zeta: Vec<u32>, num_colors: u32) -> Result<Coloring> {
        if let Some(bad) = zeta.iter().find(|&&z| z == 0 || z > num_colors) {
            return Err(Error::InvalidColoring(format!(
                "colour {bad} outside 1..={num_colors}"
            )));
        }
        Ok(Coloring { zeta, num_colors })
    }

    pub fn values(&self) -> &[u32] {
        &self.zeta
    }

    pub fn color(&self, v: usize) -> u32 {
        self.zeta[v]
    }

    pub fn len(&self) -> usize {
        self.zeta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeta.is_empty()
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    /// Class strengths θ(c_1), …, θ(c_ℓ).
    pub fn strengths(&self) -> Vec<u64> {
        let mut theta = vec![0u64; self.num_colors as usize];
        for &z in &self.zeta {
            theta[z as usize - 1] += 1;
        }
        theta
    }

    pub fn uses_all_colors(&self) -> bool {
        self.strengths().iter().all(|&t| t > 0)
    }

    /// Colour reversal `s ↦ ℓ + 1 − s`.
    pub fn reversed(&self) -> Coloring {
        let top = self.num_colors + 1;
        Coloring {
            zeta: self.zeta.iter().map(|&z| top - z).collect(),
            num_colors: self.num_colors,
        }
    }

    /// Carries the colouring along a vertex relabeling `v ↦ perm[v]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Coloring {
        let mut zeta = vec![0; self.zeta.len()];
        for (v, &p) in perm.iter().enumerate() {
            zeta[p] = self.zeta[v];
        }
        Coloring {
            zeta,
            num_colors: self.num_colors,
        }
    }

    /// Applies a colour relabeling: colour `s` becomes `map[s - 1]`.
    pub fn map_colors(&self, map: &[u32]) -> Result<Coloring> {
        let zeta = self.zeta.iter().map(|&z| map[z as usize - 1]).collect();
        Coloring::with_palette(zeta, self.num_colors)
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.zeta.serialize(s)
    }
}

/// Edges whose endpoints share a colour; empty iff `c` is proper on `g`.
pub fn validate(g: &Graph, c: &Coloring) -> Result<Vec<(usize, usize)>> {
    if c.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            got: c.len(),
        });
    }
    Ok(g.edge_list()
        .into_iter()
        .filter(|&(a, b)| c.color(a) == c.color(b))
        .collect())
}

/// `Ok(())` for a proper colouring, otherwise the violating edges as an error.
pub fn ensure_proper(g: &Graph, c: &Coloring) -> Result<()> {
    let bad = validate(g, c)?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::Improper(bad))
    }
}

/// Exact chromatic number by iterative deepening from a clique lower bound.
pub fn chromatic_number(g: &Graph) -> u32 {
    if g.vertex_count() == 0 {
        return 0;
    }
    let mut k = greedy_clique(g).max(1);
    while find_coloring(g, k).is_none() {
        k += 1;
    }
    k
}

/// Size of a clique found greedily from every start vertex.
fn greedy_clique(g: &Graph) -> u32 {
    let mut best = 0;
    for v in 0..g.vertex_count() {
        let mut clique = vec![v];
        let mut cand: Vec<usize> = g.neighbors(v).to_vec();
        cand.sort_by_key(|&w| std::cmp::Reverse(g.neighbors(w).len()));
        for w in cand {
            if clique.iter().all(|&c| g.has_edge(c, w)) {
                clique.push(w);
            }
        }
        best = best.max(clique.len());
    }
    best as u32
}

/// Some proper colouring with at most `k` colours, found by DSATUR-ordered
/// backtracking.
pub fn find_coloring(g: &Graph, k: u32) -> Option<Vec<u32>> {
    let count = g.vertex_count();
    let mut colors = vec![0u32; count];
    if dsatur(g, k, &mut colors, 0, 0) {
        Some(colors)
    } else {
        None
    }
}

fn dsatur(g: &Graph, k: u32, colors: &mut [u32], done: usize, max_used: u32) -> bool {
    if done == colors.len() {
        return true;
    }
    // most saturated uncoloured vertex, then highest degree, then lowest id
    let mut pick = None;
    let mut pick_key = (0usize, 0usize);
    for v in 0..colors.len() {
        if colors[v] != 0 {
            continue;
        }
        let mut seen = 0u128;
        for &w in g.neighbors(v) {
            if colors[w] != 0 {
                seen |= 1 << colors[w];
            }
        }
        let key = (seen.count_ones() as usize, g.neighbors(v).len());
        if pick.is_none() || key > pick_key {
            pick = Some(v);
            pick_key = key;
        }
    }
    let v = pick.expect("an uncoloured vertex remains");
    let limit = k.min(max_used + 1);
    for c in 1..=limit {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if dsatur(g, k, colors, done + 1, max_used.max(c)) {
                return true;
            }
        }
    }
    colors[v] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, Family, FamilySpec};

    fn g(f: Family, n: u32) -> Graph {
        build(FamilySpec::new(f, n).unwrap()).unwrap()
    }

    #[test]
    fn validate_detects_conflicts() {
        let c4 = g(Family::Cycle, 4);
        let ok = Coloring::new(vec![1, 2, 1, 2]).unwrap();
        assert!(validate(&c4, &ok).unwrap().is_empty());

        let c3 = g(Family::Cycle, 3);
        let bad = Coloring::new(vec![1, 2, 2]).unwrap();
        assert_eq!(validate(&c3, &bad).unwrap(), vec![(1, 2)]);
        assert!(matches!(ensure_proper(&c3, &bad), Err(Error::Improper(_))));
    }

    #[test]
    fn validate_rejects_size_mismatch() {
        let c4 = g(Family::Cycle, 4);
        let short = Coloring::new(vec![1, 2]).unwrap();
        assert_eq!(
            validate(&c4, &short),
            Err(Error::SizeMismatch { expected: 4, got: 2 })
        );
    }

    #[test]
    fn coloring_must_be_surjective() {
        assert!(Coloring::new(vec![1, 3, 1]).is_err());
        assert!(Coloring::new(vec![0, 1]).is_err());
        let wide = Coloring::with_palette(vec![1, 3, 1, 3], 3).unwrap();
        assert!(!wide.uses_all_colors());
        assert_eq!(wide.strengths(), vec![2, 0, 2]);
    }

    #[test]
    fn reversal_flips_strengths() {
        let c = Coloring::new(vec![1, 1, 2, 3]).unwrap();
        assert_eq!(c.reversed().values(), &[3, 3, 2, 1]);
        assert_eq!(c.reversed().strengths(), vec![1, 1, 2]);
    }

    #[test]
    fn chromatic_numbers_of_known_graphs() {
        assert_eq!(chromatic_number(&g(Family::Flower, 6)), 3);
        assert_eq!(chromatic_number(&g(Family::Flower, 5)), 4);
        assert_eq!(chromatic_number(&g(Family::Cycle, 5)), 3);
        assert_eq!(chromatic_number(&g(Family::Cycle, 6)), 2);
        assert_eq!(chromatic_number(&g(Family::Wheel, 5)), 4);
        assert_eq!(chromatic_number(&Graph::from_edges(0, &[]).unwrap()), 0);
        assert_eq!(chromatic_number(&Graph::from_edges(3, &[]).unwrap()), 1);
    }

    #[test]
    fn closed_sunflower_and_blossom_chromatic_numbers() {
        // The apex/rim layer is the square of a 2n-cycle, which is
        // 3-colourable exactly when 3 | n; the closed sunflower hub only sees
        // the rim and always fits a fourth colour.
        for n in 4..=9 {
            assert_eq!(chromatic_number(&g(Family::ClosedSunflower, n)), 4, "csf {n}");
            let expect = if n % 3 == 0 { 4 } else { 5 };
            assert_eq!(chromatic_number(&g(Family::Blossom, n)), expect, "blossom {n}");
        }
    }

    #[test]
    fn find_coloring_is_proper() {
        let b = g(Family::Blossom, 7);
        let col = find_coloring(&b, 5).unwrap();
        let c = Coloring::with_palette(col, 5).unwrap();
        assert!(validate(&b, &c).unwrap().is_empty());
        assert!(find_coloring(&b, 4).is_none());
    }
}
