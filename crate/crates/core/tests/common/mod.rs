#![allow(dead_code)]

use chromind_core::coloring::{chromatic_number, Coloring};
use chromind_core::{build, Family, FamilySpec, Graph};
use proptest::prelude::*;

/// A family member with at most `max_vertices` vertices, a palette size and
/// a proper colouring drawn by picking, vertex by vertex, one of the colours
/// its earlier neighbours leave free.
#[derive(Debug, Clone)]
pub struct Sample {
    pub graph: Graph,
    pub k: u32,
    pub coloring: Coloring,
    pub perm: Vec<usize>,
}

pub fn family_graph(family: Family, n: u32) -> Graph {
    build(FamilySpec::new(family, n).unwrap()).unwrap()
}

fn max_n(family: Family, max_vertices: usize) -> u32 {
    let per_n = match family {
        Family::Cycle => 1,
        Family::Wheel => 1,
        _ => 2,
    };
    let fixed = if family == Family::Cycle { 0 } else { 1 };
    ((max_vertices - fixed) / per_n) as u32
}

fn realise(graph: Graph, extra: u32, picks: &[u32], perm_keys: &[u64]) -> Sample {
    let k = chromatic_number(&graph) + extra;
    let count = graph.vertex_count();
    let mut zeta = vec![0u32; count];
    for v in 0..count {
        let free: Vec<u32> = (1..=k)
            .filter(|&c| graph.neighbors(v).iter().all(|&w| w > v || zeta[w] != c))
            .collect();
        zeta[v] = if free.is_empty() {
            0
        } else {
            free[picks[v] as usize % free.len()]
        };
    }
    let zeta = if zeta.contains(&0) {
        // greedy dead end: fall back to an exact colouring
        chromind_core::coloring::find_coloring(&graph, k).unwrap()
    } else {
        zeta
    };
    let mut perm: Vec<usize> = (0..count).collect();
    perm.sort_by_key(|&i| (perm_keys[i], i));
    Sample {
        coloring: Coloring::with_palette(zeta, k).unwrap(),
        graph,
        k,
        perm,
    }
}

/// Random proper colourings of every family with n ≤ `max_n_all` and at most
/// `max_vertices` vertices, palette χ..χ+2.
pub fn samples(max_n_all: u32, max_vertices: usize) -> impl Strategy<Value = Sample> {
    let families: Vec<(Family, u32)> = Family::ALL
        .iter()
        .flat_map(|&f| (3..=max_n_all.min(max_n(f, max_vertices))).map(move |n| (f, n)))
        .collect();
    (
        proptest::sample::select(families),
        0u32..=2,
        proptest::collection::vec(any::<u32>(), max_vertices),
        proptest::collection::vec(any::<u64>(), max_vertices),
    )
        .prop_map(|((f, n), extra, picks, keys)| realise(family_graph(f, n), extra, &picks, &keys))
}

/// Colours 1..=ℓ given to classes by decreasing size: the smallest Σ θ_j·π(j)².
pub fn rearrangement_m1_min(theta: &[u64]) -> u64 {
    let mut sorted = theta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .enumerate()
        .map(|(i, &t)| t * ((i as u64 + 1) * (i as u64 + 1)))
        .sum()
}
