mod common;

use chromind_core::indices::{bundle, m1, m1_per_vertex, m2_from_profile, m3_from_profile, profile};
use chromind_core::oracle::{permutation_extrema, Goal, Objective};
use chromind_core::exact::int;
use proptest::prelude::*;

use common::{rearrangement_m1_min, samples, Sample};

fn check(s: &Sample) -> Result<(), TestCaseError> {
    let g = &s.graph;
    let c = &s.coloring;
    let p = profile(g, c).unwrap();
    let b = bundle(g, c).unwrap();
    let edges = g.edge_count() as u64;

    prop_assert_eq!(p.vertex_total(), g.vertex_count() as u64);
    prop_assert_eq!(p.edge_total(), edges);
    prop_assert_eq!(m1(&p), m1_per_vertex(c));
    prop_assert_eq!(m2_from_profile(&p), b.m2);
    prop_assert_eq!(m3_from_profile(&p), b.m3);
    prop_assert!(b.m2 >= 2 * edges);
    prop_assert!(edges <= b.m3 && b.m3 <= b.m4_std);
    prop_assert_eq!(b.m4_paper * 2, int(b.m4_std as i64));

    let rev = bundle(g, &c.reversed()).unwrap();
    prop_assert_eq!(rev.m3, b.m3);
    prop_assert_eq!(rev.m4_std, b.m4_std);

    let moved = bundle(&g.relabel(&s.perm).unwrap(), &c.relabel_vertices(&s.perm)).unwrap();
    prop_assert_eq!(moved, b);

    let perm_min = permutation_extrema(&p, Objective::M1, Goal::Min).unwrap();
    prop_assert_eq!(perm_min, int(rearrangement_m1_min(p.theta()) as i64));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn index_invariants_hold_for_random_proper_colourings(s in samples(8, 17)) {
        check(&s)?;
    }

    #[test]
    fn random_colourings_are_proper(s in samples(8, 17)) {
        prop_assert!(chromind_core::coloring::validate(&s.graph, &s.coloring).unwrap().is_empty());
    }
}
