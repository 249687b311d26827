//! Randomized invariants over permutations, groups, graphs and voltages.

use proptest::prelude::*;

use pentacover::algebra::{solve_extension, FpMatrix};
use pentacover::symmetry::{aut_group, isomorphic};
use pentacover::voltage::{canonical_representative, covers_isomorphic, derived, lifts, pullback, Dip5Voltage, DipAut};
use pentacover::{Graph, Perm, PermGroup};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_vec(v).unwrap())
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::build(n, edges).unwrap()
        })
    })
}

fn dipole_aut() -> impl Strategy<Value = DipAut> {
    let all = DipAut::all();
    (0..all.len()).prop_map(move |i| all[i])
}

/// Spanning voltages for `F_p^2`, p in {3, 5, 7}.
fn voltage() -> impl Strategy<Value = Dip5Voltage> {
    prop_oneof![Just(3u64), Just(5), Just(7)]
        .prop_flat_map(|p| (Just(p), proptest::collection::vec(proptest::collection::vec(0..p, 2), 4)))
        .prop_filter_map("voltages must span", |(p, rest)| {
            let mut zeta = vec![vec![0, 0]];
            zeta.extend(rest);
            Dip5Voltage::new(p, 2, zeta).ok()
        })
}

fn invertible(p: u64, n: usize) -> impl Strategy<Value = FpMatrix> {
    proptest::collection::vec(proptest::collection::vec(0..p, n), n)
        .prop_map(move |rows| FpMatrix::from_rows(p, &rows))
        .prop_filter("invertible", FpMatrix::is_invertible)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perm_group_laws(a in perm(9), b in perm(9), c in perm(9)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert_eq!(a.pow(a.order()), Perm::identity(9));
        let x = a.apply(3);
        prop_assert_eq!(a.then(&b).apply(3), b.apply(x));
        prop_assert_eq!(a.conj(&b), b.inverse().then(&a).then(&b));
    }

    #[test]
    fn generated_group_contains_products(a in perm(8), b in perm(8)) {
        let g = PermGroup::new(8, vec![a.clone(), b.clone()]).unwrap();
        prop_assert!(g.contains(&a.then(&b)).unwrap());
        prop_assert!(g.contains(&b.inverse().then(&a).then(&b)).unwrap());
        prop_assert_eq!(40320 % g.order(), 0);
        let orbit_total: usize = g.orbits().iter().map(Vec::len).sum();
        prop_assert_eq!(orbit_total, 8);
    }

    #[test]
    fn relabelled_graph_is_isomorphic(g in graph(9), p in perm(9)) {
        let n = g.vertex_count();
        // Restrict to the first n points by skipping images outside them.
        let images = (0..n)
            .map(|i| {
                let mut x = p.apply(i);
                while x >= n {
                    x = p.apply(x);
                }
                x
            })
            .collect();
        let p = Perm::from_vec(images).unwrap();
        let h = g.relabel(&p).unwrap();
        let map = isomorphic(&g, &h).unwrap();
        prop_assert!(map.is_some());
        prop_assert!(g.is_isomorphism(&h, &map.unwrap()));
        prop_assert_eq!(aut_group(&g).unwrap().order(), aut_group(&h).unwrap().order());
    }

    #[test]
    fn automorphisms_preserve_edges(g in graph(8)) {
        let aut = aut_group(&g).unwrap();
        for s in aut.generators() {
            prop_assert!(g.is_automorphism(s));
        }
    }

    #[test]
    fn edge_list_roundtrip(g in graph(12)) {
        let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn solve_extension_recovers_matrix(m in invertible(5, 3), extra in proptest::collection::vec(proptest::collection::vec(0u64..5, 3), 0..3)) {
        let mut sources: Vec<Vec<u64>> = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        sources.extend(extra);
        let targets: Vec<Vec<u64>> = sources.iter().map(|s| m.mul_vec(s)).collect();
        prop_assert_eq!(solve_extension(5, &sources, &targets).unwrap(), Some(m));
    }

    #[test]
    fn canonical_form_is_class_invariant(z in voltage(), d in dipole_aut(), m in invertible(7, 2)) {
        // Pull back by a dipole automorphism, then change basis where the prime allows it.
        let mut w = pullback(&z, &d);
        if z.p() == 7 {
            let zeta: Vec<Vec<u64>> = w.zeta().iter().map(|v| m.mul_vec(v)).collect();
            w = Dip5Voltage::new(7, 2, zeta).unwrap();
        }
        prop_assert_eq!(canonical_representative(&z), canonical_representative(&w));
        prop_assert!(covers_isomorphic(&z, &w).is_some());
    }

    #[test]
    fn lifts_are_cover_automorphisms(z in voltage(), d in dipole_aut()) {
        // Repeated voltages give parallel edges, which `derived` rejects.
        let Ok(g) = derived(&z) else { return Ok(()) };
        if let Some(m) = lifts(&z, &d) {
            let f = pentacover::voltage::lift_to_cover(&z, &d, &m).unwrap();
            prop_assert!(g.is_automorphism(&f));
        }
    }
}
