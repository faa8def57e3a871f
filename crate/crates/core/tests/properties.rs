//! Property tests over small catalog groups.

use isoclin_core::degrees::{nilpotency_degree_naive, relative_commutativity_degree};
use isoclin_core::io::{parse_group, write_table};
use isoclin_core::iso::automorphisms;
use isoclin_core::structure::subgroup_generated;
use isoclin_core::{
    are_n_isoclinic, catalog, check_diagram, commutativity_degree, find_isomorphism, relative_nilpotency_degree,
    ExactRatio, FiniteGroup, Subgroup,
};
use proptest::prelude::*;
use proptest::sample::{select, Index};

const SMALL: [&str; 12] = [
    "cyclic:6",
    "dihedral:8",
    "quaternion8",
    "symmetric:3",
    "dihedral:10",
    "alternating:4",
    "dicyclic:12",
    "elem_abelian:2:3",
    "product:dihedral:8*cyclic:2",
    "product:quaternion8*cyclic:2",
    "dihedral:16",
    "symmetric:4",
];

fn group() -> impl Strategy<Value = FiniteGroup> {
    select(&SMALL[..]).prop_map(|name| catalog::get(name).unwrap())
}

fn pick(g: &FiniteGroup, i: &Index) -> usize {
    i.index(g.order())
}

/// Same group with every non-identity element renamed by a shuffle.
fn relabel(g: &FiniteGroup, shuffle: &[usize]) -> FiniteGroup {
    let mut sigma = vec![0];
    sigma.extend(shuffle.iter().map(|&k| k % (g.order() - 1) + 1));
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    sigma.retain(|&x| x == 0 || !std::mem::replace(&mut seen[x], true));
    sigma.extend((1..g.order()).filter(|&x| !seen[x]));
    let mut table = vec![vec![0; g.order()]; g.order()];
    for a in g.elements() {
        for b in g.elements() {
            table[sigma[a]][sigma[b]] = sigma[g.mul(a, b)];
        }
    }
    FiniteGroup::from_mult_table(g.order(), &table).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_is_a_group(g in group(), a: Index, b: Index, c: Index) {
        let (x, y, z) = (pick(&g, &a), pick(&g, &b), pick(&g, &c));
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), x), x);
    }

    #[test]
    fn commutator_identities(g in group(), a: Index, b: Index) {
        let (x, y) = (pick(&g, &a), pick(&g, &b));
        prop_assert_eq!(g.inv(g.comm(x, y)), g.comm(y, x));
        prop_assert_eq!(g.comm(x, y) == g.identity(), g.commutes(x, y));
        prop_assert_eq!(g.commutator(&[x, y]).unwrap(), g.comm(x, y));
    }

    #[test]
    fn table_round_trip(g in group()) {
        let text = write_table(&g);
        let back = parse_group(&text).unwrap();
        prop_assert_eq!(write_table(&back), text);
        prop_assert_eq!(back.to_rows(), g.to_rows());
    }

    #[test]
    fn fast_degree_matches_naive(g in group(), a: Index, b: Index, n in 1usize..=3) {
        let h = subgroup_generated(&g, &[pick(&g, &a), pick(&g, &b)]);
        prop_assume!((h.order() as u128).pow(n as u32) * (g.order() as u128) <= 2_000_000);
        prop_assert_eq!(
            relative_nilpotency_degree(&h, &g, n).unwrap(),
            nilpotency_degree_naive(&h, &g, n).unwrap()
        );
    }

    #[test]
    fn relative_degree_is_sandwiched(g in group(), a: Index, b: Index) {
        let h = subgroup_generated(&g, &[pick(&g, &a), pick(&g, &b)]);
        let d = relative_commutativity_degree(&h, &g).unwrap();
        let hg = h.to_group(&g);
        prop_assert!(commutativity_degree(&g) <= d);
        prop_assert!(d <= commutativity_degree(&hg));
        prop_assert!(d <= ExactRatio::one());
    }

    #[test]
    fn relabelled_copies_are_isomorphic_and_isoclinic(g in group(), shuffle in prop::collection::vec(any::<usize>(), 0..32)) {
        let copy = relabel(&g, &shuffle);
        let iso = find_isomorphism(&g, &copy, None).unwrap().expect("relabelled copy");
        prop_assert!(iso.is_isomorphism(&g, &copy));
        prop_assert_eq!(commutativity_degree(&g), commutativity_degree(&copy));
        for n in 1..=2 {
            let w = are_n_isoclinic(&g, &copy, n).unwrap().expect("isomorphic groups are isoclinic");
            prop_assert!(check_diagram(&w, &Subgroup::whole(&g), &g, &Subgroup::whole(&copy), &copy, n));
        }
    }

    #[test]
    fn automorphisms_preserve_relative_degree(name in select(&SMALL[..9]), a: Index) {
        let g = catalog::get(name).unwrap();
        let h = subgroup_generated(&g, &[pick(&g, &a)]);
        let d = relative_nilpotency_degree(&h, &g, 1).unwrap();
        for phi in automorphisms(&g).unwrap() {
            prop_assert_eq!(relative_nilpotency_degree(&phi.map_subgroup(&h), &g, 1).unwrap(), d);
        }
    }
}
