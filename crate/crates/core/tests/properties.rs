use proptest::prelude::*;

use hopfchrom::graphalg::{self, Method};
use hopfchrom::graphs::{automorphism_group, canonical_form, parse_graph6, to_graph6, Graph};
use hopfchrom::permgroups::Perm;
use hopfchrom::wreathhopf::{Coproduct, FunctionF, HopfElement, Instance, MBasisKey};
use hopfchrom::youngsets::{builtin, image_of_subset};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| *e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn arb_relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Perm)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|(g, images)| (g, Perm::from_images(images).unwrap()))
    })
}

fn keys_up_to(inst: &Instance, d: usize) -> Vec<MBasisKey> {
    (0..=d).flat_map(|k| inst.basis_keys(k).unwrap()).collect()
}

/// Small integer combinations of graph-instance basis keys of degree at most `d`.
fn arb_element_of(d: usize) -> impl Strategy<Value = HopfElement> {
    let keys = keys_up_to(&Instance::graphs(), d);
    let len = keys.len();
    proptest::collection::vec((0..len, -2i64..=2), 1..4)
        .prop_map(move |ts| HopfElement::from_terms(ts.into_iter().map(|(i, c)| (keys[i].clone(), c))))
}

fn arb_element() -> impl Strategy<Value = HopfElement> {
    arb_element_of(3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in arb_graph(8)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, w) in arb_relabelled(7)) {
        let h = g.relabel(&w);
        let cg = canonical_form(&g).unwrap();
        let ch = canonical_form(&h).unwrap();
        prop_assert_eq!(&cg.canonical, &ch.canonical);
        prop_assert_eq!(g.relabel(&cg.relabel), cg.canonical);
        prop_assert_eq!(
            automorphism_group(&g).unwrap().elements().len(),
            automorphism_group(&h).unwrap().elements().len()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn refinements_are_label_independent((g, w) in arb_relabelled(5)) {
        let h = g.relabel(&w);
        prop_assert_eq!(graphalg::x_chromatic(&g).unwrap(), graphalg::x_chromatic(&h).unwrap());
        prop_assert_eq!(
            graphalg::x_gamma(&g, 0, Method::Wreath).unwrap(),
            graphalg::x_gamma(&h, 0, Method::Direct).unwrap()
        );
    }

    #[test]
    fn burnside_matches_trivial_refinement(g in arb_graph(5), m in 0u64..5) {
        let x = graphalg::x_gamma(&g, 0, Method::Wreath).unwrap();
        prop_assert_eq!(x.specialize_ones(m), graphalg::orbit_count_burnside(&g, m as usize).unwrap().into());
    }

    #[test]
    fn psi_of_regular_embedding_is_stanley(g in arb_graph(5)) {
        let inst = Instance::graphs();
        let x = inst.psi(&graphalg::reg_embed(&g).unwrap()).unwrap();
        prop_assert_eq!(x, graphalg::x_chromatic(&g).unwrap());
    }

    #[test]
    fn product_is_commutative_and_associative(a in arb_element_of(2), b in arb_element_of(2), c in arb_element_of(2)) {
        let inst = Instance::graphs();
        let ab = inst.hopf_product(&a, &b).unwrap();
        prop_assert_eq!(&ab, &inst.hopf_product(&b, &a).unwrap());
        prop_assert_eq!(
            inst.hopf_product(&ab, &c).unwrap(),
            inst.hopf_product(&a, &inst.hopf_product(&b, &c).unwrap()).unwrap()
        );
    }

    #[test]
    fn coproducts_are_multiplicative(a in arb_element(), b in arb_element()) {
        let inst = Instance::graphs();
        let ab = inst.hopf_product(&a, &b).unwrap();
        for kind in [Coproduct::Full, Coproduct::Restricted] {
            let lhs = inst.coproduct(&ab, kind).unwrap();
            let rhs = inst
                .tensor_product(&inst.coproduct(&a, kind).unwrap(), &inst.coproduct(&b, kind).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn linear_maps_respect_sums(a in arb_element(), b in arb_element(), k in -3i64..=3) {
        let inst = Instance::graphs();
        let s = a.add(&b.scale(k));
        let ps = inst.psi(&s).unwrap();
        let want = inst.psi(&a).unwrap().add(&inst.psi(&b).unwrap().scale(k).unwrap()).unwrap();
        prop_assert_eq!(ps, want);
        prop_assert_eq!(inst.zeta(&s), inst.zeta(&a) + k * inst.zeta(&b));
        let d = inst.coproduct(&s, Coproduct::Restricted).unwrap();
        let da = inst.coproduct(&a, Coproduct::Restricted).unwrap();
        let db = inst.coproduct(&b, Coproduct::Restricted).unwrap();
        prop_assert_eq!(d, da.add(&db.scale(k)));
    }

    #[test]
    fn canonical_functions_are_fixed_points(g in arb_graph(5)) {
        let inst = Instance::graphs();
        let (c, w) = inst.canonicalize(&FunctionF::from_graph(&g)).unwrap();
        let (again, _) = inst.canonicalize(&c).unwrap();
        prop_assert_eq!(&again, &c);
        prop_assert_eq!(FunctionF::from_graph(&g).act(inst.young(), &w), c);
    }

    #[test]
    fn young_set_images_intersect(k in 0u32..64, l in 0u32..64) {
        let n = 6;
        let bits = |m: u32| (0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<usize>>();
        for name in ["subsets:2", "nonempty_subsets", "tuples:2", "product(id;subsets:2)"] {
            let y = builtin(name).unwrap();
            let a = image_of_subset(y.as_ref(), n, &bits(k));
            let b = image_of_subset(y.as_ref(), n, &bits(l));
            let both = image_of_subset(y.as_ref(), n, &bits(k & l));
            let mut inter: Vec<_> = a.into_iter().filter(|p| b.contains(p)).collect();
            let mut both = both;
            inter.sort();
            both.sort();
            prop_assert_eq!(inter, both, "{}", name);
        }
    }
}
