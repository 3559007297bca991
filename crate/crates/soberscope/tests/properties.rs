//! Property tests for the order-topological laws the library exposes.

use proptest::prelude::*;

use soberscope::gen::{random_t0_space, sample_rng};
use soberscope::johnstone::descriptor::{DescriptorSpec, JClosedDescriptor};
use soberscope::johnstone::{j_leq, Ambient, JElement};
use soberscope::map::SpaceMap;
use soberscope::sobriety::{
    check_sobriety, derive_si, is_continuous, is_si_closed, is_si_open, kb_sober_iff_si_identity,
    si_continuity_iff_sup_preserving, SobrietyProperty,
};
use soberscope::space::{alexandroff, FiniteSpace};
use soberscope::{FinitePoset, Subset};

fn poset_strategy(max: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::ANY, n * n).prop_map(move |edges| {
            let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if edges[i * n + j] {
                        pairs.push((i, j));
                    }
                }
            }
            FinitePoset::new(labels, &pairs).expect("DAG closure is a poset")
        })
    })
}

fn space_strategy(max: usize) -> impl Strategy<Value = FiniteSpace> {
    poset_strategy(max).prop_map(|p| alexandroff(&p))
}

proptest! {
    #[test]
    fn opens_are_up_sets_and_closeds_are_down_sets(space in space_strategy(6)) {
        let poset = space.specialization_poset().unwrap();
        for &u in space.opens() {
            prop_assert!(poset.is_up_set(u));
        }
        for c in space.closeds() {
            prop_assert!(poset.is_down_set(c));
        }
    }

    #[test]
    fn point_closures_are_down_sets_of_specialization(space in space_strategy(6)) {
        for a in 0..space.len() {
            let down = Subset::from_indices(
                (0..space.len()).filter(|&x| space.specialization_leq(x, a)),
            );
            prop_assert_eq!(space.closure(Subset::singleton(a)), down);
        }
    }

    #[test]
    fn sup_agrees_with_sup_of_closure(space in space_strategy(6)) {
        for s in Subset::all(space.len()) {
            let direct = space.sup(s).unwrap();
            let closed = space.sup(space.closure(s)).unwrap();
            prop_assert_eq!(direct, closed);
        }
    }

    #[test]
    fn alexandroff_inverts_specialization(poset in poset_strategy(6)) {
        let space = alexandroff(&poset);
        let back = space.specialization_poset().unwrap();
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                prop_assert_eq!(poset.leq(i, j), back.leq(i, j));
            }
        }
    }

    #[test]
    fn irreducible_closed_sets_are_the_point_closures(space in space_strategy(6)) {
        let records = space.irreducible_closed_records().unwrap();
        let mut expected: Vec<Subset> =
            (0..space.len()).map(|x| space.point_closure(x)).collect();
        expected.sort();
        expected.dedup();
        let got: Vec<Subset> = records.iter().map(|r| r.set).collect();
        prop_assert_eq!(got, expected);
        for r in &records {
            prop_assert!(r.generic_point.is_some());
            prop_assert_eq!(r.sup, r.generic_point);
        }
    }

    #[test]
    fn irreducibility_criteria_agree(space in space_strategy(5)) {
        for s in Subset::all(space.len()) {
            prop_assert_eq!(
                space.is_irreducible(s),
                space.is_irreducible_definitional(s)
            );
        }
    }

    #[test]
    fn closed_directedness_matches_irreducibility(space in space_strategy(6)) {
        for c in space.closeds() {
            if !c.is_empty() {
                prop_assert_eq!(space.is_directed(c), space.is_irreducible(c));
            }
        }
    }

    #[test]
    fn si_topology_is_coarser_and_idempotent(space in space_strategy(6)) {
        let derived = derive_si(&space).unwrap();
        for &u in derived.si_opens() {
            prop_assert!(space.is_open(u));
        }
        let twice = derive_si(&derived.space()).unwrap();
        prop_assert_eq!(twice.si_opens(), derived.si_opens());
    }

    #[test]
    fn si_closed_iff_complement_si_open(space in space_strategy(6)) {
        for c in space.closeds() {
            let open_side = is_si_open(&space, c.complement(space.len())).unwrap();
            prop_assert_eq!(is_si_closed(&space, c).unwrap(), open_side);
        }
    }

    #[test]
    fn sobriety_implication_chain(space in space_strategy(6)) {
        let sober = check_sobriety(&space, SobrietyProperty::Sober).unwrap().holds;
        let bounded = check_sobriety(&space, SobrietyProperty::BoundedSober).unwrap().holds;
        let k_bounded = check_sobriety(&space, SobrietyProperty::KBoundedSober).unwrap().holds;
        prop_assert!(!sober || bounded);
        prop_assert!(!bounded || k_bounded);
    }

    #[test]
    fn kb_sobriety_equivalence_never_fails(space in space_strategy(6)) {
        prop_assert!(kb_sober_iff_si_identity(&space).unwrap());
    }
}

fn descriptor_strategy() -> impl Strategy<Value = JClosedDescriptor> {
    (
        0u64..=10,
        proptest::collection::vec((1u64..=10, 1u64..=10), 0..3),
        proptest::collection::vec(1u64..=10, 0..2),
        proptest::bool::ANY,
    )
        .prop_map(|(strip, extras, tops, whole)| {
            if whole {
                return JClosedDescriptor::whole_grid();
            }
            let strip = strip.max(tops.iter().copied().max().unwrap_or(0));
            let extras: Vec<(u64, u64)> = extras
                .into_iter()
                .filter(|(c, h)| *h > strip && !tops.contains(c))
                .collect();
            JClosedDescriptor::new(
                Ambient::P,
                &DescriptorSpec {
                    whole: false,
                    strip,
                    extras,
                    tops: tops.clone(),
                    apexes: vec![],
                },
            )
            .expect("constructed within the invariants")
        })
}

fn element_strategy() -> impl Strategy<Value = JElement> {
    prop_oneof![
        (1u64..=14, 1u64..=14).prop_map(|(c, h)| JElement::finite(c, h)),
        (1u64..=14).prop_map(JElement::column_top),
    ]
}

proptest! {
    #[test]
    fn descriptor_lattice_operations_match_membership(
        a in descriptor_strategy(),
        b in descriptor_strategy(),
        e in element_strategy(),
    ) {
        prop_assert_eq!(a.union(&b).contains(e), a.contains(e) || b.contains(e));
        prop_assert_eq!(a.intersect(&b).contains(e), a.contains(e) && b.contains(e));
    }

    #[test]
    fn descriptor_subset_is_membership_sound(
        a in descriptor_strategy(),
        b in descriptor_strategy(),
        e in element_strategy(),
    ) {
        if a.is_subset_of(&b) && a.contains(e) {
            prop_assert!(b.contains(e));
        }
        prop_assert!(a.is_subset_of(&a.union(&b)));
        prop_assert!(a.intersect(&b).is_subset_of(&a));
    }

    #[test]
    fn point_closure_membership_is_the_order(
        e in element_strategy(),
        probe in element_strategy(),
    ) {
        let d = JClosedDescriptor::point_closure(Ambient::P, e).unwrap();
        prop_assert_eq!(d.contains(probe), j_leq(Ambient::P, probe, e).unwrap());
    }
}

/// All continuous maps between small random spaces satisfy: continuity
/// between the SI-spaces is the same thing as preserving existing
/// irreducible suprema.
#[test]
fn si_continuity_equivalence_over_exhaustive_map_sweeps() {
    for i in 0..30 {
        let mut rng = sample_rng(0x24, i);
        let source = random_t0_space(&mut rng, 4);
        let target = random_t0_space(&mut rng, 4);
        for table in soberscope::gen::all_tables(source.len(), target.len()) {
            let map = SpaceMap::new(source.clone(), target.clone(), table).unwrap();
            if is_continuous(&map) {
                assert!(si_continuity_iff_sup_preserving(&map).unwrap());
            }
        }
    }
}

/// Products of up to three factors: the irreducible closed sets of the
/// product are exactly the products of irreducible closed sets of the
/// factors.
#[test]
fn product_irreducibles_are_products_of_factor_irreducibles() {
    let fixed: Vec<Vec<FiniteSpace>> = {
        let sierpinski = FiniteSpace::new(
            &["a", "b"],
            vec![Subset::EMPTY, Subset::from_indices([1]), Subset::full(2)],
        )
        .unwrap();
        let point = FiniteSpace::new(&["*"], vec![Subset::EMPTY, Subset::full(1)]).unwrap();
        let chain3 = alexandroff(
            &FinitePoset::new(
                vec!["0".into(), "1".into(), "2".into()],
                &[(0, 1), (1, 2)],
            )
            .unwrap(),
        );
        let vee = alexandroff(
            &FinitePoset::new(
                vec!["a".into(), "b".into(), "c".into()],
                &[(0, 2), (1, 2)],
            )
            .unwrap(),
        );
        vec![
            vec![sierpinski.clone(), sierpinski.clone()],
            vec![sierpinski.clone(), chain3.clone(), vee.clone()],
            vec![chain3.clone(), chain3.clone(), chain3],
            vec![sierpinski, vee, point],
        ]
    };
    let mut ran = 0;
    for factors in &fixed {
        check_product_irreducibles(factors);
        ran += 1;
    }
    // Seeded random triples, skipping products whose open family would
    // not materialize under the cap.
    for i in 0..40 {
        let mut rng = sample_rng(0x27, i);
        let factors: Vec<FiniteSpace> = (0..3).map(|_| random_t0_space(&mut rng, 3)).collect();
        let refs: Vec<&FiniteSpace> = factors.iter().collect();
        if soberscope::space::product(&refs).is_ok() {
            check_product_irreducibles(&factors);
            ran += 1;
        }
    }
    assert!(ran >= 15, "only {ran} product samples materialized");
}

fn check_product_irreducibles(factors: &[FiniteSpace]) {
    let refs: Vec<&FiniteSpace> = factors.iter().collect();
    let prod = soberscope::space::product(&refs).unwrap();
    let got: Vec<Subset> = prod
        .irreducible_closed_records()
        .unwrap()
        .iter()
        .map(|r| r.set)
        .collect();
    // Products of factor irreducible closed sets, as subsets of the
    // product carrier (tuples indexed with the last factor fastest).
    let factor_records: Vec<Vec<Subset>> = factors
        .iter()
        .map(|f| {
            f.irreducible_closed_records()
                .unwrap()
                .iter()
                .map(|r| r.set)
                .collect()
        })
        .collect();
    let mut expected = vec![Subset::EMPTY.complement(0)];
    expected.clear();
    let mut combos: Vec<Vec<Subset>> = vec![Vec::new()];
    for choices in &factor_records {
        let mut next = Vec::new();
        for combo in &combos {
            for &c in choices {
                let mut combo = combo.clone();
                combo.push(c);
                next.push(combo);
            }
        }
        combos = next;
    }
    for combo in combos {
        let mut mask = Subset::EMPTY;
        let mut index = 0usize;
        let mut stack: Vec<(usize, usize)> = Vec::new(); // (factor, point)
        // Enumerate tuples in the same mixed-radix order as `product`.
        fn walk(
            factors: &[FiniteSpace],
            combo: &[Subset],
            depth: usize,
            index: &mut usize,
            mask: &mut Subset,
            inside: bool,
        ) {
            if depth == factors.len() {
                if inside {
                    *mask = mask.with(*index);
                }
                *index += 1;
                return;
            }
            for p in 0..factors[depth].len() {
                walk(
                    factors,
                    combo,
                    depth + 1,
                    index,
                    mask,
                    inside && combo[depth].contains(p),
                );
            }
        }
        walk(factors, &combo, 0, &mut index, &mut mask, true);
        let _ = &mut stack;
        expected.push(mask);
    }
    expected.sort();
    expected.dedup();
    assert_eq!(got, expected, "factors: {factors:?}");
}
