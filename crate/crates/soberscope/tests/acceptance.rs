//! Acceptance suite: one test per criterion, each with its own time
//! budget pinned in code. Run with `--nocapture` to see the per-criterion
//! summary lines.

use std::time::{Duration, Instant};

use soberscope::constructions::{quotient_si_homeomorphism, reflector, UniquenessMode};
use soberscope::gen::{
    random_reflective_map, random_t0_space, random_t0_space_exact, sample_rng,
};
use soberscope::johnstone::chain::{
    check_sobriety_chain, derive_si_chain, is_qk_bounded_sober_chain,
    quotient_si_homeomorphism_chain, xi_properties, xi_universal_factorization, ChainOpen,
    ChainSpace, ChainTopology,
};
use soberscope::johnstone::descriptor::{sup_of, DescriptorSpec, JClosedDescriptor};
use soberscope::johnstone::quotient::is_qk_bounded_sober_grid;
use soberscope::johnstone::truncation::{raw_contains, LubOutcome, TruncatedPoset};
use soberscope::johnstone::{
    run_scenario, Ambient, JElement, JTopologyKind, Scenario,
};
use soberscope::sobriety::{check_sobriety, derive_si, SobrietyProperty};
use soberscope::space::product;
use soberscope::{FiniteSpace, Subset};

fn within_budget(name: &str, budget: Duration, f: impl FnOnce()) {
    let start = Instant::now();
    f();
    let elapsed = start.elapsed();
    eprintln!(
        "[pass] {name} ({:.2?} < {:.0?} budget)",
        elapsed, budget
    );
    assert!(
        elapsed < budget,
        "{name} exceeded its runtime budget: {elapsed:.2?} >= {budget:.0?}"
    );
}

/// Criterion 1: on 500 seeded random finite T0 spaces with carrier at
/// most 6, every irreducible closed set is a point closure, all three
/// sobriety properties hold, and the SI-derivation changes nothing.
#[test]
fn criterion_1_finite_sobriety_collapse() {
    within_budget("criterion 1: finite sobriety collapse", Duration::from_secs(30), || {
        for i in 0..500 {
            let mut rng = sample_rng(101, i);
            let space = random_t0_space(&mut rng, 6);
            let records = space.irreducible_closed_records().unwrap();
            let mut closures: Vec<Subset> =
                (0..space.len()).map(|x| space.point_closure(x)).collect();
            closures.sort();
            closures.dedup();
            assert_eq!(
                records.iter().map(|r| r.set).collect::<Vec<_>>(),
                closures,
                "sample {i}"
            );
            assert!(records.iter().all(|r| r.generic_point.is_some()));
            for property in SobrietyProperty::ALL {
                assert!(check_sobriety(&space, property).unwrap().holds, "sample {i}");
            }
            assert!(derive_si(&space).unwrap().is_identity(), "sample {i}");
        }
    });
}

/// Criterion 2: the SI-derivation of the Alexandroff chain ω+1 is
/// exactly the Scott topology {∅, whole, ↑n}.
#[test]
fn criterion_2_si_equals_scott_on_the_chain() {
    within_budget("criterion 2: SI = Scott on ω+1", Duration::from_secs(1), || {
        let derived = derive_si_chain(ChainSpace::OMEGA_PLUS_ONE_ALEXANDROFF);
        assert_eq!(derived.result, ChainSpace::OMEGA_PLUS_ONE_SCOTT);
        assert_eq!(derived.removed, vec![ChainOpen::OmegaOnly]);
        let si = derived.result;
        // Exact family: the empty set, whole = ↑1, and every ↑n; the
        // singleton of the top is gone.
        assert!(soberscope::johnstone::chain::is_open(si, ChainOpen::Empty));
        for n in 1..=1000 {
            assert!(soberscope::johnstone::chain::is_open(si, ChainOpen::UpFrom(n)));
        }
        assert!(!soberscope::johnstone::chain::is_open(si, ChainOpen::OmegaOnly));
        assert_eq!(si.topology, ChainTopology::Scott);
    });
}

/// Criterion 3: the k-bounded sobriety check on (ω+1, Alexandroff) fails
/// with witness exactly N: supremum ∞, no generic point.
#[test]
fn criterion_3_non_k_bounded_sobriety_witness() {
    within_budget("criterion 3: witness N on ω+1", Duration::from_secs(1), || {
        let verdict = check_sobriety_chain(
            ChainSpace::OMEGA_PLUS_ONE_ALEXANDROFF,
            SobrietyProperty::KBoundedSober,
        );
        assert!(!verdict.holds);
        let witness = verdict.witness.expect("failing checks carry a witness");
        assert_eq!(witness.description, "N");
        assert_eq!(witness.sup, Some(JElement::Omega));
        assert_eq!(witness.generic_point, None);
    });
}

/// Criterion 4: the class-to-supremum homeomorphism between the
/// sup-quotient and the SI-space verifies on 200 seeded finite spaces
/// and on the Alexandroff chain ω+1.
#[test]
fn criterion_4_quotient_homeomorphism() {
    within_budget("criterion 4: quotient ≅ SI-space", Duration::from_secs(60), || {
        for i in 0..200 {
            let mut rng = sample_rng(104, i);
            let space = random_t0_space(&mut rng, 5);
            let report = quotient_si_homeomorphism(&space)
                .unwrap_or_else(|e| panic!("sample {i}: {e}"));
            assert_eq!(report.bijection.len(), space.len());
        }
        let chain = quotient_si_homeomorphism_chain(ChainSpace::OMEGA_PLUS_ONE_ALEXANDROFF);
        assert_eq!(chain.si_space, ChainSpace::OMEGA_PLUS_ONE_SCOTT);
    });
}

/// Criterion 5: both grid scenarios pass all their facts at bound 40:
/// the grid is Scott-closed and irreducible with supremum the top, the
/// two- and three-apex extensions are k-bounded sober, the named maps
/// are Scott continuous, the upper bounds of the grid image are the two
/// apexes with no least element, and the collapse equation holds on all
/// elements with coordinates up to 80.
#[test]
fn criterion_5_grid_counterexample_scenarios() {
    within_budget("criterion 5: grid scenarios at B=40", Duration::from_secs(120), || {
        for scenario in [Scenario::Case1, Scenario::Case2] {
            let report = run_scenario(scenario, 40, 105);
            for fact in &report.facts {
                eprintln!("    {fact}");
            }
            assert!(report.passed(), "{scenario} failed");
        }
    });
}

/// Criterion 6: the Alexandroff grid-with-top is not qk-bounded sober,
/// with the classes over the grid as witness; the Alexandroff chain ω+1
/// is qk-bounded sober.
#[test]
fn criterion_6_qk_bounded_sobriety_examples() {
    within_budget("criterion 6: qk-bounded sobriety", Duration::from_secs(30), || {
        let report = is_qk_bounded_sober_grid(Ambient::P, JTopologyKind::Alexandroff, 40, 106);
        assert!(report.verified());
        assert!(!report.verdict.holds);
        let witness = report.verdict.witness.expect("witness");
        assert_eq!(witness.description, "{[↓x] : x ∈ J}");
        let chain = is_qk_bounded_sober_chain(ChainSpace::OMEGA_PLUS_ONE_ALEXANDROFF);
        assert!(chain.holds);
    });
}

/// Criterion 7: reflector laws on 100 seeded (space, map) pairs plus the
/// chain instance: the mediating map factors the original map through
/// the unit, and uniqueness is verified exhaustively when at most 10^6
/// candidate maps exist, otherwise on generated points, with the mode
/// recorded.
#[test]
fn criterion_7_reflector_laws() {
    within_budget("criterion 7: reflector laws", Duration::from_secs(60), || {
        let mut exhaustive_runs = 0;
        let mut generated_runs = 0;
        for i in 0..100 {
            let mut rng = sample_rng(107, i);
            // Most samples stay small enough for the exhaustive
            // uniqueness sweep; a few larger ones exercise the
            // generated-points mode.
            let (source, target) = if i % 20 == 19 {
                (
                    random_t0_space_exact(&mut rng, 8),
                    random_t0_space_exact(&mut rng, 6),
                )
            } else {
                (random_t0_space(&mut rng, 4), random_t0_space(&mut rng, 4))
            };
            let f = random_reflective_map(&mut rng, &source, &target);
            let report = reflector(&source, &f).unwrap_or_else(|e| panic!("sample {i}: {e}"));
            assert_eq!(
                report.eta.compose(&report.f_bar).unwrap(),
                f,
                "factorization failed on sample {i}"
            );
            match report.uniqueness_mode {
                UniquenessMode::Exhaustive { candidates } => {
                    assert!(candidates <= 1_000_000);
                    exhaustive_runs += 1;
                }
                UniquenessMode::GeneratedPoints => generated_runs += 1,
            }
        }
        assert!(exhaustive_runs > 0 && generated_runs > 0, "both modes must be exercised");
        eprintln!(
            "    uniqueness modes: {exhaustive_runs} exhaustive, {generated_runs} generated-points"
        );
        // The chain instance: ξ through the sobrification of ω.
        let xi = xi_properties();
        assert!(xi.continuous && xi.preserves_irreducible_sups);
        let fact = xi_universal_factorization(40);
        assert!(fact.factorization_holds && fact.preimage_law_holds);
        assert!(fact.uniqueness_on_generated_points);
        let chain_reflector = soberscope::johnstone::chain::reflector_omega_chain(40);
        assert!(chain_reflector.factorization_holds);
        assert!(chain_reflector.eta_continuous && chain_reflector.f_bar_continuous);
    });
}

/// Criterion 8: descriptor membership, Scott-closedness and suprema
/// agree with brute force on the truncated posets (truncation 2B with
/// B = 20) over at least 10^4 sampled descriptors.
#[test]
fn criterion_8_descriptor_oracle_agreement() {
    within_budget("criterion 8: truncation oracle", Duration::from_secs(60), || {
        let b = 20u64;
        let truncation_bound = 2 * b;
        let mut total = 0usize;
        let mut sup_skipped = 0usize;
        for (a_idx, ambient) in [Ambient::P, Ambient::X, Ambient::Y].into_iter().enumerate() {
            let poset = TruncatedPoset::new(ambient, truncation_bound);
            let mut rng = sample_rng(108, a_idx as u64);
            for _ in 0..3400 {
                let d = sample_valid_descriptor(&mut rng, ambient, b);
                total += 1;
                // Membership agreement on every truncated element.
                let set = poset.restrict_descriptor(&d);
                for (idx, &e) in poset.elements().iter().enumerate() {
                    assert_eq!(set.get(idx), d.contains(e), "{d} at {e}");
                }
                // Scott-closedness: valid descriptors restrict to
                // truncated Scott-closed sets.
                assert!(poset.is_scott_closed(&set), "{d}");
                // Supremum agreement, away from the one unfaithful case:
                // the whole grid without apexes gains a spurious
                // boundary top under truncation.
                if d.is_whole() && d.apexes().is_empty() {
                    sup_skipped += 1;
                    continue;
                }
                let symbolic = sup_of(ambient, &d).unwrap();
                match poset.least_upper_bound(&set) {
                    LubOutcome::Least(e) => {
                        assert_eq!(symbolic, Some(e), "{d} in {ambient}")
                    }
                    LubOutcome::NoLeast | LubOutcome::NoUpperBound => {
                        assert_eq!(symbolic, None, "{d} in {ambient}")
                    }
                }
            }
            // Semantically invalid field combinations must fail both the
            // validator and the truncated closure checks.
            for _ in 0..200 {
                let spec = sample_invalid_spec(&mut rng, ambient, b);
                assert!(JClosedDescriptor::new(ambient, &spec).is_err(), "{spec:?}");
                let set = poset.restrict(|e| raw_contains(&spec, e));
                assert!(!poset.is_scott_closed(&set), "{spec:?}");
            }
        }
        assert!(total >= 10_000, "only {total} descriptors sampled");
        eprintln!("    {total} descriptors checked, {sup_skipped} sup comparisons skipped (whole grid)");
    });
}

/// Criterion 9: products of 100 seeded pairs of finite k-bounded sober
/// spaces are k-bounded sober, and their irreducible closed sets are
/// exactly the products of factor irreducible closed sets.
#[test]
fn criterion_9_products() {
    within_budget("criterion 9: products", Duration::from_secs(30), || {
        for i in 0..100 {
            let mut rng = sample_rng(109, i);
            let a = random_t0_space(&mut rng, 4);
            let b = random_t0_space(&mut rng, 4);
            for factor in [&a, &b] {
                assert!(
                    check_sobriety(factor, SobrietyProperty::KBoundedSober).unwrap().holds,
                    "finite T0 factors are k-bounded sober"
                );
            }
            let prod = product(&[&a, &b]).unwrap();
            assert!(
                check_sobriety(&prod, SobrietyProperty::KBoundedSober).unwrap().holds,
                "sample {i}"
            );
            let got: Vec<Subset> = prod
                .irreducible_closed_records()
                .unwrap()
                .iter()
                .map(|r| r.set)
                .collect();
            let expected = pairwise_products(&a, &b);
            assert_eq!(got, expected, "sample {i}");
        }
    });
}

/// Products of factor irreducible closed sets as subsets of the product
/// carrier (tuples indexed with the second factor fastest).
fn pairwise_products(a: &FiniteSpace, b: &FiniteSpace) -> Vec<Subset> {
    let ra = a.irreducible_closed_records().unwrap();
    let rb = b.irreducible_closed_records().unwrap();
    let mut out = Vec::new();
    for fa in &ra {
        for fb in &rb {
            let mut mask = Subset::EMPTY;
            for x in fa.set.iter() {
                for y in fb.set.iter() {
                    mask = mask.with(x * b.len() + y);
                }
            }
            out.push(mask);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn sample_valid_descriptor(
    rng: &mut rand_chacha::ChaCha8Rng,
    ambient: Ambient,
    bound: u64,
) -> JClosedDescriptor {
    loop {
        let d = sample_descriptor_once(rng, ambient, bound);
        if !d.is_empty() {
            return d;
        }
    }
}

fn sample_descriptor_once(
    rng: &mut rand_chacha::ChaCha8Rng,
    ambient: Ambient,
    bound: u64,
) -> JClosedDescriptor {
    use rand::Rng;
    let roll: u8 = rng.random_range(0..12);
    if roll == 0 {
        return JClosedDescriptor::whole_grid();
    }
    if roll == 1 {
        // Whole grid with a down-closed apex set.
        let apexes: Vec<_> = match ambient {
            Ambient::P => vec![soberscope::johnstone::ApexTag::Top],
            Ambient::X | Ambient::Y => {
                let mut v = vec![];
                if rng.random_bool(0.5) {
                    v.push(soberscope::johnstone::ApexTag::Top1);
                }
                if rng.random_bool(0.5) {
                    v.push(soberscope::johnstone::ApexTag::Top2);
                }
                if ambient == Ambient::Y && v.len() == 2 && rng.random_bool(0.5) {
                    v.push(soberscope::johnstone::ApexTag::Top3);
                }
                v
            }
            _ => vec![],
        };
        return JClosedDescriptor::new(
            ambient,
            &DescriptorSpec {
                whole: true,
                apexes,
                ..Default::default()
            },
        )
        .unwrap();
    }
    let strip = rng.random_range(0..=bound);
    let mut tops = Vec::new();
    for _ in 0..rng.random_range(0..=2u32) {
        if strip >= 1 {
            tops.push(rng.random_range(1..=strip));
        }
    }
    let mut extras = Vec::new();
    for _ in 0..rng.random_range(0..=3u32) {
        if strip < bound {
            let col = rng.random_range(1..=bound);
            if !tops.contains(&col) {
                extras.push((col, rng.random_range(strip + 1..=bound)));
            }
        }
    }
    JClosedDescriptor::new(
        ambient,
        &DescriptorSpec {
            whole: false,
            strip,
            extras,
            tops,
            apexes: vec![],
        },
    )
    .unwrap()
}

/// Field combinations violating down-closure semantically.
fn sample_invalid_spec(
    rng: &mut rand_chacha::ChaCha8Rng,
    ambient: Ambient,
    bound: u64,
) -> DescriptorSpec {
    use rand::Rng;
    if rng.random_bool(0.5) || ambient.apexes().is_empty() {
        // A topped column floating above the strip.
        let strip = rng.random_range(0..bound);
        DescriptorSpec {
            whole: false,
            strip,
            extras: vec![],
            tops: vec![rng.random_range(strip + 1..=bound)],
            apexes: vec![],
        }
    } else {
        // An apex without the grid below it.
        DescriptorSpec {
            whole: false,
            strip: rng.random_range(0..=bound),
            extras: vec![],
            tops: vec![],
            apexes: vec![ambient.apexes()[0]],
        }
    }
}
