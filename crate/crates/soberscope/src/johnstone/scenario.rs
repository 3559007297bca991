//! Named fact bundles over the symbolic posets. Each scenario runs a
//! fixed list of decidable facts and reports them one by one; a scenario
//! passes when every fact comes out as expected.

use crate::report::{CheckReport, Mode};
use crate::sobriety::SobrietyProperty;

use super::chain::{
    self, check_sobriety_chain, is_qk_bounded_sober_chain, ChainOpen, ChainSpace,
};
use super::classify::{classify_irreducible_closed, JTopologyKind};
use super::descriptor::{sup_of, upper_bounds, JClosedDescriptor};
use super::element::{Ambient, ApexTag, JElement};
use super::maps::{check_map_properties, composite_equals, JPiecewiseMap};
use super::quotient::is_qk_bounded_sober_grid;
use super::{check_k_bounded_sobriety_symbolic, SymbolicSobrietyVerdict};

/// The named scenarios the CLI exposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// The grid-with-top space admits no reflection when the image of the
    /// grid keeps a supremum: the two-apex target breaks it.
    Case1,
    /// ... and when it does not: the three-apex target with the collapse
    /// map breaks uniqueness.
    Case2,
    /// The same obstruction against sup-preserving maps, off the
    /// Alexandroff topology of the grid-with-top.
    ReflectionFailsForSupMaps,
    /// The chain ω+1 into the sobrification of ω: continuous and
    /// sup-preserving but not an embedding, with the universal
    /// factorization through the sobrification.
    ChainSobrification,
    /// The sup-quotient of the Alexandroff grid-with-top is not k-bounded
    /// sober.
    QuotientNotKBoundedSober,
    /// qk-bounded sobriety examples: k-bounded sober spaces, the Scott
    /// grid-with-top, and the Alexandroff chain.
    QkBoundedExamples,
}

impl Scenario {
    pub const ALL: [Scenario; 6] = [
        Scenario::Case1,
        Scenario::Case2,
        Scenario::ReflectionFailsForSupMaps,
        Scenario::ChainSobrification,
        Scenario::QuotientNotKBoundedSober,
        Scenario::QkBoundedExamples,
    ];

    /// The external scenario identifier.
    pub fn name(self) -> &'static str {
        match self {
            Scenario::Case1 => "thm3.3-case1",
            Scenario::Case2 => "thm3.3-case2",
            Scenario::ReflectionFailsForSupMaps => "prop3.9",
            Scenario::ChainSobrification => "ex3.6",
            Scenario::QuotientNotKBoundedSober => "ex4.4",
            Scenario::QkBoundedExamples => "ex4.6",
        }
    }

    pub fn parse(name: &str) -> Option<Scenario> {
        Scenario::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A scenario run: one report per fact, plus pass/fail overall.
#[derive(Debug, Clone)]
pub struct ScenarioReport {
    pub scenario: Scenario,
    pub bound: u64,
    pub facts: Vec<CheckReport>,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.facts.iter().all(|f| f.holds)
    }
}

pub fn run_scenario(scenario: Scenario, bound: u64, seed: u64) -> ScenarioReport {
    let facts = match scenario {
        Scenario::Case1 => case1_facts(bound, seed),
        Scenario::Case2 => case2_facts(bound, seed),
        Scenario::ReflectionFailsForSupMaps => sup_reflection_facts(bound, seed),
        Scenario::ChainSobrification => chain_sobrification_facts(bound),
        Scenario::QuotientNotKBoundedSober => quotient_not_sober_facts(bound, seed),
        Scenario::QkBoundedExamples => qk_example_facts(bound, seed),
    };
    ScenarioReport {
        scenario,
        bound,
        facts,
    }
}

fn grid_closed_fact() -> CheckReport {
    CheckReport::timed("A = J is Scott-closed in P", Mode::Exhaustive, || {
        let ok = JClosedDescriptor::new(
            Ambient::P,
            &super::descriptor::DescriptorSpec {
                whole: true,
                ..Default::default()
            },
        )
        .is_ok();
        (ok, None)
    })
}

fn grid_irreducible_fact(bound: u64, seed: u64) -> CheckReport {
    CheckReport::timed(
        "A = J is irreducible in (P, scott)",
        Mode::Bounded(bound),
        || {
            let report =
                classify_irreducible_closed(Ambient::P, JTopologyKind::Scott, bound, seed, 400);
            let listed = report
                .families
                .contains(&super::classify::IrreducibleFamily::WholeGrid);
            (
                report.passed() && listed,
                (!report.passed()).then(|| report.failures.join("; ")),
            )
        },
    )
}

fn grid_sup_fact() -> CheckReport {
    CheckReport::timed("⋁A = ⊤ in P", Mode::Exhaustive, || {
        let sup = sup_of(Ambient::P, &JClosedDescriptor::whole_grid()).expect("nonempty");
        (
            sup == Some(JElement::Apex(ApexTag::Top)),
            sup.map(|e| e.render()),
        )
    })
}

fn kb_sober_fact(ambient: Ambient, bound: u64, seed: u64) -> CheckReport {
    CheckReport::timed(
        format!("({ambient}, scott) is k-bounded sober"),
        Mode::Bounded(bound),
        || {
            let v: SymbolicSobrietyVerdict = check_k_bounded_sobriety_symbolic(ambient, bound, seed);
            (v.holds, v.witness.map(|w| w.description))
        },
    )
}

fn map_continuous_fact(map: JPiecewiseMap, bound: u64, seed: u64) -> CheckReport {
    CheckReport::timed(
        format!("{map} is Scott continuous"),
        Mode::Bounded(bound),
        || match check_map_properties(map, bound, seed) {
            Ok(report) => (
                report.monotone.holds && report.scott_continuous.holds,
                report
                    .scott_continuous
                    .witness
                    .or(report.monotone.witness),
            ),
            Err(e) => (false, Some(e.to_string())),
        },
    )
}

fn case1_facts(bound: u64, seed: u64) -> Vec<CheckReport> {
    let mut facts = vec![
        grid_closed_fact(),
        grid_irreducible_fact(bound, seed),
        grid_sup_fact(),
        kb_sober_fact(Ambient::X, bound, seed),
        map_continuous_fact(JPiecewiseMap::FCase1, bound, seed),
    ];
    facts.push(CheckReport::timed(
        "upper bounds of f(A) in X are exactly {⊤₁, ⊤₂}, with no least",
        Mode::Exhaustive,
        || {
            let image = super::maps::image_descriptor(
                JPiecewiseMap::FCase1,
                &JClosedDescriptor::whole_grid(),
            );
            let ub = upper_bounds(Ambient::X, &image).expect("nonempty");
            let expected = ub.finite_from.is_none()
                && ub.top_cols.is_empty()
                && ub.tops_from.is_none()
                && ub.apexes.len() == 2
                && ub.apexes.contains(&ApexTag::Top1)
                && ub.apexes.contains(&ApexTag::Top2);
            let no_sup = sup_of(Ambient::X, &image).expect("nonempty").is_none();
            (expected && no_sup, Some(ub.render()))
        },
    ));
    facts
}

fn case2_facts(bound: u64, seed: u64) -> Vec<CheckReport> {
    let mut facts = vec![
        grid_closed_fact(),
        grid_irreducible_fact(bound, seed),
        grid_sup_fact(),
        kb_sober_fact(Ambient::Y, bound, seed),
        map_continuous_fact(JPiecewiseMap::FCase2, bound, seed),
        map_continuous_fact(JPiecewiseMap::GCollapse, bound, seed),
    ];
    facts.push(CheckReport::timed(
        format!("g∘f = f on all elements with coordinates ≤ {}", 2 * bound),
        Mode::Bounded(2 * bound),
        || {
            match composite_equals(
                JPiecewiseMap::GCollapse,
                JPiecewiseMap::FCase2,
                JPiecewiseMap::FCase2,
                2 * bound,
            ) {
                Ok(outcome) => (outcome.holds, outcome.witness),
                Err(e) => (false, Some(e.to_string())),
            }
        },
    ));
    facts.push(CheckReport::timed(
        "upper bounds of f(A) in Y have no least element",
        Mode::Exhaustive,
        || {
            let image = super::maps::image_descriptor(
                JPiecewiseMap::FCase2,
                &JClosedDescriptor::whole_grid(),
            );
            let ub = upper_bounds(Ambient::Y, &image).expect("nonempty");
            let no_sup = sup_of(Ambient::Y, &image).expect("nonempty").is_none();
            (ub.apexes.len() == 3 && no_sup, Some(ub.render()))
        },
    ));
    facts
}

fn sup_reflection_facts(bound: u64, seed: u64) -> Vec<CheckReport> {
    let mut facts = Vec::new();
    facts.push(CheckReport::timed(
        "σ(P) ⊆ Υ(P): every Scott-closed descriptor is a down-set",
        Mode::Bounded(bound),
        || {
            let mut rng = crate::gen::sample_rng(seed, 0x39);
            let ok = (0..400).all(|_| {
                let c = super::classify::sample_grid_set(
                    &mut rng,
                    Ambient::P,
                    JTopologyKind::Scott,
                    bound,
                );
                c.is_closed(Ambient::P, JTopologyKind::Alexandroff)
            });
            (ok, None)
        },
    ));
    facts.push(grid_irreducible_fact(bound, seed));
    facts.push(grid_sup_fact());
    facts.push(CheckReport::timed(
        "the Alexandroff irreducible closed sets of P are point closures and untopped columns",
        Mode::Bounded(bound),
        || {
            let report = classify_irreducible_closed(
                Ambient::P,
                JTopologyKind::Alexandroff,
                bound,
                seed,
                400,
            );
            (
                report.passed(),
                (!report.passed()).then(|| report.failures.join("; ")),
            )
        },
    ));
    facts.push(map_continuous_fact(JPiecewiseMap::FCase1, bound, seed));
    facts.push(CheckReport::timed(
        "f preserves suprema of the Alexandroff-irreducible closed sets of (P, Υ)",
        Mode::Bounded(bound),
        || {
            // Point closures: monotone maps preserve their suprema (spot
            // checked in the map report); untopped columns: the image is
            // the same column, whose supremum (m, ∞) is fixed by f.
            let mut ok = true;
            for col in 1..=bound {
                let sup = JElement::column_top(col);
                ok &= super::maps::eval_unchecked(JPiecewiseMap::FCase1, sup) == sup;
            }
            let report = match check_map_properties(JPiecewiseMap::FCase1, bound, seed) {
                Ok(r) => r,
                Err(_) => return (false, None),
            };
            for (desc, preserved) in &report.sup_preservation {
                if desc != "J" {
                    ok &= preserved;
                }
            }
            (ok, None)
        },
    ));
    facts.push(kb_sober_fact(Ambient::X, bound, seed));
    facts.push(CheckReport::timed(
        "⋁f(A) does not exist in X",
        Mode::Exhaustive,
        || {
            let image = super::maps::image_descriptor(
                JPiecewiseMap::FCase1,
                &JClosedDescriptor::whole_grid(),
            );
            (
                sup_of(Ambient::X, &image).expect("nonempty").is_none(),
                None,
            )
        },
    ));
    facts
}

fn chain_sobrification_facts(bound: u64) -> Vec<CheckReport> {
    let mut facts = Vec::new();
    let xi = chain::xi_properties();
    facts.push(CheckReport::new(
        "ξ is continuous",
        xi.continuous,
        None,
        Mode::Exhaustive,
    ));
    facts.push(CheckReport::new(
        "ξ preserves existing irreducible suprema",
        xi.preserves_irreducible_sups,
        None,
        Mode::Exhaustive,
    ));
    facts.push(CheckReport::new(
        "ξ is not an embedding",
        xi.embedding_witness == Some(ChainOpen::OmegaOnly),
        xi.embedding_witness.map(|w| w.render()),
        Mode::Exhaustive,
    ));
    facts.push(CheckReport::timed(
        "(ω+1, alexandroff) is not k-bounded sober",
        Mode::Exhaustive,
        || {
            let v = check_sobriety_chain(
                ChainSpace::OMEGA_PLUS_ONE_ALEXANDROFF,
                SobrietyProperty::KBoundedSober,
            );
            (
                !v.holds && v.witness.as_ref().is_some_and(|w| w.description == "N"),
                v.witness.map(|w| w.description),
            )
        },
    ));
    let f = chain::xi_universal_factorization(bound);
    facts.push(CheckReport::new(
        "f̄∘ξ = ξ through the sobrification of ω",
        f.factorization_holds,
        None,
        Mode::Bounded(bound),
    ));
    facts.push(CheckReport::new(
        "f̄⁻¹(V) = (f⁻¹(V) ∩ N)^S for nonempty opens V",
        f.preimage_law_holds,
        None,
        Mode::Bounded(bound),
    ));
    facts.push(CheckReport::new(
        "uniqueness of f̄ on generated points (which is every point)",
        f.uniqueness_on_generated_points,
        None,
        Mode::Exhaustive,
    ));
    facts
}

fn quotient_not_sober_facts(bound: u64, seed: u64) -> Vec<CheckReport> {
    let mut facts = Vec::new();
    let report = is_qk_bounded_sober_grid(Ambient::P, JTopologyKind::Alexandroff, bound, seed);
    facts.push(CheckReport::new(
        "KB classification of (P, alexandroff) verified",
        report.kb_classification.passed(),
        (!report.kb_classification.passed())
            .then(|| report.kb_classification.failures.join("; ")),
        Mode::Bounded(bound),
    ));
    facts.push(CheckReport::new(
        "quotient of (P, alexandroff) is homeomorphic to (P, scott)",
        report.si_derivation.passed() && report.quotient_flavor == JTopologyKind::Scott,
        (!report.si_derivation.passed()).then(|| report.si_derivation.failures.join("; ")),
        Mode::Bounded(bound),
    ));
    facts.push(CheckReport::new(
        "KB(P)/∼ is not k-bounded sober; witness the classes over J",
        !report.verdict.holds
            && report
                .verdict
                .witness
                .as_ref()
                .is_some_and(|w| w.description.contains("J")),
        report.verdict.witness.as_ref().map(|w| w.description.clone()),
        Mode::Bounded(bound),
    ));
    facts
}

fn qk_example_facts(bound: u64, seed: u64) -> Vec<CheckReport> {
    let mut facts = Vec::new();
    facts.push(CheckReport::timed(
        "sampled finite T0 spaces (k-bounded sober) are qk-bounded sober",
        Mode::Sampled(60),
        || {
            for i in 0..60 {
                let mut rng = crate::gen::sample_rng(seed, 0xe4600 + i);
                let space = crate::gen::random_t0_space(&mut rng, 5);
                match crate::constructions::is_qk_bounded_sober(&space) {
                    Ok(v) if v.holds => {}
                    _ => return (false, Some(format!("sample {i}"))),
                }
            }
            (true, None)
        },
    ));
    for ambient in [Ambient::X, Ambient::Y] {
        let report = is_qk_bounded_sober_grid(ambient, JTopologyKind::Scott, bound, seed);
        facts.push(CheckReport::new(
            format!("({ambient}, scott) is k-bounded sober and qk-bounded sober"),
            report.verified() && report.verdict.holds,
            None,
            Mode::Bounded(bound),
        ));
    }
    let p_scott = is_qk_bounded_sober_grid(Ambient::P, JTopologyKind::Scott, bound, seed);
    facts.push(CheckReport::new(
        "(P, scott) is qk-bounded sober although not k-bounded sober",
        p_scott.verified()
            && p_scott.verdict.holds
            && !check_k_bounded_sobriety_symbolic(Ambient::P, bound, seed).holds,
        None,
        Mode::Bounded(bound),
    ));
    let omega = is_qk_bounded_sober_chain(ChainSpace::OMEGA_PLUS_ONE_ALEXANDROFF);
    facts.push(CheckReport::new(
        "(ω+1, alexandroff) is qk-bounded sober",
        omega.holds,
        None,
        Mode::Exhaustive,
    ));
    facts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scenario_names_round_trip() {
        for s in Scenario::ALL {
            assert_eq!(Scenario::parse(s.name()), Some(s));
        }
        assert_eq!(Scenario::parse("nope"), None);
    }

    #[test]
    fn all_scenarios_pass_at_a_small_bound() {
        for s in Scenario::ALL {
            let report = run_scenario(s, 12, 5);
            assert!(
                report.passed(),
                "{}: {:?}",
                s,
                report
                    .facts
                    .iter()
                    .filter(|f| !f.holds)
                    .map(|f| f.render_line())
                    .collect::<Vec<_>>()
            );
        }
    }
}
