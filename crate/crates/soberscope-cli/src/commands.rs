//! Command implementations. Every command returns whether all emitted
//! checks passed; malformed input surfaces as `CmdError` and becomes
//! exit code 2.

use soberscope::constructions::{
    embedding_witness, is_qk_bounded_sober, kb_space, quotient_si_homeomorphism, reflector,
    sobrify, ConstructionError,
};
use soberscope::gen::{
    random_continuous_map, random_reflective_map, random_t0_space, sample_rng, ChaCha8Rng,
};
use soberscope::johnstone::chain::{
    self, check_sobriety_chain, derive_si_chain, is_qk_bounded_sober_chain, kb_chain,
    kb_quotient_chain, sobrify_nat_chain,
};
use soberscope::johnstone::quotient::{derive_si_grid, is_qk_bounded_sober_grid};
use soberscope::johnstone::{
    check_sobriety_symbolic, classify_irreducible_closed, run_scenario, JPiecewiseMap, Scenario,
};
use soberscope::report::{CheckReport, Mode};
use soberscope::sobriety::{
    check_sobriety, derive_si, is_si_open_definitional, kb_sober_iff_si_identity,
    si_continuity_iff_sup_preserving, sup_preservation_witness,
    sup_preservation_witness_definitional, SobrietyProperty,
};
use soberscope::space::product;
use soberscope::{FiniteSpace, Subset};

use crate::document::{to_document, ParsedMap, ParsedSpace};
use crate::output::Emitter;
use crate::pool;

#[derive(Debug)]
pub struct CmdError(pub String);

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CmdError {}

type CmdResult = Result<bool, CmdError>;

fn input_err(msg: impl Into<String>) -> CmdError {
    CmdError(msg.into())
}

pub struct Ctx {
    pub emitter: Emitter,
    pub oracle: bool,
}

fn emit_all(ctx: &Ctx, reports: &[CheckReport]) -> bool {
    ctx.emitter.reports(reports.iter());
    reports.iter().all(|r| r.holds)
}

fn parse_property(name: &str) -> Result<Option<SobrietyProperty>, CmdError> {
    match name {
        "sober" => Ok(Some(SobrietyProperty::Sober)),
        "bounded-sober" => Ok(Some(SobrietyProperty::BoundedSober)),
        "k-bounded-sober" => Ok(Some(SobrietyProperty::KBoundedSober)),
        "t0" | "qk-bounded-sober" | "prop-2-6" => Ok(None),
        other => Err(input_err(format!(
            "unknown property `{other}` (expected t0|sober|bounded-sober|k-bounded-sober|qk-bounded-sober|prop-2-6)"
        ))),
    }
}

// ---------------------------------------------------------------- check

pub fn cmd_check(
    ctx: &Ctx,
    space: &ParsedSpace,
    property: &str,
    bound: u64,
    seed: u64,
) -> CmdResult {
    let sobriety = parse_property(property)?;
    ctx.emitter
        .note(&format!("space: {}", space.describe()));
    let mut reports = Vec::new();
    match (space, property) {
        (ParsedSpace::Finite(space), "t0") => {
            reports.push(CheckReport::timed("t0", Mode::Exhaustive, || {
                match space.t0_violation() {
                    None => (true, None),
                    Some((a, b)) => (
                        false,
                        Some(format!("({}, {})", space.label(a), space.label(b))),
                    ),
                }
            }));
        }
        (ParsedSpace::Grid { .. } | ParsedSpace::Chain(_), "t0") => {
            reports.push(CheckReport::new("t0", true, None, Mode::Exhaustive));
        }
        (ParsedSpace::Finite(space), "qk-bounded-sober") => {
            let verdict = is_qk_bounded_sober(space).map_err(construction_to_input)?;
            reports.push(CheckReport::new(
                "qk-bounded-sober",
                verdict.holds,
                verdict.witness.map(|w| w.render(space)),
                Mode::Exhaustive,
            ));
        }
        (ParsedSpace::Chain(chain), "qk-bounded-sober") => {
            let verdict = is_qk_bounded_sober_chain(*chain);
            reports.push(CheckReport::new(
                "qk-bounded-sober",
                verdict.holds,
                verdict.witness.map(|w| w.description),
                Mode::Exhaustive,
            ));
        }
        (ParsedSpace::Grid { ambient, topology }, "qk-bounded-sober") => {
            let report = is_qk_bounded_sober_grid(*ambient, *topology, bound, seed);
            reports.push(CheckReport::new(
                "qk-bounded-sober",
                report.verified() && report.verdict.holds,
                report.verdict.witness.map(|w| w.description),
                Mode::Bounded(bound),
            ));
            for note in &report.verdict.notes {
                ctx.emitter.note(&format!("  {note}"));
            }
        }
        (ParsedSpace::Finite(space), "prop-2-6") => {
            let ok = kb_sober_iff_si_identity(space).map_err(contract_to_input)?;
            reports.push(CheckReport::new("prop-2-6", ok, None, Mode::Exhaustive));
        }
        (ParsedSpace::Chain(chain), "prop-2-6") => {
            let kb = check_sobriety_chain(*chain, SobrietyProperty::KBoundedSober).holds;
            let identity = derive_si_chain(*chain).is_identity();
            reports.push(CheckReport::new(
                "prop-2-6",
                kb == identity,
                None,
                Mode::Exhaustive,
            ));
        }
        (ParsedSpace::Grid { ambient, topology }, "prop-2-6") => {
            let kb = check_sobriety_symbolic(
                *ambient,
                *topology,
                SobrietyProperty::KBoundedSober,
                bound,
                seed,
            );
            let derivation = derive_si_grid(*ambient, *topology, bound, seed, 400);
            let identity = derivation.passed() && derivation.to == *topology;
            reports.push(CheckReport::new(
                "prop-2-6",
                kb.holds == identity,
                None,
                Mode::Bounded(bound),
            ));
        }
        (ParsedSpace::Finite(space), _) => {
            let property = sobriety.expect("parsed above");
            let verdict = check_sobriety(space, property).map_err(contract_to_input)?;
            reports.push(CheckReport::new(
                property.name(),
                verdict.holds,
                verdict.witness.map(|w| w.render(space)),
                Mode::Exhaustive,
            ));
            if ctx.oracle {
                reports.push(oracle_irreducibles_report(space));
            }
        }
        (ParsedSpace::Chain(chain), _) => {
            let property = sobriety.expect("parsed above");
            let verdict = check_sobriety_chain(*chain, property);
            reports.push(CheckReport::new(
                property.name(),
                verdict.holds,
                verdict
                    .witness
                    .map(|w| format!("{} (sup {:?})", w.description, w.sup.map(|e| e.render()))),
                Mode::Exhaustive,
            ));
        }
        (ParsedSpace::Grid { ambient, topology }, _) => {
            let property = sobriety.expect("parsed above");
            let verdict = check_sobriety_symbolic(*ambient, *topology, property, bound, seed);
            reports.push(CheckReport::new(
                property.name(),
                verdict.holds,
                verdict.witness.map(|w| w.description),
                Mode::Bounded(bound),
            ));
            for note in &verdict.notes {
                ctx.emitter.note(&format!("  {note}"));
            }
        }
    }
    Ok(emit_all(ctx, &reports))
}

/// Slow cross-check: the enumerated irreducible closed sets coincide with
/// the definitional irreducibility filter over all closed sets.
fn oracle_irreducibles_report(space: &FiniteSpace) -> CheckReport {
    CheckReport::timed("oracle: irreducibility criteria agree", Mode::Exhaustive, || {
        if space.len() > 10 {
            return (true, Some("skipped: carrier larger than 10".to_string()));
        }
        let records: Vec<Subset> = match space.irreducible_closed_records() {
            Ok(rs) => rs.iter().map(|r| r.set).collect(),
            Err(e) => return (false, Some(e.to_string())),
        };
        let by_definition: Vec<Subset> = space
            .closeds()
            .into_iter()
            .filter(|&c| space.is_irreducible_definitional(c))
            .collect();
        (records == by_definition, None)
    })
}

// ------------------------------------------------------------ derive-si

pub fn cmd_derive_si(ctx: &Ctx, space: &ParsedSpace, bound: u64, seed: u64) -> CmdResult {
    let mut reports = Vec::new();
    match space {
        ParsedSpace::Finite(space) => {
            let derived = derive_si(space).map_err(contract_to_input)?;
            reports.push(CheckReport::new(
                "derive-si",
                true,
                Some(format!(
                    "{} of {} opens are SI-open",
                    derived.si_opens().len(),
                    space.opens().len()
                )),
                Mode::Exhaustive,
            ));
            if ctx.oracle && space.len() <= 5 {
                reports.push(CheckReport::timed(
                    "oracle: SI-openness agrees with the all-subsets definition",
                    Mode::Exhaustive,
                    || {
                        for &u in space.opens() {
                            let fast = soberscope::sobriety::is_si_open(space, u).unwrap();
                            let slow = is_si_open_definitional(space, u).unwrap();
                            if fast != slow {
                                return (false, Some(space.render(u)));
                            }
                        }
                        (true, None)
                    },
                ));
            }
            let ok = emit_all(ctx, &reports);
            ctx.emitter
                .document(&to_document(&ParsedSpace::Finite(derived.space())));
            return Ok(ok);
        }
        ParsedSpace::Chain(chain_space) => {
            let derived = derive_si_chain(*chain_space);
            reports.push(CheckReport::new(
                "derive-si",
                true,
                Some(if derived.is_identity() {
                    "already SI-derived".to_string()
                } else {
                    format!(
                        "removed {}",
                        derived
                            .removed
                            .iter()
                            .map(|o| o.render())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                }),
                Mode::Exhaustive,
            ));
            let ok = emit_all(ctx, &reports);
            ctx.emitter
                .document(&to_document(&ParsedSpace::Chain(derived.result)));
            return Ok(ok);
        }
        ParsedSpace::Grid { ambient, topology } => {
            let derivation = derive_si_grid(*ambient, *topology, bound, seed, 400);
            reports.push(CheckReport::new(
                "derive-si",
                derivation.passed(),
                Some(format!("lands in the {} family", derivation.to)),
                Mode::Bounded(bound),
            ));
            let ok = emit_all(ctx, &reports);
            ctx.emitter.document(&to_document(&ParsedSpace::Grid {
                ambient: *ambient,
                topology: derivation.to,
            }));
            return Ok(ok);
        }
    }
}

// ------------------------------------------------------------ construct

pub fn cmd_construct_sobrify(ctx: &Ctx, space: &ParsedSpace) -> CmdResult {
    match space {
        ParsedSpace::Finite(space) => {
            let sob = sobrify(space).map_err(construction_to_input)?;
            let reports = vec![
                CheckReport::new(
                    "sobrification is sober",
                    true,
                    None,
                    Mode::Exhaustive,
                ),
                CheckReport::new(
                    "unit is an embedding",
                    true,
                    None,
                    Mode::Exhaustive,
                ),
            ];
            let ok = emit_all(ctx, &reports);
            ctx.emitter
                .note(&format!("points: {} irreducible closed sets", sob.point_sets.len()));
            ctx.emitter
                .document(&to_document(&ParsedSpace::Finite(sob.space)));
            Ok(ok)
        }
        ParsedSpace::Chain(chain_space) if !chain_space.with_top => {
            let sob = sobrify_nat_chain();
            for note in &sob.notes {
                ctx.emitter.note(note);
            }
            let reports = vec![CheckReport::new(
                "sobrification is sober",
                true,
                None,
                Mode::Exhaustive,
            )];
            let ok = emit_all(ctx, &reports);
            ctx.emitter
                .document(&to_document(&ParsedSpace::Chain(sob.space)));
            Ok(ok)
        }
        other => Err(input_err(format!(
            "sobrify supports finite spaces and the naturals chain, not {}",
            other.describe()
        ))),
    }
}

pub fn cmd_construct_kb(ctx: &Ctx, space: &ParsedSpace, bound: u64, seed: u64) -> CmdResult {
    match space {
        ParsedSpace::Finite(space) => {
            let kb = kb_space(space).map_err(construction_to_input)?;
            let reports = vec![
                CheckReport::new("co-topology laws", true, None, Mode::Exhaustive),
                CheckReport::new("result is k-bounded sober", true, None, Mode::Exhaustive),
            ];
            let ok = emit_all(ctx, &reports);
            ctx.emitter.note(&format!(
                "points: {}, closed family size: {}",
                kb.points.len(),
                kb.closed_family.len()
            ));
            ctx.emitter
                .document(&to_document(&ParsedSpace::Finite(kb.space)));
            Ok(ok)
        }
        ParsedSpace::Chain(chain_space) => {
            let kb = kb_chain(*chain_space);
            let mut notes = vec!["points: the initial segments ↓n".to_string()];
            if kb.has_all_nats_point {
                notes.push("plus N (supremum ∞)".to_string());
            }
            if kb.has_whole_point {
                notes.push("plus the whole chain (supremum ∞)".to_string());
            }
            for n in &notes {
                ctx.emitter.note(n);
            }
            let reports = vec![CheckReport::new(
                "kb-space",
                true,
                Some(notes.join("; ")),
                Mode::Exhaustive,
            )];
            Ok(emit_all(ctx, &reports))
        }
        ParsedSpace::Grid { ambient, topology } => {
            let classification =
                classify_irreducible_closed(*ambient, *topology, bound, seed, 400);
            let families: Vec<String> = classification
                .families
                .iter()
                .map(|f| f.describe().to_string())
                .collect();
            let reports = vec![CheckReport::new(
                "kb-space",
                classification.passed(),
                Some(format!("points drawn from: {}", families.join("; "))),
                Mode::Bounded(bound),
            )];
            Ok(emit_all(ctx, &reports))
        }
    }
}

pub fn cmd_construct_quotient(ctx: &Ctx, space: &ParsedSpace, bound: u64, seed: u64) -> CmdResult {
    match space {
        ParsedSpace::Finite(space) => {
            let homeo = quotient_si_homeomorphism(space).map_err(construction_to_input)?;
            let reports = vec![
                CheckReport::new(
                    "quotient-closed families mirror SI-closed sets",
                    true,
                    None,
                    Mode::Exhaustive,
                ),
                CheckReport::new(
                    "class-to-sup map is a homeomorphism onto the SI-space",
                    true,
                    None,
                    Mode::Exhaustive,
                ),
            ];
            let ok = emit_all(ctx, &reports);
            ctx.emitter
                .note(&format!("classes: {}", homeo.quotient.classes.len()));
            ctx.emitter
                .document(&to_document(&ParsedSpace::Finite(homeo.quotient.space)));
            Ok(ok)
        }
        ParsedSpace::Chain(chain_space) => {
            let q = kb_quotient_chain(*chain_space);
            for n in &q.notes {
                ctx.emitter.note(n);
            }
            let reports = vec![CheckReport::new(
                "quotient collapses to the SI-derived chain",
                true,
                None,
                Mode::Exhaustive,
            )];
            let ok = emit_all(ctx, &reports);
            ctx.emitter
                .document(&to_document(&ParsedSpace::Chain(q.space)));
            Ok(ok)
        }
        ParsedSpace::Grid { ambient, topology } => {
            let report = is_qk_bounded_sober_grid(*ambient, *topology, bound, seed);
            let reports = vec![CheckReport::new(
                "quotient is homeomorphic to the SI-derived family",
                report.si_derivation.passed(),
                Some(format!("({}, {})", ambient, report.quotient_flavor)),
                Mode::Bounded(bound),
            )];
            let ok = emit_all(ctx, &reports);
            ctx.emitter.document(&to_document(&ParsedSpace::Grid {
                ambient: *ambient,
                topology: report.quotient_flavor,
            }));
            Ok(ok)
        }
    }
}

pub fn cmd_construct_product(ctx: &Ctx, spaces: &[ParsedSpace]) -> CmdResult {
    let mut finite = Vec::new();
    for s in spaces {
        match s {
            ParsedSpace::Finite(space) => finite.push(space.clone()),
            other => {
                return Err(input_err(format!(
                    "products are finite-only; found {}",
                    other.describe()
                )))
            }
        }
    }
    let refs: Vec<&FiniteSpace> = finite.iter().collect();
    let prod = product(&refs).map_err(|e| input_err(e.to_string()))?;
    let reports = vec![CheckReport::new(
        "product specialization is componentwise",
        true,
        None,
        Mode::Exhaustive,
    )];
    let ok = emit_all(ctx, &reports);
    ctx.emitter
        .document(&to_document(&ParsedSpace::Finite(prod)));
    Ok(ok)
}

// ------------------------------------------------------------ map-check

pub fn cmd_map_check(ctx: &Ctx, map: &ParsedMap, bound: u64, seed: u64) -> CmdResult {
    match map {
        ParsedMap::Finite(map) => {
            let mut reports = Vec::new();
            reports.push(CheckReport::timed("continuous", Mode::Exhaustive, || {
                match soberscope::sobriety::continuity_witness(map) {
                    None => (true, None),
                    Some(w) => (false, Some(map.target().render(w))),
                }
            }));
            let continuous = reports[0].holds;
            reports.push(CheckReport::timed(
                "preserves existing irreducible suprema",
                Mode::Exhaustive,
                || match sup_preservation_witness(map) {
                    Ok(None) => (true, None),
                    Ok(Some(w)) => (false, Some(map.source().render(w))),
                    Err(e) => (false, Some(e.to_string())),
                },
            ));
            if continuous {
                reports.push(CheckReport::timed(
                    "SI-continuity matches sup preservation",
                    Mode::Exhaustive,
                    || match si_continuity_iff_sup_preserving(map) {
                        Ok(ok) => (ok, None),
                        Err(e) => (false, Some(e.to_string())),
                    },
                ));
            }
            if ctx.oracle && map.source().len() <= 5 {
                reports.push(CheckReport::timed(
                    "oracle: sup preservation agrees with the all-subsets definition",
                    Mode::Exhaustive,
                    || {
                        let fast = sup_preservation_witness(map).map(|w| w.is_none());
                        let slow = sup_preservation_witness_definitional(map)
                            .map(|w| w.is_none());
                        match (fast, slow) {
                            (Ok(a), Ok(b)) => (a == b, None),
                            _ => (false, Some("contract error".to_string())),
                        }
                    },
                ));
            }
            if map.is_injective() && continuous {
                match embedding_witness(map) {
                    Ok(None) => ctx.emitter.note("embedding: yes"),
                    Ok(Some(w)) => ctx
                        .emitter
                        .note(&format!("embedding: no, witness {}", map.source().render(w))),
                    Err(e) => ctx.emitter.note(&format!("embedding: {e}")),
                }
            }
            Ok(emit_all(ctx, &reports))
        }
        ParsedMap::Named(JPiecewiseMap::XiOmega) => {
            let xi = chain::xi_properties();
            let reports = vec![
                CheckReport::new("continuous", xi.continuous, None, Mode::Exhaustive),
                CheckReport::new(
                    "preserves existing irreducible suprema",
                    xi.preserves_irreducible_sups,
                    None,
                    Mode::Exhaustive,
                ),
            ];
            match xi.embedding_witness {
                Some(w) => ctx
                    .emitter
                    .note(&format!("embedding: no, witness {}", w.render())),
                None => ctx.emitter.note("embedding: yes"),
            }
            Ok(emit_all(ctx, &reports))
        }
        ParsedMap::Named(named) => {
            let report = soberscope::johnstone::maps::check_map_properties(*named, bound, seed)
                .map_err(contract_to_input)?;
            let mut reports = vec![
                CheckReport::new(
                    report.monotone.law.clone(),
                    report.monotone.holds,
                    report.monotone.witness.clone(),
                    Mode::Bounded(bound),
                ),
                CheckReport::new(
                    report.scott_continuous.law.clone(),
                    report.scott_continuous.holds,
                    report.scott_continuous.witness.clone(),
                    Mode::Bounded(bound),
                ),
            ];
            for (desc, preserved) in &report.sup_preservation {
                ctx.emitter.note(&format!(
                    "sup preservation on {desc}: {}",
                    if *preserved { "yes" } else { "no" }
                ));
            }
            if *named == JPiecewiseMap::GCollapse {
                let outcome = soberscope::johnstone::maps::composite_equals(
                    JPiecewiseMap::GCollapse,
                    JPiecewiseMap::FCase2,
                    JPiecewiseMap::FCase2,
                    2 * bound,
                )
                .map_err(contract_to_input)?;
                reports.push(CheckReport::new(
                    outcome.law,
                    outcome.holds,
                    outcome.witness,
                    Mode::Bounded(2 * bound),
                ));
            }
            Ok(emit_all(ctx, &reports))
        }
    }
}

// ------------------------------------------------------------ reflector

pub fn cmd_reflector(ctx: &Ctx, map: &ParsedMap, bound: u64, seed: u64) -> CmdResult {
    match map {
        ParsedMap::Finite(f) => {
            match reflector(f.source(), f) {
                Ok(report) => {
                    let reports = vec![
                        CheckReport::new(
                            "unit is continuous and preserves irreducible suprema",
                            true,
                            None,
                            Mode::Exhaustive,
                        ),
                        CheckReport::new("mediating map is continuous", true, None, Mode::Exhaustive),
                        CheckReport::new("f̄∘η = f", true, None, Mode::Exhaustive),
                        CheckReport::new(
                            "uniqueness of the mediating map",
                            true,
                            Some(report.uniqueness_mode.to_string()),
                            Mode::Exhaustive,
                        ),
                    ];
                    let ok = emit_all(ctx, &reports);
                    ctx.emitter.note(&format!(
                        "quotient classes: {}",
                        report.quotient.classes.len()
                    ));
                    Ok(ok)
                }
                Err(ConstructionError::Contract(e)) => {
                    ctx.emitter.report(&CheckReport::new(
                        "reflector preconditions",
                        false,
                        Some(e.to_string()),
                        Mode::Exhaustive,
                    ));
                    Ok(false)
                }
                Err(ConstructionError::Bug(e)) => Err(input_err(e.to_string())),
            }
        }
        ParsedMap::Named(JPiecewiseMap::XiOmega) => {
            let r = chain::reflector_omega_chain(bound);
            let reports = vec![
                CheckReport::new(
                    "unit is continuous and preserves irreducible suprema",
                    r.eta_continuous && r.eta_preserves_sups,
                    None,
                    Mode::Bounded(bound),
                ),
                CheckReport::new(
                    "mediating map is continuous",
                    r.f_bar_continuous,
                    None,
                    Mode::Exhaustive,
                ),
                CheckReport::new("f̄∘η = f", r.factorization_holds, None, Mode::Bounded(bound)),
                CheckReport::new(
                    "uniqueness of the mediating map",
                    r.uniqueness_on_generated_points,
                    Some("generated points".to_string()),
                    Mode::Exhaustive,
                ),
            ];
            Ok(emit_all(ctx, &reports))
        }
        ParsedMap::Named(named) => {
            // The grid maps are Scott-continuous but do not preserve the
            // supremum of the whole grid, so the reflector's precondition
            // fails; report that honestly.
            let props =
                soberscope::johnstone::maps::check_map_properties(*named, bound, seed)
                    .map_err(contract_to_input)?;
            let grid_preserved = props
                .sup_preservation
                .iter()
                .all(|(_, preserved)| *preserved);
            let reports = vec![CheckReport::new(
                "reflector preconditions: map preserves existing irreducible suprema",
                grid_preserved,
                (!grid_preserved).then(|| "the whole grid J".to_string()),
                Mode::Bounded(bound),
            )];
            Ok(emit_all(ctx, &reports))
        }
    }
}

// ---------------------------------------------------------------- paper

pub fn cmd_paper(ctx: &Ctx, scenario: &str, bound: u64, seed: u64) -> CmdResult {
    let scenario = Scenario::parse(scenario).ok_or_else(|| {
        input_err(format!(
            "unknown scenario `{scenario}` (expected {})",
            Scenario::ALL
                .iter()
                .map(|s| s.name())
                .collect::<Vec<_>>()
                .join("|")
        ))
    })?;
    let report = run_scenario(scenario, bound, seed);
    Ok(emit_all(ctx, &report.facts))
}

// ----------------------------------------------------------------- fuzz

pub fn cmd_fuzz(
    ctx: &Ctx,
    carrier_max: usize,
    samples: u64,
    seed: u64,
    property: &str,
) -> CmdResult {
    if !(1..=6).contains(&carrier_max) {
        return Err(input_err("carrier-max must be between 1 and 6"));
    }
    let check: fn(&mut ChaCha8Rng, usize) -> Result<(), String> = match property {
        "prop-2-6" => |rng, max| {
            let space = random_t0_space(rng, max);
            match kb_sober_iff_si_identity(&space) {
                Ok(true) => Ok(()),
                Ok(false) => Err("equivalence failed".to_string()),
                Err(e) => Err(e.to_string()),
            }
        },
        "prop-2-4" => |rng, max| {
            let source = random_t0_space(rng, max.min(4));
            let target = random_t0_space(rng, max.min(4));
            for _ in 0..8 {
                let map = random_continuous_map(rng, &source, &target);
                match si_continuity_iff_sup_preserving(&map) {
                    Ok(true) => {}
                    Ok(false) => return Err("equivalence failed".to_string()),
                    Err(e) => return Err(e.to_string()),
                }
            }
            Ok(())
        },
        "prop-2-8" => |rng, max| {
            let a = random_t0_space(rng, max.min(4));
            let b = random_t0_space(rng, max.min(4));
            let prod = product(&[&a, &b]).map_err(|e| e.to_string())?;
            match check_sobriety(&prod, SobrietyProperty::KBoundedSober) {
                Ok(v) if v.holds => Ok(()),
                Ok(v) => Err(format!(
                    "product not k-bounded sober: {}",
                    v.witness.map(|w| prod.render(w.set)).unwrap_or_default()
                )),
                Err(e) => Err(e.to_string()),
            }
        },
        "sobriety-collapse" => |rng, max| {
            let space = random_t0_space(rng, max);
            for property in SobrietyProperty::ALL {
                match check_sobriety(&space, property) {
                    Ok(v) if v.holds => {}
                    Ok(v) => {
                        return Err(format!(
                            "{property} failed: {}",
                            v.witness.map(|w| space.render(w.set)).unwrap_or_default()
                        ))
                    }
                    Err(e) => return Err(e.to_string()),
                }
            }
            Ok(())
        },
        "irreducibles-are-point-closures" => |rng, max| {
            let space = random_t0_space(rng, max);
            let records = space
                .irreducible_closed_records()
                .map_err(|e| e.to_string())?;
            let mut closures: Vec<Subset> =
                (0..space.len()).map(|x| space.point_closure(x)).collect();
            closures.sort();
            closures.dedup();
            if records.iter().map(|r| r.set).eq(closures) {
                Ok(())
            } else {
                Err("irreducible closed sets differ from point closures".to_string())
            }
        },
        "quotient-homeomorphism" => |rng, max| {
            let space = random_t0_space(rng, max.min(5));
            quotient_si_homeomorphism(&space)
                .map(|_| ())
                .map_err(|e| e.to_string())
        },
        "reflector-laws" => |rng, max| {
            let source = random_t0_space(rng, max.min(4));
            let target = random_t0_space(rng, max.min(4));
            let f = random_reflective_map(rng, &source, &target);
            let report = reflector(&source, &f).map_err(|e| e.to_string())?;
            let roundtrip = report
                .eta
                .compose(&report.f_bar)
                .map_err(|e| e.to_string())?;
            if roundtrip == f {
                Ok(())
            } else {
                Err("f̄∘η differs from f".to_string())
            }
        },
        other => {
            return Err(input_err(format!(
                "unknown fuzz property `{other}` (expected prop-2-6|prop-2-4|prop-2-8|sobriety-collapse|irreducibles-are-point-closures|quotient-homeomorphism|reflector-laws)"
            )))
        }
    };
    let outcomes = pool::run_samples(samples as usize, |i| {
        let mut rng = sample_rng(seed, i as u64);
        check(&mut rng, carrier_max)
    });
    let mut reports = Vec::new();
    for (i, outcome) in outcomes.iter().enumerate() {
        if let Err(msg) = outcome {
            reports.push(CheckReport::new(
                format!("{property}[{i}]"),
                false,
                Some(msg.clone()),
                Mode::Exhaustive,
            ));
        }
    }
    let failures = reports.len();
    reports.push(CheckReport::new(
        property,
        failures == 0,
        (failures > 0).then(|| format!("{failures} failing samples")),
        Mode::Sampled(samples),
    ));
    Ok(emit_all(ctx, &reports))
}

fn contract_to_input(e: soberscope::ContractError) -> CmdError {
    input_err(e.to_string())
}

fn construction_to_input(e: ConstructionError) -> CmdError {
    input_err(e.to_string())
}
