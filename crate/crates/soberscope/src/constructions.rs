//! Constructions on finite T0 spaces: the sobrification, the space of
//! sup-bounded irreducible closed sets with its co-topology, the quotient
//! identifying sets with equal suprema, the homeomorphism between that
//! quotient and the SI-space, and the universal arrow into k-bounded
//! sober targets.

use crate::error::{bug, ContractError, LibraryBug};
use crate::map::SpaceMap;
use crate::set::{canonical_family, Subset};
use crate::sobriety::{
    check_sobriety, continuity_witness, derive_si, is_continuous, sup_preservation_witness,
    SobrietyProperty, SobrietyVerdict,
};
use crate::space::{FiniteSpace, IrreducibleRecord};

#[derive(Debug, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Contract(#[from] ContractError),
    #[error(transparent)]
    Bug(#[from] LibraryBug),
}

/// The sobrification of a finite T0 space: points are the irreducible
/// closed sets, opens are the sets of points meeting a base open.
#[derive(Debug, Clone)]
pub struct Sobrification {
    /// The sobrified space; point `i` is `point_sets[i]`.
    pub space: FiniteSpace,
    /// The irreducible closed subsets of the base, in canonical order.
    pub point_sets: Vec<Subset>,
    /// The unit x ↦ cl({x}), as a map of spaces.
    pub unit: SpaceMap,
}

pub fn sobrify(base: &FiniteSpace) -> Result<Sobrification, ConstructionError> {
    let records = base.irreducible_closed_records()?;
    let point_sets: Vec<Subset> = records.iter().map(|r| r.set).collect();
    let labels: Vec<String> = point_sets.iter().map(|&s| base.render(s)).collect();
    let opens: Vec<Subset> = base
        .opens()
        .iter()
        .map(|&u| {
            Subset::from_indices(
                point_sets
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a.meets(u))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    let space = FiniteSpace::new(&labels, opens)
        .map_err(|e| bug(format!("sobrification opens are not a topology: {e}")))?;
    let unit_table: Vec<usize> = (0..base.len())
        .map(|x| {
            point_sets
                .iter()
                .position(|&a| a == base.point_closure(x))
                .expect("every point closure is an irreducible closed set")
        })
        .collect();
    let unit = SpaceMap::new(base.clone(), space.clone(), unit_table)?;
    if unit.injectivity_violation().is_some() {
        return Err(bug("sobrification unit is not injective on a T0 base").into());
    }
    if let Some(w) = embedding_witness(&unit)? {
        return Err(bug(format!(
            "sobrification unit is not an embedding; witness {}",
            base.render(w)
        ))
        .into());
    }
    let sober = check_sobriety(&space, SobrietyProperty::Sober)?;
    if !sober.holds {
        return Err(bug("sobrification is not sober").into());
    }
    Ok(Sobrification {
        space,
        point_sets,
        unit,
    })
}

/// The space of irreducible closed sets whose supremum exists, carrying
/// the co-topology whose closed sets are `K_F = { A : A ⊆ F }` for F
/// closed in the base.
#[derive(Debug, Clone)]
pub struct KbSpace {
    pub space: FiniteSpace,
    /// Point `i` of `space` is `points[i]`; every record has `sup`.
    pub points: Vec<IrreducibleRecord>,
    /// The co-topology `{K_F}` over point indices, canonical order.
    pub closed_family: Vec<Subset>,
    /// The unit x ↦ cl({x}).
    pub unit: SpaceMap,
}

impl KbSpace {
    /// `K_F` for a closed set of the base.
    pub fn k_of(&self, f: Subset) -> Subset {
        Subset::from_indices(
            self.points
                .iter()
                .enumerate()
                .filter(|(_, r)| r.set.is_subset_of(f))
                .map(|(i, _)| i),
        )
    }

    pub fn point_index(&self, set: Subset) -> Option<usize> {
        self.points.iter().position(|r| r.set == set)
    }
}

pub fn kb_space(base: &FiniteSpace) -> Result<KbSpace, ConstructionError> {
    let records = base.irreducible_closed_records()?;
    let points: Vec<IrreducibleRecord> =
        records.into_iter().filter(|r| r.sup.is_some()).collect();
    let labels: Vec<String> = points.iter().map(|r| base.render(r.set)).collect();
    let n = points.len();
    let k_of = |f: Subset| {
        Subset::from_indices(
            points
                .iter()
                .enumerate()
                .filter(|(_, r)| r.set.is_subset_of(f))
                .map(|(i, _)| i),
        )
    };
    let base_closeds = base.closeds();
    let closed_family = canonical_family(base_closeds.iter().map(|&f| k_of(f)).collect());
    // Co-topology laws. Closure of the family under finite unions and
    // intersections follows from these, but check membership directly too.
    for (i, &f) in base_closeds.iter().enumerate() {
        for &g in &base_closeds[i..] {
            if k_of(f.intersect(g)) != k_of(f).intersect(k_of(g)) {
                return Err(bug("K_{F∩G} != K_F ∩ K_G").into());
            }
            // Irreducibility forces any member of K_{F∪G} into one side.
            if k_of(f.union(g)) != k_of(f).union(k_of(g)) {
                return Err(bug("K_{F∪G} != K_F ∪ K_G").into());
            }
        }
    }
    if !closed_family.contains(&Subset::EMPTY) || !closed_family.contains(&Subset::full(n)) {
        return Err(bug("co-topology misses the empty set or the full point set").into());
    }
    let opens: Vec<Subset> = closed_family.iter().map(|&c| c.complement(n)).collect();
    let space = FiniteSpace::new(&labels, opens)
        .map_err(|e| bug(format!("co-topology complements are not a topology: {e}")))?;
    let unit_table: Vec<usize> = (0..base.len())
        .map(|x| {
            points
                .iter()
                .position(|r| r.set == base.point_closure(x))
                .expect("point closures have suprema")
        })
        .collect();
    let unit = SpaceMap::new(base.clone(), space.clone(), unit_table)?;
    let kb = KbSpace {
        space,
        points,
        closed_family,
        unit,
    };
    let verdict = check_sobriety(&kb.space, SobrietyProperty::KBoundedSober)?;
    if !verdict.holds {
        return Err(bug("KB space failed its own k-bounded sobriety check").into());
    }
    Ok(kb)
}

/// The quotient of the KB space identifying sets with equal suprema.
#[derive(Debug, Clone)]
pub struct KbQuotient {
    pub kb: KbSpace,
    /// The quotient space; point `c` is the class `classes[c]`.
    pub space: FiniteSpace,
    /// Members of each class, as KB point indices.
    pub classes: Vec<Vec<usize>>,
    /// The common supremum of each class, as a base point.
    pub class_sup: Vec<usize>,
    /// The projection KB → quotient.
    pub projection: SpaceMap,
}

impl KbQuotient {
    /// The class of the KB point holding cl({x}).
    pub fn class_of_point_closure(&self, x: usize) -> usize {
        self.class_sup
            .iter()
            .position(|&s| s == x)
            .expect("every point closure generates a class")
    }
}

pub fn kb_quotient(base: &FiniteSpace) -> Result<KbQuotient, ConstructionError> {
    let kb = kb_space(base)?;
    // Classes keyed by the supremum; the key order is the base point order.
    let mut sups: Vec<usize> = kb.points.iter().map(|r| r.sup.unwrap()).collect();
    let mut class_sup: Vec<usize> = sups.clone();
    class_sup.sort_unstable();
    class_sup.dedup();
    sups.truncate(sups.len()); // keep clippy quiet about unused mut reuse
    let classes: Vec<Vec<usize>> = class_sup
        .iter()
        .map(|&s| {
            kb.points
                .iter()
                .enumerate()
                .filter(|(_, r)| r.sup == Some(s))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let labels: Vec<String> = class_sup
        .iter()
        .map(|&s| format!("[↓{}]", base.label(s)))
        .collect();
    let m = classes.len();
    let class_of: Vec<usize> = kb
        .points
        .iter()
        .map(|r| {
            class_sup
                .iter()
                .position(|&s| Some(s) == r.sup)
                .expect("class key")
        })
        .collect();
    let preimage = |family: Subset| {
        Subset::from_indices((0..kb.points.len()).filter(|&i| family.contains(class_of[i])))
    };
    // Quotient topology: a set of classes is open iff its projection
    // preimage is open upstairs. Materialized by filtering all subsets
    // when the class count allows, otherwise through the SI-closed
    // characterization (verified against the filter on small instances).
    let opens: Vec<Subset> = if m <= 20 {
        Subset::all(m)
            .filter(|&u| kb.space.is_open(preimage(u)))
            .collect()
    } else {
        let derived = derive_si(base)?;
        derived
            .si_opens()
            .iter()
            .map(|&u| {
                Subset::from_indices(
                    (0..m).filter(|&c| u.contains(class_sup[c])),
                )
            })
            .collect()
    };
    let space = FiniteSpace::new(&labels, opens)
        .map_err(|e| bug(format!("quotient family is not a topology: {e}")))?;
    let projection = SpaceMap::new(kb.space.clone(), space.clone(), class_of)?;
    if !is_continuous(&projection) {
        return Err(bug("quotient projection is not continuous").into());
    }
    let quotient = KbQuotient {
        kb,
        space,
        classes,
        class_sup,
        projection,
    };
    verify_quotient_closed_characterization(base, &quotient)?;
    Ok(quotient)
}

/// Both directions of the closed-set characterization of the quotient:
/// a family of classes is quotient-closed iff it is `{[cl x] : x ∈ B}`
/// for an SI-closed B of the base.
fn verify_quotient_closed_characterization(
    base: &FiniteSpace,
    q: &KbQuotient,
) -> Result<(), ConstructionError> {
    let derived = derive_si(base)?;
    let si_closeds: Vec<Subset> = derived
        .si_opens()
        .iter()
        .map(|&u| u.complement(base.len()))
        .collect();
    let class_family_of = |b: Subset| {
        Subset::from_indices(
            (0..q.classes.len()).filter(|&c| b.contains(q.class_sup[c])),
        )
    };
    let quotient_closeds = q.space.closeds();
    for &b in &si_closeds {
        if !quotient_closeds.contains(&class_family_of(b)) {
            return Err(bug(format!(
                "SI-closed {} does not induce a quotient-closed family",
                base.render(b)
            ))
            .into());
        }
    }
    for &fam in &quotient_closeds {
        let induced = si_closeds.iter().any(|&b| class_family_of(b) == fam);
        if !induced {
            return Err(bug(format!(
                "quotient-closed family {} is not induced by any SI-closed set",
                q.space.render(fam)
            ))
            .into());
        }
    }
    Ok(())
}

/// A verified homeomorphism between the quotient and the SI-space,
/// given by sending a class to its common supremum.
#[derive(Debug, Clone)]
pub struct QuotientHomeomorphism {
    pub quotient: KbQuotient,
    pub si_space: FiniteSpace,
    /// Pairs (class label, base point label) of the bijection.
    pub bijection: Vec<(String, String)>,
}

/// Builds the map `class ↦ its supremum` from the quotient to the
/// SI-space of the base and verifies it is a homeomorphism: bijective,
/// continuous, and closed. Failure is a library bug, not a property of
/// the input.
pub fn quotient_si_homeomorphism(
    base: &FiniteSpace,
) -> Result<QuotientHomeomorphism, ConstructionError> {
    let quotient = kb_quotient(base)?;
    let si_space = derive_si(base)?.space();
    let forward = SpaceMap::new(
        quotient.space.clone(),
        si_space.clone(),
        quotient.class_sup.clone(),
    )?;
    if !forward.is_injective() {
        return Err(bug("class-to-sup map is not injective").into());
    }
    if quotient.classes.len() != si_space.len() {
        return Err(bug("class-to-sup map is not surjective").into());
    }
    if let Some(w) = continuity_witness(&forward) {
        return Err(bug(format!(
            "class-to-sup map is not continuous; witness {}",
            si_space.render(w)
        ))
        .into());
    }
    // Closedness: the image of each quotient-closed family is closed.
    for fam in quotient.space.closeds() {
        let image = forward.image_of(fam);
        if !si_space.is_closed(image) {
            return Err(bug(format!(
                "image {} of a quotient-closed family is not SI-closed",
                si_space.render(image)
            ))
            .into());
        }
    }
    let bijection = quotient
        .class_sup
        .iter()
        .enumerate()
        .map(|(c, &s)| {
            (
                quotient.space.label(c).to_string(),
                base.label(s).to_string(),
            )
        })
        .collect();
    Ok(QuotientHomeomorphism {
        quotient,
        si_space,
        bijection,
    })
}

/// qk-bounded sobriety: k-bounded sobriety of the quotient. The result is
/// cross-checked against k-bounded sobriety of the SI-space, which the
/// quotient is homeomorphic to.
pub fn is_qk_bounded_sober(base: &FiniteSpace) -> Result<SobrietyVerdict, ConstructionError> {
    let quotient = kb_quotient(base)?;
    let verdict = check_sobriety(&quotient.space, SobrietyProperty::KBoundedSober)?;
    let si_verdict = check_sobriety(&derive_si(base)?.space(), SobrietyProperty::KBoundedSober)?;
    if verdict.holds != si_verdict.holds {
        return Err(bug("quotient and SI-space disagree on k-bounded sobriety").into());
    }
    Ok(verdict)
}

/// How uniqueness of a mediating map was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniquenessMode {
    /// All candidate continuous maps were enumerated.
    Exhaustive { candidates: u128 },
    /// Agreement was checked on the generated points (classes of point
    /// closures); on these quotients every class is generated, so this
    /// still pins the map everywhere.
    GeneratedPoints,
}

impl std::fmt::Display for UniquenessMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UniquenessMode::Exhaustive { candidates } => {
                write!(f, "exhaustive over {candidates} candidate maps")
            }
            UniquenessMode::GeneratedPoints => write!(f, "generated points"),
        }
    }
}

const EXHAUSTIVE_CANDIDATE_CAP: u128 = 1_000_000;

/// The universal arrow out of a qk-bounded sober space into a k-bounded
/// sober target, together with its verified laws.
#[derive(Debug, Clone)]
pub struct ReflectorReport {
    /// η : X → KB(X)/∼, x ↦ [cl x].
    pub eta: SpaceMap,
    /// The mediating map on the quotient.
    pub f_bar: SpaceMap,
    pub quotient: KbQuotient,
    pub uniqueness_mode: UniquenessMode,
}

pub fn reflector(
    base: &FiniteSpace,
    f: &SpaceMap,
) -> Result<ReflectorReport, ConstructionError> {
    if let Some(w) = continuity_witness(f) {
        return Err(ContractError::NotContinuous {
            witness: f.target().render(w),
        }
        .into());
    }
    if let Some(w) = sup_preservation_witness(f)? {
        return Err(ContractError::NotSupPreserving {
            witness: f.source().render(w),
        }
        .into());
    }
    let target_verdict = check_sobriety(f.target(), SobrietyProperty::KBoundedSober)?;
    if !target_verdict.holds {
        return Err(ContractError::TargetNotKBoundedSober {
            witness: target_verdict
                .witness
                .map(|w| f.target().render(w.set))
                .unwrap_or_default(),
        }
        .into());
    }
    let source_verdict = is_qk_bounded_sober(base)?;
    if !source_verdict.holds {
        return Err(ContractError::SourceNotQkBoundedSober {
            witness: source_verdict
                .witness
                .map(|w| w.render(base))
                .unwrap_or_default(),
        }
        .into());
    }
    let quotient = kb_quotient(base)?;
    let eta_table: Vec<usize> = (0..base.len())
        .map(|x| quotient.class_of_point_closure(x))
        .collect();
    let eta = SpaceMap::new(base.clone(), quotient.space.clone(), eta_table)?;
    if !is_continuous(&eta) {
        return Err(bug("unit into the quotient is not continuous").into());
    }
    if sup_preservation_witness(&eta)?.is_some() {
        return Err(bug("unit into the quotient does not preserve irreducible sups").into());
    }
    // f̄(class) = f(common sup of the class).
    let f_bar_table: Vec<usize> = quotient.class_sup.iter().map(|&s| f.apply(s)).collect();
    let f_bar = SpaceMap::new(quotient.space.clone(), f.target().clone(), f_bar_table)?;
    if !is_continuous(&f_bar) {
        return Err(bug("mediating map is not continuous").into());
    }
    if eta.compose(&f_bar)? != *f {
        return Err(bug("mediating map does not factor f through the unit").into());
    }
    let uniqueness_mode = verify_reflector_uniqueness(&quotient, &eta, &f_bar, f)?;
    Ok(ReflectorReport {
        eta,
        f_bar,
        quotient,
        uniqueness_mode,
    })
}

fn verify_reflector_uniqueness(
    quotient: &KbQuotient,
    eta: &SpaceMap,
    f_bar: &SpaceMap,
    f: &SpaceMap,
) -> Result<UniquenessMode, ConstructionError> {
    let m = quotient.space.len();
    let t = f.target().len();
    let candidates = (t as u128).saturating_pow(m as u32);
    if candidates <= EXHAUSTIVE_CANDIDATE_CAP {
        for table in crate::gen::all_tables(m, t) {
            let g = SpaceMap::new(quotient.space.clone(), f.target().clone(), table)?;
            if !is_continuous(&g) {
                continue;
            }
            if eta.compose(&g)? == *f && g != *f_bar {
                return Err(bug("a second mediating map satisfies g∘η = f").into());
            }
        }
        Ok(UniquenessMode::Exhaustive { candidates })
    } else {
        // Any g with g∘η = f is pinned on classes of point closures; on
        // these quotients that is every class, so check f̄ agrees with the
        // forced values there.
        for (c, &s) in quotient.class_sup.iter().enumerate() {
            if f_bar.apply(c) != f.apply(s) {
                return Err(bug("mediating map disagrees on a generated point").into());
            }
        }
        Ok(UniquenessMode::GeneratedPoints)
    }
}

/// The universal arrow landing in the KB space rather than its quotient:
/// f̄(F) = f(⋁F), with the verified law that the preimage of a closed B
/// is exactly `K` of `f⁻¹(B)`.
#[derive(Debug, Clone)]
pub struct KbMapReport {
    pub kb: KbSpace,
    /// f̄ : KB(X) → Y.
    pub f_bar: SpaceMap,
    pub uniqueness_mode: UniquenessMode,
}

pub fn kb_universal_map(
    base: &FiniteSpace,
    f: &SpaceMap,
) -> Result<KbMapReport, ConstructionError> {
    if let Some(w) = continuity_witness(f) {
        return Err(ContractError::NotContinuous {
            witness: f.target().render(w),
        }
        .into());
    }
    if let Some(w) = sup_preservation_witness(f)? {
        return Err(ContractError::NotSupPreserving {
            witness: f.source().render(w),
        }
        .into());
    }
    let target_verdict = check_sobriety(f.target(), SobrietyProperty::KBoundedSober)?;
    if !target_verdict.holds {
        return Err(ContractError::TargetNotKBoundedSober {
            witness: target_verdict
                .witness
                .map(|w| f.target().render(w.set))
                .unwrap_or_default(),
        }
        .into());
    }
    let kb = kb_space(base)?;
    let f_bar_table: Vec<usize> = kb
        .points
        .iter()
        .map(|r| f.apply(r.sup.expect("KB points have sups")))
        .collect();
    let f_bar = SpaceMap::new(kb.space.clone(), f.target().clone(), f_bar_table)?;
    // Continuity through the co-topology: preimage of closed B is K_{f⁻¹(B)}.
    for b in f.target().closeds() {
        let preimage = f_bar.preimage_of(b.complement(f.target().len()))
            .complement(kb.space.len());
        if preimage != kb.k_of(f.preimage_of(b.complement(f.target().len()))
            .complement(base.len()))
        {
            return Err(bug("preimage of a closed set is not K of the base preimage").into());
        }
    }
    if kb.unit.compose(&f_bar)? != *f {
        return Err(bug("KB mediating map does not factor f through the unit").into());
    }
    let m = kb.space.len();
    let t = f.target().len();
    let candidates = (t as u128).saturating_pow(m as u32);
    let uniqueness_mode = if candidates <= EXHAUSTIVE_CANDIDATE_CAP {
        for table in crate::gen::all_tables(m, t) {
            let g = SpaceMap::new(kb.space.clone(), f.target().clone(), table)?;
            if !is_continuous(&g) {
                continue;
            }
            if kb.unit.compose(&g)? == *f && g != f_bar {
                return Err(bug("a second mediating map satisfies g∘ξ = f").into());
            }
        }
        UniquenessMode::Exhaustive { candidates }
    } else {
        for (i, r) in kb.points.iter().enumerate() {
            if let Some(x) = r.generic_point {
                if f_bar.apply(i) != f.apply(x) {
                    return Err(bug("KB mediating map disagrees on a generated point").into());
                }
            }
        }
        UniquenessMode::GeneratedPoints
    };
    Ok(KbMapReport {
        kb,
        f_bar,
        uniqueness_mode,
    })
}

/// Whether an injective continuous map is a homeomorphism onto its image:
/// returns `None` when it is, otherwise the canonically least source open
/// whose image is not relatively open.
pub fn embedding_witness(map: &SpaceMap) -> Result<Option<Subset>, ConstructionError> {
    if let Some((a, b)) = map.injectivity_violation() {
        return Err(ContractError::NotInjective {
            a: map.source().label(a).to_string(),
            b: map.source().label(b).to_string(),
        }
        .into());
    }
    if let Some(w) = continuity_witness(map) {
        return Err(ContractError::NotContinuous {
            witness: map.target().render(w),
        }
        .into());
    }
    let image = map.image_of(map.source().carrier());
    for &u in map.source().opens() {
        let image_u = map.image_of(u);
        let relatively_open = map
            .target()
            .opens()
            .iter()
            .any(|&w| w.intersect(image) == image_u);
        if !relatively_open {
            return Ok(Some(u));
        }
    }
    Ok(None)
}
