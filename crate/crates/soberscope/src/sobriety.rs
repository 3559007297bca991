//! The sobriety hierarchy and the irreducibly-derived (SI) topology on
//! finite spaces.
//!
//! An open set U is SI-open when every irreducible set whose supremum
//! lands in U already meets U. Quantifying over irreducible *closed* sets
//! suffices: a set and its closure share their supremum, and an open set
//! meets a set iff it meets its closure. The definitional quantification
//! over all irreducible subsets is kept as a slow cross-check.

use crate::error::ContractError;
use crate::map::SpaceMap;
use crate::set::{canonical_family, Subset};
use crate::space::{validate_topology, FiniteSpace, IrreducibleRecord};

/// One level of the sobriety hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SobrietyProperty {
    /// Every irreducible closed set has a (unique) generic point.
    Sober,
    /// Every upper-bounded irreducible closed set has a generic point.
    BoundedSober,
    /// Every irreducible closed set with a supremum has a generic point.
    KBoundedSober,
}

impl SobrietyProperty {
    pub const ALL: [SobrietyProperty; 3] = [
        SobrietyProperty::Sober,
        SobrietyProperty::BoundedSober,
        SobrietyProperty::KBoundedSober,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SobrietyProperty::Sober => "sober",
            SobrietyProperty::BoundedSober => "bounded-sober",
            SobrietyProperty::KBoundedSober => "k-bounded-sober",
        }
    }
}

impl std::fmt::Display for SobrietyProperty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The outcome of a sobriety check. When the property fails, `witness` is
/// the canonically least irreducible closed set that satisfies the
/// property's side condition yet has no generic point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SobrietyVerdict {
    pub property: SobrietyProperty,
    pub holds: bool,
    pub witness: Option<IrreducibleRecord>,
}

/// Whether an irreducible closed record triggers the side condition of a
/// given property: `sober` looks at every record, `bounded-sober` only at
/// upper-bounded ones, `k-bounded-sober` only at those with a supremum.
fn side_condition(space: &FiniteSpace, property: SobrietyProperty, rec: &IrreducibleRecord) -> bool {
    match property {
        SobrietyProperty::Sober => true,
        SobrietyProperty::BoundedSober => (0..space.len())
            .any(|b| rec.set.iter().all(|x| space.specialization_leq(x, b))),
        SobrietyProperty::KBoundedSober => rec.sup.is_some(),
    }
}

/// Runs one sobriety check on a finite T0 space.
pub fn check_sobriety(
    space: &FiniteSpace,
    property: SobrietyProperty,
) -> Result<SobrietyVerdict, ContractError> {
    let records = space.irreducible_closed_records()?;
    // Uniqueness of generic points is automatic in T0: two generic points
    // of the same closed set would share their closure.
    let witness = records
        .iter()
        .find(|rec| side_condition(space, property, rec) && rec.generic_point.is_none())
        .copied();
    Ok(SobrietyVerdict {
        property,
        holds: witness.is_none(),
        witness,
    })
}

/// SI-openness of an open set, quantified over irreducible closed sets.
pub fn is_si_open(space: &FiniteSpace, u: Subset) -> Result<bool, ContractError> {
    if !space.is_open(u) {
        return Err(ContractError::NotOpen {
            set: space.render(u),
        });
    }
    let records = space.irreducible_closed_records()?;
    Ok(si_open_against(&records, u))
}

fn si_open_against(records: &[IrreducibleRecord], u: Subset) -> bool {
    records.iter().all(|rec| match rec.sup {
        Some(s) if u.contains(s) => rec.set.meets(u),
        _ => true,
    })
}

/// SI-openness straight from the definition: quantifies over *all*
/// irreducible subsets, not just closed ones. Exponential; used to
/// cross-validate [`is_si_open`] on small carriers.
pub fn is_si_open_definitional(space: &FiniteSpace, u: Subset) -> Result<bool, ContractError> {
    if !space.is_open(u) {
        return Err(ContractError::NotOpen {
            set: space.render(u),
        });
    }
    for f in Subset::all(space.len()) {
        if f.is_empty() || !space.is_irreducible_definitional(f) {
            continue;
        }
        if let Some(s) = space.sup(f)? {
            if u.contains(s) && !f.meets(u) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// SI-closedness of a closed set: every irreducible set inside it with a
/// supremum keeps that supremum inside.
pub fn is_si_closed(space: &FiniteSpace, c: Subset) -> Result<bool, ContractError> {
    if !space.is_closed(c) {
        return Err(ContractError::NotClosed {
            set: space.render(c),
        });
    }
    let records = space.irreducible_closed_records()?;
    Ok(records.iter().all(|rec| match rec.sup {
        Some(s) if rec.set.is_subset_of(c) => c.contains(s),
        _ => true,
    }))
}

/// A base space together with its SI-topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSpace {
    base: FiniteSpace,
    si_opens: Vec<Subset>,
}

impl DerivedSpace {
    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn si_opens(&self) -> &[Subset] {
        &self.si_opens
    }

    /// The carrier with the SI-topology, as a space in its own right.
    pub fn space(&self) -> FiniteSpace {
        FiniteSpace::new(self.base.labels(), self.si_opens.clone())
            .expect("SI-opens form a topology")
    }

    /// True when deriving changed nothing, i.e. τ = τ_SI.
    pub fn is_identity(&self) -> bool {
        self.si_opens == self.base.opens()
    }
}

/// Computes the SI-topology of a finite T0 space.
pub fn derive_si(space: &FiniteSpace) -> Result<DerivedSpace, ContractError> {
    let records = space.irreducible_closed_records()?;
    let si_opens: Vec<Subset> = space
        .opens()
        .iter()
        .copied()
        .filter(|&u| si_open_against(&records, u))
        .collect();
    let si_opens = canonical_family(si_opens);
    debug_assert!(validate_topology(space.len(), &si_opens).is_empty());
    Ok(DerivedSpace {
        base: space.clone(),
        si_opens,
    })
}

/// Checks the equivalence "k-bounded sober iff τ = τ_SI" on one space.
/// The equivalence is a theorem, so a `false` return is a library bug
/// surfaced to the caller.
pub fn kb_sober_iff_si_identity(space: &FiniteSpace) -> Result<bool, ContractError> {
    let verdict = check_sobriety(space, SobrietyProperty::KBoundedSober)?;
    let derived = derive_si(space)?;
    Ok(verdict.holds == derived.is_identity())
}

/// Continuity witness: an open of the target whose preimage is not open,
/// or `None` when the map is continuous.
pub fn continuity_witness(map: &SpaceMap) -> Option<Subset> {
    map.target()
        .opens()
        .iter()
        .copied()
        .find(|&v| !map.source().is_open(map.preimage_of(v)))
}

pub fn is_continuous(map: &SpaceMap) -> bool {
    continuity_witness(map).is_none()
}

/// Witness that a map fails to preserve existing irreducible suprema: the
/// canonically least irreducible closed set F of the source such that
/// ⋁F exists but ⋁f(F) either does not exist or differs from f(⋁F).
/// Quantifying over irreducible closed sets suffices for the same reason
/// as in SI-openness.
pub fn sup_preservation_witness(map: &SpaceMap) -> Result<Option<Subset>, ContractError> {
    let records = map.source().irreducible_closed_records()?;
    // Images and their sups live in the target; require it T0 too.
    for rec in &records {
        let Some(s) = rec.sup else { continue };
        let image_sup = map.target().sup(map.image_of(rec.set))?;
        if image_sup != Some(map.apply(s)) {
            return Ok(Some(rec.set));
        }
    }
    Ok(None)
}

pub fn preserves_irreducible_sups(map: &SpaceMap) -> Result<bool, ContractError> {
    Ok(sup_preservation_witness(map)?.is_none())
}

/// Definitional version over all irreducible subsets of the source.
pub fn sup_preservation_witness_definitional(
    map: &SpaceMap,
) -> Result<Option<Subset>, ContractError> {
    for f in Subset::all(map.source().len()) {
        if f.is_empty() || !map.source().is_irreducible_definitional(f) {
            continue;
        }
        if let Some(s) = map.source().sup(f)? {
            let image_sup = map.target().sup(map.image_of(f))?;
            if image_sup != Some(map.apply(s)) {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

/// Checks, for one continuous map, the equivalence "continuous between
/// the SI-spaces iff preserves existing irreducible suprema". Requires
/// the map to be continuous between the base spaces; always true unless
/// this library is broken.
pub fn si_continuity_iff_sup_preserving(map: &SpaceMap) -> Result<bool, ContractError> {
    if let Some(witness) = continuity_witness(map) {
        return Err(ContractError::NotContinuous {
            witness: map.target().render(witness),
        });
    }
    let si_source = derive_si(map.source())?.space();
    let si_target = derive_si(map.target())?.space();
    let si_map = SpaceMap::new(si_source, si_target, map.table().to_vec())?;
    let si_continuous = is_continuous(&si_map);
    let preserves = preserves_irreducible_sups(map)?;
    Ok(si_continuous == preserves)
}

/// Builds the product of k-bounded sober factors and reports whether it is
/// k-bounded sober again (it always is; `false` flags a library bug).
pub fn product_is_kb_sober(factors: &[&FiniteSpace]) -> Result<bool, ContractError> {
    for f in factors {
        let v = check_sobriety(f, SobrietyProperty::KBoundedSober)?;
        if !v.holds {
            return Err(ContractError::TargetNotKBoundedSober {
                witness: v
                    .witness
                    .map(|w| f.render(w.set))
                    .unwrap_or_default(),
            });
        }
    }
    let prod = crate::space::product(factors).map_err(|_| ContractError::Unsupported {
        what: "product".into(),
        detail: "factor list empty or product too large".into(),
    })?;
    Ok(check_sobriety(&prod, SobrietyProperty::KBoundedSober)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{string_labels, FinitePoset};
    use crate::space::{alexandroff, sierpinski};

    fn discrete(n: usize) -> FiniteSpace {
        let labels: Vec<String> = (0..n).map(|i| format!("d{i}")).collect();
        alexandroff(&FinitePoset::new(labels, &[]).unwrap())
    }

    #[test]
    fn whole_carrier_is_si_open() {
        let s = sierpinski();
        assert!(is_si_open(&s, s.carrier()).unwrap());
        assert!(is_si_open(&s, Subset::EMPTY).unwrap());
    }

    #[test]
    fn si_open_requires_openness() {
        let s = sierpinski();
        assert!(matches!(
            is_si_open(&s, Subset::from_indices([0])),
            Err(ContractError::NotOpen { .. })
        ));
    }

    #[test]
    fn derive_si_fixes_finite_spaces() {
        for space in [sierpinski(), discrete(3)] {
            let d = derive_si(&space).unwrap();
            assert!(d.is_identity());
            assert_eq!(d.space(), space);
        }
    }

    #[test]
    fn si_closed_trivia() {
        let s = sierpinski();
        assert!(is_si_closed(&s, Subset::EMPTY).unwrap());
        assert!(is_si_closed(&s, s.carrier()).unwrap());
        assert!(matches!(
            is_si_closed(&s, Subset::from_indices([1])),
            Err(ContractError::NotClosed { .. })
        ));
    }

    #[test]
    fn finite_spaces_are_sober_at_all_levels() {
        for space in [sierpinski(), discrete(4)] {
            for p in SobrietyProperty::ALL {
                let v = check_sobriety(&space, p).unwrap();
                assert!(v.holds, "{p} failed on a finite T0 space");
                assert!(v.witness.is_none());
            }
        }
    }

    #[test]
    fn si_equivalence_on_examples() {
        assert!(kb_sober_iff_si_identity(&sierpinski()).unwrap());
        assert!(kb_sober_iff_si_identity(&discrete(3)).unwrap());
    }

    #[test]
    fn continuity_examples() {
        let s = sierpinski();
        assert!(is_continuous(&SpaceMap::identity(&s)));
        // Constant maps are continuous.
        assert!(is_continuous(&SpaceMap::constant(&s, &s, 0)));
        // Swapping the Sierpinski points is not: the preimage of {b} is {a}.
        let swap = SpaceMap::new(s.clone(), s.clone(), vec![1, 0]).unwrap();
        assert_eq!(continuity_witness(&swap), Some(Subset::from_indices([1])));
    }

    #[test]
    fn sup_preservation_examples() {
        let s = sierpinski();
        assert!(preserves_irreducible_sups(&SpaceMap::identity(&s)).unwrap());
        assert!(preserves_irreducible_sups(&SpaceMap::constant(&s, &s, 1)).unwrap());
    }

    #[test]
    fn prop_2_4_shape_on_identity_and_exhaustive_small_maps() {
        let s = sierpinski();
        assert!(si_continuity_iff_sup_preserving(&SpaceMap::identity(&s)).unwrap());
        let d = discrete(2);
        // All functions between two 2-point spaces, keeping the continuous ones.
        for spaces in [(&s, &d), (&d, &s), (&s, &s)] {
            let (src, tgt) = spaces;
            for a in 0..tgt.len() {
                for b in 0..tgt.len() {
                    let map = SpaceMap::new(src.clone(), tgt.clone(), vec![a, b]).unwrap();
                    if is_continuous(&map) {
                        assert!(si_continuity_iff_sup_preserving(&map).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn discontinuous_input_is_a_contract_error() {
        let s = sierpinski();
        let swap = SpaceMap::new(s.clone(), s, vec![1, 0]).unwrap();
        assert!(matches!(
            si_continuity_iff_sup_preserving(&swap),
            Err(ContractError::NotContinuous { .. })
        ));
    }

    #[test]
    fn products_of_kb_sober_spaces() {
        let s = sierpinski();
        let point = FiniteSpace::new(&["*"], vec![Subset::EMPTY, Subset::full(1)]).unwrap();
        assert!(product_is_kb_sober(&[&s, &s]).unwrap());
        assert!(product_is_kb_sober(&[&point, &s]).unwrap());
    }

    #[test]
    fn slow_definitional_cross_checks() {
        // On small spaces the closed-set quantification and the full
        // subset quantification must agree, for SI-openness and for sup
        // preservation.
        let spaces = [
            sierpinski(),
            discrete(3),
            alexandroff(
                &FinitePoset::new(string_labels(&["a", "b", "c"]), &[(0, 2), (1, 2)]).unwrap(),
            ),
        ];
        for space in &spaces {
            for &u in space.opens() {
                assert_eq!(
                    is_si_open(space, u).unwrap(),
                    is_si_open_definitional(space, u).unwrap()
                );
            }
        }
        for space in &spaces {
            let id = SpaceMap::identity(space);
            assert_eq!(
                sup_preservation_witness(&id).unwrap().is_none(),
                sup_preservation_witness_definitional(&id)
                    .unwrap()
                    .is_none()
            );
        }
    }
}
