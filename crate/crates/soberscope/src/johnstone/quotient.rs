//! The SI-derivation and the sup-quotient over the grid ambients, and
//! the qk-bounded sobriety verdicts built from them.
//!
//! The quotient of the space of sup-bounded irreducible closed sets by
//! equal suprema is homeomorphic to the SI-space of the base, so a
//! symbolic qk-bounded sobriety check composes two decidable pieces:
//! identify the SI-derived closed family of the base, then run the
//! k-bounded sobriety classification against that family.

use super::classify::{
    classify_irreducible_closed, expected_irreducible, sample_grid_set, ClassificationReport,
    GridSet, Height, JTopologyKind,
};
use super::element::{Ambient, ApexTag, JElement};
use super::SymbolicSobrietyVerdict;
use crate::sobriety::SobrietyProperty;

/// Outcome of verifying where the SI-derivation of a grid topology lands.
#[derive(Debug, Clone)]
pub struct SiDerivationReport {
    pub ambient: Ambient,
    pub from: JTopologyKind,
    pub to: JTopologyKind,
    /// Closed sets sampled for the equivalence check.
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SiDerivationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Whether the open complement of a closed grid set is SI-open: every
/// irreducible closed set of the `from`-family whose supremum lands in
/// the complement must meet the complement.
fn complement_is_si_open(ambient: Ambient, from: JTopologyKind, c: &GridSet) -> bool {
    match from {
        JTopologyKind::Alexandroff => {
            // The irreducible down-sets are point closures (harmless) and
            // the untopped full columns, with supremum (m, ∞). The
            // complement traps such a supremum exactly at a column whose
            // trace is full but whose top is missing from c... i.e. the
            // condition fails iff c has a column of height FullNoTop.
            let (e, o) = c.defaults();
            e != Height::FullNoTop
                && o != Height::FullNoTop
                && c.overrides().values().all(|&h| h != Height::FullNoTop)
        }
        JTopologyKind::Scott => {
            // Point closures are harmless; the whole grid has a supremum
            // only in P (the top apex). The complement traps it exactly
            // when c contains the grid but not the apex.
            if ambient != Ambient::P {
                return true;
            }
            let grid_inside = {
                let (e, o) = c.defaults();
                e == Height::FullWithTop && o == Height::FullWithTop
            };
            !(grid_inside && !c.apexes().contains(&ApexTag::Top))
        }
        JTopologyKind::ScottSi => true,
    }
}

/// The SI-derivation of a grid topology, verified closed set by closed
/// set over a sampled pool: Alexandroff derives to Scott, the Scott
/// topology of `P` derives to Scott-minus-the-grid, and everything
/// already k-bounded sober derives to itself.
pub fn derive_si_grid(
    ambient: Ambient,
    from: JTopologyKind,
    bound: u64,
    seed: u64,
    samples: usize,
) -> SiDerivationReport {
    let to = match from {
        JTopologyKind::Alexandroff => JTopologyKind::Scott,
        JTopologyKind::Scott if ambient == Ambient::P => JTopologyKind::ScottSi,
        other => other,
    };
    let mut report = SiDerivationReport {
        ambient,
        from,
        to,
        checked: 0,
        failures: Vec::new(),
        notes: Vec::new(),
    };
    let mut rng = crate::gen::sample_rng(seed, 0x51);
    for _ in 0..samples {
        let c = sample_grid_set(&mut rng, ambient, from, bound);
        report.checked += 1;
        let si_open = complement_is_si_open(ambient, from, &c);
        let lands_in_to = c.is_closed(ambient, to);
        if si_open != lands_in_to {
            report.failures.push(format!(
                "complement of {c}: SI-open={si_open} but membership in the {to} family={lands_in_to}"
            ));
        }
    }
    report.notes.push(format!(
        "SI-derivation of ({ambient}, {from}) lands in the {to} family; checked on {} sampled closed sets",
        report.checked
    ));
    report
}

/// A symbolic qk-bounded sobriety verdict, with the supporting pieces.
#[derive(Debug, Clone)]
pub struct SymbolicQkReport {
    pub ambient: Ambient,
    pub topology: JTopologyKind,
    pub verdict: SymbolicSobrietyVerdict,
    /// Where the quotient lives (the SI-derived family of the base).
    pub quotient_flavor: JTopologyKind,
    pub kb_classification: ClassificationReport,
    pub si_derivation: SiDerivationReport,
    pub quotient_classification: ClassificationReport,
}

impl SymbolicQkReport {
    pub fn verified(&self) -> bool {
        self.kb_classification.passed()
            && self.si_derivation.passed()
            && self.quotient_classification.passed()
    }
}

/// qk-bounded sobriety of a grid ambient: k-bounded sobriety of the
/// quotient of its sup-bounded irreducible closed sets, computed through
/// the SI-space the quotient is homeomorphic to.
pub fn is_qk_bounded_sober_grid(
    ambient: Ambient,
    topology: JTopologyKind,
    bound: u64,
    seed: u64,
) -> SymbolicQkReport {
    let samples = 400;
    // The classes of the quotient are keyed by attained suprema; the
    // classification of the base family identifies the KB points.
    let kb_classification = classify_irreducible_closed(ambient, topology, bound, seed, samples);
    let si_derivation = derive_si_grid(ambient, topology, bound, seed, samples);
    let quotient_flavor = si_derivation.to;
    let quotient_classification =
        classify_irreducible_closed(ambient, quotient_flavor, bound, seed, samples);
    // k-bounded sobriety over the quotient family: point closures carry
    // their generic points; the remaining families decide the verdict.
    let mut witness = None;
    for family in &quotient_classification.families {
        match family {
            super::classify::IrreducibleFamily::PointClosures => {}
            super::classify::IrreducibleFamily::WholeGrid => {
                let sup = super::descriptor::sup_of(
                    ambient,
                    &super::descriptor::JClosedDescriptor::whole_grid(),
                )
                .expect("nonempty");
                if let Some(sup) = sup {
                    witness = Some(super::SymbolicRecord {
                        description: "{[↓x] : x ∈ J}".to_string(),
                        sup: Some(sup),
                        generic_point: None,
                    });
                }
            }
            super::classify::IrreducibleFamily::ColumnsWithoutTop => {
                unreachable!("SI-derived families contain no untopped columns")
            }
        }
    }
    let mut notes = vec![format!(
        "quotient of ({ambient}, {topology}) is homeomorphic to ({ambient}, {quotient_flavor})"
    )];
    notes.extend(si_derivation.notes.clone());
    let verdict = SymbolicSobrietyVerdict {
        property: SobrietyProperty::KBoundedSober,
        holds: witness.is_none(),
        witness,
        bound,
        notes,
    };
    SymbolicQkReport {
        ambient,
        topology,
        verdict,
        quotient_flavor,
        kb_classification,
        si_derivation,
        quotient_classification,
    }
}

/// The sup-equivalence respects the classified KB points: every class is
/// generated by a point closure. Used by scenario bundles as a sanity
/// fact.
pub fn classes_are_generated(ambient: Ambient, topology: JTopologyKind, bound: u64, seed: u64) -> bool {
    // For each classified irreducible closed set with a supremum s, the
    // point closure of s is an equivalent KB point.
    let mut rng = crate::gen::sample_rng(seed, 0x9c);
    for _ in 0..200 {
        let c = sample_grid_set(&mut rng, ambient, topology, bound);
        if !expected_irreducible(ambient, topology, &c) {
            continue;
        }
        let sup = grid_set_sup(ambient, &c);
        if let Some(s) = sup {
            let pc = GridSet::point_closure(ambient, s);
            if grid_set_sup(ambient, &pc) != Some(s) {
                return false;
            }
        }
    }
    true
}

/// Supremum of an irreducible closed grid set, combining the descriptor
/// arithmetic with the untopped-column rule.
pub fn grid_set_sup(ambient: Ambient, c: &GridSet) -> Option<JElement> {
    if let Some(max) = c.maximum(ambient) {
        return Some(max);
    }
    if *c == GridSet::whole_grid() {
        return super::descriptor::sup_of(ambient, &super::descriptor::JClosedDescriptor::whole_grid())
            .expect("nonempty");
    }
    // A single untopped column has supremum (m, ∞); checked against the
    // truncation oracle in tests.
    let untopped: Vec<u64> = c
        .overrides()
        .iter()
        .filter(|(_, &h)| h == Height::FullNoTop)
        .map(|(&col, _)| col)
        .collect();
    let (e, o) = c.defaults();
    if e == Height::Fin(0) && o == Height::Fin(0) && untopped.len() == 1 {
        let col = untopped[0];
        let only_col = c
            .overrides()
            .iter()
            .all(|(&k, &h)| k == col || h == Height::Fin(0));
        if only_col {
            return Some(JElement::column_top(col));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn si_derivation_targets() {
        let r = derive_si_grid(Ambient::P, JTopologyKind::Alexandroff, 12, 3, 300);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.to, JTopologyKind::Scott);

        let r = derive_si_grid(Ambient::P, JTopologyKind::Scott, 12, 3, 300);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.to, JTopologyKind::ScottSi);

        for ambient in [Ambient::X, Ambient::Y, Ambient::J] {
            let r = derive_si_grid(ambient, JTopologyKind::Scott, 12, 3, 300);
            assert!(r.passed(), "{ambient}: {:?}", r.failures);
            assert_eq!(r.to, JTopologyKind::Scott, "{ambient} is already k-bounded sober");
        }
    }

    #[test]
    fn p_alexandroff_is_not_qk_bounded_sober() {
        let report = is_qk_bounded_sober_grid(Ambient::P, JTopologyKind::Alexandroff, 12, 3);
        assert!(report.verified());
        assert!(!report.verdict.holds);
        let w = report.verdict.witness.unwrap();
        assert_eq!(w.description, "{[↓x] : x ∈ J}");
        assert_eq!(w.sup, Some(JElement::Apex(ApexTag::Top)));
    }

    #[test]
    fn p_scott_is_qk_bounded_sober() {
        let report = is_qk_bounded_sober_grid(Ambient::P, JTopologyKind::Scott, 12, 3);
        assert!(report.verified());
        assert!(report.verdict.holds);
        assert_eq!(report.quotient_flavor, JTopologyKind::ScottSi);
    }

    #[test]
    fn kb_sober_grids_are_qk_bounded_sober() {
        for ambient in [Ambient::X, Ambient::Y] {
            let report = is_qk_bounded_sober_grid(ambient, JTopologyKind::Scott, 12, 3);
            assert!(report.verified());
            assert!(report.verdict.holds, "{ambient}");
        }
    }

    #[test]
    fn generated_classes_and_column_sups() {
        assert!(classes_are_generated(Ambient::P, JTopologyKind::Alexandroff, 12, 5));
        assert!(classes_are_generated(Ambient::P, JTopologyKind::Scott, 12, 5));
        // Col_m sups: over the full poset the upper bounds of a whole
        // untopped column are its own top and the apexes, nothing else.
        use crate::johnstone::element::j_leq_unchecked;
        use crate::johnstone::truncation::TruncatedPoset;
        let t = TruncatedPoset::new(Ambient::P, 8);
        for col in [1, 3, 7] {
            let c = GridSet::column_without_top(col);
            assert_eq!(grid_set_sup(Ambient::P, &c), Some(JElement::column_top(col)));
            for &e in t.elements() {
                // e bounds the full column iff it dominates unboundedly
                // tall members, which only (col, ∞) and apexes do.
                let bounds_full_column = match e {
                    JElement::ColumnTop { col: k } => k == col,
                    JElement::Apex(_) => true,
                    _ => false,
                };
                let dominates_probe = (1..=200u64)
                    .all(|n| j_leq_unchecked(Ambient::P, JElement::finite(col, n), e));
                assert_eq!(bounds_full_column, dominates_probe, "{e}");
                if bounds_full_column {
                    assert!(j_leq_unchecked(
                        Ambient::P,
                        JElement::column_top(col),
                        e
                    ));
                }
            }
        }
    }
}
