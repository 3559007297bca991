//! The named piecewise maps between the symbolic posets, with their
//! property checks: monotonicity by structured sampling, Scott
//! continuity by symbolic preimages of closed descriptors cross-checked
//! pointwise, and preservation of irreducible suprema over the
//! classified irreducible closed sets.

use rand::Rng;

use crate::error::ContractError;

use super::classify::{GridSet, JTopologyKind};
use super::descriptor::{sup_of, JClosedDescriptor};
use super::element::{j_leq_unchecked, Ambient, ApexTag, JElement};

/// The named maps used by the counterexample scenarios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JPiecewiseMap {
    /// P → X: identity on the grid, the top goes to ⊤₁.
    FCase1,
    /// P → Y: identity on the grid, the top goes to ⊤₃.
    FCase2,
    /// Y → Y: identity on the grid, every apex goes to ⊤₃.
    GCollapse,
    /// (ω+1, Υ) → the sobrification of ω: n ↦ ↓n, ∞ ↦ N. Handled by the
    /// chain module; listed here so map names parse uniformly.
    XiOmega,
}

impl JPiecewiseMap {
    pub fn name(self) -> &'static str {
        match self {
            JPiecewiseMap::FCase1 => "f-case1",
            JPiecewiseMap::FCase2 => "f-case2",
            JPiecewiseMap::GCollapse => "g-collapse",
            JPiecewiseMap::XiOmega => "xi-omega",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "f-case1" => Some(JPiecewiseMap::FCase1),
            "f-case2" => Some(JPiecewiseMap::FCase2),
            "g-collapse" => Some(JPiecewiseMap::GCollapse),
            "xi-omega" => Some(JPiecewiseMap::XiOmega),
            _ => None,
        }
    }

    pub fn source(self) -> Ambient {
        match self {
            JPiecewiseMap::FCase1 | JPiecewiseMap::FCase2 => Ambient::P,
            JPiecewiseMap::GCollapse => Ambient::Y,
            JPiecewiseMap::XiOmega => Ambient::OmegaPlusOne,
        }
    }

    pub fn target(self) -> Ambient {
        match self {
            JPiecewiseMap::FCase1 => Ambient::X,
            JPiecewiseMap::FCase2 | JPiecewiseMap::GCollapse => Ambient::Y,
            JPiecewiseMap::XiOmega => Ambient::OmegaPlusOne,
        }
    }
}

impl std::fmt::Display for JPiecewiseMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluates a named map on an element of its source ambient.
pub fn eval(map: JPiecewiseMap, e: JElement) -> Result<JElement, ContractError> {
    if !e.is_valid_in(map.source()) {
        return Err(ContractError::InvalidElement {
            element: format!("{e} in {}", map.source()),
        });
    }
    Ok(eval_unchecked(map, e))
}

pub(crate) fn eval_unchecked(map: JPiecewiseMap, e: JElement) -> JElement {
    match map {
        JPiecewiseMap::FCase1 => match e {
            JElement::Apex(ApexTag::Top) => JElement::Apex(ApexTag::Top1),
            other => other,
        },
        JPiecewiseMap::FCase2 => match e {
            JElement::Apex(ApexTag::Top) => JElement::Apex(ApexTag::Top3),
            other => other,
        },
        JPiecewiseMap::GCollapse => match e {
            JElement::Apex(_) => JElement::Apex(ApexTag::Top3),
            other => other,
        },
        // Under the identification of the sobrification of ω with the
        // Scott chain ω+1, ξ is the identity on points.
        JPiecewiseMap::XiOmega => e,
    }
}

/// Symbolic preimage of a closed target descriptor under a grid map.
/// The grid part passes through unchanged; the source apex lands inside
/// exactly when its image does.
pub fn preimage_descriptor(
    map: JPiecewiseMap,
    target_closed: &JClosedDescriptor,
) -> Result<JClosedDescriptor, ContractError> {
    let source = map.source();
    if !source.is_grid() {
        return Err(ContractError::Unsupported {
            what: "descriptor preimage".into(),
            detail: "chain maps are handled by the chain module".into(),
        });
    }
    let apexes = source
        .apexes()
        .iter()
        .copied()
        .filter(|&t| target_closed.contains(eval_unchecked(map, JElement::Apex(t))))
        .collect();
    Ok(JClosedDescriptor::from_parts(
        target_closed.is_whole(),
        target_closed.strip(),
        target_closed.extras().clone(),
        target_closed.tops().clone(),
        apexes,
    ))
}

/// Verdict of one verified map law.
#[derive(Debug, Clone)]
pub struct LawOutcome {
    pub law: String,
    pub holds: bool,
    pub witness: Option<String>,
}

/// Property report for a named grid map.
#[derive(Debug, Clone)]
pub struct MapPropertyReport {
    pub map: JPiecewiseMap,
    pub bound: u64,
    pub monotone: LawOutcome,
    pub scott_continuous: LawOutcome,
    /// Preservation of suprema per classified irreducible closed set of
    /// the source (under its Scott topology): (description, preserved).
    pub sup_preservation: Vec<(String, bool)>,
    pub notes: Vec<String>,
}

/// Structured sample of source elements with coordinates up to `bound`.
fn sample_elements(ambient: Ambient, bound: u64, rng: &mut impl Rng) -> Vec<JElement> {
    let mut out = Vec::new();
    for col in [1, 2, 3, bound / 2, bound] {
        let col = col.max(1);
        for height in [1, 2, bound / 2, bound] {
            out.push(JElement::finite(col, height.max(1)));
        }
        out.push(JElement::column_top(col));
    }
    for _ in 0..64 {
        out.push(JElement::finite(
            rng.random_range(1..=bound),
            rng.random_range(1..=bound),
        ));
        out.push(JElement::column_top(rng.random_range(1..=bound)));
    }
    out.extend(ambient.apexes().iter().map(|&t| JElement::Apex(t)));
    out
}

/// Checks monotonicity, Scott continuity and sup preservation of a named
/// grid map up to the bound.
pub fn check_map_properties(
    map: JPiecewiseMap,
    bound: u64,
    seed: u64,
) -> Result<MapPropertyReport, ContractError> {
    if map == JPiecewiseMap::XiOmega {
        return Err(ContractError::Unsupported {
            what: "grid map property check".into(),
            detail: "xi-omega is a chain map; see the chain module checks".into(),
        });
    }
    let source = map.source();
    let target = map.target();
    let mut rng = crate::gen::sample_rng(seed, 0x3a9);
    let elements = sample_elements(source, bound, &mut rng);

    // Monotonicity on all sampled pairs.
    let mut monotone = LawOutcome {
        law: format!("{map} is monotone"),
        holds: true,
        witness: None,
    };
    for &a in &elements {
        for &b in &elements {
            if j_leq_unchecked(source, a, b) {
                let fa = eval_unchecked(map, a);
                let fb = eval_unchecked(map, b);
                if !j_leq_unchecked(target, fa, fb) {
                    monotone.holds = false;
                    monotone.witness = Some(format!("{a} ≤ {b} but {fa} ≰ {fb}"));
                }
            }
        }
    }

    // Scott continuity: the preimage of each sampled closed descriptor is
    // a valid Scott-closed descriptor whose membership matches pointwise.
    let mut scott_continuous = LawOutcome {
        law: format!("{map} is Scott continuous"),
        holds: true,
        witness: None,
    };
    for _ in 0..256 {
        let closed_grid =
            super::classify::sample_grid_set(&mut rng, target, JTopologyKind::Scott, bound);
        let Some(closed) = descriptor_of_grid_set(&closed_grid) else {
            continue;
        };
        let preimage = preimage_descriptor(map, &closed)?;
        for &e in &elements {
            let direct = closed.contains(eval_unchecked(map, e));
            if preimage.contains(e) != direct {
                scott_continuous.holds = false;
                scott_continuous.witness =
                    Some(format!("preimage of {closed} disagrees at {e}"));
            }
        }
    }

    // Sup preservation on the classified irreducible closed sets of the
    // source under its Scott topology: point closures (whose suprema any
    // monotone map preserves, spot-checked here) and the whole grid.
    let mut sup_preservation = Vec::new();
    for &e in &elements {
        let pc = JClosedDescriptor::point_closure(source, e)?;
        let Some(sup) = sup_of(source, &pc)? else {
            continue;
        };
        let image = image_descriptor(map, &pc);
        let image_sup = sup_of(target, &image)?;
        sup_preservation.push((
            format!("↓{e}"),
            image_sup == Some(eval_unchecked(map, sup)),
        ));
    }
    let grid = JClosedDescriptor::whole_grid();
    if let Some(sup) = sup_of(source, &grid)? {
        let image_sup = sup_of(target, &image_descriptor(map, &grid))?;
        sup_preservation.push(("J".to_string(), image_sup == Some(eval_unchecked(map, sup))));
    }

    Ok(MapPropertyReport {
        map,
        bound,
        monotone,
        scott_continuous,
        sup_preservation,
        notes: vec![format!(
            "pointwise checks sampled with coordinates ≤ {bound}"
        )],
    })
}

/// The image of a closed descriptor under a named grid map: the grid
/// part is fixed pointwise, apexes map through the rule. (Images of
/// closed sets need not be closed; they are used here only for suprema.)
pub fn image_descriptor(map: JPiecewiseMap, d: &JClosedDescriptor) -> JClosedDescriptor {
    let apexes = d
        .apexes()
        .iter()
        .map(|&t| match eval_unchecked(map, JElement::Apex(t)) {
            JElement::Apex(s) => s,
            _ => unreachable!("apexes map to apexes"),
        })
        .collect();
    JClosedDescriptor::from_parts(
        d.is_whole(),
        d.strip(),
        d.extras().clone(),
        d.tops().clone(),
        apexes,
    )
}

/// Converts a uniform grid set back into a descriptor when possible.
fn descriptor_of_grid_set(g: &GridSet) -> Option<JClosedDescriptor> {
    use super::classify::Height;
    let (even, odd) = g.defaults();
    if even != odd {
        return None;
    }
    let (whole, strip) = match even {
        Height::Fin(s) => (false, s),
        Height::FullWithTop => (true, 0),
        Height::FullNoTop => return None,
    };
    if whole {
        return Some(JClosedDescriptor::from_parts(
            true,
            0,
            Default::default(),
            Default::default(),
            g.apexes().clone(),
        ));
    }
    let mut extras = std::collections::BTreeMap::new();
    let mut tops = std::collections::BTreeSet::new();
    for (&col, &h) in g.overrides() {
        match h {
            Height::Fin(x) => {
                extras.insert(col, x);
            }
            Height::FullWithTop => {
                tops.insert(col);
            }
            Height::FullNoTop => return None,
        }
    }
    Some(JClosedDescriptor::from_parts(
        false,
        strip,
        extras,
        tops,
        g.apexes().clone(),
    ))
}

/// Pointwise equation check `g ∘ f = f` (and any other composite
/// equality) over all elements with coordinates up to the bound.
pub fn composite_equals(
    outer: JPiecewiseMap,
    inner: JPiecewiseMap,
    expected: JPiecewiseMap,
    bound: u64,
) -> Result<LawOutcome, ContractError> {
    let mut outcome = LawOutcome {
        law: format!("{outer}∘{inner} = {expected}"),
        holds: true,
        witness: None,
    };
    let source = inner.source();
    let mut probe = |e: JElement| -> Result<(), ContractError> {
        let lhs = eval(outer, eval(inner, e)?)?;
        let rhs = eval(expected, e)?;
        if lhs != rhs {
            outcome.holds = false;
            outcome.witness = Some(format!("{e}: {lhs} vs {rhs}"));
        }
        Ok(())
    };
    for col in 1..=bound {
        for height in 1..=bound {
            probe(JElement::finite(col, height))?;
        }
        probe(JElement::column_top(col))?;
    }
    for &t in source.apexes() {
        probe(JElement::Apex(t))?;
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_rules() {
        assert_eq!(
            eval(JPiecewiseMap::FCase1, JElement::Apex(ApexTag::Top)).unwrap(),
            JElement::Apex(ApexTag::Top1)
        );
        assert_eq!(
            eval(JPiecewiseMap::FCase1, JElement::finite(4, 9)).unwrap(),
            JElement::finite(4, 9)
        );
        assert_eq!(
            eval(JPiecewiseMap::FCase2, JElement::Apex(ApexTag::Top)).unwrap(),
            JElement::Apex(ApexTag::Top3)
        );
        for t in [ApexTag::Top1, ApexTag::Top2, ApexTag::Top3] {
            assert_eq!(
                eval(JPiecewiseMap::GCollapse, JElement::Apex(t)).unwrap(),
                JElement::Apex(ApexTag::Top3)
            );
        }
        // Totality: elements outside the source ambient are rejected.
        assert!(eval(JPiecewiseMap::FCase1, JElement::Apex(ApexTag::Top3)).is_err());
        assert!(eval(JPiecewiseMap::GCollapse, JElement::Apex(ApexTag::Top)).is_err());
    }

    #[test]
    fn grid_restriction_is_identity_and_g_idempotent() {
        for col in 1..=20 {
            for height in 1..=20 {
                let e = JElement::finite(col, height);
                assert_eq!(eval_unchecked(JPiecewiseMap::FCase1, e), e);
                assert_eq!(eval_unchecked(JPiecewiseMap::FCase2, e), e);
                assert_eq!(eval_unchecked(JPiecewiseMap::GCollapse, e), e);
            }
            let t = JElement::column_top(col);
            assert_eq!(eval_unchecked(JPiecewiseMap::FCase1, t), t);
        }
        // g ∘ g = g.
        for e in [
            JElement::finite(3, 3),
            JElement::column_top(7),
            JElement::Apex(ApexTag::Top1),
            JElement::Apex(ApexTag::Top3),
        ] {
            let once = eval_unchecked(JPiecewiseMap::GCollapse, e);
            let twice = eval_unchecked(JPiecewiseMap::GCollapse, once);
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn g_after_f_is_f() {
        let outcome = composite_equals(
            JPiecewiseMap::GCollapse,
            JPiecewiseMap::FCase2,
            JPiecewiseMap::FCase2,
            24,
        )
        .unwrap();
        assert!(outcome.holds, "{:?}", outcome.witness);
    }

    #[test]
    fn map_property_reports() {
        for map in [
            JPiecewiseMap::FCase1,
            JPiecewiseMap::FCase2,
            JPiecewiseMap::GCollapse,
        ] {
            let report = check_map_properties(map, 16, 11).unwrap();
            assert!(report.monotone.holds, "{map}: {:?}", report.monotone.witness);
            assert!(
                report.scott_continuous.holds,
                "{map}: {:?}",
                report.scott_continuous.witness
            );
            // Point closures always preserve; the grid preserves only
            // under g (whose target supremum also fails to exist).
            for (desc, preserved) in &report.sup_preservation {
                if desc == "J" {
                    assert!(!preserved, "{map}: ⋁f(J) must not match, or not exist");
                } else {
                    assert!(preserved, "{map}: {desc}");
                }
            }
        }
    }

    #[test]
    fn preimages_of_apex_closed_sets() {
        // f-case1 preimage of ↓⊤₁ in X is all of P.
        let top1 = JClosedDescriptor::point_closure(Ambient::X, JElement::Apex(ApexTag::Top1))
            .unwrap();
        let pre = preimage_descriptor(JPiecewiseMap::FCase1, &top1).unwrap();
        assert!(pre.contains(JElement::Apex(ApexTag::Top)));
        assert!(pre.is_whole());
        // ... of ↓⊤₂ is the grid without the top.
        let top2 = JClosedDescriptor::point_closure(Ambient::X, JElement::Apex(ApexTag::Top2))
            .unwrap();
        let pre = preimage_descriptor(JPiecewiseMap::FCase1, &top2).unwrap();
        assert!(!pre.contains(JElement::Apex(ApexTag::Top)));
        assert!(pre.is_whole());
        assert!(pre.apexes().is_empty());
    }
}
