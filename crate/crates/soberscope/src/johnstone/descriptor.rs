//! Finitely described Scott-closed subsets of the grid ambients.
//!
//! A descriptor covers a uniform strip of height `g` across all columns,
//! finitely many exceptional columns reaching above the strip, finitely
//! many columns included entirely together with their top, optional apex
//! points, or the whole grid. Down-closure forces a topped column `m` to
//! drag the strip up to height `m`, and any apex to drag in the whole
//! grid. This class is closed under finite unions and intersections and
//! contains every point closure, which is what the checks need.
//!
//! Scott-closed sets outside the class exist (arbitrary unbounded height
//! profiles), but their upper bounds lie among the apexes only, so they
//! can never witness a k-bounded sobriety failure in the two-apex
//! ambients; the sobriety reports record that argument next to the
//! bounded sweeps.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::ContractError;

use super::element::{Ambient, ApexTag, JElement};

/// Raw descriptor fields before validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DescriptorSpec {
    pub whole: bool,
    pub strip: u64,
    pub extras: Vec<(u64, u64)>,
    pub tops: Vec<u64>,
    pub apexes: Vec<ApexTag>,
}

/// Why raw descriptor fields do not describe a Scott-closed set.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DescriptorViolation {
    #[error("apex {0} is not a point of ambient {1}")]
    ApexInvalid(ApexTag, Ambient),
    #[error("apex {0} requires the whole grid below it (not down-closed)")]
    ApexWithoutWhole(ApexTag),
    #[error("⊤₃ requires ⊤₁ and ⊤₂ (not down-closed)")]
    Top3WithoutLowerApexes,
    #[error("topped column {col} requires strip at least {col}, found {strip} (not down-closed)")]
    TopOutsideStrip { col: u64, strip: u64 },
    #[error("exceptional column {col} has height {height} not above the strip {strip}")]
    ExtraNotAboveStrip { col: u64, height: u64, strip: u64 },
    #[error("column {col} is both topped and exceptional")]
    ExtraOnToppedColumn { col: u64 },
    #[error("columns and heights are 1-based; found 0")]
    ZeroCoordinate,
    #[error("the whole grid leaves no room for strip, extras or tops")]
    WholeWithGridParts,
}

/// A validated, canonical Scott-closed descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JClosedDescriptor {
    whole: bool,
    strip: u64,
    extras: BTreeMap<u64, u64>,
    tops: BTreeSet<u64>,
    apexes: BTreeSet<ApexTag>,
}

impl JClosedDescriptor {
    /// Validates raw fields for an ambient. Every violated invariant is a
    /// genuine failure of down-closure, Scott-closure or canonical form.
    pub fn new(ambient: Ambient, spec: &DescriptorSpec) -> Result<Self, DescriptorViolation> {
        for &tag in &spec.apexes {
            if !ambient.admits_apex(tag) {
                return Err(DescriptorViolation::ApexInvalid(tag, ambient));
            }
            if !spec.whole {
                return Err(DescriptorViolation::ApexWithoutWhole(tag));
            }
        }
        if spec.apexes.contains(&ApexTag::Top3)
            && !(spec.apexes.contains(&ApexTag::Top1) && spec.apexes.contains(&ApexTag::Top2))
        {
            return Err(DescriptorViolation::Top3WithoutLowerApexes);
        }
        if spec.whole {
            if spec.strip != 0 || !spec.extras.is_empty() || !spec.tops.is_empty() {
                return Err(DescriptorViolation::WholeWithGridParts);
            }
            return Ok(Self::from_parts(
                true,
                0,
                BTreeMap::new(),
                BTreeSet::new(),
                spec.apexes.iter().copied().collect(),
            ));
        }
        let mut tops = BTreeSet::new();
        for &col in &spec.tops {
            if col == 0 {
                return Err(DescriptorViolation::ZeroCoordinate);
            }
            if spec.strip < col {
                return Err(DescriptorViolation::TopOutsideStrip {
                    col,
                    strip: spec.strip,
                });
            }
            tops.insert(col);
        }
        let mut extras = BTreeMap::new();
        for &(col, height) in &spec.extras {
            if col == 0 || height == 0 {
                return Err(DescriptorViolation::ZeroCoordinate);
            }
            if tops.contains(&col) {
                return Err(DescriptorViolation::ExtraOnToppedColumn { col });
            }
            if height <= spec.strip {
                return Err(DescriptorViolation::ExtraNotAboveStrip {
                    col,
                    height,
                    strip: spec.strip,
                });
            }
            let slot = extras.entry(col).or_insert(height);
            *slot = (*slot).max(height);
        }
        Ok(Self::from_parts(false, spec.strip, extras, tops, BTreeSet::new()))
    }

    /// Canonicalizing constructor for internal arithmetic.
    pub(crate) fn from_parts(
        whole: bool,
        strip: u64,
        extras: BTreeMap<u64, u64>,
        tops: BTreeSet<u64>,
        apexes: BTreeSet<ApexTag>,
    ) -> Self {
        if whole {
            return JClosedDescriptor {
                whole: true,
                strip: 0,
                extras: BTreeMap::new(),
                tops: BTreeSet::new(),
                apexes,
            };
        }
        let extras: BTreeMap<u64, u64> = extras
            .into_iter()
            .filter(|&(col, height)| height > strip && !tops.contains(&col))
            .collect();
        JClosedDescriptor {
            whole: false,
            strip,
            extras,
            tops,
            apexes,
        }
    }

    pub fn empty() -> Self {
        Self::from_parts(false, 0, BTreeMap::new(), BTreeSet::new(), BTreeSet::new())
    }

    /// The whole grid, without apexes.
    pub fn whole_grid() -> Self {
        Self::from_parts(true, 0, BTreeMap::new(), BTreeSet::new(), BTreeSet::new())
    }

    /// The whole ambient space (grid plus all apexes).
    pub fn whole_space(ambient: Ambient) -> Self {
        Self::from_parts(
            true,
            0,
            BTreeMap::new(),
            BTreeSet::new(),
            ambient.apexes().iter().copied().collect(),
        )
    }

    pub fn strip_of(g: u64) -> Self {
        Self::from_parts(false, g, BTreeMap::new(), BTreeSet::new(), BTreeSet::new())
    }

    /// The point closure of a grid element or apex.
    pub fn point_closure(ambient: Ambient, e: JElement) -> Result<Self, ContractError> {
        if !e.is_valid_in(ambient) || !ambient.is_grid() {
            return Err(ContractError::InvalidElement {
                element: format!("{e} in {ambient}"),
            });
        }
        Ok(match e {
            JElement::Finite { col, height } => Self::from_parts(
                false,
                0,
                BTreeMap::from([(col, height)]),
                BTreeSet::new(),
                BTreeSet::new(),
            ),
            JElement::ColumnTop { col } => Self::from_parts(
                false,
                col,
                BTreeMap::new(),
                BTreeSet::from([col]),
                BTreeSet::new(),
            ),
            JElement::Apex(tag) => {
                let mut apexes = BTreeSet::from([tag]);
                if tag == ApexTag::Top3 {
                    apexes.insert(ApexTag::Top1);
                    apexes.insert(ApexTag::Top2);
                }
                Self::from_parts(true, 0, BTreeMap::new(), BTreeSet::new(), apexes)
            }
            _ => unreachable!("grid ambients have no chain elements"),
        })
    }

    pub fn is_whole(&self) -> bool {
        self.whole
    }

    pub fn strip(&self) -> u64 {
        self.strip
    }

    pub fn extras(&self) -> &BTreeMap<u64, u64> {
        &self.extras
    }

    pub fn tops(&self) -> &BTreeSet<u64> {
        &self.tops
    }

    pub fn apexes(&self) -> &BTreeSet<ApexTag> {
        &self.apexes
    }

    pub fn is_empty(&self) -> bool {
        !self.whole
            && self.strip == 0
            && self.extras.is_empty()
            && self.tops.is_empty()
            && self.apexes.is_empty()
    }

    /// Exact membership.
    pub fn contains(&self, e: JElement) -> bool {
        match e {
            JElement::Finite { col, height } => {
                self.whole
                    || height <= self.strip
                    || self.tops.contains(&col)
                    || self.extras.get(&col).is_some_and(|&h| height <= h)
            }
            JElement::ColumnTop { col } => self.whole || self.tops.contains(&col),
            JElement::Apex(tag) => self.apexes.contains(&tag),
            JElement::Nat(_) | JElement::Omega => false,
        }
    }

    /// Height of a column as far as this descriptor is concerned:
    /// `None` means the whole column including its top.
    pub fn column_height(&self, col: u64) -> Option<u64> {
        if self.whole || self.tops.contains(&col) {
            None
        } else {
            Some(self.extras.get(&col).copied().unwrap_or(self.strip))
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        if self.whole || other.whole {
            return Self::from_parts(
                true,
                0,
                BTreeMap::new(),
                BTreeSet::new(),
                self.apexes.union(&other.apexes).copied().collect(),
            );
        }
        let strip = self.strip.max(other.strip);
        let tops: BTreeSet<u64> = self.tops.union(&other.tops).copied().collect();
        let mut extras = BTreeMap::new();
        for col in self.extras.keys().chain(other.extras.keys()) {
            let h = self
                .column_height(*col)
                .unwrap_or(u64::MAX)
                .max(other.column_height(*col).unwrap_or(u64::MAX));
            if h != u64::MAX {
                extras.insert(*col, h);
            }
        }
        Self::from_parts(
            false,
            strip,
            extras,
            tops,
            self.apexes.union(&other.apexes).copied().collect(),
        )
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let apexes: BTreeSet<ApexTag> = self.apexes.intersection(&other.apexes).copied().collect();
        if self.whole && other.whole {
            return Self::from_parts(true, 0, BTreeMap::new(), BTreeSet::new(), apexes);
        }
        if self.whole {
            return Self::from_parts(
                false,
                other.strip,
                other.extras.clone(),
                other.tops.clone(),
                apexes,
            );
        }
        if other.whole {
            return Self::from_parts(
                false,
                self.strip,
                self.extras.clone(),
                self.tops.clone(),
                apexes,
            );
        }
        let strip = self.strip.min(other.strip);
        let mut tops = BTreeSet::new();
        let mut extras = BTreeMap::new();
        let exceptional: BTreeSet<u64> = self
            .extras
            .keys()
            .chain(self.tops.iter())
            .chain(other.extras.keys())
            .chain(other.tops.iter())
            .copied()
            .collect();
        for col in exceptional {
            match (self.column_height(col), other.column_height(col)) {
                (None, None) => {
                    tops.insert(col);
                }
                (a, b) => {
                    let h = a.unwrap_or(u64::MAX).min(b.unwrap_or(u64::MAX));
                    if h > strip {
                        extras.insert(col, h);
                    }
                }
            }
        }
        Self::from_parts(false, strip, extras, tops, apexes)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        if !self.apexes.is_subset(&other.apexes) {
            return false;
        }
        if self.whole {
            return other.whole;
        }
        if other.whole {
            return true;
        }
        if self.strip > other.strip {
            // Cofinitely many columns of `self` reach height strip while
            // `other` stays lower there.
            return false;
        }
        let cols: BTreeSet<u64> = self
            .extras
            .keys()
            .chain(self.tops.iter())
            .copied()
            .collect();
        cols.into_iter().all(|col| {
            match (self.column_height(col), other.column_height(col)) {
                (_, None) => true,
                (None, Some(_)) => false,
                (Some(a), Some(b)) => a <= b,
            }
        })
    }

    /// A short human-readable rendering, `J` for the whole grid.
    pub fn render(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let mut parts = Vec::new();
        if self.whole {
            parts.push("J".to_string());
        } else {
            if self.strip > 0 {
                parts.push(format!("strip≤{}", self.strip));
            }
            for (&col, &h) in &self.extras {
                parts.push(format!("col{col}≤{h}"));
            }
            for &col in &self.tops {
                parts.push(format!("col{col}+top"));
            }
        }
        for &tag in &self.apexes {
            parts.push(format!("{{{tag}}}"));
        }
        parts.join(" ∪ ")
    }
}

impl std::fmt::Display for JClosedDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Checks whether raw fields describe a Scott-closed set of the ambient,
/// reporting the violated invariant otherwise. Within this family both
/// down-closure and closure under directed suprema reduce to the field
/// invariants: a directed subset of the grid either contains its maximum
/// or is cofinal in one column, whose top the representation forces in.
pub fn is_scott_closed(
    ambient: Ambient,
    spec: &DescriptorSpec,
) -> Result<JClosedDescriptor, DescriptorViolation> {
    JClosedDescriptor::new(ambient, spec)
}

/// The symbolic set of upper bounds of a descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBoundSet {
    /// `Some((m, h))`: every finite `(m, n)` with `n >= h` is an upper
    /// bound (only single-column descriptors have finite upper bounds).
    pub finite_from: Option<(u64, u64)>,
    /// Individually qualifying column tops.
    pub top_cols: BTreeSet<u64>,
    /// Every `(k, ∞)` with `k >=` this qualifies.
    pub tops_from: Option<u64>,
    /// Qualifying apexes.
    pub apexes: BTreeSet<ApexTag>,
}

impl UpperBoundSet {
    pub fn contains(&self, e: JElement) -> bool {
        match e {
            JElement::Finite { col, height } => self
                .finite_from
                .is_some_and(|(m, h)| col == m && height >= h),
            JElement::ColumnTop { col } => {
                self.top_cols.contains(&col) || self.tops_from.is_some_and(|k| col >= k)
            }
            JElement::Apex(tag) => self.apexes.contains(&tag),
            _ => false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.finite_from.is_none()
            && self.top_cols.is_empty()
            && self.tops_from.is_none()
            && self.apexes.is_empty()
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if let Some((m, h)) = self.finite_from {
            parts.push(format!("({m},n) for n≥{h}"));
        }
        for &col in &self.top_cols {
            parts.push(format!("({col},∞)"));
        }
        if let Some(k) = self.tops_from {
            parts.push(format!("(k,∞) for k≥{k}"));
        }
        for &tag in &self.apexes {
            parts.push(tag.name().to_string());
        }
        if parts.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", parts.join(", "))
        }
    }
}

/// Upper bounds of a nonempty descriptor, by column arithmetic: a top
/// `(k, ∞)` qualifies iff every member outside column `k` has height at
/// most `k`; finite bounds exist only over single-column descriptors;
/// apexes qualify when they dominate the descriptor's own apexes.
pub fn upper_bounds(
    ambient: Ambient,
    d: &JClosedDescriptor,
) -> Result<UpperBoundSet, ContractError> {
    if d.is_empty() {
        return Err(ContractError::EmptyDescriptor);
    }
    let apexes: BTreeSet<ApexTag> = ambient
        .apexes()
        .iter()
        .copied()
        .filter(|&t| d.apexes().iter().all(|&a| ambient.apex_leq(a, t)))
        .collect();
    if d.is_whole() {
        return Ok(UpperBoundSet {
            finite_from: None,
            top_cols: BTreeSet::new(),
            tops_from: None,
            apexes,
        });
    }
    // Single finite column: the only case with finite upper bounds.
    if d.strip() == 0 && d.tops().is_empty() && d.extras().len() == 1 {
        let (&col, &h) = d.extras().iter().next().unwrap();
        let mut top_cols = BTreeSet::new();
        if col < h {
            top_cols.insert(col);
        }
        return Ok(UpperBoundSet {
            finite_from: Some((col, h)),
            top_cols,
            tops_from: Some(h),
            apexes,
        });
    }
    match d.tops().len() {
        0 => {
            // tallest member height; k >= that always qualifies.
            let tallest = d
                .extras()
                .values()
                .copied()
                .max()
                .unwrap_or(0)
                .max(d.strip());
            // An exceptional column can absorb its own tallness.
            let mut top_cols = BTreeSet::new();
            for &col in d.extras().keys() {
                let outside = d
                    .extras()
                    .iter()
                    .filter(|&(&c, _)| c != col)
                    .map(|(_, &h)| h)
                    .max()
                    .unwrap_or(0)
                    .max(d.strip());
                if outside <= col && col < tallest {
                    top_cols.insert(col);
                }
            }
            Ok(UpperBoundSet {
                finite_from: None,
                top_cols,
                tops_from: Some(tallest.max(1)),
                apexes,
            })
        }
        1 => {
            let &t = d.tops().iter().next().unwrap();
            // (t, ∞) itself qualifies iff nothing outside column t climbs
            // above t: strip == t (it is >= t by validity) and no extras.
            let mut top_cols = BTreeSet::new();
            if d.strip() == t && d.extras().is_empty() {
                top_cols.insert(t);
            }
            Ok(UpperBoundSet {
                finite_from: None,
                top_cols,
                tops_from: None,
                apexes,
            })
        }
        _ => Ok(UpperBoundSet {
            finite_from: None,
            top_cols: BTreeSet::new(),
            tops_from: None,
            apexes,
        }),
    }
}

/// Least upper bound of a nonempty descriptor, when the upper-bound set
/// has a least element.
pub fn sup_of(ambient: Ambient, d: &JClosedDescriptor) -> Result<Option<JElement>, ContractError> {
    let ub = upper_bounds(ambient, d)?;
    if let Some((m, h)) = ub.finite_from {
        // The descriptor is a single finite column, so (m, h) is its
        // maximum and in particular below every other upper bound.
        return Ok(Some(JElement::finite(m, h)));
    }
    if ub.tops_from.is_some() {
        // Infinitely many pairwise incomparable tops qualify; no apex or
        // top sits below all of them.
        return Ok(None);
    }
    match ub.top_cols.len() {
        1 => {
            let &t = ub.top_cols.iter().next().unwrap();
            return Ok(Some(JElement::column_top(t)));
        }
        0 => {}
        _ => return Ok(None),
    }
    // Apexes only.
    Ok(ub
        .apexes
        .iter()
        .copied()
        .find(|&t| ub.apexes.iter().all(|&s| ambient.apex_leq(t, s)))
        .map(JElement::Apex))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(
        whole: bool,
        strip: u64,
        extras: &[(u64, u64)],
        tops: &[u64],
        apexes: &[ApexTag],
    ) -> DescriptorSpec {
        DescriptorSpec {
            whole,
            strip,
            extras: extras.to_vec(),
            tops: tops.to_vec(),
            apexes: apexes.to_vec(),
        }
    }

    #[test]
    fn membership_examples() {
        let strip3 = JClosedDescriptor::strip_of(3);
        assert!(strip3.contains(JElement::finite(7, 2)));
        assert!(!strip3.contains(JElement::finite(7, 4)));
        assert!(!strip3.contains(JElement::column_top(7)));

        let topped = JClosedDescriptor::new(Ambient::P, &spec(false, 4, &[], &[4], &[])).unwrap();
        assert!(topped.contains(JElement::finite(4, 100)));
        assert!(topped.contains(JElement::column_top(4)));
        assert!(!topped.contains(JElement::finite(5, 100)));

        assert!(!JClosedDescriptor::empty().contains(JElement::finite(1, 1)));
        assert!(JClosedDescriptor::empty().is_empty());
    }

    #[test]
    fn validation_violations() {
        let bad = JClosedDescriptor::new(Ambient::P, &spec(false, 2, &[], &[5], &[]));
        assert!(matches!(
            bad,
            Err(DescriptorViolation::TopOutsideStrip { col: 5, strip: 2 })
        ));
        let bad = JClosedDescriptor::new(Ambient::P, &spec(false, 3, &[(2, 3)], &[], &[]));
        assert!(matches!(bad, Err(DescriptorViolation::ExtraNotAboveStrip { .. })));
        let bad = JClosedDescriptor::new(Ambient::P, &spec(false, 0, &[], &[], &[ApexTag::Top]));
        assert!(matches!(bad, Err(DescriptorViolation::ApexWithoutWhole(_))));
        let bad = JClosedDescriptor::new(Ambient::X, &spec(true, 0, &[], &[], &[ApexTag::Top]));
        assert!(matches!(bad, Err(DescriptorViolation::ApexInvalid(..))));
        let bad = JClosedDescriptor::new(Ambient::Y, &spec(true, 0, &[], &[], &[ApexTag::Top3]));
        assert!(matches!(bad, Err(DescriptorViolation::Top3WithoutLowerApexes)));
    }

    #[test]
    fn point_closures() {
        let p = JClosedDescriptor::point_closure(Ambient::P, JElement::finite(3, 5)).unwrap();
        assert!(p.contains(JElement::finite(3, 4)));
        assert!(!p.contains(JElement::finite(2, 1)));

        let t = JClosedDescriptor::point_closure(Ambient::P, JElement::column_top(3)).unwrap();
        assert!(t.contains(JElement::finite(3, 100)));
        assert!(t.contains(JElement::finite(9, 2)));
        assert!(!t.contains(JElement::finite(9, 4)));
        assert!(t.contains(JElement::column_top(3)));
        assert!(!t.contains(JElement::column_top(9)));

        let top3 = JClosedDescriptor::point_closure(Ambient::Y, JElement::Apex(ApexTag::Top3))
            .unwrap();
        assert!(top3.contains(JElement::Apex(ApexTag::Top1)));
        assert!(top3.contains(JElement::column_top(9)));
    }

    #[test]
    fn union_intersection_membership() {
        let a = JClosedDescriptor::new(Ambient::P, &spec(false, 2, &[(5, 9)], &[], &[])).unwrap();
        let b = JClosedDescriptor::new(Ambient::P, &spec(false, 4, &[], &[3], &[])).unwrap();
        let u = a.union(&b);
        let i = a.intersect(&b);
        let probes = [
            JElement::finite(5, 9),
            JElement::finite(5, 3),
            JElement::finite(1, 3),
            JElement::finite(3, 77),
            JElement::column_top(3),
            JElement::column_top(5),
            JElement::finite(9, 5),
        ];
        for e in probes {
            assert_eq!(u.contains(e), a.contains(e) || b.contains(e), "{e}");
            assert_eq!(i.contains(e), a.contains(e) && b.contains(e), "{e}");
        }
        assert!(a.is_subset_of(&u) && b.is_subset_of(&u));
        assert!(i.is_subset_of(&a) && i.is_subset_of(&b));
    }

    #[test]
    fn sup_of_whole_grid_per_ambient() {
        let j = JClosedDescriptor::whole_grid();
        assert_eq!(
            sup_of(Ambient::P, &j).unwrap(),
            Some(JElement::Apex(ApexTag::Top))
        );
        let ub_x = upper_bounds(Ambient::X, &j).unwrap();
        assert_eq!(
            ub_x.apexes,
            BTreeSet::from([ApexTag::Top1, ApexTag::Top2])
        );
        assert_eq!(sup_of(Ambient::X, &j).unwrap(), None);
        let ub_y = upper_bounds(Ambient::Y, &j).unwrap();
        assert_eq!(
            ub_y.apexes,
            BTreeSet::from([ApexTag::Top1, ApexTag::Top2, ApexTag::Top3])
        );
        assert_eq!(sup_of(Ambient::Y, &j).unwrap(), None);
        assert_eq!(sup_of(Ambient::J, &j).unwrap(), None);
    }

    #[test]
    fn sup_of_point_closures_is_the_point() {
        for e in [
            JElement::finite(3, 5),
            JElement::column_top(4),
            JElement::Apex(ApexTag::Top),
        ] {
            let d = JClosedDescriptor::point_closure(Ambient::P, e).unwrap();
            assert_eq!(sup_of(Ambient::P, &d).unwrap(), Some(e), "{e}");
        }
    }

    #[test]
    fn strips_have_no_sup() {
        for g in [1, 2, 7] {
            let d = JClosedDescriptor::strip_of(g);
            for ambient in [Ambient::J, Ambient::P, Ambient::X, Ambient::Y] {
                assert_eq!(sup_of(ambient, &d).unwrap(), None);
            }
        }
    }

    #[test]
    fn exceptional_column_can_absorb_its_own_tallness() {
        // strip 1 plus column 5 up to height 9: (5,∞) and every (k,∞) with
        // k >= 9 bound it, nothing else.
        let d = JClosedDescriptor::new(Ambient::P, &spec(false, 1, &[(5, 9)], &[], &[])).unwrap();
        let ub = upper_bounds(Ambient::P, &d).unwrap();
        assert_eq!(ub.top_cols, BTreeSet::from([5]));
        assert_eq!(ub.tops_from, Some(9));
        assert!(!ub.contains(JElement::column_top(6)));
        assert!(ub.contains(JElement::column_top(5)));
        assert!(ub.contains(JElement::column_top(12)));
        assert_eq!(sup_of(Ambient::P, &d).unwrap(), None);
    }

    #[test]
    fn empty_descriptor_is_a_contract_error() {
        assert!(matches!(
            sup_of(Ambient::P, &JClosedDescriptor::empty()),
            Err(ContractError::EmptyDescriptor)
        ));
    }
}
