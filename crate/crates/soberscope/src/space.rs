//! Finite topological spaces with explicitly materialized open families.
//!
//! A finite topology is closed under arbitrary intersections, so every
//! finite space is determined by its specialization preorder: the opens
//! are exactly the up-sets. The explicit family is still stored, because
//! the whole point of this crate is to check such facts by brute force
//! rather than assume them.

use crate::error::{ContractError, InputError};
use crate::poset::FinitePoset;
use crate::set::{canonical_family, render_subset, Subset, MAX_CARRIER};

/// Cap on the number of opens a constructed space may materialize.
pub const OPEN_FAMILY_CAP: usize = 1 << 21;

/// A named violation of the topology axioms, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingEmptySet,
    MissingCarrier,
    MemberOutsideCarrier { set: Subset },
    UnionMissing { a: Subset, b: Subset },
    IntersectionMissing { a: Subset, b: Subset },
}

impl TopologyViolation {
    pub fn render(&self, label: impl Fn(usize) -> String + Copy) -> String {
        match self {
            TopologyViolation::MissingEmptySet => "empty set missing from the family".into(),
            TopologyViolation::MissingCarrier => "full carrier missing from the family".into(),
            TopologyViolation::MemberOutsideCarrier { set } => {
                format!("set {} reaches outside the carrier", render_subset(*set, label))
            }
            TopologyViolation::UnionMissing { a, b } => format!(
                "union of {} and {} missing",
                render_subset(*a, label),
                render_subset(*b, label)
            ),
            TopologyViolation::IntersectionMissing { a, b } => format!(
                "intersection of {} and {} missing",
                render_subset(*a, label),
                render_subset(*b, label)
            ),
        }
    }
}

/// Why a finite space could not be constructed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("the open family violates the topology axioms ({} violations)", .0.len())]
    Violations(Vec<TopologyViolation>),
}

/// Checks the topology axioms for `opens` over a carrier of size `n`.
///
/// For a finite family, closure under pairwise unions and intersections
/// is equivalent to closure under arbitrary ones, with the empty set and
/// the carrier covering the nullary cases.
pub fn validate_topology(n: usize, opens: &[Subset]) -> Vec<TopologyViolation> {
    let mut violations = Vec::new();
    let full = Subset::full(n);
    let family = canonical_family(opens.to_vec());
    for &s in &family {
        if !s.is_subset_of(full) {
            violations.push(TopologyViolation::MemberOutsideCarrier { set: s });
        }
    }
    if !family.contains(&Subset::EMPTY) {
        violations.push(TopologyViolation::MissingEmptySet);
    }
    if !family.contains(&full) {
        violations.push(TopologyViolation::MissingCarrier);
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if family.binary_search(&a.union(b)).is_err() {
                violations.push(TopologyViolation::UnionMissing { a, b });
            }
            if family.binary_search(&a.intersect(b)).is_err() {
                violations.push(TopologyViolation::IntersectionMissing { a, b });
            }
        }
    }
    violations
}

/// A finite topological space over labelled points.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    opens: Vec<Subset>,
    /// up[i] = { j : i <= j } in the specialization preorder.
    up: Vec<Subset>,
    /// down[i] = cl({i}) = { j : j <= i }.
    down: Vec<Subset>,
    t0_witness: Option<(usize, usize)>,
}

impl FiniteSpace {
    /// Validates the axioms and builds the space.
    pub fn new<S: AsRef<str>>(labels: &[S], opens: Vec<Subset>) -> Result<Self, SpaceError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let n = labels.len();
        if n > MAX_CARRIER {
            return Err(InputError::CarrierTooLarge { size: n }.into());
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(*l)) {
            return Err(InputError::DuplicateIdentifier { name: dup.clone() }.into());
        }
        let violations = validate_topology(n, &opens);
        if !violations.is_empty() {
            return Err(SpaceError::Violations(violations));
        }
        Ok(Self::new_unchecked(labels, canonical_family(opens)))
    }

    /// Builds a space from labels by name with opens given as label lists.
    pub fn from_labelled_opens<S: AsRef<str>>(
        labels: &[S],
        opens: &[Vec<String>],
    ) -> Result<Self, SpaceError> {
        let names: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut masks = Vec::with_capacity(opens.len());
        for open in opens {
            let mut mask = Subset::EMPTY;
            for member in open {
                let i = names
                    .iter()
                    .position(|l| l == member)
                    .ok_or(InputError::UnknownElement {
                        name: member.clone(),
                    })?;
                mask = mask.with(i);
            }
            masks.push(mask);
        }
        Self::new(&names, masks)
    }

    /// Builds a space from the up-set family of a preorder. Such families
    /// are topologies by construction; the quadratic axiom sweep is run
    /// only while it is cheap.
    fn from_up_set_family(labels: Vec<String>, opens: Vec<Subset>) -> Self {
        if opens.len() <= 1024 {
            debug_assert!(validate_topology(labels.len(), &opens).is_empty());
        }
        Self::new_unchecked(labels, canonical_family(opens))
    }

    fn new_unchecked(labels: Vec<String>, opens: Vec<Subset>) -> Self {
        let n = labels.len();
        let mut space = FiniteSpace {
            labels,
            opens,
            up: vec![Subset::EMPTY; n],
            down: vec![Subset::EMPTY; n],
            t0_witness: None,
        };
        for i in 0..n {
            // cl({i}) = complement of the union of opens missing i.
            let mut avoid = Subset::EMPTY;
            for &u in &space.opens {
                if !u.contains(i) {
                    avoid = avoid.union(u);
                }
            }
            space.down[i] = avoid.complement(n);
        }
        for i in 0..n {
            for j in 0..n {
                if space.down[j].contains(i) {
                    space.up[i] = space.up[i].with(j);
                }
            }
        }
        'outer: for i in 0..n {
            for j in i + 1..n {
                if space.down[i] == space.down[j] {
                    space.t0_witness = Some((i, j));
                    break 'outer;
                }
            }
        }
        space
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn point(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.len())
    }

    /// The open family in canonical order.
    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    /// The closed family (complements of opens) in canonical order.
    pub fn closeds(&self) -> Vec<Subset> {
        canonical_family(
            self.opens
                .iter()
                .map(|u| u.complement(self.len()))
                .collect(),
        )
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: Subset) -> bool {
        self.is_open(s.complement(self.len()))
    }

    /// Smallest closed superset of `s`.
    pub fn closure(&self, s: Subset) -> Subset {
        let mut avoid = Subset::EMPTY;
        for &u in &self.opens {
            if !u.meets(s) {
                avoid = avoid.union(u);
            }
        }
        avoid.complement(self.len())
    }

    /// Specialization preorder: x <= y iff x lies in cl({y}).
    pub fn specialization_leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    /// cl({x}), precomputed.
    pub fn point_closure(&self, x: usize) -> Subset {
        self.down[x]
    }

    /// { y : x <= y }, precomputed.
    pub fn up_of(&self, x: usize) -> Subset {
        self.up[x]
    }

    pub fn is_t0(&self) -> bool {
        self.t0_witness.is_none()
    }

    /// A pair of distinct points with equal closures, if any.
    pub fn t0_violation(&self) -> Option<(usize, usize)> {
        self.t0_witness
    }

    fn require_t0(&self) -> Result<(), ContractError> {
        match self.t0_witness {
            None => Ok(()),
            Some((a, b)) => Err(ContractError::NotT0 {
                a: self.labels[a].clone(),
                b: self.labels[b].clone(),
            }),
        }
    }

    /// Least upper bound of `s` in the specialization order, if it exists.
    ///
    /// Requires T0: without antisymmetry "the" least upper bound is not
    /// well defined.
    pub fn sup(&self, s: Subset) -> Result<Option<usize>, ContractError> {
        self.require_t0()?;
        let mut ub = self.carrier();
        for x in s.iter() {
            ub = ub.intersect(self.up[x]);
        }
        Ok(ub.iter().find(|&m| ub.is_subset_of(self.up[m])))
    }

    /// The specialization preorder as a poset (requires T0).
    pub fn specialization_poset(&self) -> Result<FinitePoset, ContractError> {
        self.require_t0()?;
        let n = self.len();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = self.specialization_leq(x, y);
            }
        }
        FinitePoset::from_matrix(self.labels.clone(), leq).map_err(|_| {
            unreachable!("specialization of a T0 finite space is a partial order")
        })
    }

    /// Irreducibility of `s` via the open-pair criterion: every two opens
    /// meeting `s` intersect on `s`. The empty set is not irreducible.
    pub fn is_irreducible(&self, s: Subset) -> bool {
        if s.is_empty() {
            return false;
        }
        let meeting: Vec<Subset> = self.opens.iter().copied().filter(|u| u.meets(s)).collect();
        for (i, &u) in meeting.iter().enumerate() {
            for &v in &meeting[i + 1..] {
                if !u.intersect(v).meets(s) {
                    return false;
                }
            }
        }
        true
    }

    /// Irreducibility straight from the definition: no cover by two closed
    /// sets without containment. Quadratic in the closed family; kept as
    /// the oracle for `is_irreducible`.
    pub fn is_irreducible_definitional(&self, s: Subset) -> bool {
        if s.is_empty() {
            return false;
        }
        let closeds = self.closeds();
        for (i, &a) in closeds.iter().enumerate() {
            for &b in &closeds[i..] {
                if s.is_subset_of(a.union(b)) && !s.is_subset_of(a) && !s.is_subset_of(b) {
                    return false;
                }
            }
        }
        true
    }

    /// All nonempty irreducible closed subsets with their sup status and
    /// generic point, in canonical order. Requires T0 because the
    /// annotations live in the specialization order.
    ///
    /// A nonempty closed set of a finite space is irreducible exactly when
    /// it is directed under specialization (minimal open neighbourhoods
    /// are the up-sets of points); the equivalence with the open-pair and
    /// definitional criteria is exercised in the test suite.
    pub fn irreducible_closed_records(&self) -> Result<Vec<IrreducibleRecord>, ContractError> {
        self.require_t0()?;
        let mut records = Vec::new();
        for c in self.closeds() {
            if c.is_empty() || !self.is_directed(c) {
                continue;
            }
            let sup = self.sup(c)?;
            let generic_point = c.iter().find(|&x| self.down[x] == c);
            records.push(IrreducibleRecord {
                set: c,
                sup,
                generic_point,
            });
        }
        Ok(records)
    }

    /// Directedness under the specialization preorder.
    pub fn is_directed(&self, s: Subset) -> bool {
        if s.is_empty() {
            return false;
        }
        let members: Vec<usize> = s.iter().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i..] {
                if !self.up[x].intersect(self.up[y]).meets(s) {
                    return false;
                }
            }
        }
        true
    }

    pub fn render(&self, s: Subset) -> String {
        render_subset(s, |i| self.labels[i].clone())
    }
}

impl std::fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteSpace[{}; {} opens]",
            self.labels.join(","),
            self.opens.len()
        )
    }
}

/// An irreducible closed set annotated with its supremum (if it exists)
/// and its generic point (if it has one).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrreducibleRecord {
    pub set: Subset,
    pub sup: Option<usize>,
    pub generic_point: Option<usize>,
}

impl IrreducibleRecord {
    pub fn render(&self, space: &FiniteSpace) -> String {
        let sup = match self.sup {
            Some(x) => space.label(x).to_string(),
            None => "none".into(),
        };
        let gp = match self.generic_point {
            Some(x) => space.label(x).to_string(),
            None => "none".into(),
        };
        format!("{} (sup {}, generic point {})", space.render(self.set), sup, gp)
    }
}

/// The Alexandroff space of a poset: all up-sets are open.
pub fn alexandroff(poset: &FinitePoset) -> FiniteSpace {
    let opens = poset.up_sets();
    FiniteSpace::from_up_set_family(poset.labels().to_vec(), opens)
}

/// Carrier size cap for the definitional Scott-open filter.
const SCOTT_FILTER_CAP: usize = 12;

/// The Scott space of a finite poset.
///
/// On a finite poset every directed set contains its own maximum, so the
/// Scott topology coincides with the Alexandroff topology. The
/// construction still runs the definitional directed-supremum filter over
/// every up-set (for carriers small enough to enumerate subsets) and
/// panics if the filter removed anything.
pub fn scott_finite(poset: &FinitePoset) -> FiniteSpace {
    let space = alexandroff(poset);
    if poset.len() <= SCOTT_FILTER_CAP {
        let scott: Vec<Subset> = space
            .opens()
            .iter()
            .copied()
            .filter(|&u| {
                Subset::all(poset.len()).all(|d| {
                    if !poset.is_directed(d) {
                        return true;
                    }
                    match finite_poset_sup(poset, d) {
                        Some(s) if u.contains(s) => d.meets(u),
                        _ => true,
                    }
                })
            })
            .collect();
        assert_eq!(
            scott,
            space.opens(),
            "Scott filter must not remove any up-set of a finite poset"
        );
    }
    space
}

fn finite_poset_sup(poset: &FinitePoset, s: Subset) -> Option<usize> {
    let mut ub = Subset::full(poset.len());
    for x in s.iter() {
        ub = ub.intersect(poset.up_set_of(x));
    }
    ub.iter().find(|&m| ub.iter().all(|b| poset.leq(m, b)))
}

/// Finite product space: carrier is the cartesian product, topology is
/// generated by boxes of factor opens. For finite factors that family is
/// exactly the up-sets of the componentwise specialization preorder, which
/// is how it is materialized here.
pub fn product(factors: &[&FiniteSpace]) -> Result<FiniteSpace, SpaceError> {
    if factors.is_empty() {
        return Err(InputError::EmptyProduct.into());
    }
    let total: usize = factors.iter().map(|f| f.len()).product();
    if total > MAX_CARRIER {
        return Err(InputError::CarrierTooLarge { size: total }.into());
    }
    if total == 0 {
        return Err(InputError::CarrierTooLarge { size: 0 }.into());
    }
    // Index tuples in mixed radix, last factor fastest.
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for f in factors {
        let mut next = Vec::with_capacity(tuples.len() * f.len());
        for t in &tuples {
            for i in 0..f.len() {
                let mut t = t.clone();
                t.push(i);
                next.push(t);
            }
        }
        tuples = next;
    }
    let labels: Vec<String> = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t
                .iter()
                .zip(factors)
                .map(|(&i, f)| f.label(i))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    // Componentwise preorder, then its up-sets.
    let n = total;
    let mut leq = vec![false; n * n];
    for (a, ta) in tuples.iter().enumerate() {
        for (b, tb) in tuples.iter().enumerate() {
            leq[a * n + b] = ta
                .iter()
                .zip(tb)
                .zip(factors)
                .all(|((&x, &y), f)| f.specialization_leq(x, y));
        }
    }
    let opens = preorder_up_sets(&leq, n, OPEN_FAMILY_CAP)
        .ok_or(InputError::TopologyTooLarge { cap: OPEN_FAMILY_CAP })?;
    let space = FiniteSpace::from_up_set_family(labels, opens);
    // Postcondition: the specialization preorder of the product is the
    // componentwise preorder.
    for a in 0..n {
        for b in 0..n {
            assert_eq!(
                space.specialization_leq(a, b),
                leq[a * n + b],
                "product specialization must be componentwise"
            );
        }
    }
    Ok(space)
}

/// Up-sets of an arbitrary preorder, by collapsing to the condensation
/// poset so equivalent points move together.
fn preorder_up_sets(leq: &[bool], n: usize, cap: usize) -> Option<Vec<Subset>> {
    let mut class_of = vec![usize::MAX; n];
    let mut class_masks: Vec<Subset> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = class_masks.len();
        let mut mask = Subset::EMPTY;
        for j in 0..n {
            if leq[i * n + j] && leq[j * n + i] {
                class_of[j] = c;
                mask = mask.with(j);
            }
        }
        class_masks.push(mask);
    }
    let m = class_masks.len();
    if m > MAX_CARRIER {
        return None;
    }
    let mut class_leq = vec![false; m * m];
    for i in 0..n {
        for j in 0..n {
            if leq[i * n + j] {
                class_leq[class_of[i] * m + class_of[j]] = true;
            }
        }
    }
    let labels: Vec<String> = (0..m).map(|c| format!("c{c}")).collect();
    let poset = FinitePoset::from_matrix(labels, class_leq).ok()?;
    let class_ups = poset.up_sets_capped(cap)?;
    Some(
        class_ups
            .into_iter()
            .map(|cu| {
                cu.iter()
                    .fold(Subset::EMPTY, |acc, c| acc.union(class_masks[c]))
            })
            .collect(),
    )
}


#[cfg(test)]
pub(crate) use tests::sierpinski;
