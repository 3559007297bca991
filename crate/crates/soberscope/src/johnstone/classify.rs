//! Classification of the irreducible closed subsets of the grid ambients,
//! with bounded mechanical verification.
//!
//! The classification itself is short: point closures, plus the whole
//! grid when the closed family is the Scott one, plus the untopped full
//! columns when the closed family is the Alexandroff one. The work is in
//! the verification: every sampled closed set outside the list must be
//! split into two proper closed subsets covering it, and the listed ones
//! must survive sampled cover attacks. Splitting needs sets with two
//! different eventual column heights (even/odd columns), which is why the
//! engine here works over a parity-refined generalization of the
//! descriptor class.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::descriptor::JClosedDescriptor;
use super::element::{Ambient, ApexTag, JElement};

/// Which closed-set family a check runs against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JTopologyKind {
    /// Scott-closed sets.
    Scott,
    /// All down-sets.
    Alexandroff,
    /// The SI-derived family of the Scott topology: Scott-closed sets
    /// minus the bare grid (only meaningful over `P`).
    ScottSi,
}

impl JTopologyKind {
    pub fn name(self) -> &'static str {
        match self {
            JTopologyKind::Scott => "scott",
            JTopologyKind::Alexandroff => "alexandroff",
            JTopologyKind::ScottSi => "scott-si",
        }
    }
}

impl std::fmt::Display for JTopologyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Height of one column of a grid set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Height {
    Fin(u64),
    /// The full column without its top: a down-set but never Scott-closed.
    FullNoTop,
    /// The full column including its top.
    FullWithTop,
}

impl Height {
    fn le(self, other: Height) -> bool {
        use Height::*;
        match (self, other) {
            (Fin(a), Fin(b)) => a <= b,
            (Fin(_), _) => true,
            (FullNoTop, Fin(_)) => false,
            (FullNoTop, _) => true,
            (FullWithTop, FullWithTop) => true,
            (FullWithTop, _) => false,
        }
    }

    fn is_empty(self) -> bool {
        self == Height::Fin(0)
    }
}

/// A closed subset of a grid ambient given by per-parity default column
/// heights, finitely many exceptional columns, and apex points. The
/// descriptor class embeds as the sets whose two defaults agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSet {
    default_even: Height,
    default_odd: Height,
    overrides: BTreeMap<u64, Height>,
    apexes: BTreeSet<ApexTag>,
}

impl GridSet {
    pub fn new(
        default_even: Height,
        default_odd: Height,
        overrides: BTreeMap<u64, Height>,
        apexes: BTreeSet<ApexTag>,
    ) -> Self {
        let mut g = GridSet {
            default_even,
            default_odd,
            overrides,
            apexes,
        };
        g.overrides = g
            .overrides
            .iter()
            .filter(|&(&col, &h)| h != g.default_for(col))
            .map(|(&c, &h)| (c, h))
            .collect();
        g
    }

    pub fn uniform(default: Height, overrides: BTreeMap<u64, Height>, apexes: BTreeSet<ApexTag>) -> Self {
        Self::new(default, default, overrides, apexes)
    }

    pub fn from_descriptor(d: &JClosedDescriptor) -> Self {
        if d.is_whole() {
            return Self::uniform(Height::FullWithTop, BTreeMap::new(), d.apexes().clone());
        }
        let mut overrides = BTreeMap::new();
        for (&col, &h) in d.extras() {
            overrides.insert(col, Height::Fin(h));
        }
        for &col in d.tops() {
            overrides.insert(col, Height::FullWithTop);
        }
        Self::uniform(Height::Fin(d.strip()), overrides, d.apexes().clone())
    }

    pub fn point_closure(ambient: Ambient, e: JElement) -> Self {
        match e {
            JElement::Finite { col, height } => Self::uniform(
                Height::Fin(0),
                BTreeMap::from([(col, Height::Fin(height))]),
                BTreeSet::new(),
            ),
            JElement::ColumnTop { col } => Self::uniform(
                Height::Fin(col),
                BTreeMap::from([(col, Height::FullWithTop)]),
                BTreeSet::new(),
            ),
            JElement::Apex(tag) => {
                let mut apexes = BTreeSet::from([tag]);
                if tag == ApexTag::Top3 {
                    apexes.insert(ApexTag::Top1);
                    apexes.insert(ApexTag::Top2);
                }
                debug_assert!(ambient.admits_apex(tag));
                Self::uniform(Height::FullWithTop, BTreeMap::new(), apexes)
            }
            _ => panic!("grid ambients have no chain points"),
        }
    }

    /// The untopped full column `m` on its own.
    pub fn column_without_top(col: u64) -> Self {
        Self::uniform(
            Height::Fin(0),
            BTreeMap::from([(col, Height::FullNoTop)]),
            BTreeSet::new(),
        )
    }

    pub fn whole_grid() -> Self {
        Self::uniform(Height::FullWithTop, BTreeMap::new(), BTreeSet::new())
    }

    fn default_for(&self, col: u64) -> Height {
        if col % 2 == 0 {
            self.default_even
        } else {
            self.default_odd
        }
    }

    pub fn height(&self, col: u64) -> Height {
        self.overrides
            .get(&col)
            .copied()
            .unwrap_or_else(|| self.default_for(col))
    }

    pub fn apexes(&self) -> &BTreeSet<ApexTag> {
        &self.apexes
    }

    pub fn defaults(&self) -> (Height, Height) {
        (self.default_even, self.default_odd)
    }

    pub fn overrides(&self) -> &BTreeMap<u64, Height> {
        &self.overrides
    }

    pub fn contains(&self, e: JElement) -> bool {
        match e {
            JElement::Finite { col, height } => match self.height(col) {
                Height::Fin(h) => height <= h,
                _ => true,
            },
            JElement::ColumnTop { col } => self.height(col) == Height::FullWithTop,
            JElement::Apex(tag) => self.apexes.contains(&tag),
            _ => false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.apexes.is_empty()
            && self.default_even.is_empty()
            && self.default_odd.is_empty()
            && self.overrides.values().all(|h| h.is_empty())
    }

    /// Every column index mentioned explicitly by either set.
    fn exceptional_cols(&self, other: &GridSet) -> BTreeSet<u64> {
        self.overrides
            .keys()
            .chain(other.overrides.keys())
            .copied()
            .collect()
    }

    pub fn is_subset_of(&self, other: &GridSet) -> bool {
        if !self.apexes.is_subset(&other.apexes) {
            return false;
        }
        if !self.default_even.le(other.default_even) || !self.default_odd.le(other.default_odd) {
            return false;
        }
        self.exceptional_cols(other)
            .into_iter()
            .all(|col| self.height(col).le(other.height(col)))
    }

    /// Down-closure in the ambient order: apexes pull in their whole
    /// down-set, and a topped column `m` pulls every column up to `m`.
    pub fn is_down_closed(&self, ambient: Ambient) -> bool {
        for &tag in &self.apexes {
            if !ambient.admits_apex(tag) {
                return false;
            }
        }
        if self.apexes.contains(&ApexTag::Top3)
            && !(self.apexes.contains(&ApexTag::Top1) && self.apexes.contains(&ApexTag::Top2))
        {
            return false;
        }
        if !self.apexes.is_empty() {
            // Every apex dominates the whole grid.
            if self.default_even != Height::FullWithTop
                || self.default_odd != Height::FullWithTop
                || !self.overrides.is_empty()
            {
                return false;
            }
            return true;
        }
        // Topped columns force a floor under every column.
        let mut required: u64 = 0;
        if self.default_even == Height::FullWithTop || self.default_odd == Height::FullWithTop {
            // Cofinitely many topped columns of unbounded index: every
            // column must be full.
            let full = |h: Height| h != Height::FullWithTop && h != Height::FullNoTop;
            if full(self.default_even) || full(self.default_odd) {
                return false;
            }
            if self.overrides.values().any(|&h| matches!(h, Height::Fin(_))) {
                return false;
            }
            return true;
        }
        for (&col, &h) in &self.overrides {
            if h == Height::FullWithTop {
                required = required.max(col);
            }
        }
        if required == 0 {
            return true;
        }
        let floor = Height::Fin(required);
        floor.le(self.default_even)
            && floor.le(self.default_odd)
            && self.overrides.values().all(|&h| floor.le(h))
    }

    /// Closedness in the selected family.
    pub fn is_closed(&self, ambient: Ambient, flavor: JTopologyKind) -> bool {
        if !self.is_down_closed(ambient) {
            return false;
        }
        match flavor {
            JTopologyKind::Alexandroff => true,
            JTopologyKind::Scott => !self.has_untopped_full_column(),
            JTopologyKind::ScottSi => {
                !self.has_untopped_full_column() && *self != GridSet::whole_grid()
            }
        }
    }

    fn has_untopped_full_column(&self) -> bool {
        self.default_even == Height::FullNoTop
            || self.default_odd == Height::FullNoTop
            || self.overrides.values().any(|&h| h == Height::FullNoTop)
    }

    /// Whether every grid element is a member (apexes aside).
    pub fn contains_whole_grid(&self) -> bool {
        self.default_even == Height::FullWithTop
            && self.default_odd == Height::FullWithTop
            && self.overrides.is_empty()
    }

    /// Directedness under the ambient order: either a maximum exists or
    /// the set is one column without its top.
    pub fn is_directed(&self, ambient: Ambient) -> bool {
        self.maximum(ambient).is_some() || self.is_single_untopped_column()
    }

    fn is_single_untopped_column(&self) -> bool {
        self.apexes.is_empty()
            && self.default_even.is_empty()
            && self.default_odd.is_empty()
            && self.overrides.values().filter(|h| !h.is_empty()).count() == 1
            && self
                .overrides
                .values()
                .all(|&h| matches!(h, Height::FullNoTop | Height::Fin(_)))
            && self.overrides.values().any(|&h| h == Height::FullNoTop)
    }

    /// The maximum element, when one exists.
    pub fn maximum(&self, ambient: Ambient) -> Option<JElement> {
        if !self.apexes.is_empty() {
            let top = self
                .apexes
                .iter()
                .copied()
                .find(|&t| self.apexes.iter().all(|&a| ambient.apex_leq(a, t)))?;
            return Some(JElement::Apex(top));
        }
        if self.default_even == Height::FullWithTop || self.default_odd == Height::FullWithTop {
            return None;
        }
        // A full topped column (t, ∞) is the maximum iff every other
        // column stays at or below height t.
        let topped: Vec<u64> = self
            .overrides
            .iter()
            .filter(|(_, &h)| h == Height::FullWithTop)
            .map(|(&c, _)| c)
            .collect();
        match topped.len() {
            0 => {
                // Finite maximum needs a single nonempty column.
                if self.default_even.is_empty() && self.default_odd.is_empty() {
                    let nonempty: Vec<(&u64, &Height)> = self
                        .overrides
                        .iter()
                        .filter(|(_, h)| !h.is_empty())
                        .collect();
                    if let [(&col, &Height::Fin(h))] = nonempty[..] {
                        return Some(JElement::finite(col, h));
                    }
                }
                None
            }
            1 => {
                let t = topped[0];
                let cap = Height::Fin(t);
                let ok = self.default_even.le(cap)
                    && self.default_odd.le(cap)
                    && self
                        .overrides
                        .iter()
                        .all(|(&c, &h)| c == t || h.le(cap));
                ok.then_some(JElement::column_top(t))
            }
            _ => None,
        }
    }

    pub fn render(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        if *self == GridSet::whole_grid() {
            return "J".to_string();
        }
        let h = |x: Height| match x {
            Height::Fin(n) => format!("≤{n}"),
            Height::FullNoTop => "<∞".to_string(),
            Height::FullWithTop => "≤∞".to_string(),
        };
        let mut parts = Vec::new();
        if self.default_even == self.default_odd {
            if !self.default_even.is_empty() {
                parts.push(format!("cols{}", h(self.default_even)));
            }
        } else {
            parts.push(format!("even{}", h(self.default_even)));
            parts.push(format!("odd{}", h(self.default_odd)));
        }
        for (&c, &x) in &self.overrides {
            parts.push(format!("col{c}{}", h(x)));
        }
        for &t in &self.apexes {
            parts.push(format!("{{{t}}}"));
        }
        parts.join(" ∪ ")
    }
}

impl std::fmt::Display for GridSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// `c ⊆ a ∪ b`, column by column plus apexes.
pub fn covered_by(c: &GridSet, a: &GridSet, b: &GridSet) -> bool {
    if !c
        .apexes
        .iter()
        .all(|t| a.apexes.contains(t) || b.apexes.contains(t))
    {
        return false;
    }
    let max = |x: Height, y: Height| if x.le(y) { y } else { x };
    if !c.default_even.le(max(a.default_even, b.default_even))
        || !c.default_odd.le(max(a.default_odd, b.default_odd))
    {
        return false;
    }
    let mut cols = c.exceptional_cols(a);
    cols.extend(b.overrides.keys().copied());
    cols.into_iter()
        .all(|col| c.height(col).le(max(a.height(col), b.height(col))))
}

/// A subset relation witness: some column (or apex) where `c` exceeds `a`.
/// `None` means `c ⊆ a`.
pub fn excess_witness(c: &GridSet, a: &GridSet) -> Option<String> {
    if let Some(t) = c.apexes.difference(&a.apexes).next() {
        return Some(format!("{t}"));
    }
    for col in c.exceptional_cols(a) {
        if !c.height(col).le(a.height(col)) {
            return Some(format!("column {col}"));
        }
    }
    // Defaults hold on infinitely many columns, so a strict default
    // excess is witnessed by any fresh column of that parity.
    if !c.default_even.le(a.default_even) {
        return Some("every unexceptional even column".to_string());
    }
    if !c.default_odd.le(a.default_odd) {
        return Some("every unexceptional odd column".to_string());
    }
    None
}

/// An explicit reducibility witness: two proper closed subsets covering
/// the set.
#[derive(Debug, Clone)]
pub struct Split {
    pub left: GridSet,
    pub right: GridSet,
}

/// Builds a two-set split of a non-directed closed set. For the bare
/// grid the pieces are down-sets but never Scott-closed — the grid is
/// irreducible in the Scott family — so callers must not request a
/// Scott-flavor split of it.
pub fn build_split(ambient: Ambient, c: &GridSet) -> Option<Split> {
    if c.is_directed(ambient) {
        return None;
    }
    // Two incomparable apexes: cover by their point closures.
    if c.apexes.contains(&ApexTag::Top1) && c.apexes.contains(&ApexTag::Top2) {
        return Some(Split {
            left: GridSet::point_closure(ambient, JElement::Apex(ApexTag::Top1)),
            right: GridSet::point_closure(ambient, JElement::Apex(ApexTag::Top2)),
        });
    }
    if !c.apexes.is_empty() {
        // A single apex would be a maximum; handled as directed above.
        return None;
    }
    if c.default_even == Height::FullWithTop || c.default_odd == Height::FullWithTop {
        // The grid with cofinitely many tops: split tops by parity,
        // keeping all finite elements on both sides.
        let keep = |parity_default: Height| {
            if parity_default == Height::FullWithTop {
                Height::FullWithTop
            } else {
                parity_default
            }
        };
        let left = GridSet::new(
            keep(c.default_even),
            Height::FullNoTop,
            c.overrides.clone(),
            BTreeSet::new(),
        );
        let right = GridSet::new(
            Height::FullNoTop,
            keep(c.default_odd),
            c.overrides.clone(),
            BTreeSet::new(),
        );
        return Some(Split { left, right });
    }
    let topped: Vec<u64> = c
        .overrides
        .iter()
        .filter(|(_, &h)| h == Height::FullWithTop)
        .map(|(&col, _)| col)
        .collect();
    if let Some(&t) = topped.first() {
        // Peel the lowest topped column off against the rest.
        let right = GridSet::point_closure(ambient, JElement::column_top(t));
        let mut overrides = c.overrides.clone();
        overrides.remove(&t);
        let left = GridSet::new(c.default_even, c.default_odd, overrides, BTreeSet::new());
        return Some(Split { left, right });
    }
    // No tops. Finitely many nonempty columns: peel the first column.
    if c.default_even.is_empty() && c.default_odd.is_empty() {
        let nonempty: Vec<u64> = c
            .overrides
            .iter()
            .filter(|(_, h)| !h.is_empty())
            .map(|(&col, _)| col)
            .collect();
        let (&first, rest) = nonempty.split_first()?;
        if rest.is_empty() {
            return None;
        }
        let left = GridSet::new(
            Height::Fin(0),
            Height::Fin(0),
            BTreeMap::from([(first, c.height(first))]),
            BTreeSet::new(),
        );
        let mut overrides = c.overrides.clone();
        overrides.remove(&first);
        let right = GridSet::new(c.default_even, c.default_odd, overrides, BTreeSet::new());
        return Some(Split { left, right });
    }
    // Infinitely many nonempty columns: split by parity.
    let left = GridSet::new(
        c.default_even,
        Height::Fin(0),
        c.overrides
            .iter()
            .filter(|(&col, _)| col % 2 == 0)
            .map(|(&col, &h)| (col, h))
            .collect(),
        BTreeSet::new(),
    );
    let right = GridSet::new(
        Height::Fin(0),
        c.default_odd,
        c.overrides
            .iter()
            .filter(|(&col, _)| col % 2 == 1)
            .map(|(&col, &h)| (col, h))
            .collect(),
        BTreeSet::new(),
    );
    Some(Split { left, right })
}

/// One family in the classification of irreducible closed sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrreducibleFamily {
    /// cl({e}) for every point e of the ambient.
    PointClosures,
    /// The whole grid J.
    WholeGrid,
    /// Every full column without its top (down-sets only).
    ColumnsWithoutTop,
}

impl IrreducibleFamily {
    pub fn describe(self) -> &'static str {
        match self {
            IrreducibleFamily::PointClosures => "point closures ↓e",
            IrreducibleFamily::WholeGrid => "the whole grid J",
            IrreducibleFamily::ColumnsWithoutTop => "full untopped columns",
        }
    }
}

/// The expected classification for a grid ambient and closed-set flavor.
pub fn expected_families(ambient: Ambient, flavor: JTopologyKind) -> Vec<IrreducibleFamily> {
    debug_assert!(ambient.is_grid());
    match flavor {
        JTopologyKind::Scott => vec![IrreducibleFamily::PointClosures, IrreducibleFamily::WholeGrid],
        JTopologyKind::Alexandroff => vec![
            IrreducibleFamily::PointClosures,
            IrreducibleFamily::ColumnsWithoutTop,
        ],
        JTopologyKind::ScottSi => vec![IrreducibleFamily::PointClosures],
    }
}

/// Whether a closed grid set is irreducible, per the classification:
/// directed sets are irreducible in any of these flavors, and the whole
/// grid is additionally irreducible in the Scott flavor (every nonempty
/// Scott-open set contains cofinitely many column tops, so two of them
/// always meet).
pub fn expected_irreducible(ambient: Ambient, flavor: JTopologyKind, c: &GridSet) -> bool {
    !c.is_empty()
        && (c.is_directed(ambient)
            || (flavor == JTopologyKind::Scott && *c == GridSet::whole_grid()))
}

/// Verification statistics for one classification run.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub ambient: Ambient,
    pub flavor: JTopologyKind,
    pub bound: u64,
    pub families: Vec<IrreducibleFamily>,
    /// Closed sets enumerated or sampled.
    pub checked: usize,
    /// Non-listed sets split into two proper closed covers.
    pub splits_verified: usize,
    /// Listed sets matched to their family and spot-checked.
    pub listed_confirmed: usize,
    /// Nonempty open complements confirmed to contain cofinitely many
    /// column tops (Scott flavor).
    pub cofinite_tops_confirmed: usize,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Samples a closed grid set of the given flavor. Parameters stay at or
/// below `bound`.
pub fn sample_grid_set(
    rng: &mut ChaCha8Rng,
    ambient: Ambient,
    flavor: JTopologyKind,
    bound: u64,
) -> GridSet {
    loop {
        let roll: u8 = rng.random_range(0..20);
        let candidate = if roll == 0 {
            GridSet::whole_grid()
        } else if roll == 1 && !ambient.apexes().is_empty() {
            let tags = ambient.apexes();
            let tag = tags[rng.random_range(0..tags.len())];
            GridSet::point_closure(ambient, JElement::Apex(tag))
        } else if roll == 2 && flavor == JTopologyKind::Alexandroff {
            let mut overrides = BTreeMap::new();
            for _ in 0..rng.random_range(1..=2u32) {
                overrides.insert(rng.random_range(1..=bound), Height::FullNoTop);
            }
            GridSet::uniform(Height::Fin(0), overrides, BTreeSet::new())
        } else if roll == 3 && flavor == JTopologyKind::Alexandroff {
            // Cofinitely many untopped full columns.
            GridSet::uniform(
                Height::FullNoTop,
                BTreeMap::from([(rng.random_range(1..=bound), Height::Fin(rng.random_range(0..=bound)))]),
                BTreeSet::new(),
            )
        } else if roll == 4 && ambient == Ambient::X {
            GridSet::uniform(
                Height::FullWithTop,
                BTreeMap::new(),
                BTreeSet::from([ApexTag::Top1, ApexTag::Top2]),
            )
        } else {
            let strip = rng.random_range(0..=bound);
            let mut overrides = BTreeMap::new();
            for _ in 0..rng.random_range(0..=2u32) {
                if strip >= 1 && rng.random_bool(0.3) {
                    overrides.insert(rng.random_range(1..=strip), Height::FullWithTop);
                } else if strip < bound {
                    overrides.insert(
                        rng.random_range(1..=bound),
                        Height::Fin(rng.random_range(strip + 1..=bound)),
                    );
                }
            }
            GridSet::uniform(Height::Fin(strip), overrides, BTreeSet::new())
        };
        if candidate.is_closed(ambient, flavor) && !candidate.is_empty() {
            return candidate;
        }
    }
}

/// A structured pool of closed grid sets with parameters at most `bound`.
fn structured_pool(ambient: Ambient, flavor: JTopologyKind, bound: u64) -> Vec<GridSet> {
    let mut pool = Vec::new();
    let strips: Vec<u64> = [0, 1, 2, 3, bound / 2, bound.saturating_sub(1), bound]
        .into_iter()
        .collect();
    let cols: Vec<u64> = [1, 2, 3, 5, bound / 2, bound].into_iter().filter(|&c| c >= 1).collect();
    for &g in &strips {
        pool.push(GridSet::uniform(Height::Fin(g), BTreeMap::new(), BTreeSet::new()));
        for &c in &cols {
            if c <= g {
                pool.push(GridSet::uniform(
                    Height::Fin(g),
                    BTreeMap::from([(c, Height::FullWithTop)]),
                    BTreeSet::new(),
                ));
            }
            for h in [g + 1, bound] {
                if h <= bound && h > g {
                    pool.push(GridSet::uniform(
                        Height::Fin(g),
                        BTreeMap::from([(c, Height::Fin(h))]),
                        BTreeSet::new(),
                    ));
                    // Two exceptional columns.
                    let c2 = c + 1;
                    pool.push(GridSet::uniform(
                        Height::Fin(g),
                        BTreeMap::from([(c, Height::Fin(h)), (c2, Height::Fin(h))]),
                        BTreeSet::new(),
                    ));
                }
            }
        }
        // Two topped columns.
        if g >= 2 {
            pool.push(GridSet::uniform(
                Height::Fin(g),
                BTreeMap::from([(1, Height::FullWithTop), (2, Height::FullWithTop)]),
                BTreeSet::new(),
            ));
        }
    }
    pool.push(GridSet::whole_grid());
    // Apex-carrying closed sets.
    match ambient {
        Ambient::P => pool.push(GridSet::point_closure(ambient, JElement::Apex(ApexTag::Top))),
        Ambient::X => {
            pool.push(GridSet::point_closure(ambient, JElement::Apex(ApexTag::Top1)));
            pool.push(GridSet::point_closure(ambient, JElement::Apex(ApexTag::Top2)));
            pool.push(GridSet::uniform(
                Height::FullWithTop,
                BTreeMap::new(),
                BTreeSet::from([ApexTag::Top1, ApexTag::Top2]),
            ));
        }
        Ambient::Y => {
            pool.push(GridSet::point_closure(ambient, JElement::Apex(ApexTag::Top1)));
            pool.push(GridSet::point_closure(ambient, JElement::Apex(ApexTag::Top2)));
            pool.push(GridSet::point_closure(ambient, JElement::Apex(ApexTag::Top3)));
            pool.push(GridSet::uniform(
                Height::FullWithTop,
                BTreeMap::new(),
                BTreeSet::from([ApexTag::Top1, ApexTag::Top2]),
            ));
        }
        _ => {}
    }
    if flavor == JTopologyKind::Alexandroff {
        for &c in &cols {
            pool.push(GridSet::column_without_top(c));
            pool.push(GridSet::uniform(
                Height::Fin(1),
                BTreeMap::from([(c, Height::FullNoTop)]),
                BTreeSet::new(),
            ));
        }
        pool.push(GridSet::uniform(Height::FullNoTop, BTreeMap::new(), BTreeSet::new()));
        pool.push(GridSet::uniform(
            Height::FullNoTop,
            BTreeMap::from([(2, Height::Fin(0))]),
            BTreeSet::new(),
        ));
    }
    pool.retain(|g| !g.is_empty() && g.is_closed(ambient, flavor));
    pool.dedup();
    pool
}

/// Runs the classification of irreducible closed sets for a grid ambient
/// and verifies it over a structured-plus-sampled pool of closed sets.
pub fn classify_irreducible_closed(
    ambient: Ambient,
    flavor: JTopologyKind,
    bound: u64,
    seed: u64,
    samples: usize,
) -> ClassificationReport {
    assert!(ambient.is_grid(), "chain classification lives in the chain module");
    let mut report = ClassificationReport {
        ambient,
        flavor,
        bound,
        families: expected_families(ambient, flavor),
        checked: 0,
        splits_verified: 0,
        listed_confirmed: 0,
        cofinite_tops_confirmed: 0,
        notes: Vec::new(),
        failures: Vec::new(),
    };
    let mut pool = structured_pool(ambient, flavor, bound);
    let mut rng = crate::gen::sample_rng(seed, 0x7a55);
    for _ in 0..samples {
        pool.push(sample_grid_set(&mut rng, ambient, flavor, bound));
    }

    for c in &pool {
        report.checked += 1;
        if expected_irreducible(ambient, flavor, c) {
            match confirm_listed(ambient, flavor, c) {
                Ok(()) => report.listed_confirmed += 1,
                Err(msg) => report.failures.push(msg),
            }
            // Sampled cover attack: no two pool members may split it.
            for _ in 0..16 {
                let a = &pool[rng.random_range(0..pool.len())];
                let b = &pool[rng.random_range(0..pool.len())];
                if covered_by(c, a, b)
                    && excess_witness(c, a).is_some()
                    && excess_witness(c, b).is_some()
                {
                    report
                        .failures
                        .push(format!("listed set {c} split by {a} and {b}"));
                }
            }
        } else {
            match build_split(ambient, c) {
                Some(split) => match verify_split(ambient, flavor, c, &split) {
                    Ok(()) => report.splits_verified += 1,
                    Err(msg) => report.failures.push(msg),
                },
                None => report
                    .failures
                    .push(format!("no split constructed for non-listed set {c}")),
            }
        }
        if flavor == JTopologyKind::Scott && !c.contains_whole_grid() {
            // Cofinite-tops lemma on the open complement: beyond every
            // column this set mentions, the tops lie in the complement.
            let horizon = c
                .overrides
                .keys()
                .copied()
                .max()
                .unwrap_or(0)
                .max(bound)
                + 1;
            let ok = (horizon..horizon + 8)
                .all(|k| !c.contains(JElement::column_top(k)));
            if ok {
                report.cofinite_tops_confirmed += 1;
            } else {
                report
                    .failures
                    .push(format!("complement of {c} trapped a far column top"));
            }
        }
    }
    if flavor == JTopologyKind::Scott {
        report.notes.push(
            "grid irreducibility argument: every nonempty Scott-open set contains (k,∞) for all \
             sufficiently large k, so two nonempty opens always meet"
                .to_string(),
        );
    }
    report.notes.push(format!(
        "verification bounded: parameters ≤ {bound}, {} structured + {samples} sampled closed sets",
        report.checked.saturating_sub(samples),
    ));
    report
}

/// Confirms a set expected irreducible matches one of the listed
/// families structurally.
fn confirm_listed(ambient: Ambient, flavor: JTopologyKind, c: &GridSet) -> Result<(), String> {
    if *c == GridSet::whole_grid() {
        return if flavor == JTopologyKind::Scott {
            Ok(())
        } else {
            Err(format!("whole grid is not irreducible in the {flavor} family"))
        };
    }
    if let Some(max) = c.maximum(ambient) {
        let pc = GridSet::point_closure(ambient, max);
        if *c == pc {
            Ok(())
        } else {
            Err(format!(
                "directed set {c} has maximum {max} but is not its point closure"
            ))
        }
    } else if c.is_single_untopped_column() {
        if flavor == JTopologyKind::Alexandroff {
            Ok(())
        } else {
            Err(format!(
                "untopped column {c} cannot be closed in the {flavor} family"
            ))
        }
    } else {
        Err(format!("set {c} classified irreducible without a recognized shape"))
    }
}

fn verify_split(
    ambient: Ambient,
    flavor: JTopologyKind,
    c: &GridSet,
    split: &Split,
) -> Result<(), String> {
    if !split.left.is_closed(ambient, flavor) {
        return Err(format!("split piece {} is not closed for {c}", split.left));
    }
    if !split.right.is_closed(ambient, flavor) {
        return Err(format!("split piece {} is not closed for {c}", split.right));
    }
    if !covered_by(c, &split.left, &split.right) {
        return Err(format!(
            "split {} ∪ {} does not cover {c}",
            split.left, split.right
        ));
    }
    if excess_witness(c, &split.left).is_none() {
        return Err(format!("{c} is contained in split piece {}", split.left));
    }
    if excess_witness(c, &split.right).is_none() {
        return Err(format!("{c} is contained in split piece {}", split.right));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_embedding_agrees_on_membership() {
        let d = JClosedDescriptor::new(
            Ambient::P,
            &crate::johnstone::descriptor::DescriptorSpec {
                whole: false,
                strip: 3,
                extras: vec![(5, 8)],
                tops: vec![2],
                apexes: vec![],
            },
        )
        .unwrap();
        let g = GridSet::from_descriptor(&d);
        for e in [
            JElement::finite(5, 8),
            JElement::finite(5, 9),
            JElement::finite(2, 100),
            JElement::column_top(2),
            JElement::column_top(5),
            JElement::finite(7, 3),
            JElement::finite(7, 4),
        ] {
            assert_eq!(g.contains(e), d.contains(e), "{e}");
        }
    }

    #[test]
    fn directedness_shapes() {
        let a = Ambient::P;
        assert!(GridSet::point_closure(a, JElement::finite(3, 4)).is_directed(a));
        assert!(GridSet::point_closure(a, JElement::column_top(3)).is_directed(a));
        assert!(GridSet::point_closure(a, JElement::Apex(ApexTag::Top)).is_directed(a));
        assert!(GridSet::column_without_top(4).is_directed(a));
        assert!(!GridSet::whole_grid().is_directed(a));
        assert!(!GridSet::uniform(Height::Fin(2), BTreeMap::new(), BTreeSet::new()).is_directed(a));
        // X whole space has two maximal points: not directed.
        let x_whole = GridSet::uniform(
            Height::FullWithTop,
            BTreeMap::new(),
            BTreeSet::from([ApexTag::Top1, ApexTag::Top2]),
        );
        assert!(!x_whole.is_directed(Ambient::X));
        assert!(x_whole.is_down_closed(Ambient::X));
    }

    #[test]
    fn down_closure_rules() {
        // Topped column above the floor: not down-closed.
        let bad = GridSet::uniform(
            Height::Fin(2),
            BTreeMap::from([(5, Height::FullWithTop)]),
            BTreeSet::new(),
        );
        assert!(!bad.is_down_closed(Ambient::P));
        // Apex without the grid below it.
        let bad = GridSet::uniform(
            Height::Fin(3),
            BTreeMap::new(),
            BTreeSet::from([ApexTag::Top]),
        );
        assert!(!bad.is_down_closed(Ambient::P));
        // Untopped full column is down-closed but not Scott-closed.
        let col = GridSet::column_without_top(3);
        assert!(col.is_down_closed(Ambient::P));
        assert!(col.is_closed(Ambient::P, JTopologyKind::Alexandroff));
        assert!(!col.is_closed(Ambient::P, JTopologyKind::Scott));
    }

    #[test]
    fn strip_splits_into_parities() {
        let strip2 = GridSet::uniform(Height::Fin(2), BTreeMap::new(), BTreeSet::new());
        let split = build_split(Ambient::P, &strip2).unwrap();
        assert!(verify_split(Ambient::P, JTopologyKind::Scott, &strip2, &split).is_ok());
    }

    #[test]
    fn whole_grid_splits_in_alexandroff_but_not_scott() {
        let j = GridSet::whole_grid();
        assert!(expected_irreducible(Ambient::P, JTopologyKind::Scott, &j));
        assert!(!expected_irreducible(Ambient::P, JTopologyKind::Alexandroff, &j));
        let split = build_split(Ambient::P, &j).unwrap();
        assert!(verify_split(Ambient::P, JTopologyKind::Alexandroff, &j, &split).is_ok());
        // The parity pieces are genuinely not Scott-closed.
        assert!(!split.left.is_closed(Ambient::P, JTopologyKind::Scott));
    }

    #[test]
    fn classification_runs_clean_on_all_grid_ambients() {
        for ambient in [Ambient::J, Ambient::P, Ambient::X, Ambient::Y] {
            let report =
                classify_irreducible_closed(ambient, JTopologyKind::Scott, 12, 99, 200);
            assert!(report.passed(), "{ambient}: {:?}", report.failures);
            assert!(report.splits_verified > 0);
            assert!(report.listed_confirmed > 0);
        }
        let report =
            classify_irreducible_closed(Ambient::P, JTopologyKind::Alexandroff, 12, 99, 200);
        assert!(report.passed(), "{:?}", report.failures);
        let report = classify_irreducible_closed(Ambient::P, JTopologyKind::ScottSi, 12, 99, 200);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.families, vec![IrreducibleFamily::PointClosures]);
    }

    #[test]
    fn grid_set_membership_matches_truncation() {
        use crate::johnstone::truncation::TruncatedPoset;
        let t = TruncatedPoset::new(Ambient::P, 10);
        let mut rng = crate::gen::sample_rng(5, 5);
        for _ in 0..50 {
            let g = sample_grid_set(&mut rng, Ambient::P, JTopologyKind::Scott, 5);
            let set = t.restrict(|e| g.contains(e));
            assert!(t.is_down_closed(&set), "{g}");
        }
    }
}
