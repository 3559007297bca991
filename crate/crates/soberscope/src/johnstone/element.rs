//! Elements and decidable order for the countable counterexample posets.
//!
//! The grid `J = N x (N ∪ {∞})` (1-based columns and heights) carries the
//! order: same column and lower height, or a finite height that fits
//! under a column top. The ambients differ only in which maximal points
//! sit above the grid:
//!
//! * `J`   — the bare grid,
//! * `P`   — one top above everything,
//! * `X`   — two incomparable maximal points above the grid,
//! * `Y`   — the two maximal points of `X` joined below a third,
//! * `OmegaPlusOne` — the chain 1 < 2 < ... < ∞, unrelated to the grid.

use crate::error::ContractError;

/// The maximal points that can be glued above the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ApexTag {
    /// ⊤: the single top of `P`.
    Top,
    /// ⊤₁ in `X` and `Y`.
    Top1,
    /// ⊤₂ in `X` and `Y`.
    Top2,
    /// ⊤₃: the top of `Y`, above ⊤₁ and ⊤₂.
    Top3,
}

impl ApexTag {
    pub fn name(self) -> &'static str {
        match self {
            ApexTag::Top => "⊤",
            ApexTag::Top1 => "⊤₁",
            ApexTag::Top2 => "⊤₂",
            ApexTag::Top3 => "⊤₃",
        }
    }
}

impl std::fmt::Display for ApexTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Which symbolic poset an element or closed set lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    J,
    P,
    X,
    Y,
    OmegaPlusOne,
}

impl Ambient {
    pub fn name(self) -> &'static str {
        match self {
            Ambient::J => "J",
            Ambient::P => "P",
            Ambient::X => "X",
            Ambient::Y => "Y",
            Ambient::OmegaPlusOne => "omega-plus-one",
        }
    }

    pub fn is_grid(self) -> bool {
        !matches!(self, Ambient::OmegaPlusOne)
    }

    /// The apexes this ambient glues above the grid, in order.
    pub fn apexes(self) -> &'static [ApexTag] {
        match self {
            Ambient::J | Ambient::OmegaPlusOne => &[],
            Ambient::P => &[ApexTag::Top],
            Ambient::X => &[ApexTag::Top1, ApexTag::Top2],
            Ambient::Y => &[ApexTag::Top1, ApexTag::Top2, ApexTag::Top3],
        }
    }

    pub fn admits_apex(self, tag: ApexTag) -> bool {
        self.apexes().contains(&tag)
    }

    /// Order among apexes: only `Y` relates distinct ones (⊤₁, ⊤₂ ≤ ⊤₃).
    pub fn apex_leq(self, a: ApexTag, b: ApexTag) -> bool {
        a == b
            || (self == Ambient::Y
                && matches!((a, b), (ApexTag::Top1, ApexTag::Top3) | (ApexTag::Top2, ApexTag::Top3)))
    }
}

impl std::fmt::Display for Ambient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A point of one of the symbolic posets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JElement {
    /// `(m, n)` with finite height; columns and heights start at 1.
    Finite { col: u64, height: u64 },
    /// `(m, ∞)`.
    ColumnTop { col: u64 },
    /// A maximal point above the grid.
    Apex(ApexTag),
    /// A finite chain element of ω+1.
    Nat(u64),
    /// The top of ω+1.
    Omega,
}

impl JElement {
    pub fn finite(col: u64, height: u64) -> JElement {
        JElement::Finite { col, height }
    }

    pub fn column_top(col: u64) -> JElement {
        JElement::ColumnTop { col }
    }

    pub fn is_valid_in(self, ambient: Ambient) -> bool {
        match self {
            JElement::Finite { col, height } => ambient.is_grid() && col >= 1 && height >= 1,
            JElement::ColumnTop { col } => ambient.is_grid() && col >= 1,
            JElement::Apex(tag) => ambient.admits_apex(tag),
            JElement::Nat(n) => ambient == Ambient::OmegaPlusOne && n >= 1,
            JElement::Omega => ambient == Ambient::OmegaPlusOne,
        }
    }

    pub fn render(self) -> String {
        match self {
            JElement::Finite { col, height } => format!("({col},{height})"),
            JElement::ColumnTop { col } => format!("({col},∞)"),
            JElement::Apex(tag) => tag.name().to_string(),
            JElement::Nat(n) => n.to_string(),
            JElement::Omega => "∞".to_string(),
        }
    }
}

impl std::fmt::Display for JElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

fn require_valid(ambient: Ambient, e: JElement) -> Result<(), ContractError> {
    if e.is_valid_in(ambient) {
        Ok(())
    } else {
        Err(ContractError::InvalidElement {
            element: format!("{e} in {ambient}"),
        })
    }
}

/// The order of the ambient poset. Both elements must be valid there.
pub fn j_leq(ambient: Ambient, a: JElement, b: JElement) -> Result<bool, ContractError> {
    require_valid(ambient, a)?;
    require_valid(ambient, b)?;
    Ok(j_leq_unchecked(ambient, a, b))
}

pub(crate) fn j_leq_unchecked(ambient: Ambient, a: JElement, b: JElement) -> bool {
    use JElement::*;
    match (a, b) {
        // Chain.
        (Nat(m), Nat(n)) => m <= n,
        (Nat(_), Omega) | (Omega, Omega) => true,
        (Omega, Nat(_)) => false,
        // Everything in the grid sits below every apex; apexes compare
        // by the ambient's apex order.
        (Finite { .. } | ColumnTop { .. }, Apex(_)) => true,
        (Apex(s), Apex(t)) => ambient.apex_leq(s, t),
        (Apex(_), Finite { .. } | ColumnTop { .. }) => false,
        // Grid-internal order.
        (Finite { col: m1, height: n1 }, Finite { col: m2, height: n2 }) => m1 == m2 && n1 <= n2,
        (Finite { col: m1, height: n1 }, ColumnTop { col: m2 }) => m1 == m2 || n1 <= m2,
        (ColumnTop { col: m1 }, ColumnTop { col: m2 }) => m1 == m2,
        (ColumnTop { .. }, Finite { .. }) => false,
        // Mixed chain/grid pairs never validate together.
        _ => unreachable!("chain and grid elements cannot share an ambient"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn grid_order_examples() {
        let leq = |a, b| j_leq(Ambient::P, a, b).unwrap();
        assert!(leq(JElement::finite(2, 3), JElement::column_top(2)));
        assert!(leq(JElement::finite(2, 3), JElement::column_top(5)));
        assert!(!leq(JElement::column_top(3), JElement::column_top(5)));
        assert!(!leq(JElement::finite(2, 7), JElement::column_top(5)));
        assert!(leq(JElement::finite(2, 3), JElement::finite(2, 5)));
        assert!(!leq(JElement::finite(2, 3), JElement::finite(3, 3)));
        assert!(leq(JElement::finite(9, 9), JElement::Apex(ApexTag::Top)));
    }

    #[test]
    fn apex_rules_per_ambient() {
        assert!(j_leq(Ambient::X, JElement::column_top(4), JElement::Apex(ApexTag::Top1)).unwrap());
        assert!(!j_leq(Ambient::X, JElement::Apex(ApexTag::Top1), JElement::Apex(ApexTag::Top2))
            .unwrap());
        assert!(j_leq(Ambient::Y, JElement::Apex(ApexTag::Top1), JElement::Apex(ApexTag::Top3))
            .unwrap());
        assert!(!j_leq(Ambient::Y, JElement::Apex(ApexTag::Top3), JElement::Apex(ApexTag::Top1))
            .unwrap());
        assert!(j_leq(Ambient::Y, JElement::finite(1, 1), JElement::Apex(ApexTag::Top3)).unwrap());
        // ⊤ is only a P element; ⊤₃ is only a Y element.
        assert!(j_leq(Ambient::X, JElement::finite(1, 1), JElement::Apex(ApexTag::Top)).is_err());
        assert!(j_leq(Ambient::X, JElement::finite(1, 1), JElement::Apex(ApexTag::Top3)).is_err());
        assert!(j_leq(Ambient::J, JElement::finite(1, 1), JElement::Apex(ApexTag::Top)).is_err());
    }

    #[test]
    fn chain_order() {
        let leq = |a, b| j_leq(Ambient::OmegaPlusOne, a, b).unwrap();
        assert!(leq(JElement::Nat(3), JElement::Nat(7)));
        assert!(leq(JElement::Nat(3), JElement::Omega));
        assert!(!leq(JElement::Omega, JElement::Nat(3)));
        assert!(j_leq(Ambient::OmegaPlusOne, JElement::Nat(1), JElement::finite(1, 1)).is_err());
        assert!(j_leq(Ambient::P, JElement::Nat(1), JElement::Apex(ApexTag::Top)).is_err());
    }

    fn random_element(rng: &mut impl Rng, ambient: Ambient, max_coord: u64) -> JElement {
        let apexes = ambient.apexes();
        let roll: u8 = rng.random_range(0..10);
        if !apexes.is_empty() && roll == 0 {
            JElement::Apex(apexes[rng.random_range(0..apexes.len())])
        } else if roll <= 2 {
            JElement::column_top(rng.random_range(1..=max_coord))
        } else {
            JElement::finite(
                rng.random_range(1..=max_coord),
                rng.random_range(1..=max_coord),
            )
        }
    }

    #[test]
    fn order_axioms_on_sampled_triples() {
        // Reflexivity, antisymmetry and transitivity over 10^5 sampled
        // triples with coordinates up to 10^3, across all grid ambients.
        let mut rng = crate::gen::sample_rng(0x0eade5, 0);
        for _ in 0..100_000 {
            let ambient = [Ambient::J, Ambient::P, Ambient::X, Ambient::Y]
                [rng.random_range(0..4usize)];
            let a = random_element(&mut rng, ambient, 1000);
            let b = random_element(&mut rng, ambient, 1000);
            let c = random_element(&mut rng, ambient, 1000);
            let leq = |x, y| j_leq_unchecked(ambient, x, y);
            assert!(leq(a, a));
            if leq(a, b) && leq(b, a) {
                assert_eq!(a, b, "antisymmetry in {ambient}");
            }
            if leq(a, b) && leq(b, c) {
                assert!(leq(a, c), "transitivity in {ambient}: {a} {b} {c}");
            }
        }
    }
}
