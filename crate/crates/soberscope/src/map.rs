//! Maps between finite spaces, given by explicit point tables.

use crate::error::{ContractError, InputError};
use crate::set::Subset;
use crate::space::FiniteSpace;

/// A total function between two finite spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct SpaceMap {
    source: FiniteSpace,
    target: FiniteSpace,
    table: Vec<usize>,
}

impl SpaceMap {
    pub fn new(
        source: FiniteSpace,
        target: FiniteSpace,
        table: Vec<usize>,
    ) -> Result<Self, ContractError> {
        if table.len() != source.len() || table.iter().any(|&y| y >= target.len()) {
            return Err(ContractError::NotTotal);
        }
        Ok(SpaceMap {
            source,
            target,
            table,
        })
    }

    /// Builds a map from `(source label, target label)` pairs; every source
    /// point must be assigned exactly once.
    pub fn from_pairs(
        source: FiniteSpace,
        target: FiniteSpace,
        pairs: &[(String, String)],
    ) -> Result<Self, InputError> {
        let mut table = vec![usize::MAX; source.len()];
        for (from, to) in pairs {
            let x = source
                .point(from)
                .ok_or(InputError::UnknownElement { name: from.clone() })?;
            let y = target
                .point(to)
                .ok_or(InputError::UnknownElement { name: to.clone() })?;
            table[x] = y;
        }
        if let Some(x) = table.iter().position(|&y| y == usize::MAX) {
            return Err(InputError::UnknownElement {
                name: format!("no image for `{}`", source.label(x)),
            });
        }
        Ok(SpaceMap {
            source,
            target,
            table,
        })
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        SpaceMap {
            source: space.clone(),
            target: space.clone(),
            table: (0..space.len()).collect(),
        }
    }

    pub fn constant(source: &FiniteSpace, target: &FiniteSpace, value: usize) -> Self {
        assert!(value < target.len());
        SpaceMap {
            source: source.clone(),
            target: target.clone(),
            table: vec![value; source.len()],
        }
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn image_of(&self, s: Subset) -> Subset {
        Subset::from_indices(s.iter().map(|x| self.table[x]))
    }

    pub fn preimage_of(&self, t: Subset) -> Subset {
        Subset::from_indices((0..self.source.len()).filter(|&x| t.contains(self.table[x])))
    }

    pub fn injectivity_violation(&self) -> Option<(usize, usize)> {
        for x in 0..self.source.len() {
            for y in x + 1..self.source.len() {
                if self.table[x] == self.table[y] {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_injective(&self) -> bool {
        self.injectivity_violation().is_none()
    }

    /// g ∘ self, when the codomains line up.
    pub fn compose(&self, g: &SpaceMap) -> Result<SpaceMap, ContractError> {
        if self.target != g.source {
            return Err(ContractError::NotTotal);
        }
        SpaceMap::new(
            self.source.clone(),
            g.target.clone(),
            self.table.iter().map(|&x| g.table[x]).collect(),
        )
    }

    pub fn render(&self) -> String {
        let rules: Vec<String> = self
            .table
            .iter()
            .enumerate()
            .map(|(x, &y)| format!("{}→{}", self.source.label(x), self.target.label(y)))
            .collect();
        format!("[{}]", rules.join(", "))
    }
}

impl std::fmt::Debug for SpaceMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SpaceMap{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::sierpinski;

    #[test]
    fn totality_is_enforced() {
        let s = sierpinski();
        assert!(SpaceMap::new(s.clone(), s.clone(), vec![0]).is_err());
        assert!(SpaceMap::new(s.clone(), s.clone(), vec![0, 7]).is_err());
        assert!(SpaceMap::new(s.clone(), s, vec![1, 0]).is_ok());
    }

    #[test]
    fn images_and_preimages() {
        let s = sierpinski();
        let swap = SpaceMap::new(s.clone(), s.clone(), vec![1, 0]).unwrap();
        assert_eq!(swap.image_of(Subset::from_indices([0])), Subset::from_indices([1]));
        assert_eq!(
            swap.preimage_of(Subset::from_indices([1])),
            Subset::from_indices([0])
        );
        assert!(swap.is_injective());
        let collapse = SpaceMap::constant(&s, &s, 1);
        assert_eq!(collapse.injectivity_violation(), Some((0, 1)));
    }
}
