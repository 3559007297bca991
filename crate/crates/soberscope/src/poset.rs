//! Finite posets: the order-theoretic side of finite T0 spaces.

use crate::error::InputError;
use crate::set::{Subset, MAX_CARRIER};

/// A finite partially ordered set over labelled elements.
///
/// The relation is stored as a full `n x n` boolean matrix and is always
/// reflexively and transitively closed; antisymmetry is checked when the
/// poset is built, so a constructed value really is a partial order.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Builds a poset from generating `le` pairs (indices into `labels`).
    ///
    /// The pairs are closed under reflexivity and transitivity; a cycle
    /// through distinct elements is an antisymmetry violation.
    pub fn new(labels: Vec<String>, le_pairs: &[(usize, usize)]) -> Result<Self, InputError> {
        let n = labels.len();
        if n > MAX_CARRIER {
            return Err(InputError::CarrierTooLarge { size: n });
        }
        if let Some(dup) = first_duplicate(&labels) {
            return Err(InputError::DuplicateIdentifier { name: dup });
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in le_pairs {
            if a >= n || b >= n {
                return Err(InputError::UnknownElement {
                    name: format!("#{}", a.max(b)),
                });
            }
            leq[a * n + b] = true;
        }
        // Floyd-Warshall style transitive closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(InputError::AntisymmetryViolation {
                        a: labels[i].clone(),
                        b: labels[j].clone(),
                    });
                }
            }
        }
        Ok(FinitePoset { labels, leq })
    }

    /// Builds a poset from a full relation matrix, checking all three
    /// partial-order axioms rather than closing the input.
    pub fn from_matrix(labels: Vec<String>, leq: Vec<bool>) -> Result<Self, InputError> {
        let n = labels.len();
        assert_eq!(leq.len(), n * n, "relation matrix must be n*n");
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(InputError::NotReflexive {
                    name: labels[i].clone(),
                });
            }
        }
        for i in 0..n {
            for k in 0..n {
                if !leq[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k * n + j] && !leq[i * n + j] {
                        return Err(InputError::NotTransitive {
                            a: labels[i].clone(),
                            b: labels[k].clone(),
                            c: labels[j].clone(),
                        });
                    }
                }
            }
        }
        Self::new(labels, &pairs_of(&leq, n))
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

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// `↑a` as a subset.
    pub fn up_set_of(&self, a: usize) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&b| self.leq(a, b)))
    }

    /// `↓a` as a subset.
    pub fn down_set_of(&self, a: usize) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&b| self.leq(b, a)))
    }

    pub fn is_up_set(&self, s: Subset) -> bool {
        s.iter().all(|a| self.up_set_of(a).is_subset_of(s))
    }

    pub fn is_down_set(&self, s: Subset) -> bool {
        s.iter().all(|a| self.down_set_of(a).is_subset_of(s))
    }

    /// Nonempty and every pair of members has an upper bound inside.
    pub fn is_directed(&self, s: Subset) -> bool {
        if s.is_empty() {
            return false;
        }
        s.iter().all(|a| {
            s.iter()
                .all(|b| self.up_set_of(a).intersect(self.up_set_of(b)).meets(s))
        })
    }

    /// All up-sets, enumerated output-sensitively and returned in canonical
    /// order. `cap` bounds the family size; `None` is returned when the
    /// enumeration would exceed it.
    pub fn up_sets_capped(&self, cap: usize) -> Option<Vec<Subset>> {
        let n = self.len();
        // Visit elements so that everything strictly above an element is
        // decided before the element itself.
        let order = self.reverse_topological();
        let mut acc: Vec<Subset> = Vec::new();
        let mut stack: Vec<(usize, Subset)> = vec![(0, Subset::EMPTY)];
        while let Some((k, cur)) = stack.pop() {
            if k == n {
                acc.push(cur);
                if acc.len() > cap {
                    return None;
                }
                continue;
            }
            let x = order[k];
            stack.push((k + 1, cur));
            let strict_up = self.up_set_of(x).without(x);
            if strict_up.is_subset_of(cur) {
                stack.push((k + 1, cur.with(x)));
            }
        }
        Some(crate::set::canonical_family(acc))
    }

    pub fn up_sets(&self) -> Vec<Subset> {
        self.up_sets_capped(usize::MAX).expect("uncapped")
    }

    /// A linear extension listing maximal elements first.
    fn reverse_topological(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // Sort by decreasing size of the up-set: anything above x has a
        // strictly smaller up-set, so it appears before x.
        order.sort_by_key(|&x| (self.up_set_of(x).len(), x));
        order
    }
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut rels = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i != j && self.leq(i, j) {
                    rels.push(format!("{}<={}", self.labels[i], self.labels[j]));
                }
            }
        }
        write!(f, "FinitePoset[{}; {}]", self.labels.join(","), rels.join(" "))
    }
}

fn first_duplicate(labels: &[String]) -> Option<String> {
    let mut seen = std::collections::HashSet::new();
    labels.iter().find(|l| !seen.insert(*l)).cloned()
}

fn pairs_of(leq: &[bool], n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if leq[i * n + j] {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

#[cfg(test)]
pub(crate) fn string_labels<S: AsRef<str>>(labels: &[S]) -> Vec<String> {
    labels.iter().map(|s| s.as_ref().to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> FinitePoset {
        FinitePoset::new(string_labels(&["a", "b"]), &[(0, 1)]).unwrap()
    }

    #[test]
    fn closure_and_antisymmetry() {
        let p = FinitePoset::new(string_labels(&["a", "b", "c"]), &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2), "transitive closure");
        assert!(p.leq(1, 1), "reflexive closure");
        let err = FinitePoset::new(string_labels(&["a", "b"]), &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, InputError::AntisymmetryViolation { .. }));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = FinitePoset::new(string_labels(&["a", "a"]), &[]).unwrap_err();
        assert!(matches!(err, InputError::DuplicateIdentifier { .. }));
    }

    #[test]
    fn up_sets_of_chain() {
        let p = chain2();
        let ups = p.up_sets();
        assert_eq!(
            ups,
            vec![
                Subset::EMPTY,
                Subset::from_indices([1]),
                Subset::from_indices([0, 1])
            ]
        );
    }

    #[test]
    fn up_sets_of_antichain_is_powerset() {
        let p = FinitePoset::new(string_labels(&["a", "b", "c"]), &[]).unwrap();
        assert_eq!(p.up_sets().len(), 8);
    }

    #[test]
    fn up_sets_match_filter_on_small_posets() {
        let p = FinitePoset::new(
            string_labels(&["a", "b", "c", "d"]),
            &[(0, 2), (1, 2), (1, 3)],
        )
        .unwrap();
        let by_filter: Vec<Subset> = Subset::all(4).filter(|&s| p.is_up_set(s)).collect();
        assert_eq!(p.up_sets(), by_filter);
    }

    #[test]
    fn directedness() {
        let v = FinitePoset::new(string_labels(&["a", "b", "c"]), &[(0, 2), (1, 2)]).unwrap();
        assert!(v.is_directed(Subset::from_indices([0, 1, 2])));
        assert!(!v.is_directed(Subset::from_indices([0, 1])));
        assert!(!v.is_directed(Subset::EMPTY));
    }
}
