//! Brute-force oracle over coordinate-truncated grid posets.
//!
//! Restricting a grid ambient to columns and heights `1..=bound` gives a
//! finite poset on which membership, down-closure, the column-trace rule
//! for Scott-closure, and least upper bounds can be computed by raw
//! search. The symbolic descriptor engine is required to agree with this
//! oracle wherever the truncation is faithful; the one blind spot is the
//! whole grid without apexes, whose truncation gains a spurious top
//! `(bound, ∞)` as an upper bound.

use super::descriptor::{DescriptorSpec, JClosedDescriptor};
use super::element::{j_leq_unchecked, Ambient, JElement};

/// A fixed-size bitset over the truncated element list.
#[derive(Clone, PartialEq, Eq)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 != 0
    }

    pub fn is_subset_of(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn any(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

/// Outcome of a brute-force least-upper-bound search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LubOutcome {
    NoUpperBound,
    Least(JElement),
    NoLeast,
}

pub struct TruncatedPoset {
    pub ambient: Ambient,
    pub bound: u64,
    elements: Vec<JElement>,
    ups: Vec<Bits>,
    downs: Vec<Bits>,
}

impl TruncatedPoset {
    pub fn new(ambient: Ambient, bound: u64) -> Self {
        assert!(ambient.is_grid(), "truncation covers the grid ambients");
        let mut elements = Vec::new();
        for col in 1..=bound {
            for height in 1..=bound {
                elements.push(JElement::finite(col, height));
            }
        }
        for col in 1..=bound {
            elements.push(JElement::column_top(col));
        }
        for &tag in ambient.apexes() {
            elements.push(JElement::Apex(tag));
        }
        let n = elements.len();
        let mut ups = vec![Bits::new(n); n];
        let mut downs = vec![Bits::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if j_leq_unchecked(ambient, elements[i], elements[j]) {
                    ups[i].set(j);
                    downs[j].set(i);
                }
            }
        }
        TruncatedPoset {
            ambient,
            bound,
            elements,
            ups,
            downs,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[JElement] {
        &self.elements
    }

    pub fn index_of(&self, e: JElement) -> Option<usize> {
        let b = self.bound;
        let idx = match e {
            JElement::Finite { col, height } if col >= 1 && col <= b && height >= 1 && height <= b => {
                (col - 1) * b + (height - 1)
            }
            JElement::ColumnTop { col } if col >= 1 && col <= b => b * b + (col - 1),
            JElement::Apex(tag) => {
                let pos = self.ambient.apexes().iter().position(|&t| t == tag)?;
                b * b + b + pos as u64
            }
            _ => return None,
        };
        Some(idx as usize)
    }

    /// Membership of every truncated element under a predicate.
    pub fn restrict(&self, contains: impl Fn(JElement) -> bool) -> Bits {
        let mut bits = Bits::new(self.len());
        for (i, &e) in self.elements.iter().enumerate() {
            if contains(e) {
                bits.set(i);
            }
        }
        bits
    }

    pub fn restrict_descriptor(&self, d: &JClosedDescriptor) -> Bits {
        self.restrict(|e| d.contains(e))
    }

    pub fn is_down_closed(&self, set: &Bits) -> bool {
        set.ones().all(|i| self.downs[i].is_subset_of(set))
    }

    /// Scott-closure on the truncation: down-closed, and any column whose
    /// visible trace is full must include its top. Faithful for sets whose
    /// description uses coordinates strictly below the bound.
    pub fn is_scott_closed(&self, set: &Bits) -> bool {
        if !self.is_down_closed(set) {
            return false;
        }
        for col in 1..=self.bound {
            let full_trace = (1..=self.bound)
                .all(|h| set.get(self.index_of(JElement::finite(col, h)).unwrap()));
            let has_top = set.get(self.index_of(JElement::column_top(col)).unwrap());
            if full_trace && !has_top {
                return false;
            }
        }
        true
    }

    /// Brute-force least upper bound of a nonempty set.
    pub fn least_upper_bound(&self, set: &Bits) -> LubOutcome {
        let mut ub = Bits::new(self.len());
        for w in ub.words.iter_mut() {
            *w = u64::MAX;
        }
        // Mask off the tail beyond len.
        let tail = self.len() % 64;
        if tail != 0 {
            let last = ub.words.len() - 1;
            ub.words[last] = (1u64 << tail) - 1;
        }
        for i in set.ones() {
            ub.intersect_with(&self.ups[i]);
        }
        if !ub.any() {
            return LubOutcome::NoUpperBound;
        }
        for m in ub.ones() {
            if ub.is_subset_of(&self.ups[m]) {
                return LubOutcome::Least(self.elements[m]);
            }
        }
        LubOutcome::NoLeast
    }
}

/// Raw membership semantics of unvalidated descriptor fields, for feeding
/// invalid specs to the oracle.
pub fn raw_contains(spec: &DescriptorSpec, e: JElement) -> bool {
    match e {
        JElement::Finite { col, height } => {
            spec.whole
                || height <= spec.strip
                || spec.tops.contains(&col)
                || spec
                    .extras
                    .iter()
                    .any(|&(c, h)| c == col && height <= h)
        }
        JElement::ColumnTop { col } => spec.whole || spec.tops.contains(&col),
        JElement::Apex(tag) => spec.apexes.contains(&tag),
        _ => false,
    }
}
