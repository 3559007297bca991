//! Bitmask subsets over a fixed carrier order.
//!
//! Every finite space in this crate fixes an ordering of its carrier and
//! represents subsets as bitmasks over that ordering, so set equality is
//! plain `==` and families of sets can be kept sorted and deduplicated.
//! Carriers are capped at [`MAX_CARRIER`] points.

use std::fmt;

/// Largest carrier a `Subset` can index.
pub const MAX_CARRIER: usize = 64;

/// A subset of a carrier with at most [`MAX_CARRIER`] points.
///
/// The numeric bitmask order doubles as the crate-wide canonical subset
/// order: reports that must pick a deterministic witness pick the subset
/// with the smallest mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full carrier of size `n`.
    pub fn full(n: usize) -> Subset {
        assert!(n <= MAX_CARRIER, "carrier larger than {MAX_CARRIER}");
        if n == MAX_CARRIER {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        assert!(i < MAX_CARRIER);
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Subset {
        let mut s = Subset::EMPTY;
        for i in indices {
            s = s.with(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_CARRIER && self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Subset {
        assert!(i < MAX_CARRIER);
        Subset(self.0 | (1u64 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Subset {
        assert!(i < MAX_CARRIER);
        Subset(self.0 & !(1u64 << i))
    }

    #[must_use]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[must_use]
    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[must_use]
    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement within a carrier of size `n`.
    #[must_use]
    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).minus(self)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Indices of the members, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All `2^n` subsets of a carrier of size `n`, in canonical order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < 32, "exhaustive subset enumeration capped at 31 points");
        (0u64..(1u64 << n)).map(Subset)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset({:b})", self.0)
    }
}

/// Renders a subset through a labelling function, `{a, b}` style.
pub fn render_subset(s: Subset, label: impl Fn(usize) -> String) -> String {
    let names: Vec<String> = s.iter().map(label).collect();
    format!("{{{}}}", names.join(", "))
}

/// Sorts and deduplicates a family of subsets into canonical order.
pub fn canonical_family(mut family: Vec<Subset>) -> Vec<Subset> {
    family.sort();
    family.dedup();
    family
}
