use std::fmt;

/// Upper bound on model size; state sets are bitmasks and several
/// operations enumerate all `2^|S|` subsets.
pub const MAX_STATES: usize = 16;

/// A set of states, as a bitmask over the model's state list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(pub u32);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub fn full(width: usize) -> Self {
        debug_assert!(width <= MAX_STATES);
        StateSet(((1u64 << width) - 1) as u32)
    }

    pub fn singleton(state: usize) -> Self {
        StateSet(1 << state)
    }

    pub fn from_states(states: impl IntoIterator<Item = usize>) -> Self {
        states.into_iter().fold(Self::EMPTY, |acc, s| acc.with(s))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, state: usize) -> bool {
        self.0 >> state & 1 == 1
    }

    pub fn with(self, state: usize) -> Self {
        StateSet(self.0 | 1 << state)
    }

    pub fn without(self, state: usize) -> Self {
        StateSet(self.0 & !(1 << state))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: StateSet) -> Self {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: StateSet) -> Self {
        StateSet(self.0 & other.0)
    }

    pub fn complement(self, width: usize) -> Self {
        StateSet(!self.0 & Self::full(width).0)
    }

    /// Fits in a model with `width` states.
    pub fn fits(self, width: usize) -> bool {
        self.is_subset(Self::full(width))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    /// Every subset of a `width`-state space, in bitmask order.
    pub fn all(width: usize) -> impl Iterator<Item = StateSet> {
        (0..1u32 << width).map(StateSet)
    }

    /// Canonical order for antichain members: by cardinality, then bitmask.
    pub(crate) fn canonical_key(self) -> (u32, u32) {
        (self.0.count_ones(), self.0)
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "s{s}")?;
        }
        f.write_str("}")
    }
}
