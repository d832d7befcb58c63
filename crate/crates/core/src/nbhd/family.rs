use super::{ModelError, StateSet};

/// An up-closed family of state sets, stored as its antichain of
/// ⊆-minimal members.
///
/// The antichain is kept canonical (minimal and sorted), so structural
/// equality is family equality. The empty antichain is the empty family;
/// the antichain `[∅]` is the full powerset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NbhdFamily {
    width: usize,
    antichain: Vec<StateSet>,
}

impl NbhdFamily {
    pub fn empty(width: usize) -> Self {
        NbhdFamily { width, antichain: Vec::new() }
    }

    pub fn full(width: usize) -> Self {
        NbhdFamily { width, antichain: vec![StateSet::EMPTY] }
    }

    /// `↑{set}`.
    pub fn principal(width: usize, set: StateSet) -> Self {
        NbhdFamily { width, antichain: vec![set] }
    }

    /// Upward closure of `sets`, minimized.
    pub fn from_sets(width: usize, sets: impl IntoIterator<Item = StateSet>) -> Self {
        let mut v: Vec<StateSet> = sets.into_iter().collect();
        v.sort_by_key(|s| s.canonical_key());
        v.dedup();
        let mut antichain: Vec<StateSet> = Vec::with_capacity(v.len());
        // sorted by cardinality: a set is minimal iff no kept set is below it
        for s in v {
            if !antichain.iter().any(|m| m.is_subset(s)) {
                antichain.push(s);
            }
        }
        NbhdFamily { width, antichain }
    }

    /// Minimal members of an up-closed family given extensionally by a
    /// membership table indexed by bitmask.
    pub(crate) fn from_membership(width: usize, member: &[bool]) -> Self {
        debug_assert_eq!(member.len(), 1 << width);
        let mut antichain: Vec<StateSet> = (0..member.len() as u32)
            .filter(|&u| member[u as usize])
            .map(StateSet)
            .filter(|u| u.iter().all(|i| !member[u.without(i).bits() as usize]))
            .collect();
        antichain.sort_by_key(|s| s.canonical_key());
        NbhdFamily { width, antichain }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn antichain(&self) -> &[StateSet] {
        &self.antichain
    }

    pub fn is_empty(&self) -> bool {
        self.antichain.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.antichain.first() == Some(&StateSet::EMPTY)
    }

    /// `u` belongs to the family; `u` must fit the family's width.
    pub fn contains(&self, u: StateSet) -> bool {
        self.antichain.iter().any(|m| m.is_subset(u))
    }

    /// Checked membership.
    pub fn member(&self, u: StateSet) -> Result<bool, ModelError> {
        if !u.fits(self.width) {
            return Err(ModelError::WidthMismatch { expected: self.width, found: u.iter().last().map_or(0, |i| i + 1) });
        }
        Ok(self.contains(u))
    }

    /// Every member of the up-closure, in bitmask order.
    pub fn members(&self) -> Vec<StateSet> {
        StateSet::all(self.width).filter(|u| self.contains(*u)).collect()
    }

    /// Family inclusion.
    pub fn is_subfamily_of(&self, other: &NbhdFamily) -> bool {
        self.antichain.iter().all(|a| other.contains(*a))
    }

    pub fn union(&self, other: &NbhdFamily) -> NbhdFamily {
        NbhdFamily::from_sets(self.width, self.antichain.iter().chain(&other.antichain).copied())
    }

    pub fn intersection(&self, other: &NbhdFamily) -> NbhdFamily {
        let joins = self
            .antichain
            .iter()
            .flat_map(|a| other.antichain.iter().map(move |b| a.union(*b)));
        NbhdFamily::from_sets(self.width, joins)
    }

    /// Pairwise ⊆-incomparable and canonically sorted.
    pub fn is_canonical(&self) -> bool {
        let sorted = self.antichain.windows(2).all(|w| w[0].canonical_key() < w[1].canonical_key());
        let incomparable = self.antichain.iter().enumerate().all(|(i, a)| {
            self.antichain.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(*b))
        });
        sorted && incomparable && self.antichain.iter().all(|a| a.fits(self.width))
    }
}
