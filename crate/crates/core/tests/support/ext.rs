//! Neighbourhood frames as explicit membership tables, with the game
//! operations written straight from their set-theoretic definitions.

use glw_core::nbhd::{Frame, NbhdFamily, StateSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtFrame {
    pub n: usize,
    /// `table[s][u]`: is the set with bitmask `u` a neighbourhood of `s`.
    pub table: Vec<Vec<bool>>,
}

impl ExtFrame {
    fn build(n: usize, f: impl Fn(usize, u32) -> bool) -> Self {
        ExtFrame { n, table: (0..n).map(|s| (0..1u32 << n).map(|u| f(s, u)).collect()).collect() }
    }

    pub fn of(frame: &Frame) -> Self {
        let n = frame.width();
        ExtFrame::build(n, |s, u| frame.family(s).contains(StateSet(u)))
    }

    pub fn to_frame(&self) -> Frame {
        Frame::from_fn(self.n, |s| {
            NbhdFamily::from_sets(self.n, (0..1u32 << self.n).filter(|&u| self.table[s][u as usize]).map(StateSet))
        })
    }

    pub fn has(&self, s: usize, u: u32) -> bool {
        self.table[s][u as usize]
    }

    pub fn bottom(n: usize) -> Self {
        ExtFrame::build(n, |_, _| false)
    }

    pub fn top(n: usize) -> Self {
        ExtFrame::build(n, |_, _| true)
    }

    pub fn unit(n: usize) -> Self {
        ExtFrame::build(n, |s, u| u >> s & 1 == 1)
    }

    pub fn cup(&self, o: &Self) -> Self {
        ExtFrame::build(self.n, |s, u| self.has(s, u) || o.has(s, u))
    }

    pub fn cap(&self, o: &Self) -> Self {
        ExtFrame::build(self.n, |s, u| self.has(s, u) && o.has(s, u))
    }

    pub fn dual(&self) -> Self {
        let full = (1u32 << self.n) - 1;
        ExtFrame::build(self.n, |s, u| !self.has(s, full & !u))
    }

    /// `U ∈ (f;g)(s)` iff `{t | U ∈ g(t)} ∈ f(s)`.
    pub fn seq(&self, then: &Self) -> Self {
        ExtFrame::build(self.n, |s, u| {
            let w = (0..self.n).filter(|&t| then.has(t, u)).fold(0u32, |acc, t| acc | 1 << t);
            self.has(s, w)
        })
    }

    fn fixpoint(&self, start: Self, step: impl Fn(&Self) -> Self) -> Self {
        let mut x = start;
        loop {
            let next = step(&x);
            if next == x {
                return x;
            }
            x = next;
        }
    }

    pub fn star(&self) -> Self {
        let unit = ExtFrame::unit(self.n);
        self.fixpoint(ExtFrame::bottom(self.n), |x| unit.cup(&self.seq(x)))
    }

    pub fn cross(&self) -> Self {
        let unit = ExtFrame::unit(self.n);
        self.fixpoint(ExtFrame::top(self.n), |x| unit.cap(&self.seq(x)))
    }

    pub fn is_monotone(&self) -> bool {
        (0..self.n).all(|s| {
            (0..1u32 << self.n).all(|u| !self.has(s, u) || (0..self.n).all(|t| self.has(s, u | 1 << t)))
        })
    }

    pub fn is_subframe_of(&self, o: &Self) -> bool {
        (0..self.n).all(|s| (0..1u32 << self.n).all(|u| !self.has(s, u) || o.has(s, u)))
    }
}
