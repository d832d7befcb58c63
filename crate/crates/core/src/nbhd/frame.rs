use serde::{Deserialize, Serialize};

use super::{ModelError, NbhdFamily, StateSet};

/// A neighbourhood function: one up-closed family per state.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    width: usize,
    families: Vec<NbhdFamily>,
}

/// Operations of the monotone-frame algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrameOp {
    Unit,
    Cup,
    Cap,
    Dual,
    Seq,
    Star,
    Cross,
}

impl FrameOp {
    pub fn arity(self) -> usize {
        match self {
            FrameOp::Unit => 0,
            FrameOp::Dual | FrameOp::Star | FrameOp::Cross => 1,
            FrameOp::Cup | FrameOp::Cap | FrameOp::Seq => 2,
        }
    }
}

impl Frame {
    pub fn new(families: Vec<NbhdFamily>) -> Result<Self, ModelError> {
        let width = families.len();
        if let Some(bad) = families.iter().find(|f| f.width() != width) {
            return Err(ModelError::WidthMismatch { expected: width, found: bad.width() });
        }
        Ok(Frame { width, families })
    }

    pub fn from_fn(width: usize, f: impl FnMut(usize) -> NbhdFamily) -> Self {
        Frame { width, families: (0..width).map(f).collect() }
    }

    /// Every state has the empty family: the least frame.
    pub fn bottom(width: usize) -> Self {
        Self::from_fn(width, |_| NbhdFamily::empty(width))
    }

    /// Every state has the full powerset: the greatest frame.
    pub fn top(width: usize) -> Self {
        Self::from_fn(width, |_| NbhdFamily::full(width))
    }

    /// `η(s) = {U | s ∈ U}`.
    pub fn unit(width: usize) -> Self {
        Self::from_fn(width, |s| NbhdFamily::principal(width, StateSet::singleton(s)))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn family(&self, state: usize) -> &NbhdFamily {
        &self.families[state]
    }

    pub fn families(&self) -> &[NbhdFamily] {
        &self.families
    }

    /// Pointwise family inclusion.
    pub fn is_subframe_of(&self, other: &Frame) -> bool {
        self.width == other.width && self.families.iter().zip(&other.families).all(|(a, b)| a.is_subfamily_of(b))
    }

    fn check_width(&self, other: &Frame) -> Result<(), ModelError> {
        if self.width != other.width {
            return Err(ModelError::WidthMismatch { expected: self.width, found: other.width });
        }
        Ok(())
    }

    pub fn cup(&self, other: &Frame) -> Result<Frame, ModelError> {
        self.check_width(other)?;
        Ok(self.zip_with(other, NbhdFamily::union))
    }

    pub fn cap(&self, other: &Frame) -> Result<Frame, ModelError> {
        self.check_width(other)?;
        Ok(self.zip_with(other, NbhdFamily::intersection))
    }

    fn zip_with(&self, other: &Frame, op: impl Fn(&NbhdFamily, &NbhdFamily) -> NbhdFamily) -> Frame {
        Frame { width: self.width, families: self.families.iter().zip(&other.families).map(|(a, b)| op(a, b)).collect() }
    }

    /// `U ∈ f^d(s)` iff `S \ U ∉ f(s)`.
    pub fn dual(&self) -> Frame {
        let n = self.width;
        let full = StateSet::full(n);
        Self::from_fn(n, |s| {
            let fam = &self.families[s];
            let member: Vec<bool> =
                StateSet::all(n).map(|u| !fam.contains(StateSet(full.bits() & !u.bits()))).collect();
            NbhdFamily::from_membership(n, &member)
        })
    }

    /// `U ∈ (f;g)(s)` iff `{t | U ∈ g(t)} ∈ f(s)`: the first game is
    /// played first.
    pub fn seq(&self, then: &Frame) -> Result<Frame, ModelError> {
        self.check_width(then)?;
        let n = self.width;
        // reach[U] = states from which the second game forces into U
        let reach: Vec<StateSet> = StateSet::all(n)
            .map(|u| StateSet::from_states((0..n).filter(|&t| then.families[t].contains(u))))
            .collect();
        Ok(Self::from_fn(n, |s| {
            let fam = &self.families[s];
            let member: Vec<bool> = reach.iter().map(|w| fam.contains(*w)).collect();
            NbhdFamily::from_membership(n, &member)
        }))
    }

    /// Least fixpoint of `g ↦ η ∪ (f;g)`, by iteration from the bottom frame.
    pub fn star(&self) -> Frame {
        let unit = Frame::unit(self.width);
        self.iterate(Frame::bottom(self.width), |g| unit.cup(&self.seq(g).unwrap()).unwrap())
    }

    /// Greatest fixpoint of `g ↦ η ∩ (f;g)`, by iteration from the top frame.
    pub fn cross(&self) -> Frame {
        let unit = Frame::unit(self.width);
        self.iterate(Frame::top(self.width), |g| unit.cap(&self.seq(g).unwrap()).unwrap())
    }

    fn iterate(&self, start: Frame, step: impl Fn(&Frame) -> Frame) -> Frame {
        let mut current = start;
        loop {
            let next = step(&current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Applies `op` to `operands`, checking arity and widths. `width` is
    /// only consulted for the nullary unit.
    pub fn apply(op: FrameOp, width: usize, operands: &[&Frame]) -> Result<Frame, ModelError> {
        if operands.len() != op.arity() {
            return Err(ModelError::Arity { op, expected: op.arity(), found: operands.len() });
        }
        Ok(match op {
            FrameOp::Unit => Frame::unit(width),
            FrameOp::Dual => operands[0].dual(),
            FrameOp::Star => operands[0].star(),
            FrameOp::Cross => operands[0].cross(),
            FrameOp::Cup => operands[0].cup(operands[1])?,
            FrameOp::Cap => operands[0].cap(operands[1])?,
            FrameOp::Seq => operands[0].seq(operands[1])?,
        })
    }
}
