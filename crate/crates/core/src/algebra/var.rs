use core::fmt;

/// Indeterminates of the polynomial ring, in monomial-order priority.
///
/// The six phase variables come first, then time, the six parameters and
/// finally `Tau`, the square-root time used by the scalar reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    W,
    Q,
    P,
    T,
    A0,
    A1,
    A2,
    A3,
    A4,
    A5,
    Tau,
}

pub const VAR_COUNT: usize = 14;

pub const PHASE: [Var; 6] = [Var::X, Var::Y, Var::Z, Var::W, Var::Q, Var::P];

pub const PARAMS: [Var; 6] = [Var::A0, Var::A1, Var::A2, Var::A3, Var::A4, Var::A5];

pub const ALL_VARS: [Var; VAR_COUNT] = [
    Var::X,
    Var::Y,
    Var::Z,
    Var::W,
    Var::Q,
    Var::P,
    Var::T,
    Var::A0,
    Var::A1,
    Var::A2,
    Var::A3,
    Var::A4,
    Var::A5,
    Var::Tau,
];

impl Var {
    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Var> {
        ALL_VARS.get(i).copied()
    }

    pub fn param(i: usize) -> Var {
        PARAMS[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::W => "w",
            Var::Q => "q",
            Var::P => "p",
            Var::T => "t",
            Var::A0 => "a0",
            Var::A1 => "a1",
            Var::A2 => "a2",
            Var::A3 => "a3",
            Var::A4 => "a4",
            Var::A5 => "a5",
            Var::Tau => "tau",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        ALL_VARS.iter().copied().find(|v| v.name() == s)
    }

    pub fn is_phase(self) -> bool {
        self.index() < 6
    }

    pub fn is_param(self) -> bool {
        (7..13).contains(&self.index())
    }

    /// Parameter index 0..6 for `A0..A5`.
    pub fn param_index(self) -> Option<usize> {
        if self.is_param() {
            Some(self.index() - 7)
        } else {
            None
        }
    }

    /// Bit in a [`VarSet`].
    #[inline]
    pub const fn bit(self) -> u16 {
        1 << (self as u16)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bitset of indeterminates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VarSet(pub u16);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);
    pub const PHASE: VarSet = VarSet(0b11_1111);

    pub fn contains(self, v: Var) -> bool {
        self.0 & v.bit() != 0
    }

    pub fn insert(&mut self, v: Var) {
        self.0 |= v.bit();
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        ALL_VARS.into_iter().filter(move |v| self.contains(*v))
    }
}

impl FromIterator<Var> for VarSet {
    fn from_iter<I: IntoIterator<Item = Var>>(iter: I) -> Self {
        let mut s = VarSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}
