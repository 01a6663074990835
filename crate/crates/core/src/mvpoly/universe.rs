use std::fmt;
use std::sync::{Arc, OnceLock};

use super::PolyError;

/// Upper bound on the number of variables a universe may hold.
pub const MAX_VARS: usize = 16;

/// Index of a variable inside a [`VariableUniverse`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u8);

impl Var {
    /// Homogenizing parameter of the default universe.
    pub const T0: Var = Var(0);
    pub const T1: Var = Var(1);
    pub const T2: Var = Var(2);
    /// Distance.
    pub const D: Var = Var(3);
    pub const K1: Var = Var(4);
    pub const K2: Var = Var(5);
    pub const K3: Var = Var(6);
    pub const C1: Var = Var(7);
    pub const C2: Var = Var(8);
    pub const C3: Var = Var(9);

    pub fn new(index: usize) -> Var {
        assert!(index < MAX_VARS, "variable index {index} out of range");
        Var(index as u8)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of variables, stored as a bit mask over universe indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u16);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn of(vars: &[Var]) -> VarSet {
        vars.iter().copied().collect()
    }

    pub fn single(v: Var) -> VarSet {
        VarSet(1 << v.0)
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.0) != 0
    }

    pub fn insert(&mut self, v: Var) {
        self.0 |= 1 << v.0;
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        (0..MAX_VARS as u8).filter(move |i| self.0 & (1 << i) != 0).map(Var)
    }

    pub(crate) fn from_bits(bits: u16) -> VarSet {
        VarSet(bits)
    }

    pub(crate) fn bits(self) -> u16 {
        self.0
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

/// Ordered, duplicate-free list of variable names shared by a family of polynomials.
///
/// The position of a name is its rank in the graded-lex order: earlier names
/// are larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableUniverse {
    names: Vec<String>,
}

impl VariableUniverse {
    pub fn new<I, S>(names: I) -> Result<Arc<VariableUniverse>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VariableUniverse { names }))
    }

    /// The universe used by the offset pipeline:
    /// `[t0, t1, t2, d, k1, k2, k3, c1, c2, c3]`.
    pub fn offset_default() -> Arc<VariableUniverse> {
        static DEFAULT: OnceLock<Arc<VariableUniverse>> = OnceLock::new();
        DEFAULT
            .get_or_init(|| {
                VariableUniverse::new(["t0", "t1", "t2", "d", "k1", "k2", "k3", "c1", "c2", "c3"])
                    .expect("default universe is valid")
            })
            .clone()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v.index()]
    }

    pub fn var(&self, name: &str) -> Result<Var, PolyError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(Var::new)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn check(&self, v: Var) -> Result<(), PolyError> {
        if v.index() < self.names.len() {
            Ok(())
        } else {
            Err(PolyError::UnknownVariable(format!("#{}", v.index())))
        }
    }

    pub fn all(&self) -> VarSet {
        (0..self.names.len()).map(Var::new).collect()
    }
}

impl fmt::Display for VariableUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

/// Two universes are compatible when they are the same allocation or list the same names.
pub(crate) fn same_universe(a: &Arc<VariableUniverse>, b: &Arc<VariableUniverse>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}
