use super::universe::{Var, VarSet, MAX_VARS};

/// Exponent vector over a universe.
///
/// The derived ordering compares total degree first and then the exponent
/// vectors lexicographically, which is graded-lex with the first universe
/// variable ranked highest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    degree: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { degree: 0, exps: [0; MAX_VARS] };

    pub fn var(v: Var, e: u16) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[v.index()] = e;
        m.degree = e as u32;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u32).sum();
        m
    }

    #[inline]
    pub fn exponent(&self, v: Var) -> u16 {
        self.exps[v.index()]
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn degree_in(&self, vars: VarSet) -> u32 {
        vars.iter().map(|v| self.exps[v.index()] as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> VarSet {
        (0..MAX_VARS).filter(|&i| self.exps[i] > 0).map(Var::new).collect()
    }

    pub fn with_exponent(mut self, v: Var, e: u16) -> Monomial {
        let old = self.exps[v.index()];
        self.exps[v.index()] = e;
        self.degree = self.degree - old as u32 + e as u32;
        self
    }

    /// Drops every exponent outside `vars`.
    pub fn restrict(&self, vars: VarSet) -> Monomial {
        let mut m = Monomial::ONE;
        for v in vars.iter() {
            m.exps[v.index()] = self.exps[v.index()];
        }
        m.degree = m.exps.iter().map(|&e| e as u32).sum();
        m
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        Monomial { degree: self.degree + other.degree, exps }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] - other.exps[i];
        }
        Some(Monomial { degree: self.degree - other.degree, exps })
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
        }
        Monomial { degree: exps.iter().map(|&e| e as u32).sum(), exps }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            let e = self.exps[i] as u32 * n;
            exps[i] = u16::try_from(e).expect("exponent overflow");
        }
        Monomial { degree: self.degree * n, exps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let t0 = Monomial::var(Var::T0, 1);
        let t1 = Monomial::var(Var::T1, 1);
        let t1sq = Monomial::var(Var::T1, 2);
        assert!(t0 > t1);
        assert!(t1sq > t0);
        assert!(t0.mul(&t1) < t1sq.mul(&t0));
        assert!(t0.mul(&t1) > t1sq);
        assert!(Monomial::ONE < t1);
    }

    #[test]
    fn divide_and_gcd() {
        let a = Monomial::from_exponents(&[2, 1, 0, 3]);
        let b = Monomial::from_exponents(&[1, 1, 0, 0]);
        assert_eq!(a.div(&b), Some(Monomial::from_exponents(&[1, 0, 0, 3])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.gcd(&Monomial::from_exponents(&[0, 4, 0, 1])), Monomial::from_exponents(&[0, 1, 0, 1]));
        assert_eq!(a.degree_in(VarSet::of(&[Var::T1, Var::D])), 4);
    }
}
