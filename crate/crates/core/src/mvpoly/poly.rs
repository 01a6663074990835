use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::universe::{same_universe, Var, VarSet, VariableUniverse};
use super::PolyError;

/// Sparse polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    universe: Arc<VariableUniverse>,
    terms: Vec<(Monomial, BigInt)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

/// Ring operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith(p: &MultiPoly, q: &MultiPoly, op: ArithOp) -> Result<MultiPoly, PolyError> {
    match op {
        ArithOp::Add => p.try_add(q),
        ArithOp::Sub => p.try_sub(q),
        ArithOp::Mul => p.try_mul(q),
    }
}

impl MultiPoly {
    pub fn zero(universe: &Arc<VariableUniverse>) -> MultiPoly {
        MultiPoly { universe: universe.clone(), terms: Vec::new() }
    }

    pub fn one(universe: &Arc<VariableUniverse>) -> MultiPoly {
        MultiPoly::constant(universe, BigInt::one())
    }

    pub fn constant(universe: &Arc<VariableUniverse>, c: impl Into<BigInt>) -> MultiPoly {
        MultiPoly::monomial(universe, Monomial::ONE, c)
    }

    pub fn var(universe: &Arc<VariableUniverse>, v: Var) -> MultiPoly {
        MultiPoly::monomial(universe, Monomial::var(v, 1), 1)
    }

    pub fn monomial(universe: &Arc<VariableUniverse>, m: Monomial, c: impl Into<BigInt>) -> MultiPoly {
        let c = c.into();
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MultiPoly { universe: universe.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(universe: &Arc<VariableUniverse>, terms: I) -> MultiPoly
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        MultiPoly::from_map(universe, acc)
    }

    fn from_map(universe: &Arc<VariableUniverse>, acc: FxHashMap<Monomial, BigInt>) -> MultiPoly {
        let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { universe: universe.clone(), terms }
    }


    pub fn universe(&self) -> &Arc<VariableUniverse> {
        &self.universe
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigInt)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant coefficient value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Coefficient of the exact monomial `m`.
    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    fn check_universe(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(PolyError::UniverseMismatch)
        }
    }

    // ----------------------------------------------------------------- degrees

    pub fn total_degree(&self) -> Result<u32, PolyError> {
        self.terms.first().map(|(m, _)| m.total_degree()).ok_or(PolyError::ZeroDegree)
    }

    /// Maximum over terms of the exponent sum restricted to `vars`.
    pub fn degree(&self, vars: VarSet) -> Result<u32, PolyError> {
        for v in vars.iter() {
            self.universe.check(v)?;
        }
        self.terms
            .iter()
            .map(|(m, _)| m.degree_in(vars))
            .max()
            .ok_or(PolyError::ZeroDegree)
    }

    /// Degree in a single variable; 0 for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v) as u32).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v) as u32).min().unwrap_or(0)
    }

    /// Variables that occur with positive exponent.
    pub fn vars(&self) -> VarSet {
        let mut bits = 0u16;
        for (m, _) in &self.terms {
            bits |= m.support().bits();
        }
        VarSet::from_bits(bits)
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    /// True when every term has the same degree in `vars` (the zero polynomial counts).
    pub fn is_homogeneous_in(&self, vars: VarSet) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree_in(vars));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    // -------------------------------------------------------------- arithmetic

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_universe(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_universe(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_universe(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((*m, if negate_other { -c } else { c.clone() }));
        }
        MultiPoly { universe: self.universe.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.universe);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc: FxHashMap<Monomial, BigInt> =
            FxHashMap::with_capacity_and_hasher(small.len() * large.len() / 2 + 1, Default::default());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(slot) => *slot += ca * cb,
                    None => {
                        acc.insert(m, ca * cb);
                    }
                }
            }
        }
        MultiPoly::from_map(&self.universe, acc)
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.universe);
        }
        let terms = self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect();
        MultiPoly { universe: self.universe.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        let terms = self.terms.iter().map(|(t, d)| (t.mul(m), d.clone())).collect();
        MultiPoly { universe: self.universe.clone(), terms }
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        self.mul_term(&Monomial::ONE, c)
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.universe);
        if n == 0 {
            return result;
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return MultiPoly::monomial(&self.universe, m.pow(n), num_traits::pow(c.clone(), n as usize));
        }
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    // ---------------------------------------------------------------- division

    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term (ONE for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else { return Monomial::ONE };
        let mut g = *first;
        for (m, _) in it {
            g = g.gcd(m);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`; fails unless all divisions are exact.
    pub fn div_integer(&self, c: &BigInt) -> Result<MultiPoly, PolyError> {
        if c.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if c.is_one() {
            return Ok(self.clone());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, d) in &self.terms {
            let (q, r) = d.div_rem(c);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            terms.push((*m, q));
        }
        Ok(MultiPoly { universe: self.universe.clone(), terms })
    }

    pub fn div_monomial(&self, m: &Monomial) -> Result<MultiPoly, PolyError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((t.div(m).ok_or(PolyError::InexactDivision)?, c.clone()));
        }
        Ok(MultiPoly { universe: self.universe.clone(), terms })
    }

    /// Exact division; `None` when `divisor` does not divide `self` over the integers.
    pub fn try_div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() || !same_universe(&self.universe, &divisor.universe) {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero(&self.universe));
        }
        if divisor.terms.len() == 1 {
            let (m, c) = &divisor.terms[0];
            let q = self.div_monomial(m).ok()?;
            return q.div_integer(c).ok();
        }
        // Cheap rejections: per-variable degrees and leading/trailing terms.
        let (lm, lc) = &divisor.terms[0];
        if !lm.divides(&self.terms[0].0) || !(&self.terms[0].1 % lc).is_zero() {
            return None;
        }
        let (tm, tc) = divisor.terms.last().unwrap();
        if !tm.divides(&self.terms.last().unwrap().0) || !(&self.terms.last().unwrap().1 % tc).is_zero() {
            return None;
        }
        for v in divisor.vars().iter() {
            if divisor.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }

        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        let tail = &divisor.terms[1..];
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lm)?;
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (dm, dc) in tail {
                let key = dm.mul(&qm);
                let prod = &qc * dc;
                match rem.get_mut(&key) {
                    Some(slot) => {
                        *slot -= prod;
                        if slot.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -prod);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Some(MultiPoly { universe: self.universe.clone(), terms: quotient })
    }

    /// Exact division that reports an error on a nonzero remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_universe(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        self.try_div_exact(divisor).ok_or(PolyError::InexactDivision)
    }

    // ------------------------------------------------------------ calculus etc

    pub fn partial_derivative(&self, v: Var) -> Result<MultiPoly, PolyError> {
        self.universe.check(v)?;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(v) > 0)
            .map(|(m, c)| {
                let e = m.exponent(v);
                (m.with_exponent(v, e - 1), c * BigInt::from(e))
            })
            .collect::<Vec<_>>();
        // Lowering one exponent keeps distinct monomials distinct but may reorder them.
        Ok(MultiPoly::from_terms(&self.universe, terms))
    }

    /// Homogenizes with respect to `v0` so that every term has total degree `target`.
    pub fn homogenize(&self, v0: Var, target: u32) -> Result<MultiPoly, PolyError> {
        self.universe.check(v0)?;
        if self.depends_on(v0) {
            return Err(PolyError::HomogenizingVariableOccurs(self.universe.name(v0).to_string()));
        }
        let actual = self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0);
        if actual > target {
            return Err(PolyError::DegreeTooSmall { target, actual });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = u16::try_from(target - m.total_degree()).map_err(|_| PolyError::ExponentOverflow)?;
                Ok((m.with_exponent(v0, e), c.clone()))
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(MultiPoly::from_terms(&self.universe, terms))
    }

    /// Exact substitution of rational values. Returns `(numerator, denominator)`
    /// with a positive denominator and the pair in lowest terms.
    pub fn substitute(&self, bindings: &[(Var, BigRational)]) -> Result<(MultiPoly, BigInt), PolyError> {
        for (v, _) in bindings {
            self.universe.check(*v)?;
        }
        if bindings.is_empty() || self.is_zero() {
            return Ok((self.clone(), BigInt::one()));
        }
        // Common denominator: prod den_v^{deg_v(self)}.
        let degs: Vec<u32> = bindings.iter().map(|(v, _)| self.degree_in(*v)).collect();
        let mut denom = BigInt::one();
        for ((_, r), &d) in bindings.iter().zip(&degs) {
            denom *= num_traits::pow(r.denom().clone(), d as usize);
        }
        // Power tables: num^e * den^(deg - e).
        let tables: Vec<Vec<BigInt>> = bindings
            .iter()
            .zip(&degs)
            .map(|((_, r), &d)| {
                (0..=d)
                    .map(|e| {
                        num_traits::pow(r.numer().clone(), e as usize)
                            * num_traits::pow(r.denom().clone(), (d - e) as usize)
                    })
                    .collect()
            })
            .collect();
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = *m;
            for (((v, _), table), _) in bindings.iter().zip(&tables).zip(&degs) {
                let e = m.exponent(*v);
                coeff *= &table[e as usize];
                mono = mono.with_exponent(*v, 0);
            }
            *acc.entry(mono).or_default() += coeff;
        }
        let num = MultiPoly::from_map(&self.universe, acc);
        Ok(reduce_fraction(num, denom))
    }

    /// Substitutes a polynomial for a variable (Horner in that variable).
    pub fn compose_var(&self, v: Var, value: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_universe(value)?;
        let coeffs = self.coefficients_in(v);
        let mut acc = MultiPoly::zero(&self.universe);
        for c in coeffs.iter().rev() {
            acc = acc.mul_unchecked(value).merge(c, false);
        }
        Ok(acc)
    }

    // ------------------------------------------------------- coefficient views

    /// Coefficients in `v`, indexed by exponent; the coefficients are free of `v`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exponent(v) as usize].push((m.with_exponent(v, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                // Zeroing one exponent can reorder terms, never merges them.
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MultiPoly { universe: self.universe.clone(), terms: t }
            })
            .collect()
    }

    /// Inverse of [`MultiPoly::coefficients_in`].
    pub fn from_coefficients(universe: &Arc<VariableUniverse>, v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            let m = Monomial::var(v, e as u16);
            for (t, k) in &c.terms {
                debug_assert_eq!(t.exponent(v), 0);
                terms.push((t.mul(&m), k.clone()));
            }
        }
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { universe: universe.clone(), terms }
    }

    /// Leading coefficient with respect to `v` (a polynomial free of `v`).
    pub fn leading_coefficient_in(&self, v: Var) -> MultiPoly {
        let d = self.degree_in(v) as u16;
        let mut t: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(v) == d)
            .map(|(m, c)| (m.with_exponent(v, 0), c.clone()))
            .collect();
        t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { universe: self.universe.clone(), terms: t }
    }

    /// Groups terms by their exponents in `vars`; each coefficient is free of `vars`.
    /// The groups are returned in descending graded-lex order of the key.
    pub fn coefficients_wrt(&self, vars: VarSet) -> Vec<(Monomial, MultiPoly)> {
        let rest = self.universe.all().difference(vars);
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups.entry(m.restrict(vars)).or_default().push((m.restrict(rest), c.clone()));
        }
        groups
            .into_iter()
            .rev()
            .map(|(k, mut t)| {
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                (k, MultiPoly { universe: self.universe.clone(), terms: t })
            })
            .collect()
    }

    /// Flips the sign if needed so the graded-lex leading coefficient is positive.
    pub fn normalize_sign(self) -> MultiPoly {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self,
        }
    }

    pub fn has_positive_leading_coefficient(&self) -> bool {
        self.terms.first().map_or(true, |(_, c)| c.is_positive())
    }
}

/// Cancels the common integer factor between a polynomial and a denominator.
pub(crate) fn reduce_fraction(num: MultiPoly, den: BigInt) -> (MultiPoly, BigInt) {
    if num.is_zero() {
        return (num, BigInt::one());
    }
    let mut g = num.integer_content().gcd(&den);
    if den.is_negative() {
        g = -g;
    }
    let num = num.div_integer(&g).expect("content divides every coefficient");
    (num, den / g)
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics when the operands belong to different universes.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).expect("polynomials from different universes")
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
