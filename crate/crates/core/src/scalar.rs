//! Polynomial scalars in ℚ(i)[τ, x₁..x₈, t, b] with b² = 0.
//!
//! `τ` is a formal real constant standing for 1/(2π). `b` is a nilpotent
//! parameter used only for first-order polarization; it never appears unless
//! explicitly introduced with [`Var::B`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::coeff::{rat_int, Gauss, Rational};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 8;

const NVARS: usize = MAX_DIM + 3;
const TAU_SLOT: usize = 0;
const T_SLOT: usize = MAX_DIM + 1;
const B_SLOT: usize = MAX_DIM + 2;

/// A polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Tau,
    /// Coordinate `x_i`, `1 <= i <= MAX_DIM`.
    X(usize),
    T,
    B,
}

impl Var {
    pub(crate) fn slot(self) -> usize {
        match self {
            Var::Tau => TAU_SLOT,
            Var::X(i) => {
                assert!((1..=MAX_DIM).contains(&i), "coordinate index x{i} out of range");
                i
            }
            Var::T => T_SLOT,
            Var::B => B_SLOT,
        }
    }

    fn from_slot(slot: usize) -> Var {
        match slot {
            TAU_SLOT => Var::Tau,
            T_SLOT => Var::T,
            B_SLOT => Var::B,
            i => Var::X(i),
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::Tau => "tau".into(),
            Var::X(i) => format!("x{i}"),
            Var::T => "t".into(),
            Var::B => "b".into(),
        }
    }
}

/// Exponent vector over all variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        Self::one().with_exp(v, 1)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.slot()]
    }

    pub fn with_exp(mut self, v: Var, e: u16) -> Self {
        self.0[v.slot()] = e;
        self
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product, or `None` when the nilpotent `b` appears squared.
    pub fn mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0u16; NVARS];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = self.0[k]
                .checked_add(other.0[k])
                .expect("monomial exponent overflow");
        }
        if out[B_SLOT] > 1 {
            return None;
        }
        Some(Monomial(out))
    }

    /// Total degree in the coordinates `x_1..x_dim`, plus `t` when `with_t`.
    pub fn coordinate_degree(&self, dim: usize, with_t: bool) -> u32 {
        let xs: u32 = self.0[1..=dim].iter().map(|&e| e as u32).sum();
        xs + if with_t { self.0[T_SLOT] as u32 } else { 0 }
    }

    /// Largest coordinate index carrying a nonzero exponent.
    pub fn max_coordinate(&self) -> usize {
        (1..=MAX_DIM).rev().find(|&i| self.0[i] > 0).unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| (Var::from_slot(k), e))
    }
}

/// Graded order: total degree first, then τ before x₁ before x₂ … before t, b.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with Gaussian-rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, Gauss>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Gauss::one())
    }

    pub fn constant(c: Gauss) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Gauss::int(n))
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(Gauss::real(r))
    }

    pub fn i() -> Self {
        Self::constant(Gauss::i())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Gauss::one())
    }

    pub fn tau() -> Self {
        Self::var(Var::Tau)
    }

    pub fn x(i: usize) -> Self {
        Self::var(Var::X(i))
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    pub fn term(m: Monomial, c: Gauss) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Gauss)>) -> Self {
        let mut s = Scalar::zero();
        for (m, c) in it {
            s.add_term(m, &c);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Gauss)> {
        self.terms.iter()
    }

    /// Coefficient of the monomial 1.
    pub fn constant_term(&self) -> Gauss {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_default()
    }

    /// The value when the polynomial is a constant (possibly zero).
    pub fn as_constant(&self) -> Option<Gauss> {
        match self.terms.len() {
            0 => Some(Gauss::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Gauss::is_real)
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn max_coordinate(&self) -> usize {
        self.terms.keys().map(Monomial::max_coordinate).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Gauss) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn conj(&self) -> Self {
        Scalar { terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect() }
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, a)| (*m, a.scale(r))).collect() }
    }

    /// Partial derivative with respect to `v`.
    pub fn partial(&self, v: Var) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            out.insert(m.with_exp(v, e - 1), c.scale(&rat_int(e as i64)));
        }
        Scalar { terms: out }
    }

    /// ∫₀¹ · dt, removing `t`.
    pub fn integrate_t_unit(&self) -> Self {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let e = m.exp(Var::T);
            out.add_term(m.with_exp(Var::T, 0), &c.scale(&Rational::new(1.into(), (e as i64 + 1).into())));
        }
        out
    }

    /// Substitutes the rational value `r` for `v`.
    pub fn substitute(&self, v: Var, r: &Rational) -> Self {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut factor = Rational::from_integer(1.into());
            for _ in 0..e {
                factor *= r;
            }
            out.add_term(m.with_exp(v, 0), &c.scale(&factor));
        }
        out
    }

    /// Replaces `v` by the polynomial `p`.
    pub fn compose(&self, v: Var, p: &Scalar) -> Self {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut piece = Scalar::term(m.with_exp(v, 0), c.clone());
            for _ in 0..m.exp(v) {
                piece = &piece * p;
            }
            out += &piece;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Scalar::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl From<Gauss> for Scalar {
    fn from(c: Gauss) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        for (m, c) in &o.terms {
            self.add_term(*m, c);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        for (m, c) in &o.terms {
            self.add_term(*m, &-c);
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        let mut acc: BTreeMap<Monomial, Gauss> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let Some(m) = ma.mul(mb) else { continue };
                acc.entry(m).or_default().add_mul(ca, cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Scalar { terms: acc }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            crate::render::write_signed_term(f, c, &m.to_string(), m.is_one(), first)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    #[test]
    fn nilpotent_b_squares_to_zero() {
        let b = Scalar::var(Var::B);
        assert!((&b * &b).is_zero());
        assert!(!(&b * &Scalar::x(1)).is_zero());
    }

    #[test]
    fn partial_and_integrate() {
        // d/dx1 (x1^2 x2) = 2 x1 x2
        let p = &(&Scalar::x(1) * &Scalar::x(1)) * &Scalar::x(2);
        assert_eq!(p.partial(Var::X(1)), &Scalar::int(2) * &(&Scalar::x(1) * &Scalar::x(2)));
        // ∫₀¹ t² dt = 1/3
        let t2 = Scalar::t().pow(2);
        assert_eq!(t2.integrate_t_unit(), Scalar::rational(rat(1, 3)));
    }

    #[test]
    fn constant_detection() {
        assert_eq!(Scalar::zero().as_constant(), Some(Gauss::zero()));
        assert_eq!(Scalar::int(3).as_constant(), Some(Gauss::int(3)));
        assert_eq!(Scalar::tau().as_constant(), None);
    }

    #[test]
    fn substitute_t() {
        let p = &Scalar::one() - &Scalar::t();
        assert!(p.substitute(Var::T, &rat(1, 1)).is_zero());
        assert!(p.substitute(Var::T, &rat(0, 1)).is_one());
    }

    #[test]
    fn monomial_order_is_graded() {
        let one = Monomial::one();
        let tau = Monomial::var(Var::Tau);
        let x1 = Monomial::var(Var::X(1));
        let x2 = Monomial::var(Var::X(2));
        let x1sq = x1.mul(&x1).unwrap();
        assert!(one < tau && tau < x1 && x1 < x2 && x2 < x1sq);
    }
}
