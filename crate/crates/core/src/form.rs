//! Differential forms on ℝ^m and on the cylinder [0,1] × ℝ^m.
//!
//! A form is a finite sum `f_I dx_I` over strictly increasing generator sets
//! `I`. Generator 0 is `dt` (only on cylinder forms) and generator `i >= 1` is
//! `dx_i`, so `dt` always sorts first and `∫_{[0,1]} dt ∧ β = ∫₀¹ β dt`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::coeff::{Gauss, Rational};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, Var, MAX_DIM};

/// A set of generators, bit 0 for `dt` and bit `i` for `dx_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Basis(u16);

impl Basis {
    pub const EMPTY: Basis = Basis(0);
    pub const DT: Basis = Basis(1);

    pub fn dx(i: usize) -> Basis {
        assert!((1..=MAX_DIM).contains(&i), "dx{i} out of range");
        Basis(1 << i)
    }

    pub fn from_indices(idx: &[usize]) -> Basis {
        Basis(idx.iter().fold(0u16, |m, &i| m | (1 << i)))
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn has_dt(self) -> bool {
        self.0 & 1 != 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn max_index(self) -> usize {
        if self.0 == 0 {
            0
        } else {
            15 - self.0.leading_zeros() as usize
        }
    }

    /// Generator indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..16usize).filter(move |&i| bits & (1 << i) != 0)
    }

    fn without(self, i: usize) -> Basis {
        Basis(self.0 & !(1 << i))
    }

    /// `e_self ∧ e_other = sign · e_union`, or `None` when they share a generator.
    pub fn wedge(self, other: Basis) -> Option<(Basis, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0u32;
        for j in other.indices() {
            swaps += (self.0 >> (j + 1)).count_ones();
        }
        Some((Basis(self.0 | other.0), swaps % 2 == 1))
    }

    /// Number of generators of `self` with index below `i`.
    fn count_below(self, i: usize) -> u32 {
        (self.0 & ((1u16 << i) - 1)).count_ones()
    }
}

/// Degree first, then lexicographic on the increasing index sequence.
impl Ord for Basis {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Basis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.indices() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if i == 0 {
                write!(f, "dt")?;
            } else {
                write!(f, "dx{i}")?;
            }
        }
        Ok(())
    }
}

/// A differential form with polynomial coefficients.
///
/// Equality compares the ambient dimension and the terms; the cylinder flag
/// only controls whether `t` is an active coordinate.
#[derive(Clone, Debug)]
pub struct Form {
    dim: usize,
    cylinder: bool,
    terms: BTreeMap<Basis, Scalar>,
}

impl PartialEq for Form {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.terms == other.terms
    }
}

impl Eq for Form {}

fn check_dim(dim: usize) {
    assert!((1..=MAX_DIM).contains(&dim), "{}", Error::DimensionOutOfRange(dim));
}

impl Form {
    pub fn zero(dim: usize) -> Self {
        check_dim(dim);
        Form { dim, cylinder: false, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::function(dim, Scalar::one())
    }

    pub fn function(dim: usize, f: Scalar) -> Self {
        Self::term(dim, Basis::EMPTY, f)
    }

    pub fn constant(dim: usize, c: Gauss) -> Self {
        Self::function(dim, Scalar::constant(c))
    }

    pub fn int(dim: usize, n: i64) -> Self {
        Self::function(dim, Scalar::int(n))
    }

    /// `f · e_basis`; a basis containing `dt` makes a cylinder form.
    pub fn term(dim: usize, basis: Basis, f: Scalar) -> Self {
        let mut out = Form::zero(dim);
        assert!(basis.max_index() <= dim, "generator outside dimension {dim}");
        out.cylinder = basis.has_dt() || f.mentions(Var::T);
        out.add_term(basis, &f);
        out
    }

    pub fn dx(dim: usize, i: usize) -> Self {
        Self::term(dim, Basis::dx(i), Scalar::one())
    }

    pub fn dt(dim: usize) -> Self {
        Self::term(dim, Basis::DT, Scalar::one())
    }

    /// The coordinate function `x_i` as a 0-form.
    pub fn x(dim: usize, i: usize) -> Self {
        Self::function(dim, Scalar::x(i))
    }

    pub fn from_terms(dim: usize, cylinder: bool, it: impl IntoIterator<Item = (Basis, Scalar)>) -> Self {
        let mut out = Form::zero(dim);
        out.cylinder = cylinder;
        for (b, s) in it {
            if b.has_dt() {
                out.cylinder = true;
            }
            out.add_term(b, &s);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_cylinder(&self) -> bool {
        self.cylinder
    }

    /// Same form regarded on the cylinder [0,1] × ℝ^m.
    pub fn on_cylinder(mut self) -> Self {
        self.cylinder = true;
        self
    }

    /// Drops the cylinder flag of a form that no longer involves `t` or `dt`.
    pub fn off_cylinder(mut self) -> Self {
        if !self.has_dt() && !self.terms.values().any(|s| s.mentions(Var::T)) {
            self.cylinder = false;
        }
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: Basis) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_default()
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

    pub fn add_term(&mut self, b: Basis, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        if b.has_dt() || s.mentions(Var::T) {
            self.cylinder = true;
        }
        match self.terms.get_mut(&b) {
            Some(slot) => {
                *slot += s;
                if slot.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, s.clone());
            }
        }
    }

    fn same_space(&self, other: &Form) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    /// Highest degree carried by a term, `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|b| b.degree()).max()
    }

    /// Degree when the form is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|b| b.degree());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn part(&self, degree: usize) -> Form {
        self.filter(|b| b.degree() == degree)
    }

    pub fn filter(&self, keep: impl Fn(Basis) -> bool) -> Form {
        Form {
            dim: self.dim,
            cylinder: self.cylinder,
            terms: self.terms.iter().filter(|(b, _)| keep(**b)).map(|(b, s)| (*b, s.clone())).collect(),
        }
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|b| b.degree() % 2 == 1)
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.degree() % 2 == 0)
    }

    pub fn has_dt(&self) -> bool {
        self.terms.keys().any(|b| b.has_dt())
    }

    /// Coefficient of the degree-0 part.
    pub fn constant_part(&self) -> Scalar {
        self.coefficient(Basis::EMPTY)
    }

    pub fn positive_part(&self) -> Form {
        self.filter(|b| b.degree() > 0)
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> Form {
        let mut out = Form { dim: self.dim, cylinder: self.cylinder, terms: BTreeMap::new() };
        for (b, s) in &self.terms {
            out.add_term(*b, &f(s));
        }
        out
    }

    pub fn scale(&self, c: &Gauss) -> Form {
        self.map_coefficients(|s| s.scale(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Form {
        self.map_coefficients(|s| s.scale_rational(r))
    }

    pub fn scale_scalar(&self, f: &Scalar) -> Form {
        self.map_coefficients(|s| s * f)
    }

    /// Complex conjugation of every coefficient; τ, t and the x_i are real.
    pub fn conj(&self) -> Form {
        self.map_coefficients(Scalar::conj)
    }

    pub fn try_add(&self, other: &Form) -> Result<Form> {
        self.same_space(other)?;
        let mut out = self.clone();
        out.cylinder |= other.cylinder;
        for (b, s) in &other.terms {
            out.add_term(*b, s);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Form) -> Result<Form> {
        self.try_add(&-other)
    }

    /// Exterior product; a cylinder factor makes a cylinder result.
    pub fn wedge(&self, other: &Form) -> Result<Form> {
        self.same_space(other)?;
        let mut acc: BTreeMap<Basis, Scalar> = BTreeMap::new();
        for (ba, sa) in &self.terms {
            for (bb, sb) in &other.terms {
                let Some((b, negative)) = ba.wedge(*bb) else { continue };
                let prod = sa * sb;
                let slot = acc.entry(b).or_default();
                if negative {
                    *slot -= &prod;
                } else {
                    *slot += &prod;
                }
            }
        }
        acc.retain(|_, s| !s.is_zero());
        Ok(Form { dim: self.dim, cylinder: self.cylinder || other.cylinder, terms: acc })
    }

    /// Active coordinates: `x_1..x_m`, plus `t` (generator 0) on the cylinder.
    fn coordinates(&self) -> impl Iterator<Item = (usize, Var)> {
        let start = if self.cylinder { 0 } else { 1 };
        (start..=self.dim).map(|i| (i, if i == 0 { Var::T } else { Var::X(i) }))
    }

    /// Exterior derivative.
    pub fn d(&self) -> Form {
        let mut out = Form { dim: self.dim, cylinder: self.cylinder, terms: BTreeMap::new() };
        for (b, s) in &self.terms {
            for (i, v) in self.coordinates() {
                if b.contains(i) {
                    continue;
                }
                let ds = s.partial(v);
                if ds.is_zero() {
                    continue;
                }
                let nb = Basis(b.0 | (1 << i));
                if b.count_below(i) % 2 == 1 {
                    out.add_term(nb, &-&ds);
                } else {
                    out.add_term(nb, &ds);
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.d().is_zero()
    }

    /// Integration along the fiber of [0,1] × ℝ^m → ℝ^m.
    pub fn fiber_integrate_t(&self) -> Result<Form> {
        if !self.cylinder {
            return Err(Error::NotCylinder);
        }
        let mut out = Form::zero(self.dim);
        for (b, s) in &self.terms {
            if b.has_dt() {
                out.add_term(b.without(0), &s.integrate_t_unit());
            }
        }
        Ok(out)
    }

    /// Restriction to the slice `{t = value}`: dt-terms dropped, `t` substituted.
    pub fn restrict_t(&self, value: &Rational) -> Form {
        let mut out = Form::zero(self.dim);
        for (b, s) in &self.terms {
            if !b.has_dt() {
                out.add_term(*b, &s.substitute(Var::T, value));
            }
        }
        out
    }

    /// Primitive of a closed form with no degree-0 part, via the radial
    /// homotopy operator `k(ω) = ∫₀¹ s^{p-1} (ι_E ω)(s·x) ds`.
    pub fn poincare_primitive(&self) -> Result<Form> {
        if !self.constant_part().is_zero() {
            return Err(Error::HasDegreeZero);
        }
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        Ok(self.homotopy_operator())
    }

    /// The homotopy operator `k` with `dk + kd = id` on positive degrees.
    pub fn homotopy_operator(&self) -> Form {
        let mut out = Form { dim: self.dim, cylinder: self.cylinder, terms: BTreeMap::new() };
        let with_t = self.cylinder;
        for (b, s) in &self.terms {
            let p = b.degree();
            if p == 0 {
                continue;
            }
            // ∫₀¹ s^{p-1+q} ds = 1/(p+q) for a monomial of coordinate degree q
            let mut radial = Scalar::zero();
            for (m, c) in s.terms() {
                let q = m.coordinate_degree(self.dim, with_t) as i64;
                radial.add_term(*m, &c.scale(&Rational::new(1.into(), (p as i64 + q).into())));
            }
            for (r, i) in b.indices().enumerate() {
                let coord = if i == 0 { Scalar::t() } else { Scalar::x(i) };
                let piece = &radial * &coord;
                if r % 2 == 1 {
                    out.add_term(b.without(i), &-&piece);
                } else {
                    out.add_term(b.without(i), &piece);
                }
            }
        }
        out
    }

    /// `Σ_{k>=0} c_k x^k` for `x` without degree-0 part (so the sum is finite).
    pub fn power_series(&self, coef: impl Fn(usize) -> Rational) -> Result<Form> {
        if !self.constant_part().is_zero() {
            return Err(Error::HasDegreeZero);
        }
        let mut out = Form::zero(self.dim);
        out.cylinder = self.cylinder;
        let mut power = Form::one(self.dim);
        let mut k = 0;
        while !power.is_zero() {
            let c = coef(k);
            out += &power.scale_rational(&c);
            power = &power * self;
            k += 1;
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> Form {
        let mut out = Form::one(self.dim);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Highest coordinate index used by generators or coefficients.
    pub fn max_coordinate(&self) -> usize {
        self.terms
            .iter()
            .map(|(b, s)| b.max_index().max(s.max_coordinate()))
            .max()
            .unwrap_or(0)
    }
}

/// Equality in Λ = Ω^odd / dΩ^even: on ℝ^m a difference is exact iff it is closed.
pub fn lambda_equal(a: &Form, b: &Form) -> bool {
    (a - b).is_closed()
}

impl AddAssign<&Form> for Form {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, o: &Form) {
        self.same_space(o).expect("adding forms");
        self.cylinder |= o.cylinder;
        for (b, s) in &o.terms {
            self.add_term(*b, s);
        }
    }
}

impl SubAssign<&Form> for Form {
    fn sub_assign(&mut self, o: &Form) {
        self.same_space(o).expect("subtracting forms");
        self.cylinder |= o.cylinder;
        for (b, s) in &o.terms {
            self.add_term(*b, &-s);
        }
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, o: &Form) -> Form {
        self.try_add(o).expect("adding forms")
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, o: &Form) -> Form {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl Add for Form {
    type Output = Form;
    fn add(mut self, o: Form) -> Form {
        self += &o;
        self
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(mut self, o: Form) -> Form {
        self -= &o;
        self
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form {
            dim: self.dim,
            cylinder: self.cylinder,
            terms: self.terms.iter().map(|(b, s)| (*b, -s)).collect(),
        }
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

/// Wedge product. Panics on mismatched dimensions; see [`Form::wedge`].
impl Mul for &Form {
    type Output = Form;
    fn mul(self, o: &Form) -> Form {
        self.wedge(o).expect("wedge of forms")
    }
}

impl Mul for Form {
    type Output = Form;
    fn mul(self, o: Form) -> Form {
        &self * &o
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::render_form(self))
    }
}
