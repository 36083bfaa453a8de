//! Odd forms as representatives of classes in Λ = Ω^odd / dΩ^even.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::coeff::{Gauss, Rational};
use crate::error::{Error, Result};
use crate::form::{lambda_equal, Form};

/// An odd-degree, dt-free form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaRep(Form);

impl LambdaRep {
    pub fn new(form: Form) -> Result<Self> {
        if !form.is_odd() {
            return Err(Error::EvenDegree);
        }
        if form.has_dt() {
            return Err(Error::HasDt);
        }
        Ok(LambdaRep(form.off_cylinder()))
    }

    /// Wraps a form already known to be odd and dt-free.
    pub(crate) fn from_odd(form: Form) -> Self {
        debug_assert!(form.is_odd() && !form.has_dt());
        LambdaRep(form.off_cylinder())
    }

    pub fn zero(dim: usize) -> Self {
        LambdaRep(Form::zero(dim))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn form(&self) -> &Form {
        &self.0
    }

    pub fn into_form(self) -> Form {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn d(&self) -> Form {
        self.0.d()
    }

    pub fn is_closed(&self) -> bool {
        self.0.is_closed()
    }

    pub fn conj(&self) -> Self {
        LambdaRep(self.0.conj())
    }

    pub fn is_real(&self) -> bool {
        self.0.is_real()
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        LambdaRep(self.0.scale(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        LambdaRep(self.0.scale_rational(r))
    }

    pub fn part(&self, degree: usize) -> Form {
        self.0.part(degree)
    }

    /// Equality of the classes in Λ.
    pub fn lambda_eq(&self, other: &LambdaRep) -> bool {
        lambda_equal(&self.0, &other.0)
    }
}

impl TryFrom<Form> for LambdaRep {
    type Error = Error;
    fn try_from(f: Form) -> Result<Self> {
        LambdaRep::new(f)
    }
}

impl Add for &LambdaRep {
    type Output = LambdaRep;
    fn add(self, o: &LambdaRep) -> LambdaRep {
        LambdaRep(&self.0 + &o.0)
    }
}

impl Sub for &LambdaRep {
    type Output = LambdaRep;
    fn sub(self, o: &LambdaRep) -> LambdaRep {
        LambdaRep(&self.0 - &o.0)
    }
}

impl Neg for &LambdaRep {
    type Output = LambdaRep;
    fn neg(self) -> LambdaRep {
        LambdaRep(-&self.0)
    }
}

impl fmt::Display for LambdaRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
