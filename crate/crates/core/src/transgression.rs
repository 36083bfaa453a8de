//! Chern–Simons transgression forms via connections on the cylinder
//! `[0,1] × ℝ^m` and integration along `[0,1]`.

use crate::cap::{omega_plus_inverse, OmegaPlusForm};
use crate::chern_weil::{eval_poly, gauge_transform, Connection, Gauge, InvPoly};
use crate::coeff::{rat_int, Rational};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::lambda::LambdaRep;
use crate::matrix::FormMatrix;
use crate::scalar::Scalar;

/// A connection on the cylinder, polynomial in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionPath {
    a: FormMatrix,
}

impl ConnectionPath {
    /// Wraps a matrix of 1-forms on the cylinder.
    pub fn new(a: FormMatrix) -> Result<Self> {
        Connection::new(a.clone())?;
        Ok(ConnectionPath { a: a.on_cylinder() })
    }

    pub fn matrix(&self) -> &FormMatrix {
        &self.a
    }

    pub fn rank(&self) -> usize {
        self.a.rank()
    }

    /// The connection on the slice `{t = value}`.
    pub fn at(&self, value: &Rational) -> Connection {
        let m = self.a.map(|e| e.restrict_t(value));
        Connection::new(m).expect("restriction of 1-forms")
    }

    pub fn start(&self) -> Connection {
        self.at(&rat_int(0))
    }

    pub fn end(&self) -> Connection {
        self.at(&rat_int(1))
    }

    pub fn curvature(&self) -> FormMatrix {
        &self.a.d() + &(&self.a * &self.a)
    }
}

fn check_ranks(c0: &Connection, c1: &Connection) -> Result<()> {
    if c0.rank() != c1.rank() {
        return Err(Error::RankMismatch(c0.rank(), c1.rank()));
    }
    if c0.dim() != c1.dim() {
        return Err(Error::DimensionMismatch(c0.dim(), c1.dim()));
    }
    Ok(())
}

/// `(1−t)A₀ + tA₁`.
pub fn affine_path(c0: &Connection, c1: &Connection) -> Result<ConnectionPath> {
    check_ranks(c0, c1)?;
    let t = Scalar::t();
    let s = &Scalar::one() - &t;
    let a = &c0.matrix().scale_scalar(&s) + &c1.matrix().scale_scalar(&t);
    Ok(ConnectionPath { a: a.on_cylinder() })
}

/// `(1−t)A₀ + tA₁ + t(1−t)B` for a matrix `B` of 1-forms.
pub fn quadratic_path(c0: &Connection, c1: &Connection, bend: &FormMatrix) -> Result<ConnectionPath> {
    let base = affine_path(c0, c1)?;
    if bend.rank() != c0.rank() {
        return Err(Error::RankMismatch(c0.rank(), bend.rank()));
    }
    let t = Scalar::t();
    let w = &t * &(&Scalar::one() - &t);
    ConnectionPath::new(&base.a + &bend.scale_scalar(&w))
}

fn resolve_path(c0: &Connection, c1: &Connection, path: Option<&ConnectionPath>) -> Result<ConnectionPath> {
    check_ranks(c0, c1)?;
    match path {
        None => affine_path(c0, c1),
        Some(p) => {
            if p.rank() != c0.rank() || &p.start() != c0 || &p.end() != c1 {
                return Err(Error::EndpointMismatch);
            }
            Ok(p.clone())
        }
    }
}

/// `P̃(∇₀,∇₁) = ∫_{[0,1]} P(F̃)`, so that `dP̃ = P(F₁) − P(F₀)`.
pub fn cs_additive(p: &InvPoly, c0: &Connection, c1: &Connection, path: Option<&ConnectionPath>) -> Result<LambdaRep> {
    let path = resolve_path(c0, c1, path)?;
    let value = eval_poly(p, &path.curvature())?.on_cylinder();
    LambdaRep::new(value.fiber_integrate_t()?)
}

/// `P̂(∇₀,∇₁) = P̃(∇₀,∇₁) ∧ P(F₀)⁻¹` for a polynomial with constant term 1.
pub fn cs_hat(p: &InvPoly, c0: &Connection, c1: &Connection, path: Option<&ConnectionPath>) -> Result<LambdaRep> {
    if !p.is_multiplicative() {
        return Err(Error::NotInvertible(p.to_string()));
    }
    let tilde = cs_additive(p, c0, c1, path)?;
    let p0 = OmegaPlusForm::new(eval_poly(p, &c0.curvature())?)?;
    LambdaRep::new(tilde.form() * omega_plus_inverse(&p0).form())
}

/// Multiplicative transgression `ĉ_tot(∇₀,∇₁)` with `1 + dĉ = c_tot(F₁) ∧ c_tot(F₀)⁻¹`.
pub fn cs_multiplicative(c0: &Connection, c1: &Connection, path: Option<&ConnectionPath>) -> Result<LambdaRep> {
    cs_hat(&InvPoly::TotalChern, c0, c1, path)
}

/// A primitive η with `dη = ĉ_tot(∇, g*∇)`.
pub fn gauge_exactness_witness(c: &Connection, g: &Gauge) -> Result<Form> {
    let moved = gauge_transform(g, c)?;
    cs_multiplicative(c, &moved, None)?.form().poincare_primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cap::cap_add;
    use crate::chern_weil::{c_tot, ch};
    use crate::coeff::{rat, Gauss};
    use crate::form::Basis;

    const M: usize = 4;

    fn one_form(c: usize, g: usize) -> Form {
        Form::term(M, Basis::dx(g), Scalar::x(c))
    }

    fn conn(rows: Vec<Vec<Form>>) -> Connection {
        Connection::new(FormMatrix::from_rows(M, rows).unwrap()).unwrap()
    }

    fn c_a() -> Connection {
        conn(vec![
            vec![one_form(1, 2), Form::dx(M, 3)],
            vec![one_form(4, 1).scale(&Gauss::i()), one_form(2, 4)],
        ])
    }

    fn c_b() -> Connection {
        conn(vec![vec![one_form(3, 4), Form::zero(M)], vec![one_form(1, 3), Form::dx(M, 2)]])
    }

    fn shear() -> Gauge {
        Gauge::new(
            FormMatrix::from_rows(M, vec![vec![Form::one(M), Form::x(M, 1)], vec![Form::zero(M), Form::one(M)]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn affine_path_endpoints() {
        let (a, b) = (c_a(), c_b());
        let p = affine_path(&a, &b).unwrap();
        assert_eq!(p.start(), a);
        assert_eq!(p.end(), b);
        let mid = p.at(&rat(1, 2));
        assert_eq!(mid.matrix(), &(a.matrix() + b.matrix()).scale_rational(&rat(1, 2)));
        let same = affine_path(&a, &a).unwrap();
        assert!(same.matrix().entries().iter().all(|e| !e.has_dt() && e.terms().all(|(_, s)| !s.mentions(crate::scalar::Var::T))));
    }

    #[test]
    fn additive_examples() {
        let a = c_a();
        assert!(cs_additive(&InvPoly::ChernChar, &a, &a, None).unwrap().is_zero());
        let zero = Connection::trivial(1, M);
        let c1 = conn(vec![vec![one_form(1, 2)]]);
        let cs = cs_additive(&InvPoly::ChernChar, &zero, &c1, None).unwrap();
        let expected = one_form(1, 2).scale(&Gauss::i()).scale_scalar(&Scalar::tau());
        assert_eq!(cs.into_form(), expected);
        let b = c_b();
        let cs = cs_additive(&InvPoly::TotalChern, &a, &b, None).unwrap();
        assert_eq!(cs.d(), c_tot(&b).form() - c_tot(&a).form());
        let cs = cs_additive(&InvPoly::ChernChar, &a, &b, None).unwrap();
        assert_eq!(cs.d(), &ch(&b) - &ch(&a));
    }

    #[test]
    fn multiplicative_examples() {
        let (a, b) = (c_a(), c_b());
        assert!(cs_multiplicative(&a, &a, None).unwrap().is_zero());
        let hat = cs_multiplicative(&a, &b, None).unwrap();
        let expected = c_tot(&b).mul(&omega_plus_inverse(&c_tot(&a)));
        assert_eq!(&Form::one(M) + &hat.d(), expected.into_form());
        let c = gauge_transform(&shear(), &b).unwrap();
        let lhs = cs_multiplicative(&a, &c, None).unwrap();
        let rhs = cap_add(&cs_multiplicative(&b, &c, None).unwrap(), &cs_multiplicative(&a, &b, None).unwrap());
        assert!(lhs.lambda_eq(&rhs));
    }

    #[test]
    fn endpoint_mismatch() {
        let p = affine_path(&c_a(), &c_b()).unwrap();
        assert_eq!(cs_additive(&InvPoly::ChernChar, &c_b(), &c_a(), Some(&p)), Err(Error::EndpointMismatch));
    }

    #[test]
    fn gauge_witness() {
        let id = Gauge::identity(2, M);
        let eta = gauge_exactness_witness(&c_a(), &id).unwrap();
        assert!(eta.d().is_zero());
        let zero = Connection::trivial(2, M);
        let eta = gauge_exactness_witness(&zero, &shear()).unwrap();
        let moved = gauge_transform(&shear(), &zero).unwrap();
        assert_eq!(&eta.d(), cs_multiplicative(&zero, &moved, None).unwrap().form());
        let eta = gauge_exactness_witness(&c_a(), &shear()).unwrap();
        let moved = gauge_transform(&shear(), &c_a()).unwrap();
        assert_eq!(&eta.d(), cs_multiplicative(&c_a(), &moved, None).unwrap().form());
    }
}
