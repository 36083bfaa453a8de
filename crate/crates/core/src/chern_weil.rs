//! Connections on trivial bundles over ℝ^m, curvature, gauge action,
//! hermitian adjoints, and Chern–Weil forms of invariant polynomials.
//!
//! The normalization `i/2π` is the scalar `i·τ`.

use std::fmt;
use std::str::FromStr;

use crate::cap::{omega_plus_inverse, OmegaPlusForm};
use crate::coeff::{rat, Gauss};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::matrix::FormMatrix;
use crate::scalar::Scalar;

/// `∇ = d + A` with `A` an `n × n` matrix of 1-forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    a: FormMatrix,
}

impl Connection {
    pub fn new(a: FormMatrix) -> Result<Self> {
        for i in 0..a.rank() {
            for j in 0..a.rank() {
                let e = a.get(i, j);
                if !e.is_zero() && e.homogeneous_degree() != Some(1) {
                    return Err(Error::NotOneForm(i, j));
                }
            }
        }
        Ok(Connection { a })
    }

    pub fn trivial(n: usize, dim: usize) -> Self {
        Connection { a: FormMatrix::zero(n, dim) }
    }

    pub fn matrix(&self) -> &FormMatrix {
        &self.a
    }

    pub fn rank(&self) -> usize {
        self.a.rank()
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.a.is_zero()
    }

    pub fn curvature(&self) -> FormMatrix {
        curvature(self)
    }
}

impl fmt::Display for Connection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.a.fmt(f)
    }
}

/// `F = dA + A∧A`.
pub fn curvature(c: &Connection) -> FormMatrix {
    &c.a.d() + &(&c.a * &c.a)
}

/// Block-diagonal connection on the direct sum.
pub fn direct_sum(c1: &Connection, c2: &Connection) -> Connection {
    Connection { a: c1.a.block_diag(&c2.a) }
}

/// A symbolic invariant polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvPoly {
    /// `det(Id + iτF)`.
    TotalChern,
    /// `Tr exp(iτF)`.
    ChernChar,
    Inverse(Box<InvPoly>),
    Product(Box<InvPoly>, Box<InvPoly>),
    /// The degree-2k part of the total Chern form.
    ChernComponent(usize),
}

impl InvPoly {
    pub fn inverse(p: InvPoly) -> InvPoly {
        InvPoly::Inverse(Box::new(p))
    }

    pub fn product(p: InvPoly, q: InvPoly) -> InvPoly {
        InvPoly::Product(Box::new(p), Box::new(q))
    }

    /// Whether the polynomial lies in the multiplicative group generated by
    /// the total Chern class, where inverses exist.
    pub fn is_multiplicative(&self) -> bool {
        match self {
            InvPoly::TotalChern => true,
            InvPoly::Inverse(p) => p.is_multiplicative(),
            InvPoly::Product(p, q) => p.is_multiplicative() && q.is_multiplicative(),
            InvPoly::ChernChar | InvPoly::ChernComponent(_) => false,
        }
    }
}

impl fmt::Display for InvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvPoly::TotalChern => write!(f, "ctot"),
            InvPoly::ChernChar => write!(f, "ch"),
            InvPoly::Inverse(p) => write!(f, "inv({p})"),
            InvPoly::Product(p, q) => write!(f, "({p})*({q})"),
            InvPoly::ChernComponent(k) => write!(f, "ck:{k}"),
        }
    }
}

/// Parses the rendering produced by `Display`: `ctot`, `ch`, `ck:K`,
/// `inv(P)` and `(P)*(Q)`.
impl FromStr for InvPoly {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let s = src.trim();
        let unknown = || Error::UnknownPolynomial(src.to_string());
        match s {
            "ctot" => return Ok(InvPoly::TotalChern),
            "ch" => return Ok(InvPoly::ChernChar),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("ck:") {
            return match k.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(InvPoly::ChernComponent(k)),
                _ => Err(unknown()),
            };
        }
        if let Some(inner) = s.strip_prefix("inv(").and_then(|r| r.strip_suffix(')')) {
            if balanced(inner) {
                return Ok(InvPoly::inverse(inner.parse()?));
            }
        }
        if s.starts_with('(') {
            let close = matching_paren(s).ok_or_else(unknown)?;
            let rest = &s[close + 1..];
            let right = rest.strip_prefix("*(").and_then(|r| r.strip_suffix(')')).ok_or_else(unknown)?;
            if balanced(right) {
                return Ok(InvPoly::product(s[1..close].parse()?, right.parse()?));
            }
        }
        Err(unknown())
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth.checked_sub(1)?;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i64;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

/// `iτ·F`.
fn normalized(f: &FormMatrix) -> FormMatrix {
    f.scale(&Gauss::i()).scale_scalar(&Scalar::tau())
}

/// Evaluates `P` on a curvature matrix.
pub fn eval_poly(p: &InvPoly, f: &FormMatrix) -> Result<Form> {
    let dim = f.dim();
    match p {
        InvPoly::TotalChern => {
            let m = &FormMatrix::identity(f.rank(), dim) + &normalized(f);
            Ok(m.det())
        }
        InvPoly::ChernChar => Ok(normalized(f).exp_nilpotent()?.trace()),
        InvPoly::Inverse(q) => {
            if !q.is_multiplicative() {
                return Err(Error::NotInvertible(q.to_string()));
            }
            let v = OmegaPlusForm::new(eval_poly(q, f)?)?;
            Ok(omega_plus_inverse(&v).into_form())
        }
        InvPoly::Product(a, b) => Ok(&eval_poly(a, f)? * &eval_poly(b, f)?),
        InvPoly::ChernComponent(k) => Ok(eval_poly(&InvPoly::TotalChern, f)?.part(2 * k)),
    }
}

/// Total Chern form of a connection.
pub fn c_tot(c: &Connection) -> OmegaPlusForm {
    let v = eval_poly(&InvPoly::TotalChern, &c.curvature()).expect("total Chern form");
    OmegaPlusForm::new(v).expect("total Chern form lies in the multiplicative group")
}

/// Chern character form of a connection.
pub fn ch(c: &Connection) -> Form {
    eval_poly(&InvPoly::ChernChar, &c.curvature()).expect("Chern character form")
}

/// A bundle automorphism: polynomial matrix with constant nonzero determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gauge {
    g: FormMatrix,
    inv: FormMatrix,
}

impl Gauge {
    pub fn new(g: FormMatrix) -> Result<Self> {
        let inv = unimodular_inverse(&g)?;
        Ok(Gauge { g, inv })
    }

    pub fn identity(n: usize, dim: usize) -> Self {
        let id = FormMatrix::identity(n, dim);
        Gauge { g: id.clone(), inv: id }
    }

    pub fn matrix(&self) -> &FormMatrix {
        &self.g
    }

    pub fn inverse_matrix(&self) -> &FormMatrix {
        &self.inv
    }

    pub fn rank(&self) -> usize {
        self.g.rank()
    }

    pub fn compose(&self, o: &Gauge) -> Gauge {
        Gauge { g: &self.g * &o.g, inv: &o.inv * &self.inv }
    }

    pub fn inverse(&self) -> Gauge {
        Gauge { g: self.inv.clone(), inv: self.g.clone() }
    }

    pub fn block_diag(&self, o: &Gauge) -> Gauge {
        Gauge { g: self.g.block_diag(&o.g), inv: self.inv.block_diag(&o.inv) }
    }
}

/// Inverse of a function matrix whose determinant is a nonzero constant.
fn unimodular_inverse(g: &FormMatrix) -> Result<FormMatrix> {
    for i in 0..g.rank() {
        for j in 0..g.rank() {
            let e = g.get(i, j);
            if !e.is_zero() && e.homogeneous_degree() != Some(0) {
                return Err(Error::NotFunction(i, j));
            }
        }
    }
    let det = g.det().constant_part();
    let c = det.as_constant().and_then(|c| c.inv()).ok_or(Error::NotUnimodular)?;
    if g.det().len() > 1 {
        return Err(Error::NotUnimodular);
    }
    Ok(g.adjugate().scale(&c))
}

/// `g*∇`, with matrix `g⁻¹dg + g⁻¹Ag`.
pub fn gauge_transform(g: &Gauge, c: &Connection) -> Result<Connection> {
    if g.rank() != c.rank() {
        return Err(Error::RankMismatch(g.rank(), c.rank()));
    }
    let a = &(&g.inv * &g.g.d()) + &(&(&g.inv * &c.a) * &g.g);
    Ok(Connection { a })
}

/// A hermitian metric `H = gᴴg` with unimodular polynomial factor `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    factor: Gauge,
}

impl Metric {
    pub fn new(factor: FormMatrix) -> Result<Self> {
        Ok(Metric { factor: Gauge::new(factor)? })
    }

    pub fn identity(n: usize, dim: usize) -> Self {
        Metric { factor: Gauge::identity(n, dim) }
    }

    pub fn rank(&self) -> usize {
        self.factor.rank()
    }

    pub fn factor(&self) -> &FormMatrix {
        self.factor.matrix()
    }

    pub fn h(&self) -> FormMatrix {
        &self.factor.g.conj_transpose() * &self.factor.g
    }

    pub fn h_inv(&self) -> FormMatrix {
        &self.factor.inv * &self.factor.inv.conj_transpose()
    }

    /// The metric `fᴴHf` induced through a bundle automorphism `f`.
    pub fn pullback(&self, f: &Gauge) -> Metric {
        Metric { factor: self.factor.compose(f) }
    }

    pub fn direct_sum(&self, o: &Metric) -> Metric {
        Metric { factor: self.factor.block_diag(&o.factor) }
    }
}

/// The adjoint connection `A* = H⁻¹(dH − AᴴH)`, characterized by
/// `dH = AᴴH + HA*`.
pub fn adjoint(c: &Connection, h: &Metric) -> Result<Connection> {
    if h.rank() != c.rank() {
        return Err(Error::RankMismatch(h.rank(), c.rank()));
    }
    let hm = h.h();
    let a = &h.h_inv() * &(&hm.d() - &(&c.a.conj_transpose() * &hm));
    Ok(Connection { a })
}

/// `½(∇ + ∇*)`, a connection compatible with `h`.
pub fn unitarize(c: &Connection, h: &Metric) -> Result<Connection> {
    let star = adjoint(c, h)?;
    Ok(Connection { a: (&c.a + &star.a).scale_rational(&rat(1, 2)) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cap::{exp_nilpotent, phi_map};
    use crate::form::Basis;

    const M: usize = 4;

    fn one_form(c: usize, g: usize) -> Form {
        Form::term(M, Basis::dx(g), Scalar::x(c))
    }

    fn conn(rows: Vec<Vec<Form>>) -> Connection {
        Connection::new(FormMatrix::from_rows(M, rows).unwrap()).unwrap()
    }

    fn sample_rank2() -> Connection {
        conn(vec![
            vec![one_form(1, 2), Form::dx(M, 3)],
            vec![one_form(4, 1).scale(&Gauss::i()), one_form(2, 4)],
        ])
    }

    fn shear() -> Gauge {
        Gauge::new(
            FormMatrix::from_rows(M, vec![vec![Form::one(M), Form::x(M, 1)], vec![Form::zero(M), Form::one(M)]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn polynomial_names_round_trip() {
        let p = InvPoly::product(InvPoly::inverse(InvPoly::TotalChern), InvPoly::ChernComponent(2));
        assert_eq!(p.to_string().parse::<InvPoly>().unwrap(), p);
        assert_eq!("ch".parse::<InvPoly>().unwrap(), InvPoly::ChernChar);
        assert!("ck:0".parse::<InvPoly>().is_err());
        assert!("inv(ctot))*(ch".parse::<InvPoly>().is_err());
        assert!("chern".parse::<InvPoly>().is_err());
    }

    #[test]
    fn curvature_examples() {
        assert!(Connection::trivial(2, M).curvature().is_zero());
        let c = conn(vec![vec![one_form(1, 2)]]);
        assert_eq!(c.curvature().get(0, 0), &(&Form::dx(M, 1) * &Form::dx(M, 2)));
    }

    #[test]
    fn curvature_is_gauge_covariant() {
        let c = sample_rank2();
        let g = shear();
        let lhs = gauge_transform(&g, &c).unwrap().curvature();
        let rhs = &(g.inverse_matrix() * &c.curvature()) * g.matrix();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_poly_examples() {
        let c = conn(vec![vec![one_form(1, 2)]]);
        let f = c.curvature();
        let expected = &Form::one(M) + &f.get(0, 0).scale(&Gauss::i()).scale_scalar(&Scalar::tau());
        assert_eq!(eval_poly(&InvPoly::TotalChern, &f).unwrap(), expected);
        assert_eq!(eval_poly(&InvPoly::ChernChar, &FormMatrix::zero(3, M)).unwrap(), Form::int(M, 3));
        assert!(matches!(
            eval_poly(&InvPoly::inverse(InvPoly::ChernChar), &f),
            Err(Error::NotInvertible(_))
        ));

        let a = sample_rank2();
        let b = conn(vec![vec![one_form(3, 4)]]);
        let sum = direct_sum(&a, &b);
        assert_eq!(c_tot(&sum), c_tot(&a).mul(&c_tot(&b)));
        assert_eq!(ch(&sum), &ch(&a) + &ch(&b));
    }

    #[test]
    fn chern_forms_are_closed_and_related_by_exp_phi() {
        let c = sample_rank2();
        assert!(c_tot(&c).form().is_closed());
        assert!(ch(&c).is_closed());
        assert_eq!(c_tot(&c).into_form(), exp_nilpotent(&phi_map(&ch(&c))).unwrap());
        let inv = eval_poly(&InvPoly::inverse(InvPoly::TotalChern), &c.curvature()).unwrap();
        assert!((&inv * c_tot(&c).form()) == Form::one(M));
    }

    #[test]
    fn gauge_examples() {
        let c = sample_rank2();
        assert_eq!(gauge_transform(&Gauge::identity(2, M), &c).unwrap(), c);
        let g = gauge_transform(&shear(), &Connection::trivial(2, M)).unwrap();
        let expected = FormMatrix::from_rows(M, vec![vec![Form::zero(M), Form::dx(M, 1)], vec![Form::zero(M), Form::zero(M)]]).unwrap();
        assert_eq!(g.matrix(), &expected);
        assert_eq!(c_tot(&gauge_transform(&shear(), &c).unwrap()), c_tot(&c));
        assert_eq!(
            Gauge::new(FormMatrix::from_rows(M, vec![vec![Form::x(M, 1)]]).unwrap()),
            Err(Error::NotUnimodular)
        );
    }

    #[test]
    fn adjoint_examples() {
        let id = Metric::identity(2, M);
        // anti-hermitian: A = [[i dx1, dx2], [-dx2, 0]]
        let anti = conn(vec![
            vec![Form::dx(M, 1).scale(&Gauss::i()), Form::dx(M, 2)],
            vec![-Form::dx(M, 2), Form::zero(M)],
        ]);
        assert_eq!(adjoint(&anti, &id).unwrap(), anti);

        let c = sample_rank2();
        let h = Metric::new(shear().matrix().clone()).unwrap();
        let star = adjoint(&c, &h).unwrap();
        let hm = h.h();
        assert_eq!(hm.d(), &(&c.matrix().conj_transpose() * &hm) + &(&hm * star.matrix()));
        assert_eq!(adjoint(&star, &h).unwrap(), c);
        let u = unitarize(&c, &h).unwrap();
        assert_eq!(adjoint(&u, &h).unwrap(), u);
        assert_eq!(c_tot(&star).conj(), c_tot(&c));
        assert_eq!(ch(&star).conj(), ch(&c));
    }
}
