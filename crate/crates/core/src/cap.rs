//! The modified group law `α ∔ β = α + β + α∧dβ` on odd forms, the
//! multiplicative group Ω₊ of even forms with constant term 1, and the
//! series maps between the additive and multiplicative pictures.
//!
//! Every series below is evaluated on a form without degree-0 part, so it
//! terminates once the powers vanish for degree reasons.

use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::{rat, rat_int, Rational};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::lambda::LambdaRep;

/// `α ∔ β = α + β + α∧dβ`.
pub fn cap_add(a: &LambdaRep, b: &LambdaRep) -> LambdaRep {
    let f = a.form() + b.form();
    LambdaRep::from_odd(&f + &(a.form() * &b.d()))
}

/// `⊖α = −α∧(1+dα)⁻¹`, the two-sided inverse for ∔.
pub fn cap_neg(a: &LambdaRep) -> LambdaRep {
    let inv = series(&a.d(), |k| if k % 2 == 0 { rat_int(1) } else { rat_int(-1) });
    LambdaRep::from_odd(-(a.form() * &inv))
}

/// `α ⊖ β = α ∔ (⊖β)`.
pub fn cap_sub(a: &LambdaRep, b: &LambdaRep) -> LambdaRep {
    cap_add(a, &cap_neg(b))
}

/// ∔-sum of a list; the empty sum is 0 in dimension `dim`.
pub fn cap_sum<'a>(dim: usize, items: impl IntoIterator<Item = &'a LambdaRep>) -> LambdaRep {
    items
        .into_iter()
        .fold(LambdaRep::zero(dim), |acc, x| cap_add(&acc, x))
}

/// The unique β, built degree by degree, with `β ∔ β = α` exactly.
pub fn cap_half(a: &LambdaRep) -> LambdaRep {
    let half = rat(1, 2);
    let dim = a.dim();
    let mut beta = Form::zero(dim);
    for deg in (1..=dim).step_by(2) {
        // the degree-`deg` part of β∧dβ only involves parts of β already fixed
        let correction = (&beta * &beta.d()).part(deg);
        let piece = (&a.part(deg) - &correction).scale_rational(&half);
        beta += &piece;
    }
    LambdaRep::from_odd(beta)
}

/// Splits α as `β ∔ γ` with β real and γ special imaginary.
///
/// β halves the real representative `α + ᾱ + ½(α∧dᾱ + ᾱ∧dα)` of `α ∔ ᾱ`, and
/// `γ = (⊖β) ∔ α`, so the recombination `β ∔ γ = α` holds exactly.
pub fn real_specialimag_split(a: &LambdaRep) -> (LambdaRep, LambdaRep) {
    let ab = a.conj();
    let cross = &(a.form() * &ab.d()) + &(ab.form() * &a.d());
    let sym = &(a.form() + ab.form()) + &cross.scale_rational(&rat(1, 2));
    let beta = cap_half(&LambdaRep::from_odd(sym));
    let gamma = cap_add(&cap_neg(&beta), a);
    (beta, gamma)
}

/// `γ ∔ γ̄ ≡ 0` in Λ.
pub fn is_special_imaginary(g: &LambdaRep) -> bool {
    cap_add(g, &g.conj()).is_closed()
}

/// `Σ_k coef(k)·x^k` for `x` without degree-0 part.
pub fn series(x: &Form, coef: impl Fn(usize) -> Rational) -> Form {
    x.power_series(coef).expect("series argument has no degree-0 part")
}

/// `exp(x)` for `x` without degree-0 part.
pub fn exp_nilpotent(x: &Form) -> Result<Form> {
    x.power_series(|k| Rational::one() / factorial(k))
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, j| acc * rat_int(j))
}

/// `F(x) = Σ xⁿ/(n+1)! = (eˣ − 1)/x`.
pub fn series_f(x: &Form) -> Form {
    series(x, |n| Rational::one() / factorial(n + 1))
}

/// `G(x) = Σ (−1)ⁿ xⁿ/(n+1) = ln(1+x)/x`.
pub fn series_g(x: &Form) -> Form {
    series(x, |n| {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        rat(sign, n as i64 + 1)
    })
}

/// An even form whose degree-0 component is exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPlusForm(Form);

impl OmegaPlusForm {
    pub fn new(form: Form) -> Result<Self> {
        if !form.is_even() {
            return Err(Error::OddDegree);
        }
        if !form.constant_part().is_one() {
            return Err(Error::NotOmegaPlus);
        }
        Ok(OmegaPlusForm(form))
    }

    pub fn one(dim: usize) -> Self {
        OmegaPlusForm(Form::one(dim))
    }

    /// `1 + dα`.
    pub fn one_plus_d(a: &LambdaRep) -> Self {
        OmegaPlusForm(&Form::one(a.dim()) + &a.d())
    }

    pub fn form(&self) -> &Form {
        &self.0
    }

    pub fn into_form(self) -> Form {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// The positive-degree part `σ − 1`.
    pub fn nilpotent_part(&self) -> Form {
        self.0.positive_part()
    }

    pub fn mul(&self, o: &OmegaPlusForm) -> OmegaPlusForm {
        OmegaPlusForm(&self.0 * &o.0)
    }

    pub fn conj(&self) -> OmegaPlusForm {
        OmegaPlusForm(self.0.conj())
    }

    pub fn is_real(&self) -> bool {
        self.0.is_real()
    }

    pub fn is_one(&self) -> bool {
        self.0 == Form::one(self.dim())
    }

    /// `σ ∧ σ̄ = 1`.
    pub fn has_modulus_one(&self) -> bool {
        self.mul(&self.conj()).is_one()
    }
}

impl fmt::Display for OmegaPlusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The square root with constant term 1, by the binomial series of `√(1+X)`.
pub fn sqrt_plus(s: &OmegaPlusForm) -> OmegaPlusForm {
    let x = s.nilpotent_part();
    let half = rat(1, 2);
    let mut coefs = vec![Rational::one()];
    let limit = x.dim() + 2;
    for k in 1..=limit {
        let prev = coefs[k - 1].clone();
        coefs.push(prev * (&half - rat_int(k as i64 - 1)) / rat_int(k as i64));
    }
    OmegaPlusForm(series(&x, |k| coefs.get(k).cloned().unwrap_or_else(Rational::zero)))
}

/// `σ = ρ∧θ` with `ρ = √(σ∧σ̄)` real and `θ = ρ⁻¹∧σ` of modulus one.
pub fn modulus_split(s: &OmegaPlusForm) -> (OmegaPlusForm, OmegaPlusForm) {
    let rho = sqrt_plus(&s.mul(&s.conj()));
    let theta = omega_plus_inverse(&rho).mul(s);
    (rho, theta)
}

/// Inverse in Ω₊ by the geometric series.
pub fn omega_plus_inverse(s: &OmegaPlusForm) -> OmegaPlusForm {
    let x = s.nilpotent_part();
    OmegaPlusForm(series(&x, |k| if k % 2 == 0 { rat_int(1) } else { rat_int(-1) }))
}

/// `(−1)^{k−1}(k−1)!` for degrees `2k` and `2k−1`; 0 in degree 0.
pub fn phi_factor(degree: usize) -> Rational {
    if degree == 0 {
        return Rational::zero();
    }
    let k = degree.div_ceil(2);
    let f = factorial(k - 1);
    if k % 2 == 1 {
        f
    } else {
        -f
    }
}

/// Rescales the degree-n part by [`phi_factor`]`(n)`.
pub fn phi_map(a: &Form) -> Form {
    degreewise(a, |n| Some(phi_factor(n)))
}

/// Inverse of [`phi_map`] on forms without degree-0 part.
pub fn phi_inv(a: &Form) -> Result<Form> {
    if !a.constant_part().is_zero() {
        return Err(Error::HasDegreeZero);
    }
    Ok(degreewise(a, |n| (n > 0).then(|| Rational::one() / phi_factor(n))))
}

fn degreewise(a: &Form, factor: impl Fn(usize) -> Option<Rational>) -> Form {
    let mut out = Form::zero(a.dim());
    if a.is_cylinder() {
        out = out.on_cylinder();
    }
    for n in 0..=a.max_degree().unwrap_or(0) {
        if let Some(c) = factor(n) {
            out += &a.part(n).scale_rational(&c);
        }
    }
    out
}

/// `ψ_F(α) = φ(α)∧F(φ(dα))`, turning + into ∔ on Λ.
pub fn psi_f(a: &LambdaRep) -> LambdaRep {
    let pa = phi_map(a.form());
    let pda = phi_map(&a.d());
    LambdaRep::from_odd(&pa * &series_f(&pda))
}

/// `ψ_G(β) = φ⁻¹(β∧G(dβ))`, inverse to [`psi_f`] in Λ.
pub fn psi_g(b: &LambdaRep) -> LambdaRep {
    let inner = b.form() * &series_g(&b.d());
    LambdaRep::from_odd(phi_inv(&inner).expect("odd forms have no degree-0 part"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Gauss;
    use crate::form::{lambda_equal, Basis};
    use crate::scalar::Scalar;

    const M: usize = 4;

    fn lr(f: Form) -> LambdaRep {
        LambdaRep::new(f).unwrap()
    }

    fn xdx(c: usize, g: usize) -> Form {
        Form::term(M, Basis::dx(g), Scalar::x(c))
    }

    fn omega() -> Form {
        &(&Form::dx(M, 1) * &Form::dx(M, 2)) + &(&Form::dx(M, 3) * &Form::dx(M, 4))
    }

    /// A sample odd form with parts in degrees 1 and 3 and complex coefficients.
    fn sample() -> LambdaRep {
        let a1 = &xdx(3, 1) + &Form::term(M, Basis::dx(2), &Scalar::i() * &Scalar::x(4));
        let a3 = Form::term(M, Basis::from_indices(&[1, 2, 4]), Scalar::x(3));
        lr(&a1 + &a3)
    }

    #[test]
    fn cap_add_examples() {
        let a = sample();
        assert_eq!(cap_add(&a, &LambdaRep::zero(M)), a);
        let lhs = cap_add(&lr(xdx(3, 1)), &lr(xdx(2, 4)));
        // oracle: α + β + α∧dβ expanded by hand
        let cross = Form::term(M, Basis::from_indices(&[1, 2, 4]), Scalar::x(3));
        assert_eq!(lhs.into_form(), &(&xdx(3, 1) + &xdx(2, 4)) + &cross);
        let closed = lr(Form::dx(M, 2));
        assert_eq!(cap_add(&a, &closed), &a + &closed);
    }

    #[test]
    fn cap_neg_examples() {
        assert!(cap_neg(&LambdaRep::zero(M)).is_zero());
        assert_eq!(cap_neg(&lr(xdx(1, 2))).into_form(), -xdx(1, 2));
        let a = sample();
        assert!(cap_add(&a, &cap_neg(&a)).is_zero());
        assert!(cap_add(&cap_neg(&a), &a).is_zero());
    }

    #[test]
    fn cap_half_examples() {
        let b = sample();
        assert_eq!(cap_half(&cap_add(&b, &b)), b);
        let closed = lr(Form::dx(M, 1));
        assert_eq!(cap_half(&closed).into_form(), Form::dx(M, 1).scale_rational(&rat(1, 2)));
        // degree-3 part of ½̂(a¹+a³) is ½(a³ − ¼ a¹∧da¹)
        let a1 = xdx(3, 1);
        let a3 = Form::term(M, Basis::from_indices(&[2, 3, 4]), Scalar::x(1));
        let h = cap_half(&lr(&a1 + &a3));
        let expected = (&a3 - &(&a1 * &a1.d()).scale_rational(&rat(1, 4))).scale_rational(&rat(1, 2));
        assert_eq!(h.part(3), expected);
    }

    #[test]
    fn split_examples() {
        let real = lr(&xdx(3, 1) + &Form::term(M, Basis::from_indices(&[1, 2, 4]), Scalar::x(3)));
        let (b, g) = real_specialimag_split(&real);
        assert_eq!(b, real);
        assert!(g.is_zero());

        let a = lr(Form::term(M, Basis::dx(2), &Scalar::i() * &Scalar::x(1)));
        let (b, g) = real_specialimag_split(&a);
        assert_eq!(cap_add(&b, &g), a);
        assert!(b.is_real());
        assert!(is_special_imaginary(&g));

        let a = sample();
        let (b, g) = real_specialimag_split(&a);
        assert_eq!(cap_add(&b, &g), a);
        assert!(b.is_real());
        assert!(is_special_imaginary(&g));
        assert_eq!(cap_half(&a).conj(), cap_half(&a.conj()));
    }

    #[test]
    fn sqrt_examples() {
        assert!(sqrt_plus(&OmegaPlusForm::one(M)).is_one());
        let w = omega();
        let s = OmegaPlusForm::new(&Form::one(M) + &w).unwrap();
        let expected = &(&Form::one(M) + &w.scale_rational(&rat(1, 2))) - &(&w * &w).scale_rational(&rat(1, 8));
        assert_eq!(sqrt_plus(&s).into_form(), expected);
        assert_eq!(sqrt_plus(&s.mul(&s)), s);
    }

    #[test]
    fn inverse_examples() {
        let w = omega();
        let s = OmegaPlusForm::new(&Form::one(M) + &w).unwrap();
        let expected = &(&Form::one(M) - &w) + &(&w * &w);
        assert_eq!(omega_plus_inverse(&s).into_form(), expected);
        let a = sample();
        let one_da = OmegaPlusForm::one_plus_d(&a);
        assert!(omega_plus_inverse(&one_da).mul(&one_da).is_one());
    }

    #[test]
    fn modulus_split_examples() {
        let w = &Form::dx(M, 1) * &Form::dx(M, 2);
        let s = OmegaPlusForm::new(&Form::one(M) + &w.scale(&Gauss::i())).unwrap();
        let (rho, theta) = modulus_split(&s);
        assert!(rho.is_one());
        assert_eq!(theta, s);
        let real = OmegaPlusForm::new(&Form::one(M) + &omega()).unwrap();
        let (rho, theta) = modulus_split(&real);
        assert_eq!(rho, real);
        assert!(theta.is_one());
    }

    #[test]
    fn phi_examples() {
        let a1 = xdx(3, 1);
        assert_eq!(phi_map(&a1), a1);
        let a5 = Form::term(5, Basis::from_indices(&[1, 2, 3, 4, 5]), Scalar::x(1));
        assert_eq!(phi_map(&a5), a5.scale_rational(&rat_int(2)));
        assert!(phi_map(&Form::int(M, 7)).is_zero());
        assert_eq!(phi_inv(&Form::int(M, 7)), Err(Error::HasDegreeZero));
        let a3 = Form::term(M, Basis::from_indices(&[1, 2, 4]), Scalar::x(3));
        assert_eq!(phi_map(&a3), -&a3);
        assert_eq!(phi_inv(&phi_map(&a3)).unwrap(), a3);
    }

    #[test]
    fn psi_examples() {
        let closed = lr(&Form::dx(M, 1) + &(&Form::dx(M, 1) * &(&Form::dx(M, 2) * &Form::dx(M, 3))));
        assert_eq!(psi_f(&closed).into_form(), phi_map(closed.form()));

        // pure degree 1: a + ½ a∧da + ⅙ a∧da∧da
        let a = &xdx(3, 1) + &xdx(1, 2);
        let da = a.d();
        let expected = &(&a + &(&a * &da).scale_rational(&rat(1, 2))) + &(&(&a * &da) * &da).scale_rational(&rat(1, 6));
        assert_eq!(psi_f(&lr(a)).into_form(), expected);

        let s = sample();
        assert!(lambda_equal(psi_g(&psi_f(&s)).form(), s.form()));
    }
}
