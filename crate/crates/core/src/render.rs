//! Canonical text rendering; the output is accepted back by [`crate::parse`].

use std::fmt::{self, Write};

use num_traits::{One, Signed, Zero};

use crate::coeff::Gauss;
use crate::form::{Basis, Form};

/// Writes `c·body` as one term of a sum, with ` + ` / ` - ` separators.
pub(crate) fn write_signed_term(
    f: &mut impl Write,
    c: &Gauss,
    body: &str,
    body_is_one: bool,
    first: bool,
) -> fmt::Result {
    let (negative, magnitude) = if c.im.is_zero() {
        (c.re.is_negative(), Gauss::real(c.re.abs()))
    } else if c.re.is_zero() {
        (c.im.is_negative(), Gauss::new(c.re.clone(), c.im.abs()))
    } else {
        (false, c.clone())
    };
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let unit_real = magnitude.im.is_zero() && magnitude.re.is_one();
    let unit_imag = magnitude.re.is_zero() && magnitude.im.is_one();
    if body_is_one {
        if unit_imag {
            return f.write_str("i");
        }
        return write!(f, "{magnitude}");
    }
    if unit_imag {
        f.write_str("i*")?;
    } else if !unit_real {
        write!(f, "{magnitude}*")?;
    }
    f.write_str(body)
}

/// Renders a form with terms ordered by generator set, then by monomial.
pub fn render_form(a: &Form) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (b, s) in a.terms() {
        for (m, c) in s.terms() {
            let body = term_body(&m.to_string(), m.is_one(), *b);
            let is_one = m.is_one() && *b == Basis::EMPTY;
            write_signed_term(&mut out, c, &body, is_one, first).expect("writing to a String");
            first = false;
        }
    }
    out
}

fn term_body(monomial: &str, monomial_is_one: bool, b: Basis) -> String {
    match (monomial_is_one, b == Basis::EMPTY) {
        (true, true) => "1".into(),
        (true, false) => b.to_string(),
        (false, true) => monomial.into(),
        (false, false) => format!("{monomial}*{b}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use crate::scalar::Scalar;

    #[test]
    fn zero_renders_as_zero() {
        assert_eq!(render_form(&Form::zero(4)), "0");
    }

    #[test]
    fn signs_and_units() {
        let a = &Form::term(4, Basis::dx(2), Scalar::x(1)) - &Form::dx(4, 3);
        assert_eq!(render_form(&a), "x1*dx2 - dx3");
        let b = Form::term(4, Basis::dx(1), Scalar::rational(rat(-1, 2)));
        assert_eq!(render_form(&b), "-1/2*dx1");
        let c = Form::constant(4, Gauss::i());
        assert_eq!(render_form(&c), "i");
        let d = Form::term(4, Basis::from_indices(&[1, 3]), Scalar::constant(Gauss::new(rat(2, 1), rat(3, 1))));
        assert_eq!(render_form(&d), "(2+3*i)*dx1*dx3");
        let e = Form::term(4, Basis::dx(1), &Scalar::tau() * &Scalar::constant(Gauss::new(rat(0, 1), rat(-1, 1))));
        assert_eq!(render_form(&e), "-i*tau*dx1");
    }
}
