//! The identities checked by each suite, one random instance at a time.

use crate::cap::{
    cap_add, cap_half, cap_neg, cap_sub, exp_nilpotent, is_special_imaginary, modulus_split, omega_plus_inverse,
    phi_inv, phi_map, psi_f, psi_g, real_specialimag_split, series_f, series_g, sqrt_plus, OmegaPlusForm,
};
use crate::chern_weil::{
    adjoint, c_tot, ch, direct_sum, eval_poly, gauge_transform, unitarize, Connection, Gauge, InvPoly,
};
use crate::error::Result;
use crate::form::Form;
use crate::ktheory::{
    a_additive, a_via, block_upper, borel_additive, borel_star, ch_class, ch_hat_model, conj_class, cup_ctot_model, flat_embed,
    half_borel, iota, iota_via, legacy_chern, legacy_convert, legacy_iota, legacy_sum, model_ln, move_add, move_mult,
    normal_form_add, normal_form_mult, normalize_add, normalize_mult, psi_f_class, psi_g_class, star_ctot,
    CharModelElem, KClassMult, Term, Triple,
};
use crate::lambda::LambdaRep;
use crate::transgression::{cs_additive, cs_hat, cs_multiplicative, gauge_exactness_witness, quadratic_path};

use super::gen::Gen;
use super::Checks;

pub(super) type InstanceFn = fn(&mut Gen, &mut Checks) -> Result<()>;

pub(super) struct SuiteDef {
    pub name: &'static str,
    pub instances: usize,
    pub run: InstanceFn,
}

pub(super) const SUITES: &[SuiteDef] = &[
    SuiteDef { name: "cap-laws", instances: 200, run: cap_laws },
    SuiteDef { name: "omega-plus", instances: 100, run: omega_plus },
    SuiteDef { name: "chern-weil", instances: 100, run: chern_weil },
    SuiteDef { name: "transgression-additive", instances: 50, run: transgression_additive },
    SuiteDef { name: "transgression-multiplicative", instances: 50, run: transgression_multiplicative },
    SuiteDef { name: "maitresse", instances: 50, run: additive_vs_multiplicative },
    SuiteDef { name: "ktheory-mult", instances: 100, run: ktheory_mult },
    SuiteDef { name: "ktheory-add", instances: 100, run: ktheory_add },
    SuiteDef { name: "virginia", instances: 50, run: psi_f_diagrams },
    SuiteDef { name: "borel", instances: 50, run: borel },
    SuiteDef { name: "angelique-model", instances: 50, run: character_model },
    SuiteDef { name: "karen-model", instances: 50, run: character_log },
    SuiteDef { name: "legacy", instances: 50, run: legacy },
];

fn lr(f: Form) -> LambdaRep {
    LambdaRep::new(f).expect("odd form")
}

fn cyl(a: &LambdaRep) -> OmegaPlusForm {
    OmegaPlusForm::one_plus_d(a)
}

fn cap_laws(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let dim = g.dim();
    let (a, b, e) = (g.odd(), g.odd(), g.odd());
    let z = g.exact_odd();
    let show = || format!("alpha = {a}\nbeta = {b}\ngamma = {e}");

    c.check("associativity", cap_add(&cap_add(&a, &b), &e) == cap_add(&a, &cap_add(&b, &e)), show);
    let comm = &cap_add(&b, &a) - &cap_add(&a, &b);
    c.check("commutator-is-d(alpha^beta)", comm.form() == &(a.form() * b.form()).d(), show);
    c.check("commutative-in-lambda", cap_add(&a, &b).lambda_eq(&cap_add(&b, &a)), show);
    let zero = LambdaRep::zero(dim);
    c.check("unit", cap_add(&a, &zero) == a && cap_add(&zero, &a) == a, show);
    c.check("inverse", cap_add(&a, &cap_neg(&a)).is_zero() && cap_add(&cap_neg(&a), &a).is_zero(), show);
    let h = cap_half(&a);
    c.check("half-round-trip", cap_add(&h, &h) == a && cap_half(&cap_add(&a, &a)) == a, show);
    c.check("curvature-of-sum", cyl(&a).mul(&cyl(&b)) == cyl(&cap_add(&a, &b)), show);
    let quot = cyl(&a).mul(&omega_plus_inverse(&cyl(&b)));
    c.check("curvature-of-difference", quot == cyl(&cap_sub(&a, &b)), show);
    c.check("sqrt-of-curvature", sqrt_plus(&cyl(&a)) == cyl(&h), show);
    c.check("closed-summand-adds", cap_add(&a, &z) == &a + &z, || format!("alpha = {a}\nclosed = {z}"));
    Ok(())
}

fn omega_plus(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let dim = g.dim();
    let s = OmegaPlusForm::new(&Form::one(dim) + &g.even_positive(false))?;
    let sr = OmegaPlusForm::new(&Form::one(dim) + &g.even_positive(true))?;
    let a = g.odd();
    let show_s = || format!("sigma = {s}");

    let r = sqrt_plus(&s);
    c.check("sqrt-squares-back", r.mul(&r) == s, show_s);
    c.check("sqrt-preserves-real", sqrt_plus(&sr).is_real(), || format!("sigma = {sr}"));
    c.check("sqrt-preserves-closed", sqrt_plus(&cyl(&a)).form().is_closed(), || format!("alpha = {a}"));
    let (rho, theta) = modulus_split(&s);
    let ok = rho.mul(&theta) == s && rho.is_real() && theta.has_modulus_one();
    c.check("modulus-split-recombines", ok, show_s);
    c.check("inverse", s.mul(&omega_plus_inverse(&s)).is_one(), show_s);

    let show_a = || format!("alpha = {a}");
    let (beta, gamma) = real_specialimag_split(&a);
    let ok = cap_add(&beta, &gamma) == a && beta.is_real() && is_special_imaginary(&gamma);
    c.check("split-recombines", ok, show_a);
    c.check("half-commutes-with-conj", cap_half(&a).conj() == cap_half(&a.conj()), show_a);

    let (b0, g0) = (g.odd_real(), g.closed_imaginary());
    let built = cap_add(&b0, &g0);
    let (_, gb) = real_specialimag_split(&built);
    let show = || format!("real part = {b0}\nclosed imaginary part = {g0}");
    c.check("real-curvature-constructed", cyl(&built).is_real() && gb.is_closed(), show);
    c.check("real-curvature-iff-closed-imaginary-part", cyl(&a).is_real() == gamma.is_closed(), show_a);
    c.check("closed-imaginary-is-special", is_special_imaginary(&g0), show);

    let delta = g.odd();
    let built = cap_sub(&delta, &delta.conj());
    let (bb, _) = real_specialimag_split(&built);
    let show = || format!("delta = {delta}");
    c.check("modulus-one-constructed", cyl(&built).has_modulus_one() && bb.is_closed(), show);
    c.check("modulus-one-iff-closed-real-part", cyl(&a).has_modulus_one() == beta.is_closed(), show_a);
    Ok(())
}

fn chern_weil(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let n = g.rank();
    let a = g.connection(n);
    let n2 = g.rank();
    let b = g.connection(n2);
    let f = g.gauge(n);
    let h = g.metric(n);
    let show = || format!("A = {a}");
    let show_g = || format!("A = {a}\ng = {}", f.matrix());

    let ct = c_tot(&a);
    let chf = ch(&a);
    c.check("ctot-closed", ct.form().is_closed(), show);
    c.check("ch-closed", chf.is_closed(), show);
    c.check("ctot-is-exp-phi-ch", ct.form() == &exp_nilpotent(&phi_map(&chf))?, show);

    let moved = gauge_transform(&f, &a)?;
    c.check("ctot-gauge-invariant", c_tot(&moved) == ct, show_g);
    c.check("ch-gauge-invariant", ch(&moved) == chf, show_g);
    let k = 1 + g.below((g.dim() / 2).max(1));
    let p = InvPoly::ChernComponent(k);
    let ok = eval_poly(&p, &moved.curvature())? == eval_poly(&p, &a.curvature())?;
    c.check("chern-component-gauge-invariant", ok, show_g);
    let covariant = f.inverse_matrix() * &(&a.curvature() * f.matrix());
    c.check("curvature-covariant", moved.curvature() == covariant, show_g);

    let sum = direct_sum(&a, &b);
    let show_b = || format!("A = {a}\nB = {b}");
    c.check("ctot-multiplicative", c_tot(&sum) == ct.mul(&c_tot(&b)), show_b);
    c.check("ch-additive", ch(&sum) == &chf + &ch(&b), show_b);

    let star = adjoint(&a, &h)?;
    let show_h = || format!("A = {a}\nmetric factor = {}", h.factor());
    let hm = h.h();
    let defining = &(&a.matrix().conj_transpose() * &hm) + &(&hm * star.matrix());
    c.check("adjoint-defining-identity", hm.d() == defining, show_h);
    c.check("adjoint-involution", adjoint(&star, &h)? == a, show_h);
    let ok = c_tot(&star).conj() == ct && ch(&star).conj() == chf;
    c.check("adjoint-conjugates-chern-forms", ok, show_h);
    let u = unitarize(&a, &h)?;
    c.check("unitarized-is-self-adjoint", adjoint(&u, &h)? == u, show_h);
    Ok(())
}

fn transgression_additive(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let n = g.rank();
    let (a0, a1, a2) = (g.connection(n), g.connection(n), g.connection(n));
    let bend = g.one_form_matrix(n);
    let n2 = g.rank();
    let (b0, b1) = (g.connection(n2), g.connection(n2));
    let show = || format!("A0 = {a0}\nA1 = {a1}\nA2 = {a2}");
    let quad = quadratic_path(&a0, &a1, &bend)?;

    for p in [InvPoly::TotalChern, InvPoly::ChernChar] {
        let cs01 = cs_additive(&p, &a0, &a1, None)?;
        let diff = &eval_poly(&p, &a1.curvature())? - &eval_poly(&p, &a0.curvature())?;
        c.check("transgression-formula", cs01.d() == diff, show);
        let along = cs_additive(&p, &a0, &a1, Some(&quad))?;
        c.check("path-independence", cs01.lambda_eq(&along), || format!("{}\nbend = {bend}", show()));
        let cs12 = cs_additive(&p, &a1, &a2, None)?;
        let cs02 = cs_additive(&p, &a0, &a2, None)?;
        c.check("chasles", cs02.lambda_eq(&(&cs01 + &cs12)), show);
        let cs10 = cs_additive(&p, &a1, &a0, None)?;
        c.check("reversal", cs10.lambda_eq(&-&cs01), show);
    }

    let chc = InvPoly::ChernChar;
    let lhs = cs_additive(&chc, &direct_sum(&a0, &b0), &direct_sum(&a1, &b1), None)?;
    let rhs = &cs_additive(&chc, &a0, &a1, None)? + &cs_additive(&chc, &b0, &b1, None)?;
    c.check("direct-sum-ch", lhs.lambda_eq(&rhs), || format!("{}\nB0 = {b0}\nB1 = {b1}", show()));

    let pq = InvPoly::product(InvPoly::TotalChern, InvPoly::TotalChern);
    let whole = cs_additive(&pq, &a0, &a1, None)?;
    let pt = cs_additive(&InvPoly::TotalChern, &a0, &a1, None)?;
    let (p0, p1) = (c_tot(&a0).into_form(), c_tot(&a1).into_form());
    let line1 = lr(&(pt.form() * &p0) + &(&p1 * pt.form()));
    let line2 = lr(&(&p0 * pt.form()) + &(pt.form() * &p1));
    c.check("product-transgression-first-form", whole.lambda_eq(&line1), show);
    c.check("product-transgression-second-form", whole.lambda_eq(&line2), show);

    let f = g.gauge(n);
    let moved = gauge_transform(&f, &a0)?;
    let closed = cs_additive(&InvPoly::TotalChern, &a0, &moved, None)?.is_closed();
    c.check("gauge-transgression-closed", closed, || format!("A0 = {a0}\ng = {}", f.matrix()));
    Ok(())
}

fn transgression_multiplicative(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let n = g.rank();
    let (a0, a1, a2) = (g.connection(n), g.connection(n), g.connection(n));
    let bend = g.one_form_matrix(n);
    let n2 = g.rank();
    let (b0, b1) = (g.connection(n2), g.connection(n2));
    let h = g.metric(n);
    let f = g.gauge(n);
    let show = || format!("A0 = {a0}\nA1 = {a1}\nA2 = {a2}");

    let hat01 = cs_multiplicative(&a0, &a1, None)?;
    let expected = c_tot(&a1).mul(&omega_plus_inverse(&c_tot(&a0)));
    c.check("transgression-formula", cyl(&hat01) == expected, show);
    let hat12 = cs_multiplicative(&a1, &a2, None)?;
    let hat02 = cs_multiplicative(&a0, &a2, None)?;
    c.check("cocycle", hat02.lambda_eq(&cap_add(&hat12, &hat01)), show);
    let hat10 = cs_multiplicative(&a1, &a0, None)?;
    c.check("reversal", hat10.lambda_eq(&cap_neg(&hat01)), show);

    let inv = InvPoly::inverse(InvPoly::TotalChern);
    c.check("inverse-polynomial", cs_hat(&inv, &a0, &a1, None)?.lambda_eq(&hat10), show);
    let tilde_inv = cs_additive(&inv, &a0, &a1, None)?;
    let tilde = cs_additive(&InvPoly::TotalChern, &a0, &a1, None)?;
    let (i0, i1) = (omega_plus_inverse(&c_tot(&a0)), omega_plus_inverse(&c_tot(&a1)));
    let sandwich = lr(-(&(i0.form() * tilde.form()) * i1.form()));
    c.check("inverse-polynomial-tilde", tilde_inv.lambda_eq(&sandwich), show);

    let lhs = cs_multiplicative(&direct_sum(&a0, &b0), &direct_sum(&a1, &b1), None)?;
    let rhs = cap_add(&cs_multiplicative(&b0, &b1, None)?, &hat01);
    c.check("direct-sum", lhs.lambda_eq(&rhs), || format!("{}\nB0 = {b0}\nB1 = {b1}", show()));

    let (s0, s1) = (adjoint(&a0, &h)?, adjoint(&a1, &h)?);
    let show_h = || format!("{}\nmetric factor = {}", show(), h.factor());
    c.check("conjugation", cs_multiplicative(&s0, &s1, None)?.lambda_eq(&hat01.conj()), show_h);
    let chc = InvPoly::ChernChar;
    let ok = cs_additive(&chc, &s0, &s1, None)?.lambda_eq(&cs_additive(&chc, &a0, &a1, None)?.conj());
    c.check("conjugation-additive", ok, show_h);

    let quad = quadratic_path(&a0, &a1, &bend)?;
    let along = cs_multiplicative(&a0, &a1, Some(&quad))?;
    c.check("path-independence", along.lambda_eq(&hat01), || format!("{}\nbend = {bend}", show()));

    let eta = gauge_exactness_witness(&a0, &f)?;
    let moved = gauge_transform(&f, &a0)?;
    let ok = &eta.d() == cs_multiplicative(&a0, &moved, None)?.form();
    c.check("gauge-transgression-exact", ok, || format!("A0 = {a0}\ng = {}", f.matrix()));
    Ok(())
}

fn additive_vs_multiplicative(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let n = g.rank();
    let (a0, a1) = (g.connection(n), g.connection(n));
    let (a, b) = (g.odd(), g.odd());
    let show = || format!("A0 = {a0}\nA1 = {a1}");

    let hat = cs_multiplicative(&a0, &a1, None)?;
    let tilde = cs_additive(&InvPoly::ChernChar, &a0, &a1, None)?;
    c.check("multiplicative-is-psi-f-of-additive", hat.lambda_eq(&psi_f(&tilde)), show);

    let show_ab = || format!("alpha = {a}\nalpha' = {b}");
    c.check("psi-g-inverts-psi-f", psi_g(&psi_f(&a)).lambda_eq(&a), show_ab);
    c.check("psi-f-inverts-psi-g", psi_f(&psi_g(&a)).lambda_eq(&a), show_ab);
    let fa = lr(a.form() * &series_f(&a.d()));
    c.check("f-series-inverted-by-g-series", fa.form() * &series_g(&fa.d()) == *a.form(), show_ab);

    let with_f = |x: &LambdaRep| lr(x.form() * &series_f(&x.d()));
    let with_g = |x: &LambdaRep| lr(x.form() * &series_g(&x.d()));
    let sum = &a + &b;
    c.check("f-series-sends-sum-to-cap-sum", with_f(&sum).lambda_eq(&cap_add(&with_f(&a), &with_f(&b))), show_ab);
    let capsum = cap_add(&a, &b);
    c.check("g-series-sends-cap-sum-to-sum", with_g(&capsum).lambda_eq(&(&with_g(&a) + &with_g(&b))), show_ab);
    c.check("psi-f-morphism", psi_f(&sum).lambda_eq(&cap_add(&psi_f(&a), &psi_f(&b))), show_ab);
    c.check("psi-f-commutes-with-conj", psi_f(&a.conj()) == psi_f(&a).conj(), show_ab);
    Ok(())
}

fn ktheory_mult(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let dim = g.dim();
    let n = g.rank();
    let t = g.triple(n);
    let f = g.gauge(n);
    let target = g.connection(n);
    let n2 = g.rank();
    let s = g.triple(n2);
    let f2 = g.gauge(n2);
    let target2 = g.connection(n2);
    let u = g.any_triple();
    let (gamma, delta) = (g.odd(), g.odd());
    let z = g.exact_odd();
    let show = || format!("triple: {t}\ng = {}\ntarget = {target}", f.matrix());

    let moved = move_mult(&t, &f, &target)?;
    c.check("isomorphism-invariance", normal_form_mult(&moved) == normal_form_mult(&t), show);
    c.check("star-ctot-isomorphism-invariance", star_ctot(&moved) == star_ctot(&t), show);

    let show_s = || format!("first: {t}\nsecond: {s}");
    let sum = t.direct_sum_mult(&s);
    let formal = normalize_mult(dim, &[Term::Plus(t.clone()), Term::Plus(s.clone())]);
    c.check("direct-sum-relation", normal_form_mult(&sum) == formal, show_s);
    c.check("star-ctot-multiplicative", star_ctot(&sum) == star_ctot(&t).mul(&star_ctot(&s)), show_s);
    let moved2 = move_mult(&s, &f2, &target2)?;
    let both = move_mult(&sum, &f.block_diag(&f2), &direct_sum(&target, &target2))?;
    let ok = normal_form_mult(&both) == normal_form_mult(&moved.direct_sum_mult(&moved2));
    c.check("relations-compatible", ok, show_s);

    let show_g = || format!("gamma = {gamma}\ndelta = {delta}\ntriple: {u}");
    let via_u = normalize_mult(dim, &iota_via(&gamma, &u));
    let via_t = normalize_mult(dim, &iota_via(&gamma, &t));
    c.check("iota-well-defined", via_u == iota(&gamma) && via_t == iota(&gamma), show_g);
    c.check("iota-injective", via_u.is_zero() == gamma.is_closed(), show_g);
    c.check("iota-kills-exact", normalize_mult(dim, &iota_via(&z, &u)).is_zero(), || format!("exact = {z}"));
    let lhs = normalize_mult(dim, &iota_via(&cap_add(&gamma, &delta), &u));
    let rhs = normalize_mult(dim, &iota_via(&gamma, &u)).add(&normalize_mult(dim, &iota_via(&delta, &t)));
    c.check("iota-morphism", lhs == rhs, show_g);
    let [Term::Plus(p), Term::Minus(q)] = &iota_via(&gamma, &u)[..] else { unreachable!() };
    let ratio = star_ctot(q).mul(&omega_plus_inverse(&star_ctot(p)));
    c.check("star-ctot-of-minus-iota", ratio == cyl(&gamma), show_g);

    let same = g.triple(n);
    let diff = normalize_mult(dim, &[Term::Plus(t.clone()), Term::Minus(same.clone())]);
    let back = normalize_mult(dim, &iota_via(&diff.alpha, &u));
    let ok = diff.rank == 0 && back == diff;
    c.check("rank-zero-classes-come-from-iota", ok, || format!("first: {t}\nsecond: {same}"));

    let flat = flat_embed(&f);
    let ok = flat.connection().curvature().is_zero() && star_ctot(&flat).is_one();
    c.check("flat-triple", ok, || format!("g = {}", f.matrix()));

    let (top, bottom) = (g.connection(n), flat_embed(&f2).connection().clone());
    let off = g.one_form_matrix(n.max(n2)).rows();
    let upper = Connection::new(block_upper(dim, top.matrix(), bottom.matrix(), &off))?;
    let diagonal = direct_sum(&top, &bottom);
    let ok = cs_multiplicative(&diagonal, &upper, None)?.is_zero();
    c.check("block-triangular-transgression-vanishes", ok, || format!("connection: {upper}"));
    Ok(())
}

fn ktheory_add(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let dim = g.dim();
    let n = g.rank();
    let t = g.triple(n);
    let f = g.gauge(n);
    let target = g.connection(n);
    let s = g.any_triple();
    let u = g.any_triple();
    let (gamma, delta) = (g.odd(), g.odd());
    let show = || format!("triple: {t}\ng = {}\ntarget = {target}", f.matrix());

    let moved = move_add(&t, &f, &target)?;
    c.check("isomorphism-invariance", normal_form_add(&moved) == normal_form_add(&t), show);
    c.check("ch-isomorphism-invariance", ch_class(&moved) == ch_class(&t), show);

    let show_s = || format!("first: {t}\nsecond: {s}");
    let sum = t.direct_sum_add(&s);
    let formal = normalize_add(dim, &[Term::Plus(t.clone()), Term::Plus(s.clone())]);
    c.check("direct-sum-relation", normal_form_add(&sum) == formal, show_s);
    c.check("ch-additive", ch_class(&sum) == &ch_class(&t) + &ch_class(&s), show_s);

    let show_g = || format!("gamma = {gamma}\ndelta = {delta}\ntriple: {u}");
    let via_u = normalize_add(dim, &a_via(&gamma, &u));
    let via_t = normalize_add(dim, &a_via(&gamma, &t));
    c.check("a-well-defined", via_u == a_additive(&gamma) && via_t == a_additive(&gamma), show_g);
    c.check("a-injective", via_u.is_zero() == gamma.is_closed(), show_g);
    let lhs = normalize_add(dim, &a_via(&(&gamma + &delta), &u));
    let rhs = normalize_add(dim, &a_via(&gamma, &u)).add(&normalize_add(dim, &a_via(&delta, &t)));
    c.check("a-morphism", lhs == rhs, show_g);
    let [Term::Plus(p), Term::Minus(q)] = &a_via(&gamma, &u)[..] else { unreachable!() };
    c.check("ch-of-a", &ch_class(p) - &ch_class(q) == -gamma.d(), show_g);
    Ok(())
}

fn psi_f_diagrams(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let dim = g.dim();
    let n = g.rank();
    let t = g.triple(n);
    let s = g.any_triple();
    let f = g.gauge(n);
    let target = g.connection(n);
    let h = g.metric(n);
    let gamma = g.odd();
    let show = || format!("triple: {t}");

    let mapped: Vec<Term> = a_via(&gamma, &t)
        .into_iter()
        .map(|term| match term {
            Term::Plus(x) => Term::Plus(psi_f_class(&x)),
            Term::Minus(x) => Term::Minus(psi_f_class(&x)),
        })
        .collect();
    let ok = normalize_mult(dim, &mapped) == iota(&psi_f(&gamma));
    c.check("a-square", ok, || format!("gamma = {gamma}\ntriple: {t}"));

    let zero = Connection::trivial(n, dim);
    let flat_conn = gauge_transform(&f, &zero)?;
    let suspended = psi_f(&cs_additive(&InvPoly::ChernChar, &zero, &flat_conn, None)?);
    let ok = suspended.lambda_eq(&cs_multiplicative(&zero, &flat_conn, None)?);
    c.check("suspension-square", ok, || format!("g = {}", f.matrix()));
    let ok = normal_form_mult(&psi_f_class(&t)).rank == normal_form_add(&t).rank;
    c.check("rank-square", ok, show);

    let nf = normal_form_mult(&psi_f_class(&t));
    let expected = KClassMult { rank: n as i64, alpha: psi_f(&normal_form_add(&t).alpha) };
    c.check("psi-on-normal-forms", nf == expected, show);
    let ok = normal_form_add(&psi_g_class(&psi_f_class(&t))) == normal_form_add(&t);
    c.check("psi-g-inverts-psi-f", ok, show);
    let moved = move_add(&t, &f, &target)?;
    c.check("psi-respects-isomorphism", normal_form_mult(&psi_f_class(&moved)) == nf, show);
    let lhs = normal_form_mult(&psi_f_class(&t.direct_sum_add(&s)));
    let rhs = nf.add(&normal_form_mult(&psi_f_class(&s)));
    c.check("psi-respects-direct-sum", lhs == rhs, || format!("first: {t}\nsecond: {s}"));

    let lhs = star_ctot(&psi_f_class(&t)).into_form();
    c.check("chern-square", lhs == exp_nilpotent(&phi_map(&ch_class(&t)))?, show);
    let lhs = psi_f(&borel_additive(&t, &h)?);
    let ok = lhs.lambda_eq(&borel_star(&psi_f_class(&t), &h)?);
    c.check("borel-square", ok, || format!("triple: {t}\nmetric factor = {}", h.factor()));

    let flat = flat_embed(&f);
    let ok = psi_f_class(&flat) == flat && normal_form_mult(&psi_f_class(&flat)) == normal_form_mult(&flat);
    c.check("flat-square", ok, || format!("g = {}", f.matrix()));
    Ok(())
}

fn borel(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let dim = g.dim();
    let n = g.rank();
    let t = g.triple(n);
    let (h1, h2) = (g.metric(n), g.metric(n));
    let n2 = g.rank();
    let s = g.triple(n2);
    let hs = g.metric(n2);
    let f = g.gauge(n);
    let target = g.connection(n);
    let real_alpha = g.odd_real();
    let show = || format!("triple: {t}\nmetric factor = {}", h1.factor());

    let b = borel_star(&t, &h1)?;
    c.check("special-imaginary", is_special_imaginary(&b), show);
    let ok = b.lambda_eq(&borel_star(&t, &h2)?);
    c.check("metric-independent", ok, || format!("{}\nsecond metric factor = {}", show(), h2.factor()));
    let lhs = borel_star(&t.direct_sum_mult(&s), &h1.direct_sum(&hs))?;
    let ok = lhs.lambda_eq(&cap_add(&b, &borel_star(&s, &hs)?));
    c.check("morphism", ok, || format!("{}\nsecond: {s}", show()));
    let moved = move_mult(&t, &f, &target)?;
    let ok = borel_star(&t, &h1.pullback(&f))?.lambda_eq(&borel_star(&moved, &h1)?);
    c.check("isomorphism-invariance", ok, || format!("{}\ng = {}\ntarget = {target}", show(), f.matrix()));

    let conj = conj_class(&t, &h1)?;
    let diff = normalize_mult(dim, &[Term::Plus(t.clone()), Term::Minus(conj.clone())]);
    c.check("conjugate-difference", diff == iota(&cap_neg(&b)), show);
    c.check("double-conjugation", conj_class(&conj, &h1)? == t, show);

    let unitary = Triple::new(unitarize(t.connection(), &h1)?, real_alpha.clone())?;
    c.check("vanishes-on-unitary-real", borel_star(&unitary, &h1)?.is_closed(), || format!("triple: {unitary}"));

    let ba = borel_additive(&t, &h1)?;
    c.check("additive-imaginary", ba.conj().lambda_eq(&-&ba), show);
    c.check("additive-metric-independent", ba.lambda_eq(&borel_additive(&t, &h2)?), show);
    let lhs = borel_additive(&t.direct_sum_add(&s), &h1.direct_sum(&hs))?;
    c.check("additive-morphism", lhs.lambda_eq(&(&ba + &borel_additive(&s, &hs)?)), show);
    c.check("additive-vanishes-on-unitary-real", borel_additive(&unitary, &h1)?.is_closed(), || {
        format!("triple: {unitary}")
    });
    Ok(())
}

fn character_model(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let n = g.rank();
    let t = g.triple(n);
    let s = g.any_triple();
    let u = g.any_triple();
    let f = g.gauge(n);
    let target = g.connection(n);
    let h = g.metric(n);
    let gamma = g.odd();
    let show = || format!("triple: {t}");

    let cup = cup_ctot_model(&t);
    c.check("curvature-is-star-ctot", cup.curvature() == star_ctot(&t), show);

    let [Term::Plus(p), Term::Minus(q)] = &iota_via(&gamma, &u)[..] else { unreachable!() };
    let value = cup_ctot_model(p).mul(&cup_ctot_model(q).inverse());
    c.check("iota-goes-to-cap-neg", value.0.lambda_eq(&cap_neg(&gamma)), || format!("gamma = {gamma}\ntriple: {u}"));

    let sum = cup_ctot_model(&t.direct_sum_mult(&s));
    let ok = sum.0.lambda_eq(&cup.mul(&cup_ctot_model(&s)).0);
    c.check("morphism", ok, || format!("first: {t}\nsecond: {s}"));
    let moved = move_mult(&t, &f, &target)?;
    let ok = cup_ctot_model(&moved).0.lambda_eq(&cup.0);
    c.check("isomorphism-invariance", ok, || format!("{}\ng = {}\ntarget = {target}", show(), f.matrix()));

    let show_h = || format!("{}\nmetric factor = {}", show(), h.factor());
    let (real, imag) = cup.split();
    c.check("special-imaginary-part-is-half-borel", imag.lambda_eq(&half_borel(&t, &h)?), show_h);
    let ok = cap_add(&real, &imag) == cup.0 && real.is_real() && is_special_imaginary(&imag);
    c.check("split", ok, show);
    let conj = cup_ctot_model(&conj_class(&t, &h)?);
    c.check("conjugation", conj.0.lambda_eq(&cup.conj().0), show_h);
    Ok(())
}

fn character_log(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let n = g.rank();
    let t = g.triple(n);
    let s = g.any_triple();
    let (x, y) = (g.odd(), g.odd());
    let z = g.exact_odd();
    let show = || format!("triple: {t}");

    let cup = cup_ctot_model(&t);
    let lhs = lr(phi_inv(model_ln(&cup).form())?);
    c.check("log-of-cup-is-ch-hat", lhs.lambda_eq(&ch_hat_model(&psi_g_class(&t))), show);

    let show_xy = || format!("x = {x}\ny = {y}");
    let (ex, ey) = (CharModelElem(x.clone()), CharModelElem(y.clone()));
    let ok = model_ln(&ex.mul(&ey)).lambda_eq(&(&model_ln(&ex) + &model_ln(&ey)));
    c.check("log-morphism", ok, show_xy);
    c.check("log-of-closed", model_ln(&CharModelElem(z.clone())) == z, || format!("closed = {z}"));
    let back = phi_inv(model_ln(&CharModelElem(psi_f(&x))).form())?;
    c.check("log-inverts-psi-f", back == *x.form(), show_xy);

    let rank = Form::int(t.dim(), n as i64);
    c.check("ch-hat-curvature", ch_hat_model(&t).d() == &ch_class(&t) - &rank, show);
    let lhs = ch_hat_model(&t.direct_sum_add(&s));
    let ok = lhs.lambda_eq(&(&ch_hat_model(&t) + &ch_hat_model(&s)));
    c.check("ch-hat-morphism", ok, || format!("first: {t}\nsecond: {s}"));
    Ok(())
}

fn legacy(g: &mut Gen, c: &mut Checks) -> Result<()> {
    let n = g.rank();
    let t = g.triple(n);
    let s = g.any_triple();
    let f: Gauge = g.gauge(n);
    let target = g.connection(n);
    let gamma = g.odd();
    let show = || format!("triple: {t}");

    let l = legacy_convert(&t);
    c.check("chern-form", legacy_chern(&l) == star_ctot(&t).into_form(), show);
    let ok = legacy_sum(&l, &legacy_convert(&s)) == legacy_convert(&t.direct_sum_mult(&s));
    c.check("direct-sum", ok, || format!("first: {t}\nsecond: {s}"));
    let ok = legacy_iota(&gamma, &l) == legacy_convert(&t.with_alpha(cap_add(&gamma, t.alpha())));
    c.check("iota", ok, || format!("gamma = {gamma}\ntriple: {t}"));
    let moved = move_mult(&t, &f, &target)?;
    let ok = legacy_chern(&legacy_convert(&moved)) == legacy_chern(&l);
    c.check("isomorphism-invariance", ok, || format!("{}\ng = {}\ntarget = {target}", show(), f.matrix()));
    Ok(())
}
