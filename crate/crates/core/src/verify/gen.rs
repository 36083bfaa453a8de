//! Seeded random instances. Each instance draws from its own ChaCha stream,
//! keyed by (seed, suite, index), so instances are independent of scheduling.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chern_weil::{Connection, Gauge, Metric};
use crate::coeff::{rat, Gauss};
use crate::form::{Basis, Form};
use crate::ktheory::Triple;
use crate::lambda::LambdaRep;
use crate::matrix::FormMatrix;
use crate::scalar::{Monomial, Scalar, Var};

use super::Profile;

/// FNV-1a, used to fold the suite name into the seed.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub struct Gen {
    rng: ChaCha8Rng,
    pub profile: Profile,
}

impl Gen {
    pub fn new(seed: u64, suite: &str, index: usize, profile: Profile) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(suite));
        rng.set_stream(index as u64);
        Gen { rng, profile }
    }

    pub fn dim(&self) -> usize {
        self.profile.dim
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// A rank between 1 and the profile bound.
    pub fn rank(&mut self) -> usize {
        self.rng.gen_range(1..=self.profile.rank)
    }

    fn small_rational(&mut self) -> (i64, i64) {
        let mut n = self.rng.gen_range(1..=3);
        if self.chance(0.5) {
            n = -n;
        }
        (n, self.rng.gen_range(1..=2))
    }

    pub fn gauss(&mut self) -> Gauss {
        let (a, b) = self.small_rational();
        if self.chance(0.3) {
            let (c, d) = self.small_rational();
            Gauss::new(rat(a, b), rat(c, d))
        } else {
            Gauss::real(rat(a, b))
        }
    }

    pub fn real(&mut self) -> Gauss {
        let (a, b) = self.small_rational();
        Gauss::real(rat(a, b))
    }

    fn monomial(&mut self, max_degree: usize) -> Monomial {
        let deg = self.rng.gen_range(0..=max_degree);
        let mut m = Monomial::one();
        for _ in 0..deg {
            let v = Var::X(self.rng.gen_range(1..=self.profile.dim));
            m = m.with_exp(v, m.exp(v) + 1);
        }
        m
    }

    fn basis(&mut self, degree: usize) -> Basis {
        let idx: Vec<usize> = sample(&mut self.rng, self.profile.dim, degree).into_iter().map(|i| i + 1).collect();
        Basis::from_indices(&idx)
    }

    fn form_with(&mut self, degree: usize, terms: usize, real: bool) -> Form {
        let dim = self.profile.dim;
        let mut out = Form::zero(dim);
        if degree > dim {
            return out;
        }
        for _ in 0..terms {
            let c = if real { self.real() } else { self.gauss() };
            let m = self.monomial(self.profile.coef_degree);
            let b = self.basis(degree);
            out.add_term(b, &Scalar::term(m, c));
        }
        out
    }

    /// A homogeneous form of the given degree with up to `terms` terms.
    pub fn form(&mut self, degree: usize) -> Form {
        let n = self.rng.gen_range(1..=self.profile.terms);
        self.form_with(degree, n, false)
    }

    fn graded(&mut self, degrees: impl Iterator<Item = usize>, real: bool) -> Form {
        let dim = self.profile.dim;
        let mut out = Form::zero(dim);
        for p in degrees {
            let n = self.rng.gen_range(0..=self.profile.terms);
            out += &self.form_with(p, n, real);
        }
        out
    }

    pub fn odd(&mut self) -> LambdaRep {
        let dim = self.profile.dim;
        LambdaRep::new(self.graded((1..=dim).step_by(2), false)).expect("odd degrees")
    }

    pub fn odd_real(&mut self) -> LambdaRep {
        let dim = self.profile.dim;
        LambdaRep::new(self.graded((1..=dim).step_by(2), true)).expect("odd degrees")
    }

    /// An even form without degree-zero part.
    pub fn even_positive(&mut self, real: bool) -> Form {
        let dim = self.profile.dim;
        self.graded((2..=dim).step_by(2), real)
    }

    /// An even form including a function part, so that its derivative has a 1-form part.
    pub fn even(&mut self, real: bool) -> Form {
        let dim = self.profile.dim;
        self.graded((0..=dim).step_by(2), real)
    }

    /// A closed odd form `dε`.
    pub fn exact_odd(&mut self) -> LambdaRep {
        LambdaRep::new(self.even(false).d()).expect("odd degrees")
    }

    /// A closed, purely imaginary odd form `i·dε` with ε real.
    pub fn closed_imaginary(&mut self) -> LambdaRep {
        LambdaRep::new(self.even(true).d().scale(&Gauss::i())).expect("odd degrees")
    }

    fn one_form_entry(&mut self) -> Form {
        if self.chance(0.2) {
            return Form::zero(self.profile.dim);
        }
        let bound = (self.profile.terms / 2).max(1);
        let n = self.rng.gen_range(1..=bound);
        self.form_with(1, n, false)
    }

    pub fn one_form_matrix(&mut self, rank: usize) -> FormMatrix {
        let rows = (0..rank).map(|_| (0..rank).map(|_| self.one_form_entry()).collect()).collect();
        FormMatrix::from_rows(self.profile.dim, rows).expect("square")
    }

    pub fn connection(&mut self, rank: usize) -> Connection {
        Connection::new(self.one_form_matrix(rank)).expect("1-forms")
    }

    /// A nonzero function `c·x_i + b`, or a nonzero constant.
    fn linear(&mut self, real: bool) -> Form {
        let dim = self.profile.dim;
        let c = if real { self.real() } else { self.gauss() };
        if self.chance(0.3) {
            return Form::constant(dim, c);
        }
        let i = self.rng.gen_range(1..=dim);
        let b = self.gauss_or_zero(real);
        Form::function(dim, &Scalar::x(i).scale(&c) + &Scalar::constant(b))
    }

    fn gauss_or_zero(&mut self, real: bool) -> Gauss {
        if self.chance(0.5) {
            Gauss::zero()
        } else if real {
            self.real()
        } else {
            self.gauss()
        }
    }

    /// `I + f·E_jk` for `j ≠ k`, or a constant diagonal matrix in rank one.
    fn elementary(&mut self, rank: usize, real: bool) -> FormMatrix {
        let dim = self.profile.dim;
        let mut m = FormMatrix::identity(rank, dim);
        if rank == 1 {
            let c = if real { self.real() } else { self.gauss() };
            m.set(0, 0, Form::constant(dim, c));
            return m;
        }
        let j = self.rng.gen_range(0..rank);
        let k = (j + self.rng.gen_range(1..rank)) % rank;
        let f = self.linear(real);
        m.set(j, k, f);
        m
    }

    /// A product of two elementary matrices.
    pub fn gauge(&mut self, rank: usize) -> Gauge {
        let g = &self.elementary(rank, false) * &self.elementary(rank, false);
        Gauge::new(g).expect("elementary products are unimodular")
    }

    /// A metric `gᴴg` with a single elementary factor.
    pub fn metric(&mut self, rank: usize) -> Metric {
        let real = self.chance(0.5);
        Metric::new(self.elementary(rank, real)).expect("elementary matrices are unimodular")
    }

    pub fn triple(&mut self, rank: usize) -> Triple {
        let c = self.connection(rank);
        let a = self.odd();
        Triple::new(c, a).expect("same dimension")
    }

    /// A triple of random rank.
    pub fn any_triple(&mut self) -> Triple {
        let n = self.rank();
        self.triple(n)
    }
}
