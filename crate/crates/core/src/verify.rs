//! The acceptance criteria as runnable checks.
//!
//! Each criterion compares a production code path against an independent
//! route: a second pipeline, a closed-form count, or the brute-force
//! [`oracle`](crate::oracle). Randomised criteria draw from a seeded ChaCha
//! stream, so reports are reproducible.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{
    euler_chow, flag012_divisor_by_recurrence, flag012_series, grassmannian13_closed_form,
    grassmannian13_series, lawson_yau_exponent, lawson_yau_pn, macdonald, split_bundle_closed_form,
    split_bundle_series, Method, Variety,
};
use crate::coeff::{Coefficient, IntPoly};
use crate::monoid::{GradedMonoid, MonoidElement, MonoidMorphism};
use crate::oracle::{
    binomial, naive_convolve, naive_expand, naive_pullback, naive_pushforward, partitions_in_box,
    weyl_dim_gl3,
};
use crate::schubert::{
    basis, basis_symbols, enumerate_symbols, euler_characteristic, inclusion_i, inclusion_j,
    trace_phi, FlagType, SchubertSymbol,
};
use crate::series::{FormalSeries, GradedRanks, RationalSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Algebra,
    Bundle,
    Grassmann,
    Flag,
    Hilbert,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["all", "algebra", "bundle", "grassmann", "flag", "hilbert"];

    /// Criterion ids run by the suite, in report order.
    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::All => &[1, 2, 3, 4, 5, 6, 7],
            Suite::Flag => &[1],
            Suite::Bundle => &[2, 4],
            Suite::Grassmann => &[3, 7],
            Suite::Algebra => &[5],
            Suite::Hilbert => &[6],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "algebra" => Ok(Suite::Algebra),
            "bundle" => Ok(Suite::Bundle),
            "grassmann" => Ok(Suite::Grassmann),
            "flag" => Ok(Suite::Flag),
            "hilbert" => Ok(Suite::Hilbert),
            other => Err(format!(
                "unknown suite `{other}` (expected one of {})",
                Suite::NAMES.join(", ")
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    /// Random cases per randomised property.
    pub cases: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: 0x5eed_e7c5,
            cases: 128,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub checks: usize,
    /// The first failed check, if any.
    pub failure: Option<String>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "PASS  criterion {}: {} ({} checks)",
                self.id, self.name, self.checks
            ),
            Some(why) => write!(f, "FAIL  criterion {}: {}: {}", self.id, self.name, why),
        }
    }
}

/// Counts checks and keeps the first failure.
struct Checker {
    checks: usize,
    failure: Option<String>,
}

impl Checker {
    fn new() -> Self {
        Self {
            checks: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn equal<T: PartialEq + fmt::Display>(
        &mut self,
        what: impl FnOnce() -> String,
        expected: &T,
        got: &T,
    ) {
        self.check(expected == got, || {
            format!("{}: expected {expected}, got {got}", what())
        });
    }

    /// Compares two series on every element of grade ≤ `degree`.
    fn series<C: Coefficient>(
        &mut self,
        what: impl FnOnce() -> String,
        expected: &FormalSeries<C>,
        got: &FormalSeries<C>,
        degree: u64,
    ) {
        self.checks += 1;
        if self.failure.is_some() {
            return;
        }
        match expected.first_difference(got, degree) {
            Ok(None) => {}
            Ok(Some(d)) => {
                self.failure = Some(format!(
                    "{}: first difference at {}: expected {}, got {}",
                    what(),
                    d.element,
                    d.left,
                    d.right
                ))
            }
            Err(e) => self.failure = Some(format!("{}: {e}", what())),
        }
    }

    fn fail(&mut self, why: String) {
        self.check(false, || why);
    }

    fn finish(self, id: u8, name: &'static str) -> CriterionReport {
        CriterionReport {
            id,
            name,
            checks: self.checks,
            failure: self.failure,
        }
    }
}

/// Unwraps `r` or records the error as the failure and returns early.
macro_rules! attempt {
    ($checker:expr, $what:expr, $r:expr) => {
        match $r {
            Ok(v) => v,
            Err(e) => {
                $checker.fail(format!("{}: {e}", $what));
                return;
            }
        }
    };
}

pub fn run_suite(suite: Suite, config: &Config) -> Vec<CriterionReport> {
    suite
        .criteria()
        .iter()
        .map(|&id| run_criterion(id, config))
        .collect()
}

pub fn run_criterion(id: u8, config: &Config) -> CriterionReport {
    let mut c = Checker::new();
    let name = match id {
        1 => {
            flag_divisor(&mut c);
            "flag divisor series"
        }
        2 => {
            split_bundle(&mut c);
            "split-bundle pipeline"
        }
        3 => {
            chow_quotient(&mut c);
            "Chow-quotient pipeline for G(1,3)"
        }
        4 => {
            macdonald_lawson_yau(&mut c);
            "Macdonald and Lawson-Yau identities"
        }
        5 => {
            algebra_laws(&mut c, config);
            "algebra laws"
        }
        6 => {
            hilbert_euler(&mut c, config);
            "Hilbert and Euler M-series"
        }
        7 => {
            schubert_combinatorics(&mut c);
            "Schubert combinatorics"
        }
        _ => {
            c.fail(format!("no criterion with id {id}"));
            "unknown"
        }
    };
    c.finish(id, name)
}

const FLAG_GRID: usize = 20;

fn flag_divisor(c: &mut Checker) {
    let closed = attempt!(c, "E_2(F(0,1;2))", flag012_series(2));
    let expanded = closed.expand(2 * FLAG_GRID as u64);
    let table = flag012_divisor_by_recurrence(FLAG_GRID, FLAG_GRID);
    for (r, row) in table.iter().enumerate() {
        for (s, from_recurrence) in row.iter().enumerate() {
            let weyl = weyl_dim_gl3(r as u64, s as u64);
            let m = MonoidElement::from(vec![r as u32, s as u32]);
            let coeff = attempt!(c, "expansion", expanded.coeff(&m));
            c.equal(|| format!("expansion at {m}"), &weyl, &coeff);
            c.equal(|| format!("recurrence at {m}"), &weyl, from_recurrence);
        }
    }
    let pipeline = attempt!(
        c,
        "flag pipeline",
        euler_chow(Variety::Flag012, 2, 12, Method::Both)
    );
    c.check(pipeline.verified, || {
        "flag pipeline was not cross-checked".into()
    });
}

const BUNDLE_CASES: [(u32, u32, u32); 8] = [
    (1, 0, 1),
    (1, 1, 1),
    (1, 2, 1),
    (1, 3, 1),
    (2, 1, 1),
    (2, 1, 2),
    (2, 3, 2),
    (3, 2, 2),
];

fn split_bundle(c: &mut Checker) {
    const DEGREE: u64 = 10;
    for (n, d, p) in BUNDLE_CASES {
        let what = || format!("(n,d,p)=({n},{d},{p})");
        let pipeline = attempt!(c, what(), split_bundle_series(n, d, p, DEGREE));
        let closed = attempt!(c, what(), split_bundle_closed_form(n, d, p));
        c.series(what, &closed.expand(DEGREE), &pipeline, DEGREE);
    }
    // The named families route through the same closed forms.
    let aliases = [
        (Variety::Hirzebruch(2), 1, (1, 2, 1)),
        (Variety::BlowupPnAtPoint(3), 2, (2, 1, 2)),
        (Variety::ProductPnP1(2), 1, (2, 0, 1)),
    ];
    for (v, p, (n, d, q)) in aliases {
        let r = attempt!(c, v, euler_chow(v, p, DEGREE, Method::Both));
        let expected = attempt!(c, v, split_bundle_closed_form(n, d, q));
        c.check(r.closed_form.as_ref() == Some(&expected), || {
            format!("{v} does not use the ({n},{d},{q}) closed form")
        });
    }
    // P^n × P^1: (1-t0)^{-C(n+1,p)} (1-t1)^{-2C(n+1,p+1)} once the d = 0 factors merge.
    for n in 1..=4u32 {
        for p in 1..=n {
            let r = attempt!(c, "PnxP1", split_bundle_closed_form(n, 0, p));
            let exps: Vec<u32> = r.denominator().iter().map(|(_, e)| *e).collect();
            let expected = vec![lawson_yau_exponent(n, p - 1), 2 * lawson_yau_exponent(n, p)];
            c.check(exps == expected, || {
                format!("PnxP1({n}) at p={p}: exponents {exps:?}, expected {expected:?}")
            });
        }
    }
}

fn chow_quotient(c: &mut Checker) {
    const DEGREE: u64 = 12;
    for p in 0..=4 {
        let pipeline = attempt!(
            c,
            format!("E_{p}(G(1,3))"),
            grassmannian13_series(p, DEGREE)
        );
        let closed = attempt!(c, format!("E_{p}(G(1,3))"), grassmannian13_closed_form(p));
        c.series(
            || format!("E_{p}(G(1,3))"),
            &closed.expand(DEGREE),
            &pipeline,
            DEGREE,
        );
    }
    let e3 = attempt!(c, "E_3(G(1,3))", grassmannian13_series(3, 4));
    let head: Vec<BigInt> = e3.terms().map(|(_, v)| v.clone()).collect();
    let expected: Vec<BigInt> = [1, 6, 20, 50, 105].into_iter().map(BigInt::from).collect();
    c.check(head == expected, || {
        format!("E_3(G(1,3)) begins {head:?}, expected {expected:?}")
    });
    // (1+z)/(1-z)^5 = Σ (C(k+4,4) + C(k+3,4)) z^k.
    let closed = attempt!(c, "E_3(G(1,3))", grassmannian13_closed_form(3)).expand(DEGREE);
    for k in 0..=DEGREE {
        let want = binomial(k + 4, 4) + binomial(k + 3, 4);
        let got = attempt!(c, "E_3", closed.coeff(&vec![k as u32].into()));
        c.equal(|| format!("E_3(G(1,3)) at z^{k}"), &want, &got);
    }
}

fn macdonald_lawson_yau(c: &mut Checker) {
    const DEGREE: u64 = 20;
    for chi in 1..=12u64 {
        let series = attempt!(c, "Macdonald", macdonald(chi as i64)).expand(DEGREE);
        for d in 0..=DEGREE {
            let got = attempt!(c, "Macdonald", series.coeff(&vec![d as u32].into()));
            c.equal(
                || format!("χ={chi}, t^{d}"),
                &binomial(d + chi - 1, chi - 1),
                &got,
            );
        }
    }
    for n in 0..=6u32 {
        for p in 0..=n {
            let r = attempt!(c, "Lawson-Yau", lawson_yau_pn(n, p));
            let e = r.denominator()[0].1;
            c.equal(
                || format!("E_{p}(P^{n}) exponent vs binomial"),
                &binomial(u64::from(n) + 1, u64::from(p) + 1),
                &BigInt::from(e),
            );
            // χ(G(p,n)) counts the Schubert cells of the Grassmannian.
            let cells = euler_characteristic(&attempt!(c, "G(p,n)", FlagType::grassmannian(p, n)));
            c.equal(
                || format!("E_{p}(P^{n}) exponent vs χ(G({p},{n}))"),
                &cells,
                &e,
            );
            let oracle = attempt!(c, "oracle", naive_expand(&r, 6));
            c.check(oracle.matches(&r.expand(6)), || {
                format!("E_{p}(P^{n}) expansion differs from the oracle")
            });
        }
    }
}

const LABELS: [&str; 3] = ["a", "b", "c"];

fn random_monoid(rng: &mut ChaCha8Rng) -> GradedMonoid {
    let rank = rng.gen_range(1..=3);
    random_monoid_of_rank(rng, rank)
}

fn random_monoid_of_rank(rng: &mut ChaCha8Rng, rank: usize) -> GradedMonoid {
    let gens = LABELS[..rank]
        .iter()
        .map(|l| crate::monoid::Generator::new(*l, rng.gen_range(1..=3)))
        .collect();
    GradedMonoid::new(gens).expect("distinct labels, positive weights")
}

fn random_int(rng: &mut ChaCha8Rng) -> BigInt {
    let v: i64 = *[-3, -2, -1, 1, 2, 3, 5].choose(rng).unwrap();
    BigInt::from(v)
}

fn random_poly(rng: &mut ChaCha8Rng) -> IntPoly {
    let len = rng.gen_range(1..=3);
    let coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=3)).collect();
    match IntPoly::from(coeffs) {
        p if Zero::is_zero(&p) => IntPoly::from(vec![1]),
        p => p,
    }
}

/// A sparse series: each element of grade ≤ `bound` is present with
/// probability at most 0.5.
fn random_series<C: Coefficient>(
    rng: &mut ChaCha8Rng,
    monoid: &GradedMonoid,
    bound: u64,
    value: impl Fn(&mut ChaCha8Rng) -> C,
) -> FormalSeries<C> {
    let density: f64 = rng.gen_range(0.1..=0.5);
    let mut terms: Vec<(MonoidElement, C)> = Vec::new();
    for m in monoid.enumerate_up_to(bound) {
        if rng.gen_bool(density) {
            terms.push((m, value(rng)));
        }
    }
    FormalSeries::from_terms(monoid.clone(), bound, terms).expect("terms within the bound")
}

/// A morphism whose generator images are all nonzero.
fn random_morphism(
    rng: &mut ChaCha8Rng,
    source: &GradedMonoid,
    target: &GradedMonoid,
) -> MonoidMorphism {
    let images = (0..source.rank())
        .map(|_| loop {
            let e: Vec<u32> = (0..target.rank()).map(|_| rng.gen_range(0..=2)).collect();
            if e.iter().any(|&x| x > 0) {
                break MonoidElement::from(e);
            }
        })
        .collect();
    MonoidMorphism::new(source.clone(), target.clone(), images).expect("ranks match")
}

fn algebra_laws(c: &mut Checker, config: &Config) {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let int = |r: &mut ChaCha8Rng| random_int(r);
    for case in 0..config.cases {
        let what = |law: &'static str| move || format!("{law}, case {case}");
        let m = random_monoid(&mut rng);
        let bound = rng.gen_range(0..=8);
        let f = random_series(&mut rng, &m, bound, int);
        let g = random_series(&mut rng, &m, bound, int);
        let h = random_series(&mut rng, &m, bound, int);
        let one = FormalSeries::one(m.clone(), bound);

        // Ring laws.
        let fg = attempt!(c, "convolve", f.convolve(&g));
        let gf = attempt!(c, "convolve", g.convolve(&f));
        c.series(what("commutativity"), &fg, &gf, bound);
        let left = attempt!(c, "convolve", fg.convolve(&h));
        let right = attempt!(
            c,
            "convolve",
            f.convolve(&attempt!(c, "convolve", g.convolve(&h)))
        );
        c.series(what("associativity"), &left, &right, bound);
        let unit = attempt!(c, "convolve", one.convolve(&f));
        c.series(what("unit"), &f, &unit, bound);
        let dist = attempt!(c, "convolve", f.convolve(&attempt!(c, "add", g.add(&h))));
        let sum = attempt!(c, "add", fg.add(&attempt!(c, "convolve", f.convolve(&h))));
        c.series(what("distributivity"), &sum, &dist, bound);

        // Engine against the brute-force oracles.
        let naive = attempt!(c, "oracle", naive_convolve(&f, &g, bound));
        c.check(naive.matches(&fg), || {
            format!("convolve differs from the oracle, case {case}")
        });

        // Push-forward is a ring homomorphism along finite-fiber maps.
        let n = random_monoid(&mut rng);
        let psi = random_morphism(&mut rng, &m, &n);
        let pf = attempt!(c, "pushforward", f.pushforward(&psi));
        let pg = attempt!(c, "pushforward", g.pushforward(&psi));
        let pfg = attempt!(c, "pushforward", fg.pushforward(&psi));
        let prod = attempt!(c, "convolve", pf.convolve(&pg));
        c.series(
            what("push-forward homomorphism"),
            &prod,
            &pfg,
            pfg.bound().min(prod.bound()),
        );
        let one_n = attempt!(c, "pushforward", one.pushforward(&psi));
        c.series(
            what("push-forward unit"),
            &FormalSeries::one(n.clone(), one_n.bound()),
            &one_n,
            one_n.bound(),
        );
        let naive = attempt!(c, "oracle", naive_pushforward(&psi, &f, pf.bound()));
        c.check(naive.matches(&pf), || {
            format!("push-forward differs from the oracle, case {case}")
        });

        // Pull-back is linear.
        let tb = rng.gen_range(0..=8);
        let u = random_series(&mut rng, &n, tb, int);
        let v = random_series(&mut rng, &n, tb, int);
        let (a, b) = (random_int(&mut rng), random_int(&mut rng));
        let combo = attempt!(c, "add", u.scale(&a).add(&v.scale(&b)));
        let pulled = attempt!(c, "pullback", combo.pullback(&psi));
        let pu = attempt!(c, "pullback", u.pullback(&psi));
        let pv = attempt!(c, "pullback", v.pullback(&psi));
        let linear = attempt!(c, "add", pu.scale(&a).add(&pv.scale(&b)));
        c.series(
            what("pull-back linearity"),
            &linear,
            &pulled,
            pulled.bound(),
        );
        let naive = attempt!(c, "oracle", naive_pullback(&psi, &u, pu.bound()));
        c.check(naive.matches(&pu), || {
            format!("pull-back differs from the oracle, case {case}")
        });

        // Functoriality: (Φ∘Ψ)_♯ = Φ_♯Ψ_♯ and (Φ∘Ψ)^♯ = Ψ^♯Φ^♯.
        let k = random_monoid(&mut rng);
        let phi = random_morphism(&mut rng, &n, &k);
        let comp = attempt!(c, "compose", phi.compose(&psi));
        let direct = attempt!(c, "pushforward", f.pushforward(&comp));
        let stepwise = attempt!(c, "pushforward", pf.pushforward(&phi));
        c.series(
            what("push-forward functoriality"),
            &direct,
            &stepwise,
            direct.bound().min(stepwise.bound()),
        );
        let kb = rng.gen_range(0..=8);
        let w = random_series(&mut rng, &k, kb, int);
        let direct = attempt!(c, "pullback", w.pullback(&comp));
        let stepwise = attempt!(
            c,
            "pullback",
            attempt!(c, "pullback", w.pullback(&phi)).pullback(&psi)
        );
        c.series(
            what("pull-back functoriality"),
            &direct,
            &stepwise,
            direct.bound().min(stepwise.bound()),
        );

        // Exterior product associativity, compared after identifying
        // (M×N)×K with M×(N×K).
        let m1 = random_monoid_of_rank(&mut rng, 1);
        let f1 = random_series(&mut rng, &m1, bound, int);
        let m2 = random_monoid_of_rank(&mut rng, 1);
        let f2 = random_series(&mut rng, &m2, bound, int);
        let m3 = random_monoid_of_rank(&mut rng, 1);
        let f3 = random_series(&mut rng, &m3, bound, int);
        let lhs = f1.exterior(&f2).exterior(&f3);
        let rhs = f1.exterior(&f2.exterior(&f3));
        let rhs = attempt!(c, "relabel", rhs.relabeled(lhs.monoid().clone()));
        c.series(what("exterior associativity"), &lhs, &rhs, bound);

        // Closed-form expansion against the literal binomial product.
        let r = random_rational(&mut rng, &m);
        let dense = attempt!(c, "oracle", naive_expand(&r, bound));
        c.check(dense.matches(&r.expand(bound)), || {
            format!("expand differs from the oracle, case {case}")
        });
    }
}

fn random_rational(rng: &mut ChaCha8Rng, m: &GradedMonoid) -> RationalSeries {
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let e: Vec<u32> = (0..m.rank()).map(|_| rng.gen_range(0..=2)).collect();
        if e.iter().any(|&x| x > 0) {
            break MonoidElement::from(e);
        }
    };
    let numerator: Vec<(MonoidElement, BigInt)> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let e: Vec<u32> = (0..m.rank()).map(|_| rng.gen_range(0..=1)).collect();
            (MonoidElement::from(e), random_int(rng))
        })
        .collect();
    let denominator: Vec<(MonoidElement, u32)> = (0..rng.gen_range(0..=3))
        .map(|_| (nonzero(rng), rng.gen_range(1..=3)))
        .collect();
    RationalSeries::new(m.clone(), numerator, denominator).expect("valid closed form")
}

fn random_ranks(rng: &mut ChaCha8Rng, m: &GradedMonoid, bound: u64) -> GradedRanks {
    let density: f64 = rng.gen_range(0.1..=0.5);
    let mut pieces = Vec::new();
    for e in m.enumerate_up_to(bound) {
        if rng.gen_bool(density) {
            for k in 0..=rng.gen_range(0..=3u32) {
                pieces.push((e.clone(), k, rng.gen_range(0..=4)));
            }
        }
    }
    GradedRanks::new(m.clone(), bound, pieces).expect("pieces within the bound")
}

fn hilbert_euler(c: &mut Checker, config: &Config) {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x6111_b347);
    let minus_one = BigInt::from(-1);
    for case in 0..config.cases {
        let what = |law: &'static str| move || format!("{law}, case {case}");
        let m = random_monoid(&mut rng);
        let n = random_monoid(&mut rng);
        let psi = random_morphism(&mut rng, &m, &n);
        let bound = rng.gen_range(0..=8);

        // Polynomial-coefficient series directly.
        let f = random_series(&mut rng, &m, bound, random_poly);
        let pushed = attempt!(c, "pushforward", f.pushforward(&psi));
        let lhs = pushed.evaluate_polynomial_coefficients(&minus_one);
        let rhs = attempt!(
            c,
            "pushforward",
            f.evaluate_polynomial_coefficients(&minus_one)
                .pushforward(&psi)
        );
        c.series(
            what("evaluation commutes with push-forward"),
            &lhs,
            &rhs,
            lhs.bound(),
        );
        let g = random_series(&mut rng, &n, bound, random_poly);
        let pulled = attempt!(c, "pullback", g.pullback(&psi));
        let lhs = pulled.evaluate_polynomial_coefficients(&minus_one);
        let rhs = attempt!(
            c,
            "pullback",
            g.evaluate_polynomial_coefficients(&minus_one)
                .pullback(&psi)
        );
        c.series(
            what("evaluation commutes with pull-back"),
            &lhs,
            &rhs,
            lhs.bound(),
        );

        // Graded algebras: push and pull the rank tables, then compare
        // Hilbert and Euler series computed from them.
        let a = random_ranks(&mut rng, &m, bound);
        let pa = a.hilbert_series();
        c.series(
            what("E_A = P_A(-1)"),
            &a.euler_series(),
            &pa.evaluate_polynomial_coefficients(&minus_one),
            bound,
        );
        let pushed = attempt!(c, "pushforward", a.pushforward(&psi));
        let expected = attempt!(c, "pushforward", pa.pushforward(&psi));
        c.series(
            what("P of Ψ_♯A"),
            &expected,
            &pushed.hilbert_series(),
            pushed.bound(),
        );
        let expected = attempt!(c, "pushforward", a.euler_series().pushforward(&psi));
        c.series(
            what("E of Ψ_♯A"),
            &expected,
            &pushed.euler_series(),
            pushed.bound(),
        );
        let b = random_ranks(&mut rng, &n, bound);
        let pulled = attempt!(c, "pullback", b.pullback(&psi));
        let expected = attempt!(c, "pullback", b.hilbert_series().pullback(&psi));
        c.series(
            what("P of Ψ^♯B"),
            &expected,
            &pulled.hilbert_series(),
            pulled.bound(),
        );
        let expected = attempt!(c, "pullback", b.euler_series().pullback(&psi));
        c.series(
            what("E of Ψ^♯B"),
            &expected,
            &pulled.euler_series(),
            pulled.bound(),
        );
    }
}

/// Symbols named in the Euler-Chow tables with their dimensions.
const NAMED_SYMBOLS: [(&str, u32); 14] = [
    ("⟨0;0,1⟩^2", 0),
    ("⟨0;0,2⟩^2", 1),
    ("⟨1;0,1⟩^2", 1),
    ("⟨1;1,2⟩^2", 2),
    ("⟨2;0,2⟩^2", 2),
    ("⟨0,1⟩^3", 0),
    ("⟨0,2⟩^3", 1),
    ("⟨0,3⟩^3", 2),
    ("⟨1,2⟩^3", 2),
    ("⟨1,3⟩^3", 3),
    ("⟨0,2⟩^2", 1),
    ("⟨1,2⟩^2", 2),
    ("⟨1⟩^2", 1),
    ("⟨2⟩^2", 2),
];

fn schubert_combinatorics(c: &mut Checker) {
    let g13 = attempt!(c, "G(1,3)", FlagType::grassmannian(1, 3));
    let sizes: Vec<usize> = (0..=4).map(|p| basis(&g13, p).rank()).collect();
    c.check(sizes == [1, 1, 2, 1, 1], || {
        format!("G(1,3) basis sizes {sizes:?}")
    });

    for n in 1..=5u32 {
        for d in 0..=n {
            let ft = attempt!(c, "G(d,n)", FlagType::grassmannian(d, n));
            for p in 0..=ft.variety_dimension() + 1 {
                let count = basis_symbols(&ft, p).len() as u64;
                c.equal(
                    || format!("#basis(G({d},{n}), {p})"),
                    &partitions_in_box(d + 1, n - d, p),
                    &count,
                );
            }
        }
    }

    for (label, dim) in NAMED_SYMBOLS {
        let sym = attempt!(c, label, label.parse::<SchubertSymbol>());
        c.equal(|| format!("dim {label}"), &dim, &sym.dimension());
    }

    let mut two_step = vec![attempt!(c, "F(0,1;2)", FlagType::new(vec![0, 1], 2))];
    for d in 1..=3 {
        two_step.push(attempt!(c, "F(d-1,d;3)", FlagType::new(vec![d - 1, d], 3)));
    }
    for ft in &two_step {
        for sigma in enumerate_symbols(ft) {
            let image = attempt!(c, sigma, trace_phi(&sigma));
            c.equal(
                || format!("dim trace_phi({sigma})"),
                &(sigma.dimension() + 1),
                &image.dimension(),
            );
        }
    }

    for (i_type, j_type) in [((1, 2), (0, 2)), ((1, 3), (0, 3)), ((2, 3), (1, 3))] {
        let fi = attempt!(c, "G", FlagType::grassmannian(i_type.0, i_type.1));
        for sigma in enumerate_symbols(&fi) {
            let image = attempt!(c, sigma, inclusion_i(&sigma));
            c.equal(
                || format!("dim inclusion_i({sigma})"),
                &sigma.dimension(),
                &image.dimension(),
            );
        }
        let fj = attempt!(c, "G", FlagType::grassmannian(j_type.0, j_type.1));
        for sigma in enumerate_symbols(&fj) {
            let image = attempt!(c, sigma, inclusion_j(&sigma));
            c.equal(
                || format!("dim inclusion_j({sigma})"),
                &sigma.dimension(),
                &image.dimension(),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_map_to_criteria() {
        let mut all: Vec<u8> = Suite::NAMES[1..]
            .iter()
            .flat_map(|s| s.parse::<Suite>().unwrap().criteria().to_vec())
            .collect();
        all.sort();
        assert_eq!(all, Suite::All.criteria());
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn reports_render() {
        let ok = CriterionReport {
            id: 3,
            name: "x",
            checks: 2,
            failure: None,
        };
        assert_eq!(ok.to_string(), "PASS  criterion 3: x (2 checks)");
        assert!(run_criterion(9, &Config::default()).failure.is_some());
    }

    #[test]
    fn checker_keeps_first_failure() {
        let mut c = Checker::new();
        c.equal(|| "a".into(), &1, &2);
        c.equal(|| "b".into(), &3, &4);
        let r = c.finish(1, "t");
        assert_eq!(r.checks, 2);
        assert_eq!(r.failure.as_deref(), Some("a: expected 1, got 2"));
    }
}
