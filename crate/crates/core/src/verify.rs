//! Self-contained verification suites.
//!
//! Each suite recomputes a family of series two independent ways (or against
//! reference coefficients) and records every compared coefficient. Results
//! are deterministic: randomized suites use a fixed seed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::global::{assemble, cp2_z3_stratification, example_cp2_z3};
use crate::local::{
    closed_form_a_type, conjectured_product_3_1, goettsche_product, line_local_series, local_series,
    stabilization_table, GroupActionSpec, Support, Variant,
};
use crate::motivic::MotivicClass;
use crate::partitions::Partitions;
use crate::series::{kapranov_zeta, MotivicSeries};

/// Seed of the randomized power-structure suite.
pub const POWER_AXIOM_SEED: u64 = 0x5eed_2009;

/// Reference `T^3, T^6, T^9, T^12` coefficients of the `CP^2 / Z_3` example,
/// ascending in `L`.
pub const CP2_Z3_REFERENCE: [(usize, &[i64]); 4] = [
    (3, &[1, 7, 1]),
    (6, &[1, 8, 36, 8, 1]),
    (9, &[1, 8, 44, 149, 44, 8, 1]),
    (12, &[1, 8, 45, 192, 543, 192, 45, 8, 1]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Theorem2,
    Goettsche,
    Conjecture31,
    Remark1,
    Stabilization,
    ExampleCp2,
    PowerAxioms,
    EulerCounts,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Theorem2,
        Check::Goettsche,
        Check::Conjecture31,
        Check::Remark1,
        Check::Stabilization,
        Check::ExampleCp2,
        Check::PowerAxioms,
        Check::EulerCounts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem2 => "theorem2",
            Check::Goettsche => "goettsche",
            Check::Conjecture31 => "conjecture-3-1",
            Check::Remark1 => "remark1",
            Check::Stabilization => "stabilization",
            Check::ExampleCp2 => "example-cp2",
            Check::PowerAxioms => "power-axioms",
            Check::EulerCounts => "euler-counts",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check '{s}'")))
    }
}

/// Optional overrides; `None` picks each suite's default.
#[derive(Clone, Debug, Default)]
pub struct VerifyParams {
    pub order: Option<usize>,
    /// Moduli for `theorem2` and `stabilization`.
    pub moduli: Option<Vec<usize>>,
    /// `(M, N1, N2)` triples for `remark1`.
    pub pairs: Option<Vec<(usize, i64, i64)>>,
}

/// One compared quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub check: Check,
    pub comparisons: Vec<Comparison>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(check: Check) -> Self {
        Self {
            check,
            comparisons: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| !c.passed)
    }

    fn compare<T: PartialEq + fmt::Display>(&mut self, label: impl Into<String>, expected: &T, actual: &T) -> bool {
        let passed = expected == actual;
        self.comparisons.push(Comparison {
            label: label.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed,
        });
        passed
    }

    /// One comparison per `T`-power up to the smaller order.
    fn compare_series(&mut self, label: &str, expected: &MotivicSeries, actual: &MotivicSeries) -> bool {
        let order = expected.order().min(actual.order());
        let mut ok = true;
        for k in 0..=order {
            ok &= self.compare(format!("{label} T^{k}"), expected.coeff(k), actual.coeff(k));
        }
        ok
    }

    fn compare_integers(&mut self, label: &str, expected: &[BigInt], actual: &[BigInt]) -> bool {
        let mut ok = true;
        for (k, (e, a)) in expected.iter().zip(actual).enumerate() {
            ok &= self.compare(format!("{label} T^{k}"), e, a);
        }
        ok
    }
}

pub fn run(check: Check, params: &VerifyParams) -> Result<Report> {
    match check {
        Check::Theorem2 => theorem2(params),
        Check::Goettsche => goettsche(params),
        Check::Conjecture31 => conjecture_3_1(params),
        Check::Remark1 => remark1(params),
        Check::Stabilization => stabilization(params),
        Check::ExampleCp2 => example_cp2(params),
        Check::PowerAxioms => power_axioms(params),
        Check::EulerCounts => euler_counts(params),
    }
}

fn variants() -> [Variant; 2] {
    [Variant::InvariantLocus, Variant::MainComponent]
}

/// Enumerated origin series at `M = 1` against `prod 1/(1 - L^(i-1) T^i)`.
fn goettsche(params: &VerifyParams) -> Result<Report> {
    let order = params.order.unwrap_or(12);
    let mut report = Report::new(Check::Goettsche);
    let expected = goettsche_product(order);
    for v in variants() {
        let spec = GroupActionSpec::new(1, 0, v)?;
        let actual = local_series(&spec, Support::Origin, order);
        report.compare_series(&format!("M=1 variant={v} origin"), &expected, &actual);
    }
    Ok(report)
}

/// Enumerated series for `N = -1` against the closed products, both supports.
fn theorem2(params: &VerifyParams) -> Result<Report> {
    let order = params.order.unwrap_or(12);
    let moduli = params.moduli.clone().unwrap_or_else(|| vec![2, 3, 4]);
    let mut report = Report::new(Check::Theorem2);
    for &m in &moduli {
        for v in variants() {
            let spec = GroupActionSpec::new(m, -1, v)?;
            for support in [Support::Origin, Support::Line] {
                let enumerated = local_series(&spec, support, order);
                let closed = closed_form_a_type(m, v, support, order);
                report.compare_series(&format!("M={m} variant={v} {support}"), &closed, &enumerated);
            }
        }
    }
    Ok(report)
}

fn conjecture_3_1(params: &VerifyParams) -> Result<Report> {
    let order = params.order.unwrap_or(21);
    let mut report = Report::new(Check::Conjecture31);
    let spec = GroupActionSpec::new(3, 1, Variant::InvariantLocus)?;
    let enumerated = local_series(&spec, Support::Origin, order);
    let product = conjectured_product_3_1(order);
    if report.compare_series("M=3 N=1 variant=1 origin", &product, &enumerated) {
        report.notes.push(format!("conjecture confirmed at order {order}"));
    } else {
        report.notes.push(format!("conjecture refuted at order {order}"));
    }
    Ok(report)
}

/// Origin series of `(M, N1)` and `(M, N2)` with `N1 N2 = 1 mod M` coincide.
fn remark1(params: &VerifyParams) -> Result<Report> {
    let pairs: Vec<((usize, i64, i64), usize)> = match &params.pairs {
        Some(p) => p.iter().map(|&t| (t, params.order.unwrap_or(21))).collect(),
        None => vec![
            ((5, 2, 3), params.order.unwrap_or(25)),
            ((7, 3, 5), params.order.unwrap_or(21)),
        ],
    };
    let mut report = Report::new(Check::Remark1);
    for ((m, n1, n2), order) in pairs {
        if (n1 * n2).rem_euclid(m as i64) != 1 % m as i64 {
            report
                .notes
                .push(format!("M={m}: {n1}*{n2} is not 1 mod {m}; equality is not predicted"));
        }
        for v in variants() {
            let a = local_series(&GroupActionSpec::new(m, n1, v)?, Support::Origin, order);
            let b = local_series(&GroupActionSpec::new(m, n2, v)?, Support::Origin, order);
            report.compare_series(&format!("M={m} N={n1} vs N={n2} variant={v} origin"), &a, &b);
        }
    }
    Ok(report)
}

/// `p_i^{M,1}` agree across moduli `M > i`.
fn stabilization(params: &VerifyParams) -> Result<Report> {
    let i_max = params.order.unwrap_or(4);
    let moduli = params.moduli.clone().unwrap_or_else(|| vec![5, 6, 7]);
    let table = stabilization_table(i_max, &moduli)?;
    let mut report = Report::new(Check::Stabilization);
    let ms: Vec<usize> = table.moduli().collect();
    for i in 1..=i_max {
        let eligible: Vec<usize> = ms.iter().copied().filter(|&m| m > i).collect();
        let Some((&base, rest)) = eligible.split_first() else {
            continue;
        };
        let reference = table.get(base, i).expect("row covers i_max");
        report.notes.push(format!("p_{i}^(M,1) = {reference} for M={base}"));
        for &m in rest {
            let other = table.get(m, i).expect("row covers i_max");
            report.compare(format!("p_{i}^({m},1) vs p_{i}^({base},1)"), reference, other);
        }
    }
    Ok(report)
}

fn example_cp2(params: &VerifyParams) -> Result<Report> {
    let order = params.order.unwrap_or(12).max(12);
    let mut report = Report::new(Check::ExampleCp2);
    let series = example_cp2_z3(order)?;
    for (k, known) in CP2_Z3_REFERENCE {
        let expected = MotivicClass::from_ascending(known.iter().copied());
        report.compare(format!("reference T^{k}"), &expected, series.coeff(k));
        report.compare(format!("T^{k} palindromic"), &true, &series.coeff(k).is_palindromic());
    }
    for k in (1..=order).filter(|k| k % 3 != 0) {
        report.compare(format!("T^{k} vanishes"), &MotivicClass::zero(), series.coeff(k));
    }
    let assembled = assemble(&cp2_z3_stratification(order))?;
    report.compare_series("corollary vs stratified assembly", &series, &assembled);
    Ok(report)
}

fn random_class(rng: &mut ChaCha8Rng, max_degree: u32, bound: i64) -> MotivicClass {
    MotivicClass::from_terms((0..=max_degree).map(|d| (d, rng.gen_range(-bound..=bound))))
}

fn random_unit_series(rng: &mut ChaCha8Rng, order: usize) -> MotivicSeries {
    let mut coeffs = vec![MotivicClass::one()];
    coeffs.extend((1..=order).map(|_| random_class(rng, 2, 3)));
    MotivicSeries::from_coeffs(coeffs)
}

/// Ordinary integer power, by repeated products (and an inverse for `n < 0`).
fn integer_power(a: &MotivicSeries, n: i64) -> Result<MotivicSeries> {
    let base = if n < 0 { a.inverse()? } else { a.clone() };
    let mut out = MotivicSeries::one(a.order());
    for _ in 0..n.unsigned_abs() {
        out = &out * &base;
    }
    Ok(out)
}

/// Power-structure laws on randomized inputs, plus the normalizations that
/// pin the power structure down on `Z[L]`.
fn power_axioms(params: &VerifyParams) -> Result<Report> {
    let order = params.order.unwrap_or(10);
    let trials = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(POWER_AXIOM_SEED);
    let mut report = Report::new(Check::PowerAxioms);
    for t in 0..trials {
        let a = random_unit_series(&mut rng, order);
        let b = random_unit_series(&mut rng, order);
        let m = random_class(&mut rng, 2, 2);
        let n = random_class(&mut rng, 1, 2);
        let int_exp: i64 = rng.gen_range(0..=4);
        let s: usize = rng.gen_range(2..=3);

        let am = a.pow(&m)?;
        let an = a.pow(&n)?;
        report.compare_series(&format!("trial {t}: a^(m+n) = a^m a^n"), &(&am * &an), &a.pow(&(&m + &n))?);
        report.compare_series(
            &format!("trial {t}: (ab)^m = a^m b^m"),
            &(&am * &b.pow(&m)?),
            &(&a * &b).pow(&m)?,
        );
        report.compare_series(&format!("trial {t}: (a^m)^n = a^(mn)"), &a.pow(&(&m * &n))?, &am.pow(&n)?);
        report.compare_series(
            &format!("trial {t}: a^{int_exp} = {int_exp}-fold product"),
            &integer_power(&a, int_exp)?,
            &a.pow(&MotivicClass::constant(int_exp))?,
        );
        let log = a.log()?;
        report.compare_series(&format!("trial {t}: exp(log a) = a"), &a, &log.exp());
        report.compare(
            format!("trial {t}: log(exp(log a)) = log a"),
            &log.to_string(),
            &log.exp().log()?.to_string(),
        );
        report.compare_series(
            &format!("trial {t}: a(T^{s})^m = (a^m)(T^{s})"),
            &am.substitute_power(s),
            &a.substitute_power(s).pow(&m)?,
        );
        let chi_m = i64::try_from(m.euler()).expect("small exponent");
        let a_chi = MotivicSeries::from_integers(a.euler());
        report.compare_integers(
            &format!("trial {t}: chi(a^m) = chi(a)^chi(m)"),
            &integer_power(&a_chi, chi_m)?.euler(),
            &am.euler(),
        );
    }
    // (1 - T)^(-L^s) = (1 - L^s T)^(-1).
    for s in 0..=3u32 {
        let lhs = kapranov_zeta(&MotivicClass::monomial(s, 1), order);
        let rhs = MotivicSeries::from_coeffs((0..=order).map(|k| MotivicClass::monomial(s * k as u32, 1)).collect());
        report.compare_series(&format!("(1-T)^(-L^{s}) = 1/(1-L^{s} T)"), &rhs, &lhs);
    }
    let zeta = kapranov_zeta(&MotivicClass::from_ascending([1, 1]), order);
    let projective = MotivicSeries::from_coeffs((0..=order).map(|k| MotivicClass::from_ascending(vec![1; k + 1])).collect());
    report.compare_series("zeta_(1+L) = sum [P^k] T^k", &projective, &zeta);
    report.notes.push(format!("seed {POWER_AXIOM_SEED:#x}, {trials} trials, order {order}"));
    Ok(report)
}

/// Partition numbers by Euler's pentagonal recurrence.
pub fn partition_numbers(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    out[0] = BigInt::one();
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for j in 1usize.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > k {
                break;
            }
            let term = &out[k - g1] + if j * (3 * j + 1) / 2 <= k { out[k - j * (3 * j + 1) / 2].clone() } else { BigInt::zero() };
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        out[k] = acc;
    }
    out
}

/// Euler characteristics of line series count the torus fixed points.
fn euler_counts(params: &VerifyParams) -> Result<Report> {
    let order = params.order.unwrap_or(20);
    let mut report = Report::new(Check::EulerCounts);
    let pn = partition_numbers(order);
    for (m, n) in [(1, 0), (2, 1), (3, 1), (3, 2), (4, 1), (5, 2)] {
        let spec = GroupActionSpec::new(m, n, Variant::InvariantLocus)?;
        report.compare_integers(
            &format!("M={m} N={n} variant=1 line: p(k)"),
            &pn,
            &line_local_series(&spec, order).euler(),
        );
        let spec = GroupActionSpec::new(m, n, Variant::MainComponent)?;
        let brute: Vec<BigInt> = (0..=order)
            .map(|k| {
                let count = Partitions::new(k)
                    .filter(|p| {
                        let w = p.box_weights(m, n as usize);
                        w.iter().all(|&c| c == w[0])
                    })
                    .count();
                BigInt::from(count)
            })
            .collect();
        report.compare_integers(
            &format!("M={m} N={n} variant=2 line: equidistributed count"),
            &brute,
            &line_local_series(&spec, order).euler(),
        );
    }
    Ok(report)
}
