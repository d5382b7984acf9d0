//! Truncated power series in `T` over `Z[L]`, with the power structure of the
//! Grothendieck ring.
//!
//! Every series with constant term 1 factors uniquely as
//! `prod_{i>=1, j>=0} (1 - L^j T^i)^(-k_ij)` with integer exponents `k_ij`.
//! [`LogSeries`] stores that exponent table. The power structure is linear on
//! it: `A(T)^m` is obtained by multiplying `Log A` by `m` in `Z[L]`, which is
//! the unique extension of `(1 - T)^(-L^s) = (1 - L^s T)^(-1)` that is
//! additive and multiplicative in the exponent.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::motivic::MotivicClass;

/// Power series `sum_{k=0}^{order} a_k T^k`, known exactly up to `T^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MotivicSeries {
    coeffs: Vec<MotivicClass>,
}

impl MotivicSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![MotivicClass::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, MotivicClass::one())
    }

    /// `class * T^power`; vanishes if `power > order`.
    pub fn monomial(order: usize, power: usize, class: MotivicClass) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = class;
        }
        s
    }

    /// Series whose order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<MotivicClass>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Self { coeffs }
    }

    /// Series with plain integer coefficients.
    pub fn from_integers<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::from_coeffs(coeffs.into_iter().map(MotivicClass::constant).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `T^k`.
    ///
    /// # Panics
    /// If `k > order`.
    pub fn coeff(&self, k: usize) -> &MotivicClass {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MotivicClass] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MotivicClass> {
        self.coeffs
    }

    /// Drops everything above `T^order`. Never extends.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn has_unit_constant(&self) -> bool {
        self.coeffs[0].is_one()
    }

    fn require_unit(&self) -> Result<()> {
        if self.has_unit_constant() {
            Ok(())
        } else {
            Err(Error::NonUnitConstantTerm(self.coeffs[0].clone()))
        }
    }

    /// Cauchy product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (a, x) in self.coeffs.iter().enumerate().take(order + 1) {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate().take(order + 1 - a) {
                if !y.is_zero() {
                    out.coeffs[a + b] += &(x * y);
                }
            }
        }
        out
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        self.require_unit()?;
        let order = self.order();
        let mut inv = Self::one(order);
        for n in 1..=order {
            let mut acc = MotivicClass::zero();
            for t in 1..=n {
                if !self.coeffs[t].is_zero() && !inv.coeffs[n - t].is_zero() {
                    acc -= &(&self.coeffs[t] * &inv.coeffs[n - t]);
                }
            }
            inv.coeffs[n] = acc;
        }
        Ok(inv)
    }

    /// `A(T^s)`, same order; terms pushed past the order are dropped.
    ///
    /// # Panics
    /// If `s == 0`.
    pub fn substitute_power(&self, s: usize) -> Self {
        assert!(s >= 1, "substitution T -> T^s needs s >= 1");
        let order = self.order();
        let mut out = Self::zero(order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * s > order {
                break;
            }
            out.coeffs[k * s] = c.clone();
        }
        out
    }

    /// Multiplies in place by `F(T^step)`, where `block[t]` is the coefficient of `u^t` in `F(u)`
    /// and `block[0] = 1`.
    fn mul_by_block(&mut self, step: usize, block: &[MotivicClass]) {
        let order = self.order();
        // Descending so that each source coefficient is still the old one.
        for n in (step..=order).rev() {
            let mut acc = MotivicClass::zero();
            for (t, f) in block.iter().enumerate().skip(1) {
                if t * step > n {
                    break;
                }
                if !f.is_zero() && !self.coeffs[n - t * step].is_zero() {
                    acc += &(f * &self.coeffs[n - t * step]);
                }
            }
            self.coeffs[n] += &acc;
        }
    }

    /// Multiplies in place by `prod_j (1 - L^j T^step)^(-k_j)` over the given `(j, k_j)`.
    pub fn mul_factors(&mut self, step: usize, factors: &[(u32, BigInt)]) {
        assert!(step >= 1, "factor exponent of T must be positive");
        if step > self.order() || factors.is_empty() {
            return;
        }
        let len = self.order() / step + 1;
        let block = factor_block(factors, len);
        self.mul_by_block(step, &block);
    }

    /// The unique exponent table with `exp(log(self)) = self` up to the order.
    ///
    /// Works degree by degree: the lowest surviving coefficient
    /// `sum_j c_j L^j` at `T^n` is recorded as `k_{n,j} = c_j`, then the
    /// residual is multiplied by `prod_j (1 - L^j T^n)^(c_j)` which clears it.
    pub fn log(&self) -> Result<LogSeries> {
        self.require_unit()?;
        let order = self.order();
        let mut residual = self.clone();
        let mut log = LogSeries::new(order);
        for n in 1..=order {
            let c = residual.coeffs[n].clone();
            if c.is_zero() {
                continue;
            }
            let cleared: Vec<(u32, BigInt)> = c.terms().map(|(j, k)| (j, -k)).collect();
            for (j, k) in c.terms() {
                log.add_term(n, j, k.clone());
            }
            residual.mul_factors(n, &cleared);
            debug_assert!(residual.coeffs[n].is_zero());
        }
        Ok(log)
    }

    /// The power structure `A(T)^m`.
    pub fn pow(&self, m: &MotivicClass) -> Result<Self> {
        self.require_unit()?;
        if m.is_zero() {
            return Ok(Self::one(self.order()));
        }
        if m.is_one() {
            return Ok(self.clone());
        }
        Ok(self.log()?.scale(m).exp())
    }

    /// Coefficient-wise Euler characteristic (`L := 1`).
    pub fn euler(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(MotivicClass::euler).collect()
    }

    /// Coefficient-wise evaluation at `L := t`.
    pub fn eval(&self, t: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval(t)).collect()
    }

    /// First `T`-power where the two series differ, up to the smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl Mul for &MotivicSeries {
    type Output = MotivicSeries;

    fn mul(self, rhs: &MotivicSeries) -> MotivicSeries {
        MotivicSeries::mul(self, rhs)
    }
}

impl Mul for MotivicSeries {
    type Output = MotivicSeries;

    fn mul(self, rhs: MotivicSeries) -> MotivicSeries {
        MotivicSeries::mul(&self, &rhs)
    }
}

/// One line per coefficient: `T^k: <class>` for `k = 0..=order`.
impl fmt::Display for MotivicSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "T^{k}: {c}")?;
        }
        Ok(())
    }
}

/// Coefficients of `u^0..u^{len-1}` in `prod_j (1 - L^j u)^(-k_j)`.
fn factor_block(factors: &[(u32, BigInt)], len: usize) -> Vec<MotivicClass> {
    let mut block = vec![MotivicClass::zero(); len];
    block[0] = MotivicClass::one();
    for (j, k) in factors {
        if k.is_zero() {
            continue;
        }
        let binom = negative_binomial(k, len);
        let mut next = vec![MotivicClass::zero(); len];
        for (a, x) in block.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (t, c) in binom.iter().enumerate().take(len - a) {
                next[a + t].add_scaled(x, j * t as u32, c);
            }
        }
        block = next;
    }
    block
}

/// Coefficients of `x^0..x^{len-1}` in `(1 - x)^(-k)` for any integer `k`:
/// `c_t = k (k+1) ... (k+t-1) / t!`, which terminates when `k <= 0`.
pub(crate) fn negative_binomial(k: &BigInt, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut c = BigInt::one();
    for t in 0..len {
        if t > 0 {
            c = c * (k + BigInt::from(t - 1)) / BigInt::from(t);
        }
        out.push(c.clone());
    }
    out
}

/// Exponent table `k_ij` of `A(T) = prod (1 - L^j T^i)^(-k_ij)`, with
/// `1 <= i <= order`. Read as the series `sum k_ij L^j T^i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LogSeries {
    order: usize,
    terms: BTreeMap<(usize, u32), BigInt>,
}

impl LogSeries {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a table from `(i, j, k_ij)` triples; repeated keys add up and
    /// factors with `i > order` are dropped since they act as the identity.
    pub fn from_terms<I, K>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, u32, K)>,
        K: Into<BigInt>,
    {
        let mut log = Self::new(order);
        for (i, j, k) in terms {
            log.add_term(i, j, k.into());
        }
        log
    }

    /// Adds `k L^j T^i`.
    ///
    /// # Panics
    /// If `i == 0`.
    pub fn add_term(&mut self, i: usize, j: u32, k: BigInt) {
        assert!(i >= 1, "Log terms start at T^1");
        if i > self.order || k.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_default();
        *entry += k;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero `((i, j), k_ij)` in increasing `i`, then `j`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(&key, k)| (key, k))
    }

    pub fn get(&self, i: usize, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// `sum_j k_ij L^j`, the coefficient of `T^i` in the Log series.
    pub fn coefficient(&self, i: usize) -> MotivicClass {
        MotivicClass::from_terms(
            self.terms
                .range((i, 0)..=(i, u32::MAX))
                .map(|(&(_, j), k)| (j, k.clone())),
        )
    }

    /// `T`-powers carrying a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.keys().map(|&(i, _)| i).collect();
        out.dedup();
        out
    }

    /// Sum of two tables; the order is the smaller of the two.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::new(order);
        for (&(i, j), k) in self.terms.iter().chain(&other.terms) {
            out.add_term(i, j, k.clone());
        }
        out
    }

    /// Multiplies the Log series by `m` in `Z[L]`.
    pub fn scale(&self, m: &MotivicClass) -> Self {
        let mut out = Self::new(self.order);
        for (&(i, j), k) in &self.terms {
            for (s, c) in m.terms() {
                out.add_term(i, j + s, k * c);
            }
        }
        out
    }

    /// `prod (1 - L^j T^i)^(-k_ij)` truncated at the order.
    pub fn exp(&self) -> MotivicSeries {
        let mut out = MotivicSeries::one(self.order);
        let mut by_power: BTreeMap<usize, Vec<(u32, BigInt)>> = BTreeMap::new();
        for (&(i, j), k) in &self.terms {
            by_power.entry(i).or_default().push((j, k.clone()));
        }
        for (i, factors) in by_power {
            out.mul_factors(i, &factors);
        }
        out
    }

    /// `L := 1` applied to each coefficient of the Log series.
    pub fn euler(&self) -> BTreeMap<usize, BigInt> {
        let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (&(i, _), k) in &self.terms {
            *out.entry(i).or_default() += k;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// True when every `k_ij` is nonnegative, i.e. the series is a product
    /// of geometric factors only.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|k| !k.is_negative())
    }
}

/// One line per nonzero coefficient: `T^i: <polynomial in L>`.
impl fmt::Display for LogSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, i) in self.support().into_iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "T^{i}: {}", self.coefficient(i))?;
        }
        Ok(())
    }
}

/// Kapranov zeta function `zeta_m(T) = (1 - T)^(-m) = sum [S^k M] T^k`.
pub fn kapranov_zeta(m: &MotivicClass, order: usize) -> MotivicSeries {
    let one_minus_t = MotivicSeries::from_integers((0..=order).map(|k| match k {
        0 => 1,
        1 => -1,
        _ => 0,
    }));
    one_minus_t
        .inverse()
        .and_then(|geometric| geometric.pow(m))
        .expect("1 - T has unit constant term")
}
