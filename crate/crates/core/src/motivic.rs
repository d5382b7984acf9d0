//! Exact arithmetic in the polynomial subring `Z[L]` of the Grothendieck ring
//! of varieties, where `L` is the class of the affine line.
//!
//! Every class produced by the local and global computations of this crate
//! is a polynomial in `L` with integer coefficients. Coefficients are
//! arbitrary precision; degrees are nonnegative.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// A polynomial in the Lefschetz class `L` with integer coefficients.
///
/// Stored sparsely as `degree -> coefficient`; zero coefficients are never
/// stored, so structural equality is coefficient-wise equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MotivicClass {
    coeffs: BTreeMap<u32, BigInt>,
}

impl MotivicClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The class `L = [A^1]`.
    pub fn lefschetz() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c * L^degree`.
    pub fn monomial(degree: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Self { coeffs }
    }

    /// Builds a class from ascending coefficients: `coeffs[k]` multiplies `L^k`.
    pub fn from_ascending<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            out.add_term(k as u32, c.into());
        }
        out
    }

    /// Builds a class from `(degree, coefficient)` pairs; repeated degrees add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (d, c) in terms {
            out.add_term(d, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(One::is_one)
    }

    /// Highest power of `L` with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Adds `c * L^degree` in place.
    pub fn add_term(&mut self, degree: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(degree) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self * c * L^shift`.
    pub fn mul_monomial(&self, shift: u32, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&d, v)| (d + shift, v * c)).collect(),
        }
    }

    /// `self += other * c * L^shift`, the inner step of every series product.
    pub fn add_scaled(&mut self, other: &Self, shift: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (&d, v) in &other.coeffs {
            self.add_term(d + shift, v * c);
        }
    }

    /// Evaluates at `L := t`. At `t = 1` this is the Euler characteristic.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        // Horner over the sparse terms, highest degree first.
        let mut acc = BigInt::zero();
        let mut prev = None;
        for (&d, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev {
                acc *= num_traits::pow::pow(t.clone(), (p - d) as usize);
            }
            acc += c;
            prev = Some(d);
        }
        if let Some(p) = prev {
            acc *= num_traits::pow::pow(t.clone(), p as usize);
        }
        acc
    }

    /// Euler characteristic: the specialization `L := 1`.
    pub fn euler(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// True when the coefficient sequence reads the same from both ends,
    /// counting from the lowest to the highest nonzero degree.
    pub fn is_palindromic(&self) -> bool {
        let (Some(&lo), Some(hi)) = (self.coeffs.keys().next(), self.degree()) else {
            return true;
        };
        (lo..=hi).all(|d| self.coeff(d) == self.coeff(hi + lo - d))
    }
}

impl From<i64> for MotivicClass {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for MotivicClass {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a MotivicClass> for &MotivicClass {
    type Output = MotivicClass;

    fn add(self, rhs: &'a MotivicClass) -> MotivicClass {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> AddAssign<&'a MotivicClass> for MotivicClass {
    fn add_assign(&mut self, rhs: &'a MotivicClass) {
        for (&d, c) in &rhs.coeffs {
            self.add_term(d, c.clone());
        }
    }
}

impl<'a> Sub<&'a MotivicClass> for &MotivicClass {
    type Output = MotivicClass;

    fn sub(self, rhs: &'a MotivicClass) -> MotivicClass {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> SubAssign<&'a MotivicClass> for MotivicClass {
    fn sub_assign(&mut self, rhs: &'a MotivicClass) {
        for (&d, c) in &rhs.coeffs {
            self.add_term(d, -c);
        }
    }
}

impl Neg for &MotivicClass {
    type Output = MotivicClass;

    fn neg(self) -> MotivicClass {
        MotivicClass {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect(),
        }
    }
}

impl Neg for MotivicClass {
    type Output = MotivicClass;

    fn neg(self) -> MotivicClass {
        -&self
    }
}

impl<'a> Mul<&'a MotivicClass> for &MotivicClass {
    type Output = MotivicClass;

    fn mul(self, rhs: &'a MotivicClass) -> MotivicClass {
        let mut out = MotivicClass::zero();
        for (&d, c) in &self.coeffs {
            out.add_scaled(rhs, d, c);
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<MotivicClass> for MotivicClass {
            type Output = MotivicClass;

            fn $method(self, rhs: MotivicClass) -> MotivicClass {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $tr<&'a MotivicClass> for MotivicClass {
            type Output = MotivicClass;

            fn $method(self, rhs: &'a MotivicClass) -> MotivicClass {
                (&self).$method(rhs)
            }
        }

        impl $tr<MotivicClass> for &MotivicClass {
            type Output = MotivicClass;

            fn $method(self, rhs: MotivicClass) -> MotivicClass {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Sum for MotivicClass {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for MotivicClass {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

/// Renders as `c_k*L^k + ... + c_0` in descending degree, e.g. `L^2 + 7*L + 1`.
impl fmt::Display for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&d, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match d {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("L")?,
                1 => write!(f, "{mag}*L")?,
                _ if unit => write!(f, "L^{d}")?,
                _ => write!(f, "{mag}*L^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotivicClass({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse class at byte {position}: {message}")]
pub struct ParseClassError {
    pub position: usize,
    pub message: String,
}

/// Parses the rendering grammar: signed terms `c*L^k`, `c*L`, `L^k`, `L`
/// or integer literals, separated by `+` / `-`. The `*` is optional.
impl FromStr for MotivicClass {
    type Err = ParseClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TermParser { src: s.as_bytes(), pos: 0 }.parse()
    }
}

struct TermParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseClassError> {
        Err(ParseClassError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn parse(mut self) -> Result<MotivicClass, ParseClassError> {
        let mut out = MotivicClass::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                if first {
                    return self.err("empty input");
                }
                return Ok(out);
            }
            let mut negative = false;
            match self.peek() {
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    negative = true;
                    self.pos += 1;
                }
                _ if !first => return self.err("expected '+' or '-'"),
                _ => {}
            }
            self.skip_ws();
            let (degree, coeff) = self.term()?;
            out.add_term(degree, if negative { -coeff } else { coeff });
            first = false;
        }
    }

    fn term(&mut self) -> Result<(u32, BigInt), ParseClassError> {
        let coeff = self
            .digits()
            .map(|d| d.parse::<BigInt>().expect("ascii digits"));
        self.skip_ws();
        let mut saw_star = false;
        if self.peek() == Some(b'*') {
            if coeff.is_none() {
                return self.err("'*' without a coefficient");
            }
            self.pos += 1;
            saw_star = true;
            self.skip_ws();
        }
        if self.peek() != Some(b'L') {
            if saw_star {
                return self.err("expected 'L' after '*'");
            }
            return match coeff {
                Some(c) => Ok((0, c)),
                None => self.err("expected an integer or 'L'"),
            };
        }
        self.pos += 1;
        self.skip_ws();
        let mut degree = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let Some(d) = self.digits() else {
                return self.err("expected exponent after '^'");
            };
            degree = match d.parse::<BigInt>().ok().and_then(|v| v.to_u32()) {
                Some(v) => v,
                None => return self.err("exponent out of range"),
            };
        }
        Ok((degree, coeff.unwrap_or_else(BigInt::one)))
    }
}
