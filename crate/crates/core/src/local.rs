//! Local generating series of equivariant Hilbert schemes of points for the
//! cyclic action `sigma * (x, y) = (sigma x, sigma^N y)` of `Z_M` on `C^2`.
//!
//! The torus `C* x C*` commutes with the action, so the equivariant Hilbert
//! schemes carry a Bialynicki-Birula cell decomposition whose cells are
//! indexed by monomial ideals, i.e. partitions. A cell contributes
//! `L^dim`, where `dim` counts the `Z_M`-invariant monomials of the positive
//! part of the tangent space.
//!
//! Two variants are computed:
//! * [`Variant::InvariantLocus`]: all `Z_M`-invariant subschemes, every
//!   partition is a fixed point;
//! * [`Variant::MainComponent`]: the component dominating the symmetric
//!   product, whose fixed points are the partitions with equally many boxes
//!   of each weight.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::motivic::MotivicClass;
use crate::partitions::{core_counting_series, Partition, Partitions};
use crate::series::{LogSeries, MotivicSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// The `G`-invariant part of the Hilbert scheme.
    InvariantLocus,
    /// The component mapping birationally onto the symmetric product.
    MainComponent,
}

impl Variant {
    /// `1` or `2`.
    pub fn from_index(index: u8) -> Result<Self> {
        match index {
            1 => Ok(Variant::InvariantLocus),
            2 => Ok(Variant::MainComponent),
            other => Err(Error::InvalidParameter(format!(
                "variant must be 1 or 2, got {other}"
            ))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Variant::InvariantLocus => 1,
            Variant::MainComponent => 2,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Where the subschemes are supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Support {
    /// The fixed point `0`.
    Origin,
    /// The invariant line `{y = 0}`.
    Line,
}

impl std::str::FromStr for Support {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "origin" => Ok(Support::Origin),
            "line" => Ok(Support::Line),
            other => Err(Error::InvalidParameter(format!(
                "support must be 'origin' or 'line', got '{other}'"
            ))),
        }
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Support::Origin => "origin",
            Support::Line => "line",
        })
    }
}

/// `Z_M` acting by `(sigma x, sigma^N y)`, with `N` reduced into `0..M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupActionSpec {
    m: usize,
    n: usize,
    variant: Variant,
}

impl GroupActionSpec {
    pub fn new(m: usize, n: i64, variant: Variant) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("group order M must be at least 1".into()));
        }
        let n = n.rem_euclid(m as i64) as usize;
        Ok(Self { m, n, variant })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Whether the torus fixed point given by `p` lies in this variant.
    pub fn admits(&self, p: &Partition) -> bool {
        match self.variant {
            Variant::InvariantLocus => true,
            Variant::MainComponent => p.is_equidistributed(self.m, self.n),
        }
    }
}

impl fmt::Display for GroupActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M={} N={} variant={}", self.m, self.n, self.variant)
    }
}

/// Dimension of the Bialynicki-Birula cell of the fixed point `p`.
///
/// Counts the tangent monomials `lambda^(i-j-1) mu^(b_{i-1}-s-1)` with
/// `1 <= i <= j <= r` and `b_j <= s < b_{j-1}` (where `b_r = 0`) whose
/// weight `N (i-j-1) + (b_{i-1}-s-1)` vanishes mod `M`.
pub fn cell_dimension(p: &Partition, m: usize, n: usize) -> usize {
    assert!(m >= 1, "modulus must be positive");
    let b = p.parts();
    let r = b.len();
    let part = |idx: usize| if idx < r { b[idx] as i64 } else { 0 };
    let (m, n) = (m as i64, n as i64);
    let mut dim = 0;
    for i in 1..=r {
        let top = part(i - 1);
        for j in i..=r {
            let lambda = (i as i64) - (j as i64) - 1;
            for s in part(j)..part(j - 1) {
                if (n * lambda + (top - s - 1)).rem_euclid(m) == 0 {
                    dim += 1;
                }
            }
        }
    }
    dim
}

/// Series of subschemes supported on the invariant line `{y = 0}`:
/// the `T^k` coefficient sums `L^cell_dimension` over fixed points of size `k`.
pub fn line_local_series(spec: &GroupActionSpec, order: usize) -> MotivicSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut class = MotivicClass::zero();
        if spec.variant == Variant::InvariantLocus || k % spec.m == 0 {
            let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
            for p in Partitions::new(k).filter(|p| spec.admits(p)) {
                *counts.entry(cell_dimension(&p, spec.m, spec.n) as u32).or_default() += 1;
            }
            class = MotivicClass::from_terms(counts);
        }
        coeffs.push(class);
    }
    MotivicSeries::from_coeffs(coeffs)
}

/// `prod_{i>=1} 1 / (1 - L^(i-1) T^(m i))`: points of a smooth surface moved
/// freely by `Z_m`, with lengths counted upstairs.
pub fn smooth_point_series(m: usize, order: usize) -> MotivicSeries {
    assert!(m >= 1, "modulus must be positive");
    LogSeries::from_terms(order, (1..=order / m).map(|i| (m * i, i as u32 - 1, 1))).exp()
}

/// Punctual series of the plane, `prod_{i>=1} 1 / (1 - L^(i-1) T^i)`.
pub fn goettsche_product(order: usize) -> MotivicSeries {
    smooth_point_series(1, order)
}

/// Series of subschemes supported at the origin.
///
/// The line is the origin plus a free `Z_M`-orbit family whose quotient has
/// class `L - 1`, so the origin series is the line series times
/// `(smooth_point_series(M))^(1 - L)`.
pub fn origin_local_series(spec: &GroupActionSpec, order: usize) -> MotivicSeries {
    let line = line_local_series(spec, order);
    let one_minus_l = MotivicClass::from_ascending([1, -1]);
    let correction = smooth_point_series(spec.m, order)
        .pow(&one_minus_l)
        .expect("product series has unit constant term");
    &line * &correction
}

/// Local series in either support.
pub fn local_series(spec: &GroupActionSpec, support: Support, order: usize) -> MotivicSeries {
    match support {
        Support::Origin => origin_local_series(spec, order),
        Support::Line => line_local_series(spec, order),
    }
}

/// Closed products for the `A_{M-1}` action `N = -1`:
///
/// * line, variant 2: `prod 1/(1 - L^i T^(M i))^M`;
/// * line, variant 1: the `M`-core series times the above;
/// * origin, variant 2: `prod 1/((1 - L^i T^(M i))^(M-1) (1 - L^(i-1) T^(M i)))`;
/// * origin, variant 1: the `M`-core series times the above.
pub fn closed_form_a_type(m: usize, variant: Variant, support: Support, order: usize) -> MotivicSeries {
    assert!(m >= 1, "modulus must be positive");
    let mut log = LogSeries::new(order);
    for i in 1..=order / m {
        let (t, l) = (m * i, i as u32);
        match support {
            Support::Line => log.add_term(t, l, BigInt::from(m)),
            Support::Origin => {
                log.add_term(t, l, BigInt::from(m - 1));
                log.add_term(t, l - 1, BigInt::from(1));
            }
        }
    }
    let main = log.exp();
    match variant {
        Variant::MainComponent => main,
        Variant::InvariantLocus => &core_counting_series(m, order) * &main,
    }
}

/// Conjectured product for the invariant-locus origin series of `(M, N) = (3, 1)`:
/// `prod 1/((1 - L^(i-1) T^(3i-2)) (1 - L^i T^(3i-1)) (1 - L^(i-1) T^(3i)))`.
pub fn conjectured_product_3_1(order: usize) -> MotivicSeries {
    let mut log = LogSeries::new(order);
    for i in 1..=order.div_ceil(3) + 1 {
        let l = i as u32;
        log.add_term(3 * i - 2, l - 1, BigInt::from(1));
        log.add_term(3 * i - 1, l, BigInt::from(1));
        log.add_term(3 * i, l - 1, BigInt::from(1));
    }
    log.exp()
}

/// Log coefficients `p_i^{M,1}` of the main-component origin series for
/// `N = 1`, one row per `M`: `Log H = sum_i p_i(L) T^(M i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationTable {
    rows: BTreeMap<usize, Vec<MotivicClass>>,
}

/// A pair `M' < M''`, both `> i`, with `p_i^{M',1} != p_i^{M'',1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationViolation {
    pub i: usize,
    pub m_low: usize,
    pub m_high: usize,
    pub low: MotivicClass,
    pub high: MotivicClass,
}

impl StabilizationTable {
    /// `p_i^{M,1}` for `i = 1..=i_max`.
    pub fn row(&self, m: usize) -> Option<&[MotivicClass]> {
        self.rows.get(&m).map(Vec::as_slice)
    }

    /// `p_i^{M,1}`, with `i` starting at 1.
    pub fn get(&self, m: usize, i: usize) -> Option<&MotivicClass> {
        self.rows.get(&m).and_then(|row| row.get(i.checked_sub(1)?))
    }

    pub fn moduli(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Every pair of rows that disagrees at some `i` below both moduli.
    pub fn violations(&self) -> Vec<StabilizationViolation> {
        let mut out = Vec::new();
        let ms: Vec<usize> = self.rows.keys().copied().collect();
        for (a, &m_low) in ms.iter().enumerate() {
            for &m_high in &ms[a + 1..] {
                let (low_row, high_row) = (&self.rows[&m_low], &self.rows[&m_high]);
                for (idx, (low, high)) in low_row.iter().zip(high_row).enumerate() {
                    let i = idx + 1;
                    if i < m_low && low != high {
                        out.push(StabilizationViolation {
                            i,
                            m_low,
                            m_high,
                            low: low.clone(),
                            high: high.clone(),
                        });
                    }
                }
            }
        }
        out
    }
}

/// Builds `p_i^{M,1}` for `i <= i_max` from the Log of the enumerated
/// main-component origin series of each `(M, 1)`.
pub fn stabilization_table(i_max: usize, moduli: &[usize]) -> Result<StabilizationTable> {
    let mut rows = BTreeMap::new();
    for &m in moduli {
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "stabilization needs M >= 2, got {m}"
            )));
        }
        let order = m * i_max;
        let spec = GroupActionSpec::new(m, 1, Variant::MainComponent)?;
        let log = origin_local_series(&spec, order).log()?;
        if let Some(power) = log.support().into_iter().find(|i| i % m != 0) {
            return Err(Error::MalformedLog { m, power });
        }
        let row = (1..=i_max).map(|i| log.coefficient(m * i)).collect();
        rows.insert(m, row);
    }
    Ok(StabilizationTable { rows })
}
