//! Global equivariant series from stratification data.
//!
//! The quotient `X/G` is cut into constructible strata `Y` of constant
//! isotropy `H` and slice representation. Each stratum contributes its local
//! punctual series, with lengths scaled by the orbit size `|G|/|H|`, raised to
//! the class `[Y]` through the power structure; the global series is the
//! product over strata.

use crate::error::{Error, Result};
use crate::local::{origin_local_series, smooth_point_series, closed_form_a_type, GroupActionSpec, Support, Variant};
use crate::motivic::MotivicClass;
use crate::series::MotivicSeries;

/// The local series attached to a stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalSeriesRef {
    /// Enumerated origin series of a cyclic action on `C^2`.
    Origin(GroupActionSpec),
    /// `prod 1/(1 - L^(i-1) T^(M i))`, a smooth point with free orbit of size `M`.
    SmoothPointSurface { m: usize },
    /// Caller-supplied coefficients.
    Explicit(MotivicSeries),
}

impl LocalSeriesRef {
    /// The local series at `order`; explicit series keep their own order if shorter.
    pub fn resolve(&self, order: usize) -> MotivicSeries {
        match self {
            LocalSeriesRef::Origin(spec) => origin_local_series(spec, order),
            LocalSeriesRef::SmoothPointSurface { m } => smooth_point_series(*m, order),
            LocalSeriesRef::Explicit(s) => s.clone().truncate(order),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    /// Class `[Y]` of the stratum in the quotient.
    pub class: MotivicClass,
    pub local: LocalSeriesRef,
    /// Orbit size `|G|/|H|`; the local series is evaluated at `T^scale`.
    pub scale: usize,
}

impl Stratum {
    pub fn new(class: MotivicClass, local: LocalSeriesRef, scale: usize) -> Result<Self> {
        if scale == 0 {
            return Err(Error::InvalidParameter("stratum scale must be at least 1".into()));
        }
        Ok(Self { class, local, scale })
    }

    /// `local(T^scale)^class`.
    pub fn factor(&self, order: usize) -> Result<MotivicSeries> {
        if self.class.is_zero() {
            return Ok(MotivicSeries::one(order));
        }
        self.local
            .resolve(order)
            .substitute_power(self.scale)
            .pow(&self.class)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratificationSpec {
    strata: Vec<Stratum>,
    order: usize,
}

impl StratificationSpec {
    pub fn new(strata: Vec<Stratum>, order: usize) -> Result<Self> {
        if strata.is_empty() {
            return Err(Error::InvalidParameter("stratification has no strata".into()));
        }
        Ok(Self { strata, order })
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = order;
        self
    }

    /// Union with another stratification over the same order.
    pub fn union(mut self, other: StratificationSpec) -> Self {
        self.order = self.order.min(other.order);
        self.strata.extend(other.strata);
        self
    }
}

/// Product over strata of `local(T^scale)^[Y]`.
///
/// The result has the stratification's order unless an explicit local series is
/// shorter, in which case products truncate to it.
pub fn assemble(spec: &StratificationSpec) -> Result<MotivicSeries> {
    let mut out = MotivicSeries::one(spec.order);
    for stratum in &spec.strata {
        out = &out * &stratum.factor(spec.order)?;
    }
    Ok(out)
}

/// Generating series for `Z_M` acting on a smooth surface with `d` isolated
/// fixed points of type `A_{M-1}` and free elsewhere; `free_class` is the class
/// of the free part of the quotient.
pub fn corollary_surface(
    m: usize,
    fixed_points: usize,
    free_class: &MotivicClass,
    variant: Variant,
    order: usize,
) -> Result<MotivicSeries> {
    if m == 0 {
        return Err(Error::InvalidParameter("group order M must be at least 1".into()));
    }
    let fixed = closed_form_a_type(m, variant, Support::Origin, order)
        .pow(&MotivicClass::constant(fixed_points as i64))?;
    let free = smooth_point_series(m, order).pow(free_class)?;
    Ok(&fixed * &free)
}

/// Class of the free part of `CP^2 / Z_3` for `(x0 : sigma x1 : sigma^2 x2)`.
///
/// The torus-orbit stratification has 3 fixed points, 3 invariant lines
/// each contributing `L - 1` and the open torus contributing `(L - 1)^2`
/// downstairs; dropping the fixed points leaves `L^2 + L - 2`.
pub fn cp2_z3_free_class() -> MotivicClass {
    MotivicClass::from_ascending([-2, 1, 1])
}

/// Main-component series of `Z_3` acting on `CP^2` by `(x0 : sigma x1 : sigma^2 x2)`.
pub fn example_cp2_z3(order: usize) -> Result<MotivicSeries> {
    corollary_surface(3, 3, &cp2_z3_free_class(), Variant::MainComponent, order)
}

/// The same example as a stratification: three `A_2` points plus the free stratum.
pub fn cp2_z3_stratification(order: usize) -> StratificationSpec {
    let fixed = Stratum {
        class: MotivicClass::constant(3),
        local: LocalSeriesRef::Origin(
            GroupActionSpec::new(3, -1, Variant::MainComponent).expect("valid action"),
        ),
        scale: 1,
    };
    let free = Stratum {
        class: cp2_z3_free_class(),
        local: LocalSeriesRef::SmoothPointSurface { m: 3 },
        scale: 1,
    };
    StratificationSpec {
        strata: vec![fixed, free],
        order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::goettsche_product;
    use crate::series::LogSeries;

    fn cls(coeffs: &[i64]) -> MotivicClass {
        MotivicClass::from_ascending(coeffs.iter().copied())
    }

    fn plane_stratum(class: MotivicClass) -> Stratum {
        Stratum::new(class, LocalSeriesRef::Explicit(goettsche_product(10)), 1).unwrap()
    }

    #[test]
    fn affine_plane_from_its_point_series() {
        // [A^2] = L^2 : H_X = prod 1/(1 - L^(i+1) T^i).
        let spec = StratificationSpec::new(vec![plane_stratum(cls(&[0, 0, 1]))], 8).unwrap();
        let expected = LogSeries::from_terms(8, (1..=8).map(|i| (i, i as u32 + 1, 1))).exp();
        assert_eq!(assemble(&spec).unwrap(), expected);
    }

    #[test]
    fn line_class_exponent() {
        // (prod 1/(1 - L^(i-1) T^i))^L = prod 1/(1 - L^i T^i).
        let spec = StratificationSpec::new(vec![plane_stratum(cls(&[0, 1]))], 8).unwrap();
        let expected = LogSeries::from_terms(8, (1..=8).map(|i| (i, i as u32, 1))).exp();
        assert_eq!(assemble(&spec).unwrap(), expected);
    }

    #[test]
    fn zero_class_is_identity() {
        let spec = StratificationSpec::new(vec![plane_stratum(MotivicClass::zero())], 6).unwrap();
        assert_eq!(assemble(&spec).unwrap(), MotivicSeries::one(6));
    }

    #[test]
    fn equal_local_data_merges() {
        let a = cls(&[1, 2]);
        let b = cls(&[-1, 0, 1]);
        let split =
            StratificationSpec::new(vec![plane_stratum(a.clone()), plane_stratum(b.clone())], 9).unwrap();
        let merged = StratificationSpec::new(vec![plane_stratum(&a + &b)], 9).unwrap();
        assert_eq!(assemble(&split).unwrap(), assemble(&merged).unwrap());
    }

    #[test]
    fn scale_substitutes() {
        let mut coeffs = vec![MotivicClass::zero(); 7];
        coeffs[0] = cls(&[1]);
        coeffs[1] = cls(&[0, 1]);
        let local = LocalSeriesRef::Explicit(MotivicSeries::from_coeffs(coeffs));
        let st = Stratum::new(MotivicClass::one(), local, 3).unwrap();
        let s = assemble(&StratificationSpec::new(vec![st], 6).unwrap()).unwrap();
        assert_eq!(s.coeff(3), &cls(&[0, 1]));
        assert!(s.coeff(1).is_zero());
        assert!(s.coeff(6).is_zero());
    }

    #[test]
    fn invalid_inputs() {
        assert!(StratificationSpec::new(vec![], 3).is_err());
        assert!(Stratum::new(MotivicClass::one(), LocalSeriesRef::SmoothPointSurface { m: 1 }, 0).is_err());
        let bad = MotivicSeries::from_coeffs(vec![cls(&[2]), cls(&[1])]);
        let st = Stratum::new(MotivicClass::one(), LocalSeriesRef::Explicit(bad), 1).unwrap();
        let spec = StratificationSpec::new(vec![st], 1).unwrap();
        assert!(matches!(assemble(&spec), Err(Error::NonUnitConstantTerm(_))));
    }

    #[test]
    fn corollary_degenerations() {
        let s = corollary_surface(4, 0, &MotivicClass::zero(), Variant::InvariantLocus, 7).unwrap();
        assert_eq!(s, MotivicSeries::one(7));
        let x = cls(&[1, 1, 1]);
        let s = corollary_surface(1, 0, &x, Variant::MainComponent, 7).unwrap();
        assert_eq!(s, goettsche_product(7).pow(&x).unwrap());
    }

    #[test]
    fn cp2_example_low_terms() {
        let s = example_cp2_z3(6).unwrap();
        assert_eq!(s.coeff(3), &cls(&[1, 7, 1]));
        assert_eq!(s.coeff(6), &cls(&[1, 8, 36, 8, 1]));
        assert_eq!(assemble(&cp2_z3_stratification(6)).unwrap(), s);
    }
}
