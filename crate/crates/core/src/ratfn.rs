//! The exact function field ℚ(i)(t): rational functions, Laurent
//! expansions at points of ℙ¹, residues, principal parts, partial
//! fractions, and divisors of functions.
//!
//! The point ∞ is handled through the chart change s = 1/t throughout;
//! residues at ∞ are residues of the 1-form f·dt, i.e. of −f(1/s)/s² ds.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::ExactError;
use crate::laurent::LaurentWindow;
use crate::poly::Poly;
use crate::scalar::{GaussianRational, Point};

/// Reduced rational function with monic denominator. Canonical: equality
/// of values is equality of representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead_inv = den.leading().unwrap().inv().unwrap();
        Ok(RationalFunction {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// The coordinate function `t`.
    pub fn t() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().map_or(true, |d| d == 0) && self.den.degree() == Some(0)
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at a finite point; `None` at a pole.
    pub fn eval(&self, a: &GaussianRational) -> Option<GaussianRational> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(a) / &d)
    }

    /// `f(1/s)` as an exact rational function of `s`.
    pub fn compose_inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let rn = self.num.reversed();
        let rd = self.den.reversed();
        if dd >= dn {
            let shift = Poly::monomial(GaussianRational::one(), dd - dn);
            Self::new(&rn * &shift, rd)
        } else {
            let shift = Poly::monomial(GaussianRational::one(), dn - dd);
            Self::new(rn, &rd * &shift)
        }
    }

    /// Order of vanishing at a point of ℙ¹ (negative at a pole).
    pub fn order_at(&self, p: &Point) -> Result<i64, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroFunction);
        }
        match p {
            Point::Finite(a) => {
                let mn = self.num.multiplicity_at(a).unwrap() as i64;
                let md = self.den.multiplicity_at(a).unwrap() as i64;
                Ok(mn - md)
            }
            Point::Infinity => {
                Ok(self.den.degree().unwrap() as i64 - self.num.degree().unwrap() as i64)
            }
        }
    }

    /// Exact Laurent coefficients of `f` at `p` on the window `[lo, hi]`.
    pub fn laurent_expand(&self, p: &Point, lo: i64, hi: i64) -> Result<LaurentWindow, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroFunction);
        }
        if hi < lo {
            return Err(ExactError::WindowBoundsInverted { lo, hi });
        }
        match p {
            Point::Finite(a) => self.laurent_at_finite(a, lo, hi),
            Point::Infinity => self.compose_inv()?.laurent_at_finite(&GaussianRational::zero(), lo, hi),
        }
    }

    fn laurent_at_finite(
        &self,
        a: &GaussianRational,
        lo: i64,
        hi: i64,
    ) -> Result<LaurentWindow, ExactError> {
        let n = self.num.shift(a);
        let d = self.den.shift(a);
        let k1 = valuation(&n);
        let k2 = valuation(&d);
        let ord = k1 as i64 - k2 as i64;
        let mut out = LaurentWindow::zeros(lo, hi)?;
        if hi < ord {
            return Ok(out);
        }
        let terms = (hi - ord + 1) as usize;
        let n_unit = strip_valuation(&n, k1);
        let d_unit = strip_valuation(&d, k2);
        let series = series_div(&n_unit, &d_unit, terms);
        for (k, c) in series.iter().enumerate() {
            let e = ord + k as i64;
            if e >= lo && e <= hi {
                out.set_coeff(e, c.clone())?;
            }
        }
        Ok(out)
    }

    /// Residue of the 1-form `f·dt` at a point of ℙ¹. At ∞ the chart
    /// change dt = −s⁻²ds is applied exactly.
    pub fn residue_at(&self, p: &Point) -> Result<GaussianRational, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroFunction);
        }
        match p {
            Point::Finite(a) => {
                let ord = self.order_at(p)?;
                if ord >= 0 {
                    return Ok(GaussianRational::zero());
                }
                Ok(self
                    .laurent_at_finite(a, -1, -1)?
                    .coeff(-1))
            }
            Point::Infinity => {
                // f(1/s)·(−1/s²), residue at s = 0.
                let g = self.compose_inv()?;
                let s2 = Poly::monomial(GaussianRational::one(), 2);
                let form = RationalFunction::new(-g.num.clone(), &g.den * &s2)?;
                form.residue_at(&Point::Finite(GaussianRational::zero()))
            }
        }
    }

    /// Polynomial part plus principal parts at the supplied roots of the
    /// denominator. Reassembly of the output reproduces `f` exactly.
    pub fn partial_fractions(
        &self,
        roots: &[GaussianRational],
    ) -> Result<(Poly, Vec<PrincipalPart>), ExactError> {
        let (poly_part, rem) = self.num.div_rem(&self.den);
        if rem.is_zero() {
            return Ok((poly_part, Vec::new()));
        }
        let mut work = self.den.clone();
        let mut mults: Vec<(GaussianRational, usize)> = Vec::new();
        for a in dedup(roots) {
            let m = work.multiplicity_at(&a).unwrap();
            if m > 0 {
                let lin = Poly::linear_root(&a).pow(m as u32);
                let (q, r) = work.div_rem(&lin);
                debug_assert!(r.is_zero());
                work = q;
                mults.push((a, m));
            }
        }
        if work.degree().unwrap_or(0) > 0 {
            return Err(ExactError::RootsInsufficient {
                remainder_degree: work.degree().unwrap(),
            });
        }
        let proper = RationalFunction::new(rem, self.den.clone())?;
        let mut parts = Vec::new();
        for (a, m) in mults {
            let w = proper.laurent_at_finite(&a, -(m as i64), -1)?;
            let coeffs: BTreeMap<u32, GaussianRational> = (1..=m as i64)
                .filter_map(|j| {
                    let c = w.coeff(-j);
                    (!c.is_zero()).then_some((j as u32, c))
                })
                .collect();
            if !coeffs.is_empty() {
                parts.push(PrincipalPart {
                    pole: Point::Finite(a),
                    coeffs,
                });
            }
        }
        Ok((poly_part, parts))
    }

    /// Divisor of zeros and poles over ℙ¹. The caller supplies candidate
    /// roots in ℚ(i); the kernel verifies them by exact division and
    /// refuses if an unresolved factor of positive degree remains.
    pub fn divisor_of(&self, roots: &[GaussianRational]) -> Result<FnDivisor, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroFunction);
        }
        let mut entries: BTreeMap<Point, i64> = BTreeMap::new();
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for a in dedup(roots) {
            let mn = num.multiplicity_at(&a).unwrap();
            let md = den.multiplicity_at(&a).unwrap();
            if mn > 0 {
                let (q, _) = num.div_rem(&Poly::linear_root(&a).pow(mn as u32));
                num = q;
            }
            if md > 0 {
                let (q, _) = den.div_rem(&Poly::linear_root(&a).pow(md as u32));
                den = q;
            }
            let ord = mn as i64 - md as i64;
            if ord != 0 {
                entries.insert(Point::Finite(a), ord);
            }
        }
        for leftover in [&num, &den] {
            if leftover.degree().unwrap_or(0) > 0 {
                return Err(ExactError::IrreducibleFactor {
                    degree: leftover.degree().unwrap(),
                });
            }
        }
        let ord_inf = self.order_at(&Point::Infinity)?;
        if ord_inf != 0 {
            entries.insert(Point::Infinity, ord_inf);
        }
        Ok(FnDivisor { entries })
    }
}

fn valuation(p: &Poly) -> usize {
    p.coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("valuation of zero polynomial")
}

fn strip_valuation(p: &Poly, k: usize) -> Poly {
    Poly::from_coeffs(p.coeffs()[k..].to_vec())
}

/// First `terms` coefficients of the power series `n/d` with `d(0) ≠ 0`.
fn series_div(n: &Poly, d: &Poly, terms: usize) -> Vec<GaussianRational> {
    let d0_inv = d.coeff(0).inv().expect("unit part with zero constant term");
    let mut out = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = n.coeff(k);
        for (j, c) in out.iter().enumerate().take(k) {
            let sub = &d.coeff(k - j) * c;
            acc = &acc - &sub;
        }
        out.push(&acc * &d0_inv);
    }
    out
}

fn dedup(roots: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut out: Vec<GaussianRational> = Vec::new();
    for r in roots {
        if !out.contains(r) {
            out.push(r.clone());
        }
    }
    out
}

impl<'a> Add for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl<'a> Sub for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl<'a> Mul for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl<'a> Div for &'a RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by the zero function.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num).unwrap()
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: RationalFunction) -> RationalFunction {
        &self / &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<'a> Neg for &'a RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A pole location with its finitely many negative Laurent coefficients:
/// the map `j ↦ A_j` for the local expansion Σ_j A_j·(t−a)^(−j), or
/// Σ_j A_j·s^(−j) in the chart s = 1/t when the pole is at ∞.
#[derive(Clone, PartialEq, Eq)]
pub struct PrincipalPart {
    pole: Point,
    coeffs: BTreeMap<u32, GaussianRational>,
}

impl PrincipalPart {
    pub fn new(
        pole: Point,
        coeffs: BTreeMap<u32, GaussianRational>,
    ) -> Result<Self, ExactError> {
        let coeffs: BTreeMap<u32, GaussianRational> =
            coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if coeffs.is_empty() {
            return Err(ExactError::Invalid(
                "principal part needs at least one nonzero coefficient".to_string(),
            ));
        }
        if coeffs.keys().any(|&j| j == 0) {
            return Err(ExactError::Invalid(
                "principal part exponents start at j = 1".to_string(),
            ));
        }
        Ok(PrincipalPart { pole, coeffs })
    }

    /// Simple pole `c/(t−a)` (or `c·t`-style at ∞).
    pub fn simple(pole: Point, c: GaussianRational) -> Result<Self, ExactError> {
        Self::new(pole, BTreeMap::from([(1, c)]))
    }

    pub fn pole(&self) -> &Point {
        &self.pole
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, GaussianRational> {
        &self.coeffs
    }

    pub fn coeff(&self, j: u32) -> GaussianRational {
        self.coeffs
            .get(&j)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Largest pole order m with A_m ≠ 0.
    pub fn order(&self) -> u32 {
        *self.coeffs.keys().next_back().unwrap()
    }

    /// The principal part as an exact rational function of `t`. A pole at
    /// ∞ with data Σ A_j·s^(−j) becomes the polynomial Σ A_j·t^j.
    pub fn as_rational_function(&self) -> RationalFunction {
        match &self.pole {
            Point::Finite(a) => {
                let m = self.order();
                let mut num = Poly::zero();
                let lin = Poly::linear_root(a);
                for (&j, c) in &self.coeffs {
                    num = &num + &lin.pow(m - j).scale(c);
                }
                RationalFunction::new(num, lin.pow(m)).unwrap()
            }
            Point::Infinity => {
                let mut coeffs = vec![GaussianRational::zero(); self.order() as usize + 1];
                for (&j, c) in &self.coeffs {
                    coeffs[j as usize] = c.clone();
                }
                RationalFunction::from_poly(Poly::from_coeffs(coeffs))
            }
        }
    }
}

impl fmt::Debug for PrincipalPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrincipalPart[{} -> {:?}]", self.pole, self.coeffs)
    }
}

/// Finite formal ℤ-combination of points of ℙ¹ attached to a function.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FnDivisor {
    entries: BTreeMap<Point, i64>,
}

impl FnDivisor {
    pub fn empty() -> Self {
        FnDivisor::default()
    }

    pub fn order_at(&self, p: &Point) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn entries(&self) -> &BTreeMap<Point, i64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Debug for FnDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FnDivisor{:?}", self.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as G;

    fn rf(num: Poly, den: Poly) -> RationalFunction {
        RationalFunction::new(num, den).unwrap()
    }

    fn one_over_t() -> RationalFunction {
        rf(Poly::one(), Poly::x())
    }

    #[test]
    fn laurent_identity_case() {
        // f = 1/t at 0, window [-2, 1] -> {-1: 1}
        let w = one_over_t()
            .laurent_expand(&Point::from_int(0), -2, 1)
            .unwrap();
        assert_eq!(w.coeff(-1), G::one());
        for e in [-2, 0, 1] {
            assert_eq!(w.coeff(e), G::zero());
        }
    }

    #[test]
    fn laurent_geometric_series() {
        // f = 1/(t(t-1)) at 0, [-1,1] -> {-1: -1, 0: -1, 1: -1}
        let den = &Poly::x() * &Poly::linear_root(&G::one());
        let f = rf(Poly::one(), den);
        let w = f.laurent_expand(&Point::from_int(0), -1, 1).unwrap();
        assert_eq!(w.coeff(-1), -G::one());
        assert_eq!(w.coeff(0), -G::one());
        assert_eq!(w.coeff(1), -G::one());
    }

    #[test]
    fn laurent_at_infinity() {
        // f = t^2 at infinity: in s = 1/t it is s^{-2}
        let f = RationalFunction::from_poly(Poly::monomial(G::one(), 2));
        let w = f.laurent_expand(&Point::Infinity, -2, 0).unwrap();
        assert_eq!(w.coeff(-2), G::one());
        assert_eq!(w.coeff(-1), G::zero());
        assert_eq!(w.coeff(0), G::zero());
    }

    #[test]
    fn zero_function_has_no_expansion() {
        assert!(matches!(
            RationalFunction::zero().laurent_expand(&Point::from_int(0), -1, 1),
            Err(ExactError::ZeroFunction)
        ));
    }

    #[test]
    fn residue_basics() {
        assert_eq!(
            one_over_t().residue_at(&Point::from_int(0)).unwrap(),
            G::one()
        );
        assert_eq!(
            one_over_t().residue_at(&Point::Infinity).unwrap(),
            -G::one()
        );
    }

    #[test]
    fn residue_at_i() {
        // f = 1/(t^2+1) at i -> 1/(2i) = -i/2
        let den = Poly::from_coeffs(vec![G::one(), G::zero(), G::one()]);
        let f = rf(Poly::one(), den);
        let expected = G::i().inv().unwrap() * G::from_frac(1, 2);
        assert_eq!(f.residue_at(&Point::Finite(G::i())).unwrap(), expected);
    }

    #[test]
    fn partial_fractions_two_poles() {
        // 1/(t(t-1)) = -1/t + 1/(t-1)
        let den = &Poly::x() * &Poly::linear_root(&G::one());
        let f = rf(Poly::one(), den);
        let (poly, parts) = f
            .partial_fractions(&[G::from_int(0), G::from_int(1)])
            .unwrap();
        assert!(poly.is_zero());
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].coeff(1), -G::one());
        assert_eq!(parts[1].coeff(1), G::one());
        // exact reassembly
        let back = parts
            .iter()
            .map(|p| p.as_rational_function())
            .fold(RationalFunction::from_poly(poly), |a, b| &a + &b);
        assert_eq!(back, f);
    }

    #[test]
    fn partial_fractions_with_polynomial_part() {
        // t^3/(t-2) = t^2 + 2t + 4 + 8/(t-2)
        let f = rf(Poly::monomial(G::one(), 3), Poly::linear_root(&G::from_int(2)));
        let (poly, parts) = f.partial_fractions(&[G::from_int(2)]).unwrap();
        assert_eq!(
            poly,
            Poly::from_coeffs(vec![G::from_int(4), G::from_int(2), G::one()])
        );
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].coeff(1), G::from_int(8));
    }

    #[test]
    fn partial_fractions_pure_polynomial() {
        let f = RationalFunction::from_poly(Poly::from_coeffs(vec![
            G::one(),
            G::zero(),
            G::one(),
        ]));
        let (poly, parts) = f.partial_fractions(&[]).unwrap();
        assert_eq!(poly, *f.num());
        assert!(parts.is_empty());
    }

    #[test]
    fn partial_fractions_missing_roots() {
        let den = &Poly::x() * &Poly::linear_root(&G::one());
        let f = rf(Poly::one(), den);
        assert!(matches!(
            f.partial_fractions(&[G::from_int(0)]),
            Err(ExactError::RootsInsufficient { remainder_degree: 1 })
        ));
    }

    #[test]
    fn divisor_of_t() {
        let d = RationalFunction::t().divisor_of(&[G::from_int(0)]).unwrap();
        assert_eq!(d.order_at(&Point::from_int(0)), 1);
        assert_eq!(d.order_at(&Point::Infinity), -1);
        assert_eq!(d.degree(), 0);
    }

    #[test]
    fn divisor_of_worked_instance() {
        // f = (t-1)^2/t -> {1: 2, 0: -1, inf: -1}, degree 0
        let f = rf(Poly::linear_root(&G::one()).pow(2), Poly::x());
        let d = f.divisor_of(&[G::from_int(0), G::from_int(1)]).unwrap();
        assert_eq!(d.order_at(&Point::from_int(1)), 2);
        assert_eq!(d.order_at(&Point::from_int(0)), -1);
        assert_eq!(d.order_at(&Point::Infinity), -1);
        assert_eq!(d.degree(), 0);
    }

    #[test]
    fn divisor_of_constant_is_empty() {
        let f = RationalFunction::constant(G::from_int(5));
        assert!(f.divisor_of(&[]).unwrap().is_empty());
    }

    #[test]
    fn divisor_irreducible_factor_detected() {
        // t^2 + 1 without roots supplied
        let f = RationalFunction::from_poly(Poly::from_coeffs(vec![
            G::one(),
            G::zero(),
            G::one(),
        ]));
        assert!(matches!(
            f.divisor_of(&[]),
            Err(ExactError::IrreducibleFactor { degree: 2 })
        ));
        // with its Q(i) roots it factors
        let d = f.divisor_of(&[G::i(), -G::i()]).unwrap();
        assert_eq!(d.order_at(&Point::Finite(G::i())), 1);
        assert_eq!(d.degree(), 0);
    }

    #[test]
    fn order_examples() {
        let t2 = RationalFunction::from_poly(Poly::monomial(G::one(), 2));
        assert_eq!(t2.order_at(&Point::from_int(0)).unwrap(), 2);
        let f = rf(Poly::one(), Poly::linear_root(&G::one()).pow(3));
        assert_eq!(f.order_at(&Point::from_int(1)).unwrap(), -3);
        let g = RationalFunction::from_poly(Poly::from_coeffs(vec![
            G::one(),
            G::zero(),
            G::one(),
        ]));
        assert_eq!(g.order_at(&Point::Finite(G::i())).unwrap(), 1);
    }

    #[test]
    fn principal_part_roundtrip_at_infinity() {
        // part s^{-2} at infinity is the polynomial t^2
        let part = PrincipalPart::new(
            Point::Infinity,
            BTreeMap::from([(2, G::one())]),
        )
        .unwrap();
        assert_eq!(
            part.as_rational_function(),
            RationalFunction::from_poly(Poly::monomial(G::one(), 2))
        );
    }
}
