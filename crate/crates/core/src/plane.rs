//! Constructive Mittag-Leffler on plane domains.
//!
//! The construction follows the classical compact-exhaustion route:
//! K_n = {|z| ≤ n} ∩ {d(z, ℂ∖G) ≥ 1/n}, poles grouped by the first stage
//! that contains them, and each stage's principal-part sum replaced by a
//! rational function with poles on the target set E via pole pushing:
//! the pole walks toward its target in steps bounded by the distance to
//! K, re-expanding by a truncated geometric series at every step. Every
//! truncation carries an explicit geometric-tail bound, so the final
//! approximation error on K is certified, not sampled. All certified
//! bounds include a 10× safety factor over the accumulated tail sums.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex;
// float intrinsics come from libm in no_std builds
#[allow(unused_imports)]
use num_traits::Float;

pub type Complex64 = Complex<f64>;

/// Exact membership comparisons run to this floating tolerance.
pub const MEMBERSHIP_TOL: f64 = 1e-12;
/// Evaluation refuses points closer than this to a pole.
pub const POLE_EXCLUSION: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub enum PlaneError {
    PoleOutsideDomain(Complex64),
    /// No stage up to the cap contains this pole.
    PoleNotReached { pole: Complex64, n_max: u32 },
    /// Pole-push cannot start: the pole touches K.
    Blocked(Complex64),
    /// Truncation budget not met within the iteration caps.
    BudgetUnreachable,
    /// Target not in the pole's complement component of ℂ∞ ∖ K.
    WrongComponent,
    /// Evaluation point outside the certified region K_N.
    OutsideCertifiedRegion(Complex64),
    NearPole(Complex64),
    /// Contour radius violates the separation precondition.
    SeparationViolated,
    Invalid(String),
}

impl fmt::Display for PlaneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneError::PoleOutsideDomain(a) => write!(f, "pole {a} outside the open domain"),
            PlaneError::PoleNotReached { pole, n_max } => {
                write!(f, "pole {pole} not contained in any K_n up to n = {n_max}")
            }
            PlaneError::Blocked(b) => write!(f, "pole push blocked at {b}: no clearance from K"),
            PlaneError::BudgetUnreachable => write!(f, "truncation budget unreachable"),
            PlaneError::WrongComponent => {
                write!(f, "target not in the pole's component of the complement")
            }
            PlaneError::OutsideCertifiedRegion(z) => {
                write!(f, "point {z} outside the certified compact K_N")
            }
            PlaneError::NearPole(z) => write!(f, "point {z} inside a pole exclusion radius"),
            PlaneError::SeparationViolated => write!(f, "contour radius violates separation"),
            PlaneError::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for PlaneError {}

/// One point of the target pole set E ⊂ ℂ∞ ∖ G.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PoleTarget {
    Finite(Complex64),
    Infinity,
}

/// The four parametric domain families with exact distance-to-complement.
#[derive(Clone, Debug, PartialEq)]
pub enum DomainSpec {
    Plane,
    Disc { center: Complex64, radius: f64 },
    Annulus { center: Complex64, r_inner: f64, r_outer: f64 },
    /// {z : Re(conj(normal)·z) < offset}, `normal` a unit vector.
    HalfPlane { normal: Complex64, offset: f64 },
}

impl DomainSpec {
    pub fn unit_disc() -> Self {
        DomainSpec::Disc {
            center: Complex64::new(0.0, 0.0),
            radius: 1.0,
        }
    }

    /// d(z, ℂ∖G); +∞ for the full plane, ≤ 0 outside G.
    pub fn dist_to_complement(&self, z: Complex64) -> f64 {
        match self {
            DomainSpec::Plane => f64::INFINITY,
            DomainSpec::Disc { center, radius } => radius - (z - center).norm(),
            DomainSpec::Annulus {
                center,
                r_inner,
                r_outer,
            } => {
                let r = (z - center).norm();
                (r_outer - r).min(r - r_inner)
            }
            DomainSpec::HalfPlane { normal, offset } => offset - (normal.conj() * z).re,
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        self.dist_to_complement(z) > 0.0
    }

    /// One representative per connected component of ℂ∞ ∖ G.
    pub fn target_pole_set(&self) -> Vec<PoleTarget> {
        match self {
            DomainSpec::Annulus { center, .. } => {
                vec![PoleTarget::Finite(*center), PoleTarget::Infinity]
            }
            _ => vec![PoleTarget::Infinity],
        }
    }

    /// The target in the same complement component of ℂ∞ ∖ K_n as `b`
    /// (a point outside K_n). Everything outside the annulus hole belongs
    /// to the unbounded component.
    fn target_for(&self, b: Complex64, n: u32) -> PoleTarget {
        if let DomainSpec::Annulus {
            center, r_inner, ..
        } = self
        {
            if (b - center).norm() < r_inner + 1.0 / n as f64 {
                return PoleTarget::Finite(*center);
            }
        }
        PoleTarget::Infinity
    }
}

/// K_n = {|z| ≤ n} ∩ {d(z, ℂ∖G) ≥ 1/n}: an exact intersection of discs,
/// rings, and halfplanes.
#[derive(Clone, Debug)]
pub struct Exhaustion {
    pub domain: DomainSpec,
    pub n: u32,
}

pub fn exhaust(domain: &DomainSpec, n: u32) -> Exhaustion {
    assert!(n >= 1, "exhaustion index starts at 1");
    Exhaustion {
        domain: domain.clone(),
        n,
    }
}

impl Exhaustion {
    pub fn contains(&self, z: Complex64) -> bool {
        z.norm() <= self.n as f64 + MEMBERSHIP_TOL
            && self.domain.dist_to_complement(z) >= 1.0 / self.n as f64 - MEMBERSHIP_TOL
    }

    /// A certified lower bound on d(b, K_n): the max of the distances to
    /// the elementary regions whose intersection K_n is. Positive exactly
    /// when b lies outside K_n (up to the membership tolerance).
    pub fn dist_lower(&self, b: Complex64) -> f64 {
        let n = self.n as f64;
        let outer = b.norm() - n;
        let inner = match &self.domain {
            DomainSpec::Plane => f64::NEG_INFINITY,
            DomainSpec::Disc { center, radius } => (b - center).norm() - (radius - 1.0 / n),
            DomainSpec::Annulus {
                center,
                r_inner,
                r_outer,
            } => {
                let r = (b - center).norm();
                (r - (r_outer - 1.0 / n)).max((r_inner + 1.0 / n) - r)
            }
            DomainSpec::HalfPlane { normal, offset } => {
                (normal.conj() * b).re - (offset - 1.0 / n)
            }
        };
        outer.max(inner).max(0.0)
    }

    /// Upper bound on max_{z ∈ K_n} |z|.
    pub fn max_abs(&self) -> f64 {
        let n = self.n as f64;
        let family = match &self.domain {
            DomainSpec::Plane | DomainSpec::HalfPlane { .. } => f64::INFINITY,
            DomainSpec::Disc { center, radius } => center.norm() + radius - 1.0 / n,
            DomainSpec::Annulus {
                center, r_outer, ..
            } => center.norm() + r_outer - 1.0 / n,
        };
        n.min(family)
    }

    /// Points on (a superset of) ∂K_n that pass the membership test; used
    /// by nesting checks and sampled-sup oracles.
    pub fn boundary_samples(&self, per_curve: usize) -> Vec<Complex64> {
        let n = self.n as f64;
        let mut out = Vec::new();
        let circle = |c: Complex64, r: f64, out: &mut Vec<Complex64>, this: &Self| {
            if r <= 0.0 {
                return;
            }
            for q in 0..per_curve {
                let th = 2.0 * PI * q as f64 / per_curve as f64;
                let z = c + Complex64::new(r * th.cos(), r * th.sin());
                if this.contains_loose(z) {
                    out.push(z);
                }
            }
        };
        circle(Complex64::new(0.0, 0.0), n, &mut out, self);
        match &self.domain.clone() {
            DomainSpec::Plane => {}
            DomainSpec::Disc { center, radius } => {
                circle(*center, radius - 1.0 / n, &mut out, self);
            }
            DomainSpec::Annulus {
                center,
                r_inner,
                r_outer,
            } => {
                circle(*center, r_outer - 1.0 / n, &mut out, self);
                circle(*center, r_inner + 1.0 / n, &mut out, self);
            }
            DomainSpec::HalfPlane { normal, offset } => {
                // the clipped boundary line Re(conj(n)·z) = offset − 1/n
                let level = offset - 1.0 / n;
                let half_span2 = n * n - level * level;
                if half_span2 > 0.0 {
                    let t_max = half_span2.sqrt();
                    let tangent = normal * Complex64::new(0.0, 1.0);
                    for q in 0..per_curve {
                        let t = -t_max + 2.0 * t_max * q as f64 / (per_curve - 1).max(1) as f64;
                        let z = normal * level + tangent * t;
                        if self.contains_loose(z) {
                            out.push(z);
                        }
                    }
                }
            }
        }
        out
    }

    fn contains_loose(&self, z: Complex64) -> bool {
        z.norm() <= self.n as f64 + 1e-9
            && self.domain.dist_to_complement(z) >= 1.0 / self.n as f64 - 1e-9
    }
}

/// A pole with its finitely many principal-part coefficients:
/// Σ_{j=1}^{J} coeffs[j−1]·(z−pole)^(−j).
#[derive(Clone, Debug, PartialEq)]
pub struct FloatPrincipalPart {
    pub pole: Complex64,
    pub coeffs: Vec<Complex64>,
}

impl FloatPrincipalPart {
    pub fn simple(pole: Complex64, c: Complex64) -> Self {
        FloatPrincipalPart {
            pole,
            coeffs: vec![c],
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let w = (z - self.pole).inv();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut p = Complex64::new(1.0, 0.0);
        for c in &self.coeffs {
            p *= w;
            acc += c * p;
        }
        acc
    }
}

/// A rational function in explicit partial-fraction form: a polynomial
/// plus principal parts. After pushing, the parts sit on E only.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FloatRational {
    pub poly: Vec<Complex64>,
    pub parts: Vec<FloatPrincipalPart>,
}

impl FloatRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.poly.iter().rev() {
            acc = acc * z + c;
        }
        for p in &self.parts {
            acc += p.eval(z);
        }
        acc
    }

    fn add_assign(&mut self, rhs: &FloatRational) {
        if self.poly.len() < rhs.poly.len() {
            self.poly.resize(rhs.poly.len(), Complex64::new(0.0, 0.0));
        }
        for (a, b) in self.poly.iter_mut().zip(&rhs.poly) {
            *a += b;
        }
        for part in &rhs.parts {
            if let Some(mine) = self.parts.iter_mut().find(|p| p.pole == part.pole) {
                if mine.coeffs.len() < part.coeffs.len() {
                    mine.coeffs.resize(part.coeffs.len(), Complex64::new(0.0, 0.0));
                }
                for (a, b) in mine.coeffs.iter_mut().zip(&part.coeffs) {
                    *a += b;
                }
            } else {
                self.parts.push(part.clone());
            }
        }
    }
}

/// Stage assignment of poles: I_n = {k : a_k ∈ K_n ∖ K_{n−1}}.
#[derive(Clone, Debug)]
pub struct PoleGrouping {
    pub domain: DomainSpec,
    pub parts: Vec<FloatPrincipalPart>,
    /// stage_of[k] = the n with k ∈ I_n.
    pub stage_of: Vec<u32>,
    pub n_max: u32,
}

impl PoleGrouping {
    pub fn stage_indices(&self, n: u32) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&k| self.stage_of[k] == n)
            .collect()
    }
}

pub fn group_poles(
    parts: Vec<FloatPrincipalPart>,
    domain: &DomainSpec,
    n_max: u32,
) -> Result<PoleGrouping, PlaneError> {
    for (i, p) in parts.iter().enumerate() {
        if parts[..i].iter().any(|q| q.pole == p.pole) {
            return Err(PlaneError::Invalid(String::from("duplicate pole")));
        }
    }
    let mut stage_of = Vec::with_capacity(parts.len());
    for p in &parts {
        if domain.dist_to_complement(p.pole) <= MEMBERSHIP_TOL {
            return Err(PlaneError::PoleOutsideDomain(p.pole));
        }
        let stage = (1..=n_max).find(|&n| exhaust(domain, n).contains(p.pole));
        match stage {
            Some(n) => stage_of.push(n),
            None => {
                return Err(PlaneError::PoleNotReached {
                    pole: p.pole,
                    n_max,
                })
            }
        }
    }
    Ok(PoleGrouping {
        domain: domain.clone(),
        parts,
        stage_of,
        n_max,
    })
}

/// The pushed replacement for one principal part: a rational function
/// with its only pole on E, a certified sup-norm error bound on K, and
/// the pole-path waypoints.
#[derive(Clone, Debug)]
pub struct PushedApprox {
    pub rational: FloatRational,
    pub certified_bound: f64,
    pub path_log: Vec<Complex64>,
}

/// Upper bound on Σ_{k=k0}^∞ C(j+k−1, k)·q^k via the decreasing term
/// ratio q·(j+k)/(k+1); `None` when the ratio at k0 is still ≥ 1.
fn binom_tail(j: usize, q: f64, k0: usize) -> Option<f64> {
    if !(0.0..1.0).contains(&q) {
        return None;
    }
    let mut term = 1.0_f64;
    for k in 0..k0 {
        term *= q * (j as f64 + k as f64) / (k as f64 + 1.0);
    }
    let rho = q * (j + k0) as f64 / (k0 + 1) as f64;
    (rho < 1.0).then(|| term / (1.0 - rho))
}

const MAX_ORDER: usize = 600;
const MAX_STEPS: usize = 400;

/// One pole-move re-expansion: coefficients at pole b rewritten at
/// b + delta, truncated so the geometric tail on {|z − b−delta| ≥ d2} is
/// below `budget`. Returns the new coefficients and the tail bound.
fn reexpand(
    coeffs: &[Complex64],
    delta: Complex64,
    d2: f64,
    budget: f64,
) -> Result<(Vec<Complex64>, f64), PlaneError> {
    let j_max = coeffs.len();
    let q = delta.norm() / d2;
    if !(0.0..1.0).contains(&q) {
        return Err(PlaneError::BudgetUnreachable);
    }
    // grow the truncation order until the summed tails fit the budget;
    // when the ratio test is unusable at this order, the full-series sum
    // (1−q)^(−j) still bounds the tail
    let mut order = j_max + 8;
    let tail_at = |order: usize| -> Option<f64> {
        let mut total = 0.0;
        for (ji, c) in coeffs.iter().enumerate() {
            let j = ji + 1;
            if c.norm() == 0.0 {
                continue;
            }
            let full = (1.0 - q).powi(-(j as i32));
            let t = match binom_tail(j, q, order - j + 1) {
                Some(t) => t.min(full),
                None => full,
            };
            total += c.norm() * d2.powi(-(j as i32)) * t;
        }
        total.is_finite().then_some(total)
    };
    let tail = loop {
        match tail_at(order) {
            Some(t) if t <= budget => break t,
            _ if order >= MAX_ORDER => return Err(PlaneError::BudgetUnreachable),
            _ => order += 16,
        }
    };
    // c'_i = Σ_j c_j · C(i−1, i−j) · (−delta)^(i−j)
    let mut out = vec![Complex64::new(0.0, 0.0); order];
    for (ji, c) in coeffs.iter().enumerate() {
        let j = ji + 1;
        let mut factor = Complex64::new(1.0, 0.0); // C(j+k−1,k)(−delta)^k at k=0
        for k in 0..=(order - j) {
            out[j + k - 1] += c * factor;
            factor *= -delta * ((j + k) as f64 / (k + 1) as f64);
        }
    }
    Ok((out, tail))
}

/// Final step to ∞: Taylor sections of the principal part at b on
/// {|z| ≤ a_max}, valid once q = a_max/|b| < 1 (callers ensure q ≤ 1/2).
fn taylor_to_infinity(
    coeffs: &[Complex64],
    b: Complex64,
    a_max: f64,
    budget: f64,
) -> Result<(Vec<Complex64>, f64), PlaneError> {
    let q = a_max / b.norm();
    if !(0.0..1.0).contains(&q) {
        return Err(PlaneError::BudgetUnreachable);
    }
    let mut degree = 8;
    let tail_at = |degree: usize| -> Option<f64> {
        let mut total = 0.0;
        for (ji, c) in coeffs.iter().enumerate() {
            let j = ji + 1;
            if c.norm() == 0.0 {
                continue;
            }
            let full = (1.0 - q).powi(-(j as i32));
            let t = match binom_tail(j, q, degree + 1) {
                Some(t) => t.min(full),
                None => full,
            };
            total += c.norm() * b.norm().powi(-(j as i32)) * t;
        }
        total.is_finite().then_some(total)
    };
    let tail = loop {
        match tail_at(degree) {
            Some(t) if t <= budget => break t,
            _ if degree >= MAX_ORDER => return Err(PlaneError::BudgetUnreachable),
            _ => degree += 16,
        }
    };
    // coefficient of z^k: Σ_j c_j·(−1)^j·C(j+k−1,k)·b^(−j−k)
    let mut poly = vec![Complex64::new(0.0, 0.0); degree + 1];
    for (ji, c) in coeffs.iter().enumerate() {
        let j = ji + 1;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let mut factor = b.powi(-(j as i32)) * sign; // C(j+k−1,k) b^(−j−k), k = 0
        for (k, slot) in poly.iter_mut().enumerate() {
            *slot += c * factor;
            factor = factor / b * ((j + k) as f64 / (k + 1) as f64);
        }
    }
    Ok((poly, tail))
}

/// Drop trailing coefficients whose worst-case contribution on
/// {|z − b| ≥ d} fits the budget; returns the bound on what was cut.
/// Without this the re-expansion order snowballs from step to step.
fn prune(coeffs: &mut Vec<Complex64>, d: f64, budget: f64) -> f64 {
    let mut cut = 0.0;
    while coeffs.len() > 1 {
        let j = coeffs.len() as i32;
        let mag = coeffs.last().unwrap().norm();
        // d^(-j) can overflow for large j; a zero coefficient still
        // contributes nothing, and a non-finite bound must stop pruning
        // (0 * inf would otherwise leak NaN into the certificate)
        let add = if mag == 0.0 { 0.0 } else { mag * d.powi(-j) };
        if !add.is_finite() || cut + add > budget {
            break;
        }
        cut += add;
        coeffs.pop();
    }
    cut
}

pub fn push_pole(
    part: &FloatPrincipalPart,
    k: &Exhaustion,
    target: PoleTarget,
    eps: f64,
) -> Result<PushedApprox, PlaneError> {
    if k.domain.target_for(part.pole, k.n) != target {
        return Err(PlaneError::WrongComponent);
    }
    if let PoleTarget::Finite(t0) = target {
        if part.pole == t0 {
            return Ok(PushedApprox {
                rational: FloatRational {
                    poly: vec![],
                    parts: vec![part.clone()],
                },
                certified_bound: 0.0,
                path_log: vec![part.pole],
            });
        }
    }
    let mut b = part.pole;
    let mut coeffs = part.coeffs.clone();
    let mut path = vec![b];
    let mut tail_sum = 0.0;
    for step in 1..=MAX_STEPS {
        let budget = eps * 0.1 * 0.5_f64.powi(step as i32);
        let d = k.dist_lower(b);
        if d <= MEMBERSHIP_TOL {
            return Err(PlaneError::Blocked(b));
        }
        match target {
            PoleTarget::Finite(t0) => {
                let to_target = t0 - b;
                let d_target = k.dist_lower(t0);
                if to_target.norm() / d_target <= 0.5 {
                    // direct jump: re-expansion at t0 converges on K
                    let (c2, tail) = reexpand(&coeffs, to_target, d_target, budget)?;
                    tail_sum += tail;
                    path.push(t0);
                    return Ok(PushedApprox {
                        rational: FloatRational {
                            poly: vec![],
                            parts: vec![FloatPrincipalPart {
                                pole: t0,
                                coeffs: c2,
                            }],
                        },
                        certified_bound: 10.0 * tail_sum,
                        path_log: path,
                    });
                }
                let mut delta = to_target / to_target.norm() * (0.5 * d);
                // keep the re-expansion ratio safely below 1
                while delta.norm() / k.dist_lower(b + delta) > 0.6 {
                    delta *= 0.5;
                }
                let d2 = k.dist_lower(b + delta);
                let (mut c2, tail) = reexpand(&coeffs, delta, d2, 0.5 * budget)?;
                let cut = prune(&mut c2, d2, 0.5 * budget);
                coeffs = c2;
                b += delta;
                tail_sum += tail + cut;
                path.push(b);
            }
            PoleTarget::Infinity => {
                let a_max = k.max_abs();
                if b.norm() >= 2.0 * a_max {
                    let (poly, tail) = taylor_to_infinity(&coeffs, b, a_max, budget)?;
                    tail_sum += tail;
                    return Ok(PushedApprox {
                        rational: FloatRational {
                            poly,
                            parts: vec![],
                        },
                        certified_bound: 10.0 * tail_sum,
                        path_log: path,
                    });
                }
                let dir = if b.norm() > MEMBERSHIP_TOL {
                    b / b.norm()
                } else {
                    Complex64::new(1.0, 0.0)
                };
                let mut delta = dir * (0.5 * d);
                while delta.norm() / k.dist_lower(b + delta) > 0.6 {
                    delta *= 0.5;
                }
                let d2 = k.dist_lower(b + delta);
                let (mut c2, tail) = reexpand(&coeffs, delta, d2, 0.5 * budget)?;
                let cut = prune(&mut c2, d2, 0.5 * budget);
                coeffs = c2;
                b += delta;
                tail_sum += tail + cut;
                path.push(b);
            }
        }
    }
    Err(PlaneError::BudgetUnreachable)
}

/// One term of the series: the stage's principal parts and, for n ≥ 2,
/// the pushed correction R_n with its certified bound on K_{n−1}.
#[derive(Clone, Debug)]
pub struct Stage {
    pub n: u32,
    pub parts: Vec<FloatPrincipalPart>,
    pub correction: Option<FloatRational>,
    pub certified_bound: f64,
}

/// The assembled series f = f₁ + Σ_{n≥2} [f_n − R_n] truncated at N.
#[derive(Clone, Debug)]
pub struct MLSeries {
    pub domain: DomainSpec,
    pub n_trunc: u32,
    pub stages: Vec<Stage>,
    /// Σ_{n>N} 2⁻ⁿ = 2⁻ᴺ.
    pub tail_bound: f64,
}

impl MLSeries {
    pub fn poles(&self) -> impl Iterator<Item = &FloatPrincipalPart> {
        self.stages.iter().flat_map(|s| s.parts.iter())
    }

    /// The raw truncated sum without certification checks; the backbone
    /// of both `evaluate` and the contour verification.
    pub fn eval_raw(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for stage in &self.stages {
            for p in &stage.parts {
                acc += p.eval(z);
            }
            if let Some(r) = &stage.correction {
                acc -= r.eval(z);
            }
        }
        acc
    }
}

pub fn assemble(
    grouping: &PoleGrouping,
    n_trunc: u32,
) -> Result<MLSeries, PlaneError> {
    let max_stage = grouping.stage_of.iter().copied().max().unwrap_or(1);
    if n_trunc < max_stage {
        return Err(PlaneError::Invalid(String::from(
            "truncation below the last pole-bearing stage",
        )));
    }
    let mut stages = Vec::new();
    for n in 1..=n_trunc {
        let idx = grouping.stage_indices(n);
        let parts: Vec<FloatPrincipalPart> =
            idx.iter().map(|&k| grouping.parts[k].clone()).collect();
        if parts.is_empty() {
            continue;
        }
        let (correction, certified_bound) = if n == 1 {
            (None, 0.0)
        } else {
            let prev = exhaust(&grouping.domain, n - 1);
            let stage_budget = 0.5_f64.powi(n as i32);
            let per_part = stage_budget / parts.len() as f64;
            let mut r = FloatRational::zero();
            let mut bound = 0.0;
            for p in &parts {
                let target = grouping.domain.target_for(p.pole, n - 1);
                let pushed = push_pole(p, &prev, target, per_part)?;
                r.add_assign(&pushed.rational);
                bound += pushed.certified_bound;
            }
            (Some(r), bound)
        };
        stages.push(Stage {
            n,
            parts,
            correction,
            certified_bound,
        });
    }
    Ok(MLSeries {
        domain: grouping.domain.clone(),
        n_trunc,
        stages,
        tail_bound: 0.5_f64.powi(n_trunc as i32),
    })
}

/// Truncated value with its certified tail bound; requires z ∈ K_N and
/// outside the pole exclusion radii.
pub fn evaluate(series: &MLSeries, z: Complex64) -> Result<(Complex64, f64), PlaneError> {
    if !exhaust(&series.domain, series.n_trunc).contains(z) {
        return Err(PlaneError::OutsideCertifiedRegion(z));
    }
    for p in series.poles() {
        if (z - p.pole).norm() < POLE_EXCLUSION {
            return Err(PlaneError::NearPole(z));
        }
    }
    Ok((series.eval_raw(z), series.tail_bound))
}

/// Laurent coefficient extraction on the circle |w − a| = ρ by the
/// trapezoid rule: ĉ_{−j} = (1/Q)·Σ_q f(a + ρe^{iθ_q})·ρ^j·e^{ijθ_q}.
/// Returns max_j |ĉ_{−j} − A_j| / max(1, |A_j|).
pub fn verify_principal_part(
    series: &MLSeries,
    part: &FloatPrincipalPart,
    rho: f64,
    q_samples: usize,
) -> Result<f64, PlaneError> {
    if q_samples < 64 {
        return Err(PlaneError::Invalid(String::from("need at least 64 samples")));
    }
    let a = part.pole;
    let sep_domain = series.domain.dist_to_complement(a);
    let sep_poles = series
        .poles()
        .filter(|p| p.pole != a)
        .map(|p| (p.pole - a).norm())
        .fold(f64::INFINITY, f64::min);
    if rho >= sep_domain || rho >= sep_poles || rho <= 0.0 {
        return Err(PlaneError::SeparationViolated);
    }
    let mut worst = 0.0_f64;
    for (ji, c) in part.coeffs.iter().enumerate() {
        let j = (ji + 1) as i32;
        let mut acc = Complex64::new(0.0, 0.0);
        for q in 0..q_samples {
            let th = 2.0 * PI * q as f64 / q_samples as f64;
            let w = Complex64::new(0.0, th * j as f64).exp() * rho.powi(j);
            let z = a + Complex64::new(rho * th.cos(), rho * th.sin());
            acc += series.eval_raw(z) * w;
        }
        acc /= q_samples as f64;
        let err = (acc - c).norm() / c.norm().max(1.0);
        worst = worst.max(err);
    }
    Ok(worst)
}
