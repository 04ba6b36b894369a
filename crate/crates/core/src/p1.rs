//! Divisors and sheaf cohomology on ℙ¹ over ℚ(i).
//!
//! The standard two-chart cover U₁ = {t finite}, U₂ = {s = 1/t finite}
//! carries 𝒪(D) and Ω¹ as Čech data with degree-window truncation: each
//! section space is cut to a finite exponent window and the ranks are
//! certified by recomputing at a strictly larger window. On top of that
//! sit Riemann-Roch verification, linear equivalence with witnesses,
//! Mittag-Leffler distributions with their obstruction cocycles, and the
//! ℙⁿ Betti/Hodge reference tables.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cech::{build_complex, cohomology, CechError, Nerve, SheafDatum};
use crate::error::ExactError;
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::ratfn::{PrincipalPart, RationalFunction};
use crate::scalar::{GaussianRational, Point};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P1Error {
    /// Cohomology ranks changed between window M and M + step.
    WindowUnstable {
        m: i64,
        ranks_m: Vec<usize>,
        ranks_next: Vec<usize>,
    },
    /// Policy window below the mandatory minimum for the divisor.
    WindowTooSmall { m: i64, required: i64 },
    /// Two principal parts at the same point.
    DuplicatePole(Point),
    /// A 1-form pole coincides with a distribution pole.
    CoincidentSingularity(Point),
    Invalid(String),
    Exact(ExactError),
    Cech(CechError),
}

impl fmt::Display for P1Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Error::WindowUnstable { m, ranks_m, ranks_next } => write!(
                f,
                "window too small: ranks {ranks_m:?} at M = {m} vs {ranks_next:?} at the next window"
            ),
            P1Error::WindowTooSmall { m, required } => {
                write!(f, "window M = {m} below the required minimum {required}")
            }
            P1Error::DuplicatePole(p) => write!(f, "duplicate pole at {p}"),
            P1Error::CoincidentSingularity(p) => {
                write!(f, "1-form and distribution share the singularity {p}")
            }
            P1Error::Invalid(msg) => write!(f, "{msg}"),
            P1Error::Exact(e) => write!(f, "{e}"),
            P1Error::Cech(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for P1Error {}

impl From<ExactError> for P1Error {
    fn from(e: ExactError) -> Self {
        P1Error::Exact(e)
    }
}

impl From<CechError> for P1Error {
    fn from(e: CechError) -> Self {
        P1Error::Cech(e)
    }
}

/// Finite formal ℤ-combination of points of ℙ¹.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DivisorP1 {
    entries: BTreeMap<Point, i64>,
}

impl DivisorP1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Point, i64)>) -> Self {
        let mut map: BTreeMap<Point, i64> = BTreeMap::new();
        for (p, n) in entries {
            *map.entry(p).or_insert(0) += n;
        }
        map.retain(|_, n| *n != 0);
        DivisorP1 { entries: map }
    }

    pub fn single(p: Point, n: i64) -> Self {
        Self::from_entries([(p, n)])
    }

    pub fn entries(&self) -> &BTreeMap<Point, i64> {
        &self.entries
    }

    pub fn order_at(&self, p: &Point) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.entries.values().all(|&n| n >= 0)
    }

    pub fn total_abs(&self) -> i64 {
        self.entries.values().map(|n| n.abs()).sum()
    }

    pub fn add(&self, rhs: &DivisorP1) -> DivisorP1 {
        DivisorP1::from_entries(
            self.entries
                .iter()
                .chain(rhs.entries.iter())
                .map(|(p, &n)| (p.clone(), n)),
        )
    }

    pub fn neg(&self) -> DivisorP1 {
        DivisorP1::from_entries(self.entries.iter().map(|(p, &n)| (p.clone(), -n)))
    }

    /// Image under the Möbius involution t ↦ 1/t: swaps 0 and ∞ and sends
    /// a finite nonzero point a to 1/a.
    pub fn mobius_inverted(&self) -> DivisorP1 {
        DivisorP1::from_entries(self.entries.iter().map(|(p, &n)| {
            let q = match p {
                Point::Infinity => Point::from_int(0),
                Point::Finite(a) if a.is_zero() => Point::Infinity,
                Point::Finite(a) => Point::Finite(a.inv().unwrap()),
            };
            (q, n)
        }))
    }
}

impl fmt::Debug for DivisorP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivisorP1{:?}", self.entries)
    }
}

/// Degree-window cut-off for the truncated section spaces, with the
/// stabilization re-check distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationPolicy {
    pub window: i64,
    pub stabilization_step: i64,
}

impl TruncationPolicy {
    pub fn new(window: i64) -> Self {
        TruncationPolicy {
            window,
            stabilization_step: 1,
        }
    }

    /// Smallest admissible window for `d`: Σ|n_x| + 3.
    pub fn for_divisor(d: &DivisorP1) -> Self {
        Self::new(d.total_abs() + 3)
    }

    pub fn validate_for(&self, d: &DivisorP1) -> Result<(), P1Error> {
        let required = d.total_abs() + 3;
        if self.window < required {
            return Err(P1Error::WindowTooSmall {
                m: self.window,
                required,
            });
        }
        if self.stabilization_step < 1 {
            return Err(P1Error::Invalid("stabilization step must be >= 1".into()));
        }
        Ok(())
    }
}

/// A section space cut to the exponent window `[lo, hi]` in `t`, carved
/// out by vanishing conditions; `basis` vectors live in window
/// coordinates (index e − lo).
struct WindowSubspace {
    lo: i64,
    hi: i64,
    basis: Vec<Vec<GaussianRational>>,
}

impl WindowSubspace {
    /// Conditions are (point a, vanishing order m) with a ≠ 0 whenever
    /// lo < 0; vanishing of the windowed function at a is equivalent to
    /// vanishing of t^(−lo) times it, which is an honest polynomial.
    fn new(lo: i64, hi: i64, conditions: &[(GaussianRational, u32)]) -> Self {
        let n = (hi - lo + 1) as usize;
        let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
        for (a, order) in conditions {
            debug_assert!(lo >= 0 || !a.is_zero());
            for k in 0..*order {
                let row = (0..n)
                    .map(|j| {
                        if (j as u32) < k {
                            return GaussianRational::zero();
                        }
                        // k-th derivative of t^j at a: j·(j−1)…(j−k+1)·a^(j−k)
                        let mut c = GaussianRational::one();
                        for m in 0..k {
                            c = &c * &GaussianRational::from_int(j as i64 - m as i64);
                        }
                        &c * &a.pow(j as u32 - k)
                    })
                    .collect();
                rows.push(row);
            }
        }
        let basis = if rows.is_empty() {
            (0..n)
                .map(|j| {
                    let mut e = vec![GaussianRational::zero(); n];
                    e[j] = GaussianRational::one();
                    e
                })
                .collect()
        } else {
            Matrix::from_rows(rows).kernel_basis()
        };
        WindowSubspace { lo, hi, basis }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of the inclusion of this space into `target`, written in the
    /// two kernel bases. Panics if a basis vector does not lie in the
    /// target (the chart/overlap windows are arranged so it always does).
    fn restriction_to(&self, target: &WindowSubspace) -> Matrix {
        let tn = (target.hi - target.lo + 1) as usize;
        let b = Matrix::from_fn(tn, target.dim(), |i, j| target.basis[j][i].clone());
        let offset = (self.lo - target.lo) as usize;
        let embedded: Vec<Vec<GaussianRational>> = self
            .basis
            .iter()
            .map(|v| {
                let mut e = vec![GaussianRational::zero(); tn];
                for (k, c) in v.iter().enumerate() {
                    e[offset + k] = c.clone();
                }
                e
            })
            .collect();
        // one shared elimination for the whole basis
        let sols = b
            .solve_many(&embedded)
            .expect("section fails to restrict into the overlap space");
        let mut out = Matrix::zeros(target.dim(), self.dim());
        for (j, x) in sols.into_iter().enumerate() {
            for (i, c) in x.into_iter().enumerate() {
                out[(i, j)] = c;
            }
        }
        out
    }
}

/// The truncated two-chart model of 𝒪(D) at window M: sections are g/P
/// with P = Π_{n_a>0, a finite} (t−a)^{n_a} and g ranging over an
/// exponent window with forced zeros at the negative-coefficient points.
fn od_datum_at(d: &DivisorP1, m: i64) -> (Nerve, SheafDatum) {
    let deg_p: i64 = d
        .entries
        .iter()
        .filter(|(p, &n)| !p.is_infinity() && n > 0)
        .map(|(_, &n)| n)
        .sum();
    let n_inf = d.order_at(&Point::Infinity);
    let neg_conditions = |include_zero: bool| -> Vec<(GaussianRational, u32)> {
        d.entries
            .iter()
            .filter_map(|(p, &n)| match p {
                Point::Finite(a) if n < 0 && (include_zero || !a.is_zero()) => {
                    Some((a.clone(), (-n) as u32))
                }
                _ => None,
            })
            .collect()
    };
    // U₁ = {t finite}: g polynomial of degree ≤ M, zeros at every finite
    // negative point. U₂ = {t ≠ 0}: window [−M, deg P + n_∞] (the top end
    // enforces ord_∞ ≥ −n_∞), zeros at finite negative points other than
    // 0. The overlap drops the condition at 0 and at ∞ but keeps the rest.
    let u1 = WindowSubspace::new(0, m, &neg_conditions(true));
    let u2 = WindowSubspace::new(-m, deg_p + n_inf, &neg_conditions(false));
    let u12 = WindowSubspace::new(-m, m.max(deg_p + n_inf), &neg_conditions(false));

    let nerve = Nerve::new(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
    let mut datum = SheafDatum::new();
    datum.set_dim(vec![0], u1.dim());
    datum.set_dim(vec![1], u2.dim());
    datum.set_dim(vec![0, 1], u12.dim());
    datum.set_restriction(vec![0], vec![0, 1], u1.restriction_to(&u12));
    datum.set_restriction(vec![1], vec![0, 1], u2.restriction_to(&u12));
    (nerve, datum)
}

fn ranks_of(nerve: &Nerve, datum: &SheafDatum) -> Result<Vec<usize>, P1Error> {
    let cx = build_complex(nerve, datum)?;
    Ok(cohomology(&cx).ranks)
}

/// Čech datum for 𝒪(D) on the standard cover, with the window-stability
/// certificate: ranks at M and M + step must agree.
pub fn od_cech_datum(
    d: &DivisorP1,
    policy: &TruncationPolicy,
) -> Result<(Nerve, SheafDatum), P1Error> {
    policy.validate_for(d)?;
    let (nerve, datum) = od_datum_at(d, policy.window);
    let ranks_m = ranks_of(&nerve, &datum)?;
    let next = policy.window + policy.stabilization_step;
    let (nerve2, datum2) = od_datum_at(d, next);
    let ranks_next = ranks_of(&nerve2, &datum2)?;
    if ranks_m != ranks_next {
        return Err(P1Error::WindowUnstable {
            m: policy.window,
            ranks_m,
            ranks_next,
        });
    }
    Ok((nerve, datum))
}

/// (h⁰, h¹) of 𝒪(D).
pub fn od_cohomology(d: &DivisorP1, policy: &TruncationPolicy) -> Result<(usize, usize), P1Error> {
    let (nerve, datum) = od_cech_datum(d, policy)?;
    let ranks = ranks_of(&nerve, &datum)?;
    Ok((ranks[0], ranks[1]))
}

const OMEGA1_DEFAULT_WINDOW: i64 = 8;

fn omega1_datum_at(m: i64, with_jacobian: bool) -> (Nerve, SheafDatum) {
    // C⁰ = {f(t)dt : deg f ≤ M} ⊕ {g(s)ds : deg g ≤ M}; the overlap is a
    // Laurent window of dt-coefficients. The chart change is
    // s^k ds = −t^(−k−2) dt; dropping the Jacobian factor t^(−2) is the
    // deliberate-bug variant used as a negative control.
    let n = (m + 1) as usize;
    let lo = -m - 2;
    let hi = m;
    let cols = (hi - lo + 1) as usize;
    let nerve = Nerve::new(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
    let mut datum = SheafDatum::new();
    datum.set_dim(vec![0], n);
    datum.set_dim(vec![1], n);
    datum.set_dim(vec![0, 1], cols);
    let mut r1 = Matrix::zeros(cols, n);
    for k in 0..n {
        r1[((k as i64 - lo) as usize, k)] = GaussianRational::one();
    }
    let mut r2 = Matrix::zeros(cols, n);
    for k in 0..n {
        let target = if with_jacobian {
            -(k as i64) - 2
        } else {
            -(k as i64)
        };
        r2[((target - lo) as usize, k)] = -GaussianRational::one();
    }
    datum.set_restriction(vec![0], vec![0, 1], r1);
    datum.set_restriction(vec![1], vec![0, 1], r2);
    (nerve, datum)
}

/// Cohomology ranks of Ω¹ on ℙ¹ at the given window, stability-checked.
/// `with_jacobian = false` omits the t^(−2) chart-change factor and is
/// exposed only as a negative control for the test suite.
pub fn omega1_cech_with(m: i64, with_jacobian: bool) -> Result<Vec<usize>, P1Error> {
    if m < 2 {
        return Err(P1Error::WindowTooSmall { m, required: 2 });
    }
    let (nerve, datum) = omega1_datum_at(m, with_jacobian);
    let ranks_m = ranks_of(&nerve, &datum)?;
    let (nerve2, datum2) = omega1_datum_at(m + 1, with_jacobian);
    let ranks_next = ranks_of(&nerve2, &datum2)?;
    if ranks_m != ranks_next {
        return Err(P1Error::WindowUnstable {
            m,
            ranks_m,
            ranks_next,
        });
    }
    Ok(ranks_m)
}

/// (h⁰, h¹) of Ω¹ on ℙ¹ — the ranks are (0, 1): no global algebraic
/// 1-forms, and Ȟ¹ ≅ ℂ spanned by dt/t.
pub fn omega1_cech() -> Result<Vec<usize>, P1Error> {
    omega1_cech_with(OMEGA1_DEFAULT_WINDOW, true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiemannRochReport {
    pub genus: i64,
    pub degree: i64,
    pub h0: i64,
    pub h1: i64,
    /// h⁰ − h¹.
    pub lhs: i64,
    /// 1 − g + deg D.
    pub rhs: i64,
    pub holds: bool,
    /// Closed form for the degree-equivalent divisor d[∞]: max(0, d+1).
    pub closed_h0: i64,
    /// Closed form: max(0, −d−1).
    pub closed_h1: i64,
}

pub fn riemann_roch_check(d: &DivisorP1) -> Result<RiemannRochReport, P1Error> {
    let policy = TruncationPolicy::for_divisor(d);
    let (h0, h1) = od_cohomology(d, &policy)?;
    let (h0, h1) = (h0 as i64, h1 as i64);
    let degree = d.degree();
    let lhs = h0 - h1;
    let rhs = 1 + degree;
    Ok(RiemannRochReport {
        genus: 0,
        degree,
        h0,
        h1,
        lhs,
        rhs,
        holds: lhs == rhs,
        closed_h0: (degree + 1).max(0),
        closed_h1: (-degree - 1).max(0),
    })
}

/// On ℙ¹ two divisors are linearly equivalent iff their degrees agree;
/// the witness f with (f) = D − D' is Π (t−a)^(n_a − n'_a) over the
/// finite points, with ∞ absorbing the degree balance automatically.
pub fn linear_equivalence(d1: &DivisorP1, d2: &DivisorP1) -> Option<RationalFunction> {
    if d1.degree() != d2.degree() {
        return None;
    }
    let diff = d1.add(&d2.neg());
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (p, &n) in diff.entries() {
        if let Point::Finite(a) = p {
            let factor = Poly::linear_root(a).pow(n.unsigned_abs() as u32);
            if n > 0 {
                num = &num * &factor;
            } else {
                den = &den * &factor;
            }
        }
    }
    Some(RationalFunction::new(num, den).unwrap())
}

/// A Mittag-Leffler distribution on ℙ¹: finitely many principal parts at
/// pairwise distinct points. The induced cover is one small chart per
/// pole plus the big complementary chart, so each chart contains at most
/// one pole.
#[derive(Clone, Debug)]
pub struct MLDistribution {
    parts: Vec<PrincipalPart>,
}

impl MLDistribution {
    pub fn new(parts: Vec<PrincipalPart>) -> Result<Self, P1Error> {
        for (i, p) in parts.iter().enumerate() {
            if parts[..i].iter().any(|q| q.pole() == p.pole()) {
                return Err(P1Error::DuplicatePole(p.pole().clone()));
            }
        }
        Ok(MLDistribution { parts })
    }

    pub fn parts(&self) -> &[PrincipalPart] {
        &self.parts
    }

    pub fn poles(&self) -> impl Iterator<Item = &Point> {
        self.parts.iter().map(|p| p.pole())
    }
}

/// One global coordinate of the partial-fraction model: the constant, a
/// positive power t^e (the block of a pole at ∞), or (t−a)^(−j).
#[derive(Clone, Debug, PartialEq, Eq)]
enum PfCoord {
    Const,
    PosPow(u32),
    NegPow(GaussianRational, u32),
}

impl PfCoord {
    fn as_rational_function(&self) -> RationalFunction {
        match self {
            PfCoord::Const => RationalFunction::one(),
            PfCoord::PosPow(e) => {
                RationalFunction::from_poly(Poly::monomial(GaussianRational::one(), *e as usize))
            }
            PfCoord::NegPow(a, j) => {
                RationalFunction::new(Poly::one(), Poly::linear_root(a).pow(*j)).unwrap()
            }
        }
    }
}

/// Result of the obstruction computation for a distribution μ: the
/// cover's cohomology ranks, the cocycle δμ in C¹ coordinates, and —
/// since H¹(ℙ¹, 𝒪) = 0 — the coboundary witness together with the global
/// solution −g₀ it induces.
#[derive(Clone, Debug)]
pub struct MLObstruction {
    pub ranks: Vec<usize>,
    pub cocycle: Vec<GaussianRational>,
    pub class_is_zero: bool,
    pub witness: Vec<GaussianRational>,
    pub solution: RationalFunction,
}

/// Represents δμ = (f_i − f_j) as an exact 1-cocycle on the star cover
/// and solves for its coboundary witness.
///
/// The section spaces are spanned by global partial-fraction coordinates
/// {1} ∪ {t^e} ∪ {(t−a)^(−j)}, so every restriction map is a coordinate
/// inclusion and the obstruction is one exact linear solve.
pub fn ml_obstruction(mu: &MLDistribution) -> Result<MLObstruction, P1Error> {
    let n_poles = mu.parts.len();
    // global coordinate list, one block per pole, constant first
    let mut coords = vec![PfCoord::Const];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for part in &mu.parts {
        let mut block = Vec::new();
        for &j in part.coeffs().keys() {
            block.push(coords.len());
            match part.pole() {
                Point::Finite(a) => coords.push(PfCoord::NegPow(a.clone(), j)),
                Point::Infinity => coords.push(PfCoord::PosPow(j)),
            }
        }
        blocks.push(block);
    }
    let dim = coords.len();

    // nerve: big chart 0, small charts 1..=n, overlaps (0, k) only
    let mut faces: Vec<Vec<usize>> = (0..=n_poles).map(|k| vec![k]).collect();
    for k in 1..=n_poles {
        faces.push(vec![0, k]);
    }
    let nerve = Nerve::new(n_poles + 1, faces)?;

    // chart k = 1..=n omits its own pole block; chart 0 sees every block
    // (the poles are outside it) but no coordinate is excluded there
    let chart_coords = |k: usize| -> Vec<usize> {
        (0..dim)
            .filter(|&c| k == 0 || !blocks[k - 1].contains(&c))
            .collect()
    };
    let mut datum = SheafDatum::new();
    for k in 0..=n_poles {
        datum.set_dim(vec![k], chart_coords(k).len());
    }
    for k in 1..=n_poles {
        datum.set_dim(vec![0, k], dim);
        for chart in [0, k] {
            let cs = chart_coords(chart);
            let mut r = Matrix::zeros(dim, cs.len());
            for (col, &c) in cs.iter().enumerate() {
                r[(c, col)] = GaussianRational::one();
            }
            datum.set_restriction(vec![chart], vec![0, k], r);
        }
    }
    let cx = build_complex(&nerve, &datum)?;
    let report = cohomology(&cx);

    // δμ on the overlap (0, k): f_k − f_0 with f_k the principal part
    // itself and f_0 = 0, written in block-k coordinates
    let mut cocycle = vec![GaussianRational::zero(); cx.dim(1)];
    for (k, part) in mu.parts.iter().enumerate() {
        let off = cx
            .face_offset(&vec![0, k + 1])
            .expect("overlap face present");
        for (slot, (_, c)) in blocks[k].iter().zip(part.coeffs().iter()) {
            cocycle[off + slot] = c.clone();
        }
    }
    let delta0 = cx.delta(0).expect("two-term complex");
    let witness = delta0.solve(&cocycle);
    let class_is_zero = witness.is_some();
    let witness = witness.ok_or_else(|| {
        P1Error::Invalid("nonzero obstruction class on P1 (inconsistent input)".into())
    })?;
    // global solution: f = f_0 − g_0 = −g_0 on the big chart
    let g0_coords = chart_coords(0);
    let off0 = cx.face_offset(&vec![0]).unwrap();
    let mut solution = RationalFunction::zero();
    for (col, &c) in g0_coords.iter().enumerate() {
        let coeff = -witness[off0 + col].clone();
        if !coeff.is_zero() {
            let term = coords[c].as_rational_function();
            solution = &solution + &(&RationalFunction::constant(coeff) * &term);
        }
    }
    Ok(MLObstruction {
        ranks: report.ranks,
        cocycle,
        class_is_zero,
        witness,
        solution,
    })
}

/// The canonical global solution: the sum of the finite principal parts
/// plus the polynomial realizing the part at ∞.
pub fn ml_solve(mu: &MLDistribution) -> RationalFunction {
    mu.parts
        .iter()
        .map(|p| p.as_rational_function())
        .fold(RationalFunction::zero(), |a, b| &a + &b)
}

/// ω = f·dt in the t-chart; in the s-chart it is −f(1/s)·s^(−2) ds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeromorphicOneForm {
    pub coefficient: RationalFunction,
}

impl MeromorphicOneForm {
    pub fn new(coefficient: RationalFunction) -> Self {
        MeromorphicOneForm { coefficient }
    }

    /// dt itself.
    pub fn dt() -> Self {
        Self::new(RationalFunction::one())
    }

    /// Order of the form at a point: at ∞ the chart change contributes −2.
    pub fn order_at(&self, p: &Point) -> Result<i64, ExactError> {
        let ord = self.coefficient.order_at(p)?;
        Ok(if p.is_infinity() { ord - 2 } else { ord })
    }
}

/// Res(ωμ) = Σ over poles a of μ of Res_a(ω·f_a), with f_a the principal
/// part at a. Errors if ω itself is singular at one of μ's poles.
pub fn distribution_residue(
    omega: &MeromorphicOneForm,
    mu: &MLDistribution,
) -> Result<GaussianRational, P1Error> {
    if omega.coefficient.is_zero() {
        return Ok(GaussianRational::zero());
    }
    let mut total = GaussianRational::zero();
    for part in mu.parts() {
        let pole = part.pole();
        if omega.order_at(pole)? < 0 {
            return Err(P1Error::CoincidentSingularity(pole.clone()));
        }
        let product = &omega.coefficient * &part.as_rational_function();
        if !product.is_zero() {
            total = &total + &product.residue_at(pole)?;
        }
    }
    Ok(total)
}

/// Betti number b_p(ℙⁿ) and Hodge number h^{p,q}(ℙⁿ): the cohomology of
/// projective space is one copy of the ground field in each even degree
/// up to 2n, concentrated on the diagonal of the Hodge diamond.
pub fn pn_tables(n: u32, p: u32, q: u32) -> Result<(u32, u32), P1Error> {
    if n == 0 {
        return Err(P1Error::Invalid("projective space needs n >= 1".into()));
    }
    let betti = u32::from(p % 2 == 0 && p <= 2 * n);
    let hodge = u32::from(p == q && p <= n);
    Ok((betti, hodge))
}
