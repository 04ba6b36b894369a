//! Čech cochain complexes of a finite cover with exact coefficients.
//!
//! A cover enters as its nerve (the intersection combinatorics) plus a
//! sheaf datum: a finite-dimensional section space for every face and a
//! restriction matrix for every face/coface incidence. The differential
//! is the alternating sum of restrictions,
//! (δσ)_{α₀…α_{i+1}} = Σ_j (−1)^j σ_{α₀…α̂_j…α_{i+1}},
//! and δ∘δ = 0 is verified before a complex is handed out.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{quotient_representatives, Matrix};
use crate::scalar::GaussianRational;

/// An ordered tuple of cover indices α₀ < … < α_p with nonempty
/// intersection.
pub type Face = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CechError {
    /// The nerve is not downward closed or misses a dimension-0 face.
    BadNerve(String),
    /// The datum does not match the nerve's faces.
    FaceMismatch(String),
    /// Restriction matrices do not compose consistently.
    InconsistentRestrictions(String),
    /// δ² ≠ 0 after assembly; an internal invariant violation.
    SquareNotZero { degree: usize },
}

impl fmt::Display for CechError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CechError::BadNerve(msg) => write!(f, "invalid nerve: {msg}"),
            CechError::FaceMismatch(msg) => write!(f, "datum does not match nerve: {msg}"),
            CechError::InconsistentRestrictions(msg) => {
                write!(f, "inconsistent restriction composition: {msg}")
            }
            CechError::SquareNotZero { degree } => {
                write!(f, "delta^2 != 0 at degree {degree}")
            }
        }
    }
}

impl core::error::Error for CechError {}

/// Intersection combinatorics of a finite cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nerve {
    n_opens: usize,
    /// faces[p] lists the dimension-p faces, each strictly increasing.
    faces: Vec<Vec<Face>>,
}

impl Nerve {
    /// Build from a flat list of faces of any dimension; the nerve is
    /// validated for downward closure and full dimension-0 coverage.
    pub fn new(n_opens: usize, all_faces: Vec<Face>) -> Result<Self, CechError> {
        let mut by_dim: Vec<Vec<Face>> = Vec::new();
        for f in all_faces {
            if f.is_empty() {
                return Err(CechError::BadNerve("empty face".into()));
            }
            if !f.windows(2).all(|w| w[0] < w[1]) {
                return Err(CechError::BadNerve(format!(
                    "face {f:?} is not strictly increasing"
                )));
            }
            if *f.last().unwrap() >= n_opens {
                return Err(CechError::BadNerve(format!(
                    "face {f:?} references an open out of range"
                )));
            }
            let p = f.len() - 1;
            while by_dim.len() <= p {
                by_dim.push(Vec::new());
            }
            if !by_dim[p].contains(&f) {
                by_dim[p].push(f);
            }
        }
        for dim in &mut by_dim {
            dim.sort();
        }
        let nerve = Nerve {
            n_opens,
            faces: by_dim,
        };
        nerve.validate()?;
        Ok(nerve)
    }

    fn validate(&self) -> Result<(), CechError> {
        if self.faces.is_empty() || self.faces[0].len() != self.n_opens {
            return Err(CechError::BadNerve(format!(
                "dimension-0 faces must enumerate all {} opens",
                self.n_opens
            )));
        }
        for p in 1..self.faces.len() {
            for f in &self.faces[p] {
                for omit in 0..f.len() {
                    let sub: Face = f
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != omit)
                        .map(|(_, &v)| v)
                        .collect();
                    if !self.faces[p - 1].contains(&sub) {
                        return Err(CechError::BadNerve(format!(
                            "face {f:?} listed but sub-face {sub:?} is not"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_opens(&self) -> usize {
        self.n_opens
    }

    /// Largest p with a dimension-p face.
    pub fn max_dim(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn faces(&self, p: usize) -> &[Face] {
        self.faces.get(p).map_or(&[], |v| v.as_slice())
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }
}

/// Section spaces and restriction matrices for the faces of a nerve.
///
/// Spaces are abstract: a face carries only a dimension, with basis
/// indexed 0..d−1. A disconnected intersection is modeled by letting its
/// space be the direct sum over components, which is how the two-arc
/// circle cover gets a 2-dimensional overlap space.
#[derive(Clone, Debug, Default)]
pub struct SheafDatum {
    dims: BTreeMap<Face, usize>,
    restrictions: BTreeMap<(Face, Face), Matrix>,
}

impl SheafDatum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_dim(&mut self, face: Face, dim: usize) {
        self.dims.insert(face, dim);
    }

    pub fn dim(&self, face: &Face) -> usize {
        self.dims.get(face).copied().unwrap_or(0)
    }

    /// Restriction from the sections over `face` to those over `coface`
    /// (one more index, i.e. a deeper intersection).
    pub fn set_restriction(&mut self, face: Face, coface: Face, matrix: Matrix) {
        self.restrictions.insert((face, coface), matrix);
    }

    pub fn restriction(&self, face: &Face, coface: &Face) -> Option<&Matrix> {
        self.restrictions.get(&(face.clone(), coface.clone()))
    }

    fn validate(&self, nerve: &Nerve) -> Result<(), CechError> {
        for face in nerve.all_faces() {
            if !self.dims.contains_key(face) {
                return Err(CechError::FaceMismatch(format!(
                    "no section space for face {face:?}"
                )));
            }
        }
        for p in 0..nerve.max_dim() {
            for face in nerve.faces(p) {
                for coface in nerve.faces(p + 1) {
                    if !is_subface(face, coface) {
                        continue;
                    }
                    let m = self.restriction(face, coface).ok_or_else(|| {
                        CechError::FaceMismatch(format!(
                            "no restriction {face:?} -> {coface:?}"
                        ))
                    })?;
                    if m.rows() != self.dim(coface) || m.cols() != self.dim(face) {
                        return Err(CechError::FaceMismatch(format!(
                            "restriction {face:?} -> {coface:?} has shape {}x{}, expected {}x{}",
                            m.rows(),
                            m.cols(),
                            self.dim(coface),
                            self.dim(face)
                        )));
                    }
                }
            }
        }
        // two-step composition consistency: any two chains from a face to
        // a double coface must agree
        for p in 0..nerve.max_dim().saturating_sub(1) {
            for face in nerve.faces(p) {
                for top in nerve.faces(p + 2) {
                    if !is_subface_k(face, top, 2) {
                        continue;
                    }
                    let mut composite: Option<Matrix> = None;
                    for mid in nerve.faces(p + 1) {
                        if !is_subface(face, mid) || !is_subface(mid, top) {
                            continue;
                        }
                        let a = self.restriction(face, mid).unwrap();
                        let b = self.restriction(mid, top).unwrap();
                        let c = b.mul(a);
                        match &composite {
                            None => composite = Some(c),
                            Some(prev) => {
                                if *prev != c {
                                    return Err(CechError::InconsistentRestrictions(format!(
                                        "{face:?} -> {top:?} via different middles"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn is_subface(face: &Face, coface: &Face) -> bool {
    coface.len() == face.len() + 1 && face.iter().all(|v| coface.contains(v))
}

fn is_subface_k(face: &Face, coface: &Face, k: usize) -> bool {
    coface.len() == face.len() + k && face.iter().all(|v| coface.contains(v))
}

/// The assembled cochain complex: dimensions per degree and the
/// differential δ_p : C^p → C^{p+1} per degree.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    dims: Vec<usize>,
    deltas: Vec<Matrix>,
    /// face offsets per degree, for addressing individual components
    offsets: Vec<BTreeMap<Face, usize>>,
}

impl CochainComplex {
    pub fn degrees(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self, p: usize) -> usize {
        self.dims.get(p).copied().unwrap_or(0)
    }

    pub fn delta(&self, p: usize) -> Option<&Matrix> {
        self.deltas.get(p)
    }

    /// Offset of a face's block inside the degree-|face|-1 cochain space.
    pub fn face_offset(&self, face: &Face) -> Option<usize> {
        self.offsets
            .get(face.len() - 1)
            .and_then(|m| m.get(face))
            .copied()
    }
}

/// Assemble the complex, verifying δ_{p+1}∘δ_p = 0 before returning.
pub fn build_complex(nerve: &Nerve, datum: &SheafDatum) -> Result<CochainComplex, CechError> {
    datum.validate(nerve)?;
    let max_dim = nerve.max_dim();
    let mut dims = Vec::new();
    let mut offsets = Vec::new();
    for p in 0..=max_dim {
        let mut off = BTreeMap::new();
        let mut total = 0usize;
        for face in nerve.faces(p) {
            off.insert(face.clone(), total);
            total += datum.dim(face);
        }
        dims.push(total);
        offsets.push(off);
    }
    let mut deltas = Vec::new();
    for p in 0..=max_dim {
        let rows = if p + 1 <= max_dim { dims[p + 1] } else { 0 };
        let mut delta = Matrix::zeros(rows, dims[p]);
        if p + 1 <= max_dim {
            for coface in nerve.faces(p + 1) {
                let row0 = offsets[p + 1][coface];
                for (omit, _) in coface.iter().enumerate() {
                    let face: Face = coface
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != omit)
                        .map(|(_, &v)| v)
                        .collect();
                    let col0 = offsets[p][&face];
                    let m = datum.restriction(&face, coface).unwrap();
                    let negate = omit % 2 == 1;
                    for i in 0..m.rows() {
                        for j in 0..m.cols() {
                            let v = if negate {
                                -&m[(i, j)]
                            } else {
                                m[(i, j)].clone()
                            };
                            delta[(row0 + i, col0 + j)] = &delta[(row0 + i, col0 + j)] + &v;
                        }
                    }
                }
            }
        }
        deltas.push(delta);
    }
    // the defining invariant of a complex
    for p in 0..deltas.len().saturating_sub(1) {
        if deltas[p + 1].rows() > 0 && !deltas[p + 1].mul(&deltas[p]).is_zero() {
            return Err(CechError::SquareNotZero { degree: p });
        }
    }
    Ok(CochainComplex {
        dims,
        deltas,
        offsets,
    })
}

/// Ranks of Ȟ^p with optional exact representatives of a cocycle basis
/// modulo coboundaries.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub ranks: Vec<usize>,
    pub representatives: Option<Vec<Vec<Vec<GaussianRational>>>>,
}

pub fn cohomology(cx: &CochainComplex) -> CohomologyReport {
    cohomology_with(cx, false)
}

pub fn cohomology_with(cx: &CochainComplex, representatives: bool) -> CohomologyReport {
    let degrees = cx.degrees();
    let mut ranks = Vec::with_capacity(degrees);
    let mut reps_out = representatives.then(Vec::new);
    let mut prev_image_rank = 0usize;
    for p in 0..degrees {
        let delta = &cx.deltas[p];
        let rank_delta = if delta.rows() == 0 { 0 } else { delta.rank() };
        let kernel_dim = cx.dims[p] - rank_delta;
        // rank-nullity consistency: the quotient can never be negative
        assert!(kernel_dim >= prev_image_rank, "rank-nullity violated");
        ranks.push(kernel_dim - prev_image_rank);
        if let Some(reps) = reps_out.as_mut() {
            let kernel = if delta.rows() == 0 {
                Matrix::zeros(0, cx.dims[p]).kernel_basis()
            } else {
                delta.kernel_basis()
            };
            let image: Vec<Vec<GaussianRational>> = if p == 0 {
                Vec::new()
            } else {
                let prev = &cx.deltas[p - 1];
                (0..prev.cols())
                    .map(|j| {
                        let mut e = alloc::vec![GaussianRational::zero(); prev.cols()];
                        e[j] = GaussianRational::one();
                        prev.apply(&e)
                    })
                    .collect()
            };
            reps.push(quotient_representatives(&kernel, &image, cx.dims[p]));
        }
        prev_image_rank = rank_delta;
    }
    if let Some(reps) = &reps_out {
        for (p, r) in ranks.iter().enumerate() {
            debug_assert_eq!(reps[p].len(), *r);
        }
    }
    CohomologyReport {
        ranks,
        representatives: reps_out,
    }
}

/// True iff the computed Ȟ⁰ rank equals an independently supplied
/// global-section dimension.
pub fn h0_equals_global_sections(
    nerve: &Nerve,
    datum: &SheafDatum,
    glued: usize,
) -> Result<bool, CechError> {
    let cx = build_complex(nerve, datum)?;
    Ok(cohomology(&cx).ranks.first().copied().unwrap_or(0) == glued)
}

/// The two-arc cover of the circle with the constant sheaf: each arc is
/// connected, the overlap has two components. The classic first example
/// of nontrivial Ȟ¹.
pub fn circle_two_arc_constant_sheaf() -> (Nerve, SheafDatum) {
    let nerve = Nerve::new(
        2,
        alloc::vec![alloc::vec![0], alloc::vec![1], alloc::vec![0, 1]],
    )
    .unwrap();
    let mut datum = SheafDatum::new();
    datum.set_dim(alloc::vec![0], 1);
    datum.set_dim(alloc::vec![1], 1);
    datum.set_dim(alloc::vec![0, 1], 2); // two overlap components
    let column = |sign: i64| {
        Matrix::from_fn(2, 1, |_, _| GaussianRational::from_int(sign))
    };
    datum.set_restriction(alloc::vec![0], alloc::vec![0, 1], column(1));
    datum.set_restriction(alloc::vec![1], alloc::vec![0, 1], column(1));
    (nerve, datum)
}
