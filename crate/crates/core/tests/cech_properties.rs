//! Randomized covers with an independent rank oracle.
//!
//! The generator builds the sheaf of functions on a finite point set:
//! each open gets a subset of points, sections over a face are functions
//! on the intersection, and restrictions are coordinate projections. The
//! nerve is the honest nerve of the subsets, so the complex decomposes
//! per point into a full simplex and the cohomology of the whole cover
//! is forced: Ȟ⁰ = number of covered points, Ȟ^p = 0 for p ≥ 1.

use cechml_core::cech::{
    build_complex, circle_two_arc_constant_sheaf, cohomology, cohomology_with, Face, Nerve,
    SheafDatum,
};
use cechml_core::linalg::Matrix;
use cechml_core::GaussianRational as G;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct PointCover {
    n_opens: usize,
    /// sets[i] = sorted points carried by open i
    sets: Vec<Vec<usize>>,
}

fn random_point_cover(rng: &mut ChaCha8Rng) -> PointCover {
    let n_opens = rng.gen_range(2..=4);
    let n_points = rng.gen_range(1..=5);
    let mut sets = vec![Vec::new(); n_opens];
    for pt in 0..n_points {
        // every point lies in at least one open
        let home = rng.gen_range(0..n_opens);
        for (i, s) in sets.iter_mut().enumerate() {
            if i == home || rng.gen_bool(0.4) {
                s.push(pt);
            }
        }
    }
    // every open must be nonempty so the nerve covers dimension zero
    for (i, s) in sets.iter_mut().enumerate() {
        if s.is_empty() {
            s.push(n_points + i);
        }
    }
    PointCover { n_opens, sets }
}

fn intersection(cover: &PointCover, face: &Face) -> Vec<usize> {
    let mut pts = cover.sets[face[0]].clone();
    for &i in &face[1..] {
        pts.retain(|p| cover.sets[i].contains(p));
    }
    pts
}

fn nerve_and_datum(cover: &PointCover) -> (Nerve, SheafDatum) {
    let mut faces: Vec<Face> = Vec::new();
    for mask in 1u32..(1 << cover.n_opens) {
        let face: Face = (0..cover.n_opens).filter(|i| mask >> i & 1 == 1).collect();
        if face.len() == 1 || !intersection(cover, &face).is_empty() {
            faces.push(face);
        }
    }
    let nerve = Nerve::new(cover.n_opens, faces.clone()).unwrap();
    let mut datum = SheafDatum::new();
    for face in &faces {
        datum.set_dim(face.clone(), intersection(cover, face).len());
    }
    for face in &faces {
        for coface in &faces {
            if coface.len() != face.len() + 1
                || !face.iter().all(|i| coface.contains(i))
            {
                continue;
            }
            let src = intersection(cover, face);
            let dst = intersection(cover, coface);
            let m = Matrix::from_fn(dst.len(), src.len(), |r, c| {
                if dst[r] == src[c] {
                    G::one()
                } else {
                    G::zero()
                }
            });
            datum.set_restriction(face.clone(), coface.clone(), m);
        }
    }
    (nerve, datum)
}

#[test]
fn random_good_covers_have_point_cohomology() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let cover = random_point_cover(&mut rng);
        let covered: usize = {
            let mut all: Vec<usize> = cover.sets.iter().flatten().copied().collect();
            all.sort_unstable();
            all.dedup();
            all.len()
        };
        let (nerve, datum) = nerve_and_datum(&cover);
        // build_complex verifies delta^2 = 0 internally
        let cx = build_complex(&nerve, &datum).unwrap();
        let report = cohomology_with(&cx, true);
        assert_eq!(report.ranks[0], covered, "H0 != number of points");
        assert!(
            report.ranks[1..].iter().all(|&r| r == 0),
            "higher cohomology of a good cover: {:?}",
            report.ranks
        );
        let reps = report.representatives.unwrap();
        for (p, r) in report.ranks.iter().enumerate() {
            assert_eq!(reps[p].len(), *r);
        }
    }
}

#[test]
fn euler_characteristic_is_alternating_dimension_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let cover = random_point_cover(&mut rng);
        let (nerve, datum) = nerve_and_datum(&cover);
        let cx = build_complex(&nerve, &datum).unwrap();
        let report = cohomology(&cx);
        let mut chi_ranks = 0i64;
        let mut chi_dims = 0i64;
        for p in 0..cx.degrees() {
            let sign = if p % 2 == 0 { 1 } else { -1 };
            chi_ranks += sign * report.ranks[p] as i64;
            chi_dims += sign * cx.dim(p) as i64;
        }
        assert_eq!(chi_ranks, chi_dims);
    }
}

#[test]
fn corrupted_restriction_changes_circle_ranks() {
    let (nerve, mut datum) = circle_two_arc_constant_sheaf();
    // negate one overlap component of one restriction: the glued kernel
    // collapses and the classes cancel, so (1, 1) must not survive
    let mut bad = Matrix::zeros(2, 1);
    bad[(0, 0)] = G::one();
    bad[(1, 0)] = -G::one();
    datum.set_restriction(vec![1], vec![0, 1], bad);
    let cx = build_complex(&nerve, &datum).unwrap();
    assert_eq!(cohomology(&cx).ranks, vec![0, 0]);
}
