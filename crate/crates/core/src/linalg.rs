//! Exact dense linear algebra over ℚ(i).
//!
//! Ranks are computed with fraction-free (Bareiss) elimination; kernels
//! and solves use exact Gauss-Jordan. Both are exact, so they must agree
//! -- the rank routine is the one the cohomology engine leans on.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::GaussianRational;

/// Gaussian integer, the working scalar of the fraction-free
/// elimination: clearing denominators row by row keeps every
/// intermediate entry a minor of an integer matrix, so no gcd reduction
/// is ever performed during the inner loops.
#[derive(Clone, PartialEq, Eq)]
struct Gi {
    re: BigInt,
    im: BigInt,
}

impl Gi {
    fn zero() -> Self {
        Gi {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn one() -> Self {
        Gi {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, rhs: &Gi) -> Gi {
        Gi {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn sub(&self, rhs: &Gi) -> Gi {
        Gi {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    /// Quotient in ℤ[i]; callers only divide where the Sylvester identity
    /// guarantees exactness, which the debug build double-checks.
    fn exact_div(&self, rhs: &Gi) -> Gi {
        let n = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let q = Gi {
            re: (&self.re * &rhs.re + &self.im * &rhs.im) / &n,
            im: (&self.im * &rhs.re - &self.re * &rhs.im) / &n,
        };
        debug_assert!(q.mul(rhs) == *self, "inexact division in Z[i]");
        q
    }

    /// Bit size of the larger component, the pivot-selection weight.
    fn bits(&self) -> u64 {
        self.re.bits().max(self.im.bits())
    }

    fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

/// Fraction-free (Bareiss) forward elimination over ℤ[i]: returns the
/// row echelon rows and the pivot columns. Within each column the
/// smallest nonzero candidate is promoted to pivot to slow coefficient
/// growth; rows below the pivot are rescaled uniformly so the division
/// by the previous pivot stays exact.
fn bareiss_echelon(mut m: Vec<Vec<Gi>>) -> (Vec<Vec<Gi>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = Gi::one();
    let mut pivots = Vec::new();
    for col in 0..cols {
        let pr = pivots.len();
        if pr >= rows {
            break;
        }
        let Some(p) = (pr..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].bits())
        else {
            continue;
        };
        m.swap(pr, p);
        let (top, rest) = m.split_at_mut(pr + 1);
        let prow = &top[pr];
        let pivot = prow[col].clone();
        for row in rest.iter_mut() {
            let lead = core::mem::replace(&mut row[col], Gi::zero());
            for j in col + 1..cols {
                let scaled = pivot.mul(&row[j]);
                let v = if lead.is_zero() {
                    scaled
                } else {
                    scaled.sub(&lead.mul(&prow[j]))
                };
                row[j] = if v.is_zero() { v } else { v.exact_div(&prev) };
            }
        }
        prev = pivot;
        pivots.push(col);
    }
    (m, pivots)
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> GaussianRational,
    ) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &prod;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = &acc + &(&self[(i, j)] * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Denominator-cleared copy of the rows: scaling each row by the lcm
    /// of its denominators changes neither rank nor row space.
    fn gi_rows(&self) -> Vec<Vec<Gi>> {
        (0..self.rows)
            .map(|i| {
                let mut scale = BigInt::one();
                for e in self.row(i) {
                    scale = scale.lcm(e.re.denom()).lcm(e.im.denom());
                }
                self.row(i)
                    .iter()
                    .map(|e| Gi {
                        re: e.re.numer() * (&scale / e.re.denom()),
                        im: e.im.numer() * (&scale / e.im.denom()),
                    })
                    .collect()
            })
            .collect()
    }

    /// Rank by fraction-free Bareiss elimination over ℤ[i].
    pub fn rank(&self) -> usize {
        bareiss_echelon(self.gi_rows()).1.len()
    }

    /// Reduced row echelon form; returns the pivot columns. The forward
    /// sweep is the fraction-free integer elimination; only the short
    /// backward normalization pass works over ℚ(i).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (ech, pivots) = bareiss_echelon(self.gi_rows());
        let rank = pivots.len();
        let mut rows: Vec<Vec<GaussianRational>> = ech[..rank]
            .iter()
            .map(|row| row.iter().map(Gi::to_gaussian).collect())
            .collect();
        for r in (0..rank).rev() {
            let pcol = pivots[r];
            let inv = rows[r][pcol].inv().unwrap();
            for j in pcol..self.cols {
                if !rows[r][j].is_zero() {
                    rows[r][j] = &rows[r][j] * &inv;
                }
            }
            for i in 0..r {
                if rows[i][pcol].is_zero() {
                    continue;
                }
                let factor = core::mem::replace(&mut rows[i][pcol], GaussianRational::zero());
                for j in pcol + 1..self.cols {
                    if rows[r][j].is_zero() {
                        continue;
                    }
                    let sub = &factor * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &sub;
                }
            }
        }
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, c) in row.into_iter().enumerate() {
                out[(i, j)] = c;
            }
        }
        (out, pivots)
    }

    /// Basis of the right kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let is_pivot = |c: usize| pivots.contains(&c);
        for free in (0..self.cols).filter(|&c| !is_pivot(c)) {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[free] = GaussianRational::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r[(prow, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Any solution of `self · x = b`, or `None` if the system is
    /// inconsistent.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        self.solve_many(core::slice::from_ref(&b.to_vec()))
            .map(|mut sols| sols.pop().unwrap())
    }

    /// Solutions of `self · x = bᵏ` for a batch of right-hand sides,
    /// sharing one elimination; `None` if any of the systems is
    /// inconsistent.
    pub fn solve_many(&self, bs: &[Vec<GaussianRational>]) -> Option<Vec<Vec<GaussianRational>>> {
        let k = bs.len();
        let mut aug = Matrix::zeros(self.rows, self.cols + k);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            for (b, rhs) in bs.iter().enumerate() {
                assert_eq!(self.rows, rhs.len());
                aug[(i, self.cols + b)] = rhs[i].clone();
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None; // pivot in an augmented column
        }
        Some(
            (0..k)
                .map(|b| {
                    let mut x = vec![GaussianRational::zero(); self.cols];
                    for (prow, &pcol) in pivots.iter().enumerate() {
                        x[pcol] = r[(prow, self.cols + b)].clone();
                    }
                    x
                })
                .collect(),
        )
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Independent representatives of `span(vectors)` modulo `span(modulus)`.
/// Used to extract cocycle representatives modulo coboundaries.
pub fn quotient_representatives(
    vectors: &[Vec<GaussianRational>],
    modulus: &[Vec<GaussianRational>],
    dim: usize,
) -> Vec<Vec<GaussianRational>> {
    // Row-reduce the modulus, then sweep each candidate through it;
    // survivors are appended so later candidates are reduced against them.
    let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
    let mut lead: Vec<usize> = Vec::new();
    let reduce = |v: &Vec<GaussianRational>, rows: &Vec<Vec<GaussianRational>>, lead: &Vec<usize>| {
        let mut v = v.clone();
        for (row, &l) in rows.iter().zip(lead.iter()) {
            if !v[l].is_zero() {
                let factor = v[l].clone();
                for (x, y) in v.iter_mut().zip(row.iter()) {
                    let sub = &factor * y;
                    *x = &*x - &sub;
                }
            }
        }
        v
    };
    let push = |v: Vec<GaussianRational>, rows: &mut Vec<Vec<GaussianRational>>, lead: &mut Vec<usize>| -> bool {
        if let Some(l) = v.iter().position(|c| !c.is_zero()) {
            let inv = v[l].inv().unwrap();
            let normalized: Vec<GaussianRational> = v.iter().map(|c| c * &inv).collect();
            rows.push(normalized);
            lead.push(l);
            true
        } else {
            false
        }
    };
    for m in modulus {
        let r = reduce(m, &rows, &lead);
        push(r, &mut rows, &mut lead);
    }
    let mut reps = Vec::new();
    for v in vectors {
        debug_assert_eq!(v.len(), dim);
        let r = reduce(v, &rows, &lead);
        if push(r.clone(), &mut rows, &mut lead) {
            reps.push(r);
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational as G, Rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| G::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_of_singular_matrix() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn bareiss_agrees_with_rref() {
        let a = m(&[&[2, 1, 0, 3], &[4, 2, 1, 6], &[6, 3, 1, 9], &[0, 0, 1, 0]]);
        let (_, pivots) = a.rref();
        assert_eq!(a.rank(), pivots.len());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        let basis = a.kernel_basis();
        assert_eq!(basis.len(), 1);
        for v in &basis {
            assert!(a.apply(v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[2, 2]]);
        let b = [G::from_int(3), G::from_int(6)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b.to_vec());
        let bad = [G::from_int(3), G::from_int(7)];
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn quotient_representative_count() {
        let vectors = [
            alloc::vec![G::one(), G::zero(), G::zero()],
            alloc::vec![G::zero(), G::one(), G::zero()],
        ];
        let modulus = [alloc::vec![G::one(), G::one(), G::zero()]];
        let reps = quotient_representatives(&vectors, &modulus, 3);
        assert_eq!(reps.len(), 1);
    }

    #[test]
    fn randomized_rank_kernel_solve_consistency() {
        // cheap LCG so the no_std test build needs no extra dev-deps here
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for _ in 0..25 {
            let a = Matrix::from_fn(5, 7, |_, _| {
                let re = Rat::new(BigInt::from(next()), BigInt::from(1 + next().rem_euclid(3)));
                let im = Rat::from_integer(BigInt::from(next()));
                G::new(re, im)
            });
            let (r, pivots) = a.rref();
            assert_eq!(a.rank(), pivots.len());
            let kernel = a.kernel_basis();
            assert_eq!(kernel.len(), a.cols() - pivots.len());
            for v in &kernel {
                assert!(a.apply(v).iter().all(|c| c.is_zero()));
            }
            // rref pivot rows must be normalized with zeros above
            for (prow, &pcol) in pivots.iter().enumerate() {
                assert!(r[(prow, pcol)].is_one());
                for other in 0..prow {
                    assert!(r[(other, pcol)].is_zero());
                }
            }
            // a consistent system built from a known solution
            let x0: Vec<G> = (0..a.cols()).map(|_| G::from_int(next())).collect();
            let b = a.apply(&x0);
            let x = a.solve(&b).expect("consistent by construction");
            assert_eq!(a.apply(&x), b);
        }
    }

    #[test]
    fn solve_many_matches_individual_solves() {
        let a = m(&[&[1, 2, 0], &[0, 1, 1], &[1, 3, 1]]);
        let b1 = a.apply(&[G::from_int(1), G::from_int(-2), G::i()]);
        let b2 = a.apply(&[G::zero(), G::from_frac(1, 2), G::from_int(4)]);
        let sols = a.solve_many(&[b1.clone(), b2.clone()]).unwrap();
        assert_eq!(a.apply(&sols[0]), b1);
        assert_eq!(a.apply(&sols[1]), b2);
        // one inconsistent member poisons the whole batch
        let bad = alloc::vec![G::one(), G::zero(), G::zero()];
        assert!(a.solve_many(&[b1, bad]).is_none());
    }

    #[test]
    fn rank_with_gaussian_entries() {
        let i = G::i();
        let a = Matrix::from_rows(alloc::vec![
            alloc::vec![G::one(), i.clone()],
            alloc::vec![-i.clone(), G::one()],
        ]);
        // second row = -i * first row
        assert_eq!(a.rank(), 1);
    }
}
