//! Dense matrices over [`Scalar`] and an exact pivoted LDL^T factorization.
//!
//! Matrices are small (at most ~100x100 here) and immutable after
//! construction; all operations are pure.  The LDL^T factorization with
//! diagonal pivoting is the rank certificate and positive-semidefiniteness
//! oracle used by everything downstream: coordinates of a vector set are
//! represented by `(P, L, D)` rather than explicit square-rooted entries, so
//! verification at the Gram level stays exact.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Mode, Scalar};

/// Field of a matrix: all entries rational, all in one quadratic extension
/// (rationals embed freely), or all floats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Rational,
    Quadratic(u64),
    Float,
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| Scalar::zero())
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    /// All-ones matrix J.
    pub fn ones(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |_, _| Scalar::one())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Exact symmetry check; returns the first offending pair on failure.
    pub fn check_symmetric(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix cannot be symmetric",
                self.rows, self.cols
            )));
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    /// The common field of all entries, or an error when entries mix floats
    /// with exact values or belong to different quadratic extensions.
    pub fn field_tag(&self) -> Result<FieldTag> {
        let mut tag = FieldTag::Rational;
        let mut any_float = false;
        let mut any_exact = false;
        for s in &self.data {
            match s {
                Scalar::Float(_) => any_float = true,
                Scalar::Rational(_) => any_exact = true,
                Scalar::Quadratic { radicand, .. } => {
                    any_exact = true;
                    match tag {
                        FieldTag::Rational => tag = FieldTag::Quadratic(*radicand),
                        FieldTag::Quadratic(d) if d == *radicand => {}
                        FieldTag::Quadratic(d) => {
                            return Err(Error::MixedField(format!(
                                "radicands {d} and {radicand} in one matrix"
                            )))
                        }
                        FieldTag::Float => unreachable!(),
                    }
                }
            }
        }
        if any_float {
            if any_exact {
                return Err(Error::MixedField("float and exact entries mixed".into()));
            }
            return Ok(FieldTag::Float);
        }
        Ok(tag)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Scalar::zero();
                for t in 0..self.cols {
                    let p = self.get(i, t).try_mul(rhs.get(t, j))?;
                    acc = acc.try_add(&p)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.try_add(b)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} - {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.try_sub(b)?;
        }
        Ok(out)
    }

    /// Entrywise scaling by a scalar.
    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn row_sum(&self, i: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for j in 0..self.cols {
            acc = &acc + self.get(i, j);
        }
        acc
    }

    /// Equality under a comparison mode (exact or tolerant for floats).
    pub fn eq_mode(&self, rhs: &Matrix, mode: Mode) -> bool {
        self.rows == rhs.rows
            && self.cols == rhs.cols
            && self.data.iter().zip(&rhs.data).all(|(a, b)| mode.eq(a, b))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix dimensions must agree")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Pivoted LDL^T factorization: `A = P^T L D L^T P` with `P` the symmetric
/// permutation recorded in `perm` (pivot order -> original index), `L` unit
/// lower triangular and `D` diagonal.
///
/// Pivots are chosen as the largest remaining diagonal entry, ties broken by
/// lowest index, which makes the factorization deterministic across runs.
#[derive(Clone, Debug)]
pub struct LdltFactorization {
    pub perm: Vec<usize>,
    pub lower: Matrix,
    pub diag: Vec<Scalar>,
    pub rank: usize,
}

impl LdltFactorization {
    /// Recompute `P^T L D L^T P`; equals the input exactly in exact mode.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.perm.len();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Scalar::zero();
                for t in 0..n {
                    let term = &(self.lower.get(i, t) * &self.diag[t]) * self.lower.get(j, t);
                    acc = &acc + &term;
                }
                out.set(self.perm[i], self.perm[j], acc);
            }
        }
        out
    }
}

/// Pivoted LDL^T of a symmetric matrix.
///
/// With `require_psd`, any negative pivot (beyond tolerance in float mode)
/// or a zero diagonal alongside a nonzero remaining row aborts with
/// [`Error::NotPsd`]; a PSD input always factors with nonnegative pivots
/// under diagonal pivoting.  Without `require_psd`, negative pivots are
/// admitted, and only the genuinely unfactorable stall case errors.
#[allow(clippy::needless_range_loop)] // pivot step indexes several structures at once
pub fn ldlt_pivoted(a: &Matrix, mode: Mode, require_psd: bool) -> Result<LdltFactorization> {
    a.check_symmetric()?;
    let n = a.rows();
    let mut work = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut lower = Matrix::identity(n);
    let mut diag = vec![Scalar::zero(); n];

    // Threshold below which a float pivot counts as zero.
    let zero_threshold = |max_seen: f64| -> f64 {
        match mode {
            Mode::Exact => 0.0,
            Mode::Float { rel_tol, abs_tol } => abs_tol.max(rel_tol * max_seen),
        }
    };
    let mut max_pivot = 0.0f64;
    let mut rank = n;

    for step in 0..n {
        // Largest remaining diagonal entry, lowest index on ties.
        let mut best = step;
        for i in (step + 1)..n {
            if work.get(i, i).try_cmp(work.get(best, best))? == std::cmp::Ordering::Greater {
                best = i;
            }
        }
        if best != step {
            swap_symmetric(&mut work, step, best);
            perm.swap(step, best);
            for t in 0..step {
                let tmp = lower.get(step, t).clone();
                lower.set(step, t, lower.get(best, t).clone());
                lower.set(best, t, tmp);
            }
        }
        let pivot = work.get(step, step).clone();
        let pf = pivot.to_f64().abs();
        let effectively_zero = match mode {
            Mode::Exact => pivot.is_zero(),
            Mode::Float { .. } => pf <= zero_threshold(max_pivot),
        };
        if effectively_zero {
            // Maximal diagonal is zero: the rest of the diagonal is <= 0.
            // PSD completion requires the whole remaining block to vanish.
            let mut block_zero = true;
            'scan: for i in step..n {
                for j in step..n {
                    let z = match mode {
                        Mode::Exact => work.get(i, j).is_zero(),
                        Mode::Float { .. } => {
                            work.get(i, j).to_f64().abs() <= zero_threshold(max_pivot)
                        }
                    };
                    if !z {
                        block_zero = false;
                        break 'scan;
                    }
                }
            }
            if block_zero {
                rank = step;
                break;
            }
            if require_psd {
                return Err(Error::NotPsd(
                    "zero diagonal entry in a nonzero remaining block".into(),
                ));
            }
            // Negative diagonal may still be present; pivot on it below.
            if pivot.sign() == 0 {
                return Err(Error::FactorizationStalled);
            }
        }
        if require_psd && pivot.sign() < 0 && !effectively_zero {
            return Err(Error::NotPsd(format!("negative pivot {pivot} at step {step}")));
        }
        max_pivot = max_pivot.max(pf);
        diag[step] = pivot.clone();
        for i in (step + 1)..n {
            let factor = work.get(i, step).try_div(&pivot)?;
            lower.set(i, step, factor.clone());
            if factor.is_zero() {
                continue;
            }
            for j in (step + 1)..=i {
                let delta = &factor * work.get(step, j);
                let v = work.get(i, j).try_sub(&delta)?;
                work.set(i, j, v.clone());
                work.set(j, i, v);
            }
        }
    }
    // In exact mode every retained pivot is nonzero by construction.  In
    // float mode trailing near-zero pivots are trimmed from the rank.
    if let Mode::Float { .. } = mode {
        let thr = zero_threshold(max_pivot);
        rank = diag[..rank].iter().filter(|d| d.to_f64().abs() > thr).count();
    }
    Ok(LdltFactorization { perm, lower, diag, rank })
}

fn swap_symmetric(m: &mut Matrix, a: usize, b: usize) {
    let n = m.rows();
    for j in 0..n {
        let t = m.get(a, j).clone();
        m.set(a, j, m.get(b, j).clone());
        m.set(b, j, t);
    }
    for i in 0..n {
        let t = m.get(i, a).clone();
        m.set(i, a, m.get(i, b).clone());
        m.set(i, b, t);
    }
}

/// Positive-semidefiniteness test with certified rank.
pub fn is_psd(a: &Matrix, mode: Mode) -> (bool, Option<usize>) {
    match ldlt_pivoted(a, mode, true) {
        Ok(f) => (true, Some(f.rank)),
        Err(_) => (false, None),
    }
}
