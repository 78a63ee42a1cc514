//! Frame-theoretic verification of Gram matrices: tightness, frame
//! potential, the two-distance profile and regularity, the row-sum
//! dichotomy, design conditions, the integer-slope relation for large sets,
//! and recovery of a strongly regular graph from the inner-product pattern.
//!
//! All checks operate on the Gram matrix alone.  In exact mode every
//! equality is literal; float mode (for user-supplied floating-point Grams)
//! compares within a relative tolerance.

use serde::{Deserialize, Serialize};

use crate::embed::GramSet;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Mode, Scalar};
use crate::srg::{is_strongly_regular, Adjacency, SrgCheck, SrgParams};

/// Off-diagonal value structure of a unit-diagonal Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum DistanceProfile {
    TwoDistance(TwoDistanceProfile),
    /// All off-diagonal entries equal (regular simplex, orthonormal basis,
    /// or a repeated single vector).
    OneDistance { value: Scalar },
    /// More than two distinct off-diagonal values.
    NotTwoDistance { distinct: usize },
    /// A single vector: no off-diagonal entries at all.
    Singleton,
}

/// The two inner products in sorted order `b < a`, pair counts, and per-row
/// counts of `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoDistanceProfile {
    pub a: Scalar,
    pub b: Scalar,
    /// Unordered pairs with inner product `a`.
    pub nu_a: usize,
    /// Number of entries `a` in each row.
    pub row_counts: Vec<usize>,
    pub regular: bool,
    /// The common row count when the set is regular.
    pub n_a: Option<usize>,
}

impl TwoDistanceProfile {
    /// `a = -b`: an equiangular line set.
    pub fn equiangular(&self, mode: Mode) -> bool {
        mode.eq(&self.a, &(-&self.b))
    }
}

/// Collects the distinct off-diagonal values of a unit-diagonal Gram.
#[allow(clippy::needless_range_loop)]
pub fn two_distance_profile(g: &GramSet, mode: Mode) -> DistanceProfile {
    let n = g.len();
    if n <= 1 {
        return DistanceProfile::Singleton;
    }
    let m = g.matrix();
    let mut values: Vec<Scalar> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = m.get(i, j);
            if !values.iter().any(|w| mode.eq(w, v)) {
                values.push(v.clone());
            }
        }
    }
    match values.len() {
        1 => DistanceProfile::OneDistance { value: values.pop().unwrap() },
        2 => {
            let (a, b) = match values[0].try_cmp(&values[1]) {
                Ok(std::cmp::Ordering::Greater) => (values[0].clone(), values[1].clone()),
                _ => (values[1].clone(), values[0].clone()),
            };
            let mut row_counts = vec![0usize; n];
            let mut nu_a = 0usize;
            for i in 0..n {
                for j in 0..n {
                    if i != j && mode.eq(m.get(i, j), &a) {
                        row_counts[i] += 1;
                        if i < j {
                            nu_a += 1;
                        }
                    }
                }
            }
            let regular = row_counts.iter().all(|&c| c == row_counts[0]);
            let n_a = regular.then_some(row_counts[0]);
            DistanceProfile::TwoDistance(TwoDistanceProfile { a, b, nu_a, row_counts, regular, n_a })
        }
        d => DistanceProfile::NotTwoDistance { distinct: d },
    }
}

/// Result of the Gram tightness test `G^2 = (N/n) G`.
#[derive(Clone, Debug)]
pub struct TightCheck {
    pub tight: bool,
    /// The frame constant `A = N/n`.
    pub frame_constant: Scalar,
}

pub fn check_gram_tight(g: &GramSet, mode: Mode) -> TightCheck {
    let frame_constant = &Scalar::int(g.len() as i64) / &Scalar::int(g.rank() as i64);
    let sq = g.matrix() * g.matrix();
    let tight = sq.eq_mode(&g.matrix().scale(&frame_constant), mode);
    TightCheck { tight, frame_constant }
}

/// Frame potential `FP = sum_{i,j} G_ij^2` (self-terms included) with the
/// lower bound `N^2/n`.
#[derive(Clone, Debug)]
pub struct FramePotential {
    pub value: Scalar,
    /// `N^2 / n`, attained exactly by tight frames.
    pub lower_bound: Scalar,
    pub meets_bound: bool,
    /// For two-distance Grams: agreement with
    /// `N + 2 nu_a a^2 + (N(N-1) - 2 nu_a) b^2`.
    pub profile_formula_agrees: Option<bool>,
}

pub fn frame_potential(g: &GramSet, mode: Mode) -> FramePotential {
    let n_pts = g.len();
    let m = g.matrix();
    let mut value = Scalar::zero();
    for i in 0..n_pts {
        for j in 0..n_pts {
            value = &value + &m.get(i, j).square();
        }
    }
    let big_n = Scalar::int(n_pts as i64);
    let lower_bound = &(&big_n * &big_n) / &Scalar::int(g.rank() as i64);
    let meets_bound = mode.eq(&value, &lower_bound);
    let profile_formula_agrees = match two_distance_profile(g, mode) {
        DistanceProfile::TwoDistance(p) => {
            let pairs = n_pts * (n_pts - 1);
            let via = &(&big_n + &(&Scalar::int(2 * p.nu_a as i64) * &p.a.square()))
                + &(&Scalar::int((pairs - 2 * p.nu_a) as i64) * &p.b.square());
            Some(mode.eq(&via, &value))
        }
        _ => None,
    };
    FramePotential { value, lower_bound, meets_bound, profile_formula_agrees }
}

/// The count `N_a` from the closed formula
/// `N_a = (N/n - 1 - (N-1) b^2) / (a^2 - b^2)`, verified to be a nonnegative
/// integer equal to every per-row count.
///
/// Requires `a^2 != b^2`; equiangular profiles have no closed-form count.
pub fn regularity_check(g: &GramSet, profile: &TwoDistanceProfile, mode: Mode) -> Result<usize> {
    let a2 = profile.a.square();
    let b2 = profile.b.square();
    let denom = a2.try_sub(&b2)?;
    if mode.is_zero(&denom) {
        return Err(Error::Unsupported(
            "regularity formula needs a^2 != b^2 (equiangular profile)".into(),
        ));
    }
    let n_pts = Scalar::int(g.len() as i64);
    let lam = &n_pts / &Scalar::int(g.rank() as i64);
    let numer = &(&lam - &Scalar::one()) - &(&Scalar::int((g.len() - 1) as i64) * &b2);
    let val = &numer / &denom;
    let as_int = mode
        .to_integer(&val)
        .ok_or_else(|| Error::VerificationFailed(format!("N_a formula gives non-integer {val}")))?;
    if as_int.sign() == num::bigint::Sign::Minus {
        return Err(Error::VerificationFailed(format!("N_a formula gives negative {val}")));
    }
    let n_a: usize = as_int
        .try_into()
        .map_err(|_| Error::VerificationFailed("N_a formula value out of range".into()))?;
    for (i, &c) in profile.row_counts.iter().enumerate() {
        if c != n_a {
            return Err(Error::VerificationFailed(format!(
                "row {i} has {c} entries equal to a, formula predicts {n_a}"
            )));
        }
    }
    Ok(n_a)
}

/// Row-sum dichotomy of a tight two-distance Gram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DesignBranch {
    /// `t = 0`: the vectors sum to zero.
    Design,
    /// `t = N/n`: the shifted case.
    Shifted,
}

/// Outcome of the branch test: the branch, the common row sum `t`, and the
/// verified scalar identity.
#[derive(Clone, Debug)]
pub struct BranchCheck {
    pub branch: DesignBranch,
    pub t: Scalar,
}

/// Decides the branch from the row-sum eigenvalue `t` (never from `(a, b)`:
/// when `a = -b` both scalar identities coincide) and verifies the matching
/// identity exactly:
///
/// * `t = 0`:    `-n(a+b) - n a b (N-1) = N - n`
/// * `t = N/n`:  `(N-n)(a+b) - n a b (N-1) = N - n`
pub fn b_equation_branch(g: &GramSet, profile: &TwoDistanceProfile, mode: Mode) -> Result<BranchCheck> {
    let n_pts = g.len();
    let t = g.matrix().row_sum(0);
    for i in 1..n_pts {
        let s = g.matrix().row_sum(i);
        if !mode.eq(&s, &t) {
            return Err(Error::VerificationFailed(format!(
                "row sums are not constant: row 0 gives {t}, row {i} gives {s}"
            )));
        }
    }
    let lam = &Scalar::int(n_pts as i64) / &Scalar::int(g.rank() as i64);
    let branch = if mode.is_zero(&t) {
        DesignBranch::Design
    } else if mode.eq(&t, &lam) {
        DesignBranch::Shifted
    } else {
        return Err(Error::VerificationFailed(format!(
            "row sum {t} is neither 0 nor N/n = {lam}; the Gram is not a tight two-distance frame"
        )));
    };
    let n = Scalar::int(g.rank() as i64);
    let big_n = Scalar::int(n_pts as i64);
    let apb = &profile.a + &profile.b;
    let ab = &profile.a * &profile.b;
    let shared = &(&n * &ab) * &Scalar::int((n_pts - 1) as i64);
    let lead = match branch {
        DesignBranch::Design => -&(&n * &apb),
        DesignBranch::Shifted => &(&big_n - &n) * &apb,
    };
    let lhs = &lead - &shared;
    let rhs = &big_n - &n;
    if !mode.eq(&lhs, &rhs) {
        return Err(Error::VerificationFailed(format!(
            "branch identity fails: {lhs} != N - n = {rhs}"
        )));
    }
    Ok(BranchCheck { branch, t })
}

/// Integer-slope relation for large two-distance sets: when `N > 2n+1`
/// there must be an integer `k >= 2` with `b = (k a - 1)/(k - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LrsOutcome {
    /// `N <= 2n+1`, a one-distance profile, or a repeated-vector multiset
    /// (`a = 1`), where the relation is not required.
    NotApplicable { reason: String },
    Satisfied { k: u64 },
    /// `N > 2n+1` but no admissible integer exists.
    Violated,
}

pub fn lrs_check(g: &GramSet, profile: &TwoDistanceProfile, mode: Mode) -> LrsOutcome {
    let (n_pts, n) = (g.len(), g.rank());
    if n_pts <= 2 * n + 1 {
        return LrsOutcome::NotApplicable { reason: format!("N = {n_pts} <= 2n+1 = {}", 2 * n + 1) };
    }
    if mode.eq(&profile.a, &Scalar::one()) {
        // inner product 1 between distinct indices: repeated vectors, not a
        // genuine two-distance point set
        return LrsOutcome::NotApplicable { reason: "repeated vectors (a = 1)".into() };
    }
    // Largest k with (2k-1)^2 <= 2n; the relation itself can still hold at
    // k = 2 when the bound falls below 2 (possible for n <= 4), so always
    // search at least k = 2.
    let mut bound = 1u64;
    while (2 * (bound + 1) - 1).pow(2) <= 2 * n as u64 {
        bound += 1;
    }
    let bound = bound.max(2);
    for k in 2..=bound {
        let ks = Scalar::int(k as i64);
        let predicted = &(&(&ks * &profile.a) - &Scalar::one()) / &(&ks - &Scalar::one());
        if mode.eq(&predicted, &profile.b) {
            return LrsOutcome::Satisfied { k };
        }
    }
    LrsOutcome::Violated
}

/// Spherical design condition of a unit-norm Gram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DesignKind {
    /// `G 1 = 0` and `G^2 = (N/n) G`.
    #[serde(rename = "two-design")]
    TwoDesign,
    /// `G 1 = (N/n) 1` and `G^2 = (N/n) G`.
    #[serde(rename = "shifted")]
    ShiftedTwoDesign,
    #[serde(rename = "neither")]
    Neither,
}

pub fn design_check(g: &GramSet, mode: Mode) -> DesignKind {
    let check = check_gram_tight(g, mode);
    if !check.tight {
        return DesignKind::Neither;
    }
    let zero = Scalar::zero();
    let all_rows = |target: &Scalar| (0..g.len()).all(|i| mode.eq(&g.matrix().row_sum(i), target));
    if all_rows(&zero) {
        DesignKind::TwoDesign
    } else if all_rows(&check.frame_constant) {
        DesignKind::ShiftedTwoDesign
    } else {
        DesignKind::Neither
    }
}

/// Centers a shifted tight frame and rescales onto the unit sphere:
/// `G' = (G - J/n) * n/(n-1)`, a two-design Gram of rank `n-1`.
///
/// Requires the shifted branch (`G 1 = (N/n) 1`).
pub fn center_and_reduce(g: &GramSet, mode: Mode) -> Result<GramSet> {
    if design_check(g, mode) != DesignKind::ShiftedTwoDesign {
        return Err(Error::VerificationFailed(
            "centering requires a tight Gram with row sums N/n".into(),
        ));
    }
    let n = g.rank();
    if n < 2 {
        return Err(Error::Unsupported("cannot reduce a rank-1 frame".into()));
    }
    let inv_n = Scalar::ratio(1, n as i64);
    let scale = Scalar::ratio(n as i64, (n - 1) as i64);
    let m = Matrix::from_fn(g.len(), g.len(), |i, j| {
        &(g.matrix().get(i, j) - &inv_n) * &scale
    });
    let reduced = GramSet::new(m, mode)?;
    if reduced.rank() != n - 1 {
        return Err(Error::VerificationFailed(format!(
            "reduced Gram has rank {}, expected {}",
            reduced.rank(),
            n - 1
        )));
    }
    Ok(reduced)
}

/// Witnessed pair decomposition used by the common-neighbor certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairCounts {
    pub pair: (usize, usize),
    pub i_aa: usize,
    pub i_ab: usize,
    pub i_bb: usize,
}

/// Certificate tying a two-distance tight frame to a strongly regular graph:
/// closed-form common-neighbor counts, verified by brute force on the graph
/// of `a`-positions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CommonNeighborCertificate {
    pub c_a: usize,
    pub c_b: usize,
    pub recovered: SrgParams,
    /// Counts for one witnessed adjacent pair.
    pub a_pair: PairCounts,
    /// Counts for one witnessed non-adjacent pair.
    pub b_pair: PairCounts,
}

/// Closed-form count of common `a`-neighbors, corrected for the two
/// diagonal contributions of the defining sum
/// `(N/n) G_kl = sum_i G_ki G_il` (the terms `i = k` and `i = l` contribute
/// `1 * G_kl` each):
///
/// `C_a = [(N/n) a - 2a - 2(N_a - 1) a b - (N - 2 N_a) b^2] / (a - b)^2`
/// `C_b = [(N/n) b - 2b - 2 N_a a b - (N - 2 - 2 N_a) b^2] / (a - b)^2`
fn closed_form_counts(
    lam: &Scalar,
    a: &Scalar,
    b: &Scalar,
    n_pts: i64,
    n_a: i64,
) -> Result<(Scalar, Scalar)> {
    let denom = a.try_sub(b)?.square();
    let ab = a * b;
    let b2 = b.square();
    let c_a = &(&(&(&(lam * a) - &(&Scalar::int(2) * a))
        - &(&Scalar::int(2 * (n_a - 1)) * &ab))
        - &(&Scalar::int(n_pts - 2 * n_a) * &b2))
        / &denom;
    let c_b = &(&(&(&(lam * b) - &(&Scalar::int(2) * b)) - &(&Scalar::int(2 * n_a) * &ab))
        - &(&Scalar::int(n_pts - 2 - 2 * n_a) * &b2))
        / &denom;
    Ok((c_a, c_b))
}

/// Recovers the strongly regular graph underlying a regular two-distance
/// tight frame.
///
/// The graph of `a`-positions is scanned by brute force; the closed-form
/// counts must agree with the scan exactly, otherwise the certificate fails.
pub fn common_neighbor_certificate(
    g: &GramSet,
    profile: &TwoDistanceProfile,
    mode: Mode,
) -> Result<CommonNeighborCertificate> {
    if !profile.regular {
        return Err(Error::VerificationFailed(
            "frame is not regular: per-row counts of a differ".into(),
        ));
    }
    let n_a = profile.n_a.expect("regular profile has a common count");
    let n_pts = g.len();
    let mut adj = Adjacency::new(n_pts)?;
    for i in 0..n_pts {
        for j in (i + 1)..n_pts {
            if mode.eq(g.matrix().get(i, j), &profile.a) {
                adj.add_edge(i, j);
            }
        }
    }
    let params = match is_strongly_regular(&adj) {
        SrgCheck::Srg(p) => p,
        SrgCheck::NotSrg { reason, witness } => {
            return Err(Error::NotStronglyRegular(match witness {
                Some((i, j)) => format!("a-position graph: {reason} (witness pair ({i},{j}))"),
                None => format!("a-position graph: {reason}"),
            }))
        }
    };
    let lam = &Scalar::int(n_pts as i64) / &Scalar::int(g.rank() as i64);
    let (c_a, c_b) = closed_form_counts(&lam, &profile.a, &profile.b, n_pts as i64, n_a as i64)?;
    let int_of = |s: &Scalar, name: &str| -> Result<usize> {
        mode.to_integer(s)
            .and_then(|i| usize::try_from(i).ok())
            .ok_or_else(|| Error::VerificationFailed(format!("{name} = {s} is not a nonnegative integer")))
    };
    let c_a = int_of(&c_a, "C_a")?;
    let c_b = int_of(&c_b, "C_b")?;
    if c_a != params.lambda || c_b != params.mu {
        return Err(Error::VerificationFailed(format!(
            "closed-form counts (C_a, C_b) = ({c_a}, {c_b}) disagree with brute force ({}, {})",
            params.lambda, params.mu
        )));
    }
    if params.v != n_pts || params.k != n_a {
        return Err(Error::VerificationFailed(format!(
            "recovered graph {} does not match (N, N_a) = ({n_pts}, {n_a})",
            params
        )));
    }
    let witness = |want_edge: bool| -> Result<PairCounts> {
        for k in 0..n_pts {
            for l in (k + 1)..n_pts {
                if adj.has_edge(k, l) != want_edge {
                    continue;
                }
                let (mut i_aa, mut i_ab, mut i_bb) = (0, 0, 0);
                for i in 0..n_pts {
                    if i == k || i == l {
                        continue;
                    }
                    match (adj.has_edge(k, i), adj.has_edge(i, l)) {
                        (true, true) => i_aa += 1,
                        (false, false) => i_bb += 1,
                        _ => i_ab += 1, // both mixed orders pooled; they are equal by symmetry
                    }
                }
                return Ok(PairCounts { pair: (k, l), i_aa, i_ab: i_ab / 2, i_bb });
            }
        }
        Err(Error::VerificationFailed("no witness pair of the requested kind".into()))
    };
    let a_pair = witness(true)?;
    let b_pair = witness(false)?;
    // |I_ab| = N_a - C_a - 1 for an adjacent pair, N_a - C_b for a
    // non-adjacent one; |I_bb| = N_b - N_a + C + 1 resp. N_b - N_a + C - 1
    // with N_b = N - 1 - N_a.
    if a_pair.i_ab != n_a - c_a - 1 || b_pair.i_ab != n_a - c_b {
        return Err(Error::VerificationFailed(format!(
            "witnessed mixed-pair counts ({}, {}) disagree with ({}, {})",
            a_pair.i_ab,
            b_pair.i_ab,
            n_a - c_a - 1,
            n_a - c_b
        )));
    }
    Ok(CommonNeighborCertificate { c_a, c_b, recovered: params, a_pair, b_pair })
}

/// Everything the verification pipeline knows about one Gram matrix.
#[derive(Clone, Debug)]
pub struct FrameReport {
    /// Number of vectors N.
    pub n_vectors: usize,
    /// Rank n, when the matrix is PSD and a rank certificate exists.
    pub rank: Option<usize>,
    pub tight: bool,
    /// Frame constant `A = N/n`.
    pub frame_constant: Option<Scalar>,
    pub frame_potential: Scalar,
    pub fp_meets_bound: bool,
    pub a: Option<Scalar>,
    pub b: Option<Scalar>,
    pub n_a: Option<usize>,
    pub regular: Option<bool>,
    /// Common row sum, when rows are constant.
    pub t: Option<Scalar>,
    pub design: DesignKind,
    pub lrs: Option<LrsOutcome>,
    pub equiangular: bool,
    pub srg: Option<SrgParams>,
    pub flags: Vec<String>,
}

/// Runs the full verification pipeline on a certified Gram.
pub fn analyze(g: &GramSet, mode: Mode) -> FrameReport {
    let mut flags = Vec::new();
    let tightness = check_gram_tight(g, mode);
    let fp = frame_potential(g, mode);
    if fp.profile_formula_agrees == Some(false) {
        flags.push("frame potential disagrees with the two-distance formula".into());
    }
    if fp.meets_bound != tightness.tight {
        flags.push("frame potential bound and tightness test disagree".into());
    }
    let profile = two_distance_profile(g, mode);
    let design = design_check(g, mode);

    let mut report = FrameReport {
        n_vectors: g.len(),
        rank: Some(g.rank()),
        tight: tightness.tight,
        frame_constant: Some(tightness.frame_constant),
        frame_potential: fp.value,
        fp_meets_bound: fp.meets_bound,
        a: None,
        b: None,
        n_a: None,
        regular: None,
        t: None,
        design,
        lrs: None,
        equiangular: false,
        srg: None,
        flags,
    };

    // Row sums, reported whenever constant.
    let t0 = g.matrix().row_sum(0);
    if (1..g.len()).all(|i| mode.eq(&g.matrix().row_sum(i), &t0)) {
        report.t = Some(t0);
    }

    if let DistanceProfile::TwoDistance(p) = &profile {
        report.a = Some(p.a.clone());
        report.b = Some(p.b.clone());
        report.regular = Some(p.regular);
        report.n_a = p.n_a;
        report.equiangular = p.equiangular(mode);
        report.lrs = Some(lrs_check(g, p, mode));
        if !report.equiangular && report.tight {
            match regularity_check(g, p, mode) {
                Ok(n_a) => {
                    if Some(n_a) != p.n_a {
                        report.flags.push(format!(
                            "N_a formula gives {n_a} but rows count {:?}",
                            p.n_a
                        ));
                    }
                }
                Err(e) => report.flags.push(format!("regularity: {e}")),
            }
            if let Err(e) = b_equation_branch(g, p, mode) {
                report.flags.push(format!("branch identity: {e}"));
            }
        }
        // the closed-form count comparison presumes tightness
        if p.regular && report.tight {
            match common_neighbor_certificate(g, p, mode) {
                Ok(cert) => report.srg = Some(cert.recovered),
                Err(e) => report.flags.push(format!("graph recovery: {e}")),
            }
        }
    }
    report
}
