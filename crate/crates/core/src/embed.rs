//! Spherical embeddings of strongly regular graphs.
//!
//! Projecting the standard basis of `R^v` onto an eigenspace of the
//! adjacency matrix and normalizing yields a spherical two-distance set; the
//! two nontrivial eigenspaces give the canonical embeddings `S1` and `S2`,
//! and the trivial one gives the constant set with all inner products 1.
//! Every spherical two-distance embedding of the graph is a weighted mix of
//! these three, and the pairs `(a, b)` of admissible inner products form an
//! exact triangle in the plane: the point is feasible if and only if
//! `I + a*Phi1 + b*Phi2` is positive semidefinite.
//!
//! Inner-product pairs are carried in edge/non-edge order internally; the
//! sorted convention `b < a` is applied at report time by the `frames`
//! module.

use crate::error::{Error, Result};
use crate::matrix::{is_psd, ldlt_pivoted, FieldTag, Matrix};
use crate::scalar::{Mode, Scalar};
use crate::srg::{SpectralData, SrgGraph};

/// A certified Gram matrix: symmetric, unit diagonal, positive semidefinite,
/// with rank established by the pivoted LDL^T factorization.
#[derive(Clone, Debug, PartialEq)]
pub struct GramSet {
    matrix: Matrix,
    rank: usize,
    field: FieldTag,
}

impl GramSet {
    /// Validates symmetry, the unit diagonal, field compatibility and
    /// positive semidefiniteness; the rank certificate comes from the
    /// factorization.
    pub fn new(matrix: Matrix, mode: Mode) -> Result<GramSet> {
        matrix.check_symmetric()?;
        let one = Scalar::one();
        for i in 0..matrix.rows() {
            if !mode.eq(matrix.get(i, i), &one) {
                return Err(Error::NotUnitDiagonal(i));
            }
        }
        let field = matrix.field_tag()?;
        let fact = ldlt_pivoted(&matrix, mode, true)
            .map_err(|e| Error::NotPsd(format!("Gram matrix rejected: {e}")))?;
        Ok(GramSet { matrix, rank: fact.rank, field })
    }

    /// Number of vectors N.
    pub fn len(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.rows() == 0
    }

    /// Certified rank n (the dimension spanned by the vectors).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    /// Coordinates of the vector set, represented by the factorization
    /// `(P, L, D)` with `P^T L D L^T P = G` rather than by explicit
    /// square-rooted entries, so everything downstream stays exact.
    pub fn coordinates(&self, mode: Mode) -> crate::matrix::LdltFactorization {
        ldlt_pivoted(&self.matrix, mode, true).expect("a certified Gram always factors")
    }

    /// The Gram of the set with vector `i` negated (row and column `i` flip
    /// sign off the diagonal).  Rank and PSD-ness are preserved.
    pub fn negate_vector(&self, idx: usize) -> GramSet {
        let m = Matrix::from_fn(self.len(), self.len(), |i, j| {
            let flip = (i == idx) != (j == idx);
            if flip {
                -self.matrix.get(i, j)
            } else {
                self.matrix.get(i, j).clone()
            }
        });
        GramSet { matrix: m, rank: self.rank, field: self.field }
    }
}

fn spectrum_for_embedding(g: &SrgGraph) -> Result<SpectralData> {
    if !g.params().is_connected() {
        return Err(Error::ImprimitiveGraph);
    }
    g.spectrum()
}

/// The three entry values of `(v/n_j) * P_j` where
/// `P_j = (Phi1 - r' I - ((k - r')/v) J) / (r_j - r')`: returned as
/// `(diagonal, edge, non-edge)`.
fn dgs_entry_values(sp: &SpectralData, v: usize, which: usize) -> Result<(Scalar, Scalar, Scalar)> {
    let (r_own, r_other, n_own) = match which {
        1 => (&sp.r1, &sp.r2, sp.n1),
        2 => (&sp.r2, &sp.r1, sp.n2),
        _ => return Err(Error::Unsupported(format!("eigenspace index {which}, expected 1 or 2"))),
    };
    let v_s = Scalar::int(v as i64);
    let k = Scalar::int(sp.k as i64);
    let denom = r_own.try_sub(r_other)?;
    let scale = &v_s / &Scalar::int(n_own as i64);
    let c = &(&k - r_other) / &v_s; // (k - r') / v
    let diag = &(&(&(-r_other) - &c) / &denom) * &scale;
    let edge = &(&(&(Scalar::one()) - &c) / &denom) * &scale;
    let non_edge = &(&(-&c) / &denom) * &scale;
    Ok((diag, edge, non_edge))
}

/// Exact spectral projectors `P1`, `P2` onto the two nontrivial eigenspaces
/// of the adjacency matrix.  Requires a connected graph (`r1 != k`).
pub fn spectral_projectors(g: &SrgGraph) -> Result<(Matrix, Matrix)> {
    let sp = spectrum_for_embedding(g)?;
    let v = g.params().v;
    let build = |which: usize| -> Result<Matrix> {
        let (diag, edge, non_edge) = dgs_entry_values(&sp, v, which)?;
        let n_own = if which == 1 { sp.n1 } else { sp.n2 };
        let unscale = &Scalar::int(n_own as i64) / &Scalar::int(v as i64);
        let (d, e, ne) = (&diag * &unscale, &edge * &unscale, &non_edge * &unscale);
        Ok(Matrix::from_fn(v, v, |i, j| {
            if i == j {
                d.clone()
            } else if g.adjacency().has_edge(i, j) {
                e.clone()
            } else {
                ne.clone()
            }
        }))
    };
    Ok((build(1)?, build(2)?))
}

/// The Delsarte-Goethals-Seidel Gram `G_j = (v/n_j) P_j`: unit diagonal,
/// rank `n_j`, with exactly two off-diagonal values (one on edges, one on
/// non-edges).
pub fn dgs_gram(g: &SrgGraph, which: usize) -> Result<GramSet> {
    let sp = spectrum_for_embedding(g)?;
    let v = g.params().v;
    let (diag, edge, non_edge) = dgs_entry_values(&sp, v, which)?;
    if !diag.is_one() {
        return Err(Error::VerificationFailed(format!(
            "projector diagonal normalizes to {diag}, expected 1"
        )));
    }
    let m = Matrix::from_fn(v, v, |i, j| {
        if i == j {
            Scalar::one()
        } else if g.adjacency().has_edge(i, j) {
            edge.clone()
        } else {
            non_edge.clone()
        }
    });
    let gram = GramSet::new(m, Mode::Exact)?;
    let n_own = if which == 1 { sp.n1 } else { sp.n2 };
    if gram.rank() != n_own {
        return Err(Error::VerificationFailed(format!(
            "embedding rank {} disagrees with multiplicity {}",
            gram.rank(),
            n_own
        )));
    }
    Ok(gram)
}

/// Closed-form inner products of the eigenspace embedding, in
/// `(a_edge, b_nonedge)` order, without building the matrix:
/// `a = (v - k + r') / (n_j (r_j - r'))` and `b = (r' - k) / (n_j (r_j - r'))`.
pub fn dgs_inner_products(p: &crate::srg::SrgParams, which: usize) -> Result<(Scalar, Scalar)> {
    if !p.is_connected() {
        return Err(Error::ImprimitiveGraph);
    }
    let sp = p.spectrum()?;
    let (r_own, r_other, n_own) = match which {
        1 => (&sp.r1, &sp.r2, sp.n1),
        2 => (&sp.r2, &sp.r1, sp.n2),
        _ => return Err(Error::Unsupported(format!("eigenspace index {which}, expected 1 or 2"))),
    };
    let denom = &Scalar::int(n_own as i64) * &r_own.try_sub(r_other)?;
    let a_edge = &(&(&Scalar::int(p.v as i64) - &Scalar::int(p.k as i64)) + r_other) / &denom;
    let b_nonedge = &(r_other - &Scalar::int(p.k as i64)) / &denom;
    Ok((a_edge, b_nonedge))
}

/// Nonnegative squared mixing weights `(w0, w1, w2)` summing to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingWeights {
    pub w0: Scalar,
    pub w1: Scalar,
    pub w2: Scalar,
}

impl EmbeddingWeights {
    pub fn new(w0: Scalar, w1: Scalar, w2: Scalar) -> Result<EmbeddingWeights> {
        for w in [&w0, &w1, &w2] {
            if w.sign() < 0 {
                return Err(Error::InvalidWeights(format!("negative weight {w}")));
            }
        }
        let sum = &(&w0 + &w1) + &w2;
        if !sum.is_one() {
            return Err(Error::InvalidWeights(format!("weights sum to {sum}, expected 1")));
        }
        Ok(EmbeddingWeights { w0, w1, w2 })
    }
}

/// The exact feasibility triangle of inner-product pairs `(a, b)`.
///
/// The three half-planes are the eigenvalue inequalities of
/// `I + a*Phi1 + b*Phi2`; the vertices are `(1,1)` and the two canonical
/// embeddings.  A pair lies in the triangle if and only if the matrix is
/// positive semidefinite.
#[derive(Clone, Debug)]
pub struct FeasibleRegion {
    /// `(a_j, b_j)` for j = 0, 1, 2; vertex 0 is `(1, 1)`.
    pub vertices: [(Scalar, Scalar); 3],
    /// Coefficient triples `(c, ca, cb)` of the constraints
    /// `c + ca*a + cb*b >= 0`.
    pub lines: [(Scalar, Scalar, Scalar); 3],
}

impl FeasibleRegion {
    /// Exact membership test: all three constraints nonnegative.
    pub fn contains(&self, a: &Scalar, b: &Scalar) -> Result<bool> {
        for (c, ca, cb) in &self.lines {
            let val = &(c + &(ca * a)) + &(cb * b);
            if val.sign() < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Intersection of two lines `c + ca*a + cb*b = 0`.
fn line_intersection(
    l1: &(Scalar, Scalar, Scalar),
    l2: &(Scalar, Scalar, Scalar),
) -> Result<(Scalar, Scalar)> {
    let det = &(&l1.1 * &l2.2) - &(&l1.2 * &l2.1);
    if det.is_zero() {
        return Err(Error::VerificationFailed("feasibility lines are parallel".into()));
    }
    // Cramer on [ca cb; ca' cb'] [a b]^T = [-c, -c']^T
    let a = &(&(&(-&l1.0) * &l2.2) - &(&l1.2 * &(-&l2.0))) / &det;
    let b = &(&(&l1.1 * &(-&l2.0)) - &(&(-&l1.0) * &l2.1)) / &det;
    Ok((a, b))
}

/// Builds the feasibility triangle for a connected strongly regular graph.
///
/// Vertices are computed as line intersections and cross-checked against the
/// closed-form embedding values; a disagreement is a hard error.
pub fn feasible_region(g: &SrgGraph) -> Result<FeasibleRegion> {
    let sp = spectrum_for_embedding(g)?;
    let p = g.params();
    let k = Scalar::int(p.k as i64);
    let comp_k = Scalar::int((p.v - 1 - p.k) as i64);
    let lines = [
        (Scalar::one(), k, comp_k),
        (Scalar::one(), sp.r1.clone(), sp.s1.clone()),
        (Scalar::one(), sp.r2.clone(), sp.s2.clone()),
    ];
    // vertex j is the intersection of the two lines other than j
    let v0 = line_intersection(&lines[1], &lines[2])?;
    let v1 = line_intersection(&lines[0], &lines[2])?;
    let v2 = line_intersection(&lines[0], &lines[1])?;
    if v0 != (Scalar::one(), Scalar::one()) {
        return Err(Error::VerificationFailed(format!(
            "trivial embedding vertex came out as ({}, {})",
            v0.0, v0.1
        )));
    }
    for (vertex, which) in [(&v1, 1), (&v2, 2)] {
        let closed = dgs_inner_products(&p, which)?;
        if *vertex != closed {
            return Err(Error::VerificationFailed(format!(
                "feasibility vertex ({}, {}) disagrees with embedding values ({}, {})",
                vertex.0, vertex.1, closed.0, closed.1
            )));
        }
    }
    Ok(FeasibleRegion { vertices: [v0, v1, v2], lines })
}

/// Gram of the weighted mix `w0*J + w1*G1 + w2*G2`.
///
/// The rank is `(w0>0) + (w1>0)*n1 + (w2>0)*n2`, verified against the
/// factorization certificate.
pub fn mixed_gram(g: &SrgGraph, w: &EmbeddingWeights) -> Result<GramSet> {
    let sp = spectrum_for_embedding(g)?;
    let p = g.params();
    let (a1, b1) = dgs_inner_products(&p, 1)?;
    let (a2, b2) = dgs_inner_products(&p, 2)?;
    let edge = &(&w.w0 + &(&w.w1 * &a1)) + &(&w.w2 * &a2);
    let non_edge = &(&w.w0 + &(&w.w1 * &b1)) + &(&w.w2 * &b2);
    let m = Matrix::from_fn(p.v, p.v, |i, j| {
        if i == j {
            Scalar::one()
        } else if g.adjacency().has_edge(i, j) {
            edge.clone()
        } else {
            non_edge.clone()
        }
    });
    let gram = GramSet::new(m, Mode::Exact)?;
    let expected_rank = usize::from(w.w0.sign() > 0)
        + if w.w1.sign() > 0 { sp.n1 } else { 0 }
        + if w.w2.sign() > 0 { sp.n2 } else { 0 };
    if gram.rank() != expected_rank {
        return Err(Error::VerificationFailed(format!(
            "mixed Gram rank {} disagrees with predicted {}",
            gram.rank(),
            expected_rank
        )));
    }
    Ok(gram)
}

/// Unique barycentric weights expressing `(a, b)` over the triangle
/// vertices; errors when the point lies outside.
pub fn weights_for(g: &SrgGraph, a: &Scalar, b: &Scalar) -> Result<EmbeddingWeights> {
    let region = feasible_region(g)?;
    let [(a0, b0), (a1, b1), (a2, b2)] = &region.vertices;
    // Solve [a0 a1 a2; b0 b1 b2; 1 1 1] w = (a, b, 1) by Cramer.
    let det3 = |m: [[&Scalar; 3]; 3]| -> Scalar {
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            &(m[r1][c1] * m[r2][c2]) - &(m[r1][c2] * m[r2][c1])
        };
        &(&(m[0][0] * &minor(1, 2, 1, 2)) - &(m[0][1] * &minor(1, 2, 0, 2)))
            + &(m[0][2] * &minor(1, 2, 0, 1))
    };
    let one = Scalar::one();
    let det = det3([[a0, a1, a2], [b0, b1, b2], [&one, &one, &one]]);
    if det.is_zero() {
        return Err(Error::VerificationFailed("degenerate feasibility triangle".into()));
    }
    let w0 = &det3([[a, a1, a2], [b, b1, b2], [&one, &one, &one]]) / &det;
    let w1 = &det3([[a0, a, a2], [b0, b, b2], [&one, &one, &one]]) / &det;
    let w2 = &det3([[a0, a1, a], [b0, b1, b], [&one, &one, &one]]) / &det;
    if w0.sign() < 0 || w1.sign() < 0 || w2.sign() < 0 {
        return Err(Error::OutsideFeasibleRegion(a.to_string(), b.to_string()));
    }
    EmbeddingWeights::new(w0, w1, w2)
}

/// Gram of the regular simplex on `n_points` vertices: off-diagonal constant
/// `-1/(N-1)`, rank `N-1`.
pub fn simplex_gram(n_points: usize) -> Result<GramSet> {
    if n_points < 2 {
        return Err(Error::Unsupported(format!("simplex needs at least 2 points, got {n_points}")));
    }
    let off = Scalar::ratio(-1, (n_points - 1) as i64);
    let m = Matrix::from_fn(n_points, n_points, |i, j| {
        if i == j {
            Scalar::one()
        } else {
            off.clone()
        }
    });
    let gram = GramSet::new(m, Mode::Exact)?;
    debug_assert_eq!(gram.rank(), n_points - 1);
    Ok(gram)
}

/// PSD test of `I + a*Phi1 + b*Phi2`, the oracle side of the feasibility
/// triangle.
pub fn psd_probe(g: &SrgGraph, a: &Scalar, b: &Scalar) -> Result<(bool, Option<usize>)> {
    let v = g.params().v;
    let m = Matrix::from_fn(v, v, |i, j| {
        if i == j {
            Scalar::one()
        } else if g.adjacency().has_edge(i, j) {
            a.clone()
        } else {
            b.clone()
        }
    });
    Ok(is_psd(&m, Mode::Exact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::srg::{triangular, SrgParams};

    fn t5() -> SrgGraph {
        triangular(5).unwrap()
    }

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::ratio(p, d)
    }

    #[test]
    fn projectors_resolve_identity() {
        let g = t5();
        let (p1, p2) = spectral_projectors(&g).unwrap();
        let jv = Matrix::ones(10).scale(&q(1, 10));
        let sum = &(&p1 + &p2) + &jv;
        assert_eq!(sum, Matrix::identity(10));
    }

    #[test]
    fn projectors_idempotent_orthogonal() {
        let g = t5();
        let (p1, p2) = spectral_projectors(&g).unwrap();
        assert_eq!(&p1 * &p1, p1);
        assert_eq!(&p2 * &p2, p2);
        assert_eq!(&p1 * &p2, Matrix::zeros(10, 10));
    }

    #[test]
    fn projector_traces_equal_multiplicities() {
        let g = t5();
        let (p1, p2) = spectral_projectors(&g).unwrap();
        let trace = |m: &Matrix| {
            let mut acc = Scalar::zero();
            for i in 0..m.rows() {
                acc = &acc + m.get(i, i);
            }
            acc
        };
        assert_eq!(trace(&p1), Scalar::int(4));
        assert_eq!(trace(&p2), Scalar::int(5));
    }

    #[test]
    fn projectors_are_eigenprojectors() {
        for g in [t5(), crate::srg::paley(5).unwrap()] {
            let sp = g.spectrum().unwrap();
            let phi = g.adjacency_matrix();
            let (p1, p2) = spectral_projectors(&g).unwrap();
            assert_eq!(&phi * &p1, p1.scale(&sp.r1));
            assert_eq!(&phi * &p2, p2.scale(&sp.r2));
        }
    }

    #[test]
    fn dgs_values_for_t5() {
        let g = t5();
        let g1 = dgs_gram(&g, 1).unwrap();
        assert_eq!(g1.rank(), 4);
        // edges carry 1/6, non-edges -2/3
        assert_eq!(g1.matrix().get(0, 1), &q(1, 6)); // {0,1}&{0,2} meet
        let edges = g.adjacency().edges();
        for (i, j) in edges {
            assert_eq!(g1.matrix().get(i, j), &q(1, 6));
        }
        let g2 = dgs_gram(&g, 2).unwrap();
        assert_eq!(g2.rank(), 5);
        assert_eq!(g2.matrix().get(0, 1), &q(-1, 3));
    }

    #[test]
    fn dgs_gram_is_scaled_projector() {
        let g = t5();
        let (p1, _) = spectral_projectors(&g).unwrap();
        let g1 = dgs_gram(&g, 1).unwrap();
        assert_eq!(g1.matrix(), &p1.scale(&q(10, 4)));
    }

    #[test]
    fn dgs_closed_form_values() {
        let p15 = SrgParams::validate(15, 8, 4, 4).unwrap();
        assert_eq!(dgs_inner_products(&p15, 1).unwrap(), (q(1, 4), q(-1, 2)));
        assert_eq!(dgs_inner_products(&p15, 2).unwrap(), (q(-1, 4), q(1, 6)));
        let p16 = SrgParams::validate(16, 10, 6, 6).unwrap();
        assert_eq!(dgs_inner_products(&p16, 1).unwrap(), (q(1, 5), q(-3, 5)));
        assert_eq!(dgs_inner_products(&p16, 2).unwrap(), (q(-1, 5), q(1, 5)));
    }

    #[test]
    fn dgs_gram_identity_g2_eq_lambda_g() {
        // G^2 = (v/n) G, the tight-frame Gram identity.
        let g = t5();
        let g1 = dgs_gram(&g, 1).unwrap();
        let sq = g1.matrix() * g1.matrix();
        assert_eq!(sq, g1.matrix().scale(&q(10, 4)));
    }

    #[test]
    fn dgs_row_sums_vanish() {
        let g = t5();
        for which in [1, 2] {
            let gm = dgs_gram(&g, which).unwrap();
            for i in 0..10 {
                assert!(gm.matrix().row_sum(i).is_zero());
            }
        }
    }

    #[test]
    fn imprimitive_rejected() {
        // 2 x K3: SRG(6,2,1,0), disconnected, mu = 0
        let mut adj = crate::srg::Adjacency::new(6).unwrap();
        for base in [0, 3] {
            adj.add_edge(base, base + 1);
            adj.add_edge(base, base + 2);
            adj.add_edge(base + 1, base + 2);
        }
        let g = SrgGraph::from_adjacency(adj).unwrap();
        assert!(matches!(dgs_gram(&g, 1), Err(Error::ImprimitiveGraph)));
        assert!(matches!(feasible_region(&g), Err(Error::ImprimitiveGraph)));
    }

    #[test]
    fn feasible_region_t5_vertices() {
        let g = t5();
        let region = feasible_region(&g).unwrap();
        assert_eq!(region.vertices[0], (Scalar::one(), Scalar::one()));
        assert_eq!(region.vertices[1], (q(1, 6), q(-2, 3)));
        assert_eq!(region.vertices[2], (q(-1, 3), q(1, 3)));
    }

    #[test]
    fn membership_matches_psd_oracle() {
        let g = t5();
        let region = feasible_region(&g).unwrap();
        let inside = (q(-1, 9), q(-1, 9));
        assert!(region.contains(&inside.0, &inside.1).unwrap());
        assert!(psd_probe(&g, &inside.0, &inside.1).unwrap().0);
        let outside = (q(1, 6), q(-3, 4));
        assert!(!region.contains(&outside.0, &outside.1).unwrap());
        assert!(!psd_probe(&g, &outside.0, &outside.1).unwrap().0);
        // a triangle vertex probes PSD with the embedding rank
        assert_eq!(psd_probe(&g, &q(1, 6), &q(-2, 3)).unwrap(), (true, Some(4)));
        // a far-outside point fails fast
        assert!(!psd_probe(&g, &Scalar::int(1), &Scalar::int(-1)).unwrap().0);
    }

    #[test]
    fn mixed_gram_degenerate_weights() {
        let g = t5();
        let all_j = mixed_gram(
            &g,
            &EmbeddingWeights::new(Scalar::one(), Scalar::zero(), Scalar::zero()).unwrap(),
        )
        .unwrap();
        assert_eq!(all_j.matrix(), &Matrix::ones(10));
        assert_eq!(all_j.rank(), 1);

        let pure_1 = mixed_gram(
            &g,
            &EmbeddingWeights::new(Scalar::zero(), Scalar::one(), Scalar::zero()).unwrap(),
        )
        .unwrap();
        assert_eq!(pure_1, dgs_gram(&g, 1).unwrap());
    }

    #[test]
    fn simplex_weights_give_constant_gram() {
        let g = t5();
        let w = EmbeddingWeights::new(Scalar::zero(), q(4, 9), q(5, 9)).unwrap();
        let gm = mixed_gram(&g, &w).unwrap();
        assert_eq!(gm.rank(), 9);
        for i in 0..10 {
            for j in 0..10 {
                if i != j {
                    assert_eq!(gm.matrix().get(i, j), &q(-1, 9));
                }
            }
        }
        assert_eq!(gm.matrix(), simplex_gram(10).unwrap().matrix());
    }

    #[test]
    fn weights_round_trip() {
        let g = t5();
        assert_eq!(
            weights_for(&g, &q(1, 6), &q(-2, 3)).unwrap(),
            EmbeddingWeights::new(Scalar::zero(), Scalar::one(), Scalar::zero()).unwrap()
        );
        assert_eq!(
            weights_for(&g, &q(-1, 9), &q(-1, 9)).unwrap(),
            EmbeddingWeights::new(Scalar::zero(), q(4, 9), q(5, 9)).unwrap()
        );
        assert!(matches!(
            weights_for(&g, &q(1, 6), &q(-3, 4)),
            Err(Error::OutsideFeasibleRegion(..))
        ));
    }

    #[test]
    fn simplex_small_cases() {
        let s2 = simplex_gram(2).unwrap();
        assert_eq!(s2.rank(), 1);
        assert_eq!(s2.matrix().get(0, 1), &Scalar::int(-1));
        let s4 = simplex_gram(4).unwrap();
        assert_eq!(s4.rank(), 3);
        assert_eq!(s4.matrix().get(2, 1), &q(-1, 3));
        assert!(simplex_gram(1).is_err());
    }

    #[test]
    fn conference_graph_embeds_in_quadratic_field() {
        let g = crate::srg::paley(5).unwrap();
        let g1 = dgs_gram(&g, 1).unwrap();
        assert_eq!(g1.rank(), 2);
        // pentagon: a = (sqrt5 - 1)/4, b = -(sqrt5 + 1)/4
        assert_eq!(g1.matrix().get(0, 1).to_string(), "-1/4+1/4*sqrt(5)");
        let (af, bf) = (g1.matrix().get(0, 1).to_f64(), g1.matrix().get(0, 2).to_f64());
        assert!((af - 0.309_016_994).abs() < 1e-8);
        assert!((bf + 0.809_016_994).abs() < 1e-8);
    }

    #[test]
    fn coordinates_reproduce_the_gram() {
        let g = dgs_gram(&t5(), 1).unwrap();
        let f = g.coordinates(Mode::Exact);
        assert_eq!(f.rank, 4);
        assert_eq!(&f.reconstruct(), g.matrix());
    }

    #[test]
    fn gram_set_rejects_bad_inputs() {
        let mut m = Matrix::identity(2);
        m.set(0, 1, Scalar::one());
        assert!(matches!(GramSet::new(m, Mode::Exact), Err(Error::NotSymmetric(0, 1))));

        let mut m = Matrix::identity(2);
        m.set(0, 0, q(1, 2));
        assert!(matches!(GramSet::new(m, Mode::Exact), Err(Error::NotUnitDiagonal(0))));

        let mut m = Matrix::identity(2);
        m.set(0, 1, Scalar::int(2));
        m.set(1, 0, Scalar::int(2));
        assert!(matches!(GramSet::new(m, Mode::Exact), Err(Error::NotPsd(_))));
    }
}
