//! Torsion (determinant) of a based finite exact complex.
//!
//! For an exact complex 0 -> E^0 -> ... -> E^{n+1} -> 0 with fixed bases,
//! the torsion is the scalar obtained by choosing, for each boundary, a
//! set S_i of basis vectors with independent images, and forming the
//! alternating product of the determinants of the square matrices that
//! express (image of S_{i-1}) wedge S_i in the top exterior power of E^i.
//! The value does not depend on the choices of S_i, and scaling every
//! boundary by mu multiplies it by mu^D with
//! D = (-1)^{n+1} sum_i (-1)^i i dim(E^i).

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arith::{rat_pow, Rat};
use crate::linalg::{
    det_multimodular, select_independent_columns, select_independent_columns_ordered, LinalgError,
    QMatrix,
};

#[derive(Debug, Error)]
pub enum TorsionError {
    #[error("boundary shapes do not chain: {0}")]
    ShapeChain(String),
    #[error("not a complex: boundary {i} followed by boundary {next} is nonzero")]
    NotAComplex { i: usize, next: usize },
    #[error("complex is not exact (rank profile {rank_profile:?})")]
    NotExact { rank_profile: Vec<usize> },
    #[error("invalid minor selection at boundary {i}: {reason}")]
    InvalidSelection { i: usize, reason: String },
    #[error("change of basis must be invertible and square at term {i}")]
    BadBasisChange { i: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// One term of a based complex: a label, a dimension, and a fingerprint of
/// the ordered basis it is expressed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub label: String,
    pub dim: usize,
    pub basis_id: String,
}

impl Term {
    pub fn new(label: impl Into<String>, dim: usize, basis_id: impl Into<String>) -> Self {
        Term {
            label: label.into(),
            dim,
            basis_id: basis_id.into(),
        }
    }
}

/// A bounded complex of based finite-dimensional rational vector spaces.
/// `boundaries[i]` maps term i to term i+1, so it has `dims[i+1]` rows and
/// `dims[i]` columns.
#[derive(Debug, Clone)]
pub struct BasedComplex {
    terms: Vec<Term>,
    boundaries: Vec<QMatrix>,
}

/// Exactness certificate: the ranks kappa_i of the boundaries and whether
/// kappa_i + kappa_{i-1} = dim E^i holds at every term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub exact: bool,
    pub rank_profile: Vec<usize>,
}

/// Torsion value plus the bookkeeping it was computed under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionResult {
    pub value: Rat,
    pub rank_profile: Vec<usize>,
    /// Scaling exponent D: Tor(mu d) = mu^D Tor(d).
    pub degree_weight: i64,
    pub basis_fingerprint: String,
}

/// Evaluation options: alternative minor selections (for the
/// choice-independence tests) and the multi-modular determinant path.
#[derive(Debug, Clone, Default)]
pub struct TorsionOptions {
    pub selections: Option<Vec<Vec<usize>>>,
    pub multimodular: bool,
}

impl BasedComplex {
    pub fn new(terms: Vec<Term>, boundaries: Vec<QMatrix>) -> Result<Self, TorsionError> {
        if terms.is_empty() {
            return Err(TorsionError::ShapeChain("no terms".into()));
        }
        if boundaries.len() + 1 != terms.len() {
            return Err(TorsionError::ShapeChain(format!(
                "{} terms need {} boundaries, got {}",
                terms.len(),
                terms.len() - 1,
                boundaries.len()
            )));
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.cols() != terms[i].dim || b.rows() != terms[i + 1].dim {
                return Err(TorsionError::ShapeChain(format!(
                    "boundary {i} is {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    terms[i + 1].dim,
                    terms[i].dim
                )));
            }
        }
        Ok(BasedComplex { terms, boundaries })
    }

    /// Unlabelled complex from raw dimensions and boundary matrices.
    pub fn from_boundaries(dims: Vec<usize>, boundaries: Vec<QMatrix>) -> Result<Self, TorsionError> {
        let terms = dims
            .iter()
            .enumerate()
            .map(|(i, &d)| Term::new(format!("E{i}"), d, format!("std{d}")))
            .collect();
        Self::new(terms, boundaries)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim).collect()
    }

    pub fn boundaries(&self) -> &[QMatrix] {
        &self.boundaries
    }

    /// Scale every boundary by mu (the complex property is preserved).
    pub fn scale_boundaries(&self, mu: &Rat) -> Self {
        BasedComplex {
            terms: self.terms.clone(),
            boundaries: self.boundaries.iter().map(|b| b.scale(mu)).collect(),
        }
    }

    fn verify_complex_property(&self) -> Result<(), TorsionError> {
        for i in 0..self.boundaries.len().saturating_sub(1) {
            let prod = self.boundaries[i + 1].mul(&self.boundaries[i])?;
            if !prod.is_zero() {
                return Err(TorsionError::NotAComplex { i, next: i + 1 });
            }
        }
        Ok(())
    }

    /// Check exactness via the rank conditions kappa_i + kappa_{i-1} = dim E^i.
    /// Errors only if the input is not a complex at all.
    pub fn check_exact(&self) -> Result<ExactnessReport, TorsionError> {
        self.verify_complex_property()?;
        let kappa: Vec<usize> = self.boundaries.iter().map(|b| b.rank()).collect();
        let l = self.terms.len();
        let mut exact = true;
        for i in 0..l {
            let prev = if i == 0 { 0 } else { kappa[i - 1] };
            let here = if i < kappa.len() { kappa[i] } else { 0 };
            if prev + here != self.terms[i].dim {
                exact = false;
            }
        }
        Ok(ExactnessReport {
            exact,
            rank_profile: kappa,
        })
    }

    pub fn torsion(&self) -> Result<TorsionResult, TorsionError> {
        self.torsion_with(&TorsionOptions::default())
    }

    pub fn torsion_with(&self, opts: &TorsionOptions) -> Result<TorsionResult, TorsionError> {
        let report = self.check_exact()?;
        if !report.exact {
            return Err(TorsionError::NotExact {
                rank_profile: report.rank_profile,
            });
        }
        let kappa = &report.rank_profile;
        let nb = self.boundaries.len();

        // choose S_i: kappa_i columns of boundary i with independent images
        let mut selections: Vec<Vec<usize>> = Vec::with_capacity(nb);
        match &opts.selections {
            Some(given) => {
                if given.len() != nb {
                    return Err(TorsionError::InvalidSelection {
                        i: given.len(),
                        reason: format!("expected {nb} selections"),
                    });
                }
                for (i, sel) in given.iter().enumerate() {
                    let mut sel = sel.clone();
                    sel.sort_unstable();
                    sel.dedup();
                    if sel.len() != kappa[i] {
                        return Err(TorsionError::InvalidSelection {
                            i,
                            reason: format!("need {} columns, got {}", kappa[i], sel.len()),
                        });
                    }
                    if sel.iter().any(|&c| c >= self.boundaries[i].cols()) {
                        return Err(TorsionError::InvalidSelection {
                            i,
                            reason: "column index out of range".into(),
                        });
                    }
                    let all_rows: Vec<usize> = (0..self.boundaries[i].rows()).collect();
                    let sub = self.boundaries[i].submatrix(&all_rows, &sel);
                    if sub.rank() != kappa[i] {
                        return Err(TorsionError::InvalidSelection {
                            i,
                            reason: "selected images are dependent".into(),
                        });
                    }
                    selections.push(sel);
                }
            }
            None => {
                for b in &self.boundaries {
                    selections.push(select_independent_columns(b, &[])?.col_indices);
                }
            }
        }

        // M_i = [ boundary_{i-1} columns S_{i-1} | identity columns S_i ],
        // the matrix of (d S_{i-1}) wedge S_i in the standard basis of E^i
        let n_signed = nb as i64 - 1; // the paper's n
        let mut value = Rat::one();
        for i in 0..self.terms.len() {
            let dim = self.terms[i].dim;
            let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(dim);
            if i > 0 {
                for &c in &selections[i - 1] {
                    cols.push(self.boundaries[i - 1].column(c));
                }
            }
            if i < nb {
                for &c in &selections[i] {
                    let mut e = vec![Rat::zero(); dim];
                    e[c] = Rat::one();
                    cols.push(e);
                }
            }
            debug_assert_eq!(cols.len(), dim, "exactness guarantees a square matrix");
            let m = QMatrix::from_columns(dim, cols);
            let det = if opts.multimodular {
                det_multimodular(&m)?
            } else {
                m.det()?
            };
            debug_assert!(!det.is_zero(), "exactness guarantees invertibility");
            // Tor^{(-1)^n} = prod det(M_i)^{(-1)^{i+1}}
            let exponent = (n_signed + i as i64 + 1) % 2 == 0;
            if exponent {
                value *= det;
            } else {
                value /= det;
            }
        }

        Ok(TorsionResult {
            value,
            rank_profile: kappa.clone(),
            degree_weight: scaling_exponent(&self.dims()),
            basis_fingerprint: self.fingerprint(),
        })
    }

    /// Hash of all term bases (labels, dimensions, basis ids).
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        for t in &self.terms {
            h.update(t.label.as_bytes());
            h.update(t.dim.to_le_bytes());
            h.update(t.basis_id.as_bytes());
            h.update([0u8]);
        }
        let digest = h.finalize();
        hex_prefix(&digest, 16)
    }

    /// Express the same complex in new bases. `changes[i]` is invertible
    /// with the columns giving the new basis of E^i in the old coordinates,
    /// so boundaries transform as P_{i+1}^{-1} d_i P_i and the torsion
    /// picks up prod det(changes[i])^{(-1)^{n+i}}.
    pub fn rebase(&self, changes: &[QMatrix]) -> Result<BasedComplex, TorsionError> {
        if changes.len() != self.terms.len() {
            return Err(TorsionError::ShapeChain(format!(
                "{} change matrices for {} terms",
                changes.len(),
                self.terms.len()
            )));
        }
        let mut inverses = Vec::with_capacity(changes.len());
        for (i, p) in changes.iter().enumerate() {
            if p.rows() != self.terms[i].dim || p.cols() != self.terms[i].dim {
                return Err(TorsionError::BadBasisChange { i });
            }
            inverses.push(p.inverse().map_err(|_| TorsionError::BadBasisChange { i })?);
        }
        let boundaries = self
            .boundaries
            .iter()
            .enumerate()
            .map(|(i, b)| inverses[i + 1].mul(&b.mul(&changes[i])?))
            .collect::<Result<Vec<_>, _>>()?;
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut h = Sha256::new();
                h.update(t.basis_id.as_bytes());
                h.update(b"rebased");
                h.update(i.to_le_bytes());
                Term::new(t.label.clone(), t.dim, hex_prefix(&h.finalize(), 8))
            })
            .collect();
        BasedComplex::new(terms, boundaries)
    }

    /// Random valid alternative selections, produced by running the greedy
    /// sweep along a shuffled column order.
    pub fn random_selections(&self, seed: u64) -> Result<Vec<Vec<usize>>, TorsionError> {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for b in &self.boundaries {
            let mut order: Vec<usize> = (0..b.cols()).collect();
            order.shuffle(&mut rng);
            out.push(select_independent_columns_ordered(b, &order)?.col_indices);
        }
        Ok(out)
    }
}

fn hex_prefix(digest: &[u8], bytes: usize) -> String {
    digest
        .iter()
        .take(bytes)
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Degree of the torsion as a polynomial in the boundary maps:
/// D = (-1)^{n+1} sum_i (-1)^i i dim(E^i), where the complex has n+2 terms.
pub fn scaling_exponent(dims: &[usize]) -> i64 {
    let n = dims.len() as i64 - 2;
    let mut sum = 0i64;
    for (i, &d) in dims.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        sum += sign * i as i64 * d as i64;
    }
    if (n + 1) % 2 == 0 {
        sum
    } else {
        -sum
    }
}

/// Predicted torsion ratio under the rebase transformation law.
pub fn rebase_factor(changes: &[QMatrix], n: i64) -> Result<Rat, TorsionError> {
    let mut f = Rat::one();
    for (i, p) in changes.iter().enumerate() {
        let d = p.det()?;
        f *= rat_pow(&d, if (n + i as i64) % 2 == 0 { 1 } else { -1 });
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, Rat};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn mat(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    fn complex(dims: &[usize], boundaries: Vec<QMatrix>) -> BasedComplex {
        BasedComplex::from_boundaries(dims.to_vec(), boundaries).unwrap()
    }

    /// 0 -> C -> C^2 -> C -> 0 Koszul complex of the regular pair (a, b).
    fn koszul_pair(a: i64, b: i64) -> BasedComplex {
        complex(
            &[1, 2, 1],
            vec![mat(&[&[a], &[b]]), mat(&[&[-b, a]])],
        )
    }

    #[test]
    fn exactness_examples() {
        let single = complex(&[1, 1], vec![mat(&[&[1]])]);
        let rep = single.check_exact().unwrap();
        assert!(rep.exact);
        assert_eq!(rep.rank_profile, vec![1]);

        let rep = koszul_pair(1, 2).check_exact().unwrap();
        assert!(rep.exact);
        assert_eq!(rep.rank_profile, vec![1, 1]);

        let zero_map = complex(&[1, 1], vec![mat(&[&[0]])]);
        assert!(!zero_map.check_exact().unwrap().exact);
    }

    #[test]
    fn non_complex_is_structural_error() {
        // d1 d0 = [1] != 0
        let bad = complex(&[1, 1, 1], vec![mat(&[&[1]]), mat(&[&[1]])]);
        assert!(matches!(
            bad.check_exact(),
            Err(TorsionError::NotAComplex { .. })
        ));
    }

    #[test]
    fn torsion_single_map() {
        let c = complex(&[1, 1], vec![mat(&[&[2]])]);
        assert_eq!(c.torsion().unwrap().value, rat_int(2));
        let d = complex(&[2, 2], vec![mat(&[&[2, 0], &[0, 3]])]);
        assert_eq!(d.torsion().unwrap().value, rat_int(6));
    }

    #[test]
    fn torsion_koszul_pair_is_one() {
        // hand expansion of the definition: the wedge coefficient cancels
        // the last determinant exactly
        assert_eq!(koszul_pair(1, 2).torsion().unwrap().value, rat_int(1));
        assert_eq!(koszul_pair(3, 5).torsion().unwrap().value, rat_int(1));
    }

    #[test]
    fn torsion_requires_exactness() {
        let zero_map = complex(&[1, 1], vec![mat(&[&[0]])]);
        assert!(matches!(
            zero_map.torsion(),
            Err(TorsionError::NotExact { .. })
        ));
    }

    #[test]
    fn degenerate_zero_complex() {
        let c = complex(&[0, 0, 0], vec![QMatrix::zero(0, 0), QMatrix::zero(0, 0)]);
        assert!(c.check_exact().unwrap().exact);
        assert_eq!(c.torsion().unwrap().value, rat_int(1));
    }

    #[test]
    fn scaling_exponent_examples() {
        assert_eq!(scaling_exponent(&[1, 1]), 1);
        assert_eq!(scaling_exponent(&[1, 2, 1]), 0);
        // conic resultant complex at m = 4
        assert_eq!(scaling_exponent(&[5, 14, 9]), 4);
    }

    use crate::verify::{random_exact_complex, random_rank_profile};

    #[test]
    fn scaling_law_random() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..10 {
            let kappas = random_rank_profile(&mut rng);
            let c = random_exact_complex(&mut rng, &kappas);
            let base = c.torsion().unwrap();
            let d = scaling_exponent(&c.dims());
            for mu_num in [2i64, -3, 5] {
                let mu = crate::arith::rat(mu_num, 1);
                let scaled = c.scale_boundaries(&mu).torsion().unwrap();
                assert_eq!(scaled.value, rat_pow(&mu, d) * &base.value);
            }
        }
    }

    #[test]
    fn choice_independence_random() {
        let mut rng = StdRng::seed_from_u64(4242);
        for round in 0..5 {
            let kappas = random_rank_profile(&mut rng);
            let c = random_exact_complex(&mut rng, &kappas);
            let base = c.torsion().unwrap().value;
            for s in 0..8u64 {
                let sels = c.random_selections(round * 100 + s).unwrap();
                let alt = c
                    .torsion_with(&TorsionOptions {
                        selections: Some(sels),
                        multimodular: false,
                    })
                    .unwrap();
                assert_eq!(alt.value, base);
            }
        }
    }

    #[test]
    fn multimodular_path_matches() {
        let mut rng = StdRng::seed_from_u64(5);
        let kappas = vec![2, 3, 1];
        let c = random_exact_complex(&mut rng, &kappas);
        let a = c.torsion().unwrap().value;
        let b = c
            .torsion_with(&TorsionOptions {
                selections: None,
                multimodular: true,
            })
            .unwrap()
            .value;
        assert_eq!(a, b);
    }

    #[test]
    fn rebase_identity_unchanged() {
        let c = koszul_pair(1, 2);
        let changes: Vec<QMatrix> = c.dims().iter().map(|&d| QMatrix::identity(d)).collect();
        let r = c.rebase(&changes).unwrap();
        assert_eq!(r.torsion().unwrap().value, c.torsion().unwrap().value);
    }

    #[test]
    fn rebase_scale_last_term() {
        // scale the basis of E^1 in the length-two complex by 2:
        // the map becomes mu/2, i.e. torsion times det(P_1)^{(-1)^{n+1}}
        let c = complex(&[1, 1], vec![mat(&[&[5]])]);
        let changes = vec![QMatrix::identity(1), mat(&[&[2]])];
        let r = c.rebase(&changes).unwrap();
        assert_eq!(r.torsion().unwrap().value, crate::arith::rat(5, 2));
        let predicted = rebase_factor(&changes, 0).unwrap();
        assert_eq!(
            r.torsion().unwrap().value,
            c.torsion().unwrap().value * predicted
        );
    }

    #[test]
    fn rebase_law_random() {
        let mut rng = StdRng::seed_from_u64(77);
        for _ in 0..8 {
            let kappas = random_rank_profile(&mut rng);
            let c = random_exact_complex(&mut rng, &kappas);
            let n = c.dims().len() as i64 - 2;
            let changes: Vec<QMatrix> = c
                .dims()
                .iter()
                .map(|&d| loop {
                    let p = QMatrix::from_fn(d, d, |_, _| rat_int(rng.gen_range(-3..=3)));
                    if !p.det().unwrap().is_zero() {
                        break p;
                    }
                })
                .collect();
            let r = c.rebase(&changes).unwrap();
            let predicted = rebase_factor(&changes, n).unwrap();
            assert_eq!(
                r.torsion().unwrap().value,
                c.torsion().unwrap().value * predicted
            );
        }
    }

    #[test]
    fn rebase_uniform_scalar_cancels_on_koszul_pair() {
        // same scalar on all three terms: the rebase factors c^{-1} c^{2}
        // c^{-1} cancel and the boundaries are untouched
        let c = koszul_pair(1, 2);
        let two = rat_int(2);
        let changes: Vec<QMatrix> = c
            .dims()
            .iter()
            .map(|&d| QMatrix::identity(d).scale(&two))
            .collect();
        let r = c.rebase(&changes).unwrap();
        assert_eq!(r.torsion().unwrap().value, c.torsion().unwrap().value);
        assert_eq!(rebase_factor(&changes, 1).unwrap(), Rat::one());
    }

    #[test]
    fn rebase_rejects_singular_change() {
        let c = koszul_pair(1, 2);
        let changes = vec![
            QMatrix::identity(1),
            QMatrix::zero(2, 2),
            QMatrix::identity(1),
        ];
        assert!(matches!(
            c.rebase(&changes),
            Err(TorsionError::BadBasisChange { i: 1 })
        ));
    }

    #[test]
    fn torsion_deterministic_fingerprint() {
        let c = koszul_pair(1, 2);
        let a = c.torsion().unwrap();
        let b = c.torsion().unwrap();
        assert_eq!(a.basis_fingerprint, b.basis_fingerprint);
        assert_eq!(a.degree_weight, 0);
    }
}
