//! The discriminant complex: exterior powers of the tangent bundle of the
//! cone over X, twisted, with boundary the contraction by a constant
//! covector. Its torsion is the X-discriminant to the power rank(V).
//!
//! Sections of Lambda^j T(cone)(m) are solved as kernels: a
//! Lambda^j(C^{N+1})-valued tuple of graded-piece elements lies in
//! Lambda^j of the cone tangent bundle exactly when contracting with
//! every Jacobian row of the generating set kills it pointwise. On a
//! smooth X with a full-rank generating set this is an equality of
//! sheaves, so exact row reduction finds every section.

use itertools::Itertools;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{parse_rat, ArithError, Rat};
use crate::linalg::QMatrix;
use crate::oracles::{self, BinaryForm, OracleError};
use crate::torsion::{
    scaling_exponent, BasedComplex, Term, TorsionError, TorsionOptions, TorsionResult,
};
use crate::variety::{slice_mul, BasisSolver, Variety, VarietyError};

#[derive(Debug, Error)]
pub enum DiscriminantError {
    #[error("covector must have {expected} coordinates, got {got}")]
    CovectorShape { expected: usize, got: usize },
    #[error("covector must be nonzero")]
    ZeroCovector,
    #[error("covector is tangent to X (discriminant complex not exact; rank profile {rank_profile:?})")]
    TangentCovector { rank_profile: Vec<usize> },
    #[error("no stable twist found in {lo}..={hi}: {reason}")]
    UnstableRange { lo: i64, hi: i64, reason: String },
    #[error("the dual variety appears degenerate: torsion is constant in f (scaling exponent 0)")]
    DegenerateDual,
    #[error("split h0 identity fails at i={i}, m={m}: lhs {lhs} != {rhs1} + {rhs2} (m too small?)")]
    SplitH0Mismatch {
        i: usize,
        m: i64,
        lhs: usize,
        rhs1: usize,
        rhs2: usize,
    },
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error(transparent)]
    Variety(#[from] VarietyError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A linear form on C^{N+1}, the variable point of the dual space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCovector {
    coords: Vec<Rat>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CovectorJson {
    f: Vec<String>,
}

impl DualCovector {
    pub fn new(coords: Vec<Rat>) -> Result<Self, DiscriminantError> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(DiscriminantError::ZeroCovector);
        }
        Ok(DualCovector { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        DualCovector {
            coords: coords.iter().map(|&c| crate::arith::rat_int(c)).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DiscriminantError> {
        let json: CovectorJson = serde_json::from_str(text).map_err(|e| {
            DiscriminantError::Arith(ArithError::Parse {
                input: text.chars().take(60).collect(),
                reason: e.to_string(),
            })
        })?;
        let coords = json
            .f
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(DiscriminantError::Arith)?;
        Self::new(coords)
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn scale(&self, mu: &Rat) -> Self {
        DualCovector {
            coords: self.coords.iter().map(|c| c * mu).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        DualCovector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Pullback along the parametrization of a curve, as a binary form.
    pub fn pullback_binary(&self, variety: &Variety) -> Result<BinaryForm, DiscriminantError> {
        let vars = variety.spec().ambient_vars.clone();
        let form = crate::arith::MultiPoly::from_terms(
            vars.clone(),
            self.coords
                .iter()
                .enumerate()
                .map(|(j, c)| (crate::arith::Mono::var(vars.len(), j), c.clone())),
        );
        let pulled = form
            .compose(&variety.spec().param_map)
            .map_err(DiscriminantError::Arith)?;
        Ok(BinaryForm::from_poly(&pulled)?)
    }
}

/// Basis of H^0(X, Lambda^j T(cone) (x) O_X(m_eff)).
///
/// Each basis section is a tuple, indexed by the lex-ordered j-subsets of
/// {0..=N}, of coefficient vectors in the parameter slice of degree
/// m_eff * e.
#[derive(Debug)]
pub struct SectionSpace {
    pub j: u32,
    pub m_eff: i64,
    pub dimension: usize,
    pub subsets: Vec<Vec<usize>>,
    /// components[section][subset] = dense coefficient vector
    pub components: Vec<Vec<Vec<Rat>>>,
    pub basis_id: String,
    solver: Option<BasisSolver>,
}

impl SectionSpace {
    fn stacked(&self, comp: &[Vec<Rat>]) -> Vec<Rat> {
        comp.iter().flat_map(|v| v.iter().cloned()).collect()
    }

    /// Coordinates of a component tuple in this basis.
    pub fn coordinates(&self, comp: &[Vec<Rat>]) -> Option<Vec<Rat>> {
        match &self.solver {
            Some(s) => s.solve(&self.stacked(comp)),
            None => {
                let zero = comp.iter().all(|v| v.iter().all(|x| x.is_zero()));
                if zero {
                    Some(Vec::new())
                } else {
                    None
                }
            }
        }
    }
}

fn contraction_sign(subset_with_k: &[usize], k: usize) -> i64 {
    let pos = subset_with_k.iter().position(|&x| x == k).unwrap();
    if pos % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Solve for all sections of Lambda^j T(cone)(m_eff); memoized on the
/// variety. j = 0 is the plain graded piece; j above the cone dimension
/// comes out zero-dimensional by itself.
pub fn cone_tangent_sections(variety: &Variety, j: u32, m_eff: i64) -> std::sync::Arc<SectionSpace> {
    if let Some(hit) = variety.sections.lock().unwrap().get(&(j, m_eff)) {
        return hit.clone();
    }
    let space = std::sync::Arc::new(build_sections(variety, j, m_eff));
    variety
        .sections
        .lock()
        .unwrap()
        .insert((j, m_eff), space.clone());
    space
}

fn empty_space(variety: &Variety, j: u32, m_eff: i64, subsets: Vec<Vec<usize>>) -> SectionSpace {
    SectionSpace {
        j,
        m_eff,
        dimension: 0,
        subsets,
        components: Vec::new(),
        basis_id: format!("{}:sec{}:{}:empty", variety.id_hash(), j, m_eff),
        solver: None,
    }
}

fn build_sections(variety: &Variety, j: u32, m_eff: i64) -> SectionSpace {
    let ambient = variety.ambient_dim() + 1;
    let subsets: Vec<Vec<usize>> = (0..ambient).combinations(j as usize).collect();
    if m_eff < 0 || subsets.is_empty() {
        return empty_space(variety, j, m_eff, subsets);
    }
    let w = variety.graded_basis(m_eff);
    if w.dimension == 0 {
        return empty_space(variety, j, m_eff, subsets);
    }
    let e = variety.param_degree();
    let w_slice = variety.slice(m_eff as u32 * e);
    let n_sub = subsets.len();
    let unknowns = n_sub * w.dimension;

    // index of each subset for contraction lookups
    let sub_index: std::collections::HashMap<Vec<usize>, usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();

    let gens = &variety.spec().ideal_gens;
    let jac = variety.jacobian();
    // per (generator, ambient var): products of the pulled-back partial
    // with every W basis vector
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    if j >= 1 {
        let lower: Vec<Vec<usize>> = (0..ambient).combinations(j as usize - 1).collect();
        for (alpha, gen) in gens.iter().enumerate() {
            let d_alpha = gen.total_degree().expect("generators are nonzero");
            let g_deg = (d_alpha - 1) + m_eff as u32;
            let g_slice = variety.slice((d_alpha - 1) * e);
            let out_slice = variety.slice(g_deg * e);
            // pullbacks of the Jacobian row
            let partials: Vec<Option<Vec<Rat>>> = (0..ambient)
                .map(|k| {
                    let p = &jac[alpha][k];
                    if p.is_zero() {
                        None
                    } else {
                        Some(variety.pullback(p).expect("jacobian entries are homogeneous"))
                    }
                })
                .collect();
            // products partial_k * W_b
            let products: Vec<Option<Vec<Vec<Rat>>>> = partials
                .iter()
                .map(|maybe| {
                    maybe.as_ref().map(|g| {
                        w.vectors
                            .iter()
                            .map(|wb| slice_mul(&g_slice, g, &w_slice, wb, &out_slice))
                            .collect()
                    })
                })
                .collect();
            for jset in &lower {
                // constraint: sum_{k not in J} sign * partial_k * omega_{J u k} = 0
                let mut block: Vec<Vec<Rat>> = vec![vec![Rat::zero(); unknowns]; out_slice.dim()];
                let mut any = false;
                for k in 0..ambient {
                    if jset.contains(&k) {
                        continue;
                    }
                    let Some(prods) = &products[k] else { continue };
                    let mut with_k = jset.clone();
                    with_k.push(k);
                    with_k.sort_unstable();
                    let sign = contraction_sign(&with_k, k);
                    let si = sub_index[&with_k];
                    for (b, prod) in prods.iter().enumerate() {
                        let col = si * w.dimension + b;
                        for (rr, coef) in prod.iter().enumerate() {
                            if !coef.is_zero() {
                                any = true;
                                if sign > 0 {
                                    block[rr][col] += coef;
                                } else {
                                    block[rr][col] -= coef;
                                }
                            }
                        }
                    }
                }
                if any {
                    rows.extend(block);
                }
            }
        }
    }

    let kernel = if rows.is_empty() {
        // no constraints: the full product space
        (0..unknowns)
            .map(|i| {
                let mut v = vec![Rat::zero(); unknowns];
                v[i] = Rat::from_integer(1.into());
                v
            })
            .collect::<Vec<_>>()
    } else {
        QMatrix::from_rows(rows).kernel_basis()
    };

    let dimension = kernel.len();
    let components: Vec<Vec<Vec<Rat>>> = kernel
        .iter()
        .map(|sol| {
            (0..n_sub)
                .map(|si| {
                    let mut comp = vec![Rat::zero(); w_slice.dim()];
                    for (b, wvec) in w.vectors.iter().enumerate() {
                        let c = &sol[si * w.dimension + b];
                        if c.is_zero() {
                            continue;
                        }
                        for (acc, x) in comp.iter_mut().zip(wvec) {
                            *acc += c * x;
                        }
                    }
                    comp
                })
                .collect()
        })
        .collect();

    let basis_id = {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(variety.id_hash().as_bytes());
        h.update([b's']);
        h.update(j.to_le_bytes());
        h.update(m_eff.to_le_bytes());
        h.update(dimension.to_le_bytes());
        h.finalize()
            .iter()
            .take(8)
            .map(|b| format!("{b:02x}"))
            .collect::<String>()
    };

    let solver = if dimension > 0 {
        let stacked_rows = n_sub * w_slice.dim();
        let mat = QMatrix::from_columns(
            stacked_rows,
            components
                .iter()
                .map(|comp| comp.iter().flat_map(|v| v.iter().cloned()).collect())
                .collect(),
        );
        Some(BasisSolver::new(mat).expect("kernel basis is independent"))
    } else {
        None
    };

    SectionSpace {
        j,
        m_eff,
        dimension,
        subsets,
        components,
        basis_id,
        solver,
    }
}

/// Builder for the discriminant complex of one variety and twist.
pub struct DiscriminantComplexBuilder<'a> {
    variety: &'a Variety,
    twist: crate::resultant::TwistSpec,
    m: i64,
}

impl<'a> DiscriminantComplexBuilder<'a> {
    pub fn new(variety: &'a Variety, twist: crate::resultant::TwistSpec, m: i64) -> Self {
        DiscriminantComplexBuilder { variety, twist, m }
    }

    fn m_eff(&self) -> i64 {
        self.twist.a + self.m
    }

    pub fn dims(&self) -> Vec<usize> {
        let n = self.variety.dim();
        (0..=n + 1)
            .map(|i| {
                let j = (n + 1 - i) as u32;
                self.twist.r * cone_tangent_sections(self.variety, j, self.m_eff()).dimension
            })
            .collect()
    }

    pub fn scaling_exponent(&self) -> i64 {
        scaling_exponent(&self.dims())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims()
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    pub fn build(&self, f: &DualCovector) -> Result<BasedComplex, DiscriminantError> {
        let n = self.variety.dim();
        if f.coords.len() != self.variety.ambient_dim() + 1 {
            return Err(DiscriminantError::CovectorShape {
                expected: self.variety.ambient_dim() + 1,
                got: f.coords.len(),
            });
        }
        if f.coords.iter().all(|c| c.is_zero()) {
            return Err(DiscriminantError::ZeroCovector);
        }
        let mut terms = Vec::with_capacity(n + 2);
        for i in 0..=n + 1 {
            let j = (n + 1 - i) as u32;
            let space = cone_tangent_sections(self.variety, j, self.m_eff());
            terms.push(Term::new(
                format!("E{i}(sec j={j}, w{})", self.m_eff()),
                self.twist.r * space.dimension,
                format!("{}:r{}", space.basis_id, self.twist.r),
            ));
        }
        let mut boundaries = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let j = (n + 1 - i) as u32;
            boundaries.push(self.boundary(f, j)?);
        }
        Ok(BasedComplex::new(terms, boundaries)?)
    }

    /// Contraction by the constant covector f on the ambient exterior
    /// factor, expressed in the section bases, for one copy of V; then
    /// Kronecker with I_r.
    fn boundary(&self, f: &DualCovector, j: u32) -> Result<QMatrix, DiscriminantError> {
        let source = cone_tangent_sections(self.variety, j, self.m_eff());
        let target = cone_tangent_sections(self.variety, j - 1, self.m_eff());
        let cols: Vec<Vec<Rat>> = source
            .components
            .iter()
            .map(|comp| {
                let contracted: Vec<Vec<Rat>> = target
                    .subsets
                    .iter()
                    .map(|jset| {
                        let mut acc = vec![Rat::zero(); comp.first().map_or(0, |v| v.len())];
                        for (k, fk) in f.coords.iter().enumerate() {
                            if fk.is_zero() || jset.contains(&k) {
                                continue;
                            }
                            let mut with_k = jset.clone();
                            with_k.push(k);
                            with_k.sort_unstable();
                            let Some(si) = source.subsets.iter().position(|s| *s == with_k) else {
                                continue;
                            };
                            let sign = contraction_sign(&with_k, k);
                            for (a, x) in acc.iter_mut().zip(&comp[si]) {
                                if sign > 0 {
                                    *a += fk * x;
                                } else {
                                    *a -= fk * x;
                                }
                            }
                        }
                        acc
                    })
                    .collect();
                target
                    .coordinates(&contracted)
                    .expect("contraction of cone-tangent sections stays in the section space")
            })
            .collect();
        let one_copy = QMatrix::from_columns(target.dimension, cols);
        Ok(one_copy.kron_identity(self.twist.r))
    }
}

/// Build the complex at f and take its torsion. Non-exactness is the
/// mathematical statement that f is tangent to X.
pub fn x_discriminant(
    variety: &Variety,
    twist: crate::resultant::TwistSpec,
    m: i64,
    f: &DualCovector,
) -> Result<TorsionResult, DiscriminantError> {
    x_discriminant_with(variety, twist, m, f, &TorsionOptions::default())
}

pub fn x_discriminant_with(
    variety: &Variety,
    twist: crate::resultant::TwistSpec,
    m: i64,
    f: &DualCovector,
    opts: &TorsionOptions,
) -> Result<TorsionResult, DiscriminantError> {
    let builder = DiscriminantComplexBuilder::new(variety, twist, m);
    if builder.scaling_exponent() == 0 {
        return Err(DiscriminantError::DegenerateDual);
    }
    let complex = builder.build(f)?;
    match complex.torsion_with(opts) {
        Ok(t) => Ok(t),
        Err(TorsionError::NotExact { rank_profile }) => {
            Err(DiscriminantError::TangentCovector { rank_profile })
        }
        Err(e) => Err(e.into()),
    }
}

/// Smallest twist in n+3..=n+8 with vanishing Euler characteristic, a
/// positive measured degree, and an exact probe.
pub fn stable_m(
    variety: &Variety,
    twist: crate::resultant::TwistSpec,
) -> Result<i64, DiscriminantError> {
    let lo = variety.dim() as i64 + 3;
    let hi = variety.dim() as i64 + 8;
    let mut reason = String::new();
    for m in lo..=hi {
        let builder = DiscriminantComplexBuilder::new(variety, twist, m);
        if builder.euler_characteristic() != 0 {
            reason = format!("Euler characteristic nonzero at m={m}");
            continue;
        }
        if builder.scaling_exponent() <= 0 {
            reason = format!("nonpositive degree at m={m}");
            continue;
        }
        let probe = probe_covector(variety);
        match x_discriminant(variety, twist, m, &probe) {
            Ok(_) => return Ok(m),
            Err(e) => reason = format!("probe at m={m}: {e}"),
        }
    }
    Err(DiscriminantError::UnstableRange { lo, hi, reason })
}

pub fn probe_covector(variety: &Variety) -> DualCovector {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xd15c);
    random_covector(variety, &mut rng)
}

pub fn random_covector<R: rand::Rng>(variety: &Variety, rng: &mut R) -> DualCovector {
    loop {
        let coords: Vec<Rat> = (0..=variety.ambient_dim())
            .map(|_| crate::arith::rat_int(rng.gen_range(-9..=9)))
            .collect();
        if coords.iter().any(|c| !c.is_zero()) {
            return DualCovector { coords };
        }
    }
}

/// A covector tangent to X at the image of the parameter point t: it
/// annihilates the cone tangent space there.
pub fn tangent_covector(variety: &Variety, t: &[Rat]) -> Result<DualCovector, DiscriminantError> {
    let p = variety.map_at(t)?;
    let jac = variety.jacobian_at(&p)?;
    let tangent_basis = jac.kernel_basis();
    // f with f . w = 0 for every tangent vector w
    let rows: Vec<Vec<Rat>> = tangent_basis;
    let system = QMatrix::from_rows(rows);
    let solutions = system.kernel_basis();
    let f = solutions
        .into_iter()
        .find(|v| v.iter().any(|c| !c.is_zero()))
        .expect("tangent hyperplanes exist for n < N");
    DualCovector::new(f)
}

/// The split-h0 identity at one exterior index: the dimension of
/// Lambda^i-jet-power sections splits as the two tangent-sheaf h0's.
/// Those right-hand sides are computed independently as kernels of the
/// Euler-section wedge on cone-tangent sections.
pub fn split_h0_check(
    variety: &Variety,
    twist: crate::resultant::TwistSpec,
    m: i64,
    i: usize,
) -> Result<(), DiscriminantError> {
    let lhs = twist.r * cone_tangent_sections(variety, i as u32, twist.a + m).dimension;
    let rhs1 = if i == 0 {
        0
    } else {
        twist.r * euler_wedge_kernel_dim(variety, i as u32, twist.a + m)
    };
    let rhs2 = twist.r * euler_wedge_kernel_dim(variety, i as u32 + 1, twist.a + m + 1);
    if lhs != rhs1 + rhs2 {
        return Err(DiscriminantError::SplitH0Mismatch {
            i,
            m,
            lhs,
            rhs1,
            rhs2,
        });
    }
    Ok(())
}

/// dim of { sigma in sections(j, m_eff) : v wedge sigma = 0 }, with v the
/// Euler section (the parametrization itself). This realizes
/// h0(Lambda^{j-1}(T_X(-1)) (x) O(m_eff - 1)).
pub fn euler_wedge_kernel_dim(variety: &Variety, j: u32, m_eff: i64) -> usize {
    let space = cone_tangent_sections(variety, j, m_eff);
    if space.dimension == 0 {
        return 0;
    }
    let ambient = variety.ambient_dim() + 1;
    let e = variety.param_degree();
    let comp_slice = variety.slice(m_eff as u32 * e);
    let out_slice = variety.slice((m_eff as u32 + 1) * e);
    let upper: Vec<Vec<usize>> = (0..ambient).combinations(j as usize + 1).collect();
    if upper.is_empty() {
        return space.dimension;
    }
    // the Euler section components are just the parametrization components
    let v_slices: Vec<Vec<Rat>> = (0..ambient)
        .map(|k| variety.slice(e).to_vec(&variety.spec().param_map[k]))
        .collect();
    let mut rows: Vec<Vec<Rat>> =
        vec![vec![Rat::zero(); space.dimension]; upper.len() * out_slice.dim()];
    // fill: for each section s, compute (v wedge sigma_s)_K and place as a column
    for (sidx, comp) in space.components.iter().enumerate() {
        for (ki, kset) in upper.iter().enumerate() {
            let mut acc = vec![Rat::zero(); out_slice.dim()];
            for &k in kset {
                let rest: Vec<usize> = kset.iter().copied().filter(|&x| x != k).collect();
                let Some(si) = space.subsets.iter().position(|s| *s == rest) else {
                    continue;
                };
                let sign = contraction_sign(kset, k);
                let prod = slice_mul(
                    &variety.slice(e),
                    &v_slices[k],
                    &comp_slice,
                    &comp[si],
                    &out_slice,
                );
                for (a, x) in acc.iter_mut().zip(&prod) {
                    if sign > 0 {
                        *a += x;
                    } else {
                        *a -= x;
                    }
                }
            }
            for (rr, val) in acc.into_iter().enumerate() {
                rows[ki * out_slice.dim() + rr][sidx] = val;
            }
        }
    }
    QMatrix::from_rows(rows).kernel_basis().len()
}

/// Binary-discriminant oracle for rational normal curves: the classical
/// discriminant of the pullback form.
pub fn binary_disc_oracle(
    variety: &Variety,
    f: &DualCovector,
) -> Result<Rat, DiscriminantError> {
    let form = f.pullback_binary(variety)?;
    Ok(oracles::binary_discriminant(&form)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, rat_pow};
    use crate::catalog;
    use crate::resultant::TwistSpec;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn conic_section_dimensions() {
        // bundle theory for the cone over the conic: j=1 gives 4m, j=2
        // gives 2m-1, j=0 gives 2m+1
        let v = catalog::conic();
        for m in 2..=5i64 {
            assert_eq!(
                cone_tangent_sections(&v, 0, m).dimension as i64,
                2 * m + 1,
                "j=0, m={m}"
            );
            assert_eq!(
                cone_tangent_sections(&v, 1, m).dimension as i64,
                4 * m,
                "j=1, m={m}"
            );
            assert_eq!(
                cone_tangent_sections(&v, 2, m).dimension as i64,
                2 * m - 1,
                "j=2, m={m}"
            );
            // above the cone dimension everything vanishes
            assert_eq!(cone_tangent_sections(&v, 3, m).dimension, 0);
        }
    }

    #[test]
    fn twisted_cubic_section_dimensions() {
        // jet sequence bookkeeping: j=1 gives 6m-2, j=2 gives 3m-3
        let v = catalog::twisted_cubic();
        for m in 2..=4i64 {
            assert_eq!(cone_tangent_sections(&v, 0, m).dimension as i64, 3 * m + 1);
            assert_eq!(cone_tangent_sections(&v, 1, m).dimension as i64, 6 * m - 2);
            assert_eq!(cone_tangent_sections(&v, 2, m).dimension as i64, 3 * m - 3);
        }
    }

    #[test]
    fn conic_complex_dims_and_degree() {
        let v = catalog::conic();
        let b = DiscriminantComplexBuilder::new(&v, TwistSpec::trivial(), 4);
        assert_eq!(b.dims(), vec![7, 16, 9]);
        assert_eq!(b.euler_characteristic(), 0);
        // dual degree of the conic is 2 = 2d - 2
        assert_eq!(b.scaling_exponent(), 2);
    }

    #[test]
    fn twisted_cubic_complex_degree_is_four() {
        let v = catalog::twisted_cubic();
        let b = DiscriminantComplexBuilder::new(&v, TwistSpec::trivial(), 4);
        assert_eq!(b.euler_characteristic(), 0);
        assert_eq!(b.scaling_exponent(), 4);
    }

    #[test]
    fn boundary_squares_to_zero_and_linear() {
        let v = catalog::conic();
        let builder = DiscriminantComplexBuilder::new(&v, TwistSpec::trivial(), 4);
        let f = DualCovector::from_ints(&[1, 1, 1]);
        let g = DualCovector::from_ints(&[2, -1, 3]);
        let cf = builder.build(&f).unwrap();
        assert!(cf.check_exact().unwrap().exact, "probe covector is generic");
        let cg = builder.build(&g).unwrap();
        let cfg = builder.build(&f.add(&g)).unwrap();
        let c2f = builder.build(&f.scale(&rat_int(2))).unwrap();
        for i in 0..cf.boundaries().len() {
            assert_eq!(
                cfg.boundaries()[i],
                cf.boundaries()[i].add(&cg.boundaries()[i]).unwrap()
            );
            assert_eq!(c2f.boundaries()[i], cf.boundaries()[i].scale(&rat_int(2)));
        }
    }

    #[test]
    fn tangent_covectors_are_not_exact() {
        let v = catalog::conic();
        // the spec's example: x2 = 0 is tangent at (1 : 0 : 0)
        let f = DualCovector::from_ints(&[0, 0, 1]);
        assert!(matches!(
            x_discriminant(&v, TwistSpec::trivial(), 4, &f),
            Err(DiscriminantError::TangentCovector { .. })
        ));
        // dual-conic point (p^2, 2pq, q^2): pullback (ps + qt)^2
        let g = DualCovector::from_ints(&[1, 2, 1]);
        assert_eq!(binary_disc_oracle(&v, &g).unwrap(), rat_int(0));
        assert!(matches!(
            x_discriminant(&v, TwistSpec::trivial(), 4, &g),
            Err(DiscriminantError::TangentCovector { .. })
        ));
        // constructed from a parameter point
        let h = tangent_covector(&v, &[rat_int(2), rat_int(3)]).unwrap();
        assert_eq!(binary_disc_oracle(&v, &h).unwrap(), rat_int(0));
        assert!(matches!(
            x_discriminant(&v, TwistSpec::trivial(), 4, &h),
            Err(DiscriminantError::TangentCovector { .. })
        ));
    }

    #[test]
    fn oracle_ratio_on_conic() {
        let v = catalog::conic();
        let mut rng = StdRng::seed_from_u64(21);
        let mut done = 0;
        while done < 5 {
            let f = random_covector(&v, &mut rng);
            let g = random_covector(&v, &mut rng);
            let of = binary_disc_oracle(&v, &f).unwrap();
            let og = binary_disc_oracle(&v, &g).unwrap();
            if of.is_zero() || og.is_zero() {
                continue;
            }
            let tf = x_discriminant(&v, TwistSpec::trivial(), 4, &f).unwrap();
            let tg = x_discriminant(&v, TwistSpec::trivial(), 4, &g).unwrap();
            assert_eq!(&tf.value / &tg.value, of / og);
            done += 1;
        }
    }

    #[test]
    fn oracle_ratio_on_twisted_cubic() {
        let v = catalog::twisted_cubic();
        let mut rng = StdRng::seed_from_u64(22);
        let mut done = 0;
        while done < 3 {
            let f = random_covector(&v, &mut rng);
            let g = random_covector(&v, &mut rng);
            let of = binary_disc_oracle(&v, &f).unwrap();
            let og = binary_disc_oracle(&v, &g).unwrap();
            if of.is_zero() || og.is_zero() {
                continue;
            }
            let tf = x_discriminant(&v, TwistSpec::trivial(), 4, &f).unwrap();
            let tg = x_discriminant(&v, TwistSpec::trivial(), 4, &g).unwrap();
            assert_eq!(&tf.value / &tg.value, of / og);
            done += 1;
        }
    }

    #[test]
    fn scaling_law_and_r_exponent() {
        let v = catalog::conic();
        let f = DualCovector::from_ints(&[1, 1, 1]);
        let t1 = x_discriminant(&v, TwistSpec::trivial(), 4, &f).unwrap();
        assert_eq!(t1.degree_weight, 2);
        for mu in [rat_int(3), crate::arith::rat(1, 2)] {
            let ts = x_discriminant(&v, TwistSpec::trivial(), 4, &f.scale(&mu)).unwrap();
            assert_eq!(ts.value, rat_pow(&mu, 2) * &t1.value);
        }
        let t2 = x_discriminant(&v, TwistSpec::rank(2), 4, &f).unwrap();
        assert_eq!(t2.value, &t1.value * &t1.value);
    }

    #[test]
    fn contraction_square_zero_random() {
        let v = catalog::twisted_cubic();
        let builder = DiscriminantComplexBuilder::new(&v, TwistSpec::trivial(), 3);
        let mut rng = StdRng::seed_from_u64(23);
        let f = random_covector(&v, &mut rng);
        let c = builder.build(&f).unwrap();
        // check_exact verifies d d = 0 structurally
        let _ = c.check_exact().unwrap();
    }

    #[test]
    fn split_h0_on_conic_and_cubic() {
        let conic = catalog::conic();
        for m in [4i64, 5] {
            for i in 0..=2usize {
                split_h0_check(&conic, TwistSpec::trivial(), m, i).unwrap();
            }
        }
        let tc = catalog::twisted_cubic();
        for m in [4i64, 5] {
            for i in 0..=2usize {
                split_h0_check(&tc, TwistSpec::trivial(), m, i).unwrap();
            }
        }
    }

    #[test]
    fn euler_kernel_matches_known_h0() {
        // on the conic: ker(v wedge . ) inside sections(1, m) is
        // h0(O_{P1}(2m-2)) = 2m-1, and inside sections(2, m+1) is
        // h0(T_X (x) O(m-1)) = h0(O(2m)) = 2m+1
        let v = catalog::conic();
        for m in 3..=5i64 {
            assert_eq!(euler_wedge_kernel_dim(&v, 1, m) as i64, 2 * m - 1);
            assert_eq!(euler_wedge_kernel_dim(&v, 2, m + 1) as i64, 2 * m + 1);
        }
    }

    #[test]
    fn stable_m_for_discriminant() {
        assert_eq!(stable_m(&catalog::conic(), TwistSpec::trivial()).unwrap(), 4);
    }
}
