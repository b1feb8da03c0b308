//! Projective varieties given by a homogeneous polynomial parametrization
//! plus ideal generators. Graded pieces of the coordinate ring are spans
//! of pulled-back ambient monomials, so every H^0 computation reduces to
//! exact row reduction; no Groebner machinery anywhere.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arith::{monomials_of_degree, parse_poly, ArithError, Mono, MultiPoly, Rat};
use crate::linalg::{select_independent_columns_ordered, LinalgError, QMatrix};

#[derive(Debug, Error)]
pub enum VarietyError {
    #[error("ideal generator `{generator}` does not vanish on the parametrization")]
    GeneratorDoesNotVanish { generator: String },
    #[error("parametrization components must share one positive degree, got {0:?}")]
    MixedMapDegrees(Vec<Option<u32>>),
    #[error("expected {expected} parametrization components for P^{n}, got {got}", n = expected - 1)]
    MapLength { expected: usize, got: usize },
    #[error("supported families have n+1 parameter variables; got {got} for n = {n}")]
    ParamCount { n: usize, got: usize },
    #[error("ideal generator `{generator}` is not homogeneous in the ambient variables")]
    InhomogeneousGenerator { generator: String },
    #[error("Jacobian rank {got} at probe point {point:?}, expected codimension {expected}")]
    JacobianRankDeficient {
        expected: usize,
        got: usize,
        point: Vec<String>,
    },
    #[error("ambient dimension N = {n_amb} too small for dimension n = {n}")]
    AmbientTooSmall { n_amb: usize, n: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// JSON-facing description of a variety, e.g.
/// `{"n":1,"N":2,"d":2,"params":["s","t"],"map":["s^2","s*t","t^2"],"ideal":["x0*x2-x1^2"]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VarietySpecJson {
    pub n: usize,
    #[serde(rename = "N")]
    pub ambient: usize,
    pub d: u32,
    pub params: Vec<String>,
    pub map: Vec<String>,
    pub ideal: Vec<String>,
    #[serde(default)]
    pub name: Option<String>,
}

/// Parsed variety data: dimension n, ambient P^N, degree d, the
/// parametrization and a generating set of the homogeneous ideal.
#[derive(Debug, Clone)]
pub struct VarietySpec {
    pub name: String,
    pub n: usize,
    pub ambient: usize,
    pub degree: u32,
    pub param_vars: Arc<Vec<String>>,
    pub ambient_vars: Arc<Vec<String>>,
    pub param_map: Vec<MultiPoly>,
    pub ideal_gens: Vec<MultiPoly>,
}

impl VarietySpec {
    pub fn from_json(json: &VarietySpecJson) -> Result<Self, VarietyError> {
        let param_vars = Arc::new(json.params.clone());
        let ambient_vars = Arc::new((0..=json.ambient).map(|i| format!("x{i}")).collect::<Vec<_>>());
        let param_map = json
            .map
            .iter()
            .map(|s| parse_poly(s, &param_vars))
            .collect::<Result<Vec<_>, _>>()?;
        let ideal_gens = json
            .ideal
            .iter()
            .map(|s| parse_poly(s, &ambient_vars))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(VarietySpec {
            name: json.name.clone().unwrap_or_else(|| "anonymous".into()),
            n: json.n,
            ambient: json.ambient,
            degree: json.d,
            param_vars,
            ambient_vars,
            param_map,
            ideal_gens,
        })
    }

    pub fn parse(text: &str) -> Result<Self, VarietyError> {
        let json: VarietySpecJson = serde_json::from_str(text).map_err(|e| {
            VarietyError::Arith(ArithError::Parse {
                input: text.chars().take(60).collect(),
                reason: e.to_string(),
            })
        })?;
        Self::from_json(&json)
    }
}

/// Basis of one graded piece H^0(X, O_X(m)): pulled-back degree-m ambient
/// monomials, greedily selected in graded-lex order.
#[derive(Debug)]
pub struct GradedBasis {
    pub m: i64,
    pub ambient_lifts: Vec<Mono>,
    /// coefficient vectors in the parameter-monomial basis of degree m*e
    pub vectors: Vec<Vec<Rat>>,
    pub dimension: usize,
    pub basis_id: String,
    solver: Option<BasisSolver>,
}

impl GradedBasis {
    /// Coordinates of a parameter-space vector in this basis; None if it
    /// lies outside the span.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        match &self.solver {
            Some(s) => s.solve(v),
            None => {
                if v.iter().all(|x| x.is_zero()) {
                    Some(Vec::new())
                } else {
                    None
                }
            }
        }
    }
}

/// Repeated exact solves against a fixed full-column-rank matrix: invert
/// the pivot-row square block once, then solve and verify per call.
#[derive(Debug)]
pub struct BasisSolver {
    mat: QMatrix,
    pivot_rows: Vec<usize>,
    inv: QMatrix,
}

impl BasisSolver {
    pub fn new(mat: QMatrix) -> Result<Self, LinalgError> {
        let order: Vec<usize> = (0..mat.rows()).collect();
        // pivot rows = independent rows of the matrix = independent
        // columns of the transpose
        let t = mat.transpose();
        let sel = select_independent_columns_ordered(&t, &order)?;
        if sel.col_indices.len() != mat.cols() {
            return Err(LinalgError::ShapeMismatch(format!(
                "matrix has column rank {} < {}",
                sel.col_indices.len(),
                mat.cols()
            )));
        }
        let pivot_rows = sel.col_indices;
        let all_cols: Vec<usize> = (0..mat.cols()).collect();
        let square = mat.submatrix(&pivot_rows, &all_cols);
        let inv = square.inverse()?;
        Ok(BasisSolver {
            mat,
            pivot_rows,
            inv,
        })
    }

    /// Solve mat * c = v exactly; None if v is not in the column span.
    pub fn solve(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if v.len() != self.mat.rows() {
            return None;
        }
        let restricted: Vec<Rat> = self.pivot_rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.mul_vec(&restricted).ok()?;
        // verify on all rows: exactness over Q makes this a hard check
        let produced = self.mat.mul_vec(&c).ok()?;
        if produced.iter().zip(v).all(|(a, b)| a == b) {
            Some(c)
        } else {
            None
        }
    }
}

/// Homogeneous-degree slice of the parameter polynomial ring: a fixed
/// monomial enumeration with an index map, shared behind an Arc.
#[derive(Debug)]
pub struct DegreeSlice {
    pub degree: u32,
    pub monos: Vec<Mono>,
    index: HashMap<Vec<u32>, usize>,
}

impl DegreeSlice {
    fn new(nvars: usize, degree: u32) -> Self {
        let monos = monomials_of_degree(nvars, degree);
        let index = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.0.clone(), i))
            .collect();
        DegreeSlice {
            degree,
            monos,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.monos.len()
    }

    pub fn to_vec(&self, p: &MultiPoly) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim()];
        for (m, c) in p.terms() {
            let idx = *self
                .index
                .get(&m.0)
                .unwrap_or_else(|| panic!("monomial degree {} in slice {}", m.degree(), self.degree));
            v[idx] = c.clone();
        }
        v
    }
}

/// Product of two dense homogeneous coefficient vectors.
pub fn slice_mul(
    a_slice: &DegreeSlice,
    a: &[Rat],
    b_slice: &DegreeSlice,
    b: &[Rat],
    out_slice: &DegreeSlice,
) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); out_slice.dim()];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        let ma = &a_slice.monos[i];
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let prod = ma.mul(&b_slice.monos[j]);
            let idx = out_slice.index[&prod.0];
            out[idx] += ca * cb;
        }
    }
    out
}

/// A validated variety with synchronized caches for graded bases and
/// multiplication matrices.
pub struct Variety {
    spec: VarietySpec,
    /// common degree of the parametrization components
    e: u32,
    id_hash: String,
    slices: Mutex<HashMap<u32, Arc<DegreeSlice>>>,
    graded: Mutex<HashMap<i64, Arc<GradedBasis>>>,
    mult: Mutex<HashMap<(usize, i64), Arc<QMatrix>>>,
    map_powers: Mutex<HashMap<(usize, u32), Arc<Vec<Rat>>>>,
    pub(crate) sections: Mutex<HashMap<(u32, i64), Arc<crate::discriminant::SectionSpace>>>,
}

impl std::fmt::Debug for Variety {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Variety")
            .field("name", &self.spec.name)
            .field("n", &self.spec.n)
            .field("ambient", &self.spec.ambient)
            .field("degree", &self.spec.degree)
            .finish()
    }
}

impl Variety {
    /// Validate the spec and build the analysis context. Checks, in order:
    /// shape constraints, a common parametrization degree, homogeneity of
    /// the generators, symbolic vanishing of every generator on the
    /// parametrization, and full Jacobian rank N-n at five probe points of
    /// the cone.
    pub fn new(spec: VarietySpec) -> Result<Self, VarietyError> {
        if spec.ambient < spec.n {
            return Err(VarietyError::AmbientTooSmall {
                n_amb: spec.ambient,
                n: spec.n,
            });
        }
        if spec.param_vars.len() != spec.n + 1 {
            return Err(VarietyError::ParamCount {
                n: spec.n,
                got: spec.param_vars.len(),
            });
        }
        if spec.param_map.len() != spec.ambient + 1 {
            return Err(VarietyError::MapLength {
                expected: spec.ambient + 1,
                got: spec.param_map.len(),
            });
        }
        let degs: Vec<Option<u32>> = spec
            .param_map
            .iter()
            .map(|p| {
                if p.is_homogeneous() && !p.is_zero() {
                    p.total_degree()
                } else {
                    None
                }
            })
            .collect();
        let e = match degs.first().copied().flatten() {
            Some(e) if e > 0 && degs.iter().all(|&d| d == Some(e)) => e,
            _ => return Err(VarietyError::MixedMapDegrees(degs)),
        };
        for g in &spec.ideal_gens {
            if !g.is_homogeneous() || g.is_zero() {
                return Err(VarietyError::InhomogeneousGenerator {
                    generator: g.to_string(),
                });
            }
            let pulled = g.compose(&spec.param_map)?;
            if !pulled.is_zero() {
                return Err(VarietyError::GeneratorDoesNotVanish {
                    generator: g.to_string(),
                });
            }
        }
        let id_hash = {
            let mut h = Sha256::new();
            h.update(spec.n.to_le_bytes());
            h.update(spec.ambient.to_le_bytes());
            h.update(spec.degree.to_le_bytes());
            for p in spec.param_map.iter().chain(&spec.ideal_gens) {
                h.update(p.to_string().as_bytes());
                h.update([0]);
            }
            h.finalize()
                .iter()
                .take(8)
                .map(|b| format!("{b:02x}"))
                .collect::<String>()
        };
        let v = Variety {
            spec,
            e,
            id_hash,
            slices: Mutex::new(HashMap::new()),
            graded: Mutex::new(HashMap::new()),
            mult: Mutex::new(HashMap::new()),
            map_powers: Mutex::new(HashMap::new()),
            sections: Mutex::new(HashMap::new()),
        };
        v.jacobian_spot_check()?;
        Ok(v)
    }

    pub fn parse(text: &str) -> Result<Self, VarietyError> {
        Self::new(VarietySpec::parse(text)?)
    }

    pub fn spec(&self) -> &VarietySpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn dim(&self) -> usize {
        self.spec.n
    }

    pub fn ambient_dim(&self) -> usize {
        self.spec.ambient
    }

    pub fn degree(&self) -> u32 {
        self.spec.degree
    }

    /// Common degree e of the parametrization components: pulling back
    /// O_X(m) lands in parameter polynomials of degree m*e. This is the
    /// single twist-conversion rule everything else routes through.
    pub fn param_degree(&self) -> u32 {
        self.e
    }

    pub fn section_param_degree(&self, m: i64) -> Option<u32> {
        if m < 0 {
            None
        } else {
            Some(m as u32 * self.e)
        }
    }

    pub fn id_hash(&self) -> &str {
        &self.id_hash
    }

    pub fn slice(&self, degree: u32) -> Arc<DegreeSlice> {
        let mut cache = self.slices.lock().unwrap();
        cache
            .entry(degree)
            .or_insert_with(|| Arc::new(DegreeSlice::new(self.spec.param_vars.len(), degree)))
            .clone()
    }

    fn map_power(&self, component: usize, k: u32) -> Arc<Vec<Rat>> {
        if let Some(hit) = self.map_powers.lock().unwrap().get(&(component, k)) {
            return hit.clone();
        }
        let value = {
            let p = self.spec.param_map[component].pow(k);
            let slice = self.slice(k * self.e);
            Arc::new(slice.to_vec(&p))
        };
        self.map_powers
            .lock()
            .unwrap()
            .insert((component, k), value.clone());
        value
    }

    /// Pull an ambient monomial back along the parametrization, as a dense
    /// coefficient vector of degree deg(mono)*e.
    pub fn pullback_monomial(&self, mono: &Mono) -> Vec<Rat> {
        let total = mono.degree();
        let out_slice = self.slice(total * self.e);
        let mut acc: Option<(u32, Vec<Rat>)> = None;
        for (j, &exp) in mono.0.iter().enumerate() {
            if exp == 0 {
                continue;
            }
            let factor = self.map_power(j, exp);
            let fdeg = exp * self.e;
            acc = Some(match acc {
                None => (fdeg, factor.as_ref().clone()),
                Some((adeg, avec)) => {
                    let a_slice = self.slice(adeg);
                    let f_slice = self.slice(fdeg);
                    let next = self.slice(adeg + fdeg);
                    (
                        adeg + fdeg,
                        slice_mul(&a_slice, &avec, &f_slice, &factor, &next),
                    )
                }
            });
        }
        match acc {
            None => {
                // constant monomial
                let mut v = vec![Rat::zero(); out_slice.dim()];
                v[0] = Rat::one();
                v
            }
            Some((_, v)) => v,
        }
    }

    /// Pull an ambient polynomial back; must be homogeneous.
    pub fn pullback(&self, p: &MultiPoly) -> Result<Vec<Rat>, VarietyError> {
        let Some(deg) = p.total_degree() else {
            return Ok(Vec::new());
        };
        if !p.is_homogeneous() {
            return Err(VarietyError::InhomogeneousGenerator {
                generator: p.to_string(),
            });
        }
        let slice = self.slice(deg * self.e);
        let mut acc = vec![Rat::zero(); slice.dim()];
        for (m, c) in p.terms() {
            let v = self.pullback_monomial(m);
            for (a, b) in acc.iter_mut().zip(&v) {
                *a += c * b;
            }
        }
        Ok(acc)
    }

    /// Graded piece H^0(X, O_X(m)) as the span of pulled-back degree-m
    /// ambient monomials; memoized. m < 0 gives the zero space.
    pub fn graded_basis(&self, m: i64) -> Arc<GradedBasis> {
        if let Some(hit) = self.graded.lock().unwrap().get(&m) {
            return hit.clone();
        }
        let value = Arc::new(self.build_graded_basis(m));
        self.graded.lock().unwrap().insert(m, value.clone());
        value
    }

    fn build_graded_basis(&self, m: i64) -> GradedBasis {
        if m < 0 {
            return GradedBasis {
                m,
                ambient_lifts: Vec::new(),
                vectors: Vec::new(),
                dimension: 0,
                basis_id: format!("{}:m{}:empty", self.id_hash, m),
                solver: None,
            };
        }
        let monos = monomials_of_degree(self.spec.ambient + 1, m as u32);
        let pulled: Vec<Vec<Rat>> = monos.iter().map(|mo| self.pullback_monomial(mo)).collect();
        let rows = self.slice(m as u32 * self.e).dim();
        let candidates = QMatrix::from_columns(rows, pulled.clone());
        let order: Vec<usize> = (0..candidates.cols()).collect();
        let sel = select_independent_columns_ordered(&candidates, &order)
            .expect("full column scan always reaches the rank");
        let ambient_lifts: Vec<Mono> = sel.col_indices.iter().map(|&i| monos[i].clone()).collect();
        let vectors: Vec<Vec<Rat>> = sel.col_indices.iter().map(|&i| pulled[i].clone()).collect();
        let dimension = vectors.len();
        let basis_id = {
            let mut h = Sha256::new();
            h.update(self.id_hash.as_bytes());
            h.update(m.to_le_bytes());
            for l in &ambient_lifts {
                h.update(l.render(&self.spec.ambient_vars).as_bytes());
                h.update([0]);
            }
            h.finalize()
                .iter()
                .take(8)
                .map(|b| format!("{b:02x}"))
                .collect::<String>()
        };
        let solver = if dimension > 0 {
            Some(
                BasisSolver::new(QMatrix::from_columns(rows, vectors.clone()))
                    .expect("selected columns are independent"),
            )
        } else {
            None
        };
        GradedBasis {
            m,
            ambient_lifts,
            vectors,
            dimension,
            basis_id,
            solver,
        }
    }

    /// Same construction with an alternative preference order on the
    /// ambient monomials; the induced linear maps must not depend on it.
    pub fn graded_basis_with_order(&self, m: i64, order: &[usize]) -> GradedBasis {
        assert!(m >= 0);
        let monos = monomials_of_degree(self.spec.ambient + 1, m as u32);
        let pulled: Vec<Vec<Rat>> = monos.iter().map(|mo| self.pullback_monomial(mo)).collect();
        let rows = self.slice(m as u32 * self.e).dim();
        let candidates = QMatrix::from_columns(rows, pulled.clone());
        let sel = select_independent_columns_ordered(&candidates, order).expect("permutation");
        let ambient_lifts: Vec<Mono> = sel.col_indices.iter().map(|&i| monos[i].clone()).collect();
        let vectors: Vec<Vec<Rat>> = sel.col_indices.iter().map(|&i| pulled[i].clone()).collect();
        let dimension = vectors.len();
        let solver = if dimension > 0 {
            Some(BasisSolver::new(QMatrix::from_columns(rows, vectors.clone())).unwrap())
        } else {
            None
        };
        GradedBasis {
            m,
            ambient_lifts,
            vectors,
            dimension,
            basis_id: "permuted".into(),
            solver,
        }
    }

    /// Matrix of multiplication by the ambient coordinate x_j, from
    /// H^0(O(m-1)) to H^0(O(m)), in the graded bases; memoized.
    pub fn multiplication_matrix(&self, var: usize, m: i64) -> Arc<QMatrix> {
        if let Some(hit) = self.mult.lock().unwrap().get(&(var, m)) {
            return hit.clone();
        }
        let value = Arc::new(self.build_multiplication_matrix(var, m));
        self.mult.lock().unwrap().insert((var, m), value.clone());
        value
    }

    fn build_multiplication_matrix(&self, var: usize, m: i64) -> QMatrix {
        let source = self.graded_basis(m - 1);
        let target = self.graded_basis(m);
        if source.dimension == 0 || target.dimension == 0 {
            return QMatrix::zero(target.dimension, source.dimension);
        }
        let src_slice = self.slice((m as u32 - 1) * self.e);
        let f_slice = self.slice(self.e);
        let out_slice = self.slice(m as u32 * self.e);
        let factor = self.map_power(var, 1);
        let cols: Vec<Vec<Rat>> = source
            .vectors
            .iter()
            .map(|v| {
                let prod = slice_mul(&src_slice, v, &f_slice, &factor, &out_slice);
                target
                    .coordinates(&prod)
                    .expect("products of sections stay in the graded piece")
            })
            .collect();
        QMatrix::from_columns(target.dimension, cols)
    }

    /// Matrix of multiplication by a homogeneous linear ambient form.
    pub fn multiply_by_form(&self, g: &MultiPoly, m: i64) -> Result<QMatrix, VarietyError> {
        let coeffs = g.linear_coefficients()?;
        if coeffs.len() != self.spec.ambient + 1 {
            return Err(VarietyError::Arith(ArithError::DimensionMismatch {
                expected: self.spec.ambient + 1,
                got: coeffs.len(),
            }));
        }
        let target_dim = self.graded_basis(m).dimension;
        let source_dim = self.graded_basis(m - 1).dimension;
        let mut acc = QMatrix::zero(target_dim, source_dim);
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&self.multiplication_matrix(j, m).scale(c))?;
        }
        Ok(acc)
    }

    /// Jacobian matrix dF_alpha/dx_j of the generating set, as ambient
    /// polynomials.
    pub fn jacobian(&self) -> Vec<Vec<MultiPoly>> {
        self.spec
            .ideal_gens
            .iter()
            .map(|g| {
                (0..=self.spec.ambient)
                    .map(|j| g.derivative(j))
                    .collect()
            })
            .collect()
    }

    /// Evaluate the Jacobian at an ambient point.
    pub fn jacobian_at(&self, point: &[Rat]) -> Result<QMatrix, VarietyError> {
        let jac = self.jacobian();
        let rows = jac.len();
        let cols = self.spec.ambient + 1;
        let mut m = QMatrix::zero(rows, cols);
        for (r, row) in jac.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                m.set(r, c, p.eval(point)?);
            }
        }
        Ok(m)
    }

    /// Evaluate the parametrization at a rational parameter point.
    pub fn map_at(&self, t: &[Rat]) -> Result<Vec<Rat>, VarietyError> {
        Ok(self
            .spec
            .param_map
            .iter()
            .map(|p| p.eval(t))
            .collect::<Result<Vec<_>, _>>()?)
    }

    /// The chosen generating set must cut the cone tangent spaces with
    /// full rank N-n away from the origin; spot-check at 5 points.
    fn jacobian_spot_check(&self) -> Result<(), VarietyError> {
        if self.spec.ideal_gens.is_empty() {
            return Ok(());
        }
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1ac0b1a5);
        let expected = self.spec.ambient - self.spec.n;
        for _ in 0..5 {
            let t: Vec<Rat> = (0..self.spec.param_vars.len())
                .map(|_| crate::arith::rat_int(rng.gen_range(1..=13)))
                .collect();
            let p = self.map_at(&t)?;
            let got = self.jacobian_at(&p)?.rank();
            if got != expected {
                return Err(VarietyError::JacobianRankDeficient {
                    expected,
                    got,
                    point: t.iter().map(|x| x.to_string()).collect(),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::catalog;

    #[test]
    fn conic_validates() {
        let v = catalog::conic();
        assert_eq!(v.param_degree(), 2);
        assert_eq!(v.degree(), 2);
    }

    #[test]
    fn twisted_cubic_validates() {
        let v = catalog::twisted_cubic();
        assert_eq!(v.param_degree(), 3);
        assert_eq!(v.dim(), 1);
    }

    #[test]
    fn veronese_validates() {
        let v = catalog::veronese_p2();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.ambient_dim(), 5);
        assert_eq!(v.degree(), 4);
    }

    #[test]
    fn broken_generator_named_in_error() {
        let text = r#"{"n":1,"N":2,"d":2,"params":["s","t"],
            "map":["s^2","s*t","t^2"],"ideal":["x0*x2-2*x1^2"]}"#;
        match Variety::parse(text) {
            Err(VarietyError::GeneratorDoesNotVanish { generator }) => {
                assert!(generator.contains("x0*x2"), "{generator}");
            }
            other => panic!("expected vanishing failure, got {other:?}"),
        }
    }

    #[test]
    fn graded_dimensions_conic() {
        let v = catalog::conic();
        assert_eq!(v.graded_basis(1).dimension, 3);
        assert_eq!(v.graded_basis(2).dimension, 5);
        assert_eq!(v.graded_basis(-1).dimension, 0);
        // rational normal curve of degree e: h^0(m) = m*e + 1
        for m in 0..=6 {
            assert_eq!(v.graded_basis(m).dimension, (2 * m + 1) as usize);
        }
    }

    #[test]
    fn graded_dimensions_twisted_cubic_and_rnc4() {
        let tc = catalog::twisted_cubic();
        assert_eq!(tc.graded_basis(2).dimension, 7);
        for m in 0..=5 {
            assert_eq!(tc.graded_basis(m).dimension, (3 * m + 1) as usize);
        }
        let r4 = catalog::rnc4();
        for m in 0..=4 {
            assert_eq!(r4.graded_basis(m).dimension, (4 * m + 1) as usize);
        }
    }

    #[test]
    fn graded_dimensions_veronese() {
        let v = catalog::veronese_p2();
        // h^0(v2(P2), O(m)) = C(2m+2, 2)
        for m in 0..=3i64 {
            let k = 2 * m as usize;
            assert_eq!(v.graded_basis(m).dimension, (k + 2) * (k + 1) / 2);
        }
    }

    #[test]
    fn conic_lift_selection_is_greedy() {
        let v = catalog::conic();
        let b = v.graded_basis(2);
        let names: Vec<String> = b
            .ambient_lifts
            .iter()
            .map(|m| m.render(&v.spec().ambient_vars))
            .collect();
        // x1^2 pulls back to the same form as x0*x2 and is skipped
        assert_eq!(names, vec!["x0^2", "x0*x1", "x0*x2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn multiplication_by_x0_on_conic() {
        let v = catalog::conic();
        let vars = v.spec().ambient_vars.clone();
        let g = parse_poly("x0", &vars).unwrap();
        let m = v.multiply_by_form(&g, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (5, 3));
        assert_eq!(m.rank(), 3);
        let zero = v.multiply_by_form(&MultiPoly::zero(vars.clone()), 2);
        // the zero form is linear-homogeneous vacuously; expect a zero matrix
        assert!(zero.unwrap().is_zero());
    }

    #[test]
    fn multiplication_commutes() {
        let v = catalog::conic();
        let x0_then_x1 = v
            .multiplication_matrix(1, 3)
            .mul(&v.multiplication_matrix(0, 2))
            .unwrap();
        let x1_then_x0 = v
            .multiplication_matrix(0, 3)
            .mul(&v.multiplication_matrix(1, 2))
            .unwrap();
        assert_eq!(x0_then_x1, x1_then_x0);
    }

    #[test]
    fn multiplication_map_independent_of_lift_order() {
        let v = catalog::conic();
        let m = 2i64;
        // reversed preference order on the 6 degree-2 ambient monomials
        let alt = v.graded_basis_with_order(m, &[5, 4, 3, 2, 1, 0]);
        let std_b = v.graded_basis(m);
        assert_eq!(alt.dimension, std_b.dimension);
        // express alt basis in std coordinates on source and target, then
        // compare the induced maps: M_std * C_src == C_tgt * M_alt
        let src_std = v.graded_basis(m - 1);
        let alt_src = v.graded_basis_with_order(m - 1, &[2, 1, 0]);
        let c_src = QMatrix::from_columns(
            src_std.dimension,
            alt_src
                .vectors
                .iter()
                .map(|w| src_std.coordinates(w).unwrap())
                .collect(),
        );
        let c_tgt = QMatrix::from_columns(
            std_b.dimension,
            alt.vectors
                .iter()
                .map(|w| std_b.coordinates(w).unwrap())
                .collect(),
        );
        let vars = v.spec().ambient_vars.clone();
        let g = parse_poly("x0 - 2*x1", &vars).unwrap();
        let m_std = v.multiply_by_form(&g, m).unwrap();
        // alt-basis multiplication matrix, built by hand
        let f_slice = v.slice(v.param_degree());
        let gvec = {
            let coeffs = g.linear_coefficients().unwrap();
            let mut acc = vec![Rat::zero(); f_slice.dim()];
            for (j, c) in coeffs.iter().enumerate() {
                for (a, b) in acc.iter_mut().zip(v.map_power(j, 1).iter()) {
                    *a += c * b;
                }
            }
            acc
        };
        let src_slice = v.slice(v.param_degree());
        let out_slice = v.slice(2 * v.param_degree());
        let m_alt = QMatrix::from_columns(
            alt.dimension,
            alt_src
                .vectors
                .iter()
                .map(|w| {
                    let prod = slice_mul(&src_slice, w, &f_slice, &gvec, &out_slice);
                    alt.coordinates(&prod).unwrap()
                })
                .collect(),
        );
        assert_eq!(
            m_std.mul(&c_src).unwrap(),
            c_tgt.mul(&m_alt).unwrap(),
            "induced map must not depend on the lift order"
        );
    }

    #[test]
    fn jacobian_of_conic() {
        let v = catalog::conic();
        let jac = v.jacobian();
        assert_eq!(jac.len(), 1);
        let vars = v.spec().ambient_vars.clone();
        assert_eq!(jac[0][0], parse_poly("x2", &vars).unwrap());
        assert_eq!(jac[0][1], parse_poly("-2*x1", &vars).unwrap());
        assert_eq!(jac[0][2], parse_poly("x0", &vars).unwrap());
        // kernel at (1,1,1) is 2-dimensional
        let at = v
            .jacobian_at(&[rat_int(1), rat_int(1), rat_int(1)])
            .unwrap();
        assert_eq!(at.kernel_basis().len(), 2);
    }

    #[test]
    fn twisted_cubic_jacobian_is_linear() {
        let v = catalog::twisted_cubic();
        for row in v.jacobian() {
            for p in row {
                assert!(p.is_zero() || p.total_degree() == Some(1));
            }
        }
    }

    #[test]
    fn pullback_of_generator_vanishes() {
        let v = catalog::rnc4();
        for g in &v.spec().ideal_gens {
            let vec = v.pullback(g).unwrap();
            assert!(vec.iter().all(|x| x.is_zero()));
        }
    }
}
