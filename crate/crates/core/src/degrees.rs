//! Degree combinatorics: finite difference operators, Hilbert-coefficient
//! telescoping for the resultant degree, and symbolic verification of the
//! exterior-power Chern identities that drive the discriminant degree.

use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{binomial, factorial, rat_int, Mono, MultiPoly, Rat, UniPoly};
use crate::linalg::QMatrix;
use crate::resultant::TwistSpec;
use crate::variety::Variety;

#[derive(Debug, Error)]
pub enum DegreesError {
    #[error("need {needed} sample points to fit a degree-{degree} Hilbert polynomial, got {got}")]
    NotEnoughSamples {
        needed: usize,
        degree: usize,
        got: usize,
    },
    #[error("Hilbert fit is inconsistent: {0}")]
    InconsistentFit(String),
    #[error("identity `{name}` fails at n={n}: lhs {lhs} vs rhs {rhs}")]
    IdentityFailure {
        name: &'static str,
        n: usize,
        lhs: String,
        rhs: String,
    },
}

/// k-fold backward or forward difference operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DifferenceOperator {
    Backward(u32),
    Forward(u32),
}

/// Exact value of the k-fold difference of f at m:
/// backward: sum_j (-1)^j C(k,j) f(m-j);
/// forward:  sum_j (-1)^{j+1} C(k,j) f(m+j).
/// On f_l(m) = m^l these give k! (resp. (-1)^{k+1} k!) when k = l and 0
/// when l < k.
pub fn apply_difference(op: DifferenceOperator, f: &UniPoly, m: &Rat) -> Rat {
    match op {
        DifferenceOperator::Backward(k) => (0..=k)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let c = Rat::from_integer(binomial(k as u64, j as u64)) * rat_int(sign);
                c * f.eval(&(m - rat_int(j as i64)))
            })
            .sum(),
        DifferenceOperator::Forward(k) => (0..=k)
            .map(|j| {
                let sign = if j % 2 == 0 { -1 } else { 1 };
                let c = Rat::from_integer(binomial(k as u64, j as u64)) * rat_int(sign);
                c * f.eval(&(m + rat_int(j as i64)))
            })
            .sum(),
    }
}

/// Coefficients b_0..b_n of the Hilbert polynomial of V(m), fitted exactly
/// from measured graded dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub coefficients: Vec<Rat>,
}

impl HilbertData {
    /// Exact Vandermonde solve through n+1 samples (m_i, h^0(V(m_i))).
    pub fn fit(samples: &[(i64, usize)], n: usize) -> Result<Self, DegreesError> {
        if samples.len() < n + 1 {
            return Err(DegreesError::NotEnoughSamples {
                needed: n + 1,
                degree: n,
                got: samples.len(),
            });
        }
        let pts: Vec<(Rat, Rat)> = samples
            .iter()
            .take(n + 1)
            .map(|&(m, h)| (rat_int(m), rat_int(h as i64)))
            .collect();
        let poly = crate::arith::interpolate_univariate(&pts)
            .map_err(|e| DegreesError::InconsistentFit(e.to_string()))?;
        if poly.degree().map_or(0, |d| d) > n {
            return Err(DegreesError::InconsistentFit(format!(
                "interpolant has degree {:?} > {n}",
                poly.degree()
            )));
        }
        let mut coefficients = poly.coeffs().to_vec();
        coefficients.resize(n + 1, Rat::zero());
        // consistency: remaining samples fall on the fitted polynomial
        let p = UniPoly::new(coefficients.clone());
        for &(m, h) in samples.iter().skip(n + 1) {
            if p.eval(&rat_int(m)) != rat_int(h as i64) {
                return Err(DegreesError::InconsistentFit(format!(
                    "sample at m={m} off the fitted polynomial"
                )));
            }
        }
        Ok(HilbertData { coefficients })
    }

    /// Measure graded dimensions of V(m) = O(a+m)^r on the variety and fit.
    pub fn measure(variety: &Variety, twist: TwistSpec, m_lo: i64, count: usize) -> Result<Self, DegreesError> {
        let samples: Vec<(i64, usize)> = (0..count as i64)
            .map(|k| {
                let m = m_lo + k;
                (
                    m,
                    twist.r * variety.graded_basis(twist.a + m).dimension,
                )
            })
            .collect();
        Self::fit(&samples, variety.dim())
    }

    pub fn top_coefficient(&self) -> &Rat {
        self.coefficients.last().expect("fit has n+1 coefficients")
    }

    pub fn poly(&self) -> UniPoly {
        UniPoly::new(self.coefficients.clone())
    }

    pub fn eval(&self, m: i64) -> Rat {
        self.poly().eval(&rat_int(m))
    }
}

/// The telescoped resultant degree (n+1)! b_n = r d (n+1), an exact
/// integer. Errors if the top coefficient is not an integer multiple of
/// 1/(n+1)!.
pub fn predicted_resultant_degree(hd: &HilbertData, n: usize) -> Result<i64, DegreesError> {
    let value = Rat::from_integer(factorial(n as u64 + 1)) * hd.top_coefficient();
    if !value.denom().is_one() {
        return Err(DegreesError::InconsistentFit(format!(
            "(n+1)! b_n = {value} is not an integer"
        )));
    }
    let i: BigInt = value.numer().clone();
    Ok(i64::try_from(i).expect("degree fits i64"))
}

/// The same quantity summed directly at one m:
/// sum_j (-1)^{j+1} j C(n+1, j) P(m-j). Independent of m by telescoping.
pub fn direct_weighted_sum(hd: &HilbertData, n: usize, m: i64) -> Rat {
    (0..=n as i64 + 1)
        .map(|j| {
            let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
            rat_int(sign * j)
                * Rat::from_integer(binomial(n as u64 + 1, j as u64))
                * hd.eval(m - j)
        })
        .sum()
}

/// Truncated Chern-root ring: polynomials in the roots l1..ln (plus the
/// hyperplane symbol w when present), cut at total degree n.
pub struct ChernRing {
    pub n: usize,
    vars: Arc<Vec<String>>,
    with_omega: bool,
}

impl ChernRing {
    pub fn new(n: usize) -> Self {
        let vars: Vec<String> = (1..=n).map(|i| format!("l{i}")).collect();
        ChernRing {
            n,
            vars: Arc::new(vars),
            with_omega: false,
        }
    }

    pub fn with_omega(n: usize) -> Self {
        let mut vars: Vec<String> = (1..=n).map(|i| format!("l{i}")).collect();
        vars.push("w".into());
        ChernRing {
            n,
            vars: Arc::new(vars),
            with_omega: true,
        }
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.vars.clone())
    }

    pub fn constant(&self, c: Rat) -> MultiPoly {
        MultiPoly::constant(self.vars.clone(), c)
    }

    pub fn root(&self, i: usize) -> MultiPoly {
        MultiPoly::var(self.vars.clone(), i)
    }

    pub fn omega(&self) -> MultiPoly {
        assert!(self.with_omega);
        MultiPoly::var(self.vars.clone(), self.vars.len() - 1)
    }

    pub fn truncate(&self, p: &MultiPoly) -> MultiPoly {
        p.truncate_degree(self.n as u32)
    }

    pub fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        self.truncate(&a.mul(b).expect("same ring"))
    }

    /// exp of a positive-degree element, truncated.
    pub fn exp(&self, rho: &MultiPoly) -> MultiPoly {
        let mut acc = self.constant(Rat::one());
        let mut power = self.constant(Rat::one());
        let mut fact = Rat::one();
        for p in 1..=self.n as u64 {
            power = self.mul(&power, rho);
            fact *= rat_int(p as i64);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power.scale(&fact.clone().recip())).unwrap();
        }
        acc
    }

    /// Chern character of a sum of line bundles with the given roots.
    pub fn ch_sum(&self, roots: &[MultiPoly]) -> MultiPoly {
        let mut acc = self.zero();
        for r in roots {
            acc = acc.add(&self.exp(r)).unwrap();
        }
        acc
    }

    /// Ch(Lambda^i) of a bundle with the given roots: sum over i-subsets
    /// of exp of the subset sum.
    pub fn ch_lambda(&self, roots: &[MultiPoly], i: usize) -> MultiPoly {
        if i > roots.len() {
            return self.zero();
        }
        let mut acc = self.zero();
        for subset in (0..roots.len()).combinations(i) {
            let mut rho = self.zero();
            for &k in &subset {
                rho = rho.add(&roots[k]).unwrap();
            }
            acc = acc.add(&self.exp(&rho)).unwrap();
        }
        acc
    }

    /// Elementary symmetric polynomial e_k of the given roots.
    pub fn chern_class(&self, roots: &[MultiPoly], k: usize) -> MultiPoly {
        if k > roots.len() {
            return self.zero();
        }
        let mut acc = self.zero();
        for subset in (0..roots.len()).combinations(k) {
            let mut prod = self.constant(Rat::one());
            for &i in &subset {
                prod = self.mul(&prod, &roots[i]);
            }
            acc = acc.add(&prod).unwrap();
        }
        acc
    }

    /// Total Chern class 1 + c_1 + ... of the given roots.
    pub fn total_chern(&self, roots: &[MultiPoly]) -> MultiPoly {
        let mut acc = self.constant(Rat::one());
        for r in roots {
            let factor = self.constant(Rat::one()).add(r).unwrap();
            acc = self.mul(&acc, &factor);
        }
        acc
    }

    /// Component of pure total degree p.
    pub fn degree_part(&self, p: &MultiPoly, deg: u32) -> MultiPoly {
        MultiPoly::from_terms(
            self.vars.clone(),
            p.terms()
                .filter(|(m, _)| m.degree() == deg)
                .map(|(m, c)| (Mono(m.0.clone()), c.clone())),
        )
    }
}

/// Both exterior-power Chern identities, verified as exact symmetric-
/// polynomial identities in the truncated root ring:
///   sum_i (-1)^i Ch(Lambda^i E) = c_n(E-dual)
///   sum_i (-1)^i i Ch(Lambda^i E)
///     = (-1)^n c_{n-1}(E) + ((-1)^n / 2)(c_1(E) c_{n-1}(E) + n c_n(E)).
/// These are theorems; a failure indicates an implementation bug.
pub fn verify_chern_lemma(n: usize) -> Result<(), DegreesError> {
    assert!((1..=6).contains(&n), "symbolic cost grows fast");
    let ring = ChernRing::new(n);
    let roots: Vec<MultiPoly> = (0..n).map(|i| ring.root(i)).collect();
    let dual_roots: Vec<MultiPoly> = roots.iter().map(|r| r.neg()).collect();

    // identity 1
    let mut lhs1 = ring.zero();
    for i in 0..=n {
        let term = ring.ch_lambda(&roots, i);
        let signed = if i % 2 == 0 { term } else { term.neg() };
        lhs1 = lhs1.add(&signed).unwrap();
    }
    let rhs1 = ring.chern_class(&dual_roots, n);
    if lhs1 != rhs1 {
        return Err(DegreesError::IdentityFailure {
            name: "alternating-ch",
            n,
            lhs: lhs1.to_string(),
            rhs: rhs1.to_string(),
        });
    }

    // identity 2
    let mut lhs2 = ring.zero();
    for i in 1..=n {
        let term = ring.ch_lambda(&roots, i).scale(&rat_int(i as i64));
        let signed = if i % 2 == 0 { term } else { term.neg() };
        lhs2 = lhs2.add(&signed).unwrap();
    }
    let sign_n = if n % 2 == 0 { 1 } else { -1 };
    let c_n1 = ring.chern_class(&roots, n - 1);
    let c_n = ring.chern_class(&roots, n);
    let c_1 = ring.chern_class(&roots, 1);
    let rhs2 = c_n1
        .scale(&rat_int(sign_n))
        .add(
            &ring
                .mul(&c_1, &c_n1)
                .add(&c_n.scale(&rat_int(n as i64)))
                .unwrap()
                .scale(&(rat_int(sign_n) / rat_int(2))),
        )
        .unwrap();
    if lhs2 != rhs2 {
        return Err(DegreesError::IdentityFailure {
            name: "weighted-ch",
            n,
            lhs: lhs2.to_string(),
            rhs: rhs2.to_string(),
        });
    }
    Ok(())
}

/// The jet-bundle Chern identity behind the dual degree: with
/// Lambda^i = Lambda^i(T(-1)) for T of rank n and Ch(-1) = e^{-w},
///   sum_{i=0}^{n+1} (-1)^{i+1} i (Ch(Lambda^{i-1}) Ch(-1) + Ch(Lambda^i))
///     = c_n(Omega(1)) + w c_{n-1}(Omega(1))
/// holds in the truncated ring (all lower-degree parts vanish), where
/// Omega(1) is the dual of T(-1).
pub fn verify_jet_chern_identity(n: usize) -> Result<(), DegreesError> {
    assert!((1..=5).contains(&n));
    let ring = ChernRing::with_omega(n);
    let w = ring.omega();
    // roots of T(-1): l_i - w
    let twisted: Vec<MultiPoly> = (0..n).map(|i| ring.root(i).sub(&w).unwrap()).collect();
    let ch_minus1 = ring.exp(&w.neg());

    let mut lhs = ring.zero();
    for i in 0..=n + 1 {
        let lam_prev = if i == 0 {
            ring.zero()
        } else {
            ring.ch_lambda(&twisted, i - 1)
        };
        let lam_i = ring.ch_lambda(&twisted, i);
        let inner = ring.mul(&lam_prev, &ch_minus1).add(&lam_i).unwrap();
        let weighted = inner.scale(&rat_int(i as i64));
        let signed = if (i + 1) % 2 == 0 { weighted } else { weighted.neg() };
        lhs = lhs.add(&signed).unwrap();
    }

    // Omega(1): roots w - l_i
    let omega1: Vec<MultiPoly> = (0..n).map(|i| w.sub(&ring.root(i)).unwrap()).collect();
    let rhs = ring
        .chern_class(&omega1, n)
        .add(&ring.mul(&w, &ring.chern_class(&omega1, n - 1)))
        .unwrap();
    if lhs != rhs {
        return Err(DegreesError::IdentityFailure {
            name: "jet-chern",
            n,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(())
}

/// Whitney check for the jet sequence model: with J1 = O(1) + Omega(1),
/// c(J1) = c(O(1)) c(Omega(1)) by construction, and its top class is the
/// combination realized by the jet identity.
pub fn verify_jet_whitney(n: usize) -> Result<(), DegreesError> {
    let ring = ChernRing::with_omega(n);
    let w = ring.omega();
    let omega1: Vec<MultiPoly> = (0..n).map(|i| w.sub(&ring.root(i)).unwrap()).collect();
    let mut jet_roots = omega1.clone();
    jet_roots.push(w.clone());
    let total_jet = ring.total_chern(&jet_roots);
    let product = ring.mul(&ring.total_chern(&[w.clone()]), &ring.total_chern(&omega1));
    if total_jet != product {
        return Err(DegreesError::IdentityFailure {
            name: "jet-whitney",
            n,
            lhs: total_jet.to_string(),
            rhs: product.to_string(),
        });
    }
    // top degree of c(J1) = c_n(Omega(1)) + w c_{n-1}(Omega(1))
    let top = ring.degree_part(&total_jet, n as u32);
    let expected = ring
        .chern_class(&omega1, n)
        .add(&ring.mul(&w, &ring.chern_class(&omega1, n - 1)))
        .unwrap();
    let expected = ring.degree_part(&expected, n as u32);
    if top != expected {
        return Err(DegreesError::IdentityFailure {
            name: "jet-top-class",
            n,
            lhs: top.to_string(),
            rhs: expected.to_string(),
        });
    }
    Ok(())
}

/// Convenience: measure the Hilbert polynomial of the twisted structure
/// sheaf and return the telescoped degree, checking it against r d (n+1).
pub fn resultant_degree_via_hilbert(
    variety: &Variety,
    twist: TwistSpec,
) -> Result<i64, DegreesError> {
    let n = variety.dim();
    let hd = HilbertData::measure(variety, twist, n as i64 + 3, n + 3)?;
    let predicted = predicted_resultant_degree(&hd, n)?;
    let expected = twist.r as i64 * variety.degree() as i64 * (n as i64 + 1);
    if predicted != expected {
        return Err(DegreesError::InconsistentFit(format!(
            "telescoped degree {predicted} != r d (n+1) = {expected}"
        )));
    }
    Ok(predicted)
}

/// The Hilbert coefficient matrix itself is sometimes useful in tests.
pub fn vandermonde(points: &[i64]) -> QMatrix {
    QMatrix::from_fn(points.len(), points.len(), |r, c| {
        rat_int(points[r]).pow(c as i32)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn difference_table_values() {
        let m = rat_int(10);
        // backward: k = l = 3 -> 3! = 6
        assert_eq!(
            apply_difference(DifferenceOperator::Backward(3), &UniPoly::monomial(3), &m),
            rat_int(6)
        );
        // backward: l = 2 < k = 4 -> 0
        assert_eq!(
            apply_difference(DifferenceOperator::Backward(4), &UniPoly::monomial(2), &m),
            rat_int(0)
        );
        // forward: k = l = 2 -> (-1)^{k+1} k! = -2
        assert_eq!(
            apply_difference(DifferenceOperator::Forward(2), &UniPoly::monomial(2), &m),
            rat_int(-2)
        );
    }

    #[test]
    fn difference_table_sweep() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(31);
        for k in 0..=6u32 {
            for l in 0..=6usize {
                let f = UniPoly::monomial(l);
                for _ in 0..5 {
                    let m = rat_int(rng.gen_range(-20..=20));
                    let back = apply_difference(DifferenceOperator::Backward(k), &f, &m);
                    let fwd = apply_difference(DifferenceOperator::Forward(k), &f, &m);
                    if (l as u32) < k {
                        assert_eq!(back, rat_int(0), "backward k={k} l={l}");
                        assert_eq!(fwd, rat_int(0), "forward k={k} l={l}");
                    } else if l as u32 == k {
                        assert_eq!(back, Rat::from_integer(factorial(k as u64)));
                        let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
                        assert_eq!(
                            fwd,
                            Rat::from_integer(factorial(k as u64)) * rat_int(sign)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hilbert_fit_conic() {
        let v = catalog::conic();
        let hd = HilbertData::measure(&v, TwistSpec::trivial(), 4, 4).unwrap();
        // h^0(O(m)) =, 2m + 1: b = (1, 2)
        assert_eq!(hd.coefficients, vec![rat_int(1), rat_int(2)]);
        // top coefficient relation b_n = d r / n!
        assert_eq!(hd.top_coefficient(), &rat_int(2));
        assert_eq!(predicted_resultant_degree(&hd, 1).unwrap(), 4);
    }

    #[test]
    fn predicted_degrees_match_d_times_n_plus_one() {
        assert_eq!(
            resultant_degree_via_hilbert(&catalog::conic(), TwistSpec::trivial()).unwrap(),
            4
        );
        assert_eq!(
            resultant_degree_via_hilbert(&catalog::twisted_cubic(), TwistSpec::rank(2)).unwrap(),
            12
        );
        assert_eq!(
            resultant_degree_via_hilbert(&catalog::rnc4(), TwistSpec::trivial()).unwrap(),
            8
        );
        assert_eq!(
            resultant_degree_via_hilbert(&catalog::veronese_p2(), TwistSpec::trivial()).unwrap(),
            12
        );
    }

    #[test]
    fn weighted_sum_independent_of_m() {
        let v = catalog::twisted_cubic();
        let hd = HilbertData::measure(&v, TwistSpec::trivial(), 4, 4).unwrap();
        let expected = rat_int(6);
        for m in 4..=9 {
            assert_eq!(direct_weighted_sum(&hd, 1, m), expected, "m={m}");
        }
    }

    #[test]
    fn chern_lemma_n1_by_hand() {
        // n=1: sum (-1)^i Ch(Lambda^i) = 1 - e^{l} truncated = -l = c_1(E-dual)
        let ring = ChernRing::new(1);
        let l = ring.root(0);
        let lhs = ring.constant(Rat::one()).sub(&ring.exp(&l)).unwrap();
        assert_eq!(lhs, l.neg());
        verify_chern_lemma(1).unwrap();
    }

    #[test]
    fn chern_lemma_through_n5() {
        for n in 1..=5 {
            verify_chern_lemma(n).unwrap();
        }
    }

    #[test]
    fn chern_lemma_second_identity_n2_expansion() {
        // direct expansion at n=2: lhs = c_1 + (1/2) c_1^2 + c_2
        let ring = ChernRing::new(2);
        let roots = vec![ring.root(0), ring.root(1)];
        let mut lhs = ring.zero();
        for i in 1..=2 {
            let t = ring.ch_lambda(&roots, i).scale(&rat_int(i as i64));
            lhs = lhs.add(&if i % 2 == 0 { t } else { t.neg() }).unwrap();
        }
        let c1 = ring.chern_class(&roots, 1);
        let c2 = ring.chern_class(&roots, 2);
        let expect = c1
            .add(&ring.mul(&c1, &c1).scale(&crate::arith::rat(1, 2)))
            .unwrap()
            .add(&c2)
            .unwrap();
        assert_eq!(lhs, expect);
    }

    #[test]
    fn jet_identity_n1_by_hand() {
        // both sides reduce to 2w - l in degree <= 1
        let ring = ChernRing::with_omega(1);
        let w = ring.omega();
        let l = ring.root(0);
        let expected = w.scale(&rat_int(2)).sub(&l).unwrap();
        let omega1 = vec![w.sub(&l).unwrap()];
        let rhs = ring
            .chern_class(&omega1, 1)
            .add(&ring.mul(&w, &ring.chern_class(&omega1, 0)))
            .unwrap();
        assert_eq!(ring.truncate(&rhs), expected);
        verify_jet_chern_identity(1).unwrap();
    }

    #[test]
    fn jet_identity_through_n4() {
        for n in 1..=4 {
            verify_jet_chern_identity(n).unwrap();
            verify_jet_whitney(n).unwrap();
        }
    }

    #[test]
    fn hilbert_inconsistent_sample_rejected() {
        let samples = vec![(4i64, 9usize), (5, 11), (6, 14)];
        assert!(HilbertData::fit(&samples, 1).is_err());
    }
}
