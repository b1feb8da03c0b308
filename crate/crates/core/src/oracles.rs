//! Independent classical ground truth: Sylvester resultants of binary
//! forms, binary discriminants, and a small Macaulay resultant for three
//! ternary forms. Torsion values are only ever compared against these
//! through ratios, so the textbook normalizations chosen here never leak
//! into the main theorems.

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{rat_int, ArithError, MultiPoly, Rat};
use crate::linalg::QMatrix;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("zero form where a nonzero binary form is required")]
    ZeroForm,
    #[error("degree {0} not supported here (need {1})")]
    UnsupportedDegree(u32, &'static str),
    #[error("extraneous Macaulay minor vanished; inputs too special for the quotient formula")]
    ExtraneousMinorZero,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Linalg(#[from] crate::linalg::LinalgError),
}

/// Binary form of formal degree e: coefficients c_0..c_e of
/// sum_i c_i s^{e-i} t^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree >= 0");
        BinaryForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Read a homogeneous two-variable polynomial as a binary form of its
    /// total degree.
    pub fn from_poly(p: &MultiPoly) -> Result<Self, OracleError> {
        if p.nvars() != 2 {
            return Err(OracleError::Arith(ArithError::DimensionMismatch {
                expected: 2,
                got: p.nvars(),
            }));
        }
        if p.is_zero() {
            return Err(OracleError::ZeroForm);
        }
        let e = p.total_degree().unwrap();
        let mut coeffs = vec![Rat::zero(); e as usize + 1];
        for (m, c) in p.terms() {
            if m.degree() != e {
                return Err(OracleError::Arith(ArithError::Parse {
                    input: p.to_string(),
                    reason: "not homogeneous".into(),
                }));
            }
            coeffs[m.0[1] as usize] = c.clone();
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        let e = self.degree() as i32;
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * s.pow(e - i as i32) * t.pow(i as i32);
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    /// Partial derivative in s (a form of formal degree e-1).
    pub fn d_ds(&self) -> Self {
        let e = self.degree();
        BinaryForm {
            coeffs: (0..e)
                .map(|i| &self.coeffs[i as usize] * rat_int((e - i) as i64))
                .collect(),
        }
    }

    /// Partial derivative in t (a form of formal degree e-1).
    pub fn d_dt(&self) -> Self {
        let e = self.degree();
        BinaryForm {
            coeffs: (1..=e)
                .map(|i| &self.coeffs[i as usize] * rat_int(i as i64))
                .collect(),
        }
    }
}

/// Determinant of the (deg p + deg q) Sylvester matrix; vanishes exactly
/// when the forms share a root in P^1 (formal degrees, so roots at
/// infinity count).
pub fn sylvester_resultant(p: &BinaryForm, q: &BinaryForm) -> Result<Rat, OracleError> {
    if p.is_zero() || q.is_zero() {
        return Err(OracleError::ZeroForm);
    }
    let a = p.degree() as usize;
    let b = q.degree() as usize;
    if a < 1 || b < 1 {
        return Err(OracleError::UnsupportedDegree(a.min(b) as u32, "degree >= 1"));
    }
    let n = a + b;
    let mut m = QMatrix::zero(n, n);
    for row in 0..b {
        for (j, c) in p.coeffs().iter().enumerate() {
            m.set(row, row + j, c.clone());
        }
    }
    for row in 0..a {
        for (j, c) in q.coeffs().iter().enumerate() {
            m.set(b + row, row + j, c.clone());
        }
    }
    Ok(m.det()?)
}

/// Discriminant, normalized so that disc(a s^2 + b st + c t^2) = b^2 - 4ac:
/// disc(p) = (-1)^{e(e-1)/2} Res(dp/ds, dp/dt) / e^{e-2}.
pub fn binary_discriminant(p: &BinaryForm) -> Result<Rat, OracleError> {
    let e = p.degree();
    if e < 2 {
        return Err(OracleError::UnsupportedDegree(e, "degree >= 2"));
    }
    let ps = p.d_ds();
    let pt = p.d_dt();
    if ps.is_zero() || pt.is_zero() {
        // a partial vanishes identically only for degenerate forms like
        // c*t^e; those have a repeated root, so the discriminant is zero
        return Ok(Rat::zero());
    }
    let res = sylvester_resultant(&ps, &pt)?;
    let sign = if (e * (e - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let content = rat_int(e as i64).pow(e as i32 - 2);
    Ok(rat_int(sign) * res / content)
}

/// Classical Macaulay resultant of three ternary forms of degree 1 or 2,
/// via the quotient of the Macaulay determinant by its extraneous minor.
pub fn macaulay_resultant_3forms(
    forms: [&MultiPoly; 3],
) -> Result<Rat, OracleError> {
    let degrees: Vec<u32> = forms
        .iter()
        .map(|f| {
            if f.nvars() != 3 || !f.is_homogeneous() {
                return Err(OracleError::Arith(ArithError::Parse {
                    input: f.to_string(),
                    reason: "need homogeneous ternary forms".into(),
                }));
            }
            f.total_degree().ok_or(OracleError::ZeroForm)
        })
        .collect::<Result<_, _>>()?;
    for &d in &degrees {
        if !(1..=2).contains(&d) {
            return Err(OracleError::UnsupportedDegree(d, "degree in {1, 2}"));
        }
    }
    let t = degrees.iter().sum::<u32>() - 2;
    let cols = crate::arith::monomials_of_degree(3, t);
    let col_index: std::collections::HashMap<Vec<u32>, usize> = cols
        .iter()
        .enumerate()
        .map(|(i, m)| (m.0.clone(), i))
        .collect();

    // each degree-t monomial is assigned to the least i with gamma_i >= d_i
    let class_of = |gamma: &[u32]| -> usize {
        (0..3)
            .find(|&i| gamma[i] >= degrees[i])
            .expect("degree t monomials always dominate some x_i^{d_i}")
    };

    let n = cols.len();
    let mut mac = QMatrix::zero(n, n);
    for (row, gamma) in cols.iter().enumerate() {
        let i = class_of(&gamma.0);
        let mut shifted = gamma.0.clone();
        shifted[i] -= degrees[i];
        // row polynomial: x^{gamma - d_i e_i} * f_i
        for (m, c) in forms[i].terms() {
            let prod: Vec<u32> = shifted.iter().zip(&m.0).map(|(a, b)| a + b).collect();
            let j = col_index[&prod];
            mac.set(row, j, mac.get(row, j) + c);
        }
    }
    let d_mac = mac.det()?;

    // extraneous minor: rows/columns on monomials dominating at least two
    // of the x_i^{d_i}
    let non_reduced: Vec<usize> = cols
        .iter()
        .enumerate()
        .filter(|(_, g)| (0..3).filter(|&i| g.0[i] >= degrees[i]).count() >= 2)
        .map(|(i, _)| i)
        .collect();
    if non_reduced.is_empty() {
        return Ok(d_mac);
    }
    let minor = mac.submatrix(&non_reduced, &non_reduced);
    let e = minor.det()?;
    if e.is_zero() {
        return Err(OracleError::ExtraneousMinorZero);
    }
    Ok(d_mac / e)
}
