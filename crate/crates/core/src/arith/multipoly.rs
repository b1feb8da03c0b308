use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::mono::Mono;
use super::{ArithError, Rat};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are keyed by exponent vector in a `BTreeMap`, so iteration is
/// always in ascending graded-lex order; no zero coefficient is ever
/// stored. The variable list travels with the polynomial and two
/// polynomials combine only when their lists agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Mono, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: Arc<Vec<String>>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<Vec<String>>, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Mono::constant(p.nvars()), c);
        }
        p
    }

    pub fn var(vars: Arc<Vec<String>>, idx: usize) -> Self {
        let nv = vars.len();
        assert!(idx < nv);
        let mut p = Self::zero(vars);
        p.terms.insert(Mono::var(nv, idx), Rat::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Rat)>>(vars: Arc<Vec<String>>, it: I) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// True if every term has the same total degree (the zero polynomial
    /// counts as homogeneous of any degree).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        assert_eq!(m.nvars(), self.nvars(), "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), ArithError> {
        if self.vars != other.vars && *self.vars != *other.vars {
            return Err(ArithError::VariableMismatch(
                self.vars.join(","),
                other.vars.join(","),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        let mut out = Self::zero(self.vars.clone());
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.vars.clone(), Rat::one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Evaluate at a rational point; the exact ring homomorphism.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat, ArithError> {
        if point.len() != self.nvars() {
            return Err(ArithError::DimensionMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= x.pow(e as i32);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute a polynomial for every variable (all images over one
    /// common ring). The workhorse behind pulling ambient forms back
    /// along a parametrization.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly, ArithError> {
        if images.len() != self.nvars() {
            return Err(ArithError::DimensionMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let target_vars = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| Arc::new(Vec::new()));
        let mut acc = MultiPoly::zero(target_vars.clone());
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target_vars.clone(), c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&img.pow(e))?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        assert!(idx < self.nvars());
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] -= 1;
            out.add_term(Mono(exps), c * Rat::from_integer(e.into()));
        }
        out
    }

    /// Coefficient of `var` in a homogeneous linear form; errors if the
    /// polynomial is not linear.
    pub fn linear_coefficients(&self) -> Result<Vec<Rat>, ArithError> {
        let mut coeffs = vec![Rat::zero(); self.nvars()];
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return Err(ArithError::Parse {
                    input: self.to_string(),
                    reason: "expected a homogeneous linear form".into(),
                });
            }
            let idx = m.0.iter().position(|&e| e == 1).unwrap();
            coeffs[idx] = c.clone();
        }
        Ok(coeffs)
    }

    /// Drop every term of total degree above `cap` (Chern-ring truncation).
    pub fn truncate_degree(&self, cap: u32) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            if m.degree() <= cap {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // leading term first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = m.render(&self.vars);
            if mono == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, rat_int};

    fn xy() -> Arc<Vec<String>> {
        Arc::new(vec!["x".into(), "y".into()])
    }

    #[test]
    fn eval_direct_substitution() {
        // x^2 + y at (2,3) -> 7
        let p = parse_poly("x^2 + y", &xy()).unwrap();
        assert_eq!(p.eval(&[rat_int(2), rat_int(3)]).unwrap(), rat_int(7));
    }

    #[test]
    fn mul_ring_identity() {
        let vars = xy();
        let a = parse_poly("x + y", &vars).unwrap();
        let b = parse_poly("x - y", &vars).unwrap();
        let expect = parse_poly("x^2 - y^2", &vars).unwrap();
        assert_eq!(a.mul(&b).unwrap(), expect);
    }

    #[test]
    fn eval_zero_poly() {
        let p = MultiPoly::zero(xy());
        assert_eq!(p.eval(&[rat_int(5), rat_int(-1)]).unwrap(), rat_int(0));
    }

    #[test]
    fn eval_dimension_mismatch() {
        let p = parse_poly("x + y", &xy()).unwrap();
        assert!(matches!(
            p.eval(&[rat_int(1)]),
            Err(ArithError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn derivative_basic() {
        let vars = xy();
        let p = parse_poly("x^2*y + 3*y", &vars).unwrap();
        assert_eq!(p.derivative(0), parse_poly("2*x*y", &vars).unwrap());
        assert_eq!(p.derivative(1), parse_poly("x^2 + 3", &vars).unwrap());
    }

    #[test]
    fn compose_pullback() {
        // x0*x2 - x1^2 composed with (s^2, s*t, t^2) vanishes
        let amb = Arc::new(vec!["x0".into(), "x1".into(), "x2".into()]);
        let par = Arc::new(vec!["s".into(), "t".into()]);
        let gen = parse_poly("x0*x2 - x1^2", &amb).unwrap();
        let images = vec![
            parse_poly("s^2", &par).unwrap(),
            parse_poly("s*t", &par).unwrap(),
            parse_poly("t^2", &par).unwrap(),
        ];
        assert!(gen.compose(&images).unwrap().is_zero());
    }

    #[test]
    fn display_round_trip() {
        let vars = xy();
        let p = parse_poly("3/2*x^2*y - y + 1", &vars).unwrap();
        let q = parse_poly(&p.to_string(), &vars).unwrap();
        assert_eq!(p, q);
    }
}
