use num_traits::Zero;

use super::{ArithError, Rat};

/// Dense univariate polynomial, coefficients lowest degree first; the
/// leading coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// x^l
    pub fn monomial(l: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); l + 1];
        coeffs[l] = Rat::from_integer(1.into());
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// If the polynomial is a single monomial c*x^D, return (D, c).
    pub fn as_monomial(&self) -> Option<(usize, &Rat)> {
        let d = self.degree()?;
        if self.coeffs[..d].iter().all(|c| c.is_zero()) {
            Some((d, &self.coeffs[d]))
        } else {
            None
        }
    }
}

/// Lagrange interpolation: the unique polynomial of degree < #samples
/// through all samples. Abscissae must be pairwise distinct.
pub fn interpolate_univariate(samples: &[(Rat, Rat)]) -> Result<UniPoly, ArithError> {
    for (i, (xi, _)) in samples.iter().enumerate() {
        for (xj, _) in &samples[..i] {
            if xi == xj {
                return Err(ArithError::RepeatedAbscissa(xi.to_string()));
            }
        }
    }
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        let mut basis = UniPoly::constant(Rat::from_integer(1.into()));
        let mut denom = Rat::from_integer(1.into());
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&UniPoly::new(vec![-xj.clone(), Rat::from_integer(1.into())]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, Rat};

    fn pts(data: &[(i64, i64)]) -> Vec<(Rat, Rat)> {
        data.iter().map(|&(x, y)| (rat_int(x), rat_int(y))).collect()
    }

    #[test]
    fn quadratic_through_three_points() {
        // (0,1),(1,2),(2,5) -> x^2 + 1
        let p = interpolate_univariate(&pts(&[(0, 1), (1, 2), (2, 5)])).unwrap();
        assert_eq!(p, UniPoly::new(vec![rat_int(1), rat_int(0), rat_int(1)]));
    }

    #[test]
    fn single_point_is_constant() {
        let p = interpolate_univariate(&pts(&[(0, 7)])).unwrap();
        assert_eq!(p, UniPoly::constant(rat_int(7)));
    }

    #[test]
    fn squares_recover_x_squared() {
        // evaluate x^2 at 1..4 by hand: 1, 4, 9, 16
        let p = interpolate_univariate(&pts(&[(1, 1), (2, 4), (3, 9), (4, 16)])).unwrap();
        assert_eq!(p, UniPoly::monomial(2));
        assert_eq!(p.as_monomial().map(|(d, _)| d), Some(2));
    }

    #[test]
    fn repeated_abscissa_rejected() {
        assert!(matches!(
            interpolate_univariate(&pts(&[(1, 1), (1, 2)])),
            Err(ArithError::RepeatedAbscissa(_))
        ));
    }

    #[test]
    fn interpolate_then_evaluate_reproduces_samples() {
        let samples = pts(&[(-2, 11), (0, 3), (1, -1), (5, 40), (7, 2)]);
        let p = interpolate_univariate(&samples).unwrap();
        for (x, y) in &samples {
            assert_eq!(&p.eval(x), y);
        }
    }
}
