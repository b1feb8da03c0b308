use std::cmp::Ordering;

/// Exponent vector of a monomial. One entry per variable of the ambient
/// polynomial ring; the total degree is the entry sum.
///
/// `Ord` is graded lexicographic: higher total degree is greater, ties are
/// broken by the first differing exponent with the earlier variable
/// dominating. This is the one canonical monomial order used everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn constant(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        debug_assert_eq!(self.0.len(), other.0.len());
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Mono {
        Mono(self.0.iter().map(|a| a * k).collect())
    }

    /// Render against a variable name list, e.g. `x0^2*x1`.
    pub fn render(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (v, &e) in vars.iter().zip(&self.0) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {
                // earlier variable with the larger exponent wins
                for (a, b) in self.0.iter().zip(&other.0) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

/// All monomials of the given total degree in `nvars` variables, listed in
/// descending graded-lex order (`x0^d` first, `x_last^d` last).
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, degree);
    out
}

fn fill(out: &mut Vec<Mono>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Mono(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
        current[pos] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = Mono(vec![2, 0]); // x0^2
        let b = Mono(vec![1, 1]); // x0 x1
        let c = Mono(vec![0, 1]); // x1
        assert!(a > b);
        assert!(b > c);
    }

    #[test]
    fn enumeration_descending() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], Mono(vec![2, 0, 0]));
        assert_eq!(ms[5], Mono(vec![0, 0, 2]));
        for w in ms.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn render_names() {
        let m = Mono(vec![2, 1, 0]);
        let vars = vec!["x0".into(), "x1".into(), "x2".into()];
        assert_eq!(m.render(&vars), "x0^2*x1");
        assert_eq!(Mono::constant(3).render(&vars), "1");
    }
}
