use std::sync::Arc;

use num_traits::One;

use super::mono::Mono;
use super::multipoly::MultiPoly;
use super::{ArithError, Rat};

/// Parse a rational literal: `3`, `-3`, `3/2`.
pub fn parse_rat(s: &str) -> Result<Rat, ArithError> {
    s.trim().parse::<Rat>().map_err(|e| ArithError::Parse {
        input: s.to_string(),
        reason: e.to_string(),
    })
}

/// Parse the polynomial text format `3/2*x0^2*x1 - x2` against a fixed
/// variable list. Terms are separated by `+`/`-`, factors by `*`, powers
/// written `var^k`. Unknown identifiers are rejected.
pub fn parse_poly(input: &str, vars: &Arc<Vec<String>>) -> Result<MultiPoly, ArithError> {
    let mut p = MultiPoly::zero(vars.clone());
    let mut term_start = 0usize;
    let bytes: Vec<char> = input.chars().collect();
    let mut signs_terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut i = 0usize;
    // split on top-level + and - (a sign directly after '^', '*', '/' or at
    // the start belongs to the number that follows)
    while i < bytes.len() {
        let c = bytes[i];
        if c == '+' || c == '-' {
            let prev = bytes[..i].iter().rev().find(|ch| !ch.is_whitespace());
            let is_sign_of_number = match prev {
                None => true,
                Some(&p) => p == '*' || p == '^' || p == '/' || p == '+' || p == '-',
            };
            if !is_sign_of_number {
                let chunk: String = bytes[term_start..i].iter().collect();
                signs_terms.push((negative, chunk));
                negative = c == '-';
                term_start = i + 1;
            } else if i == term_start && c == '-' {
                // leading minus of the very first term
                negative = !negative;
                term_start = i + 1;
            }
        }
        i += 1;
    }
    let chunk: String = bytes[term_start..].iter().collect();
    signs_terms.push((negative, chunk));

    for (neg, term) in signs_terms {
        let term = term.trim();
        if term.is_empty() {
            return Err(ArithError::Parse {
                input: input.to_string(),
                reason: "empty term".into(),
            });
        }
        let (mono, mut coeff) = parse_term(term, vars)?;
        if neg {
            coeff = -coeff;
        }
        p.add_term(mono, coeff);
    }
    Ok(p)
}

fn parse_term(term: &str, vars: &Arc<Vec<String>>) -> Result<(Mono, Rat), ArithError> {
    let mut coeff = Rat::one();
    let mut exps = vec![0u32; vars.len()];
    for factor in term.split('*') {
        let f = factor.trim();
        if f.is_empty() {
            return Err(ArithError::Parse {
                input: term.to_string(),
                reason: "empty factor".into(),
            });
        }
        let first = f.chars().next().unwrap();
        if first.is_ascii_digit() || first == '-' || first == '+' {
            coeff *= parse_rat(f)?;
        } else {
            let (name, exp) = match f.split_once('^') {
                Some((n, e)) => {
                    let exp = e.trim().parse::<u32>().map_err(|err| ArithError::Parse {
                        input: f.to_string(),
                        reason: format!("bad exponent: {err}"),
                    })?;
                    (n.trim(), exp)
                }
                None => (f, 1),
            };
            let idx = vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| ArithError::Parse {
                    input: term.to_string(),
                    reason: format!("unknown variable `{name}`"),
                })?;
            exps[idx] += exp;
        }
    }
    Ok((Mono(exps), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn vars3() -> Arc<Vec<String>> {
        Arc::new(vec!["x0".into(), "x1".into(), "x2".into()])
    }

    #[test]
    fn spec_format() {
        let p = parse_poly("3/2*x0^2*x1 - x2", &vars3()).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&Mono(vec![2, 1, 0])), rat(3, 2));
        assert_eq!(p.coeff(&Mono(vec![0, 0, 1])), rat_int(-1));
    }

    #[test]
    fn implicit_one_and_leading_minus() {
        let p = parse_poly("-x0*x2 + x1^2", &vars3()).unwrap();
        assert_eq!(p.coeff(&Mono(vec![1, 0, 1])), rat_int(-1));
        assert_eq!(p.coeff(&Mono(vec![0, 2, 0])), rat_int(1));
    }

    #[test]
    fn constant_only() {
        let p = parse_poly("5/3", &vars3()).unwrap();
        assert_eq!(p.coeff(&Mono::constant(3)), rat(5, 3));
    }

    #[test]
    fn unknown_variable_rejected() {
        assert!(parse_poly("y + x0", &vars3()).is_err());
    }

    #[test]
    fn negative_coefficient_inside_term() {
        let p = parse_poly("-2*x1", &vars3()).unwrap();
        assert_eq!(p.coeff(&Mono(vec![0, 1, 0])), rat_int(-2));
    }
}
