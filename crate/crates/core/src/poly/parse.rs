use num_bigint::BigInt;

use crate::scalars::{parse_rational, Rational, ScalarError};

/// Parses a sum of monomials such as `x^3 - 3/8*x^2 + 13/512` or
/// `8/3*alpha*gamma + beta - 2/3*psi` into `(coefficient, exponents)` terms.
///
/// Each term is a `*`-separated product of rational literals and
/// `var` / `var^k` factors drawn from `vars`. Whitespace is ignored.
pub(crate) fn parse_terms(
    input: &str,
    vars: &[&str],
) -> Result<Vec<(Rational, Vec<u32>)>, ScalarError> {
    let err = || ScalarError::Parse { what: "polynomial", input: input.to_string() };
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err());
    }
    let mut terms = Vec::new();
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && !(cur.ends_with('^')) {
            if i > 0 {
                if cur.is_empty() {
                    return Err(err());
                }
                chunks.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(err());
    }
    chunks.push((neg, cur));

    for (neg, chunk) in chunks {
        let mut coeff = Rational::from_integer(BigInt::from(if neg { -1 } else { 1 }));
        let mut exps = vec![0u32; vars.len()];
        for factor in chunk.split('*') {
            if factor.is_empty() {
                return Err(err());
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                coeff *= parse_rational(factor).map_err(|_| err())?;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err())?),
                None => (factor, 1),
            };
            let idx = vars.iter().position(|v| *v == name).ok_or_else(err)?;
            exps[idx] += exp;
        }
        terms.push((coeff, exps));
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn terms() {
        let t = parse_terms("x^3 - 3/8*x^2 + 13/512", &["x"]).unwrap();
        assert_eq!(t, vec![(rat(1, 1), vec![3]), (rat(-3, 8), vec![2]), (rat(13, 512), vec![0])]);
        let t = parse_terms("-alpha*beta^2", &["alpha", "beta"]).unwrap();
        assert_eq!(t, vec![(rat(-1, 1), vec![1, 2])]);
        assert!(parse_terms("x + ", &["x"]).is_err());
        assert!(parse_terms("y", &["x"]).is_err());
        assert!(parse_terms("", &["x"]).is_err());
    }
}
