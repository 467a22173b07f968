//! Shared canonical text format for the polynomial rings.
//!
//! A polynomial prints as signed terms joined by ` + ` / ` - `. A term is a
//! coefficient, a product of variable powers, or `c*vars`; a unit
//! coefficient is dropped when variables are present and an exponent of one
//! is printed bare (`q`, not `q^1`).

use num_traits::{One, Zero};

use super::Rat;
use crate::error::Error;

pub(crate) fn format_terms<'a, I>(terms: I, vars: &[&str]) -> String
where
    I: IntoIterator<Item = (&'a Rat, Vec<i64>)>,
{
    let mut out = String::new();
    for (coeff, exps) in terms {
        let monomial: Vec<String> = vars
            .iter()
            .zip(&exps)
            .filter(|(_, &e)| e != 0)
            .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        let body = if monomial.is_empty() {
            magnitude.to_string()
        } else if magnitude.is_one() {
            monomial.join("*")
        } else {
            format!("{}*{}", magnitude, monomial.join("*"))
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses the canonical format back into `(coefficient, exponents)` pairs.
/// Repeated monomials are returned separately; callers accumulate.
pub(crate) fn parse_terms(s: &str, vars: &[&str]) -> Result<Vec<(Rat, Vec<i64>)>, Error> {
    let bad = |why: &str| Error::Parse(format!("cannot parse `{s}`: {why}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty input"));
    }

    // Split into signed chunks. A sign directly after `^` belongs to an exponent.
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let mut prev: Option<char> = None;
    for c in compact.chars() {
        if (c == '+' || c == '-') && prev != Some('^') {
            if !current.is_empty() {
                chunks.push((negative, std::mem::take(&mut current)));
                negative = false;
            } else if prev.is_some() && prev != Some('+') && prev != Some('-') {
                return Err(bad("dangling sign"));
            }
            if c == '-' {
                negative = !negative;
            }
        } else {
            current.push(c);
        }
        prev = Some(c);
    }
    if current.is_empty() {
        return Err(bad("trailing sign"));
    }
    chunks.push((negative, current));

    let mut terms = Vec::with_capacity(chunks.len());
    for (negative, chunk) in chunks {
        let mut coeff = Rat::one();
        let mut exps = vec![0i64; vars.len()];
        let mut saw_coeff = false;
        for factor in chunk.split('*') {
            if factor.is_empty() {
                return Err(bad("empty factor"));
            }
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let e: i64 = e.parse().map_err(|_| bad("bad exponent"))?;
                    (b, Some(e))
                }
                None => (factor, None),
            };
            if let Some(i) = vars.iter().position(|v| *v == base) {
                exps[i] += exp.unwrap_or(1);
            } else {
                if saw_coeff || exp.is_some() {
                    return Err(bad("unexpected factor"));
                }
                coeff = base.parse::<Rat>()?;
                saw_coeff = true;
            }
        }
        if negative {
            coeff = -coeff;
        }
        if !coeff.is_zero() {
            terms.push((coeff, exps));
        }
    }
    Ok(terms)
}
