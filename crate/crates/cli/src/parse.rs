//! Textual input: polynomials in `x`, rationals, points and `j`-values.

use std::str::FromStr;

use num_traits::{One, Zero};
use twist53_core::arith::{Integer, Rational, UniPoly};

use crate::error::{CliError, CliResult};

/// Parses `"x^4-3*x^2+2*x+3"` or the leading-first list `"1,0,-3,2,3"`.
pub fn parse_poly(s: &str) -> CliResult<UniPoly<Integer>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(CliError::parse("polynomial", "empty input"));
    }
    let mut coeffs = if s.contains('x') || s.contains('X') { parse_expression(&s)? } else { parse_list(&s)? };
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    Ok(UniPoly::new(coeffs, Integer::zero()))
}

fn parse_integer(s: &str, what: &'static str) -> CliResult<Integer> {
    Integer::from_str(s).map_err(|_| CliError::parse(what, format!("`{s}` is not an integer")))
}

fn parse_list(s: &str) -> CliResult<Vec<Integer>> {
    let mut v = s.split(',').map(|t| parse_integer(t, "coefficient list")).collect::<CliResult<Vec<_>>>()?;
    v.reverse();
    Ok(v)
}

/// Lowest-degree-first coefficients of a sum of terms `c*x^n`.
fn parse_expression(s: &str) -> CliResult<Vec<Integer>> {
    let s = s.replace('X', "x");
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !s[..i].ends_with('^') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut coeffs: Vec<Integer> = Vec::new();
    for term in terms {
        let (sign, body) = match term.as_bytes().first() {
            Some(b'-') => (-Integer::one(), &term[1..]),
            Some(b'+') => (Integer::one(), &term[1..]),
            _ => (Integer::one(), term),
        };
        if body.is_empty() {
            return Err(CliError::parse("polynomial", format!("dangling sign in `{s}`")));
        }
        let (c, deg) = match body.find('x') {
            None => (parse_integer(body, "polynomial")?, 0usize),
            Some(pos) => {
                let c = match body[..pos].trim_end_matches('*') {
                    "" => Integer::one(),
                    t => parse_integer(t, "polynomial")?,
                };
                let rest = &body[pos + 1..];
                let deg = match rest.strip_prefix('^').or(rest.strip_prefix("**")) {
                    Some(e) => e.parse::<usize>().map_err(|_| CliError::parse("polynomial", format!("bad exponent in `{term}`")))?,
                    None if rest.is_empty() => 1,
                    None => return Err(CliError::parse("polynomial", format!("unexpected `{rest}` in `{term}`"))),
                };
                (c, deg)
            }
        };
        if deg > 64 {
            return Err(CliError::parse("polynomial", format!("degree {deg} is out of range")));
        }
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, Integer::zero());
        }
        coeffs[deg] += sign * c;
    }
    Ok(coeffs)
}

/// `"n"` or `"n/d"` with `d ≠ 0`.
pub fn parse_rational(s: &str) -> CliResult<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (parse_integer(n.trim(), "rational")?, parse_integer(d.trim(), "rational")?),
        None => (parse_integer(s, "rational")?, Integer::one()),
    };
    if d.is_zero() {
        return Err(CliError::parse("rational", format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

/// `"num/den"`, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Three comma-separated integers.
pub fn parse_point(s: &str) -> CliResult<[Integer; 3]> {
    let v = s.split(',').map(|t| parse_integer(t.trim(), "point")).collect::<CliResult<Vec<_>>>()?;
    v.try_into().map_err(|_| CliError::parse("point", format!("`{s}` does not have three coordinates")))
}

/// `"a,b"` standing for `a + b√d`.
pub fn parse_quadratic(s: &str) -> CliResult<(Rational, Rational)> {
    let (a, b) = s.split_once(',').ok_or_else(|| CliError::parse("j-value", format!("expected `a,b` in `{s}`")))?;
    Ok((parse_rational(a)?, parse_rational(b)?))
}
