//! Parsers for the compact monomial / formal-sum strings used in documents:
//! `"T1^2*T3"`, `"T1*T4 = T2*T3 + 1"`, `"S^-1"` in gluing maps.

use bluepoint_core::blueprint::{PolyRelation, PolySum};
use bluepoint_core::ringpres::IntPolynomial;
use bluepoint_core::Monomial;

use crate::doc::DocError;

fn err(context: &str, msg: impl std::fmt::Display) -> DocError {
    DocError::new(format!("{context}: {msg}"))
}

fn gen_index(name: &str, names: &[String], context: &str) -> Result<usize, DocError> {
    names
        .iter()
        .position(|g| g == name)
        .ok_or_else(|| err(context, format!("unknown generator `{name}`")))
}

/// One `name` or `name^exponent` factor, resolved against the generator
/// list. A negative exponent refers to the formal inverse `name^-1`, which
/// must itself be a generator (as it is in a localized chart).
fn apply_factor(
    factor: &str,
    names: &[String],
    exps: &mut [u32],
    context: &str,
) -> Result<(), DocError> {
    let factor = factor.trim();
    if factor.is_empty() {
        return Err(err(context, "empty factor"));
    }
    // A generator may itself be named like `T^-1`; exact matches win.
    if let Ok(i) = gen_index(factor, names, context) {
        exps[i] += 1;
        return Ok(());
    }
    let Some((head, tail)) = factor.rsplit_once('^') else {
        return Err(err(context, format!("unknown generator `{factor}`")));
    };
    let e: i64 = tail
        .trim()
        .parse()
        .map_err(|_| err(context, format!("bad exponent `{tail}` in `{factor}`")))?;
    let head = head.trim();
    if e >= 0 {
        let i = gen_index(head, names, context)?;
        exps[i] += e as u32;
    } else {
        let inv = format!("{head}^-1");
        let i = gen_index(&inv, names, context).map_err(|_| {
            err(
                context,
                format!("`{factor}` needs the inverse generator `{inv}`, which does not exist here"),
            )
        })?;
        exps[i] += (-e) as u32;
    }
    Ok(())
}

/// `"0"`, `"1"`, or a `*`-separated product of factors.
pub fn parse_monomial(s: &str, names: &[String], context: &str) -> Result<Monomial, DocError> {
    let s = s.trim();
    if s == "0" {
        return Ok(Monomial::Zero);
    }
    let mut exps = vec![0u32; names.len()];
    if s == "1" {
        return Ok(Monomial::Term(exps));
    }
    if s.is_empty() {
        return Err(err(context, "empty monomial"));
    }
    for factor in s.split('*') {
        if factor.trim() == "1" {
            continue;
        }
        apply_factor(factor, names, &mut exps, context)?;
    }
    Ok(Monomial::Term(exps))
}

/// Split a sum into signed terms at top-level `+` / `-`. A `-` immediately
/// following `^` belongs to an exponent, not to the term structure.
fn signed_terms(s: &str, context: &str) -> Result<Vec<(i64, String)>, DocError> {
    let mut out: Vec<(i64, String)> = Vec::new();
    let mut sign: i64 = 1;
    let mut cur = String::new();
    let mut prev_significant: Option<char> = None;
    for ch in s.chars() {
        let splits = (ch == '+' || ch == '-') && prev_significant != Some('^');
        if splits {
            if cur.trim().is_empty() {
                if ch == '-' && prev_significant.is_none() {
                    sign = -sign; // leading sign
                } else if ch == '-' {
                    return Err(err(context, "dangling `-`"));
                } else if prev_significant.is_some() {
                    return Err(err(context, "dangling `+`"));
                }
            } else {
                out.push((sign, std::mem::take(&mut cur)));
                sign = if ch == '-' { -1 } else { 1 };
                prev_significant = None;
                continue;
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev_significant = Some(ch);
        }
    }
    if cur.trim().is_empty() {
        return Err(err(context, "empty term"));
    }
    out.push((sign, cur));
    Ok(out)
}

/// One term of a formal sum: an optional integer coefficient times a
/// monomial, e.g. `"2*T^2"`, `"T1*T4"`, `"3"`.
fn parse_term(
    sign: i64,
    s: &str,
    names: &[String],
    context: &str,
) -> Result<(i64, Monomial), DocError> {
    let mut coefficient: i64 = sign;
    let mut exps = vec![0u32; names.len()];
    let mut saw_factor = false;
    for factor in s.split('*') {
        let f = factor.trim();
        if f.is_empty() {
            return Err(err(context, "empty factor"));
        }
        if let Ok(c) = f.parse::<i64>() {
            coefficient = coefficient
                .checked_mul(c)
                .ok_or_else(|| err(context, "coefficient overflow"))?;
            saw_factor = true;
            continue;
        }
        apply_factor(f, names, &mut exps, context)?;
        saw_factor = true;
    }
    if !saw_factor {
        return Err(err(context, "empty term"));
    }
    Ok((coefficient, Monomial::Term(exps)))
}

/// A formal sum like `"T2*T3 + 1"` or `"2*T"`; `"0"` is the empty sum.
pub fn parse_polysum(s: &str, names: &[String], context: &str) -> Result<PolySum, DocError> {
    if s.trim() == "0" {
        return Ok(PolySum::zero());
    }
    let mut pairs = Vec::new();
    for (sign, term) in signed_terms(s, context)? {
        pairs.push(parse_term(sign, &term, names, context)?);
    }
    Ok(PolySum::from_pairs(&pairs))
}

fn split_equation<'a>(s: &'a str, context: &str) -> Result<(&'a str, &'a str), DocError> {
    let mut it = s.splitn(2, '=');
    let lhs = it.next().unwrap_or("");
    let rhs = it.next().ok_or_else(|| err(context, "expected `lhs = rhs`"))?;
    if rhs.contains('=') {
        return Err(err(context, "more than one `=`"));
    }
    Ok((lhs, rhs))
}

/// `"S*T = 0"` → a pair of monomials.
pub fn parse_monoid_relation(
    s: &str,
    names: &[String],
    context: &str,
) -> Result<(Monomial, Monomial), DocError> {
    let (lhs, rhs) = split_equation(s, context)?;
    Ok((parse_monomial(lhs, names, context)?, parse_monomial(rhs, names, context)?))
}

/// `"T1*T4 = T2*T3 + 1"` → a relation between formal sums.
pub fn parse_poly_relation(
    s: &str,
    names: &[String],
    context: &str,
) -> Result<PolyRelation, DocError> {
    let (lhs, rhs) = split_equation(s, context)?;
    Ok(PolyRelation {
        lhs: parse_polysum(lhs, names, context)?,
        rhs: parse_polysum(rhs, names, context)?,
    })
}

/// A comparison-ring identity over the integers, stored as `lhs - rhs`.
pub fn parse_ring_relation(
    s: &str,
    names: &[String],
    context: &str,
) -> Result<IntPolynomial, DocError> {
    let (lhs, rhs) = split_equation(s, context)?;
    let l = parse_polysum(lhs, names, context)?;
    let r = parse_polysum(rhs, names, context)?;
    let mut terms: std::collections::BTreeMap<Vec<u32>, i64> = std::collections::BTreeMap::new();
    for (sum, sgn) in [(&l, 1i64), (&r, -1i64)] {
        for t in &sum.terms {
            let e = t
                .monomial
                .exponents()
                .expect("formal sums never contain the absorbed monomial")
                .to_vec();
            let entry = terms.entry(e).or_insert(0);
            *entry += sgn * t.coefficient;
            if *entry == 0 {
                terms.remove(
                    &t.monomial.exponents().expect("checked above").to_vec(),
                );
            }
        }
    }
    Ok(IntPolynomial { terms })
}
