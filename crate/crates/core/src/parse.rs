//! Text grammars: `S=<4,5,6>`, `I=(4,11)` and `x = 3*t^4 + t^5`.
//!
//! Whitespace is ignored everywhere. The `S=`, `I=` and `x=` prefixes are
//! optional, and so is any other single-letter label.

use crate::error::{Error, Result};
use crate::field::Field;

fn strip(input: &str) -> String {
    input.chars().filter(|c| !c.is_whitespace()).collect()
}

fn strip_label(s: &str) -> &str {
    match s.split_once('=') {
        Some((label, rest)) if !label.is_empty() && label.chars().all(char::is_alphanumeric) => {
            rest
        }
        _ => s,
    }
}

fn int_list(body: &str) -> Result<Vec<i64>> {
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        })
        .collect()
}

/// Parses `S=<a1,...,an>`; the angle brackets may be omitted.
pub fn parse_semigroup(input: &str) -> Result<Vec<i64>> {
    let s = strip(input);
    let body = strip_label(&s);
    let body = match (body.strip_prefix('<'), body.strip_suffix('>')) {
        (Some(_), Some(_)) => &body[1..body.len() - 1],
        (None, None) => body,
        _ => return Err(Error::Parse(format!("unbalanced brackets in {input:?}"))),
    };
    let gens = int_list(body)?;
    if gens.is_empty() {
        return Err(Error::Parse(
            "semigroup needs at least one generator".into(),
        ));
    }
    Ok(gens)
}

/// Parses `I=(v1,...,vk)`; values are t-exponents and may be negative.
pub fn parse_ideal(input: &str) -> Result<Vec<i64>> {
    let s = strip(input);
    let body = strip_label(&s);
    let body = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (v1,...,vk), got {input:?}")))?;
    let vals = int_list(body)?;
    if vals.is_empty() {
        return Err(Error::Parse("ideal needs at least one generator".into()));
    }
    Ok(vals)
}

/// Parses an element literal into `(value, coefficient)` terms.
///
/// Terms look like `3*t^4`, `-t^5`, `1/2*t^9`, `t`, or a bare scalar
/// (value 0). Repeated values are summed.
pub fn parse_element<F: Field>(input: &str) -> Result<Vec<(i64, F)>> {
    let s = strip(input);
    let body = strip_label(&s);
    if body.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    let mut terms: Vec<(i64, F)> = Vec::new();
    let mut start = 0;
    let bytes = body.as_bytes();
    let mut pieces = Vec::new();
    for i in 1..=bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
            pieces.push(&body[start..i]);
            start = i;
        }
    }
    for piece in pieces {
        let (sign, rest) = match piece.as_bytes()[0] {
            b'+' => (1, &piece[1..]),
            b'-' => (-1, &piece[1..]),
            _ => (1, piece),
        };
        let (coef_txt, mono) = match rest.find('t') {
            Some(pos) => (rest[..pos].trim_end_matches('*'), &rest[pos..]),
            None => (rest, ""),
        };
        let coef = if coef_txt.is_empty() {
            F::from_i64(sign)
        } else {
            let (n, d) = match coef_txt.split_once('/') {
                Some((n, d)) => (n, d),
                None => (coef_txt, "1"),
            };
            let n: i64 = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {coef_txt:?}")))?;
            let d: i64 = d
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {coef_txt:?}")))?;
            F::from_ratio(sign * n, d).ok_or_else(|| {
                Error::Parse(format!(
                    "coefficient {coef_txt:?} has zero denominator in {}",
                    F::label()
                ))
            })?
        };
        let value = if mono.is_empty() {
            0
        } else if mono == "t" {
            1
        } else {
            mono.strip_prefix("t^")
                .and_then(|e| e.parse::<i64>().ok())
                .ok_or_else(|| Error::Parse(format!("bad monomial {mono:?}")))?
        };
        match terms.iter_mut().find(|(v, _)| *v == value) {
            Some((_, c)) => *c = c.clone() + coef,
            None => terms.push((value, coef)),
        }
    }
    terms.retain(|(_, c)| !c.is_zero());
    terms.sort_by_key(|(v, _)| *v);
    Ok(terms)
}
