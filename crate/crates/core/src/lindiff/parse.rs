//! Line-oriented text format for linear systems:
//!
//! ```text
//! m = 2
//! n = 1
//! eq: 1*d[1,0]x1 - 1*d[0,2]x1
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{LinearDiffSystem, LinearEquation};
use crate::diffrank::parse_monomial_at;
use crate::error::{Error, Result};

/// A chunk of an equation between top-level signs.
struct Chunk<'a> {
    negative: bool,
    text: &'a str,
    column: usize,
}

fn split_terms(body: &str, base_col: usize, line: usize) -> Result<Vec<Chunk<'_>>> {
    let mut chunks = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut negative = false;
    for (i, ch) in body.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let text = &body[start..i];
                if text.trim().is_empty() {
                    if !chunks.is_empty() || start != 0 {
                        return Err(Error::parse(
                            line,
                            base_col + i,
                            "expected a term before this sign",
                        ));
                    }
                } else {
                    chunks.push(Chunk {
                        negative,
                        text,
                        column: base_col + start,
                    });
                }
                negative = ch == '-';
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::parse(line, base_col + i, "unbalanced ']'"));
        }
    }
    let text = &body[start..];
    if text.trim().is_empty() {
        return Err(Error::parse(line, base_col + body.len(), "expected a term"));
    }
    chunks.push(Chunk {
        negative,
        text,
        column: base_col + start,
    });
    Ok(chunks)
}

fn parse_natural(text: &str, line: usize, column: usize) -> Result<BigInt> {
    let t = text.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            line,
            column,
            format!("expected a rational coefficient, found {t:?}"),
        ));
    }
    Ok(t.parse().expect("digits parse"))
}

fn parse_rational(text: &str, line: usize, column: usize) -> Result<BigRational> {
    match text.split_once('/') {
        None => Ok(BigRational::from_integer(parse_natural(
            text, line, column,
        )?)),
        Some((p, q)) => {
            let p = parse_natural(p, line, column)?;
            let q = parse_natural(q, line, column + text.find('/').unwrap_or(0) + 1)?;
            if q.is_zero() {
                return Err(Error::parse(line, column, "zero denominator"));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

fn looks_like_monomial(t: &str) -> bool {
    let t = t.trim_start();
    t.starts_with("d[") || t.starts_with('x')
}

fn parse_equation(
    body: &str,
    base_col: usize,
    line: usize,
    m: usize,
    n: usize,
) -> Result<LinearEquation> {
    let mut terms = Vec::new();
    for chunk in split_terms(body, base_col, line)? {
        let lead = chunk.text.len() - chunk.text.trim_start().len();
        let col = chunk.column + lead;
        let (coeff, mono_text, mono_col) = match chunk.text.split_once('*') {
            Some((c, rest)) => {
                let c_trim = c.trim();
                if looks_like_monomial(c_trim) {
                    return Err(Error::parse(
                        line,
                        col,
                        format!("product {:?} is not linear", chunk.text.trim()),
                    ));
                }
                let coeff = parse_rational(c_trim, line, col)?;
                if rest.contains('*') {
                    return Err(Error::parse(
                        line,
                        col + c.len(),
                        format!("product {:?} is not linear", chunk.text.trim()),
                    ));
                }
                (coeff, rest, chunk.column + c.len() + 1)
            }
            None => {
                if !looks_like_monomial(chunk.text) {
                    // a bare number is a constant term
                    if parse_rational(chunk.text.trim(), line, col).is_ok() {
                        return Err(Error::parse(
                            line,
                            col,
                            format!(
                                "inhomogeneous term {:?}; systems must be homogeneous",
                                chunk.text.trim()
                            ),
                        ));
                    }
                }
                (BigRational::one(), chunk.text, chunk.column)
            }
        };
        let mono = parse_monomial_at(mono_text, Some(m), line, mono_col)?;
        if mono.var() > n {
            return Err(Error::parse(
                line,
                mono_col,
                format!("variable x{} out of range 1..={n}", mono.var()),
            ));
        }
        if coeff.is_zero() {
            continue;
        }
        terms.push((if chunk.negative { -coeff } else { coeff }, mono));
    }
    Ok(LinearEquation::new(terms))
}

/// Parses the system format: `m = <nat>` and `n = <nat>` headers followed by
/// one `eq: <term> (+|- <term>)*` per line. A term is `<rational>*d[u1,...,um]x<i>`;
/// `d[0,...,0]` may be written `x<i>` and a coefficient of 1 may be omitted.
pub fn parse_system(text: &str) -> Result<LinearDiffSystem> {
    let mut m: Option<usize> = None;
    let mut n: Option<usize> = None;
    let mut equations = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        if let Some(body) = trimmed.strip_prefix("eq:") {
            let (Some(m), Some(n)) = (m, n) else {
                return Err(Error::parse(
                    line,
                    lead + 1,
                    "equation before the m and n headers",
                ));
            };
            let eq = parse_equation(body, lead + 4, line, m, n)?;
            equations.push(eq);
            continue;
        }
        let Some((key, value)) = trimmed.split_once('=') else {
            return Err(Error::parse(
                line,
                lead + 1,
                format!("unrecognized line {trimmed:?}"),
            ));
        };
        let slot = match key.trim() {
            "m" => &mut m,
            "n" => &mut n,
            other => {
                return Err(Error::parse(
                    line,
                    lead + 1,
                    format!("unknown header {other:?}"),
                ))
            }
        };
        if slot.is_some() {
            return Err(Error::parse(
                line,
                lead + 1,
                format!("duplicate header {:?}", key.trim()),
            ));
        }
        let v: usize = value.trim().parse().map_err(|_| {
            Error::parse(
                line,
                lead + key.len() + 2,
                format!("expected a natural number, found {:?}", value.trim()),
            )
        })?;
        *slot = Some(v);
    }
    let m = m.ok_or_else(|| Error::Invalid("missing header 'm = <nat>'".into()))?;
    let n = n.ok_or_else(|| Error::Invalid("missing header 'n = <nat>'".into()))?;
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    LinearDiffSystem::new(m, n, equations)
}
