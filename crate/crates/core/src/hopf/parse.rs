//! Parsing signed combinations of words and tensors of words.
//!
//! Words are written either as monomial runs (`xy^2z`, greedy longest match
//! on letter labels, `1` for the empty word) or in brackets (`[y|y^2]`, each
//! part a letter label). Tensor factors are separated by `⊗` or `@`.

use crate::error::{HopfError, Result};
use crate::linear::{Combo, Field, Scalar};

use super::basis::Letter;
use super::build::WordTensor;

pub type WordCombo = Combo<Vec<usize>>;

fn parse_error(msg: impl Into<String>) -> HopfError {
    HopfError::Parse(msg.into())
}

fn letter_of(part: &str, letters: &[Letter]) -> Result<usize> {
    letters
        .iter()
        .position(|l| l.label == part)
        .ok_or_else(|| parse_error(format!("unknown generator `{part}`")))
}

/// A single word.
pub fn parse_word(s: &str, letters: &[Letter]) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| parse_error(format!("unclosed bracket in `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        return inner.split('|').map(|p| letter_of(p.trim(), letters)).collect();
    }
    let mut word = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let (li, len) = letters
            .iter()
            .enumerate()
            .filter(|(_, l)| rest.starts_with(l.label.as_str()))
            .map(|(i, l)| (i, l.label.len()))
            .max_by_key(|(_, len)| *len)
            .ok_or_else(|| parse_error(format!("cannot read a generator at `{rest}` in `{s}`")))?;
        rest = &rest[len..];
        let mut power = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
            power = digits
                .parse()
                .map_err(|_| parse_error(format!("bad exponent in `{s}`")))?;
            rest = &r[digits.len()..];
        }
        word.extend(std::iter::repeat_n(li, power));
    }
    Ok(word)
}

/// Splits `s` into signed terms at top-level `+`/`-`.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut negative = false;
    let mut current = String::new();
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        let exponent = current.ends_with('^');
        if depth == 0 && (ch == '+' || ch == '-') && !exponent {
            if !current.trim().is_empty() {
                terms.push((negative, current.trim().to_string()));
            } else if !terms.is_empty() || negative {
                return Err(parse_error(format!("dangling sign in `{s}`")));
            }
            negative = ch == '-';
            current.clear();
        } else {
            current.push(ch);
        }
    }
    if depth != 0 {
        return Err(parse_error(format!("unbalanced brackets in `{s}`")));
    }
    if current.trim().is_empty() {
        if !terms.is_empty() || negative {
            return Err(parse_error(format!("dangling sign in `{s}`")));
        }
    } else {
        terms.push((negative, current.trim().to_string()));
    }
    Ok(terms)
}

/// Leading integer coefficient of a term.
fn split_coefficient(term: &str, field: Field) -> Result<(Scalar, String)> {
    let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
    let rest = term[digits.len()..].trim_start_matches(['*', ' ']).to_string();
    if digits.is_empty() {
        return Ok((field.one(), rest));
    }
    let value: i64 = digits
        .parse()
        .map_err(|_| parse_error(format!("coefficient out of range in `{term}`")))?;
    let body = if rest.is_empty() { "1".to_string() } else { rest };
    Ok((field.from_i64(value), body))
}

/// A signed combination of words; `0` is the empty combination.
pub fn parse_combination(s: &str, letters: &[Letter], field: Field) -> Result<WordCombo> {
    let mut out = WordCombo::new();
    if s.trim() == "0" {
        return Ok(out);
    }
    for (negative, term) in split_terms(s)? {
        let (c, body) = split_coefficient(&term, field)?;
        let c = if negative { -c } else { c };
        out.add_term(parse_word(&body, letters)?, c);
    }
    Ok(out)
}

/// A signed combination of tensors of two words.
pub fn parse_tensor(s: &str, letters: &[Letter], field: Field) -> Result<WordTensor> {
    let mut out = WordTensor::new();
    if s.trim() == "0" {
        return Ok(out);
    }
    for (negative, term) in split_terms(s)? {
        let (c, body) = split_coefficient(&term, field)?;
        let c = if negative { -c } else { c };
        let parts: Vec<&str> = body.split(['⊗', '@']).collect();
        if parts.len() != 2 {
            return Err(parse_error(format!("expected two tensor factors in `{term}`")));
        }
        let a = parse_word(parts[0], letters)?;
        let b = parse_word(parts[1], letters)?;
        out.add_term((a, b), c);
    }
    Ok(out)
}

/// Builds letters from `(label, degree)` pairs.
pub fn letters(spec: &[(&str, usize)]) -> Vec<Letter> {
    spec.iter()
        .map(|(l, d)| Letter {
            label: l.to_string(),
            degree: *d,
        })
        .collect()
}
