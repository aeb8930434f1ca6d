//! Text grammar for polynomials: integer coefficients, variable names and
//! the operators `+ - * ^`, e.g. `3*x0^2*x1 - x2*x3`. Factors must be joined
//! by `*`; whitespace is insignificant.

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::Polynomial;
use crate::poly::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(text: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(chars[start..i].iter().collect()), col));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            other => {
                return Err(AlgebraError::Parse {
                    line,
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

/// Parses one polynomial. `line` is only used in error messages.
pub fn parse_polynomial<F: Field>(ring: &Ring<F>, text: &str, line: usize) -> Result<Polynomial<F>> {
    let toks = lex(text, line)?;
    let field = ring.field();
    let end_col = text.chars().count() + 1;
    let err = |column: usize, message: String| AlgebraError::Parse {
        line,
        column,
        message,
    };
    if toks.is_empty() {
        return Err(err(1, "empty polynomial".into()));
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    let mut first = true;
    while pos < toks.len() {
        let mut negative = false;
        match &toks[pos].0 {
            Tok::Plus | Tok::Minus => {
                negative = toks[pos].0 == Tok::Minus;
                pos += 1;
            }
            _ if !first => {
                return Err(err(toks[pos].1, "expected `+` or `-` between terms".into()));
            }
            _ => {}
        }
        first = false;
        let mut coeff = field.one();
        let mut exps = vec![0u16; ring.nvars()];
        loop {
            let Some((tok, col)) = toks.get(pos) else {
                return Err(err(end_col, "expected a factor".into()));
            };
            match tok {
                Tok::Num(n) => {
                    let v = field
                        .from_decimal(n)
                        .ok_or_else(|| err(*col, format!("bad integer `{n}`")))?;
                    coeff = field.mul(&coeff, &v);
                    pos += 1;
                }
                Tok::Ident(name) => {
                    let v = ring
                        .var_index(name)
                        .ok_or_else(|| err(*col, format!("unknown variable `{name}`")))?;
                    pos += 1;
                    let mut e = 1u32;
                    if let Some((Tok::Caret, _)) = toks.get(pos) {
                        pos += 1;
                        match toks.get(pos) {
                            Some((Tok::Num(n), c)) => {
                                e = n
                                    .parse()
                                    .ok()
                                    .filter(|&e: &u32| e <= u16::MAX as u32)
                                    .ok_or_else(|| err(*c, format!("bad exponent `{n}`")))?;
                                pos += 1;
                            }
                            Some((_, c)) => return Err(err(*c, "expected exponent".into())),
                            None => return Err(err(end_col, "expected exponent".into())),
                        }
                    }
                    let total = exps[v] as u32 + e;
                    if total > u16::MAX as u32 {
                        return Err(err(*col, "exponent overflow".into()));
                    }
                    exps[v] = total as u16;
                }
                _ => return Err(err(*col, "expected a number or variable".into())),
            }
            match toks.get(pos) {
                Some((Tok::Star, _)) => pos += 1,
                Some((Tok::Num(_), c)) | Some((Tok::Ident(_), c)) => {
                    return Err(err(*c, "juxtaposition is not allowed; use `*`".into()))
                }
                Some((Tok::Caret, c)) => return Err(err(*c, "unexpected `^`".into())),
                _ => break,
            }
        }
        if negative {
            coeff = field.neg(&coeff);
        }
        terms.push((Monomial::from_exponents(exps), coeff));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{MonomialOrder, PolyRing};

    fn ring() -> Ring<PrimeField> {
        PolyRing::with_prefix(PrimeField::new(32003).unwrap(), "x", 4, MonomialOrder::Grevlex)
    }

    #[test]
    fn parses_and_prints() {
        let r = ring();
        let p = parse_polynomial(&r, "3*x0^2*x1 - x2*x3", 1).unwrap();
        assert_eq!(p.to_string(), "3*x0^2*x1 - x2*x3");
        let q = parse_polynomial(&r, " - 2 + x0*x0 ", 1).unwrap();
        assert_eq!(q.to_string(), "x0^2 - 2");
    }

    #[test]
    fn reports_columns() {
        let r = ring();
        match parse_polynomial(&r, "x0 x1", 7) {
            Err(AlgebraError::Parse { line, column, .. }) => {
                assert_eq!((line, column), (7, 4));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_polynomial(&r, "x0 + y", 1),
            Err(AlgebraError::Parse { column: 6, .. })
        ));
        assert!(parse_polynomial(&r, "x0 +", 1).is_err());
        assert!(parse_polynomial(&r, "x0^", 1).is_err());
        assert!(parse_polynomial(&r, "", 1).is_err());
    }
}
