//! Text formats for ideals and matrices of linear forms.
//!
//! ```text
//! ring 32003 4
//! x0 x1 x2 x3
//! # one polynomial per line
//! x0*x2 - x1^2
//! ```
//!
//! A matrix file has the same two header lines, then `matrix <rows> <cols>`
//! and one entry per line in row-major order.

use crate::determinantal::LinearFormMatrix;
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::poly::{parse_polynomial, MonomialOrder, PolyRing, Polynomial, Ring};

/// Characteristic and variable names from the first two content lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHeader {
    pub characteristic: u64,
    pub names: Vec<String>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn column_of(line: &str, word: &str) -> usize {
    let byte = word.as_ptr() as usize - line.as_ptr() as usize;
    line[..byte].chars().count() + 1
}

fn parse_usize(line_no: usize, line: &str, word: &str, what: &str) -> Result<usize> {
    word.parse()
        .map_err(|_| parse_err(line_no, column_of(line, word), format!("expected {what}, found `{word}`")))
}

/// Reads the header and returns it with the remaining content lines.
pub fn parse_header(text: &str) -> Result<(RingHeader, Vec<(usize, &str)>)> {
    let mut lines = content_lines(text);
    let (ln, line) = lines.next().ok_or_else(|| parse_err(1, 1, "missing `ring <characteristic> <nvars>` line"))?;
    let words: Vec<&str> = line.split_whitespace().collect();
    if words.len() != 3 || words[0] != "ring" {
        return Err(parse_err(ln, 1, "expected `ring <characteristic> <nvars>`"));
    }
    let characteristic = parse_usize(ln, line, words[1], "a characteristic")? as u64;
    let nvars = parse_usize(ln, line, words[2], "a variable count")?;
    let (ln2, line2) = lines.next().ok_or_else(|| parse_err(ln + 1, 1, "missing variable names"))?;
    let names: Vec<String> = line2.split_whitespace().map(str::to_string).collect();
    if names.len() != nvars {
        return Err(parse_err(ln2, 1, format!("expected {nvars} variable names, found {}", names.len())));
    }
    Ok((RingHeader { characteristic, names }, lines.collect()))
}

fn build_ring<F: Field>(field: F, header: &RingHeader) -> Result<Ring<F>> {
    if field.characteristic() != header.characteristic {
        return Err(AlgebraError::Precondition(format!(
            "file declares characteristic {}, but the field has characteristic {}",
            header.characteristic,
            field.characteristic()
        )));
    }
    PolyRing::new(field, header.names.clone(), MonomialOrder::Grevlex)
}

/// Parses an ideal file over `field`, whose characteristic must match the
/// header.
pub fn parse_ideal<F: Field>(field: F, text: &str) -> Result<Ideal<F>> {
    let (header, lines) = parse_header(text)?;
    let ring = build_ring(field, &header)?;
    let gens = lines
        .into_iter()
        .map(|(ln, l)| parse_polynomial(&ring, l, ln))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ring, gens)
}

fn header_text<F: Field>(ring: &Ring<F>) -> String {
    format!("ring {} {}\n{}\n", ring.field().characteristic(), ring.nvars(), ring.names().join(" "))
}

fn poly_line<F: Field>(p: &Polynomial<F>) -> String {
    let mut s = p.clear_denominators().to_string();
    s.push('\n');
    s
}

/// Writes an ideal; rational generators are scaled to integer coefficients.
pub fn write_ideal<F: Field>(ideal: &Ideal<F>) -> String {
    let mut s = header_text(ideal.ring());
    for g in ideal.generators() {
        s.push_str(&poly_line(g));
    }
    s
}

pub fn parse_matrix<F: Field>(field: F, text: &str) -> Result<LinearFormMatrix<F>> {
    let (header, lines) = parse_header(text)?;
    let ring = build_ring(field, &header)?;
    let mut lines = lines.into_iter();
    let (ln, line) = lines.next().ok_or_else(|| parse_err(3, 1, "missing `matrix <rows> <cols>` line"))?;
    let words: Vec<&str> = line.split_whitespace().collect();
    if words.len() != 3 || words[0] != "matrix" {
        return Err(parse_err(ln, 1, "expected `matrix <rows> <cols>`"));
    }
    let rows = parse_usize(ln, line, words[1], "a row count")?;
    let cols = parse_usize(ln, line, words[2], "a column count")?;
    let entries = lines
        .map(|(ln, l)| parse_polynomial(&ring, l, ln))
        .collect::<Result<Vec<_>>>()?;
    LinearFormMatrix::new(&ring, rows, cols, entries)
}

pub fn write_matrix<F: Field>(a: &LinearFormMatrix<F>) -> String {
    let mut s = header_text(a.ring());
    s.push_str(&format!("matrix {} {}\n", a.rows(), a.cols()));
    for e in a.entries() {
        s.push_str(&poly_line(e));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::determinantal::{hankel_matrix, rnc_ideal, standard_ring};
    use crate::field::{PrimeField, Rationals};

    fn f() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn ideal_round_trip() {
        let i = rnc_ideal(f(), 4).unwrap();
        let text = write_ideal(&i);
        assert!(text.starts_with("ring 32003 5\nx0 x1 x2 x3 x4\n"));
        let back = parse_ideal(f(), &text).unwrap();
        assert_eq!(back.generators(), i.generators());
        assert_eq!(write_ideal(&back), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header comment\nring 0 3\na b c\n\n# gens\na*c - b^2\n  \n";
        let i = parse_ideal(Rationals, text).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].to_string(), "-b^2 + a*c");
    }

    #[test]
    fn errors_carry_positions() {
        let bad = "ring 32003 2\nx y\nx*y + \n";
        match parse_ideal(f(), bad) {
            Err(AlgebraError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match parse_ideal(f(), "ring 32003 two\nx y\n") {
            Err(AlgebraError::Parse { line: 1, column: 12, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ideal(f(), "ring 32003 3\nx y\n"), Err(AlgebraError::Parse { line: 2, .. })));
        assert!(matches!(parse_ideal(f(), ""), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_ideal(f(), "ring 0 1\nx\nx\n"), Err(AlgebraError::Precondition(_))));
    }

    #[test]
    fn matrix_round_trip() {
        let r = standard_ring(f(), 4);
        let h = hankel_matrix(&r, 4, 3).unwrap();
        let text = write_matrix(&h);
        assert!(text.contains("matrix 3 3\n"));
        assert_eq!(parse_matrix(f(), &text).unwrap(), h);
        let short = text.lines().take(8).collect::<Vec<_>>().join("\n");
        assert!(matches!(parse_matrix(f(), &short), Err(AlgebraError::LengthMismatch { .. })));
        assert!(parse_matrix(f(), "ring 32003 2\nx y\nmatrix 1 1\nx*y\n").is_err());
    }
}
