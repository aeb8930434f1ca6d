use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde_json::json;

use secant_core::determinantal::{build_gamma, en_betti, hankel_matrix, minor_ideal, rnc_ideal, standard_ring, verify_cycle};
use secant_core::fixture::genus2_fixture;
use secant_core::groebner::{buchberger, GbOptions, Ideal};
use secant_core::hilbert::hilbert_poly;
use secant_core::io::{parse_header, parse_ideal, parse_matrix, write_ideal, write_matrix};
use secant_core::predictions::{verify_all, CurveParams};
use secant_core::resolve::{betti_table_with, BettiMethod, BettiOptions, BettiTable};
use secant_core::secant::{secant_ideal, SecantSpec};
use secant_core::{AlgebraError, Field, MonomialOrder, PrimeField, Rationals};

use crate::{Cli, Command, FixtureKind, Format, GenKind, Global, IdealAction, MatrixKind, Method, Order};

#[derive(Debug)]
pub enum CliError {
    Io(String, io::Error),
    Algebra(AlgebraError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Algebra(e)
    }
}

impl CliError {
    /// 2 for bad input, 3 for configured limits, 1 for mathematical failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => 2,
            CliError::Algebra(e) if e.is_resource_limit() => 3,
            CliError::Algebra(AlgebraError::Inconclusive(_)) => 3,
            CliError::Algebra(AlgebraError::RetryExhausted { .. } | AlgebraError::DivisionByZero) => 1,
            CliError::Algebra(_) => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Runs `$body` with `$f` bound to the field of characteristic `$ch`.
macro_rules! on_field {
    ($ch:expr, $f:ident => $body:expr) => {
        if $ch == 0 {
            let $f = Rationals;
            $body
        } else {
            let $f = PrimeField::new($ch)?;
            $body
        }
    };
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn file_characteristic(text: &str) -> Result<u64> {
    Ok(parse_header(text)?.0.characteristic)
}

fn emit(g: &Global, text: &str) -> Result<()> {
    match &g.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io("stdout".into(), e)),
    }
}

fn json_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn gb_options(g: &Global) -> GbOptions {
    GbOptions { degree_cap: g.max_deg }
}

fn betti_options(g: &Global, max_i: Option<usize>, max_row: usize, method: Method) -> BettiOptions {
    BettiOptions {
        max_i,
        max_row: Some(max_row),
        method: match method {
            Method::Reduced => BettiMethod::Reduced,
            Method::Direct => BettiMethod::Direct,
        },
        seed: g.seed,
        gb: gb_options(g),
        ..BettiOptions::default()
    }
}

fn render_betti(g: &Global, t: &BettiTable) -> String {
    if !t.is_exact() {
        eprintln!(
            "warning: table computed through column {} and row {}; entries beyond may be missing",
            t.max_i(),
            t.max_row()
        );
    }
    match g.format {
        Format::Text => t.to_text(),
        Format::Json => json_line(&t.summary()),
    }
}

/// Exit status on success: 0, or 1 when a checked statement fails.
pub fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Ideal { action: IdealAction::Gen { kind } } => {
            let text = match kind {
                GenKind::Rnc { d } => on_field!(g.field, f => write_ideal(&rnc_ideal(f, *d)?)),
                GenKind::Hankel { d, rows, size } => on_field!(g.field, f => {
                    let ring = standard_ring(f, *d);
                    write_ideal(&minor_ideal(&hankel_matrix(&ring, *d, *rows)?, size.unwrap_or(*rows))?)
                }),
                GenKind::Genus2 => write_ideal(&genus2_fixture(g.field, g.seed)?),
            };
            emit(g, &text)?;
        }
        Command::Fixture { kind: FixtureKind::Genus2 { p } } => {
            emit(g, &write_ideal(&genus2_fixture(*p, g.seed)?))?;
        }
        Command::Matrix { kind: MatrixKind::Hankel { d, rows } } => {
            let text = on_field!(g.field, f => write_matrix(&hankel_matrix(&standard_ring(f, *d), *d, *rows)?));
            emit(g, &text)?;
        }
        Command::Gb { input, order } => {
            let text = read(input)?;
            let order = match order {
                Order::Grevlex => MonomialOrder::Grevlex,
                Order::Lex => MonomialOrder::Lex,
            };
            let out = on_field!(file_characteristic(&text)?, f => {
                let ideal = parse_ideal(f, &text)?;
                write_ideal(&buchberger(&ideal, order, gb_options(g))?.as_ideal())
            });
            emit(g, &out)?;
        }
        Command::Secant { input, k, maxdeg, certify } => {
            let text = read(input)?;
            let (ideal_text, cert) = on_field!(file_characteristic(&text)?, f => secant(g, f, &text, *k, *maxdeg, *certify)?);
            emit(g, &ideal_text)?;
            if let Some(cert) = cert {
                if g.out.is_some() {
                    print!("{cert}");
                } else {
                    eprint!("{cert}");
                }
            }
        }
        Command::Hilbert { input, upto } => {
            let text = read(input)?;
            let out = on_field!(file_characteristic(&text)?, f => hilbert(g, f, &text, *upto)?);
            emit(g, &out)?;
        }
        Command::Betti { input, max_i, method } => {
            let text = read(input)?;
            let opts = betti_options(g, *max_i, g.max_row, *method);
            let table = on_field!(file_characteristic(&text)?, f => {
                let ideal = parse_ideal(f, &text)?;
                betti_table_with(&buchberger(&ideal, MonomialOrder::Grevlex, opts.gb)?, &opts)?
            });
            emit(g, &render_betti(g, &table))?;
        }
        Command::Cycle { matrix, k } => {
            let text = read(matrix)?;
            let cert = on_field!(file_characteristic(&text)?, f => {
                let a = parse_matrix(f, &text)?;
                let gamma = build_gamma(&a, *k)?;
                verify_cycle(&gamma, &minor_ideal(&a, k + 2)?)?
            });
            emit(g, &json_line(&cert))?;
            return Ok(if cert.certified { 0 } else { 1 });
        }
        Command::En { rows, cols } => {
            let mut entries = Vec::new();
            for i in 0..=cols.saturating_sub(*rows) + 1 {
                let (b, j) = en_betti(*rows, *cols, i)?;
                entries.push((i, j, b));
            }
            let table = BettiTable::from_entries(rows * cols, entries)?;
            emit(g, &render_betti(g, &table))?;
        }
        Command::Verify { input, g: genus, d, k, from_curve } => {
            let text = read(input)?;
            let c = CurveParams::new(*genus, *d, *k)?;
            let report = on_field!(file_characteristic(&text)?, f => {
                let mut ideal = parse_ideal(f, &text)?;
                if *from_curve {
                    let spec = SecantSpec { gb: gb_options(g), ..SecantSpec::new(ideal, *k as usize) };
                    ideal = secant_ideal(&spec, false)?.ideal;
                }
                let gb = buchberger(&ideal, MonomialOrder::Grevlex, gb_options(g))?;
                let max_row = g.max_row.max(2 * *k as usize + 2);
                let table = betti_table_with(&gb, &betti_options(g, None, max_row, Method::Reduced))?;
                verify_all(&c, &table, &hilbert_poly(&gb))
            });
            let out = match g.format {
                Format::Text => report.to_text(),
                Format::Json => json_line(&report),
            };
            emit(g, &out)?;
            return Ok(if report.theorem_rows_match() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn secant<F: Field>(g: &Global, f: F, text: &str, k: usize, maxdeg: Option<u32>, certify: bool) -> Result<(String, Option<String>)> {
    let base = parse_ideal(f, text)?;
    let mut spec = SecantSpec::new(base, k);
    spec.gb = gb_options(g);
    if let Some(m) = maxdeg {
        spec = spec.with_max_degree(m);
    }
    let s = secant_ideal(&spec, certify)?;
    let cert = s.certificate.as_ref().map(|c| {
        json_line(&json!({
            "degree": c.degree,
            "dimension": c.dimension,
            "projdim": c.projdim,
            "matches": c.matches,
        }))
    });
    Ok((write_ideal(&s.ideal), cert))
}

fn hilbert<F: Field>(g: &Global, f: F, text: &str, upto: u32) -> Result<String> {
    let ideal: Ideal<F> = parse_ideal(f, text)?;
    let gb = buchberger(&ideal, MonomialOrder::Grevlex, gb_options(g))?;
    let h = hilbert_poly(&gb);
    let hf: Vec<i128> = (0..=upto as i64).map(|m| h.function(m)).collect();
    let hp: Vec<i128> = (0..=upto as i64).map(|m| h.polynomial(m)).collect();
    Ok(match g.format {
        Format::Json => json_line(&json!({
            "krull_dim": h.krull_dim,
            "projective_dim": h.projective_dim(),
            "degree": h.degree as i64,
            "alphas": h.alphas.iter().map(|&a| a as i64).collect::<Vec<_>>(),
            "stabilization": h.stabilization,
            "hilbert_function": hf.iter().map(|&v| v as i64).collect::<Vec<_>>(),
            "hilbert_polynomial": hp.iter().map(|&v| v as i64).collect::<Vec<_>>(),
            "numerator": h.series.numerator,
        })),
        Format::Text => {
            let join = |v: &[i128]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            let mut s = String::new();
            match h.projective_dim() {
                Some(d) => s.push_str(&format!("dimension: {d}\n")),
                None => s.push_str("dimension: empty\n"),
            }
            s.push_str(&format!("degree: {}\n", h.degree));
            s.push_str(&format!("alphas: {}\n", join(&h.alphas)));
            s.push_str(&format!("HF = HP from m = {}\n", h.stabilization));
            s.push_str(&format!("HF(0..={upto}): {}\n", join(&hf)));
            s.push_str(&format!("HP(0..={upto}): {}\n", join(&hp)));
            if let Some((deg, genus)) = h.surface_section {
                s.push_str(&format!("codim-2 section: degree {deg}, genus {genus}\n"));
            }
            s
        }
    })
}
