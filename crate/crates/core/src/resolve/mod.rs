//! Graded Betti tables of quotients `S/I` via Koszul homology.
//!
//! The default route first cuts `S/I` down by a regular sequence of random
//! linear forms. A form `l` is a nonzerodivisor exactly when the numerator of
//! the Hilbert series is unchanged by passing to `S/(I + l)` (the difference
//! is `t` times the series of `0 :_A l`), and Betti numbers survive such a
//! cut. Koszul homology is then computed in fewer variables; when the cut
//! reaches an Artinian ring every row is covered and the table is exact.

mod koszul;
mod table;

pub use koszul::{koszul_block, subset_rank, subsets};
pub use table::{BettiSummary, BettiTable};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{buchberger, GbOptions, GroebnerBasis, Ideal};
use crate::hilbert::HilbertSeries;
use crate::linalg::DEFAULT_ENTRY_LIMIT;
use crate::poly::{MonomialOrder, PolyRing, Polynomial};
use crate::quotient::GradedQuotient;

/// Row bound used when the table cannot be closed off exactly.
pub const DEFAULT_MAX_ROW: usize = 5;

/// Failed nonzerodivisor tests tolerated before the cut stops.
const CUT_ATTEMPTS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiMethod {
    /// Koszul homology of `S/I` itself.
    Direct,
    /// Koszul homology after cutting by a regular sequence of linear forms.
    Reduced,
}

#[derive(Clone, Debug)]
pub struct BettiOptions {
    pub max_i: Option<usize>,
    pub max_row: Option<usize>,
    pub method: BettiMethod,
    pub seed: u64,
    pub entry_limit: usize,
    pub gb: GbOptions,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            max_i: None,
            max_row: None,
            method: BettiMethod::Reduced,
            seed: 0,
            entry_limit: DEFAULT_ENTRY_LIMIT,
            gb: GbOptions::default(),
        }
    }
}

/// Result of cutting `S/I` by a regular sequence of linear forms.
#[derive(Clone, Debug)]
pub struct RegularCut<F: Field> {
    pub gb: GroebnerBasis<F>,
    /// Number of linear forms in the regular sequence.
    pub length: usize,
    /// Whether the cut quotient is Artinian.
    pub artinian: bool,
}

/// Cuts by random linear forms `x_last + sum c_j x_j` while each one is a
/// nonzerodivisor. The substitution `x_last -> -sum c_j x_j` realizes the
/// quotient in one variable fewer.
pub fn regular_cut<F: Field>(gb: &GroebnerBasis<F>, seed: u64, opts: GbOptions) -> Result<RegularCut<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = HilbertSeries::of(gb).numerator;
    let mut cur = gb.clone();
    let mut length = 0;
    let mut failures = 0;
    loop {
        let series = HilbertSeries::of(&cur);
        if series.krull_dim().map_or(true, |d| d == 0) || failures >= CUT_ATTEMPTS {
            let artinian = series.krull_dim() == Some(0) || series.numerator.is_empty();
            return Ok(RegularCut { gb: cur, length, artinian });
        }
        let ring = cur.ring();
        let n = ring.nvars();
        let field = ring.field();
        let small = PolyRing::new(field.clone(), ring.names()[..n - 1].to_vec(), MonomialOrder::Grevlex)?;
        let mut images: Vec<Polynomial<F>> = (0..n - 1).map(|j| Polynomial::var(&small, j)).collect();
        let last = Polynomial::from_terms(
            &small,
            (0..n - 1).map(|j| {
                let c = field.from_random_bits(rng.gen());
                (crate::poly::Monomial::variable(n - 1, j), field.neg(&c))
            }),
        );
        images.push(last);
        let gens = cur
            .elements()
            .iter()
            .map(|g| g.substitute(&images))
            .collect::<Result<Vec<_>>>()?;
        let cut = buchberger(&Ideal::new(&small, gens)?, MonomialOrder::Grevlex, opts)?;
        if HilbertSeries::of(&cut).numerator == target {
            cur = cut;
            length += 1;
        } else {
            failures += 1;
        }
    }
}

/// Graded Betti table of `S/I` for `i <= max_i`, `j - i <= max_row`.
pub fn betti_table<F: Field>(gb: &GroebnerBasis<F>, max_i: usize, max_row: usize) -> Result<BettiTable> {
    betti_table_with(
        gb,
        &BettiOptions {
            max_i: Some(max_i),
            max_row: Some(max_row),
            ..BettiOptions::default()
        },
    )
}

pub fn betti_table_with<F: Field>(gb: &GroebnerBasis<F>, opts: &BettiOptions) -> Result<BettiTable> {
    if gb.weights().is_some() {
        return Err(AlgebraError::Precondition("Betti tables need the standard grading".into()));
    }
    let nvars = gb.ring().nvars();
    let (work, natural_row) = match opts.method {
        BettiMethod::Direct => (gb.clone(), None),
        BettiMethod::Reduced => {
            let cut = regular_cut(gb, opts.seed, opts.gb)?;
            // Artinian: rows end at the socle degree.
            let top = if cut.artinian {
                let s = HilbertSeries::of(&cut.gb);
                Some(s.numerator.len().saturating_sub(1))
            } else {
                None
            };
            (cut.gb, top)
        }
    };
    let work_vars = work.ring().nvars();
    let max_i = opts.max_i.unwrap_or(nvars);
    let max_row = match (opts.max_row, natural_row) {
        (Some(r), Some(top)) => r.min(top),
        (Some(r), None) => r,
        (None, Some(top)) => top,
        (None, None) => DEFAULT_MAX_ROW,
    };
    let exact = natural_row.is_some_and(|top| max_row >= top) && max_i >= work_vars;
    let q = GradedQuotient::new(&work, max_row as u32 + 1)?;
    let entries = koszul::koszul_betti(&q, max_i, max_row as u32, opts.entry_limit)?;
    Ok(BettiTable::new(nvars, entries, max_i, max_row, exact))
}

/// Whether `HF(S/I, m)` agrees with the alternating sum over the table for
/// `m = 0..=max_m`.
pub fn alternating_sum_holds(table: &BettiTable, series: &HilbertSeries, max_m: i64) -> bool {
    (0..=max_m).all(|m| table.hilbert_function(m) == series.value(m))
}

#[cfg(test)]
mod tests;
