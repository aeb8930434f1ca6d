//! Gröbner bases of homogeneous ideals: Buchberger's algorithm, normal
//! forms, membership, elimination and standard monomials.

mod buchberger;
mod ideal;

pub use buchberger::{buchberger, truncated_basis, GbOptions, GroebnerBasis, DEFAULT_DEGREE_CAP};
pub use ideal::Ideal;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, PolyRing, Polynomial};

/// Remainder of `f` on division by `gb`: no monomial of the result is
/// divisible by a leading monomial of `gb`, and it is zero iff `f` lies in
/// the ideal.
pub fn normal_form<F: Field>(f: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Result<Polynomial<F>> {
    let f = f.to_ring(gb.ring())?;
    let lead: Vec<(Monomial, u64)> = gb
        .leading_monomials()
        .map(|m| (m.clone(), m.support_mask()))
        .collect();
    Ok(buchberger::reduce_full(&f, gb.elements(), &lead))
}

pub fn contains<F: Field>(gb: &GroebnerBasis<F>, f: &Polynomial<F>) -> Result<bool> {
    Ok(normal_form(f, gb)?.is_zero())
}

/// Whether every generator of `ideal` lies in the ideal of `gb`.
pub fn contains_ideal<F: Field>(gb: &GroebnerBasis<F>, ideal: &Ideal<F>) -> Result<bool> {
    for g in ideal.generators() {
        if !contains(gb, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of ideals by mutual membership of generators.
pub fn ideals_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>, opts: GbOptions) -> Result<bool> {
    let ga = buchberger(a, MonomialOrder::Grevlex, opts)?;
    let gb = buchberger(b, MonomialOrder::Grevlex, opts)?;
    Ok(contains_ideal(&ga, b)? && contains_ideal(&gb, a)?)
}

/// Generators of `I ∩ K[keep]`, returned in the original ring. Uses a block
/// order ranking the eliminated variables first.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, keep: &[usize], opts: GbOptions) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if let Some(&bad) = keep.iter().find(|&&v| v >= n) {
        return Err(AlgebraError::Precondition(format!("variable index {bad} out of range")));
    }
    let mut is_kept = vec![false; n];
    for &v in keep {
        is_kept[v] = true;
    }
    // New position of each old variable: eliminated ones first.
    let elim: Vec<usize> = (0..n).filter(|&v| !is_kept[v]).collect();
    let kept: Vec<usize> = (0..n).filter(|&v| is_kept[v]).collect();
    let perm: Vec<usize> = elim.iter().chain(kept.iter()).copied().collect();
    let mut to_new = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        to_new[old] = new;
    }
    let names: Vec<String> = perm.iter().map(|&v| ring.names()[v].clone()).collect();
    let block = MonomialOrder::Elimination(elim.len());
    let ering = PolyRing::new(ring.field().clone(), names, block)?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.rename_into(&ering, &to_new))
        .collect::<Result<Vec<_>>>()?;
    let eideal = match ideal.weights() {
        None => Ideal::new(&ering, gens)?,
        Some(w) => Ideal::with_weights(&ering, gens, perm.iter().map(|&v| w[v]).collect())?,
    };
    let gb = buchberger(&eideal, block, opts)?;
    let survivors: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.exponents()[..elim.len()].iter().all(|&e| e == 0))
        })
        .map(|g| g.rename_into(ring, &perm))
        .collect::<Result<Vec<_>>>()?;
    match ideal.weights() {
        None => Ideal::new(ring, survivors),
        Some(w) => Ideal::with_weights(ring, survivors, w.to_vec()),
    }
}

/// Degree-`m` monomials outside the leading-term ideal, in decreasing
/// order. Their number is the Hilbert function of the quotient at `m`.
pub fn standard_monomials<F: Field>(gb: &GroebnerBasis<F>, m: u32) -> Vec<Monomial> {
    let order = gb.order();
    let mut out: Vec<Monomial> = monomials_of_degree(gb.ring().nvars(), m)
        .into_iter()
        .filter(|mono| gb.is_standard(mono))
        .collect();
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

#[cfg(test)]
mod tests;
