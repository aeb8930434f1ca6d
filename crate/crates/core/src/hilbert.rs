//! Hilbert series, Hilbert functions and Hilbert polynomials of graded
//! quotients `S/I`, computed from the leading-term ideal of a Gröbner basis.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::poly::Monomial;

/// Integer polynomial in `t`, lowest coefficient first, no trailing zeros.
type TPoly = Vec<i64>;

fn trim(mut p: TPoly) -> TPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn tpoly_mul(a: &[i64], b: &[i64]) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn tpoly_add(a: &[i64], b: &[i64]) -> TPoly {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp_lex(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n` of
/// `K[x_0..x_{n-1}] / (gens)` for a monomial ideal, by recursion on a pivot
/// variable: `N(I) = N(I + (x)) + t N(I : x)`.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    numerator_rec(minimalize(gens.to_vec()), nvars)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> TPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.degree() == 0) {
        return Vec::new();
    }
    // Base case: pairwise coprime generators.
    let mut uses = vec![0usize; nvars];
    for g in &gens {
        for (v, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                uses[v] += 1;
            }
        }
    }
    if uses.iter().all(|&u| u <= 1) {
        let mut acc: TPoly = vec![1];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] = -1;
            acc = tpoly_mul(&acc, &f);
        }
        return acc;
    }
    let pivot = (0..nvars).max_by_key(|&v| (uses[v], std::cmp::Reverse(v))).unwrap();
    let x = Monomial::variable(nvars, pivot);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).cloned().collect();
    plus.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exponent(pivot) > 0 {
                x.quotient_of(g)
            } else {
                g.clone()
            }
        })
        .collect();
    let a = numerator_rec(minimalize(plus), nvars);
    let b = numerator_rec(minimalize(colon), nvars);
    let tb: TPoly = if b.is_empty() {
        Vec::new()
    } else {
        std::iter::once(0).chain(b).collect()
    };
    tpoly_add(&a, &tb)
}

/// `C(x, r)` for any integer `x` (the polynomial extension).
pub fn binom_poly(x: i64, r: u32) -> i128 {
    let mut num: i128 = 1;
    for k in 0..r as i128 {
        num *= x as i128 - k;
    }
    let mut den: i128 = 1;
    for k in 1..=r as i128 {
        den *= k;
    }
    num / den
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (n as i128 - i) / (i + 1);
    }
    acc
}

/// Hilbert series `numerator / (1-t)^nvars` of a graded quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub nvars: usize,
    pub numerator: Vec<i64>,
}

impl HilbertSeries {
    pub fn of<F: Field>(gb: &GroebnerBasis<F>) -> Self {
        assert!(gb.weights().is_none(), "Hilbert series needs the standard grading");
        assert!(gb.truncated_at().is_none(), "Hilbert series needs a complete basis");
        let lead: Vec<Monomial> = gb.leading_monomials().cloned().collect();
        HilbertSeries {
            nvars: gb.ring().nvars(),
            numerator: monomial_numerator(&lead, gb.ring().nvars()),
        }
    }

    /// `Q(t)` with `numerator = Q(t) (1-t)^(nvars - dim)` and `Q(1) != 0`,
    /// together with the Krull dimension `dim`. `None` for the unit ideal.
    pub fn reduced(&self) -> Option<(Vec<i64>, usize)> {
        if self.numerator.is_empty() {
            return None;
        }
        let mut q = self.numerator.clone();
        let mut codim = 0;
        while q.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t)
            let mut out = vec![0i64; q.len() - 1];
            let mut acc = 0i64;
            for i in 0..q.len() - 1 {
                acc += q[i];
                out[i] = acc;
            }
            q = trim(out);
            codim += 1;
        }
        Some((q, self.nvars - codim))
    }

    pub fn krull_dim(&self) -> Option<usize> {
        self.reduced().map(|(_, d)| d)
    }

    /// Coefficient of `t^m`.
    pub fn value(&self, m: i64) -> i128 {
        if m < 0 {
            return 0;
        }
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(k, &c)| c as i128 * binomial(m - k as i64 + n - 1, n - 1))
            .sum()
    }

    /// Value of the Hilbert polynomial at `m`.
    pub fn polynomial_value(&self, m: i64) -> i128 {
        match self.reduced() {
            None => 0,
            Some((_, 0)) => 0,
            Some((q, dim)) => q
                .iter()
                .enumerate()
                .map(|(k, &c)| c as i128 * binom_poly(m - k as i64 + dim as i64 - 1, dim as u32 - 1))
                .sum(),
        }
    }
}

/// Hilbert function values and the Hilbert polynomial of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `HF(S/I, m)` for `m = 0..=` the last degree examined.
    pub values: BTreeMap<u32, i128>,
    /// Coefficients `alpha_i` of the Hilbert polynomial in the basis
    /// `C(m+i-1, i)`, `i = 0..dim`.
    pub alphas: Vec<i128>,
    /// First degree from which the Hilbert function equals the polynomial.
    pub stabilization: u32,
    pub krull_dim: Option<usize>,
    /// Multiplicity (`alpha_{dim-1}`, or the length when `dim = 0`).
    pub degree: i128,
    /// `(D, G)` for quotients of Krull dimension four: `alpha_3 = D`,
    /// `alpha_2 = 1 - G`.
    pub surface_section: Option<(i128, i128)>,
    pub series: HilbertSeries,
}

impl HilbertData {
    pub fn from_series(series: HilbertSeries) -> Self {
        let reduced = series.reduced();
        let krull_dim = reduced.as_ref().map(|r| r.1);
        let qdeg = reduced.as_ref().map(|r| r.0.len() as i64 - 1).unwrap_or(0);
        let dim = krull_dim.unwrap_or(0);

        let mut alphas = Vec::new();
        if dim > 0 {
            // alpha_j is the j-th backward difference of P at 0, since
            // the backward difference of C(m+i-1, i) is C(m+i-2, i-1).
            let mut vals: Vec<i128> = (0..dim as i64).map(|m| series.polynomial_value(-m)).collect();
            for _ in 0..dim {
                alphas.push(vals[0]);
                vals = vals.windows(2).map(|w| w[0] - w[1]).collect();
            }
        }
        let last = (qdeg.max(0) as u32 + 2).max(6);
        let mut values = BTreeMap::new();
        let mut stabilization = 0;
        for m in 0..=last {
            let hf = series.value(m as i64);
            values.insert(m, hf);
            if hf != series.polynomial_value(m as i64) {
                stabilization = m + 1;
            }
        }
        let degree = match (&reduced, dim) {
            (None, _) => 0,
            (Some(_), 0) => series.numerator.iter().map(|&c| c as i128).sum(),
            _ => *alphas.last().unwrap(),
        };
        let surface_section = if dim == 4 {
            Some((alphas[3], 1 - alphas[2]))
        } else {
            None
        };
        HilbertData {
            values,
            alphas,
            stabilization,
            krull_dim,
            degree,
            surface_section,
            series,
        }
    }

    pub fn polynomial(&self, m: i64) -> i128 {
        self.alphas
            .iter()
            .enumerate()
            .map(|(i, a)| a * binom_poly(m + i as i64 - 1, i as u32))
            .sum()
    }

    pub fn function(&self, m: i64) -> i128 {
        self.series.value(m)
    }

    /// Projective dimension of the variety, `krull_dim - 1`.
    pub fn projective_dim(&self) -> Option<i64> {
        self.krull_dim.map(|d| d as i64 - 1)
    }
}

/// `dim (S/I)_m`, the number of standard monomials of degree `m`.
pub fn hilbert_function<F: Field>(gb: &GroebnerBasis<F>, m: u32) -> i128 {
    HilbertSeries::of(gb).value(m as i64)
}

pub fn hilbert_poly<F: Field>(gb: &GroebnerBasis<F>) -> HilbertData {
    HilbertData::from_series(HilbertSeries::of(gb))
}

/// Degree from which Hilbert function and polynomial are guaranteed to
/// agree, from the bound `reg + pd - nvars + 1` (at least one).
pub fn stabilization_bound(reg: i64, projdim: i64, nvars: i64) -> i64 {
    (reg + projdim - nvars + 1).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::groebner::{buchberger, standard_monomials, GbOptions, Ideal};
    use crate::poly::{parse_polynomial, MonomialOrder, PolyRing};

    fn gb(n: usize, gens: &[&str]) -> GroebnerBasis<PrimeField> {
        let r = PolyRing::with_prefix(PrimeField::new(32003).unwrap(), "x", n, MonomialOrder::Grevlex);
        let gens = gens.iter().map(|g| parse_polynomial(&r, g, 1).unwrap()).collect();
        buchberger(&Ideal::new(&r, gens).unwrap(), MonomialOrder::Grevlex, GbOptions::default()).unwrap()
    }

    #[test]
    fn zero_ideal() {
        let g = gb(3, &[]);
        assert_eq!(hilbert_function(&g, 2), 6);
        let h = hilbert_poly(&g);
        assert_eq!(h.krull_dim, Some(3));
        assert_eq!(h.degree, 1);
    }

    #[test]
    fn twisted_cubic() {
        let g = gb(4, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        assert_eq!(hilbert_function(&g, 5), 16);
        let h = hilbert_poly(&g);
        assert_eq!(h.alphas, vec![1, 3]); // 3m + 1
        assert_eq!(h.stabilization, 0);
        for m in 0..10 {
            assert_eq!(h.polynomial(m), 3 * m as i128 + 1);
            assert_eq!(h.function(m), standard_monomials(&g, m as u32).len() as i128);
        }
    }

    #[test]
    fn cubic_hypersurface_section() {
        let g = gb(5, &["x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3"]);
        let h = hilbert_poly(&g);
        assert_eq!(h.krull_dim, Some(4));
        // C(m+4,4) - C(m+1,4) = 1 + m + 3 C(m+2,3); its curve section is a
        // plane cubic of genus 1
        assert_eq!(h.alphas, vec![1, 1, 0, 3]);
        assert_eq!(h.surface_section, Some((3, 1)));
        for m in 0..8 {
            assert_eq!(h.polynomial(m), binomial(m + 4, 4) - binomial(m + 1, 4));
        }
    }

    #[test]
    fn series_matches_enumeration() {
        let g = gb(4, &["x0*x1", "x0*x2", "x1^3 - x2*x3^2"]);
        let s = HilbertSeries::of(&g);
        for m in 0..9 {
            assert_eq!(s.value(m), standard_monomials(&g, m as u32).len() as i128);
        }
    }

    #[test]
    fn points_have_constant_polynomial() {
        // the three coordinate points of P^2
        let g = gb(3, &["x0*x1", "x0*x2", "x1*x2"]);
        let h = hilbert_poly(&g);
        assert_eq!(h.krull_dim, Some(1));
        assert_eq!(h.degree, 3);
        assert_eq!(h.stabilization, 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binom_poly(-1, 2), 1);
        assert_eq!(binom_poly(5, 0), 1);
    }
}
