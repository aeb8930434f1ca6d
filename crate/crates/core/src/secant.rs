//! Graded pieces of secant ideals by the join construction.
//!
//! A form `F` of degree `m` vanishes on the `k`-th secant variety of `X`
//! exactly when `F(y^0 + ... + y^k)` lies in `I(y^0) + ... + I(y^k)`. The
//! quotient by that ideal is the tensor power `A^{(x)(k+1)}` of `A = S/I`, so
//! the image of each monomial `x^a` is computed by splitting `a` into
//! `k+1` parts (with multinomial weights) and tensoring normal forms. The
//! kernel of the resulting linear map is `(I_{Sigma_k})_m`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{buchberger, eliminate, normal_form, GbOptions, GroebnerBasis, Ideal};
use crate::hilbert::{hilbert_poly, HilbertData};
use crate::linalg::{check_shape, kernel, normalize, rank, SparseVec, DEFAULT_ENTRY_LIMIT};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, PolyRing, Polynomial, Ring};
use crate::predictions::{deg_secant, CurveParams};
use crate::quotient::GradedQuotient;
use crate::resolve::{betti_table_with, BettiOptions, BettiTable};

/// Base ideal, secant index and truncation degree.
#[derive(Clone, Debug)]
pub struct SecantSpec<F: Field> {
    pub base: Ideal<F>,
    pub k: usize,
    pub m_max: u32,
    pub gb: GbOptions,
    pub entry_limit: usize,
}

impl<F: Field> SecantSpec<F> {
    /// Truncation defaults to `k + 3`.
    pub fn new(base: Ideal<F>, k: usize) -> Self {
        SecantSpec {
            base,
            k,
            m_max: k as u32 + 3,
            gb: GbOptions::default(),
            entry_limit: DEFAULT_ENTRY_LIMIT,
        }
    }

    pub fn with_max_degree(mut self, m_max: u32) -> Self {
        self.m_max = m_max;
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.ring().nvars() - 1
    }
}

/// All ways of writing `a` as an ordered sum of `parts` exponent vectors,
/// with the multinomial coefficient `prod_v a_v! / prod_{v,j} a^j_v!`.
fn splits(a: &Monomial, parts: usize) -> Vec<(Vec<Monomial>, u64)> {
    let n = a.nvars();
    let mut out = Vec::new();
    let mut cur = vec![vec![0u16; n]; parts];
    fn rec(a: &Monomial, v: usize, parts: usize, cur: &mut Vec<Vec<u16>>, coef: u64, out: &mut Vec<(Vec<Monomial>, u64)>) {
        if v == a.nvars() {
            let ms = cur.iter().map(|e| Monomial::from_exponents(e.iter().copied())).collect();
            out.push((ms, coef));
            return;
        }
        let e = a.exponent(v);
        compositions(e, parts, &mut |comp: &[u16]| {
            let mut c = coef * factorial(e as u64);
            for (j, &x) in comp.iter().enumerate() {
                cur[j][v] = x;
                c /= factorial(x as u64);
            }
            rec(a, v + 1, parts, cur, c, out);
        });
        for part in cur.iter_mut() {
            part[v] = 0;
        }
    }
    rec(a, 0, parts, &mut cur, 1, &mut out);
    out
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Calls `f` on every composition of `total` into `parts` nonnegative parts.
fn compositions(total: u16, parts: usize, f: &mut dyn FnMut(&[u16])) {
    fn rec(left: u16, idx: usize, buf: &mut Vec<u16>, parts: usize, f: &mut dyn FnMut(&[u16])) {
        if idx + 1 == parts {
            buf.push(left);
            f(buf);
            buf.pop();
            return;
        }
        for x in 0..=left {
            buf.push(x);
            rec(left - x, idx + 1, buf, parts, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(parts);
    rec(total, 0, &mut buf, parts, f);
}

/// Coordinates on the degree-`m` part of `A^{(x)(k+1)}`: blocks indexed by
/// the degree tuple, mixed radix inside each block.
struct TensorLayout {
    offsets: HashMap<Vec<u32>, usize>,
    total: usize,
}

impl TensorLayout {
    fn new<F: Field>(q: &GradedQuotient<F>, m: u32, parts: usize) -> Self {
        let mut offsets = HashMap::new();
        let mut total = 0usize;
        compositions(m as u16, parts, &mut |comp: &[u16]| {
            let degs: Vec<u32> = comp.iter().map(|&x| x as u32).collect();
            let size: usize = degs.iter().map(|&d| q.dim(d)).product();
            offsets.insert(degs, total);
            total += size;
        });
        TensorLayout { offsets, total }
    }
}

/// Image of the monomial `x^a` in the tensor power, as a sparse vector.
fn tensor_image<F: Field>(q: &GradedQuotient<F>, layout: &TensorLayout, a: &Monomial, parts: usize) -> SparseVec<F::Elem> {
    let field = q.groebner_basis().ring().field();
    let mut entries: Vec<(usize, F::Elem)> = Vec::new();
    for (pieces, coef) in splits(a, parts) {
        let degs: Vec<u32> = pieces.iter().map(|p| p.degree()).collect();
        let Some(&offset) = layout.offsets.get(&degs) else { continue };
        let nfs: Vec<SparseVec<F::Elem>> = pieces.iter().map(|p| q.nf_monomial(p)).collect();
        if nfs.iter().any(|v| v.is_empty()) {
            continue;
        }
        // Expand the tensor product of the normal forms.
        let mut acc: Vec<(usize, F::Elem)> = vec![(0, field.from_i64(coef as i64))];
        for (j, v) in nfs.iter().enumerate() {
            let dim = q.dim(degs[j]);
            let mut next = Vec::with_capacity(acc.len() * v.len());
            for (idx, c) in &acc {
                for (b, w) in v {
                    next.push((idx * dim + b, field.mul(c, w)));
                }
            }
            acc = next;
        }
        entries.extend(acc.into_iter().map(|(i, c)| (offset + i, c)));
    }
    normalize(field, entries)
}

/// Basis of `(I_{Sigma_k})_m`, one polynomial per free column of the
/// system, so the leading monomials are distinct.
pub fn secant_graded_piece<F: Field>(spec: &SecantSpec<F>, m: u32) -> Result<Vec<Polynomial<F>>> {
    let gb = buchberger(&spec.base, MonomialOrder::Grevlex, spec.gb)?;
    graded_piece_from_gb(&gb, spec.k, m, spec.entry_limit)
}

fn graded_piece_from_gb<F: Field>(gb: &GroebnerBasis<F>, k: usize, m: u32, entry_limit: usize) -> Result<Vec<Polynomial<F>>> {
    let ring = gb.ring().clone();
    let field = ring.field().clone();
    let q = GradedQuotient::new(gb, m)?;
    let parts = k + 1;
    let layout = TensorLayout::new(&q, m, parts);
    // Unknowns: coefficients of F on the degree-m monomials, increasing.
    let order = ring.order();
    let mut monos = monomials_of_degree(ring.nvars(), m);
    monos.sort_by(|a, b| order.cmp(a, b));
    check_shape(layout.total, monos.len(), entry_limit)?;
    let mut rows: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); layout.total];
    for (col, a) in monos.iter().enumerate() {
        for (r, c) in tensor_image(&q, &layout, a, parts) {
            rows[r].push((col, c));
        }
    }
    let rows: Vec<SparseVec<F::Elem>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let ker = kernel(&field, rows, monos.len());
    let mut out: Vec<Polynomial<F>> = ker
        .into_iter()
        .map(|v| Polynomial::from_terms(&ring, v.into_iter().map(|(i, c)| (monos[i].clone(), c))).monic())
        .collect();
    out.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    Ok(out)
}

/// Expected dimension and (when known) degree of `Sigma_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantExpectation {
    pub dimension: i64,
    pub degree: Option<i64>,
}

/// Expectations for the `k`-th secant variety of a curve with Hilbert
/// polynomial `d m + 1 - g` in `P^n`.
pub fn expected_secant(curve: &HilbertData, k: usize, n: usize) -> Option<SecantExpectation> {
    if curve.krull_dim != Some(2) {
        return None;
    }
    let d = curve.alphas[1] as i64;
    let g = 1 - curve.alphas[0] as i64;
    let dimension = (2 * k as i64 + 1).min(n as i64);
    let degree = if dimension == n as i64 {
        Some(1)
    } else if k == 0 {
        Some(d)
    } else if k == 1 {
        Some(deg_secant(&CurveParams { g, d, n: n as i64, k: 1 }))
    } else {
        None
    };
    Some(SecantExpectation { dimension, degree })
}

/// Degree, dimension and projective dimension of the computed ideal, and
/// whether degree and dimension are the expected ones. This is evidence
/// that the truncation captured the secant ideal, not a proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantCertificate {
    pub degree: i64,
    pub dimension: i64,
    pub projdim: usize,
    pub matches: bool,
    pub expected: Option<SecantExpectation>,
}

#[derive(Clone, Debug)]
pub struct SecantIdeal<F: Field> {
    /// Basis of `(I_{Sigma_k})_m` for `m = 0..=m_max`.
    pub pieces: BTreeMap<u32, Vec<Polynomial<F>>>,
    /// Minimal generators, by increasing degree.
    pub generators: Vec<Polynomial<F>>,
    pub ideal: Ideal<F>,
    pub certificate: Option<SecantCertificate>,
}

impl<F: Field> SecantIdeal<F> {
    /// Number of minimal generators in each degree.
    pub fn generator_counts(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for g in &self.generators {
            *out.entry(g.degree().unwrap()).or_insert(0) += 1;
        }
        out
    }
}

/// Coordinates of a degree-`m` form on the monomial basis.
fn monomial_vector<F: Field>(f: &Polynomial<F>, index: &HashMap<Monomial, usize>) -> SparseVec<F::Elem> {
    let mut v: SparseVec<F::Elem> = f.terms().iter().map(|(m, c)| (index[m], c.clone())).collect();
    v.sort_by_key(|e| e.0);
    v
}

/// Graded pieces up to `m_max`, with the minimal generators taken as a
/// complement of `S_1 (I)_{m-1}` in each degree.
pub fn secant_ideal<F: Field>(spec: &SecantSpec<F>, certify: bool) -> Result<SecantIdeal<F>> {
    let ring = spec.base.ring().clone();
    let field = ring.field().clone();
    let n = ring.nvars();
    let gb = buchberger(&spec.base, MonomialOrder::Grevlex, spec.gb)?;
    let mut pieces = BTreeMap::new();
    let mut generators = Vec::new();
    for m in 0..=spec.m_max {
        let piece = graded_piece_from_gb(&gb, spec.k, m, spec.entry_limit)?;
        let monos = monomials_of_degree(n, m);
        let index: HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let mut span: Vec<SparseVec<F::Elem>> = Vec::new();
        if m > 0 {
            for f in pieces.get(&(m - 1)).map(|v: &Vec<Polynomial<F>>| v.as_slice()).unwrap_or(&[]) {
                for v in 0..n {
                    let xf = f.mul_term(&field.one(), &Monomial::variable(n, v));
                    span.push(monomial_vector(&xf, &index));
                }
            }
        }
        let mut current = rank(&field, span.clone(), monos.len());
        for f in &piece {
            span.push(monomial_vector(f, &index));
            let r = rank(&field, span.clone(), monos.len());
            if r > current {
                generators.push(f.clone());
                current = r;
            } else {
                span.pop();
            }
        }
        pieces.insert(m, piece);
    }
    let ideal = Ideal::new(&ring, generators.clone())?;
    let certificate = if certify { Some(certify_ideal(&ideal, &gb, spec)?) } else { None };
    Ok(SecantIdeal {
        pieces,
        generators,
        ideal,
        certificate,
    })
}

fn certify_ideal<F: Field>(ideal: &Ideal<F>, base_gb: &GroebnerBasis<F>, spec: &SecantSpec<F>) -> Result<SecantCertificate> {
    let gb = buchberger(ideal, MonomialOrder::Grevlex, spec.gb)?;
    let h = hilbert_poly(&gb);
    let table = betti_table_with(&gb, &BettiOptions { gb: spec.gb, ..BettiOptions::default() })?;
    let dimension = h.projective_dim().unwrap_or(-1);
    let degree = h.degree as i64;
    let expected = expected_secant(&hilbert_poly(base_gb), spec.k, spec.ambient_dim());
    let matches = match expected {
        Some(e) => e.dimension == dimension && e.degree.map_or(true, |d| d == degree),
        None => false,
    };
    Ok(SecantCertificate {
        degree,
        dimension,
        projdim: table.pd(),
        matches,
        expected,
    })
}

/// Betti table of the secant ideal, for convenience.
pub fn secant_betti<F: Field>(s: &SecantIdeal<F>, opts: &BettiOptions) -> Result<BettiTable> {
    let gb = buchberger(&s.ideal, MonomialOrder::Grevlex, opts.gb)?;
    betti_table_with(&gb, opts)
}

/// The ring with `k+1` copies `y^j_v` of the variables, and the ideal
/// `I(y^0) + ... + I(y^k)` in it.
fn join_ring<F: Field>(base: &Ideal<F>, k: usize, extra: &[String]) -> Result<(Ring<F>, Ideal<F>)> {
    let ring = base.ring();
    let n = ring.nvars();
    let mut names: Vec<String> = extra.to_vec();
    for j in 0..=k {
        for v in ring.names() {
            names.push(format!("{v}_{j}"));
        }
    }
    let big = PolyRing::new(ring.field().clone(), names, MonomialOrder::Grevlex)?;
    let shift = extra.len();
    let mut gens = Vec::new();
    for j in 0..=k {
        let map: Vec<usize> = (0..n).map(|v| shift + j * n + v).collect();
        for g in base.generators() {
            gens.push(g.rename_into(&big, &map)?);
        }
    }
    Ok((big.clone(), Ideal::new(&big, gens)?))
}

/// Whether `F(y^0 + ... + y^k)` reduces to zero modulo
/// `I(y^0) + ... + I(y^k)`, by substitution in the large ring.
pub fn vanishes_on_join<F: Field>(base: &Ideal<F>, k: usize, forms: &[Polynomial<F>], opts: GbOptions) -> Result<bool> {
    let n = base.ring().nvars();
    let (big, join) = join_ring(base, k, &[])?;
    let gb = buchberger(&join, MonomialOrder::Grevlex, opts)?;
    let images: Vec<Polynomial<F>> = (0..n)
        .map(|v| {
            let one = big.field().one();
            Polynomial::from_terms(&big, (0..=k).map(|j| (Monomial::variable(big.nvars(), j * n + v), one.clone())))
        })
        .collect();
    for f in forms {
        let sub = f.substitute(&images)?;
        if !normal_form(&sub, &gb)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The secant ideal by eliminating the `y` variables from
/// `I(y^0) + ... + I(y^k) + (x_v - sum_j y^j_v)`. Only feasible for very
/// small curves.
pub fn secant_by_elimination<F: Field>(base: &Ideal<F>, k: usize, opts: GbOptions) -> Result<Ideal<F>> {
    let ring = base.ring();
    let n = ring.nvars();
    let (big, join) = join_ring(base, k, ring.names())?;
    let one = big.field().one();
    let mut gens = join.generators().to_vec();
    for v in 0..n {
        let mut terms = vec![(Monomial::variable(big.nvars(), v), one.clone())];
        for j in 0..=k {
            terms.push((Monomial::variable(big.nvars(), n + j * n + v), big.field().neg(&one)));
        }
        gens.push(Polynomial::from_terms(&big, terms));
    }
    let keep: Vec<usize> = (0..n).collect();
    let out = eliminate(&Ideal::new(&big, gens)?, &keep, opts)?;
    let back = out
        .generators()
        .iter()
        .map(|g| {
            // The survivors only involve x; map them back to the base ring.
            let terms = g.terms().iter().map(|(m, c)| (Monomial::from_exponents(m.exponents()[..n].iter().copied()), c.clone()));
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    Ideal::new(ring, back)
}

/// Checks the precondition that the base ideal has no linear forms, i.e.
/// the curve is nondegenerate.
pub fn check_nondegenerate<F: Field>(base: &Ideal<F>) -> Result<()> {
    if base.generators().iter().any(|g| g.degree() == Some(1)) {
        return Err(AlgebraError::Precondition("the base ideal contains linear forms".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::groebner::{contains, ideals_equal};
    use crate::poly::parse_polynomial;

    fn rnc(d: usize) -> Ideal<PrimeField> {
        let r = PolyRing::with_prefix(PrimeField::new(32003).unwrap(), "x", d + 1, MonomialOrder::Grevlex);
        let mut gens = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let s = format!("x{a}*x{} - x{}*x{b}", b + 1, a + 1);
                gens.push(parse_polynomial(&r, &s, 1).unwrap());
            }
        }
        Ideal::new(&r, gens).unwrap()
    }

    #[test]
    fn splits_have_multinomial_weights() {
        let a = Monomial::from_exponents([2u16, 1]);
        let s = splits(&a, 2);
        assert_eq!(s.len(), 6);
        let total: u64 = s.iter().map(|x| x.1).sum();
        assert_eq!(total, 8); // 2^deg
    }

    #[test]
    fn k_zero_returns_the_ideal() {
        let base = rnc(4);
        let spec = SecantSpec::new(base.clone(), 0);
        let piece = secant_graded_piece(&spec, 2).unwrap();
        assert_eq!(piece.len(), 6);
        let gb = buchberger(&base, MonomialOrder::Grevlex, GbOptions::default()).unwrap();
        for f in &piece {
            assert!(contains(&gb, f).unwrap());
        }
    }

    #[test]
    fn rational_quartic() {
        let spec = SecantSpec::new(rnc(4), 1);
        assert!(secant_graded_piece(&spec, 2).unwrap().is_empty());
        let cubic = secant_graded_piece(&spec, 3).unwrap();
        assert_eq!(cubic.len(), 1);
        let r = spec.base.ring().clone();
        let hankel = parse_polynomial(&r, "x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3", 1).unwrap();
        assert_eq!(cubic[0], hankel.monic());
        assert!(vanishes_on_join(&spec.base, 1, &cubic, GbOptions::default()).unwrap());

        let s = secant_ideal(&spec.clone().with_max_degree(3), true).unwrap();
        assert_eq!(s.generators.len(), 1);
        let cert = s.certificate.unwrap();
        assert_eq!((cert.degree, cert.dimension, cert.projdim), (3, 3, 1));
        assert!(cert.matches);
    }

    #[test]
    fn rational_quintic_matches_minors() {
        let spec = SecantSpec::new(rnc(5), 1).with_max_degree(3);
        let s = secant_ideal(&spec, true).unwrap();
        assert_eq!(s.generator_counts().get(&3), Some(&4));
        let cert = s.certificate.unwrap();
        assert_eq!((cert.degree, cert.dimension, cert.projdim), (6, 3, 2));
        assert!(cert.matches);
        // 3x3 minors of the 3x4 Hankel matrix
        let r = spec.base.ring().clone();
        let minors = [
            "x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3",
            "x0*x2*x5 - x0*x3*x4 - x1^2*x5 + x1*x2*x4 + x1*x3^2 - x2^2*x3",
            "x0*x3*x5 - x0*x4^2 - x1*x2*x5 + x1*x3*x4 + x2^2*x4 - x2*x3^2",
            "x1*x3*x5 - x1*x4^2 - x2^2*x5 + 2*x2*x3*x4 - x3^3",
        ];
        let det = Ideal::new(&r, minors.iter().map(|m| parse_polynomial(&r, m, 1).unwrap()).collect()).unwrap();
        assert!(ideals_equal(&det, &s.ideal, GbOptions::default()).unwrap());
    }

    #[test]
    fn twisted_cubic_secant_is_everything() {
        let spec = SecantSpec::new(rnc(3), 1);
        let s = secant_ideal(&spec, true).unwrap();
        assert!(s.ideal.is_zero());
        let cert = s.certificate.unwrap();
        assert_eq!((cert.degree, cert.dimension, cert.projdim), (1, 3, 0));
        assert!(cert.matches);
    }

    #[test]
    fn elimination_route_agrees() {
        let base = rnc(4);
        let elim = secant_by_elimination(&base, 1, GbOptions::default()).unwrap();
        let spec = SecantSpec::new(base, 1).with_max_degree(3);
        let s = secant_ideal(&spec, false).unwrap();
        assert!(ideals_equal(&elim, &s.ideal, GbOptions::default()).unwrap());
    }

    #[test]
    fn pieces_form_an_ideal_and_nest() {
        let base = rnc(6);
        let s1 = secant_ideal(&SecantSpec::new(base.clone(), 1).with_max_degree(4), false).unwrap();
        let s2 = secant_ideal(&SecantSpec::new(base.clone(), 2).with_max_degree(4), false).unwrap();
        let n = base.ring().nvars();
        {
            let m = 3;
            let next = Ideal::new(base.ring(), s1.pieces[&(m + 1)].clone()).unwrap();
            let gb = buchberger(&next, MonomialOrder::Grevlex, GbOptions::default()).unwrap();
            for f in &s1.pieces[&m] {
                for v in 0..n {
                    let xf = f.mul_term(&1, &Monomial::variable(n, v));
                    assert!(contains(&gb, &xf).unwrap());
                }
            }
        }
        // Sigma_2 of the sextic is cut out by the 4x4 Hankel determinant.
        assert_eq!(s2.pieces[&4].len(), 1);
        let gb1 = buchberger(&s1.ideal, MonomialOrder::Grevlex, GbOptions::default()).unwrap();
        for f in &s2.pieces[&4] {
            assert!(contains(&gb1, f).unwrap());
        }
    }

    #[test]
    fn degree_cap_and_guard() {
        let spec = SecantSpec {
            entry_limit: 10,
            ..SecantSpec::new(rnc(4), 1)
        };
        assert!(secant_graded_piece(&spec, 3).unwrap_err().is_resource_limit());
    }
}
