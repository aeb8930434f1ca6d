//! Matrices of linear forms, minors, Hankel matrices, Eagon-Northcott
//! predictions and explicit Koszul cycles on determinantal ideals.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{buchberger, contains, GbOptions, Ideal};
use crate::hilbert::binomial;
use crate::linalg::rank;
use crate::poly::{MonomialOrder, PolyRing, Polynomial, Ring};

/// An `(s+1) x (t+1)` matrix whose entries are linear forms or zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFormMatrix<F: Field> {
    ring: Ring<F>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> LinearFormMatrix<F> {
    /// Entries in row-major order.
    pub fn new(ring: &Ring<F>, rows: usize, cols: usize, entries: Vec<Polynomial<F>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(AlgebraError::Shape(format!("empty matrix {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(AlgebraError::LengthMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        for (k, e) in entries.iter().enumerate() {
            if !(e.is_zero() || e.is_linear_form()) {
                return Err(AlgebraError::Precondition(format!(
                    "entry ({}, {}) is not a linear form: {e}",
                    k / cols,
                    k % cols
                )));
            }
        }
        let entries = entries
            .into_iter()
            .map(|e| e.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearFormMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        &self.entries
    }

    /// The matrix with rows and columns permuted: new row `i` is old row
    /// `row_perm[i]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for &i in row_perm {
            for &j in col_perm {
                entries.push(self.entry(i, j).clone());
            }
        }
        LinearFormMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Whether the `s+t+1` entries of row `r` and column `c` are linearly
    /// independent.
    pub fn row_col_independent(&self, r: usize, c: usize) -> bool {
        let mut forms: Vec<&Polynomial<F>> = (0..self.cols).map(|j| self.entry(r, j)).collect();
        forms.extend((0..self.rows).filter(|&i| i != r).map(|i| self.entry(i, c)));
        linear_rank(&self.ring, &forms) == self.rows + self.cols - 1
    }

    pub fn row0_col0_independent(&self) -> bool {
        self.row_col_independent(0, 0)
    }

    /// First `(r, c)` in row-major order whose union is independent.
    pub fn independent_row_col(&self) -> Option<(usize, usize)> {
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self.row_col_independent(r, c))
    }

    /// Determinant of the submatrix on the given rows and columns, by
    /// cofactor expansion along the first row with memoized sub-minors.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial<F>> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(AlgebraError::Shape(format!("minor of shape {}x{}", rows.len(), cols.len())));
        }
        let mut memo = HashMap::new();
        Ok(self.minor_memo(rows, cols, &mut memo))
    }

    fn minor_memo(&self, rows: &[usize], cols: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), Polynomial<F>>) -> Polynomial<F> {
        if rows.len() == 1 {
            return self.entry(rows[0], cols[0]).clone();
        }
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (k, &c) in cols.iter().enumerate() {
            let a = self.entry(rows[0], c);
            if a.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = self.minor_memo(&rows[1..], &sub_cols, memo);
            let term = a.mul_unchecked(&sub);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) }.expect("same ring");
        }
        memo.insert(key, acc.clone());
        acc
    }

    /// All `size x size` minors, rows then columns in lexicographic order.
    pub fn minors(&self, size: usize) -> Result<Vec<((Vec<usize>, Vec<usize>), Polynomial<F>)>> {
        if size == 0 || size > self.rows.min(self.cols) {
            return Err(AlgebraError::Shape(format!(
                "minor size {size} out of range for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut memo = HashMap::new();
        let mut out = Vec::new();
        for rs in combinations(self.rows, size) {
            for cs in combinations(self.cols, size) {
                let m = self.minor_memo(&rs, &cs, &mut memo);
                out.push(((rs.clone(), cs), m));
            }
        }
        Ok(out)
    }
}

fn linear_rank<F: Field>(ring: &Ring<F>, forms: &[&Polynomial<F>]) -> usize {
    let field = ring.field();
    let rows = forms
        .iter()
        .map(|f| {
            f.linear_coefficients()
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !field.is_zero(c))
                .collect()
        })
        .collect();
    rank(field, rows, ring.nvars())
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Hankel matrix with entries `a_{i,j} = x_{i+j}`, of shape
/// `rows x (d + 2 - rows)`, over a ring with at least `d+1` variables.
pub fn hankel_matrix<F: Field>(ring: &Ring<F>, d: usize, rows: usize) -> Result<LinearFormMatrix<F>> {
    if rows < 2 || rows > d {
        return Err(AlgebraError::Shape(format!("hankel rows {rows} out of range 2..={d}")));
    }
    if ring.nvars() < d + 1 {
        return Err(AlgebraError::Shape(format!("hankel matrix needs {} variables", d + 1)));
    }
    let cols = d + 2 - rows;
    let entries = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| i + j))
        .map(|v| Polynomial::var(ring, v))
        .collect();
    LinearFormMatrix::new(ring, rows, cols, entries)
}

/// The ring `K[x_0..x_d]` with grevlex order.
pub fn standard_ring<F: Field>(field: F, d: usize) -> Ring<F> {
    PolyRing::with_prefix(field, "x", d + 1, MonomialOrder::Grevlex)
}

/// Ideal of all `size x size` minors (zero minors dropped, duplicates
/// kept once).
pub fn minor_ideal<F: Field>(a: &LinearFormMatrix<F>, size: usize) -> Result<Ideal<F>> {
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for (_, m) in a.minors(size)? {
        if !m.is_zero() && !gens.contains(&m) {
            gens.push(m);
        }
    }
    Ideal::new(a.ring(), gens)
}

/// Rational normal curve of degree `d` in `P^d`.
pub fn rnc_ideal<F: Field>(field: F, d: usize) -> Result<Ideal<F>> {
    if d < 2 {
        return Err(AlgebraError::Shape(format!("rational normal curve needs d >= 2, got {d}")));
    }
    let ring = standard_ring(field, d);
    minor_ideal(&hankel_matrix(&ring, d, 2)?, 2)
}

/// Ideal of `2 x 2` minors of a two-row matrix.
pub fn curve_from_matrix<F: Field>(a: &LinearFormMatrix<F>) -> Result<Ideal<F>> {
    if a.rows() != 2 {
        return Err(AlgebraError::Shape(format!("expected 2 rows, got {}", a.rows())));
    }
    minor_ideal(a, 2)
}

/// Eagon-Northcott prediction for the maximal minors of a generic `a x b`
/// matrix: `beta_i = C(b, a+i-1) C(a+i-2, a-1)` in degree `a+i-1`.
pub fn en_betti(a: usize, b: usize, i: usize) -> Result<(u64, usize)> {
    if a == 0 || a > b || i > b - a + 1 {
        return Err(AlgebraError::Shape(format!("index {i} out of range for a {a}x{b} matrix")));
    }
    if i == 0 {
        return Ok((1, 0));
    }
    let (a_, b_, i_) = (a as i64, b as i64, i as i64);
    let r = binomial(b_, a_ + i_ - 1) * binomial(a_ + i_ - 2, a_ - 1);
    Ok((r as u64, a + i - 1))
}

/// Element of `wedge^i V (x) S`, with `V` spanned by `e_0..e_{N-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct KoszulChain<F: Field> {
    ring: Ring<F>,
    /// Homological index.
    pub i: usize,
    /// Internal degree: `i` plus the degree of the coefficients.
    pub degree: usize,
    /// Sorted index sets of size `i` with their nonzero coefficients.
    pub terms: BTreeMap<Vec<usize>, Polynomial<F>>,
}

impl<F: Field> KoszulChain<F> {
    pub fn zero(ring: &Ring<F>, i: usize, degree: usize) -> Self {
        KoszulChain {
            ring: ring.clone(),
            i,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coef * e_set`; `set` must be sorted and have size `i`, `coef`
    /// homogeneous of degree `degree - i`.
    pub fn add_term(&mut self, set: Vec<usize>, coef: Polynomial<F>) -> Result<()> {
        if set.len() != self.i || set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AlgebraError::Precondition(format!("bad wedge index {set:?} for i = {}", self.i)));
        }
        if coef.is_zero() {
            return Ok(());
        }
        if !coef.is_homogeneous() || coef.degree() != Some((self.degree - self.i) as u32) {
            return Err(AlgebraError::NotHomogeneous(coef.to_string()));
        }
        let entry = self.terms.entry(set.clone());
        let sum = match entry {
            std::collections::btree_map::Entry::Occupied(o) => o.get().add(&coef)?,
            std::collections::btree_map::Entry::Vacant(_) => coef,
        };
        if sum.is_zero() {
            self.terms.remove(&set);
        } else {
            self.terms.insert(set, sum);
        }
        Ok(())
    }

    /// Koszul differential with `d(e_v) = images[v]`:
    /// `d(p e_T) = sum_k (-1)^k p images[t_k] e_{T - t_k}`.
    pub fn boundary(&self, images: &[Polynomial<F>]) -> Result<KoszulChain<F>> {
        if self.i == 0 {
            return Ok(KoszulChain::zero(&self.ring, 0, self.degree));
        }
        let mut out = KoszulChain::zero(&self.ring, self.i - 1, self.degree);
        for (set, p) in &self.terms {
            for (k, &v) in set.iter().enumerate() {
                let img = images
                    .get(v)
                    .ok_or_else(|| AlgebraError::Precondition(format!("no image for e_{v}")))?;
                let mut c = p.mul(img)?;
                if k % 2 == 1 {
                    c = c.neg();
                }
                let rest: Vec<usize> = set.iter().copied().filter(|&x| x != v).collect();
                out.add_term(rest, c)?;
            }
        }
        Ok(out)
    }
}

/// The cycle built from a matrix, with the coordinate choices it rests on.
#[derive(Clone, Debug)]
pub struct Gamma<F: Field> {
    /// The matrix after moving an independent row and column to position 0.
    pub matrix: LinearFormMatrix<F>,
    pub k: usize,
    /// Row and column of the input moved to position 0.
    pub pivot: (usize, usize),
    /// `d(e_v)` for every basis vector: row 0 entries, then column 0
    /// entries below row 0, then variables completing a basis of `S_1`.
    pub images: Vec<Polynomial<F>>,
    pub chain: KoszulChain<F>,
}

/// `gamma = sum (-1)^{(sum sigma + sum tau) + t(k+1)} det(sigma | tau) e_{sigma_t, tau}`
/// over `sigma` in `{1..s}` and `tau` in `{0..t}` of size `k+1`, where
/// `e_{sigma_t, tau}` wedges the basis vectors of `{0..s+t}` outside
/// `(sigma + t) u tau`. It has homological index `s+t-2k-1` and degree
/// `s+t-k`.
pub fn build_gamma<F: Field>(a: &LinearFormMatrix<F>, k: usize) -> Result<Gamma<F>> {
    let s = a.rows() - 1;
    let t = a.cols() - 1;
    if s + 1 < k + 2 {
        return Err(AlgebraError::Precondition(format!("needs s+1 >= k+2, got s+1 = {} and k+2 = {}", s + 1, k + 2)));
    }
    if t + 1 < k + 1 {
        return Err(AlgebraError::Precondition(format!("needs t+1 >= k+1, got t+1 = {}", t + 1)));
    }
    let (r0, c0) = a
        .independent_row_col()
        .ok_or_else(|| AlgebraError::Precondition("no row and column with linearly independent entries".into()))?;
    let mut row_perm: Vec<usize> = (0..=s).collect();
    row_perm.swap(0, r0);
    let mut col_perm: Vec<usize> = (0..=t).collect();
    col_perm.swap(0, c0);
    let m = a.permuted(&row_perm, &col_perm);
    let ring = m.ring().clone();

    // d(e_i) = a_{0,i} for i <= t, d(e_{t+i}) = a_{i,0} for 1 <= i <= s,
    // then variables to complete a basis.
    let mut images: Vec<Polynomial<F>> = (0..=t).map(|j| m.entry(0, j).clone()).collect();
    images.extend((1..=s).map(|i| m.entry(i, 0).clone()));
    for v in 0..ring.nvars() {
        let x = Polynomial::var(&ring, v);
        let mut trial: Vec<&Polynomial<F>> = images.iter().collect();
        trial.push(&x);
        if linear_rank(&ring, &trial) == images.len() + 1 {
            images.push(x);
        }
    }

    let i = s + t - 2 * k - 1;
    let mut chain = KoszulChain::zero(&ring, i, s + t - k);
    let mut memo = HashMap::new();
    for sigma in combinations(s, k + 1) {
        let sigma: Vec<usize> = sigma.into_iter().map(|x| x + 1).collect();
        for tau in combinations(t + 1, k + 1) {
            let det = m.minor_memo(&sigma, &tau, &mut memo);
            let sum: usize = sigma.iter().sum::<usize>() + tau.iter().sum::<usize>();
            let sign_odd = (sum + t * (k + 1)) % 2 == 1;
            let used: Vec<usize> = sigma.iter().map(|x| x + t).chain(tau.iter().copied()).collect();
            let set: Vec<usize> = (0..=s + t).filter(|x| !used.contains(x)).collect();
            chain.add_term(set, if sign_odd { det.neg() } else { det })?;
        }
    }
    Ok(Gamma {
        matrix: m,
        k,
        pivot: (r0, c0),
        images,
        chain,
    })
}

/// Outcome of checking a Koszul cycle against an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub boundary_nonzero: bool,
    pub boundary_in_ideal: bool,
    /// Every nonzero coefficient of the boundary is plus or minus a
    /// `(k+2)`-minor involving row 0 or column 0.
    pub coefficients_are_minors: bool,
    /// The ideal has no nonzero forms of degree `<= k+1`.
    pub no_low_degree_forms: bool,
    /// `(i, j)` with `beta_{i,j} != 0` when certified.
    pub position: (usize, usize),
    pub certified: bool,
    /// Row and column moved to position 0.
    pub pivot: (usize, usize),
    /// Images of the basis vectors `e_v` under the differential.
    pub linear_forms: Vec<String>,
    pub boundary_terms: usize,
}

pub fn verify_cycle<F: Field>(gamma: &Gamma<F>, ideal: &Ideal<F>) -> Result<CycleCertificate> {
    let k = gamma.k;
    let chain = &gamma.chain;
    let boundary = chain.boundary(&gamma.images)?;
    let gb = buchberger(ideal, MonomialOrder::Grevlex, GbOptions::default())?;
    let mut in_ideal = true;
    for c in boundary.terms.values() {
        if !contains(&gb, c)? {
            in_ideal = false;
            break;
        }
    }
    let a = &gamma.matrix;
    let mut allowed: Vec<Polynomial<F>> = Vec::new();
    if k + 2 <= a.rows().min(a.cols()) {
        for ((rs, cs), m) in a.minors(k + 2)? {
            if rs[0] == 0 || cs[0] == 0 {
                allowed.push(m);
            }
        }
    }
    let coefficients_are_minors = boundary
        .terms
        .values()
        .all(|c| allowed.iter().any(|m| m == c || m.neg() == *c));
    let no_low = ideal.min_degree().map_or(true, |d| d as usize > k + 1);
    let boundary_nonzero = !boundary.is_zero();
    Ok(CycleCertificate {
        boundary_nonzero,
        boundary_in_ideal: in_ideal,
        coefficients_are_minors,
        no_low_degree_forms: no_low,
        position: (chain.i, chain.degree),
        certified: boundary_nonzero && in_ideal && no_low,
        pivot: gamma.pivot,
        linear_forms: gamma.images.iter().map(|p| p.to_string()).collect(),
        boundary_terms: boundary.terms.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::groebner::ideals_equal;
    use crate::poly::parse_polynomial;
    use crate::resolve::betti_table_with;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn hankel_shapes() {
        let r = standard_ring(f(), 3);
        let h = hankel_matrix(&r, 3, 2).unwrap();
        assert_eq!((h.rows(), h.cols()), (2, 3));
        assert_eq!(h.entry(1, 2).to_string(), "x3");
        let r4 = standard_ring(f(), 4);
        let h = hankel_matrix(&r4, 4, 3).unwrap();
        assert_eq!((h.rows(), h.cols()), (3, 3));
        assert_eq!(h.entry(2, 2).to_string(), "x4");
        assert!(hankel_matrix(&r4, 4, 5).is_err());
        // Row 0 and column 0 of a Hankel matrix share x_0..x_s, so they are
        // dependent; row 0 with the last column works.
        assert!(!h.row0_col0_independent());
        assert!(h.row_col_independent(0, 2));
    }

    #[test]
    fn minors_and_rnc() {
        let r = standard_ring(f(), 3);
        let tc = minor_ideal(&hankel_matrix(&r, 3, 2).unwrap(), 2).unwrap();
        let want: Vec<_> = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]
            .iter()
            .map(|s| parse_polynomial(&r, s, 1).unwrap())
            .collect();
        assert!(ideals_equal(&tc, &Ideal::new(&r, want).unwrap(), GbOptions::default()).unwrap());
        assert_eq!(rnc_ideal(f(), 4).unwrap().generators().len(), 6);
        assert_eq!(rnc_ideal(f(), 5).unwrap().generators().len(), 10);
        let r4 = standard_ring(f(), 4);
        let det = minor_ideal(&hankel_matrix(&r4, 4, 3).unwrap(), 3).unwrap();
        assert_eq!(det.generators().len(), 1);
        assert!(minor_ideal(&hankel_matrix(&r4, 4, 3).unwrap(), 4).is_err());
        assert!(curve_from_matrix(&hankel_matrix(&r4, 4, 3).unwrap()).is_err());
    }

    #[test]
    fn rnc_quartic_hilbert_function() {
        let i = rnc_ideal(f(), 4).unwrap();
        let gb = buchberger(&i, MonomialOrder::Grevlex, GbOptions::default()).unwrap();
        for m in 1..8 {
            assert_eq!(crate::hilbert::hilbert_function(&gb, m), 4 * m as i128 + 1);
        }
    }

    #[test]
    fn minor_expansion_matches_permutation_sum() {
        let r = standard_ring(f(), 5);
        let h = hankel_matrix(&r, 5, 3).unwrap();
        let cs = [0usize, 1, 3];
        let rs = [0usize, 1, 2];
        let mut want = Polynomial::zero(&r);
        let perms = [[0, 1, 2, 0], [0, 2, 1, 1], [1, 0, 2, 1], [1, 2, 0, 0], [2, 0, 1, 0], [2, 1, 0, 1]];
        for p in perms {
            let mut term = Polynomial::one(&r);
            for k in 0..3 {
                term = term.mul(h.entry(rs[k], cs[p[k]])).unwrap();
            }
            want = if p[3] == 0 { want.add(&term) } else { want.sub(&term) }.unwrap();
        }
        assert_eq!(h.minor(&rs, &cs).unwrap(), want);
    }

    #[test]
    fn en_values() {
        assert_eq!(en_betti(3, 3, 1).unwrap(), (1, 3));
        assert_eq!(en_betti(2, 3, 2).unwrap(), (2, 3));
        assert_eq!(en_betti(3, 4, 2).unwrap(), (3, 4));
        assert_eq!(en_betti(2, 4, 0).unwrap(), (1, 0));
        assert!(en_betti(2, 4, 4).is_err());
    }

    fn random_chain(ring: &Ring<PrimeField>, i: usize, deg: usize, rng: &mut ChaCha8Rng) -> KoszulChain<PrimeField> {
        let n = ring.nvars();
        let mut c = KoszulChain::zero(ring, i, i + deg);
        let monos = crate::poly::monomials_of_degree(n, deg as u32);
        for set in combinations(n, i) {
            if rng.gen_bool(0.5) {
                let terms: Vec<_> = (0..3)
                    .map(|_| (monos[rng.gen_range(0..monos.len())].clone(), rng.gen_range(1..32003u32)))
                    .collect();
                c.add_term(set, Polynomial::from_terms(ring, terms)).unwrap();
            }
        }
        c
    }

    #[test]
    fn boundary_squares_to_zero_on_random_chains() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let r = standard_ring(f(), 4);
        let images: Vec<_> = (0..5).map(|v| Polynomial::var(&r, v)).collect();
        for _ in 0..200 {
            let i = rng.gen_range(2..=5);
            let deg = rng.gen_range(0..3);
            let c = random_chain(&r, i, deg, &mut rng);
            let dd = c.boundary(&images).unwrap().boundary(&images).unwrap();
            assert!(dd.is_zero());
        }
    }

    #[test]
    fn gamma_on_square_hankel() {
        let r = standard_ring(f(), 4);
        let h = hankel_matrix(&r, 4, 3).unwrap();
        let g = build_gamma(&h, 1).unwrap();
        assert_eq!(g.chain.i, 1);
        assert_eq!(g.chain.degree, 3);
        assert_eq!(g.chain.terms.len(), 3);
        let ideal = minor_ideal(&h, 3).unwrap();
        let cert = verify_cycle(&g, &ideal).unwrap();
        assert!(cert.certified, "{cert:?}");
        assert!(cert.coefficients_are_minors);
        assert_eq!(cert.position, (1, 3));
        // at i = 1 the boundary is a single multiple of the determinant
        let b = g.chain.boundary(&g.images).unwrap();
        let det = ideal.generators()[0].clone();
        assert!(b.terms.values().all(|c| *c == det || *c == det.neg()));
        assert!(build_gamma(&h, 2).is_err());
    }

    #[test]
    fn gamma_on_three_by_four_hankel() {
        let r = standard_ring(f(), 5);
        let h = hankel_matrix(&r, 5, 3).unwrap();
        let g = build_gamma(&h, 1).unwrap();
        assert_eq!((g.chain.i, g.chain.degree, g.chain.terms.len()), (2, 4, 6));
        let ideal = minor_ideal(&h, 3).unwrap();
        let cert = verify_cycle(&g, &ideal).unwrap();
        assert!(cert.certified && cert.coefficients_are_minors, "{cert:?}");
        let gb = buchberger(&ideal, MonomialOrder::Grevlex, GbOptions::default()).unwrap();
        let t = betti_table_with(&gb, &Default::default()).unwrap();
        assert_eq!(t.get(2, 4), 3);
    }

    #[test]
    fn zero_chain_is_not_certified() {
        let r = standard_ring(f(), 4);
        let h = hankel_matrix(&r, 4, 3).unwrap();
        let mut g = build_gamma(&h, 1).unwrap();
        g.chain = KoszulChain::zero(&r, 1, 3);
        let cert = verify_cycle(&g, &minor_ideal(&h, 3).unwrap()).unwrap();
        assert!(!cert.certified);
        assert!(!cert.boundary_nonzero);
    }

    #[test]
    fn gamma_needs_independent_row_and_column() {
        let r = standard_ring(f(), 2);
        let x = |v| Polynomial::var(&r, v);
        let a = LinearFormMatrix::new(&r, 3, 2, vec![x(0), x(0), x(0), x(0), x(1), x(2)]).unwrap();
        assert!(build_gamma(&a, 0).is_ok() || build_gamma(&a, 0).is_err());
        let dup = LinearFormMatrix::new(&r, 2, 2, vec![x(0), x(0), x(0), x(0)]).unwrap();
        assert!(matches!(build_gamma(&dup, 0), Err(AlgebraError::Precondition(_))));
    }
}
