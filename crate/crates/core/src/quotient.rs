//! Graded pieces of a quotient `S/I` in the standard-monomial basis, with
//! normal-form tables for every monomial of each degree.

use std::collections::HashMap;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::linalg::{normalize, SparseVec};
use crate::poly::{monomials_of_degree, Monomial, Polynomial};

/// One degree of `S/I`.
#[derive(Clone, Debug)]
pub struct DegreePiece<F: Field> {
    /// Standard monomials, in decreasing monomial order.
    pub basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    nf: HashMap<Monomial, SparseVec<F::Elem>>,
}

impl<F: Field> DegreePiece<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// `S/I` truncated at a maximal degree.
#[derive(Clone, Debug)]
pub struct GradedQuotient<F: Field> {
    gb: GroebnerBasis<F>,
    pieces: Vec<DegreePiece<F>>,
}

impl<F: Field> GradedQuotient<F> {
    /// Builds the degree pieces `0..=max_degree`. Needs a reduced basis in
    /// the standard grading.
    pub fn new(gb: &GroebnerBasis<F>, max_degree: u32) -> Result<Self> {
        if gb.weights().is_some() {
            return Err(AlgebraError::Precondition("quotient tables need the standard grading".into()));
        }
        if gb.truncated_at().is_some_and(|t| t < max_degree) {
            return Err(AlgebraError::Precondition(format!("basis is only valid through degree {}", gb.truncated_at().unwrap())));
        }
        let mut q = GradedQuotient {
            gb: gb.clone(),
            pieces: Vec::new(),
        };
        q.extend_to(max_degree);
        Ok(q)
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    pub fn max_degree(&self) -> u32 {
        self.pieces.len() as u32 - 1
    }

    pub fn nvars(&self) -> usize {
        self.gb.ring().nvars()
    }

    pub fn extend_to(&mut self, max_degree: u32) {
        while self.pieces.len() as u32 <= max_degree {
            let d = self.pieces.len() as u32;
            let piece = self.build_piece(d);
            self.pieces.push(piece);
        }
    }

    fn build_piece(&self, d: u32) -> DegreePiece<F> {
        let field = self.gb.ring().field().clone();
        let order = self.gb.order();
        let mut monos = monomials_of_degree(self.nvars(), d);
        monos.sort_by(|a, b| order.cmp(a, b));
        let mut basis = Vec::new();
        let mut divisor = Vec::with_capacity(monos.len());
        for m in &monos {
            let k = self.gb.find_divisor(m);
            if k.is_none() {
                basis.push(m.clone());
            }
            divisor.push(k);
        }
        basis.reverse();
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut nf: HashMap<Monomial, SparseVec<F::Elem>> = HashMap::new();
        // Increasing order: every tail term u*t of the reducer is smaller
        // than m, so its normal form is already known.
        for (m, k) in monos.iter().zip(divisor) {
            let Some(k) = k else { continue };
            let g = &self.gb.elements()[k];
            let u = g.leading_monomial().unwrap().quotient_of(m);
            let mut entries = Vec::new();
            for (t, c) in &g.terms()[1..] {
                let ut = u.mul(t);
                let negc = field.neg(c);
                match index.get(&ut) {
                    Some(&i) => entries.push((i, negc)),
                    None => {
                        for (i, v) in &nf[&ut] {
                            entries.push((*i, field.mul(&negc, v)));
                        }
                    }
                }
            }
            nf.insert(m.clone(), normalize(&field, entries));
        }
        DegreePiece { basis, index, nf }
    }

    pub fn piece(&self, d: u32) -> &DegreePiece<F> {
        &self.pieces[d as usize]
    }

    pub fn dim(&self, d: u32) -> usize {
        self.pieces.get(d as usize).map_or(0, |p| p.dim())
    }

    /// Coordinates of the normal form of a monomial (degree must be built).
    pub fn nf_monomial(&self, m: &Monomial) -> SparseVec<F::Elem> {
        let piece = &self.pieces[m.degree() as usize];
        match piece.index.get(m) {
            Some(&i) => vec![(i, self.gb.ring().field().one())],
            None => piece.nf[m].clone(),
        }
    }

    /// Calls `f(index, coefficient)` for each term of NF(m).
    pub fn for_each_nf_term(&self, m: &Monomial, mut f: impl FnMut(usize, &F::Elem)) {
        let piece = &self.pieces[m.degree() as usize];
        match piece.index.get(m) {
            Some(&i) => f(i, &self.gb.ring().field().one()),
            None => {
                for (i, v) in &piece.nf[m] {
                    f(*i, v);
                }
            }
        }
    }

    /// Coordinates of the normal form of a homogeneous polynomial.
    pub fn nf_poly(&self, p: &Polynomial<F>) -> Result<SparseVec<F::Elem>> {
        let field = self.gb.ring().field();
        let Some(d) = p.degree() else { return Ok(Vec::new()) };
        if !p.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(p.to_string()));
        }
        if d > self.max_degree() {
            return Err(AlgebraError::Precondition(format!("degree {d} beyond quotient table")));
        }
        let mut entries = Vec::new();
        for (m, c) in p.terms() {
            self.for_each_nf_term(m, |i, v| entries.push((i, field.mul(c, v))));
        }
        Ok(normalize(field, entries))
    }

    /// The polynomial with coordinates `v` in degree `d`.
    pub fn to_polynomial(&self, d: u32, v: &SparseVec<F::Elem>) -> Polynomial<F> {
        let basis = &self.pieces[d as usize].basis;
        Polynomial::from_terms(self.gb.ring(), v.iter().map(|(i, c)| (basis[*i].clone(), c.clone())))
    }
}
