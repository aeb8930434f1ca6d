use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::monomial::Monomial;
use crate::poly::ring::{check_same, Ring};

/// Sparse polynomial. Terms are kept sorted in decreasing order under the
/// ring's monomial order and never carry a zero coefficient.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring.compatible(&other.ring)
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Ring<F>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring<F>, c: F::Elem) -> Self {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Ring<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Ring<F>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::variable(ring.nvars(), i), ring.field().one())],
        }
    }

    pub fn monomial(ring: &Ring<F>, m: Monomial, c: F::Elem) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(ring: &Ring<F>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let field = ring.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already sorted and free of zeros (checked in debug builds).
    pub(crate) fn from_sorted_terms(ring: &Ring<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !ring.field().is_zero(c)));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// All monomials share one degree. The zero polynomial counts as
    /// homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Whether every term has degree exactly one.
    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.iter().all(|(m, _)| m.degree() == 1)
    }

    pub fn neg(&self) -> Self {
        let f = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// `c * m * self`; term order is preserved because orders are
    /// multiplicative.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let f = self.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(c, m);
        }
        if other.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(c, m);
        }
        let f = self.field();
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = f.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = f.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        let order = self.ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let f = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), if subtract { f.neg(cb) } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !f.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if subtract { f.neg(c) } else { c.clone() })),
        );
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `self - c * m * g`, merged in one pass.
    pub(crate) fn sub_term_multiple(&self, c: &F::Elem, m: &Monomial, g: &Self) -> Self {
        let f = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + g.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(t, a)| (t.mul(m), f.neg(&f.mul(a, c)))).peekable();
        while i < self.terms.len() {
            let Some((mb, _)) = gi.peek() else { break };
            let (ma, ca) = &self.terms[i];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push(gi.next().unwrap());
                }
                Ordering::Equal => {
                    let (mb, cb) = gi.next().unwrap();
                    let s = f.add(ca, &cb);
                    if !f.is_zero(&s) {
                        out.push((mb, s));
                    }
                    i += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(gi);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Replaces `x_i` by `images[i]` and expands.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => {
                // Zero-variable ring: the polynomial is a constant.
                return Ok(self.clone());
            }
        };
        for p in images {
            check_same(&target, &p.ring)?;
        }
        let f = self.field();
        let mut powers: Vec<Vec<Polynomial<F>>> =
            images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(&target, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul_unchecked(&images[v]);
                    powers[v].push(next);
                }
                prod = prod.mul_unchecked(&powers[v][e as usize]);
                if prod.is_zero() {
                    break;
                }
            }
            for (t, a) in prod.terms {
                match acc.get_mut(&t) {
                    Some(v) => *v = f.add(v, &a),
                    None => {
                        acc.insert(t, a);
                    }
                }
            }
        }
        Ok(Polynomial::from_terms(&target, acc))
    }

    /// Re-expresses the polynomial in a compatible ring (same field and
    /// variables), typically to change the monomial order.
    pub fn to_ring(&self, ring: &Ring<F>) -> Result<Self> {
        if ring.field() != self.ring.field() || ring.names() != self.ring.names() {
            return Err(AlgebraError::RingMismatch(
                "target ring has different field or variables".into(),
            ));
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Moves the polynomial into `ring`, sending variable `i` to variable
    /// `var_map[i]` of the target.
    pub fn rename_into(&self, ring: &Ring<F>, var_map: &[usize]) -> Result<Self> {
        if var_map.len() != self.ring.nvars() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.ring.nvars(),
                got: var_map.len(),
            });
        }
        let n = ring.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[var_map[i]] += x;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Coefficient of each variable in a linear form (entries of degree
    /// other than one are ignored).
    pub fn linear_coefficients(&self) -> Vec<F::Elem> {
        let f = self.field();
        let mut out = vec![f.zero(); self.ring.nvars()];
        for (m, c) in &self.terms {
            if m.degree() == 1 {
                let v = m.exponents().iter().position(|&e| e == 1).unwrap();
                out[v] = c.clone();
            }
        }
        out
    }

    /// Value at a point with coordinates in the field.
    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.ring.nvars() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let f = self.field();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = f.mul(&t, &point[v]);
                }
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let f = self.field();
        let terms = self.terms.iter().filter(|(m, _)| m.exponent(var) > 0).map(|(m, c)| {
            let e = m.exponent(var);
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            (Monomial::from_exponents(exps), f.mul(c, &f.from_i64(e as i64)))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Scales so that all coefficients are integers (no-op over `F_p`).
    pub fn clear_denominators(&self) -> Self {
        let coeffs: Vec<_> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        let s = self.field().clearing_scalar(&coeffs);
        self.scale(&s)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let f = self.field();
        let names = self.ring.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = f
                .to_integer_string(c)
                .unwrap_or_else(|| format!("({c:?})"));
            let (neg, abs) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    write!(out, "-")?;
                }
            } else {
                write!(out, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != "1" || m.degree() == 0 {
                factors.push(abs);
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            write!(out, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{self}")
    }
}
