use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial, Ring};

/// A finitely generated ideal whose generators are homogeneous for a
/// positive grading (the standard grading unless weights are given).
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    generators: Vec<Polynomial<F>>,
    weights: Option<Vec<u32>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; any non-homogeneous generator is an
    /// error.
    pub fn new(ring: &Ring<F>, generators: Vec<Polynomial<F>>) -> Result<Self> {
        Self::build(ring, generators, None)
    }

    /// Ideal homogeneous for the grading `deg x_i = weights[i]`.
    pub fn with_weights(ring: &Ring<F>, generators: Vec<Polynomial<F>>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != ring.nvars() {
            return Err(AlgebraError::LengthMismatch {
                expected: ring.nvars(),
                got: weights.len(),
            });
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(AlgebraError::Precondition("weights must be positive".into()));
        }
        let weights = if weights.iter().all(|&w| w == 1) {
            None
        } else {
            Some(weights)
        };
        Self::build(ring, generators, weights)
    }

    fn build(ring: &Ring<F>, generators: Vec<Polynomial<F>>, weights: Option<Vec<u32>>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !g.ring().compatible(ring) {
                return Err(AlgebraError::RingMismatch("generator from a different ring".into()));
            }
            if g.is_zero() {
                continue;
            }
            let w0 = weighted_degree(weights.as_deref(), &g.terms()[0].0);
            if g.terms().iter().any(|(m, _)| weighted_degree(weights.as_deref(), m) != w0) {
                return Err(AlgebraError::NotHomogeneous(g.to_string()));
            }
            gens.push(g.to_ring(ring)?);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            weights,
        })
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            weights: None,
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn degree_of(&self, m: &Monomial) -> u32 {
        weighted_degree(self.weights.as_deref(), m)
    }

    /// Smallest generator degree, `None` for the zero ideal.
    pub fn min_degree(&self) -> Option<u32> {
        self.generators.iter().filter_map(|g| g.degree()).min()
    }
}

pub(crate) fn weighted_degree(weights: Option<&[u32]>, m: &Monomial) -> u32 {
    match weights {
        None => m.degree(),
        Some(w) => m
            .exponents()
            .iter()
            .zip(w)
            .map(|(&e, &w)| e as u32 * w)
            .sum(),
    }
}
