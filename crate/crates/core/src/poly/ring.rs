use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::monomial::MonomialOrder;

/// A polynomial ring `K[x_0, ..., x_{n-1}]` together with the monomial
/// order used to sort terms.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
}

pub type Ring<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Result<Ring<F>> {
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !is_identifier(n) {
                return Err(AlgebraError::Precondition(format!("invalid variable name `{n}`")));
            }
            if !seen.insert(n.as_str()) {
                return Err(AlgebraError::Precondition(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(Arc::new(PolyRing { field, names, order }))
    }

    /// Ring with variables `prefix0 .. prefix{n-1}`.
    pub fn with_prefix(field: F, prefix: &str, nvars: usize, order: MonomialOrder) -> Ring<F> {
        let names = (0..nvars).map(|i| format!("{prefix}{i}")).collect();
        Arc::new(PolyRing { field, names, order })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same field and variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring<F> {
        Arc::new(PolyRing {
            field: self.field.clone(),
            names: self.names.clone(),
            order,
        })
    }

    /// True when polynomials of the two rings can be combined directly.
    pub fn compatible(&self, other: &PolyRing<F>) -> bool {
        self == other
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn check_same<F: Field>(a: &Ring<F>, b: &Ring<F>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a.compatible(b) {
        Ok(())
    } else {
        Err(AlgebraError::RingMismatch(format!(
            "{:?} vs {:?}",
            a.names(),
            b.names()
        )))
    }
}
