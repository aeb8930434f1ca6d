use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 16]>;

/// A monomial as a dense exponent vector with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = u16>>(exps: I) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn mul_var(&self, var: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[var] += 1;
        m.degree += 1;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` is set when variable `i` (mod 64) occurs.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
    }

    /// Plain lexicographic comparison of exponent vectors.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.exps.iter().zip(&other.exps) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Graded reverse lexicographic comparison.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Grevlex restricted to the variable range `lo..hi`.
    pub fn cmp_grevlex_range(&self, other: &Monomial, lo: usize, hi: usize) -> Ordering {
        let da: u32 = self.exps[lo..hi].iter().map(|&e| e as u32).sum();
        let db: u32 = other.exps[lo..hi].iter().map(|&e| e as u32).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps[lo..hi].iter().zip(&other.exps[lo..hi]).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Supported monomial orders. All of them refine divisibility.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// The first `n` variables are ranked above the rest; grevlex inside
    /// each block.
    Elimination(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::Elimination(block) => {
                let n = a.nvars();
                let block = block.min(n);
                match a.cmp_grevlex_range(b, 0, block) {
                    Ordering::Equal => a.cmp_grevlex_range(b, block, n),
                    o => o,
                }
            }
        }
    }
}

/// All exponent vectors of total degree `degree` in `nvars` variables,
/// in lexicographically decreasing order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, var: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if var + 1 == nvars {
            cur.push(left as u16);
            out.push(Monomial::from_exponents(cur.iter().copied()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u16);
            rec(nvars, var + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(nvars, 0, degree, &mut Vec::with_capacity(nvars), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_up_to(nvars: usize, deg: u32) -> Vec<Monomial> {
        (0..=deg).flat_map(|d| monomials_of_degree(nvars, d)).collect()
    }

    #[test]
    fn degree_is_cached_sum() {
        let m = Monomial::from_exponents([2, 0, 3]);
        assert_eq!(m.degree(), 5);
        assert_eq!(m.mul(&Monomial::variable(3, 1)).degree(), 6);
        assert_eq!(m.lcm(&Monomial::from_exponents([0, 4, 1])).degree(), 9);
    }

    #[test]
    fn counts_match_binomials() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(8, 4).len(), 330);
    }

    #[test]
    fn orders_are_total_multiplicative_and_refine_divisibility() {
        let monos = all_up_to(4, 4);
        let orders = [
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination(1),
            MonomialOrder::Elimination(2),
        ];
        let shifts = all_up_to(4, 1);
        for order in orders {
            for a in &monos {
                for b in &monos {
                    let o = order.cmp(a, b);
                    assert_eq!(o == Ordering::Equal, a == b);
                    assert_eq!(o.reverse(), order.cmp(b, a));
                    if a.divides(b) && a != b {
                        assert_eq!(o, Ordering::Less, "{order:?} {a:?} {b:?}");
                    }
                    for t in &shifts {
                        assert_eq!(order.cmp(&a.mul(t), &b.mul(t)), o);
                    }
                }
            }
        }
    }

    #[test]
    fn grevlex_on_degree_two() {
        // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
        let mut m = monomials_of_degree(3, 2);
        m.sort_by(|a, b| b.cmp_grevlex(a));
        let exps: Vec<_> = m.iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(
            exps,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn elimination_ranks_first_block() {
        let order = MonomialOrder::Elimination(1);
        let a = Monomial::from_exponents([1, 0, 0]);
        let b = Monomial::from_exponents([0, 5, 0]);
        assert_eq!(order.cmp(&a, &b), Ordering::Greater);
    }
}
