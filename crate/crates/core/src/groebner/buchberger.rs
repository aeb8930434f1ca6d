use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::ideal::{weighted_degree, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

pub const DEFAULT_DEGREE_CAP: u32 = 12;

#[derive(Clone, Copy, Debug)]
pub struct GbOptions {
    /// Work in any degree above this aborts with [`AlgebraError::DegreeCap`].
    pub degree_cap: u32,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

/// Reduced Gröbner basis, sorted by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    elements: Vec<Polynomial<F>>,
    weights: Option<Vec<u32>>,
    lead: Vec<(Monomial, u64)>,
    truncated_at: Option<u32>,
}

impl<F: Field> GroebnerBasis<F> {
    pub(crate) fn from_reduced(ring: &Ring<F>, elements: Vec<Polynomial<F>>, weights: Option<Vec<u32>>) -> Self {
        let lead = elements
            .iter()
            .map(|g| {
                let m = g.leading_monomial().unwrap().clone();
                let mask = m.support_mask();
                (m, mask)
            })
            .collect();
        GroebnerBasis {
            ring: ring.clone(),
            elements,
            weights,
            lead,
            truncated_at: None,
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    /// Degree through which a truncated basis is valid.
    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.lead.iter().map(|(m, _)| m)
    }

    /// True when the basis contains a nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.lead.iter().any(|(m, _)| m.degree() == 0)
    }

    /// Index of the first element whose leading monomial divides `m`.
    #[inline]
    pub fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        find_divisor(&self.lead, m)
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.find_divisor(m).is_none()
    }

    pub fn as_ideal(&self) -> Ideal<F> {
        match &self.weights {
            None => Ideal::new(&self.ring, self.elements.clone()),
            Some(w) => Ideal::with_weights(&self.ring, self.elements.clone(), w.clone()),
        }
        .expect("basis elements are homogeneous")
    }
}

#[inline]
pub(crate) fn find_divisor(lead: &[(Monomial, u64)], m: &Monomial) -> Option<usize> {
    let mask = m.support_mask();
    lead.iter()
        .position(|(l, lm)| lm & !mask == 0 && l.divides(m))
}

/// Heap entry ordered by the monomial order, largest first.
struct Key {
    m: Monomial,
    order: MonomialOrder,
}

impl PartialEq for Key {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for Key {}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order.cmp(&self.m, &other.m)
    }
}

/// Full reduction of `f` by monic `basis` elements (leading data in `lead`),
/// always using the first available divisor. Terms are kept in a heap with
/// a coefficient map, so each reduction step costs the length of the
/// divisor rather than of the running remainder.
pub(crate) fn reduce_full<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    lead: &[(Monomial, u64)],
) -> Polynomial<F> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let order = ring.order();
    let mut coeffs: FxHashMap<Monomial, F::Elem> = FxHashMap::default();
    let mut heap = BinaryHeap::with_capacity(f.len() * 2);
    for (m, c) in f.terms() {
        coeffs.insert(m.clone(), c.clone());
        heap.push(Key { m: m.clone(), order });
    }
    let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some(Key { m, .. }) = heap.pop() {
        let c = coeffs.remove(&m).expect("heap and map agree");
        if field.is_zero(&c) {
            continue;
        }
        match find_divisor(lead, &m) {
            Some(k) => {
                let q = lead[k].0.quotient_of(&m);
                for (t, a) in &basis[k].terms()[1..] {
                    let tm = t.mul(&q);
                    let delta = field.neg(&field.mul(a, &c));
                    match coeffs.get_mut(&tm) {
                        Some(e) => *e = field.add(e, &delta),
                        None => {
                            coeffs.insert(tm.clone(), delta);
                            heap.push(Key { m: tm, order });
                        }
                    }
                }
            }
            None => rem.push((m, c)),
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

struct State<'a, F: Field> {
    weights: Option<&'a [u32]>,
    basis: Vec<Polynomial<F>>,
    lead: Vec<(Monomial, u64)>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    active_basis: Vec<Polynomial<F>>,
    active_lead: Vec<(Monomial, u64)>,
}

impl<'a, F: Field> State<'a, F> {
    /// Gebauer-Möller update with the coprime and chain criteria.
    fn insert(&mut self, h: Polynomial<F>) {
        let h_lm = h.leading_monomial().unwrap().clone();
        let new = self.basis.len();
        let olds: Vec<usize> = (0..new).filter(|&i| self.active[i]).collect();

        // Candidate pairs (g, h).
        let cands: Vec<(usize, Monomial, bool)> = olds
            .iter()
            .map(|&g| {
                let lm = &self.lead[g].0;
                (g, lm.lcm(&h_lm), lm.is_coprime(&h_lm))
            })
            .collect();
        let mut keep = vec![false; cands.len()];
        let mut decided = vec![false; cands.len()];
        for a in 0..cands.len() {
            decided[a] = true;
            let (_, ref la, coprime) = cands[a];
            if coprime {
                keep[a] = true;
                continue;
            }
            let dominated = cands.iter().enumerate().any(|(b, (_, lb, _))| {
                b != a && (!decided[b] || keep[b]) && lb.divides(la)
            });
            keep[a] = !dominated;
        }
        // Old pairs killed by the chain criterion.
        self.pairs.retain(|p| {
            !(h_lm.divides(&p.lcm)
                && self.lead[p.i].0.lcm(&h_lm) != p.lcm
                && self.lead[p.j].0.lcm(&h_lm) != p.lcm)
        });
        for (a, (g, lcm, coprime)) in cands.into_iter().enumerate() {
            if keep[a] && !coprime {
                let degree = weighted_degree(self.weights, &lcm);
                self.pairs.push(Pair {
                    i: g,
                    j: new,
                    lcm,
                    degree,
                });
            }
        }
        for &g in &olds {
            if h_lm.divides(&self.lead[g].0) {
                self.active[g] = false;
            }
        }
        let keep_active: Vec<bool> = self.active_lead.iter().map(|(l, _)| !h_lm.divides(l)).collect();
        let mut it = keep_active.iter();
        self.active_basis.retain(|_| *it.next().unwrap());
        let mut it = keep_active.iter();
        self.active_lead.retain(|_| *it.next().unwrap());
        let mask = h_lm.support_mask();
        self.active_basis.push(h.clone());
        self.active_lead.push((h_lm.clone(), mask));
        self.basis.push(h);
        self.lead.push((h_lm, mask));
        self.active.push(true);
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial<F> {
        let f = self.basis[p.i].field().clone();
        let a = self.lead[p.i].0.quotient_of(&p.lcm);
        let b = self.lead[p.j].0.quotient_of(&p.lcm);
        let left = self.basis[p.i].mul_term(&f.one(), &a);
        left.sub_term_multiple(&f.one(), &b, &self.basis[p.j])
    }
}

/// Buchberger's algorithm with the normal selection strategy: pairs are
/// processed by increasing lcm degree, ties broken by lex order on the lcm.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, order: MonomialOrder, opts: GbOptions) -> Result<GroebnerBasis<F>> {
    run(ideal, order, opts.degree_cap, false)
}

/// Basis of the ideal through degree `max_degree`: its leading monomials
/// generate the initial ideal in every degree up to `max_degree`, which is
/// all that Hilbert function values in that range need.
pub fn truncated_basis<F: Field>(ideal: &Ideal<F>, order: MonomialOrder, max_degree: u32) -> GroebnerBasis<F> {
    let mut gb = run(ideal, order, max_degree, true).expect("truncation never hits the cap");
    gb.truncated_at = Some(max_degree);
    gb
}

fn run<F: Field>(ideal: &Ideal<F>, order: MonomialOrder, cap: u32, truncate: bool) -> Result<GroebnerBasis<F>> {
    let ring = ideal.ring().with_order(order);
    let weights = ideal.weights();
    let mut inputs: Vec<(u32, Polynomial<F>)> = ideal
        .generators()
        .iter()
        .map(|g| {
            let g = g.to_ring(&ring).expect("same variables");
            (weighted_degree(weights, g.leading_monomial().unwrap()), g)
        })
        .collect();
    inputs.sort_by(|a, b| a.0.cmp(&b.0));
    let mut inputs = std::collections::VecDeque::from(inputs);

    let mut st = State {
        weights,
        basis: Vec::new(),
        lead: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        active_basis: Vec::new(),
        active_lead: Vec::new(),
    };

    loop {
        let next_pair = st.pairs.iter().map(|p| p.degree).min();
        let next_input = inputs.front().map(|(d, _)| *d);
        let d = match (next_pair, next_input) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if d > cap {
            if truncate {
                break;
            }
            return Err(AlgebraError::DegreeCap { cap, degree: d });
        }
        let mut todo: Vec<Polynomial<F>> = Vec::new();
        let (mut now, rest): (Vec<Pair>, Vec<Pair>) =
            std::mem::take(&mut st.pairs).into_iter().partition(|p| p.degree == d);
        st.pairs = rest;
        now.sort_by(|a, b| a.lcm.cmp_lex(&b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
        for p in &now {
            todo.push(st.s_polynomial(p));
        }
        while inputs.front().map(|(dd, _)| *dd == d).unwrap_or(false) {
            todo.push(inputs.pop_front().unwrap().1);
        }
        for f in todo {
            let h = reduce_full(&f, &st.active_basis, &st.active_lead);
            if h.is_zero() {
                continue;
            }
            st.insert(h.monic());
        }
    }

    // Interreduce the minimal basis.
    let (basis, lead) = (st.active_basis, st.active_lead);
    let mut reduced = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<Polynomial<F>> = basis
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, g)| g.clone())
            .collect();
        let others_lead: Vec<(Monomial, u64)> = lead
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, l)| l.clone())
            .collect();
        let g = &basis[k];
        let head = Polynomial::from_sorted_terms(&ring, vec![g.terms()[0].clone()]);
        let tail = Polynomial::from_sorted_terms(&ring, g.terms()[1..].to_vec());
        let tail = reduce_full(&tail, &others, &others_lead);
        reduced.push(head.add(&tail).expect("same ring"));
    }
    reduced.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(GroebnerBasis::from_reduced(
        &ring,
        reduced,
        weights.map(|w| w.to_vec()),
    ))
}
