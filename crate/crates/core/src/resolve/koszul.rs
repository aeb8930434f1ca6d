use std::collections::{BTreeMap, HashMap};

use crate::error::Result;
use crate::field::Field;
use crate::hilbert::binomial;
use crate::linalg::{check_shape, rank, SparseVec};
use crate::quotient::GradedQuotient;

/// All `i`-subsets of `0..n` as bit masks, in colex order (so the position
/// of a mask equals [`subset_rank`]).
pub fn subsets(n: usize, i: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if i > n {
        return out;
    }
    if i == 0 {
        out.push(0);
        return out;
    }
    // Gosper's hack enumerates masks of a fixed popcount in increasing
    // numeric order, which is colex order.
    let mut m: u64 = (1u64 << i) - 1;
    while m < (1u64 << n) {
        out.push(m as u32);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

/// Colex rank of a subset mask: `sum_k C(t_k, k+1)` over its elements
/// `t_0 < t_1 < ...`.
pub fn subset_rank(mask: u32) -> usize {
    let mut rank = 0usize;
    let mut k = 0i64;
    let mut bits = mask;
    while bits != 0 {
        let t = bits.trailing_zeros() as i64;
        k += 1;
        rank += binomial(t, k) as usize;
        bits &= bits - 1;
    }
    rank
}

/// Rows of the Koszul boundary `wedge^i V (x) A_r -> wedge^{i-1} V (x) A_{r+1}`
/// in the standard-monomial bases. Row `(T, b)` sits at
/// `rank(T) * dim A_r + b`; column `(U, c)` at `rank(U) * dim A_{r+1} + c`.
/// Sign convention: `d(e_T (x) m) = sum_k (-1)^k e_{T - t_k} (x) x_{t_k} m`.
pub fn koszul_block<F: Field>(q: &GradedQuotient<F>, i: usize, r: u32) -> (Vec<SparseVec<F::Elem>>, usize) {
    let n = q.nvars();
    let field = q.groebner_basis().ring().field().clone();
    let src_dim = q.dim(r);
    let dst_dim = q.dim(r + 1);
    let ncols = if i == 0 { 0 } else { binomial(n as i64, i as i64 - 1) as usize * dst_dim };
    let mut rows = Vec::new();
    if i == 0 || i > n {
        return (rows, ncols);
    }
    let basis = &q.piece(r).basis;
    for t in subsets(n, i) {
        for b in basis {
            let mut entries: Vec<(usize, F::Elem)> = Vec::new();
            let mut bits = t;
            let mut k = 0;
            while bits != 0 {
                let var = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let offset = subset_rank(t & !(1 << var)) * dst_dim;
                let neg = k % 2 == 1;
                q.for_each_nf_term(&b.mul_var(var), |idx, c| {
                    let v = if neg { field.neg(c) } else { c.clone() };
                    entries.push((offset + idx, v));
                });
                k += 1;
            }
            rows.push(crate::linalg::normalize(&field, entries));
        }
    }
    debug_assert_eq!(rows.len(), binomial(n as i64, i as i64) as usize * src_dim);
    (rows, ncols)
}

/// Ranks of Koszul blocks, memoized by `(i, r)`.
pub(crate) struct KoszulRanks<'a, F: Field> {
    q: &'a GradedQuotient<F>,
    cache: HashMap<(usize, u32), usize>,
    entry_limit: usize,
}

impl<'a, F: Field> KoszulRanks<'a, F> {
    pub(crate) fn new(q: &'a GradedQuotient<F>, entry_limit: usize) -> Self {
        KoszulRanks {
            q,
            cache: HashMap::new(),
            entry_limit,
        }
    }

    fn rank(&mut self, i: usize, r: u32) -> Result<usize> {
        let n = self.q.nvars();
        if i == 0 || i > n || self.q.dim(r) == 0 || self.q.dim(r + 1) == 0 {
            return Ok(0);
        }
        if let Some(&v) = self.cache.get(&(i, r)) {
            return Ok(v);
        }
        let nrows = binomial(n as i64, i as i64) as usize * self.q.dim(r);
        let ncols = binomial(n as i64, i as i64 - 1) as usize * self.q.dim(r + 1);
        check_shape(nrows, ncols, self.entry_limit)?;
        let (rows, ncols) = koszul_block(self.q, i, r);
        let field = self.q.groebner_basis().ring().field();
        let v = rank(field, rows, ncols);
        self.cache.insert((i, r), v);
        Ok(v)
    }

    /// `beta_{i, i+r} = dim(wedge^i (x) A_r) - rank d_{i,r} - rank d_{i+1,r-1}`.
    pub(crate) fn betti(&mut self, i: usize, r: u32) -> Result<u64> {
        let n = self.q.nvars();
        if i > n {
            return Ok(0);
        }
        let dim = binomial(n as i64, i as i64) as usize * self.q.dim(r);
        if dim == 0 {
            return Ok(0);
        }
        let out = self.rank(i, r)?;
        let inc = if r == 0 { 0 } else { self.rank(i + 1, r - 1)? };
        Ok((dim - out - inc) as u64)
    }
}

/// Koszul homology of the quotient over the window `i <= max_i`,
/// `r <= max_row`. The quotient must be built through `max_row + 1`.
pub(crate) fn koszul_betti<F: Field>(
    q: &GradedQuotient<F>,
    max_i: usize,
    max_row: u32,
    entry_limit: usize,
) -> Result<BTreeMap<(usize, usize), u64>> {
    let mut ranks = KoszulRanks::new(q, entry_limit);
    let mut out = BTreeMap::new();
    for r in 0..=max_row {
        for i in 0..=max_i.min(q.nvars()) {
            let b = ranks.betti(i, r)?;
            if b > 0 {
                out.insert((i, i + r as usize), b);
            }
        }
    }
    Ok(out)
}
