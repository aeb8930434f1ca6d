//! Sparse exact linear algebra: ranks and kernels over a [`Field`].

use crate::error::{AlgebraError, Result};
use crate::field::Field;

/// Sparse vector as `(index, value)` pairs sorted by index, no zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Refuse systems with more than this many potential entries.
pub const DEFAULT_ENTRY_LIMIT: usize = 4_000_000_000;

/// `a - c * b` for sorted sparse vectors.
pub fn axpy<F: Field>(field: &F, a: &SparseVec<F::Elem>, c: &F::Elem, b: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ia, va) = &a[i];
        let (ib, vb) = &b[j];
        if ia < ib {
            out.push((*ia, va.clone()));
            i += 1;
        } else if ib < ia {
            out.push((*ib, field.neg(&field.mul(c, vb))));
            j += 1;
        } else {
            let v = field.sub(va, &field.mul(c, vb));
            if !field.is_zero(&v) {
                out.push((*ia, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(k, v)| (*k, field.neg(&field.mul(c, v)))));
    out
}

/// Collects unsorted `(index, value)` contributions into a sorted sparse
/// vector, summing duplicates.
pub fn normalize<F: Field>(field: &F, mut entries: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(entries.len());
    for (k, v) in entries {
        match out.last_mut() {
            Some((lk, lv)) if *lk == k => *lv = field.add(lv, &v),
            _ => out.push((k, v)),
        }
    }
    out.retain(|(_, v)| !field.is_zero(v));
    out
}

fn make_monic<F: Field>(field: &F, row: &mut SparseVec<F::Elem>) {
    let inv = field.inv(&row[0].1).expect("pivot is nonzero");
    for (_, v) in row.iter_mut() {
        *v = field.mul(v, &inv);
    }
}

/// Rank of the matrix whose rows are `rows` (entries indexed by column in
/// `0..ncols`). Columns are relabelled by increasing fill so that sparse
/// columns become pivots first; rows are processed sparsest first. Both
/// choices are deterministic.
pub fn rank<F: Field>(field: &F, rows: Vec<SparseVec<F::Elem>>, ncols: usize) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    let mut count = vec![0usize; ncols];
    for r in &rows {
        for (c, _) in r {
            count[*c] += 1;
        }
    }
    let mut cols: Vec<usize> = (0..ncols).collect();
    cols.sort_by_key(|&c| (count[c], c));
    let mut relabel = vec![0usize; ncols];
    for (new, &old) in cols.iter().enumerate() {
        relabel[old] = new;
    }
    let mut rows: Vec<SparseVec<F::Elem>> = rows
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let mut r: SparseVec<F::Elem> = r.into_iter().map(|(c, v)| (relabel[c], v)).collect();
            r.sort_by_key(|e| e.0);
            r
        })
        .collect();
    rows.sort_by_key(|r| (r.len(), r[0].0));

    let mut pivots: Vec<Option<SparseVec<F::Elem>>> = vec![None; ncols];
    let mut rank = 0;
    for mut row in rows {
        while let Some((lead, c)) = row.first().cloned() {
            match &pivots[lead] {
                Some(p) => row = axpy(field, &row, &c, p),
                None => {
                    make_monic(field, &mut row);
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
        if rank == ncols {
            break;
        }
    }
    rank
}

/// Reduced row echelon form of the given rows; returns the nonzero reduced
/// rows with their pivot columns, sorted by pivot.
pub fn rref<F: Field>(field: &F, rows: Vec<SparseVec<F::Elem>>, ncols: usize) -> Vec<SparseVec<F::Elem>> {
    let mut pivots: Vec<Option<SparseVec<F::Elem>>> = vec![None; ncols];
    for mut row in rows {
        row.retain(|(_, v)| !field.is_zero(v));
        while let Some((lead, c)) = row.first().cloned() {
            match &pivots[lead] {
                Some(p) => row = axpy(field, &row, &c, p),
                None => {
                    make_monic(field, &mut row);
                    pivots[lead] = Some(row);
                    break;
                }
            }
        }
    }
    // Back substitution, last pivot first.
    let pivot_cols: Vec<usize> = (0..ncols).filter(|&c| pivots[c].is_some()).collect();
    for (k, &pc) in pivot_cols.iter().enumerate().rev() {
        let prow = pivots[pc].clone().unwrap();
        for &qc in &pivot_cols[..k] {
            let q = pivots[qc].as_ref().unwrap();
            if let Ok(pos) = q.binary_search_by_key(&pc, |e| e.0) {
                let c = q[pos].1.clone();
                let updated = axpy(field, q, &c, &prow);
                pivots[qc] = Some(updated);
            }
        }
    }
    pivots.into_iter().flatten().collect()
}

/// Basis of `{ v : M v = 0 }` where `M` has the given rows and `ncols`
/// columns. One basis vector per free column, in increasing column order.
pub fn kernel<F: Field>(field: &F, rows: Vec<SparseVec<F::Elem>>, ncols: usize) -> Vec<SparseVec<F::Elem>> {
    let reduced = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for r in &reduced {
        is_pivot[r[0].0] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v: Vec<(usize, F::Elem)> = vec![(free, field.one())];
        for r in &reduced {
            if let Ok(pos) = r.binary_search_by_key(&free, |e| e.0) {
                v.push((r[0].0, field.neg(&r[pos].1)));
            }
        }
        v.sort_by_key(|e| e.0);
        basis.push(v);
    }
    basis
}

/// Guard against building linear systems that cannot fit in memory.
pub fn check_shape(rows: usize, cols: usize, limit: usize) -> Result<()> {
    if rows.saturating_mul(cols) > limit {
        return Err(AlgebraError::ResourceGuard { rows, cols, limit });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn dense_rank(f: &PrimeField, mut m: Vec<Vec<u32>>) -> usize {
        let ncols = m.first().map(|r| r.len()).unwrap_or(0);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, p);
            let inv = f.inv(&m[rank][c]).unwrap();
            for r in 0..m.len() {
                if r != rank && m[r][c] != 0 {
                    let factor = f.mul(&m[r][c], &inv);
                    for k in 0..ncols {
                        let v = f.mul(&factor, &m[rank][k]);
                        m[r][k] = f.sub(&m[r][k], &v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn to_sparse(m: &[Vec<u32>]) -> Vec<SparseVec<u32>> {
        m.iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(i, v)| (i, *v)).collect())
            .collect()
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense(m in prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0u32), 1 => 0u32..7], 6), 0..8)) {
            let f = PrimeField::new(7).unwrap();
            let sparse = to_sparse(&m);
            prop_assert_eq!(rank(&f, sparse.clone(), 6), dense_rank(&f, m.clone()));
            let ker = kernel(&f, sparse.clone(), 6);
            prop_assert_eq!(ker.len(), 6 - dense_rank(&f, m.clone()));
            for v in &ker {
                for row in &sparse {
                    let mut acc = 0u32;
                    for (c, a) in row {
                        if let Ok(p) = v.binary_search_by_key(c, |e| e.0) {
                            acc = f.add(&acc, &f.mul(a, &v[p].1));
                        }
                    }
                    prop_assert_eq!(acc, 0);
                }
            }
        }
    }

    #[test]
    fn shape_guard() {
        assert!(check_shape(10, 10, 50).is_err());
        assert!(check_shape(5, 10, 50).is_ok());
    }
}
