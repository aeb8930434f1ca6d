use super::*;
use crate::field::{PrimeField, Rationals};
use crate::linalg::{self, SparseVec};
use crate::poly::{parse_polynomial, Ring};

fn ring<F: Field>(f: F, n: usize) -> Ring<F> {
    PolyRing::with_prefix(f, "x", n, MonomialOrder::Grevlex)
}

fn gb_of<F: Field>(r: &Ring<F>, gens: &[&str]) -> GroebnerBasis<F> {
    let gens = gens.iter().map(|g| parse_polynomial(r, g, 1).unwrap()).collect();
    buchberger(&Ideal::new(r, gens).unwrap(), MonomialOrder::Grevlex, GbOptions::default()).unwrap()
}

const TWISTED_CUBIC: [&str; 3] = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"];

fn direct(max_i: usize, max_row: usize) -> BettiOptions {
    BettiOptions {
        max_i: Some(max_i),
        max_row: Some(max_row),
        method: BettiMethod::Direct,
        ..BettiOptions::default()
    }
}

fn entries(t: &BettiTable) -> Vec<(usize, usize, u64)> {
    t.entries().collect()
}

/// Dense Koszul homology at tiny size: kernel dimension minus image rank
/// from explicitly assembled boundary matrices.
fn brute_force_betti(gb: &GroebnerBasis<PrimeField>, i: usize, r: u32) -> u64 {
    let q = GradedQuotient::new(gb, r + 2).unwrap();
    let f = gb.ring().field();
    let (out_rows, _) = koszul_block(&q, i, r);
    let n = q.nvars();
    let dim = crate::hilbert::binomial(n as i64, i as i64) as usize * q.dim(r);
    let ker = if i == 0 { dim } else { linalg::kernel(f, transpose(&out_rows), dim).len() };
    let img = if r == 0 {
        0
    } else {
        let (in_rows, in_cols) = koszul_block(&q, i + 1, r - 1);
        linalg::rank(f, in_rows, in_cols)
    };
    (ker - img) as u64
}

fn transpose(rows: &[SparseVec<u32>]) -> Vec<SparseVec<u32>> {
    let mut cols: Vec<SparseVec<u32>> = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            while cols.len() <= *c {
                cols.push(Vec::new());
            }
            cols[*c].push((r, *v));
        }
    }
    cols
}

#[test]
fn twisted_cubic_table() {
    let r = ring(PrimeField::new(32003).unwrap(), 4);
    let g = gb_of(&r, &TWISTED_CUBIC);
    let want = vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)];
    assert_eq!(entries(&betti_table_with(&g, &direct(4, 3)).unwrap()), want);
    let reduced = betti_table_with(&g, &BettiOptions::default()).unwrap();
    assert_eq!(entries(&reduced), want);
    assert!(reduced.is_exact());
    for i in 0..=3 {
        for rr in 0..=2 {
            assert_eq!(brute_force_betti(&g, i, rr), reduced.get(i, i + rr as usize));
        }
    }
}

#[test]
fn zero_ideal_table() {
    let r = ring(PrimeField::new(32003).unwrap(), 3);
    let g = gb_of(&r, &[]);
    let t = betti_table_with(&g, &BettiOptions::default()).unwrap();
    assert_eq!(entries(&t), vec![(0, 0, 1)]);
    assert!(t.is_exact());
    assert!(t.n_dp_check(2, 5).unwrap());
    let t = betti_table_with(&g, &direct(3, 4)).unwrap();
    assert_eq!(entries(&t), vec![(0, 0, 1)]);
}

#[test]
fn non_acm_example() {
    // <x0*x1, x0*x2> in P^3: resolution 1, 2, 1 of length 2 > codim 1.
    let r = ring(PrimeField::new(32003).unwrap(), 4);
    let g = gb_of(&r, &["x0*x1", "x0*x2"]);
    let t = betti_table_with(&g, &BettiOptions::default()).unwrap();
    assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 2), (2, 3, 1)]);
    assert!(!t.is_acm(1).unwrap());
    let d = betti_table_with(&g, &direct(4, 3)).unwrap();
    assert_eq!(entries(&d), entries(&t));
}

#[test]
fn reduced_and_direct_agree() {
    let cases: Vec<(usize, Vec<&str>)> = vec![
        (5, vec!["x0*x2 - x1^2", "x0*x3 - x1*x2", "x0*x4 - x1*x3", "x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]),
        (5, vec!["x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3"]),
        (4, vec!["x0^2", "x0*x1", "x1^3 - x2*x3^2"]),
        (4, vec!["x0*x1", "x2*x3"]),
        (3, vec!["x0^2 - x1*x2", "x0*x1"]),
    ];
    for (n, gens) in cases {
        let r = ring(PrimeField::new(32003).unwrap(), n);
        let g = gb_of(&r, &gens);
        let red = betti_table_with(&g, &BettiOptions::default()).unwrap();
        let dir = betti_table_with(&g, &direct(n, red.reg() + 1)).unwrap();
        assert_eq!(entries(&red), entries(&dir), "{gens:?}");
        let s = HilbertSeries::of(&g);
        assert!(alternating_sum_holds(&red, &s, 10));
    }
}

#[test]
fn boundary_squares_to_zero() {
    let r = ring(PrimeField::new(32003).unwrap(), 5);
    let g = gb_of(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2", "x4^3 - x0*x1*x2"]);
    let q = GradedQuotient::new(&g, 6).unwrap();
    let f = g.ring().field();
    for i in 2..=5 {
        for rr in 0..4 {
            let (upper, _) = koszul_block(&q, i, rr);
            let (lower, _) = koszul_block(&q, i - 1, rr + 1);
            // row vector of upper times the lower matrix
            for row in &upper {
                let mut acc: Vec<(usize, u32)> = Vec::new();
                for (c, v) in row {
                    for (k, w) in &lower[*c] {
                        acc.push((*k, f.mul(v, w)));
                    }
                }
                assert!(linalg::normalize(f, acc).is_empty());
            }
        }
    }
}

#[test]
fn linear_section_matches_first_difference() {
    // ACM fixtures: cutting by one general linear form takes first differences.
    let r = ring(PrimeField::new(32003).unwrap(), 5);
    let g = gb_of(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x0*x4 - x1*x3", "x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]);
    let cut = regular_cut(&g, 11, GbOptions::default()).unwrap();
    assert_eq!(cut.length, 2);
    assert!(cut.artinian);
    let s = HilbertSeries::of(&g);
    let c = HilbertSeries::of(&cut.gb);
    for m in 0..=6 {
        let second = s.value(m) - 2 * s.value(m - 1) + s.value(m - 2);
        assert_eq!(c.value(m), second);
    }
}

#[test]
fn two_primes_and_rationals_agree() {
    let tables: Vec<Vec<(usize, usize, u64)>> = [32003u64, 31013]
        .iter()
        .map(|&p| {
            let r = ring(PrimeField::new(p).unwrap(), 5);
            let g = gb_of(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x0*x4 - x1*x3", "x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]);
            entries(&betti_table_with(&g, &BettiOptions::default()).unwrap())
        })
        .collect();
    assert_eq!(tables[0], tables[1]);
    let r = ring(Rationals, 4);
    let g = gb_of(&r, &TWISTED_CUBIC);
    let q = entries(&betti_table_with(&g, &BettiOptions::default()).unwrap());
    assert_eq!(q, vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
}

#[test]
fn resource_guard_reports_shape() {
    let r = ring(PrimeField::new(32003).unwrap(), 4);
    let g = gb_of(&r, &TWISTED_CUBIC);
    let opts = BettiOptions {
        entry_limit: 10,
        ..direct(4, 2)
    };
    let err = betti_table_with(&g, &opts).unwrap_err();
    assert!(err.is_resource_limit());
}
