use super::*;
use crate::field::PrimeField;
use crate::poly::{parse_polynomial, PolyRing, Ring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ring(n: usize) -> Ring<PrimeField> {
    PolyRing::with_prefix(PrimeField::new(32003).unwrap(), "x", n, MonomialOrder::Grevlex)
}

fn ideal<F: Field>(r: &Ring<F>, gens: &[&str]) -> Ideal<F> {
    Ideal::new(r, gens.iter().map(|g| parse_polynomial(r, g, 1).unwrap()).collect()).unwrap()
}

fn p<F: Field>(r: &Ring<F>, s: &str) -> Polynomial<F> {
    parse_polynomial(r, s, 1).unwrap()
}

const TWISTED_CUBIC: [&str; 3] = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"];
const RNC_QUARTIC: [&str; 6] = [
    "x0*x2 - x1^2",
    "x0*x3 - x1*x2",
    "x0*x4 - x1*x3",
    "x1*x3 - x2^2",
    "x1*x4 - x2*x3",
    "x2*x4 - x3^2",
];

fn fixtures() -> Vec<Ideal<PrimeField>> {
    vec![
        ideal(&ring(4), &TWISTED_CUBIC),
        ideal(&ring(5), &RNC_QUARTIC),
        ideal(&ring(4), &["x0*x1", "x0*x2"]),
        ideal(&ring(3), &["x0^2 - x1*x2", "x0*x1"]),
        ideal(&ring(5), &["x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3"]),
    ]
}

fn gb(i: &Ideal<PrimeField>) -> GroebnerBasis<PrimeField> {
    buchberger(i, MonomialOrder::Grevlex, GbOptions::default()).unwrap()
}

#[test]
fn principal_ideal() {
    let r = ring(3);
    let g = gb(&ideal(&r, &["x0"]));
    assert_eq!(g.elements(), &[p(&r, "x0")]);
}

#[test]
fn twisted_cubic_is_already_a_basis() {
    let r = ring(4);
    let g = gb(&ideal(&r, &TWISTED_CUBIC));
    let mut got: Vec<String> = g.elements().iter().map(|e| e.to_string()).collect();
    got.sort();
    // monic versions of the generators
    let mut want: Vec<String> = TWISTED_CUBIC
        .iter()
        .map(|s| p(&r, s).monic().to_string())
        .collect();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn single_s_pair_example() {
    let r = ring(3);
    let g = gb(&ideal(&r, &["x0^2 - x1*x2", "x0*x1"]));
    assert!(g.elements().contains(&p(&r, "x1^2*x2")));
}

#[test]
fn normal_form_examples() {
    let r = ring(4);
    let g = gb(&ideal(&r, &TWISTED_CUBIC));
    for e in g.elements() {
        assert!(normal_form(e, &g).unwrap().is_zero());
    }
    let one = Polynomial::one(&r);
    assert_eq!(normal_form(&one, &g).unwrap(), one);
    assert_eq!(normal_form(&p(&r, "x1^2"), &g).unwrap(), p(&r, "x0*x2"));
}

#[test]
fn elimination_examples() {
    let r = PolyRing::new(
        PrimeField::new(32003).unwrap(),
        vec!["x0".into(), "y".into()],
        MonomialOrder::Grevlex,
    )
    .unwrap();
    let out = eliminate(&ideal(&r, &["x0 - y", "y^2"]), &[0], GbOptions::default()).unwrap();
    assert_eq!(out.generators(), &[p(&r, "x0^2")]);

    let r = PolyRing::new(
        PrimeField::new(32003).unwrap(),
        vec!["x0".into(), "x1".into(), "y".into()],
        MonomialOrder::Grevlex,
    )
    .unwrap();
    let out = eliminate(&ideal(&r, &["x0*y", "x1*y", "y^2"]), &[0, 1], GbOptions::default()).unwrap();
    assert!(out.is_zero());
}

/// Dimension of the y-free part of I_m, where y is the last variable:
/// rank of the Macaulay matrix in degree m minus the rank of its y-columns.
fn eliminated_dimension<F: Field>(i: &Ideal<F>, m: u32) -> usize {
    use crate::linalg::rank;
    use crate::poly::monomials_of_degree;
    let r = i.ring();
    let n = r.nvars();
    let cols = monomials_of_degree(n, m);
    let index: std::collections::HashMap<_, _> = cols.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
    let mut rows = Vec::new();
    for g in i.generators() {
        let dg = g.degree().unwrap();
        if dg > m {
            continue;
        }
        for t in monomials_of_degree(n, m - dg) {
            let mut row: Vec<_> = g.mul_term(&r.field().one(), &t).terms().iter().map(|(mm, c)| (index[mm], c.clone())).collect();
            row.sort_by_key(|e| e.0);
            rows.push(row);
        }
    }
    let with_y: Vec<_> = rows
        .iter()
        .map(|row| row.iter().filter(|(k, _)| cols[*k].exponent(n - 1) > 0).cloned().collect())
        .collect();
    rank(r.field(), rows, cols.len()) - rank(r.field(), with_y, cols.len())
}

/// The elimination results are checked against the Macaulay-matrix count of
/// y-free forms in each degree.
#[test]
fn elimination_certified_by_linear_algebra() {
    let f = PrimeField::new(32003).unwrap();
    let r = PolyRing::new(f, vec!["x0".into(), "x1".into(), "y".into()], MonomialOrder::Grevlex).unwrap();
    let cases: [(&[&str], [usize; 3]); 3] = [
        (&["x0*y", "x1*y", "y^2"], [0, 0, 0]),
        // y = x0 forces x0*x1 - x0^2 into the ideal
        (&["y - x0", "y*x1 - x0^2"], [1, 2, 3]),
        // every nonzero multiple of a form monic in y^2 involves y
        (&["y^2 - x0*x1"], [0, 0, 0]),
    ];
    for (gens, dims) in cases {
        let i = ideal(&r, gens);
        let out = eliminate(&i, &[0, 1], GbOptions::default()).unwrap();
        let gb = buchberger(&out, MonomialOrder::Grevlex, GbOptions::default()).unwrap();
        for (m, &want) in (2..=4).zip(&dims) {
            assert_eq!(eliminated_dimension(&i, m), want, "{gens:?} in degree {m}");
            let free = standard_monomials(&gb, m).iter().filter(|s| s.exponent(2) == 0).count();
            let got = m as usize + 1 - free;
            assert_eq!(got, want, "{gens:?}: eliminated ideal in degree {m}");
        }
    }
}

#[test]
fn twisted_cubic_from_parametrization() {
    let r = PolyRing::new(
        PrimeField::new(32003).unwrap(),
        ["s", "t", "x0", "x1", "x2", "x3"].iter().map(|s| s.to_string()).collect(),
        MonomialOrder::Grevlex,
    )
    .unwrap();
    let gens = ["x0 - s^3", "x1 - s^2*t", "x2 - s*t^2", "x3 - t^3"]
        .iter()
        .map(|g| p(&r, g))
        .collect();
    let i = Ideal::with_weights(&r, gens, vec![1, 1, 3, 3, 3, 3]).unwrap();
    let out = eliminate(&i, &[2, 3, 4, 5], GbOptions::default()).unwrap();
    assert_eq!(out.generators().len(), 3);
    let expect: Vec<_> = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]
        .iter()
        .map(|g| p(&r, g))
        .collect();
    let ge = buchberger(&Ideal::with_weights(&r, expect.clone(), vec![1, 1, 3, 3, 3, 3]).unwrap(), MonomialOrder::Grevlex, GbOptions::default()).unwrap();
    let go = buchberger(&out, MonomialOrder::Grevlex, GbOptions::default()).unwrap();
    for g in out.generators() {
        assert!(contains(&ge, g).unwrap());
    }
    for g in &expect {
        assert!(contains(&go, g).unwrap());
    }
}

#[test]
fn standard_monomial_counts() {
    let r = ring(3);
    let g = gb(&Ideal::zero(&r));
    assert_eq!(standard_monomials(&g, 2).len(), 6);
    let g = gb(&ideal(&ring(4), &TWISTED_CUBIC));
    assert_eq!(standard_monomials(&g, 2).len(), 7);
    assert_eq!(standard_monomials(&g, 3).len(), 10);
}

#[test]
fn degree_cap_is_an_error() {
    let r = ring(3);
    let i = ideal(&r, &["x0^2 - x1*x2", "x0*x1"]);
    let err = buchberger(&i, MonomialOrder::Grevlex, GbOptions { degree_cap: 2 }).unwrap_err();
    assert!(err.is_resource_limit());
}

#[test]
fn non_homogeneous_rejected() {
    let r = ring(2);
    assert!(Ideal::new(&r, vec![p(&r, "x0^2 - x1")]).is_err());
}

/// Normal form with a random choice among all applicable reducers.
fn shuffled_normal_form(f: &Polynomial<PrimeField>, g: &GroebnerBasis<PrimeField>, rng: &mut ChaCha8Rng) -> Polynomial<PrimeField> {
    let ring = f.ring().clone();
    let mut rem = Polynomial::zero(&ring);
    let mut p = f.clone();
    while !p.is_zero() {
        // pick any reducible term, not necessarily the leading one
        let reducible: Vec<(Monomial, u32, usize)> = p
            .terms()
            .iter()
            .flat_map(|(m, c)| {
                g.elements()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.leading_monomial().unwrap().divides(m))
                    .map(|(k, _)| (m.clone(), *c, k))
                    .collect::<Vec<_>>()
            })
            .collect();
        if reducible.is_empty() {
            rem = rem.add(&p).unwrap();
            break;
        }
        let (m, c, k) = reducible.choose(rng).unwrap().clone();
        let e = &g.elements()[k];
        let q = e.leading_monomial().unwrap().quotient_of(&m);
        p = p.sub(&e.mul_term(&c, &q)).unwrap();
    }
    rem
}

#[test]
fn normal_form_is_confluent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in fixtures() {
        let g = gb(&i);
        let r = g.ring().clone();
        let n = r.nvars();
        for _ in 0..100 {
            let deg = rng.gen_range(2..5u32);
            let monos = monomials_of_degree(n, deg);
            let terms: Vec<_> = (0..6)
                .map(|_| (monos.choose(&mut rng).unwrap().clone(), rng.gen_range(0..32003u32)))
                .collect();
            let f = Polynomial::from_terms(&r, terms);
            let a = normal_form(&f, &g).unwrap();
            let b = shuffled_normal_form(&f, &g, &mut rng);
            assert_eq!(a, b);
        }
    }
}

#[test]
fn basis_properties_on_fixtures() {
    for i in fixtures() {
        let g = gb(&i);
        // membership soundness
        for gen in i.generators() {
            assert!(contains(&g, gen).unwrap());
        }
        // every S-pair reduces to zero
        let els = g.elements();
        for a in 0..els.len() {
            for b in a + 1..els.len() {
                let la = els[a].leading_monomial().unwrap();
                let lb = els[b].leading_monomial().unwrap();
                let l = la.lcm(lb);
                let one = 1u32;
                let s = els[a]
                    .mul_term(&one, &la.quotient_of(&l))
                    .sub(&els[b].mul_term(&one, &lb.quotient_of(&l)))
                    .unwrap();
                assert!(normal_form(&s, &g).unwrap().is_zero());
            }
        }
        // reducedness
        for (k, e) in els.iter().enumerate() {
            assert_eq!(*e.leading_coeff().unwrap(), 1);
            for (j, other) in els.iter().enumerate() {
                if j != k {
                    let lm = other.leading_monomial().unwrap();
                    assert!(e.terms().iter().all(|(m, _)| !lm.divides(m)));
                }
            }
        }
        // idempotence
        let again = gb(&g.as_ideal());
        assert_eq!(again.elements(), g.elements());
    }
}

#[test]
fn hilbert_function_is_order_independent() {
    for i in fixtures() {
        let a = gb(&i);
        let b = buchberger(&i, MonomialOrder::Lex, GbOptions::default()).unwrap();
        for d in 0..=8 {
            assert_eq!(standard_monomials(&a, d).len(), standard_monomials(&b, d).len());
        }
    }
}
