//! A genus-2 curve of degree 9 in `P^7`, as the image of a plane quintic
//! with four nodes under the quintics that are singular at the nodes.
//!
//! The image ideal is recovered degree by degree as the kernel of
//! `Q -> Q(G_0, ..., G_7) mod F`, which is exact: a form vanishes on the
//! image iff its pullback is divisible by the irreducible quintic `F`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::field::{Field, PrimeField};
use crate::groebner::{buchberger, GbOptions, Ideal};
use crate::hilbert::{hilbert_function, HilbertData, HilbertSeries};
use crate::linalg::{kernel, rref, SparseVec};
use crate::poly::{monomials_of_degree, MonomialOrder, PolyRing, Polynomial, Ring};
use crate::quotient::GradedQuotient;

/// Seeds tried after the requested one before giving up.
pub const MAX_RETRIES: u64 = 4;

const QUADRICS: usize = 19;

#[derive(Clone, Debug)]
pub struct Genus2Curve {
    /// Ideal of the curve in `x0..x7`, minimally generated by 19 quadrics.
    pub ideal: Ideal<PrimeField>,
    /// `K[x, y, z]`.
    pub plane: Ring<PrimeField>,
    /// The nodal quintic.
    pub quintic: Polynomial<PrimeField>,
    /// Quintics through the nodes defining the map to `P^7`.
    pub map: Vec<Polynomial<PrimeField>>,
    pub nodes: Vec<[u32; 3]>,
    /// Seed that produced the curve (the requested one unless a retry was
    /// needed).
    pub seed: u64,
}

/// Ideal of the genus-2 curve for the given prime and seed.
pub fn genus2_fixture(p: u64, seed: u64) -> Result<Ideal<PrimeField>> {
    Ok(genus2_curve(p, seed)?.ideal)
}

pub fn genus2_curve(p: u64, seed: u64) -> Result<Genus2Curve> {
    let field = PrimeField::new(p)?;
    let mut reasons = Vec::new();
    let seeds: Vec<u64> = (0..=MAX_RETRIES).map(|i| seed.wrapping_add(i)).collect();
    for &s in &seeds {
        match attempt(field, s) {
            Ok(c) => return Ok(c),
            Err(AlgebraError::Precondition(why)) => reasons.push(format!("seed {s}: {why}")),
            Err(e) => return Err(e),
        }
    }
    Err(AlgebraError::RetryExhausted {
        seeds,
        reason: reasons.join("; "),
    })
}

fn reject(why: &str) -> AlgebraError {
    AlgebraError::Precondition(why.to_string())
}

fn det3(f: &PrimeField, a: &[u32; 3], b: &[u32; 3], c: &[u32; 3]) -> u32 {
    let t1 = f.mul(&a[0], &f.sub(&f.mul(&b[1], &c[2]), &f.mul(&b[2], &c[1])));
    let t2 = f.mul(&a[1], &f.sub(&f.mul(&b[0], &c[2]), &f.mul(&b[2], &c[0])));
    let t3 = f.mul(&a[2], &f.sub(&f.mul(&b[0], &c[1]), &f.mul(&b[1], &c[0])));
    f.add(&f.sub(&t1, &t2), &t3)
}

fn attempt(field: PrimeField, seed: u64) -> Result<Genus2Curve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rand_elem = |rng: &mut ChaCha8Rng| field.from_random_bits(rng.gen::<u64>());

    let nodes: Vec<[u32; 3]> = (0..4)
        .map(|_| [rand_elem(&mut rng), rand_elem(&mut rng), rand_elem(&mut rng)])
        .collect();
    for a in 0..4 {
        for b in a + 1..4 {
            for c in b + 1..4 {
                if field.is_zero(&det3(&field, &nodes[a], &nodes[b], &nodes[c])) {
                    return Err(reject("three of the points are collinear"));
                }
            }
        }
    }

    let plane = PolyRing::new(field, vec!["x".into(), "y".into(), "z".into()], MonomialOrder::Grevlex)?;
    let quintic_monos = monomials_of_degree(3, 5);
    // Each partial derivative vanishes at each point: 12 conditions.
    let mut rows: Vec<SparseVec<u32>> = Vec::new();
    for pt in &nodes {
        for v in 0..3 {
            let row = quintic_monos.iter().enumerate().filter_map(|(j, m)| {
                let d = Polynomial::monomial(&plane, m.clone(), field.one()).derivative(v);
                let val = d.evaluate(pt).expect("three coordinates");
                (!field.is_zero(&val)).then_some((j, val))
            });
            rows.push(row.collect());
        }
    }
    let system = kernel(&field, rows, quintic_monos.len());
    if system.len() != 9 {
        return Err(reject("points impose dependent conditions on quintics"));
    }
    let basis: Vec<Polynomial<PrimeField>> = system
        .iter()
        .map(|v| Polynomial::from_terms(&plane, v.iter().map(|(j, c)| (quintic_monos[*j].clone(), *c))))
        .collect();

    let weights: Vec<u32> = (0..9).map(|_| rand_elem(&mut rng)).collect();
    let Some(dropped) = weights.iter().position(|w| !field.is_zero(w)) else {
        return Err(reject("zero quintic"));
    };
    let quintic = basis
        .iter()
        .zip(&weights)
        .map(|(b, w)| b.scale(w))
        .fold(Polynomial::zero(&plane), |a, b| a.add(&b).expect("same ring"))
        .monic();
    let map: Vec<_> = basis
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != dropped)
        .map(|(_, b)| b.clone())
        .collect();

    // The singular scheme of F must be the four reduced nodes: the
    // Jacobian ideal has constant Hilbert polynomial 4.
    let mut jac = vec![quintic.clone()];
    jac.extend((0..3).map(|v| quintic.derivative(v)));
    let jgb = buchberger(&Ideal::new(&plane, jac)?, MonomialOrder::Grevlex, GbOptions { degree_cap: 16 })?;
    let jh = HilbertData::from_series(HilbertSeries::of(&jgb));
    if jh.krull_dim != Some(1) || jh.degree != 4 {
        return Err(reject("quintic has singularities beyond four nodes"));
    }

    let target = PolyRing::with_prefix(field, "x", 8, MonomialOrder::Grevlex);
    let images = ImageMap::new(&quintic, &map, 4)?;
    let quadrics = images.kernel_forms(&target, 2);
    if quadrics.len() != QUADRICS {
        return Err(reject("image is not cut out by 19 quadrics in degree 2"));
    }
    let ideal = Ideal::new(&target, quadrics)?;
    let gb = buchberger(&ideal, MonomialOrder::Grevlex, GbOptions::default())?;
    for m in 3..=4u32 {
        let dim_image = images.kernel_dimension(m);
        let from_quadrics = monomials_of_degree(8, m).len() as i128 - hilbert_function(&gb, m);
        if dim_image as i128 != from_quadrics {
            return Err(reject("quadrics do not generate the image ideal"));
        }
    }
    let h = HilbertData::from_series(HilbertSeries::of(&gb));
    if h.krull_dim != Some(2) || h.alphas != vec![-1, 9] || (1..=6).any(|m| h.function(m) != 9 * m as i128 - 1) {
        return Err(reject("image is not a linearly normal curve of degree 9 and genus 2"));
    }
    Ok(Genus2Curve {
        ideal,
        plane,
        quintic,
        map,
        nodes,
        seed,
    })
}

/// Pullbacks of monomials in `x0..x7` along the map, reduced modulo `F`.
struct ImageMap {
    field: PrimeField,
    quotient: GradedQuotient<PrimeField>,
    map: Vec<Polynomial<PrimeField>>,
}

impl ImageMap {
    fn new(quintic: &Polynomial<PrimeField>, map: &[Polynomial<PrimeField>], max_m: u32) -> Result<Self> {
        let plane = quintic.ring();
        let gb = buchberger(&Ideal::new(plane, vec![quintic.clone()])?, MonomialOrder::Grevlex, GbOptions::default())?;
        Ok(ImageMap {
            field: *plane.field(),
            quotient: GradedQuotient::new(&gb, 5 * max_m)?,
            map: map.to_vec(),
        })
    }

    /// Columns: monomials of degree `m` in increasing grevlex order.
    fn matrix(&self, m: u32) -> (Vec<crate::poly::Monomial>, Vec<SparseVec<u32>>) {
        let mut monos = monomials_of_degree(self.map.len(), m);
        monos.sort_by(|a, b| MonomialOrder::Grevlex.cmp(a, b));
        let nrows = self.quotient.dim(5 * m);
        let mut rows: Vec<SparseVec<u32>> = vec![Vec::new(); nrows];
        for (j, mono) in monos.iter().enumerate() {
            let mut img = Polynomial::one(self.quotient.groebner_basis().ring());
            for (v, &e) in mono.exponents().iter().enumerate() {
                for _ in 0..e {
                    img = img.mul(&self.map[v]).expect("same ring");
                }
            }
            let nf = self.quotient.nf_poly(&img).expect("degree within table");
            for (i, c) in nf {
                rows[i].push((j, c));
            }
        }
        (monos, rows)
    }

    fn kernel_dimension(&self, m: u32) -> usize {
        let (monos, rows) = self.matrix(m);
        kernel(&self.field, rows, monos.len()).len()
    }

    fn kernel_forms(&self, target: &Ring<PrimeField>, m: u32) -> Vec<Polynomial<PrimeField>> {
        let (monos, rows) = self.matrix(m);
        let ker = kernel(&self.field, rows, monos.len());
        // Echelon form with pivots at the largest monomial of each form.
        let flipped: Vec<SparseVec<u32>> = ker
            .into_iter()
            .map(|v| {
                let mut w: Vec<_> = v.into_iter().map(|(j, c)| (monos.len() - 1 - j, c)).collect();
                w.sort_by_key(|e| e.0);
                w
            })
            .collect();
        rref(&self.field, flipped, monos.len())
            .into_iter()
            .map(|v| {
                Polynomial::from_terms(target, v.into_iter().map(|(j, c)| (monos[monos.len() - 1 - j].clone(), c)))
            })
            .collect()
    }
}

/// Smooth `F_p`-points of the plane quintic mapped to `P^7`, found by
/// scanning `y` for random `x` on the chart `z = 1`.
pub fn curve_points(curve: &Genus2Curve, count: usize, seed: u64) -> Vec<Vec<u32>> {
    let field = *curve.plane.field();
    let p = field.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grads: Vec<_> = (0..3).map(|v| curve.quintic.derivative(v)).collect();
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < 50 * count + 100 {
        tries += 1;
        let x = rng.gen_range(0..p);
        let roots: Vec<u32> = (0..p)
            .filter(|&y| field.is_zero(&curve.quintic.evaluate(&[x, y, 1]).unwrap()))
            .collect();
        if roots.is_empty() {
            continue;
        }
        let y = roots[rng.gen_range(0..roots.len())];
        let pt = [x, y, 1];
        if grads.iter().all(|g| field.is_zero(&g.evaluate(&pt).unwrap())) {
            continue;
        }
        let image: Vec<u32> = curve.map.iter().map(|g| g.evaluate(&pt).unwrap()).collect();
        if image.iter().all(|c| field.is_zero(c)) {
            continue;
        }
        out.push(image);
    }
    out
}
