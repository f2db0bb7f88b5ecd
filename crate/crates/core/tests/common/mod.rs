#![allow(dead_code)]

use std::collections::HashMap;

use lnd_core::{Monomial, PolyRing, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A monomial of total degree exactly `d`.
pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, d: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    for _ in 0..d {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(exps)
}

/// Up to `max_terms` terms of degree at most `max_deg` with small integer or
/// half-integer coefficients. May be zero.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    ring: &PolyRing,
    max_deg: u32,
    max_terms: usize,
) -> Polynomial {
    let n = rng.gen_range(0..=max_terms);
    let terms = (0..n)
        .map(|_| {
            let d = rng.gen_range(0..=max_deg);
            let m = random_monomial(rng, ring.nvars(), d);
            let num = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let den = if rng.gen_bool(0.2) { 2 } else { 1 };
            (m, rational(num, den))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

pub fn random_nonzero<R: Rng>(
    rng: &mut R,
    ring: &PolyRing,
    max_deg: u32,
    max_terms: usize,
) -> Polynomial {
    loop {
        let p = random_poly(rng, ring, max_deg, max_terms.max(1));
        if !p.is_zero() {
            return p;
        }
    }
}

/// All monomials in `nvars` variables of total degree at most `d`.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, nvars: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() == nvars {
            out.push(Monomial::from_exponents(prefix.iter().copied()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(prefix, nvars, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), nvars, d, &mut out);
    out
}

/// Decides whether `p = sum h_i g_i` with `deg(h_i g_i) <= bound` by Gaussian
/// elimination over the rationals on coefficient vectors. Independent of
/// Gröbner bases.
pub fn cofactor_oracle(p: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    if p.is_zero() {
        return true;
    }
    if p.degree().unwrap() > bound {
        return false;
    }
    let nvars = p.ring().nvars();
    let mut echelon: HashMap<Monomial, HashMap<Monomial, Rational>> = HashMap::new();
    let mut pivots: Vec<Monomial> = Vec::new();

    let reduce = |v: &mut HashMap<Monomial, Rational>,
                  echelon: &HashMap<Monomial, HashMap<Monomial, Rational>>,
                  pivots: &[Monomial]| {
        for piv in pivots {
            let Some(c) = v.get(piv).cloned() else {
                continue;
            };
            for (m, a) in &echelon[piv] {
                let entry = v.entry(m.clone()).or_insert_with(Rational::zero);
                *entry -= &c * a;
                if entry.is_zero() {
                    v.remove(m);
                }
            }
        }
    };

    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.degree().unwrap();
        if dg > bound {
            continue;
        }
        for m in monomials_up_to(nvars, bound - dg) {
            let mut v: HashMap<Monomial, Rational> = g
                .terms()
                .iter()
                .map(|(t, c)| (t.mul(&m), c.clone()))
                .collect();
            reduce(&mut v, &echelon, &pivots);
            let Some(piv) = v.keys().max().cloned() else {
                continue;
            };
            let inv = Rational::one() / &v[&piv];
            for c in v.values_mut() {
                *c *= &inv;
            }
            // Keep the basis fully reduced so that a single pass suffices.
            for row in echelon.values_mut() {
                if let Some(c) = row.get(&piv).cloned() {
                    for (m, a) in &v {
                        let e = row.entry(m.clone()).or_insert_with(Rational::zero);
                        *e -= &c * a;
                        if e.is_zero() {
                            row.remove(m);
                        }
                    }
                }
            }
            echelon.insert(piv.clone(), v);
            pivots.push(piv);
        }
    }
    let mut target: HashMap<Monomial, Rational> = p.terms().iter().cloned().collect();
    reduce(&mut target, &echelon, &pivots);
    target.is_empty()
}

/// A random triangular derivation of `ring`: `D(X_i)` is a polynomial in
/// `X_1..X_{i-1}` of degree at most `max_deg`, and `D(X_1)` is constant.
pub fn random_triangular<R: Rng>(
    rng: &mut R,
    ring: &PolyRing,
    max_deg: u32,
    max_terms: usize,
) -> lnd_core::derivation::Derivation {
    let n = ring.nvars();
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let sub = PolyRing::grevlex(&ring.vars()[..i.max(1)]).unwrap();
        let p = if i == 0 {
            sub.int(rng.gen_range(-2..=2))
        } else {
            random_poly(rng, &sub, max_deg, max_terms)
        };
        images.push(p.to_ring(ring).unwrap());
    }
    lnd_core::derivation::Derivation::new(ring, images).unwrap()
}
