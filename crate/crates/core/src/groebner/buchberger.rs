use num_traits::One;

use super::reduce::{sub_multiple, Reducers};
use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, Rational};

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-pair reductions before giving up with
    /// [`Error::BudgetExceeded`].
    pub step_budget: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

impl GroebnerConfig {
    pub fn with_budget(step_budget: u64) -> Self {
        GroebnerConfig { step_budget }
    }
}

/// Reduced Gröbner basis of an ideal. Elements are monic and sorted by
/// ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ideal: Ideal,
    ring: PolyRing,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// The ring whose order the basis is reduced with respect to.
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    /// Unique remainder of `p` modulo the ideal. `p` may use any order on the
    /// same variables; the result is expressed in `p`'s ring.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if !p.ring().same_variables(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let local = p.to_ring(&self.ring)?;
        let reducers = Reducers::new(self.basis.iter());
        let terms = reducers.reduce(local.into_terms(), self.ring.order());
        Polynomial::from_sorted_terms(&self.ring, terms).to_ring(p.ring())
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub(crate) fn from_parts(ideal: Ideal, ring: PolyRing, basis: Vec<Polynomial>) -> Self {
        GroebnerBasis { ideal, ring, basis }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'a> {
    order: &'a MonomialOrder,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'a> State<'a> {
    fn lm(&self, k: usize) -> &Monomial {
        self.polys[k]
            .leading_monomial()
            .expect("basis elements are nonzero")
    }

    /// Gebauer–Möller installation of a new basis element.
    fn insert(&mut self, h: Polynomial) {
        let hk = self.polys.len();
        let h_lm = h.leading_monomial().unwrap().clone();
        self.polys.push(h);
        self.active.push(true);

        let mut candidates: Vec<(usize, Monomial, bool)> = (0..hk)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lm = self.lm(g);
                (g, lm.lcm(&h_lm), lm.is_coprime(&h_lm))
            })
            .collect();

        // Chain criterion among the new pairs; coprime pairs always survive
        // this stage so they can mask others, then get dropped below.
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while !candidates.is_empty() {
            let (g, lcm, coprime) = candidates.remove(0);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|(_, other, _)| other.divides(&lcm));
            if coprime || !dominated {
                kept.push((g, lcm, coprime));
            }
        }

        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let li = self.lm(p.i).lcm(&h_lm);
            let lj = self.lm(p.j).lcm(&h_lm);
            let drop = h_lm.divides(&p.lcm) && li != p.lcm && lj != p.lcm;
            if !drop {
                self.pairs.push(p);
            }
        }
        for (g, lcm, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i: g, j: hk, lcm });
            }
        }

        for g in 0..hk {
            if self.active[g] && h_lm.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }

    /// Normal selection strategy: smallest lcm degree, ties by pair index.
    fn next_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.lcm.degree(), p.i, p.j))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, pair: &Pair) -> Vec<(Monomial, Rational)> {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let sf = pair.lcm.checked_div(self.lm(pair.i)).unwrap();
        let sg = pair.lcm.checked_div(self.lm(pair.j)).unwrap();
        let fs: Vec<_> = f.terms()[1..]
            .iter()
            .map(|(m, c)| (m.mul(&sf), c.clone()))
            .collect();
        sub_multiple(&fs, &Rational::one(), &sg, &g.terms()[1..], self.order)
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers::new(
            self.polys
                .iter()
                .zip(self.active.iter())
                .filter(|(_, a)| **a)
                .map(|(p, _)| p),
        )
    }
}

/// Reduced Gröbner basis of `ideal` with respect to `order`.
///
/// Deterministic: the same generators and order always give the same basis.
/// Fails with [`Error::BudgetExceeded`] once more than
/// `config.step_budget` S-pairs have been reduced.
pub fn buchberger(
    ideal: &Ideal,
    order: &MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis> {
    let ring = ideal.ring().with_order(order.clone());
    let unit =
        |ideal: &Ideal| GroebnerBasis::from_parts(ideal.clone(), ring.clone(), vec![ring.one()]);

    let mut state = State {
        order: ring.order(),
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in ideal.generators() {
        let g = g.to_ring(&ring)?;
        let reduced = {
            let r = state.reducers();
            r.reduce(g.into_terms(), &ring.order().clone())
        };
        let h = Polynomial::from_sorted_terms(&ring, reduced);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit(ideal));
        }
        state.insert(h.monic());
    }

    let mut steps: u64 = 0;
    while let Some(pair) = state.next_pair() {
        steps += 1;
        if steps > config.step_budget {
            return Err(Error::BudgetExceeded {
                budget: config.step_budget,
            });
        }
        let s = state.s_polynomial(&pair);
        let reduced = state.reducers().reduce(s, state.order);
        if reduced.is_empty() {
            continue;
        }
        let h = Polynomial::from_sorted_terms(&ring, reduced);
        if h.is_constant() {
            return Ok(unit(ideal));
        }
        state.insert(h.monic());
    }

    let mut minimal: Vec<Polynomial> = state
        .polys
        .iter()
        .zip(state.active.iter())
        .filter(|(_, a)| **a)
        .map(|(p, _)| p.clone())
        .collect();
    minimal.sort_by(|a, b| {
        ring.order()
            .compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });

    // Inter-reduce tails; leading terms are untouched since the set is minimal.
    let mut basis = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others = Reducers::new(
            minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, p)| p),
        );
        let mut terms = minimal[k].terms().to_vec();
        let head = terms.remove(0);
        let mut tail = others.reduce(terms, ring.order());
        tail.insert(0, head);
        basis.push(Polynomial::from_sorted_terms(&ring, tail));
    }

    Ok(GroebnerBasis::from_parts(ideal.clone(), ring, basis))
}
