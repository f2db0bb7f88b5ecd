use std::cmp::Ordering;

use num_traits::Zero;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};

pub(crate) type Terms = Vec<(Monomial, Rational)>;

/// A set of monic polynomials used as reducers, with cached leading
/// monomials and support masks.
pub(crate) struct Reducers<'a> {
    polys: Vec<&'a Polynomial>,
    leads: Vec<(Monomial, u64)>,
}

impl<'a> Reducers<'a> {
    pub fn new<I: IntoIterator<Item = &'a Polynomial>>(polys: I) -> Self {
        let polys: Vec<&Polynomial> = polys.into_iter().collect();
        let leads = polys
            .iter()
            .map(|p| {
                let lm = p.leading_monomial().expect("reducers are nonzero").clone();
                let mask = lm.support_mask();
                (lm, mask)
            })
            .collect();
        Reducers { polys, leads }
    }

    fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        self.leads
            .iter()
            .position(|(lm, lmask)| lmask & !mask == 0 && lm.divides(m))
    }

    /// Fully reduces `p` (sorted descending under `order`).
    pub fn reduce(&self, p: Terms, order: &MonomialOrder) -> Terms {
        let mut rest = p;
        let mut cursor = 0;
        let mut rem: Terms = Vec::new();
        while cursor < rest.len() {
            let (m, c) = &rest[cursor];
            match self.find(m) {
                Some(k) => {
                    let g = self.polys[k];
                    let shift = m
                        .checked_div(&self.leads[k].0)
                        .expect("reducer lead divides the term");
                    let factor = c.clone();
                    rest =
                        sub_multiple(&rest[cursor + 1..], &factor, &shift, &g.terms()[1..], order);
                    cursor = 0;
                }
                None => {
                    cursor += 1;
                    rem.push(rest[cursor - 1].clone());
                }
            }
        }
        rem
    }
}

/// `a - c * shift * b`, all sorted descending.
pub(crate) fn sub_multiple(
    a: &[(Monomial, Rational)],
    c: &Rational,
    shift: &Monomial,
    b: &[(Monomial, Rational)],
    order: &MonomialOrder,
) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(m, k)| (m.mul(shift), k)).peekable();
    while i < a.len() {
        let Some((bm, bk)) = bi.peek() else { break };
        match order.compare(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm.clone(), -(c * *bk)));
                bi.next();
            }
            Ordering::Equal => {
                let v = &a[i].1 - c * *bk;
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                bi.next();
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(bi.map(|(m, k)| (m, -(c * k))));
    out
}
