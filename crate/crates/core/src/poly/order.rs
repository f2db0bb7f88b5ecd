use std::cmp::Ordering;

use super::Monomial;

/// Term order on monomials. Variable precedence follows the ring's variable
/// order: the first variable is the largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GrevLex,
    /// Product order: the first `n` variables form a grevlex block that
    /// dominates the grevlex order on the remaining variables. Any monomial
    /// involving the first block is larger than every monomial free of it.
    Block(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| ea.cmp(eb)),
            MonomialOrder::GrevLex => grevlex(ea, eb),
            MonomialOrder::Block(n) => {
                let n = (*n).min(ea.len());
                grevlex(&ea[..n], &eb[..n]).then_with(|| grevlex(&ea[n..], &eb[n..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrLex => "grlex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Block(n) => format!("block({})", n),
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.iter().copied())
    }

    #[test]
    fn textbook_comparisons() {
        // x > y > z
        let x = m(&[1, 0, 0]);
        let y2 = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::Lex.compare(&x, &y2), Ordering::Greater);
        assert_eq!(MonomialOrder::GrLex.compare(&x, &y2), Ordering::Less);
        // x*z^2 vs y^3 under grlex / grevlex: both degree 3
        let xz2 = m(&[1, 0, 2]);
        let y3 = m(&[0, 3, 0]);
        assert_eq!(MonomialOrder::GrLex.compare(&xz2, &y3), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.compare(&xz2, &y3), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let order = MonomialOrder::Block(1);
        let w = m(&[1, 0, 0]);
        let big = m(&[0, 7, 9]);
        assert_eq!(order.compare(&w, &big), Ordering::Greater);
        assert_eq!(
            order.compare(&m(&[1, 2, 0]), &m(&[1, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn one_is_minimal_and_multiplicative() {
        let orders = [
            MonomialOrder::Lex,
            MonomialOrder::GrLex,
            MonomialOrder::GrevLex,
            MonomialOrder::Block(2),
        ];
        let mons = [
            m(&[0, 0, 1]),
            m(&[2, 1, 0]),
            m(&[1, 1, 1]),
            m(&[0, 3, 0]),
            m(&[1, 0, 2]),
        ];
        let one = m(&[0, 0, 0]);
        for o in &orders {
            for a in &mons {
                assert_eq!(o.compare(a, &one), Ordering::Greater);
                for b in &mons {
                    for c in &mons {
                        assert_eq!(o.compare(a, b), o.compare(&a.mul(c), &b.mul(c)));
                    }
                }
            }
        }
    }
}
