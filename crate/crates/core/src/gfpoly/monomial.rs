use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::AlgebraError;

pub(crate) type Exponents = SmallVec<[u32; 6]>;

/// An exponent vector `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Exponents);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&a| a * k).collect())
    }

    /// Support as a bitmask over variables.
    pub fn support(&self) -> u64 {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    pub(crate) fn extend_zero(&self, extra: usize) -> Monomial {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(0, extra));
        Monomial(v)
    }

    pub(crate) fn prepend_zero(&self, extra: usize) -> Monomial {
        let mut v: Exponents = SmallVec::from_elem(0, extra);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }
}

/// A monomial order.
///
/// `Elimination(k)` is the block order that compares the first `k`
/// variables by graded reverse lexicographic order and breaks ties with
/// graded reverse lexicographic order on the remaining variables; it
/// eliminates the first `k` variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Elimination(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.as_slice().cmp(b.0.as_slice()),
            MonomialOrder::GrevLex => grevlex(&a.0, &b.0),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.0.len());
                match grevlex(&a.0[..k], &b.0[..k]) {
                    Ordering::Equal => grevlex(&a.0[k..], &b.0[k..]),
                    o => o,
                }
            }
        }
    }
}

/// Compares two monomials under `ord`, rejecting mismatched variable counts.
pub fn order_compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering, AlgebraError> {
    if a.nvars() != b.nvars() {
        return Err(AlgebraError::VariableCountMismatch { left: a.nvars(), right: b.nvars() });
    }
    Ok(ord.compare(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn spec_examples() {
        // x^2 y vs x y^2 under grevlex
        assert_eq!(order_compare(&m(&[2, 1]), &m(&[1, 2]), MonomialOrder::GrevLex).unwrap(), Ordering::Greater);
        for ord in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Elimination(1)] {
            assert_eq!(order_compare(&m(&[3, 1]), &m(&[3, 1]), ord).unwrap(), Ordering::Equal);
        }
        assert_eq!(order_compare(&m(&[1, 0]), &m(&[0, 5]), MonomialOrder::Lex).unwrap(), Ordering::Greater);
        assert!(order_compare(&m(&[1]), &m(&[1, 0]), MonomialOrder::Lex).is_err());
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        // x z vs y^2: same degree, z appears in xz so xz is smaller
        assert_eq!(MonomialOrder::GrevLex.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn elimination_prefers_block_degree() {
        let ord = MonomialOrder::Elimination(1);
        assert_eq!(ord.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    fn arb_mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, n).prop_map(|v| Monomial::new(&v))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            (0usize..4).prop_map(MonomialOrder::Elimination)
        ]
    }

    proptest! {
        #[test]
        fn order_axioms(a in arb_mono(3), b in arb_mono(3), c in arb_mono(3), ord in arb_order()) {
            let ab = ord.compare(&a, &b);
            prop_assert_eq!(ab, ord.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Less && ord.compare(&b, &c) == Ordering::Less {
                prop_assert_eq!(ord.compare(&a, &c), Ordering::Less);
            }
            prop_assert_eq!(ord.compare(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(ord.compare(&Monomial::one(3), &a), Ordering::Greater);
        }
    }
}
