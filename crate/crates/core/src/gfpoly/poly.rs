use std::cmp::Ordering;
use std::fmt;

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};

/// A sparse polynomial over `F_p`.
///
/// Terms are kept sorted in strictly decreasing graded reverse lexicographic
/// order with no zero coefficients, so equal polynomials have identical
/// representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    nvars: usize,
    terms: Vec<(Monomial, u32)>,
}

const CANON: MonomialOrder = MonomialOrder::GrevLex;

impl Polynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Polynomial { field, nvars, terms: Vec::new() }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: i64) -> Self {
        Self::term(field, Monomial::one(nvars), field.from_i64(c))
    }

    pub fn one(field: PrimeField, nvars: usize) -> Self {
        Self::constant(field, nvars, 1)
    }

    pub fn var(field: PrimeField, nvars: usize, i: usize) -> Self {
        Self::term(field, Monomial::var(nvars, i), 1)
    }

    pub fn term(field: PrimeField, mon: Monomial, coef: u32) -> Self {
        let nvars = mon.nvars();
        let coef = coef % field.characteristic();
        let terms = if coef == 0 { Vec::new() } else { vec![(mon, coef)] };
        Polynomial { field, nvars, terms }
    }

    pub fn monomial(field: PrimeField, mon: Monomial) -> Self {
        Self::term(field, mon, 1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms(field: PrimeField, nvars: usize, terms: Vec<(Monomial, u32)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| CANON.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let c = c % field.characteristic();
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial { field, nvars, terms: out }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn constant_term(&self) -> u32 {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    /// Leading term under graded reverse lexicographic order.
    pub fn leading(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    /// Leading term under an arbitrary order.
    pub fn leading_under(&self, ord: MonomialOrder) -> Option<&(Monomial, u32)> {
        self.terms.iter().max_by(|a, b| ord.compare(&a.0, &b.0))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Homogeneous components keyed by degree, ascending.
    pub fn homogeneous_parts(&self) -> Vec<(u64, Polynomial)> {
        let mut parts: Vec<(u64, Vec<(Monomial, u32)>)> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let d = m.degree();
            match parts.last_mut() {
                Some((pd, v)) if *pd == d => v.push((m.clone(), *c)),
                _ => parts.push((d, vec![(m.clone(), *c)])),
            }
        }
        parts.into_iter().map(|(d, t)| (d, Polynomial::from_terms(self.field, self.nvars, t))).collect()
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sgn = |c: u32| if negate_other { f.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match CANON.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].1, sgn(b[j].1));
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(*c))));
        Polynomial { field: f, nvars: self.nvars, terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field.neg(1 % self.field.characteristic()))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero(self.field, self.nvars);
        }
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(*a, c))).collect(),
        }
    }

    pub fn mul_term(&self, mon: &Monomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero(self.field, self.nvars);
        }
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.mul(mon), self.field.mul(*a, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.field, self.nvars);
        }
        let (small, big) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(self.field, self.nvars);
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, *c));
        }
        acc
    }

    pub fn pow(&self, k: u64) -> Polynomial {
        let mut acc = Polynomial::one(self.field, self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `f^(p^e)`, computed termwise: in characteristic `p` the map
    /// `c m -> c^q m^q` is additive and `c^q = c` for `c` in `F_p`.
    pub fn frobenius_power(&self, e: u32) -> Polynomial {
        if e == 0 {
            return self.clone();
        }
        let q = (self.field.characteristic() as u64).pow(e);
        let q32 = u32::try_from(q).expect("Frobenius exponent overflows u32");
        // termwise q-th power preserves the order, since the order is multiplicative
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.pow(q32), self.field.pow(*c, q))).collect(),
        }
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(*c)),
        }
    }

    /// Re-embeds into a ring with `extra` new variables appended after the
    /// existing ones.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            self.nvars + extra,
            self.terms.iter().map(|(m, c)| (m.extend_zero(extra), *c)).collect(),
        )
    }

    /// Re-embeds with `extra` new variables placed before the existing ones.
    pub fn prepend_vars(&self, extra: usize) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            self.nvars + extra,
            self.terms.iter().map(|(m, c)| (m.prepend_zero(extra), *c)).collect(),
        )
    }

    /// Drops the first `k` variables; `None` if any term involves them.
    pub fn drop_leading_vars(&self, k: usize) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.exponents()[..k].iter().any(|&e| e > 0) {
                return None;
            }
            terms.push((Monomial::new(&m.exponents()[k..]), *c));
        }
        Some(Polynomial::from_terms(self.field, self.nvars - k, terms))
    }

    /// Substitutes 1 for every variable whose bit is set in `mask`.
    pub fn set_vars_to_one(&self, mask: u64) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            self.nvars,
            self.terms
                .iter()
                .map(|(m, c)| {
                    let e: Vec<u32> = m
                        .exponents()
                        .iter()
                        .enumerate()
                        .map(|(i, &a)| if mask >> i & 1 == 1 { 0 } else { a })
                        .collect();
                    (Monomial::new(&e), *c)
                })
                .collect(),
        )
    }

    /// Applies a linear substitution `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let nv = images.first().map(|p| p.nvars).unwrap_or(self.nvars);
        let mut acc = Polynomial::zero(self.field, nv);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(self.field, nv, *c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Exact division by `d`; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading_under(MonomialOrder::Lex)?.clone();
        let dinv = self.field.inv(dc);
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(self.field, self.nvars);
        while let Some((m, c)) = rem.leading_under(MonomialOrder::Lex).cloned() {
            let q = dm.quotient_of(&m)?;
            let qc = self.field.mul(c, dinv);
            quo = quo.add(&Polynomial::term(self.field, q.clone(), qc));
            rem = rem.sub(&d.mul_term(&q, qc));
        }
        Some(quo)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{}", i + 1)).collect();
        write!(f, "{}", self.display(&names))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let s = self.poly.field.signed(*c);
            let mag = s.unsigned_abs();
            if k == 0 {
                if s < 0 {
                    write!(f, "-")?;
                }
            } else if s < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut first = true;
            if mag != 1 || m.is_one() {
                write!(f, "{}", mag)?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.names[i])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// `f^(p^e)`.
pub fn poly_pow_frobenius(f: &Polynomial, e: u32) -> Polynomial {
    f.frobenius_power(e)
}
