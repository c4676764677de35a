use std::fmt;
use std::sync::{Arc, OnceLock};

use super::engine::{module_basis, Reducer, Vector};
use crate::error::{AlgebraError, Result};
use crate::gfpoly::{Monomial, MonomialOrder, Polynomial, PrimeField};

/// Iteration cap for saturation chains.
pub const SATURATION_CAP: usize = 64;

/// An ideal of `F_p[x_1..x_n]` given by generators, with a lazily computed
/// reduced graded reverse lexicographic Gröbner basis.
///
/// The cache is filled at most once per value; concurrent first uses may
/// both compute, and the results are identical.
pub struct Ideal {
    field: PrimeField,
    nvars: usize,
    generators: Vec<Polynomial>,
    cache: OnceLock<Arc<Reducer>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(r) = self.cache.get() {
            let _ = cache.set(r.clone());
        }
        Ideal { field: self.field, nvars: self.nvars, generators: self.generators.clone(), cache }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.generators).finish()
    }
}

impl Ideal {
    pub fn new(field: PrimeField, nvars: usize, generators: Vec<Polynomial>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { field, nvars, generators, cache: OnceLock::new() }
    }

    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Self::new(field, nvars, Vec::new())
    }

    pub fn unit(field: PrimeField, nvars: usize) -> Self {
        Self::new(field, nvars, vec![Polynomial::one(field, nvars)])
    }

    /// The irrelevant ideal `(x_1, ..., x_n)`.
    pub fn maximal(field: PrimeField, nvars: usize) -> Self {
        Self::new(field, nvars, (0..nvars).map(|i| Polynomial::var(field, nvars, i)).collect())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_monomial())
    }

    fn reducer(&self) -> Result<Arc<Reducer>> {
        if let Some(r) = self.cache.get() {
            return Ok(r.clone());
        }
        let ord = MonomialOrder::GrevLex;
        let basis =
            module_basis(self.field, ord, vec![0], self.generators.iter().map(|g| Vector::from_poly(g, 0, ord)))?;
        let r = Arc::new(Reducer::new(self.field, ord, vec![0], basis));
        let _ = self.cache.set(r);
        Ok(self.cache.get().unwrap().clone())
    }

    /// Reduced graded reverse lexicographic basis (cached).
    pub fn basis(&self) -> Result<Vec<Polynomial>> {
        let r = self.reducer()?;
        Ok(r.basis().iter().map(|v| v.to_poly(self.field, self.nvars)).collect())
    }

    pub fn groebner_basis(&self, ord: MonomialOrder) -> Result<Vec<Polynomial>> {
        if ord == MonomialOrder::GrevLex {
            return self.basis();
        }
        let b = module_basis(self.field, ord, vec![0], self.generators.iter().map(|g| Vector::from_poly(g, 0, ord)))?;
        Ok(b.iter().map(|v| v.to_poly(self.field, self.nvars)).collect())
    }

    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self.basis()?.iter().map(|g| g.leading().unwrap().0.clone()).collect())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let r = self.reducer()?;
        let v = Vector::from_poly(f, 0, MonomialOrder::GrevLex);
        Ok(r.normal_form(&v).to_poly(self.field, self.nvars))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let r = self.reducer()?;
        Ok(r.contains(&Vector::from_poly(f, 0, MonomialOrder::GrevLex)))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.basis()? == other.basis()?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        self.contains(&Polynomial::one(self.field, self.nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(self.field, self.nvars, g)
    }

    pub fn with_generator(&self, f: Polynomial) -> Ideal {
        let mut g = self.generators.clone();
        g.push(f);
        Ideal::new(self.field, self.nvars, g)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                g.push(a.mul(b));
            }
        }
        Ideal::new(self.field, self.nvars, g)
    }

    /// `f * I`.
    pub fn times(&self, f: &Polynomial) -> Ideal {
        Ideal::new(self.field, self.nvars, self.generators.iter().map(|g| g.mul(f)).collect())
    }

    /// Power `I^k` by repeated products, generators deduplicated.
    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(self.field, self.nvars);
        for _ in 0..k {
            let mut p = acc.product(self);
            p.generators.sort_by(|a, b| a.terms().cmp(b.terms()));
            p.generators.dedup();
            acc = p;
        }
        acc
    }

    /// Replaces the generator list by the reduced basis.
    pub fn minimized(&self) -> Result<Ideal> {
        let b = self.basis()?;
        let out = Ideal::new(self.field, self.nvars, b);
        let _ = out.cache.set(self.reducer()?);
        Ok(out)
    }

    /// A generating subset in which no generator lies in the ideal of the
    /// preceding ones (processed by increasing degree). For homogeneous
    /// ideals this is a minimal generating set.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        let mut gens = self.basis()?;
        gens.sort_by_key(|g| g.total_degree().unwrap_or(0));
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in gens {
            let sub = Ideal::new(self.field, self.nvars, kept.clone());
            if !sub.contains(&g)? {
                kept.push(g);
            }
        }
        Ok(kept)
    }
}

/// Reduced Gröbner basis under `ord`.
pub fn groebner_basis(i: &Ideal, ord: MonomialOrder) -> Result<Vec<Polynomial>> {
    i.groebner_basis(ord)
}

/// Remainder of `f` modulo the reduced graded reverse lexicographic basis.
pub fn normal_form(f: &Polynomial, i: &Ideal) -> Result<Polynomial> {
    i.normal_form(f)
}

/// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`.
pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let (field, n) = (i.field, i.nvars);
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(field, n));
    }
    let t = Polynomial::var(field, n + 1, 0);
    let one_minus_t = Polynomial::one(field, n + 1).sub(&t);
    let mut gens: Vec<Polynomial> = i.generators.iter().map(|g| g.prepend_vars(1).mul(&t)).collect();
    gens.extend(j.generators.iter().map(|g| g.prepend_vars(1).mul(&one_minus_t)));
    let lifted = Ideal::new(field, n + 1, gens);
    let basis = lifted.groebner_basis(MonomialOrder::Elimination(1))?;
    let kept: Vec<Polynomial> = basis.iter().filter_map(|g| g.drop_leading_vars(1)).collect();
    Ok(Ideal::new(field, n, kept))
}

/// `(I : f)` for a single polynomial.
pub fn colon_element(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let (field, n) = (i.field, i.nvars);
    if f.is_zero() || i.contains(f)? {
        return Ok(Ideal::unit(field, n));
    }
    let inter = ideal_intersect(i, &Ideal::new(field, n, vec![f.clone()]))?;
    let gens =
        inter.generators.iter().map(|g| g.div_exact(f).expect("generator of I ∩ (f) is divisible by f")).collect();
    Ok(Ideal::new(field, n, gens))
}

/// `(I : J) = { f : f J ⊆ I }`.
pub fn ideal_colon(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut acc = Ideal::unit(i.field, i.nvars);
    for g in &j.generators {
        let c = colon_element(i, g)?;
        acc = if acc.is_unit()? { c } else { ideal_intersect(&acc, &c)? };
    }
    acc.minimized()
}

/// `(I : J^∞)` as the stabilizing chain of colons.
pub fn ideal_saturation(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut cur = i.minimized()?;
    for _ in 0..SATURATION_CAP {
        let next = ideal_colon(&cur, j)?;
        if next.equals(&cur)? {
            return Ok(cur);
        }
        cur = next;
    }
    Err(AlgebraError::Resource(format!("saturation did not stabilize in {} steps", SATURATION_CAP)))
}

/// `I^{[p^e]}`: the ideal generated by `p^e`-th powers of the generators.
pub fn bracket_power(i: &Ideal, e: u32) -> Ideal {
    if e == 0 {
        return i.clone();
    }
    Ideal::new(i.field, i.nvars, i.generators.iter().map(|g| g.frobenius_power(e)).collect())
}

/// `f ∈ √I`, decided by `1 ∈ I + (1 - t f)`.
pub fn radical_contains(i: &Ideal, f: &Polynomial) -> Result<bool> {
    let (field, n) = (i.field, i.nvars);
    let mut gens: Vec<Polynomial> = i.generators.iter().map(|g| g.extend_vars(1)).collect();
    let t = Polynomial::var(field, n + 1, n);
    gens.push(Polynomial::one(field, n + 1).sub(&t.mul(&f.extend_vars(1))));
    Ideal::new(field, n + 1, gens).is_unit()
}
