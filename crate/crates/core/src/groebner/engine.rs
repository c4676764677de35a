//! Buchberger's algorithm for submodules of a free module `S^r`.
//!
//! Ideals are the `r = 1` case. Vectors are ordered position-over-term:
//! a smaller component index is larger, ties broken by the monomial order.
//! Pairs are processed by increasing sugar degree, which for homogeneous
//! input is the ordinary degree.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::error::{AlgebraError, Result};
use crate::gfpoly::{Monomial, MonomialOrder, Polynomial, PrimeField};

/// Default cap on processed S-pairs in a single completion.
pub const DEFAULT_PAIR_BUDGET: usize = 400_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub comp: u32,
    pub mon: Monomial,
    pub coef: u32,
}

/// A sparse element of `S^r`, terms sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    pub terms: Vec<Term>,
}

#[inline]
fn cmp_terms(ord: MonomialOrder, ac: u32, am: &Monomial, bc: u32, bm: &Monomial) -> Ordering {
    if ac != bc {
        bc.cmp(&ac)
    } else {
        ord.compare(am, bm)
    }
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Builds from unsorted terms, combining duplicates.
    pub fn from_terms(field: PrimeField, ord: MonomialOrder, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| cmp_terms(ord, b.comp, &b.mon, a.comp, &a.mon));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.comp == t.comp && l.mon == t.mon => l.coef = field.add(l.coef, t.coef),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coef != 0);
        Vector { terms: out }
    }

    /// The polynomial `f` placed in component `comp`.
    pub fn from_poly(f: &Polynomial, comp: u32, ord: MonomialOrder) -> Self {
        let terms = f.terms().iter().map(|(m, c)| Term { comp, mon: m.clone(), coef: *c }).collect();
        Self::from_terms(f.field(), ord, terms)
    }

    /// A column of polynomials, entry `i` in component `offset + i`.
    pub fn from_column(col: &[Polynomial], offset: u32, ord: MonomialOrder) -> Self {
        let field = match col.first() {
            Some(f) => f.field(),
            None => return Vector::zero(),
        };
        let terms = col
            .iter()
            .enumerate()
            .flat_map(|(i, f)| {
                f.terms().iter().map(move |(m, c)| Term { comp: offset + i as u32, mon: m.clone(), coef: *c })
            })
            .collect();
        Self::from_terms(field, ord, terms)
    }

    /// Splits back into a column of `rank` polynomials, dropping components
    /// outside `offset..offset + rank`.
    pub fn to_column(&self, field: PrimeField, nvars: usize, offset: u32, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            if t.comp >= offset && ((t.comp - offset) as usize) < rank {
                buckets[(t.comp - offset) as usize].push((t.mon.clone(), t.coef));
            }
        }
        buckets.into_iter().map(|b| Polynomial::from_terms(field, nvars, b)).collect()
    }

    pub fn to_poly(&self, field: PrimeField, nvars: usize) -> Polynomial {
        self.to_column(field, nvars, 0, 1).pop().unwrap()
    }

    /// `self - c * mon * other`.
    fn sub_mul(&self, field: PrimeField, ord: MonomialOrder, c: u32, mon: &Monomial, other: &[Term]) -> Vector {
        let a = &self.terms;
        let mut out = Vec::with_capacity(a.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let mut scaled: Option<Term> =
            other.first().map(|t| Term { comp: t.comp, mon: t.mon.mul(mon), coef: field.neg(field.mul(t.coef, c)) });
        while i < a.len() {
            let Some(b) = scaled.as_ref() else { break };
            match cmp_terms(ord, a[i].comp, &a[i].mon, b.comp, &b.mon) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(scaled.take().unwrap());
                    j += 1;
                    scaled = other.get(j).map(|t| Term {
                        comp: t.comp,
                        mon: t.mon.mul(mon),
                        coef: field.neg(field.mul(t.coef, c)),
                    });
                }
                Ordering::Equal => {
                    let s = field.add(a[i].coef, b.coef);
                    if s != 0 {
                        out.push(Term { comp: a[i].comp, mon: a[i].mon.clone(), coef: s });
                    }
                    i += 1;
                    j += 1;
                    scaled = other.get(j).map(|t| Term {
                        comp: t.comp,
                        mon: t.mon.mul(mon),
                        coef: field.neg(field.mul(t.coef, c)),
                    });
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        if let Some(b) = scaled {
            out.push(b);
            out.extend(other[j + 1..].iter().map(|t| Term {
                comp: t.comp,
                mon: t.mon.mul(mon),
                coef: field.neg(field.mul(t.coef, c)),
            }));
        }
        Vector { terms: out }
    }

    pub fn scale(&self, field: PrimeField, c: u32) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term { comp: t.comp, mon: t.mon.clone(), coef: field.mul(t.coef, c) })
                .collect(),
        }
    }

    pub fn monic(&self, field: PrimeField) -> Vector {
        match self.lead() {
            None => self.clone(),
            Some(t) => self.scale(field, field.inv(t.coef)),
        }
    }

    pub fn add(&self, field: PrimeField, ord: MonomialOrder, other: &Vector) -> Vector {
        let one = Monomial::one(self.nvars_or(other));
        self.sub_mul(field, ord, field.neg(1), &one, &other.terms)
    }

    pub fn mul_poly(&self, field: PrimeField, ord: MonomialOrder, f: &Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in f.terms() {
            acc = acc.sub_mul(field, ord, field.neg(*c), m, &self.terms);
        }
        acc
    }

    fn nvars_or(&self, other: &Vector) -> usize {
        self.terms.first().or(other.terms.first()).map(|t| t.mon.nvars()).unwrap_or(0)
    }

    /// Maximum weighted degree over terms.
    pub fn sugar(&self, weights: &[i64]) -> i64 {
        self.terms.iter().map(|t| t.mon.degree() as i64 + weights[t.comp as usize]).max().unwrap_or(0)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    sugar: i64,
    degree: i64,
    j: usize,
    i: usize,
}

/// An incremental Gröbner basis computation.
pub struct GbEngine {
    field: PrimeField,
    ord: MonomialOrder,
    weights: Vec<i64>,
    basis: Vec<Vector>,
    sugar: Vec<i64>,
    by_comp: HashMap<u32, Vec<usize>>,
    queue: BinaryHeap<Reverse<PairKey>>,
    pending: HashSet<(usize, usize)>,
    product_criterion: bool,
    budget: usize,
}

impl GbEngine {
    /// `weights[c]` is the degree of the basis vector `e_c`.
    pub fn new(field: PrimeField, ord: MonomialOrder, weights: Vec<i64>) -> Self {
        let product_criterion = weights.len() <= 1;
        GbEngine {
            field,
            ord,
            weights,
            basis: Vec::new(),
            sugar: Vec::new(),
            by_comp: HashMap::new(),
            queue: BinaryHeap::new(),
            pending: HashSet::new(),
            product_criterion,
            budget: DEFAULT_PAIR_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.ord
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn find_divisor(&self, t: &Term) -> Option<usize> {
        let cands = self.by_comp.get(&t.comp)?;
        cands.iter().copied().find(|&k| {
            let l = self.basis[k].lead().unwrap();
            l.mon.divides(&t.mon)
        })
    }

    /// Reduces `v` by the current basis. With `full = false` only the
    /// leading term is reduced until it is irreducible.
    pub fn reduce(&self, v: &Vector, full: bool) -> Vector {
        let f = self.field;
        let mut rem: Vec<Term> = Vec::new();
        let mut cur = v.clone();
        let mut start = 0;
        while start < cur.terms.len() {
            let t = &cur.terms[start];
            if let Some(k) = self.find_divisor(t) {
                let g = &self.basis[k];
                let gl = g.lead().unwrap();
                let q = gl.mon.quotient_of(&t.mon).unwrap();
                let c = f.mul(t.coef, f.inv(gl.coef));
                let tail = Vector { terms: cur.terms[start + 1..].to_vec() };
                cur = tail.sub_mul(f, self.ord, c, &q, &g.terms[1..]);
                start = 0;
            } else if full {
                rem.push(t.clone());
                start += 1;
            } else {
                rem.extend(cur.terms[start..].iter().cloned());
                break;
            }
        }
        Vector { terms: rem }
    }

    /// True if `v` lies in the module generated so far. Only meaningful
    /// after [`GbEngine::complete`].
    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v, false).is_zero()
    }

    fn insert(&mut self, v: Vector, sugar: i64) {
        let v = v.monic(self.field);
        let idx = self.basis.len();
        let lead = v.lead().unwrap().clone();
        if let Some(others) = self.by_comp.get(&lead.comp) {
            for &k in others {
                let kl = self.basis[k].lead().unwrap();
                let lcm = kl.mon.lcm(&lead.mon);
                if self.product_criterion && kl.mon.is_coprime(&lead.mon) {
                    continue;
                }
                let deg = lcm.degree() as i64 + self.weights[lead.comp as usize];
                let sk = self.sugar[k] + (lcm.degree() - kl.mon.degree()) as i64;
                let sn = sugar + (lcm.degree() - lead.mon.degree()) as i64;
                self.queue.push(Reverse(PairKey { sugar: sk.max(sn), degree: deg, j: idx, i: k }));
                self.pending.insert((k, idx));
            }
        }
        self.by_comp.entry(lead.comp).or_default().push(idx);
        self.basis.push(v);
        self.sugar.push(sugar);
    }

    /// Inserts `v` without pairing it against earlier seeds. Valid only when
    /// every seed is added before any [`GbEngine::add`] and the seeds already
    /// form a Gröbner basis of the module they generate.
    pub fn seed(&mut self, v: Vector) {
        if v.is_zero() {
            return;
        }
        let sugar = v.sugar(&self.weights);
        let v = v.monic(self.field);
        let c = v.lead().unwrap().comp;
        self.by_comp.entry(c).or_default().push(self.basis.len());
        self.basis.push(v);
        self.sugar.push(sugar);
    }

    /// Adds a generator. Call [`GbEngine::complete`] afterwards.
    pub fn add(&mut self, v: Vector) {
        let sugar = v.sugar(&self.weights);
        let r = self.reduce(&v, true);
        if !r.is_zero() {
            self.insert(r, sugar);
        }
    }

    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial, comp: u32) -> bool {
        let Some(cands) = self.by_comp.get(&comp) else { return false };
        cands.iter().any(|&k| {
            if k == i || k == j {
                return false;
            }
            let kl = &self.basis[k].lead().unwrap().mon;
            kl.divides(lcm)
                && !self.pending.contains(&(i.min(k), i.max(k)))
                && !self.pending.contains(&(j.min(k), j.max(k)))
        })
    }

    /// Runs Buchberger's algorithm until all pairs are processed.
    pub fn complete(&mut self) -> Result<()> {
        let mut processed = 0usize;
        while let Some(Reverse(pk)) = self.queue.pop() {
            let (i, j) = (pk.i, pk.j);
            self.pending.remove(&(i, j));
            processed += 1;
            if processed > self.budget {
                return Err(AlgebraError::Resource(format!("Buchberger exceeded {} S-pairs", self.budget)));
            }
            let (gi, gj) = (&self.basis[i], &self.basis[j]);
            let (li, lj) = (gi.lead().unwrap(), gj.lead().unwrap());
            let lcm = li.mon.lcm(&lj.mon);
            if self.chain_criterion(i, j, &lcm, li.comp) {
                continue;
            }
            let qi = li.mon.quotient_of(&lcm).unwrap();
            let qj = lj.mon.quotient_of(&lcm).unwrap();
            // both are monic, so the leading terms cancel
            let left = Vector::zero().sub_mul(self.field, self.ord, self.field.neg(1), &qi, &gi.terms[1..]);
            let s = left.sub_mul(self.field, self.ord, 1, &qj, &gj.terms[1..]);
            let r = self.reduce(&s, true);
            if !r.is_zero() {
                self.insert(r, pk.sugar);
            }
        }
        Ok(())
    }

    /// The reduced Gröbner basis: monic, no leading term divisible by
    /// another, no term of any element divisible by another leading term.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        let mut idx: Vec<usize> = (0..self.basis.len()).collect();
        idx.sort_by(|&a, &b| {
            let (la, lb) = (self.basis[a].lead().unwrap(), self.basis[b].lead().unwrap());
            cmp_terms(self.ord, la.comp, &la.mon, lb.comp, &lb.mon).then(a.cmp(&b))
        });
        let mut keep: Vec<usize> = Vec::new();
        for &a in &idx {
            let la = self.basis[a].lead().unwrap();
            let redundant = keep.iter().any(|&k| {
                let lk = self.basis[k].lead().unwrap();
                lk.comp == la.comp && lk.mon.divides(&la.mon)
            });
            if !redundant {
                keep.push(a);
            }
        }
        // a tail term is never divisible by its own leading monomial
        let mini = Reducer::new(
            self.field,
            self.ord,
            self.weights.clone(),
            keep.iter().map(|&k| self.basis[k].clone()).collect(),
        );
        mini.basis()
            .iter()
            .map(|g| {
                let tail = mini.normal_form(&Vector { terms: g.terms[1..].to_vec() });
                let mut terms = vec![g.terms[0].clone()];
                terms.extend(tail.terms);
                Vector { terms }.monic(self.field)
            })
            .collect()
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn module_basis(
    field: PrimeField,
    ord: MonomialOrder,
    weights: Vec<i64>,
    gens: impl IntoIterator<Item = Vector>,
) -> Result<Vec<Vector>> {
    let mut e = GbEngine::new(field, ord, weights);
    for g in gens {
        e.add(g);
    }
    e.complete()?;
    Ok(e.reduced_basis())
}

/// A finished basis wrapped for repeated normal-form queries.
pub struct Reducer {
    engine: GbEngine,
}

impl Reducer {
    pub fn new(field: PrimeField, ord: MonomialOrder, weights: Vec<i64>, basis: Vec<Vector>) -> Self {
        let mut engine = GbEngine::new(field, ord, weights);
        for b in basis {
            if b.is_zero() {
                continue;
            }
            let c = b.lead().unwrap().comp;
            engine.by_comp.entry(c).or_default().push(engine.basis.len());
            engine.sugar.push(0);
            engine.basis.push(b);
        }
        Reducer { engine }
    }

    pub fn from_engine(engine: GbEngine) -> Self {
        Reducer { engine }
    }

    pub fn normal_form(&self, v: &Vector) -> Vector {
        self.engine.reduce(v, true)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.engine.contains(v)
    }

    pub fn basis(&self) -> &[Vector] {
        self.engine.basis()
    }

    pub fn order(&self) -> MonomialOrder {
        self.engine.ord
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfpoly::{poly, var_names};

    #[test]
    fn s_vector_reduction_lex() {
        let f = PrimeField::new(7).unwrap();
        let v = var_names("x,y");
        let ord = MonomialOrder::Lex;
        let gens = [poly("x^2 - y", &v, f), poly("x", &v, f)];
        let b = module_basis(f, ord, vec![0], gens.iter().map(|g| Vector::from_poly(g, 0, ord))).unwrap();
        let polys: Vec<_> = b.iter().map(|g| g.to_poly(f, 2).display(&v).to_string()).collect();
        assert_eq!(polys, vec!["y", "x"]);
    }

    #[test]
    fn module_membership() {
        let f = PrimeField::new(5).unwrap();
        let v = var_names("x,y");
        let ord = MonomialOrder::GrevLex;
        // submodule of S^2 generated by (x, y) and (y, 0)
        let c1 = Vector::from_column(&[poly("x", &v, f), poly("y", &v, f)], 0, ord);
        let c2 = Vector::from_column(&[poly("y", &v, f), poly("0", &v, f)], 0, ord);
        let mut e = GbEngine::new(f, ord, vec![0, 0]);
        e.add(c1.clone());
        e.add(c2.clone());
        e.complete().unwrap();
        let combo = c1.mul_poly(f, ord, &poly("x+y", &v, f)).add(f, ord, &c2.mul_poly(f, ord, &poly("x^2", &v, f)));
        assert!(e.contains(&combo));
        let outside = Vector::from_column(&[poly("0", &v, f), poly("x", &v, f)], 0, ord);
        assert!(!e.contains(&outside));
    }
}
