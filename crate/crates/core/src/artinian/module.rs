use std::collections::HashMap;

use crate::error::{AlgebraError, Result};
use crate::gfpoly::{Monomial, Polynomial, PrimeField};
use crate::groebner::{standard_monomials, Term, Vector};
use crate::linalg::{span_basis, Matrix};
use crate::resolutions::{ModulePresentation, SpanOracle};
use crate::ring::{monomials_of_degree, RingSpec};

/// A module of finite length over `F_p[x_1..x_n]`: a finite-dimensional
/// vector space with one commuting nilpotent matrix per variable.
///
/// Vectors are columns; `action[i] * v` is `x_i v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLengthModule {
    field: PrimeField,
    nvars: usize,
    dim: usize,
    action: Vec<Matrix>,
    degrees: Option<Vec<i64>>,
}

impl FiniteLengthModule {
    /// Checks that the matrices are square of size `dim`, commute and are nilpotent.
    pub fn new(field: PrimeField, dim: usize, action: Vec<Matrix>, degrees: Option<Vec<i64>>) -> Result<Self> {
        for a in &action {
            if a.rows() != dim || a.cols() != dim {
                return Err(AlgebraError::Shape(format!(
                    "action matrix is {}x{}, expected {}x{}",
                    a.rows(),
                    a.cols(),
                    dim,
                    dim
                )));
            }
        }
        for i in 0..action.len() {
            for j in i + 1..action.len() {
                if action[i].mul(&action[j]) != action[j].mul(&action[i]) {
                    return Err(AlgebraError::InvariantViolation(format!(
                        "actions of variables {} and {} do not commute",
                        i, j
                    )));
                }
            }
        }
        let m = Self::new_unchecked(field, dim, action, degrees);
        if dim > 0 && !m.radical_power_dims().last().is_some_and(|&d| d == 0) {
            return Err(AlgebraError::InvariantViolation("variable actions are not nilpotent".into()));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(field: PrimeField, dim: usize, action: Vec<Matrix>, degrees: Option<Vec<i64>>) -> Self {
        let nvars = action.len();
        FiniteLengthModule { field, nvars, dim, action, degrees }
    }

    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Self::new_unchecked(field, 0, vec![Matrix::zeros(field, 0, 0); nvars], Some(Vec::new()))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Dimension over `F_p`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    /// The matrix of multiplication by `f`.
    pub fn act_poly(&self, f: &Polynomial) -> Matrix {
        let mut acc = Matrix::zeros(self.field, self.dim, self.dim);
        for (m, c) in f.terms() {
            acc = acc.add(&self.act_monomial(m).scale(*c));
        }
        acc
    }

    pub fn act_monomial(&self, m: &Monomial) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.dim);
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                acc = self.action[i].mul(&acc);
            }
        }
        acc
    }

    /// Whether `f` annihilates the module.
    pub fn annihilated_by(&self, f: &Polynomial) -> bool {
        self.act_poly(f).is_zero()
    }

    /// Spanning set of `mM`.
    fn radical_vectors(&self, basis: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for a in &self.action {
            for v in basis {
                let w = a.mul_vec(v);
                if w.iter().any(|&x| x != 0) {
                    out.push(w);
                }
            }
        }
        out
    }

    fn standard_basis(&self) -> Vec<Vec<u32>> {
        (0..self.dim)
            .map(|i| {
                let mut v = vec![0; self.dim];
                v[i] = 1;
                v
            })
            .collect()
    }

    /// Dimensions of `M, mM, m^2 M, ...` ending with the first zero.
    pub fn radical_power_dims(&self) -> Vec<usize> {
        let mut cur = span_basis(self.field, self.dim, &self.standard_basis());
        let mut out = vec![cur.len()];
        while !cur.is_empty() {
            let next = span_basis(self.field, self.dim, &self.radical_vectors(&cur));
            if next.len() == cur.len() {
                // not nilpotent; stop rather than loop
                out.push(next.len());
                break;
            }
            cur = next;
            out.push(cur.len());
        }
        out
    }

    /// Smallest `L` with `m^L M = 0`.
    pub fn loewy_length(&self) -> usize {
        self.radical_power_dims().len() - 1
    }

    /// `dim_k M/mM`.
    pub fn minimal_generator_count(&self) -> usize {
        let d = self.radical_power_dims();
        d[0] - d.get(1).copied().unwrap_or(0)
    }

    /// Basis of `(0 :_M m)`.
    pub fn socle_basis(&self) -> Vec<Vec<u32>> {
        if self.nvars == 0 {
            return self.standard_basis();
        }
        let stacked = self.action.iter().skip(1).fold(self.action[0].clone(), |acc, a| acc.vstack(a));
        stacked.kernel()
    }

    pub fn socle_dimension(&self) -> usize {
        self.socle_basis().len()
    }

    /// Matlis dual: transposed actions on the dual basis, degrees negated.
    pub fn matlis_dual(&self) -> Self {
        Self::new_unchecked(
            self.field,
            self.dim,
            self.action.iter().map(|a| a.transpose()).collect(),
            self.degrees.as_ref().map(|d| d.iter().map(|x| -x).collect()),
        )
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let degrees = match (&self.degrees, &other.degrees) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Self::new_unchecked(
            self.field,
            self.dim + other.dim,
            self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect(),
            degrees,
        )
    }

    /// `M^n`.
    pub fn power(&self, n: usize) -> Self {
        let mut acc = Self::zero(self.field, self.nvars);
        acc.degrees = self.degrees.as_ref().map(|_| Vec::new());
        for _ in 0..n {
            acc = acc.direct_sum(self);
        }
        acc
    }

    /// `M / U` for a submodule `U` spanned by `vectors`.
    pub fn quotient(&self, vectors: &[Vec<u32>]) -> Self {
        let f = self.field;
        let sub = span_basis(f, self.dim, vectors);
        // extend by standard vectors
        let mut full = sub.clone();
        let mut complement = Vec::new();
        for i in 0..self.dim {
            let mut e = vec![0; self.dim];
            e[i] = 1;
            let mut trial = full.clone();
            trial.push(e.clone());
            if span_basis(f, self.dim, &trial).len() > full.len() {
                full.push(e);
                complement.push(i);
            }
        }
        let basis = Matrix::from_columns(f, self.dim, &full);
        let inv = basis.inverse().expect("extended basis is invertible");
        let k = sub.len();
        let q = complement.len();
        let action = self
            .action
            .iter()
            .map(|a| {
                let img = inv.mul(a).mul(&basis);
                let mut m = Matrix::zeros(f, q, q);
                for r in 0..q {
                    for c in 0..q {
                        m.set(r, c, img.get(k + r, k + c));
                    }
                }
                m
            })
            .collect();
        let degrees = self.degrees.as_ref().map(|d| complement.iter().map(|&i| d[i]).collect());
        Self::new_unchecked(f, q, action, degrees)
    }

    /// `M / f M`.
    pub fn quotient_by_element(&self, f: &Polynomial) -> Self {
        let a = self.act_poly(f);
        let imgs: Vec<Vec<u32>> = (0..self.dim).map(|j| a.column(j)).collect();
        self.quotient(&imgs)
    }

    /// A homogeneous complement of `mM`, as standard basis indices chosen
    /// by increasing degree.
    pub fn generator_indices(&self) -> Vec<usize> {
        let f = self.field;
        let mut span = span_basis(f, self.dim, &self.radical_vectors(&self.standard_basis()));
        let mut order: Vec<usize> = (0..self.dim).collect();
        if let Some(d) = &self.degrees {
            order.sort_by_key(|&i| (d[i], i));
        }
        let mut out = Vec::new();
        for i in order {
            let mut e = vec![0; self.dim];
            e[i] = 1;
            let mut trial = span.clone();
            trial.push(e);
            let next = span_basis(f, self.dim, &trial);
            if next.len() > span.len() {
                span = next;
                out.push(i);
            }
        }
        out
    }

    /// Vectors `m(A) g_j` for every generator `g_j` and every monomial `m`
    /// of degree at most the Loewy length.
    pub(crate) fn words(&self, gens: &[usize]) -> Vec<Word> {
        let l = self.loewy_length() as u64;
        let mut out = Vec::new();
        for (j, &g) in gens.iter().enumerate() {
            let mut e = vec![0; self.dim];
            e[g] = 1;
            let mut cache: HashMap<Monomial, Vec<u32>> = HashMap::new();
            cache.insert(Monomial::one(self.nvars), e);
            for d in 0..=l {
                for m in monomials_of_degree(self.nvars, d) {
                    let v = if d == 0 {
                        cache[&m].clone()
                    } else {
                        let i = m.exponents().iter().position(|&x| x > 0).unwrap();
                        let prev = Monomial::var(self.nvars, i).quotient_of(&m).unwrap();
                        let v = self.action[i].mul_vec(&cache[&prev]);
                        cache.insert(m.clone(), v.clone());
                        v
                    };
                    out.push(Word { generator: j, monomial: m, vector: v });
                }
            }
        }
        out
    }

    /// A minimal graded presentation over `R`, whose relations must
    /// annihilate the module.
    pub fn minimal_presentation(&self, ring: &RingSpec) -> Result<ModulePresentation> {
        let degrees = self.degrees.as_ref().ok_or_else(|| AlgebraError::Shape("a graded module is required".into()))?;
        let f = self.field;
        let gens = self.generator_indices();
        let gen_deg: Vec<i64> = gens.iter().map(|&g| degrees[g]).collect();
        let words = self.words(&gens);
        let mut by_degree: HashMap<i64, Vec<usize>> = HashMap::new();
        for (k, w) in words.iter().enumerate() {
            by_degree.entry(gen_deg[w.generator] + w.monomial.degree() as i64).or_default().push(k);
        }
        let mut keys: Vec<i64> = by_degree.keys().copied().collect();
        keys.sort();
        let n = self.nvars;
        let mut relations = Vec::new();
        for d in keys {
            let idx = &by_degree[&d];
            let w =
                Matrix::from_columns(f, self.dim, &idx.iter().map(|&k| words[k].vector.clone()).collect::<Vec<_>>());
            for c in w.kernel() {
                let mut col = vec![Polynomial::zero(f, n); gens.len()];
                for (t, &k) in idx.iter().enumerate() {
                    if c[t] != 0 {
                        let wk = &words[k];
                        col[wk.generator] = col[wk.generator].add(&Polynomial::term(f, wk.monomial.clone(), c[t]));
                    }
                }
                relations.push(col);
            }
        }
        ModulePresentation::from_columns(ring.clone(), gen_deg, relations, 1)?.minimized()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Word {
    pub generator: usize,
    pub monomial: Monomial,
    pub vector: Vec<u32>,
}

/// Realizes a finite-length cokernel as explicit vector space and actions.
/// The basis is the standard monomials of each summand modulo the leading
/// terms of a module Gröbner basis of the relations.
pub fn realize_finite(m: &ModulePresentation) -> Result<FiniteLengthModule> {
    let ring = m.ring();
    let field = ring.field();
    let n = ring.nvars();
    let oracle = SpanOracle::new(ring, m.rows(), m.columns(), m.row_twists(), m.degree_scale())?;
    let mut basis: Vec<(u32, Monomial)> = Vec::new();
    let mut degrees = Vec::new();
    for c in 0..m.rows() {
        let leads: Vec<Monomial> = oracle
            .basis()
            .iter()
            .filter_map(|v| v.lead().filter(|t| t.comp == c as u32).map(|t| t.mon.clone()))
            .collect();
        let std = standard_monomials(n, &leads).ok_or(AlgebraError::InfiniteLength)?;
        for mon in std {
            degrees.push(m.row_twists()[c] + m.degree_scale() * mon.degree() as i64);
            basis.push((c as u32, mon));
        }
    }
    let index: HashMap<(u32, Monomial), usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let dim = basis.len();
    let mut action = vec![Matrix::zeros(field, dim, dim); n];
    for (col, (c, mon)) in basis.iter().enumerate() {
        for (i, a) in action.iter_mut().enumerate() {
            let v = Vector { terms: vec![Term { comp: *c, mon: mon.mul(&Monomial::var(n, i)), coef: 1 }] };
            let nf = oracle.normal_form(&v);
            for t in nf.terms {
                let row = index[&(t.comp, t.mon)];
                a.set(row, col, t.coef);
            }
        }
    }
    Ok(FiniteLengthModule::new_unchecked(field, dim, action, Some(degrees)))
}

/// The ring `R` as a module over itself, when it is Artinian.
pub fn ring_module(r: &RingSpec) -> Result<FiniteLengthModule> {
    realize_finite(&ModulePresentation::free(r.clone(), vec![0]))
}

/// `E_R(k)`, the Matlis dual of an Artinian ring.
pub fn injective_hull(r: &RingSpec) -> Result<FiniteLengthModule> {
    Ok(ring_module(r)?.matlis_dual())
}

/// `dim_k (0 : m)` of a finite-length module.
pub fn socle_dimension(m: &FiniteLengthModule) -> usize {
    m.socle_dimension()
}

/// Matlis dual of a finite-length module.
pub fn matlis_dual(m: &FiniteLengthModule) -> FiniteLengthModule {
    m.matlis_dual()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfpoly::{poly, var_names};

    fn ring(p: u64, vars: &str, gens: &[&str]) -> RingSpec {
        let f = PrimeField::new(p).unwrap();
        let v = var_names(vars);
        let g = gens.iter().map(|g| poly(g, &v, f)).collect();
        RingSpec::new(f, v, g).unwrap()
    }

    #[test]
    fn realize_small_rings() {
        let r = ring(3, "x,y", &["x^2", "x*y", "y^2"]);
        let m = ring_module(&r).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.socle_dimension(), 2);
        let k = realize_finite(&ModulePresentation::cyclic(r.clone(), &[r.var(0), r.var(1)]).unwrap()).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.actions().iter().all(|a| a.is_zero()));
        let r2 = ring(2, "x", &["x^2"]);
        let c = realize_finite(&ModulePresentation::cyclic(r2.clone(), &[r2.var(0)]).unwrap()).unwrap();
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn infinite_length_is_rejected() {
        let r = ring(2, "x,y", &["x*y"]);
        assert_eq!(ring_module(&r).unwrap_err(), AlgebraError::InfiniteLength);
    }

    #[test]
    fn socles() {
        assert_eq!(ring_module(&ring(5, "x", &["x^4"])).unwrap().socle_dimension(), 1);
        let field = ring(7, "x", &["x"]);
        assert_eq!(ring_module(&field).unwrap().socle_dimension(), 1);
    }

    #[test]
    fn dual_of_socle_two_ring_needs_two_generators() {
        let r = ring(2, "x,y", &["x^2", "x*y", "y^2"]);
        let e = injective_hull(&r).unwrap();
        assert_eq!(e.minimal_generator_count(), 2);
        let pres = e.minimal_presentation(&r).unwrap();
        assert_eq!(pres.rows(), 2);
        assert_eq!(realize_finite(&pres).unwrap().dim(), 3);
    }

    #[test]
    fn quotient_by_element_and_loewy_length() {
        let r = ring(3, "x", &["x^5"]);
        let m = ring_module(&r).unwrap();
        assert_eq!(m.loewy_length(), 5);
        let q = m.quotient_by_element(&poly("x^2", r.vars(), r.field()));
        assert_eq!(q.dim(), 2);
        assert_eq!(q.loewy_length(), 2);
    }

    #[test]
    fn constructor_checks() {
        let f = PrimeField::new(2).unwrap();
        let a = Matrix::from_rows(f, 2, &[vec![0, 1], vec![0, 0]]);
        let b = Matrix::from_rows(f, 2, &[vec![0, 0], vec![1, 0]]);
        assert!(FiniteLengthModule::new(f, 2, vec![a.clone(), b], None).is_err());
        assert!(FiniteLengthModule::new(f, 2, vec![Matrix::identity(f, 2)], None).is_err());
        assert!(FiniteLengthModule::new(f, 2, vec![a], None).is_ok());
    }
}
