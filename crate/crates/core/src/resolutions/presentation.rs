use crate::error::{AlgebraError, Result};
use crate::gfpoly::Polynomial;
use crate::ring::RingSpec;

use super::syzygy::{column_degree, kernel_columns, minimal_subset, reduce_column, Column};

/// The cokernel of a homogeneous matrix over a quotient ring.
///
/// Generator `i` has degree `row_twists[i]` and relation `j` has degree
/// `col_twists[j]`; a nonzero entry `(i, j)` is homogeneous with
/// `degree_scale * deg = col_twists[j] - row_twists[i]`. The scale is 1
/// except for modules graded in `1/p` steps, whose degrees are multiplied
/// by `p`.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    ring: RingSpec,
    rows: usize,
    columns: Vec<Column>,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
    degree_scale: i64,
}

impl ModulePresentation {
    /// Validates shape and homogeneity; entries are reduced modulo the ring's ideal.
    pub fn new(
        ring: RingSpec,
        row_twists: Vec<i64>,
        columns: Vec<Vec<Polynomial>>,
        col_twists: Vec<i64>,
    ) -> Result<Self> {
        Self::with_scale(ring, row_twists, columns, col_twists, 1)
    }

    pub fn with_scale(
        ring: RingSpec,
        row_twists: Vec<i64>,
        columns: Vec<Vec<Polynomial>>,
        col_twists: Vec<i64>,
        degree_scale: i64,
    ) -> Result<Self> {
        let rows = row_twists.len();
        if columns.len() != col_twists.len() {
            return Err(AlgebraError::Shape(format!(
                "{} columns but {} column twists",
                columns.len(),
                col_twists.len()
            )));
        }
        let mut reduced = Vec::with_capacity(columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(AlgebraError::Shape(format!("column {} has {} entries, expected {}", j, c.len(), rows)));
            }
            let c = reduce_column(&ring, c)?;
            for (i, f) in c.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let ok = f.is_homogeneous()
                    && degree_scale * f.total_degree().unwrap() as i64 == col_twists[j] - row_twists[i];
                if !ok {
                    return Err(AlgebraError::Shape(format!("entry ({}, {}) does not match the degree twists", i, j)));
                }
            }
            reduced.push(c);
        }
        Ok(ModulePresentation { ring, rows, columns: reduced, row_twists, col_twists, degree_scale })
    }

    /// Builds from columns, inferring each column twist from its first
    /// nonzero entry. Zero columns are dropped.
    pub fn from_columns(
        ring: RingSpec,
        row_twists: Vec<i64>,
        columns: Vec<Vec<Polynomial>>,
        scale: i64,
    ) -> Result<Self> {
        let mut cols = Vec::new();
        let mut twists = Vec::new();
        for c in columns {
            let c = reduce_column(&ring, &c)?;
            if let Some(d) = column_degree(&c, &row_twists, scale) {
                cols.push(c);
                twists.push(d);
            }
        }
        Self::with_scale(ring, row_twists, cols, twists, scale)
    }

    /// The free module `R^r` with the given generator degrees.
    pub fn free(ring: RingSpec, twists: Vec<i64>) -> Self {
        ModulePresentation {
            ring,
            rows: twists.len(),
            columns: Vec::new(),
            row_twists: twists,
            col_twists: Vec::new(),
            degree_scale: 1,
        }
    }

    /// `R/J` for `J` generated by `gens`.
    pub fn cyclic(ring: RingSpec, gens: &[Polynomial]) -> Result<Self> {
        Self::from_columns(ring, vec![0], gens.iter().map(|g| vec![g.clone()]).collect(), 1)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    /// Number of generators.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of relations.
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j][i]
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i64] {
        &self.col_twists
    }

    pub fn degree_scale(&self) -> i64 {
        self.degree_scale
    }

    /// The same matrix read over another ring with the same variables.
    pub fn over(&self, ring: RingSpec) -> Result<Self> {
        Self::with_scale(
            ring,
            self.row_twists.clone(),
            self.columns.clone(),
            self.col_twists.clone(),
            self.degree_scale,
        )
    }

    /// Multiplies all degrees by `k`, keeping the matrix.
    pub fn rescaled(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.row_twists.iter_mut().for_each(|t| *t *= k);
        out.col_twists.iter_mut().for_each(|t| *t *= k);
        out.degree_scale *= k;
        out
    }

    /// Appends relations (columns), inferring their twists.
    pub fn with_relations(&self, extra: Vec<Vec<Polynomial>>) -> Result<Self> {
        let mut cols = self.columns.clone();
        cols.extend(extra);
        Self::from_columns(self.ring.clone(), self.row_twists.clone(), cols, self.degree_scale)
    }

    /// `M / f M`.
    pub fn modulo_element(&self, f: &Polynomial) -> Result<Self> {
        let extra = (0..self.rows)
            .map(|i| {
                let mut c = vec![self.ring.zero(); self.rows];
                c[i] = f.clone();
                c
            })
            .collect();
        self.with_relations(extra)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.degree_scale != other.degree_scale {
            return Err(AlgebraError::Shape("direct sum of differently scaled presentations".into()));
        }
        let z = self.ring.zero();
        let rows = self.rows + other.rows;
        let mut cols = Vec::new();
        for c in &self.columns {
            let mut v = c.clone();
            v.resize(rows, z.clone());
            cols.push(v);
        }
        for c in &other.columns {
            let mut v = vec![z.clone(); self.rows];
            v.extend(c.iter().cloned());
            cols.push(v);
        }
        let mut rt = self.row_twists.clone();
        rt.extend(other.row_twists.iter().copied());
        let mut ct = self.col_twists.clone();
        ct.extend(other.col_twists.iter().copied());
        Self::with_scale(self.ring.clone(), rt, cols, ct, self.degree_scale)
    }

    /// Removes generators made redundant by relations with a unit entry.
    /// Returns the presentation and the indices of the surviving generators.
    pub fn pruned(&self) -> Result<(Self, Vec<usize>)> {
        let f = self.ring.field();
        let mut cols = self.columns.clone();
        let mut col_twists = self.col_twists.clone();
        let mut alive: Vec<usize> = (0..self.rows).collect();
        loop {
            let mut pivot = None;
            'search: for (j, c) in cols.iter().enumerate() {
                for (i, e) in c.iter().enumerate() {
                    if !e.is_zero() && e.total_degree() == Some(0) {
                        pivot = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            let unit = cols[pj][pi].constant_term();
            let inv = f.inv(unit);
            let pcol = cols.remove(pj);
            col_twists.remove(pj);
            for c in cols.iter_mut() {
                let a = c[pi].clone();
                if !a.is_zero() {
                    let factor = a.scale(inv);
                    let updated: Vec<Polynomial> = c.iter().zip(&pcol).map(|(x, y)| x.sub(&factor.mul(y))).collect();
                    *c = reduce_column(&self.ring, &updated)?;
                }
                c.remove(pi);
            }
            alive.remove(pi);
        }
        let row_twists: Vec<i64> = alive.iter().map(|&i| self.row_twists[i]).collect();
        let mut keep_cols = Vec::new();
        let mut keep_twists = Vec::new();
        for (c, t) in cols.into_iter().zip(col_twists) {
            if c.iter().any(|e| !e.is_zero()) {
                keep_cols.push(c);
                keep_twists.push(t);
            }
        }
        let out = ModulePresentation {
            ring: self.ring.clone(),
            rows: alive.len(),
            columns: keep_cols,
            row_twists,
            col_twists: keep_twists,
            degree_scale: self.degree_scale,
        };
        Ok((out, alive))
    }

    /// A minimal presentation: redundant generators pruned and a minimal
    /// set of relations.
    pub fn minimized(&self) -> Result<Self> {
        Ok(self.minimized_with_generators()?.0)
    }

    /// Like [`ModulePresentation::minimized`], also returning which of the
    /// original generators survive.
    pub fn minimized_with_generators(&self) -> Result<(Self, Vec<usize>)> {
        let (p, alive) = self.pruned()?;
        let cols = minimal_subset(&p.ring, p.rows, p.columns.clone(), &p.row_twists, p.degree_scale)?;
        let out = Self::from_columns(p.ring.clone(), p.row_twists.clone(), cols, p.degree_scale)?;
        Ok((out, alive))
    }

    /// Columns generating the relations among the relations.
    pub fn syzygy_columns(&self) -> Result<Vec<Vec<Polynomial>>> {
        let ker = kernel_columns(
            &self.ring,
            self.rows,
            &self.columns,
            &self.row_twists,
            &self.col_twists,
            self.degree_scale,
        )?;
        minimal_subset(&self.ring, self.cols(), ker, &self.col_twists, self.degree_scale)
    }

    /// True if the presented module is zero.
    pub fn is_zero_module(&self) -> Result<bool> {
        Ok(self.pruned()?.0.rows == 0)
    }

    /// The transposed matrix with negated twists, presenting the cokernel
    /// of the dual map.
    pub fn transposed(&self) -> Result<Self> {
        let cols: Vec<Column> = (0..self.rows).map(|i| self.columns.iter().map(|c| c[i].clone()).collect()).collect();
        Self::with_scale(
            self.ring.clone(),
            self.col_twists.iter().map(|t| -t).collect(),
            cols,
            self.row_twists.iter().map(|t| -t).collect(),
            self.degree_scale,
        )
    }
}

/// The matrix of syzygies: columns generate the kernel of `M`'s matrix as a
/// submodule of its source, presented with the source's twists.
pub fn syzygy_matrix(m: &ModulePresentation) -> Result<ModulePresentation> {
    let cols = m.syzygy_columns()?;
    ModulePresentation::from_columns(m.ring.clone(), m.col_twists.clone(), cols, m.degree_scale)
}

/// Presents `(<K> + <B>) / <B>` for column sets `K`, `B` in `R^rank`.
/// Generators of the result correspond to the columns of `K` listed in the
/// returned index vector.
pub(crate) fn subquotient(
    ring: &RingSpec,
    rank_twists: &[i64],
    k: &[Column],
    b: &[Column],
    scale: i64,
) -> Result<(ModulePresentation, Vec<usize>)> {
    let kt: Vec<i64> = k.iter().map(|c| column_degree(c, rank_twists, scale).unwrap_or(0)).collect();
    let bt: Vec<i64> = b.iter().map(|c| column_degree(c, rank_twists, scale).unwrap_or(0)).collect();
    let mut all: Vec<Column> = k.to_vec();
    all.extend(b.iter().cloned());
    let mut weights = kt.clone();
    weights.extend(bt);
    let ker = kernel_columns(ring, rank_twists.len(), &all, rank_twists, &weights, scale)?;
    let rels: Vec<Column> = ker
        .into_iter()
        .map(|mut c| {
            c.truncate(k.len());
            c
        })
        .collect();
    let p = ModulePresentation::from_columns(ring.clone(), kt, rels, scale)?;
    p.minimized_with_generators()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfpoly::{poly, var_names, PrimeField};

    fn ring(p: u64, vars: &str, gens: &[&str]) -> RingSpec {
        let f = PrimeField::new(p).unwrap();
        let v = var_names(vars);
        let g = gens.iter().map(|g| poly(g, &v, f)).collect();
        RingSpec::new(f, v, g).unwrap()
    }

    fn p(r: &RingSpec, s: &str) -> Polynomial {
        poly(s, r.vars(), r.field())
    }

    #[test]
    fn koszul_syzygy() {
        let s = ring(5, "x,y", &[]);
        let m =
            ModulePresentation::from_columns(s.clone(), vec![0], vec![vec![p(&s, "x")], vec![p(&s, "y")]], 1).unwrap();
        let syz = syzygy_matrix(&m).unwrap();
        assert_eq!(syz.cols(), 1);
        let c = syz.column(0);
        // y * x - x * y = 0 up to sign
        assert!(c[0].mul(&p(&s, "x")).add(&c[1].mul(&p(&s, "y"))).is_zero());
        assert_eq!(c[0].total_degree(), Some(1));
    }

    #[test]
    fn identity_has_no_syzygies() {
        let s = ring(3, "x,y", &[]);
        let m = ModulePresentation::new(
            s.clone(),
            vec![0, 0],
            vec![vec![s.one(), s.zero()], vec![s.zero(), s.one()]],
            vec![0, 0],
        )
        .unwrap();
        assert_eq!(syzygy_matrix(&m).unwrap().cols(), 0);
        assert!(m.is_zero_module().unwrap());
    }

    #[test]
    fn three_monomials_have_two_syzygies() {
        let s = ring(2, "x,y,z", &[]);
        let gens = ["x*y", "x*z", "y*z"].map(|g| vec![p(&s, g)]).to_vec();
        let m = ModulePresentation::from_columns(s.clone(), vec![0], gens, 1).unwrap();
        let syz = syzygy_matrix(&m).unwrap();
        assert_eq!(syz.cols(), 2);
        for c in syz.columns() {
            let sum = c[0].mul(&p(&s, "x*y")).add(&c[1].mul(&p(&s, "x*z"))).add(&c[2].mul(&p(&s, "y*z")));
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn syzygies_over_quotient_ring() {
        // over F_2[x]/(x^2), the kernel of multiplication by x is (x)
        let r = ring(2, "x", &["x^2"]);
        let m = ModulePresentation::from_columns(r.clone(), vec![0], vec![vec![p(&r, "x")]], 1).unwrap();
        let syz = syzygy_matrix(&m).unwrap();
        assert_eq!(syz.cols(), 1);
        assert_eq!(syz.column(0)[0], p(&r, "x"));
    }

    #[test]
    fn pruning_removes_unit_relations() {
        let s = ring(3, "x,y", &[]);
        // generators e0, e1 with e1 = x e0: cyclic, free
        let m = ModulePresentation::new(s.clone(), vec![0, 1], vec![vec![p(&s, "x"), p(&s, "-1")]], vec![1]).unwrap();
        let (q, alive) = m.pruned().unwrap();
        assert_eq!(q.rows(), 1);
        assert_eq!(q.cols(), 0);
        assert_eq!(alive, vec![0]);
    }
}
