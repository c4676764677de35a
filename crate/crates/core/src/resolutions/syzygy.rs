//! Kernels of matrices over `R = S/I` by lifting: each column is tagged
//! with a fresh basis vector and the relations of `R` are added untagged,
//! so Gröbner elements supported only on tags are syzygies over `R`.

use crate::error::Result;
use crate::gfpoly::{MonomialOrder, Polynomial};
use crate::groebner::{GbEngine, Term, Vector};
use crate::ring::RingSpec;

pub(crate) type Column = Vec<Polynomial>;

const ORD: MonomialOrder = MonomialOrder::GrevLex;

/// Sugar weights for the engine. Scaled gradings are rounded down, which
/// only affects the order in which pairs are processed.
fn engine_weights(w: &[i64], scale: i64) -> Vec<i64> {
    w.iter().map(|x| x.div_euclid(scale)).collect()
}

fn seed_relations(engine: &mut GbEngine, ring: &RingSpec, comps: usize) -> Result<()> {
    if ring.is_polynomial_ring() {
        return Ok(());
    }
    let basis = ring.ideal().basis()?;
    for c in 0..comps {
        for g in &basis {
            engine.seed(Vector::from_poly(g, c as u32, ORD));
        }
    }
    Ok(())
}

/// Degree of a homogeneous column under the given row weights.
pub(crate) fn column_degree(col: &[Polynomial], row_weights: &[i64], scale: i64) -> Option<i64> {
    col.iter().zip(row_weights).find(|(f, _)| !f.is_zero()).map(|(f, w)| scale * f.total_degree().unwrap() as i64 + w)
}

pub(crate) fn reduce_column(ring: &RingSpec, col: &[Polynomial]) -> Result<Column> {
    col.iter().map(|f| ring.reduce(f)).collect()
}

/// Generators of `{ u in R^m : sum_j u_j c_j = 0 in R^r }` for columns `c_j`.
///
/// `scale * deg(c_j[i]) + row_weights[i] = col_weights[j]` is expected for
/// nonzero entries; the output columns are homogeneous for these weights.
pub(crate) fn kernel_columns(
    ring: &RingSpec,
    rows: usize,
    columns: &[Column],
    row_weights: &[i64],
    col_weights: &[i64],
    scale: i64,
) -> Result<Vec<Column>> {
    let field = ring.field();
    let n = ring.nvars();
    let m = columns.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let mut weights = engine_weights(row_weights, scale);
    weights.extend(engine_weights(col_weights, scale));
    let mut engine = GbEngine::new(field, ORD, weights);
    seed_relations(&mut engine, ring, rows)?;
    for (j, c) in columns.iter().enumerate() {
        let mut v = Vector::from_column(c, 0, ORD);
        let tag =
            Vector { terms: vec![Term { comp: (rows + j) as u32, mon: crate::gfpoly::Monomial::one(n), coef: 1 }] };
        v = v.add(field, ORD, &tag);
        engine.add(v);
    }
    engine.complete()?;
    let mut out = Vec::new();
    for g in engine.basis() {
        if (g.lead().unwrap().comp as usize) < rows {
            continue;
        }
        let col = reduce_column(ring, &g.to_column(field, n, rows as u32, m))?;
        if col.iter().any(|f| !f.is_zero()) {
            out.push(col);
        }
    }
    Ok(out)
}

/// A subset of `candidates` generating the same submodule of `R^rank`
/// (modulo `I R^rank`), chosen greedily by increasing degree. For
/// homogeneous input the result is a minimal generating set.
pub(crate) fn minimal_subset(
    ring: &RingSpec,
    rank: usize,
    candidates: Vec<Column>,
    row_weights: &[i64],
    scale: i64,
) -> Result<Vec<Column>> {
    let field = ring.field();
    let mut cands: Vec<(i64, Column)> =
        candidates.into_iter().filter_map(|c| column_degree(&c, row_weights, scale).map(|d| (d, c))).collect();
    cands.sort_by_key(|(d, _)| *d);
    let mut engine = GbEngine::new(field, ORD, engine_weights(row_weights, scale));
    seed_relations(&mut engine, ring, rank)?;
    let mut kept = Vec::new();
    for (_, c) in cands {
        let v = Vector::from_column(&c, 0, ORD);
        if engine.contains(&v) {
            continue;
        }
        engine.add(v);
        engine.complete()?;
        kept.push(c);
    }
    Ok(kept)
}

/// A reusable membership oracle for a submodule of `R^rank`.
pub(crate) struct SpanOracle {
    engine: GbEngine,
}

impl SpanOracle {
    pub(crate) fn new(
        ring: &RingSpec,
        rank: usize,
        columns: &[Column],
        row_weights: &[i64],
        scale: i64,
    ) -> Result<Self> {
        let mut engine = GbEngine::new(ring.field(), ORD, engine_weights(row_weights, scale));
        seed_relations(&mut engine, ring, rank)?;
        for c in columns {
            engine.add(Vector::from_column(c, 0, ORD));
        }
        engine.complete()?;
        Ok(SpanOracle { engine })
    }

    pub(crate) fn contains(&self, col: &[Polynomial]) -> bool {
        col.iter().all(|f| f.is_zero()) || self.engine.contains(&Vector::from_column(col, 0, ORD))
    }

    /// Gröbner basis elements, for enumerating standard monomials.
    pub(crate) fn basis(&self) -> &[Vector] {
        self.engine.basis()
    }

    pub(crate) fn normal_form(&self, v: &Vector) -> Vector {
        self.engine.reduce(v, true)
    }
}
