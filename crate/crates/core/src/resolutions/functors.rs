use crate::error::{AlgebraError, Result};
use crate::gfpoly::{Monomial, Polynomial};
use crate::ring::RingSpec;

use super::presentation::{subquotient, ModulePresentation};
use super::resolution::minimal_free_resolution;
use super::syzygy::{column_degree, kernel_columns, minimal_subset, reduce_column, Column};

/// `ω_R = Ext^{n-1}_S(R, S(-n))` for a one-dimensional graded quotient
/// `R = S/I`, presented over `R`.
pub fn canonical_module(r: &RingSpec) -> Result<ModulePresentation> {
    let dim = r.hilbert_data()?.dimension;
    if dim != 1 {
        return Err(AlgebraError::UnsupportedDimension(dim));
    }
    let n = r.nvars();
    let s = r.ambient();
    let cyc = ModulePresentation::cyclic(s.clone(), r.ideal().generators())?;
    let res = minimal_free_resolution(&cyc, n + 1)?;
    // F_{n-1}^* with dual degrees shifted by n
    let k = n - 1;
    let dual_twists: Vec<i64> = res.twists(k).iter().map(|t| n as i64 - t).collect();
    let rank = dual_twists.len();
    // kernel of d_n^T : F_{n-1}^* -> F_n^*
    let kernel: Vec<Column> = match res.maps.get(k) {
        Some(dn) => {
            let dt = dn.transposed()?;
            // columns of d_n^T are indexed by F_{n-1}
            let cols: Vec<Column> = dt.columns().to_vec();
            let row_w: Vec<i64> = res.twists(n).iter().map(|t| n as i64 - t).collect();
            let ker = kernel_columns(&s, row_w.len(), &cols, &row_w, &dual_twists, 1)?;
            minimal_subset(&s, rank, ker, &dual_twists, 1)?
        }
        None => (0..rank)
            .map(|i| {
                let mut c = vec![s.zero(); rank];
                c[i] = s.one();
                c
            })
            .collect(),
    };
    // image of d_{n-1}^T : F_{n-2}^* -> F_{n-1}^*
    let image: Vec<Column> = if k == 0 {
        Vec::new()
    } else {
        let d = &res.maps[k - 1];
        (0..d.rows()).map(|i| d.columns().iter().map(|c| c[i].clone()).collect()).collect()
    };
    let (over_s, _) = subquotient(&s, &dual_twists, &kernel, &image, 1)?;
    over_s.over(r.clone())?.minimized()
}

/// A presentation of `Hom_R(M, N)` together with the maps its generators
/// stand for.
#[derive(Clone, Debug)]
pub struct HomPresentation {
    pub module: ModulePresentation,
    /// `maps[g][i]` is the image of the `i`-th generator of `M` under the
    /// `g`-th generator, as a column over `N`'s generators.
    pub maps: Vec<Vec<Column>>,
    source_rows: usize,
    target_rows: usize,
}

impl HomPresentation {
    /// Image of source generator `i` under the homomorphism
    /// `sum_g coeffs[g] * maps[g]`, as a column over `N`'s generators.
    pub fn evaluate(&self, coeffs: &[Polynomial], i: usize) -> Result<Column> {
        let ring = self.module.ring();
        let mut acc = vec![ring.zero(); self.target_rows];
        for (g, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, e) in self.maps[g][i].iter().enumerate() {
                acc[k] = acc[k].add(&c.mul(e));
            }
        }
        reduce_column(ring, &acc)
    }

    pub fn source_rows(&self) -> usize {
        self.source_rows
    }

    pub fn target_rows(&self) -> usize {
        self.target_rows
    }
}

/// Columns in `R^{c a}` whose images in `N^a` form the homomorphisms `M -> N`,
/// with the degree twists of `R^{c a}`. Generator `(i, k)` sits at index
/// `i * c + k`.
fn hom_generators(m: &ModulePresentation, n: &ModulePresentation) -> Result<(Vec<Column>, Vec<i64>, i64)> {
    let (m, n) = align_scales(m, n);
    let ring = m.ring().clone();
    let scale = m.degree_scale();
    let (a, c) = (m.rows(), n.rows());
    let twists: Vec<i64> =
        (0..a).flat_map(|i| (0..c).map(move |k| (i, k))).map(|(i, k)| n.row_twists()[k] - m.row_twists()[i]).collect();
    let z = ring.zero();
    // Φ = φ^T ⊗ I_c : R^{ca} -> R^{cb}
    let b = m.cols();
    let mut cols: Vec<Column> = Vec::new();
    let mut col_w: Vec<i64> = twists.clone();
    for i in 0..a {
        for k in 0..c {
            let mut col = vec![z.clone(); c * b];
            for j in 0..b {
                col[j * c + k] = m.column(j)[i].clone();
            }
            cols.push(col);
        }
    }
    let row_w: Vec<i64> =
        (0..b).flat_map(|j| (0..c).map(move |k| (j, k))).map(|(j, k)| n.row_twists()[k] - m.col_twists()[j]).collect();
    // ψ^{⊕b}
    for j in 0..b {
        for (l, psi) in n.columns().iter().enumerate() {
            let mut col = vec![z.clone(); c * b];
            for k in 0..c {
                col[j * c + k] = psi[k].clone();
            }
            cols.push(col);
            col_w.push(n.col_twists()[l] - m.col_twists()[j]);
        }
    }
    if b == 0 {
        // every assignment of generators is a homomorphism
        let ident: Vec<Column> = (0..a * c)
            .map(|t| {
                let mut col = vec![z.clone(); a * c];
                col[t] = ring.one();
                col
            })
            .collect();
        return Ok((ident, twists, scale));
    }
    let ker = kernel_columns(&ring, c * b, &cols, &row_w, &col_w, scale)?;
    let proj: Vec<Column> = ker
        .into_iter()
        .map(|mut v| {
            v.truncate(a * c);
            v
        })
        .collect();
    let gens = minimal_subset(&ring, a * c, proj, &twists, scale)?;
    Ok((gens, twists, scale))
}

fn align_scales(m: &ModulePresentation, n: &ModulePresentation) -> (ModulePresentation, ModulePresentation) {
    let (sm, sn) = (m.degree_scale(), n.degree_scale());
    let l = sm / gcd(sm, sn) * sn;
    (m.rescaled(l / sm), n.rescaled(l / sn))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `Hom_R(M, N)`, presented as `ker(N^a -> N^b)` modulo nothing further.
pub fn hom_presentation(m: &ModulePresentation, n: &ModulePresentation) -> Result<HomPresentation> {
    let (gens, twists, scale) = hom_generators(m, n)?;
    let (a, c) = (m.rows(), n.rows());
    let ring = m.ring().clone();
    let z = ring.zero();
    // relations: ψ^{⊕a}
    let nn = align_scales(m, n).1;
    let mut b: Vec<Column> = Vec::new();
    for i in 0..a {
        for psi in nn.columns() {
            let mut col = vec![z.clone(); a * c];
            for k in 0..c {
                col[i * c + k] = psi[k].clone();
            }
            b.push(col);
        }
    }
    let (module, alive) = subquotient(&ring, &twists, &gens, &b, scale)?;
    let maps = alive.iter().map(|&g| (0..a).map(|i| gens[g][i * c..(i + 1) * c].to_vec()).collect()).collect();
    Ok(HomPresentation { module, maps, source_rows: a, target_rows: c })
}

/// Exponent vectors with all entries below `p`, in lexicographic order.
pub fn digit_exponents(n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |d| {
                    let mut w = v.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out
}

fn digit_index(a: &[u32], p: u32) -> usize {
    a.iter().fold(0usize, |acc, &d| acc * p as usize + d as usize)
}

/// `F_*R` as an `R`-module: generators `e_a = x^a` for `0 <= a_i < p` of
/// degree `|a|`, in `p`-scaled degrees.
pub fn frobenius_pushforward(r: &RingSpec, e: u32) -> Result<ModulePresentation> {
    if e != 1 {
        return Err(AlgebraError::Shape("only the first Frobenius pushforward is supported".into()));
    }
    let p = r.p();
    let n = r.nvars();
    let field = r.field();
    let digits = digit_exponents(n, p);
    let row_twists: Vec<i64> = digits.iter().map(|a| a.iter().sum::<u32>() as i64).collect();
    let mut cols = Vec::new();
    let mut twists = Vec::new();
    for g in r.ideal().generators() {
        for c in &digits {
            let xc = Monomial::new(c);
            let prod = g.mul_term(&xc, 1);
            let mut col = vec![Vec::new(); digits.len()];
            for (mon, coef) in prod.terms() {
                let ex = mon.exponents();
                let a: Vec<u32> = ex.iter().map(|x| x % p).collect();
                let b: Vec<u32> = ex.iter().map(|x| x / p).collect();
                col[digit_index(&a, p)].push((Monomial::new(&b), *coef));
            }
            let col: Vec<Polynomial> = col.into_iter().map(|t| Polynomial::from_terms(field, n, t)).collect();
            twists.push(prod.total_degree().unwrap_or(0) as i64);
            cols.push(col);
        }
    }
    let cols = cols.into_iter().map(|c| reduce_column(r, &c)).collect::<Result<Vec<_>>>()?;
    let keep: Vec<usize> = (0..cols.len()).filter(|&j| cols[j].iter().any(|f| !f.is_zero())).collect();
    ModulePresentation::with_scale(
        r.clone(),
        row_twists,
        keep.iter().map(|&j| cols[j].clone()).collect(),
        keep.iter().map(|&j| twists[j]).collect(),
        p as i64,
    )
}

/// Applies the action of `x_i` on `Hom_R(F_*R, R)` given by
/// `(x_i φ)(s) = φ(x_i s)`, to a homomorphism stored by its values on the
/// generators `e_a`.
fn left_action(r: &RingSpec, digits: &[Vec<u32>], v: &[Polynomial], i: usize) -> Vec<Polynomial> {
    let p = r.p();
    digits
        .iter()
        .map(|a| {
            let mut b = a.clone();
            if a[i] + 1 < p {
                b[i] += 1;
                v[digit_index(&b, p)].clone()
            } else {
                b[i] -= p - 1;
                v[digit_index(&b, p)].mul(&r.var(i))
            }
        })
        .collect()
}

/// `Hom_R(F_*R, R)` as an `R`-module through the source,
/// `(r φ)(s) = φ(r s)`, minimally presented.
pub fn pushforward_dual(r: &RingSpec) -> Result<ModulePresentation> {
    let p = r.p();
    let n = r.nvars();
    let field = r.field();
    let push = frobenius_pushforward(r, 1)?;
    let free = ModulePresentation::free(r.clone(), vec![0]);
    let (gens, twists, _) = hom_generators(&push, &free)?;
    let digits = digit_exponents(n, p);
    let pi = p as i64;
    // left degree of a homogeneous φ is p deg φ(e_a) - |a|; x_i raises it by one
    let left_deg = |v: &[Polynomial]| -> i64 {
        let (k, f) = v.iter().enumerate().find(|(_, f)| !f.is_zero()).unwrap();
        pi * f.total_degree().unwrap() as i64 + twists[k]
    };
    let m = gens.len();
    let gen_deg: Vec<i64> = gens.iter().map(|g| left_deg(g)).collect();
    // Ψ: columns x^a ·_L h_j, indexed (j, a)
    let mut cols: Vec<Column> = Vec::with_capacity(m * digits.len());
    let mut col_w = Vec::new();
    for (j, h) in gens.iter().enumerate() {
        for a in &digits {
            let mut v = h.clone();
            for (i, &ai) in a.iter().enumerate() {
                for _ in 0..ai {
                    v = reduce_column(r, &left_action(r, &digits, &v, i))?;
                }
            }
            col_w.push(gen_deg[j] + a.iter().sum::<u32>() as i64);
            cols.push(v);
        }
    }
    let ker = kernel_columns(r, digits.len(), &cols, &twists, &col_w, pi)?;
    let na = digits.len();
    let rels: Vec<Column> = ker
        .iter()
        .map(|u| {
            (0..m)
                .map(|j| {
                    let mut acc = Polynomial::zero(field, n);
                    for (ai, a) in digits.iter().enumerate() {
                        let uj = &u[j * na + ai];
                        if !uj.is_zero() {
                            acc = acc.add(&uj.frobenius_power(1).mul_term(&Monomial::new(a), 1));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let rels = rels.into_iter().map(|c| reduce_column(r, &c)).collect::<Result<Vec<_>>>()?;
    let pres = ModulePresentation::from_columns(r.clone(), gen_deg, rels, 1)?;
    pres.minimized()
}

/// The ideal quotient `(I^[p] : I) / I^[p]` as an `R`-module; isomorphic to
/// [`pushforward_dual`] and much cheaper to compute.
pub fn fedder_module(r: &RingSpec) -> Result<ModulePresentation> {
    use crate::groebner::{bracket_power, ideal_colon};
    let ip = bracket_power(r.ideal(), 1);
    let colon = ideal_colon(&ip, r.ideal())?;
    let gens = colon.minimal_generators()?;
    let row_w: Vec<i64> = gens.iter().map(|g| g.total_degree().unwrap_or(0) as i64).collect();
    // relations: syzygies of the generators modulo I^[p]
    let s_mod = RingSpec::affine(r.field(), r.vars().to_vec(), ip.generators().to_vec());
    let cols: Vec<Column> = gens.iter().map(|g| vec![g.clone()]).collect();
    let ker = kernel_columns(&s_mod, 1, &cols, &[0], &row_w, 1)?;
    let pres = ModulePresentation::from_columns(r.clone(), row_w, ker, 1)?;
    pres.minimized()
}

/// Whether `M ≅ R(-t)` for some twist `t`, with `t` when so.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeRankOne {
    pub free: bool,
    pub twist: Option<i64>,
    pub minimal_generators: usize,
}

pub fn is_free_rank_one(m: &ModulePresentation) -> Result<FreeRankOne> {
    let (p, _) = m.pruned()?;
    let gens = p.rows();
    let free = gens == 1 && p.columns().iter().all(|c| c.iter().all(|f| f.is_zero()));
    Ok(FreeRankOne { free, twist: if free { Some(p.row_twists()[0]) } else { None }, minimal_generators: gens })
}

/// Degree of a homogeneous column, exposed for callers that build their own
/// presentations.
pub fn homogeneous_degree(col: &[Polynomial], row_twists: &[i64], scale: i64) -> Option<i64> {
    column_degree(col, row_twists, scale)
}
