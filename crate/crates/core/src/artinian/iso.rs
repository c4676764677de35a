use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{span_basis, Matrix};

use super::module::FiniteLengthModule;

/// Default bound on the size of a searched space for exhaustive search.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// A `k`-basis of `Hom(M, N)`, each map an `N.dim x M.dim` matrix `X`
/// with `X A_i = B_i X`.
///
/// A homomorphism is fixed by the images of a minimal generating set of
/// `M`; the images must satisfy every linear relation among the vectors
/// `m(A) g_j`, which gives a linear system in far fewer unknowns than the
/// full intertwining equations.
pub fn hom_space(m: &FiniteLengthModule, n: &FiniteLengthModule) -> Vec<Matrix> {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    if dm == 0 || dn == 0 {
        return Vec::new();
    }
    let gens = m.generator_indices();
    let words = m.words(&gens);
    let w = Matrix::from_columns(f, dm, &words.iter().map(|w| w.vector.clone()).collect::<Vec<_>>());
    let relations = w.kernel();
    // monomial actions on N, cached by word index
    let nb: Vec<Matrix> = words.iter().map(|w| n.act_monomial(&w.monomial)).collect();
    let unknowns = gens.len() * dn;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for c in &relations {
        let mut block = vec![vec![0u32; unknowns]; dn];
        for (k, &ck) in c.iter().enumerate() {
            if ck == 0 {
                continue;
            }
            let j = words[k].generator;
            for (r, row) in block.iter_mut().enumerate() {
                for t in 0..dn {
                    let v = nb[k].get(r, t);
                    if v != 0 {
                        let slot = &mut row[j * dn + t];
                        *slot = f.add(*slot, f.mul(ck, v));
                    }
                }
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|&x| x != 0)));
    }
    let rows = span_basis(f, unknowns, &rows);
    let solutions = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut v = vec![0; unknowns];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        Matrix::from_rows(f, unknowns, &rows).kernel()
    };
    // express every basis vector of M through independent words
    let pivots = w.independent_columns();
    let square = w.select_columns(&pivots);
    let coords = square.inverse().expect("words span the module");
    solutions
        .iter()
        .map(|sol| {
            let cols: Vec<Vec<u32>> = pivots
                .iter()
                .map(|&k| {
                    let j = words[k].generator;
                    nb[k].mul_vec(&sol[j * dn..(j + 1) * dn])
                })
                .collect();
            Matrix::from_columns(f, dn, &cols).mul(&coords)
        })
        .collect()
}

/// Outcome of an isomorphism test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub verdict: IsoVerdict,
    /// An invertible intertwining matrix when isomorphic.
    pub map: Option<Matrix>,
    /// Candidate maps examined.
    pub trials: u64,
    /// The invariant that separated the modules, if any.
    pub reason: Option<String>,
}

impl IsoWitness {
    fn separated(reason: impl Into<String>) -> Self {
        IsoWitness { verdict: IsoVerdict::NotIsomorphic, map: None, trials: 0, reason: Some(reason.into()) }
    }
}

/// Search parameters for [`modules_isomorphic`].
#[derive(Clone, Copy, Debug)]
pub struct IsoSearch {
    pub seed: u64,
    pub trials: u64,
    pub exhaustive_limit: u64,
}

impl Default for IsoSearch {
    fn default() -> Self {
        IsoSearch { seed: 0, trials: 256, exhaustive_limit: EXHAUSTIVE_LIMIT }
    }
}

/// Projection `N -> N/mN` in coordinates of the chosen generators.
fn top_projection(n: &FiniteLengthModule) -> Matrix {
    let f = n.field();
    let d = n.dim();
    let gens = n.generator_indices();
    let mut radical = Vec::new();
    for a in n.actions() {
        for j in 0..d {
            radical.push(a.column(j));
        }
    }
    let mut basis = span_basis(f, d, &radical);
    let k = basis.len();
    for &g in &gens {
        let mut e = vec![0; d];
        e[g] = 1;
        basis.push(e);
    }
    let inv = Matrix::from_columns(f, d, &basis).inverse().expect("radical plus generators is a basis");
    let rows: Vec<usize> = (k..d).collect();
    inv.select_rows(&rows)
}

fn is_intertwiner(x: &Matrix, m: &FiniteLengthModule, n: &FiniteLengthModule) -> bool {
    m.actions().iter().zip(n.actions()).all(|(a, b)| x.mul(a) == b.mul(x))
}

/// Decides whether two finite-length modules are isomorphic.
///
/// Invariants are compared first. Otherwise a map is invertible exactly
/// when the induced map on `M/mM -> N/mN` is, so the search runs over the
/// span of those small induced matrices: exhaustively when it has at most
/// `exhaustive_limit` elements, otherwise by seeded random draws.
pub fn modules_isomorphic(m: &FiniteLengthModule, n: &FiniteLengthModule, search: IsoSearch) -> IsoWitness {
    let f = m.field();
    if m.nvars() != n.nvars() {
        return IsoWitness::separated("different variable counts");
    }
    if m.dim() != n.dim() {
        return IsoWitness::separated("dimension");
    }
    if m.dim() == 0 {
        return IsoWitness {
            verdict: IsoVerdict::Isomorphic,
            map: Some(Matrix::zeros(f, 0, 0)),
            trials: 0,
            reason: None,
        };
    }
    if m.socle_dimension() != n.socle_dimension() {
        return IsoWitness::separated("socle dimension");
    }
    if m.radical_power_dims() != n.radical_power_dims() {
        return IsoWitness::separated("dimensions of radical powers");
    }
    let hom = hom_space(m, n);
    let (end_m, end_n) = (hom_space(m, m).len(), hom_space(n, n).len());
    if end_m != end_n || hom.len() != end_m || hom_space(n, m).len() != end_m {
        return IsoWitness::separated("dimensions of Hom spaces");
    }
    // induced maps on the tops
    let gens = m.generator_indices();
    let proj = top_projection(n);
    let mu = gens.len();
    let tops: Vec<Vec<u32>> = hom
        .iter()
        .map(|x| {
            let sel = x.select_columns(&gens);
            let t = proj.mul(&sel);
            (0..mu).flat_map(|r| (0..mu).map(move |c| (r, c))).map(|(r, c)| t.get(r, c)).collect()
        })
        .collect();
    // restrict to a basis of the span of induced maps
    let tops_matrix = Matrix::from_columns(f, mu * mu, &tops);
    let pivots = tops_matrix.independent_columns();
    let hp = pivots.len();
    let build = |coeffs: &[u32]| -> Matrix {
        let mut t = Matrix::zeros(f, mu, mu);
        for (c, &k) in coeffs.iter().zip(&pivots) {
            if *c != 0 {
                for r in 0..mu {
                    for s in 0..mu {
                        t.set(r, s, f.add(t.get(r, s), f.mul(*c, tops[k][r * mu + s])));
                    }
                }
            }
        }
        t
    };
    let assemble = |coeffs: &[u32]| -> Matrix {
        let mut x = Matrix::zeros(f, n.dim(), m.dim());
        for (c, &k) in coeffs.iter().zip(&pivots) {
            if *c != 0 {
                x = x.add(&hom[k].scale(*c));
            }
        }
        x
    };
    let finish = |coeffs: &[u32], trials: u64| -> IsoWitness {
        let x = assemble(coeffs);
        debug_assert!(x.is_invertible() && is_intertwiner(&x, m, n));
        IsoWitness { verdict: IsoVerdict::Isomorphic, map: Some(x), trials, reason: None }
    };
    let p = f.characteristic() as u64;
    let space = (p as f64).powi(hp as i32);
    if space <= search.exhaustive_limit as f64 {
        let total = p.pow(hp as u32);
        let mut coeffs = vec![0u32; hp];
        for t in 0..total {
            let mut v = t;
            for c in coeffs.iter_mut() {
                *c = (v % p) as u32;
                v /= p;
            }
            if build(&coeffs).is_invertible() {
                return finish(&coeffs, t + 1);
            }
        }
        return IsoWitness {
            verdict: IsoVerdict::NotIsomorphic,
            map: None,
            trials: total,
            reason: Some("no invertible homomorphism (exhaustive)".into()),
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for t in 0..search.trials {
        let coeffs: Vec<u32> = (0..hp).map(|_| rng.gen_range(0..p as u32)).collect();
        if build(&coeffs).is_invertible() {
            return finish(&coeffs, t + 1);
        }
    }
    IsoWitness { verdict: IsoVerdict::Inconclusive, map: None, trials: search.trials, reason: None }
}
