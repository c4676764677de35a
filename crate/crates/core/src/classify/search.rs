//! Candidate enumeration shared by the randomized searches.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::gfpoly::{Monomial, Polynomial, PrimeField};
use crate::linalg::Matrix;
use crate::ring::RingSpec;

/// Knobs for every seeded search in the pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    /// Random draws per search space once it is too large to enumerate.
    pub trials: u64,
    /// Highest degree tried for non-zero-divisors, and the width of the
    /// degree window searched for embeddings and multipliers.
    pub max_degree: u64,
    /// Spaces with at most this many projective points are enumerated.
    pub exhaustive_limit: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { seed: 0, trials: 256, max_degree: 2, exhaustive_limit: 4096 }
    }
}

impl SearchOptions {
    pub(crate) fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// Coefficient vectors over a `k`-dimensional space.
pub(crate) struct Candidates {
    pub vectors: Vec<Vec<u32>>,
    /// True when every line of the space is represented.
    pub exhaustive: bool,
}

fn projective_count(p: u64, k: usize) -> Option<u64> {
    let mut total: u64 = 1;
    for _ in 0..k {
        total = total.checked_mul(p)?;
    }
    Some((total - 1) / (p - 1))
}

/// One representative per line of `F_p^k` when there are few enough, in a
/// seed-dependent order; otherwise the coordinate vectors followed by
/// `trials` random vectors. Seed 0 keeps the coordinate vectors first,
/// then the all-ones vector, then lexicographic order.
pub(crate) fn candidates(field: PrimeField, k: usize, opts: &SearchOptions, salt: u64) -> Candidates {
    let p = field.characteristic() as u64;
    let mut rng = opts.rng(salt);
    let unit = |i: usize| {
        let mut v = vec![0u32; k];
        v[i] = 1;
        v
    };
    if k == 0 {
        return Candidates { vectors: Vec::new(), exhaustive: true };
    }
    match projective_count(p, k) {
        Some(count) if count <= opts.exhaustive_limit => {
            let mut out: Vec<Vec<u32>> = (0..k).map(unit).collect();
            let ones = vec![1u32; k];
            if k > 1 {
                out.push(ones.clone());
            }
            let total = p.pow(k as u32);
            for code in 1..total {
                let mut digits = vec![0u32; k];
                let mut c = code;
                for d in digits.iter_mut().rev() {
                    *d = (c % p) as u32;
                    c /= p;
                }
                let lead = digits.iter().find(|&&d| d != 0).copied();
                if lead != Some(1) || digits == ones || digits.iter().filter(|&&d| d != 0).count() == 1 {
                    continue;
                }
                out.push(digits);
            }
            if opts.seed != 0 {
                out.shuffle(&mut rng);
            }
            Candidates { vectors: out, exhaustive: true }
        }
        _ => {
            let mut out: Vec<Vec<u32>> = (0..k).map(unit).collect();
            if opts.seed != 0 {
                out.shuffle(&mut rng);
            }
            for _ in 0..opts.trials {
                let v: Vec<u32> = (0..k).map(|_| rng.gen_range(0..p as u32)).collect();
                if v.iter().any(|&x| x != 0) {
                    out.push(v);
                }
            }
            Candidates { vectors: out, exhaustive: false }
        }
    }
}

/// `sum_i c_i b_i`.
pub(crate) fn combine(field: PrimeField, nvars: usize, basis: &[Polynomial], coeffs: &[u32]) -> Polynomial {
    let mut acc = Polynomial::zero(field, nvars);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

/// Coordinates of homogeneous polynomials of degree `d` over the standard
/// monomials of `R` in that degree.
pub(crate) fn coordinates(r: &RingSpec, d: u64, polys: &[Polynomial]) -> Result<(Vec<Monomial>, Vec<Vec<u32>>)> {
    let std = r.standard_monomials_of_degree(d)?;
    let mut out = Vec::with_capacity(polys.len());
    for f in polys {
        let nf = r.reduce(f)?;
        let mut v = vec![0u32; std.len()];
        for (m, c) in nf.terms() {
            if let Some(i) = std.iter().position(|s| s == m) {
                v[i] = *c;
            }
        }
        out.push(v);
    }
    Ok((std, out))
}

/// An `F_p`-basis of the degree-`d` part of the ideal of `R` generated by
/// `gens`, as reduced polynomials.
pub(crate) fn degree_part(r: &RingSpec, gens: &[Polynomial], d: u64) -> Result<Vec<Polynomial>> {
    let n = r.nvars();
    let mut spanning = Vec::new();
    for g in gens {
        let g = r.reduce(g)?;
        let gd = match g.total_degree() {
            Some(x) => x,
            None => continue,
        };
        if gd > d {
            continue;
        }
        for m in crate::ring::monomials_of_degree(n, d - gd) {
            spanning.push(g.mul_term(&m, 1));
        }
    }
    independent(r, d, &spanning)
}

/// A linearly independent subset (over `F_p`) of homogeneous degree-`d`
/// polynomials, reduced in `R`, spanning the same space.
pub(crate) fn independent(r: &RingSpec, d: u64, polys: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if polys.is_empty() {
        return Ok(Vec::new());
    }
    let (std, coords) = coordinates(r, d, polys)?;
    if std.is_empty() {
        return Ok(Vec::new());
    }
    let m = Matrix::from_columns(r.field(), std.len(), &coords);
    let keep = m.independent_columns();
    let mut out = Vec::with_capacity(keep.len());
    for j in keep {
        out.push(r.reduce(&polys[j])?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_spaces_are_enumerated_by_lines() {
        let f = PrimeField::new(3).unwrap();
        let c = candidates(f, 2, &SearchOptions::default(), 0);
        assert!(c.exhaustive);
        // (3^2 - 1) / 2 lines
        assert_eq!(c.vectors.len(), 4);
        assert_eq!(c.vectors[0], vec![1, 0]);
        assert_eq!(c.vectors[2], vec![1, 1]);
        let mut lines: Vec<_> = c.vectors.clone();
        lines.sort();
        lines.dedup();
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn large_spaces_are_sampled_deterministically() {
        let f = PrimeField::new(5).unwrap();
        let opts = SearchOptions { seed: 7, trials: 10, exhaustive_limit: 10, ..Default::default() };
        let a = candidates(f, 4, &opts, 1);
        let b = candidates(f, 4, &opts, 1);
        assert!(!a.exhaustive);
        assert_eq!(a.vectors, b.vectors);
    }
}
