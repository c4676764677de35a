use crate::artinian::ring_module;
use crate::error::{AlgebraError, Result};
use crate::gfpoly::Polynomial;
use crate::groebner::{colon_element, ideal_colon, minimal_primes_monomial, Ideal};
use crate::resolutions::{minimal_free_resolution, ModulePresentation};
use crate::ring::RingSpec;

use super::search::{candidates, combine, SearchOptions};

/// Krull dimension and depth of the graded ring. Depth is
/// `n - pd_S(R)` by Auslander-Buchsbaum.
pub fn dimension_depth(r: &RingSpec) -> Result<(usize, usize)> {
    let dim = r.hilbert_data()?.dimension;
    if r.is_polynomial_ring() {
        return Ok((dim, dim));
    }
    let n = r.nvars();
    let cyc = ModulePresentation::cyclic(r.ambient(), r.ideal().generators())?;
    let res = minimal_free_resolution(&cyc, n + 1)?;
    if res.truncated {
        return Err(AlgebraError::InvariantViolation(
            "a resolution over a polynomial ring exceeded its length bound".into(),
        ));
    }
    Ok((dim, n - res.length()))
}

/// `(I : l) = I`, with `l` nonzero in `R`.
pub fn is_nonzerodivisor(r: &RingSpec, l: &Polynomial) -> Result<bool> {
    if r.is_zero_in_ring(l)? {
        return Ok(false);
    }
    if r.is_polynomial_ring() {
        return Ok(true);
    }
    r.ideal().contains_ideal(&colon_element(r.ideal(), l)?)
}

/// True when the maximal ideal is an associated prime, i.e. depth zero.
fn has_depth_zero(r: &RingSpec) -> Result<bool> {
    if r.is_polynomial_ring() {
        return Ok(r.nvars() == 0);
    }
    let m = Ideal::maximal(r.field(), r.nvars());
    Ok(!r.ideal().contains_ideal(&ideal_colon(r.ideal(), &m)?)?)
}

/// Up to `count` pairwise non-proportional homogeneous non-zero-divisors,
/// searching linear forms first and then higher degrees up to
/// `opts.max_degree`.
pub fn find_nonzerodivisors(r: &RingSpec, opts: &SearchOptions, count: usize) -> Result<Vec<Polynomial>> {
    let mut found = Vec::new();
    if count == 0 {
        return Ok(found);
    }
    if has_depth_zero(r)? {
        return Err(AlgebraError::NoNzdFound { max_degree: opts.max_degree });
    }
    let n = r.nvars();
    for d in 1..=opts.max_degree.max(1) {
        let basis: Vec<Polynomial> =
            r.standard_monomials_of_degree(d)?.into_iter().map(|m| Polynomial::monomial(r.field(), m)).collect();
        let cands = candidates(r.field(), basis.len(), opts, d);
        for v in &cands.vectors {
            let l = combine(r.field(), n, &basis, v);
            if is_nonzerodivisor(r, &l)? {
                found.push(l);
                if found.len() == count {
                    return Ok(found);
                }
            }
        }
    }
    if found.is_empty() {
        return Err(AlgebraError::NoNzdFound { max_degree: opts.max_degree });
    }
    Ok(found)
}

/// A homogeneous non-zero-divisor of lowest available degree.
pub fn find_nzd(r: &RingSpec, opts: &SearchOptions) -> Result<Polynomial> {
    Ok(find_nonzerodivisors(r, opts, 1)?.remove(0))
}

/// Outcome of the Gorenstein test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinWitness {
    pub gorenstein: bool,
    pub cohen_macaulay: bool,
    /// The non-zero-divisor used for the Artinian reduction.
    pub nonzerodivisor: Option<Polynomial>,
    /// Socle dimension of `R` (dimension 0) or of `R/(l)`.
    pub socle_dimension: Option<usize>,
    /// A second, independent reduction and its socle dimension.
    pub second_reduction: Option<(Polynomial, usize)>,
}

/// Gorenstein test for rings of dimension at most one.
pub fn is_gorenstein(r: &RingSpec, opts: &SearchOptions) -> Result<GorensteinWitness> {
    let (dim, depth) = dimension_depth(r)?;
    match dim {
        0 => {
            let s = ring_module(r)?.socle_dimension();
            Ok(GorensteinWitness {
                gorenstein: s == 1,
                cohen_macaulay: true,
                nonzerodivisor: None,
                socle_dimension: Some(s),
                second_reduction: None,
            })
        }
        1 if depth == 0 => Ok(GorensteinWitness {
            gorenstein: false,
            cohen_macaulay: false,
            nonzerodivisor: None,
            socle_dimension: None,
            second_reduction: None,
        }),
        1 => {
            let ls = find_nonzerodivisors(r, opts, 2)?;
            let reduce = |l: &Polynomial| -> Result<usize> { Ok(ring_module(&r.quotient_by(l)?)?.socle_dimension()) };
            let s = reduce(&ls[0])?;
            let second = match ls.get(1) {
                Some(l2) => {
                    let s2 = reduce(l2)?;
                    if (s2 == 1) != (s == 1) {
                        return Err(AlgebraError::InvariantViolation(
                            "two Artinian reductions disagree on the Gorenstein property".into(),
                        ));
                    }
                    Some((l2.clone(), s2))
                }
                None => None,
            };
            Ok(GorensteinWitness {
                gorenstein: s == 1,
                cohen_macaulay: true,
                nonzerodivisor: Some(ls[0].clone()),
                socle_dimension: Some(s),
                second_reduction: second,
            })
        }
        d => Err(AlgebraError::UnsupportedDimension(d)),
    }
}

/// Number of minimal primes of a monomial ideal; `None` otherwise.
pub fn monomial_minimal_prime_count(r: &RingSpec) -> Result<Option<usize>> {
    if !r.ideal().is_monomial() {
        return Ok(None);
    }
    Ok(Some(minimal_primes_monomial(r.ideal())?.len()))
}

/// For a monomial ideal, whether `R_P` is Gorenstein at every minimal
/// prime `P = (x_A)`. Inverting the other variables leaves an
/// `(x_A)`-primary monomial ideal, which is irreducible exactly when its
/// minimal generators are pure powers.
pub fn generically_gorenstein_monomial(r: &RingSpec) -> Result<Option<bool>> {
    if !r.ideal().is_monomial() {
        return Ok(None);
    }
    let n = r.nvars();
    for prime in minimal_primes_monomial(r.ideal())? {
        let mask: u64 = (0..n).filter(|i| !prime.contains(i)).fold(0, |acc, i| acc | (1 << i));
        let mut mons: Vec<_> = r
            .ideal()
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.set_vars_to_one(mask).leading().unwrap().0.clone())
            .collect();
        mons.sort_by_key(|m| m.degree());
        let mut minimal: Vec<crate::gfpoly::Monomial> = Vec::new();
        for m in mons {
            if !minimal.iter().any(|h| h.divides(&m)) {
                minimal.push(m);
            }
        }
        if minimal.iter().any(|m| m.support().count_ones() > 1) {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}
