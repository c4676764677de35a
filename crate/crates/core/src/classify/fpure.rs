use crate::error::Result;
use crate::gfpoly::Polynomial;
use crate::groebner::{bracket_power, ideal_colon};
use crate::ring::RingSpec;

/// Fedder's test at the homogeneous maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpureWitness {
    pub f_pure: bool,
    /// An element of `(I^[p] : I)` outside `m^[p]`.
    pub witness: Option<Polynomial>,
    /// The terms of the witness not divisible by any `x_i^p`.
    pub surviving_terms: Option<Polynomial>,
    pub colon_generators: Vec<Polynomial>,
    /// `f^{p-1}` when `I = (f)` is principal; the colon is then
    /// `(f^{p-1}) + I^[p]`.
    pub principal_power: Option<Polynomial>,
}

/// Terms of `f` not lying in `m^[p] = (x_1^p, ..., x_n^p)`.
pub fn outside_frobenius_maximal(f: &Polynomial, p: u32) -> Polynomial {
    let terms = f.terms().iter().filter(|(m, _)| m.exponents().iter().all(|&e| e < p)).cloned().collect();
    Polynomial::from_terms(f.field(), f.nvars(), terms)
}

/// `R` is F-pure iff `(I^[p] : I) ⊄ m^[p]`. Accepts inhomogeneous ideals,
/// tested at the origin.
pub fn is_f_pure(r: &RingSpec) -> Result<FpureWitness> {
    let p = r.p();
    let i = r.ideal();
    let gens: Vec<&Polynomial> = i.generators().iter().filter(|g| !g.is_zero()).collect();
    let principal_power = if gens.len() == 1 { Some(gens[0].pow(p as u64 - 1)) } else { None };
    let colon = ideal_colon(&bracket_power(i, 1), i)?;
    let colon_generators = colon.generators().to_vec();
    for g in &colon_generators {
        let rest = outside_frobenius_maximal(g, p);
        if !rest.is_zero() {
            return Ok(FpureWitness {
                f_pure: true,
                witness: Some(g.clone()),
                surviving_terms: Some(rest),
                colon_generators,
                principal_power,
            });
        }
    }
    Ok(FpureWitness { f_pure: false, witness: None, surviving_terms: None, colon_generators, principal_power })
}
