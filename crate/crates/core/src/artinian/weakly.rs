use crate::error::{AlgebraError, Result};
use crate::resolutions::frobenius_functor;
use crate::ring::RingSpec;

use super::iso::{modules_isomorphic, IsoSearch, IsoVerdict, IsoWitness};
use super::module::{realize_finite, ring_module, FiniteLengthModule};

/// The depth-zero test: is `F_R(E) ≅ E` for `E = E_R(k)`?
#[derive(Clone, Debug)]
pub struct ArtinianFpi {
    pub ring_dim: usize,
    pub ring_socle_dimension: usize,
    pub hull_generators: usize,
    pub frobenius_hull_dim: usize,
    pub frobenius_hull_socle_dimension: usize,
    /// `F(E)` is injective, i.e. `dim F(E) = socdim F(E) * dim E`.
    pub injective: bool,
    /// The `n` with `F(E) ≅ E^n` established by an explicit isomorphism.
    pub isomorphic_power: Option<usize>,
    /// Outcome of the comparison with `E^n` for the candidate `n`.
    pub comparison: Option<IsoWitness>,
    pub weakly_fpi: IsoVerdict,
    pub frobenius_hull: FiniteLengthModule,
    pub hull: FiniteLengthModule,
}

impl ArtinianFpi {
    /// `Some(true/false)` when decided.
    pub fn decided(&self) -> Option<bool> {
        match self.weakly_fpi {
            IsoVerdict::Isomorphic => Some(true),
            IsoVerdict::NotIsomorphic => Some(false),
            IsoVerdict::Inconclusive => None,
        }
    }
}

/// Decides whether an Artinian graded ring is weakly FPI by comparing
/// `F_R(E)` with powers of `E`.
///
/// A finite-length module `M` is injective exactly when
/// `dim M = socdim(M) dim E`, in which case `M ≅ E^{socdim M}`; the
/// candidate power is still confirmed by an explicit isomorphism.
pub fn weakly_fpi_artinian(r: &RingSpec, search: IsoSearch) -> Result<ArtinianFpi> {
    let h = r.hilbert_data()?;
    if h.dimension != 0 {
        return Err(AlgebraError::UnsupportedDimension(h.dimension));
    }
    let rm = ring_module(r)?;
    let e = rm.matlis_dual();
    let pres = e.minimal_presentation(r)?;
    let fe = realize_finite(&frobenius_functor(&pres, 1)?)?;
    let sd = fe.socle_dimension();
    let injective = e.dim() > 0 && fe.dim() == sd * e.dim();
    let mut comparison = None;
    let mut isomorphic_power = None;
    if e.dim() > 0 && fe.dim() % e.dim() == 0 {
        let n = fe.dim() / e.dim();
        let w = modules_isomorphic(&fe, &e.power(n), search);
        if w.verdict == IsoVerdict::Isomorphic {
            isomorphic_power = Some(n);
        }
        comparison = Some(w);
    }
    let weakly_fpi = if fe.dim() != e.dim() {
        IsoVerdict::NotIsomorphic
    } else {
        comparison.as_ref().map(|w| w.verdict).unwrap_or(IsoVerdict::NotIsomorphic)
    };
    if injective && isomorphic_power.is_none() {
        if let Some(w) = &comparison {
            if w.verdict == IsoVerdict::NotIsomorphic {
                return Err(AlgebraError::InvariantViolation(
                    "an injective Frobenius image is not a power of the injective hull".into(),
                ));
            }
        }
    }
    Ok(ArtinianFpi {
        ring_dim: rm.dim(),
        ring_socle_dimension: rm.socle_dimension(),
        hull_generators: pres.rows(),
        frobenius_hull_dim: fe.dim(),
        frobenius_hull_socle_dimension: sd,
        injective,
        isomorphic_power,
        comparison,
        weakly_fpi,
        frobenius_hull: fe,
        hull: e,
    })
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

    #[test]
    fn gorenstein_artinian_rings_are_weakly_fpi() {
        for (p, vars, gens) in [(2, "x", vec!["x^3"]), (3, "x,y", vec!["x^2", "y^2"]), (5, "x", vec!["x"])] {
            let r = ring(p, vars, &gens);
            let v = weakly_fpi_artinian(&r, IsoSearch::default()).unwrap();
            assert_eq!(v.weakly_fpi, IsoVerdict::Isomorphic, "{}", r);
            assert_eq!(v.isomorphic_power, Some(1));
        }
    }

    #[test]
    fn socle_two_is_not_weakly_fpi() {
        let r = ring(2, "x,y", &["x^2", "x*y", "y^2"]);
        let v = weakly_fpi_artinian(&r, IsoSearch::default()).unwrap();
        assert_eq!(v.weakly_fpi, IsoVerdict::NotIsomorphic);
        assert_eq!(v.ring_socle_dimension, 2);
        assert!(!v.injective);
        assert_eq!(v.isomorphic_power, None);
    }

    #[test]
    fn dimension_one_is_rejected() {
        let r = ring(2, "x,y", &["x*y"]);
        assert!(matches!(weakly_fpi_artinian(&r, IsoSearch::default()), Err(AlgebraError::UnsupportedDimension(1))));
    }
}
