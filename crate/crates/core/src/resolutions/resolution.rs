use crate::artinian::{realize_finite, FiniteLengthModule};
use crate::error::{AlgebraError, Result};
use crate::ring::RingSpec;

use super::presentation::{subquotient, ModulePresentation};
use super::syzygy::kernel_columns;

/// A minimal graded free resolution `F_0 <- F_1 <- ...`.
///
/// `maps[i]` is the differential `d_{i+1}: F_{i+1} -> F_i`, stored as a
/// presentation whose rows are the generators of `F_i`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub maps: Vec<ModulePresentation>,
    /// Generator degrees of `F_0`.
    pub base_twists: Vec<i64>,
    /// Set when the resolution was cut off at the requested length while
    /// further syzygies exist.
    pub truncated: bool,
}

impl FreeResolution {
    /// Ranks of `F_0, F_1, ...`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let mut out = vec![self.base_twists.len()];
        out.extend(self.maps.iter().map(|m| m.cols()));
        out
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Generator degrees of `F_i`.
    pub fn twists(&self, i: usize) -> &[i64] {
        if i == 0 {
            &self.base_twists
        } else {
            self.maps[i - 1].col_twists()
        }
    }
}

/// Minimal free resolution of `M` over its ring, computed until the
/// syzygies vanish or `max_length` differentials exist.
pub fn minimal_free_resolution(m: &ModulePresentation, max_length: usize) -> Result<FreeResolution> {
    let first = m.minimized()?;
    let base_twists = first.row_twists().to_vec();
    let mut maps: Vec<ModulePresentation> = Vec::new();
    if first.cols() == 0 {
        return Ok(FreeResolution { maps, base_twists, truncated: false });
    }
    maps.push(first);
    loop {
        let last = maps.last().unwrap();
        let syz = last.syzygy_columns()?;
        if syz.is_empty() {
            return Ok(FreeResolution { maps, base_twists, truncated: false });
        }
        if maps.len() >= max_length {
            return Ok(FreeResolution { maps, base_twists, truncated: true });
        }
        let next = ModulePresentation::from_columns(
            last.ring().clone(),
            last.col_twists().to_vec(),
            syz,
            last.degree_scale(),
        )?;
        maps.push(next);
    }
}

/// Default truncation for resolutions over quotient rings.
pub fn default_max_length(r: &RingSpec) -> usize {
    r.nvars() + 2
}

/// `F^e_R(M)`: entries raised to the `p^e`-th power, degrees multiplied by `p^e`.
pub fn frobenius_functor(m: &ModulePresentation, e: u32) -> Result<ModulePresentation> {
    let q = (m.ring().p() as i64).pow(e);
    let cols = m.columns().iter().map(|c| c.iter().map(|f| f.frobenius_power(e)).collect()).collect();
    ModulePresentation::with_scale(
        m.ring().clone(),
        m.row_twists().iter().map(|t| t * q).collect(),
        cols,
        m.col_twists().iter().map(|t| t * q).collect(),
        m.degree_scale(),
    )
}

/// A homology module, realized explicitly when it has finite length.
#[derive(Clone, Debug)]
pub enum Homology {
    Finite(FiniteLengthModule),
    Presented(ModulePresentation),
}

impl Homology {
    /// The `F_p`-dimension, when finite.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Homology::Finite(m) => Some(m.dim()),
            Homology::Presented(_) => None,
        }
    }

    pub fn is_zero(&self) -> Result<bool> {
        match self {
            Homology::Finite(m) => Ok(m.dim() == 0),
            Homology::Presented(p) => p.is_zero_module(),
        }
    }

    fn from_presentation(p: ModulePresentation) -> Result<Self> {
        match realize_finite(&p) {
            Ok(m) => Ok(Homology::Finite(m)),
            Err(AlgebraError::InfiniteLength) => Ok(Homology::Presented(p)),
            Err(e) => Err(e),
        }
    }
}

/// Homology at `F_i` of `F^e` applied to a resolution.
pub fn frobenius_homology(res: &FreeResolution, i: usize, e: u32) -> Result<Homology> {
    if i == 0 {
        let base = match res.maps.first() {
            Some(d1) => frobenius_functor(d1, e)?,
            None => return Err(AlgebraError::Shape("empty resolution".into())),
        };
        return Homology::from_presentation(base);
    }
    if i > res.maps.len() {
        if res.truncated {
            return Err(AlgebraError::TruncationInsufficient(i));
        }
        let ring = match res.maps.first() {
            Some(m) => m.ring().clone(),
            None => return Err(AlgebraError::Shape("empty resolution".into())),
        };
        return Homology::from_presentation(ModulePresentation::free(ring, Vec::new()));
    }
    if i == res.maps.len() && res.truncated {
        return Err(AlgebraError::TruncationInsufficient(i + 1));
    }
    let di = frobenius_functor(&res.maps[i - 1], e)?;
    let ring = di.ring().clone();
    let scale = di.degree_scale();
    let k = kernel_columns(&ring, di.rows(), di.columns(), di.row_twists(), di.col_twists(), scale)?;
    let b: Vec<Vec<_>> = match res.maps.get(i) {
        Some(d) => frobenius_functor(d, e)?.columns().to_vec(),
        None => Vec::new(),
    };
    let (p, _) = subquotient(&ring, di.col_twists(), &k, &b, scale)?;
    Homology::from_presentation(p)
}

/// `Tor_i^R(R^{(e)}, M)` for the `e`-fold Frobenius: the `i`-th homology of
/// the Frobenius functor applied to a resolution of `M` over `R`.
pub fn tor_frobenius(r: &RingSpec, m: &ModulePresentation, i: usize, e: u32) -> Result<Homology> {
    let m = m.over(r.clone())?;
    let res = minimal_free_resolution(&m, i + 1)?;
    if res.maps.is_empty() {
        // M is free
        return if i == 0 {
            Homology::from_presentation(m.minimized()?)
        } else {
            Homology::from_presentation(ModulePresentation::free(r.clone(), Vec::new()))
        };
    }
    frobenius_homology(&res, i, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfpoly::{poly, var_names, Polynomial, PrimeField};

    fn ring(p: u64, vars: &str, gens: &[&str]) -> RingSpec {
        let f = PrimeField::new(p).unwrap();
        let v = var_names(vars);
        let g = gens.iter().map(|g| poly(g, &v, f)).collect();
        RingSpec::new(f, v, g).unwrap()
    }

    fn ps(r: &RingSpec, gens: &[&str]) -> Vec<Polynomial> {
        gens.iter().map(|g| poly(g, r.vars(), r.field())).collect()
    }

    #[test]
    fn betti_numbers_of_three_axes() {
        let r = ring(2, "x,y,z", &["x*y", "x*z", "y*z"]);
        let s = r.ambient();
        let m = ModulePresentation::cyclic(s, r.ideal().generators()).unwrap();
        let res = minimal_free_resolution(&m, 10).unwrap();
        assert_eq!(res.betti_numbers(), vec![1, 3, 2]);
        assert!(!res.truncated);
        assert_eq!(res.twists(2), &[3, 3]);
    }

    #[test]
    fn hypersurface_and_free() {
        let s = ring(3, "x,y", &[]);
        let m = ModulePresentation::cyclic(s.clone(), &ps(&s, &["x^2 - y^2"])).unwrap();
        assert_eq!(minimal_free_resolution(&m, 5).unwrap().betti_numbers(), vec![1, 1]);
        let free = ModulePresentation::free(s, vec![0, 1]);
        let res = minimal_free_resolution(&free, 5).unwrap();
        assert_eq!(res.length(), 0);
        assert_eq!(res.betti_numbers(), vec![2]);
    }

    #[test]
    fn resolution_over_quotient_is_truncated() {
        let r = ring(2, "x", &["x^2"]);
        let k = ModulePresentation::cyclic(r.clone(), &ps(&r, &["x"])).unwrap();
        let res = minimal_free_resolution(&k, 3).unwrap();
        assert!(res.truncated);
        assert_eq!(res.betti_numbers(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn frobenius_of_residue_field_over_dual_numbers() {
        let r = ring(2, "x", &["x^2"]);
        let k = ModulePresentation::cyclic(r.clone(), &ps(&r, &["x"])).unwrap();
        let fk = frobenius_functor(&k, 1).unwrap();
        assert!(fk.column(0)[0].is_zero());
        assert_eq!(fk.row_twists(), &[0]);
        let t0 = tor_frobenius(&r, &k, 0, 1).unwrap();
        assert_eq!(t0.dimension(), Some(2));
        let t1 = tor_frobenius(&r, &k, 1, 1).unwrap();
        assert_eq!(t1.dimension(), Some(2));
    }

    #[test]
    fn tor_zero_is_bracket_quotient() {
        let r = ring(3, "x,y", &[]);
        let m = ModulePresentation::cyclic(r.clone(), &ps(&r, &["x", "y^2"])).unwrap();
        // R/(x^3, y^6) has dimension 18
        assert_eq!(tor_frobenius(&r, &m, 0, 1).unwrap().dimension(), Some(18));
        assert_eq!(tor_frobenius(&r, &m, 1, 1).unwrap().dimension(), Some(0));
        assert_eq!(tor_frobenius(&r, &m, 2, 1).unwrap().dimension(), Some(0));
    }
}
