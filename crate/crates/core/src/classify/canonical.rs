use crate::artinian::{modules_isomorphic, realize_finite, ring_module, IsoSearch, IsoVerdict};
use crate::error::{AlgebraError, Result};
use crate::gfpoly::Polynomial;
use crate::groebner::{hilbert_data_of, ideal_colon, Ideal};
use crate::resolutions::{canonical_module, hom_presentation, kernel_columns, ModulePresentation, SpanOracle};
use crate::ring::RingSpec;

use super::invariants::{dimension_depth, find_nzd, generically_gorenstein_monomial, is_nonzerodivisor};
use super::search::{candidates, combine, coordinates, degree_part, independent, SearchOptions};

/// Check that `ω/lω` is the canonical module of the Artinian reduction
/// `R/(l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub nonzerodivisor: Polynomial,
    pub verdict: IsoVerdict,
}

/// An ideal of `R` isomorphic to the canonical module.
#[derive(Clone, Debug)]
pub struct CanonicalIdeal {
    /// Images of the generators of `ω`, reduced in `R`.
    pub generators: Vec<Polynomial>,
    /// Degree of the embedding `ω -> R`.
    pub degree: i64,
    pub module: ModulePresentation,
    /// Candidate maps tried before the embedding was found.
    pub trials: u64,
    pub certificate: ReductionCertificate,
}

/// `ω` embeds in `R` through `images` exactly when every syzygy of the
/// images lies in the relation module of `ω`.
fn is_embedding(omega: &ModulePresentation, images: &[Polynomial], degree: i64) -> Result<bool> {
    let r = omega.ring();
    if images.iter().any(|f| f.is_zero()) {
        return Ok(false);
    }
    let weights: Vec<i64> = omega.row_twists().iter().map(|t| t + degree).collect();
    let cols: Vec<Vec<Polynomial>> = images.iter().map(|f| vec![f.clone()]).collect();
    let syz = kernel_columns(r, 1, &cols, &[0], &weights, 1)?;
    if syz.is_empty() {
        return Ok(true);
    }
    let oracle = SpanOracle::new(r, omega.rows(), omega.columns(), &weights, 1)?;
    Ok(syz.iter().all(|c| oracle.contains(c)))
}

/// The degree-`d` maps `ω -> R` as vectors of generator images, linearly
/// independent over `F_p`.
fn hom_degree_part(
    omega: &ModulePresentation,
    maps: &[Vec<Polynomial>],
    map_degrees: &[i64],
    d: i64,
) -> Result<Vec<Vec<Polynomial>>> {
    let r = omega.ring();
    let mut spanning: Vec<Vec<Polynomial>> = Vec::new();
    for (g, images) in maps.iter().enumerate() {
        let shift = d - map_degrees[g];
        if shift < 0 {
            continue;
        }
        for m in crate::ring::monomials_of_degree(r.nvars(), shift as u64) {
            let v: Vec<Polynomial> = images.iter().map(|f| r.reduce(&f.mul_term(&m, 1))).collect::<Result<_>>()?;
            if v.iter().any(|f| !f.is_zero()) {
                spanning.push(v);
            }
        }
    }
    if spanning.is_empty() {
        return Ok(Vec::new());
    }
    // coordinates of the concatenated images
    let mut coords: Vec<Vec<u32>> = vec![Vec::new(); spanning.len()];
    for (i, t) in omega.row_twists().iter().enumerate() {
        let deg = t + d;
        if deg < 0 {
            continue;
        }
        let polys: Vec<Polynomial> = spanning.iter().map(|v| v[i].clone()).collect();
        let (_, c) = coordinates(r, deg as u64, &polys)?;
        for (k, ck) in c.into_iter().enumerate() {
            coords[k].extend(ck);
        }
    }
    let len = coords[0].len();
    if len == 0 {
        return Ok(Vec::new());
    }
    let mat = crate::linalg::Matrix::from_columns(r.field(), len, &coords);
    Ok(mat.independent_columns().into_iter().map(|j| spanning[j].clone()).collect())
}

/// Embeds `ω_R` into `R` by searching homogeneous maps of increasing
/// degree, and certifies the result through an Artinian reduction.
pub fn canonical_ideal(r: &RingSpec, opts: &SearchOptions) -> Result<CanonicalIdeal> {
    let (dim, depth) = dimension_depth(r)?;
    if dim != 1 {
        return Err(AlgebraError::UnsupportedDimension(dim));
    }
    if depth != dim {
        return Err(AlgebraError::NotCohenMacaulay { dim, depth });
    }
    if generically_gorenstein_monomial(r)? == Some(false) {
        return Err(AlgebraError::EmbeddingNotFound);
    }
    let omega = canonical_module(r)?;
    let free = ModulePresentation::free(r.clone(), vec![0]);
    let hom = hom_presentation(&omega, &free)?;
    let maps: Vec<Vec<Polynomial>> = hom.maps.iter().map(|per| per.iter().map(|c| c[0].clone()).collect()).collect();
    let mut keep = Vec::new();
    let mut degrees = Vec::new();
    for (g, images) in maps.iter().enumerate() {
        if let Some((i, f)) = images.iter().enumerate().find(|(_, f)| !f.is_zero()) {
            keep.push(g);
            degrees.push(f.total_degree().unwrap() as i64 - omega.row_twists()[i]);
        }
    }
    let maps: Vec<Vec<Polynomial>> = keep.iter().map(|&g| maps[g].clone()).collect();
    let lowest = match degrees.iter().min() {
        Some(&d) => d,
        None => return Err(AlgebraError::EmbeddingNotFound),
    };
    let n = r.nvars();
    let mut trials = 0u64;
    for d in lowest..=lowest + opts.max_degree as i64 {
        let basis = hom_degree_part(&omega, &maps, &degrees, d)?;
        let cands = candidates(r.field(), basis.len(), opts, 0x0c4e_u64.wrapping_add(d as u64));
        for v in &cands.vectors {
            trials += 1;
            let images: Vec<Polynomial> = (0..omega.rows())
                .map(|i| {
                    let parts: Vec<Polynomial> = basis.iter().map(|b| b[i].clone()).collect();
                    combine(r.field(), n, &parts, v)
                })
                .collect();
            if is_embedding(&omega, &images, d)? {
                let certificate = reduction_certificate(r, &omega, opts)?;
                return Ok(CanonicalIdeal { generators: images, degree: d, module: omega, trials, certificate });
            }
        }
    }
    Err(AlgebraError::EmbeddingNotFound)
}

fn reduction_certificate(
    r: &RingSpec,
    omega: &ModulePresentation,
    opts: &SearchOptions,
) -> Result<ReductionCertificate> {
    let l = find_nzd(r, opts)?;
    let reduced = realize_finite(&omega.modulo_element(&l)?)?;
    let dual = ring_module(&r.quotient_by(&l)?)?.matlis_dual();
    let search = IsoSearch { seed: opts.seed, trials: opts.trials, ..IsoSearch::default() };
    let w = modules_isomorphic(&reduced, &dual, search);
    if w.verdict == IsoVerdict::NotIsomorphic {
        return Err(AlgebraError::InvariantViolation(format!(
            "canonical module does not reduce to the canonical module of R/(l): {}",
            w.reason.unwrap_or_default()
        )));
    }
    Ok(ReductionCertificate { nonzerodivisor: l, verdict: w.verdict })
}

/// Result of comparing two ideals of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealIso {
    pub verdict: IsoVerdict,
    /// `(h, f)` with `h I = f J`, so multiplication by `h/f` maps `I` onto `J`.
    pub multiplier: Option<(Polynomial, Polynomial)>,
    pub reason: Option<String>,
    pub trials: u64,
}

impl IdealIso {
    fn separated(reason: impl Into<String>) -> Self {
        IdealIso { verdict: IsoVerdict::NotIsomorphic, multiplier: None, reason: Some(reason.into()), trials: 0 }
    }
}

/// The ideal of `S` generated by `gens` and the defining ideal of `R`.
pub fn lift_ideal(r: &RingSpec, gens: &[Polynomial]) -> Ideal {
    let mut all = gens.to_vec();
    all.extend(r.ideal().generators().iter().cloned());
    Ideal::new(r.field(), r.nvars(), all)
}

fn colength(i: &Ideal) -> Result<Option<u64>> {
    Ok(hilbert_data_of(i)?.colength)
}

/// `dim_k I/mI` for an ideal of `R` of finite colength.
fn minimal_generator_count(r: &RingSpec, gens: &[Polynomial]) -> Result<Option<u64>> {
    let i = lift_ideal(r, gens);
    let m = Ideal::maximal(r.field(), r.nvars());
    let mi = lift_ideal(r, i.product(&m).generators());
    match (colength(&i)?, colength(&mi)?) {
        (Some(a), Some(b)) => Ok(Some(b - a)),
        _ => Ok(None),
    }
}

/// A homogeneous non-zero-divisor of `R` inside the ideal generated by `gens`.
pub fn find_nzd_in_ideal(r: &RingSpec, gens: &[Polynomial], opts: &SearchOptions) -> Result<Polynomial> {
    let nonzero: Vec<Polynomial> =
        gens.iter().map(|g| r.reduce(g)).collect::<Result<Vec<_>>>()?.into_iter().filter(|g| !g.is_zero()).collect();
    for g in &nonzero {
        if is_nonzerodivisor(r, g)? {
            return Ok(g.clone());
        }
    }
    let low = match nonzero.iter().filter_map(|g| g.total_degree()).min() {
        Some(d) => d,
        None => return Err(AlgebraError::NoNzdInIdeal),
    };
    for d in low..=low + opts.max_degree {
        let basis = degree_part(r, &nonzero, d)?;
        let cands = candidates(r.field(), basis.len(), opts, 0x1d + d);
        for v in &cands.vectors {
            let f = combine(r.field(), r.nvars(), &basis, v);
            if is_nonzerodivisor(r, &f)? {
                return Ok(f);
            }
        }
    }
    Err(AlgebraError::NoNzdInIdeal)
}

/// Looks for `h` of degree `d` in the ideal `h_space` with `h I = target`
/// in `R`.
#[allow(clippy::too_many_arguments)]
fn search_multiplier(
    r: &RingSpec,
    h_space: &Ideal,
    d: i64,
    i_gens: &[Polynomial],
    target: &Ideal,
    opts: &SearchOptions,
    salt: u64,
    trials: &mut u64,
) -> Result<(Option<Polynomial>, bool)> {
    if d < 0 {
        return Ok((None, true));
    }
    let basis = degree_part(r, h_space.generators(), d as u64)?;
    let basis = independent(r, d as u64, &basis)?;
    let cands = candidates(r.field(), basis.len(), opts, salt);
    for v in &cands.vectors {
        *trials += 1;
        let h = combine(r.field(), r.nvars(), &basis, v);
        let prod: Vec<Polynomial> = i_gens.iter().map(|g| h.mul(g)).collect();
        if lift_ideal(r, &prod).equals(target)? {
            return Ok((Some(h), true));
        }
    }
    Ok((None, cands.exhaustive))
}

/// Decides whether two ideals of a one-dimensional graded ring are
/// isomorphic, restricting to homogeneous multipliers.
///
/// If `φ: I -> J` is a graded isomorphism and `f ∈ I` is a non-zero-divisor
/// then `h = φ(f)` satisfies `h I = f J`, and its degree is forced by
/// colengths: `ℓ(R/J) - ℓ(R/I) = e(R) (deg h - deg f)`.
pub fn ideals_isomorphic(r: &RingSpec, i: &[Polynomial], j: &[Polynomial], opts: &SearchOptions) -> Result<IdealIso> {
    let li = lift_ideal(r, i);
    let lj = lift_ideal(r, j);
    let one = r.one();
    if li.equals(&lj)? {
        return Ok(IdealIso {
            verdict: IsoVerdict::Isomorphic,
            multiplier: Some((one.clone(), one)),
            reason: None,
            trials: 0,
        });
    }
    let f = find_nzd_in_ideal(r, i, opts)?;
    find_nzd_in_ideal(r, j, opts)?;
    let (ci, cj) = match (colength(&li)?, colength(&lj)?) {
        (Some(a), Some(b)) => (a as i64, b as i64),
        _ => return Err(AlgebraError::NoNzdInIdeal),
    };
    if minimal_generator_count(r, i)? != minimal_generator_count(r, j)? {
        return Ok(IdealIso::separated("minimal generator counts differ"));
    }
    let e = r.hilbert_data()?.multiplicity();
    let delta = cj - ci;
    if e <= 0 || delta % e != 0 {
        return Ok(IdealIso::separated("colength difference is not a multiple of the multiplicity"));
    }
    let shift = delta / e;
    let mut trials = 0;
    // f = 1: h I = J
    let h1 = ideal_colon(&lj, &li)?;
    if let (Some(h), _) = search_multiplier(r, &h1, shift, i, &lj, opts, 0x51, &mut trials)? {
        return Ok(IdealIso { verdict: IsoVerdict::Isomorphic, multiplier: Some((h, one)), reason: None, trials });
    }
    let fj: Vec<Polynomial> = j.iter().map(|g| f.mul(g)).collect();
    let target = lift_ideal(r, &fj);
    let hs = ideal_colon(&target, &li)?;
    let d = f.total_degree().unwrap() as i64 + shift;
    let (found, exhaustive) = search_multiplier(r, &hs, d, i, &target, opts, 0x52, &mut trials)?;
    Ok(match found {
        Some(h) => IdealIso { verdict: IsoVerdict::Isomorphic, multiplier: Some((h, f)), reason: None, trials },
        None if exhaustive => IdealIso {
            verdict: IsoVerdict::NotIsomorphic,
            multiplier: None,
            reason: Some(format!("no multiplier of degree {} maps I onto J", d)),
            trials,
        },
        None => IdealIso {
            verdict: IsoVerdict::Inconclusive,
            multiplier: None,
            reason: Some("multiplier search budget exhausted".into()),
            trials,
        },
    })
}
