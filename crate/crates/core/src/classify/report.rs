use std::fmt;

use crate::artinian::{weakly_fpi_artinian, IsoSearch, IsoVerdict};
use crate::error::{AlgebraError, Result};
use crate::gfpoly::Polynomial;
use crate::groebner::bracket_power;
use crate::resolutions::{canonical_module, fedder_module, is_free_rank_one, pushforward_dual};
use crate::ring::RingSpec;

use super::canonical::{canonical_ideal, ideals_isomorphic, CanonicalIdeal};
use super::fpure::{is_f_pure, FpureWitness};
use super::invariants::{
    dimension_depth, generically_gorenstein_monomial, is_gorenstein, monomial_minimal_prime_count, GorensteinWitness,
};
use super::search::SearchOptions;

/// Largest `p^n` for which the pushforward dual is computed directly; above
/// it the isomorphic Fedder module is used.
pub const DIRECT_PUSHFORWARD_LIMIT: u64 = 125;

/// A three-valued verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Inconclusive => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

impl From<IsoVerdict> for Verdict {
    fn from(v: IsoVerdict) -> Self {
        match v {
            IsoVerdict::Isomorphic => Verdict::True,
            IsoVerdict::NotIsomorphic => Verdict::False,
            IsoVerdict::Inconclusive => Verdict::Inconclusive,
        }
    }
}

/// How the weakly-FPI verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FpiMethod {
    /// `F_R(E) ≅ E` for Artinian rings.
    ArtinianE,
    /// `ω ≅ ω^[p]` for one-dimensional rings.
    CanonicalIdeal,
}

impl fmt::Display for FpiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FpiMethod::ArtinianE => "artinian_E",
            FpiMethod::CanonicalIdeal => "canonical_ideal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpiResult {
    pub verdict: Verdict,
    pub method: FpiMethod,
    pub reason: String,
    pub canonical_generators: Vec<Polynomial>,
    /// `(h, f)` with `h ω = f ω^[p]`.
    pub multiplier: Option<(Polynomial, Polynomial)>,
    /// `dim F(E)` and `dim E` on the Artinian route.
    pub frobenius_hull_dims: Option<(usize, usize)>,
}

/// Outcome of a canonical-ideal search.
#[derive(Clone, Debug)]
pub enum CanonicalOutcome {
    Found(CanonicalIdeal),
    /// The search failed; `decisive` when no canonical ideal exists.
    Missing {
        decisive: bool,
        reason: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        })
    }
}

/// A named consistency assertion between independently computed verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

/// Which parts of the pipeline to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub gorenstein: bool,
    pub f_pure: bool,
    pub fpi: bool,
    pub canonical: bool,
}

impl Checks {
    pub fn all() -> Self {
        Checks { gorenstein: true, f_pure: true, fpi: true, canonical: true }
    }

    pub fn only_fpi() -> Self {
        Checks { gorenstein: false, f_pure: false, fpi: true, canonical: false }
    }

    pub fn only_gorenstein() -> Self {
        Checks { gorenstein: true, f_pure: false, fpi: false, canonical: false }
    }

    pub fn only_f_pure() -> Self {
        Checks { gorenstein: false, f_pure: true, fpi: false, canonical: false }
    }

    pub fn only_canonical() -> Self {
        Checks { gorenstein: false, f_pure: false, fpi: false, canonical: true }
    }
}

impl Default for Checks {
    fn default() -> Self {
        Checks::all()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerdictOptions {
    pub search: SearchOptions,
    pub checks: Checks,
}

/// The classifier's verdict record.
#[derive(Clone, Debug)]
pub struct Report {
    pub ring: RingSpec,
    pub dimension: usize,
    pub depth: usize,
    pub cohen_macaulay: bool,
    pub gorenstein: Option<GorensteinWitness>,
    pub f_pure: Option<FpureWitness>,
    pub canonical: Option<CanonicalOutcome>,
    pub weakly_fpi: Option<FpiResult>,
    pub minimal_primes: Option<usize>,
    pub cross_checks: Vec<CrossCheck>,
    pub notes: Vec<String>,
}

impl Report {
    /// True when no requested sub-verdict is inconclusive.
    pub fn is_conclusive(&self) -> bool {
        let fpi_ok = self.weakly_fpi.as_ref().is_none_or(|f| f.verdict != Verdict::Inconclusive);
        let canon_ok = !matches!(self.canonical, Some(CanonicalOutcome::Missing { decisive: false, .. }));
        fpi_ok && canon_ok
    }

    pub fn fpi(&self) -> Option<Verdict> {
        self.weakly_fpi.as_ref().map(|f| f.verdict)
    }
}

fn implication(name: &'static str, premise: Option<bool>, conclusion: Option<bool>, text: &str) -> CrossCheck {
    let (status, detail) = match (premise, conclusion) {
        (Some(false), _) => (CheckStatus::Pass, format!("{} (premise false)", text)),
        (Some(true), Some(true)) => (CheckStatus::Pass, text.to_string()),
        (Some(true), Some(false)) => (CheckStatus::Fail, text.to_string()),
        _ => (CheckStatus::Skipped, format!("{} (undecided input)", text)),
    };
    CrossCheck { name, status, detail }
}

fn agreement(name: &'static str, a: Option<bool>, b: Option<bool>, text: &str) -> CrossCheck {
    let (status, detail) = match (a, b) {
        (Some(x), Some(y)) if x == y => (CheckStatus::Pass, format!("{}: both {}", text, x)),
        (Some(x), Some(y)) => (CheckStatus::Fail, format!("{}: {} vs {}", text, x, y)),
        _ => (CheckStatus::Skipped, format!("{} (undecided input)", text)),
    };
    CrossCheck { name, status, detail }
}

/// Whether `Hom_R(F_*R, R)` is free of rank one.
pub fn pushforward_dual_is_free(r: &RingSpec) -> Result<(bool, &'static str)> {
    let size = (r.p() as u64).checked_pow(r.nvars() as u32).unwrap_or(u64::MAX);
    if size <= DIRECT_PUSHFORWARD_LIMIT {
        Ok((is_free_rank_one(&pushforward_dual(r)?)?.free, "Hom(F_*R, R)"))
    } else {
        Ok((is_free_rank_one(&fedder_module(r)?)?.free, "(I^[p] : I)/I^[p]"))
    }
}

fn dimension_one_fpi(
    r: &RingSpec,
    cm: bool,
    canonical: &Option<CanonicalOutcome>,
    opts: &SearchOptions,
) -> Result<FpiResult> {
    let mut out = FpiResult {
        verdict: Verdict::Inconclusive,
        method: FpiMethod::CanonicalIdeal,
        reason: String::new(),
        canonical_generators: Vec::new(),
        multiplier: None,
        frobenius_hull_dims: None,
    };
    if !cm {
        out.verdict = Verdict::False;
        out.reason = "not Cohen-Macaulay".into();
        return Ok(out);
    }
    match canonical {
        Some(CanonicalOutcome::Found(c)) => {
            let omega = c.generators.clone();
            let frob: Vec<Polynomial> = omega.iter().map(|g| g.frobenius_power(1)).collect();
            let iso = ideals_isomorphic(r, &omega, &frob, opts)?;
            out.verdict = iso.verdict.into();
            out.reason = match iso.verdict {
                IsoVerdict::Isomorphic => "canonical ideal is isomorphic to its Frobenius power".into(),
                _ => iso.reason.unwrap_or_default(),
            };
            out.canonical_generators = omega;
            out.multiplier = iso.multiplier;
        }
        Some(CanonicalOutcome::Missing { decisive: true, reason }) => {
            out.verdict = Verdict::False;
            out.reason = reason.clone();
        }
        Some(CanonicalOutcome::Missing { decisive: false, reason }) => {
            out.reason = reason.clone();
        }
        None => unreachable!("canonical ideal is computed before the dimension-one verdict"),
    }
    Ok(out)
}

fn find_canonical(r: &RingSpec, opts: &SearchOptions) -> Result<CanonicalOutcome> {
    match canonical_ideal(r, opts) {
        Ok(c) => Ok(CanonicalOutcome::Found(c)),
        Err(AlgebraError::EmbeddingNotFound) => {
            if generically_gorenstein_monomial(r)? == Some(false) {
                Ok(CanonicalOutcome::Missing {
                    decisive: true,
                    reason: "not generically Gorenstein, so no canonical ideal exists".into(),
                })
            } else {
                Ok(CanonicalOutcome::Missing {
                    decisive: false,
                    reason: "no embedding of the canonical module found within the search budget".into(),
                })
            }
        }
        Err(e) => Err(e),
    }
}

/// Runs the classifier on a ring of dimension at most one.
pub fn fpi_verdict(r: &RingSpec, options: &VerdictOptions) -> Result<Report> {
    let opts = &options.search;
    let checks = options.checks;
    let (dimension, depth) = dimension_depth(r)?;
    if dimension > 1 {
        return Err(AlgebraError::UnsupportedDimension(dimension));
    }
    let cohen_macaulay = depth == dimension;
    let mut notes =
        vec!["local statements are evaluated at the irrelevant maximal ideal of the graded ring".to_string()];
    let minimal_primes = monomial_minimal_prime_count(r)?;

    let gorenstein = if checks.gorenstein || checks.fpi { Some(is_gorenstein(r, opts)?) } else { None };
    let f_pure = if checks.f_pure || checks.fpi { Some(is_f_pure(r)?) } else { None };

    let canonical = if dimension == 1 && cohen_macaulay && (checks.canonical || checks.fpi) {
        Some(find_canonical(r, opts)?)
    } else {
        if checks.canonical && dimension == 0 {
            notes.push("canonical ideals are computed for one-dimensional rings only".into());
        }
        if checks.canonical && dimension == 1 && !cohen_macaulay {
            notes.push("not Cohen-Macaulay, so there is no canonical ideal".into());
        }
        None
    };

    let mut artinian_socle = None;
    let weakly_fpi = if checks.fpi {
        Some(if dimension == 0 {
            let search = IsoSearch { seed: opts.seed, trials: opts.trials, ..IsoSearch::default() };
            let a = weakly_fpi_artinian(r, search)?;
            artinian_socle = Some(a.ring_socle_dimension);
            FpiResult {
                verdict: a.weakly_fpi.into(),
                method: FpiMethod::ArtinianE,
                reason: match a.weakly_fpi {
                    IsoVerdict::Isomorphic => "F(E) is isomorphic to E".into(),
                    IsoVerdict::NotIsomorphic if a.injective => {
                        format!("F(E) is injective but isomorphic to E^{}", a.frobenius_hull_socle_dimension)
                    }
                    IsoVerdict::NotIsomorphic => "F(E) is not injective".into(),
                    IsoVerdict::Inconclusive => "isomorphism search budget exhausted".into(),
                },
                canonical_generators: Vec::new(),
                multiplier: None,
                frobenius_hull_dims: Some((a.frobenius_hull_dim, a.ring_dim)),
            }
        } else {
            dimension_one_fpi(r, cohen_macaulay, &canonical, opts)?
        })
    } else {
        None
    };

    let mut cross_checks = Vec::new();
    let fpi = weakly_fpi.as_ref().and_then(|f| f.verdict.as_bool());
    if let Some(fpi_result) = &weakly_fpi {
        let gor = gorenstein.as_ref().map(|g| g.gorenstein);
        let fp = f_pure.as_ref().map(|w| w.f_pure);
        cross_checks.push(implication("gorenstein_implies_fpi", gor, fpi, "Gorenstein implies weakly FPI"));
        if dimension == 1 {
            cross_checks.push(implication("f_pure_implies_fpi", fp, fpi, "F-pure of dimension one implies weakly FPI"));
            cross_checks.push(implication(
                "fpi_implies_cohen_macaulay",
                fpi,
                Some(cohen_macaulay),
                "weakly FPI of dimension one implies Cohen-Macaulay",
            ));
        }
        let (free, route) = pushforward_dual_is_free(r)?;
        if route != "Hom(F_*R, R)" {
            notes.push(format!("the duality check used the isomorphic module {}", route));
        }
        cross_checks.push(agreement(
            "pushforward_dual_free",
            Some(free),
            fpi,
            "Hom(F_*R, R) free of rank one agrees with weakly FPI",
        ));
        if let Some(s) = artinian_socle {
            cross_checks.push(agreement(
                "artinian_socle",
                Some(s == 1),
                fpi,
                "socle dimension one agrees with weakly FPI",
            ));
        }
        if dimension == 1 {
            let goto = match minimal_primes {
                Some(k) if k <= 2 => agreement(
                    "goto_two_primes",
                    gor,
                    fpi,
                    "monomial ring with at most two minimal primes: weakly FPI agrees with Gorenstein",
                ),
                Some(k) => CrossCheck {
                    name: "goto_two_primes",
                    status: CheckStatus::Skipped,
                    detail: format!("{} minimal primes", k),
                },
                None => CrossCheck {
                    name: "goto_two_primes",
                    status: CheckStatus::Skipped,
                    detail: "minimal primes are computed for monomial ideals only".into(),
                },
            };
            cross_checks.push(goto);
            notes.push(
                "the two-minimal-prime comparison assumes an algebraically closed residue field; over F_p it is enforced for monomial rings only".into(),
            );
            if minimal_primes.is_none() {
                notes.push("associated primes are only computed for monomial ideals".into());
            }
        }
        if fpi_result.verdict == Verdict::Inconclusive {
            notes.push(format!("weakly FPI undecided: {}", fpi_result.reason));
        }
    }
    if dimension == 1 && cohen_macaulay {
        if let Some(g) = &gorenstein {
            let omega = canonical_module(r)?;
            cross_checks.push(agreement(
                "canonical_module_free",
                Some(is_free_rank_one(&omega)?.free),
                Some(g.gorenstein),
                "canonical module free agrees with Gorenstein",
            ));
            if let Some(l) = &g.nonzerodivisor {
                let search = IsoSearch { seed: opts.seed, trials: opts.trials, ..IsoSearch::default() };
                let red = weakly_fpi_artinian(&r.quotient_by(l)?, search)?;
                cross_checks.push(agreement(
                    "artinian_reduction",
                    Some(g.gorenstein),
                    red.decided(),
                    "Gorenstein agrees with weakly FPI of R/(l)",
                ));
            }
        }
    }
    if let Some(CanonicalOutcome::Found(c)) = &canonical {
        cross_checks.push(CrossCheck {
            name: "canonical_reduction",
            status: match c.certificate.verdict {
                IsoVerdict::Isomorphic => CheckStatus::Pass,
                IsoVerdict::NotIsomorphic => CheckStatus::Fail,
                IsoVerdict::Inconclusive => CheckStatus::Skipped,
            },
            detail: "ω/lω is isomorphic to the injective hull of R/(l)".into(),
        });
    }
    if let Some(bad) = cross_checks.iter().find(|c| c.status == CheckStatus::Fail) {
        return Err(AlgebraError::InvariantViolation(format!("{}: {}", bad.name, bad.detail)));
    }
    Ok(Report {
        ring: r.clone(),
        dimension,
        depth,
        cohen_macaulay,
        gorenstein,
        f_pure,
        canonical,
        weakly_fpi,
        minimal_primes,
        cross_checks,
        notes,
    })
}

/// The multiplier identity `ω^[p] = h ω` for a principal multiplier, as
/// ideals of `R`.
pub fn frobenius_multiplier_holds(r: &RingSpec, omega: &[Polynomial], h: &Polynomial) -> Result<bool> {
    use super::canonical::lift_ideal;
    let lhs = lift_ideal(
        r,
        bracket_power(&crate::groebner::Ideal::new(r.field(), r.nvars(), omega.to_vec()), 1).generators(),
    );
    let prod: Vec<Polynomial> = omega.iter().map(|g| h.mul(g)).collect();
    lhs.equals(&lift_ideal(r, &prod))
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
    fn three_axes_report() {
        let r = ring(2, "x,y,z", &["x*y", "x*z", "y*z"]);
        let rep = fpi_verdict(&r, &VerdictOptions::default()).unwrap();
        assert_eq!((rep.dimension, rep.depth, rep.cohen_macaulay), (1, 1, true));
        assert!(!rep.gorenstein.as_ref().unwrap().gorenstein);
        assert!(rep.f_pure.as_ref().unwrap().f_pure);
        let fpi = rep.weakly_fpi.as_ref().unwrap();
        assert_eq!(fpi.verdict, Verdict::True);
        assert_eq!(fpi.method, FpiMethod::CanonicalIdeal);
        let (h, f) = fpi.multiplier.clone().unwrap();
        assert!(f.is_unit());
        assert_eq!(r.reduce(&h).unwrap(), poly("x+y+z", r.vars(), r.field()));
        assert!(rep.cross_checks.iter().all(|c| c.status != CheckStatus::Fail));
        assert_eq!(rep.minimal_primes, Some(3));
    }

    #[test]
    fn socle_two_report() {
        let r = ring(3, "x,y", &["x^2", "x*y", "y^2"]);
        let rep = fpi_verdict(&r, &VerdictOptions::default()).unwrap();
        assert_eq!(rep.dimension, 0);
        assert_eq!(rep.fpi(), Some(Verdict::False));
        assert_eq!(rep.weakly_fpi.unwrap().method, FpiMethod::ArtinianE);
    }

    #[test]
    fn node_report() {
        let r = ring(2, "x,y", &["x*y"]);
        let rep = fpi_verdict(&r, &VerdictOptions::default()).unwrap();
        assert!(rep.gorenstein.as_ref().unwrap().gorenstein);
        assert_eq!(rep.fpi(), Some(Verdict::True));
    }

    #[test]
    fn non_cohen_macaulay_is_not_fpi() {
        let r = ring(2, "x,y", &["x^2", "x*y"]);
        let rep = fpi_verdict(&r, &VerdictOptions::default()).unwrap();
        assert!(!rep.cohen_macaulay);
        assert_eq!(rep.fpi(), Some(Verdict::False));
    }

    #[test]
    fn dimension_two_is_rejected() {
        let r = ring(2, "x,y,z", &["x*y"]);
        assert_eq!(fpi_verdict(&r, &VerdictOptions::default()).unwrap_err(), AlgebraError::UnsupportedDimension(2));
    }
}
