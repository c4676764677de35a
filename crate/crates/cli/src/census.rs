//! Batch classification over enumerated families of rings.

use std::collections::BTreeSet;
use std::io::Write;

use fpi_core::classify::{fpi_verdict, Checks, Report, SearchOptions, Verdict, VerdictOptions};
use fpi_core::gfpoly::{Monomial, Polynomial, PrimeField};
use fpi_core::ring::{monomials_of_degree, RingSpec};
use fpi_core::AlgebraError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const MAX_CENSUS_VARS: usize = 4;
pub const CSV_HEADER: [&str; 8] = ["ring", "dim", "CM", "Gorenstein", "F-pure", "FPI", "#min-primes", "caveat"];

#[derive(Clone, Debug)]
pub enum Family {
    /// Ideals generated by monomials of degree `1..=degree`, up to
    /// permutation of the variables.
    Monomial,
    /// Random ideals mixing binomials `m - m'` and monomials of equal degree.
    BinomialSample { count: usize },
    /// A fixed list of rings.
    Explicit(Vec<RingSpec>),
}

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub family: Family,
    pub nvars: usize,
    pub degree: u64,
    pub primes: Vec<u64>,
    pub seed: u64,
    pub search: SearchOptions,
}

#[derive(Clone, Debug)]
pub struct CensusRow {
    pub ring: RingSpec,
    pub outcome: Result<Report, AlgebraError>,
}

impl CensusRow {
    pub fn fpi(&self) -> Option<Verdict> {
        self.outcome.as_ref().ok().and_then(|r| r.fpi())
    }

    pub fn gorenstein(&self) -> Option<bool> {
        self.outcome.as_ref().ok().and_then(|r| r.gorenstein.as_ref().map(|g| g.gorenstein))
    }

    pub fn minimal_primes(&self) -> Option<usize> {
        self.outcome.as_ref().ok().and_then(|r| r.minimal_primes)
    }

    pub fn caveat(&self) -> String {
        match &self.outcome {
            Err(e) => format!("error: {}", e),
            Ok(rep) => {
                let mut c = Vec::new();
                if !rep.is_conclusive() {
                    c.push("inconclusive".to_string());
                }
                if rep.dimension == 1 && rep.minimal_primes.is_none() {
                    c.push("minimal primes not computed".to_string());
                }
                c.join("; ")
            }
        }
    }

    fn fields(&self) -> Vec<String> {
        let b = |x: bool| x.to_string();
        match &self.outcome {
            Ok(rep) => vec![
                self.ring.to_string(),
                rep.dimension.to_string(),
                b(rep.cohen_macaulay),
                rep.gorenstein.as_ref().map_or("".into(), |g| b(g.gorenstein)),
                rep.f_pure.as_ref().map_or("".into(), |w| b(w.f_pure)),
                rep.fpi().map_or("".into(), |v| v.to_string()),
                rep.minimal_primes.map_or("".into(), |k| k.to_string()),
                self.caveat(),
            ],
            Err(_) => {
                let mut v = vec![self.ring.to_string()];
                v.extend(std::iter::repeat_n("error".to_string(), 6));
                v.push(self.caveat());
                v
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusSummary {
    pub rows: usize,
    pub fpi_true: usize,
    pub fpi_false: usize,
    pub inconclusive: usize,
    pub errors: usize,
    pub gorenstein: usize,
    /// Enumerated rings of dimension two or more, left out of the table.
    pub out_of_scope: usize,
    /// Monomial one-dimensional rows with at most two minimal primes and
    /// FPI different from Gorenstein.
    pub two_prime_violations: usize,
}

#[derive(Clone, Debug)]
pub struct CensusOutput {
    pub rows: Vec<CensusRow>,
    pub summary: CensusSummary,
}

impl CensusOutput {
    pub fn write_csv<W: Write>(&self, w: W) -> csv::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(CSV_HEADER)?;
        for row in &self.rows {
            out.write_record(row.fields())?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    pub fn summary_text(&self) -> String {
        let s = &self.summary;
        format!(
            "rows={} fpi_true={} fpi_false={} inconclusive={} errors={} gorenstein={} out_of_scope={} two_prime_violations={}",
            s.rows, s.fpi_true, s.fpi_false, s.inconclusive, s.errors, s.gorenstein, s.out_of_scope, s.two_prime_violations
        )
    }
}

/// Mixes the census seed with a row index.
pub fn row_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed ^ (index as u64).wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn var_list(n: usize) -> Vec<String> {
    const NAMES: [&str; MAX_CENSUS_VARS] = ["x", "y", "z", "w"];
    NAMES[..n].iter().map(|s| s.to_string()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut q = perm.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Antichains of monomials of degree `1..=degree`, one per orbit of the
/// variable permutations, in a deterministic order.
pub fn monomial_ideals(nvars: usize, degree: u64) -> Vec<Vec<Monomial>> {
    let mut mons: Vec<Monomial> = (1..=degree).flat_map(|d| monomials_of_degree(nvars, d)).collect();
    mons.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.exponents().cmp(a.exponents())));
    let perms = permutations(nvars);
    let key = |set: &[Monomial]| -> Vec<Vec<u32>> {
        perms
            .iter()
            .map(|perm| {
                let mut v: Vec<Vec<u32>> =
                    set.iter().map(|m| perm.iter().map(|&i| m.exponents()[i]).collect()).collect();
                v.sort();
                v
            })
            .min()
            .unwrap_or_default()
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut current: Vec<Monomial> = Vec::new();
    fn rec(
        mons: &[Monomial],
        start: usize,
        current: &mut Vec<Monomial>,
        out: &mut Vec<Vec<Monomial>>,
        seen: &mut BTreeSet<Vec<Vec<u32>>>,
        key: &dyn Fn(&[Monomial]) -> Vec<Vec<u32>>,
    ) {
        for i in start..mons.len() {
            let m = &mons[i];
            if current.iter().any(|c| c.divides(m) || m.divides(c)) {
                continue;
            }
            current.push(m.clone());
            if seen.insert(key(current)) {
                out.push(current.clone());
            }
            rec(mons, i + 1, current, out, seen, key);
            current.pop();
        }
    }
    rec(&mons, 0, &mut current, &mut out, &mut seen, &key);
    out
}

fn binomial_sample(field: PrimeField, nvars: usize, degree: u64, count: usize, seed: u64) -> Vec<Vec<Polynomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..count {
        let k = rng.gen_range(1..=nvars.max(1));
        let mut gens = Vec::new();
        for _ in 0..k {
            let d = rng.gen_range(1..=degree.max(1));
            let pool = monomials_of_degree(nvars, d);
            let a = pool[rng.gen_range(0..pool.len())].clone();
            let b = pool[rng.gen_range(0..pool.len())].clone();
            let ma = Polynomial::monomial(field, a.clone());
            if a == b || rng.gen_bool(0.3) {
                gens.push(ma);
            } else {
                gens.push(ma.sub(&Polynomial::monomial(field, b)));
            }
        }
        out.push(gens);
    }
    out
}

fn enumerate(config: &CensusConfig) -> Result<Vec<RingSpec>, AlgebraError> {
    if let Family::Explicit(rings) = &config.family {
        return Ok(rings.clone());
    }
    if config.nvars == 0 || config.nvars > MAX_CENSUS_VARS {
        return Err(AlgebraError::Shape(format!("census supports 1 to {} variables", MAX_CENSUS_VARS)));
    }
    let vars = var_list(config.nvars);
    let mut rings = Vec::new();
    for &p in &config.primes {
        let field = PrimeField::new(p)?;
        let families: Vec<Vec<Polynomial>> = match &config.family {
            Family::Monomial => monomial_ideals(config.nvars, config.degree)
                .into_iter()
                .map(|set| set.into_iter().map(|m| Polynomial::monomial(field, m)).collect())
                .collect(),
            Family::BinomialSample { count } => {
                binomial_sample(field, config.nvars, config.degree, *count, config.seed ^ p)
            }
            Family::Explicit(_) => unreachable!(),
        };
        for gens in families {
            rings.push(RingSpec::new(field, vars.clone(), gens)?);
        }
    }
    Ok(rings)
}

/// Classifies every ring of the family with dimension at most one. Rows are
/// evaluated in parallel and reported in enumeration order.
pub fn run_census(config: &CensusConfig) -> Result<CensusOutput, AlgebraError> {
    let rings = enumerate(config)?;
    let evaluated: Vec<Option<CensusRow>> = rings
        .par_iter()
        .enumerate()
        .map(|(index, ring)| {
            match ring.hilbert_data() {
                Ok(h) if h.dimension > 1 => return None,
                Err(e) => return Some(CensusRow { ring: ring.clone(), outcome: Err(e) }),
                Ok(_) => {}
            }
            let search = SearchOptions { seed: row_seed(config.seed, index), ..config.search };
            let options = VerdictOptions { search, checks: Checks::all() };
            Some(CensusRow { ring: ring.clone(), outcome: fpi_verdict(ring, &options) })
        })
        .collect();
    let mut summary =
        CensusSummary { out_of_scope: evaluated.iter().filter(|r| r.is_none()).count(), ..Default::default() };
    let rows: Vec<CensusRow> = evaluated.into_iter().flatten().collect();
    for row in &rows {
        summary.rows += 1;
        match &row.outcome {
            Err(_) => summary.errors += 1,
            Ok(rep) => {
                match rep.fpi() {
                    Some(Verdict::True) => summary.fpi_true += 1,
                    Some(Verdict::False) => summary.fpi_false += 1,
                    _ => summary.inconclusive += 1,
                }
                if row.gorenstein() == Some(true) {
                    summary.gorenstein += 1;
                }
                let fpi = rep.fpi().and_then(|v| v.as_bool());
                if rep.dimension == 1 && matches!(rep.minimal_primes, Some(k) if k <= 2) && fpi != row.gorenstein() {
                    summary.two_prime_violations += 1;
                }
            }
        }
    }
    Ok(CensusOutput { rows, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_orbits_in_two_variables() {
        // degree <= 1: (x), (x, y)
        assert_eq!(monomial_ideals(2, 1).len(), 2);
        let sets = monomial_ideals(2, 2);
        // orbits of antichains among x, y, x^2, x*y, y^2
        assert!(sets.iter().all(|s| !s.is_empty()));
        let mut keys: Vec<String> = sets.iter().map(|s| format!("{:?}", s)).collect();
        keys.dedup();
        assert_eq!(keys.len(), sets.len());
    }

    #[test]
    fn row_seeds_differ() {
        assert_ne!(row_seed(0, 0), row_seed(0, 1));
        assert_eq!(row_seed(5, 3), row_seed(5, 3));
    }

    #[test]
    fn empty_family_has_only_a_header() {
        let config = CensusConfig {
            family: Family::Explicit(Vec::new()),
            nvars: 2,
            degree: 2,
            primes: vec![2],
            seed: 0,
            search: SearchOptions::default(),
        };
        let out = run_census(&config).unwrap();
        assert_eq!(out.to_csv(), "ring,dim,CM,Gorenstein,F-pure,FPI,#min-primes,caveat\n");
    }
}
