//! Ideal arithmetic checked against a dense linear-algebra oracle.

use fpi_core::gfpoly::{Monomial, Polynomial, PrimeField};
use fpi_core::groebner::{bracket_power, ideal_colon, ideal_intersect, radical_contains, Ideal};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn exponents(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in 0..=d {
        for mut rest in exponents(nvars - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

fn random_form(rng: &mut ChaCha8Rng, field: PrimeField, nvars: usize, d: u32) -> Polynomial {
    let p = field.characteristic();
    let mut terms = Vec::new();
    for e in exponents(nvars, d) {
        if rng.gen_bool(0.5) {
            terms.push((Monomial::new(&e), rng.gen_range(1..p)));
        }
    }
    Polynomial::from_terms(field, nvars, terms)
}

struct Case {
    field: PrimeField,
    nvars: usize,
    gens: Vec<Polynomial>,
}

fn random_case(seed: u64) -> (Case, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = PrimeField::new([2u64, 3, 5, 7][rng.gen_range(0..4)]).unwrap();
    let nvars = rng.gen_range(1..=3);
    let mut gens = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(1..=3);
        let g = random_form(&mut rng, field, nvars, d);
        if !g.is_zero() {
            gens.push(g);
        }
    }
    (Case { field, nvars, gens }, rng)
}

/// Rank of a list of vectors mod p.
fn rank(p: u64, rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let width = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..width {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = (1..p).find(|k| k * m[r][c] % p == 1).unwrap();
        let pivot: Vec<u64> = m[r].iter().map(|x| x * inv % p).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let k = row[c];
                for j in 0..width {
                    row[j] = (row[j] + p * p - k * pivot[j] % p) % p;
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

fn coords(f: &Polynomial, basis: &[Vec<u32>]) -> Vec<u64> {
    let mut v = vec![0; basis.len()];
    for (m, c) in f.terms() {
        v[basis.iter().position(|b| b.as_slice() == m.exponents()).unwrap()] = *c as u64;
    }
    v
}

/// Membership of a form of degree `d` by spanning `I_d`.
fn member_by_linear_algebra(case: &Case, f: &Polynomial, d: u32) -> bool {
    let basis = exponents(case.nvars, d);
    let mut rows = Vec::new();
    for g in &case.gens {
        let dg = g.total_degree().unwrap() as u32;
        if dg <= d {
            for m in exponents(case.nvars, d - dg) {
                rows.push(coords(&g.mul_term(&Monomial::new(&m), 1), &basis));
            }
        }
    }
    let p = case.field.characteristic() as u64;
    let before = rank(p, &rows);
    rows.push(coords(f, &basis));
    rank(p, &rows) == before
}

fn ideal(case: &Case) -> Ideal {
    Ideal::new(case.field, case.nvars, case.gens.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_matches_linear_algebra(seed in any::<u64>(), d in 1u32..=4) {
        let (case, mut rng) = random_case(seed);
        prop_assume!(!case.gens.is_empty());
        let f = random_form(&mut rng, case.field, case.nvars, d);
        prop_assume!(!f.is_zero());
        let i = ideal(&case);
        prop_assert_eq!(i.contains(&f).unwrap(), member_by_linear_algebra(&case, &f, d));
    }

    #[test]
    fn normal_form_is_a_canonical_remainder(seed in any::<u64>(), d in 1u32..=4) {
        let (case, mut rng) = random_case(seed);
        prop_assume!(!case.gens.is_empty());
        let i = ideal(&case);
        let f = random_form(&mut rng, case.field, case.nvars, d);
        let nf = i.normal_form(&f).unwrap();
        prop_assert_eq!(i.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(i.contains(&f.sub(&nf)).unwrap());
        // adding an element of I leaves the remainder unchanged
        let g = &case.gens[rng.gen_range(0..case.gens.len())];
        let k = d.saturating_sub(g.total_degree().unwrap() as u32);
        let shifted = f.add(&random_form(&mut rng, case.field, case.nvars, k).mul(g));
        prop_assert_eq!(i.normal_form(&shifted).unwrap(), nf);
    }

    #[test]
    fn colon_times_divisor_lands_in_ideal(seed in any::<u64>()) {
        let (case, mut rng) = random_case(seed);
        prop_assume!(!case.gens.is_empty());
        let i = ideal(&case);
        let dj = rng.gen_range(1..=2);
        let h = random_form(&mut rng, case.field, case.nvars, dj);
        prop_assume!(!h.is_zero());
        let j = Ideal::new(case.field, case.nvars, vec![h.clone()]);
        let colon = ideal_colon(&i, &j).unwrap();
        prop_assert!(colon.contains_ideal(&i).unwrap());
        for c in colon.generators() {
            prop_assert!(i.contains(&c.mul(&h)).unwrap());
        }
    }

    #[test]
    fn bracket_power_holds_frobenius_images(seed in any::<u64>()) {
        let (case, mut rng) = random_case(seed);
        prop_assume!(!case.gens.is_empty());
        let p = case.field.characteristic() as u64;
        let i = ideal(&case);
        let ip = bracket_power(&i, 1);
        let f = case.gens.iter().fold(Polynomial::zero(case.field, case.nvars), |acc, g| {
            let c = random_form(&mut rng, case.field, case.nvars, 1);
            acc.add(&c.mul(g))
        });
        prop_assert!(ip.contains(&f.pow(p)).unwrap());
        prop_assert!(i.contains_ideal(&ip).unwrap());
    }

    #[test]
    fn intersection_and_radical(seed in any::<u64>()) {
        let (case, mut rng) = random_case(seed);
        prop_assume!(case.gens.len() >= 2);
        let i = Ideal::new(case.field, case.nvars, vec![case.gens[0].clone()]);
        let j = Ideal::new(case.field, case.nvars, case.gens[1..].to_vec());
        let meet = ideal_intersect(&i, &j).unwrap();
        prop_assert!(i.contains_ideal(&meet).unwrap());
        prop_assert!(j.contains_ideal(&meet).unwrap());
        prop_assert!(meet.contains_ideal(&i.product(&j)).unwrap());
        let g = random_form(&mut rng, case.field, case.nvars, 1);
        prop_assume!(!g.is_zero());
        let square = Ideal::new(case.field, case.nvars, vec![g.pow(2)]);
        prop_assert!(radical_contains(&square, &g).unwrap());
    }
}
