//! Graded free resolutions of monomial quotients, checked against Hilbert
//! functions counted by brute force.

use fpi_core::gfpoly::{Monomial, Polynomial, PrimeField};
use fpi_core::resolutions::{minimal_free_resolution, ModulePresentation};
use fpi_core::ring::RingSpec;
use proptest::prelude::*;

fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `d` outside the monomial ideal.
fn standard_count(nvars: usize, gens: &[Vec<u32>], d: u32) -> i64 {
    fn go(nvars: usize, d: u32, prefix: &mut Vec<u32>, gens: &[Vec<u32>], count: &mut i64) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            if !gens.iter().any(|g| g.iter().zip(prefix.iter()).all(|(a, b)| a <= b)) {
                *count += 1;
            }
            prefix.pop();
            return;
        }
        for a in 0..=d {
            prefix.push(a);
            go(nvars, d - a, prefix, gens, count);
            prefix.pop();
        }
    }
    let mut count = 0;
    go(nvars, d, &mut Vec::new(), gens, &mut count);
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn betti_table_reproduces_the_hilbert_function(
        gens in prop::collection::vec(prop::collection::vec(0u32..=2, 3), 1..=4)
            .prop_filter("nonzero generators", |g| g.iter().all(|e| e.iter().any(|&x| x > 0))),
        p in prop::sample::select(vec![2u64, 3]),
    ) {
        let n = 3;
        let field = PrimeField::new(p).unwrap();
        let s = RingSpec::polynomial_ring(field, vec!["x".into(), "y".into(), "z".into()]);
        let polys: Vec<Polynomial> = gens.iter().map(|e| Polynomial::monomial(field, Monomial::new(e))).collect();
        let m = ModulePresentation::cyclic(s, &polys).unwrap();
        let res = minimal_free_resolution(&m, n + 1).unwrap();
        prop_assert!(!res.truncated);
        prop_assert!(res.length() <= n);
        let mut twists: Vec<Vec<i64>> = vec![vec![0]];
        for i in 1..=res.length() {
            twists.push(res.twists(i).to_vec());
        }
        for d in 0..=8u32 {
            let from_betti: i64 = twists
                .iter()
                .enumerate()
                .map(|(i, tw)| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    sign * tw.iter().map(|&a| binomial(d as i64 - a + n as i64 - 1, n as i64 - 1)).sum::<i64>()
                })
                .sum();
            prop_assert_eq!(from_betti, standard_count(n, &gens, d), "degree {}", d);
        }
    }
}
