use super::ideal::Ideal;
use crate::error::{AlgebraError, Result};
use crate::gfpoly::Monomial;

/// Hilbert data of a graded quotient `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub dimension: usize,
    /// Coefficients (constant term first) of the numerator over `(1-t)^dimension`.
    pub series_numerator: Vec<i64>,
    /// Number of standard monomials, `None` when infinite.
    pub colength: Option<u64>,
}

impl HilbertData {
    /// Numerator evaluated at 1.
    pub fn multiplicity(&self) -> i64 {
        self.series_numerator.iter().sum()
    }

    /// Value of the Hilbert function in degree `d`.
    pub fn hilbert_function(&self, d: u64) -> i64 {
        if self.dimension == 0 {
            return self.series_numerator.get(d as usize).copied().unwrap_or(0);
        }
        // coefficient of t^d in N(t) / (1-t)^dim
        let r = self.dimension as u64 - 1;
        self.series_numerator
            .iter()
            .enumerate()
            .take_while(|(k, _)| *k as u64 <= d)
            .map(|(k, &c)| c * binom(d - k as u64 + r, r))
            .sum()
    }
}

fn binom(n: u64, k: u64) -> i64 {
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Numerator `K(t)` of the Hilbert series of `S/M` over `(1-t)^n`, for a
/// monomial ideal `M`.
fn numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimize(gens.to_vec());
    if gens.is_empty() {
        return vec![1];
    }
    // pairwise coprime generators: product of (1 - t^d)
    let mut all_coprime = true;
    'outer: for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !gens[i].is_coprime(&gens[j]) {
                all_coprime = false;
                break 'outer;
            }
        }
    }
    if all_coprime {
        let mut acc = vec![1];
        for g in &gens {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // K(M) = K(M') - t^deg(m) K(M' : m), m the last generator
    let (last, rest) = gens.split_last().unwrap();
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| {
            Monomial::new(
                &g.exponents().iter().zip(last.exponents()).map(|(a, b)| a.saturating_sub(*b)).collect::<Vec<_>>(),
            )
        })
        .collect();
    let k1 = numerator(rest);
    let k2 = numerator(&colon);
    let mut shifted = vec![0; last.degree() as usize];
    shifted.extend(k2);
    poly_sub(&k1, &shifted)
}

/// Krull dimension of `S/M` from a monomial ideal: the largest set of
/// variables containing the support of no generator.
pub fn monomial_dimension(nvars: usize, leads: &[Monomial]) -> usize {
    let supports: Vec<u64> = leads.iter().map(|m| m.support()).collect();
    if supports.contains(&0) {
        return 0;
    }
    let mut best = 0;
    for mask in 0u64..(1u64 << nvars) {
        let size = mask.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

/// Standard monomials of a zero-dimensional monomial ideal, sorted by
/// degree then reverse lexicographic exponent order. `None` when the
/// quotient is infinite.
pub fn standard_monomials(nvars: usize, leads: &[Monomial]) -> Option<Vec<Monomial>> {
    if leads.iter().any(|m| m.is_one()) {
        return Some(Vec::new());
    }
    for i in 0..nvars {
        let pure = leads.iter().any(|m| m.exponents().iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)));
        if !pure {
            return None;
        }
    }
    let mut out = vec![Monomial::one(nvars)];
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next: Vec<Monomial> = Vec::new();
        for m in &frontier {
            for i in 0..nvars {
                let c = m.mul(&Monomial::var(nvars, i));
                if !leads.iter().any(|l| l.divides(&c)) && !next.contains(&c) {
                    next.push(c);
                }
            }
        }
        next.sort_by(|a, b| b.exponents().cmp(a.exponents()));
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Some(out)
}

/// Hilbert data of `S/I` for a homogeneous ideal.
pub fn hilbert_data_of(i: &Ideal) -> Result<HilbertData> {
    if let Some(k) = i.generators().iter().position(|g| !g.is_homogeneous()) {
        return Err(AlgebraError::NonHomogeneous { index: k });
    }
    let n = i.nvars();
    let leads = i.leading_monomials()?;
    if leads.iter().any(|m| m.is_one()) {
        // the zero ring
        return Ok(HilbertData { dimension: 0, series_numerator: vec![0], colength: Some(0) });
    }
    let mut num = numerator(&leads);
    let mut dim = n;
    // divide by (1 - t) while N(1) = 0
    while dim > 0 && num.iter().sum::<i64>() == 0 {
        let mut q = vec![0i64; num.len() - 1];
        // N(t) = (1 - t) Q(t): q_k = sum_{j<=k} n_j
        let mut run = 0;
        for k in 0..q.len() {
            run += num[k];
            q[k] = run;
        }
        num = if q.is_empty() { vec![0] } else { q };
        dim -= 1;
    }
    debug_assert_eq!(dim, monomial_dimension(n, &leads));
    let colength = if dim == 0 { Some(num.iter().sum::<i64>() as u64) } else { None };
    Ok(HilbertData { dimension: dim, series_numerator: num, colength })
}

/// Minimal primes of a monomial ideal, each given as the sorted list of
/// variable indices generating it.
pub fn minimal_primes_monomial(i: &Ideal) -> Result<Vec<Vec<usize>>> {
    if let Some(k) = i.generators().iter().position(|g| !g.is_monomial()) {
        return Err(AlgebraError::NonMonomial { index: k });
    }
    let n = i.nvars();
    let supports: Vec<u64> = i.generators().iter().map(|g| g.leading().unwrap().0.support()).collect();
    if supports.contains(&0) {
        return Ok(Vec::new());
    }
    let mut covers: Vec<u64> = (0u64..(1u64 << n)).filter(|mask| supports.iter().all(|s| s & mask != 0)).collect();
    covers.sort_by_key(|m| (m.count_ones(), *m));
    let mut minimal: Vec<u64> = Vec::new();
    for c in covers {
        if !minimal.iter().any(|m| m & c == *m) {
            minimal.push(c);
        }
    }
    Ok(minimal.into_iter().map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect())
}
