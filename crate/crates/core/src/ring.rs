//! Quotient rings `R = F_p[x_1..x_n]/I`.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::gfpoly::{Monomial, Polynomial, PrimeField};
use crate::groebner::{hilbert_data_of, HilbertData, Ideal};

struct Inner {
    field: PrimeField,
    vars: Vec<String>,
    ideal: Ideal,
    label: Option<String>,
    graded: bool,
}

/// A quotient of a polynomial ring over `F_p`. Cheap to clone.
#[derive(Clone)]
pub struct RingSpec(Arc<Inner>);

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]/(", self.0.field.characteristic(), self.0.vars.join(","))?;
        for (k, g) in self.0.ideal.generators().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.0.vars))?;
        }
        write!(f, ")")
    }
}

impl PartialEq for RingSpec {
    /// Same field, same variable names and the same generator list.
    fn eq(&self, other: &Self) -> bool {
        self.0.field == other.0.field
            && self.0.vars == other.0.vars
            && self.0.ideal.generators() == other.0.ideal.generators()
            && self.0.label == other.0.label
    }
}

impl RingSpec {
    /// A graded quotient; every generator must be homogeneous.
    pub fn new(field: PrimeField, vars: Vec<String>, generators: Vec<Polynomial>) -> Result<Self> {
        for (k, g) in generators.iter().enumerate() {
            if g.nvars() != vars.len() {
                return Err(AlgebraError::VariableCountMismatch { left: g.nvars(), right: vars.len() });
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::NonHomogeneous { index: k });
            }
        }
        let ideal = Ideal::new(field, vars.len(), generators);
        Ok(RingSpec(Arc::new(Inner { field, vars, ideal, label: None, graded: true })))
    }

    /// A quotient by arbitrary (possibly inhomogeneous) generators. Only the
    /// Fedder test accepts such rings.
    pub fn affine(field: PrimeField, vars: Vec<String>, generators: Vec<Polynomial>) -> Self {
        let graded = generators.iter().all(|g| g.is_homogeneous());
        let ideal = Ideal::new(field, vars.len(), generators);
        RingSpec(Arc::new(Inner { field, vars, ideal, label: None, graded }))
    }

    pub fn polynomial_ring(field: PrimeField, vars: Vec<String>) -> Self {
        Self::affine(field, vars, Vec::new())
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        let i = &self.0;
        RingSpec(Arc::new(Inner {
            field: i.field,
            vars: i.vars.clone(),
            ideal: i.ideal.clone(),
            label: Some(label.into()),
            graded: i.graded,
        }))
    }

    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    pub fn p(&self) -> u32 {
        self.0.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn ideal(&self) -> &Ideal {
        &self.0.ideal
    }

    pub fn label(&self) -> Option<&str> {
        self.0.label.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.0.graded
    }

    /// True when `I = 0`.
    pub fn is_polynomial_ring(&self) -> bool {
        self.0.ideal.is_zero()
    }

    /// The ambient polynomial ring with the same variables.
    pub fn ambient(&self) -> RingSpec {
        RingSpec::polynomial_ring(self.0.field, self.0.vars.clone())
    }

    /// `R/(f)`.
    pub fn quotient_by(&self, f: &Polynomial) -> Result<RingSpec> {
        let mut g = self.0.ideal.generators().to_vec();
        g.push(f.clone());
        if self.0.graded {
            RingSpec::new(self.0.field, self.0.vars.clone(), g)
        } else {
            Ok(RingSpec::affine(self.0.field, self.0.vars.clone(), g))
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.0.field, self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.0.field, self.nvars())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.0.field, self.nvars(), i)
    }

    /// Canonical representative of `f` in `R`.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.0.ideal.is_zero() {
            return Ok(f.clone());
        }
        self.0.ideal.normal_form(f)
    }

    pub fn is_zero_in_ring(&self, f: &Polynomial) -> Result<bool> {
        self.0.ideal.contains(f)
    }

    /// Standard monomials of degree `d`, in decreasing grevlex order.
    pub fn standard_monomials_of_degree(&self, d: u64) -> Result<Vec<Monomial>> {
        let leads = if self.0.ideal.is_zero() { Vec::new() } else { self.0.ideal.leading_monomials()? };
        let mut out: Vec<Monomial> =
            monomials_of_degree(self.nvars(), d).into_iter().filter(|m| !leads.iter().any(|l| l.divides(m))).collect();
        out.sort_by(|a, b| crate::gfpoly::MonomialOrder::GrevLex.compare(b, a));
        Ok(out)
    }

    pub fn hilbert_data(&self) -> Result<HilbertData> {
        hilbert_data_of(&self.0.ideal)
    }

    pub fn display_poly(&self, f: &Polynomial) -> String {
        f.display(&self.0.vars).to_string()
    }
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u64) -> Vec<Monomial> {
    fn rec(n: usize, k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == n {
            cur[k] = left;
            out.push(Monomial::new(cur));
            return;
        }
        for a in (0..=left).rev() {
            cur[k] = a;
            rec(n, k + 1, left - a, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, 0, d as u32, &mut vec![0; n], &mut out);
    out
}

/// `hilbert_data` of a ring.
pub fn hilbert_data(r: &RingSpec) -> Result<HilbertData> {
    r.hilbert_data()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfpoly::{poly, var_names};

    fn ring(p: u64, vars: &str, gens: &[&str]) -> Result<RingSpec> {
        let f = PrimeField::new(p).unwrap();
        let v = var_names(vars);
        let g = gens.iter().map(|g| poly(g, &v, f)).collect();
        RingSpec::new(f, v, g)
    }

    #[test]
    fn rejects_inhomogeneous() {
        assert_eq!(ring(3, "x", &["x^2 + x"]).unwrap_err(), AlgebraError::NonHomogeneous { index: 0 });
    }

    #[test]
    fn display_and_standard_monomials() {
        let r = ring(2, "x,y,z", &["x*y", "x*z", "y*z"]).unwrap();
        assert_eq!(r.to_string(), "F_2[x,y,z]/(x*y, x*z, y*z)");
        assert_eq!(r.standard_monomials_of_degree(2).unwrap().len(), 3);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
    }
}
