//! Buchberger engine and ideal arithmetic.

mod engine;
mod hilbert;
mod ideal;

pub use engine::{module_basis, GbEngine, Reducer, Term, Vector, DEFAULT_PAIR_BUDGET};
pub use hilbert::{hilbert_data_of, minimal_primes_monomial, monomial_dimension, standard_monomials, HilbertData};
pub use ideal::{
    bracket_power, colon_element, groebner_basis, ideal_colon, ideal_intersect, ideal_saturation, normal_form,
    radical_contains, Ideal, SATURATION_CAP,
};
