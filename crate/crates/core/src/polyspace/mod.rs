//! Monomials, divided powers, weight vectors, spikes and the monomial order.

mod basis;
mod monomial;
mod spike;
mod weight;

pub use basis::{enumerate_monomials, monomial_count, MonomialBasis};
pub use monomial::{pairing, DualElement, DualMonomial, Monomial, Polynomial, MAX_VARS};
pub use spike::{alpha, generic_degree_decompositions, is_minimal_spike, is_spike, minimal_spike, mu};
pub use weight::{compare, WeightVector};

#[cfg(test)]
mod tests;
