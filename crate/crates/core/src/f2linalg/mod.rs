//! Dense bitpacked linear algebra over F2.

mod bitvec;
mod echelon;

pub use bitvec::{BitMatrix, BitVector};
pub use echelon::{
    echelonize, kernel_basis, kernel_of_images, quotient_basis, solve_modulo, solve_modulo_quotients,
    ColumnOrder, EchelonForm, QuotientBasis, Subquotient,
};
