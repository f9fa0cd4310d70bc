//! Homogeneous polynomials in `x, y, z`, binary forms obtained by restriction
//! to lines, and resultants.

mod binary;
mod hompoly;
mod resultant;

pub use binary::{line_parametrization, restrict_to_line, BinaryForm, LineError, Restriction};
pub use hompoly::{dim_s, monomial_basis, monomial_index, Exp, HomPoly};
pub use resultant::{coeff_in_var, det_bareiss, res_wrt, resultant};

#[cfg(test)]
mod tests;
