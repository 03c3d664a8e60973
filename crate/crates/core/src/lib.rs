//! Cohomology of Lie 2-algebras and matrix Lie 2-groups with coefficients in
//! 2-representations.

pub mod numeric;
pub mod diag;
pub mod homalg;
pub mod liealg;
pub mod lie2;
pub mod tworep;
pub mod random;
pub mod lattice;
pub mod ext;
pub mod grp;
