//! Partially scattered linearized polynomials over finite-field towers.

pub mod arith;
pub mod gf;
pub mod linalg;
pub mod par;
pub mod linpoly;
pub mod scatter;
pub mod families;
pub mod geometry;
pub mod groups;
pub mod suites;
