//! Exact-arithmetic computations for the finite groups of discrete
//! symmetries attached to the Clifford algebra Cl(1,4).
//!
//! The crate has two independent computational routes and keeps them that
//! way on purpose: an abstract one over signed basis monomials
//! ([`blade_algebra`]) and a concrete one over 4×4 Gaussian-integer matrices
//! ([`exact_arith`] + [`matrix_rep`]). Every table and signature can be
//! recomputed on either route and the results must agree exactly.
//!
//! On top of those sit generic finite-group machinery ([`group_engine`]),
//! the two concrete discrete-symmetry groups and their structure checks
//! ([`cpt_groups`]), the derivation of the automorphism intertwiners
//! ([`automorphism_solver`]), and the command-line surface
//! ([`cli_reporting`]).

pub mod automorphism_solver;
pub mod blade_algebra;
pub mod cli_reporting;
pub mod cpt_groups;
pub mod exact_arith;
pub mod group_engine;
pub mod matrix_rep;
