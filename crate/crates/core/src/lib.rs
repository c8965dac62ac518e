//! Exact representation theory of restricted two-parameter quantum groups
//! and Drinfel'd doubles of rank-one pointed Hopf algebras.
//!
//! The crate has two layers that check each other:
//!
//! - a *structural* layer working purely with root-of-unity exponents:
//!   residue linear algebra ([`zmod`]), central group-like subgroups and the
//!   simple-module factorization criteria ([`two_param`]), and the rank-one
//!   analogues with predicted tensor decompositions ([`rank_one`]);
//! - a *concrete oracle* over ℚ(ζ_ℓ) ([`cyclotomic`]): finite-dimensional
//!   Hopf algebras as structure constants ([`hopf`]) and the Yetter-Drinfel'd
//!   module toolkit built on Radford's construction ([`yd`]) — spinning
//!   simples, tensor products, character twists, Hom spaces and socles.
//!
//! Every structural prediction is verifiable against the oracle by exact
//! arithmetic; [`acceptance`] bundles those sweeps.

pub mod acceptance;
pub mod cyclotomic;
pub mod hopf;
pub mod linalg;
pub mod rank_one;
pub mod two_param;
pub mod yd;
pub mod zmod;

pub use cyclotomic::{cyclotomic_poly, euler_phi, order_of_power, CycElem};
pub use hopf::{
    apply_character, build_borel_sl2, build_hd, verify_grouplikes, verify_hopf_axioms,
    AxiomReport, Character, HopfAlgebra,
};
pub use linalg::{CycMatrix, EchelonSpace};
pub use rank_one::{DoubleGroupLike, RankOneData};
pub use two_param::TwoParamConfig;
pub use yd::{SimpleFamily, SimpleParam, YDModule};
pub use zmod::{det_mod, invert_mod, solve_mod, Residue, ResidueMatrix};
