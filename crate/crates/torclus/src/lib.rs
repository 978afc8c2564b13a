//! Exact computer algebra for toroidal (multi-parameter quantum) cluster
//! algebras and toroidal Grothendieck rings of quantum affine algebras.

pub mod cartan;
pub mod cluster;
pub mod groth;
pub mod parse;
pub mod report;
pub mod seedfile;
pub mod params;
pub mod torus;
