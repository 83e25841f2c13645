//! Exact-arithmetic computation of Bredon homology with coefficients in the
//! complex representation ring for finite proper G-CW-complexes, and of the
//! equivariant K-homology that follows when the homology concentrates in
//! low degrees.
//!
//! The pipeline: enumerate the finite matrix-group stabilizers of a cell
//! complex, compute their character tables exactly, assemble the boundary
//! maps as integer matrices of induced-representation multiplicities, and
//! read homology off Smith normal forms. Products of groups are handled
//! through the Künneth formula.

pub mod bredon;
pub mod chartab;
pub mod cyclotomic;
pub mod dataset;
pub mod group;
pub mod khomology;
mod modp;
pub mod report;
pub mod zmodule;
