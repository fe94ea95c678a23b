//! Zero-annihilator graphs of finite rings.
//!
//! The zero-annihilator graph `ZA(R)` of a finite ring `R` has the nonzero
//! nonunit elements as vertices, with `x` and `y` adjacent exactly when
//! `Ann(x)` and `Ann(y)` intersect in `{0}` alone. This crate constructs
//! finite rings (`Z_n`, `GF(p^s)`, polynomial quotients, products, matrix
//! rings), builds `ZA(R)` together with the co-annihilating ideal graph and
//! the classical zero-divisor graph, computes exact graph invariants, and
//! machine-checks the known classification results for these graphs over a
//! generated catalog of rings.

#![forbid(unsafe_code)]

pub mod bitset;
pub mod cli;
pub mod error;
pub mod export;
pub mod expr;
pub mod graph;
pub mod harness;
pub mod ideal;
pub mod invariants;
pub mod poly;
pub mod ring;

pub use bitset::BitSet;
pub use error::{Error, ParseError};
pub use graph::{coann_ideal_graph, za_graph, zero_divisor_graph, GraphKind, SimpleGraph};
pub use invariants::{Budget, Distance, InvariantReport};
pub use poly::Polynomial;
pub use ring::{
    annihilator, classify_elements, make_gf, make_matrix_ring, make_poly_quotient, make_product,
    make_zn, ring_axiom_audit, BuildConfig, FiniteRing, Side,
};
