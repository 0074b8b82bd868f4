//! Exact computation in the finitely generated solvable groups
//! `G = <s, t> ≤ Z × ∏_n (D^{k_n} ⋊ C_{k_n})`, where `D` is the infinite
//! dihedral group and `(d_n)`, `(k_n)` are parameter sequences.
//!
//! The crate provides arithmetic in each building block
//! ([`dihedral`], [`lamplighter`], [`layers`]), a decision procedure for
//! the word problem in `G` together with an order oracle and membership in
//! the FC-center ([`group`]), executable structural checks and a torsion
//! search ([`verify`]), and return probabilities of the simple random walk
//! ([`walk`]).
//!
//! ```
//! use fcwreath::{cli::parse_word, group, GroupParams, Order};
//!
//! let gp = GroupParams::paper();
//! let w = parse_word("[s, s_1]").unwrap();
//! assert!(!group::is_identity(&w, &gp).unwrap());
//! assert_eq!(group::order(&w, &gp).unwrap(), Order::Infinite);
//! ```

pub mod cli;
pub mod dihedral;
pub mod error;
pub mod group;
pub mod lamplighter;
pub mod layers;
mod parallel;
pub mod params;
pub mod verify;
pub mod walk;
pub mod word;

pub use dihedral::{DihedralElement, Order};
pub use error::{Error, Result};
pub use group::{FCDecomposition, SWord};
pub use lamplighter::LampElement;
pub use layers::{LayerElement, LayerParams};
pub use params::{GroupParams, SeqRule};
pub use verify::Report;
pub use walk::{Target, WalkConfig};
pub use word::{Letter, Word};
