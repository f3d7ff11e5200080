//! Exact combinatorics of blocks in level-`l` categorical representations of
//! affine `sl_e`: dominantization with alcove tracking, Scopes walls, RoCK
//! tests and constructions, abacus models, and a brute-force multipartition
//! oracle to check them against.
//!
//! Residues are 0-based with residue 0 the affine node. Alcove points live at
//! level 1 in `h`-coordinates indexed `1..=e`; coordinate `i` corresponds to
//! abacus runner `i - 1`.

pub mod abacus;
pub mod blocks;
mod error;
pub mod oracle;
pub mod root_system;
pub mod scopes;

pub use abacus::Abacus;
pub use blocks::{block_of_multipartition, weight_from_block, Multipartition, TCoordinates};
pub use error::{Error, Result};
pub use oracle::{enumerate_block, oracle_in_support, oracle_wall_bounds, EnumerationBudget};
pub use root_system::{AlcovePoint, Block, Context, Rational, Root, WeylWord};
pub use scopes::{
    all_rocks, block_at_point, canonical_point, find_dom_w_chamber, find_dominant, find_n,
    rock_weight, scopes_equivalent, scopes_signature, signature_at, test_rock, ChamberSignature,
    PairCheck, RockReport, Sign, WallBounds,
};
