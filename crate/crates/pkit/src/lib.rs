//! Weight diagrams, arrow diagrams and translation functors for the
//! periplectic Lie superalgebra p(n).

pub mod arrows;
pub mod blocks;
pub mod error;
pub mod grothendieck;
pub mod structure;
pub mod translation;
pub mod verify;
pub mod weights;

pub use arrows::{build_arrows, down_set, member_down, member_up, up_set, ArrowDiagram};
pub use blocks::{block_components_oracle, block_of, blocks_report, BlockLabel, Partition, Sign};
pub use error::{Error, Result};
pub use grothendieck::{
    delta_to_simple, hom_dim, nabla_to_simple, pairing, proj_to_delta, proj_to_nabla, Family,
    GrothendieckVector, Parity,
};
pub use structure::{cosocle_nabla, dagger, dual_kac, sharp, socle_delta};
pub use translation::{block_action, theta, theta_prime, theta_proj, theta_proj_tracked, theta_simple, verify_tl};
pub use verify::{run_suite, Report, Suite};
pub use weights::{diagram_to_weight, weight_to_diagram, Weight, WeightDiagram, Window};
