//! Exact root certification: Sturm chains, square-free decomposition,
//! isolation, interlacing, and sequence-level checks.

mod interlace;
mod isolate;
mod liu_wang;
mod sequence;
mod sturm;

pub use interlace::{interlaces, Direction, InterlaceOutcome, InterlaceVerdict, RootLabel, Witness};
pub use isolate::{
    certify_real_rooted, isolate_real_roots, nonpositive_on_nonpositive_reals, same_root_set, IsolatedRoot, RootProfile,
};
pub use liu_wang::{check_liu_wang_hypotheses, LiuWangCondition, LiuWangFailure, LiuWangReport};
pub use sequence::{verify_generalized_sturm, verify_sturm_unimodal, SturmSeqReport};
pub use sturm::{count_roots_in, radical, squarefree_decompose, sturm_chain, SturmChain};
