//! The four operators of a finite family, their identities, and domain
//! membership for structured sequences.

pub mod identities;
pub mod membership;
pub mod suite;

pub use identities::{check_identities, IdentityCheck, IdentityReport};
pub use membership::{
    dom_c_membership, dom_d_membership, dom_g_membership, dom_s_membership, map_distance,
    map_norm, partial_analysis_sum, partial_frame_sum, partial_gram_rows, partial_synthesis_sum,
    MembershipStatus, MembershipVerdict, ProbeSettings, DEFAULT_LEVELS,
};
pub use suite::{build_suite, frame_apply_direct, OperatorSuite};
