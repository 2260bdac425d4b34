//! Concurrence vectors of multipartite pure states.
//!
//! A state `|ψ⟩` with amplitudes `a_I` is lifted to the doubled vector
//! `A = a ⊗ a`. For every subset `I` of parties, the copy-swap permutation
//! `P_I` exchanges the sub-indices of `I` between the two copies, and
//! `(1 - P_I) A` is the concurrence vector of the cut `I|Ī`:
//! its squared norm is `C² = 2(1 - tr ρ_I²)`.
//!
//! Everything else (triangle and polygon relations, Tsallis-2 entropy
//! inequalities, genuine-entanglement tests) is built from products of
//! `(1 ± P_k)` factors acting on `A`.

pub mod audit;
pub mod concurrence;
pub mod density;
pub mod entropy;
pub mod equality;
pub mod error;
pub mod fixtures;
pub mod genuine;
pub mod index;
pub mod inequality;
pub mod mask;
pub mod perm;
pub mod state;
pub mod tol;

pub use concurrence::{
    all_concurrences, all_concurrences_checked, concurrence_sq_minor, concurrence_sq_rho, concurrence_vector,
    decompose_elementary, generic_form, ConcurrenceVector,
};
pub use density::{purify, DensityMatrix};
pub use entropy::{mixed_state_entry, tsallis2, EntropyContext};
pub use error::{Error, Result};
pub use fixtures::{named_state, NamedParams, NamedState};
pub use genuine::{build_v, build_w, certify_genuine, exhaustive_oracle, Certification, GenuineVerdict};
pub use inequality::{InequalityReport, Verdict};
pub use mask::{canonicalize, enumerate_bipartitions, sym_diff, BipartitionMask, PartySet};
pub use perm::{apply_perm, Sign};
pub use state::{doubled_vector, DoubledVector, StateTensor};
