//! Explicit constructions: construction sequences, covers built from them,
//! and the lower-bound gadgets.

pub mod contact;
pub mod flac;
pub mod gadgets;
mod krausz;
pub mod sequence;
pub mod slug;

pub use contact::{contact_star_forests, Axis, ContactRepresentation, EndLabel, Touch};
pub use flac::{flac_cover, flac_walks};
pub use gadgets::{fca_core, gadget, gadget_with_limit, Gadget, GadgetKind, T_DEG_VERTEX_LIMIT};
pub use krausz::krausz_cover;
pub use sequence::{
    lift_to_simple, validate_sequence, ConstructionSequence, SequenceCheck, SequenceViolation, StackStep,
};
pub use slug::slug_cover;
