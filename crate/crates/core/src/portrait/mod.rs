//! Critical portraits, their address systems and the F*/J* families.

pub mod address;
pub mod critical;
pub mod itinerary;
pub mod partition;
pub mod relations;
pub mod special;

pub use address::{AddressSystem, Piece, PieceId};
pub use critical::{CriticalPortrait, CriticalSet, SetKind};
pub use itinerary::Itinerary;
pub use partition::{
    parse_family, verify_prop_1_2, MarkedPartition, Part, Prop12Failure, Prop12Witness, Role,
};
