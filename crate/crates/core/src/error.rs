use thiserror::Error;

use crate::angle::{format_set, Angle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid angle {0:?}: expected reduced \"p/q\" with 0 <= p < q, or \"0\"")]
    ParseAngle(String),
    #[error("angles are not pairwise distinct")]
    NotDistinct,
    #[error("empty angle set")]
    EmptySet,
    #[error("sets share the angle {0}")]
    SharedAngle(Angle),
    #[error("degenerate arc at {0}")]
    DegenerateArc(Angle),
    #[error("at least two angles are required in the reference set")]
    TooFewAngles,

    #[error("degree < 2")]
    DegreeTooSmall,
    #[error("declared degree {declared} does not match computed degree {computed}")]
    DegreeMismatch { declared: u32, computed: u32 },
    #[error("set {} has fewer than two angles", format_set(.0))]
    SmallSet(Vec<Angle>),
    #[error("duplicate angle {0}")]
    DuplicateAngle(Angle),
    #[error("set {} does not map to a single point under m_{degree}", format_set(.set))]
    NotCollapsing { set: Vec<Angle>, degree: u32 },
    #[error("linked sets: {} vs {}", format_set(.first), format_set(.second))]
    Linked {
        first: Vec<Angle>,
        second: Vec<Angle>,
    },
    #[error(
        "c2 violated: julia set {} is not weakly unlinked in the right to fatou set {}",
        format_set(.julia),
        format_set(.fatou)
    )]
    NotWeaklyUnlinked { julia: Vec<Angle>, fatou: Vec<Angle> },
    #[error("pieces do not all have length 1/{0}")]
    PieceLength(u32),

    #[error("itinerary cycle is empty")]
    EmptyCycle,
    #[error("no piece with id {0}")]
    InvalidPiece(usize),
    #[error("{0} is not a periodic angle of the Fatou orbit")]
    NotPeriodicFatou(Angle),
    #[error("special arguments are not forward invariant: m_d({angle}) = {image} lies outside the special arguments and the Fatou orbit")]
    GammaNotInvariant { angle: Angle, image: Angle },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("candidate does not partition the marked set: {0}")]
    NotMarkedPartition(String),
    #[error(
        "obstruction: {} and {} violate weak right unlinkage ({reason})",
        format_set(.first),
        format_set(.second)
    )]
    Obstruction {
        first: Vec<Angle>,
        second: Vec<Angle>,
        reason: String,
    },
    #[error("web map is inconsistent: {0}")]
    InconsistentMap(String),

    #[error("twist system needs matching non-empty lists (degrees {degrees}, differences {differences})")]
    TwistShape { degrees: usize, differences: usize },
    #[error("local degree {0} is below 2")]
    LocalDegree(u32),
}
