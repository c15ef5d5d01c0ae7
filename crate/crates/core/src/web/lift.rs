use crate::angle::{sorted_set, Angle};
use crate::error::Error;
use crate::portrait::{AddressSystem, MarkedPartition};

/// Classes of the `m_d`-preimages of a partition's ground set.
///
/// The ground set of the result is every preimage of every input angle; its
/// parts are the `~_l` classes of that set.
pub fn lift_classes(sys: &AddressSystem, parts: &MarkedPartition) -> Result<MarkedPartition, Error> {
    let d = sys.degree();
    let preimages: Vec<Angle> = parts
        .ground_set()
        .into_iter()
        .flat_map(|a| a.preimages(d))
        .collect();
    MarkedPartition::julia(sys.l_classes(&sorted_set(&preimages)))
}
