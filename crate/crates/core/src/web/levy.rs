use std::fmt;

use crate::angle::{is_periodic, Angle};
use crate::error::Error;
use crate::portrait::{AddressSystem, MarkedPartition};

/// Pairs of periodic marked angles with equal left itineraries that a
/// candidate partition keeps apart. Each pair witnesses a Levy cycle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevyReport {
    pub witnesses: Vec<(Angle, Angle)>,
}

impl LevyReport {
    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }
}

impl fmt::Display for LevyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.witnesses.is_empty() {
            return writeln!(f, "no Levy witnesses");
        }
        for (x, y) in &self.witnesses {
            writeln!(f, "LEVY WITNESS: ({x}, {y})")?;
        }
        Ok(())
    }
}

/// Compares `candidate` with the left itineraries of the periodic marked angles.
pub fn check_levy(
    sys: &AddressSystem,
    candidate: &MarkedPartition,
    gamma: &[Angle],
) -> Result<LevyReport, Error> {
    let marked = sys.marked_set(gamma);
    let ground = candidate.ground_set();
    if let Some(x) = marked.iter().find(|x| ground.binary_search(x).is_err()) {
        return Err(Error::NotMarkedPartition(format!("{x} is not covered")));
    }
    if let Some(x) = ground.iter().find(|x| marked.binary_search(x).is_err()) {
        return Err(Error::NotMarkedPartition(format!("{x} is not a marked angle")));
    }

    let d = sys.degree();
    let periodic: Vec<(Angle, _)> = marked
        .iter()
        .filter(|x| is_periodic(**x, d))
        .map(|x| (*x, sys.itinerary_left(*x)))
        .collect();
    let mut witnesses = Vec::new();
    for (i, (x, sx)) in periodic.iter().enumerate() {
        for (y, sy) in &periodic[i + 1..] {
            if sx == sy && candidate.part_of(*x) != candidate.part_of(*y) {
                witnesses.push((*x, *y));
            }
        }
    }
    Ok(LevyReport { witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::portrait::CriticalPortrait;

    fn a(p: i64, q: i64) -> Angle {
        Angle::new(p, q).unwrap()
    }

    fn levy() -> AddressSystem {
        AddressSystem::new(
            CriticalPortrait::new(vec![vec![a(1, 4), a(7, 12)], vec![a(3, 4), a(1, 12)]], vec![])
                .unwrap(),
        )
    }

    #[test]
    fn canonical_partition_is_clean() {
        let sys = levy();
        let gamma = sys.gen_special_arguments();
        let jstar = sys.build_jstar(&gamma).unwrap();
        assert!(check_levy(&sys, &jstar, &gamma).unwrap().is_empty());
    }

    #[test]
    fn split_pair_is_reported() {
        let sys = levy();
        let gamma = sys.gen_special_arguments();
        let groups: Vec<Vec<Angle>> = sys
            .build_jstar(&gamma)
            .unwrap()
            .groups()
            .into_iter()
            .flat_map(|g| g.into_iter().map(|x| vec![x]))
            .collect();
        let split = MarkedPartition::julia(groups).unwrap();
        let report = check_levy(&sys, &split, &gamma).unwrap();
        assert_eq!(report.witnesses, [(a(1, 4), a(3, 4))]);
        assert_eq!(report.to_string(), "LEVY WITNESS: (1/4, 3/4)\n");
    }

    #[test]
    fn preperiodic_marks_give_nothing() {
        let sys = AddressSystem::new(
            CriticalPortrait::new(vec![], vec![vec![a(1, 4), a(3, 4)]]).unwrap(),
        );
        let singletons: Vec<Vec<Angle>> =
            sys.marked_set(&[]).into_iter().map(|x| vec![x]).collect();
        let report = check_levy(&sys, &MarkedPartition::julia(singletons).unwrap(), &[]).unwrap();
        assert!(report.is_empty());
    }

    #[test]
    fn rejects_foreign_ground_sets() {
        let sys = levy();
        let wrong = MarkedPartition::julia(vec![vec![Angle::ZERO]]).unwrap();
        assert!(matches!(
            check_levy(&sys, &wrong, &[]),
            Err(Error::NotMarkedPartition(_))
        ));
    }
}
