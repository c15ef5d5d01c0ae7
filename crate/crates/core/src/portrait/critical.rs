use std::collections::BTreeSet;

use crate::angle::{orbit_set, sorted_set, unlinked, weakly_unlinked_right, Angle};
use crate::error::Error;
use crate::portrait::address::decompose;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetKind {
    Fatou,
    Julia,
}

/// A set of at least two angles sharing one image under `m_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalSet {
    kind: SetKind,
    angles: Vec<Angle>,
}

impl CriticalSet {
    pub fn kind(&self) -> SetKind {
        self.kind
    }

    /// Sorted ascending.
    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn contains(&self, a: Angle) -> bool {
        self.angles.binary_search(&a).is_ok()
    }
}

/// A validated pair of Fatou and Julia families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPortrait {
    fatou: Vec<CriticalSet>,
    julia: Vec<CriticalSet>,
    degree: u32,
}

impl CriticalPortrait {
    /// Validates the families; the degree is `1 + Σ (|A| - 1)`.
    pub fn new(fatou: Vec<Vec<Angle>>, julia: Vec<Vec<Angle>>) -> Result<CriticalPortrait, Error> {
        let mut sets = Vec::new();
        for (kind, family) in [(SetKind::Fatou, fatou), (SetKind::Julia, julia)] {
            for raw in family {
                let angles = sorted_set(&raw);
                if angles.len() != raw.len() {
                    let dup = raw
                        .iter()
                        .enumerate()
                        .find(|(i, a)| raw[..*i].contains(a))
                        .map(|(_, a)| *a)
                        .expect("length shrank on dedup");
                    return Err(Error::DuplicateAngle(dup));
                }
                if angles.len() < 2 {
                    return Err(Error::SmallSet(angles));
                }
                sets.push(CriticalSet { kind, angles });
            }
        }

        let degree = 1 + sets.iter().map(|s| s.len() as u32 - 1).sum::<u32>();
        if degree < 2 {
            return Err(Error::DegreeTooSmall);
        }

        let mut seen = BTreeSet::new();
        for s in &sets {
            for a in &s.angles {
                if !seen.insert(*a) {
                    return Err(Error::DuplicateAngle(*a));
                }
            }
        }

        for (i, s) in sets.iter().enumerate() {
            for t in &sets[i + 1..] {
                if !unlinked(&s.angles, &t.angles)? {
                    return Err(Error::Linked {
                        first: s.angles.clone(),
                        second: t.angles.clone(),
                    });
                }
            }
        }

        let (fatou, julia): (Vec<_>, Vec<_>) =
            sets.into_iter().partition(|s| s.kind == SetKind::Fatou);

        for j in &julia {
            for f in &fatou {
                if !weakly_unlinked_right(&f.angles, &j.angles)? {
                    return Err(Error::NotWeaklyUnlinked {
                        julia: j.angles.clone(),
                        fatou: f.angles.clone(),
                    });
                }
            }
        }

        for s in fatou.iter().chain(julia.iter()) {
            let image = s.angles[0].md(degree);
            if s.angles.iter().any(|a| a.md(degree) != image) {
                return Err(Error::NotCollapsing {
                    set: s.angles.clone(),
                    degree,
                });
            }
        }

        let portrait = CriticalPortrait {
            fatou,
            julia,
            degree,
        };
        let decomposition = decompose(&portrait);
        let expected = num_rational::Ratio::new(1, degree as i64);
        if decomposition.pieces.len() != degree as usize
            || decomposition.pieces.iter().any(|p| p.length() != expected)
        {
            return Err(Error::PieceLength(degree));
        }
        Ok(portrait)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn fatou(&self) -> &[CriticalSet] {
        &self.fatou
    }

    pub fn julia(&self) -> &[CriticalSet] {
        &self.julia
    }

    /// Fatou sets first, then Julia sets.
    pub fn sets(&self) -> impl Iterator<Item = &CriticalSet> {
        self.fatou.iter().chain(self.julia.iter())
    }

    /// F∪, sorted.
    pub fn fatou_union(&self) -> Vec<Angle> {
        let mut v: Vec<Angle> = self.fatou.iter().flat_map(|s| s.angles.clone()).collect();
        v.sort();
        v
    }

    /// J∪, sorted.
    pub fn julia_union(&self) -> Vec<Angle> {
        let mut v: Vec<Angle> = self.julia.iter().flat_map(|s| s.angles.clone()).collect();
        v.sort();
        v
    }

    /// O(F∪).
    pub fn fatou_orbit(&self) -> Vec<Angle> {
        orbit_set(self.fatou_union(), self.degree)
    }

    /// O(J∪).
    pub fn julia_orbit(&self) -> Vec<Angle> {
        orbit_set(self.julia_union(), self.degree)
    }

    /// All portrait angles, sorted.
    pub fn cut_points(&self) -> Vec<Angle> {
        let mut v: Vec<Angle> = self.sets().flat_map(|s| s.angles.clone()).collect();
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(p: i64, q: i64) -> Angle {
        Angle::new(p, q).unwrap()
    }

    #[test]
    fn levy_example_portrait() {
        let p = CriticalPortrait::new(
            vec![vec![a(1, 4), a(7, 12)], vec![a(3, 4), a(1, 12)]],
            vec![],
        )
        .unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.fatou().len(), 2);
    }

    #[test]
    fn cube_portrait() {
        let p = CriticalPortrait::new(vec![vec![Angle::ZERO, a(1, 3), a(2, 3)]], vec![]).unwrap();
        assert_eq!(p.degree(), 3);
    }

    #[test]
    fn rejects_linked() {
        let err = CriticalPortrait::new(
            vec![vec![Angle::ZERO, a(1, 2)]],
            vec![vec![a(1, 4), a(3, 4)]],
        )
        .unwrap_err();
        assert_eq!(err.to_string(), "linked sets: {0,1/2} vs {1/4,3/4}");
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(
            CriticalPortrait::new(vec![], vec![]),
            Err(Error::DegreeTooSmall)
        );
    }

    #[test]
    fn rejects_non_collapsing() {
        let err = CriticalPortrait::new(vec![vec![Angle::ZERO, a(1, 3)]], vec![]).unwrap_err();
        assert!(matches!(err, Error::NotCollapsing { degree: 2, .. }));
    }

    #[test]
    fn rejects_duplicates_and_singletons() {
        assert_eq!(
            CriticalPortrait::new(vec![vec![Angle::ZERO, a(1, 2)]], vec![vec![a(1, 2), Angle::ZERO]]),
            Err(Error::DuplicateAngle(Angle::ZERO))
        );
        assert_eq!(
            CriticalPortrait::new(vec![vec![a(1, 2)]], vec![]),
            Err(Error::SmallSet(vec![a(1, 2)]))
        );
    }
}
