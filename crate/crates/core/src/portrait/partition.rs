//! The families F* and J* built from a portrait and a set of special arguments.

use std::collections::BTreeSet;
use std::fmt;

use crate::angle::{is_periodic, sorted_set, unlinked, weakly_unlinked_right, Angle};
use crate::error::Error;
use crate::portrait::address::AddressSystem;
use crate::portrait::relations::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    FatouStar { preferred: Angle },
    JuliaStar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    angles: Vec<Angle>,
    role: Role,
}

impl Part {
    pub fn new(angles: Vec<Angle>, role: Role) -> Result<Part, Error> {
        let sorted = sorted_set(&angles);
        if sorted.is_empty() {
            return Err(Error::InvalidPartition("empty part".into()));
        }
        if sorted.len() != angles.len() {
            return Err(Error::InvalidPartition("repeated angle inside a part".into()));
        }
        if let Role::FatouStar { preferred } = role {
            if sorted.binary_search(&preferred).is_err() {
                return Err(Error::InvalidPartition(format!(
                    "preferred argument {preferred} is not in its part"
                )));
            }
        }
        Ok(Part {
            angles: sorted,
            role,
        })
    }

    /// Sorted ascending.
    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn preferred(&self) -> Option<Angle> {
        match self.role {
            Role::FatouStar { preferred } => Some(preferred),
            Role::JuliaStar => None,
        }
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

    /// Fatou parts start at the preferred argument and run counterclockwise.
    pub fn display_order(&self) -> Vec<Angle> {
        let mut v = self.angles.clone();
        if let Some(p) = self.preferred() {
            let i = v.iter().position(|a| *a == p).expect("validated");
            v.rotate_left(i);
        }
        v
    }

    fn anchor(&self) -> Angle {
        self.preferred().unwrap_or(self.angles[0])
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.display_order().iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

/// Disjoint tagged parts, kept sorted by preferred argument (Fatou parts) or
/// least element (Julia parts).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MarkedPartition {
    parts: Vec<Part>,
}

impl MarkedPartition {
    pub fn new(mut parts: Vec<Part>) -> Result<MarkedPartition, Error> {
        let mut seen = BTreeSet::new();
        for p in &parts {
            for a in p.angles() {
                if !seen.insert(*a) {
                    return Err(Error::InvalidPartition(format!("{a} lies in two parts")));
                }
            }
        }
        parts.sort_by_key(Part::anchor);
        Ok(MarkedPartition { parts })
    }

    /// All parts tagged as J* parts.
    pub fn julia(groups: Vec<Vec<Angle>>) -> Result<MarkedPartition, Error> {
        let parts = groups
            .into_iter()
            .map(|g| Part::new(g, Role::JuliaStar))
            .collect::<Result<Vec<_>, _>>()?;
        MarkedPartition::new(parts)
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn ground_set(&self) -> Vec<Angle> {
        let mut v: Vec<Angle> = self.parts.iter().flat_map(|p| p.angles.clone()).collect();
        v.sort();
        v
    }

    pub fn part_of(&self, a: Angle) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(a))
    }

    /// Angle sets of the parts, each ascending.
    pub fn groups(&self) -> Vec<Vec<Angle>> {
        self.parts.iter().map(|p| p.angles.clone()).collect()
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

/// Parses set-of-sets notation such as `{{0},{1/4,3/4}}`; whitespace is ignored.
pub fn parse_family(text: &str) -> Result<Vec<Vec<Angle>>, Error> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |why: &str| Error::InvalidPartition(format!("{why} in {s:?}"));
    let inner = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| bad("missing outer braces"))?;
    let mut out = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest.strip_prefix('{').ok_or_else(|| bad("expected '{'"))?;
        let close = body.find('}').ok_or_else(|| bad("unclosed part"))?;
        let part = body[..close]
            .split(',')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Angle>, _>>()?;
        out.push(part);
        rest = &body[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(bad("trailing comma"));
            }
            rest = r;
        } else if !rest.is_empty() {
            return Err(bad("expected ','"));
        }
    }
    Ok(out)
}

/// Why a pair of parts breaks weak right unlinkage.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prop12Failure {
    LinkedJuliaParts,
    LinkedFatouParts,
    NotWeaklyUnlinkedRight,
}

impl fmt::Display for Prop12Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prop12Failure::LinkedJuliaParts => "linked J* parts",
            Prop12Failure::LinkedFatouParts => "linked F* parts",
            Prop12Failure::NotWeaklyUnlinkedRight => "J* part not weakly unlinked in the right",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop12Witness {
    pub first: Vec<Angle>,
    pub second: Vec<Angle>,
    pub failure: Prop12Failure,
}

impl Prop12Witness {
    pub fn into_error(self) -> Error {
        Error::Obstruction {
            first: self.first,
            second: self.second,
            reason: self.failure.to_string(),
        }
    }
}

/// Checks that J* is weakly unlinked to F* in the right and that the parts of
/// each family are pairwise unlinked. Returns the first offending pair.
pub fn verify_prop_1_2(jstar: &MarkedPartition, fstar: &MarkedPartition) -> Option<Prop12Witness> {
    for (family, failure) in [
        (jstar, Prop12Failure::LinkedJuliaParts),
        (fstar, Prop12Failure::LinkedFatouParts),
    ] {
        for (i, p) in family.parts.iter().enumerate() {
            for q in &family.parts[i + 1..] {
                if !unlinked(p.angles(), q.angles()).expect("parts are disjoint and non-empty") {
                    return Some(Prop12Witness {
                        first: p.angles.clone(),
                        second: q.angles.clone(),
                        failure,
                    });
                }
            }
        }
    }
    for j in &jstar.parts {
        for f in fstar.parts.iter().filter(|f| f.len() >= 2) {
            if !weakly_unlinked_right(f.angles(), j.angles()).expect("|F*_k| >= 2") {
                return Some(Prop12Witness {
                    first: j.angles.clone(),
                    second: f.angles.clone(),
                    failure: Prop12Failure::NotWeaklyUnlinkedRight,
                });
            }
        }
    }
    None
}

impl AddressSystem {
    /// O(F∪) ∪ O(J∪) ∪ Γ ∪ {0}.
    pub fn marked_set(&self, gamma: &[Angle]) -> Vec<Angle> {
        let p = self.portrait();
        let mut v = p.fatou_orbit();
        v.extend(p.julia_orbit());
        v.extend_from_slice(gamma);
        v.push(Angle::ZERO);
        sorted_set(&v)
    }

    /// J*: the `~_l` classes of the marked set.
    pub fn build_jstar(&self, gamma: &[Angle]) -> Result<MarkedPartition, Error> {
        self.check_special_arguments(gamma)?;
        MarkedPartition::julia(self.l_classes(&self.marked_set(gamma)))
    }

    /// F*: the Fatou sets and the remaining orbit points as singletons, with
    /// each λ ∈ Γ merged into the part of every periodic γ ∈ O(F∪) such that
    /// `λ ~_γ γ`.
    pub fn build_fstar(&self, gamma: &[Angle]) -> Result<MarkedPartition, Error> {
        self.check_special_arguments(gamma)?;
        let d = self.degree();
        let fatou_orbit = self.portrait().fatou_orbit();
        let mut ground = fatou_orbit.clone();
        ground.extend_from_slice(gamma);
        let ground = sorted_set(&ground);
        let index = |a: Angle| ground.binary_search(&a).expect("in ground set");

        let mut uf = UnionFind::new(ground.len());
        for set in self.portrait().fatou() {
            for w in set.angles().windows(2) {
                uf.union(index(w[0]), index(w[1]));
            }
        }
        let periodic: Vec<Angle> = fatou_orbit
            .iter()
            .copied()
            .filter(|g| is_periodic(*g, d))
            .collect();
        for &lambda in gamma {
            for &g in &periodic {
                if self.sim_gamma(lambda, g)? {
                    uf.union(index(lambda), index(g));
                }
            }
        }

        let groups: Vec<Vec<Angle>> = uf
            .groups()
            .into_iter()
            .map(|g| g.into_iter().map(|i| ground[i]).collect())
            .collect();
        let parts = groups
            .iter()
            .enumerate()
            .map(|(k, part)| {
                let preferred = preferred_argument(part, &groups, k, d);
                Part::new(part.clone(), Role::FatouStar { preferred })
            })
            .collect::<Result<Vec<_>, _>>()?;
        MarkedPartition::new(parts)
    }
}

/// The periodic member if there is one; otherwise a member hit by another
/// part (so preferred edges map to preferred edges); otherwise the least.
fn preferred_argument(part: &[Angle], groups: &[Vec<Angle>], own: usize, d: u32) -> Angle {
    if let Some(p) = part.iter().find(|a| is_periodic(**a, d)) {
        return *p;
    }
    let hit: BTreeSet<Angle> = groups
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != own)
        .flat_map(|(_, g)| g.iter().map(|a| a.md(d)))
        .collect();
    part.iter()
        .find(|a| hit.contains(a))
        .copied()
        .unwrap_or(part[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::portrait::critical::CriticalPortrait;

    fn a(p: i64, q: i64) -> Angle {
        Angle::new(p, q).unwrap()
    }

    fn levy() -> AddressSystem {
        AddressSystem::new(
            CriticalPortrait::new(vec![vec![a(1, 4), a(7, 12)], vec![a(3, 4), a(1, 12)]], vec![])
                .unwrap(),
        )
    }

    fn cube() -> AddressSystem {
        AddressSystem::new(
            CriticalPortrait::new(vec![vec![Angle::ZERO, a(1, 3), a(2, 3)]], vec![]).unwrap(),
        )
    }

    #[test]
    fn levy_families_match_the_worked_example() {
        let sys = levy();
        let gamma = sys.gen_special_arguments();
        let fstar = sys.build_fstar(&gamma).unwrap();
        let jstar = sys.build_jstar(&gamma).unwrap();
        assert_eq!(fstar.to_string(), "{{1/4,13/36,7/12},{3/4,31/36,1/12}}");
        assert_eq!(jstar.to_string(), "{{0},{1/12},{1/4,3/4},{13/36},{7/12},{31/36}}");
        assert_eq!(verify_prop_1_2(&jstar, &fstar), None);
    }

    #[test]
    fn cube_families_without_gamma() {
        let sys = cube();
        let jstar = sys.build_jstar(&[]).unwrap();
        let fstar = sys.build_fstar(&[]).unwrap();
        assert_eq!(jstar.to_string(), "{{0},{1/3},{2/3}}");
        assert_eq!(fstar.to_string(), "{{0,1/3,2/3}}");
        assert_eq!(verify_prop_1_2(&jstar, &fstar), None);
    }

    #[test]
    fn linked_families_are_reported() {
        let jstar = MarkedPartition::julia(vec![vec![Angle::ZERO, a(1, 2)]]).unwrap();
        let fstar = MarkedPartition::new(vec![Part::new(
            vec![a(1, 4), a(3, 4)],
            Role::FatouStar { preferred: a(1, 4) },
        )
        .unwrap()])
        .unwrap();
        let w = verify_prop_1_2(&jstar, &fstar).unwrap();
        assert_eq!(w.first, vec![Angle::ZERO, a(1, 2)]);
        assert_eq!(w.second, vec![a(1, 4), a(3, 4)]);
        assert_eq!(w.failure, Prop12Failure::NotWeaklyUnlinkedRight);

        let both = MarkedPartition::julia(vec![vec![Angle::ZERO, a(1, 2)], vec![a(1, 4), a(3, 4)]])
            .unwrap();
        let w = verify_prop_1_2(&both, &MarkedPartition::default()).unwrap();
        assert_eq!(w.failure, Prop12Failure::LinkedJuliaParts);
    }

    #[test]
    fn invalid_gamma_is_rejected() {
        let sys = levy();
        assert!(matches!(
            sys.build_fstar(&[a(1, 3)]),
            Err(Error::GammaNotInvariant { .. })
        ));
        assert!(matches!(
            sys.build_jstar(&[a(1, 3)]),
            Err(Error::GammaNotInvariant { .. })
        ));
    }

    #[test]
    fn family_notation_round_trips() {
        let text = "{{0},{1/12},{1/4,3/4}}";
        let fam = parse_family(text).unwrap();
        assert_eq!(MarkedPartition::julia(fam).unwrap().to_string(), text);
        assert_eq!(parse_family("{}").unwrap(), Vec::<Vec<Angle>>::new());
        assert!(parse_family("{{0},}").is_err());
        assert!(parse_family("{0}").is_err());
        assert!(parse_family("{{1/2}").is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(MarkedPartition::julia(vec![vec![a(1, 2)], vec![a(1, 2)]]).is_err());
        assert!(Part::new(vec![a(1, 2)], Role::FatouStar { preferred: a(1, 3) }).is_err());
        assert!(Part::new(vec![], Role::JuliaStar).is_err());
    }
}
