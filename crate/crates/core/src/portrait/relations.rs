//! The landing relation `~_l` and the special-argument relation `~_γ`.

use std::collections::{BTreeMap, HashSet};

use crate::angle::{is_periodic, sorted_set, Angle};
use crate::error::Error;
use crate::portrait::address::AddressSystem;
use crate::portrait::itinerary::Itinerary;

/// Minimal union-find over indices.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Groups of indices, each ascending, ordered by least member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.parent.len() {
            let r = self.find(i);
            by_root.entry(r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }
}

impl AddressSystem {
    /// `~_l` classes of `universe`: the closure, inside the universe, of
    /// "equal left itineraries, or itineraries both realized by one Julia set".
    pub fn l_classes(&self, universe: &[Angle]) -> Vec<Vec<Angle>> {
        let universe = sorted_set(universe);
        let itineraries: Vec<Itinerary> = universe.iter().map(|x| self.itinerary_left(*x)).collect();
        let mut uf = UnionFind::new(universe.len());

        let mut first_with: BTreeMap<&Itinerary, usize> = BTreeMap::new();
        for (i, it) in itineraries.iter().enumerate() {
            match first_with.get(it) {
                Some(&j) => uf.union(i, j),
                None => {
                    first_with.insert(it, i);
                }
            }
        }
        for julia in self.portrait().julia() {
            let realized: HashSet<Itinerary> =
                julia.angles().iter().map(|a| self.itinerary_left(*a)).collect();
            let members: Vec<usize> = (0..universe.len())
                .filter(|i| realized.contains(&itineraries[*i]))
                .collect();
            for w in members.windows(2) {
                uf.union(w[0], w[1]);
            }
        }

        uf.groups()
            .into_iter()
            .map(|g| g.into_iter().map(|i| universe[i]).collect())
            .collect()
    }

    /// `θ ~_l θ'` closed within `universe` (both angles are added to it).
    pub fn equiv_l(&self, theta: Angle, other: Angle, universe: &[Angle]) -> bool {
        if theta == other {
            return true;
        }
        let mut u = universe.to_vec();
        u.push(theta);
        u.push(other);
        self.l_classes(&u)
            .iter()
            .any(|class| class.contains(&theta) && class.contains(&other))
    }

    /// `λ ~_γ γ`: the orbits of λ and γ eventually coincide, and until they do
    /// the left address of `m_d^k(λ)` equals the right address of `m_d^k(γ)`.
    pub fn sim_gamma(&self, lambda: Angle, gamma: Angle) -> Result<bool, Error> {
        let d = self.degree();
        if !is_periodic(gamma, d) || !self.portrait().fatou_orbit().contains(&gamma) {
            return Err(Error::NotPeriodicFatou(gamma));
        }
        let mut seen = HashSet::new();
        let (mut x, mut g) = (lambda, gamma);
        loop {
            if x == g {
                return Ok(true);
            }
            if self.address_left(x) != self.address_right(g) || !seen.insert((x, g)) {
                return Ok(false);
            }
            x = x.md(d);
            g = g.md(d);
        }
    }
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

    #[test]
    fn landing_relation() {
        let sys = levy();
        let u = [Angle::ZERO, a(1, 12), a(1, 4), a(7, 12), a(3, 4)];
        assert!(sys.equiv_l(a(1, 4), a(3, 4), &u));
        assert!(!sys.equiv_l(Angle::ZERO, a(1, 4), &u));
        assert!(sys.equiv_l(a(7, 12), a(7, 12), &u));
    }

    #[test]
    fn julia_sets_glue_itineraries() {
        // {1/6, 1/2} is a Julia set of degree 2: its members get identified
        let sys = AddressSystem::new(
            CriticalPortrait::new(vec![], vec![vec![a(1, 6), a(2, 3)]]).unwrap(),
        );
        assert_ne!(sys.itinerary_left(a(1, 6)), sys.itinerary_left(a(2, 3)));
        assert!(sys.equiv_l(a(1, 6), a(2, 3), &[]));
    }

    #[test]
    fn special_relation() {
        let sys = levy();
        assert!(sys.sim_gamma(a(13, 36), a(1, 4)).unwrap());
        assert!(sys.sim_gamma(a(31, 36), a(3, 4)).unwrap());
        assert!(sys.sim_gamma(a(1, 4), a(1, 4)).unwrap());
        assert!(!sys.sim_gamma(a(13, 36), a(3, 4)).unwrap());
        assert!(!sys.sim_gamma(a(31, 36), a(1, 4)).unwrap());
        assert_eq!(sys.sim_gamma(a(1, 2), a(7, 12)), Err(Error::NotPeriodicFatou(a(7, 12))));
        assert_eq!(sys.sim_gamma(a(1, 2), a(1, 2)), Err(Error::NotPeriodicFatou(a(1, 2))));
    }
}
