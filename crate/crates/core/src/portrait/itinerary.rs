//! Symbol sequences `S^-(θ)` and `S^+(θ)`: the addresses along the orbit of θ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive};

use crate::angle::{orbit, Angle};
use crate::error::Error;
use crate::portrait::address::{AddressSystem, PieceId};

/// An eventually periodic sequence of piece ids in canonical form:
/// the cycle is primitive and the preperiod is as short as possible.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Itinerary {
    preperiod: Vec<PieceId>,
    cycle: Vec<PieceId>,
}

impl Itinerary {
    /// Canonicalizes `preperiod · cycle^∞`.
    pub fn new(mut preperiod: Vec<PieceId>, mut cycle: Vec<PieceId>) -> Result<Itinerary, Error> {
        if cycle.is_empty() {
            return Err(Error::EmptyCycle);
        }
        let n = cycle.len();
        if let Some(p) = (1..=n).find(|p| n.is_multiple_of(*p) && (0..n).all(|i| cycle[i] == cycle[i % p])) {
            cycle.truncate(p);
        }
        while let Some(&last) = preperiod.last() {
            if last != *cycle.last().expect("cycle is non-empty") {
                break;
            }
            preperiod.pop();
            cycle.rotate_right(1);
        }
        Ok(Itinerary { preperiod, cycle })
    }

    pub fn preperiod(&self) -> &[PieceId] {
        &self.preperiod
    }

    pub fn cycle(&self) -> &[PieceId] {
        &self.cycle
    }

    pub fn is_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    /// Symbol at position `k`.
    pub fn symbol(&self, k: usize) -> PieceId {
        match self.preperiod.get(k) {
            Some(s) => *s,
            None => self.cycle[(k - self.preperiod.len()) % self.cycle.len()],
        }
    }

    /// The sequence with its first symbol dropped.
    pub fn shift(&self) -> Itinerary {
        if self.preperiod.is_empty() {
            let mut cycle = self.cycle.clone();
            cycle.rotate_left(1);
            Itinerary {
                preperiod: vec![],
                cycle,
            }
        } else {
            Itinerary {
                preperiod: self.preperiod[1..].to_vec(),
                cycle: self.cycle.clone(),
            }
        }
    }
}

impl fmt::Display for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.preperiod {
            write!(f, "{s} ")?;
        }
        let cycle: Vec<String> = self.cycle.iter().map(|s| s.to_string()).collect();
        write!(f, "({})^∞", cycle.join(" "))
    }
}

fn big(a: Angle) -> BigRational {
    BigRational::new(BigInt::from(a.numerator()), BigInt::from(a.denominator()))
}

fn small(x: &BigRational) -> Option<Angle> {
    let p = x.numer().to_i64()?;
    let q = x.denom().to_i64()?;
    Angle::new(p, q).ok()
}

impl AddressSystem {
    fn itinerary_with(&self, theta: Angle, address: impl Fn(Angle) -> PieceId) -> Itinerary {
        let o = orbit(theta, self.degree());
        let pre = o.preperiod.iter().map(|x| address(*x)).collect();
        let cyc = o.cycle.iter().map(|x| address(*x)).collect();
        Itinerary::new(pre, cyc).expect("orbit cycles are non-empty")
    }

    /// `S^-(θ)`.
    pub fn itinerary_left(&self, theta: Angle) -> Itinerary {
        self.itinerary_with(theta, |x| self.address_left(x))
    }

    /// `S^+(θ)`.
    pub fn itinerary_right(&self, theta: Angle) -> Itinerary {
        self.itinerary_with(theta, |x| self.address_right(x))
    }

    /// All angles whose left itinerary equals `it`.
    ///
    /// Periodic angles with a cycle of `p` symbols have period `p·r`. The
    /// default search bound on `r` covers the boundary arcs, the periods of
    /// periodic portrait angles, and `log_d` of the largest portrait
    /// denominator (orbits confined to one piece rotate with a period of
    /// about that size). Use [`decode_itinerary_with`](Self::decode_itinerary_with)
    /// for longer periods.
    pub fn decode_itinerary(&self, it: &Itinerary) -> Vec<Angle> {
        self.decode_itinerary_with(it, self.default_multiplier(it.cycle.len()))
    }

    fn default_multiplier(&self, p: usize) -> usize {
        let d = self.degree() as i64;
        let cuts = self.portrait().cut_points();
        let longest = cuts
            .iter()
            .map(|c| orbit(*c, self.degree()))
            .filter(|o| o.is_periodic())
            .map(|o| o.period().div_ceil(p))
            .max()
            .unwrap_or(0);
        let max_q = cuts.iter().map(|c| c.denominator()).max().unwrap_or(1);
        let mut log = 0usize;
        let mut power = 1i64;
        while power < max_q {
            power *= d;
            log += 1;
        }
        self.arc_count().max(2).max(longest).max(log.div_ceil(p) + 1)
    }

    /// [`decode_itinerary`](Self::decode_itinerary) with an explicit bound on
    /// the period multiplier `r`.
    pub fn decode_itinerary_with(&self, it: &Itinerary, max_multiplier: usize) -> Vec<Angle> {
        let periodic = Itinerary {
            preperiod: vec![],
            cycle: it.cycle.clone(),
        };
        let mut cycle_points = Vec::new();
        for r in 1..=max_multiplier {
            for x in self.periodic_candidates(&it.cycle, r) {
                if self.itinerary_left(x) == periodic && !cycle_points.contains(&x) {
                    cycle_points.push(x);
                }
            }
        }
        let mut out: Vec<Angle> = cycle_points
            .into_iter()
            .map(|mut x| {
                for piece in it.preperiod.iter().rev() {
                    x = self.inverse_branch(*piece, x).expect("piece ids come from this system");
                }
                x
            })
            .filter(|x| self.itinerary_left(*x) == *it)
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Fixed points of `g^r`, `g` being the composition of inverse branches
    /// along `cycle`. Every fixed point is `K / (D - 1)` with `D = d^{p r}`
    /// and `K` constant between consecutive branch jumps, so each jump interval
    /// contributes at most one candidate.
    fn periodic_candidates(&self, cycle: &[PieceId], r: usize) -> Vec<Angle> {
        let d = self.degree();
        let word: Vec<PieceId> = cycle.iter().copied().cycle().take(cycle.len() * r).collect();
        let len = word.len();

        // branch jumps of the composition lie on forward images of critical values
        let mut jumps = Vec::new();
        for v in self.critical_values() {
            let mut y = v;
            for _ in 0..len {
                jumps.push(y);
                y = y.md(d);
            }
        }
        jumps.sort();
        jumps.dedup();

        let modulus: BigInt = Pow::pow(BigInt::from(d), len);
        let modulus_minus_one = &modulus - BigInt::one();
        let mut out = jumps.clone();
        // jumps[0] == 0, so the intervals are (j_i, j_{i+1}) and (j_last, 1)
        for (i, start) in jumps.iter().enumerate() {
            let end = jumps.get(i + 1).map(|e| big(*e)).unwrap_or_else(BigRational::one);
            // the right limit at `start` selects the branch used on the interval
            let start = big(*start);
            let mut y = start.clone();
            for piece in word.iter().rev() {
                y = self.inverse_branch_right_big(*piece, &y);
            }
            let k = y * BigRational::from_integer(modulus.clone()) - &start;
            if !k.is_integer() {
                continue;
            }
            let x = BigRational::new(k.to_integer(), modulus_minus_one.clone());
            if x > start && x < end {
                if let Some(a) = small(&x) {
                    out.push(a);
                }
            }
        }
        out
    }

    fn inverse_branch_right_big(&self, piece: PieceId, x: &BigRational) -> BigRational {
        let d = self.degree() as i64;
        (0..d)
            .map(|j| (x + BigRational::from_integer(BigInt::from(j))) / BigRational::from_integer(BigInt::from(d)))
            .find(|y| {
                let piece_arcs = self.piece(piece).expect("valid piece").arcs();
                piece_arcs.iter().any(|arc| {
                    let s = big(arc.start());
                    let e = big(arc.end());
                    if arc.wraps() {
                        *y >= s || *y < e
                    } else {
                        *y >= s && *y < e
                    }
                })
            })
            .expect("m_d is bijective on every piece")
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
    fn canonical_form() {
        let p = |i| PieceId(i);
        let it = Itinerary::new(vec![p(0), p(1), p(2)], vec![p(1), p(2), p(1), p(2)]).unwrap();
        assert_eq!(it.preperiod(), &[p(0)]);
        assert_eq!(it.cycle(), &[p(1), p(2)]);
        assert_eq!(Itinerary::new(vec![], vec![]), Err(Error::EmptyCycle));
        assert_eq!(it.shift().shift().symbol(0), p(2));
    }

    #[test]
    fn left_itineraries_agree_on_the_two_cycle() {
        let sys = levy();
        let s = sys.itinerary_left(a(1, 4));
        assert_eq!(s, sys.itinerary_left(a(3, 4)));
        assert!(s.is_periodic());
        assert_eq!(s.cycle().len(), 1);
        assert_eq!(
            sys.piece(s.cycle()[0]).unwrap().to_string(),
            "(1/12,1/4] ∪ (7/12,3/4]"
        );
        assert_ne!(sys.itinerary_left(Angle::ZERO), s);
        // right itineraries separate them
        assert_ne!(sys.itinerary_right(a(1, 4)), sys.itinerary_right(a(3, 4)));
    }

    #[test]
    fn decode_examples() {
        let sys = levy();
        assert_eq!(sys.decode_itinerary(&sys.itinerary_left(a(1, 4))), vec![a(1, 4), a(3, 4)]);
        let p1 = sys.address_left(a(1, 2));
        let it = Itinerary::new(vec![], vec![p1]).unwrap();
        assert_eq!(sys.decode_itinerary(&it), vec![a(1, 2)]);
        // 11/36 -> 11/12 -> 3/4 shadows 13/36 -> 1/12 -> 1/4
        let it = sys.itinerary_left(a(13, 36));
        assert_eq!(sys.decode_itinerary(&it), vec![a(11, 36), a(13, 36)]);
    }
}
