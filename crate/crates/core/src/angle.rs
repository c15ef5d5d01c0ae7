//! Exact arithmetic on the circle R/Z.
//!
//! Angles are reduced rationals in `[0, 1)`. Arcs are half-open `(start, end]`
//! everywhere in the crate, wrapping through 0 when `end <= start`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::Error;

/// Exact rational number used for lengths, twists and interval endpoints.
pub type Rational = num_rational::Ratio<i64>;

/// An exact point of R/Z, the argument of an external ray.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Rational);

impl Angle {
    pub const ZERO: Angle = Angle(Rational::new_raw(0, 1));

    /// Reduced representative of `(numerator mod denominator) / denominator`.
    pub fn new(numerator: i64, denominator: i64) -> Result<Angle, Error> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Angle::from_rational(Rational::new(numerator, denominator)))
    }

    /// Reduces an arbitrary rational mod 1.
    pub fn from_rational(r: Rational) -> Angle {
        let f = r - r.floor();
        Angle(f)
    }

    pub fn numerator(self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(self) -> i64 {
        *self.0.denom()
    }

    pub fn value(self) -> Rational {
        self.0
    }

    /// The map `m_d`: multiplication by `d` mod 1.
    pub fn md(self, d: u32) -> Angle {
        Angle::from_rational(self.0 * Rational::from_integer(d as i64))
    }

    /// All `d` preimages under `m_d`, in increasing order.
    pub fn preimages(self, d: u32) -> Vec<Angle> {
        let d = d as i64;
        (0..d)
            .map(|j| Angle((self.0 + Rational::from_integer(j)) / Rational::from_integer(d)))
            .collect()
    }

    /// Counterclockwise distance from `self` to `other`, in `[0, 1)`.
    pub fn distance_to(self, other: Angle) -> Rational {
        let diff = other.0 - self.0;
        if diff < Rational::zero() {
            diff + Rational::one()
        } else {
            diff
        }
    }

    pub fn to_f64(self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the canonical `"p/q"` form (reduced, `0 <= p < q`); `"0"` is 0/1.
impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Angle, Error> {
        let bad = || Error::ParseAngle(s.to_string());
        let t = s.trim();
        if t == "0" {
            return Ok(Angle::ZERO);
        }
        let (p, q) = t.split_once('/').ok_or_else(bad)?;
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q <= 0 || p < 0 || p >= q {
            return Err(bad());
        }
        let a = Angle::new(p, q)?;
        if a.numerator() != p || a.denominator() != q {
            return Err(bad());
        }
        Ok(a)
    }
}

/// Forward orbit of an angle split into its strictly preperiodic part and cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub preperiod: Vec<Angle>,
    pub cycle: Vec<Angle>,
}

impl OrbitDecomposition {
    pub fn is_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    pub fn period(&self) -> usize {
        self.cycle.len()
    }

    /// Every angle of the orbit, preperiod first.
    pub fn points(&self) -> impl Iterator<Item = Angle> + '_ {
        self.preperiod.iter().chain(self.cycle.iter()).copied()
    }
}

/// Iterates `m_d` until the first repetition.
pub fn orbit(a: Angle, d: u32) -> OrbitDecomposition {
    let mut seen: HashMap<Angle, usize> = HashMap::new();
    let mut points = Vec::new();
    let mut x = a;
    while let std::collections::hash_map::Entry::Vacant(e) = seen.entry(x) {
        e.insert(points.len());
        points.push(x);
        x = x.md(d);
    }
    let start = seen[&x];
    let cycle = points.split_off(start);
    OrbitDecomposition {
        preperiod: points,
        cycle,
    }
}

pub fn is_periodic(a: Angle, d: u32) -> bool {
    orbit(a, d).is_periodic()
}

/// Union of the forward orbits of `angles`, sorted.
pub fn orbit_set(angles: impl IntoIterator<Item = Angle>, d: u32) -> Vec<Angle> {
    let mut out: Vec<Angle> = angles
        .into_iter()
        .flat_map(|a| orbit(a, d).points().collect::<Vec<_>>())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// True iff going counterclockwise from `a` one meets `b` before `c`.
pub fn cyclically_ordered(a: Angle, b: Angle, c: Angle) -> Result<bool, Error> {
    if a == b || b == c || a == c {
        return Err(Error::NotDistinct);
    }
    Ok(a.distance_to(b) < a.distance_to(c))
}

/// Half-open arc `(start, end]`, wrapping through 0 when `end <= start`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Arc {
    start: Angle,
    end: Angle,
}

impl Arc {
    pub fn new(start: Angle, end: Angle) -> Result<Arc, Error> {
        if start == end {
            return Err(Error::DegenerateArc(start));
        }
        Ok(Arc { start, end })
    }

    pub fn start(&self) -> Angle {
        self.start
    }

    pub fn end(&self) -> Angle {
        self.end
    }

    pub fn length(&self) -> Rational {
        self.start.distance_to(self.end)
    }

    pub fn wraps(&self) -> bool {
        self.end <= self.start
    }

    /// Membership under the `(start, end]` convention.
    pub fn contains(&self, x: Angle) -> bool {
        let off = self.start.distance_to(x);
        !off.is_zero() && off <= self.length()
    }

    /// Membership under the mirrored `[start, end)` convention.
    pub fn contains_right(&self, x: Angle) -> bool {
        self.start.distance_to(x) < self.length()
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}]", self.start, self.end)
    }
}

/// Sorted, deduplicated copy of `angles`.
pub fn sorted_set(angles: &[Angle]) -> Vec<Angle> {
    let mut v = angles.to_vec();
    v.sort();
    v.dedup();
    v
}

/// `{a,b,c}` in ascending order.
pub fn format_set(angles: &[Angle]) -> String {
    let inner: Vec<String> = angles.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// The arcs `(s_j, s_{j+1}]` between cyclically consecutive points of a sorted set.
fn gaps(sorted: &[Angle]) -> Vec<Arc> {
    let n = sorted.len();
    (0..n)
        .map(|j| Arc {
            start: sorted[j],
            end: sorted[(j + 1) % n],
        })
        .collect()
}

/// Index of the gap of `sorted` (|sorted| >= 2) containing `x` under `(a,b]`.
pub(crate) fn gap_index(sorted: &[Angle], x: Angle) -> usize {
    // first element >= x closes the gap that contains x
    let n = sorted.len();
    let k = sorted.partition_point(|s| *s < x);
    (k + n - 1) % n
}

/// `T` lies in the closure of one component of `R/Z - S`.
///
/// The sets must be disjoint; shared points are only meaningful for
/// [`weakly_unlinked_right`].
pub fn unlinked(s: &[Angle], t: &[Angle]) -> Result<bool, Error> {
    let s = sorted_set(s);
    let t = sorted_set(t);
    if s.is_empty() || t.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(x) = t.iter().find(|x| s.binary_search(x).is_ok()) {
        return Err(Error::SharedAngle(*x));
    }
    if s.len() == 1 {
        return Ok(true);
    }
    let first = gap_index(&s, t[0]);
    Ok(t.iter().all(|x| gap_index(&s, *x) == first))
}

/// There are consecutive `g1, g2` in `S` with `T ⊆ (g1, g2]`.
pub fn weakly_unlinked_right(s: &[Angle], t: &[Angle]) -> Result<bool, Error> {
    let s = sorted_set(s);
    if s.len() < 2 {
        return Err(Error::TooFewAngles);
    }
    if t.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(gaps(&s)
        .iter()
        .any(|arc| t.iter().all(|x| arc.contains(*x))))
}
