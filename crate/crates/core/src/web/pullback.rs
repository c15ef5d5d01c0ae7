use std::fmt;

use num_traits::{One, Zero};

use crate::angle::{Angle, Arc, Rational};
use crate::portrait::AddressSystem;

/// A finite union of half-open intervals `(lo, hi]` inside `(0, 1]`, sorted
/// and with touching intervals merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSet {
    intervals: Vec<(Rational, Rational)>,
}

impl ArcSet {
    pub fn full() -> ArcSet {
        ArcSet {
            intervals: vec![(Rational::zero(), Rational::one())],
        }
    }

    fn from_intervals(mut v: Vec<(Rational, Rational)>) -> ArcSet {
        v.retain(|(lo, hi)| lo < hi);
        v.sort();
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(v.len());
        for (lo, hi) in v {
            match out.last_mut() {
                Some(last) if last.1 >= lo => last.1 = last.1.max(hi),
                _ => out.push((lo, hi)),
            }
        }
        ArcSet { intervals: out }
    }

    /// The intervals as stored, without joining across 0.
    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn total_length(&self) -> Rational {
        self.intervals.iter().map(|(lo, hi)| hi - lo).sum()
    }

    /// Connected components on the circle: an interval ending at 1 joins one
    /// starting at 0.
    pub fn components(&self) -> Vec<(Rational, Rational)> {
        let mut v = self.intervals.clone();
        if v.len() >= 2 && v[0].0.is_zero() && v[v.len() - 1].1.is_one() {
            let first = v.remove(0);
            let last = v.last_mut().expect("two or more intervals");
            last.1 = first.1 + Rational::one();
        }
        v
    }

    pub fn max_component_length(&self) -> Rational {
        self.components()
            .iter()
            .map(|(lo, hi)| hi - lo)
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn contains(&self, x: Angle) -> bool {
        let x = if x.value().is_zero() {
            Rational::one()
        } else {
            x.value()
        };
        self.intervals.iter().any(|(lo, hi)| *lo < x && x <= *hi)
    }

    /// Points of `piece`'s arcs whose image under `m_d` lies in `self`.
    fn pull_back_into(&self, sys: &AddressSystem, piece_arcs: &[Arc]) -> ArcSet {
        let d = Rational::from_integer(sys.degree() as i64);
        let mut out = Vec::new();
        for arc in piece_arcs {
            let a = arc.start().value();
            let b = a + arc.length();
            // image of (a, b] is (d·a, d·b] on the real line
            let (ia, ib) = (a * d, b * d);
            let first = ia.floor().to_integer();
            let last = ib.ceil().to_integer();
            for j in first..=last {
                let shift = Rational::from_integer(j);
                for (lo, hi) in &self.intervals {
                    let lo = (lo + shift).max(ia);
                    let hi = (hi + shift).min(ib);
                    if lo < hi {
                        out.extend(wrap_unit(lo / d, hi / d));
                    }
                }
            }
        }
        ArcSet::from_intervals(out)
    }
}

/// Splits `(lo, hi]`, with `0 <= lo < hi <= 2`, into pieces inside `(0, 1]`.
fn wrap_unit(lo: Rational, hi: Rational) -> Vec<(Rational, Rational)> {
    let one = Rational::one();
    if hi <= one {
        vec![(lo, hi)]
    } else if lo >= one {
        vec![(lo - one, hi - one)]
    } else {
        vec![(lo, one), (Rational::zero(), hi - one)]
    }
}

fn fmt_point(x: &Rational) -> String {
    let one = Rational::one();
    let y = if *x > one { x - one } else { *x };
    if y.is_one() || y.is_zero() {
        "0".to_string()
    } else {
        Angle::from_rational(y).to_string()
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "{{}}");
        }
        if self.intervals == [(Rational::zero(), Rational::one())] {
            return write!(f, "R/Z");
        }
        let inner: Vec<String> = self
            .components()
            .iter()
            .map(|(lo, hi)| format!("({},{}]", fmt_point(lo), fmt_point(hi)))
            .collect();
        write!(f, "{}", inner.join(" ∪ "))
    }
}

/// `X_n`: the angles whose first `n` left addresses agree with those of θ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackReport {
    pub theta: Angle,
    pub n: u32,
    pub set: ArcSet,
    pub total_length: Rational,
    pub max_arc_length: Rational,
    /// `d^{-n}`.
    pub bound: Rational,
}

impl fmt::Display for PullbackReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theta = {}", self.theta)?;
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "arcs = {}", self.set)?;
        writeln!(f, "total length = {}", self.total_length)?;
        writeln!(f, "max arc length = {}", self.max_arc_length)?;
        writeln!(f, "bound d^-n = {}", self.bound)
    }
}

/// Builds `X_n` from the inside out: the full circle around `m_d^n θ`, pulled
/// back through the pieces `A^-(m_d^k θ)` for `k = n-1, …, 0`.
pub fn pullback_arcs(sys: &AddressSystem, theta: Angle, n: u32) -> PullbackReport {
    let d = sys.degree();
    let mut orbit = Vec::with_capacity(n as usize);
    let mut x = theta;
    for _ in 0..n {
        orbit.push(x);
        x = x.md(d);
    }
    let mut set = ArcSet::full();
    for y in orbit.iter().rev() {
        let piece = sys.piece(sys.address_left(*y)).expect("address is a piece");
        set = set.pull_back_into(sys, piece.arcs());
    }
    let base = Rational::from_integer(d as i64);
    let bound = Rational::one() / num_traits::pow(base, n as usize);
    PullbackReport {
        theta,
        n,
        total_length: set.total_length(),
        max_arc_length: set.max_component_length(),
        set,
        bound,
    }
}
