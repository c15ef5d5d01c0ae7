#![allow(dead_code)]

use critport_core::generate::{random_portrait, PortraitShape};
use critport_core::{AddressSystem, Angle, CriticalPortrait};
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn a(p: i64, q: i64) -> Angle {
    Angle::new(p, q).unwrap()
}

pub fn levy_system() -> AddressSystem {
    AddressSystem::new(
        CriticalPortrait::new(vec![vec![a(1, 4), a(7, 12)], vec![a(3, 4), a(1, 12)]], vec![])
            .unwrap(),
    )
}

pub fn cube_system() -> AddressSystem {
    AddressSystem::new(CriticalPortrait::new(vec![vec![Angle::ZERO, a(1, 3), a(2, 3)]], vec![]).unwrap())
}

pub fn random_systems(seed: u64, count: usize) -> Vec<AddressSystem> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| AddressSystem::new(random_portrait(&mut rng, PortraitShape::default())))
        .collect()
}

/// Every reduced angle with denominator at most `max_q`.
pub fn angles_up_to(max_q: i64) -> Vec<Angle> {
    let mut v = vec![Angle::ZERO];
    for q in 2..=max_q {
        for p in 1..q {
            if gcd(p, q) == 1 {
                v.push(a(p, q));
            }
        }
    }
    v
}

fn gcd(mut x: i64, mut y: i64) -> i64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

fn point(t: f64) -> (f64, f64) {
    let t = t * std::f64::consts::TAU;
    (t.cos(), t.sin())
}

fn orient(p: (f64, f64), q: (f64, f64), r: (f64, f64)) -> f64 {
    (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
}

/// Planar test: the straight chords `ab` and `cd` of the unit circle cross
/// at an interior point. Endpoints must be pairwise distinct.
pub fn chords_cross(a: f64, b: f64, c: f64, d: f64) -> bool {
    let (pa, pb, pc, pd) = (point(a), point(b), point(c), point(d));
    let o1 = orient(pa, pb, pc);
    let o2 = orient(pa, pb, pd);
    let o3 = orient(pc, pd, pa);
    let o4 = orient(pc, pd, pb);
    o1 * o2 < 0.0 && o3 * o4 < 0.0
}

/// Two finite sets are unlinked iff no chord of one crosses a chord of the other.
pub fn unlinked_by_chords(s: &[Angle], t: &[Angle]) -> bool {
    for (i, x) in s.iter().enumerate() {
        for y in &s[i + 1..] {
            for (j, u) in t.iter().enumerate() {
                for v in &t[j + 1..] {
                    if chords_cross(x.to_f64(), y.to_f64(), u.to_f64(), v.to_f64()) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Points on the circle lie in the same piece iff the segment joining them
/// crosses no edge of any critical polygon. Angles must avoid cut points.
pub fn same_region(sys: &AddressSystem, x: f64, y: f64) -> bool {
    for set in sys.portrait().sets() {
        let v: Vec<f64> = set.angles().iter().map(|a| a.to_f64()).collect();
        let n = v.len();
        for i in 0..n {
            let (s, e) = (v[i], v[(i + 1) % n]);
            if n == 2 && i == 1 {
                break;
            }
            if chords_cross(x, y, s, e) {
                return false;
            }
        }
    }
    true
}
