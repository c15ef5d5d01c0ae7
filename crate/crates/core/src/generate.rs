//! Random admissible critical portraits, for property suites and demos.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::angle::Angle;
use crate::portrait::CriticalPortrait;

#[derive(Clone, Copy, Debug)]
pub struct PortraitShape {
    pub max_degree: u32,
    /// Upper bound on the denominators of the portrait angles.
    pub max_denominator: i64,
    /// Probability that a set is Fatou rather than Julia.
    pub fatou_bias: f64,
}

impl Default for PortraitShape {
    fn default() -> Self {
        PortraitShape {
            max_degree: 6,
            max_denominator: 120,
            fatou_bias: 0.6,
        }
    }
}

/// One attempt: picks a degree, then sets of preimages of random points until
/// the degree is used up. Returns `None` when the draw is not admissible.
pub fn try_random_portrait<R: Rng + ?Sized>(rng: &mut R, shape: PortraitShape) -> Option<CriticalPortrait> {
    let d = rng.gen_range(2..=shape.max_degree.max(2));
    let max_q = (shape.max_denominator / d as i64).max(1);
    let mut remaining = d - 1;
    let mut fatou = Vec::new();
    let mut julia = Vec::new();
    while remaining > 0 {
        let size = rng.gen_range(2..=remaining + 1) as usize;
        let q = rng.gen_range(1..=max_q);
        let v = Angle::new(rng.gen_range(0..q), q).ok()?;
        let mut pre = v.preimages(d);
        pre.shuffle(rng);
        pre.truncate(size);
        pre.sort();
        if rng.gen_bool(shape.fatou_bias) {
            fatou.push(pre);
        } else {
            julia.push(pre);
        }
        remaining -= size as u32 - 1;
    }
    CriticalPortrait::new(fatou, julia).ok()
}

/// Draws until an admissible portrait comes out.
pub fn random_portrait<R: Rng + ?Sized>(rng: &mut R, shape: PortraitShape) -> CriticalPortrait {
    loop {
        if let Some(p) = try_random_portrait(rng, shape) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn draws_respect_the_shape() {
        let mut rng = StdRng::seed_from_u64(7);
        let shape = PortraitShape::default();
        for _ in 0..40 {
            let p = random_portrait(&mut rng, shape);
            assert!(p.degree() <= 6);
            assert!(p.cut_points().iter().all(|a| a.denominator() <= 120));
        }
    }
}
