//! Exact solutions of the untwisting equations.
//!
//! Twists are measured in turns and never reduced mod 1.

use num_traits::{One, Zero};

use crate::angle::Rational;
use crate::error::Error;

/// A solved cyclic system `x_i = x_{i+1}/d_i + y_i` (indices mod n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSystem {
    pub degrees: Vec<u32>,
    pub differences: Vec<Rational>,
    pub solution: Vec<Rational>,
    /// `D = d_0 ⋯ d_{n-1}`.
    pub total_degree: i64,
}

impl TwistSystem {
    /// `x_i - x_{i+1}/d_i - y_i` for every i.
    pub fn residuals(&self) -> Vec<Rational> {
        let n = self.solution.len();
        (0..n)
            .map(|i| {
                let d = Rational::from_integer(self.degrees[i] as i64);
                self.solution[i] - self.solution[(i + 1) % n] / d - self.differences[i]
            })
            .collect()
    }

    /// Every `(D-1)·x_i` is an integer.
    pub fn on_lattice(&self) -> bool {
        let m = Rational::from_integer(self.total_degree - 1);
        self.solution.iter().all(|x| (x * m).is_integer())
    }
}

/// The solution of `t - t/d = difference`, namely `d·difference/(d-1)`.
pub fn solve_external_twist(d: u32, difference: Rational) -> Result<Rational, Error> {
    if d < 2 {
        return Err(Error::LocalDegree(d));
    }
    let d = Rational::from_integer(d as i64);
    Ok(d * difference / (d - Rational::one()))
}

/// Solves the cyclic system in closed form, then checks it exactly.
pub fn solve_cycle_twists(degrees: &[u32], differences: &[Rational]) -> Result<TwistSystem, Error> {
    if degrees.is_empty() || degrees.len() != differences.len() {
        return Err(Error::TwistShape {
            degrees: degrees.len(),
            differences: differences.len(),
        });
    }
    if let Some(&d) = degrees.iter().find(|d| **d < 2) {
        return Err(Error::LocalDegree(d));
    }
    let n = degrees.len();
    let total: i64 = degrees.iter().map(|d| *d as i64).product();
    let big_d = Rational::from_integer(total);

    let mut sum = Rational::zero();
    let mut prefix = Rational::one();
    for i in 0..n {
        sum += differences[i] / prefix;
        prefix *= Rational::from_integer(degrees[i] as i64);
    }
    let mut solution = Vec::with_capacity(n);
    solution.push(big_d / (big_d - Rational::one()) * sum);
    for i in 0..n - 1 {
        let next = Rational::from_integer(degrees[i] as i64) * (solution[i] - differences[i]);
        solution.push(next);
    }

    let system = TwistSystem {
        degrees: degrees.to_vec(),
        differences: differences.to_vec(),
        solution,
        total_degree: total,
    };
    assert!(
        system.residuals().iter().all(Zero::is_zero),
        "closed form failed to solve the twist system"
    );
    Ok(system)
}

/// For a strictly preperiodic Fatou vertex the equation reduces to `x = y`.
pub fn solve_preperiodic_twist(y: Rational) -> Rational {
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn external_examples() {
        assert_eq!(solve_external_twist(3, r(1, 1)).unwrap(), r(3, 2));
        assert_eq!(solve_external_twist(3, r(1, 3)).unwrap(), r(1, 2));
        assert_eq!(solve_external_twist(5, r(0, 1)).unwrap(), r(0, 1));
        assert_eq!(solve_external_twist(1, r(1, 1)), Err(Error::LocalDegree(1)));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(solve_cycle_twists(&[3], &[r(1, 1)]).unwrap().solution, [r(3, 2)]);
        assert_eq!(
            solve_cycle_twists(&[2, 2], &[r(1, 2), r(1, 2)]).unwrap().solution,
            [r(1, 1), r(1, 1)]
        );
        let zero = solve_cycle_twists(&[2, 3, 4], &[r(0, 1); 3]).unwrap();
        assert!(zero.solution.iter().all(Zero::is_zero));
        assert_eq!(zero.total_degree, 24);
    }

    #[test]
    fn shape_errors() {
        assert_eq!(
            solve_cycle_twists(&[], &[]),
            Err(Error::TwistShape {
                degrees: 0,
                differences: 0
            })
        );
        assert!(solve_cycle_twists(&[2, 2], &[r(1, 2)]).is_err());
        assert_eq!(solve_cycle_twists(&[1], &[r(1, 2)]), Err(Error::LocalDegree(1)));
    }

    #[test]
    fn preperiodic_is_identity() {
        for y in [r(1, 2), r(0, 1), r(-2, 3)] {
            assert_eq!(solve_preperiodic_twist(y), y);
        }
    }
}
