//! Generation and checking of special arguments Γ.

use crate::angle::{orbit, sorted_set, Angle};
use crate::error::Error;
use crate::portrait::address::AddressSystem;

impl AddressSystem {
    /// One special argument per periodic Fatou angle γ of period `p`: γ pulled
    /// back through `A^+(m_d^{p-1} γ), …, A^+(γ)`.
    ///
    /// The intermediate pullbacks are kept too (unless already in O(F∪)) so
    /// that `m_d(Γ) ⊆ Γ ∪ O(F∪)`.
    pub fn gen_special_arguments(&self) -> Vec<Angle> {
        let d = self.degree();
        let fatou_orbit = self.portrait().fatou_orbit();
        let mut gamma = Vec::new();
        for g in self.portrait().fatou_union() {
            let o = orbit(g, d);
            if !o.is_periodic() {
                continue;
            }
            let mut x = g;
            for k in (0..o.period()).rev() {
                x = self
                    .inverse_branch(self.address_right(o.cycle[k]), x)
                    .expect("addresses come from this system");
                if k == 0 || fatou_orbit.binary_search(&x).is_err() {
                    gamma.push(x);
                }
            }
        }
        sorted_set(&gamma)
    }

    /// Checks `m_d(Γ) ⊆ Γ ∪ O(F∪)`.
    pub fn check_special_arguments(&self, gamma: &[Angle]) -> Result<(), Error> {
        let fatou_orbit = self.portrait().fatou_orbit();
        for &g in gamma {
            let image = g.md(self.degree());
            if !gamma.contains(&image) && fatou_orbit.binary_search(&image).is_err() {
                return Err(Error::GammaNotInvariant { angle: g, image });
            }
        }
        Ok(())
    }
}
