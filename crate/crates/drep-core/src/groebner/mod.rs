//! Exact Groebner-basis engine over the rationals (with a fraction-free
//! integer core and an optional prime-field fast path) for ideals and
//! submodules of free modules over a polynomial ring, plus syzygies, graded
//! module presentations, Hilbert functions, and minimal-generator counts.

mod basis;
mod modules;
mod poly;
mod term;

pub use basis::{groebner_basis, is_member, normal_form};
pub use modules::{
    syzygies, FreeModuleMap, GradingError, MinimalGenerators, ModulePresentation,
};
pub use poly::{mpoly_string, Coeff, Fp, MPoly};
pub use term::{for_each_monomial, ModTerm, Monomial};

/// The ambient polynomial ring: named variables, all of internal weight 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
}

impl PolyRing {
    pub fn new(names: Vec<String>) -> PolyRing {
        debug_assert!(
            names.iter().enumerate().all(|(i, n)| !names[..i].contains(n)),
            "variable names must be unique"
        );
        PolyRing { names }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }
}
