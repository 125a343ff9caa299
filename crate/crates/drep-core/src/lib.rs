//! Exact computation of the cohomology of matrix representation schemes.
//!
//! Given a finite free differential graded algebra resolving an ordinary
//! algebra, [`expand`] produces the commutative DG algebra whose spectrum is
//! the scheme of `n`-dimensional matrix representations.  [`cohomology`]
//! computes its cohomology degree by degree over exact rationals using the
//! Groebner machinery in [`groebner`], and [`tangent`] computes tangent
//! spaces at a chosen representation together with an independent
//! Hochschild-style cross-check.

pub mod cohomology;
pub mod expand;
pub mod gcalg;
pub mod groebner;
pub mod linalg;
pub mod ncalg;
pub mod tangent;

pub use num::BigInt;
pub use num::BigRational as Rat;

/// Shorthand for a rational from an integer, used pervasively in tests.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational n/d.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
pub(crate) mod fixtures {
    //! Small resolutions shared by the unit tests of several modules.

    use std::sync::Arc;

    use crate::ncalg::{GenTable, NCPoly, NCWord, Resolution};
    use crate::{rat, Rat};

    pub fn word(table: &Arc<GenTable>, names: &[&str], c: Rat) -> NCPoly {
        let mut p = NCPoly::zero(table);
        let factors: Vec<_> = names.iter().map(|n| table.lookup(n).unwrap()).collect();
        p.add_term(NCWord::new(table, factors), c);
        p
    }

    pub fn commutator(table: &Arc<GenTable>, a: &str, b: &str) -> NCPoly {
        word(table, &[a, b], rat(1)).try_sub(&word(table, &[b, a], rat(1))).unwrap()
    }

    pub fn resolution(table: &Arc<GenTable>, diffs: Vec<(&str, NCPoly)>) -> Resolution {
        let diffs = diffs
            .into_iter()
            .map(|(name, p)| (table.lookup(name).unwrap(), p))
            .collect();
        Resolution::new(table.clone(), diffs).unwrap()
    }

    /// k[x,y]: one odd generator killing the commutator.
    pub fn kxy() -> Resolution {
        let table = GenTable::new(vec![("x", 0), ("y", 0), ("t", -1)]).unwrap();
        let dt = commutator(&table, "x", "y");
        resolution(&table, vec![("t", dt)])
    }

    /// The same algebra with a contractible pair (u, v) adjoined.
    pub fn kxy_stabilized() -> Resolution {
        let table =
            GenTable::new(vec![("x", 0), ("y", 0), ("u", 0), ("t", -1), ("v", -1)]).unwrap();
        let dt = commutator(&table, "x", "y");
        let dv = word(&table, &["u"], rat(1));
        resolution(&table, vec![("t", dt), ("v", dv)])
    }

    /// k[x,y,z]: three odd generators for the commutators and one even
    /// degree -2 generator tying them together.
    pub fn kxyz() -> Resolution {
        let table = GenTable::new(vec![
            ("x", 0),
            ("y", 0),
            ("z", 0),
            ("X", -1),
            ("Y", -1),
            ("Z", -1),
            ("t", -2),
        ])
        .unwrap();
        let dt = commutator(&table, "x", "X")
            .try_add(&commutator(&table, "y", "Y"))
            .unwrap()
            .try_add(&commutator(&table, "z", "Z"))
            .unwrap();
        resolution(
            &table,
            vec![
                ("X", commutator(&table, "y", "z")),
                ("Y", commutator(&table, "z", "x")),
                ("Z", commutator(&table, "x", "y")),
                ("t", dt),
            ],
        )
    }

    /// The enveloping algebra of sl2: like kxyz but with linear terms, so the
    /// differential is not homogeneous for any variable weights.
    pub fn usl2() -> Resolution {
        let table = GenTable::new(vec![
            ("x", 0),
            ("y", 0),
            ("z", 0),
            ("X", -1),
            ("Y", -1),
            ("Z", -1),
            ("t", -2),
        ])
        .unwrap();
        let dx_ = commutator(&table, "y", "z").try_add(&word(&table, &["x"], rat(1))).unwrap();
        let dy_ = commutator(&table, "z", "x").try_add(&word(&table, &["y"], rat(1))).unwrap();
        let dz_ = commutator(&table, "x", "y").try_add(&word(&table, &["z"], rat(1))).unwrap();
        let dt = commutator(&table, "x", "X")
            .try_add(&commutator(&table, "y", "Y"))
            .unwrap()
            .try_add(&commutator(&table, "z", "Z"))
            .unwrap();
        resolution(&table, vec![("X", dx_), ("Y", dy_), ("Z", dz_), ("t", dt)])
    }

    /// The free algebra on two generators: nothing to resolve.
    pub fn free2() -> Resolution {
        let table = GenTable::new(vec![("x", 0), ("y", 0)]).unwrap();
        resolution(&table, vec![])
    }
}
