//! S-linear maps between free modules, kernel (syzygy) computation by
//! elimination, and graded module presentations with Hilbert functions and
//! minimal-generator counts.

use super::basis::{groebner_basis, is_member};
use super::poly::MPoly;
use super::term::{for_each_monomial, ModTerm, Monomial};
use crate::linalg::QMatrix;
use crate::{BigInt, Rat};
use num::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradingError {
    #[error("relation {index} is not homogeneous for the declared generator degrees")]
    InhomogeneousRelation { index: usize },
    #[error("matrix column {col} is not homogeneous for the declared shifts")]
    InhomogeneousColumn { col: usize },
}

/// An S-linear map S^source -> S^target given by its columns (images of the
/// source basis vectors), with optional internal-degree shifts on both sides.
#[derive(Clone, Debug)]
pub struct FreeModuleMap {
    pub nvars: usize,
    pub target_rank: usize,
    pub columns: Vec<MPoly<Rat>>,
    pub source_shifts: Option<Vec<i64>>,
    pub target_shifts: Option<Vec<i64>>,
}

impl FreeModuleMap {
    pub fn new(nvars: usize, target_rank: usize, columns: Vec<MPoly<Rat>>) -> Self {
        debug_assert!(columns.iter().all(|c| c.rank() as usize == target_rank.max(1)));
        FreeModuleMap { nvars, target_rank, columns, source_shifts: None, target_shifts: None }
    }

    pub fn source_rank(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> MPoly<Rat> {
        let terms = self.columns[col]
            .terms()
            .iter()
            .filter(|(t, _)| t.pos as usize == row)
            .map(|(t, c)| (ModTerm::ring(t.mono.clone()), c.clone()))
            .collect();
        MPoly::from_terms(1, terms)
    }

    /// Image of a vector written over the source basis.
    pub fn apply(&self, v: &MPoly<Rat>) -> MPoly<Rat> {
        let mut out = MPoly::zero(self.target_rank.max(1) as u32);
        for (t, c) in v.terms() {
            out = out.add(&self.columns[t.pos as usize].mul_term(&t.mono, c));
        }
        out
    }

    /// Does every column of `other` map to zero under `self`?  (Checks that
    /// `self ∘ other = 0` when `other`'s target is `self`'s source.)
    pub fn composes_to_zero_with(&self, other: &FreeModuleMap) -> bool {
        other.columns.iter().all(|col| self.apply(col).is_zero())
    }

    /// When both shift vectors are declared, verify every column is
    /// homogeneous of the degree its shift demands.
    pub fn check_homogeneous(&self) -> Result<(), GradingError> {
        let (Some(src), Some(tgt)) = (&self.source_shifts, &self.target_shifts) else {
            return Ok(());
        };
        for (j, col) in self.columns.iter().enumerate() {
            if col.is_zero() {
                continue;
            }
            match col.homogeneous_degree(tgt) {
                Some(d) if d == src[j] => {}
                _ => return Err(GradingError::InhomogeneousColumn { col: j }),
            }
        }
        Ok(())
    }
}

/// Generators of the kernel of `map`, computed by a basis computation over
/// S^(target+source) in which the target block dominates: elements whose
/// lead falls in the tag block have *all* their terms there, and those tag
/// vectors generate the kernel.
pub fn syzygies(map: &FreeModuleMap) -> Vec<MPoly<Rat>> {
    let q = map.target_rank;
    let r = map.source_rank();
    if r == 0 {
        return Vec::new();
    }
    let rank = (q + r) as u32;
    let mut tagged: Vec<MPoly<BigInt>> = Vec::with_capacity(r);
    for (j, col) in map.columns.iter().enumerate() {
        let mut terms: Vec<(ModTerm, Rat)> = col.terms().to_vec();
        terms.push((
            ModTerm { pos: (q + j) as u32, mono: Monomial::one(map.nvars) },
            Rat::from_integer(1.into()),
        ));
        tagged.push(MPoly::from_terms(rank, terms).to_int());
    }
    let gb = groebner_basis(&tagged);
    let mut out = Vec::new();
    for g in gb {
        let lead_pos = g.lead().expect("nonzero").0.pos as usize;
        if lead_pos < q {
            continue;
        }
        // position-over-term: no term can sit in the target block
        debug_assert!(g.terms().iter().all(|(t, _)| t.pos as usize >= q));
        let projected: Vec<(ModTerm, Rat)> = g
            .terms()
            .iter()
            .map(|(t, c)| {
                (
                    ModTerm { pos: t.pos - q as u32, mono: t.mono.clone() },
                    Rat::from_integer(c.clone()),
                )
            })
            .collect();
        out.push(MPoly::from_terms(r as u32, projected));
    }
    out
}

/// A graded module given by generators (with internal degrees) and relations.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    pub nvars: usize,
    pub shifts: Vec<i64>,
    pub relations: Vec<MPoly<Rat>>,
    gb: Vec<MPoly<BigInt>>,
}

/// Counts and representative indices of a minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalGenerators {
    /// internal degree -> number of minimal generators
    pub counts: BTreeMap<i64, usize>,
    /// indices (into the presentation's generators) of one choice of lifts
    pub representatives: Vec<usize>,
}

impl MinimalGenerators {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

impl ModulePresentation {
    pub fn new(nvars: usize, shifts: Vec<i64>, relations: Vec<MPoly<Rat>>) -> Self {
        let rank = shifts.len().max(1) as u32;
        let relations: Vec<MPoly<Rat>> = relations
            .into_iter()
            .map(|r| {
                debug_assert_eq!(r.rank(), rank);
                r
            })
            .filter(|r| !r.is_zero())
            .collect();
        let ints: Vec<MPoly<BigInt>> = relations.iter().map(|r| r.to_int()).collect();
        let gb = groebner_basis(&ints);
        ModulePresentation { nvars, shifts, relations, gb }
    }

    /// The S/I case: a cyclic module on one generator of degree 0.
    pub fn cyclic(nvars: usize, ideal: Vec<MPoly<Rat>>) -> Self {
        Self::new(nvars, vec![0], ideal)
    }

    pub fn generators(&self) -> usize {
        self.shifts.len()
    }

    pub fn relation_gb(&self) -> &[MPoly<BigInt>] {
        &self.gb
    }

    /// Internal degree of each relation; error if any is inhomogeneous.
    fn relation_degrees(&self) -> Result<Vec<i64>, GradingError> {
        self.relations
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.homogeneous_degree(&self.shifts)
                    .ok_or(GradingError::InhomogeneousRelation { index: i })
            })
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relation_degrees().is_ok()
    }

    /// Membership of a vector in the relation submodule.
    pub fn relation_member(&self, v: &MPoly<Rat>) -> bool {
        is_member(&v.to_int(), &self.gb)
    }

    /// dim_k of each graded piece, degrees 0..=up_to, by counting standard
    /// monomials (module terms not divisible by any lead of the relation
    /// basis).
    pub fn hilbert_function(&self, up_to: i64) -> Result<Vec<u64>, GradingError> {
        self.relation_degrees()?;
        let leads: Vec<&ModTerm> = self.gb.iter().map(|g| &g.lead().expect("nonzero").0).collect();
        let mut table = vec![0u64; (up_to.max(-1) + 1) as usize];
        for (i, &shift) in self.shifts.iter().enumerate() {
            for d in shift.max(0)..=up_to {
                let mono_deg = (d - shift) as u32;
                let mut count = 0u64;
                for_each_monomial(self.nvars, mono_deg, &mut |m| {
                    let t = ModTerm { pos: i as u32, mono: m.clone() };
                    if !leads.iter().any(|l| l.divides(&t)) {
                        count += 1;
                    }
                });
                table[d as usize] += count;
            }
        }
        Ok(table)
    }

    /// Graded Nakayama: the minimal number of generators in each internal
    /// degree is (generators declared in that degree) minus the rank of the
    /// constant coefficients of the relations of that degree.
    pub fn minimal_generators(&self) -> Result<MinimalGenerators, GradingError> {
        let rel_degs = self.relation_degrees()?;
        let mut counts = BTreeMap::new();
        let mut representatives = Vec::new();
        let mut degrees: Vec<i64> = self.shifts.clone();
        degrees.sort();
        degrees.dedup();
        for &d in &degrees {
            let cols: Vec<usize> =
                (0..self.shifts.len()).filter(|&i| self.shifts[i] == d).collect();
            let rows: Vec<usize> =
                (0..self.relations.len()).filter(|&i| rel_degs[i] == d).collect();
            let mut mat = QMatrix::zero(rows.len(), cols.len());
            for (ri, &rel) in rows.iter().enumerate() {
                for (ci, &gen) in cols.iter().enumerate() {
                    let key = ModTerm { pos: gen as u32, mono: Monomial::one(self.nvars) };
                    if let Some(c) = self.relations[rel].coefficient(&key) {
                        mat[(ri, ci)] = c.clone();
                    }
                }
            }
            let pivots = mat.rref();
            let count = cols.len() - pivots.len();
            if count > 0 {
                counts.insert(d, count);
            }
            for (ci, &gen) in cols.iter().enumerate() {
                if !pivots.contains(&ci) {
                    representatives.push(gen);
                }
            }
        }
        representatives.sort();
        Ok(MinimalGenerators { counts, representatives })
    }

    /// Eliminate generators that appear with a (nonzero) constant coefficient
    /// in some relation.  Returns the trimmed presentation together with the
    /// original indices of the surviving generators.  Requires a homogeneous
    /// presentation (so constant entries are exactly the degree-matching
    /// ones).
    pub fn trim(&self) -> Result<(ModulePresentation, Vec<usize>), GradingError> {
        self.relation_degrees()?;
        let mut kept: Vec<usize> = (0..self.shifts.len()).collect();
        let mut shifts = self.shifts.clone();
        let mut relations = self.relations.clone();
        loop {
            let rank = shifts.len().max(1) as u32;
            let mut found: Option<(usize, usize, Rat)> = None;
            'scan: for (ri, r) in relations.iter().enumerate() {
                for gen in 0..shifts.len() {
                    let key = ModTerm { pos: gen as u32, mono: Monomial::one(self.nvars) };
                    if let Some(c) = r.coefficient(&key) {
                        if !c.is_zero() {
                            found = Some((ri, gen, c.clone()));
                            break 'scan;
                        }
                    }
                }
            }
            let Some((ri, gen, c)) = found else { break };
            let pivot_rel = relations.remove(ri);
            // substitute: r' := r' - (coordinate of r' at gen) / c * pivot
            let new_rank = rank - 1;
            let mut next: Vec<MPoly<Rat>> = Vec::with_capacity(relations.len());
            for r in &relations {
                let coord: Vec<(ModTerm, Rat)> = r
                    .terms()
                    .iter()
                    .filter(|(t, _)| t.pos as usize == gen)
                    .map(|(t, cc)| (ModTerm::ring(t.mono.clone()), cc / &c))
                    .collect();
                let factor = MPoly::from_terms(1, coord);
                let reduced = r.sub(&pivot_rel.mul_ring(&factor));
                let dropped: Vec<(ModTerm, Rat)> = reduced
                    .terms()
                    .iter()
                    .map(|(t, cc)| {
                        debug_assert_ne!(t.pos as usize, gen, "coordinate was eliminated");
                        let pos = if (t.pos as usize) > gen { t.pos - 1 } else { t.pos };
                        (ModTerm { pos, mono: t.mono.clone() }, cc.clone())
                    })
                    .collect();
                let p = MPoly::from_terms(new_rank.max(1), dropped);
                if !p.is_zero() {
                    next.push(p);
                }
            }
            relations = next;
            shifts.remove(gen);
            kept.remove(gen);
            if shifts.is_empty() {
                relations.clear();
                break;
            }
        }
        Ok((ModulePresentation::new(self.nvars, shifts, relations), kept))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn mono(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    fn vecp(rank: u32, terms: &[(usize, &[u16], i64)]) -> MPoly<Rat> {
        MPoly::from_terms(
            rank,
            terms
                .iter()
                .map(|(p, e, c)| (ModTerm { pos: *p as u32, mono: mono(e) }, rat(*c)))
                .collect(),
        )
    }

    #[test]
    fn koszul_syzygy_two_variables() {
        // S^2 -> S, (a,b) |-> ax + by: kernel generated by (y, -x)
        let map = FreeModuleMap::new(
            2,
            1,
            vec![vecp(1, &[(0, &[1, 0], 1)]), vecp(1, &[(0, &[0, 1], 1)])],
        );
        let syz = syzygies(&map);
        assert_eq!(syz.len(), 1);
        assert!(map.apply(&syz[0]).is_zero());
        let expected = vecp(2, &[(0, &[0, 1], 1), (1, &[1, 0], -1)]);
        let mut got = syz[0].to_int();
        got.canonicalize();
        let mut want = expected.to_int();
        want.canonicalize();
        assert_eq!(got, want);
    }

    #[test]
    fn syzygies_of_zero_map_are_unit_vectors() {
        let map = FreeModuleMap::new(2, 1, vec![MPoly::zero(1), MPoly::zero(1)]);
        let syz = syzygies(&map);
        assert_eq!(syz.len(), 2);
        for (j, s) in syz.iter().enumerate() {
            assert_eq!(s.terms().len(), 1);
            assert!(s.terms()[0].0.mono.is_one());
            assert_eq!(s.terms()[0].0.pos as usize, j, "sorted by descending lead");
        }
    }

    #[test]
    fn koszul_syzygies_three_variables() {
        // (a,b,c) |-> ax + by + cz: the three Koszul relations generate
        let map = FreeModuleMap::new(
            3,
            1,
            vec![
                vecp(1, &[(0, &[1, 0, 0], 1)]),
                vecp(1, &[(0, &[0, 1, 0], 1)]),
                vecp(1, &[(0, &[0, 0, 1], 1)]),
            ],
        );
        let syz = syzygies(&map);
        for s in &syz {
            assert!(map.apply(s).is_zero());
        }
        let koszul = [
            vecp(3, &[(0, &[0, 1, 0], 1), (1, &[1, 0, 0], -1)]),
            vecp(3, &[(0, &[0, 0, 1], 1), (2, &[1, 0, 0], -1)]),
            vecp(3, &[(1, &[0, 0, 1], 1), (2, &[0, 1, 0], -1)]),
        ];
        // mutual containment of the two generating sets as submodules
        let syz_gb = groebner_basis(&syz.iter().map(|s| s.to_int()).collect::<Vec<_>>());
        let koszul_gb =
            groebner_basis(&koszul.iter().map(|s| s.to_int()).collect::<Vec<_>>());
        for s in &syz {
            assert!(is_member(&s.to_int(), &koszul_gb));
        }
        for k in &koszul {
            assert!(is_member(&k.to_int(), &syz_gb));
        }
    }

    #[test]
    fn syzygy_composition_vanishes() {
        // syzygies of the syzygy map compose to zero with it
        let map = FreeModuleMap::new(
            2,
            1,
            vec![vecp(1, &[(0, &[2, 0], 1)]), vecp(1, &[(0, &[1, 1], 1)]), vecp(1, &[(0, &[0, 2], 1)])],
        );
        let first = syzygies(&map);
        let syz_map = FreeModuleMap::new(2, 3, first.clone());
        assert!(map.composes_to_zero_with(&syz_map));
        let second = syzygies(&syz_map);
        for s in &second {
            assert!(syz_map.apply(s).is_zero());
        }
    }

    #[test]
    fn hilbert_of_free_rank_one() {
        let mp = ModulePresentation::cyclic(2, vec![]);
        assert_eq!(mp.hilbert_function(4).unwrap(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn hilbert_of_point() {
        let mp = ModulePresentation::cyclic(
            2,
            vec![vecp(1, &[(0, &[1, 0], 1)]), vecp(1, &[(0, &[0, 1], 1)])],
        );
        assert_eq!(mp.hilbert_function(3).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn hilbert_matches_dense_count_on_a_quotient() {
        // S = k[x,y], I = (x^2, xy): standard monomials 1; x, y; y^2; y^3 ...
        let mp = ModulePresentation::cyclic(
            2,
            vec![vecp(1, &[(0, &[2, 0], 1)]), vecp(1, &[(0, &[1, 1], 1)])],
        );
        assert_eq!(mp.hilbert_function(4).unwrap(), vec![1, 2, 1, 1, 1]);
    }

    #[test]
    fn minimal_generators_of_free_module() {
        let mp = ModulePresentation::new(2, vec![0, 0], vec![]);
        let mg = mp.minimal_generators().unwrap();
        assert_eq!(mg.counts.get(&0), Some(&2));
        assert_eq!(mg.total(), 2);
        assert_eq!(mg.representatives, vec![0, 1]);
    }

    #[test]
    fn minimal_generators_of_square_ideal() {
        // (x^2, xy, y^2) as a module on 3 generators of degree 2 with the
        // two Koszul-style relations y*g0 - x*g1, y*g1 - x*g2
        let rels = vec![
            vecp(3, &[(0, &[0, 1], 1), (1, &[1, 0], -1)]),
            vecp(3, &[(1, &[0, 1], 1), (2, &[1, 0], -1)]),
        ];
        let mp = ModulePresentation::new(2, vec![2, 2, 2], rels);
        let mg = mp.minimal_generators().unwrap();
        assert_eq!(mg.counts.get(&2), Some(&3));
        assert_eq!(mg.total(), 3);
    }

    #[test]
    fn trim_eliminates_constant_coordinates() {
        // generators g0 (degree 1), g1 (degree 1), relation g0 - g1 = 0 and
        // x*g0 + y*g1 = 0; after trimming one generator remains with the
        // substituted relation (x + y) g = 0
        let rels = vec![
            vecp(2, &[(0, &[0, 0], 1), (1, &[0, 0], -1)]),
            vecp(2, &[(0, &[1, 0], 1), (1, &[0, 1], 1)]),
        ];
        let mp = ModulePresentation::new(2, vec![1, 1], rels);
        let (trimmed, kept) = mp.trim().unwrap();
        assert_eq!(trimmed.generators(), 1);
        assert_eq!(kept.len(), 1);
        assert_eq!(trimmed.relations.len(), 1);
        let r = &trimmed.relations[0];
        assert_eq!(r.terms().len(), 2);
        let mg = trimmed.minimal_generators().unwrap();
        assert_eq!(mg.total(), 1);
        // trimming must not change the minimal generator counts
        let mg_raw = mp.minimal_generators().unwrap();
        assert_eq!(mg_raw.total(), 1);
    }

    #[test]
    fn trim_kills_unit_module()
    {
        // relation 1*g = 0 kills the only generator
        let mp = ModulePresentation::cyclic(2, vec![vecp(1, &[(0, &[0, 0], 1)])]);
        let (trimmed, kept) = mp.trim().unwrap();
        assert_eq!(trimmed.generators(), 0);
        assert!(kept.is_empty());
        assert_eq!(mp.minimal_generators().unwrap().total(), 0);
    }

    #[test]
    fn inhomogeneous_relations_are_reported() {
        let mp = ModulePresentation::cyclic(
            2,
            vec![vecp(1, &[(0, &[2, 0], 1), (0, &[1, 0], 1)])],
        );
        assert!(matches!(
            mp.hilbert_function(2),
            Err(GradingError::InhomogeneousRelation { index: 0 })
        ));
        assert!(matches!(
            mp.minimal_generators(),
            Err(GradingError::InhomogeneousRelation { index: 0 })
        ));
        assert!(!mp.is_homogeneous());
    }

    #[test]
    fn row_operations_preserve_counts_and_hilbert() {
        // row operations on relations: add x*(rel 0) to rel 1
        let rels = vec![
            vecp(2, &[(0, &[0, 1], 1), (1, &[1, 0], -1)]),
            vecp(2, &[(0, &[2, 0], 1), (1, &[1, 1], 1)]),
        ];
        let mp = ModulePresentation::new(2, vec![2, 2], rels.clone());
        let mut changed = rels.clone();
        let xpoly = MPoly::from_terms(1, vec![(ModTerm::ring(mono(&[1, 0])), rat(1))]);
        changed[1] = changed[1].add(&changed[0].mul_ring(&xpoly));
        let mp2 = ModulePresentation::new(2, vec![2, 2], changed);
        assert_eq!(
            mp.minimal_generators().unwrap().counts,
            mp2.minimal_generators().unwrap().counts
        );
        assert_eq!(mp.hilbert_function(5).unwrap(), mp2.hilbert_function(5).unwrap());
    }
}
