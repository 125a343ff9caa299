//! Cohomology of an expanded algebra, one cohomological degree at a time.
//!
//! The differential of an [`ExpandedAlgebra`] vanishes on the degree-zero
//! variables, so every graded component is a free module over the polynomial
//! ring `S` on those variables and the differential is a matrix over `S`.
//! This module builds those matrices, presents each cohomology module by
//! generators and relations, and provides the derived invariants (minimal
//! generator counts, Hilbert functions, vanishing tests, cup products) that
//! the command-line tool reports.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::BigInt;
use thiserror::Error;

use crate::expand::ExpandedAlgebra;
use crate::gcalg::{
    merge_monomials, normalize, CommError, CommMonomial, CPoly, VarId, VarTable,
};
use crate::groebner::{
    groebner_basis, is_member, syzygies, FreeModuleMap, GradingError, MPoly, ModTerm,
    ModulePresentation, Monomial, PolyRing,
};
use crate::Rat;

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("the differential is not homogeneous for any per-generator weights")]
    InhomogeneousGrading,
    #[error("a negative-degree variable has nonpositive weight; degree slices are infinite")]
    UnboundedWeights,
    #[error("element has a monomial outside the expected graded component")]
    NotConcentrated,
    #[error("representative in cohomological degree -{0} is not a cocycle")]
    NotACocycle(u32),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Comm(#[from] CommError),
}

/// Integer weights on the expanded variables making the differential
/// homogeneous: degree-zero variables weigh 1, and each negative variable
/// inherits the common weight of the words in its differential (defaulting to
/// `1 - degree` when the differential is zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalGrading {
    weights: Vec<i64>,
}

impl InternalGrading {
    pub fn weight(&self, v: VarId) -> i64 {
        self.weights[v.0 as usize]
    }

    pub fn monomial_weight(&self, m: &CommMonomial) -> i64 {
        m.even_part().iter().map(|&(v, e)| self.weight(v) * e as i64).sum::<i64>()
            + m.odd_part().iter().map(|&v| self.weight(v)).sum::<i64>()
    }
}

/// Solve for the weights, or return `None` when some differential mixes
/// words of different weights (so no homogeneous grading exists).
pub fn internal_grading(ea: &ExpandedAlgebra) -> Option<InternalGrading> {
    let res = ea.source();
    let table = res.table();
    let mut gen_weight: Vec<Option<i64>> = vec![None; table.len()];
    for g in table.ids() {
        if table.degree(g) == 0 {
            gen_weight[g.0 as usize] = Some(1);
        }
    }
    // Each word of d(g) uses only generators closer to degree zero than g,
    // so solving in order of |degree| visits every constraint exactly once.
    let mut negatives: Vec<_> = table.ids().filter(|&g| table.degree(g) < 0).collect();
    negatives.sort_by_key(|&g| (-table.degree(g), g.0));
    for g in negatives {
        let p = res.diff_of(g);
        if p.is_zero() {
            gen_weight[g.0 as usize] = Some(1 - table.degree(g));
            continue;
        }
        let mut weight: Option<i64> = None;
        for (word, _) in p.terms() {
            let mut w = 0i64;
            for &f in word.factors() {
                w += gen_weight[f.0 as usize]?;
            }
            match weight {
                None => weight = Some(w),
                Some(prev) if prev != w => return None,
                Some(_) => {}
            }
        }
        gen_weight[g.0 as usize] = weight;
    }
    let n = ea.n();
    let mut weights = vec![0i64; ea.table().len()];
    for g in table.ids() {
        let w = gen_weight[g.0 as usize]?;
        for j in 1..=n {
            for k in 1..=n {
                weights[ea.var_id(g, j, k).0 as usize] = w;
            }
        }
    }
    Some(InternalGrading { weights })
}

/// The polynomial ring `S` on the degree-zero variables, together with the
/// conversions between elements of the expanded algebra and coordinate
/// vectors over a component basis.
pub struct SRing {
    table: Arc<VarTable>,
    vars: Vec<VarId>,
    index: Vec<Option<usize>>,
    ring: PolyRing,
}

pub fn s_ring(ea: &ExpandedAlgebra) -> SRing {
    let table = ea.table().clone();
    let vars: Vec<VarId> = table.ids().filter(|&v| table.degree(v) == 0).collect();
    let mut index = vec![None; table.len()];
    for (i, &v) in vars.iter().enumerate() {
        index[v.0 as usize] = Some(i);
    }
    let ring = PolyRing::new(vars.iter().map(|&v| table.name(v).to_string()).collect());
    SRing { table, vars, index, ring }
}

impl SRing {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    /// Split a monomial into its degree-zero part (an `S`-monomial) and the
    /// residual monomial in the negative variables. Degree-zero variables are
    /// even, so the split never produces a sign.
    pub fn split(&self, m: &CommMonomial) -> (Monomial, CommMonomial) {
        let mut exps = vec![0u16; self.vars.len()];
        let mut rest: Vec<VarId> = Vec::new();
        for &(v, e) in m.even_part() {
            match self.index[v.0 as usize] {
                Some(i) => exps[i] += e as u16,
                None => rest.extend(std::iter::repeat(v).take(e as usize)),
            }
        }
        rest.extend(m.odd_part().iter().copied());
        let (sign, neg) = normalize(&self.table, &rest);
        debug_assert_eq!(sign, 1);
        (Monomial::from_exps(exps), neg)
    }

    /// Coordinates of an element concentrated in one cohomological degree
    /// with respect to the given component basis.
    pub fn to_coordinates(
        &self,
        basis: &[CommMonomial],
        p: &CPoly,
    ) -> Result<MPoly<Rat>, CohomologyError> {
        let map: BTreeMap<CommMonomial, usize> =
            basis.iter().cloned().zip(0..).collect();
        self.coordinates_in(&map, basis.len(), p)
    }

    fn coordinates_in(
        &self,
        map: &BTreeMap<CommMonomial, usize>,
        rank: usize,
        p: &CPoly,
    ) -> Result<MPoly<Rat>, CohomologyError> {
        let mut terms = Vec::with_capacity(p.num_terms());
        for (mono, c) in p.terms() {
            let (s_mono, neg) = self.split(mono);
            let pos = *map.get(&neg).ok_or(CohomologyError::NotConcentrated)? as u32;
            terms.push((ModTerm { pos, mono: s_mono }, c.clone()));
        }
        Ok(MPoly::from_terms(rank as u32, terms))
    }

    /// Inverse of [`SRing::to_coordinates`].
    pub fn from_coordinates(&self, basis: &[CommMonomial], v: &MPoly<Rat>) -> CPoly {
        let mut out = CPoly::zero(&self.table);
        for term in v.terms() {
            let (t, c) = (&term.0, &term.1);
            let mut factors: Vec<VarId> = Vec::new();
            for (i, &e) in t.mono.exps().iter().enumerate() {
                factors.extend(std::iter::repeat(self.vars[i]).take(e as usize));
            }
            let (s_sign, s_mono) = normalize(&self.table, &factors);
            debug_assert_eq!(s_sign, 1);
            let (sign, m) = merge_monomials(&self.table, &s_mono, &basis[t.pos as usize])
                .expect("polynomial part carries no odd factors");
            debug_assert_eq!(sign, 1);
            out.add_term(m, c.clone());
        }
        out
    }
}

/// The matrix of d: (R_n)^{-m} -> (R_n)^{-m+1} over `S`, with columns indexed
/// by the component basis in degree -m. Shift data is attached whenever the
/// internal grading exists.
pub fn differential_matrix(ea: &ExpandedAlgebra, m: u32) -> FreeModuleMap {
    assert!(m >= 1, "differential matrices start at cohomological degree -1");
    let sr = s_ring(ea);
    let src = ea.presentation().component_basis(m);
    let tgt = ea.presentation().component_basis(m - 1);
    let map: BTreeMap<CommMonomial, usize> = tgt.iter().cloned().zip(0..).collect();
    let columns = src
        .iter()
        .map(|b| {
            let db = ea.presentation().d_monomial(b);
            sr.coordinates_in(&map, tgt.len(), &db)
                .expect("the differential preserves the component decomposition")
        })
        .collect();
    let mut out = FreeModuleMap::new(sr.nvars(), tgt.len(), columns);
    if let Some(grading) = internal_grading(ea) {
        out.source_shifts = Some(src.iter().map(|b| grading.monomial_weight(b)).collect());
        out.target_shifts = Some(tgt.iter().map(|b| grading.monomial_weight(b)).collect());
    }
    out
}

/// A cohomology class, carried by an explicit cocycle in the expanded algebra.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    /// Cohomological degree is -m.
    pub m: u32,
    pub rep: CPoly,
}

impl CohomologyClass {
    pub fn unit(ea: &ExpandedAlgebra) -> CohomologyClass {
        CohomologyClass { m: 0, rep: CPoly::unit(ea.table(), crate::rat(1)) }
    }
}

pub fn is_cocycle(ea: &ExpandedAlgebra, class: &CohomologyClass) -> Result<bool, CohomologyError> {
    Ok(ea.presentation().d(&class.rep)?.is_zero())
}

pub fn class_coordinates(
    ea: &ExpandedAlgebra,
    class: &CohomologyClass,
) -> Result<MPoly<Rat>, CohomologyError> {
    let sr = s_ring(ea);
    let basis = ea.presentation().component_basis(class.m);
    sr.to_coordinates(&basis, &class.rep)
}

/// Exact test for whether the representative lies in the image of the
/// incoming differential.
pub fn is_coboundary(
    ea: &ExpandedAlgebra,
    class: &CohomologyClass,
) -> Result<bool, CohomologyError> {
    let coords = class_coordinates(ea, class)?;
    if coords.is_zero() {
        return Ok(true);
    }
    let incoming = differential_matrix(ea, class.m + 1);
    let gens: Vec<MPoly<BigInt>> = incoming.columns.iter().map(|c| c.to_int()).collect();
    let gb = groebner_basis(&gens);
    Ok(is_member(&coords.to_int(), &gb))
}

/// Multiply two classes. The representative of the product is the product of
/// the representatives; the boolean reports whether the product vanishes in
/// cohomology (membership in the coboundaries, decided by module normal form).
pub fn cup_product(
    ea: &ExpandedAlgebra,
    a: &CohomologyClass,
    b: &CohomologyClass,
) -> Result<(CohomologyClass, bool), CohomologyError> {
    if !is_cocycle(ea, a)? {
        return Err(CohomologyError::NotACocycle(a.m));
    }
    if !is_cocycle(ea, b)? {
        return Err(CohomologyError::NotACocycle(b.m));
    }
    let rep = a.rep.try_mul(&b.rep)?;
    let class = CohomologyClass { m: a.m + b.m, rep };
    let is_zero = is_coboundary(ea, &class)?;
    Ok((class, is_zero))
}

/// H^{-m} presented by generators and relations over `S`.
#[derive(Debug)]
pub struct HPresentation {
    pub m: u32,
    /// Component basis indexing the coordinates below.
    pub basis: Vec<CommMonomial>,
    /// One explicit cocycle per module generator.
    pub representatives: Vec<CohomologyClass>,
    /// Coordinates of the representatives over `basis`.
    pub coordinates: Vec<MPoly<Rat>>,
    pub presentation: ModulePresentation,
    /// True when redundant generators were eliminated; requires the internal
    /// grading to exist (otherwise the raw presentation is returned).
    pub minimized: bool,
}

/// Present H^{-m}: for m = 0 the cyclic module S/I with I the degree-zero
/// boundary ideal; for m >= 1 the kernel generators of the outgoing
/// differential modulo the image of the incoming one.
pub fn h_presentation(ea: &ExpandedAlgebra, m: u32) -> HPresentation {
    let sr = s_ring(ea);
    if m == 0 {
        let unit_basis = vec![CommMonomial::unit()];
        let ideal: Vec<MPoly<Rat>> = ea
            .h0_ideal()
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                sr.to_coordinates(&unit_basis, p)
                    .expect("boundary ideal lives in degree zero")
            })
            .collect();
        let presentation = ModulePresentation::cyclic(sr.nvars(), ideal);
        let one = MPoly::from_terms(
            1,
            vec![(ModTerm::ring(Monomial::one(sr.nvars())), crate::rat(1))],
        );
        return HPresentation {
            m: 0,
            basis: unit_basis,
            representatives: vec![CohomologyClass::unit(ea)],
            coordinates: vec![one],
            presentation,
            minimized: false,
        };
    }

    let outgoing = differential_matrix(ea, m);
    let incoming = differential_matrix(ea, m + 1);
    let basis = ea.presentation().component_basis(m);
    let kernel = syzygies(&outgoing);
    let r = kernel.len();

    // A relation among the kernel classes is a combination that lands in the
    // image of the incoming differential, i.e. the projection to the kernel
    // block of a syzygy of the concatenated map [kernel | incoming].
    let mut combined = kernel.clone();
    combined.extend(incoming.columns.iter().cloned());
    let joint = FreeModuleMap::new(sr.nvars(), basis.len(), combined);
    let mut relations: Vec<MPoly<Rat>> = Vec::new();
    for s in syzygies(&joint) {
        let terms: Vec<(ModTerm, Rat)> = s
            .terms()
            .iter()
            .filter(|(t, _)| (t.pos as usize) < r)
            .cloned()
            .collect();
        let projected = MPoly::from_terms(r as u32, terms);
        if !projected.is_zero() {
            relations.push(projected);
        }
    }

    let mut shifts = Vec::with_capacity(r);
    let mut graded = outgoing.source_shifts.is_some();
    if let Some(ref src_shifts) = outgoing.source_shifts {
        for k in &kernel {
            match k.homogeneous_degree(src_shifts) {
                Some(d) => shifts.push(d),
                None => {
                    graded = false;
                    break;
                }
            }
        }
    }
    if !graded {
        shifts = vec![0; r];
    }
    let presentation = ModulePresentation::new(sr.nvars(), shifts, relations);
    let (presentation, kept, minimized) = if graded {
        match presentation.trim() {
            Ok((trimmed, kept)) => (trimmed, kept, true),
            Err(_) => (presentation, (0..r).collect(), false),
        }
    } else {
        (presentation, (0..r).collect::<Vec<_>>(), false)
    };

    let representatives = kept
        .iter()
        .map(|&i| CohomologyClass { m, rep: sr.from_coordinates(&basis, &kernel[i]) })
        .collect();
    let coordinates = kept.iter().map(|&i| kernel[i].clone()).collect();
    HPresentation { m, basis, representatives, coordinates, presentation, minimized }
}

/// True when H^{-m} = 0, i.e. every kernel generator of the outgoing
/// differential lies in the image of the incoming one.
pub fn vanishing(ea: &ExpandedAlgebra, m: u32) -> bool {
    assert!(m >= 1, "vanishing is about the negative cohomological degrees");
    let outgoing = differential_matrix(ea, m);
    if outgoing.source_rank() == 0 {
        return true;
    }
    let kernel = syzygies(&outgoing);
    if kernel.is_empty() {
        return true;
    }
    let incoming = differential_matrix(ea, m + 1);
    let gens: Vec<MPoly<BigInt>> = incoming.columns.iter().map(|c| c.to_int()).collect();
    let gb = groebner_basis(&gens);
    kernel.iter().all(|k| is_member(&k.to_int(), &gb))
}

#[derive(Debug)]
pub struct EulerRow {
    pub internal_degree: i64,
    /// Alternating sum of component dimensions in this weight.
    pub complex_side: i64,
    /// Alternating sum of cohomology dimensions in this weight.
    pub cohomology_side: i64,
}

#[derive(Debug)]
pub struct EulerReport {
    pub rows: Vec<EulerRow>,
    pub ok: bool,
}

/// Compare the graded Euler characteristic of the complex with that of its
/// cohomology, weight by weight up to `up_to`. The two sides are computed
/// independently: the left from counting monomials, the right from the
/// Hilbert functions of the presented cohomology modules.
pub fn euler_check(ea: &ExpandedAlgebra, up_to: i64) -> Result<EulerReport, CohomologyError> {
    assert!(up_to >= 0);
    let grading = internal_grading(ea).ok_or(CohomologyError::InhomogeneousGrading)?;
    let table = ea.table();
    let nvars = s_ring(ea).nvars();

    // Monomials of cohomological degree -m have weight >= m * w/|deg| for
    // every variable, so only finitely many m reach weights <= up_to.
    let mut m_max = 0i64;
    for v in table.ids() {
        let deg = table.degree(v);
        if deg < 0 {
            let w = grading.weight(v);
            if w <= 0 {
                return Err(CohomologyError::UnboundedWeights);
            }
            m_max = m_max.max(up_to * (-deg) / w);
        }
    }

    let mut lhs = vec![0i64; (up_to + 1) as usize];
    let mut rhs = vec![0i64; (up_to + 1) as usize];
    for m in 0..=(m_max as u32) {
        let sign = if m % 2 == 0 { 1i64 } else { -1i64 };
        let basis = ea.presentation().component_basis(m);
        let min_weight = basis.iter().map(|b| grading.monomial_weight(b)).min();
        if m > 0 && min_weight.map_or(true, |w| w > up_to) {
            continue;
        }
        for b in &basis {
            let w = grading.monomial_weight(b);
            for d in w..=up_to {
                lhs[d as usize] += sign * monomial_count(nvars, (d - w) as u32) as i64;
            }
        }
        let h = h_presentation(ea, m);
        let hf = h.presentation.hilbert_function(up_to)?;
        for (d, v) in hf.iter().enumerate() {
            rhs[d] += sign * *v as i64;
        }
    }

    let rows: Vec<EulerRow> = (0..=up_to)
        .map(|d| EulerRow {
            internal_degree: d,
            complex_side: lhs[d as usize],
            cohomology_side: rhs[d as usize],
        })
        .collect();
    let ok = rows.iter().all(|r| r.complex_side == r.cohomology_side);
    Ok(EulerReport { rows, ok })
}

/// Number of monomials of the given total degree in `nvars` variables.
fn monomial_count(nvars: usize, degree: u32) -> u64 {
    if nvars == 0 {
        return if degree == 0 { 1 } else { 0 };
    }
    let mut c = 1u64;
    for i in 1..=(nvars as u64 - 1) {
        c = c * (degree as u64 + i) / i;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expand::expand;
    use crate::fixtures::{kxy, kxy_stabilized, kxyz, usl2};
    use crate::{rat, ratio};

    fn weight_of(ea: &ExpandedAlgebra, name: &str) -> i64 {
        let grading = internal_grading(ea).unwrap();
        let v = ea.table().lookup(name).unwrap();
        grading.weight(v)
    }

    #[test]
    fn grading_weights_solved_from_differentials() {
        let ea = expand(&kxy(), 2).unwrap();
        assert_eq!(weight_of(&ea, "x_1_2"), 1);
        assert_eq!(weight_of(&ea, "t_2_1"), 2);

        let ea = expand(&kxyz(), 1).unwrap();
        assert_eq!(weight_of(&ea, "X_1_1"), 2);
        assert_eq!(weight_of(&ea, "t_1_1"), 3);

        let ea = expand(&kxy_stabilized(), 1).unwrap();
        assert_eq!(weight_of(&ea, "v_1_1"), 1);
        assert_eq!(weight_of(&ea, "t_1_1"), 2);
    }

    #[test]
    fn inconsistent_weights_detected() {
        let ea = expand(&usl2(), 1).unwrap();
        assert!(internal_grading(&ea).is_none());
    }

    #[test]
    fn coordinates_round_trip() {
        let ea = expand(&kxy(), 2).unwrap();
        let sr = s_ring(&ea);
        let pres = ea.presentation();
        for m in 1..=2u32 {
            let basis = pres.component_basis(m);
            // d of a random-ish combination of the next component exercises
            // products of odd variables and polynomial coefficients.
            let mut p = CPoly::zero(ea.table());
            for (i, b) in pres.component_basis(m + 1).iter().enumerate() {
                let db = pres.d_monomial(b);
                p = p.try_add(&db.scale(&ratio(i as i64 + 1, 3))).unwrap();
            }
            let coords = sr.to_coordinates(&basis, &p).unwrap();
            let back = sr.from_coordinates(&basis, &coords);
            assert!(back.try_sub(&p).unwrap().is_zero());
        }
    }

    #[test]
    fn one_by_one_zero_matrix_for_single_odd_variable() {
        let ea = expand(&kxy(), 1).unwrap();
        let d1 = differential_matrix(&ea, 1);
        assert_eq!(d1.target_rank, 1);
        assert_eq!(d1.source_rank(), 1);
        assert!(d1.columns[0].is_zero());
    }

    #[test]
    fn commutator_column_in_the_two_by_two_matrix() {
        let ea = expand(&kxy(), 2).unwrap();
        let d1 = differential_matrix(&ea, 1);
        assert_eq!(d1.target_rank, 1);
        assert_eq!(d1.source_rank(), 4);
        // Column of t_1_1 carries x_1_2*y_2_1 - y_1_2*x_2_1.
        let sr = s_ring(&ea);
        let idx = |name: &str| {
            let v = ea.table().lookup(name).unwrap();
            sr.vars().iter().position(|&w| w == v).unwrap()
        };
        let mono = |a: &str, b: &str| {
            let mut exps = vec![0u16; sr.nvars()];
            exps[idx(a)] += 1;
            exps[idx(b)] += 1;
            ModTerm::ring(Monomial::from_exps(exps))
        };
        let expected = MPoly::from_terms(
            1,
            vec![(mono("x_1_2", "y_2_1"), rat(1)), (mono("y_1_2", "x_2_1"), rat(-1))],
        );
        assert_eq!(d1.columns[0], expected);
        // Homogeneous of weight 2 in both shift vectors.
        assert_eq!(d1.source_shifts.as_deref(), Some(&[2i64, 2, 2, 2][..]));
        assert_eq!(d1.target_shifts.as_deref(), Some(&[0i64][..]));
    }

    #[test]
    fn consecutive_matrices_compose_to_zero() {
        let ea = expand(&kxy(), 2).unwrap();
        for m in 1..=3u32 {
            let dm = differential_matrix(&ea, m);
            let dnext = differential_matrix(&ea, m + 1);
            assert!(dm.composes_to_zero_with(&dnext), "d^2 != 0 at m = {m}");
        }
        let ea = expand(&kxyz(), 1).unwrap();
        for m in 1..=3u32 {
            let dm = differential_matrix(&ea, m);
            let dnext = differential_matrix(&ea, m + 1);
            assert!(dm.composes_to_zero_with(&dnext), "d^2 != 0 at m = {m}");
        }
    }

    #[test]
    fn degree_zero_cohomology_is_the_commutator_quotient() {
        let ea = expand(&kxy(), 2).unwrap();
        let h0 = h_presentation(&ea, 0);
        assert_eq!(h0.presentation.generators(), 1);

        // Entries of the generic matrix commutator, built directly.
        let sr = s_ring(&ea);
        let var = |name: &str| {
            let v = ea.table().lookup(name).unwrap();
            let i = sr.vars().iter().position(|&w| w == v).unwrap();
            MPoly::from_terms(1, vec![(ModTerm::ring(Monomial::var(i, sr.nvars())), rat(1))])
        };
        let n = 2usize;
        let mut entries = Vec::new();
        for j in 1..=n {
            for k in 1..=n {
                let mut e = MPoly::zero(1);
                for s in 1..=n {
                    let xs = var(&format!("x_{j}_{s}")).mul_ring(&var(&format!("y_{s}_{k}")));
                    let ys = var(&format!("y_{j}_{s}")).mul_ring(&var(&format!("x_{s}_{k}")));
                    e = e.add(&xs).sub(&ys);
                }
                entries.push(e.to_int());
            }
        }
        let direct_gb = groebner_basis(&entries);
        assert_eq!(h0.presentation.relation_gb(), &direct_gb[..]);
    }

    #[test]
    fn single_odd_variable_gives_a_free_rank_one_module() {
        let ea = expand(&kxy(), 1).unwrap();
        let h1 = h_presentation(&ea, 1);
        assert_eq!(h1.presentation.generators(), 1);
        assert!(h1.presentation.relations.is_empty());
        assert_eq!(h1.presentation.shifts, vec![2]);
        let mins = h1.presentation.minimal_generators().unwrap();
        assert_eq!(mins.total(), 1);
        assert!(is_cocycle(&ea, &h1.representatives[0]).unwrap());
    }

    #[test]
    fn h_minus_one_of_the_two_by_two_commuting_scheme() {
        let ea = expand(&kxy(), 2).unwrap();
        let h1 = h_presentation(&ea, 1);
        assert!(h1.minimized);

        let mins = h1.presentation.minimal_generators().unwrap();
        assert_eq!(mins.total(), 3, "one trace class and two weight-3 classes");
        assert_eq!(mins.counts.get(&2), Some(&1));
        assert_eq!(mins.counts.get(&3), Some(&2));
        assert_eq!(h1.presentation.shifts, vec![2, 3, 3]);

        for rep in &h1.representatives {
            assert!(is_cocycle(&ea, rep).unwrap());
        }

        let hf = h1.presentation.hilbert_function(4).unwrap();
        assert_eq!(hf, vec![0, 0, 1, 10, 46]);
    }

    #[test]
    fn presentation_relations_hold_in_cohomology() {
        let ea = expand(&kxy(), 2).unwrap();
        let sr = s_ring(&ea);
        let h1 = h_presentation(&ea, 1);
        for rel in &h1.presentation.relations {
            let mut combo = MPoly::zero(h1.basis.len() as u32);
            for (i, coords) in h1.coordinates.iter().enumerate() {
                let mut scalar_terms = Vec::new();
                for term in rel.terms() {
                    if term.0.pos as usize == i {
                        scalar_terms.push((ModTerm::ring(term.0.mono.clone()), term.1.clone()));
                    }
                }
                if scalar_terms.is_empty() {
                    continue;
                }
                let scalar = MPoly::from_terms(1, scalar_terms);
                combo = combo.add(&coords.mul_ring(&scalar));
            }
            let class = CohomologyClass { m: 1, rep: sr.from_coordinates(&h1.basis, &combo) };
            assert!(is_coboundary(&ea, &class).unwrap());
        }
    }

    #[test]
    fn vanishing_tests() {
        let ea1 = expand(&kxy(), 1).unwrap();
        assert!(!vanishing(&ea1, 1), "the class of the odd generator survives");
        assert!(vanishing(&ea1, 2), "no monomials of degree -2 in one odd variable");

        let ea2 = expand(&kxy(), 2).unwrap();
        assert!(!vanishing(&ea2, 1));
        assert!(vanishing(&ea2, 5), "only four odd variables at n = 2");
    }

    #[test]
    fn cup_products() {
        let ea = expand(&kxy(), 2).unwrap();
        let h1 = h_presentation(&ea, 1);
        let sigma = h1
            .representatives
            .iter()
            .zip(&h1.presentation.shifts)
            .find(|(_, &s)| s == 2)
            .map(|(c, _)| c.clone())
            .unwrap();

        let unit = CohomologyClass::unit(&ea);
        let (product, is_zero) = cup_product(&ea, &unit, &sigma).unwrap();
        assert!(!is_zero);
        assert!(product.rep.try_sub(&sigma.rep).unwrap().is_zero());

        // Odd square: vanishes on the nose.
        let (square, is_zero) = cup_product(&ea, &sigma, &sigma).unwrap();
        assert!(is_zero);
        assert!(square.rep.is_zero());

        // A non-cocycle is rejected.
        let t12 = CohomologyClass {
            m: 1,
            rep: CPoly::from_var(ea.table(), ea.table().lookup("t_1_2").unwrap()),
        };
        assert!(matches!(
            cup_product(&ea, &t12, &sigma),
            Err(CohomologyError::NotACocycle(1))
        ));
    }

    #[test]
    fn euler_characteristic_matches_in_each_weight() {
        let ea = expand(&kxy(), 1).unwrap();
        let report = euler_check(&ea, 4).unwrap();
        assert!(report.ok);

        let ea = expand(&kxy(), 2).unwrap();
        let report = euler_check(&ea, 4).unwrap();
        assert!(report.ok);
        assert_eq!(report.rows.len(), 5);
        // Left side in weight 2: dim S_2 - 4 * dim S_0 = 36 - 4.
        assert_eq!(report.rows[2].complex_side, 32);
    }

    #[test]
    fn euler_check_requires_a_homogeneous_differential() {
        let ea = expand(&usl2(), 1).unwrap();
        assert!(matches!(euler_check(&ea, 3), Err(CohomologyError::InhomogeneousGrading)));
    }

    #[test]
    fn stabilized_resolution_gives_the_same_hilbert_functions() {
        let plain = expand(&kxy(), 2).unwrap();
        let stab = expand(&kxy_stabilized(), 2).unwrap();
        for m in 0..=1u32 {
            let a = h_presentation(&plain, m).presentation.hilbert_function(4).unwrap();
            let b = h_presentation(&stab, m).presentation.hilbert_function(4).unwrap();
            assert_eq!(a, b, "Hilbert functions differ in cohomological degree -{m}");
        }
    }

    #[test]
    fn inhomogeneous_input_yields_a_raw_presentation() {
        let ea = expand(&usl2(), 1).unwrap();
        let h1 = h_presentation(&ea, 1);
        assert!(!h1.minimized);
        assert!(!h1.representatives.is_empty());
        for rep in &h1.representatives {
            assert!(is_cocycle(&ea, rep).unwrap());
        }
    }
}
