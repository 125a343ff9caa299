//! Tangent spaces of the representation scheme at a chosen representation.
//!
//! A representation assigns an n x n matrix to each degree-zero generator.
//! Derivations twisted by that representation form a finite complex of
//! rational vector spaces, one piece per generator degree; its cohomology
//! gives the tangent spaces.  For algebras presented as polynomial rings an
//! independent cross-check is available through the Koszul-complex model of
//! Hochschild cohomology.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;
use thiserror::Error;

use crate::linalg::{QMatrix, SpanBuilder};
use crate::ncalg::{GenId, GenTable, NCPoly, Resolution};
use crate::Rat;

#[derive(Debug, Error)]
pub enum TangentError {
    #[error("representation size must be positive")]
    ZeroSize,
    #[error("generator {0} has negative degree; its value is forced to zero and cannot be supplied")]
    NegativeGeneratorValue(String),
    #[error("matrix for generator {0} must be {1}x{1}")]
    DimensionMismatch(String, usize),
    #[error("mismatched generator tables")]
    MismatchedTables,
    #[error("the representation does not satisfy the relations")]
    InvalidRepresentation,
    #[error("matrices {0} and {1} do not commute; the Koszul model does not apply")]
    NonCommuting(usize, usize),
}

/// An n-dimensional representation: one matrix per degree-zero generator.
/// Negative-degree generators implicitly map to zero.
#[derive(Clone, Debug)]
pub struct Representation {
    table: Arc<GenTable>,
    n: usize,
    values: Vec<QMatrix>,
}

impl Representation {
    /// Missing degree-zero generators default to the zero matrix; values for
    /// negative generators are rejected.
    pub fn new(
        table: &Arc<GenTable>,
        n: usize,
        values: Vec<(GenId, QMatrix)>,
    ) -> Result<Representation, TangentError> {
        if n == 0 {
            return Err(TangentError::ZeroSize);
        }
        let mut vals = vec![QMatrix::zero(n, n); table.len()];
        for (g, m) in values {
            if table.degree(g) != 0 {
                return Err(TangentError::NegativeGeneratorValue(table.name(g).to_string()));
            }
            if m.rows != n || m.cols != n {
                return Err(TangentError::DimensionMismatch(table.name(g).to_string(), n));
            }
            vals[g.0 as usize] = m;
        }
        Ok(Representation { table: table.clone(), n, values: vals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &Arc<GenTable> {
        &self.table
    }

    /// The matrix of a generator: the assigned value in degree zero, the zero
    /// matrix otherwise.
    pub fn value(&self, g: GenId) -> &QMatrix {
        &self.values[g.0 as usize]
    }

    /// Evaluate a polynomial: words become matrix products, and any word
    /// containing a negative-degree factor evaluates to zero.
    pub fn evaluate(&self, p: &NCPoly) -> Result<QMatrix, TangentError> {
        if **p.table() != *self.table {
            return Err(TangentError::MismatchedTables);
        }
        let mut out = QMatrix::zero(self.n, self.n);
        for (word, c) in p.terms() {
            let mut m = QMatrix::identity(self.n);
            for &g in word.factors() {
                m = m.mul(self.value(g));
            }
            out = out.add(&m.scale(c));
        }
        Ok(out)
    }
}

/// Nonzero relation matrices, one per degree -1 generator whose differential
/// does not evaluate to zero.
#[derive(Debug)]
pub struct RepReport {
    pub residues: Vec<(GenId, QMatrix)>,
}

impl RepReport {
    pub fn is_valid(&self) -> bool {
        self.residues.is_empty()
    }
}

/// Check the relations of the algebra at the representation.  Generators of
/// degree -2 and below impose no condition: every word of their differential
/// contains a negative-degree factor and evaluates to zero.
pub fn validate_rep(res: &Resolution, rho: &Representation) -> Result<RepReport, TangentError> {
    if **res.table() != *rho.table {
        return Err(TangentError::MismatchedTables);
    }
    let table = res.table();
    let mut residues = Vec::new();
    for g in table.ids() {
        if table.degree(g) == -1 {
            let residue = rho.evaluate(res.diff_of(g))?;
            if !residue.is_zero() {
                residues.push((g, residue));
            }
        }
    }
    Ok(RepReport { residues })
}

/// The complex of twisted derivations.  The piece in degree m has one n x n
/// matrix slot per generator of degree -m; `differentials[m]` maps piece m to
/// piece m + 1 (the last one has an empty target).
#[derive(Debug)]
pub struct DerComplex {
    pub n: usize,
    pub pieces: Vec<Vec<GenId>>,
    pub differentials: Vec<QMatrix>,
}

impl DerComplex {
    pub fn dim(&self, m: usize) -> usize {
        self.pieces.get(m).map_or(0, |p| p.len() * self.n * self.n)
    }

    pub fn length(&self) -> usize {
        self.pieces.len()
    }
}

/// Basis layout inside a piece: generator-major, then matrix row, then
/// matrix column.
fn slot(gen_index: usize, n: usize, row: usize, col: usize) -> usize {
    gen_index * n * n + row * n + col
}

/// delta_m(theta)(g) = -(-1)^m theta-hat(d g), where theta-hat extends theta
/// over a word by replacing one factor at a time, twisting the others by rho,
/// with the Koszul sign (-1)^{m deg(prefix)}.
fn delta(res: &Resolution, rho: &Representation, pieces: &[Vec<GenId>], m: usize) -> QMatrix {
    let n = rho.n();
    let table = res.table();
    let src = &pieces[m];
    let empty = Vec::new();
    let tgt = pieces.get(m + 1).unwrap_or(&empty);
    let src_index: BTreeMap<GenId, usize> =
        src.iter().cloned().zip(0..).collect();
    let mut mat = QMatrix::zero(tgt.len() * n * n, src.len() * n * n);
    for (ti, &gp) in tgt.iter().enumerate() {
        for (word, coeff) in res.diff_of(gp).terms() {
            let factors = word.factors();
            let k = factors.len();
            let mut pref = Vec::with_capacity(k + 1);
            pref.push(QMatrix::identity(n));
            let mut deg = Vec::with_capacity(k + 1);
            deg.push(0i64);
            for i in 0..k {
                pref.push(pref[i].mul(rho.value(factors[i])));
                deg.push(deg[i] + table.degree(factors[i]));
            }
            let mut suf = vec![QMatrix::identity(n); k + 1];
            for i in (0..k).rev() {
                suf[i] = rho.value(factors[i]).mul(&suf[i + 1]);
            }
            for i in 0..k {
                let Some(&hi) = src_index.get(&factors[i]) else { continue };
                let mut c = if (m as i64 * deg[i]).rem_euclid(2) == 0 {
                    coeff.clone()
                } else {
                    -coeff.clone()
                };
                if m % 2 == 0 {
                    c = -c;
                }
                // pref * E_ab * suf has (r, s) entry pref[r, a] * suf[b, s].
                let (p, q) = (&pref[i], &suf[i + 1]);
                for r in 0..n {
                    for a in 0..n {
                        let pra = &p[(r, a)];
                        if pra.is_zero() {
                            continue;
                        }
                        for b in 0..n {
                            for s in 0..n {
                                let term = &c * pra * &q[(b, s)];
                                let row = slot(ti, n, r, s);
                                let col = slot(hi, n, a, b);
                                mat[(row, col)] += term;
                            }
                        }
                    }
                }
            }
        }
    }
    mat
}

pub fn der_complex(res: &Resolution, rho: &Representation) -> Result<DerComplex, TangentError> {
    let report = validate_rep(res, rho)?;
    if !report.is_valid() {
        return Err(TangentError::InvalidRepresentation);
    }
    let table = res.table();
    let depth = table.ids().map(|g| -table.degree(g)).max().unwrap_or(0) as usize;
    let mut pieces = vec![Vec::new(); depth + 1];
    for g in table.ids() {
        pieces[(-table.degree(g)) as usize].push(g);
    }
    let differentials: Vec<QMatrix> =
        (0..pieces.len()).map(|m| delta(res, rho, &pieces, m)).collect();
    for m in 0..differentials.len() - 1 {
        debug_assert!(
            differentials[m + 1].mul(&differentials[m]).is_zero(),
            "twisted derivation differential does not square to zero at m = {m}"
        );
    }
    Ok(DerComplex { n: rho.n(), pieces, differentials })
}

/// One tangent space: its dimension and a basis of cocycle representatives
/// (coordinate vectors in the corresponding piece of the complex).
#[derive(Debug)]
pub struct TangentSpace {
    pub dim: usize,
    pub basis: Vec<Vec<Rat>>,
}

/// T^i = ker(delta_i) / im(delta_{i-1}), by exact rank computation.
pub fn tangent_cohomology(
    res: &Resolution,
    rho: &Representation,
) -> Result<Vec<TangentSpace>, TangentError> {
    let complex = der_complex(res, rho)?;
    let mut out = Vec::with_capacity(complex.length());
    for i in 0..complex.length() {
        let kernel = complex.differentials[i].nullspace();
        let mut span = SpanBuilder::new(complex.dim(i));
        if i > 0 {
            let prev = &complex.differentials[i - 1];
            for col in 0..prev.cols {
                span.insert((0..prev.rows).map(|r| prev[(r, col)].clone()).collect());
            }
        }
        let image_dim = span.dim();
        let mut basis = Vec::new();
        for v in kernel {
            if span.insert(v.clone()) {
                basis.push(v);
            }
        }
        debug_assert_eq!(span.dim() - image_dim, basis.len());
        out.push(TangentSpace { dim: basis.len(), basis });
    }
    Ok(out)
}

/// Hochschild cohomology of a polynomial algebra with matrix coefficients,
/// via the Koszul complex 0 -> M -> M^d -> M^{C(d,2)} -> ...; the
/// differential sends m (x) e_I to sum_i [X_i, m] (x) e_i ^ e_I.
#[derive(Debug)]
pub struct HochschildReport {
    /// dims[p] = dim HH^p for p = 0..=p_max.
    pub dims: Vec<usize>,
    /// Dimension of the 1-cocycles (the derivations).
    pub z1: usize,
}

fn subsets(d: usize, p: usize) -> Vec<Vec<usize>> {
    if p > d {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(p);
    fn rec(start: usize, d: usize, p: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == p {
            out.push(current.clone());
            return;
        }
        for i in start..d {
            current.push(i);
            rec(i + 1, d, p, current, out);
            current.pop();
        }
    }
    rec(0, d, p, &mut current, &mut out);
    out
}

pub fn hh_koszul(matrices: &[QMatrix], p_max: usize) -> Result<HochschildReport, TangentError> {
    let d = matrices.len();
    let n = matrices.first().map_or(1, |m| m.rows);
    for (i, m) in matrices.iter().enumerate() {
        if m.rows != n || m.cols != n {
            return Err(TangentError::DimensionMismatch(format!("#{i}"), n));
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            if !matrices[i].commutator(&matrices[j]).is_zero() {
                return Err(TangentError::NonCommuting(i, j));
            }
        }
    }

    // The Koszul differentials up to and including the one out of C^{p_max}.
    let mut deltas = Vec::with_capacity(p_max + 1);
    for p in 0..=p_max {
        let src = subsets(d, p);
        let tgt = subsets(d, p + 1);
        let tgt_index: BTreeMap<&[usize], usize> =
            tgt.iter().map(|s| s.as_slice()).zip(0..).collect();
        let mut mat = QMatrix::zero(tgt.len() * n * n, src.len() * n * n);
        for (si, subset) in src.iter().enumerate() {
            for i in 0..d {
                if subset.contains(&i) {
                    continue;
                }
                let smaller = subset.iter().filter(|&&j| j < i).count();
                let sign = if smaller % 2 == 0 { 1i64 } else { -1i64 };
                let mut bigger: Vec<usize> = subset.clone();
                bigger.insert(smaller, i);
                let ti = tgt_index[bigger.as_slice()];
                // [X_i, E_uv] has (r, s) entry X_i[r, u] [v = s] - [r = u] X_i[v, s].
                let x = &matrices[i];
                for u in 0..n {
                    for v in 0..n {
                        let col = slot(si, n, u, v);
                        for r in 0..n {
                            let term = &x[(r, u)] * crate::rat(sign);
                            mat[(slot(ti, n, r, v), col)] += term;
                        }
                        for s in 0..n {
                            let term = &x[(v, s)] * crate::rat(sign);
                            mat[(slot(ti, n, u, s), col)] -= term;
                        }
                    }
                }
            }
        }
        deltas.push(mat);
    }

    let mut dims = Vec::with_capacity(p_max + 1);
    let mut z1 = 0;
    for p in 0..=p_max {
        let dim_p = subsets(d, p).len() * n * n;
        let kernel = dim_p - deltas[p].rank();
        let image = if p == 0 { 0 } else { deltas[p - 1].rank() };
        dims.push(kernel - image);
        if p == 1 {
            z1 = kernel;
        }
    }
    Ok(HochschildReport { dims, z1 })
}

#[derive(Debug)]
pub struct P2Row {
    pub i: usize,
    pub tangent: usize,
    pub oracle: usize,
}

#[derive(Debug)]
pub struct P2Report {
    pub rows: Vec<P2Row>,
    pub ok: bool,
}

/// Compare the tangent dimensions with the Hochschild oracle: T^0 against the
/// derivations Z^1, and T^i against HH^{i+1} for i >= 1.  Callers are
/// responsible for only invoking this when the degree-zero generators
/// present a polynomial ring; any dimension mismatch is reported, not
/// reconciled.
pub fn check_p2(
    res: &Resolution,
    rho: &Representation,
    p_max: usize,
) -> Result<P2Report, TangentError> {
    assert!(p_max >= 1);
    let tangent = tangent_cohomology(res, rho)?;
    let table = res.table();
    let xs: Vec<QMatrix> = table
        .ids()
        .filter(|&g| table.degree(g) == 0)
        .map(|g| rho.value(g).clone())
        .collect();
    let hh = hh_koszul(&xs, p_max)?;
    let t_dim = |i: usize| tangent.get(i).map_or(0, |t| t.dim);
    let mut rows = vec![P2Row { i: 0, tangent: t_dim(0), oracle: hh.z1 }];
    for i in 1..p_max {
        rows.push(P2Row { i, tangent: t_dim(i), oracle: hh.dims[i + 1] });
    }
    let ok = rows.iter().all(|r| r.tangent == r.oracle);
    Ok(P2Report { rows, ok })
}
