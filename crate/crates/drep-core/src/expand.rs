//! Matrix expansion: from a free differential graded algebra on generators
//! r_i and a size n, build the free graded-commutative algebra on n² copies
//! r_i^{jk} of each generator, with the differential obtained by expanding
//! each word entrywise,
//!
//! ```text
//!   r_{t1} r_{t2} ... r_{tm}  |-->  sum over 1 <= s1..s_{m-1} <= n of
//!       r_{t1}^{j s1} r_{t2}^{s1 s2} ... r_{tm}^{s_{m-1} k}
//! ```
//!
//! and then normalized with Koszul signs.  The degree-0 part of the result is
//! the coordinate ring of the scheme of n-dimensional representations, and
//! the full complex computes its derived structure.

use crate::gcalg::{normalize, CPoly, CommError, DGCommPresentation, VarId, VarTable};
use crate::ncalg::{GenId, GenTable, NCPoly, NCWord, Resolution, ValidationReport};
use crate::Rat;
use num::One;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExpandError {
    #[error("matrix size must be at least 1")]
    ZeroSize,
    #[error("matrix index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("input algebra failed validation:\n{}", .problems.join("\n"))]
    InvalidResolution { problems: Vec<String>, report: ValidationReport },
    #[error("polynomial does not belong to the source algebra")]
    WrongAlgebra,
}

/// The entrywise-expansion machinery for one source generator table and one
/// matrix size.  Words expand into the free noncommutative algebra on the
/// variables `g_j_k` ("tilde" level); abelianization into the commutative
/// algebra on the same variables happens as a separate, sign-aware step.
pub struct Expander {
    n: usize,
    source: Arc<GenTable>,
    tilde: Arc<GenTable>,
    comm: Arc<VarTable>,
}

fn expanded_names(source: &GenTable, n: usize) -> Vec<(String, i64)> {
    let mut out = Vec::with_capacity(source.len() * n * n);
    for g in source.ids() {
        for j in 1..=n {
            for k in 1..=n {
                out.push((format!("{}_{}_{}", source.name(g), j, k), source.degree(g)));
            }
        }
    }
    out
}

impl Expander {
    pub fn new(source: &Arc<GenTable>, n: usize) -> Result<Expander, ExpandError> {
        if n == 0 {
            return Err(ExpandError::ZeroSize);
        }
        let names = expanded_names(source, n);
        let tilde = GenTable::new(names.clone()).expect("source names are unique");
        let comm = VarTable::new(names).expect("source names are unique");
        Ok(Expander { n, source: source.clone(), tilde, comm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> &Arc<GenTable> {
        &self.source
    }

    /// Generator table of the free noncommutative algebra on the expanded
    /// variables.
    pub fn tilde_table(&self) -> &Arc<GenTable> {
        &self.tilde
    }

    /// Variable table of the free commutative algebra on the same variables.
    pub fn comm_table(&self) -> &Arc<VarTable> {
        &self.comm
    }

    fn check_index(&self, i: usize) -> Result<(), ExpandError> {
        if i == 0 || i > self.n {
            Err(ExpandError::IndexOutOfRange { index: i, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn tilde_id(&self, g: GenId, j: usize, k: usize) -> GenId {
        GenId(g.0 * (self.n * self.n) as u32 + ((j - 1) * self.n + (k - 1)) as u32)
    }

    pub fn comm_id(&self, g: GenId, j: usize, k: usize) -> VarId {
        VarId(self.tilde_id(g, j, k).0)
    }

    fn expand_word(&self, w: &NCWord, j: usize, k: usize) -> NCPoly {
        let factors = w.factors();
        let mut out = NCPoly::zero(&self.tilde);
        if factors.is_empty() {
            if j == k {
                return NCPoly::unit(&self.tilde, Rat::one());
            }
            return out;
        }
        let m = factors.len();
        // odometer over the m-1 internal indices s_1 .. s_{m-1}, each 1..=n
        let mut s = vec![1usize; m - 1];
        loop {
            let mut word = Vec::with_capacity(m);
            for (pos, &g) in factors.iter().enumerate() {
                let row = if pos == 0 { j } else { s[pos - 1] };
                let col = if pos == m - 1 { k } else { s[pos] };
                word.push(self.tilde_id(g, row, col));
            }
            out.add_term(NCWord::new(&self.tilde, word), Rat::one());
            let mut carry = 0;
            while carry < s.len() {
                s[carry] += 1;
                if s[carry] <= self.n {
                    break;
                }
                s[carry] = 1;
                carry += 1;
            }
            if carry == s.len() {
                break;
            }
        }
        out
    }

    /// Entry (j, k) of the matrix expansion of `p`, as a polynomial in the
    /// free noncommutative algebra on the expanded variables.
    pub fn f_jk(&self, p: &NCPoly, j: usize, k: usize) -> Result<NCPoly, ExpandError> {
        self.check_index(j)?;
        self.check_index(k)?;
        if **p.table() != *self.source {
            return Err(ExpandError::WrongAlgebra);
        }
        let mut out = NCPoly::zero(&self.tilde);
        for (w, c) in p.terms() {
            out = out.try_add(&self.expand_word(w, j, k).scale(c)).expect("same table");
        }
        Ok(out)
    }

    /// Image of a tilde-level polynomial in the free commutative algebra,
    /// with Koszul signs from sorting each word into normal form.
    pub fn abelianize(&self, p: &NCPoly) -> Result<CPoly, ExpandError> {
        if **p.table() != *self.tilde {
            return Err(ExpandError::WrongAlgebra);
        }
        let mut out = CPoly::zero(&self.comm);
        for (w, c) in p.terms() {
            let vars: Vec<VarId> = w.factors().iter().map(|g| VarId(g.0)).collect();
            let (sign, m) = normalize(&self.comm, &vars);
            if sign != 0 {
                let coeff = if sign < 0 { -c.clone() } else { c.clone() };
                out.add_term(m, coeff);
            }
        }
        Ok(out)
    }
}

/// The expanded algebra: free graded-commutative on `n² × (generators)`
/// variables, with the entrywise-expanded differential.
pub struct ExpandedAlgebra {
    n: usize,
    source: Resolution,
    expander: Expander,
    presentation: DGCommPresentation,
}

/// Build the expanded algebra of `res` at matrix size `n`.  The input must
/// pass validation; violations are returned as an error.
pub fn expand(res: &Resolution, n: usize) -> Result<ExpandedAlgebra, ExpandError> {
    let report = res.validate();
    if !report.is_valid() {
        return Err(ExpandError::InvalidResolution {
            problems: report.describe(res.table()),
            report,
        });
    }
    let expander = Expander::new(res.table(), n)?;
    let mut diffs = Vec::new();
    for g in res.table().ids() {
        let dg = res.diff_of(g);
        if dg.is_zero() {
            continue;
        }
        for j in 1..=n {
            for k in 1..=n {
                let entry = expander.f_jk(dg, j, k)?;
                let entry = expander.abelianize(&entry)?;
                diffs.push((expander.comm_id(g, j, k), entry));
            }
        }
    }
    let presentation = DGCommPresentation::new(expander.comm_table().clone(), diffs)
        .expect("diffs built over the same table");
    Ok(ExpandedAlgebra { n, source: res.clone(), expander, presentation })
}

impl ExpandedAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> &Resolution {
        &self.source
    }

    pub fn expander(&self) -> &Expander {
        &self.expander
    }

    pub fn table(&self) -> &Arc<VarTable> {
        self.expander.comm_table()
    }

    pub fn presentation(&self) -> &DGCommPresentation {
        &self.presentation
    }

    pub fn var_id(&self, g: GenId, j: usize, k: usize) -> VarId {
        self.expander.comm_id(g, j, k)
    }

    /// Differentials of the degree -1 monomials: a generating set for the
    /// ideal I with H⁰ = S/I, S the polynomial ring on the degree-0
    /// variables.  Zero images are kept so the list lines up with
    /// `component_basis(1)`.
    pub fn h0_ideal(&self) -> Vec<CPoly> {
        self.presentation
            .component_basis(1)
            .into_iter()
            .map(|m| self.presentation.d_monomial(&m))
            .collect()
    }
}

impl ExpandedAlgebra {
    /// Check d² = 0 on every variable; expansion of a valid input always
    /// passes, so a failure here indicates an internal error.
    pub fn self_check(&self) -> Result<(), CommError> {
        for v in self.table().ids() {
            let dv = self.presentation.diff_of(v);
            if !dv.is_zero() {
                let dd = self.presentation.d(dv)?;
                assert!(dd.is_zero(), "d² != 0 on {}", self.table().name(v));
            }
        }
        Ok(())
    }
}
