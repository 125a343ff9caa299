//! Free associative graded algebras with generators in nonpositive degrees,
//! and differentials extended by the graded Leibniz rule
//! `d(uv) = d(u) v + (-1)^{|u|} u d(v)`.
//!
//! A [`Resolution`] is such an algebra together with a degree-+1 differential
//! that vanishes on degree-0 generators and squares to zero; [`Resolution::validate`]
//! checks those requirements and reports every violation as data rather than
//! failing fast.

use crate::Rat;
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenId(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
}

/// The generator list of a free algebra.  Shared by reference between all
/// polynomials over it; two tables are interchangeable iff structurally equal.
#[derive(Debug, PartialEq, Eq)]
pub struct GenTable {
    gens: Vec<Generator>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgError {
    #[error("mismatched generator sets")]
    MismatchedGenerators,
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

impl GenTable {
    pub fn new<S: Into<String>>(gens: Vec<(S, i64)>) -> Result<Arc<GenTable>, AlgError> {
        let gens: Vec<Generator> =
            gens.into_iter().map(|(n, d)| Generator { name: n.into(), degree: d }).collect();
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(AlgError::DuplicateName(g.name.clone()));
            }
        }
        Ok(Arc::new(GenTable { gens }))
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> {
        (0..self.gens.len() as u32).map(GenId)
    }

    pub fn generator(&self, id: GenId) -> &Generator {
        &self.gens[id.0 as usize]
    }

    pub fn name(&self, id: GenId) -> &str {
        &self.generator(id).name
    }

    pub fn degree(&self, id: GenId) -> i64 {
        self.generator(id).degree
    }

    pub fn lookup(&self, name: &str) -> Result<GenId, AlgError> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .map(|i| GenId(i as u32))
            .ok_or_else(|| AlgError::UnknownGenerator(name.to_string()))
    }

    pub fn word_degree(&self, factors: &[GenId]) -> i64 {
        factors.iter().map(|&g| self.degree(g)).sum()
    }
}

/// A word in the generators; the empty word is the unit.  Words are ordered
/// degree-first (degrees closer to zero come first), then by length, then
/// lexicographically in declaration order, which makes printing canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NCWord {
    degree: i64,
    factors: Vec<GenId>,
}

impl NCWord {
    pub fn new(table: &GenTable, factors: Vec<GenId>) -> Self {
        NCWord { degree: table.word_degree(&factors), factors }
    }

    pub fn unit() -> Self {
        NCWord { degree: 0, factors: Vec::new() }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn factors(&self) -> &[GenId] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }
}

impl PartialOrd for NCWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NCWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .degree
            .cmp(&self.degree)
            .then_with(|| self.factors.len().cmp(&other.factors.len()))
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

/// Polynomial in a free associative algebra: a finite map word -> nonzero
/// rational coefficient.
#[derive(Clone, Debug)]
pub struct NCPoly {
    table: Arc<GenTable>,
    terms: BTreeMap<NCWord, Rat>,
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.terms == other.terms
    }
}
impl Eq for NCPoly {}

impl NCPoly {
    pub fn zero(table: &Arc<GenTable>) -> Self {
        NCPoly { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn unit(table: &Arc<GenTable>, c: Rat) -> Self {
        let mut p = Self::zero(table);
        p.add_term(NCWord::unit(), c);
        p
    }

    pub fn gen(table: &Arc<GenTable>, name: &str) -> Result<Self, AlgError> {
        let id = table.lookup(name)?;
        Ok(Self::from_gen(table, id))
    }

    pub fn from_gen(table: &Arc<GenTable>, id: GenId) -> Self {
        let mut p = Self::zero(table);
        p.add_term(NCWord::new(table, vec![id]), Rat::from_integer(1.into()));
        p
    }

    pub fn from_terms(
        table: &Arc<GenTable>,
        terms: Vec<(Vec<GenId>, Rat)>,
    ) -> Self {
        let mut p = Self::zero(table);
        for (w, c) in terms {
            p.add_term(NCWord::new(table, w), c);
        }
        p
    }

    pub fn table(&self) -> &Arc<GenTable> {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NCWord, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Degree if every word has the same one; `None` for 0 or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|w| w.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn add_term(&mut self, w: NCWord, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &NCPoly) -> Result<(), AlgError> {
        if self.table == other.table {
            Ok(())
        } else {
            Err(AlgError::MismatchedGenerators)
        }
    }

    pub fn try_add(&self, other: &NCPoly) -> Result<NCPoly, AlgError> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &NCPoly) -> Result<NCPoly, AlgError> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Concatenation product, extended bilinearly.
    pub fn try_mul(&self, other: &NCPoly) -> Result<NCPoly, AlgError> {
        self.check_table(other)?;
        let mut out = Self::zero(&self.table);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut f = w1.factors.clone();
                f.extend_from_slice(&w2.factors);
                out.add_term(NCWord::new(&self.table, f), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> NCPoly {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&-crate::rat(1))
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            crate::gcalg::write_term(f, i == 0, c, w.factors.iter().map(|&g| self.table.name(g)))?;
        }
        Ok(())
    }
}

macro_rules! nc_ops {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: &NCPoly) -> NCPoly {
                self.$checked(rhs).expect("mismatched generator sets")
            }
        }
    };
}
nc_ops!(Add, add, try_add);
nc_ops!(Sub, sub, try_sub);
nc_ops!(Mul, mul, try_mul);

/// One requirement the differential of a [`Resolution`] failed to meet.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// Generator degree must be <= 0.
    PositiveDegree { gen: GenId, degree: i64 },
    /// diff value must be homogeneous of degree |g| + 1; carries the offending
    /// word degrees found.
    WrongDifferentialDegree { gen: GenId, expected: i64, found: Vec<i64> },
    /// Degree-0 generators must have zero differential.
    NonzeroOnDegreeZero { gen: GenId },
    /// d(d(g)) must vanish; carries the residue.
    SquareNotZero { gen: GenId, residue: NCPoly },
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// One human-readable line per violation.
    pub fn describe(&self, table: &GenTable) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| match v {
                Violation::PositiveDegree { gen, degree } => {
                    format!("generator {} has positive degree {}", table.name(*gen), degree)
                }
                Violation::WrongDifferentialDegree { gen, expected, found } => format!(
                    "d({}) must be homogeneous of degree {}, found word degrees {:?}",
                    table.name(*gen),
                    expected,
                    found
                ),
                Violation::NonzeroOnDegreeZero { gen } => {
                    format!("degree-0 generator {} has nonzero differential", table.name(*gen))
                }
                Violation::SquareNotZero { gen, residue } => {
                    format!("d(d({})) = {} does not vanish", table.name(*gen), residue)
                }
            })
            .collect()
    }
}

/// A free graded algebra with differential, the input object of the whole
/// pipeline.  Differentials not supplied default to zero.
#[derive(Clone, Debug)]
pub struct Resolution {
    table: Arc<GenTable>,
    diff: Vec<NCPoly>,
}

impl Resolution {
    pub fn new(
        table: Arc<GenTable>,
        diffs: Vec<(GenId, NCPoly)>,
    ) -> Result<Resolution, AlgError> {
        let mut diff: Vec<NCPoly> = table.ids().map(|_| NCPoly::zero(&table)).collect();
        for (g, p) in diffs {
            if *p.table() != table {
                return Err(AlgError::MismatchedGenerators);
            }
            diff[g.0 as usize] = p;
        }
        Ok(Resolution { table, diff })
    }

    pub fn table(&self) -> &Arc<GenTable> {
        &self.table
    }

    pub fn diff_of(&self, g: GenId) -> &NCPoly {
        &self.diff[g.0 as usize]
    }

    /// The differential, extended from generators by the graded Leibniz rule.
    pub fn d(&self, p: &NCPoly) -> Result<NCPoly, AlgError> {
        if *p.table() != self.table {
            return Err(AlgError::MismatchedGenerators);
        }
        let mut out = NCPoly::zero(&self.table);
        for (w, c) in p.terms() {
            let mut prefix_degree = 0i64;
            for (i, &g) in w.factors().iter().enumerate() {
                let dg = &self.diff[g.0 as usize];
                if !dg.is_zero() {
                    let sign = if prefix_degree.rem_euclid(2) == 0 { c.clone() } else { -c.clone() };
                    for (dw, dc) in dg.terms() {
                        let mut f = w.factors()[..i].to_vec();
                        f.extend_from_slice(dw.factors());
                        f.extend_from_slice(&w.factors()[i + 1..]);
                        out.add_term(NCWord::new(&self.table, f), &sign * dc);
                    }
                }
                prefix_degree += self.table.degree(g);
            }
        }
        Ok(out)
    }

    /// Check the structural requirements and report all violations found.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for g in self.table.ids() {
            let deg = self.table.degree(g);
            if deg > 0 {
                violations.push(Violation::PositiveDegree { gen: g, degree: deg });
            }
            let dg = self.diff_of(g);
            if deg == 0 && !dg.is_zero() {
                violations.push(Violation::NonzeroOnDegreeZero { gen: g });
                continue;
            }
            if dg.is_zero() {
                continue;
            }
            let bad: Vec<i64> = dg
                .terms()
                .map(|(w, _)| w.degree())
                .filter(|&d| d != deg + 1)
                .collect();
            if !bad.is_empty() {
                violations.push(Violation::WrongDifferentialDegree {
                    gen: g,
                    expected: deg + 1,
                    found: bad,
                });
                continue;
            }
            let dd = self.d(dg).expect("same table");
            if !dd.is_zero() {
                violations.push(Violation::SquareNotZero { gen: g, residue: dd });
            }
        }
        ValidationReport { violations }
    }
}
