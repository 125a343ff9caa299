//! Sparse polynomials / free-module elements with ordered term lists,
//! generic over the coefficient domain.  Basis computations run fraction-free
//! over the integers; normal forms for callers run over the rationals; a
//! word-sized prime field is available as a fast cross-check.

use super::term::{ModTerm, Monomial};
use crate::{BigInt, Rat};
use num::{Integer, One, Signed, Zero};
use std::fmt;

/// Coefficient domain for the basis engine.  `cross(a, b)` returns a pair
/// (u, v) of nonzero multipliers with u·a = v·b, used to cancel leading
/// terms without division; `canonicalize` rescales a whole term list into
/// the domain's preferred representative (primitive with positive lead over
/// the integers, monic over a field).
pub trait Coeff: Clone + PartialEq + fmt::Debug + Zero + One {
    fn neg_ref(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn cross(a: &Self, b: &Self) -> (Self, Self);
    fn canonicalize(terms: &mut [(ModTerm, Self)]);
    /// Exact image of a rational number; `None` when it does not exist
    /// (prime divides the denominator).
    fn from_rat(r: &Rat) -> Option<Self>;
}

impl Coeff for BigInt {
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn cross(a: &Self, b: &Self) -> (Self, Self) {
        let g = a.gcd(b);
        (b / &g, a / &g)
    }
    fn canonicalize(terms: &mut [(ModTerm, Self)]) {
        if terms.is_empty() {
            return;
        }
        let mut content = BigInt::zero();
        for (_, c) in terms.iter() {
            content = content.gcd(c);
        }
        if terms[0].1.is_negative() {
            content = -content;
        }
        if !content.is_one() {
            for (_, c) in terms.iter_mut() {
                *c = &*c / &content;
            }
        }
    }
    fn from_rat(r: &Rat) -> Option<Self> {
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }
}

impl Coeff for Rat {
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn cross(a: &Self, b: &Self) -> (Self, Self) {
        (Rat::one(), a / b)
    }
    fn canonicalize(terms: &mut [(ModTerm, Self)]) {
        if terms.is_empty() {
            return;
        }
        let lead = terms[0].1.clone();
        if !lead.is_one() {
            for (_, c) in terms.iter_mut() {
                *c = &*c / &lead;
            }
        }
    }
    fn from_rat(r: &Rat) -> Option<Self> {
        Some(r.clone())
    }
}

/// Prime field on a word-sized prime, for fast modular pre-checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_fp(base);
            }
            base = base.mul_fp(base);
            e >>= 1;
        }
        acc
    }

    fn mul_fp(self, other: Self) -> Self {
        Fp(((self.0 as u128 * other.0 as u128) % P as u128) as u64)
    }

    pub fn inv(self) -> Self {
        debug_assert!(self.0 != 0);
        self.pow(P - 2)
    }
}

impl<const P: u64> std::ops::Add for Fp<P> {
    type Output = Fp<P>;
    fn add(self, other: Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> std::ops::Mul for Fp<P> {
    type Output = Fp<P>;
    fn mul(self, other: Self) -> Self {
        self.mul_fp(other)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Coeff for Fp<P> {
    fn neg_ref(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }
    fn add_ref(&self, other: &Self) -> Self {
        *self + *other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_fp(*other)
    }
    fn cross(a: &Self, b: &Self) -> (Self, Self) {
        (Fp(1), a.mul_fp(b.inv()))
    }
    fn canonicalize(terms: &mut [(ModTerm, Self)]) {
        if terms.is_empty() {
            return;
        }
        let inv = terms[0].1.inv();
        for (_, c) in terms.iter_mut() {
            *c = c.mul_fp(inv);
        }
    }
    fn from_rat(r: &Rat) -> Option<Self> {
        let p = BigInt::from(P);
        let num = r.numer().mod_floor(&p);
        let den = r.denom().mod_floor(&p);
        let num: u64 = num.try_into().ok()?;
        let den: u64 = den.try_into().ok()?;
        if den == 0 {
            return None;
        }
        Some(Fp::<P>(num).mul_fp(Fp::<P>(den).inv()))
    }
}

/// Element of a free module S^rank with terms sorted strictly descending.
/// Ring polynomials are the rank-1 case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly<C> {
    rank: u32,
    terms: Vec<(ModTerm, C)>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(rank: u32) -> Self {
        MPoly { rank, terms: Vec::new() }
    }

    pub fn from_terms(rank: u32, mut terms: Vec<(ModTerm, C)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(ModTerm, C)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            debug_assert!((t.pos as u32) < rank || rank == 0);
            match merged.last_mut() {
                Some((lt, lc)) if *lt == t => {
                    *lc = lc.add_ref(&c);
                    if lc.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push((t, c)),
            }
        }
        MPoly { rank, terms: merged }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn terms(&self) -> &[(ModTerm, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(ModTerm, C)> {
        self.terms.first()
    }

    pub fn coefficient(&self, t: &ModTerm) -> Option<&C> {
        self.terms
            .binary_search_by(|(s, _)| t.cmp(s))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// self * (c * mono), term by term (order is preserved).
    pub fn mul_term(&self, mono: &Monomial, c: &C) -> MPoly<C> {
        if c.is_zero() {
            return MPoly::zero(self.rank);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, tc)| {
                (ModTerm { pos: t.pos, mono: t.mono.mul(mono) }, tc.mul_ref(c))
            })
            .collect();
        // multiplying by a fixed monomial preserves both orders
        MPoly { rank: self.rank, terms }
    }

    pub fn scale(&self, c: &C) -> MPoly<C> {
        if c.is_zero() {
            return MPoly::zero(self.rank);
        }
        let terms = self.terms.iter().map(|(t, tc)| (t.clone(), tc.mul_ref(c))).collect();
        MPoly { rank: self.rank, terms }
    }

    pub fn add(&self, other: &MPoly<C>) -> MPoly<C> {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.terms[i].1.add_ref(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MPoly { rank: self.rank, terms: out }
    }

    pub fn sub(&self, other: &MPoly<C>) -> MPoly<C> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly<C> {
        let terms = self.terms.iter().map(|(t, c)| (t.clone(), c.neg_ref())).collect();
        MPoly { rank: self.rank, terms }
    }

    /// Full product with a rank-1 (ring) polynomial.
    pub fn mul_ring(&self, ring_poly: &MPoly<C>) -> MPoly<C> {
        debug_assert_eq!(ring_poly.rank, 1);
        let mut out = MPoly::zero(self.rank);
        for (t, c) in &ring_poly.terms {
            out = out.add(&self.mul_term(&t.mono, c));
        }
        out
    }

    pub fn canonicalize(&mut self) {
        C::canonicalize(&mut self.terms);
    }

    /// Internal degree of a homogeneous element under the given position
    /// shifts; `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self, shifts: &[i64]) -> Option<i64> {
        let mut it =
            self.terms.iter().map(|(t, _)| t.mono.degree() as i64 + shifts[t.pos as usize]);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Apply a variable permutation to every monomial and re-sort.
    pub fn permuted(&self, perm: &[usize]) -> MPoly<C> {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| {
                (ModTerm { pos: t.pos, mono: t.mono.permuted(perm) }, c.clone())
            })
            .collect();
        MPoly::from_terms(self.rank, terms)
    }
}

impl MPoly<Rat> {
    /// Rescale to an integer polynomial: primitive, positive lead.
    pub fn to_int(&self) -> MPoly<BigInt> {
        let mut denom_lcm = BigInt::one();
        for (_, c) in &self.terms {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut terms: Vec<(ModTerm, BigInt)> = self
            .terms
            .iter()
            .map(|(t, c)| (t.clone(), c.numer() * (&denom_lcm / c.denom())))
            .collect();
        BigInt::canonicalize(&mut terms);
        MPoly { rank: self.rank, terms }
    }
}

impl MPoly<BigInt> {
    pub fn to_rat(&self) -> MPoly<Rat> {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| (t.clone(), Rat::from_integer(c.clone())))
            .collect();
        MPoly { rank: self.rank, terms }
    }

    pub fn to_fp<const P: u64>(&self) -> MPoly<Fp<P>> {
        let terms: Vec<(ModTerm, Fp<P>)> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let r = c.mod_floor(&BigInt::from(P));
                (t.clone(), Fp::<P>(u64::try_from(r).expect("reduced mod P")))
            })
            .filter(|(_, c)| !Zero::is_zero(c))
            .collect();
        MPoly { rank: self.rank, terms }
    }
}

/// Render with the given variable names; module positions print as `[i]`.
pub fn mpoly_string<C: Coeff + fmt::Display>(p: &MPoly<C>, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (t, c)) in p.terms().iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        out.push_str(&format!("{c}"));
        for (v, &e) in t.mono.exps().iter().enumerate() {
            if e == 1 {
                out.push_str(&format!("*{}", vars[v]));
            } else if e > 1 {
                out.push_str(&format!("*{}^{}", vars[v], e));
            }
        }
        if p.rank() > 1 {
            out.push_str(&format!("*[{}]", t.pos));
        }
    }
    out
}
