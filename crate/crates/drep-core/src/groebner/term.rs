//! Monomials in a fixed number of variables and terms of free modules, with
//! the orders used by the basis computations: degree-reverse-lexicographic on
//! monomials and position-over-term on module terms (lower position index
//! wins, which makes the leading block an elimination block).

use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { deg: 0, exps: vec![0; nvars] }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { deg: 1, exps }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when divisible.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { deg: other.deg - self.deg, exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exps(exps)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Apply a variable permutation: variable i of the result is variable
    /// `perm[i]` of the input.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let exps = perm.iter().map(|&j| self.exps[j]).collect();
        Monomial { deg: self.deg, exps }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Degree-reverse-lexicographic with variable 0 greatest: higher total
    /// degree wins; on ties the monomial with the *smaller* exponent at the
    /// last differing variable is the greater one.
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for i in (0..self.exps.len()).rev() {
                if self.exps[i] != other.exps[i] {
                    return other.exps[i].cmp(&self.exps[i]);
                }
            }
            Ordering::Equal
        })
    }
}

/// A term of a free module S^r: a basis position and a monomial coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModTerm {
    pub pos: u32,
    pub mono: Monomial,
}

impl ModTerm {
    pub fn ring(mono: Monomial) -> Self {
        ModTerm { pos: 0, mono }
    }

    pub fn divides(&self, other: &ModTerm) -> bool {
        self.pos == other.pos && self.mono.divides(&other.mono)
    }
}

impl PartialOrd for ModTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ModTerm {
    /// Position over term: a lower position index beats any monomial, so a
    /// basis computation eliminates the leading positions first.
    fn cmp(&self, other: &Self) -> Ordering {
        other.pos.cmp(&self.pos).then_with(|| self.mono.cmp(&other.mono))
    }
}

/// Visit every monomial of the given total degree, in no particular order.
pub fn for_each_monomial(nvars: usize, degree: u32, f: &mut impl FnMut(&Monomial)) {
    let mut exps = vec![0u16; nvars];
    fn rec(exps: &mut Vec<u16>, idx: usize, remaining: u32, f: &mut impl FnMut(&Monomial)) {
        if idx + 1 == exps.len() {
            exps[idx] = remaining as u16;
            f(&Monomial::from_exps(exps.clone()));
            exps[idx] = 0;
            return;
        }
        for e in 0..=remaining {
            exps[idx] = e as u16;
            rec(exps, idx + 1, remaining - e, f);
        }
        exps[idx] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            f(&Monomial::from_exps(vec![]));
        }
        return;
    }
    rec(&mut exps, 0, degree, f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn degrevlex_canonical_sequence() {
        // in k[x,y,z] with x > y > z:
        // x^2 > xy > y^2 > xz > yz > z^2
        let seq =
            [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in seq.windows(2) {
            assert!(w[0] > w[1], "{:?} should be greater than {:?}", w[0], w[1]);
        }
        assert!(m(&[1, 1, 1]) > m(&[2, 0, 0]), "degree dominates");
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[1, 1, 0]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(b.div_into(&a), Some(m(&[0, 1, 0])));
        assert_eq!(a.lcm(&b), a);
        assert!(m(&[1, 0, 0]).coprime(&m(&[0, 1, 1])));
        assert!(!m(&[1, 1, 0]).coprime(&m(&[0, 1, 1])));
    }

    #[test]
    fn pot_order_prefers_low_positions() {
        let t0 = ModTerm { pos: 0, mono: m(&[0, 0]) };
        let t1 = ModTerm { pos: 1, mono: m(&[5, 5]) };
        assert!(t0 > t1);
        let a = ModTerm { pos: 1, mono: m(&[2, 0]) };
        let b = ModTerm { pos: 1, mono: m(&[1, 1]) };
        assert!(a > b);
    }

    #[test]
    fn monomial_enumeration_counts() {
        let mut count = 0usize;
        for_each_monomial(3, 4, &mut |_| count += 1);
        // C(4+2, 2) = 15
        assert_eq!(count, 15);
        let mut count0 = 0usize;
        for_each_monomial(3, 0, &mut |mono| {
            assert!(mono.is_one());
            count0 += 1;
        });
        assert_eq!(count0, 1);
    }
}
