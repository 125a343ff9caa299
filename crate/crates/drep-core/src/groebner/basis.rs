//! Buchberger's algorithm for ideals and submodules of free modules, with
//! Gebauer-Moeller pair pruning, the product criterion (rank 1 only, where it
//! is valid), full normal-form reduction, and autoreduction to the unique
//! reduced basis.  The whole kernel is deterministic: pairs are selected by
//! (lcm degree, index, index) and ties never depend on hashing.

use super::poly::{Coeff, MPoly};
use super::term::{ModTerm, Monomial};
use std::collections::BTreeMap;

/// Fully reduce `f` against `basis` (every term, not just the lead).  Over a
/// field this is the standard normal form; over the integers the result is
/// the field normal form up to a nonzero scalar, so zero-tests agree.
pub fn normal_form<C: Coeff>(f: &MPoly<C>, basis: &[MPoly<C>]) -> MPoly<C> {
    let rank = f.rank();
    let mut rest: BTreeMap<ModTerm, C> = BTreeMap::new();
    for (t, c) in f.terms() {
        rest.insert(t.clone(), c.clone());
    }
    let mut done: Vec<(ModTerm, C)> = Vec::new();
    'outer: while let Some((t, c)) = rest.pop_last() {
        if c.is_zero() {
            continue;
        }
        for g in basis {
            let Some((gt, gc)) = g.lead() else { continue };
            if !gt.divides(&t) {
                continue;
            }
            let m = gt.mono.div_into(&t.mono).expect("lead divides");
            let (u, v) = C::cross(&c, gc);
            // rest := u*rest - v*m*tail(g); everything already emitted is
            // scaled by u as well so the whole remainder stays consistent
            if u != C::one() {
                for val in rest.values_mut() {
                    *val = val.mul_ref(&u);
                }
                for (_, val) in done.iter_mut() {
                    *val = val.mul_ref(&u);
                }
            }
            for (gt2, gc2) in &g.terms()[1..] {
                let key = ModTerm { pos: gt2.pos, mono: gt2.mono.mul(&m) };
                let delta = v.mul_ref(gc2).neg_ref();
                let entry = rest.entry(key).or_insert_with(C::zero);
                *entry = entry.add_ref(&delta);
                if entry.is_zero() {
                    // leave removal to the pop loop; zero entries are skipped
                }
            }
            continue 'outer;
        }
        done.push((t, c));
    }
    // done was produced in strictly descending term order
    MPoly::from_terms(rank, done)
}

/// Membership of `f` in the submodule with Groebner basis `gb`.
pub fn is_member<C: Coeff>(f: &MPoly<C>, gb: &[MPoly<C>]) -> bool {
    normal_form(f, gb).is_zero()
}

#[derive(Clone, Debug)]
struct Pair {
    lcm: Monomial,
    pos: u32,
}

/// Key in the pair queue: (lcm degree, i, j) ascending.
type PairKey = (u32, usize, usize);

struct PairSet {
    pairs: BTreeMap<PairKey, Pair>,
}

impl PairSet {
    fn new() -> Self {
        PairSet { pairs: BTreeMap::new() }
    }

    fn pop(&mut self) -> Option<(usize, usize, Pair)> {
        self.pairs.pop_first().map(|((_, i, j), p)| (i, j, p))
    }
}

fn lead_of<C: Coeff>(g: &MPoly<C>) -> &(ModTerm, C) {
    g.lead().expect("basis elements are nonzero")
}

/// Gebauer-Moeller update: prune the pair set and append pairs (i, t) for the
/// newly added basis element t.
fn update_pairs<C: Coeff>(basis: &[MPoly<C>], pairs: &mut PairSet, t: usize) {
    let (lt, _) = lead_of(&basis[t]);
    let rank1 = basis[t].rank() == 1;

    // drop old pairs strictly superseded by the new element (chain criterion)
    pairs.pairs.retain(|&(_, i, j), pair| {
        if pair.pos != lt.pos || !lt.mono.divides(&pair.lcm) {
            return true;
        }
        let lcm_it = lead_of(&basis[i]).0.mono.lcm(&lt.mono);
        let lcm_jt = lead_of(&basis[j]).0.mono.lcm(&lt.mono);
        lcm_it == pair.lcm || lcm_jt == pair.lcm
    });

    // candidate pairs with the new element
    struct Cand {
        i: usize,
        lcm: Monomial,
        coprime: bool,
        sugar: u32,
    }
    let mut cands: Vec<Cand> = Vec::new();
    for i in 0..t {
        let (li, _) = lead_of(&basis[i]);
        if li.pos != lt.pos {
            continue;
        }
        let lcm = li.mono.lcm(&lt.mono);
        let sugar = lcm.degree();
        cands.push(Cand { i, lcm, coprime: rank1 && li.mono.coprime(&lt.mono), sugar });
    }

    // M criterion: drop a candidate whose lcm is a proper multiple of
    // another candidate's lcm
    let mut keep: Vec<bool> = vec![true; cands.len()];
    for a in 0..cands.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cands.len() {
            if a == b || !keep[b] {
                continue;
            }
            if cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(&cands[a].lcm) {
                keep[a] = false;
                break;
            }
        }
    }

    // F criterion: keep one candidate per lcm value, and drop the whole
    // class when any member is coprime (product criterion, ideals only)
    let mut by_lcm: BTreeMap<(u32, Vec<u16>), Vec<usize>> = BTreeMap::new();
    for (idx, c) in cands.iter().enumerate() {
        if keep[idx] {
            by_lcm.entry((c.lcm.degree(), c.lcm.exps().to_vec())).or_default().push(idx);
        }
    }
    for (_, class) in by_lcm {
        let class_coprime = class.iter().any(|&idx| cands[idx].coprime);
        for (k, &idx) in class.iter().enumerate() {
            if class_coprime || k > 0 {
                keep[idx] = false;
            }
        }
    }

    for (idx, c) in cands.into_iter().enumerate() {
        if keep[idx] {
            pairs
                .pairs
                .insert((c.sugar, c.i, t), Pair { lcm: c.lcm, pos: lt.pos });
        }
    }
}

fn s_poly<C: Coeff>(fi: &MPoly<C>, fj: &MPoly<C>, lcm: &Monomial) -> MPoly<C> {
    let (ti, ci) = lead_of(fi);
    let (tj, cj) = lead_of(fj);
    let mi = ti.mono.div_into(lcm).expect("lead divides lcm");
    let mj = tj.mono.div_into(lcm).expect("lead divides lcm");
    let (u, v) = C::cross(ci, cj);
    fi.mul_term(&mi, &u).sub(&fj.mul_term(&mj, &v))
}

/// Compute the unique reduced Groebner basis of the submodule generated by
/// `input` (rank 1 for ideals) under degrevlex / position-over-term.
pub fn groebner_basis<C: Coeff>(input: &[MPoly<C>]) -> Vec<MPoly<C>> {
    let rank = input.iter().map(|p| p.rank()).max().unwrap_or(1);
    let mut basis: Vec<MPoly<C>> = Vec::new();
    let mut pairs = PairSet::new();
    for p in input {
        if p.is_zero() {
            continue;
        }
        let mut r = normal_form(p, &basis);
        if r.is_zero() {
            continue;
        }
        r.canonicalize();
        basis.push(r);
        update_pairs(&basis, &mut pairs, basis.len() - 1);
    }
    while let Some((i, j, pair)) = pairs.pop() {
        let s = s_poly(&basis[i], &basis[j], &pair.lcm);
        let mut r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        r.canonicalize();
        basis.push(r);
        update_pairs(&basis, &mut pairs, basis.len() - 1);
    }
    autoreduce(rank, basis)
}

/// Keep only elements whose lead is not divisible by another kept lead, then
/// tail-reduce each survivor against the others and canonicalize.  The result
/// is the unique reduced basis, sorted by descending lead term.
fn autoreduce<C: Coeff>(rank: u32, mut basis: Vec<MPoly<C>>) -> Vec<MPoly<C>> {
    let _ = rank;
    basis.sort_by(|a, b| lead_of(a).0.cmp(&lead_of(b).0));
    let mut kept: Vec<MPoly<C>> = Vec::new();
    'next: for g in basis {
        let (lg, _) = lead_of(&g);
        for k in &kept {
            if lead_of(k).0.divides(lg) {
                continue 'next;
            }
        }
        kept.push(g);
    }
    for idx in 0..kept.len() {
        let g = kept[idx].clone();
        let others: Vec<MPoly<C>> = kept
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, p)| p.clone())
            .collect();
        let mut r = normal_form(&g, &others);
        debug_assert!(!r.is_zero(), "minimal element cannot vanish");
        r.canonicalize();
        kept[idx] = r;
    }
    kept.sort_by(|a, b| lead_of(b).0.cmp(&lead_of(a).0));
    kept
}
