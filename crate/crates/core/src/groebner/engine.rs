//! Buchberger's algorithm with the sugar strategy and the Gebauer-Möller
//! criteria, over terms kept sorted in the active term order.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, TermOrder, VarId};

pub(crate) type Terms = Vec<(Monomial, Rational)>;

/// Terms of `f` sorted descending in `order`.
pub(crate) fn to_terms(f: &Polynomial, order: TermOrder) -> Terms {
    let mut t = f.terms().to_vec();
    if !matches!(order, TermOrder::Lex | TermOrder::Elimination) {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

pub(crate) fn from_terms(t: Terms) -> Polynomial {
    Polynomial::from_terms(t)
}

fn var_bit(v: VarId) -> u64 {
    let r = v.rank();
    1u64 << ((r ^ (r >> 8) ^ (r >> 16) ^ (r >> 24)) % 64)
}

/// Bit signature for fast non-divisibility rejection.
pub(crate) fn signature(m: &Monomial) -> u64 {
    m.variables().fold(0, |acc, v| acc | var_bit(v))
}

/// `f - c * m * g`, all in `order`.
pub(crate) fn sub_mul(
    f: &[(Monomial, Rational)],
    c: &Rational,
    m: &Monomial,
    g: &[(Monomial, Rational)],
    order: TermOrder,
) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut next_g: Option<(Monomial, Rational)> = g.first().map(|(n, b)| (n.mul(m), -(b * c)));
    while i < f.len() {
        let Some((gm, gc)) = next_g.as_ref() else { break };
        match order.cmp(&f[i].0, gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.clone(), gc.clone()));
                j += 1;
                next_g = g.get(j).map(|(n, b)| (n.mul(m), -(b * c)));
            }
            Ordering::Equal => {
                let s = &f[i].1 + gc;
                if !s.is_zero() {
                    out.push((f[i].0.clone(), s));
                }
                i += 1;
                j += 1;
                next_g = g.get(j).map(|(n, b)| (n.mul(m), -(b * c)));
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    if let Some(first) = next_g {
        out.push(first);
        out.extend(g[j + 1..].iter().map(|(n, b)| (n.mul(m), -(b * c))));
    }
    out
}

pub(crate) fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in t.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// A reducer family with leading data cached. All members are monic.
#[derive(Clone, Debug, Default)]
pub(crate) struct Reducers {
    pub polys: Vec<Terms>,
    pub lms: Vec<Monomial>,
    pub sigs: Vec<u64>,
    pub active: Vec<bool>,
}

/// One recorded division step: `coef * mono * reducer[idx]`.
pub(crate) type QuotientStep = (usize, Monomial, Rational);

impl Reducers {
    pub fn push(&mut self, mut t: Terms) -> usize {
        make_monic(&mut t);
        self.lms.push(t[0].0.clone());
        self.sigs.push(signature(&t[0].0));
        self.polys.push(t);
        self.active.push(true);
        self.polys.len() - 1
    }

    pub fn find(&self, m: &Monomial) -> Option<usize> {
        let sig = signature(m);
        (0..self.polys.len()).find(|&k| self.active[k] && self.sigs[k] & !sig == 0 && self.lms[k].divides(m))
    }

    /// Division of `f`; `full` also reduces non-leading terms.
    pub fn reduce(
        &self,
        f: Terms,
        order: TermOrder,
        full: bool,
        steps: &mut u64,
        limit: u64,
        mut record: Option<&mut Vec<QuotientStep>>,
    ) -> Result<Terms> {
        let mut f = f;
        let mut pos = 0;
        let mut out: Terms = Vec::new();
        while pos < f.len() {
            let (m, c) = &f[pos];
            match self.find(m) {
                Some(k) => {
                    let q = self.lms[k].quotient_of(m).expect("divisor found");
                    let c = c.clone();
                    if let Some(rec) = record.as_deref_mut() {
                        rec.push((k, q.clone(), c.clone()));
                    }
                    f = sub_mul(&f[pos..], &c, &q, &self.polys[k], order);
                    pos = 0;
                    *steps += 1;
                    if *steps > limit {
                        return Err(Error::Budget(format!("reduction step cap {limit} reached")));
                    }
                }
                None => {
                    if !full && out.is_empty() {
                        return Ok(f.split_off(pos));
                    }
                    out.push(f[pos].clone());
                    pos += 1;
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
    alive: bool,
}

/// Heap key: smallest sugar, then smallest lcm, then creation order.
#[derive(Clone, Debug)]
struct PairKey {
    sugar: u32,
    lcm: Monomial,
    id: usize,
    order: TermOrder,
}

impl PartialEq for PairKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for PairKey {}
impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sugar
            .cmp(&other.sugar)
            .then_with(|| self.order.cmp(&self.lcm, &other.lcm))
            .then_with(|| self.id.cmp(&other.id))
    }
}

/// Gebauer-Möller pair bookkeeping over a reducer family.
pub(crate) struct PairSet {
    order: TermOrder,
    pairs: Vec<Pair>,
    heap: BinaryHeap<Reverse<PairKey>>,
    alive: usize,
    max_pairs: usize,
    /// Pairs discarded by the product (coprime) criterion.
    pub skipped_coprime: usize,
    /// Pairs discarded by the chain criteria.
    pub skipped_chain: usize,
}

impl PairSet {
    pub fn new(order: TermOrder, max_pairs: usize) -> PairSet {
        PairSet {
            order,
            pairs: Vec::new(),
            heap: BinaryHeap::new(),
            alive: 0,
            max_pairs,
            skipped_coprime: 0,
            skipped_chain: 0,
        }
    }

    /// Registers the new element `h` of `red` (already pushed, active) and
    /// updates the pair set and the active flags.
    pub fn update(&mut self, red: &mut Reducers, sugars: &[u32], h: usize) -> Result<()> {
        let hlm = red.lms[h].clone();
        let cands: Vec<(usize, Monomial, bool)> =
            (0..h).filter(|&g| red.active[g]).map(|g| (g, hlm.lcm(&red.lms[g]), hlm.coprime(&red.lms[g]))).collect();
        // criterion M / F over the new pairs
        let n = cands.len();
        let mut kept = vec![false; n];
        for a in 0..n {
            let (_, ref la, coprime) = cands[a];
            let dominated_later = (a + 1..n).any(|b| cands[b].1.divides(la));
            let dominated_kept = (0..a).any(|b| kept[b] && cands[b].1.divides(la));
            if coprime || !(dominated_later || dominated_kept) {
                kept[a] = true;
            } else {
                self.skipped_chain += 1;
            }
        }
        // criterion B over old pairs
        for p in self.pairs.iter_mut().filter(|p| p.alive) {
            if hlm.divides(&p.lcm) && hlm.lcm(&red.lms[p.i]) != p.lcm && hlm.lcm(&red.lms[p.j]) != p.lcm {
                p.alive = false;
                self.alive -= 1;
                self.skipped_chain += 1;
            }
        }
        for (a, (g, lcm, coprime)) in cands.into_iter().enumerate() {
            if !kept[a] {
                continue;
            }
            if coprime {
                self.skipped_coprime += 1;
                continue;
            }
            let deg_g = red.lms[g].degree();
            let sugar = (sugars[g] + lcm.degree() - deg_g).max(sugars[h] + lcm.degree() - hlm.degree());
            let id = self.pairs.len();
            self.heap.push(Reverse(PairKey { sugar, lcm: lcm.clone(), id, order: self.order }));
            self.pairs.push(Pair { i: g, j: h, lcm, sugar, alive: true });
            self.alive += 1;
        }
        if self.alive > self.max_pairs {
            return Err(Error::Budget(format!("pair queue exceeded {} pairs", self.max_pairs)));
        }
        for g in 0..h {
            if red.active[g] && hlm.divides(&red.lms[g]) {
                red.active[g] = false;
            }
        }
        Ok(())
    }

    /// Next live pair `(i, j, sugar)`.
    pub fn pop(&mut self) -> Option<(usize, usize, u32)> {
        while let Some(Reverse(key)) = self.heap.pop() {
            let p = &mut self.pairs[key.id];
            if p.alive {
                p.alive = false;
                self.alive -= 1;
                return Some((p.i, p.j, p.sugar));
            }
        }
        None
    }

    pub fn total_created(&self) -> usize {
        self.pairs.len()
    }
}

pub(crate) fn s_polynomial(red: &Reducers, i: usize, j: usize, order: TermOrder) -> Terms {
    let lcm = red.lms[i].lcm(&red.lms[j]);
    let qi = red.lms[i].quotient_of(&lcm).expect("lcm");
    let qj = red.lms[j].quotient_of(&lcm).expect("lcm");
    // both monic: S = qi * f_i - qj * f_j, leading terms cancel
    let fi: Terms = red.polys[i][1..].iter().map(|(m, c)| (m.mul(&qi), c.clone())).collect();
    sub_mul(&fi, &Rational::one(), &qj, &red.polys[j][1..], order)
}

pub(crate) struct BuchbergerStats {
    pub reductions: u64,
    pub pairs_processed: usize,
    pub pairs_created: usize,
}

/// The reduced Gröbner basis (monic, sorted by ascending leading monomial).
pub(crate) fn buchberger(
    gens: &[Polynomial],
    order: TermOrder,
    budget: &Budget,
) -> Result<(Vec<Terms>, BuchbergerStats)> {
    let mut input: Vec<Terms> = gens.iter().filter(|f| !f.is_zero()).map(|f| to_terms(f, order)).collect();
    input.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));
    let mut red = Reducers::default();
    let mut sugars: Vec<u32> = Vec::new();
    let mut pairs = PairSet::new(order, budget.max_pairs);
    let mut steps = 0u64;
    let unit = || vec![(Monomial::one(), Rational::one())];

    let insert =
        |h: Terms, sugar: u32, red: &mut Reducers, sugars: &mut Vec<u32>, pairs: &mut PairSet| -> Result<bool> {
            if h[0].0.is_one() {
                return Ok(true);
            }
            let idx = red.push(h);
            sugars.push(sugar);
            pairs.update(red, sugars, idx)?;
            Ok(false)
        };

    for f in input {
        let sugar = f.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        let h = red.reduce(f, order, true, &mut steps, budget.max_reductions, None)?;
        if h.is_empty() {
            continue;
        }
        if insert(h, sugar, &mut red, &mut sugars, &mut pairs)? {
            return Ok((
                vec![unit()],
                BuchbergerStats { reductions: steps, pairs_processed: 0, pairs_created: pairs.total_created() },
            ));
        }
    }
    let mut processed = 0;
    while let Some((i, j, sugar)) = pairs.pop() {
        processed += 1;
        let s = s_polynomial(&red, i, j, order);
        if s.is_empty() {
            continue;
        }
        let h = red.reduce(s, order, true, &mut steps, budget.max_reductions, None)?;
        if h.is_empty() {
            continue;
        }
        if insert(h, sugar, &mut red, &mut sugars, &mut pairs)? {
            return Ok((
                vec![unit()],
                BuchbergerStats { reductions: steps, pairs_processed: processed, pairs_created: pairs.total_created() },
            ));
        }
    }
    let stats = BuchbergerStats { reductions: steps, pairs_processed: processed, pairs_created: pairs.total_created() };
    Ok((interreduce(red, order, budget)?, stats))
}

/// Reduces the tails of the active (minimal) elements.
pub(crate) fn interreduce(red: Reducers, order: TermOrder, budget: &Budget) -> Result<Vec<Terms>> {
    let mut steps = 0;
    let mut out = Vec::new();
    for k in 0..red.polys.len() {
        if !red.active[k] {
            continue;
        }
        let lead = red.polys[k][0].clone();
        let tail = red.polys[k][1..].to_vec();
        let mut r = red.reduce(tail, order, true, &mut steps, budget.max_reductions, None)?;
        r.insert(0, lead);
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    #[test]
    fn sub_mul_cancels() {
        let f: Polynomial = "x_1_1_1*x_2_2_1 - x_1_2_1*x_2_1_1".parse().unwrap();
        let t = to_terms(&f, TermOrder::Lex);
        let r = sub_mul(&t, &rational(1, 1), &Monomial::one(), &t, TermOrder::Lex);
        assert!(r.is_empty());
        let two = sub_mul(&t, &rational(-1, 1), &Monomial::one(), &t, TermOrder::Lex);
        assert_eq!(from_terms(two), &f + &f);
    }

    #[test]
    fn grevlex_terms_sorted() {
        let f: Polynomial = "x_1_1_1 + x_2_1_1^3 + x_1_1_2^2".parse().unwrap();
        let t = to_terms(&f, TermOrder::DegRevLex);
        assert_eq!(t[0].0.degree(), 3);
        assert_eq!(t[2].0.degree(), 1);
    }
}
