//! Gröbner bases and the ideal-theoretic predicates built on them.

mod engine;
mod harness;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, TermOrder, VarId};
use engine::{from_terms, to_terms, PairSet, Reducers, Terms};

pub use harness::{verify_decomposition, verify_ideal_minimality, DecompositionReport, MinimalityReport};

/// A reduced Gröbner basis: monic, minimal, tails fully reduced, sorted by
/// ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    basis: Vec<Polynomial>,
    red: Reducers,
}

/// Counters from one Buchberger run.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct GbStats {
    pub reductions: u64,
    pub pairs_processed: usize,
    pub pairs_created: usize,
}

impl GroebnerBasis {
    pub fn compute(gens: &[Polynomial], order: TermOrder, budget: &Budget) -> Result<GroebnerBasis> {
        GroebnerBasis::compute_with_stats(gens, order, budget).map(|(g, _)| g)
    }

    pub fn compute_with_stats(
        gens: &[Polynomial],
        order: TermOrder,
        budget: &Budget,
    ) -> Result<(GroebnerBasis, GbStats)> {
        let (terms, st) = engine::buchberger(gens, order, budget)?;
        let stats =
            GbStats { reductions: st.reductions, pairs_processed: st.pairs_processed, pairs_created: st.pairs_created };
        Ok((GroebnerBasis::from_reduced_terms(terms, order), stats))
    }

    fn from_reduced_terms(terms: Vec<Terms>, order: TermOrder) -> GroebnerBasis {
        let mut red = Reducers::default();
        for t in &terms {
            red.push(t.clone());
        }
        let basis = terms.into_iter().map(from_terms).collect();
        GroebnerBasis { order, basis, red }
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// The ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.red.lms.clone()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut steps = 0;
        let r = self.red.reduce(to_terms(f, self.order), self.order, true, &mut steps, u64::MAX, None);
        from_terms(r.expect("unlimited reduction"))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Normal form with the division quotients recorded.
    pub fn certify(&self, f: &Polynomial) -> MembershipCert {
        let mut steps = 0;
        let mut rec = Vec::new();
        let r = self
            .red
            .reduce(to_terms(f, self.order), self.order, true, &mut steps, u64::MAX, Some(&mut rec))
            .expect("unlimited reduction");
        let mut quotients: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); self.basis.len()];
        for (k, m, c) in rec {
            quotients[k].push((m, c));
        }
        let remainder = from_terms(r);
        MembershipCert {
            query: f.clone(),
            member: remainder.is_zero(),
            remainder,
            quotients: quotients.into_iter().map(Polynomial::from_terms).collect(),
        }
    }

    /// Every polynomial lies in the ideal.
    pub fn contains_all(&self, fs: &[Polynomial]) -> bool {
        fs.iter().all(|f| self.contains(f))
    }

    pub fn verified(&self) -> VerifiedBasis {
        VerifiedBasis { order: self.order, gens: self.basis.clone() }
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

/// Outcome of a membership query, replayable against the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct MembershipCert {
    pub query: Polynomial,
    pub remainder: Polynomial,
    pub member: bool,
    /// One quotient per basis element: `query = Σ q_i g_i + remainder`.
    pub quotients: Vec<Polynomial>,
}

impl MembershipCert {
    pub fn replay(&self, gb: &GroebnerBasis) -> bool {
        let mut acc = self.remainder.clone();
        for (q, g) in self.quotients.iter().zip(gb.basis()) {
            acc = &acc + &(q * g);
        }
        acc == self.query && self.member == self.remainder.is_zero()
    }
}

/// A generating set known to be a Gröbner basis under `order`.
#[derive(Clone, Debug)]
pub struct VerifiedBasis {
    pub order: TermOrder,
    pub gens: Vec<Polynomial>,
}

impl VerifiedBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| g.leading_monomial(self.order).expect("nonzero").clone()).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GbVerification {
    pub is_groebner: bool,
    /// Pairs `(i, j)` of generator indices whose S-polynomial left a nonzero
    /// remainder.
    pub failing_pairs: Vec<(usize, usize)>,
    pub pairs_reduced: usize,
    pub skipped_coprime: usize,
    pub skipped_chain: usize,
    pub all_leading_squarefree: bool,
}

/// Buchberger's criterion: every S-polynomial reduces to zero by division by
/// `gens`. The coprime and chain criteria only skip pairs.
pub fn verify_gb(gens: &[Polynomial], order: TermOrder, budget: &Budget) -> Result<GbVerification> {
    let gens: Vec<(usize, &Polynomial)> = gens.iter().enumerate().filter(|(_, g)| !g.is_zero()).collect();
    let mut red = Reducers::default();
    let mut pairs = PairSet::new(order, budget.max_pairs);
    // the chain criterion needs the pairs of every element, including those
    // whose leading monomial is redundant; keep a separate full divisor set
    let mut all = Reducers::default();
    let mut sugars = Vec::new();
    let mut ids = Vec::new();
    for &(k, g) in &gens {
        let t = to_terms(g, order);
        all.push(t.clone());
        // a leading monomial divisible by an earlier one still enters; GM
        // marks the larger one inactive
        let idx = red.push(t);
        ids.push(k);
        sugars.push(g.total_degree());
        pairs.update(&mut red, &sugars, idx)?;
    }
    let mut steps = 0;
    let mut failing = Vec::new();
    let mut reduced = 0;
    while let Some((i, j, _)) = pairs.pop() {
        reduced += 1;
        let s = engine::s_polynomial(&red, i, j, order);
        let r = all.reduce(s, order, false, &mut steps, budget.max_reductions, None)?;
        if !r.is_empty() {
            failing.push((ids[i], ids[j]));
        }
    }
    let all_sq = gens.iter().all(|(_, g)| g.leading_monomial(order).map(|m| m.is_squarefree()).unwrap_or(true));
    Ok(GbVerification {
        is_groebner: failing.is_empty(),
        failing_pairs: failing,
        pairs_reduced: reduced,
        skipped_coprime: pairs.skipped_coprime,
        skipped_chain: pairs.skipped_chain,
        all_leading_squarefree: all_sq,
    })
}

/// `gens` as a verified basis, or `Error::Unverified`.
pub fn verified_basis(gens: &[Polynomial], order: TermOrder, budget: &Budget) -> Result<VerifiedBasis> {
    if verify_gb(gens, order, budget)?.is_groebner {
        Ok(VerifiedBasis { order, gens: gens.iter().filter(|g| !g.is_zero()).cloned().collect() })
    } else {
        Err(Error::Unverified)
    }
}

/// Membership of `f` in the ideal of `gens` (lex).
pub fn member(f: &Polynomial, gens: &[Polynomial], budget: &Budget) -> Result<MembershipCert> {
    Ok(GroebnerBasis::compute(gens, TermOrder::Lex, budget)?.certify(f))
}

/// `⟨i⟩ ⊆ ⟨j⟩`.
pub fn contains(i: &[Polynomial], j: &[Polynomial], budget: &Budget) -> Result<bool> {
    let gb = GroebnerBasis::compute(j, TermOrder::Lex, budget)?;
    Ok(gb.contains_all(i))
}

/// Same ideal: identical reduced bases.
pub fn equal(i: &[Polynomial], j: &[Polynomial], budget: &Budget) -> Result<bool> {
    let a = GroebnerBasis::compute(i, TermOrder::Lex, budget)?;
    let b = GroebnerBasis::compute(j, TermOrder::Lex, budget)?;
    Ok(a == b)
}

/// An auxiliary variable unused by every polynomial given.
pub fn fresh_aux(polys: &[&[Polynomial]]) -> VarId {
    let max = polys.iter().flat_map(|fs| fs.iter()).flat_map(|f| f.variables()).filter_map(VarId::aux_index).max();
    VarId::aux(max.map_or(0, |m| m + 1))
}

/// Generators of `⟨i⟩ ∩ ⟨j⟩`: eliminate `y` from `y·I + (1-y)·J` under the
/// block order with `y` greatest, then lex.
pub fn intersect(i: &[Polynomial], j: &[Polynomial], budget: &Budget) -> Result<Vec<Polynomial>> {
    let y = Polynomial::var(fresh_aux(&[i, j]));
    let one_minus_y = &Polynomial::one() - &y;
    let mut gens: Vec<Polynomial> = i.iter().map(|f| &y * f).collect();
    gens.extend(j.iter().map(|g| &one_minus_y * g));
    let gb = GroebnerBasis::compute(&gens, TermOrder::Elimination, budget)?;
    let yv = fresh_aux(&[i, j]);
    Ok(gb.basis().iter().filter(|f| !f.variables().contains(&yv)).cloned().collect())
}

/// `f ∈ √⟨gens⟩` iff `1 ∈ ⟨gens⟩ + ⟨1 - y f⟩`.
pub fn radical_member(f: &Polynomial, gens: &[Polynomial], budget: &Budget) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let y = Polynomial::var(fresh_aux(&[gens, std::slice::from_ref(f)]));
    let mut all = gens.to_vec();
    all.push(&Polynomial::one() - &(&y * f));
    let gb = GroebnerBasis::compute(&all, TermOrder::DegRevLex, budget)?;
    Ok(gb.is_unit())
}
