//! Ideal-level validation of the decomposition and of the minimality
//! predicate on tiny instances.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::Value;

use super::{intersect, radical_member, verify_gb, GroebnerBasis};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::grid::{enumerate_minimal, CombType, GridParams, GridPoint, ZeroSet};
use crate::hypergraph::{build_hs, closure};
use crate::ideals::{build_fs, build_hypergraph_ideal, build_ic, params_json};
use crate::par::par_map;
use crate::poly::{Polynomial, TermOrder};
use crate::report::{status_of_error, Status};

/// `t = d = 2` with `k2` in `{2, 3}`, or `t = d = k2 = 3`; always `k1 = 2`.
pub fn tiny_guard(p: &GridParams) -> Result<()> {
    let ok = p.k1 == 2 && ((p.t == 2 && p.d == 2 && (p.k2 == 2 || p.k2 == 3)) || (p.t == 3 && p.d == 3 && p.k2 == 3));
    if ok {
        Ok(())
    } else {
        Err(Error::Params(format!(
            "ideal-level harness limited to k1=2 with t=d=2, k2 in {{2,3}} or t=d=k2=3; got d={} k1={} k2={} t={}",
            p.d, p.k1, p.k2, p.t
        )))
    }
}

/// Per-component findings.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentCheck {
    pub zero_set: String,
    pub comb_type: String,
    pub generators: usize,
    /// `I_C` lies in the component.
    pub contains_ic: bool,
    /// The natural generators already form a Gröbner basis.
    pub generators_are_gb: bool,
    pub leading_squarefree: bool,
    /// The natural generators and the closed hypergraph give the same ideal.
    pub matches_hypergraph: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub params: Value,
    pub status: Status,
    pub components: Vec<ComponentCheck>,
    pub ic_in_every_component: bool,
    /// Generators of the iterated intersection, in text form.
    pub intersection: Vec<String>,
    pub radical_failures: Vec<String>,
    pub intersection_in_radical: Option<bool>,
    /// Adding a type `(0,1)` component leaves the intersection unchanged.
    pub nonminimal_redundant: Option<bool>,
    /// Set when a cap stopped the run; the stage reached.
    pub budget_stage: Option<String>,
}

/// Runs the four-stage decomposition check on the minimal zero sets.
pub fn verify_decomposition(p: &GridParams, budget: &Budget, threads: usize) -> Result<DecompositionReport> {
    tiny_guard(p)?;
    let mut rep = DecompositionReport {
        params: params_json(p),
        status: Status::Fail,
        components: Vec::new(),
        ic_in_every_component: false,
        intersection: Vec::new(),
        radical_failures: Vec::new(),
        intersection_in_radical: None,
        nonminimal_redundant: None,
        budget_stage: None,
    };
    let mut stage = "components";
    match decomposition_stages(p, budget, threads, &mut rep, &mut stage) {
        Ok(()) => {
            let ok = rep.ic_in_every_component
                && rep.intersection_in_radical == Some(true)
                && rep.nonminimal_redundant == Some(true)
                && rep.components.iter().all(|c| c.generators_are_gb && c.leading_squarefree && c.matches_hypergraph);
            rep.status = Status::from_bool(ok);
            Ok(rep)
        }
        Err(e) if e.is_budget() => {
            rep.status = status_of_error(&e);
            rep.budget_stage = Some(stage.to_string());
            Ok(rep)
        }
        Err(e) => Err(e),
    }
}

fn minimal_sets(p: &GridParams) -> Result<Vec<(CombType, ZeroSet)>> {
    Ok(enumerate_minimal(p)?.into_iter().flat_map(|(c, sets)| sets.into_iter().map(move |s| (c, s))).collect())
}

fn decomposition_stages(
    p: &GridParams,
    budget: &Budget,
    threads: usize,
    rep: &mut DecompositionReport,
    stage: &mut &'static str,
) -> Result<()> {
    let ic = build_ic(p).generators;
    let sets = minimal_sets(p)?;
    let fs: Vec<Vec<Polynomial>> =
        sets.iter().map(|(_, s)| build_fs(s).map(|i| i.generators)).collect::<Result<_>>()?;

    let checks = par_map(&sets.iter().zip(&fs).collect::<Vec<_>>(), threads, |((c, s), gens)| {
        component_check(*c, s, gens, &ic, budget)
    });
    for c in checks {
        rep.components.push(c?);
    }
    rep.ic_in_every_component = rep.components.iter().all(|c| c.contains_ic);

    *stage = "intersection";
    let mut n = fs[0].clone();
    for g in &fs[1..] {
        n = intersect(&n, g, budget)?;
    }
    rep.intersection = n.iter().map(ToString::to_string).collect();

    *stage = "radical membership";
    let verdicts = par_map(&n, threads, |f| radical_member(f, &ic, budget));
    for (f, v) in n.iter().zip(verdicts) {
        if !v? {
            rep.radical_failures.push(f.to_string());
        }
    }
    rep.intersection_in_radical = Some(rep.radical_failures.is_empty());

    *stage = "non-minimal component";
    let extra = build_fs(&ZeroSet::new(*p, [GridPoint::new(1, 1)])?)?.generators;
    let widened = intersect(&n, &extra, budget)?;
    let a = GroebnerBasis::compute(&n, TermOrder::Lex, budget)?;
    let b = GroebnerBasis::compute(&widened, TermOrder::Lex, budget)?;
    rep.nonminimal_redundant = Some(a == b);
    Ok(())
}

fn component_check(
    c: CombType,
    s: &ZeroSet,
    gens: &[Polynomial],
    ic: &[Polynomial],
    budget: &Budget,
) -> Result<ComponentCheck> {
    let gb = GroebnerBasis::compute(gens, TermOrder::Lex, budget)?;
    let v = verify_gb(gens, TermOrder::Lex, budget)?;
    let hyper = build_hypergraph_ideal(&closure(&build_hs(s)))?.generators;
    let hgb = GroebnerBasis::compute(&hyper, TermOrder::Lex, budget)?;
    Ok(ComponentCheck {
        zero_set: format!("{{{s}}}"),
        comb_type: c.to_string(),
        generators: gens.len(),
        contains_ic: gb.contains_all(ic),
        generators_are_gb: v.is_groebner,
        leading_squarefree: v.all_leading_squarefree,
        matches_hypergraph: gb == hgb,
    })
}

/// One ideal class: zero sets sharing a reduced basis.
#[derive(Clone, Debug, Serialize)]
pub struct IdealClass {
    pub zero_sets: Vec<String>,
    pub basis_size: usize,
    pub predicate_minimal: bool,
    pub containment_minimal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalityReport {
    pub params: Value,
    pub status: Status,
    pub sets: usize,
    pub classes: usize,
    pub containment_checks: usize,
    /// Classes that are minimal under containment but hold no
    /// predicate-minimal set, and the reverse.
    pub only_ideal_minimal: Vec<Vec<String>>,
    pub only_predicate_minimal: Vec<Vec<String>>,
    /// Classes mixing predicate-minimal and other sets.
    pub mixed_classes: Vec<Vec<String>>,
    /// `(S, S')` with `S' ⊊ S` both minimal of different types, and whether
    /// containment failed both ways.
    pub spot_check: Option<(String, String, bool)>,
    pub minimal_classes: Vec<IdealClass>,
    pub budget_stage: Option<String>,
}

/// Every subset of `[2] x [k2]`, in mask order.
fn all_sets(p: &GridParams) -> Result<Vec<ZeroSet>> {
    let pts: Vec<GridPoint> = p.grid_points();
    (0u32..1 << pts.len())
        .map(|mask| ZeroSet::new(*p, pts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &q)| q)))
        .collect()
}

/// Compares containment-minimal ideals among all `I_S` with the sets the
/// predicate calls minimal.
pub fn verify_ideal_minimality(p: &GridParams, budget: &Budget, threads: usize) -> Result<MinimalityReport> {
    tiny_guard(p)?;
    let mut rep = MinimalityReport {
        params: params_json(p),
        status: Status::Fail,
        sets: 0,
        classes: 0,
        containment_checks: 0,
        only_ideal_minimal: Vec::new(),
        only_predicate_minimal: Vec::new(),
        mixed_classes: Vec::new(),
        spot_check: None,
        minimal_classes: Vec::new(),
        budget_stage: None,
    };
    match minimality_stages(p, budget, threads, &mut rep) {
        Ok(()) => {
            let spot = rep.spot_check.as_ref().is_none_or(|s| s.2);
            rep.status =
                Status::from_bool(rep.only_ideal_minimal.is_empty() && rep.only_predicate_minimal.is_empty() && spot);
            Ok(rep)
        }
        Err(e) if e.is_budget() => {
            rep.status = Status::Budget;
            rep.budget_stage = Some("ideal classes".into());
            Ok(rep)
        }
        Err(e) => Err(e),
    }
}

fn minimality_stages(p: &GridParams, budget: &Budget, threads: usize, rep: &mut MinimalityReport) -> Result<()> {
    let sets = all_sets(p)?;
    rep.sets = sets.len();
    let bases: Vec<GroebnerBasis> = par_map(&sets, threads, |s| {
        let gens = build_hypergraph_ideal(&closure(&build_hs(s)))?.generators;
        GroebnerBasis::compute(&gens, TermOrder::Lex, budget)
    })
    .into_iter()
    .collect::<Result<_>>()?;

    // group by reduced basis
    let mut reps: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (i, gb) in bases.iter().enumerate() {
        match reps.iter().position(|&r| bases[r] == *gb) {
            Some(k) => members[k].push(i),
            None => {
                reps.push(i);
                members.push(vec![i]);
            }
        }
    }
    rep.classes = reps.len();

    // class a is not minimal when some other class lies inside it
    let idx: Vec<usize> = (0..reps.len()).collect();
    let minimal: Vec<bool> = par_map(&idx, threads, |&a| {
        !idx.iter().any(|&b| b != a && bases[reps[a]].contains_all(bases[reps[b]].basis()))
    });
    rep.containment_checks = reps.len() * (reps.len() - 1);

    let names = |k: usize| -> Vec<String> { members[k].iter().map(|&i| format!("{{{}}}", sets[i])).collect() };
    for k in 0..reps.len() {
        let preds: Vec<bool> = members[k].iter().map(|&i| sets[i].is_minimal()).collect::<Result<_>>()?;
        let any_pred = preds.iter().any(|&b| b);
        if any_pred && preds.iter().any(|&b| !b) {
            rep.mixed_classes.push(names(k));
        }
        match (minimal[k], any_pred) {
            (true, false) => rep.only_ideal_minimal.push(names(k)),
            (false, true) => rep.only_predicate_minimal.push(names(k)),
            _ => {}
        }
        if minimal[k] || any_pred {
            rep.minimal_classes.push(IdealClass {
                zero_sets: names(k),
                basis_size: bases[reps[k]].len(),
                predicate_minimal: any_pred,
                containment_minimal: minimal[k],
            });
        }
    }

    rep.spot_check = spot_check(&sets, &bases)?;
    Ok(())
}

fn spot_check(sets: &[ZeroSet], bases: &[GroebnerBasis]) -> Result<Option<(String, String, bool)>> {
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() || !s.is_minimal()? {
            continue;
        }
        for (j, s2) in sets.iter().enumerate() {
            let sub: BTreeSet<_> = s2.points().clone();
            if j == i || !sub.is_subset(s.points()) || !s2.is_minimal()? || s2.comb_type()? == s.comb_type()? {
                continue;
            }
            let neither = !bases[i].contains_all(bases[j].basis()) && !bases[j].contains_all(bases[i].basis());
            return Ok(Some((format!("{{{s}}}"), format!("{{{s2}}}"), neither)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_rejects_large_instances() {
        let p = GridParams::new(3, 2, 4, 3).unwrap();
        assert!(matches!(verify_decomposition(&p, &Budget::default(), 1), Err(Error::Params(_))));
        let p = GridParams::new(2, 3, 2, 2).unwrap();
        assert!(verify_ideal_minimality(&p, &Budget::default(), 1).is_err());
    }

    #[test]
    fn smallest_decomposition_passes() {
        let p = GridParams::new(2, 2, 2, 2).unwrap();
        let r = verify_decomposition(&p, &Budget::default(), 2).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:#?}");
        assert_eq!(r.components.len(), 3);
    }

    #[test]
    fn smallest_minimality_agrees() {
        let p = GridParams::new(2, 2, 2, 2).unwrap();
        let r = verify_ideal_minimality(&p, &Budget::default(), 2).unwrap();
        assert_eq!(r.sets, 16);
        assert_eq!(r.status, Status::Pass, "{r:#?}");
    }

    #[test]
    fn starved_budget_reports_budget() {
        let p = GridParams::new(2, 2, 3, 2).unwrap();
        let b = Budget { max_pairs: 3, max_reductions: 3, max_nodes: 3 };
        let r = verify_decomposition(&p, &b, 1).unwrap();
        assert_eq!(r.status, Status::Budget);
        assert!(r.budget_stage.is_some());
    }
}
