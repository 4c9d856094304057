//! Krull dimension and degree of squarefree monomial ideals through their
//! Stanley-Reisner complexes, and the closed-form dimension counts.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::grid::{is_minimal_type, minimal_types, representative, CombType, GridParams, ZeroSet};
use crate::groebner::{verified_basis, GroebnerBasis, VerifiedBasis};
use crate::ideals::build_fs;
use crate::poly::{Monomial, TermOrder, VarId};

/// Widest ambient ring the bitmask search handles.
pub const MAX_AMBIENT: usize = 128;

type Mask = u128;

/// A monomial ideal kept as minimal supports over an indexed variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Vec<VarId>,
    supports: Vec<Mask>,
    squarefree: bool,
}

impl MonomialIdeal {
    /// Supports are minimalized; `vars` fixes the ambient ring.
    pub fn new(vars: Vec<VarId>, monomials: &[Monomial]) -> Result<MonomialIdeal> {
        if vars.len() > MAX_AMBIENT {
            return Err(Error::Dimension(format!("{} variables exceed the search width {MAX_AMBIENT}", vars.len())));
        }
        let index: BTreeMap<VarId, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut supports = Vec::with_capacity(monomials.len());
        let mut squarefree = true;
        for m in monomials {
            squarefree &= m.is_squarefree();
            let mut mask: Mask = 0;
            for v in m.variables() {
                let i =
                    index.get(&v).ok_or_else(|| Error::Dimension(format!("variable {v} outside the ambient ring")))?;
                mask |= 1 << i;
            }
            supports.push(mask);
        }
        Ok(MonomialIdeal { vars, supports: minimalize(supports), squarefree })
    }

    /// Every matrix variable of the grid, in matrix order.
    pub fn ambient(p: &GridParams) -> Vec<VarId> {
        let pts = p.grid_points();
        (1..=p.d).flat_map(|r| pts.iter().map(move |&q| VarId::x(r, q))).collect()
    }

    pub fn num_variables(&self) -> usize {
        self.vars.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    /// Supports as variable lists.
    pub fn supports(&self) -> Vec<Vec<VarId>> {
        self.supports.iter().map(|&m| bits(m).map(|i| self.vars[i]).collect()).collect()
    }

    /// Number of generators that are single variables.
    pub fn variable_generators(&self) -> usize {
        self.supports.iter().filter(|m| m.count_ones() == 1).count()
    }

    fn require_squarefree(&self) -> Result<()> {
        if self.squarefree {
            Ok(())
        } else {
            Err(Error::Hypothesis("the monomial ideal is not squarefree".into()))
        }
    }
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

fn minimalize(mut s: Vec<Mask>) -> Vec<Mask> {
    s.sort_by_key(|m| (m.count_ones(), *m));
    s.dedup();
    let mut out: Vec<Mask> = Vec::new();
    for m in s {
        if !out.iter().any(|&o| o & !m == 0) {
            out.push(m);
        }
    }
    out
}

/// Leading-monomial ideal of a verified basis, over every matrix variable.
pub fn initial_ideal(gb: &VerifiedBasis, p: &GridParams) -> Result<MonomialIdeal> {
    MonomialIdeal::new(MonomialIdeal::ambient(p), &gb.leading_monomials())
}

/// Dimension and face count of the top-dimensional faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCount {
    pub dim: usize,
    pub degree: Option<u64>,
    pub nodes: u64,
}

struct FaceSearch {
    count_all: bool,
    best: usize,
    count: u64,
    nodes: u64,
    limit: u64,
}

impl FaceSearch {
    /// `edges` are the supports not yet hit by an excluded vertex.
    fn run(&mut self, inside: Mask, free: Mask, edges: &[Mask]) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::Budget(format!("face search node cap {} reached", self.limit)));
        }
        let mut free = free;
        // forced exclusions: an edge with one free vertex left, rest inside
        let mut live: Vec<Mask> = edges.to_vec();
        loop {
            let mut forced: Mask = 0;
            for &e in &live {
                let f = e & free;
                if f == 0 {
                    // e is inside the face
                    return Ok(());
                }
                if f.count_ones() == 1 && e & !(inside | free) == 0 {
                    forced |= f;
                }
            }
            if forced == 0 {
                break;
            }
            free &= !forced;
            live.retain(|&e| e & forced == 0);
        }
        live.retain(|&e| e & !(inside | free) == 0);

        let packing = disjoint_packing(&live, free);
        let ub = (inside | free).count_ones() as usize - packing;
        if ub < self.best || (!self.count_all && ub == self.best && self.count > 0) {
            return Ok(());
        }
        // vertex of highest occurrence among live edges
        let mut occ = [0u32; MAX_AMBIENT];
        for &e in &live {
            for i in bits(e & free) {
                occ[i] += 1;
            }
        }
        let pick = bits(free).max_by_key(|&i| (occ[i], std::cmp::Reverse(i)));
        match pick {
            Some(v) if occ[v] > 0 => {
                let bit: Mask = 1 << v;
                self.run(inside | bit, free & !bit, &live)?;
                let rest: Vec<Mask> = live.iter().copied().filter(|&e| e & bit == 0).collect();
                self.run(inside, free & !bit, &rest)
            }
            _ => {
                let size = (inside | free).count_ones() as usize;
                if size > self.best {
                    self.best = size;
                    self.count = 1;
                } else if size == self.best {
                    self.count += 1;
                }
                Ok(())
            }
        }
    }
}

/// Greedy count of edges with pairwise disjoint free parts; each forces a
/// distinct exclusion.
fn disjoint_packing(edges: &[Mask], free: Mask) -> usize {
    let mut parts: Vec<Mask> = edges.iter().map(|&e| e & free).collect();
    parts.sort_by_key(|m| m.count_ones());
    let mut used: Mask = 0;
    let mut n = 0;
    for f in parts {
        if f & used == 0 {
            used |= f;
            n += 1;
        }
    }
    n
}

fn face_search(m: &MonomialIdeal, count_all: bool, budget: &Budget) -> Result<FaceCount> {
    m.require_squarefree()?;
    let n = m.num_variables();
    let all: Mask = if n == MAX_AMBIENT { Mask::MAX } else { (1 << n) - 1 };
    let mut s = FaceSearch { count_all, best: 0, count: 0, nodes: 0, limit: budget.max_nodes };
    s.run(0, all, &m.supports)?;
    Ok(FaceCount { dim: s.best, degree: count_all.then_some(s.count), nodes: s.nodes })
}

/// Largest face of the Stanley-Reisner complex.
pub fn monomial_dim(m: &MonomialIdeal, budget: &Budget) -> Result<usize> {
    face_search(m, false, budget).map(|f| f.dim)
}

/// Number of top-dimensional faces, which is the degree.
pub fn monomial_degree(m: &MonomialIdeal, budget: &Budget) -> Result<u64> {
    face_search(m, true, budget).map(|f| f.degree.expect("counted"))
}

/// Dimension with the face count when `with_degree`.
pub fn monomial_dim_degree(m: &MonomialIdeal, with_degree: bool, budget: &Budget) -> Result<FaceCount> {
    face_search(m, with_degree, budget)
}

/// Smallest set of variables meeting every support, by branching over the
/// vertices of a smallest unhit support.
pub fn min_vertex_cover(m: &MonomialIdeal, budget: &Budget) -> Result<usize> {
    fn go(edges: &[Mask], banned: Mask, size: usize, best: &mut usize, nodes: &mut u64, limit: u64) -> Result<()> {
        *nodes += 1;
        if *nodes > limit {
            return Err(Error::Budget(format!("vertex cover node cap {limit} reached")));
        }
        let Some(&e) = edges.iter().min_by_key(|e| (**e & !banned).count_ones()) else {
            *best = (*best).min(size);
            return Ok(());
        };
        let cand = e & !banned;
        if cand == 0 || size + disjoint_packing(edges, !banned) >= *best {
            return Ok(());
        }
        let mut banned = banned;
        for v in bits(cand) {
            let bit: Mask = 1 << v;
            let rest: Vec<Mask> = edges.iter().copied().filter(|&x| x & bit == 0).collect();
            go(&rest, banned, size + 1, best, nodes, limit)?;
            banned |= bit;
        }
        Ok(())
    }
    let mut best = m.num_variables() + 1;
    let mut nodes = 0;
    go(&m.supports, 0, 0, &mut best, &mut nodes, budget.max_nodes)?;
    Ok(best.min(m.num_variables()))
}

/// Closed-form dimension of the component of type `c`: the empty type uses
/// the hidden-rank count, nonempty minimal types need `k1 = 2` and `d = t`.
pub fn dim_formula(p: &GridParams, c: CombType) -> Result<usize> {
    let (d, k1, k2, t) = (p.d as i64, p.k1 as i64, p.k2 as i64, p.t as i64);
    let v = if c.is_empty_type() {
        (t - 1) * (d + k2) + k2 * (k1 - 1) - (t - 1) * (t - 1)
    } else {
        if p.k1 != 2 {
            return Err(Error::Hypothesis(format!("nonempty-type dimension needs k1 = 2, got k1 = {}", p.k1)));
        }
        if p.d != p.t {
            return Err(Error::Hypothesis(format!(
                "nonempty-type dimension needs d = t, got d = {}, t = {}",
                p.d, p.t
            )));
        }
        if !is_minimal_type(p, c) {
            return Err(Error::Hypothesis(format!("type {c} is not minimal for {p}")));
        }
        t * t + (t - 1) * k2 - (t - 1) * (t - 1) - 1
    };
    Ok(v as usize)
}

/// Published census for `d = t = 4`, `k1 = 2`, `k2 = 6`:
/// `(u, v, number of sets, dimension, degree)`.
pub const PUBLISHED_CENSUS: [(usize, usize, u128, usize, u64); 7] = [
    (0, 0, 1, 27, 34560),
    (1, 1, 30, 24, 1410),
    (1, 2, 120, 24, 606),
    (1, 3, 120, 24, 129),
    (2, 2, 90, 24, 194),
    (2, 3, 120, 24, 15),
    (3, 3, 20, 24, 1),
];

/// The published census row for `c`, when `p` is the tabulated instance.
pub fn published_row(p: &GridParams, c: CombType) -> Option<(u128, usize, u64)> {
    if (p.d, p.k1, p.k2, p.t) != (4, 2, 6, 4) {
        return None;
    }
    PUBLISHED_CENSUS.iter().find(|r| (r.0, r.1) == (c.u, c.v)).map(|r| (r.2, r.3, r.4))
}

/// One row of the dimension comparison.
#[derive(Clone, Debug, Serialize)]
pub struct DimCheck {
    #[serde(rename = "type")]
    pub comb_type: [usize; 2],
    pub representative: String,
    pub dim_formula: usize,
    pub dim_initial: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_initial: Option<u64>,
    pub agree: bool,
    /// Natural generators already a Gröbner basis (else one was computed).
    pub generators_gb: bool,
    pub variable_generators: usize,
    pub min_vertex_cover: usize,
    /// `dim + cover = number of variables`.
    pub duality: bool,
    pub nodes: u64,
}

/// Desk-scale guard: `k1 = 2`, `d = t`, and `t <= 3, k2 <= 5` or
/// `t = 4, k2 = 6`.
pub fn dims_guard(p: &GridParams) -> Result<()> {
    let ok = p.k1 == 2 && p.d == p.t && ((p.t <= 3 && p.k2 <= 5) || (p.t == 4 && p.k2 == 6));
    if ok {
        Ok(())
    } else {
        Err(Error::Params(format!("dimension checks limited to k1=2, d=t with t<=3, k2<=5 or t=4, k2=6; got {p}")))
    }
}

/// Initial ideal of the natural generators of `I_S` (Gröbner-completed when
/// they are not a basis), with the flag saying which.
pub fn initial_ideal_of(s: &ZeroSet, budget: &Budget) -> Result<(MonomialIdeal, bool)> {
    let p = *s.params();
    let gens = build_fs(s)?.generators;
    let (vb, natural) = match verified_basis(&gens, TermOrder::Lex, budget) {
        Ok(vb) => (vb, true),
        Err(Error::Unverified) => (GroebnerBasis::compute(&gens, TermOrder::Lex, budget)?.verified(), false),
        Err(e) => return Err(e),
    };
    Ok((initial_ideal(&vb, &p)?, natural))
}

/// Dimension of one type through its representative.
pub fn check_type(p: &GridParams, c: CombType, with_degree: bool, budget: &Budget) -> Result<DimCheck> {
    let s = representative(c, p)?;
    let formula = dim_formula(p, c)?;
    let (m, natural) = initial_ideal_of(&s, budget)?;
    let fc = monomial_dim_degree(&m, with_degree, budget)?;
    let cover = min_vertex_cover(&m, budget)?;
    Ok(DimCheck {
        comb_type: [c.u, c.v],
        representative: format!("{{{s}}}"),
        dim_formula: formula,
        dim_initial: fc.dim,
        degree_initial: fc.degree,
        agree: fc.dim == formula,
        generators_gb: natural,
        variable_generators: m.variable_generators(),
        min_vertex_cover: cover,
        duality: fc.dim + cover == m.num_variables(),
        nodes: fc.nodes,
    })
}

/// Every minimal type of `p`, formula against initial ideal.
pub fn check_dims(p: &GridParams, with_degree: bool, budget: &Budget) -> Result<Vec<DimCheck>> {
    dims_guard(p)?;
    minimal_types(p)?.into_iter().map(|c| check_type(p, c, with_degree, budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::verified_basis;
    use crate::ideals::build_f_empty;

    fn vars(n: usize) -> Vec<VarId> {
        (0..n as u32).map(VarId::aux).collect()
    }

    fn mono(vs: &[u32]) -> Monomial {
        Monomial::from_exponents(vs.iter().map(|&i| (VarId::aux(i), 1)))
    }

    /// Exhaustive face enumeration.
    fn brute(m: &MonomialIdeal) -> (usize, u64) {
        let n = m.num_variables();
        let mut best = (0, 0);
        for w in 0u128..1 << n {
            if m.supports.iter().any(|&e| e & !w == 0) {
                continue;
            }
            let k = w.count_ones() as usize;
            if k > best.0 {
                best = (k, 1);
            } else if k == best.0 {
                best.1 += 1;
            }
        }
        best
    }

    #[test]
    fn trivial_ideals() {
        let b = Budget::default();
        let empty = MonomialIdeal::new(vars(5), &[]).unwrap();
        assert_eq!(monomial_dim(&empty, &b).unwrap(), 5);
        assert_eq!(monomial_degree(&empty, &b).unwrap(), 1);
        let vs = MonomialIdeal::new(vars(6), &[mono(&[0]), mono(&[3]), mono(&[4])]).unwrap();
        assert_eq!(monomial_dim(&vs, &b).unwrap(), 3);
        assert_eq!(monomial_degree(&vs, &b).unwrap(), 1);
        assert_eq!(min_vertex_cover(&vs, &b).unwrap(), 3);
        // a 4-cycle: dim 2, two facets
        let cyc = MonomialIdeal::new(vars(4), &[mono(&[0, 1]), mono(&[1, 2]), mono(&[2, 3]), mono(&[0, 3])]).unwrap();
        assert_eq!(monomial_dim(&cyc, &b).unwrap(), 2);
        assert_eq!(monomial_degree(&cyc, &b).unwrap(), 2);
    }

    #[test]
    fn supports_are_minimalized() {
        let m = MonomialIdeal::new(vars(4), &[mono(&[0, 1, 2]), mono(&[0, 1]), mono(&[0, 1])]).unwrap();
        assert_eq!(m.len(), 1);
        let sq = MonomialIdeal::new(vars(2), &[Monomial::from_exponents([(VarId::aux(0), 2)])]).unwrap();
        assert!(!sq.is_squarefree());
        assert!(monomial_dim(&sq, &Budget::default()).is_err());
    }

    #[test]
    fn node_cap_is_explicit() {
        let m = MonomialIdeal::new(vars(10), &[mono(&[0, 1]), mono(&[2, 3]), mono(&[4, 5])]).unwrap();
        let tiny = Budget { max_nodes: 2, ..Budget::default() };
        assert!(matches!(monomial_degree(&m, &tiny), Err(Error::Budget(_))));
    }

    #[test]
    fn smallest_empty_type_initial_ideal() {
        let p = GridParams::new(2, 2, 2, 2).unwrap();
        let vb = verified_basis(&build_f_empty(&p).unwrap().generators, TermOrder::Lex, &Budget::default()).unwrap();
        let m = initial_ideal(&vb, &p).unwrap();
        // diagonals of the 2-minors of a 2x4 matrix
        assert_eq!(m.len(), 6);
        assert!(m.supports().iter().all(|s| s.len() == 2));
        assert_eq!(monomial_dim(&m, &Budget::default()).unwrap(), 5);
        assert_eq!(dim_formula(&p, CombType::new(0, 0)).unwrap(), 5);
    }

    #[test]
    fn formula_values() {
        let p = GridParams::new(4, 2, 6, 4).unwrap();
        assert_eq!(dim_formula(&p, CombType::new(0, 0)).unwrap(), 27);
        for c in minimal_types(&p).unwrap().into_iter().filter(|c| !c.is_empty_type()) {
            assert_eq!(dim_formula(&p, c).unwrap(), 24);
        }
        let q = GridParams::new(3, 2, 4, 3).unwrap();
        assert_eq!(dim_formula(&q, CombType::new(0, 0)).unwrap(), 14);
        assert_eq!(dim_formula(&q, CombType::new(1, 1)).unwrap(), 12);
        let wide = GridParams::new(4, 2, 6, 3).unwrap();
        assert!(matches!(dim_formula(&wide, CombType::new(1, 1)), Err(Error::Hypothesis(m)) if m.contains("d = t")));
        let three = GridParams::new(3, 3, 4, 3).unwrap();
        assert!(matches!(dim_formula(&three, CombType::new(1, 1)), Err(Error::Hypothesis(m)) if m.contains("k1 = 2")));
        assert!(dim_formula(&p, CombType::new(0, 1)).is_err());
    }

    #[test]
    fn small_grids_agree() {
        for (t, k2) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)] {
            let p = GridParams::new(t, 2, k2, t).unwrap();
            for row in check_dims(&p, true, &Budget::default()).unwrap() {
                assert!(row.agree && row.duality, "{p} {row:?}");
                assert!(row.generators_gb, "{p} {row:?}");
            }
        }
    }

    #[test]
    fn relabeled_sets_share_dimension() {
        let p = GridParams::new(3, 2, 4, 3).unwrap();
        let b = Budget::default();
        let s = ZeroSet::parse(p, "2,1;1,3;1,4").unwrap();
        let c = match s.comb_type().unwrap() {
            crate::grid::TypeClass::Type(c) => c,
            _ => unreachable!(),
        };
        let (m, _) = initial_ideal_of(&s, &b).unwrap();
        let (r, _) = initial_ideal_of(&representative(c, &p).unwrap(), &b).unwrap();
        assert_eq!(monomial_dim(&m, &b).unwrap(), monomial_dim(&r, &b).unwrap());
        assert_eq!(monomial_degree(&m, &b).unwrap(), monomial_degree(&r, &b).unwrap());
    }

    #[test]
    fn full_row_type_drops_below_the_bound() {
        // non-minimal: the whole second row vanishes, leaving a rank <= 3
        // 4 x 6 block
        let p = GridParams::new(4, 2, 6, 4).unwrap();
        let b = Budget::default();
        let s = ZeroSet::parse(p, "2,1;2,2;2,3;2,4;2,5;2,6").unwrap();
        assert!(!s.is_minimal().unwrap());
        let (m, _) = initial_ideal_of(&s, &b).unwrap();
        assert_eq!(monomial_dim(&m, &b).unwrap(), 21);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        #[test]
        fn search_matches_enumeration(edges in proptest::collection::vec(proptest::collection::btree_set(0u32..10, 1..4), 0..12)) {
            let ms: Vec<Monomial> = edges.iter().map(|e| mono(&e.iter().copied().collect::<Vec<_>>())).collect();
            let m = MonomialIdeal::new(vars(10), &ms).unwrap();
            let b = Budget::default();
            let (dim, deg) = brute(&m);
            proptest::prop_assert_eq!(monomial_dim(&m, &b).unwrap(), dim);
            proptest::prop_assert_eq!(monomial_degree(&m, &b).unwrap(), deg);
            proptest::prop_assert_eq!(min_vertex_cover(&m, &b).unwrap() + dim, 10);
        }
    }
}
