//! Hypergraphs on the grid, the substitution closure, and the hypergraph
//! attached to a zero set.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{GridParams, GridPoint, ZeroSet};

/// An edge: a nonempty set of grid points, sorted by `(row, col)`.
pub type Edge = Vec<GridPoint>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    params: GridParams,
    edges: BTreeSet<Edge>,
}

fn canonical(mut e: Edge) -> Edge {
    e.sort();
    e.dedup();
    e
}

impl Hypergraph {
    pub fn new(params: GridParams) -> Hypergraph {
        Hypergraph { params, edges: BTreeSet::new() }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(params: GridParams, edges: I) -> Result<Hypergraph> {
        let mut h = Hypergraph::new(params);
        for e in edges {
            h.insert(e)?;
        }
        Ok(h)
    }

    /// Inserts an edge; returns whether it was new.
    pub fn insert(&mut self, edge: Edge) -> Result<bool> {
        let edge = canonical(edge);
        if edge.is_empty() {
            return Err(Error::Params("hypergraph edges must be nonempty".into()));
        }
        if let Some(p) =
            edge.iter().find(|p| p.row == 0 || p.row > self.params.k1 || p.col == 0 || p.col > self.params.k2)
        {
            return Err(Error::OutOfRange(format!("vertex ({p}) outside the grid")));
        }
        Ok(self.edges.insert(edge))
    }

    pub fn params(&self) -> &GridParams {
        &self.params
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, edge: &[GridPoint]) -> bool {
        self.edges.contains(&canonical(edge.to_vec()))
    }

    pub fn is_subgraph_of(&self, other: &Hypergraph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    /// Edges containing no other edge.
    pub fn minimal_edges(&self) -> BTreeSet<Edge> {
        self.edges
            .iter()
            .filter(|e| !self.edges.iter().any(|f| f.len() < e.len() && f.iter().all(|p| e.contains(p))))
            .cloned()
            .collect()
    }

    /// Whether `edge` contains some edge of the hypergraph (itself included).
    pub fn covers(&self, edge: &[GridPoint]) -> bool {
        self.edges.iter().any(|f| f.len() <= edge.len() && f.iter().all(|p| edge.contains(p)))
    }

    /// One edge per line, lines sorted as strings.
    pub fn serialize(&self) -> String {
        let mut lines: Vec<String> = self.edges.iter().map(|e| edge_to_string(e)).collect();
        lines.sort();
        let mut out = lines.join("\n");
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }

    pub fn parse(params: GridParams, text: &str) -> Result<Hypergraph> {
        let mut h = Hypergraph::new(params);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            h.insert(parse_edge(line)?)?;
        }
        Ok(h)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// `{(1,1),(2,2)}`.
pub fn edge_to_string(e: &[GridPoint]) -> String {
    let parts: Vec<String> = e.iter().map(|p| format!("({},{})", p.row, p.col)).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn parse_edge(s: &str) -> Result<Edge> {
    let bad = || Error::Parse(format!("bad edge {s:?}"));
    let inner = s.trim().strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
    let mut edge = Vec::new();
    for chunk in inner.split(')').map(str::trim).filter(|c| !c.is_empty()) {
        let pair = chunk.trim_start_matches(',').trim().strip_prefix('(').ok_or_else(bad)?;
        let (r, c) = pair.split_once(',').ok_or_else(bad)?;
        let r = r.trim().parse().map_err(|_| bad())?;
        let c = c.trim().parse().map_err(|_| bad())?;
        edge.push(GridPoint::new(r, c));
    }
    Ok(canonical(edge))
}

/// Least fixpoint of: for edges `{i, j}` and `E ∋ i` with `|E| >= 2` and
/// `j ∉ E`, add `(E \ {i}) ∪ {j}`.
pub fn closure(h: &Hypergraph) -> Hypergraph {
    let mut edges: Vec<Edge> = h.edges.iter().cloned().collect();
    let mut known: BTreeSet<Edge> = h.edges.clone();
    // vertex -> ids of edges of size >= 2 containing it
    let mut incidence: BTreeMap<GridPoint, Vec<usize>> = BTreeMap::new();
    // vertex -> partners through 2-edges
    let mut partners: BTreeMap<GridPoint, Vec<GridPoint>> = BTreeMap::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    let register = |id: usize,
                    e: &Edge,
                    incidence: &mut BTreeMap<GridPoint, Vec<usize>>,
                    partners: &mut BTreeMap<GridPoint, Vec<GridPoint>>| {
        if e.len() < 2 {
            return;
        }
        for &p in e {
            incidence.entry(p).or_default().push(id);
        }
        if e.len() == 2 {
            partners.entry(e[0]).or_default().push(e[1]);
            partners.entry(e[1]).or_default().push(e[0]);
        }
    };
    for (id, e) in edges.iter().enumerate() {
        register(id, e, &mut incidence, &mut partners);
        if e.len() >= 2 {
            queue.push_back(id);
        }
    }

    let substitute = |e: &Edge, i: GridPoint, j: GridPoint| -> Option<Edge> {
        if e.contains(&j) {
            return None;
        }
        Some(canonical(e.iter().map(|&p| if p == i { j } else { p }).collect()))
    };

    while let Some(id) = queue.pop_front() {
        let e = edges[id].clone();
        let mut fresh: Vec<Edge> = Vec::new();
        // e as the larger edge, against every 2-edge touching it
        for &i in &e {
            for &j in partners.get(&i).map(Vec::as_slice).unwrap_or(&[]) {
                fresh.extend(substitute(&e, i, j));
            }
        }
        // e as the 2-edge, against every edge touching an endpoint
        if e.len() == 2 {
            for (i, j) in [(e[0], e[1]), (e[1], e[0])] {
                for &other in incidence.get(&i).map(Vec::as_slice).unwrap_or(&[]) {
                    fresh.extend(substitute(&edges[other], i, j));
                }
            }
        }
        for f in fresh {
            if known.insert(f.clone()) {
                let nid = edges.len();
                register(nid, &f, &mut incidence, &mut partners);
                edges.push(f);
                queue.push_back(nid);
            }
        }
    }
    Hypergraph { params: h.params, edges: known }
}

/// The hypergraph attached to a zero set (any `k1 >= 2`).
pub fn build_hs(s: &ZeroSet) -> Hypergraph {
    let p = *s.params();
    let mut h = Hypergraph::new(p);
    let mut add = |e: Edge| {
        h.edges.insert(canonical(e));
    };
    // zeros
    for &q in s.points() {
        add(vec![q]);
    }
    // vertical pairs avoiding the zeros
    for col in 1..=p.k2 {
        for r1 in 1..=p.k1 {
            for r2 in r1 + 1..=p.k1 {
                let (a, b) = (GridPoint::new(r1, col), GridPoint::new(r2, col));
                if !s.contains(a) && !s.contains(b) {
                    add(vec![a, b]);
                }
            }
        }
    }
    // (t-1)-subsets across two rows, gated on both rows having private zeros
    for r1 in 1..=p.k1 {
        for r2 in r1 + 1..=p.k1 {
            let z1 = s.zeros_in_row(r1);
            let z2 = s.zeros_in_row(r2);
            if z1.difference(&z2).next().is_none() || z2.difference(&z1).next().is_none() {
                continue;
            }
            let common: Vec<usize> = (1..=p.k2).filter(|c| !z1.contains(c) && !z2.contains(c)).collect();
            let pool: Vec<GridPoint> =
                common.iter().flat_map(|&c| [GridPoint::new(r1, c), GridPoint::new(r2, c)]).collect();
            for e in subsets(&pool, p.t - 1) {
                add(e);
            }
        }
    }
    // t-subsets of rows avoiding the zeros
    for row in 1..=p.k1 {
        let pool: Vec<GridPoint> = (1..=p.k2).map(|c| GridPoint::new(row, c)).filter(|&q| !s.contains(q)).collect();
        for e in subsets(&pool, p.t) {
            add(e);
        }
    }
    h
}

/// All `k`-subsets of `items` in lexicographic order of positions.
pub fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

/// `(edges only in a, edges only in b)`.
pub fn edge_diff(a: &Hypergraph, b: &Hypergraph) -> (BTreeSet<Edge>, BTreeSet<Edge>) {
    (a.edges.difference(&b.edges).cloned().collect(), b.edges.difference(&a.edges).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gp(r: usize, c: usize) -> GridPoint {
        GridPoint::new(r, c)
    }

    fn params(d: usize, k1: usize, k2: usize, t: usize) -> GridParams {
        GridParams::new(d, k1, k2, t).unwrap()
    }

    #[test]
    fn subsets_counts() {
        let items: Vec<usize> = (0..6).collect();
        assert_eq!(subsets(&items, 3).len(), 20);
        assert_eq!(subsets(&items, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(&items, 7).is_empty());
    }

    #[test]
    fn single_pair_closure_is_trivial() {
        let p = params(2, 2, 2, 2);
        let h = Hypergraph::from_edges(p, [vec![gp(1, 1), gp(1, 2)]]).unwrap();
        assert_eq!(closure(&h), h);
    }

    #[test]
    fn chained_pairs_close_transitively() {
        let p = params(2, 2, 3, 2);
        let h = Hypergraph::from_edges(p, [vec![gp(1, 1), gp(1, 2)], vec![gp(1, 2), gp(1, 3)]]).unwrap();
        let c = closure(&h);
        assert!(c.contains(&[gp(1, 1), gp(1, 3)]));
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn example_hs_families() {
        let p = params(4, 2, 5, 4);
        let s = ZeroSet::parse(p, "1,1;2,2").unwrap();
        let h = build_hs(&s);
        let free: Vec<GridPoint> = (3..=5).flat_map(|c| [gp(1, c), gp(2, c)]).collect();
        let mut expect = Hypergraph::new(p);
        expect.insert(vec![gp(1, 1)]).unwrap();
        expect.insert(vec![gp(2, 2)]).unwrap();
        for c in 3..=5 {
            expect.insert(vec![gp(1, c), gp(2, c)]).unwrap();
        }
        for e in subsets(&free, 3) {
            expect.insert(e).unwrap();
        }
        expect.insert(vec![gp(1, 2), gp(1, 3), gp(1, 4), gp(1, 5)]).unwrap();
        expect.insert(vec![gp(2, 1), gp(2, 3), gp(2, 4), gp(2, 5)]).unwrap();
        assert_eq!(h, expect);
        assert_eq!(h.len(), 2 + 3 + 20 + 2);

        let c = closure(&h);
        let (added, removed) = edge_diff(&c, &h);
        assert!(removed.is_empty());
        // every added edge: one of (1,2),(2,1) plus one point from each of
        // columns 3,4,5; 2 * 8 such transversals, two of them already row edges
        assert_eq!(added.len(), 14);
        for e in &added {
            assert!(e.contains(&gp(1, 2)) ^ e.contains(&gp(2, 1)));
            for col in 3..=5 {
                assert_eq!(e.iter().filter(|q| q.col == col).count(), 1);
            }
        }
        // the additions are redundant: each contains a 3-edge
        for e in &added {
            assert!(h.covers(e));
        }
    }

    #[test]
    fn empty_zero_set_hypergraph() {
        let p = params(3, 2, 4, 3);
        let h = build_hs(&ZeroSet::empty(p));
        assert_eq!(h.len(), 4 + 2 * 4);
        assert!(h.edges().iter().all(|e| e.len() == 2 || e.len() == 3));
    }

    #[test]
    fn three_row_grid_closure_runs() {
        let p = params(4, 3, 5, 4);
        let s = ZeroSet::parse(p, "1,5;2,4;3,2").unwrap();
        let h = build_hs(&s);
        let c = closure(&h);
        assert!(h.is_subgraph_of(&c));
        assert_eq!(closure(&c), c);
    }

    #[test]
    fn serialization_roundtrip() {
        let p = params(4, 2, 5, 4);
        let h = build_hs(&ZeroSet::parse(p, "1,1;2,2").unwrap());
        let text = h.serialize();
        assert!(text.lines().any(|l| l == "{(1,1)}"));
        assert!(text.lines().any(|l| l == "{(1,3),(2,3)}"));
        let lines: Vec<&str> = text.lines().collect();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);
        assert_eq!(Hypergraph::parse(p, &text).unwrap(), h);
        assert!(parse_edge("(1,1)").is_err());
    }

    #[test]
    fn insert_rejects_bad_edges() {
        let mut h = Hypergraph::new(params(2, 2, 2, 2));
        assert!(h.insert(vec![]).is_err());
        assert!(h.insert(vec![gp(3, 1)]).is_err());
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        let p = params(3, 2, 3, 3);
        prop::collection::vec(prop::collection::vec((1usize..=2, 1usize..=3), 1..4), 0..6).prop_map(move |es| {
            Hypergraph::from_edges(p, es.into_iter().map(|e| e.into_iter().map(|(r, c)| gp(r, c)).collect())).unwrap()
        })
    }

    proptest! {
        #[test]
        fn closure_is_extensive_idempotent_monotone(a in arb_hypergraph(), b in arb_hypergraph()) {
            let ca = closure(&a);
            prop_assert!(a.is_subgraph_of(&ca));
            prop_assert_eq!(closure(&ca), ca.clone());
            let mut ab = a.clone();
            for e in b.edges() {
                ab.insert(e.clone()).unwrap();
            }
            prop_assert!(ca.is_subgraph_of(&closure(&ab)));
            // edge sizes are preserved by substitution
            let sizes_a: BTreeSet<usize> = a.edges().iter().map(Vec::len).collect();
            prop_assert!(ca.edges().iter().all(|e| sizes_a.contains(&e.len())));
        }
    }
}
