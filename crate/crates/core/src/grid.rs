//! The grid `[k1] x [k2]`, zero sets, combinatorial types and minimal sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `k2` accepted by [`enumerate_minimal`] (`4^12` subsets).
pub const MAX_ENUMERATION_K2: usize = 12;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridParams {
    pub d: usize,
    pub k1: usize,
    pub k2: usize,
    pub t: usize,
}

impl GridParams {
    /// Validates `k1, k2 >= 2` and `2 <= t <= min(k2, d)`.
    pub fn new(d: usize, k1: usize, k2: usize, t: usize) -> Result<GridParams> {
        if k1 < 2 || k2 < 2 {
            return Err(Error::Params(format!("need k1 >= 2 and k2 >= 2, got k1={k1}, k2={k2}")));
        }
        if t < 2 || t > k2 || t > d {
            return Err(Error::Params(format!("need 2 <= t <= min(k2, d), got t={t}, k2={k2}, d={d}")));
        }
        if d > 255 || k1 > 255 || k2 > 255 {
            return Err(Error::Params("dimensions above 255 are not supported".into()));
        }
        Ok(GridParams { d, k1, k2, t })
    }

    pub fn require_k1_two(&self, what: &str) -> Result<()> {
        if self.k1 != 2 {
            return Err(Error::Hypothesis(format!("{what} requires k1 = 2 (got k1 = {})", self.k1)));
        }
        Ok(())
    }

    /// All grid points in matrix column order `(1,1),(2,1),...,(k1,1),(1,2),...`.
    pub fn grid_points(&self) -> Vec<GridPoint> {
        (1..=self.k2).flat_map(|col| (1..=self.k1).map(move |row| GridPoint::new(row, col))).collect()
    }

    pub fn num_columns(&self) -> usize {
        self.k1 * self.k2
    }

    pub fn num_variables(&self) -> usize {
        self.d * self.k1 * self.k2
    }
}

impl fmt::Display for GridParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}, k1={}, k2={}, t={}", self.d, self.k1, self.k2, self.t)
    }
}

/// A point `(row, col)` of the grid; 1-based. `Ord` is by `(row, col)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub row: usize,
    pub col: usize,
}

impl GridPoint {
    pub const fn new(row: usize, col: usize) -> GridPoint {
        GridPoint { row, col }
    }

    /// 0-based column index in the flattened matrix.
    pub fn matrix_column(self, k1: usize) -> usize {
        (self.col - 1) * k1 + (self.row - 1)
    }

    fn in_range(self, p: &GridParams) -> bool {
        (1..=p.k1).contains(&self.row) && (1..=p.k2).contains(&self.col)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

/// Sorts points into matrix column order.
pub fn sort_matrix_order(points: &mut [GridPoint], k1: usize) {
    points.sort_by_key(|p| p.matrix_column(k1));
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Slice {
    Row(usize),
    Col(usize),
}

/// Row slice `R_i = {i} x [k2]` or column slice `C_j = [k1] x {j}`.
pub fn slices(p: &GridParams, which: Slice) -> Result<BTreeSet<GridPoint>> {
    match which {
        Slice::Row(i) if (1..=p.k1).contains(&i) => Ok((1..=p.k2).map(|c| GridPoint::new(i, c)).collect()),
        Slice::Col(j) if (1..=p.k2).contains(&j) => Ok((1..=p.k1).map(|r| GridPoint::new(r, j)).collect()),
        other => Err(Error::OutOfRange(format!("{other:?} for {p}"))),
    }
}

/// A set of structural zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroSet {
    points: BTreeSet<GridPoint>,
    params: GridParams,
}

impl PartialOrd for GridParams {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GridParams {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.d, self.k1, self.k2, self.t).cmp(&(other.d, other.k1, other.k2, other.t))
    }
}

impl ZeroSet {
    pub fn new<I: IntoIterator<Item = GridPoint>>(params: GridParams, points: I) -> Result<ZeroSet> {
        let points: BTreeSet<GridPoint> = points.into_iter().collect();
        if let Some(bad) = points.iter().find(|p| !p.in_range(&params)) {
            return Err(Error::OutOfRange(format!("point ({bad}) outside the {}x{} grid", params.k1, params.k2)));
        }
        Ok(ZeroSet { points, params })
    }

    pub fn empty(params: GridParams) -> ZeroSet {
        ZeroSet { points: BTreeSet::new(), params }
    }

    /// Parses `"r,c;r,c;..."`; the empty string is the empty set.
    pub fn parse(params: GridParams, text: &str) -> Result<ZeroSet> {
        let mut pts = Vec::new();
        for chunk in text.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let (r, c) = chunk.split_once(',').ok_or_else(|| Error::Parse(format!("expected 'r,c', got {chunk:?}")))?;
            let r = r.trim().parse().map_err(|_| Error::Parse(format!("bad row in {chunk:?}")))?;
            let c = c.trim().parse().map_err(|_| Error::Parse(format!("bad column in {chunk:?}")))?;
            pts.push(GridPoint::new(r, c));
        }
        ZeroSet::new(params, pts)
    }

    pub fn params(&self) -> &GridParams {
        &self.params
    }

    pub fn points(&self) -> &BTreeSet<GridPoint> {
        &self.points
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.points.contains(&p)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Column indices of zeros in grid row `r`.
    pub fn zeros_in_row(&self, r: usize) -> BTreeSet<usize> {
        self.points.iter().filter(|p| p.row == r).map(|p| p.col).collect()
    }

    /// `(Z(r,S), NZ(r,S))`.
    pub fn zero_profile(&self, r: usize) -> Result<(BTreeSet<usize>, BTreeSet<usize>)> {
        if !(1..=self.params.k1).contains(&r) {
            return Err(Error::OutOfRange(format!("row {r} for {}", self.params)));
        }
        let z = self.zeros_in_row(r);
        let nz = (1..=self.params.k2).filter(|c| !z.contains(c)).collect();
        Ok((z, nz))
    }

    /// Indices of columns `C_i` disjoint from the set.
    pub fn free_column_indices(&self) -> Vec<usize> {
        let hit: BTreeSet<usize> = self.points.iter().map(|p| p.col).collect();
        (1..=self.params.k2).filter(|c| !hit.contains(c)).collect()
    }

    /// The union of all column slices disjoint from the set.
    pub fn free_columns(&self) -> BTreeSet<GridPoint> {
        self.free_column_indices()
            .into_iter()
            .flat_map(|c| (1..=self.params.k1).map(move |r| GridPoint::new(r, c)))
            .collect()
    }

    pub fn contains_full_column(&self) -> bool {
        (1..=self.params.k2).any(|c| (1..=self.params.k1).all(|r| self.contains(GridPoint::new(r, c))))
    }

    pub fn comb_type(&self) -> Result<TypeClass> {
        self.params.require_k1_two("the combinatorial type")?;
        if self.contains_full_column() {
            return Ok(TypeClass::FullColumn);
        }
        let a = self.zeros_in_row(1).len();
        let b = self.zeros_in_row(2).len();
        Ok(TypeClass::Type(CombType::new(a.min(b), a.max(b))))
    }

    /// The combinatorial minimality predicate for `k1 = 2`.
    pub fn is_minimal(&self) -> Result<bool> {
        if self.is_empty() {
            self.params.require_k1_two("minimality")?;
            return Ok(true);
        }
        match self.comb_type()? {
            TypeClass::FullColumn => Ok(false),
            TypeClass::Type(c) => Ok(c.u >= 1 && is_minimal_type(&self.params, c)),
        }
    }

    pub fn map_points<F: Fn(GridPoint) -> GridPoint>(&self, f: F) -> ZeroSet {
        ZeroSet { points: self.points.iter().map(|&p| f(p)).collect(), params: self.params }
    }
}

impl fmt::Display for ZeroSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// `(u, v)` with `u <= v`: the sorted zero counts of the two rows.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CombType {
    pub u: usize,
    pub v: usize,
}

impl CombType {
    /// Sorts its arguments.
    pub fn new(a: usize, b: usize) -> CombType {
        CombType { u: a.min(b), v: a.max(b) }
    }

    pub fn is_empty_type(self) -> bool {
        self.u == 0 && self.v == 0
    }
}

impl fmt::Display for CombType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl FromStr for CombType {
    type Err = Error;
    fn from_str(s: &str) -> Result<CombType> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = s.split_once(',').ok_or_else(|| Error::Parse(format!("expected 'u,v', got {s:?}")))?;
        let a = a.trim().parse().map_err(|_| Error::Parse(format!("bad type {s:?}")))?;
        let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad type {s:?}")))?;
        Ok(CombType::new(a, b))
    }
}

/// Result of classifying a zero set.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TypeClass {
    Type(CombType),
    /// Some column slice lies inside the set; no type is assigned.
    FullColumn,
}

/// `(0,0)`, or `1 <= u <= v <= k2-t+1` with `u+v <= k2` (and `u+v = k2` when `t = 2`).
pub fn is_minimal_type(p: &GridParams, c: CombType) -> bool {
    if c.is_empty_type() {
        return true;
    }
    let bound = p.k2 + 1 - p.t;
    let ok = 1 <= c.u && c.u <= c.v && c.v <= bound && c.u + c.v <= p.k2;
    ok && (p.t != 2 || c.u + c.v == p.k2)
}

/// All minimal types in increasing `(u, v)` order, `(0,0)` first.
pub fn minimal_types(p: &GridParams) -> Result<Vec<CombType>> {
    p.require_k1_two("minimal types")?;
    let mut out = vec![CombType::new(0, 0)];
    for u in 1..=p.k2 {
        for v in u..=p.k2 {
            let c = CombType { u, v };
            if is_minimal_type(p, c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of combinatorial types in the minimal decomposition, by the closed
/// formula.
pub fn count_types(p: &GridParams) -> Result<u128> {
    p.require_k1_two("count_types")?;
    let (k2, t) = (p.k2 as i128, p.t as i128);
    if t == 2 {
        return Ok((k2 / 2 + 1) as u128);
    }
    // t - 1 >= k2 / 2  <=>  2(t - 1) >= k2
    let n = if 2 * (t - 1) >= k2 {
        (k2 - t + 1) * (k2 - t + 2) / 2 + 1
    } else if k2 % 2 == 0 {
        (k2 * k2 - 2 * t * t + 6 * t) / 4
    } else {
        (k2 * k2 - 2 * t * t + 6 * t - 1) / 4
    };
    Ok(n as u128)
}

/// Number of zero sets of type `c`: `C(k2,u) C(k2-u,v)`, doubled when `u != v`.
pub fn count_sets(p: &GridParams, c: CombType) -> Result<u128> {
    p.require_k1_two("count_sets")?;
    if c.u + c.v > p.k2 {
        return Err(Error::Params(format!("type {c} does not fit in k2 = {}", p.k2)));
    }
    let base = binomial(p.k2, c.u) * binomial(p.k2 - c.u, c.v);
    Ok(if c.u == c.v { base } else { 2 * base })
}

fn zero_set_from_mask(p: &GridParams, mask: u32) -> ZeroSet {
    let k2 = p.k2;
    let points = (0..2 * k2).filter(|b| mask >> b & 1 == 1).map(|b| GridPoint::new(b / k2 + 1, b % k2 + 1));
    ZeroSet { points: points.collect(), params: *p }
}

/// Every minimal zero set, grouped by type, each group in canonical order.
pub fn enumerate_minimal(p: &GridParams) -> Result<BTreeMap<CombType, Vec<ZeroSet>>> {
    enumerate_minimal_threads(p, 1)
}

pub fn enumerate_minimal_threads(p: &GridParams, threads: usize) -> Result<BTreeMap<CombType, Vec<ZeroSet>>> {
    p.require_k1_two("enumerate_minimal")?;
    if p.k2 > MAX_ENUMERATION_K2 {
        return Err(Error::Params(format!(
            "enumeration refused: k2 = {} exceeds the bound {MAX_ENUMERATION_K2}",
            p.k2
        )));
    }
    let k2 = p.k2;
    let row_mask = (1u32 << k2) - 1;
    let total: u64 = 1 << (2 * k2);
    let scan = |lo: u64, hi: u64| {
        let mut found: Vec<(CombType, u32)> = Vec::new();
        for mask in lo..hi {
            let mask = mask as u32;
            let (r1, r2) = (mask & row_mask, mask >> k2);
            if r1 & r2 != 0 {
                continue;
            }
            let c = CombType::new(r1.count_ones() as usize, r2.count_ones() as usize);
            if (mask == 0 || c.u >= 1) && is_minimal_type(p, c) {
                found.push((c, mask));
            }
        }
        found
    };
    let threads = threads.max(1) as u64;
    let chunk = total.div_ceil(threads);
    let parts: Vec<Vec<(CombType, u32)>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|i| {
                let (lo, hi) = (i * chunk, ((i + 1) * chunk).min(total));
                s.spawn(move || scan(lo, hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
    });
    let mut groups: BTreeMap<CombType, Vec<ZeroSet>> = BTreeMap::new();
    for (c, mask) in parts.into_iter().flatten() {
        groups.entry(c).or_default().push(zero_set_from_mask(p, mask));
    }
    for sets in groups.values_mut() {
        sets.sort();
    }
    Ok(groups)
}

/// The left/right-justified representative
/// `{1} x {1..u}  ∪  {2} x {k2-v+1..k2}`.
pub fn representative(c: CombType, p: &GridParams) -> Result<ZeroSet> {
    p.require_k1_two("representative")?;
    if !is_minimal_type(p, c) {
        return Err(Error::Hypothesis(format!("type {c} is not minimal for {p}")));
    }
    let pts =
        (1..=c.u).map(|col| GridPoint::new(1, col)).chain((p.k2 - c.v + 1..=p.k2).map(|col| GridPoint::new(2, col)));
    ZeroSet::new(*p, pts)
}

/// A relabeling of the grid: optional row swap followed by a column bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub swap_rows: bool,
    /// `column_map[c - 1]` is the image of column `c`.
    pub column_map: Vec<usize>,
}

impl Relabeling {
    pub fn apply(&self, p: GridPoint) -> GridPoint {
        let row = if self.swap_rows { 3 - p.row } else { p.row };
        GridPoint::new(row, self.column_map[p.col - 1])
    }

    pub fn apply_set(&self, s: &ZeroSet) -> ZeroSet {
        s.map_points(|p| self.apply(p))
    }
}

/// The relabeling carrying a minimal zero set onto its type representative.
pub fn relabel(s: &ZeroSet) -> Result<Relabeling> {
    let p = *s.params();
    p.require_k1_two("relabel")?;
    let c = match s.comb_type()? {
        TypeClass::Type(c) if s.is_minimal()? => c,
        _ => return Err(Error::Hypothesis(format!("zero set {{{s}}} is not minimal"))),
    };
    let swap_rows = s.zeros_in_row(1).len() != c.u;
    let (small_row, large_row) = if swap_rows { (2, 1) } else { (1, 2) };
    let small = s.zeros_in_row(small_row);
    let large = s.zeros_in_row(large_row);
    let mut column_map = vec![0; p.k2];
    for (k, &col) in small.iter().enumerate() {
        column_map[col - 1] = k + 1;
    }
    for (k, &col) in large.iter().enumerate() {
        column_map[col - 1] = p.k2 - c.v + 1 + k;
    }
    for (k, col) in s.free_column_indices().into_iter().enumerate() {
        column_map[col - 1] = c.u + 1 + k;
    }
    Ok(Relabeling { swap_rows, column_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(d: usize, k2: usize, t: usize) -> GridParams {
        GridParams::new(d, 2, k2, t).unwrap()
    }

    fn zs(p: GridParams, s: &str) -> ZeroSet {
        ZeroSet::parse(p, s).unwrap()
    }

    #[test]
    fn param_validation() {
        assert!(GridParams::new(4, 2, 5, 4).is_ok());
        assert!(GridParams::new(3, 2, 5, 4).is_err());
        assert!(GridParams::new(4, 1, 5, 2).is_err());
        assert!(GridParams::new(4, 2, 3, 4).is_err());
        assert!(GridParams::new(4, 2, 3, 1).is_err());
    }

    #[test]
    fn slice_examples() {
        let p = GridParams::new(2, 2, 3, 2).unwrap();
        let r1 = slices(&p, Slice::Row(1)).unwrap();
        assert_eq!(
            r1.into_iter().collect::<Vec<_>>(),
            vec![GridPoint::new(1, 1), GridPoint::new(1, 2), GridPoint::new(1, 3)]
        );
        let c2 = slices(&p, Slice::Col(2)).unwrap();
        assert_eq!(c2.into_iter().collect::<Vec<_>>(), vec![GridPoint::new(1, 2), GridPoint::new(2, 2)]);
        for i in 1..=2 {
            assert_eq!(slices(&p, Slice::Row(i)).unwrap().len(), 3);
        }
        for j in 1..=3 {
            assert_eq!(slices(&p, Slice::Col(j)).unwrap().len(), 2);
        }
        assert!(slices(&p, Slice::Row(3)).is_err());
        assert!(slices(&p, Slice::Col(0)).is_err());
    }

    #[test]
    fn zero_profile_examples() {
        let p = params(4, 5, 4);
        let s = zs(p, "1,1;2,2");
        let (z, nz) = s.zero_profile(1).unwrap();
        assert_eq!(z.into_iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(nz.into_iter().collect::<Vec<_>>(), vec![2, 3, 4, 5]);
        let (z, nz) = ZeroSet::empty(p).zero_profile(2).unwrap();
        assert!(z.is_empty());
        assert_eq!(nz.len(), 5);
        assert!(s.zero_profile(3).is_err());
    }

    #[test]
    fn free_column_examples() {
        let p = params(4, 5, 4);
        let s = zs(p, "1,1;2,2");
        assert_eq!(s.free_column_indices(), vec![3, 4, 5]);
        assert_eq!(s.free_columns().len(), 6);
        assert_eq!(ZeroSet::empty(p).free_columns().len(), 10);
        assert!(zs(p, "1,1;2,2;1,3;2,4;1,5").free_columns().is_empty());
    }

    #[test]
    fn comb_type_examples() {
        let p = params(4, 6, 4);
        assert_eq!(zs(p, "1,1;1,2;2,5;2,6").comb_type().unwrap(), TypeClass::Type(CombType::new(2, 2)));
        assert_eq!(ZeroSet::empty(p).comb_type().unwrap(), TypeClass::Type(CombType::new(0, 0)));
        assert_eq!(zs(p, "1,1;2,1").comb_type().unwrap(), TypeClass::FullColumn);
    }

    #[test]
    fn minimality_examples() {
        assert!(zs(params(4, 6, 4), "1,1;2,2;2,3").is_minimal().unwrap());
        assert!(!zs(params(4, 5, 4), "1,1;1,2").is_minimal().unwrap());
        assert!(!zs(params(2, 5, 2), "1,1;2,2").is_minimal().unwrap());
        assert!(zs(params(2, 5, 2), "1,1;2,2;2,3;2,4;2,5").is_minimal().unwrap());
        assert!(!zs(params(4, 6, 4), "1,1;2,1;2,2").is_minimal().unwrap());
        let p3 = GridParams::new(4, 3, 5, 4).unwrap();
        assert!(ZeroSet::empty(p3).is_minimal().is_err());
    }

    #[test]
    fn example_census_counts() {
        let p = params(4, 6, 4);
        assert_eq!(count_types(&p).unwrap(), 7);
        let expect = [((1, 1), 30), ((2, 2), 90), ((3, 3), 20), ((1, 2), 120), ((1, 3), 120), ((2, 3), 120)];
        for ((u, v), n) in expect {
            assert_eq!(count_sets(&p, CombType::new(u, v)).unwrap(), n);
        }
        // k2 = 8, t = 3: value obtained by exhaustive enumeration
        assert_eq!(count_types(&params(3, 8, 3)).unwrap(), 16);
    }

    #[test]
    fn enumerate_small() {
        let groups = enumerate_minimal(&params(4, 6, 4)).unwrap();
        let total: usize = groups.values().map(Vec::len).sum();
        assert_eq!(total, 501);
        assert_eq!(groups.len(), 7);
        let g = enumerate_minimal(&params(2, 2, 2)).unwrap();
        assert_eq!(g.keys().copied().collect::<Vec<_>>(), vec![CombType::new(0, 0), CombType::new(1, 1)]);
        assert_eq!(g[&CombType::new(1, 1)].len(), 2);
        for sets in groups.values() {
            assert!(sets.iter().all(|s| s.is_minimal().unwrap()));
        }
        assert!(enumerate_minimal(&params(4, 13, 4)).is_err());
    }

    #[test]
    fn threaded_enumeration_is_deterministic() {
        let p = params(3, 7, 3);
        assert_eq!(enumerate_minimal_threads(&p, 1).unwrap(), enumerate_minimal_threads(&p, 5).unwrap());
    }

    #[test]
    fn representative_examples() {
        let p = params(4, 6, 4);
        assert_eq!(representative(CombType::new(2, 2), &p).unwrap().to_string(), "1,1;1,2;2,5;2,6");
        assert!(representative(CombType::new(0, 0), &p).unwrap().is_empty());
        assert!(representative(CombType::new(0, 2), &p).is_err());
        assert!(representative(CombType::new(1, 4), &p).is_err());
    }

    #[test]
    fn relabel_example() {
        let p = params(4, 6, 4);
        let s = zs(p, "1,2;1,4;2,3;2,5");
        let r = relabel(&s).unwrap();
        assert!(!r.swap_rows);
        assert_eq!(r.column_map[1], 1);
        assert_eq!(r.column_map[3], 2);
        assert_eq!(r.column_map[2], 5);
        assert_eq!(r.column_map[4], 6);
        assert_eq!(r.apply_set(&s), representative(CombType::new(2, 2), &p).unwrap());
    }

    #[test]
    fn t2_minimal_sets_have_no_free_columns() {
        for k2 in 2..=7 {
            let p = params(2, k2, 2);
            for (c, sets) in enumerate_minimal(&p).unwrap() {
                if !c.is_empty_type() {
                    assert!(sets.iter().all(|s| s.free_columns().is_empty()));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn relabel_reaches_representative(k2 in 2usize..8, t_off in 0usize..6, mask in any::<u32>()) {
            let t = 2 + t_off % (k2 - 1);
            let p = params(t, k2, t);
            let s = zero_set_from_mask(&p, mask & ((1 << (2 * k2)) - 1));
            if s.is_minimal().unwrap() && !s.is_empty() {
                let r = relabel(&s).unwrap();
                let c = match s.comb_type().unwrap() { TypeClass::Type(c) => c, _ => unreachable!() };
                let image = r.apply_set(&s);
                prop_assert_eq!(&image, &representative(c, &p).unwrap());
                prop_assert_eq!(image.comb_type().unwrap(), TypeClass::Type(c));
                let mut cols = r.column_map.clone();
                cols.sort();
                prop_assert_eq!(cols, (1..=k2).collect::<Vec<_>>());
            }
        }
    }
}
