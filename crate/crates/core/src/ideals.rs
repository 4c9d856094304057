//! The symbolic matrix, minor expansion and the generator families.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grid::{sort_matrix_order, GridParams, GridPoint, ZeroSet};
use crate::hypergraph::{subsets, Hypergraph};
use crate::linalg::RatMatrix;
use crate::poly::{Polynomial, Rational, TermOrder, VarId};

/// `[A | B]`: matrix rows `A` (increasing) and grid columns `B` (matrix order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinorSpec {
    pub rows: Vec<usize>,
    pub cols: Vec<GridPoint>,
}

impl MinorSpec {
    pub fn new(params: &GridParams, mut rows: Vec<usize>, mut cols: Vec<GridPoint>) -> Result<MinorSpec> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::Dimension(format!("minor with {} rows and {} columns", rows.len(), cols.len())));
        }
        rows.sort_unstable();
        rows.dedup();
        sort_matrix_order(&mut cols, params.k1);
        cols.dedup();
        if rows.len() != cols.len() {
            return Err(Error::Dimension("repeated row or column in minor".into()));
        }
        if rows.iter().any(|&r| r == 0 || r > params.d) {
            return Err(Error::OutOfRange(format!("minor rows {rows:?} outside [1, {}]", params.d)));
        }
        if cols.iter().any(|c| c.row == 0 || c.row > params.k1 || c.col == 0 || c.col > params.k2) {
            return Err(Error::OutOfRange("minor column outside the grid".into()));
        }
        Ok(MinorSpec { rows, cols })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn expand(&self) -> Polynomial {
        determinant(&self.rows, &self.cols)
    }
}

/// Determinant of the submatrix with the given rows and columns, in the given
/// order. Cofactor expansion along the last column, memoized on row subsets.
pub fn determinant(rows: &[usize], cols: &[GridPoint]) -> Polynomial {
    assert_eq!(rows.len(), cols.len(), "determinant needs a square selection");
    assert!(rows.len() <= 16, "minor too large");
    let mut memo: HashMap<u32, Polynomial> = HashMap::new();
    det_rec(rows, cols, (1u32 << rows.len()) - 1, &mut memo)
}

fn det_rec(rows: &[usize], cols: &[GridPoint], mask: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
    let m = mask.count_ones() as usize;
    if m == 0 {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(&mask) {
        return p.clone();
    }
    let col = cols[m - 1];
    let mut acc = Polynomial::zero();
    // position of row r among the selected rows decides the cofactor sign
    let mut pos = 0;
    for (k, &r) in rows.iter().enumerate() {
        if mask >> k & 1 == 0 {
            continue;
        }
        let sub = det_rec(rows, cols, mask & !(1 << k), memo);
        let sign = if (pos + m - 1).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        acc = &acc + &sub.mul_term(&crate::poly::Monomial::var(VarId::x(r, col)), &sign);
        pos += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}

pub fn expand_minor(m: &MinorSpec) -> Polynomial {
    m.expand()
}

/// All `size`-minors of `X_cols`.
pub fn minor_family(params: &GridParams, cols: &[GridPoint], size: usize) -> Vec<MinorSpec> {
    let mut cols = cols.to_vec();
    sort_matrix_order(&mut cols, params.k1);
    cols.dedup();
    let rows: Vec<usize> = (1..=params.d).collect();
    let mut out = Vec::new();
    for cs in subsets(&cols, size) {
        for rs in subsets(&rows, size) {
            out.push(MinorSpec { rows: rs, cols: cs.clone() });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Provenance {
    Minor(MinorSpec),
    /// A bare variable (or an ad-hoc generator when `"var"` does not apply).
    Label(String),
}

/// A named generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    pub name: String,
    pub params: GridParams,
    pub generators: Vec<Polynomial>,
    pub provenance: Vec<Provenance>,
}

impl IdealPresentation {
    pub fn new(name: impl Into<String>, params: GridParams) -> IdealPresentation {
        IdealPresentation { name: name.into(), params, generators: Vec::new(), provenance: Vec::new() }
    }

    /// Ad-hoc generators; zeros and duplicates are dropped.
    pub fn from_polynomials(name: impl Into<String>, params: GridParams, polys: Vec<Polynomial>) -> IdealPresentation {
        let mut ideal = IdealPresentation::new(name, params);
        for f in polys {
            ideal.push(f, Provenance::Label("adhoc".into()));
        }
        ideal
    }

    /// Adds a generator after sign normalization, skipping zero and repeats.
    pub fn push(&mut self, f: Polynomial, prov: Provenance) -> bool {
        if f.is_zero() {
            return false;
        }
        let f = f.sign_normalized(TermOrder::Lex);
        if self.generators.contains(&f) {
            return false;
        }
        self.generators.push(f);
        self.provenance.push(prov);
        true
    }

    pub fn push_minor(&mut self, m: MinorSpec) -> bool {
        if m.size() == 1 {
            let f = m.expand();
            return self.push(f, Provenance::Label("var".into()));
        }
        let f = m.expand();
        self.push(f, Provenance::Minor(m))
    }

    fn extend_minors(&mut self, minors: Vec<MinorSpec>, seen: &mut HashSet<MinorSpec>) {
        for m in minors {
            if seen.insert(m.clone()) {
                self.push_minor(m);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.generators.iter().flat_map(|f| f.variables()).collect()
    }

    /// Concatenation of two presentations (duplicates dropped).
    pub fn union(&self, other: &IdealPresentation, name: impl Into<String>) -> IdealPresentation {
        let mut out = self.clone();
        out.name = name.into();
        for (f, p) in other.generators.iter().zip(&other.provenance) {
            out.push(f.clone(), p.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let prov: Vec<Value> = self
            .provenance
            .iter()
            .map(|p| match p {
                Provenance::Minor(m) => json!({
                    "rows": m.rows,
                    "cols": m.cols.iter().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
                }),
                Provenance::Label(s) => json!(s),
            })
            .collect();
        json!({
            "name": self.name,
            "params": params_json(&self.params),
            "generators": self.generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "provenance": prov,
        })
    }
}

pub fn params_json(p: &GridParams) -> Value {
    json!({"d": p.d, "k1": p.k1, "k2": p.k2, "t": p.t})
}

/// The CI ideal: 2-minors of every column slice and `t`-minors of every row
/// slice.
pub fn build_ic(p: &GridParams) -> IdealPresentation {
    let mut ideal = IdealPresentation::new("I_C", *p);
    let mut seen = HashSet::new();
    for col in 1..=p.k2 {
        let slice: Vec<GridPoint> = (1..=p.k1).map(|r| GridPoint::new(r, col)).collect();
        ideal.extend_minors(minor_family(p, &slice, 2), &mut seen);
    }
    for row in 1..=p.k1 {
        let slice: Vec<GridPoint> = (1..=p.k2).map(|c| GridPoint::new(row, c)).collect();
        ideal.extend_minors(minor_family(p, &slice, p.t), &mut seen);
    }
    ideal
}

/// All minors `[A | B]` with `B` an edge and `|A| = |B|`.
pub fn build_hypergraph_ideal(h: &Hypergraph) -> Result<IdealPresentation> {
    let p = *h.params();
    if let Some(e) = h.edges().iter().find(|e| e.len() > p.d) {
        return Err(Error::EdgeTooLarge { edge: crate::hypergraph::edge_to_string(e), size: e.len(), d: p.d });
    }
    let mut ideal = IdealPresentation::new("I(H)", p);
    let mut seen = HashSet::new();
    for e in h.edges() {
        ideal.extend_minors(minor_family(&p, e, e.len()), &mut seen);
    }
    Ok(ideal)
}

/// Natural generators of `I_∅` for any `k1`: 2-minors of every column slice
/// and all `t`-minors of `X`.
pub fn build_f_empty(p: &GridParams) -> Result<IdealPresentation> {
    let mut ideal = IdealPresentation::new("I_empty", *p);
    let mut seen = HashSet::new();
    for col in 1..=p.k2 {
        let slice: Vec<GridPoint> = (1..=p.k1).map(|r| GridPoint::new(r, col)).collect();
        ideal.extend_minors(minor_family(p, &slice, 2), &mut seen);
    }
    ideal.extend_minors(minor_family(p, &p.grid_points(), p.t), &mut seen);
    Ok(ideal)
}

/// Whether the `(t-1)`-minor family of the free columns is present: both rows
/// have a zero the other row lacks.
pub fn has_cross_family(s: &ZeroSet) -> bool {
    let z1 = s.zeros_in_row(1);
    let z2 = s.zeros_in_row(2);
    z1.difference(&z2).next().is_some() && z2.difference(&z1).next().is_some()
}

fn fs_families(s: &ZeroSet, with_variables: bool, name: String) -> Result<IdealPresentation> {
    let p = *s.params();
    p.require_k1_two("F_S")?;
    let mut ideal = IdealPresentation::new(name, p);
    let mut seen = HashSet::new();
    if with_variables {
        for &q in s.points() {
            ideal.extend_minors(minor_family(&p, &[q], 1), &mut seen);
        }
    }
    let free = s.free_column_indices();
    for &col in &free {
        let slice = [GridPoint::new(1, col), GridPoint::new(2, col)];
        ideal.extend_minors(minor_family(&p, &slice, 2), &mut seen);
    }
    let free_points: Vec<GridPoint> = s.free_columns().into_iter().collect();
    if has_cross_family(s) {
        ideal.extend_minors(minor_family(&p, &free_points, p.t - 1), &mut seen);
    }
    for row in 1..=2 {
        let mut cols: Vec<GridPoint> = (1..=p.k2).map(|c| GridPoint::new(row, c)).filter(|&q| !s.contains(q)).collect();
        cols.extend(free_points.iter().copied());
        ideal.extend_minors(minor_family(&p, &cols, p.t), &mut seen);
    }
    Ok(ideal)
}

/// Natural generators of `I_S` (variables of the zeros included).
pub fn build_fs(s: &ZeroSet) -> Result<IdealPresentation> {
    let name = if s.is_empty() { "I_empty".to_string() } else { format!("I_S[{s}]") };
    fs_families(s, true, name)
}

/// Natural generators of `J_S`: those of `I_S` without the variables.
pub fn build_fjs(s: &ZeroSet) -> Result<IdealPresentation> {
    if s.is_empty() || !s.is_minimal()? {
        return Err(Error::Hypothesis(format!("J_S needs a minimal nonempty zero set, got {{{s}}}")));
    }
    fs_families(s, false, format!("J_S[{s}]"))
}

/// All `(t+1)`-minors of the matrix with the zero columns removed.
pub fn build_next_minors(s: &ZeroSet) -> IdealPresentation {
    let p = *s.params();
    let cols: Vec<GridPoint> = p.grid_points().into_iter().filter(|&q| !s.contains(q)).collect();
    let mut ideal = IdealPresentation::new(format!("I_t+1[{s}]"), p);
    if p.t < p.d {
        let mut seen = HashSet::new();
        ideal.extend_minors(minor_family(&p, &cols, p.t + 1), &mut seen);
    }
    ideal
}

/// The `k2 x k1*k2` matrix whose row `i` holds `[1, a_i1, ..., a_i,k1-1]` in
/// the columns of block `i`.
pub fn build_da(a: &RatMatrix, k1: usize) -> Result<RatMatrix> {
    if k1 < 2 || a.cols() != k1 - 1 {
        return Err(Error::Dimension(format!(
            "A must be k2 x {}, got {}x{}",
            k1.saturating_sub(1),
            a.rows(),
            a.cols()
        )));
    }
    let k2 = a.rows();
    let mut d = RatMatrix::zeros(k2, k1 * k2);
    for i in 0..k2 {
        d[(i, i * k1)] = Rational::one();
        for j in 0..k1 - 1 {
            d[(i, i * k1 + j + 1)] = a[(i, j)].clone();
        }
    }
    Ok(d)
}

/// Evaluates a generator at a matrix point (`d x k1*k2`, matrix column order).
pub fn eval_at(f: &Polynomial, point: &RatMatrix, k1: usize) -> Rational {
    f.eval(|v| match v.matrix_entry() {
        Some((row, q)) => point[(row - 1, q.matrix_column(k1))].clone(),
        None => Rational::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::CombType;
    use crate::hypergraph::{build_hs, closure};
    use crate::poly::rational;

    fn gp(r: usize, c: usize) -> GridPoint {
        GridPoint::new(r, c)
    }

    fn params(d: usize, k1: usize, k2: usize, t: usize) -> GridParams {
        GridParams::new(d, k1, k2, t).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        crate::grid::binomial(n, k) as usize
    }

    #[test]
    fn small_minors() {
        let p = params(2, 2, 2, 2);
        let one = MinorSpec::new(&p, vec![1], vec![gp(1, 1)]).unwrap();
        assert_eq!(one.expand().to_string(), "x_1_1_1");
        let two = MinorSpec::new(&p, vec![1, 2], vec![gp(1, 1), gp(2, 1)]).unwrap();
        assert_eq!(two.expand().to_string(), "x_1_1_1*x_2_2_1 - x_1_2_1*x_2_1_1");
        assert!(MinorSpec::new(&p, vec![1, 2], vec![gp(1, 1)]).is_err());
        assert!(MinorSpec::new(&p, vec![3], vec![gp(1, 1)]).is_err());
    }

    fn permutation_count_oracle(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn minors_have_factorial_many_unit_terms() {
        let p = params(4, 2, 3, 3);
        for size in [3, 4] {
            let cols: Vec<GridPoint> = p.grid_points().into_iter().take(size).collect();
            let m = MinorSpec::new(&p, (1..=size).collect(), cols).unwrap();
            let f = m.expand();
            assert_eq!(f.len(), permutation_count_oracle(size));
            assert!(f.terms().iter().all(|(_, c)| *c == rational(1, 1) || *c == rational(-1, 1)));
            // leading monomial is the squarefree diagonal
            let lm = f.leading_monomial(TermOrder::Lex).unwrap();
            assert!(lm.is_squarefree());
            let diag: Vec<VarId> = m.rows.iter().zip(&m.cols).map(|(&r, &c)| VarId::x(r, c)).collect();
            assert!(diag.iter().all(|&v| lm.exponent(v) == 1));
        }
    }

    #[test]
    fn leading_monomials_of_all_three_minors_are_diagonal() {
        let p = params(3, 2, 2, 2);
        for m in minor_family(&p, &p.grid_points(), 3) {
            let f = m.expand();
            let lm = f.leading_monomial(TermOrder::Lex).unwrap().clone();
            let diag =
                crate::poly::Monomial::from_exponents(m.rows.iter().zip(&m.cols).map(|(&r, &c)| (VarId::x(r, c), 1)));
            assert_eq!(lm, diag);
        }
    }

    #[test]
    fn swapping_rows_negates() {
        let cols = [gp(1, 1), gp(2, 1), gp(1, 2)];
        let a = determinant(&[1, 2, 3], &cols);
        let b = determinant(&[2, 1, 3], &cols);
        assert_eq!(a, -&b);
        let c = determinant(&[1, 2, 3], &[gp(2, 1), gp(1, 1), gp(1, 2)]);
        assert_eq!(a, -&c);
    }

    #[test]
    fn ic_generator_counts() {
        for (d, k1, k2, t) in [(2, 2, 2, 2), (4, 2, 5, 4), (3, 3, 3, 2), (3, 2, 4, 3)] {
            let p = params(d, k1, k2, t);
            let expect = k2 * binom(d, 2) * binom(k1, 2) + k1 * binom(d, t) * binom(k2, t);
            assert_eq!(build_ic(&p).len(), expect, "{p}");
        }
        assert_eq!(build_ic(&params(2, 2, 2, 2)).len(), 4);
        assert_eq!(build_ic(&params(4, 2, 5, 4)).len(), 40);
    }

    #[test]
    fn hypergraph_ideal_examples() {
        let p = params(3, 2, 3, 2);
        let h = Hypergraph::from_edges(p, [vec![gp(1, 1)]]).unwrap();
        let i = build_hypergraph_ideal(&h).unwrap();
        assert_eq!(i.len(), 3);
        assert!(i.generators.iter().all(|f| f.len() == 1 && f.total_degree() == 1));
        let big = Hypergraph::from_edges(params(2, 2, 3, 2), [vec![gp(1, 1), gp(1, 2), gp(1, 3)]]).unwrap();
        assert!(matches!(build_hypergraph_ideal(&big), Err(Error::EdgeTooLarge { size: 3, d: 2, .. })));
    }

    #[test]
    fn fs_of_empty_is_f_empty() {
        let p = params(3, 2, 3, 3);
        let a = build_fs(&ZeroSet::empty(p)).unwrap();
        let b = build_f_empty(&p).unwrap();
        assert_eq!(a.generators, b.generators);
        assert_eq!(b.len(), 3 * 3 + binom(6, 3));
    }

    #[test]
    fn fjs_of_representative_22() {
        let p = params(4, 2, 6, 4);
        let s = crate::grid::representative(CombType::new(2, 2), &p).unwrap();
        let j = build_fjs(&s).unwrap();
        let mut seen = HashSet::new();
        let mut expect = IdealPresentation::new("expect", p);
        for c in [3, 4] {
            expect.extend_minors(minor_family(&p, &[gp(1, c), gp(2, c)], 2), &mut seen);
        }
        let block = [gp(1, 3), gp(2, 3), gp(1, 4), gp(2, 4)];
        expect.extend_minors(minor_family(&p, &block, 3), &mut seen);
        let mut a: Vec<GridPoint> = vec![gp(2, 1), gp(2, 2)];
        a.extend(block);
        expect.extend_minors(minor_family(&p, &a, 4), &mut seen);
        let mut b: Vec<GridPoint> = vec![gp(1, 5), gp(1, 6)];
        b.extend(block);
        expect.extend_minors(minor_family(&p, &b, 4), &mut seen);
        let lhs: BTreeSet<String> = j.generators.iter().map(ToString::to_string).collect();
        let rhs: BTreeSet<String> = expect.generators.iter().map(ToString::to_string).collect();
        assert_eq!(lhs, rhs);
        assert!(build_fjs(&ZeroSet::empty(p)).is_err());
    }

    #[test]
    fn gating_drops_cross_family() {
        let p = params(3, 2, 4, 3);
        // Z(1) = {1} is inside Z(2) = {1, 2}: full column, but the gate only looks at rows
        let s = ZeroSet::parse(p, "2,1;2,2").unwrap();
        assert!(!has_cross_family(&s));
        let f = build_fs(&s).unwrap();
        assert!(f.provenance.iter().all(|pr| match pr {
            Provenance::Minor(m) => m.size() != p.t - 1 || m.cols.iter().all(|c| c.col == m.cols[0].col),
            Provenance::Label(_) => true,
        }));
        let s2 = ZeroSet::parse(p, "1,1;2,2").unwrap();
        assert!(has_cross_family(&s2));
    }

    #[test]
    fn hypergraph_ideal_contains_hs_ideal() {
        let p = params(4, 2, 5, 4);
        let s = ZeroSet::parse(p, "1,1;2,2").unwrap();
        let h = build_hs(&s);
        let small = build_hypergraph_ideal(&h).unwrap();
        let big = build_hypergraph_ideal(&closure(&h)).unwrap();
        assert!(small.generators.iter().all(|f| big.generators.contains(f)));
    }

    #[test]
    fn da_examples() {
        let a = RatMatrix::from_rows(vec![vec![rational(2, 1)], vec![rational(3, 1)]]).unwrap();
        let d = build_da(&a, 2).unwrap();
        let expect = RatMatrix::from_rows(vec![
            vec![rational(1, 1), rational(2, 1), rational(0, 1), rational(0, 1)],
            vec![rational(0, 1), rational(0, 1), rational(1, 1), rational(3, 1)],
        ])
        .unwrap();
        assert_eq!(d, expect);
        let z = build_da(&RatMatrix::zeros(3, 2), 3).unwrap();
        for i in 0..3 {
            for j in 0..9 {
                assert_eq!(z[(i, j)] == rational(1, 1), j == 3 * i);
            }
        }
        assert!(build_da(&RatMatrix::zeros(3, 2), 2).is_err());
    }

    #[test]
    fn json_shape() {
        let p = params(2, 2, 2, 2);
        let v = build_fs(&ZeroSet::parse(p, "1,1;2,2").unwrap()).unwrap().to_json();
        assert_eq!(v["name"], "I_S[1,1;2,2]");
        assert_eq!(v["params"]["d"], 2);
        assert_eq!(v["provenance"][0], "var");
        assert_eq!(v["generators"][0], "x_1_1_1");
    }
}
