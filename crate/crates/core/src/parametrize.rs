//! Rational parametrizations of the components, exact image tests and
//! generic-rank checks of their Jacobians.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::dimdeg::dim_formula;
use crate::error::{Error, Result};
use crate::grid::{is_minimal_type, representative, CombType, GridParams, GridPoint, ZeroSet};
use crate::ideals::{build_da, build_f_empty, build_fjs, build_next_minors, eval_at, params_json, IdealPresentation};
use crate::linalg::{random_nonzero_rational, random_rational, RatMatrix};
use crate::par::par_map;
use crate::poly::{Polynomial, Rational, VarId};

/// Numerators in `[-9, 9]`, denominators in `[1, 9]`.
pub const ENTRY_BOUND: i64 = 9;

/// Which parametrization: of the empty-set component (any `k1`), or of a
/// component with zeros (`k1 = 2`, representative zero set).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Empty,
    Nonempty,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Empty => "empty",
            Branch::Nonempty => "nonempty",
        })
    }
}

impl FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Branch> {
        match s {
            "empty" => Ok(Branch::Empty),
            "nonempty" => Ok(Branch::Nonempty),
            _ => Err(Error::Parse(format!("branch must be 'empty' or 'nonempty', got {s:?}"))),
        }
    }
}

/// Block layout of a parameter space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamShape {
    pub branch: Branch,
    pub params: GridParams,
    pub comb: CombType,
    /// The representative zero set (empty for the empty branch).
    pub zeros: ZeroSet,
}

impl ParamShape {
    pub fn new(branch: Branch, p: &GridParams, c: CombType) -> Result<ParamShape> {
        match branch {
            Branch::Empty => {
                if !c.is_empty_type() {
                    return Err(Error::Hypothesis(format!("the empty branch takes type (0,0), got {c}")));
                }
                Ok(ParamShape { branch, params: *p, comb: c, zeros: ZeroSet::empty(*p) })
            }
            Branch::Nonempty => {
                p.require_k1_two("the nonempty parametrization")?;
                if c.is_empty_type() || !is_minimal_type(p, c) {
                    return Err(Error::Hypothesis(format!(
                        "the nonempty branch needs a minimal nonempty type, got {c} for {p}"
                    )));
                }
                Ok(ParamShape { branch, params: *p, comb: c, zeros: representative(c, p)? })
            }
        }
    }

    /// Columns of the middle block's `A` (free columns of the representative).
    fn free(&self) -> usize {
        self.params.k2 - self.comb.u - self.comb.v
    }

    /// `(name, rows, cols)` in parameter order.
    pub fn blocks(&self) -> Vec<(&'static str, usize, usize)> {
        let GridParams { d, k1, k2, t } = self.params;
        match self.branch {
            Branch::Empty => vec![("M", d, t - 1), ("N", t - 1, k2), ("A", k2, k1 - 1)],
            Branch::Nonempty => {
                let (u, v, w) = (self.comb.u, self.comb.v, self.free());
                vec![("M", d, t), ("N1", t - 1, u), ("N2", t - 2, w), ("A", w, 1), ("N3", t - 1, v)]
            }
        }
    }

    pub fn parameter_count(&self) -> usize {
        self.blocks().iter().map(|(_, r, c)| r * c).sum()
    }

    /// Dimension of the known symmetry group acting on fibers.
    pub fn fiber_dim(&self) -> usize {
        let t = self.params.t;
        match self.branch {
            Branch::Empty => (t - 1) * (t - 1),
            Branch::Nonempty => (t - 1) * (t - 1) + 1,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.params.num_variables()
    }

    pub fn random_point<R: Rng>(&self, rng: &mut R) -> ParamPoint {
        let blocks = self.blocks().iter().map(|&(_, r, c)| RatMatrix::random(r, c, ENTRY_BOUND, rng)).collect();
        ParamPoint { shape: self.clone(), blocks }
    }

    /// Where each ambient matrix column comes from: `(block, column)` of the
    /// assembled product blocks, or `None` for a zero column.
    fn column_sources(&self) -> Vec<Option<(usize, usize)>> {
        let GridParams { k1, k2, .. } = self.params;
        let mut src = vec![None; k1 * k2];
        match self.branch {
            Branch::Empty => {
                for (j, s) in src.iter_mut().enumerate() {
                    *s = Some((0, j));
                }
            }
            Branch::Nonempty => {
                let (u, v) = (self.comb.u, self.comb.v);
                let col = |r: usize, c: usize| GridPoint::new(r, c).matrix_column(k1);
                for c in 1..=u {
                    src[col(2, c)] = Some((0, c - 1));
                }
                for c in u + 1..=k2 - v {
                    src[col(1, c)] = Some((1, 2 * (c - u - 1)));
                    src[col(2, c)] = Some((1, 2 * (c - u - 1) + 1));
                }
                for c in k2 - v + 1..=k2 {
                    src[col(1, c)] = Some((2, c - (k2 - v) - 1));
                }
            }
        }
        src
    }

    /// Parameter blocks as matrices of fresh auxiliary variables, numbered in
    /// parameter order row by row.
    fn symbolic_blocks(&self) -> Vec<PolyMat> {
        let mut next = 0;
        self.blocks()
            .iter()
            .map(|&(_, r, c)| {
                let m = PolyMat::from_fn(r, c, |i, j| Polynomial::var(VarId::aux(next + (i * c + j) as u32)));
                next += (r * c) as u32;
                m
            })
            .collect()
    }

    /// The map with polynomial entries, `d x k1*k2`, zero columns included.
    pub fn symbolic_phi(&self) -> PolyMat {
        let b = self.symbolic_blocks();
        let t = self.params.t;
        let products = match self.branch {
            Branch::Empty => vec![b[0].mul(&b[1]).mul(&PolyMat::da(&b[2]))],
            Branch::Nonempty => vec![
                b[0].columns(0, t - 1).mul(&b[1]),
                b[0].columns(1, t - 1).mul(&b[2]).mul(&PolyMat::da(&b[3])),
                b[0].columns(1, t).mul(&b[4]),
            ],
        };
        let src = self.column_sources();
        PolyMat::from_fn(self.params.d, src.len(), |i, j| match src[j] {
            Some((k, c)) => products[k][(i, c)].clone(),
            None => Polynomial::zero(),
        })
    }
}

/// A point of the parameter space: blocks in the order of
/// [`ParamShape::blocks`].
#[derive(Clone, Debug)]
pub struct ParamPoint {
    pub shape: ParamShape,
    pub blocks: Vec<RatMatrix>,
}

impl ParamPoint {
    pub fn new(shape: ParamShape, blocks: Vec<RatMatrix>) -> Result<ParamPoint> {
        let want = shape.blocks();
        if want.len() != blocks.len() {
            return Err(Error::Dimension(format!("expected {} parameter blocks, got {}", want.len(), blocks.len())));
        }
        for ((name, r, c), b) in want.iter().zip(&blocks) {
            if (b.rows(), b.cols()) != (*r, *c) {
                return Err(Error::Dimension(format!("{name} must be {r}x{c}, got {}x{}", b.rows(), b.cols())));
            }
        }
        Ok(ParamPoint { shape, blocks })
    }

    /// All entries in parameter order.
    pub fn values(&self) -> Vec<Rational> {
        self.blocks.iter().flat_map(|b| (0..b.rows()).flat_map(move |i| b.row(i).to_vec())).collect()
    }
}

/// The image matrix, `d x k1*k2`, with zero columns at the zero set.
pub fn phi(x: &ParamPoint) -> Result<RatMatrix> {
    let shape = &x.shape;
    let b = &x.blocks;
    let t = shape.params.t;
    let products = match shape.branch {
        Branch::Empty => vec![b[0].mul(&b[1])?.mul(&build_da(&b[2], shape.params.k1)?)?],
        Branch::Nonempty => {
            let m = &b[0];
            let cols = |lo: usize, hi: usize| m.select_columns(&(lo..hi).collect::<Vec<_>>());
            vec![
                cols(0, t - 1).mul(&b[1])?,
                cols(1, t - 1).mul(&b[2])?.mul(&build_da(&b[3], 2)?)?,
                cols(1, t).mul(&b[4])?,
            ]
        }
    };
    let src = shape.column_sources();
    Ok(RatMatrix::from_fn(shape.params.d, src.len(), |i, j| match src[j] {
        Some((k, c)) => products[k][(i, c)].clone(),
        None => Rational::zero(),
    }))
}

/// The ideal the image must satisfy: `F_∅`, or the generators of `J_S`
/// together with the `(t+1)`-minors of the matrix without zero columns.
pub fn target_ideal(shape: &ParamShape) -> Result<IdealPresentation> {
    match shape.branch {
        Branch::Empty => build_f_empty(&shape.params),
        Branch::Nonempty => {
            let j = build_fjs(&shape.zeros)?;
            Ok(j.union(&build_next_minors(&shape.zeros), format!("J_S+I_t+1[{}]", shape.zeros)))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageCheck {
    pub in_variety: bool,
    /// The first generator not vanishing at the point.
    pub failing: Option<String>,
}

/// Evaluates every generator exactly at `point`.
pub fn image_in_variety(point: &RatMatrix, ideal: &IdealPresentation) -> ImageCheck {
    let k1 = ideal.params.k1;
    match ideal.generators.iter().find(|f| !eval_at(f, point, k1).is_zero()) {
        Some(f) => ImageCheck { in_variety: false, failing: Some(f.to_string()) },
        None => ImageCheck { in_variety: true, failing: None },
    }
}

/// A generator of per-trial streams: trial `i` draws from stream `i` of the
/// seeded ChaCha generator, so results do not depend on scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Jacobian of the symbolic map, one row per ambient entry and one column
/// per parameter.
pub struct Jacobian {
    entries: Vec<Vec<Polynomial>>,
    params: usize,
}

impl Jacobian {
    pub fn new(shape: &ParamShape) -> Jacobian {
        let phi = shape.symbolic_phi();
        let n = shape.parameter_count();
        let entries = phi.data.iter().map(|f| (0..n).map(|k| f.derivative(VarId::aux(k as u32))).collect()).collect();
        Jacobian { entries, params: n }
    }

    /// Exact rank at a parameter point.
    pub fn rank_at(&self, values: &[Rational]) -> usize {
        let at = |v: VarId| v.aux_index().map_or_else(Rational::zero, |k| values[k as usize].clone());
        RatMatrix::from_fn(self.entries.len(), self.params, |i, j| self.entries[i][j].eval(at)).rank()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ParamReport {
    pub branch: Branch,
    pub params: Value,
    #[serde(rename = "type")]
    pub comb_type: [usize; 2],
    pub trials: usize,
    pub ranks: Vec<usize>,
    pub max_rank: usize,
    /// Closed-form dimension, when its hypotheses hold.
    pub expected: Option<usize>,
    pub parameter_count: usize,
    pub fiber_dim: usize,
    /// `max_rank <= parameters - fiber` and `<= ambient`.
    pub rank_bound_ok: bool,
    pub image_points: usize,
    pub image_failures: usize,
    pub first_failure: Option<String>,
    pub agree: bool,
}

/// Image membership on `points` seeded points and the maximal Jacobian rank
/// over `trials` seeded points.
pub fn param_check(
    branch: Branch,
    p: &GridParams,
    c: CombType,
    points: usize,
    trials: usize,
    seed: u64,
    threads: usize,
) -> Result<ParamReport> {
    let shape = ParamShape::new(branch, p, c)?;
    let ideal = target_ideal(&shape)?;
    let idx: Vec<u64> = (0..points as u64).collect();
    let checks = par_map(&idx, threads, |&i| -> Result<ImageCheck> {
        let x = shape.random_point(&mut trial_rng(seed, i));
        Ok(image_in_variety(&phi(&x)?, &ideal))
    });
    let mut failures = 0;
    let mut first_failure = None;
    for ch in checks {
        let ch = ch?;
        if !ch.in_variety {
            failures += 1;
            first_failure = first_failure.or(ch.failing);
        }
    }

    let jac = Jacobian::new(&shape);
    // rank trials use streams after the image points
    let tidx: Vec<u64> = (0..trials as u64).map(|i| points as u64 + i).collect();
    let ranks = par_map(&tidx, threads, |&i| jac.rank_at(&shape.random_point(&mut trial_rng(seed, i)).values()));
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    let expected = match branch {
        Branch::Empty => Some(dim_formula(p, c)?),
        Branch::Nonempty => dim_formula(p, c).ok(),
    };
    let bound = shape.parameter_count() - shape.fiber_dim();
    let rank_bound_ok = max_rank <= bound && max_rank <= shape.ambient_dim();
    let agree = failures == 0 && rank_bound_ok && expected.is_none_or(|e| e == max_rank);
    Ok(ParamReport {
        branch,
        params: params_json(p),
        comb_type: [c.u, c.v],
        trials,
        ranks,
        max_rank,
        expected,
        parameter_count: shape.parameter_count(),
        fiber_dim: shape.fiber_dim(),
        rank_bound_ok,
        image_points: points,
        image_failures: failures,
        first_failure,
        agree,
    })
}

/// A random invertible `n x n` matrix.
fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> (RatMatrix, RatMatrix) {
    loop {
        let c = RatMatrix::random(n, n, ENTRY_BOUND, rng);
        if let Some(inv) = c.inverse() {
            return (c, inv);
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub action: &'static str,
    pub params: Value,
    #[serde(rename = "type")]
    pub comb_type: [usize; 2],
    pub instances: usize,
    pub held: usize,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.held == self.instances
    }
}

/// `φ(MC, C⁻¹N, A) = φ(M, N, A)` for random invertible `C` of size `t-1`.
pub fn gl_invariance(p: &GridParams, instances: usize, seed: u64) -> Result<SymmetryReport> {
    let shape = ParamShape::new(Branch::Empty, p, CombType::new(0, 0))?;
    let mut held = 0;
    for i in 0..instances as u64 {
        let mut rng = trial_rng(seed, i);
        let x = shape.random_point(&mut rng);
        let (c, cinv) = random_invertible(p.t - 1, &mut rng);
        let moved =
            ParamPoint::new(shape.clone(), vec![x.blocks[0].mul(&c)?, cinv.mul(&x.blocks[1])?, x.blocks[2].clone()])?;
        held += usize::from(phi(&x)? == phi(&moved)?);
    }
    Ok(SymmetryReport { action: "general-linear", params: params_json(p), comb_type: [0, 0], instances, held })
}

/// Invariance under `C = [[λ,0,0],[b1,B,b2],[0,0,μ]]` acting as
/// `(MC, L⁻¹N1, B⁻¹N2, A, R⁻¹N3)` with `L = [[λ,0],[b1,B]]` and
/// `R = [[B,b2],[0,μ]]`.
pub fn block_invariance(p: &GridParams, c: CombType, instances: usize, seed: u64) -> Result<SymmetryReport> {
    let shape = ParamShape::new(Branch::Nonempty, p, c)?;
    let t = p.t;
    let mut held = 0;
    for i in 0..instances as u64 {
        let mut rng = trial_rng(seed, i);
        let x = shape.random_point(&mut rng);
        let lambda = random_nonzero_rational(&mut rng, ENTRY_BOUND);
        let mu = random_nonzero_rational(&mut rng, ENTRY_BOUND);
        let (b, binv) = random_invertible(t - 2, &mut rng);
        let b1: Vec<Rational> = (0..t - 2).map(|_| random_rational(&mut rng, ENTRY_BOUND)).collect();
        let b2: Vec<Rational> = (0..t - 2).map(|_| random_rational(&mut rng, ENTRY_BOUND)).collect();
        let big = RatMatrix::from_fn(t, t, |r, s| match (r, s) {
            (0, 0) => lambda.clone(),
            (0, _) => Rational::zero(),
            (r, s) if r == t - 1 => {
                if s == t - 1 {
                    mu.clone()
                } else {
                    Rational::zero()
                }
            }
            (r, 0) => b1[r - 1].clone(),
            (r, s) if s == t - 1 => b2[r - 1].clone(),
            (r, s) => b[(r - 1, s - 1)].clone(),
        });
        let left = RatMatrix::from_fn(t - 1, t - 1, |r, s| big[(r, s)].clone());
        let right = RatMatrix::from_fn(t - 1, t - 1, |r, s| big[(r + 1, s + 1)].clone());
        let (Some(linv), Some(rinv)) = (left.inverse(), right.inverse()) else {
            return Err(Error::Dimension("block action matrix is singular".into()));
        };
        let moved = ParamPoint::new(
            shape.clone(),
            vec![
                x.blocks[0].mul(&big)?,
                linv.mul(&x.blocks[1])?,
                binv.mul(&x.blocks[2])?,
                x.blocks[3].clone(),
                rinv.mul(&x.blocks[4])?,
            ],
        )?;
        held += usize::from(phi(&x)? == phi(&moved)?);
    }
    Ok(SymmetryReport { action: "block-triangular", params: params_json(p), comb_type: [c.u, c.v], instances, held })
}

/// Dense matrix of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMat {
    pub fn from_fn<F: FnMut(usize, usize) -> Polynomial>(rows: usize, cols: usize, mut f: F) -> PolyMat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn mul(&self, other: &PolyMat) -> PolyMat {
        assert_eq!(self.cols, other.rows, "symbolic product shape");
        PolyMat::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Polynomial::zero(), |acc, k| &acc + &(&self[(i, k)] * &other[(k, j)]))
        })
    }

    /// Columns `lo..hi`.
    fn columns(&self, lo: usize, hi: usize) -> PolyMat {
        PolyMat::from_fn(self.rows, hi - lo, |i, j| self[(i, lo + j)].clone())
    }

    /// Symbolic `D_A` for `A` of shape `k2 x (k1-1)`.
    fn da(a: &PolyMat) -> PolyMat {
        let k1 = a.cols + 1;
        PolyMat::from_fn(a.rows, a.rows * k1, |i, j| {
            if j / k1 != i {
                Polynomial::zero()
            } else if j % k1 == 0 {
                Polynomial::one()
            } else {
                a[(i, j % k1 - 1)].clone()
            }
        })
    }

    /// Entrywise evaluation.
    pub fn eval(&self, values: &[Rational]) -> RatMatrix {
        let at = |v: VarId| v.aux_index().map_or_else(Rational::zero, |k| values[k as usize].clone());
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].eval(at))
    }
}

impl std::ops::Index<(usize, usize)> for PolyMat {
    type Output = Polynomial;
    fn index(&self, (i, j): (usize, usize)) -> &Polynomial {
        &self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::minimal_types;
    use crate::poly::rational;

    fn gp(d: usize, k1: usize, k2: usize, t: usize) -> GridParams {
        GridParams::new(d, k1, k2, t).unwrap()
    }

    #[test]
    fn zero_parameters_give_zero_image() {
        let shape = ParamShape::new(Branch::Empty, &gp(3, 2, 3, 3), CombType::new(0, 0)).unwrap();
        let blocks = shape.blocks().iter().map(|&(_, r, c)| RatMatrix::zeros(r, c)).collect();
        assert!(phi(&ParamPoint::new(shape, blocks).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn second_row_columns_are_scaled_first_row_columns() {
        let p = gp(3, 2, 3, 3);
        let shape = ParamShape::new(Branch::Empty, &p, CombType::new(0, 0)).unwrap();
        let x = shape.random_point(&mut trial_rng(1, 0));
        let img = phi(&x).unwrap();
        for i in 0..3 {
            let a = &x.blocks[2][(i, 0)];
            assert_eq!(img.column(2 * i + 1), img.column(2 * i).iter().map(|q| q * a).collect::<Vec<_>>());
        }
    }

    #[test]
    fn boundary_type_has_no_middle_block() {
        let p = gp(4, 2, 6, 4);
        let shape = ParamShape::new(Branch::Nonempty, &p, CombType::new(3, 3)).unwrap();
        let src = shape.column_sources();
        // 2*k2 - u - v columns before the zero columns are reinstated
        assert_eq!(src.iter().filter(|s| s.is_some()).count(), 6);
        assert_eq!(src.len(), 12);
        assert!(src.iter().all(|s| !matches!(s, Some((1, _)))));
        let img = phi(&shape.random_point(&mut trial_rng(2, 0))).unwrap();
        for &q in shape.zeros.points() {
            assert!(img.column(q.matrix_column(2)).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn shapes_are_validated() {
        let shape = ParamShape::new(Branch::Empty, &gp(3, 2, 3, 3), CombType::new(0, 0)).unwrap();
        assert!(ParamPoint::new(shape.clone(), vec![RatMatrix::zeros(1, 1)]).is_err());
        assert!(ParamShape::new(Branch::Nonempty, &gp(3, 2, 4, 3), CombType::new(0, 0)).is_err());
        assert!(ParamShape::new(Branch::Nonempty, &gp(3, 2, 4, 3), CombType::new(1, 3)).is_err());
        assert!(ParamShape::new(Branch::Empty, &gp(3, 2, 4, 3), CombType::new(1, 1)).is_err());
        assert_eq!("nonempty".parse::<Branch>().unwrap(), Branch::Nonempty);
    }

    #[test]
    fn symbolic_map_matches_numeric_map() {
        let p = gp(3, 2, 4, 3);
        let mut shapes = vec![ParamShape::new(Branch::Empty, &p, CombType::new(0, 0)).unwrap()];
        for c in minimal_types(&p).unwrap().into_iter().filter(|c| !c.is_empty_type()) {
            shapes.push(ParamShape::new(Branch::Nonempty, &p, c).unwrap());
        }
        shapes.push(ParamShape::new(Branch::Empty, &gp(4, 3, 3, 3), CombType::new(0, 0)).unwrap());
        for (k, shape) in shapes.iter().enumerate() {
            let x = shape.random_point(&mut trial_rng(5, k as u64));
            assert_eq!(shape.symbolic_phi().eval(&x.values()), phi(&x).unwrap());
        }
    }

    #[test]
    fn perturbed_point_leaves_the_variety() {
        let p = gp(3, 2, 3, 3);
        let shape = ParamShape::new(Branch::Empty, &p, CombType::new(0, 0)).unwrap();
        let ideal = target_ideal(&shape).unwrap();
        let mut seen_failure = false;
        for i in 0..5 {
            let mut img = phi(&shape.random_point(&mut trial_rng(9, i))).unwrap();
            assert!(image_in_variety(&img, &ideal).in_variety);
            img[(0, 0)] += rational(1, 1);
            let ch = image_in_variety(&img, &ideal);
            if !ch.in_variety {
                assert!(ch.failing.is_some());
                seen_failure = true;
                break;
            }
        }
        assert!(seen_failure);
    }

    #[test]
    fn small_ranks_match_formulas() {
        let r = param_check(Branch::Empty, &gp(2, 2, 2, 2), CombType::new(0, 0), 20, 3, 1, 1).unwrap();
        assert_eq!((r.max_rank, r.expected), (5, Some(5)));
        assert!(r.agree);
        let r = param_check(Branch::Nonempty, &gp(2, 2, 2, 2), CombType::new(1, 1), 20, 3, 1, 2).unwrap();
        assert_eq!((r.max_rank, r.expected), (4, Some(4)));
        assert!(r.agree, "{r:?}");
    }

    #[test]
    fn reports_are_schedule_independent() {
        let p = gp(3, 2, 3, 3);
        let a = param_check(Branch::Empty, &p, CombType::new(0, 0), 8, 3, 11, 1).unwrap();
        let b = param_check(Branch::Empty, &p, CombType::new(0, 0), 8, 3, 11, 4).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn symmetries_hold() {
        assert!(gl_invariance(&gp(3, 2, 3, 3), 5, 3).unwrap().passed());
        assert!(block_invariance(&gp(3, 2, 4, 3), CombType::new(1, 2), 5, 3).unwrap().passed());
        assert!(block_invariance(&gp(2, 2, 2, 2), CombType::new(1, 1), 5, 3).unwrap().passed());
    }
}
