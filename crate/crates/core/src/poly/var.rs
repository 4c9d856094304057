use std::fmt;

use crate::grid::GridPoint;

/// Ranks below this bound belong to auxiliary variables (elimination tags,
/// Rabinowitsch variables, parametrization parameters). Every auxiliary
/// variable is greater than every matrix variable.
const AUX_SPACE: u32 = 1 << 24;

/// A ring variable, either an entry `x_{i(j,l)}` of the symbolic matrix or an
/// auxiliary variable `y_k`.
///
/// The derived `Ord` compares ranks: a *smaller* rank is a *greater* variable.
/// Matrix variables are ranked column-major over the flattened grid,
/// `x_{1(1,1)} > x_{2(1,1)} > ... > x_{d(1,1)} > x_{1(2,1)} > ...`, with grid
/// columns `(1,1),(2,1),...,(k1,1),(1,2),...` in that order.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VarId(u32);

impl VarId {
    /// Matrix entry in row `row` (1-based) and grid column `point`.
    pub fn x(row: usize, point: GridPoint) -> VarId {
        assert!(
            (1..256).contains(&row) && (1..256).contains(&point.row) && (1..256).contains(&point.col),
            "variable index out of range"
        );
        VarId(AUX_SPACE + ((point.col as u32) << 16 | (point.row as u32) << 8 | row as u32))
    }

    pub fn aux(index: u32) -> VarId {
        assert!(index < AUX_SPACE, "auxiliary index out of range");
        VarId(index)
    }

    pub fn rank(self) -> u32 {
        self.0
    }

    pub fn is_aux(self) -> bool {
        self.0 < AUX_SPACE
    }

    pub fn aux_index(self) -> Option<u32> {
        self.is_aux().then_some(self.0)
    }

    /// `(row, grid point)` for a matrix variable.
    pub fn matrix_entry(self) -> Option<(usize, GridPoint)> {
        if self.is_aux() {
            return None;
        }
        let packed = self.0 - AUX_SPACE;
        let row = (packed & 0xff) as usize;
        let grid_row = ((packed >> 8) & 0xff) as usize;
        let col = ((packed >> 16) & 0xff) as usize;
        Some((row, GridPoint::new(grid_row, col)))
    }

    /// Sort key for printing factors: auxiliaries first, then matrix entries
    /// by matrix row and then column.
    pub(crate) fn display_key(self) -> (u32, u32) {
        match self.matrix_entry() {
            None => (0, self.0),
            Some((row, _)) => (row as u32, self.0),
        }
    }

    /// `true` if `self` is strictly greater than `other` in the variable order.
    pub fn greater_than(self, other: VarId) -> bool {
        self.0 < other.0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.matrix_entry() {
            Some((row, p)) => write!(f, "x_{}_{}_{}", row, p.row, p.col),
            None => write!(f, "y_{}", self.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_column_major_then_row() {
        let p11 = GridPoint::new(1, 1);
        let p21 = GridPoint::new(2, 1);
        let p12 = GridPoint::new(1, 2);
        assert!(VarId::x(1, p11).greater_than(VarId::x(2, p11)));
        assert!(VarId::x(4, p11).greater_than(VarId::x(1, p21)));
        assert!(VarId::x(4, p21).greater_than(VarId::x(1, p12)));
        assert!(VarId::aux(7).greater_than(VarId::x(1, p11)));
    }

    #[test]
    fn roundtrip_entry() {
        let v = VarId::x(3, GridPoint::new(2, 11));
        assert_eq!(v.matrix_entry(), Some((3, GridPoint::new(2, 11))));
        assert_eq!(v.to_string(), "x_3_2_11");
        assert_eq!(VarId::aux(5).to_string(), "y_5");
    }
}
