use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// Monomial orders over the variable order of [`VarId`](super::VarId).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum TermOrder {
    /// Pure lexicographic order; the order of every stated Gröbner basis.
    #[default]
    Lex,
    /// Degree reverse lexicographic order.
    DegRevLex,
    /// Block order: auxiliary variables first (lex), ties broken by lex on the
    /// matrix variables. Every monomial containing an auxiliary variable is
    /// above every monomial free of them.
    Elimination,
    /// Block order: auxiliary variables first (lex), ties broken by degrevlex
    /// on the matrix variables.
    EliminationDegRevLex,
}

impl TermOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            // auxiliary variables rank above matrix variables, so lex is
            // already an elimination order for them
            TermOrder::Lex | TermOrder::Elimination => a.cmp_lex(b),
            TermOrder::DegRevLex => a.cmp_grevlex(b),
            TermOrder::EliminationDegRevLex => {
                let (a_aux, a_rest) = a.split_aux();
                let (b_aux, b_rest) = b.split_aux();
                a_aux.cmp_lex(&b_aux).then_with(|| a_rest.cmp_grevlex(&b_rest))
            }
        }
    }

    /// `true` if `(a, b)` is in decreasing order (`a > b`).
    pub fn greater(self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }

    pub fn is_elimination(self) -> bool {
        matches!(self, TermOrder::Lex | TermOrder::Elimination | TermOrder::EliminationDegRevLex)
    }
}
