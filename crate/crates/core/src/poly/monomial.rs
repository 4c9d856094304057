use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::VarId;

/// A power product with sparse exponents, stored greatest variable first.
/// Zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(VarId, u32); 8]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial::from_exponents([(v, 1)])
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_exponents<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Monomial {
        let mut exps: SmallVec<[(VarId, u32); 8]> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: SmallVec<[(VarId, u32); 8]> = SmallVec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial { exps: merged, degree }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps.binary_search_by_key(&v, |&(w, _)| w).map(|i| self.exps[i].1).unwrap_or(0)
    }

    pub fn variables(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, ea) = self.exps[i];
            let (b, eb) = other.exps[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    exps.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.exps {
            loop {
                if j == other.exps.len() {
                    return false;
                }
                let (w, f) = other.exps[j];
                match w.cmp(&v) {
                    Ordering::Less => j += 1,
                    Ordering::Equal => {
                        if f < e {
                            return false;
                        }
                        j += 1;
                        break;
                    }
                    Ordering::Greater => return false,
                }
            }
        }
        true
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = SmallVec::with_capacity(other.exps.len());
        let mut i = 0;
        for &(w, f) in &other.exps {
            if i < self.exps.len() && self.exps[i].0 == w {
                let e = self.exps[i].1;
                if f > e {
                    exps.push((w, f - e));
                }
                i += 1;
            } else {
                exps.push((w, f));
            }
        }
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, ea) = self.exps[i];
            let (b, eb) = other.exps[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    exps.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a, ea.max(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    /// No variable in common.
    pub fn coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Lexicographic comparison with respect to the variable order.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        for (&(a, ea), &(b, eb)) in self.exps.iter().zip(other.exps.iter()) {
            if a != b {
                return if a.greater_than(b) { Ordering::Greater } else { Ordering::Less };
            }
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }

    /// Degree reverse lexicographic comparison.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut i, mut j) = (self.exps.len(), other.exps.len());
        while i > 0 && j > 0 {
            let (a, ea) = self.exps[i - 1];
            let (b, eb) = other.exps[j - 1];
            if a != b {
                // the monomial containing the smaller variable is smaller
                return if a.greater_than(b) { Ordering::Greater } else { Ordering::Less };
            }
            if ea != eb {
                return eb.cmp(&ea);
            }
            i -= 1;
            j -= 1;
        }
        // equal degree and one is a suffix of the other: only possible if equal
        Ordering::Equal
    }

    /// Split into (auxiliary part, matrix part).
    pub fn split_aux(&self) -> (Monomial, Monomial) {
        let k = self.exps.iter().take_while(|(v, _)| v.is_aux()).count();
        (
            Monomial::from_sorted(SmallVec::from_slice(&self.exps[..k])),
            Monomial::from_sorted(SmallVec::from_slice(&self.exps[k..])),
        )
    }

    fn from_sorted(exps: SmallVec<[(VarId, u32); 8]>) -> Monomial {
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    /// Exponent of `v` lowered by one, if present.
    pub fn derive(&self, v: VarId) -> Option<(u32, Monomial)> {
        let e = self.exponent(v);
        if e == 0 {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .filter_map(|&(w, f)| if w == v { (f > 1).then_some((w, f - 1)) } else { Some((w, f)) })
            .collect();
        Some((e, Monomial::from_sorted(exps)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        // factors print in matrix-row order, as in a determinant expansion
        let mut factors: SmallVec<[(VarId, u32); 8]> = self.exps.clone();
        factors.sort_by_key(|&(v, _)| v.display_key());
        for (k, &(v, e)) in factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
