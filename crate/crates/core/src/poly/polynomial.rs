use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational, TermOrder, VarId};
use crate::error::{Error, Result};

/// A polynomial over the rationals.
///
/// Terms are kept in canonical form: descending lex order, no zero
/// coefficients, no repeated monomials. Structural equality is ideal-free
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Polynomial {
        Polynomial::from_terms([(Monomial::one(), c)])
    }

    pub fn var(v: VarId) -> Polynomial {
        Polynomial { terms: vec![(Monomial::var(v), Rational::one())] }
    }

    pub fn monomial(m: Monomial, c: Rational) -> Polynomial {
        Polynomial::from_terms([(m, c)])
    }

    /// Canonicalizes an arbitrary list of terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Polynomial {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp_lex(&a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((last, acc)) if *last == m => *acc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.iter().flat_map(|(m, _)| m.variables()).collect()
    }

    /// The maximal term under `order`.
    pub fn leading_term(&self, order: TermOrder) -> Result<(&Monomial, &Rational)> {
        let first = self.terms.first().ok_or(Error::ZeroLeadingTerm)?;
        if matches!(order, TermOrder::Lex | TermOrder::Elimination) {
            return Ok((&first.0, &first.1));
        }
        let best = self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0)).expect("nonempty");
        Ok((&best.0, &best.1))
    }

    pub fn leading_monomial(&self, order: TermOrder) -> Result<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        // multiplication by a monomial preserves lex order
        Polynomial { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect() }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            Err(_) => Polynomial::zero(),
        }
    }

    /// Negates if the leading coefficient under `order` is negative.
    pub fn sign_normalized(&self, order: TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn eval<F: Fn(VarId) -> Rational>(&self, point: F) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.exponents() {
                let x = point(v);
                for _ in 0..e {
                    t *= &x;
                }
                if t.is_zero() {
                    break;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn derivative(&self, v: VarId) -> Polynomial {
        Polynomial::from_terms(
            self.terms.iter().filter_map(|(m, c)| m.derive(v).map(|(e, m)| (m, c * Rational::from_integer(e.into())))),
        )
    }

    /// Replaces variables by polynomials; unmapped variables are kept.
    pub fn substitute<F: Fn(VarId) -> Option<Polynomial>>(&self, map: F) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for &(v, e) in m.exponents() {
                let base = map(v).unwrap_or_else(|| Polynomial::var(v));
                for _ in 0..e {
                    t = &t * &base;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_lex(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate_other { -c } else { c.clone() })));
        Polynomial { terms: out }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                terms.push((m.mul(n), a * b));
            }
        }
        Polynomial::from_terms(terms)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}
