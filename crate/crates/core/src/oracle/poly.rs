//! Integer Laurent polynomials in `v` and Hecke algebra elements in the
//! standard basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial with integer coefficients, stored sparsely.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · v^e`
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `v + v⁻¹`
    pub fn quantum_two() -> Self {
        Self::monomial(1, 1) + Self::monomial(1, -1)
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: i32) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for zero.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// The involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, &k)| (e, k * c)).collect() }
    }
}

impl Add for LaurentPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + -rhs
    }
}

impl Neg for LaurentPoly {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, &c) in &self.terms {
            for (&b, &d) in &rhs.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, &c) in self.terms.iter().rev() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let abs = c.abs();
            let coeff = if abs == 1 && e != 0 { String::new() } else { abs.to_string() };
            let var = match e {
                0 => String::new(),
                1 => "v".into(),
                _ => format!("v^{e}"),
            };
            write!(f, "{sign}{coeff}{var}")?;
            first = false;
        }
        Ok(())
    }
}

/// A Hecke algebra element: element index ↦ coefficient, no zero entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<usize, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c · B_w` for whichever basis the caller is working in.
    pub fn basis(w: usize, c: LaurentPoly) -> Self {
        let mut h = Self::zero();
        h.add(w, c);
        h
    }

    pub fn add(&mut self, w: usize, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry = std::mem::take(entry) + c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coefficient(&self, w: usize) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (w, p) in self.terms() {
            out.add(w, c * p);
        }
        out
    }

    pub fn plus(mut self, other: &Self) -> Self {
        for (w, p) in other.terms() {
            self.add(w, p.clone());
        }
        self
    }
}
