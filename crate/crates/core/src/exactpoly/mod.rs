//! Exact polynomial arithmetic over the rationals in the three projective
//! coordinates `x`, `y`, `z`.
//!
//! [`MultiPoly`] is a sparse map from exponent triples to nonzero rational
//! coefficients. Terms are kept in graded-lexicographic order with
//! `x > y > z`, so the leading term is always the last entry of the map.

mod gcd;
mod parse;
mod resultant;
pub mod upoly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use parse::parse_poly;

/// Coefficient field. `BigRational` is always reduced with a positive
/// denominator, and zero is `0/1`.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `n` or `n/d` (with optional leading sign).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{name}` at byte {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("negative exponent at byte {pos}")]
    NegativeExponent { pos: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

/// Exponent triple `(e_x, e_y, e_z)`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= o.0[i])
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        Monomial([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, [0, 0, 0])
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Self::term(Rational::one(), e)
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    pub fn term(c: Rational, exps: [u32; 3]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exps), c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial([0, 0, 0]))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// `(is_homogeneous, total_degree)`; undefined for zero.
    pub fn degree_info(&self) -> Result<(bool, u32), PolyError> {
        let d = self.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok((self.is_homogeneous(), d))
    }

    /// Homogeneous part of the given degree.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// Divides by a monomial; every term must be divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<MultiPoly> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            if !m.divides(k) {
                return None;
            }
            out.insert(k.div(m), c.clone());
        }
        Some(Self { terms: out })
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        let i = v.index();
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
            let mut e = m.0;
            let k = e[i];
            e[i] -= 1;
            (Monomial(e), c * rat(k as i64))
        }))
    }

    pub fn gradient(&self) -> [MultiPoly; 3] {
        [
            self.derivative(Var::X),
            self.derivative(Var::Y),
            self.derivative(Var::Z),
        ]
    }

    /// Replaces each variable by the corresponding image and expands.
    pub fn substitute(&self, images: &[MultiPoly; 3]) -> MultiPoly {
        // Horner in x, then y, then z with memoised powers.
        let mut powers: [Vec<MultiPoly>; 3] = Default::default();
        for v in Var::ALL {
            let d = self.degree_in(v) as usize;
            let mut pw = vec![MultiPoly::one()];
            for k in 1..=d {
                let next = &pw[k - 1] * &images[v.index()];
                pw.push(next);
            }
            powers[v.index()] = pw;
        }
        // group by x exponent, then y exponent
        let mut by_x: BTreeMap<u32, BTreeMap<u32, MultiPoly>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let inner = by_x.entry(m.0[0]).or_default().entry(m.0[1]).or_default();
            *inner = &*inner + &powers[2][m.0[2] as usize].scale(c);
        }
        let mut out = MultiPoly::zero();
        for (ex, ys) in by_x {
            let mut acc = MultiPoly::zero();
            for (ey, zpart) in ys {
                acc = &acc + &(&powers[1][ey as usize] * &zpart);
            }
            out = &out + &(&powers[0][ex as usize] * &acc);
        }
        out
    }

    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        let mut s = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..3 {
                if m.0[i] > 0 {
                    t *= num_traits::pow(point[i].clone(), m.0[i] as usize);
                }
            }
            s += t;
        }
        s
    }

    /// Sets one variable to a rational value.
    pub fn specialize(&self, v: Var, value: &Rational) -> MultiPoly {
        let i = v.index();
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = m.0;
            let k = e[i];
            e[i] = 0;
            (Monomial(e), c * num_traits::pow(value.clone(), k as usize))
        }))
    }

    /// Affine translation `v -> v + shift` for each variable.
    pub fn translate(&self, shift: &[Rational; 3]) -> MultiPoly {
        let mut out = self.clone();
        for v in Var::ALL {
            out = out.shift_var(v, &shift[v.index()]);
        }
        out
    }

    /// `v -> v + s` by Horner's rule in `v`.
    pub fn shift_var(&self, v: Var, s: &Rational) -> MultiPoly {
        if s.is_zero() {
            return self.clone();
        }
        let mut acc = MultiPoly::zero();
        for c in self.coefficients_in(v).iter().rev() {
            // acc * (v + s) + c
            let mut e = [0; 3];
            e[v.index()] = 1;
            acc = &(&acc.mul_monomial(&Monomial(e)) + &acc.scale(s)) + c;
        }
        acc
    }

    /// Coefficients with respect to `v`: entry `k` multiplies `v^k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let i = v.index();
        let mut out = vec![MultiPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let mut e = m.0;
            let k = e[i] as usize;
            e[i] = 0;
            out[k].add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn from_coefficients_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let i = v.index();
        let mut p = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.0;
                e[i] += k as u32;
                p.add_term(Monomial(e), a.clone());
            }
        }
        p
    }

    /// Leading coefficient with respect to `v`.
    pub fn lc_in(&self, v: Var) -> MultiPoly {
        let d = self.degree_in(v);
        let i = v.index();
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.0[i] == d).map(|(m, c)| {
            let mut e = m.0;
            e[i] = 0;
            (Monomial(e), c.clone())
        }))
    }

    /// Homogenizes with `z` to the total degree.
    pub fn homogenize(&self) -> MultiPoly {
        let Some(d) = self.total_degree() else {
            return Self::zero();
        };
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = m.0;
            e[2] += d - m.degree();
            (Monomial(e), c.clone())
        }))
    }

    /// Content-free normal form: integer coefficients with gcd 1 and
    /// positive leading coefficient.
    pub fn normalized(&self) -> MultiPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den / c.denom());
            g = g.gcd(&n);
        }
        let (_, lc) = self.leading_term().unwrap();
        let sign = if lc.is_negative() { -BigInt::one() } else { BigInt::one() };
        let factor = Rational::new(den * sign, g);
        self.scale(&factor)
    }

    /// Monic form (leading coefficient 1).
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// True if `self = lambda * other` for some nonzero rational.
    pub fn is_scalar_multiple_of(&self, other: &MultiPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (m0, a0) = self.leading_term().unwrap();
        let b0 = other.coeff(m0);
        if b0.is_zero() {
            return false;
        }
        self.terms.iter().all(|(m, a)| {
            let b = other.coeff(m);
            !b.is_zero() && a * &b0 == &b * a0
        })
    }

    /// Exact division; fails with `NotDivisible` when a remainder is left.
    pub fn exact_divide(&self, q: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let (lm, lc) = q.leading_term().ok_or(PolyError::DivisionByZero)?;
        let (lm, lc_inv) = (*lm, lc.recip());
        if q.terms.len() == 1 {
            return self
                .div_monomial(&lm)
                .map(|p| p.scale(&lc_inv))
                .ok_or(PolyError::NotDivisible);
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(PolyError::NotDivisible);
            }
            let tm = m.div(&lm);
            let tc = c * &lc_inv;
            for (qm, qc) in &q.terms {
                rem.add_term(qm.mul(&tm), -(qc * &tc));
            }
            quot.add_term(tm, tc);
        }
        Ok(quot)
    }

    pub fn divides(&self, p: &MultiPoly) -> bool {
        !self.is_zero() && p.exact_divide(self).is_ok()
    }

    /// Removes every factor of `q` from `self`, returning the quotient and
    /// the number of factors removed.
    pub fn remove_factor(&self, q: &MultiPoly) -> (MultiPoly, u32) {
        let mut p = self.clone();
        let mut k = 0;
        if q.is_constant() || p.is_zero() {
            return (p, 0);
        }
        while let Ok(r) = p.exact_divide(q) {
            p = r;
            k += 1;
        }
        (p, k)
    }

    pub fn gcd(&self, q: &MultiPoly) -> MultiPoly {
        gcd::gcd(self, q)
    }

    /// Sylvester resultant with respect to `v`.
    pub fn resultant_wrt(&self, q: &MultiPoly, v: Var) -> MultiPoly {
        resultant::sylvester_resultant(self, q, v)
    }

    /// Squarefree part of a nonzero polynomial (up to scalar).
    pub fn squarefree_part(&self) -> MultiPoly {
        let mut g = self.clone();
        for v in Var::ALL {
            if self.uses(v) {
                g = g.gcd(&self.derivative(v));
            }
        }
        if g.is_constant() {
            return self.normalized();
        }
        self.exact_divide(&g).expect("gcd divides").normalized()
    }

    /// Tests squarefreeness. A squarefree restriction to some line is an
    /// exact certificate; otherwise falls back to gcds with the partials.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.is_constant() {
            return true;
        }
        if self.is_homogeneous() && restricted_squarefree_certificate(self) {
            return true;
        }
        let mut g = self.clone();
        for v in Var::ALL {
            if self.uses(v) {
                g = g.gcd(&self.derivative(v));
                if g.is_constant() {
                    return true;
                }
            }
        }
        g.is_constant()
    }

}

/// If the restriction of a homogeneous form to a line is a nonzero
/// squarefree binary form, the form itself is squarefree.
fn restricted_squarefree_certificate(p: &MultiPoly) -> bool {
    let d = match p.total_degree() {
        Some(d) if d > 0 => d,
        _ => return false,
    };
    // lines z = a x + b y for a small deterministic set of (a, b)
    for (a, b) in [(3i64, 7i64), (-5, 2), (11, -4), (2, 13)] {
        let img = [
            MultiPoly::x(),
            MultiPoly::y(),
            &MultiPoly::x().scale(&rat(a)) + &MultiPoly::y().scale(&rat(b)),
        ];
        let r = p.substitute(&img);
        if r.is_zero() || r.total_degree() != Some(d) {
            continue;
        }
        // binary form in x,y; dehomogenize y=1 and check root at infinity
        let u = r.specialize(Var::Y, &Rational::one());
        let inf_mult = d - u.degree_in(Var::X);
        if inf_mult > 1 {
            continue;
        }
        let up = upoly::RPoly::from_multipoly(&u, Var::X);
        if up.degree() == 0 {
            if d <= 1 {
                return true;
            }
            continue;
        }
        if upoly::rpoly_gcd(&up, &up.derivative()).degree() == 0 {
            return true;
        }
    }
    false
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !a.is_one() || m.degree() == 0 {
                factors.push(fmt_rational(&a));
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl std::str::FromStr for MultiPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Parses or panics; for literals known to be valid.
pub fn poly(s: &str) -> MultiPoly {
    parse_poly(s).unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> MultiPoly {
        poly("x*z - y^2")
    }

    #[test]
    fn ring_examples() {
        let sq = &f2() * &f2();
        assert_eq!(sq.total_degree(), Some(4));
        assert_eq!(sq.leading_term().unwrap().0, &Monomial([2, 0, 2]));
        assert_eq!(f2().pow(0), MultiPoly::one());
        let c = rat(3);
        let f3 = &(&(&MultiPoly::x().scale(&c) + &MultiPoly::y()) * &f2()) + &poly("x^3");
        assert_eq!(f3, poly("(3*x+y)*(x*z-y^2)+x^3"));
    }

    #[test]
    fn derivatives() {
        assert_eq!(f2().derivative(Var::X), poly("z"));
        assert_eq!(f2().derivative(Var::Y), poly("-2*y"));
        assert!(poly("x^3").derivative(Var::Z).is_zero());
    }

    #[test]
    fn degree_info_cases() {
        assert_eq!(f2().degree_info(), Ok((true, 2)));
        assert_eq!(poly("x+1").degree_info(), Ok((false, 1)));
        assert_eq!(MultiPoly::zero().degree_info(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn exact_divide_cases() {
        let w = poly("x^2 + 3*y*z - 7/2*z^2");
        let p = &f2().pow(5) * &w;
        assert_eq!(p.exact_divide(&f2().pow(5)).unwrap(), w);
        assert_eq!(poly("x").exact_divide(&poly("y")), Err(PolyError::NotDivisible));
        assert_eq!(poly("x").exact_divide(&MultiPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn identity_substitution() {
        let id = [MultiPoly::x(), MultiPoly::y(), MultiPoly::z()];
        assert_eq!(poly("x").substitute(&id), poly("x"));
        assert_eq!(f2().substitute(&id), f2());
    }

    #[test]
    fn display_is_graded_lex() {
        assert_eq!(f2().to_string(), "x*z - y^2");
        assert_eq!(poly("1/2 - z + x^2").to_string(), "x^2 - z + 1/2");
        assert_eq!(poly("-3*y").to_string(), "-3*y");
    }

    #[test]
    fn normalized_sign_and_content() {
        assert_eq!(poly("-2*x*z + 2*y^2").normalized(), f2());
        assert_eq!(poly("1/3*x + 1/6*y").normalized(), poly("2*x + y"));
    }

    #[test]
    fn squarefree_checks() {
        assert!(f2().is_squarefree());
        assert!(!f2().pow(2).is_squarefree());
        assert!(!(&poly("x") * &poly("x*y")).is_squarefree());
        assert!(poly("x*y*z").is_squarefree());
    }
}
