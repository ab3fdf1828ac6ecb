//! Dense univariate polynomials over the integers and rationals.
//!
//! These back the elimination steps of the curve module: resultants by
//! evaluation and interpolation, heuristic integer gcds, rational roots by
//! p-adic lifting, and gcd computations over `Q[x]/(h)` that split `h` on
//! zero divisors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Monomial, MultiPoly, Rational, Var};

/// Rational univariate polynomial, coefficient `i` multiplies `t^i`.
/// Trailing zeros are always trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RPoly(pub Vec<Rational>);

/// Integer univariate polynomial, same layout as [`RPoly`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IPoly(pub Vec<BigInt>);

impl RPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        RPoly(c)
    }

    pub fn zero() -> Self {
        RPoly(Vec::new())
    }

    pub fn one() -> Self {
        RPoly(vec![Rational::one()])
    }

    /// `t - r`
    pub fn linear_root(r: &Rational) -> Self {
        RPoly(vec![-r.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Requires `p` to use no variable other than `v`.
    pub fn from_multipoly(p: &MultiPoly, v: Var) -> Self {
        let mut c = vec![Rational::zero(); p.degree_in(v) as usize + 1];
        for (m, a) in p.terms() {
            debug_assert_eq!(m.degree(), m.exp(v));
            c[m.exp(v) as usize] += a;
        }
        RPoly::new(c)
    }

    pub fn to_multipoly(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(self.0.iter().enumerate().map(|(k, c)| {
            let mut e = [0; 3];
            e[v.index()] = k as u32;
            (Monomial(e), c.clone())
        }))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        RPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc().recip();
        RPoly(self.0.iter().map(|c| c * &l).collect())
    }

    pub fn add(&self, o: &RPoly) -> RPoly {
        let n = self.0.len().max(o.0.len());
        RPoly::new(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_else(Rational::zero)
                        + o.0.get(i).cloned().unwrap_or_else(Rational::zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &RPoly) -> RPoly {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> RPoly {
        RPoly::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &RPoly) -> RPoly {
        if self.is_zero() || o.is_zero() {
            return RPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RPoly::new(c)
    }

    pub fn divrem(&self, d: &RPoly) -> (RPoly, RPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.degree();
        if r.len() <= dd {
            return (RPoly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (RPoly::new(q), RPoly::new(r))
    }

    pub fn rem(&self, d: &RPoly) -> RPoly {
        self.divrem(d).1
    }

    /// Primitive integer polynomial proportional to `self`.
    pub fn to_ipoly(&self) -> IPoly {
        let mut den = BigInt::one();
        for c in &self.0 {
            den = den.lcm(c.denom());
        }
        IPoly::new(
            self.0
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect(),
        )
        .primitive()
    }
}

impl IPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn to_rpoly(&self) -> RPoly {
        RPoly::new(self.0.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        IPoly(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> IPoly {
        IPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    fn max_norm(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Exact division over the integers.
    pub fn exact_div(&self, d: &IPoly) -> Option<IPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut r = self.0.clone();
        let dd = d.degree();
        let lc = d.lc();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let (c, rem) = r[k + dd].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IPoly::new(q))
    }

    fn pseudo_rem(&self, d: &IPoly) -> IPoly {
        let mut r = self.clone();
        let lc = d.lc().clone();
        while !r.is_zero() && r.degree() >= d.degree() {
            let shift = r.degree() - d.degree();
            let lr = r.lc().clone();
            let mut c: Vec<BigInt> = r.0.iter().map(|a| a * &lc).collect();
            for (j, dc) in d.0.iter().enumerate() {
                c[j + shift] -= &lr * dc;
            }
            r = IPoly::new(c);
        }
        r
    }
}

/// Primitive gcd of integer polynomials (positive leading coefficient).
pub fn ipoly_gcd(a: &IPoly, b: &IPoly) -> IPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let (a, b) = (a.primitive(), b.primitive());
    if a.degree() == 0 || b.degree() == 0 {
        return IPoly(vec![BigInt::one()]);
    }
    gcd_heuristic(&a, &b).unwrap_or_else(|| gcd_prs(&a, &b))
}

/// Heuristic gcd: evaluate at a large integer, take the integer gcd and
/// read the polynomial back off its balanced base-`xi` digits.
fn gcd_heuristic(a: &IPoly, b: &IPoly) -> Option<IPoly> {
    let mut xi = BigInt::from(2) * a.max_norm().min(b.max_norm()) + BigInt::from(29);
    for _ in 0..6 {
        let h = a.eval(&xi).gcd(&b.eval(&xi));
        let mut digits = Vec::new();
        let mut rest = h;
        let half = &xi / 2;
        while !rest.is_zero() {
            let mut d = rest.mod_floor(&xi);
            if d > half {
                d -= &xi;
            }
            rest = (rest - &d) / &xi;
            digits.push(d);
        }
        let g = IPoly::new(digits).primitive();
        if !g.is_zero() && a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
            return Some(g);
        }
        xi = xi * BigInt::from(73794) / BigInt::from(27011);
    }
    None
}

fn gcd_prs(a: &IPoly, b: &IPoly) -> IPoly {
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive();
        }
        if r.degree() == 0 {
            return IPoly(vec![BigInt::one()]);
        }
        a = b;
        b = r.primitive();
    }
}

/// Monic gcd over the rationals.
pub fn rpoly_gcd(a: &RPoly, b: &RPoly) -> RPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    ipoly_gcd(&a.to_ipoly(), &b.to_ipoly()).to_rpoly().monic()
}

/// Squarefree part over the rationals (monic).
pub fn squarefree(a: &RPoly) -> RPoly {
    if a.degree() == 0 {
        return a.monic();
    }
    let g = rpoly_gcd(a, &a.derivative());
    a.divrem(&g).0.monic()
}

/// All distinct rational roots, ascending.
pub fn rational_roots(p: &RPoly) -> Vec<Rational> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut q = squarefree(p);
    if q.0.first().is_some_and(Zero::is_zero) {
        roots.push(Rational::zero());
        q = RPoly::new(q.0[1..].to_vec());
    }
    if q.degree() == 0 {
        return roots;
    }
    if q.degree() == 1 {
        roots.push(-&q.0[0] / &q.0[1]);
        roots.sort();
        return roots;
    }
    let ip = q.to_ipoly();
    let bound = ip.0[0].abs().max(ip.lc().abs());
    // modulus must exceed 2 * bound^2 for reconstruction
    let target = BigInt::from(2) * &bound * &bound + BigInt::one();
    for p in primes_from(1009).take(200) {
        let pm = BigInt::from(p);
        if (ip.lc() % &pm).is_zero() {
            continue;
        }
        let modp: Vec<u64> = ip.0.iter().map(|c| mod_u64(c, p)).collect();
        let dmodp = modp_derivative(&modp, p);
        if modp_gcd(&modp, &dmodp, p).len() > 1 {
            continue;
        }
        for r in 0..p {
            if modp_eval(&modp, r, p) != 0 {
                continue;
            }
            let lifted = hensel_lift(&ip, BigInt::from(r), &pm, &target);
            if let Some(c) = reconstruct(&lifted.0, &lifted.1, &bound) {
                if q.eval(&c).is_zero() {
                    roots.push(c);
                }
            }
        }
        roots.sort();
        roots.dedup();
        return roots;
    }
    panic!("no suitable prime found for rational root isolation");
}

fn hensel_lift(p: &IPoly, r0: BigInt, prime: &BigInt, target: &BigInt) -> (BigInt, BigInt) {
    let dp = p.derivative();
    let mut r = r0;
    let mut m = prime.clone();
    while &m < target {
        m = &m * &m;
        let f = p.eval(&r).mod_floor(&m);
        let d = dp.eval(&r).mod_floor(&m);
        let inv = mod_inverse(&d, &m).expect("simple root has invertible derivative");
        r = (r - f * inv).mod_floor(&m);
    }
    (r, m)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Finds `a/b` with `|a|, |b| <= bound` and `a = b r mod m`.
fn reconstruct(r: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), r.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > bound {
        return None;
    }
    Some(Rational::new(r1, t1))
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| n > 1 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn mod_u64(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn modp_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn modp_eval(a: &[u64], t: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, c| (acc * t + c) % p)
}

fn modp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    modp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| (k as u64 % p) * c % p)
            .collect(),
    )
}

fn modp_inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn modp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = modp_trim(a.to_vec());
    let mut b = modp_trim(b.to_vec());
    while !b.is_empty() {
        let inv = modp_inv(*b.last().unwrap(), p);
        while a.len() >= b.len() && !a.is_empty() {
            let c = a.last().unwrap() * inv % p;
            let shift = a.len() - b.len();
            for (j, bc) in b.iter().enumerate() {
                a[j + shift] = (a[j + shift] + p - c * bc % p) % p;
            }
            a = modp_trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Primes below `2^31`, largest first; products of two residues fit a `u64`.
fn primes() -> impl Iterator<Item = u64> {
    (1u64 << 30..1u64 << 31)
        .rev()
        .filter(|&n| n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1;
    for k in 0..n {
        let Some(s) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if s != k {
            m.swap(k, s);
            det = p - det;
        }
        det = det * m[k][k] % p;
        let inv = inv_mod(m[k][k], p);
        for i in k + 1..n {
            let f = m[i][k] * inv % p;
            if f == 0 {
                continue;
            }
            for j in k..n {
                m[i][j] = (m[i][j] + p - f * m[k][j] % p) % p;
            }
        }
    }
    det % p
}

/// Coefficients (low first) of the polynomial through `(i, ys[i])` mod `p`.
fn interpolate_mod(ys: &[u64], p: u64) -> Vec<u64> {
    let n = ys.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        let inv = inv_mod(j as u64, p);
        for i in (j..n).rev() {
            dd[i] = (dd[i] + p - dd[i - 1]) % p * inv % p;
        }
    }
    let mut acc = vec![0u64; n];
    for i in (0..n).rev() {
        // acc = acc * (t - i) + dd[i]
        let shift = (p - i as u64 % p) % p;
        for k in (0..n).rev() {
            let lower = if k > 0 { acc[k - 1] } else { 0 };
            acc[k] = (lower + acc[k] * shift) % p;
        }
        acc[0] = (acc[0] + dd[i]) % p;
    }
    acc
}

fn l1_norm_bits(p: &MultiPoly) -> u64 {
    let norm: BigInt = p.terms().map(|(_, c)| c.numer().abs()).sum();
    norm.bits()
}

/// Resultant of two polynomials in `{keep, elim}` with respect to `elim`,
/// as a polynomial in `keep`, up to a nonzero rational factor. Sylvester
/// determinants are evaluated and interpolated modulo enough primes to
/// exceed the `l1`-norm bound `|a|^n |b|^m` on the coefficients.
pub fn univariate_resultant(a: &MultiPoly, b: &MultiPoly, keep: Var, elim: Var) -> RPoly {
    let a = a.normalized();
    let b = b.normalized();
    let m = a.degree_in(elim) as usize;
    let n = b.degree_in(elim) as usize;
    if a.is_zero() || b.is_zero() {
        return RPoly::zero();
    }
    if m == 0 && n == 0 {
        return RPoly::one();
    }
    let coeffs = |p: &MultiPoly| -> Vec<IPoly> {
        p.coefficients_in(elim)
            .iter()
            .map(|c| {
                let r = RPoly::from_multipoly(c, keep);
                IPoly::new(r.0.iter().map(|q| q.numer().clone()).collect())
            })
            .collect()
    };
    let ac = coeffs(&a);
    let bc = coeffs(&b);
    let by_partial = a.degree_in(keep) as usize * n + b.degree_in(keep) as usize * m;
    let by_total = (a.total_degree().unwrap() * b.total_degree().unwrap()) as usize;
    let count = by_partial.min(by_total) + 1;
    let bound_bits = n as u64 * l1_norm_bits(&a) + m as u64 * l1_norm_bits(&b) + 1;
    let size = m + n;

    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); count];
    for p in primes() {
        let reduce = |cs: &[IPoly]| -> Vec<Vec<u64>> {
            cs.iter()
                .map(|c| {
                    let pb = BigInt::from(p);
                    c.0.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect()
                })
                .collect()
        };
        let (am, bm) = (reduce(&ac), reduce(&bc));
        let eval = |c: &[u64], x: u64| c.iter().rev().fold(0, |v, &k| (v * x + k) % p);
        let ys: Vec<u64> = (0..count as u64)
            .map(|x| {
                let av: Vec<u64> = am.iter().map(|c| eval(c, x)).collect();
                let bv: Vec<u64> = bm.iter().map(|c| eval(c, x)).collect();
                let mut mat = vec![vec![0u64; size]; size];
                for i in 0..n {
                    for (k, c) in av.iter().enumerate() {
                        mat[i][i + m - k] = *c;
                    }
                }
                for i in 0..m {
                    for (k, c) in bv.iter().enumerate() {
                        mat[n + i][i + n - k] = *c;
                    }
                }
                det_mod(mat, p)
            })
            .collect();
        let residues = interpolate_mod(&ys, p);
        // Garner step: acc += modulus * ((r - acc) / modulus mod p)
        let pb = BigInt::from(p);
        let minv = BigInt::from(inv_mod((&modulus % &pb).to_u64().unwrap(), p));
        for (c, r) in acc.iter_mut().zip(residues) {
            let diff = (BigInt::from(r) - &*c).mod_floor(&pb);
            *c += &modulus * (diff * &minv % &pb);
        }
        modulus *= pb;
        if modulus.bits() > bound_bits {
            break;
        }
    }
    let half = &modulus >> 1;
    RPoly::new(
        acc.into_iter()
            .map(|c| Rational::from_integer(if c > half { c - &modulus } else { c }))
            .collect(),
    )
}

/// Outcome of a gcd attempt over `Q[t]/(h)`.
enum Split {
    Factors(RPoly, RPoly),
}

/// Elements of `Q[t]/(h)` as reduced [`RPoly`]s; polynomials over it as
/// coefficient vectors (low degree first).
struct Quotient<'a> {
    h: &'a RPoly,
}

impl Quotient<'_> {
    fn reduce(&self, a: &RPoly) -> RPoly {
        a.rem(self.h)
    }

    /// `Ok(None)` for zero, `Ok(Some(inverse))` for a unit.
    fn classify(&self, a: &RPoly) -> Result<Option<RPoly>, Split> {
        if a.is_zero() {
            return Ok(None);
        }
        let g = rpoly_gcd(a, self.h);
        if g.degree() == 0 {
            return Ok(Some(self.inverse(a)));
        }
        let other = self.h.divrem(&g).0;
        Err(Split::Factors(g, other.monic()))
    }

    fn inverse(&self, a: &RPoly) -> RPoly {
        // extended Euclid on (h, a)
        let (mut r0, mut r1) = (self.h.clone(), a.clone());
        let (mut t0, mut t1) = (RPoly::zero(), RPoly::one());
        while !r1.is_zero() {
            let (q, r2) = r0.divrem(&r1);
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant
        self.reduce(&t0.scale(&r0.0[0].recip()))
    }

    fn trim(&self, mut p: Vec<RPoly>) -> Result<(Vec<RPoly>, Option<RPoly>), Split> {
        while let Some(last) = p.last() {
            match self.classify(last)? {
                None => {
                    p.pop();
                }
                Some(inv) => return Ok((p, Some(inv))),
            }
        }
        Ok((p, None))
    }

    fn poly_gcd(&self, a: Vec<RPoly>, b: Vec<RPoly>) -> Result<Vec<RPoly>, Split> {
        let (mut a, mut ainv) = self.trim(a)?;
        let (mut b, mut binv) = self.trim(b)?;
        loop {
            if b.is_empty() {
                return Ok(a);
            }
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
                std::mem::swap(&mut ainv, &mut binv);
                continue;
            }
            let inv = binv.clone().expect("nonzero");
            // a <- a mod b
            while a.len() >= b.len() {
                let c = self.reduce(&a.last().unwrap().mul(&inv));
                let shift = a.len() - b.len();
                for (j, bc) in b.iter().enumerate() {
                    a[j + shift] = self.reduce(&a[j + shift].sub(&c.mul(bc)));
                }
                let (na, nainv) = self.trim(a)?;
                a = na;
                ainv = nainv;
                if a.is_empty() {
                    break;
                }
            }
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut ainv, &mut binv);
        }
    }
}

/// Splits the squarefree polynomial `h` into coprime parts and reports,
/// for each part, the degree in the main variable of the common gcd of
/// `polys` (given as coefficient vectors over `Q[t]`) over every root of
/// that part.
pub fn gcd_degree_over_roots(h: &RPoly, polys: &[Vec<RPoly>]) -> Vec<(RPoly, usize)> {
    let mut work = vec![h.monic()];
    let mut out = Vec::new();
    while let Some(h) = work.pop() {
        if h.degree() == 0 {
            continue;
        }
        let q = Quotient { h: &h };
        let attempt = (|| -> Result<usize, Split> {
            let mut g: Vec<RPoly> = Vec::new();
            for p in polys {
                let reduced: Vec<RPoly> = p.iter().map(|c| q.reduce(c)).collect();
                g = q.poly_gcd(g, reduced)?;
            }
            // every polynomial vanishes identically over this part
            if g.is_empty() {
                return Ok(usize::MAX);
            }
            Ok(g.len() - 1)
        })();
        match attempt {
            Ok(d) => out.push((h.clone(), d)),
            Err(Split::Factors(a, b)) => {
                work.push(a);
                work.push(b);
            }
        }
    }
    out
}

/// Coefficient vector in `main` with entries univariate in `param`.
pub fn coefficient_vector(p: &MultiPoly, main: Var, param: Var) -> Vec<RPoly> {
    p.coefficients_in(main)
        .iter()
        .map(|c| RPoly::from_multipoly(c, param))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{poly, rat, ratio};

    fn rp(v: &[i64]) -> RPoly {
        RPoly::new(v.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn roots_of_product() {
        // (2t - 3)(t + 5)(t^2 + 1) t^2
        let p = rp(&[-3, 2]).mul(&rp(&[5, 1])).mul(&rp(&[1, 0, 1])).mul(&rp(&[0, 0, 1]));
        assert_eq!(rational_roots(&p), vec![rat(-5), rat(0), ratio(3, 2)]);
    }

    #[test]
    fn roots_with_large_coefficients() {
        let a = ratio(123456789, 1000003);
        let b = ratio(-77, 13);
        let p = RPoly::linear_root(&a)
            .mul(&RPoly::linear_root(&b))
            .mul(&RPoly::linear_root(&b))
            .mul(&rp(&[-2, 0, 1]));
        assert_eq!(rational_roots(&p), vec![b, a]);
    }

    #[test]
    fn gcd_over_integers() {
        let a = rp(&[-1, 0, 1]).mul(&rp(&[3, 7, 2]));
        let b = rp(&[1, 1]).mul(&rp(&[5, 0, 0, 1]));
        assert_eq!(rpoly_gcd(&a, &b), rp(&[1, 1]));
    }

    #[test]
    fn evaluated_resultant_matches_sylvester() {
        let a = poly("x^2*y^3 - 3*y + x - 2");
        let b = poly("y^2 + x*y - 5*x^3 + 1");
        let direct = a.resultant_wrt(&b, Var::Y);
        let r = univariate_resultant(&a, &b, Var::X, Var::Y);
        assert!(r.to_multipoly(Var::X).is_scalar_multiple_of(&direct));
        // coefficients far beyond one prime
        let a = poly("123456789*x^3*y^2 - 987654321*y + 55555*x^2 - 7");
        let b = poly("31415926*y^3 + 27182818*x*y - 1618033*x^4 + 99991");
        let direct = a.resultant_wrt(&b, Var::Y);
        let r = univariate_resultant(&a, &b, Var::X, Var::Y);
        assert!(r.to_multipoly(Var::X).is_scalar_multiple_of(&direct));
    }

    #[test]
    fn splitting_over_extension() {
        // h = (t^2 - 2)(t^2 - 3); polys share a root y = t exactly over t^2 = 2
        let h = rp(&[-2, 0, 1]).mul(&rp(&[-3, 0, 1]));
        let p1 = vec![rp(&[0, -1]), RPoly::one()]; // y - t
        let p2 = vec![rp(&[-2]), RPoly::zero(), RPoly::one()]; // y^2 - 2
        let parts = gcd_degree_over_roots(&h, &[p1, p2]);
        let positive: Vec<_> = parts.iter().filter(|(_, d)| *d > 0).collect();
        assert_eq!(positive.len(), 1);
        assert_eq!(positive[0].0, rp(&[-2, 0, 1]));
    }
}
