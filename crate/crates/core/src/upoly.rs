//! Dense univariate polynomials over an abstract field, used for extension
//! arithmetic, elimination and non-degeneracy checks.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

pub trait Field: Clone + PartialEq + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// None for zero (or, in quotient rings used internally, zero divisors).
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
}

impl Field for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(Int::from(n))
    }
}

/// Ascending coefficients, no trailing zeros. The zero polynomial is `[]`.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<F: Field>(pub Vec<F>);

impl<F: Field> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }
    pub fn zero() -> Self {
        UPoly(vec![])
    }
    pub fn one() -> Self {
        UPoly(vec![F::one()])
    }
    pub fn x() -> Self {
        UPoly(vec![F::zero(), F::one()])
    }
    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn deg(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }
    pub fn lead(&self) -> &F {
        self.0.last().expect("lead of zero polynomial")
    }
    pub fn coeff(&self, i: usize) -> F {
        self.0.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&o.coeff(i)));
        }
        Self::new(out)
    }
    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&o.coeff(i)));
        }
        Self::new(out)
    }
    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| c.neg()).collect())
    }
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.0.iter().map(|a| a.mul(c)).collect())
    }
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); k];
        out.extend(self.0.iter().cloned());
        UPoly(out)
    }

    /// Division with remainder; the divisor's leading coefficient must be
    /// invertible (always true over a field for a nonzero divisor).
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg().unwrap();
        let linv = d.lead().inv().expect("leading coefficient not invertible");
        let mut r = self.clone();
        let mut q = vec![F::zero(); self.0.len().saturating_sub(dd)];
        while let Some(dr) = r.deg() {
            if dr < dd {
                break;
            }
            let c = r.lead().mul(&linv);
            let k = dr - dd;
            q[k] = q[k].add(&c);
            let mut coeffs = r.0;
            for i in 0..=dd {
                coeffs[k + i] = coeffs[k + i].sub(&c.mul(&d.0[i]));
            }
            r = Self::new(coeffs);
        }
        (Self::new(q), r)
    }
    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let linv = self.lead().inv().expect("monic of noninvertible lead");
        self.scale(&linv)
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Returns (g, s, t) with g = gcd monic and s*self + t*other = g.
    pub fn extended_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = o.clone();
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r2) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let linv = r0.lead().inv().expect("gcd lead not invertible");
        (
            r0.scale(&linv),
            s0.scale(&linv),
            t0.scale(&linv),
        )
    }

    pub fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.0.len() - 1);
        for (i, c) in self.0.iter().enumerate().skip(1) {
            out.push(c.mul(&F::from_i64(i as i64)));
        }
        Self::new(out)
    }

    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == Some(0) {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut b = self.clone();
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            b = b.mul(&b);
        }
        acc
    }

    /// Strip the largest power of x dividing the polynomial; returns
    /// (k, f / x^k).
    pub fn strip_x(&self) -> (usize, Self) {
        if self.is_zero() {
            return (0, Self::zero());
        }
        let k = self.0.iter().position(|c| !c.is_zero()).unwrap();
        (k, Self::new(self.0[k..].to_vec()))
    }
}

/// Resultant of two polynomials over a field, via the Euclidean remainder
/// sequence with the standard transformation rules.
pub fn resultant<F: Field>(f: &UPoly<F>, g: &UPoly<F>) -> F {
    let mut a = f.clone();
    let mut b = g.clone();
    let mut res = F::one();
    loop {
        if b.is_zero() {
            return if a.deg() == Some(0) { res } else { F::zero() };
        }
        if a.deg().is_none() {
            return F::zero();
        }
        let da = a.deg().unwrap();
        let db = b.deg().unwrap();
        if da == 0 && db == 0 {
            return res;
        }
        if db == 0 {
            // res(a, c) = c^da
            let mut p = F::one();
            for _ in 0..da {
                p = p.mul(b.lead());
            }
            return res.mul(&p);
        }
        if da < db {
            // swap introduces sign (-1)^(da*db)
            if da * db % 2 == 1 {
                res = res.neg();
            }
            core::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = a.rem(&b);
        let dr = r.deg().map(|d| d as i64).unwrap_or(-1);
        // res(a,b) = lc(b)^(da - dr) * (-1)^(da*db) * res(b, r)
        let mut p = F::one();
        let e = da as i64 - dr;
        for _ in 0..e {
            p = p.mul(b.lead());
        }
        if (da * db) % 2 == 1 {
            res = res.neg();
        }
        res = res.mul(&p);
        a = b;
        b = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn upoly(v: &[i64]) -> UPoly<Rat> {
        UPoly::new(v.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    #[test]
    fn gcd_basic() {
        // (x-1)^2 (x+2) and (x-1)(x+3)
        let a = upoly(&[1, -1]).pow(2).mul(&upoly(&[2, 1]));
        let b = upoly(&[-1, 1]).mul(&upoly(&[3, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, upoly(&[-1, 1]).monic());
    }

    #[test]
    fn extended_gcd_identity() {
        let a = upoly(&[2, 0, 1]);
        let b = upoly(&[1, 1]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g.deg(), Some(0));
    }

    #[test]
    fn resultant_linear_pair() {
        // res(x - 2, x - 3) = -1 * ... = value of (x-3) at 2 = -1
        let r = resultant(&upoly(&[-2, 1]), &upoly(&[-3, 1]));
        assert_eq!(r, Rat::from_integer(Int::from(-1)));
        // res(x^2+1, x^2-1) = 4
        let r2 = resultant(&upoly(&[1, 0, 1]), &upoly(&[-1, 0, 1]));
        assert_eq!(r2, Rat::from_integer(Int::from(4)));
    }

    #[test]
    fn squarefree() {
        let a = upoly(&[1, -1]).pow(3).mul(&upoly(&[1, 1]));
        let s = a.squarefree_part();
        assert_eq!(s, upoly(&[1, -1]).mul(&upoly(&[1, 1])).monic());
    }
}
