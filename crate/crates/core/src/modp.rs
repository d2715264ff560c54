//! Univariate polynomial arithmetic over small prime fields, plus the
//! lift-and-reconstruct machinery used to split integer polynomials exactly
//! (rational roots, irreducibility certificates via factor degree patterns).

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;

/// Primes used for degree-pattern certificates and root lifting. All odd,
/// comfortably above the coefficient sizes seen in the elimination steps.
pub const CERT_PRIMES: [u64; 14] = [
    1009, 1013, 1019, 1021, 1031, 1033, 2003, 2011, 3001, 4001, 5003, 7001, 9001, 10007,
];

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }
}

pub fn int_mod(c: &Int, p: u64) -> u64 {
    let m = c.mod_floor(&Int::from(p));
    m.to_u64().unwrap()
}

/// Reduce an integer polynomial (ascending coefficients) modulo `p`.
pub fn reduce_poly(coeffs: &[Int], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = coeffs.iter().map(|c| int_mod(c, p)).collect();
    trim(&mut v);
    v
}

pub fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn deg(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn mul(fp: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = fp.add(out[i + j], fp.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

pub fn rem(fp: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    assert!(!b.is_empty());
    let mut r: Vec<u64> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb_inv = fp.inv(b[db]);
    while r.len() > db {
        let dr = r.len() - 1;
        let q = fp.mul(r[dr], lb_inv);
        if q != 0 {
            for i in 0..=db {
                let t = fp.mul(q, b[i]);
                r[dr - db + i] = fp.sub(r[dr - db + i], t);
            }
        }
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

pub fn monic(fp: Fp, f: &[u64]) -> Vec<u64> {
    if f.is_empty() {
        return vec![];
    }
    let inv = fp.inv(*f.last().unwrap());
    f.iter().map(|&c| fp.mul(c, inv)).collect()
}

pub fn gcd(fp: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(fp, &a, &b);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic(fp, &a)
    }
}

pub fn derivative(fp: Fp, f: &[u64]) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![];
    }
    let mut out = Vec::with_capacity(f.len() - 1);
    for (i, &c) in f.iter().enumerate().skip(1) {
        out.push(fp.mul(c, (i as u64) % fp.p));
    }
    trim(&mut out);
    out
}

pub fn eval(fp: Fp, f: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = fp.add(fp.mul(acc, x), c);
    }
    acc
}

/// x^e mod f by repeated squaring.
pub fn pow_x_mod(fp: Fp, e: u64, f: &[u64]) -> Vec<u64> {
    pow_mod(fp, &[0, 1], e, f)
}

pub fn pow_mod(fp: Fp, base: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
    let mut acc = rem(fp, &[1], f);
    let mut b = rem(fp, base, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(fp, &mul(fp, &acc, &b), f);
        }
        b = rem(fp, &mul(fp, &b, &b), f);
        e >>= 1;
    }
    acc
}

pub fn is_squarefree_mod(fp: Fp, f: &[u64]) -> bool {
    if f.len() <= 1 {
        return false;
    }
    let d = derivative(fp, f);
    if d.is_empty() {
        return false;
    }
    gcd(fp, f, &d).len() == 1
}

/// Distinct-degree factorization pattern of a squarefree monic `f`:
/// returns pairs `(d, e_d)` where `e_d` is the total degree of the product
/// of all irreducible factors of degree exactly `d`.
pub fn degree_pattern(fp: Fp, f: &[u64]) -> Vec<(usize, usize)> {
    let mut f = monic(fp, f);
    let mut out = Vec::new();
    let mut w = rem(fp, &[0, 1], &f);
    let mut d = 0usize;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            out.push((f.len() - 1, f.len() - 1));
            break;
        }
        w = pow_mod(fp, &w, fp.p, &f);
        // gcd(w - x, f)
        let mut wx = w.clone();
        if wx.len() < 2 {
            wx.resize(2, 0);
        }
        wx[1] = fp.sub(wx[1], 1);
        trim(&mut wx);
        let g = gcd(fp, &wx, &f);
        if g.len() > 1 {
            out.push((d, g.len() - 1));
            // f /= g
            let fdeg = f.len() - 1;
            let gdeg = g.len() - 1;
            f = divide_exact(fp, &f, &g, fdeg - gdeg);
            w = rem(fp, &w, &f);
        }
    }
    out
}

fn divide_exact(fp: Fp, a: &[u64], b: &[u64], qdeg: usize) -> Vec<u64> {
    // long division, remainder known to be zero
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb_inv = fp.inv(b[db]);
    let mut q = vec![0u64; qdeg + 1];
    for k in (0..=qdeg).rev() {
        let c = fp.mul(r[k + db], lb_inv);
        q[k] = c;
        if c != 0 {
            for i in 0..=db {
                let t = fp.mul(c, b[i]);
                r[k + i] = fp.sub(r[k + i], t);
            }
        }
    }
    trim(&mut q);
    q
}

/// Which total degrees are achievable as sums of a sub-multiset of the
/// irreducible factor degrees described by `pattern`.
pub fn possible_factor_degrees(pattern: &[(usize, usize)], total: usize) -> Vec<bool> {
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    for &(d, e) in pattern {
        let count = e / d;
        for _ in 0..count {
            for s in (0..=total.saturating_sub(d)).rev() {
                if reach[s] {
                    reach[s + d] = true;
                }
            }
        }
    }
    reach
}

/// Try to certify irreducibility of a primitive integer polynomial over Q
/// via modular degree patterns. `Some(true)` means certified irreducible,
/// `None` means inconclusive (the polynomial may or may not be reducible).
/// Linear factors must be ruled out by the caller beforehand for a `None`
/// to be meaningful.
pub fn irreducible_certificate(coeffs: &[Int]) -> Option<bool> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Some(false);
    }
    if n == 1 {
        return Some(true);
    }
    let mut reachable = vec![true; n + 1];
    for &p in CERT_PRIMES.iter() {
        if (coeffs[n].magnitude() % p).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let f = reduce_poly(coeffs, p);
        if f.len() != n + 1 || !is_squarefree_mod(fp, &f) {
            continue;
        }
        let pattern = degree_pattern(fp, &f);
        if pattern.len() == 1 && pattern[0].0 == n {
            return Some(true);
        }
        let reach = possible_factor_degrees(&pattern, n);
        for d in 0..=n {
            reachable[d] = reachable[d] && reach[d];
        }
        if !(1..n).any(|d| reachable[d]) {
            return Some(true);
        }
    }
    None
}

/// All roots of `f` in F_p, via gcd with x^p - x and equal-degree splitting.
pub fn roots_mod(fp: Fp, f: &[u64]) -> Vec<u64> {
    let mut f = monic(fp, f);
    let mut roots = Vec::new();
    // strip root 0
    while f.len() > 1 && f[0] == 0 {
        f.remove(0);
        if !roots.contains(&0) {
            roots.push(0);
        }
    }
    if f.len() <= 1 {
        roots.sort_unstable();
        return roots;
    }
    let xp = pow_x_mod(fp, fp.p, &f);
    let mut wx = xp;
    if wx.len() < 2 {
        wx.resize(2, 0);
    }
    wx[1] = fp.sub(wx[1], 1);
    trim(&mut wx);
    let lin = gcd(fp, &wx, &f);
    if lin.len() > 1 {
        split_linear(fp, &lin, &mut roots);
    }
    roots.sort_unstable();
    roots.dedup();
    roots
}

fn split_linear(fp: Fp, g: &[u64], roots: &mut Vec<u64>) {
    // g: monic product of distinct linear factors, x does not divide g
    match g.len() {
        0 | 1 => {}
        2 => roots.push(fp.sub(0, g[0])),
        _ => {
            let half = (fp.p - 1) / 2;
            for a in 1..fp.p {
                // h = gcd((x+a)^((p-1)/2) - 1, g)
                let mut b = pow_mod(fp, &[a, 1], half, g);
                if b.is_empty() {
                    b = vec![0];
                }
                if b.is_empty() {
                    continue;
                }
                let mut bm = b.clone();
                if bm.is_empty() {
                    bm = vec![0];
                }
                bm[0] = fp.sub(bm[0], 1);
                let mut bmv = bm;
                trim(&mut bmv);
                if bmv.is_empty() {
                    continue;
                }
                let h = gcd(fp, &bmv, g);
                if h.len() > 1 && h.len() < g.len() {
                    split_linear(fp, &h, roots);
                    let q = divide_exact(fp, g, &h, g.len() - h.len());
                    split_linear(fp, &q, roots);
                    return;
                }
            }
            unreachable!("equal-degree splitting failed");
        }
    }
}

/// Exact rational roots of a nonzero integer polynomial (ascending
/// coefficients). Found by modular root finding, Hensel lifting and rational
/// reconstruction, then verified by exact evaluation.
pub fn rational_roots(coeffs: &[Int]) -> Vec<(Int, Int)> {
    let mut f: Vec<Int> = coeffs.to_vec();
    while f.last().map(|c| c.is_zero()) == Some(true) {
        f.pop();
    }
    let mut out = Vec::new();
    if f.is_empty() || f.len() == 1 {
        return out;
    }
    let mut low = 0usize;
    while f[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        out.push((Int::zero(), Int::one()));
        f.drain(0..low);
    }
    if f.len() == 1 {
        return out;
    }
    // primitive part
    let mut content = f[0].abs();
    for c in f.iter().skip(1) {
        content = content.gcd(c);
    }
    if !content.is_one() {
        for c in f.iter_mut() {
            *c /= &content;
        }
    }
    let n = f.len() - 1;
    let bound: Int = Int::from(2) * f[0].abs() * f[n].abs() + 1;
    for &p in CERT_PRIMES.iter() {
        if (f[n].magnitude() % p).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fm = reduce_poly(&f, p);
        if fm.len() != n + 1 || !is_squarefree_mod(fp, &fm) {
            continue;
        }
        for r in roots_mod(fp, &fm) {
            if let Some((num, den)) = lift_and_reconstruct(&f, r, p, &bound) {
                // exact verification: sum c_i num^i den^(n-i) == 0
                if verify_root(&f, &num, &den) && !out.iter().any(|(a, b)| a == &num && b == &den)
                {
                    out.push((num, den));
                }
            }
        }
        return out;
    }
    // No usable prime (pathological); fall back to empty (callers treat
    // missing roots as "no rational root found" and keep the factor whole).
    out
}

fn verify_root(f: &[Int], num: &Int, den: &Int) -> bool {
    let n = f.len() - 1;
    let mut acc = Int::zero();
    let mut num_pow = Int::one();
    let mut den_pows = vec![Int::one(); n + 1];
    for i in 1..=n {
        den_pows[i] = &den_pows[i - 1] * den;
    }
    for (i, c) in f.iter().enumerate() {
        acc += c * &num_pow * &den_pows[n - i];
        num_pow *= num;
    }
    acc.is_zero()
}

fn lift_and_reconstruct(f: &[Int], root: u64, p: u64, bound: &Int) -> Option<(Int, Int)> {
    // Newton-lift the simple root modulo p^(2^k) until above bound^2 * 2.
    let fp_deriv: Vec<Int> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Int::from(i))
        .collect();
    let mut modulus = Int::from(p);
    let mut r = Int::from(root);
    let target: Int = bound * bound * Int::from(2);
    while modulus < target {
        modulus = &modulus * &modulus;
        let fv = eval_int_mod(f, &r, &modulus);
        let dv = eval_int_mod(&fp_deriv, &r, &modulus);
        let dinv = mod_inverse(&dv, &modulus)?;
        r = (&r - fv * dinv).mod_floor(&modulus);
    }
    rational_reconstruct(&r, &modulus)
}

fn eval_int_mod(f: &[Int], x: &Int, m: &Int) -> Int {
    let mut acc = Int::zero();
    for c in f.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Rational reconstruction of `c` modulo `m`: a pair (num, den), den > 0,
/// with num/den ≡ c (mod m) and |num|, den ≤ sqrt(m/2).
pub fn rational_reconstruct(c: &Int, m: &Int) -> Option<(Int, Int)> {
    use num_integer::Roots;
    let bound = (m / Int::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), c.mod_floor(m));
    let (mut t0, mut t1) = (Int::zero(), Int::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let (num, den) = if t1.is_negative() {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    if num.gcd(&den).is_one() {
        Some((num, den))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_roots_mod() {
        let fp = Fp::new(1009);
        // (x-3)(x-5)(x^2+1)
        let f = mul(fp, &mul(fp, &[1006, 1], &[1004, 1]), &[1, 0, 1]);
        let mut r = roots_mod(fp, &f);
        r.sort_unstable();
        assert_eq!(r, vec![3, 5]);
    }

    #[test]
    fn rational_roots_basic() {
        // (2x - 3)(x + 5)(x^2 + x + 1) = 2x^4 + 9x^3 - 6x^2 - 8x - 15... compute:
        // (2x-3)(x+5) = 2x^2 + 7x - 15
        // * (x^2+x+1) = 2x^4 + 9x^3 + 2x^2*1... do it exactly in the test
        let a = [Int::from(-15), Int::from(7), Int::from(2)];
        let b = [Int::from(1), Int::from(1), Int::from(1)];
        let mut prod = vec![Int::from(0); 5];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let mut roots = rational_roots(&prod);
        roots.sort();
        assert_eq!(
            roots,
            vec![(Int::from(-5), Int::from(1)), (Int::from(3), Int::from(2))]
        );
    }

    #[test]
    fn certificate_quadratic() {
        // x^2 + x + 1 irreducible
        let f = [Int::from(1), Int::from(1), Int::from(1)];
        assert_eq!(irreducible_certificate(&f), Some(true));
        // x^2 - 6 irreducible
        let g = [Int::from(-6), Int::from(0), Int::from(1)];
        assert_eq!(irreducible_certificate(&g), Some(true));
    }

    #[test]
    fn degree_pattern_splits() {
        let fp = Fp::new(1013);
        // (x^2+1)*(x-2) mod p where -1 is QR or not depending on p mod 4; 1013 ≡ 1 (mod 4)
        let f = mul(fp, &[1, 0, 1], &[1011, 1]);
        let pat = degree_pattern(fp, &f);
        let total: usize = pat.iter().map(|&(_, e)| e).sum();
        assert_eq!(total, 3);
    }
}
