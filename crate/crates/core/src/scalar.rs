//! Exact coefficients: rationals, or elements of one simple extension Q(a)
//! given by a monic integer minimal polynomial. Towers are rejected.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::modp;
use crate::upoly::{Field, UPoly};

pub type Rat = BigRational;
pub type Int = BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Minimal polynomial not monic, not integral, or degree < 2.
    BadMinimalPolynomial(String),
    /// Reducible, or irreducibility could not be certified.
    NotIrreducible(String),
    /// Arithmetic mixing two different extensions.
    FieldMismatch,
    DivisionByZero,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::BadMinimalPolynomial(s) => write!(f, "bad minimal polynomial: {s}"),
            ScalarError::NotIrreducible(s) => write!(f, "minimal polynomial not irreducible: {s}"),
            ScalarError::FieldMismatch => write!(f, "scalars belong to different extensions"),
            ScalarError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

/// A simple extension Q(a), a a root of the given monic irreducible integer
/// polynomial (ascending coefficients, leading coefficient 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub generator: String,
    pub minpoly: Vec<Int>,
}

impl Extension {
    pub fn new(generator: &str, minpoly: Vec<Int>) -> Result<Arc<Extension>, ScalarError> {
        let n = minpoly.len().saturating_sub(1);
        if n < 2 {
            return Err(ScalarError::BadMinimalPolynomial(format!(
                "degree {n} < 2"
            )));
        }
        if !minpoly[n].is_one() {
            return Err(ScalarError::BadMinimalPolynomial("not monic".into()));
        }
        if !Self::is_irreducible(&minpoly)? {
            return Err(ScalarError::NotIrreducible(format!(
                "degree-{n} polynomial has a proper factor"
            )));
        }
        Ok(Arc::new(Extension {
            generator: generator.into(),
            minpoly,
        }))
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// Exact for degree <= 4; degree >= 5 relies on a modular degree-pattern
    /// certificate and errs on the side of rejection when inconclusive.
    fn is_irreducible(minpoly: &[Int]) -> Result<bool, ScalarError> {
        let n = minpoly.len() - 1;
        if !modp::rational_roots(minpoly).is_empty() {
            return Ok(false);
        }
        if n <= 3 {
            return Ok(true);
        }
        if n == 4 {
            return Ok(!has_monic_quadratic_factor(minpoly));
        }
        match modp::irreducible_certificate(minpoly) {
            Some(v) => Ok(v),
            None => Err(ScalarError::NotIrreducible(
                "irreducibility could not be certified".into(),
            )),
        }
    }

    pub fn alpha(self: &Arc<Self>) -> Scalar {
        let mut coeffs = vec![Rat::zero(); self.degree()];
        coeffs[1] = Rat::one();
        Scalar::Ext(ExtElem {
            coeffs,
            field: self.clone(),
        })
    }

    fn minpoly_upoly(&self) -> UPoly<Rat> {
        UPoly::new(
            self.minpoly
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }
}

fn has_monic_quadratic_factor(f: &[Int]) -> bool {
    // f = x^4 + f3 x^3 + f2 x^2 + f1 x + f0 = (x^2+ax+b)(x^2+cx+d), integers.
    let f0 = &f[0];
    let f1 = &f[1];
    let f2 = &f[2];
    let f3 = &f[3];
    let mut divs = divisors(f0);
    let negs: Vec<Int> = divs.iter().map(|d| -d).collect();
    divs.extend(negs);
    for b in &divs {
        if b.is_zero() {
            continue;
        }
        let d = f0 / b;
        // a + c = f3, ac = f2 - b - d, ad + bc = f1
        let s = f3.clone();
        let prod = f2 - b - &d;
        let disc = &s * &s - Int::from(4) * &prod;
        if disc.is_negative() {
            continue;
        }
        use num_integer::Roots;
        let r = disc.sqrt();
        if &r * &r != disc {
            continue;
        }
        for a_num in [&s + &r, &s - &r] {
            if (&a_num % Int::from(2)).is_zero() {
                let a = a_num / Int::from(2);
                let c = &s - &a;
                if &a * &d + b * &c == *f1 {
                    return true;
                }
            }
        }
    }
    false
}

fn divisors(n: &Int) -> Vec<Int> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut out = Vec::new();
    let mut d = Int::one();
    loop {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
        if &d * &d > n {
            break;
        }
    }
    out
}

/// Element of Q(a): rational-coefficient polynomial in the generator of
/// degree below deg(minpoly).
#[derive(Debug, Clone)]
pub struct ExtElem {
    pub coeffs: Vec<Rat>,
    pub field: Arc<Extension>,
}

impl PartialEq for ExtElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.field == *other.field
    }
}
impl Eq for ExtElem {}

impl ExtElem {
    fn reduce(field: &Arc<Extension>, poly: UPoly<Rat>) -> ExtElem {
        let m = field.minpoly_upoly();
        let r = poly.rem(&m);
        let mut coeffs = r.0;
        coeffs.resize(field.degree(), Rat::zero());
        ExtElem {
            coeffs,
            field: field.clone(),
        }
    }
    fn as_upoly(&self) -> UPoly<Rat> {
        UPoly::new(self.coeffs.clone())
    }
    pub fn is_rational(&self) -> Option<Rat> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(Rat),
    Ext(ExtElem),
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(Rat::zero())
    }
    pub fn one() -> Scalar {
        Scalar::Rat(Rat::one())
    }
    pub fn from_int(n: i64) -> Scalar {
        Scalar::Rat(Rat::from_integer(Int::from(n)))
    }
    pub fn from_frac(num: i64, den: i64) -> Scalar {
        Scalar::Rat(Rat::new(Int::from(num), Int::from(den)))
    }
    pub fn from_rat(r: Rat) -> Scalar {
        Scalar::Rat(r)
    }
    /// Element of Q(a) from ascending rational coefficients in the generator.
    pub fn from_ext(field: &Arc<Extension>, coeffs: Vec<Rat>) -> Scalar {
        Scalar::Ext(ExtElem::reduce(field, UPoly::new(coeffs))).normalize()
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Ext(e) => e.coeffs.iter().all(|c| c.is_zero()),
        }
    }

    /// Collapse extension elements that are in fact rational.
    fn normalize(self) -> Scalar {
        match self {
            Scalar::Ext(e) => match e.is_rational() {
                Some(r) => Scalar::Rat(r),
                None => Scalar::Ext(e),
            },
            s => s,
        }
    }

    pub fn field(&self) -> Option<&Arc<Extension>> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Ext(e) => Some(&e.field),
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Ext(_) => None,
        }
    }

    fn promote(&self, field: &Arc<Extension>) -> ExtElem {
        match self {
            Scalar::Rat(r) => {
                let mut coeffs = vec![Rat::zero(); field.degree()];
                coeffs[0] = r.clone();
                ExtElem {
                    coeffs,
                    field: field.clone(),
                }
            }
            Scalar::Ext(e) => {
                assert!(*e.field == **field, "scalar field mismatch");
                e.clone()
            }
        }
    }

    fn binop(
        &self,
        o: &Scalar,
        rat_op: impl Fn(&Rat, &Rat) -> Rat,
        ext_op: impl Fn(&ExtElem, &ExtElem) -> ExtElem,
    ) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rat_op(a, b)),
            _ => {
                let field = self
                    .field()
                    .or_else(|| o.field())
                    .expect("binop: no extension")
                    .clone();
                let a = self.promote(&field);
                let b = o.promote(&field);
                Scalar::Ext(ext_op(&a, &b)).normalize()
            }
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        self.binop(o, |a, b| a + b, |a, b| {
            let coeffs = a
                .coeffs
                .iter()
                .zip(b.coeffs.iter())
                .map(|(x, y)| x + y)
                .collect();
            ExtElem {
                coeffs,
                field: a.field.clone(),
            }
        })
    }
    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }
    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Ext(e) => Scalar::Ext(ExtElem {
                coeffs: e.coeffs.iter().map(|c| -c).collect(),
                field: e.field.clone(),
            }),
        }
    }
    pub fn mul(&self, o: &Scalar) -> Scalar {
        self.binop(o, |a, b| a * b, |a, b| {
            ExtElem::reduce(&a.field, a.as_upoly().mul(&b.as_upoly()))
        })
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Ext(e) => {
                if self.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                let m = e.field.minpoly_upoly();
                let (g, s, _) = e.as_upoly().extended_gcd(&m);
                // minpoly irreducible, so gcd is 1 for nonzero e
                assert_eq!(g.deg(), Some(0), "inverse in reducible quotient");
                Ok(Scalar::Ext(ExtElem::reduce(&e.field, s)).normalize())
            }
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    /// Unify the fields of a collection of scalars; errors if two distinct
    /// extensions appear.
    pub fn common_field<'a>(
        scalars: impl IntoIterator<Item = &'a Scalar>,
    ) -> Result<Option<Arc<Extension>>, ScalarError> {
        let mut field: Option<Arc<Extension>> = None;
        for s in scalars {
            if let Some(f) = s.field() {
                match &field {
                    None => field = Some(f.clone()),
                    Some(g) => {
                        if **g != **f {
                            return Err(ScalarError::FieldMismatch);
                        }
                    }
                }
            }
        }
        Ok(field)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Ext(e) => {
                let name = &e.field.generator;
                let mut first = true;
                write!(f, "(")?;
                for (i, c) in e.coeffs.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    let neg = c.is_negative();
                    let mag = c.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else if neg {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    let unit_coeff = mag.is_one() && i > 0;
                    if !unit_coeff {
                        write!(f, "{mag}")?;
                    }
                    if i > 0 {
                        if !unit_coeff {
                            write!(f, "*")?;
                        }
                        write!(f, "{name}")?;
                        if i > 1 {
                            write!(f, "^{i}")?;
                        }
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self).ok()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega_field() -> Arc<Extension> {
        Extension::new("w", vec![Int::from(1), Int::from(1), Int::from(1)]).unwrap()
    }

    #[test]
    fn omega_arithmetic() {
        let f = omega_field();
        let w = f.alpha();
        // w^2 = -1 - w
        let w2 = w.mul(&w);
        let expect = Scalar::from_ext(
            &f,
            vec![Rat::from_integer(Int::from(-1)), Rat::from_integer(Int::from(-1))],
        );
        assert_eq!(w2, expect);
        // w^3 = 1
        assert_eq!(w2.mul(&w), Scalar::one());
        // 1 + w + w^2 = 0
        assert!(Scalar::one().add(&w).add(&w2).is_zero());
    }

    #[test]
    fn sqrt6_inverse() {
        let f = Extension::new("s", vec![Int::from(-6), Int::from(0), Int::from(1)]).unwrap();
        let s = f.alpha();
        let inv = s.inv().unwrap();
        assert_eq!(s.mul(&inv), Scalar::one());
        // (a + b s)(a - b s) = a^2 - 6 b^2
        let x = Scalar::from_int(2).add(&s);
        let y = Scalar::from_int(2).sub(&s);
        assert_eq!(x.mul(&y), Scalar::from_int(-2));
    }

    #[test]
    fn reducible_rejected() {
        // x^2 - 1 = (x-1)(x+1)
        let r = Extension::new("a", vec![Int::from(-1), Int::from(0), Int::from(1)]);
        assert!(matches!(r, Err(ScalarError::NotIrreducible(_))));
        // x^4 + 2x^2 + 1 = (x^2+1)^2
        let r4 = Extension::new(
            "a",
            vec![
                Int::from(1),
                Int::from(0),
                Int::from(2),
                Int::from(0),
                Int::from(1),
            ],
        );
        assert!(r4.is_err());
        // x^4 + 1 is irreducible
        let ok = Extension::new(
            "a",
            vec![
                Int::from(1),
                Int::from(0),
                Int::from(0),
                Int::from(0),
                Int::from(1),
            ],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn field_axioms_random() {
        // lightweight randomized associativity / inverse checks in Q(w)
        let f = omega_field();
        let mut seed = 0x12345678u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for _ in 0..50 {
            let a = Scalar::from_ext(
                &f,
                vec![
                    Rat::from_integer(Int::from(next())),
                    Rat::from_integer(Int::from(next())),
                ],
            );
            let b = Scalar::from_ext(
                &f,
                vec![
                    Rat::from_integer(Int::from(next())),
                    Rat::from_integer(Int::from(next())),
                ],
            );
            let c = Scalar::from_ext(
                &f,
                vec![
                    Rat::from_integer(Int::from(next())),
                    Rat::from_integer(Int::from(next())),
                ],
            );
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            if !a.is_zero() {
                assert_eq!(a.mul(&a.inv().unwrap()), Scalar::one());
            }
        }
    }
}
