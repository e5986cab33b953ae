use num::{BigInt, BigRational, Integer, One, Zero};

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rational = BigRational;

/// Dense univariate polynomial over the rationals in the variable `z`.
///
/// Invariants: coefficients are stored lowest degree first and the last
/// stored coefficient is nonzero; the zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The variable `z` itself.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// Builds a polynomial from `coeffs[i] * z^i`, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, b: &Poly) -> Poly {
        let n = self.coeffs.len().max(b.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + b.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, b: &Poly) -> Poly {
        let n = self.coeffs.len().max(b.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - b.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, b: &Poly) -> Poly {
        if self.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + b.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, c) in b.coeffs.iter().enumerate() {
                out[i + j] += a * c;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division; panics on a zero divisor (callers check).
    pub fn divrem(&self, b: &Poly) -> (Poly, Poly) {
        let db = b.degree().expect("polynomial division by zero");
        let lead_inv = Rational::one() / b.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = if self.coeffs.len() > db {
            vec![Rational::zero(); self.coeffs.len() - db]
        } else {
            Vec::new()
        };
        while rem.len() > db {
            let d = rem.len() - 1;
            let q = rem[d].clone() * &lead_inv;
            if !q.is_zero() {
                for (i, c) in b.coeffs.iter().enumerate() {
                    let idx = d - db + i;
                    let t = &q * c;
                    rem[idx] -= t;
                }
                quot[d - db] = q;
            }
            // The leading entry cancels exactly; drop it and any new zeros.
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= db {
                break;
            }
        }
        (Poly::from_coeffs(quot), Poly { coeffs: rem })
    }

    /// Exact quotient; panics when the division leaves a remainder.
    pub fn div_exact(&self, b: &Poly) -> Poly {
        let (q, r) = self.divrem(b);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; zero when both inputs are zero.
    ///
    /// Runs the primitive remainder sequence over the integers: rational
    /// Euclid lets coefficient bit-length grow exponentially with the degree,
    /// while stripping integer content after each pseudo-remainder keeps it
    /// polynomial.
    pub fn gcd(&self, b: &Poly) -> Poly {
        if self.is_zero() {
            return if b.is_zero() { Poly::zero() } else { b.monic() };
        }
        if b.is_zero() {
            return self.monic();
        }
        let mut a = integer_primitive(self);
        let mut b = integer_primitive(b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive_part(r);
        }
        let coeffs = a.into_iter().map(Rational::from_integer).collect();
        Poly::from_coeffs(coeffs).monic()
    }

    /// Scales so the leading coefficient is 1; panics on zero (callers check).
    pub fn monic(&self) -> Poly {
        let lead = self.leading().expect("monic of the zero polynomial");
        self.scale(&(Rational::one() / lead))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, n: usize) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

/// Clears denominators and strips content; `p` must be nonzero.
fn integer_primitive(p: &Poly) -> Vec<BigInt> {
    let mut scale = BigInt::one();
    for c in p.coeffs() {
        scale = scale.lcm(c.denom());
    }
    let ints = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect();
    primitive_part(ints)
}

/// Divides a nonzero integer polynomial by its content and makes the leading
/// coefficient positive; returns the empty vector unchanged.
fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let Some(lead) = v.last() else {
        return v;
    };
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if lead.sign() == num::bigint::Sign::Minus {
        content = -content;
    }
    for c in v.iter_mut() {
        *c = &*c / &content;
    }
    v
}

/// Remainder of `lc(b)^k * a` by `b` over the integers for the `k` that keeps
/// every elimination step integral; callers strip the content afterwards, so
/// the stray power of the leading coefficient is harmless.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &lr * c;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}
