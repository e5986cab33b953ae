use super::elem::FieldElem;
use super::ratfunc::RatFunc;
use num::{BigInt, Integer, One, Signed, Zero};
use std::fmt;

/// Clears denominators: returns integer coefficient lists for num and den
/// with overall content 1 and a positive leading denominator coefficient.
fn integer_parts(f: &RatFunc) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut lcm = BigInt::one();
    for c in f.num().coeffs().iter().chain(f.den().coeffs()) {
        lcm = lcm.lcm(c.denom());
    }
    let scale = |coeffs: &[super::poly::Rational]| -> Vec<BigInt> {
        coeffs
            .iter()
            .map(|c| (c * super::poly::Rational::from_integer(lcm.clone())).to_integer())
            .collect()
    };
    let mut num = scale(f.num().coeffs());
    let mut den = scale(f.den().coeffs());
    let mut g = BigInt::zero();
    for c in num.iter().chain(den.iter()) {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in num.iter_mut().chain(den.iter_mut()) {
            *c /= &g;
        }
    }
    (num, den)
}

/// Renders integer coefficients (lowest degree first) as a readable
/// polynomial in `var`, highest degree first.
fn int_poly_string(coeffs: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let body = match (i, mag.is_one()) {
            (0, _) => mag.to_string(),
            (1, true) => var.to_string(),
            (1, false) => format!("{mag}*{var}"),
            (_, true) => format!("{var}^{i}"),
            (_, false) => format!("{mag}*{var}^{i}"),
        };
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn nonzero_terms(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

/// Canonical text form of a rational function: an integer-coefficient
/// polynomial fraction that the expression grammar parses back to the same
/// value.
fn ratfunc_string(f: &RatFunc) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let (num, den) = integer_parts(f);
    let num_str = int_poly_string(&num, "z");
    if den.len() == 1 && den[0].is_one() {
        return num_str;
    }
    let num_part = if nonzero_terms(&num) > 1 {
        format!("({num_str})")
    } else {
        num_str
    };
    let den_str = int_poly_string(&den, "z");
    // A one-term denominator like z^3 binds tightly enough on its own; a
    // coefficient (3*z) or several terms need the parentheses.
    let den_part = if nonzero_terms(&den) > 1 || den_str.contains('*') {
        format!("({den_str})")
    } else {
        den_str
    };
    format!("{num_part}/{den_part}")
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Q(c) => write!(f, "{c}"),
            FieldElem::Qz(r) => write!(f, "{}", ratfunc_string(r)),
        }
    }
}
