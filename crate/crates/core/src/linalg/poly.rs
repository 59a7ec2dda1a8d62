//! Integer polynomials with exact arithmetic throughout. Coefficients are
//! arbitrary-precision and stored in ascending degree order; every division
//! performed here is exact in the integers, which Gauss's lemma guarantees
//! for the primitive polynomials these routines pass around.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Polynomial over the integers. The zero polynomial has no coefficients;
/// otherwise the final coefficient is nonzero. Serializes as an array of
/// decimal strings in ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::new(coeffs)
    }

    /// Greatest common divisor of the coefficients, zero for the zero
    /// polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// The polynomial divided by its content, signed so the leading
    /// coefficient is positive.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let content = self.content();
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().map(|c| c / &content).collect();
        if coeffs.last().expect("nonzero").sign() == Sign::Minus {
            for c in &mut coeffs {
                *c = -c.clone();
            }
        }
        IntPolynomial { coeffs }
    }

    /// Quotient when `d` divides `self` exactly over the integers.
    pub fn exact_div(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let nd = self.degree().expect("nonzero");
        if nd < dd {
            return None;
        }
        let lead = d.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            if !(&c % lead).is_zero() {
                return None;
            }
            let qc = &c / lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let sub = &qc * dc;
                rem[k + j] -= sub;
            }
            q[k] = qc;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPolynomial::new(q))
        } else {
            None
        }
    }

    /// Primitive positive-leading greatest common divisor, computed with a
    /// primitive pseudo-remainder sequence.
    pub fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
        let mut a = a.primitive_part();
        let mut b = b.primitive_part();
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Yun decomposition of the primitive part: pairs `(i, a_i)` with the
    /// `a_i` primitive, square-free, pairwise coprime, of positive degree,
    /// and multiplicities strictly increasing, such that the primitive
    /// part equals the product of the `a_i^i`.
    pub fn square_free_decomposition(&self) -> Vec<(usize, IntPolynomial)> {
        let f = self.primitive_part();
        match f.degree() {
            None | Some(0) => return Vec::new(),
            Some(_) => {}
        }
        let fp = f.derivative();
        let g = IntPolynomial::gcd(&f, &fp);
        let mut c = f.exact_div(&g).expect("gcd divides the polynomial");
        let fdg = fp.exact_div(&g).expect("gcd divides the derivative");
        let mut d = &fdg - &c.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        loop {
            let a = IntPolynomial::gcd(&c, &d);
            if a.degree().is_some_and(|deg| deg >= 1) {
                out.push((i, a.clone()));
            }
            c = c.exact_div(&a).expect("square-free factor divides");
            if c.degree().is_none_or(|deg| deg == 0) {
                break;
            }
            let ddiv = d.exact_div(&a).expect("square-free factor divides");
            d = &ddiv - &c.derivative();
            i += 1;
        }
        out
    }

    /// Multiplicity of `r` as a root, by repeated exact division by the
    /// linear factor.
    pub fn root_multiplicity(&self, r: &BigInt) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while p.degree().is_some() && p.eval(r).is_zero() {
            p = p.divide_by_linear_root(r);
            m += 1;
        }
        m
    }

    /// Quotient by `x - r` when `r` is known to be a root.
    fn divide_by_linear_root(&self, r: &BigInt) -> IntPolynomial {
        let mut acc = BigInt::zero();
        let mut desc = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c;
            desc.push(acc.clone());
        }
        let rem = desc.pop().expect("nonzero polynomial");
        debug_assert!(rem.is_zero(), "not a root");
        desc.reverse();
        IntPolynomial::new(desc)
    }
}

/// A pseudo-remainder of `a` by nonzero `b`: the leading coefficient of
/// `b` scales `a` at each elimination step, so no fractions appear.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("divisor is nonzero");
    let bl = b.leading().expect("divisor is nonzero").clone();
    let mut r = a.coeffs.clone();
    loop {
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
        let dr = r.len() - 1;
        let rl = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &bl;
        }
        for (j, bc) in b.coeffs.iter().enumerate() {
            let sub = &rl * bc;
            r[dr - db + j] -= sub;
        }
    }
    IntPolynomial::new(r)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, other: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a * b;
                coeffs[i + j] += prod;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|t| BigInt::from_str(t).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}
