//! Exact coefficient arithmetic.
//!
//! Every number in the engine lives in the ring `Q(i, sqrt2)[w^{±1}][k]`
//! where `w` is the formal phase unit (`w = e^{i pi theta/4}`, so `w^4`
//! renders as `e^{i pi theta}`) and `k` stands for the inverse deformation
//! parameter `1/kappa`. No floating point anywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Element of the quartic field Q(i, sqrt2): `a + b*sqrt2 + c*i + d*i*sqrt2`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraicCoeff {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl AlgebraicCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self { a, ..Self::default() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn sqrt2() -> Self {
        Self { b: BigRational::one(), ..Self::default() }
    }

    pub fn i() -> Self {
        Self { c: BigRational::one(), ..Self::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Is this a rational number (no sqrt2 or i part)?
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Complex conjugation: fixes sqrt2, negates i.
    pub fn conj(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Galois conjugate sending sqrt2 to -sqrt2.
    fn flip_sqrt2(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Exact inverse in the field. `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Multiply the three nontrivial Galois conjugates; the product of all
        // four is a nonzero rational (the field norm).
        let g1 = self.conj();
        let g2 = self.flip_sqrt2();
        let g3 = g1.flip_sqrt2();
        let adj = &(&g1 * &g2) * &g3;
        let norm = self * &adj;
        debug_assert!(norm.is_rational());
        let n = norm.a.clone();
        debug_assert!(!n.is_zero());
        let inv_n = BigRational::one() / n;
        Some(Self {
            a: &adj.a * &inv_n,
            b: &adj.b * &inv_n,
            c: &adj.c * &inv_n,
            d: &adj.d * &inv_n,
        })
    }
}

impl Add for &AlgebraicCoeff {
    type Output = AlgebraicCoeff;
    fn add(self, rhs: &AlgebraicCoeff) -> AlgebraicCoeff {
        AlgebraicCoeff {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl Sub for &AlgebraicCoeff {
    type Output = AlgebraicCoeff;
    fn sub(self, rhs: &AlgebraicCoeff) -> AlgebraicCoeff {
        AlgebraicCoeff {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl Neg for &AlgebraicCoeff {
    type Output = AlgebraicCoeff;
    fn neg(self) -> AlgebraicCoeff {
        AlgebraicCoeff {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }
}

impl Mul for &AlgebraicCoeff {
    type Output = AlgebraicCoeff;
    fn mul(self, r: &AlgebraicCoeff) -> AlgebraicCoeff {
        // Basis products with sqrt2^2 = 2, i^2 = -1, (i sqrt2)^2 = -2.
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&r.a, &r.b, &r.c, &r.d);
        let two = rat(2, 1);
        AlgebraicCoeff {
            a: a * a2 + &two * (b * b2) - c * c2 - &two * (d * d2),
            b: a * b2 + b * a2 - c * d2 - d * c2,
            c: a * c2 + c * a2 + &two * (b * d2) + &two * (d * b2),
            d: a * d2 + d * a2 + b * c2 + c * b2,
        }
    }
}

impl fmt::Display for AlgebraicCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let basis = [
            (&self.a, ""),
            (&self.b, "sqrt2"),
            (&self.c, "i"),
            (&self.d, "i*sqrt2"),
        ];
        for (q, unit) in basis {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            let sign = if q.is_negative() { "-" } else if parts.is_empty() { "" } else { "+" };
            let body = if unit.is_empty() {
                format!("{mag}")
            } else if mag.is_one() {
                unit.to_string()
            } else {
                format!("{mag}*{unit}")
            };
            if parts.is_empty() {
                parts.push(format!("{sign}{body}"));
            } else {
                parts.push(format!(" {sign} {body}"));
            }
        }
        write!(f, "{}", parts.concat())
    }
}

/// Exponent key: (omega power, kappa^{-1} power).
pub type ScalarKey = (i64, u32);

/// Sparse element of `Q(i,sqrt2)[w^{±1}][k]`, canonical (no stored zeros).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Scalar {
    terms: BTreeMap<ScalarKey, AlgebraicCoeff>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeff(AlgebraicCoeff::one())
    }

    pub fn from_coeff(c: AlgebraicCoeff) -> Self {
        let mut s = Self::default();
        if !c.is_zero() {
            s.terms.insert((0, 0), c);
        }
        s
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_coeff(AlgebraicCoeff::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_coeff(AlgebraicCoeff::from_ratio(n, d))
    }

    pub fn sqrt2() -> Self {
        Self::from_coeff(AlgebraicCoeff::sqrt2())
    }

    pub fn i() -> Self {
        Self::from_coeff(AlgebraicCoeff::i())
    }

    /// The phase unit to an integer power: `w^e`.
    pub fn omega(e: i64) -> Self {
        let mut s = Self::default();
        s.terms.insert((e, 0), AlgebraicCoeff::one());
        s
    }

    /// `k^e`, the e-th power of the inverse deformation parameter.
    pub fn kappa_inv(e: u32) -> Self {
        let mut s = Self::default();
        s.terms.insert((0, e), AlgebraicCoeff::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&(0, 0)).map(AlgebraicCoeff::is_one).unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ScalarKey, &AlgebraicCoeff)> {
        self.terms.iter()
    }

    /// Single-term accessor: Some((key, coeff)) iff exactly one term.
    pub fn as_single_term(&self) -> Option<(ScalarKey, &AlgebraicCoeff)> {
        if self.terms.len() == 1 {
            let (k, v) = self.terms.iter().next().unwrap();
            Some((*k, v))
        } else {
            None
        }
    }

    fn insert_canonical(&mut self, key: ScalarKey, v: AlgebraicCoeff) {
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn add_assign_term(&mut self, key: ScalarKey, v: &AlgebraicCoeff) {
        if v.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(AlgebraicCoeff::zero);
        *entry = &*entry + v;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Star: involutive ring automorphism, `w^e -> w^{-e}`, `i -> -i`,
    /// `k` fixed (kappa is real, omega a unit phase).
    pub fn star(&self) -> Self {
        let mut out = Self::default();
        for ((w, k), c) in &self.terms {
            out.insert_canonical((-w, *k), c.conj());
        }
        out
    }

    /// Ring morphism sending `w -> 1` (the classical limit theta = 0).
    pub fn eval_at_omega_one(&self) -> Self {
        let mut out = Self::default();
        for ((_, k), c) in &self.terms {
            out.add_assign_term((0, *k), c);
        }
        out
    }

    /// Multiply by `w^e`.
    pub fn mul_omega(&self, e: i64) -> Self {
        let mut out = Self::default();
        for ((w, k), c) in &self.terms {
            out.insert_canonical((w + e, *k), c.clone());
        }
        out
    }

    /// Exact inverse, defined only for single-term scalars with zero
    /// kappa-degree (units of the ring).
    pub fn inverse(&self) -> Option<Self> {
        let ((w, k), c) = self.as_single_term()?;
        if k != 0 {
            return None;
        }
        let ci = c.inverse()?;
        let mut out = Self::default();
        out.insert_canonical((-w, 0), ci);
        Some(out)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_assign_term(*k, v);
        }
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut out = Scalar::default();
        for (k, v) in &self.terms {
            out.insert_canonical(*k, -v);
        }
        out
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::default();
        for ((w1, k1), c1) in &self.terms {
            for ((w2, k2), c2) in &rhs.terms {
                out.add_assign_term((w1 + w2, k1 + k2), &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((w, k), c) in &self.terms {
            let coeff_str = format!("{c}");
            let multi_term = coeff_str.contains(" + ") || coeff_str.contains(" - ");
            let negative = !multi_term && coeff_str.starts_with('-');
            let mag_str = if negative { coeff_str[1..].to_string() } else { coeff_str.clone() };

            let mut factors: Vec<String> = Vec::new();
            if multi_term {
                factors.push(format!("({coeff_str})"));
            } else if mag_str != "1" || (*w == 0 && *k == 0) {
                factors.push(mag_str);
            }
            if *w != 0 {
                factors.push(if *w == 1 { "w".into() } else { format!("w^{w}") });
            }
            if *k != 0 {
                factors.push(if *k == 1 { "k".into() } else { format!("k^{k}") });
            }
            let body = factors.join("*");
            let neg = negative && !multi_term;
            if first {
                if neg {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if neg {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn omega_inverse_phase() {
        let p = &Scalar::omega(4) * &Scalar::omega(-4);
        assert!(p.is_one());
    }

    #[test]
    fn star_involution_rules() {
        // star(i * w^2 * k) = -i * w^-2 * k
        let s = &(&Scalar::i() * &Scalar::omega(2)) * &Scalar::kappa_inv(1);
        let expected = &(&(-&Scalar::i()) * &Scalar::omega(-2)) * &Scalar::kappa_inv(1);
        assert_eq!(s.star(), expected);
        assert_eq!(s.star().star(), s);
    }

    #[test]
    fn quadratic_field_norm() {
        // (1 + sqrt2)(1 - sqrt2) = -1
        let a = &Scalar::one() + &Scalar::sqrt2();
        let b = &Scalar::one() - &Scalar::sqrt2();
        assert_eq!(&a * &b, Scalar::from_int(-1));
    }

    #[test]
    fn classical_limit_kills_pure_phases() {
        // eval_at_omega_one(w^8 - 1) = 0
        let s = &Scalar::omega(8) - &Scalar::one();
        assert!(s.eval_at_omega_one().is_zero());
    }

    #[test]
    fn coeff_inverse() {
        let x = AlgebraicCoeff {
            a: rat(1, 2),
            b: rat(3, 1),
            c: rat(-1, 1),
            d: rat(2, 5),
        };
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert!(AlgebraicCoeff::zero().inverse().is_none());
    }

    #[test]
    fn scalar_unit_inverse() {
        let s = &Scalar::sqrt2() * &Scalar::omega(-3);
        let inv = s.inverse().unwrap();
        assert!((&s * &inv).is_one());
        assert!(Scalar::kappa_inv(1).inverse().is_none());
        assert!((&Scalar::one() + &Scalar::omega(1)).inverse().is_none());
    }

    fn arb_coeff() -> impl Strategy<Value = AlgebraicCoeff> {
        (-4i64..5, -4i64..5, -4i64..5, -4i64..5, 1i64..4).prop_map(|(a, b, c, d, q)| {
            AlgebraicCoeff {
                a: rat(a, q),
                b: rat(b, 1),
                c: rat(c, q),
                d: rat(d, 1),
            }
        })
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        proptest::collection::vec(((-6i64..7, 0u32..3), arb_coeff()), 0..4).prop_map(|terms| {
            let mut s = Scalar::zero();
            for (k, c) in terms {
                s.add_assign_term(k, &c);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &Scalar::one(), a.clone());
            prop_assert_eq!(&a + &(-&a), Scalar::zero());
        }

        #[test]
        fn star_is_ring_automorphism(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(a.star().star(), a.clone());
            prop_assert_eq!((&a * &b).star(), &a.star() * &b.star());
            prop_assert_eq!((&a + &b).star(), &a.star() + &b.star());
        }

        #[test]
        fn eval_omega_one_is_morphism(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!((&a * &b).eval_at_omega_one(),
                &a.eval_at_omega_one() * &b.eval_at_omega_one());
            prop_assert_eq!((&a + &b).eval_at_omega_one(),
                &a.eval_at_omega_one() + &b.eval_at_omega_one());
        }
    }
}
