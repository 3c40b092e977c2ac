//! Perfect tracts: the Krasner hyperfield, the tropical hyperfield, prime
//! fields and the rationals.
//!
//! A tract is a multiplicative pointed group together with a nullset of
//! formal sums. Formal sums are never materialized; a finite multiset of
//! elements is handed to [`Tract::is_null`], which decides membership.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer types usable as numerators and denominators of exact tract values.
pub trait ExactInteger:
    Integer + Signed + Clone + Hash + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static
{
}

impl<I> ExactInteger for I where
    I: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

pub trait Tract: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// The unique `b` with `{a, b}` null.
    fn negate(&self, a: &Self::Elem) -> Self::Elem;
    /// Nullset membership of the formal sum of `terms`. Terms are assumed to
    /// belong to the tract; see [`Tract::checked_is_null`].
    fn is_null(&self, terms: &[Self::Elem]) -> bool;
    /// Whether `a` is a valid element of this tract.
    fn contains(&self, a: &Self::Elem) -> bool;
    /// All elements in increasing order, for finite tracts.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn parse_elem(&self, text: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn descriptor(&self) -> TractDescriptor;
    /// A pseudorandom unit, for rescaling tests.
    fn sample_unit(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn minus_one(&self) -> Self::Elem {
        self.negate(&self.one())
    }

    fn is_finite(&self) -> bool {
        self.elements().is_some()
    }

    fn units(&self) -> Option<Vec<Self::Elem>> {
        self.elements()
            .map(|all| all.into_iter().filter(|a| !self.is_zero(a)).collect())
    }

    fn checked_is_null(&self, terms: &[Self::Elem]) -> Result<bool> {
        for t in terms {
            self.check(t)?;
        }
        Ok(self.is_null(terms))
    }

    fn check(&self, a: &Self::Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ElementMismatch {
                elem: format!("{a:?}"),
                tract: self.descriptor().to_string(),
            })
        }
    }

    /// The unique tract morphism to the Krasner hyperfield.
    fn to_krasner(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a)
    }

    /// `a` times `(-1)^k` for a sign flag (`true` = positive).
    fn signed(&self, positive: bool, a: &Self::Elem) -> Self::Elem {
        if positive {
            a.clone()
        } else {
            self.negate(a)
        }
    }
}

/// Tracts whose nullset comes from an honest addition.
pub trait FieldTract: Tract {
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.negate(b))
    }
}

/// `X ⊥ Y`: the multiset `{X(e)·Y(e)}` is null.
pub fn dot_is_null<T: Tract>(tract: &T, x: &[T::Elem], y: &[T::Elem]) -> bool {
    debug_assert_eq!(x.len(), y.len());
    let products: Vec<_> = x
        .iter()
        .zip(y)
        .map(|(a, b)| tract.mul(a, b))
        .filter(|p| !tract.is_zero(p))
        .collect();
    tract.is_null(&products)
}

pub fn scale<T: Tract>(tract: &T, c: &T::Elem, x: &[T::Elem]) -> Vec<T::Elem> {
    x.iter().map(|a| tract.mul(c, a)).collect()
}

pub fn support<T: Tract>(tract: &T, x: &[T::Elem]) -> crate::subset::Subset {
    x.iter()
        .enumerate()
        .filter(|(_, a)| !tract.is_zero(a))
        .fold(0, |acc, (e, _)| acc | 1 << e)
}

/// JSON descriptor of a tract: `{"kind":"gf","p":5}` and friends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TractDescriptor {
    Krasner,
    Tropical,
    Gf { p: u64 },
    Rationals,
}

impl Display for TractDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TractDescriptor::Krasner => write!(f, "K"),
            TractDescriptor::Tropical => write!(f, "T"),
            TractDescriptor::Gf { p } => write!(f, "GF({p})"),
            TractDescriptor::Rationals => write!(f, "Q"),
        }
    }
}

/// The Krasner hyperfield `{0, 1}`: a sum is null unless it has exactly one
/// nonzero term.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Krasner;

impl Tract for Krasner {
    type Elem = bool;

    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn is_zero(&self, a: &bool) -> bool {
        !*a
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn inv(&self, a: &bool) -> Result<bool> {
        if *a {
            Ok(true)
        } else {
            Err(Error::ZeroInverse)
        }
    }
    fn negate(&self, a: &bool) -> bool {
        *a
    }
    fn is_null(&self, terms: &[bool]) -> bool {
        terms.iter().filter(|&&a| a).count() != 1
    }
    fn contains(&self, _: &bool) -> bool {
        true
    }
    fn elements(&self) -> Option<Vec<bool>> {
        Some(vec![false, true])
    }
    fn parse_elem(&self, text: &str) -> Result<bool> {
        match text.trim() {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(Error::Parse(other.to_string())),
        }
    }
    fn format_elem(&self, a: &bool) -> String {
        if *a { "1" } else { "0" }.to_string()
    }
    fn descriptor(&self) -> TractDescriptor {
        TractDescriptor::Krasner
    }
    fn sample_unit(&self, _: &mut dyn RngCore) -> bool {
        true
    }
}

/// The tropical hyperfield on exact nonnegative rationals under ordinary
/// multiplication: a sum is null iff its maximum is attained at least twice.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tropical<I> {
    _int: std::marker::PhantomData<I>,
}

impl<I> Tropical<I> {
    pub fn new() -> Self {
        Tropical {
            _int: std::marker::PhantomData,
        }
    }
}

impl<I: ExactInteger> Tract for Tropical<I> {
    type Elem = Ratio<I>;

    fn zero(&self) -> Ratio<I> {
        Ratio::zero()
    }
    fn one(&self) -> Ratio<I> {
        Ratio::one()
    }
    fn is_zero(&self, a: &Ratio<I>) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &Ratio<I>, b: &Ratio<I>) -> Ratio<I> {
        a * b
    }
    fn inv(&self, a: &Ratio<I>) -> Result<Ratio<I>> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(a.recip())
        }
    }
    fn negate(&self, a: &Ratio<I>) -> Ratio<I> {
        a.clone()
    }
    fn is_null(&self, terms: &[Ratio<I>]) -> bool {
        let mut max: Option<&Ratio<I>> = None;
        let mut count = 0;
        for t in terms.iter().filter(|t| !t.is_zero()) {
            match max {
                Some(m) if t < m => {}
                Some(m) if t == m => count += 1,
                _ => {
                    max = Some(t);
                    count = 1;
                }
            }
        }
        max.is_none() || count >= 2
    }
    fn contains(&self, a: &Ratio<I>) -> bool {
        !a.is_negative()
    }
    fn elements(&self) -> Option<Vec<Ratio<I>>> {
        None
    }
    fn parse_elem(&self, text: &str) -> Result<Ratio<I>> {
        let value: Ratio<I> = text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(text.to_string()))?;
        self.check(&value)?;
        Ok(value)
    }
    fn format_elem(&self, a: &Ratio<I>) -> String {
        a.to_string()
    }
    fn descriptor(&self) -> TractDescriptor {
        TractDescriptor::Tropical
    }
    fn sample_unit(&self, rng: &mut dyn RngCore) -> Ratio<I> {
        let num = I::from_i64(rng.random_range(1..=6)).expect("small integer");
        let den = I::from_i64(rng.random_range(1..=6)).expect("small integer");
        Ratio::new(num, den)
    }
}

/// The prime field `GF(p)` with residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime || p >= 1 << 31 {
            return Err(Error::Input(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Tract for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.pow(*a, self.p - 2))
        }
    }
    fn negate(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn is_null(&self, terms: &[u64]) -> bool {
        terms.iter().fold(0, |acc, t| (acc + t) % self.p) == 0
    }
    fn contains(&self, a: &u64) -> bool {
        *a < self.p
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn parse_elem(&self, text: &str) -> Result<u64> {
        let v: i64 = text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(text.to_string()))?;
        Ok(self.from_i64(v))
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn descriptor(&self) -> TractDescriptor {
        TractDescriptor::Gf { p: self.p }
    }
    fn sample_unit(&self, rng: &mut dyn RngCore) -> u64 {
        rng.random_range(1..self.p)
    }
}

impl FieldTract for PrimeField {
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals<I> {
    _int: std::marker::PhantomData<I>,
}

impl<I> Rationals<I> {
    pub fn new() -> Self {
        Rationals {
            _int: std::marker::PhantomData,
        }
    }
}

impl<I: ExactInteger> Tract for Rationals<I> {
    type Elem = Ratio<I>;

    fn zero(&self) -> Ratio<I> {
        Ratio::zero()
    }
    fn one(&self) -> Ratio<I> {
        Ratio::one()
    }
    fn is_zero(&self, a: &Ratio<I>) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &Ratio<I>, b: &Ratio<I>) -> Ratio<I> {
        a * b
    }
    fn inv(&self, a: &Ratio<I>) -> Result<Ratio<I>> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(a.recip())
        }
    }
    fn negate(&self, a: &Ratio<I>) -> Ratio<I> {
        -a.clone()
    }
    fn is_null(&self, terms: &[Ratio<I>]) -> bool {
        terms
            .iter()
            .fold(Ratio::zero(), |acc: Ratio<I>, t| acc + t)
            .is_zero()
    }
    fn contains(&self, _: &Ratio<I>) -> bool {
        true
    }
    fn elements(&self) -> Option<Vec<Ratio<I>>> {
        None
    }
    fn parse_elem(&self, text: &str) -> Result<Ratio<I>> {
        text.trim()
            .parse()
            .map_err(|_| Error::Parse(text.to_string()))
    }
    fn format_elem(&self, a: &Ratio<I>) -> String {
        a.to_string()
    }
    fn descriptor(&self) -> TractDescriptor {
        TractDescriptor::Rationals
    }
    fn sample_unit(&self, rng: &mut dyn RngCore) -> Ratio<I> {
        let num = I::from_i64(rng.random_range(1..=6)).expect("small integer");
        let den = I::from_i64(rng.random_range(1..=6)).expect("small integer");
        let v = Ratio::new(num, den);
        if rng.random_bool(0.5) {
            -v
        } else {
            v
        }
    }
}

impl<I: ExactInteger> FieldTract for Rationals<I> {
    fn add(&self, a: &Ratio<I>, b: &Ratio<I>) -> Ratio<I> {
        a + b
    }
    fn from_i64(&self, v: i64) -> Ratio<I> {
        Ratio::from_integer(I::from_i64(v).expect("integer fits"))
    }
}

/// The `q`-adic absolute value `|x|_q = q^{-v_q(x)}`, a tract morphism from
/// the rationals to the tropical hyperfield.
pub fn padic_abs<I: ExactInteger>(q: u64, x: &Ratio<I>) -> Ratio<I> {
    if x.is_zero() {
        return Ratio::zero();
    }
    let q_int = I::from_u64(q).expect("prime fits");
    let valuation = |mut m: I| {
        let mut v = 0i64;
        m = m.abs();
        while (m.clone() % q_int.clone()).is_zero() {
            m = m / q_int.clone();
            v += 1;
        }
        v
    };
    let v = valuation(x.numer().clone()) - valuation(x.denom().clone());
    let power = num_traits::pow(q_int, v.unsigned_abs() as usize);
    if v >= 0 {
        Ratio::new(I::one(), power)
    } else {
        Ratio::from_integer(power)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Trop = Tropical<BigInt>;
    type Q = Rationals<BigInt>;

    fn r(n: i64, d: i64) -> Ratio<BigInt> {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn krasner_nullset() {
        let k = Krasner;
        assert!(k.is_null(&[true, true]));
        assert!(k.is_null(&[]));
        assert!(k.is_null(&[false]));
        assert!(!k.is_null(&[true]));
        assert!(!k.is_null(&[true, false]));
        assert!(k.is_null(&[true, true, true]));
        assert!(k.negate(&true));
    }

    #[test]
    fn tropical_nullset() {
        let t = Trop::new();
        assert!(t.is_null(&[r(3, 1), r(3, 1), r(1, 1)]));
        assert!(!t.is_null(&[r(3, 1), r(1, 1)]));
        assert!(t.is_null(&[r(0, 1), r(0, 1)]));
        assert!(!t.is_null(&[r(1, 2)]));
        let a = r(7, 3);
        assert_eq!(t.negate(&a), a);
        assert_eq!(t.inv(&r(4, 1)).unwrap(), r(1, 4));
        assert!(t.parse_elem("-1").is_err());
        assert_eq!(t.parse_elem("7/2").unwrap(), r(7, 2));
        assert!(t.to_krasner(&r(7, 2)));
    }

    #[test]
    fn tropical_over_machine_integers() {
        let t = Tropical::<i64>::new();
        let a = Ratio::new(3i64, 2);
        assert!(t.is_null(&[a, a, Ratio::new(1, 1)]));
        assert_eq!(t.format_elem(&a), "3/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f3 = PrimeField::new(3).unwrap();
        assert!(f3.is_null(&[1, 2]));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.negate(&2), 3);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(&3).unwrap(), 5);
        assert!(f7.inv(&0).is_err());
        assert!(!f5.to_krasner(&0));
        assert_eq!(f5.parse_elem("-1").unwrap(), 4);
        assert!(PrimeField::new(4).is_err());
        assert!(f5.checked_is_null(&[7]).is_err());
    }

    #[test]
    fn rationals() {
        let q = Q::new();
        assert!(q.is_null(&[r(1, 2), r(-1, 2)]));
        assert!(q.to_krasner(&r(-4, 1)));
        assert_eq!(q.negate(&r(2, 3)), r(-2, 3));
    }

    #[test]
    fn finite_tracts_have_unique_additive_inverses() {
        let check = |t: &dyn Fn(u64, u64) -> bool, elems: &[u64]| {
            for &a in elems {
                let count = elems.iter().filter(|&&b| t(a, b)).count();
                assert_eq!(count, 1, "element {a}");
            }
        };
        for p in [2, 3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            let elems = f.elements().unwrap();
            check(&|a, b| f.is_null(&[a, b]), &elems);
        }
        let k = Krasner;
        for a in [false, true] {
            let count = [false, true].iter().filter(|&&b| k.is_null(&[a, b])).count();
            assert_eq!(count, 1);
        }
    }

    #[test]
    fn dot_products() {
        assert!(dot_is_null(&Krasner, &[true, true, false], &[true, true, false]));
        let f3 = PrimeField::new(3).unwrap();
        assert!(dot_is_null(&f3, &[1, 1, 0], &[1, 2, 0]));
        let t = Trop::new();
        assert!(dot_is_null(&t, &[r(2, 1), r(3, 1)], &[r(3, 1), r(2, 1)]));
    }

    #[test]
    fn padic_absolute_values() {
        assert_eq!(padic_abs::<BigInt>(2, &r(12, 1)), r(1, 4));
        assert_eq!(padic_abs::<BigInt>(3, &r(12, 1)), r(1, 3));
        assert_eq!(padic_abs::<BigInt>(2, &r(3, 8)), r(8, 1));
        assert_eq!(padic_abs::<BigInt>(2, &r(-5, 1)), r(1, 1));
        assert_eq!(padic_abs::<BigInt>(2, &r(0, 1)), r(0, 1));
    }

    #[test]
    fn descriptor_json() {
        let d: TractDescriptor = serde_json::from_str(r#"{"kind":"gf","p":5}"#).unwrap();
        assert_eq!(d, TractDescriptor::Gf { p: 5 });
        assert_eq!(
            serde_json::to_string(&TractDescriptor::Krasner).unwrap(),
            r#"{"kind":"krasner"}"#
        );
    }
}
