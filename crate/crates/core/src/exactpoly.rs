//! Exact Laurent polynomials in `q` and in `(z, q)`, and q-binomial builders.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

/// Univariate Laurent polynomial in `q` with big-integer coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map
/// and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(0, 1)
    }

    /// `coeff * q^exp`
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = QPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Sums the given terms; repeated exponents are merged.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = QPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficient list starting at `q^offset`.
    pub fn from_dense<C: Into<BigInt> + Clone>(offset: i64, coeffs: &[C]) -> Self {
        QPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (offset + i as i64, c.clone().into())),
        )
    }

    pub(crate) fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// `q^k * self`
    pub fn shift(&self, k: i64) -> QPoly {
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> QPoly {
        if factor.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// Polynomial with each exponent mapped through `f`.
    pub fn map_exponents(&self, f: impl Fn(i64) -> i64) -> QPoly {
        QPoly::from_terms(self.coeffs.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    fn dense(&self) -> Option<(i64, Vec<Option<&BigInt>>)> {
        let lo = self.min_degree()?;
        let hi = self.max_degree()?;
        let mut v = vec![None; (hi - lo + 1) as usize];
        for (e, c) in &self.coeffs {
            v[(e - lo) as usize] = Some(c);
        }
        Some((lo, v))
    }

    fn mul_impl(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let span = |p: &QPoly| (p.max_degree().unwrap() - p.min_degree().unwrap() + 1) as usize;
        let dense_enough = span(self) <= 4 * self.len() + 8 && span(other) <= 4 * other.len() + 8;
        if !dense_enough {
            let mut out = QPoly::zero();
            for (e1, c1) in &self.coeffs {
                for (e2, c2) in &other.coeffs {
                    out.add_term(e1 + e2, c1 * c2);
                }
            }
            return out;
        }
        let (lo1, a) = self.dense().unwrap();
        let (lo2, b) = other.dense().unwrap();
        let bits = |p: &QPoly| p.coeffs.values().map(|c| c.bits()).max().unwrap_or(0);
        let len_bits = 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64;
        let mut out = QPoly::zero();
        if bits(self) + bits(other) + len_bits < 126 {
            // Every partial sum fits in an i128.
            let narrow = |v: &[Option<&BigInt>]| -> Vec<i128> {
                v.iter()
                    .map(|c| c.map_or(0, |c| c.to_i128().unwrap()))
                    .collect()
            };
            let (a, b) = (narrow(&a), narrow(&b));
            let mut acc = vec![0i128; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                if *x == 0 {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    acc[i + j] += x * y;
                }
            }
            for (k, c) in acc.into_iter().enumerate() {
                if c != 0 {
                    out.coeffs.insert(lo1 + lo2 + k as i64, BigInt::from(c));
                }
            }
        } else {
            let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                let Some(x) = x else { continue };
                for (j, y) in b.iter().enumerate() {
                    if let Some(y) = y {
                        acc[i + j] += *x * *y;
                    }
                }
            }
            for (k, c) in acc.into_iter().enumerate() {
                if !c.is_zero() {
                    out.coeffs.insert(lo1 + lo2 + k as i64, c);
                }
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        self.mul_impl(rhs)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(QPoly, Add add, Sub sub, Mul mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

/// Laurent polynomial in `(z, q)` with the z-exponent stored doubled.
///
/// A key `(z2, d)` stands for `z^(z2/2) q^d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl CharPoly {
    pub fn zero() -> Self {
        CharPoly::default()
    }

    pub fn one() -> Self {
        CharPoly::monomial(0, 0, 1)
    }

    pub fn monomial(z2: i64, d: i64, coeff: impl Into<BigInt>) -> Self {
        let mut c = CharPoly::zero();
        c.add_term(z2, d, coeff.into());
        c
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut p = CharPoly::zero();
        for ((z2, d), c) in terms {
            p.add_term(z2, d, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, z2: i64, d: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry((z2, d)) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `z^(z2/2) * column(q)`.
    pub(crate) fn add_column(&mut self, z2: i64, column: &QPoly) {
        for (d, c) in column.terms() {
            self.add_term(z2, d, c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, z2: i64, d: i64) -> BigInt {
        self.coeffs.get(&(z2, d)).cloned().unwrap_or_default()
    }

    /// Terms ordered lexicographically by `(z2, d)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn total_mass(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Distinct doubled z-exponents in ascending order.
    pub fn z2_values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.coeffs.keys().map(|k| k.0).collect();
        v.dedup();
        v
    }

    /// The q-polynomial multiplying `z^(z2/2)`.
    pub fn column(&self, z2: i64) -> QPoly {
        QPoly::from_terms(
            self.coeffs
                .range((z2, i64::MIN)..=(z2, i64::MAX))
                .map(|((_, d), c)| (*d, c.clone())),
        )
    }

    pub fn min_q_degree(&self) -> Option<i64> {
        self.coeffs.keys().map(|k| k.1).min()
    }

    /// Polynomial with every monomial `(z2, d)` sent to `f(z2, d)`.
    pub fn map_monomials(&self, f: impl Fn(i64, i64) -> (i64, i64)) -> CharPoly {
        CharPoly::from_terms(
            self.coeffs
                .iter()
                .map(|((z2, d), c)| (f(*z2, *d), c.clone())),
        )
    }

    /// Evaluation at `z = 1`.
    pub fn at_z_one(&self) -> QPoly {
        QPoly::from_terms(self.coeffs.iter().map(|((_, d), c)| (*d, c.clone())))
    }

    /// Evaluation at `q = 1`; the result has only `d = 0` keys.
    pub fn at_q_one(&self) -> CharPoly {
        self.map_monomials(|z2, _| (z2, 0))
    }

    /// Shift so the z-support is symmetric about zero.
    ///
    /// Returns `None` when the doubled extremes have odd sum, which never
    /// happens for a genuine sl2 character.
    pub fn centered(&self) -> Option<CharPoly> {
        let lo = self.coeffs.keys().map(|k| k.0).min()?;
        let hi = self.coeffs.keys().map(|k| k.0).max()?;
        if (lo + hi) % 2 != 0 {
            return None;
        }
        let s = (lo + hi) / 2;
        Some(self.map_monomials(|z2, d| (z2 - s, d)))
    }
}

impl Add<&CharPoly> for &CharPoly {
    type Output = CharPoly;
    fn add(self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CharPoly> for CharPoly {
    fn add_assign(&mut self, rhs: &CharPoly) {
        for ((z2, d), c) in &rhs.coeffs {
            self.add_term(*z2, *d, c.clone());
        }
    }
}

impl Neg for &CharPoly {
    type Output = CharPoly;
    fn neg(self) -> CharPoly {
        CharPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Sub<&CharPoly> for &CharPoly {
    type Output = CharPoly;
    fn sub(self, rhs: &CharPoly) -> CharPoly {
        self + &(-rhs)
    }
}

impl Mul<&CharPoly> for &CharPoly {
    type Output = CharPoly;
    fn mul(self, rhs: &CharPoly) -> CharPoly {
        let mut out = CharPoly::zero();
        for ((z1, d1), c1) in &self.coeffs {
            for ((z2, d2), c2) in &rhs.coeffs {
                out.add_term(z1 + z2, d1 + d2, c1 * c2);
            }
        }
        out
    }
}

forward_owned!(CharPoly, Add add, Sub sub, Mul mul);

impl Neg for CharPoly {
    type Output = CharPoly;
    fn neg(self) -> CharPoly {
        -&self
    }
}

/// Laurent polynomial in `q` with rational coefficients.
///
/// Used where normalized generating functions are summed, such as mixture
/// reconstructions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly::default()
    }

    pub fn from_qpoly(p: &QPoly) -> Self {
        RatPoly {
            coeffs: p
                .terms()
                .map(|(e, c)| (e, Rational::from_integer(c.clone())))
                .collect(),
        }
    }

    /// `p / denom`
    pub fn from_ratio(p: &QPoly, denom: &BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::invalid("division of a polynomial by zero"));
        }
        Ok(RatPoly {
            coeffs: p
                .terms()
                .map(|(e, c)| (e, Rational::new(c.clone(), denom.clone())))
                .collect(),
        })
    }

    pub(crate) fn add_term(&mut self, exp: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn eval_one(&self) -> Rational {
        self.coeffs
            .values()
            .fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn scale(&self, factor: &Rational) -> RatPoly {
        let mut out = RatPoly::zero();
        for (e, c) in &self.coeffs {
            out.add_term(*e, c * factor);
        }
        out
    }

    pub fn shift(&self, k: i64) -> RatPoly {
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        let mut out = RatPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Exponents whose coefficients differ, with both values.
    pub fn differences(&self, other: &RatPoly) -> Vec<(i64, Rational, Rational)> {
        let mut keys: Vec<i64> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|e| {
                let (a, b) = (self.coeff(e), other.coeff(e));
                (a != b).then_some((e, a, b))
            })
            .collect()
    }
}

impl AddAssign<&RatPoly> for RatPoly {
    fn add_assign(&mut self, rhs: &RatPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

/// Gaussian binomial coefficient `[total choose k]_q`.
///
/// Zero when `k < 0` or `k > total`.
pub fn q_binomial(total: i64, k: i64) -> Result<QPoly> {
    if total < 0 {
        return Err(Error::invalid("q_binomial: negative upper index"));
    }
    if k < 0 || k > total {
        return Ok(QPoly::zero());
    }
    let k = k.min(total - k);
    let rest = (total - k) as usize;
    // After step i the vector holds [rest + i choose i]_q: multiply by
    // (1 - q^(rest+i)) and divide exactly by (1 - q^i).
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..=k as usize {
        let up = rest + i;
        let mut next = vec![BigInt::zero(); c.len() + up];
        for (e, v) in c.iter().enumerate() {
            next[e] += v;
            next[e + up] -= v;
        }
        // r_e = p_e + r_{e-i}
        for e in i..next.len() {
            let prev = next[e - i].clone();
            next[e] += prev;
        }
        let deg = i * rest;
        next.truncate(deg + 1);
        c = next;
    }
    Ok(QPoly::from_dense(0, &c))
}

/// q-multinomial `[total; parts]_q` as an iterated product of q-binomials.
pub fn q_multinomial(total: i64, parts: &[i64]) -> Result<QPoly> {
    if parts.iter().any(|p| *p < 0) {
        return Err(Error::invalid("q_multinomial: negative part"));
    }
    if parts.iter().sum::<i64>() != total {
        return Err(Error::invalid(
            "q_multinomial: parts do not sum to the total",
        ));
    }
    let mut remaining = total;
    let mut out = QPoly::one();
    for p in parts {
        out = &out * &q_binomial(remaining, *p)?;
        remaining -= p;
    }
    Ok(out)
}

/// `q^s * p(1/q)`
pub fn reciprocal_shift(p: &QPoly, s: i64) -> QPoly {
    p.map_exponents(|e| s - e)
}

/// Result of [`specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    /// `z = 1` only.
    Q(QPoly),
    /// `q = 1` only; a Laurent polynomial in `z` with doubled exponents.
    Z(CharPoly),
    /// Both set to one.
    Value(BigInt),
    /// Neither: the character itself.
    Unchanged(CharPoly),
}

pub fn specialize(c: &CharPoly, at_z_one: bool, at_q_one: bool) -> Specialized {
    match (at_z_one, at_q_one) {
        (true, true) => Specialized::Value(c.total_mass()),
        (true, false) => Specialized::Q(c.at_z_one()),
        (false, true) => Specialized::Z(c.at_q_one()),
        (false, false) => Specialized::Unchanged(c.clone()),
    }
}
