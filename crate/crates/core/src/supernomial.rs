//! Schilling-Warnaar q-supernomials, the modified form `T~(L, a)`, fusion
//! characters and central string functions for sl2.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::exactpoly::{q_binomial, reciprocal_shift, CharPoly, QPoly, Rational};
use crate::{limits, Error, Result};

/// The vector `L = (L_1, ..., L_m)` of fusion multiplicities.
///
/// `L_i` counts the factors of dimension `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissionVector {
    entries: Vec<i64>,
}

impl AdmissionVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid(
                "admission vector must have at least one entry",
            ));
        }
        if entries.iter().any(|x| *x < 0) {
            return Err(Error::invalid(
                "admission vector entries must be non-negative",
            ));
        }
        Ok(AdmissionVector { entries })
    }

    /// `(0, ..., 0, count)` with `m` entries.
    pub fn one_component(m: usize, count: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("one-component shape needs m >= 1"));
        }
        let mut v = vec![0; m];
        v[m - 1] = count;
        AdmissionVector::new(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    /// `L_i` for 1-based `i`; zero outside `1..=m`.
    pub fn entry(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        self.entries.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nontrivial fusion factors, `sum L_i`.
    pub fn l1(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Highest z-weight, `sum i * L_i`.
    pub fn lm(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, x)| (i as i64 + 1) * x)
            .sum()
    }

    /// `prod (i + 1)^L_i`, the total dimension.
    pub fn dimension(&self) -> BigInt {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, x)| Pow::pow(BigInt::from(i + 2), *x as u64))
            .product()
    }

    /// `L^t A^{-1} L` with `A^{-1}_{ij} = min(i, j)`.
    pub fn quadratic_form(&self) -> i64 {
        let mut total = 0;
        for (i, x) in self.entries.iter().enumerate() {
            for (j, y) in self.entries.iter().enumerate() {
                total += (i.min(j) as i64 + 1) * x * y;
            }
        }
        total
    }
}

impl fmt::Display for AdmissionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Memo table for q-binomials inside one fermionic sum.
#[derive(Default)]
pub(crate) struct QBinomials {
    table: BTreeMap<(i64, i64), QPoly>,
}

impl QBinomials {
    pub(crate) fn get(&mut self, total: i64, k: i64) -> &QPoly {
        self.table
            .entry((total, k))
            .or_insert_with(|| q_binomial(total, k).expect("upper index is non-negative"))
    }

    /// `prod_l [L_l + j_{l+1} choose j_l]_q`
    pub(crate) fn product(&mut self, l: &[i64], j: &[i64]) -> QPoly {
        let m = l.len();
        let mut out = QPoly::one();
        for i in 0..m {
            let next = if i + 1 < m { j[i + 1] } else { 0 };
            let factor = self.get(l[i] + next, j[i]);
            if factor.is_zero() {
                return QPoly::zero();
            }
            if !(factor.len() == 1 && factor.coeff(0).is_one()) {
                out = &out * factor;
            }
        }
        out
    }
}

/// Visits every `j` with `j_i <= L_i + j_{i+1}` (and `j_{m+1} = 0`), optionally
/// restricted to `sum j_i = target`. Returns the number of visits.
pub(crate) fn for_each_compatible(
    l: &[i64],
    target: Option<i64>,
    mut visit: impl FnMut(&[i64]),
) -> Result<u64> {
    let m = l.len();
    if let Some(t) = target {
        if t < 0 {
            return Ok(0);
        }
    }
    // reach[i]: largest possible j_0 + ... + j_i when j_{i+1} = 0.
    let mut reach = vec![0i64; m];
    let mut acc = 0;
    for i in 0..m {
        acc += (i as i64 + 1) * l[i];
        reach[i] = acc;
    }
    let cap = limits::term_cap();
    let mut j = vec![0i64; m];
    let mut count = 0u64;
    let mut overflow = false;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        upper_next: i64,
        remaining: Option<i64>,
        l: &[i64],
        reach: &[i64],
        j: &mut [i64],
        count: &mut u64,
        cap: u64,
        overflow: &mut bool,
        visit: &mut dyn FnMut(&[i64]),
    ) {
        let hi = l[i] + upper_next;
        for v in 0..=hi {
            if *overflow {
                return;
            }
            let rest = match remaining {
                Some(r) => {
                    if v > r {
                        break;
                    }
                    let rest = r - v;
                    if i == 0 {
                        if rest != 0 {
                            continue;
                        }
                    } else if rest > i as i64 * v + reach[i - 1] {
                        continue;
                    }
                    Some(rest)
                }
                None => None,
            };
            j[i] = v;
            if i == 0 {
                *count += 1;
                if *count > cap {
                    *overflow = true;
                    return;
                }
                visit(j);
            } else {
                rec(i - 1, v, rest, l, reach, j, count, cap, overflow, visit);
            }
        }
    }

    rec(
        m - 1,
        0,
        target,
        l,
        &reach,
        &mut j,
        &mut count,
        cap,
        &mut overflow,
        &mut visit,
    );
    if overflow {
        return Err(Error::ResourceCap {
            what: "compatible compositions",
            cap,
        });
    }
    Ok(count)
}

/// Exponent of `q` in a term of `T~(L, a)`: `sum j_i (j_i + L_1 + ... + L_{i-1})`.
pub(crate) fn ttilde_exponent(l: &[i64], j: &[i64]) -> i64 {
    let mut prefix = 0;
    let mut e = 0;
    for (li, ji) in l.iter().zip(j) {
        e += ji * (ji + prefix);
        prefix += li;
    }
    e
}

/// The q-supernomial `[L choose a]_q` with `a = a2 / 2`.
///
/// Zero when `a2 + l_m` is odd or when no composition exists.
pub fn supernomial_coeff(l: &AdmissionVector, a2: i64) -> Result<QPoly> {
    let lm = l.lm();
    if (a2 + lm).rem_euclid(2) != 0 {
        return Ok(QPoly::zero());
    }
    let target = (a2 + lm) / 2;
    let ls = l.entries();
    let m = ls.len();
    // tails[i] = L_i + ... + L_m (0-based).
    let mut tails = vec![0i64; m + 1];
    for i in (0..m).rev() {
        tails[i] = tails[i + 1] + ls[i];
    }
    let mut cache = QBinomials::default();
    let mut out = QPoly::zero();
    for_each_compatible(ls, Some(target), |j| {
        let e: i64 = (1..m).map(|i| j[i - 1] * (tails[i] - j[i])).sum();
        out += &cache.product(ls, j).shift(e);
    })?;
    Ok(out)
}

/// The modified supernomial `T~(L, a)`, the string function at z-weight `a`.
pub fn ttilde(l: &AdmissionVector, a: i64) -> Result<QPoly> {
    let ls = l.entries();
    let mut cache = QBinomials::default();
    let mut out = QPoly::zero();
    for_each_compatible(ls, Some(a), |j| {
        out += &cache.product(ls, j).shift(ttilde_exponent(ls, j));
    })?;
    Ok(out)
}

/// All strings `T~(L, a)` for `a = 0..=l_m` from a single enumeration.
pub fn ttilde_all(l: &AdmissionVector) -> Result<Vec<QPoly>> {
    let ls = l.entries();
    let mut cache = QBinomials::default();
    let mut out = vec![QPoly::zero(); l.lm() as usize + 1];
    for_each_compatible(ls, None, |j| {
        let a: i64 = j.iter().sum();
        out[a as usize] += &cache.product(ls, j).shift(ttilde_exponent(ls, j));
    })?;
    Ok(out)
}

/// `T~(L, a)` computed from the supernomial side: `q^{l1 a} [L choose a - l_m/2]_{1/q}`.
pub fn ttilde_via_supernomial(l: &AdmissionVector, a: i64) -> Result<QPoly> {
    let sw = supernomial_coeff(l, 2 * a - l.lm())?;
    Ok(reciprocal_shift(&sw, l.l1() * a))
}

/// Generating function `sum_a z^a [L choose a]_q` over half-integer `a`,
/// stored with doubled z-exponents.
pub fn supernomial_char(l: &AdmissionVector) -> Result<CharPoly> {
    let lm = l.lm();
    let mut out = CharPoly::zero();
    for a2 in (-lm..=lm).step_by(2) {
        out.add_column(a2, &supernomial_coeff(l, a2)?);
    }
    Ok(out)
}

/// Graded character `sum_a z^a T~(L, a)(q)` of the fusion module.
pub fn fusion_char(l: &AdmissionVector) -> Result<CharPoly> {
    let mut out = CharPoly::zero();
    for (a, column) in ttilde_all(l)?.iter().enumerate() {
        out.add_column(2 * a as i64, column);
    }
    Ok(out)
}

/// `sum_a T~(L, a)(q)`, the character at `z = 1`.
pub fn basic_specialization(l: &AdmissionVector) -> Result<QPoly> {
    let ls = l.entries();
    let mut cache = QBinomials::default();
    let mut out = QPoly::zero();
    for_each_compatible(ls, None, |j| {
        out += &cache.product(ls, j).shift(ttilde_exponent(ls, j));
    })?;
    Ok(out)
}

/// One string of a central string report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralEntry {
    pub a: i64,
    /// `T~(L, a)` itself.
    pub raw: QPoly,
    /// `raw` shifted down so its lowest exponent is zero.
    pub normalized: QPoly,
    /// The exponent removed to form `normalized`.
    pub shift: i64,
    /// `q^{-l1 l_m / 2} raw`, only for even `l_m`.
    pub literal: Option<QPoly>,
}

impl CentralEntry {
    /// Whether the literal `q^{-l1 l_m / 2}` normalization has no negative exponents.
    pub fn literal_is_polynomial(&self) -> Option<bool> {
        self.literal
            .as_ref()
            .map(|p| p.min_degree().is_none_or(|d| d >= 0))
    }

    pub fn within_bound(&self, bound: &Rational) -> bool {
        self.normalized
            .max_degree()
            .is_none_or(|d| Rational::from_integer(d.into()) <= *bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralString {
    /// `floor(l_m / 2)`
    pub s: i64,
    /// Set when `l_m` is odd; then both neighbouring strings are reported.
    pub odd: bool,
    /// `L^t A^{-1} L / 4`
    pub degree_bound: Rational,
    pub strings: Vec<CentralEntry>,
}

/// Central string function(s) of the fusion module with their normalizations.
pub fn central_string(l: &AdmissionVector) -> Result<CentralString> {
    let lm = l.lm();
    let s = lm.div_euclid(2);
    let odd = lm % 2 != 0;
    let degree_bound = Rational::new(l.quadratic_form().into(), 4.into());
    let weights: Vec<i64> = if odd { vec![s, s + 1] } else { vec![s] };
    let mut strings = Vec::new();
    for a in weights {
        let raw = ttilde(l, a)?;
        let shift = raw.min_degree().unwrap_or(0);
        let normalized = raw.shift(-shift);
        let literal = (!odd).then(|| raw.shift(-(l.l1() * lm / 2)));
        strings.push(CentralEntry {
            a,
            raw,
            normalized,
            shift,
            literal,
        });
    }
    Ok(CentralString {
        s,
        odd,
        degree_bound,
        strings,
    })
}

/// Coefficients of `prod_j (1 + x + ... + x^j)^{L_j}`, indexed by power of `x`.
pub fn tensor_expansion(l: &AdmissionVector) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for (i, count) in l.entries().iter().enumerate() {
        for _ in 0..*count {
            let width = i + 2;
            let mut next = vec![BigInt::from(0); poly.len() + width - 1];
            for (e, c) in poly.iter().enumerate() {
                for k in 0..width {
                    next[e + k] += c;
                }
            }
            poly = next;
        }
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn av(v: &[i64]) -> AdmissionVector {
        AdmissionVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn m_equals_one_reduces_to_q_binomial() {
        for n in 0..6 {
            let l = av(&[n]);
            for a in 0..=n {
                let sw = supernomial_coeff(&l, 2 * a - n).unwrap();
                assert_eq!(sw, q_binomial(n, a).unwrap());
                let t = ttilde(&l, a).unwrap();
                assert_eq!(t, q_binomial(n, a).unwrap().shift(a * a));
            }
        }
    }

    #[test]
    fn figure_one_column_zero() {
        let l = av(&[0, 4]);
        let col = supernomial_coeff(&l, 0).unwrap();
        assert_eq!(col, QPoly::from_dense(0, &[1, 1, 2, 3, 4, 3, 3, 1, 1]));
        assert_eq!(supernomial_coeff(&l, 8).unwrap(), QPoly::one());
        assert!(supernomial_coeff(&l, 7).unwrap().is_zero());
    }

    #[test]
    fn central_string_of_zero_four() {
        let l = av(&[0, 4]);
        let t = ttilde(&l, 4).unwrap();
        let expect = QPoly::from_dense(0, &[1, 1, 3, 3, 4, 3, 2, 1, 1]);
        assert_eq!(t, expect.shift(8));
        let c = central_string(&l).unwrap();
        assert_eq!(c.s, 4);
        assert_eq!(c.strings[0].normalized, expect);
        assert_eq!(c.degree_bound, Rational::from_integer(8.into()));
        assert_eq!(c.strings[0].literal_is_polynomial(), Some(false));
        assert!(ttilde(&l, 9).unwrap().is_zero());
    }

    #[test]
    fn boundary_case_two() {
        let c = central_string(&av(&[2])).unwrap();
        assert_eq!(c.s, 1);
        assert_eq!(c.strings[0].raw, QPoly::from_dense(1, &[1, 1]));
        assert_eq!(c.strings[0].literal, Some(QPoly::from_dense(-1, &[1, 1])));
        assert_eq!(c.strings[0].normalized, QPoly::from_dense(0, &[1, 1]));
    }

    #[test]
    fn odd_weight_reports_both_strings() {
        let c = central_string(&av(&[1, 1])).unwrap();
        assert!(c.odd);
        assert_eq!(
            c.strings.iter().map(|e| e.a).collect::<Vec<_>>(),
            vec![1, 2]
        );
        assert!(c.strings.iter().all(|e| e.literal.is_none()));
    }

    #[test]
    fn small_fusion_characters() {
        let f = fusion_char(&av(&[1])).unwrap();
        assert_eq!(f, CharPoly::from_terms([((0, 0), 1), ((2, 1), 1)]));
        assert_eq!(
            basic_specialization(&av(&[1])).unwrap(),
            QPoly::from_dense(0, &[1, 1])
        );
        let f = fusion_char(&av(&[0, 4])).unwrap();
        assert_eq!(f.total_mass(), BigInt::from(81));
        assert_eq!(f.len(), 49);
    }
}
