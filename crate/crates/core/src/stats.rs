//! Polynomials read as probability distributions, the closed-form moment
//! formulas for fusion characters, and normal-approximation diagnostics.
//!
//! Moments are exact rationals throughout. Only the Kolmogorov distance and the
//! local deviation in [`clt_scan`] and [`lclt_scan`] go through `f64`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::affinechar::{demazure_char, fusion_transform, AffineWeight, Family, WeylWord};
use crate::exactpoly::{q_multinomial, QPoly, RatPoly, Rational};
use crate::supernomial::{
    basic_specialization, for_each_compatible, fusion_char, ttilde, ttilde_exponent,
    AdmissionVector, QBinomials,
};
use crate::{limits, Error, Result};

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact mean and variance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Moments {
    pub mean: Rational,
    pub variance: Rational,
}

/// A finite distribution on the integers with rational masses.
///
/// Stored as integer weights over a common total, so `pmf(k) = weight(k) / total`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteDist {
    weights: BTreeMap<i64, BigInt>,
    total: BigInt,
}

impl DiscreteDist {
    /// Builds a distribution from non-negative integer weights.
    pub fn from_weights(weights: BTreeMap<i64, BigInt>) -> Result<Self> {
        if weights.values().any(|w| w.is_negative()) {
            return Err(Error::invalid("distribution weights must be non-negative"));
        }
        let weights: BTreeMap<i64, BigInt> =
            weights.into_iter().filter(|(_, w)| !w.is_zero()).collect();
        let total: BigInt = weights.values().sum();
        if total.is_zero() {
            return Err(Error::invalid("distribution has zero total mass"));
        }
        Ok(DiscreteDist { weights, total })
    }

    pub fn prob(&self, k: i64) -> Rational {
        match self.weights.get(&k) {
            Some(w) => Rational::new(w.clone(), self.total.clone()),
            None => Rational::zero(),
        }
    }

    /// `(k, P(X = k))` over the support in increasing order.
    pub fn pmf(&self) -> impl Iterator<Item = (i64, Rational)> + '_ {
        self.weights
            .iter()
            .map(|(k, w)| (*k, Rational::new(w.clone(), self.total.clone())))
    }

    pub fn weights(&self) -> &BTreeMap<i64, BigInt> {
        &self.weights
    }

    pub fn total(&self) -> &BigInt {
        &self.total
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    pub fn min(&self) -> i64 {
        *self.weights.keys().next().expect("support is non-empty")
    }

    pub fn max(&self) -> i64 {
        *self
            .weights
            .keys()
            .next_back()
            .expect("support is non-empty")
    }

    pub fn moments(&self) -> Moments {
        let mut s1 = BigInt::zero();
        let mut s2 = BigInt::zero();
        for (k, w) in &self.weights {
            let k = BigInt::from(*k);
            let kw = &k * w;
            s2 += &k * &kw;
            s1 += kw;
        }
        let mean = Rational::new(s1.clone(), self.total.clone());
        let variance = Rational::new(&s2 * &self.total - &s1 * &s1, &self.total * &self.total);
        Moments { mean, variance }
    }

    /// Kolmogorov distance between the standardized CDF and the standard
    /// normal CDF, standardized by the distribution's own mean and variance.
    /// `None` for a point mass.
    pub fn kolmogorov_distance(&self) -> Option<f64> {
        let Moments { mean, variance } = self.moments();
        if variance.is_zero() {
            return None;
        }
        let mu = to_f64(&mean);
        let sigma = libm::sqrt(to_f64(&variance));
        let mut below = BigInt::zero();
        let mut sup: f64 = 0.0;
        for (k, w) in &self.weights {
            let phi = normal_cdf((*k as f64 - mu) / sigma);
            let left = Rational::new_raw(below.clone(), self.total.clone());
            below += w;
            let right = Rational::new_raw(below.clone(), self.total.clone());
            sup = sup
                .max(libm::fabs(to_f64(&left) - phi))
                .max(libm::fabs(to_f64(&right) - phi));
        }
        Some(sup)
    }

    /// `sup_k |sqrt(2 pi) sigma P(X = k) - exp(-(k - mu)^2 / (2 sigma^2))|` over
    /// every integer between the extreme support points. `None` for a point mass.
    pub fn local_deviation(&self) -> Option<f64> {
        let Moments { mean, variance } = self.moments();
        if variance.is_zero() {
            return None;
        }
        let mu = to_f64(&mean);
        let var = to_f64(&variance);
        let scale = libm::sqrt(2.0 * core::f64::consts::PI * var);
        let mut sup: f64 = 0.0;
        for k in self.min()..=self.max() {
            let p = match self.weights.get(&k) {
                Some(w) => to_f64(&Rational::new_raw(w.clone(), self.total.clone())),
                None => 0.0,
            };
            let d = k as f64 - mu;
            sup = sup.max(libm::fabs(scale * p - libm::exp(-d * d / (2.0 * var))));
        }
        Some(sup)
    }
}

/// Standard normal CDF through `erfc`, accurate to double precision in both tails.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / core::f64::consts::SQRT_2)
}

/// The normalized coefficient distribution of `p`.
pub fn dist_from_poly(p: &QPoly) -> Result<DiscreteDist> {
    if !p.is_nonnegative() {
        return Err(Error::invalid("polynomial has a negative coefficient"));
    }
    DiscreteDist::from_weights(p.terms().map(|(e, c)| (e, c.clone())).collect())
}

pub fn moments(d: &DiscreteDist) -> Moments {
    d.moments()
}

/// Occupancy counts of one configuration of random words: `counts[k-1][x]` is
/// how many of the `L_k` words of length `k` show letter `x` in `0..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccupancyCfg {
    counts: Vec<Vec<i64>>,
}

impl OccupancyCfg {
    pub fn new(counts: Vec<Vec<i64>>) -> Result<Self> {
        for (k, row) in counts.iter().enumerate() {
            if row.len() != k + 2 {
                return Err(Error::invalid(format!(
                    "occupancy row {} needs {} entries",
                    k + 1,
                    k + 2
                )));
            }
            if row.iter().any(|c| *c < 0) {
                return Err(Error::invalid("occupancy counts must be non-negative"));
            }
        }
        Ok(OccupancyCfg { counts })
    }

    pub fn counts(&self) -> &[Vec<i64>] {
        &self.counts
    }

    /// The admission vector `L_k = sum_x B_x(k)` this configuration belongs to.
    pub fn admission(&self) -> Vec<i64> {
        self.counts.iter().map(|row| row.iter().sum()).collect()
    }

    /// `A_r(k) = B_r(k) + ... + B_k(k)`.
    pub fn tail(&self, r: usize, k: usize) -> i64 {
        self.counts[k - 1][r.min(k + 1)..].iter().sum()
    }

    /// `S_L = sum_k sum_x x B_x(k)`.
    pub fn s_value(&self) -> i64 {
        self.counts
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(x, c)| x as i64 * c)
                    .sum::<i64>()
            })
            .sum()
    }

    /// `J_i = sum_{k >= i} A_{k-i+1}(k)`.
    pub fn j_vector(&self) -> Vec<i64> {
        let m = self.counts.len();
        (1..=m)
            .map(|i| (i..=m).map(|k| self.tail(k - i + 1, k)).sum())
            .collect()
    }
}

/// Joint law of the mixing vector `J`, optionally conditioned on `sum J_i = a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixState {
    pub l: AdmissionVector,
    pub restricted_to: Option<i64>,
    pub joint: BTreeMap<Vec<i64>, Rational>,
}

impl MixState {
    pub fn total_mass(&self) -> Rational {
        self.joint.values().fold(Rational::zero(), |acc, p| acc + p)
    }

    /// Every `j` with positive mass satisfies `j_i <= L_i + j_{i+1}`.
    pub fn is_compatible(&self) -> bool {
        let l = self.l.entries();
        self.joint.keys().all(|j| {
            (0..j.len()).all(|i| {
                let next = j.get(i + 1).copied().unwrap_or(0);
                j[i] >= 0 && j[i] <= l[i] + next
            })
        })
    }

    /// `E(J_i)` and `Cov(J_i, J_j)`, zero-based.
    pub fn j_moments(&self) -> (Vec<Rational>, Vec<Vec<Rational>>) {
        let m = self.l.m();
        let mut mean = vec![Rational::zero(); m];
        let mut second = vec![vec![Rational::zero(); m]; m];
        for (j, p) in &self.joint {
            for a in 0..m {
                mean[a] += p * int(j[a]);
                for b in 0..m {
                    second[a][b] += p * int(j[a] * j[b]);
                }
            }
        }
        let cov = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| &second[a][b] - &mean[a] * &mean[b])
                    .collect()
            })
            .collect();
        (mean, cov)
    }

    /// `sum_j P(J = j) q^{Q(L, j)} prod_i F_{L_i + j_{i+1}, j_i}(q)` with `F`
    /// the normalized q-binomial.
    pub fn reconstruct(&self) -> RatPoly {
        let ls = self.l.entries();
        let mut cache = QBinomials::default();
        let mut out = RatPoly::zero();
        for (j, p) in &self.joint {
            let product = cache.product(ls, j);
            let norm = product.eval_one();
            let component = product.shift(ttilde_exponent(ls, j));
            out += &RatPoly::from_qpoly(&component).scale(&(p / Rational::from_integer(norm)));
        }
        out
    }
}

fn product_of_binomials(l: &[i64], j: &[i64]) -> BigInt {
    let m = l.len();
    (0..m).fold(BigInt::one(), |acc, i| {
        let next = if i + 1 < m { j[i + 1] } else { 0 };
        acc * binomial(BigInt::from(l[i] + next), BigInt::from(j[i]))
    })
}

fn direct_mixing(l: &AdmissionVector, target: Option<i64>) -> Result<BTreeMap<Vec<i64>, BigInt>> {
    let ls = l.entries();
    let mut out = BTreeMap::new();
    for_each_compatible(ls, target, |j| {
        out.insert(j.to_vec(), product_of_binomials(ls, j));
    })?;
    Ok(out)
}

/// Mixing law from the occupancy model: one uniform letter per word, letter
/// `x` of a length-`k` word adds one to `J_{k+1-x}, ..., J_k`.
fn occupancy_mixing(l: &AdmissionVector) -> Result<BTreeMap<Vec<i64>, BigInt>> {
    let m = l.m();
    let cap = limits::support_cap();
    let mut state: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    state.insert(vec![0; m], BigInt::one());
    for k in 1..=m {
        for _ in 0..l.entry(k) {
            let mut next: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
            for (j, w) in &state {
                for x in 0..=k {
                    let mut j2 = j.clone();
                    for slot in &mut j2[k - x..k] {
                        *slot += 1;
                    }
                    *next.entry(j2).or_insert_with(BigInt::zero) += w;
                }
            }
            if next.len() as u64 > cap {
                return Err(Error::ResourceCap {
                    what: "occupancy states",
                    cap,
                });
            }
            state = next;
        }
    }
    Ok(state)
}

fn normalize(weights: BTreeMap<Vec<i64>, BigInt>, total: &BigInt) -> BTreeMap<Vec<i64>, Rational> {
    weights
        .into_iter()
        .map(|(j, w)| (j, Rational::new(w, total.clone())))
        .collect()
}

/// `P(J = j) = prod_i binom(L_i + j_{i+1}, j_i) / prod_i (i+1)^{L_i}`, built
/// directly and as the image of the occupancy model; the two must agree.
pub fn mixing_distribution(l: &AdmissionVector) -> Result<MixState> {
    let direct = direct_mixing(l, None)?;
    let occupancy = occupancy_mixing(l)?;
    if direct != occupancy {
        return Err(Error::verification(format!(
            "mixing law of {l}: direct formula and occupancy image differ"
        )));
    }
    Ok(MixState {
        l: l.clone(),
        restricted_to: None,
        joint: normalize(direct, &l.dimension()),
    })
}

/// The mixing law conditioned on `sum J_i = a`.
pub fn conditional_mixing(l: &AdmissionVector, a: i64) -> Result<MixState> {
    if a < 0 || a > l.lm() {
        return Err(Error::invalid(format!(
            "condition a = {a} is outside [0, {}] for {l}",
            l.lm()
        )));
    }
    let weights = direct_mixing(l, Some(a))?;
    let total: BigInt = weights.values().sum();
    if total.is_zero() {
        return Err(Error::invalid(format!(
            "no compatible vector of {l} sums to {a}"
        )));
    }
    Ok(MixState {
        l: l.clone(),
        restricted_to: Some(a),
        joint: normalize(weights, &total),
    })
}

/// Outcome of an exact mixture reconstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixtureReport {
    pub pass: bool,
    pub expected: RatPoly,
    pub reconstructed: RatPoly,
    /// `(exponent, expected, reconstructed)` where they differ.
    pub differences: Vec<(i64, Rational, Rational)>,
}

fn report(expected: RatPoly, reconstructed: RatPoly) -> MixtureReport {
    let differences = expected.differences(&reconstructed);
    MixtureReport {
        pass: differences.is_empty(),
        expected,
        reconstructed,
        differences,
    }
}

/// Checks that the mixture reconstructs `basic_specialization(L) / dim`.
pub fn mixture_identity(l: &AdmissionVector) -> Result<MixtureReport> {
    let state = mixing_distribution(l)?;
    let expected = RatPoly::from_ratio(&basic_specialization(l)?, &l.dimension())?;
    Ok(report(expected, state.reconstruct()))
}

/// Checks that the conditioned mixture reconstructs `T~(L, a) / T~(L, a)(1)`.
pub fn restricted_mixture_identity(l: &AdmissionVector, a: i64) -> Result<MixtureReport> {
    let state = conditional_mixing(l, a)?;
    let string = ttilde(l, a)?;
    let expected = RatPoly::from_ratio(&string, &string.eval_one())?;
    Ok(report(expected, state.reconstruct()))
}

fn uniform_counts(k: i64) -> QPoly {
    QPoly::from_terms((0..=k).map(|e| (e, BigInt::one())))
}

/// Law of `S_L`, a sum of independent uniforms: `L_i` copies on `{0, ..., i}`.
pub fn s_l_distribution(l: &AdmissionVector) -> Result<DiscreteDist> {
    let mut counts = QPoly::one();
    for (i, li) in l.entries().iter().enumerate() {
        let u = uniform_counts(i as i64 + 1);
        for _ in 0..*li {
            counts = &counts * &u;
        }
    }
    let d = dist_from_poly(&counts)?;
    let got = d.moments();
    let cf = ClosedForms::new(l);
    if got.mean != cf.mean_s || got.variance != cf.var_s {
        return Err(Error::verification(format!(
            "S_L moments of {l}: exact ({}, {}) against ({}, {})",
            got.mean, got.variance, cf.mean_s, cf.var_s
        )));
    }
    Ok(d)
}

/// Values of the one-component formulas for `L = (0, ..., 0, N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneComponentForms {
    pub m: i64,
    pub count: i64,
    pub mean_t: Rational,
    /// Limit of `Var(T) / N^3`.
    pub var_limit: Rational,
    /// Limit of `(1/N) sum_i Var(J_i)`.
    pub sum_var_j_limit: Rational,
    pub normal_approx: NormalApprox,
}

/// Formulas obtained by treating the restricted occupancy vector as exactly
/// normal. Only their leading terms are expected to be exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalApprox {
    /// Mean of the central string statistic.
    pub central_mean_t: Rational,
    pub mean_g: Rational,
    pub var_g: Rational,
    pub var_m: Rational,
}

/// The two-component mean for `L_k = K`, `L_m = M`, all other entries zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoComponentForms {
    pub k: i64,
    pub k_count: i64,
    pub m: i64,
    pub m_count: i64,
    pub mean_t: Rational,
}

/// Closed-form moments of the mixing vector and of the degree statistic of
/// the basic specialization. Vectors are indexed from `i = 1` at position 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub mean_j: Vec<Rational>,
    pub var_j: Vec<Rational>,
    pub cov_j: Vec<Vec<Rational>>,
    pub mean_y: Rational,
    pub mean_q: Rational,
    pub mean_t: Rational,
    /// The same mean, from the single-sum expression.
    pub mean_unr: Rational,
    pub mean_s: Rational,
    pub var_s: Rational,
    pub one_component: Option<OneComponentForms>,
    pub two_component: Option<TwoComponentForms>,
}

impl ClosedForms {
    pub fn new(l: &AdmissionVector) -> Self {
        let m = l.m() as i64;
        let entry = |k: i64| int(l.entry(k as usize));
        // s_i = sum_{k>=i} L_k/(k+1), u_i = sum_{k>=i} L_k/(k+1)^2, t_i = sum_{k<i} L_k
        let mut s = vec![Rational::zero(); m as usize + 2];
        let mut u = vec![Rational::zero(); m as usize + 2];
        for i in (1..=m).rev() {
            s[i as usize] = &s[i as usize + 1] + entry(i) / int(i + 1);
            u[i as usize] = &u[i as usize + 1] + entry(i) / int((i + 1) * (i + 1));
        }
        let mut t = vec![Rational::zero(); m as usize + 2];
        for i in 2..=m + 1 {
            t[i as usize] = &t[i as usize - 1] + entry(i - 1);
        }

        let cov = |i: i64, j: i64| {
            let hi = i.max(j) as usize;
            int(i.min(j)) * &s[hi] - int(i * j) * &u[hi]
        };
        let mean_j: Vec<Rational> = (1..=m).map(|i| int(i) * &s[i as usize]).collect();
        let var_j: Vec<Rational> = (1..=m).map(|i| cov(i, i)).collect();
        let cov_j: Vec<Vec<Rational>> = (1..=m)
            .map(|i| (1..=m).map(|j| cov(i, j)).collect())
            .collect();

        let mut mean_y = Rational::zero();
        let mut mean_q = Rational::zero();
        let mut mean_unr = Rational::zero();
        let mut mean_s = Rational::zero();
        let mut var_s = Rational::zero();
        for i in 1..=m {
            let (si, ti, li) = (&s[i as usize], &t[i as usize], entry(i));
            let si2 = si * si;
            mean_y += frac(1, 2) * int(i) * &si2 - frac(i, 4 * (i + 1)) * &li;
            mean_q += int(i * i) * &si2 + int(i) * si * ti + frac(i * (i + 2), 6 * (i + 1)) * &li;
            mean_unr += (frac(i, 2) + int(i * i)) * &si2
                + int(i) * si * ti
                + frac(4 * i * (i + 2) - 6 * i, 24 * (i + 1)) * &li;
            mean_s += frac(i, 2) * &li;
            var_s += frac(i * (i + 2), 12) * &li;
        }
        let mean_t = &mean_y + &mean_q;

        let nonzero: Vec<(i64, i64)> = (1..=m)
            .map(|k| (k, l.entry(k as usize)))
            .filter(|(_, c)| *c != 0)
            .collect();
        let one_component = match nonzero.as_slice() {
            [(k, count)] if *k == m => Some(one_component_forms(m, *count)),
            _ => None,
        };
        let two_component = match nonzero.as_slice() {
            [(k, kc), (mm, mc)] => Some(two_component_forms(*k, *kc, *mm, *mc)),
            _ => None,
        };

        ClosedForms {
            mean_j,
            var_j,
            cov_j,
            mean_y,
            mean_q,
            mean_t,
            mean_unr,
            mean_s,
            var_s,
            one_component,
            two_component,
        }
    }
}

pub fn closed_forms(l: &AdmissionVector) -> ClosedForms {
    ClosedForms::new(l)
}

/// Limit of `Var(T)/N^3` for `L = (0, ..., 0, N)`.
pub fn one_component_var_limit(m: i64) -> Rational {
    frac(
        m * (m + 2) * (2 * m + 1) * (2 * m + 3),
        45 * (m + 1) * (m + 1),
    ) + frac(m * (m + 2), 36 * (m + 1) * (m + 1))
}

fn one_component_forms(m: i64, n: i64) -> OneComponentForms {
    let nn = int(n);
    let mean_t =
        frac(n * n * m * (4 * m + 5), 12 * (m + 1)) + frac(n * m * (2 * m + 1), 12 * (m + 1));
    let central_mean_t = frac(n * n * m * (4 * m + 5), 12 * (m + 1))
        + &nn
            * frac(
                m * (m * m * m + 19 * m * m - 14 * m - 6),
                15 * (m + 1) * (m + 2),
            )
        - &nn * frac(m - 1, 4 * (m + 1));
    let mean_g = &nn * frac((m - 1) * (m * m + 20 * m + 6), 15 * (m + 1) * (m + 2));
    let poly_g = 11 * m.pow(5) + 99 * m.pow(4) + 16482 * m.pow(3) - 2372 * m * m + 6696 * m + 2304;
    let var_g = &nn * &nn * frac((m - 1) * poly_g, 6300 * (m + 1).pow(2) * (m + 2).pow(2));
    let var_m = &nn
        * &nn
        * &nn
        * frac(
            m * (m - 1) * (m.pow(3) + 247 * m * m + 136 * m + 12),
            180 * (m + 1).pow(2) * (m + 2),
        );
    OneComponentForms {
        m,
        count: n,
        mean_t,
        var_limit: one_component_var_limit(m),
        sum_var_j_limit: frac(m * (m + 2), 6 * (m + 1)),
        normal_approx: NormalApprox {
            central_mean_t,
            mean_g,
            var_g,
            var_m,
        },
    }
}

fn two_component_forms(k: i64, kc: i64, m: i64, mc: i64) -> TwoComponentForms {
    let (bk, bm) = (int(kc), int(mc));
    let mean_t = frac(m * (4 * m + 5), 12 * (m + 1)) * &bm * &bm
        + frac(m * (2 * m + 1), 12 * (m + 1)) * &bm
        + frac(k * (4 * k + 5), 12 * (k + 1)) * &bk * &bk
        + frac(k * (2 * k + 1), 12 * (k + 1)) * &bk
        + frac(m, 2) * &bk * &bm
        + frac(k * (k + 2), 6 * (m + 1)) * &bk * &bm;
    TwoComponentForms {
        k,
        k_count: kc,
        m,
        m_count: mc,
        mean_t,
    }
}

/// Moments of the inversion count of a uniform random word of length `N`
/// over `m+1` letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisMoments {
    pub m: i64,
    pub n: i64,
    pub mean: Rational,
    pub variance: Rational,
    /// Moments of the exact distribution, when it is within the desk cap.
    pub exact: Option<Moments>,
}

/// Largest number of letter-count vectors summed for an exact inversion law.
pub const GALOIS_EXACT_MAX_COMPOSITIONS: u64 = 100_000;

fn composition_count(n: i64, m: i64) -> BigInt {
    binomial(BigInt::from(n + m), BigInt::from(m))
}

/// `sum_k [N; k_0, ..., k_m]_q` over all letter-count vectors `k`, as a
/// distribution (the total is `(m+1)^N`).
pub fn galois_distribution(m: i64, n: i64) -> Result<DiscreteDist> {
    if m < 1 || n < 0 {
        return Err(Error::invalid(
            "galois distribution needs m >= 1 and N >= 0",
        ));
    }
    let cap = limits::support_cap().min(GALOIS_EXACT_MAX_COMPOSITIONS);
    if composition_count(n, m) > BigInt::from(cap) {
        return Err(Error::ResourceCap {
            what: "letter-count vectors",
            cap,
        });
    }
    let mut out = QPoly::zero();
    let mut parts = vec![0i64; m as usize + 1];
    fn rec(i: usize, left: i64, parts: &mut [i64], n: i64, out: &mut QPoly) -> Result<()> {
        if i + 1 == parts.len() {
            parts[i] = left;
            *out += &q_multinomial(n, parts)?;
            return Ok(());
        }
        for v in 0..=left {
            parts[i] = v;
            rec(i + 1, left - v, parts, n, out)?;
        }
        Ok(())
    }
    rec(0, n, &mut parts, n, &mut out)?;
    dist_from_poly(&out)
}

pub fn galois_moments(m: i64, n: i64) -> Result<GaloisMoments> {
    if m < 1 || n < 0 {
        return Err(Error::invalid("galois moments need m >= 1 and N >= 0"));
    }
    let mean = frac(m, 4 * (m + 1)) * int(n * (n - 1));
    let variance =
        frac((m + 1) * (m + 1) - 1, 72 * (m + 1) * (m + 1)) * int(n * (n - 1) * (2 * n + 5));
    let exact = match galois_distribution(m, n) {
        Ok(d) => Some(d.moments()),
        Err(Error::ResourceCap { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(ex) = &exact {
        if ex.mean != mean || ex.variance != variance {
            return Err(Error::verification(format!(
                "inversion moments m={m} N={n}: exact ({}, {}) against ({mean}, {variance})",
                ex.mean, ex.variance
            )));
        }
    }
    Ok(GaloisMoments {
        m,
        n,
        mean,
        variance,
        exact,
    })
}

/// Mean degree of a Demazure character at `z = 1`, three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemazureExpectation {
    /// `q_shift - rotation * E(S_{L_w}) + E(T_{L_w})` from the closed forms.
    pub decomposition: Rational,
    /// Mean of the Demazure character computed by the operator recursion.
    pub exact: Rational,
    /// The explicit formula for `w = (s1 s0)^N`, when `w` has that shape.
    pub closed_form: Option<Rational>,
}

/// `E(X_w)` from the fusion description alone.
pub fn demazure_mean_by_decomposition(weight: AffineWeight, w: &WeylWord) -> Result<Rational> {
    if w.is_empty() {
        return Ok(Rational::zero());
    }
    let t = fusion_transform(w, weight)?;
    if t.effective.is_none() {
        return Ok(Rational::zero());
    }
    let cf = ClosedForms::new(&t.lw);
    Ok(int(t.q_shift) - int(t.rotation) * &cf.mean_s + cf.mean_t)
}

/// Closed form of `E(X_N)` for `w = (s1 s0)^N`, `N >= 1`, with `U = 2N-1` and `u = m+n`.
pub fn s1s0_closed_form(weight: AffineWeight, steps: i64) -> Rational {
    let AffineWeight { m, n } = weight;
    let big_u = 2 * steps - 1;
    let u = m + n;
    frac(
        2 * big_u * m * (m + 2) + big_u * (big_u - 1) * u * (u + 2),
        12 * (u + 1),
    ) + frac((big_u - 1) * u, 4)
        + frac(m, 2)
}

pub fn demazure_expectation(m: i64, n: i64, w: &WeylWord) -> Result<DemazureExpectation> {
    let weight = AffineWeight::new(m, n)?;
    if w.is_empty() {
        return Ok(DemazureExpectation {
            decomposition: Rational::zero(),
            exact: Rational::zero(),
            closed_form: Some(Rational::zero()),
        });
    }
    let decomposition = demazure_mean_by_decomposition(weight, w)?;
    let character = demazure_char(w, weight)?;
    let exact = dist_from_poly(&character.poly.at_z_one())?.moments().mean;
    let closed_form = match w.classify() {
        Some((Family::S1S0N, steps)) => Some(s1s0_closed_form(weight, steps)),
        _ => None,
    };
    if decomposition != exact {
        return Err(Error::verification(format!(
            "Demazure mean for {w} at ({m},{n}): decomposition {decomposition}, exact {exact}"
        )));
    }
    if let Some(cf) = &closed_form {
        if *cf != exact {
            return Err(Error::verification(format!(
                "Demazure mean for {w} at ({m},{n}): closed form {cf}, exact {exact}"
            )));
        }
    }
    Ok(DemazureExpectation {
        decomposition,
        exact,
        closed_form,
    })
}

/// `E(X_N) / d_N` for `w = (s1 s0)^N` with `d_N = N^2 m + N(N-1) n`, and the
/// limit `(u+2) / (3(u+1))`.
pub fn concentration_ratio(m: i64, n: i64, steps: i64) -> Result<(Rational, Rational)> {
    let weight = AffineWeight::new(m, n)?;
    if steps < 0 {
        return Err(Error::invalid("N must be non-negative"));
    }
    let top = steps * steps * m + steps * (steps - 1) * n;
    if top == 0 {
        return Err(Error::invalid("top degree d_N is zero"));
    }
    let w = WeylWord::family(Family::S1S0N, steps)?;
    let mean = demazure_mean_by_decomposition(weight, &w)?;
    let u = m + n;
    Ok((mean / int(top), frac(u + 2, 3 * (u + 1))))
}

/// Limit parameters for `L^(N) / N -> a`. Vectors are indexed from 1 at
/// position 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticParams {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    pub f: Vec<Rational>,
    pub v: Rational,
    pub sigma2: Rational,
    /// `c(i) = sum_{k >= i} (k+1-i)/(k+1) a_k`
    pub c_tail: Vec<Rational>,
    pub sigma_unrestricted: Vec<Vec<Rational>>,
    pub sigma_restricted: Vec<Vec<Rational>>,
    /// `1/4 f Sigma f^t + v` with the unrestricted covariance.
    pub limit_var_unrestricted: Rational,
    pub limit_var_restricted: Rational,
}

pub fn asymptotic_params(a: &[Rational]) -> Result<AsymptoticParams> {
    if a.is_empty() || a.iter().any(|x| x.is_negative()) || a.iter().all(|x| x.is_zero()) {
        return Err(Error::invalid(
            "limit vector must be non-negative and not zero",
        ));
    }
    let m = a.len();
    let at = |k: usize| -> Rational {
        if (1..=m).contains(&k) {
            a[k - 1].clone()
        } else {
            Rational::zero()
        }
    };
    // tail sums over k >= i of a_k/(k+1) and a_k/(k+1)^2
    let mut s = vec![Rational::zero(); m + 2];
    let mut u = vec![Rational::zero(); m + 2];
    for i in (1..=m).rev() {
        s[i] = &s[i + 1] + at(i) / int(i as i64 + 1);
        u[i] = &u[i + 1] + at(i) / int((i as i64 + 1) * (i as i64 + 1));
    }
    let mut b = vec![Rational::zero(); m + 2];
    for i in 1..=m {
        b[i] = int(i as i64) * &s[i];
    }
    let c: Vec<Rational> = (1..=m)
        .map(|i| at(i) + &b[i + 1] + &b[i - 1] - int(2) * &b[i])
        .collect();
    let mut prefix = Rational::zero();
    let mut f = Vec::with_capacity(m);
    for i in 1..=m {
        f.push(at(i) + &b[i + 1] + &b[i - 1] + int(2) * &b[i] + int(2) * &prefix);
        prefix += at(i);
    }
    let v = (1..=m).fold(Rational::zero(), |acc, i| {
        let ab = at(i) + &b[i + 1];
        acc + (&ab - &b[i]) * &b[i] * &ab
    }) * frac(1, 12);
    let sigma2 = (1..=m).fold(Rational::zero(), |acc, k| {
        acc + int((k * (k + 2)) as i64) * at(k)
    }) * frac(1, 12);
    let c_tail: Vec<Rational> = (1..=m)
        .map(|i| {
            (i..=m).fold(Rational::zero(), |acc, k| {
                acc + frac((k + 1 - i) as i64, k as i64 + 1) * at(k)
            })
        })
        .collect();
    let sigma_unrestricted: Vec<Vec<Rational>> = (1..=m)
        .map(|i| {
            (1..=m)
                .map(|j| {
                    let hi = i.max(j);
                    int(i.min(j) as i64) * &s[hi] - int((i * j) as i64) * &u[hi]
                })
                .collect()
        })
        .collect();
    // Conditioning on S_L: Cov(J_i, S)/N = i c(i)/2 and Var(S)/N = sigma^2.
    let sigma_restricted: Vec<Vec<Rational>> = (1..=m)
        .map(|i| {
            (1..=m)
                .map(|j| {
                    &sigma_unrestricted[i - 1][j - 1]
                        - int((i * j) as i64) * &c_tail[i - 1] * &c_tail[j - 1] / (int(4) * &sigma2)
                })
                .collect()
        })
        .collect();
    let quad = |sigma: &[Vec<Rational>]| {
        let mut acc = Rational::zero();
        for i in 0..m {
            for j in 0..m {
                acc += &f[i] * &sigma[i][j] * &f[j];
            }
        }
        acc * frac(1, 4) + &v
    };
    let limit_var_unrestricted = quad(&sigma_unrestricted);
    let limit_var_restricted = quad(&sigma_restricted);
    b.truncate(m + 1);
    b.remove(0);
    Ok(AsymptoticParams {
        a: a.to_vec(),
        b,
        c,
        f,
        v,
        sigma2,
        c_tail,
        sigma_unrestricted,
        sigma_restricted,
        limit_var_unrestricted,
        limit_var_restricted,
    })
}

/// Exact symmetric LDL test for positive semidefiniteness.
#[allow(clippy::needless_range_loop)]
pub fn is_positive_semidefinite(matrix: &[Vec<Rational>]) -> bool {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return false;
    }
    if !(0..n).all(|i| (0..i).all(|j| matrix[i][j] == matrix[j][i])) {
        return false;
    }
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    for k in 0..n {
        let pivot = a[k][k].clone();
        if pivot.is_negative() {
            return false;
        }
        if pivot.is_zero() {
            if (k + 1..n).any(|i| !a[i][k].is_zero()) {
                return false;
            }
            continue;
        }
        for i in k + 1..n {
            let factor = &a[i][k] / &pivot;
            for j in k + 1..n {
                let delta = &factor * &a[k][j];
                a[i][j] -= delta;
            }
        }
    }
    true
}

/// Distribution families scanned by [`clt_scan`] and [`lclt_scan`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanFamily {
    /// Basic specialization of the fusion module of `L(N)`.
    Basic,
    /// The string `T~(L(N), floor(l_m / 2))`.
    CentralString,
    /// Inversions of a random word of length `N` over `m+1` letters, `m` the shape length.
    Galois,
    /// `w = (s1 s0)^N` at the given weight, specialized at `z = 1`.
    Demazure(AffineWeight),
}

impl fmt::Display for ScanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanFamily::Basic => f.write_str("basic"),
            ScanFamily::CentralString => f.write_str("central-string"),
            ScanFamily::Galois => f.write_str("galois"),
            ScanFamily::Demazure(w) => write!(f, "demazure({},{})", w.m, w.n),
        }
    }
}

/// Admission vectors whose entries are affine in `N`, written like `0:N` or
/// `1:0:2N+1` (commas also separate entries).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapePattern {
    /// `(slope, offset)` per entry.
    entries: Vec<(i64, i64)>,
}

impl ShapePattern {
    pub fn new(entries: Vec<(i64, i64)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("shape pattern is empty"));
        }
        if entries.iter().any(|(s, o)| *s < 0 || *o < 0) {
            return Err(Error::invalid("shape pattern entries must be non-negative"));
        }
        Ok(ShapePattern { entries })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let entries = text
            .split([':', ','])
            .map(parse_affine)
            .collect::<Result<Vec<_>>>()?;
        ShapePattern::new(entries)
    }

    pub fn entries(&self) -> &[(i64, i64)] {
        &self.entries
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn at(&self, n: i64) -> Result<AdmissionVector> {
        AdmissionVector::new(self.entries.iter().map(|(s, o)| s * n + o).collect())
    }

    pub fn slope(&self) -> Vec<Rational> {
        self.entries.iter().map(|(s, _)| int(*s)).collect()
    }
}

fn parse_affine(term: &str) -> Result<(i64, i64)> {
    let bad = || Error::invalid(format!("cannot read shape entry '{term}'"));
    let t = term.trim();
    let (lin, off) = match t.find(['+', '-']) {
        Some(pos) if t.contains('N') => {
            let off: i64 = t[pos..].replace('+', "").parse().map_err(|_| bad())?;
            (&t[..pos], off)
        }
        _ => (t, 0),
    };
    match lin.strip_suffix('N') {
        Some(coef) => {
            let coef = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad())?
            };
            Ok((coef, off))
        }
        None => Ok((0, lin.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for ShapePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, o)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            match (s, o) {
                (0, o) => write!(f, "{o}")?,
                (1, 0) => f.write_str("N")?,
                (s, 0) => write!(f, "{s}N")?,
                (1, o) => write!(f, "N+{o}")?,
                (s, o) => write!(f, "{s}N+{o}")?,
            }
        }
        Ok(())
    }
}

/// Which sup-distance a scan reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanStatistic {
    /// Kolmogorov distance to the standard normal CDF.
    Kolmogorov,
    /// Local deviation from the Gaussian density, with exponent `(k - mu)^2`.
    LocalGaussian,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanValues {
    pub support: usize,
    pub mean: Rational,
    pub variance: Rational,
    /// `None` for `N = 0`.
    pub var_over_n3: Option<Rational>,
    /// `None` when the variance is zero.
    pub distance: Option<f64>,
    /// Whether the mean equals the family's closed-form mean, if it has one.
    pub mean_check: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RowOutcome {
    Computed(ScanValues),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub n: i64,
    pub outcome: RowOutcome,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanTable {
    pub family: ScanFamily,
    pub shape: ShapePattern,
    pub statistic: ScanStatistic,
    /// Limit of `Var / N^3` where one is known.
    pub limit_var_over_n3: Option<Rational>,
    pub rows: Vec<ScanRow>,
}

/// The distribution of a scan family at one `N`.
pub fn family_distribution(
    family: ScanFamily,
    shape: &ShapePattern,
    n: i64,
) -> Result<DiscreteDist> {
    if n < 0 {
        return Err(Error::invalid("N must be non-negative"));
    }
    match family {
        ScanFamily::Basic => dist_from_poly(&basic_specialization(&shape.at(n)?)?),
        ScanFamily::CentralString => {
            let l = shape.at(n)?;
            dist_from_poly(&ttilde(&l, l.lm() / 2)?)
        }
        ScanFamily::Galois => galois_distribution(shape.m() as i64, n),
        ScanFamily::Demazure(weight) => {
            if n == 0 {
                return dist_from_poly(&QPoly::one());
            }
            let w = WeylWord::family(Family::S1S0N, n)?;
            let t = fusion_transform(&w, weight)?;
            let poly = if t.effective.is_some() {
                t.apply(&fusion_char(&t.lw)?).at_z_one()
            } else {
                QPoly::one()
            };
            dist_from_poly(&poly)
        }
    }
}

fn family_limit(family: ScanFamily, shape: &ShapePattern) -> Option<Rational> {
    match family {
        ScanFamily::Basic => asymptotic_params(&shape.slope())
            .ok()
            .map(|p| p.limit_var_unrestricted),
        ScanFamily::CentralString => asymptotic_params(&shape.slope())
            .ok()
            .map(|p| p.limit_var_restricted),
        ScanFamily::Galois => {
            let m = shape.m() as i64;
            Some(frac((m + 1) * (m + 1) - 1, 36 * (m + 1) * (m + 1)))
        }
        ScanFamily::Demazure(_) => None,
    }
}

fn family_mean(family: ScanFamily, shape: &ShapePattern, n: i64) -> Result<Option<Rational>> {
    Ok(match family {
        ScanFamily::Basic => Some(ClosedForms::new(&shape.at(n)?).mean_t),
        ScanFamily::CentralString => None,
        ScanFamily::Galois => {
            let m = shape.m() as i64;
            Some(frac(m, 4 * (m + 1)) * int(n * (n - 1)))
        }
        ScanFamily::Demazure(_) if n == 0 => Some(Rational::zero()),
        ScanFamily::Demazure(weight) => Some(demazure_mean_by_decomposition(
            weight,
            &WeylWord::family(Family::S1S0N, n)?,
        )?),
    })
}

fn scan(
    family: ScanFamily,
    shape: &ShapePattern,
    ns: &[i64],
    statistic: ScanStatistic,
) -> Result<ScanTable> {
    if ns.iter().any(|n| *n < 0) {
        return Err(Error::invalid("N values must be non-negative"));
    }
    let cap = limits::support_cap();
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let dist = match family_distribution(family, shape, n) {
            Ok(d) => d,
            Err(e @ Error::ResourceCap { .. }) => {
                rows.push(ScanRow {
                    n,
                    outcome: RowOutcome::Skipped(e.to_string()),
                });
                continue;
            }
            Err(e) => return Err(e),
        };
        if dist.support_len() as u64 > cap {
            rows.push(ScanRow {
                n,
                outcome: RowOutcome::Skipped(format!("support exceeds {cap} points")),
            });
            continue;
        }
        let Moments { mean, variance } = dist.moments();
        let var_over_n3 = (n > 0).then(|| &variance / int(n * n * n));
        let distance = match statistic {
            ScanStatistic::Kolmogorov => dist.kolmogorov_distance(),
            ScanStatistic::LocalGaussian => dist.local_deviation(),
        };
        let mean_check = family_mean(family, shape, n)?.map(|expected| expected == mean);
        rows.push(ScanRow {
            n,
            outcome: RowOutcome::Computed(ScanValues {
                support: dist.support_len(),
                mean,
                variance,
                var_over_n3,
                distance,
                mean_check,
            }),
        });
    }
    Ok(ScanTable {
        family,
        shape: shape.clone(),
        statistic,
        limit_var_over_n3: family_limit(family, shape),
        rows,
    })
}

/// Exact moments and the Kolmogorov distance to the normal law for each `N`.
/// Rows over the support cap are marked skipped.
pub fn clt_scan(family: ScanFamily, shape: &ShapePattern, ns: &[i64]) -> Result<ScanTable> {
    scan(family, shape, ns, ScanStatistic::Kolmogorov)
}

/// Exact moments and the local Gaussian deviation for each `N`.
pub fn lclt_scan(family: ScanFamily, shape: &ShapePattern, ns: &[i64]) -> Result<ScanTable> {
    scan(family, shape, ns, ScanStatistic::LocalGaussian)
}

/// Conditional occupancy moments for `L = (0, ..., 0, N)` given `S_L = a`,
/// next to the limiting covariance. Indices run over letters `0..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccupancyReport {
    pub m: i64,
    pub n: i64,
    pub a: i64,
    pub mean: Vec<Rational>,
    pub cov: Vec<Vec<Rational>>,
    /// Limit of `Cov / N`.
    pub sigma: Vec<Vec<Rational>>,
    /// `max |Cov/N - sigma|`
    pub gap: Rational,
    /// `sum_j sigma_ij = 0` and `sum_j j sigma_ij = 0` for every row.
    pub constraints_hold: bool,
}

fn uniform_sum_counts(m: i64, n: i64) -> Vec<BigInt> {
    let base = uniform_counts(m);
    let mut p = QPoly::one();
    for _ in 0..n {
        p = &p * &base;
    }
    (0..=m * n).map(|e| p.coeff(e)).collect()
}

pub fn restricted_occupancy_check(l: &AdmissionVector, a: i64) -> Result<OccupancyReport> {
    let m = l.m() as i64;
    let n = l.entry(l.m());
    if n < 1 || (1..l.m()).any(|k| l.entry(k) != 0) {
        return Err(Error::invalid(format!(
            "occupancy check needs a one-component vector (0,...,0,N), got {l}"
        )));
    }
    if a < 0 || a > m * n {
        return Err(Error::invalid(format!("P(S_L = {a}) is zero for {l}")));
    }
    let get = |v: &[BigInt], k: i64| -> BigInt {
        if k < 0 || k as usize >= v.len() {
            BigInt::zero()
        } else {
            v[k as usize].clone()
        }
    };
    let full = uniform_sum_counts(m, n);
    let less1 = uniform_sum_counts(m, n - 1);
    let less2 = if n >= 2 {
        uniform_sum_counts(m, n - 2)
    } else {
        Vec::new()
    };
    let denom = Rational::from_integer(get(&full, a));
    // P(S_{N-1} = s - i) / P(S_N = s) = (m+1) c_{N-1}(s-i) / c_N(s)
    let mean: Vec<Rational> = (0..=m)
        .map(|i| int(n) * Rational::from_integer(get(&less1, a - i)) / &denom)
        .collect();
    let pair = |i: i64, j: i64| -> Rational {
        int(n * (n - 1)) * Rational::from_integer(get(&less2, a - i - j)) / &denom
    };
    let cov: Vec<Vec<Rational>> = (0..=m)
        .map(|i| {
            (0..=m)
                .map(|j| {
                    let second = if i == j {
                        &mean[i as usize] + pair(i, i)
                    } else {
                        pair(i, j)
                    };
                    second - &mean[i as usize] * &mean[j as usize]
                })
                .collect()
        })
        .collect();
    let total: Rational = mean.iter().fold(Rational::zero(), |acc, x| acc + x);
    let weighted: Rational = mean
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (i, x)| acc + int(i as i64) * x);
    if total != int(n) || weighted != int(a) {
        return Err(Error::verification(format!(
            "conditional occupancy means for {l}, a={a} do not sum to (N, a)"
        )));
    }
    let sigma2 = frac(m * (m + 2), 12);
    let sigma: Vec<Vec<Rational>> = (0..=m)
        .map(|i| {
            (0..=m)
                .map(|j| {
                    let diag = if i == j {
                        frac(1, m + 1)
                    } else {
                        Rational::zero()
                    };
                    diag - frac(1, (m + 1) * (m + 1))
                        - int((m - 2 * i) * (m - 2 * j)) / (int(4 * (m + 1) * (m + 1)) * &sigma2)
                })
                .collect()
        })
        .collect();
    let mut gap = Rational::zero();
    for i in 0..=m as usize {
        for j in 0..=m as usize {
            let d = (&cov[i][j] / int(n) - &sigma[i][j]).abs();
            if d > gap {
                gap = d;
            }
        }
    }
    let constraints_hold = sigma.iter().all(|row| {
        let plain = row.iter().fold(Rational::zero(), |acc, x| acc + x);
        let weighted = row
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, x)| acc + int(j as i64) * x);
        plain.is_zero() && weighted.is_zero()
    });
    Ok(OccupancyReport {
        m,
        n,
        a,
        mean,
        cov,
        sigma,
        gap,
        constraints_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::q_binomial;

    fn av(e: &[i64]) -> AdmissionVector {
        AdmissionVector::new(e.to_vec()).unwrap()
    }

    #[test]
    fn two_point_distribution() {
        let d = dist_from_poly(&QPoly::from_dense(0, &[1, 1])).unwrap();
        assert_eq!(d.prob(0), frac(1, 2));
        assert_eq!(
            d.moments(),
            Moments {
                mean: frac(1, 2),
                variance: frac(1, 4)
            }
        );
        assert!(dist_from_poly(&QPoly::zero()).is_err());
        assert!(dist_from_poly(&QPoly::from_dense(0, &[1, -1, 1])).is_err());
    }

    #[test]
    fn mann_whitney_moments() {
        let d = dist_from_poly(&q_binomial(5, 2).unwrap()).unwrap();
        assert_eq!(
            d.moments(),
            Moments {
                mean: int(3),
                variance: int(3)
            }
        );
    }

    #[test]
    fn mixing_small_cases() {
        let s = mixing_distribution(&av(&[0, 2])).unwrap();
        let masses: Vec<Rational> = s.joint.values().cloned().collect();
        assert_eq!(s.joint.len(), 6);
        assert_eq!(s.total_mass(), int(1));
        assert_eq!(s.joint[&vec![0, 0]], frac(1, 9));
        assert_eq!(s.joint[&vec![1, 1]], frac(2, 9));
        assert_eq!(masses.iter().filter(|p| **p == frac(2, 9)).count(), 3);
        let (mean, _) = mixing_distribution(&av(&[0, 4])).unwrap().j_moments();
        assert_eq!(mean, vec![frac(4, 3), frac(8, 3)]);
    }

    #[test]
    fn mixture_reconstructions() {
        for l in [&[2][..], &[0, 4], &[1, 1]] {
            assert!(mixture_identity(&av(l)).unwrap().pass);
        }
        assert!(restricted_mixture_identity(&av(&[0, 4]), 4).unwrap().pass);
        assert!(conditional_mixing(&av(&[1]), 2).is_err());
    }

    #[test]
    fn s_l_for_two_words_of_length_two() {
        let d = s_l_distribution(&av(&[0, 4])).unwrap();
        assert_eq!(
            d.moments(),
            Moments {
                mean: int(4),
                variance: frac(8, 3)
            }
        );
    }

    #[test]
    fn closed_form_values() {
        let cf = closed_forms(&av(&[0, 4]));
        assert_eq!(cf.mean_y, int(2));
        assert_eq!(cf.mean_q, frac(32, 3));
        assert_eq!(cf.mean_t, frac(38, 3));
        assert_eq!(cf.mean_unr, cf.mean_t);
        assert_eq!(cf.one_component.unwrap().mean_t, frac(38, 3));
    }

    #[test]
    fn galois_small() {
        let g = galois_moments(1, 2).unwrap();
        assert_eq!(
            (g.mean.clone(), g.variance.clone()),
            (frac(1, 4), frac(3, 16))
        );
        assert!(g.exact.is_some());
        let g0 = galois_moments(3, 0).unwrap();
        assert!(g0.mean.is_zero() && g0.variance.is_zero());
    }

    #[test]
    fn demazure_mean_example() {
        let w = WeylWord::family(Family::S1S0N, 2).unwrap();
        let e = demazure_expectation(2, 0, &w).unwrap();
        assert_eq!(e.exact, frac(14, 3));
        assert_eq!(e.closed_form, Some(frac(14, 3)));
        assert_eq!(
            concentration_ratio(2, 0, 2).unwrap(),
            (frac(7, 12), frac(4, 9))
        );
        assert!(demazure_expectation(0, 0, &w).is_err());
        assert!(demazure_expectation(1, 1, &WeylWord::identity())
            .unwrap()
            .exact
            .is_zero());
    }

    #[test]
    fn asymptotic_small() {
        let p = asymptotic_params(&[int(0), int(1)]).unwrap();
        assert_eq!(p.b, vec![frac(1, 3), frac(2, 3)]);
        assert_eq!(p.sigma2, frac(2, 3));
        assert_eq!(p.limit_var_unrestricted, one_component_var_limit(2));
        assert!(is_positive_semidefinite(&p.sigma_restricted));
        assert!(asymptotic_params(&[int(0)]).is_err());
    }

    #[test]
    fn shape_patterns() {
        let p = ShapePattern::parse("0:N").unwrap();
        assert_eq!(p.at(5).unwrap().entries(), &[0, 5]);
        let p = ShapePattern::parse("1,2N+1,N-0").unwrap();
        assert_eq!(p.entries(), &[(0, 1), (2, 1), (1, 0)]);
        assert_eq!(p.to_string(), "1:2N+1:N");
        assert!(ShapePattern::parse("x").is_err());
    }

    #[test]
    fn occupancy_quotients() {
        let r = restricted_occupancy_check(&av(&[0, 4]), 4).unwrap();
        assert!(r.constraints_hold);
        assert_eq!(r.mean.iter().fold(Rational::zero(), |a, x| a + x), int(4));
    }
}
