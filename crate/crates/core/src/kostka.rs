//! Kostka numbers and polynomials, generalized q-supernomials `S` and `S*`,
//! type A fusion characters and the mixture Ansatz.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactpoly::{q_binomial, reciprocal_shift, QPoly, RatPoly, Rational};
use crate::{limits, Error, Result};

/// Largest `|mu|` for which [`supernomial_general`] also evaluates the
/// Kostka-product form and compares.
pub const CROSS_CHECK_MAX_SIZE: usize = 8;

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|p| *p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..first)
                .map(|i| self.parts.iter().filter(|p| **p > i).count())
                .collect(),
        }
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|p| **p == i).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Weak composition `xi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The dominant representative of the permutation orbit.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition::new(p.parts.clone())
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All weak compositions of `n` with exactly `k` parts.
pub fn compositions(n: usize, k: usize) -> Vec<Composition> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if k == 1 {
            cur.push(n);
            out.push(Composition::new(cur.clone()));
            cur.pop();
            return;
        }
        for x in 0..=n {
            cur.push(x);
            rec(n - x, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Composition::new(Vec::new()));
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// `n(mu) = sum (i-1) mu_i`, checked against `sum_{i<j} min(mu_i, mu_j)`.
pub fn n_mu(mu: &Partition) -> usize {
    let weighted: usize = mu.parts.iter().enumerate().map(|(i, p)| i * p).sum();
    let mut pairwise = 0;
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            pairwise += mu.parts[i].min(mu.parts[j]);
        }
    }
    assert_eq!(
        weighted, pairwise,
        "the two forms of n(mu) disagree for {mu}"
    );
    weighted
}

/// Semistandard tableaux of shape `shape` and content `content`, built by
/// adding one horizontal strip per letter. Rows are listed top to bottom.
fn for_each_ssyt(shape: &[usize], content: &[usize], visit: &mut dyn FnMut(&[Vec<u32>])) {
    let rows = shape.len();
    let mut tab: Vec<Vec<u32>> = vec![Vec::new(); rows];
    let mut cur = vec![0usize; rows];

    #[allow(clippy::too_many_arguments)]
    fn letter(
        k: usize,
        shape: &[usize],
        content: &[usize],
        cur: &mut Vec<usize>,
        tab: &mut Vec<Vec<u32>>,
        visit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        if k == content.len() {
            if cur.as_slice() == shape {
                visit(tab);
            }
            return;
        }
        let before = cur.clone();
        strip(0, content[k], k, shape, content, &before, cur, tab, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn strip(
        i: usize,
        rem: usize,
        k: usize,
        shape: &[usize],
        content: &[usize],
        before: &[usize],
        cur: &mut Vec<usize>,
        tab: &mut Vec<Vec<u32>>,
        visit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        if i == shape.len() {
            if rem == 0 {
                letter(k + 1, shape, content, cur, tab, visit);
            }
            return;
        }
        // A horizontal strip: row i may grow up to the old length of row i-1.
        let hi = if i == 0 {
            shape[0]
        } else {
            shape[i].min(before[i - 1])
        };
        let lo = before[i];
        for x in lo..=hi.max(lo) {
            let add = x - lo;
            if add > rem {
                break;
            }
            cur[i] = x;
            tab[i].extend(core::iter::repeat_n(k as u32 + 1, add));
            strip(i + 1, rem - add, k, shape, content, before, cur, tab, visit);
            let keep = tab[i].len() - add;
            tab[i].truncate(keep);
            cur[i] = lo;
        }
    }

    letter(0, shape, content, &mut cur, &mut tab, visit);
}

fn check_sizes(a: usize, b: usize, what: &str) -> Result<()> {
    if a != b {
        return Err(Error::invalid(format!("{what}: sizes differ ({a} vs {b})")));
    }
    Ok(())
}

/// Number of semistandard tableaux of shape `eta` and content `xi`.
pub fn kostka_number(eta: &Partition, xi: &Composition) -> Result<u64> {
    check_sizes(eta.size(), xi.size(), "kostka_number")?;
    let mut count = 0u64;
    for_each_ssyt(&eta.parts, &xi.parts, &mut |_| count += 1);
    Ok(count)
}

/// Charge of a word whose content is a partition.
pub fn charge(word: &[u32]) -> usize {
    let mut letters: Vec<u32> = word.to_vec();
    let mut total = 0;
    while !letters.is_empty() {
        let mut used = vec![false; letters.len()];
        let Some(mut pos) = letters.iter().rposition(|x| *x == 1) else {
            break;
        };
        used[pos] = true;
        let mut index = 0;
        let mut next = 2;
        loop {
            let left = (0..pos).rev().find(|&i| letters[i] == next && !used[i]);
            let found = match left {
                Some(i) => Some(i),
                None => {
                    // Wrap around to the right end.
                    let wrapped = (0..letters.len())
                        .rev()
                        .find(|&i| letters[i] == next && !used[i]);
                    if wrapped.is_some() {
                        index += 1;
                    }
                    wrapped
                }
            };
            let Some(i) = found else { break };
            used[i] = true;
            pos = i;
            total += index;
            next += 1;
        }
        letters = letters
            .iter()
            .zip(&used)
            .filter(|(_, u)| !**u)
            .map(|(x, _)| *x)
            .collect();
    }
    total
}

/// Kostka-Foulkes polynomial `K_{eta, mu}(q)` as the charge generating
/// function over semistandard tableaux.
pub fn kostka_polynomial(eta: &Partition, mu: &Partition) -> Result<QPoly> {
    check_sizes(eta.size(), mu.size(), "kostka_polynomial")?;
    let mut out = QPoly::zero();
    for_each_ssyt(&eta.parts, &mu.parts, &mut |tab| {
        // Reading word: rows from bottom to top, each left to right.
        let word: Vec<u32> = tab.iter().rev().flatten().copied().collect();
        out.add_term(charge(&word) as i64, BigInt::from(1));
    });
    Ok(out)
}

/// Visits every chain `0 = nu^0 < nu^1 < ... < nu^n = mu^t` with
/// `|nu^a| = xi_1 + ... + xi_a`. Each diagram is a vector of row lengths of
/// common length `mu_1`.
fn for_each_chain(
    xi: &[usize],
    target: &[usize],
    visit: &mut dyn FnMut(&[Vec<usize>]),
) -> Result<u64> {
    let rows = target.len();
    let cap = limits::chain_cap();
    let mut chain: Vec<Vec<usize>> = vec![vec![0; rows]];
    let mut count = 0u64;
    let mut overflow = false;

    #[allow(clippy::too_many_arguments)]
    fn step(
        a: usize,
        xi: &[usize],
        target: &[usize],
        chain: &mut Vec<Vec<usize>>,
        count: &mut u64,
        cap: u64,
        overflow: &mut bool,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if *overflow {
            return;
        }
        let n = xi.len();
        if a == n {
            if chain.last().map(|v| v.as_slice()) == Some(target) {
                *count += 1;
                if *count > cap {
                    *overflow = true;
                    return;
                }
                visit(chain);
            }
            return;
        }
        let prev = chain.last().unwrap().clone();
        if a == n - 1 {
            let fits = prev.iter().zip(target).all(|(p, t)| p <= t);
            if fits && prev.iter().sum::<usize>() + xi[a] == target.iter().sum::<usize>() {
                chain.push(target.to_vec());
                step(a + 1, xi, target, chain, count, cap, overflow, visit);
                chain.pop();
            }
            return;
        }
        let mut cur = Vec::with_capacity(target.len());
        grow(
            0, xi[a], a, &prev, xi, target, &mut cur, chain, count, cap, overflow, visit,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        i: usize,
        rem: usize,
        a: usize,
        prev: &[usize],
        xi: &[usize],
        target: &[usize],
        cur: &mut Vec<usize>,
        chain: &mut Vec<Vec<usize>>,
        count: &mut u64,
        cap: u64,
        overflow: &mut bool,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if i == target.len() {
            if rem == 0 {
                chain.push(cur.clone());
                step(a + 1, xi, target, chain, count, cap, overflow, visit);
                chain.pop();
            }
            return;
        }
        let hi = if i == 0 {
            target[0]
        } else {
            target[i].min(cur[i - 1])
        };
        let lo = prev[i];
        if lo > hi {
            return;
        }
        for x in lo..=hi {
            if x - lo > rem {
                break;
            }
            cur.push(x);
            grow(
                i + 1,
                rem - (x - lo),
                a,
                prev,
                xi,
                target,
                cur,
                chain,
                count,
                cap,
                overflow,
                visit,
            );
            cur.pop();
        }
    }

    if xi.is_empty() {
        if target.iter().all(|t| *t == 0) {
            visit(&chain);
            return Ok(1);
        }
        return Ok(0);
    }
    step(
        0,
        xi,
        target,
        &mut chain,
        &mut count,
        cap,
        &mut overflow,
        visit,
    );
    if overflow {
        return Err(Error::ResourceCap {
            what: "diagram chains",
            cap,
        });
    }
    Ok(count)
}

/// The fermionic sum over diagram chains.
pub fn supernomial_fermionic(xi: &Composition, mu: &Partition) -> Result<QPoly> {
    check_sizes(xi.size(), mu.size(), "supernomial_general")?;
    let target = mu.conjugate().parts;
    let rows = target.len();
    let n = xi.len();
    let mut binomials: BTreeMap<(i64, i64), QPoly> = BTreeMap::new();
    let mut out = QPoly::zero();
    let at = |nu: &[usize], i: usize| if i < rows { nu[i] as i64 } else { 0 };
    for_each_chain(&xi.parts, &target, &mut |chain| {
        let mut phi = 0i64;
        for a in 0..n {
            for i in 0..rows {
                let d = at(&chain[a + 1], i) - at(&chain[a], i);
                phi += d * (d - 1) / 2;
            }
        }
        let mut term = QPoly::monomial(phi, 1);
        for a in 1..n {
            for i in 0..rows {
                let top = at(&chain[a + 1], i) - at(&chain[a], i + 1);
                let k = at(&chain[a], i) - at(&chain[a], i + 1);
                let factor = binomials
                    .entry((top, k))
                    .or_insert_with(|| q_binomial(top.max(0), k).unwrap_or_default());
                if top < 0 || factor.is_zero() {
                    return;
                }
                term = &term * &*factor;
            }
        }
        out += &term;
    })?;
    Ok(out)
}

/// `sum_eta K_{eta, xi} K_{eta, mu}(q)`
pub fn supernomial_from_kostka(xi: &Composition, mu: &Partition) -> Result<QPoly> {
    check_sizes(xi.size(), mu.size(), "supernomial_from_kostka")?;
    let mut out = QPoly::zero();
    for eta in partitions(mu.size()) {
        let k = kostka_number(&eta, xi)?;
        if k == 0 {
            continue;
        }
        out += &kostka_polynomial(&eta, mu)?.scale(&BigInt::from(k));
    }
    Ok(out)
}

/// Generalized q-supernomial `S_{xi, mu}(q)`.
///
/// Computed by the chain formula; for `|mu| <= 8` the Kostka-product form is
/// evaluated as well and any disagreement is an error.
pub fn supernomial_general(xi: &Composition, mu: &Partition) -> Result<QPoly> {
    let s = supernomial_fermionic(xi, mu)?;
    if mu.size() <= CROSS_CHECK_MAX_SIZE {
        let check = supernomial_from_kostka(xi, mu)?;
        if check != s {
            return Err(Error::verification(format!(
                "chain sum and Kostka product differ for xi={:?}, mu={mu}",
                xi.parts
            )));
        }
    }
    Ok(s)
}

/// `S*_{xi, mu}(q) = q^{n(mu)} S_{xi, mu}(1/q)`, checked to be a polynomial.
pub fn supernomial_star(xi: &Composition, mu: &Partition) -> Result<QPoly> {
    let s = supernomial_general(xi, mu)?;
    let star = reciprocal_shift(&s, n_mu(mu) as i64);
    if star.min_degree().is_some_and(|d| d < 0) {
        return Err(Error::verification(format!(
            "S* has a negative exponent for xi={:?}, mu={mu}",
            xi.parts
        )));
    }
    Ok(star)
}

/// Number of distinct rearrangements of `parts` padded with zeros to `slots`.
pub fn orbit_size(parts: &Partition, slots: usize) -> BigInt {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for p in parts.parts() {
        *counts.entry(*p).or_default() += 1;
    }
    let zeros = slots.saturating_sub(parts.len());
    let fact = |k: usize| (1..=k).fold(BigInt::from(1), |acc, x| acc * x);
    let mut denom = fact(zeros);
    for c in counts.values() {
        denom *= fact(*c);
    }
    fact(slots) / denom
}

/// Type A fusion character grouped by dominant weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAChar {
    pub rank: usize,
    /// `xi -> S*_{xi, mu}` for dominant `xi` with at most `rank + 1` parts.
    pub strings: BTreeMap<Partition, QPoly>,
}

impl TypeAChar {
    /// `sum_xi S*_{xi, mu}(q) * |orbit of xi|`
    pub fn basic_specialization(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (xi, s) in &self.strings {
            out += &s.scale(&orbit_size(xi, self.rank + 1));
        }
        out
    }
}

/// Character of the symmetric-power fusion module `F_mu` for `sl_{rank+1}`.
pub fn type_a_fusion_char(mu: &Partition, rank: usize) -> Result<TypeAChar> {
    if rank == 0 {
        return Err(Error::invalid("rank must be positive"));
    }
    let mut strings = BTreeMap::new();
    for xi in partitions(mu.size()) {
        if xi.len() > rank + 1 {
            continue;
        }
        let mut padded = xi.parts.clone();
        padded.resize(rank + 1, 0);
        let s = supernomial_star(&Composition::new(padded), mu)?;
        if !s.is_zero() {
            strings.insert(xi, s);
        }
    }
    Ok(TypeAChar { rank, strings })
}

/// `prod_i dim V_{mu_i omega_1}` for `sl_{rank+1}`.
pub fn type_a_dimension(mu: &Partition, rank: usize) -> BigInt {
    let binom = |n: usize, k: usize| -> BigInt {
        (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
    };
    mu.parts().iter().map(|p| binom(p + rank, rank)).product()
}

/// The mixture presentation of `S*_{xi, mu}(q) / S*_{xi, mu}(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mixture {
    /// `P(X = eta) = K_{eta, xi} K_{eta, mu} / sum K K`
    pub weights: BTreeMap<Partition, Rational>,
    /// `f_{mu, eta}(q) = q^{n(mu)} K_{eta, mu}(1/q) / K_{eta, mu}(1)`
    pub components: BTreeMap<Partition, RatPoly>,
}

impl Mixture {
    pub fn reconstruct(&self) -> RatPoly {
        let mut out = RatPoly::zero();
        for (eta, w) in &self.weights {
            out += &self.components[eta].scale(w);
        }
        out
    }

    pub fn total_weight(&self) -> Rational {
        self.weights
            .values()
            .fold(Rational::zero(), |acc, w| acc + w)
    }
}

pub fn mixture_ansatz(mu: &Partition, xi: &Composition) -> Result<Mixture> {
    check_sizes(xi.size(), mu.size(), "mixture_ansatz")?;
    let shift = n_mu(mu) as i64;
    let mut raw: Vec<(Partition, BigInt, QPoly)> = Vec::new();
    let mut total = BigInt::zero();
    for eta in partitions(mu.size()) {
        let k = kostka_number(&eta, xi)?;
        if k == 0 {
            continue;
        }
        let kp = kostka_polynomial(&eta, mu)?;
        let at_one = kp.eval_one();
        if at_one.is_zero() {
            continue;
        }
        let w = &at_one * k;
        total += &w;
        raw.push((eta, w, kp));
    }
    if total.is_zero() {
        return Err(Error::invalid("S*(1) = 0: the mixture is undefined"));
    }
    let mut weights = BTreeMap::new();
    let mut components = BTreeMap::new();
    for (eta, w, kp) in raw {
        let at_one = kp.eval_one();
        weights.insert(eta.clone(), Rational::new(w, total.clone()));
        components.insert(
            eta,
            RatPoly::from_ratio(&reciprocal_shift(&kp, shift), &at_one)?,
        );
    }
    Ok(Mixture {
        weights,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka_number(&p(&[2, 1]), &c(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka_number(&p(&[3, 2]), &c(&[3, 2])).unwrap(), 1);
        assert_eq!(kostka_number(&p(&[1, 1]), &c(&[2])).unwrap(), 0);
        assert!(kostka_number(&p(&[1, 1]), &c(&[3])).is_err());
    }

    #[test]
    fn kostka_polynomials() {
        assert_eq!(
            kostka_polynomial(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            QPoly::from_dense(1, &[1, 1])
        );
        assert_eq!(
            kostka_polynomial(&p(&[3]), &p(&[1, 1, 1])).unwrap(),
            QPoly::monomial(3, 1)
        );
        assert_eq!(
            kostka_polynomial(&p(&[2, 2]), &p(&[2, 2])).unwrap(),
            QPoly::one()
        );
        // K_{(3,1),(2,1,1)} = q + q^2
        assert_eq!(
            kostka_polynomial(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(),
            QPoly::from_dense(1, &[1, 1])
        );
    }

    #[test]
    fn n_mu_values() {
        assert_eq!(n_mu(&p(&[2, 2])), 2);
        assert_eq!(n_mu(&p(&[5])), 0);
        assert_eq!(n_mu(&p(&[1, 1, 1])), 3);
    }

    #[test]
    fn single_column_collapse() {
        let mu = p(&[2, 1, 1]);
        let s = supernomial_general(&c(&[4]), &mu).unwrap();
        assert_eq!(s, QPoly::monomial(n_mu(&mu) as i64, 1));
        assert_eq!(supernomial_star(&c(&[4]), &mu).unwrap(), QPoly::one());
    }

    #[test]
    fn sl2_strings_of_one_one() {
        let t = type_a_fusion_char(&p(&[1, 1]), 1).unwrap();
        assert_eq!(t.strings[&p(&[2])], QPoly::one());
        assert_eq!(t.strings[&p(&[1, 1])], QPoly::from_dense(0, &[1, 1]));
    }

    #[test]
    fn mixture_collapse() {
        let mu = p(&[2, 1]);
        let m = mixture_ansatz(&mu, &c(&[3])).unwrap();
        assert_eq!(m.weights.len(), 1);
        assert_eq!(m.total_weight(), Rational::from_integer(1.into()));
        assert_eq!(m.reconstruct(), RatPoly::from_qpoly(&QPoly::one()));
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }
}
