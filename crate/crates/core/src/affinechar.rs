//! Demazure characters of affine sl2 and their description through fusion
//! characters.
//!
//! Characters are stored relative to the highest weight, in the coordinates
//! `z = e^{-alpha_1}`, `q = e^{-delta}`. A monomial `z^a q^d` sits under the
//! doubled key `(2a, d)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::exactpoly::CharPoly;
use crate::supernomial::{fusion_char, AdmissionVector};
use crate::{Error, Result};

/// Dominant weight `m Lambda_0 + n Lambda_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub m: i64,
    pub n: i64,
}

impl AffineWeight {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m < 0 || n < 0 {
            return Err(Error::invalid("weight coefficients must be non-negative"));
        }
        Ok(AffineWeight { m, n })
    }

    /// `<c, Lambda> = m + n`
    pub fn level(&self) -> i64 {
        self.m + self.n
    }

    /// Pairing of the monomial at doubled z-exponent `z2` with `alpha_j^vee`.
    fn pairing(&self, letter: Letter, z2: i64) -> i64 {
        match letter {
            Letter::S1 => self.n - z2,
            Letter::S0 => self.m + z2,
        }
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    S0,
    S1,
}

impl Letter {
    pub fn from_index(j: u8) -> Result<Letter> {
        match j {
            0 => Ok(Letter::S0),
            1 => Ok(Letter::S1),
            _ => Err(Error::invalid(format!(
                "simple reflection index {j} is not 0 or 1"
            ))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Letter::S0 => 0,
            Letter::S1 => 1,
        }
    }

    fn other(self) -> Letter {
        match self {
            Letter::S0 => Letter::S1,
            Letter::S1 => Letter::S0,
        }
    }
}

/// The four shapes of nontrivial reduced words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(s1 s0)^N s1`, `N >= 0`
    S1S0NS1,
    /// `(s0 s1)^N`, `N >= 1`
    S0S1N,
    /// `(s1 s0)^N`, `N >= 1`
    S1S0N,
    /// `s0 (s1 s0)^(N-1)`, `N >= 1`
    S0S1S0N,
}

/// Reduced word in the affine Weyl group of sl2, written left to right.
///
/// Reduced words alternate, so a word is fixed by its length and its last
/// (rightmost) letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylWord {
    letters: Vec<Letter>,
}

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Result<Self> {
        if letters.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(
                "word is not reduced: repeated adjacent letter",
            ));
        }
        Ok(WeylWord { letters })
    }

    pub fn from_indices(indices: &[u8]) -> Result<Self> {
        let letters = indices
            .iter()
            .map(|j| Letter::from_index(*j))
            .collect::<Result<Vec<_>>>()?;
        WeylWord::from_letters(letters)
    }

    /// Alternating word of the given length ending in `last`.
    pub fn alternating(len: usize, last: Letter) -> Self {
        let mut letters = vec![last; len];
        let mut cur = last;
        for slot in letters.iter_mut().rev() {
            *slot = cur;
            cur = cur.other();
        }
        WeylWord { letters }
    }

    pub fn family(family: Family, steps: i64) -> Result<Self> {
        let min = if family == Family::S1S0NS1 { 0 } else { 1 };
        if steps < min {
            return Err(Error::invalid(format!("{family:?} needs N >= {min}")));
        }
        let n = steps as usize;
        Ok(match family {
            Family::S1S0NS1 => WeylWord::alternating(2 * n + 1, Letter::S1),
            Family::S0S1N => WeylWord::alternating(2 * n, Letter::S1),
            Family::S1S0N => WeylWord::alternating(2 * n, Letter::S0),
            Family::S0S1S0N => WeylWord::alternating(2 * n - 1, Letter::S0),
        })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Rightmost letter, the one applied first.
    pub fn final_letter(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// The family and its `N`; `None` for the identity.
    pub fn classify(&self) -> Option<(Family, i64)> {
        let len = self.len() as i64;
        match (self.final_letter()?, len % 2) {
            (Letter::S1, 1) => Some((Family::S1S0NS1, (len - 1) / 2)),
            (Letter::S1, _) => Some((Family::S0S1N, len / 2)),
            (Letter::S0, 0) => Some((Family::S1S0N, len / 2)),
            (Letter::S0, _) => Some((Family::S0S1S0N, (len + 1) / 2)),
        }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "s{}", l.index())?;
        }
        Ok(())
    }
}

/// A character relative to its highest weight, `e^{-Lambda} chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelChar {
    pub poly: CharPoly,
    pub weight: AffineWeight,
}

impl RelChar {
    /// The highest-weight monomial alone.
    pub fn highest(weight: AffineWeight) -> Self {
        RelChar {
            poly: CharPoly::one(),
            weight,
        }
    }
}

/// Applies the Demazure operator `D_j` monomial by monomial.
pub fn demazure_step(j: u8, c: &RelChar) -> Result<RelChar> {
    apply_letter(Letter::from_index(j)?, c)
}

fn apply_letter(letter: Letter, c: &RelChar) -> Result<RelChar> {
    let mut out = CharPoly::zero();
    for ((z2, d), coeff) in c.poly.terms() {
        if z2 % 2 != 0 {
            return Err(Error::invalid(
                "relative character has a half-integer z-exponent",
            ));
        }
        let p = c.weight.pairing(letter, z2);
        // Subtracting i alpha_1 moves (a, d) to (a + i, d); subtracting
        // i alpha_0 moves it to (a - i, d + i).
        let moved = |i: i64| match letter {
            Letter::S1 => (z2 + 2 * i, d),
            Letter::S0 => (z2 - 2 * i, d + i),
        };
        if p >= 0 {
            for i in 0..=p {
                let (nz, nd) = moved(i);
                out.add_term(nz, nd, coeff.clone());
            }
        } else if p <= -2 {
            for i in p + 1..=-1 {
                let (nz, nd) = moved(i);
                out.add_term(nz, nd, -coeff.clone());
            }
        }
    }
    Ok(RelChar {
        poly: out,
        weight: c.weight,
    })
}

/// `e^{-Lambda} D_w e^Lambda`, checked to be effective with degrees `d >= 0`.
pub fn demazure_char(w: &WeylWord, weight: AffineWeight) -> Result<RelChar> {
    let mut c = RelChar::highest(weight);
    for letter in w.letters().iter().rev() {
        c = apply_letter(*letter, &c)?;
    }
    if !c.poly.is_nonnegative() {
        return Err(Error::verification(format!(
            "Demazure character for w={w}, weight={weight} has a negative coefficient"
        )));
    }
    if c.poly.min_q_degree().is_some_and(|d| d < 0) {
        return Err(Error::verification(format!(
            "Demazure character for w={w}, weight={weight} has a negative degree"
        )));
    }
    Ok(c)
}

/// How a Demazure character is read off from a fusion character: each fusion
/// monomial `z^a q^d` becomes `z^{a + z_shift} q^{d - rotation * a + q_shift}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTransform {
    pub family: Family,
    pub steps: i64,
    /// Family and `N` after removing letters that act trivially on `Lambda`.
    pub effective: Option<(Family, i64)>,
    pub lw: AdmissionVector,
    pub rotation: i64,
    pub z_shift: i64,
    pub q_shift: i64,
}

impl FusionTransform {
    /// Applies the monomial substitution to a fusion character.
    pub fn apply(&self, fusion: &CharPoly) -> CharPoly {
        if self.effective.is_none() {
            return CharPoly::one();
        }
        let (r, za, qb) = (self.rotation, self.z_shift, self.q_shift);
        fusion.map_monomials(|z2, d| (z2 + 2 * za, d - r * (z2 / 2) + qb))
    }
}

/// When the pairing of `Lambda` with the rightmost simple coroot is zero, the
/// rightmost letter acts trivially and the word shortens by one.
fn effective_family(family: Family, steps: i64, weight: AffineWeight) -> Option<(Family, i64)> {
    let AffineWeight { m, n } = weight;
    match family {
        Family::S1S0NS1 if n == 0 => (steps >= 1).then_some((Family::S1S0N, steps)),
        Family::S0S1N if n == 0 => Some((Family::S0S1S0N, steps)),
        Family::S1S0N if m == 0 => Some((Family::S1S0NS1, steps - 1)),
        Family::S0S1S0N if m == 0 => (steps >= 2).then_some((Family::S0S1N, steps - 1)),
        _ => Some((family, steps)),
    }
}

/// The fusion data `L_w` and the monomial substitution for `V_w(Lambda)`.
pub fn fusion_transform(w: &WeylWord, weight: AffineWeight) -> Result<FusionTransform> {
    let (family, steps) = w
        .classify()
        .ok_or_else(|| Error::invalid("the identity word has no fusion description"))?;
    let level = weight.level();
    if level == 0 {
        return Err(Error::invalid(
            "weight (0,0) with a nontrivial word is not supported",
        ));
    }
    let (position, tail) = match family {
        Family::S1S0NS1 => (weight.n, 2 * steps),
        Family::S0S1N => (weight.n, 2 * steps - 1),
        Family::S1S0N => (weight.m, 2 * steps - 1),
        Family::S0S1S0N => (weight.m, 2 * steps - 2),
    };
    let mut entries = vec![0i64; level as usize];
    if position >= 1 {
        entries[position as usize - 1] += 1;
    }
    entries[level as usize - 1] += tail;
    let lw = AdmissionVector::new(entries)?;

    let effective = effective_family(family, steps, weight);
    let (rotation, z_shift, q_shift) = match effective {
        None => (0, 0, 0),
        Some((f, k)) => {
            let AffineWeight { m, n } = weight;
            match f {
                Family::S1S0NS1 | Family::S0S1N => {
                    (2 * k + 1, -level * k, k * k * m + k * (k + 1) * n)
                }
                Family::S1S0N | Family::S0S1S0N => {
                    (2 * k, -level * k + n, k * k * m + k * (k - 1) * n)
                }
            }
        }
    };
    Ok(FusionTransform {
        family,
        steps,
        effective,
        lw,
        rotation,
        z_shift,
        q_shift,
    })
}

/// The Demazure character computed through the fusion character of `L_w`.
pub fn fusion_to_demazure(w: &WeylWord, weight: AffineWeight) -> Result<RelChar> {
    let t = fusion_transform(w, weight)?;
    let poly = if t.effective.is_some() {
        t.apply(&fusion_char(&t.lw)?)
    } else {
        CharPoly::one()
    };
    Ok(RelChar { poly, weight })
}

/// Real character of `C^{d_1} (x) ... (x) C^{d_k}` as an sl2 module, with
/// doubled z-exponents.
pub fn tensor_char_sl2(dims: &[u64]) -> Result<CharPoly> {
    let mut out = CharPoly::one();
    for &dim in dims {
        if dim == 0 {
            return Err(Error::invalid("module dimensions must be positive"));
        }
        let top = dim as i64 - 1;
        let factor =
            CharPoly::from_terms((0..dim as i64).map(|k| ((2 * k - top, 0), BigInt::from(1))));
        out = &out * &factor;
    }
    Ok(out)
}

/// Dimensions of the tensor factors of `V_w(Lambda)` at `q = 1`:
/// `C^{m+1}` or `C^{n+1}` (by the last letter) times `l(w) - 1` copies of `C^{m+n+1}`.
pub fn factorization_dims(w: &WeylWord, weight: AffineWeight) -> Vec<u64> {
    let Some(last) = w.final_letter() else {
        return Vec::new();
    };
    let first = match last {
        Letter::S0 => weight.m + 1,
        Letter::S1 => weight.n + 1,
    } as u64;
    let mut dims = vec![first];
    dims.extend(core::iter::repeat_n(weight.level() as u64 + 1, w.len() - 1));
    dims
}
