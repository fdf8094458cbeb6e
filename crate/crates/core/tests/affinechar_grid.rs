mod support;

use fusionlab_core::affinechar::{
    demazure_char, demazure_step, factorization_dims, fusion_to_demazure, fusion_transform,
    tensor_char_sl2, AffineWeight, Family, RelChar, WeylWord,
};
use fusionlab_core::supernomial::{fusion_char, supernomial_char, AdmissionVector};
use fusionlab_core::CharPoly;
use proptest::prelude::*;
use support::figures::DEMAZURE_TABLE;

const FAMILIES: [Family; 4] = [
    Family::S1S0NS1,
    Family::S0S1N,
    Family::S1S0N,
    Family::S0S1S0N,
];

fn weight(m: i64, n: i64) -> AffineWeight {
    AffineWeight::new(m, n).unwrap()
}

/// Every non-identity word of the four families with `N <= max_steps`.
fn words(max_steps: i64) -> Vec<WeylWord> {
    let mut out = Vec::new();
    for f in FAMILIES {
        for k in 0..=max_steps {
            if let Ok(w) = WeylWord::family(f, k) {
                if !w.is_empty() && !out.contains(&w) {
                    out.push(w);
                }
            }
        }
    }
    out
}

#[test]
fn demazure_table_for_level_two() {
    let w = WeylWord::family(Family::S1S0N, 2).unwrap();
    let c = demazure_char(&w, weight(2, 0)).unwrap();
    assert_eq!(c.poly, support::table_char(DEMAZURE_TABLE));
    assert_eq!(c.poly.total_mass(), 81.into());
}

#[test]
fn reflection_identity_for_level_two() {
    // e^{-Lambda} chi = q^8 f_L(z, 1/q) with f_L the supernomial generating function of (0,4)
    let w = WeylWord::family(Family::S1S0N, 2).unwrap();
    let c = demazure_char(&w, weight(2, 0)).unwrap().poly;
    let f = supernomial_char(&AdmissionVector::new(vec![0, 4]).unwrap()).unwrap();
    assert_eq!(c, f.map_monomials(|z2, d| (z2, 8 - d)));
}

#[test]
fn rotation_identity_for_level_two() {
    // e^{-Lambda} chi = z^{-4} q^8 chi(F(0,0,4))(z q^{-4}, q)
    let w = WeylWord::family(Family::S1S0N, 2).unwrap();
    let c = demazure_char(&w, weight(2, 0)).unwrap().poly;
    let fusion = fusion_char(&AdmissionVector::new(vec![0, 4]).unwrap()).unwrap();
    let rotated = fusion.map_monomials(|z2, d| (z2 - 8, d - 4 * (z2 / 2) + 8));
    assert_eq!(c, rotated);
    let t = fusion_transform(&w, weight(2, 0)).unwrap();
    assert_eq!((t.rotation, t.z_shift, t.q_shift), (4, -4, 8));
}

#[test]
fn fusion_description_on_the_grid() {
    for level in 1..=3 {
        for m in 0..=level {
            let lambda = weight(m, level - m);
            for w in words(3) {
                let direct = demazure_char(&w, lambda).unwrap();
                let via = fusion_to_demazure(&w, lambda).unwrap();
                assert_eq!(direct, via, "w={w} weight=({m},{})", level - m);
                assert!(direct.poly.is_nonnegative());
                assert_eq!(direct.poly.coeff(0, 0), 1.into());
                assert!(direct.poly.min_q_degree().unwrap() >= 0);
            }
        }
    }
}

#[test]
fn factorization_at_q_one_on_the_grid() {
    for level in 1..=3 {
        for m in 0..=level {
            let lambda = weight(m, level - m);
            for w in words(3) {
                let c = demazure_char(&w, lambda).unwrap().poly.at_q_one();
                let t = tensor_char_sl2(&factorization_dims(&w, lambda)).unwrap();
                assert_eq!(c.centered().unwrap(), t, "w={w} weight=({m},{})", level - m);
            }
        }
    }
}

#[test]
fn l_w_examples() {
    let w = WeylWord::family(Family::S1S0NS1, 2).unwrap();
    assert_eq!(
        fusion_transform(&w, weight(1, 1)).unwrap().lw.entries(),
        &[1, 4]
    );
    let w = WeylWord::family(Family::S1S0N, 2).unwrap();
    assert_eq!(
        fusion_transform(&w, weight(2, 0)).unwrap().lw.entries(),
        &[0, 4]
    );
    assert!(fusion_transform(&WeylWord::identity(), weight(1, 0)).is_err());
}

#[test]
fn zero_weight_gives_the_trivial_module() {
    let w = WeylWord::family(Family::S1S0N, 2).unwrap();
    assert_eq!(
        demazure_char(&w, weight(0, 0)).unwrap().poly,
        CharPoly::one()
    );
    assert!(fusion_to_demazure(&w, weight(0, 0)).is_err());
}

#[test]
fn words_parse_and_print() {
    let w = WeylWord::from_indices(&[1, 0, 1]).unwrap();
    assert_eq!(w.to_string(), "s1s0s1");
    assert_eq!(w.classify(), Some((Family::S1S0NS1, 1)));
    assert!(WeylWord::from_indices(&[0, 2]).is_err());
}

fn small_relchar() -> impl Strategy<Value = RelChar> {
    (
        0i64..3,
        0i64..3,
        prop::collection::vec(((-3i64..4, 0i64..4), -3i64..4), 0..6),
    )
        .prop_map(|(m, n, terms)| RelChar {
            poly: CharPoly::from_terms(terms.into_iter().map(|((a, d), c)| ((2 * a, d), c))),
            weight: AffineWeight::new(m, n).unwrap(),
        })
}

proptest! {
    #[test]
    fn demazure_steps_are_idempotent(c in small_relchar(), j in 0u8..2) {
        let once = demazure_step(j, &c).unwrap();
        let twice = demazure_step(j, &once).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn demazure_steps_are_linear(a in small_relchar(), b in small_relchar(), j in 0u8..2) {
        let b = RelChar { poly: b.poly, weight: a.weight };
        let sum = RelChar { poly: &a.poly + &b.poly, weight: a.weight };
        let lhs = demazure_step(j, &sum).unwrap().poly;
        let rhs = &demazure_step(j, &a).unwrap().poly + &demazure_step(j, &b).unwrap().poly;
        prop_assert_eq!(lhs, rhs);
    }
}
