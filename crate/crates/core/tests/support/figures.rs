/// Supernomial generating function of L = (0,4): `(a, degree, coefficient)` with `z^a`, `a` in -4..=4.
#[allow(dead_code)]
pub const SUPERNOMIAL_TABLE: &[(i64, i64, u32)] = &[
    (-4, 0, 1),
    (-3, 0, 1),
    (-3, 1, 1),
    (-3, 2, 1),
    (-3, 3, 1),
    (-2, 0, 1),
    (-2, 1, 1),
    (-2, 2, 2),
    (-2, 3, 2),
    (-2, 4, 2),
    (-2, 5, 1),
    (-2, 6, 1),
    (-1, 0, 1),
    (-1, 1, 1),
    (-1, 2, 2),
    (-1, 3, 3),
    (-1, 4, 3),
    (-1, 5, 3),
    (-1, 6, 2),
    (-1, 7, 1),
    (0, 0, 1),
    (0, 1, 1),
    (0, 2, 2),
    (0, 3, 3),
    (0, 4, 4),
    (0, 5, 3),
    (0, 6, 3),
    (0, 7, 1),
    (0, 8, 1),
    (1, 0, 1),
    (1, 1, 1),
    (1, 2, 2),
    (1, 3, 3),
    (1, 4, 3),
    (1, 5, 3),
    (1, 6, 2),
    (1, 7, 1),
    (2, 0, 1),
    (2, 1, 1),
    (2, 2, 2),
    (2, 3, 2),
    (2, 4, 2),
    (2, 5, 1),
    (2, 6, 1),
    (3, 0, 1),
    (3, 1, 1),
    (3, 2, 1),
    (3, 3, 1),
    (4, 0, 1),
];

/// Graded character of the fusion module for L = (0,4): `(a, degree, coefficient)`.
#[allow(dead_code)]
pub const FUSION_TABLE: &[(i64, i64, u32)] = &[
    (0, 0, 1),
    (1, 1, 1),
    (1, 2, 1),
    (1, 3, 1),
    (1, 4, 1),
    (2, 2, 1),
    (2, 3, 1),
    (2, 4, 2),
    (2, 5, 2),
    (2, 6, 2),
    (2, 7, 1),
    (2, 8, 1),
    (3, 5, 1),
    (3, 6, 2),
    (3, 7, 3),
    (3, 8, 3),
    (3, 9, 3),
    (3, 10, 2),
    (3, 11, 1),
    (3, 12, 1),
    (4, 8, 1),
    (4, 9, 1),
    (4, 10, 3),
    (4, 11, 3),
    (4, 12, 4),
    (4, 13, 3),
    (4, 14, 2),
    (4, 15, 1),
    (4, 16, 1),
    (5, 13, 1),
    (5, 14, 2),
    (5, 15, 3),
    (5, 16, 3),
    (5, 17, 3),
    (5, 18, 2),
    (5, 19, 1),
    (5, 20, 1),
    (6, 18, 1),
    (6, 19, 1),
    (6, 20, 2),
    (6, 21, 2),
    (6, 22, 2),
    (6, 23, 1),
    (6, 24, 1),
    (7, 25, 1),
    (7, 26, 1),
    (7, 27, 1),
    (7, 28, 1),
    (8, 32, 1),
];

/// Demazure character of `(s1 s0)^2` at weight (2,0) relative to the highest weight: `(a, degree, coefficient)`.
#[allow(dead_code)]
pub const DEMAZURE_TABLE: &[(i64, i64, u32)] = &[
    (-4, 8, 1),
    (-3, 5, 1),
    (-3, 6, 1),
    (-3, 7, 1),
    (-3, 8, 1),
    (-2, 2, 1),
    (-2, 3, 1),
    (-2, 4, 2),
    (-2, 5, 2),
    (-2, 6, 2),
    (-2, 7, 1),
    (-2, 8, 1),
    (-1, 1, 1),
    (-1, 2, 2),
    (-1, 3, 3),
    (-1, 4, 3),
    (-1, 5, 3),
    (-1, 6, 2),
    (-1, 7, 1),
    (-1, 8, 1),
    (0, 0, 1),
    (0, 1, 1),
    (0, 2, 3),
    (0, 3, 3),
    (0, 4, 4),
    (0, 5, 3),
    (0, 6, 2),
    (0, 7, 1),
    (0, 8, 1),
    (1, 1, 1),
    (1, 2, 2),
    (1, 3, 3),
    (1, 4, 3),
    (1, 5, 3),
    (1, 6, 2),
    (1, 7, 1),
    (1, 8, 1),
    (2, 2, 1),
    (2, 3, 1),
    (2, 4, 2),
    (2, 5, 2),
    (2, 6, 2),
    (2, 7, 1),
    (2, 8, 1),
    (3, 5, 1),
    (3, 6, 1),
    (3, 7, 1),
    (3, 8, 1),
    (4, 8, 1),
];
