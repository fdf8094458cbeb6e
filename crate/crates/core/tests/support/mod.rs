//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's own builders.

#![allow(dead_code)]

pub mod figures;

use std::collections::BTreeMap;

use fusionlab_core::{CharPoly, QPoly};

/// Table entries `(a, degree, coefficient)` as a character with doubled z-exponents.
pub fn table_char(table: &[(i64, i64, u32)]) -> CharPoly {
    CharPoly::from_terms(table.iter().map(|&(a, d, c)| ((2 * a, d), c as i64)))
}

/// Inversion generating function of all 0/1 words with `k` ones and `total - k` zeros.
pub fn q_binomial_by_words(total: usize, k: usize) -> QPoly {
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let bits: Vec<u32> = (0..total).map(|i| (mask >> i) & 1).collect();
        *counts.entry(inversions(&bits)).or_default() += 1;
    }
    QPoly::from_terms(counts)
}

pub fn inversions<T: PartialOrd>(word: &[T]) -> i64 {
    let mut inv = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// Inversion counts of all words of length `n` over `letters` letters.
pub fn inversion_counts(letters: u32, n: u32) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for code in 0..letters.pow(n) {
        let word: Vec<u32> = (0..n).map(|i| (code / letters.pow(i)) % letters).collect();
        *out.entry(inversions(&word)).or_default() += 1;
    }
    out
}

/// Coefficients of `prod_j (1 + x + ... + x^j)^{L_j}`.
pub fn uniform_product(l: &[i64]) -> Vec<i128> {
    let mut p = vec![1i128];
    for (j, count) in l.iter().enumerate() {
        for _ in 0..*count {
            let mut next = vec![0i128; p.len() + j + 1];
            for (e, c) in p.iter().enumerate() {
                for s in 0..=j + 1 {
                    next[e + s] += c;
                }
            }
            p = next;
        }
    }
    p
}

/// All non-negative vectors with entry sum at most `max_sum` and length `1..=max_len`,
/// with a non-zero last entry.
pub fn admission_grid(max_sum: i64, max_len: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn rec(prefix: &mut Vec<i64>, left: i64, max_len: usize, out: &mut Vec<Vec<i64>>) {
        if !prefix.is_empty() && *prefix.last().unwrap() > 0 {
            out.push(prefix.clone());
        }
        if prefix.len() == max_len {
            return;
        }
        for v in 0..=left {
            prefix.push(v);
            rec(prefix, left - v, max_len, out);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), max_sum, max_len, &mut out);
    out
}

/// Number of non-negative integer matrices with the given row and column sums.
pub fn matrix_count(rows: &[usize], cols: &[usize]) -> u64 {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return 0;
    }
    fn fill_row(
        r: usize,
        c: usize,
        left_in_row: usize,
        rows: &[usize],
        cols: &mut Vec<usize>,
    ) -> u64 {
        if r == rows.len() {
            return cols.iter().all(|x| *x == 0) as u64;
        }
        if c + 1 == cols.len() {
            if left_in_row > cols[c] {
                return 0;
            }
            cols[c] -= left_in_row;
            let next = if r + 1 < rows.len() { rows[r + 1] } else { 0 };
            let n = fill_row(r + 1, 0, next, rows, cols);
            cols[c] += left_in_row;
            return n;
        }
        let mut total = 0;
        for v in 0..=left_in_row.min(cols[c]) {
            cols[c] -= v;
            total += fill_row(r, c + 1, left_in_row - v, rows, cols);
            cols[c] += v;
        }
        total
    }
    if rows.is_empty() {
        return cols.iter().all(|x| *x == 0) as u64;
    }
    if cols.is_empty() {
        return rows.iter().all(|x| *x == 0) as u64;
    }
    fill_row(0, 0, rows[0], rows, &mut cols.to_vec())
}

/// Semistandard tableaux of a shape with a given content, by filling cells
/// row by row with every value and checking the conditions.
pub fn ssyt_count(shape: &[usize], content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, len)| (0..*len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|len| vec![0; *len]).collect();
    let mut left = content.to_vec();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        left: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return left.iter().all(|x| *x == 0) as u64;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            left[v] -= 1;
            total += go(k + 1, cells, grid, left);
            left[v] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}
