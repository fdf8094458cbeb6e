//! Reduced words written the way they are usually typeset.
//!
//! Letters are `s0` and `s1`. A power `^k` after a parenthesized group repeats
//! the group; after bare letters it repeats the run of letters since the
//! previous group or power, so `s1s0^2` is `s1s0s1s0` and `s1s0^2s1` is
//! `s1s0s1s0s1`. The identity is `1` or the empty string.

use fusionlab_core::affinechar::WeylWord;

pub fn parse_word(text: &str) -> Result<WeylWord, String> {
    let compact: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == ['1'] {
        return Ok(WeylWord::identity());
    }
    let mut pos = 0;
    let indices = sequence(&compact, &mut pos, 0)?;
    if pos != compact.len() {
        return Err(format!("unexpected '{}' in word '{text}'", compact[pos]));
    }
    WeylWord::from_indices(&indices).map_err(|e| e.to_string())
}

fn sequence(s: &[char], pos: &mut usize, depth: usize) -> Result<Vec<u8>, String> {
    let mut out = Vec::new();
    let mut run_start = 0;
    while *pos < s.len() {
        match s[*pos] {
            's' => {
                *pos += 1;
                let j = number(s, pos).ok_or("expected a letter index after 's'")?;
                let j = u8::try_from(j).map_err(|_| format!("no letter s{j}"))?;
                if j > 1 {
                    return Err(format!("no letter s{j}"));
                }
                out.push(j);
            }
            '(' => {
                *pos += 1;
                let group = sequence(s, pos, depth + 1)?;
                if s.get(*pos) != Some(&')') {
                    return Err("unbalanced '('".into());
                }
                *pos += 1;
                let k = power(s, pos)?.unwrap_or(1);
                for _ in 0..k {
                    out.extend_from_slice(&group);
                }
                run_start = out.len();
            }
            ')' if depth > 0 => return Ok(out),
            '^' => {
                let k = power(s, pos)?.expect("caret present");
                if run_start == out.len() {
                    return Err("'^' must follow a letter".into());
                }
                let run = out.split_off(run_start);
                for _ in 0..k {
                    out.extend_from_slice(&run);
                }
                run_start = out.len();
            }
            c => return Err(format!("unexpected '{c}' in word")),
        }
    }
    if depth > 0 {
        return Err("unbalanced '('".into());
    }
    Ok(out)
}

fn power(s: &[char], pos: &mut usize) -> Result<Option<usize>, String> {
    if s.get(*pos) != Some(&'^') {
        return Ok(None);
    }
    *pos += 1;
    number(s, pos)
        .map(Some)
        .ok_or_else(|| "expected an exponent after '^'".into())
}

fn number(s: &[char], pos: &mut usize) -> Option<usize> {
    let start = *pos;
    while *pos < s.len() && s[*pos].is_ascii_digit() {
        *pos += 1;
    }
    s[start..*pos].iter().collect::<String>().parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(indices: &[u8]) -> WeylWord {
        WeylWord::from_indices(indices).unwrap()
    }

    #[test]
    fn powers_repeat_runs_and_groups() {
        assert_eq!(parse_word("s1s0^2").unwrap(), word(&[1, 0, 1, 0]));
        assert_eq!(parse_word("s1s0^2s1").unwrap(), word(&[1, 0, 1, 0, 1]));
        assert_eq!(parse_word("s0(s1s0)^2").unwrap(), word(&[0, 1, 0, 1, 0]));
        assert_eq!(parse_word("(s0 s1)^3").unwrap(), word(&[0, 1, 0, 1, 0, 1]));
        assert_eq!(parse_word("s1s0^0s1").unwrap(), word(&[1]));
    }

    #[test]
    fn identity_spellings() {
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("1").unwrap().is_empty());
    }

    #[test]
    fn bad_words() {
        for w in [
            "s2", "s1s1", "s", "x", "(s1s0", "s1)s0", "^2", "s1^", "s1s0^2^",
        ] {
            assert!(parse_word(w).is_err(), "{w}");
        }
    }
}
