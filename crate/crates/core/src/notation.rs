//! Text conventions shared by permutations, words and canonical words.
//!
//! Compact notation writes single-digit entries as they are and wraps
//! multi-digit entries in parentheses, so `314627(10)589` is a permutation
//! of degree 10 and `[4·76·8·(10)·12]` is a word split into runs.

use crate::error::{Error, Result};

/// Separator printed between runs.
pub const RUN_SEPARATOR: char = '·';

pub fn letter(value: usize) -> String {
    if value < 10 {
        value.to_string()
    } else {
        format!("({value})")
    }
}

pub fn compact(values: &[usize]) -> String {
    values.iter().map(|&v| letter(v)).collect()
}

/// Parses an integer sequence given either separated (`3 1 4 6 2 7 10 5 8 9`,
/// `3,1,4`) or compact (`314627(10)589`, `[21·98·567·34]`).
///
/// Positions in errors are 1-based character columns of `text`.
pub fn parse_sequence(text: &str) -> Result<Vec<usize>> {
    let chars: Vec<(usize, char)> = text.chars().enumerate().map(|(i, c)| (i + 1, c)).collect();
    let mut body: &[(usize, char)] = &chars;
    while let Some((first, rest)) = body.split_first() {
        if first.1.is_whitespace() {
            body = rest;
        } else {
            break;
        }
    }
    while let Some((last, rest)) = body.split_last() {
        if last.1.is_whitespace() {
            body = rest;
        } else {
            break;
        }
    }
    if let [(_, '['), inner @ .., (_, ']')] = body {
        body = inner;
    } else if let Some(&(pos, c)) = body.iter().find(|(_, c)| *c == '[' || *c == ']') {
        return Err(Error::parse(pos, format!("unbalanced bracket '{c}'")));
    }

    let separated = body.iter().any(|(_, c)| c.is_whitespace() || *c == ',');
    if separated {
        parse_separated(body)
    } else {
        parse_compact(body)
    }
}

fn parse_separated(body: &[(usize, char)]) -> Result<Vec<usize>> {
    let mut values = Vec::new();
    let mut token = String::new();
    let mut start = 0;
    let flush = |token: &mut String, start: usize, values: &mut Vec<usize>| -> Result<()> {
        if !token.is_empty() {
            let value = token
                .parse::<usize>()
                .map_err(|_| Error::parse(start, format!("'{token}' is not a non-negative integer")))?;
            values.push(value);
            token.clear();
        }
        Ok(())
    };
    for &(pos, c) in body {
        if c.is_whitespace() || c == ',' {
            flush(&mut token, start, &mut values)?;
        } else {
            if token.is_empty() {
                start = pos;
            }
            token.push(c);
        }
    }
    flush(&mut token, start, &mut values)?;
    Ok(values)
}

fn parse_compact(body: &[(usize, char)]) -> Result<Vec<usize>> {
    let mut values = Vec::new();
    let mut iter = body.iter().copied();
    while let Some((pos, c)) = iter.next() {
        match c {
            '0'..='9' => values.push(c as usize - '0' as usize),
            '(' => {
                let mut digits = String::new();
                loop {
                    match iter.next() {
                        Some((_, ')')) => break,
                        Some((_, d)) if d.is_ascii_digit() => digits.push(d),
                        Some((p, d)) => return Err(Error::parse(p, format!("unexpected '{d}' inside parentheses"))),
                        None => return Err(Error::parse(pos, "unclosed parenthesis")),
                    }
                }
                if digits.is_empty() {
                    return Err(Error::parse(pos, "empty parentheses"));
                }
                values.push(digits.parse().map_err(|_| Error::parse(pos, "number too large"))?);
            }
            '·' | '.' => {}
            other => return Err(Error::parse(pos, format!("unexpected character '{other}'"))),
        }
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_wraps_multi_digit_values() {
        assert_eq!(compact(&[3, 1, 4, 6, 2, 7, 10, 5, 8, 9]), "314627(10)589");
        assert_eq!(compact(&[]), "");
    }

    #[test]
    fn parses_all_accepted_forms() {
        let expected = vec![3, 1, 4, 6, 2, 7, 10, 5, 8, 9];
        assert_eq!(parse_sequence("3 1 4 6 2 7 10 5 8 9").unwrap(), expected);
        assert_eq!(parse_sequence("3,1,4,6,2,7,10,5,8,9").unwrap(), expected);
        assert_eq!(parse_sequence(" 3, 1 ,4 6 2 7 10 5 8 9 ").unwrap(), expected);
        assert_eq!(parse_sequence("314627(10)589").unwrap(), expected);
        assert_eq!(parse_sequence("[21·98·567·34]").unwrap(), vec![2, 1, 9, 8, 5, 6, 7, 3, 4]);
        assert_eq!(parse_sequence("[4·76·8·(10)·12]").unwrap(), vec![4, 7, 6, 8, 10, 1, 2]);
        assert_eq!(parse_sequence("[]").unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn errors_carry_column() {
        assert_eq!(
            parse_sequence("3 1 x 2"),
            Err(Error::parse(5, "'x' is not a non-negative integer"))
        );
        assert!(matches!(parse_sequence("31(4"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_sequence("31a"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_sequence("[12"), Err(Error::Parse { position: 1, .. })));
    }
}
