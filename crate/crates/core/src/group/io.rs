//! Text format for permutation groups:
//!
//! ```text
//! # comment
//! degree 5
//! (1 2)
//! (1 2 3 4 5)
//! ```
//!
//! Points are 1-based. [`format_group_file`] emits the canonical form that
//! [`parse_group_file`] reads back unchanged.

use super::{GroupError, Permutation};

pub fn parse_group_file(text: &str) -> Result<(usize, Vec<Permutation>), GroupError> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let rest = line.strip_prefix("degree").ok_or_else(|| {
                    GroupError::Parse(format!("line {}: expected `degree N`", lineno + 1))
                })?;
                let n = rest.trim().parse::<usize>().map_err(|_| {
                    GroupError::Parse(format!("line {}: bad degree {:?}", lineno + 1, rest.trim()))
                })?;
                if n == 0 {
                    return Err(GroupError::Parse("degree must be positive".into()));
                }
                degree = Some(n);
            }
            Some(n) => gens.push(
                Permutation::parse_cycles(line, n)
                    .map_err(|e| GroupError::Parse(format!("line {}: {}", lineno + 1, e)))?,
            ),
        }
    }
    let degree = degree.ok_or_else(|| GroupError::Parse("missing `degree` line".into()))?;
    if gens.is_empty() {
        return Err(GroupError::NoGenerators);
    }
    Ok((degree, gens))
}

pub fn format_group_file(degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let text = "# S5\ndegree 5\n(1 2)   # a transposition\n\n(1 2 3 4 5)\n";
        let (n, gens) = parse_group_file(text).unwrap();
        assert_eq!(n, 5);
        assert_eq!(gens.len(), 2);
        assert_eq!(
            format_group_file(n, &gens),
            "degree 5\n(1 2)\n(1 2 3 4 5)\n"
        );
    }

    #[test]
    fn errors() {
        assert!(parse_group_file("(1 2)\n").is_err());
        assert!(parse_group_file("degree 3\n").is_err());
        assert!(parse_group_file("degree 3\n(1 4)\n").is_err());
        assert!(parse_group_file("degree x\n").is_err());
    }

    proptest! {
        #[test]
        fn canonical_text_round_trips(seeds in proptest::collection::vec(
            proptest::collection::vec(0u32..1000, 7), 1..4)) {
            let gens: Vec<Permutation> = seeds.iter().map(|keys| {
                let mut idx: Vec<u32> = (0..7).collect();
                idx.sort_by_key(|&i| (keys[i as usize], i));
                Permutation::from_images(idx).unwrap()
            }).collect();
            let text = format_group_file(7, &gens);
            let (n, parsed) = parse_group_file(&text).unwrap();
            prop_assert_eq!(n, 7);
            prop_assert_eq!(&parsed, &gens);
            prop_assert_eq!(format_group_file(n, &parsed), text);
        }
    }
}
