//! Character-table file syntax.
//!
//! ```text
//! group <name>
//! exponent <N>
//! classes
//!   <order> <size> <label>
//!   ...
//! end
//! class_order <label> ...          # optional: file labels in computed order
//! powermap <p>: <label>, ...       # one entry per file class
//! char <name>: <value>, ...        # values in file class order
//! real <complex name> <real name>  # optional naming of realified rows
//! ```
//!
//! `#` starts a comment. Values use the [`CycloNum`] text encoding.

use std::collections::BTreeMap;

use super::ChartabError;
use crate::exactnum::CycloNum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FileClass {
    pub(crate) order: u32,
    pub(crate) size: usize,
    pub(crate) label: String,
}

#[derive(Debug, Default)]
pub(crate) struct TableFile {
    pub(crate) name: String,
    pub(crate) exponent: u64,
    pub(crate) classes: Vec<FileClass>,
    pub(crate) class_order: Option<Vec<String>>,
    pub(crate) power_maps: BTreeMap<u64, Vec<String>>,
    pub(crate) chars: Vec<(String, Vec<CycloNum>)>,
    pub(crate) real_names: Vec<(String, String)>,
}

fn err(lineno: usize, msg: impl std::fmt::Display) -> ChartabError {
    ChartabError::Parse(format!("line {}: {msg}", lineno + 1))
}

/// Splits on `sep` outside parentheses.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn name_and_rest(rest: &str, lineno: usize) -> Result<(&str, &str), ChartabError> {
    let (name, values) = rest
        .split_once(':')
        .ok_or_else(|| err(lineno, "expected `:`"))?;
    Ok((name.trim(), values))
}

pub(crate) fn parse(text: &str) -> Result<TableFile, ChartabError> {
    let mut file = TableFile::default();
    let mut in_classes = false;
    let mut seen_exponent = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if in_classes {
            if line == "end" {
                in_classes = false;
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [order, size, label] = parts[..] else {
                return Err(err(lineno, "class rows are `<order> <size> <label>`"));
            };
            file.classes.push(FileClass {
                order: order.parse().map_err(|_| err(lineno, "bad class order"))?,
                size: size.parse().map_err(|_| err(lineno, "bad class size"))?,
                label: label.to_string(),
            });
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "group" => file.name = rest.to_string(),
            "exponent" => {
                file.exponent = rest.parse().map_err(|_| err(lineno, "bad exponent"))?;
                seen_exponent = true;
            }
            "classes" => in_classes = true,
            "class_order" => {
                file.class_order = Some(rest.split_whitespace().map(str::to_string).collect())
            }
            "powermap" => {
                let (p, labels) = name_and_rest(rest, lineno)?;
                let p: u64 = p.parse().map_err(|_| err(lineno, "bad prime"))?;
                let labels = split_top_level(labels, ',')
                    .into_iter()
                    .map(str::to_string)
                    .collect();
                if file.power_maps.insert(p, labels).is_some() {
                    return Err(err(lineno, format!("duplicate power map for {p}")));
                }
            }
            "char" => {
                let (name, values) = name_and_rest(rest, lineno)?;
                let values = split_top_level(values, ',')
                    .into_iter()
                    .map(|v| v.parse::<CycloNum>().map_err(|e| err(lineno, e)))
                    .collect::<Result<Vec<_>, _>>()?;
                file.chars.push((name.to_string(), values));
            }
            "real" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [complex, real] = parts[..] else {
                    return Err(err(lineno, "expected `real <complex> <real>`"));
                };
                file.real_names
                    .push((complex.to_string(), real.to_string()));
            }
            other => return Err(err(lineno, format!("unknown keyword `{other}`"))),
        }
    }
    if in_classes {
        return Err(ChartabError::Parse("unterminated `classes` block".into()));
    }
    if !seen_exponent {
        return Err(ChartabError::Parse("missing `exponent`".into()));
    }
    if file.classes.is_empty() {
        return Err(ChartabError::Parse("missing `classes` block".into()));
    }
    Ok(file)
}
