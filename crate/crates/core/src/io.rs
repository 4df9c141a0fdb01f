//! Reading and writing multiplication tables.
//!
//! The `.mt` text format:
//!
//! ```text
//! # name: S3
//! 6
//! colors: 0 0 0 1 1 1
//! 0 1 2 3 4 5
//! ...
//! ```
//!
//! Line 1 (after comments) is the order `n`, an optional `colors:` line
//! follows, then `n` rows of `n` entries; row `i` is left multiplication by
//! element `i`. Lines starting with `#` are ignored except `# name:`.
//! A JSON object `{order, table, colors?, name?}` is accepted in place of
//! the text format.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ColoredGroup, Group};

#[derive(Clone, Debug, Serialize, Deserialize)]
struct JsonGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    colors: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

/// Parses `.mt` text or its JSON mirror.
pub fn parse_str(text: &str) -> Result<ColoredGroup> {
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    let mut name = None;
    let mut order: Option<usize> = None;
    let mut colors: Option<Vec<u64>> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(v) = comment.trim().strip_prefix("name:") {
                name = Some(v.trim().to_string());
            }
            continue;
        }
        let Some(n) = order else {
            let n = line.parse::<usize>().map_err(|_| parse_err(line_no, 1, format!("expected order, found {line:?}")))?;
            if n == 0 {
                return Err(parse_err(line_no, 1, "order must be positive"));
            }
            order = Some(n);
            continue;
        };
        if let Some(rest) = line.strip_prefix("colors:") {
            if colors.is_some() || !rows.is_empty() {
                return Err(parse_err(line_no, 1, "colors line must directly follow the order"));
            }
            let offset = raw.len() - raw.trim_start().len() + "colors:".len();
            let c = numbers::<u64>(rest, line_no, offset)?;
            if c.len() != n {
                return Err(parse_err(line_no, 1, format!("colors line has {} entries, expected {n}", c.len())));
            }
            colors = Some(c);
            continue;
        }
        let offset = raw.len() - raw.trim_start().len();
        let row = numbers::<usize>(line, line_no, offset)?;
        if row.len() != n {
            return Err(parse_err(
                line_no,
                1,
                format!("row {} has {} entries, expected {n}", rows.len(), row.len()),
            ));
        }
        if rows.len() == n {
            return Err(parse_err(line_no, 1, format!("more than {n} rows")));
        }
        rows.push(row);
    }
    let n = order.ok_or_else(|| parse_err(1, 1, "missing order line"))?;
    if rows.len() != n {
        return Err(parse_err(text.lines().count(), 1, format!("found {} rows, expected {n}", rows.len())));
    }
    build(rows, colors, name)
}

fn numbers<T: std::str::FromStr>(s: &str, line: usize, offset: usize) -> Result<Vec<T>> {
    let mut out = Vec::new();
    let mut col = 0;
    for tok in s.split_whitespace() {
        // Column of this token within the original line, 1-based.
        col = s[col..].find(tok).map(|p| p + col).unwrap_or(col);
        let v = tok.parse::<T>().map_err(|_| parse_err(line, offset + col + 1, format!("not a number: {tok:?}")))?;
        out.push(v);
        col += tok.len();
    }
    Ok(out)
}

fn parse_json(text: &str) -> Result<ColoredGroup> {
    let j: JsonGroup =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    if j.table.len() != j.order {
        return Err(parse_err(1, 1, format!("table has {} rows, order is {}", j.table.len(), j.order)));
    }
    if let Some(c) = &j.colors {
        if c.len() != j.order {
            return Err(parse_err(1, 1, format!("{} colors for order {}", c.len(), j.order)));
        }
    }
    build(j.table, j.colors, j.name)
}

fn build(rows: Vec<Vec<usize>>, colors: Option<Vec<u64>>, name: Option<String>) -> Result<ColoredGroup> {
    let mut g = Group::validate(&rows)?;
    g.set_name(name);
    match colors {
        Some(c) => ColoredGroup::from_labels(g, &c),
        None => Ok(ColoredGroup::uniform(g)),
    }
}

pub fn parse_group(path: impl AsRef<Path>) -> Result<ColoredGroup> {
    let text = fs::read_to_string(path)?;
    parse_str(&text)
}

/// `.mt` text; the colors line is written only for non-uniform colorings.
pub fn to_mt_string(cg: &ColoredGroup) -> String {
    let n = cg.order();
    let mut s = String::with_capacity(n * n * 3 + 32);
    if let Some(name) = cg.group.name() {
        s.push_str(&format!("# name: {name}\n"));
    }
    s.push_str(&format!("{n}\n"));
    if !cg.is_uniform() {
        s.push_str("colors:");
        for c in &cg.colors {
            s.push_str(&format!(" {c}"));
        }
        s.push('\n');
    }
    for row in cg.group.table().chunks(n) {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

pub fn to_json_string(cg: &ColoredGroup) -> String {
    let j = JsonGroup {
        order: cg.order(),
        table: cg.group.rows(),
        colors: (!cg.is_uniform()).then(|| cg.colors.iter().map(|&c| c as u64).collect()),
        name: cg.group.name().map(str::to_string),
    };
    serde_json::to_string(&j).expect("serializable")
}

/// Writes JSON when the extension is `.json`, `.mt` text otherwise.
pub fn write_group(cg: &ColoredGroup, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text = if path.extension().is_some_and(|e| e == "json") { to_json_string(cg) } else { to_mt_string(cg) };
    fs::write(path, text)?;
    Ok(())
}

/// A group file found by [`scan_catalog`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub path: PathBuf,
    pub name: String,
    pub order: usize,
    /// `(order, index)` when the name or file stem carries one, as in
    /// `SmallGroup(128,171)` or `128_171.mt`.
    pub id: Option<(usize, usize)>,
}

/// Parses every `.mt` and `.json` file in `dir` (sorted by path).
pub fn scan_catalog(dir: impl AsRef<Path>) -> Result<Vec<CatalogEntry>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "mt" || e == "json"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        let cg = parse_group(&path)?;
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let name = cg.group.name().map(str::to_string).unwrap_or_else(|| stem.clone());
        let id = catalog_id(&name).or_else(|| catalog_id(&stem));
        if let Some((o, _)) = id {
            if o != cg.order() {
                return Err(Error::Invalid(format!("{}: id order {o} but table order {}", path.display(), cg.order())));
            }
        }
        out.push(CatalogEntry { path, name, order: cg.order(), id });
    }
    Ok(out)
}

/// Extracts `(order, index)` from `SmallGroup(a,b)`, `a_b` or `sg_a_b`.
pub fn catalog_id(s: &str) -> Option<(usize, usize)> {
    let pair = |a: &str, b: &str| Some((a.trim().parse().ok()?, b.trim().parse().ok()?));
    if let Some(start) = s.find("SmallGroup(") {
        let inner = &s[start + "SmallGroup(".len()..];
        let inner = &inner[..inner.find(')')?];
        let (a, b) = inner.split_once(',')?;
        return pair(a, b);
    }
    let s = s.strip_prefix("sg_").unwrap_or(s);
    let (a, b) = s.split_once('_')?;
    pair(a, b)
}
