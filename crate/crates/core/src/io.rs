//! Line-oriented text formats for algebras, modules, maps and idempotent
//! lists. `#` starts a comment; blank lines are ignored.
//!
//! ```text
//! field 2
//! dim 2
//! unit 1 0
//! mul 0 0 : 1 0
//! mul 0 1 : 0 1
//! mul 1 0 : 0 1
//! mul 1 1 : 0 0
//! ```
//!
//! Module files name their algebras by path, relative to the module file:
//! `over <file>` for the right algebra and, for bimodules, `left <file>`.
//! They carry `dim <m>`, every `ract i j : ...` row and, for bimodules,
//! every `lact i j : ...` row. Map files are `rows <r>`, `cols <c>` and then
//! `r` lines of `c` residues.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::algebra::Algebra;
use crate::error::Error;
use crate::linalg::{Matrix, PrimeField, Residue};
use crate::module::{Bimodule, RightModule};
use crate::slip::LinearMap;

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing entry ({0}, {1})")]
    MissingEntry(usize, usize),
    #[error("{}validation failed: {source}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Validation { line: Option<usize>, source: Error },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Nested { path: PathBuf, source: Box<ParseError> },
}

impl ParseError {
    /// The core error behind a validation failure, if any.
    pub fn core_error(&self) -> Option<&Error> {
        match self {
            ParseError::Validation { source, .. } => Some(source),
            ParseError::Nested { source, .. } => source.core_error(),
            _ => None,
        }
    }
}

pub type ParseResult<T> = std::result::Result<T, ParseError>;

fn syntax<T>(line: usize, msg: impl Into<String>) -> ParseResult<T> {
    Err(ParseError::Syntax { line, msg: msg.into() })
}

/// Non-comment lines as `(line number, tokens)`.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(n, l)| {
        let l = l.split('#').next().unwrap_or("");
        let toks: Vec<&str> = l.split_whitespace().collect();
        (!toks.is_empty()).then_some((n + 1, toks))
    })
}

fn parse_usize(line: usize, tok: &str) -> ParseResult<usize> {
    tok.parse().or_else(|_| syntax(line, format!("expected a non-negative integer, found `{tok}`")))
}

fn parse_residues(line: usize, field: PrimeField, toks: &[&str], expected: usize) -> ParseResult<Vec<Residue>> {
    if toks.len() != expected {
        return syntax(line, format!("expected {expected} residues, found {}", toks.len()));
    }
    toks.iter()
        .map(|t| {
            let v: u64 = t.parse().or_else(|_| syntax(line, format!("expected a residue, found `{t}`")))?;
            field.check(v).or_else(|_| syntax(line, format!("{v} is not reduced modulo {}", field.modulus())))
        })
        .collect()
}

fn single_value(line: usize, toks: &[&str]) -> ParseResult<usize> {
    if toks.len() != 2 {
        return syntax(line, format!("`{}` takes exactly one value", toks[0]));
    }
    parse_usize(line, toks[1])
}

fn set_once<T>(slot: &mut Option<(usize, T)>, line: usize, key: &str, value: T) -> ParseResult<()> {
    if slot.is_some() {
        return syntax(line, format!("duplicate `{key}`"));
    }
    *slot = Some((line, value));
    Ok(())
}

/// `<kw> i j : residues`, returning `(i, j, residue tokens)`.
fn indexed_row<'a>(line: usize, toks: &'a [&'a str]) -> ParseResult<(usize, usize, &'a [&'a str])> {
    if toks.len() < 4 || toks[3] != ":" {
        return syntax(line, format!("expected `{} <i> <j> : <residues>`", toks[0]));
    }
    Ok((parse_usize(line, toks[1])?, parse_usize(line, toks[2])?, &toks[4..]))
}

/// Dense table of rows indexed by `(i, j)` in `0..ni x 0..nj`.
struct Table {
    rows: BTreeMap<(usize, usize), (usize, Vec<Residue>)>,
}

impl Table {
    fn new() -> Self {
        Self { rows: BTreeMap::new() }
    }

    fn insert(
        &mut self,
        line: usize,
        key: &str,
        i: usize,
        j: usize,
        bounds: (usize, usize),
        v: Vec<Residue>,
    ) -> ParseResult<()> {
        if i >= bounds.0 || j >= bounds.1 {
            return syntax(line, format!("`{key} {i} {j}` is out of range"));
        }
        if self.rows.insert((i, j), (line, v)).is_some() {
            return syntax(line, format!("duplicate `{key} {i} {j}`"));
        }
        Ok(())
    }

    /// Concatenated rows in `(i, j)` order; the first gap is reported.
    fn flatten(&self, bounds: (usize, usize)) -> ParseResult<Vec<Residue>> {
        let mut out = Vec::new();
        for i in 0..bounds.0 {
            for j in 0..bounds.1 {
                let (_, v) = self.rows.get(&(i, j)).ok_or(ParseError::MissingEntry(i, j))?;
                out.extend_from_slice(v);
            }
        }
        Ok(out)
    }

    fn line_of(&self, i: usize, j: usize) -> Option<usize> {
        self.rows.get(&(i, j)).map(|(l, _)| *l)
    }
}

/// Parses an algebra and runs the axiom checks.
pub fn parse_algebra(text: &str) -> ParseResult<Algebra> {
    let mut field = None;
    let mut dim = None;
    let mut unit_tokens: Option<(usize, Vec<String>)> = None;
    let mut mul_lines: Vec<(usize, Vec<String>)> = Vec::new();
    for (line, toks) in lines(text) {
        match toks[0] {
            "field" => {
                let p = single_value(line, &toks)? as u64;
                let f = PrimeField::new(p).map_err(|e| ParseError::Validation { line: Some(line), source: e })?;
                set_once(&mut field, line, "field", f)?;
            }
            "dim" => {
                let d = single_value(line, &toks)?;
                if d == 0 {
                    return syntax(line, "dimension must be positive");
                }
                set_once(&mut dim, line, "dim", d)?;
            }
            "unit" => {
                let rest = toks[1..].iter().map(|s| s.to_string()).collect();
                set_once(&mut unit_tokens, line, "unit", rest)?;
            }
            "mul" => mul_lines.push((line, toks.iter().map(|s| s.to_string()).collect())),
            other => return syntax(line, format!("unknown keyword `{other}`")),
        }
    }
    let (_, field) = field.ok_or(ParseError::Syntax { line: 0, msg: "missing `field`".into() })?;
    let (_, d) = dim.ok_or(ParseError::Syntax { line: 0, msg: "missing `dim`".into() })?;
    let (unit_line, unit_toks) = unit_tokens.ok_or(ParseError::Syntax { line: 0, msg: "missing `unit`".into() })?;
    let unit_refs: Vec<&str> = unit_toks.iter().map(String::as_str).collect();
    let unit = parse_residues(unit_line, field, &unit_refs, d)?;

    let mut table = Table::new();
    for (line, toks) in &mul_lines {
        let refs: Vec<&str> = toks.iter().map(String::as_str).collect();
        let (i, j, rest) = indexed_row(*line, &refs)?;
        let v = parse_residues(*line, field, rest, d)?;
        table.insert(*line, "mul", i, j, (d, d), v)?;
    }
    let structure = table.flatten((d, d))?;
    let a = Algebra::from_parts_unchecked(field, d, structure, unit)
        .map_err(|e| ParseError::Validation { line: None, source: e })?;
    a.validate().map_err(|e| {
        let line = match e {
            Error::UnitAxiomViolated(_) => Some(unit_line),
            Error::NonAssociative(i, j, _) => table.line_of(i, j),
            _ => None,
        };
        ParseError::Validation { line, source: e }
    })?;
    Ok(a)
}

/// Canonical text form of an algebra.
pub fn serialize_algebra(a: &Algebra) -> String {
    let mut s = String::new();
    let d = a.dim();
    writeln!(s, "field {}", a.field().modulus()).unwrap();
    writeln!(s, "dim {d}").unwrap();
    writeln!(s, "unit {}", join(a.unit())).unwrap();
    for i in 0..d {
        for j in 0..d {
            writeln!(s, "mul {i} {j} : {}", join(a.basis_product(i, j))).unwrap();
        }
    }
    s
}

fn join(v: &[Residue]) -> String {
    v.iter().map(Residue::to_string).collect::<Vec<_>>().join(" ")
}

fn read(path: &Path) -> ParseResult<String> {
    std::fs::read_to_string(path).map_err(|e| ParseError::Io { path: path.to_path_buf(), source: e })
}

pub fn read_algebra(path: &Path) -> ParseResult<Algebra> {
    parse_algebra(&read(path)?).map_err(|e| nest(path, e))
}

fn nest(path: &Path, e: ParseError) -> ParseError {
    match e {
        e @ ParseError::Io { .. } => e,
        e => ParseError::Nested { path: path.to_path_buf(), source: Box::new(e) },
    }
}

/// A parsed module file.
#[derive(Clone, Debug)]
pub enum ModuleFile {
    Right(RightModule),
    Bi(Bimodule),
}

/// Parses a module file. `load` resolves the `over` and `left` references.
pub fn parse_module(text: &str, mut load: impl FnMut(&str) -> ParseResult<Algebra>) -> ParseResult<ModuleFile> {
    let mut over = None;
    let mut left = None;
    let mut dim = None;
    let mut field_line = None;
    let mut ract_lines = Vec::new();
    let mut lact_lines = Vec::new();
    for (line, toks) in lines(text) {
        match toks[0] {
            "over" | "left" => {
                if toks.len() != 2 {
                    return syntax(line, format!("`{}` takes one path", toks[0]));
                }
                let alg = load(toks[1])?;
                let slot = if toks[0] == "over" { &mut over } else { &mut left };
                set_once(slot, line, toks[0], alg)?;
            }
            "field" => set_once(&mut field_line, line, "field", single_value(line, &toks)?)?,
            "dim" => set_once(&mut dim, line, "dim", single_value(line, &toks)?)?,
            "ract" => ract_lines.push((line, toks.iter().map(|s| s.to_string()).collect::<Vec<_>>())),
            "lact" => lact_lines.push((line, toks.iter().map(|s| s.to_string()).collect::<Vec<_>>())),
            other => return syntax(line, format!("unknown keyword `{other}`")),
        }
    }
    let (_, over) = over.ok_or(ParseError::Syntax { line: 0, msg: "missing `over`".into() })?;
    let (_, m) = dim.ok_or(ParseError::Syntax { line: 0, msg: "missing `dim`".into() })?;
    let field = over.field();
    if let Some((line, p)) = field_line {
        if p as u64 != field.modulus() as u64 {
            return syntax(line, format!("field {p} does not match the algebra's field {}", field.modulus()));
        }
    }
    let table_of = |rows: &[(usize, Vec<String>)], key: &str, bounds: (usize, usize)| -> ParseResult<Table> {
        let mut t = Table::new();
        for (line, toks) in rows {
            let refs: Vec<&str> = toks.iter().map(String::as_str).collect();
            let (i, j, rest) = indexed_row(*line, &refs)?;
            t.insert(*line, key, i, j, bounds, parse_residues(*line, field, rest, m)?)?;
        }
        Ok(t)
    };
    let rtable = table_of(&ract_lines, "ract", (m, over.dim()))?;
    let raction = rtable.flatten((m, over.dim()))?;
    let first_line = |t: &Table| t.rows.values().map(|(l, _)| *l).min();
    match left {
        None => {
            if let Some((line, _)) = lact_lines.first() {
                return syntax(*line, "`lact` requires a `left` algebra");
            }
            let x = RightModule::from_parts_unchecked(over, m, raction)
                .map_err(|e| ParseError::Validation { line: None, source: e })?;
            x.validate().map_err(|e| {
                let line = match e {
                    Error::ModuleAxiomViolated { i, j, .. } => rtable.line_of(i, j),
                    _ => first_line(&rtable),
                };
                ParseError::Validation { line, source: e }
            })?;
            Ok(ModuleFile::Right(x))
        }
        Some((line, left)) => {
            if left.field() != field {
                return syntax(line, "left and right algebras have different fields");
            }
            let ltable = table_of(&lact_lines, "lact", (left.dim(), m))?;
            let laction = ltable.flatten((left.dim(), m))?;
            let b = Bimodule::from_parts_unchecked(left, over, m, laction, raction)
                .map_err(|e| ParseError::Validation { line: None, source: e })?;
            b.validate().map_err(|e| {
                let line = match e {
                    Error::ModuleAxiomViolated { side: "right", i, j, .. } => rtable.line_of(i, j),
                    Error::ModuleAxiomViolated { side: "left", i, j, .. } => ltable.line_of(i, j),
                    Error::UnitActionViolated { side: "right", .. } => first_line(&rtable),
                    Error::UnitActionViolated { .. } => first_line(&ltable),
                    _ => None,
                };
                ParseError::Validation { line, source: e }
            })?;
            Ok(ModuleFile::Bi(b))
        }
    }
}

/// Reads a module file, resolving algebra paths relative to it.
pub fn read_module(path: &Path) -> ParseResult<ModuleFile> {
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let text = read(path)?;
    parse_module(&text, |rel| read_algebra(&dir.join(rel))).map_err(|e| nest(path, e))
}

fn write_action(s: &mut String, key: &str, ni: usize, nj: usize, m: usize, t: &[Residue]) {
    for i in 0..ni {
        for j in 0..nj {
            let start = (i * nj + j) * m;
            writeln!(s, "{key} {i} {j} : {}", join(&t[start..start + m])).unwrap();
        }
    }
}

/// Text form of a right module whose algebra lives at `over`.
pub fn serialize_right_module(x: &RightModule, over: &str) -> String {
    let mut s = String::new();
    writeln!(s, "over {over}").unwrap();
    writeln!(s, "dim {}", x.dim()).unwrap();
    write_action(&mut s, "ract", x.dim(), x.base().dim(), x.dim(), x.raction());
    s
}

/// Text form of a bimodule whose algebras live at `left` and `over`.
pub fn serialize_bimodule(b: &Bimodule, left: &str, over: &str) -> String {
    let mut s = String::new();
    writeln!(s, "left {left}").unwrap();
    writeln!(s, "over {over}").unwrap();
    writeln!(s, "dim {}", b.dim()).unwrap();
    write_action(&mut s, "lact", b.left().dim(), b.dim(), b.dim(), b.laction());
    write_action(&mut s, "ract", b.dim(), b.right().dim(), b.dim(), b.raction());
    s
}

/// Parses a map file with entries reduced modulo the field's prime.
pub fn parse_map(text: &str, field: PrimeField) -> ParseResult<LinearMap> {
    let mut it = lines(text);
    let mut header = |key: &str| -> ParseResult<usize> {
        match it.next() {
            Some((line, toks)) if toks[0] == key => single_value(line, &toks),
            Some((line, _)) => syntax(line, format!("expected `{key}`")),
            None => syntax(0, format!("missing `{key}`")),
        }
    };
    let r = header("rows")?;
    let c = header("cols")?;
    let mut data = Vec::with_capacity(r * c);
    let mut count = 0;
    for (line, toks) in it {
        if count == r {
            return syntax(line, format!("more than {r} rows"));
        }
        data.extend(parse_residues(line, field, &toks, c)?);
        count += 1;
    }
    if count != r {
        return syntax(0, format!("expected {r} rows, found {count}"));
    }
    let m = Matrix::new(field, r, c, data).map_err(|e| ParseError::Validation { line: None, source: e })?;
    Ok(LinearMap::new(m))
}

pub fn serialize_map(psi: &LinearMap) -> String {
    let m = psi.matrix();
    let mut s = format!("rows {}\ncols {}\n", m.rows(), m.cols());
    for row in m.row_vectors() {
        writeln!(s, "{}", join(row)).unwrap();
    }
    s
}

pub fn read_map(path: &Path, field: PrimeField) -> ParseResult<LinearMap> {
    parse_map(&read(path)?, field).map_err(|e| nest(path, e))
}

/// One element per line.
pub fn parse_elements(text: &str, field: PrimeField, dim: usize) -> ParseResult<Vec<Vec<Residue>>> {
    lines(text).map(|(line, toks)| parse_residues(line, field, &toks, dim)).collect()
}

pub fn serialize_elements(elems: &[Vec<Residue>]) -> String {
    elems.iter().map(|e| join(e) + "\n").collect()
}

pub fn read_elements(path: &Path, field: PrimeField, dim: usize) -> ParseResult<Vec<Vec<Residue>>> {
    parse_elements(&read(path)?, field, dim).map_err(|e| nest(path, e))
}
