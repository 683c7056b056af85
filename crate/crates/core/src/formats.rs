//! Line-oriented text formats for algebras, modules, morphisms, short
//! exact sequences and complexes.
//!
//! Algebra files:
//!
//! ```text
//! field p=5
//! vertex 1
//! vertex 2
//! arrow a: 1 -> 2
//! relation 1*a.b + -1*c.d
//! nilbound 2
//! ```
//!
//! Module files list `dim <vertex> = <n>` and `map <arrow> = [[..],[..]]`
//! (rows index the target space). Morphism files name `source` and `target`
//! module files and give `vertex <v> = <matrix>`. Sequence files name `left`,
//! `middle`, `right` and give `inj <v> = ..` and `surj <v> = ..`. Complex
//! files give `term <degree> = <module file>` and
//! `diff <degree> = <morphism file>`. Paths are relative to the file that
//! names them; `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::complexes::BoundedComplex;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, PrimeField};
use crate::quiveralg::{BoundQuiverAlgebra, Quiver, RelationSpec};
use crate::repmod::{check_short_exact, Morphism, Representation};

struct Line<'a> {
    origin: &'a str,
    number: usize,
    keyword: &'a str,
    rest: &'a str,
}

impl Line<'_> {
    fn err(&self, msg: impl std::fmt::Display) -> Error {
        Error::Parse(format!("{}:{}: {msg}", self.origin, self.number))
    }

    /// Splits `lhs = rhs`.
    fn assignment(&self) -> Result<(&str, &str)> {
        self.rest
            .split_once('=')
            .map(|(l, r)| (l.trim(), r.trim()))
            .ok_or_else(|| self.err(format!("expected `{} <name> = <value>`", self.keyword)))
    }
}

fn lines<'a>(text: &'a str, origin: &'a str) -> impl Iterator<Item = Line<'a>> {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            return None;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        Some(Line { origin, number: i + 1, keyword, rest: rest.trim() })
    })
}

fn located(origin: &str, e: Error) -> Error {
    match e {
        Error::InvariantViolation(m) => Error::InvariantViolation(format!("{origin}: {m}")),
        Error::Shape(m) => Error::Shape(format!("{origin}: {m}")),
        Error::InvalidRelation(m) => Error::InvalidRelation(format!("{origin}: {m}")),
        other => other,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn relative(base: &Path, name: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(name)
}

fn parse_relation(line: &Line<'_>) -> Result<RelationSpec> {
    let mut terms = Vec::new();
    for term in line.rest.split('+') {
        let term = term.trim();
        let (coef, path) = match term.split_once('*') {
            Some((c, p)) => {
                let c: i64 = c.trim().parse().map_err(|_| line.err(format!("bad coefficient `{}`", c.trim())))?;
                (c, p.trim())
            }
            None => match term.strip_prefix('-') {
                Some(p) => (-1, p.trim()),
                None => (1, term),
            },
        };
        if path.is_empty() {
            return Err(line.err("empty path in relation"));
        }
        terms.push((coef, path.split('.').map(|s| s.trim().to_string()).collect()));
    }
    Ok(RelationSpec { terms })
}

/// Parses an algebra file.
pub fn parse_algebra(text: &str, origin: &str) -> Result<BoundQuiverAlgebra> {
    let mut field = None;
    let mut quiver = Quiver::new();
    let mut relations = Vec::new();
    let mut nilbound = None;
    for line in lines(text, origin) {
        match line.keyword {
            "field" => {
                let p = line
                    .rest
                    .strip_prefix("p=")
                    .and_then(|p| p.trim().parse::<u32>().ok())
                    .ok_or_else(|| line.err("expected `field p=<prime>`"))?;
                field = Some(PrimeField::new(p).map_err(|e| line.err(e))?);
            }
            "vertex" => {
                quiver.add_vertex(line.rest).map_err(|e| line.err(e))?;
            }
            "arrow" => {
                let (label, ends) = line.rest.split_once(':').ok_or_else(|| line.err("expected `arrow <label>: <src> -> <tgt>`"))?;
                let (s, t) = ends.split_once("->").ok_or_else(|| line.err("expected `<src> -> <tgt>`"))?;
                quiver.add_arrow(label.trim(), s.trim(), t.trim()).map_err(|e| line.err(e))?;
            }
            "relation" => relations.push((line.number, parse_relation(&line)?)),
            "nilbound" => {
                nilbound = Some(line.rest.parse::<usize>().map_err(|_| line.err("expected `nilbound <L>`"))?);
            }
            k => return Err(line.err(format!("unknown keyword `{k}`"))),
        }
    }
    let field = field.ok_or_else(|| Error::Parse(format!("{origin}: missing `field p=<prime>`")))?;
    let nilbound = nilbound.ok_or_else(|| Error::Parse(format!("{origin}: missing `nilbound <L>`")))?;
    let resolved = relations
        .iter()
        .map(|(n, r)| r.resolve(field, &quiver).map_err(|e| Error::Parse(format!("{origin}:{n}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    BoundQuiverAlgebra::build(field, quiver, resolved, nilbound).map_err(|e| located(origin, e))
}

pub fn load_algebra(path: &Path) -> Result<Arc<BoundQuiverAlgebra>> {
    Ok(Arc::new(parse_algebra(&read(path)?, &path.display().to_string())?))
}

fn parse_matrix(line: &Line<'_>, text: &str, field: PrimeField, shape: (usize, usize)) -> Result<Matrix> {
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(text).map_err(|e| line.err(format!("bad matrix `{text}`: {e}")))?;
    let (r, c) = shape;
    if rows.is_empty() && r * c == 0 {
        return Ok(Matrix::zeros(field, r, c));
    }
    let m = Matrix::from_rows(field, &rows).map_err(|e| line.err(e))?;
    if m.shape() != shape && !(r == rows.len() && c == 0) {
        return Err(line.err(format!("matrix must be {r}x{c}, got {}x{}", m.rows(), m.cols())));
    }
    if m.shape() != shape {
        return Ok(Matrix::zeros(field, r, c));
    }
    Ok(m)
}

fn format_matrix(m: &Matrix) -> String {
    let f = m.field();
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let e: Vec<String> = m.row(r).iter().map(|&x| f.signed(x).to_string()).collect();
            format!("[{}]", e.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn vertex_of(line: &Line<'_>, alg: &BoundQuiverAlgebra, label: &str) -> Result<usize> {
    alg.quiver().vertex_index(label).ok_or_else(|| line.err(format!("unknown vertex `{label}`")))
}

/// Checks an `algebra <file>` line against the algebra in use.
fn check_algebra_line(line: &Line<'_>, base: &Path, alg: &BoundQuiverAlgebra) -> Result<()> {
    let other = load_algebra(&relative(base, line.rest))?;
    if other.fingerprint() != alg.fingerprint() {
        return Err(line.err(format!("module is declared over `{}`, a different algebra", line.rest)));
    }
    Ok(())
}

/// Parses a module file. `base` resolves a declared `algebra` file, which
/// must agree with `alg`.
pub fn parse_module(text: &str, origin: &str, base: Option<&Path>, alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
    let q = alg.quiver();
    let field = alg.field();
    let mut dims = vec![0usize; q.num_vertices()];
    let mut maps: Vec<Option<(usize, String)>> = vec![None; q.num_arrows()];
    let all: Vec<Line<'_>> = lines(text, origin).collect();
    for line in &all {
        match line.keyword {
            "algebra" => {
                if let Some(b) = base {
                    check_algebra_line(line, b, alg)?;
                }
            }
            "dim" => {
                let (v, n) = line.assignment()?;
                let v = vertex_of(line, alg, v)?;
                dims[v] = n.parse().map_err(|_| line.err(format!("bad dimension `{n}`")))?;
            }
            "map" => {
                let (a, m) = line.assignment()?;
                let a = q.arrow_index(a).ok_or_else(|| line.err(format!("unknown arrow `{a}`")))?;
                maps[a] = Some((line.number, m.to_string()));
            }
            k => return Err(line.err(format!("unknown keyword `{k}`"))),
        }
    }
    let mut matrices = Vec::new();
    for (a, entry) in maps.iter().enumerate() {
        let arrow = q.arrow(a);
        let shape = (dims[arrow.target], dims[arrow.source]);
        matrices.push(match entry {
            Some((n, text)) => {
                let line = all.iter().find(|l| l.number == *n).expect("recorded line");
                parse_matrix(line, text, field, shape)?
            }
            None => Matrix::zeros(field, shape.0, shape.1),
        });
    }
    Representation::new(alg, dims, matrices).map_err(|e| located(origin, e))
}

pub fn load_module(path: &Path, alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
    parse_module(&read(path)?, &path.display().to_string(), Some(path), alg)
}

/// Writes a module in the module file format.
pub fn write_module(m: &Representation) -> String {
    let alg = m.algebra();
    let q = alg.quiver();
    let mut s = String::new();
    for (v, label) in q.vertices().iter().enumerate() {
        writeln!(s, "dim {label} = {}", m.dim_at(v)).unwrap();
    }
    for (a, arrow) in q.arrows().iter().enumerate() {
        writeln!(s, "map {} = {}", arrow.label, format_matrix(m.map(a))).unwrap();
    }
    s
}

/// Per-vertex matrices keyed by the given keyword prefix, e.g. `vertex 1 = ..`.
fn vertex_maps(
    all: &[Line<'_>],
    keyword: &str,
    alg: &BoundQuiverAlgebra,
    source: &Representation,
    target: &Representation,
) -> Result<Vec<Matrix>> {
    let field = alg.field();
    let mut out: Vec<Option<Matrix>> = vec![None; alg.num_vertices()];
    for line in all.iter().filter(|l| l.keyword == keyword) {
        let (v, m) = line.assignment()?;
        let v = vertex_of(line, alg, v)?;
        out[v] = Some(parse_matrix(line, m, field, (target.dim_at(v), source.dim_at(v)))?);
    }
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(v, m)| m.unwrap_or_else(|| Matrix::zeros(field, target.dim_at(v), source.dim_at(v))))
        .collect())
}

fn named_module(
    all: &[Line<'_>],
    keyword: &str,
    origin: &str,
    base: &Path,
    alg: &Arc<BoundQuiverAlgebra>,
) -> Result<Representation> {
    let line = all
        .iter()
        .find(|l| l.keyword == keyword)
        .ok_or_else(|| Error::Parse(format!("{origin}: missing `{keyword} <module file>`")))?;
    load_module(&relative(base, line.rest), alg)
}

fn check_keywords(all: &[Line<'_>], allowed: &[&str]) -> Result<()> {
    match all.iter().find(|l| !allowed.contains(&l.keyword)) {
        Some(l) => Err(l.err(format!("unknown keyword `{}`", l.keyword))),
        None => Ok(()),
    }
}

pub fn load_morphism(path: &Path, alg: &Arc<BoundQuiverAlgebra>) -> Result<Morphism> {
    let text = read(path)?;
    let origin = path.display().to_string();
    let all: Vec<Line<'_>> = lines(&text, &origin).collect();
    check_keywords(&all, &["algebra", "source", "target", "vertex"])?;
    let source = named_module(&all, "source", &origin, path, alg)?;
    let target = named_module(&all, "target", &origin, path, alg)?;
    let maps = vertex_maps(&all, "vertex", alg, &source, &target)?;
    Morphism::new(&source, &target, maps).map_err(|e| located(&origin, e))
}

/// Loads `0 -> A -> B -> C -> 0` and checks exactness.
pub fn load_sequence(path: &Path, alg: &Arc<BoundQuiverAlgebra>) -> Result<(Morphism, Morphism)> {
    let text = read(path)?;
    let origin = path.display().to_string();
    let all: Vec<Line<'_>> = lines(&text, &origin).collect();
    check_keywords(&all, &["algebra", "left", "middle", "right", "inj", "surj"])?;
    let a = named_module(&all, "left", &origin, path, alg)?;
    let b = named_module(&all, "middle", &origin, path, alg)?;
    let c = named_module(&all, "right", &origin, path, alg)?;
    let inj = Morphism::new(&a, &b, vertex_maps(&all, "inj", alg, &a, &b)?).map_err(|e| located(&origin, e))?;
    let surj = Morphism::new(&b, &c, vertex_maps(&all, "surj", alg, &b, &c)?).map_err(|e| located(&origin, e))?;
    check_short_exact(&inj, &surj).map_err(|e| located(&origin, e))?;
    Ok((inj, surj))
}

pub fn load_complex(path: &Path, alg: &Arc<BoundQuiverAlgebra>) -> Result<BoundedComplex> {
    let text = read(path)?;
    let origin = path.display().to_string();
    let all: Vec<Line<'_>> = lines(&text, &origin).collect();
    check_keywords(&all, &["algebra", "term", "diff"])?;
    let mut terms = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for line in &all {
        if line.keyword == "algebra" {
            continue;
        }
        let (deg, file) = line.assignment()?;
        let deg: i64 = deg.parse().map_err(|_| line.err(format!("bad degree `{deg}`")))?;
        let target = if line.keyword == "term" { &mut terms } else { &mut diffs };
        if target.insert(deg, (line.number, file.to_string())).is_some() {
            return Err(line.err(format!("degree {deg} given twice")));
        }
    }
    let Some((&lo, _)) = terms.first_key_value() else {
        return Ok(BoundedComplex::zero(alg));
    };
    let hi = *terms.last_key_value().unwrap().0;
    let mut modules = Vec::new();
    for d in lo..=hi {
        modules.push(match terms.get(&d) {
            Some((_, f)) => load_module(&relative(path, f), alg)?,
            None => Representation::zero(alg),
        });
    }
    let mut maps = Vec::new();
    for d in lo..hi {
        let (s, t) = (&modules[(d - lo) as usize], &modules[(d - lo + 1) as usize]);
        maps.push(match diffs.remove(&d) {
            Some((n, f)) => {
                let m = load_morphism(&relative(path, &f), alg)?;
                if m.source() != s || m.target() != t {
                    return Err(Error::Parse(format!("{origin}:{n}: differential {d} does not run from term {d} to term {}", d + 1)));
                }
                m
            }
            None => Morphism::zero(s, t),
        });
    }
    if let Some((d, (n, _))) = diffs.into_iter().next() {
        return Err(Error::Parse(format!("{origin}:{n}: differential {d} leaves the range of terms")));
    }
    BoundedComplex::new(alg, lo, modules, maps).map_err(|e| located(&origin, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn algebra_round_trip() {
        for alg in catalog::all() {
            let again = parse_algebra(&alg.canonical_text(), "mem").unwrap();
            assert_eq!(again.fingerprint(), alg.fingerprint());
            assert_eq!(again.dim(), alg.dim());
        }
    }

    #[test]
    fn a2_file_has_dimension_three() {
        let a = parse_algebra("field p=5\nvertex 1\nvertex 2\narrow a: 1 -> 2\nnilbound 2\n", "a2").unwrap();
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn module_round_trip() {
        let a = catalog::kronecker();
        for m in crate::repmod::enumerate_indecomposables(&a, 3).modules() {
            let again = parse_module(&write_module(m), "mem", None, &a).unwrap();
            assert_eq!(&again, m);
        }
    }

    #[test]
    fn relation_violation_is_reported() {
        let a = catalog::dual_numbers();
        let err = parse_module("dim 1 = 2\nmap x = [[0,1],[1,0]]\n", "bad.mod", None, &a).unwrap_err();
        match err {
            Error::InvariantViolation(m) => assert!(m.contains("bad.mod") && m.contains("x.x"), "{m}"),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn unknown_arrow_names_the_line() {
        let a = catalog::a2();
        let err = parse_module("dim 1 = 1\ndim 2 = 1\nmap z = [[1]]\n", "m.mod", None, &a).unwrap_err();
        assert_eq!(err, Error::Parse("m.mod:3: unknown arrow `z`".into()));
    }

    #[test]
    fn relation_syntax() {
        let text = "field p=5\nvertex 1\narrow x: 1 -> 1\nrelation x.x\nnilbound 3\n";
        assert_eq!(parse_algebra(text, "d").unwrap().dim(), 2);
        let text = "field p=5\nvertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation 1*a.b + -1*b.a\nnilbound 3\n";
        assert!(parse_algebra(text, "bad").is_err());
    }
}
