//! On-disk cache of indecomposable inventories keyed by algebra fingerprint
//! and dimension bound.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use relhom::formats::{parse_module, write_module};
use relhom::quiveralg::BoundQuiverAlgebra;
use relhom::repmod::{enumerate_indecomposables, Completeness, Inventory};

const HEADER: &str = "relhom-inventory 1";

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// `--cache-dir` first, then `RELHOM_CACHE`, then the user cache directory.
    pub fn locate(flag: Option<&Path>) -> Self {
        let dir = flag
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os("RELHOM_CACHE").map(PathBuf::from))
            .or_else(|| std::env::var_os("XDG_CACHE_HOME").map(|d| PathBuf::from(d).join("relhom")))
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("relhom")));
        Cache { dir }
    }

    fn path(&self, alg: &BoundQuiverAlgebra, d: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|dir| dir.join(format!("{}-d{d}.inv", alg.fingerprint())))
    }

    /// The inventory of `alg` up to dimension `d`, from disk when a valid
    /// entry exists.
    pub fn inventory(&self, alg: &Arc<BoundQuiverAlgebra>, d: usize) -> Result<Inventory> {
        let Some(path) = self.path(alg, d) else {
            return Ok(enumerate_indecomposables(alg, d));
        };
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(Some(inv)) = decode(&text, alg, d) {
                return Ok(inv);
            }
        }
        let inv = enumerate_indecomposables(alg, d);
        // a cache that cannot be written only costs time
        let _ = store(&path, &encode(&inv));
        Ok(inv)
    }
}

fn store(path: &Path, text: &str) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

pub fn encode(inv: &Inventory) -> String {
    let mut s = String::new();
    writeln!(s, "{HEADER}").unwrap();
    writeln!(s, "algebra {}", inv.algebra().fingerprint()).unwrap();
    writeln!(s, "dim-bound {}", inv.dim_bound()).unwrap();
    match inv.completeness() {
        Completeness::Complete(c) => writeln!(s, "completeness complete {c}").unwrap(),
        Completeness::BestEffort => writeln!(s, "completeness best-effort").unwrap(),
    }
    writeln!(s, "uncertain {}", inv.uncertain_count()).unwrap();
    writeln!(s, "modules {}", inv.len()).unwrap();
    for m in inv.modules() {
        s.push_str("module\n");
        s.push_str(&write_module(m));
        s.push_str("end\n");
    }
    s
}

/// `Ok(None)` for an entry belonging to another algebra or bound.
pub fn decode(text: &str, alg: &Arc<BoundQuiverAlgebra>, d: usize) -> Result<Option<Inventory>> {
    let mut lines = text.lines();
    let mut field = |key: &str| -> Result<String> {
        let line = lines.next().context("truncated cache entry")?;
        match line.strip_prefix(key) {
            Some(rest) => Ok(rest.trim().to_string()),
            None => bail!("expected `{key}` in cache entry, found `{line}`"),
        }
    };
    if field(HEADER)? != "" {
        bail!("unknown cache header");
    }
    if field("algebra")? != alg.fingerprint() || field("dim-bound")?.parse::<usize>()? != d {
        return Ok(None);
    }
    let completeness = match field("completeness")?.as_str() {
        "best-effort" => Completeness::BestEffort,
        c => match c.strip_prefix("complete ") {
            Some(cert) => Completeness::Complete(cert.to_string()),
            None => bail!("bad completeness `{c}`"),
        },
    };
    let uncertain: usize = field("uncertain")?.parse()?;
    let count: usize = field("modules")?.parse()?;
    let rest: Vec<&str> = lines.collect();
    let mut modules = Vec::with_capacity(count);
    let mut block = String::new();
    for line in rest {
        match line {
            "module" => block.clear(),
            "end" => modules.push(parse_module(&block, "cache", None, alg)?),
            l => {
                block.push_str(l);
                block.push('\n');
            }
        }
    }
    if modules.len() != count {
        bail!("cache entry lists {} modules, expected {count}", modules.len());
    }
    Ok(Some(Inventory::from_parts(alg.clone(), d, modules, completeness).with_uncertain_count(uncertain)))
}
