//! Subcommand dispatch.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use relhom::complexes::{
    complex_n_id, complex_n_pd, inf_n, is_n_exact_complex, sup_n, verify_complex_id, verify_complex_pd, BoundedComplex,
};
use relhom::formats::{load_algebra, load_complex, load_module, load_sequence};
use relhom::homalg::{ext, fpd, gldim, id, pd};
use relhom::quiveralg::BoundQuiverAlgebra;
use relhom::relhom::{
    is_n_exact, is_n_projective, n_ext, n_id, n_pd, n_pd_of, n_resolution, verify_degeneracy,
    verify_euler, verify_ext_oracle, verify_fpd_theorem, verify_pd_bounds, CheckReport, Level, RelStatus, TestClass,
};
use relhom::repmod::{Completeness, Inventory, Representation};
use relhom::singularity::{
    check_kernel_closure, n_singularity_vanishes, recollement_corollary_check, standard_gluings, RecollementReport,
    SingularityReason, CLOSURE_NOTE,
};
use relhom::verdict::{Answer, Bounds, DimValue, DimVerdict, Verdict, Witness};

use crate::cache::Cache;
use crate::output::Output;
use crate::{Cli, Command, Theorem};

/// Random complexes per level in the complex cross-checks.
const COMPLEX_SAMPLES: usize = 20;
const COMPLEX_SEED: u64 = 0x5eed;

struct Session<'a> {
    cli: &'a Cli,
    bounds: Bounds,
    cache: Cache,
}

fn dims(m: &Representation) -> String {
    let d: Vec<String> = m.dims().iter().map(|x| x.to_string()).collect();
    format!("({})", d.join(","))
}

fn required<'p>(path: &'p Option<PathBuf>, flag: &str) -> Result<&'p Path> {
    path.as_deref().with_context(|| format!("this command needs {flag} <file>"))
}

impl Session<'_> {
    fn algebra(&self) -> Result<Arc<BoundQuiverAlgebra>> {
        Ok(load_algebra(required(&self.cli.algebra, "--algebra")?)?)
    }

    fn level(&self) -> Result<Level> {
        self.cli.n.context("this command needs --n <int|inf>")
    }

    fn degree(&self) -> Result<usize> {
        self.cli.i.context("this command needs --i <int>")
    }

    /// `--n` when given, else the defaults of a suite.
    fn levels(&self, defaults: &[Level]) -> Vec<Level> {
        self.cli.n.map_or_else(|| defaults.to_vec(), |n| vec![n])
    }

    fn inventory(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<Arc<Inventory>> {
        Ok(Arc::new(self.cache.inventory(alg, self.bounds.dim_bound)?))
    }

    fn class(&self, alg: &Arc<BoundQuiverAlgebra>, n: Level) -> Result<TestClass> {
        Ok(TestClass::build(&self.inventory(alg)?, n, self.bounds))
    }

    fn module(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
        Ok(load_module(required(&self.cli.module, "--module")?, alg)?)
    }

    fn module2(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
        Ok(load_module(required(&self.cli.module2, "--module2")?, alg)?)
    }

    fn complex(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<BoundedComplex> {
        Ok(load_complex(required(&self.cli.complex, "--complex")?, alg)?)
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let bounds = Bounds::new(cli.dim_bound as usize, cli.cutoff);
    let cache = Cache::locate(cli.cache_dir.as_deref());
    let s = Session { cli, bounds, cache };
    let mut out = Output::new(cli.machine);
    let minimize = cli.minimize_precovers;
    match &cli.command {
        Command::Gldim => out.dim("gldim", &gldim(&s.algebra()?, bounds)),
        Command::Fpd => {
            let inv = s.inventory(&s.algebra()?)?;
            out.dim("fpd", &fpd(&inv, bounds));
            if !inv.is_complete() {
                out.caveat("the inventory is not certified complete; the value is a supremum over enumerated modules");
            }
        }
        Command::Indecs => indecs(&s, &mut out)?,
        Command::Pd => {
            let alg = s.algebra()?;
            out.dim("pd", &pd(&s.module(&alg)?, bounds));
        }
        Command::Id => {
            let alg = s.algebra()?;
            out.dim("id", &id(&s.module(&alg)?, bounds));
        }
        Command::Ext => {
            let alg = s.algebra()?;
            let i = s.degree()?;
            let k = ext(&s.module(&alg)?, &s.module2(&alg)?, i);
            out.dim(&format!("ext{i}"), &DimVerdict::new(DimValue::Finite(k), true, bounds));
        }
        Command::Npd => {
            let alg = s.algebra()?;
            let class = s.class(&alg, s.level()?)?;
            out.dim("npd", &n_pd(&s.module(&alg)?, &class));
        }
        Command::Nid => {
            let alg = s.algebra()?;
            let class = s.class(&alg, s.level()?)?;
            out.dim("nid", &n_id(&s.module(&alg)?, &class));
        }
        Command::Next => {
            let alg = s.algebra()?;
            let i = s.degree()?;
            let class = s.class(&alg, s.level()?)?;
            out.dim(&format!("next{i}"), &n_ext(&s.module(&alg)?, &s.module2(&alg)?, i, &class));
        }
        Command::Nexact => {
            let alg = s.algebra()?;
            let class = s.class(&alg, s.level()?)?;
            let (inj, surj) = load_sequence(required(&cli.seq, "--seq")?, &alg)?;
            out.verdict("nexact", &is_n_exact(&inj, &surj, &class)?);
        }
        Command::Nproj => {
            let alg = s.algebra()?;
            let class = s.class(&alg, s.level()?)?;
            out.verdict("nproj", &is_n_projective(&s.module(&alg)?, &class));
        }
        Command::Nresolve => {
            let alg = s.algebra()?;
            let class = s.class(&alg, s.level()?)?;
            let r = n_resolution(&s.module(&alg)?, &class, minimize);
            for (j, t) in r.terms.iter().enumerate() {
                out.data(format!("TERM {j} dims={}", dims(t)));
            }
            match r.status {
                RelStatus::Finite(m) => out.info(format!("resolution of length {m}")),
                RelStatus::Infinite { start, repeat } => {
                    out.info(format!("kernels {start} and {repeat} have isomorphic essential parts"))
                }
                RelStatus::CutoffReached(b) => out.info(format!("stopped after {b} kernels")),
            }
            out.dim("npd", &n_pd_of(&r, &class));
        }
        Command::Cinfo => {
            let alg = s.algebra()?;
            let class = s.class(&alg, s.level()?)?;
            let x = s.complex(&alg)?;
            for i in x.degrees() {
                out.info(format!("degree {i}: term {} homology {:?}", dims(&x.term(i)), x.homology_dims(i)));
            }
            out.int("inf", &inf_n(&x, &class));
            out.int("sup", &sup_n(&x, &class));
            out.verdict("cexact", &is_n_exact_complex(&x, &class));
        }
        Command::Cnpd => {
            let alg = s.algebra()?;
            let class = s.class(&alg, s.level()?)?;
            out.int("cnpd", &complex_n_pd(&s.complex(&alg)?, &class));
        }
        Command::Cnid => {
            let alg = s.algebra()?;
            let class = s.class(&alg, s.level()?)?;
            out.int("cnid", &complex_n_id(&s.complex(&alg)?, &class));
        }
        Command::Sing => {
            let inv = s.inventory(&s.algebra()?)?;
            sing(&inv, s.level()?, bounds, &mut out)?;
        }
        Command::Closure => {
            let inv = s.inventory(&s.algebra()?)?;
            let v = check_kernel_closure(&inv, s.level()?, bounds);
            out.verdict("closure", &v);
            if v.answer != Answer::Yes {
                out.caveat(CLOSURE_NOTE);
            }
        }
        Command::Recollement => {
            for n in s.levels(&[Level::Finite(0), Level::Finite(1), Level::Finite(2)]) {
                for r in recollement_reports(n, bounds)? {
                    recollement(&r, &mut out);
                }
            }
        }
        Command::Verify { theorem } => verify(&s, *theorem, &mut out)?,
    }
    Ok(out)
}

fn indecs(s: &Session<'_>, out: &mut Output) -> Result<()> {
    let inv = s.inventory(&s.algebra()?)?;
    for (i, m) in inv.modules().iter().enumerate() {
        out.data(format!("INDEC {i} dims={}", dims(m)));
    }
    let v = match inv.completeness() {
        Completeness::Complete(cert) => Verdict::yes(true, s.bounds).with_witness(Witness::Note(cert.clone())),
        Completeness::BestEffort => Verdict::yes(false, s.bounds),
    };
    out.verdict("complete", &v);
    if inv.uncertain_count() > 0 {
        out.caveat(&format!("{} members are indecomposable by randomized search only", inv.uncertain_count()));
    }
    Ok(())
}

fn sing(inv: &Arc<Inventory>, n: Level, bounds: Bounds, out: &mut Output) -> Result<()> {
    let r = n_singularity_vanishes(inv, n, bounds)?;
    out.dim("gldim", &r.gldim);
    out.dim(&format!("fd-gldim-n{n}"), &r.fd_n_gldim);
    out.verdict(&format!("sing-n{n}"), &r.vanishing);
    match r.reason {
        SingularityReason::NGldimFinite(_) => {
            out.info(format!("  {} relative resolutions re-verified", r.witnesses.len()))
        }
        SingularityReason::GldimInfinite => {
            if let Some(o) = &r.obstruction {
                out.info(format!("  obstruction: simple module {} of infinite relative projective dimension", dims(o)));
            }
        }
        SingularityReason::UnknownBeyondBound => {}
    }
    Ok(())
}

fn recollement_reports(n: Level, bounds: Bounds) -> Result<Vec<RecollementReport>> {
    standard_gluings()
        .iter()
        .map(|g| Ok(recollement_corollary_check(g.name, &g.gluing(), n, bounds)?))
        .collect()
}

fn decided(x: Option<bool>, bounds: Bounds) -> Verdict {
    match x {
        Some(true) => Verdict::yes(true, bounds),
        Some(false) => Verdict::no(true, bounds, Witness::Note("mismatch".into())),
        None => Verdict::unknown(bounds),
    }
}

fn recollement(r: &RecollementReport, out: &mut Output) {
    let bounds = r.glued.gldim.bounds;
    let name = r.name.replace(' ', "_");
    let finite = |x: Option<bool>| x.map_or("?", |f| if f { "finite" } else { "infinite" });
    out.info(format!(
        "{}: {} {}, {} {}, glued {}",
        r.name,
        r.left.name,
        finite(r.left.finite),
        r.right.name,
        finite(r.right.finite),
        finite(r.glued.finite)
    ));
    out.verdict(&format!("recollement:{name}:n{}", r.n), &decided(r.consistent, bounds));
    out.verdict(&format!("monotone:{name}:n{}", r.n), &decided(r.monotone, bounds));
}

fn verify(s: &Session<'_>, theorem: Theorem, out: &mut Output) -> Result<()> {
    let bounds = s.bounds;
    let all = [Level::Finite(0), Level::Finite(1), Level::Finite(2), Level::Infinite];
    let small = [Level::Finite(0), Level::Finite(1), Level::Finite(2)];
    if theorem == Theorem::RecollementCorollary {
        for n in s.levels(&small) {
            for r in recollement_reports(n, bounds)? {
                let mut check = CheckReport { name: "recollement-corollary".into(), hard: true, ..Default::default() };
                let name = r.name.clone();
                match r.consistent {
                    Some(true) => check.checked += 1,
                    Some(false) => {
                        check.checked += 1;
                        check.violations.push(format!("{name}: finiteness on the glued algebra disagrees"));
                    }
                    None => check.undecided += 1,
                }
                if r.monotone == Some(false) {
                    check.violations.push(format!("{name}: gldim of a side exceeds the glued gldim"));
                }
                out.check(&format!("verify:recollement-corollary:{}:n{n}", name.replace(' ', "_")), &check, bounds);
            }
        }
        return Ok(());
    }
    let alg = s.algebra()?;
    let inv = s.inventory(&alg)?;
    let question = |n: Option<Level>| match n {
        Some(n) => format!("verify:{}:n{n}", theorem_name(theorem)),
        None => format!("verify:{}", theorem_name(theorem)),
    };
    match theorem {
        Theorem::FpdEquiv => {
            for n in s.levels(&small) {
                let Some(k) = n.finite() else { bail!("fpd-equiv needs a finite --n") };
                let r = verify_fpd_theorem(&inv, k, bounds);
                out.info(format!("fPD = {}; P_{k} = P_{} on the inventory: {}", r.fpd.value, k + 1, r.classes_coincide.bounded));
                out.check(&question(Some(n)), &r.check, bounds);
            }
        }
        Theorem::PdBounds => {
            for n in s.levels(&all) {
                out.check(&question(Some(n)), &verify_pd_bounds(&TestClass::build(&inv, n, bounds)), bounds);
            }
        }
        Theorem::ExtOracle => {
            for n in s.levels(&all) {
                out.check(&question(Some(n)), &verify_ext_oracle(&TestClass::build(&inv, n, bounds)), bounds);
            }
        }
        Theorem::Cfpn => {
            for n in s.levels(&small) {
                let class = TestClass::build(&inv, n, bounds);
                out.check(&question(Some(n)), &verify_complex_pd(&class, COMPLEX_SAMPLES, COMPLEX_SEED), bounds);
            }
        }
        Theorem::Cfin => {
            for n in s.levels(&small) {
                let class = TestClass::build(&inv, n, bounds);
                out.check(&question(Some(n)), &verify_complex_id(&class, COMPLEX_SAMPLES, COMPLEX_SEED), bounds);
            }
        }
        Theorem::Euler => out.check(&question(None), &verify_euler(&inv), bounds),
        Theorem::N0Degeneracy => out.check(&question(None), &verify_degeneracy(&inv, bounds), bounds),
        Theorem::RecollementCorollary => unreachable!(),
    }
    Ok(())
}

fn theorem_name(t: Theorem) -> &'static str {
    match t {
        Theorem::FpdEquiv => "fpd-equiv",
        Theorem::PdBounds => "pd-bounds",
        Theorem::Cfpn => "cfpn",
        Theorem::Cfin => "cfin",
        Theorem::ExtOracle => "ext-oracle",
        Theorem::Euler => "euler",
        Theorem::N0Degeneracy => "n0-degeneracy",
        Theorem::RecollementCorollary => "recollement-corollary",
    }
}
