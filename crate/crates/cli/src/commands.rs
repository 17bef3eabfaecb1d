use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use pcs_core::catalog::{Catalog, Witness};
use pcs_core::construct::{verify_base, BaseSequenceQuad};
use pcs_core::sds::{pcs_to_sds, sds_to_pcs, verify_sds, ParameterSet, SdsRecord};
use pcs_core::search::{
    exhaustive_pcs_with, exhaustive_sds_with, run_id, stochastic_sds_with, Observer, ProgressEvent, SearchConfig,
    SearchMode, SearchStatus,
};
use pcs_core::seqcore::{is_acs, is_pcs, nacf, pacf, ComplementarityReport, SequenceFamily, SequenceFile};
use pcs_core::{Error, Result, SdsFamily};

use crate::input::{detect, read, Artifact};
use crate::{exit_code, Common, Format};

fn emit(common: &Common, body: &str) -> Result<()> {
    match &common.output {
        Some(path) => fs::write(path, body)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn list(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

struct Check {
    kind: &'static str,
    params: String,
    ok: bool,
    detail: String,
}

fn complementarity(kind: &'static str, f: &SequenceFamily, r: &ComplementarityReport) -> Check {
    Check {
        kind,
        params: format!("p={} N={}", f.size(), f.length()),
        ok: r.holds,
        detail: match r.first_offender() {
            None => format!("sum {}", list(&r.sum)),
            Some(o) => format!("shift {} has residual {}", o.shift, o.residual),
        },
    }
}

fn check_sds(f: &SdsFamily) -> Check {
    let r = verify_sds(f);
    let feas = &r.feasibility;
    let detail = if r.degenerate {
        "degenerate modulus, no nonzero differences".to_string()
    } else if r.holds {
        format!(
            "constant profile {}; identities linear={} quadratic={} counting={}",
            f.lambda(),
            feas.linear,
            feas.quadratic,
            feas.counting.map_or("n/a".to_string(), |c| c.to_string())
        )
    } else {
        let m = r.first_mismatch.expect("failing report has a mismatch");
        format!(
            "difference {m} occurs {} times, expected {}",
            r.profile[m - 1],
            f.lambda()
        )
    };
    Check {
        kind: "sds",
        params: f.parameter_set().to_string(),
        ok: r.holds,
        detail,
    }
}

fn check_sequences(file: &SequenceFile) -> Result<Check> {
    match file.role() {
        Some("pcs") => {
            let f = file.family()?;
            Ok(complementarity("pcs", &f, &is_pcs(&f)))
        }
        Some("acs") => {
            let f = file.family()?;
            Ok(complementarity("acs", &f, &is_acs(&f)))
        }
        Some("golay") => {
            let f = file.family()?;
            if f.size() != 2 {
                return Err(Error::InvalidGolay(format!("expected 2 rows, found {}", f.size())));
            }
            Ok(complementarity("golay", &f, &is_acs(&f)))
        }
        Some("base") => {
            let q = BaseSequenceQuad::from_file(file)?;
            let r = verify_base(&q);
            Ok(Check {
                kind: "base",
                params: format!("BS({},{})", q.m(), q.n()),
                ok: r.holds,
                detail: match r.first_offender {
                    None => format!("sum {}", list(&r.sum)),
                    Some(o) => format!("shift {} has residual {}", o.shift, o.residual),
                },
            })
        }
        Some(other) => Err(Error::Parse {
            line: 1,
            msg: format!("unknown role {other:?}; expected pcs, acs, golay or base"),
        }),
        None => Err(Error::Parse {
            line: 1,
            msg: "sequence file is ambiguous without a '# role=pcs|acs|golay|base' header".into(),
        }),
    }
}

pub fn verify(files: &[PathBuf], common: &Common) -> Result<u8> {
    let mut records = Vec::new();
    let mut code = 0u8;
    for path in files {
        let name = path.display().to_string();
        let checked = read(path).and_then(|text| match detect(&text)? {
            Artifact::Sds(rec) => Ok(check_sds(&rec.family()?)),
            Artifact::Sequences(file) => check_sequences(&file),
        });
        match checked {
            Ok(c) => {
                if !c.ok {
                    code = code.max(1);
                }
                records.push(json!({
                    "file": name,
                    "kind": c.kind,
                    "params": c.params,
                    "ok": c.ok,
                    "detail": c.detail,
                }));
            }
            Err(e) => {
                code = code.max(exit_code(&e));
                records.push(json!({
                    "file": name,
                    "kind": "error",
                    "params": "",
                    "ok": false,
                    "detail": e.to_string(),
                }));
            }
        }
    }
    let body = match common.format {
        Format::Structured => to_json(&Value::Array(records)),
        Format::Text => records
            .iter()
            .map(|r| {
                let s = |k: &str| r[k].as_str().unwrap_or_default().to_string();
                let status = if r["ok"].as_bool() == Some(true) { "ok" } else { "FAIL" };
                let params = s("params");
                let sep = if params.is_empty() { "" } else { " " };
                format!("{}: {}{sep}{params} {status}: {}\n", s("file"), s("kind"), s("detail"))
            })
            .collect(),
    };
    emit(common, &body)?;
    Ok(code)
}

fn load_family(path: &Path) -> Result<SequenceFamily> {
    match detect(&read(path)?)? {
        Artifact::Sds(rec) => sds_to_pcs(&rec.family()?),
        Artifact::Sequences(file) => file.family(),
    }
}

pub fn corr(path: &Path, common: &Common) -> Result<u8> {
    let fam = load_family(path)?;
    let rows: Vec<(Vec<i64>, Vec<i64>)> = fam.members().iter().map(|s| (pacf(s).values, nacf(s).values)).collect();
    let sum = (fam.pacf_sum().values, fam.nacf_sum().values);
    let body = match common.format {
        Format::Structured => to_json(&json!({
            "rows": rows.iter().map(|(p, a)| json!({"periodic": p, "aperiodic": a})).collect::<Vec<_>>(),
            "sum": {"periodic": sum.0, "aperiodic": sum.1},
        })),
        Format::Text => {
            let mut s = String::new();
            for (i, (p, a)) in rows.iter().enumerate() {
                s.push_str(&format!("row {} periodic {}\n", i + 1, list(p)));
                s.push_str(&format!("row {} aperiodic {}\n", i + 1, list(a)));
            }
            s.push_str(&format!("sum periodic {}\n", list(&sum.0)));
            s.push_str(&format!("sum aperiodic {}\n", list(&sum.1)));
            s
        }
    };
    emit(common, &body)?;
    Ok(0)
}

pub fn convert(path: &Path, common: &Common) -> Result<u8> {
    let body = match detect(&read(path)?)? {
        Artifact::Sds(rec) => {
            let fam = sds_to_pcs(&rec.family()?)?;
            match common.format {
                Format::Structured => to_json(&json!({
                    "role": "pcs",
                    "sequences": fam.members().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                })),
                Format::Text => SequenceFile::from_family(&fam).with_comment("role=pcs").render(),
            }
        }
        Artifact::Sequences(file) => {
            let sds = pcs_to_sds(&file.family()?)?;
            let rec = SdsRecord::from_family(&sds);
            match common.format {
                Format::Structured => rec.render_json() + "\n",
                Format::Text => rec.render_text(),
            }
        }
    };
    emit(common, &body)?;
    Ok(0)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Stochastic,
}

#[derive(Args)]
pub struct SearchArgs {
    /// Parameter set such as "(36;15,15,15;18)".
    #[arg(long, conflicts_with_all = ["p", "n"])]
    params: Option<String>,
    /// Number of sequences; with --n searches every feasible parameter set.
    #[arg(long, requires = "n")]
    p: Option<usize>,
    /// Sequence length.
    #[arg(long, requires = "p")]
    n: Option<usize>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Maximum number of candidate evaluations.
    #[arg(long)]
    budget: Option<u64>,
    /// Seed for the stochastic search (implies --mode stochastic).
    #[arg(long)]
    seed: Option<u64>,
    /// Symmetry pruning in the exhaustive search.
    #[arg(long, action = clap::ArgAction::Set, default_value_t = true)]
    prune: bool,
    #[arg(long)]
    islands: Option<usize>,
    #[arg(long)]
    time_limit_ms: Option<u64>,
    /// Print a progress line to standard error every this many evaluations.
    #[arg(long, default_value_t = 0)]
    progress: u64,
}

struct Progress(u64);

impl Observer for Progress {
    fn interval(&self) -> u64 {
        self.0
    }

    fn progress(&self, e: &ProgressEvent) {
        eprintln!("{}", e.line());
    }
}

fn config(args: &SearchArgs) -> Result<SearchConfig> {
    let mode = match (args.mode, args.seed) {
        (Some(Mode::Exhaustive), Some(_)) => {
            return Err(Error::Config("--seed implies stochastic mode".into()));
        }
        (Some(Mode::Stochastic), _) | (None, Some(_)) => SearchMode::Stochastic,
        _ => SearchMode::Exhaustive,
    };
    let mut cfg = match mode {
        SearchMode::Exhaustive => SearchConfig::exhaustive(),
        SearchMode::Stochastic => SearchConfig::stochastic(),
    }
    .with_prune(args.prune);
    if let Some(b) = args.budget {
        cfg = cfg.with_budget(b);
    }
    if let Some(s) = args.seed {
        cfg = cfg.with_seed(s);
    }
    if let Some(i) = args.islands {
        cfg = cfg.with_islands(i);
    }
    cfg.time_limit_ms = args.time_limit_ms;
    cfg.validate()?;
    Ok(cfg)
}

fn witness_text(w: &SdsFamily) -> String {
    SdsRecord::from_family(w).render_text()
}

pub fn search(args: &SearchArgs, common: &Common) -> Result<u8> {
    let cfg = config(args)?;
    let observer = Progress(args.progress);
    let (id, status, evaluations, witnesses, outcome) = match (&args.params, args.p, args.n) {
        (Some(ps), _, _) => {
            let ps: ParameterSet = ps.parse()?;
            let out = match cfg.mode {
                SearchMode::Exhaustive => exhaustive_sds_with(&ps, &cfg, &observer)?,
                SearchMode::Stochastic => stochastic_sds_with(&ps, &cfg, &observer)?,
            };
            let id = run_id(&format!("{:?}-sds", cfg.mode).to_lowercase(), &ps, &cfg);
            (
                id,
                out.status,
                out.stats.evaluations,
                out.witnesses.clone(),
                serde_json::to_value(&out)?,
            )
        }
        (None, Some(p), Some(n)) => {
            if cfg.mode != SearchMode::Exhaustive {
                return Err(Error::Config(
                    "--p/--n searches are exhaustive; use --params for stochastic".into(),
                ));
            }
            let out = exhaustive_pcs_with(p, n, &cfg, &observer)?;
            let id = run_id("exhaustive-pcs", &(p, n), &cfg);
            let ws: Vec<SdsFamily> = out.witnesses().cloned().collect();
            (id, out.status, out.evaluations(), ws, serde_json::to_value(&out)?)
        }
        _ => return Err(Error::Config("give --params or both --p and --n".into())),
    };
    let status_str = serde_json::to_value(status)?.as_str().unwrap_or_default().to_string();
    let body = match common.format {
        Format::Structured => to_json(&json!({
            "run_id": id,
            "config": serde_json::to_value(&cfg)?,
            "outcome": outcome,
        })),
        Format::Text => {
            let mut s = format!(
                "# run={id} status={status_str} evaluations={evaluations} witnesses={}\n# config {}\n",
                witnesses.len(),
                serde_json::to_string(&cfg)?
            );
            for (i, w) in witnesses.iter().enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                s.push_str(&witness_text(w));
            }
            s
        }
    };
    emit(common, &body)?;
    Ok(match status {
        SearchStatus::Found | SearchStatus::ExhaustedNone => 0,
        SearchStatus::BudgetExhausted => 0,
    })
}

fn load_catalog(dir: Option<&Path>) -> Result<Catalog> {
    match dir {
        Some(d) => Catalog::load_dir(d),
        None => Catalog::load_embedded(),
    }
}

pub fn table(pmax: usize, nmax: usize, dir: Option<&Path>, common: &Common) -> Result<u8> {
    let t = load_catalog(dir)?.table(pmax, nmax)?;
    let body = match common.format {
        Format::Text => t.render_text(),
        Format::Structured => t.render_json() + "\n",
    };
    emit(common, &body)?;
    Ok(0)
}

pub fn catalog(p: Option<usize>, n: Option<usize>, witness: bool, dir: Option<&Path>, common: &Common) -> Result<u8> {
    let cat = load_catalog(dir)?;
    let entries: Vec<_> = cat
        .entries()
        .filter(|e| p.is_none_or(|p| e.p == p) && n.is_none_or(|n| e.n == n))
        .collect();
    let body = match common.format {
        Format::Structured => {
            let v: Vec<Value> = entries
                .iter()
                .map(|e| {
                    let mut v = json!({
                        "p": e.p,
                        "n": e.n,
                        "status": e.status.as_str(),
                        "provenance": e.provenance.to_string(),
                    });
                    if witness {
                        v["witness"] = serde_json::to_value(&e.witness)?;
                    }
                    Ok(v)
                })
                .collect::<Result<_>>()?;
            to_json(&Value::Array(v))
        }
        Format::Text => {
            let mut s = String::new();
            for e in &entries {
                s.push_str(&format!("{} {} {} {}\n", e.p, e.n, e.status, e.provenance));
                if witness {
                    match &e.witness {
                        Some(Witness::Sds(f)) => s.push_str(&witness_text(f)),
                        Some(Witness::Sequences(f)) => s.push_str(&SequenceFile::from_family(f).render()),
                        None => {}
                    }
                }
            }
            s
        }
    };
    emit(common, &body)?;
    Ok(0)
}
