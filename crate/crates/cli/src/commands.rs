//! Subcommand bodies. Each returns the full output text so that printing
//! is the caller's only side effect.

use serde_json::{json, Value};

use qloci::formulas::{kpoly_component, kpoly_pipe, multidegree_component, multidegree_pipe, snake_dreams};
use qloci::lacing::{enum_kw, enum_w, minimal_seed};
use qloci::quiver::{codim, render_block_matrix, zelevinsky};
use qloci::verify::{run_suite, sweep_targets, Limits, Suite, SuiteReport, Target};
use qloci::{factorization, BipartiteQuiver, Error, LacingDiagram, LaurentPoly, OrbitData, PipeDream, SeqPerm};

use crate::input::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InvariantType {
    Multidegree,
    Kpolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Pipe,
    Component,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SetKind {
    Rpipes,
    Pipes,
    Wmin,
    Kw,
    Xomega,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteArg {
    Codim,
    Pipe,
    Component,
    Bijections,
    Ratio,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Codim => vec![Suite::Codim],
            SuiteArg::Pipe => vec![Suite::Pipe],
            SuiteArg::Component => vec![Suite::Component],
            SuiteArg::Bijections => vec![Suite::Bijections],
            SuiteArg::Ratio => vec![Suite::Ratio],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RenderObject {
    /// The input diagram, or a minimal diagram of the orbit.
    Lacing,
    /// The first reduced pipe dream, base crosses highlighted.
    Dream,
}

/// What a command produced, and whether it found a disagreement.
pub struct Output {
    pub text: String,
    pub verified: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, verified: true }
    }
}

fn unsupported(cmd: &str, format: Format) -> Error {
    Error::Parse(format!("{cmd} does not support --format {format:?}").to_lowercase())
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn orbit_json(q: &BipartiteQuiver, o: &OrbitData) -> Value {
    json!({"dy": q.dy(), "dx": q.dx(), "multiplicities": o.to_named(q)})
}

pub fn zelevinsky_cmd(inst: &Instance, format: Format) -> Result<Output, Error> {
    let (q, o) = (&inst.quiver, inst.require_orbit()?);
    let v = zelevinsky(q, o)?;
    let c = codim(q, o)?;
    let v_star = q.v_star();
    let d = q.d();
    match format {
        Format::Text => Ok(Output::ok(format!(
            "{v}, len={}, codim={c}\nv_* = {v_star}, len={}\n{}",
            v.length(),
            v_star.length(),
            render_block_matrix(q, &v)
        ))),
        Format::Json => Ok(Output::ok(json_text(&json!({
            "orbit": orbit_json(q, o),
            "zelevinsky": v.one_line(d),
            "length": v.length(),
            "v_star": v_star.one_line(d),
            "v_star_length": v_star.length(),
            "codim": c,
        })))),
        Format::Svg => Err(unsupported("zelevinsky", format)),
    }
}

pub fn invariant_cmd(
    inst: &Instance,
    kind: InvariantType,
    method: Method,
    limits: &Limits,
    format: Format,
) -> Result<Output, Error> {
    let (q, o) = (&inst.quiver, inst.require_orbit()?);
    let by_pipes = || -> Result<LaurentPoly, Error> {
        match kind {
            InvariantType::Multidegree => multidegree_pipe(q, o, limits.max_free_cells),
            InvariantType::Kpolynomial => kpoly_pipe(q, o, limits.max_free_cells),
        }
    };
    let by_components = || -> Result<LaurentPoly, Error> {
        match kind {
            InvariantType::Multidegree => multidegree_component(q, o),
            InvariantType::Kpolynomial => kpoly_component(q, o, limits.max_free_cells),
        }
    };
    let (pipe, component) = match method {
        Method::Pipe => (Some(by_pipes()?), None),
        Method::Component => (None, Some(by_components()?)),
        Method::Both => (Some(by_pipes()?), Some(by_components()?)),
    };
    let verdict = match (&pipe, &component) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let verified = verdict != Some(false);
    let verdict_word = |ok: bool| if ok { "EQUAL" } else { "UNEQUAL" };
    let text = match format {
        Format::Text => match (&pipe, &component, verdict) {
            (Some(a), Some(b), Some(ok)) => format!("pipe: {a}\ncomponent: {b}\n{}\n", verdict_word(ok)),
            (Some(p), None, _) | (None, Some(p), _) => format!("{p}\n"),
            _ => unreachable!("at least one method runs"),
        },
        Format::Json => {
            let mut v = json!({
                "orbit": orbit_json(q, o),
                "type": match kind {
                    InvariantType::Multidegree => "multidegree",
                    InvariantType::Kpolynomial => "kpolynomial",
                },
            });
            if let Some(p) = &pipe {
                v["pipe"] = json!(p.to_string());
            }
            if let Some(p) = &component {
                v["component"] = json!(p.to_string());
            }
            if let Some(ok) = verdict {
                v["verdict"] = json!(verdict_word(ok));
            }
            json_text(&v)
        }
        Format::Svg => return Err(unsupported("invariant", format)),
    };
    Ok(Output { text, verified })
}

fn dream_json(p: &PipeDream) -> Value {
    json!({"rows": p.rows(), "cols": p.cols(), "crosses": p.crosses().map(|(i, j)| [i, j]).collect::<Vec<_>>()})
}

fn seqperm_json(q: &BipartiteQuiver, s: &SeqPerm) -> Value {
    let comps: Vec<Vec<usize>> = s
        .components()
        .iter()
        .enumerate()
        .map(|(g, p)| {
            let (a, b) = q.gap_shape(g);
            p.one_line(a + b)
        })
        .collect();
    json!(comps)
}

enum Listing {
    Dreams(Vec<PipeDream>),
    Diagrams(Vec<LacingDiagram>),
    SeqPerms(Vec<SeqPerm>),
}

pub fn enumerate_cmd(inst: &Instance, set: SetKind, limits: &Limits, format: Format) -> Result<Output, Error> {
    let (q, o) = (&inst.quiver, inst.require_orbit()?);
    let mut listing = match set {
        SetKind::Rpipes => Listing::Dreams(snake_dreams(q, o, true, limits.max_free_cells)?),
        SetKind::Pipes => Listing::Dreams(snake_dreams(q, o, false, limits.max_free_cells)?),
        SetKind::Wmin => Listing::Diagrams(enum_w(q, o)?.0),
        SetKind::Kw => Listing::Diagrams(enum_kw(q, o)?.0),
        SetKind::Xomega => Listing::SeqPerms(factorization::x_omega(q, o)?),
    };
    match &mut listing {
        Listing::Dreams(v) => v.sort(),
        Listing::Diagrams(v) => v.sort(),
        Listing::SeqPerms(v) => v.sort(),
    }
    let name = format!("{set:?}").to_lowercase();
    let count = match &listing {
        Listing::Dreams(v) => v.len(),
        Listing::Diagrams(v) => v.len(),
        Listing::SeqPerms(v) => v.len(),
    };
    let text = match format {
        Format::Text => {
            let mut out = format!("{name}: {count}\n");
            match &listing {
                Listing::Dreams(v) => {
                    for p in v {
                        out += &format!("\n{}", p.to_ascii());
                    }
                }
                Listing::Diagrams(v) => {
                    for w in v {
                        out += &format!("\ncrossings={}\n{}", w.crossings(), w.describe(q));
                    }
                }
                Listing::SeqPerms(v) => {
                    for s in v {
                        out += &format!("{s}\n");
                    }
                }
            }
            out
        }
        Format::Json => {
            let items: Vec<Value> = match &listing {
                Listing::Dreams(v) => v.iter().map(dream_json).collect(),
                Listing::Diagrams(v) => v.iter().map(|w| json!(w.to_matrices())).collect(),
                Listing::SeqPerms(v) => v.iter().map(|s| seqperm_json(q, s)).collect(),
            };
            json_text(&json!({"orbit": orbit_json(q, o), "set": name, "count": count, "items": items}))
        }
        Format::Svg => return Err(unsupported("enumerate", format)),
    };
    Ok(Output::ok(text))
}

pub fn render_cmd(inst: &Instance, object: RenderObject, limits: &Limits, format: Format) -> Result<Output, Error> {
    let (q, o) = (&inst.quiver, inst.require_orbit()?);
    let text = match object {
        RenderObject::Lacing => {
            let w = match &inst.lacing {
                Some(w) => w.clone(),
                None => minimal_seed(q, o)?,
            };
            match format {
                Format::Svg => w.to_svg(q),
                Format::Text => format!("crossings={}\n{}", w.crossings(), w.describe(q)),
                Format::Json => json_text(&json!({"orbit": orbit_json(q, o), "lacing": w.to_matrices()})),
            }
        }
        RenderObject::Dream => {
            let mut dreams = snake_dreams(q, o, true, limits.max_free_cells)?;
            dreams.sort();
            let p = dreams.into_iter().next().ok_or_else(|| Error::InvalidOrbit("orbit has no pipe dreams".into()))?;
            match format {
                Format::Svg => p.to_svg(&q.p_star().crosses().collect()),
                Format::Text => p.to_ascii(),
                Format::Json => json_text(&json!({"orbit": orbit_json(q, o), "dream": dream_json(&p)})),
            }
        }
    };
    Ok(Output::ok(text))
}

fn report_json(r: &SuiteReport) -> Value {
    let mut v = serde_json::to_value(r).expect("reports serialize");
    // wall-clock time would make reports differ between runs
    v.as_object_mut().expect("object").remove("seconds");
    v
}

pub fn verify_cmd(
    inst: Option<&Instance>,
    suite: SuiteArg,
    max_n: usize,
    max_dim: usize,
    limits: &Limits,
    format: Format,
) -> Result<Output, Error> {
    let targets = match inst {
        Some(inst) => vec![Target {
            quiver: inst.quiver.clone(),
            orbits: match &inst.orbit {
                Some(o) => vec![o.clone()],
                None => OrbitData::enumerate(&inst.quiver),
            },
        }],
        None => sweep_targets(max_n, max_dim),
    };
    let reports: Vec<SuiteReport> = suite.suites().into_iter().map(|s| run_suite(s, &targets, limits)).collect();
    let passed = reports.iter().all(SuiteReport::passed);
    let text = match format {
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                out += &format!(
                    "{}: {} ({} instances, {} checks, {} failed, {} skipped)\n",
                    r.suite,
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.instances.len(),
                    r.checks,
                    r.failed,
                    r.skipped
                );
                for (i, c) in r.failures() {
                    let detail = c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default();
                    out += &format!("  FAIL {}: {}{detail}\n", i.label(), c.name);
                }
            }
            out += &format!("overall: {}\n", if passed { "PASS" } else { "FAIL" });
            out
        }
        Format::Json => json_text(&json!({
            "passed": passed,
            "suites": reports.iter().map(report_json).collect::<Vec<_>>(),
        })),
        Format::Svg => return Err(unsupported("verify", format)),
    };
    Ok(Output { text, verified: passed })
}
