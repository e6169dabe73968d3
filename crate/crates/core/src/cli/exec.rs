use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use super::ast::*;
use super::{parse_session, EXIT_COMPUTATION, EXIT_OK, EXIT_PARSE};
use crate::algebra::{build_algebra, LocalAlgebra};
use crate::error::Result;
use crate::exactmath::FieldCtx;
use crate::fpmodule::{self, AlgMatrix, FPModule};
use crate::groebner::Poly;
use crate::homdim::{
    self, AbDimVerdict, Certification, GdimVerdict, HomDimConfig, PValue, PerpVerdict,
};
use crate::paperlab::{self, JSConfig};
use crate::resolution::{self, FreeResolution};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub bound: usize,
    pub quiet: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 0,
            bound: 20,
            quiet: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub exit_code: i32,
    /// Human-readable output (empty with `quiet`).
    pub text: String,
    pub json: Value,
    pub diagnostics: Vec<String>,
}

impl RunOutcome {
    pub fn json_string(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("values serialize") + "\n"
    }
}

pub fn run_session(src: &str, opts: &RunOptions) -> RunOutcome {
    match parse_session(src) {
        Ok(s) => execute(&s, opts),
        Err(d) => RunOutcome {
            exit_code: EXIT_PARSE,
            text: String::new(),
            json: json!({
                "schema_version": SCHEMA_VERSION,
                "seed": opts.seed,
                "bound": opts.bound,
                "status": "parse_error",
                "error": d.to_string(),
                "results": [],
            }),
            diagnostics: vec![d.to_string()],
        },
    }
}

struct State {
    opts: RunOptions,
    alg: Option<Arc<LocalAlgebra>>,
    vars: Vec<String>,
    modules: BTreeMap<String, FPModule>,
    resolutions: BTreeMap<String, FreeResolution>,
    text: String,
}

/// Runs the statements in order; the first computation error stops the
/// session with exit code 1.
pub fn execute(session: &Session, opts: &RunOptions) -> RunOutcome {
    let mut st = State {
        opts: *opts,
        alg: None,
        vars: Vec::new(),
        modules: BTreeMap::new(),
        resolutions: BTreeMap::new(),
        text: String::new(),
    };
    let mut results = Vec::new();
    let mut failure = None;
    for (i, stmt) in session.statements.iter().enumerate() {
        match st.run(stmt) {
            Ok(v) => results.push(json!({
                "statement": i + 1,
                "input": stmt.to_string(),
                "result": v,
            })),
            Err(e) => {
                let line = session.positions.get(i).map_or(0, |p| p.line);
                failure = Some(format!("statement {} (line {line}): {e}", i + 1));
                break;
            }
        }
    }
    let (exit_code, status) = match &failure {
        None => (EXIT_OK, "ok"),
        Some(_) => (EXIT_COMPUTATION, "computation_error"),
    };
    RunOutcome {
        exit_code,
        text: if opts.quiet { String::new() } else { st.text },
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "seed": opts.seed,
            "bound": opts.bound,
            "status": status,
            "error": failure.clone(),
            "results": results,
        }),
        diagnostics: failure.into_iter().collect(),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

impl State {
    fn alg(&self) -> &Arc<LocalAlgebra> {
        self.alg.as_ref().expect("checked by the parser")
    }

    fn module(&self, name: &str) -> &FPModule {
        &self.modules[name]
    }

    fn config(&self) -> HomDimConfig {
        let d = HomDimConfig::default();
        HomDimConfig {
            bound: self.opts.bound.max(1),
            window: d.window.min(self.opts.bound.max(1)),
            seed: self.opts.seed,
            ..d
        }
    }

    fn poly(&self, e: &Expr) -> Poly {
        let alg = self.alg();
        let (ctx, n) = (alg.ctx(), self.vars.len());
        eval(e, ctx, n, &self.vars)
    }

    fn out(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn run(&mut self, stmt: &Stmt) -> Result<Value> {
        match stmt {
            Stmt::Ring {
                name,
                field,
                vars,
                ideal,
            } => {
                let ctx = field_ctx(*field)?;
                let polys: Vec<Poly> = ideal
                    .iter()
                    .map(|e| eval(e, ctx, vars.len(), vars))
                    .collect();
                let alg = Arc::new(build_algebra(vars, &polys)?);
                let stats = paperlab::ring_stats(&alg);
                self.out(format!(
                    "ring {name}: dim {}, m^{} = 0, socle dim {}, {}",
                    stats.dim,
                    stats.nilpotency_degree,
                    stats.socle_dim,
                    if stats.gorenstein {
                        "Gorenstein"
                    } else {
                        "not Gorenstein"
                    }
                ));
                self.out(format!("  basis: {}", stats.basis.join(", ")));
                self.alg = Some(alg);
                self.vars = vars.clone();
                Ok(json!({ "ring": name, "stats": stats }))
            }
            Stmt::Module { name, def } => {
                let m = self.build_module(def)?;
                self.out(format!(
                    "module {name}: kdim {}, {} generators, {} relations",
                    m.kdim(),
                    m.num_generators(),
                    m.num_relations()
                ));
                let v = json!({
                    "module": name,
                    "kdim": m.kdim(),
                    "generators": m.num_generators(),
                    "relations": m.num_relations(),
                    "min_generators": m.min_generators(),
                });
                self.resolutions.remove(name);
                self.modules.insert(name.clone(), m);
                Ok(v)
            }
            Stmt::Command(c) => self.command(c),
        }
    }

    fn build_module(&self, def: &ModuleExpr) -> Result<FPModule> {
        let alg = self.alg().clone();
        Ok(match def {
            ModuleExpr::Coker(rows) => {
                let cols = rows[0].len();
                let entries = rows
                    .iter()
                    .map(|r| r.iter().map(|e| alg.from_poly(&self.poly(e))).collect())
                    .collect();
                FPModule::coker(alg, AlgMatrix::from_rows(entries, cols))?
            }
            ModuleExpr::ResidueField => FPModule::residue_field(alg),
            ModuleExpr::Ring => FPModule::free(alg, 1),
            ModuleExpr::Syz(n, m) => fpmodule::syzygy(self.module(m), *n),
            ModuleExpr::Dual(m) => fpmodule::dual(self.module(m)),
            ModuleExpr::Sum(a, b) => fpmodule::direct_sum(self.module(a), self.module(b))?,
        })
    }

    fn command(&mut self, c: &Command) -> Result<Value> {
        let cfg = self.config();
        match c {
            Command::Resolve(name, n) => {
                let res = resolution::minimal_free_resolution(self.module(name), *n);
                let v = json!({
                    "module": name,
                    "betti": res.betti(),
                    "minimal": res.is_minimal(),
                    "exact": res.is_exact(),
                    "composites_vanish": res.composites_vanish(),
                });
                self.out(format!("resolution of {name} to F_{n}:"));
                let table = betti_table(res.betti());
                self.out(table);
                self.resolutions.insert(name.clone(), res);
                Ok(v)
            }
            Command::Betti(name) => {
                if !self.resolutions.contains_key(name) {
                    let res = resolution::minimal_free_resolution(self.module(name), cfg.bound);
                    self.resolutions.insert(name.clone(), res);
                }
                let betti = self.resolutions[name].betti().to_vec();
                self.out(format!("Betti numbers of {name}:"));
                self.out(betti_table(&betti));
                Ok(json!({ "module": name, "betti": betti }))
            }
            Command::Ext(m, n, lo, hi) => {
                let t = homdim::ext_table(self.module(m), self.module(n), *lo, *hi)?;
                self.out(format!("dim Ext^i({m}, {n}):"));
                for (i, d) in (t.lo..=t.hi).zip(&t.dims) {
                    self.out(format!("  {i:>3}  {d}"));
                }
                Ok(json!({ "source": m, "target": n, "table": t }))
            }
            Command::Gdim(name) => {
                let v = homdim::g_dimension(self.module(name), &cfg)?;
                self.out(format!("G-dimension of {name}: {}", gdim_text(&v)));
                Ok(json!({ "module": name, "verdict": v }))
            }
            Command::Abdim(name) => {
                let v = homdim::ab_dimension(self.module(name), &cfg)?;
                self.out(format!("AB-dimension of {name}: {}", abdim_text(&v)));
                for e in v.evidence() {
                    self.out(format!(
                        "  {:<10} kdim {:>3}  {}",
                        e.name,
                        e.kdim,
                        evidence_text(e)
                    ));
                }
                Ok(json!({ "module": name, "verdict": v }))
            }
            Command::Arc(name) => {
                let r = homdim::arc_check(self.module(name), &cfg)?;
                let first = match r.self_ext_first_nonzero {
                    Some(i) => format!("Ext^{i}({name}, {name}) != 0"),
                    None => format!("Ext^1..{}({name}, {name}) = 0", r.bound),
                };
                self.out(format!(
                    "ARC check for {name}: {first}; free: {}; dim Ext^1({name}, Ω{name}) = {}; consistent: {}",
                    r.free, r.syzygy_ext1, r.consistent
                ));
                Ok(json!({ "module": name, "report": r }))
            }
            Command::Period(name, max) => {
                let s = resolution::detect_periodicity(self.module(name), *max, cfg.seed);
                match s.period {
                    Some(p) => self.out(format!("{name} is periodic: Ω^{p} {name} ≅ {name}")),
                    None => self.out(format!("no period ≤ {max} certified for {name}")),
                }
                for a in &s.attempts {
                    self.out(format!("  p = {:>2}: {}", a.period, a.outcome));
                }
                Ok(json!({ "module": name, "search": s }))
            }
            Command::Socle => {
                let alg = self.alg().clone();
                let basis: Vec<String> = alg
                    .socle()
                    .columns()
                    .iter()
                    .map(|c| alg.element_to_string(c))
                    .collect();
                self.out(format!("socle (dim {}): {}", basis.len(), basis.join(", ")));
                Ok(json!({ "dim": basis.len(), "basis": basis }))
            }
            Command::Gorenstein => {
                let alg = self.alg().clone();
                let g = alg.is_gorenstein();
                self.out(format!("Gorenstein: {g} (socle dim {})", alg.socle_dim()));
                Ok(json!({ "gorenstein": g, "socle_dim": alg.socle_dim() }))
            }
            Command::ExampleJs(flags) => {
                let field = field_ctx(flags.field.unwrap_or(FieldSpec::Prime(7)))?;
                let alpha = match &flags.alpha {
                    Some(a) => field.from_bigint(a),
                    None => field.from_i64(3),
                };
                let cfg = JSConfig::from_scalar(field, alpha)?
                    .with_bound(flags.bound.unwrap_or(cfg.bound))
                    .with_seed(cfg.seed);
                let r = paperlab::run_js_experiment(&cfg)?;
                self.out(format!(
                    "example over {} with alpha = {} (order {})",
                    r.field,
                    r.alpha,
                    r.alpha_order.map_or("infinite".into(), |n| n.to_string())
                ));
                self.out(format!(
                    "  ring: dim {}, socle dim {}, Gorenstein {}",
                    r.ring.dim, r.ring.socle_dim, r.ring.gorenstein
                ));
                self.out(format!(
                    "  complex: {} spots, composites zero {}, exact {}, dual exact {}",
                    r.complex.spots.len(),
                    r.complex.composites_zero,
                    r.complex.exact,
                    r.complex.dual_exact
                ));
                self.out(format!(
                    "  M = coker d_1: kdim {}, Betti {:?}",
                    r.module.kdim, r.module.betti
                ));
                self.out(format!(
                    "  period: {}",
                    r.period
                        .period
                        .map_or("none certified".into(), |p| p.to_string())
                ));
                self.out(format!(
                    "  G-dimension: {}",
                    gdim_text(&r.total_reflexivity)
                ));
                self.out(format!("  AB-dimension: {}", abdim_text(&r.ab_dimension)));
                self.out(format!(
                    "  ARC: dim Ext^1(M, ΩM) = {}, consistent {}",
                    r.arc.syzygy_ext1, r.arc.consistent
                ));
                Ok(to_value(&r))
            }
        }
    }
}

fn field_ctx(f: FieldSpec) -> Result<FieldCtx> {
    match f {
        FieldSpec::Rationals => Ok(FieldCtx::Rationals),
        FieldSpec::Prime(p) => FieldCtx::prime(p),
    }
}

fn eval(e: &Expr, ctx: FieldCtx, n: usize, vars: &[String]) -> Poly {
    match e {
        Expr::Int(k) => Poly::constant(ctx, n, ctx.from_bigint(k)),
        Expr::Var(v) => Poly::var(
            ctx,
            n,
            vars.iter()
                .position(|x| x == v)
                .expect("checked by the parser"),
        ),
        Expr::Neg(a) => eval(a, ctx, n, vars).neg(),
        Expr::Add(a, b) => eval(a, ctx, n, vars).add(&eval(b, ctx, n, vars)),
        Expr::Sub(a, b) => eval(a, ctx, n, vars).sub(&eval(b, ctx, n, vars)),
        Expr::Mul(a, b) => eval(a, ctx, n, vars).mul(&eval(b, ctx, n, vars)),
        Expr::Pow(a, k) => eval(a, ctx, n, vars).pow(*k),
    }
}

fn betti_table(betti: &[usize]) -> String {
    let mut idx = String::from("  i:");
    let mut val = String::from("  β:");
    for (i, b) in betti.iter().enumerate() {
        let w = i.to_string().len().max(b.to_string().len());
        let _ = write!(idx, " {i:>w$}");
        let _ = write!(val, " {b:>w$}");
    }
    format!("{idx}\n{val}")
}

fn cert_text(c: &Certification) -> String {
    match c {
        Certification::Period { period } => format!("period {period}"),
        Certification::FiniteResolution { length } => format!("resolution of length {length}"),
        Certification::Window { bound } => format!("window up to {bound}"),
    }
}

fn gdim_text(v: &GdimVerdict) -> String {
    match v {
        GdimVerdict::Zero { certificate } => format!(
            "0 (M ≅ M** verified; Ext(M, R) vanishing by {}; Ext(M*, R) vanishing by {})",
            cert_text(&certificate.module_ext),
            cert_text(&certificate.dual_ext)
        ),
        GdimVerdict::MinusInfinity => "-inf (zero module)".into(),
        GdimVerdict::Unknown { clause, detail, .. } => {
            format!("unknown ({clause:?} fails: {detail})")
        }
    }
}

fn abdim_text(v: &AbDimVerdict) -> String {
    match v {
        AbDimVerdict::MinusInfinity => "-inf (zero module)".into(),
        AbDimVerdict::CertifiedZero { rule, formula, .. } => {
            format!("0, certified by {rule:?} ({formula})")
        }
        AbDimVerdict::Unknown { reason, .. } => format!("unknown ({reason})"),
    }
}

fn evidence_text(e: &homdim::SampleEvidence) -> String {
    if let Some(why) = &e.skipped {
        return format!("skipped: {why}");
    }
    let p = match e.p_value {
        Some(PValue::Vanishes {
            index,
            certification,
        }) => format!("P = {index} ({})", cert_text(&certification)),
        Some(PValue::UndeterminedAtLeast { bound }) => {
            format!("P undetermined (Ext nonzero near {bound})")
        }
        Some(PValue::MinusInfinity) => "P = -inf".into(),
        None => String::new(),
    };
    let perp = match e.in_perp {
        Some(PerpVerdict::CertifiedYes { .. }) => "in perp (certified)",
        Some(PerpVerdict::WindowYes { .. }) => "in perp (window)",
        Some(PerpVerdict::No { .. }) => "not in perp",
        None => "",
    };
    format!("{p}; {perp}")
}
