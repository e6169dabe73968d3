//! Ext vanishing and the dimension theory built on it: `P(M, N)`, perp
//! membership, total reflexivity, AB-dimension verdicts and the
//! Auslander–Reiten consistency check.
//!
//! Everything here works over artinian local rings, where depth is `0`, so
//! finite G-dimension means G-dimension `0` and every finite value of
//! `P(M, N)` is `0`.

mod ext;

use serde::Serialize;

pub use ext::{ext_table, ext_table_from, ExtCalculator, ExtTable};

use crate::error::{Error, Result};
use crate::fpmodule::{self, FPModule, IsoOptions, IsoVerdict};
use crate::paperlab;
use crate::resolution::{detect_periodicity_in, FreeResolution};

/// Displayed wherever a verdict relies on the depth formula.
pub const DEPTH_FORMULA: &str = "depth R - depth M = 0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomDimConfig {
    /// Largest Ext index computed.
    pub bound: usize,
    /// Length of the tail window used when no period is known.
    pub window: usize,
    pub max_period: usize,
    pub seed: u64,
    pub trials: usize,
    pub random_samples: usize,
    /// Use a certified period to certify Ext vanishing and AB-dimension.
    pub period_shortcut: bool,
    /// Resolutions whose free ranks exceed this are abandoned.
    pub rank_limit: usize,
}

impl Default for HomDimConfig {
    fn default() -> Self {
        HomDimConfig {
            bound: 20,
            window: 8,
            max_period: 12,
            seed: 0,
            trials: fpmodule::DEFAULT_TRIALS,
            random_samples: 10,
            period_shortcut: true,
            rank_limit: 64,
        }
    }
}

impl HomDimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bound == 0 {
            return Err(Error::InvalidArgument("bound must be at least 1".into()));
        }
        if self.window == 0 || self.window > self.bound {
            return Err(Error::InvalidArgument(format!(
                "window {} must lie in 1..={}",
                self.window, self.bound
            )));
        }
        if self.max_period == 0 {
            return Err(Error::InvalidArgument(
                "max_period must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn iso_options(&self) -> IsoOptions {
        IsoOptions {
            seed: self.seed,
            trials: self.trials,
            ..IsoOptions::default()
        }
    }

    fn resolution(&self, m: &FPModule) -> FreeResolution {
        FreeResolution::start(m).with_rank_limit(self.rank_limit)
    }
}

/// Why a vanishing statement holds beyond the computed range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certification {
    /// `Ω^p M ≅ M` was certified, so `Ext^i ≅ Ext^{i+p}` for `i ≥ 1`.
    Period { period: usize },
    /// The minimal resolution stops (`F_length = 0`).
    FiniteResolution { length: usize },
    /// Only observed on a tail window ending at `bound`.
    Window { bound: usize },
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Certification::Window { .. })
    }
}

/// `P(M, N) = sup { i : Ext^i(M, N) ≠ 0 }` when `Ext^{≫0}(M, N) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PValue {
    MinusInfinity,
    Vanishes {
        index: usize,
        certification: Certification,
    },
    UndeterminedAtLeast {
        bound: usize,
    },
}

impl PValue {
    /// A certified vanishing with positive index contradicts the theory
    /// (periodicity or finite projective dimension forces index `0`).
    pub fn is_alarm(&self) -> bool {
        matches!(self, PValue::Vanishes { index, certification } if *index > 0 && certification.is_certified())
    }

    pub fn is_certified_zero(&self) -> bool {
        matches!(self, PValue::Vanishes { index: 0, certification } if certification.is_certified())
    }
}

/// Whether `N ∈ M^⊥`, i.e. `Ext^{≫0}(M, N) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PerpVerdict {
    CertifiedYes {
        certification: Certification,
    },
    WindowYes {
        bound: usize,
        window: usize,
    },
    /// `witness` is the largest computed index with `Ext ≠ 0`.
    No {
        witness: usize,
    },
}

impl PerpVerdict {
    pub fn is_yes(&self) -> bool {
        !matches!(self, PerpVerdict::No { .. })
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, PerpVerdict::CertifiedYes { .. })
    }
}

/// Ext dimensions `0..=hi` together with what is known past `hi`.
struct ExtProfile {
    dims: Vec<usize>,
    certification: Option<Certification>,
    // first index from which Ext is certified to vanish
    vanishing_from: Option<usize>,
    period: Option<usize>,
}

fn profile(
    res: &mut FreeResolution,
    n: &FPModule,
    bound: usize,
    period: Option<usize>,
) -> Result<ExtProfile> {
    let hi = match period {
        Some(p) => bound.max(p + 1),
        None => bound,
    };
    res.extend_to(hi + 1)?;
    let mut calc = ExtCalculator::new(res, n)?;
    let dims = calc.table(res, 0, hi)?.dims;

    if let Some(length) = res.betti().iter().position(|&b| b == 0) {
        return Ok(ExtProfile {
            dims,
            certification: Some(Certification::FiniteResolution { length }),
            vanishing_from: Some(length),
            period,
        });
    }
    if let Some(p) = period {
        for j in 0..=hi - p {
            if dims[j + 1..=j + p].iter().all(|&x| x == 0) {
                return Ok(ExtProfile {
                    dims,
                    certification: Some(Certification::Period { period: p }),
                    vanishing_from: Some(j + 1),
                    period,
                });
            }
        }
    }
    Ok(ExtProfile {
        dims,
        certification: None,
        vanishing_from: None,
        period,
    })
}

fn last_nonzero_below(dims: &[usize], end: usize) -> usize {
    (0..end.min(dims.len()))
        .rev()
        .find(|&i| dims[i] != 0)
        .unwrap_or(0)
}

impl ExtProfile {
    fn p_value(&self, window: usize) -> PValue {
        let hi = self.dims.len() - 1;
        if let (Some(c), Some(from)) = (self.certification, self.vanishing_from) {
            return PValue::Vanishes {
                index: last_nonzero_below(&self.dims, from),
                certification: c,
            };
        }
        let w = window.min(hi);
        // with a period and no zero window, Ext never vanishes
        if self.period.is_none() && self.dims[hi + 1 - w..].iter().all(|&x| x == 0) {
            PValue::Vanishes {
                index: last_nonzero_below(&self.dims, hi + 1 - w),
                certification: Certification::Window { bound: hi },
            }
        } else {
            PValue::UndeterminedAtLeast { bound: hi }
        }
    }

    fn perp(&self, bound: usize, window: usize) -> PerpVerdict {
        if let Some(c) = self.certification {
            return PerpVerdict::CertifiedYes { certification: c };
        }
        let hi = self.dims.len() - 1;
        let b = bound.min(hi);
        let w = window.min(b);
        if self.period.is_none() && self.dims[b + 1 - w..=b].iter().all(|&x| x == 0) {
            PerpVerdict::WindowYes {
                bound: b,
                window: w,
            }
        } else {
            PerpVerdict::No {
                witness: last_nonzero_below(&self.dims, b + 1),
            }
        }
    }
}

/// `P(M, N)` computed on `[0, bound]`, using the resolution `res` of `M`.
/// A certified `period` of `M` lets one window of zeros certify vanishing.
pub fn p_value_from(
    res: &mut FreeResolution,
    n: &FPModule,
    bound: usize,
    window: usize,
    period: Option<usize>,
) -> Result<PValue> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    if res.module().is_zero() || n.is_zero() {
        return Ok(PValue::MinusInfinity);
    }
    Ok(profile(res, n, bound, period)?.p_value(window))
}

pub fn p_value(m: &FPModule, n: &FPModule, bound: usize, period: Option<usize>) -> Result<PValue> {
    let window = HomDimConfig::default().window.min(bound);
    p_value_from(&mut FreeResolution::start(m), n, bound, window, period)
}

pub fn in_perp_from(
    res: &mut FreeResolution,
    n: &FPModule,
    bound: usize,
    window: usize,
    period: Option<usize>,
) -> Result<PerpVerdict> {
    if window == 0 || window > bound {
        return Err(Error::InvalidArgument(format!(
            "window {window} must lie in 1..={bound}"
        )));
    }
    Ok(profile(res, n, bound, period)?.perp(bound, window))
}

/// Is `N ∈ M^⊥`?
pub fn in_perp(
    n: &FPModule,
    m: &FPModule,
    bound: usize,
    window: usize,
    period: Option<usize>,
) -> Result<PerpVerdict> {
    in_perp_from(&mut FreeResolution::start(m), n, bound, window, period)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    Biduality,
    ModuleExt,
    DualExt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexivityCertificate {
    pub bound: usize,
    pub biduality_witness_verified: bool,
    pub module_ext: Certification,
    pub dual_ext: Certification,
    pub formula: &'static str,
}

impl ReflexivityCertificate {
    pub fn fully_certified(&self) -> bool {
        self.module_ext.is_certified() && self.dual_ext.is_certified()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GdimVerdict {
    Zero {
        certificate: ReflexivityCertificate,
    },
    MinusInfinity,
    Unknown {
        clause: Clause,
        witness_index: Option<usize>,
        detail: String,
    },
}

impl GdimVerdict {
    pub fn is_zero(&self) -> bool {
        matches!(self, GdimVerdict::Zero { .. })
    }
}

enum ExtClause {
    Vanishes(Certification),
    Fails(Option<usize>, String),
}

/// Checks `Ext^i(X, R) = 0` for `1 ≤ i ≤ bound`, stopping at the first
/// nonzero group, and tries to certify the rest through a period.
fn ext_into_ring(x: &FPModule, cfg: &HomDimConfig) -> Result<ExtClause> {
    let r = FPModule::free(x.algebra().clone(), 1);
    let mut res = cfg.resolution(x);
    let mut calc = ExtCalculator::new(&res, &r)?;
    for i in 1..=cfg.bound {
        match calc.dim(&mut res, i) {
            Ok(0) => {}
            Ok(d) => {
                return Ok(ExtClause::Fails(
                    Some(i),
                    format!("dim Ext^{i}(-, R) = {d}"),
                ))
            }
            Err(e @ Error::ResolutionTooLarge { .. }) => {
                return Ok(ExtClause::Fails(None, e.to_string()))
            }
            Err(e) => return Err(e),
        }
    }
    if let Some(length) = res.betti().iter().position(|&b| b == 0) {
        return Ok(ExtClause::Vanishes(Certification::FiniteResolution {
            length,
        }));
    }
    if cfg.period_shortcut {
        if let Some(p) = find_period(&mut res, cfg) {
            return Ok(ExtClause::Vanishes(Certification::Period { period: p }));
        }
    }
    Ok(ExtClause::Vanishes(Certification::Window {
        bound: cfg.bound,
    }))
}

fn find_period(res: &mut FreeResolution, cfg: &HomDimConfig) -> Option<usize> {
    res.extend_to(cfg.max_period + 1).ok()?;
    detect_periodicity_in(res, cfg.max_period, cfg.iso_options()).period
}

/// Certificate for `M ≅ M**` and `Ext^{1..B}(M, R) = Ext^{1..B}(M*, R) = 0`.
pub fn total_reflexivity(m: &FPModule, cfg: &HomDimConfig) -> Result<GdimVerdict> {
    cfg.validate()?;
    if m.is_zero() {
        return Ok(GdimVerdict::MinusInfinity);
    }
    let unknown = |clause, witness_index, detail| GdimVerdict::Unknown {
        clause,
        witness_index,
        detail,
    };
    let module_ext = match ext_into_ring(m, cfg)? {
        ExtClause::Vanishes(c) => c,
        ExtClause::Fails(i, why) => return Ok(unknown(Clause::ModuleExt, i, why)),
    };
    let dm = fpmodule::dual(m);
    let dual_ext = match ext_into_ring(&dm, cfg)? {
        ExtClause::Vanishes(c) => c,
        ExtClause::Fails(i, why) => return Ok(unknown(Clause::DualExt, i, why)),
    };
    let ddm = fpmodule::dual(&dm);
    match fpmodule::is_isomorphic_with(m, &ddm, cfg.iso_options())? {
        IsoVerdict::Yes(phi) => {
            let verified = fpmodule::verify_witness(m, &ddm, &phi);
            if !verified {
                return Ok(unknown(
                    Clause::Biduality,
                    None,
                    "witness failed verification".into(),
                ));
            }
            Ok(GdimVerdict::Zero {
                certificate: ReflexivityCertificate {
                    bound: cfg.bound,
                    biduality_witness_verified: verified,
                    module_ext,
                    dual_ext,
                    formula: DEPTH_FORMULA,
                },
            })
        }
        IsoVerdict::No(why) => Ok(unknown(
            Clause::Biduality,
            None,
            format!("M and M** differ: {why}"),
        )),
        IsoVerdict::Unknown => Ok(unknown(
            Clause::Biduality,
            None,
            "no isomorphism M -> M** found".into(),
        )),
    }
}

/// Over an artinian ring a finite G-dimension is `0`, so this is the total
/// reflexivity test.
pub fn g_dimension(m: &FPModule, cfg: &HomDimConfig) -> Result<GdimVerdict> {
    total_reflexivity(m, cfg)
}

/// Evidence gathered for one test module `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleEvidence {
    pub name: String,
    pub kdim: usize,
    pub p_value: Option<PValue>,
    pub in_perp: Option<PerpVerdict>,
    pub skipped: Option<String>,
}

/// `R`, `k`, `ΩM`, `Ω²M`, `M*`, `(ΩM)*` and seeded random modules; zero
/// modules are dropped.
pub fn default_sample_set(m: &FPModule, cfg: &HomDimConfig) -> Result<Vec<(String, FPModule)>> {
    let alg = m.algebra();
    let mut out = vec![
        ("R".to_string(), FPModule::free(alg.clone(), 1)),
        ("k".to_string(), FPModule::residue_field(alg.clone())),
    ];
    let mut res = cfg.resolution(m);
    if res.extend_to(3).is_ok() {
        let om = res.syzygy(1);
        out.push(("M*".into(), fpmodule::dual(m)));
        out.push(("(ΩM)*".into(), fpmodule::dual(&om)));
        out.push(("ΩM".into(), om));
        out.push(("Ω²M".into(), res.syzygy(2)));
    }
    for (i, n) in paperlab::sample_modules(alg, cfg.seed, cfg.random_samples, 2, 2)?
        .into_iter()
        .enumerate()
    {
        out.push((format!("random[{i}]"), n));
    }
    out.retain(|(_, n)| !n.is_zero());
    Ok(out)
}

fn gather_evidence(
    res: &mut FreeResolution,
    samples: &[(String, FPModule)],
    cfg: &HomDimConfig,
    period: Option<usize>,
) -> Result<Vec<SampleEvidence>> {
    let mut out = Vec::with_capacity(samples.len());
    for (name, n) in samples {
        let mut ev = SampleEvidence {
            name: name.clone(),
            kdim: n.kdim(),
            p_value: None,
            in_perp: None,
            skipped: None,
        };
        match profile(res, n, cfg.bound, period) {
            Ok(pr) => {
                ev.p_value = Some(pr.p_value(cfg.window));
                ev.in_perp = Some(pr.perp(cfg.bound, cfg.window));
            }
            Err(e @ Error::ResolutionTooLarge { .. }) => ev.skipped = Some(e.to_string()),
            Err(e) => return Err(e),
        }
        out.push(ev);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AbDimRule {
    /// Finite projective dimension: `P(M) = depth R - depth M`.
    FreeModule,
    /// Totally reflexive and periodic: every finite `P(M, N)` is `0`.
    Periodic { period: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AbDimVerdict {
    MinusInfinity,
    CertifiedZero {
        rule: AbDimRule,
        formula: &'static str,
        evidence: Vec<SampleEvidence>,
    },
    /// The true value may be `0` or infinite; `P(M)` ranges over all modules.
    Unknown {
        reason: String,
        gdim: GdimVerdict,
        period: Option<usize>,
        evidence: Vec<SampleEvidence>,
    },
}

impl AbDimVerdict {
    pub fn is_certified_zero(&self) -> bool {
        matches!(self, AbDimVerdict::CertifiedZero { .. })
    }

    pub fn evidence(&self) -> &[SampleEvidence] {
        match self {
            AbDimVerdict::MinusInfinity => &[],
            AbDimVerdict::CertifiedZero { evidence, .. }
            | AbDimVerdict::Unknown { evidence, .. } => evidence,
        }
    }
}

pub fn ab_dimension(m: &FPModule, cfg: &HomDimConfig) -> Result<AbDimVerdict> {
    let samples = if m.is_zero() {
        Vec::new()
    } else {
        default_sample_set(m, cfg)?
    };
    ab_dimension_with(m, cfg, &samples)
}

/// AB-dimension with an explicit sample set for the recorded evidence.
pub fn ab_dimension_with(
    m: &FPModule,
    cfg: &HomDimConfig,
    samples: &[(String, FPModule)],
) -> Result<AbDimVerdict> {
    cfg.validate()?;
    if m.is_zero() {
        return Ok(AbDimVerdict::MinusInfinity);
    }
    let mut res = cfg.resolution(m);
    if m.is_free() {
        let evidence = gather_evidence(&mut res, samples, cfg, None)?;
        return Ok(AbDimVerdict::CertifiedZero {
            rule: AbDimRule::FreeModule,
            formula: DEPTH_FORMULA,
            evidence,
        });
    }
    let gdim = g_dimension(m, cfg)?;
    let period = if gdim.is_zero() && cfg.period_shortcut {
        find_period(&mut res, cfg)
    } else {
        None
    };
    let evidence = gather_evidence(&mut res, samples, cfg, period)?;
    let alarm = evidence
        .iter()
        .find(|e| e.p_value.is_some_and(|p| p.is_alarm()));
    let reason = match (gdim.is_zero(), period, alarm) {
        (true, Some(p), None) => {
            return Ok(AbDimVerdict::CertifiedZero {
                rule: AbDimRule::Periodic { period: p },
                formula: DEPTH_FORMULA,
                evidence,
            })
        }
        (_, _, Some(e)) => format!("certified P(M, {}) > 0 contradicts periodicity", e.name),
        (false, _, _) => "G-dimension 0 not certified".to_string(),
        (true, None, _) if !cfg.period_shortcut => "period shortcut disabled".to_string(),
        (true, None, _) => format!("no period ≤ {} certified", cfg.max_period),
    };
    Ok(AbDimVerdict::Unknown {
        reason,
        gdim,
        period,
        evidence,
    })
}

/// Facts bearing on the Auslander–Reiten conjecture for `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcReport {
    pub bound: usize,
    /// Smallest `i ∈ [1, bound]` with `Ext^i(M, M) ≠ 0`.
    pub self_ext_first_nonzero: Option<usize>,
    pub self_ext_window_zero: bool,
    pub free: bool,
    /// `dim Ext^1(M, ΩM)`; nonzero for every non-free `M`.
    pub syzygy_ext1: usize,
    /// Only computed when `Ext^{1..B}(M, M) = 0`.
    pub ab_dim_certified_zero: Option<bool>,
    pub consistent: bool,
}

pub fn arc_check(m: &FPModule, cfg: &HomDimConfig) -> Result<ArcReport> {
    cfg.validate()?;
    let mut res = cfg.resolution(m);
    let mut calc = ExtCalculator::new(&res, m)?;
    let self_ext_first_nonzero = if m.is_zero() {
        None
    } else {
        calc.first_nonzero(&mut res, 1, cfg.bound)?
    };
    let self_ext_window_zero = self_ext_first_nonzero.is_none();
    let free = m.is_free();
    res.extend_to(2)?;
    let om = res.syzygy(1);
    let syzygy_ext1 = if om.is_zero() {
        0
    } else {
        ExtCalculator::new(&res, &om)?.dim(&mut res, 1)?
    };
    let ab_dim_certified_zero = if self_ext_window_zero && !free && !m.is_zero() {
        Some(ab_dimension_with(m, cfg, &[])?.is_certified_zero())
    } else {
        None
    };
    let consistent = !(self_ext_window_zero && ab_dim_certified_zero == Some(true) && !free);
    Ok(ArcReport {
        bound: cfg.bound,
        self_ext_first_nonzero,
        self_ext_window_zero,
        free,
        syzygy_ext1,
        ab_dim_certified_zero,
        consistent,
    })
}
