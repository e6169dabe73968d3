//! The four-variable example ring
//! `k[x1..x4]/(α x1x3 + x2x3, x1x4 + x2x4, x3x4, x1², x2², x3², x4²)`,
//! its complex `d_i = [[x1, α^i x3], [x4, x2]]`, the module `M = coker d_1`,
//! and a seeded sampler of random modules.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{build_algebra, Element, LocalAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{FieldCtx, Scalar};
use crate::fpmodule::{AlgMatrix, FPModule};
use crate::groebner::Poly;
use crate::homdim::{self, AbDimVerdict, ArcReport, GdimVerdict, HomDimConfig};
use crate::resolution::{
    detect_periodicity_in, verify_complete_resolution, CompleteResolutionReport, FreeResolution,
    PeriodSearch, PeriodicComplex,
};

pub const DEFAULT_COMPLEX_WINDOW: i64 = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JSConfig {
    pub field: FieldCtx,
    pub alpha: Scalar,
    /// Half-width `w` of the index window `[-w, w]` used when `α` has
    /// infinite order.
    pub complex_window: i64,
    pub homdim: HomDimConfig,
}

impl JSConfig {
    /// `alpha` is read through the natural map `Z -> k`.
    pub fn new(field: FieldCtx, alpha: i64) -> Result<Self> {
        Self::from_scalar(field, field.from_i64(alpha))
    }

    pub fn from_scalar(field: FieldCtx, alpha: Scalar) -> Result<Self> {
        if alpha.field() != field {
            return Err(Error::FieldMismatch);
        }
        if alpha.is_zero() {
            return Err(Error::InvalidArgument("α must be nonzero".into()));
        }
        Ok(JSConfig {
            field,
            alpha,
            complex_window: DEFAULT_COMPLEX_WINDOW,
            homdim: HomDimConfig::default(),
        })
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.homdim.bound = bound;
        self.homdim.window = self.homdim.window.min(bound);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.homdim.seed = seed;
        self
    }

    /// Multiplicative order of `α`, if finite.
    pub fn order(&self) -> Option<usize> {
        self.field
            .multiplicative_order(&self.alpha)
            .map(|n| n as usize)
    }
}

pub fn js_variables() -> Vec<String> {
    (1..=4).map(|i| format!("x{i}")).collect()
}

pub fn js_ideal(field: FieldCtx, alpha: &Scalar) -> Vec<Poly> {
    let x = |i| Poly::var(field, 4, i);
    vec![
        x(0).mul(&x(2)).scale(alpha).add(&x(1).mul(&x(2))),
        x(0).mul(&x(3)).add(&x(1).mul(&x(3))),
        x(2).mul(&x(3)),
        x(0).pow(2),
        x(1).pow(2),
        x(2).pow(2),
        x(3).pow(2),
    ]
}

pub fn js_ring(cfg: &JSConfig) -> Result<Arc<LocalAlgebra>> {
    if cfg.alpha.is_zero() {
        return Err(Error::InvalidArgument("α must be nonzero".into()));
    }
    Ok(Arc::new(build_algebra(
        &js_variables(),
        &js_ideal(cfg.field, &cfg.alpha),
    )?))
}

/// `d_i = [[x1, α^i x3], [x4, x2]]`.
pub fn js_differential(alg: &LocalAlgebra, alpha: &Scalar, i: i64) -> AlgMatrix {
    let a = alpha.pow(i).expect("α is invertible");
    let v = |j| alg.var_element(j).clone();
    let e: Vec<Vec<Element>> = vec![vec![v(0), alg.scale(&a, &v(2))], vec![v(3), v(1)]];
    AlgMatrix::from_rows(e, 2)
}

/// Periodic of period `ord(α)` when that is finite, otherwise the window
/// `d_lo, ..., d_hi`.
pub fn js_complex(
    cfg: &JSConfig,
    alg: &Arc<LocalAlgebra>,
    lo: i64,
    hi: i64,
) -> Result<PeriodicComplex> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!(
            "empty index range {lo}..{hi}"
        )));
    }
    match cfg.order() {
        Some(n) => {
            let ds = (lo..lo + n as i64)
                .map(|i| js_differential(alg, &cfg.alpha, i))
                .collect();
            PeriodicComplex::periodic(alg.clone(), lo, ds)
        }
        None => {
            let ds = (lo..=hi)
                .map(|i| js_differential(alg, &cfg.alpha, i))
                .collect();
            PeriodicComplex::windowed(alg.clone(), lo, ds)
        }
    }
}

/// `M = coker d_1`.
pub fn js_module(cfg: &JSConfig, alg: &Arc<LocalAlgebra>) -> FPModule {
    FPModule::coker(alg.clone(), js_differential(alg, &cfg.alpha, 1)).expect("valid presentation")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingStats {
    pub dim: usize,
    pub basis: Vec<String>,
    pub nilpotency_degree: usize,
    pub socle_dim: usize,
    pub gorenstein: bool,
}

pub fn ring_stats(alg: &LocalAlgebra) -> RingStats {
    RingStats {
        dim: alg.dim(),
        basis: alg
            .basis()
            .iter()
            .map(|m| m.display_with(alg.variables()))
            .collect(),
        nilpotency_degree: alg.nilpotency_degree(),
        socle_dim: alg.socle_dim(),
        gorenstein: alg.is_gorenstein(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleStats {
    pub kdim: usize,
    pub min_generators: usize,
    pub betti: Vec<usize>,
    pub minimal: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub field: FieldCtx,
    pub alpha: Scalar,
    pub alpha_order: Option<usize>,
    pub config: HomDimConfig,
    pub ring: RingStats,
    pub complex: CompleteResolutionReport,
    pub module: ModuleStats,
    pub period: PeriodSearch,
    pub total_reflexivity: GdimVerdict,
    pub ab_dimension: AbDimVerdict,
    pub arc: ArcReport,
}

impl ExampleReport {
    /// Cross-field consistency of the report.
    pub fn is_consistent(&self) -> bool {
        let ab_ok = match &self.ab_dimension {
            AbDimVerdict::CertifiedZero { .. } => {
                self.period.period.is_some() && self.total_reflexivity.is_zero()
            }
            _ => true,
        };
        ab_ok && self.arc.consistent && self.ring.gorenstein == (self.ring.socle_dim == 1)
    }
}

pub fn run_js_experiment(cfg: &JSConfig) -> Result<ExampleReport> {
    let hd = &cfg.homdim;
    hd.validate()?;
    let alg = js_ring(cfg)?;
    let w = cfg.complex_window;
    let (lo, hi) = if cfg.order().is_some() {
        (0, 0)
    } else {
        (-w, w)
    };
    let complex = verify_complete_resolution(&js_complex(cfg, &alg, lo, hi)?)?;
    let m = js_module(cfg, &alg);
    let mut res = FreeResolution::start(&m).with_rank_limit(hd.rank_limit);
    res.extend_to(hd.bound.max(hd.max_period + 1))?;
    let period = detect_periodicity_in(&res, hd.max_period, hd.iso_options());
    let module = ModuleStats {
        kdim: m.kdim(),
        min_generators: m.min_generators(),
        betti: res.betti()[..=hd.bound].to_vec(),
        minimal: res.is_minimal(),
        exact: res.is_exact(),
    };
    Ok(ExampleReport {
        field: cfg.field,
        alpha: cfg.alpha.clone(),
        alpha_order: cfg.order(),
        config: *hd,
        ring: ring_stats(&alg),
        complex,
        module,
        period,
        total_reflexivity: homdim::total_reflexivity(&m, hd)?,
        ab_dimension: homdim::ab_dimension(&m, hd)?,
        arc: homdim::arc_check(&m, hd)?,
    })
}

/// Seeded random modules `coker P` with `P` a `g × r` matrix (`g ≤ gen_bound`,
/// `r ≤ rel_bound`) whose entries are random elements of `m`. Zero modules
/// are skipped.
pub fn sample_modules(
    alg: &Arc<LocalAlgebra>,
    seed: u64,
    count: usize,
    gen_bound: usize,
    rel_bound: usize,
) -> Result<Vec<FPModule>> {
    if gen_bound == 0 || rel_bound == 0 {
        return Err(Error::InvalidArgument(
            "sampler bounds must be positive".into(),
        ));
    }
    let ctx = alg.ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count.max(1) {
        attempts += 1;
        let g = rng.gen_range(1..=gen_bound);
        let r = rng.gen_range(1..=rel_bound);
        let rows = (0..g)
            .map(|_| {
                (0..r)
                    .map(|_| {
                        let mut e = alg.zero();
                        for i in alg.m_indices() {
                            if rng.gen_bool(0.5) {
                                e[i] = ctx.random(&mut rng);
                            }
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        let m = FPModule::coker(alg.clone(), AlgMatrix::from_rows(rows, r))?;
        if !m.is_zero() {
            out.push(m);
        }
    }
    Ok(out)
}
