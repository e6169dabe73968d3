//! Minimal free resolutions, periodicity detection, and verification of
//! (periodic or windowed) complete resolutions.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::LocalAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::Scalar;
use crate::fpmodule::{self, AlgMatrix, FPModule, IsoOptions, IsoVerdict};

/// `0 <- M <- F_0 <- F_1 <- ... <- F_n` with `F_i = A^{β_i}` and
/// `d_i : F_i -> F_{i-1}` stored as a `β_{i-1} × β_i` algebra matrix.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    module: FPModule,
    differentials: Vec<AlgMatrix>,
    betti: Vec<usize>,
    minimal: bool,
    // k-basis of ker(d_len), or of the cover A^{β_0} -> M when len = 0
    pending_kernel: Vec<Vec<Scalar>>,
    rank_limit: usize,
}

impl FreeResolution {
    pub fn module(&self) -> &FPModule {
        &self.module
    }

    pub fn algebra(&self) -> &Arc<LocalAlgebra> {
        self.module.algebra()
    }

    /// Number of computed differentials `n`.
    pub fn len(&self) -> usize {
        self.differentials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.differentials.is_empty()
    }

    /// `d_i` for `1 ≤ i ≤ len`.
    pub fn differential(&self, i: usize) -> &AlgMatrix {
        &self.differentials[i - 1]
    }

    pub fn differentials(&self) -> &[AlgMatrix] {
        &self.differentials
    }

    /// `β_0, ..., β_n`.
    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// `Ω^n M ≅ coker(d_{n+1})`; needs `n + 1 ≤ len`.
    pub fn syzygy(&self, n: usize) -> FPModule {
        assert!(n < self.len(), "resolution too short for syzygy {n}");
        FPModule::coker(self.algebra().clone(), self.differential(n + 1).clone())
            .expect("valid presentation")
    }

    /// `d_i ∘ d_{i+1} = 0` as products of algebra matrices.
    pub fn composites_vanish(&self) -> bool {
        let alg = self.algebra();
        self.differentials
            .windows(2)
            .all(|w| w[0].mul(alg, &w[1]).is_zero())
    }

    /// `k`-linear exactness at every interior spot and `coker d_1 ≅ M` in dimension.
    pub fn is_exact(&self) -> bool {
        let alg = self.algebra();
        let d = alg.dim();
        let ranks: Vec<usize> = self
            .differentials
            .iter()
            .map(|m| m.to_linear(alg).rank())
            .collect();
        if let Some(r1) = ranks.first() {
            if self.betti[0] * d - r1 != self.module.kdim() {
                return false;
            }
        }
        (1..self.len()).all(|i| self.betti[i] * d - ranks[i - 1] == ranks[i])
    }
}

/// Minimal free resolution of `M` out to `F_n`. Each kernel is minimally
/// generated before the next step, so `β_i` are the Betti numbers.
pub fn minimal_free_resolution(m: &FPModule, n: usize) -> FreeResolution {
    let mut res = FreeResolution::start(m);
    res.extend_to(n).expect("no rank limit");
    res
}

impl FreeResolution {
    /// The resolution with only the minimal cover `F_0 -> M` computed.
    pub fn start(m: &FPModule) -> Self {
        let alg = m.algebra();
        let (gens, eps) = fpmodule::cover_map(alg, m.realization().action_data());
        FreeResolution {
            module: m.clone(),
            differentials: Vec::new(),
            betti: vec![gens.len()],
            minimal: true,
            pending_kernel: eps.kernel_basis().columns(),
            rank_limit: usize::MAX,
        }
    }

    /// Caps the free ranks this resolution may reach; [`Self::extend_to`]
    /// fails instead of computing past it.
    pub fn with_rank_limit(mut self, limit: usize) -> Self {
        self.rank_limit = limit;
        self
    }

    /// Computes further differentials until `len() ≥ n`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        let alg = self.module.algebra().clone();
        let d = alg.dim();
        while self.differentials.len() < n {
            let prev = *self.betti.last().expect("β_0 present");
            if prev > self.rank_limit {
                return Err(Error::ResolutionTooLarge {
                    step: self.betti.len() - 1,
                    rank: prev,
                });
            }
            let gens = fpmodule::minimal_generators_in_free(&alg, prev, &self.pending_kernel);
            let di = AlgMatrix::from_column_vectors(d, prev, &gens);
            self.betti.push(gens.len());
            self.pending_kernel = di.to_linear(&alg).kernel_basis().columns();
            self.minimal &= di.entries_in_max_ideal();
            self.differentials.push(di);
        }
        Ok(())
    }
}

/// One attempted period in [`detect_periodicity`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodAttempt {
    pub period: usize,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodSearch {
    pub period: Option<usize>,
    pub attempts: Vec<PeriodAttempt>,
}

pub fn detect_periodicity(m: &FPModule, max_period: usize, seed: u64) -> PeriodSearch {
    let res = minimal_free_resolution(m, max_period + 1);
    detect_periodicity_in(
        &res,
        max_period,
        IsoOptions {
            seed,
            ..IsoOptions::default()
        },
    )
}

/// Smallest `p ≤ max_period` with a certified isomorphism `Ω^p M ≅ M`.
/// `Unknown` verdicts count as failures, so a returned period is sound but
/// a missing one proves nothing.
pub fn detect_periodicity_in(
    res: &FreeResolution,
    max_period: usize,
    opts: IsoOptions,
) -> PeriodSearch {
    assert!(max_period >= 1, "max_period must be positive");
    assert!(
        res.len() > max_period,
        "resolution too short for period search"
    );
    let m = res.module();
    let mut attempts = Vec::new();
    if m.is_zero() {
        return PeriodSearch {
            period: None,
            attempts,
        };
    }
    let b = res.betti();
    for p in 1..=max_period {
        if b[p] != b[0] || b[p + 1] != b[1] {
            attempts.push(PeriodAttempt {
                period: p,
                outcome: format!(
                    "no: Betti numbers differ (β_{p} = {}, β_0 = {})",
                    b[p], b[0]
                ),
            });
            continue;
        }
        let opts = IsoOptions {
            seed: opts.seed.wrapping_add(p as u64),
            ..opts
        };
        let verdict = fpmodule::is_isomorphic_with(&res.syzygy(p), m, opts).expect("same algebra");
        let outcome = match &verdict {
            IsoVerdict::Yes(_) => "yes: isomorphism witness verified".to_string(),
            IsoVerdict::No(why) => format!("no: {why}"),
            IsoVerdict::Unknown => "unknown: no invertible map found".to_string(),
        };
        attempts.push(PeriodAttempt { period: p, outcome });
        if verdict.is_yes() {
            return PeriodSearch {
                period: Some(p),
                attempts,
            };
        }
    }
    PeriodSearch {
        period: None,
        attempts,
    }
}

/// A doubly infinite complex of free modules, stored either as one period
/// (`d_{i+p} = d_i`) or as a finite window of differentials.
#[derive(Clone, Debug)]
pub struct PeriodicComplex {
    algebra: Arc<LocalAlgebra>,
    lo: i64,
    differentials: Vec<AlgMatrix>,
    period: Option<usize>,
}

impl PeriodicComplex {
    /// `differentials[k]` is `d_{lo+k}`; the complex repeats with period
    /// `differentials.len()`.
    pub fn periodic(
        algebra: Arc<LocalAlgebra>,
        lo: i64,
        differentials: Vec<AlgMatrix>,
    ) -> Result<Self> {
        if differentials.is_empty() {
            return Err(Error::InvalidArgument("empty period".into()));
        }
        let p = differentials.len();
        Self::check_shapes(&differentials, true)?;
        Ok(PeriodicComplex {
            algebra,
            lo,
            differentials,
            period: Some(p),
        })
    }

    /// The window `d_lo, ..., d_{lo+len-1}` with no periodicity assumed.
    pub fn windowed(
        algebra: Arc<LocalAlgebra>,
        lo: i64,
        differentials: Vec<AlgMatrix>,
    ) -> Result<Self> {
        Self::check_shapes(&differentials, false)?;
        Ok(PeriodicComplex {
            algebra,
            lo,
            differentials,
            period: None,
        })
    }

    fn check_shapes(ds: &[AlgMatrix], wrap: bool) -> Result<()> {
        let n = ds.len();
        let pairs = if wrap { n } else { n.saturating_sub(1) };
        for k in 0..pairs {
            let (a, b) = (&ds[k], &ds[(k + 1) % n]);
            if a.cols() != b.rows() {
                return Err(Error::DimensionMismatch(format!(
                    "d_{k} has {} columns but the next differential has {} rows",
                    a.cols(),
                    b.rows()
                )));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<LocalAlgebra> {
        &self.algebra
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn period(&self) -> Option<usize> {
        self.period
    }

    pub fn len(&self) -> usize {
        self.differentials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.differentials.is_empty()
    }

    /// `d_i`, wrapping around for periodic complexes.
    pub fn differential(&self, i: i64) -> Option<&AlgMatrix> {
        let k = i - self.lo;
        match self.period {
            Some(p) => Some(&self.differentials[k.rem_euclid(p as i64) as usize]),
            None if k >= 0 && (k as usize) < self.differentials.len() => {
                Some(&self.differentials[k as usize])
            }
            None => None,
        }
    }

    /// Replaces `d_i` (used to build negative controls).
    pub fn with_differential(mut self, i: i64, d: AlgMatrix) -> Self {
        let k = i - self.lo;
        let idx = match self.period {
            Some(p) => k.rem_euclid(p as i64) as usize,
            None => k as usize,
        };
        self.differentials[idx] = d;
        self
    }

    /// Spots `i` at which both `d_i` and `d_{i+1}` are available.
    pub fn spots(&self) -> Vec<i64> {
        let n = self.differentials.len() as i64;
        match self.period {
            Some(_) => (self.lo..self.lo + n).collect(),
            None => (self.lo..self.lo + n - 1).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpotReport {
    pub index: i64,
    pub composite_zero: bool,
    /// `dim_k ker d_i`.
    pub kernel_dim: usize,
    /// `dim_k im d_{i+1}`.
    pub image_dim: usize,
    /// `dim_k ker d_{i+1}^T`.
    pub dual_kernel_dim: usize,
    /// `dim_k im d_i^T`.
    pub dual_image_dim: usize,
    pub exact: bool,
    pub dual_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompleteResolutionReport {
    pub period: Option<usize>,
    pub composites_zero: bool,
    pub exact: bool,
    pub dual_exact: bool,
    pub spots: Vec<SpotReport>,
    pub first_failure: Option<String>,
}

impl CompleteResolutionReport {
    pub fn passed(&self) -> bool {
        self.composites_zero && self.exact && self.dual_exact
    }
}

/// Checks `d_i d_{i+1} = 0`, exactness of the complex and exactness of its
/// `Hom(-, A)` dual at every available spot (one full period suffices for
/// periodic complexes).
pub fn verify_complete_resolution(c: &PeriodicComplex) -> Result<CompleteResolutionReport> {
    let alg = c.algebra();
    let d = alg.dim();
    let mut spots = Vec::new();
    let mut first_failure = None;
    for i in c.spots() {
        let di = c.differential(i).expect("spot in range");
        let dn = c.differential(i + 1).expect("spot in range");
        if di.cols() != dn.rows() {
            return Err(Error::DimensionMismatch(format!(
                "d_{i} and d_{} are not composable",
                i + 1
            )));
        }
        let composite_zero = di.mul(alg, dn).is_zero();
        let (li, ln) = (di.to_linear(alg), dn.to_linear(alg));
        let (ri, rn) = (li.rank(), ln.rank());
        let kernel_dim = di.cols() * d - ri;
        let image_dim = rn;
        let (ti, tn) = (
            di.transpose().to_linear(alg).rank(),
            dn.transpose().to_linear(alg).rank(),
        );
        let dual_kernel_dim = dn.rows() * d - tn;
        let dual_image_dim = ti;
        let spot = SpotReport {
            index: i,
            composite_zero,
            kernel_dim,
            image_dim,
            dual_kernel_dim,
            dual_image_dim,
            exact: kernel_dim == image_dim,
            dual_exact: dual_kernel_dim == dual_image_dim,
        };
        if first_failure.is_none() {
            if !spot.composite_zero {
                first_failure = Some(format!("d_{i} d_{} != 0", i + 1));
            } else if !spot.exact {
                first_failure = Some(format!(
                    "not exact at spot {i}: dim ker d_{i} = {kernel_dim}, dim im d_{} = {image_dim}",
                    i + 1
                ));
            } else if !spot.dual_exact {
                first_failure = Some(format!(
                    "dual not exact at spot {i}: dim ker d_{}^T = {dual_kernel_dim}, dim im d_{i}^T = {dual_image_dim}",
                    i + 1
                ));
            }
        }
        spots.push(spot);
    }
    Ok(CompleteResolutionReport {
        period: c.period(),
        composites_zero: spots.iter().all(|s| s.composite_zero),
        exact: spots.iter().all(|s| s.exact),
        dual_exact: spots.iter().all(|s| s.dual_exact),
        spots,
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::exactmath::FieldCtx;
    use crate::groebner::Poly;
    use crate::paperlab::{
        js_complex, js_differential, js_module, js_ring, sample_modules, JSConfig,
    };

    fn ci(ctx: FieldCtx) -> Arc<LocalAlgebra> {
        let x = |i| Poly::var(ctx, 2, i);
        Arc::new(build_algebra(&["x".into(), "y".into()], &[x(0).pow(2), x(1).pow(2)]).unwrap())
    }

    fn dual_numbers() -> Arc<LocalAlgebra> {
        let q = FieldCtx::Rationals;
        Arc::new(build_algebra(&["x".into()], &[Poly::var(q, 1, 0).pow(2)]).unwrap())
    }

    #[test]
    fn free_modules_have_trivial_resolutions() {
        let a = ci(FieldCtx::Rationals);
        let res = minimal_free_resolution(&FPModule::free(a, 3), 4);
        assert_eq!(res.betti(), &[3, 0, 0, 0, 0]);
        assert!(res.is_exact());
    }

    #[test]
    fn residue_field_of_the_ci_ring() {
        // Poincaré series 1/(1-t)^2
        let a = ci(FieldCtx::prime(5).unwrap());
        let res = minimal_free_resolution(&FPModule::residue_field(a), 10);
        let expected: Vec<usize> = (0..=10).map(|i| i + 1).collect();
        assert_eq!(res.betti(), expected.as_slice());
        assert!(res.is_minimal() && res.is_exact() && res.composites_vanish());
    }

    #[test]
    fn example_module_has_constant_betti_numbers() {
        let cfg = JSConfig::new(FieldCtx::prime(7).unwrap(), 3).unwrap();
        let a = js_ring(&cfg).unwrap();
        let res = minimal_free_resolution(&js_module(&cfg, &a), 20);
        assert!(res.betti().iter().all(|&b| b == 2));
        assert!(res.is_minimal() && res.is_exact() && res.composites_vanish());
    }

    #[test]
    fn zero_module() {
        let a = dual_numbers();
        let res = minimal_free_resolution(&FPModule::zero(a.clone()), 3);
        assert_eq!(res.betti(), &[0, 0, 0, 0]);
        let s = detect_periodicity(&FPModule::zero(a), 3, 0);
        assert_eq!(s.period, None);
    }

    #[test]
    fn rank_limit_stops_growth() {
        let cfg = JSConfig::new(FieldCtx::prime(7).unwrap(), 3).unwrap();
        let a = js_ring(&cfg).unwrap();
        let mut res = FreeResolution::start(&FPModule::residue_field(a)).with_rank_limit(20);
        let err = res.extend_to(10).unwrap_err();
        assert!(matches!(err, Error::ResolutionTooLarge { .. }));
        assert!(res.betti().iter().rev().skip(1).all(|&b| b <= 20));
    }

    #[test]
    fn betti_numbers_add_over_sums() {
        let a = ci(FieldCtx::Rationals);
        let ms = sample_modules(&a, 4, 4, 2, 2).unwrap();
        for w in ms.windows(2) {
            let s = fpmodule::direct_sum(&w[0], &w[1]).unwrap();
            let (b0, b1, bs) = (
                minimal_free_resolution(&w[0], 6),
                minimal_free_resolution(&w[1], 6),
                minimal_free_resolution(&s, 6),
            );
            for i in 0..=6 {
                assert_eq!(bs.betti()[i], b0.betti()[i] + b1.betti()[i]);
            }
        }
    }

    #[test]
    fn periods() {
        let a = dual_numbers();
        assert_eq!(
            detect_periodicity(&FPModule::residue_field(a.clone()), 4, 0).period,
            Some(1)
        );
        assert_eq!(detect_periodicity(&FPModule::free(a, 1), 4, 0).period, None);

        let cfg = JSConfig::new(FieldCtx::prime(7).unwrap(), 3).unwrap();
        let a = js_ring(&cfg).unwrap();
        let s = detect_periodicity(&js_module(&cfg, &a), 12, 0);
        assert_eq!(s.period, Some(6));
        assert_eq!(s.attempts.len(), 6);
        assert!(s.attempts[..5].iter().all(|t| t.outcome.starts_with("no")));
    }

    #[test]
    fn certified_period_makes_betti_periodic() {
        let a = ci(FieldCtx::prime(5).unwrap());
        for m in sample_modules(&a, 8, 6, 2, 2).unwrap() {
            let res = minimal_free_resolution(&m, 9);
            if let Some(p) = detect_periodicity_in(&res, 4, IsoOptions::default()).period {
                let b = res.betti();
                assert!((0..b.len() - p).all(|i| b[i] == b[i + p]));
            }
        }
    }

    #[test]
    fn example_complex_is_a_complete_resolution() {
        let cfg = JSConfig::new(FieldCtx::prime(7).unwrap(), 3).unwrap();
        let a = js_ring(&cfg).unwrap();
        let c = js_complex(&cfg, &a, 0, 0).unwrap();
        assert_eq!(c.period(), Some(6));
        let r = verify_complete_resolution(&c).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure);
        assert_eq!(r.spots.len(), 6);
        assert!(r
            .spots
            .iter()
            .all(|s| s.kernel_dim == 8 && s.image_dim == 8));
    }

    #[test]
    fn composite_entry_lies_in_the_ideal() {
        // (d_i d_{i+1})_{12} = α^i (α x1x3 + x2x3)
        let cfg = JSConfig::new(FieldCtx::prime(7).unwrap(), 3).unwrap();
        let a = js_ring(&cfg).unwrap();
        for i in 0..6 {
            let p =
                js_differential(&a, &cfg.alpha, i).mul(&a, &js_differential(&a, &cfg.alpha, i + 1));
            assert!(p.is_zero());
        }
    }

    #[test]
    fn corrupted_complex_is_caught() {
        let cfg = JSConfig::new(FieldCtx::prime(7).unwrap(), 3).unwrap();
        let a = js_ring(&cfg).unwrap();
        let mut d0 = js_differential(&a, &cfg.alpha, 0);
        d0.set(1, 1, a.zero());
        let c = js_complex(&cfg, &a, 0, 0).unwrap().with_differential(0, d0);
        let r = verify_complete_resolution(&c).unwrap();
        assert!(!r.passed());
        assert!(r.first_failure.is_some());
    }

    #[test]
    fn windowed_complex_for_infinite_order() {
        let cfg = JSConfig::new(FieldCtx::Rationals, 2).unwrap();
        let a = js_ring(&cfg).unwrap();
        let c = js_complex(&cfg, &a, -10, 10).unwrap();
        assert_eq!(c.period(), None);
        assert_eq!(c.len(), 21);
        assert!(c.differential(11).is_none());
        let r = verify_complete_resolution(&c).unwrap();
        assert!(r.passed());
        assert_eq!(r.spots.len(), 20);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let a = dual_numbers();
        let d = AlgMatrix::zeros(&a, 1, 2);
        assert!(matches!(
            PeriodicComplex::periodic(a, 0, vec![d]),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
