//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use abdim::algebra::LocalAlgebra;
use abdim::cli::{run_session, RunOptions};
use abdim::exactmath::{Echelon, FieldCtx, Matrix, Scalar};
use abdim::fpmodule::{direct_sum, hom_basis, matlis_dual, syzygy, FPModule};
use abdim::groebner::{Monomial, Poly};
use abdim::homdim::{
    ab_dimension, ab_dimension_with, arc_check, ext_table, ext_table_from, g_dimension, in_perp,
    p_value, total_reflexivity, AbDimRule, AbDimVerdict, GdimVerdict, HomDimConfig, PValue,
};
use abdim::paperlab::{
    js_complex, js_differential, js_ideal, js_module, js_ring, sample_modules, JSConfig,
};
use abdim::resolution::{detect_periodicity, verify_complete_resolution, FreeResolution};
use serde_json::{json, Value};

const SEED: u64 = 20;

type Check = std::result::Result<Value, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn f(p: u64) -> FieldCtx {
    FieldCtx::prime(p).unwrap()
}

fn js(field: FieldCtx, alpha: i64) -> (JSConfig, Arc<LocalAlgebra>, FPModule) {
    let cfg = JSConfig::new(field, alpha).unwrap();
    let a = js_ring(&cfg).unwrap();
    let m = js_module(&cfg, &a);
    (cfg, a, m)
}

fn ci(ctx: FieldCtx) -> Arc<LocalAlgebra> {
    let x = |i| Poly::var(ctx, 2, i);
    Arc::new(
        abdim::algebra::build_algebra(&["x".into(), "y".into()], &[x(0).pow(2), x(1).pow(2)])
            .unwrap(),
    )
}

/// Records `dim Ext^i(M, k) = β_i(M)` comparisons made along the way.
#[derive(Default)]
struct CrossChecks {
    done: usize,
    failures: Vec<String>,
}

impl CrossChecks {
    fn compare(
        &mut self,
        label: &str,
        res: &mut FreeResolution,
        k: &FPModule,
        hi: usize,
    ) -> std::result::Result<(), String> {
        res.extend_to(hi).map_err(err)?;
        let ext = ext_table_from(res, k, 0, hi).map_err(err)?;
        self.done += 1;
        if ext.dims != res.betti()[..=hi] {
            self.failures.push(format!(
                "{label}: Ext(M,k) = {:?}, betti = {:?}",
                ext.dims,
                &res.betti()[..=hi]
            ));
        }
        Ok(())
    }
}

// Oracles independent of the library's Gröbner and module code.

/// Exponent vectors of degree `d` in `n` variables.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|a| {
            monomials(n - 1, d - a).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

/// Graded pieces `I_d` of an ideal generated by homogeneous quadrics, as
/// spans inside the monomials of degree `d`.
struct GradedIdeal {
    ctx: FieldCtx,
    n: usize,
    gens: Vec<Poly>,
}

impl GradedIdeal {
    fn vector(&self, p: &Poly, basis: &[Vec<u32>]) -> Vec<Scalar> {
        let mut v = vec![self.ctx.zero(); basis.len()];
        for (m, c) in p.terms() {
            let i = basis
                .iter()
                .position(|b| b == m.exponents())
                .expect("homogeneous");
            v[i] = c.clone();
        }
        v
    }

    fn piece(&self, d: u32) -> (Vec<Vec<u32>>, Echelon) {
        let basis = monomials(self.n, d);
        let mut ech = Echelon::new(basis.len());
        if d >= 2 {
            for shift in monomials(self.n, d - 2) {
                for g in &self.gens {
                    let p = g.mul_term(&self.ctx.one(), &Monomial::new(shift.clone()));
                    ech.insert(&self.vector(&p, &basis));
                }
            }
        }
        (basis, ech)
    }

    fn hilbert_function(&self, top: u32) -> Vec<usize> {
        (0..=top)
            .map(|d| {
                let (basis, ech) = self.piece(d);
                basis.len() - ech.dim()
            })
            .collect()
    }

    /// `dim (0 :_R m)` in degree `d`.
    fn socle_in_degree(&self, d: u32) -> usize {
        let (basis, ideal) = self.piece(d);
        let (next, ideal_next) = self.piece(d + 1);
        let mut rows = Vec::new();
        for i in 0..self.n {
            let xi = Monomial::var(self.n, i);
            let images: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|m| {
                    let p = Poly::term(self.ctx, self.ctx.one(), Monomial::new(m.clone()).mul(&xi));
                    ideal_next.reduce(&self.vector(&p, &next))
                })
                .collect();
            for r in 0..next.len() {
                rows.push(images.iter().map(|v| v[r].clone()).collect::<Vec<_>>());
            }
        }
        let map = Matrix::from_rows(self.ctx, rows).unwrap();
        map.cols() - map.rank() - ideal.dim()
    }
}

fn brute_order(p: u64, a: u64) -> usize {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    k
}

/// `dim Ext^1(M, N)` from `0 → Hom(M,N) → Hom(F_0,N) → Hom(ΩM,N) → Ext^1(M,N) → 0`.
fn ext1_oracle(m: &FPModule, n: &FPModule) -> usize {
    let h = |x: &FPModule| hom_basis(x, n).unwrap().dim();
    h(&syzygy(m, 1)) + h(m) - m.min_generators() * n.kdim()
}

// Criteria.

fn c1() -> Check {
    let (_, a, _) = js(f(7), 3);
    let basis_from_staircase = {
        let leads: Vec<&Monomial> = a.groebner_basis().leading_monomials().collect();
        (0..=4u32)
            .flat_map(|d| monomials(4, d))
            .filter(|e| {
                let m = Monomial::new(e.clone());
                !leads.iter().any(|l| l.divides(&m))
            })
            .count()
    };
    let g = GradedIdeal {
        ctx: f(7),
        n: 4,
        gens: js_ideal(f(7), &f(7).from_i64(3)),
    };
    let hilbert = g.hilbert_function(4);
    let socle: usize = (0..=3).map(|d| g.socle_in_degree(d)).sum();
    ensure(hilbert == [1, 4, 3, 0, 0], || {
        format!("Hilbert function {hilbert:?}")
    })?;
    ensure(a.dim() == 8 && basis_from_staircase == 8, || {
        format!("dim {} vs staircase {basis_from_staircase}", a.dim())
    })?;
    ensure(a.socle_dim() == 3 && socle == 3, || {
        format!("socle {} vs oracle {socle}", a.socle_dim())
    })?;
    ensure(!a.is_gorenstein(), || "reported Gorenstein".into())?;
    Ok(
        json!({ "dim": a.dim(), "socle": a.socle_dim(), "gorenstein": a.is_gorenstein(), "hilbert": hilbert }),
    )
}

fn c2() -> Check {
    let (cfg, a, _) = js(f(7), 3);
    let c = js_complex(&cfg, &a, 0, 0).map_err(err)?;
    let report = verify_complete_resolution(&c).map_err(err)?;
    ensure(report.passed(), || format!("{:?}", report.first_failure))?;
    ensure(report.spots.len() == 6, || {
        format!("{} spots", report.spots.len())
    })?;
    for s in &report.spots {
        ensure(s.kernel_dim == 8 && s.image_dim == 8, || {
            format!("spot {}: {s:?}", s.index)
        })?;
        ensure(s.dual_kernel_dim == 8 && s.dual_image_dim == 8, || {
            format!("dual spot {}: {s:?}", s.index)
        })?;
    }
    // oracle: ranks of the k-linear maps and their transposes
    for i in 0..6 {
        let (d, e) = (
            js_differential(&a, &cfg.alpha, i),
            js_differential(&a, &cfg.alpha, i + 1),
        );
        ensure(d.mul(&a, &e).is_zero(), || format!("d_{i} d_{} ≠ 0", i + 1))?;
        ensure(e.transpose().mul(&a, &d.transpose()).is_zero(), || {
            format!("dual composite at {i}")
        })?;
        let (ld, le) = (d.to_linear(&a), e.to_linear(&a));
        ensure(ld.rows() == 16 && ld.rank() == 8 && le.rank() == 8, || {
            format!("rank at {i}")
        })?;
        ensure(d.transpose().to_linear(&a).rank() == 8, || {
            format!("dual rank at {i}")
        })?;
    }
    Ok(serde_json::to_value(&report).unwrap())
}

fn c3(cc: &mut CrossChecks) -> Check {
    let (_, a, m) = js(f(7), 3);
    let mut res = FreeResolution::start(&m);
    res.extend_to(20).map_err(err)?;
    let betti = res.betti()[..=20].to_vec();
    ensure(betti.iter().all(|&b| b == 2), || format!("{betti:?}"))?;
    ensure(res.is_minimal() && res.is_exact(), || {
        "resolution not minimal and exact".into()
    })?;
    cc.compare("JS M", &mut res, &FPModule::residue_field(a), 20)?;
    Ok(json!({ "betti": betti }))
}

fn c4() -> Check {
    let mut out = BTreeMap::new();
    for (p, alpha) in [(7u64, 3i64), (13, 4)] {
        ensure(brute_order(p, alpha as u64) == 6, || {
            format!("{alpha} has order ≠ 6 mod {p}")
        })?;
        let (cfg, _, m) = js(f(p), alpha);
        ensure(cfg.order() == Some(6), || {
            format!("order {:?}", cfg.order())
        })?;
        let s = detect_periodicity(&m, 6, SEED);
        ensure(s.period == Some(6), || {
            format!("GF({p}): period {:?}", s.period)
        })?;
        ensure(s.attempts.len() == 6, || {
            format!("{} attempts", s.attempts.len())
        })?;
        for t in &s.attempts[..5] {
            ensure(t.outcome.starts_with("no"), || {
                format!("GF({p}) p = {}: {}", t.period, t.outcome)
            })?;
        }
        out.insert(format!("GF({p})"), serde_json::to_value(&s).unwrap());
    }
    Ok(json!(out))
}

fn c5() -> Check {
    let cfg = HomDimConfig {
        seed: SEED,
        ..HomDimConfig::default()
    };
    ensure(cfg.bound == 20, || "bound".into())?;
    let mut out = BTreeMap::new();
    for (field, alpha) in [(f(7), 3), (FieldCtx::Rationals, 2)] {
        let (_, _, m) = js(field, alpha);
        let v = total_reflexivity(&m, &cfg).map_err(err)?;
        match &v {
            GdimVerdict::Zero { certificate } => {
                ensure(certificate.biduality_witness_verified, || {
                    "witness not verified".into()
                })?;
                ensure(certificate.bound == 20, || "certificate bound".into())?;
            }
            other => return Err(format!("{field}: {other:?}")),
        }
        out.insert(field.to_string(), serde_json::to_value(&v).unwrap());
    }
    Ok(json!(out))
}

fn c6() -> Check {
    let cfg = HomDimConfig {
        seed: SEED,
        ..HomDimConfig::default()
    };
    let (_, a, m) = js(f(7), 3);
    let v = ab_dimension(&m, &cfg).map_err(err)?;
    ensure(
        matches!(
            v,
            AbDimVerdict::CertifiedZero {
                rule: AbDimRule::Periodic { period: 6 },
                ..
            }
        ),
        || format!("{v:?}"),
    )?;
    // R^a ⊕ E^b with E the injective hull of k
    let r = FPModule::free(a.clone(), 1);
    let e = matlis_dual(&r);
    let mut family = Vec::new();
    for ra in 0..=5 {
        for eb in 0..=4 {
            if ra + eb == 0 {
                continue;
            }
            let mut n = FPModule::zero(a.clone());
            for _ in 0..ra {
                n = direct_sum(&n, &r).unwrap();
            }
            for _ in 0..eb {
                n = direct_sum(&n, &e).unwrap();
            }
            family.push((format!("R^{ra}+E^{eb}"), n));
        }
    }
    ensure(family.len() >= 25, || "family too small".into())?;
    let syz: Vec<FPModule> = (0..6).map(|j| syzygy(&m, j)).collect();
    for (name, n) in &family {
        let p = p_value(&m, n, 20, Some(6)).map_err(err)?;
        ensure(p.is_certified_zero(), || format!("P(M, {name}) = {p:?}"))?;
        let q = in_perp(n, &m, 20, 8, Some(6)).map_err(err)?;
        ensure(q.is_certified(), || format!("{name} ∈ M^⊥: {q:?}"))?;
    }
    // oracle on the smallest members: Ext^{j+1}(M, N) = Ext^1(Ω^j M, N) from Hom dimensions
    for (name, n) in family.iter().filter(|(_, n)| n.kdim() <= 16) {
        for (j, om) in syz.iter().enumerate() {
            let d = ext1_oracle(om, n);
            ensure(d == 0, || format!("oracle Ext^{}(M, {name}) = {d}", j + 1))?;
        }
    }
    let samples: Vec<(String, FPModule)> = family.into_iter().collect();
    let with = ab_dimension_with(&m, &cfg, &samples).map_err(err)?;
    ensure(
        with.is_certified_zero() && with.evidence().len() == samples.len(),
        || "evidence".into(),
    )?;
    Ok(json!({ "verdict": v, "family_size": samples.len(), "evidence": with.evidence() }))
}

fn c7() -> Check {
    let cfg = HomDimConfig {
        seed: SEED,
        ..HomDimConfig::default()
    };
    let (jc, _, m) = js(FieldCtx::Rationals, 2);
    ensure(jc.order().is_none(), || "α = 2 has finite order".into())?;
    let g = g_dimension(&m, &cfg).map_err(err)?;
    ensure(g.is_zero(), || format!("{g:?}"))?;
    let v = ab_dimension(&m, &cfg).map_err(err)?;
    ensure(!v.is_certified_zero(), || "CertifiedZero emitted".into())?;
    ensure(matches!(v, AbDimVerdict::Unknown { .. }), || {
        format!("{v:?}")
    })?;
    Ok(json!({ "gdim": g, "abdim": v }))
}

fn c8(cc: &mut CrossChecks) -> Check {
    let mut pairs: Vec<(String, FPModule, FPModule)> = Vec::new();
    let (cfg, a, m) = js(f(7), 3);
    let om = syzygy(&m, 1);
    let d3 = FPModule::coker(a.clone(), js_differential(&a, &cfg.alpha, 3)).unwrap();
    let sources = [
        ("M", m.clone()),
        ("ΩM", om.clone()),
        (
            "M+R",
            direct_sum(&m, &FPModule::free(a.clone(), 1)).unwrap(),
        ),
        ("M+ΩM", direct_sum(&m, &om).unwrap()),
        ("coker d3", d3),
    ];
    let targets = sample_modules(&a, SEED, sources.len(), 2, 2).map_err(err)?;
    for ((name, s), n) in sources.into_iter().zip(targets) {
        pairs.push((format!("JS {name}"), s, n));
    }
    for ctx in [f(5), FieldCtx::Rationals] {
        let b = ci(ctx);
        let ms = sample_modules(&b, SEED + 1, 4, 2, 2).map_err(err)?;
        let ns = sample_modules(&b, SEED + 2, 4, 2, 2).map_err(err)?;
        for (i, (s, n)) in ms.into_iter().zip(ns).enumerate() {
            pairs.push((format!("CI {ctx} #{i}"), s, n));
        }
    }
    ensure(pairs.len() >= 10, || "too few pairs".into())?;
    let mut out = BTreeMap::new();
    for (name, s, n) in &pairs {
        let k = FPModule::residue_field(s.algebra().clone());
        let mut res = FreeResolution::start(s);
        let e_m = ext_table_from(&mut res, n, 2, 16).map_err(err)?;
        cc.compare(name, &mut res, &k, 16)?;
        let om = res.syzygy(1);
        let e_om = ext_table(&om, n, 1, 15).map_err(err)?;
        ensure(e_m.dims == e_om.dims, || {
            format!("{name}: {:?} vs {:?}", e_m.dims, e_om.dims)
        })?;
        ensure(
            ext1_oracle(s, n) == ext_table(s, n, 1, 1).map_err(err)?.dims[0],
            || format!("{name}: Ext^1 oracle"),
        )?;
        out.insert(name.clone(), json!(e_om.dims));
    }
    Ok(json!(out))
}

fn c9(cc: &mut CrossChecks) -> Check {
    let cfg = HomDimConfig {
        seed: SEED,
        ..HomDimConfig::default()
    };
    let mut out = BTreeMap::new();
    for ctx in [f(5), FieldCtx::Rationals] {
        let a = ci(ctx);
        let k = FPModule::residue_field(a.clone());
        let r = FPModule::free(a.clone(), 1);
        let mut res = FreeResolution::start(&k);
        res.extend_to(10).map_err(err)?;
        let expected: Vec<usize> = (1..=11).collect();
        ensure(res.betti()[..=10] == expected, || {
            format!("{ctx}: β(k) = {:?}", res.betti())
        })?;
        let ek = ext_table(&k, &k, 0, 10).map_err(err)?;
        ensure(ek.dims == expected, || {
            format!("{ctx}: Ext(k,k) = {:?}", ek.dims)
        })?;
        cc.compare(&format!("k over {ctx}"), &mut res, &k, 10)?;
        let ms = sample_modules(&a, SEED, 20, 2, 2).map_err(err)?;
        ensure(ms.len() == 20, || "sampler".into())?;
        for (i, m) in ms.iter().enumerate() {
            let v = total_reflexivity(m, &cfg).map_err(err)?;
            ensure(v.is_zero(), || format!("{ctx} #{i}: {v:?}"))?;
        }
        let p = p_value(&k, &r, 20, None).map_err(err)?;
        ensure(matches!(p, PValue::Vanishes { index: 0, .. }), || {
            format!("{ctx}: P(k, R) = {p:?}")
        })?;
        out.insert(ctx.to_string(), json!({ "ext_kk": ek.dims, "p_k_r": p }));
    }
    Ok(json!(out))
}

fn c10() -> Check {
    let cfg = HomDimConfig {
        seed: SEED,
        ..HomDimConfig::default()
    };
    let mut out = BTreeMap::new();
    for ctx in [f(5), FieldCtx::Rationals] {
        let a = ci(ctx);
        let ms: Vec<FPModule> = sample_modules(&a, SEED + 3, 40, 2, 2)
            .map_err(err)?
            .into_iter()
            .filter(|m| !m.is_free())
            .take(20)
            .collect();
        ensure(ms.len() == 20, || {
            format!("{ctx}: only {} non-free samples", ms.len())
        })?;
        let mut firsts = Vec::new();
        for (i, m) in ms.iter().enumerate() {
            let r = arc_check(m, &cfg).map_err(err)?;
            ensure(r.self_ext_first_nonzero.is_some() || r.free, || {
                format!("{ctx} #{i}: {r:?}")
            })?;
            ensure(r.consistent, || format!("{ctx} #{i}: inconsistent"))?;
            firsts.push(r.self_ext_first_nonzero);
        }
        out.insert(ctx.to_string(), json!(firsts));
    }
    let (_, _, m) = js(f(7), 3);
    let r = arc_check(&m, &cfg).map_err(err)?;
    ensure(r.self_ext_first_nonzero.is_some() && r.consistent, || {
        format!("{r:?}")
    })?;
    let oracle = ext1_oracle(&m, &syzygy(&m, 1));
    ensure(r.syzygy_ext1 > 0 && r.syzygy_ext1 == oracle, || {
        format!("Ext^1(M, ΩM) = {} vs oracle {oracle}", r.syzygy_ext1)
    })?;
    out.insert("JS".into(), serde_json::to_value(&r).unwrap());
    Ok(json!(out))
}

fn c11() -> Check {
    let (bound, window) = (20, 8);
    let mut seqs: Vec<(String, FPModule)> = Vec::new();
    for (ctx, count) in [(f(5), 8), (FieldCtx::Rationals, 2)] {
        let a = ci(ctx);
        for (i, m) in sample_modules(&a, SEED + 4, count, 2, 2)
            .map_err(err)?
            .into_iter()
            .enumerate()
        {
            seqs.push((format!("CI {ctx} #{i}"), m));
        }
    }
    let (cfg, a, m) = js(f(7), 3);
    seqs.push(("JS M".into(), m));
    seqs.push((
        "JS coker d3".into(),
        FPModule::coker(a.clone(), js_differential(&a, &cfg.alpha, 3)).unwrap(),
    ));
    ensure(seqs.len() >= 10, || "too few sequences".into())?;
    let mut nontrivial = 0;
    let mut out = BTreeMap::new();
    for (name, m) in &seqs {
        let alg = m.algebra().clone();
        let om = syzygy(m, 1);
        let free = FPModule::free(alg.clone(), m.min_generators());
        let r = FPModule::free(alg.clone(), 1);
        let mut tests = vec![
            ("R".to_string(), r.clone()),
            ("k".to_string(), FPModule::residue_field(alg.clone())),
            ("E".to_string(), matlis_dual(&r)),
        ];
        for (i, n) in sample_modules(&alg, SEED + 5, 3, 2, 2)
            .map_err(err)?
            .into_iter()
            .enumerate()
        {
            tests.push((format!("random[{i}]"), n));
        }
        let mut rows = Vec::new();
        for (tn, n) in &tests {
            let perp = |x: &FPModule| -> std::result::Result<bool, String> {
                Ok(in_perp(n, x, bound, window, None).map_err(err)?.is_yes())
            };
            let v = [perp(&om)?, perp(&free)?, perp(m)?];
            for l in 0..3 {
                let (i, j) = ((l + 1) % 3, (l + 2) % 3);
                if v[i] && v[j] {
                    nontrivial += 1;
                    ensure(v[l], || format!("{name}, N = {tn}: perps {v:?}"))?;
                }
            }
            rows.push(json!({ "n": tn, "perp": v }));
        }
        out.insert(name.clone(), json!(rows));
    }
    ensure(nontrivial > 0, || {
        "no sequence exercised the containment".into()
    })?;
    Ok(json!({ "sequences": out, "instances": nontrivial }))
}

fn c12(cc: &CrossChecks) -> Check {
    ensure(cc.done > 0, || "no comparisons recorded".into())?;
    ensure(cc.failures.is_empty(), || cc.failures.join("; "))?;
    Ok(json!({ "comparisons": cc.done }))
}

struct Criterion {
    number: usize,
    title: &'static str,
    budget: Duration,
}

const CRITERIA: [Criterion; 12] = [
    Criterion {
        number: 1,
        title: "example ring reconstruction",
        budget: Duration::from_secs(1),
    },
    Criterion {
        number: 2,
        title: "complete resolution",
        budget: Duration::from_secs(5),
    },
    Criterion {
        number: 3,
        title: "Betti numbers of M",
        budget: Duration::from_secs(5),
    },
    Criterion {
        number: 4,
        title: "periodicity over GF(7) and GF(13)",
        budget: Duration::from_secs(10),
    },
    Criterion {
        number: 5,
        title: "total reflexivity over GF(7) and QQ",
        budget: Duration::from_secs(10),
    },
    Criterion {
        number: 6,
        title: "AB-dimension zero over GF(7)",
        budget: Duration::from_secs(30),
    },
    Criterion {
        number: 7,
        title: "generic alpha is not certified",
        budget: Duration::from_secs(10),
    },
    Criterion {
        number: 8,
        title: "syzygy shift of Ext",
        budget: Duration::from_secs(60),
    },
    Criterion {
        number: 9,
        title: "complete intersection suite",
        budget: Duration::from_secs(60),
    },
    Criterion {
        number: 10,
        title: "Auslander-Reiten consistency",
        budget: Duration::from_secs(60),
    },
    Criterion {
        number: 11,
        title: "perp closure on syzygy sequences",
        budget: Duration::from_secs(60),
    },
    Criterion {
        number: 12,
        title: "Ext(M, k) equals Betti numbers",
        budget: Duration::MAX,
    },
];

struct Line {
    number: usize,
    title: &'static str,
    pass: bool,
    elapsed: Duration,
    detail: String,
}

/// Runs criteria 1 to 12; returns the lines and the JSON report.
fn suite() -> (Vec<Line>, String) {
    let mut cc = CrossChecks::default();
    let mut report = BTreeMap::new();
    let mut lines = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let r = match c.number {
            1 => c1(),
            2 => c2(),
            3 => c3(&mut cc),
            4 => c4(),
            5 => c5(),
            6 => c6(),
            7 => c7(),
            8 => c8(&mut cc),
            9 => c9(&mut cc),
            10 => c10(),
            11 => c11(),
            _ => c12(&cc),
        };
        let elapsed = start.elapsed();
        let (pass, detail, value) = match r {
            Ok(v) if elapsed <= c.budget => (true, String::new(), v),
            Ok(v) => (false, format!("over budget of {:?}", c.budget), v),
            Err(e) => (false, e.clone(), json!({ "error": e })),
        };
        report.insert(format!("criterion_{:02}", c.number), value);
        lines.push(Line {
            number: c.number,
            title: c.title,
            pass,
            elapsed,
            detail,
        });
    }
    let json = serde_json::to_string_pretty(&json!({ "seed": SEED, "criteria": report })).unwrap();
    (lines, json)
}

fn session_path() -> String {
    concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/sessions/js_example.abd"
    )
    .to_string()
}

fn binary_json(dir: &std::path::Path, tag: &str) -> std::result::Result<Vec<u8>, String> {
    let out = dir.join(format!("{tag}.json"));
    let status = Command::new(env!("CARGO_BIN_EXE_abdim"))
        .arg(session_path())
        .args(["--seed", &SEED.to_string(), "--quiet", "--json"])
        .arg(&out)
        .status()
        .map_err(err)?;
    ensure(status.success(), || format!("binary exited with {status}"))?;
    std::fs::read(&out).map_err(err)
}

fn c13(first: &str) -> std::result::Result<String, String> {
    let (_, second) = suite();
    ensure(first == second, || {
        "suite reports differ between runs".into()
    })?;
    let src = std::fs::read_to_string(session_path()).map_err(err)?;
    let opts = RunOptions {
        seed: SEED,
        quiet: true,
        ..RunOptions::default()
    };
    let a = run_session(&src, &opts).json_string();
    let b = run_session(&src, &opts).json_string();
    ensure(a == b, || "in-process session reports differ".into())?;
    let dir = std::env::temp_dir().join(format!("abdim-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(err)?;
    let (x, y) = (binary_json(&dir, "a")?, binary_json(&dir, "b")?);
    let _ = std::fs::remove_dir_all(&dir);
    ensure(x == y, || "binary reports differ".into())?;
    ensure(x == a.as_bytes(), || {
        "binary and in-process reports differ".into()
    })?;
    Ok(format!("{} + {} bytes identical", first.len(), x.len()))
}

fn print(pass: bool, number: usize, title: &str, elapsed: Duration, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    let ms = elapsed.as_secs_f64() * 1e3;
    if detail.is_empty() {
        println!("{status} criterion {number:>2}: {title} ({ms:.0} ms)");
    } else {
        println!("{status} criterion {number:>2}: {title} ({ms:.0} ms): {detail}");
    }
}

fn main() -> ExitCode {
    let (lines, report) = suite();
    let mut ok = true;
    for l in &lines {
        print(l.pass, l.number, l.title, l.elapsed, &l.detail);
        ok &= l.pass;
    }
    let start = Instant::now();
    let r = c13(&report);
    let elapsed = start.elapsed();
    match &r {
        Ok(d) => print(true, 13, "determinism of JSON reports", elapsed, d),
        Err(e) => print(false, 13, "determinism of JSON reports", elapsed, e),
    }
    ok &= r.is_ok();
    if let Ok(path) = std::env::var("ABDIM_ACCEPTANCE_REPORT") {
        std::fs::write(path, &report).expect("write report");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
