//! Multivariate polynomials, Buchberger's algorithm under degrevlex, normal
//! forms, and the standard-monomial basis of a zero-dimensional quotient.

mod poly;

use std::collections::{BTreeSet, HashMap};

pub use poly::{Monomial, Poly};

use crate::error::{Error, Result};
use crate::exactmath::{FieldCtx, Matrix, Scalar};

/// Knobs for [`buchberger_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip S-pairs with coprime leading monomials and apply the chain criterion.
    pub use_criteria: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { use_criteria: true }
    }
}

/// Reduced Gröbner basis under degrevlex with the declared variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ctx: FieldCtx,
    variables: Vec<String>,
    generators: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// Monic, inter-reduced generators sorted by leading monomial.
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().filter_map(Poly::leading_monomial)
    }

    /// Remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        reduce_full(f, &self.generators)
    }

    /// True iff every S-polynomial reduces to zero (Buchberger's criterion).
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| self.normal_form(&s_polynomial(&g[i], &g[j])).is_zero())
        })
    }
}

pub fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fc.inv().expect("unit"), &fm.quotient_of(&l));
    let b = g.mul_term(&gc.inv().expect("unit"), &gm.quotient_of(&l));
    a.sub(&b)
}

/// Full reduction of `f` by monic divisors.
fn reduce_full(f: &Poly, divisors: &[Poly]) -> Poly {
    let mut p = f.clone();
    let mut rem = Poly::zero(f.ctx(), f.nvars());
    while let Some((m, c)) = p.leading() {
        let (m, c) = (m.clone(), c.clone());
        let divisor = divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading().expect("nonzero");
                let coef = &c * &lc.inv().expect("unit");
                let shift = lm.quotient_of(&m);
                p.sub_scaled_shifted(&coef, &shift, g);
            }
            None => {
                rem.add_term(c.clone(), m.clone());
                p.add_term(-&c, m);
            }
        }
    }
    rem
}

fn check_inputs(gens: &[Poly], variables: &[String]) -> Result<FieldCtx> {
    let first = gens.first().ok_or(Error::NoGenerators)?;
    let ctx = first.ctx();
    for g in gens {
        if g.nvars() != variables.len() {
            return Err(Error::VariableMismatch {
                expected: variables.len(),
                found: g.nvars(),
            });
        }
        if g.ctx() != ctx {
            return Err(Error::FieldMismatch);
        }
    }
    Ok(ctx)
}

pub fn buchberger(gens: &[Poly], variables: &[String]) -> Result<GroebnerBasis> {
    buchberger_with(gens, variables, BuchbergerOptions::default())
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm first).
pub fn buchberger_with(
    gens: &[Poly],
    variables: &[String],
    opts: BuchbergerOptions,
) -> Result<GroebnerBasis> {
    let ctx = check_inputs(gens, variables)?;
    let mut basis: Vec<Poly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(Poly::monic)
        .collect();
    let mut queue: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lcm_of = |b: &[Poly], i: usize, j: usize| {
        b[i].leading_monomial()
            .unwrap()
            .lcm(b[j].leading_monomial().unwrap())
    };
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert((lcm_of(&basis, i, j), i, j));
        }
    }
    while let Some((lcm, i, j)) = queue.pop_first() {
        done.insert((i, j));
        if opts.use_criteria {
            let (li, lj) = (
                basis[i].leading_monomial().unwrap(),
                basis[j].leading_monomial().unwrap(),
            );
            if li.coprime(lj) {
                continue;
            }
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            let chained = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].leading_monomial().unwrap().divides(&lcm)
                    && done.contains(&key(i, k))
                    && done.contains(&key(j, k))
            });
            if chained {
                continue;
            }
        }
        let r = reduce_full(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let n = basis.len() - 1;
        for k in 0..n {
            queue.insert((lcm_of(&basis, k, n), k, n));
        }
    }
    Ok(GroebnerBasis {
        ctx,
        variables: variables.to_vec(),
        generators: interreduce(basis),
    })
}

/// Drops redundant leading monomials, then fully reduces each survivor by the rest.
fn interreduce(basis: Vec<Poly>) -> Vec<Poly> {
    let mut minimal: Vec<Poly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.leading_monomial().unwrap();
            k != idx && hm.divides(lm) && (hm != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Poly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, p)| p.clone())
                .collect();
            let (lm, lc) = minimal[i].leading().unwrap();
            let tail = minimal[i].sub(&Poly::term(minimal[i].ctx(), lc.clone(), lm.clone()));
            let mut p = reduce_full(&tail, &others);
            p.add_term(lc.clone(), lm.clone());
            p.monic()
        })
        .collect();
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

/// Standard monomials of the quotient, by increasing degree and, within a
/// degree, decreasing monomial order (so `1` comes first).
pub fn quotient_monomial_basis(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let n = gb.nvars();
    let mut bounds = vec![None; n];
    for lm in gb.leading_monomials() {
        if let Some((i, e)) = lm.pure_power() {
            bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    let bounds: Vec<u32> = bounds
        .iter()
        .enumerate()
        .map(|(i, b)| b.ok_or(Error::InfiniteDimensional(i)))
        .collect::<Result<_>>()?;
    let lms: Vec<&Monomial> = gb.leading_monomials().collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(exps.clone());
        if !lms.iter().any(|lm| lm.divides(&m)) {
            out.push(m);
        }
        // odometer over the box of exponents below the pure-power bounds
        let mut k = 0;
        loop {
            if k == n {
                out.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp(a)));
                return Ok(out);
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// Coordinates of `normal_form(f)` in the standard-monomial basis.
pub fn coordinates(gb: &GroebnerBasis, basis: &[Monomial], f: &Poly) -> Vec<Scalar> {
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut v = vec![gb.ctx().zero(); basis.len()];
    for (m, c) in gb.normal_form(f).terms() {
        let i = index[m];
        v[i] = c.clone();
    }
    v
}

/// Structure constants as left-multiplication matrices: column `j` of entry
/// `i` is the coordinate vector of `basis[i] · basis[j]`.
pub fn multiplication_table(gb: &GroebnerBasis, basis: &[Monomial]) -> Vec<Matrix> {
    let ctx = gb.ctx();
    let d = basis.len();
    basis
        .iter()
        .map(|bi| {
            let cols: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|bj| coordinates(gb, basis, &Poly::term(ctx, ctx.one(), bi.mul(bj))))
                .collect();
            Matrix::from_columns(ctx, d, &cols)
        })
        .collect()
}
