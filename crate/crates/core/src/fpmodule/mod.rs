//! Finitely presented modules over a [`LocalAlgebra`]: concrete `k`-linear
//! realizations, Hom spaces, duals, syzygies, direct sums and isomorphism tests.

mod algmatrix;
mod iso;

use std::sync::Arc;

pub use algmatrix::AlgMatrix;
pub use iso::{
    is_isomorphic, is_isomorphic_with, verify_witness, IsoOptions, IsoVerdict, DEFAULT_TRIALS,
};

use crate::algebra::{Element, LocalAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{Echelon, FieldCtx, Matrix, Scalar};

/// `k`-linear model of a module: a vector space `V = k^kdim` with the action
/// of each variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData {
    pub ctx: FieldCtx,
    pub kdim: usize,
    pub var_actions: Vec<Matrix>,
}

impl ActionData {
    /// Checks that the variable actions commute and annihilate the ideal
    /// generators, i.e. that they define an `A`-module.
    pub fn validate(&self, alg: &LocalAlgebra) -> Result<()> {
        if self.var_actions.len() != alg.nvars() {
            return Err(Error::ActionLaw(format!(
                "{} action matrices for {} variables",
                self.var_actions.len(),
                alg.nvars()
            )));
        }
        for a in &self.var_actions {
            if a.rows() != self.kdim
                || a.cols() != self.kdim
                || a.ctx() != self.ctx
                || self.ctx != alg.ctx()
            {
                return Err(Error::ActionLaw(
                    "action matrix has the wrong shape or field".into(),
                ));
            }
        }
        for i in 0..self.var_actions.len() {
            for j in i + 1..self.var_actions.len() {
                let (a, b) = (&self.var_actions[i], &self.var_actions[j]);
                if a.mul(b) != b.mul(a) {
                    return Err(Error::ActionLaw(format!(
                        "actions of variables {i} and {j} do not commute"
                    )));
                }
            }
        }
        for (n, g) in alg.ideal_generators().iter().enumerate() {
            let mut acc = Matrix::zeros(alg.ctx(), self.kdim, self.kdim);
            for (m, c) in g.terms() {
                acc = acc.add(&self.monomial_action(alg.ctx(), m.exponents()).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::ActionLaw(format!(
                    "ideal generator {n} acts nontrivially"
                )));
            }
        }
        Ok(())
    }

    fn monomial_action(&self, ctx: FieldCtx, exps: &[u32]) -> Matrix {
        let mut acc = Matrix::identity(ctx, self.kdim);
        for (v, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                acc = acc.mul(&self.var_actions[v]);
            }
        }
        acc
    }

    /// Action of every standard basis monomial of the algebra.
    pub fn basis_actions(&self, alg: &LocalAlgebra) -> Vec<Matrix> {
        alg.basis()
            .iter()
            .map(|m| self.monomial_action(alg.ctx(), m.exponents()))
            .collect()
    }

    /// `dim_k (mV)`.
    pub fn radical_dim(&self) -> usize {
        let mut e = Echelon::new(self.kdim);
        for a in &self.var_actions {
            for c in a.columns() {
                e.insert(&c);
            }
        }
        e.dim()
    }

    /// `dim_k m^i V` for `i = 0, 1, ...` until it vanishes.
    pub fn loewy_dims(&self) -> Vec<usize> {
        let mut current = Matrix::identity(self.ctx, self.kdim).columns();
        let mut dims = Vec::new();
        while !current.is_empty() {
            dims.push(current.len());
            let mut e = Echelon::new(self.kdim);
            let mut next = Vec::new();
            for w in &current {
                for a in &self.var_actions {
                    let v = a.mul_vec(w);
                    if e.insert(&v) {
                        next.push(v);
                    }
                }
            }
            current = next;
        }
        dims
    }

    /// `dim_k` of the socle `{v : m v = 0}`.
    pub fn socle_dim(&self) -> usize {
        let mut stacked = Matrix::zeros(self.ctx, 0, self.kdim);
        for a in &self.var_actions {
            stacked = stacked.vstack(a);
        }
        stacked.kernel_basis().cols()
    }
}

/// The cokernel of a presentation realized as a quotient of `k^(g·dim A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    data: ActionData,
    actions: Vec<Matrix>,
    projection: Matrix,
    section: Matrix,
}

impl Realization {
    pub fn kdim(&self) -> usize {
        self.data.kdim
    }

    pub fn action_data(&self) -> &ActionData {
        &self.data
    }

    pub fn var_actions(&self) -> &[Matrix] {
        &self.data.var_actions
    }

    /// Action of each algebra basis element (`actions()[0]` is the identity).
    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, ctx: FieldCtx, u: &[Scalar]) -> Matrix {
        let mut acc = Matrix::zeros(ctx, self.kdim(), self.kdim());
        for (m, c) in self.actions.iter().zip(u) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    /// Quotient map `A^g -> V`.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// The chosen `k`-linear lift `V -> A^g`.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// Images of the presentation generators in `V`.
    pub fn generator_images(&self, dim: usize) -> Vec<Vec<Scalar>> {
        let g = self.projection.cols() / dim.max(1);
        (0..g).map(|i| self.projection.column(i * dim)).collect()
    }
}

fn realize_presentation(alg: &LocalAlgebra, pres: &AlgMatrix) -> Realization {
    let ctx = alg.ctx();
    let d = alg.dim();
    let g = pres.rows();
    let n = g * d;
    let image = pres.to_linear(alg);
    let rr = image.transpose().rref();
    let mut is_pivot = vec![false; n];
    for &p in &rr.pivots {
        is_pivot[p] = true;
    }
    let complement: Vec<usize> = (0..n).filter(|&t| !is_pivot[t]).collect();
    let kdim = complement.len();
    let mut position = vec![usize::MAX; n];
    for (q, &t) in complement.iter().enumerate() {
        position[t] = q;
    }

    // e_t maps to itself for complement coordinates, and to minus the
    // complement part of its reduced row for pivot coordinates.
    let mut projection = Matrix::zeros(ctx, kdim, n);
    for &t in &complement {
        projection.set(position[t], t, ctx.one());
    }
    for (row, &p) in rr.pivots.iter().enumerate() {
        for &t in &complement {
            let v = rr.reduced.get(row, t);
            if !v.is_zero() {
                projection.set(position[t], p, -v);
            }
        }
    }
    let mut section = Matrix::zeros(ctx, n, kdim);
    for (q, &t) in complement.iter().enumerate() {
        section.set(t, q, ctx.one());
    }

    // column q of the action is π(u · e_t) for t = complement[q] = i·d + l
    let free_action = |u: &Matrix| {
        let mut out = Matrix::zeros(ctx, kdim, kdim);
        for (q, &t) in complement.iter().enumerate() {
            let (i, l) = (t / d, t % d);
            for k in 0..d {
                let c = u.get(k, l);
                if c.is_zero() {
                    continue;
                }
                for row in 0..kdim {
                    let p = projection.get(row, i * d + k);
                    if !p.is_zero() {
                        let v = out.get(row, q) + &(c * p);
                        out.set(row, q, v);
                    }
                }
            }
        }
        out
    };
    let actions: Vec<Matrix> = alg.structure_constants().iter().map(free_action).collect();
    let var_actions: Vec<Matrix> = alg.var_actions().iter().map(free_action).collect();
    Realization {
        data: ActionData {
            ctx,
            kdim,
            var_actions,
        },
        actions,
        projection,
        section,
    }
}

/// A module `A^g / image(P)` for a `g × r` presentation matrix `P`, with its
/// realization computed eagerly.
#[derive(Clone, Debug)]
pub struct FPModule {
    algebra: Arc<LocalAlgebra>,
    presentation: AlgMatrix,
    realization: Realization,
}

impl FPModule {
    pub fn coker(algebra: Arc<LocalAlgebra>, presentation: AlgMatrix) -> Result<Self> {
        let d = algebra.dim();
        for e in presentation.entries() {
            if e.len() != d || e.iter().any(|s| !algebra.ctx().contains(s)) {
                return Err(Error::InvalidArgument(
                    "presentation entry is not an algebra element".into(),
                ));
            }
        }
        let realization = realize_presentation(&algebra, &presentation);
        Ok(FPModule {
            algebra,
            presentation,
            realization,
        })
    }

    pub fn free(algebra: Arc<LocalAlgebra>, rank: usize) -> Self {
        let p = AlgMatrix::zeros(&algebra, rank, 0);
        Self::coker(algebra, p).expect("valid")
    }

    pub fn zero(algebra: Arc<LocalAlgebra>) -> Self {
        Self::free(algebra, 0)
    }

    /// `k = A/m`, presented by the row of variables.
    pub fn residue_field(algebra: Arc<LocalAlgebra>) -> Self {
        let row: Vec<Element> = (0..algebra.nvars())
            .map(|i| algebra.var_element(i).clone())
            .collect();
        let n = row.len();
        let p = AlgMatrix::from_rows(vec![row], n);
        Self::coker(algebra, p).expect("valid")
    }

    pub fn algebra(&self) -> &Arc<LocalAlgebra> {
        &self.algebra
    }

    pub fn ctx(&self) -> FieldCtx {
        self.algebra.ctx()
    }

    pub fn presentation(&self) -> &AlgMatrix {
        &self.presentation
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn kdim(&self) -> usize {
        self.realization.kdim()
    }

    pub fn is_zero(&self) -> bool {
        self.kdim() == 0
    }

    pub fn num_generators(&self) -> usize {
        self.presentation.rows()
    }

    pub fn num_relations(&self) -> usize {
        self.presentation.cols()
    }

    pub fn has_minimal_presentation(&self) -> bool {
        self.presentation.entries_in_max_ideal()
    }

    /// `dim_k M/mM`, the minimal number of generators.
    pub fn min_generators(&self) -> usize {
        self.kdim() - self.realization.data.radical_dim()
    }

    pub fn socle_dim(&self) -> usize {
        self.realization.data.socle_dim()
    }

    /// True iff the module is free, i.e. `kdim = μ(M)·dim A`.
    pub fn is_free(&self) -> bool {
        self.kdim() == self.min_generators() * self.algebra.dim()
    }

    fn check_same_algebra(&self, other: &FPModule) -> Result<()> {
        if self.algebra.same_as(&other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

/// A `k`-basis of `Hom_A(M, N)`.
#[derive(Clone, Debug)]
pub struct HomBasis {
    /// For each basis map, the images of the generators of `M` (concatenated
    /// coordinate vectors in `N`).
    pub generator_images: Vec<Vec<Scalar>>,
    /// Each basis map as a `kdim(N) × kdim(M)` matrix.
    pub maps: Vec<Matrix>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }
}

/// Solves `Σ_i P_ij n_i = 0` for `(n_1, .., n_g) ∈ N^g`.
pub fn hom_basis(m: &FPModule, n: &FPModule) -> Result<HomBasis> {
    m.check_same_algebra(n)?;
    let alg = &m.algebra;
    let ctx = alg.ctx();
    let d = alg.dim();
    let (g, r) = (m.num_generators(), m.num_relations());
    let kn = n.kdim();
    let mut system = Matrix::zeros(ctx, r * kn, g * kn);
    for j in 0..r {
        for i in 0..g {
            let e = m.presentation.get(i, j);
            if !alg.is_zero(e) {
                system.set_block(j * kn, i * kn, &n.realization.act(ctx, e));
            }
        }
    }
    let kernel = system.kernel_basis();
    let generator_images = kernel.columns();
    let maps = generator_images
        .iter()
        .map(|imgs| {
            // Φ: A^g -> N sends b_l e_i to b_l · n_i
            let mut phi = Matrix::zeros(ctx, kn, g * d);
            for i in 0..g {
                let ni = &imgs[i * kn..(i + 1) * kn];
                for (l, act) in n.realization.actions.iter().enumerate() {
                    let col = act.mul_vec(ni);
                    for (row, v) in col.into_iter().enumerate() {
                        phi.set(row, i * d + l, v);
                    }
                }
            }
            phi.mul(&m.realization.section)
        })
        .collect();
    Ok(HomBasis {
        generator_images,
        maps,
    })
}

/// `x · v` for a vector `v ∈ A^n` given in coordinates.
fn free_var_act(alg: &LocalAlgebra, var: usize, v: &[Scalar]) -> Vec<Scalar> {
    let d = alg.dim();
    let a = &alg.var_actions()[var];
    v.chunks(d).flat_map(|block| a.mul_vec(block)).collect()
}

/// Picks minimal generators of the submodule of `A^n` spanned (over `k`) by
/// `subspace`: those spanning vectors that are independent modulo `m·K`.
pub fn minimal_generators_in_free(
    alg: &LocalAlgebra,
    n: usize,
    subspace: &[Vec<Scalar>],
) -> Vec<Vec<Scalar>> {
    let len = n * alg.dim();
    let mut span = Echelon::new(len);
    for v in subspace {
        for x in 0..alg.nvars() {
            span.insert(&free_var_act(alg, x, v));
        }
    }
    subspace
        .iter()
        .filter(|v| span.insert(v))
        .cloned()
        .collect()
}

/// Minimal generators of a module given by action data: standard basis vectors
/// of `V` independent modulo `mV`.
pub fn minimal_generators_of(data: &ActionData) -> Vec<Vec<Scalar>> {
    let mut span = Echelon::new(data.kdim);
    for a in &data.var_actions {
        for c in a.columns() {
            span.insert(&c);
        }
    }
    Matrix::identity(data.ctx, data.kdim)
        .columns()
        .into_iter()
        .filter(|v| span.insert(v))
        .collect()
}

/// The minimal cover `A^g -> V` as a `k`-matrix `kdim × g·dim A`, with the chosen generators.
pub fn cover_map(alg: &LocalAlgebra, data: &ActionData) -> (Vec<Vec<Scalar>>, Matrix) {
    let ctx = alg.ctx();
    let d = alg.dim();
    let gens = minimal_generators_of(data);
    let actions = data.basis_actions(alg);
    let mut eps = Matrix::zeros(ctx, data.kdim, gens.len() * d);
    for (i, g) in gens.iter().enumerate() {
        for (l, act) in actions.iter().enumerate() {
            for (row, v) in act.mul_vec(g).into_iter().enumerate() {
                eps.set(row, i * d + l, v);
            }
        }
    }
    (gens, eps)
}

/// Presents a submodule `K ⊆ A^n` (given by a spanning set) minimally.
pub fn present_submodule(alg: &Arc<LocalAlgebra>, n: usize, subspace: &[Vec<Scalar>]) -> FPModule {
    let d = alg.dim();
    let gens = minimal_generators_in_free(alg, n, subspace);
    let cover = AlgMatrix::from_column_vectors(d, n, &gens);
    let kernel = cover.to_linear(alg).kernel_basis().columns();
    let rels = minimal_generators_in_free(alg, gens.len(), &kernel);
    let pres = AlgMatrix::from_column_vectors(d, gens.len(), &rels);
    FPModule::coker(alg.clone(), pres).expect("valid presentation")
}

/// Minimal presentation of a module given only by its `k`-linear action data.
pub fn present_from_realization(alg: &Arc<LocalAlgebra>, data: &ActionData) -> Result<FPModule> {
    data.validate(alg)?;
    let d = alg.dim();
    let (gens, eps) = cover_map(alg, data);
    let kernel = eps.kernel_basis().columns();
    let rels = minimal_generators_in_free(alg, gens.len(), &kernel);
    let pres = AlgMatrix::from_column_vectors(d, gens.len(), &rels);
    FPModule::coker(alg.clone(), pres)
}

/// `M* = Hom_A(M, A)`, computed as the kernel of `P^T: A^g -> A^r`.
pub fn dual(m: &FPModule) -> FPModule {
    let alg = m.algebra();
    let g = m.num_generators();
    if g == 0 {
        return FPModule::zero(alg.clone());
    }
    let kernel = m
        .presentation
        .transpose()
        .to_linear(alg)
        .kernel_basis()
        .columns();
    present_submodule(alg, g, &kernel)
}

/// `Hom_k(M, k)` with the transposed action. For `M = A` this is the
/// injective hull of `k`.
pub fn matlis_dual(m: &FPModule) -> FPModule {
    let data = ActionData {
        ctx: m.ctx(),
        kdim: m.kdim(),
        var_actions: m
            .realization
            .var_actions()
            .iter()
            .map(Matrix::transpose)
            .collect(),
    };
    present_from_realization(m.algebra(), &data).expect("transposed actions commute")
}

pub fn direct_sum(m: &FPModule, n: &FPModule) -> Result<FPModule> {
    m.check_same_algebra(n)?;
    let pres = m.presentation.block_diagonal(&m.algebra, &n.presentation);
    FPModule::coker(m.algebra.clone(), pres)
}

/// `Ω^n M`, read off the minimal free resolution as the cokernel of `d_{n+1}`.
pub fn syzygy(m: &FPModule, n: usize) -> FPModule {
    if n == 0 {
        return m.clone();
    }
    let res = crate::resolution::minimal_free_resolution(m, n + 1);
    res.syzygy(n)
}
