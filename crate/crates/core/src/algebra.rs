//! Finite-dimensional commutative local algebras `k[x_1..x_n]/I` realized by
//! their standard-monomial basis and structure constants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{Echelon, FieldCtx, Matrix, Scalar};
use crate::groebner::{self, GroebnerBasis, Monomial, Poly};

/// A commutative artinian local algebra. `basis[0]` is the monomial `1`, and
/// the remaining basis elements span the maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalAlgebra {
    ctx: FieldCtx,
    variables: Vec<String>,
    generators: Vec<Poly>,
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    mult: Vec<Matrix>,
    var_elements: Vec<Vec<Scalar>>,
    var_actions: Vec<Matrix>,
    nilpotency_degree: usize,
}

/// An algebra element as its coordinate vector in the standard basis.
pub type Element = Vec<Scalar>;

pub fn build_algebra(variables: &[String], generators: &[Poly]) -> Result<LocalAlgebra> {
    if let Some(i) = generators.iter().position(Poly::has_constant_term) {
        return Err(Error::ConstantTerm(i));
    }
    let gb = groebner::buchberger(generators, variables)?;
    let ctx = gb.ctx();
    let basis = groebner::quotient_monomial_basis(&gb)?;
    let mult = groebner::multiplication_table(&gb, &basis);
    let n = variables.len();
    let var_elements: Vec<Element> = (0..n)
        .map(|i| groebner::coordinates(&gb, &basis, &Poly::var(ctx, n, i)))
        .collect();
    let d = basis.len();
    let var_actions: Vec<Matrix> = var_elements
        .iter()
        .map(|v| combine(ctx, d, &mult, v))
        .collect();

    // locality: every variable acts nilpotently
    for (i, a) in var_actions.iter().enumerate() {
        let mut p = a.clone();
        for _ in 0..d {
            p = p.mul(a);
        }
        if !p.is_zero() {
            return Err(Error::NotLocal(i));
        }
    }

    let mut alg = LocalAlgebra {
        ctx,
        variables: variables.to_vec(),
        generators: generators.to_vec(),
        gb,
        basis,
        mult,
        var_elements,
        var_actions,
        nilpotency_degree: 0,
    };
    alg.nilpotency_degree = alg.max_ideal_power_dims().len() + 1;
    Ok(alg)
}

fn combine(ctx: FieldCtx, d: usize, mats: &[Matrix], coeffs: &[Scalar]) -> Matrix {
    let mut acc = Matrix::zeros(ctx, d, d);
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}

impl LocalAlgebra {
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn ideal_generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Left-multiplication matrix of each basis element.
    pub fn structure_constants(&self) -> &[Matrix] {
        &self.mult
    }

    /// Indices of the basis elements spanning the maximal ideal.
    pub fn m_indices(&self) -> std::ops::Range<usize> {
        1..self.dim()
    }

    /// Smallest `N` with `m^N = 0`.
    pub fn nilpotency_degree(&self) -> usize {
        self.nilpotency_degree
    }

    /// Multiplication-by-`x_i` matrices.
    pub fn var_actions(&self) -> &[Matrix] {
        &self.var_actions
    }

    pub fn var_element(&self, i: usize) -> &Element {
        &self.var_elements[i]
    }

    pub fn zero(&self) -> Element {
        vec![self.ctx.zero(); self.dim()]
    }

    pub fn one(&self) -> Element {
        self.unit_vector(0)
    }

    pub fn unit_vector(&self, i: usize) -> Element {
        let mut v = self.zero();
        v[i] = self.ctx.one();
        v
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    pub fn from_poly(&self, f: &Poly) -> Element {
        groebner::coordinates(&self.gb, &self.basis, f)
    }

    pub fn is_zero(&self, u: &[Scalar]) -> bool {
        u.iter().all(Scalar::is_zero)
    }

    /// Membership in the maximal ideal: zero constant coordinate.
    pub fn in_max_ideal(&self, u: &[Scalar]) -> bool {
        u[0].is_zero()
    }

    pub fn add(&self, u: &[Scalar], v: &[Scalar]) -> Element {
        u.iter().zip(v).map(|(a, b)| a + b).collect()
    }

    pub fn scale(&self, c: &Scalar, u: &[Scalar]) -> Element {
        u.iter().map(|a| a * c).collect()
    }

    /// Matrix of multiplication by `u`.
    pub fn mul_matrix(&self, u: &[Scalar]) -> Matrix {
        assert_eq!(u.len(), self.dim(), "element length");
        combine(self.ctx, self.dim(), &self.mult, u)
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Element {
        assert_eq!(u.len(), self.dim(), "element length");
        assert_eq!(v.len(), self.dim(), "element length");
        let mut out = self.zero();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.mult[i].column(j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// `dim_k m^i` for `i = 1, 2, ...` until the power vanishes.
    pub fn max_ideal_power_dims(&self) -> Vec<usize> {
        let d = self.dim();
        let mut current: Vec<Element> = self.m_indices().map(|i| self.unit_vector(i)).collect();
        let mut dims = Vec::new();
        while !current.is_empty() {
            dims.push(current.len());
            let mut next = Echelon::new(d);
            let mut basis = Vec::new();
            for w in &current {
                for a in &self.var_actions {
                    let v = a.mul_vec(w);
                    if next.insert(&v) {
                        basis.push(v);
                    }
                }
            }
            current = basis;
        }
        dims
    }

    /// Basis (as columns) of the socle `{a : a·m = 0}`.
    pub fn socle(&self) -> Matrix {
        let d = self.dim();
        let mut stacked = Matrix::zeros(self.ctx, 0, d);
        for a in &self.var_actions {
            stacked = stacked.vstack(a);
        }
        stacked.kernel_basis()
    }

    pub fn socle_dim(&self) -> usize {
        self.socle().cols()
    }

    /// Artinian criterion: the socle is one-dimensional.
    pub fn is_gorenstein(&self) -> bool {
        self.socle_dim() == 1
    }

    pub fn element_to_string(&self, u: &[Scalar]) -> String {
        let mut p = Poly::zero(self.ctx, self.nvars());
        for (c, m) in u.iter().zip(&self.basis) {
            p.add_term(c.clone(), m.clone());
        }
        p.display_with(&self.variables)
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}
