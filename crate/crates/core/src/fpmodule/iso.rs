use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{hom_basis, FPModule};
use crate::error::Result;
use crate::exactmath::{FieldCtx, Matrix, Scalar};

pub const DEFAULT_TRIALS: usize = 32;

/// Outcome of an isomorphism test. `Yes` and `No` are always sound;
/// `Unknown` means no invertible homomorphism was found by sampling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// An invertible `A`-linear map `M -> N` as a `kdim(N) × kdim(M)` matrix.
    Yes(Matrix),
    No(String),
    Unknown,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct IsoOptions {
    pub seed: u64,
    pub trials: usize,
    /// Enumerate all of `Hom(M, N)` when it has at most this many elements
    /// and sampling failed.
    pub exhaustive_limit: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            seed: 0,
            trials: DEFAULT_TRIALS,
            // p ≤ 7 and dim Hom ≤ 3
            exhaustive_limit: 343,
        }
    }
}

pub fn is_isomorphic(m: &FPModule, n: &FPModule, seed: u64, trials: usize) -> Result<IsoVerdict> {
    is_isomorphic_with(
        m,
        n,
        IsoOptions {
            seed,
            trials,
            ..IsoOptions::default()
        },
    )
}

/// Checks that `phi` is an invertible module map `M -> N`, independently of
/// how it was found.
pub fn verify_witness(m: &FPModule, n: &FPModule, phi: &Matrix) -> bool {
    if phi.rows() != n.kdim() || phi.cols() != m.kdim() || m.kdim() != n.kdim() {
        return false;
    }
    let equivariant = m
        .realization()
        .var_actions()
        .iter()
        .zip(n.realization().var_actions())
        .all(|(am, an)| an.mul(phi) == phi.mul(am));
    equivariant && phi.rank() == m.kdim()
}

fn combination(
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    maps: &[Matrix],
    coeffs: &[Scalar],
) -> Matrix {
    let mut acc = Matrix::zeros(ctx, rows, cols);
    for (m, c) in maps.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}

pub fn is_isomorphic_with(m: &FPModule, n: &FPModule, opts: IsoOptions) -> Result<IsoVerdict> {
    let hom = hom_basis(m, n)?;
    let ctx = m.ctx();
    if m.kdim() != n.kdim() {
        return Ok(IsoVerdict::No(format!(
            "k-dimensions differ ({} vs {})",
            m.kdim(),
            n.kdim()
        )));
    }
    if m.min_generators() != n.min_generators() {
        return Ok(IsoVerdict::No(format!(
            "minimal generator counts differ ({} vs {})",
            m.min_generators(),
            n.min_generators()
        )));
    }
    if m.kdim() == 0 {
        return Ok(IsoVerdict::Yes(Matrix::zeros(ctx, 0, 0)));
    }
    let (lm, ln) = (
        m.realization().action_data().loewy_dims(),
        n.realization().action_data().loewy_dims(),
    );
    if lm != ln {
        return Ok(IsoVerdict::No(format!(
            "radical layers differ ({lm:?} vs {ln:?})"
        )));
    }
    if m.socle_dim() != n.socle_dim() {
        return Ok(IsoVerdict::No(format!(
            "socle dimensions differ ({} vs {})",
            m.socle_dim(),
            n.socle_dim()
        )));
    }
    if hom.dim() == 0 {
        return Ok(IsoVerdict::No("Hom(M, N) = 0".into()));
    }
    let (emm, enn) = (hom_basis(m, m)?.dim(), hom_basis(n, n)?.dim());
    if emm != enn || emm != hom.dim() {
        return Ok(IsoVerdict::No(format!(
            "Hom dimensions differ (End M: {emm}, End N: {enn}, Hom(M, N): {})",
            hom.dim()
        )));
    }

    let k = m.kdim();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.trials {
        let coeffs: Vec<Scalar> = (0..hom.dim()).map(|_| ctx.random(&mut rng)).collect();
        let phi = combination(ctx, k, k, &hom.maps, &coeffs);
        if phi.rank() == k && verify_witness(m, n, &phi) {
            return Ok(IsoVerdict::Yes(phi));
        }
    }

    if let Some(elements) = ctx.elements() {
        let size = (elements.len() as u64).checked_pow(hom.dim() as u32);
        if size.is_some_and(|s| s <= opts.exhaustive_limit) {
            let mut idx = vec![0usize; hom.dim()];
            loop {
                let coeffs: Vec<Scalar> = idx.iter().map(|&i| elements[i].clone()).collect();
                let phi = combination(ctx, k, k, &hom.maps, &coeffs);
                if phi.rank() == k && verify_witness(m, n, &phi) {
                    return Ok(IsoVerdict::Yes(phi));
                }
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        return Ok(IsoVerdict::No(
                            "no invertible map in Hom(M, N) (exhaustive search)".into(),
                        ));
                    }
                    idx[pos] += 1;
                    if idx[pos] < elements.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        }
    }
    Ok(IsoVerdict::Unknown)
}
