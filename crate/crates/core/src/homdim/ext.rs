use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Matrix;
use crate::fpmodule::FPModule;
use crate::resolution::FreeResolution;

/// `dim_k Ext^i(M, N)` for `lo ≤ i ≤ hi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    pub lo: usize,
    pub hi: usize,
    pub dims: Vec<usize>,
}

impl ExtTable {
    pub fn get(&self, i: usize) -> Option<usize> {
        if i < self.lo || i > self.hi {
            None
        } else {
            Some(self.dims[i - self.lo])
        }
    }
}

/// Cohomology of `Hom(F_•, N)` computed lazily along a resolution of `M`.
/// The resolution is extended on demand, so callers that stop at the first
/// nonvanishing group never pay for long resolutions.
pub struct ExtCalculator {
    target: FPModule,
    ranks: Vec<usize>,
}

impl ExtCalculator {
    pub fn new(res: &FreeResolution, target: &FPModule) -> Result<Self> {
        if !res.algebra().same_as(target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(ExtCalculator {
            target: target.clone(),
            ranks: Vec::new(),
        })
    }

    /// The coboundary `δ^i : N^{β_i} -> N^{β_{i+1}}` induced by `d_{i+1}`.
    pub fn coboundary(res: &mut FreeResolution, target: &FPModule, i: usize) -> Result<Matrix> {
        res.extend_to(i + 1)?;
        let ctx = target.ctx();
        let kn = target.kdim();
        let d = res.differential(i + 1);
        let mut delta = Matrix::zeros(ctx, d.cols() * kn, d.rows() * kn);
        for a in 0..d.rows() {
            for b in 0..d.cols() {
                let e = d.get(a, b);
                if e.iter().any(|s| !s.is_zero()) {
                    delta.set_block(b * kn, a * kn, &target.realization().act(ctx, e));
                }
            }
        }
        Ok(delta)
    }

    fn rank(&mut self, res: &mut FreeResolution, i: usize) -> Result<usize> {
        while self.ranks.len() <= i {
            let j = self.ranks.len();
            let r = Self::coboundary(res, &self.target, j)?.rank();
            self.ranks.push(r);
        }
        Ok(self.ranks[i])
    }

    /// `dim_k Ext^i(M, N)`.
    pub fn dim(&mut self, res: &mut FreeResolution, i: usize) -> Result<usize> {
        let kn = self.target.kdim();
        let ri = self.rank(res, i)?;
        let rprev = if i == 0 { 0 } else { self.rank(res, i - 1)? };
        Ok(res.betti()[i] * kn - ri - rprev)
    }

    pub fn table(&mut self, res: &mut FreeResolution, lo: usize, hi: usize) -> Result<ExtTable> {
        let dims = (lo..=hi).map(|i| self.dim(res, i)).collect::<Result<_>>()?;
        Ok(ExtTable { lo, hi, dims })
    }

    /// Smallest `i` in `lo..=hi` with `Ext^i ≠ 0`.
    pub fn first_nonzero(
        &mut self,
        res: &mut FreeResolution,
        lo: usize,
        hi: usize,
    ) -> Result<Option<usize>> {
        for i in lo..=hi {
            if self.dim(res, i)? != 0 {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

pub fn ext_table(m: &FPModule, n: &FPModule, lo: usize, hi: usize) -> Result<ExtTable> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!(
            "empty Ext range {lo}..{hi}"
        )));
    }
    let mut res = FreeResolution::start(m);
    ext_table_from(&mut res, n, lo, hi)
}

/// Like [`ext_table`] but reusing (and extending) an existing resolution.
pub fn ext_table_from(
    res: &mut FreeResolution,
    n: &FPModule,
    lo: usize,
    hi: usize,
) -> Result<ExtTable> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!(
            "empty Ext range {lo}..{hi}"
        )));
    }
    let mut calc = ExtCalculator::new(res, n)?;
    calc.table(res, lo, hi)
}
