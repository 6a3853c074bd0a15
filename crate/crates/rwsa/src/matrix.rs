//! 4x4 matrices of exact expressions: one homogeneous order of a
//! pseudodifferential symbol.

use crate::error::{Result, RwsaError};
use crate::expr::SymbolExpr;
use crate::rational::GaussRat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixSymbol {
    pub n: usize,
    /// Homogeneity degree in (u_1..u_{2n+2}).
    pub order: i64,
    pub entries: Vec<SymbolExpr>,
}

impl MatrixSymbol {
    pub fn zero(n: usize, order: i64) -> Self {
        MatrixSymbol {
            n,
            order,
            entries: (0..16).map(|_| SymbolExpr::zero(n)).collect(),
        }
    }

    pub fn scalar(n: usize, order: i64, e: SymbolExpr) -> Self {
        let mut m = Self::zero(n, order);
        for i in 0..4 {
            *m.at_mut(i, i) = e.clone();
        }
        m
    }

    pub fn from_entries(n: usize, order: i64, entries: Vec<SymbolExpr>) -> Self {
        assert_eq!(entries.len(), 16);
        MatrixSymbol { n, order, entries }
    }

    pub fn at(&self, row: usize, col: usize) -> &SymbolExpr {
        &self.entries[4 * row + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut SymbolExpr {
        &mut self.entries[4 * row + col]
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(RwsaError::IndexMismatch(self.n, o.n));
        }
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixSymbol {
            n: self.n,
            order: self.order.max(o.order),
            entries,
        })
    }

    pub fn matmul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(RwsaError::IndexMismatch(self.n, o.n));
        }
        let mut out = Self::zero(self.n, self.order + o.order);
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = SymbolExpr::zero(self.n);
                for k in 0..4 {
                    acc = acc.add(&self.at(i, k).mul(o.at(k, j))?)?;
                }
                *out.at_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        MatrixSymbol {
            n: self.n,
            order: self.order,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussRat::from_int(-1))
    }

    /// Multiply every entry by a (scalar) expression.
    pub fn scale_expr(&self, e: &SymbolExpr, order_shift: i64) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.mul(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixSymbol {
            n: self.n,
            order: self.order + order_shift,
            entries,
        })
    }

    pub fn map<F>(&self, order: i64, f: F) -> Result<Self>
    where
        F: Fn(&SymbolExpr) -> Result<SymbolExpr>,
    {
        let entries = self
            .entries
            .iter()
            .map(f)
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixSymbol {
            n: self.n,
            order,
            entries,
        })
    }

    pub fn d_u(&self, j: usize) -> Result<Self> {
        self.map(self.order - 1, |e| e.d_u(j))
    }

    pub fn d_t(&self) -> Result<Self> {
        self.map(self.order, |e| e.d_t())
    }

    pub fn d_eta(&self) -> Result<Self> {
        self.map(self.order, |e| e.d_eta())
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Result<SymbolExpr> {
        let mut acc = SymbolExpr::zero(self.n);
        for i in 0..4 {
            acc = acc.add(self.at(i, i))?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Every term of every entry must have u-degree equal to `self.order`.
    pub fn check_homogeneous(&self) -> Result<()> {
        for e in &self.entries {
            if let Some(d) = e.homogeneous_degree()? {
                if d != self.order {
                    return Err(RwsaError::MixedDegrees(d, self.order));
                }
            }
        }
        Ok(())
    }

    pub fn term_count(&self) -> usize {
        self.entries.iter().map(|e| e.len()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_of_scalar() {
        let m = MatrixSymbol::scalar(1, -2, SymbolExpr::inv_q(1, 1));
        let t = m.trace().unwrap();
        let want = SymbolExpr::inv_q(1, 1).scale(&GaussRat::from_int(4));
        assert_eq!(t, want);
    }

    #[test]
    fn trace_of_off_diagonal_is_zero() {
        let mut m = MatrixSymbol::zero(1, 0);
        *m.at_mut(0, 3) = SymbolExpr::var_u(1, 1, 1);
        assert!(m.trace().unwrap().is_zero());
    }
}
