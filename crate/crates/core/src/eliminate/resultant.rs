//! Sylvester matrices and resultants in one variable.

use super::gcd::exact;
use super::prs::resultant_prs;
use super::ElimError;
use crate::mvpoly::{MultiPoly, Var};

/// Largest Sylvester dimension accepted by the cofactor-expansion oracle.
pub const ORACLE_MAX_DIM: usize = 8;

/// Below this degree (of either operand) the subresultant sequence is used.
const PRS_MAX_DEGREE: u32 = 2;

/// Sylvester matrix of `f` and `g` with respect to one variable: `deg g`
/// shifted rows of the coefficients of `f` (leading coefficient first),
/// followed by `deg f` shifted rows of `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterMatrix {
    dim: usize,
    entries: Vec<MultiPoly>,
}

impl SylvesterMatrix {
    pub fn new(f: &MultiPoly, g: &MultiPoly, v: Var) -> Result<SylvesterMatrix, ElimError> {
        if f.universe() != g.universe() {
            return Err(crate::mvpoly::PolyError::UniverseMismatch.into());
        }
        if f.is_zero() || g.is_zero() {
            return Err(ElimError::ZeroPolynomial);
        }
        let (df, dg) = (f.degree_in(v) as usize, g.degree_in(v) as usize);
        if df == 0 && dg == 0 {
            return Err(ElimError::ConstantInVariable);
        }
        let dim = df + dg;
        let zero = MultiPoly::zero(f.universe());
        let mut entries = vec![zero; dim * dim];
        let fc = f.coefficients_in(v);
        let gc = g.coefficients_in(v);
        for i in 0..dg {
            for j in 0..=df {
                entries[i * dim + i + j] = fc[df - j].clone();
            }
        }
        for i in 0..df {
            for j in 0..=dg {
                entries[(dg + i) * dim + i + j] = gc[dg - j].clone();
            }
        }
        Ok(SylvesterMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.dim + j]
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division is
    /// exact and checked.
    pub fn determinant_bareiss(&self) -> Result<MultiPoly, ElimError> {
        let n = self.dim;
        let u = self.entries[0].universe().clone();
        let mut a: Vec<Vec<MultiPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = MultiPoly::one(&u);
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(MultiPoly::zero(&u));
                };
                a.swap(k, p);
                negate = !negate;
            }
            let (top, rest) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let pivot = &pivot_row[k];
            for row in rest.iter_mut() {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let mut v = &row[j] * pivot;
                    if !lead.is_zero() && !pivot_row[j].is_zero() {
                        v = v - &lead * &pivot_row[j];
                    }
                    row[j] = if prev.is_one() || v.is_zero() { v } else { exact(&v, &prev, "Bareiss step")? };
                }
                row[k] = MultiPoly::zero(&u);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn determinant_cofactor(&self) -> MultiPoly {
        let cols: Vec<usize> = (0..self.dim).collect();
        self.minor(0, &cols)
    }

    fn minor(&self, row: usize, cols: &[usize]) -> MultiPoly {
        let u = self.entries[0].universe();
        if cols.len() == 1 {
            return self.entry(row, cols[0]).clone();
        }
        let mut acc = MultiPoly::zero(u);
        for (pos, &c) in cols.iter().enumerate() {
            let e = self.entry(row, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e * &self.minor(row + 1, &rest);
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
}

fn degenerate(f: &MultiPoly, g: &MultiPoly, v: Var) -> Result<Option<MultiPoly>, ElimError> {
    if f.universe() != g.universe() {
        return Err(crate::mvpoly::PolyError::UniverseMismatch.into());
    }
    if f.is_zero() || g.is_zero() {
        return Err(ElimError::ZeroPolynomial);
    }
    let (df, dg) = (f.degree_in(v), g.degree_in(v));
    Ok(match (df, dg) {
        (0, 0) => return Err(ElimError::ConstantInVariable),
        (_, 0) => Some(g.pow(df)),
        (0, _) => Some(f.pow(dg)),
        _ => None,
    })
}

/// Resultant of `f` and `g` with respect to `v`: the determinant of their
/// Sylvester matrix (rows of `f` first).
pub fn resultant(f: &MultiPoly, g: &MultiPoly, v: Var) -> Result<MultiPoly, ElimError> {
    if let Some(r) = degenerate(f, g, v)? {
        return Ok(r);
    }
    if f.degree_in(v).min(g.degree_in(v)) <= PRS_MAX_DEGREE {
        resultant_prs(f, g, v)
    } else {
        SylvesterMatrix::new(f, g, v)?.determinant_bareiss()
    }
}

/// The same value as [`resultant`], by naive cofactor expansion. Only for
/// Sylvester dimensions up to [`ORACLE_MAX_DIM`].
pub fn resultant_oracle(f: &MultiPoly, g: &MultiPoly, v: Var) -> Result<MultiPoly, ElimError> {
    if f.is_zero() || g.is_zero() {
        return Err(ElimError::ZeroPolynomial);
    }
    let dim = (f.degree_in(v) + g.degree_in(v)) as usize;
    if dim > ORACLE_MAX_DIM {
        return Err(ElimError::OracleTooLarge(dim));
    }
    Ok(SylvesterMatrix::new(f, g, v)?.determinant_cofactor())
}
