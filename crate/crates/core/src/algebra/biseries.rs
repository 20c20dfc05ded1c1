use num_traits::Zero;
use std::fmt;

use super::rational::{format_rational, BigRational};
use super::series::SeriesX;

/// Bivariate series in `x`, `y`, truncated at `x^x_order` and `y^y_order`.
///
/// Indexing is `(i, j)` for the monomial `x^i y^j`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries {
    x_order: usize,
    y_order: usize,
    coeffs: Vec<Vec<BigRational>>,
}

impl BiSeries {
    pub fn zero(x_order: usize, y_order: usize) -> Self {
        BiSeries {
            x_order,
            y_order,
            coeffs: vec![vec![BigRational::zero(); y_order + 1]; x_order + 1],
        }
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn y_order(&self) -> usize {
        self.y_order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.coeffs[i][j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.coeffs[i][j]
    }

    /// Adds `s(x) * y^j` into the grid.
    pub fn add_row(&mut self, j: usize, s: &SeriesX) {
        if j > self.y_order {
            return;
        }
        for i in 0..=self.x_order.min(s.order()) {
            self.coeffs[i][j] += s.coeff(i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    /// Coefficientwise map over `(i, j, value)`.
    pub fn map_indexed(&self, f: impl Fn(usize, usize, &BigRational) -> BigRational) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().enumerate().map(|(j, v)| f(i, j, v)).collect())
            .collect();
        BiSeries {
            x_order: self.x_order,
            y_order: self.y_order,
            coeffs,
        }
    }

    /// Restriction to smaller truncation orders.
    pub fn truncate(&self, x_order: usize, y_order: usize) -> Self {
        let (xo, yo) = (x_order.min(self.x_order), y_order.min(self.y_order));
        let mut out = Self::zero(xo, yo);
        for i in 0..=xo {
            for j in 0..=yo {
                out.coeffs[i][j] = self.coeffs[i][j].clone();
            }
        }
        out
    }

    /// The `y^j` slice as a series in `x`.
    pub fn y_slice(&self, j: usize) -> SeriesX {
        SeriesX::from_coeffs(
            (0..=self.x_order)
                .map(|i| self.coeffs[i][j].clone())
                .collect(),
            self.x_order,
        )
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BiSeries(x<={}, y<={})", self.x_order, self.y_order)?;
        for (i, row) in self.coeffs.iter().enumerate() {
            let cells: Vec<_> = row.iter().map(format_rational).collect();
            writeln!(f, "  x^{i}: [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
