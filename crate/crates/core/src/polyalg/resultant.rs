use std::fmt;

use super::RatPoly;
use crate::error::{Error, Result};
use crate::exactnum::BigRational;

/// A polynomial in u with coefficients in ℚ[z]: Σ a_i(z) u^i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyInU {
    coeffs: Vec<RatPoly>,
}

impl PolyInU {
    pub fn new(mut coeffs: Vec<RatPoly>) -> Self {
        while coeffs.last().is_some_and(RatPoly::is_zero) {
            coeffs.pop();
        }
        PolyInU { coeffs }
    }

    /// A polynomial of u-degree 0.
    pub fn constant(c: RatPoly) -> Self {
        PolyInU::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_u(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RatPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(RatPoly::zero)
    }

    /// Value at the point (z, u).
    pub fn evaluate(&self, z: &BigRational, u: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::from_integer(0.into()), |acc, c| acc * u + c.evaluate(z))
    }

    /// Specialization at a fixed z, as a polynomial in u over ℚ.
    pub fn at_z(&self, z: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c.evaluate(z)).collect())
    }
}

impl fmt::Display for PolyInU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})u"),
                _ => format!("({c})u^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Res_u(A, B): determinant of the Sylvester matrix with the deg_u B shifted
/// copies of A in the top rows, coefficients highest power first.
///
/// Conventions: two nonzero constants give 1; a zero argument with a nonzero
/// partner gives 0.
pub fn resultant_in_u(a: &PolyInU, b: &PolyInU) -> Result<RatPoly> {
    let (Some(m), Some(n)) = (a.degree_u(), b.degree_u()) else {
        if a.is_zero() && b.is_zero() {
            return Err(Error::domain("resultant of two zero polynomials"));
        }
        return Ok(RatPoly::zero());
    };
    let size = m + n;
    if size == 0 {
        return Ok(RatPoly::one());
    }
    let mut rows = vec![vec![RatPoly::zero(); size]; size];
    for i in 0..n {
        for j in 0..=m {
            rows[i][i + j] = a.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            rows[n + i][i + j] = b.coeff(n - j);
        }
    }
    Ok(bareiss_det(rows))
}

/// Fraction-free elimination over ℚ[z]; every division is exact.
fn bareiss_det(mut m: Vec<Vec<RatPoly>>) -> RatPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = RatPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return RatPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
