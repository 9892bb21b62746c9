//! Real polynomials used as test functions for linear eigenvalue statistics.

use crate::scalar::Scalar;

/// A polynomial `f(x) = a_0 + a_1 x + ... + a_d x^d`, stored dense.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyFn<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> PolyFn<S> {
    /// Build from ascending coefficients `[a_0, a_1, ...]`. Trailing zeros
    /// are stripped; the zero polynomial is represented by an empty list.
    pub fn new(coeffs: Vec<S>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyFn { coeffs }
    }

    pub fn zero() -> Self {
        PolyFn { coeffs: Vec::new() }
    }

    /// The monomial `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![S::zero(); d + 1];
        coeffs[d] = S::one();
        PolyFn { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> PolyFn<S> {
        if self.coeffs.len() <= 1 {
            return PolyFn::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| S::from_int(k as i64) * c.clone())
            .collect();
        PolyFn::new(coeffs)
    }

    /// Coefficients of `x f'(x)`: entry `k` is `k * a_k`. This is the vector
    /// paired against the covariance series; the constant slot is always 0.
    pub fn x_derivative_coeffs(&self) -> Vec<S> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| S::from_int(k as i64) * c.clone())
            .collect()
    }

    pub fn add(&self, other: &PolyFn<S>) -> PolyFn<S> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        PolyFn::new(coeffs)
    }

    pub fn scale(&self, s: &S) -> PolyFn<S> {
        PolyFn::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn mul(&self, other: &PolyFn<S>) -> PolyFn<S> {
        if self.is_zero() || other.is_zero() {
            return PolyFn::zero();
        }
        let mut coeffs = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        PolyFn::new(coeffs)
    }

    /// `f(x + c)` via binomial re-expansion.
    pub fn shift(&self, c: &S) -> PolyFn<S> {
        let mut acc = PolyFn::zero();
        // Horner on (x + c): acc = acc * (x + c) + a_k, from the top down.
        let lin = PolyFn::new(vec![c.clone(), S::one()]);
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&PolyFn::new(vec![a.clone()]));
        }
        acc
    }

    /// `f(x^2)`; the bookkeeping substitution that turns a Wishart statistic
    /// into a statistic of the square-root model.
    pub fn substitute_square(&self) -> PolyFn<S> {
        let mut coeffs = vec![S::zero(); 2 * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        PolyFn::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    #[test]
    fn eval_and_derivative() {
        let f: PolyFn<f64> = PolyFn::from_ints(&[1, 0, 3]); // 1 + 3x^2
        assert_eq!(f.eval(&2.0), 13.0);
        assert_eq!(f.derivative().coeffs(), &[0.0, 6.0]);
        assert_eq!(f.x_derivative_coeffs(), vec![0.0, 0.0, 6.0]);
    }

    #[test]
    fn shift_expands_binomially() {
        // (x + 2)^2 = x^2 + 4x + 4
        let f: PolyFn<Rat> = PolyFn::monomial(2);
        let g = f.shift(&rat(2, 1));
        assert_eq!(g.coeffs(), &[rat(4, 1), rat(4, 1), rat(1, 1)]);
    }

    #[test]
    fn substitute_square() {
        let f: PolyFn<f64> = PolyFn::from_ints(&[0, 1, 2]); // x + 2x^2
        let g = f.substitute_square(); // x^2 + 2x^4
        assert_eq!(g.coeffs(), &[0.0, 0.0, 1.0, 0.0, 2.0]);
    }
}
