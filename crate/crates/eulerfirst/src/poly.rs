//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{count_to_ratio, Count, Ratio};

/// `coeffs[i]` is the coefficient of x^i. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient vector and
/// a `degree()` of `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Ratio>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Ratio::one())
    }

    pub fn constant(c: Ratio) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Ratio>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_counts(counts: &[Count]) -> Poly {
        Poly::from_coeffs(counts.iter().map(count_to_ratio).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| crate::arith::ratio(c, 1)).collect())
    }

    pub fn coeffs(&self) -> &[Ratio] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Ratio {
        self.coeffs.get(i).cloned().unwrap_or_else(Ratio::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Ratio> {
        self.coeffs.last()
    }

    /// Multiplicity of the root 0, i.e. the number of leading zero
    /// coefficients. Zero for the zero polynomial.
    pub fn ord_zero(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, x: &Ratio) -> Ratio {
        let mut acc = Ratio::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Ratio::from_integer(i.into()))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Ratio) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by x^k.
    pub fn mul_x_pow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Ratio::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact division by x^k; panics if x^k does not divide self.
    pub fn div_x_pow(&self, k: usize) -> Poly {
        assert!(self.ord_zero() >= k || self.is_zero(), "x^{k} does not divide");
        if self.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs[k..].to_vec())
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    /// Panics if div is zero.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Ratio::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / lead;
            if !factor.is_zero() {
                for i in 0..=dd {
                    let t = &div.coeffs[i] * &factor;
                    rem[k + i] -= t;
                }
                quot[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Ratio::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn normalization_and_degree() {
        let p = Poly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::from_i64(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn division_round_trips() {
        let a = Poly::from_i64(&[2, 0, -3, 1, 4]);
        let b = Poly::from_i64(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn derivative_and_eval() {
        let p = Poly::from_i64(&[1, 4, 1]); // 1 + 4x + x^2
        assert_eq!(p.derivative(), Poly::from_i64(&[4, 2]));
        assert_eq!(p.eval(&ratio(1, 1)), ratio(6, 1));
        assert_eq!(p.eval(&ratio(-1, 2)), ratio(-3, 4));
    }

    #[test]
    fn ord_zero() {
        assert_eq!(Poly::from_i64(&[0, 0, 5, 1]).ord_zero(), 2);
        assert_eq!(Poly::from_i64(&[3]).ord_zero(), 0);
        assert_eq!(Poly::zero().ord_zero(), 0);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(Poly::from_i64(&[0, 8, 14, 2]).to_string(), "8x + 14x^2 + 2x^3");
        assert_eq!(Poly::from_i64(&[1, -4]).to_string(), "1 - 4x");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
