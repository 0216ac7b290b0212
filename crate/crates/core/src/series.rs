//! Truncated power series in `t` with polynomial coefficients.
//!
//! A series of order `N` carries the coefficients of `t^0..t^N` exactly;
//! arithmetic never consults dropped orders.

use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Poly>,
}

impl TruncatedSeries {
    /// The series with the given `t^0..t^N` coefficients.
    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    pub fn constant(order: usize, c: Poly) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Poly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].add(&other.coeffs[k]))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(Poly::neg).collect(),
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Poly::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn mul_poly(&self, p: &Poly) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    /// Multiply by `t^k`, truncating at the original order.
    pub fn shift(&self, k: usize) -> TruncatedSeries {
        let order = self.order();
        let mut coeffs = vec![Poly::zero(); order + 1];
        if k <= order {
            for i in 0..=order - k {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse of a series with constant coefficient 1:
    /// `r_0 = 1`, `r_k = -sum_{j=1}^{k} s_j r_{k-j}`.
    pub fn inverse_unit(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant);
        }
        let order = self.order();
        let mut r = vec![Poly::zero(); order + 1];
        r[0] = Poly::one();
        for k in 1..=order {
            let mut acc = Poly::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !r[k - j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&r[k - j]));
                }
            }
            r[k] = acc.neg();
        }
        Ok(TruncatedSeries { coeffs: r })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarTable;

    #[test]
    fn geometric_series() {
        // 1/(1-t) = 1 + t + t^2 + t^3 + t^4
        let mut s = TruncatedSeries::one(4);
        s = s.sub(&TruncatedSeries::one(4).shift(1));
        let inv = s.inverse_unit().unwrap();
        for k in 0..=4 {
            assert!(inv.coeff(k).is_one(), "coefficient of t^{k}");
        }
    }

    #[test]
    fn geometric_series_with_poly_ratio() {
        // 1/(1 - ze*zo*t) to order 2 = 1 + ze*zo t + (ze*zo)^2 t^2
        let mut t = VarTable::new();
        let r = t.var("ze").mul(&t.var("zo"));
        let s = TruncatedSeries::one(2).sub(&TruncatedSeries::constant(2, r.clone()).shift(1));
        let inv = s.inverse_unit().unwrap();
        assert!(inv.coeff(0).is_one());
        assert_eq!(inv.coeff(1), &r);
        assert_eq!(inv.coeff(2), &r.pow(2));
    }

    #[test]
    fn inverse_is_two_sided() {
        let mut t = VarTable::new();
        let a = t.var("a");
        let b = t.var("b");
        let mut s = TruncatedSeries::one(6);
        s = s
            .add(&TruncatedSeries::constant(6, a).shift(1))
            .add(&TruncatedSeries::constant(6, b).shift(3));
        let inv = s.inverse_unit().unwrap();
        assert_eq!(s.mul(&inv), TruncatedSeries::one(6));
        assert_eq!(inv.mul(&s), TruncatedSeries::one(6));
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        let s = TruncatedSeries::constant(3, Poly::from_i64(2));
        assert!(matches!(s.inverse_unit(), Err(Error::NonUnitConstant)));
    }

    #[test]
    fn shift_past_the_order_is_zero() {
        let s = TruncatedSeries::one(1);
        assert_eq!(s.shift(3), TruncatedSeries::zero(1));
    }
}
