//! Truncated univariate power series over exact rationals, polynomials in an
//! auxiliary variable with series coefficients, Chebyshev polynomials, and
//! elementary symmetric functions.
//!
//! Invariants:
//! - a [`TruncSeries`] stores coefficients c_0..c_N; N is the truncation
//!   order and is tracked explicitly (no silent extension by zeros);
//! - arithmetic results carry truncation order = min of the operand orders;
//! - reciprocals require a nonzero constant term; division by a series with
//!   positive valuation shifts both sides down exactly and loses that many
//!   orders.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("reciprocal of a series with zero constant term")]
    NonUnitReciprocal,
    #[error("valuation of the divisor ({divisor}) exceeds the dividend's ({dividend})")]
    ValuationMismatch { dividend: usize, divisor: usize },
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("expected valuation {expected} but found {found}")]
    UnexpectedValuation { expected: usize, found: usize },
    #[error("polynomial division by (1+y) leaves a nonzero remainder")]
    PolyRemainder,
    #[error("coefficient of x^{index} is {value}, not a nonnegative integer")]
    NonIntegralCoefficient { index: usize, value: String },
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// A power series truncated after x^order: coefficients c_0..c_order, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    /// The zero series known to the given order.
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant 1 series.
    pub fn one(order: usize) -> Self {
        TruncSeries::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial c·x^power (zero if the power exceeds the order).
    pub fn monomial(c: BigRational, power: usize, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// x itself.
    pub fn x(order: usize) -> Self {
        TruncSeries::monomial(BigRational::one(), 1, order)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// c_n; panics beyond the truncation order, where it is unknown.
    pub fn coefficient(&self, n: usize) -> &BigRational {
        assert!(
            n <= self.order(),
            "coefficient x^{n} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Re-truncates to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> TruncSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        TruncSeries { coeffs }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        TruncSeries { coeffs }
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &BigRational) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs }
    }

    /// Multiplication by x^m; coefficients past the order fall off.
    pub fn shift_up(&self, m: usize) -> TruncSeries {
        let order = self.order();
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for i in 0..=order.saturating_sub(m) {
            coeffs[i + m] = self.coeffs[i].clone();
        }
        TruncSeries { coeffs }
    }

    /// Exact division by x^m: requires c_0..c_{m−1} = 0; the result is known
    /// only to order − m.
    pub fn shift_down(&self, m: usize) -> Result<TruncSeries, SeriesError> {
        if m == 0 {
            return Ok(self.clone());
        }
        if let Some(v) = self.valuation() {
            if v < m {
                return Err(SeriesError::UnexpectedValuation {
                    expected: m,
                    found: v,
                });
            }
        }
        assert!(m <= self.order(), "shift past the truncation order");
        Ok(TruncSeries {
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    /// 1/self; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<TruncSeries, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::NonUnitReciprocal);
        }
        let order = self.order();
        let inv0 = BigRational::one() / &self.coeffs[0];
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &coeffs[n - i];
                }
            }
            coeffs[n] = -acc * &inv0;
        }
        Ok(TruncSeries { coeffs })
    }

    /// self/other, allowing a divisor with positive valuation when the
    /// dividend's valuation is at least as large. Division is multiplication
    /// by the reciprocal after both sides shift down by the divisor's
    /// valuation; the result loses that many orders.
    pub fn div(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        let dv = other.valuation().ok_or(SeriesError::DivisionByZero)?;
        if dv == 0 {
            return Ok(self.mul(&other.reciprocal()?));
        }
        let nv = self.valuation().unwrap_or(usize::MAX);
        if nv < dv {
            return Err(SeriesError::ValuationMismatch {
                dividend: nv,
                divisor: dv,
            });
        }
        let num = self.shift_down(dv)?;
        let den = other.shift_down(dv)?;
        Ok(num.truncate(num.order().min(den.order()))
            .mul(&den.reciprocal()?))
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> TruncSeries {
        let mut result = TruncSeries::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Checks every coefficient is a nonnegative integer and returns them;
    /// the check every avoider-counting series must pass.
    pub fn nonneg_integer_coeffs(&self) -> Result<Vec<num::bigint::BigUint>, SeriesError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() || c.is_negative() {
                return Err(SeriesError::NonIntegralCoefficient {
                    index: i,
                    value: c.to_string(),
                });
            }
            out.push(c.to_integer().to_biguint().expect("nonnegative"));
        }
        Ok(out)
    }
}

impl fmt::Display for TruncSeries {
    /// `c0 + c1*x + c2*x^2 + …` with exact rationals printed `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// A polynomial in an auxiliary variable y whose coefficients are series:
/// `A(y) = Σ a_j y^j`. Trailing zero coefficients are trimmed; every entry
/// carries the same truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<TruncSeries>,
    order: usize,
}

impl SeriesPoly {
    pub fn zero(order: usize) -> Self {
        SeriesPoly {
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn constant(c: TruncSeries) -> Self {
        let order = c.order();
        let mut p = SeriesPoly {
            coeffs: vec![c],
            order,
        };
        p.trim();
        p
    }

    /// Builds from y-coefficients (index = power of y).
    pub fn from_coeffs(coeffs: Vec<TruncSeries>, order: usize) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| {
                assert!(c.order() >= order, "entry order below the poly order");
                c.truncate(order)
            })
            .collect();
        let mut p = SeriesPoly { coeffs, order };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self
            .coeffs
            .last()
            .map(TruncSeries::is_zero)
            .unwrap_or(false)
        {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Degree in y, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// The series coefficient of y^j (zero beyond the degree).
    pub fn coeff_y(&self, j: usize) -> TruncSeries {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| TruncSeries::zero(self.order))
    }

    pub fn add(&self, other: &SeriesPoly) -> SeriesPoly {
        let order = self.order.min(other.order);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|j| self.coeff_y(j).truncate(order).add(&other.coeff_y(j)))
            .collect();
        let mut p = SeriesPoly { coeffs, order };
        p.trim();
        p
    }

    pub fn sub(&self, other: &SeriesPoly) -> SeriesPoly {
        let order = self.order.min(other.order);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|j| self.coeff_y(j).truncate(order).sub(&other.coeff_y(j)))
            .collect();
        let mut p = SeriesPoly { coeffs, order };
        p.trim();
        p
    }

    /// Multiplies every coefficient by a series.
    pub fn scale(&self, c: &TruncSeries) -> SeriesPoly {
        let order = self.order.min(c.order());
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.truncate(order).mul(&c.truncate(order)))
            .collect();
        let mut p = SeriesPoly { coeffs, order };
        p.trim();
        p
    }

    pub fn mul(&self, other: &SeriesPoly) -> SeriesPoly {
        let order = self.order.min(other.order);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return SeriesPoly::zero(order);
        }
        let mut coeffs =
            vec![TruncSeries::zero(order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.truncate(order).mul(&b.truncate(order)));
            }
        }
        let mut p = SeriesPoly { coeffs, order };
        p.trim();
        p
    }

    /// Multiplication by y.
    pub fn mul_y(&self) -> SeriesPoly {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(TruncSeries::zero(self.order));
        coeffs.extend(self.coeffs.iter().cloned());
        SeriesPoly {
            coeffs,
            order: self.order,
        }
    }

    /// Exact division by (1 + y); errors when a remainder is left.
    pub fn div_one_plus_y(&self) -> Result<SeriesPoly, SeriesError> {
        if self.coeffs.is_empty() {
            return Ok(self.clone());
        }
        let d = self.coeffs.len() - 1;
        if d == 0 {
            return if self.coeffs[0].is_zero() {
                Ok(SeriesPoly::zero(self.order))
            } else {
                Err(SeriesError::PolyRemainder)
            };
        }
        // synthetic division from the top: p = (1+y)q + r
        let mut q = vec![TruncSeries::zero(self.order); d];
        q[d - 1] = self.coeffs[d].clone();
        for i in (1..d).rev() {
            q[i - 1] = self.coeffs[i].sub(&q[i]);
        }
        let r = self.coeffs[0].sub(&q[0]);
        if !r.is_zero() {
            return Err(SeriesError::PolyRemainder);
        }
        let mut p = SeriesPoly {
            coeffs: q,
            order: self.order,
        };
        p.trim();
        Ok(p)
    }
}

impl From<TruncSeries> for SeriesPoly {
    fn from(c: TruncSeries) -> Self {
        SeriesPoly::constant(c)
    }
}

/// Dense integer-coefficient polynomial, used for the Chebyshev families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    /// coefficient of t^i at index i; normalized (no trailing zeros except
    /// for the zero polynomial's single entry)
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_default()
                    + other.coeffs.get(i).cloned().unwrap_or_default()
            })
            .collect();
        IntPoly::new(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_default()
                    - other.coeffs.get(i).cloned().unwrap_or_default()
            })
            .collect();
        IntPoly::new(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    pub fn scale(&self, c: i64) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * BigInt::from(c)).collect())
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from(c.clone());
        }
        acc
    }
}

/// Chebyshev polynomial of the first kind: T_0 = 1, T_1 = t,
/// T_i = 2t·T_{i−1} − T_{i−2}.
pub fn chebyshev_t(i: usize) -> IntPoly {
    chebyshev(i, IntPoly::from_i64(&[1]), IntPoly::from_i64(&[0, 1]))
}

/// Chebyshev polynomial of the second kind: U_0 = 1, U_1 = 2t, same
/// recurrence as T.
pub fn chebyshev_u(i: usize) -> IntPoly {
    chebyshev(i, IntPoly::from_i64(&[1]), IntPoly::from_i64(&[0, 2]))
}

fn chebyshev(i: usize, p0: IntPoly, p1: IntPoly) -> IntPoly {
    match i {
        0 => p0,
        1 => p1,
        _ => {
            let two_t = IntPoly::from_i64(&[0, 2]);
            let (mut prev, mut cur) = (p0, p1);
            for _ in 2..=i {
                let next = two_t.mul(&cur).sub(&prev);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// All elementary symmetric functions e_0..e_max of the given series values:
/// e_0 = 1, e_m = 0 for m exceeding the number of values.
pub fn elem_sym_all(max_m: usize, values: &[TruncSeries], order: usize) -> Vec<TruncSeries> {
    let mut e = vec![TruncSeries::zero(order); max_m + 1];
    e[0] = TruncSeries::one(order);
    for v in values {
        let v = v.truncate(order.min(v.order()));
        // descending update keeps each e_j a function of earlier values only
        for j in (1..=max_m).rev() {
            let bump = e[j - 1].mul(&v);
            e[j] = e[j].truncate(bump.order()).add(&bump);
        }
    }
    e
}

/// The m-th elementary symmetric function of the values.
pub fn elem_sym(m: usize, values: &[TruncSeries], order: usize) -> TruncSeries {
    elem_sym_all(m, values, order).pop().expect("length m+1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom(order: usize) -> TruncSeries {
        // 1/(1−x)
        TruncSeries::one(order)
            .sub(&TruncSeries::x(order))
            .reciprocal()
            .unwrap()
    }

    #[test]
    fn geometric_series() {
        let s = geom(8);
        for n in 0..=8 {
            assert_eq!(s.coefficient(n), &rat_int(1));
        }
        // 1/(1−2x) has coefficients 2^n
        let s = TruncSeries::one(8)
            .sub(&TruncSeries::x(8).scalar_mul(&rat_int(2)))
            .reciprocal()
            .unwrap();
        for n in 0..=8usize {
            assert_eq!(s.coefficient(n), &rat_int(1 << n));
        }
    }

    #[test]
    fn reciprocal_is_inverse() {
        let s = TruncSeries::from_coeffs(vec![
            rat_int(2),
            rat(1, 3),
            rat_int(-1),
            rat(5, 7),
            rat_int(0),
            rat_int(4),
        ]);
        let product = s.mul(&s.reciprocal().unwrap());
        assert_eq!(product, TruncSeries::one(5));
    }

    #[test]
    fn reciprocal_requires_unit() {
        assert_eq!(
            TruncSeries::x(4).reciprocal().unwrap_err(),
            SeriesError::NonUnitReciprocal
        );
    }

    #[test]
    fn shifted_division() {
        // x/(x − x²) = 1/(1−x)
        let num = TruncSeries::x(8);
        let den = TruncSeries::x(8).sub(&TruncSeries::monomial(rat_int(1), 2, 8));
        let q = num.div(&den).unwrap();
        assert_eq!(q, geom(7));
        // valuation mismatch is an error
        let err = TruncSeries::one(8).div(&TruncSeries::x(8)).unwrap_err();
        assert!(matches!(err, SeriesError::ValuationMismatch { .. }));
    }

    #[test]
    fn integrality_check() {
        let ok = TruncSeries::from_coeffs(vec![rat_int(1), rat_int(4), rat_int(16)]);
        assert!(ok.nonneg_integer_coeffs().is_ok());
        let bad = TruncSeries::from_coeffs(vec![rat_int(1), rat(1, 2)]);
        assert!(matches!(
            bad.nonneg_integer_coeffs().unwrap_err(),
            SeriesError::NonIntegralCoefficient { index: 1, .. }
        ));
    }

    #[test]
    fn display_format() {
        let s = TruncSeries::from_coeffs(vec![rat_int(1), rat(1, 2), rat_int(0), rat_int(3)]);
        assert_eq!(s.to_string(), "1 + 1/2*x + 0*x^2 + 3*x^3");
    }

    #[test]
    fn ring_laws_on_random_series() {
        // deterministic pseudo-random rational series, order ≤ 16
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut random_series = |order: usize| {
            let coeffs = (0..=order)
                .map(|_| rat((next() % 19) as i64 - 9, (next() % 7 + 1) as i64))
                .collect();
            TruncSeries::from_coeffs(coeffs)
        };
        for _ in 0..25 {
            let a = random_series(16);
            let b = random_series(16);
            let c = random_series(16);
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.add(&b).sub(&b), a);
        }
    }

    #[test]
    fn chebyshev_small_cases() {
        assert_eq!(chebyshev_t(2), IntPoly::from_i64(&[-1, 0, 2]));
        assert_eq!(chebyshev_u(2), IntPoly::from_i64(&[-1, 0, 4]));
        for i in 0..=20 {
            assert_eq!(chebyshev_t(i).eval_rational(&rat_int(1)), rat_int(1));
        }
    }

    #[test]
    fn chebyshev_pell_identity() {
        // T_i² − (t²−1)·U_{i−1}² = 1
        let t2_minus_1 = IntPoly::from_i64(&[-1, 0, 1]);
        for i in 1..=12 {
            let t = chebyshev_t(i);
            let u = chebyshev_u(i - 1);
            let lhs = t.mul(&t).sub(&t2_minus_1.mul(&u.mul(&u)));
            assert_eq!(lhs, IntPoly::from_i64(&[1]), "i = {i}");
        }
    }

    #[test]
    fn elem_sym_conventions() {
        let order = 6;
        let vals: Vec<TruncSeries> = (1..=3)
            .map(|i| TruncSeries::constant(rat_int(i), order))
            .collect();
        assert_eq!(elem_sym(0, &vals, order), TruncSeries::one(order));
        assert_eq!(elem_sym(0, &[], order), TruncSeries::one(order));
        assert_eq!(elem_sym(4, &vals, order), TruncSeries::zero(order));
        assert_eq!(elem_sym(2, &[], order), TruncSeries::zero(order));
        // e_1 = 6, e_2 = 11, e_3 = 6 for values 1, 2, 3
        assert_eq!(elem_sym(1, &vals, order), TruncSeries::constant(rat_int(6), order));
        assert_eq!(
            elem_sym(2, &vals, order),
            TruncSeries::constant(rat_int(11), order)
        );
        assert_eq!(elem_sym(3, &vals, order), TruncSeries::constant(rat_int(6), order));
    }

    #[test]
    fn elem_sym_generating_identity() {
        // Π (1 + v_m z) = Σ e_m z^m as polynomials in z
        let order = 10;
        let vals = [
            TruncSeries::x(order),
            geom(order),
            TruncSeries::constant(rat(3, 2), order),
            TruncSeries::x(order).mul(&TruncSeries::x(order)),
        ];
        let one = SeriesPoly::constant(TruncSeries::one(order));
        let mut product = one.clone();
        for v in &vals {
            let factor = one.add(&SeriesPoly::from_coeffs(
                vec![TruncSeries::zero(order), v.clone()],
                order,
            ));
            product = product.mul(&factor);
        }
        let es = elem_sym_all(vals.len(), &vals, order);
        for (m, e) in es.iter().enumerate() {
            assert_eq!(&product.coeff_y(m), e, "coefficient of z^{m}");
        }
        assert_eq!(product.degree(), Some(vals.len()));
    }

    #[test]
    fn poly_division_by_one_plus_y() {
        let order = 5;
        // (1+y)(x + 2y) = x + (2+x)y + 2y²
        let p = SeriesPoly::from_coeffs(
            vec![
                TruncSeries::x(order),
                TruncSeries::constant(rat_int(2), order).add(&TruncSeries::x(order)),
                TruncSeries::constant(rat_int(2), order),
            ],
            order,
        );
        let q = p.div_one_plus_y().unwrap();
        assert_eq!(q.coeff_y(0), TruncSeries::x(order));
        assert_eq!(q.coeff_y(1), TruncSeries::constant(rat_int(2), order));
        assert_eq!(q.degree(), Some(1));

        // remainder detection
        let bad = SeriesPoly::from_coeffs(
            vec![TruncSeries::one(order), TruncSeries::zero(order), TruncSeries::one(order)],
            order,
        );
        assert_eq!(bad.div_one_plus_y().unwrap_err(), SeriesError::PolyRemainder);
    }
}
