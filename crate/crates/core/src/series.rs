//! Truncated formal power series over a generic coefficient ring.
//!
//! A series stores its coefficients densely up to a fixed truncation order.
//! Binary operations truncate to the smaller operand order, so precision is
//! never silently invented. Multiplication walks the sparser operand on the
//! outside, which matters for the eta-type products built in [`crate::forms`]
//! whose factors have only `order / t` nonzero terms.

use num_bigint::BigInt;

use crate::ring::{CoefficientRing, ExactIntegers, ResidueRing};
use crate::{Error, Result};

/// Sign of the variable term in a two-term factor `1 ± q^t`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorSign {
    Plus,
    Minus,
}

/// Outcome of a coefficient-by-coefficient comparison of two series over the
/// common truncation order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SeriesComparison {
    /// Order up to which the comparison ran (minimum of the two operands).
    pub order: usize,
    /// Smallest exponent with differing coefficients, if any.
    pub first_mismatch: Option<usize>,
}

impl SeriesComparison {
    pub fn agrees(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// A formal power series truncated at a fixed order.
///
/// Index `k` of the coefficient vector holds the `q^k` coefficient, so the
/// vector length is always `order + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<R: CoefficientRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: CoefficientRing> TruncatedSeries<R> {
    /// Wraps a coefficient vector. `coeffs[k]` is the `q^k` coefficient and
    /// must be in the canonical form produced by the ring's constructors.
    ///
    /// Panics when `coeffs` is empty: a series carries at least its constant
    /// term.
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Self {
        assert!(!coeffs.is_empty(), "series requires at least a constant term");
        TruncatedSeries { ring, coeffs }
    }

    /// Builds a series from small integer coefficients.
    pub fn from_i64_coeffs(ring: R, coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "series requires at least a constant term");
        let elems = coeffs.iter().map(|&c| ring.embed_i64(c)).collect();
        TruncatedSeries { ring, coeffs: elems }
    }

    /// The zero series truncated at `order`.
    pub fn zero(ring: R, order: usize) -> Self {
        let coeffs = vec![ring.zero(); order + 1];
        TruncatedSeries { ring, coeffs }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(ring: R, order: usize) -> Self {
        let mut coeffs = vec![ring.zero(); order + 1];
        coeffs[0] = ring.one();
        TruncatedSeries { ring, coeffs }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Truncation order; coefficients are known for exponents `0..=order()`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The `q^k` coefficient. Panics when `k` exceeds the truncation order.
    pub fn coeff(&self, k: usize) -> &R::Elem {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// Copy truncated to a lower order. Panics when `order` exceeds the
    /// current order: truncation never invents coefficients.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            ring: self.ring.clone(),
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.name(),
                right: other.ring.name(),
            });
        }
        Ok(())
    }

    /// Product truncated to the smaller operand order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let ring = self.ring.clone();
        let order = self.order().min(other.order());
        let nonzeros = |s: &Self| {
            s.coeffs[..=order]
                .iter()
                .filter(|c| !ring.is_zero(c))
                .count()
        };
        // Walk the sparser operand on the outside: eta-product factors have
        // O(order / t) terms and this keeps the pass over them short.
        let (outer, inner) = if nonzeros(self) <= nonzeros(other) {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = vec![ring.zero(); order + 1];
        for (j, oj) in outer.coeffs[..=order].iter().enumerate() {
            if ring.is_zero(oj) {
                continue;
            }
            for (i, ii) in inner.coeffs[..=(order - j)].iter().enumerate() {
                if ring.is_zero(ii) {
                    continue;
                }
                ring.mul_add_assign(&mut acc[i + j], ii, oj);
            }
        }
        Ok(TruncatedSeries { ring, coeffs: acc })
    }

    /// Multiplicative inverse at the same order. The constant term must be a
    /// unit of the coefficient ring.
    pub fn inverse(&self) -> Result<Self> {
        let ring = self.ring.clone();
        let inv0 = ring
            .inverse(&self.coeffs[0])
            .ok_or(Error::NonUnitConstantTerm)?;
        let order = self.order();
        // b_0 = a_0^{-1};  b_n = -a_0^{-1} * sum_{k=1}^{n} a_k b_{n-k}
        let neg_inv0 = ring.neg(&inv0);
        let support: Vec<usize> = (1..=order)
            .filter(|&k| !ring.is_zero(&self.coeffs[k]))
            .collect();
        let mut out = Vec::with_capacity(order + 1);
        out.push(inv0);
        for n in 1..=order {
            let mut sum = ring.zero();
            for &k in support.iter().take_while(|&&k| k <= n) {
                ring.mul_add_assign(&mut sum, &self.coeffs[k], &out[n - k]);
            }
            out.push(ring.mul(&neg_inv0, &sum));
        }
        Ok(TruncatedSeries { ring, coeffs: out })
    }

    /// Integer power by binary exponentiation; negative exponents invert
    /// first and therefore require a unit constant term.
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        if exponent == 0 {
            return Ok(Self::one(self.ring.clone(), self.order()));
        }
        let base = if exponent < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut remaining = exponent.unsigned_abs();
        let mut result = Self::one(self.ring.clone(), self.order());
        let mut power = base;
        loop {
            if remaining & 1 == 1 {
                result = result.mul(&power).expect("power shares the ring");
            }
            remaining >>= 1;
            if remaining == 0 {
                break;
            }
            power = power.mul(&power).expect("power shares the ring");
        }
        Ok(result)
    }

    /// The product `prod_{s >= 1} (1 + sign * q^(step * s))^exponent`
    /// truncated at `order`. Only factors with `step * s <= order`
    /// contribute.
    ///
    /// Each factor is expanded directly through the generalized binomial
    /// series, which is valid for negative exponents as well, so no
    /// intermediate inversion is needed.
    pub fn factor_product(
        step: usize,
        sign: FactorSign,
        exponent: i64,
        order: usize,
        ring: R,
    ) -> Self {
        assert!(step >= 1, "factor step must be positive");
        let mut acc = Self::one(ring.clone(), order);
        if exponent == 0 {
            return acc;
        }
        let mut t = step;
        while t <= order {
            let factor = Self::two_term_power(t, sign, exponent, order, &ring);
            acc = acc.mul(&factor).expect("factors share the ring");
            t += step;
        }
        acc
    }

    /// `(1 + sign * q^t)^exponent` truncated at `order`, via the binomial
    /// recurrence `C(e, k+1) = C(e, k) * (e - k) / (k + 1)` (the division is
    /// exact at every step, for negative `e` too).
    fn two_term_power(
        t: usize,
        sign: FactorSign,
        exponent: i64,
        order: usize,
        ring: &R,
    ) -> Self {
        let mut coeffs = vec![ring.zero(); order + 1];
        coeffs[0] = ring.one();
        let mut binom = BigInt::from(1);
        let mut k: usize = 0;
        while (k + 1) * t <= order {
            binom = binom * BigInt::from(exponent as i128 - k as i128)
                / BigInt::from(k as i128 + 1);
            if num_traits::Zero::is_zero(&binom) {
                break; // nonnegative exponent exhausted: all later terms vanish
            }
            let signed = if sign == FactorSign::Minus && (k + 1) % 2 == 1 {
                -&binom
            } else {
                binom.clone()
            };
            coeffs[(k + 1) * t] = ring.embed_bigint(&signed);
            k += 1;
        }
        TruncatedSeries {
            ring: ring.clone(),
            coeffs,
        }
    }

    /// Coefficients in the residue class `residue` mod `step`, in order of
    /// increasing exponent: `a_r, a_{r+step}, ...` up to the truncation
    /// order. Requires `residue < step`.
    pub fn dissect(&self, step: usize, residue: usize) -> Result<Vec<R::Elem>> {
        if step == 0 || residue >= step {
            return Err(Error::DissectResidueOutOfRange { step, residue });
        }
        Ok(self
            .coeffs
            .iter()
            .skip(residue)
            .step_by(step)
            .cloned()
            .collect())
    }

    /// Compares coefficients up to the common truncation order.
    pub fn compare(&self, other: &Self) -> Result<SeriesComparison> {
        self.check_same_ring(other)?;
        let order = self.order().min(other.order());
        let first_mismatch = (0..=order).find(|&k| self.coeffs[k] != other.coeffs[k]);
        Ok(SeriesComparison {
            order,
            first_mismatch,
        })
    }
}

impl TruncatedSeries<ExactIntegers> {
    /// Reduces every coefficient into the residue ring mod `modulus`.
    pub fn reduce_mod(&self, modulus: u64) -> Result<TruncatedSeries<ResidueRing>> {
        let ring = ResidueRing::new(modulus)?;
        let coeffs = self.coeffs.iter().map(|c| ring.embed_bigint(c)).collect();
        Ok(TruncatedSeries::new(ring, coeffs))
    }
}
