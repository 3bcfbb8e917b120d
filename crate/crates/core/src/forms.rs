//! Named q-expansions: the complex and real curve-count generating
//! functions, the Gauss theta series, the reciprocal square root of the
//! discriminant, Eisenstein E4, and Klein's q·j(q).
//!
//! Every expression is arranged so fractional eta prefactors cancel and only
//! integer-exponent q-series remain. Constructors are generic over the
//! coefficient ring, so congruence checks can build these forms directly in
//! a residue ring.

use num_bigint::BigInt;

use crate::ring::CoefficientRing;
use crate::series::{FactorSign, SeriesComparison, TruncatedSeries};
use crate::{Error, Result};

/// Euler characteristic of a complex K3 surface.
pub const EULER_COMPLEX: i64 = 24;

/// Topological type of the real locus of a real K3 surface, identified by
/// its Euler characteristic. Always even; realizable values lie in
/// [-18, 20].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RealTopology {
    euler_real: i64,
}

impl RealTopology {
    pub const MIN_EULER: i64 = -18;
    pub const MAX_EULER: i64 = 20;

    /// A topology within the realizable window: even Euler characteristic in
    /// [-18, 20].
    pub fn new(euler_real: i64) -> Result<Self> {
        let t = Self::exploratory(euler_real)?;
        if !t.is_realizable() {
            return Err(Error::EulerCharacteristicOutOfRange { euler_real });
        }
        Ok(t)
    }

    /// An even Euler characteristic with no range restriction, for exploring
    /// the generating functions beyond geometry. Verification entry points
    /// refuse topologies outside the realizable window.
    pub fn exploratory(euler_real: i64) -> Result<Self> {
        if euler_real % 2 != 0 {
            return Err(Error::OddEulerCharacteristic { euler_real });
        }
        Ok(RealTopology { euler_real })
    }

    pub fn euler_real(self) -> i64 {
        self.euler_real
    }

    /// Whether the Euler characteristic lies in the window realized by
    /// actual real K3 surfaces.
    pub fn is_realizable(self) -> bool {
        (Self::MIN_EULER..=Self::MAX_EULER).contains(&self.euler_real)
    }

    /// Guard for verification entry points: theorem statements are only
    /// claimed on realizable topologies.
    pub fn require_realizable(self) -> Result<()> {
        if self.is_realizable() {
            Ok(())
        } else {
            Err(Error::UnrealizableTopology {
                euler_real: self.euler_real,
            })
        }
    }

    /// The twenty realizable topologies, in increasing Euler characteristic.
    pub fn all_realizable() -> Vec<RealTopology> {
        (Self::MIN_EULER..=Self::MAX_EULER)
            .step_by(2)
            .map(|euler_real| RealTopology { euler_real })
            .collect()
    }
}

/// Generating function of complex rational curve counts:
/// `prod_{s >= 1} (1 - q^s)^{-24}`. The `q^g` coefficient is the count
/// `c_g` of complex rational curves in genus-g polarization.
pub fn yau_zaslow_series<R: CoefficientRing>(order: usize, ring: R) -> TruncatedSeries<R> {
    TruncatedSeries::factor_product(1, FactorSign::Minus, -EULER_COMPLEX, order, ring)
}

/// Generating function of Welschinger invariants for a real topology:
/// `prod (1 + q^r)^{-e_R} * prod (1 - q^(2s))^{-(24 - e_R)/2}`. The `q^g`
/// coefficient is `w_g`.
pub fn welschinger_series<R: CoefficientRing>(
    topology: RealTopology,
    order: usize,
    ring: R,
) -> TruncatedSeries<R> {
    let e = topology.euler_real();
    let odd_factor =
        TruncatedSeries::factor_product(1, FactorSign::Plus, -e, order, ring.clone());
    let even_factor = TruncatedSeries::factor_product(
        2,
        FactorSign::Minus,
        -(EULER_COMPLEX - e) / 2,
        order,
        ring,
    );
    odd_factor.mul(&even_factor).expect("factors share the ring")
}

/// The theta series `1 + 2 * sum_{n >= 1} (-1)^n q^(n^2)`.
pub fn gauss_theta_series<R: CoefficientRing>(order: usize, ring: R) -> TruncatedSeries<R> {
    let mut coeffs = vec![ring.zero(); order + 1];
    coeffs[0] = ring.one();
    let mut n = 1usize;
    while n * n <= order {
        coeffs[n * n] = ring.embed_i64(if n % 2 == 1 { -2 } else { 2 });
        n += 1;
    }
    TruncatedSeries::new(ring, coeffs)
}

/// `prod (1 - q^(2n))^{-12}`: the reciprocal square root of the
/// discriminant in the doubled variable, with eta prefactors cancelled.
/// Supported on even exponents only.
pub fn inv_sqrt_delta_series<R: CoefficientRing>(order: usize, ring: R) -> TruncatedSeries<R> {
    TruncatedSeries::factor_product(2, FactorSign::Minus, -12, order, ring)
}

/// The Welschinger generating function in eta-quotient form:
/// `inv_sqrt_delta * theta^(e_R / 2)`. Agrees with [`welschinger_series`]
/// coefficient-for-coefficient; keeping both routes makes the identity
/// testable.
pub fn welschinger_via_eta_quotient<R: CoefficientRing>(
    topology: RealTopology,
    order: usize,
    ring: R,
) -> TruncatedSeries<R> {
    // e_R is even, so the exponent is an integer; theta has unit constant
    // term, so negative exponents are always defined.
    let theta_power = gauss_theta_series(order, ring.clone())
        .pow(topology.euler_real() / 2)
        .expect("theta has unit constant term");
    inv_sqrt_delta_series(order, ring)
        .mul(&theta_power)
        .expect("factors share the ring")
}

/// Sum of cubes of the divisors of `n`.
///
/// Panics if the sum exceeds `u64` (first possible around `n ~ 2 * 10^6`,
/// far beyond any series order this crate can expand).
pub fn sigma3(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::PositiveIndexRequired {
            context: "divisor cube sum",
        });
    }
    let mut sum: u128 = 0;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            sum += (d as u128).pow(3);
            let paired = n / d;
            if paired != d {
                sum += (paired as u128).pow(3);
            }
        }
        d += 1;
    }
    Ok(u64::try_from(sum).expect("divisor cube sum exceeds u64"))
}

/// Eisenstein series `E4 = 1 + 240 * sum_{n >= 1} sigma3(n) q^n`.
pub fn eisenstein_e4_series<R: CoefficientRing>(order: usize, ring: R) -> TruncatedSeries<R> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(ring.one());
    for n in 1..=order {
        let s = sigma3(n as u64).expect("index is positive");
        coeffs.push(ring.embed_bigint(&(BigInt::from(s) * 240)));
    }
    TruncatedSeries::new(ring, coeffs)
}

/// `q * j(q) = E4^3 * prod (1 - q^n)^{-24}` for Klein's modular function
/// j. The constant term is 1 and the `q^(n+1)` coefficient is the Fourier
/// coefficient `a(n)` of j.
pub fn klein_qj_series<R: CoefficientRing>(order: usize, ring: R) -> TruncatedSeries<R> {
    let e4_cubed = eisenstein_e4_series(order, ring.clone())
        .pow(3)
        .expect("positive exponent");
    e4_cubed
        .mul(&yau_zaslow_series(order, ring))
        .expect("factors share the ring")
}

/// The Fourier coefficient `a(n)` of Klein's j, read off a series built by
/// [`klein_qj_series`]: `a(n)` sits at exponent `n + 1`. `None` when the
/// series is truncated below that exponent.
pub fn klein_a_coefficient<R: CoefficientRing>(
    qj: &TruncatedSeries<R>,
    n: usize,
) -> Option<&R::Elem> {
    qj.coeffs().get(n + 1)
}

/// Checks the Gauss identity
/// `prod (1 - q^n)^2 * prod (1 - q^(2n))^{-1} = theta` exactly up to
/// `order`.
pub fn check_gauss_identity(order: usize) -> SeriesComparison {
    let ring = crate::ring::ExactIntegers;
    let numerator = TruncatedSeries::factor_product(1, FactorSign::Minus, 2, order, ring);
    let denominator = TruncatedSeries::factor_product(2, FactorSign::Minus, -1, order, ring);
    let quotient = numerator.mul(&denominator).expect("same ring");
    quotient
        .compare(&gauss_theta_series(order, ring))
        .expect("same ring")
}

/// Checks that the direct product form and the eta-quotient form of the
/// Welschinger generating function agree exactly up to `order`.
pub fn check_cross_form_identity(topology: RealTopology, order: usize) -> Result<SeriesComparison> {
    topology.require_realizable()?;
    let ring = crate::ring::ExactIntegers;
    let direct = welschinger_series(topology, order, ring);
    let quotient_form = welschinger_via_eta_quotient(topology, order, ring);
    direct.compare(&quotient_form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ExactIntegers, ResidueRing};
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn coeffs_i64(s: &TruncatedSeries<ExactIntegers>) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn topology_construction_enforces_parity_and_range() {
        assert!(RealTopology::new(0).is_ok());
        assert!(RealTopology::new(-18).is_ok());
        assert!(RealTopology::new(20).is_ok());
        assert_eq!(
            RealTopology::new(7),
            Err(Error::OddEulerCharacteristic { euler_real: 7 })
        );
        assert_eq!(
            RealTopology::new(-20),
            Err(Error::EulerCharacteristicOutOfRange { euler_real: -20 })
        );
        assert_eq!(
            RealTopology::new(22),
            Err(Error::EulerCharacteristicOutOfRange { euler_real: 22 })
        );

        let wide = RealTopology::exploratory(22).unwrap();
        assert!(!wide.is_realizable());
        assert_eq!(
            wide.require_realizable(),
            Err(Error::UnrealizableTopology { euler_real: 22 })
        );
        assert_eq!(
            RealTopology::exploratory(-3),
            Err(Error::OddEulerCharacteristic { euler_real: -3 })
        );
    }

    #[test]
    fn realizable_enumeration_is_the_twenty_even_values() {
        let all = RealTopology::all_realizable();
        assert_eq!(all.len(), 20);
        assert_eq!(all[0].euler_real(), -18);
        assert_eq!(all[19].euler_real(), 20);
        assert!(all.iter().all(|t| t.is_realizable()));
        assert!(all.windows(2).all(|w| w[1].euler_real() - w[0].euler_real() == 2));
    }

    #[test]
    fn complex_count_series_opening_terms() {
        let s = yau_zaslow_series(8, ExactIntegers);
        assert_eq!(
            coeffs_i64(&s),
            vec![1, 24, 324, 3200, 25650, 176256, 1073720, 5930496, 30178575]
        );
    }

    #[test]
    fn real_count_series_opening_terms() {
        let balanced = welschinger_series(RealTopology::new(0).unwrap(), 6, ExactIntegers);
        assert_eq!(coeffs_i64(&balanced), vec![1, 0, 12, 0, 90, 0, 520]);

        let negative = welschinger_series(RealTopology::new(-18).unwrap(), 4, ExactIntegers);
        assert_eq!(coeffs_i64(&negative), vec![1, 18, 192, 1536, 10152]);

        let positive = welschinger_series(RealTopology::new(20).unwrap(), 4, ExactIntegers);
        assert_eq!(coeffs_i64(&positive), vec![1, -20, 192, -1200, 5630]);

        // Euler characteristic 4 in genus 3: the quartic-surface value.
        let quartic = welschinger_series(RealTopology::new(4).unwrap(), 3, ExactIntegers);
        assert_eq!(quartic.coeff(3).to_i64(), Some(-48));
    }

    #[test]
    fn first_welschinger_invariant_is_minus_euler() {
        for t in RealTopology::all_realizable() {
            let s = welschinger_series(t, 1, ExactIntegers);
            assert_eq!(s.coeff(1).to_i64(), Some(-t.euler_real()));
        }
    }

    #[test]
    fn theta_series_sparse_pattern() {
        let s = gauss_theta_series(9, ExactIntegers);
        assert_eq!(coeffs_i64(&s), vec![1, -2, 0, 0, 2, 0, 0, 0, 0, -2]);

        let s = gauss_theta_series(16, ExactIntegers);
        assert_eq!(s.coeff(16).to_i64(), Some(2));
        assert_eq!(s.coeff(5).to_i64(), Some(0));
    }

    #[test]
    fn inv_sqrt_delta_vanishes_in_odd_degree() {
        let s = inv_sqrt_delta_series(8, ExactIntegers);
        assert_eq!(coeffs_i64(&s), vec![1, 0, 12, 0, 90, 0, 520, 0, 2535]);
    }

    #[test]
    fn eta_quotient_route_matches_direct_route() {
        for e in [-18, -4, 0, 4, 20] {
            let t = RealTopology::new(e).unwrap();
            let cmp = check_cross_form_identity(t, 48).unwrap();
            assert!(cmp.agrees(), "mismatch for Euler characteristic {e}");
        }

        // The balanced topology has a zeroth theta power: both routes are
        // literally the discriminant factor.
        let t = RealTopology::new(0).unwrap();
        let via = welschinger_via_eta_quotient(t, 12, ExactIntegers);
        assert_eq!(via, inv_sqrt_delta_series(12, ExactIntegers));

        let wide = RealTopology::exploratory(-40).unwrap();
        assert_eq!(
            check_cross_form_identity(wide, 8),
            Err(Error::UnrealizableTopology { euler_real: -40 })
        );
    }

    #[test]
    fn gauss_identity_verified_exactly() {
        assert!(check_gauss_identity(96).agrees());
    }

    #[test]
    fn divisor_cube_sums() {
        assert_eq!(sigma3(1), Ok(1));
        assert_eq!(sigma3(2), Ok(9));
        assert_eq!(sigma3(3), Ok(28));
        assert_eq!(sigma3(4), Ok(73));
        assert_eq!(sigma3(6), Ok(252));
        assert_eq!(
            sigma3(0),
            Err(Error::PositiveIndexRequired {
                context: "divisor cube sum"
            })
        );
    }

    #[test]
    fn eisenstein_series_opening_terms() {
        let s = eisenstein_e4_series(3, ExactIntegers);
        assert_eq!(coeffs_i64(&s), vec![1, 240, 2160, 6720]);
    }

    #[test]
    fn klein_series_matches_known_fourier_coefficients() {
        let qj = klein_qj_series(5, ExactIntegers);
        assert_eq!(qj.coeff(0).to_i64(), Some(1));
        assert_eq!(klein_a_coefficient(&qj, 0).unwrap().to_i64(), Some(744));
        assert_eq!(
            klein_a_coefficient(&qj, 1).unwrap().to_i64(),
            Some(196_884)
        );
        assert_eq!(
            klein_a_coefficient(&qj, 2).unwrap().to_i64(),
            Some(21_493_760)
        );
        assert_eq!(
            klein_a_coefficient(&qj, 3).unwrap().to_i64(),
            Some(864_299_970)
        );
        assert_eq!(klein_a_coefficient(&qj, 5), None);
    }

    #[test]
    fn residue_ring_construction_matches_reduced_exact_series() {
        let m16 = ResidueRing::new(16).unwrap();
        let direct = klein_qj_series(24, m16);
        let reduced = klein_qj_series(24, ExactIntegers).reduce_mod(16).unwrap();
        assert_eq!(direct, reduced);

        let t = RealTopology::new(-6).unwrap();
        let m9 = ResidueRing::new(9).unwrap();
        let direct = welschinger_series(t, 24, m9);
        let reduced = welschinger_series(t, 24, ExactIntegers)
            .reduce_mod(9)
            .unwrap();
        assert_eq!(direct, reduced);
    }

    proptest! {
        // The two Welschinger routes agree for every realizable topology.
        #[test]
        fn cross_form_identity_all_topologies(index in 0usize..20, order in 0usize..32) {
            let t = RealTopology::all_realizable()[index];
            prop_assert!(check_cross_form_identity(t, order).unwrap().agrees());
        }

        // Building in a residue ring equals building exactly then reducing.
        #[test]
        fn modular_construction_commutes(
            index in 0usize..20,
            order in 0usize..24,
            m in 2u64..64,
        ) {
            let t = RealTopology::all_realizable()[index];
            let ring = ResidueRing::new(m).unwrap();
            let direct = welschinger_series(t, order, ring);
            let reduced = welschinger_series(t, order, ExactIntegers).reduce_mod(m).unwrap();
            prop_assert_eq!(direct, reduced);
        }
    }
}
