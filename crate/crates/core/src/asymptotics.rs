//! Partition counts, exponential growth estimates, and convergence
//! diagnostics for the curve-count sequences.
//!
//! This is the only module that works with floating point, and only in one
//! direction: exact integers are computed first, then mapped through
//! logarithms for comparison against closed-form predictions.

use num_bigint::BigInt;

use crate::forms::{welschinger_series, yau_zaslow_series, RealTopology, EULER_COMPLEX};
use crate::ring::{log_abs_bigint, ExactIntegers};
use crate::{Error, Result};

/// Exact table of partition counts `P(0..=n_max)` via the pentagonal-number
/// recurrence.
pub fn partition_p_table(n_max: usize) -> Vec<BigInt> {
    let mut table = Vec::with_capacity(n_max + 1);
    table.push(BigInt::from(1));
    for n in 1..=n_max {
        let mut acc = BigInt::from(0);
        // Generalized pentagonal numbers j(3j-1)/2 for j = 1, -1, 2, -2, ...
        // with signs + + - - + + ...
        let mut j = 1i64;
        loop {
            let pentagonal = (j * (3 * j - 1) / 2) as usize;
            if pentagonal > n {
                if j > 0 {
                    j = -j;
                    continue;
                }
                break;
            }
            let term = &table[n - pentagonal];
            if (j.unsigned_abs() - 1).is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
            j = if j > 0 { -j } else { -j + 1 };
        }
        table.push(acc);
    }
    table
}

/// Exact partition count `P(n)`.
pub fn partition_p(n: usize) -> BigInt {
    partition_p_table(n).pop().expect("table is nonempty")
}

/// Exact table of distinct-part partition counts `Q(0..=n_max)`, derived
/// from the `P` table through
/// `Q(n) = sum_j (-1)^j P(n - j(3j-1))` over all integers `j` (the Euler
/// factor identity `prod (1+q^k) = prod (1-q^(2k)) / prod (1-q^k)`).
pub fn partition_q_table(n_max: usize) -> Vec<BigInt> {
    let p = partition_p_table(n_max);
    let mut table = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = BigInt::from(0);
        let mut j = 1i64;
        acc += &p[n];
        loop {
            // Doubled generalized pentagonal numbers j(3j-1).
            let offset = (j * (3 * j - 1)) as usize;
            if offset > n {
                if j > 0 {
                    j = -j;
                    continue;
                }
                break;
            }
            let term = &p[n - offset];
            if j.rem_euclid(2) == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            j = if j > 0 { -j } else { -j + 1 };
        }
        table.push(acc);
    }
    table
}

/// Exact distinct-part partition count `Q(n)`.
pub fn partition_q(n: usize) -> BigInt {
    partition_q_table(n).pop().expect("table is nonempty")
}

/// Which partition family a growth estimate refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionKind {
    /// All partitions; `P(n) ~ exp(pi sqrt(2n/3)) / (4 n sqrt(3))`.
    Unrestricted,
    /// Distinct parts; `Q(n) ~ exp(pi sqrt(n/3)) / (4 * 3^(1/4) * n^(3/4))`.
    Distinct,
}

/// Leading-order Hardy–Ramanujan estimate of the partition count.
pub fn hr_estimate(kind: PartitionKind, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::PositiveIndexRequired {
            context: "growth estimate",
        });
    }
    let n = n as f64;
    let pi = std::f64::consts::PI;
    Ok(match kind {
        PartitionKind::Unrestricted => {
            (pi * (2.0 * n / 3.0).sqrt()).exp() / (4.0 * n * 3f64.sqrt())
        }
        PartitionKind::Distinct => {
            (pi * (n / 3.0).sqrt()).exp() / (4.0 * 3f64.powf(0.25) * n.powf(0.75))
        }
    })
}

/// Combined growth constant for a convolution of two sequences growing like
/// `exp((a n)^alpha)` and `exp((b n)^alpha)` with `0 < alpha < 1`:
/// `c = (a^(alpha/(1-alpha)) + b^(alpha/(1-alpha)))^((1-alpha)/alpha)`,
/// so that the convolution grows like `exp((c n)^alpha)`.
///
/// At `alpha = 1/2` this reduces to `c = a + b`; in the
/// `exp(C sqrt(n))` normalization (`C = sqrt(c)`) that is the Pythagorean
/// combination `C = sqrt(A^2 + B^2)`.
pub fn convolution_exponent(a: f64, b: f64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::AlphaOutOfRange { alpha });
    }
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::NonPositiveGrowthConstant { a, b });
    }
    let r = alpha / (1.0 - alpha);
    Ok((a.powf(r) + b.powf(r)).powf(1.0 / r))
}

/// Which count sequence an asymptotic model describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountFamily {
    Complex,
    Real(RealTopology),
}

/// Closed-form prediction for `log` of a count sequence, together with its
/// growth ratio relative to the complex counts.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct AsymptoteModel {
    family: CountFamily,
    growth_ratio: f64,
}

impl AsymptoteModel {
    pub fn new(family: CountFamily) -> Result<Self> {
        let growth_ratio = match family {
            CountFamily::Complex => 1.0,
            CountFamily::Real(topology) => {
                topology.require_realizable()?;
                let e = topology.euler_real();
                if e > 0 {
                    0.5
                } else {
                    // Continuous with the positive branch: 0.5 at e = 0.
                    (((EULER_COMPLEX - 3 * e) * 4) as f64 / (EULER_COMPLEX * 16) as f64).sqrt()
                }
            }
        };
        Ok(AsymptoteModel {
            family,
            growth_ratio,
        })
    }

    pub fn family(&self) -> CountFamily {
        self.family
    }

    /// Exponential growth rate relative to the complex counts: the ratio of
    /// the `sqrt(n)` coefficients in the two logarithmic predictions.
    pub fn growth_ratio(&self) -> f64 {
        self.growth_ratio
    }

    /// Predicted value of `log c_n` (complex) or `log |w_n|` (real) at
    /// index `n >= 1`.
    pub fn predicted_log(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::PositiveIndexRequired {
                context: "asymptotic prediction",
            });
        }
        let pi = std::f64::consts::PI;
        let nf = n as f64;
        match self.family {
            CountFamily::Complex => Ok(4.0 * pi * nf.sqrt()),
            CountFamily::Real(topology) => {
                let e = topology.euler_real();
                if e < 0 {
                    let rate = (4 * (EULER_COMPLEX - 3 * e)) as f64 / EULER_COMPLEX as f64;
                    Ok(pi * (rate * nf).sqrt())
                } else {
                    // Counts with e = 0 vanish at odd index; no logarithmic
                    // prediction exists there.
                    if e == 0 && n % 2 == 1 {
                        return Err(Error::ZeroEulerOddIndex { n });
                    }
                    Ok(2.0 * pi * nf.sqrt())
                }
            }
        }
    }
}

/// How one index of a convergence scan resolved.
#[derive(Clone, PartialEq, Debug)]
pub enum RowOutcome {
    Computed {
        /// Natural log of `|count|` from the exact expansion.
        log_count: f64,
        /// Closed-form predicted log.
        prediction: f64,
        /// `log_count / prediction`.
        ratio: f64,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Clone, PartialEq, Debug)]
pub struct ConvergenceRow {
    pub n: u64,
    pub outcome: RowOutcome,
}

#[derive(Clone, PartialEq, Debug)]
pub struct ConvergenceReport {
    pub family: CountFamily,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// Ratios of the rows that computed, in input order.
    pub fn ratios(&self) -> Vec<f64> {
        self.rows
            .iter()
            .filter_map(|row| match row.outcome {
                RowOutcome::Computed { ratio, .. } => Some(ratio),
                RowOutcome::Skipped { .. } => None,
            })
            .collect()
    }
}

/// How a convergence scan chooses its reference values.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PredictionBasis {
    /// The family's closed-form predictor (`AsymptoteModel::predicted_log`).
    ClosedForm,
    /// The family's growth ratio times the exact complex log-count. For
    /// the balanced topology this is the sharp statement — its closed-form
    /// constant is a documented heuristic reading, while the relative form
    /// `log w_n = (1/2 + o(1)) log c_n` is exact; for the other families
    /// the two bases agree up to the complex series' own convergence.
    /// Ignored for the complex family itself (always closed form).
    RelativeToComplex,
}

/// Expands the requested family exactly up to the largest index, then
/// compares `log |count|` against the model prediction at each point.
/// Indices whose exact count is zero are reported as skipped rows.
pub fn convergence_report(family: CountFamily, points: &[u64]) -> Result<ConvergenceReport> {
    convergence_report_with_basis(family, points, PredictionBasis::ClosedForm)
}

/// [`convergence_report`] with an explicit choice of reference values.
pub fn convergence_report_with_basis(
    family: CountFamily,
    points: &[u64],
    basis: PredictionBasis,
) -> Result<ConvergenceReport> {
    let model = AsymptoteModel::new(family)?;
    if points.contains(&0) {
        return Err(Error::PositiveIndexRequired {
            context: "convergence scan",
        });
    }
    let order = points.iter().copied().max().unwrap_or(0) as usize;
    let series = match family {
        CountFamily::Complex => yau_zaslow_series(order, ExactIntegers),
        CountFamily::Real(topology) => welschinger_series(topology, order, ExactIntegers),
    };
    let complex_reference = match (basis, family) {
        (PredictionBasis::RelativeToComplex, CountFamily::Real(_)) => {
            Some(yau_zaslow_series(order, ExactIntegers))
        }
        _ => None,
    };
    let rows = points
        .iter()
        .map(|&n| {
            let outcome = match log_abs_bigint(series.coeff(n as usize)) {
                None => RowOutcome::Skipped {
                    reason: "w_n = 0".to_string(),
                },
                Some(log_count) => {
                    let prediction = match &complex_reference {
                        Some(complex) => {
                            let log_c = log_abs_bigint(complex.coeff(n as usize))
                                .expect("complex counts are positive");
                            Ok(model.growth_ratio() * log_c)
                        }
                        None => model.predicted_log(n),
                    };
                    match prediction {
                        Err(Error::ZeroEulerOddIndex { .. }) => RowOutcome::Skipped {
                            reason: "w_n = 0".to_string(),
                        },
                        Err(other) => return Err(other),
                        Ok(prediction) => RowOutcome::Computed {
                            log_count,
                            prediction,
                            ratio: log_count / prediction,
                        },
                    }
                }
            };
            Ok(ConvergenceRow { n, outcome })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceReport { family, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{FactorSign, TruncatedSeries};
    use proptest::prelude::*;

    /// Brute-force partition counter by smallest-first enumeration, used as
    /// an independent oracle for small n.
    fn brute_force_partitions(n: usize, distinct: bool) -> u64 {
        fn count(remaining: usize, min_part: usize, distinct: bool) -> u64 {
            if remaining == 0 {
                return 1;
            }
            let mut total = 0;
            let mut part = min_part;
            while part <= remaining {
                let next_min = if distinct { part + 1 } else { part };
                total += count(remaining - part, next_min, distinct);
                part += 1;
            }
            total
        }
        count(n, 1, distinct)
    }

    #[test]
    fn partition_values() {
        assert_eq!(partition_p(0), BigInt::from(1));
        assert_eq!(partition_p(5), BigInt::from(7));
        assert_eq!(partition_p(10), BigInt::from(42));
        assert_eq!(partition_p(100), BigInt::from(190569292u64));
        assert_eq!(partition_q(6), BigInt::from(4));
        assert_eq!(partition_q(10), BigInt::from(10));
        assert_eq!(partition_q(100), BigInt::from(444793));
    }

    #[test]
    fn partition_tables_match_brute_force() {
        let n = 40;
        let p = partition_p_table(n);
        let q = partition_q_table(n);
        for k in 0..=n {
            assert_eq!(p[k], BigInt::from(brute_force_partitions(k, false)), "P({k})");
            assert_eq!(q[k], BigInt::from(brute_force_partitions(k, true)), "Q({k})");
        }
    }

    #[test]
    fn partition_tables_match_product_expansions() {
        // Third, independent route: coefficient extraction from the defining
        // infinite products.
        let n = 200;
        let p_series =
            TruncatedSeries::factor_product(1, FactorSign::Minus, -1, n, ExactIntegers);
        let q_series = TruncatedSeries::factor_product(1, FactorSign::Plus, 1, n, ExactIntegers);
        assert_eq!(partition_p_table(n), p_series.coeffs().to_vec());
        assert_eq!(partition_q_table(n), q_series.coeffs().to_vec());
    }

    #[test]
    fn hr_estimates_converge() {
        for (kind, table) in [
            (PartitionKind::Unrestricted, partition_p_table(1000)),
            (PartitionKind::Distinct, partition_q_table(1000)),
        ] {
            let ratio_at = |n: usize| {
                let exact = log_abs_bigint(&table[n]).unwrap();
                exact / hr_estimate(kind, n as u64).unwrap().ln()
            };
            let r100 = ratio_at(100);
            let r1000 = ratio_at(1000);
            assert!(r100 > 0.9 && r100 < 1.15, "ratio at 100: {r100}");
            assert!(
                (r1000 - 1.0).abs() < (r100 - 1.0).abs(),
                "no improvement: {r100} -> {r1000}"
            );
        }
    }

    #[test]
    fn hr_estimate_rejects_zero() {
        assert_eq!(
            hr_estimate(PartitionKind::Unrestricted, 0),
            Err(Error::PositiveIndexRequired { context: "growth estimate" })
        );
    }

    #[test]
    fn convolution_exponent_cases() {
        // alpha = 1/2 gives simple addition.
        let c = convolution_exponent(3.0, 4.0, 0.5).unwrap();
        assert!((c - 7.0).abs() < 1e-12);

        // Two copies of the same sequence at alpha = 1/2: factor sqrt(2)
        // per the two-colored-partition model.
        let a = std::f64::consts::PI * (2.0f64 / 3.0).sqrt();
        let c = convolution_exponent(a, a, 0.5).unwrap();
        assert!((c - 2.0 * a).abs() < 1e-12);

        assert_eq!(
            convolution_exponent(1.0, 1.0, 0.0),
            Err(Error::AlphaOutOfRange { alpha: 0.0 })
        );
        assert_eq!(
            convolution_exponent(1.0, 1.0, 1.0),
            Err(Error::AlphaOutOfRange { alpha: 1.0 })
        );
        assert!(convolution_exponent(1.0, 1.0, f64::NAN).is_err());
        assert_eq!(
            convolution_exponent(-1.0, 2.0, 0.5),
            Err(Error::NonPositiveGrowthConstant { a: -1.0, b: 2.0 })
        );
    }

    #[test]
    fn two_colored_partitions_witness_convolution_growth() {
        // The convolution P * P counts two-colored partitions. The single
        // sequence grows like exp((a n)^(1/2)) with a = 2 pi^2 / 3, so the
        // combined constant is 2a — sqrt(2) times the single-series rate in
        // the exp(C sqrt(n)) normalization.
        let a = 2.0 * std::f64::consts::PI * std::f64::consts::PI / 3.0;
        let c = convolution_exponent(a, a, 0.5).unwrap();
        assert!((c.sqrt() - 2.0f64.sqrt() * a.sqrt()).abs() < 1e-12);

        let p = partition_p_table(2000);
        let mut previous_gap = f64::INFINITY;
        for n in [500usize, 1000, 2000] {
            let two_colored: BigInt = (0..=n).map(|k| &p[k] * &p[n - k]).sum();
            let observed = log_abs_bigint(&two_colored).unwrap();
            let predicted = (c * n as f64).sqrt();
            let gap = (observed / predicted - 1.0).abs();
            assert!(
                gap < previous_gap,
                "no improvement at n = {n}: {gap} vs {previous_gap}"
            );
            previous_gap = gap;
        }
        assert!(previous_gap < 0.1, "final gap: {previous_gap}");
    }

    #[test]
    fn predicted_log_values() {
        let complex = AsymptoteModel::new(CountFamily::Complex).unwrap();
        let expected = 40.0 * std::f64::consts::PI;
        assert!((complex.predicted_log(100).unwrap() - expected).abs() < 1e-9);

        // e = -18: rate constant 4(24 + 54)/24 = 13.
        let model = AsymptoteModel::new(CountFamily::Real(topo(-18))).unwrap();
        let expected = std::f64::consts::PI * (13.0 * 7.0f64).sqrt();
        assert!((model.predicted_log(7).unwrap() - expected).abs() < 1e-9);

        // Positive Euler characteristic grows at exactly half the complex rate.
        let model = AsymptoteModel::new(CountFamily::Real(topo(20))).unwrap();
        let expected = 40.0 * std::f64::consts::PI;
        assert!((model.predicted_log(400).unwrap() - expected).abs() < 1e-9);

        let model = AsymptoteModel::new(CountFamily::Real(topo(0))).unwrap();
        assert!(model.predicted_log(6).is_ok());
        assert_eq!(
            model.predicted_log(7),
            Err(Error::ZeroEulerOddIndex { n: 7 })
        );
        assert_eq!(
            complex.predicted_log(0),
            Err(Error::PositiveIndexRequired { context: "asymptotic prediction" })
        );
    }

    #[test]
    fn growth_ratio_identity() {
        // For e <= 0 the prediction equals ratio * (complex prediction).
        let complex = AsymptoteModel::new(CountFamily::Complex).unwrap();
        for e in [-18, -12, -2, 0] {
            let model = AsymptoteModel::new(CountFamily::Real(topo(e))).unwrap();
            let n = 16;
            let direct = model.predicted_log(n).unwrap();
            let via_ratio = model.growth_ratio() * complex.predicted_log(n).unwrap();
            assert!((direct - via_ratio).abs() < 1e-12, "e = {e}");
        }

        // The real counts grow strictly faster than half the complex rate
        // exactly when e < 0.
        for t in RealTopology::all_realizable() {
            let model = AsymptoteModel::new(CountFamily::Real(t)).unwrap();
            assert_eq!(model.growth_ratio() > 0.5, t.euler_real() < 0);
            assert!(model.growth_ratio() <= 1.0);
        }

        let model = AsymptoteModel::new(CountFamily::Real(topo(0))).unwrap();
        assert!((model.growth_ratio() - 0.5).abs() < 1e-15);

        assert_eq!(
            AsymptoteModel::new(CountFamily::Real(RealTopology::exploratory(-40).unwrap())),
            Err(Error::UnrealizableTopology { euler_real: -40 })
        );
    }

    #[test]
    fn convergence_report_shape() {
        let report =
            convergence_report(CountFamily::Real(topo(0)), &[5, 6, 8]).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert_eq!(
            report.rows[0].outcome,
            RowOutcome::Skipped { reason: "w_n = 0".to_string() }
        );
        for row in &report.rows[1..] {
            match &row.outcome {
                RowOutcome::Computed { log_count, prediction, ratio } => {
                    assert!(*log_count > 0.0);
                    assert!(*prediction > 0.0);
                    assert!((ratio - log_count / prediction).abs() < 1e-15);
                }
                other => panic!("expected computed row, got {other:?}"),
            }
        }
        assert_eq!(report.ratios().len(), 2);

        assert_eq!(
            convergence_report(CountFamily::Complex, &[0, 4]),
            Err(Error::PositiveIndexRequired { context: "convergence scan" })
        );
        assert_eq!(
            convergence_report(
                CountFamily::Real(RealTopology::exploratory(22).unwrap()),
                &[4]
            ),
            Err(Error::UnrealizableTopology { euler_real: 22 })
        );
    }

    #[test]
    fn convergence_ratios_approach_one() {
        let report = convergence_report(CountFamily::Complex, &[50, 200]).unwrap();
        let ratios = report.ratios();
        assert_eq!(ratios.len(), 2);
        assert!(
            (ratios[1] - 1.0).abs() < (ratios[0] - 1.0).abs(),
            "no improvement: {ratios:?}"
        );
    }

    #[test]
    fn relative_basis_uses_complex_reference() {
        // For the balanced topology the relative reference at index n is
        // half the exact complex log-count; compute both sides directly.
        let family = CountFamily::Real(topo(0));
        let report =
            convergence_report_with_basis(family, &[100], PredictionBasis::RelativeToComplex)
                .unwrap();
        let complex = yau_zaslow_series(100, ExactIntegers);
        let expected = 0.5 * log_abs_bigint(complex.coeff(100)).unwrap();
        match &report.rows[0].outcome {
            RowOutcome::Computed { prediction, ratio, log_count } => {
                assert!((prediction - expected).abs() < 1e-12 * expected);
                assert!((ratio - log_count / prediction).abs() < 1e-15);
            }
            other => panic!("expected computed row, got {other:?}"),
        }

        // The relative reference tracks the counts tighter than the
        // closed form does at moderate index.
        let closed =
            convergence_report_with_basis(family, &[100], PredictionBasis::ClosedForm).unwrap();
        let gap_relative = (report.ratios()[0] - 1.0).abs();
        let gap_closed = (closed.ratios()[0] - 1.0).abs();
        assert!(gap_relative < gap_closed, "{gap_relative} vs {gap_closed}");

        // For the complex family the basis flag is inert.
        let direct = convergence_report(CountFamily::Complex, &[40]).unwrap();
        let relabelled = convergence_report_with_basis(
            CountFamily::Complex,
            &[40],
            PredictionBasis::RelativeToComplex,
        )
        .unwrap();
        assert_eq!(direct.rows, relabelled.rows);
    }

    fn topo(e: i64) -> RealTopology {
        RealTopology::new(e).unwrap()
    }

    proptest! {
        // The combined growth constant dominates both inputs.
        #[test]
        fn convolution_dominates(a in 0.1f64..20.0, b in 0.1f64..20.0, alpha in 0.05f64..0.95) {
            let c = convolution_exponent(a, b, alpha).unwrap();
            prop_assert!(c >= a.max(b) - 1e-12);
        }

        // Prediction scales exactly with the square root of the index.
        #[test]
        fn prediction_scales_with_sqrt(n in 1u64..10_000, factor in 1u64..10) {
            let model = AsymptoteModel::new(CountFamily::Complex).unwrap();
            let base = model.predicted_log(n).unwrap();
            let scaled = model.predicted_log(n * factor * factor).unwrap();
            prop_assert!((scaled - base * factor as f64).abs() < 1e-6 * scaled.abs());
        }
    }
}
