//! Exact invariant tables, sign/monotonicity verification, and the lower
//! and upper bounds on counts of real rational curves.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::forms::{welschinger_series, yau_zaslow_series, RealTopology};
use crate::ring::ExactIntegers;
use crate::{Error, Result};

/// Exact table of curve counts: one Welschinger column per requested
/// topology plus the complex column, for genus 0 through `genus_max`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantTable {
    topologies: Vec<RealTopology>,
    welschinger: Vec<Vec<BigInt>>,
    complex: Vec<BigInt>,
}

impl InvariantTable {
    pub fn genus_max(&self) -> usize {
        self.complex.len() - 1
    }

    pub fn topologies(&self) -> &[RealTopology] {
        &self.topologies
    }

    /// `w_g` for the topology at `topology_index` (the order given to
    /// [`compute_table`]). Panics on out-of-range indices.
    pub fn welschinger_count(&self, topology_index: usize, g: usize) -> &BigInt {
        &self.welschinger[topology_index][g]
    }

    /// `c_g`, the complex count. Panics when `g` exceeds the genus range.
    pub fn complex_count(&self, g: usize) -> &BigInt {
        &self.complex[g]
    }
}

/// Expands every requested column exactly up to `genus_max`.
pub fn compute_table(topologies: &[RealTopology], genus_max: usize) -> InvariantTable {
    let welschinger: Vec<Vec<BigInt>> = topologies
        .iter()
        .map(|&t| {
            welschinger_series(t, genus_max, ExactIntegers)
                .coeffs()
                .to_vec()
        })
        .collect();
    let complex = yau_zaslow_series(genus_max, ExactIntegers)
        .coeffs()
        .to_vec();
    // Structural invariants of the table: genus-0 counts are 1 and the
    // complex counts are positive throughout.
    for column in &welschinger {
        assert!(column[0].is_one());
    }
    assert!(complex[0].is_one());
    assert!(complex.iter().all(|c| c.is_positive()));
    InvariantTable {
        topologies: topologies.to_vec(),
        welschinger,
        complex,
    }
}

/// How a Welschinger sequence deviated from its asserted sign and
/// monotonicity pattern.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonotonicityViolationKind {
    /// `w_1` differs from `-e_R`.
    FirstCoefficient,
    /// A coefficient asserted to vanish does not.
    ExpectedZero,
    /// A coefficient asserted positive is not.
    ExpectedPositive,
    /// A coefficient asserted negative is not.
    ExpectedNegative,
    /// The magnitude chain failed to grow strictly at this genus.
    NotStrictlyIncreasing,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MonotonicityViolation {
    pub g: usize,
    pub kind: MonotonicityViolationKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotonicityReport {
    pub euler_real: i64,
    pub genus_max: usize,
    pub violations: Vec<MonotonicityViolation>,
}

impl MonotonicityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies the sign and strict-monotonicity pattern of the Welschinger
/// sequence for `1 <= g <= genus_max`:
///
/// * negative Euler characteristic: `0 < w_1 < w_2 < ...` with `w_1 = |e_R|`;
/// * zero: odd-genus terms vanish, `12 = w_2 < w_4 < ...`;
/// * positive: `(-1)^g w_g > 0` with `e_R = -w_1 < w_2 < -w_3 < ...`.
pub fn verify_sign_monotonicity(
    topology: RealTopology,
    genus_max: usize,
) -> Result<MonotonicityReport> {
    topology.require_realizable()?;
    assert!(genus_max >= 1, "at least genus 1 must be scanned");
    let series = welschinger_series(topology, genus_max, ExactIntegers);
    let mut violations = scan_pattern(topology.euler_real(), series.coeffs());
    violations.sort_by_key(|v| v.g);
    Ok(MonotonicityReport {
        euler_real: topology.euler_real(),
        genus_max,
        violations,
    })
}

/// Pattern scan on a raw coefficient slice (`w[0..=genus_max]`), separated
/// from the series computation so deviations are testable.
fn scan_pattern(euler_real: i64, w: &[BigInt]) -> Vec<MonotonicityViolation> {
    use MonotonicityViolationKind::*;
    let genus_max = w.len() - 1;
    let mut violations = Vec::new();
    let mut push = |g: usize, kind: MonotonicityViolationKind| {
        violations.push(MonotonicityViolation { g, kind });
    };

    if w[1] != BigInt::from(-euler_real) {
        push(1, FirstCoefficient);
    }

    match euler_real.cmp(&0) {
        Ordering::Less => {
            for (g, coeff) in w.iter().enumerate().skip(1) {
                if !coeff.is_positive() {
                    push(g, ExpectedPositive);
                }
            }
            for g in 1..genus_max {
                if w[g + 1] <= w[g] {
                    push(g + 1, NotStrictlyIncreasing);
                }
            }
        }
        Ordering::Equal => {
            for g in (1..=genus_max).step_by(2) {
                if !w[g].is_zero() {
                    push(g, ExpectedZero);
                }
            }
            for g in (2..=genus_max).step_by(2) {
                if !w[g].is_positive() {
                    push(g, ExpectedPositive);
                }
            }
            let mut g = 2;
            while g + 2 <= genus_max {
                if w[g + 2] <= w[g] {
                    push(g + 2, NotStrictlyIncreasing);
                }
                g += 2;
            }
        }
        Ordering::Greater => {
            for (g, coeff) in w.iter().enumerate().skip(1) {
                let expected_negative = g % 2 == 1;
                if expected_negative && !coeff.is_negative() {
                    push(g, ExpectedNegative);
                } else if !expected_negative && !coeff.is_positive() {
                    push(g, ExpectedPositive);
                }
            }
            for g in 1..genus_max {
                if w[g + 1].abs() <= w[g].abs() {
                    push(g + 1, NotStrictlyIncreasing);
                }
            }
        }
    }
    violations
}

/// The bracketing pair for the count of real rational curves in genus `g`:
/// `|w_g|` from below, `c_g` from above.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundPair {
    pub genus: usize,
    pub lower: BigInt,
    pub upper: BigInt,
}

pub fn bounds_for(topology: RealTopology, genus: usize) -> Result<BoundPair> {
    topology.require_realizable()?;
    let lower = welschinger_series(topology, genus, ExactIntegers)
        .coeff(genus)
        .abs();
    let upper = yau_zaslow_series(genus, ExactIntegers).coeff(genus).clone();
    assert!(lower <= upper, "lower bound must not exceed upper bound");
    Ok(BoundPair {
        genus,
        lower,
        upper,
    })
}

/// Refined lower bound on the number of real rational curves when
/// `known_negative` curves of negative weight are already exhibited: with
/// `n_minus >= known_negative` and `n_plus = n_minus + welschinger`, the
/// total is at least `2 * known_negative + welschinger`.
///
/// The geometric hypotheses under which this bound applies (a fixed surface
/// with the relevant topology and transversality of the known curves) are
/// the caller's responsibility; this function is pure arithmetic.
pub fn refined_count_bound(known_negative: u64, welschinger: i64) -> Result<u64> {
    let k = known_negative as i128;
    let w = welschinger as i128;
    if k + w < 0 {
        return Err(Error::InconsistentCurveCounts {
            known_negative,
            welschinger,
        });
    }
    Ok(u64::try_from(2 * k + w).expect("bound exceeds u64"))
}

/// Lower bound on tritangent planes from `components` contractible sphere
/// components: every 3 components contribute 8 planes, so the bound is
/// `8 * C(components, 3)` (zero below 3 components).
pub fn tritangent_bound(components: u64) -> u64 {
    if components < 3 {
        return 0;
    }
    let m = components as u128;
    let triples = m * (m - 1) * (m - 2) / 6;
    u64::try_from(8 * triples).expect("bound exceeds u64")
}

/// Confidence attached to a reported property.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClaimLevel {
    /// Proved; a failure is an implementation bug.
    Theorem,
    /// Observed empirically; reported, never asserted.
    Conjecture,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DominanceFailure {
    pub g: usize,
    pub euler_real: i64,
}

/// Empirical dominance of the most negative topology: for each genus the
/// Euler characteristic -18 column is the largest in magnitude among all
/// realizable topologies. Not a theorem; carried with a conjecture marker
/// and reported rather than asserted — and indeed genus 1 is a genuine
/// exception, since `|w_1| = |e_R|` peaks at `e_R = 20`, outside the
/// reference column. Dominance is observed from genus 2 onward.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DominanceReport {
    pub genus_max: usize,
    pub claim_level: ClaimLevel,
    pub failures: Vec<DominanceFailure>,
}

impl DominanceReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    /// Whether every genus at or above `g_min` dominates.
    pub fn holds_from(&self, g_min: usize) -> bool {
        self.failures.iter().all(|f| f.g < g_min)
    }
}

pub fn dominance_report(genus_max: usize) -> DominanceReport {
    let topologies = RealTopology::all_realizable();
    let table = compute_table(&topologies, genus_max);
    // index 0 is Euler characteristic -18, the reference column
    debug_assert_eq!(topologies[0].euler_real(), -18);
    let mut failures = Vec::new();
    for g in 1..=genus_max {
        let reference = table.welschinger_count(0, g);
        for (i, t) in topologies.iter().enumerate().skip(1) {
            if &table.welschinger_count(i, g).abs() > reference {
                failures.push(DominanceFailure {
                    g,
                    euler_real: t.euler_real(),
                });
            }
        }
    }
    DominanceReport {
        genus_max,
        claim_level: ClaimLevel::Conjecture,
        failures,
    }
}
