//! Finite-range verification of the congruence, parity, and dissection
//! properties of the curve-count series and of Klein's j-coefficients.
//!
//! Checks run in residue rings by default, which makes genus ranges in the
//! thousands cheap; exact big-integer cross-validation is available
//! separately for moderate ranges.

use crate::forms::{
    gauss_theta_series, klein_a_coefficient, klein_qj_series, welschinger_series,
    yau_zaslow_series, RealTopology,
};
use crate::ring::{ExactIntegers, ResidueRing};
use crate::series::{FactorSign, SeriesComparison, TruncatedSeries};
use crate::{Error, Result};

/// The six verified congruence clauses. Variants are named by modulus; the
/// wire identifiers used in reports come from [`CongruenceClause::label`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CongruenceClause {
    /// w ≡ c (mod 2) always; both vanish mod 2 unless 8 | g.
    Mod2,
    /// For 4 | e_R: w ≡ c (mod 4); both vanish mod 4 unless 4 | g.
    Mod4,
    /// For 8 | e_R: w ≡ c (mod 8); both vanish mod 8 for odd g.
    Mod8,
    /// For 3 | e_R: both vanish mod 3 unless 3 | g.
    Mod3,
    /// For 9 | e_R: both vanish mod 9 when g ≡ 4 (mod 6).
    Mod9,
    /// For 16 | e_R: both vanish mod 16 for odd g > 1.
    Mod16,
}

impl CongruenceClause {
    pub const ALL: [CongruenceClause; 6] = [
        CongruenceClause::Mod2,
        CongruenceClause::Mod4,
        CongruenceClause::Mod8,
        CongruenceClause::Mod3,
        CongruenceClause::Mod9,
        CongruenceClause::Mod16,
    ];

    /// Stable identifier used in structured reports.
    pub fn label(self) -> &'static str {
        match self {
            CongruenceClause::Mod2 => "T2.5-i",
            CongruenceClause::Mod4 => "T2.5-ii",
            CongruenceClause::Mod8 => "T2.5-iii",
            CongruenceClause::Mod3 => "T2.5-iv",
            CongruenceClause::Mod9 => "P3.2-i",
            CongruenceClause::Mod16 => "P3.2-ii",
        }
    }

    /// Parses a wire identifier back into a clause.
    pub fn from_label(label: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|c| c.label() == label)
    }

    pub fn modulus(self) -> u64 {
        match self {
            CongruenceClause::Mod2 => 2,
            CongruenceClause::Mod4 => 4,
            CongruenceClause::Mod8 => 8,
            CongruenceClause::Mod3 => 3,
            CongruenceClause::Mod9 => 9,
            CongruenceClause::Mod16 => 16,
        }
    }

    /// Whether the clause makes any claim for this Euler characteristic.
    pub fn applies_to(self, euler_real: i64) -> bool {
        let divides = |d: i64| euler_real.rem_euclid(d) == 0;
        match self {
            CongruenceClause::Mod2 => true,
            CongruenceClause::Mod4 => divides(4),
            CongruenceClause::Mod8 => divides(8),
            CongruenceClause::Mod3 => divides(3),
            CongruenceClause::Mod9 => divides(9),
            CongruenceClause::Mod16 => divides(16),
        }
    }

    /// Whether the clause asserts `w_g ≡ c_g` at every genus (beyond the
    /// vanishing rows).
    pub fn asserts_general_congruence(self) -> bool {
        matches!(
            self,
            CongruenceClause::Mod2 | CongruenceClause::Mod4 | CongruenceClause::Mod8
        )
    }

    /// Whether the clause asserts `w_g ≡ c_g ≡ 0` at this genus.
    pub fn asserts_vanishing_at(self, g: usize) -> bool {
        match self {
            CongruenceClause::Mod2 => !g.is_multiple_of(8),
            CongruenceClause::Mod4 => !g.is_multiple_of(4),
            CongruenceClause::Mod8 => g % 2 == 1,
            CongruenceClause::Mod3 => !g.is_multiple_of(3),
            CongruenceClause::Mod9 => g % 6 == 4,
            CongruenceClause::Mod16 => g % 2 == 1 && g > 1,
        }
    }
}

impl std::fmt::Display for CongruenceClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    NotApplicable,
    Fail,
}

impl CheckStatus {
    /// Wire form used in structured reports.
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::NotApplicable => "not-applicable",
            CheckStatus::Fail => "fail",
        }
    }
}

/// Which sub-claim a genus violated.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolationKind {
    /// `w_g ≢ c_g` where the clause asserts the congruence.
    Congruence,
    /// `w_g` or `c_g` nonzero where the clause asserts both vanish.
    Vanishing,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CongruenceViolation {
    pub g: usize,
    pub w_mod: u64,
    pub c_mod: u64,
    pub kind: ViolationKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CongruenceReport {
    pub clause: CongruenceClause,
    pub euler_real: i64,
    pub genus_max: usize,
    pub status: CheckStatus,
    pub violations: Vec<CongruenceViolation>,
}

/// Checks one clause against one topology for `1 <= g <= genus_max`, in the
/// residue ring of the clause's modulus.
pub fn check_clause(
    clause: CongruenceClause,
    topology: RealTopology,
    genus_max: usize,
) -> Result<CongruenceReport> {
    topology.require_realizable()?;
    assert!(genus_max >= 1, "at least genus 1 must be scanned");
    if !clause.applies_to(topology.euler_real()) {
        return Ok(not_applicable(clause, topology, genus_max));
    }
    let ring = ResidueRing::new(clause.modulus()).expect("clause moduli are at least 2");
    let w = welschinger_series(topology, genus_max, ring);
    let c = yau_zaslow_series(genus_max, ring);
    Ok(scan_clause(
        clause,
        topology.euler_real(),
        w.coeffs(),
        c.coeffs(),
    ))
}

/// Same scan as [`check_clause`], but computed with exact big integers and
/// reduced afterwards. Cross-validates the modular fast path; intended for
/// moderate genus ranges.
pub fn check_clause_exact(
    clause: CongruenceClause,
    topology: RealTopology,
    genus_max: usize,
) -> Result<CongruenceReport> {
    topology.require_realizable()?;
    assert!(genus_max >= 1, "at least genus 1 must be scanned");
    if !clause.applies_to(topology.euler_real()) {
        return Ok(not_applicable(clause, topology, genus_max));
    }
    let m = clause.modulus();
    let w = welschinger_series(topology, genus_max, ExactIntegers).reduce_mod(m)?;
    let c = yau_zaslow_series(genus_max, ExactIntegers).reduce_mod(m)?;
    Ok(scan_clause(
        clause,
        topology.euler_real(),
        w.coeffs(),
        c.coeffs(),
    ))
}

fn not_applicable(
    clause: CongruenceClause,
    topology: RealTopology,
    genus_max: usize,
) -> CongruenceReport {
    CongruenceReport {
        clause,
        euler_real: topology.euler_real(),
        genus_max,
        status: CheckStatus::NotApplicable,
        violations: Vec::new(),
    }
}

/// Scans reduced coefficient slices against the clause's sub-claims. The
/// congruence and vanishing sub-claims are independent and reported
/// separately, so one genus can contribute two violations.
fn scan_clause(
    clause: CongruenceClause,
    euler_real: i64,
    w: &[u64],
    c: &[u64],
) -> CongruenceReport {
    let genus_max = w.len() - 1;
    let mut violations = Vec::new();
    for g in 1..=genus_max {
        let (w_mod, c_mod) = (w[g], c[g]);
        if clause.asserts_general_congruence() && w_mod != c_mod {
            violations.push(CongruenceViolation {
                g,
                w_mod,
                c_mod,
                kind: ViolationKind::Congruence,
            });
        }
        if clause.asserts_vanishing_at(g) && (w_mod != 0 || c_mod != 0) {
            violations.push(CongruenceViolation {
                g,
                w_mod,
                c_mod,
                kind: ViolationKind::Vanishing,
            });
        }
    }
    let status = if violations.is_empty() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    CongruenceReport {
        clause,
        euler_real,
        genus_max,
        status,
        violations,
    }
}

/// The bit sequence `i_0..i_k`: `i_n` is the common parity of `w_(8n)` and
/// `c_(8n)`, computed as the parity of the `q^n` coefficient of
/// `prod (1 - q^n)^{-3}` (the mod-2 collapse of both series, with the
/// exponent compressed by 8).
pub fn parity_sequence(k_max: usize) -> Vec<u8> {
    let ring = ResidueRing::new(2).expect("2 is a valid modulus");
    let s = TruncatedSeries::factor_product(1, FactorSign::Minus, -3, k_max, ring);
    s.coeffs().iter().map(|&c| c as u8).collect()
}

/// Mod 2, the real-count series collapses to `prod (1 - q^(8n))^{-3}`
/// independently of the topology.
pub fn check_mod2_real_collapse(
    topology: RealTopology,
    order: usize,
) -> Result<SeriesComparison> {
    topology.require_realizable()?;
    let ring = ResidueRing::new(2).expect("2 is a valid modulus");
    let w = welschinger_series(topology, order, ring);
    let collapsed = TruncatedSeries::factor_product(8, FactorSign::Minus, -3, order, ring);
    w.compare(&collapsed)
}

/// Mod 2, the complex-count series collapses to the same
/// `prod (1 - q^(8n))^{-3}`.
pub fn check_mod2_complex_collapse(order: usize) -> SeriesComparison {
    let ring = ResidueRing::new(2).expect("2 is a valid modulus");
    let c = yau_zaslow_series(order, ring);
    let collapsed = TruncatedSeries::factor_product(8, FactorSign::Minus, -3, order, ring);
    c.compare(&collapsed).expect("same ring")
}

/// The mod-2 factor `prod (1 - q^(16n))^2 * prod (1 - q^(8n))^{-1}`
/// relating the parity sequence to its dilation.
fn self_similarity_factor(order: usize) -> TruncatedSeries<ResidueRing> {
    let ring = ResidueRing::new(2).expect("2 is a valid modulus");
    let squared = TruncatedSeries::factor_product(16, FactorSign::Minus, 2, order, ring);
    let inverted = TruncatedSeries::factor_product(8, FactorSign::Minus, -1, order, ring);
    squared.mul(&inverted).expect("same ring")
}

/// Verifies the self-similarity of the parity sequence as a coefficient
/// identity mod 2 up to order `8 * k_max`:
/// `sum i_n q^(8n) = factor * sum i_n q^(16n)`.
pub fn check_parity_self_similarity(k_max: usize) -> SeriesComparison {
    let order = 8 * k_max;
    let ring = ResidueRing::new(2).expect("2 is a valid modulus");
    let bits = parity_sequence(k_max);

    let mut lhs = vec![0u64; order + 1];
    for (n, &bit) in bits.iter().enumerate() {
        lhs[8 * n] = bit as u64;
    }
    let lhs = TruncatedSeries::new(ring, lhs);

    let mut dilated = vec![0u64; order + 1];
    for n in 0..=(order / 16) {
        dilated[16 * n] = bits[n] as u64;
    }
    let rhs = self_similarity_factor(order)
        .mul(&TruncatedSeries::new(ring, dilated))
        .expect("same ring");

    lhs.compare(&rhs).expect("same ring")
}

/// Exponents with odd coefficient in the self-similarity factor, up to
/// `order`. Their gaps are reported as observations; no growth law is
/// asserted, since none is checkable over a finite range.
pub fn self_similarity_odd_exponents(order: usize) -> Vec<usize> {
    self_similarity_factor(order)
        .coeffs()
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == 1)
        .map(|(i, _)| i)
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LehnerViolation {
    /// Index n of the violating coefficient a(n).
    pub index: usize,
    pub modulus: u64,
    pub residue: u64,
}

/// Outcome of checking the Lehner divisibilities of j-coefficients:
/// `a(2k) ≡ 0 (mod 2^11)` and `a(3k) ≡ 0 (mod 3^5)` for `0 < k <= k_max`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LehnerReport {
    pub k_max: usize,
    pub violations: Vec<LehnerViolation>,
}

impl LehnerReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_lehner(k_max: usize) -> LehnerReport {
    assert!(k_max >= 1, "at least one index must be checked");
    let qj_two = klein_qj_series(
        2 * k_max + 1,
        ResidueRing::new(2048).expect("valid modulus"),
    );
    let qj_three = klein_qj_series(
        3 * k_max + 1,
        ResidueRing::new(243).expect("valid modulus"),
    );
    let mut violations = Vec::new();
    for k in 1..=k_max {
        let residue = *klein_a_coefficient(&qj_two, 2 * k).expect("within order");
        if residue != 0 {
            violations.push(LehnerViolation {
                index: 2 * k,
                modulus: 2048,
                residue,
            });
        }
        let residue = *klein_a_coefficient(&qj_three, 3 * k).expect("within order");
        if residue != 0 {
            violations.push(LehnerViolation {
                index: 3 * k,
                modulus: 243,
                residue,
            });
        }
    }
    LehnerReport { k_max, violations }
}

/// Outcome of comparing the complex-count series with Klein's q·j(q) in a
/// residue ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct JCongruenceReport {
    pub modulus: u64,
    pub comparison: SeriesComparison,
}

/// Verifies `yau_zaslow_series ≡ klein_qj_series (mod modulus)` up to
/// `order`. The congruence is stated for moduli 16 and 9 only.
pub fn check_j_congruence(order: usize, modulus: u64) -> Result<JCongruenceReport> {
    if modulus != 16 && modulus != 9 {
        return Err(Error::UnsupportedJModulus { modulus });
    }
    let ring = ResidueRing::new(modulus).expect("valid modulus");
    let counts = yau_zaslow_series(order, ring);
    let qj = klein_qj_series(order, ring);
    Ok(JCongruenceReport {
        modulus,
        comparison: counts.compare(&qj).expect("same ring"),
    })
}

/// One coefficient breaking a residue-class divisibility claim.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ResidueViolation {
    pub exponent: usize,
    /// Value mod 9 found at the exponent.
    pub residue: u64,
    /// Modulus the claim required the coefficient to vanish by.
    pub modulus: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DissectionReport {
    pub order: usize,
    pub violations: Vec<ResidueViolation>,
}

impl DissectionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Divisibility pattern of `prod (1 - q^n)^(3k)`: coefficients at exponents
/// `≡ 1 (mod 3)` are divisible by 3, and at exponents `≡ 2 (mod 3)` by 9.
/// Checked in the residue ring mod 9.
pub fn check_3dissection(k: i32, order: usize) -> DissectionReport {
    let ring = ResidueRing::new(9).expect("valid modulus");
    let s = TruncatedSeries::factor_product(1, FactorSign::Minus, 3 * k as i64, order, ring);
    let mut violations = Vec::new();
    for (i, residue) in s.dissect(3, 1).expect("valid residue class").into_iter().enumerate() {
        if residue % 3 != 0 {
            violations.push(ResidueViolation {
                exponent: 1 + 3 * i,
                residue,
                modulus: 3,
            });
        }
    }
    for (i, residue) in s.dissect(3, 2).expect("valid residue class").into_iter().enumerate() {
        if residue != 0 {
            violations.push(ResidueViolation {
                exponent: 2 + 3 * i,
                residue,
                modulus: 9,
            });
        }
    }
    violations.sort_by_key(|v| v.exponent);
    DissectionReport { order, violations }
}

/// The ninth power of the Gauss theta series mod 9: every coefficient at an
/// exponent not divisible by 3 vanishes.
pub fn check_theta_ninth_power(order: usize) -> DissectionReport {
    let ring = ResidueRing::new(9).expect("valid modulus");
    let ninth = gauss_theta_series(order, ring)
        .pow(9)
        .expect("theta has unit constant term");
    let mut violations = Vec::new();
    for (exponent, &residue) in ninth.coeffs().iter().enumerate() {
        if exponent % 3 != 0 && residue != 0 {
            violations.push(ResidueViolation {
                exponent,
                residue,
                modulus: 9,
            });
        }
    }
    DissectionReport { order, violations }
}
