//! Finite-range sweeps of the identities around three-term polygonal sums:
//! the Hirschhorn–Sellers congruence for triangular numbers, the exceptional
//! set `4^a(8b+7)` of the three-square theorem, Gauss's three-triangle
//! theorem, and the component criterion for sums of three positive-rank
//! polygonal numbers.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use crate::error::Result;
use crate::graph::{build_graph, nontrivial_values};
use crate::oracle::count_oracle;
use crate::path::count_p3;
use crate::polygonal::{tri, PolygonOrder, RankIndex};
use crate::representation::{Coord, Representation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub range: RangeInclusive<u64>,
    /// Number of individual cases compared.
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    fn new(name: impl Into<String>, range: RangeInclusive<u64>) -> Self {
        IdentityReport {
            name: name.into(),
            range,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn compare(&mut self, input: impl FnOnce() -> String, lhs: u64, rhs: u64) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                input: input(),
                lhs,
                rhs,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{}: {verdict} ({} cases over {}..={}, {} failures)",
            self.name,
            self.checked,
            self.range.start(),
            self.range.end(),
            self.failures.len()
        )?;
        for x in &self.failures {
            write!(f, "\n  {}: lhs={} rhs={}", x.input, x.lhs, x.rhs)?;
        }
        Ok(())
    }
}

/// `P^3_3(27n + 12) = 3 P^3_3(3n + 1)` for `0 ≤ n ≤ n_max`, counting
/// representations that may use the triangular number 0.
pub fn verify_hirschhorn_sellers(n_max: u64) -> IdentityReport {
    let tri3 = PolygonOrder::TRIANGULAR;
    let mut report = IdentityReport::new(
        "hirschhorn-sellers (zero-inclusive triangular counts)",
        0..=n_max,
    );
    for n in 0..=n_max {
        let lhs = count_oracle(tri3, 27 * n + 12, true);
        let rhs = 3 * count_oracle(tri3, 3 * n + 1, true);
        report.compare(|| format!("n={n}"), lhs, rhs);
    }
    report
}

/// `m = 4^a(8b + 7)`: the integers that are not a sum of three squares.
pub fn legendre_exception(mut m: u64) -> bool {
    if m == 0 {
        return false;
    }
    while m.is_multiple_of(4) {
        m /= 4;
    }
    m % 8 == 7
}

pub fn legendre_exceptions_upto(bound: u64) -> Vec<u64> {
    (0..=bound).filter(|&m| legendre_exception(m)).collect()
}

/// Points of the two coordinate families of the `𝓗` set with value `≤ bound`
/// under the `2i + j` representation.
///
/// The first family is `v_(2^(k-1)(7·2^k - 3) + m(2^(2(k+1)) - 1))(3·2^k + 2m)`
/// for `k ≥ 1, m ≥ 0`; the second is `v_(2+7i+3s)(2(i+s)+3)` for `i, s ≥ 0`.
pub fn h_family_coords(bound: u64) -> BTreeSet<(Coord, u64)> {
    let rep = Representation::two_i_plus_j();
    let mut out = BTreeSet::new();
    let mut keep = |c: Option<Coord>| -> bool {
        match c.and_then(|c| rep.value(c).ok().map(|v| (c, v))) {
            Some((c, v)) if v <= bound => {
                out.insert((c, v));
                true
            }
            _ => false,
        }
    };

    let first = |k: u32, m: u64| -> Option<Coord> {
        let two_k = 1u64.checked_shl(k)?;
        let head = (two_k / 2).checked_mul(two_k.checked_mul(7)?.checked_sub(3)?)?;
        let step = 1u64.checked_shl(2 * (k + 1))?.checked_sub(1)?;
        let i = head.checked_add(m.checked_mul(step)?)?;
        let j = two_k.checked_mul(3)?.checked_add(m.checked_mul(2)?)?;
        Some(Coord::new(i, j))
    };
    for k in 1.. {
        if !keep(first(k, 0)) {
            break;
        }
        for m in 1.. {
            if !keep(first(k, m)) {
                break;
            }
        }
    }

    let second = |i: u64, s: u64| -> Option<Coord> {
        let row = i
            .checked_mul(7)?
            .checked_add(s.checked_mul(3)?)?
            .checked_add(2)?;
        let col = i.checked_add(s)?.checked_mul(2)?.checked_add(3)?;
        Some(Coord::new(row, col))
    };
    for i in 0.. {
        if !keep(second(i, 0)) {
            break;
        }
        for s in 1.. {
            if !keep(second(i, s)) {
                break;
            }
        }
    }
    out
}

/// Values of the `𝓗` families, the classical exceptions `4^a(8b+7)`, and the
/// integers with no representation as three squares (zeros allowed) must all
/// coincide on `0..=bound`.
pub fn verify_h_set(bound: u64) -> IdentityReport {
    let family: BTreeSet<u64> = h_family_coords(bound).into_iter().map(|(_, v)| v).collect();
    let mut report = IdentityReport::new("h-set = 4^a(8b+7) = no three squares", 0..=bound);
    for m in 0..=bound {
        let legendre = u64::from(legendre_exception(m));
        let in_family = u64::from(family.contains(&m));
        let no_squares = u64::from(count_oracle(PolygonOrder::SQUARE, m, true) == 0);
        report.compare(|| format!("m={m} family vs 4^a(8b+7)"), in_family, legendre);
        report.compare(
            || format!("m={m} 4^a(8b+7) vs no-three-squares"),
            legendre,
            no_squares,
        );
    }
    report
}

/// Value range `[lo, hi]` of `G_i = {[v_(t_i + j)(i+2)] | 0 ≤ j ≤ t_(i+1)}`
/// under `ℛ'_3`.
fn g_family_range(i: u64) -> Option<(u64, u64)> {
    let rep = Representation::diagonal();
    let t = |x: u64| RankIndex::new(i64::try_from(x).ok()?).ok().map(tri);
    let ti = t(i)?;
    let lo = rep.value(Coord::new(ti, i + 2)).ok()?;
    let hi = rep.value(Coord::new(ti + t(i + 1)?, i + 2)).ok()?;
    Some((lo, hi))
}

/// Every `1 ≤ n ≤ n_max` is a sum of three triangular numbers (zeros allowed),
/// and every value is carried by `[v_00]`, `[v_01]` or some `G_i` under `ℛ'_3`.
pub fn verify_triangular_coverage(n_max: u64) -> IdentityReport {
    let rep = Representation::diagonal();
    let singles = [
        rep.value(Coord::new(0, 0)).expect("small"),
        rep.value(Coord::new(0, 1)).expect("small"),
    ];
    let mut ranges = Vec::new();
    for i in 0.. {
        match g_family_range(i) {
            Some((lo, hi)) if lo <= n_max => ranges.push((lo, hi)),
            _ => break,
        }
    }
    let covered =
        |n: u64| singles.contains(&n) || ranges.iter().any(|&(lo, hi)| lo <= n && n <= hi);

    let mut report = IdentityReport::new("three triangular numbers cover N", 1..=n_max);
    for n in 1..=n_max {
        let count = count_oracle(PolygonOrder::TRIANGULAR, n, true);
        report.compare(
            || format!("n={n} has a triangular representation"),
            u64::from(count >= 1),
            1,
        );
        report.compare(
            || format!("n={n} lies in a G_i class"),
            u64::from(covered(n)),
            1,
        );
    }
    report
}

/// Whether `m` is a sum of three `s`-gonal numbers of positive rank.
pub fn is_sum_of_three_positive(s: PolygonOrder, m: u64) -> bool {
    count_p3(s, m) >= 1
}

/// Path-class count against the brute-force oracle for every `s` in
/// `orders` and every `n ≤ n_max`.
pub fn verify_oracle_equivalence(
    orders: RangeInclusive<u64>,
    n_max: u64,
) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(
        format!("P^s_3 by path classes = oracle, s in {orders:?}"),
        0..=n_max,
    );
    for s in orders {
        let order = PolygonOrder::new(s)?;
        for n in 0..=n_max {
            report.compare(
                || format!("s={s} n={n}"),
                count_p3(order, n),
                count_oracle(order, n, false),
            );
        }
    }
    Ok(report)
}

/// Component criterion on the truncation `Γ ∩ {value ≤ n_max}`: `m` is carried
/// by a non-trivial component exactly when it is a sum of three positive-rank
/// `s`-gonal numbers.
///
/// Below `s + 2` no edge exists yet, so `v_00` (value 3) is isolated.
pub fn verify_theorem1(orders: &[u64], n_max: u64) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(
        format!("non-trivial components = sums of three, s in {orders:?}"),
        0..=n_max,
    );
    for &s in orders {
        let order = PolygonOrder::new(s)?;
        let g = build_graph(order, n_max)?;
        let values = nontrivial_values(&g);
        for m in 0..=n_max {
            let in_component = u64::from(values.contains(&m));
            report.compare(
                || format!("s={s} m={m} component vs oracle"),
                in_component,
                u64::from(count_oracle(order, m, false) >= 1),
            );
            report.compare(
                || format!("s={s} m={m} component vs path count"),
                in_component,
                u64::from(is_sum_of_three_positive(order, m)),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: u64) -> PolygonOrder {
        PolygonOrder::new(s).unwrap()
    }

    #[test]
    fn hirschhorn_sellers_first_cases() {
        let t = PolygonOrder::TRIANGULAR;
        assert_eq!(count_oracle(t, 12, true), 3);
        assert_eq!(count_oracle(t, 1, true), 1);
        assert_eq!(count_oracle(t, 39, true), 3);
        assert_eq!(count_oracle(t, 4, true), 1);
        let r = verify_hirschhorn_sellers(30);
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, 31);
    }

    #[test]
    fn legendre_examples() {
        assert!(legendre_exception(7));
        assert!(legendre_exception(28));
        assert!(!legendre_exception(33));
        assert!(!legendre_exception(0));
        assert!(legendre_exception(4 * 4 * 15));
        assert_eq!(
            legendre_exceptions_upto(100),
            vec![7, 15, 23, 28, 31, 39, 47, 55, 60, 63, 71, 79, 87, 92, 95]
        );
    }

    #[test]
    fn h_family_examples() {
        let pts = h_family_coords(28);
        assert!(pts.contains(&(Coord::new(2, 3), 7)));
        assert!(pts.contains(&(Coord::new(11, 6), 28)));
        assert!(h_family_coords(6).is_empty());
        let values: BTreeSet<u64> = h_family_coords(100).into_iter().map(|(_, v)| v).collect();
        assert_eq!(values, legendre_exceptions_upto(100).into_iter().collect());
    }

    #[test]
    fn h_set_small_bounds() {
        assert!(verify_h_set(6).passed());
        assert!(verify_h_set(500).passed());
    }

    #[test]
    fn coverage_small() {
        let r = verify_triangular_coverage(300);
        assert!(r.passed(), "{r}");
        assert_eq!(
            crate::oracle::decompositions(PolygonOrder::TRIANGULAR, 4, true)[0].parts,
            [3, 1, 0]
        );
        assert_eq!(g_family_range(0), Some((2, 3)));
        assert_eq!(g_family_range(1), Some((4, 7)));
    }

    #[test]
    fn positive_sums() {
        assert!(!is_sum_of_three_positive(order(4), 7));
        assert!(!is_sum_of_three_positive(order(3), 4));
        assert!(is_sum_of_three_positive(order(4), 38));
    }

    #[test]
    fn theorem1_small() {
        let r = verify_theorem1(&[3, 4, 5], 150).unwrap();
        assert!(r.passed(), "{r}");
        // v_00 has no outgoing step yet
        let r = verify_theorem1(&[4], 3).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn oracle_equivalence_small() {
        let r = verify_oracle_equivalence(3..=6, 200).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, 4 * 201);
    }

    #[test]
    fn report_lists_failures() {
        let mut r = IdentityReport::new("demo", 0..=1);
        r.compare(|| "x=1".into(), 1, 2);
        assert!(!r.passed());
        assert!(r.to_string().contains("x=1: lhs=1 rhs=2"));
    }
}
