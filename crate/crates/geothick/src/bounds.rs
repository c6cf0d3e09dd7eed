//! Closed-form bound calculators for layered-drawing thickness of
//! complete and complete bipartite graphs, plus the summary table
//! generator with CSV and text output.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::fmt;

use crate::geom::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("domain error: {0}")]
    Domain(String),
}

/// Graph thickness of K_n (the layer count when edges may be redrawn
/// per layer rather than sharing one placement).
pub fn thickness_complete(n: usize) -> usize {
    assert!(n >= 1, "vertex count must be positive");
    match n {
        1..=4 => 1,
        5..=8 => 2,
        9..=10 => 3,
        _ => (n + 2).div_ceil(6),
    }
}

/// The fraction whose maximum over split sizes x yields the counting
/// lower bound: (C(n,2) − 2·C(x,2) − 3) / (3n − 2x − 7).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorBoundTerms {
    pub n: usize,
    pub x: usize,
    pub numerator: BigInt,
    pub denominator: BigInt,
}

impl SeparatorBoundTerms {
    pub fn value(&self) -> Rational {
        Rational::new(self.numerator.clone(), self.denominator.clone())
    }
}

fn choose2(n: i128) -> i128 {
    n * (n - 1) / 2
}

/// Maximizing terms of the counting bound, scanning integer x with a
/// positive denominator. None when no valid x exists (tiny n).
pub fn separator_terms(n: usize) -> Option<SeparatorBoundTerms> {
    let ni = n as i128;
    let mut best: Option<(i128, i128, usize)> = None;
    for x in 1..=n / 2 {
        let xi = x as i128;
        let den = 3 * ni - 2 * xi - 7;
        if den <= 0 {
            continue;
        }
        let num = choose2(ni) - 2 * choose2(xi) - 3;
        let better = match best {
            None => true,
            // Compare num/den > bn/bd by cross multiplication.
            Some((bn, bd, _)) => num * bd > bn * den,
        };
        if better {
            best = Some((num, den, x));
        }
    }
    best.map(|(num, den, x)| SeparatorBoundTerms {
        n,
        x,
        numerator: BigInt::from(num),
        denominator: BigInt::from(den),
    })
}

fn ceil_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    num.div_euclid(den) + if num.rem_euclid(den) > 0 { 1 } else { 0 }
}

/// The counting lower bound by itself: ⌈max_x fraction⌉.
fn separator_lower_bound(n: usize) -> Option<usize> {
    let ni = n as i128;
    let mut best: Option<(i128, i128)> = None;
    for x in 1..=n / 2 {
        let xi = x as i128;
        let den = 3 * ni - 2 * xi - 7;
        if den <= 0 {
            continue;
        }
        let num = choose2(ni) - 2 * choose2(xi) - 3;
        let better = match best {
            None => true,
            Some((bn, bd)) => num * bd > bn * den,
        };
        if better {
            best = Some((num, den));
        }
    }
    best.map(|(num, den)| ceil_div(num, den).max(1) as usize)
}

/// Best known lower bound on the layered-drawing thickness of K_n:
/// the thickness formula below 12 vertices, the dedicated K_15 result
/// at 15, and the counting bound elsewhere.
pub fn geo_lower_bound(n: usize) -> usize {
    assert!(n >= 1, "vertex count must be positive");
    if n < 12 {
        return thickness_complete(n);
    }
    if n == 15 {
        return 4;
    }
    separator_lower_bound(n).unwrap_or_else(|| thickness_complete(n))
}

/// Linear closed form of the counting bound: ⌈((3−√7)/2)·n + 0.342⌉,
/// evaluated with interval-refined rational bounds on √7 so the ceiling
/// is certain.
pub fn geo_lower_bound_closed_form(n: usize) -> Result<usize, BoundsError> {
    if n < 12 {
        return Err(BoundsError::Domain(format!(
            "closed form applies from 12 vertices, got {n}"
        )));
    }
    let offset = Rational::new(342.into(), 1000.into());
    let nr = Rational::from_integer(BigInt::from(n as u64));
    for digits in [16u32, 24, 32, 48, 64] {
        let scale = BigInt::from(10u32).pow(digits);
        let root_lo = (BigInt::from(7) * &scale * &scale).sqrt();
        let root_hi = &root_lo + BigInt::one();
        // (3 − √7)/2 is decreasing in √7, so bounds swap.
        let coeff_lo = Rational::new(BigInt::from(3) * &scale - root_hi, 2 * &scale);
        let coeff_hi = Rational::new(BigInt::from(3) * &scale - root_lo, 2 * &scale);
        let lo = (coeff_lo * &nr + &offset).ceil().to_integer();
        let hi = (coeff_hi * &nr + &offset).ceil().to_integer();
        if lo == hi {
            let value = lo.max(BigInt::one());
            return Ok(value.to_string().parse().expect("small positive integer"));
        }
    }
    Err(BoundsError::Domain(format!(
        "could not certify the ceiling for n = {n} at any tried precision"
    )))
}

/// Constructive upper bound from the two-ring layout: ⌈n/4⌉.
pub fn geo_upper_bound(n: usize) -> usize {
    assert!(n >= 1, "vertex count must be positive");
    n.div_ceil(4).max(1)
}

/// Pages needed when vertices must lie in convex position: ⌈n/2⌉ once
/// n ≥ 4. A triangle or less is outerplanar and fits on one page.
pub fn book_thickness_complete(n: usize) -> usize {
    assert!(n >= 1, "vertex count must be positive");
    if n <= 3 {
        1
    } else {
        n.div_ceil(2)
    }
}

/// Where a complete-graph lower bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerSource {
    ThicknessFormula,
    SeparatorFormula,
    K15Theorem,
}

impl fmt::Display for LowerSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerSource::ThicknessFormula => "thickness_formula",
            LowerSource::SeparatorFormula => "separator_formula",
            LowerSource::K15Theorem => "k15_theorem",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperSource {
    TwoRing,
}

impl fmt::Display for UpperSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("two_ring")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsRow {
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    pub lower_source: LowerSource,
    pub upper_source: UpperSource,
}

pub fn lower_source_for(n: usize) -> LowerSource {
    if n < 12 {
        LowerSource::ThicknessFormula
    } else if n == 15 {
        LowerSource::K15Theorem
    } else {
        LowerSource::SeparatorFormula
    }
}

pub fn bounds_table(n_max: usize) -> Vec<BoundsRow> {
    assert!(n_max >= 1, "table needs at least one row");
    (1..=n_max)
        .map(|n| BoundsRow {
            n,
            lower: geo_lower_bound(n),
            upper: geo_upper_bound(n),
            lower_source: lower_source_for(n),
            upper_source: UpperSource::TwoRing,
        })
        .collect()
}

/// One CSV line per n: `n,lower,upper,lower_source`.
pub fn bounds_table_csv(n_max: usize) -> String {
    let mut out = String::from("n,lower,upper,lower_source\n");
    for row in bounds_table(n_max) {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.n, row.lower, row.upper, row.lower_source
        ));
    }
    out
}

/// Text table with maximal runs of equal (lower, upper) grouped into
/// one line each, three right-aligned columns.
pub fn bounds_table_text(n_max: usize) -> String {
    let rows = bounds_table(n_max);
    let mut groups: Vec<(usize, usize, usize, usize)> = Vec::new();
    for row in &rows {
        match groups.last_mut() {
            Some((_, hi, lb, ub)) if *lb == row.lower && *ub == row.upper => *hi = row.n,
            _ => groups.push((row.n, row.n, row.lower, row.upper)),
        }
    }
    let labels: Vec<String> = groups
        .iter()
        .map(|&(lo, hi, _, _)| if lo == hi { lo.to_string() } else { format!("{lo}-{hi}") })
        .collect();
    let w1 = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(1);
    let w2 = groups
        .iter()
        .flat_map(|&(_, _, lb, ub)| [lb.to_string().len(), ub.to_string().len()])
        .max()
        .unwrap_or(2)
        .max(2);
    let mut out = format!("{:>w1$}  {:>w2$}  {:>w2$}\n", "n", "LB", "UB");
    for (label, &(_, _, lb, ub)) in labels.iter().zip(&groups) {
        out.push_str(&format!("{label:>w1$}  {lb:>w2$}  {ub:>w2$}\n"));
    }
    out
}

/// Values of n where the integer-max counting bound strictly beats its
/// linear closed form.
pub fn separator_excess_values(n_max: usize) -> Vec<usize> {
    (12..=n_max)
        .filter(|&n| n != 15)
        .filter(|&n| {
            let closed = geo_lower_bound_closed_form(n).expect("n >= 12");
            let exact = geo_lower_bound(n);
            assert!(
                closed <= exact,
                "closed form exceeded the integer maximum at n = {n}: {closed} > {exact}"
            );
            exact > closed
        })
        .collect()
}

/// Where a bipartite lower bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteLowerSource {
    /// Edge-counting bound ⌈ab/(2a+2b−4)⌉ (a bound on plain thickness,
    /// hence also on the layered-drawing value).
    EdgeCountFormula,
    /// The dedicated K_{6,8} result, which bounds the layered-drawing
    /// value directly.
    K68Theorem,
}

impl fmt::Display for BipartiteLowerSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BipartiteLowerSource::EdgeCountFormula => "edge_count_formula",
            BipartiteLowerSource::K68Theorem => "k68_theorem",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteBounds {
    pub a: usize,
    pub b: usize,
    pub lower: usize,
    pub upper: usize,
    pub lower_source: BipartiteLowerSource,
}

pub fn bipartite_bounds(a: usize, b: usize) -> Result<BipartiteBounds, BoundsError> {
    if a == 0 || b == 0 || a + b < 3 {
        return Err(BoundsError::Domain(format!(
            "bounds need a, b >= 1 with a + b >= 3, got ({a}, {b})"
        )));
    }
    let upper = a.min(b).div_ceil(2);
    let (lower, lower_source) = if (a.min(b), a.max(b)) == (6, 8) {
        (3, BipartiteLowerSource::K68Theorem)
    } else {
        let den = 2 * a + 2 * b - 4;
        ((a * b).div_ceil(den).max(1), BipartiteLowerSource::EdgeCountFormula)
    };
    Ok(BipartiteBounds { a, b, lower, upper, lower_source })
}

/// Strict threshold t(b): once a > t(b), the layered-drawing thickness
/// of K_{a,b} equals its plain thickness.
pub fn bipartite_equality_threshold(b: usize) -> Result<usize, BoundsError> {
    if b < 3 {
        return Err(BoundsError::Domain(format!(
            "threshold is defined from b = 3, got {b}"
        )));
    }
    Ok(if b % 2 == 0 { (b - 2) * (b - 2) / 2 } else { (b - 1) * (b - 2) })
}

#[allow(dead_code)]
fn rational_is_positive(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thickness_formula_branches() {
        assert_eq!(thickness_complete(1), 1);
        assert_eq!(thickness_complete(4), 1);
        assert_eq!(thickness_complete(5), 2);
        assert_eq!(thickness_complete(8), 2);
        assert_eq!(thickness_complete(9), 3);
        assert_eq!(thickness_complete(10), 3);
        assert_eq!(thickness_complete(11), 3);
        assert_eq!(thickness_complete(34), 6);
    }

    #[test]
    fn lower_bound_reference_values() {
        for (n, expected) in [
            (12, 3),
            (13, 3),
            (14, 3),
            (15, 4),
            (16, 4),
            (31, 6),
            (32, 7),
            (37, 7),
            (43, 8),
            (44, 9),
            (65, 12),
            (72, 14),
            (77, 14),
            (78, 15),
            (100, 19),
        ] {
            assert_eq!(geo_lower_bound(n), expected, "n = {n}");
        }
        for n in 1..12 {
            assert_eq!(geo_lower_bound(n), thickness_complete(n), "n = {n}");
        }
    }

    #[test]
    fn separator_terms_witnesses() {
        let t = separator_terms(32).unwrap();
        assert_eq!((t.x, t.numerator.clone(), t.denominator.clone()),
                   (7, BigInt::from(451), BigInt::from(75)));
        let t = separator_terms(65).unwrap();
        assert_eq!((t.x, t.numerator.clone(), t.denominator.clone()),
                   (12, BigInt::from(1945), BigInt::from(164)));
        assert!(t.value().is_positive());
        // Tiny n: every denominator is nonpositive only when 3n-9 <= 0.
        assert!(separator_terms(1).is_none());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(geo_lower_bound_closed_form(12).unwrap(), 3);
        assert_eq!(geo_lower_bound_closed_form(16).unwrap(), 4);
        assert_eq!(geo_lower_bound_closed_form(1000).unwrap(), 178);
        assert!(geo_lower_bound_closed_form(11).is_err());
    }

    #[test]
    fn closed_form_matches_integer_max_up_to_100() {
        for n in 12..=100 {
            if n == 15 {
                continue;
            }
            assert_eq!(
                geo_lower_bound_closed_form(n).unwrap(),
                geo_lower_bound(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn separator_excess_is_rare_and_one_sided() {
        let excess = separator_excess_values(10_000);
        for &n in &excess {
            assert_eq!(
                geo_lower_bound(n),
                geo_lower_bound_closed_form(n).unwrap() + 1,
                "n = {n}"
            );
        }
        assert!(excess.len() < 200, "unexpectedly many: {}", excess.len());
    }

    #[test]
    fn upper_bound_values() {
        assert_eq!(geo_upper_bound(4), 1);
        assert_eq!(geo_upper_bound(37), 10);
        assert_eq!(geo_upper_bound(100), 25);
        assert_eq!(geo_upper_bound(1), 1);
    }

    #[test]
    fn book_thickness_values() {
        assert_eq!(book_thickness_complete(1), 1);
        assert_eq!(book_thickness_complete(2), 1);
        assert_eq!(book_thickness_complete(5), 3);
        assert_eq!(book_thickness_complete(15), 8);
    }

    #[test]
    fn sandwich_and_monotonicity() {
        let mut prev = (0, 0);
        for n in 1..=1000 {
            let lo = geo_lower_bound(n);
            let hi = geo_upper_bound(n);
            assert!(lo <= hi, "n = {n}");
            assert!(hi <= book_thickness_complete(n), "n = {n}");
            assert!(lo >= prev.0 && hi >= prev.1, "n = {n}");
            prev = (lo, hi);
        }
    }

    #[test]
    fn lower_bound_dominates_thickness_from_12() {
        for n in 12..=200 {
            assert!(
                geo_lower_bound(n) >= thickness_complete(n),
                "n = {n}: {} < {}",
                geo_lower_bound(n),
                thickness_complete(n)
            );
        }
    }

    #[test]
    fn table_reference_rows() {
        let table = bounds_table(100);
        assert_eq!((table[0].lower, table[0].upper), (1, 1));
        assert_eq!((table[64].lower, table[64].upper), (12, 17));
        assert_eq!((table[71].lower, table[71].upper), (14, 18));
        assert_eq!(table[14].lower_source, LowerSource::K15Theorem);
        assert_eq!(table[10].lower_source, LowerSource::ThicknessFormula);
        assert_eq!(table[11].lower_source, LowerSource::SeparatorFormula);
    }

    #[test]
    fn csv_format() {
        let csv = bounds_table_csv(16);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,lower,upper,lower_source");
        assert_eq!(lines[1], "1,1,1,thickness_formula");
        assert_eq!(lines[15], "15,4,4,k15_theorem");
        assert_eq!(lines[16], "16,4,4,separator_formula");
        assert_eq!(lines.len(), 17);
    }

    #[test]
    fn text_table_matches_golden_fixture() {
        let expected = include_str!("../tests/fixtures/table1.txt");
        assert_eq!(bounds_table_text(100), expected);
    }

    #[test]
    fn bipartite_bound_values() {
        let b = bipartite_bounds(6, 8).unwrap();
        assert_eq!((b.lower, b.upper), (3, 3));
        assert_eq!(b.lower_source, BipartiteLowerSource::K68Theorem);
        let b = bipartite_bounds(8, 6).unwrap();
        assert_eq!((b.lower, b.upper), (3, 3));
        assert_eq!(b.lower_source, BipartiteLowerSource::K68Theorem);
        let b = bipartite_bounds(6, 6).unwrap();
        assert_eq!((b.lower, b.upper), (2, 3));
        assert_eq!(b.lower_source, BipartiteLowerSource::EdgeCountFormula);
        let b = bipartite_bounds(2, 9).unwrap();
        assert_eq!((b.lower, b.upper), (1, 1));
        assert!(bipartite_bounds(1, 1).is_err());
        assert!(bipartite_bounds(0, 5).is_err());
    }

    #[test]
    fn bipartite_threshold_values() {
        assert_eq!(bipartite_equality_threshold(3).unwrap(), 2);
        assert_eq!(bipartite_equality_threshold(4).unwrap(), 2);
        assert_eq!(bipartite_equality_threshold(5).unwrap(), 12);
        assert_eq!(bipartite_equality_threshold(6).unwrap(), 8);
        assert!(bipartite_equality_threshold(2).is_err());
    }
}
