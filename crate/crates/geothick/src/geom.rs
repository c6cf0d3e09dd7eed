//! Exact planar primitives: rational points, orientation, segment
//! crossing classification, and strict convex hulls.
//!
//! Everything here is decided in exact rational (or integer) arithmetic.
//! No floating point, no epsilons: a verdict from this module is a fact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("segment endpoints coincide")]
    DegenerateSegment,
}

/// Exact planar point. `BigRational` keeps coordinates canonical
/// (reduced, positive denominator), so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RationalPoint { x, y }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        RationalPoint {
            x: Rational::from_integer(BigInt::from(x)),
            y: Rational::from_integer(BigInt::from(y)),
        }
    }

    /// Point (xn/xd, yn/yd). Panics if a denominator is zero.
    pub fn from_ratios(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        RationalPoint {
            x: Rational::new(BigInt::from(xn), BigInt::from(xd)),
            y: Rational::new(BigInt::from(yn), BigInt::from(yd)),
        }
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Closed straight-line segment with distinct endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    a: RationalPoint,
    b: RationalPoint,
}

impl Segment {
    pub fn new(a: RationalPoint, b: RationalPoint) -> Result<Self, GeomError> {
        if a == b {
            return Err(GeomError::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> &RationalPoint {
        &self.a
    }

    pub fn b(&self) -> &RationalPoint {
        &self.b
    }
}

/// How two segments meet. Exactly one kind applies to any pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CrossKind {
    /// No common point.
    Disjoint,
    /// Exactly one common point, an endpoint of both.
    SharedEndpoint,
    /// Interiors meet in exactly one point.
    ProperCrossing,
    /// Common sub-segment of positive length.
    CollinearOverlap,
    /// An endpoint of one lies in the interior of the other.
    EndpointOnInterior,
}

impl CrossKind {
    /// Kinds a valid drawing may exhibit between same-layer edges.
    pub fn is_allowed_same_layer(self) -> bool {
        matches!(self, CrossKind::Disjoint | CrossKind::SharedEndpoint)
    }
}

// ---------------------------------------------------------------------------
// Generic predicate core.
//
// The same classification logic runs on BigRational coordinates (public API)
// and on plain i128 grid coordinates (the annealer's hot loop). The scalar
// only needs subtraction, multiplication, and ordered comparison to zero.
// ---------------------------------------------------------------------------

pub(crate) trait Scalar: Clone + Ord + Zero {
    fn sub(a: &Self, b: &Self) -> Self;
    fn mul(a: &Self, b: &Self) -> Self;
}

impl Scalar for Rational {
    fn sub(a: &Self, b: &Self) -> Self {
        a - b
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
}

impl Scalar for i128 {
    fn sub(a: &Self, b: &Self) -> Self {
        a - b
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
}

/// Sign of (q - p) x (r - p): +1 left turn, 0 collinear, -1 right turn.
pub(crate) fn orient_core<T: Scalar>(p: (&T, &T), q: (&T, &T), r: (&T, &T)) -> i8 {
    let qpx = T::sub(q.0, p.0);
    let qpy = T::sub(q.1, p.1);
    let rpx = T::sub(r.0, p.0);
    let rpy = T::sub(r.1, p.1);
    let cross = T::sub(&T::mul(&qpx, &rpy), &T::mul(&qpy, &rpx));
    match cross.cmp(&T::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

type Pt<'a, T> = (&'a T, &'a T);

fn points_eq<T: Scalar>(p: Pt<'_, T>, q: Pt<'_, T>) -> bool {
    p.0 == q.0 && p.1 == q.1
}

/// 1-D classification of collinear segments via interval arithmetic on the
/// dominant axis.
fn classify_collinear<T: Scalar>(
    a: Pt<'_, T>,
    b: Pt<'_, T>,
    c: Pt<'_, T>,
    d: Pt<'_, T>,
) -> CrossKind {
    // All four points sit on one line; project to whichever axis the line
    // actually extends along.
    let use_x = a.0 != b.0;
    let key = |p: Pt<'_, T>| if use_x { p.0.clone() } else { p.1.clone() };
    let (s1lo, s1hi) = minmax(key(a), key(b));
    let (s2lo, s2hi) = minmax(key(c), key(d));
    let lo = s1lo.max(s2lo);
    let hi = s1hi.min(s2hi);
    match lo.cmp(&hi) {
        Ordering::Greater => CrossKind::Disjoint,
        // Intervals touch in one point: necessarily an endpoint of both.
        Ordering::Equal => CrossKind::SharedEndpoint,
        Ordering::Less => CrossKind::CollinearOverlap,
    }
}

fn minmax<T: Ord>(a: T, b: T) -> (T, T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Exact crossing classification of closed segments ab and cd.
/// Endpoints must be distinct within each segment.
pub(crate) fn classify_core<T: Scalar>(
    a: Pt<'_, T>,
    b: Pt<'_, T>,
    c: Pt<'_, T>,
    d: Pt<'_, T>,
) -> CrossKind {
    let o1 = orient_core(c, d, a);
    let o2 = orient_core(c, d, b);
    if o1 == 0 && o2 == 0 {
        // a and b both on line(c,d), so all four points are collinear.
        return classify_collinear(a, b, c, d);
    }
    let o3 = orient_core(a, b, c);
    let o4 = orient_core(a, b, d);

    // Non-collinear lines meet in at most one point. If two endpoints
    // coincide that coincidence is the whole intersection.
    if points_eq(a, c) || points_eq(a, d) || points_eq(b, c) || points_eq(b, d) {
        return CrossKind::SharedEndpoint;
    }

    // With no endpoint coincidence at most one orientation can vanish:
    // a zero pins the lines' unique meeting point to that endpoint.
    if o1 == 0 {
        return endpoint_touch(a, c, d);
    }
    if o2 == 0 {
        return endpoint_touch(b, c, d);
    }
    if o3 == 0 {
        return endpoint_touch(c, a, b);
    }
    if o4 == 0 {
        return endpoint_touch(d, a, b);
    }

    if o1 != o2 && o3 != o4 {
        CrossKind::ProperCrossing
    } else {
        CrossKind::Disjoint
    }
}

/// p lies on line(u,v) and is an endpoint of the other segment (not equal to
/// u or v). The intersection is {p} iff p falls strictly between u and v.
fn endpoint_touch<T: Scalar>(p: Pt<'_, T>, u: Pt<'_, T>, v: Pt<'_, T>) -> CrossKind {
    let use_x = u.0 != v.0;
    let key = |q: Pt<'_, T>| if use_x { q.0.clone() } else { q.1.clone() };
    let (lo, hi) = minmax(key(u), key(v));
    let kp = key(p);
    if lo < kp && kp < hi {
        CrossKind::EndpointOnInterior
    } else {
        CrossKind::Disjoint
    }
}

// ---------------------------------------------------------------------------
// Public predicates on rational points.
// ---------------------------------------------------------------------------

/// Sign of the cross product (q-p) x (r-p) in {-1, 0, +1}.
pub fn orientation(p: &RationalPoint, q: &RationalPoint, r: &RationalPoint) -> i8 {
    orient_core((&p.x, &p.y), (&q.x, &q.y), (&r.x, &r.y))
}

/// Classify how two segments meet. Symmetric in its arguments.
pub fn classify_crossing(s1: &Segment, s2: &Segment) -> CrossKind {
    classify_core(
        (&s1.a.x, &s1.a.y),
        (&s1.b.x, &s1.b.y),
        (&s2.a.x, &s2.a.y),
        (&s2.b.x, &s2.b.y),
    )
}

/// Indices of the extreme points in counterclockwise order, starting from
/// the lexicographically smallest point. Strict hull: points interior to a
/// hull edge are not reported. Duplicate input points are an error.
pub fn convex_hull(points: &[RationalPoint]) -> Result<Vec<usize>, GeomError> {
    let n = points.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| points[i].cmp(&points[j]));
    for w in idx.windows(2) {
        if points[w[0]] == points[w[1]] {
            let (i, j) = minmax(w[0], w[1]);
            return Err(GeomError::DuplicatePoint(i, j));
        }
    }
    if n <= 2 {
        return Ok(idx);
    }

    // Monotone chain, strict turns only: a non-left turn pops, which drops
    // collinear boundary points.
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 {
            let p = &points[lower[lower.len() - 2]];
            let q = &points[lower[lower.len() - 1]];
            if orientation(p, q, &points[i]) <= 0 {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 {
            let p = &points[upper[upper.len() - 2]];
            let q = &points[upper[upper.len() - 1]];
            if orientation(p, q, &points[i]) <= 0 {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // A fully collinear set leaves a single chain endpoint in each half.
    if lower.len() < 2 {
        let mut ends = vec![idx[0], idx[n - 1]];
        ends.dedup();
        return Ok(ends);
    }
    Ok(lower)
}

/// Exact squared Euclidean distance.
pub fn dist2(p: &RationalPoint, q: &RationalPoint) -> Rational {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// Twice the signed area of triangle pqr. Its absolute value, divided by
/// |qr|, is the distance from p to line(q,r); with a fixed base it compares
/// point depths exactly.
pub fn doubled_area(p: &RationalPoint, q: &RationalPoint, r: &RationalPoint) -> Rational {
    let v1x = &q.x - &p.x;
    let v1y = &q.y - &p.y;
    let v2x = &r.x - &p.x;
    let v2y = &r.y - &p.y;
    &v1x * &v2y - &v1y * &v2x
}

/// |doubled_area|, the exact comparator for distance-to-line with a common
/// base segment.
pub fn areal_distance(p: &RationalPoint, base_a: &RationalPoint, base_b: &RationalPoint) -> Rational {
    doubled_area(base_a, base_b, p).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> RationalPoint {
        RationalPoint::from_integers(x, y)
    }

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Segment {
        Segment::new(pt(ax, ay), pt(bx, by)).unwrap()
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(0, 1)), 1);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 1), &pt(2, 2)), 0);
        assert_eq!(orientation(&pt(0, 0), &pt(0, 1), &pt(1, 1)), -1);
    }

    #[test]
    fn orientation_antisymmetry() {
        let (p, q, r) = (pt(3, -2), pt(7, 5), pt(-1, 4));
        assert_eq!(orientation(&p, &q, &r), -orientation(&p, &r, &q));
        assert_eq!(orientation(&p, &q, &r), -orientation(&q, &p, &r));
    }

    #[test]
    fn degenerate_segment_rejected() {
        assert_eq!(
            Segment::new(pt(1, 1), pt(1, 1)).unwrap_err(),
            GeomError::DegenerateSegment
        );
    }

    #[test]
    fn classify_basic_kinds() {
        assert_eq!(
            classify_crossing(&seg(0, 0, 2, 2), &seg(0, 2, 2, 0)),
            CrossKind::ProperCrossing
        );
        assert_eq!(
            classify_crossing(&seg(0, 0, 1, 0), &seg(1, 0, 2, 1)),
            CrossKind::SharedEndpoint
        );
        assert_eq!(
            classify_crossing(&seg(0, 0, 2, 0), &seg(1, 0, 3, 0)),
            CrossKind::CollinearOverlap
        );
        assert_eq!(
            classify_crossing(&seg(0, 0, 2, 0), &seg(1, 0, 1, 5)),
            CrossKind::EndpointOnInterior
        );
        assert_eq!(
            classify_crossing(&seg(0, 0, 1, 0), &seg(0, 1, 1, 1)),
            CrossKind::Disjoint
        );
    }

    #[test]
    fn classify_touch_cases() {
        // Collinear, touching at one shared endpoint.
        assert_eq!(
            classify_crossing(&seg(0, 0, 1, 0), &seg(1, 0, 3, 0)),
            CrossKind::SharedEndpoint
        );
        // Collinear, gap between them.
        assert_eq!(
            classify_crossing(&seg(0, 0, 1, 0), &seg(2, 0, 3, 0)),
            CrossKind::Disjoint
        );
        // One segment inside the other.
        assert_eq!(
            classify_crossing(&seg(0, 0, 10, 0), &seg(3, 0, 4, 0)),
            CrossKind::CollinearOverlap
        );
        // Identical segments.
        assert_eq!(
            classify_crossing(&seg(0, 0, 2, 3), &seg(0, 0, 2, 3)),
            CrossKind::CollinearOverlap
        );
        // T-contact away from the junction is still Disjoint when the
        // endpoint misses the closed segment.
        assert_eq!(
            classify_crossing(&seg(0, 0, 2, 0), &seg(3, 0, 3, 5)),
            CrossKind::Disjoint
        );
        // Endpoint exactly on the other's endpoint, not collinear.
        assert_eq!(
            classify_crossing(&seg(0, 0, 2, 2), &seg(2, 2, 5, 0)),
            CrossKind::SharedEndpoint
        );
        // Vertical/horizontal T.
        assert_eq!(
            classify_crossing(&seg(0, -1, 0, 1), &seg(0, 0, 4, 0)),
            CrossKind::EndpointOnInterior
        );
    }

    #[test]
    fn classify_symmetry() {
        let pairs = [
            (seg(0, 0, 2, 2), seg(0, 2, 2, 0)),
            (seg(0, 0, 2, 0), seg(1, 0, 1, 5)),
            (seg(0, 0, 2, 0), seg(1, 0, 3, 0)),
            (seg(0, 0, 1, 0), seg(5, 5, 6, 6)),
        ];
        for (s1, s2) in &pairs {
            assert_eq!(classify_crossing(s1, s2), classify_crossing(s2, s1));
        }
    }

    #[test]
    fn hull_square_with_center() {
        let pts = vec![
            pt(0, 0),
            pt(1, 0),
            pt(1, 1),
            pt(0, 1),
            RationalPoint::from_ratios(1, 2, 1, 2),
        ];
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.len(), 4);
        assert!(!hull.contains(&4));
    }

    #[test]
    fn hull_collinear_points() {
        let pts = vec![pt(0, 0), pt(1, 1), pt(2, 2)];
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull, vec![0, 2]);
    }

    #[test]
    fn hull_collinear_on_edge_excluded() {
        // Midpoint of the bottom edge must not appear in a strict hull.
        let pts = vec![pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 3)];
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.len(), 3);
        assert!(!hull.contains(&2));
    }

    #[test]
    fn hull_duplicates_rejected() {
        let pts = vec![pt(0, 0), pt(1, 1), pt(0, 0)];
        assert_eq!(convex_hull(&pts).unwrap_err(), GeomError::DuplicatePoint(0, 2));
    }

    #[test]
    fn hull_tiny_inputs() {
        assert_eq!(convex_hull(&[pt(5, 5)]).unwrap(), vec![0]);
        assert_eq!(convex_hull(&[pt(5, 5), pt(0, 0)]).unwrap(), vec![1, 0]);
    }

    #[test]
    fn hull_is_convex_and_contains_all() {
        let pts: Vec<RationalPoint> = [
            (0, 0), (4, 0), (4, 4), (0, 4), (2, 2), (1, 3), (3, 1), (2, 5), (-1, 2),
        ]
        .iter()
        .map(|&(x, y)| pt(x, y))
        .collect();
        let hull = convex_hull(&pts).unwrap();
        let h = hull.len();
        for w in 0..h {
            let p = &pts[hull[w]];
            let q = &pts[hull[(w + 1) % h]];
            let r = &pts[hull[(w + 2) % h]];
            assert_eq!(orientation(p, q, r), 1, "hull corner must turn left");
            for (i, s) in pts.iter().enumerate() {
                if i != hull[w] && i != hull[(w + 1) % h] {
                    assert!(orientation(p, q, s) >= 0, "point outside hull edge");
                }
            }
        }
    }
}
