#![allow(dead_code)]

use geothick::{CrossKind, Rational, RationalPoint, Segment};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

type Vec2 = (Rational, Rational);

fn sub(p: &RationalPoint, q: &RationalPoint) -> Vec2 {
    (&p.x - &q.x, &p.y - &q.y)
}

fn cross(u: &Vec2, v: &Vec2) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

fn dot(u: &Vec2, v: &Vec2) -> Rational {
    &u.0 * &v.0 + &u.1 * &v.1
}

/// Independent reference classifier: solve for the intersection set of the
/// two closed segments with parametric rational arithmetic, then name the
/// set. No orientation predicates anywhere.
pub fn oracle_classify(s1: &Segment, s2: &Segment) -> CrossKind {
    let (a, b, c, d) = (s1.a(), s1.b(), s2.a(), s2.b());
    let r = sub(b, a);
    let s = sub(d, c);
    let ca = sub(c, a);
    let zero = Rational::zero();
    let one = Rational::one();

    let denom = cross(&r, &s);
    if denom != zero {
        // Skew lines meet once, at a + t*r = c + u*s.
        let t = cross(&ca, &s) / &denom;
        let u = cross(&ca, &r) / &denom;
        if t < zero || t > one || u < zero || u > one {
            return CrossKind::Disjoint;
        }
        let t_end = t == zero || t == one;
        let u_end = u == zero || u == one;
        return match (t_end, u_end) {
            (true, true) => CrossKind::SharedEndpoint,
            (false, false) => CrossKind::ProperCrossing,
            _ => CrossKind::EndpointOnInterior,
        };
    }
    if cross(&ca, &r) != zero {
        // Parallel on distinct lines.
        return CrossKind::Disjoint;
    }
    // Collinear: intersect the parameter intervals along segment one.
    let rr = dot(&r, &r);
    let tc = dot(&ca, &r) / &rr;
    let td = dot(&sub(d, a), &r) / &rr;
    let (min2, max2) = if tc <= td { (tc, td) } else { (td, tc) };
    let lo = if min2 > zero { min2 } else { zero };
    let hi = if max2 < one { max2 } else { one };
    match lo.cmp(&hi) {
        Ordering::Greater => CrossKind::Disjoint,
        // One shared point, necessarily an end of both intervals.
        Ordering::Equal => CrossKind::SharedEndpoint,
        Ordering::Less => CrossKind::CollinearOverlap,
    }
}

/// A point with small random rational coordinates. The tight value grid
/// makes coincidences and collinearities common enough to matter.
pub fn small_rational_point(rng: &mut ChaCha8Rng) -> RationalPoint {
    let coord = |rng: &mut ChaCha8Rng| {
        let num = rng.gen_range(-6i64..=6);
        let den = rng.gen_range(1i64..=3);
        (num, den)
    };
    let (xn, xd) = coord(rng);
    let (yn, yd) = coord(rng);
    RationalPoint::from_ratios(xn, xd, yn, yd)
}

fn distinct_pair(rng: &mut ChaCha8Rng) -> (RationalPoint, RationalPoint) {
    loop {
        let a = small_rational_point(rng);
        let b = small_rational_point(rng);
        if a != b {
            return (a, b);
        }
    }
}

/// a + (num/den) * (b - a).
pub fn affine(a: &RationalPoint, b: &RationalPoint, num: i64, den: i64) -> RationalPoint {
    let t = Rational::new(num.into(), den.into());
    RationalPoint::new(&a.x + &t * (&b.x - &a.x), &a.y + &t * (&b.y - &a.y))
}

/// A random segment pair drawn from three families: independent endpoints,
/// four collinear points, and one endpoint pinned onto the first segment's
/// line. The latter two keep every degenerate kind well represented.
pub fn random_segment_pair(rng: &mut ChaCha8Rng) -> (Segment, Segment) {
    let (a, b) = distinct_pair(rng);
    let param = |rng: &mut ChaCha8Rng| (rng.gen_range(-4i64..=8), rng.gen_range(1i64..=4));
    let (c, d) = match rng.gen_range(0u8..5) {
        // Same line: c and d are affine combinations of a and b.
        0 => loop {
            let (ln, ld) = param(rng);
            let (mn, md) = param(rng);
            let c = affine(&a, &b, ln, ld);
            let d = affine(&a, &b, mn, md);
            if c != d {
                break (c, d);
            }
        },
        // One endpoint on line(a, b), the other free.
        1 => loop {
            let (ln, ld) = param(rng);
            let c = affine(&a, &b, ln, ld);
            let d = small_rational_point(rng);
            if c != d {
                break (c, d);
            }
        },
        _ => distinct_pair(rng),
    };
    (
        Segment::new(a, b).expect("endpoints distinct"),
        Segment::new(c, d).expect("endpoints distinct"),
    )
}
