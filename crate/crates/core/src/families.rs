//! Named families of arcs, each a handful of zones.

use crate::arcset::ArcSet;
use crate::interval::ExtBound;
use crate::strip::{Boundary, Kind, MarkedPoint};
use crate::zone::{Bounds, Zone};

/// A one-sided constraint on an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ray {
    Le(i64),
    Ge(i64),
}

impl Ray {
    fn bounds(self) -> (Option<i64>, Option<i64>) {
        match self {
            Ray::Le(v) => (None, Some(v)),
            Ray::Ge(v) => (Some(v), None),
        }
    }
}

fn single(kind: Kind, b: Option<Bounds>) -> ArcSet {
    let mut t = ArcSet::empty();
    if let Some(b) = b {
        t.add_zone(kind, Zone::new(b));
    }
    t
}

fn boundary_kind(b: Boundary) -> Kind {
    match b {
        Boundary::Upper => Kind::Upper,
        Boundary::Lower => Kind::Lower,
    }
}

/// Same-boundary arcs with both indices `>= p`; empty at `+inf`, everything at `-inf`.
fn ge(kind: Kind, p: ExtBound) -> ArcSet {
    single(
        kind,
        match p {
            ExtBound::PosInf => None,
            ExtBound::NegInf => Some(Bounds::default()),
            ExtBound::Finite(p) => Some(Bounds { x_min: Some(p), ..Default::default() }),
        },
    )
}

/// Same-boundary arcs with both indices `<= p`; empty at `-inf`, everything at `+inf`.
fn le(kind: Kind, p: ExtBound) -> ArcSet {
    single(
        kind,
        match p {
            ExtBound::NegInf => None,
            ExtBound::PosInf => Some(Bounds::default()),
            ExtBound::Finite(p) => Some(Bounds { y_max: Some(p), ..Default::default() }),
        },
    )
}

pub fn l_ge(p: ExtBound) -> ArcSet {
    ge(Kind::Upper, p)
}

pub fn l_le(p: ExtBound) -> ArcSet {
    le(Kind::Upper, p)
}

pub fn r_ge(q: ExtBound) -> ArcSet {
    ge(Kind::Lower, q)
}

pub fn r_le(q: ExtBound) -> ArcSet {
    le(Kind::Lower, q)
}

/// Arcs `[from, (target, i)]` with `i` on the given ray.
pub fn fan(from: MarkedPoint, target: Boundary, ray: Ray) -> ArcSet {
    let p = from.index;
    let (lo, hi) = ray.bounds();
    if from.boundary != target {
        let b = if from.boundary == Boundary::Upper {
            Bounds { x_min: Some(p), x_max: Some(p), y_min: lo, y_max: hi, ..Default::default() }
        } else {
            Bounds { y_min: Some(p), y_max: Some(p), x_min: lo, x_max: hi, ..Default::default() }
        };
        return single(Kind::Conn, Some(b));
    }
    let kind = boundary_kind(target);
    let mut t = ArcSet::empty();
    // far endpoint to the right of p, then to the left
    t.add_zone(kind, Zone::new(Bounds { x_min: Some(p), x_max: Some(p), y_min: lo, y_max: hi, ..Default::default() }));
    t.add_zone(kind, Zone::new(Bounds { y_min: Some(p), y_max: Some(p), x_min: lo, x_max: hi, ..Default::default() }));
    t
}

/// Connecting arcs `C(a,b)` with `a` on one ray and `b` on the other.
pub fn quadrant(a: Ray, b: Ray) -> ArcSet {
    let (x_min, x_max) = a.bounds();
    let (y_min, y_max) = b.bounds();
    single(Kind::Conn, Some(Bounds { x_min, x_max, y_min, y_max, ..Default::default() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strip::Arc;

    #[test]
    fn half_lines() {
        let t = l_ge(ExtBound::Finite(1));
        assert!(t.member(&Arc::Upper(1, 3)) && !t.member(&Arc::Upper(0, 3)));
        assert!(l_ge(ExtBound::PosInf).is_empty());
        assert!(l_le(ExtBound::NegInf).is_empty());
        assert!(r_le(ExtBound::Finite(0)).member(&Arc::Lower(-2, 0)));
        assert!(!r_le(ExtBound::Finite(0)).member(&Arc::Lower(-2, 1)));
        assert!(r_ge(ExtBound::NegInf).member(&Arc::Lower(-50, 7)));
    }

    #[test]
    fn fans_and_quadrants() {
        let f = fan(MarkedPoint::upper(1), Boundary::Lower, Ray::Le(-5));
        assert!(f.member(&Arc::Conn(1, -5)) && f.member(&Arc::Conn(1, -90)) && !f.member(&Arc::Conn(1, -4)));
        let f = fan(MarkedPoint::upper(1), Boundary::Upper, Ray::Ge(3));
        assert!(f.member(&Arc::Upper(1, 3)) && f.member(&Arc::Upper(1, 40)) && !f.member(&Arc::Upper(2, 40)));
        let f = fan(MarkedPoint::lower(0), Boundary::Upper, Ray::Ge(2));
        assert!(f.member(&Arc::Conn(2, 0)) && !f.member(&Arc::Conn(1, 0)));
        let f = fan(MarkedPoint::upper(0), Boundary::Upper, Ray::Ge(1));
        assert!(f.member(&Arc::Upper(0, 2)) && !f.member(&Arc::Upper(-3, 0)));
        let q = quadrant(Ray::Le(1), Ray::Ge(-2));
        assert!(q.member(&Arc::Conn(1, -2)) && !q.member(&Arc::Conn(2, -2)));
    }
}
