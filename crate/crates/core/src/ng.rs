//! The bridge to arcs of the infinity-gon: the bijection `phi` from the points
//! left of a connecting arc `u` to the integers, the split of `nc({u})` into its
//! two sides, Ng's conditions and the zigzag triangulations.

use crate::arcset::{ArcSet, BoundDirection, Frame};
use crate::classify::cond_bprime;
use crate::error::Error;
use crate::region::Region;
use crate::strip::{Arc, Boundary, Kind, MarkedPoint};
use crate::zone::{Bounds, Zone};

fn conn_base(u: &Arc) -> Result<(i64, i64), Error> {
    match *u {
        Arc::Conn(p, q) => Ok((p, q)),
        _ => Err(Error::Precondition(format!("{u} is not a connecting arc"))),
    }
}

/// `l_{p-i}` goes to `i+1` and `r_{q+i}` to `-i`.
pub fn phi(u: &Arc, point: MarkedPoint) -> Result<i64, Error> {
    let (p, q) = conn_base(u)?;
    match point.boundary {
        Boundary::Upper if point.index <= p => Ok(p - point.index + 1),
        Boundary::Lower if point.index >= q => Ok(q - point.index),
        _ => Err(Error::InvalidParams(format!("{point} lies right of {u}"))),
    }
}

pub fn phi_inv(u: &Arc, k: i64) -> Result<MarkedPoint, Error> {
    let (p, q) = conn_base(u)?;
    Ok(if k >= 1 { MarkedPoint::upper(p - k + 1) } else { MarkedPoint::lower(q - k) })
}

/// Image of an arc on the left of `u` as a sorted pair of integers.
pub fn phi_arc(u: &Arc, v: &Arc) -> Result<(i64, i64), Error> {
    let (a, b) = v.endpoints();
    let (m, n) = (phi(u, a)?, phi(u, b)?);
    Ok((m.min(n), m.max(n)))
}

/// A set of infinity-gon arcs `{m, n}`, stored as the region of pairs `m < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NgArcSet {
    region: Region,
}

fn ng_validity() -> Zone {
    Zone::new(Bounds { d_min: Some(2), ..Default::default() })
}

impl NgArcSet {
    pub fn new(region: Region) -> NgArcSet {
        NgArcSet { region: region.intersect_zone(&ng_validity()) }
    }

    pub fn all() -> NgArcSet {
        NgArcSet::new(Region::all())
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> NgArcSet {
        NgArcSet::new(Region::from_zones(pairs.iter().map(|&(m, n)| {
            let (m, n) = (m.min(n), m.max(n));
            Zone::new(Bounds { x_min: Some(m), x_max: Some(m), y_min: Some(n), y_max: Some(n), ..Default::default() })
        })))
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn contains(&self, m: i64, n: i64) -> bool {
        self.region.contains(m.min(n), m.max(n))
    }

    /// The same pairs as upper arcs, which cross exactly when the Ng arcs do.
    fn as_upper(&self) -> ArcSet {
        let mut t = ArcSet::empty();
        t.set_region(Kind::Upper, self.region.clone());
        t
    }

    /// `phi^{-1}` applied to every member.
    pub fn transport(&self, u: &Arc) -> Result<ArcSet, Error> {
        let (p, q) = conn_base(u)?;
        let pieces = [
            (Kind::Upper, Bounds { x_min: Some(1), ..Default::default() }, (p + 1, p + 1)),
            (Kind::Lower, Bounds { y_max: Some(0), ..Default::default() }, (q, q)),
            (Kind::Conn, Bounds { x_max: Some(0), y_min: Some(1), ..Default::default() }, (p + 1, q)),
        ];
        let mut t = ArcSet::empty();
        for (kind, cut, (dx, dy)) in pieces {
            let cut = Zone::new(cut);
            for z in self.region.zones() {
                t.add_zone(kind, z.intersect(&cut).reflect().shift(dx, dy));
            }
        }
        Ok(t)
    }
}

/// Closed under the recombinations of crossing pairs.
pub fn ng_cond_i(u: &NgArcSet) -> bool {
    u.as_upper().is_ptolemy()
}

/// Infinitely many arcs `{m, n > m}` force infinitely many `{m, n < m}`.
pub fn ng_cond_f(u: &NgArcSet) -> bool {
    let t = u.as_upper();
    let right = t.unbounded_point_set(Boundary::Upper, BoundDirection::UpperRight);
    let left = t.unbounded_point_set(Boundary::Upper, BoundDirection::UpperLeft);
    right.is_subset(&left)
}

/// Torsion-pair test for an Ng set, computed in the infinity-gon and again in
/// the strip on `phi^{-1}(U) ∪ {u}`.
pub fn ng_torsion_check(ng: &NgArcSet, u: &Arc) -> Result<bool, Error> {
    let direct = ng_cond_i(ng) && ng_cond_f(ng);
    let mut t = ng.transport(u)?;
    t.insert(u);
    let (left, _) = split_sides(u)?;
    let mut with_u = left;
    with_u.insert(u);
    if !t.is_subset(&with_u)? {
        return Err(Error::Internal(format!("transported set leaves the left side of {u}")));
    }
    let strip = t.is_ptolemy() && cond_bprime(&t);
    if direct != strip {
        return Err(Error::Inconsistent(format!("infinity-gon test says {direct}, strip test says {strip}")));
    }
    Ok(direct)
}

fn conn_box(x: (Option<i64>, Option<i64>), y: (Option<i64>, Option<i64>)) -> Zone {
    Zone::new(Bounds { x_min: x.0, x_max: x.1, y_min: y.0, y_max: y.1, ..Default::default() })
}

/// The arcs crossing neither `u` nor each other across `u`, split into the
/// side left of `u` and the side right of it; `u` itself is in neither.
pub fn split_sides(u: &Arc) -> Result<(ArcSet, ArcSet), Error> {
    let (p, q) = conn_base(u)?;
    let point = Region::point(p, q);
    let mut left = ArcSet::empty();
    left.add_zone(Kind::Upper, Zone::new(Bounds { y_max: Some(p), ..Default::default() }));
    left.add_zone(Kind::Lower, Zone::new(Bounds { x_min: Some(q), ..Default::default() }));
    left.set_region(Kind::Conn, Region::from_zone(conn_box((None, Some(p)), (Some(q), None))).subtract(&point));
    let mut right = ArcSet::empty();
    right.add_zone(Kind::Upper, Zone::new(Bounds { x_min: Some(p), ..Default::default() }));
    right.add_zone(Kind::Lower, Zone::new(Bounds { y_max: Some(q), ..Default::default() }));
    right.set_region(Kind::Conn, Region::from_zone(conn_box((Some(p), None), (None, Some(q)))).subtract(&point));
    Ok((left, right))
}

/// The zigzag through `u = C(p,q)`: every `C(a,b)` with `a + b` equal to `p + q` or `p + q - 1`.
pub fn fan_triangulation(u: &Arc) -> Result<ArcSet, Error> {
    let (p, q) = conn_base(u)?;
    let s = p + q;
    // stored as (a, -b), so y - x = -(a + b)
    let zone = Zone::new(Bounds { d_min: Some(-s), d_max: Some(1 - s), ..Default::default() });
    let mut t = ArcSet::empty_in(Frame::Mirrored);
    t.add_zone(Kind::Conn, zone);
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strip::crosses;

    #[test]
    fn phi_examples() {
        let u = Arc::Conn(0, 0);
        assert_eq!(phi(&u, MarkedPoint::upper(0)).unwrap(), 1);
        assert_eq!(phi(&u, MarkedPoint::upper(-2)).unwrap(), 3);
        assert_eq!(phi(&u, MarkedPoint::lower(3)).unwrap(), -3);
        assert!(phi(&u, MarkedPoint::upper(1)).is_err());
        let u = Arc::Conn(2, -1);
        for k in -10..10 {
            assert_eq!(phi(&u, phi_inv(&u, k).unwrap()).unwrap(), k);
        }
    }

    #[test]
    fn sides() {
        let u = Arc::Conn(0, 0);
        let (left, right) = split_sides(&u).unwrap();
        assert!(left.member(&Arc::Upper(-3, 0)));
        assert!(right.member(&Arc::Upper(0, 2)));
        assert!(left.member(&Arc::Conn(0, 4)));
        assert!(left.intersect(&right).unwrap().is_empty());
        let mut whole = left.union(&right).unwrap();
        whole.insert(&u);
        assert!(whole.equals(&ArcSet::from_arcs(&[u]).nc()).unwrap());
    }

    #[test]
    fn phi_transports_crossing() {
        let u = Arc::Conn(1, -1);
        let (left, _) = split_sides(&u).unwrap();
        let arcs = left.enumerate_window(-6, 6);
        for v in &arcs {
            for w in &arcs {
                let (m1, n1) = phi_arc(&u, v).unwrap();
                let (m2, n2) = phi_arc(&u, w).unwrap();
                let ng = (m1 < m2 && m2 < n1 && n1 < n2) || (m2 < m1 && m1 < n2 && n2 < n1);
                assert_eq!(crosses(v, w), ng, "{v} {w}");
            }
        }
    }

    #[test]
    fn transport_matches_pointwise() {
        let u = Arc::Conn(1, -1);
        let ng = NgArcSet::new(Region::from_zone(Zone::new(Bounds { x_min: Some(-4), y_max: Some(5), ..Default::default() })));
        let t = ng.transport(&u).unwrap();
        for m in -8..8 {
            for n in (m + 2)..10 {
                let v = Arc::between(phi_inv(&u, m).unwrap(), phi_inv(&u, n).unwrap()).unwrap();
                assert_eq!(t.member(&v), ng.contains(m, n), "{m} {n} {v}");
            }
        }
    }

    #[test]
    fn ng_conditions() {
        assert!(ng_cond_f(&NgArcSet::from_pairs(&[(0, 2), (1, 5)])));
        let all = NgArcSet::all();
        assert!(ng_cond_i(&all) && ng_cond_f(&all));
        let right_fan = NgArcSet::new(Region::from_zone(Zone::new(Bounds { x_min: Some(1), x_max: Some(1), y_min: Some(3), ..Default::default() })));
        assert!(ng_cond_i(&right_fan) && !ng_cond_f(&right_fan));
        let u = Arc::Conn(0, 0);
        assert!(ng_torsion_check(&NgArcSet::from_pairs(&[(0, 2)]), &u).unwrap());
        assert!(!ng_torsion_check(&right_fan, &u).unwrap());
        // the fan at vertex 0 triangulates the infinity-gon
        let mut vertex_fan = Region::from_zone(Zone::new(Bounds { x_min: Some(0), x_max: Some(0), ..Default::default() }));
        vertex_fan.push(Zone::new(Bounds { y_min: Some(0), y_max: Some(0), ..Default::default() }));
        assert!(ng_torsion_check(&NgArcSet::new(vertex_fan), &u).unwrap());
    }

    #[test]
    fn zigzag() {
        let t = fan_triangulation(&Arc::Conn(0, 0)).unwrap();
        for a in [Arc::Conn(-1, 1), Arc::Conn(-1, 0), Arc::Conn(1, -1), Arc::Conn(0, -1), Arc::Conn(-2, 2), Arc::Conn(-2, 1), Arc::Conn(0, 0)] {
            assert!(t.member(&a), "{a}");
        }
        assert!(!t.member(&Arc::Conn(1, 1)) && !t.member(&Arc::Upper(0, 2)));
        assert!(t.tau(1).equals(&fan_triangulation(&Arc::Conn(1, 1)).unwrap()).unwrap());
        assert!(t.is_noncrossing() && t.nc().equals(&t).unwrap());
    }
}
