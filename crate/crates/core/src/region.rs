//! Finite unions of zones.

use std::fmt;

use crate::error::Error;
use crate::interval::IntervalSet;
use crate::zone::{Bounds, CrossRelationCase, Zone, X1, X2, Y1, Y2};

/// Which pair of variables an input region constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// `{ p : exists q in r with case(p, q) }`, where `r` sits on `side` and the
/// result is read off the opposite pair.
pub fn relation_image(r: &Region, cases: &[CrossRelationCase], side: Side) -> Region {
    let all = Zone::all();
    let mut out = Region::empty();
    for z in r.zones() {
        for case in cases {
            let (joint, (i, j)) = match side {
                Side::First => (case.joint(z, &all), (X2, Y2)),
                Side::Second => (case.joint(&all, z), (X1, Y1)),
            };
            if let Some(dbm) = joint {
                out.push(dbm.project(i, j));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Region {
    zones: Vec<Zone>,
}

impl Region {
    pub fn empty() -> Region {
        Region { zones: Vec::new() }
    }

    pub fn from_zone(z: Zone) -> Region {
        Region::from_zones(vec![z])
    }

    pub fn from_zones(zones: impl IntoIterator<Item = Zone>) -> Region {
        let mut r = Region::empty();
        for z in zones {
            r.push(z);
        }
        r
    }

    pub fn from_bounds(b: Bounds) -> Region {
        Region::from_zone(Zone::new(b))
    }

    pub fn point(x: i64, y: i64) -> Region {
        Region::from_bounds(Bounds { x_min: Some(x), x_max: Some(x), y_min: Some(y), y_max: Some(y), ..Default::default() })
    }

    /// Adds a zone, skipping it when empty or already covered by a single zone.
    pub fn push(&mut self, z: Zone) {
        if z.is_empty() || self.zones.iter().any(|w| z.is_subset(w)) {
            return;
        }
        self.zones.retain(|w| !w.is_subset(&z));
        self.zones.push(z);
    }

    pub fn zones(&self) -> &[Zone] {
        &self.zones
    }

    pub fn is_empty(&self) -> bool {
        self.zones.is_empty()
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.zones.iter().any(|z| z.contains(x, y))
    }

    pub fn union(&self, other: &Region) -> Region {
        let mut r = self.clone();
        for z in &other.zones {
            r.push(*z);
        }
        r
    }

    pub fn intersect(&self, other: &Region) -> Region {
        let mut r = Region::empty();
        for a in &self.zones {
            for b in &other.zones {
                r.push(a.intersect(b));
            }
        }
        r
    }

    pub fn intersect_zone(&self, z: &Zone) -> Region {
        Region::from_zones(self.zones.iter().map(|a| a.intersect(z)))
    }

    pub fn subtract(&self, other: &Region) -> Region {
        let mut pieces: Vec<Zone> = self.zones.clone();
        for b in &other.zones {
            pieces = pieces.iter().flat_map(|a| a.subtract(b)).collect();
            if pieces.is_empty() {
                break;
            }
        }
        Region::from_zones(pieces)
    }

    pub fn all() -> Region {
        Region::from_zone(Zone::all())
    }

    pub fn complement(&self) -> Region {
        Region::all().subtract(self)
    }

    pub fn is_finite(&self) -> bool {
        self.is_bounded()
    }

    /// Points in row-major order; fails when infinite or larger than `cap`.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<(i64, i64)>, Error> {
        let pts = self.points().ok_or_else(|| Error::Precondition(format!("cannot enumerate infinite region {self}")))?;
        if pts.len() > cap {
            return Err(Error::Precondition(format!("region has {} points, cap is {cap}", pts.len())));
        }
        Ok(pts)
    }

    pub fn is_subset(&self, other: &Region) -> bool {
        self.subtract(other).is_empty()
    }

    pub fn set_eq(&self, other: &Region) -> bool {
        self.is_subset(other) && other.is_subset(self)
    }

    pub fn map(&self, f: impl Fn(&Zone) -> Zone) -> Region {
        Region::from_zones(self.zones.iter().map(f))
    }

    pub fn try_flat_map(&self, f: impl Fn(&Zone) -> Result<Vec<Zone>, Error>) -> Result<Region, Error> {
        let mut r = Region::empty();
        for z in &self.zones {
            for w in f(z)? {
                r.push(w);
            }
        }
        Ok(r)
    }

    pub fn x_range(&self) -> IntervalSet {
        self.zones.iter().fold(IntervalSet::empty(), |acc, z| acc.union(&z.x_range()))
    }

    pub fn y_range(&self) -> IntervalSet {
        self.zones.iter().fold(IntervalSet::empty(), |acc, z| acc.union(&z.y_range()))
    }

    pub fn y_at(&self, x: i64) -> IntervalSet {
        self.zones.iter().fold(IntervalSet::empty(), |acc, z| acc.union(&z.y_at(x)))
    }

    pub fn x_at(&self, y: i64) -> IntervalSet {
        self.zones.iter().fold(IntervalSet::empty(), |acc, z| acc.union(&z.x_at(y)))
    }

    pub fn is_bounded(&self) -> bool {
        self.zones.iter().all(Zone::is_bounded)
    }

    /// All points, or `None` when some zone is unbounded.
    pub fn points(&self) -> Option<Vec<(i64, i64)>> {
        if !self.is_bounded() {
            return None;
        }
        let mut out = Vec::new();
        for z in &self.zones {
            let Some(b) = z.bounds() else { continue };
            out.extend(z.points_in(b.x_min.unwrap().min(b.y_min.unwrap()), b.x_max.unwrap().max(b.y_max.unwrap())));
        }
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    pub fn points_in(&self, lo: i64, hi: i64) -> Vec<(i64, i64)> {
        let mut out: Vec<_> = self.zones.iter().flat_map(|z| z.points_in(lo, hi)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn points_in_box(&self, xs: (i64, i64), ys: (i64, i64)) -> Vec<(i64, i64)> {
        let mut out: Vec<_> = self.zones.iter().flat_map(|z| z.points_in_box(xs, ys)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// A member close to `(x, y)` in the max norm, up to a factor of two.
    pub fn nearest(&self, x: i64, y: i64) -> Option<(i64, i64)> {
        if self.is_empty() {
            return None;
        }
        let mut r: i64 = 0;
        loop {
            let window = Zone::new(Bounds { x_min: Some(x - r), x_max: Some(x + r), y_min: Some(y - r), y_max: Some(y + r), ..Default::default() });
            if let Some(p) = self.zones.iter().find_map(|z| z.intersect(&window).sample()) {
                return Some(p);
            }
            r = (r * 2).max(1);
        }
    }

    pub fn magnitude(&self) -> i64 {
        self.zones.iter().map(Zone::magnitude).max().unwrap_or(0)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zones.is_empty() {
            return write!(f, "{{}}");
        }
        let shown: Vec<String> = self.zones.iter().map(Zone::to_string).collect();
        write!(f, "{}", shown.join(" u "))
    }
}
