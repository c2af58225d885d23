//! Finitely presented arc sets: one region of integer points per arc kind.
//!
//! Coordinates are stored in one of two frames. In the index frame an arc is
//! stored as its index pair. The mirrored frame stores the lower index of
//! every lower endpoint negated (`L(a,b)` as `(-b,-a)`, `C(a,b)` as `(a,-b)`),
//! which turns anti-diagonal families of connecting arcs into difference
//! constraints. Every operation works in either frame; binary operations
//! convert one operand when the frames differ.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::interval::IntervalSet;
use crate::region::{relation_image, Region, Side};
use crate::strip::{Arc, Boundary, Kind, MarkedPoint};
use crate::zone::{Bounds, CrossRelationCase, Dbm, Zone, X1, X2, Y1, Y2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    #[default]
    Index,
    Mirrored,
}

impl Frame {
    /// Sign applied to lower indices when storing.
    pub fn lower_sign(self) -> i64 {
        match self {
            Frame::Index => 1,
            Frame::Mirrored => -1,
        }
    }

    /// Stored value of a marked point.
    pub fn value(self, p: MarkedPoint) -> i64 {
        match p.boundary {
            Boundary::Upper => p.index,
            Boundary::Lower => self.lower_sign() * p.index,
        }
    }

    /// Stored coordinates of an arc; `None` for edges.
    pub fn store(self, arc: &Arc) -> Option<(Kind, i64, i64)> {
        let s = self.lower_sign();
        match *arc {
            Arc::Upper(a, b) => Some((Kind::Upper, a, b)),
            Arc::Lower(a, b) if s == 1 => Some((Kind::Lower, a, b)),
            Arc::Lower(a, b) => Some((Kind::Lower, -b, -a)),
            Arc::Conn(a, b) => Some((Kind::Conn, a, s * b)),
            _ => None,
        }
    }

    /// Inverse of [`Frame::store`] on valid points.
    pub fn load(self, kind: Kind, x: i64, y: i64) -> Arc {
        let s = self.lower_sign();
        match kind {
            Kind::Upper => Arc::Upper(x, y),
            Kind::Lower if s == 1 => Arc::Lower(x, y),
            Kind::Lower => Arc::Lower(-y, -x),
            Kind::Conn => Arc::Conn(x, s * y),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundDirection {
    UpperLeft,
    UpperRight,
    LowerLeft,
    LowerRight,
}

impl BoundDirection {
    pub const ALL: [BoundDirection; 4] =
        [BoundDirection::UpperLeft, BoundDirection::UpperRight, BoundDirection::LowerLeft, BoundDirection::LowerRight];

    /// Boundary carrying the far endpoints.
    pub fn target(self) -> Boundary {
        match self {
            BoundDirection::UpperLeft | BoundDirection::UpperRight => Boundary::Upper,
            BoundDirection::LowerLeft | BoundDirection::LowerRight => Boundary::Lower,
        }
    }

    /// Whether boundedness is about the far indices from above (else from below).
    pub fn above(self) -> bool {
        matches!(self, BoundDirection::UpperRight | BoundDirection::LowerLeft)
    }

    /// The direction whose far indices lie on `target` and are bounded on the given side.
    pub fn from_parts(target: Boundary, above: bool) -> BoundDirection {
        match (target, above) {
            (Boundary::Upper, true) => BoundDirection::UpperRight,
            (Boundary::Upper, false) => BoundDirection::UpperLeft,
            (Boundary::Lower, true) => BoundDirection::LowerLeft,
            (Boundary::Lower, false) => BoundDirection::LowerRight,
        }
    }
}

impl fmt::Display for BoundDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundDirection::UpperLeft => "upper-left",
            BoundDirection::UpperRight => "upper-right",
            BoundDirection::LowerLeft => "lower-left",
            BoundDirection::LowerRight => "lower-right",
        };
        f.write_str(s)
    }
}

pub fn validity(kind: Kind) -> Zone {
    match kind {
        Kind::Upper | Kind::Lower => Zone::new(Bounds { d_min: Some(2), ..Default::default() }),
        Kind::Conn => Zone::all(),
    }
}

/// Crossing of an arc of kind `k1` on `(x1, y1)` with an arc of kind `k2` on `(x2, y2)`.
pub fn cases(frame: Frame, k1: Kind, k2: Kind) -> Vec<CrossRelationCase> {
    use Kind::*;
    let s = CrossRelationCase::strict;
    match (k1, k2) {
        (Upper, Upper) | (Lower, Lower) => {
            vec![s(&[(X1, X2), (X2, Y1), (Y1, Y2)]), s(&[(X2, X1), (X1, Y2), (Y2, Y1)])]
        }
        (Upper, Conn) => vec![s(&[(X1, X2), (X2, Y1)])],
        (Conn, Upper) => vec![s(&[(X2, X1), (X1, Y2)])],
        (Lower, Conn) => vec![s(&[(X1, Y2), (Y2, Y1)])],
        (Conn, Lower) => vec![s(&[(X2, Y1), (Y1, Y2)])],
        (Conn, Conn) => match frame {
            Frame::Index => vec![s(&[(X2, X1), (Y2, Y1)]), s(&[(X1, X2), (Y1, Y2)])],
            Frame::Mirrored => vec![s(&[(X2, X1), (Y1, Y2)]), s(&[(X1, X2), (Y2, Y1)])],
        },
        (Upper, Lower) | (Lower, Upper) => Vec::new(),
    }
}

fn slot_boundary(kind: Kind, second: bool) -> Boundary {
    let (a, b) = kind.boundaries();
    if second {
        b
    } else {
        a
    }
}

/// Far-endpoint values unbounded on one side, read per zone: the contributing
/// near-endpoint values when the slice is unbounded.
fn slot_unbounded(z: &Zone, near_is_y: bool, far_above: bool) -> IntervalSet {
    let Some(b) = z.bounds() else { return IntervalSet::empty() };
    match (near_is_y, far_above) {
        (false, true) if b.y_max.is_none() && b.d_max.is_none() => z.x_range(),
        (false, false) if b.y_min.is_none() && b.d_min.is_none() => z.x_range(),
        (true, true) if b.x_max.is_none() && b.d_min.is_none() => z.y_range(),
        (true, false) if b.x_min.is_none() && b.d_max.is_none() => z.y_range(),
        _ => IntervalSet::empty(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSet {
    frame: Frame,
    upper: Region,
    lower: Region,
    conn: Region,
}

impl Default for ArcSet {
    fn default() -> Self {
        ArcSet::empty()
    }
}

impl ArcSet {
    pub fn empty() -> ArcSet {
        ArcSet::empty_in(Frame::Index)
    }

    pub fn empty_in(frame: Frame) -> ArcSet {
        ArcSet { frame, upper: Region::empty(), lower: Region::empty(), conn: Region::empty() }
    }

    /// Every arc.
    pub fn all() -> ArcSet {
        let mut t = ArcSet::empty();
        for k in Kind::ALL {
            t.set_region(k, Region::from_zone(validity(k)));
        }
        t
    }

    pub fn from_arcs<'a>(arcs: impl IntoIterator<Item = &'a Arc>) -> ArcSet {
        let mut t = ArcSet::empty();
        for a in arcs {
            t.insert(a);
        }
        t
    }

    /// Builds a set from per-kind regions given in `frame` coordinates.
    pub fn from_regions(frame: Frame, upper: Region, lower: Region, conn: Region) -> ArcSet {
        let mut t = ArcSet::empty_in(frame);
        t.set_region(Kind::Upper, upper);
        t.set_region(Kind::Lower, lower);
        t.set_region(Kind::Conn, conn);
        t
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn region(&self, kind: Kind) -> &Region {
        match kind {
            Kind::Upper => &self.upper,
            Kind::Lower => &self.lower,
            Kind::Conn => &self.conn,
        }
    }

    fn region_mut(&mut self, kind: Kind) -> &mut Region {
        match kind {
            Kind::Upper => &mut self.upper,
            Kind::Lower => &mut self.lower,
            Kind::Conn => &mut self.conn,
        }
    }

    /// Replaces a region (in this set's frame), clipped to the kind's validity.
    pub fn set_region(&mut self, kind: Kind, r: Region) {
        *self.region_mut(kind) = r.intersect_zone(&validity(kind));
    }

    pub fn add_zone(&mut self, kind: Kind, z: Zone) {
        let z = z.intersect(&validity(kind));
        self.region_mut(kind).push(z);
    }

    /// Adds an arc; edges are ignored.
    pub fn insert(&mut self, arc: &Arc) {
        if let Some((k, x, y)) = self.frame.store(arc) {
            self.add_zone(k, Zone::new(Bounds { x_min: Some(x), x_max: Some(x), y_min: Some(y), y_max: Some(y), ..Default::default() }));
        }
    }

    pub fn member(&self, arc: &Arc) -> bool {
        match self.frame.store(arc) {
            Some((k, x, y)) => self.region(k).contains(x, y),
            None => false,
        }
    }

    pub fn is_empty(&self) -> bool {
        Kind::ALL.iter().all(|&k| self.region(k).is_empty())
    }

    pub fn is_finite(&self) -> bool {
        Kind::ALL.iter().all(|&k| self.region(k).is_finite())
    }

    /// Members in a fixed order, or `None` when infinite.
    pub fn arcs(&self) -> Option<Vec<Arc>> {
        let mut out = Vec::new();
        for k in Kind::ALL {
            for (x, y) in self.region(k).points()? {
                out.push(self.frame.load(k, x, y));
            }
        }
        out.sort();
        Some(out)
    }

    /// Members with every index in `[a, b]`, ordered by kind then row-major.
    pub fn enumerate_window(&self, a: i64, b: i64) -> Vec<Arc> {
        let s = self.frame.lower_sign();
        let lower_box = if s == 1 { (a, b) } else { (-b, -a) };
        let mut out = Vec::new();
        for k in Kind::ALL {
            let (xs, ys) = match k {
                Kind::Upper => ((a, b), (a, b)),
                Kind::Lower => (lower_box, lower_box),
                Kind::Conn => ((a, b), lower_box),
            };
            let mut arcs: Vec<Arc> = self.region(k).points_in_box(xs, ys).into_iter().map(|(x, y)| self.frame.load(k, x, y)).collect();
            arcs.sort();
            out.extend(arcs);
        }
        out
    }

    /// The same set written in another frame.
    pub fn to_frame(&self, frame: Frame) -> Result<ArcSet, Error> {
        if frame == self.frame {
            return Ok(self.clone());
        }
        Ok(ArcSet {
            frame,
            upper: self.upper.clone(),
            lower: self.lower.map(Zone::reflect),
            conn: self.conn.try_flat_map(Zone::negate_y)?,
        })
    }

    /// Both operands in a common frame.
    pub fn align(&self, other: &ArcSet) -> Result<(ArcSet, ArcSet), Error> {
        if self.frame == other.frame {
            return Ok((self.clone(), other.clone()));
        }
        if let Ok(o) = other.to_frame(self.frame) {
            return Ok((self.clone(), o));
        }
        let s = self.to_frame(other.frame)?;
        Ok((s, other.clone()))
    }

    fn zip(&self, other: &ArcSet, f: impl Fn(&Region, &Region) -> Region) -> Result<ArcSet, Error> {
        let (a, b) = self.align(other)?;
        Ok(ArcSet {
            frame: a.frame,
            upper: f(&a.upper, &b.upper),
            lower: f(&a.lower, &b.lower),
            conn: f(&a.conn, &b.conn),
        })
    }

    pub fn union(&self, other: &ArcSet) -> Result<ArcSet, Error> {
        self.zip(other, Region::union)
    }

    pub fn intersect(&self, other: &ArcSet) -> Result<ArcSet, Error> {
        self.zip(other, Region::intersect)
    }

    pub fn difference(&self, other: &ArcSet) -> Result<ArcSet, Error> {
        self.zip(other, Region::subtract)
    }

    pub fn is_subset(&self, other: &ArcSet) -> Result<bool, Error> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn equals(&self, other: &ArcSet) -> Result<bool, Error> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    /// Translation by `tau^k`.
    pub fn tau(&self, k: i64) -> ArcSet {
        let s = self.frame.lower_sign();
        ArcSet {
            frame: self.frame,
            upper: self.upper.map(|z| z.shift(k, k)),
            lower: self.lower.map(|z| z.shift(s * k, s * k)),
            conn: self.conn.map(|z| z.shift(k, s * k)),
        }
    }

    /// Half-turn of the strip: `U(a,b) <-> L(a,b)`, `C(a,b) -> C(b,a)`.
    pub fn rotate(&self) -> ArcSet {
        match self.frame {
            Frame::Index => ArcSet {
                frame: self.frame,
                upper: self.lower.clone(),
                lower: self.upper.clone(),
                conn: self.conn.map(Zone::swap),
            },
            Frame::Mirrored => ArcSet {
                frame: self.frame,
                upper: self.lower.map(Zone::reflect),
                lower: self.upper.map(Zone::reflect),
                conn: self.conn.map(Zone::reflect),
            },
        }
    }

    /// Every arc crossing `u`, in the given frame.
    pub fn cross_region_in(frame: Frame, u: &Arc) -> Result<ArcSet, Error> {
        let (ku, x, y) = frame.store(u).ok_or_else(|| Error::EdgeNotArc(u.to_string()))?;
        let src = Region::point(x, y);
        let mut t = ArcSet::empty_in(frame);
        for k in Kind::ALL {
            t.set_region(k, relation_image(&src, &cases(frame, k, ku), Side::Second));
        }
        Ok(t)
    }

    pub fn cross_region(u: &Arc) -> Result<ArcSet, Error> {
        ArcSet::cross_region_in(Frame::Index, u)
    }

    /// The arcs of this set crossing `u`.
    pub fn crossers(&self, u: &Arc) -> Result<ArcSet, Error> {
        self.intersect(&ArcSet::cross_region_in(self.frame, u)?)
    }

    /// Every arc crossing some member.
    pub fn crossing_image(&self) -> ArcSet {
        let mut t = ArcSet::empty_in(self.frame);
        for k1 in Kind::ALL {
            let mut r = Region::empty();
            for k2 in Kind::ALL {
                r = r.union(&relation_image(self.region(k2), &cases(self.frame, k1, k2), Side::Second));
            }
            t.set_region(k1, r);
        }
        t
    }

    /// Arcs crossing no member.
    pub fn nc(&self) -> ArcSet {
        let img = self.crossing_image();
        let mut t = ArcSet::empty_in(self.frame);
        for k in Kind::ALL {
            t.set_region(k, Region::from_zone(validity(k)).subtract(img.region(k)));
        }
        t
    }

    /// Calls `f` with every feasible closed joint system of a crossing pair of members.
    fn for_each_crossing(&self, mut f: impl FnMut(Kind, Kind, &Dbm) -> bool) -> bool {
        for k1 in Kind::ALL {
            for k2 in Kind::ALL {
                let cs = cases(self.frame, k1, k2);
                for z1 in self.region(k1).zones() {
                    for z2 in self.region(k2).zones() {
                        for c in &cs {
                            if let Some(dbm) = c.joint(z1, z2) {
                                if !f(k1, k2, &dbm) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_noncrossing(&self) -> bool {
        self.for_each_crossing(|_, _, _| false)
    }

    /// All corner arcs of crossing pairs of members.
    pub fn corner_set(&self) -> ArcSet {
        let mut out = ArcSet::empty_in(self.frame);
        self.for_each_crossing(|k1, k2, dbm| {
            for (kind, zone) in corner_zones(k1, k2, dbm) {
                out.add_zone(kind, zone);
            }
            true
        });
        out
    }

    pub fn is_ptolemy(&self) -> bool {
        self.for_each_crossing(|k1, k2, dbm| {
            corner_zones(k1, k2, dbm)
                .into_iter()
                .all(|(kind, z)| Region::from_zone(z.intersect(&validity(kind))).is_subset(self.region(kind)))
        })
    }

    pub fn closure_step(&self) -> ArcSet {
        self.union(&self.corner_set()).expect("corner set shares the frame")
    }

    /// Smallest Ptolemy diagram containing a finite set.
    pub fn ptolemy_closure(&self) -> Result<ArcSet, Error> {
        if !self.is_finite() {
            return Err(Error::Precondition("closure needs a finite set".into()));
        }
        let mut cur = self.clone();
        loop {
            let next = cur.closure_step();
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// True indices `i` such that the arc `[p, (target, i)]` is a member.
    pub fn fan_slice(&self, p: MarkedPoint, target: Boundary) -> IntervalSet {
        let s = self.frame.value(p);
        let sign = self.frame.lower_sign();
        let to_true = |set: IntervalSet, b: Boundary| if b == Boundary::Lower && sign == -1 { set.negate() } else { set };
        if p.boundary == target {
            let kind = if target == Boundary::Upper { Kind::Upper } else { Kind::Lower };
            let r = self.region(kind);
            to_true(r.y_at(s).union(&r.x_at(s)), target)
        } else if p.boundary == Boundary::Upper {
            to_true(self.conn.y_at(s), Boundary::Lower)
        } else {
            self.conn.x_at(s)
        }
    }

    /// Whether `p` is bounded for this set in direction `dir`.
    pub fn bounded(&self, p: MarkedPoint, dir: BoundDirection) -> bool {
        let slice = self.fan_slice(p, dir.target());
        let end = if dir.above() { slice.sup() } else { slice.inf() };
        end.map_or(true, |e| !e.is_infinite())
    }

    /// True indices of the points on `boundary` that are not bounded in direction `dir`.
    pub fn unbounded_point_set(&self, boundary: Boundary, dir: BoundDirection) -> IntervalSet {
        let target = dir.target();
        let sign = self.frame.lower_sign();
        let stored_above = if target == Boundary::Lower && sign == -1 { !dir.above() } else { dir.above() };
        let mut out = IntervalSet::empty();
        let kinds: &[(Kind, bool)] = match (boundary, target) {
            (Boundary::Upper, Boundary::Upper) => &[(Kind::Upper, false), (Kind::Upper, true)],
            (Boundary::Lower, Boundary::Lower) => &[(Kind::Lower, false), (Kind::Lower, true)],
            (Boundary::Upper, Boundary::Lower) => &[(Kind::Conn, false)],
            (Boundary::Lower, Boundary::Upper) => &[(Kind::Conn, true)],
        };
        for &(kind, near_is_y) in kinds {
            debug_assert_eq!(slot_boundary(kind, near_is_y), boundary);
            for z in self.region(kind).zones() {
                out = out.union(&slot_unbounded(z, near_is_y, stored_above));
            }
        }
        if boundary == Boundary::Lower && sign == -1 {
            out.negate()
        } else {
            out
        }
    }

    /// Largest absolute finite bound appearing in the presentation.
    pub fn magnitude(&self) -> i64 {
        Kind::ALL.iter().map(|&k| self.region(k).magnitude()).max().unwrap_or(0)
    }
}

/// Corner zones of one crossing system, with edge loci removed.
fn corner_zones(k1: Kind, k2: Kind, dbm: &Dbm) -> Vec<(Kind, Zone)> {
    let mut out = Vec::with_capacity(4);
    for (e, e_second) in [(X1, false), (Y1, true)] {
        for (f, f_second) in [(X2, false), (Y2, true)] {
            let be = slot_boundary(k1, e_second);
            let bf = slot_boundary(k2, f_second);
            if be != bf {
                let (u, l) = if be == Boundary::Upper { (e, f) } else { (f, e) };
                out.push((Kind::Conn, dbm.project(u, l)));
                continue;
            }
            let kind = if be == Boundary::Upper { Kind::Upper } else { Kind::Lower };
            // order the two values; each strict order gives one sorted projection
            for (a, b) in [(e, f), (f, e)] {
                let mut sub = dbm.clone();
                sub.constrain(a, b, -1);
                if sub.close() {
                    let z = sub.project(a, b).intersect(&validity(kind));
                    if !z.is_empty() {
                        out.push((kind, z));
                    }
                }
            }
        }
    }
    out
}

impl Serialize for ArcSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let zones = |r: &Region| r.zones().iter().filter_map(Zone::bounds).collect::<Vec<_>>();
        let mut st = s.serialize_struct("ArcSet", 4)?;
        st.serialize_field("frame", &self.frame)?;
        st.serialize_field("upper", &zones(&self.upper))?;
        st.serialize_field("lower", &zones(&self.lower))?;
        st.serialize_field("conn", &zones(&self.conn))?;
        st.end()
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(arcs) = self.arcs() {
            let shown: Vec<String> = arcs.iter().map(Arc::to_string).collect();
            return write!(f, "{{{}}}", shown.join(", "));
        }
        let frame = match self.frame {
            Frame::Index => "",
            Frame::Mirrored => " (mirrored)",
        };
        write!(f, "upper: {}; lower: {}; conn: {}{}", self.upper, self.lower, self.conn, frame)
    }
}
