//! Integer difference-bound zones in the plane of arc coordinates.
//!
//! A zone is the set of integer pairs `(x, y)` with `x`, `y` and `d = y - x`
//! each confined to an interval with optional ends. Zones are stored closed,
//! so equal sets have equal representations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::interval::{ExtBound, IntervalSet};

fn add(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

/// Square matrix of upper bounds: entry `(i, j)` bounds `v_i - v_j`, `None` is unbounded.
/// Node 0 is the constant zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dbm {
    n: usize,
    m: Vec<Option<i64>>,
}

impl Dbm {
    pub fn new(n: usize) -> Self {
        let mut m = vec![None; n * n];
        for i in 0..n {
            m[i * n + i] = Some(0);
        }
        Dbm { n, m }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<i64> {
        self.m[i * self.n + j]
    }

    /// Adds `v_i - v_j <= c`.
    pub fn constrain(&mut self, i: usize, j: usize, c: i64) {
        let k = i * self.n + j;
        self.m[k] = min_opt(self.m[k], Some(c));
    }

    /// Tightens all entries; returns false when the system has no solution.
    pub fn close(&mut self) -> bool {
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                let ik = self.m[i * n + k];
                if ik.is_none() {
                    continue;
                }
                for j in 0..n {
                    let via = add(ik, self.m[k * n + j]);
                    let ij = &mut self.m[i * n + j];
                    *ij = min_opt(*ij, via);
                }
            }
        }
        (0..n).all(|i| self.m[i * n + i].map_or(true, |v| v >= 0))
    }

    /// Copies the constraints of `z` onto nodes `x` and `y`.
    pub fn add_zone(&mut self, z: &Zone, x: usize, y: usize) {
        let Some(b) = z.bounds() else {
            // an empty zone: force infeasibility
            self.constrain(0, 0, -1);
            return;
        };
        if let Some(v) = b.x_max {
            self.constrain(x, 0, v);
        }
        if let Some(v) = b.x_min {
            self.constrain(0, x, -v);
        }
        if let Some(v) = b.y_max {
            self.constrain(y, 0, v);
        }
        if let Some(v) = b.y_min {
            self.constrain(0, y, -v);
        }
        if let Some(v) = b.d_max {
            self.constrain(y, x, v);
        }
        if let Some(v) = b.d_min {
            self.constrain(x, y, -v);
        }
    }

    /// The pairs `(v_i, v_j)` allowed by a closed matrix.
    pub fn project(&self, i: usize, j: usize) -> Zone {
        Zone::new(Bounds {
            x_min: self.get(0, i).map(|v| -v),
            x_max: self.get(i, 0),
            y_min: self.get(0, j).map(|v| -v),
            y_max: self.get(j, 0),
            d_min: self.get(i, j).map(|v| -v),
            d_max: self.get(j, i),
        })
    }
}

/// Nodes of the joint system for a pair of arcs: zero, then `x1, y1, x2, y2`.
pub const X1: usize = 1;
pub const Y1: usize = 2;
pub const X2: usize = 3;
pub const Y2: usize = 4;

/// A conjunction of difference constraints `v_i - v_j <= c` between the
/// coordinates of two arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRelationCase {
    constraints: Vec<(usize, usize, i64)>,
}

impl CrossRelationCase {
    pub fn new(constraints: Vec<(usize, usize, i64)>) -> Self {
        CrossRelationCase { constraints }
    }

    /// Conjunction of strict inequalities `v_a < v_b`.
    pub fn strict(pairs: &[(usize, usize)]) -> Self {
        CrossRelationCase { constraints: pairs.iter().map(|&(a, b)| (a, b, -1)).collect() }
    }

    pub fn constraints(&self) -> &[(usize, usize, i64)] {
        &self.constraints
    }

    /// The closed joint system with `z1` on `(x1, y1)` and `z2` on `(x2, y2)`, or `None` if infeasible.
    pub fn joint(&self, z1: &Zone, z2: &Zone) -> Option<Dbm> {
        if z1.is_empty() || z2.is_empty() {
            return None;
        }
        let mut dbm = Dbm::new(5);
        dbm.add_zone(z1, X1, Y1);
        dbm.add_zone(z2, X2, Y2);
        for &(i, j, c) in &self.constraints {
            dbm.constrain(i, j, c);
        }
        dbm.close().then_some(dbm)
    }
}

/// Optional bounds on `x`, `y` and `d = y - x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_min: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_max: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_min: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_max: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_min: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_max: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zone {
    b: Option<Bounds>,
}

const X: usize = 1;
const Y: usize = 2;

impl Zone {
    pub fn new(b: Bounds) -> Zone {
        let mut dbm = Dbm::new(3);
        dbm.add_zone(&Zone { b: Some(b) }, X, Y);
        Zone::from_dbm(dbm)
    }

    fn from_dbm(mut dbm: Dbm) -> Zone {
        if !dbm.close() {
            return Zone::empty();
        }
        Zone {
            b: Some(Bounds {
                x_min: dbm.get(0, X).map(|v| -v),
                x_max: dbm.get(X, 0),
                y_min: dbm.get(0, Y).map(|v| -v),
                y_max: dbm.get(Y, 0),
                d_min: dbm.get(X, Y).map(|v| -v),
                d_max: dbm.get(Y, X),
            }),
        }
    }

    fn dbm(&self) -> Dbm {
        let mut dbm = Dbm::new(3);
        dbm.add_zone(self, X, Y);
        dbm
    }

    pub fn empty() -> Zone {
        Zone { b: None }
    }

    pub fn all() -> Zone {
        Zone::new(Bounds::default())
    }

    /// Closed bounds, `None` when empty.
    pub fn bounds(&self) -> Option<Bounds> {
        self.b
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_none()
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        let Some(b) = self.b else { return false };
        let ok = |v: i64, lo: Option<i64>, hi: Option<i64>| lo.map_or(true, |l| l <= v) && hi.map_or(true, |h| v <= h);
        ok(x, b.x_min, b.x_max) && ok(y, b.y_min, b.y_max) && ok(y - x, b.d_min, b.d_max)
    }

    pub fn intersect(&self, other: &Zone) -> Zone {
        if self.is_empty() || other.is_empty() {
            return Zone::empty();
        }
        let mut dbm = self.dbm();
        dbm.add_zone(other, X, Y);
        Zone::from_dbm(dbm)
    }

    /// The atomic constraints `(i, j, c)` meaning `v_i - v_j <= c` (nodes 0, x=1, y=2).
    fn atoms(&self) -> Vec<(usize, usize, i64)> {
        let Some(b) = self.b else { return Vec::new() };
        let mut out = Vec::new();
        let mut push = |i, j, c: Option<i64>| {
            if let Some(c) = c {
                out.push((i, j, c));
            }
        };
        push(X, 0, b.x_max);
        push(0, X, b.x_min.map(|v| -v));
        push(Y, 0, b.y_max);
        push(0, Y, b.y_min.map(|v| -v));
        push(Y, X, b.d_max);
        push(X, Y, b.d_min.map(|v| -v));
        out
    }

    fn with_atom(&self, (i, j, c): (usize, usize, i64)) -> Zone {
        if self.is_empty() {
            return *self;
        }
        let mut dbm = self.dbm();
        dbm.constrain(i, j, c);
        Zone::from_dbm(dbm)
    }

    /// `self \ other` as pairwise disjoint nonempty zones.
    pub fn subtract(&self, other: &Zone) -> Vec<Zone> {
        if self.is_empty() {
            return Vec::new();
        }
        if self.intersect(other).is_empty() {
            return vec![*self];
        }
        let mut out = Vec::new();
        let mut cur = *self;
        for (i, j, c) in other.atoms() {
            let piece = cur.with_atom((j, i, -c - 1));
            if !piece.is_empty() {
                out.push(piece);
            }
            cur = cur.with_atom((i, j, c));
            if cur.is_empty() {
                break;
            }
        }
        out
    }

    pub fn is_subset(&self, other: &Zone) -> bool {
        self.subtract(other).is_empty()
    }

    fn map_bounds(&self, f: impl FnOnce(Bounds) -> Bounds) -> Zone {
        match self.b {
            None => *self,
            Some(b) => Zone::new(f(b)),
        }
    }

    /// `(x, y) -> (x + dx, y + dy)`.
    pub fn shift(&self, dx: i64, dy: i64) -> Zone {
        let s = |v: Option<i64>, k: i64| v.map(|v| v + k);
        self.map_bounds(|b| Bounds {
            x_min: s(b.x_min, dx),
            x_max: s(b.x_max, dx),
            y_min: s(b.y_min, dy),
            y_max: s(b.y_max, dy),
            d_min: s(b.d_min, dy - dx),
            d_max: s(b.d_max, dy - dx),
        })
    }

    /// `(x, y) -> (-y, -x)`, which keeps `d`.
    pub fn reflect(&self) -> Zone {
        let n = |v: Option<i64>| v.map(|v| -v);
        self.map_bounds(|b| Bounds {
            x_min: n(b.y_max),
            x_max: n(b.y_min),
            y_min: n(b.x_max),
            y_max: n(b.x_min),
            d_min: b.d_min,
            d_max: b.d_max,
        })
    }

    /// `(x, y) -> (y, x)`, which negates `d`.
    pub fn swap(&self) -> Zone {
        let n = |v: Option<i64>| v.map(|v| -v);
        self.map_bounds(|b| Bounds {
            x_min: b.y_min,
            x_max: b.y_max,
            y_min: b.x_min,
            y_max: b.x_max,
            d_min: n(b.d_max),
            d_max: n(b.d_min),
        })
    }

    /// The box spanned by the `x` and `y` ranges.
    pub fn hull_box(&self) -> Zone {
        self.map_bounds(|b| Bounds { d_min: None, d_max: None, ..b })
    }

    /// `(x, y) -> (x, -y)`. This flips `d` into a sum, so it is only written
    /// back as zones when the zone is a box or can be cut into finitely many rows.
    pub fn negate_y(&self) -> Result<Vec<Zone>, Error> {
        let Some(b) = self.b else { return Ok(Vec::new()) };
        let n = |v: Option<i64>| v.map(|v| -v);
        if self.hull_box() == *self {
            return Ok(vec![Zone::new(Bounds {
                x_min: b.x_min,
                x_max: b.x_max,
                y_min: n(b.y_max),
                y_max: n(b.y_min),
                d_min: None,
                d_max: None,
            })]);
        }
        if let (Some(lo), Some(hi)) = (b.x_min, b.x_max) {
            return Ok((lo..=hi)
                .filter_map(|x| {
                    let col = self.intersect(&Zone::new(Bounds { x_min: Some(x), x_max: Some(x), ..Default::default() }));
                    let c = col.bounds()?;
                    Some(Zone::new(Bounds { x_min: Some(x), x_max: Some(x), y_min: n(c.y_max), y_max: n(c.y_min), ..Default::default() }))
                })
                .collect());
        }
        if let (Some(lo), Some(hi)) = (b.y_min, b.y_max) {
            return Ok((lo..=hi)
                .filter_map(|y| {
                    let row = self.intersect(&Zone::new(Bounds { y_min: Some(y), y_max: Some(y), ..Default::default() }));
                    let r = row.bounds()?;
                    Some(Zone::new(Bounds { y_min: Some(-y), y_max: Some(-y), x_min: r.x_min, x_max: r.x_max, ..Default::default() }))
                })
                .collect());
        }
        Err(Error::NotPresentable(format!("{self} under y -> -y")))
    }

    pub fn x_range(&self) -> IntervalSet {
        match self.b {
            None => IntervalSet::empty(),
            Some(b) => IntervalSet::interval(b.x_min, b.x_max),
        }
    }

    pub fn y_range(&self) -> IntervalSet {
        match self.b {
            None => IntervalSet::empty(),
            Some(b) => IntervalSet::interval(b.y_min, b.y_max),
        }
    }

    /// `{ y : (x, y) in self }`.
    pub fn y_at(&self, x: i64) -> IntervalSet {
        self.intersect(&Zone::new(Bounds { x_min: Some(x), x_max: Some(x), ..Default::default() }))
            .y_range()
    }

    /// `{ x : (x, y) in self }`.
    pub fn x_at(&self, y: i64) -> IntervalSet {
        self.intersect(&Zone::new(Bounds { y_min: Some(y), y_max: Some(y), ..Default::default() }))
            .x_range()
    }

    pub fn lo(v: Option<i64>) -> ExtBound {
        v.map_or(ExtBound::NegInf, ExtBound::Finite)
    }

    pub fn hi(v: Option<i64>) -> ExtBound {
        v.map_or(ExtBound::PosInf, ExtBound::Finite)
    }

    pub fn is_bounded(&self) -> bool {
        match self.b {
            None => true,
            Some(b) => b.x_min.is_some() && b.x_max.is_some() && b.y_min.is_some() && b.y_max.is_some(),
        }
    }

    /// Integer points inside `[lo, hi]^2`.
    pub fn points_in(&self, lo: i64, hi: i64) -> Vec<(i64, i64)> {
        self.points_in_box((lo, hi), (lo, hi))
    }

    /// Integer points with `x` in `xs` and `y` in `ys`, row-major.
    pub fn points_in_box(&self, xs: (i64, i64), ys: (i64, i64)) -> Vec<(i64, i64)> {
        let window = Zone::new(Bounds { x_min: Some(xs.0), x_max: Some(xs.1), y_min: Some(ys.0), y_max: Some(ys.1), ..Default::default() });
        let z = self.intersect(&window);
        let mut out = Vec::new();
        if let Some(xs) = z.x_range().points() {
            for x in xs {
                for y in z.y_at(x).points().unwrap_or_default() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Some member, preferring small coordinates.
    pub fn sample(&self) -> Option<(i64, i64)> {
        let b = self.b?;
        let pick = |lo: Option<i64>, hi: Option<i64>| match (lo, hi) {
            (Some(l), _) if l > 0 => l,
            (_, Some(h)) if h < 0 => h,
            _ => 0,
        };
        let x = pick(b.x_min, b.x_max);
        let ys = self.y_at(x);
        let y = match (ys.inf()?.finite(), ys.sup()?.finite()) {
            (Some(l), _) if l > x => l,
            (_, Some(h)) if h < x => h,
            _ => x,
        };
        Some((x, y))
    }

    /// Largest absolute finite bound, 0 for the empty zone.
    pub fn magnitude(&self) -> i64 {
        let Some(b) = self.b else { return 0 };
        [b.x_min, b.x_max, b.y_min, b.y_max, b.d_min, b.d_max]
            .into_iter()
            .flatten()
            .map(i64::abs)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Zone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(b) = self.b else { return write!(f, "{{}}") };
        write!(
            f,
            "{{x in [{}, {}], y in [{}, {}], y-x in [{}, {}]}}",
            Zone::lo(b.x_min),
            Zone::hi(b.x_max),
            Zone::lo(b.y_min),
            Zone::hi(b.y_max),
            Zone::lo(b.d_min),
            Zone::hi(b.d_max)
        )
    }
}
