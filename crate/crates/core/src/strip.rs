//! Marked points, arcs and edges of the infinite strip, together with the
//! translation `tau`, the crossing predicate, the clockwise fan order and the
//! quadrilateral bookkeeping (corners and middle terms) built on top of it.
//!
//! Everything here works on integer indices. Lower indices are stored as
//! given (`r_i` is index `i`); the leftward geometric placement of the lower
//! boundary only matters to the renderer and the geometric oracle.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Upper,
    Lower,
}

impl Boundary {
    pub fn other(self) -> Boundary {
        match self {
            Boundary::Upper => Boundary::Lower,
            Boundary::Lower => Boundary::Upper,
        }
    }
}

/// `l_i` (upper) or `r_i` (lower).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedPoint {
    pub boundary: Boundary,
    pub index: i64,
}

impl MarkedPoint {
    pub const fn upper(index: i64) -> Self {
        MarkedPoint { boundary: Boundary::Upper, index }
    }

    pub const fn lower(index: i64) -> Self {
        MarkedPoint { boundary: Boundary::Lower, index }
    }

    pub fn tau(self, k: i64) -> Self {
        MarkedPoint { index: self.index + k, ..self }
    }

    /// Horizontal position in the plane: `l_i` sits at `x = i`, `r_i` at `x = -i`.
    pub fn geometric_x(self) -> i64 {
        match self.boundary {
            Boundary::Upper => self.index,
            Boundary::Lower => -self.index,
        }
    }
}

impl fmt::Display for MarkedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.boundary {
            Boundary::Upper => write!(f, "L({})", self.index),
            Boundary::Lower => write!(f, "R({})", self.index),
        }
    }
}

impl FromStr for MarkedPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (head, args) = split_call(s).ok_or_else(|| Error::Parse(format!("bad marked point `{s}`")))?;
        let index: i64 = args
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad marked point index in `{s}`")))?;
        match head {
            "L" => Ok(MarkedPoint::upper(index)),
            "R" => Ok(MarkedPoint::lower(index)),
            _ => Err(Error::Parse(format!("bad marked point `{s}`"))),
        }
    }
}

/// An arc (isotopy class joining two marked points) or a boundary edge.
///
/// Same-boundary arcs keep their indices sorted (`a < b`, `b - a >= 2`).
/// `Conn(a, b)` joins `l_a` and `r_b`. Edges are named by their left index:
/// `UpperEdge(a)` joins `l_a` and `l_{a+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arc {
    Upper(i64, i64),
    Lower(i64, i64),
    Conn(i64, i64),
    UpperEdge(i64),
    LowerEdge(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Upper,
    Lower,
    Conn,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Upper, Kind::Lower, Kind::Conn];

    /// Boundaries of the (first, second) coordinate of an arc of this kind.
    pub fn boundaries(self) -> (Boundary, Boundary) {
        match self {
            Kind::Upper => (Boundary::Upper, Boundary::Upper),
            Kind::Lower => (Boundary::Lower, Boundary::Lower),
            Kind::Conn => (Boundary::Upper, Boundary::Lower),
        }
    }
}

impl Arc {
    pub fn upper(a: i64, b: i64) -> Result<Arc, Error> {
        match Arc::between(MarkedPoint::upper(a), MarkedPoint::upper(b))? {
            arc @ Arc::Upper(..) => Ok(arc),
            _ => Err(Error::EdgeNotArc(format!("U({a},{b})"))),
        }
    }

    pub fn lower(a: i64, b: i64) -> Result<Arc, Error> {
        match Arc::between(MarkedPoint::lower(a), MarkedPoint::lower(b))? {
            arc @ Arc::Lower(..) => Ok(arc),
            _ => Err(Error::EdgeNotArc(format!("L({a},{b})"))),
        }
    }

    pub fn conn(upper: i64, lower: i64) -> Arc {
        Arc::Conn(upper, lower)
    }

    /// The arc or edge joining two distinct marked points.
    pub fn between(p: MarkedPoint, q: MarkedPoint) -> Result<Arc, Error> {
        if p == q {
            return Err(Error::Degenerate(format!("{p} joined to itself")));
        }
        Ok(match (p.boundary, q.boundary) {
            (Boundary::Upper, Boundary::Lower) => Arc::Conn(p.index, q.index),
            (Boundary::Lower, Boundary::Upper) => Arc::Conn(q.index, p.index),
            (b, _) => {
                let (lo, hi) = (p.index.min(q.index), p.index.max(q.index));
                match (b, hi - lo) {
                    (Boundary::Upper, 1) => Arc::UpperEdge(lo),
                    (Boundary::Lower, 1) => Arc::LowerEdge(lo),
                    (Boundary::Upper, _) => Arc::Upper(lo, hi),
                    (Boundary::Lower, _) => Arc::Lower(lo, hi),
                }
            }
        })
    }

    pub fn is_edge(&self) -> bool {
        matches!(self, Arc::UpperEdge(_) | Arc::LowerEdge(_))
    }

    /// Kind and coordinate pair, `None` for edges.
    pub fn kind_point(&self) -> Option<(Kind, i64, i64)> {
        match *self {
            Arc::Upper(a, b) => Some((Kind::Upper, a, b)),
            Arc::Lower(a, b) => Some((Kind::Lower, a, b)),
            Arc::Conn(a, b) => Some((Kind::Conn, a, b)),
            _ => None,
        }
    }

    pub fn from_kind_point(kind: Kind, x: i64, y: i64) -> Result<Arc, Error> {
        match kind {
            Kind::Upper => Arc::upper(x, y),
            Kind::Lower => Arc::lower(x, y),
            Kind::Conn => Ok(Arc::Conn(x, y)),
        }
    }

    pub fn endpoints(&self) -> (MarkedPoint, MarkedPoint) {
        match *self {
            Arc::Upper(a, b) => (MarkedPoint::upper(a), MarkedPoint::upper(b)),
            Arc::Lower(a, b) => (MarkedPoint::lower(a), MarkedPoint::lower(b)),
            Arc::Conn(a, b) => (MarkedPoint::upper(a), MarkedPoint::lower(b)),
            Arc::UpperEdge(a) => (MarkedPoint::upper(a), MarkedPoint::upper(a + 1)),
            Arc::LowerEdge(a) => (MarkedPoint::lower(a), MarkedPoint::lower(a + 1)),
        }
    }

    pub fn has_endpoint(&self, p: MarkedPoint) -> bool {
        let (a, b) = self.endpoints();
        a == p || b == p
    }

    /// The endpoint other than `p`, if `p` is an endpoint.
    pub fn other_endpoint(&self, p: MarkedPoint) -> Option<MarkedPoint> {
        let (a, b) = self.endpoints();
        if a == p {
            Some(b)
        } else if b == p {
            Some(a)
        } else {
            None
        }
    }

    pub fn tau(&self, k: i64) -> Arc {
        match *self {
            Arc::Upper(a, b) => Arc::Upper(a + k, b + k),
            Arc::Lower(a, b) => Arc::Lower(a + k, b + k),
            Arc::Conn(a, b) => Arc::Conn(a + k, b + k),
            Arc::UpperEdge(a) => Arc::UpperEdge(a + k),
            Arc::LowerEdge(a) => Arc::LowerEdge(a + k),
        }
    }

    /// Half-turn of the strip: swaps `l_i` and `r_i`.
    pub fn rotate(&self) -> Arc {
        match *self {
            Arc::Upper(a, b) => Arc::Lower(a, b),
            Arc::Lower(a, b) => Arc::Upper(a, b),
            Arc::Conn(a, b) => Arc::Conn(b, a),
            Arc::UpperEdge(a) => Arc::LowerEdge(a),
            Arc::LowerEdge(a) => Arc::UpperEdge(a),
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Arc::Upper(a, b) => write!(f, "U({a},{b})"),
            Arc::Lower(a, b) => write!(f, "L({a},{b})"),
            Arc::Conn(a, b) => write!(f, "C({a},{b})"),
            Arc::UpperEdge(a) => write!(f, "EU({a},{})", a + 1),
            Arc::LowerEdge(a) => write!(f, "EL({a},{})", a + 1),
        }
    }
}

impl FromStr for Arc {
    type Err = Error;

    /// Parses `U(a,b)`, `L(a,b)` or `C(a,b)`. Edge literals are rejected.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad arc literal `{s}`"));
        let (head, args) = split_call(s).ok_or_else(bad)?;
        let mut parts = args.split(',');
        let a: i64 = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let b: i64 = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        if parts.next().is_some() {
            return Err(bad());
        }
        match head {
            "U" => Arc::upper(a, b),
            "L" => Arc::lower(a, b),
            "C" => Ok(Arc::Conn(a, b)),
            _ => Err(bad()),
        }
    }
}

fn split_call(s: &str) -> Option<(&str, &str)> {
    let open = s.find('(')?;
    let inner = s[open + 1..].strip_suffix(')')?;
    Some((s[..open].trim(), inner))
}

fn interleaved(i: i64, j: i64, p: i64, q: i64) -> bool {
    (i < p && p < j && j < q) || (p < i && i < q && q < j)
}

/// Whether two arcs cross. Edges cross nothing.
pub fn crosses(u: &Arc, v: &Arc) -> bool {
    use Arc::*;
    match (*u, *v) {
        (Upper(i, j), Upper(p, q)) | (Lower(i, j), Lower(p, q)) => interleaved(i, j, p, q),
        (Upper(i, j), Conn(p, _)) | (Conn(p, _), Upper(i, j)) => i < p && p < j,
        (Lower(i, j), Conn(_, q)) | (Conn(_, q), Lower(i, j)) => i < q && q < j,
        (Conn(i, j), Conn(p, q)) => (i > p && j > q) || (i < p && j < q),
        _ => false,
    }
}

/// Sort key realising the clockwise fan order at a marked point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FanKey {
    pub class: u8,
    pub tiebreak: i64,
}

impl FanKey {
    /// Key of the arc or edge `[base, other]` in the fan at `base`.
    pub fn of(base: MarkedPoint, other: MarkedPoint) -> FanKey {
        let class = if other.boundary != base.boundary {
            1
        } else if other.index > base.index {
            2
        } else {
            0
        };
        FanKey { class, tiebreak: -other.index }
    }
}

pub fn fan_key(base: MarkedPoint, arc: &Arc) -> Result<FanKey, Error> {
    let other = arc
        .other_endpoint(base)
        .ok_or_else(|| Error::NotInFan(format!("{arc} does not end at {base}")))?;
    Ok(FanKey::of(base, other))
}

pub fn fan_compare(base: MarkedPoint, s: &Arc, t: &Arc) -> Result<Ordering, Error> {
    Ok(fan_key(base, s)?.cmp(&fan_key(base, t)?))
}

/// The four endpoint recombinations `[p,i], [p,j], [q,i], [q,j]` of a crossing pair.
pub fn corners(u: &Arc, v: &Arc) -> Result<Vec<Arc>, Error> {
    if !crosses(u, v) {
        return Err(Error::NotCrossing(format!("{u} and {v}")));
    }
    let (p, q) = u.endpoints();
    let (i, j) = v.endpoints();
    [(p, i), (p, j), (q, i), (q, j)]
        .into_iter()
        .map(|(a, b)| Arc::between(a, b))
        .collect()
}

/// The two middle terms from `u2` to `u1`: the quadrilateral sides `m` with
/// `u2 <_e m <_f u1`, `e` shared by `u2` and `m`, `f` shared by `m` and `u1`.
pub fn middle_terms(u2: &Arc, u1: &Arc) -> Result<(Arc, Arc), Error> {
    if !crosses(u1, u2) {
        return Err(Error::NotCrossing(format!("{u2} and {u1}")));
    }
    let (a, b) = u2.endpoints();
    let (c, d) = u1.endpoints();
    let mut found = Vec::with_capacity(2);
    for e in [a, b] {
        for f in [c, d] {
            let m = Arc::between(e, f)?;
            if fan_compare(e, u2, &m)? == Ordering::Less && fan_compare(f, &m, u1)? == Ordering::Less {
                found.push(m);
            }
        }
    }
    match found.as_slice() {
        [m1, m2] => Ok((*m1, *m2)),
        _ => Err(Error::Internal(format!(
            "expected two middle terms from {u2} to {u1}, found {}",
            found.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_arcs(lo: i64, hi: i64) -> Vec<Arc> {
        let mut out = Vec::new();
        for a in lo..=hi {
            for b in lo..=hi {
                if b - a >= 2 {
                    out.push(Arc::Upper(a, b));
                    out.push(Arc::Lower(a, b));
                }
                out.push(Arc::Conn(a, b));
            }
        }
        out
    }

    #[test]
    fn tau_examples() {
        assert_eq!(Arc::Conn(1, -5).tau(1), Arc::Conn(2, -4));
        assert_eq!(Arc::Upper(0, 2).tau(0), Arc::Upper(0, 2));
        assert_eq!(Arc::Lower(-2, 2).tau(-3), Arc::Lower(-5, -1));
        for u in all_arcs(-3, 3) {
            assert_eq!(u.tau(4).tau(-4), u);
        }
    }

    #[test]
    fn crossing_examples() {
        assert!(crosses(&Arc::Upper(-3, 2), &Arc::Conn(0, 5)));
        assert!(!crosses(&Arc::Upper(0, 2), &Arc::Upper(2, 4)));
        assert!(crosses(&Arc::Conn(1, 1), &Arc::Conn(2, 2)));
        assert!(!crosses(&Arc::Upper(0, 3), &Arc::Lower(0, 3)));
        assert!(!crosses(&Arc::UpperEdge(0), &Arc::Conn(0, 0)));
    }

    #[test]
    fn crossing_symmetric_and_tau_equivariant() {
        let arcs = all_arcs(-6, 6);
        for u in &arcs {
            assert!(!crosses(u, u));
            assert!(crosses(u, &u.tau(1)), "{u} vs its shift");
            for v in &arcs {
                let c = crosses(u, v);
                assert_eq!(c, crosses(v, u));
                if c {
                    let (a, b) = u.endpoints();
                    assert!(!v.has_endpoint(a) && !v.has_endpoint(b));
                }
            }
        }
        let small = all_arcs(-4, 4);
        for k in -3..=3 {
            for u in &small {
                for v in &small {
                    assert_eq!(crosses(u, v), crosses(&u.tau(k), &v.tau(k)));
                }
            }
        }
    }

    #[test]
    fn fan_compare_examples() {
        let l0 = MarkedPoint::upper(0);
        assert_eq!(fan_compare(l0, &Arc::Conn(0, 3), &Arc::Conn(0, 7)).unwrap(), Ordering::Greater);
        assert_eq!(fan_compare(l0, &Arc::Upper(0, 2), &Arc::Conn(0, 3)).unwrap(), Ordering::Greater);
        assert_eq!(fan_compare(l0, &Arc::Upper(-2, 0), &Arc::Upper(-2, 0)).unwrap(), Ordering::Equal);
        assert!(fan_compare(MarkedPoint::upper(5), &Arc::Upper(-2, 0), &Arc::Upper(-2, 0)).is_err());
    }

    #[test]
    fn fan_chain_order_at_upper_and_lower_points() {
        // f < e on the far side, d < c on the opposite boundary, b < a on the near side.
        let p = MarkedPoint::upper(0);
        let chain = [Arc::Upper(0, 2), Arc::Upper(0, 5), Arc::Conn(0, -3), Arc::Conn(0, 3), Arc::Upper(-5, 0), Arc::Upper(-2, 0)];
        for w in chain.windows(2) {
            assert_eq!(fan_compare(p, &w[0], &w[1]).unwrap(), Ordering::Greater, "{} vs {}", w[0], w[1]);
        }
        let p = MarkedPoint::lower(0);
        let chain = [Arc::Lower(0, 2), Arc::Lower(0, 5), Arc::Conn(-3, 0), Arc::Conn(3, 0), Arc::Lower(-5, 0), Arc::Lower(-2, 0)];
        for w in chain.windows(2) {
            assert_eq!(fan_compare(p, &w[0], &w[1]).unwrap(), Ordering::Greater, "{} vs {}", w[0], w[1]);
        }
    }

    #[test]
    fn fan_order_matches_shifted_crossing() {
        let arcs = all_arcs(-5, 5);
        for u1 in &arcs {
            for u2 in &arcs {
                let (a, b) = u1.endpoints();
                for p in [a, b] {
                    if !u2.has_endpoint(p) {
                        continue;
                    }
                    let ge = fan_compare(p, u2, u1).unwrap() != Ordering::Less;
                    assert_eq!(ge, crosses(u2, &u1.tau(1)) || u1 == u2, "{u2} >= {u1} at {p}");
                }
            }
        }
    }

    #[test]
    fn trichotomy_for_shifted_crossers() {
        let arcs = all_arcs(-4, 4);
        for u1 in &arcs {
            for u2 in &arcs {
                if !crosses(&u2.tau(1), u1) {
                    continue;
                }
                let (a, b) = u1.endpoints();
                let fan_ge = [a, b]
                    .into_iter()
                    .any(|p| u2.has_endpoint(p) && fan_compare(p, u1, u2).unwrap() != Ordering::Less);
                assert!(fan_ge ^ crosses(u1, u2), "{u1} {u2}");
            }
        }
    }

    #[test]
    fn middle_term_examples() {
        let set = |(a, b): (Arc, Arc)| {
            let mut v = vec![a, b];
            v.sort();
            v
        };
        let mut want = vec![Arc::Upper(-3, 4), Arc::Upper(-1, 2)];
        want.sort();
        assert_eq!(set(middle_terms(&Arc::Upper(-1, 4), &Arc::Upper(-3, 2)).unwrap()), want);
        let mut want = vec![Arc::Conn(1, 2), Arc::Conn(2, 1)];
        want.sort();
        assert_eq!(set(middle_terms(&Arc::Conn(2, 2), &Arc::Conn(1, 1)).unwrap()), want);
        let mut want = vec![Arc::Upper(0, 3), Arc::UpperEdge(1)];
        want.sort();
        assert_eq!(set(middle_terms(&Arc::Upper(1, 3), &Arc::Upper(0, 2)).unwrap()), want);
        assert!(middle_terms(&Arc::Upper(0, 2), &Arc::Upper(2, 4)).is_err());
    }

    #[test]
    fn middle_terms_are_opposite_sides() {
        let arcs = all_arcs(-4, 4);
        for u1 in &arcs {
            for u2 in &arcs {
                if !crosses(u1, u2) {
                    continue;
                }
                let (m1, m2) = middle_terms(u2, u1).unwrap();
                for m in [m1, m2] {
                    let (a, b) = m.endpoints();
                    assert!(u1.has_endpoint(a) ^ u1.has_endpoint(b));
                    assert!(u2.has_endpoint(a) ^ u2.has_endpoint(b));
                }
                let (a, b) = m1.endpoints();
                assert!(!m2.has_endpoint(a) && !m2.has_endpoint(b));
            }
        }
    }

    #[test]
    fn corner_examples() {
        let c = corners(&Arc::Upper(-3, 2), &Arc::Conn(0, 5)).unwrap();
        assert_eq!(c, vec![Arc::Upper(-3, 0), Arc::Conn(-3, 5), Arc::Upper(0, 2), Arc::Conn(2, 5)]);
        let c = corners(&Arc::Conn(1, 1), &Arc::Conn(2, 2)).unwrap();
        assert_eq!(c, vec![Arc::UpperEdge(1), Arc::Conn(1, 2), Arc::Conn(2, 1), Arc::LowerEdge(1)]);
        let mut c = corners(&Arc::Upper(0, 4), &Arc::Upper(2, 6)).unwrap();
        c.sort();
        assert_eq!(c, vec![Arc::Upper(0, 2), Arc::Upper(0, 6), Arc::Upper(2, 4), Arc::Upper(4, 6)]);
        assert!(corners(&Arc::Upper(0, 2), &Arc::Lower(0, 2)).is_err());
    }

    #[test]
    fn literals_round_trip() {
        for u in all_arcs(-3, 3) {
            assert_eq!(u.to_string().parse::<Arc>().unwrap(), u);
        }
        assert!("U(0,1)".parse::<Arc>().is_err());
        assert!("U(3,3)".parse::<Arc>().is_err());
        assert_eq!("U(2,-1)".parse::<Arc>().unwrap(), Arc::Upper(-1, 2));
        assert_eq!("L(1)".parse::<MarkedPoint>().unwrap(), MarkedPoint::upper(1));
        assert_eq!("R(-5)".parse::<MarkedPoint>().unwrap(), MarkedPoint::lower(-5));
    }
}
