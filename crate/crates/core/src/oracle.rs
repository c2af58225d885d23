//! Brute-force checks on finite windows.
//!
//! Nothing here goes through the relation images of the zone engine: crossing
//! is decided on explicit curves with exact rational arithmetic, and nc
//! membership reads the stored zone bounds directly.

use std::collections::BTreeSet;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::arcset::{ArcSet, Frame};
use crate::error::Error;
use crate::strip::{middle_terms, Arc, Boundary, Kind, MarkedPoint};

type Q = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Window, Error> {
        if hi - lo < 2 {
            return Err(Error::InvalidParams(format!("window [{lo},{hi}] has no same-boundary arcs")));
        }
        Ok(Window { lo, hi })
    }
}

/// Upper, then lower, then connecting arcs with all indices in the window.
pub fn window_arcs(w: Window) -> Vec<Arc> {
    let mut out = Vec::new();
    for a in w.lo..=w.hi {
        for b in (a + 2)..=w.hi {
            out.push(Arc::Upper(a, b));
        }
    }
    for a in w.lo..=w.hi {
        for b in (a + 2)..=w.hi {
            out.push(Arc::Lower(a, b));
        }
    }
    for a in w.lo..=w.hi {
        for b in w.lo..=w.hi {
            out.push(Arc::Conn(a, b));
        }
    }
    out
}

/// Up to `max` distinct window arcs chosen uniformly.
pub fn random_subset(rng: &mut impl Rng, w: Window, max: usize) -> Vec<Arc> {
    let n = rng.gen_range(0..=max);
    let mut arcs = window_arcs(w);
    arcs.shuffle(rng);
    arcs.truncate(n);
    arcs.sort();
    arcs
}

fn q(n: i64) -> Q {
    Q::from_integer(n as i128)
}

/// Fixed representative: connecting arcs are segments from `(i,1)` to `(-j,0)`,
/// same-boundary arcs are tents whose depth grows with their length.
fn curve(u: &Arc) -> Result<Vec<(Q, Q)>, Error> {
    let nudge = Q::new(1, 1009);
    let depth = |i: i64, j: i64| Q::new(1, 2) - Q::new(1, (2 + j - i) as i128);
    match *u {
        Arc::Conn(i, j) => Ok(vec![(q(i), q(1)), (q(-j), q(0))]),
        Arc::Upper(i, j) => {
            let apex = (Q::new((i + j) as i128, 2) + nudge, q(1) - depth(i, j));
            Ok(vec![(q(i), q(1)), apex, (q(j), q(1))])
        }
        Arc::Lower(i, j) => {
            let apex = (Q::new(-(i + j) as i128, 2) - nudge, depth(i, j));
            Ok(vec![(q(-j), q(0)), apex, (q(-i), q(0))])
        }
        _ => Err(Error::EdgeNotArc(u.to_string())),
    }
}

fn orient(a: (Q, Q), b: (Q, Q), c: (Q, Q)) -> Q {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(a: (Q, Q), b: (Q, Q), c: (Q, Q)) -> bool {
    c.0 >= a.0.min(b.0) && c.0 <= a.0.max(b.0) && c.1 >= a.1.min(b.1) && c.1 <= a.1.max(b.1)
}

/// Whether two segments meet in a single transversal interior point; touching is an error.
fn segments_cross(a: (Q, Q), b: (Q, Q), c: (Q, Q), d: (Q, Q)) -> Result<bool, ()> {
    let zero = q(0);
    let o = [orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b)];
    let touches = (o[0] == zero && on_segment(a, b, c))
        || (o[1] == zero && on_segment(a, b, d))
        || (o[2] == zero && on_segment(c, d, a))
        || (o[3] == zero && on_segment(c, d, b));
    if touches {
        return Err(());
    }
    Ok(o[0] * o[1] < zero && o[2] * o[3] < zero)
}

/// Crossing decided geometrically: arcs with a common endpoint never cross,
/// otherwise the representatives meet an odd number of times exactly when they cross.
pub fn geom_crossing_oracle(u: &Arc, v: &Arc) -> Result<bool, Error> {
    let cu = curve(u)?;
    let cv = curve(v)?;
    let (a, b) = u.endpoints();
    if v.has_endpoint(a) || v.has_endpoint(b) {
        return Ok(false);
    }
    let mut count = 0;
    for s in cu.windows(2) {
        for t in cv.windows(2) {
            match segments_cross(s[0], s[1], t[0], t[1]) {
                Ok(true) => count += 1,
                Ok(false) => {}
                Err(()) => return Err(Error::Degenerate(format!("representatives of {u} and {v} touch"))),
            }
        }
    }
    Ok(count % 2 == 1)
}

type Span = (Option<i64>, Option<i64>);

/// Index pairs `(a, b)` with `a` and `b` in the given spans.
#[derive(Debug, Clone, Copy)]
struct IndexBox {
    a: Span,
    b: Span,
}

fn below(v: i64) -> Span {
    (None, Some(v - 1))
}

fn above(v: i64) -> Span {
    (Some(v + 1), None)
}

fn strictly_between(lo: i64, hi: i64) -> Span {
    (Some(lo + 1), Some(hi - 1))
}

/// Arcs of each kind crossing `v`, written out from the index rules.
fn crossing_boxes(v: &Arc) -> Vec<(Kind, IndexBox)> {
    let any = (None, None);
    match *v {
        Arc::Upper(i, j) => vec![
            (Kind::Upper, IndexBox { a: below(i), b: strictly_between(i, j) }),
            (Kind::Upper, IndexBox { a: strictly_between(i, j), b: above(j) }),
            (Kind::Conn, IndexBox { a: strictly_between(i, j), b: any }),
        ],
        Arc::Lower(i, j) => vec![
            (Kind::Lower, IndexBox { a: below(i), b: strictly_between(i, j) }),
            (Kind::Lower, IndexBox { a: strictly_between(i, j), b: above(j) }),
            (Kind::Conn, IndexBox { a: any, b: strictly_between(i, j) }),
        ],
        Arc::Conn(p, q) => vec![
            (Kind::Upper, IndexBox { a: below(p), b: above(p) }),
            (Kind::Lower, IndexBox { a: below(q), b: above(q) }),
            (Kind::Conn, IndexBox { a: below(p), b: below(q) }),
            (Kind::Conn, IndexBox { a: above(p), b: above(q) }),
        ],
        _ => Vec::new(),
    }
}

fn neg(s: Span) -> Span {
    (s.1.map(|v| -v), s.0.map(|v| -v))
}

/// The box in stored coordinates of `frame`.
fn stored_box(frame: Frame, kind: Kind, bx: IndexBox) -> (Span, Span) {
    match (frame, kind) {
        (Frame::Mirrored, Kind::Lower) => (neg(bx.b), neg(bx.a)),
        (Frame::Mirrored, Kind::Conn) => (bx.a, neg(bx.b)),
        _ => (bx.a, bx.b),
    }
}

fn meet(s: Span, lo: Option<i64>, hi: Option<i64>) -> Span {
    let lo = match (s.0, lo) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (a, b) => a.or(b),
    };
    let hi = match (s.1, hi) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    (lo, hi)
}

fn nonempty(s: Span) -> bool {
    match s {
        (Some(a), Some(b)) => a <= b,
        _ => true,
    }
}

/// Membership of `v` in nc(t), checked arc by arc against the stored bounds.
pub fn member_nc_oracle(t: &ArcSet, v: &Arc) -> bool {
    for (kind, bx) in crossing_boxes(v) {
        let (xs, ys) = stored_box(t.frame(), kind, bx);
        for z in t.region(kind).zones() {
            let Some(b) = z.bounds() else { continue };
            let x = meet(xs, b.x_min, b.x_max);
            let y = meet(ys, b.y_min, b.y_max);
            if !nonempty(x) || !nonempty(y) {
                continue;
            }
            // y - x ranges over a full integer interval on the box
            let diff = (
                match (y.0, x.1) {
                    (Some(a), Some(b)) => Some(a - b),
                    _ => None,
                },
                match (y.1, x.0) {
                    (Some(a), Some(b)) => Some(a - b),
                    _ => None,
                },
            );
            if nonempty(meet(diff, b.d_min, b.d_max)) {
                return false;
            }
        }
    }
    true
}

fn arc_or_edge(p: MarkedPoint, r: MarkedPoint) -> Option<Arc> {
    match (p.boundary, r.boundary) {
        (Boundary::Upper, Boundary::Lower) => Some(Arc::Conn(p.index, r.index)),
        (Boundary::Lower, Boundary::Upper) => Some(Arc::Conn(r.index, p.index)),
        (b, _) => {
            let (lo, hi) = (p.index.min(r.index), p.index.max(r.index));
            match (b, hi - lo) {
                (_, 0) => None,
                (Boundary::Upper, 1) => Some(Arc::UpperEdge(lo)),
                (Boundary::Lower, 1) => Some(Arc::LowerEdge(lo)),
                (Boundary::Upper, _) => Some(Arc::Upper(lo, hi)),
                (Boundary::Lower, _) => Some(Arc::Lower(lo, hi)),
            }
        }
    }
}

/// Every crossing pair in `t` has all four endpoint recombinations in `t` or as edges.
pub fn brute_is_ptolemy(t: &[Arc]) -> Result<bool, Error> {
    let set: BTreeSet<Arc> = t.iter().copied().collect();
    for u in &set {
        for v in &set {
            if u >= v || !geom_crossing_oracle(u, v)? {
                continue;
            }
            let (a, b) = u.endpoints();
            let (c, d) = v.endpoints();
            for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
                match arc_or_edge(x, y) {
                    Some(w) if w.is_edge() || set.contains(&w) => {}
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

/// The definition of a tau-basis evaluated on a finite set, edges counting as
/// members for the middle terms.
pub fn brute_tau_basis(sigma: &[Arc], omega: &[Arc]) -> Result<bool, Error> {
    let set: BTreeSet<Arc> = omega.iter().copied().collect();
    let inside = |m: &Arc| m.is_edge() || set.contains(m);
    for u1 in &set {
        let mut witnessed = false;
        for u2 in sigma {
            if !geom_crossing_oracle(&u2.tau(1), u1)? {
                continue;
            }
            if !geom_crossing_oracle(u2, u1)? {
                witnessed = true;
                break;
            }
            let (m1, m2) = middle_terms(u2, u1)?;
            if inside(&m1) && inside(&m2) {
                witnessed = true;
                break;
            }
        }
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteReport {
    pub is_ptolemy: bool,
    pub is_noncrossing: bool,
    /// Window arcs crossing no member.
    pub nc_window: Vec<Arc>,
    /// Some connecting arc lies in the set or in `nc_window`.
    pub has_conn: bool,
    /// Noncrossing, and every other window arc crosses a member.
    pub maximal_in_window: bool,
}

pub fn brute_classify(t: &[Arc], w: Window) -> Result<BruteReport, Error> {
    let set: BTreeSet<Arc> = t.iter().copied().collect();
    let mut nc_window = Vec::new();
    for v in window_arcs(w) {
        let mut free = true;
        for u in &set {
            if geom_crossing_oracle(u, &v)? {
                free = false;
                break;
            }
        }
        if free {
            nc_window.push(v);
        }
    }
    let mut is_noncrossing = true;
    for u in &set {
        for v in &set {
            if u < v && geom_crossing_oracle(u, v)? {
                is_noncrossing = false;
            }
        }
    }
    let is_conn = |a: &Arc| matches!(a, Arc::Conn(..));
    let has_conn = set.iter().any(is_conn) || nc_window.iter().any(is_conn);
    let maximal_in_window = is_noncrossing && nc_window.iter().all(|v| set.contains(v));
    Ok(BruteReport { is_ptolemy: brute_is_ptolemy(t)?, is_noncrossing, nc_window, has_conn, maximal_in_window })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_counts() {
        assert_eq!(window_arcs(Window::new(0, 3).unwrap()).len(), 22);
        let w = window_arcs(Window::new(0, 2).unwrap());
        assert_eq!(w.iter().filter(|a| matches!(a, Arc::Conn(..))).count(), 9);
        assert_eq!(w.len(), 11);
        assert!(Window::new(0, 1).is_err());
    }

    #[test]
    fn geometric_examples() {
        assert!(geom_crossing_oracle(&Arc::Conn(1, 1), &Arc::Conn(2, 2)).unwrap());
        assert!(!geom_crossing_oracle(&Arc::Upper(0, 4), &Arc::Upper(1, 3)).unwrap());
        assert!(!geom_crossing_oracle(&Arc::Upper(0, 3), &Arc::Lower(0, 3)).unwrap());
        assert!(geom_crossing_oracle(&Arc::Upper(0, 3), &Arc::Conn(1, -4)).unwrap());
        assert!(geom_crossing_oracle(&Arc::Lower(0, 3), &Arc::Conn(9, 1)).unwrap());
        assert!(geom_crossing_oracle(&Arc::UpperEdge(0), &Arc::Conn(1, 1)).is_err());
    }

    #[test]
    fn nc_membership_examples() {
        let t = ArcSet::from_arcs(&[Arc::Conn(0, 0)]);
        assert!(!member_nc_oracle(&t, &Arc::Conn(1, 1)));
        assert!(member_nc_oracle(&t, &Arc::Upper(0, 2)));
        assert!(member_nc_oracle(&ArcSet::empty(), &Arc::Conn(3, -3)));
    }

    #[test]
    fn brute_examples() {
        let t1 = [Arc::Upper(-2, 1), Arc::Conn(-2, 2), Arc::Conn(-2, -2), Arc::Conn(1, 2), Arc::Conn(1, -2), Arc::Lower(-2, 2)];
        assert!(brute_is_ptolemy(&t1).unwrap());
        assert!(!brute_is_ptolemy(&[Arc::Upper(0, 4), Arc::Upper(2, 6)]).unwrap());
        assert!(brute_tau_basis(&t1, &t1).unwrap());
        assert!(!brute_tau_basis(&[], &t1).unwrap());
        let r = brute_classify(&t1, Window::new(-3, 3).unwrap()).unwrap();
        assert!(r.is_ptolemy && !r.is_noncrossing && r.has_conn && !r.maximal_in_window);
    }
}
