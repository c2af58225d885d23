//! Extended integers and finite unions of integer intervals.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtBound {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtBound {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtBound::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        !matches!(self, ExtBound::Finite(_))
    }

    pub fn neg(self) -> ExtBound {
        match self {
            ExtBound::NegInf => ExtBound::PosInf,
            ExtBound::PosInf => ExtBound::NegInf,
            ExtBound::Finite(v) => ExtBound::Finite(-v),
        }
    }

    pub fn add(self, k: i64) -> ExtBound {
        match self {
            ExtBound::Finite(v) => ExtBound::Finite(v + k),
            other => other,
        }
    }
}

impl serde::Serialize for ExtBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtBound::Finite(v) => s.serialize_i64(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl fmt::Display for ExtBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtBound::NegInf => write!(f, "-inf"),
            ExtBound::PosInf => write!(f, "+inf"),
            ExtBound::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// A union of closed integer intervals, kept sorted, disjoint and non-adjacent.
/// `None` on the left means unbounded below, `None` on the right unbounded above.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    parts: Vec<(Option<i64>, Option<i64>)>,
}

fn lo_key(v: Option<i64>) -> ExtBound {
    v.map_or(ExtBound::NegInf, ExtBound::Finite)
}

fn hi_key(v: Option<i64>) -> ExtBound {
    v.map_or(ExtBound::PosInf, ExtBound::Finite)
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { parts: Vec::new() }
    }

    pub fn all() -> Self {
        IntervalSet { parts: vec![(None, None)] }
    }

    pub fn interval(lo: Option<i64>, hi: Option<i64>) -> Self {
        let mut s = IntervalSet::empty();
        s.push(lo, hi);
        s.normalize();
        s
    }

    pub fn point(v: i64) -> Self {
        IntervalSet::interval(Some(v), Some(v))
    }

    pub fn from_points(points: impl IntoIterator<Item = i64>) -> Self {
        let mut s = IntervalSet::empty();
        for v in points {
            s.push(Some(v), Some(v));
        }
        s.normalize();
        s
    }

    fn push(&mut self, lo: Option<i64>, hi: Option<i64>) {
        if lo_key(lo) <= hi_key(hi) {
            self.parts.push((lo, hi));
        }
    }

    fn normalize(&mut self) {
        self.parts.sort_by_key(|&(lo, hi)| (lo_key(lo), hi_key(hi)));
        let mut out: Vec<(Option<i64>, Option<i64>)> = Vec::with_capacity(self.parts.len());
        for &(lo, hi) in &self.parts {
            if let Some(last) = out.last_mut() {
                // merge when overlapping or adjacent
                if hi_key(last.1).add(1) >= lo_key(lo) {
                    if hi_key(hi) > hi_key(last.1) {
                        last.1 = hi;
                    }
                    continue;
                }
            }
            out.push((lo, hi));
        }
        self.parts = out;
    }

    pub fn parts(&self) -> &[(Option<i64>, Option<i64>)] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.parts
            .iter()
            .any(|&(lo, hi)| lo.map_or(true, |l| l <= v) && hi.map_or(true, |h| v <= h))
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut s = IntervalSet { parts: self.parts.iter().chain(&other.parts).copied().collect() };
        s.normalize();
        s
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut s = IntervalSet::empty();
        for &(a, b) in &self.parts {
            for &(c, d) in &other.parts {
                let lo = if lo_key(a) >= lo_key(c) { a } else { c };
                let hi = if hi_key(b) <= hi_key(d) { b } else { d };
                s.push(lo, hi);
            }
        }
        s.normalize();
        s
    }

    pub fn complement(&self) -> IntervalSet {
        let mut s = IntervalSet::empty();
        let mut cursor: Option<Option<i64>> = Some(None); // next uncovered lower end
        for &(lo, hi) in &self.parts {
            if let (Some(start), Some(l)) = (cursor, lo) {
                s.push(start, Some(l - 1));
            }
            cursor = hi.map(|h| Some(h + 1));
        }
        if let Some(start) = cursor {
            s.push(start, None);
        }
        s.normalize();
        s
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        self.intersect(&other.complement())
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn negate(&self) -> IntervalSet {
        let mut s = IntervalSet { parts: self.parts.iter().map(|&(lo, hi)| (hi.map(|v| -v), lo.map(|v| -v))).collect() };
        s.normalize();
        s
    }

    pub fn shift(&self, k: i64) -> IntervalSet {
        IntervalSet { parts: self.parts.iter().map(|&(lo, hi)| (lo.map(|v| v + k), hi.map(|v| v + k))).collect() }
    }

    pub fn sup(&self) -> Option<ExtBound> {
        self.parts.last().map(|&(_, hi)| hi_key(hi))
    }

    pub fn inf(&self) -> Option<ExtBound> {
        self.parts.first().map(|&(lo, _)| lo_key(lo))
    }

    pub fn is_bounded(&self) -> bool {
        self.parts.iter().all(|&(lo, hi)| lo.is_some() && hi.is_some())
    }

    /// All members, or `None` when the set is unbounded.
    pub fn points(&self) -> Option<Vec<i64>> {
        if !self.is_bounded() {
            return None;
        }
        Some(self.parts.iter().flat_map(|&(lo, hi)| lo.unwrap()..=hi.unwrap()).collect())
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "{{}}");
        }
        let shown: Vec<String> = self
            .parts
            .iter()
            .map(|&(lo, hi)| format!("[{}, {}]", lo_key(lo), hi_key(hi)))
            .collect();
        write!(f, "{}", shown.join(" u "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set_strategy() -> impl Strategy<Value = IntervalSet> {
        prop::collection::vec((prop::option::weighted(0.8, -8i64..8), prop::option::weighted(0.8, -8i64..8)), 0..4)
            .prop_map(|v| {
                let mut s = IntervalSet::empty();
                for (lo, hi) in v {
                    s = s.union(&IntervalSet::interval(lo, hi));
                }
                s
            })
    }

    #[test]
    fn merges_adjacent_pieces() {
        let s = IntervalSet::from_points([1, 2, 3, 5]);
        assert_eq!(s.parts(), &[(Some(1), Some(3)), (Some(5), Some(5))]);
        assert_eq!(s.complement().parts(), &[(None, Some(0)), (Some(4), Some(4)), (Some(6), None)]);
        assert_eq!(IntervalSet::all().complement(), IntervalSet::empty());
    }

    proptest! {
        #[test]
        fn ops_agree_pointwise(a in set_strategy(), b in set_strategy()) {
            let u = a.union(&b);
            let i = a.intersect(&b);
            let c = a.complement();
            let n = a.negate();
            for v in -12i64..12 {
                prop_assert_eq!(u.contains(v), a.contains(v) || b.contains(v));
                prop_assert_eq!(i.contains(v), a.contains(v) && b.contains(v));
                prop_assert_eq!(c.contains(v), !a.contains(v));
                prop_assert_eq!(n.contains(v), a.contains(-v));
            }
            prop_assert_eq!(a.is_subset(&b), a.intersect(&b) == a);
            prop_assert_eq!(c.complement(), a);
        }
    }
}
