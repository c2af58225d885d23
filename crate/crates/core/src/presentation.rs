//! Reading and writing presentations: a JSON document or a line-oriented DSL.
//!
//! DSL lines, `#` starting a comment:
//!
//! ```text
//! U(-2,1)                      arc literal (also L(a,b), C(a,b))
//! L>=1   R<=0                  half-line families, bounds may be +inf / -inf
//! fan C from=L(1) q<=-5        arcs [l_1, r_q] with q <= -5 (U / L / C pick the far boundary)
//! quadrant a<=1 b>=0           connecting arcs C(a,b)
//! zone conn x_min=1 d_max=3    raw zone; add `mirrored` for mirrored coordinates, kind may be `ng`
//! zigzag C(0,0)                the zigzag triangulation through an arc
//! ```

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arcset::{ArcSet, Frame};
use crate::error::Error;
use crate::families::{fan, l_ge, l_le, quadrant, r_ge, r_le, Ray};
use crate::interval::ExtBound;
use crate::ng::{fan_triangulation, NgArcSet};
use crate::region::Region;
use crate::strip::{Arc, Boundary, Kind, MarkedPoint};
use crate::zone::{Bounds, Zone};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Upper,
    Lower,
    Conn,
    Ng,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Family {
    pub kind: FamilyKind,
    pub zone: Bounds,
}

/// An integer or one of `"+inf"`, `"-inf"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExtParam {
    Finite(i64),
    Named(String),
}

impl ExtParam {
    fn resolve(&self) -> Result<ExtBound, Error> {
        match self {
            ExtParam::Finite(v) => Ok(ExtBound::Finite(*v)),
            ExtParam::Named(s) => parse_ext(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "lowercase")]
pub enum RayParam {
    Le(i64),
    Ge(i64),
}

impl From<&RayParam> for Ray {
    fn from(r: &RayParam) -> Ray {
        match *r {
            RayParam::Le(v) => Ray::Le(v),
            RayParam::Ge(v) => Ray::Ge(v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", content = "params", deny_unknown_fields)]
pub enum Sugar {
    #[serde(rename = "L_ge")]
    LGe(ExtParam),
    #[serde(rename = "L_le")]
    LLe(ExtParam),
    #[serde(rename = "R_ge")]
    RGe(ExtParam),
    #[serde(rename = "R_le")]
    RLe(ExtParam),
    #[serde(rename = "fan")]
    Fan { from: String, to: Kind, ray: RayParam },
    #[serde(rename = "quadrant")]
    Quadrant { a: RayParam, b: RayParam },
    #[serde(rename = "zigzag")]
    Zigzag(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub arcs: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub families: Vec<Family>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sugar: Vec<Sugar>,
    /// Coordinates of `families`; index coordinates when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<Frame>,
}

/// A parsed presentation: a set of strip arcs and possibly a set of infinity-gon arcs.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub set: ArcSet,
    pub ng: NgArcSet,
}

fn parse_ext(s: &str) -> Result<ExtBound, Error> {
    match s.trim() {
        "+inf" | "inf" => Ok(ExtBound::PosInf),
        "-inf" => Ok(ExtBound::NegInf),
        t => t.parse().map(ExtBound::Finite).map_err(|_| Error::Parse(format!("bad bound `{t}`"))),
    }
}

fn fan_set(from: MarkedPoint, to: Kind, ray: Ray) -> Result<ArcSet, Error> {
    let target = match to {
        Kind::Upper => Boundary::Upper,
        Kind::Lower => Boundary::Lower,
        Kind::Conn => from.boundary.other(),
    };
    if to == Kind::Conn && target == from.boundary {
        return Err(Error::Parse("connecting fan must change boundary".into()));
    }
    if to != Kind::Conn && target != from.boundary {
        return Err(Error::Parse(format!("a fan of {to:?} arcs cannot start at {from}")));
    }
    Ok(fan(from, target, ray))
}

fn sugar_set(s: &Sugar) -> Result<ArcSet, Error> {
    Ok(match s {
        Sugar::LGe(p) => l_ge(p.resolve()?),
        Sugar::LLe(p) => l_le(p.resolve()?),
        Sugar::RGe(p) => r_ge(p.resolve()?),
        Sugar::RLe(p) => r_le(p.resolve()?),
        Sugar::Fan { from, to, ray } => fan_set(from.parse()?, *to, ray.into())?,
        Sugar::Quadrant { a, b } => quadrant(a.into(), b.into()),
        Sugar::Zigzag(u) => fan_triangulation(&u.parse()?)?,
    })
}

impl Document {
    pub fn build(&self) -> Result<Presentation, Error> {
        let mut set = ArcSet::empty();
        for a in &self.arcs {
            set.insert(&Arc::from_str(a)?);
        }
        let mut fams = ArcSet::empty_in(self.frame.unwrap_or_default());
        let mut ng = Region::empty();
        for f in &self.families {
            let z = Zone::new(f.zone);
            match f.kind {
                FamilyKind::Upper => fams.add_zone(Kind::Upper, z),
                FamilyKind::Lower => fams.add_zone(Kind::Lower, z),
                FamilyKind::Conn => fams.add_zone(Kind::Conn, z),
                FamilyKind::Ng => ng.push(z),
            }
        }
        set = set.union(&fams)?;
        for s in &self.sugar {
            set = set.union(&sugar_set(s)?)?;
        }
        Ok(Presentation { set, ng: NgArcSet::new(ng) })
    }

    /// A document presenting `t`: its arcs when finite, its zones otherwise.
    pub fn from_set(t: &ArcSet) -> Document {
        if let Some(arcs) = t.arcs() {
            return Document { arcs: arcs.iter().map(ToString::to_string).collect(), ..Default::default() };
        }
        let mut families = Vec::new();
        for (kind, fk) in [(Kind::Upper, FamilyKind::Upper), (Kind::Lower, FamilyKind::Lower), (Kind::Conn, FamilyKind::Conn)] {
            for z in t.region(kind).zones() {
                if let Some(b) = z.bounds() {
                    families.push(Family { kind: fk, zone: b });
                }
            }
        }
        Document { families, frame: Some(t.frame()), ..Default::default() }
    }
}

fn line_err(line: usize, col: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}, column {col}: {msg}"))
}

/// Splits `name<=v` / `name>=v` into the ray.
fn parse_ray(tok: &str) -> Option<(&str, Ray)> {
    if let Some((name, v)) = tok.split_once("<=") {
        return v.trim().parse().ok().map(|v| (name.trim(), Ray::Le(v)));
    }
    if let Some((name, v)) = tok.split_once(">=") {
        return v.trim().parse().ok().map(|v| (name.trim(), Ray::Ge(v)));
    }
    None
}

fn dsl_line(text: &str, doc: &mut Document, extra: &mut Vec<ArcSet>) -> Result<(), (usize, String)> {
    let words: Vec<(usize, &str)> = text
        .split_whitespace()
        .map(|w| (w.as_ptr() as usize - text.as_ptr() as usize, w))
        .collect();
    let (head_col, head) = words[0];
    let msg = |col: usize, m: String| (col, m);
    match head {
        "fan" => {
            let [_, (kc, kind), (fc, from), (rc, ray)] = words[..] else {
                return Err(msg(head_col, "expected `fan KIND from=POINT name<=v`".into()));
            };
            let to = match kind {
                "U" => Kind::Upper,
                "L" => Kind::Lower,
                "C" => Kind::Conn,
                _ => return Err(msg(kc, format!("unknown fan kind `{kind}`"))),
            };
            let from = from
                .strip_prefix("from=")
                .ok_or_else(|| msg(fc, "expected `from=POINT`".into()))?
                .parse::<MarkedPoint>()
                .map_err(|e| msg(fc + 5, e.to_string()))?;
            let (_, ray) = parse_ray(ray).ok_or_else(|| msg(rc, format!("bad bound `{ray}`")))?;
            extra.push(fan_set(from, to, ray).map_err(|e| msg(kc, e.to_string()))?);
        }
        "quadrant" => {
            let [_, (ac, a), (bc, b)] = words[..] else {
                return Err(msg(head_col, "expected `quadrant a<=p b>=q`".into()));
            };
            let (_, ra) = parse_ray(a).ok_or_else(|| msg(ac, format!("bad bound `{a}`")))?;
            let (_, rb) = parse_ray(b).ok_or_else(|| msg(bc, format!("bad bound `{b}`")))?;
            extra.push(quadrant(ra, rb));
        }
        "zone" => {
            let Some(&(kc, kind)) = words.get(1) else {
                return Err(msg(head_col, "expected `zone KIND key=value ...`".into()));
            };
            let kind = match kind {
                "upper" => FamilyKind::Upper,
                "lower" => FamilyKind::Lower,
                "conn" => FamilyKind::Conn,
                "ng" => FamilyKind::Ng,
                _ => return Err(msg(kc, format!("unknown zone kind `{kind}`"))),
            };
            let mut b = Bounds::default();
            let mut frame = Frame::Index;
            for &(c, w) in &words[2..] {
                if w == "mirrored" {
                    frame = Frame::Mirrored;
                    continue;
                }
                let (key, v) = w.split_once('=').ok_or_else(|| msg(c, format!("expected key=value, got `{w}`")))?;
                let v: i64 = v.parse().map_err(|_| msg(c + key.len() + 1, format!("bad integer `{v}`")))?;
                let slot = match key {
                    "x_min" => &mut b.x_min,
                    "x_max" => &mut b.x_max,
                    "y_min" => &mut b.y_min,
                    "y_max" => &mut b.y_max,
                    "d_min" => &mut b.d_min,
                    "d_max" => &mut b.d_max,
                    _ => return Err(msg(c, format!("unknown bound `{key}`"))),
                };
                *slot = Some(v);
            }
            match (kind, frame) {
                (FamilyKind::Ng, Frame::Mirrored) => return Err(msg(kc, "ng zones have no mirrored form".into())),
                (_, Frame::Index) => doc.families.push(Family { kind, zone: b }),
                (_, Frame::Mirrored) => {
                    let k = match kind {
                        FamilyKind::Upper => Kind::Upper,
                        FamilyKind::Lower => Kind::Lower,
                        _ => Kind::Conn,
                    };
                    let mut t = ArcSet::empty_in(Frame::Mirrored);
                    t.add_zone(k, Zone::new(b));
                    extra.push(t);
                }
            }
        }
        "zigzag" => {
            let rest = text[head_col + head.len()..].trim();
            let u: Arc = rest.parse().map_err(|e: Error| msg(head_col + head.len() + 1, e.to_string()))?;
            extra.push(fan_triangulation(&u).map_err(|e| msg(head_col, e.to_string()))?);
        }
        _ => {
            let compact: String = text.split_whitespace().collect();
            for (op, ge) in [(">=", true), ("<=", false)] {
                if let Some((side, v)) = compact.split_once(op) {
                    let p = parse_ext(v).map_err(|e| msg(head_col, e.to_string()))?;
                    let set = match (side, ge) {
                        ("L", true) => l_ge(p),
                        ("L", false) => l_le(p),
                        ("R", true) => r_ge(p),
                        ("R", false) => r_le(p),
                        _ => return Err(msg(head_col, format!("unknown half-line `{side}`"))),
                    };
                    extra.push(set);
                    return Ok(());
                }
            }
            let arc: Arc = compact.parse().map_err(|e: Error| msg(head_col, e.to_string()))?;
            doc.arcs.push(arc.to_string());
        }
    }
    Ok(())
}

fn parse_dsl(text: &str) -> Result<Presentation, Error> {
    let mut doc = Document::default();
    let mut extra = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        dsl_line(line, &mut doc, &mut extra).map_err(|(col, m)| line_err(i + 1, col + 1, m))?;
    }
    let mut p = doc.build()?;
    for t in extra {
        p.set = p.set.union(&t)?;
    }
    Ok(p)
}

/// Parses either format, telling them apart by a leading `{`.
pub fn parse_document(text: &str) -> Result<Presentation, Error> {
    if text.trim_start().starts_with('{') {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.build()
    } else {
        parse_dsl(text)
    }
}

pub fn parse_presentation(text: &str) -> Result<ArcSet, Error> {
    parse_document(text).map(|p| p.set)
}

pub fn serialize_presentation(t: &ArcSet) -> String {
    serde_json::to_string_pretty(&Document::from_set(t)).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    const T1: &str = "U(-2,1)\nC(-2,2)\nC(-2,-2)\nC(1,2)\nC(1,-2)\nL(-2,2)";

    #[test]
    fn dsl_examples() {
        let t1 = parse_presentation(T1).unwrap();
        assert_eq!(t1.arcs().unwrap().len(), 6);
        let t3 = parse_presentation(&format!("{T1}\nfan C from=L(1) q<=-5  # the fan")).unwrap();
        assert!(t3.member(&Arc::Conn(1, -9)) && !t3.member(&Arc::Conn(1, -4)));
        let err = parse_presentation("U(0,1)").unwrap_err();
        assert!(err.to_string().contains("edge"), "{err}");
        let err = parse_presentation("U(0,3)\n  bogus thing").unwrap_err();
        assert!(err.to_string().contains("line 2, column 3"), "{err}");
        let t = parse_presentation("L>=1\nR >= 0").unwrap();
        assert!(t.member(&Arc::Upper(1, 3)) && t.member(&Arc::Lower(0, 2)) && !t.member(&Arc::Lower(-1, 2)));
        assert!(parse_presentation("L>=+inf").unwrap().is_empty());
        let q = parse_presentation("quadrant a<=1 b>=0").unwrap();
        assert!(q.member(&Arc::Conn(1, 0)) && !q.member(&Arc::Conn(2, 0)));
        let z = parse_presentation("zigzag C(0,0)").unwrap();
        assert!(z.member(&Arc::Conn(-1, 0)));
        let z = parse_presentation("zone conn mirrored d_min=0 d_max=1").unwrap();
        assert!(z.equals(&fan_triangulation(&Arc::Conn(0, 0)).unwrap()).unwrap());
        let p = parse_document("zone ng x_min=1 x_max=1 y_min=3").unwrap();
        assert!(p.ng.contains(1, 7) && p.set.is_empty());
    }

    #[test]
    fn json_documents() {
        let text = r#"{"arcs": ["U(-2,1)"], "families": [{"kind": "conn", "zone": {"x_min": 1, "x_max": 1, "y_max": -5}}],
            "sugar": [{"name": "R_le", "params": 0}, {"name": "fan", "params": {"from": "L(0)", "to": "upper", "ray": {"ge": 4}}}]}"#;
        let t = parse_presentation(text).unwrap();
        assert!(t.member(&Arc::Upper(-2, 1)) && t.member(&Arc::Conn(1, -6)) && t.member(&Arc::Lower(-3, 0)));
        assert!(t.member(&Arc::Upper(0, 9)) && !t.member(&Arc::Upper(0, 3)));
        assert!(parse_presentation(r#"{"arcs": [], "colour": 1}"#).is_err());
        assert!(parse_presentation(r#"{"families": [{"kind": "conn", "zone": {"z_min": 1}}]}"#).is_err());
        assert!(parse_presentation(r#"{"sugar": [{"name": "L_ge", "params": "+inf"}]}"#).unwrap().is_empty());
    }

    #[test]
    fn round_trips() {
        for text in [T1, "L>=1\nR>=0", "fan C from=L(1) q<=-5\nU(0,2)", "zigzag C(3,-2)", "quadrant a<=1 b>=0\nL<=4"] {
            let t = parse_presentation(text).unwrap();
            let back = parse_presentation(&serialize_presentation(&t)).unwrap();
            assert!(back.equals(&t).unwrap(), "{text}");
        }
    }
}
