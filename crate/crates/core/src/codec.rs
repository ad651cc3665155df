//! Reading and writing diagrams as JSON and as PD text.
//!
//! Both formats store each crossing as the tuple (a, b, c, d) of arc
//! labels counterclockwise from the incoming under-arc. Which of b, d is
//! the incoming over-arc is usually forced by the successor structure;
//! where it is not, a `signs` field disambiguates. Writers emit `signs`
//! only when required.

use crate::diagram::{ArcId, Crossing, LinkDiagram};
use crate::error::KnotError;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    crossings: Vec<[ArcId; 4]>,
    components: Vec<[ArcId; 2]>,
    #[serde(default, skip_serializing_if = "is_zero")]
    free_loops: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signs: Option<Vec<i8>>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl Serialize for LinkDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiagramJson {
            crossings: self.crossings().iter().map(|c| c.arcs).collect(),
            components: self.ranges().iter().map(|&(f, l)| [f, l]).collect(),
            free_loops: self.free_loops(),
            signs: needs_signs(self)
                .then(|| self.crossings().iter().map(|c| c.sign()).collect()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinkDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        let ranges: Vec<(ArcId, ArcId)> = raw.components.iter().map(|&[f, l]| (f, l)).collect();
        let crossings = resolve_roles(&raw.crossings, &ranges, raw.signs.as_deref())
            .map_err(D::Error::custom)?;
        LinkDiagram::new(crossings, ranges, raw.free_loops).map_err(D::Error::custom)
    }
}

pub fn from_json(s: &str) -> Result<LinkDiagram, KnotError> {
    serde_json::from_str(s).map_err(|e| KnotError::parse(e.line(), e.to_string()))
}

pub fn to_json(d: &LinkDiagram) -> String {
    serde_json::to_string(d).expect("diagram serialization cannot fail")
}

/// True when the crossing tuples plus successor structure do not pin
/// down every over-strand direction, so a serialized form must carry
/// explicit signs.
pub fn needs_signs(d: &LinkDiagram) -> bool {
    let tuples: Vec<[ArcId; 4]> = d.crossings().iter().map(|c| c.arcs).collect();
    match resolve_roles(&tuples, d.ranges(), None) {
        Ok(resolved) => resolved
            .iter()
            .zip(d.crossings())
            .any(|(r, c)| r.over_in != c.over_in),
        Err(_) => true,
    }
}

fn succ_in(ranges: &[(ArcId, ArcId)], a: ArcId) -> Option<ArcId> {
    ranges
        .iter()
        .find(|&&(f, l)| f <= a && a <= l)
        .map(|&(f, l)| if a == l { f } else { a + 1 })
}

/// Recovers each crossing's over-strand direction from the tuples.
///
/// The under-strand (positions 0 and 2) fixes one head and one tail per
/// crossing outright; for the over pair, a choice is forced locally when
/// only one of succ(b)=d, succ(d)=b holds, and the rest are settled by
/// propagating the rule that every arc is incoming at exactly one
/// position and outgoing at exactly one. Any residual ambiguity (which
/// full validation would accept either way) defaults to positive at the
/// lowest-numbered undecided crossing.
pub(crate) fn resolve_roles(
    tuples: &[[ArcId; 4]],
    ranges: &[(ArcId, ArcId)],
    signs: Option<&[i8]>,
) -> Result<Vec<Crossing>, KnotError> {
    if let Some(signs) = signs {
        if signs.len() != tuples.len() {
            return Err(KnotError::Invalid(format!(
                "{} signs given for {} crossings",
                signs.len(),
                tuples.len()
            )));
        }
        return tuples
            .iter()
            .zip(signs)
            .enumerate()
            .map(|(x, (t, &s))| {
                let over_in = if s > 0 { 3 } else { 1 };
                let (oi, oo) = (t[over_in as usize], t[(over_in as usize + 2) % 4]);
                if succ_in(ranges, oi) != Some(oo) {
                    return Err(KnotError::Invalid(format!(
                        "crossing {x}: sign {s} inconsistent with arc labels"
                    )));
                }
                Ok(Crossing::new(*t, over_in))
            })
            .collect();
    }

    let mut over_in: Vec<Option<u8>> = Vec::with_capacity(tuples.len());
    for (x, t) in tuples.iter().enumerate() {
        let c1 = succ_in(ranges, t[1]) == Some(t[3]);
        let c3 = succ_in(ranges, t[3]) == Some(t[1]);
        over_in.push(match (c1, c3) {
            (true, false) => Some(1),
            (false, true) => Some(3),
            (true, true) => None,
            (false, false) => {
                return Err(KnotError::Invalid(format!(
                    "crossing {x}: over arcs {} and {} are not consecutive either way",
                    t[1], t[3]
                )))
            }
        });
    }

    // heads[a] / tails[a]: how many resolved positions already consume
    // arc a as incoming / outgoing.
    let mut heads = std::collections::HashMap::new();
    let mut tails = std::collections::HashMap::new();
    let take = |heads: &mut std::collections::HashMap<ArcId, u32>,
                    tails: &mut std::collections::HashMap<ArcId, u32>,
                    h: ArcId,
                    t: ArcId| {
        *heads.entry(h).or_insert(0) += 1;
        *tails.entry(t).or_insert(0) += 1;
    };
    for (x, t) in tuples.iter().enumerate() {
        take(&mut heads, &mut tails, t[0], t[2]);
        if let Some(oi) = over_in[x] {
            take(&mut heads, &mut tails, t[oi as usize], t[(oi as usize + 2) % 4]);
        }
    }
    loop {
        let mut progressed = false;
        for (x, t) in tuples.iter().enumerate() {
            if over_in[x].is_some() {
                continue;
            }
            let (b, d) = (t[1], t[3]);
            let ev3 = heads.get(&b).copied().unwrap_or(0) > 0
                || tails.get(&d).copied().unwrap_or(0) > 0;
            let ev1 = heads.get(&d).copied().unwrap_or(0) > 0
                || tails.get(&b).copied().unwrap_or(0) > 0;
            let choice = match (ev1, ev3) {
                (true, true) => {
                    return Err(KnotError::AmbiguousRoles(format!(
                        "crossing {x}: arcs {b}, {d} each already used both ways"
                    )))
                }
                (true, false) => 1,
                (false, true) => 3,
                (false, false) => continue,
            };
            over_in[x] = Some(choice);
            take(&mut heads, &mut tails, t[choice as usize], t[(choice as usize + 2) % 4]);
            progressed = true;
        }
        if progressed {
            continue;
        }
        match over_in.iter().position(|o| o.is_none()) {
            Some(x) => {
                over_in[x] = Some(3);
                let t = &tuples[x];
                take(&mut heads, &mut tails, t[3], t[1]);
            }
            None => break,
        }
    }

    Ok(tuples
        .iter()
        .zip(&over_in)
        .map(|(t, oi)| Crossing::new(*t, oi.unwrap()))
        .collect())
}

/// Serializes to PD text: one `X(a,b,c,d)` line per crossing, then a
/// `components:` line listing arc ranges (plus `free=k` for crossing-free
/// loops), and a `signs:` line only when the tuples alone are ambiguous.
pub fn to_pd_text(d: &LinkDiagram) -> String {
    let mut out = String::new();
    for c in d.crossings() {
        out.push_str(&format!(
            "X({},{},{},{})\n",
            c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]
        ));
    }
    out.push_str("components:");
    for &(f, l) in d.ranges() {
        out.push_str(&format!(" {f}-{l}"));
    }
    if d.free_loops() > 0 {
        out.push_str(&format!(" free={}", d.free_loops()));
    }
    out.push('\n');
    if needs_signs(d) {
        out.push_str("signs:");
        for c in d.crossings() {
            out.push_str(if c.sign() > 0 { " +" } else { " -" });
        }
        out.push('\n');
    }
    out
}

/// Parses PD text. Accepts `X(...)` or `X[...]` crossing lines, blank
/// lines, and `#` comments. When the `components:` header is absent the
/// component ranges are inferred: under-strand successor facts force
/// every wrap-around, and the leftover stretches merge into maximal
/// blocks (an error suggests adding the header when that guess fails).
pub fn from_pd_text(s: &str) -> Result<LinkDiagram, KnotError> {
    let mut tuples: Vec<[ArcId; 4]> = Vec::new();
    let mut ranges: Option<Vec<(ArcId, ArcId)>> = None;
    let mut free_loops = 0usize;
    let mut signs: Option<Vec<i8>> = None;
    let mut tuple_lines: Vec<usize> = Vec::new();

    for (i, raw) in s.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("components:") {
            if ranges.is_some() {
                return Err(KnotError::parse(line_no, "duplicate components line"));
            }
            let mut r = Vec::new();
            for tok in rest.split_whitespace() {
                if let Some(k) = tok.strip_prefix("free=") {
                    free_loops = k
                        .parse()
                        .map_err(|_| KnotError::parse(line_no, format!("bad free count {k:?}")))?;
                } else {
                    let (f, l) = tok
                        .split_once('-')
                        .ok_or_else(|| KnotError::parse(line_no, format!("bad range {tok:?}")))?;
                    let f: ArcId = f
                        .parse()
                        .map_err(|_| KnotError::parse(line_no, format!("bad range {tok:?}")))?;
                    let l: ArcId = l
                        .parse()
                        .map_err(|_| KnotError::parse(line_no, format!("bad range {tok:?}")))?;
                    r.push((f, l));
                }
            }
            ranges = Some(r);
        } else if let Some(rest) = line.strip_prefix("signs:") {
            let mut v = Vec::new();
            for tok in rest.split_whitespace() {
                v.push(match tok {
                    "+" | "+1" | "1" => 1,
                    "-" | "-1" => -1,
                    _ => return Err(KnotError::parse(line_no, format!("bad sign {tok:?}"))),
                });
            }
            signs = Some(v);
        } else if let Some(rest) = line.strip_prefix('X') {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
                .ok_or_else(|| {
                    KnotError::parse(line_no, "expected X(a,b,c,d) or X[a,b,c,d]")
                })?;
            let nums: Vec<ArcId> = body
                .split(',')
                .map(|t| t.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| KnotError::parse(line_no, format!("bad arc labels {body:?}")))?;
            let [a, b, c, d] = nums[..] else {
                return Err(KnotError::parse(line_no, "crossing needs exactly 4 arcs"));
            };
            tuples.push([a, b, c, d]);
            tuple_lines.push(line_no);
        } else {
            return Err(KnotError::parse(line_no, format!("unrecognized line {line:?}")));
        }
    }

    let ranges = match ranges {
        Some(r) => r,
        None => infer_ranges(&tuples)?,
    };
    let crossings = resolve_roles(&tuples, &ranges, signs.as_deref())?;
    LinkDiagram::new(crossings, ranges, free_loops)
}

fn infer_ranges(tuples: &[[ArcId; 4]]) -> Result<Vec<(ArcId, ArcId)>, KnotError> {
    let n = (tuples.len() * 2) as ArcId;
    if n == 0 {
        return Ok(Vec::new());
    }
    // succ(a) = c for every under passage; c != a+1 forces a component
    // boundary with first arc c and last arc a.
    let mut forced: Vec<(ArcId, ArcId)> = Vec::new();
    for t in tuples {
        let (a, c) = (t[0], t[2]);
        if c != a + 1 {
            if c > a {
                return Err(KnotError::Invalid(format!(
                    "under passage {a} -> {c} cannot close a component; \
                     add a components: header"
                )));
            }
            forced.push((c, a));
        }
    }
    forced.sort_unstable();
    forced.dedup();
    let mut ranges = Vec::new();
    let mut next: ArcId = 1;
    for &(f, l) in &forced {
        if f < next {
            return Err(KnotError::Invalid(format!(
                "inferred components overlap near arc {f}; add a components: header"
            )));
        }
        if f > next {
            ranges.push((next, f - 1));
        }
        ranges.push((f, l));
        next = l + 1;
    }
    if next <= n {
        ranges.push((next, n));
    }
    Ok(ranges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{disjoint_union, kink, rational, torus2, unknot};

    fn round_trips(d: &LinkDiagram) {
        let j = to_json(d);
        assert_eq!(&from_json(&j).unwrap(), d, "json: {j}");
        let p = to_pd_text(d);
        assert_eq!(&from_pd_text(&p).unwrap(), d, "pd: {p}");
    }

    #[test]
    fn round_trip_standard_diagrams() {
        for d in [
            unknot(3),
            kink(1),
            kink(-1),
            torus2(2),
            torus2(3),
            torus2(-4),
            torus2(7),
            rational(&[2, 2]).unwrap(),
            rational(&[3, 1, 3]).unwrap(),
            disjoint_union(&torus2(3), &unknot(1)),
        ] {
            round_trips(&d);
        }
    }

    #[test]
    fn resolution_recovers_kink_signs_via_propagation() {
        // Tuples of both kinks are succ-ambiguous at the over pair, but
        // the under anchors settle them.
        let p = from_pd_text("X(1,1,2,2)\ncomponents: 1-2\n").unwrap();
        assert_eq!(p, kink(1));
        let m = from_pd_text("X(1,2,2,1)\ncomponents: 1-2\n").unwrap();
        assert_eq!(m, kink(-1));
    }

    #[test]
    fn hopf_resolves_without_signs() {
        assert!(!needs_signs(&torus2(2)));
        let d = from_pd_text("X(1,4,2,3)\nX(4,1,3,2)\ncomponents: 1-2 3-4\n").unwrap();
        assert_eq!(d, torus2(2));
        assert_eq!(d.linking_matrix()[0][1], 1);
    }

    #[test]
    fn components_inferred_when_header_absent() {
        let t = from_pd_text("X(1,5,2,4)\nX(5,3,6,2)\nX(3,1,4,6)\n").unwrap();
        assert_eq!(t, torus2(3));
        let h = from_pd_text("X(1,4,2,3)\nX(4,1,3,2)\n").unwrap();
        assert_eq!(h, torus2(2));
    }

    #[test]
    fn genuinely_ambiguous_diagram_needs_signs() {
        // A two-arc circle lying over another two-arc circle: the tuples
        // cannot tell which crossing hosts which over-passage, so both
        // sign assignments are valid and distinct.
        let text = "X(3,1,4,2)\nX(4,1,3,2)\ncomponents: 1-2 3-4\nsigns: - +\n";
        let d = from_pd_text(text).unwrap();
        assert!(d.is_valid(), "{:?}", d.validate().violations);
        assert!(needs_signs(&d));
        assert_eq!(d.sign(0).unwrap(), -1);
        round_trips(&d);
        // The other assignment happens to match the default resolution.
        let e = from_pd_text(&text.replace("- +", "+ -")).unwrap();
        assert!(e.is_valid(), "{:?}", e.validate().violations);
        assert_ne!(d, e);
        assert!(!needs_signs(&e));
        round_trips(&e);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match from_pd_text("X(1,1,2,2)\nY(3)\n") {
            Err(KnotError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match from_json("{\"crossings\": [[1,1,2]], \"components\": [[1,2]]}") {
            Err(KnotError::Parse { .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_brackets_accepted() {
        let d = from_pd_text("# trefoil\nX[1,5,2,4]\nX[5,3,6,2] # mid\nX[3,1,4,6]\n\n").unwrap();
        assert_eq!(d, torus2(3));
    }

    #[test]
    fn free_loops_round_trip() {
        let d = disjoint_union(&kink(1), &unknot(2));
        let p = to_pd_text(&d);
        assert!(p.contains("free=2"), "{p}");
        round_trips(&d);
        let j = to_json(&unknot(2));
        assert_eq!(from_json(&j).unwrap(), unknot(2));
    }
}
