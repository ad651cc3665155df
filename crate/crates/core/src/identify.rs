//! Catalogue lookup, connected-sum factor extraction, and link naming.

use std::sync::OnceLock;

use crate::catalogue::{self, CatalogueEntry};
use crate::construct::{self, rebuild_from_cycles};
use crate::diagram::{ArcId, LinkDiagram};
use crate::faces::{arc_ends, ArcEnds};
use crate::fingerprint::{fingerprint, Fingerprint};
use crate::moves;

/// Crossing budget past which lookup gives up instead of paying for an
/// exponential state sum on a diagram we will not recognize anyway.
const LOOKUP_LIMIT: usize = 24;

/// Simplifies, fingerprints, and looks the diagram up. `None` is an
/// honest answer: the link is not one the catalogue serves, or the
/// diagram stayed too large to fingerprint.
pub fn identify(d: &LinkDiagram) -> Option<&'static CatalogueEntry> {
    let s = moves::simplify(d);
    if s.crossing_count() > LOOKUP_LIMIT {
        return None;
    }
    catalogue::lookup(&fingerprint(&s))
}

/// Connected-sum factors visible in the diagram: split pieces first,
/// then repeated cutting along pairs of arcs that disconnect the
/// underlying graph. Factors come back simplified; a diagram with no
/// visible structure returns as the single factor.
pub fn visible_factors(d: &LinkDiagram) -> Vec<LinkDiagram> {
    let mut out = Vec::new();
    for piece in moves::simplify(d).split_into_pieces() {
        push_factors(piece, &mut out);
    }
    out
}

fn push_factors(d: LinkDiagram, out: &mut Vec<LinkDiagram>) {
    match split_at_two_cut(&d) {
        Some((x, y)) => {
            push_factors(x, out);
            push_factors(y, out);
        }
        None => out.push(d),
    }
}

/// First pair of arcs whose removal disconnects the crossings of a
/// connected diagram, resewn into the two summands.
fn split_at_two_cut(d: &LinkDiagram) -> Option<(LinkDiagram, LinkDiagram)> {
    if d.crossing_count() < 2 {
        return None;
    }
    let ends = arc_ends(d);
    let n = d.arc_count() as ArcId;
    for a in 1..=n {
        for b in a + 1..=n {
            if let Some(side) = cut_sides(d, &ends, a, b) {
                return Some(resew(d, &ends, a, b, &side));
            }
        }
    }
    None
}

/// Side (0/1) of every crossing once arcs `a` and `b` are removed, if
/// that removal disconnects the diagram with each removed arc running
/// between the sides. Side 0 holds `a`'s head.
fn cut_sides(d: &LinkDiagram, ends: &ArcEnds, a: ArcId, b: ArcId) -> Option<Vec<u8>> {
    let c = d.crossing_count();
    let mut parent: Vec<usize> = (0..c).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for arc in 1..=d.arc_count() as ArcId {
        if arc == a || arc == b {
            continue;
        }
        let (h, t) =
            (ends.head[arc as usize].crossing, ends.tail[arc as usize].crossing);
        let (rh, rt) = (find(&mut parent, h), find(&mut parent, t));
        if rh != rt {
            parent[rh] = rt;
        }
    }
    let anchor = find(&mut parent, ends.head[a as usize].crossing);
    let side: Vec<u8> = (0..c).map(|x| u8::from(find(&mut parent, x) != anchor)).collect();
    let crosses = |arc: ArcId| {
        side[ends.head[arc as usize].crossing] != side[ends.tail[arc as usize].crossing]
    };
    (side.contains(&1) && crosses(a) && crosses(b)).then_some(side)
}

/// Cuts arcs `a`, `b` and closes each side with one merged arc.
fn resew(
    d: &LinkDiagram,
    ends: &ArcEnds,
    a: ArcId,
    b: ArcId,
    side: &[u8],
) -> (LinkDiagram, LinkDiagram) {
    let comp = d.component_of_arc(a).expect("cut arc exists");
    debug_assert_eq!(comp, d.component_of_arc(b).expect("cut arc exists"));
    let (f, l) = d.ranges()[comp];
    let cyc: Vec<ArcId> = (f..=l).collect();
    let pos = |arc: ArcId| (arc - f) as usize;
    let run = |from: ArcId, to: ArcId| {
        let (mut t, stop) = ((pos(from) + 1) % cyc.len(), pos(to));
        let mut v = Vec::new();
        while t != stop {
            v.push(cyc[t]);
            t = (t + 1) % cyc.len();
        }
        v
    };

    let mut halves = Vec::new();
    for (keep, merged, other) in [(0u8, a, b), (1, b, a)] {
        // Within this side the exiting arc continues as the entering
        // one, so its tail occurrence takes the entering arc's name.
        let crossings: Vec<_> = (0..d.crossing_count())
            .filter(|&x| side[x] == keep)
            .map(|x| {
                let mut cr = d.crossings()[x];
                for p in 0..4 {
                    if cr.arcs[p] == other {
                        cr.arcs[p] = merged;
                    }
                }
                cr
            })
            .collect();
        let mut cycles = vec![[vec![merged], run(merged, other)].concat()];
        for (i, &(cf, cl)) in d.ranges().iter().enumerate() {
            if i != comp && side[ends.head[cf as usize].crossing] == keep {
                cycles.push((cf..=cl).collect());
            }
        }
        halves.push(
            rebuild_from_cycles(&crossings, &cycles, 0).expect("cut halves stay planar"),
        );
    }
    let second = halves.pop().expect("two halves");
    (halves.pop().expect("two halves"), second)
}
