//! Regular and irregular smoothing at a crossing.
//!
//! Deleting a crossing leaves four loose arc-ends; a smoothing rejoins
//! them in one of the two planar ways. The regular smoothing joins each
//! incoming end to an outgoing end, so every strand keeps its direction:
//! a self-crossing splits its component in two, an inter-component
//! crossing merges the two strands. The irregular smoothing joins the
//! two incoming ends to each other and the two outgoing ends to each
//! other; the strands only close up after reversing a segment, so the
//! result carries a fresh reconstruction orientation and is flagged
//! unoriented. Either way the result is renumbered canonically.

use std::fmt;
use std::str::FromStr;

use crate::construct::rebuild_from_cycles;
use crate::diagram::{ArcId, Crossing, LinkDiagram};
use crate::error::KnotError;
use crate::faces::arc_ends;
use crate::mapgraph::UnoMap;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SmoothMode {
    Regular,
    Irregular,
}

impl fmt::Display for SmoothMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SmoothMode::Regular => "regular",
            SmoothMode::Irregular => "irregular",
        })
    }
}

impl FromStr for SmoothMode {
    type Err = KnotError;

    fn from_str(s: &str) -> Result<Self, KnotError> {
        match s {
            "regular" => Ok(SmoothMode::Regular),
            "irregular" => Ok(SmoothMode::Irregular),
            other => Err(KnotError::Config(format!(
                "unknown smoothing mode {other:?} (want regular or irregular)"
            ))),
        }
    }
}

/// A smoothed diagram plus the bookkeeping downstream consumers need.
/// `oriented` is false exactly for irregular results, whose diagram
/// orientation is a canonical choice rather than inherited.
#[derive(Clone, Debug)]
pub struct SmoothedResult {
    pub diagram: LinkDiagram,
    pub oriented: bool,
    pub component_count: usize,
    pub crossing: usize,
    pub mode: SmoothMode,
}

pub fn smooth(d: &LinkDiagram, x: usize, mode: SmoothMode) -> Result<SmoothedResult, KnotError> {
    match mode {
        SmoothMode::Regular => regular_smooth(d, x),
        SmoothMode::Irregular => irregular_smooth(d, x),
    }
}

/// Deletes crossing `x` and reconnects the strands so every component
/// keeps its direction. The component count grows by one at a
/// self-crossing and drops by one at an inter-component crossing; the
/// writhe drops by the sign of `x`.
pub fn regular_smooth(d: &LinkDiagram, x: usize) -> Result<SmoothedResult, KnotError> {
    let c = *d.crossings().get(x).ok_or(KnotError::UnknownCrossing(x))?;
    let ends = arc_ends(d);
    // Walking an arc into the vanished crossing continues straight onto
    // the outgoing arc of the other passage.
    let next = |p: ArcId| -> ArcId {
        let h = ends.head[p as usize];
        if h.crossing == x {
            if h.port == 0 {
                c.over_out_arc()
            } else {
                c.under_out()
            }
        } else {
            d.succ(p)
        }
    };

    // Orbits of `next` are the strands of the smoothed diagram. Runs of
    // old arcs between surviving heads fuse into one new arc, named by
    // the run's last member; an orbit whose heads all sat at `x` closes
    // into a free loop (its arcs touch no surviving crossing).
    let total = d.arc_count();
    let mut rep = vec![0 as ArcId; total + 1];
    let mut seen = vec![false; total + 1];
    let mut cycles: Vec<Vec<ArcId>> = Vec::new();
    let mut free = d.free_loops();
    for s in 1..=total as ArcId {
        if seen[s as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = s;
        loop {
            seen[cur as usize] = true;
            orbit.push(cur);
            cur = next(cur);
            if cur == s {
                break;
            }
        }
        let survives = |p: ArcId| ends.head[p as usize].crossing != x;
        let Some(brk) = orbit.iter().position(|&p| survives(p)) else {
            free += 1;
            continue;
        };
        let mut cycle = Vec::new();
        let mut run = Vec::new();
        for j in 0..orbit.len() {
            let p = orbit[(brk + 1 + j) % orbit.len()];
            run.push(p);
            if survives(p) {
                for &q in &run {
                    rep[q as usize] = p;
                }
                cycle.push(p);
                run.clear();
            }
        }
        debug_assert!(run.is_empty());
        cycles.push(cycle);
    }

    let crossings: Vec<Crossing> = d
        .crossings()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != x)
        .map(|(_, cr)| {
            let m = |a: ArcId| rep[a as usize];
            Crossing::new([m(cr.arcs[0]), m(cr.arcs[1]), m(cr.arcs[2]), m(cr.arcs[3])], cr.over_in)
        })
        .collect();
    let diagram = rebuild_from_cycles(&crossings, &cycles, free)?;
    finish(d, x, diagram, SmoothMode::Regular)
}

/// Deletes crossing `x` and reconnects the strands the other way: head
/// ends to each other, tail ends to each other. The component count is
/// unchanged at a self-crossing and drops by one at an inter-component
/// crossing. The result is unoriented.
pub fn irregular_smooth(d: &LinkDiagram, x: usize) -> Result<SmoothedResult, KnotError> {
    let c = *d.crossings().get(x).ok_or(KnotError::UnknownCrossing(x))?;
    let m = UnoMap::from_diagram(d);
    let spliced = splice_out(&m, x, [(0, c.over_in), (2, (c.over_in + 2) % 4)]);
    let diagram = spliced.to_diagram()?;
    finish(d, x, diagram, SmoothMode::Irregular)
}

fn finish(
    d: &LinkDiagram,
    x: usize,
    diagram: LinkDiagram,
    mode: SmoothMode,
) -> Result<SmoothedResult, KnotError> {
    let n = d.component_count();
    let expect = match (mode, d.is_self_crossing(x)?) {
        (SmoothMode::Regular, true) => n + 1,
        (SmoothMode::Irregular, true) => n,
        (_, false) => n - 1,
    };
    let component_count = diagram.component_count();
    debug_assert_eq!(component_count, expect, "component count rule at crossing {x}");
    Ok(SmoothedResult {
        diagram,
        oriented: mode == SmoothMode::Regular,
        component_count,
        crossing: x,
        mode,
    })
}

/// Removes node `x` from the map, rejoining its neighbours so that the
/// two `pairing` port pairs become throughgoing strands. Gluings that
/// chain back into `x` are followed; a chain that never leaves `x`
/// closes into a free loop. Nodes past `x` shift down by one.
fn splice_out(m: &UnoMap, x: usize, pairing: [(u8, u8); 2]) -> UnoMap {
    let mut partner = [4u8; 4];
    for &(p, q) in &pairing {
        partner[p as usize] = q;
        partner[q as usize] = p;
    }
    let remap = |n: usize| if n > x { n - 1 } else { n };
    let mut consumed = [false; 4];
    let mut nodes = Vec::with_capacity(m.nodes.len().saturating_sub(1));
    for (n, ports) in m.nodes.iter().enumerate() {
        if n == x {
            continue;
        }
        let mut out = [(usize::MAX, 4u8); 4];
        for (s, &(mut tn, mut tp)) in ports.iter().enumerate() {
            while tn == x {
                consumed[tp as usize] = true;
                let q = partner[tp as usize];
                consumed[q as usize] = true;
                let (n2, p2) = m.nodes[x][q as usize];
                tn = n2;
                tp = p2;
            }
            out[s] = (remap(tn), tp);
        }
        nodes.push(out);
    }
    let mut free_loops = m.free_loops;
    for r0 in 0..4u8 {
        if consumed[r0 as usize] {
            continue;
        }
        let mut r = r0;
        loop {
            consumed[r as usize] = true;
            let q = partner[r as usize];
            consumed[q as usize] = true;
            let (n2, p2) = m.nodes[x][q as usize];
            debug_assert_eq!(n2, x, "unreached chain must stay internal");
            r = p2;
            if r == r0 {
                break;
            }
        }
        free_loops += 1;
    }
    UnoMap { nodes, free_loops }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{self, CanonOpts};
    use crate::construct;
    use crate::moves;

    fn suite() -> Vec<LinkDiagram> {
        vec![
            construct::torus2(2),
            construct::torus2(3),
            construct::torus2(4),
            construct::torus2(-5),
            construct::braid_closure(3, &[1, -2, 1]).unwrap(),
            construct::rational(&[3, 2]).unwrap(),
            construct::disjoint_union(&construct::torus2(3), &construct::unknot(1)),
        ]
    }

    #[test]
    fn component_count_rule_everywhere() {
        for d in suite() {
            let n = d.component_count();
            for x in 0..d.crossing_count() {
                let self_x = d.is_self_crossing(x).unwrap();
                let reg = regular_smooth(&d, x).unwrap();
                assert!(reg.diagram.is_valid(), "{:?}", reg.diagram.validate().violations);
                assert!(reg.oriented);
                assert_eq!(reg.diagram.crossing_count(), d.crossing_count() - 1);
                assert_eq!(reg.component_count, if self_x { n + 1 } else { n - 1 });
                assert_eq!(reg.diagram.writhe(), d.writhe() - d.sign(x).unwrap() as i64);

                let irr = irregular_smooth(&d, x).unwrap();
                assert!(irr.diagram.is_valid(), "{:?}", irr.diagram.validate().violations);
                assert!(!irr.oriented);
                assert_eq!(irr.diagram.crossing_count(), d.crossing_count() - 1);
                assert_eq!(irr.component_count, if self_x { n } else { n - 1 });
            }
        }
        let h = construct::torus2(2);
        assert!(matches!(regular_smooth(&h, 9), Err(KnotError::UnknownCrossing(9))));
        assert!(matches!(irregular_smooth(&h, 2), Err(KnotError::UnknownCrossing(2))));
    }

    #[test]
    fn kink_smoothings_split_or_absorb() {
        for sign in [1, -1] {
            let k = construct::kink(sign);
            let reg = regular_smooth(&k, 0).unwrap();
            assert!(canon::same_diagram(&reg.diagram, &construct::unknot(2)));
            let irr = irregular_smooth(&k, 0).unwrap();
            assert!(canon::same_diagram(&irr.diagram, &construct::unknot(1)));
        }
    }

    #[test]
    fn smoothing_a_fresh_kink_detaches_or_reabsorbs_it() {
        let t = construct::torus2(3);
        let with_loop = construct::disjoint_union(&t, &construct::unknot(1));
        for side in [moves::Side::Left, moves::Side::Right] {
            for over in [true, false] {
                let e = moves::apply(
                    &t,
                    &moves::MoveEvent::R1Add { target: moves::R1Target::Arc(2), side, over },
                )
                .unwrap();
                // Splitting off the loop restores the source plus a free loop.
                let reg = regular_smooth(&e, 3).unwrap();
                assert!(canon::same_diagram(&reg.diagram, &with_loop));
                // Reabsorbing the loop restores the source up to reversal.
                let irr = irregular_smooth(&e, 3).unwrap();
                assert_eq!(
                    canon::canonical_key(&irr.diagram, CanonOpts::UNORIENTED),
                    canon::canonical_key(&t, CanonOpts::UNORIENTED),
                );
            }
        }
    }

    #[test]
    fn hopf_smoothings_are_kinks() {
        let h = construct::torus2(2);
        for x in 0..2 {
            // Orientation-consistent merging keeps the positive sign.
            let reg = regular_smooth(&h, x).unwrap();
            assert!(canon::same_diagram(&reg.diagram, &construct::kink(1)));
            // The other reconnection reverses one strand and flips it.
            let irr = irregular_smooth(&h, x).unwrap();
            assert!(canon::same_diagram(&irr.diagram, &construct::kink(-1)));
        }
    }

    #[test]
    fn trefoil_smoothings() {
        let t = construct::torus2(3);
        for x in 0..3 {
            let reg = regular_smooth(&t, x).unwrap();
            assert_eq!(reg.component_count, 2);
            assert_eq!(reg.diagram.writhe(), 2);
            assert_eq!(reg.diagram.linking_matrix()[0][1], 1);

            // The irregular smoothing is a two-crossing knot diagram, so
            // it must reduce to a crossing-free unknot.
            let irr = irregular_smooth(&t, x).unwrap();
            assert_eq!(irr.component_count, 1);
            assert_eq!(moves::simplify(&irr.diagram).crossing_count(), 0);
        }
    }

    #[test]
    fn mode_strings_round_trip() {
        for mode in [SmoothMode::Regular, SmoothMode::Irregular] {
            assert_eq!(mode.to_string().parse::<SmoothMode>().unwrap(), mode);
        }
        assert!("both".parse::<SmoothMode>().is_err());
        let h = construct::torus2(2);
        let r = smooth(&h, 1, SmoothMode::Irregular).unwrap();
        assert_eq!(r.crossing, 1);
        assert_eq!(r.mode, SmoothMode::Irregular);
    }
}
