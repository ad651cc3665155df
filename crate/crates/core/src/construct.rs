//! Constructors for standard diagram families.

use crate::diagram::{ArcId, Crossing, LinkDiagram};
use crate::error::KnotError;
use crate::mapgraph::MapBuilder;

/// Trivial k-component diagram: k free loops, no crossings.
pub fn unknot(k: usize) -> LinkDiagram {
    LinkDiagram::new_unchecked(Vec::new(), Vec::new(), k)
}

/// One-crossing unknot. `sign` = +1 gives the positive kink.
pub fn kink(sign: i8) -> LinkDiagram {
    let c = if sign >= 0 {
        Crossing::new([1, 1, 2, 2], 3)
    } else {
        Crossing::new([1, 2, 2, 1], 1)
    };
    LinkDiagram::new_unchecked(vec![c], vec![(1, 2)], 0)
}

/// Standard (2, n)-torus diagram: |n| crossings all of sign `signum(n)`.
/// Even n gives a two-component link with linking number n/2, odd n a
/// knot; n = 0 is the two-component unlink.
pub fn torus2(n: i64) -> LinkDiagram {
    if n == 0 {
        return unknot(2);
    }
    if n < 0 {
        return torus2(-n).mirror();
    }
    let n = n as usize;
    let ranges: Vec<(ArcId, ArcId)> = if n % 2 == 1 {
        vec![(1, 2 * n as ArcId)]
    } else {
        vec![(1, n as ArcId), (n as ArcId + 1, 2 * n as ArcId)]
    };
    let succ = |a: ArcId| -> ArcId {
        for &(f, l) in &ranges {
            if f <= a && a <= l {
                return if a == l { f } else { a + 1 };
            }
        }
        unreachable!()
    };
    // The strand walk visits the crossings 1..n twice around; visit k is
    // an under-passage on the first lap at odd k, and the parity flips
    // for the second lap so each crossing gets one under and one over.
    let under_visit = |k: usize| -> bool {
        if k <= n {
            k % 2 == 1
        } else {
            (k - n).is_multiple_of(2)
        }
    };
    let mut crossings = Vec::with_capacity(n);
    for i in 1..=n {
        let (k1, k2) = (i, n + i);
        let (ku, ko) = if under_visit(k1) { (k1, k2) } else { (k2, k1) };
        debug_assert!(under_visit(ku) && !under_visit(ko));
        let (u_in, o_in) = (ku as ArcId, ko as ArcId);
        crossings.push(Crossing::new([u_in, succ(o_in), succ(u_in), o_in], 3));
    }
    LinkDiagram::new_unchecked(crossings, ranges, 0)
}

/// Alternating 2-bridge diagram from a positive twist vector: `a[0]`
/// twists in a vertical column, then `a[1]` appended horizontally on the
/// right, alternating, closed off by joining the top pair and the bottom
/// pair of loose ends. The determinant of the result is the numerator of
/// the continued fraction `a[n-1] + 1/(a[n-2] + 1/(...))`.
pub fn rational(a: &[u32]) -> Result<LinkDiagram, KnotError> {
    if a.is_empty() || a.contains(&0) {
        return Err(KnotError::Config("twist vector entries must be positive".into()));
    }
    let mut b = MapBuilder::new();
    // Vertical template: ports 0=NE, 1=NW, 2=SW, 3=SE (counterclockwise),
    // under-strand on the NE-SW diagonal; each one stacks below the
    // current SW/SE plugs. Horizontal template: ports 0=SW, 1=SE, 2=NE,
    // 3=NW, under-strand on SW-NE; each one attaches east of the current
    // NE/SE plugs. Alternating runs keep the diagram alternating.
    let n0 = b.add_node();
    let (nw, mut ne) = ((n0, 1u8), (n0, 0u8));
    let (mut sw, mut se) = ((n0, 2u8), (n0, 3u8));
    for _ in 1..a[0] {
        let n = b.add_node();
        b.glue((n, 1), sw);
        b.glue((n, 0), se);
        sw = (n, 2);
        se = (n, 3);
    }
    for (i, &ai) in a.iter().enumerate().skip(1) {
        if i % 2 == 1 {
            for _ in 0..ai {
                let n = b.add_node();
                b.glue((n, 3), ne);
                b.glue((n, 0), se);
                ne = (n, 2);
                se = (n, 1);
            }
        } else {
            for _ in 0..ai {
                let n = b.add_node();
                b.glue((n, 1), sw);
                b.glue((n, 0), se);
                sw = (n, 2);
                se = (n, 3);
            }
        }
    }
    // Each vertical run inverts the tangle's continued fraction, so for
    // an odd-length vector the closure that realizes the fraction's
    // numerator joins the side pairs; for even length, top and bottom.
    if a.len() % 2 == 1 {
        b.glue(nw, sw);
        b.glue(ne, se);
    } else {
        b.glue(nw, ne);
        b.glue(sw, se);
    }
    b.finish(0).to_diagram()
}

/// Closure of a braid word on the given number of strands. Generator `i`
/// (1-based, `|i| < strands`) crosses the strands at positions `i` and
/// `i+1`; positive generators put the right strand on top and make a
/// positive crossing (all strands run downward). Positions the word
/// never touches close into free loops.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram, KnotError> {
    if strands == 0 {
        return Err(KnotError::Config("braid needs at least one strand".into()));
    }
    for &g in word {
        if g == 0 || g.unsigned_abs() as usize >= strands {
            return Err(KnotError::Config(format!(
                "braid generator {g} out of range for {strands} strands"
            )));
        }
    }
    // Every edge between crossings becomes one arc. Ports sit
    // counterclockwise with the under-strand entering at port 0, so a
    // positive generator reads [NW, SW, SE, NE] (over-strand in at NE,
    // port 3) and a negative one [NE, NW, SW, SE] (over-strand in at
    // NW, port 1). Either way the top two ports are the in-ports.
    let mut port_edge = vec![[usize::MAX; 4]; word.len()];
    let mut top: Vec<Option<(usize, u8)>> = vec![None; strands];
    let mut bot: Vec<Option<(usize, u8)>> = vec![None; strands];
    let mut joins: Vec<((usize, u8), (usize, u8))> = Vec::new();
    for (k, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize - 1;
        let (tl, tr, bl, br) = if g > 0 { (0u8, 3u8, 1u8, 2u8) } else { (1, 0, 2, 3) };
        for (pos, tp, bp) in [(i, tl, bl), (i + 1, tr, br)] {
            match bot[pos] {
                Some(plug) => joins.push((plug, (k, tp))),
                None => top[pos] = Some((k, tp)),
            }
            bot[pos] = Some((k, bp));
        }
    }
    let mut free = 0;
    for pos in 0..strands {
        match (top[pos], bot[pos]) {
            (Some(t), Some(b)) => joins.push((b, t)),
            (None, None) => free += 1,
            _ => unreachable!("strand with one loose end"),
        }
    }
    let edges = joins.len();
    for (e, (a, b)) in joins.into_iter().enumerate() {
        port_edge[a.0][a.1 as usize] = e;
        port_edge[b.0][b.1 as usize] = e;
    }
    let crossings: Vec<Crossing> = word
        .iter()
        .enumerate()
        .map(|(k, &g)| {
            let pe = port_edge[k];
            debug_assert!(pe.iter().all(|&e| e != usize::MAX));
            Crossing::new(
                [pe[0] as ArcId, pe[1] as ArcId, pe[2] as ArcId, pe[3] as ArcId],
                if g > 0 { 3 } else { 1 },
            )
        })
        .collect();
    // Strand cycles: enter at an in-port, leave through the diagonal.
    let mut head = vec![(usize::MAX, 0u8); edges];
    for (k, c) in crossings.iter().enumerate() {
        head[c.arcs[0] as usize] = (k, 0);
        head[c.arcs[c.over_in as usize] as usize] = (k, c.over_in);
    }
    let mut seen = vec![false; edges];
    let mut cycles = Vec::new();
    for e0 in 0..edges {
        if seen[e0] {
            continue;
        }
        let mut cy = Vec::new();
        let mut e = e0;
        loop {
            seen[e] = true;
            cy.push(e as ArcId);
            let (k, p) = head[e];
            e = port_edge[k][(p as usize + 2) % 4];
            if e == e0 {
                break;
            }
        }
        cycles.push(cy);
    }
    rebuild_from_cycles(&crossings, &cycles, free)
}

/// Disjoint (split) union; components of `d2` keep their order after
/// those of `d1`, free loops of both collect at the end.
pub fn disjoint_union(d1: &LinkDiagram, d2: &LinkDiagram) -> LinkDiagram {
    let m = d1.arc_count() as ArcId;
    let mut crossings = d1.crossings().to_vec();
    crossings.extend(d2.crossings().iter().map(|c| {
        Crossing::new(
            [c.arcs[0] + m, c.arcs[1] + m, c.arcs[2] + m, c.arcs[3] + m],
            c.over_in,
        )
    }));
    let mut ranges = d1.ranges().to_vec();
    ranges.extend(d2.ranges().iter().map(|&(f, l)| (f + m, l + m)));
    LinkDiagram::new_unchecked(crossings, ranges, d1.free_loops() + d2.free_loops())
}

/// Connected sum along arc `a1` of `d1` and arc `a2` of `d2`: both arcs
/// are cut and the ends cross-joined, merging the two components while
/// respecting orientations. The merged component keeps the position of
/// `a1`'s component; other components of `d2` follow those of `d1`.
pub fn connect_sum(
    d1: &LinkDiagram,
    a1: ArcId,
    d2: &LinkDiagram,
    a2: ArcId,
) -> Result<LinkDiagram, KnotError> {
    let c1 = d1.component_of_arc(a1)?;
    let c2 = d2.component_of_arc(a2)?;
    let m = d1.arc_count() as ArcId;
    let shift = |a: ArcId| a + m;

    let mut crossings = d1.crossings().to_vec();
    crossings.extend(d2.crossings().iter().map(|c| {
        Crossing::new(
            [shift(c.arcs[0]), shift(c.arcs[1]), shift(c.arcs[2]), shift(c.arcs[3])],
            c.over_in,
        )
    }));

    // Cross-join: swap the incoming (head) occurrences of a1 and a2, so
    // the strand of d1 flows into d2's component and back.
    let heads: Vec<(usize, usize)> = crossings
        .iter()
        .enumerate()
        .flat_map(|(x, c)| {
            [(x, 0usize), (x, c.over_in as usize)]
                .into_iter()
                .filter(|&(_, p)| c.arcs[p] == a1 || c.arcs[p] == shift(a2))
                .collect::<Vec<_>>()
        })
        .collect();
    for (x, p) in heads {
        let cur = crossings[x].arcs[p];
        crossings[x].arcs[p] = if cur == a1 { shift(a2) } else { a1 };
    }

    // Declare the strand cycles of the result in the old labels.
    let comp_cycle = |d: &LinkDiagram, i: usize, start: ArcId, sh: bool| -> Vec<ArcId> {
        let (f, l) = d.ranges()[i];
        let k = l - f + 1;
        (0..k)
            .map(|j| {
                let a = f + (start - f + j) % k;
                if sh {
                    shift(a)
                } else {
                    a
                }
            })
            .collect()
    };
    let mut cycles: Vec<Vec<ArcId>> = Vec::new();
    for i in 0..d1.ranges().len() {
        if i == c1 {
            let mut merged = comp_cycle(d1, c1, d1.succ(a1), false);
            debug_assert_eq!(*merged.last().unwrap(), a1);
            merged.extend(comp_cycle(d2, c2, d2.succ(a2), true));
            cycles.push(merged);
        } else {
            cycles.push(comp_cycle(d1, i, d1.ranges()[i].0, false));
        }
    }
    for i in 0..d2.ranges().len() {
        if i != c2 {
            cycles.push(comp_cycle(d2, i, d2.ranges()[i].0, true));
        }
    }

    rebuild_from_cycles(&crossings, &cycles, d1.free_loops() + d2.free_loops())
}

/// Renumbers arbitrary arc labels into the canonical contiguous scheme,
/// given the strand cycles in traversal order.
pub(crate) fn rebuild_from_cycles(
    crossings: &[Crossing],
    cycles: &[Vec<ArcId>],
    free_loops: usize,
) -> Result<LinkDiagram, KnotError> {
    let mut map = std::collections::HashMap::new();
    let mut ranges = Vec::with_capacity(cycles.len());
    let mut next: ArcId = 1;
    for cycle in cycles {
        let k = cycle.len() as ArcId;
        for (j, &old) in cycle.iter().enumerate() {
            if map.insert(old, next + j as ArcId).is_some() {
                return Err(KnotError::Invalid(format!("arc {old} listed twice in cycles")));
            }
        }
        ranges.push((next, next + k - 1));
        next += k;
    }
    let crossings = crossings
        .iter()
        .map(|c| {
            let get = |a: ArcId| {
                map.get(&a)
                    .copied()
                    .ok_or_else(|| KnotError::Invalid(format!("arc {a} missing from cycles")))
            };
            Ok(Crossing::new(
                [get(c.arcs[0])?, get(c.arcs[1])?, get(c.arcs[2])?, get(c.arcs[3])?],
                c.over_in,
            ))
        })
        .collect::<Result<Vec<_>, KnotError>>()?;
    LinkDiagram::new(crossings, ranges, free_loops)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_diagrams_validate() {
        for n in [-5i64, -2, 1, 2, 3, 4, 5, 6, 7, 8] {
            let d = torus2(n);
            assert!(d.is_valid(), "T(2,{n}): {:?}", d.validate().violations);
            assert_eq!(d.crossing_count(), n.unsigned_abs() as usize);
            assert_eq!(d.writhe(), n);
            assert_eq!(d.component_count(), if n % 2 == 0 { 2 } else { 1 });
        }
        assert_eq!(torus2(4).linking_matrix()[0][1], 2);
        assert_eq!(torus2(-6).linking_matrix()[0][1], -3);
        assert_eq!(torus2(1), kink(1));
    }

    #[test]
    fn rational_diagrams_validate() {
        for v in [&[3u32][..], &[2, 2], &[3, 2], &[3, 1, 3], &[5], &[7, 1, 2]] {
            let d = rational(v).unwrap();
            assert!(d.is_valid(), "{v:?}: {:?}", d.validate().violations);
            assert_eq!(d.crossing_count(), v.iter().sum::<u32>() as usize);
            assert_eq!(d.component_count(), 1, "{v:?} should be a knot");
            // Reduced: a monogon face would mean a nugatory crossing.
            assert!(
                crate::faces::faces(&d).iter().all(|f| f.len() >= 2),
                "{v:?} has a monogon"
            );
        }
        // An even-determinant vector gives a two-component link.
        assert_eq!(rational(&[2]).unwrap().component_count(), 2);
    }

    #[test]
    fn connect_sum_of_trefoils() {
        let t = torus2(3);
        let s = connect_sum(&t, 1, &t, 1).unwrap();
        assert!(s.is_valid(), "{:?}", s.validate().violations);
        assert_eq!(s.crossing_count(), 6);
        assert_eq!(s.component_count(), 1);
        assert_eq!(s.writhe(), 6);
    }

    #[test]
    fn connect_sum_respects_linking() {
        // T(2,4) # T(2,4) along one component: three components, the
        // middle one linking both others.
        let t = torus2(4);
        let s = connect_sum(&t, 1, &t, 1).unwrap();
        assert!(s.is_valid(), "{:?}", s.validate().violations);
        assert_eq!(s.component_count(), 3);
        let lk = s.linking_matrix();
        let mut pairs: Vec<i64> = vec![lk[0][1], lk[0][2], lk[1][2]];
        pairs.sort_unstable();
        assert_eq!(pairs, vec![0, 2, 2]);
    }

    #[test]
    fn braid_closures_validate() {
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        assert!(t.is_valid(), "{:?}", t.validate().violations);
        assert_eq!(t.writhe(), 3);
        assert!(crate::canon::same_diagram(&t, &torus2(3)));

        let neg = braid_closure(2, &[-1, -1]).unwrap();
        assert_eq!(neg.writhe(), -2);
        assert_eq!(neg.component_count(), 2);

        // sigma1 sigma2^-1 sigma1: two components, mixed crossings.
        let d = braid_closure(3, &[1, -2, 1]).unwrap();
        assert!(d.is_valid(), "{:?}", d.validate().violations);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), 1);

        // Unused strand positions close into free loops.
        let k = braid_closure(3, &[1]).unwrap();
        assert_eq!(k.free_loops(), 1);
        assert_eq!(braid_closure(2, &[]).unwrap().component_count(), 2);
        assert!(braid_closure(2, &[2]).is_err());
    }

    #[test]
    fn disjoint_union_is_split() {
        let d = disjoint_union(&torus2(2), &torus2(2));
        assert!(d.is_valid(), "{:?}", d.validate().violations);
        assert_eq!(d.component_count(), 4);
        assert_eq!(d.graph_pieces(), 2);
        let lk = d.linking_matrix();
        assert_eq!(lk[0][1], 1);
        assert_eq!(lk[2][3], 1);
        assert_eq!(lk[0][2], 0);
    }
}
