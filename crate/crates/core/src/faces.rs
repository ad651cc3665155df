//! Faces of the underlying 4-valent plane graph.
//!
//! A dart is an arc-end at a crossing, addressed by (crossing, port).
//! Walking a face: traverse the arc attached at the dart to its other
//! end, then turn to the next port counterclockwise. Orbits of that map
//! are the faces; each face visits one dart per boundary edge, so a
//! monogon has one dart, a bigon two, a trigon three.
//!
//! Free loops bound faces too, but carry no darts; they are accounted
//! for separately by [`crate::diagram::LinkDiagram::face_count`].

use crate::diagram::{ArcId, LinkDiagram};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dart {
    pub crossing: usize,
    pub port: u8,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    /// Boundary darts in walk order, rotated so the smallest comes first.
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn is_monogon(&self) -> bool {
        self.darts.len() == 1
    }

    pub fn is_bigon(&self) -> bool {
        self.darts.len() == 2
    }

    pub fn is_trigon(&self) -> bool {
        self.darts.len() == 3
    }
}

/// Where each end of every arc attaches: (head crossing+port, tail
/// crossing+port). Heads are incoming ends (under-in / over-in ports).
pub(crate) struct ArcEnds {
    pub head: Vec<Dart>,
    pub tail: Vec<Dart>,
}

pub(crate) fn arc_ends(d: &LinkDiagram) -> ArcEnds {
    let n = d.arc_count() + 1;
    let dummy = Dart { crossing: usize::MAX, port: 0 };
    let mut head = vec![dummy; n];
    let mut tail = vec![dummy; n];
    for (x, c) in d.crossings().iter().enumerate() {
        head[c.under_in() as usize] = Dart { crossing: x, port: 0 };
        tail[c.under_out() as usize] = Dart { crossing: x, port: 2 };
        head[c.over_in_arc() as usize] = Dart { crossing: x, port: c.over_in };
        tail[c.over_out_arc() as usize] = Dart { crossing: x, port: (c.over_in + 2) % 4 };
    }
    ArcEnds { head, tail }
}

pub fn arc_at(d: &LinkDiagram, dart: Dart) -> ArcId {
    d.crossings()[dart.crossing].arcs[dart.port as usize]
}

/// The other attachment of the arc sitting at `dart`.
fn opposite_end(ends: &ArcEnds, d: &LinkDiagram, dart: Dart) -> Dart {
    let a = arc_at(d, dart) as usize;
    if ends.head[a] == dart {
        ends.tail[a]
    } else {
        ends.head[a]
    }
}

fn face_next(ends: &ArcEnds, d: &LinkDiagram, dart: Dart) -> Dart {
    let o = opposite_end(ends, d, dart);
    Dart { crossing: o.crossing, port: (o.port + 1) % 4 }
}

/// All faces of the 4-valent graph, sorted by their smallest dart.
pub fn faces(d: &LinkDiagram) -> Vec<Face> {
    let c = d.crossing_count();
    let ends = arc_ends(d);
    let mut visited = vec![false; 4 * c];
    let idx = |dt: Dart| dt.crossing * 4 + dt.port as usize;
    let mut out = Vec::new();
    for x in 0..c {
        for p in 0..4u8 {
            let start = Dart { crossing: x, port: p };
            if visited[idx(start)] {
                continue;
            }
            let mut darts = Vec::new();
            let mut cur = start;
            loop {
                visited[idx(cur)] = true;
                darts.push(cur);
                cur = face_next(&ends, d, cur);
                if cur == start {
                    break;
                }
            }
            // Scanning in dart order means the first dart is the minimum.
            out.push(Face { darts });
        }
    }
    out
}

/// Arcs traversed by the face boundary, one per dart.
pub fn face_arcs(d: &LinkDiagram, f: &Face) -> Vec<ArcId> {
    f.darts.iter().map(|&dt| arc_at(d, dt)).collect()
}

/// For a slidable trigon, the crossing where its top and bottom strands
/// cross. Side `k` runs from `darts[k]` to `darts[(k+1)%3]`; odd ports
/// sit on the over strand, and the walk turns one port past the landing
/// end, so the side starts over when `port` is odd and lands over when
/// the next port is even. A slidable trigon has exactly one all-over
/// side (the top strand) and one all-under side (the bottom strand);
/// they meet at the returned crossing. `None` for any other face.
pub fn trigon_z(f: &Face) -> Option<usize> {
    if f.len() != 3 {
        return None;
    }
    let (mut over_side, mut under_side) = (None, None);
    for k in 0..3 {
        let start_over = f.darts[k].port % 2 == 1;
        let end_over = f.darts[(k + 1) % 3].port.is_multiple_of(2);
        match (start_over, end_over) {
            (true, true) => {
                if over_side.replace(k).is_some() {
                    return None;
                }
            }
            (false, false) => {
                if under_side.replace(k).is_some() {
                    return None;
                }
            }
            _ => {}
        }
    }
    let (t, b) = (over_side?, under_side?);
    let shared = if (t + 1) % 3 == b { f.darts[b] } else { f.darts[t] };
    Some(shared.crossing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn hopf_has_four_bigon_faces() {
        let d = construct::torus2(2);
        let fs = faces(&d);
        assert_eq!(fs.len(), 4);
        assert!(fs.iter().all(Face::is_bigon));
        assert_eq!(d.face_count(), 4);
    }

    #[test]
    fn trefoil_faces_are_three_bigons_and_two_trigons() {
        let d = construct::torus2(3);
        let fs = faces(&d);
        assert_eq!(fs.len(), 5);
        let mut sizes: Vec<usize> = fs.iter().map(Face::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
        assert_eq!(d.face_count(), 5);
    }

    #[test]
    fn kink_has_a_monogon() {
        let d = construct::kink(1);
        let fs = faces(&d);
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().any(Face::is_monogon));
    }

    #[test]
    fn free_loop_faces() {
        let d = construct::unknot(1);
        assert_eq!(faces(&d).len(), 0);
        assert_eq!(d.face_count(), 2);
        assert_eq!(construct::unknot(3).face_count(), 4);
    }

    #[test]
    fn split_union_shares_the_outer_face() {
        let d = construct::disjoint_union(&construct::torus2(2), &construct::torus2(3));
        // 4 + 5 faces, outer face shared once.
        assert_eq!(d.face_count(), 8);
    }

    #[test]
    fn trigon_z_finds_the_top_bottom_crossing() {
        // Alternating trigons have no all-over side.
        assert!(faces(&construct::torus2(3)).iter().all(|f| trigon_z(f).is_none()));
        // Changing one trefoil crossing puts it between the top and
        // bottom strands of both adjacent trigons.
        let d = construct::torus2(3).change_crossing(0).unwrap();
        let slidable: Vec<usize> =
            faces(&d).iter().filter_map(trigon_z).collect();
        assert_eq!(slidable, vec![0, 0]);
    }
}
