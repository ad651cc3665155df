//! Oriented link diagrams in the 2-sphere, encoded combinatorially.
//!
//! A diagram is a list of crossings plus a partition of the arc labels
//! into components. Each crossing stores the four incident arc labels
//! counterclockwise starting from the incoming under-arc, together with
//! the position (1 or 3) at which the over-strand enters. Arcs are the
//! edges of the underlying 4-valent graph: they are numbered `1..=2c`
//! consecutively along each component, so orientation is implicit — the
//! successor of arc `k` is `k+1`, wrapping inside its component range.
//!
//! Crossing-free components ("free loops") carry no arcs and are stored
//! as a count; they are numbered after all arc-bearing components.

use crate::error::KnotError;

pub type ArcId = u32;

/// One crossing. `arcs = [a, b, c, d]` counterclockwise with `a` the
/// incoming under-arc (so `c = succ(a)`); `over_in` is 1 or 3 and names
/// the position where the over-strand enters (so the over-strand exits
/// at `over_in + 2 mod 4`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Crossing {
    pub arcs: [ArcId; 4],
    pub over_in: u8,
}

impl Crossing {
    pub fn new(arcs: [ArcId; 4], over_in: u8) -> Self {
        debug_assert!(over_in == 1 || over_in == 3);
        Crossing { arcs, over_in }
    }

    /// +1 when the over-strand enters at position 3 (the frame
    /// (over-direction, under-direction) is positively oriented).
    pub fn sign(&self) -> i8 {
        if self.over_in == 3 {
            1
        } else {
            -1
        }
    }

    pub fn under_in(&self) -> ArcId {
        self.arcs[0]
    }

    pub fn under_out(&self) -> ArcId {
        self.arcs[2]
    }

    pub fn over_in_arc(&self) -> ArcId {
        self.arcs[self.over_in as usize]
    }

    pub fn over_out_arc(&self) -> ArcId {
        self.arcs[(self.over_in as usize + 2) % 4]
    }

    /// Ports (0 and 2, or `over_in` and its opposite) of the passage the
    /// given arc-end occupies, as (in-port, out-port).
    pub fn passage_ports(&self, port: u8) -> (u8, u8) {
        if port.is_multiple_of(2) {
            (0, 2)
        } else {
            (self.over_in, (self.over_in + 2) % 4)
        }
    }
}

/// Per-crossing summary: sign plus the components of the two strands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CrossingInfo {
    pub id: usize,
    pub sign: i8,
    pub over_component: usize,
    pub under_component: usize,
}

/// Outcome of [`LinkDiagram::validate`]: empty means every structural
/// invariant holds.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    /// Inclusive (first, last) arc range per arc-bearing component, in
    /// component order. Ranges partition `1..=2c`.
    ranges: Vec<(ArcId, ArcId)>,
    /// Crossing-free components, numbered after the arc-bearing ones.
    free_loops: usize,
}

impl LinkDiagram {
    /// Builds a diagram and checks every structural invariant.
    pub fn new(
        crossings: Vec<Crossing>,
        ranges: Vec<(ArcId, ArcId)>,
        free_loops: usize,
    ) -> Result<Self, KnotError> {
        let d = LinkDiagram { crossings, ranges, free_loops };
        let report = d.validate();
        if report.is_valid() {
            Ok(d)
        } else {
            Err(KnotError::Invalid(report.violations.join("; ")))
        }
    }

    /// Builds without validating. For internal construction sites that
    /// guarantee validity structurally.
    pub(crate) fn new_unchecked(
        crossings: Vec<Crossing>,
        ranges: Vec<(ArcId, ArcId)>,
        free_loops: usize,
    ) -> Self {
        LinkDiagram { crossings, ranges, free_loops }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn ranges(&self) -> &[(ArcId, ArcId)] {
        &self.ranges
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.ranges.len() + self.free_loops
    }

    pub fn arc_component_count(&self) -> usize {
        self.ranges.len()
    }

    /// Index of the component owning arc `a`.
    pub fn component_of_arc(&self, a: ArcId) -> Result<usize, KnotError> {
        self.ranges
            .iter()
            .position(|&(f, l)| f <= a && a <= l)
            .ok_or(KnotError::UnknownArc(a))
    }

    /// Next arc along the strand (wraps inside the component range).
    pub fn succ(&self, a: ArcId) -> ArcId {
        for &(f, l) in &self.ranges {
            if f <= a && a <= l {
                return if a == l { f } else { a + 1 };
            }
        }
        panic!("arc {a} outside every component range");
    }

    pub fn pred(&self, a: ArcId) -> ArcId {
        for &(f, l) in &self.ranges {
            if f <= a && a <= l {
                return if a == f { l } else { a - 1 };
            }
        }
        panic!("arc {a} outside every component range");
    }

    pub fn sign(&self, x: usize) -> Result<i8, KnotError> {
        self.crossings.get(x).map(Crossing::sign).ok_or(KnotError::UnknownCrossing(x))
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign() as i64).sum()
    }

    pub fn is_self_crossing(&self, x: usize) -> Result<bool, KnotError> {
        let info = self.crossing_info(x)?;
        Ok(info.over_component == info.under_component)
    }

    pub fn crossing_info(&self, x: usize) -> Result<CrossingInfo, KnotError> {
        let c = self.crossings.get(x).ok_or(KnotError::UnknownCrossing(x))?;
        Ok(CrossingInfo {
            id: x,
            sign: c.sign(),
            over_component: self.component_of_arc(c.over_in_arc())?,
            under_component: self.component_of_arc(c.under_in())?,
        })
    }

    /// Symmetric integer matrix of pairwise linking numbers, zero diagonal.
    /// Entry (i, j) is half the signed sum over crossings between
    /// components i and j; free-loop rows are zero.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.component_count();
        let mut twice = vec![vec![0i64; n]; n];
        for x in 0..self.crossings.len() {
            let info = self.crossing_info(x).expect("crossing ids are dense");
            let (i, j) = (info.over_component, info.under_component);
            if i != j {
                twice[i][j] += info.sign as i64;
                twice[j][i] += info.sign as i64;
            }
        }
        for row in &mut twice {
            for v in row.iter_mut() {
                debug_assert!(*v % 2 == 0, "inter-component sign sum must be even");
                *v /= 2;
            }
        }
        twice
    }

    /// `sum over i < j of |lk(i, j)|`.
    #[allow(clippy::needless_range_loop)]
    pub fn linking_sum_abs(&self) -> u64 {
        let m = self.linking_matrix();
        let n = m.len();
        let mut s = 0u64;
        for i in 0..n {
            for j in (i + 1)..n {
                s += m[i][j].unsigned_abs();
            }
        }
        s
    }

    /// Sum of self-crossing signs of component `i`.
    pub fn self_writhe(&self, i: usize) -> i64 {
        (0..self.crossings.len())
            .filter_map(|x| {
                let info = self.crossing_info(x).ok()?;
                (info.over_component == i && info.under_component == i).then_some(info.sign as i64)
            })
            .sum()
    }

    /// Checks every structural invariant and reports all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        let c = self.crossings.len();
        let arc_count = 2 * c;

        if self.component_count() == 0 {
            v.push("diagram has no components".to_string());
        }

        // Ranges partition 1..=2c.
        let mut sorted = self.ranges.clone();
        sorted.sort();
        let mut next = 1;
        for &(f, l) in &sorted {
            if f != next {
                v.push(format!("component ranges do not tile arcs: expected start {next}, got {f}"));
                break;
            }
            if l < f {
                v.push(format!("component range ({f}, {l}) is empty"));
                break;
            }
            next = l + 1;
        }
        if next != arc_count as ArcId + 1 && sorted.iter().all(|&(f, l)| f <= l) {
            v.push(format!(
                "component ranges cover arcs 1..={}, diagram has {} arcs",
                next - 1,
                arc_count
            ));
        }
        if !v.is_empty() {
            // Arc bookkeeping below relies on well-formed ranges.
            return ValidationReport { violations: v };
        }

        // Every arc appears exactly twice, once as a head (incoming end)
        // and once as a tail (outgoing end).
        let mut heads = vec![0u32; arc_count + 1];
        let mut tails = vec![0u32; arc_count + 1];
        let mut bad_label = false;
        for x in &self.crossings {
            if x.over_in != 1 && x.over_in != 3 {
                v.push(format!("crossing {:?} has over_in {} (must be 1 or 3)", x.arcs, x.over_in));
                return ValidationReport { violations: v };
            }
            for &a in &x.arcs {
                if a == 0 || a as usize > arc_count {
                    v.push(format!("arc label {a} outside 1..={arc_count}"));
                    bad_label = true;
                }
            }
            if bad_label {
                return ValidationReport { violations: v };
            }
            heads[x.under_in() as usize] += 1;
            tails[x.under_out() as usize] += 1;
            heads[x.over_in_arc() as usize] += 1;
            tails[x.over_out_arc() as usize] += 1;
        }
        for a in 1..=arc_count {
            if heads[a] != 1 || tails[a] != 1 {
                v.push(format!(
                    "arc {a} has {} incoming and {} outgoing ends (want 1 and 1)",
                    heads[a], tails[a]
                ));
            }
        }

        // Successor relations at each crossing.
        for x in &self.crossings {
            if self.succ(x.under_in()) != x.under_out() {
                v.push(format!(
                    "crossing {:?}: under-out {} is not the successor of under-in {}",
                    x.arcs,
                    x.under_out(),
                    x.under_in()
                ));
            }
            if self.succ(x.over_in_arc()) != x.over_out_arc() {
                v.push(format!(
                    "crossing {:?}: over-out {} is not the successor of over-in {}",
                    x.arcs,
                    x.over_out_arc(),
                    x.over_in_arc()
                ));
            }
        }

        if !v.is_empty() {
            return ValidationReport { violations: v };
        }

        // Sphere Euler check: the face walk must produce 2 + c_i faces on
        // each connected piece of the 4-valent graph, i.e. 2p + c in total.
        let faces = crate::faces::faces(self);
        let pieces = self.graph_pieces();
        if faces.len() != 2 * pieces + c {
            v.push(format!(
                "face count {} violates the sphere Euler relation (want {} for {} pieces, {} crossings)",
                faces.len(),
                2 * pieces + c,
                pieces,
                c
            ));
        }

        ValidationReport { violations: v }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Connected pieces of the underlying 4-valent graph (free loops not
    /// counted).
    pub fn graph_pieces(&self) -> usize {
        let c = self.crossings.len();
        if c == 0 {
            return 0;
        }
        // Union-find over crossings, joined through shared arcs.
        let mut parent: Vec<usize> = (0..c).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        let mut seen: Vec<Option<usize>> = vec![None; self.arc_count() + 1];
        for (x, cr) in self.crossings.iter().enumerate() {
            for &a in &cr.arcs {
                match seen[a as usize] {
                    None => seen[a as usize] = Some(x),
                    Some(y) => {
                        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                        if rx != ry {
                            parent[rx] = ry;
                        }
                    }
                }
            }
        }
        let mut roots: Vec<usize> = (0..c).map(|i| find(&mut parent, i)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Pieces of the whole diagram, free loops included.
    pub fn pieces(&self) -> usize {
        self.graph_pieces() + self.free_loops
    }

    /// Total face count of the diagram drawn in one plane: disjoint
    /// pieces share the outer face.
    pub fn face_count(&self) -> usize {
        let walk = crate::faces::faces(self).len();
        let p = self.pieces();
        if p == 0 {
            return 0;
        }
        // Each free loop is a piece with two faces of its own.
        walk + 2 * self.free_loops - (p - 1)
    }

    /// Splits the diagram into its connected pieces: one diagram per
    /// connected piece of the 4-valent graph (components that share no
    /// crossing chain land in different pieces) plus one single-loop
    /// diagram per free loop.
    pub fn split_into_pieces(&self) -> Vec<LinkDiagram> {
        let c = self.crossings.len();
        let mut out = Vec::new();
        if c > 0 {
            // Union-find over crossings through shared arcs, then group
            // the arc-bearing components by the piece their arcs touch.
            let mut parent: Vec<usize> = (0..c).collect();
            fn find(p: &mut Vec<usize>, i: usize) -> usize {
                if p[i] != i {
                    let r = find(p, p[i]);
                    p[i] = r;
                }
                p[i]
            }
            let mut seen: Vec<Option<usize>> = vec![None; self.arc_count() + 1];
            for (x, cr) in self.crossings.iter().enumerate() {
                for &a in &cr.arcs {
                    match seen[a as usize] {
                        None => seen[a as usize] = Some(x),
                        Some(y) => {
                            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                            if rx != ry {
                                parent[rx] = ry;
                            }
                        }
                    }
                }
            }
            let mut head_crossing = vec![usize::MAX; self.arc_count() + 1];
            for (x, cr) in self.crossings.iter().enumerate() {
                head_crossing[cr.under_in() as usize] = x;
                head_crossing[cr.over_in_arc() as usize] = x;
            }
            let comp_root: Vec<usize> = self
                .ranges
                .iter()
                .map(|&(f, _)| find(&mut parent, head_crossing[f as usize]))
                .collect();
            let mut roots: Vec<usize> = comp_root.clone();
            roots.sort_unstable();
            roots.dedup();
            for r in roots {
                let keep: Vec<usize> =
                    (0..self.ranges.len()).filter(|&i| comp_root[i] == r).collect();
                out.push(
                    self.extract_components(&keep)
                        .expect("piece extraction keeps whole pieces"),
                );
            }
        }
        for _ in 0..self.free_loops {
            out.push(LinkDiagram::new_unchecked(Vec::new(), Vec::new(), 1));
        }
        out
    }

    /// Mirror image: every crossing switched. Arc labels are unchanged.
    pub fn mirror(&self) -> LinkDiagram {
        let mut d = self.clone();
        for x in 0..d.crossings.len() {
            d.switch_crossing_in_place(x);
        }
        d
    }

    /// Switches over and under strands at crossing `x` (a "crossing
    /// change"); the sign flips.
    pub fn change_crossing(&self, x: usize) -> Result<LinkDiagram, KnotError> {
        if x >= self.crossings.len() {
            return Err(KnotError::UnknownCrossing(x));
        }
        let mut d = self.clone();
        d.switch_crossing_in_place(x);
        Ok(d)
    }

    fn switch_crossing_in_place(&mut self, x: usize) {
        let c = self.crossings[x];
        let [a, b, cc, dd] = c.arcs;
        // Rotate the tuple so the old over-in lands at position 0; the old
        // under strand becomes the over strand with unchanged direction.
        self.crossings[x] = if c.over_in == 3 {
            Crossing::new([dd, a, b, cc], 1)
        } else {
            Crossing::new([b, cc, dd, a], 3)
        };
    }

    /// Reverses the orientation of arc-bearing component `i`, renumbering
    /// its arcs within the same range.
    pub fn reverse_component(&self, i: usize) -> Result<LinkDiagram, KnotError> {
        let &(f, l) = self.ranges.get(i).ok_or(KnotError::UnknownComponent(i))?;
        let in_comp = |a: ArcId| f <= a && a <= l;
        let mut crossings = Vec::with_capacity(self.crossings.len());
        for c in &self.crossings {
            let under_rev = in_comp(c.under_in());
            let over_rev = in_comp(c.over_in_arc());
            // Reversing a passage swaps its in/out ends. Swapping the under
            // passage moves the new under-in two counterclockwise steps
            // away, so the tuple rotates by two.
            let (mut arcs, mut over_in) = (c.arcs, c.over_in);
            if under_rev {
                arcs = [arcs[2], arcs[3], arcs[0], arcs[1]];
            }
            if under_rev != over_rev {
                over_in = if over_in == 1 { 3 } else { 1 };
            }
            // Relabel: arc a in the range becomes f + l - a, making the new
            // successor run against the old direction.
            for a in arcs.iter_mut() {
                if in_comp(*a) {
                    *a = f + l - *a;
                }
            }
            crossings.push(Crossing::new(arcs, over_in));
        }
        Ok(LinkDiagram { crossings, ranges: self.ranges.clone(), free_loops: self.free_loops })
    }

    /// Renumbers the arcs of component `i` so the arc currently labeled
    /// `f + shift` becomes the first arc of the range. Pure relabeling.
    pub fn rotate_basepoint(&self, i: usize, shift: u32) -> Result<LinkDiagram, KnotError> {
        let &(f, l) = self.ranges.get(i).ok_or(KnotError::UnknownComponent(i))?;
        let k = l - f + 1;
        let shift = shift % k;
        if shift == 0 {
            return Ok(self.clone());
        }
        let map = |a: ArcId| {
            if f <= a && a <= l {
                f + (a - f + k - shift) % k
            } else {
                a
            }
        };
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing::new([map(c.arcs[0]), map(c.arcs[1]), map(c.arcs[2]), map(c.arcs[3])], c.over_in))
            .collect();
        Ok(LinkDiagram { crossings, ranges: self.ranges.clone(), free_loops: self.free_loops })
    }

    /// Renumbers components: arc-bearing component `perm[i]` of `self`
    /// becomes component `i` of the result, arcs relabeled into the new
    /// contiguous blocks. `perm` must be a permutation of the arc-bearing
    /// component indices.
    pub fn permute_components(&self, perm: &[usize]) -> Result<LinkDiagram, KnotError> {
        let n = self.ranges.len();
        if perm.len() != n {
            return Err(KnotError::Config(format!(
                "permutation length {} does not match {} arc components",
                perm.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(KnotError::Config("not a permutation of component indices".into()));
            }
            seen[p] = true;
        }
        let mut map = vec![0 as ArcId; self.arc_count() + 1];
        let mut ranges = Vec::with_capacity(n);
        let mut next: ArcId = 1;
        for &src in perm {
            let (f, l) = self.ranges[src];
            let k = l - f + 1;
            for a in f..=l {
                map[a as usize] = next + (a - f);
            }
            ranges.push((next, next + k - 1));
            next += k;
        }
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                Crossing::new(
                    [
                        map[c.arcs[0] as usize],
                        map[c.arcs[1] as usize],
                        map[c.arcs[2] as usize],
                        map[c.arcs[3] as usize],
                    ],
                    c.over_in,
                )
            })
            .collect();
        Ok(LinkDiagram { crossings, ranges, free_loops: self.free_loops })
    }

    /// The sub-diagram spanned by the selected components: all other
    /// components are deleted, and crossings they participated in are
    /// smoothed away along the surviving strand. Free-loop components of
    /// `self` may be selected by their indices past the arc-bearing ones.
    pub fn extract_components(&self, keep: &[usize]) -> Result<LinkDiagram, KnotError> {
        let n = self.component_count();
        for &k in keep {
            if k >= n {
                return Err(KnotError::UnknownComponent(k));
            }
        }
        let kept_arc: Vec<usize> =
            keep.iter().copied().filter(|&k| k < self.ranges.len()).collect();
        let kept_free = keep.iter().filter(|&&k| k >= self.ranges.len()).count();

        // A crossing survives iff both its strands lie on kept components.
        let mut keep_crossing = vec![false; self.crossings.len()];
        for (x, _) in self.crossings.iter().enumerate() {
            let info = self.crossing_info(x)?;
            keep_crossing[x] = kept_arc.contains(&info.over_component)
                && kept_arc.contains(&info.under_component);
        }

        // Walk each kept component; arcs merge across dropped crossings.
        // new_label[a] = merged arc id for old arc a (0 = unassigned).
        let mut new_label = vec![0 as ArcId; self.arc_count() + 1];
        let mut ranges = Vec::new();
        let mut extra_free = 0usize;
        let mut next: ArcId = 1;

        // Where does each arc's head sit? (crossing, port)
        let mut head_at = vec![(usize::MAX, 0u8); self.arc_count() + 1];
        for (x, c) in self.crossings.iter().enumerate() {
            head_at[c.under_in() as usize] = (x, 0);
            head_at[c.over_in_arc() as usize] = (x, c.over_in);
        }

        for &ci in &kept_arc {
            let (f, l) = self.ranges[ci];
            // Count kept passages along this component.
            let kept_passages = (f..=l).filter(|&a| keep_crossing[head_at[a as usize].0]).count();
            if kept_passages == 0 {
                extra_free += 1;
                continue;
            }
            let first = next;
            // Start numbering right after a kept passage: find the first
            // arc whose predecessor's head sits at a kept crossing.
            let start = (f..=l)
                .find(|&a| keep_crossing[head_at[self.pred(a) as usize].0])
                .expect("component has a kept passage");
            let mut cur = start;
            let mut label = next;
            loop {
                new_label[cur as usize] = label;
                if keep_crossing[head_at[cur as usize].0] {
                    label += 1;
                }
                cur = self.succ(cur);
                if cur == start {
                    break;
                }
            }
            debug_assert_eq!(label, first + kept_passages as ArcId);
            ranges.push((first, first + kept_passages as ArcId - 1));
            next = first + kept_passages as ArcId;
        }

        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(x, _)| keep_crossing[x])
            .map(|(_, c)| {
                Crossing::new(
                    [
                        new_label[c.arcs[0] as usize],
                        new_label[c.arcs[1] as usize],
                        new_label[c.arcs[2] as usize],
                        new_label[c.arcs[3] as usize],
                    ],
                    c.over_in,
                )
            })
            .collect();
        LinkDiagram::new(crossings, ranges, kept_free + extra_free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn hopf_fixture_signs_and_linking() {
        let d = construct::torus2(2);
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert!(d.is_valid(), "{:?}", d.validate().violations);
        assert_eq!(d.sign(0).unwrap(), 1);
        assert_eq!(d.sign(1).unwrap(), 1);
        assert_eq!(d.writhe(), 2);
        let lk = d.linking_matrix();
        assert_eq!(lk[0][1], 1);
        assert_eq!(lk[1][0], 1);
        assert_eq!(lk[0][0], 0);
    }

    #[test]
    fn right_trefoil_fixture() {
        let d = construct::torus2(3);
        assert!(d.is_valid(), "{:?}", d.validate().violations);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 3);
        assert_eq!(
            d.crossings().iter().map(|c| c.arcs).collect::<Vec<_>>(),
            vec![[1, 5, 2, 4], [5, 3, 6, 2], [3, 1, 4, 6]]
        );
        assert!(d.crossings().iter().all(|c| c.sign() == 1));
    }

    #[test]
    fn kink_signs() {
        let pos = LinkDiagram::new(vec![Crossing::new([1, 1, 2, 2], 3)], vec![(1, 2)], 0).unwrap();
        assert_eq!(pos.writhe(), 1);
        let neg = LinkDiagram::new(vec![Crossing::new([1, 2, 2, 1], 1)], vec![(1, 2)], 0).unwrap();
        assert_eq!(neg.writhe(), -1);
    }

    #[test]
    fn mirror_negates_signs_and_writhe() {
        let d = construct::torus2(3);
        let m = d.mirror();
        assert!(m.is_valid(), "{:?}", m.validate().violations);
        assert_eq!(m.writhe(), -3);
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn crossing_change_flips_one_sign() {
        let d = construct::torus2(2);
        let e = d.change_crossing(0).unwrap();
        assert!(e.is_valid(), "{:?}", e.validate().violations);
        assert_eq!(e.sign(0).unwrap(), -1);
        assert_eq!(e.sign(1).unwrap(), 1);
        assert_eq!(e.linking_matrix()[0][1], 0);
        assert_eq!(e.change_crossing(0).unwrap(), d);
    }

    #[test]
    fn reverse_component_negates_linking_row() {
        let d = construct::torus2(4);
        assert_eq!(d.linking_matrix()[0][1], 2);
        let r = d.reverse_component(0).unwrap();
        assert!(r.is_valid(), "{:?}", r.validate().violations);
        assert_eq!(r.linking_matrix()[0][1], -2);
        // Reversing a knot's orientation preserves every self-crossing sign.
        let k = construct::torus2(3).reverse_component(0).unwrap();
        assert!(k.is_valid(), "{:?}", k.validate().violations);
        assert_eq!(k.writhe(), 3);
    }

    #[test]
    fn rotate_basepoint_is_a_relabeling() {
        let d = construct::torus2(3);
        let r = d.rotate_basepoint(0, 2).unwrap();
        assert!(r.is_valid(), "{:?}", r.validate().violations);
        assert_eq!(r.writhe(), 3);
        assert_eq!(d.rotate_basepoint(0, 6).unwrap(), d);
    }

    #[test]
    fn validation_catches_duplicate_arc() {
        let bad = LinkDiagram {
            crossings: vec![
                Crossing::new([1, 5, 2, 4], 3),
                Crossing::new([5, 3, 6, 2], 3),
                Crossing::new([3, 1, 4, 4], 3),
            ],
            ranges: vec![(1, 6)],
            free_loops: 0,
        };
        let report = bad.validate();
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.contains("arc")));
    }

    #[test]
    fn extract_component_of_hopf_is_unknot() {
        let d = construct::torus2(2);
        let k = d.extract_components(&[0]).unwrap();
        assert_eq!(k.crossing_count(), 0);
        assert_eq!(k.component_count(), 1);
        assert_eq!(k.free_loops(), 1);
    }

    #[test]
    fn extract_keeps_self_crossings() {
        // Trefoil split-union a free loop; keeping the trefoil keeps its crossings.
        let d = construct::disjoint_union(&construct::torus2(3), &construct::unknot(1));
        let k = d.extract_components(&[0]).unwrap();
        assert_eq!(k.crossing_count(), 3);
        assert_eq!(k.writhe(), 3);
        let loop_only = d.extract_components(&[1]).unwrap();
        assert_eq!(loop_only.crossing_count(), 0);
        assert_eq!(loop_only.free_loops(), 1);
    }

    #[test]
    fn permute_components_renumbers() {
        let d = construct::torus2(2);
        let p = d.permute_components(&[1, 0]).unwrap();
        assert!(p.is_valid(), "{:?}", p.validate().violations);
        assert_eq!(p.linking_matrix()[0][1], 1);
        assert_eq!(p.permute_components(&[1, 0]).unwrap(), d);
    }
}
