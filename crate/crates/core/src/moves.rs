//! Reidemeister moves: enumeration, application, classification.
//!
//! Crossings are addressed by index, arcs by label, and faces by their
//! position in the canonical face list of the *current* diagram (faces
//! are sorted by smallest dart, so the numbering is reproducible from
//! the diagram alone). Applying a move renumbers arcs; face and
//! crossing ids in later moves always refer to the diagram produced by
//! the previous step.

use std::collections::HashSet;
use std::fmt;

use crate::construct::rebuild_from_cycles;
use crate::diagram::{ArcId, Crossing, LinkDiagram};
use crate::error::KnotError;
use crate::faces::{arc_at, arc_ends, faces, Face};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// What an RI addition twists: an existing arc, or a free loop (which
/// turns into a one-crossing component).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum R1Target {
    Arc(ArcId),
    Loop { component: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveEvent {
    /// Twist a kink into an arc. The new crossing is positive exactly
    /// when `side == Left` agrees with `over`.
    R1Add { target: R1Target, side: Side, over: bool },
    /// Untwist the kink at this crossing.
    R1Remove { crossing: usize },
    /// Push the strand at dart `over` of this face across the strand at
    /// dart `under`. The two darts must carry distinct arcs.
    R2Add { face: usize, over: usize, under: usize },
    /// Pull apart the removable bigon at this face.
    R2Remove { face: usize },
    /// Slide the strand across the trigon at this face.
    R3 { face: usize },
}

impl MoveEvent {
    /// Change in crossing count caused by the move.
    pub fn crossing_delta(&self) -> i64 {
        match self {
            MoveEvent::R1Add { .. } => 1,
            MoveEvent::R1Remove { .. } => -1,
            MoveEvent::R2Add { .. } => 2,
            MoveEvent::R2Remove { .. } => -2,
            MoveEvent::R3 { .. } => 0,
        }
    }

    pub fn is_reducing(&self) -> bool {
        self.crossing_delta() < 0
    }
}

impl fmt::Display for MoveEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side_char = |s: Side| if s == Side::Left { 'L' } else { 'R' };
        match *self {
            MoveEvent::R1Add { target, side, over } => {
                match target {
                    R1Target::Arc(a) => write!(f, "R1+ arc={a}")?,
                    R1Target::Loop { component } => write!(f, "R1+ comp={component}")?,
                }
                write!(f, " side={} over={}", side_char(side), u8::from(over))
            }
            MoveEvent::R1Remove { crossing } => write!(f, "R1- crossing={crossing}"),
            MoveEvent::R2Add { face, over, under } => {
                write!(f, "R2+ face={face} over={over} under={under}")
            }
            MoveEvent::R2Remove { face } => write!(f, "R2- face={face}"),
            MoveEvent::R3 { face } => write!(f, "R3 face={face}"),
        }
    }
}

/// Parse one move in the textual grammar, e.g. `R1+ arc=7 side=L over=1`.
/// `over=` defaults to 1 for RI additions.
pub fn parse_move(line: &str) -> Result<MoveEvent, String> {
    let mut toks = line.split_whitespace();
    let op = toks.next().ok_or("empty move")?;
    let mut kv: Vec<(&str, &str)> = Vec::new();
    for t in toks {
        let (k, v) = t
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{t}`"))?;
        kv.push((k, v));
    }
    let allowed: &[&str] = match op {
        "R1+" => &["arc", "comp", "side", "over"],
        "R1-" => &["crossing"],
        "R2+" => &["face", "over", "under"],
        "R2-" => &["face"],
        "R3" => &["face"],
        _ => return Err(format!("unknown move `{op}`")),
    };
    for (k, _) in &kv {
        if !allowed.contains(k) {
            return Err(format!("unexpected key `{k}` for {op}"));
        }
    }
    let get = |key: &str| kv.iter().find(|(k, _)| *k == key).map(|&(_, v)| v);
    let num = |key: &str| -> Result<usize, String> {
        get(key)
            .ok_or_else(|| format!("missing {key}="))?
            .parse()
            .map_err(|_| format!("bad {key} value"))
    };
    match op {
        "R1+" => {
            let side = match get("side").ok_or("missing side=")? {
                "L" => Side::Left,
                "R" => Side::Right,
                s => return Err(format!("bad side `{s}` (expected L or R)")),
            };
            let over = match get("over") {
                None | Some("1") => true,
                Some("0") => false,
                Some(s) => return Err(format!("bad over `{s}` (expected 0 or 1)")),
            };
            let target = match (get("arc"), get("comp")) {
                (Some(a), None) => {
                    R1Target::Arc(a.parse().map_err(|_| "bad arc value".to_string())?)
                }
                (None, Some(_)) => R1Target::Loop { component: num("comp")? },
                _ => return Err("R1+ needs exactly one of arc= or comp=".to_string()),
            };
            Ok(MoveEvent::R1Add { target, side, over })
        }
        "R1-" => Ok(MoveEvent::R1Remove { crossing: num("crossing")? }),
        "R2+" => Ok(MoveEvent::R2Add {
            face: num("face")?,
            over: num("over")?,
            under: num("under")?,
        }),
        "R2-" => Ok(MoveEvent::R2Remove { face: num("face")? }),
        "R3" => Ok(MoveEvent::R3 { face: num("face")? }),
        _ => unreachable!(),
    }
}

/// Parse a move file: one move per line, `#` comments, blank lines ok.
pub fn parse_moves(text: &str) -> Result<Vec<MoveEvent>, KnotError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_move(line).map_err(|msg| KnotError::parse(i + 1, msg))?);
    }
    Ok(out)
}

pub fn moves_to_text(moves: &[MoveEvent]) -> String {
    let mut s = String::new();
    for m in moves {
        s.push_str(&m.to_string());
        s.push('\n');
    }
    s
}

fn cycles_of(d: &LinkDiagram) -> Vec<Vec<ArcId>> {
    d.ranges().iter().map(|&(f, l)| (f..=l).collect()).collect()
}

fn insert_after(cycle: &mut Vec<ArcId>, a: ArcId, new: &[ArcId]) {
    let pos = cycle
        .iter()
        .position(|&x| x == a)
        .expect("arc present in its component cycle");
    for (k, &v) in new.iter().enumerate() {
        cycle.insert(pos + 1 + k, v);
    }
}

/// Crossing index and slot where `a` flows in (its head).
fn head_slot(d: &LinkDiagram, a: ArcId) -> Result<(usize, usize), KnotError> {
    for (x, c) in d.crossings().iter().enumerate() {
        if c.arcs[0] == a {
            return Ok((x, 0));
        }
        if c.arcs[c.over_in as usize] == a {
            return Ok((x, c.over_in as usize));
        }
    }
    Err(KnotError::UnknownArc(a))
}

/// For a kink crossing: (loop arc, incoming outer arc, outgoing outer arc).
fn kink_parts(c: &Crossing) -> Option<(ArcId, ArcId, ArcId)> {
    let oi = c.over_in as usize;
    let oo = (oi + 2) % 4;
    if c.arcs[2] == c.arcs[oi] {
        // under passage first: in -> loop -> out over the top
        Some((c.arcs[2], c.arcs[0], c.arcs[oo]))
    } else if c.arcs[oo] == c.arcs[0] {
        Some((c.arcs[0], c.arcs[oi], c.arcs[2]))
    } else {
        None
    }
}

fn is_removable_bigon(f: &Face) -> bool {
    f.len() == 2
        && f.darts[0].crossing != f.darts[1].crossing
        && f.darts[0].port % 2 != f.darts[1].port % 2
}

/// A trigon admits the slide move when its three crossings are distinct
/// and one side runs over at both ends while another runs under at both
/// ends (this forces the third side to be mixed). Alternating trigons
/// have three mixed sides and admit no slide.
fn is_slidable_trigon(f: &Face) -> bool {
    if f.len() != 3 {
        return false;
    }
    let (a, b, c) = (f.darts[0].crossing, f.darts[1].crossing, f.darts[2].crossing);
    if a == b || b == c || a == c {
        return false;
    }
    let (mut oo, mut uu) = (0, 0);
    for k in 0..3 {
        // side k starts at port p of its first crossing and lands next
        // to port p' of the following one; odd ports sit on the over
        // strand, and the landing port is (p' + 3) % 4.
        let start_over = f.darts[k].port % 2 == 1;
        let end_over = f.darts[(k + 1) % 3].port.is_multiple_of(2);
        if start_over && end_over {
            oo += 1;
        }
        if !start_over && !end_over {
            uu += 1;
        }
    }
    oo >= 1 && uu >= 1
}

/// Every move applicable to `d`: removals and slides first, then the
/// crossing-increasing generators (four kink chiralities per arc and
/// per free loop, and one RII push per ordered co-facial dart pair).
pub fn enumerate_moves(d: &LinkDiagram) -> Vec<MoveEvent> {
    let mut out = Vec::new();
    for (x, c) in d.crossings().iter().enumerate() {
        if kink_parts(c).is_some() {
            out.push(MoveEvent::R1Remove { crossing: x });
        }
    }
    let fs = faces(d);
    for (fi, f) in fs.iter().enumerate() {
        if is_removable_bigon(f) {
            out.push(MoveEvent::R2Remove { face: fi });
        }
    }
    for (fi, f) in fs.iter().enumerate() {
        if is_slidable_trigon(f) {
            out.push(MoveEvent::R3 { face: fi });
        }
    }
    for a in 1..=d.arc_count() as ArcId {
        for side in [Side::Left, Side::Right] {
            for over in [true, false] {
                out.push(MoveEvent::R1Add { target: R1Target::Arc(a), side, over });
            }
        }
    }
    if d.free_loops() > 0 {
        let component = d.ranges().len();
        for side in [Side::Left, Side::Right] {
            for over in [true, false] {
                out.push(MoveEvent::R1Add { target: R1Target::Loop { component }, side, over });
            }
        }
    }
    for (fi, f) in fs.iter().enumerate() {
        for i in 0..f.len() {
            for j in 0..f.len() {
                if i != j && arc_at(d, f.darts[i]) != arc_at(d, f.darts[j]) {
                    out.push(MoveEvent::R2Add { face: fi, over: i, under: j });
                }
            }
        }
    }
    out
}

/// Apply one move, producing a freshly numbered diagram.
pub fn apply(d: &LinkDiagram, e: &MoveEvent) -> Result<LinkDiagram, KnotError> {
    match *e {
        MoveEvent::R1Add { target, side, over } => r1_add(d, target, side, over),
        MoveEvent::R1Remove { crossing } => r1_remove(d, crossing),
        MoveEvent::R2Add { face, over, under } => r2_add(d, face, over, under),
        MoveEvent::R2Remove { face } => r2_remove(d, face),
        MoveEvent::R3 { face } => r3(d, face),
    }
}

fn r1_add(d: &LinkDiagram, target: R1Target, side: Side, over: bool) -> Result<LinkDiagram, KnotError> {
    let max = d.arc_count() as ArcId;
    match target {
        R1Target::Arc(a) => {
            let comp = d.component_of_arc(a)?;
            let (v, w) = (max + 1, max + 2);
            let mut crossings = d.crossings().to_vec();
            let (hx, hs) = head_slot(d, a)?;
            crossings[hx].arcs[hs] = w;
            // the arc becomes a -> v -> w with the loop arc v doubled
            // back through the new crossing
            let c = match (over, side) {
                (true, Side::Left) => Crossing::new([a, w, v, v], 3),
                (true, Side::Right) => Crossing::new([a, v, v, w], 1),
                (false, Side::Left) => Crossing::new([v, a, w, v], 1),
                (false, Side::Right) => Crossing::new([v, v, w, a], 3),
            };
            crossings.push(c);
            let mut cycles = cycles_of(d);
            insert_after(&mut cycles[comp], a, &[v, w]);
            rebuild_from_cycles(&crossings, &cycles, d.free_loops())
        }
        R1Target::Loop { component } => {
            if component < d.ranges().len() || component >= d.component_count() {
                return Err(KnotError::Inapplicable(format!(
                    "component {component} is not a free loop"
                )));
            }
            let (x, y) = (max + 1, max + 2);
            let mut crossings = d.crossings().to_vec();
            let c = match (over, side) {
                (true, Side::Left) => Crossing::new([x, x, y, y], 3),
                (true, Side::Right) => Crossing::new([x, y, y, x], 1),
                (false, Side::Left) => Crossing::new([y, x, x, y], 1),
                (false, Side::Right) => Crossing::new([y, y, x, x], 3),
            };
            crossings.push(c);
            let mut cycles = cycles_of(d);
            cycles.push(vec![x, y]);
            rebuild_from_cycles(&crossings, &cycles, d.free_loops() - 1)
        }
    }
}

fn r1_remove(d: &LinkDiagram, x: usize) -> Result<LinkDiagram, KnotError> {
    let c = d.crossings().get(x).ok_or(KnotError::UnknownCrossing(x))?;
    let (lam, alpha, beta) = kink_parts(c)
        .ok_or_else(|| KnotError::Inapplicable(format!("crossing {x} is not a kink")))?;
    let comp = d.component_of_arc(lam)?;
    let mut crossings: Vec<Crossing> = d
        .crossings()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != x)
        .map(|(_, c)| *c)
        .collect();
    if beta != alpha {
        for c in &mut crossings {
            for s in 0..4 {
                if c.arcs[s] == beta {
                    c.arcs[s] = alpha;
                }
            }
        }
    }
    let mut cycles = cycles_of(d);
    cycles[comp].retain(|&a| a != lam && (alpha == beta || a != beta));
    finish_removal(crossings, cycles, d.free_loops())
}

/// Drop cycles whose component no longer meets any crossing (they turn
/// into free loops) and renumber what is left.
fn finish_removal(
    crossings: Vec<Crossing>,
    mut cycles: Vec<Vec<ArcId>>,
    mut free: usize,
) -> Result<LinkDiagram, KnotError> {
    let attached: HashSet<ArcId> = crossings.iter().flat_map(|c| c.arcs).collect();
    cycles.retain(|cy| {
        if cy.iter().any(|a| attached.contains(a)) {
            true
        } else {
            free += 1;
            false
        }
    });
    rebuild_from_cycles(&crossings, &cycles, free)
}

fn uf_find(parent: &mut [ArcId], a: ArcId) -> ArcId {
    let mut r = a;
    while parent[r as usize] != r {
        r = parent[r as usize];
    }
    let mut c = a;
    while parent[c as usize] != r {
        let n = parent[c as usize];
        parent[c as usize] = r;
        c = n;
    }
    r
}

fn uf_union(parent: &mut [ArcId], a: ArcId, b: ArcId) {
    let ra = uf_find(parent, a);
    let rb = uf_find(parent, b);
    if ra != rb {
        parent[rb as usize] = ra;
    }
}

/// The outer arcs of the strand running through both bigon crossings:
/// (incoming before the bigon, outgoing after it).
fn strand_outer(
    p_io: (ArcId, ArcId),
    q_io: (ArcId, ArcId),
    mid: ArcId,
) -> Result<(ArcId, ArcId), KnotError> {
    if p_io.1 == mid && q_io.0 == mid {
        Ok((p_io.0, q_io.1))
    } else if q_io.1 == mid && p_io.0 == mid {
        Ok((q_io.0, p_io.1))
    } else {
        Err(KnotError::Inapplicable(
            "bigon side does not run between its two crossings".into(),
        ))
    }
}

fn r2_remove(d: &LinkDiagram, face: usize) -> Result<LinkDiagram, KnotError> {
    let fs = faces(d);
    let f = fs
        .get(face)
        .ok_or_else(|| KnotError::Inapplicable(format!("no face {face}")))?;
    if !is_removable_bigon(f) {
        return Err(KnotError::Inapplicable(format!(
            "face {face} is not a removable bigon"
        )));
    }
    let (d1, d2) = (f.darts[0], f.darts[1]);
    let (p, q) = (d1.crossing, d2.crossing);
    let (m1, m2) = (arc_at(d, d1), arc_at(d, d2));
    // odd ports sit on the over strand
    let (mo, mu) = if d1.port % 2 == 1 { (m1, m2) } else { (m2, m1) };
    let over_io = |x: usize| {
        let c = &d.crossings()[x];
        (c.over_in_arc(), c.over_out_arc())
    };
    let under_io = |x: usize| {
        let c = &d.crossings()[x];
        (c.under_in(), c.under_out())
    };
    let (sa, sb) = strand_outer(over_io(p), over_io(q), mo)?;
    let (ta, tb) = strand_outer(under_io(p), under_io(q), mu)?;
    let mut parent: Vec<ArcId> = (0..=d.arc_count() as ArcId).collect();
    uf_union(&mut parent, sa, mo);
    uf_union(&mut parent, sa, sb);
    uf_union(&mut parent, ta, mu);
    uf_union(&mut parent, ta, tb);
    let mut crossings: Vec<Crossing> = d
        .crossings()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != p && i != q)
        .map(|(_, c)| *c)
        .collect();
    for c in &mut crossings {
        for s in 0..4 {
            c.arcs[s] = uf_find(&mut parent, c.arcs[s]);
        }
    }
    let mut cycles = cycles_of(d);
    for cy in &mut cycles {
        cy.retain(|&a| uf_find(&mut parent, a) == a);
    }
    finish_removal(crossings, cycles, d.free_loops())
}

fn r2_add(d: &LinkDiagram, face: usize, over: usize, under: usize) -> Result<LinkDiagram, KnotError> {
    let fs = faces(d);
    let f = fs
        .get(face)
        .ok_or_else(|| KnotError::Inapplicable(format!("no face {face}")))?;
    if over >= f.len() || under >= f.len() || over == under {
        return Err(KnotError::Inapplicable(format!(
            "face {face} has no dart pair ({over}, {under})"
        )));
    }
    let (ds, dt) = (f.darts[over], f.darts[under]);
    let (s, t) = (arc_at(d, ds), arc_at(d, dt));
    if s == t {
        return Err(KnotError::Inapplicable(
            "RII push needs two distinct arcs".into(),
        ));
    }
    let ends = arc_ends(d);
    // Walk flags: does the face walk at this dart run with the arc?
    let ws = ends.tail[s as usize] == ds;
    let wt = ends.tail[t as usize] == dt;
    let max = d.arc_count() as ArcId;
    let (n1, n2, m1, m2) = (max + 1, max + 2, max + 3, max + 4);
    let mut crossings = d.crossings().to_vec();
    let (hx, hs) = head_slot(d, s)?;
    crossings[hx].arcs[hs] = n2;
    let (tx, tslot) = head_slot(d, t)?;
    crossings[tx].arcs[tslot] = m2;
    // pieces in walk order around the face (intrinsically the strands
    // run s -> n1 -> n2 and t -> m1 -> m2)
    let (s_a, s_m, s_b) = if ws { (s, n1, n2) } else { (n2, n1, s) };
    let (t_a, t_m, t_b) = if wt { (t, m1, m2) } else { (m2, m1, t) };
    // crossing P sits first along the s walk and second along the t
    // walk; Q the other way round. Signs always come out opposite
    // (P is negative exactly when ws == wt).
    let (pc, qc) = match (ws, wt) {
        (true, true) => (
            Crossing::new([t_m, s_a, t_b, s_m], 1),
            Crossing::new([t_a, s_b, t_m, s_m], 3),
        ),
        (true, false) => (
            Crossing::new([t_b, s_m, t_m, s_a], 3),
            Crossing::new([t_m, s_m, t_a, s_b], 1),
        ),
        (false, true) => (
            Crossing::new([t_m, s_a, t_b, s_m], 3),
            Crossing::new([t_a, s_b, t_m, s_m], 1),
        ),
        (false, false) => (
            Crossing::new([t_b, s_m, t_m, s_a], 1),
            Crossing::new([t_m, s_m, t_a, s_b], 3),
        ),
    };
    crossings.push(pc);
    crossings.push(qc);
    let mut cycles = cycles_of(d);
    let cs = d.component_of_arc(s)?;
    insert_after(&mut cycles[cs], s, &[n1, n2]);
    let ct = d.component_of_arc(t)?;
    insert_after(&mut cycles[ct], t, &[m1, m2]);
    rebuild_from_cycles(&crossings, &cycles, d.free_loops())
}

fn r3(d: &LinkDiagram, face: usize) -> Result<LinkDiagram, KnotError> {
    let fs = faces(d);
    let f = fs
        .get(face)
        .ok_or_else(|| KnotError::Inapplicable(format!("no face {face}")))?;
    if !is_slidable_trigon(f) {
        return Err(KnotError::Inapplicable(format!(
            "face {face} is not a slidable trigon"
        )));
    }
    let ends = arc_ends(d);
    let mut new_cr = d.crossings().to_vec();
    // Each side arc e swaps the order in which its strand visits the
    // two trigon crossings: before the slide it runs in1 -> e -> out2,
    // afterwards the outer arcs attach to the opposite crossings. The
    // twelve rewritten slots are pairwise distinct, so all reads come
    // from the snapshot.
    for k in 0..3 {
        let e = arc_at(d, f.darts[k]);
        let tail = ends.tail[e as usize];
        let head = ends.head[e as usize];
        let (c1, out1) = (tail.crossing, tail.port as usize);
        let (c2, in2) = (head.crossing, head.port as usize);
        let in1 = (out1 + 2) % 4;
        let out2 = (in2 + 2) % 4;
        let alpha = d.crossings()[c1].arcs[in1];
        let omega = d.crossings()[c2].arcs[out2];
        new_cr[c1].arcs[in1] = e;
        new_cr[c1].arcs[out1] = omega;
        new_cr[c2].arcs[in2] = alpha;
        new_cr[c2].arcs[out2] = e;
    }
    LinkDiagram::new(new_cr, d.ranges().to_vec(), d.free_loops())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R2Kind {
    /// The two strands run parallel through the bigon.
    Matched,
    /// The two strands run antiparallel.
    Unmatched,
}

impl fmt::Display for R2Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            R2Kind::Matched => "matched",
            R2Kind::Unmatched => "unmatched",
        })
    }
}

/// Classify an RII event (addition or removal) as matched or unmatched.
/// In both cases the two face darts involved tell the story: the face
/// walk anti-aligns the two sides of a bigon, so the strands are
/// parallel exactly when one dart runs with its arc and the other
/// against it.
pub fn classify_r2(d: &LinkDiagram, e: &MoveEvent) -> Result<R2Kind, KnotError> {
    let fs = faces(d);
    let (f, i, j) = match *e {
        MoveEvent::R2Add { face, over, under } => {
            let f = fs
                .get(face)
                .ok_or_else(|| KnotError::Inapplicable(format!("no face {face}")))?;
            if over >= f.len() || under >= f.len() || over == under {
                return Err(KnotError::Inapplicable(format!(
                    "face {face} has no dart pair ({over}, {under})"
                )));
            }
            (f, over, under)
        }
        MoveEvent::R2Remove { face } => {
            let f = fs
                .get(face)
                .ok_or_else(|| KnotError::Inapplicable(format!("no face {face}")))?;
            if !is_removable_bigon(f) {
                return Err(KnotError::Inapplicable(format!(
                    "face {face} is not a removable bigon"
                )));
            }
            (f, 0, 1)
        }
        _ => {
            return Err(KnotError::Inapplicable(
                "classification applies to RII events only".into(),
            ))
        }
    };
    let ends = arc_ends(d);
    let wi = ends.tail[arc_at(d, f.darts[i]) as usize] == f.darts[i];
    let wj = ends.tail[arc_at(d, f.darts[j]) as usize] == f.darts[j];
    Ok(if wi != wj { R2Kind::Matched } else { R2Kind::Unmatched })
}

/// First crossing-removing move in canonical order: kinks by crossing
/// index, then removable bigons by face index.
pub fn first_reduction(d: &LinkDiagram) -> Option<MoveEvent> {
    for (x, c) in d.crossings().iter().enumerate() {
        if kink_parts(c).is_some() {
            return Some(MoveEvent::R1Remove { crossing: x });
        }
    }
    for (fi, f) in faces(d).iter().enumerate() {
        if is_removable_bigon(f) {
            return Some(MoveEvent::R2Remove { face: fi });
        }
    }
    None
}

/// Greedy deterministic simplification: take reductions while any
/// exist; when stuck, probe each slide (in face order) and commit the
/// first one that exposes a reduction. Returns the diagram unchanged
/// when nothing helps, along with the moves taken (replayable with
/// `run_sequence`).
pub fn simplify_trace(d: &LinkDiagram) -> (LinkDiagram, Vec<MoveEvent>) {
    let mut cur = d.clone();
    let mut log = Vec::new();
    'outer: loop {
        if let Some(e) = first_reduction(&cur) {
            cur = apply(&cur, &e).expect("enumerated reduction applies");
            log.push(e);
            continue;
        }
        let fs = faces(&cur);
        for (fi, f) in fs.iter().enumerate() {
            if !is_slidable_trigon(f) {
                continue;
            }
            let e = MoveEvent::R3 { face: fi };
            let probe = apply(&cur, &e).expect("enumerated slide applies");
            if first_reduction(&probe).is_some() {
                cur = probe;
                log.push(e);
                continue 'outer;
            }
        }
        return (cur, log);
    }
}

pub fn simplify(d: &LinkDiagram) -> LinkDiagram {
    simplify_trace(d).0
}

/// Apply a move sequence, returning the diagram after every step.
/// Errors point at the offending step.
pub fn run_sequence(d: &LinkDiagram, moves: &[MoveEvent]) -> Result<Vec<LinkDiagram>, KnotError> {
    let mut out = Vec::with_capacity(moves.len());
    let mut cur = d.clone();
    for (i, e) in moves.iter().enumerate() {
        cur = apply(&cur, e).map_err(|src| KnotError::Step { index: i, source: Box::new(src) })?;
        out.push(cur.clone());
    }
    Ok(out)
}
