//! Canonical forms for diagram comparison and memoization.
//!
//! Arc labels carry no information beyond the basepoint chosen on each
//! component, and crossing order none at all, so equality of diagrams is
//! decided by minimizing an encoding over the allowed relabelings.
//! Options widen the orbit to component reorderings, reversals, and the
//! mirror when the client wants equivalence classes instead of labeled
//! diagrams.

use crate::diagram::LinkDiagram;
use itertools::Itertools;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonOpts {
    /// Treat component order as irrelevant.
    pub permute_components: bool,
    /// Treat each component's orientation as irrelevant.
    pub allow_reversal: bool,
    /// Identify a diagram with its mirror image.
    pub allow_mirror: bool,
}

impl CanonOpts {
    /// Only basepoint shifts: equality means "the same labeled diagram".
    pub const LABELS_ONLY: CanonOpts = CanonOpts {
        permute_components: false,
        allow_reversal: false,
        allow_mirror: false,
    };

    /// Everything free: the coarsest key, suitable for memo tables of
    /// quantities invariant under reversal, reordering, and mirroring.
    pub const FULL: CanonOpts = CanonOpts {
        permute_components: true,
        allow_reversal: true,
        allow_mirror: true,
    };

    /// Reordering and reversal free, chirality kept.
    pub const UNORIENTED: CanonOpts = CanonOpts {
        permute_components: true,
        allow_reversal: true,
        allow_mirror: false,
    };
}

fn encode(d: &LinkDiagram) -> Vec<u32> {
    let mut rows: Vec<[u32; 5]> = d
        .crossings()
        .iter()
        .map(|c| [c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3], c.over_in as u32])
        .collect();
    rows.sort_unstable();
    let mut key = Vec::with_capacity(rows.len() * 5 + d.ranges().len() * 2 + 3);
    for r in rows {
        key.extend_from_slice(&r);
    }
    key.push(u32::MAX);
    for &(f, l) in d.ranges() {
        key.push(f);
        key.push(l);
    }
    key.push(u32::MAX);
    key.push(d.free_loops() as u32);
    key
}

/// The minimal encoding of `d` over the orbit allowed by `opts`.
pub fn canonical_key(d: &LinkDiagram, opts: CanonOpts) -> Vec<u32> {
    canonicalize(d, opts).0
}

/// A representative diagram whose encoding is the canonical key.
pub fn canonical_form(d: &LinkDiagram, opts: CanonOpts) -> LinkDiagram {
    canonicalize(d, opts).1
}

/// True when the two inputs are the same diagram up to relabeling
/// (basepoint shifts and crossing order only).
pub fn same_diagram(a: &LinkDiagram, b: &LinkDiagram) -> bool {
    if a.crossing_count() != b.crossing_count()
        || a.ranges().len() != b.ranges().len()
        || a.free_loops() != b.free_loops()
    {
        return false;
    }
    canonical_key(a, CanonOpts::LABELS_ONLY) == canonical_key(b, CanonOpts::LABELS_ONLY)
}

fn canonicalize(d: &LinkDiagram, opts: CanonOpts) -> (Vec<u32>, LinkDiagram) {
    let k = d.ranges().len();
    let mirrors: &[bool] = if opts.allow_mirror { &[false, true] } else { &[false] };
    let perms: Vec<Vec<usize>> = if opts.permute_components {
        (0..k).permutations(k).collect()
    } else {
        vec![(0..k).collect()]
    };
    let rev_masks: u32 = if opts.allow_reversal { 1 << k } else { 1 };

    let mut best: Option<(Vec<u32>, LinkDiagram)> = None;
    for &mir in mirrors {
        let m = if mir { d.mirror() } else { d.clone() };
        for perm in &perms {
            let p = m.permute_components(perm).expect("permutation of all components");
            for mask in 0..rev_masks {
                let mut r = p.clone();
                for i in 0..k {
                    if mask & (1 << i) != 0 {
                        r = r.reverse_component(i).expect("component index in range");
                    }
                }
                let lens: Vec<u32> = r.ranges().iter().map(|&(f, l)| l - f + 1).collect();
                let total: u64 = lens.iter().map(|&l| l as u64).product();
                for mut idx in 0..total {
                    let mut q = r.clone();
                    for (i, &len) in lens.iter().enumerate() {
                        let s = (idx % len as u64) as u32;
                        idx /= len as u64;
                        if s > 0 {
                            q = q.rotate_basepoint(i, s).expect("component index in range");
                        }
                    }
                    let key = encode(&q);
                    if best.as_ref().is_none_or(|(b, _)| key < *b) {
                        best = Some((key, q));
                    }
                }
            }
        }
    }
    let (key, q) = best.expect("at least one relabeling");
    let mut crossings = q.crossings().to_vec();
    crossings.sort_unstable_by_key(|c| (c.arcs, c.over_in));
    let canon = LinkDiagram::new_unchecked(crossings, q.ranges().to_vec(), q.free_loops());
    (key, canon)
}
