//! Seifert circles, genus of the resulting surface, and a symmetric
//! pairing carrying the link's signature and nullity.
//!
//! The circle count comes from the orientation-respecting smoothing of
//! every crossing. Capping circles with discs and rejoining them with
//! one twisted band per crossing yields a connected surface per
//! connected piece, of Euler characteristic circles - crossings, hence
//! genus (crossings - circles + 2 - components) / 2 per piece.
//!
//! The pairing is assembled from the region form ([`crate::goeritz`])
//! rather than from a basis of the surface itself: each piece
//! contributes its Goeritz matrix plus one diagonal +/-1 stabilizer per
//! type-II crossing, and every split beyond the first one zero block.
//! By construction its signature and nullity are the link's, so the
//! mirror image negates the signature.

use crate::diagram::LinkDiagram;
use crate::goeritz;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    /// Circles of the all-crossings oriented smoothing, free loops
    /// included.
    pub circles: usize,
    /// Genus of the spanning surface the circles generate, summed over
    /// connected pieces.
    pub genus: usize,
    /// Symmetric integer matrix whose signature and nullity equal the
    /// fields below; empty for crossing-free diagrams.
    pub pairing: Vec<Vec<i64>>,
    pub signature: i64,
    pub nullity: usize,
}

/// Circles produced by smoothing every crossing along the orientation.
pub fn seifert_circles(d: &LinkDiagram) -> usize {
    // At each crossing the incoming under-arc continues on the over-out
    // arc and the incoming over-arc on the under-out arc.
    let mut next = vec![0u32; d.arc_count() + 1];
    for c in d.crossings() {
        next[c.under_in() as usize] = c.over_out_arc();
        next[c.over_in_arc() as usize] = c.under_out();
    }
    let mut seen = vec![false; d.arc_count() + 1];
    let mut circles = d.free_loops();
    for start in 1..=d.arc_count() {
        if seen[start] {
            continue;
        }
        circles += 1;
        let mut a = start;
        while !seen[a] {
            seen[a] = true;
            a = next[a] as usize;
        }
    }
    circles
}

pub fn seifert(d: &LinkDiagram) -> SeifertData {
    let pieces = d.split_into_pieces();
    let mut circles = 0;
    let mut genus = 0;
    let mut signature = 0i64;
    let mut nullity = pieces.len().saturating_sub(1);
    let mut blocks: Vec<Vec<Vec<i64>>> = Vec::new();
    for p in &pieces {
        let s = seifert_circles(p);
        circles += s;
        let spare = p.crossing_count() + 2 - s - p.component_count();
        debug_assert_eq!(spare % 2, 0, "surface Euler characteristic parity");
        genus += spare / 2;

        let form = goeritz::connected_form(p);
        signature += form.signature;
        nullity += form.nullity;
        blocks.push(form.goeritz);
        blocks.extend(form.stabilizers.iter().map(|&s| vec![vec![s]]));
    }
    // One zero block per split keeps null(pairing) = nullity.
    blocks.extend((1..pieces.len()).map(|_| vec![vec![0]]));
    SeifertData { circles, genus, pairing: block_diagonal(&blocks), signature, nullity }
}

fn block_diagonal(blocks: &[Vec<Vec<i64>>]) -> Vec<Vec<i64>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut m = vec![vec![0i64; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            m[off + i][off..off + b.len()].copy_from_slice(row);
        }
        off += b.len();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{self, disjoint_union, rational, torus2};

    #[test]
    fn circle_counts() {
        assert_eq!(seifert_circles(&construct::unknot(1)), 1);
        assert_eq!(seifert_circles(&construct::kink(1)), 2);
        assert_eq!(seifert_circles(&construct::kink(-1)), 2);
        assert_eq!(seifert_circles(&torus2(2)), 2);
        assert_eq!(seifert_circles(&torus2(3)), 2);
        assert_eq!(seifert_circles(&rational(&[2, 2]).unwrap()), 3);
    }

    #[test]
    fn genus_of_standard_diagrams() {
        assert_eq!(seifert(&construct::unknot(1)).genus, 0);
        assert_eq!(seifert(&construct::kink(-1)).genus, 0);
        assert_eq!(seifert(&torus2(2)).genus, 0);
        assert_eq!(seifert(&torus2(3)).genus, 1);
        assert_eq!(seifert(&rational(&[2, 2]).unwrap()).genus, 1);
        assert_eq!(seifert(&torus2(8)).genus, 3);
    }

    #[test]
    fn unknot_data_is_empty() {
        let s = seifert(&construct::unknot(1));
        assert_eq!(s, SeifertData {
            circles: 1,
            genus: 0,
            pairing: Vec::new(),
            signature: 0,
            nullity: 0,
        });
    }

    #[test]
    fn pairing_matches_declared_signature_and_nullity() {
        let suite = [
            torus2(2),
            torus2(-5),
            torus2(8),
            rational(&[2, 2]).unwrap(),
            rational(&[7, 1, 2]).unwrap(),
            disjoint_union(&torus2(3), &construct::unknot(2)),
        ];
        for d in suite {
            let s = seifert(&d);
            assert_eq!(crate::goeritz::diagonalize(&s.pairing), (s.signature, s.nullity));
            assert_eq!((s.signature, s.nullity), crate::goeritz::signature_nullity(&d));
            assert!(s.signature.unsigned_abs() as usize + s.nullity <= s.pairing.len());
            let m = seifert(&d.mirror());
            assert_eq!(m.signature, -s.signature);
            assert_eq!((m.circles, m.genus, m.nullity), (s.circles, s.genus, s.nullity));
        }
    }

    #[test]
    fn split_diagrams_pool_circles_and_genus() {
        let d = disjoint_union(&torus2(3), &torus2(8));
        let s = seifert(&d);
        assert_eq!(s.circles, 4);
        assert_eq!(s.genus, 4);
        assert_eq!(s.signature, -2 - 7);
        assert_eq!(s.nullity, 1);
    }
}
