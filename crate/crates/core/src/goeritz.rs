//! Signature, nullity, and determinant via the Goeritz form.
//!
//! The complementary regions of a diagram admit a checkerboard
//! colouring (every vertex of the underlying plane graph is 4-valent,
//! so the dual graph is bipartite). The Goeritz matrix over the white
//! regions, corrected by a count of type-II crossings, computes the
//! signature of the link independently of the diagram; its kernel gives
//! the nullity and its determinant the link determinant.
//!
//! Conventions, fixed once and verified against small links:
//! - black is the colour class of the face listed first by
//!   [`faces::faces`];
//! - a crossing is `black-smoothed` when the corner at port 1 is black,
//!   and then carries weight -1, otherwise +1;
//! - its white corner pair sits at ports (0,2) in the black-smoothed
//!   case and (1,3) otherwise;
//! - a crossing is type II when its weight agrees with its sign.
//!
//! For a connected diagram, signature = sig(G) - mu where G is the
//! Goeritz matrix with one region removed and mu the signed count of
//! type-II crossings. Split diagrams sum over connected pieces; each
//! split adds one to the nullity and forces the determinant to zero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diagram::LinkDiagram;
use crate::faces::{self, Dart, Face};

/// Signature and nullity of the link presented by the diagram.
pub fn signature_nullity(d: &LinkDiagram) -> (i64, usize) {
    let pieces = d.split_into_pieces();
    let mut sig = 0i64;
    let mut null = pieces.len().saturating_sub(1);
    for p in &pieces {
        let inv = connected_invariants(p);
        sig += inv.0;
        null += inv.1;
    }
    (sig, null)
}

/// Signature alone; see [`signature_nullity`].
pub fn signature(d: &LinkDiagram) -> i64 {
    signature_nullity(d).0
}

/// Link determinant |det G|. Zero whenever the diagram is split.
pub fn determinant(d: &LinkDiagram) -> u64 {
    let pieces = d.split_into_pieces();
    match pieces.len() {
        1 => {
            let det = connected_invariants(&pieces[0]).2;
            det.magnitude().to_u64().expect("link determinant fits in u64")
        }
        _ => 0,
    }
}

/// Region form of one connected piece: the Goeritz matrix plus the
/// diagonal stabilizers (one -eta per type-II crossing) that align its
/// signature with the link's.
pub(crate) struct ConnectedForm {
    pub goeritz: Vec<Vec<i64>>,
    pub stabilizers: Vec<i64>,
    pub signature: i64,
    pub nullity: usize,
    pub det: BigInt,
}

/// (signature, nullity, det G) of one connected piece.
fn connected_invariants(d: &LinkDiagram) -> (i64, usize, BigInt) {
    let f = connected_form(d);
    (f.signature, f.nullity, f.det)
}

#[allow(clippy::needless_range_loop)]
pub(crate) fn connected_form(d: &LinkDiagram) -> ConnectedForm {
    if d.crossing_count() == 0 {
        return ConnectedForm {
            goeritz: Vec::new(),
            stabilizers: Vec::new(),
            signature: 0,
            nullity: 0,
            det: BigInt::one(),
        };
    }
    let fs = faces::faces(d);
    let face_of = face_index(d, &fs);
    let colour = two_colouring(d, &fs, &face_of);

    // Index the white regions; the Goeritz matrix lives on all but one.
    let mut white_idx = vec![usize::MAX; fs.len()];
    let mut whites = 0usize;
    for (i, &black) in colour.iter().enumerate() {
        if !black {
            white_idx[i] = whites;
            whites += 1;
        }
    }

    let at = |x: usize, p: u8| face_of[x * 4 + p as usize];
    let mut m = vec![vec![0i64; whites]; whites];
    let mut stabilizers = Vec::new();
    for x in 0..d.crossing_count() {
        let black_smoothed = colour[at(x, 1)];
        let eta: i64 = if black_smoothed { -1 } else { 1 };
        let (p, q) = if black_smoothed { (0, 2) } else { (1, 3) };
        let (fu, fv) = (at(x, p), at(x, q));
        debug_assert!(!colour[fu] && !colour[fv], "corner pair must be white");
        let (u, v) = (white_idx[fu], white_idx[fv]);
        if u != v {
            m[u][v] -= eta;
            m[v][u] -= eta;
        }
        if eta * i64::from(d.crossings()[x].sign()) == 1 {
            stabilizers.push(-eta);
        }
    }
    for u in 0..whites {
        m[u][u] = -(0..whites).filter(|&v| v != u).map(|v| m[u][v]).sum::<i64>();
    }

    // Drop one region (any choice is congruence-equivalent).
    let g: Vec<Vec<i64>> =
        (1..whites).map(|i| (1..whites).map(|j| m[i][j]).collect()).collect();
    let (sig, null) = diagonalize(&g);
    let mu: i64 = -stabilizers.iter().sum::<i64>();
    let det = integer_det(&g);
    ConnectedForm { goeritz: g, stabilizers, signature: sig - mu, nullity: null, det }
}

/// face index of every dart, addressed as crossing*4 + port.
fn face_index(d: &LinkDiagram, fs: &[Face]) -> Vec<usize> {
    let mut of = vec![usize::MAX; 4 * d.crossing_count()];
    for (i, f) in fs.iter().enumerate() {
        for dt in &f.darts {
            of[dt.crossing * 4 + dt.port as usize] = i;
        }
    }
    of
}

/// Two-colours the faces so the two faces along every arc differ.
/// `true` = black = the class of face 0.
fn two_colouring(d: &LinkDiagram, fs: &[Face], face_of: &[usize]) -> Vec<bool> {
    let ends = faces::arc_ends(d);
    let at = |dt: Dart| face_of[dt.crossing * 4 + dt.port as usize];
    let mut adj = vec![Vec::new(); fs.len()];
    for a in 1..=d.arc_count() {
        let (u, v) = (at(ends.head[a]), at(ends.tail[a]));
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut colour = vec![None; fs.len()];
    colour[0] = Some(true);
    let mut queue = vec![0usize];
    while let Some(u) = queue.pop() {
        let cu = colour[u].unwrap();
        for &v in &adj[u] {
            match colour[v] {
                None => {
                    colour[v] = Some(!cu);
                    queue.push(v);
                }
                Some(cv) => debug_assert_ne!(cu, cv, "face graph must be bipartite"),
            }
        }
    }
    colour.into_iter().map(|c| c.expect("connected piece reaches all faces")).collect()
}

/// Signature and nullity of a symmetric integer matrix, by congruence
/// diagonalization over the rationals.
#[allow(clippy::needless_range_loop)]
pub(crate) fn diagonalize(g: &[Vec<i64>]) -> (i64, usize) {
    let n = g.len();
    let mut m: Vec<Vec<BigRational>> = g
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let (mut sig, mut null) = (0i64, 0usize);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&j| !m[j][k].is_zero()) {
                // Column already clear: one zero eigenvalue.
                None => {
                    null += 1;
                    continue;
                }
                Some(j) if !m[j][j].is_zero() => {
                    m.swap(k, j);
                    for row in &mut m {
                        row.swap(k, j);
                    }
                }
                // Both diagonal entries vanish; folding row/col j into
                // k makes the pivot 2*m[j][k] != 0.
                Some(j) => {
                    for t in 0..n {
                        let v = m[j][t].clone();
                        m[k][t] += v;
                    }
                    for t in 0..n {
                        let v = m[t][j].clone();
                        m[t][k] += v;
                    }
                }
            }
        }
        let pivot = m[k][k].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for t in 0..n {
                let v = &f * &m[k][t];
                m[i][t] -= v;
            }
            for t in 0..n {
                let v = &f * &m[t][k];
                m[t][i] -= v;
            }
        }
    }
    (sig, null)
}

/// Exact determinant by Bareiss fraction-free elimination.
fn integer_det(g: &[Vec<i64>]) -> BigInt {
    let n = g.len();
    let mut m: Vec<Vec<BigInt>> =
        g.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut flip = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&j| !m[j][k].is_zero()) {
                Some(j) => {
                    m.swap(k, j);
                    flip = !flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = match n {
        0 => BigInt::one(),
        _ => m[n - 1][n - 1].clone(),
    };
    if flip {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket;
    use crate::codec;
    use crate::construct::{self, connect_sum, disjoint_union, rational, torus2};
    use crate::moves::{self, MoveEvent, R1Target, Side};

    fn fig8() -> LinkDiagram {
        rational(&[2, 2]).unwrap()
    }

    fn suite() -> Vec<LinkDiagram> {
        let t = torus2(3);
        let mut v = vec![
            construct::unknot(1),
            construct::unknot(2),
            construct::kink(1),
            construct::kink(-1),
            fig8(),
            rational(&[2, 3]).unwrap(),
            rational(&[3, 1, 3]).unwrap(),
            rational(&[7, 1, 2]).unwrap(),
            construct::braid_closure(3, &[1, -2, 1]).unwrap(),
            connect_sum(&t, 1, &t, 1).unwrap(),
            connect_sum(&t, 1, &t.mirror(), 1).unwrap(),
            disjoint_union(&t, &fig8()),
        ];
        for n in [-5, -2, 2, 3, 4, 5, 6, 7, 8] {
            v.push(torus2(n));
        }
        v
    }

    #[test]
    fn unknots_and_kinks_are_trivial() {
        assert_eq!(signature_nullity(&construct::unknot(1)), (0, 0));
        assert_eq!(determinant(&construct::unknot(1)), 1);
        // A k-component unlink has nullity k-1 and determinant 0.
        assert_eq!(signature_nullity(&construct::unknot(3)), (0, 2));
        assert_eq!(determinant(&construct::unknot(2)), 0);
        for s in [1i8, -1] {
            assert_eq!(signature_nullity(&construct::kink(s)), (0, 0));
            assert_eq!(determinant(&construct::kink(s)), 1);
        }
    }

    #[test]
    fn torus_two_strand_family() {
        for n in 2..=8i64 {
            let d = torus2(n);
            assert_eq!(signature_nullity(&d), (-(n - 1), 0), "torus2({n})");
            assert_eq!(determinant(&d), n as u64, "torus2({n})");
            let m = torus2(-n);
            assert_eq!(signature_nullity(&m), (n - 1, 0), "torus2(-{n})");
            assert_eq!(determinant(&m), n as u64, "torus2(-{n})");
        }
    }

    #[test]
    fn rational_knot_values() {
        assert_eq!(signature_nullity(&fig8()), (0, 0));
        assert_eq!(determinant(&fig8()), 5);
        let twist52 = rational(&[2, 3]).unwrap();
        assert_eq!((determinant(&twist52), signature(&twist52).abs()), (7, 2));
        let seven4 = rational(&[3, 1, 3]).unwrap();
        assert_eq!((determinant(&seven4), signature(&seven4).abs()), (15, 2));
        let ten2 = rational(&[7, 1, 2]).unwrap();
        assert_eq!((determinant(&ten2), signature(&ten2).abs()), (23, 6));
    }

    #[test]
    fn connected_sums_add_signatures_and_multiply_determinants() {
        let t = torus2(3);
        let granny = connect_sum(&t, 1, &t, 1).unwrap();
        assert_eq!(signature_nullity(&granny), (-4, 0));
        assert_eq!(determinant(&granny), 9);
        let square = connect_sum(&t, 1, &t.mirror(), 1).unwrap();
        assert_eq!(signature_nullity(&square), (0, 0));
        assert_eq!(determinant(&square), 9);
    }

    #[test]
    fn split_diagrams_assemble_piecewise() {
        let t3 = torus2(3);
        let d = disjoint_union(&t3, &t3);
        assert_eq!(signature_nullity(&d), (-4, 1));
        assert_eq!(determinant(&d), 0);
        let with_loop = disjoint_union(&torus2(2), &construct::unknot(1));
        assert_eq!(signature_nullity(&with_loop), (-1, 1));
        assert_eq!(determinant(&with_loop), 0);
    }

    #[test]
    fn connected_unlink_picture_has_nullity_one() {
        // Two-crossing picture of the 2-component unlink: connected as a
        // diagram, split as a link, so the kernel shows up in G itself.
        let text = "X(3,1,4,2)\nX(4,1,3,2)\ncomponents: 1-2 3-4\nsigns: - +\n";
        let d = codec::from_pd_text(text).unwrap();
        assert_eq!(signature_nullity(&d), (0, 1));
        assert_eq!(determinant(&d), 0);
    }

    #[test]
    fn agrees_with_state_sum_determinant() {
        for d in suite() {
            assert_eq!(
                determinant(&d),
                bracket::determinant(&d),
                "determinants disagree on a {}-crossing diagram",
                d.crossing_count()
            );
        }
    }

    #[test]
    fn mirror_negates_signature() {
        for d in suite() {
            let (s, n) = signature_nullity(&d);
            assert_eq!(signature_nullity(&d.mirror()), (-s, n));
            assert_eq!(determinant(&d.mirror()), determinant(&d));
        }
    }

    #[test]
    fn invariant_under_reidemeister_moves() {
        for d in suite() {
            let want = signature_nullity(&d);
            let det = determinant(&d);
            let mut cur = d;
            let twists = [
                MoveEvent::R1Add { target: R1Target::Arc(1), side: Side::Left, over: false },
                MoveEvent::R1Add { target: R1Target::Arc(2), side: Side::Right, over: true },
            ];
            for ev in twists {
                if cur.arc_count() < 2 {
                    continue;
                }
                cur = moves::apply(&cur, &ev).unwrap();
                assert_eq!(signature_nullity(&cur), want, "after {ev}");
                assert_eq!(determinant(&cur), det, "after {ev}");
            }
            if let Some(pushed) = moves::enumerate_moves(&cur)
                .into_iter()
                .find(|ev| matches!(ev, MoveEvent::R2Add { .. }))
                .map(|ev| moves::apply(&cur, &ev).unwrap())
            {
                assert_eq!(signature_nullity(&pushed), want);
                assert_eq!(determinant(&pushed), det);
            }
        }
    }

    #[test]
    fn knot_signature_matches_determinant_mod_four() {
        for d in suite() {
            if d.component_count() != 1 || d.crossing_count() == 0 {
                continue;
            }
            let (s, n) = signature_nullity(&d);
            let det = determinant(&d);
            assert_eq!(n, 0);
            assert_eq!(det % 2, 1, "knot determinant is odd");
            let class = if s.rem_euclid(4) == 0 { 1 } else { 3 };
            assert_eq!(det % 4, class, "sig {s} vs det {det}");
        }
    }
}
