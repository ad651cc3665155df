//! Move-stable identification key for diagrams.
//!
//! Every field is unchanged by Reidemeister moves, relabelling, mirror
//! image, and reversal of any subset of components, so two diagrams of
//! the same unoriented link always produce equal fingerprints. The
//! converse is not promised; the catalogue verifies pairwise
//! distinctness over the names it serves.

use num_bigint::BigInt;

use crate::bracket;
use crate::diagram::LinkDiagram;
use crate::goeritz;
use crate::mapgraph::UnoMap;
use crate::poly::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub components: usize,
    /// Sorted |lk(i, j)| over unordered component pairs.
    pub abs_linking: Vec<u64>,
    /// Writhe-normalized bracket, canonicalized to the least polynomial
    /// over mirror image and all strand orientations.
    pub jones_class: LaurentPoly,
    pub determinant: u64,
    /// |signature|, for knots only: reversal cannot move it and mirror
    /// only flips its sign. Link signatures depend on orientation.
    pub signature_abs: Option<u64>,
    pub nullity: usize,
}

#[allow(clippy::needless_range_loop)]
pub fn fingerprint(d: &LinkDiagram) -> Fingerprint {
    let lk = d.linking_matrix();
    let mut abs_linking = Vec::new();
    for i in 0..lk.len() {
        for j in i + 1..lk.len() {
            abs_linking.push(lk[i][j].unsigned_abs());
        }
    }
    abs_linking.sort_unstable();

    let (signature, nullity) = goeritz::signature_nullity(d);
    Fingerprint {
        components: d.component_count(),
        abs_linking,
        jones_class: jones_class(d),
        determinant: goeritz::determinant(d),
        signature_abs: (d.component_count() == 1).then(|| signature.unsigned_abs()),
        nullity,
    }
}

/// Least writhe-normalized bracket over all orientations and the
/// mirror, under the term-list order.
fn jones_class(d: &LinkDiagram) -> LaurentPoly {
    let key = |p: &LaurentPoly| -> Vec<(i64, BigInt)> {
        p.terms().map(|(e, c)| (e, c.clone())).collect()
    };
    UnoMap::from_diagram(d)
        .orientations()
        .expect("valid diagram reorients")
        .iter()
        .map(bracket::f_poly)
        .flat_map(|f| [f.invert_variable(), f])
        .min_by_key(key)
        .expect("at least one orientation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{connect_sum, disjoint_union, kink, rational, torus2, unknot};
    use crate::moves::{self, MoveEvent, R1Target, Side};

    #[test]
    fn stable_under_moves_mirror_and_reversal() {
        let suite = [torus2(2), torus2(3), torus2(4), rational(&[2, 2]).unwrap()];
        for d in suite {
            let fp = fingerprint(&d);
            assert_eq!(fingerprint(&d.mirror()), fp);
            for c in 0..d.component_count() {
                assert_eq!(fingerprint(&d.reverse_component(c).unwrap()), fp);
            }
            let mut cur = d;
            let twists = [
                MoveEvent::R1Add { target: R1Target::Arc(1), side: Side::Left, over: true },
                MoveEvent::R1Add { target: R1Target::Arc(3), side: Side::Right, over: false },
            ];
            for ev in twists {
                cur = moves::apply(&cur, &ev).unwrap();
                assert_eq!(fingerprint(&cur), fp, "after {ev}");
            }
            if let Some(ev) = moves::enumerate_moves(&cur)
                .into_iter()
                .find(|ev| matches!(ev, MoveEvent::R2Add { .. }))
            {
                assert_eq!(fingerprint(&moves::apply(&cur, &ev).unwrap()), fp);
            }
        }
    }

    #[test]
    fn separates_small_knots() {
        let t = torus2(3);
        let reps = [
            unknot(1),
            kink(-1),
            t.clone(),
            rational(&[2, 2]).unwrap(),
            torus2(5),
            rational(&[2, 3]).unwrap(),
            rational(&[3, 1, 3]).unwrap(),
            rational(&[7, 1, 2]).unwrap(),
            connect_sum(&t, 1, &t, 1).unwrap(),
            connect_sum(&t, 1, &t.mirror(), 1).unwrap(),
        ];
        let fps: Vec<Fingerprint> = reps.iter().map(fingerprint).collect();
        // The kinked unknot is still the unknot; everything else differs.
        assert_eq!(fps[0], fps[1]);
        for i in 2..fps.len() {
            for j in i + 1..fps.len() {
                assert_ne!(fps[i], fps[j], "entries {i} and {j} collide");
            }
            assert_ne!(fps[0], fps[i]);
        }
    }

    #[test]
    fn separates_small_links() {
        let pairs = [
            (unknot(2), torus2(2)),
            (torus2(2), torus2(4)),
            (torus2(4), torus2(6)),
            (unknot(2), disjoint_union(&torus2(3), &unknot(1))),
        ];
        for (a, b) in pairs {
            assert_ne!(fingerprint(&a), fingerprint(&b));
        }
        // Mirror pairs collide on purpose.
        assert_eq!(fingerprint(&torus2(4)), fingerprint(&torus2(-4)));
    }

    #[test]
    fn reversal_classes_collapse() {
        // T(2,4) and its one-strand reversal have distinct f polynomials
        // but identical fingerprints.
        let d = torus2(4);
        let r = d.reverse_component(1).unwrap();
        assert_ne!(bracket::f_poly(&d), bracket::f_poly(&r));
        assert_eq!(fingerprint(&d), fingerprint(&r));
    }
}
