//! Kauffman bracket state sum and its writhe normalization.
//!
//! Each crossing resolves two ways: the A-resolution joins ports (0,1)
//! and (2,3) of the crossing tuple, the B-resolution joins (0,3) and
//! (1,2). Summing `A^(#A - #B) * delta^(loops - 1)` over all 2^c states
//! gives the bracket; multiplying by `(-A)^(-3w)` makes it a link
//! invariant `f`. With this crate's port conventions the Jones
//! polynomial is `f` under `t = A^4`, so `f` lives in `Z[A^2, A^-2]`
//! and the substitution `s = A^2` realizes `s = t^(1/2)`.
//!
//! The state sum is exponential in the crossing count; callers gate it
//! by size (every diagram this crate identifies is small).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::diagram::LinkDiagram;
use crate::poly::LaurentPoly;

/// The loop value `-A^2 - A^-2`.
pub fn delta() -> LaurentPoly {
    LaurentPoly::from_terms(&[(-1, 2), (-1, -2)])
}

/// Raw bracket of the diagram, normalized so one circle gives 1.
pub fn bracket(d: &LinkDiagram) -> LaurentPoly {
    let c = d.crossing_count();
    assert!(c < 26, "bracket state sum is infeasible at {c} crossings");
    let n = d.arc_count();
    // delta^k, extended on demand.
    let mut delta_pow = vec![LaurentPoly::one()];
    let mut sum = LaurentPoly::zero();
    let mut parent: Vec<u32> = Vec::new();
    fn find(p: &mut [u32], i: u32) -> u32 {
        let mut i = i;
        while p[i as usize] != i {
            p[i as usize] = p[p[i as usize] as usize];
            i = p[i as usize];
        }
        i
    }
    for mask in 0u64..(1u64 << c) {
        parent.clear();
        parent.extend(0..=n as u32);
        for (x, cr) in d.crossings().iter().enumerate() {
            let [a, b, cc, dd] = cr.arcs;
            let pairs = if mask >> x & 1 == 0 { [(a, b), (cc, dd)] } else { [(a, dd), (b, cc)] };
            for (p, q) in pairs {
                let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
                if rp != rq {
                    parent[rp as usize] = rq;
                }
            }
        }
        let classes = (1..=n as u32).filter(|&a| find(&mut parent, a) == a).count();
        let loops = classes + d.free_loops();
        while delta_pow.len() < loops {
            let next = delta_pow.last().unwrap().mul(&delta());
            delta_pow.push(next);
        }
        let exp = c as i64 - 2 * mask.count_ones() as i64;
        sum = sum.add(&delta_pow[loops - 1].mul_term(1, exp));
    }
    sum
}

/// `(-A)^(-3w)` times the bracket: invariant under all Reidemeister
/// moves. Reversing one component shifts the writhe by -4 times its
/// linking number with the rest, so `f` rescales by `A^(12 lk)`; knots
/// and global reversals leave it fixed.
pub fn f_poly(d: &LinkDiagram) -> LaurentPoly {
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    bracket(d).mul_term(sign, -3 * w)
}

/// Jones polynomial in the variable `s = t^(1/2)`: integral `t` powers
/// appear as even `s` exponents. Knots only use even exponents.
pub fn jones_half(d: &LinkDiagram) -> LaurentPoly {
    let f = f_poly(d);
    debug_assert!(f.terms().all(|(e, _)| e % 2 == 0), "f-polynomial has an odd exponent");
    let mut out = LaurentPoly::zero();
    for (e, c) in f.terms() {
        let coeff = c.to_i64().expect("jones coefficient fits i64 for supported sizes");
        out = out.add(&LaurentPoly::term(coeff, e / 2));
    }
    out
}

/// Link determinant `|V(-1)|`, computed by evaluating `f` at a primitive
/// eighth root of unity (where `t = A^4 = -1`). Independent of
/// orientation and chirality.
pub fn determinant(d: &LinkDiagram) -> u64 {
    // f uses only even powers, so the value lands in Z[i]; track
    // coordinates over the basis (1, zeta, zeta^2, zeta^3), zeta^4 = -1.
    let mut coords = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for (e, c) in f_poly(d).terms() {
        let k = e.rem_euclid(8) as usize;
        if k < 4 {
            coords[k] += c;
        } else {
            coords[k - 4] -= c;
        }
    }
    debug_assert!(coords[1].is_zero() && coords[3].is_zero(), "determinant not in Z[i]");
    let (re, im) = (coords[0].abs(), coords[2].abs());
    debug_assert!(re.is_zero() || im.is_zero(), "determinant evaluation not a real multiple of i^k");
    (re + im).to_u64().expect("determinant fits u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::moves::{self, MoveEvent, R1Target, Side};

    #[test]
    fn bracket_base_cases() {
        assert_eq!(bracket(&construct::unknot(1)), LaurentPoly::one());
        assert_eq!(bracket(&construct::unknot(3)), delta().pow(2));
        assert_eq!(bracket(&construct::kink(1)), LaurentPoly::term(-1, 3));
        assert_eq!(bracket(&construct::kink(-1)), LaurentPoly::term(-1, -3));
        assert_eq!(f_poly(&construct::kink(1)), LaurentPoly::one());
        assert_eq!(f_poly(&construct::kink(-1)), LaurentPoly::one());
    }

    #[test]
    fn known_f_polynomials() {
        // Positive Hopf link: V = -t^(-5/2) - t^(-1/2).
        assert_eq!(
            f_poly(&construct::torus2(2)),
            LaurentPoly::from_terms(&[(-1, -10), (-1, -2)])
        );
        // Right trefoil: V = -t^(-4) + t^(-3) + t^(-1).
        assert_eq!(
            f_poly(&construct::torus2(3)),
            LaurentPoly::from_terms(&[(-1, -16), (1, -12), (1, -4)])
        );
        // Figure eight: V = t^(-2) - t^(-1) + 1 - t + t^2, mirror-fixed.
        let f8 = f_poly(&construct::rational(&[2, 2]).unwrap());
        assert_eq!(
            f8,
            LaurentPoly::from_terms(&[(1, -8), (-1, -4), (1, 0), (-1, 4), (1, 8)])
        );
        assert_eq!(f8.invert_variable(), f8);
    }

    #[test]
    fn f_is_invariant_under_moves() {
        let t = construct::torus2(3);
        let f = f_poly(&t);
        let mut d = t.clone();
        let steps = [
            MoveEvent::R1Add { target: R1Target::Arc(1), side: Side::Left, over: false },
            MoveEvent::R1Add { target: R1Target::Arc(4), side: Side::Right, over: true },
        ];
        for ev in steps {
            d = moves::apply(&d, &ev).unwrap();
            assert_eq!(f_poly(&d), f, "after {ev}");
        }
        // Push two strands and slide a trigon; still the same f.
        let e = moves::enumerate_moves(&d)
            .into_iter()
            .find_map(|ev| matches!(ev, MoveEvent::R2Add { .. }).then(|| moves::apply(&d, &ev)))
            .unwrap()
            .unwrap();
        assert_eq!(f_poly(&e), f);
        // Mirroring inverts the variable.
        assert_eq!(f_poly(&t.mirror()), f.invert_variable());
        // Reversing a knot changes nothing; reversing one link component
        // rescales by A^(12 lk) — here lk drops from 2 to -2.
        assert_eq!(f_poly(&t.reverse_component(0).unwrap()), f);
        let h = construct::torus2(4);
        assert_eq!(f_poly(&h.reverse_component(0).unwrap()), f_poly(&h).mul_term(1, 24));
    }

    #[test]
    fn jones_half_powers() {
        // Hopf in s = t^(1/2): odd exponents mark the two-component link.
        assert_eq!(
            jones_half(&construct::torus2(2)),
            LaurentPoly::from_terms(&[(-1, -5), (-1, -1)])
        );
        assert_eq!(
            jones_half(&construct::torus2(3)),
            LaurentPoly::from_terms(&[(-1, -8), (1, -6), (1, -2)])
        );
    }

    #[test]
    fn determinants_of_small_links() {
        assert_eq!(determinant(&construct::unknot(1)), 1);
        assert_eq!(determinant(&construct::unknot(2)), 0);
        assert_eq!(determinant(&construct::kink(-1)), 1);
        assert_eq!(determinant(&construct::torus2(2)), 2);
        assert_eq!(determinant(&construct::torus2(3)), 3);
        assert_eq!(determinant(&construct::torus2(4)), 4);
        assert_eq!(determinant(&construct::torus2(-5)), 5);
        assert_eq!(determinant(&construct::rational(&[2, 2]).unwrap()), 5);
        // Twist vector for 7_4: continued fraction 3 + 1/(1 + 1/3) = 15/4.
        assert_eq!(determinant(&construct::rational(&[3, 1, 3]).unwrap()), 15);
        // Twist vector continued fraction 2 + 1/(1 + 1/7) = 23/8.
        assert_eq!(determinant(&construct::rational(&[7, 1, 2]).unwrap()), 23);
        // Determinant is multiplicative under connected sum.
        let t = construct::torus2(3);
        assert_eq!(determinant(&construct::connect_sum(&t, 1, &t, 1).unwrap()), 9);
    }
}
