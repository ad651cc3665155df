//! Smoothing-difference invariants and the move-count bounds they give.
//!
//! Each crossing of a diagram is smoothed and the unknotting number of
//! the result is compared against the underlying link's. Two symmetric
//! sign matrices steer the sum: `s_ij` picks the smoothing per
//! component pair (+1 regular, -1 irregular, 0 skip) and `t_ij` weights
//! the term. The resulting number is unchanged by RI moves, moves by at
//! most 1 under RII and at most 2 under RIII, so half the difference
//! between two diagrams of the same link bounds the number of RII/RIII
//! moves connecting them. An augmented variant adds
//! `eps*(c/2 + delta*3w/2)`, restoring sensitivity to RI moves at the
//! cost of half-integer values.
//!
//! For knot diagrams the cheaper `ilk` records the linking number of
//! every regular smoothing as a formal sum; the evaluations `g0` and
//! `g` bound move counts the same way without any oracle calls.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::LinkDiagram;
use crate::error::KnotError;
use crate::moves::{self, MoveEvent};
use crate::numeric::HalfInt;
use crate::smoothing::{self, SmoothMode};
use crate::unknotting::{self, Budget, UInterval};

/// Basis letter of a smoothing record: `X` for positive crossings,
/// `Y` for negative ones.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X,
    Y,
}

/// Element of the free abelian group on `X_n`, `Y_n` (n an integer).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalSum {
    terms: BTreeMap<(Letter, i64), i64>,
}

impl FormalSum {
    pub fn add(&mut self, letter: Letter, index: i64, mult: i64) {
        let e = self.terms.entry((letter, index)).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&(letter, index));
        }
    }

    pub fn multiplicity(&self, letter: Letter, index: i64) -> i64 {
        self.terms.get(&(letter, index)).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities; the crossing count when the sum came
    /// from a diagram.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Letter, i64, i64)> + '_ {
        self.terms.iter().map(|(&(l, n), &m)| (l, n, m))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, n, m)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "{l:?}_{n}")?;
        }
        Ok(())
    }
}

/// Formal sum of one smoothing record per crossing of a knot diagram:
/// a positive crossing `p` contributes `X` at the linking number of the
/// two-component link left by regularly smoothing `p`; a negative
/// crossing contributes `Y` likewise.
pub fn ilk(d: &LinkDiagram) -> Result<FormalSum, KnotError> {
    if d.component_count() != 1 {
        return Err(KnotError::NotAKnot(d.component_count()));
    }
    let mut s = FormalSum::default();
    for x in 0..d.crossing_count() {
        let sm = smoothing::regular_smooth(d, x)?;
        let lk = sm.diagram.linking_matrix()[0][1];
        let letter = if d.crossings()[x].sign() == 1 { Letter::X } else { Letter::Y };
        s.add(letter, lk, 1);
    }
    Ok(s)
}

/// Evaluation sending `X_n` to `|n| + 1` and `Y_n` to `-|n| - 1`.
/// On knot diagrams, `g(ilk(d)) = g0(ilk(d)) + writhe(d)`.
pub fn g(s: &FormalSum) -> i64 {
    s.terms().map(|(l, n, m)| match l {
        Letter::X => m * (n.abs() + 1),
        Letter::Y => -m * (n.abs() + 1),
    }).sum()
}

/// Evaluation sending `X_n` to `|n|` and `Y_n` to `-|n|`; unchanged by
/// RI moves.
pub fn g0(s: &FormalSum) -> i64 {
    s.terms().map(|(l, n, m)| match l {
        Letter::X => m * n.abs(),
        Letter::Y => -m * n.abs(),
    }).sum()
}

/// Symmetric sign matrices steering the invariant: `s` picks the
/// smoothing per component pair, `t` weights the contribution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignMatrixPair {
    s: Vec<Vec<i8>>,
    t: Vec<Vec<i8>>,
}

impl SignMatrixPair {
    /// Validates: both square of equal order, symmetric, entries in
    /// {-1, 0, +1}, and `t_ij = 0` exactly where `s_ij = 0`.
    pub fn new(s: Vec<Vec<i8>>, t: Vec<Vec<i8>>) -> Result<Self, KnotError> {
        let n = s.len();
        let cfg = |msg: &str| KnotError::Config(format!("sign matrices: {msg}"));
        if t.len() != n {
            return Err(cfg("S and T must have equal order"));
        }
        for m in [&s, &t] {
            if m.iter().any(|row| row.len() != n) {
                return Err(cfg("matrix must be square"));
            }
            for (i, row) in m.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if !(-1..=1).contains(&v) {
                        return Err(cfg("entries must be -1, 0 or +1"));
                    }
                    if m[j][i] != v {
                        return Err(cfg("matrix must be symmetric"));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if (s[i][j] == 0) != (t[i][j] == 0) {
                    return Err(cfg("t entries must vanish exactly where s entries do"));
                }
            }
        }
        Ok(SignMatrixPair { s, t })
    }

    /// Order-1 pair `S = (s)`, `T = (+1)` — the knot-diagram case.
    pub fn scalar(s: i8) -> Self {
        SignMatrixPair::new(vec![vec![s]], vec![vec![1]]).expect("scalar pair is valid")
    }

    pub fn order(&self) -> usize {
        self.s.len()
    }

    pub fn s(&self, i: usize, j: usize) -> i8 {
        self.s[i][j]
    }

    pub fn t(&self, i: usize, j: usize) -> i8 {
        self.t[i][j]
    }
}

/// Whether terms take `|Δu|` or the bare difference.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Absolute,
    Signed,
}

#[derive(Clone, Debug)]
pub struct IuConfig {
    pub matrices: SignMatrixPair,
    /// Augmentation signs; both present or both absent.
    pub eps_delta: Option<(i8, i8)>,
    pub mode: Mode,
    pub budget: Budget,
}

impl IuConfig {
    pub fn new(matrices: SignMatrixPair) -> Self {
        IuConfig { matrices, eps_delta: None, mode: Mode::Absolute, budget: Budget::default() }
    }

    /// Knot-diagram configuration `S = (s)`, `T = (+1)`.
    pub fn scalar(s: i8) -> Self {
        IuConfig::new(SignMatrixPair::scalar(s))
    }

    pub fn signed(mut self) -> Self {
        self.mode = Mode::Signed;
        self
    }

    pub fn with_eps_delta(mut self, eps: i8, delta: i8) -> Self {
        self.eps_delta = Some((eps, delta));
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    fn check(&self, d: &LinkDiagram) -> Result<(), KnotError> {
        if self.matrices.order() != d.component_count() {
            return Err(KnotError::Config(format!(
                "matrix order {} does not match component count {}",
                self.matrices.order(),
                d.component_count()
            )));
        }
        if let Some((e, dl)) = self.eps_delta {
            if e.abs() != 1 || dl.abs() != 1 {
                return Err(KnotError::Config("eps and delta must be +1 or -1".into()));
            }
        }
        Ok(())
    }

    /// `eps * (c/2 + delta * 3w/2)`, an exact half-integer.
    fn augmentation(&self, d: &LinkDiagram) -> HalfInt {
        match self.eps_delta {
            None => HalfInt::ZERO,
            Some((e, dl)) => {
                let c = d.crossing_count() as i64;
                let w = d.writhe();
                HalfInt::from_halves(i64::from(e) * (c + 3 * i64::from(dl) * w))
            }
        }
    }

    fn stamp(&self) -> Stamp {
        Stamp {
            matrices: self.matrices.clone(),
            eps_delta: self.eps_delta,
            mode: self.mode,
        }
    }
}

/// Everything that must agree before two values are comparable.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Stamp {
    matrices: SignMatrixPair,
    eps_delta: Option<(i8, i8)>,
    mode: Mode,
}

/// Which sum a crossing landed in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Membership {
    /// `s_ij = +1`: regular smoothing.
    Regular,
    /// `s_ij = -1`: irregular smoothing.
    Irregular,
    /// `s_ij = 0`: no contribution.
    Skipped,
}

/// Integer range with possibly missing finite endpoints (unresolved
/// oracle calls leave a side open).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Range {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Range {
    const ZERO: Range = Range { lo: Some(0), hi: Some(0) };

    fn negate(self) -> Range {
        Range { lo: self.hi.map(|v| -v), hi: self.lo.map(|v| -v) }
    }

    fn abs(self) -> Range {
        match (self.lo, self.hi) {
            (Some(a), Some(b)) => {
                if a >= 0 {
                    Range { lo: Some(a), hi: Some(b) }
                } else if b <= 0 {
                    Range { lo: Some(-b), hi: Some(-a) }
                } else {
                    Range { lo: Some(0), hi: Some(a.abs().max(b)) }
                }
            }
            (Some(a), None) => Range { lo: Some(a.max(0)), hi: None },
            // Unknotting intervals always have a finite lower end.
            _ => Range { lo: Some(0), hi: None },
        }
    }
}

/// One crossing's line in the audit ledger.
#[derive(Clone, Debug)]
pub struct LedgerEntry {
    pub crossing: usize,
    pub membership: Membership,
    pub t: i8,
    pub sign: i8,
    /// Oracle answer for the smoothed link; absent when skipped.
    pub smoothed_u: Option<UInterval>,
    /// `t * sign * Δu` (or `|Δu|`) as an integer range.
    pub contribution: Range,
}

/// Invariant value with its per-crossing audit trail. The value is the
/// sum of ledger contributions plus the augmentation term; unresolved
/// oracle calls widen it into a range.
#[derive(Clone, Debug)]
pub struct IuValue {
    pub lo: Option<HalfInt>,
    pub hi: Option<HalfInt>,
    /// Unknotting number of the underlying link.
    pub base_u: u64,
    /// The `eps, delta` term; zero when absent.
    pub augmentation: HalfInt,
    pub ledger: Vec<LedgerEntry>,
    stamp: Stamp,
}

impl IuValue {
    pub fn exact(&self) -> Option<HalfInt> {
        match (self.lo, self.hi) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact().is_some()
    }

    pub fn expect_exact(&self) -> Result<HalfInt, KnotError> {
        self.exact().ok_or_else(|| {
            let side = |v: Option<HalfInt>| v.map_or("?".to_string(), |h| h.to_string());
            KnotError::Unresolved(format!(
                "invariant value in [{}, {}]",
                side(self.lo),
                side(self.hi)
            ))
        })
    }
}

/// The smoothing-difference invariant of `d` under `cfg`: every
/// crossing between components `i`, `j` with `s_ij = +1` contributes
/// `t_ij * sign * |u(regular smoothing) - u(L)|`, crossings with
/// `s_ij = -1` contribute via the irregular smoothing, and `s_ij = 0`
/// skips. Signed mode drops the absolute value; `eps, delta` add
/// `eps*(c/2 + delta*3w/2)`. A crossing-free diagram evaluates to 0.
pub fn iu(d: &LinkDiagram, cfg: &IuConfig) -> Result<IuValue, KnotError> {
    cfg.check(d)?;
    let base = unknotting::u(d, &cfg.budget).expect_exact()?;

    let ledger: Vec<LedgerEntry> = std::thread::scope(|sc| {
        let tasks: Vec<_> = (0..d.crossing_count())
            .map(|x| sc.spawn(move || ledger_entry(d, x, cfg, base)))
            .collect();
        tasks
            .into_iter()
            .map(|t| t.join().expect("crossing task panicked"))
            .collect::<Result<_, _>>()
    })?;

    let mut sum = Range::ZERO;
    for e in &ledger {
        sum.lo = sum.lo.zip(e.contribution.lo).map(|(a, b)| a + b);
        sum.hi = sum.hi.zip(e.contribution.hi).map(|(a, b)| a + b);
    }
    let aug = cfg.augmentation(d);
    let half = |v: Option<i64>| v.map(|n| HalfInt::from_int(n) + aug);
    Ok(IuValue {
        lo: half(sum.lo),
        hi: half(sum.hi),
        base_u: base,
        augmentation: aug,
        ledger,
        stamp: cfg.stamp(),
    })
}

fn ledger_entry(
    d: &LinkDiagram,
    x: usize,
    cfg: &IuConfig,
    base: u64,
) -> Result<LedgerEntry, KnotError> {
    let info = d.crossing_info(x)?;
    let (i, j) = (info.over_component, info.under_component);
    let (s, t) = (cfg.matrices.s(i, j), cfg.matrices.t(i, j));
    if s == 0 {
        return Ok(LedgerEntry {
            crossing: x,
            membership: Membership::Skipped,
            t,
            sign: info.sign,
            smoothed_u: None,
            contribution: Range::ZERO,
        });
    }
    let (membership, mode) = if s == 1 {
        (Membership::Regular, SmoothMode::Regular)
    } else {
        (Membership::Irregular, SmoothMode::Irregular)
    };
    let sm = smoothing::smooth(d, x, mode)?;
    let su = unknotting::u(&sm.diagram, &cfg.budget);
    let delta = Range {
        lo: Some(su.lo as i64 - base as i64),
        hi: su.hi.map(|h| h as i64 - base as i64),
    };
    let magnitude = match cfg.mode {
        Mode::Absolute => delta.abs(),
        Mode::Signed => delta,
    };
    let contribution = if i64::from(t) * i64::from(info.sign) == 1 {
        magnitude
    } else {
        magnitude.negate()
    };
    Ok(LedgerEntry {
        crossing: x,
        membership,
        t,
        sign: info.sign,
        smoothed_u: Some(su),
        contribution,
    })
}

/// Which move-count bound a pair of values certifies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveKind {
    /// Plain invariant: bounds RII + RIII moves only.
    RiiRiiiOnly,
    /// Augmented invariant: bounds all Reidemeister moves.
    AllMoves,
}

/// `ceil(|v1 - v2| / 2)`: a lower bound on the number of moves
/// connecting the two diagrams. Demands exact values computed under
/// one configuration, plain for [`MoveKind::RiiRiiiOnly`] and
/// augmented for [`MoveKind::AllMoves`].
pub fn move_bound(v1: &IuValue, v2: &IuValue, kind: MoveKind) -> Result<u64, KnotError> {
    let a = v1.expect_exact()?;
    let b = v2.expect_exact()?;
    if v1.stamp != v2.stamp {
        return Err(KnotError::Config(
            "move bound needs values computed under one configuration".into(),
        ));
    }
    let augmented = v1.stamp.eps_delta.is_some();
    match kind {
        MoveKind::RiiRiiiOnly if augmented => Err(KnotError::Config(
            "RII/RIII bound takes the plain invariant, without eps/delta".into(),
        )),
        MoveKind::AllMoves if !augmented => Err(KnotError::Config(
            "all-moves bound takes the augmented invariant, with eps/delta".into(),
        )),
        _ => Ok((a - b).ceil_half_abs() as u64),
    }
}

/// Invariant value of the starting diagram and after each move.
/// Failures carry the 1-based index of the offending step (0 = start).
pub fn trace(
    d: &LinkDiagram,
    seq: &[MoveEvent],
    cfg: &IuConfig,
) -> Result<Vec<IuValue>, KnotError> {
    let step = |index: usize| move |e: KnotError| KnotError::Step { index, source: Box::new(e) };
    let mut out = vec![iu(d, cfg).map_err(step(0))?];
    let mut cur = d.clone();
    for (k, ev) in seq.iter().enumerate() {
        cur = moves::apply(&cur, ev).map_err(step(k + 1))?;
        out.push(iu(&cur, cfg).map_err(step(k + 1))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{kink, rational, torus2, unknot};
    use crate::moves::{R1Target, Side};

    fn exact_int(v: &IuValue) -> i64 {
        v.exact().expect("exact value").as_int()
    }

    #[test]
    fn crossing_free_diagrams_evaluate_to_zero() {
        for cfg in [IuConfig::scalar(1), IuConfig::scalar(-1).with_eps_delta(1, 1)] {
            let v = iu(&unknot(1), &cfg).unwrap();
            assert_eq!(v.exact(), Some(HalfInt::ZERO));
            assert!(v.ledger.is_empty());
        }
    }

    #[test]
    fn ilk_records_smoothed_linking_numbers() {
        assert!(ilk(&unknot(1)).unwrap().is_empty());
        let pos = ilk(&kink(1)).unwrap();
        assert_eq!(pos.multiplicity(Letter::X, 0), 1);
        assert_eq!(pos.total(), 1);
        let neg = ilk(&kink(-1)).unwrap();
        assert_eq!(neg.multiplicity(Letter::Y, 0), 1);

        // Right trefoil: every regular smoothing is a positive Hopf link.
        let tre = ilk(&torus2(3)).unwrap();
        assert_eq!(tre.multiplicity(Letter::X, 1), 3);
        assert_eq!(tre.to_string(), "3·X_1");

        assert!(matches!(ilk(&torus2(2)), Err(KnotError::NotAKnot(2))));
    }

    #[test]
    fn g_splits_as_g0_plus_writhe() {
        for d in [kink(1), kink(-1), torus2(3), torus2(-5), rational(&[2, 2]).unwrap()] {
            let s = ilk(&d).unwrap();
            assert_eq!(s.total() as usize, d.crossing_count());
            assert_eq!(g(&s), g0(&s) + d.writhe());
        }
        let fig8 = ilk(&rational(&[2, 2]).unwrap()).unwrap();
        assert_eq!(g0(&fig8), 0);
        assert_eq!(g(&fig8), 0);
    }

    #[test]
    fn hand_computed_values_on_small_knots() {
        // Trefoil, regular smoothings: every D_x is a Hopf link with
        // u = 1 = u(trefoil), so each term vanishes.
        let tre = torus2(3);
        assert_eq!(exact_int(&iu(&tre, &IuConfig::scalar(1)).unwrap()), 0);
        // Irregular smoothings unknot it: each term is |0 - 1| = 1.
        let v = iu(&tre, &IuConfig::scalar(-1)).unwrap();
        assert_eq!(exact_int(&v), 3);
        assert_eq!(v.base_u, 1);
        assert!(v.ledger.iter().all(|e| e.membership == Membership::Irregular));
        // Signed mode keeps the -1 differences.
        assert_eq!(exact_int(&iu(&tre, &IuConfig::scalar(-1).signed()).unwrap()), -3);
    }

    #[test]
    fn hopf_crossings_contribute_through_the_matrix() {
        let hopf = torus2(2);
        let all = SignMatrixPair::new(vec![vec![1, 1], vec![1, 1]], vec![vec![1, 1], vec![1, 1]])
            .unwrap();
        let v = iu(&hopf, &IuConfig::new(all)).unwrap();
        // Both smoothings are unknots: 2 * |0 - 1|.
        assert_eq!(exact_int(&v), 2);

        let off = SignMatrixPair::new(vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0], vec![0, 1]])
            .unwrap();
        let v = iu(&hopf, &IuConfig::new(off)).unwrap();
        assert_eq!(exact_int(&v), 0);
        assert!(v.ledger.iter().all(|e| e.membership == Membership::Skipped));
        assert!(v.ledger.iter().all(|e| e.contribution == Range::ZERO));
    }

    #[test]
    fn ledger_sums_to_the_value() {
        let v = iu(&torus2(3), &IuConfig::scalar(-1).with_eps_delta(1, 1)).unwrap();
        let total: i64 = v.ledger.iter().map(|e| e.contribution.lo.unwrap()).sum();
        assert_eq!(v.exact().unwrap(), HalfInt::from_int(total) + v.augmentation);
        // c = 3, w = 3: augmentation (3 + 9)/2 = 6, value 3 + 6 = 9.
        assert_eq!(v.exact(), Some(HalfInt::from_int(9)));
    }

    #[test]
    fn augmentation_signs() {
        let tre = torus2(3);
        let base = exact_int(&iu(&tre, &IuConfig::scalar(-1)).unwrap());
        for (e, dl, shift) in [(1, 1, 12), (1, -1, -6), (-1, 1, -12), (-1, -1, 6)] {
            let v = iu(&tre, &IuConfig::scalar(-1).with_eps_delta(e, dl)).unwrap();
            let got = v.exact().unwrap();
            assert_eq!(got.twice(), base * 2 + shift, "eps={e} delta={dl}");
        }
    }

    #[test]
    fn ri_moves_leave_plain_value_alone_and_shift_augmented_exactly() {
        let d = torus2(3);
        let plain = IuConfig::scalar(-1);
        let aug = IuConfig::scalar(-1).with_eps_delta(1, 1);
        let before_plain = iu(&d, &plain).unwrap();
        let before_aug = iu(&d, &aug).unwrap();
        for side in [Side::Left, Side::Right] {
            for over in [true, false] {
                let ev = MoveEvent::R1Add { target: R1Target::Arc(1), side, over };
                let e = moves::apply(&d, &ev).unwrap();
                let after_plain = iu(&e, &plain).unwrap();
                assert_eq!(exact_int(&after_plain), exact_int(&before_plain), "{ev}");
                // delta = +1: +2 eps for a positive kink, -eps for a negative.
                let positive = (side == Side::Left) == over;
                let shift = if positive { 2 } else { -1 };
                let after_aug = iu(&e, &aug).unwrap();
                assert_eq!(
                    after_aug.exact().unwrap() - before_aug.exact().unwrap(),
                    HalfInt::from_int(shift),
                    "{ev}"
                );
            }
        }
    }

    #[test]
    fn theorem_bounds_hold_on_enumerated_moves() {
        let d = rational(&[2, 2]).unwrap();
        for cfg in [IuConfig::scalar(1), IuConfig::scalar(-1), IuConfig::scalar(-1).signed()] {
            let before = exact_int(&iu(&d, &cfg).unwrap());
            for ev in moves::enumerate_moves(&d) {
                let after = exact_int(&iu(&moves::apply(&d, &ev).unwrap(), &cfg).unwrap());
                let allowed = match ev {
                    MoveEvent::R1Add { .. } | MoveEvent::R1Remove { .. } => 0,
                    MoveEvent::R2Add { .. } | MoveEvent::R2Remove { .. } => 1,
                    MoveEvent::R3 { .. } => 2,
                };
                assert!((after - before).abs() <= allowed, "{ev}: {before} -> {after}");
            }
        }
    }

    #[test]
    fn move_bound_demands_matching_exact_inputs() {
        let cfg = IuConfig::scalar(-1);
        let a = iu(&torus2(3), &cfg).unwrap();
        let b = iu(&unknot(1), &cfg).unwrap();
        assert_eq!(move_bound(&a, &b, MoveKind::RiiRiiiOnly).unwrap(), 2);
        assert_eq!(move_bound(&a, &a, MoveKind::RiiRiiiOnly).unwrap(), 0);
        assert!(move_bound(&a, &b, MoveKind::AllMoves).is_err());
        let other = iu(&unknot(1), &IuConfig::scalar(1)).unwrap();
        assert!(move_bound(&a, &other, MoveKind::RiiRiiiOnly).is_err());

        let aug = IuConfig::scalar(-1).with_eps_delta(1, 1);
        let c = iu(&torus2(3), &aug).unwrap();
        let e = iu(&unknot(1), &aug).unwrap();
        // |9 - 0| / 2, rounded up.
        assert_eq!(move_bound(&c, &e, MoveKind::AllMoves).unwrap(), 5);
        assert!(move_bound(&c, &e, MoveKind::RiiRiiiOnly).is_err());
    }

    #[test]
    fn traces_report_each_step() {
        let d = torus2(3);
        let ev = MoveEvent::R1Add { target: R1Target::Arc(1), side: Side::Left, over: true };
        let vals = trace(&d, &[ev], &IuConfig::scalar(-1).with_eps_delta(1, 1)).unwrap();
        assert_eq!(vals.len(), 2);
        let diff = vals[1].exact().unwrap() - vals[0].exact().unwrap();
        assert_eq!(diff, HalfInt::from_int(2));

        let empty = trace(&d, &[], &IuConfig::scalar(1)).unwrap();
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn starved_oracle_budget_widens_the_value() {
        let d = torus2(8);
        let all = SignMatrixPair::new(vec![vec![1, 1], vec![1, 1]], vec![vec![1, 1], vec![1, 1]])
            .unwrap();
        let starved = Budget { max_changes: 0, subsets: 0, states: 0, slack: 0 };
        let v = iu(&d, &IuConfig::new(all.clone()).with_budget(starved)).unwrap();
        assert!(!v.is_exact());
        assert!(v.hi.is_none());
        assert!(v.expect_exact().is_err());

        // With a real budget every smoothing resolves: each of the 8
        // smoothings is a (2,7) torus knot, u = 3, and u(L) = 4.
        let v = iu(&d, &IuConfig::new(all)).unwrap();
        assert_eq!(exact_int(&v), 8);
    }

    #[test]
    fn config_validation_rejects_bad_shapes() {
        assert!(SignMatrixPair::new(vec![vec![0]], vec![vec![1]]).is_err());
        assert!(SignMatrixPair::new(vec![vec![1, 1], vec![0, 1]], vec![vec![1, 1], vec![1, 1]])
            .is_err());
        assert!(SignMatrixPair::new(vec![vec![2]], vec![vec![1]]).is_err());
        assert!(SignMatrixPair::new(vec![vec![1], vec![1]], vec![vec![1]]).is_err());
        assert!(iu(&torus2(2), &IuConfig::scalar(1)).is_err());
        assert!(iu(&torus2(3), &IuConfig::scalar(1).with_eps_delta(2, 1)).is_err());
    }
}
