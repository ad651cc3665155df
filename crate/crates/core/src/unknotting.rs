//! The unknotting-number oracle.
//!
//! Answers come as intervals with witnesses. Exact values arrive three
//! ways: a crossing-free diagram, a catalogue hit, or lower and upper
//! bounds that meet. Lower bounds never guess: the knot signature bound
//! ceil(|sig|/2), the linking bound over component pairs, the component
//! bound (linking plus each component's own knot bound, sound because
//! inter-component changes cannot alter a component's knot type), and
//! nontriviality whenever the fingerprint differs from every trivial
//! link's. Upper bounds are certified by construction: a set of
//! crossing switches plus a move sequence ending crossing-free, or a
//! sum over visible connected-sum factors.
//!
//! Results are memoized per process under the canonical diagram key;
//! an optional disk cache persists the numeric parts between runs.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, CanonOpts};
use crate::catalogue;
use crate::diagram::LinkDiagram;
use crate::error::KnotError;
use crate::fingerprint::fingerprint;
use crate::goeritz;
use crate::identify;
use crate::moves::{self, MoveEvent};

/// Effort caps for the upper-bound search.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Largest crossing-switch set tried.
    pub max_changes: usize,
    /// Switch subsets examined per call.
    pub subsets: usize,
    /// Diagram states explored per triviality check.
    pub states: usize,
    /// Crossings allowed above the starting count while checking.
    pub slack: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_changes: 8, subsets: 20_000, states: 4_000, slack: 2 }
    }
}

impl Budget {
    /// Scales the default search effort; level 1 is the default, each
    /// further level doubles the subset and state caps.
    pub fn leveled(level: u32) -> Budget {
        let d = Budget::default();
        let f = 1usize << level.saturating_sub(1).min(12);
        Budget { subsets: d.subsets * f, states: d.states * f, ..d }
    }
}

/// Crossing switches plus moves that end crossing-free, replayable
/// against the diagram the answer was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCertificate {
    /// Moves bringing the input to the diagram that was searched.
    pub setup: Vec<MoveEvent>,
    /// Crossings switched there.
    pub changes: Vec<usize>,
    /// Moves taking the switched diagram to a crossing-free one.
    pub finish: Vec<MoveEvent>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Already crossing-free.
    CrossingFree,
    Catalogue { name: &'static str },
    SignatureBound { signature: i64 },
    LinkingBound { total: u64 },
    ComponentBound { linking: u64, knots: u64 },
    /// The fingerprint differs from every trivial link's.
    Nontrivial,
    /// Upper bound summed over visible connected-sum factors.
    FactorSum { parts: Vec<u64> },
    Search(SearchCertificate),
    /// Numeric result restored from a disk cache.
    Cached,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::CrossingFree => write!(f, "crossing-free diagram"),
            Witness::Catalogue { name } => write!(f, "catalogue entry {name}"),
            Witness::SignatureBound { signature } => {
                write!(f, "signature bound ceil(|{signature}|/2)")
            }
            Witness::LinkingBound { total } => write!(f, "linking bound {total}"),
            Witness::ComponentBound { linking, knots } => {
                write!(f, "component bound {linking}+{knots}")
            }
            Witness::Nontrivial => write!(f, "nontrivial fingerprint"),
            Witness::FactorSum { parts } => {
                write!(f, "factor sum {}", parts.iter().join("+"))
            }
            Witness::Search(c) => {
                write!(f, "switch {{{}}} then {} moves", c.changes.iter().join(","), c.finish.len())
            }
            Witness::Cached => write!(f, "cached result"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct UInterval {
    pub lo: u64,
    pub hi: Option<u64>,
    pub witnesses: Vec<Witness>,
}

impl UInterval {
    pub fn exact(&self) -> Option<u64> {
        (self.hi == Some(self.lo)).then_some(self.lo)
    }

    pub fn expect_exact(&self) -> Result<u64, KnotError> {
        self.exact().ok_or_else(|| {
            let hi = self.hi.map_or("?".into(), |h| h.to_string());
            KnotError::Unresolved(format!("unknotting number in [{}, {hi}]", self.lo))
        })
    }

    fn exact_with(v: u64, w: Witness) -> UInterval {
        UInterval { lo: v, hi: Some(v), witnesses: vec![w] }
    }
}

/// Largest diagram the catalogue lookup will fingerprint.
const LOOKUP_LIMIT: usize = 24;

/// Best implemented lower bound with its witness.
pub fn u_lower(d: &LinkDiagram) -> (u64, Witness) {
    fn offer(best: &mut (u64, Witness), v: u64, w: Witness) {
        if v > best.0 {
            *best = (v, w);
        }
    }
    let mut best = (0, Witness::LinkingBound { total: 0 });

    let linking = d.linking_sum_abs();
    offer(&mut best, linking, Witness::LinkingBound { total: linking });

    if d.component_count() == 1 {
        let (sig, _) = goeritz::signature_nullity(d);
        let v = sig.unsigned_abs().div_ceil(2);
        offer(&mut best, v, Witness::SignatureBound { signature: sig });
    } else {
        // Inter-component switches keep every component's knot type, so
        // each component must be unknotted on its own.
        let knots: u64 = (0..d.ranges().len())
            .map(|i| {
                let k = d.extract_components(&[i]).expect("component exists");
                u_lower(&k).0
            })
            .sum();
        if knots > 0 {
            offer(&mut best, linking + knots, Witness::ComponentBound { linking, knots });
        }
    }

    if best.0 == 0 && provably_nontrivial(d) {
        offer(&mut best, 1, Witness::Nontrivial);
    }
    best
}

fn provably_nontrivial(d: &LinkDiagram) -> bool {
    d.crossing_count() <= LOOKUP_LIMIT
        && fingerprint(d) != fingerprint(&crate::construct::unknot(d.component_count()))
}

/// Smallest certified count of crossing switches reaching a trivial
/// link, searching subsets of the given diagram in ascending size.
pub fn u_upper(d: &LinkDiagram, budget: &Budget) -> (Option<u64>, Option<Witness>) {
    match search_upper(d, &Vec::new(), 0, budget) {
        Some((v, c)) => (Some(v), Some(Witness::Search(c))),
        None => (None, None),
    }
}

/// The oracle: catalogue hits and met bounds give exact values.
pub fn u(d: &LinkDiagram, budget: &Budget) -> UInterval {
    // Unresolved entries are recomputed: a later call may carry a
    // larger budget.
    let resolved = |key: &Vec<u32>| {
        memo().lock().expect("memo lock").get(key).filter(|h| h.exact().is_some()).cloned()
    };
    let key = canonical_key(d, CanonOpts::FULL);
    if let Some(hit) = resolved(&key) {
        return hit;
    }
    let (s, setup) = moves::simplify_trace(d);
    let skey = canonical_key(&s, CanonOpts::FULL);
    if let Some(hit) = resolved(&skey) {
        return hit;
    }

    let result = resolve(&s, &setup, budget);

    let mut m = memo().lock().expect("memo lock");
    m.insert(key, result.clone());
    m.insert(skey, result.clone());
    result
}

/// Exact value or `Unresolved`.
pub fn u_exact(d: &LinkDiagram, budget: &Budget) -> Result<u64, KnotError> {
    u(d, budget).expect_exact()
}

fn resolve(s: &LinkDiagram, setup: &[MoveEvent], budget: &Budget) -> UInterval {
    if s.crossing_count() == 0 {
        return UInterval::exact_with(0, Witness::CrossingFree);
    }
    if s.crossing_count() <= LOOKUP_LIMIT {
        if let Some(e) = catalogue::lookup(&fingerprint(s)) {
            return UInterval::exact_with(
                e.unknotting_number,
                Witness::Catalogue { name: e.name },
            );
        }
    }

    let (lo, lo_witness) = u_lower(s);
    let mut witnesses = vec![lo_witness];
    let mut hi: Option<u64> = None;

    let factors = identify::visible_factors(s);
    if factors.len() > 1 {
        let parts: Option<Vec<u64>> = factors.iter().map(|f| u(f, budget).hi).collect();
        if let Some(parts) = parts {
            hi = Some(parts.iter().sum());
            witnesses.push(Witness::FactorSum { parts });
        }
    }
    if hi.is_none_or(|h| h > lo) {
        if let Some((v, cert)) = search_upper(s, setup, lo, budget) {
            if hi.is_none_or(|h| v < h) {
                hi = Some(v);
                witnesses.push(Witness::Search(cert));
            }
        }
    }
    UInterval { lo, hi, witnesses }
}

fn search_upper(
    d: &LinkDiagram,
    setup: &[MoveEvent],
    lo: u64,
    budget: &Budget,
) -> Option<(u64, SearchCertificate)> {
    if d.crossing_count() == 0 {
        return Some((0, SearchCertificate {
            setup: setup.to_vec(),
            changes: Vec::new(),
            finish: Vec::new(),
        }));
    }
    let c = d.crossing_count();
    let mut tried = 0usize;
    let mut seen = HashSet::new();
    for k in (lo as usize).min(c)..=c.min(budget.max_changes) {
        for subset in (0..c).combinations(k) {
            tried += 1;
            if tried > budget.subsets {
                return None;
            }
            let mut t = d.clone();
            for &x in &subset {
                t = t.change_crossing(x).expect("crossing ids in range");
            }
            if !seen.insert(canonical_key(&t, CanonOpts::FULL)) {
                continue;
            }
            if let Some(finish) = trivialize(&t, budget) {
                return Some((k as u64, SearchCertificate {
                    setup: setup.to_vec(),
                    changes: subset,
                    finish,
                }));
            }
        }
    }
    None
}

/// Move sequence from `start` to a crossing-free diagram: greedy
/// simplification, then breadth-first search with a crossing cap.
fn trivialize(start: &LinkDiagram, budget: &Budget) -> Option<Vec<MoveEvent>> {
    let (s, pre) = moves::simplify_trace(start);
    if s.crossing_count() == 0 {
        return Some(pre);
    }
    let cap = s.crossing_count() + budget.slack;
    let mut seen = HashSet::from([canonical_key(&s, CanonOpts::UNORIENTED)]);
    let mut queue = VecDeque::from([(s, pre)]);
    let mut visited = 0usize;
    while let Some((cur, path)) = queue.pop_front() {
        visited += 1;
        if visited > budget.states {
            return None;
        }
        for ev in moves::enumerate_moves(&cur) {
            let next = moves::apply(&cur, &ev).expect("enumerated moves apply");
            if next.crossing_count() > cap {
                continue;
            }
            let mut longer = path.clone();
            longer.push(ev);
            if next.crossing_count() == 0 {
                return Some(longer);
            }
            if seen.insert(canonical_key(&next, CanonOpts::UNORIENTED)) {
                queue.push_back((next, longer));
            }
        }
    }
    None
}

/// Replays a certificate: setup moves, switches, finish moves; true
/// when the result is crossing-free.
pub fn replay(d: &LinkDiagram, cert: &SearchCertificate) -> Result<bool, KnotError> {
    let mut cur = match moves::run_sequence(d, &cert.setup)?.pop() {
        Some(last) => last,
        None => d.clone(),
    };
    for &x in &cert.changes {
        cur = cur.change_crossing(x)?;
    }
    let end = match moves::run_sequence(&cur, &cert.finish)?.pop() {
        Some(last) => last,
        None => cur,
    };
    Ok(end.crossing_count() == 0)
}

fn memo() -> &'static Mutex<HashMap<Vec<u32>, UInterval>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<u32>, UInterval>>> = OnceLock::new();
    MEMO.get_or_init(Mutex::default)
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: Vec<(Vec<u32>, u64, Option<u64>)>,
}

/// Merges numeric results from a cache file written by [`save_cache`].
pub fn load_cache(path: &Path) -> Result<usize, KnotError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| KnotError::Config(format!("cache read {}: {e}", path.display())))?;
    let file: CacheFile = serde_json::from_str(&text)
        .map_err(|e| KnotError::Config(format!("cache parse {}: {e}", path.display())))?;
    if file.version != 1 {
        return Err(KnotError::Config(format!("cache version {}", file.version)));
    }
    let mut m = memo().lock().expect("memo lock");
    let mut added = 0;
    for (key, lo, hi) in file.entries {
        m.entry(key).or_insert_with(|| {
            added += 1;
            UInterval { lo, hi, witnesses: vec![Witness::Cached] }
        });
    }
    Ok(added)
}

/// Writes the numeric parts of the memo for future runs.
pub fn save_cache(path: &Path) -> Result<usize, KnotError> {
    let m = memo().lock().expect("memo lock");
    let entries: Vec<(Vec<u32>, u64, Option<u64>)> =
        m.iter().map(|(k, v)| (k.clone(), v.lo, v.hi)).collect();
    let n = entries.len();
    let text = serde_json::to_string(&CacheFile { version: 1, entries })
        .expect("cache serializes");
    std::fs::write(path, text)
        .map_err(|e| KnotError::Config(format!("cache write {}: {e}", path.display())))?;
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{connect_sum, disjoint_union, kink, rational, torus2, unknot};

    fn exact(d: &LinkDiagram) -> u64 {
        u(d, &Budget::default()).expect_exact().expect("resolves")
    }

    #[test]
    fn trivial_diagrams_are_zero() {
        for k in 1..=4 {
            assert_eq!(exact(&unknot(k)), 0);
        }
        assert_eq!(exact(&kink(1)), 0);
        let (v, w) = u_lower(&unknot(2));
        assert_eq!((v, w), (0, Witness::LinkingBound { total: 0 }));
    }

    #[test]
    fn torus_family_resolves_exactly() {
        for (n, want) in [(2, 1), (3, 1), (4, 2), (5, 2), (6, 3), (8, 4)] {
            assert_eq!(exact(&torus2(n)), want, "torus2({n})");
            assert_eq!(exact(&torus2(-n)), want, "torus2(-{n})");
        }
    }

    #[test]
    fn twist_knots_resolve_by_search() {
        assert_eq!(exact(&rational(&[2, 2]).unwrap()), 1);
        assert_eq!(exact(&rational(&[2, 3]).unwrap()), 1);
        assert_eq!(exact(&rational(&[3, 1, 3]).unwrap()), 2);
        assert_eq!(exact(&rational(&[7, 1, 2]).unwrap()), 3);
    }

    #[test]
    fn composite_resolves_via_component_bound_and_factor_sum() {
        let sum = connect_sum(&torus2(6), 1, &torus2(3), 2).unwrap();
        let iv = u(&sum, &Budget::default());
        assert_eq!(iv.exact(), Some(4));
        assert!(iv
            .witnesses
            .iter()
            .any(|w| matches!(w, Witness::ComponentBound { linking: 3, knots: 1 })));
        assert!(iv.witnesses.iter().any(|w| matches!(w, Witness::FactorSum { .. })));
    }

    #[test]
    fn split_union_is_at_most_the_sum() {
        let t = torus2(3);
        let d = disjoint_union(&t, &torus2(2));
        let iv = u(&d, &Budget::default());
        assert_eq!(iv.exact(), Some(2));
        let parts = exact(&t) + exact(&torus2(2));
        assert!(iv.hi.unwrap() <= parts);
    }

    #[test]
    fn search_certificates_replay() {
        // Twist knot outside the catalogue: one clasp switch unknots it.
        let d = rational(&[2, 4]).unwrap();
        let iv = u(&d, &Budget::default());
        assert_eq!(iv.exact(), Some(1));
        let cert = iv
            .witnesses
            .iter()
            .find_map(|w| match w {
                Witness::Search(c) => Some(c),
                _ => None,
            })
            .expect("resolved by search");
        assert_eq!(cert.changes.len(), 1);
        assert!(replay(&d, cert).unwrap());
    }

    #[test]
    fn kinked_unlinks_claim_no_nontriviality() {
        let mut d = kink(1);
        for s in [-1, 1, -1, 1] {
            d = disjoint_union(&d, &kink(s));
        }
        assert_eq!(d.component_count(), 5);
        let (lo, _) = u_lower(&d);
        assert_eq!(lo, 0);
        assert_eq!(exact(&d), 0);
    }

    #[test]
    fn values_survive_reidemeister_moves() {
        for d in [torus2(2), torus2(3), rational(&[2, 2]).unwrap()] {
            let want = exact(&d);
            for ev in moves::enumerate_moves(&d).into_iter().take(12) {
                let e = moves::apply(&d, &ev).unwrap();
                assert_eq!(exact(&e), want, "after {ev}");
            }
        }
    }

    #[test]
    fn one_switch_moves_u_by_at_most_one() {
        for d in [torus2(3), torus2(4), rational(&[2, 3]).unwrap()] {
            let base = exact(&d);
            for x in 0..d.crossing_count() {
                let e = d.change_crossing(x).unwrap();
                if let Some(v) = u(&e, &Budget::default()).exact() {
                    assert!(v.abs_diff(base) <= 1, "switch {x}");
                }
            }
        }
    }

    #[test]
    fn lower_never_exceeds_upper() {
        let suite = [
            torus2(5),
            rational(&[2, 2]).unwrap(),
            disjoint_union(&torus2(2), &unknot(1)),
            connect_sum(&torus2(3), 1, &torus2(3), 1).unwrap(),
        ];
        for d in suite {
            let iv = u(&d, &Budget::default());
            if let Some(h) = iv.hi {
                assert!(iv.lo <= h);
            }
        }
    }

    #[test]
    fn disk_cache_round_trips() {
        let dir = std::env::temp_dir().join("knotdiag-cache-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("u.json");
        exact(&torus2(5));
        let saved = save_cache(&path).unwrap();
        assert!(saved > 0);
        assert!(load_cache(&path).unwrap() <= saved);
        std::fs::remove_file(&path).ok();
    }
}
