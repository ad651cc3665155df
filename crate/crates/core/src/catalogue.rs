//! Built-in table of small links with exact unknotting numbers.
//!
//! Each entry carries a reference diagram, its fingerprint, and a note
//! recording why the stated unknotting number is exact. Torus-family
//! values meet their signature or linking lower bound directly; the
//! remaining knot values are classical table facts.

use std::sync::OnceLock;

use crate::construct::{rational, torus2, unknot};
use crate::diagram::LinkDiagram;
use crate::fingerprint::{fingerprint, Fingerprint};

pub struct CatalogueEntry {
    pub name: &'static str,
    pub unknotting_number: u64,
    /// Why the value is exact.
    pub note: &'static str,
    pub diagram: LinkDiagram,
    pub fingerprint: Fingerprint,
}

fn build() -> Vec<CatalogueEntry> {
    let mk = |name, unknotting_number, note, diagram: LinkDiagram| {
        let fingerprint = fingerprint(&diagram);
        CatalogueEntry { name, unknotting_number, note, diagram, fingerprint }
    };
    vec![
        mk("unknot", 0, "crossing-free circle", unknot(1)),
        mk("unlink_2", 0, "two split circles", unknot(2)),
        mk("unlink_3", 0, "three split circles", unknot(3)),
        mk("unlink_4", 0, "four split circles", unknot(4)),
        mk("Hopf", 1, "|lk| = 1 forces a change; either crossing works", torus2(2)),
        mk("3_1", 1, "|sig|/2 = 1, met by one switch", torus2(3)),
        mk(
            "4_1",
            1,
            "nontrivial, and one clasp switch unknots",
            rational(&[2, 2]).expect("catalogue recipe"),
        ),
        mk("T(2,4)", 2, "|lk| = 2, met by alternate switches", torus2(4)),
        mk("5_1", 2, "|sig|/2 = 2, met by alternate switches", torus2(5)),
        mk(
            "5_2",
            1,
            "nontrivial, and one clasp switch unknots",
            rational(&[2, 3]).expect("catalogue recipe"),
        ),
        mk("T(2,6)", 3, "|lk| = 3, met by alternate switches", torus2(6)),
        mk(
            "7_4",
            2,
            "one switch is ruled out by the two-bridge linking form of 15/4; \
             switching both clasps unknots",
            rational(&[3, 1, 3]).expect("catalogue recipe"),
        ),
        mk("T(2,8)", 4, "|lk| = 4, met by alternate switches", torus2(8)),
        mk(
            "10_2",
            3,
            "|sig|/2 = 3, met by three switches in the twist region",
            rational(&[7, 1, 2]).expect("catalogue recipe").mirror(),
        ),
    ]
}

pub fn entries() -> &'static [CatalogueEntry] {
    static TABLE: OnceLock<Vec<CatalogueEntry>> = OnceLock::new();
    TABLE.get_or_init(build)
}

pub fn lookup(fp: &Fingerprint) -> Option<&'static CatalogueEntry> {
    entries().iter().find(|e| &e.fingerprint == fp)
}

pub fn by_name(name: &str) -> Option<&'static CatalogueEntry> {
    entries().iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goeritz;

    #[test]
    fn fingerprints_are_pairwise_distinct() {
        let es = entries();
        for i in 0..es.len() {
            for j in i + 1..es.len() {
                assert_ne!(
                    es[i].fingerprint, es[j].fingerprint,
                    "{} and {} collide",
                    es[i].name, es[j].name
                );
            }
        }
    }

    #[test]
    fn every_entry_finds_itself() {
        for e in entries() {
            let hit = lookup(&fingerprint(&e.diagram)).expect("entry present");
            assert_eq!(hit.name, e.name);
            assert_eq!(by_name(e.name).unwrap().unknotting_number, e.unknotting_number);
        }
    }

    #[test]
    fn stored_values_respect_lower_bounds() {
        for e in entries() {
            let (sig, _) = goeritz::signature_nullity(&e.diagram);
            assert!(
                e.unknotting_number >= sig.unsigned_abs().div_ceil(2),
                "{}: u vs signature",
                e.name
            );
            assert!(e.unknotting_number >= e.diagram.linking_sum_abs(), "{}: u vs lk", e.name);
        }
    }

    #[test]
    fn ten_two_chirality_is_pinned() {
        // The stored 10_2 is the variant with signature -6.
        let d = &by_name("10_2").unwrap().diagram;
        assert_eq!(goeritz::signature_nullity(d), (-6, 0));
        assert_eq!(goeritz::determinant(d), 23);
    }

    #[test]
    fn determinants_match_the_tables() {
        for (name, det) in [
            ("unknot", 1),
            ("Hopf", 2),
            ("3_1", 3),
            ("4_1", 5),
            ("5_1", 5),
            ("5_2", 7),
            ("7_4", 15),
            ("10_2", 23),
            ("T(2,8)", 8),
        ] {
            assert_eq!(by_name(name).unwrap().fingerprint.determinant, det, "{name}");
        }
    }
}
