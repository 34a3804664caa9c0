//! Exhaustive search for closed, triad-covered subsets of Z12 whose maximal
//! triadic cover carries a simply transitive action of a PLR-subgroup.

use crate::duality::{plr_group, plr_named, ti_group, PlrName};
use crate::monoid::{major_triad, MonoidAction};
use crate::permgroup::PermGroup;
use crate::zmod::{maximal_cover, Chord, PcSet};

/// Carriers of the enumeration with their type names and subgroup labels,
/// in table order.
pub const CARRIER_TYPES: [(&[i64], &str, &str); 7] = [
    (&[0, 4, 7], "Major Chord", "{Id}"),
    (&[0, 3, 4, 7], "Major-Minor Mixture", "{Id,P}"),
    (&[0, 3, 4, 7, 8, 11], "Hexatonic", "<P,L>"),
    (&[0, 1, 3, 4, 6, 7, 9, 10], "Octatonic", "<P,R>"),
    (
        &[0, 1, 4, 6, 7, 10],
        "Major Triad Tritone Mixture",
        "{Id,Q6}",
    ),
    (
        &[0, 1, 2, 4, 6, 7, 8, 10],
        "Prometheus Tritone Mixture",
        "{Id,Q6,Sl,Q6Sl}",
    ),
    (
        &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        "Chromatic Scale",
        "PLR-group",
    ),
];

fn listed_set(values: &[i64]) -> PcSet {
    values
        .iter()
        .map(|&v| crate::zmod::PitchClass::new(v))
        .collect()
}

pub fn listed_carriers() -> Vec<PcSet> {
    CARRIER_TYPES
        .iter()
        .map(|(v, _, _)| listed_set(v))
        .collect()
}

fn listed_position(set: PcSet) -> Option<usize> {
    CARRIER_TYPES
        .iter()
        .position(|(v, _, _)| listed_set(v) == set)
}

#[derive(Clone, Debug)]
pub struct EnumerationRow {
    pub carrier: PcSet,
    pub type_label: &'static str,
    pub subgroup_label: &'static str,
    pub cover: Vec<Chord>,
    pub subgroup: PermGroup,
}

fn chord_points(chords: &[Chord]) -> Vec<usize> {
    chords.iter().map(|c| c.index()).collect()
}

/// Nonempty subsets of Z12 closed under the natural action and covered by
/// the triads they contain, ordered by size and then by members.
pub fn closed_covered_sets() -> Vec<PcSet> {
    let mu = MonoidAction::natural();
    let mut sets: Vec<PcSet> = PcSet::all_subsets()
        .filter(|s| !s.is_empty() && mu.is_closed(*s) && maximal_cover(*s).covered)
        .collect();
    sets.sort_by_key(|s| (s.len(), s.values()));
    sets
}

/// One row per (carrier, subgroup) pair passing every hypothesis, in table
/// order. Carriers outside the known table sort last and are labelled
/// `"Unlisted"`.
pub fn enumerate_carriers() -> Vec<EnumerationRow> {
    let subgroups = plr_group()
        .all_subgroups()
        .expect("PLR group is within the enumeration bound");
    let mut rows = Vec::new();
    for carrier in closed_covered_sets() {
        let cover = maximal_cover(carrier).chords;
        let points = chord_points(&cover);
        for subgroup in subgroups
            .iter()
            .filter(|g| g.is_simply_transitive_on(&points))
        {
            let (type_label, subgroup_label) = match listed_position(carrier) {
                Some(k) => (CARRIER_TYPES[k].1, CARRIER_TYPES[k].2),
                None => ("Unlisted", "?"),
            };
            rows.push(EnumerationRow {
                carrier,
                type_label,
                subgroup_label,
                cover: cover.clone(),
                subgroup: subgroup.clone(),
            });
        }
    }
    rows.sort_by_key(|r| listed_position(r.carrier).unwrap_or(usize::MAX));
    rows
}

/// Closed covered sets whose cover admits no simply transitive PLR-subgroup.
pub fn rejected_carriers() -> Vec<PcSet> {
    let accepted: Vec<PcSet> = enumerate_carriers().iter().map(|r| r.carrier).collect();
    closed_covered_sets()
        .into_iter()
        .filter(|s| !accepted.contains(s))
        .collect()
}

/// Rechecks every hypothesis for a row from scratch.
pub fn verify_row(carrier: PcSet, cover: &[Chord], subgroup: &PermGroup) -> bool {
    let plr = plr_group();
    let expected = maximal_cover(carrier);
    let points = chord_points(cover);
    !carrier.is_empty()
        && MonoidAction::natural().is_closed(carrier)
        && expected.covered
        && expected.chords == cover
        && subgroup.is_subgroup_of(&plr)
        && subgroup.verify_axioms()
        && subgroup.is_simply_transitive_on(&points)
}

/// `⟨P, Q_i⟩` and what its orbit through C produces.
#[derive(Clone, Debug)]
pub struct PContainingCase {
    pub i: u8,
    pub group: PermGroup,
    pub orbit: Vec<Chord>,
    pub pitch_union: PcSet,
    pub closed: bool,
    /// Triads contained in the pitch union.
    pub full_cover: Vec<Chord>,
    pub simply_transitive_on_cover: bool,
}

#[derive(Clone, Debug)]
pub struct PFreeCase {
    /// Every closed covered set containing 3 contains both C and c.
    pub excludes_3: bool,
    /// Every closed set containing 5 contains both Db and db.
    pub excludes_5: bool,
    /// Every closed covered set containing Gb and 9 contains gb too.
    pub excludes_9: bool,
    /// Nontrivial T/I subgroups `H` whose C-orbit is exactly the maximal
    /// cover of a closed set, acted on simply transitively, without c.
    pub candidates: Vec<PermGroup>,
}

#[derive(Clone, Debug)]
pub struct CaseAudit {
    pub p_containing: Vec<PContainingCase>,
    pub p_free: PFreeCase,
}

pub const P_CASE_GENERATORS: [u8; 6] = [0, 1, 2, 3, 4, 6];

pub fn case_audit() -> CaseAudit {
    let plr = plr_group();
    let mu = MonoidAction::natural();
    let c_major = Chord::major(0);
    let pitches_of = |chords: &[Chord]| {
        chords
            .iter()
            .fold(PcSet::EMPTY, |acc, c| acc.union(c.pitches()))
    };

    let p_containing = P_CASE_GENERATORS
        .iter()
        .map(|&i| {
            let group = PermGroup::generate(
                Chord::COUNT,
                &[plr_named(PlrName::P), plr_named(PlrName::Q(i))],
            )
            .expect("same carrier")
            .inherit_labels(&plr);
            let orbit: Vec<Chord> = group
                .orbit(c_major.index())
                .into_iter()
                .map(Chord::from_index)
                .collect();
            let pitch_union = pitches_of(&orbit);
            let full_cover = maximal_cover(pitch_union).chords;
            let simply_transitive_on_cover =
                group.is_simply_transitive_on(&chord_points(&full_cover));
            PContainingCase {
                i,
                closed: mu.is_closed(pitch_union),
                group,
                orbit,
                pitch_union,
                full_cover,
                simply_transitive_on_cover,
            }
        })
        .collect();

    let sets = closed_covered_sets();
    let has = |set: PcSet, chord: &str| {
        chord
            .parse::<Chord>()
            .map(|c| c.pitches().is_subset(set))
            .unwrap_or(false)
    };
    let excludes_3 = sets
        .iter()
        .filter(|s| s.contains(crate::zmod::PitchClass::new(3)))
        .all(|&s| has(s, "C") && has(s, "c"));
    let excludes_5 = PcSet::all_subsets()
        .filter(|s| s.contains(crate::zmod::PitchClass::new(5)) && mu.is_closed(*s))
        .all(|s| has(s, "Db") && has(s, "db"));
    let excludes_9 = sets
        .iter()
        .filter(|s| PcSet::from([6, 10, 1, 9]).is_subset(**s))
        .all(|&s| has(s, "Gb") && has(s, "gb"));

    let ti = ti_group();
    let c_minor = Chord::minor(0).index();
    let candidates = ti
        .all_subgroups()
        .expect("T/I group is within the enumeration bound")
        .into_iter()
        .filter(|h| h.order() > 1)
        .filter(|h| {
            let orbit: Vec<Chord> = h
                .orbit(c_major.index())
                .into_iter()
                .map(Chord::from_index)
                .collect();
            let union = pitches_of(&orbit);
            h.order() == orbit.len()
                && !orbit.iter().any(|c| c.index() == c_minor)
                && mu.is_closed(union)
                && maximal_cover(union).chords == orbit
        })
        .collect();

    CaseAudit {
        p_containing,
        p_free: PFreeCase {
            excludes_3,
            excludes_5,
            excludes_9,
            candidates,
        },
    }
}

/// True when `set` contains the C major triad (every nonempty closed set
/// does).
pub fn contains_major_triad(set: PcSet) -> bool {
    major_triad().is_subset(set)
}
