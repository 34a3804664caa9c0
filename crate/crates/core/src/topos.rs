//! Subobject classifier, Lawvere–Tierney topologies and upgrades in the
//! topos of actions of the triadic monoid.
//!
//! `Ω` is the set of left ideals of the monoid with `m·B = { n : n∘m ∈ B }`.
//! A closed subset `D` of a monoid action is classified by
//! `χ(z) = { m : m·z ∈ D }`, and its `j`-upgrade is `(j∘χ)⁻¹(T)`.

use std::fmt;
use std::sync::OnceLock;

use crate::duality::{plr_group, plr_named, PlrName};
use crate::error::{Error, Result};
use crate::monoid::{self, major_triad, Element, MonoidAction, TriadicMonoid, ORDER};
use crate::permgroup::PermGroup;
use crate::zmod::{maximal_cover, AffineMap, Chord, PcSet, PitchClass};

/// A subset of the monoid, one bit per element in label order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal(u8);

impl Ideal {
    pub fn from_elements(elements: &[Element]) -> Self {
        Ideal(elements.iter().fold(0, |acc, &m| acc | 1 << m))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, m: Element) -> bool {
        self.0 & (1 << m) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersect(self, other: Ideal) -> Ideal {
        Ideal(self.0 & other.0)
    }

    pub fn elements(self) -> Vec<Element> {
        (0..ORDER).filter(|&m| self.contains(m)).collect()
    }

    pub fn is_left_ideal(self, monoid: &TriadicMonoid) -> bool {
        self.elements().iter().all(|&b| {
            monoid
                .elements()
                .all(|t| self.contains(monoid.compose(t, b)))
        })
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.elements().iter().map(|&m| monoid::LABELS[m]).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Names of the six left ideals, in the canonical order used for `Ω`.
pub const OMEGA_NAMES: [&str; 6] = ["0", "C", "L", "R", "P", "T"];

/// Position of a named element of `Ω`.
pub mod omega_index {
    pub const EMPTY: usize = 0;
    pub const C: usize = 1;
    pub const L: usize = 2;
    pub const R: usize = 3;
    pub const P: usize = 4;
    pub const T: usize = 5;
}

fn named_ideals() -> [Ideal; 6] {
    use monoid::{A, B, C, E, F, F2, G, G2};
    [
        Ideal::from_elements(&[]),
        Ideal::from_elements(&[A, B, C]),
        Ideal::from_elements(&[A, B, C, F, F2]),
        Ideal::from_elements(&[A, B, C, G, G2]),
        Ideal::from_elements(&[A, B, C, F, F2, G, G2]),
        Ideal::from_elements(&[E, F, F2, G, G2, A, B, C]),
    ]
}

/// Every left ideal, found by scanning all 256 subsets of the monoid, in
/// scan order.
pub fn scan_left_ideals(monoid: &TriadicMonoid) -> Vec<Ideal> {
    (0..=255u8)
        .map(Ideal)
        .filter(|i| i.is_left_ideal(monoid))
        .collect()
}

/// The subobject classifier with its monoid action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Omega {
    monoid: TriadicMonoid,
    ideals: [Ideal; 6],
    action: [[usize; 6]; ORDER],
    meet: [[usize; 6]; 6],
}

impl Omega {
    pub fn new() -> Self {
        let monoid = TriadicMonoid::new();
        let mut scanned = scan_left_ideals(&monoid);
        scanned.sort();
        let ideals = named_ideals();
        let mut named = ideals.to_vec();
        named.sort();
        assert_eq!(scanned, named, "left ideals differ from the named list");

        let index = |ideal: Ideal| ideals.iter().position(|&i| i == ideal);
        let mut action = [[0; 6]; ORDER];
        for m in monoid.elements() {
            for (k, &b) in ideals.iter().enumerate() {
                let image = Ideal::from_elements(
                    &monoid
                        .elements()
                        .filter(|&n| b.contains(monoid.compose(n, m)))
                        .collect::<Vec<_>>(),
                );
                action[m][k] = index(image).expect("m·B is a left ideal");
            }
        }
        let mut meet = [[0; 6]; 6];
        for (r, &a) in ideals.iter().enumerate() {
            for (s, &b) in ideals.iter().enumerate() {
                meet[r][s] = index(a.intersect(b)).expect("ideals are closed under meets");
            }
        }
        Omega {
            monoid,
            ideals,
            action,
            meet,
        }
    }

    pub fn monoid(&self) -> &TriadicMonoid {
        &self.monoid
    }

    pub fn ideals(&self) -> &[Ideal; 6] {
        &self.ideals
    }

    pub fn ideal(&self, k: usize) -> Ideal {
        self.ideals[k]
    }

    pub fn index_of(&self, ideal: Ideal) -> Option<usize> {
        self.ideals.iter().position(|&i| i == ideal)
    }

    pub fn name(&self, k: usize) -> &'static str {
        OMEGA_NAMES[k]
    }

    /// `m·B = { n : n∘m ∈ B }`
    pub fn act(&self, m: Element, k: usize) -> usize {
        self.action[m][k]
    }

    pub fn meet(&self, r: usize, s: usize) -> usize {
        self.meet[r][s]
    }
}

impl Default for Omega {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TopologyName {
    T,
    P,
    L,
    R,
    Chromatic1,
    Chromatic2,
}

impl TopologyName {
    pub const ALL: [TopologyName; 6] = [
        TopologyName::T,
        TopologyName::P,
        TopologyName::L,
        TopologyName::R,
        TopologyName::Chromatic1,
        TopologyName::Chromatic2,
    ];

    /// Short key used on the command line.
    pub fn key(self) -> &'static str {
        match self {
            TopologyName::T => "T",
            TopologyName::P => "P",
            TopologyName::L => "L",
            TopologyName::R => "R",
            TopologyName::Chromatic1 => "chromatic1",
            TopologyName::Chromatic2 => "chromatic2",
        }
    }

    /// Display name. The two chromatic topologies are shown as `j_C` and
    /// `j_F` in the order of their value at the empty ideal; which one the
    /// literature calls `j_C` is not determined here.
    pub fn symbol(self) -> &'static str {
        match self {
            TopologyName::T => "j_T",
            TopologyName::P => "j_P",
            TopologyName::L => "j_L",
            TopologyName::R => "j_R",
            TopologyName::Chromatic1 => "j_C",
            TopologyName::Chromatic2 => "j_F",
        }
    }

    /// Name of the upgrade of the C major triad.
    pub fn upgrade_type(self) -> &'static str {
        match self {
            TopologyName::T => "Major Chord",
            TopologyName::P => "Major-Minor Mixture",
            TopologyName::L => "Hexatonic",
            TopologyName::R => "Octatonic",
            TopologyName::Chromatic1 | TopologyName::Chromatic2 => "Chromatic Scale",
        }
    }
}

impl std::str::FromStr for TopologyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TopologyName::ALL
            .into_iter()
            .find(|t| t.key() == s || t.symbol() == s)
            .ok_or_else(|| Error::Parse(format!("unknown topology {s:?}")))
    }
}

/// An endomap of `Ω`, as indices into [`Omega::ideals`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtTopology {
    pub name: TopologyName,
    pub table: [usize; 6],
}

impl LtTopology {
    pub fn apply(&self, k: usize) -> usize {
        self.table[k]
    }
}

/// Equivariance, `j(T) = T`, idempotence and meet preservation.
pub fn is_lt_topology(omega: &Omega, j: &[usize; 6]) -> bool {
    use omega_index::T;
    if j[T] != T {
        return false;
    }
    (0..6).all(|k| j[j[k]] == j[k])
        && (0..6).all(|r| (0..6).all(|s| j[omega.meet(r, s)] == omega.meet(j[r], j[s])))
        && omega
            .monoid()
            .elements()
            .all(|m| (0..6).all(|k| j[omega.act(m, k)] == omega.act(m, j[k])))
}

/// Every endomap of `Ω` satisfying the topology axioms, in lexicographic
/// order of their tables.
pub fn scan_lt_tables(omega: &Omega) -> Vec<[usize; 6]> {
    (0..6usize.pow(6))
        .map(|mut code| {
            let mut table = [0; 6];
            for slot in table.iter_mut().rev() {
                *slot = code % 6;
                code /= 6;
            }
            table
        })
        .filter(|j| is_lt_topology(omega, j))
        .collect()
}

/// The six topologies, named by the upgrade they produce from the C major
/// triad, in the order `j_T, j_P, j_L, j_R, j_C, j_F`. The scan runs once
/// per process; `Omega` has a single value.
pub fn lt_topologies(omega: &Omega) -> Vec<LtTopology> {
    static CACHE: OnceLock<Vec<LtTopology>> = OnceLock::new();
    CACHE.get_or_init(|| name_topologies(omega)).clone()
}

fn name_topologies(omega: &Omega) -> Vec<LtTopology> {
    let natural = MonoidAction::natural();
    let chi = characteristic_morphism(omega, major_triad(), &natural).expect("C is closed");
    let mut chromatic = Vec::new();
    let mut named = Vec::new();
    for table in scan_lt_tables(omega) {
        let carrier = upgrade_with_table(&chi, &table);
        let name = match carrier.values().as_slice() {
            [0, 4, 7] => Some(TopologyName::T),
            [0, 3, 4, 7] => Some(TopologyName::P),
            [0, 3, 4, 7, 8, 11] => Some(TopologyName::L),
            [0, 1, 3, 4, 6, 7, 9, 10] => Some(TopologyName::R),
            _ => None,
        };
        match name {
            Some(name) => named.push(LtTopology { name, table }),
            None => chromatic.push(table),
        }
    }
    chromatic.sort_by_key(|t| (t[omega_index::EMPTY], *t));
    for (table, name) in chromatic
        .into_iter()
        .zip([TopologyName::Chromatic1, TopologyName::Chromatic2])
    {
        named.push(LtTopology { name, table });
    }
    named.sort_by_key(|t| t.name);
    named
}

pub fn topology(omega: &Omega, name: TopologyName) -> LtTopology {
    lt_topologies(omega)
        .into_iter()
        .find(|t| t.name == name)
        .expect("all six topologies are named")
}

/// The classifying map of a closed subset of a monoid action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharMorphism {
    pub subset: PcSet,
    pub conjugator: AffineMap,
    /// `table[z]` indexes [`Omega::ideals`].
    pub table: [usize; 12],
}

impl CharMorphism {
    pub fn apply(&self, z: PitchClass) -> usize {
        self.table[z.value() as usize]
    }
}

/// `χ(z) = { m : m·z ∈ D }`.
pub fn characteristic_morphism(
    omega: &Omega,
    subset: PcSet,
    action: &MonoidAction,
) -> Result<CharMorphism> {
    if !action.is_closed(subset) {
        return Err(Error::NotClosed(subset.to_string()));
    }
    let mut table = [0; 12];
    for z in PitchClass::all() {
        let ideal = Ideal::from_elements(
            &omega
                .monoid()
                .elements()
                .filter(|&m| subset.contains(action.act(m, z)))
                .collect::<Vec<_>>(),
        );
        table[z.value() as usize] = omega.index_of(ideal).expect("χ(z) is a left ideal");
    }
    Ok(CharMorphism {
        subset,
        conjugator: action.conjugator(),
        table,
    })
}

fn upgrade_with_table(chi: &CharMorphism, j: &[usize; 6]) -> PcSet {
    PitchClass::all()
        .filter(|&z| j[chi.apply(z)] == omega_index::T)
        .collect()
}

/// Carrier of the `j`-upgrade: `(j∘χ)⁻¹(T)`.
pub fn upgrade(
    omega: &Omega,
    subset: PcSet,
    action: &MonoidAction,
    j: &LtTopology,
) -> Result<PcSet> {
    let chi = characteristic_morphism(omega, subset, action)?;
    Ok(upgrade_with_table(&chi, &j.table))
}

/// Upgrade of `φ(C)` under the `φ`-conjugated action, computed directly and
/// as the `φ`-image of the upgrade of `C` under the natural action.
pub fn two_path_upgrade(omega: &Omega, phi: AffineMap, j: &LtTopology) -> Result<(PcSet, PcSet)> {
    let conjugated = MonoidAction::conjugated(phi)?;
    let direct = upgrade(omega, phi.image(major_triad()), &conjugated, j)?;
    let natural = upgrade(omega, major_triad(), &MonoidAction::natural(), j)?;
    Ok((direct, phi.image(natural)))
}

/// One row of the conjugated upgrade table.
#[derive(Clone, Debug)]
pub struct ConjugatedUpgrade {
    pub topology: TopologyName,
    pub carrier: PcSet,
    pub carrier_via_image: PcSet,
    pub cover: Vec<Chord>,
    pub cover_via_image: Vec<Chord>,
    pub subgroup_name: &'static str,
    pub subgroup: PermGroup,
    pub simply_transitive: bool,
}

impl ConjugatedUpgrade {
    pub fn paths_agree(&self) -> bool {
        self.carrier == self.carrier_via_image && self.cover == self.cover_via_image
    }
}

/// The `j_P`, `j_L`, `j_R` upgrades of `φ(C)` under the `φ`-conjugated
/// action with their maximal covers and the PLR-subgroups acting on them.
pub fn conjugated_upgrades(omega: &Omega, phi: AffineMap) -> Result<Vec<ConjugatedUpgrade>> {
    let plr = plr_group();
    let p = plr_named(PlrName::P);
    let rows = [
        (TopologyName::P, "<P>", vec![p.clone()]),
        (
            TopologyName::L,
            "<P,L>",
            vec![p.clone(), plr_named(PlrName::L)],
        ),
        (TopologyName::R, "<P,R>", vec![p, plr_named(PlrName::R)]),
    ];
    let natural = MonoidAction::natural();
    rows.into_iter()
        .map(|(name, subgroup_name, gens)| {
            let j = topology(omega, name);
            let (carrier, carrier_via_image) = two_path_upgrade(omega, phi, &j)?;
            let cover = maximal_cover(carrier).chords;
            let natural_upgrade = upgrade(omega, major_triad(), &natural, &j)?;
            let mut cover_via_image: Vec<Chord> = maximal_cover(natural_upgrade)
                .chords
                .into_iter()
                .map(|c| c.transform(phi).expect("T/I maps triads to triads"))
                .collect();
            cover_via_image.sort();
            let subgroup = PermGroup::generate(Chord::COUNT, &gens)?.inherit_labels(&plr);
            let points: Vec<usize> = cover.iter().map(|c| c.index()).collect();
            let simply_transitive = subgroup.is_simply_transitive_on(&points);
            Ok(ConjugatedUpgrade {
                topology: name,
                carrier,
                carrier_via_image,
                cover,
                cover_via_image,
                subgroup_name,
                subgroup,
                simply_transitive,
            })
        })
        .collect()
}
