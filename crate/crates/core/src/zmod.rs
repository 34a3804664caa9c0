//! Pitch classes, affine maps of Z12 and consonant triads.
//!
//! Pitch classes use the semitone encoding (0 = C, 1 = Db, ..., 11 = B).
//! Chord names are ASCII: major chords start with an upper-case letter
//! ("Eb"), minor chords with a lower-case one ("eb"). Flats are preferred
//! when printing; sharps are accepted when parsing.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub const MODULUS: u8 = 12;

const ROOT_NAMES: [&str; 12] = [
    "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B",
];

fn reduce(value: i64) -> u8 {
    value.rem_euclid(MODULUS as i64) as u8
}

/// A residue class mod 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PitchClass(u8);

impl PitchClass {
    pub fn new(value: i64) -> Self {
        PitchClass(reduce(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = PitchClass> {
        (0..MODULUS).map(PitchClass)
    }

    /// Flat-preferring note name, e.g. `Eb` for 3.
    pub fn name(self) -> &'static str {
        ROOT_NAMES[self.0 as usize]
    }
}

impl std::ops::Add<i64> for PitchClass {
    type Output = PitchClass;

    fn add(self, rhs: i64) -> PitchClass {
        PitchClass::new(self.0 as i64 + rhs)
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The map `z -> m*z + b` on Z12, stored with both coefficients reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineMap {
    m: u8,
    b: u8,
}

/// Multipliers of the invertible affine maps.
pub const UNITS: [u8; 4] = [1, 5, 7, 11];

impl AffineMap {
    pub const IDENTITY: AffineMap = AffineMap { m: 1, b: 0 };

    pub fn new(m: i64, b: i64) -> Self {
        AffineMap {
            m: reduce(m),
            b: reduce(b),
        }
    }

    pub fn constant(value: i64) -> Self {
        AffineMap::new(0, value)
    }

    /// `T_n : z -> z + n`
    pub fn transposition(n: i64) -> Self {
        AffineMap::new(1, n)
    }

    /// `I_n : z -> n - z`
    pub fn inversion(n: i64) -> Self {
        AffineMap::new(11, n)
    }

    pub fn multiplier(self) -> u8 {
        self.m
    }

    pub fn offset(self) -> u8 {
        self.b
    }

    pub fn apply(self, z: PitchClass) -> PitchClass {
        PitchClass::new(self.m as i64 * z.0 as i64 + self.b as i64)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(self, inner: AffineMap) -> AffineMap {
        AffineMap::new(
            self.m as i64 * inner.m as i64,
            self.m as i64 * inner.b as i64 + self.b as i64,
        )
    }

    pub fn is_invertible(self) -> bool {
        UNITS.contains(&self.m)
    }

    pub fn inverse(self) -> Option<AffineMap> {
        // every unit of Z12 is its own inverse
        if !self.is_invertible() {
            return None;
        }
        let m = self.m as i64;
        Some(AffineMap::new(m, -m * self.b as i64))
    }

    /// True for the 24 transpositions and inversions.
    pub fn is_ti(self) -> bool {
        self.m == 1 || self.m == 11
    }

    /// `T4`, `I7`, ... for T/I elements.
    pub fn ti_label(self) -> Option<String> {
        match self.m {
            1 => Some(format!("T{}", self.b)),
            11 => Some(format!("I{}", self.b)),
            _ => None,
        }
    }

    pub fn image(self, set: PcSet) -> PcSet {
        set.iter().map(|z| self.apply(z)).collect()
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m, self.b) {
            (0, b) => write!(f, "z -> {b}"),
            (1, 0) => write!(f, "z -> z"),
            (1, b) => write!(f, "z -> z+{b}"),
            (m, 0) => write!(f, "z -> {m}z"),
            (m, b) => write!(f, "z -> {m}z+{b}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TiKind {
    T,
    I,
}

pub fn ti_element(kind: TiKind, n: i64) -> AffineMap {
    match kind {
        TiKind::T => AffineMap::transposition(n),
        TiKind::I => AffineMap::inversion(n),
    }
}

/// All 24 T/I elements, ordered `T0..T11, I0..I11`.
pub fn ti_elements() -> Vec<AffineMap> {
    (0..12)
        .map(AffineMap::transposition)
        .chain((0..12).map(AffineMap::inversion))
        .collect()
}

impl FromStr for AffineMap {
    type Err = Error;

    /// Parses T/I labels such as `T1`, `I0`, `T_5`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a T/I element: {s:?}"));
        let mut chars = s.trim().chars();
        let kind = match chars.next() {
            Some('T') => TiKind::T,
            Some('I') => TiKind::I,
            _ => return Err(bad()),
        };
        let digits = chars.as_str().trim_start_matches('_');
        let n: i64 = digits.parse().map_err(|_| bad())?;
        if !(0..12).contains(&n) {
            return Err(bad());
        }
        Ok(ti_element(kind, n))
    }
}

/// A subset of Z12, one bit per pitch class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PcSet(u16);

impl PcSet {
    pub const EMPTY: PcSet = PcSet(0);
    pub const FULL: PcSet = PcSet(0x0fff);

    pub fn from_bits(bits: u16) -> Self {
        PcSet(bits & 0x0fff)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, z: PitchClass) -> bool {
        self.0 & (1 << z.0) != 0
    }

    pub fn insert(&mut self, z: PitchClass) {
        self.0 |= 1 << z.0;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PcSet) -> PcSet {
        PcSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: PcSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = PitchClass> {
        PitchClass::all().filter(move |&z| self.contains(z))
    }

    pub fn values(self) -> Vec<u8> {
        self.iter().map(PitchClass::value).collect()
    }

    /// Every subset of Z12, in bitmask order.
    pub fn all_subsets() -> impl Iterator<Item = PcSet> {
        (0u16..4096).map(PcSet)
    }
}

impl FromIterator<PitchClass> for PcSet {
    fn from_iter<I: IntoIterator<Item = PitchClass>>(iter: I) -> Self {
        let mut set = PcSet::EMPTY;
        for z in iter {
            set.insert(z);
        }
        set
    }
}

impl<const N: usize> From<[i64; N]> for PcSet {
    fn from(values: [i64; N]) -> Self {
        values.into_iter().map(PitchClass::new).collect()
    }
}

impl fmt::Display for PcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|z| z.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for PcSet {
    type Err = Error;

    /// Comma-separated residues 0..=11, optionally in braces: `0,4,7`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = PcSet::EMPTY;
        if body.trim().is_empty() {
            return Ok(set);
        }
        for part in body.split(',') {
            let part = part.trim();
            let value: u8 = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad pitch class {part:?} in {s:?}")))?;
            if value >= MODULUS {
                return Err(Error::Parse(format!(
                    "pitch class {value} out of range 0..=11"
                )));
            }
            set.insert(PitchClass(value));
        }
        Ok(set)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quality {
    Major,
    Minor,
}

/// A consonant triad.
///
/// Chord indices put the twelve major chords first (by root), then the
/// twelve minor chords, so `C = 0`, `B = 11`, `c = 12`, `b = 23`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Chord {
    pub root: PitchClass,
    pub quality: Quality,
}

impl Chord {
    pub const COUNT: usize = 24;

    pub fn major(root: i64) -> Self {
        Chord {
            root: PitchClass::new(root),
            quality: Quality::Major,
        }
    }

    pub fn minor(root: i64) -> Self {
        Chord {
            root: PitchClass::new(root),
            quality: Quality::Minor,
        }
    }

    pub fn index(self) -> usize {
        let offset = match self.quality {
            Quality::Major => 0,
            Quality::Minor => 12,
        };
        offset + self.root.0 as usize
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < Self::COUNT, "chord index {index} out of range");
        if index < 12 {
            Chord::major(index as i64)
        } else {
            Chord::minor(index as i64 - 12)
        }
    }

    pub fn all() -> Vec<Chord> {
        (0..Self::COUNT).map(Chord::from_index).collect()
    }

    pub fn pitches(self) -> PcSet {
        let third = match self.quality {
            Quality::Major => 4,
            Quality::Minor => 3,
        };
        [0, third, 7].into_iter().map(|i| self.root + i).collect()
    }

    pub fn from_pitches(set: PcSet) -> Option<Chord> {
        Chord::all().into_iter().find(|c| c.pitches() == set)
    }

    /// Image under an affine map, if the image is again a consonant triad.
    pub fn transform(self, map: AffineMap) -> Option<Chord> {
        Chord::from_pitches(map.image(self.pitches()))
    }

    pub fn name(self) -> String {
        let root = self.root.name();
        match self.quality {
            Quality::Major => root.to_string(),
            Quality::Minor => root.to_lowercase(),
        }
    }
}

impl PartialOrd for Chord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Chord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Chord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a chord name: {s:?}"));
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let quality = if letter.is_ascii_uppercase() {
            Quality::Major
        } else {
            Quality::Minor
        };
        let natural = match letter.to_ascii_uppercase() {
            'C' => 0,
            'D' => 2,
            'E' => 4,
            'F' => 5,
            'G' => 7,
            'A' => 9,
            'B' => 11,
            _ => return Err(bad()),
        };
        let accidental = match chars.as_str() {
            "" => 0,
            "b" => -1,
            "#" => 1,
            _ => return Err(bad()),
        };
        Ok(Chord {
            root: PitchClass::new(natural + accidental),
            quality,
        })
    }
}

/// The consonant triads contained in a pitch-class set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub chords: Vec<Chord>,
    /// Every member of the set lies in at least one of `chords`.
    pub covered: bool,
}

impl Cover {
    pub fn pitch_union(&self) -> PcSet {
        self.chords
            .iter()
            .fold(PcSet::EMPTY, |acc, c| acc.union(c.pitches()))
    }
}

pub fn maximal_cover(set: PcSet) -> Cover {
    let chords: Vec<Chord> = Chord::all()
        .into_iter()
        .filter(|c| c.pitches().is_subset(set))
        .collect();
    let union = chords
        .iter()
        .fold(PcSet::EMPTY, |acc, c| acc.union(c.pitches()));
    Cover {
        covered: set.is_subset(union),
        chords,
    }
}
