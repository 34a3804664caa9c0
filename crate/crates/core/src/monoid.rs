//! The triadic monoid: the eight affine maps of Z12 sending {0,4,7} into
//! itself, and its actions on Z12.
//!
//! Element labels follow the Cayley graph of the monoid with respect to `f`
//! and `g`: `e, f, f2, g, g2, a, b, c`, where `a, b, c` are the constant
//! maps to 0, 4 and 7 (a labelling convention).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::zmod::{AffineMap, PcSet, PitchClass};

/// Index of a monoid element in label order `e, f, f2, g, g2, a, b, c`.
pub type Element = usize;

pub const LABELS: [&str; 8] = ["e", "f", "f2", "g", "g2", "a", "b", "c"];

pub const E: Element = 0;
pub const F: Element = 1;
pub const F2: Element = 2;
pub const G: Element = 3;
pub const G2: Element = 4;
pub const A: Element = 5;
pub const B: Element = 6;
pub const C: Element = 7;

pub const ORDER: usize = 8;

/// The C major triad stabilized by the monoid.
pub fn major_triad() -> PcSet {
    PcSet::from([0, 4, 7])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriadicMonoid {
    maps: [AffineMap; ORDER],
    /// `table[m][n]` is the index of `m ∘ n`.
    table: [[Element; ORDER]; ORDER],
}

impl TriadicMonoid {
    /// Closes `{f, g}` under composition, adds the identity and labels the
    /// result.
    pub fn new() -> Self {
        let f = AffineMap::new(3, 7);
        let g = AffineMap::new(8, 4);
        let mut found: BTreeSet<AffineMap> = BTreeSet::from([AffineMap::IDENTITY, f, g]);
        loop {
            let products: Vec<AffineMap> = found
                .iter()
                .flat_map(|&x| [f.compose(x), g.compose(x)])
                .collect();
            let before = found.len();
            found.extend(products);
            if found.len() == before {
                break;
            }
        }
        let maps = [
            AffineMap::IDENTITY,
            f,
            f.compose(f),
            g,
            g.compose(g),
            AffineMap::constant(0),
            AffineMap::constant(4),
            AffineMap::constant(7),
        ];
        assert_eq!(
            found,
            maps.iter().copied().collect::<BTreeSet<_>>(),
            "generated monoid differs from the labelled element list"
        );
        let mut table = [[0; ORDER]; ORDER];
        for m in 0..ORDER {
            for n in 0..ORDER {
                let product = maps[m].compose(maps[n]);
                table[m][n] = maps.iter().position(|&x| x == product).expect("closed");
            }
        }
        TriadicMonoid { maps, table }
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..ORDER
    }

    pub fn map(&self, m: Element) -> AffineMap {
        self.maps[m]
    }

    pub fn maps(&self) -> &[AffineMap; ORDER] {
        &self.maps
    }

    pub fn label(&self, m: Element) -> &'static str {
        LABELS[m]
    }

    pub fn index_of(&self, map: AffineMap) -> Option<Element> {
        self.maps.iter().position(|&x| x == map)
    }

    /// `m ∘ n` (apply `n` first).
    pub fn compose(&self, m: Element, n: Element) -> Element {
        self.table[m][n]
    }

    pub fn table(&self) -> &[[Element; ORDER]; ORDER] {
        &self.table
    }

    pub fn has_two_sided_inverse(&self, m: Element) -> bool {
        self.elements()
            .any(|n| self.compose(m, n) == E && self.compose(n, m) == E)
    }
}

impl Default for TriadicMonoid {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for TriadicMonoid {
    /// Composition table; row `m`, column `n` holds `m ∘ n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>3} |", "o")?;
        for n in self.elements() {
            write!(f, " {:>3}", LABELS[n])?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat(5 + 4 * ORDER))?;
        for m in self.elements() {
            write!(f, "{:>3} |", LABELS[m])?;
            for n in self.elements() {
                write!(f, " {:>3}", LABELS[self.compose(m, n)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// An action of the triadic monoid on Z12, either the natural one or its
/// conjugate `t ↦ φ ∘ t ∘ φ⁻¹` by a T/I element `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidAction {
    monoid: TriadicMonoid,
    conjugator: AffineMap,
    table: [[PitchClass; 12]; ORDER],
}

impl MonoidAction {
    pub fn natural() -> Self {
        Self::conjugated(AffineMap::IDENTITY).expect("identity is T/I")
    }

    pub fn conjugated(phi: AffineMap) -> Result<Self> {
        if !phi.is_ti() {
            return Err(Error::NotTi(phi.to_string()));
        }
        let phi_inv = phi.inverse().expect("T/I elements are invertible");
        let monoid = TriadicMonoid::new();
        let mut table = [[PitchClass::new(0); 12]; ORDER];
        for m in monoid.elements() {
            let acting = phi.compose(monoid.map(m)).compose(phi_inv);
            for z in PitchClass::all() {
                table[m][z.value() as usize] = acting.apply(z);
            }
        }
        Ok(MonoidAction {
            monoid,
            conjugator: phi,
            table,
        })
    }

    pub fn monoid(&self) -> &TriadicMonoid {
        &self.monoid
    }

    pub fn conjugator(&self) -> AffineMap {
        self.conjugator
    }

    pub fn act(&self, m: Element, z: PitchClass) -> PitchClass {
        self.table[m][z.value() as usize]
    }

    pub fn is_closed(&self, set: PcSet) -> bool {
        self.monoid
            .elements()
            .all(|m| set.iter().all(|z| set.contains(self.act(m, z))))
    }

    /// Smallest closed superset of `set`.
    pub fn closure(&self, set: PcSet) -> PcSet {
        let mut result = PcSet::EMPTY;
        for z in set.iter() {
            for m in self.monoid.elements() {
                result.insert(self.act(m, z));
            }
        }
        result
    }
}
