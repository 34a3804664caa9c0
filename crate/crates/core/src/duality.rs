//! Dual groups in Lewin's sense, the T/I and PLR groups on the 24 consonant
//! triads, and sub-dual systems.
//!
//! Two groups `G, H ≤ Sym(S)` are dual when both act simply transitively and
//! each is the centralizer of the other. For a subgroup `G0 ≤ G` and a base
//! point `s0`, the `G0`-orbit `S0` of `s0` together with
//! `H0 = { h ∈ H : h(s0) ∈ S0 }` gives a dual pair on `S0` after restriction.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::permgroup::{Carrier, PermGroup, Permutation, CENTRALIZER_BOUND};
use crate::zmod::{ti_elements, AffineMap, Chord, PcSet};

/// A group given by its multiplication table, `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

pub const REGULAR_BOUND: usize = 24;

impl AbstractGroup {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if n > REGULAR_BOUND {
            return Err(Error::GroupTooLarge {
                order: n,
                bound: REGULAR_BOUND,
            });
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidTable(format!("table is not {n}x{n}")));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidTable("no identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return Err(Error::InvalidTable(format!("{} has no inverse", labels[a])));
            }
        }
        Ok(AbstractGroup {
            labels,
            table,
            identity,
        })
    }

    /// `Z_n` with labels `0..n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::new(labels, table)
    }

    /// `S_n` as the permutations of `n` points in lexicographic order.
    pub fn symmetric(n: usize) -> Result<Self> {
        use itertools::Itertools;
        let perms: Vec<Permutation> = (0..n)
            .permutations(n)
            .map(|images| Permutation::from_images(images).expect("permutation"))
            .collect();
        let labels = perms.iter().map(|p| format!("{:?}", p.images())).collect();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let ab = a.compose(b);
                        perms.iter().position(|p| *p == ab).expect("closed")
                    })
                    .collect()
            })
            .collect();
        Self::new(labels, table)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("validated")
    }
}

/// Left and right regular representations `λ_a(h) = a·h`, `ρ_a(h) = h·a⁻¹`
/// on the carrier of group elements.
pub fn regular_representations(group: &AbstractGroup) -> Result<(PermGroup, PermGroup)> {
    let n = group.order();
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for a in 0..n {
        let inv = group.inverse(a);
        left.push(Permutation::from_fn(n, |h| group.mul(a, h))?);
        right.push(Permutation::from_fn(n, |h| group.mul(h, inv))?);
    }
    let mut lambda = PermGroup::from_elements(n, left.clone())?;
    let mut rho = PermGroup::from_elements(n, right.clone())?;
    for a in 0..n {
        lambda.set_label(&left[a], format!("lambda({})", group.labels[a]));
        rho.set_label(&right[a], format!("rho({})", group.labels[a]));
    }
    Ok((lambda, rho))
}

/// The dual of a simply transitive group: `ρ(γ) : h·s0 ↦ h·γ⁻¹·s0`.
///
/// Labels are `rho(<label of γ>)` when `γ` is labelled.
pub fn dual_group(group: &PermGroup, base: usize) -> Result<PermGroup> {
    if !group.is_simply_transitive() {
        return Err(Error::NotSimplyTransitive);
    }
    let n = group.degree();
    // mover[x] is the unique element taking the base point to x
    let mover: Vec<&Permutation> = (0..n)
        .map(|x| group.element_mapping(base, x).expect("transitive"))
        .collect();
    let mut images = Vec::with_capacity(group.order());
    for gamma in group.elements() {
        let gamma_inv = gamma.inverse();
        let rho = Permutation::from_fn(n, |x| mover[x].compose(&gamma_inv).apply(base))?;
        images.push((rho, group.label(gamma).map(|l| format!("rho({l})"))));
    }
    let mut dual = PermGroup::from_elements(n, images.iter().map(|(p, _)| p.clone()).collect())?;
    for (p, label) in &images {
        if let Some(l) = label {
            dual.set_label(p, l.clone());
        }
    }
    Ok(dual)
}

/// Simple transitivity of both groups plus elementwise commutation; on
/// carriers small enough for brute force the centralizers are compared too.
pub fn verify_dual(g: &PermGroup, h: &PermGroup) -> bool {
    if g.degree() != h.degree() || !g.is_simply_transitive() || !h.is_simply_transitive() {
        return false;
    }
    if !g.commutes_with(h) {
        return false;
    }
    if g.degree() <= CENTRALIZER_BOUND {
        let (Ok(cg), Ok(ch)) = (g.centralizer_brute(), h.centralizer_brute()) else {
            return false;
        };
        return cg == *h && ch == *g;
    }
    true
}

pub fn chord_carrier() -> Carrier<Chord> {
    Carrier::new(Chord::all())
}

/// The permutation of the 24 triads induced by a T/I element.
pub fn ti_permutation(map: AffineMap) -> Result<Permutation> {
    if !map.is_ti() {
        return Err(Error::NotTi(map.to_string()));
    }
    Permutation::from_fn(Chord::COUNT, |i| {
        Chord::from_index(i)
            .transform(map)
            .expect("T/I maps triads to triads")
            .index()
    })
}

/// The T/I group on the triads, labelled `T0..T11, I0..I11`.
pub fn ti_group() -> PermGroup {
    let perms: Vec<(Permutation, String)> = ti_elements()
        .into_iter()
        .map(|m| (ti_permutation(m).expect("T/I"), m.ti_label().expect("T/I")))
        .collect();
    let mut group =
        PermGroup::from_elements(Chord::COUNT, perms.iter().map(|(p, _)| p.clone()).collect())
            .expect("T/I is a group");
    for (p, l) in &perms {
        group.set_label(p, l.clone());
    }
    group
}

/// The T/I element inducing a chord permutation, if any.
pub fn ti_preimage(perm: &Permutation) -> Option<AffineMap> {
    ti_elements()
        .into_iter()
        .find(|&m| ti_permutation(m).ok().as_ref() == Some(perm))
}

/// Named elements of the PLR group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlrName {
    P,
    L,
    R,
    /// Majors up `k` semitones, minors down `k`.
    Q(u8),
    /// Holds the third, moves root and fifth by a semitone.
    Slide,
}

fn right_multiplication(inversion: AffineMap) -> Permutation {
    let c = Chord::major(0);
    Permutation::from_fn(Chord::COUNT, |i| {
        let chord = Chord::from_index(i);
        let h = ti_elements()
            .into_iter()
            .find(|&h| c.transform(h) == Some(chord))
            .expect("T/I is transitive on triads");
        c.transform(h.compose(inversion)).expect("triad").index()
    })
    .expect("bijection")
}

fn slide() -> Permutation {
    Permutation::from_fn(Chord::COUNT, |i| {
        let chord = Chord::from_index(i);
        let pitches = chord.pitches().values();
        let third = (chord.root.value() + if chord.index() < 12 { 4 } else { 3 }) % 12;
        let moved = [1i64, -1]
            .into_iter()
            .filter_map(|step| {
                let set: PcSet = pitches
                    .iter()
                    .map(|&z| {
                        if z == third {
                            z as i64
                        } else {
                            z as i64 + step
                        }
                    })
                    .map(crate::zmod::PitchClass::new)
                    .collect();
                Chord::from_pitches(set)
            })
            .collect::<Vec<_>>();
        assert_eq!(moved.len(), 1, "slide of {chord} is ambiguous");
        moved[0].index()
    })
    .expect("bijection")
}

pub fn plr_named(name: PlrName) -> Permutation {
    match name {
        PlrName::P => right_multiplication(AffineMap::inversion(7)),
        PlrName::L => right_multiplication(AffineMap::inversion(11)),
        PlrName::R => right_multiplication(AffineMap::inversion(4)),
        PlrName::Q(k) => Permutation::from_fn(Chord::COUNT, |i| {
            let c = Chord::from_index(i);
            let k = k as i64;
            match c.index() < 12 {
                true => Chord::major(c.root.value() as i64 + k).index(),
                false => Chord::minor(c.root.value() as i64 - k).index(),
            }
        })
        .expect("bijection"),
        PlrName::Slide => slide(),
    }
}

/// Conventional name of a PLR element: `Id`, `Qk`, `P`, `L`, `R`, `Sl` or
/// `PQk` (read as `P ∘ Qk`).
pub fn plr_label(perm: &Permutation) -> Option<String> {
    let p = plr_named(PlrName::P);
    for k in 0..12u8 {
        let q = plr_named(PlrName::Q(k));
        if *perm == q {
            return Some(if k == 0 { "Id".into() } else { format!("Q{k}") });
        }
        if *perm == p.compose(&q) {
            return Some(match k {
                0 => "P".into(),
                1 => "Sl".into(),
                4 => "L".into(),
                9 => "R".into(),
                _ => format!("PQ{k}"),
            });
        }
    }
    None
}

/// Parses the names produced by [`plr_label`] (and `Q6Sl`).
pub fn parse_plr_label(label: &str) -> Option<Permutation> {
    let p = plr_named(PlrName::P);
    let q = |k: u8| plr_named(PlrName::Q(k % 12));
    let number = |s: &str| s.parse::<u8>().ok().filter(|&k| k < 12);
    match label {
        "Id" => Some(q(0)),
        "P" => Some(p),
        "L" => Some(plr_named(PlrName::L)),
        "R" => Some(plr_named(PlrName::R)),
        "Sl" => Some(plr_named(PlrName::Slide)),
        "Q6Sl" => Some(q(6).compose(&plr_named(PlrName::Slide))),
        _ => {
            if let Some(k) = label.strip_prefix("PQ").and_then(number) {
                Some(p.compose(&q(k)))
            } else {
                label.strip_prefix('Q').and_then(number).map(q)
            }
        }
    }
}

/// Sort key putting PLR elements in the order `Q0..Q11, PQ0..PQ11`.
pub fn plr_rank(perm: &Permutation) -> usize {
    let p = plr_named(PlrName::P);
    (0..12u8)
        .find_map(|k| {
            let q = plr_named(PlrName::Q(k));
            if *perm == q {
                Some(k as usize)
            } else if *perm == p.compose(&q) {
                Some(12 + k as usize)
            } else {
                None
            }
        })
        .unwrap_or(usize::MAX)
}

/// Sort key putting T/I elements in the order `T0..T11, I0..I11`.
pub fn ti_rank(perm: &Permutation) -> usize {
    ti_preimage(perm)
        .map(|m| (if m.multiplier() == 1 { 0 } else { 12 }) + m.offset() as usize)
        .unwrap_or(usize::MAX)
}

/// The PLR group, built as the dual of the T/I group at the C major triad
/// and labelled with conventional names.
pub fn plr_group() -> PermGroup {
    dual_group(&ti_group(), Chord::major(0).index())
        .expect("T/I is simply transitive")
        .with_labels(plr_label)
}

/// A dual pair `(G, H)` on a shared carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPair {
    pub g: PermGroup,
    pub h: PermGroup,
}

impl DualPair {
    pub fn new(g: PermGroup, h: PermGroup) -> Result<Self> {
        if g.degree() != h.degree() {
            return Err(Error::MixedCarriers(g.degree(), h.degree()));
        }
        if !verify_dual(&g, &h) {
            return Err(Error::NotDual);
        }
        Ok(DualPair { g, h })
    }

    /// `G` = PLR, `H` = T/I on the 24 triads.
    pub fn plr_ti() -> Self {
        DualPair {
            g: plr_group(),
            h: ti_group(),
        }
    }

    pub fn swapped(&self) -> Self {
        DualPair {
            g: self.h.clone(),
            h: self.g.clone(),
        }
    }

    pub fn sub_dual(&self, g0: &PermGroup, base: usize) -> Result<SubDualSystem> {
        if !g0.is_subgroup_of(&self.g) || !g0.verify_axioms() {
            return Err(Error::NotSubgroup);
        }
        if base >= self.g.degree() {
            return Err(Error::UnknownPoint(base.to_string()));
        }
        let g0 = g0.clone().inherit_labels(&self.g);
        let orbit = g0.orbit(base);
        let h0 = PermGroup::from_elements(
            self.h.degree(),
            self.h
                .elements()
                .iter()
                .filter(|h| orbit.contains(&h.apply(base)))
                .cloned()
                .collect(),
        )?
        .inherit_labels(&self.h);
        SubDualSystem::assemble(self.clone(), g0, h0, base, orbit)
    }

    /// One system per `G0`-orbit: the system at `base` and its transforms
    /// by the first elements of `H` (in `H`'s label order given by `rank`)
    /// reaching new orbits. Ordered by smallest point of the orbit.
    pub fn all_orbits(
        &self,
        g0: &PermGroup,
        base: usize,
        rank: impl Fn(&Permutation) -> usize,
    ) -> Result<Vec<SubDualSystem>> {
        let first = self.sub_dual(g0, base)?;
        let mut movers: Vec<&Permutation> = self.h.elements().iter().collect();
        movers.sort_by_key(|p| rank(p));
        let mut covered: BTreeSet<usize> = first.orbit.iter().copied().collect();
        let mut systems = vec![first.clone()];
        for k in movers {
            if covered.contains(&k.apply(base)) {
                continue;
            }
            let system = first.transform(k)?;
            covered.extend(system.orbit.iter().copied());
            systems.push(system);
        }
        systems.sort_by_key(|s| s.orbit[0]);
        Ok(systems)
    }
}

/// Which side of a dual pair an extension should land in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    G,
    H,
}

/// The data `(G0, s0, S0, H0)` together with the restrictions of `G0` and
/// `H0` to `S0`. Restricted groups act on positions in `orbit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubDualSystem {
    pub pair: DualPair,
    pub g0: PermGroup,
    pub h0: PermGroup,
    pub base: usize,
    /// Sorted orbit of `base` under `g0`.
    pub orbit: Vec<usize>,
    pub g0_restricted: PermGroup,
    pub h0_restricted: PermGroup,
}

impl SubDualSystem {
    fn assemble(
        pair: DualPair,
        g0: PermGroup,
        h0: PermGroup,
        base: usize,
        orbit: Vec<usize>,
    ) -> Result<Self> {
        let g0_restricted = g0.restrict(&orbit)?;
        let h0_restricted = h0.restrict(&orbit)?;
        Ok(SubDualSystem {
            pair,
            g0,
            h0,
            base,
            orbit,
            g0_restricted,
            h0_restricted,
        })
    }

    /// The restricted carrier, in chord (index) order.
    pub fn carrier<T: Clone + PartialEq + fmt::Display>(&self, ambient: &Carrier<T>) -> Carrier<T> {
        Carrier::new(
            self.orbit
                .iter()
                .map(|&i| ambient.point(i).clone())
                .collect(),
        )
    }

    /// Rechecks every structural property of the system.
    pub fn verify(&self) -> bool {
        let n = self.orbit.len();
        let h0_expected: Vec<&Permutation> = self
            .pair
            .h
            .elements()
            .iter()
            .filter(|h| self.orbit.contains(&h.apply(self.base)))
            .collect();
        let membership = self
            .pair
            .g
            .elements()
            .iter()
            .filter(|g| self.orbit.contains(&g.apply(self.base)))
            .all(|g| self.g0.contains(g));
        self.g0.orbit(self.base) == self.orbit
            && h0_expected.len() == self.h0.order()
            && h0_expected.iter().all(|h| self.h0.contains(h))
            && self.g0.order() == n
            && self.h0.order() == n
            && self.g0_restricted.order() == n
            && self.h0_restricted.order() == n
            && self.g0.commutes_with(&self.h0)
            && self.g0_restricted.is_simply_transitive()
            && self.h0_restricted.is_simply_transitive()
            && self.g0_restricted.commutes_with(&self.h0_restricted)
            && membership
    }

    /// Moves the base point by `k ∈ H`: the orbit becomes `k·S0` and the
    /// partner `k·H0·k⁻¹`.
    pub fn transform(&self, k: &Permutation) -> Result<SubDualSystem> {
        if !self.pair.h.contains(k) {
            return Err(Error::NotInGroup);
        }
        let base = k.apply(self.base);
        let mut orbit: Vec<usize> = self.orbit.iter().map(|&x| k.apply(x)).collect();
        orbit.sort_unstable();
        let h0 = PermGroup::from_elements(
            self.pair.h.degree(),
            self.h0.elements().iter().map(|h| k.conjugate(h)).collect(),
        )?
        .inherit_labels(&self.pair.h);
        SubDualSystem::assemble(self.pair.clone(), self.g0.clone(), h0, base, orbit)
    }

    /// The unique ambient element restricting to `p` (a permutation of orbit
    /// positions), provided `p` commutes with the opposite restricted group.
    pub fn extend_commuting(&self, p: &Permutation, side: Side) -> Result<Permutation> {
        let n = self.orbit.len();
        if p.degree() != n {
            return Err(Error::MixedCarriers(n, p.degree()));
        }
        let (opposite, ambient, target) = match side {
            Side::G => (&self.h0_restricted, &self.pair.g, &self.g0),
            Side::H => (&self.g0_restricted, &self.pair.h, &self.h0),
        };
        if let Some(witness) = opposite.elements().iter().find(|q| !q.commutes_with(p)) {
            let name = opposite
                .label(witness)
                .map(str::to_string)
                .unwrap_or_else(|| format!("{:?}", witness.images()));
            return Err(Error::DoesNotCommute { witness: name });
        }
        let local_base = self
            .orbit
            .iter()
            .position(|&x| x == self.base)
            .expect("base in orbit");
        let image = self.orbit[p.apply(local_base)];
        let extension = ambient
            .element_mapping(self.base, image)
            .ok_or(Error::NotSimplyTransitive)?;
        if extension.restrict(&self.orbit)? != *p || !target.contains(extension) {
            return Err(Error::NotInGroup);
        }
        Ok(extension.clone())
    }
}

/// Labels the elements of `group` by shortest words in `gens`, reading
/// words left to right: `"LP"` is `L` followed by `P`. Elements come back
/// in breadth-first order, identity first as `"Id"`.
pub fn word_labels(group: &PermGroup, gens: &[(&str, Permutation)]) -> Vec<(String, Permutation)> {
    let identity = Permutation::identity(group.degree());
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut out = vec![("Id".to_string(), identity.clone())];
    let mut queue = VecDeque::from([(String::new(), identity)]);
    while let Some((word, x)) = queue.pop_front() {
        for (name, g) in gens {
            let y = g.compose(&x);
            if group.contains(&y) && seen.insert(y.clone()) {
                let w = format!("{word}{name}");
                out.push((w.clone(), y.clone()));
                queue.push_back((w, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chord(name: &str) -> usize {
        name.parse::<Chord>().unwrap().index()
    }

    fn generated(names: &[PlrName]) -> PermGroup {
        let gens: Vec<Permutation> = names.iter().map(|&n| plr_named(n)).collect();
        PermGroup::generate(Chord::COUNT, &gens)
            .unwrap()
            .inherit_labels(&plr_group())
    }

    #[test]
    fn group_orders() {
        assert_eq!(ti_group().order(), 24);
        assert_eq!(generated(&[PlrName::P, PlrName::L]).order(), 6);
        assert_eq!(generated(&[PlrName::P, PlrName::R]).order(), 8);
    }

    #[test]
    fn plr_orbits() {
        let pl = generated(&[PlrName::P, PlrName::L]);
        let want: BTreeSet<usize> = ["Eb", "eb", "B", "b", "G", "g"].map(chord).into();
        assert_eq!(pl.orbit(chord("Eb")), want.into_iter().collect::<Vec<_>>());

        let pr = generated(&[PlrName::P, PlrName::R]);
        let want: BTreeSet<usize> = ["C", "c", "Eb", "eb", "Gb", "gb", "A", "a"]
            .map(chord)
            .into();
        assert_eq!(pr.orbit(chord("C")), want.into_iter().collect::<Vec<_>>());
        assert_eq!(PermGroup::trivial(24).orbit(chord("C")), vec![chord("C")]);
    }

    #[test]
    fn simple_transitivity_examples() {
        let all: Vec<usize> = (0..24).collect();
        assert!(ti_group().is_simply_transitive_on(&all));
        let pq6 = generated(&[PlrName::P, PlrName::Q(6)]);
        let octatonic_cover: Vec<usize> =
            crate::zmod::maximal_cover(PcSet::from([0, 1, 3, 4, 6, 7, 9, 10]))
                .chords
                .iter()
                .map(|c| c.index())
                .collect();
        assert_eq!(octatonic_cover.len(), 8);
        assert!(!pq6.is_simply_transitive_on(&octatonic_cover));
    }

    #[test]
    fn voice_leading_definitions_agree() {
        let p = plr_named(PlrName::P);
        let l = plr_named(PlrName::L);
        let r = plr_named(PlrName::R);
        for root in 0..12 {
            let major = Chord::major(root).index();
            let minor = Chord::minor(root).index();
            assert_eq!(p.apply(major), minor);
            assert_eq!(l.apply(major), Chord::minor(root + 4).index());
            assert_eq!(l.apply(minor), Chord::major(root + 8).index());
            assert_eq!(r.apply(major), Chord::minor(root + 9).index());
            assert_eq!(r.apply(minor), Chord::major(root + 3).index());
        }
        assert_eq!(r.apply(chord("C")), chord("a"));
    }

    #[test]
    fn l_and_r_in_q_form() {
        let p = plr_named(PlrName::P);
        assert_eq!(plr_named(PlrName::L), p.compose(&plr_named(PlrName::Q(4))));
        assert_eq!(plr_named(PlrName::R), p.compose(&plr_named(PlrName::Q(9))));
    }

    #[test]
    fn slide_is_p_after_q1() {
        let slide = plr_named(PlrName::Slide);
        assert_eq!(slide.apply(chord("C")), chord("db"));
        assert_eq!(
            slide,
            plr_named(PlrName::P).compose(&plr_named(PlrName::Q(1)))
        );
        let group = generated(&[PlrName::Q(6), PlrName::Slide]);
        assert_eq!(group.order(), 4);
        let orbit: Vec<usize> = ["C", "db", "Gb", "g"]
            .map(chord)
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(group.orbit(chord("C")), orbit);
    }

    #[test]
    fn labels_round_trip() {
        for e in plr_group().elements() {
            let label = plr_label(e).unwrap();
            assert_eq!(parse_plr_label(&label).as_ref(), Some(e), "{label}");
        }
        assert!(parse_plr_label("Q12").is_none());
        assert!(parse_plr_label("X").is_none());
    }

    #[test]
    fn dual_of_trivial() {
        let g = PermGroup::trivial(1);
        assert_eq!(dual_group(&g, 0).unwrap(), g);
    }

    #[test]
    fn dual_requires_simple_transitivity() {
        let pl = generated(&[PlrName::P, PlrName::L]);
        assert_eq!(dual_group(&pl, 0), Err(Error::NotSimplyTransitive));
    }

    #[test]
    fn pl_group_is_not_dual_to_itself() {
        let pl = generated(&[PlrName::P, PlrName::L]);
        assert!(!verify_dual(&pl, &pl));
    }

    #[test]
    fn abstract_group_validation() {
        assert!(
            AbstractGroup::new(vec!["e".into(), "x".into()], vec![vec![0, 1], vec![1, 1]]).is_err()
        );
        assert!(AbstractGroup::new(vec!["e".into()], vec![vec![1]]).is_err());
        assert!(AbstractGroup::cyclic(25).is_err());
        assert_eq!(AbstractGroup::symmetric(3).unwrap().order(), 6);
    }

    #[test]
    fn z2_regular_representations() {
        let (l, r) = regular_representations(&AbstractGroup::cyclic(2).unwrap()).unwrap();
        assert_eq!(l, r);
        assert_eq!(l.order(), 2);
        let carrier = Carrier::new(vec!["e".to_string(), "g".to_string()]);
        let rendered: Vec<String> = l
            .elements()
            .iter()
            .map(|p| carrier.render_cycles(p))
            .collect();
        assert_eq!(rendered, vec!["()", "(e g)"]);
    }

    #[test]
    fn sub_dual_rejects_foreign_subgroup() {
        let pair = DualPair::plr_ti();
        let foreign =
            PermGroup::generate(24, &[ti_permutation(AffineMap::inversion(0)).unwrap()]).unwrap();
        assert_eq!(pair.sub_dual(&foreign, 0), Err(Error::NotSubgroup));
    }

    #[test]
    fn transform_rejects_foreign_mover() {
        let pair = DualPair::plr_ti();
        let sys = pair
            .sub_dual(&generated(&[PlrName::P, PlrName::L]), chord("Eb"))
            .unwrap();
        assert_eq!(
            sys.transform(&plr_named(PlrName::P)),
            Err(Error::NotInGroup)
        );
        assert_eq!(sys.transform(&Permutation::identity(24)).unwrap(), sys);
    }

    #[test]
    fn word_labels_for_pl() {
        let pl = generated(&[PlrName::P, PlrName::L]);
        let words = word_labels(
            &pl,
            &[("P", plr_named(PlrName::P)), ("L", plr_named(PlrName::L))],
        );
        let names: Vec<&str> = words.iter().map(|(w, _)| w.as_str()).collect();
        assert_eq!(names, vec!["Id", "P", "L", "PL", "LP", "PLP"]);
    }
}
