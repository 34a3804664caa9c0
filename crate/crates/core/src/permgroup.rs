//! Permutations and permutation groups on small indexed carriers.
//!
//! Points are carrier indices `0..degree`. Composition is right-to-left
//! everywhere: `p.compose(&q)` applies `q` first.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest carrier handed to [`PermGroup::centralizer_brute`] (8! candidates).
pub const CENTRALIZER_BOUND: usize = 8;

/// Largest group handed to [`PermGroup::all_subgroups`].
pub const SUBGROUP_BOUND: usize = 48;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotABijection(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::from_images((0..degree).map(f).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        assert_eq!(self.degree(), inner.degree(), "mixed carriers");
        Permutation {
            images: inner.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `self ∘ other ∘ self⁻¹`
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        self.compose(other).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.compose(self);
            k += 1;
        }
        k
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn preserves(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&x| subset.contains(&self.apply(x)))
    }

    /// The permutation induced on `subset`, indexed by position in `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Permutation> {
        let images = subset
            .iter()
            .map(|&x| {
                let y = self.apply(x);
                subset
                    .iter()
                    .position(|&s| s == y)
                    .ok_or(Error::DoesNotPreserve)
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by
    /// that starting point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }
}

/// An ordered list of named points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier<T> {
    points: Vec<T>,
}

impl<T: Clone + PartialEq + fmt::Display> Carrier<T> {
    pub fn new(points: Vec<T>) -> Self {
        Carrier { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &T {
        &self.points[index]
    }

    pub fn index_of(&self, point: &T) -> Option<usize> {
        self.points.iter().position(|p| p == point)
    }

    /// Cycle notation, e.g. `(Eb G B)(eb b g)`; the identity is `()`.
    pub fn render_cycles(&self, perm: &Permutation) -> String {
        let cycles = perm.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                format!(
                    "({})",
                    c.iter().map(|&i| self.points[i].to_string()).join(" ")
                )
            })
            .collect()
    }

    /// Inverse of [`Carrier::render_cycles`]; accepts cycles in any order.
    pub fn parse_cycles(&self, text: &str) -> Result<Permutation>
    where
        T: std::str::FromStr,
    {
        let mut images: Vec<usize> = (0..self.len()).collect();
        let mut rest = text.trim();
        let mut touched = BTreeSet::new();
        while !rest.is_empty() {
            let body_end = rest
                .find(')')
                .filter(|_| rest.starts_with('('))
                .ok_or_else(|| Error::Parse(format!("malformed cycle notation {text:?}")))?;
            let body = &rest[1..body_end];
            let points = body
                .split_whitespace()
                .map(|name| {
                    let point: T = name
                        .parse()
                        .map_err(|_| Error::UnknownPoint(name.to_string()))?;
                    self.index_of(&point)
                        .ok_or_else(|| Error::UnknownPoint(name.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            for (k, &p) in points.iter().enumerate() {
                if !touched.insert(p) {
                    return Err(Error::Parse(format!("point repeated in {text:?}")));
                }
                images[p] = points[(k + 1) % points.len()];
            }
            rest = rest[body_end + 1..].trim_start();
        }
        Permutation::from_images(images)
    }
}

/// A finite group of permutations of one carrier, with optional display
/// labels. Labels never take part in equality.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    labels: BTreeMap<Permutation, String>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
            labels: BTreeMap::new(),
        }
    }

    /// Smallest group containing `gens`.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::MixedCarriers(degree, g.degree()));
            }
        }
        let identity = Permutation::identity(degree);
        let mut found = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        // right multiplication by generators reaches the whole group; finite
        // order means inverses come for free
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.compose(g);
                if found.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements: found.into_iter().collect(),
            labels: BTreeMap::new(),
        })
    }

    /// Builds a group from an explicit element list, checking the axioms.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        for e in &elements {
            if e.degree() != degree {
                return Err(Error::MixedCarriers(degree, e.degree()));
            }
        }
        let set: BTreeSet<Permutation> = elements.into_iter().collect();
        let group = PermGroup {
            degree,
            elements: set.into_iter().collect(),
            labels: BTreeMap::new(),
        };
        if !group.verify_axioms() {
            return Err(Error::NotSubgroup);
        }
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in canonical (image table) order; the identity is first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn label(&self, p: &Permutation) -> Option<&str> {
        self.labels.get(p).map(String::as_str)
    }

    pub fn set_label(&mut self, p: &Permutation, label: impl Into<String>) {
        if self.contains(p) {
            self.labels.insert(p.clone(), label.into());
        }
    }

    pub fn with_labels(mut self, label: impl Fn(&Permutation) -> Option<String>) -> Self {
        for e in &self.elements {
            if let Some(l) = label(e) {
                self.labels.insert(e.clone(), l);
            }
        }
        self
    }

    /// Copies labels from `other` for shared elements.
    pub fn inherit_labels(mut self, other: &PermGroup) -> Self {
        for e in &self.elements {
            if let Some(l) = other.labels.get(e) {
                self.labels.insert(e.clone(), l.clone());
            }
        }
        self
    }

    /// Finds the element labelled `label`.
    pub fn by_label(&self, label: &str) -> Option<&Permutation> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(p, _)| p)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// Exhaustive check of identity, closure and inverses.
    pub fn verify_axioms(&self) -> bool {
        if !self.contains(&Permutation::identity(self.degree)) {
            return false;
        }
        self.elements.iter().all(|a| {
            self.contains(&a.inverse())
                && self.elements.iter().all(|b| self.contains(&a.compose(b)))
        })
    }

    pub fn commutes_with(&self, other: &PermGroup) -> bool {
        self.elements
            .iter()
            .all(|a| other.elements.iter().all(|b| a.commutes_with(b)))
    }

    /// Sorted orbit of `point`.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.elements.iter().map(|p| p.apply(point)).collect();
        set.into_iter().collect()
    }

    /// All orbits, ordered by their smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let orbit = self.orbit(x);
                for &y in &orbit {
                    seen[y] = true;
                }
                orbits.push(orbit);
            }
        }
        orbits
    }

    /// True iff the group preserves `subset` and acts on it transitively
    /// with trivial point stabilizers.
    pub fn is_simply_transitive_on(&self, subset: &[usize]) -> bool {
        let Some(&first) = subset.first() else {
            return false;
        };
        if !self.elements.iter().all(|p| p.preserves(subset)) {
            return false;
        }
        let orbit = self.orbit(first);
        orbit.len() == subset.len() && self.order() == subset.len()
    }

    pub fn is_simply_transitive(&self) -> bool {
        let all: Vec<usize> = (0..self.degree).collect();
        self.is_simply_transitive_on(&all)
    }

    /// The unique element sending `from` to `to`, for simply transitive groups.
    pub fn element_mapping(&self, from: usize, to: usize) -> Option<&Permutation> {
        self.elements.iter().find(|p| p.apply(from) == to)
    }

    /// The group induced on `subset`, indexed by position in `subset`.
    /// Labels carry over.
    pub fn restrict(&self, subset: &[usize]) -> Result<PermGroup> {
        let mut labels = BTreeMap::new();
        let mut elements = BTreeSet::new();
        for e in &self.elements {
            let r = e.restrict(subset)?;
            if let Some(l) = self.labels.get(e) {
                labels.entry(r.clone()).or_insert_with(|| l.clone());
            }
            elements.insert(r);
        }
        Ok(PermGroup {
            degree: subset.len(),
            elements: elements.into_iter().collect(),
            labels,
        })
    }

    /// Centralizer in the full symmetric group, by trying every permutation
    /// of the carrier.
    pub fn centralizer_brute(&self) -> Result<PermGroup> {
        if self.degree > CENTRALIZER_BOUND {
            return Err(Error::CarrierTooLarge {
                size: self.degree,
                bound: CENTRALIZER_BOUND,
            });
        }
        let elements: Vec<Permutation> = (0..self.degree)
            .permutations(self.degree)
            .map(|images| Permutation { images })
            .filter(|p| self.elements.iter().all(|g| g.commutes_with(p)))
            .collect();
        Ok(PermGroup {
            degree: self.degree,
            elements, // permutations() yields lexicographic order
            labels: BTreeMap::new(),
        })
    }

    /// Every subgroup, each once, ordered by order then by element list.
    ///
    /// Subgroups are found as closures of element pairs, which reaches every
    /// subgroup of a dihedral or cyclic group.
    pub fn all_subgroups(&self) -> Result<Vec<PermGroup>> {
        let n = self.order();
        if n > SUBGROUP_BOUND {
            return Err(Error::GroupTooLarge {
                order: n,
                bound: SUBGROUP_BOUND,
            });
        }
        let index: BTreeMap<&Permutation, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let table: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|a| self.elements.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();

        let close = |gens: &[usize]| -> u64 {
            let mut mask = 1u64; // identity is element 0
            let mut queue = VecDeque::from([0usize]);
            while let Some(x) = queue.pop_front() {
                for &g in gens {
                    let y = table[x][g];
                    if mask & (1 << y) == 0 {
                        mask |= 1 << y;
                        queue.push_back(y);
                    }
                }
            }
            mask
        };

        let mut masks = BTreeSet::new();
        for i in 0..n {
            for j in i..n {
                masks.insert(close(&[i, j]));
            }
        }
        let mut groups: Vec<PermGroup> = masks
            .into_iter()
            .map(|mask| {
                let elements: Vec<Permutation> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.elements[i].clone())
                    .collect();
                PermGroup {
                    degree: self.degree,
                    elements,
                    labels: BTreeMap::new(),
                }
                .inherit_labels(self)
            })
            .collect();
        groups.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements.cmp(&b.elements))
        });
        Ok(groups)
    }
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .elements
            .iter()
            .map(|e| match self.labels.get(e) {
                Some(l) => l.clone(),
                None => format!("{:?}", e.images),
            })
            .collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}
