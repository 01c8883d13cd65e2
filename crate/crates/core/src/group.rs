//! Finite permutation groups by naive closure.
//!
//! A [`PermGroup`] carries its full element list, sorted by the image-table
//! order of [`Permutation`]. Two groups are equal when their element sets
//! are; the generator list is whatever produced them.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Size limits that keep every computation exact and bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order [`PermGroup::generate`] will materialize.
    pub max_order: usize,
    /// Largest group order for automorphism and endomorphism searches.
    pub max_aut: usize,
    /// Largest `|A|·|B|` for commutator subgroup pair enumeration.
    pub max_pairs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 10_000,
            max_aut: 512,
            max_pairs: 1_000_000,
        }
    }
}

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Arc<[Permutation]>,
    elements: Arc<[Permutation]>,
}

/// Closes `gens` under right multiplication, dropping generators that are
/// already in the group built so far. Returns the kept generators and the
/// element set.
fn close<'a>(
    degree: usize,
    gens: impl IntoIterator<Item = &'a Permutation>,
    cap: usize,
) -> Result<(Vec<Permutation>, BTreeSet<Permutation>)> {
    let mut elements = BTreeSet::new();
    elements.insert(Permutation::identity(degree));
    let mut kept: Vec<Permutation> = Vec::new();
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        if elements.contains(g) {
            continue;
        }
        kept.push(g.clone());
        // Old elements are already closed under the old generators.
        let mut queue: Vec<Permutation> = Vec::new();
        for x in &elements {
            queue.push(x.then(g));
        }
        let mut fresh = Vec::new();
        for y in queue {
            if elements.insert(y.clone()) {
                fresh.push(y);
            }
        }
        while let Some(x) = fresh.pop() {
            if elements.len() > cap {
                return Err(Error::OrderCap { cap });
            }
            for k in &kept {
                let y = x.then(k);
                if !elements.contains(&y) {
                    elements.insert(y.clone());
                    fresh.push(y);
                }
            }
        }
        if elements.len() > cap {
            return Err(Error::OrderCap { cap });
        }
    }
    Ok((kept, elements))
}

impl PermGroup {
    /// The group generated by `gens` inside `Sym(degree)`.
    pub fn generate(degree: usize, gens: &[Permutation], limits: &Limits) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        let (kept, elements) = close(degree, gens, limits.max_order)?;
        Ok(PermGroup {
            degree,
            generators: kept.into(),
            elements: elements.into_iter().collect(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Arc::from([]),
            elements: Arc::from([Permutation::identity(degree)]),
        }
    }

    /// Rebuilds a group from an element set known to be a subgroup. The
    /// generators are chosen greedily in element order.
    pub(crate) fn from_element_set(degree: usize, set: &BTreeSet<Permutation>) -> PermGroup {
        let mut current = BTreeSet::new();
        current.insert(Permutation::identity(degree));
        let mut gens = Vec::new();
        for x in set {
            if current.contains(x) {
                continue;
            }
            gens.push(x.clone());
            // Subgroup of a valid group, so the cap cannot trip.
            current = close(degree, gens.iter(), usize::MAX)
                .expect("degrees agree")
                .1;
        }
        debug_assert_eq!(current.len(), set.len());
        PermGroup {
            degree,
            generators: gens.into(),
            elements: set.iter().cloned().collect(),
        }
    }

    /// The subgroup of `self` generated by `gens`. Every generator must lie
    /// in `self`.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<PermGroup> {
        for g in gens {
            self.check_degree(g)?;
            if !self.contains(g) {
                return Err(Error::NotContained);
            }
        }
        self.subgroup_unchecked(gens.iter())
    }

    fn subgroup_unchecked<'a>(
        &self,
        gens: impl IntoIterator<Item = &'a Permutation>,
    ) -> Result<PermGroup> {
        let (kept, elements) = close(self.degree, gens, self.order())?;
        Ok(PermGroup {
            degree: self.degree,
            generators: kept.into(),
            elements: elements.into_iter().collect(),
        })
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in ascending image-table order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    /// Position of `p` in [`elements`](Self::elements).
    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() <= other.order()
            && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Cyclic subgroup generated by one element of `self`.
    pub fn cyclic(&self, g: &Permutation) -> Result<PermGroup> {
        self.subgroup(core::slice::from_ref(g))
    }

    /// Center of the group.
    pub fn center(&self) -> PermGroup {
        let set: BTreeSet<Permutation> = self
            .elements
            .iter()
            .filter(|x| self.generators.iter().all(|g| x.then(g) == g.then(x)))
            .cloned()
            .collect();
        PermGroup::from_element_set(self.degree, &set)
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PartialOrd for PermGroup {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then order, then element list.
impl Ord for PermGroup {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.degree, self.order(), &self.elements[..]).cmp(&(
            other.degree,
            other.order(),
            &other.elements[..],
        ))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(order {}, <", self.order())?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> on {} points)", self.degree)
    }
}

/// A subgroup together with the group it was taken in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupPair {
    ambient: PermGroup,
    sub: PermGroup,
}

impl SubgroupPair {
    pub fn new(ambient: PermGroup, sub: PermGroup) -> Result<SubgroupPair> {
        if ambient.degree != sub.degree {
            return Err(Error::DegreeMismatch {
                expected: ambient.degree,
                found: sub.degree,
            });
        }
        if !sub.is_subgroup_of(&ambient) {
            return Err(Error::NotContained);
        }
        Ok(SubgroupPair { ambient, sub })
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn sub(&self) -> &PermGroup {
        &self.sub
    }

    /// `|ambient : sub|`.
    pub fn index(&self) -> usize {
        self.ambient.order() / self.sub.order()
    }

    pub fn is_normal(&self) -> bool {
        self.ambient.generators.iter().all(|g| {
            self.sub
                .generators
                .iter()
                .all(|h| self.sub.contains(&h.conjugate_by(g)))
        })
    }

    /// The conjugate subgroup `g⁻¹ · sub · g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<PermGroup> {
        self.ambient.check_degree(g)?;
        if !self.ambient.contains(g) {
            return Err(Error::NotContained);
        }
        let gens: Vec<Permutation> = self.sub.generators.iter().map(|h| h.conjugate_by(g)).collect();
        self.ambient.subgroup_unchecked(gens.iter())
    }

    /// Smallest normal subgroup of the ambient group containing `sub`.
    pub fn normal_closure(&self) -> PermGroup {
        let mut current = self.sub.clone();
        loop {
            let extra: Vec<Permutation> = current
                .generators
                .iter()
                .flat_map(|h| self.ambient.generators.iter().map(move |g| h.conjugate_by(g)))
                .filter(|c| !current.contains(c))
                .collect();
            if extra.is_empty() {
                return current;
            }
            current = self
                .ambient
                .subgroup_unchecked(current.generators.iter().chain(extra.iter()))
                .expect("closure stays inside the ambient group");
        }
    }

    /// Intersection of all conjugates of `sub`; the largest normal subgroup
    /// of the ambient group inside `sub`.
    pub fn normal_core(&self) -> PermGroup {
        let set: BTreeSet<Permutation> = self
            .sub
            .elements
            .iter()
            .filter(|x| {
                self.ambient
                    .elements
                    .iter()
                    .all(|g| self.sub.contains(&x.conjugate_by(g)))
            })
            .cloned()
            .collect();
        PermGroup::from_element_set(self.sub.degree, &set)
    }
}

/// `|ambient : sub|`, verifying containment.
pub fn index(ambient: &PermGroup, sub: &PermGroup) -> Result<usize> {
    Ok(SubgroupPair::new(ambient.clone(), sub.clone())?.index())
}

/// Normality test for `sub` in `ambient`, verifying containment.
pub fn is_normal(ambient: &PermGroup, sub: &PermGroup) -> Result<bool> {
    Ok(SubgroupPair::new(ambient.clone(), sub.clone())?.is_normal())
}

fn require_normal(ambient: &PermGroup, sub: &PermGroup) -> Result<()> {
    if is_normal(ambient, sub)? {
        Ok(())
    } else {
        Err(Error::NotNormal)
    }
}

/// Element-wise intersection of two groups on the same points.
pub fn intersect(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    if a.degree != b.degree {
        return Err(Error::DegreeMismatch {
            expected: a.degree,
            found: b.degree,
        });
    }
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    if small.is_subgroup_of(large) {
        return Ok(small.clone());
    }
    let set: BTreeSet<Permutation> = small
        .elements
        .iter()
        .filter(|x| large.contains(x))
        .cloned()
        .collect();
    Ok(PermGroup::from_element_set(a.degree, &set))
}

/// Intersection of a nonempty family.
pub fn intersect_all(groups: &[PermGroup]) -> Result<PermGroup> {
    let (first, rest) = groups
        .split_first()
        .ok_or_else(|| Error::BadArgument("empty intersection".into()))?;
    rest.iter().try_fold(first.clone(), |acc, g| intersect(&acc, g))
}

/// Join of normal subgroups of `ambient`. It equals the setwise product.
/// The empty product is the trivial group.
pub fn product_of_normals(subs: &[PermGroup], ambient: &PermGroup) -> Result<PermGroup> {
    for s in subs {
        require_normal(ambient, s)?;
    }
    ambient.subgroup_unchecked(subs.iter().flat_map(|s| s.generators.iter()))
}

/// `[A, B]`, generated by `a⁻¹b⁻¹ab` over all element pairs. Both factors
/// must be normal in `ambient`.
pub fn commutator_subgroup(
    a: &PermGroup,
    b: &PermGroup,
    ambient: &PermGroup,
    limits: &Limits,
) -> Result<PermGroup> {
    require_normal(ambient, a)?;
    require_normal(ambient, b)?;
    commutator_of_normals(a, b, ambient, limits)
}

/// [`commutator_subgroup`] without the normality checks.
pub(crate) fn commutator_of_normals(
    a: &PermGroup,
    b: &PermGroup,
    ambient: &PermGroup,
    limits: &Limits,
) -> Result<PermGroup> {
    if a.is_trivial() || b.is_trivial() {
        return Ok(PermGroup::trivial(ambient.degree));
    }
    let pairs = a.order().saturating_mul(b.order());
    if pairs > limits.max_pairs {
        return Err(Error::PairCap {
            pairs,
            cap: limits.max_pairs,
        });
    }
    let mut comms = BTreeSet::new();
    for x in a.elements.iter() {
        let x_inv = x.inverse();
        for y in b.elements.iter() {
            let c = x_inv.then(&y.inverse()).then(x).then(y);
            if !c.is_identity() {
                comms.insert(c);
            }
        }
    }
    ambient.subgroup_unchecked(comms.iter())
}
