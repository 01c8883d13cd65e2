//! Automorphisms and endomorphisms of small permutation groups by image
//! search.
//!
//! A generating set is picked greedily (each step takes the first element,
//! in element order, that grows the generated subgroup the most). Images of
//! the generators are then searched among elements of a compatible order,
//! and every partial assignment is extended over the subgroup it generates
//! so inconsistent prefixes are pruned early. Maps come out in
//! lexicographic order of their generator-image tuples.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::perm::Permutation;

/// A total map between two groups, stored as one image per domain element.
#[derive(Clone)]
pub struct GroupMap {
    domain: PermGroup,
    codomain: PermGroup,
    // Positions in `codomain.elements()`, indexed by domain position.
    table: Arc<[u32]>,
    is_homomorphism: bool,
    is_injective: bool,
    is_surjective: bool,
}

impl GroupMap {
    pub fn identity(g: &PermGroup) -> GroupMap {
        GroupMap {
            domain: g.clone(),
            codomain: g.clone(),
            table: (0..g.order() as u32).collect(),
            is_homomorphism: true,
            is_injective: true,
            is_surjective: true,
        }
    }

    /// Builds a map from explicit images, one per domain element in element
    /// order. The homomorphism flag is checked on all pairs.
    pub fn from_images(
        domain: &PermGroup,
        codomain: &PermGroup,
        images: &[Permutation],
    ) -> Result<GroupMap> {
        if images.len() != domain.order() {
            return Err(Error::BadArgument(alloc::format!(
                "{} images for a domain of order {}",
                images.len(),
                domain.order()
            )));
        }
        let table = images
            .iter()
            .map(|x| codomain.position(x).map(|p| p as u32).ok_or(Error::NotContained))
            .collect::<Result<Vec<_>>>()?;
        let mut map = GroupMap::with_table(domain, codomain, table, false);
        map.is_homomorphism = map.check_homomorphism();
        Ok(map)
    }

    fn with_table(
        domain: &PermGroup,
        codomain: &PermGroup,
        table: Vec<u32>,
        is_homomorphism: bool,
    ) -> GroupMap {
        let distinct: BTreeSet<u32> = table.iter().copied().collect();
        GroupMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            is_homomorphism,
            is_injective: distinct.len() == domain.order(),
            is_surjective: distinct.len() == codomain.order(),
            table: table.into(),
        }
    }

    pub fn domain(&self) -> &PermGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &PermGroup {
        &self.codomain
    }

    pub fn is_homomorphism(&self) -> bool {
        self.is_homomorphism
    }

    pub fn is_injective(&self) -> bool {
        self.is_injective
    }

    pub fn is_surjective(&self) -> bool {
        self.is_surjective
    }

    pub fn is_automorphism(&self) -> bool {
        self.is_homomorphism && self.is_injective && self.is_surjective && self.domain == self.codomain
    }

    /// Image of a domain element.
    pub fn image(&self, x: &Permutation) -> Result<&Permutation> {
        let i = self.domain.position(x).ok_or(Error::NotContained)?;
        Ok(&self.codomain.elements()[self.table[i] as usize])
    }

    /// Images of all domain elements in domain order.
    pub fn images(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.table
            .iter()
            .map(move |&j| &self.codomain.elements()[j as usize])
    }

    /// Checks `f(xy) = f(x)f(y)` on every pair of domain elements.
    pub fn check_homomorphism(&self) -> bool {
        let elems = self.domain.elements();
        let cod = self.codomain.elements();
        elems.iter().enumerate().all(|(i, x)| {
            let fx = &cod[self.table[i] as usize];
            elems.iter().enumerate().all(|(j, y)| {
                let xy = self.domain.position(&x.then(y)).expect("closed");
                let fxy = &cod[self.table[xy] as usize];
                *fxy == fx.then(&cod[self.table[j] as usize])
            })
        })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GroupMap) -> Result<GroupMap> {
        if self.codomain != next.domain {
            return Err(Error::BadArgument("maps do not compose".into()));
        }
        let table: Vec<u32> = self.table.iter().map(|&j| next.table[j as usize]).collect();
        Ok(GroupMap::with_table(
            &self.domain,
            &next.codomain,
            table,
            self.is_homomorphism && next.is_homomorphism,
        ))
    }

    /// Inverse of a bijective self-map.
    pub fn inverse(&self) -> Result<GroupMap> {
        if !(self.is_injective && self.is_surjective) || self.domain != self.codomain {
            return Err(Error::BadArgument("map is not invertible".into()));
        }
        let mut table = vec![0u32; self.table.len()];
        for (i, &j) in self.table.iter().enumerate() {
            table[j as usize] = i as u32;
        }
        Ok(GroupMap::with_table(
            &self.codomain,
            &self.domain,
            table,
            self.is_homomorphism,
        ))
    }

    /// Image of a subgroup of the domain under a homomorphism.
    pub fn apply_to_subgroup(&self, sub: &PermGroup) -> Result<PermGroup> {
        if !self.is_homomorphism {
            return Err(Error::BadArgument("map is not a homomorphism".into()));
        }
        if !sub.is_subgroup_of(&self.domain) {
            return Err(Error::NotContained);
        }
        let gens = sub
            .generators()
            .iter()
            .map(|g| self.image(g).cloned())
            .collect::<Result<Vec<_>>>()?;
        self.codomain.subgroup(&gens)
    }
}

impl PartialEq for GroupMap {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.table == other.table
    }
}

impl Eq for GroupMap {}

impl fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("GroupMap {")?;
        for (k, g) in self.domain.generators().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, " {g} -> {}", self.image(g).expect("generator in domain"))?;
        }
        f.write_str(" }")
    }
}

/// A small generating set, chosen greedily for fastest growth.
pub fn greedy_generators(g: &PermGroup) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermGroup::trivial(g.degree());
    while current.order() < g.order() {
        let mut best: Option<(usize, &Permutation, PermGroup)> = None;
        for x in g.elements() {
            if current.contains(x) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x.clone());
            let h = g.subgroup(&trial).expect("elements of g");
            if best.as_ref().is_none_or(|(size, _, _)| h.order() > *size) {
                let done = h.order() == g.order();
                best = Some((h.order(), x, h));
                if done {
                    break;
                }
            }
        }
        let (_, x, h) = best.expect("a proper subgroup misses some element");
        gens.push(x.clone());
        current = h;
    }
    gens
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Search {
    /// Generator images of equal order; keep bijective maps.
    Automorphisms,
    /// Generator images of dividing order; keep every homomorphism.
    Endomorphisms,
}

struct ImageSearch<'a> {
    group: &'a PermGroup,
    gens: Vec<Permutation>,
    candidates: Vec<Vec<u32>>,
    mode: Search,
    found: Vec<GroupMap>,
}

impl ImageSearch<'_> {
    fn run(&mut self, chosen: &mut Vec<u32>) {
        let level = chosen.len();
        let Some(table) = self.extend(chosen) else {
            return;
        };
        if level == self.gens.len() {
            let map = GroupMap::with_table(self.group, self.group, table, true);
            if self.mode == Search::Endomorphisms || map.is_injective {
                self.found.push(map);
            }
            return;
        }
        for k in 0..self.candidates[level].len() {
            chosen.push(self.candidates[level][k]);
            self.run(chosen);
            chosen.pop();
        }
    }

    /// Extends the assignment `gens[..k] -> chosen` over the subgroup the
    /// first `k` generators span. `None` if the assignment is not
    /// consistent with a homomorphism. At full depth the result covers the
    /// whole group.
    fn extend(&self, chosen: &[u32]) -> Option<Vec<u32>> {
        let elems = self.group.elements();
        let pos = |p: &Permutation| self.group.position(p).expect("closed") as u32;
        let mut table: Vec<Option<u32>> = vec![None; elems.len()];
        let id = pos(&self.group.identity());
        table[id as usize] = Some(id);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            let fx = &elems[table[x as usize].expect("visited") as usize];
            for (g, &img) in self.gens.iter().zip(chosen) {
                let y = pos(&elems[x as usize].then(g));
                let fy = pos(&fx.then(&elems[img as usize]));
                match table[y as usize] {
                    None => {
                        table[y as usize] = Some(fy);
                        queue.push(y);
                    }
                    Some(prev) if prev != fy => return None,
                    Some(_) => {}
                }
            }
        }
        if chosen.len() == self.gens.len() {
            Some(table.into_iter().map(|t| t.expect("gens span the group")).collect())
        } else {
            Some(Vec::new())
        }
    }
}

fn search(g: &PermGroup, limits: &Limits, mode: Search) -> Result<Vec<GroupMap>> {
    if g.order() > limits.max_aut {
        return Err(Error::AutCap {
            order: g.order(),
            cap: limits.max_aut,
        });
    }
    let gens = greedy_generators(g);
    let orders: Vec<u64> = g.elements().iter().map(Permutation::order).collect();
    let candidates = gens
        .iter()
        .map(|x| {
            let ox = x.order();
            (0..g.order() as u32)
                .filter(|&e| match mode {
                    Search::Automorphisms => orders[e as usize] == ox,
                    Search::Endomorphisms => ox % orders[e as usize] == 0,
                })
                .collect()
        })
        .collect();
    let mut s = ImageSearch {
        group: g,
        gens,
        candidates,
        mode,
        found: Vec::new(),
    };
    s.run(&mut Vec::new());
    Ok(s.found)
}

/// Every automorphism of `g`.
pub fn automorphism_group(g: &PermGroup, limits: &Limits) -> Result<Vec<GroupMap>> {
    search(g, limits, Search::Automorphisms)
}

/// Every homomorphism `g -> g`.
pub fn endomorphisms(g: &PermGroup, limits: &Limits) -> Result<Vec<GroupMap>> {
    search(g, limits, Search::Endomorphisms)
}

/// Every homomorphism of `g` onto itself. For a finite group this is the
/// automorphism group, in the same order.
pub fn surjective_endomorphisms(g: &PermGroup, limits: &Limits) -> Result<Vec<GroupMap>> {
    let mut maps = endomorphisms(g, limits)?;
    maps.retain(GroupMap::is_surjective);
    Ok(maps)
}

/// Whether every map in `maps` sends `sub` onto itself.
pub fn is_invariant_under(sub: &PermGroup, maps: &[GroupMap]) -> Result<bool> {
    for m in maps {
        if m.apply_to_subgroup(sub)? != *sub {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `sub` is characteristic in `g`.
pub fn is_characteristic(g: &PermGroup, sub: &PermGroup, limits: &Limits) -> Result<bool> {
    is_invariant_under(sub, &automorphism_group(g, limits)?)
}
