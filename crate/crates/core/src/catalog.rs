//! Named small groups and a sampler of their normal subgroups.
//!
//! Names: `Cn` cyclic, `Dn` dihedral of order `2n` (`n >= 3`), `Sn`
//! symmetric, `An` alternating, `Vn` elementary abelian of order `n` acting
//! regularly, `Q8` quaternion in its regular representation. Factors joined
//! by `x` form a direct product on disjoint points, e.g. `D4xC2`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup, SubgroupPair};
use crate::perm::Permutation;

/// The groups the test suites sweep, with their orders.
pub const STANDARD: &[(&str, usize)] = &[
    ("C2", 2),
    ("C3", 3),
    ("C4", 4),
    ("C6", 6),
    ("S3", 6),
    ("D4", 8),
    ("D5", 10),
    ("Q8", 8),
    ("A4", 12),
    ("S4", 24),
    ("C2xC2", 4),
    ("V8", 8),
    ("D4xC2", 16),
    ("C3xS3", 18),
];

/// A degree and generator list in 1-based images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl CatalogEntry {
    pub fn build(&self, limits: &Limits) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::from_one_based(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::generate(self.degree, &gens, limits)
    }
}

fn unknown(name: &str) -> Error {
    Error::UnknownGroup(name.to_string())
}

fn cycle_images(n: usize) -> Vec<u32> {
    (0..n as u32).map(|i| (i + 1) % n as u32 + 1).collect()
}

fn swap_images(n: usize, a: usize, b: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (1..=n as u32).collect();
    v.swap(a - 1, b - 1);
    v
}

// Units 1, i, j, k as 0..4; element index = 4 * sign + unit.
fn quaternion_mul(a: usize, b: usize) -> usize {
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (s, u) = UNIT[a % 4][b % 4];
    4 * ((s + a / 4 + b / 4) % 2) + u
}

fn factor(name: &str) -> Result<(usize, Vec<Vec<u32>>)> {
    if name == "Q8" {
        let right_mult = |g: usize| (0..8).map(|x| quaternion_mul(x, g) as u32 + 1).collect();
        return Ok((8, alloc::vec![right_mult(1), right_mult(2)]));
    }
    let (kind, digits) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
    let n: usize = digits.parse().map_err(|_| unknown(name))?;
    if n == 0 {
        return Err(unknown(name));
    }
    match kind {
        "C" => Ok((n, if n > 1 { alloc::vec![cycle_images(n)] } else { Vec::new() })),
        "D" if n >= 3 => {
            let reflection = (0..n as u32).map(|i| n as u32 - i).collect();
            Ok((n, alloc::vec![cycle_images(n), reflection]))
        }
        "S" => Ok((
            n,
            if n > 1 {
                alloc::vec![swap_images(n, 1, 2), cycle_images(n)]
            } else {
                Vec::new()
            },
        )),
        "A" => {
            let gens = (3..=n)
                .map(|k| {
                    let mut v: Vec<u32> = (1..=n as u32).collect();
                    v[0] = 2;
                    v[1] = k as u32;
                    v[k - 1] = 1;
                    v
                })
                .collect();
            Ok((n, gens))
        }
        "V" if n.is_power_of_two() && n >= 2 => {
            let gens = (0..n.trailing_zeros())
                .map(|j| (0..n as u32).map(|x| (x ^ (1 << j)) + 1).collect())
                .collect();
            Ok((n, gens))
        }
        _ => Err(unknown(name)),
    }
}

/// Resolves a catalog name to a degree and generators.
pub fn entry(name: &str) -> Result<CatalogEntry> {
    let trimmed = name.trim();
    if trimmed.is_empty() {
        return Err(unknown(name));
    }
    let mut degree = 0usize;
    let mut generators = Vec::new();
    let mut factors = Vec::new();
    for part in trimmed.split('x') {
        factors.push(factor(part)?);
    }
    let total: usize = factors.iter().map(|f| f.0).sum();
    for (n, gens) in factors {
        for g in gens {
            let mut v: Vec<u32> = (1..=total as u32).collect();
            for (i, img) in g.iter().enumerate() {
                v[degree + i] = img + degree as u32;
            }
            generators.push(v);
        }
        degree += n;
    }
    Ok(CatalogEntry {
        name: trimmed.to_string(),
        degree,
        generators,
    })
}

/// Builds the named group.
pub fn build(name: &str, limits: &Limits) -> Result<PermGroup> {
    entry(name)?.build(limits)
}

/// A family of normal subgroups: the trivial group, `g`, the normal closure
/// of every cyclic subgroup, and everything obtained from those by joins.
/// Not every normal subgroup need appear. Sorted by order, then elements.
pub fn normal_subgroups_sample(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut found: BTreeSet<PermGroup> = BTreeSet::new();
    found.insert(PermGroup::trivial(g.degree()));
    found.insert(g.clone());
    let mut seen_cyclic: BTreeSet<PermGroup> = BTreeSet::new();
    for x in g.elements() {
        let c = g.cyclic(x)?;
        if seen_cyclic.insert(c.clone()) {
            found.insert(SubgroupPair::new(g.clone(), c)?.normal_closure());
        }
    }
    loop {
        let members: Vec<PermGroup> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if a.is_subgroup_of(b) || b.is_subgroup_of(a) {
                    continue;
                }
                let gens: Vec<Permutation> =
                    a.generators().iter().chain(b.generators()).cloned().collect();
                if found.insert(g.subgroup(&gens)?) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    for n in &found {
        if !SubgroupPair::new(g.clone(), n.clone())?.is_normal() {
            return Err(Error::Invariant(format!("sampled subgroup {n:?} is not normal")));
        }
    }
    Ok(found.into_iter().collect())
}
