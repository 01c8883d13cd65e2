//! Brute-force reference computations, kept separate from the main paths so
//! they can cross-check them. Exponential; desk-scale inputs only.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::word::OuterWord;

/// Subgroup of `ambient` generated by `w(h1, ..., ht)` over every tuple with
/// `hi` in `args[i]`. Fails if there are more than `max_tuples` tuples.
pub fn verbal_by_enumeration(
    w: &OuterWord,
    args: &[PermGroup],
    ambient: &PermGroup,
    max_tuples: usize,
) -> Result<PermGroup> {
    if args.len() != w.weight() {
        return Err(Error::Arity {
            expected: w.weight(),
            found: args.len(),
        });
    }
    let tuples = args
        .iter()
        .try_fold(1usize, |acc, a| acc.checked_mul(a.order()))
        .unwrap_or(usize::MAX);
    if tuples > max_tuples {
        return Err(Error::PairCap {
            pairs: tuples,
            cap: max_tuples,
        });
    }
    let mut values = BTreeSet::new();
    let mut idx = alloc::vec![0usize; args.len()];
    loop {
        let tuple: Vec<Permutation> = idx
            .iter()
            .zip(args)
            .map(|(&i, a)| a.elements()[i].clone())
            .collect();
        values.insert(w.evaluate(&tuple)?);
        // Odometer increment.
        let mut k = 0;
        loop {
            if k == idx.len() {
                let gens: Vec<Permutation> = values.into_iter().collect();
                return ambient.subgroup(&gens);
            }
            idx[k] += 1;
            if idx[k] < args[k].order() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Whether `w` evaluates to the identity on every tuple from `g`.
pub fn law_holds_by_enumeration(w: &OuterWord, g: &PermGroup, max_tuples: usize) -> Result<bool> {
    let args = alloc::vec![g.clone(); w.weight()];
    Ok(verbal_by_enumeration(w, &args, g, max_tuples)?.is_trivial())
}

/// Every automorphism of `g`, found by trying all images of the stored
/// generators and testing the full multiplication table. Each map is
/// returned as the list of images of `g.elements()`.
pub fn automorphisms_by_brute_force(g: &PermGroup) -> Vec<Vec<Permutation>> {
    let gens = g.generators();
    let elems = g.elements();
    let mut out = Vec::new();
    let mut idx = alloc::vec![0usize; gens.len()];
    loop {
        if let Some(table) = induced_table(g, &idx) {
            let distinct: BTreeSet<&Permutation> = table.values().collect();
            let hom = elems.iter().all(|x| {
                elems
                    .iter()
                    .all(|y| table[&x.compose(y).unwrap()] == table[x].compose(&table[y]).unwrap())
            });
            if hom && distinct.len() == elems.len() {
                out.push(elems.iter().map(|x| table[x].clone()).collect());
            }
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

// Extends generator images along words; None when two words disagree.
fn induced_table(g: &PermGroup, images: &[usize]) -> Option<BTreeMap<Permutation, Permutation>> {
    let mut table = BTreeMap::new();
    table.insert(g.identity(), g.identity());
    let mut frontier = alloc::vec![g.identity()];
    while let Some(x) = frontier.pop() {
        let fx = table[&x].clone();
        for (gen, &i) in g.generators().iter().zip(images) {
            let y = x.compose(gen).unwrap();
            let fy = fx.compose(&g.elements()[i]).unwrap();
            match table.get(&y) {
                Some(prev) if *prev != fy => return None,
                Some(_) => {}
                None => {
                    table.insert(y.clone(), fy);
                    frontier.push(y);
                }
            }
        }
    }
    Some(table)
}
