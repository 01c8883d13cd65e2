//! Verbal subgroups `w(H1, ..., Ht)` of tuples of normal subgroups.
//!
//! The value is computed through the bracket structure: a leaf returns its
//! argument, a bracket returns the commutator subgroup of the two halves.
//! For normal arguments this equals the subgroup generated by all word
//! values; [`crate::oracle::verbal_by_enumeration`] computes the latter
//! directly for cross-checking.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{self, commutator_of_normals, product_of_normals, Limits, PermGroup};
use crate::word::OuterWord;

#[derive(Debug, Clone)]
pub struct VerbalResult {
    pub value: PermGroup,
    pub word: OuterWord,
    pub args: Vec<PermGroup>,
}

fn check_args(w: &OuterWord, args: &[PermGroup], ambient: &PermGroup) -> Result<()> {
    if args.len() != w.weight() {
        return Err(Error::Arity {
            expected: w.weight(),
            found: args.len(),
        });
    }
    for a in args {
        if !group::is_normal(ambient, a)? {
            return Err(Error::NotNormal);
        }
    }
    Ok(())
}

/// `w(args)` for normal subgroups `args` of `ambient`.
pub fn verbal_subgroup(
    w: &OuterWord,
    args: &[PermGroup],
    ambient: &PermGroup,
    limits: &Limits,
) -> Result<VerbalResult> {
    check_args(w, args, ambient)?;
    let value = verbal_rec(w, args, ambient, limits)?;
    Ok(VerbalResult {
        value,
        word: w.clone(),
        args: args.to_vec(),
    })
}

fn verbal_rec(
    w: &OuterWord,
    args: &[PermGroup],
    ambient: &PermGroup,
    limits: &Limits,
) -> Result<PermGroup> {
    match w {
        OuterWord::Leaf(i) => Ok(args[*i - 1].clone()),
        OuterWord::Bracket(l, r) => {
            let left = verbal_rec(l, args, ambient, limits)?;
            if left.is_trivial() {
                return Ok(left);
            }
            let right = verbal_rec(r, args, ambient, limits)?;
            commutator_of_normals(&left, &right, ambient, limits)
        }
    }
}

/// Whether `g` satisfies the law `w = 1`, i.e. `w(g, ..., g)` is trivial.
pub fn identity_holds(w: &OuterWord, g: &PermGroup, limits: &Limits) -> Result<bool> {
    let args = alloc::vec![g.clone(); w.weight()];
    Ok(verbal_rec(w, &args, g, limits)?.is_trivial())
}

/// Compares `w(..., ∏ family, ...)` with `∏ w(..., N, ...)`, the family
/// substituted at the 1-based `slot` and `fixed_args` filling the other
/// slots in order.
pub fn check_distributivity(
    w: &OuterWord,
    slot: usize,
    family: &[PermGroup],
    fixed_args: &[PermGroup],
    ambient: &PermGroup,
    limits: &Limits,
) -> Result<bool> {
    let t = w.weight();
    if slot == 0 || slot > t {
        return Err(Error::BadArgument(alloc::format!(
            "slot {slot} outside 1..={t}"
        )));
    }
    if fixed_args.len() + 1 != t {
        return Err(Error::Arity {
            expected: t - 1,
            found: fixed_args.len(),
        });
    }
    let with = |n: &PermGroup| {
        let mut args = fixed_args.to_vec();
        args.insert(slot - 1, n.clone());
        args
    };
    let joined = product_of_normals(family, ambient)?;
    let lhs = verbal_subgroup(w, &with(&joined), ambient, limits)?.value;
    let parts = family
        .iter()
        .map(|n| verbal_subgroup(w, &with(n), ambient, limits).map(|r| r.value))
        .collect::<Result<Vec<_>>>()?;
    let rhs = product_of_normals(&parts, ambient)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use alloc::vec;

    fn gen(n: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(n, s).unwrap())
            .collect();
        PermGroup::generate(n, &gens, &Limits::default()).unwrap()
    }

    fn w(s: &str) -> OuterWord {
        OuterWord::parse(s).unwrap()
    }

    #[test]
    fn commutator_word_on_s3() {
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let a3 = gen(3, &["(1 2 3)"]);
        let l = Limits::default();
        let r = verbal_subgroup(&w("[x1,x2]"), &[s3.clone(), s3.clone()], &s3, &l).unwrap();
        assert_eq!(r.value, a3);
        let g3 = verbal_subgroup(&w("nilpotent:2"), &vec![s3.clone(); 3], &s3, &l).unwrap();
        assert_eq!(g3.value, a3);
        let triv = PermGroup::trivial(3);
        let r = verbal_subgroup(&w("[[x1,x2],x3]"), &[s3.clone(), triv, s3.clone()], &s3, &l)
            .unwrap();
        assert!(r.value.is_trivial());
    }

    #[test]
    fn rejects_bad_arguments() {
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let t = gen(3, &["(1 2)"]);
        let l = Limits::default();
        assert_eq!(
            verbal_subgroup(&w("[x1,x2]"), &[s3.clone(), t], &s3, &l).unwrap_err(),
            Error::NotNormal
        );
        assert_eq!(
            verbal_subgroup(&w("[x1,x2]"), std::slice::from_ref(&s3), &s3, &l).unwrap_err(),
            Error::Arity { expected: 2, found: 1 }
        );
    }

    #[test]
    fn laws() {
        let l = Limits::default();
        let v4 = gen(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(identity_holds(&w("[x1,x2]"), &v4, &l).unwrap());
        assert!(!identity_holds(&w("[x1,x2]"), &s3, &l).unwrap());
        assert!(!identity_holds(&w("solvable:2"), &s4, &l).unwrap());
        assert!(identity_holds(&w("solvable:3"), &s4, &l).unwrap());
    }

    #[test]
    fn distributivity_examples() {
        let l = Limits::default();
        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        let v4 = gen(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let c = w("[x1,x2]");
        // Order-2 subgroups of V4; not normal in S4, so the ambient is V4.
        let family: Vec<PermGroup> = ["(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]
            .iter()
            .map(|s| gen(4, &[s]))
            .collect();
        assert!(check_distributivity(&c, 1, &family, std::slice::from_ref(&v4), &v4, &l).unwrap());
        assert_eq!(
            check_distributivity(&c, 1, &family, std::slice::from_ref(&s4), &s4, &l).unwrap_err(),
            Error::NotNormal
        );
        assert!(check_distributivity(&c, 1, std::slice::from_ref(&v4), std::slice::from_ref(&s4), &s4, &l).unwrap());
        let triv = PermGroup::trivial(4);
        assert!(check_distributivity(&c, 2, &[triv], std::slice::from_ref(&s4), &s4, &l).unwrap());
        assert!(check_distributivity(&c, 3, std::slice::from_ref(&v4), std::slice::from_ref(&s4), &s4, &l).is_err());
    }
}
