use proptest::prelude::*;

use kmc_core::{catalog, group, verbal, Limits, OuterWord, PermGroup, Permutation, SubgroupPair};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Outer commutator trees with up to `depth` bracket levels, leaves
/// renumbered left to right.
fn word(depth: u32) -> impl Strategy<Value = OuterWord> {
    let leaf = Just(OuterWord::Leaf(0));
    leaf.prop_recursive(depth, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| OuterWord::bracket(l, r))
    })
    .prop_map(|w| renumber(&w, &mut 0))
}

fn renumber(w: &OuterWord, next: &mut usize) -> OuterWord {
    match w {
        OuterWord::Leaf(_) => {
            *next += 1;
            OuterWord::Leaf(*next)
        }
        OuterWord::Bracket(l, r) => {
            let l = renumber(l, next);
            let r = renumber(r, next);
            OuterWord::bracket(l, r)
        }
    }
}

proptest! {
    #[test]
    fn group_axioms(a in perm(6), b in perm(6), c in perm(6)) {
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.compose(&Permutation::identity(6)).unwrap(), a.clone());
        prop_assert_eq!(a.inverse().inverse(), a.clone());
    }

    #[test]
    fn cycle_notation_roundtrips(a in perm(7)) {
        prop_assert_eq!(Permutation::parse_cycles(7, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn words_roundtrip_through_text(w in word(4)) {
        prop_assert!(w.validate().is_ok());
        let text = w.render();
        prop_assert_eq!(OuterWord::parse(&text).unwrap(), w.clone());
        let spaced = text.replace(',', " , ").replace('[', "[ ");
        prop_assert_eq!(OuterWord::parse(&spaced).unwrap().render(), text);
        prop_assert_eq!(w.leaves(), (1..=w.weight()).collect::<Vec<_>>());
    }

    #[test]
    fn bracket_evaluates_to_commutator_of_halves(
        w in word(3),
        args in prop::collection::vec(perm(5), 16),
    ) {
        if let OuterWord::Bracket(l, r) = &w {
            let t = w.weight();
            let split = l.weight();
            let whole = w.evaluate(&args[..t]).unwrap();
            // The right half is renumbered from 1 for standalone evaluation.
            let right = renumber(r, &mut 0);
            let lv = l.evaluate(&args[..split]).unwrap();
            let rv = right.evaluate(&args[split..t]).unwrap();
            prop_assert_eq!(whole, lv.commutator(&rv));
        }
    }

    #[test]
    fn generated_groups_are_closed(gens in prop::collection::vec(perm(5), 0..3)) {
        let g = PermGroup::generate(5, &gens, &Limits::default()).unwrap();
        prop_assert!(g.contains(&Permutation::identity(5)));
        prop_assert_eq!(120 % g.order(), 0);
        for x in g.elements() {
            prop_assert!(g.contains(&x.inverse()));
            for y in g.generators() {
                prop_assert!(g.contains(&x.compose(y).unwrap()));
            }
        }
        for x in &gens {
            prop_assert!(g.contains(x));
        }
    }

    #[test]
    fn cores_closures_and_intersections(
        x in 0usize..24,
        y in 0usize..24,
    ) {
        let s4 = catalog::build("S4", &Limits::default()).unwrap();
        let a = s4.cyclic(&s4.elements()[x]).unwrap();
        let b = s4.cyclic(&s4.elements()[y]).unwrap();
        let pair = SubgroupPair::new(s4.clone(), a.clone()).unwrap();
        let core = pair.normal_core();
        let closure = pair.normal_closure();
        prop_assert!(group::is_normal(&s4, &core).unwrap());
        prop_assert!(group::is_normal(&s4, &closure).unwrap());
        prop_assert!(core.is_subgroup_of(&a) && a.is_subgroup_of(&closure));
        let ab = group::intersect(&a, &b).unwrap();
        let idx = |h: &PermGroup| group::index(&s4, h).unwrap();
        prop_assert!(idx(&ab) <= idx(&a) * idx(&b));
    }

    #[test]
    fn commutator_subgroups_are_symmetric_and_normal(i in 0usize..64, j in 0usize..64) {
        let l = Limits::default();
        let g = catalog::build("D4xC2", &l).unwrap();
        let sample = catalog::normal_subgroups_sample(&g).unwrap();
        let a = &sample[i % sample.len()];
        let b = &sample[j % sample.len()];
        let ab = group::commutator_subgroup(a, b, &g, &l).unwrap();
        let ba = group::commutator_subgroup(b, a, &g, &l).unwrap();
        prop_assert_eq!(&ab, &ba);
        prop_assert!(group::is_normal(&g, &ab).unwrap());
        prop_assert!(ab.is_subgroup_of(&group::intersect(a, b).unwrap()));
    }

    #[test]
    fn verbal_subgroups_are_monotone(i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let l = Limits::default();
        let g = catalog::build("S4", &l).unwrap();
        let sample = catalog::normal_subgroups_sample(&g).unwrap();
        let pick = |n: usize| sample[n % sample.len()].clone();
        let w = OuterWord::parse("[[x1,x2],x3]").unwrap();
        let small = [pick(i), pick(j), pick(k)];
        let large: Vec<PermGroup> = small
            .iter()
            .map(|h| sample.iter().find(|s| h.is_subgroup_of(s) && *s != h).cloned().unwrap_or_else(|| h.clone()))
            .collect();
        let vs = verbal::verbal_subgroup(&w, &small, &g, &l).unwrap().value;
        let vl = verbal::verbal_subgroup(&w, &large, &g, &l).unwrap().value;
        prop_assert!(vs.is_subgroup_of(&vl));
        prop_assert!(group::is_normal(&g, &vs).unwrap());
    }
}
