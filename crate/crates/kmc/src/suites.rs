//! Property suites run by `kmc verify` and by the acceptance tests.
//!
//! Each suite sweeps catalog groups and their sampled normal subgroups and
//! counts individual checks. Errors from the library count as failures.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use kmc_core::catalog::{self, STANDARD};
use kmc_core::khm::{self, ConstructOptions, LemmaOutcome, Mode};
use kmc_core::morphism;
use kmc_core::{group, oracle, verbal};
use kmc_core::{Limits, OuterWord, PermGroup, SubgroupPair};

use crate::error::{CliError, Result};

/// Groups and words of the theorem matrix.
pub const THEOREM_GROUPS: &[&str] = &[
    "C6", "S3", "D4", "Q8", "A4", "S4", "C2xC2", "D4xC2", "C3xS3",
];
pub const THEOREM_WORDS: &[&str] = &["[x1,x2]", "[[x1,x2],x3]", "[[x1,x2],[x3,x4]]"];

/// Words used by the property and lemma suites.
pub const PROPERTY_WORDS: &[&str] = &[
    "[x1,x2]",
    "[[x1,x2],x3]",
    "[x1,[x2,x3]]",
    "[[x1,x2],[x3,x4]]",
];

/// Largest tuple count for brute-force enumeration; 24^4.
pub const MAX_TUPLES: usize = 331_776;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Properties,
    Lemma,
    Theorem,
    Coincidence,
    Intro,
    Series,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Properties,
        Suite::Lemma,
        Suite::Theorem,
        Suite::Coincidence,
        Suite::Intro,
        Suite::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Properties => "properties",
            Suite::Lemma => "lemma",
            Suite::Theorem => "theorem",
            Suite::Coincidence => "coincidence",
            Suite::Intro => "intro",
            Suite::Series => "series",
        }
    }

    pub fn run(self, limits: &Limits) -> SuiteReport {
        match self {
            Suite::Properties => properties(limits),
            Suite::Lemma => lemma(limits),
            Suite::Theorem => theorem(limits),
            Suite::Coincidence => coincidence(limits),
            Suite::Intro => intro(limits),
            Suite::Series => series(limits),
        }
    }
}

/// Resolves a suite name; `all` selects every suite.
pub fn select(name: &str) -> Result<Vec<Suite>> {
    if name == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Suite::ALL
        .into_iter()
        .find(|s| s.name() == name)
        .map(|s| vec![s])
        .ok_or_else(|| CliError::Input(format!("unknown suite `{name}`")))
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Instances examined (suite-specific: construction triples, lemma
    /// instances with a satisfied hypothesis, ...).
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    fn new(name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            cases: 0,
            passed: 0,
            failed: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failures.push(label());
        }
    }

    fn record<T>(&mut self, r: kmc_core::Result<T>, label: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failed += 1;
                self.failures.push(format!("{}: {e}", label()));
                None
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<12} {} cases, {} passed, {} failed ({:.2}s)",
            self.name,
            self.cases,
            self.passed,
            self.failed,
            self.elapsed.as_secs_f64()
        )?;
        for msg in self.failures.iter().take(20) {
            write!(f, "\n  FAIL {msg}")?;
        }
        Ok(())
    }
}

fn timed(name: &'static str, body: impl FnOnce(&mut SuiteReport)) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport::new(name);
    body(&mut report);
    report.elapsed = start.elapsed();
    report
}

fn words(texts: &[&str]) -> Vec<OuterWord> {
    texts
        .iter()
        .map(|t| OuterWord::parse(t).expect("built-in word"))
        .collect()
}

fn standard_groups(limits: &Limits) -> Vec<(&'static str, PermGroup)> {
    STANDARD
        .iter()
        .map(|&(name, _)| (name, catalog::build(name, limits).expect("catalog group")))
        .collect()
}

/// Argument tuples drawn from a sample: every rotation `sample[s..s+t]`
/// plus the constant tuples.
fn tuples(sample: &[PermGroup], t: usize) -> Vec<Vec<PermGroup>> {
    let mut out: Vec<Vec<PermGroup>> = (0..sample.len())
        .map(|s| (0..t).map(|k| sample[(s + k) % sample.len()].clone()).collect())
        .collect();
    out.extend(sample.iter().map(|n| vec![n.clone(); t]));
    out
}

/// Properties 1-4 of verbal subgroups over the standard catalog.
pub fn properties(limits: &Limits) -> SuiteReport {
    timed("properties", |r| {
        for (name, g) in standard_groups(limits) {
            let Some(sample) = r.record(catalog::normal_subgroups_sample(&g), || name.into()) else {
                continue;
            };
            for w in words(PROPERTY_WORDS) {
                let t = w.weight();
                r.cases += 1;
                for args in tuples(&sample, t) {
                    let label = || format!("{name} {w}");
                    let Some(v) = r.record(verbal::verbal_subgroup(&w, &args, &g, limits), label)
                    else {
                        continue;
                    };
                    // 1: the verbal subgroup is normal.
                    r.check(group::is_normal(&g, &v.value).unwrap_or(false), || {
                        format!("property 1: {name} {w} value not normal")
                    });
                    // 3: recursion equals the subgroup generated by all values.
                    let count: usize = args.iter().map(PermGroup::order).product();
                    if count <= 10_000 {
                        if let Some(slow) = r.record(
                            oracle::verbal_by_enumeration(&w, &args, &g, 10_000),
                            || format!("{name} {w} enumeration"),
                        ) {
                            r.check(slow == v.value, || {
                                format!("property 3: {name} {w} recursive != enumerated")
                            });
                        }
                    }
                }
                // 2: the law holds iff w(G, ..., G) = 1, against full enumeration.
                if g.order() <= 24 {
                    let fast = verbal::identity_holds(&w, &g, limits);
                    let slow = oracle::law_holds_by_enumeration(&w, &g, MAX_TUPLES);
                    if let (Some(a), Some(b)) = (
                        r.record(fast, || format!("{name} {w}")),
                        r.record(slow, || format!("{name} {w} enumeration")),
                    ) {
                        r.check(a == b, || format!("property 2: {name} {w}"));
                    }
                }
                // 4: distributivity in every slot over families of sampled subgroups.
                for slot in 1..=t {
                    for (i, a) in sample.iter().enumerate() {
                        for b in &sample[i..] {
                            let family = [a.clone(), b.clone()];
                            let fixed: Vec<PermGroup> =
                                (0..t - 1).map(|k| sample[(i + k + 1) % sample.len()].clone()).collect();
                            let res =
                                verbal::check_distributivity(&w, slot, &family, &fixed, &g, limits);
                            if let Some(ok) = r.record(res, || format!("{name} {w} slot {slot}")) {
                                r.check(ok, || format!("property 4: {name} {w} slot {slot}"));
                            }
                        }
                    }
                }
            }
        }
    })
}

/// The lemma on sampled families. Counts instances whose hypothesis holds.
pub fn lemma(limits: &Limits) -> SuiteReport {
    timed("lemma", |r| {
        for (name, g) in standard_groups(limits) {
            let Some(sample) = r.record(catalog::normal_subgroups_sample(&g), || name.into()) else {
                continue;
            };
            let mut families: Vec<Vec<PermGroup>> = sample.iter().map(|n| vec![n.clone()]).collect();
            for (i, a) in sample.iter().enumerate() {
                for b in &sample[i + 1..] {
                    families.push(vec![a.clone(), b.clone()]);
                }
            }
            families.push(sample.clone());
            for w in words(PROPERTY_WORDS) {
                for m in 1..=w.weight() {
                    for family in &families {
                        let res = khm::lemma_check(&w, m, &g, family, limits);
                        match r.record(res, || format!("{name} {w} m={m}")) {
                            Some(LemmaOutcome::Holds) => {
                                r.cases += 1;
                                r.passed += 1;
                            }
                            Some(LemmaOutcome::Fails) => {
                                r.cases += 1;
                                r.check(false, || {
                                    format!("{name} {w} m={m} family of {}", family.len())
                                });
                            }
                            Some(LemmaOutcome::HypothesisFails) | None => {}
                        }
                    }
                }
            }
        }
    })
}

/// One row of the theorem matrix.
#[derive(Debug, Clone)]
pub struct TheoremCase {
    pub group: &'static str,
    pub word: OuterWord,
    pub g: PermGroup,
    pub n: PermGroup,
}

/// All (G, N, w) with N in the normal sample of G satisfying w = 1.
pub fn theorem_cases(limits: &Limits) -> kmc_core::Result<Vec<TheoremCase>> {
    let mut out = Vec::new();
    for &name in THEOREM_GROUPS {
        let g = catalog::build(name, limits)?;
        let sample = catalog::normal_subgroups_sample(&g)?;
        for w in words(THEOREM_WORDS) {
            for n in &sample {
                if verbal::identity_holds(&w, n, limits)? {
                    out.push(TheoremCase {
                        group: name,
                        word: w.clone(),
                        g: g.clone(),
                        n: n.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The construction over the theorem matrix, each output checked
/// independently of the construction's own assertions.
pub fn theorem(limits: &Limits) -> SuiteReport {
    timed("theorem", |r| {
        let Some(cases) = r.record(theorem_cases(limits), || "matrix".into()) else {
            return;
        };
        let opts = ConstructOptions {
            limits: *limits,
            ..ConstructOptions::default()
        };
        let mut auts: Vec<(&str, Vec<kmc_core::GroupMap>)> = Vec::new();
        for case in &cases {
            r.cases += 1;
            let name = case.group;
            let label = || format!("{name} |N|={} {}", case.n.order(), case.word);
            if !auts.iter().any(|(n, _)| *n == name) {
                match r.record(morphism::automorphism_group(&case.g, limits), label) {
                    Some(maps) => auts.push((name, maps)),
                    None => continue,
                }
            }
            let maps = &auts.iter().find(|(n, _)| *n == name).expect("cached").1;
            let Some(trace) = r.record(khm::construct(&case.g, &case.n, &case.word, &opts), label)
            else {
                continue;
            };
            let h = &trace.h;
            let invariant = maps
                .iter()
                .all(|m| m.apply_to_subgroup(h).map(|img| img == *h).unwrap_or(false));
            r.check(invariant, || format!("{}: H not characteristic", label()));
            let law = verbal::identity_holds(&case.word, h, limits).unwrap_or(false);
            r.check(law, || format!("{}: H violates the law", label()));
            let index_h = case.g.order() / h.order();
            let index_n = case.g.order() / case.n.order();
            r.check(
                khm::bound_holds(index_h, index_n, case.word.weight()) && trace.holds,
                || format!("{}: bound violated", label()),
            );
            let mut prev = case.g.clone();
            let mut l_prev = khm::log2_index(index_n);
            for s in &trace.steps {
                let chain_ok = s.n.is_subgroup_of(&s.g) && s.g.is_subgroup_of(&prev);
                let char_ok = maps
                    .iter()
                    .all(|m| m.apply_to_subgroup(&s.g).map(|img| img == s.g).unwrap_or(false));
                let growth_ok = s.l <= khm::growth(l_prev) * (1.0 + khm::BOUND_TOLERANCE);
                r.check(chain_ok && char_ok && growth_ok, || {
                    format!("{}: step {} invariants", label(), s.index)
                });
                prev = s.g.clone();
                l_prev = s.l;
            }
        }
    })
}

/// Surjective endomorphisms coincide with automorphisms, and the two
/// construction modes agree.
pub fn coincidence(limits: &Limits) -> SuiteReport {
    timed("coincidence", |r| {
        for (name, g) in standard_groups(limits) {
            r.cases += 1;
            let auts = r.record(morphism::automorphism_group(&g, limits), || name.into());
            let surj = r.record(morphism::surjective_endomorphisms(&g, limits), || name.into());
            if let (Some(a), Some(s)) = (auts, surj) {
                r.check(a == s, || format!("{name}: Aut != surjective endomorphisms"));
                let homs = a.iter().all(|m| m.check_homomorphism());
                r.check(homs, || format!("{name}: non-homomorphism in Aut"));
                let closed = a.iter().take(8).all(|x| {
                    a.iter().take(8).all(|y| {
                        let xy = x.then(y).expect("same group");
                        a.contains(&xy) && a.contains(&x.inverse().expect("bijective"))
                    })
                });
                r.check(closed, || format!("{name}: Aut not closed"));
            }
        }
        let Some(cases) = r.record(theorem_cases(limits), || "matrix".into()) else {
            return;
        };
        for case in cases {
            let run = |mode| {
                let opts = ConstructOptions {
                    mode,
                    limits: *limits,
                    ..ConstructOptions::default()
                };
                khm::construct(&case.g, &case.n, &case.word, &opts)
            };
            let label = || format!("{} |N|={} {}", case.group, case.n.order(), case.word);
            let a = r.record(run(Mode::Automorphisms), label);
            let b = r.record(run(Mode::SurjectiveEndomorphisms), label);
            if let (Some(a), Some(b)) = (a, b) {
                let same_steps = a.steps.len() == b.steps.len()
                    && a.steps.iter().zip(&b.steps).all(|(x, y)| x.g == y.g && x.n == y.n);
                r.check(a.h == b.h && same_steps, || format!("{}: modes differ", label()));
            }
        }
    })
}

fn factorial(k: usize) -> Option<u128> {
    (1..=k as u128).try_fold(1u128, |acc, x| acc.checked_mul(x))
}

/// Normal core index divides `|G:H|!`; intersections have submultiplicative
/// index.
pub fn intro(limits: &Limits) -> SuiteReport {
    timed("intro", |r| {
        for (name, g) in standard_groups(limits) {
            let mut subs: BTreeSet<PermGroup> =
                g.elements().iter().filter_map(|x| g.cyclic(x).ok()).collect();
            if let Ok(sample) = catalog::normal_subgroups_sample(&g) {
                subs.extend(sample);
            }
            let subs: Vec<PermGroup> = subs.into_iter().collect();
            for h in &subs {
                r.cases += 1;
                let Some(pair) = r.record(SubgroupPair::new(g.clone(), h.clone()), || name.into())
                else {
                    continue;
                };
                let core = pair.normal_core();
                let core_index = (g.order() / core.order()) as u128;
                let divides = factorial(pair.index()).is_none_or(|f| f % core_index == 0);
                r.check(divides && pair.ambient().order() % core.order() == 0, || {
                    format!("{name}: core index {core_index} does not divide {}!", pair.index())
                });
                r.check(
                    core.is_subgroup_of(h) && group::is_normal(&g, &core).unwrap_or(false),
                    || format!("{name}: core not a normal subgroup of H"),
                );
            }
            for a in &subs {
                for b in &subs {
                    let Some(ab) = r.record(group::intersect(a, b), || name.into()) else {
                        continue;
                    };
                    let idx = |h: &PermGroup| g.order() / h.order();
                    r.check(idx(&ab) <= idx(a) * idx(b), || {
                        format!("{name}: |G:A∩B| > |G:A||G:B|")
                    });
                }
            }
        }
    })
}

fn commutes_pairwise(g: &PermGroup) -> bool {
    let e = g.elements();
    e.iter().all(|x| {
        e.iter()
            .all(|y| x.compose(y).ok() == y.compose(x).ok())
    })
}

/// Derived and lower central series through the word machinery.
pub fn series(limits: &Limits) -> SuiteReport {
    timed("series", |r| {
        let holds = |text: &str, g: &PermGroup| {
            verbal::identity_holds(&OuterWord::parse(text).expect("word"), g, limits)
        };
        if let Some(s4) = r.record(catalog::build("S4", limits), || "S4".into()) {
            r.cases += 1;
            r.check(holds("solvable:2", &s4) == Ok(false), || "solvable:2 holds on S4".into());
            r.check(holds("solvable:3", &s4) == Ok(true), || "solvable:3 fails on S4".into());
            // S4 > A4 > V4 > 1 by repeated commutator subgroups.
            let mut orders = vec![s4.order()];
            let mut cur = s4.clone();
            while !cur.is_trivial() && orders.len() < 6 {
                match group::commutator_subgroup(&cur, &cur, &s4, limits) {
                    Ok(next) if next != cur => {
                        orders.push(next.order());
                        cur = next;
                    }
                    _ => break,
                }
            }
            r.check(orders == [24, 12, 4, 1], || format!("derived series orders {orders:?}"));
        }
        for (name, g) in standard_groups(limits) {
            r.cases += 1;
            let abelian = commutes_pairwise(&g);
            r.check(holds("nilpotent:1", &g) == Ok(abelian), || {
                format!("{name}: nilpotent:1 disagrees with pairwise commutation")
            });
        }
        // Nilpotency classes and derived lengths of the theorem groups.
        let expected: &[(&str, usize, usize)] = &[
            ("C6", 1, 1),
            ("S3", 0, 2),
            ("D4", 2, 2),
            ("Q8", 2, 2),
            ("A4", 0, 2),
            ("S4", 0, 3),
            ("C2xC2", 1, 1),
            ("D4xC2", 2, 2),
            ("C3xS3", 0, 2),
        ];
        for &(name, class, dl) in expected {
            let Some(g) = r.record(catalog::build(name, limits), || name.into()) else {
                continue;
            };
            r.cases += 1;
            let class_found = (1..=4).find(|c| holds(&format!("nilpotent:{c}"), &g) == Ok(true));
            r.check(class_found.unwrap_or(0) == class, || {
                format!("{name}: nilpotency class {class_found:?}, expected {class}")
            });
            let dl_found = (0..=4).find(|d| holds(&format!("solvable:{d}"), &g) == Ok(true));
            r.check(dl_found == Some(dl), || {
                format!("{name}: derived length {dl_found:?}, expected {dl}")
            });
        }
    })
}
