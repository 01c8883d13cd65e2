//! Large characteristic subgroups satisfying an outer commutator law.
//!
//! Starting from `G_0 = G` and a normal subgroup `N_0 = N` on which the law
//! `w = 1` holds, each step replaces the pair `(G_(i-1), N_(i-1))` by
//!
//! * `G_i`, the product of all images of `N_(i-1)` under automorphisms of
//!   `G_(i-1)`, and
//! * `N_i`, the intersection of a short chain of those images whose product
//!   is already `G_i`.
//!
//! After `t = weight(w)` steps the group `H = G_t` is characteristic in `G`,
//! satisfies the law, and `log2 |G : H| <= f^(t-1)(log2 |G : N|)` with
//! `f(x) = x(x + 1)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{self, intersect_all, product_of_normals, Limits, PermGroup, SubgroupPair};
use crate::morphism::{self, GroupMap};
use crate::verbal;
use crate::word::OuterWord;

/// Relative tolerance for floating-point bound comparisons.
pub const BOUND_TOLERANCE: f64 = 1e-9;

/// Which maps the images are taken under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Automorphisms,
    SurjectiveEndomorphisms,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Automorphisms => "automorphisms",
            Mode::SurjectiveEndomorphisms => "surjective-endos",
        }
    }

    pub fn maps(self, g: &PermGroup, limits: &Limits) -> Result<Vec<GroupMap>> {
        match self {
            Mode::Automorphisms => morphism::automorphism_group(g, limits),
            Mode::SurjectiveEndomorphisms => morphism::surjective_endomorphisms(g, limits),
        }
    }
}

impl core::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "automorphisms" | "aut" => Ok(Mode::Automorphisms),
            "surjective-endos" | "surjective-endomorphisms" | "endo" => {
                Ok(Mode::SurjectiveEndomorphisms)
            }
            other => Err(Error::BadArgument(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstructOptions {
    pub mode: Mode,
    /// Stop once `G_i = N_i = G_(i-1)`; later steps would repeat it.
    pub early_exit: bool,
    /// Check `w(N_i, ..., N_i, G_i, ..., G_i) = 1` after every step.
    pub verify_lemma: bool,
    pub limits: Limits,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            mode: Mode::Automorphisms,
            early_exit: false,
            verify_lemma: true,
            limits: Limits::default(),
        }
    }
}

/// `f(x) = x(x + 1)`.
pub fn growth(x: f64) -> f64 {
    x * (x + 1.0)
}

/// `f^(t-1)(l0)`.
pub fn bound(t: usize, l0: f64) -> f64 {
    (1..t).fold(l0, |x, _| growth(x))
}

/// `f^(t-1)(l0)` in integers; `None` on overflow.
pub fn bound_exact(t: usize, l0: u64) -> Option<u128> {
    (1..t).try_fold(l0 as u128, |x, _| x.checked_mul(x.checked_add(1)?))
}

/// `log2` of a positive integer, exact for powers of two.
pub fn log2_index(index: usize) -> f64 {
    if index.is_power_of_two() {
        index.trailing_zeros() as f64
    } else {
        libm::log2(index as f64)
    }
}

/// Whether `|G : H| <= 2^(f^(t-1)(log2 |G : N|))`. Integer arithmetic when
/// `|G : N|` is a power of two, relative tolerance [`BOUND_TOLERANCE`]
/// otherwise.
pub fn bound_holds(index_h: usize, index_n: usize, t: usize) -> bool {
    if index_n.is_power_of_two() {
        match bound_exact(t, index_n.trailing_zeros() as u64) {
            Some(b) if b < 64 => index_h as u128 <= 1u128 << b,
            _ => true,
        }
    } else {
        let b = bound(t, log2_index(index_n));
        log2_index(index_h) <= b * (1.0 + BOUND_TOLERANCE)
    }
}

/// Result of scanning the images of `N` under a list of maps.
#[derive(Debug, Clone)]
pub struct ImageChain {
    /// Product of all images.
    pub product: PermGroup,
    /// Maps whose images were kept, the identity first.
    pub chain: Vec<GroupMap>,
    /// The kept images, parallel to `chain`.
    pub images: Vec<PermGroup>,
}

/// Scans `maps` in order and keeps an image of `n` only when it strictly
/// enlarges the running product.
pub fn image_chain(g: &PermGroup, n: &PermGroup, maps: &[GroupMap]) -> Result<ImageChain> {
    if !group::is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let mut product = n.clone();
    let mut chain = vec![GroupMap::identity(g)];
    let mut images = vec![n.clone()];
    for m in maps {
        let img = m.apply_to_subgroup(n)?;
        if img.is_subgroup_of(&product) {
            continue;
        }
        product = product_of_normals(&[product, img.clone()], g)?;
        chain.push(m.clone());
        images.push(img);
    }
    Ok(ImageChain {
        product,
        chain,
        images,
    })
}

#[derive(Debug, Clone)]
pub struct StepRecord {
    /// 1-based step number.
    pub index: usize,
    pub g: PermGroup,
    pub n: PermGroup,
    pub chain: Vec<GroupMap>,
    /// Images beyond the first in the chain.
    pub p: usize,
    /// `log2 |G : N_i|`, measured in the original group.
    pub l: f64,
}

/// One step from `(G_(i-1), N_(i-1))`; `top` is the original group.
pub fn construction_step(
    top: &PermGroup,
    g_prev: &PermGroup,
    n_prev: &PermGroup,
    index: usize,
    mode: Mode,
    limits: &Limits,
) -> Result<StepRecord> {
    let maps = mode.maps(g_prev, limits)?;
    let ImageChain {
        product,
        chain,
        images,
    } = image_chain(g_prev, n_prev, &maps)?;
    let n = intersect_all(&images)?;
    let p = chain.len() - 1;
    let index_prev = group::index(top, n_prev)?;
    let index_n = group::index(top, &n)?;
    let index_g = group::index(top, &product)?;
    let l_prev = log2_index(index_prev);
    let l = log2_index(index_n);

    let invariant = |what: &str| Err(Error::Invariant(format!("step {index}: {what}")));
    // 2^p <= |G : N_(i-1)|, i.e. p <= l_(i-1).
    if p >= usize::BITS as usize || (1usize << p) > index_prev {
        return invariant("chain longer than log2 |G : N_(i-1)| + 1");
    }
    // |G : N_i| <= |G : N_(i-1)|^(p+1), hence l_i <= (p+1) l_(i-1) <= f(l_(i-1)).
    let power = (index_prev as u128).checked_pow(p as u32 + 1).unwrap_or(u128::MAX);
    if index_n as u128 > power || l > growth(l_prev) * (1.0 + BOUND_TOLERANCE) {
        return invariant("l_i exceeds f(l_(i-1))");
    }
    if index_g > index_prev {
        return invariant("|G : G_i| exceeds |G : N_(i-1)|");
    }
    if !(n.is_subgroup_of(&product) && product.is_subgroup_of(g_prev)) {
        return invariant("N_i <= G_i <= G_(i-1) fails");
    }
    Ok(StepRecord {
        index,
        g: product,
        n,
        chain,
        p,
        l,
    })
}

#[derive(Debug, Clone)]
pub struct ConstructionTrace {
    pub group: PermGroup,
    /// The subgroup as given.
    pub subgroup: PermGroup,
    pub word: OuterWord,
    pub mode: Mode,
    /// Normal core used in place of a non-normal input subgroup.
    pub core: Option<PermGroup>,
    /// `log2 |G : N|` for the normal subgroup actually used.
    pub l0: f64,
    pub steps: Vec<StepRecord>,
    pub h: PermGroup,
    /// `f^(t-1)(l0)`.
    pub bound: f64,
    /// Whether `log2 |G : H| <= bound`.
    pub holds: bool,
}

impl ConstructionTrace {
    pub fn index_h(&self) -> usize {
        self.group.order() / self.h.order()
    }

    /// The normal subgroup the steps started from.
    pub fn start(&self) -> &PermGroup {
        self.core.as_ref().unwrap_or(&self.subgroup)
    }

    pub fn log2_index_h(&self) -> f64 {
        log2_index(self.index_h())
    }
}

/// `w(N, ..., N, G, ..., G)` with `copies_n` leading copies of `n`.
fn mixed_value(
    w: &OuterWord,
    copies_n: usize,
    n: &PermGroup,
    g: &PermGroup,
    ambient: &PermGroup,
    limits: &Limits,
) -> Result<PermGroup> {
    let t = w.weight();
    let args: Vec<PermGroup> = (0..t)
        .map(|k| if k < copies_n { n.clone() } else { g.clone() })
        .collect();
    Ok(verbal::verbal_subgroup(w, &args, ambient, limits)?.value)
}

/// Builds a characteristic subgroup `H` of `g` satisfying `w = 1`, starting
/// from a subgroup `n` that satisfies it. A non-normal `n` is replaced by its
/// normal core first.
pub fn construct(
    g: &PermGroup,
    n: &PermGroup,
    w: &OuterWord,
    opts: &ConstructOptions,
) -> Result<ConstructionTrace> {
    let limits = &opts.limits;
    let pair = SubgroupPair::new(g.clone(), n.clone())?;
    if !verbal::identity_holds(w, n, limits)? {
        return Err(Error::HypothesisFailed);
    }
    let core = if pair.is_normal() {
        None
    } else {
        Some(pair.normal_core())
    };
    let start = core.clone().unwrap_or_else(|| n.clone());
    let t = w.weight();
    let l0 = log2_index(g.order() / start.order());
    let top_maps = opts.mode.maps(g, limits)?;

    let mut steps: Vec<StepRecord> = Vec::with_capacity(t);
    let mut g_prev = g.clone();
    let mut n_prev = start.clone();
    for i in 1..=t {
        let step = construction_step(g, &g_prev, &n_prev, i, opts.mode, limits)?;
        if !morphism::is_invariant_under(&step.g, &top_maps)? {
            return Err(Error::Invariant(format!("G_{i} is not invariant in G")));
        }
        if opts.verify_lemma
            && !mixed_value(w, t - i, &step.n, &step.g, &step.g, limits)?.is_trivial()
        {
            return Err(Error::Invariant(format!(
                "w(N_{i}, ..., G_{i}) is not trivial after step {i}"
            )));
        }
        let fixed = step.g == g_prev && step.n == g_prev;
        g_prev = step.g.clone();
        n_prev = step.n.clone();
        steps.push(step);
        if opts.early_exit && fixed {
            break;
        }
    }
    let h = g_prev;
    if !verbal::identity_holds(w, &h, limits)? {
        return Err(Error::Invariant("H does not satisfy the law".into()));
    }
    let bound_value = bound(t, l0);
    let holds = bound_holds(g.order() / h.order(), g.order() / start.order(), t);
    Ok(ConstructionTrace {
        group: g.clone(),
        subgroup: n.clone(),
        word: w.clone(),
        mode: opts.mode,
        core,
        l0,
        steps,
        h,
        bound: bound_value,
        holds,
    })
}

/// Outcome of [`lemma_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaOutcome {
    /// Some family member fails `w(N, ..., N, G, ..., G) = 1`.
    HypothesisFails,
    /// The conclusion holds.
    Holds,
    /// The hypothesis holds but the conclusion does not. Always a bug.
    Fails,
}

/// Given `w(N, ..., N [m times], G, ..., G) = 1` for every `N` in `family`,
/// checks `w(N^, ..., N^ [m - 1 times], G^, ..., G^) = 1` where `N^` is the
/// intersection and `G^` the product of the family.
pub fn lemma_check(
    w: &OuterWord,
    m: usize,
    g: &PermGroup,
    family: &[PermGroup],
    limits: &Limits,
) -> Result<LemmaOutcome> {
    let t = w.weight();
    if m == 0 || m > t {
        return Err(Error::BadArgument(format!("multiplicity {m} outside 1..={t}")));
    }
    if family.is_empty() {
        return Err(Error::BadArgument("empty family".into()));
    }
    for n in family {
        if !group::is_normal(g, n)? {
            return Err(Error::NotNormal);
        }
    }
    for n in family {
        if !mixed_value(w, m, n, g, g, limits)?.is_trivial() {
            return Ok(LemmaOutcome::HypothesisFails);
        }
    }
    let meet = intersect_all(family)?;
    let join = product_of_normals(family, g)?;
    if mixed_value(w, m - 1, &meet, &join, g, limits)?.is_trivial() {
        Ok(LemmaOutcome::Holds)
    } else {
        Ok(LemmaOutcome::Fails)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

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
    fn bound_values() {
        assert_eq!(bound(1, 3.5), 3.5);
        assert_eq!(bound(2, 1.0), 2.0);
        assert_eq!(bound(3, 1.0), 6.0);
        assert_eq!(bound(4, 1.0), 42.0);
        assert_eq!(bound_exact(4, 1), Some(42));
        assert_eq!(bound_exact(1, 7), Some(7));
        assert_eq!(bound_exact(40, 2), None);
    }

    #[test]
    fn bound_check_paths() {
        assert!(bound_holds(4, 2, 2));
        assert!(!bound_holds(8, 2, 2));
        assert!(bound_holds(1, 1, 3));
        // l0 = log2 3, f(l0) ~ 4.097, 2^4.097 ~ 17.1.
        assert!(bound_holds(17, 3, 2));
        assert!(!bound_holds(18, 3, 2));
    }

    #[test]
    fn image_chains() {
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let a3 = gen(3, &["(1 2 3)"]);
        let l = Limits::default();
        let maps = morphism::automorphism_group(&s3, &l).unwrap();
        let c = image_chain(&s3, &a3, &maps).unwrap();
        assert_eq!(c.product, a3);
        assert_eq!(c.chain, [GroupMap::identity(&s3)]);

        let v4 = gen(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let n = gen(4, &["(1 2)(3 4)"]);
        let maps = morphism::automorphism_group(&v4, &l).unwrap();
        let c = image_chain(&v4, &n, &maps).unwrap();
        assert_eq!(c.product, v4);
        assert_eq!(c.chain.len(), 2);

        let c = image_chain(&s3, &s3, &morphism::automorphism_group(&s3, &l).unwrap()).unwrap();
        assert_eq!(c.product, s3);
        assert_eq!(c.chain.len(), 1);

        assert_eq!(
            image_chain(&s3, &gen(3, &["(1 2)"]), &[]).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn single_steps() {
        let l = Limits::default();
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let a3 = gen(3, &["(1 2 3)"]);
        let st = construction_step(&s3, &s3, &a3, 1, Mode::Automorphisms, &l).unwrap();
        assert_eq!((st.g.clone(), st.n.clone(), st.p, st.l), (a3.clone(), a3, 0, 1.0));

        let v4 = gen(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let n = gen(4, &["(1 2)(3 4)"]);
        let st = construction_step(&v4, &v4, &n, 1, Mode::Automorphisms, &l).unwrap();
        assert_eq!(st.g, v4);
        assert!(st.n.is_trivial());
        assert_eq!(st.l, 2.0);
        assert!(st.l <= growth(1.0));

        let st = construction_step(&s3, &s3, &s3, 1, Mode::Automorphisms, &l).unwrap();
        assert_eq!((st.g.clone(), st.n.clone(), st.l), (s3.clone(), s3, 0.0));
    }

    #[test]
    fn golden_constructions() {
        let opts = ConstructOptions::default();
        let comm = w("[x1,x2]");
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let a3 = gen(3, &["(1 2 3)"]);
        let tr = construct(&s3, &a3, &comm, &opts).unwrap();
        assert_eq!(tr.h, a3);
        assert_eq!((tr.index_h(), tr.bound, tr.holds), (2, 2.0, true));

        let v4 = gen(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let n = gen(4, &["(1 2)(3 4)"]);
        let tr = construct(&v4, &n, &comm, &opts).unwrap();
        assert!(tr.h.is_trivial());
        assert_eq!((tr.log2_index_h(), tr.bound), (2.0, 2.0));

        let d4 = gen(4, &["(1 2 3 4)", "(1 4)(2 3)"]);
        let c4 = gen(4, &["(1 2 3 4)"]);
        let tr = construct(&d4, &c4, &comm, &opts).unwrap();
        assert_eq!(tr.h, c4);
        assert_eq!(tr.index_h(), 2);
        assert_eq!(tr.bound, 2.0);

        let tr = construct(&v4, &v4, &comm, &opts).unwrap();
        assert_eq!(tr.h, v4);
        assert_eq!(tr.steps.len(), 2);
    }

    #[test]
    fn hypothesis_and_core() {
        let opts = ConstructOptions::default();
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(
            construct(&s3, &s3, &w("[x1,x2]"), &opts).unwrap_err(),
            Error::HypothesisFailed
        );
        let t = gen(3, &["(1 2)"]);
        let tr = construct(&s3, &t, &w("[x1,x2]"), &opts).unwrap();
        assert!(tr.core.as_ref().unwrap().is_trivial());
        assert!(tr.h.is_trivial());
        assert_eq!(tr.l0, log2_index(6));
    }

    #[test]
    fn early_exit_stops_at_fixed_point() {
        let v4 = gen(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let opts = ConstructOptions {
            early_exit: true,
            ..ConstructOptions::default()
        };
        let tr = construct(&v4, &v4, &w("[[x1,x2],[x3,x4]]"), &opts).unwrap();
        assert_eq!(tr.steps.len(), 1);
        assert_eq!(tr.h, v4);
    }

    #[test]
    fn lemma_examples() {
        let l = Limits::default();
        let comm = w("[x1,x2]");
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let a3 = gen(3, &["(1 2 3)"]);
        assert_eq!(lemma_check(&comm, 2, &s3, std::slice::from_ref(&a3), &l).unwrap(), LemmaOutcome::Holds);
        assert_eq!(
            lemma_check(&comm, 1, &s3, std::slice::from_ref(&a3), &l).unwrap(),
            LemmaOutcome::HypothesisFails
        );
        let d4 = gen(4, &["(1 2 3 4)", "(1 4)(2 3)"]);
        let z = d4.center();
        let family = [z.clone(), PermGroup::trivial(4)];
        assert_eq!(lemma_check(&comm, 1, &d4, &family, &l).unwrap(), LemmaOutcome::Holds);
        assert!(lemma_check(&comm, 3, &s3, std::slice::from_ref(&a3), &l).is_err());
        assert!(lemma_check(&comm, 1, &s3, &[], &l).is_err());
        assert_eq!(
            lemma_check(&comm, 1, &s3, &[gen(3, &["(1 2)"])], &l).unwrap_err(),
            Error::NotNormal
        );
    }
}
