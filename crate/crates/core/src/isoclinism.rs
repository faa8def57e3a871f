//! n-isoclinism and relative n-isoclinism.
//!
//! A relative n-isoclinism from `(H₁, G₁)` to `(H₂, G₂)` is a pair
//! `α: G₁/Zₙ(G₁) → G₂/Zₙ(G₂)`, `β: [ₙH₁, G₁] → [ₙH₂, G₂]` of isomorphisms
//! where `α` matches the images of `H₁` and `H₂` and
//! `β([h₁, …, hₙ, g]) = [k₁, …, kₙ, g']` whenever `kᵢ`, `g'` lie in the
//! `α`-images of the cosets of `hᵢ`, `g`. Plain n-isoclinism is the case
//! `H = G`, where `[ₙG, G] = γₙ₊₁(G)`.
//!
//! Only `α` is searched. The diagram fixes `β` on every commutator value,
//! and those values generate its domain, so `β` is derived from `α` and
//! then validated.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::iso::{for_each_isomorphism, Isomorphism, DEFAULT_SEARCH_BUDGET};
use crate::structure::{hypercenter, quotient, relative_gamma, QuotientGroup, Subgroup};

const UNSET: usize = usize::MAX;

/// One side of a (relative) n-isoclinism: `H ≤ G`, `G/Zₙ(G)`, the image of
/// `H` there, and `[ₙH, G]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoclinismFrame {
    level: usize,
    subgroup: Subgroup,
    quotient: QuotientGroup,
    subgroup_image: Subgroup,
    domain: Subgroup,
    /// Least element of `H` in each coset met by `H`; `UNSET` elsewhere.
    subgroup_reps: Vec<Element>,
}

impl IsoclinismFrame {
    pub fn new(h: &Subgroup, g: &FiniteGroup, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLevel);
        }
        if h.parent_order() != g.order() {
            return Err(Error::ForeignSubgroup { subgroup_parent: h.parent_order(), order: g.order() });
        }
        let quotient = quotient(g, &hypercenter(g, n))?;
        let subgroup_image = quotient.image_of(h);
        let mut subgroup_reps = vec![UNSET; quotient.order()];
        for &x in h.members().iter().rev() {
            subgroup_reps[quotient.project(x)] = x;
        }
        Ok(IsoclinismFrame {
            level: n,
            subgroup: h.clone(),
            domain: relative_gamma(h, g, n),
            quotient,
            subgroup_image,
            subgroup_reps,
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// `H`.
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// `Zₙ(G)`.
    pub fn hypercenter(&self) -> &Subgroup {
        self.quotient.kernel()
    }

    /// `G/Zₙ(G)`.
    pub fn quotient(&self) -> &QuotientGroup {
        &self.quotient
    }

    /// `HZₙ(G)/Zₙ(G)`, which is isomorphic to `H/(Zₙ(G) ∩ H)`.
    pub fn subgroup_image(&self) -> &Subgroup {
        &self.subgroup_image
    }

    /// `[ₙH, G]`; `β` acts on positions in its member list.
    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    fn position(&self, x: Element) -> Option<usize> {
        self.domain.members().binary_search(&x).ok()
    }
}

/// A validated pair `(α, β)`.
///
/// `alpha` acts on quotient indices and `beta` on positions within the
/// domain member lists of the two frames.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoclinismWitness {
    source: IsoclinismFrame,
    target: IsoclinismFrame,
    alpha: Isomorphism,
    beta: Isomorphism,
}

impl IsoclinismWitness {
    pub fn level(&self) -> usize {
        self.source.level
    }

    pub fn source(&self) -> &IsoclinismFrame {
        &self.source
    }

    pub fn target(&self) -> &IsoclinismFrame {
        &self.target
    }

    pub fn alpha(&self) -> &Isomorphism {
        &self.alpha
    }

    pub fn beta(&self) -> &Isomorphism {
        &self.beta
    }

    /// `β` on parent elements; `None` outside `[ₙH₁, G₁]`.
    pub fn beta_element(&self, x: Element) -> Option<Element> {
        let i = self.source.position(x)?;
        Some(self.target.domain.members()[self.beta.apply(i)])
    }

    pub fn inverse(&self) -> Self {
        IsoclinismWitness {
            source: self.target.clone(),
            target: self.source.clone(),
            alpha: self.alpha.inverse(),
            beta: self.beta.inverse(),
        }
    }

    /// `self` followed by `next`; `None` unless `next` starts where `self`
    /// ends.
    pub fn compose(&self, next: &IsoclinismWitness) -> Option<Self> {
        (self.target == next.source).then(|| IsoclinismWitness {
            source: self.source.clone(),
            target: next.target.clone(),
            alpha: self.alpha.then(&next.alpha),
            beta: self.beta.then(&next.beta),
        })
    }

    /// Line-oriented text form: the coset representatives and domain
    /// members that give the indices meaning, then the two image arrays.
    pub fn to_text(&self) -> String {
        fn join(xs: &[Element]) -> String {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
        let mut out = String::new();
        let _ = writeln!(out, "level: {}", self.level());
        let _ = writeln!(out, "source-cosets: {}", join(self.source.quotient.coset_reps()));
        let _ = writeln!(out, "target-cosets: {}", join(self.target.quotient.coset_reps()));
        let _ = writeln!(out, "source-domain: {}", join(self.source.domain.members()));
        let _ = writeln!(out, "target-domain: {}", join(self.target.domain.members()));
        let _ = writeln!(out, "alpha: {}", join(self.alpha.image()));
        let _ = writeln!(out, "beta: {}", join(self.beta.image()));
        out
    }
}

/// First n-isoclinism from `g1` to `g2` in `α`-search order.
pub fn are_n_isoclinic(g1: &FiniteGroup, g2: &FiniteGroup, n: usize) -> Result<Option<IsoclinismWitness>> {
    are_n_isoclinic_with_budget(g1, g2, n, DEFAULT_SEARCH_BUDGET)
}

pub fn are_n_isoclinic_with_budget(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    n: usize,
    budget: u64,
) -> Result<Option<IsoclinismWitness>> {
    are_relative_n_isoclinic_with_budget(&Subgroup::whole(g1), g1, &Subgroup::whole(g2), g2, n, budget)
}

/// First relative n-isoclinism from `(h1, g1)` to `(h2, g2)`.
pub fn are_relative_n_isoclinic(
    h1: &Subgroup,
    g1: &FiniteGroup,
    h2: &Subgroup,
    g2: &FiniteGroup,
    n: usize,
) -> Result<Option<IsoclinismWitness>> {
    are_relative_n_isoclinic_with_budget(h1, g1, h2, g2, n, DEFAULT_SEARCH_BUDGET)
}

pub fn are_relative_n_isoclinic_with_budget(
    h1: &Subgroup,
    g1: &FiniteGroup,
    h2: &Subgroup,
    g2: &FiniteGroup,
    n: usize,
    budget: u64,
) -> Result<Option<IsoclinismWitness>> {
    let source = IsoclinismFrame::new(h1, g1, n)?;
    let target = IsoclinismFrame::new(h2, g2, n)?;
    find_witness(g1, &source, g2, &target, budget)
}

/// Order invariants any witness between the two frames must respect.
pub fn frames_compatible(source: &IsoclinismFrame, target: &IsoclinismFrame) -> bool {
    source.level == target.level
        && source.quotient.order() == target.quotient.order()
        && source.subgroup_image.order() == target.subgroup_image.order()
        && source.domain.order() == target.domain.order()
}

/// Witness search between prebuilt frames of `g1` and `g2`.
pub fn find_witness(
    g1: &FiniteGroup,
    source: &IsoclinismFrame,
    g2: &FiniteGroup,
    target: &IsoclinismFrame,
    budget: u64,
) -> Result<Option<IsoclinismWitness>> {
    if !frames_compatible(source, target) {
        return Ok(None);
    }
    let mut found = None;
    for_each_isomorphism(
        source.quotient.group(),
        target.quotient.group(),
        Some((&source.subgroup_image, &target.subgroup_image)),
        budget,
        |alpha| match derive_beta(g1, g2, source, target, alpha) {
            Some(beta) => {
                found = Some((alpha.clone(), beta));
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        },
    )?;
    Ok(found.map(|(alpha, beta)| IsoclinismWitness { source: source.clone(), target: target.clone(), alpha, beta }))
}

/// The only `β` compatible with `alpha`, if it is a well-defined
/// isomorphism.
///
/// `alpha` must map the source subgroup image onto the target one.
pub fn derive_beta(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    source: &IsoclinismFrame,
    target: &IsoclinismFrame,
    alpha: &Isomorphism,
) -> Option<Isomorphism> {
    let n = source.level;
    let h_image = source.subgroup_image.members();
    let rep2 = |u: Element| target.subgroup_reps[alpha.apply(u)];
    if h_image.iter().any(|&u| rep2(u) == UNSET) {
        return None;
    }
    // Pairs ([h₁, …, h_k], [k₁, …, k_k]) over coset tuples.
    let mut pairs: Vec<(Element, Element)> = h_image.iter().map(|&u| (source.subgroup_reps[u], rep2(u))).collect();
    for _ in 1..n {
        let mut next = HashSet::new();
        for &(a1, a2) in &pairs {
            for &u in h_image {
                next.insert((g1.comm(a1, source.subgroup_reps[u]), g2.comm(a2, rep2(u))));
            }
        }
        pairs = next.into_iter().collect();
        pairs.sort_unstable();
    }
    let reps1 = source.quotient.coset_reps();
    let reps2 = target.quotient.coset_reps();
    let mut on_values = vec![UNSET; g1.order()];
    for &(a1, a2) in &pairs {
        for v in 0..reps1.len() {
            let c1 = g1.comm(a1, reps1[v]);
            let c2 = g2.comm(a2, reps2[alpha.apply(v)]);
            match on_values[c1] {
                UNSET => on_values[c1] = c2,
                prev if prev != c2 => return None,
                _ => {}
            }
        }
    }
    let gens: Vec<(Element, Element)> =
        (0..g1.order()).filter(|&c| on_values[c] != UNSET && c != 0).map(|c| (c, on_values[c])).collect();
    // Extend along the Cayley graph of the commutator values.
    let mut map = vec![UNSET; g1.order()];
    let mut used = vec![false; g2.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for &(c1, c2) in &gens {
            let y = g1.mul(x, c1);
            let fy = g2.mul(map[x], c2);
            if map[y] == UNSET {
                if used[fy] || !target.domain.contains(fy) {
                    return None;
                }
                map[y] = fy;
                used[fy] = true;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    if map.iter().filter(|&&y| y != UNSET).count() != source.domain.order() {
        return None;
    }
    let image = source.domain.members().iter().map(|&x| target.position(map[x])).collect::<Option<Vec<_>>>()?;
    Some(Isomorphism::from_image(image))
}

/// `H₂ = {x ∈ G₂ : α(hZₙ(G₁)) = xZₙ(G₂) for some h ∈ H₁}`.
pub fn induced_subgroup(witness: &IsoclinismWitness, h1: &Subgroup) -> Subgroup {
    let image = witness.source.quotient.image_of(h1);
    witness.target.quotient.preimage(&witness.alpha.map_subgroup(&image))
}

/// Independent check of a witness for `(h1, g1)` and `(h2, g2)` at level
/// `n`: rebuilds both frames, checks that `α` and `β` are isomorphisms with
/// the subgroup-image property, and evaluates the diagram on every tuple
/// of cosets using the largest representatives rather than the least.
pub fn check_diagram(
    witness: &IsoclinismWitness,
    h1: &Subgroup,
    g1: &FiniteGroup,
    h2: &Subgroup,
    g2: &FiniteGroup,
    n: usize,
) -> bool {
    let (Ok(source), Ok(target)) = (IsoclinismFrame::new(h1, g1, n), IsoclinismFrame::new(h2, g2, n)) else {
        return false;
    };
    if source != witness.source || target != witness.target {
        return false;
    }
    let (q1, q2) = (&source.quotient, &target.quotient);
    let (alpha, beta) = (&witness.alpha, &witness.beta);
    if !alpha.is_isomorphism(q1.group(), q2.group())
        || alpha.map_subgroup(&source.subgroup_image) != target.subgroup_image
        || !beta.is_isomorphism(&source.domain.to_group(g1), &target.domain.to_group(g2))
    {
        return false;
    }
    let largest = |q: &QuotientGroup, within: &Subgroup| {
        let mut reps = vec![UNSET; q.order()];
        for &x in within.members() {
            reps[q.project(x)] = x;
        }
        reps
    };
    let (hmax1, gmax1) = (largest(q1, h1), largest(q1, &Subgroup::whole(g1)));
    let (hmax2, gmax2) = (largest(q2, h2), largest(q2, &Subgroup::whole(g2)));
    let cosets = source.subgroup_image.members();
    let mut digits = vec![0usize; n];
    let mut t1 = vec![0; n + 1];
    let mut t2 = vec![0; n + 1];
    loop {
        for i in 0..n {
            let u = cosets[digits[i]];
            t1[i] = hmax1[u];
            t2[i] = hmax2[alpha.apply(u)];
        }
        for v in q1.group().elements() {
            t1[n] = gmax1[v];
            t2[n] = gmax2[alpha.apply(v)];
            let (Ok(c1), Ok(c2)) = (g1.commutator(&t1), g2.commutator(&t2)) else {
                return false;
            };
            if witness.beta_element(c1) != Some(c2) {
                return false;
            }
        }
        let Some(i) = (0..n).rev().find(|&i| digits[i] + 1 < cosets.len()) else {
            return true;
        };
        digits[i] += 1;
        digits[i + 1..].fill(0);
    }
}
