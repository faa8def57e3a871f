//! Isomorphism search by backtracking over generator images.
//!
//! The source group gets a short generating sequence (constraint subgroup
//! first). Images are tried in increasing target index, pruned by element
//! order, centralizer size and constraint membership. Each assignment is
//! propagated along the Cayley graph of the generators assigned so far,
//! which checks the homomorphism law and injectivity as the map grows.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::structure::{subgroup_generated, Subgroup};

/// Default cap on backtracking nodes.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Largest group [`automorphisms`] enumerates by default.
pub const DEFAULT_AUTOMORPHISM_CAP: usize = 64;

const UNSET: usize = usize::MAX;

/// A bijective homomorphism, stored as `image[x]` for every source element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Isomorphism {
    image: Vec<Element>,
}

impl Isomorphism {
    pub fn identity(order: usize) -> Self {
        Isomorphism { image: (0..order).collect() }
    }

    /// Checks the homomorphism law and bijectivity.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, image: Vec<Element>) -> Result<Self> {
        let iso = Isomorphism { image };
        if iso.is_isomorphism(source, target) {
            Ok(iso)
        } else {
            Err(Error::Parse("image array is not an isomorphism".into()))
        }
    }

    /// Caller guarantees the isomorphism property.
    pub(crate) fn from_image(image: Vec<Element>) -> Self {
        Isomorphism { image }
    }

    pub fn image(&self) -> &[Element] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.image[x]
    }

    pub fn order(&self) -> usize {
        self.image.len()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Isomorphism { image: inv }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Isomorphism) -> Self {
        Isomorphism { image: self.image.iter().map(|&y| next.image[y]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_isomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        let n = source.order();
        if self.image.len() != n || target.order() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in &self.image {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        source.elements().all(|a| {
            source.elements().all(|b| self.image[source.mul(a, b)] == target.mul(self.image[a], self.image[b]))
        })
    }

    /// Image of a subgroup of the source.
    pub fn map_subgroup(&self, s: &Subgroup) -> Subgroup {
        s.map(self.image.len(), |x| self.image[x])
    }
}

/// Source and target subgroups the isomorphism must match up.
pub type Constraint<'a> = (&'a Subgroup, &'a Subgroup);

/// First isomorphism in generator-image order, or `None` if none exists.
pub fn find_isomorphism(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    constraint: Option<Constraint<'_>>,
) -> Result<Option<Isomorphism>> {
    find_isomorphism_with_budget(g1, g2, constraint, DEFAULT_SEARCH_BUDGET)
}

pub fn find_isomorphism_with_budget(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    constraint: Option<Constraint<'_>>,
    budget: u64,
) -> Result<Option<Isomorphism>> {
    let mut found = None;
    for_each_isomorphism(g1, g2, constraint, budget, |iso| {
        found = Some(iso.clone());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

pub fn are_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<bool> {
    Ok(find_isomorphism(g1, g2, None)?.is_some())
}

/// All automorphisms in generator-image order; the identity comes first.
pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<Isomorphism>> {
    automorphisms_capped(g, DEFAULT_AUTOMORPHISM_CAP, DEFAULT_SEARCH_BUDGET)
}

pub fn automorphisms_capped(g: &FiniteGroup, cap: usize, budget: u64) -> Result<Vec<Isomorphism>> {
    if g.order() > cap {
        return Err(Error::OrderCapExceeded { order: g.order(), cap });
    }
    let mut all = Vec::new();
    for_each_isomorphism(g, g, None, budget, |iso| {
        all.push(iso.clone());
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

/// Visits isomorphisms in generator-image order until `visit` breaks.
///
/// Returns the number of search nodes spent. Running out of budget is an
/// error, so a completed call means the enumeration was exhaustive.
pub fn for_each_isomorphism<F>(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    constraint: Option<Constraint<'_>>,
    budget: u64,
    mut visit: F,
) -> Result<u64>
where
    F: FnMut(&Isomorphism) -> ControlFlow<()>,
{
    if let Some((s1, s2)) = constraint {
        for (s, g) in [(s1, g1), (s2, g2)] {
            if s.parent_order() != g.order() {
                return Err(Error::ForeignSubgroup { subgroup_parent: s.parent_order(), order: g.order() });
            }
        }
    }
    let Some(mut search) = Search::new(g1, g2, constraint, budget) else {
        return Ok(0);
    };
    let _ = search.run(0, &mut visit)?;
    Ok(search.nodes)
}

/// Per-element invariant preserved by any admissible isomorphism.
fn profile(g: &FiniteGroup, s: Option<&Subgroup>) -> Vec<(usize, usize, bool)> {
    g.elements()
        .map(|x| {
            let centralizer = g.elements().filter(|&y| g.commutes(x, y)).count();
            (g.element_order(x), centralizer, s.is_some_and(|s| s.contains(x)))
        })
        .collect()
}

/// Greedy generating sequence: repeatedly adds the element that enlarges
/// the generated subgroup most (smallest index on ties), exhausting the
/// constraint subgroup before the rest of the group.
fn generating_sequence(g: &FiniteGroup, first: Option<&Subgroup>) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut current = Subgroup::trivial(g.order());
    let whole = Subgroup::whole(g);
    for target in first.into_iter().chain(std::iter::once(&whole)) {
        while !target.is_subset_of(&current) {
            let mut best: Option<(usize, Element, Subgroup)> = None;
            for &x in target.members() {
                if current.contains(x) {
                    continue;
                }
                let mut seeds = gens.clone();
                seeds.push(x);
                let joined = subgroup_generated(g, &seeds);
                if best.as_ref().is_none_or(|(size, _, _)| joined.order() > *size) {
                    best = Some((joined.order(), x, joined));
                }
            }
            let (_, x, joined) = best.expect("target not yet covered");
            gens.push(x);
            current = joined;
        }
    }
    gens
}

struct Search<'a> {
    g1: &'a FiniteGroup,
    g2: &'a FiniteGroup,
    gens: Vec<Element>,
    images: Vec<Element>,
    /// `candidates[i]`: targets matching the profile of `gens[i]`.
    candidates: Vec<Vec<Element>>,
    in_s1: Vec<bool>,
    in_s2: Vec<bool>,
    map: Vec<Element>,
    used: Vec<bool>,
    trail: Vec<Element>,
    queue: Vec<Element>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    /// `None` when a cheap invariant already rules out every isomorphism.
    fn new(g1: &'a FiniteGroup, g2: &'a FiniteGroup, constraint: Option<Constraint<'_>>, budget: u64) -> Option<Self> {
        let n = g1.order();
        if g2.order() != n {
            return None;
        }
        let (s1, s2) = constraint.unzip();
        if s1.map(Subgroup::order) != s2.map(Subgroup::order) {
            return None;
        }
        let p1 = profile(g1, s1);
        let p2 = profile(g2, s2);
        let mut sorted1 = p1.clone();
        let mut sorted2 = p2.clone();
        sorted1.sort_unstable();
        sorted2.sort_unstable();
        if sorted1 != sorted2 {
            return None;
        }
        let gens = generating_sequence(g1, s1);
        let candidates = gens.iter().map(|&x| g2.elements().filter(|&y| p2[y] == p1[x]).collect()).collect();
        let mut map = vec![UNSET; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;
        Some(Search {
            g1,
            g2,
            images: Vec::with_capacity(gens.len()),
            gens,
            candidates,
            in_s1: p1.iter().map(|p| p.2).collect(),
            in_s2: p2.iter().map(|p| p.2).collect(),
            map,
            used,
            trail: Vec::new(),
            queue: Vec::new(),
            nodes: 0,
            budget,
        })
    }

    fn run<F>(&mut self, depth: usize, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&Isomorphism) -> ControlFlow<()>,
    {
        if depth == self.gens.len() {
            let iso = Isomorphism { image: self.map.clone() };
            return Ok(visit(&iso));
        }
        for i in 0..self.candidates[depth].len() {
            let y = self.candidates[depth][i];
            if self.used[y] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded { budget: self.budget });
            }
            let mark = self.trail.len();
            self.images.push(y);
            if self.extend(self.gens[depth], y) && self.run(depth + 1, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
            self.images.pop();
            for x in self.trail.drain(mark..) {
                self.used[self.map[x]] = false;
                self.map[x] = UNSET;
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn assign(&mut self, x: Element, y: Element) -> bool {
        if self.used[y] || self.in_s1[x] != self.in_s2[y] {
            return false;
        }
        self.map[x] = y;
        self.used[y] = true;
        self.trail.push(x);
        self.queue.push(x);
        true
    }

    /// Maps `x ↦ y` and closes the map under right multiplication by the
    /// assigned generators, failing on any inconsistency.
    fn extend(&mut self, x: Element, y: Element) -> bool {
        self.queue.clear();
        if !self.assign(x, y) {
            return false;
        }
        self.queue.extend(self.g1.elements().filter(|&z| self.map[z] != UNSET && z != x));
        while let Some(a) = self.queue.pop() {
            let fa = self.map[a];
            for j in 0..self.images.len() {
                let b = self.g1.mul(a, self.gens[j]);
                let fb = self.g2.mul(fa, self.images[j]);
                if self.map[b] == UNSET {
                    if !self.assign(b, fb) {
                        return false;
                    }
                } else if self.map[b] != fb {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{center, quotient};

    fn cyclic(n: usize) -> FiniteGroup {
        let gen: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        FiniteGroup::from_perm_generators(n, &[gen]).unwrap()
    }

    fn klein() -> FiniteGroup {
        FiniteGroup::from_perm_generators(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap()
    }

    fn d8() -> FiniteGroup {
        FiniteGroup::from_perm_generators(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).unwrap()
    }

    /// Oracle: every bijection fixing the identity, filtered by the
    /// homomorphism law.
    fn brute_force_automorphisms(g: &FiniteGroup) -> usize {
        fn rec(g: &FiniteGroup, image: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut usize) {
            if image.len() == g.order() {
                let iso = Isomorphism { image: image.clone() };
                *count += iso.is_isomorphism(g, g) as usize;
                return;
            }
            for y in 1..g.order() {
                if !used[y] {
                    used[y] = true;
                    image.push(y);
                    rec(g, image, used, count);
                    image.pop();
                    used[y] = false;
                }
            }
        }
        let mut count = 0;
        let mut used = vec![false; g.order()];
        used[0] = true;
        rec(g, &mut vec![0], &mut used, &mut count);
        count
    }

    #[test]
    fn self_isomorphism_is_identity() {
        for g in [cyclic(6), klein(), d8(), FiniteGroup::trivial()] {
            let iso = find_isomorphism(&g, &g, None).unwrap().unwrap();
            assert!(iso.is_identity());
        }
    }

    #[test]
    fn cyclic_vs_klein() {
        assert_eq!(find_isomorphism(&cyclic(4), &klein(), None).unwrap(), None);
        assert!(!are_isomorphic(&cyclic(4), &cyclic(5)).unwrap());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&FiniteGroup::trivial()).unwrap().len(), 1);
        for g in [klein(), d8(), cyclic(5), cyclic(8)] {
            let autos = automorphisms(&g).unwrap();
            assert_eq!(autos.len(), brute_force_automorphisms(&g));
            assert!(autos[0].is_identity());
            assert!(autos.iter().all(|a| a.is_isomorphism(&g, &g)));
        }
        assert_eq!(automorphisms(&klein()).unwrap().len(), 6);
        assert_eq!(automorphisms(&d8()).unwrap().len(), 8);
    }

    #[test]
    fn automorphism_cap() {
        let err = automorphisms_capped(&cyclic(8), 4, DEFAULT_SEARCH_BUDGET).unwrap_err();
        assert_eq!(err, Error::OrderCapExceeded { order: 8, cap: 4 });
    }

    #[test]
    fn dihedral_central_quotient_is_klein() {
        let g = d8();
        let q = quotient(&g, &center(&g)).unwrap();
        let iso = find_isomorphism(q.group(), &klein(), None).unwrap().unwrap();
        assert!(iso.is_isomorphism(q.group(), &klein()));
    }

    #[test]
    fn constraint_is_respected() {
        let g = d8();
        let rotations = subgroup_generated(&g, &[1]);
        let reflections = subgroup_generated(&g, &[2, g.mul(1, 1)]);
        assert_eq!(find_isomorphism(&g, &g, Some((&rotations, &reflections))).unwrap(), None);
        let other = subgroup_generated(&g, &[g.mul(1, 2), g.mul(1, 1)]);
        let iso = find_isomorphism(&g, &g, Some((&reflections, &other))).unwrap().unwrap();
        assert_eq!(iso.map_subgroup(&reflections), other);
    }

    #[test]
    fn budget_is_an_error() {
        let err = find_isomorphism_with_budget(&d8(), &d8(), None, 1).unwrap_err();
        assert_eq!(err, Error::SearchBudgetExceeded { budget: 1 });
    }

    #[test]
    fn inverse_and_composition() {
        let g = d8();
        let autos = automorphisms(&g).unwrap();
        for a in &autos {
            assert!(a.then(&a.inverse()).is_identity());
            for b in &autos {
                assert!(autos.contains(&a.then(b)));
            }
        }
    }
}
