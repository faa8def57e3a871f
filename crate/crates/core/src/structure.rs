//! Subgroups, central series, commutator subgroups and quotients.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, IDENTITY};

/// Largest group whose full subgroup lattice [`all_subgroups`] will enumerate
/// by default.
pub const DEFAULT_SUBGROUP_CAP: usize = 64;

/// A subgroup, stored as the sorted member list plus a membership mask over
/// the parent's elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<Element>,
    mask: Vec<bool>,
}

impl Subgroup {
    pub fn trivial(parent_order: usize) -> Self {
        Self::from_mask(single(parent_order, IDENTITY))
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_mask(vec![true; g.order()])
    }

    fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        Subgroup { members, mask }
    }

    /// Checks that `members` is a subgroup of `g`.
    pub fn from_members(g: &FiniteGroup, members: &[Element]) -> Result<Self> {
        let mut mask = vec![false; g.order()];
        for &x in members {
            g.check_element(x)?;
            mask[x] = true;
        }
        let sub = Self::from_mask(mask);
        let closed = sub.contains(IDENTITY)
            && sub.members.iter().all(|&a| sub.members.iter().all(|&b| sub.contains(g.mul(a, b))));
        if closed {
            Ok(sub)
        } else {
            Err(Error::NotContained)
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    /// Sorted member indices; `members()[0]` is the identity.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.mask.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Self::from_mask(self.mask.iter().zip(&other.mask).map(|(&a, &b)| a && b).collect())
    }

    /// The subgroup as a group of its own, with element `i` of the result
    /// being `members()[i]`.
    pub fn to_group(&self, g: &FiniteGroup) -> FiniteGroup {
        let k = self.order();
        let mut position = vec![u32::MAX; g.order()];
        for (i, &x) in self.members.iter().enumerate() {
            position[x] = i as u32;
        }
        let mut table = Vec::with_capacity(k * k);
        for &a in &self.members {
            for &b in &self.members {
                table.push(position[g.mul(a, b)]);
            }
        }
        let sub = FiniteGroup::from_trusted_table(k, table);
        match g.labels() {
            Some(labels) => sub.with_labels(self.members.iter().map(|&x| labels[x].clone()).collect()),
            None => sub,
        }
    }

    /// Image of the subgroup under an element map.
    pub fn map(&self, target_order: usize, f: impl Fn(Element) -> Element) -> Subgroup {
        let mut mask = vec![false; target_order];
        for &x in &self.members {
            mask[f(x)] = true;
        }
        Self::from_mask(mask)
    }

    fn key(&self) -> Vec<u64> {
        let mut words = vec![0u64; self.mask.len().div_ceil(64)];
        for &x in &self.members {
            words[x / 64] |= 1 << (x % 64);
        }
        words
    }
}

fn single(order: usize, x: Element) -> Vec<bool> {
    let mut mask = vec![false; order];
    mask[x] = true;
    mask
}

/// Least subgroup containing `seeds`.
pub fn subgroup_generated(g: &FiniteGroup, seeds: &[Element]) -> Subgroup {
    let mut mask = single(g.order(), IDENTITY);
    close_into(g, &mut mask, seeds);
    Subgroup::from_mask(mask)
}

/// Extends the subgroup marked in `mask` by `seeds`. In a finite group the
/// monoid generated by a set is already a subgroup, so right multiplication
/// by the generators suffices.
fn close_into(g: &FiniteGroup, mask: &mut [bool], seeds: &[Element]) {
    let mut gens: Vec<Element> = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
    gens.extend(seeds.iter().copied().filter(|&s| s != IDENTITY));
    gens.sort_unstable();
    gens.dedup();
    let mut queue: Vec<Element> = gens.iter().copied().filter(|&x| mask[x]).collect();
    for &s in seeds {
        if !mask[s] {
            mask[s] = true;
            queue.push(s);
        }
    }
    while let Some(x) = queue.pop() {
        for &s in &gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                queue.push(y);
            }
        }
    }
}

/// `{h ∈ ambient : hx = xh}`.
pub fn centralizer(g: &FiniteGroup, ambient: &Subgroup, x: Element) -> Subgroup {
    Subgroup::from_mask((0..g.order()).map(|h| ambient.contains(h) && g.commutes(h, x)).collect())
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    Subgroup::from_mask(g.elements().map(|z| g.elements().all(|x| g.commutes(z, x))).collect())
}

/// Center of `h` as an abstract group, as a subset of the parent.
pub fn center_of(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    Subgroup::from_mask(g.elements().map(|z| h.contains(z) && h.members().iter().all(|&y| g.commutes(z, y))).collect())
}

/// `[Z₀, Z₁, …, Zₙ]` with `Z_{k+1} = {x : [x, y] ∈ Z_k for all y}`.
pub fn upper_central_series(g: &FiniteGroup, n: usize) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::trivial(g.order())];
    while series.len() <= n {
        let prev = series.last().unwrap();
        if prev.is_whole() {
            series.push(prev.clone());
            continue;
        }
        let next =
            Subgroup::from_mask(g.elements().map(|x| g.elements().all(|y| prev.contains(g.comm(x, y)))).collect());
        if &next == prev {
            // stable from here on
            series.resize(n + 1, next);
            break;
        }
        series.push(next);
    }
    series
}

/// `Zₙ(G)`.
pub fn hypercenter(g: &FiniteGroup, n: usize) -> Subgroup {
    upper_central_series(g, n).pop().unwrap()
}

/// `[γ₁, …, γ_{n+1}]` with `γ₁ = G` and `γ_{k+1} = ⟨[c, x] : c ∈ γ_k, x ∈ G⟩`.
pub fn lower_central_series(g: &FiniteGroup, n: usize) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(g)];
    while series.len() <= n {
        let prev = series.last().unwrap();
        let next = commutator_closure(g, prev.members(), g.elements());
        if &next == prev {
            series.resize(n + 1, next);
            break;
        }
        series.push(next);
    }
    series
}

/// `γ_k(G)` for `k ≥ 1`.
pub fn gamma(g: &FiniteGroup, k: usize) -> Subgroup {
    assert!(k >= 1, "the lower central series starts at γ₁");
    lower_central_series(g, k - 1).pop().unwrap()
}

/// Subgroup generated by `[c, x]` for all `c` in `left` and `x` in `right`.
fn commutator_closure(g: &FiniteGroup, left: &[Element], right: impl Iterator<Item = Element> + Clone) -> Subgroup {
    let mut values = vec![false; g.order()];
    for &c in left {
        for x in right.clone() {
            values[g.comm(c, x)] = true;
        }
    }
    let seeds: Vec<Element> = (0..g.order()).filter(|&v| values[v]).collect();
    subgroup_generated(g, &seeds)
}

/// All values `[h₁, …, h_k]` with every `hᵢ ∈ h`, as a membership mask.
pub fn commutator_values(g: &FiniteGroup, h: &Subgroup, k: usize) -> Vec<bool> {
    assert!(k >= 1);
    let mut current: Vec<bool> = (0..g.order()).map(|x| h.contains(x)).collect();
    for _ in 1..k {
        let mut next = vec![false; g.order()];
        for c in (0..g.order()).filter(|&c| current[c]) {
            for &y in h.members() {
                next[g.comm(c, y)] = true;
            }
        }
        current = next;
    }
    current
}

/// `[ₙH, G]`: the subgroup generated by all `[h₁, …, hₙ, x]` with
/// `hᵢ ∈ H`, `x ∈ G`.
pub fn relative_gamma(h: &Subgroup, g: &FiniteGroup, n: usize) -> Subgroup {
    assert!(n >= 1, "[ₙH, G] needs n ≥ 1");
    let values = commutator_values(g, h, n);
    let left: Vec<Element> = (0..g.order()).filter(|&c| values[c]).collect();
    commutator_closure(g, &left, g.elements())
}

pub fn is_normal(g: &FiniteGroup, n: &Subgroup) -> bool {
    n.members().iter().all(|&x| g.elements().all(|y| n.contains(g.conjugate(x, y))))
}

/// Smallest normal subgroup containing `s`.
pub fn normal_closure(g: &FiniteGroup, s: &Subgroup) -> Subgroup {
    let seeds: Vec<Element> =
        s.members().iter().flat_map(|&x| g.elements().map(move |y| (x, y))).map(|(x, y)| g.conjugate(x, y)).collect();
    subgroup_generated(g, &seeds)
}

/// `G/N` together with the projection data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGroup {
    base: FiniteGroup,
    kernel: Subgroup,
    coset_reps: Vec<Element>,
    projection: Vec<Element>,
}

impl QuotientGroup {
    /// The quotient's own multiplication table.
    pub fn group(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Least parent element of each coset.
    pub fn coset_reps(&self) -> &[Element] {
        &self.coset_reps
    }

    #[inline]
    pub fn project(&self, x: Element) -> Element {
        self.projection[x]
    }

    pub fn projection(&self) -> &[Element] {
        &self.projection
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn parent_order(&self) -> usize {
        self.projection.len()
    }

    /// `HN/N` as a subgroup of the quotient.
    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        h.map(self.order(), |x| self.project(x))
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, s: &Subgroup) -> Subgroup {
        Subgroup::from_mask(self.projection.iter().map(|&q| s.contains(q)).collect())
    }
}

/// Cosets of a normal subgroup, numbered by their least element so the
/// identity coset is `0`.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<QuotientGroup> {
    if n.parent_order() != g.order() {
        return Err(Error::ForeignSubgroup { subgroup_parent: n.parent_order(), order: g.order() });
    }
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    const UNSET: usize = usize::MAX;
    let mut projection = vec![UNSET; g.order()];
    let mut coset_reps = Vec::with_capacity(g.order() / n.order());
    for x in g.elements() {
        if projection[x] != UNSET {
            continue;
        }
        let q = coset_reps.len();
        coset_reps.push(x);
        for &k in n.members() {
            projection[g.mul(x, k)] = q;
        }
    }
    let m = coset_reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &coset_reps {
        for &b in &coset_reps {
            table.push(projection[g.mul(a, b)] as u32);
        }
    }
    let mut base = FiniteGroup::from_trusted_table(m, table);
    if g.labels().is_some() {
        base = base.with_labels(coset_reps.iter().map(|&r| g.label(r)).collect());
    }
    Ok(QuotientGroup { base, kernel: n.clone(), coset_reps, projection })
}

/// [`QuotientGroup::image_of`] as a free function.
pub fn image_in_quotient(q: &QuotientGroup, h: &Subgroup) -> Subgroup {
    q.image_of(h)
}

/// Every subgroup of `g` (containing `must_contain`, if given), sorted by
/// order and then by member list.
pub fn all_subgroups(g: &FiniteGroup, must_contain: Option<&Subgroup>) -> Result<Vec<Subgroup>> {
    all_subgroups_capped(g, must_contain, DEFAULT_SUBGROUP_CAP)
}

/// Every subgroup is a join of cyclic subgroups, so joining one cyclic
/// subgroup at a time from the starting subgroup reaches the whole
/// (filtered) lattice at the fixpoint.
pub fn all_subgroups_capped(g: &FiniteGroup, must_contain: Option<&Subgroup>, cap: usize) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(Error::OrderCapExceeded { order: g.order(), cap });
    }
    let start = must_contain.cloned().unwrap_or_else(|| Subgroup::trivial(g.order()));
    let mut cyclic_gens: Vec<Element> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in g.elements().skip(1) {
        if seen_cyclic.insert(subgroup_generated(g, &[x]).key()) {
            cyclic_gens.push(x);
        }
    }
    let mut seen = HashSet::from([start.key()]);
    let mut found = vec![start];
    let mut head = 0;
    while head < found.len() {
        for &x in &cyclic_gens {
            if found[head].contains(x) {
                continue;
            }
            let mut mask = found[head].mask.clone();
            close_into(g, &mut mask, &[x]);
            let joined = Subgroup::from_mask(mask);
            if seen.insert(joined.key()) {
                found.push(joined);
            }
        }
        head += 1;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    Ok(found)
}

pub fn normal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(g, None)?.into_iter().filter(|n| is_normal(g, n)).collect())
}

/// True iff `γ_{n+1}(G) = 1`.
pub fn is_nilpotent_of_class_at_most(g: &FiniteGroup, n: usize) -> bool {
    lower_central_series(g, n).last().unwrap().is_trivial()
}

/// Conjugacy classes, each sorted, ordered by least member.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<Element>> {
    let mut class_of = vec![usize::MAX; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let mut class: Vec<Element> = g.elements().map(|y| g.conjugate(x, y)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            class_of[c] = classes.len();
        }
        classes.push(class);
    }
    classes
}
