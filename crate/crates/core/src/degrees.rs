//! Exact commutativity and nilpotency degrees.
//!
//! All four quantities reduce to one count: the number of tuples
//! `(x₁, …, xₙ, g) ∈ Hⁿ × G` with `[x₁, …, xₙ, g] = 1`. Since
//! `[c, g] = 1 ⇔ g ∈ C_G(c)`, it equals `Σ_c dist(c)·|C_G(c)|` where
//! `dist(c)` counts the tuples in `Hⁿ` whose left-normed commutator is `c`.
//! The distribution is propagated one coordinate at a time, which costs
//! `O(n·|G|·|H|)` instead of `O(|H|ⁿ·|G|)`.

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::ratio::ExactRatio;
use crate::structure::{center, center_of, Subgroup};

/// Default number of tuple evaluations the naive oracle may spend.
pub const DEFAULT_NAIVE_BUDGET: u128 = 100_000_000;

/// `counts[c]` = number of `k`-tuples over `H` whose left-normed commutator
/// is `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorDistribution {
    k: usize,
    counts: Vec<u128>,
}

impl CommutatorDistribution {
    pub fn new(h: &Subgroup, g: &FiniteGroup, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroLevel);
        }
        check_parent(h, g)?;
        checked_pow(h.order() as u128, k as u32)?;
        let mut counts = vec![0u128; g.order()];
        for &x in h.members() {
            counts[x] = 1;
        }
        for _ in 1..k {
            let mut next = vec![0u128; g.order()];
            for (c, &weight) in counts.iter().enumerate().filter(|(_, &w)| w > 0) {
                for &y in h.members() {
                    next[g.comm(c, y)] += weight;
                }
            }
            counts = next;
        }
        Ok(CommutatorDistribution { k, counts })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }
}

fn check_parent(h: &Subgroup, g: &FiniteGroup) -> Result<()> {
    if h.parent_order() == g.order() {
        Ok(())
    } else {
        Err(Error::ForeignSubgroup { subgroup_parent: h.parent_order(), order: g.order() })
    }
}

fn checked_pow(base: u128, exp: u32) -> Result<u128> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// `|C_G(x)|` for every element.
pub fn centralizer_orders(g: &FiniteGroup) -> Vec<usize> {
    g.elements().map(|x| g.elements().filter(|&y| g.commutes(x, y)).count()).collect()
}

/// `d(G) = Σ_g |C_G(g)| / |G|²`.
pub fn commutativity_degree(g: &FiniteGroup) -> ExactRatio {
    let n = g.order() as u128;
    let pairs: u128 = centralizer_orders(g).iter().map(|&c| c as u128).sum();
    ExactRatio::new(pairs, n * n)
}

/// `d⁽ⁿ⁾(G)`: the share of `(n+1)`-tuples with trivial left-normed
/// commutator.
pub fn nilpotency_degree(g: &FiniteGroup, n: usize) -> Result<ExactRatio> {
    relative_nilpotency_degree(&Subgroup::whole(g), g, n)
}

/// `d(H, G) = Σ_{h∈H} |C_G(h)| / (|H|·|G|)`.
pub fn relative_commutativity_degree(h: &Subgroup, g: &FiniteGroup) -> Result<ExactRatio> {
    check_parent(h, g)?;
    let pairs: u128 = h.members().iter().map(|&x| g.elements().filter(|&y| g.commutes(x, y)).count() as u128).sum();
    Ok(ExactRatio::new(pairs, h.order() as u128 * g.order() as u128))
}

/// `d⁽ⁿ⁾(H, G)` via the commutator-value distribution.
pub fn relative_nilpotency_degree(h: &Subgroup, g: &FiniteGroup, n: usize) -> Result<ExactRatio> {
    let (hits, total) = relative_nilpotency_count(h, g, n)?;
    Ok(ExactRatio::new(hits, total))
}

/// Raw `(hits, |H|ⁿ·|G|)` behind [`relative_nilpotency_degree`].
pub fn relative_nilpotency_count(h: &Subgroup, g: &FiniteGroup, n: usize) -> Result<(u128, u128)> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    check_parent(h, g)?;
    let total = checked_pow(h.order() as u128, n as u32)?.checked_mul(g.order() as u128).ok_or(Error::Overflow)?;
    let dist = CommutatorDistribution::new(h, g, n)?;
    let mut centralizer_cache = vec![0usize; g.order()];
    let mut hits = 0u128;
    for (c, &weight) in dist.counts().iter().enumerate().filter(|(_, &w)| w > 0) {
        if centralizer_cache[c] == 0 {
            centralizer_cache[c] = g.elements().filter(|&y| g.commutes(c, y)).count();
        }
        hits += weight * centralizer_cache[c] as u128;
    }
    Ok((hits, total))
}

/// Literal enumeration of `Hⁿ × G`. Test oracle for
/// [`relative_nilpotency_degree`].
pub fn nilpotency_degree_naive(h: &Subgroup, g: &FiniteGroup, n: usize) -> Result<ExactRatio> {
    nilpotency_degree_naive_with_budget(h, g, n, DEFAULT_NAIVE_BUDGET)
}

pub fn nilpotency_degree_naive_with_budget(
    h: &Subgroup,
    g: &FiniteGroup,
    n: usize,
    budget: u128,
) -> Result<ExactRatio> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    check_parent(h, g)?;
    let needed = checked_pow(h.order() as u128, n as u32)?.checked_mul(g.order() as u128).ok_or(Error::Overflow)?;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let members = h.members();
    let mut digits = vec![0usize; n];
    let mut tuple: Vec<Element> = vec![members[0]; n + 1];
    let mut hits = 0u128;
    'outer: loop {
        for (slot, &d) in digits.iter().enumerate() {
            tuple[slot] = members[d];
        }
        for x in g.elements() {
            tuple[n] = x;
            if g.commutator(&tuple)? == g.identity() {
                hits += 1;
            }
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < members.len() {
                continue 'outer;
            }
            *d = 0;
        }
        break;
    }
    Ok(ExactRatio::new(hits, needed))
}

/// `½(1 + |Z(G) ∪ Z(H)| / |G|)`, with `Z(H)` the center of `H` itself and
/// `∪` the plain set union.
pub fn degree_upper_bound(h: &Subgroup, g: &FiniteGroup) -> Result<ExactRatio> {
    check_parent(h, g)?;
    let zg = center(g);
    let zh = center_of(g, h);
    let union = g.elements().filter(|&x| zg.contains(x) || zh.contains(x)).count() as u128;
    let n = g.order() as u128;
    Ok(ExactRatio::new(n + union, 2 * n))
}
