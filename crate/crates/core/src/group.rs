//! Finite groups stored as dense multiplication tables.
//!
//! Every group numbers its elements `0..order` and element `0` is always the
//! identity. Constructors that receive a table with the identity elsewhere
//! swap it into position `0`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use crate::error::{AxiomViolation, Error, Result};

/// An element index, always relative to one [`FiniteGroup`].
pub type Element = usize;

/// The identity of every group.
pub const IDENTITY: Element = 0;

/// Default maximum number of elements produced by a closure constructor.
pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

/// How much of the group axioms a table constructor re-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    /// Latin square, identity and every associativity triple.
    Full,
    /// Skip the `O(order³)` associativity scan; for tables that come from a
    /// known group action.
    Trusted,
}

/// A finite group as an immutable multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// The group of order one.
    pub fn trivial() -> Self {
        Self::from_trusted_table(1, vec![0])
    }

    /// Builds a group from `table[i][j] = i·j`, validating every axiom.
    pub fn from_mult_table(order: usize, table: &[Vec<usize>]) -> Result<Self> {
        Self::from_mult_table_with(order, table, Validation::Full)
    }

    pub fn from_mult_table_with(order: usize, table: &[Vec<usize>], validation: Validation) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup(AxiomViolation::Shape("order 0".into())));
        }
        if order > u32::MAX as usize {
            return Err(Error::NotAGroup(AxiomViolation::Shape("order too large".into())));
        }
        if table.len() != order {
            return Err(Error::NotAGroup(AxiomViolation::Shape(format!(
                "expected {order} rows, found {}",
                table.len()
            ))));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotAGroup(AxiomViolation::Shape(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                ))));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::NotAGroup(AxiomViolation::Shape(format!("row {i} holds index {x}"))));
                }
                flat.push(x as u32);
            }
        }
        check_latin(order, &flat)?;
        let identity = find_identity(order, &flat).ok_or(Error::NotAGroup(AxiomViolation::NoIdentity))?;
        if validation == Validation::Full {
            check_associative(order, &flat)?;
        }
        if identity != 0 {
            flat = swap_to_front(order, &flat, identity);
        }
        Ok(Self::from_trusted_table(order, flat))
    }

    /// Wraps a flat row-major table already known to be a group table with
    /// identity `0`.
    pub(crate) fn from_trusted_table(order: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!((0..order).all(|j| table[j] as usize == j && table[j * order] as usize == j));
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            let j = row.iter().position(|&x| x == 0).expect("latin row contains the identity");
            inverses[i] = j as u32;
        }
        FiniteGroup { order, table, inverses, labels: None }
    }

    /// Closure of permutations of `0..degree`. The product `x·y` applies `x`
    /// first, then `y`. Elements are numbered in breadth-first discovery
    /// order from the identity.
    pub fn from_perm_generators(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        Self::from_perm_generators_capped(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_perm_generators_capped(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Self> {
        let closure = perm_closure(degree, generators, cap)?;
        let labels = closure.elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(closure.group.with_labels(labels))
    }

    /// As [`FiniteGroup::from_perm_generators`], labelled by words in the
    /// given generator names (`e`, `a`, `a^2b`, …).
    pub fn from_named_perm_generators(degree: usize, generators: &[Vec<usize>], names: &[&str]) -> Result<Self> {
        assert_eq!(generators.len(), names.len(), "one name per generator");
        let closure = perm_closure(degree, generators, DEFAULT_CLOSURE_CAP)?;
        Ok(closure.group.with_labels(word_labels(&closure.words, names)))
    }

    /// Closure of 2×2 matrices `[a, b, c, d]` (row-major) of determinant 1
    /// over the integers mod the prime `p`.
    pub fn from_matrix_generators(p: u64, generators: &[[u64; 4]]) -> Result<Self> {
        Self::from_matrix_generators_capped(p, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_matrix_generators_capped(p: u64, generators: &[[u64; 4]], cap: usize) -> Result<Self> {
        let closure = matrix_closure(p, generators, cap)?;
        let labels = closure.elements.iter().map(|m| format!("[{} {}; {} {}]", m[0], m[1], m[2], m[3])).collect();
        Ok(closure.group.with_labels(labels))
    }

    /// As [`FiniteGroup::from_matrix_generators`], labelled by words in the
    /// given generator names.
    pub fn from_named_matrix_generators(p: u64, generators: &[[u64; 4]], names: &[&str]) -> Result<Self> {
        assert_eq!(generators.len(), names.len(), "one name per generator");
        let closure = matrix_closure(p, generators, DEFAULT_CLOSURE_CAP)?;
        Ok(closure.group.with_labels(word_labels(&closure.words, names)))
    }

    /// `G1 × G2` with `(i, j)` stored at index `i·|G2| + j`.
    pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<Self> {
        Self::direct_product_capped(g1, g2, DEFAULT_CLOSURE_CAP)
    }

    pub fn direct_product_capped(g1: &FiniteGroup, g2: &FiniteGroup, cap: usize) -> Result<Self> {
        let (n1, n2) = (g1.order, g2.order);
        let order = n1.checked_mul(n2).ok_or(Error::ClosureTooLarge { cap })?;
        if order > cap {
            return Err(Error::ClosureTooLarge { cap });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (a1, a2) = (a / n2, a % n2);
            for b in 0..order {
                let (b1, b2) = (b / n2, b % n2);
                table.push((g1.mul(a1, b1) * n2 + g2.mul(a2, b2)) as u32);
            }
        }
        let labels = (0..order).map(|a| format!("({}, {})", g1.label(a / n2), g2.label(a % n2))).collect();
        Ok(Self::from_trusted_table(order, table).with_labels(labels))
    }

    /// Attaches display labels, one per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Element {
        IDENTITY
    }

    #[inline]
    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverses[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, x: Element, g: Element) -> Element {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn comm(&self, a: Element, b: Element) -> Element {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        // a⁻¹b⁻¹ab = (ba)⁻¹(ab)
        self.mul(self.inv(ba), ab)
    }

    #[inline]
    pub fn commutes(&self, a: Element, b: Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Left-normed commutator `[x₁, …, x_k] = [[x₁, …, x_{k−1}], x_k]`; a
    /// single element is returned unchanged.
    pub fn commutator(&self, xs: &[Element]) -> Result<Element> {
        let (&first, rest) = xs.split_first().ok_or(Error::EmptyInput)?;
        self.check_element(first)?;
        rest.iter().try_fold(first, |acc, &x| {
            self.check_element(x)?;
            Ok(self.comm(acc, x))
        })
    }

    /// Least `k ≥ 1` with `x^k = 1`.
    pub fn element_order(&self, x: Element) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != IDENTITY {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn pow(&self, x: Element, k: usize) -> Element {
        (0..k).fold(IDENTITY, |acc, _| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn check_element(&self, x: Element) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::InvalidElement { index: x, order: self.order })
        }
    }

    /// Row `a` of the table: `a·0, a·1, …`.
    pub fn row(&self, a: Element) -> impl ExactSizeIterator<Item = Element> + '_ {
        self.table[a * self.order..(a + 1) * self.order].iter().map(|&x| x as usize)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `x`, falling back to its index.
    pub fn label(&self, x: Element) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None => x.to_string(),
        }
    }

    /// Index of the first element carrying `label`.
    pub fn element_by_label(&self, label: &str) -> Option<Element> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Full axiom check: Latin square, identity at `0`, inverses and every
    /// associativity triple.
    pub fn validate(&self) -> Result<()> {
        check_latin(self.order, &self.table)?;
        if find_identity(self.order, &self.table) != Some(0) {
            return Err(Error::NotAGroup(AxiomViolation::NoIdentity));
        }
        for i in 0..self.order {
            let j = self.inv(i);
            if self.mul(i, j) != 0 || self.mul(j, i) != 0 {
                return Err(Error::NotAGroup(AxiomViolation::LatinRow { row: i }));
            }
        }
        check_associative(self.order, &self.table)
    }

    /// The table as nested rows.
    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        (0..self.order).map(|a| self.row(a).collect()).collect()
    }
}

fn check_latin(order: usize, flat: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; order];
    for i in 0..order {
        for j in 0..order {
            let x = flat[i * order + j] as usize;
            if seen[x] == i {
                return Err(Error::NotAGroup(AxiomViolation::LatinRow { row: i }));
            }
            seen[x] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..order {
        for i in 0..order {
            let x = flat[i * order + j] as usize;
            if seen[x] == j {
                return Err(Error::NotAGroup(AxiomViolation::LatinColumn { column: j }));
            }
            seen[x] = j;
        }
    }
    Ok(())
}

fn find_identity(order: usize, flat: &[u32]) -> Option<usize> {
    (0..order).find(|&e| (0..order).all(|j| flat[e * order + j] as usize == j && flat[j * order + e] as usize == j))
}

/// Reports the first failing triple in lexicographic `(a, b, c)` order.
fn check_associative(order: usize, flat: &[u32]) -> Result<()> {
    let m = |a: usize, b: usize| flat[a * order + b] as usize;
    for a in 0..order {
        for b in 0..order {
            let ab = m(a, b);
            for c in 0..order {
                if m(ab, c) != m(a, m(b, c)) {
                    return Err(Error::NotAGroup(AxiomViolation::Associativity { a, b, c }));
                }
            }
        }
    }
    Ok(())
}

fn swap_to_front(order: usize, flat: &[u32], identity: usize) -> Vec<u32> {
    let sigma = |x: usize| {
        if x == identity {
            0
        } else if x == 0 {
            identity
        } else {
            x
        }
    };
    let mut out = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            out[sigma(a) * order + sigma(b)] = sigma(flat[a * order + b] as usize) as u32;
        }
    }
    out
}

pub(crate) struct Closure<T> {
    pub elements: Vec<T>,
    pub group: FiniteGroup,
    /// `(parent, generator)` through which each non-identity element was
    /// first reached; entry `0` is unused.
    pub words: Vec<(usize, usize)>,
}

/// Breadth-first closure of `gens` under `mul`.
///
/// Element `j` reached as `parent·g` gives `i·j = (i·parent)·g`, so the full
/// table is filled from the right-multiplication-by-generator table without
/// any further products or lookups.
pub(crate) fn close<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> Result<Closure<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let k = gens.len();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
    let mut words = vec![(0, 0)];
    let mut right: Vec<u32> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        for (j, g) in gens.iter().enumerate() {
            let y = mul(&elements[head], g);
            let next = elements.len();
            let idx = *index.entry(y.clone()).or_insert(next);
            if idx == next {
                if next >= cap {
                    return Err(Error::ClosureTooLarge { cap });
                }
                elements.push(y);
                words.push((head, j));
            }
            right.push(idx as u32);
        }
        head += 1;
    }
    let order = elements.len();
    let mut table = vec![0u32; order * order];
    for i in 0..order {
        table[i * order] = i as u32;
    }
    for j in 1..order {
        let (parent, g) = words[j];
        for i in 0..order {
            let ip = table[i * order + parent] as usize;
            table[i * order + j] = right[ip * k + g];
        }
    }
    Ok(Closure { elements, group: FiniteGroup::from_trusted_table(order, table), words })
}

/// Renders the word for each element as generator names with runs collapsed
/// to powers, e.g. `a^2b`.
pub(crate) fn word_labels(words: &[(usize, usize)], names: &[&str]) -> Vec<String> {
    let mut seqs: Vec<Vec<usize>> = vec![Vec::new(); words.len()];
    for j in 1..words.len() {
        let (parent, g) = words[j];
        let mut w = seqs[parent].clone();
        w.push(g);
        seqs[j] = w;
    }
    seqs.iter()
        .map(|w| {
            if w.is_empty() {
                return "e".to_string();
            }
            let mut out = String::new();
            let mut i = 0;
            while i < w.len() {
                let mut run = 1;
                while i + run < w.len() && w[i + run] == w[i] {
                    run += 1;
                }
                out.push_str(names[w[i]]);
                if run > 1 {
                    let _ = write!(out, "^{run}");
                }
                i += run;
            }
            out
        })
        .collect()
}

fn perm_closure(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Closure<Vec<u32>>> {
    for (index, g) in generators.iter().enumerate() {
        if !is_permutation(g, degree) {
            return Err(Error::NotAPermutation { index, degree });
        }
    }
    let gens: Vec<Vec<u32>> = generators.iter().map(|g| g.iter().map(|&x| x as u32).collect()).collect();
    let identity: Vec<u32> = (0..degree as u32).collect();
    close(identity, &gens, |x, y| x.iter().map(|&p| y[p as usize]).collect(), cap)
}

fn matrix_closure(p: u64, generators: &[[u64; 4]], cap: usize) -> Result<Closure<[u64; 4]>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let gens: Vec<[u64; 4]> = generators.iter().map(|m| m.map(|x| x % p)).collect();
    for (index, m) in gens.iter().enumerate() {
        let det = (m[0] * m[3] + p * p - (m[1] * m[2]) % p) % p;
        if det != 1 % p {
            return Err(Error::NotUnimodular { index, det, p });
        }
    }
    close([1, 0, 0, 1], &gens, |x, y| mat_mul(x, y, p), cap)
}

fn is_permutation(g: &[usize], degree: usize) -> bool {
    if g.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    g.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true))
}

fn cycle_notation(p: &[u32]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            let _ = write!(out, "{x}");
            first = false;
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn mat_mul(x: &[u64; 4], y: &[u64; 4], p: u64) -> [u64; 4] {
    [
        (x[0] * y[0] + x[1] * y[2]) % p,
        (x[0] * y[1] + x[1] * y[3]) % p,
        (x[2] * y[0] + x[3] * y[2]) % p,
        (x[2] * y[1] + x[3] * y[3]) % p,
    ]
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_rows(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    fn d8() -> FiniteGroup {
        // a = (0 1 2 3), b = (1 3)
        FiniteGroup::from_perm_generators(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).unwrap()
    }

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_mult_table(1, &[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g, FiniteGroup::trivial());
    }

    #[test]
    fn c2_table() {
        let g = FiniteGroup::from_mult_table(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        assert_eq!(g.element_order(1), 2);
    }

    /// Oracle: the first non-associative triple of a table, by direct scan.
    fn first_bad_triple(rows: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
        let n = rows.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn non_associative_loop_is_rejected_with_triple() {
        // Swap the intercalate at rows/cols {1, 4} of the C6 table: still a
        // Latin square with identity 0, but no longer associative.
        let mut rows = cyclic_rows(6);
        rows[1][1] = 5;
        rows[1][4] = 2;
        rows[4][1] = 2;
        rows[4][4] = 5;
        assert_eq!(first_bad_triple(&rows), Some((1, 1, 2)));
        let err = FiniteGroup::from_mult_table(6, &rows).unwrap_err();
        assert_eq!(err, Error::NotAGroup(AxiomViolation::Associativity { a: 1, b: 1, c: 2 }));
        assert!(err.to_string().contains("(1, 1, 2)"));
    }

    #[test]
    fn latin_and_shape_violations() {
        let err = FiniteGroup::from_mult_table(2, &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NotAGroup(AxiomViolation::LatinRow { row: 1 }));
        let err = FiniteGroup::from_mult_table(2, &[vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(AxiomViolation::Shape(_))));
        let err = FiniteGroup::from_mult_table(2, &[vec![0, 2], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(AxiomViolation::Shape(_))));
        // Latin square without identity.
        let rows = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        let err = FiniteGroup::from_mult_table(3, &rows).unwrap_err();
        assert_eq!(err, Error::NotAGroup(AxiomViolation::NoIdentity));
    }

    #[test]
    fn identity_is_moved_to_index_zero() {
        // C3 with the identity stored at index 2.
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_mult_table(3, &rows).unwrap();
        g.validate().unwrap();
        assert_eq!(g.row(0).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn perm_closures() {
        let s3 = FiniteGroup::from_perm_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(s3.order(), 6);
        s3.validate().unwrap();
        let c4 = FiniteGroup::from_perm_generators(4, &[vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        let t = FiniteGroup::from_perm_generators(1, &[]).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.label(0), "()");
    }

    #[test]
    fn perm_errors_and_cap() {
        let err = FiniteGroup::from_perm_generators(3, &[vec![0, 0, 1]]).unwrap_err();
        assert_eq!(err, Error::NotAPermutation { index: 0, degree: 3 });
        let err =
            FiniteGroup::from_perm_generators_capped(5, &[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 100).unwrap_err();
        assert_eq!(err, Error::ClosureTooLarge { cap: 100 });
    }

    #[test]
    fn matrix_closures() {
        let sl25 = FiniteGroup::from_matrix_generators(5, &[[1, 1, 0, 1], [1, 0, 1, 1]]).unwrap();
        assert_eq!(sl25.order(), 120);
        let c2 = FiniteGroup::from_matrix_generators(2, &[[1, 1, 0, 1]]).unwrap();
        assert_eq!(c2.order(), 2);
        let sl23 = FiniteGroup::from_matrix_generators(3, &[[1, 1, 0, 1], [1, 0, 1, 1]]).unwrap();
        assert_eq!(sl23.order(), 24);
        sl23.validate().unwrap();
        assert_eq!(
            FiniteGroup::from_matrix_generators(5, &[[2, 0, 0, 1]]).unwrap_err(),
            Error::NotUnimodular { index: 0, det: 2, p: 5 }
        );
        assert_eq!(FiniteGroup::from_matrix_generators(4, &[]).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn products() {
        let c2 = FiniteGroup::from_mult_table(2, &cyclic_rows(2)).unwrap();
        let v4 = FiniteGroup::direct_product(&c2, &c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert!((1..4).all(|x| v4.element_order(x) == 2));

        let d8c2 = FiniteGroup::direct_product(&d8(), &c2).unwrap();
        d8c2.validate().unwrap();
        assert!(!d8c2.is_abelian());
        // Brute-force center.
        let center = d8c2.elements().filter(|&z| d8c2.elements().all(|g| d8c2.commutes(z, g))).count();
        assert_eq!(center, 4);

        let t = FiniteGroup::trivial();
        let same = FiniteGroup::direct_product(&t, &d8()).unwrap();
        assert_eq!(same.to_rows(), d8().to_rows());
    }

    #[test]
    fn commutators_in_d8() {
        let g = d8();
        let (a, b) = (1, 2);
        assert_eq!(g.element_order(a), 4);
        let a2 = g.mul(a, a);
        // a⁻¹b⁻¹ab evaluated step by step in the table.
        let direct = g.mul(g.mul(g.mul(g.inv(a), g.inv(b)), a), b);
        assert_eq!(direct, a2);
        assert_eq!(g.commutator(&[a, b]).unwrap(), a2);
        assert_eq!(g.commutator(&[a, b, a]).unwrap(), IDENTITY);
        assert_eq!(g.commutator(&[IDENTITY, b]).unwrap(), IDENTITY);
        assert_eq!(g.commutator(&[b]).unwrap(), b);
        assert_eq!(g.commutator(&[]).unwrap_err(), Error::EmptyInput);
        assert_eq!(g.commutator(&[9]).unwrap_err(), Error::InvalidElement { index: 9, order: 8 });
        assert_eq!(g.element_order(a2), 2);
        assert_eq!(g.element_order(IDENTITY), 1);
    }

    #[test]
    fn cyclic_generator_order() {
        let c6 = FiniteGroup::from_mult_table(6, &cyclic_rows(6)).unwrap();
        assert_eq!(c6.element_order(1), 6);
    }

    #[test]
    fn word_labels_collapse_runs() {
        let words = vec![(0, 0), (0, 0), (1, 0), (2, 1)];
        assert_eq!(word_labels(&words, &["a", "b"]), vec!["e", "a", "a^2", "a^2b"]);
    }
}
