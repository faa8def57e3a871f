//! Named groups and subgroup pairs.
//!
//! Names: `trivial`, `cyclic:<n>`, `dihedral:<2n>`, `quaternion8`,
//! `dicyclic:<4n>`, `symmetric:<n≤5>`, `alternating:<n≤5>`,
//! `elem_abelian:<p>:<k>`, `sl25`, `psl25`, `product:<name>*<name>`.
//! The same name always yields the same table.

use crate::error::{Error, Result};
use crate::group::{is_prime, FiniteGroup};
use crate::structure::{center, quotient, subgroup_generated, Subgroup};

/// Largest order the catalog builds.
pub const MAX_CATALOG_ORDER: usize = 240;

/// Names accepted by [`named_pair`].
pub const NAMED_PAIRS: [&str; 5] = ["d8-a", "d8-a2b", "d8-a2ab", "sl25-center", "psl25-trivial"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
}

impl CatalogEntry {
    fn new(name: impl Into<String>, description: impl Into<String>) -> Self {
        CatalogEntry { name: name.into(), description: description.into() }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        get(&self.name)
    }
}

/// Builds the group called `name`.
pub fn get(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownName(name.to_string());
    if let Some(rest) = name.strip_prefix("product:") {
        let (left, right) = rest.rsplit_once('*').ok_or_else(unknown)?;
        return FiniteGroup::direct_product_capped(&get(left)?, &get(right)?, MAX_CATALOG_ORDER);
    }
    let mut parts = name.split(':');
    let family = parts.next().unwrap_or_default();
    let args: Vec<usize> = parts.map(|p| p.parse().map_err(|_| unknown())).collect::<Result<_>>()?;
    match (family, args.as_slice()) {
        ("trivial", []) => Ok(FiniteGroup::trivial()),
        ("cyclic", &[n]) if n >= 1 => {
            capped(n)?;
            Ok(cyclic(n))
        }
        ("dihedral", &[m]) if m >= 2 && m % 2 == 0 => {
            capped(m)?;
            dihedral(m / 2)
        }
        ("quaternion8", []) => quaternion8(),
        ("dicyclic", &[m]) if m >= 8 && m % 4 == 0 => {
            capped(m)?;
            Ok(dicyclic(m / 4))
        }
        ("symmetric", &[n]) if (1..=5).contains(&n) => symmetric(n),
        ("alternating", &[n]) if (1..=5).contains(&n) => alternating(n),
        ("elem_abelian", &[p, k]) if is_prime(p as u64) => {
            let order = u32::try_from(k)
                .ok()
                .and_then(|k| p.checked_pow(k))
                .ok_or(Error::ClosureTooLarge { cap: MAX_CATALOG_ORDER })?;
            capped(order)?;
            Ok(elementary_abelian(p, k))
        }
        ("sl25", []) => sl25(),
        ("psl25", []) => {
            let g = sl25()?;
            Ok(quotient(&g, &center(&g))?.group().clone())
        }
        _ => Err(unknown()),
    }
}

fn capped(order: usize) -> Result<()> {
    if order > MAX_CATALOG_ORDER {
        Err(Error::ClosureTooLarge { cap: MAX_CATALOG_ORDER })
    } else {
        Ok(())
    }
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn or_identity(label: String) -> String {
    if label.is_empty() {
        "e".into()
    } else {
        label
    }
}

/// `a^k` at index `k`.
fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
    let labels = (0..n).map(|k| or_identity(power_label("a", k))).collect();
    FiniteGroup::from_trusted_table(n, table).with_labels(labels)
}

/// Symmetries of the regular `n`-gon: `a` the rotation `i ↦ i+1`, `b` the
/// reflection `i ↦ −i`. Orders 2 and 4 have no faithful polygon action and
/// use `a^k b^e` at index `k + n·e`.
fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n >= 3 {
        let a = (0..n).map(|i| (i + 1) % n).collect();
        let b = (0..n).map(|i| (n - i) % n).collect();
        return FiniteGroup::from_named_perm_generators(n, &[a, b], &["a", "b"]);
    }
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, e) = (x % n, x / n);
        for y in 0..order {
            let (j, f) = (y % n, y / n);
            let k = if e == 0 { i + j } else { i + n - j } % n;
            table.push((k + n * ((e + f) % 2)) as u32);
        }
    }
    let labels = (0..order).map(|x| or_identity(power_label("a", x % n) + &power_label("b", x / n))).collect();
    Ok(FiniteGroup::from_trusted_table(order, table).with_labels(labels))
}

/// `i = [0 1; −1 0]`, `j = [1 1; 1 −1]` over the integers mod 3.
fn quaternion8() -> Result<FiniteGroup> {
    FiniteGroup::from_named_matrix_generators(3, &[[0, 1, 2, 0], [1, 1, 1, 2]], &["i", "j"])
}

/// `⟨a, x | a^{2n} = 1, x² = aⁿ, x⁻¹ax = a⁻¹⟩` with `a^k x^e` at index
/// `k + 2n·e`.
fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n;
    let order = 2 * m;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, e) = (x % m, x / m);
        for y in 0..order {
            let (j, f) = (y % m, y / m);
            // x^e a^j = a^{±j} x^e
            let mut k = if e == 0 { i + j } else { i + m - j } % m;
            let mut t = e + f;
            if t == 2 {
                k = (k + n) % m;
                t = 0;
            }
            table.push((k + m * t) as u32);
        }
    }
    let labels = (0..order).map(|x| or_identity(power_label("a", x % m) + &power_label("x", x / m))).collect();
    FiniteGroup::from_trusted_table(order, table).with_labels(labels)
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 1 {
        return Ok(FiniteGroup::trivial());
    }
    let cycle = (0..n).map(|i| (i + 1) % n).collect();
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    FiniteGroup::from_perm_generators(n, &[cycle, swap])
}

/// Generated by the 3-cycles `(0 1 k)`.
fn alternating(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Ok(FiniteGroup::trivial());
    }
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    FiniteGroup::from_perm_generators(n, &gens)
}

/// Vectors over `F_p` with coordinate `i` the `i`-th base-`p` digit of the
/// index.
fn elementary_abelian(p: usize, k: usize) -> FiniteGroup {
    let order = p.pow(k as u32);
    let digits = |mut x: usize| {
        (0..k)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect::<Vec<_>>()
    };
    let vectors: Vec<Vec<usize>> = (0..order).map(digits).collect();
    let mut table = Vec::with_capacity(order * order);
    for x in &vectors {
        for y in &vectors {
            let sum = x.iter().zip(y).rev().fold(0, |acc, (a, b)| acc * p + (a + b) % p);
            table.push(sum as u32);
        }
    }
    let labels = vectors
        .iter()
        .map(|v| format!("({})", v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    FiniteGroup::from_trusted_table(order, table).with_labels(labels)
}

fn sl25() -> Result<FiniteGroup> {
    FiniteGroup::from_matrix_generators(5, &[[1, 1, 0, 1], [1, 0, 1, 1]])
}

/// The `(H, G)` pair called `name`; see [`NAMED_PAIRS`].
pub fn named_pair(name: &str) -> Result<(Subgroup, FiniteGroup)> {
    match name {
        "d8-a" | "d8-a2b" | "d8-a2ab" => {
            let g = get("dihedral:8")?;
            let a = g.element_by_label("a").expect("dihedral group labels a");
            let b = g.element_by_label("b").expect("dihedral group labels b");
            let a2 = g.mul(a, a);
            let gens = match name {
                "d8-a" => vec![a],
                "d8-a2b" => vec![a2, b],
                _ => vec![a2, g.mul(a, b)],
            };
            Ok((subgroup_generated(&g, &gens), g))
        }
        "sl25-center" => {
            let g = get("sl25")?;
            Ok((center(&g), g))
        }
        "psl25-trivial" => {
            let g = get("psl25")?;
            Ok((Subgroup::trivial(g.order()), g))
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Representative entries for listings.
pub fn list() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new("trivial", "trivial group"),
        CatalogEntry::new("cyclic:<n>", "cyclic group of order n"),
        CatalogEntry::new("dihedral:<2n>", "symmetries of the regular n-gon, a = rotation, b = reflection"),
        CatalogEntry::new("quaternion8", "quaternion group, matrices mod 3"),
        CatalogEntry::new("dicyclic:<4n>", "dicyclic group of order 4n"),
        CatalogEntry::new("symmetric:<n>", "symmetric group on n ≤ 5 points"),
        CatalogEntry::new("alternating:<n>", "alternating group on n ≤ 5 points"),
        CatalogEntry::new("elem_abelian:<p>:<k>", "elementary abelian group of order p^k"),
        CatalogEntry::new("sl25", "SL(2,5), order 120"),
        CatalogEntry::new("psl25", "SL(2,5) modulo its center, order 60"),
        CatalogEntry::new("product:<X>*<Y>", "direct product of two catalog groups"),
        CatalogEntry::new("dihedral:8", "D8, order 8"),
        CatalogEntry::new("symmetric:3", "S3, order 6"),
        CatalogEntry::new("alternating:5", "A5, order 60"),
    ]
}

/// The fixed family members used by sweeps, in a stable order: every
/// non-product entry of order at most `max_order`, then the products of
/// two non-trivial such entries (unordered pairs) within the bound.
pub fn sweep(max_order: usize) -> Vec<String> {
    let mut base: Vec<(String, usize)> = Vec::new();
    let mut push = |name: String, order: usize| {
        if order <= max_order {
            base.push((name, order));
        }
    };
    for n in 2..=max_order {
        push(format!("cyclic:{n}"), n);
    }
    for n in 3..=max_order / 2 {
        push(format!("dihedral:{}", 2 * n), 2 * n);
    }
    push("quaternion8".into(), 8);
    for n in 3..=max_order / 4 {
        push(format!("dicyclic:{}", 4 * n), 4 * n);
    }
    for (n, order) in [(3, 6), (4, 24), (5, 120)] {
        push(format!("symmetric:{n}"), order);
    }
    for (n, order) in [(4, 12), (5, 60)] {
        push(format!("alternating:{n}"), order);
    }
    for p in [2usize, 3, 5, 7] {
        let mut order = p * p;
        let mut k = 2;
        while order <= max_order {
            push(format!("elem_abelian:{p}:{k}"), order);
            order *= p;
            k += 1;
        }
    }
    push("sl25".into(), 120);
    push("psl25".into(), 60);
    let mut names: Vec<String> = vec!["trivial".into()];
    names.extend(base.iter().map(|(n, _)| n.clone()));
    for (i, (x, ox)) in base.iter().enumerate() {
        for (y, oy) in &base[i..] {
            if ox * oy <= max_order {
                names.push(format!("product:{x}*{y}"));
            }
        }
    }
    names
}
