//! Instance checks of the isoclinism and degree theorems.
//!
//! Every check returns a [`VerificationReport`]. Instances whose hypothesis
//! does not hold are skipped, and per-instance computational errors are
//! recorded without stopping the batch.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::catalog::{self, named_pair};
use crate::degrees::{
    commutativity_degree, degree_upper_bound, nilpotency_degree, relative_commutativity_degree,
    relative_nilpotency_degree,
};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::iso::{automorphisms_capped, DEFAULT_AUTOMORPHISM_CAP, DEFAULT_SEARCH_BUDGET};
use crate::isoclinism::{
    are_n_isoclinic_with_budget, find_witness, frames_compatible, induced_subgroup, IsoclinismFrame, IsoclinismWitness,
};
use crate::ratio::ExactRatio;
use crate::structure::{
    all_subgroups, center, gamma, hypercenter, is_normal, normal_subgroups, quotient, relative_gamma,
    subgroup_generated, Subgroup, DEFAULT_SUBGROUP_CAP,
};

/// Claim identifiers accepted by [`run_claim`].
pub const CLAIMS: [&str; 8] =
    ["theorem-a", "theorem-b", "theorem-c", "theorem-d", "theorem-e", "escalation", "bounds", "all"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIP",
            Verdict::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    claim: String,
    instances: Vec<Instance>,
    elapsed: Duration,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>) -> Self {
        VerificationReport { claim: claim.into(), instances: Vec::new(), elapsed: Duration::ZERO }
    }

    pub fn claim(&self) -> &str {
        &self.claim
    }

    pub fn instances(&self) -> &[Instance] {
        &self.instances
    }

    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }

    /// No instance failed or errored.
    pub fn overall(&self) -> bool {
        self.instances.iter().all(|i| matches!(i.verdict, Verdict::Pass | Verdict::Skipped))
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.instances.iter().filter(|i| i.verdict == verdict).count()
    }

    pub fn push(
        &mut self,
        description: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        verdict: Verdict,
    ) {
        self.instances.push(Instance {
            description: description.into(),
            expected: expected.into(),
            actual: actual.into(),
            verdict,
        });
    }

    fn push_error(&mut self, description: impl Into<String>, expected: impl Into<String>, err: &Error) {
        self.push(description, expected, err.to_string(), Verdict::Error);
    }

    /// Appends the instances of `other` and adds its elapsed time.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.instances.extend(other.instances);
        self.elapsed += other.elapsed;
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} pass, {} fail, {} skipped, {} error)",
            self.claim,
            if self.overall() { "PASS" } else { "FAIL" },
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Skipped),
            self.count(Verdict::Error),
        )
    }

    /// Human-readable table.
    pub fn render(&self) -> String {
        let mut out = self.summary();
        out.push('\n');
        for i in &self.instances {
            let _ = writeln!(out, "  {:<5} {}", i.verdict.to_string(), i.description);
            let _ = writeln!(out, "        expected: {}", i.expected);
            let _ = writeln!(out, "        actual:   {}", i.actual);
        }
        out
    }

    /// One tab-separated line per instance: claim, instance, expected,
    /// actual, verdict.
    pub fn report_lines(&self) -> String {
        let mut out = String::new();
        for i in &self.instances {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                self.claim,
                i.description.replace('\t', " "),
                i.expected.replace('\t', " "),
                i.actual.replace('\t', " "),
                i.verdict
            );
        }
        out
    }
}

/// A named `(H, G)` instance.
#[derive(Clone, Debug)]
pub struct NamedPair {
    pub name: String,
    pub h: Subgroup,
    pub g: Arc<FiniteGroup>,
}

impl NamedPair {
    pub fn new(name: impl Into<String>, h: Subgroup, g: Arc<FiniteGroup>) -> Self {
        NamedPair { name: name.into(), h, g }
    }

    /// `(G, G)` for the catalog group `name`.
    pub fn whole(name: &str) -> Result<Self> {
        let g = catalog::get(name)?;
        Ok(NamedPair { name: format!("({name}, {name})"), h: Subgroup::whole(&g), g: Arc::new(g) })
    }

    /// One of the catalog's named pairs.
    pub fn named(name: &str) -> Result<Self> {
        let (h, g) = named_pair(name)?;
        Ok(NamedPair { name: name.to_string(), h, g: Arc::new(g) })
    }
}

/// Greedy generating set: each member not yet generated, in index order.
pub fn subgroup_generators(g: &FiniteGroup, h: &Subgroup) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut current = Subgroup::trivial(g.order());
    for &x in h.members() {
        if !current.contains(x) {
            gens.push(x);
            current = subgroup_generated(g, &gens);
        }
    }
    gens
}

/// `<x, y>` in element labels, or `1` for the trivial subgroup.
pub fn describe_subgroup(g: &FiniteGroup, h: &Subgroup) -> String {
    let gens = subgroup_generators(g, h);
    if gens.is_empty() {
        return "1".into();
    }
    let labels: Vec<String> = gens.iter().map(|&x| g.label(x)).collect();
    format!("<{}> (order {})", labels.join(", "), h.order())
}

fn relative_witness(p1: &NamedPair, p2: &NamedPair, n: usize, budget: u64) -> Result<Option<IsoclinismWitness>> {
    let f1 = IsoclinismFrame::new(&p1.h, &p1.g, n)?;
    let f2 = IsoclinismFrame::new(&p2.h, &p2.g, n)?;
    find_witness(&p1.g, &f1, &p2.g, &f2, budget)
}

/// For every subgroup `H₁` of `G₁`, the subgroup induced by an
/// n-isoclinism `G₁ → G₂` is n-isoclinic to `H₁`.
pub fn verify_theorem_a(
    name1: &str,
    g1: &FiniteGroup,
    name2: &str,
    g2: &FiniteGroup,
    n: usize,
    budget: u64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-a");
    let header = format!("{name1} ~{n} {name2}");
    let witness = match are_n_isoclinic_with_budget(g1, g2, n, budget) {
        Ok(Some(w)) => w,
        Ok(None) => {
            report.push(header, "hypothesis: n-isoclinic", "no n-isoclinism", Verdict::Skipped);
            return Ok(report.timed(start));
        }
        Err(e) => {
            report.push_error(header, "hypothesis: n-isoclinic", &e);
            return Ok(report.timed(start));
        }
    };
    for h1 in all_subgroups(g1, None)? {
        let h2 = induced_subgroup(&witness, &h1);
        let description = format!("{name1} -> {name2}, n={n}, H1 = {}", describe_subgroup(g1, &h1));
        let expected = "H1 ~n H2 for the induced H2";
        match are_n_isoclinic_with_budget(&h1.to_group(g1), &h2.to_group(g2), n, budget) {
            Ok(found) => {
                let actual = format!(
                    "H2 = {}, {}",
                    describe_subgroup(g2, &h2),
                    if found.is_some() { "n-isoclinic" } else { "not n-isoclinic" }
                );
                let verdict = if found.is_some() { Verdict::Pass } else { Verdict::Fail };
                report.push(description, expected, actual, verdict);
            }
            Err(e) => report.push_error(description, expected, &e),
        }
    }
    Ok(report.timed(start))
}

/// Relative n-isoclinic pairs have equal n-th relative nilpotency degrees.
pub fn verify_theorem_b(quads: &[(NamedPair, NamedPair)], n: usize, budget: u64) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-b");
    for (p1, p2) in quads {
        let description = format!("{} ~{n} {}", p1.name, p2.name);
        let expected = "equal degrees when relative n-isoclinic";
        let outcome = relative_witness(p1, p2, n, budget).and_then(|w| {
            let Some(_) = w else {
                return Ok(None);
            };
            let d1 = relative_nilpotency_degree(&p1.h, &p1.g, n)?;
            let d2 = relative_nilpotency_degree(&p2.h, &p2.g, n)?;
            Ok(Some((d1, d2)))
        });
        match outcome {
            Ok(None) => report.push(description, expected, "not relative n-isoclinic", Verdict::Skipped),
            Ok(Some((d1, d2))) => {
                let verdict = if d1 == d2 { Verdict::Pass } else { Verdict::Fail };
                report.push(description, expected, format!("{d1} vs {d2}"), verdict);
            }
            Err(e) => report.push_error(description, expected, &e),
        }
    }
    report.timed(start)
}

/// The `theorem-b` check over every unordered pair (with repetition) of `pairs`.
/// Frames and degrees are computed once per pair. Quadruples whose frame
/// orders already rule out a witness are not reported.
pub fn verify_theorem_b_sweep(pairs: &[NamedPair], n: usize, budget: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-b");
    let mut frames = Vec::with_capacity(pairs.len());
    let mut degrees = Vec::with_capacity(pairs.len());
    for p in pairs {
        frames.push(IsoclinismFrame::new(&p.h, &p.g, n)?);
        degrees.push(relative_nilpotency_degree(&p.h, &p.g, n)?);
    }
    for i in 0..pairs.len() {
        for j in i..pairs.len() {
            if !frames_compatible(&frames[i], &frames[j]) {
                continue;
            }
            let description = format!("{} ~{n} {}", pairs[i].name, pairs[j].name);
            let expected = "equal degrees when relative n-isoclinic";
            match find_witness(&pairs[i].g, &frames[i], &pairs[j].g, &frames[j], budget) {
                Ok(None) => report.push(description, expected, "not relative n-isoclinic", Verdict::Skipped),
                Ok(Some(_)) => {
                    let (d1, d2) = (degrees[i], degrees[j]);
                    let verdict = if d1 == d2 { Verdict::Pass } else { Verdict::Fail };
                    report.push(description, expected, format!("{d1} vs {d2}"), verdict);
                }
                Err(e) => report.push_error(description, expected, &e),
            }
        }
    }
    Ok(report.timed(start))
}

fn quotient_pair(g: &FiniteGroup, h: &Subgroup, m: &Subgroup) -> Result<(Subgroup, FiniteGroup)> {
    let q = quotient(g, m)?;
    Ok((q.image_of(h), q.group().clone()))
}

/// `(H/N, G/N) ~n (H/M, G/M)` for `M = N ∩ γₙ₊₁(G)`, its special case
/// `M = 1`, and the variant with `M = N ∩ [ₙH, G]`.
pub fn verify_theorem_c(
    name: &str,
    g: &FiniteGroup,
    h: &Subgroup,
    nsub: &Subgroup,
    n: usize,
    budget: u64,
) -> Result<VerificationReport> {
    for s in [h, nsub] {
        if s.parent_order() != g.order() {
            return Err(Error::ForeignSubgroup { subgroup_parent: s.parent_order(), order: g.order() });
        }
    }
    if !is_normal(g, nsub) {
        return Err(Error::NotNormal);
    }
    if !nsub.is_subset_of(h) {
        return Err(Error::NotContained);
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-c");
    let base = format!("{name}, H = {}, N = {}, n={n}", describe_subgroup(g, h), describe_subgroup(g, nsub));
    let (hn, gn) = quotient_pair(g, h, nsub)?;
    let check = |m: &Subgroup| -> Result<bool> {
        let (hm, gm) = quotient_pair(g, h, m)?;
        let f1 = IsoclinismFrame::new(&hn, &gn, n)?;
        let f2 = IsoclinismFrame::new(&hm, &gm, n)?;
        Ok(find_witness(&gn, &f1, &gm, &f2, budget)?.is_some())
    };
    let record = |report: &mut VerificationReport, what: &str, expected: &str, outcome: Result<bool>| {
        let description = format!("{base}: {what}");
        match outcome {
            Ok(true) => report.push(description, expected, "witness found", Verdict::Pass),
            Ok(false) => report.push(description, expected, "no witness", Verdict::Fail),
            Err(e) => report.push_error(description, expected, &e),
        }
    };

    let m = nsub.intersection(&gamma(g, n + 1));
    record(&mut report, "statement form, M = N ∩ γ_{n+1}(G)", "(H/N, G/N) ~n (H/M, G/M)", check(&m));

    let special = format!("{base}: special case N ∩ γ_{{n+1}}(G) = 1");
    if m.is_trivial() {
        let outcome = (|| -> Result<bool> {
            let f1 = IsoclinismFrame::new(h, g, n)?;
            let f2 = IsoclinismFrame::new(&hn, &gn, n)?;
            Ok(find_witness(g, &f1, &gn, &f2, budget)?.is_some())
        })();
        record(&mut report, "special case N ∩ γ_{n+1}(G) = 1", "(H, G) ~n (H/N, G/N)", outcome);
    } else {
        report.push(special, "(H, G) ~n (H/N, G/N)", "N ∩ γ_{n+1}(G) is not trivial", Verdict::Skipped);
    }

    let m = nsub.intersection(&relative_gamma(h, g, n));
    if is_normal(g, &m) {
        record(&mut report, "proof form, M = N ∩ [nH, G]", "(H/N, G/N) ~n (H/M, G/M)", check(&m));
    } else {
        report.push(
            format!("{base}: proof form, M = N ∩ [nH, G]"),
            "(H/N, G/N) ~n (H/M, G/M)",
            format!("M = {} is not normal in G", describe_subgroup(g, &m)),
            Verdict::Skipped,
        );
    }
    Ok(report.timed(start))
}

/// (i) `G = HZₙ(G)` forces `d⁽ⁿ⁾(H) = d⁽ⁿ⁾(H, G) = d⁽ⁿ⁾(G)`;
/// (ii) `d⁽ⁿ⁾(H, G) = d⁽ⁿ⁾(φ(H), G)` for every automorphism `φ`.
pub fn verify_theorem_d(
    name: &str,
    g: &FiniteGroup,
    h: &Subgroup,
    n: usize,
    budget: u64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-d");
    let base = format!("{name}, H = {}, n={n}", describe_subgroup(g, h));

    let zn = hypercenter(g, n);
    let mut product = vec![false; g.order()];
    for &x in h.members() {
        for &z in zn.members() {
            product[g.mul(x, z)] = true;
        }
    }
    let description = format!("{base}: part (i)");
    let expected = "d(H) = d(H, G) = d(G) when G = HZn(G)";
    if product.iter().all(|&p| p) {
        let degrees = (|| -> Result<[ExactRatio; 3]> {
            Ok([nilpotency_degree(&h.to_group(g), n)?, relative_nilpotency_degree(h, g, n)?, nilpotency_degree(g, n)?])
        })();
        match degrees {
            Ok([a, b, c]) => {
                let verdict = if a == b && b == c { Verdict::Pass } else { Verdict::Fail };
                report.push(description, expected, format!("{a}, {b}, {c}"), verdict);
            }
            Err(e) => report.push_error(description, expected, &e),
        }
    } else {
        report.push(description, expected, "HZn(G) is a proper subset of G", Verdict::Skipped);
    }

    let description = format!("{base}: part (ii)");
    let expected = "d(phi(H), G) = d(H, G) for every automorphism phi";
    let autos = automorphisms_capped(g, DEFAULT_AUTOMORPHISM_CAP, budget)?;
    let outcome = (|| -> Result<ImageScan> {
        let degree = relative_nilpotency_degree(h, g, n)?;
        let mut seen: HashMap<Subgroup, ExactRatio> = HashMap::new();
        for phi in &autos {
            let image = phi.map_subgroup(h);
            if seen.contains_key(&image) {
                continue;
            }
            let d = relative_nilpotency_degree(&image, g, n)?;
            seen.insert(image.clone(), d);
            if d != degree {
                return Ok(ImageScan { degree, mismatch: Some((image, d)), images: seen.len() });
            }
        }
        Ok(ImageScan { degree, mismatch: None, images: seen.len() })
    })();
    match outcome {
        Ok(ImageScan { degree, mismatch: None, images }) => report.push(
            description,
            expected,
            format!("{} automorphisms, {images} distinct images, all {degree}", autos.len()),
            Verdict::Pass,
        ),
        Ok(ImageScan { degree, mismatch: Some((image, other)), .. }) => report.push(
            description,
            expected,
            format!("d(H, G) = {degree} but phi(H) = {} gives {other}", describe_subgroup(g, &image)),
            Verdict::Fail,
        ),
        Err(e) => report.push_error(description, expected, &e),
    }
    Ok(report.timed(start))
}

/// Degrees of the automorphism images of `H`, stopping at the first
/// mismatch.
struct ImageScan {
    degree: ExactRatio,
    mismatch: Option<(Subgroup, ExactRatio)>,
    images: usize,
}

/// For `H ⊇ Z(G)`: `d(H, G) = 3/4` exactly when `(H, G)` is relative
/// 1-isoclinic to `(⟨a⟩, D₈)`.
pub fn verify_theorem_e(name: &str, g: &FiniteGroup, budget: u64) -> Result<VerificationReport> {
    if g.order() > DEFAULT_SUBGROUP_CAP {
        return Err(Error::OrderCapExceeded { order: g.order(), cap: DEFAULT_SUBGROUP_CAP });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-e");
    let (ha, d8) = named_pair("d8-a")?;
    let target = IsoclinismFrame::new(&ha, &d8, 1)?;
    let three_quarters = ExactRatio::new(3, 4);
    let expected = "d(H, G) = 3/4 iff relative 1-isoclinic to d8-a";
    for h in all_subgroups(g, Some(&center(g)))? {
        let description = format!("{name}, H = {}", describe_subgroup(g, &h));
        let outcome = (|| -> Result<(ExactRatio, bool)> {
            let d = relative_commutativity_degree(&h, g)?;
            let frame = IsoclinismFrame::new(&h, g, 1)?;
            Ok((d, find_witness(g, &frame, &d8, &target, budget)?.is_some()))
        })();
        match outcome {
            Ok((d, isoclinic)) => {
                let verdict = if (d == three_quarters) == isoclinic { Verdict::Pass } else { Verdict::Fail };
                let actual = format!("d = {d}, {}", if isoclinic { "isoclinic" } else { "not isoclinic" });
                report.push(description, expected, actual, verdict);
            }
            Err(e) => report.push_error(description, expected, &e),
        }
    }
    Ok(report.timed(start))
}

/// Relative n-isoclinism implies relative (n+1)-isoclinism.
pub fn verify_escalation(quads: &[(NamedPair, NamedPair)], n: usize, budget: u64) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("escalation");
    for (p1, p2) in quads {
        let description = format!("{} ~{n} {}", p1.name, p2.name);
        let expected = format!("relative {}-isoclinic", n + 1);
        match relative_witness(p1, p2, n, budget) {
            Ok(None) => report.push(description, expected, format!("not relative {n}-isoclinic"), Verdict::Skipped),
            Ok(Some(_)) => match relative_witness(p1, p2, n + 1, budget) {
                Ok(Some(_)) => report.push(description, expected, "witness found", Verdict::Pass),
                Ok(None) => report.push(description, expected, "no witness", Verdict::Fail),
                Err(e) => report.push_error(description, expected, &e),
            },
            Err(e) => report.push_error(description, expected, &e),
        }
    }
    report.timed(start)
}

/// `d(G) ≤ 5/8` for non-abelian `G` with equality exactly when `G/Z(G)` is
/// elementary abelian of order 4.
pub fn verify_commutativity_bound(name: &str, g: &FiniteGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("bounds");
    let d = commutativity_degree(g);
    let five_eighths = ExactRatio::new(5, 8);
    if g.is_abelian() {
        report.push(format!("{name}: d(G) <= 5/8"), "non-abelian G", format!("abelian, d = {d}"), Verdict::Skipped);
        return Ok(report.timed(start));
    }
    let verdict = if d <= five_eighths { Verdict::Pass } else { Verdict::Fail };
    report.push(format!("{name}: d(G) <= 5/8"), "d(G) <= 5/8", format!("d = {d}"), verdict);
    let q = quotient(g, &center(g))?;
    let exponent = q.group().elements().map(|x| q.group().element_order(x)).max().unwrap_or(1);
    let klein = q.order() == 4 && exponent <= 2;
    let verdict = if (d == five_eighths) == klein { Verdict::Pass } else { Verdict::Fail };
    report.push(
        format!("{name}: equality case"),
        "d(G) = 5/8 iff G/Z(G) is C2 x C2",
        format!("d = {d}, |G/Z(G)| = {}, exponent {exponent}", q.order()),
        verdict,
    );
    Ok(report.timed(start))
}

/// `d(H, G) ≤ ½(1 + |Z(G) ∪ Z(H)|/|G|)` for every subgroup `H`.
pub fn verify_subgroup_bound(name: &str, g: &FiniteGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("bounds");
    for h in all_subgroups(g, None)? {
        let description = format!("{name}, H = {}: d(H, G) <= (1 + |Z(G) u Z(H)|/|G|)/2", describe_subgroup(g, &h));
        let d = relative_commutativity_degree(&h, g)?;
        let bound = degree_upper_bound(&h, g)?;
        let verdict = if d <= bound { Verdict::Pass } else { Verdict::Fail };
        report.push(description, format!("<= {bound}"), format!("d = {d}"), verdict);
    }
    Ok(report.timed(start))
}

/// Both bounds; the subgroup scan only when `scan_subgroups` is set.
pub fn verify_bounds(name: &str, g: &FiniteGroup, scan_subgroups: bool) -> Result<VerificationReport> {
    let mut report = verify_commutativity_bound(name, g)?;
    if scan_subgroups {
        report.absorb(verify_subgroup_bound(name, g)?);
    }
    Ok(report)
}

/// Knobs for the default sweeps.
#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Drops instances whose groups exceed this order; for `theorem-e` and
    /// `bounds` it also sets the sweep size.
    pub max_order: Option<usize>,
    /// Replaces each instance's level.
    pub n: Option<usize>,
    pub budget: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { max_order: None, n: None, budget: DEFAULT_SEARCH_BUDGET }
    }
}

impl SweepOptions {
    fn admits(&self, order: usize) -> bool {
        self.max_order.is_none_or(|m| order <= m)
    }

    fn level(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }
}

/// Default `theorem-e` sweep bound.
pub const THEOREM_E_MAX_ORDER: usize = 16;
/// Default bound for the `d(G) ≤ 5/8` sweep.
pub const COMMUTATIVITY_BOUND_MAX_ORDER: usize = 32;
/// Default bound for the per-subgroup bound sweep.
pub const SUBGROUP_BOUND_MAX_ORDER: usize = 16;

/// Group pairs for the `theorem-a` sweep.
pub const THEOREM_A_SWEEP: [(&str, &str, usize); 6] = [
    ("dihedral:8", "quaternion8", 1),
    ("product:dihedral:8*cyclic:2", "product:quaternion8*cyclic:2", 1),
    ("dihedral:8", "dihedral:8", 2),
    ("dihedral:16", "dicyclic:16", 1),
    ("symmetric:3", "symmetric:3", 1),
    ("cyclic:4", "elem_abelian:2:2", 1),
];

/// Pair names for the `theorem-b` and `escalation` sweeps; `whole:<name>`
/// stands for `(G, G)`.
pub const PAIR_SWEEP: [(&str, &str); 7] = [
    ("d8-a", "d8-a2b"),
    ("d8-a", "d8-a2ab"),
    ("d8-a2b", "d8-a2ab"),
    ("sl25-center", "psl25-trivial"),
    ("d8-a", "d8-a"),
    ("whole:dihedral:8", "whole:quaternion8"),
    ("whole:dihedral:8", "whole:dihedral:8"),
];

fn pair_by_name(name: &str) -> Result<NamedPair> {
    match name.strip_prefix("whole:") {
        Some(group) => NamedPair::whole(group),
        None => NamedPair::named(name),
    }
}

/// Quadruples from [`PAIR_SWEEP`] within the order filter.
pub fn pair_sweep(opts: &SweepOptions) -> Result<Vec<(NamedPair, NamedPair)>> {
    let mut quads = Vec::new();
    for (a, b) in PAIR_SWEEP {
        let (p1, p2) = (pair_by_name(a)?, pair_by_name(b)?);
        if opts.admits(p1.g.order()) && opts.admits(p2.g.order()) {
            quads.push((p1, p2));
        }
    }
    Ok(quads)
}

/// Every `(H, G)` with `G` in the catalog sweep up to `max_order`.
pub fn catalog_pairs(max_order: usize) -> Result<Vec<NamedPair>> {
    let mut pairs = Vec::new();
    for name in catalog::sweep(max_order) {
        let g = Arc::new(catalog::get(&name)?);
        for h in all_subgroups(&g, None)? {
            let label = format!("({}, {name})", describe_subgroup(&g, &h));
            pairs.push(NamedPair::new(label, h, Arc::clone(&g)));
        }
    }
    Ok(pairs)
}

struct TheoremCInstance {
    group: &'static str,
    h: fn(&FiniteGroup) -> Subgroup,
    nsub: fn(&FiniteGroup) -> Subgroup,
    n: usize,
}

/// `(i, j) ↦ i·|G₂| + j` for the catalog's direct products.
fn pair_index(g2_order: usize, i: Element, j: Element) -> Element {
    i * g2_order + j
}

fn theorem_c_sweep() -> Vec<TheoremCInstance> {
    fn a(g: &FiniteGroup) -> Subgroup {
        subgroup_generated(g, &[1])
    }
    fn a2(g: &FiniteGroup) -> Subgroup {
        subgroup_generated(g, &[g.mul(1, 1)])
    }
    fn trivial(g: &FiniteGroup) -> Subgroup {
        Subgroup::trivial(g.order())
    }
    fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup::whole(g)
    }
    // D₈ × C₂: 1 × C₂ and ⟨a⟩ × C₂.
    fn c2_factor(g: &FiniteGroup) -> Subgroup {
        subgroup_generated(g, &[pair_index(2, 0, 1)])
    }
    fn rotations_factor(g: &FiniteGroup) -> Subgroup {
        subgroup_generated(g, &[pair_index(2, 1, 0), pair_index(2, 0, 1)])
    }
    // D₈ × C₄: the diagonal ⟨(a², c²)⟩.
    fn diagonal(g: &FiniteGroup) -> Subgroup {
        subgroup_generated(g, &[pair_index(4, 3, 2)])
    }
    fn klein_normal(g: &FiniteGroup) -> Subgroup {
        normal_subgroups(g).expect("order within cap").into_iter().find(|s| s.order() == 4).expect("V4 ⊲ S4")
    }
    fn alternating(g: &FiniteGroup) -> Subgroup {
        gamma(g, 2)
    }
    vec![
        TheoremCInstance { group: "dihedral:8", h: a, nsub: trivial, n: 1 },
        TheoremCInstance { group: "dihedral:8", h: a, nsub: a2, n: 1 },
        TheoremCInstance { group: "dihedral:8", h: a, nsub: a2, n: 2 },
        TheoremCInstance { group: "dihedral:8", h: whole, nsub: a2, n: 1 },
        TheoremCInstance { group: "product:dihedral:8*cyclic:2", h: whole, nsub: c2_factor, n: 1 },
        TheoremCInstance { group: "product:dihedral:8*cyclic:2", h: rotations_factor, nsub: c2_factor, n: 1 },
        TheoremCInstance { group: "product:dihedral:8*cyclic:4", h: whole, nsub: diagonal, n: 1 },
        TheoremCInstance { group: "symmetric:4", h: alternating, nsub: klein_normal, n: 1 },
    ]
}

struct TheoremDInstance {
    group: &'static str,
    h: fn(&FiniteGroup) -> Subgroup,
    n: usize,
}

fn theorem_d_sweep() -> Vec<TheoremDInstance> {
    fn a(g: &FiniteGroup) -> Subgroup {
        subgroup_generated(g, &[1])
    }
    fn a2b(g: &FiniteGroup) -> Subgroup {
        named_pair("d8-a2b").expect("catalog pair").0.map(g.order(), |x| x)
    }
    fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup::whole(g)
    }
    fn d8_factor(g: &FiniteGroup) -> Subgroup {
        subgroup_generated(g, &[pair_index(2, 1, 0), pair_index(2, 2, 0)])
    }
    fn derived(g: &FiniteGroup) -> Subgroup {
        gamma(g, 2)
    }
    vec![
        TheoremDInstance { group: "product:dihedral:8*cyclic:2", h: d8_factor, n: 1 },
        TheoremDInstance { group: "dihedral:8", h: a2b, n: 1 },
        TheoremDInstance { group: "dihedral:8", h: a, n: 1 },
        TheoremDInstance { group: "dihedral:8", h: whole, n: 1 },
        TheoremDInstance { group: "dihedral:8", h: a, n: 2 },
        TheoremDInstance { group: "quaternion8", h: a, n: 1 },
        TheoremDInstance { group: "symmetric:3", h: derived, n: 1 },
        TheoremDInstance { group: "dihedral:16", h: a, n: 2 },
        TheoremDInstance { group: "symmetric:4", h: derived, n: 1 },
    ]
}

/// Runs a claim on its default sweep; `all` yields one report per claim.
pub fn run_claim(claim: &str, opts: &SweepOptions) -> Result<Vec<VerificationReport>> {
    let budget = opts.budget;
    let report = match claim {
        "all" => {
            let mut reports = Vec::new();
            for c in CLAIMS.iter().filter(|&&c| c != "all") {
                reports.extend(run_claim(c, opts)?);
            }
            return Ok(reports);
        }
        "theorem-a" => {
            let start = Instant::now();
            let mut report = VerificationReport::new(claim);
            for (a, b, n) in THEOREM_A_SWEEP {
                let (g1, g2) = (catalog::get(a)?, catalog::get(b)?);
                if opts.admits(g1.order()) && opts.admits(g2.order()) {
                    report.absorb(verify_theorem_a(a, &g1, b, &g2, opts.level(n), budget)?);
                }
            }
            report.timed(start)
        }
        "theorem-b" | "escalation" => {
            let start = Instant::now();
            let quads = pair_sweep(opts)?;
            let levels = opts.n.map_or(vec![1, 2], |n| vec![n]);
            let mut report = VerificationReport::new(claim);
            for n in levels {
                report.absorb(if claim == "theorem-b" {
                    verify_theorem_b(&quads, n, budget)
                } else {
                    verify_escalation(&quads, n, budget)
                });
            }
            report.timed(start)
        }
        "theorem-c" => {
            let start = Instant::now();
            let mut report = VerificationReport::new(claim);
            for inst in theorem_c_sweep() {
                let g = catalog::get(inst.group)?;
                if opts.admits(g.order()) {
                    let (h, nsub) = ((inst.h)(&g), (inst.nsub)(&g));
                    report.absorb(verify_theorem_c(inst.group, &g, &h, &nsub, opts.level(inst.n), budget)?);
                }
            }
            report.timed(start)
        }
        "theorem-d" => {
            let start = Instant::now();
            let mut report = VerificationReport::new(claim);
            for inst in theorem_d_sweep() {
                let g = catalog::get(inst.group)?;
                if opts.admits(g.order()) {
                    let h = (inst.h)(&g);
                    report.absorb(verify_theorem_d(inst.group, &g, &h, opts.level(inst.n), budget)?);
                }
            }
            report.timed(start)
        }
        "theorem-e" => {
            let start = Instant::now();
            let mut report = VerificationReport::new(claim);
            let bound = opts.max_order.unwrap_or(THEOREM_E_MAX_ORDER).min(DEFAULT_SUBGROUP_CAP);
            for name in catalog::sweep(bound) {
                report.absorb(verify_theorem_e(&name, &catalog::get(&name)?, budget)?);
            }
            report.timed(start)
        }
        "bounds" => {
            let start = Instant::now();
            let mut report = VerificationReport::new(claim);
            let bound = opts.max_order.unwrap_or(COMMUTATIVITY_BOUND_MAX_ORDER);
            let scan_bound = opts.max_order.unwrap_or(SUBGROUP_BOUND_MAX_ORDER).min(DEFAULT_SUBGROUP_CAP);
            for name in catalog::sweep(bound) {
                let g = catalog::get(&name)?;
                report.absorb(verify_bounds(&name, &g, g.order() <= scan_bound)?);
            }
            report.timed(start)
        }
        _ => return Err(Error::UnknownName(claim.to_string())),
    };
    Ok(vec![report])
}
