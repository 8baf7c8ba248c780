//! Exhaustive enumeration of small instances and the named verification
//! suites, one per categorical law, producing reports with deterministic
//! minimal witnesses.
//!
//! Suites run over every labeled preorder up to a size bound. Those that
//! depend on the quotient construction can be run against a deliberately
//! broken closure operator (see [`Mutation`]) to demonstrate that they
//! detect the damage rather than pass vacuously.

use crate::error::{Error, Result};
use crate::preord::{
    coproduct, is_monotone, torsion_sequence_with, z_cokernel_parts, z_cokernel_with, z_kernel,
    z_universal_counterexample, Morphism, Preorder, ZExactSequence, ZSide,
};
use crate::rel::{FinMap, Rel, Subset};
use crate::stab::{
    canonicalize, cokernel_counterexample, exactness_counterexample, hom_key,
    kernel_counterexample, mono_counterexample, sigma, stab_cokernel_with, stable_homs,
    PartialMorphism,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::collections::{HashMap, HashSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

/// Largest carrier for the full preorder scan (`2^(n(n-1))` candidate
/// relations are examined).
pub const MAX_ENUMERATION_SIZE: usize = 4;

/// All labeled preorders on `n` elements, in deterministic order: every
/// off-diagonal bit pattern is scanned and filtered by transitivity.
pub fn enumerate_preorders(n: usize) -> Result<Vec<Preorder>> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::EnumerationLimit {
            n,
            max: MAX_ENUMERATION_SIZE,
        });
    }
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b)
        .collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << cells.len() {
        let mut rel = Rel::delta(n);
        for (c, &(a, b)) in cells.iter().enumerate() {
            if mask >> c & 1 != 0 {
                rel.set(a, b);
            }
        }
        if rel.is_transitive() {
            out.push(Preorder::new(crate::rel::Carrier::unlabeled(n)?, rel)?);
        }
    }
    Ok(out)
}

/// All labeled preorders of size `0..=n`, shared for use as probe objects.
pub fn preorders_up_to(n: usize) -> Result<Vec<Arc<Preorder>>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate_preorders(k)?.into_iter().map(Arc::new));
    }
    Ok(out)
}

/// All monotone maps `a → b`, filtered from the full map enumeration.
pub fn enumerate_morphisms(a: &Arc<Preorder>, b: &Arc<Preorder>) -> Vec<Morphism> {
    FinMap::enumerate(a.size(), b.size())
        .into_iter()
        .filter_map(|map| Morphism::new(a.clone(), b.clone(), map).ok())
        .collect()
}

/// All partial morphisms `a → b`: every monotone map from every clopen
/// subset, in deterministic order.
pub fn enumerate_partial_morphisms(a: &Arc<Preorder>, b: &Arc<Preorder>) -> Vec<PartialMorphism> {
    let mut out = Vec::new();
    for subset in a.enumerate_clopens().expect("desk-scale objects") {
        let restricted = a.restrict_to(&subset).expect("subset fits");
        for map in FinMap::enumerate(subset.len(), b.size()) {
            if is_monotone(&restricted, b, &map) {
                out.push(
                    PartialMorphism::new(a.clone(), b.clone(), subset.clone(), map)
                        .expect("validated piecewise"),
                );
            }
        }
    }
    out
}

/// The desk-scale universe the suites quantify over.
#[derive(Debug, Clone)]
pub struct InstanceFamily {
    max_size: usize,
    preorders: Vec<Arc<Preorder>>,
}

impl InstanceFamily {
    pub fn new(max_size: usize) -> Result<Self> {
        Ok(InstanceFamily {
            max_size,
            preorders: preorders_up_to(max_size)?,
        })
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn preorders(&self) -> &[Arc<Preorder>] {
        &self.preorders
    }

    pub fn morphisms_between(&self, a: usize, b: usize) -> Vec<Morphism> {
        enumerate_morphisms(&self.preorders[a], &self.preorders[b])
    }
}

fn serialize_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

/// Outcome of one suite run. `failures` is empty exactly when the suite
/// passed; witnesses are listed in instance order, smallest first.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: u64,
    pub failures: Vec<String>,
    #[serde(rename = "elapsed_ms", serialize_with = "serialize_millis")]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "suite {}: {} over {} instances in {:?}",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances,
            self.elapsed
        )?;
        for w in &self.failures {
            writeln!(f, "  witness: {w}")?;
        }
        Ok(())
    }
}

/// A deliberately broken building block, used to show the suites are
/// sensitive to the constructions they check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Replace the transitive closure inside the Z-cokernel construction
    /// by the reflexive closure.
    ZCokernelReflexiveClosure,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub max_size: usize,
    pub mutation: Option<Mutation>,
    /// Randomized trials used by suites that sample beyond their
    /// exhaustive range.
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_size: 3,
            mutation: None,
            random_trials: 10_000,
            seed: 0x7052_3574_a815_c0de,
        }
    }
}

impl SuiteConfig {
    pub fn with_max_size(max_size: usize) -> Self {
        SuiteConfig {
            max_size,
            ..SuiteConfig::default()
        }
    }

    fn closure(&self) -> impl Fn(&Rel) -> Rel + Copy {
        let mutation = self.mutation;
        move |r: &Rel| match mutation {
            None => r.transitive_closure(),
            Some(Mutation::ZCokernelReflexiveClosure) => r.reflexive_closure(),
        }
    }
}

/// Registered suite names, in the order they are documented.
pub const SUITE_NAMES: &[&str] = &[
    "clopen_lattice",
    "decomposition",
    "coproducts",
    "clopen_complemented",
    "fibration",
    "congruence_laws",
    "coincidence",
    "canonical_forms",
    "sigma_mono",
    "sigma_coproducts",
    "kernel_preservation",
    "cokernel_characterization",
    "stab_cokernel",
    "exactness",
    "pretorsion",
];

/// Runs a registered suite with default configuration at the given size.
pub fn run_suite(name: &str, max_size: usize) -> Result<SuiteReport> {
    run_suite_with(name, &SuiteConfig::with_max_size(max_size))
}

pub fn run_suite_with(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let (instances, failures) = match name {
        "clopen_lattice" => suite_clopen_lattice(cfg)?,
        "decomposition" => suite_decomposition(cfg)?,
        "coproducts" => suite_coproducts(cfg)?,
        "clopen_complemented" => suite_clopen_complemented(cfg)?,
        "fibration" => suite_fibration(cfg)?,
        "congruence_laws" => suite_congruence_laws(cfg)?,
        "coincidence" => suite_coincidence(cfg)?,
        "canonical_forms" => suite_canonical_forms(cfg)?,
        "sigma_mono" => suite_sigma_mono(cfg)?,
        "sigma_coproducts" => suite_sigma_coproducts(cfg)?,
        "kernel_preservation" => suite_kernel_preservation(cfg)?,
        "cokernel_characterization" => suite_cokernel_characterization(cfg)?,
        "stab_cokernel" => suite_stab_cokernel(cfg)?,
        "exactness" => suite_exactness(cfg)?,
        "pretorsion" => suite_pretorsion(cfg)?,
        _ => {
            return Err(Error::UnknownSuite {
                name: name.to_string(),
            })
        }
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        instances,
        failures,
        elapsed: start.elapsed(),
    })
}

type SuiteOutcome = (u64, Vec<String>);

/// Runs a check over instances in parallel and returns the witnesses in
/// instance order, so reports do not depend on scheduling.
fn gather<T, F>(items: Vec<T>, check: F) -> Vec<String>
where
    T: Send + Sync,
    F: Fn(&T) -> Vec<String> + Send + Sync,
{
    let mut indexed: Vec<(usize, Vec<String>)> = items
        .par_iter()
        .enumerate()
        .map(|(i, item)| (i, check(item)))
        .collect();
    indexed.sort_by_key(|(i, _)| *i);
    indexed.into_iter().flat_map(|(_, ws)| ws).collect()
}

fn all_subsets(n: usize) -> Vec<Subset> {
    (0..1u64 << n)
        .map(|mask| {
            let mut s = Subset::empty(n);
            for i in 0..n {
                if mask >> i & 1 != 0 {
                    s.insert(i);
                }
            }
            s
        })
        .collect()
}

/// Pair-chaining fixpoint closure, the independent oracle for the
/// Warshall implementation and for the Z-cokernel clauses.
pub fn chain_closure(r: &Rel) -> Rel {
    let n = r.size();
    let mut out = r.clone();
    loop {
        let mut grown = false;
        for a in 0..n {
            for b in 0..n {
                if !out.contains(a, b) {
                    continue;
                }
                for c in 0..n {
                    if out.contains(b, c) && !out.contains(a, c) {
                        out.set(a, c);
                        grown = true;
                    }
                }
            }
        }
        if !grown {
            return out;
        }
    }
}

/// Least-member quotient of the equivalence relation generated by the
/// pairs of `r`, computed with union-find: the oracle for the coequalizer
/// clause of the Z-cokernel characterization.
pub fn union_find_quotient(r: &Rel) -> FinMap {
    let n = r.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        root
    }
    for (a, b) in r.pairs() {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut next = 0;
    let mut targets = Vec::with_capacity(n);
    for i in 0..n {
        let root = find(&mut parent, i);
        if class_of[root] == usize::MAX {
            class_of[root] = next;
            next += 1;
        }
        targets.push(class_of[root]);
    }
    FinMap::new(targets, next).expect("classes in range")
}

fn suite_clopen_lattice(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let mut failures = gather(objs.clone(), |a| {
        let mut ws = Vec::new();
        let n = a.size();
        let subsets = all_subsets(n);
        for b in &subsets {
            let open_b = a.is_open(b).expect("sized");
            let clopen_b = a.is_clopen(b).expect("sized");
            if clopen_b && !a.is_clopen(&b.complement()).expect("sized") {
                ws.push(format!("{a}: {b} clopen but its complement is not"));
            }
            for c in &subsets {
                let open_c = a.is_open(c).expect("sized");
                let clopen_c = a.is_clopen(c).expect("sized");
                let union = b.union(c).expect("sized");
                let inter = b.intersection(c).expect("sized");
                if open_b && open_c && !(a.is_open(&union).expect("sized") && a.is_open(&inter).expect("sized"))
                {
                    ws.push(format!("{a}: open sets {b}, {c} not closed under ∪/∩"));
                }
                if clopen_b
                    && clopen_c
                    && !(a.is_clopen(&union).expect("sized") && a.is_clopen(&inter).expect("sized"))
                {
                    ws.push(format!("{a}: clopen sets {b}, {c} not closed under ∪/∩"));
                }
                // disjoint clopens decompose their union
                if clopen_b && clopen_c && b.is_disjoint_from(c) {
                    let both = a.restrict_to(&union).expect("sized");
                    let inside_b: Vec<usize> =
                        union.indices().iter().map(|&i| b.contains(i) as usize).collect();
                    for (p, q) in both.rel().pairs() {
                        if inside_b[p] != inside_b[q] {
                            ws.push(format!(
                                "{a}: disjoint clopens {b}, {c} have a cross pair in their union"
                            ));
                        }
                    }
                }
            }
            // openness passes to sub-preorders containing the subset
            for x in &subsets {
                if !b.is_subset_of(x) {
                    continue;
                }
                let sub = a.restrict_to(x).expect("sized");
                let b_in_x = Subset::from_indices(
                    x.len(),
                    &b.indices().iter().map(|&i| x.rank(i)).collect::<Vec<_>>(),
                )
                .expect("in range");
                if open_b && !sub.is_open(&b_in_x).expect("sized") {
                    ws.push(format!("{a}: {b} open in the whole but not in {x}"));
                }
                if clopen_b && !sub.is_clopen(&b_in_x).expect("sized") {
                    ws.push(format!("{a}: {b} clopen in the whole but not in {x}"));
                }
            }
        }
        ws
    });

    // inverse images along morphisms
    let pull_size = cfg.max_size.min(3);
    let small = preorders_up_to(pull_size)?;
    let mut pairs = Vec::new();
    for x in &small {
        for a in &small {
            pairs.push((x.clone(), a.clone()));
        }
    }
    let mut morphism_count = 0u64;
    let pull_failures = gather(pairs, |(x, a)| {
        let mut ws = Vec::new();
        for f in enumerate_morphisms(x, a) {
            for b in all_subsets(a.size()) {
                let back = f.map().preimage(&b).expect("sized");
                if a.is_open(&b).expect("sized") && !x.is_open(&back).expect("sized") {
                    ws.push(format!("{f}: preimage of open {b} is not open"));
                }
                if a.is_clopen(&b).expect("sized") && !x.is_clopen(&back).expect("sized") {
                    ws.push(format!("{f}: preimage of clopen {b} is not clopen"));
                }
            }
        }
        ws
    });
    for x in &small {
        for a in &small {
            morphism_count += enumerate_morphisms(x, a).len() as u64;
        }
    }
    failures.extend(pull_failures);
    Ok((objs.len() as u64 + morphism_count, failures))
}

fn suite_decomposition(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let failures = gather(objs.clone(), |a| {
        let mut ws = Vec::new();
        let n = a.size();
        for b in all_subsets(n) {
            if !a.is_clopen(&b).expect("sized") {
                continue;
            }
            let bc = b.complement();
            let mut rebuilt = Rel::empty(n);
            let members_b = b.indices();
            for (p, q) in a.rel().restrict(&b).expect("sized").pairs() {
                rebuilt.set(members_b[p], members_b[q]);
            }
            let members_c = bc.indices();
            for (p, q) in a.rel().restrict(&bc).expect("sized").pairs() {
                rebuilt.set(members_c[p], members_c[q]);
            }
            if &rebuilt != a.rel() {
                ws.push(format!(
                    "{a}: restrictions to {b} and {bc} do not recompose the order"
                ));
            }
        }
        ws
    });
    Ok((objs.len() as u64, failures))
}

fn suite_coproducts(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let probes = objs.clone();
    let mut pairs = Vec::new();
    for a in &objs {
        for b in &objs {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let instances = pairs.len() as u64;
    let failures = gather(pairs, |(a, b)| {
        let mut ws = Vec::new();
        let (sum, ia, ib) = coproduct(a, b);
        let block_a = Subset::from_indices(sum.size(), &(0..a.size()).collect::<Vec<_>>())
            .expect("in range");
        let block_b =
            Subset::from_indices(sum.size(), &(a.size()..sum.size()).collect::<Vec<_>>())
                .expect("in range");
        if &sum.rel().restrict(&block_a).expect("sized") != a.rel()
            || &sum.rel().restrict(&block_b).expect("sized") != b.rel()
        {
            ws.push(format!(
                "{a} ∐ {b}: restriction to a summand differs from the summand order"
            ));
            return ws;
        }
        for x in &probes {
            let homs_a: HashSet<Vec<usize>> = enumerate_morphisms(a, x)
                .into_iter()
                .map(|f| f.map().targets().to_vec())
                .collect();
            let homs_b: HashSet<Vec<usize>> = enumerate_morphisms(b, x)
                .into_iter()
                .map(|f| f.map().targets().to_vec())
                .collect();
            let mut seen = HashSet::new();
            for h in enumerate_morphisms(&sum, x) {
                let via_a = h.map().compose(ia.map()).expect("sized").targets().to_vec();
                let via_b = h.map().compose(ib.map()).expect("sized").targets().to_vec();
                if !seen.insert((via_a, via_b)) {
                    ws.push(format!(
                        "{a} ∐ {b} → {x}: two maps restrict identically to the summands"
                    ));
                    return ws;
                }
            }
            if seen.len() != homs_a.len() * homs_b.len() {
                ws.push(format!(
                    "{a} ∐ {b} → {x}: {} maps from the sum but {}×{} restriction pairs",
                    seen.len(),
                    homs_a.len(),
                    homs_b.len()
                ));
                return ws;
            }
        }
        ws
    });
    Ok((instances, failures))
}

fn suite_clopen_complemented(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let failures = gather(objs.clone(), |a| {
        let mut ws = Vec::new();
        let n = a.size();
        for b in all_subsets(n) {
            let clopen = a.is_clopen(&b).expect("sized");
            // complemented in the category of preorders: the order is the
            // block-diagonal sum of its two restrictions
            let bc = b.complement();
            let members_b = b.indices();
            let members_c = bc.indices();
            let mut rebuilt = Rel::empty(n);
            for (p, q) in a.rel().restrict(&b).expect("sized").pairs() {
                rebuilt.set(members_b[p], members_b[q]);
            }
            for (p, q) in a.rel().restrict(&bc).expect("sized").pairs() {
                rebuilt.set(members_c[p], members_c[q]);
            }
            let complemented = &rebuilt == a.rel();
            if clopen != complemented {
                ws.push(format!(
                    "{a}: {b} clopen={clopen} but complemented={complemented}"
                ));
            }
        }
        ws
    });
    Ok((objs.len() as u64, failures))
}

fn suite_fibration(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let failures = gather(objs.clone(), |a| {
        let mut ws = Vec::new();
        let parts = a.clopen_components();
        for b in all_subsets(a.size()) {
            let clopen = a.is_clopen(&b).expect("sized");
            let fibration = a.is_fibration_pair(&b).expect("sized");
            let union = parts.is_union_of_blocks(&b);
            if clopen != fibration || clopen != union {
                ws.push(format!(
                    "{a}: {b} clopen={clopen}, fibration pair={fibration}, union of blocks={union}"
                ));
            }
        }
        ws
    });
    Ok((objs.len() as u64, failures))
}

/// Congruent-by-construction variant of `f`: values change only on
/// trivially-mapped components, which may also be dropped, and fresh
/// components may be added with constant maps.
fn perturb_congruent(f: &PartialMorphism, rng: &mut ChaCha8Rng) -> PartialMorphism {
    let dom = f.dom().clone();
    let cod = f.cod().clone();
    let parts = dom.clopen_components();
    let mut subset = Subset::empty(dom.size());
    let mut values: Vec<Option<usize>> = vec![None; dom.size()];
    for block in parts.blocks() {
        if block.is_subset_of(f.domain_subset()) {
            if f.trivial_on(block) {
                match rng.gen_range(0..3u8) {
                    0 => {} // drop the component
                    1 => {
                        subset = subset.union(block).expect("sized");
                        for i in block.indices() {
                            values[i] = f.value_at(i);
                        }
                    }
                    _ => {
                        let constant = rng.gen_range(0..cod.size());
                        subset = subset.union(block).expect("sized");
                        for i in block.indices() {
                            values[i] = Some(constant);
                        }
                    }
                }
            } else {
                subset = subset.union(block).expect("sized");
                for i in block.indices() {
                    values[i] = f.value_at(i);
                }
            }
        } else if cod.size() > 0 && rng.gen_bool(0.5) {
            let constant = rng.gen_range(0..cod.size());
            subset = subset.union(block).expect("sized");
            for i in block.indices() {
                values[i] = Some(constant);
            }
        }
    }
    let targets: Vec<usize> = subset
        .indices()
        .into_iter()
        .map(|i| values[i].expect("assigned"))
        .collect();
    PartialMorphism::new(
        dom,
        cod,
        subset,
        FinMap::new(targets, f.cod().size()).expect("in range"),
    )
    .expect("constant pieces are monotone and blocks are clopen")
}

fn suite_congruence_laws(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut failures = Vec::new();
    let mut instances = 0u64;

    // exhaustive part
    let exhaustive_size = cfg.max_size.min(2);
    let objs = preorders_up_to(exhaustive_size)?;
    for a in &objs {
        for b in &objs {
            let homs = enumerate_partial_morphisms(a, b);
            for f in &homs {
                if f.congruent(f).expect("parallel").is_none() {
                    failures.push(format!("{f}: not congruent to itself"));
                }
            }
            for f in &homs {
                for g in &homs {
                    instances += 1;
                    let fg = f.congruent(g).expect("parallel").is_some();
                    let gf = g.congruent(f).expect("parallel").is_some();
                    if fg != gf {
                        failures.push(format!("{f} vs {g}: congruence is not symmetric"));
                    }
                    let searched = f.congruent_by_search(g).expect("parallel").is_some();
                    if fg != searched {
                        failures.push(format!(
                            "{f} vs {g}: componentwise decision {fg} but witness search {searched}"
                        ));
                    }
                    if !fg {
                        continue;
                    }
                    for h in &homs {
                        if g.congruent(h).expect("parallel").is_some()
                            && f.congruent(h).expect("parallel").is_none()
                        {
                            failures.push(format!(
                                "{f} ~ {g} ~ {h}: congruence is not transitive"
                            ));
                        }
                    }
                }
            }
            // compatibility on both sides
            for c in &objs {
                let post = enumerate_partial_morphisms(b, c);
                let pre = enumerate_partial_morphisms(c, a);
                for f in &homs {
                    for g in &homs {
                        if f.congruent(g).expect("parallel").is_none() {
                            continue;
                        }
                        for p in &post {
                            let pf = p.compose(f).expect("composable");
                            let pg = p.compose(g).expect("composable");
                            if pf.congruent(&pg).expect("parallel").is_none() {
                                failures.push(format!(
                                    "post-composition with {p} separates {f} ~ {g}"
                                ));
                            }
                        }
                        for e in &pre {
                            let fe = f.compose(e).expect("composable");
                            let ge = g.compose(e).expect("composable");
                            if fe.congruent(&ge).expect("parallel").is_none() {
                                failures.push(format!(
                                    "pre-composition with {e} separates {f} ~ {g}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }

    // randomized part at size 3
    if cfg.max_size >= 3 {
        let objs = preorders_up_to(3)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut hom_cache: HashMap<(usize, usize), Vec<PartialMorphism>> = HashMap::new();
        let homs_for = |i: usize,
                        j: usize,
                        objs: &[Arc<Preorder>],
                        cache: &mut HashMap<(usize, usize), Vec<PartialMorphism>>|
         -> Vec<PartialMorphism> {
            cache
                .entry((i, j))
                .or_insert_with(|| enumerate_partial_morphisms(&objs[i], &objs[j]))
                .clone()
        };
        for _ in 0..cfg.random_trials {
            instances += 1;
            let ia = rng.gen_range(0..objs.len());
            let ib = rng.gen_range(0..objs.len());
            let ic = rng.gen_range(0..objs.len());
            let homs_ab = homs_for(ia, ib, &objs, &mut hom_cache);
            let f1 = homs_ab[rng.gen_range(0..homs_ab.len())].clone();
            let f2 = perturb_congruent(&f1, &mut rng);
            let f3 = perturb_congruent(&f2, &mut rng);
            if f1.congruent(&f2).expect("parallel").is_none()
                || f2.congruent(&f1).expect("parallel").is_none()
            {
                failures.push(format!("perturbation of {f1} is not congruent to it"));
                continue;
            }
            if f1.congruent_by_search(&f2).expect("parallel").is_none() {
                failures.push(format!(
                    "componentwise congruence of {f1} not confirmed by witness search"
                ));
            }
            if f1.congruent(&f3).expect("parallel").is_none() {
                failures.push(format!("congruence not transitive at {f1}"));
            }
            let homs_bc = homs_for(ib, ic, &objs, &mut hom_cache);
            let g = &homs_bc[rng.gen_range(0..homs_bc.len())];
            let gf1 = g.compose(&f1).expect("composable");
            let gf2 = g.compose(&f2).expect("composable");
            if gf1.congruent(&gf2).expect("parallel").is_none() {
                failures.push(format!("post-composition with {g} separates {f1} ~ {f2}"));
            }
            let homs_ca = homs_for(ic, ia, &objs, &mut hom_cache);
            let e = &homs_ca[rng.gen_range(0..homs_ca.len())];
            let f1e = f1.compose(e).expect("composable");
            let f2e = f2.compose(e).expect("composable");
            if f1e.congruent(&f2e).expect("parallel").is_none() {
                failures.push(format!("pre-composition with {e} separates {f1} ~ {f2}"));
            }
        }
    }

    Ok((instances, failures))
}

fn suite_coincidence(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let mut pairs = Vec::new();
    for a in &objs {
        for b in &objs {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let counted = std::sync::atomic::AtomicU64::new(0);
    let failures = gather(pairs, |(a, b)| {
        let mut ws = Vec::new();
        let homs = enumerate_morphisms(a, b);
        for f in &homs {
            for g in &homs {
                counted.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let collapsed = sigma(f) == sigma(g);
                let related = crate::stab::ff_related(f, g).expect("parallel");
                if collapsed != related {
                    ws.push(format!(
                        "{f} vs {g}: equal classes = {collapsed} but stably related = {related}"
                    ));
                }
            }
        }
        ws
    });
    Ok((counted.into_inner(), failures))
}

fn suite_canonical_forms(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let mut pairs = Vec::new();
    for a in &objs {
        for b in &objs {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let counted = std::sync::atomic::AtomicU64::new(0);
    let failures = gather(pairs, |(a, b)| {
        let mut ws = Vec::new();
        let homs = enumerate_partial_morphisms(a, b);
        let canons: Vec<_> = homs.iter().map(canonicalize).collect();
        for (i, p1) in homs.iter().enumerate() {
            for (j, p2) in homs.iter().enumerate() {
                counted.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let equal = canons[i] == canons[j];
                let witnessed = p1.congruent_by_search(p2).expect("parallel").is_some();
                if equal != witnessed {
                    ws.push(format!(
                        "{p1} vs {p2}: canonical forms equal = {equal} but witness found = {witnessed}"
                    ));
                }
                let decided = p1.congruent(p2).expect("parallel").is_some();
                if decided != witnessed {
                    ws.push(format!(
                        "{p1} vs {p2}: componentwise decision {decided} disagrees with search {witnessed}"
                    ));
                }
            }
        }
        ws
    });
    Ok((counted.into_inner(), failures))
}

fn suite_sigma_mono(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let probes = objs.clone();
    let mut monos = Vec::new();
    for a in &objs {
        for b in &objs {
            for f in enumerate_morphisms(a, b) {
                if f.map().is_injective() {
                    monos.push(f);
                }
            }
        }
    }
    let instances = monos.len() as u64;
    let failures = gather(monos, |f| {
        match mono_counterexample(&sigma(f), &probes) {
            Some(w) => vec![format!("{f}: image is not a monomorphism: {w}")],
            None => vec![],
        }
    });
    Ok((instances, failures))
}

fn suite_sigma_coproducts(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let probes = objs.clone();
    let mut pairs = Vec::new();
    for a in &objs {
        for b in &objs {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let instances = pairs.len() as u64;
    let failures = gather(pairs, |(a, b)| {
        let mut ws = Vec::new();
        let (sum, ia, ib) = coproduct(a, b);
        let sia = sigma(&ia);
        let sib = sigma(&ib);
        for x in &probes {
            let homs_a = stable_homs(a, x);
            let homs_b = stable_homs(b, x);
            let mut seen = HashSet::new();
            let homs_sum = stable_homs(&sum, x);
            for h in &homs_sum {
                let via_a = h.compose(&sia).expect("composable");
                let via_b = h.compose(&sib).expect("composable");
                if !seen.insert((hom_key(&via_a), hom_key(&via_b))) {
                    ws.push(format!(
                        "{a} ∐ {b} → {x}: two stable maps restrict identically to the summands"
                    ));
                    return ws;
                }
            }
            if homs_sum.len() != homs_a.len() * homs_b.len() {
                ws.push(format!(
                    "{a} ∐ {b} → {x}: {} stable maps from the sum but {}×{} pairs",
                    homs_sum.len(),
                    homs_a.len(),
                    homs_b.len()
                ));
                return ws;
            }
        }
        ws
    });
    Ok((instances, failures))
}

fn suite_kernel_preservation(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let probes = objs.clone();
    let mut morphisms = Vec::new();
    for a in &objs {
        for b in &objs {
            morphisms.extend(enumerate_morphisms(a, b));
        }
    }
    let instances = morphisms.len() as u64;
    let failures = gather(morphisms, |f| {
        let k = sigma(&z_kernel(f));
        match kernel_counterexample(&k, &sigma(f), &probes) {
            Some(w) => vec![format!("{f}: image of the Z-kernel is not a kernel: {w}")],
            None => vec![],
        }
    });
    Ok((instances, failures))
}

fn suite_cokernel_characterization(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let probes = objs.clone();
    let mut morphisms = Vec::new();
    for a in &objs {
        for b in &objs {
            morphisms.extend(enumerate_morphisms(a, b));
        }
    }
    let instances = morphisms.len() as u64;
    let closure = cfg.closure();
    let failures = gather(morphisms, |f| {
        let mut ws = Vec::new();
        let (q_map, tau) = z_cokernel_parts(f, &closure);

        // (a) the quotient map is the coequalizer of the two images of the
        // order, recomputed through union-find
        let fr = f.dom().rel().image(f.map()).expect("sized");
        let oracle_q = union_find_quotient(&fr);
        if q_map != oracle_q {
            ws.push(format!(
                "{f}: quotient map {q_map} differs from the coequalizer {oracle_q}"
            ));
            return ws;
        }
        // (b) the closure of σ ∪ f(ρ)°, recomputed by pair chaining
        let u = f
            .cod()
            .rel()
            .union(&fr.opposite())
            .expect("same carrier");
        let ubar = chain_closure(&u);
        // (c) the quotient order is the image of that closure
        let expected_tau = ubar.image(&q_map).expect("sized");
        if tau != expected_tau {
            ws.push(format!(
                "{f}: quotient order {tau} differs from the image of the closure {expected_tau}"
            ));
            return ws;
        }
        match z_cokernel_with(f, &closure) {
            Err(e) => ws.push(format!("{f}: {e}")),
            Ok(q) => {
                if !q.compose(f).expect("composable").is_trivial() {
                    ws.push(format!("{f}: composite with its cokernel is not trivial"));
                } else if let Some(w) =
                    z_universal_counterexample(&q, f, ZSide::Cokernel, &probes)
                {
                    ws.push(format!("{f}: cokernel universal property fails: {w}"));
                }
            }
        }
        ws
    });
    Ok((instances, failures))
}

fn suite_stab_cokernel(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let probes = objs.clone();
    let mut stables = Vec::new();
    for a in &objs {
        for b in &objs {
            stables.extend(stable_homs(a, b));
        }
    }
    let instances = stables.len() as u64;
    let closure = cfg.closure();
    let failures = gather(stables, |s| {
        let mut ws = Vec::new();
        match stab_cokernel_with(s, &closure) {
            Err(e) => ws.push(format!("{s}: {e}")),
            Ok(c) => {
                if !c.compose(s).expect("composable").is_zero() {
                    ws.push(format!("{s}: composite with its cokernel is not zero"));
                } else if let Some(w) = cokernel_counterexample(&c, s, &probes) {
                    ws.push(format!("{s}: cokernel property fails: {w}"));
                }
            }
        }
        ws
    });
    Ok((instances, failures))
}

fn suite_exactness(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let probes = objs.clone();
    let closure = cfg.closure();

    let mut sequences: Vec<(String, std::result::Result<ZExactSequence, String>)> = Vec::new();
    for a in &objs {
        sequences.push((
            format!("torsion sequence of {a}"),
            torsion_sequence_with(a, &closure),
        ));
    }
    // the sequence induced by the Z-cokernel of an arbitrary morphism
    let mut seen: HashSet<(Preorder, FinMap, Preorder)> = HashSet::new();
    for a in &objs {
        for b in &objs {
            for f in enumerate_morphisms(a, b) {
                match z_cokernel_with(&f, &closure) {
                    Err(e) => sequences.push((
                        format!("cokernel sequence of {f}"),
                        Err(format!("cokernel construction failed: {e}")),
                    )),
                    Ok(q) => {
                        let key = (
                            q.dom().as_ref().clone(),
                            q.map().clone(),
                            q.cod().as_ref().clone(),
                        );
                        if seen.insert(key) {
                            let k = z_kernel(&q);
                            sequences.push((
                                format!("cokernel sequence of {f}"),
                                ZExactSequence::new(k, q).map_err(|e| e.to_string()),
                            ));
                        }
                    }
                }
            }
        }
    }
    let instances = sequences.len() as u64;
    let failures = gather(sequences, |(label, seq)| match seq {
        Err(e) => vec![format!("{label}: {e}")],
        Ok(seq) => match exactness_counterexample(seq, &probes) {
            Some(w) => vec![format!("{label}: {w}")],
            None => vec![],
        },
    });
    Ok((instances, failures))
}

fn suite_pretorsion(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let objs = preorders_up_to(cfg.max_size)?;
    let probes = objs.clone();
    let closure = cfg.closure();

    let mut hom_instances = 0u64;
    let mut pairs = Vec::new();
    for t in &objs {
        if !t.classify().is_equivalence_object {
            continue;
        }
        for f in &objs {
            if !f.classify().is_partial_order_object {
                continue;
            }
            pairs.push((t.clone(), f.clone()));
        }
    }
    for (t, f) in &pairs {
        hom_instances += enumerate_morphisms(t, f).len() as u64;
    }
    let mut failures = gather(pairs, |(t, f)| {
        enumerate_morphisms(t, f)
            .into_iter()
            .filter(|m| !m.is_trivial())
            .map(|m| format!("{m}: equivalence → partial order is not trivial"))
            .collect()
    });

    let torsion_failures = gather(objs.clone(), |a| {
        let mut ws = Vec::new();
        match torsion_sequence_with(a, &closure) {
            Err(e) => ws.push(format!("torsion sequence of {a}: {e}")),
            Ok(seq) => {
                if !seq.kernel_part().dom().rel().is_equivalence() {
                    ws.push(format!("{a}: torsion part is not an equivalence relation"));
                }
                if !seq.quotient_part().cod().rel().is_antisymmetric() {
                    ws.push(format!("{a}: torsion-free part is not a partial order"));
                }
                if !seq
                    .quotient_part()
                    .compose(seq.kernel_part())
                    .expect("composable")
                    .is_trivial()
                {
                    ws.push(format!("{a}: torsion sequence composite is not trivial"));
                }
                if let Some(w) = z_universal_counterexample(
                    seq.kernel_part(),
                    seq.quotient_part(),
                    ZSide::Kernel,
                    &probes,
                ) {
                    ws.push(format!("{a}: kernel part is not the Z-kernel: {w}"));
                }
                if let Some(w) = z_universal_counterexample(
                    seq.quotient_part(),
                    seq.kernel_part(),
                    ZSide::Cokernel,
                    &probes,
                ) {
                    ws.push(format!("{a}: quotient part is not the Z-cokernel: {w}"));
                }
            }
        }
        ws
    });
    failures.extend(torsion_failures);
    Ok((hom_instances + objs.len() as u64, failures))
}
