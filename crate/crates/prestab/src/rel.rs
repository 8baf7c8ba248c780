//! Finite-relation algebra on indexed carriers.
//!
//! Relations are square boolean matrices stored as bit rows, subsets are
//! bitmasks, and maps are target vectors. Everything is immutable after
//! construction and cheap to clone at the sizes this crate works with.

use crate::error::{Error, Result};
use std::fmt;

const WORD_BITS: usize = 64;

/// Largest carrier the constructors accept. A relation on `n` elements
/// takes `n^2` bits, so this keeps a single value under a few megabytes.
pub const MAX_CARRIER: usize = 4096;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// An indexed finite carrier with optional display labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Carrier {
    size: usize,
    labels: Option<Vec<String>>,
}

impl Carrier {
    /// Unlabeled carrier on `{0, …, size-1}`.
    pub fn unlabeled(size: usize) -> Result<Self> {
        if size > MAX_CARRIER {
            return Err(Error::CarrierLimit {
                n: size,
                max: MAX_CARRIER,
            });
        }
        Ok(Carrier { size, labels: None })
    }

    /// Labeled carrier; labels must be pairwise distinct and match `size`.
    pub fn labeled(size: usize, labels: Vec<String>) -> Result<Self> {
        let mut carrier = Carrier::unlabeled(size)?;
        if labels.len() != size {
            return Err(Error::LabelCount {
                expected: size,
                found: labels.len(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for label in &labels {
            if !seen.insert(label) {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        carrier.labels = Some(labels);
        Ok(carrier)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label when present, else its index.
    pub fn name(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i].clone(),
            None => i.to_string(),
        }
    }
}

/// A total map between index ranges, stored as a target list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinMap {
    cod_size: usize,
    targets: Vec<usize>,
}

impl FinMap {
    /// Map sending `i` to `targets[i]`; every target must lie in `[0, cod_size)`.
    pub fn new(targets: Vec<usize>, cod_size: usize) -> Result<Self> {
        for &t in &targets {
            if t >= cod_size {
                return Err(Error::TargetRange {
                    value: t,
                    cod: cod_size,
                });
            }
        }
        Ok(FinMap { cod_size, targets })
    }

    pub fn identity(n: usize) -> Self {
        FinMap {
            cod_size: n,
            targets: (0..n).collect(),
        }
    }

    pub fn dom_size(&self) -> usize {
        self.targets.len()
    }

    pub fn cod_size(&self) -> usize {
        self.cod_size
    }

    pub fn apply(&self, i: usize) -> usize {
        self.targets[i]
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    /// Composite `self ∘ first` (apply `first`, then `self`).
    pub fn compose(&self, first: &FinMap) -> Result<FinMap> {
        if first.cod_size != self.dom_size() {
            return Err(Error::Dimension {
                left: first.cod_size,
                right: self.dom_size(),
            });
        }
        let targets = first.targets.iter().map(|&i| self.targets[i]).collect();
        FinMap::new(targets, self.cod_size)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod_size];
        for &t in &self.targets {
            if seen[t] {
                return false;
            }
            seen[t] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod_size];
        for &t in &self.targets {
            seen[t] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Preimage of a subset of the codomain.
    pub fn preimage(&self, b: &Subset) -> Result<Subset> {
        if b.size() != self.cod_size {
            return Err(Error::Dimension {
                left: b.size(),
                right: self.cod_size,
            });
        }
        let mut out = Subset::empty(self.dom_size());
        for (i, &t) in self.targets.iter().enumerate() {
            if b.contains(t) {
                out.insert(i);
            }
        }
        Ok(out)
    }

    /// Kernel pair `Eq(f)`: the relation identifying elements with equal image.
    pub fn kernel_pair(&self) -> Rel {
        let n = self.dom_size();
        let mut rel = Rel::empty(n);
        for a in 0..n {
            for b in 0..n {
                if self.targets[a] == self.targets[b] {
                    rel.set(a, b);
                }
            }
        }
        rel
    }

    /// All maps from a domain of size `dom` to a codomain of size `cod`,
    /// in lexicographic target order.
    pub fn enumerate(dom: usize, cod: usize) -> Vec<FinMap> {
        if dom == 0 {
            return vec![FinMap {
                cod_size: cod,
                targets: vec![],
            }];
        }
        if cod == 0 {
            return vec![];
        }
        let mut out = Vec::new();
        let mut targets = vec![0usize; dom];
        loop {
            out.push(FinMap {
                cod_size: cod,
                targets: targets.clone(),
            });
            // odometer increment, most significant digit first
            let mut i = dom;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                targets[i] += 1;
                if targets[i] < cod {
                    break;
                }
                targets[i] = 0;
            }
        }
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.targets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// A subset of `{0, …, size-1}` as a bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    size: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(size: usize) -> Self {
        Subset {
            size,
            words: vec![0; words_for(size)],
        }
    }

    pub fn full(size: usize) -> Self {
        let mut s = Subset::empty(size);
        for i in 0..size {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(size: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Subset::empty(size);
        for &i in indices {
            if i >= size {
                return Err(Error::TargetRange {
                    value: i,
                    cod: size,
                });
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 != 0
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.size).filter(|&i| self.contains(i)).collect()
    }

    pub fn complement(&self) -> Subset {
        let mut out = Subset::empty(self.size);
        for i in 0..self.size {
            if !self.contains(i) {
                out.insert(i);
            }
        }
        out
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.check_size(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        Ok(Subset {
            size: self.size,
            words,
        })
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.check_size(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Ok(Subset {
            size: self.size,
            words,
        })
    }

    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        self.check_size(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        Ok(Subset {
            size: self.size,
            words,
        })
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Number of members strictly below `i`: the position of `i` in the
    /// re-indexing used by restrictions.
    pub fn rank(&self, i: usize) -> usize {
        let word = i / WORD_BITS;
        let below: usize = self.words[..word]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        below + (self.words[word] & ((1u64 << (i % WORD_BITS)) - 1)).count_ones() as usize
    }

    fn check_size(&self, other: &Subset) -> Result<()> {
        if self.size != other.size {
            return Err(Error::Dimension {
                left: self.size,
                right: other.size,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().into_iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A boolean relation on `{0, …, size-1}`, stored as bit rows.
///
/// No structural constraints are imposed here; reflexivity, transitivity and
/// friends are predicates. Row `a` holds the set `{b | (a, b) ∈ r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rel {
    size: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl Rel {
    pub fn empty(size: usize) -> Self {
        let row_words = words_for(size);
        Rel {
            size,
            row_words,
            bits: vec![0; size * row_words],
        }
    }

    /// The identity relation Δ on `n` elements.
    pub fn delta(n: usize) -> Self {
        let mut rel = Rel::empty(n);
        for i in 0..n {
            rel.set(i, i);
        }
        rel
    }

    pub fn full(n: usize) -> Self {
        let mut rel = Rel::empty(n);
        for a in 0..n {
            for b in 0..n {
                rel.set(a, b);
            }
        }
        rel
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = Rel::empty(n);
        for &(a, b) in pairs {
            if a >= n {
                return Err(Error::TargetRange { value: a, cod: n });
            }
            if b >= n {
                return Err(Error::TargetRange { value: b, cod: n });
            }
            rel.set(a, b);
        }
        Ok(rel)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.row_words + b / WORD_BITS] |= 1 << (b % WORD_BITS);
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.row_words + b / WORD_BITS] >> (b % WORD_BITS) & 1 != 0
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.row_words..(a + 1) * self.row_words]
    }

    /// Whether row `a` meets the subset `s`.
    pub(crate) fn row_intersects(&self, a: usize, s: &Subset) -> bool {
        debug_assert_eq!(self.size, s.size());
        self.row(a).iter().zip(&s.words).any(|(r, m)| r & m != 0)
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in 0..self.size {
                if self.contains(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn count_pairs(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Rel) -> Result<Rel> {
        self.check_size(other)?;
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a | b)
            .collect();
        Ok(Rel { bits, ..*self })
    }

    pub fn intersection(&self, other: &Rel) -> Result<Rel> {
        self.check_size(other)?;
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & b)
            .collect();
        Ok(Rel { bits, ..*self })
    }

    pub fn difference(&self, other: &Rel) -> Result<Rel> {
        self.check_size(other)?;
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & !b)
            .collect();
        Ok(Rel { bits, ..*self })
    }

    /// The opposite relation (matrix transpose).
    pub fn opposite(&self) -> Rel {
        let mut out = Rel::empty(self.size);
        for a in 0..self.size {
            for b in 0..self.size {
                if self.contains(a, b) {
                    out.set(b, a);
                }
            }
        }
        out
    }

    pub fn is_subrelation_of(&self, other: &Rel) -> bool {
        self.size == other.size
            && self
                .bits
                .iter()
                .zip(&other.bits)
                .all(|(a, b)| a & !b == 0)
    }

    /// Smallest transitive relation containing this one.
    ///
    /// Warshall over bit rows: when entry (i, k) is set, row k is or-ed
    /// into row i.
    pub fn transitive_closure(&self) -> Rel {
        let mut out = self.clone();
        let n = out.size;
        let w = out.row_words;
        let mut scratch = vec![0u64; w];
        for k in 0..n {
            scratch.copy_from_slice(out.row(k));
            for i in 0..n {
                if out.contains(i, k) {
                    let row = &mut out.bits[i * w..(i + 1) * w];
                    for (dst, src) in row.iter_mut().zip(&scratch) {
                        *dst |= src;
                    }
                }
            }
        }
        out
    }

    /// This relation together with the diagonal.
    pub fn reflexive_closure(&self) -> Rel {
        let mut out = self.clone();
        for i in 0..out.size {
            out.set(i, i);
        }
        out
    }

    /// Smallest equivalence relation containing this one, computed as the
    /// transitive closure of `r ∪ r° ∪ Δ`.
    pub fn equivalence_closure(&self) -> Rel {
        self.union(&self.opposite())
            .expect("same carrier")
            .reflexive_closure()
            .transitive_closure()
    }

    /// Image relation along `f`: contains exactly the pairs `(f(a), f(b))`
    /// for `(a, b)` in this relation.
    pub fn image(&self, f: &FinMap) -> Result<Rel> {
        if self.size != f.dom_size() {
            return Err(Error::Dimension {
                left: self.size,
                right: f.dom_size(),
            });
        }
        let mut out = Rel::empty(f.cod_size());
        for a in 0..self.size {
            for b in 0..self.size {
                if self.contains(a, b) {
                    out.set(f.apply(a), f.apply(b));
                }
            }
        }
        Ok(out)
    }

    /// Inverse image along `f`: `(a, b)` is present iff `(f(a), f(b))` is in
    /// this relation.
    pub fn pullback(&self, f: &FinMap) -> Result<Rel> {
        if self.size != f.cod_size() {
            return Err(Error::Dimension {
                left: self.size,
                right: f.cod_size(),
            });
        }
        let mut out = Rel::empty(f.dom_size());
        for a in 0..f.dom_size() {
            for b in 0..f.dom_size() {
                if self.contains(f.apply(a), f.apply(b)) {
                    out.set(a, b);
                }
            }
        }
        Ok(out)
    }

    /// Restriction to a subset, re-indexed by increasing original index.
    pub fn restrict(&self, b: &Subset) -> Result<Rel> {
        if self.size != b.size() {
            return Err(Error::Dimension {
                left: self.size,
                right: b.size(),
            });
        }
        let members = b.indices();
        let mut out = Rel::empty(members.len());
        for (p, &i) in members.iter().enumerate() {
            for (q, &j) in members.iter().enumerate() {
                if self.contains(i, j) {
                    out.set(p, q);
                }
            }
        }
        Ok(out)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|i| self.contains(i, i))
    }

    /// First missing diagonal entry, if any.
    pub fn reflexivity_witness(&self) -> Option<usize> {
        (0..self.size).find(|&i| !self.contains(i, i))
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness().is_none()
    }

    /// First triple `(i, j, k)` with `(i, j)` and `(j, k)` present but
    /// `(i, k)` missing, if any.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.size {
            for j in 0..self.size {
                if !self.contains(i, j) {
                    continue;
                }
                for k in 0..self.size {
                    if self.contains(j, k) && !self.contains(i, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|a| (a..self.size).all(|b| self.contains(a, b) == self.contains(b, a)))
    }

    /// Antisymmetry over the diagonal: `r ∩ r° ⊆ Δ`.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.size)
            .all(|a| (0..self.size).all(|b| a == b || !(self.contains(a, b) && self.contains(b, a))))
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    /// Canonical quotient map of an equivalence relation: classes are
    /// numbered by least member, in ascending order. For a non-equivalence
    /// input this still yields a deterministic map (each element goes to the
    /// class of the least element on its row), but no quotient laws hold.
    pub fn least_member_quotient(&self) -> FinMap {
        let n = self.size;
        let mut class_of = vec![usize::MAX; n];
        let mut next = 0;
        let mut targets = Vec::with_capacity(n);
        for a in 0..n {
            let rep = (0..n).find(|&b| self.contains(a, b)).unwrap_or(a);
            if class_of[rep] == usize::MAX {
                class_of[rep] = next;
                next += 1;
            }
            targets.push(class_of[rep]);
        }
        FinMap {
            cod_size: next,
            targets,
        }
    }

    fn check_size(&self, other: &Rel) -> Result<()> {
        if self.size != other.size {
            return Err(Error::Dimension {
                left: self.size,
                right: other.size,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, b)) in self.pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({a}, {b})")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(n: usize, pairs: &[(usize, usize)]) -> Rel {
        Rel::from_pairs(n, pairs).unwrap()
    }

    /// Naive pair-chaining closure: add composites until nothing changes.
    fn naive_transitive_closure(r: &Rel) -> Rel {
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

    /// Union-find over the undirected edges of `r`, read back as a relation.
    fn union_find_closure(r: &Rel) -> Rel {
        let n = r.size();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for (a, b) in r.pairs() {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            parent[ra] = rb;
        }
        let mut out = Rel::empty(n);
        for a in 0..n {
            for b in 0..n {
                if find(&mut parent, a) == find(&mut parent, b) {
                    out.set(a, b);
                }
            }
        }
        out
    }

    fn all_rels(n: usize) -> Vec<Rel> {
        let cells = n * n;
        (0..1u32 << cells)
            .map(|mask| {
                let mut r = Rel::empty(n);
                for c in 0..cells {
                    if mask >> c & 1 != 0 {
                        r.set(c / n, c % n);
                    }
                }
                r
            })
            .collect()
    }

    #[test]
    fn delta_cases() {
        assert_eq!(Rel::delta(0), Rel::empty(0));
        assert_eq!(Rel::delta(2).pairs(), vec![(0, 0), (1, 1)]);
        assert_eq!(Rel::delta(3).pairs(), vec![(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn pointwise_ops() {
        assert_eq!(rel(2, &[(0, 1)]).opposite(), rel(2, &[(1, 0)]));
        assert_eq!(
            Rel::delta(2).union(&rel(2, &[(0, 1)])).unwrap(),
            rel(2, &[(0, 0), (1, 1), (0, 1)])
        );
        assert_eq!(
            rel(2, &[(0, 1), (1, 0)])
                .intersection(&rel(2, &[(0, 1)]))
                .unwrap(),
            rel(2, &[(0, 1)])
        );
        assert!(matches!(
            Rel::delta(2).union(&Rel::delta(3)),
            Err(Error::Dimension { left: 2, right: 3 })
        ));
    }

    #[test]
    fn transitive_closure_cases() {
        assert_eq!(
            rel(3, &[(0, 1), (1, 2)]).transitive_closure(),
            rel(3, &[(0, 1), (1, 2), (0, 2)])
        );
        assert_eq!(Rel::delta(3).transitive_closure(), Rel::delta(3));
        // frozen from the pair-chaining oracle
        let two_cycle = rel(2, &[(0, 1), (1, 0)]);
        let closed = rel(2, &[(0, 1), (1, 0), (0, 0), (1, 1)]);
        assert_eq!(naive_transitive_closure(&two_cycle), closed);
        assert_eq!(two_cycle.transitive_closure(), closed);
    }

    #[test]
    fn transitive_closure_matches_oracle_exhaustively() {
        for n in 0..=3 {
            for r in all_rels(n) {
                let fast = r.transitive_closure();
                assert_eq!(fast, naive_transitive_closure(&r), "mismatch on {r}");
                // extensive and idempotent
                assert!(r.is_subrelation_of(&fast));
                assert_eq!(fast.transitive_closure(), fast);
            }
        }
    }

    #[test]
    fn transitive_closure_is_monotone() {
        for r in all_rels(2) {
            for s in all_rels(2) {
                if r.is_subrelation_of(&s) {
                    assert!(r
                        .transitive_closure()
                        .is_subrelation_of(&s.transitive_closure()));
                }
            }
        }
    }

    #[test]
    fn equivalence_closure_cases() {
        // frozen from the union-find oracle
        let partitioned = union_find_closure(&rel(3, &[(0, 1)]));
        assert_eq!(
            partitioned,
            rel(3, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)])
        );
        assert_eq!(rel(3, &[(0, 1)]).equivalence_closure(), partitioned);
        assert_eq!(Rel::empty(2).equivalence_closure(), Rel::delta(2));
        assert_eq!(
            rel(3, &[(0, 1), (1, 2)]).equivalence_closure(),
            union_find_closure(&rel(3, &[(0, 1), (1, 2)]))
        );
        assert_eq!(rel(3, &[(0, 1), (1, 2)]).equivalence_closure(), Rel::full(3));
    }

    #[test]
    fn equivalence_closure_matches_union_find_exhaustively() {
        for n in 0..=3 {
            for r in all_rels(n) {
                assert_eq!(r.equivalence_closure(), union_find_closure(&r));
            }
        }
    }

    #[test]
    fn image_cases() {
        let f = FinMap::new(vec![0, 0, 1], 2).unwrap();
        let r = Rel::delta(3).union(&rel(3, &[(0, 1)])).unwrap();
        assert_eq!(r.image(&f).unwrap(), Rel::delta(2));

        let id = FinMap::identity(3);
        assert_eq!(r.image(&id).unwrap(), r);

        let g = FinMap::new(vec![1, 2], 3).unwrap();
        let s = Rel::delta(2).union(&rel(2, &[(0, 1)])).unwrap();
        assert_eq!(s.image(&g).unwrap(), rel(3, &[(1, 1), (2, 2), (1, 2)]));
    }

    #[test]
    fn pullback_cases() {
        let f = FinMap::new(vec![0, 0], 1).unwrap();
        assert_eq!(Rel::delta(1).pullback(&f).unwrap(), Rel::full(2));

        let r = Rel::delta(3).union(&rel(3, &[(1, 2)])).unwrap();
        assert_eq!(r.pullback(&FinMap::identity(3)).unwrap(), r);

        let g = FinMap::new(vec![1, 2], 3).unwrap();
        assert_eq!(
            r.pullback(&g).unwrap(),
            Rel::delta(2).union(&rel(2, &[(0, 1)])).unwrap()
        );
    }

    #[test]
    fn image_pullback_adjunction_bounds() {
        for dom in 0..=3usize {
            for cod in 0..=3usize {
                for f in FinMap::enumerate(dom, cod) {
                    for s in all_rels(cod) {
                        let back = s.pullback(&f).unwrap();
                        assert!(back.image(&f).unwrap().is_subrelation_of(&s));
                    }
                    if f.is_injective() {
                        for r in all_rels(dom) {
                            let forth = r.image(&f).unwrap();
                            assert!(r.is_subrelation_of(&forth.pullback(&f).unwrap()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_pair_cases() {
        let f = FinMap::new(vec![0, 0, 1], 2).unwrap();
        assert_eq!(
            f.kernel_pair(),
            rel(3, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)])
        );
        assert_eq!(FinMap::identity(3).kernel_pair(), Rel::delta(3));
        assert_eq!(FinMap::new(vec![0, 0], 1).unwrap().kernel_pair(), Rel::full(2));
    }

    #[test]
    fn kernel_pair_is_equivalence() {
        for dom in 0..=3 {
            for cod in 1..=3 {
                for f in FinMap::enumerate(dom, cod) {
                    assert!(f.kernel_pair().is_equivalence());
                }
            }
        }
    }

    #[test]
    fn restrict_cases() {
        let r = Rel::delta(3).union(&rel(3, &[(0, 1)])).unwrap();
        let b = Subset::from_indices(3, &[0, 2]).unwrap();
        assert_eq!(r.restrict(&b).unwrap(), Rel::delta(2));
        assert_eq!(r.restrict(&Subset::full(3)).unwrap(), r);
        assert_eq!(r.restrict(&Subset::empty(3)).unwrap(), Rel::empty(0));
    }

    #[test]
    fn restrict_commutes_with_lattice_ops() {
        for r in all_rels(3) {
            for s in all_rels(3) {
                for mask in 0..8u32 {
                    let b =
                        Subset::from_indices(3, &(0..3).filter(|i| mask >> i & 1 != 0).collect::<Vec<_>>())
                            .unwrap();
                    assert_eq!(
                        r.union(&s).unwrap().restrict(&b).unwrap(),
                        r.restrict(&b).unwrap().union(&s.restrict(&b).unwrap()).unwrap()
                    );
                    assert_eq!(
                        r.intersection(&s).unwrap().restrict(&b).unwrap(),
                        r.restrict(&b)
                            .unwrap()
                            .intersection(&s.restrict(&b).unwrap())
                            .unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn predicate_cases() {
        let d2 = Rel::delta(2);
        assert!(d2.is_reflexive() && d2.is_transitive() && d2.is_symmetric() && d2.is_antisymmetric());

        let arrow = Rel::delta(2).union(&rel(2, &[(0, 1)])).unwrap();
        assert!(arrow.is_reflexive() && arrow.is_transitive() && arrow.is_antisymmetric());
        assert!(!arrow.is_symmetric());

        let chain = rel(3, &[(0, 1), (1, 2)]);
        assert!(!chain.is_transitive());
        assert_eq!(chain.transitivity_witness(), Some((0, 1, 2)));
    }

    #[test]
    fn least_member_quotient_numbering() {
        let w = rel(3, &[(1, 2), (2, 1)]).equivalence_closure();
        let q = w.least_member_quotient();
        assert_eq!(q.targets(), &[0, 1, 1]);
        assert_eq!(q.cod_size(), 2);
        assert_eq!(Rel::full(2).least_member_quotient().targets(), &[0, 0]);
    }

    #[test]
    fn labels_validated() {
        assert!(Carrier::labeled(2, vec!["a".into(), "b".into()]).is_ok());
        assert!(matches!(
            Carrier::labeled(2, vec!["a".into()]),
            Err(Error::LabelCount { .. })
        ));
        assert!(matches!(
            Carrier::labeled(2, vec!["a".into(), "a".into()]),
            Err(Error::DuplicateLabel { .. })
        ));
    }

    #[test]
    fn map_enumeration_counts() {
        assert_eq!(FinMap::enumerate(0, 0).len(), 1);
        assert_eq!(FinMap::enumerate(0, 3).len(), 1);
        assert_eq!(FinMap::enumerate(2, 0).len(), 0);
        assert_eq!(FinMap::enumerate(2, 3).len(), 9);
        assert_eq!(FinMap::enumerate(3, 2).len(), 8);
    }
}
