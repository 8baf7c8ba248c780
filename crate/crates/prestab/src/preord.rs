//! Finite preorders and monotone maps, the ideal of trivial morphisms, and
//! the constructions built on it: Z-kernels, Z-cokernels, coproducts, the
//! clopen subobject calculus, and the canonical torsion sequence.

use crate::error::{Error, Result};
use crate::rel::{Carrier, FinMap, Rel, Subset};
use std::fmt;
use std::sync::Arc;

/// Default cap on the number of clopen blocks for subset enumeration
/// (`2^blocks` subsets are produced).
pub const DEFAULT_CLOPEN_CAP: usize = 20;

/// A finite preorder: a carrier together with a reflexive transitive
/// relation on it. Both invariants are checked at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    carrier: Carrier,
    rel: Rel,
}

impl Preorder {
    pub fn new(carrier: Carrier, rel: Rel) -> Result<Self> {
        if carrier.size() != rel.size() {
            return Err(Error::Dimension {
                left: carrier.size(),
                right: rel.size(),
            });
        }
        if let Some(i) = rel.reflexivity_witness() {
            return Err(Error::NotReflexive { i });
        }
        if let Some((i, j, k)) = rel.transitivity_witness() {
            return Err(Error::NotTransitive { i, j, k });
        }
        Ok(Preorder { carrier, rel })
    }

    /// The discrete preorder Δn.
    pub fn discrete(n: usize) -> Result<Self> {
        Preorder::new(Carrier::unlabeled(n)?, Rel::delta(n))
    }

    /// The indiscrete preorder (everything related to everything).
    pub fn indiscrete(n: usize) -> Result<Self> {
        Preorder::new(Carrier::unlabeled(n)?, Rel::full(n))
    }

    /// The preorder on `n` elements generated by the given pairs: the
    /// reflexive-transitive closure of the listed arrows.
    pub fn generated(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let rel = Rel::from_pairs(n, pairs)?
            .reflexive_closure()
            .transitive_closure();
        Preorder::new(Carrier::unlabeled(n)?, rel)
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn rel(&self) -> &Rel {
        &self.rel
    }

    /// The equivalence relation `ρ ∩ ρ°`.
    pub fn symmetrization(&self) -> Rel {
        self.rel
            .intersection(&self.rel.opposite())
            .expect("same carrier")
    }

    pub fn classify(&self) -> Classification {
        let is_equivalence_object = self.rel.is_symmetric();
        let is_partial_order_object = self.rel.is_antisymmetric();
        Classification {
            is_equivalence_object,
            is_partial_order_object,
            is_discrete: is_equivalence_object && is_partial_order_object,
        }
    }

    pub fn is_discrete(&self) -> bool {
        self.classify().is_discrete
    }

    /// The sub-preorder on a subset, re-indexed by increasing original index.
    pub fn restrict_to(&self, b: &Subset) -> Result<Preorder> {
        let rel = self.rel.restrict(b)?;
        let carrier = match self.carrier.labels() {
            Some(labels) => Carrier::labeled(
                rel.size(),
                b.indices().iter().map(|&i| labels[i].clone()).collect(),
            )?,
            None => Carrier::unlabeled(rel.size())?,
        };
        Preorder::new(carrier, rel)
    }

    /// Whether `b` is open: no order pair enters `b` from its complement,
    /// i.e. `(B^c × B) ∩ ρ = ∅`.
    pub fn is_open(&self, b: &Subset) -> Result<bool> {
        self.check_subset(b)?;
        for a in 0..self.size() {
            if !b.contains(a) && self.rel.row_intersects(a, b) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether both `b` and its complement are open.
    pub fn is_clopen(&self, b: &Subset) -> Result<bool> {
        Ok(self.is_open(b)? && self.is_open(&b.complement())?)
    }

    /// Whether the inclusion of `b` is both a discrete fibration and a
    /// discrete opfibration, checked element-wise on the two pullback
    /// squares. Agrees with [`is_clopen`](Self::is_clopen) — the suites
    /// verify the agreement rather than assume it.
    pub fn is_fibration_pair(&self, b: &Subset) -> Result<bool> {
        self.check_subset(b)?;
        let n = self.size();
        // opfibration: a pair starting in b must stay in b
        for a in 0..n {
            if !b.contains(a) {
                continue;
            }
            for c in 0..n {
                if self.rel.contains(a, c) && !b.contains(c) {
                    return Ok(false);
                }
            }
        }
        // fibration: a pair ending in b must start in b
        for c in 0..n {
            if !b.contains(c) {
                continue;
            }
            for a in 0..n {
                if self.rel.contains(a, c) && !b.contains(a) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The finest clopen decomposition: blocks are the weakly connected
    /// components of the order relation, listed by least member.
    pub fn clopen_components(&self) -> ClopenPartition {
        let n = self.size();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for (a, b) in self.rel.pairs() {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut block_index = vec![usize::MAX; n];
        let mut blocks: Vec<Subset> = Vec::new();
        for i in 0..n {
            let root = find(&mut parent, i);
            if block_index[root] == usize::MAX {
                block_index[root] = blocks.len();
                blocks.push(Subset::empty(n));
            }
            blocks[block_index[root]].insert(i);
        }
        ClopenPartition {
            size: n,
            blocks,
            block_of: (0..n).map(|i| block_index[find(&mut parent, i)]).collect(),
        }
    }

    /// All clopen subsets, as unions of component blocks in ascending
    /// block-mask order. Errors when there are more than
    /// [`DEFAULT_CLOPEN_CAP`] blocks.
    pub fn enumerate_clopens(&self) -> Result<Vec<Subset>> {
        self.enumerate_clopens_with_cap(DEFAULT_CLOPEN_CAP)
    }

    pub fn enumerate_clopens_with_cap(&self, cap: usize) -> Result<Vec<Subset>> {
        let parts = self.clopen_components();
        let k = parts.blocks().len();
        if k > cap {
            return Err(Error::ClopenCap { blocks: k, cap });
        }
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0..1u64 << k {
            let mut s = Subset::empty(self.size());
            for (b, block) in parts.blocks().iter().enumerate() {
                if mask >> b & 1 != 0 {
                    s = s.union(block).expect("same carrier");
                }
            }
            out.push(s);
        }
        Ok(out)
    }

    fn check_subset(&self, b: &Subset) -> Result<()> {
        if b.size() != self.size() {
            return Err(Error::Dimension {
                left: self.size(),
                right: b.size(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strict: Vec<_> = self
            .rel
            .pairs()
            .into_iter()
            .filter(|&(a, b)| a != b)
            .collect();
        if strict.is_empty() {
            return write!(f, "Δ{}", self.size());
        }
        write!(f, "({}; ", self.size())?;
        for (k, (a, b)) in strict.into_iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}→{b}")?;
        }
        write!(f, ")")
    }
}

/// classify() result: where an object sits in the pretorsion theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_equivalence_object: bool,
    pub is_partial_order_object: bool,
    pub is_discrete: bool,
}

/// The finest decomposition of a preorder into clopen blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClopenPartition {
    size: usize,
    blocks: Vec<Subset>,
    block_of: Vec<usize>,
}

impl ClopenPartition {
    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing element `i`.
    pub fn block_index(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// Whether `s` is a union of blocks (equivalently, clopen).
    pub fn is_union_of_blocks(&self, s: &Subset) -> bool {
        if s.size() != self.size {
            return false;
        }
        self.blocks
            .iter()
            .all(|b| b.is_subset_of(s) || b.is_disjoint_from(s))
    }
}

/// A monotone map between preorders. Monotonicity is checked at
/// construction, so invalid morphisms are unrepresentable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    dom: Arc<Preorder>,
    cod: Arc<Preorder>,
    map: FinMap,
}

/// First order pair whose image is not an order pair, if any.
pub fn monotonicity_witness(dom: &Preorder, cod: &Preorder, map: &FinMap) -> Option<(usize, usize)> {
    for (i, j) in dom.rel().pairs() {
        if !cod.rel().contains(map.apply(i), map.apply(j)) {
            return Some((i, j));
        }
    }
    None
}

pub fn is_monotone(dom: &Preorder, cod: &Preorder, map: &FinMap) -> bool {
    monotonicity_witness(dom, cod, map).is_none()
}

impl Morphism {
    pub fn new(dom: Arc<Preorder>, cod: Arc<Preorder>, map: FinMap) -> Result<Self> {
        if map.dom_size() != dom.size() {
            return Err(Error::Dimension {
                left: map.dom_size(),
                right: dom.size(),
            });
        }
        if map.cod_size() != cod.size() {
            return Err(Error::Dimension {
                left: map.cod_size(),
                right: cod.size(),
            });
        }
        if let Some((i, j)) = monotonicity_witness(&dom, &cod, &map) {
            return Err(Error::NotMonotone {
                i,
                j,
                fi: map.apply(i),
                fj: map.apply(j),
            });
        }
        Ok(Morphism { dom, cod, map })
    }

    pub fn identity(a: &Arc<Preorder>) -> Self {
        Morphism {
            dom: a.clone(),
            cod: a.clone(),
            map: FinMap::identity(a.size()),
        }
    }

    pub fn dom(&self) -> &Arc<Preorder> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Preorder> {
        &self.cod
    }

    pub fn map(&self) -> &FinMap {
        &self.map
    }

    /// Composite `self ∘ first`.
    pub fn compose(&self, first: &Morphism) -> Result<Morphism> {
        if first.cod != self.dom {
            return Err(Error::ObjectMismatch {
                context: format!(
                    "cannot compose: intermediate objects {} and {} differ",
                    first.cod, self.dom
                ),
            });
        }
        Ok(Morphism {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            map: self.map.compose(&first.map).expect("sizes agree"),
        })
    }

    /// Whether this morphism factors through a discrete object,
    /// equivalently whether `ρ ⊆ Eq(f)`.
    pub fn is_trivial(&self) -> bool {
        map_is_trivial(&self.dom, &self.map)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} → {}", self.map, self.dom, self.cod)
    }
}

pub(crate) fn map_is_trivial(dom: &Preorder, map: &FinMap) -> bool {
    for (a, b) in dom.rel().pairs() {
        if map.apply(a) != map.apply(b) {
            return false;
        }
    }
    true
}

/// The Z-kernel of `f`: the identity-carrier inclusion
/// `(A, Eq(f) ∩ ρ) → (A, ρ)`.
pub fn z_kernel(f: &Morphism) -> Morphism {
    let kernel_rel = f
        .map()
        .kernel_pair()
        .intersection(f.dom().rel())
        .expect("same carrier");
    let kernel_obj = Preorder::new(f.dom().carrier().clone(), kernel_rel)
        .expect("intersection of preorders is a preorder");
    Morphism::new(
        Arc::new(kernel_obj),
        f.dom().clone(),
        FinMap::identity(f.dom().size()),
    )
    .expect("inclusion of a smaller order is monotone")
}

/// Quotient map and quotient order of the Z-cokernel, computed with the
/// given closure operator. The real construction passes the transitive
/// closure; the verification suites also drive this with a broken closure
/// to demonstrate that they detect the damage.
pub(crate) fn z_cokernel_parts(f: &Morphism, closure: &dyn Fn(&Rel) -> Rel) -> (FinMap, Rel) {
    let fr = f.dom().rel().image(f.map()).expect("sizes agree");
    let generators = fr
        .union(&fr.opposite())
        .expect("same carrier")
        .reflexive_closure();
    let w = closure(&generators);
    let q = w.least_member_quotient();
    let u = f.cod().rel().union(&fr.opposite()).expect("same carrier");
    let tau = closure(&u).image(&q).expect("sizes agree");
    (q, tau)
}

pub(crate) fn z_cokernel_with(
    f: &Morphism,
    closure: &dyn Fn(&Rel) -> Rel,
) -> std::result::Result<Morphism, String> {
    let (q, tau) = z_cokernel_parts(f, closure);
    let carrier = Carrier::unlabeled(q.cod_size()).map_err(|e| e.to_string())?;
    let quotient = Preorder::new(carrier, tau)
        .map_err(|e| format!("quotient order is not a preorder: {e}"))?;
    Morphism::new(f.cod().clone(), Arc::new(quotient), q)
        .map_err(|e| format!("quotient map is not a morphism: {e}"))
}

/// The Z-cokernel of `f`: the canonical quotient of the codomain by the
/// equivalence closure of `f(ρ)`, carrying the image of the transitive
/// closure of `σ ∪ f(ρ)°`. Classes are numbered by least member.
pub fn z_cokernel(f: &Morphism) -> Morphism {
    z_cokernel_with(f, &|r| r.transitive_closure())
        .expect("the transitive closure always yields a valid quotient")
}

/// Which universal property `verify_z_universal` checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZSide {
    Kernel,
    Cokernel,
}

/// Brute-force check of the Z-kernel / Z-cokernel universal property
/// against a family of probe objects. All raw maps are enumerated and
/// filtered to monotone ones; with probes covering every preorder up to a
/// size bound the check is exhaustive at that scale.
pub fn verify_z_universal(
    candidate: &Morphism,
    f: &Morphism,
    side: ZSide,
    probes: &[Arc<Preorder>],
) -> bool {
    z_universal_counterexample(candidate, f, side, probes).is_none()
}

/// Like [`verify_z_universal`], but reports the first failure.
pub fn z_universal_counterexample(
    candidate: &Morphism,
    f: &Morphism,
    side: ZSide,
    probes: &[Arc<Preorder>],
) -> Option<String> {
    match side {
        ZSide::Kernel => {
            assert_eq!(
                candidate.cod(),
                f.dom(),
                "kernel candidate must land in the domain of f"
            );
            if !map_is_trivial(candidate.dom(), &f.map().compose(candidate.map()).expect("sizes")) {
                return Some("composite f ∘ candidate is not trivial".to_string());
            }
            for probe in probes {
                for lambda in FinMap::enumerate(probe.size(), f.dom().size()) {
                    if !is_monotone(probe, f.dom(), &lambda) {
                        continue;
                    }
                    if !map_is_trivial(probe, &f.map().compose(&lambda).expect("sizes")) {
                        continue;
                    }
                    let factorizations = FinMap::enumerate(probe.size(), candidate.dom().size())
                        .into_iter()
                        .filter(|u| {
                            is_monotone(probe, candidate.dom(), u)
                                && candidate.map().compose(u).expect("sizes") == lambda
                        })
                        .count();
                    if factorizations != 1 {
                        return Some(format!(
                            "probe {probe}, map {lambda}: {factorizations} factorizations through the candidate kernel"
                        ));
                    }
                }
            }
            None
        }
        ZSide::Cokernel => {
            assert_eq!(
                candidate.dom(),
                f.cod(),
                "cokernel candidate must start at the codomain of f"
            );
            if !map_is_trivial(f.dom(), &candidate.map().compose(f.map()).expect("sizes")) {
                return Some("composite candidate ∘ f is not trivial".to_string());
            }
            for probe in probes {
                for p in FinMap::enumerate(f.cod().size(), probe.size()) {
                    if !is_monotone(f.cod(), probe, &p) {
                        continue;
                    }
                    if !map_is_trivial(f.dom(), &p.compose(f.map()).expect("sizes")) {
                        continue;
                    }
                    let factorizations = FinMap::enumerate(candidate.cod().size(), probe.size())
                        .into_iter()
                        .filter(|m| {
                            is_monotone(candidate.cod(), probe, m)
                                && m.compose(candidate.map()).expect("sizes") == p
                        })
                        .count();
                    if factorizations != 1 {
                        return Some(format!(
                            "probe {probe}, map {p}: {factorizations} factorizations through the candidate cokernel"
                        ));
                    }
                }
            }
            None
        }
    }
}

/// Componentwise coproduct `(A ∐ B, ρ ∐ σ)` with its two coprojections.
/// Elements of `a` come first.
pub fn coproduct(a: &Arc<Preorder>, b: &Arc<Preorder>) -> (Arc<Preorder>, Morphism, Morphism) {
    let n = a.size();
    let m = b.size();
    let mut rel = Rel::empty(n + m);
    for (i, j) in a.rel().pairs() {
        rel.set(i, j);
    }
    for (i, j) in b.rel().pairs() {
        rel.set(n + i, n + j);
    }
    let sum = Arc::new(
        Preorder::new(Carrier::unlabeled(n + m).expect("within carrier limit"), rel)
            .expect("block-diagonal union of preorders is a preorder"),
    );
    let left = Morphism::new(
        a.clone(),
        sum.clone(),
        FinMap::new((0..n).collect(), n + m).expect("in range"),
    )
    .expect("coprojection is monotone");
    let right = Morphism::new(
        b.clone(),
        sum.clone(),
        FinMap::new((n..n + m).collect(), n + m).expect("in range"),
    )
    .expect("coprojection is monotone");
    (sum, left, right)
}

/// The preorder `ρ_f` induced by an endofunction: `(x, y)` is related iff
/// iterating `f` from `y` reaches `x`.
pub fn from_endofunction(f: &FinMap) -> Result<Preorder> {
    if f.dom_size() != f.cod_size() {
        return Err(Error::Dimension {
            left: f.dom_size(),
            right: f.cod_size(),
        });
    }
    let n = f.dom_size();
    let mut rel = Rel::empty(n);
    for y in 0..n {
        let mut x = y;
        for _ in 0..=n {
            rel.set(x, y);
            x = f.apply(x);
        }
    }
    Preorder::new(Carrier::unlabeled(n)?, rel)
}

/// A composable pair forming a short Z-exact sequence: the first arrow is
/// meant to be the Z-kernel of the second and the second the Z-cokernel of
/// the first. The constructor checks composability; the verification
/// suites check the two universal properties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZExactSequence {
    kernel_part: Morphism,
    quotient_part: Morphism,
}

impl ZExactSequence {
    pub fn new(kernel_part: Morphism, quotient_part: Morphism) -> Result<Self> {
        if kernel_part.cod() != quotient_part.dom() {
            return Err(Error::ObjectMismatch {
                context: format!(
                    "kernel part ends at {} but quotient part starts at {}",
                    kernel_part.cod(),
                    quotient_part.dom()
                ),
            });
        }
        Ok(ZExactSequence {
            kernel_part,
            quotient_part,
        })
    }

    pub fn kernel_part(&self) -> &Morphism {
        &self.kernel_part
    }

    pub fn quotient_part(&self) -> &Morphism {
        &self.quotient_part
    }

    /// Both universal properties, relative to the given probes.
    pub fn verify(&self, probes: &[Arc<Preorder>]) -> bool {
        verify_z_universal(&self.kernel_part, &self.quotient_part, ZSide::Kernel, probes)
            && verify_z_universal(&self.quotient_part, &self.kernel_part, ZSide::Cokernel, probes)
    }
}

pub(crate) fn torsion_sequence_with(
    a: &Arc<Preorder>,
    closure: &dyn Fn(&Rel) -> Rel,
) -> std::result::Result<ZExactSequence, String> {
    let kernel_obj = Preorder::new(a.carrier().clone(), a.symmetrization())
        .expect("the symmetrization is a preorder");
    let kernel_part = Morphism::new(Arc::new(kernel_obj), a.clone(), FinMap::identity(a.size()))
        .expect("inclusion of a smaller order is monotone");
    let quotient_part = z_cokernel_with(&kernel_part, closure)?;
    ZExactSequence::new(kernel_part, quotient_part).map_err(|e| e.to_string())
}

/// The canonical short Z-exact sequence of a preorder:
/// `(A, ρ ∩ ρ°) → (A, ρ) → (A/∼, π(ρ))` with an equivalence relation on
/// the left and a partial order on the right.
pub fn torsion_sequence(a: &Arc<Preorder>) -> ZExactSequence {
    torsion_sequence_with(a, &|r| r.transitive_closure())
        .expect("the transitive closure always yields a valid quotient")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(p: Preorder) -> Arc<Preorder> {
        Arc::new(p)
    }

    fn gen(n: usize, pairs: &[(usize, usize)]) -> Arc<Preorder> {
        arc(Preorder::generated(n, pairs).unwrap())
    }

    fn morphism(dom: &Arc<Preorder>, cod: &Arc<Preorder>, targets: Vec<usize>) -> Morphism {
        Morphism::new(
            dom.clone(),
            cod.clone(),
            FinMap::new(targets, cod.size()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_invalid_relations() {
        let not_reflexive = Rel::from_pairs(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            Preorder::new(Carrier::unlabeled(2).unwrap(), not_reflexive),
            Err(Error::NotReflexive { i: 0 })
        ));
        let not_transitive = Rel::from_pairs(3, &[(0, 1), (1, 2)])
            .unwrap()
            .reflexive_closure();
        assert!(matches!(
            Preorder::new(Carrier::unlabeled(3).unwrap(), not_transitive),
            Err(Error::NotTransitive { i: 0, j: 1, k: 2 })
        ));
    }

    #[test]
    fn morphism_construction_rejects_non_monotone() {
        let arrow = gen(2, &[(0, 1)]);
        let err = Morphism::new(
            arrow.clone(),
            arc(Preorder::discrete(2).unwrap()),
            FinMap::new(vec![0, 1], 2).unwrap(),
        );
        assert!(matches!(err, Err(Error::NotMonotone { i: 0, j: 1, .. })));
    }

    #[test]
    fn triviality_cases() {
        let arrow = gen(2, &[(0, 1)]);
        let discrete2 = arc(Preorder::discrete(2).unwrap());
        let point = arc(Preorder::discrete(1).unwrap());

        // discrete domain: always trivial
        assert!(morphism(&discrete2, &arrow, vec![0, 1]).is_trivial());
        // identity on a non-discrete object is not
        assert!(!Morphism::identity(&arrow).is_trivial());
        // constant to the point is
        assert!(morphism(&arrow, &point, vec![0, 0]).is_trivial());
        // empty domain: vacuously trivial
        let empty = arc(Preorder::discrete(0).unwrap());
        assert!(morphism(&empty, &arrow, vec![]).is_trivial());
    }

    #[test]
    fn z_kernel_cases() {
        let dom = gen(3, &[(0, 1)]);
        let cod = gen(2, &[(0, 1)]);
        let f = morphism(&dom, &cod, vec![0, 1, 1]);
        let k = z_kernel(&f);
        assert_eq!(k.dom().rel(), &Rel::delta(3));
        assert_eq!(k.map(), &FinMap::identity(3));
        assert_eq!(k.cod(), &dom);

        // trivial f keeps the domain unchanged
        let point = arc(Preorder::discrete(1).unwrap());
        let trivial = morphism(&dom, &point, vec![0, 0, 0]);
        assert_eq!(z_kernel(&trivial).dom(), &dom);

        // terminal map: Eq(f) is everything
        let terminal = morphism(&cod, &point, vec![0, 0]);
        assert_eq!(z_kernel(&terminal).dom(), &cod);
    }

    #[test]
    fn z_cokernel_cases() {
        let arrow = gen(2, &[(0, 1)]);
        let q = z_cokernel(&Morphism::identity(&arrow));
        assert_eq!(q.map().targets(), &[0, 0]);
        assert_eq!(q.cod().rel(), &Rel::delta(1));

        let point = arc(Preorder::discrete(1).unwrap());
        let hit_zero = morphism(&point, &arrow, vec![0]);
        let q = z_cokernel(&hit_zero);
        assert_eq!(q.map().targets(), &[0, 1]);
        assert_eq!(q.cod(), &arrow);

        let chain3 = gen(3, &[(0, 1), (1, 2)]);
        let f = morphism(&arrow, &chain3, vec![1, 2]);
        let q = z_cokernel(&f);
        assert_eq!(q.map().targets(), &[0, 1, 1]);
        assert_eq!(q.cod().rel(), gen(2, &[(0, 1)]).rel());
    }

    #[test]
    fn z_universal_rejects_wrong_cokernel() {
        let arrow = gen(2, &[(0, 1)]);
        let f = Morphism::identity(&arrow);
        let probes = vec![gen(2, &[(0, 1)]), arc(Preorder::discrete(1).unwrap())];
        // the identity on the codomain fails triviality of q ∘ f
        assert!(!verify_z_universal(
            &Morphism::identity(&arrow),
            &f,
            ZSide::Cokernel,
            &probes
        ));
        assert!(verify_z_universal(&z_cokernel(&f), &f, ZSide::Cokernel, &probes));
        assert!(verify_z_universal(&z_kernel(&f), &f, ZSide::Kernel, &probes));
    }

    #[test]
    fn coproduct_cases() {
        let point = arc(Preorder::discrete(1).unwrap());
        let (sum, left, right) = coproduct(&point, &point);
        assert_eq!(sum.rel(), &Rel::delta(2));
        assert_eq!(left.map().targets(), &[0]);
        assert_eq!(right.map().targets(), &[1]);

        let arrow = gen(2, &[(0, 1)]);
        let (sum, _, _) = coproduct(&arrow, &point);
        assert_eq!(sum.rel(), gen(3, &[(0, 1)]).rel());

        let empty = arc(Preorder::discrete(0).unwrap());
        let (sum, _, right) = coproduct(&empty, &arrow);
        assert_eq!(sum.as_ref(), arrow.as_ref());
        assert_eq!(right.map().targets(), &[0, 1]);
    }

    #[test]
    fn open_and_clopen_cases() {
        let a = gen(3, &[(0, 1)]);
        let b0 = Subset::from_indices(3, &[0]).unwrap();
        assert!(a.is_open(&b0).unwrap());
        assert!(!a.is_clopen(&b0).unwrap());

        let b01 = Subset::from_indices(3, &[0, 1]).unwrap();
        assert!(a.is_clopen(&b01).unwrap());

        assert!(a.is_clopen(&Subset::empty(3)).unwrap());
        assert!(a.is_clopen(&Subset::full(3)).unwrap());
    }

    #[test]
    fn fibration_pair_cases() {
        let a = gen(3, &[(0, 1)]);
        assert!(a
            .is_fibration_pair(&Subset::from_indices(3, &[0, 1]).unwrap())
            .unwrap());
        assert!(!a
            .is_fibration_pair(&Subset::from_indices(3, &[1]).unwrap())
            .unwrap());
        assert!(a.is_fibration_pair(&Subset::full(3)).unwrap());
    }

    #[test]
    fn component_cases() {
        let a = gen(3, &[(0, 1)]);
        let parts = a.clopen_components();
        assert_eq!(
            parts.blocks(),
            &[
                Subset::from_indices(3, &[0, 1]).unwrap(),
                Subset::from_indices(3, &[2]).unwrap()
            ]
        );

        let d4 = Preorder::discrete(4).unwrap();
        assert_eq!(d4.clopen_components().len(), 4);

        let ind3 = Preorder::indiscrete(3).unwrap();
        assert_eq!(ind3.clopen_components().blocks(), &[Subset::full(3)]);
    }

    #[test]
    fn clopen_enumeration_cases() {
        let a = gen(3, &[(0, 1)]);
        let clopens = a.enumerate_clopens().unwrap();
        assert_eq!(
            clopens,
            vec![
                Subset::empty(3),
                Subset::from_indices(3, &[0, 1]).unwrap(),
                Subset::from_indices(3, &[2]).unwrap(),
                Subset::full(3),
            ]
        );

        let d2 = Preorder::discrete(2).unwrap();
        assert_eq!(
            d2.enumerate_clopens().unwrap(),
            vec![
                Subset::empty(2),
                Subset::from_indices(2, &[0]).unwrap(),
                Subset::from_indices(2, &[1]).unwrap(),
                Subset::full(2),
            ]
        );

        let ind2 = Preorder::indiscrete(2).unwrap();
        assert_eq!(
            ind2.enumerate_clopens().unwrap(),
            vec![Subset::empty(2), Subset::full(2)]
        );

        let wide = Preorder::discrete(DEFAULT_CLOPEN_CAP + 1).unwrap();
        assert!(matches!(
            wide.enumerate_clopens(),
            Err(Error::ClopenCap { blocks: 21, cap: 20 })
        ));
    }

    #[test]
    fn symmetrization_cases() {
        let arrow = gen(2, &[(0, 1)]);
        assert_eq!(arrow.symmetrization(), Rel::delta(2));
        let ind2 = Preorder::indiscrete(2).unwrap();
        assert_eq!(ind2.symmetrization(), Rel::full(2));
        let d3 = Preorder::discrete(3).unwrap();
        assert_eq!(d3.symmetrization(), Rel::delta(3));
    }

    #[test]
    fn torsion_sequence_cases() {
        let a = gen(3, &[(0, 1), (1, 0), (1, 2)]);
        let seq = torsion_sequence(&a);
        assert_eq!(seq.kernel_part().dom().rel(), gen(3, &[(0, 1), (1, 0)]).rel());
        assert!(seq.kernel_part().dom().rel().is_equivalence());
        assert_eq!(seq.quotient_part().map().targets(), &[0, 0, 1]);
        assert_eq!(seq.quotient_part().cod().rel(), gen(2, &[(0, 1)]).rel());
        assert!(seq.quotient_part().cod().rel().is_antisymmetric());

        let d2 = arc(Preorder::discrete(2).unwrap());
        let seq = torsion_sequence(&d2);
        assert_eq!(seq.kernel_part().dom(), &d2);
        assert_eq!(seq.quotient_part().cod().as_ref(), d2.as_ref());
        assert_eq!(seq.quotient_part().map(), &FinMap::identity(2));

        let ind2 = arc(Preorder::indiscrete(2).unwrap());
        let seq = torsion_sequence(&ind2);
        assert_eq!(seq.kernel_part().dom(), &ind2);
        assert_eq!(seq.quotient_part().cod().size(), 1);
    }

    #[test]
    fn classification_cases() {
        let d2 = Preorder::discrete(2).unwrap();
        let c = d2.classify();
        assert!(c.is_equivalence_object && c.is_partial_order_object && c.is_discrete);

        let arrow = Preorder::generated(2, &[(0, 1)]).unwrap();
        let c = arrow.classify();
        assert!(!c.is_equivalence_object && c.is_partial_order_object && !c.is_discrete);

        let ind2 = Preorder::indiscrete(2).unwrap();
        let c = ind2.classify();
        assert!(c.is_equivalence_object && !c.is_partial_order_object && !c.is_discrete);
    }

    #[test]
    fn endofunction_cases() {
        assert_eq!(
            from_endofunction(&FinMap::identity(2)).unwrap().rel(),
            &Rel::delta(2)
        );
        assert_eq!(
            from_endofunction(&FinMap::new(vec![0, 0], 2).unwrap())
                .unwrap()
                .rel(),
            gen(2, &[(0, 1)]).rel()
        );
        assert_eq!(
            from_endofunction(&FinMap::new(vec![1, 0], 2).unwrap())
                .unwrap()
                .rel(),
            &Rel::full(2)
        );
    }
}
