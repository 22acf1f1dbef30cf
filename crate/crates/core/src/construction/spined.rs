use crate::classify::is_abundant;
use crate::report::{first, CheckReport};
use crate::semigroup::{FiniteSemigroup, SemigroupError};
use crate::subset::ElementSubset;
use crate::transversal::{analyze_transversal, TransversalAnalysis};

use super::star_map::{check_star_axioms, star_identities, StarMap, STAR_AXIOM_3};
use super::{assertion, require, ConstructionError};

pub const SPINED_IDEMPOTENTS: &str = "idempotents of T are the pairs with x̄ = a*x";
pub const SPINED_STARRED: &str = "(x,a) R* (e_x, e_x̄) and (x,a) L* (f_ā, f_a) in T";
pub const SPINED_FACTORISATION: &str = "factorisation of (x,a) is (e_x,e_x̄)(x̄,x̄)(f_ā,f_a)";
pub const AXIOM_3_MULTIPLICATIVE: &str = "axiom (3) holds exactly when T⁰ is multiplicative";
pub const AXIOM_3_PARTS: &str = "axiom (3) makes the transversal multiplicative in L and R";

/// The semigroup of pairs (x, a) ∈ L × R with x̄ = ā built from a star map.
#[derive(Clone, Debug)]
pub struct SpinedProduct {
    pairs: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
    right_order: usize,
    semigroup: FiniteSemigroup,
    t0: ElementSubset,
    t0_embed: Vec<usize>,
    analysis: TransversalAnalysis,
    source_iso: Option<Vec<usize>>,
    checks: CheckReport,
}

impl SpinedProduct {
    /// The pairs (L-index, R-index) in lexicographic order; pair `i` is
    /// element `i` of [`Self::semigroup`].
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair_index(&self, x: usize, a: usize) -> Option<usize> {
        self.index.get(x * self.right_order + a).copied().flatten()
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    /// The diagonal {(s, s)}.
    pub fn t0(&self) -> &ElementSubset {
        &self.t0
    }

    /// Core element s ↦ index of (s, s).
    pub fn t0_embedding(&self) -> &[usize] {
        &self.t0_embed
    }

    /// The analysis of T with transversal [`Self::t0`].
    pub fn analysis(&self) -> &TransversalAnalysis {
        &self.analysis
    }

    /// Source element ↦ pair index, when built by decomposition.
    pub fn source_iso(&self) -> Option<&[usize]> {
        self.source_iso.as_deref()
    }

    /// Every check run during construction; all pass on a returned product.
    pub fn checks(&self) -> &CheckReport {
        &self.checks
    }

    pub(crate) fn set_source_iso(&mut self, iso: Vec<usize>) {
        self.source_iso = Some(iso);
    }

    pub(crate) fn checks_mut(&mut self) -> &mut CheckReport {
        &mut self.checks
    }
}

pub(crate) struct PairTable {
    pub pairs: Vec<(usize, usize)>,
    pub index: Vec<Option<usize>>,
}

pub(crate) fn spine_pairs(sm: &StarMap) -> PairTable {
    let (nl, nr) = (sm.left_semigroup().order(), sm.right_semigroup().order());
    let mut pairs = Vec::new();
    let mut index = vec![None; nl * nr];
    for x in 0..nl {
        for a in 0..nr {
            if sm.left_bar(x) == sm.right_bar(a) {
                index[x * nr + a] = Some(pairs.len());
                pairs.push((x, a));
            }
        }
    }
    PairTable { pairs, index }
}

/// Fills the table of T from a per-pair product rule; a product outside T
/// is reported as [`ConstructionError::ClosureFailed`].
pub(crate) fn fill_table(
    sm: &StarMap,
    spine: &PairTable,
    product: impl Fn((usize, usize), (usize, usize)) -> (usize, usize),
) -> Result<FiniteSemigroup, ConstructionError> {
    let nr = sm.right_semigroup().order();
    let n = spine.pairs.len();
    let mut table = Vec::with_capacity(n * n);
    for &p in &spine.pairs {
        for &q in &spine.pairs {
            let (x, a) = product(p, q);
            match spine.index[x * nr + a] {
                Some(i) => table.push(i),
                None => return Err(ConstructionError::ClosureFailed { left: p, right: q }),
            }
        }
    }
    let labels = spine
        .pairs
        .iter()
        .map(|&(x, a)| format!("({},{})", sm.left_label(x), sm.right_label(a)))
        .collect();
    FiniteSemigroup::from_flat(n, table, Some(labels)).map_err(|e| match e {
        SemigroupError::NonAssociative { a, b, c, .. } => assertion(
            "the pair product is associative",
            format!("{:?} {:?} {:?}", spine.pairs[a], spine.pairs[b], spine.pairs[c]),
        ),
        other => assertion("the pair product is a semigroup table", other.to_string()),
    })
}

/// Builds T = {(x, a) : x̄ = ā} with (x,a)(y,b) = (e_x(a∗y), (a∗y)f_b).
///
/// Fails with [`ConstructionError::AxiomsFailed`] if axiom (1) or (2) does
/// not hold. Afterwards T is checked to be abundant with T⁰ = {(s, s)} a
/// quasi-ideal adequate transversal isomorphic to the core, along with the
/// description of E(T), the starred idempotents of each pair, the star map
/// identities and the agreement of axiom (3) with multiplicativity of T⁰.
pub fn build_spined_product(sm: &StarMap) -> Result<SpinedProduct, ConstructionError> {
    let axioms = check_star_axioms(sm, false);
    if !axioms.all_passed() {
        return Err(ConstructionError::AxiomsFailed(axioms));
    }
    let (l, r) = (sm.left_semigroup(), sm.right_semigroup());
    let (la, ra) = (sm.left(), sm.right());
    let spine = spine_pairs(sm);
    let t = fill_table(sm, &spine, |(x, a), (y, b)| {
        let m = sm.star(a, y);
        (l.mul(la.e(x), sm.to_left(m)), r.mul(sm.to_right(m), ra.f(b)))
    })?;
    finish(sm, spine, t)
}

pub(crate) fn finish(sm: &StarMap, spine: PairTable, t: FiniteSemigroup) -> Result<SpinedProduct, ConstructionError> {
    if !is_abundant(&t) {
        return Err(assertion("T is abundant", "some element has no idempotent in its starred class"));
    }
    let nr = sm.right_semigroup().order();
    let idx = |x: usize, a: usize| spine.index[x * nr + a];
    let core = sm.core();
    let t0_embed: Vec<usize> = core
        .elements()
        .map(|s| idx(sm.to_left(s), sm.to_right(s)).expect("(s,s) lies in T"))
        .collect();
    let t0 = ElementSubset::from_indices(t.order(), t0_embed.iter().copied()).expect("in range");
    if let Some((p, q)) = core.homomorphism_witness(&t, &t0_embed) {
        return Err(assertion("s ↦ (s,s) is a homomorphism", format!("{} {}", core.label(p), core.label(q))));
    }
    let analysis = analyze_transversal(&t, &t0)
        .map_err(|e| assertion("the diagonal is an adequate transversal of T", e.to_string()))?;
    if !analysis.quasi_ideal() {
        return Err(assertion("the diagonal is a quasi-ideal of T", "T⁰TT⁰ ⊄ T⁰"));
    }

    let (la, ra) = (sm.left(), sm.right());
    let cd = sm.core_data();
    let label = |i: usize| t.label(i);
    let mut checks = CheckReport::new();
    checks.check(
        SPINED_IDEMPOTENTS,
        first(spine.pairs.iter().enumerate(), |(i, &(x, a))| {
            (t.is_idempotent(i) != (sm.left_bar(x) == sm.star(a, x))).then(|| label(i))
        }),
    );
    let green = analysis.green();
    checks.check(
        SPINED_STARRED,
        first(spine.pairs.iter().enumerate(), |(i, &(x, a))| {
            let plus = idx(la.e(x), sm.to_right(cd.plus(sm.left_bar(x))));
            let star = idx(sm.to_left(cd.star(sm.right_bar(a))), ra.f(a));
            match (plus, star) {
                (Some(p), Some(q)) if green.r_star.related(i, p) && green.l_star.related(i, q) => None,
                _ => Some(label(i)),
            }
        }),
    );
    checks.check(
        SPINED_FACTORISATION,
        first(spine.pairs.iter().enumerate(), |(i, &(x, a))| {
            let bar = sm.left_bar(x);
            let want = (
                idx(la.e(x), sm.to_right(cd.plus(bar))),
                idx(sm.to_left(bar), sm.to_right(bar)),
                idx(sm.to_left(cd.star(bar)), ra.f(a)),
            );
            (want != (Some(analysis.e(i)), Some(analysis.bar(i)), Some(analysis.f(i)))).then(|| label(i))
        }),
    );
    checks.extend(star_identities(sm));

    let axiom_3 = check_star_axioms(sm, true).passed(STAR_AXIOM_3) == Some(true);
    checks.check(
        AXIOM_3_MULTIPLICATIVE,
        (axiom_3 != analysis.multiplicative())
            .then(|| format!("axiom (3) {axiom_3}, multiplicative {}", analysis.multiplicative())),
    );
    checks.check(
        AXIOM_3_PARTS,
        (axiom_3 && !(la.multiplicative() && ra.multiplicative())).then(|| {
            format!("multiplicative in L: {}, in R: {}", la.multiplicative(), ra.multiplicative())
        }),
    );
    require(&checks)?;

    Ok(SpinedProduct {
        pairs: spine.pairs,
        index: spine.index,
        right_order: nr,
        semigroup: t,
        t0,
        t0_embed,
        analysis,
        source_iso: None,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::extract_star;
    use crate::families::{brandt_b2, left_zero, rectangular_band, right_zero, semilattice_chain};

    #[test]
    fn diagonal_of_adequate_semigroup() {
        for s in [brandt_b2(), semilattice_chain(3).unwrap()] {
            let a = analyze_transversal(&s, &ElementSubset::full(s.order())).unwrap();
            let sp = build_spined_product(&extract_star(&a).unwrap()).unwrap();
            assert_eq!(sp.pairs(), (0..s.order()).map(|x| (x, x)).collect::<Vec<_>>());
            // (s,s)(t,t) = (st,st)
            for x in s.elements() {
                for y in s.elements() {
                    assert_eq!(sp.semigroup().mul(x, y), s.mul(x, y));
                }
            }
            assert!(sp.t0().is_full());
        }
    }

    #[test]
    fn zero_bands_over_trivial_core_give_rectangular_band() {
        let (m, k) = (3, 2);
        let left = left_zero(m).unwrap();
        let right = right_zero(k).unwrap();
        let la = analyze_transversal(&left, &ElementSubset::from_indices(m, [0]).unwrap()).unwrap();
        let ra = analyze_transversal(&right, &ElementSubset::from_indices(k, [0]).unwrap()).unwrap();
        let core = semilattice_chain(1).unwrap();
        let sm = StarMap::new(la, ra, core, vec![0], vec![0], vec![0; m * k]).unwrap();
        let sp = build_spined_product(&sm).unwrap();
        assert_eq!(sp.semigroup().order(), m * k);
        // pair (i, λ) should multiply as in the rectangular band
        let rect = rectangular_band(m, k).unwrap();
        for (p, &(i, l)) in sp.pairs().iter().enumerate() {
            assert_eq!(p, i * k + l);
        }
        assert_eq!(sp.semigroup().rows(), rect.rows());
        assert!(sp.analysis().multiplicative());
    }
}
