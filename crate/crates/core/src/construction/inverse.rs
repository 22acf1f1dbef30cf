use crate::classify::is_left_adequate;
use crate::report::{first, CheckReport};
use crate::semigroup::FiniteSemigroup;
use crate::subset::ElementSubset;
use crate::transversal::{analyze_transversal, TransversalAnalysis};

use super::chen::{chen_construct, ChenData, ChenProduct};
use super::spined::{build_spined_product, fill_table, spine_pairs, SpinedProduct};
use super::star_map::{check_star_axioms, StarMap, STAR_AXIOM_2};
use super::{assertion, require, ConstructionError};

pub const REGULAR_AXIOM_1: &str = "star axiom (1), inverse form: (a*y)(b⁰b) * z = a * (yy⁰)(b*z) whenever y⁰ = b⁰";
pub const REGULAR_PAIRING: &str = "x⁰ = a⁰ exactly when x̄ = ā";
pub const REGULAR_WITNESS: &str = "(x,a)(a⁰,x⁰)(x,a) = (x,a)";
pub const LEFT_NORMAL_ABSORPTION: &str = "sg = sg⁰ ∈ E⁰ for s ∈ E⁰, g ∈ I";
pub const LEFT_INVERSE_WITNESS: &str = "(e,x)(x⁻¹x, x⁻¹)(e,x) = (e,x)";
pub const LEFT_INVERSE_OUTCOME: &str = "T is left inverse";

/// An inverse transversal of a regular semigroup with the map x ↦ x⁰.
#[derive(Clone, Debug)]
pub struct InverseTransversalReport {
    pub analysis: TransversalAnalysis,
    /// x ↦ the unique inverse of x lying in the transversal.
    pub inverse: Vec<usize>,
    pub checks: CheckReport,
}

/// The unique member of V(x) ∩ `within` for every x.
fn transversal_inverses(s: &FiniteSemigroup, within: &ElementSubset) -> Result<Vec<usize>, ConstructionError> {
    s.elements()
        .map(|x| {
            let v = s.inverses_of(x).intersection(within);
            match v.len() {
                1 => Ok(v.iter().next().expect("one element")),
                count => Err(ConstructionError::UniquenessFailed { x, count }),
            }
        })
        .collect()
}

fn require_regular(s: &FiniteSemigroup, what: &str) -> Result<(), ConstructionError> {
    match s.elements().find(|&x| !s.is_regular_element(x)) {
        None => Ok(()),
        Some(x) => Err(ConstructionError::NotRegular(format!("{what}: {} has no inverse", s.label(x)))),
    }
}

/// For a regular S with an inverse transversal S⁰: x⁰ is the unique inverse
/// of x in S⁰, and e_x = xx⁰, f_x = x⁰x, x̄ = x⁰⁰, x⁰ = x⁰⁰⁰, with I and Λ
/// described through x ↦ x⁰.
pub fn inverse_transversal_analysis(
    s: &FiniteSemigroup,
    s0: &ElementSubset,
) -> Result<InverseTransversalReport, ConstructionError> {
    require_regular(s, "S")?;
    let sub = s.restrict(s0).map_err(|(a, b)| {
        ConstructionError::NotInverseSub(format!("{}·{} leaves the subset", s.label(a), s.label(b)))
    })?;
    if !sub.semigroup.is_inverse() {
        return Err(ConstructionError::NotInverseSub("the subsemigroup is not inverse".into()));
    }
    let x0 = transversal_inverses(s, s0)?;
    let a = analyze_transversal(s, s0)?;
    let lab = |x: usize| s.label(x);

    let mut checks = CheckReport::new();
    checks.check(
        "e_x = xx⁰ and f_x = x⁰x",
        first(s.elements(), |x| {
            (a.e(x) != s.mul(x, x0[x]) || a.f(x) != s.mul(x0[x], x)).then(|| lab(x))
        }),
    );
    checks.check(
        "x̄ = x⁰⁰ and x⁰ = x⁰⁰⁰",
        first(s.elements(), |x| (a.bar(x) != x0[x0[x]] || x0[x] != x0[x0[x0[x]]]).then(|| lab(x))),
    );
    let products = |f: &dyn Fn(usize) -> usize| ElementSubset::from_indices(s.order(), s.elements().map(f)).expect("in range");
    let fixed = |f: &dyn Fn(usize) -> usize| ElementSubset::from_predicate(s.order(), |x| f(x) == x);
    let i_by_products = products(&|x| s.mul(x, x0[x]));
    let i_by_fixed = fixed(&|x| s.mul(x, x0[x]));
    checks.check(
        "I = {xx⁰} = {x : x = xx⁰}",
        (a.set_i() != &i_by_products || a.set_i() != &i_by_fixed)
            .then(|| format!("I = {}, {{xx⁰}} = {i_by_products}, fixed = {i_by_fixed}", a.set_i())),
    );
    let l_by_products = products(&|x| s.mul(x0[x], x));
    let l_by_fixed = fixed(&|x| s.mul(x0[x], x));
    checks.check(
        "Λ = {x⁰x} = {x : x = x⁰x}",
        (a.set_lambda() != &l_by_products || a.set_lambda() != &l_by_fixed)
            .then(|| format!("Λ = {}, {{x⁰x}} = {l_by_products}, fixed = {l_by_fixed}", a.set_lambda())),
    );
    checks.check(
        "x̄ = ȳ exactly when x⁰ = y⁰",
        first(s.elements(), |x| {
            first(s.elements(), |y| ((a.bar(x) == a.bar(y)) != (x0[x] == x0[y])).then(|| format!("{} {}", lab(x), lab(y))))
        }),
    );
    Ok(InverseTransversalReport { analysis: a, inverse: x0, checks })
}

/// The spined product of a left inverse L and a right inverse R over an
/// inverse core, with (x,a)(y,b) = (xx⁰(a∗y), (a∗y)b⁰b).
///
/// The result is cross-checked against [`build_spined_product`]; every pair
/// is shown regular by (x,a)(a⁰,x⁰)(x,a) = (x,a), and the diagonal is an
/// inverse transversal.
pub fn build_regular_spined_product(sm: &StarMap) -> Result<SpinedProduct, ConstructionError> {
    let (l, r, core) = (sm.left_semigroup(), sm.right_semigroup(), sm.core());
    require_regular(l, "L")?;
    require_regular(r, "R")?;
    if !core.is_inverse() {
        return Err(ConstructionError::NotInverseSub("the core is not inverse".into()));
    }
    let l0 = transversal_inverses(l, sm.left().transversal())?;
    let r0 = transversal_inverses(r, sm.right().transversal())?;
    let l0_core = |x: usize| sm.left_core(l0[x]).expect("in the transversal");
    let r0_core = |a: usize| sm.right_core(r0[a]).expect("in the transversal");

    let mut axioms = CheckReport::new();
    axioms.check(
        REGULAR_AXIOM_1,
        first(sm.domain(), |(b, y)| {
            if l0_core(y) != r0_core(b) {
                return None;
            }
            let yy0 = l.mul(y, l0[y]);
            let b0b = r.mul(r0[b], b);
            first(r.elements(), |a| {
                let left_factor = r.mul(sm.to_right(sm.star(a, y)), b0b);
                first(l.elements(), |z| {
                    let lhs = sm.star(left_factor, z);
                    let rhs = sm.star(a, l.mul(yy0, sm.to_left(sm.star(b, z))));
                    (lhs != rhs).then(|| {
                        format!("a={} b={} y={} z={}", sm.right_label(a), sm.right_label(b), sm.left_label(y), sm.left_label(z))
                    })
                })
            })
        }),
    );
    let general = check_star_axioms(sm, false);
    axioms.push(general.get(STAR_AXIOM_2).expect("always evaluated").clone());
    if !axioms.all_passed() {
        return Err(ConstructionError::AxiomsFailed(axioms));
    }

    let spine = spine_pairs(sm);
    let mut checks = CheckReport::new();
    checks.check(
        REGULAR_PAIRING,
        first(sm.domain(), |(a, x)| {
            ((l0_core(x) == r0_core(a)) != (sm.left_bar(x) == sm.right_bar(a)))
                .then(|| format!("x={} a={}", sm.left_label(x), sm.right_label(a)))
        }),
    );
    require(&checks)?;
    let t = fill_table(sm, &spine, |(x, a), (y, b)| {
        let m = sm.star(a, y);
        (l.mul(l.mul(x, l0[x]), sm.to_left(m)), r.mul(sm.to_right(m), r.mul(r0[b], b)))
    })?;
    let mut product = build_spined_product(sm)?;
    if product.semigroup().rows() != t.rows() {
        return Err(assertion("the inverse form of the product agrees with the general one", "tables differ"));
    }

    let regular = first(product.pairs().iter().enumerate(), |(i, &(x, a))| {
        let witness = product.pair_index(sm.to_left(r0_core(a)), sm.to_right(l0_core(x)));
        match witness {
            Some(w) if t.mul3(i, w, i) == i => None,
            _ => Some(t.label(i)),
        }
    });
    checks.check(REGULAR_WITNESS, regular.clone());
    if let Some(w) = regular {
        return Err(ConstructionError::NotRegularOutcome(w));
    }
    let inv = inverse_transversal_analysis(&t, product.t0())?;
    checks.extend(inv.checks);
    require(&checks)?;
    product.checks_mut().extend(axioms);
    product.checks_mut().extend(checks);
    Ok(product)
}

/// Chen's construction specialised to an inverse core and a left normal
/// band I containing E⁰ as a semilattice transversal.
#[derive(Clone, Debug)]
pub struct LeftInverseChen {
    pub data: ChenData,
    /// Band element ↦ its index in I.
    pub band_to_i: Vec<usize>,
    pub product: ChenProduct,
    pub checks: CheckReport,
}

/// Builds the left inverse semigroup {(e, x) : e⁰ = xx⁻¹} over an inverse
/// core from a left normal band `band`, where `embed` sends the k-th core
/// idempotent (in increasing order) into the band.
pub fn left_inverse_chen(
    core: &FiniteSemigroup,
    band: &FiniteSemigroup,
    embed: &[usize],
) -> Result<LeftInverseChen, ConstructionError> {
    if !core.is_inverse() {
        return Err(ConstructionError::NotInverseSub("the core is not inverse".into()));
    }
    if let Some(x) = band.elements().find(|&x| !band.is_idempotent(x)) {
        return Err(ConstructionError::DataInvalid { axiom: "I is a band".into(), witness: band.label(x) });
    }
    for e in band.elements() {
        for x in band.elements() {
            for y in band.elements() {
                if band.mul3(e, x, y) != band.mul3(e, y, x) {
                    return Err(ConstructionError::NotLeftNormal { e, x, y });
                }
            }
        }
    }
    let e0 = core.idempotents().to_vec();
    let not_transversal = |w: String| ConstructionError::NotSemilatticeTransversal(w);
    if embed.len() != e0.len() || embed.iter().any(|&x| x >= band.order()) {
        return Err(not_transversal(format!("{} images for {} idempotents", embed.len(), e0.len())));
    }
    let image = ElementSubset::from_indices(band.order(), embed.iter().copied()).expect("in range");
    if image.len() != e0.len() {
        return Err(not_transversal("the embedding is not injective".into()));
    }
    let pos = |s: usize| e0.iter().position(|&e| e == s);
    for (k, &e) in e0.iter().enumerate() {
        for (j, &f) in e0.iter().enumerate() {
            let p = pos(core.mul(e, f)).expect("idempotents of an inverse semigroup commute");
            if band.mul(embed[k], embed[j]) != embed[p] {
                return Err(not_transversal(format!("the embedding is not a homomorphism at ({},{})", core.label(e), core.label(f))));
            }
        }
    }
    let mut x0 = Vec::with_capacity(band.order());
    for x in band.elements() {
        let v = band.inverses_of(x).intersection(&image);
        if v.len() != 1 {
            return Err(not_transversal(format!("{} has {} inverses in E⁰", band.label(x), v.len())));
        }
        x0.push(v.iter().next().expect("one element"));
    }

    // I lists E⁰ first, then the remaining band elements
    let i_to_band: Vec<usize> =
        embed.iter().copied().chain(band.elements().filter(|x| !image.contains(*x))).collect();
    let mut band_to_i = vec![0; band.order()];
    for (i, &x) in i_to_band.iter().enumerate() {
        band_to_i[x] = i;
    }
    let e0_of_band = |x: usize| embed.iter().position(|&y| y == x);

    let mut checks = CheckReport::new();
    checks.check(
        LEFT_NORMAL_ABSORPTION,
        first(embed.iter().copied(), |s| {
            first(band.elements(), |g| {
                let sg = band.mul(s, g);
                (sg != band.mul(s, x0[g]) || !image.contains(sg)).then(|| format!("s={} g={}", band.label(s), band.label(g)))
            })
        }),
    );
    require(&checks).map_err(|e| match e {
        ConstructionError::AssertionFailed { check, witness } => ConstructionError::DataInvalid { axiom: check, witness },
        other => other,
    })?;

    let ne = e0.len();
    let mut act = Vec::with_capacity(i_to_band.len() * ne);
    for &x in &i_to_band {
        for &s in embed {
            act.push(band_to_i[band.mul(x, s)]);
        }
    }
    let proj = i_to_band.iter().map(|&x| e0[e0_of_band(x0[x]).expect("x⁰ ∈ E⁰")]).collect();
    let mut star = Vec::with_capacity(ne * i_to_band.len());
    for &s in embed {
        for &x in &i_to_band {
            star.push(e0[e0_of_band(band.mul(s, x)).expect("checked above")]);
        }
    }
    let extra_labels = i_to_band[ne..].iter().map(|&x| band.label(x)).collect();
    let data = ChenData::new(core.clone(), extra_labels, act, proj, star)?;
    let mut product = chen_construct(&data)?;

    let t = product.semigroup().clone();
    let inverse_in_core = |x: usize| core.inverses_of(x).iter().next().expect("core is inverse");
    let regular = first(product.pairs().iter().enumerate(), |(i, &(_, x))| {
        let xi = inverse_in_core(x);
        let e = data.e0_position(core.mul(xi, x)).expect("idempotent");
        match product.pair_index(e, xi) {
            Some(w) if t.mul3(i, w, i) == i => None,
            _ => Some(t.label(i)),
        }
    });
    checks.check(LEFT_INVERSE_WITNESS, regular.clone());
    if let Some(w) = regular {
        return Err(ConstructionError::NotRegularOutcome(w));
    }
    checks.check(
        LEFT_INVERSE_OUTCOME,
        (!(t.is_regular() && is_left_adequate(&t))).then(|| "T is not regular and left adequate".to_string()),
    );
    let inv = inverse_transversal_analysis(&t, product.t0())?;
    checks.extend(inv.checks);
    require(&checks)?;
    product.checks_mut().extend(checks.clone());
    Ok(LeftInverseChen { data, band_to_i, product, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::extract_star;
    use crate::families::{brandt_b2, cyclic_group, left_zero, rectangular_band, semilattice_chain, symmetric_inverse_monoid};

    #[test]
    fn group_inverse_is_the_group_inverse() {
        let g = cyclic_group(4).unwrap();
        let rep = inverse_transversal_analysis(&g, &ElementSubset::full(4)).unwrap();
        assert!(rep.checks.all_passed());
        for x in g.elements() {
            assert_eq!(g.mul(x, rep.inverse[x]), 0);
            assert_eq!(rep.analysis.e(x), 0);
        }
    }

    #[test]
    fn rectangular_band_inverse_is_the_transversal() {
        let s = rectangular_band(3, 2).unwrap();
        for z in s.elements() {
            let rep = inverse_transversal_analysis(&s, &ElementSubset::from_indices(6, [z]).unwrap()).unwrap();
            assert!(rep.inverse.iter().all(|&x| x == z));
            assert!(rep.checks.all_passed(), "{}", rep.checks);
        }
    }

    #[test]
    fn brandt_and_symmetric_inverse_monoid() {
        for s in [brandt_b2(), symmetric_inverse_monoid(2).unwrap()] {
            let rep = inverse_transversal_analysis(&s, &ElementSubset::full(s.order())).unwrap();
            assert!(rep.checks.all_passed(), "{}", rep.checks);
            for x in s.elements() {
                assert_eq!(s.inverses_of(x).to_vec(), vec![rep.inverse[x]]);
            }
        }
    }

    #[test]
    fn non_regular_is_rejected() {
        let s = crate::families::monogenic(2, 1).unwrap();
        let err = inverse_transversal_analysis(&s, &ElementSubset::from_indices(2, [1]).unwrap()).unwrap_err();
        assert!(matches!(err, ConstructionError::NotRegular(_)));
    }

    #[test]
    fn regular_spined_product_of_rectangular_band() {
        let s = rectangular_band(2, 3).unwrap();
        let a = analyze_transversal(&s, &ElementSubset::from_indices(6, [4]).unwrap()).unwrap();
        let sm = extract_star(&a).unwrap();
        let t = build_regular_spined_product(&sm).unwrap();
        assert!(t.semigroup().is_regular());
        assert!(t.analysis().multiplicative());
        let g = cyclic_group(3).unwrap();
        let a = analyze_transversal(&g, &ElementSubset::full(3)).unwrap();
        let t = build_regular_spined_product(&extract_star(&a).unwrap()).unwrap();
        assert_eq!(t.semigroup().rows(), g.rows());
    }

    #[test]
    fn left_inverse_chen_with_i_equal_to_e0() {
        let core = brandt_b2();
        let e0 = core.restrict(&core.idempotents()).unwrap();
        let out = left_inverse_chen(&core, &e0.semigroup, &(0..e0.semigroup.order()).collect::<Vec<_>>()).unwrap();
        assert_eq!(out.product.semigroup().order(), core.order());
        assert!(out.product.t0().is_full());
    }

    #[test]
    fn left_inverse_chen_with_left_zero_band() {
        // every element of a left zero band is an inverse of every other, so
        // any single element is a semilattice transversal
        let band = left_zero(2).unwrap();
        let core = semilattice_chain(1).unwrap();
        let out = left_inverse_chen(&core, &band, &[1]).unwrap();
        let t = out.product.semigroup();
        assert_eq!(t.order(), 2);
        assert_eq!(t.rows(), band.rows());
        assert!(t.is_regular() && is_left_adequate(t));
    }

    #[test]
    fn right_normal_band_is_rejected() {
        let band = crate::families::right_zero(2).unwrap();
        let band = band.adjoin_identity();
        let core = semilattice_chain(1).unwrap();
        let err = left_inverse_chen(&core, &band, &[2]).unwrap_err();
        assert!(matches!(err, ConstructionError::NotLeftNormal { .. }));
    }
}
