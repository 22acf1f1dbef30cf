use crate::report::{first, CheckReport};
use crate::subset::ElementSubset;
use crate::transversal::TransversalAnalysis;

use super::spined::{build_spined_product, SpinedProduct};
use super::star_map::{extract_with_parts, StarMap};
use super::{require, ConstructionError};

/// A semigroup with a quasi-ideal adequate transversal rebuilt as the
/// spined product of its parts L and R.
#[derive(Clone, Debug)]
pub struct Rebuild {
    pub star_map: StarMap,
    /// T, with `source_iso` set to x ↦ (e_x x̄, x̄ f_x).
    pub product: SpinedProduct,
    pub report: CheckReport,
}

pub const ISO_BIJECTION: &str = "x ↦ (e_x x̄, x̄ f_x) is a bijection onto T";
pub const ISO_HOMOMORPHISM: &str = "x ↦ (e_x x̄, x̄ f_x) is a homomorphism";
pub const IDEMPOTENTS_FROM_SOURCE: &str = "E(T) = {(e_y ȳ, ȳ f_y) : y ∈ E(S)}";
pub const LR_COVERS: &str = "LR = S";
pub const PAIR_IDENTITY: &str = "x f_a = e_x a for x ∈ L, a ∈ R with x̄ = ā";
pub const PARTS_R: &str = "R(T) = {(ā,a) : a ∈ R} and a ↦ (ā,a) is an isomorphism from R";
pub const PARTS_L: &str = "L(T) = {(x,x̄) : x ∈ L} and x ↦ (x,x̄) is an isomorphism from L";
pub const PARTS_I: &str = "I(T) = {(x,x̄) : x ∈ I(L)}";
pub const PARTS_LAMBDA: &str = "Λ(T) = {(ā,a) : a ∈ Λ(R)}";

/// Splits S into (L, R, ∗), builds T = L |×| R and verifies that
/// x ↦ (e_x x̄, x̄ f_x) is an isomorphism S → T, together with the
/// descriptions of E(T), R(T), L(T), I(T) and Λ(T) in terms of the parts.
pub fn decompose_and_rebuild(a: &TransversalAnalysis) -> Result<Rebuild, ConstructionError> {
    let (sm, parts) = extract_with_parts(a)?;
    let mut product = build_spined_product(&sm)?;
    let s = a.parent();
    let t = product.semigroup().clone();
    let ta = product.analysis().clone();

    // φ in local coordinates of L and R
    let phi: Vec<Option<usize>> = s
        .elements()
        .map(|x| {
            let left = parts.left.local(s.mul(a.e(x), a.bar(x)))?;
            let right = parts.right.local(s.mul(a.bar(x), a.f(x)))?;
            product.pair_index(left, right)
        })
        .collect();

    let mut report = CheckReport::new();
    let bijection = first(s.elements(), |x| phi[x].is_none().then(|| format!("{} has no image in T", s.label(x))))
        .or_else(|| {
            let image = ElementSubset::from_indices(t.order(), phi.iter().flatten().copied()).expect("in range");
            (image.len() != s.order() || !image.is_full())
                .then(|| format!("image has {} of {} pairs for {} elements", image.len(), t.order(), s.order()))
        });
    report.check(ISO_BIJECTION, bijection.clone());
    if let Some(w) = bijection {
        return Err(ConstructionError::IsoFailed(w));
    }
    let phi: Vec<usize> = phi.into_iter().map(|p| p.expect("checked")).collect();
    let hom = s
        .homomorphism_witness(&t, &phi)
        .map(|(x, y)| format!("{} {}", s.label(x), s.label(y)));
    report.check(ISO_HOMOMORPHISM, hom.clone());
    if let Some(w) = hom {
        return Err(ConstructionError::IsoFailed(w));
    }

    let image_of_idempotents =
        ElementSubset::from_indices(t.order(), s.idempotents().iter().map(|y| phi[y])).expect("in range");
    report.check(
        IDEMPOTENTS_FROM_SOURCE,
        (image_of_idempotents != t.idempotents())
            .then(|| format!("{image_of_idempotents} vs {}", t.idempotents())),
    );

    let lr = ElementSubset::from_indices(
        s.order(),
        a.set_l().iter().flat_map(|l| a.set_r().iter().map(move |r| s.mul(l, r))),
    )
    .expect("in range");
    report.check(LR_COVERS, (!lr.is_full()).then(|| format!("LR = {lr}")));

    report.check(
        PAIR_IDENTITY,
        first(a.set_l().iter(), |x| {
            first(a.set_r().iter().filter(|&r| a.bar(r) == a.bar(x)), |r| {
                (s.mul(x, a.f(r)) != s.mul(a.e(x), r)).then(|| format!("x={} a={}", s.label(x), s.label(r)))
            })
        }),
    );

    let (l, r) = (sm.left_semigroup(), sm.right_semigroup());
    let right_into_t: Vec<usize> = r
        .elements()
        .map(|b| product.pair_index(sm.to_left(sm.right_bar(b)), b).expect("(ā,a) lies in T"))
        .collect();
    let left_into_t: Vec<usize> = l
        .elements()
        .map(|y| product.pair_index(y, sm.to_right(sm.left_bar(y))).expect("(x,x̄) lies in T"))
        .collect();
    let subset_of = |items: &mut dyn Iterator<Item = usize>| ElementSubset::from_indices(t.order(), items).expect("in range");

    let r_image = subset_of(&mut right_into_t.iter().copied());
    report.check(
        PARTS_R,
        (&r_image != ta.set_r() || r_image.len() != r.order())
            .then(|| format!("{r_image} vs {}", ta.set_r()))
            .or_else(|| r.homomorphism_witness(&t, &right_into_t).map(|(p, q)| format!("{} {}", r.label(p), r.label(q)))),
    );
    let l_image = subset_of(&mut left_into_t.iter().copied());
    report.check(
        PARTS_L,
        (&l_image != ta.set_l() || l_image.len() != l.order())
            .then(|| format!("{l_image} vs {}", ta.set_l()))
            .or_else(|| l.homomorphism_witness(&t, &left_into_t).map(|(p, q)| format!("{} {}", l.label(p), l.label(q)))),
    );
    let i_image = subset_of(&mut sm.left().set_i().iter().map(|y| left_into_t[y]));
    report.check(
        PARTS_I,
        (&i_image != ta.set_i()).then(|| format!("{i_image} vs {}", ta.set_i())),
    );
    let lambda_image = subset_of(&mut sm.right().set_lambda().iter().map(|b| right_into_t[b]));
    report.check(
        PARTS_LAMBDA,
        (&lambda_image != ta.set_lambda()).then(|| format!("{lambda_image} vs {}", ta.set_lambda())),
    );
    require(&report)?;

    product.set_source_iso(phi);
    product.checks_mut().extend(report.clone());
    Ok(Rebuild { star_map: sm, product, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{brandt_b2, rectangular_band};
    use crate::transversal::analyze_transversal;

    #[test]
    fn rectangular_band_rebuilds_onto_itself() {
        let s = rectangular_band(3, 3).unwrap();
        for z in s.elements() {
            let a = analyze_transversal(&s, &ElementSubset::from_indices(9, [z]).unwrap()).unwrap();
            let rb = decompose_and_rebuild(&a).unwrap();
            assert!(rb.report.all_passed(), "{}", rb.report);
            let iso = rb.product.source_iso().unwrap();
            // oracle: the 81 products directly
            for x in s.elements() {
                for y in s.elements() {
                    assert_eq!(iso[s.mul(x, y)], rb.product.semigroup().mul(iso[x], iso[y]));
                }
            }
        }
    }

    #[test]
    fn adequate_semigroup_maps_onto_the_diagonal() {
        let s = brandt_b2();
        let a = analyze_transversal(&s, &ElementSubset::full(5)).unwrap();
        let rb = decompose_and_rebuild(&a).unwrap();
        let pairs = rb.product.pairs();
        for (x, &p) in rb.product.source_iso().unwrap().iter().enumerate() {
            assert_eq!(pairs[p], (x, x));
        }
    }
}
