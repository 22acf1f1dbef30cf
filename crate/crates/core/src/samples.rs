//! Hand-built construction data: star maps, Chen data and left normal band
//! data that do not come from decomposing a corpus semigroup.

use crate::construction::{chen_data_from, ChenData, StarMap};
use crate::families::{brandt_b2, cyclic_group, generate, left_zero, right_zero, semilattice_chain};
use crate::semigroup::FiniteSemigroup;
use crate::subset::ElementSubset;
use crate::transversal::analyze_transversal;

fn analysed(s: &FiniteSemigroup, s0: &[usize]) -> crate::TransversalAnalysis {
    let s0 = ElementSubset::from_indices(s.order(), s0.iter().copied()).expect("in range");
    analyze_transversal(s, &s0).expect("a valid transversal")
}

/// L a left zero band of size m, R a right zero band of size k, a trivial
/// core and the constant star map. The product is the m×k rectangular band.
pub fn zero_band_star_map(m: usize, k: usize) -> StarMap {
    let left = analysed(&left_zero(m).expect("m ≥ 1"), &[0]);
    let right = analysed(&right_zero(k).expect("k ≥ 1"), &[0]);
    let core = semilattice_chain(1).expect("order 1");
    StarMap::new(left, right, core, vec![0], vec![0], vec![0; m * k]).expect("valid star map")
}

/// L = (left zero band of size 2) × Z₂ and R = (right zero band of size 2) × Z₂
/// over the core Z₂, with (j,h)∗(i,g) = P(j,i) + h + g where P(1,1) = 1 and
/// P is 0 elsewhere.
///
/// The product is a Rees matrix semigroup whose diagonal is not a
/// multiplicative transversal: the idempotents (1,0) of R and (1,0) of L
/// star to the non-idempotent 1.
pub fn sandwich_star_map() -> StarMap {
    let z2 = cyclic_group(2).expect("order 2");
    let l = left_zero(2).expect("order 2").direct_product(&z2);
    let r = right_zero(2).expect("order 2").direct_product(&z2);
    let (la, ra) = (analysed(&l, &[0, 1]), analysed(&r, &[0, 1]));
    let mut values = vec![0; 16];
    for a in 0..4 {
        for x in 0..4 {
            let (j, h) = (a / 2, a % 2);
            let (i, g) = (x / 2, x % 2);
            values[a * 4 + x] = (usize::from(j == 1 && i == 1) + h + g) % 2;
        }
    }
    StarMap::new(la, ra, z2, vec![0, 1], vec![0, 1], values).expect("valid star map")
}

pub fn star_map_samples() -> Vec<(String, StarMap)> {
    vec![
        ("star map: left_zero(3) and right_zero(2) over a point".into(), zero_band_star_map(3, 2)),
        ("star map: Z2 sandwich".into(), sandwich_star_map()),
    ]
}

/// I = E⁰, ⊗ and ∗ given by multiplication and φ the identity.
pub fn degenerate_chen_data(core: &FiniteSemigroup) -> ChenData {
    let e0 = core.idempotents().to_vec();
    let pos = |s: usize| e0.iter().position(|&e| e == s).expect("idempotents of an adequate core commute");
    let act = e0.iter().flat_map(|&x| e0.iter().map(move |&s| (x, s))).map(|(x, s)| pos(core.mul(x, s))).collect();
    let star = e0.iter().flat_map(|&f| e0.iter().map(move |&g| core.mul(f, g))).collect();
    ChenData::new(core.clone(), Vec::new(), act, e0.clone(), star).expect("well-formed data")
}

/// A trivial core with `extra` further points in I, each fixed by the
/// action. The construction yields the left zero band on 1 + extra points.
pub fn point_chen_data(extra: usize) -> ChenData {
    let core = semilattice_chain(1).expect("order 1");
    let n = extra + 1;
    let labels = (0..extra).map(|i| format!("p{i}")).collect();
    ChenData::new(core, labels, (0..n).collect(), vec![0; n], vec![0; n]).expect("well-formed data")
}

pub fn chen_samples() -> Vec<(String, ChenData)> {
    let lz_chain = generate("direct_product(left_zero(2),semilattice_chain(2))").expect("valid spec");
    vec![
        ("chen: degenerate over brandt_B2".into(), degenerate_chen_data(&brandt_b2())),
        ("chen: degenerate over semilattice_chain(3)".into(), degenerate_chen_data(&semilattice_chain(3).expect("k ≥ 1"))),
        ("chen: degenerate over cyclic_group(3)".into(), degenerate_chen_data(&cyclic_group(3).expect("k ≥ 1"))),
        ("chen: two extra points over a point".into(), point_chen_data(2)),
        (
            "chen: read off left_zero(2) x semilattice_chain(2)".into(),
            chen_data_from(&analysed(&lz_chain, &[0, 1])).expect("left adequate with a quasi-ideal transversal"),
        ),
    ]
}

/// An inverse core, a left normal band and the images of the core
/// idempotents (in increasing order) in the band.
#[derive(Clone, Debug)]
pub struct LeftInverseSample {
    pub name: String,
    pub core: FiniteSemigroup,
    pub band: FiniteSemigroup,
    pub embed: Vec<usize>,
}

pub fn left_inverse_samples() -> Vec<LeftInverseSample> {
    let b2 = brandt_b2();
    let b2_idempotents = b2.restrict(&b2.idempotents()).expect("idempotents of B2 commute").semigroup;
    let chain = semilattice_chain(2).expect("k ≥ 1");
    let sample = |name: &str, core: FiniteSemigroup, band: FiniteSemigroup, embed: Vec<usize>| LeftInverseSample {
        name: format!("left inverse chen: {name}"),
        core,
        band,
        embed,
    };
    vec![
        sample("I = E(brandt_B2)", b2.clone(), b2_idempotents.clone(), vec![0, 1, 2]),
        sample(
            "left_zero(2) x E(brandt_B2) over brandt_B2",
            b2,
            left_zero(2).expect("m ≥ 1").direct_product(&b2_idempotents),
            vec![0, 1, 2],
        ),
        sample(
            "left_zero(2) x semilattice_chain(2) over semilattice_chain(2)",
            chain.clone(),
            left_zero(2).expect("m ≥ 1").direct_product(&chain),
            vec![0, 1],
        ),
        sample("left_zero(2) over cyclic_group(2)", cyclic_group(2).expect("k ≥ 1"), left_zero(2).expect("m ≥ 1"), vec![0]),
        sample("left_zero(2) over a point", semilattice_chain(1).expect("k ≥ 1"), left_zero(2).expect("m ≥ 1"), vec![1]),
    ]
}
