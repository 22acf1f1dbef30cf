use crate::report::{first, CheckReport};

use super::TransversalAnalysis;

/// Product formulas for the factorisation maps, checked over every
/// applicable tuple:
///
/// * for x ∈ R, y ∈ S: e_(e_y x) = e_y e_x, bar(e_y x) = e_ȳ x̄,
///   f_(e_y x) = (e_ȳ x̄)* f_x, and the duals for z ∈ L;
/// * for x, y with x̄ f_x e_y ∈ S⁰ and f_x e_y ȳ ∈ S⁰:
///   bar(xy) = x̄ f_x e_y ȳ, e_xy = e_x (x̄ f_x e_y)⁺, f_xy = (f_x e_y ȳ)* f_y;
/// * LR = S.
pub fn verify_product_formulas(a: &TransversalAnalysis) -> CheckReport {
    let s = a.parent();
    let pairs = |xs: Vec<usize>| {
        xs.into_iter()
            .flat_map(move |x| s.elements().map(move |y| (x, y)))
            .collect::<Vec<_>>()
    };
    let r_pairs = pairs(a.set_r().to_vec());
    let l_pairs = pairs(a.set_l().to_vec());
    let mut report = CheckReport::new();

    report.check(
        "e_(e_y x) = e_y e_x for x ∈ R",
        first(r_pairs.iter().copied(), |(x, y)| {
            let p = s.mul(a.e(y), x);
            (a.e(p) != s.mul(a.e(y), a.e(x))).then(|| format!("x={x}, y={y}"))
        }),
    );
    report.check(
        "f_(z f_y) = f_z f_y for z ∈ L",
        first(l_pairs.iter().copied(), |(z, y)| {
            let p = s.mul(z, a.f(y));
            (a.f(p) != s.mul(a.f(z), a.f(y))).then(|| format!("z={z}, y={y}"))
        }),
    );
    report.check(
        "bar(e_y x) = e_ȳ x̄ for x ∈ R",
        first(r_pairs.iter().copied(), |(x, y)| {
            let p = s.mul(a.e(y), x);
            (a.bar(p) != s.mul(a.e(a.bar(y)), a.bar(x))).then(|| format!("x={x}, y={y}"))
        }),
    );
    report.check(
        "bar(z f_y) = z̄ f_ȳ for z ∈ L",
        first(l_pairs.iter().copied(), |(z, y)| {
            let p = s.mul(z, a.f(y));
            (a.bar(p) != s.mul(a.bar(z), a.f(a.bar(y)))).then(|| format!("z={z}, y={y}"))
        }),
    );
    report.check(
        "f_(e_y x) = (e_ȳ x̄)* f_x for x ∈ R",
        first(r_pairs.iter().copied(), |(x, y)| {
            let p = s.mul(a.e(y), x);
            let m = s.mul(a.e(a.bar(y)), a.bar(x));
            let ok = a.in_transversal(m) && a.f(p) == s.mul(a.star(m), a.f(x));
            (!ok).then(|| format!("x={x}, y={y}"))
        }),
    );
    report.check(
        "e_(z f_y) = e_z (z̄ f_ȳ)⁺ for z ∈ L",
        first(l_pairs.iter().copied(), |(z, y)| {
            let p = s.mul(z, a.f(y));
            let m = s.mul(a.bar(z), a.f(a.bar(y)));
            let ok = a.in_transversal(m) && a.e(p) == s.mul(a.e(z), a.plus(m));
            (!ok).then(|| format!("z={z}, y={y}"))
        }),
    );

    let mut product_failures = [None, None, None];
    for x in s.elements() {
        for y in s.elements() {
            let left = s.mul3(a.bar(x), a.f(x), a.e(y));
            let right = s.mul3(a.f(x), a.e(y), a.bar(y));
            if !(a.in_transversal(left) && a.in_transversal(right)) {
                continue;
            }
            let xy = s.mul(x, y);
            let witness = || Some(format!("x={x}, y={y}"));
            if product_failures[0].is_none() && a.bar(xy) != s.mul(left, a.bar(y)) {
                product_failures[0] = witness();
            }
            if product_failures[1].is_none() && a.e(xy) != s.mul(a.e(x), a.plus(left)) {
                product_failures[1] = witness();
            }
            if product_failures[2].is_none() && a.f(xy) != s.mul(a.star(right), a.f(y)) {
                product_failures[2] = witness();
            }
        }
    }
    let [bar_fail, e_fail, f_fail] = product_failures;
    report.check("bar(xy) = x̄ f_x e_y ȳ", bar_fail);
    report.check("e_xy = e_x (x̄ f_x e_y)⁺", e_fail);
    report.check("f_xy = (f_x e_y ȳ)* f_y", f_fail);

    let l = a.set_l().to_vec();
    let r = a.set_r().to_vec();
    report.check(
        "LR = S",
        first(s.elements(), |w| {
            (!l.iter().any(|&p| r.iter().any(|&q| s.mul(p, q) == w))).then(|| format!("{w} is not in LR"))
        }),
    );
    report
}
