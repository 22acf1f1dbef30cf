use crate::report::{first, CheckReport};

use super::TransversalAnalysis;

/// The elementary identities satisfied by the factorisation maps of any
/// adequate transversal, checked at every element.
pub fn basic_properties(a: &TransversalAnalysis) -> CheckReport {
    let s = a.parent();
    let g = a.green();
    let n = s.elements();
    let mut report = CheckReport::new();

    report.check(
        "factorisation x = e_x x̄ f_x with e_x ℒ x̄⁺, f_x ℛ x̄*",
        first(n.clone(), |x| {
            let (e, m, f) = (a.e(x), a.bar(x), a.f(x));
            let ok = s.mul3(e, m, f) == x
                && a.in_transversal(m)
                && s.is_idempotent(e)
                && s.is_idempotent(f)
                && g.l.related(e, a.plus(m))
                && g.r.related(f, a.star(m));
            (!ok).then(|| format!("x={x} (e={e}, bar={m}, f={f})"))
        }),
    );
    report.check(
        "e_x R* x and f_x L* x",
        first(n.clone(), |x| {
            (!(g.r_star.related(a.e(x), x) && g.l_star.related(a.f(x), x))).then(|| format!("x={x}"))
        }),
    );
    report.check(
        "x ∈ S⁰ has e_x = x⁺ ∈ E⁰, x̄ = x, f_x = x* ∈ E⁰",
        first(a.transversal().iter(), |x| {
            let ok = a.e(x) == a.plus(x)
                && a.bar(x) == x
                && a.f(x) == a.star(x)
                && a.set_e0().contains(a.e(x))
                && a.set_e0().contains(a.f(x));
            (!ok).then(|| format!("x={x}"))
        }),
    );
    report.check(
        "e_x̄ ℒ e_x, e_x̄ e_x = e_x̄, e_x e_x̄ = e_x",
        first(n.clone(), |x| {
            let (ex, eb) = (a.e(x), a.e(a.bar(x)));
            let ok = g.l.related(eb, ex) && s.mul(eb, ex) == eb && s.mul(ex, eb) == ex;
            (!ok).then(|| format!("x={x}"))
        }),
    );
    report.check(
        "f_x̄ ℛ f_x, f_x̄ f_x = f_x, f_x f_x̄ = f_x̄",
        first(n.clone(), |x| {
            let (fx, fb) = (a.f(x), a.f(a.bar(x)));
            let ok = g.r.related(fb, fx) && s.mul(fb, fx) == fx && s.mul(fx, fb) == fb;
            (!ok).then(|| format!("x={x}"))
        }),
    );
    report.check(
        "I = {x : x = e_x}, Λ = {x : x = f_x}",
        first(n.clone(), |x| {
            let ok = a.set_i().contains(x) == (a.e(x) == x) && a.set_lambda().contains(x) == (a.f(x) == x);
            (!ok).then(|| format!("x={x}"))
        }),
    );
    report.check(
        "x ∈ I has e_x = x, x̄ = f_x = e_x̄",
        first(a.set_i().iter(), |x| {
            let ok = a.e(x) == x && a.bar(x) == a.f(x) && a.f(x) == a.e(a.bar(x));
            (!ok).then(|| format!("x={x}"))
        }),
    );
    report.check(
        "y ∈ Λ has e_y = ȳ = f_ȳ, f_y = y",
        first(a.set_lambda().iter(), |y| {
            let ok = a.e(y) == a.bar(y) && a.bar(y) == a.f(a.bar(y)) && a.f(y) == y;
            (!ok).then(|| format!("y={y}"))
        }),
    );
    report.check(
        "bar(e_x) = e_x̄ = x̄⁺ = f_(e_x)",
        first(n.clone(), |x| {
            let m = a.bar(x);
            let ex = a.e(x);
            let ok = a.bar(ex) == a.e(m) && a.e(m) == a.plus(m) && a.plus(m) == a.f(ex);
            (!ok).then(|| format!("x={x}"))
        }),
    );
    report.check(
        "bar(f_x) = f_x̄ = x̄* = e_(f_x)",
        first(n.clone(), |x| {
            let m = a.bar(x);
            let fx = a.f(x);
            let ok = a.bar(fx) == a.f(m) && a.f(m) == a.star(m) && a.star(m) == a.e(fx);
            (!ok).then(|| format!("x={x}"))
        }),
    );
    report.check(
        "x̄ = e_x̄ x f_x̄",
        first(n, |x| {
            let m = a.bar(x);
            (s.mul3(a.e(m), x, a.f(m)) != m).then(|| format!("x={x}"))
        }),
    );
    report
}

/// A named membership test.
type Description<'a> = (&'static str, Box<dyn Fn(usize) -> bool + 'a>);

/// The six descriptions of R = {x : e_x = e_x̄} must pick out the same set.
pub fn r_set_characterizations(a: &TransversalAnalysis) -> CheckReport {
    let s = a.parent();
    let g = a.green();
    let descriptions: [Description<'_>; 5] = [
        ("e_x ∈ E⁰", Box::new(|x| a.set_e0().contains(a.e(x)))),
        ("x = x̄ f_x", Box::new(|x| s.mul(a.bar(x), a.f(x)) == x)),
        ("x = e_x̄ x", Box::new(|x| s.mul(a.e(a.bar(x)), x) == x)),
        ("x R* x̄", Box::new(|x| g.r_star.related(x, a.bar(x)))),
        ("x̄ = e_x x̄", Box::new(|x| s.mul(a.e(x), a.bar(x)) == a.bar(x))),
    ];
    let mut report = CheckReport::new();
    for (name, pred) in descriptions {
        report.check(
            &format!("R = {{x : {name}}}"),
            first(s.elements(), |x| (pred(x) != a.set_r().contains(x)).then(|| format!("x={x}"))),
        );
    }
    report
}

/// The left-right duals of [`r_set_characterizations`] for
/// L = {x : f_x = f_x̄}.
pub fn l_set_characterizations(a: &TransversalAnalysis) -> CheckReport {
    let s = a.parent();
    let g = a.green();
    let descriptions: [Description<'_>; 5] = [
        ("f_x ∈ E⁰", Box::new(|x| a.set_e0().contains(a.f(x)))),
        ("x = e_x x̄", Box::new(|x| s.mul(a.e(x), a.bar(x)) == x)),
        ("x = x f_x̄", Box::new(|x| s.mul(x, a.f(a.bar(x))) == x)),
        ("x L* x̄", Box::new(|x| g.l_star.related(x, a.bar(x)))),
        ("x̄ = x̄ f_x", Box::new(|x| s.mul(a.bar(x), a.f(x)) == a.bar(x))),
    ];
    let mut report = CheckReport::new();
    for (name, pred) in descriptions {
        report.check(
            &format!("L = {{x : {name}}}"),
            first(s.elements(), |x| (pred(x) != a.set_l().contains(x)).then(|| format!("x={x}"))),
        );
    }
    report
}
