use crate::classify::{is_adequate, AdequateData};
use crate::report::{first, CheckReport};
use crate::semigroup::FiniteSemigroup;
use crate::subset::ElementSubset;
use crate::transversal::{
    left_adequate_equivalences, quasi_ideal_parts, right_adequate_equivalences, QuasiIdealParts, TransversalAnalysis,
    TransversalError,
};

use super::ConstructionError;

pub const STAR_AXIOM_1: &str = "star axiom (1): (a*y)f_b * z = a * e_y(b*z) whenever bar y = bar b";
pub const STAR_AXIOM_2: &str = "star axiom (2): a*x = ax when a or x lies in the transversal";
pub const STAR_AXIOM_3: &str = "star axiom (3): e*f is a transversal idempotent for idempotents e of R, f of L";

/// A map R × L → S⁰ over a left adequate L and a right adequate R that share
/// the quasi-ideal adequate transversal S⁰.
///
/// S⁰ is held as a standalone semigroup (`core`) with explicit embeddings
/// into L and R; products a∗y are core elements and are transported into L
/// or R through these embeddings.
#[derive(Clone, Debug)]
pub struct StarMap {
    left: TransversalAnalysis,
    right: TransversalAnalysis,
    core: FiniteSemigroup,
    core_data: AdequateData,
    left_embed: Vec<usize>,
    right_embed: Vec<usize>,
    left_core: Vec<Option<usize>>,
    right_core: Vec<Option<usize>>,
    values: Vec<usize>,
}

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::StarMapInvalid(msg.into())
}

fn check_embedding(
    side: &str,
    core: &FiniteSemigroup,
    core_data: &AdequateData,
    part: &TransversalAnalysis,
    embed: &[usize],
) -> Result<Vec<Option<usize>>, ConstructionError> {
    let target = part.parent();
    if embed.len() != core.order() {
        return Err(invalid(format!("{side} embedding has {} entries for {} core elements", embed.len(), core.order())));
    }
    if let Some(&bad) = embed.iter().find(|&&x| x >= target.order()) {
        return Err(invalid(format!("{side} embedding value {bad} out of range")));
    }
    let mut back = vec![None; target.order()];
    for (s, &x) in embed.iter().enumerate() {
        if back[x].replace(s).is_some() {
            return Err(invalid(format!("{side} embedding is not injective at {x}")));
        }
    }
    let image = ElementSubset::from_indices(target.order(), embed.iter().copied()).expect("in range");
    if &image != part.transversal() {
        return Err(invalid(format!("{side} embedding image {image} is not the transversal {}", part.transversal())));
    }
    if let Some((a, b)) = core.homomorphism_witness(target, embed) {
        return Err(invalid(format!("{side} embedding is not a homomorphism at ({a},{b})")));
    }
    for s in core.elements() {
        if part.plus(embed[s]) != embed[core_data.plus(s)] || part.star(embed[s]) != embed[core_data.star(s)] {
            return Err(invalid(format!("{side} embedding does not preserve the starred idempotents of {s}")));
        }
    }
    Ok(back)
}

impl StarMap {
    /// Validates the data: L is left adequate and R right adequate, each with
    /// a quasi-ideal transversal; `core` is adequate and embeds
    /// isomorphically onto both transversals, respecting a⁺ and a*; `values`
    /// is indexed by `a * |L| + x` and lies in the core.
    pub fn new(
        left: TransversalAnalysis,
        right: TransversalAnalysis,
        core: FiniteSemigroup,
        left_embed: Vec<usize>,
        right_embed: Vec<usize>,
        values: Vec<usize>,
    ) -> Result<StarMap, ConstructionError> {
        if !left.quasi_ideal() || !right.quasi_ideal() {
            return Err(invalid("the transversal of L or R is not a quasi-ideal"));
        }
        if !left_adequate_equivalences(&left)?.value {
            return Err(invalid("L is not left adequate"));
        }
        if !right_adequate_equivalences(&right)?.value {
            return Err(invalid("R is not right adequate"));
        }
        if !is_adequate(&core).map_err(TransversalError::from)? {
            return Err(invalid("the core semigroup is not adequate"));
        }
        let core_data = AdequateData::new(&core).map_err(TransversalError::from)?;
        let left_core = check_embedding("left", &core, &core_data, &left, &left_embed)?;
        let right_core = check_embedding("right", &core, &core_data, &right, &right_embed)?;
        let expected = left.parent().order() * right.parent().order();
        if values.len() != expected {
            return Err(invalid(format!("star table has {} entries, expected {expected}", values.len())));
        }
        if let Some(&bad) = values.iter().find(|&&v| v >= core.order()) {
            return Err(invalid(format!("star value {bad} is not a core element")));
        }
        Ok(StarMap { left, right, core, core_data, left_embed, right_embed, left_core, right_core, values })
    }

    /// The same data with a different star table.
    pub fn with_values(&self, values: Vec<usize>) -> Result<StarMap, ConstructionError> {
        if values.len() != self.values.len() {
            return Err(invalid(format!("star table has {} entries, expected {}", values.len(), self.values.len())));
        }
        if let Some(&bad) = values.iter().find(|&&v| v >= self.core.order()) {
            return Err(invalid(format!("star value {bad} is not a core element")));
        }
        Ok(StarMap { values, ..self.clone() })
    }

    pub fn left(&self) -> &TransversalAnalysis {
        &self.left
    }

    pub fn right(&self) -> &TransversalAnalysis {
        &self.right
    }

    pub fn left_semigroup(&self) -> &FiniteSemigroup {
        self.left.parent()
    }

    pub fn right_semigroup(&self) -> &FiniteSemigroup {
        self.right.parent()
    }

    pub fn core(&self) -> &FiniteSemigroup {
        &self.core
    }

    pub fn core_data(&self) -> &AdequateData {
        &self.core_data
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// a ∗ x as a core element.
    pub fn star(&self, a: usize, x: usize) -> usize {
        self.values[a * self.left.parent().order() + x]
    }

    /// The copy of core element `s` in L.
    pub fn to_left(&self, s: usize) -> usize {
        self.left_embed[s]
    }

    /// The copy of core element `s` in R.
    pub fn to_right(&self, s: usize) -> usize {
        self.right_embed[s]
    }

    /// The core element an element of L's transversal stands for.
    pub fn left_core(&self, x: usize) -> Option<usize> {
        self.left_core[x]
    }

    pub fn right_core(&self, a: usize) -> Option<usize> {
        self.right_core[a]
    }

    /// x̄ for x ∈ L, as a core element.
    pub fn left_bar(&self, x: usize) -> usize {
        self.left_core[self.left.bar(x)].expect("bar lies in the transversal")
    }

    /// ā for a ∈ R, as a core element.
    pub fn right_bar(&self, a: usize) -> usize {
        self.right_core[self.right.bar(a)].expect("bar lies in the transversal")
    }

    pub fn left_label(&self, x: usize) -> String {
        self.left.parent().label(x)
    }

    pub fn right_label(&self, a: usize) -> String {
        self.right.parent().label(a)
    }

    pub fn core_label(&self, s: usize) -> String {
        self.core.label(s)
    }

    /// f_x for x ∈ L as a core element, when it lies in the transversal.
    fn left_f_core(&self, x: usize) -> Option<usize> {
        self.left_core[self.left.f(x)]
    }

    fn right_e_core(&self, a: usize) -> Option<usize> {
        self.right_core[self.right.e(a)]
    }

    /// Every (a, x) ∈ R × L in table order.
    pub(crate) fn domain(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let nl = self.left.parent().order();
        (0..self.right.parent().order()).flat_map(move |a| (0..nl).map(move |x| (a, x)))
    }
}

/// Reads the star map a∗x = ax off a quasi-ideal adequate transversal,
/// with L and R split off as standalone semigroups.
pub fn extract_star(a: &TransversalAnalysis) -> Result<StarMap, ConstructionError> {
    extract_with_parts(a).map(|(sm, _)| sm)
}

fn inconsistent(msg: String) -> ConstructionError {
    ConstructionError::Transversal(TransversalError::InternalInconsistency(msg))
}

pub(crate) fn extract_with_parts(a: &TransversalAnalysis) -> Result<(StarMap, QuasiIdealParts), ConstructionError> {
    let parts = quasi_ideal_parts(a).map_err(|e| match e {
        TransversalError::NotQuasiIdeal => ConstructionError::NotQuasiIdeal,
        other => ConstructionError::Transversal(other),
    })?;
    let s = a.parent();
    let sub = a.transversal_semigroup();
    let core = sub.semigroup.clone();
    let into = |part: &crate::Restriction| -> Vec<usize> {
        (0..core.order()).map(|m| part.local(sub.lift(m)).expect("transversal lies in L and R")).collect()
    };
    let (left_embed, right_embed) = (into(&parts.left), into(&parts.right));
    let mut values = Vec::with_capacity(parts.left.semigroup.order() * parts.right.semigroup.order());
    for r in parts.right.semigroup.elements() {
        for l in parts.left.semigroup.elements() {
            let p = s.mul(parts.right.lift(r), parts.left.lift(l));
            let v = sub
                .local(p)
                .ok_or_else(|| inconsistent(format!("product of R-element {r} and L-element {l} leaves S⁰")))?;
            values.push(v);
        }
    }
    let sm = StarMap::new(
        parts.left_analysis.clone(),
        parts.right_analysis.clone(),
        core,
        left_embed,
        right_embed,
        values,
    )
    .map_err(|e| inconsistent(format!("extracted star map is invalid: {e}")))?;
    if let Some(f) = check_star_axioms(&sm, false).first_failure() {
        return Err(inconsistent(format!("extracted star map fails {f}")));
    }
    Ok((sm, parts))
}

/// Exhaustive check of the star map axioms; axiom (3) is included when
/// `require_multiplicative` is set.
pub fn check_star_axioms(sm: &StarMap, require_multiplicative: bool) -> CheckReport {
    let (l, r, core) = (sm.left_semigroup(), sm.right_semigroup(), sm.core());
    let mut report = CheckReport::new();

    report.check(
        STAR_AXIOM_1,
        first(sm.domain(), |(b, y)| {
            if sm.left_bar(y) != sm.right_bar(b) {
                return None;
            }
            first(r.elements(), |a| {
                let left_factor = r.mul(sm.to_right(sm.star(a, y)), sm.right.f(b));
                let e_y = sm.left.e(y);
                first(l.elements(), |z| {
                    let lhs = sm.star(left_factor, z);
                    let rhs = sm.star(a, l.mul(e_y, sm.to_left(sm.star(b, z))));
                    (lhs != rhs).then(|| {
                        format!(
                            "a={} b={} y={} z={}: {} vs {}",
                            sm.right_label(a),
                            sm.right_label(b),
                            sm.left_label(y),
                            sm.left_label(z),
                            sm.core_label(lhs),
                            sm.core_label(rhs)
                        )
                    })
                })
            })
        }),
    );

    report.check(
        STAR_AXIOM_2,
        first(core.elements(), |s| {
            first(l.elements(), |x| {
                let product = sm.left_core(l.mul(sm.to_left(s), x));
                (product != Some(sm.star(sm.to_right(s), x))).then(|| {
                    format!("a={} x={}: star {}", sm.core_label(s), sm.left_label(x), sm.core_label(sm.star(sm.to_right(s), x)))
                })
            })
            .or_else(|| {
                first(r.elements(), |a| {
                    let product = sm.right_core(r.mul(a, sm.to_right(s)));
                    (product != Some(sm.star(a, sm.to_left(s)))).then(|| {
                        format!("a={} x={}: star {}", sm.right_label(a), sm.core_label(s), sm.core_label(sm.star(a, sm.to_left(s))))
                    })
                })
            })
        }),
    );

    if require_multiplicative {
        let (el, er) = (l.idempotents(), r.idempotents());
        report.check(
            STAR_AXIOM_3,
            first(er.iter(), |e| {
                first(el.iter(), |f| {
                    let v = sm.star(e, f);
                    (!core.is_idempotent(v)).then(|| {
                        format!("e={} f={}: {}", sm.right_label(e), sm.left_label(f), sm.core_label(v))
                    })
                })
            }),
        );
    }
    report
}

/// The identities every axiom-satisfying star map obeys and which the
/// construction of the spined product depends on.
pub fn star_identities(sm: &StarMap) -> CheckReport {
    let (l, r, core) = (sm.left_semigroup(), sm.right_semigroup(), sm.core());
    let cd = sm.core_data();
    let mut report = CheckReport::new();

    report.check(
        "star cancels on the right: a*x = b*x implies a*e_x = b*e_x",
        first(sm.domain(), |(a, x)| {
            first(r.elements(), |b| {
                (sm.star(a, x) == sm.star(b, x) && sm.star(a, sm.left.e(x)) != sm.star(b, sm.left.e(x))).then(|| {
                    format!("a={} b={} x={}", sm.right_label(a), sm.right_label(b), sm.left_label(x))
                })
            })
        }),
    );
    report.check(
        "star cancels on the left: a*x = a*y implies f_a*x = f_a*y",
        first(sm.domain(), |(a, x)| {
            first(l.elements(), |y| {
                let fa = sm.right.f(a);
                (sm.star(a, x) == sm.star(a, y) && sm.star(fa, x) != sm.star(fa, y)).then(|| {
                    format!("a={} x={} y={}", sm.right_label(a), sm.left_label(x), sm.left_label(y))
                })
            })
        }),
    );

    let (el, er) = (l.idempotents(), r.idempotents());
    report.check(
        "star is absorbed by the outer idempotents: ag*hx = e_a(ag*hx)f_x",
        first(sm.domain(), |(a, x)| {
            let (ea, fx) = match (sm.right_e_core(a), sm.left_f_core(x)) {
                (Some(ea), Some(fx)) => (ea, fx),
                _ => {
                    return Some(format!(
                        "e_a or f_x outside the transversal for a={} x={}",
                        sm.right_label(a),
                        sm.left_label(x)
                    ))
                }
            };
            let want_g = cd.star(sm.right_bar(a));
            let want_h = cd.plus(sm.left_bar(x));
            first(er.iter().filter(|&g| sm.right_bar(g) == want_g), |g| {
                first(el.iter().filter(|&h| sm.left_bar(h) == want_h), |h| {
                    let v = sm.star(r.mul(a, g), l.mul(h, x));
                    (core.mul3(ea, v, fx) != v).then(|| {
                        format!(
                            "a={} x={} g={} h={}",
                            sm.right_label(a),
                            sm.left_label(x),
                            sm.right_label(g),
                            sm.left_label(h)
                        )
                    })
                })
            })
        }),
    );

    report.check(
        "starred idempotents of star products: e_(a*y) = e_((a*y)f_b) and f_(e_y(b*z)) = f_(b*z)",
        first(sm.domain(), |(b, y)| {
            if sm.left_bar(y) != sm.right_bar(b) {
                return None;
            }
            first(r.elements(), |a| {
                let ay = sm.star(a, y);
                let lhs = sm.to_right(cd.plus(ay));
                let rhs = sm.right.e(r.mul(sm.to_right(ay), sm.right.f(b)));
                (lhs != rhs).then(|| format!("a={} b={} y={}", sm.right_label(a), sm.right_label(b), sm.left_label(y)))
            })
            .or_else(|| {
                first(l.elements(), |z| {
                    let bz = sm.star(b, z);
                    let lhs = sm.left.f(l.mul(sm.left.e(y), sm.to_left(bz)));
                    let rhs = sm.to_left(cd.star(bz));
                    (lhs != rhs).then(|| format!("b={} y={} z={}", sm.right_label(b), sm.left_label(y), sm.left_label(z)))
                })
            })
        }),
    );

    let green = sm.left.green();
    report.check(
        "starred classes in L: (a*e_x) R* (a*x) L* (f_a*x)",
        first(sm.domain(), |(a, x)| {
            let mid = sm.to_left(sm.star(a, x));
            let left = sm.to_left(sm.star(a, sm.left.e(x)));
            let right = sm.to_left(sm.star(sm.right.f(a), x));
            (!green.r_star.related(left, mid) || !green.l_star.related(mid, right))
                .then(|| format!("a={} x={}", sm.right_label(a), sm.left_label(x)))
        }),
    );
    report
}
