//! Verification reports: every structural claim checked on one instance,
//! one row per check, each row tagged with the anchor it belongs to.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{is_abundant, is_adequate, is_left_adequate, is_star_subsemigroup, is_star_subsemigroup_by_restriction};
use crate::construction::{
    self as c, build_regular_spined_product, build_spined_product, chen_axioms, chen_construct, chen_data_from,
    chen_round_trip, check_star_axioms, decompose_and_rebuild, inverse_transversal_analysis, left_inverse_chen,
    star_identities, ChenData, Rebuild, SpinedProduct, StarMap,
};
use crate::families::corpus;
use crate::green::{check_e_lstar, check_e_rstar, l_star_definitional, r_star_definitional, GreenData};
use crate::iso::find_isomorphism;
use crate::relation::EquivRelation;
use crate::report::{first, CheckReport};
use crate::samples::{chen_samples, left_inverse_samples, star_map_samples, LeftInverseSample};
use crate::search::search_transversals;
use crate::semigroup::FiniteSemigroup;
use crate::subset::ElementSubset;
use crate::transversal::{
    analyze_transversal, basic_properties, decomposition_table, is_multiplicative, is_quasi_ideal,
    l_set_characterizations, left_adequate_equivalences, quasi_ideal_parts, r_set_characterizations,
    right_adequate_equivalences, verify_product_formulas, TransversalAnalysis, TransversalError,
};

pub const STARRED_RELATIONS: &str = "starred-relations";
pub const ADEQUACY_CRITERIA: &str = "adequacy-criteria";
pub const ADEQUATE_TRANSVERSAL: &str = "adequate-transversal";
pub const FACTORISATION_PROPERTIES: &str = "factorisation-properties";
pub const R_AND_L_SETS: &str = "r-and-l-set-descriptions";
pub const QUASI_IDEAL_CRITERIA: &str = "quasi-ideal-criteria";
pub const MULTIPLICATIVE_HIERARCHY: &str = "multiplicative-hierarchy";
pub const PRODUCT_FORMULAS: &str = "product-formulas";
pub const LEFT_ADEQUATE_EQUIVALENCES: &str = "left-adequate-equivalences";
pub const RIGHT_ADEQUATE_EQUIVALENCES: &str = "right-adequate-equivalences";
pub const LEFT_AND_RIGHT_PARTS: &str = "left-and-right-parts";
pub const STAR_AXIOMS: &str = "star-axioms";
pub const STAR_IDENTITIES: &str = "star-identities";
pub const SPINED_PRODUCT: &str = "spined-product";
pub const MULTIPLICATIVE_STAR_CONDITION: &str = "multiplicative-star-condition";
pub const STRUCTURE_ROUND_TRIP: &str = "structure-round-trip";
pub const PRODUCT_IDEMPOTENTS: &str = "product-idempotents";
pub const PAIR_IDENTITY: &str = "pair-identity";
pub const PRODUCT_PARTS: &str = "product-parts";
pub const REBUILD_STABILITY: &str = "rebuild-stability";
pub const CHEN_AXIOMS: &str = "chen-axioms";
pub const CHEN_CONSTRUCTION: &str = "chen-construction";
pub const INVERSE_TRANSVERSAL: &str = "inverse-transversal";
pub const REGULAR_SPINED_PRODUCT: &str = "regular-spined-product";
pub const LEFT_INVERSE_CHEN: &str = "left-inverse-chen";

/// Every anchor a report row can carry, in report order.
pub const ALL_ANCHORS: &[&str] = &[
    STARRED_RELATIONS,
    ADEQUACY_CRITERIA,
    ADEQUATE_TRANSVERSAL,
    FACTORISATION_PROPERTIES,
    R_AND_L_SETS,
    QUASI_IDEAL_CRITERIA,
    MULTIPLICATIVE_HIERARCHY,
    PRODUCT_FORMULAS,
    LEFT_ADEQUATE_EQUIVALENCES,
    RIGHT_ADEQUATE_EQUIVALENCES,
    LEFT_AND_RIGHT_PARTS,
    STAR_AXIOMS,
    STAR_IDENTITIES,
    SPINED_PRODUCT,
    MULTIPLICATIVE_STAR_CONDITION,
    STRUCTURE_ROUND_TRIP,
    PRODUCT_IDEMPOTENTS,
    PAIR_IDENTITY,
    PRODUCT_PARTS,
    REBUILD_STABILITY,
    CHEN_AXIOMS,
    CHEN_CONSTRUCTION,
    INVERSE_TRANSVERSAL,
    REGULAR_SPINED_PRODUCT,
    LEFT_INVERSE_CHEN,
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub check: String,
    pub anchor: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance: String,
    pub rows: Vec<ReportRow>,
}

impl VerificationReport {
    pub fn new(instance: impl Into<String>) -> Self {
        VerificationReport { instance: instance.into(), rows: Vec::new() }
    }

    pub fn row(&mut self, anchor: &str, check: impl Into<String>, failure: Option<String>) {
        self.rows.push(ReportRow { check: check.into(), anchor: anchor.to_string(), pass: failure.is_none(), witness: failure });
    }

    fn pass(&mut self, anchor: &str, check: impl Into<String>) {
        self.row(anchor, check, None);
    }

    fn fail(&mut self, anchor: &str, check: impl Into<String>, witness: impl Into<String>) {
        self.row(anchor, check, Some(witness.into()));
    }

    /// One row per outcome of `report`.
    pub fn add(&mut self, anchor: &str, report: &CheckReport) {
        for o in &report.outcomes {
            let witness = (!o.passed).then(|| o.witness.clone().unwrap_or_else(|| "no witness recorded".into()));
            self.row(anchor, o.name.clone(), witness);
        }
    }

    /// Rows for the named outcomes of `report`; a missing name is a failure.
    fn pick(&mut self, anchor: &str, report: &CheckReport, names: &[&str]) {
        for &name in names {
            match report.get(name) {
                Some(o) => self.row(anchor, name, (!o.passed).then(|| o.witness.clone().unwrap_or_default())),
                None => self.fail(anchor, name, "check was not run"),
            }
        }
    }

    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.rows.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn rows_for<'a>(&'a self, anchor: &'a str) -> impl Iterator<Item = &'a ReportRow> {
        self.rows.iter().filter(move |r| r.anchor == anchor)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {}", self.instance)?;
        for r in &self.rows {
            match &r.witness {
                None => writeln!(f, "pass  {:<30} {}", r.anchor, r.check)?,
                Some(w) => writeln!(f, "FAIL  {:<30} {}  [{w}]", r.anchor, r.check)?,
            }
        }
        writeln!(f, "{} passed, {} failed", self.passed(), self.failed())
    }
}

fn transversal_error(e: &TransversalError) -> String {
    format!("{e:?} ({e})")
}

fn relation_mismatch(s: &FiniteSemigroup, a: &EquivRelation, b: &EquivRelation) -> Option<String> {
    first(s.elements(), |x| {
        first(s.elements(), |y| (a.related(x, y) != b.related(x, y)).then(|| format!("{} {}", s.label(x), s.label(y))))
    })
}

/// Checks about S alone: starred relations against their definitions, and
/// the adequacy classification.
pub fn semigroup_rows(s: &FiniteSemigroup, out: &mut VerificationReport) {
    let g = GreenData::new(s);
    let lab = |x: usize| s.label(x);
    out.row(STARRED_RELATIONS, "R* agrees with its definitional quantifier", relation_mismatch(s, &g.r_star, &r_star_definitional(s)));
    out.row(STARRED_RELATIONS, "L* agrees with its definitional quantifier", relation_mismatch(s, &g.l_star, &l_star_definitional(s)));
    let regular = s.regular_elements();
    let on_regular = |star: &EquivRelation, plain: &EquivRelation| {
        first(regular.iter(), |x| {
            first(regular.iter(), |y| (star.related(x, y) != plain.related(x, y)).then(|| format!("{} {}", lab(x), lab(y))))
        })
    };
    out.row(STARRED_RELATIONS, "R* = ℛ on regular elements", on_regular(&g.r_star, &g.r));
    out.row(STARRED_RELATIONS, "L* = ℒ on regular elements", on_regular(&g.l_star, &g.l));
    out.row(
        STARRED_RELATIONS,
        "ℛ ⊆ R* and ℒ ⊆ L*",
        (!(g.r.is_finer_than(&g.r_star) && g.l.is_finer_than(&g.l_star))).then(|| "a Green class is split".to_string()),
    );
    let congruence = |rel: &EquivRelation, left: bool| {
        first(s.elements(), |a| {
            first(s.elements().filter(|&b| rel.related(a, b)), |b| {
                first(s.elements(), |c| {
                    let (p, q) = if left { (s.mul(c, a), s.mul(c, b)) } else { (s.mul(a, c), s.mul(b, c)) };
                    (!rel.related(p, q)).then(|| format!("a={} b={} c={}", lab(a), lab(b), lab(c)))
                })
            })
        })
    };
    out.row(STARRED_RELATIONS, "R* is a left congruence", congruence(&g.r_star, true));
    out.row(STARRED_RELATIONS, "L* is a right congruence", congruence(&g.l_star, false));
    let e_test = |rel: &EquivRelation, test: &dyn Fn(usize, usize) -> Option<bool>| {
        first(s.idempotents().iter(), |e| {
            first(s.elements(), |a| (test(e, a) != Some(rel.related(e, a))).then(|| format!("e={} a={}", lab(e), lab(a))))
        })
    };
    out.row(
        STARRED_RELATIONS,
        "e R* a by the cancellation test for idempotents exactly when R* relates them",
        e_test(&g.r_star, &|e, a| check_e_rstar(s, e, a).ok()),
    );
    out.row(
        STARRED_RELATIONS,
        "e L* a by the cancellation test for idempotents exactly when L* relates them",
        e_test(&g.l_star, &|e, a| check_e_lstar(s, e, a).ok()),
    );

    match is_adequate(s) {
        Ok(adequate) => {
            out.pass(ADEQUACY_CRITERIA, "adequacy by commuting idempotents agrees with unique starred idempotents and regular ⟨E⟩");
            out.row(
                ADEQUACY_CRITERIA,
                "adequate semigroups are left and right adequate",
                (adequate && !(is_left_adequate(s) && crate::classify::is_right_adequate(s))).then(|| "one side fails".to_string()),
            );
        }
        Err(e) => out.fail(ADEQUACY_CRITERIA, "adequacy by commuting idempotents agrees with unique starred idempotents and regular ⟨E⟩", e.to_string()),
    }
    out.row(
        ADEQUACY_CRITERIA,
        "regular semigroups are abundant",
        (s.is_regular() && !is_abundant(s)).then(|| "regular but not abundant".to_string()),
    );
}

/// Checks about S with a transversal, following every construction the
/// transversal supports.
pub fn transversal_rows(a: &TransversalAnalysis, out: &mut VerificationReport) {
    let s = a.parent();
    let s0 = a.transversal();
    out.pass(ADEQUATE_TRANSVERSAL, "S⁰ is an adequate transversal of S");
    out.row(
        ADEQUATE_TRANSVERSAL,
        "every element has exactly one factorisation",
        match decomposition_table(s, s0) {
            Ok(table) => first(table.iter().enumerate(), |(x, d)| (d.len() != 1).then(|| format!("{} has {} factorisations", s.label(x), d.len()))),
            Err(e) => Some(transversal_error(&e)),
        },
    );
    out.row(
        ADEQUATE_TRANSVERSAL,
        "the *-subsemigroup criterion agrees with restriction of the starred relations",
        match (is_star_subsemigroup(s, s0), is_star_subsemigroup_by_restriction(s, s0)) {
            (Ok(true), Ok(true)) => None,
            (p, q) => Some(format!("criterion {p:?}, restriction {q:?}")),
        },
    );
    out.add(FACTORISATION_PROPERTIES, &basic_properties(a));
    out.add(R_AND_L_SETS, &r_set_characterizations(a));
    out.add(R_AND_L_SETS, &l_set_characterizations(a));
    out.row(
        QUASI_IDEAL_CRITERIA,
        "S⁰SS⁰ ⊆ S⁰, ΛI ⊆ S⁰ and RL ⊆ S⁰ agree",
        match is_quasi_ideal(a) {
            Ok(v) => (v != a.quasi_ideal()).then(|| "disagrees with the recorded flag".to_string()),
            Err(e) => Some(transversal_error(&e)),
        },
    );
    out.row(
        MULTIPLICATIVE_HIERARCHY,
        "multiplicative exactly when weakly multiplicative and quasi-ideal",
        match is_multiplicative(a) {
            Ok(v) => (v != a.multiplicative() || v != (a.weakly_multiplicative() && a.quasi_ideal()))
                .then(|| format!("multiplicative {v}, weakly {}, quasi-ideal {}", a.weakly_multiplicative(), a.quasi_ideal())),
            Err(e) => Some(transversal_error(&e)),
        },
    );
    out.add(PRODUCT_FORMULAS, &verify_product_formulas(a));
    side_equivalences(a, out);

    if !a.quasi_ideal() {
        return;
    }
    let parts = match quasi_ideal_parts(a) {
        Ok(p) => p,
        Err(e) => {
            out.fail(LEFT_AND_RIGHT_PARTS, "L and R are subsemigroups with S⁰ a quasi-ideal adequate transversal of each", transversal_error(&e));
            return;
        }
    };
    out.pass(LEFT_AND_RIGHT_PARTS, "L and R are subsemigroups with S⁰ a quasi-ideal adequate transversal of each");
    let five = |r: Result<crate::transversal::EquivalenceReport, TransversalError>| match r {
        Ok(eq) => first(eq.conditions.iter(), |&(name, v)| (!v).then(|| format!("{name} fails"))),
        Err(e) => Some(transversal_error(&e)),
    };
    out.row(LEFT_AND_RIGHT_PARTS, "L is left adequate", five(left_adequate_equivalences(&parts.left_analysis)));
    out.row(LEFT_AND_RIGHT_PARTS, "R is right adequate", five(right_adequate_equivalences(&parts.right_analysis)));

    match decompose_and_rebuild(a) {
        Ok(rb) => rebuild_rows(a, &rb, out),
        Err(e) => out.fail(STRUCTURE_ROUND_TRIP, "S is rebuilt as the spined product of L and R", e.to_string()),
    }

    // Chen data exists on S itself when S is left adequate, and on L always
    let (chen_source, suffix) = if is_left_adequate(s) { (a, "") } else { (&parts.left_analysis, " (on L)") };
    match chen_data_from(chen_source) {
        Ok(d) => {
            let mut axioms = chen_axioms(&d);
            for o in &mut axioms.outcomes {
                o.name.push_str(suffix);
            }
            out.add(CHEN_AXIOMS, &axioms);
        }
        Err(e) => out.fail(CHEN_AXIOMS, format!("Chen data is read off{suffix}"), e.to_string()),
    }
    match chen_round_trip(chen_source) {
        Ok(p) => {
            let mut checks = p.checks().clone();
            checks.check(
                "factorisation identities hold in T",
                basic_properties(p.analysis()).first_failure(),
            );
            for o in &mut checks.outcomes {
                o.name.push_str(suffix);
            }
            out.add(CHEN_CONSTRUCTION, &checks);
        }
        Err(e) => out.fail(CHEN_CONSTRUCTION, format!("x ↦ (e_x, x̄) is an isomorphism onto T{suffix}"), e.to_string()),
    }
}

fn side_equivalences(a: &TransversalAnalysis, out: &mut VerificationReport) {
    let s = a.parent();
    match left_adequate_equivalences(a) {
        Ok(eq) => {
            out.pass(LEFT_ADEQUATE_EQUIVALENCES, format!("the five left adequate conditions agree (all {})", eq.value));
            if eq.value {
                out.row(
                    LEFT_ADEQUATE_EQUIVALENCES,
                    "f_x = f_x̄ and x = e_x x̄",
                    first(s.elements(), |x| {
                        (a.f(x) != a.f(a.bar(x)) || s.mul(a.e(x), a.bar(x)) != x).then(|| s.label(x))
                    }),
                );
            }
        }
        Err(e) => out.fail(LEFT_ADEQUATE_EQUIVALENCES, "the five left adequate conditions agree", transversal_error(&e)),
    }
    match right_adequate_equivalences(a) {
        Ok(eq) => {
            out.pass(RIGHT_ADEQUATE_EQUIVALENCES, format!("the five right adequate conditions agree (all {})", eq.value));
            if eq.value {
                out.row(
                    RIGHT_ADEQUATE_EQUIVALENCES,
                    "e_x = e_x̄ and x = x̄ f_x",
                    first(s.elements(), |x| {
                        (a.e(x) != a.e(a.bar(x)) || s.mul(a.bar(x), a.f(x)) != x).then(|| s.label(x))
                    }),
                );
            }
        }
        Err(e) => out.fail(RIGHT_ADEQUATE_EQUIVALENCES, "the five right adequate conditions agree", transversal_error(&e)),
    }
}

/// Rows shared by every successfully built spined product.
fn product_rows(sm: &StarMap, t: &SpinedProduct, out: &mut VerificationReport) {
    let checks = t.checks();
    out.pass(SPINED_PRODUCT, "T is abundant with the diagonal a quasi-ideal adequate transversal isomorphic to S⁰");
    out.pick(SPINED_PRODUCT, checks, &[c::SPINED_STARRED, c::SPINED_FACTORISATION]);
    out.pick(PRODUCT_IDEMPOTENTS, checks, &[c::SPINED_IDEMPOTENTS]);
    out.pick(MULTIPLICATIVE_STAR_CONDITION, checks, &[c::AXIOM_3_MULTIPLICATIVE, c::AXIOM_3_PARTS]);
    let axioms = check_star_axioms(sm, false);
    out.pick(STAR_AXIOMS, &axioms, &[c::STAR_AXIOM_1, c::STAR_AXIOM_2]);
    out.add(STAR_IDENTITIES, &star_identities(sm));

    match decompose_and_rebuild(t.analysis()) {
        Ok(again) => out.row(
            REBUILD_STABILITY,
            "rebuilding T from its own diagonal gives a semigroup isomorphic to T",
            find_isomorphism(again.product.semigroup(), t.semigroup()).is_none().then(|| "no isomorphism found".to_string()),
        ),
        Err(e) => out.fail(REBUILD_STABILITY, "rebuilding T from its own diagonal gives a semigroup isomorphic to T", e.to_string()),
    }

    let (l, r, core) = (sm.left_semigroup(), sm.right_semigroup(), sm.core());
    if l.is_regular() && r.is_regular() && core.is_inverse() {
        match build_regular_spined_product(sm) {
            Ok(reg) => {
                out.pick(REGULAR_SPINED_PRODUCT, reg.checks(), &[c::REGULAR_AXIOM_1, c::REGULAR_PAIRING, c::REGULAR_WITNESS]);
                out.row(
                    REGULAR_SPINED_PRODUCT,
                    "the regular product agrees with the general one",
                    (reg.semigroup().rows() != t.semigroup().rows()).then(|| "tables differ".to_string()),
                );
                let axiom_3 = check_star_axioms(sm, true).passed(c::STAR_AXIOM_3) == Some(true);
                out.row(
                    REGULAR_SPINED_PRODUCT,
                    "axiom (3) makes T⁰ a multiplicative inverse transversal",
                    (axiom_3 && !(reg.analysis().multiplicative() && reg.semigroup().is_regular()))
                        .then(|| "T⁰ is not multiplicative".to_string()),
                );
            }
            Err(e) => out.fail(REGULAR_SPINED_PRODUCT, "the regular spined product is built", e.to_string()),
        }
    }
}

fn rebuild_rows(a: &TransversalAnalysis, rb: &Rebuild, out: &mut VerificationReport) {
    let checks = rb.product.checks();
    out.pick(STRUCTURE_ROUND_TRIP, checks, &[c::ISO_BIJECTION, c::ISO_HOMOMORPHISM, c::LR_COVERS]);
    out.pick(PRODUCT_IDEMPOTENTS, checks, &[c::IDEMPOTENTS_FROM_SOURCE]);
    out.pick(PAIR_IDENTITY, checks, &[c::PAIR_IDENTITY]);
    out.pick(PRODUCT_PARTS, checks, &[c::PARTS_R, c::PARTS_L, c::PARTS_I, c::PARTS_LAMBDA]);
    let axiom_3 = check_star_axioms(&rb.star_map, true).passed(c::STAR_AXIOM_3) == Some(true);
    out.row(
        MULTIPLICATIVE_STAR_CONDITION,
        "axiom (3) holds for the extracted star map exactly when S⁰ is multiplicative in S",
        (axiom_3 != a.multiplicative()).then(|| format!("axiom (3) {axiom_3}, multiplicative {}", a.multiplicative())),
    );
    product_rows(&rb.star_map, &rb.product, out);

    let s = a.parent();
    if s.is_regular() && a.transversal_semigroup().semigroup.is_inverse() {
        left_inverse_rows_from(a, out);
    }
}

/// When S is left inverse with a quasi-ideal inverse transversal, I = E(S)
/// is a left normal band and S is rebuilt from it.
fn left_inverse_rows_from(a: &TransversalAnalysis, out: &mut VerificationReport) {
    let s = a.parent();
    if !is_left_adequate(s) {
        return;
    }
    let check = "S is rebuilt from the band of its idempotents";
    let band = match s.restrict(&s.idempotents()) {
        Ok(b) => b,
        Err((x, y)) => return out.fail(LEFT_INVERSE_CHEN, check, format!("E(S) is not closed: {} {}", s.label(x), s.label(y))),
    };
    let sub = a.transversal_semigroup();
    let embed: Vec<usize> = sub
        .semigroup
        .idempotents()
        .iter()
        .map(|e| band.local(sub.lift(e)).expect("transversal idempotents lie in E(S)"))
        .collect();
    match left_inverse_chen(&sub.semigroup, &band.semigroup, &embed) {
        Ok(li) => {
            out.add(LEFT_INVERSE_CHEN, &li.checks);
            out.row(
                LEFT_INVERSE_CHEN,
                check,
                find_isomorphism(li.product.semigroup(), s).is_none().then(|| "T is not isomorphic to S".to_string()),
            );
        }
        Err(e) => out.fail(LEFT_INVERSE_CHEN, check, e.to_string()),
    }
}

fn inverse_rows(s: &FiniteSemigroup, s0: &ElementSubset, out: &mut VerificationReport) {
    match inverse_transversal_analysis(s, s0) {
        Ok(rep) => {
            out.pass(INVERSE_TRANSVERSAL, "V(x) ∩ S⁰ has exactly one element for every x");
            out.add(INVERSE_TRANSVERSAL, &rep.checks);
        }
        Err(e) => out.fail(INVERSE_TRANSVERSAL, "V(x) ∩ S⁰ has exactly one element for every x", e.to_string()),
    }
}

/// The full suite on S with candidate transversal S⁰. Failures are rows,
/// never errors: an invalid transversal yields a single failing row naming
/// the reason.
pub fn run_verification_suite(instance: &str, s: &FiniteSemigroup, s0: &ElementSubset) -> VerificationReport {
    let mut out = VerificationReport::new(instance);
    semigroup_rows(s, &mut out);
    suite_after_semigroup(s, s0, &mut out);
    out
}

fn suite_after_semigroup(s: &FiniteSemigroup, s0: &ElementSubset, out: &mut VerificationReport) {
    let a = match analyze_transversal(s, s0) {
        Ok(a) => a,
        Err(e) => return out.fail(ADEQUATE_TRANSVERSAL, "S⁰ is an adequate transversal of S", transversal_error(&e)),
    };
    transversal_rows(&a, out);
    if s.is_regular() && a.transversal_semigroup().semigroup.is_inverse() {
        inverse_rows(s, s0, out);
    }
}

/// A star map given directly: its axioms, and everything about the
/// product when they hold.
pub fn run_star_map_suite(instance: &str, sm: &StarMap) -> VerificationReport {
    let mut out = VerificationReport::new(instance);
    let axioms = check_star_axioms(sm, false);
    out.pick(STAR_AXIOMS, &axioms, &[c::STAR_AXIOM_1, c::STAR_AXIOM_2]);
    match build_spined_product(sm) {
        Ok(t) => {
            product_rows(sm, &t, &mut out);
            semigroup_rows(t.semigroup(), &mut out);
            transversal_rows(t.analysis(), &mut out);
        }
        Err(e) => {
            out.add(STAR_IDENTITIES, &star_identities(sm));
            out.fail(SPINED_PRODUCT, "T is abundant with the diagonal a quasi-ideal adequate transversal isomorphic to S⁰", e.to_string());
        }
    }
    out
}

pub fn run_chen_suite(instance: &str, d: &ChenData) -> VerificationReport {
    let mut out = VerificationReport::new(instance);
    out.add(CHEN_AXIOMS, &chen_axioms(d));
    match chen_construct(d) {
        Ok(p) => {
            out.add(CHEN_CONSTRUCTION, p.checks());
            let t = p.semigroup();
            out.row(CHEN_CONSTRUCTION, "T is left adequate", (!is_left_adequate(t)).then(|| "T is not left adequate".to_string()));
            if d.extra_labels().is_empty() {
                out.row(
                    CHEN_CONSTRUCTION,
                    "with I = E⁰ the construction returns the core",
                    (!p.t0().is_full() || find_isomorphism(t, d.core()).is_none()).then(|| "T is not isomorphic to S⁰".to_string()),
                );
            }
            semigroup_rows(t, &mut out);
            transversal_rows(p.analysis(), &mut out);
        }
        Err(e) => out.fail(CHEN_CONSTRUCTION, "T is built from the data", e.to_string()),
    }
    out
}

pub fn run_left_inverse_chen_suite(sample: &LeftInverseSample) -> VerificationReport {
    let mut out = VerificationReport::new(sample.name.clone());
    match left_inverse_chen(&sample.core, &sample.band, &sample.embed) {
        Ok(li) => {
            out.add(LEFT_INVERSE_CHEN, &li.checks);
            let t = li.product.semigroup();
            semigroup_rows(t, &mut out);
            transversal_rows(li.product.analysis(), &mut out);
            inverse_rows(t, li.product.t0(), &mut out);
        }
        Err(e) => out.fail(LEFT_INVERSE_CHEN, "T is built from the band", e.to_string()),
    }
    out
}

/// Which kinds of instance a corpus run met.
pub const CASES: &[&str] =
    &["left adequate", "not left adequate", "regular with inverse transversal", "multiplicative", "not multiplicative", "Chen data"];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchorTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRun {
    pub reports: Vec<VerificationReport>,
    pub anchors: BTreeMap<String, AnchorTally>,
    pub cases: BTreeMap<String, usize>,
}

impl CorpusRun {
    fn from_reports(reports: Vec<VerificationReport>, cases: BTreeMap<String, usize>) -> Self {
        let mut anchors: BTreeMap<String, AnchorTally> =
            ALL_ANCHORS.iter().map(|a| (a.to_string(), AnchorTally::default())).collect();
        for row in reports.iter().flat_map(|r| &r.rows) {
            let tally = anchors.entry(row.anchor.clone()).or_default();
            if row.pass {
                tally.passed += 1;
            } else {
                tally.failed += 1;
            }
        }
        CorpusRun { reports, anchors, cases }
    }

    pub fn failed_rows(&self) -> usize {
        self.reports.iter().map(VerificationReport::failed).sum()
    }

    /// Anchors without a single passing row.
    pub fn uncovered_anchors(&self) -> Vec<&str> {
        ALL_ANCHORS.iter().copied().filter(|a| self.anchors.get(*a).is_none_or(|t| t.passed == 0)).collect()
    }

    pub fn uncovered_cases(&self) -> Vec<&str> {
        CASES.iter().copied().filter(|c| self.cases.get(*c).is_none_or(|&n| n == 0)).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.failed_rows() == 0 && self.uncovered_anchors().is_empty()
    }

    /// The per-anchor summary table followed by the totals.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{:<32} {:>7} {:>7}\n", "anchor", "passed", "failed"));
        for (anchor, t) in &self.anchors {
            out.push_str(&format!("{anchor:<32} {:>7} {:>7}\n", t.passed, t.failed));
        }
        for (case, n) in &self.cases {
            out.push_str(&format!("case {case}: {n}\n"));
        }
        let rows: usize = self.reports.iter().map(|r| r.rows.len()).sum();
        out.push_str(&format!(
            "{} reports, {rows} rows, {} failed, uncovered anchors: {}\n",
            self.reports.len(),
            self.failed_rows(),
            if self.uncovered_anchors().is_empty() { "none".to_string() } else { self.uncovered_anchors().join(", ") }
        ));
        out
    }
}

/// Every corpus semigroup with every transversal found by generator
/// search, followed by the hand-built star maps, Chen data and left normal
/// band samples. Instances run on separate threads; report order is fixed.
pub fn corpus_run(max_generators: usize) -> CorpusRun {
    let instances = corpus();
    let per_instance: Vec<(Vec<VerificationReport>, Vec<&'static str>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = instances
            .iter()
            .map(|(name, s)| scope.spawn(move || corpus_instance(name, s, max_generators)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("instance thread panicked")).collect()
    });

    let mut cases: BTreeMap<String, usize> = CASES.iter().map(|c| (c.to_string(), 0)).collect();
    let mut reports = Vec::new();
    for (r, hits) in per_instance {
        reports.extend(r);
        for h in hits {
            *cases.entry(h.to_string()).or_default() += 1;
        }
    }
    for (name, sm) in star_map_samples() {
        reports.push(run_star_map_suite(&name, &sm));
    }
    for (name, d) in chen_samples() {
        reports.push(run_chen_suite(&name, &d));
        *cases.entry("Chen data".into()).or_default() += 1;
    }
    for sample in left_inverse_samples() {
        reports.push(run_left_inverse_chen_suite(&sample));
        *cases.entry("Chen data".into()).or_default() += 1;
    }
    CorpusRun::from_reports(reports, cases)
}

fn corpus_instance(name: &str, s: &FiniteSemigroup, max_generators: usize) -> (Vec<VerificationReport>, Vec<&'static str>) {
    let mut base = VerificationReport::new(name);
    semigroup_rows(s, &mut base);
    let found = match search_transversals(s, max_generators) {
        Ok(f) => f,
        Err(e) => {
            base.fail(ADEQUATE_TRANSVERSAL, "transversal search completes", transversal_error(&e));
            return (vec![base], Vec::new());
        }
    };
    if found.is_empty() {
        return (vec![base], Vec::new());
    }
    let mut hits = Vec::new();
    let reports = found
        .iter()
        .map(|f| {
            let mut r = base.clone();
            r.instance = format!("{name} with transversal {}", f.transversal);
            transversal_rows(&f.analysis, &mut r);
            if s.is_regular() && f.analysis.transversal_semigroup().semigroup.is_inverse() {
                inverse_rows(s, &f.transversal, &mut r);
                hits.push("regular with inverse transversal");
            }
            hits.push(if is_left_adequate(s) { "left adequate" } else { "not left adequate" });
            if f.analysis.multiplicative() {
                hits.push("multiplicative");
            } else if f.analysis.quasi_ideal() {
                hits.push("not multiplicative");
            }
            r
        })
        .collect();
    (reports, hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{rectangular_band, semilattice_chain};
    use crate::samples::sandwich_star_map;

    #[test]
    fn rectangular_band_passes_everything() {
        let s = rectangular_band(3, 3).unwrap();
        let r = run_verification_suite("rect", &s, &ElementSubset::from_indices(9, [4]).unwrap());
        assert!(r.all_passed(), "{r}");
        assert!(r.rows_for(STRUCTURE_ROUND_TRIP).count() >= 3);
    }

    #[test]
    fn chain_is_left_adequate_everywhere() {
        let s = semilattice_chain(4).unwrap();
        let r = run_verification_suite("chain", &s, &ElementSubset::full(4));
        assert!(r.all_passed(), "{r}");
        assert!(r.rows.iter().any(|row| row.check == "the five left adequate conditions agree (all true)"));
    }

    #[test]
    fn missing_decomposition_is_named() {
        let s = rectangular_band(2, 2).unwrap();
        let r = run_verification_suite("rect", &s, &ElementSubset::from_indices(4, [0, 1]).unwrap());
        assert!(!r.all_passed());
        let fail = r.failures().next().unwrap();
        assert!(fail.witness.as_deref().unwrap().contains("NoDecomposition") || fail.witness.as_deref().unwrap().contains("NotAdequateSub"));
    }

    #[test]
    fn corrupted_star_map_fails_product_rows() {
        let sm = sandwich_star_map();
        let mut values = sm.values().to_vec();
        values[0] = 1;
        let r = run_star_map_suite("corrupt", &sm.with_values(values).unwrap());
        assert!(r.rows_for(STAR_AXIOMS).any(|row| !row.pass));
        assert!(r.rows_for(SPINED_PRODUCT).any(|row| !row.pass && row.witness.is_some()));
    }
}
