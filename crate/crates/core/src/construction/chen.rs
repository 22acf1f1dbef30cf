use crate::classify::{is_adequate, is_left_adequate, AdequateData};
use crate::report::{first, CheckReport};
use crate::semigroup::{FiniteSemigroup, SemigroupError};
use crate::subset::ElementSubset;
use crate::transversal::{analyze_transversal, left_adequate_equivalences, TransversalAnalysis, TransversalError};

use super::{assertion, require, ConstructionError};

pub const CHEN_ACTION: &str = "⊗ is a right action: (x⊗s)⊗t = x⊗st";
pub const CHEN_ACTION_ON_E0: &str = "E⁰ acts on itself by multiplication: e⊗s = es";
pub const CHEN_PROJECTION: &str = "φ maps into E⁰ and fixes E⁰";
pub const CHEN_PROJECTION_ACTS: &str = "x⊗xφ = x";
pub const CHEN_PROJECTION_EQUIVARIANT: &str = "(x⊗s)φ = (xφ)s";
pub const CHEN_STAR_1: &str = "Chen star (1): a(f*e)b = af*(e⊗b)";
pub const CHEN_STAR_2: &str = "Chen star (2): f*g = fg";
pub const CHEN_STAR_3: &str = "Chen star (3): eφ*e = eφ";

/// Data for building a left adequate semigroup around an adequate core S⁰:
/// a set I = E⁰ ∪ A acted on by E⁰ from the right, a projection φ : I → E⁰
/// and a map E⁰ × I → S⁰.
///
/// Elements of I are numbered with E⁰ first, in increasing core order,
/// followed by the extra elements A.
#[derive(Clone, Debug)]
pub struct ChenData {
    core: FiniteSemigroup,
    core_data: AdequateData,
    e0: Vec<usize>,
    e0_pos: Vec<Option<usize>>,
    extra_labels: Vec<String>,
    act: Vec<usize>,
    proj: Vec<usize>,
    star: Vec<usize>,
}

fn shape(witness: String) -> ConstructionError {
    ConstructionError::DataInvalid { axiom: "table shapes".into(), witness }
}

impl ChenData {
    /// `act[x * |E⁰| + k]` is x ⊗ (k-th idempotent), `proj[x]` is xφ as a
    /// core element, and `star[k * |I| + x]` is (k-th idempotent) ∗ x.
    ///
    /// Only shapes and ranges are checked here; the axioms are checked by
    /// [`chen_axioms`] and enforced by [`chen_construct`].
    pub fn new(
        core: FiniteSemigroup,
        extra_labels: Vec<String>,
        act: Vec<usize>,
        proj: Vec<usize>,
        star: Vec<usize>,
    ) -> Result<ChenData, ConstructionError> {
        if !is_adequate(&core).map_err(TransversalError::from)? {
            return Err(ConstructionError::DataInvalid {
                axiom: "the core is adequate".into(),
                witness: "core is not adequate".into(),
            });
        }
        let core_data = AdequateData::new(&core).map_err(TransversalError::from)?;
        let e0 = core.idempotents().to_vec();
        let mut e0_pos = vec![None; core.order()];
        for (k, &e) in e0.iter().enumerate() {
            e0_pos[e] = Some(k);
        }
        let ni = e0.len() + extra_labels.len();
        let ne = e0.len();
        if act.len() != ni * ne || proj.len() != ni || star.len() != ne * ni {
            return Err(shape(format!(
                "act {}, proj {}, star {} entries for |I| = {ni}, |E⁰| = {ne}",
                act.len(),
                proj.len(),
                star.len()
            )));
        }
        if let Some(v) = act.iter().find(|&&v| v >= ni) {
            return Err(shape(format!("act value {v} outside I")));
        }
        if let Some(v) = proj.iter().chain(&star).find(|&&v| v >= core.order()) {
            return Err(shape(format!("value {v} outside the core")));
        }
        Ok(ChenData { core, core_data, e0, e0_pos, extra_labels, act, proj, star })
    }

    pub fn core(&self) -> &FiniteSemigroup {
        &self.core
    }

    /// The idempotents of the core in increasing order; the k-th is element
    /// k of I.
    pub fn e0(&self) -> &[usize] {
        &self.e0
    }

    pub fn i_order(&self) -> usize {
        self.e0.len() + self.extra_labels.len()
    }

    /// x ⊗ s for the k-th idempotent s.
    pub fn act(&self, x: usize, k: usize) -> usize {
        self.act[x * self.e0.len() + k]
    }

    pub fn proj(&self, x: usize) -> usize {
        self.proj[x]
    }

    /// (k-th idempotent) ∗ x.
    pub fn star(&self, k: usize, x: usize) -> usize {
        self.star[k * self.i_order() + x]
    }

    pub fn act_table(&self) -> &[usize] {
        &self.act
    }

    pub fn proj_table(&self) -> &[usize] {
        &self.proj
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    pub fn extra_labels(&self) -> &[String] {
        &self.extra_labels
    }

    /// The same data with a different star table.
    pub fn with_star(&self, star: Vec<usize>) -> Result<ChenData, ConstructionError> {
        ChenData::new(self.core.clone(), self.extra_labels.clone(), self.act.clone(), self.proj.clone(), star)
    }

    /// Position in E⁰ of a core idempotent.
    pub fn e0_position(&self, s: usize) -> Option<usize> {
        self.e0_pos[s]
    }

    pub fn i_label(&self, x: usize) -> String {
        match self.e0.get(x) {
            Some(&e) => self.core.label(e),
            None => self.extra_labels[x - self.e0.len()].clone(),
        }
    }

    fn pos(&self, s: usize) -> usize {
        self.e0_pos[s].expect("an idempotent of the core")
    }
}

/// Evaluates every condition on the data exhaustively.
pub fn chen_axioms(d: &ChenData) -> CheckReport {
    let core = &d.core;
    let ne = d.e0.len();
    let ni = d.i_order();
    let is = 0..ni;
    let es = || 0..ne;
    let mut report = CheckReport::new();
    // products of idempotents of an adequate semigroup stay idempotent
    let prod = |k: usize, j: usize| d.pos(core.mul(d.e0[k], d.e0[j]));

    report.check(
        CHEN_ACTION,
        first(is.clone(), |x| {
            first(es().flat_map(|k| es().map(move |j| (k, j))), |(k, j)| {
                (d.act(d.act(x, k), j) != d.act(x, prod(k, j))).then(|| {
                    format!("x={} s={} t={}", d.i_label(x), d.i_label(k), d.i_label(j))
                })
            })
        }),
    );
    report.check(
        CHEN_ACTION_ON_E0,
        first(es().flat_map(|k| es().map(move |j| (k, j))), |(k, j)| {
            (d.act(k, j) != prod(k, j)).then(|| format!("e={} s={}", d.i_label(k), d.i_label(j)))
        }),
    );
    report.check(
        CHEN_PROJECTION,
        first(is.clone(), |x| {
            let p = d.proj(x);
            let fixes = x >= ne || p == d.e0[x];
            (d.e0_pos[p].is_none() || !fixes).then(|| format!("{}φ = {}", d.i_label(x), core.label(p)))
        }),
    );
    // the remaining conditions presuppose that φ lands in E⁰
    if report.passed(CHEN_PROJECTION) != Some(true) {
        return report;
    }
    report.check(
        CHEN_PROJECTION_ACTS,
        first(is.clone(), |x| (d.act(x, d.pos(d.proj(x))) != x).then(|| d.i_label(x))),
    );
    report.check(
        CHEN_PROJECTION_EQUIVARIANT,
        first(is.clone(), |x| {
            first(es(), |k| {
                (d.proj(d.act(x, k)) != core.mul(d.proj(x), d.e0[k]))
                    .then(|| format!("x={} s={}", d.i_label(x), d.i_label(k)))
            })
        }),
    );
    report.check(
        CHEN_STAR_1,
        first(es().flat_map(|a| es().map(move |b| (a, b))), |(a, b)| {
            first(es(), |f| {
                first(is.clone(), |e| {
                    let lhs = core.mul3(d.e0[a], d.star(f, e), d.e0[b]);
                    let rhs = d.star(prod(a, f), d.act(e, b));
                    (lhs != rhs).then(|| {
                        format!("a={} b={} f={} e={}", d.i_label(a), d.i_label(b), d.i_label(f), d.i_label(e))
                    })
                })
            })
        }),
    );
    report.check(
        CHEN_STAR_2,
        first(es().flat_map(|f| es().map(move |g| (f, g))), |(f, g)| {
            (d.star(f, g) != d.e0[prod(f, g)]).then(|| format!("f={} g={}", d.i_label(f), d.i_label(g)))
        }),
    );
    report.check(
        CHEN_STAR_3,
        first(is, |e| {
            let p = d.proj(e);
            (d.star(d.pos(p), e) != p).then(|| d.i_label(e))
        }),
    );
    report
}

/// The left adequate semigroup T = {(e, x) ∈ I × S⁰ : eφ = x⁺} with
/// (e,x)(g,w) = (e⊗a⁺, a) for a = x(x*∗g)w.
#[derive(Clone, Debug)]
pub struct ChenProduct {
    pairs: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
    core_order: usize,
    semigroup: FiniteSemigroup,
    t0: ElementSubset,
    t0_embed: Vec<usize>,
    analysis: TransversalAnalysis,
    source_iso: Option<Vec<usize>>,
    checks: CheckReport,
}

impl ChenProduct {
    /// Pairs (I-index, core element) in lexicographic order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair_index(&self, e: usize, x: usize) -> Option<usize> {
        self.index.get(e * self.core_order + x).copied().flatten()
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    /// {(a⁺, a)}.
    pub fn t0(&self) -> &ElementSubset {
        &self.t0
    }

    /// Core element a ↦ index of (a⁺, a).
    pub fn t0_embedding(&self) -> &[usize] {
        &self.t0_embed
    }

    pub fn analysis(&self) -> &TransversalAnalysis {
        &self.analysis
    }

    /// Source element ↦ pair index, when built from a semigroup.
    pub fn source_iso(&self) -> Option<&[usize]> {
        self.source_iso.as_deref()
    }

    pub fn checks(&self) -> &CheckReport {
        &self.checks
    }

    pub(crate) fn checks_mut(&mut self) -> &mut CheckReport {
        &mut self.checks
    }
}

/// Builds T from validated data and checks that it is left adequate with
/// T⁰ = {(a⁺, a)} a quasi-ideal adequate transversal isomorphic to the core.
pub fn chen_construct(d: &ChenData) -> Result<ChenProduct, ConstructionError> {
    let axioms = chen_axioms(d);
    if let Some(o) = axioms.failures().next() {
        return Err(ConstructionError::DataInvalid { axiom: o.name.clone(), witness: o.witness.clone().unwrap_or_default() });
    }
    let core = &d.core;
    let cd = &d.core_data;
    let nc = core.order();
    let mut pairs = Vec::new();
    let mut index = vec![None; d.i_order() * nc];
    for e in 0..d.i_order() {
        for x in core.elements() {
            if d.proj(e) == cd.plus(x) {
                index[e * nc + x] = Some(pairs.len());
                pairs.push((e, x));
            }
        }
    }
    let n = pairs.len();
    let mut table = Vec::with_capacity(n * n);
    for &(e, x) in &pairs {
        for &(g, w) in &pairs {
            let a = core.mul3(x, d.star(d.pos(cd.star(x)), g), w);
            let p = d.act(e, d.pos(cd.plus(a)));
            match index[p * nc + a] {
                Some(i) => table.push(i),
                None => return Err(ConstructionError::ClosureFailed { left: (e, x), right: (g, w) }),
            }
        }
    }
    let labels = pairs.iter().map(|&(e, x)| format!("({},{})", d.i_label(e), core.label(x))).collect();
    let t = FiniteSemigroup::from_flat(n, table, Some(labels)).map_err(|e| match e {
        SemigroupError::NonAssociative { a, b, c, .. } => {
            assertion("the pair product is associative", format!("{:?} {:?} {:?}", pairs[a], pairs[b], pairs[c]))
        }
        other => assertion("the pair product is a semigroup table", other.to_string()),
    })?;
    if !is_left_adequate(&t) {
        return Err(assertion("T is left adequate", "starred classes or idempotents fail"));
    }
    let t0_embed: Vec<usize> =
        core.elements().map(|a| index[d.pos(cd.plus(a)) * nc + a].expect("(a⁺,a) lies in T")).collect();
    let t0 = ElementSubset::from_indices(n, t0_embed.iter().copied()).expect("in range");
    if let Some((p, q)) = core.homomorphism_witness(&t, &t0_embed) {
        return Err(assertion("a ↦ (a⁺,a) is a homomorphism", format!("{} {}", core.label(p), core.label(q))));
    }
    let analysis = analyze_transversal(&t, &t0)
        .map_err(|e| assertion("T⁰ is an adequate transversal of T", e.to_string()))?;
    if !analysis.quasi_ideal() {
        return Err(assertion("T⁰ is a quasi-ideal of T", "T⁰TT⁰ ⊄ T⁰"));
    }
    let mut checks = CheckReport::new();
    let eq = left_adequate_equivalences(&analysis)?;
    checks.check(
        "the five left adequate conditions hold in T",
        first(eq.conditions.iter(), |&(name, v)| (!v).then(|| name.to_string())),
    );
    require(&checks)?;
    Ok(ChenProduct { pairs, index, core_order: nc, semigroup: t, t0, t0_embed, analysis, source_iso: None, checks })
}

/// Reads the Chen data off a left adequate semigroup with a quasi-ideal
/// adequate transversal: I = E(S), x⊗s = xs, xφ = x̄ and f∗e = fe.
pub fn chen_data_from(a: &TransversalAnalysis) -> Result<ChenData, ConstructionError> {
    extract(a).map(|(d, _)| d)
}

fn inconsistent(msg: String) -> ConstructionError {
    ConstructionError::Transversal(TransversalError::InternalInconsistency(msg))
}

/// The data together with the parent index of each element of I.
fn extract(a: &TransversalAnalysis) -> Result<(ChenData, Vec<usize>), ConstructionError> {
    let s = a.parent();
    if !is_left_adequate(s) {
        return Err(ConstructionError::NotLeftAdequate);
    }
    if !a.quasi_ideal() {
        return Err(ConstructionError::NotQuasiIdeal);
    }
    let sub = a.transversal_semigroup();
    let core = sub.semigroup.clone();
    let e0: Vec<usize> = core.idempotents().iter().map(|e| sub.lift(e)).collect();
    let extra: Vec<usize> = a.set_i().iter().filter(|x| !a.set_e0().contains(*x)).collect();
    let i_parent: Vec<usize> = e0.iter().chain(&extra).copied().collect();
    let mut i_index = vec![None; s.order()];
    for (i, &x) in i_parent.iter().enumerate() {
        i_index[x] = Some(i);
    }
    let local = |x: usize, what: &str| sub.local(x).ok_or_else(|| inconsistent(format!("{what} leaves S⁰")));

    let mut act = Vec::new();
    for &x in &i_parent {
        for &e in &e0 {
            act.push(i_index[s.mul(x, e)].ok_or_else(|| inconsistent(format!("{}·{} leaves I", s.label(x), s.label(e))))?);
        }
    }
    let proj = i_parent.iter().map(|&x| local(a.bar(x), "bar")).collect::<Result<Vec<_>, _>>()?;
    let mut star = Vec::new();
    for &f in &e0 {
        for &x in &i_parent {
            star.push(local(s.mul(f, x), "Λ·I")?);
        }
    }
    let labels = extra.iter().map(|&x| s.label(x)).collect();
    let data = ChenData::new(core, labels, act, proj, star)
        .map_err(|e| inconsistent(format!("data read off S is invalid: {e}")))?;
    Ok((data, i_parent))
}

/// Reads the Chen data off S, builds T and verifies x ↦ (e_x, x̄) is an
/// isomorphism S → T.
pub fn chen_round_trip(a: &TransversalAnalysis) -> Result<ChenProduct, ConstructionError> {
    let (data, i_parent) = extract(a)?;
    if let Some(f) = chen_axioms(&data).first_failure() {
        return Err(inconsistent(format!("data read off S fails {f}")));
    }
    let mut product = chen_construct(&data)?;
    let s = a.parent();
    let sub = a.transversal_semigroup();
    let phi: Vec<Option<usize>> = s
        .elements()
        .map(|x| {
            let e = i_parent.iter().position(|&p| p == a.e(x))?;
            product.pair_index(e, sub.local(a.bar(x))?)
        })
        .collect();
    let mut report = CheckReport::new();
    let image = ElementSubset::from_indices(product.semigroup.order(), phi.iter().flatten().copied()).expect("in range");
    let bijective = phi.iter().all(Option::is_some) && image.is_full() && image.len() == s.order();
    report.check(
        "x ↦ (e_x, x̄) is a bijection onto T",
        (!bijective).then(|| format!("image {image} of {} pairs", product.semigroup.order())),
    );
    if !bijective {
        return Err(ConstructionError::IsoFailed(format!("x ↦ (e_x, x̄) has image {image}")));
    }
    let phi: Vec<usize> = phi.into_iter().map(|p| p.expect("checked")).collect();
    let hom = s.homomorphism_witness(&product.semigroup, &phi).map(|(x, y)| format!("{} {}", s.label(x), s.label(y)));
    report.check("x ↦ (e_x, x̄) is a homomorphism", hom.clone());
    if let Some(w) = hom {
        return Err(ConstructionError::IsoFailed(w));
    }
    product.source_iso = Some(phi);
    product.checks.extend(report);
    Ok(product)
}
