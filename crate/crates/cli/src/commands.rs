use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::json;

use spined_core::construction::{chen_round_trip, decompose_and_rebuild, left_inverse_chen, ChenData};
use spined_core::families::{corpus, generate};
use spined_core::format::{parse, serialize, SemigroupDocument};
use spined_core::iso::are_isomorphic;
use spined_core::search::{search_all_subsets, search_transversals, Found, POWER_SET_LIMIT};
use spined_core::suite::{corpus_run, run_verification_suite};
use spined_core::{
    analyze_transversal, is_abundant, is_adequate, is_left_adequate, is_right_adequate, CheckReport, ElementSubset,
    EquivRelation, FiniteSemigroup, GreenData,
};

use crate::{Cli, Command, CorpusAction, Format};

pub fn run(cli: &Cli) -> Result<bool> {
    let fmt = cli.format;
    match &cli.command {
        Command::Analyze { file } => analyze(&read_doc(file)?, fmt),
        Command::Transversals { file, max_gen, all_subsets, dedup_iso } => {
            transversals(&read_doc(file)?, *max_gen, *all_subsets, *dedup_iso, fmt)
        }
        Command::Verify { file, transversal } => {
            let doc = read_doc(file)?;
            let s0 = transversal_of(&doc, transversal.as_deref())?;
            let report = run_verification_suite(&file.display().to_string(), &doc.semigroup, &s0);
            match fmt {
                Format::Text => print!("{report}"),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.rows)?),
            }
            Ok(report.all_passed())
        }
        Command::Spined { file, transversal } => {
            let doc = read_doc(file)?;
            let s0 = transversal_of(&doc, transversal.as_deref())?;
            let a = analyze_transversal(&doc.semigroup, &s0)?;
            let rb = decompose_and_rebuild(&a)?;
            let t = &rb.product;
            let out = SemigroupDocument::new(t.semigroup().clone())
                .with_subset("T0", t.t0().clone())
                .with_map("phi", t.source_iso().expect("set by decomposition").to_vec());
            emit_document(&out, t.checks(), fmt)
        }
        Command::Chen { file, transversal, band, embed } => {
            let doc = read_doc(file)?;
            match (band, embed) {
                (Some(band), Some(embed)) => {
                    let band = read_doc(band)?;
                    let embed = index_list(embed)?;
                    let li = left_inverse_chen(&doc.semigroup, &band.semigroup, &embed)?;
                    let out = SemigroupDocument::new(li.product.semigroup().clone())
                        .with_subset("T0", li.product.t0().clone());
                    emit_document(&out, li.product.checks(), fmt)
                }
                _ if doc.map("proj").is_some() => {
                    let data = chen_data_of(&doc)?;
                    let t = spined_core::construction::chen_construct(&data)?;
                    let out = SemigroupDocument::new(t.semigroup().clone()).with_subset("T0", t.t0().clone());
                    emit_document(&out, t.checks(), fmt)
                }
                _ => {
                    let s0 = transversal_of(&doc, transversal.as_deref())?;
                    let a = analyze_transversal(&doc.semigroup, &s0)?;
                    let t = chen_round_trip(&a)?;
                    let out = SemigroupDocument::new(t.semigroup().clone())
                        .with_subset("T0", t.t0().clone())
                        .with_map("phi", t.source_iso().expect("set by the round trip").to_vec());
                    emit_document(&out, t.checks(), fmt)
                }
            }
        }
        Command::Generate { spec } => {
            let s = generate(spec)?;
            print!("{}", serialize(&SemigroupDocument::new(s)));
            Ok(true)
        }
        Command::Corpus { action } => corpus_command(action, fmt),
    }
}

fn read_doc(path: &Path) -> Result<SemigroupDocument> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse(&text).with_context(|| format!("{}", path.display()))
}

fn index_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| anyhow!("`{}` is not an element index", t.trim())))
        .collect()
}

fn transversal_of(doc: &SemigroupDocument, flag: Option<&str>) -> Result<ElementSubset> {
    let n = doc.semigroup.order();
    match flag {
        Some(list) => {
            let items = index_list(list)?;
            if let Some(x) = items.iter().find(|&&x| x >= n) {
                bail!("element {x} out of range for order {n}");
            }
            Ok(ElementSubset::from_indices(n, items).expect("checked"))
        }
        None => doc
            .subset("transversal")
            .cloned()
            .ok_or_else(|| anyhow!("no --transversal given and the document has no `transversal` subset")),
    }
}

/// Chen data from a core document with maps `act`, `proj` and `star`; the
/// extra points of I are named a0, a1, ...
fn chen_data_of(doc: &SemigroupDocument) -> Result<ChenData> {
    let core = doc.semigroup.clone();
    let map = |name: &str| doc.map(name).map(<[usize]>::to_vec).ok_or_else(|| anyhow!("missing `map {name}`"));
    let (act, proj, star) = (map("act")?, map("proj")?, map("star")?);
    let e0 = core.idempotents().len();
    let extra = proj
        .len()
        .checked_sub(e0)
        .ok_or_else(|| anyhow!("`proj` has {} entries but the core has {e0} idempotents", proj.len()))?;
    let labels = (0..extra).map(|i| format!("a{i}")).collect();
    Ok(ChenData::new(core, labels, act, proj, star)?)
}

fn emit_document(doc: &SemigroupDocument, checks: &CheckReport, fmt: Format) -> Result<bool> {
    match fmt {
        Format::Text => print!("{}", serialize(doc)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "document": serialize(doc), "checks": checks.outcomes }))?
        ),
    }
    Ok(checks.all_passed())
}

fn classes(s: &FiniteSemigroup, rel: &EquivRelation) -> Vec<Vec<String>> {
    rel.classes().iter().map(|c| c.iter().map(|x| s.label(x)).collect()).collect()
}

fn analyze(doc: &SemigroupDocument, fmt: Format) -> Result<bool> {
    let s = &doc.semigroup;
    let g = GreenData::new(s);
    let adequate = is_adequate(s)?;
    let flags = [
        ("abundant", is_abundant(s)),
        ("adequate", adequate),
        ("left adequate", is_left_adequate(s)),
        ("right adequate", is_right_adequate(s)),
        ("regular", s.is_regular()),
        ("inverse", s.is_inverse()),
    ];
    let idempotents: Vec<String> = s.idempotents().iter().map(|x| s.label(x)).collect();
    let relations = [("R", &g.r), ("L", &g.l), ("R*", &g.r_star), ("L*", &g.l_star)];
    match fmt {
        Format::Text => {
            println!("order: {}", s.order());
            for (name, v) in flags {
                println!("{name}: {v}");
            }
            println!("idempotents: {}", idempotents.join(" "));
            for (name, rel) in relations {
                let shown: Vec<String> = classes(s, rel).iter().map(|c| format!("{{{}}}", c.join(","))).collect();
                println!("{name} classes: {}", shown.join(" "));
            }
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("order".into(), json!(s.order()));
            for (name, v) in flags {
                obj.insert(name.replace(' ', "_"), json!(v));
            }
            obj.insert("idempotents".into(), json!(idempotents));
            for (name, rel) in relations {
                obj.insert(format!("{}_classes", name.replace('*', "_star")), json!(classes(s, rel)));
            }
            println!("{}", serde_json::to_string_pretty(&obj)?);
        }
    }
    Ok(true)
}

fn transversals(doc: &SemigroupDocument, max_gen: usize, all_subsets: bool, dedup_iso: bool, fmt: Format) -> Result<bool> {
    let s = &doc.semigroup;
    let mut found = if all_subsets {
        if s.order() > POWER_SET_LIMIT {
            bail!("--all-subsets needs order at most {POWER_SET_LIMIT}, got {}", s.order());
        }
        search_all_subsets(s)?
    } else {
        search_transversals(s, max_gen)?
    };
    if dedup_iso {
        let mut kept: Vec<Found> = Vec::new();
        for f in found {
            let same = kept.iter().any(|k| {
                flags_of(k) == flags_of(&f)
                    && are_isomorphic(&k.analysis.transversal_semigroup().semigroup, &f.analysis.transversal_semigroup().semigroup)
            });
            if !same {
                kept.push(f);
            }
        }
        found = kept;
    }
    match fmt {
        Format::Text => {
            for f in &found {
                let (q, m, w) = flags_of(f);
                println!("{} quasi-ideal={q} multiplicative={m} weakly-multiplicative={w}", f.transversal);
            }
            println!("{} transversals", found.len());
        }
        Format::Json => {
            let rows: Vec<_> = found
                .iter()
                .map(|f| {
                    let (q, m, w) = flags_of(f);
                    json!({
                        "transversal": f.transversal.to_vec(),
                        "quasi_ideal": q,
                        "multiplicative": m,
                        "weakly_multiplicative": w,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
    }
    Ok(true)
}

fn flags_of(f: &Found) -> (bool, bool, bool) {
    (f.analysis.quasi_ideal(), f.analysis.multiplicative(), f.analysis.weakly_multiplicative())
}

/// Corpus file name for a family spec: runs of other characters become `_`.
pub fn corpus_file_name(spec: &str) -> String {
    let mut out = String::new();
    for c in spec.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    format!("{}.txt", out.trim_end_matches('_'))
}

fn corpus_command(action: &CorpusAction, fmt: Format) -> Result<bool> {
    match action {
        CorpusAction::Run { max_gen, verbose } => {
            let run = corpus_run(*max_gen);
            match fmt {
                Format::Text => {
                    for r in &run.reports {
                        if *verbose {
                            print!("{r}");
                        } else {
                            for row in r.failures() {
                                println!(
                                    "FAIL  {}  {}  {}  [{}]",
                                    r.instance,
                                    row.anchor,
                                    row.check,
                                    row.witness.as_deref().unwrap_or_default()
                                );
                            }
                        }
                    }
                    print!("{}", run.summary());
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&run)?),
            }
            Ok(run.all_passed())
        }
        CorpusAction::List => {
            for (name, s) in corpus() {
                println!("{name} (order {})", s.order());
            }
            Ok(true)
        }
        CorpusAction::Write { dir } => {
            fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            for (name, s) in corpus() {
                let path = dir.join(corpus_file_name(&name));
                fs::write(&path, serialize(&SemigroupDocument::new(s)))
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(true)
        }
    }
}
