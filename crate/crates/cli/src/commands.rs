use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use ncframe_core::lattice::lattice_isomorphism;
use ncframe_core::verify::{search_two_sided_top, summarize};
use ncframe_core::{
    boolean_lattice, build_pfn_algebra, chain, direct_product, enumerate_instances, handedness,
    is_nc_frame, lattice_section_at, pfn1_mutants, rectangular_band, run_all,
    validate_skew_lattice, AlgebraError, Corpus, CorpusSpec, FiniteAlgebra, Hand, Handedness,
    NcStructure, PropertyProfile, Provenance, SkewLattice, Table, VerifyConfig,
};
use thiserror::Error;

use crate::format::{emit, parse, AlgebraFile, ParseError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_IO: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Check(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Resource(msg) => CliError::Budget(msg),
            other => CliError::Check(other.to_string()),
        }
    }
}

/// Standard output of a command and the exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub code: u8,
}

impl Report {
    fn new(stdout: String, ok: bool) -> Self {
        Report {
            stdout,
            code: if ok { EXIT_OK } else { EXIT_CHECK_FAILED },
        }
    }
}

pub fn load(path: &Path) -> Result<AlgebraFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn skew(alg: &FiniteAlgebra) -> Result<SkewLattice<'_>, CliError> {
    SkewLattice::new(alg).map_err(|e| CliError::Check(format!("not a skew lattice: {e}")))
}

pub fn cmd_validate(path: &Path) -> Result<Report, CliError> {
    let file = load(path)?;
    let reports = validate_skew_lattice(&file.algebra);
    let mut out = String::new();
    for r in &reports {
        writeln!(out, "{r}").unwrap();
    }
    Ok(Report::new(out, reports.iter().all(|r| r.passed)))
}

fn set(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn table_text(table: &Table) -> String {
    table
        .rows()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            cells.join(" ") + "\n"
        })
        .collect()
}

fn describe_quotient(q: &FiniteAlgebra) -> String {
    let n = q.size();
    if n.is_power_of_two() {
        let k = n.trailing_zeros() as usize;
        if boolean_lattice(k).is_ok_and(|b| lattice_isomorphism(q, &b).is_some()) {
            return format!("quotient = 2^{k}");
        }
    }
    if chain(n).is_ok_and(|c| lattice_isomorphism(q, &c).is_some()) {
        return format!("quotient = {n}-chain");
    }
    format!("quotient = {n}-element lattice")
}

fn summary(alg: &FiniteAlgebra, sl: &SkewLattice<'_>, profile: &PropertyProfile) -> String {
    let mut traits: Vec<String> = Vec::new();
    match handedness(alg) {
        Handedness::Both if alg.is_commutative() => traits.push("commutative".into()),
        Handedness::Neither => {}
        h => traits.push(h.to_string()),
    }
    if profile.rectangular && alg.size() > 1 {
        traits.push("rectangular".into());
    }
    for (flag, label) in [
        (profile.strongly_distributive, "strongly distributive"),
        (profile.normal, "normal"),
        (profile.symmetric, "symmetric"),
    ] {
        if flag {
            traits.push(label.into());
        }
    }
    let p = sl.partition();
    let shape = if p.len() == 1 {
        "one D-class".to_string()
    } else if p.len() == alg.size() {
        "classes singleton".to_string()
    } else {
        format!("{} D-classes", p.len())
    };
    format!(
        "{}; {shape}; {}",
        traits.join(", "),
        describe_quotient(p.quotient())
    )
}

pub fn cmd_classify(path: &Path, cap: Option<usize>) -> Result<Report, CliError> {
    let file = load(path)?;
    let alg = &file.algebra;
    let failures: Vec<_> = validate_skew_lattice(alg)
        .into_iter()
        .filter(|r| !r.passed)
        .collect();
    if !failures.is_empty() {
        let mut out = String::new();
        for r in failures {
            writeln!(out, "{r}").unwrap();
        }
        return Ok(Report::new(out, false));
    }
    let sl = skew(alg)?;
    let profile = PropertyProfile::compute(&sl, cap);
    let mut out = String::new();
    if let Some(name) = &file.name {
        writeln!(out, "name: {name}").unwrap();
    }
    writeln!(out, "size: {}", alg.size()).unwrap();
    writeln!(out, "summary: {}", summary(alg, &sl, &profile)).unwrap();
    writeln!(out, "properties:").unwrap();
    for (flag, value) in profile.flags() {
        writeln!(out, "  {flag}: {}", if value { "yes" } else { "no" }).unwrap();
    }
    let p = sl.partition();
    writeln!(out, "D-classes: {}", p.len()).unwrap();
    for (i, class) in p.classes().iter().enumerate() {
        writeln!(out, "  [{i}] {}", set(class)).unwrap();
    }
    writeln!(out, "quotient meet:").unwrap();
    out.push_str(&table_text(p.quotient().meet_table()));
    writeln!(out, "quotient join:").unwrap();
    out.push_str(&table_text(p.quotient().join_table()));
    writeln!(out, "top class: {}", set(sl.top_class())).unwrap();
    for &t in sl.top_class() {
        let section = lattice_section_at(&sl, t)?;
        writeln!(
            out,
            "section at {t}: {} ({})",
            set(&section.members),
            if section.check.passed {
                "lattice section"
            } else {
                "not a lattice section"
            }
        )
        .unwrap();
    }
    Ok(Report::new(out, true))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Nh,
    Sup,
    Both,
}

pub fn cmd_imp(
    path: &Path,
    t: usize,
    method: Method,
    cap: Option<usize>,
) -> Result<Report, CliError> {
    let file = load(path)?;
    let alg = &file.algebra;
    let sl = skew(alg)?;
    if t >= alg.size() || !sl.in_top_class(t) {
        return Err(CliError::Check(format!(
            "t = {t} is not in the top D-class"
        )));
    }
    if matches!(method, Method::Sup | Method::Both) {
        let frame = is_nc_frame(&sl, cap);
        if !frame.passed {
            return Err(CliError::Check(format!(
                "supremum formula needs a noncommutative frame: {frame}"
            )));
        }
    }
    let nc = NcStructure::from_skew(sl)?;
    let out = match method {
        Method::Nh => table_text(&nc.implication_t(t)?),
        Method::Sup => table_text(&nc.implication_via_sup_table(t)?),
        Method::Both => {
            let a = nc.implication_t(t)?;
            let b = nc.implication_via_sup_table(t)?;
            let mut out = table_text(&a);
            let mut differ = false;
            for x in alg.elements() {
                for y in alg.elements() {
                    if a.get(x, y) != b.get(x, y) {
                        differ = true;
                        writeln!(out, "diff {x} {y}: nh {} sup {}", a.get(x, y), b.get(x, y))
                            .unwrap();
                    }
                }
            }
            if !differ {
                out.push_str("diff: none\n");
            }
            return Ok(Report::new(out, !differ));
        }
    };
    Ok(Report::new(out, true))
}

#[derive(Debug, Clone)]
pub enum ModelKind {
    Pfn { arity: usize },
    Rect { n: usize, hand: Hand },
    Chain { n: usize, heyting: bool },
    Bool { k: usize, heyting: bool },
    Product { left: PathBuf, right: PathBuf },
}

fn maybe_heyting(alg: FiniteAlgebra, heyting: bool) -> Result<FiniteAlgebra, CliError> {
    if heyting {
        Ok(ncframe_core::heyting::with_heyting_implication(&alg)?)
    } else {
        Ok(alg)
    }
}

pub fn cmd_model(kind: &ModelKind) -> Result<Report, CliError> {
    let (name, alg) = match kind {
        ModelKind::Pfn { arity } => (format!("pfn({arity})"), build_pfn_algebra(*arity)?),
        ModelKind::Rect { n, hand } => (format!("rect-{hand}({n})"), rectangular_band(*n, *hand)?),
        ModelKind::Chain { n, heyting } => (
            format!("chain({n}){}", if *heyting { "+imp" } else { "" }),
            maybe_heyting(chain(*n)?, *heyting)?,
        ),
        ModelKind::Bool { k, heyting } => (
            format!("bool({k}){}", if *heyting { "+imp" } else { "" }),
            maybe_heyting(boolean_lattice(*k)?, *heyting)?,
        ),
        ModelKind::Product { left, right } => {
            let a = load(left)?;
            let b = load(right)?;
            let label = |f: &AlgebraFile, p: &Path| {
                f.name.clone().unwrap_or_else(|| p.display().to_string())
            };
            (
                format!("({})x({})", label(&a, left), label(&b, right)),
                direct_product(&a.algebra, &b.algebra)?,
            )
        }
    };
    Ok(Report::new(emit(Some(&name), &alg), true))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusChoice {
    Default,
    Pfn1,
    Empty,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub corpus: Option<CorpusChoice>,
    pub p4: bool,
    pub seed: Option<u64>,
    pub random_count: usize,
    pub mutate_pfn1: bool,
    pub machine: bool,
    pub cap: Option<usize>,
    pub paths: Vec<PathBuf>,
}

fn build_corpus(opts: &VerifyOptions) -> Result<Corpus, CliError> {
    if opts.mutate_pfn1 {
        return Ok(pfn1_mutants());
    }
    let choice = opts.corpus.unwrap_or(if opts.paths.is_empty() {
        CorpusChoice::Default
    } else {
        CorpusChoice::Empty
    });
    let mut spec = match choice {
        CorpusChoice::Default => CorpusSpec::default_corpus(),
        CorpusChoice::Pfn1 => CorpusSpec::pfn_only(1),
        CorpusChoice::Empty => CorpusSpec::empty(),
    };
    if opts.p4 {
        spec = spec.with_p4();
    }
    if let Some(seed) = opts.seed {
        spec = spec.with_random(seed, opts.random_count);
    }
    let mut corpus = enumerate_instances(&spec);
    for path in &opts.paths {
        let file = load(path)?;
        let shown = path.display().to_string();
        let name = file.name.unwrap_or_else(|| shown.clone());
        corpus.push(name, file.algebra, Provenance::File(shown));
    }
    Ok(corpus)
}

pub fn cmd_verify(opts: &VerifyOptions) -> Result<Report, CliError> {
    let corpus = build_corpus(opts)?;
    if let Some(note) = &corpus.truncated {
        if corpus.is_empty() {
            return Err(CliError::Budget(note.clone()));
        }
    }
    let config = VerifyConfig {
        cap: opts.cap,
        parallel: true,
    };
    let mut results = run_all(&corpus, &config);
    if !corpus.is_empty() && !opts.mutate_pfn1 {
        results.push(search_two_sided_top(&corpus));
        results.sort_by(|a, b| (a.theorem, &a.instance).cmp(&(b.theorem, &b.instance)));
    }
    let mut out = String::new();
    for r in &results {
        if opts.machine {
            writeln!(out, "{}", r.machine_line()).unwrap();
        } else {
            writeln!(out, "{r}").unwrap();
        }
    }
    let s = summarize(&results);
    if !opts.machine {
        if let Some(note) = &corpus.truncated {
            writeln!(out, "truncated: {note}").unwrap();
        }
        writeln!(
            out,
            "{} instances: {} passed, {} failed, {} skipped",
            corpus.len(),
            s.passed,
            s.failed,
            s.skipped
        )
        .unwrap();
        if opts.mutate_pfn1 {
            let caught = corpus
                .instances()
                .iter()
                .filter(|i| results.iter().any(|r| r.failed() && r.instance == i.name))
                .count();
            writeln!(out, "mutants caught: {caught}/{}", corpus.len()).unwrap();
        }
    }
    Ok(Report::new(out, s.failed == 0))
}
