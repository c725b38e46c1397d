//! The `hopf` command line: argument parsing, input loading and report
//! rendering. [`run`] returns the exit code and both output streams so the
//! binary stays a thin wrapper.
//!
//! Exit codes: 0 for success or a true verdict, 1 for a false or undecided
//! verdict, 2 for usage, parse and validation errors, 3 for internal
//! invariant violations.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::document::{parse_element, Presentation, PresentationDocument};
use crate::error::{HopfError, Result};
use crate::fv::{Decomposition, Extent, Summand};
use crate::gallery;
use crate::hopf::{check_axioms, frobenius_module, indecomposables, Bialgebra};
use crate::linear::{Field, TruncatedSeries, Vector};
use crate::poincare::{series_profile, tensor_identity_failure, SeriesProfile};
use crate::theorems::{
    borel_decomposition, construct_h_from, find_primitive_lift, hopf_morphism_search, is_split, iso_test_hopf,
    iso_test_j, iso_test_jvee, polynomial_criterion, polynomial_criterion_integral, q_by_labels, IsoVerdict,
    DEFAULT_BUDGET,
};

pub const DEFAULT_CHAR: u32 = 2;
pub const DEFAULT_TRUNC: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "hopf", about = "Truncated computations with connected graded Hopf algebras")]
struct Cli {
    /// Characteristic: 0 or a prime (default 2, or the document's own).
    #[arg(long = "char", global = true)]
    characteristic: Option<u32>,
    /// Truncation degree (default 12, or the document's own).
    #[arg(long = "trunc", global = true)]
    truncation: Option<usize>,
    /// Candidate budget for searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose the determining F- or V-module into chains.
    Classify { input: String },
    /// Multiply two elements.
    Product { input: String, left: String, right: String },
    /// Apply the coproduct to an element.
    Coproduct { input: String, element: String },
    /// Check the bialgebra axioms degree by degree.
    Check { input: String },
    /// Decide whether two inputs are isomorphic.
    Iso { left: String, right: String },
    /// Decide whether the projection onto indecomposables has a V-equivariant section.
    Split { input: String },
    /// The free Hopf algebra on a V-module given as chains, e.g. "(1,2),(2,0)".
    ConstructH { summands: String },
    /// A primitive element congruent to the input modulo decomposables.
    Lift { input: String, element: String },
    /// Monogenic factors of the underlying commutative algebra.
    Borel { input: String },
    /// Whether the quasi-shuffle algebra on an algebra document is polynomial.
    Poly {
        input: String,
        /// Primes for the integral criterion, e.g. 2,3,5.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u32>>,
    },
    /// Cokernel and torsion-free series of the Frobenius module of an algebra document.
    Poincare {
        input: String,
        #[arg(long = "j")]
        j: Option<usize>,
    },
    /// List or show the built-in fixtures.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
}

#[derive(Subcommand, Debug)]
enum GalleryAction {
    List,
    Show { name: String },
}

/// Exit code and output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    code: i32,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { code: 0, text, json }
    }

    fn verdict(holds: bool, text: String, json: Value) -> Self {
        Report {
            code: if holds { 0 } else { 1 },
            text,
            json,
        }
    }
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let format = cli.format;
    match execute(&cli) {
        Ok(report) => {
            let mut stdout = match format {
                Format::Text => report.text,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("reports serialize"),
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code: report.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let stdout = match format {
                Format::Text => String::new(),
                Format::Json => format!("{}\n", json!({ "error": e.to_string(), "exit": e.exit_code() })),
            };
            Outcome {
                code: e.exit_code(),
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

struct Loaded {
    presentation: Presentation,
    bound: usize,
}

impl Loaded {
    fn hopf(&self) -> Result<Bialgebra> {
        self.presentation.hopf(self.bound)
    }
}

fn load(cli: &Cli, input: &str) -> Result<Loaded> {
    if let Some(name) = input.strip_prefix("gallery:") {
        let fixed = gallery::find(name).and_then(|e| e.characteristic);
        let p = cli.characteristic.or(fixed).unwrap_or(DEFAULT_CHAR);
        let bound = cli.truncation.unwrap_or(DEFAULT_TRUNC);
        let presentation = gallery::gallery_presentation(name, p, bound)?;
        return Ok(Loaded { presentation, bound });
    }
    let text =
        std::fs::read_to_string(input).map_err(|e| HopfError::Validation(format!("cannot read `{input}`: {e}")))?;
    let mut doc = PresentationDocument::from_json(&text)?;
    if let Some(p) = cli.characteristic {
        doc.characteristic = p;
    }
    if let Some(n) = cli.truncation {
        doc.truncation = n;
    }
    Ok(Loaded {
        presentation: doc.to_presentation()?,
        bound: doc.truncation,
    })
}

fn field_of(cli: &Cli) -> Result<Field> {
    Field::from_characteristic(cli.characteristic.unwrap_or(DEFAULT_CHAR))
}

fn decomposition_text(what: &str, d: &Decomposition) -> String {
    let mut out = format!("{what}: {d}\nn\tj\tmultiplicity\n");
    for (summand, m) in &d.counts {
        let j = match summand.j {
            Extent::Finite(j) => j.to_string(),
            Extent::AtLeast(j) => format!("≥{j}"),
        };
        out.push_str(&format!("{}\t{j}\t{m}\n", summand.n));
    }
    out
}

fn terms_json(h: &Bialgebra, v: &Vector) -> Value {
    Value::Array(
        v.iter()
            .map(|(i, c)| json!({ "word": h.label(*i), "coefficient": c.to_string() }))
            .collect(),
    )
}

fn iso_report(v: IsoVerdict, witness: Option<String>) -> Report {
    let head = match v.verdict {
        Some(true) => "isomorphic",
        Some(false) => "not isomorphic",
        None => "undetermined",
    };
    let mut text = format!("{head}\n{}\n", v.detail);
    if let Some(w) = &witness {
        text.push_str(w);
        text.push('\n');
    }
    let json = json!({ "verdict": v.verdict, "detail": v.detail, "evidence": v.evidence, "witness": witness });
    Report::verdict(v.verdict == Some(true), text, json)
}

fn parse_summands(text: &str) -> Result<Vec<Summand>> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    for part in cleaned.split("),") {
        let inner = part.trim_start_matches('(').trim_end_matches(')');
        if inner.is_empty() {
            continue;
        }
        let (n, j) = inner
            .split_once(',')
            .ok_or_else(|| HopfError::Parse(format!("expected (n,j) in `{part}`")))?;
        let n = n.parse().map_err(|_| HopfError::Parse(format!("bad degree `{n}`")))?;
        let j = j.parse().map_err(|_| HopfError::Parse(format!("bad length `{j}`")))?;
        out.push(Summand::finite(n, j));
    }
    if out.is_empty() {
        return Err(HopfError::Parse("no summands given".into()));
    }
    Ok(out)
}

fn profile_json(p: &SeriesProfile, rows: usize) -> Value {
    let series = |s: &TruncatedSeries| Value::from(s.coeffs().to_vec());
    json!({
        "prime": p.prime,
        "bound": p.bound,
        "chi": p.chi.iter().take(rows + 1).map(series).collect::<Vec<_>>(),
        "chi_infinity": series(&p.chi_infinity),
        "infinity_determined": p.infinity_determined,
    })
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Classify { input } => {
            let loaded = load(cli, input)?;
            let (what, module, d) = match &loaded.presentation {
                Presentation::Algebra(_) => {
                    let a = loaded.presentation.algebra(loaded.bound)?;
                    (
                        "F-module of the augmentation ideal",
                        "F",
                        frobenius_module(&a)?.classify(),
                    )
                }
                _ => {
                    let h = loaded.hopf()?;
                    let q = indecomposables(&h)?;
                    ("V-module of indecomposables", "V", q.v_module()?.classify())
                }
            };
            let text = decomposition_text(what, &d);
            Ok(Report::ok(text, json!({ "module": module, "decomposition": d })))
        }
        Command::Product { input, left, right } => {
            let h = load(cli, input)?.hopf()?;
            let (a, b) = (parse_element(&h, left)?, parse_element(&h, right)?);
            let degree = |v: &Vector| v.keys().map(|i| h.degree(*i)).max().unwrap_or(0);
            if degree(&a) + degree(&b) > h.bound() {
                return Err(HopfError::truncation(
                    "cli::product",
                    degree(&a) + degree(&b),
                    h.bound(),
                ));
            }
            let v = h.mul_vec(&a, &b);
            Ok(Report::ok(
                h.format_vector(&v),
                json!({ "product": h.format_vector(&v), "terms": terms_json(&h, &v) }),
            ))
        }
        Command::Coproduct { input, element } => {
            let h = load(cli, input)?.hopf()?;
            let v = parse_element(&h, element)?;
            let t = h.coproduct_vec(&v);
            let terms: Vec<Value> = t
                .iter()
                .map(|((a, b), c)| json!({ "left": h.label(*a), "right": h.label(*b), "coefficient": c.to_string() }))
                .collect();
            Ok(Report::ok(
                h.format_tensor(&t),
                json!({ "coproduct": h.format_tensor(&t), "terms": terms }),
            ))
        }
        Command::Check { input } => {
            let h = load(cli, input)?.hopf()?;
            let report = check_axioms(&h);
            let mut text = if report.passed() {
                format!("all axioms hold through degree {}\n", h.bound())
            } else {
                String::from("axiom\tdegree\tbasis elements\n")
            };
            for f in &report.failures {
                let labels: Vec<&str> = f.indices.iter().map(|i| h.label(*i)).collect();
                text.push_str(&format!("{}\t{}\t{}\n", f.axiom, f.degree, labels.join(" ")));
            }
            Ok(Report::verdict(
                report.passed(),
                text,
                json!({ "passed": report.passed(), "report": report }),
            ))
        }
        Command::Iso { left, right } => {
            let (a, b) = (load(cli, left)?, load(cli, right)?);
            if a.bound != b.bound {
                return Err(HopfError::Validation("inputs must share the truncation".into()));
            }
            match (&a.presentation, &b.presentation) {
                (Presentation::Algebra(_), Presentation::Algebra(_)) => {
                    let v = iso_test_jvee(&a.presentation.algebra(a.bound)?, &b.presentation.algebra(b.bound)?)?;
                    Ok(iso_report(v, None))
                }
                (Presentation::Coalgebra(c), Presentation::Coalgebra(d)) => Ok(iso_report(iso_test_j(c, d)?, None)),
                _ => {
                    let (h1, h2) = (a.hopf()?, b.hopf()?);
                    let v = iso_test_hopf(&h1, &h2)?;
                    let witness = if v.verdict == Some(true) {
                        search_witness(&h1, &h2, cli.budget.unwrap_or(DEFAULT_BUDGET))
                    } else {
                        None
                    };
                    Ok(iso_report(v, witness))
                }
            }
        }
        Command::Split { input } => {
            let h = load(cli, input)?.hopf()?;
            let cert = is_split(&h)?;
            let text = match (cert.split, cert.failing_degree) {
                (true, _) => "split\n".to_string(),
                (false, Some(d)) => format!("not split: no V-equivariant section in degree {d}\n"),
                (false, None) => "not split\n".to_string(),
            };
            Ok(Report::verdict(cert.split, text, json!({ "certificate": cert })))
        }
        Command::ConstructH { summands } => {
            let summands = parse_summands(summands)?;
            let bound = cli.truncation.unwrap_or(DEFAULT_TRUNC);
            let h = construct_h_from(field_of(cli)?, &summands, bound)?;
            let pres = h.free_presentation().expect("construct_h builds a free algebra");
            let mut text = String::from("generator\tdegree\treduced coproduct\n");
            let mut rows = Vec::new();
            for l in &pres.letters {
                let g = h.generator(&l.label).expect("generator in range");
                let t = h.format_tensor(&h.reduced(g));
                text.push_str(&format!("{}\t{}\t{t}\n", l.label, l.degree));
                rows.push(json!({ "generator": l.label, "degree": l.degree, "reduced_coproduct": t }));
            }
            Ok(Report::ok(text, json!({ "generators": rows })))
        }
        Command::Lift { input, element } => {
            let h = load(cli, input)?.hopf()?;
            let x = parse_element(&h, element)?;
            let lift = find_primitive_lift(&h, &x)?;
            Ok(Report::ok(
                h.format_vector(&lift),
                json!({ "lift": h.format_vector(&lift), "terms": terms_json(&h, &lift) }),
            ))
        }
        Command::Borel { input } => {
            let h = load(cli, input)?.hopf()?;
            let d = borel_decomposition(&h.algebra)?;
            Ok(Report::ok(
                decomposition_text("monogenic factors A(n,j)", &d),
                json!({ "factors": d }),
            ))
        }
        Command::Poly { input, primes } => {
            let loaded = load(cli, input)?;
            let Presentation::Algebra(pres) = &loaded.presentation else {
                return Err(HopfError::Validation("poly needs an algebra document".into()));
            };
            let verdicts = match primes {
                Some(ps) => polynomial_criterion_integral(pres, ps, loaded.bound)?,
                None => vec![(
                    pres.field.characteristic(),
                    polynomial_criterion(&loaded.presentation.algebra(loaded.bound)?)?,
                )],
            };
            let all = verdicts.iter().all(|(_, v)| v.polynomial);
            let line = |v: &crate::theorems::PolynomialVerdict| match (v.polynomial, v.failing_degree) {
                (true, _) => "polynomial".to_string(),
                (false, Some(d)) => format!("not polynomial (fails in degree {d})"),
                (false, None) => "not polynomial".to_string(),
            };
            let text = if primes.is_none() {
                format!("{}\n", line(&verdicts[0].1))
            } else {
                verdicts
                    .iter()
                    .map(|(p, v)| format!("p = {p}: {}\n", line(v)))
                    .collect()
            };
            let json = json!({
                "polynomial": all,
                "verdicts": verdicts.iter().map(|(p, v)| json!({ "prime": p, "verdict": v })).collect::<Vec<_>>(),
            });
            Ok(Report::verdict(all, text, json))
        }
        Command::Poincare { input, j } => {
            let loaded = load(cli, input)?;
            let a = loaded.presentation.algebra(loaded.bound)?;
            let m = frobenius_module(&a)?;
            let profile = series_profile(&m)?;
            let rows = j.unwrap_or(profile.j_max).min(profile.j_max);
            let table: String = profile
                .table()
                .lines()
                .enumerate()
                .filter(|(i, _)| *i == 0 || *i > profile.j_max + 1 || *i <= rows + 1)
                .map(|(_, l)| format!("{l}\n"))
                .collect();
            let failure = tensor_identity_failure(&m)?;
            // χ_Ā = 1 − 1/χ_{J∨(A)}
            let h = loaded.hopf()?;
            let dims = |d: Vec<usize>| d.iter().map(|x| *x as i64).collect::<Vec<_>>();
            let jv = TruncatedSeries::from_coeffs(loaded.bound, &dims(h.basis().dims()));
            let mut reduced = dims(a.basis.dims());
            reduced[0] = 0;
            let abar = TruncatedSeries::from_coeffs(loaded.bound, &reduced);
            let one = TruncatedSeries::one(loaded.bound);
            let scalar_identity = one.sub(&jv.inverse()?)? == abar;
            let mut text = format!("cokernel series of F^(j+1) on the augmentation ideal (? = undetermined)\n{table}");
            text.push_str(&match failure {
                None => "tensor identity 1 + χ^j(T̄M) = 1/(1 − χ^j(M)): holds\n".to_string(),
                Some((j, d)) => format!("tensor identity 1 + χ^j(T̄M) = 1/(1 − χ^j(M)): fails at j = {j}, degree {d}\n"),
            });
            text.push_str(&format!(
                "series identity χ(Ā) = 1 − 1/χ(J∨(A)): {}\n",
                if scalar_identity { "holds" } else { "fails" }
            ));
            let json = json!({
                "profile": profile_json(&profile, rows),
                "tensor_identity": failure.map(|(j, d)| json!({ "j": j, "degree": d })),
                "series_identity": scalar_identity,
            });
            Ok(Report::ok(text, json))
        }
        Command::Gallery { action } => match action {
            GalleryAction::List => {
                let json = Value::Array(
                    gallery::entries()
                        .iter()
                        .map(|e| {
                            json!({
                                "name": e.name,
                                "aliases": e.aliases,
                                "characteristic": e.characteristic,
                                "description": e.description,
                            })
                        })
                        .collect(),
                );
                Ok(Report::ok(gallery::listing(), json))
            }
            GalleryAction::Show { name } => {
                let loaded = load(cli, &format!("gallery:{name}"))?;
                let entry = gallery::find(name).expect("loaded entries exist");
                let doc = loaded.presentation.to_document(loaded.bound)?;
                let h = loaded.hopf()?;
                let dims: Vec<String> = h.basis().dims().iter().map(ToString::to_string).collect();
                let text = format!(
                    "{}: {}\ndimensions: {}\n{}\n",
                    entry.name,
                    entry.description,
                    dims.join(","),
                    doc.to_json()
                );
                let json = json!({
                    "name": entry.name,
                    "description": entry.description,
                    "dimensions": h.basis().dims(),
                    "document": doc,
                });
                Ok(Report::ok(text, json))
            }
        },
    }
}

/// A Hopf map matching generators by label, when both sides are free on the
/// same labels.
fn search_witness(h1: &Bialgebra, h2: &Bialgebra, budget: u64) -> Option<String> {
    let (p1, p2) = (h1.free_presentation()?, h2.free_presentation()?);
    let labels: Vec<&str> = p1.letters.iter().map(|l| l.label.as_str()).collect();
    if p2.letters.iter().map(|l| l.label.as_str()).collect::<Vec<_>>() != labels {
        return None;
    }
    let pairs: Vec<(&str, &str)> = labels.iter().map(|l| (*l, *l)).collect();
    let q = q_by_labels(h1, h2, &pairs).ok()?;
    match hopf_morphism_search(h1, h2, &q, budget) {
        Ok(w) => {
            let images: Vec<String> = w
                .generator_images
                .iter()
                .map(|(g, v)| format!("{g} ↦ {}", h2.format_vector(v)))
                .collect();
            Some(format!(
                "witness{}: {}",
                if w.is_iso { " (bijective)" } else { "" },
                images.join(", ")
            ))
        }
        Err(e) => Some(format!("no witness found: {e}")),
    }
}
