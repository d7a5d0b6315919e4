//! Command-line front end. [`run`] parses arguments, runs one subcommand and
//! returns the exit status with the full report, so the binary stays thin.
//!
//! Exit status: 0 when everything checked holds, 1 when a counterexample or
//! absence was found, 2 on usage, parse or input errors.

use std::fmt::Write as _;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::coeffring::{is_semiprime_ring, is_vnr, jacobson_radical, Ring, RingSpec, SemiprimeVerdict, VnrVerdict};
use crate::cornerlaurent::{csl_graded_witness, CornerFile, CslAlgebra};
use crate::error::{Error, Result};
use crate::gradedstruct::{classify, PathAlgebraOracle};
use crate::graph::{cohn_cover, GraphFile, MorphismVerdict};
use crate::morphisms::{induced_hom, verify_graded_iso, MorphismFile};
use crate::pathalg::{matricial_decompose, Algebra, AlgebraElement, AlgebraSpec, BlockLabel, ElementFile};
use crate::regularity::{graded_vnr_verdict, graded_witness_constructive, graded_witness_oracle, Method, Verdict, VerdictConfig};

#[derive(Parser, Debug)]
#[command(name = "gral", version, about = "Graded regularity checks for Leavitt path algebras and related rings")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Largest |degree| examined.
    #[arg(long, global = true, default_value_t = 3)]
    pub degree_bound: usize,
    /// Largest path length (or filtration level) examined.
    #[arg(long, global = true, default_value_t = 3)]
    pub size_bound: usize,
    /// Random homogeneous elements drawn by `lpa verdict`.
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Witness method; defaults to constructive when the coefficients are regular.
    #[arg(long, global = true, value_enum)]
    pub method: Option<MethodArg>,
    /// Emit JSON instead of line-oriented text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum MethodArg {
    Constructive,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Constructive => Method::Constructive,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Regularity, radical and semiprimeness of a coefficient ring.
    CheckRing { ring: PathBuf },
    #[command(subcommand)]
    Lpa(LpaCommand),
    #[command(subcommand)]
    Graph(GraphCommand),
    #[command(subcommand)]
    Morphism(MorphismCommand),
    #[command(subcommand)]
    Corner(CornerCommand),
    /// Runs the built-in fixture checks.
    Examples,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    /// Graph file; its `x` field selects a relative Cohn algebra.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub ring: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum LpaCommand {
    /// Homogeneous witness `b` with `x b x = x`.
    Witness {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        element: PathBuf,
    },
    /// Graded regularity verdict over monomials and random samples.
    Verdict {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Strong, epsilon-strong, nearly epsilon-strong and symmetric grading.
    Classify {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Image of a degree-zero element in the matrix blocks of `D_n`.
    Decompose {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        element: PathBuf,
        /// Filtration level; defaults to the least one containing the element.
        #[arg(long)]
        level: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum GraphCommand {
    /// The graph `E(X)` whose Leavitt path algebra is `C^X(E)`.
    Cover {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum MorphismCommand {
    /// Validates a graph morphism and tests the induced hom for a graded iso.
    Check {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
        #[arg(long)]
        ring: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum CornerCommand {
    /// Witnesses in a corner skew Laurent ring.
    Witness {
        #[arg(long)]
        corner: PathBuf,
        /// Check only `coeff · t^degree` instead of every homogeneous term.
        #[arg(long, requires = "coeff", allow_negative_numbers = true)]
        degree: Option<i64>,
        /// Coefficient as JSON, e.g. `2` or `[1,0]`.
        #[arg(long, requires = "degree")]
        coeff: Option<String>,
    },
}

/// Exit status and rendered report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub status: i32,
    pub report: String,
}

struct Report {
    ok: bool,
    text: String,
    json: Value,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            return RunOutput { status, report: e.to_string() };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> RunOutput {
    let cfg = &cli.config;
    let report = match dispatch(&cli.command, cfg) {
        Ok(r) => r,
        Err(e) => return RunOutput { status: 2, report: format!("error: {e}\n") },
    };
    let mut body = if cfg.json {
        serde_json::to_string_pretty(&report.json).expect("reports serialize") + "\n"
    } else {
        report.text
    };
    if let Some(path) = &cfg.output {
        if let Err(e) = std::fs::write(path, &body) {
            return RunOutput { status: 2, report: format!("error: writing {}: {e}\n", path.display()) };
        }
        body = format!("wrote {}\n", path.display());
    }
    RunOutput { status: if report.ok { 0 } else { 1 }, report: body }
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Report> {
    match cmd {
        Command::CheckRing { ring } => check_ring(ring),
        Command::Lpa(LpaCommand::Witness { alg, element }) => lpa_witness(alg, element, cfg),
        Command::Lpa(LpaCommand::Verdict { alg }) => lpa_verdict(alg, cfg),
        Command::Lpa(LpaCommand::Classify { alg }) => lpa_classify(alg, cfg),
        Command::Lpa(LpaCommand::Decompose { alg, element, level }) => lpa_decompose(alg, element, *level),
        Command::Graph(GraphCommand::Cover { graph }) => graph_cover(graph),
        Command::Morphism(MorphismCommand::Check { source, target, morphism, ring }) => {
            morphism_check(source, target, morphism, ring, cfg)
        }
        Command::Corner(CornerCommand::Witness { corner, degree, coeff }) => {
            corner_witness(corner, degree.zip(coeff.as_deref()), cfg)
        }
        Command::Examples => Ok(examples(cfg)),
    }
}

fn read_json<T: DeserializeOwned>(path: &FsPath) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_ring(path: &FsPath) -> Result<Ring> {
    let spec: RingSpec = read_json(path)?;
    match spec {
        RingSpec::Table { one: None, .. } => Ring::new_non_unital(spec),
        _ => Ring::new(spec),
    }
}

fn load_algebra(args: &AlgebraArgs) -> Result<Algebra> {
    let rel = read_json::<GraphFile>(&args.graph)?.into_relative()?;
    let ring = load_ring(&args.ring)?;
    if !ring.is_unital() {
        return Err(Error::BadRingSpec("path algebras need a unital coefficient ring".into()));
    }
    Ok(AlgebraSpec::new(rel, ring))
}

fn load_element(alg: &Algebra, path: &FsPath) -> Result<AlgebraElement> {
    AlgebraElement::from_file(alg, &read_json::<ElementFile>(path)?)
}

fn pick_method(cfg: &RunConfig, ring: &Ring) -> Method {
    cfg.method.map(Method::from).unwrap_or(if is_vnr(ring).is_regular() {
        Method::Constructive
    } else {
        Method::Oracle
    })
}

fn check_ring(path: &FsPath) -> Result<Report> {
    let ring = load_ring(path)?;
    let fmt_all = |xs: &[crate::coeffring::RingElement]| xs.iter().map(|&x| ring.format(x)).collect::<Vec<_>>();
    let vnr = is_vnr(&ring);
    let radical = jacobson_radical(&ring)?;
    let semiprime = is_semiprime_ring(&ring)?;
    let mut text = format!("ring: {}\norder: {}\n", ring.name(), ring.order());
    let vnr_json = match &vnr {
        VnrVerdict::Regular { witnesses } => {
            writeln!(text, "vnr: holds").unwrap();
            for (a, y) in witnesses {
                writeln!(text, "witness {} = {} {} {}", ring.format(*a), ring.format(*a), ring.format(*y), ring.format(*a)).unwrap();
            }
            json!({"holds": true, "witnesses": witnesses.iter().map(|&(a, y)| [ring.format(a), ring.format(y)]).collect::<Vec<_>>()})
        }
        VnrVerdict::NotRegular { counterexample } => {
            writeln!(text, "vnr: fails, counterexample {}", ring.format(*counterexample)).unwrap();
            json!({"holds": false, "counterexample": ring.format(*counterexample)})
        }
    };
    writeln!(text, "radical: {{{}}}", fmt_all(&radical).join(", ")).unwrap();
    let semi_json = match semiprime {
        SemiprimeVerdict::Semiprime => {
            writeln!(text, "semiprime: holds").unwrap();
            json!({"holds": true})
        }
        SemiprimeVerdict::NotSemiprime { witness } => {
            writeln!(text, "semiprime: fails, witness {}", ring.format(witness)).unwrap();
            json!({"holds": false, "witness": ring.format(witness)})
        }
    };
    Ok(Report {
        ok: vnr.is_regular(),
        json: json!({"ring": ring.name(), "order": ring.order(), "vnr": vnr_json, "radical": fmt_all(&radical), "semiprime": semi_json}),
        text,
    })
}

fn lpa_witness(args: &AlgebraArgs, element: &FsPath, cfg: &RunConfig) -> Result<Report> {
    let alg = load_algebra(args)?;
    let x = load_element(&alg, element)?;
    let cert = match pick_method(cfg, alg.ring()) {
        Method::Constructive => graded_witness_constructive(&x)?,
        Method::Oracle => graded_witness_oracle(&x, cfg.size_bound)?,
    };
    let rec = cert.record();
    Ok(Report {
        ok: rec.witness.is_some(),
        text: format!("algebra: {}\n{rec}\n", alg.name()),
        json: json!({"algebra": alg.name(), "certificate": rec}),
    })
}

fn lpa_verdict(args: &AlgebraArgs, cfg: &RunConfig) -> Result<Report> {
    let alg = load_algebra(args)?;
    let vc = VerdictConfig {
        degree_bound: cfg.degree_bound,
        size_bound: cfg.size_bound,
        samples: cfg.samples,
        seed: cfg.seed,
        method: cfg.method.map(Method::from),
    };
    let report = graded_vnr_verdict(&alg, &vc)?;
    let mut text = format!(
        "algebra: {}\nmethod: {}\nelements: {}\n",
        report.algebra,
        report.method,
        report.certificates.len()
    );
    let verdict_json = match &report.verdict {
        Verdict::VerifiedAtBounds => {
            writeln!(text, "verdict: verified at bounds degree={} size={}", cfg.degree_bound, cfg.size_bound).unwrap();
            json!({"holds": true})
        }
        Verdict::Counterexample { index, exact } => {
            let rec = report.certificates[*index].record();
            let kind = if *exact { "exact" } else { "at bound" };
            writeln!(text, "verdict: counterexample ({kind})\n{rec}").unwrap();
            json!({"holds": false, "exact": exact, "certificate": rec})
        }
    };
    Ok(Report {
        ok: report.holds(),
        json: json!({
            "algebra": report.algebra,
            "method": report.method,
            "elements": report.certificates.len(),
            "verdict": verdict_json,
        }),
        text,
    })
}

fn lpa_classify(args: &AlgebraArgs, cfg: &RunConfig) -> Result<Report> {
    let alg = load_algebra(args)?;
    let report = classify(&PathAlgebraOracle::new(&alg), cfg.degree_bound, cfg.size_bound)?;
    let violation = report.chain_violation();
    let mut text = report.to_string();
    if let Some(v) = &violation {
        writeln!(text, "chain violation: {v}").unwrap();
    }
    Ok(Report {
        ok: violation.is_none(),
        json: json!({"report": report, "chain_violation": violation}),
        text,
    })
}

fn block_name(alg: &Algebra, label: &BlockLabel, level: usize) -> String {
    let g = alg.graph();
    match *label {
        BlockLabel::Sink { level, vertex } => format!("P({level},{})", g.vertex_name(vertex)),
        BlockLabel::Full { vertex } => format!("P({level},{})", g.vertex_name(vertex)),
    }
}

fn lpa_decompose(args: &AlgebraArgs, element: &FsPath, level: Option<usize>) -> Result<Report> {
    let alg = load_algebra(args)?;
    let x = load_element(&alg, element)?;
    let n = match level {
        Some(n) => n,
        None => x.filtration_level()?,
    };
    let image = matricial_decompose(&x, n)?;
    let g = alg.graph();
    let ring = alg.ring();
    let mut text = format!("algebra: {}\nelement: {x}\nlevel: {n}\n", alg.name());
    let mut blocks = Vec::new();
    for b in &image.blocks {
        let name = block_name(&alg, &b.label, n);
        let paths: Vec<String> = b.paths.iter().map(|p| g.path_name(p)).collect();
        let matrix = b.matrix.format(ring);
        writeln!(text, "block {name} [{}]: {matrix}", paths.join(" ")).unwrap();
        blocks.push(json!({"block": name, "paths": paths, "matrix": matrix}));
    }
    Ok(Report {
        ok: true,
        json: json!({"algebra": alg.name(), "element": x.to_string(), "level": n, "blocks": blocks}),
        text,
    })
}

fn graph_cover(path: &FsPath) -> Result<Report> {
    let rel = read_json::<GraphFile>(path)?.into_relative()?;
    let file = cohn_cover(&rel)?.to_file(None);
    let json = serde_json::to_value(&file).expect("graph files serialize");
    Ok(Report { ok: true, text: serde_json::to_string_pretty(&json).expect("serializes") + "\n", json })
}

fn morphism_check(source: &FsPath, target: &FsPath, morphism: &FsPath, ring: &FsPath, cfg: &RunConfig) -> Result<Report> {
    let graph = |p: &FsPath| -> Result<_> {
        Ok(read_json::<GraphFile>(p)?.into_relative()?.graph)
    };
    let psi = read_json::<MorphismFile>(morphism)?.into_morphism(graph(source)?, graph(target)?)?;
    let ring = load_ring(ring)?;
    let mut text = String::new();
    match psi.validate() {
        MorphismVerdict::Invalid { condition, detail } => {
            writeln!(text, "morphism: invalid ({condition}): {detail}").unwrap();
            Ok(Report {
                ok: false,
                json: json!({"valid": false, "condition": condition.to_string(), "detail": detail}),
                text,
            })
        }
        MorphismVerdict::Valid => {
            writeln!(text, "morphism: valid").unwrap();
            let h = induced_hom(&psi, &ring)?;
            let iso = verify_graded_iso(&h, cfg.degree_bound, cfg.size_bound)?;
            let iso_text = match &iso {
                crate::morphisms::IsoVerdict::HoldsExactly { source_rank, target_rank } => {
                    format!("holds exactly (ranks {source_rank} and {target_rank})")
                }
                crate::morphisms::IsoVerdict::HoldsAtBound { size_bound } => format!("holds at bound {size_bound}"),
                crate::morphisms::IsoVerdict::Fails { reason } => format!("fails: {reason}"),
            };
            writeln!(text, "graded iso: {iso_text}").unwrap();
            Ok(Report { ok: true, json: json!({"valid": true, "graded_iso": iso_text, "iso_holds": iso.holds()}), text })
        }
    }
}

fn corner_witness(path: &FsPath, single: Option<(i64, &str)>, cfg: &RunConfig) -> Result<Report> {
    let alg: CslAlgebra = read_json::<CornerFile>(path)?.into_algebra()?;
    let ring = alg.ring().clone();
    let elements = match single {
        Some((d, c)) => {
            let v: Value = serde_json::from_str(c).map_err(|e| Error::Parse(format!("coefficient {c}: {e}")))?;
            vec![alg.term(d, ring.decode(&v)?)]
        }
        None => {
            let b = cfg.degree_bound as i64;
            (-b..=b)
                .flat_map(|d| ring.elements().filter(|&a| !ring.is_zero(a)).map(move |a| (d, a)))
                .map(|(d, a)| alg.term(d, a))
                .filter(|x| !x.is_zero())
                .collect()
        }
    };
    let mut text = format!("algebra: {}\n", alg.name());
    let mut records = Vec::new();
    let mut ok = true;
    for x in &elements {
        let rec = csl_graded_witness(x)?.record();
        ok &= rec.witness.is_some();
        writeln!(text, "{rec}\n").unwrap();
        records.push(rec);
    }
    let absent = records.iter().filter(|r| r.witness.is_none()).count();
    writeln!(text, "elements: {}\nabsences: {absent}", records.len()).unwrap();
    Ok(Report { ok, json: json!({"algebra": alg.name(), "certificates": records, "absences": absent}), text })
}

fn examples(cfg: &RunConfig) -> Report {
    let results = fixture_checks(cfg);
    let mut text = String::new();
    let mut rows = Vec::new();
    for (name, outcome) in &results {
        match outcome {
            Ok(()) => writeln!(text, "pass {name}").unwrap(),
            Err(why) => writeln!(text, "FAIL {name}: {why}").unwrap(),
        }
        rows.push(json!({"check": name, "pass": outcome.is_ok(), "detail": outcome.as_ref().err()}));
    }
    let passed = results.iter().filter(|(_, r)| r.is_ok()).count();
    writeln!(text, "{passed}/{} checks passed", results.len()).unwrap();
    Report { ok: passed == results.len(), json: json!({"checks": rows, "passed": passed}), text }
}

type Check = std::result::Result<(), String>;

fn expect(cond: bool, why: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn fixture_checks(cfg: &RunConfig) -> Vec<(&'static str, Check)> {
    use crate::fixtures as fx;
    use crate::gradedstruct::{check_epsilon_strong, check_strong_z, jacobson_radical_algebra, GradedRingOracle, MatrixGradingOracle};
    use crate::morphisms::{chain_colimit_check, cohn_to_leavitt, IsoVerdict};
    use crate::pathalg::dn_rank;
    use crate::graph::RelativeGraph;

    let err = |e: Error| e.to_string();
    let gen = |alg: &Algebra, name: &str, c: i64| -> Result<AlgebraElement> {
        Ok(AlgebraElement::generator(alg, name)?.scale(alg.ring().from_int(c)))
    };
    let absence = |alg: Algebra, name: &'static str| -> Check {
        let x = gen(&alg, name, 2).map_err(err)?;
        let cert = graded_witness_oracle(&x, 3).map_err(err)?;
        expect(cert.is_exact_absence(), || format!("2{name}: {}", cert.record()))
    };
    let mut out: Vec<(&'static str, Check)> = Vec::new();

    out.push(("Z/4 is not regular, counterexample 2", {
        let z4 = fx::z(4);
        expect(is_vnr(&z4) == VnrVerdict::NotRegular { counterexample: z4.from_int(2) }, || format!("{:?}", is_vnr(&z4)))
    }));
    out.push(("graded regularity of L(A1) over Z/6", (|| {
        let alg = AlgebraSpec::leavitt(fx::a1(), fx::z(6));
        let vc = VerdictConfig { samples: 20, seed: cfg.seed, ..VerdictConfig::default() };
        let r = graded_vnr_verdict(&alg, &vc).map_err(err)?;
        expect(r.holds(), || format!("{:?}", r.verdict))
    })()));
    out.push(("2v has no witness in L(A1) over Z/4", absence(AlgebraSpec::leavitt(fx::a1(), fx::z(4)), "v")));
    out.push(("2f has no witness in L(v->w) over Z/4", absence(AlgebraSpec::leavitt(fx::v_to_w(), fx::z(4)), "f")));
    out.push(("D_n ranks match the block formula", {
        let rank = |g, n| dn_rank(&AlgebraSpec::leavitt(g, fx::z(2)), n);
        let got = [rank(fx::loop_graph(), 1), rank(fx::loop_graph(), 2), rank(fx::loop_graph(), 3), rank(fx::v_to_w(), 1), rank(fx::rose2(), 2)];
        expect(got == [1, 1, 1, 2, 16], || format!("{got:?}"))
    }));
    out.push(("matrix grading epsilon table", (|| {
        let o = MatrixGradingOracle::new(fx::z(2)).map_err(err)?;
        let (rep, table) = check_epsilon_strong(&o, 3, 3).map_err(err)?;
        let one = o.identity().expect("unital");
        let good = rep.overall.holds()
            && table[&1] == o.unit(0, 0)
            && table[&-1] == o.unit(1, 1)
            && table[&0] == one
            && [2, 3, -2, -3].iter().all(|d| o.is_zero(&table[d]));
        expect(good, || format!("{table:?}"))
    })()));
    out.push(("strongly graded iff no sinks", (|| {
        for (name, g) in fx::six_graphs() {
            let o = PathAlgebraOracle::new(&AlgebraSpec::leavitt(g, fx::z(2)));
            let v = check_strong_z(&o, 3).map_err(err)?;
            expect(v.holds() == o.no_sinks(), || format!("{name}: {v}"))?;
        }
        Ok(())
    })()));
    out.push(("C(v->w) with X empty is L(E(X))", (|| {
        let rel = RelativeGraph::with_names(std::sync::Arc::new(fx::v_to_w()), &[]).map_err(err)?;
        let h = cohn_to_leavitt(&rel, &fx::z(2)).map_err(err)?;
        let v = verify_graded_iso(&h, 3, 3).map_err(err)?;
        expect(v == IsoVerdict::HoldsExactly { source_rank: 5, target_rank: 5 }, || format!("{v:?}"))
    })()));
    out.push(("the three-object chain commutes", (|| {
        let v = chain_colimit_check(&fx::chain(), &fx::z(2), None).map_err(err)?;
        expect(v.holds(), || format!("{v:?}"))
    })()));
    out.push(("radical of L(A1) over Z/2 and Z/4", (|| {
        let j2 = jacobson_radical_algebra(&AlgebraSpec::leavitt(fx::a1(), fx::z(2))).map_err(err)?;
        let a4 = AlgebraSpec::leavitt(fx::a1(), fx::z(4));
        let j4 = jacobson_radical_algebra(&a4).map_err(err)?;
        let two_v = gen(&a4, "v", 2).map_err(err)?;
        expect(j2.elements.len() == 1 && j4.generators == vec![two_v], || format!("{} and {:?}", j2.elements.len(), j4.generators))
    })()));
    out.push(("corner Laurent witnesses", (|| {
        let sw = fx::swap_laurent();
        let r = sw.ring().clone();
        for d in -3..=3 {
            for a in r.elements().filter(|&a| !r.is_zero(a)) {
                let cert = csl_graded_witness(&sw.term(d, a)).map_err(err)?;
                expect(cert.witness().is_some(), || cert.record().to_string())?;
            }
        }
        let z4 = fx::laurent(fx::z(4));
        let x = z4.term(1, z4.ring().from_int(2));
        let cert = csl_graded_witness(&x).map_err(err)?;
        expect(cert.is_exact_absence(), || cert.record().to_string())
    })()));
    out
}
