//! The `qchrom` command line.
//!
//! Results go to standard output (plain text, or JSON with `--json`);
//! diagnostics and human-readable reports go to standard error. Exit codes:
//! 0 success, 1 verification failure, 2 usage or input error, 3 inconclusive
//! (search budget exhausted).

use crate::cert::json::{parse_certificate_json, write_certificate_json};
use crate::cert::{
    classical_to_rank1, equalize_ranks, extract_classical_3col, normal_form, pullback, rank1_to_projector,
    real_rep_to_rank1_od, tensor_union, unit_modulus_rep_to_rank1, verify, CertError, Certificate, ProjectorCert,
};
use crate::experiment::{run_gnp_experiment, GnpConfig};
use crate::graph::io::{parse_any, write_dimacs, write_json};
use crate::graph::{
    complete_graph, cycle_graph, gnp, verify_proper_colouring, ClassicalColouring, Graph, Homomorphism,
};
use crate::report::Report;
use crate::repro::repro_all;
use crate::solve::{
    chromatic_number, is_bipartite, max_clique, max_independent_set, Budget, SolveError, DEFAULT_BUDGET,
};
use crate::vecrep::io::{parse_vectors_json, write_vectors_json};
use crate::vecrep::{
    fourth_roots_dim4_graph, g18_dataset, hadamard_graph, hadamard_rep, roots_of_unity_graph, VectorRep,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Environment variable overriding the default search budget.
pub const BUDGET_ENV: &str = "QCHROM_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "qchrom",
    version,
    about = "Quantum colourings of graphs: certificates and exact solvers"
)]
struct Cli {
    /// Emit machine-readable JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search-node budget for exact solvers.
    #[arg(long, global = true, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Absolute tolerance for certificate verification.
    #[arg(long, global = true, default_value_t = crate::cert::DEFAULT_TOL)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph (DIMACS by default, JSON with --json).
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Compute an exact graph parameter.
    Solve {
        parameter: SolveParam,
        /// Graph file (DIMACS or JSON); `-` or omitted reads standard input.
        #[arg(default_value = "-")]
        graph: String,
        /// Include the witness (clique, independent set or colouring).
        #[arg(long)]
        witness: bool,
    },
    /// Verify a colouring or certificate.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Build or transform certificates.
    Construct {
        #[command(subcommand)]
        what: ConstructWhat,
    },
    /// Reproduce the reference examples.
    Repro,
    /// Random-graph experiments.
    Experiment {
        #[command(subcommand)]
        what: ExperimentWhat,
    },
}

#[derive(Args, Debug)]
struct VectorsOut {
    /// Also write the defining vectors to this file.
    #[arg(long)]
    vectors: Option<String>,
}

#[derive(Subcommand, Debug)]
enum GenFamily {
    /// n-bit strings adjacent at Hamming distance n/2 (n even).
    Hadamard {
        n: u32,
        #[command(flatten)]
        out: VectorsOut,
    },
    /// Orthogonality graph of all p-th-root-of-unity vectors in C^p (p prime).
    Roots {
        p: u32,
        #[command(flatten)]
        out: VectorsOut,
    },
    /// Orthogonality graph of the 64 vectors (1, i^a, i^b, i^c).
    Dim4 {
        #[command(flatten)]
        out: VectorsOut,
    },
    /// Erdos-Renyi G(n, p) seeded by --seed.
    Gnp { n: usize, p: f64 },
    /// The 18-vertex, 44-edge example graph.
    G18 {
        #[command(flatten)]
        out: VectorsOut,
    },
    /// Complete graph K_n.
    Complete { n: usize },
    /// Cycle C_n.
    Cycle { n: usize },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SolveParam {
    Chi,
    Omega,
    Alpha,
    Bipartite,
}

#[derive(Subcommand, Debug)]
enum VerifyWhat {
    /// Check that a colouring is proper.
    Colouring {
        graph: String,
        /// JSON `{"c", "colours"}` (0-indexed) or whitespace-separated
        /// 1-indexed colours with `#` comments.
        colouring: String,
    },
    /// Verify a rank-1 certificate file.
    Rank1 { cert: String },
    /// Verify a projector certificate file.
    Projector { cert: String },
    /// Verify a general (state + POVM) certificate file.
    General { cert: String },
}

#[derive(Subcommand, Debug)]
enum ConstructWhat {
    /// Unit-modulus orthogonal representation -> rank-1 certificate.
    FourierLift { graph: String, vectors: String },
    /// Real orthogonal representation (dim <= 8) -> 4- or 8-colour certificate.
    OdLift { graph: String, vectors: String },
    /// Proper colouring -> rank-1 certificate.
    ClassicalLift { graph: String, colouring: String },
    /// Certificates for G and H on one vertex set -> certificate for their union.
    TensorUnion { cert_g: String, cert_h: String },
    /// Certificate for H pulled back along a homomorphism G -> H.
    Pullback {
        /// Source graph G.
        graph: String,
        /// Vertex map: JSON list or whitespace-separated 0-indexed targets.
        map: String,
        /// Certificate on H (its embedded graph is the target).
        cert: String,
    },
    /// General certificate -> projector certificate with a maximally entangled state.
    NormalForm { cert: String },
    /// Projector certificate -> equal-rank projector certificate.
    Equalize { cert: String },
    /// 3-colour rank-1 certificate on a connected graph -> classical 3-colouring.
    Extract3 { cert: String },
}

#[derive(Subcommand, Debug)]
enum ExperimentWhat {
    /// Clique number of seeded G(n, p) samples against 2 ln n / ln(1/p).
    Gnp {
        /// Vertex counts (repeat or comma-separate).
        #[arg(long = "n", value_delimiter = ',', default_value = "50")]
        ns: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        /// Compute chi only for n up to this value.
        #[arg(long, default_value_t = 60)]
        chi_cap: usize,
    },
}

/// Errors mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Inconclusive(String),
    Verification(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Inconclusive { .. } => Failure::Inconclusive(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<CertError> for Failure {
    fn from(e: CertError) -> Self {
        match e {
            CertError::Precondition(_)
            | CertError::SelfCheck(_)
            | CertError::ConsistencyFailure(_)
            | CertError::ImproperColouring(_) => Failure::Verification(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
        }
    }

    fn graph(&mut self, path: &str) -> Result<Graph, Failure> {
        let text = self.read(path)?;
        parse_any(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }

    fn vectors(&mut self, path: &str) -> Result<VectorRep, Failure> {
        let text = self.read(path)?;
        parse_vectors_json(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }

    fn cert(&mut self, path: &str) -> Result<(Graph, Certificate), Failure> {
        let text = self.read(path)?;
        parse_certificate_json(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }

    fn colouring(&mut self, path: &str) -> Result<ClassicalColouring, Failure> {
        let text = self.read(path)?;
        parse_colouring(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

/// JSON `{"c", "colours"}` (0-indexed), or plain 1-indexed colours.
pub fn parse_colouring(text: &str) -> Result<ClassicalColouring, String> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| e.to_string());
    }
    let colours = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .map(|t| match t.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(format!("bad colour `{t}` (plain colourings are 1-indexed)")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    ClassicalColouring::from_colours(colours).map_err(|e| e.to_string())
}

fn parse_map(text: &str) -> Result<Vec<usize>, String> {
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(text).map_err(|e| e.to_string());
    }
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad vertex `{t}`")))
        .collect()
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(io.stderr, "verification failed: {msg}");
            EXIT_FAIL
        }
        Err(Failure::Inconclusive(msg)) => {
            let _ = writeln!(io.stderr, "inconclusive: {msg}");
            EXIT_INCONCLUSIVE
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32, Failure> {
    match &cli.command {
        Command::Gen { family } => gen(cli, family, io),
        Command::Solve {
            parameter,
            graph,
            witness,
        } => solve(cli, *parameter, graph, *witness, io),
        Command::Verify { what } => verify_cmd(cli, what, io),
        Command::Construct { what } => construct(cli, what, io),
        Command::Repro => repro(cli, io),
        Command::Experiment {
            what:
                ExperimentWhat::Gnp {
                    ns,
                    p,
                    trials,
                    epsilon,
                    chi_cap,
                },
        } => experiment(
            cli,
            GnpConfig {
                ns: ns.clone(),
                p: *p,
                trials: *trials,
                seed: cli.seed,
                epsilon: *epsilon,
                chi_cap: *chi_cap,
                budget: cli.budget,
            },
            io,
        ),
    }
}

fn write_vectors(path: &Option<String>, rep: &VectorRep) -> Result<(), Failure> {
    if let Some(path) = path {
        std::fs::write(path, write_vectors_json(rep)).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    }
    Ok(())
}

fn gen(cli: &Cli, family: &GenFamily, io: &mut Io) -> Result<i32, Failure> {
    let g = match family {
        GenFamily::Hadamard { n, out } => {
            let g = hadamard_graph(*n).map_err(usage)?;
            write_vectors(&out.vectors, &hadamard_rep(*n).map_err(usage)?)?;
            g
        }
        GenFamily::Roots { p, out } => {
            let (g, rep) = roots_of_unity_graph(*p).map_err(usage)?;
            write_vectors(&out.vectors, &rep)?;
            g
        }
        GenFamily::Dim4 { out } => {
            let (g, rep) = fourth_roots_dim4_graph().map_err(usage)?;
            write_vectors(&out.vectors, &rep)?;
            g
        }
        GenFamily::G18 { out } => {
            let (g, rep) = g18_dataset().map_err(usage)?;
            write_vectors(&out.vectors, &rep)?;
            g
        }
        GenFamily::Gnp { n, p } => gnp(*n, *p, cli.seed).map_err(usage)?,
        GenFamily::Complete { n } => complete_graph(*n).map_err(usage)?,
        GenFamily::Cycle { n } => cycle_graph(*n).map_err(usage)?,
    };
    if cli.json {
        writeln!(io.stdout, "{}", write_json(&g))?;
    } else {
        io.stdout.write_all(write_dimacs(&g).as_bytes())?;
    }
    writeln!(
        io.stderr,
        "generated graph with {} vertices and {} edges",
        g.n(),
        g.edge_count()
    )?;
    Ok(EXIT_OK)
}

fn solve(cli: &Cli, param: SolveParam, path: &str, witness: bool, io: &mut Io) -> Result<i32, Failure> {
    let g = io.graph(path)?;
    let mut budget = Budget::new(cli.budget);
    let start = Instant::now();
    let result = match param {
        SolveParam::Chi => chromatic_number(&g, &mut budget)?,
        SolveParam::Omega => max_clique(&g, &mut budget)?,
        SolveParam::Alpha => max_independent_set(&g, &mut budget)?,
        SolveParam::Bipartite => {
            let col = is_bipartite(&g);
            let ms = start.elapsed().as_secs_f64() * 1e3;
            if cli.json {
                let value = serde_json::json!({
                    "parameter": "bipartite",
                    "value": col.is_some(),
                    "witness": if witness { serde_json::to_value(&col).expect("colouring serializes") } else { serde_json::Value::Null },
                    "nodes": 0,
                    "ms": ms,
                });
                writeln!(io.stdout, "{value}")?;
            } else {
                writeln!(io.stdout, "{}", col.is_some())?;
                if let (true, Some(c)) = (witness, &col) {
                    writeln!(io.stdout, "{}", join(c.colours()))?;
                }
            }
            return Ok(EXIT_OK);
        }
    };
    if cli.json {
        writeln!(io.stdout, "{}", result.to_json(witness))?;
    } else {
        writeln!(io.stdout, "{}", result.value)?;
        if witness {
            match (result.vertices(), result.colouring()) {
                (Some(vs), _) => writeln!(io.stdout, "{}", join(vs))?,
                (_, Some(c)) => writeln!(io.stdout, "{}", join(c.colours()))?,
                _ => {}
            }
        }
    }
    writeln!(
        io.stderr,
        "{} = {} ({} nodes, {:.1} ms)",
        result.parameter, result.value, result.stats.nodes, result.stats.ms
    )?;
    Ok(EXIT_OK)
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn emit_report(cli: &Cli, report: &Report, io: &mut Io) -> Result<i32, Failure> {
    if cli.json {
        writeln!(
            io.stdout,
            "{}",
            serde_json::to_string(report).expect("report serializes")
        )?;
    } else {
        writeln!(io.stdout, "{}", if report.pass { "PASS" } else { "FAIL" })?;
    }
    write!(io.stderr, "{report}")?;
    Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
}

fn verify_cmd(cli: &Cli, what: &VerifyWhat, io: &mut Io) -> Result<i32, Failure> {
    let (path, expected) = match what {
        VerifyWhat::Colouring { graph, colouring } => {
            let g = io.graph(graph)?;
            let col = io.colouring(colouring)?;
            let report = verify_proper_colouring(&g, &col).map_err(usage)?;
            return emit_report(cli, &report, io);
        }
        VerifyWhat::Rank1 { cert } => (cert, "rank1"),
        VerifyWhat::Projector { cert } => (cert, "projector"),
        VerifyWhat::General { cert } => (cert, "general"),
    };
    let (g, cert) = io.cert(path)?;
    if cert.kind() != expected {
        return Err(Failure::Usage(format!(
            "{path}: expected a {expected} certificate, found {}",
            cert.kind()
        )));
    }
    let report = verify(&g, &cert, cli.tol).map_err(usage)?;
    emit_report(cli, &report, io)
}

fn emit_cert(g: &Graph, cert: &Certificate, io: &mut Io) -> Result<i32, Failure> {
    writeln!(io.stdout, "{}", write_certificate_json(g, cert))?;
    writeln!(
        io.stderr,
        "{} certificate: {} vertices, {} colours",
        cert.kind(),
        cert.len(),
        cert.c()
    )?;
    Ok(EXIT_OK)
}

fn as_projector(cert: Certificate, path: &str) -> Result<ProjectorCert, Failure> {
    match cert {
        Certificate::Projector(p) => Ok(p),
        Certificate::Rank1(r) => Ok(rank1_to_projector(&r)?),
        Certificate::General(_) => Err(Failure::Usage(format!(
            "{path}: a general certificate needs `construct normal-form` first"
        ))),
    }
}

fn construct(cli: &Cli, what: &ConstructWhat, io: &mut Io) -> Result<i32, Failure> {
    match what {
        ConstructWhat::FourierLift { graph, vectors } => {
            let g = io.graph(graph)?;
            let rep = io.vectors(vectors)?;
            let cert = unit_modulus_rep_to_rank1(&g, &rep)?;
            emit_cert(&g, &cert.into(), io)
        }
        ConstructWhat::OdLift { graph, vectors } => {
            let g = io.graph(graph)?;
            let rep = io.vectors(vectors)?;
            let cert = real_rep_to_rank1_od(&g, &rep)?;
            emit_cert(&g, &cert.into(), io)
        }
        ConstructWhat::ClassicalLift { graph, colouring } => {
            let g = io.graph(graph)?;
            let col = io.colouring(colouring)?;
            let cert = classical_to_rank1(&g, &col)?;
            emit_cert(&g, &cert.into(), io)
        }
        ConstructWhat::TensorUnion { cert_g, cert_h } => {
            let (g, cg) = io.cert(cert_g)?;
            let (h, ch) = io.cert(cert_h)?;
            let cg = as_projector(cg, cert_g)?;
            let ch = as_projector(ch, cert_h)?;
            let (u, cert) = tensor_union(&g, &cg, &h, &ch, cli.tol)?;
            emit_cert(&u, &cert.into(), io)
        }
        ConstructWhat::Pullback { graph, map, cert } => {
            let g = io.graph(graph)?;
            let map_text = io.read(map)?;
            let map = parse_map(&map_text).map_err(|e| Failure::Usage(format!("map: {e}")))?;
            let (h, cert) = io.cert(cert)?;
            let hom = Homomorphism::new(g.clone(), h, map).map_err(usage)?;
            let pulled = pullback(&hom, &cert, cli.tol)?;
            emit_cert(&g, &pulled, io)
        }
        ConstructWhat::NormalForm { cert } => {
            let (g, c) = io.cert(cert)?;
            let Certificate::General(general) = c else {
                return Err(Failure::Usage(format!(
                    "{cert}: normal-form expects a general certificate"
                )));
            };
            let nf = normal_form(&g, &general, cli.tol)?;
            writeln!(
                io.stderr,
                "{}",
                serde_json::to_string(&nf.report).expect("normal-form report serializes")
            )?;
            emit_cert(&g, &nf.cert.into(), io)
        }
        ConstructWhat::Equalize { cert } => {
            let (g, c) = io.cert(cert)?;
            let p = as_projector(c, cert)?;
            let eq = equalize_ranks(&p.into(), cli.tol)?;
            emit_cert(&g, &eq.into(), io)
        }
        ConstructWhat::Extract3 { cert } => {
            let (g, c) = io.cert(cert)?;
            let Certificate::Rank1(r) = c else {
                return Err(Failure::Usage(format!("{cert}: extract3 expects a rank1 certificate")));
            };
            let col = extract_classical_3col(&g, &r, cli.tol)?;
            if cli.json {
                writeln!(
                    io.stdout,
                    "{}",
                    serde_json::to_string(&col).expect("colouring serializes")
                )?;
            } else {
                let one_indexed: Vec<usize> = col.colours().iter().map(|k| k + 1).collect();
                writeln!(io.stdout, "{}", join(&one_indexed))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn repro(cli: &Cli, io: &mut Io) -> Result<i32, Failure> {
    let mut budget = Budget::new(cli.budget);
    let outcomes = repro_all(&mut budget);
    for o in &outcomes {
        let computed = o.computed.map_or_else(|| "-".to_owned(), |v| v.to_string());
        writeln!(
            io.stderr,
            "{} ({}) {:<42} claimed {:>3} computed {:>3} [{}] {:.1} ms",
            if o.pass { "PASS" } else { "FAIL" },
            o.item,
            o.key,
            o.claimed,
            computed,
            o.citation,
            o.ms
        )?;
        if let Some(note) = &o.note {
            writeln!(io.stderr, "    {note}")?;
        }
    }
    if cli.json {
        writeln!(
            io.stdout,
            "{}",
            serde_json::to_string(&outcomes).expect("outcomes serialize")
        )?;
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    let inconclusive = outcomes
        .iter()
        .any(|o| o.note.as_deref().is_some_and(|n| n.contains("budget")));
    writeln!(
        io.stderr,
        "{} of {} checks passed",
        outcomes.len() - failed,
        outcomes.len()
    )?;
    if !cli.json {
        writeln!(io.stdout, "{}", if failed == 0 { "PASS" } else { "FAIL" })?;
    }
    Ok(match (failed, inconclusive) {
        (0, _) => EXIT_OK,
        (_, true) => EXIT_INCONCLUSIVE,
        _ => EXIT_FAIL,
    })
}

fn experiment(cli: &Cli, config: GnpConfig, io: &mut Io) -> Result<i32, Failure> {
    let outcome = run_gnp_experiment(&config).map_err(usage)?;
    let opt = |x: Option<usize>| x.map_or_else(|| "-".to_owned(), |v| v.to_string());
    if cli.json {
        let value = serde_json::json!({ "records": outcome.records, "summary": outcome.summary });
        writeln!(io.stdout, "{value}")?;
    } else {
        writeln!(io.stdout, "trial\tseed\tn\tp\tedges\tomega\tchi\tbound\twithin\tnodes")?;
        for r in &outcome.records {
            writeln!(
                io.stdout,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.4}\t{}\t{}",
                r.trial,
                r.seed,
                r.n,
                r.p,
                r.edges,
                opt(r.omega),
                opt(r.chi),
                r.bollobas_bound,
                r.within_bound.map_or("-", |b| if b { "yes" } else { "no" }),
                r.nodes
            )?;
        }
    }
    let s = &outcome.summary;
    writeln!(
        io.stderr,
        "{} trials, {} above (1+{})*2 ln n/ln(1/p) (fraction {:.3}), {} inconclusive, prng {}, {:.0} ms",
        s.trials, s.violations, s.epsilon, s.violation_fraction, s.inconclusive, s.prng, s.wall_ms
    )?;
    Ok(if s.inconclusive > 0 { EXIT_INCONCLUSIVE } else { EXIT_OK })
}
