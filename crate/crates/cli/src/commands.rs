//! Subcommands. Each returns a [`Report`]: an exit status, a JSON body and a
//! human-readable rendering. Timing is added only when printing, so the body
//! is reproducible byte for byte.

use std::path::{Path, PathBuf};
use std::time::Duration;

use serde_json::{json, Value};

use qmst::factored::{
    self, ConstantFactor, FactoredRecognition, FactoredSumCertificate, FactoredVerdict, NotSumReason,
};
use qmst::generators::{generate, Family, GenSpec, Generated, GraphShape, CLAIM_STATUS};
use qmst::graph::{decompose, enumerate_spanning_trees};
use qmst::linearize::{
    check, solve_qmstp, verify_linearization, BlockCertificate, BlockWitness, Verification, Verdict,
};
use qmst::matrix::WeakSumWitness;
use qmst::oracle::{mmstp_brute_force, oracle_linearize, OracleOutcome};
use qmst::rat::{self, Rat};
use qmst::{Cost, Instance, SpanningTree};

use crate::error::CliError;
use crate::io::{self, rat_array, rat_value, InstanceFile, Problem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    /// Linearizable, verification passed, solved, written.
    Ok = 0,
    /// Not linearizable or a counterexample was found.
    Negative = 1,
    /// Outside the characterized graph class.
    Unknown = 2,
    /// Usage, I/O, validation or limit errors.
    Error = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub status: ExitStatus,
    pub body: Value,
    pub text: Vec<String>,
}

impl Report {
    pub fn render(&self, format: Format, elapsed: Option<Duration>) -> String {
        match format {
            Format::Json => {
                let mut body = self.body.clone();
                if let Some(t) = elapsed {
                    body["timing"] = json!({ "elapsed_ms": t.as_secs_f64() * 1e3 });
                }
                io::to_canonical_string(&body)
            }
            Format::Text => {
                let mut out = self.text.join("\n");
                if let Some(t) = elapsed {
                    out.push_str(&format!("\ntime: {:.3} ms", t.as_secs_f64() * 1e3));
                }
                out.push('\n');
                out
            }
        }
    }
}

pub fn error_report(err: &CliError) -> Report {
    Report {
        status: ExitStatus::Error,
        body: err.to_json(),
        text: vec![format!("error: {err}")],
    }
}

/// Parameters of `gen`; which ones apply depends on the family.
#[derive(Debug, Clone, Default)]
pub struct GenParams {
    pub seed: u64,
    pub graph: Option<String>,
    pub n: Option<usize>,
    pub n2: Option<usize>,
    pub diag: Option<String>,
    pub k: Option<usize>,
    pub a: Option<String>,
    pub target: Option<String>,
    pub perturb: bool,
}

#[derive(Debug, Clone)]
pub enum Command {
    Check { file: PathBuf },
    Linearize { file: PathBuf, out: Option<PathBuf> },
    Verify { file: PathBuf, c: PathBuf },
    Solve { file: PathBuf },
    Oracle { file: PathBuf },
    Gen { family: String, params: GenParams, out: PathBuf },
    FactoredCheck { file: PathBuf },
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub max_trees: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_trees: qmst::DEFAULT_MAX_TREES,
        }
    }
}

pub fn run(cmd: &Command, opts: &Options) -> Result<Report, CliError> {
    match cmd {
        Command::Check { file } => run_check(&io::parse_instance(file)?, None),
        Command::Linearize { file, out } => run_check(&io::parse_instance(file)?, Some(out.as_deref())),
        Command::Verify { file, c } => run_verify(&io::parse_instance(file)?, &io::parse_c(c)?, opts),
        Command::Solve { file } => run_solve(&io::parse_instance(file)?, opts),
        Command::Oracle { file } => run_oracle(&io::parse_instance(file)?, opts),
        Command::Gen { family, params, out } => run_gen(family, params, out),
        Command::FactoredCheck { file } => run_factored_check(&io::parse_instance(file)?),
    }
}

fn tree_value(tree: &SpanningTree) -> Value {
    json!(tree.edges().iter().map(|e| e + 1).collect::<Vec<_>>())
}

fn one_based(ids: &[usize]) -> Value {
    json!(ids.iter().map(|e| e + 1).collect::<Vec<_>>())
}

fn header(command: &str, file: &InstanceFile) -> Value {
    let g = file.graph();
    json!({
        "command": command,
        "instance": {
            "name": file.name,
            "n": g.vertex_count(),
            "m": g.edge_count(),
        },
    })
}

fn constant_factor_value(c: &ConstantFactor) -> Value {
    match c {
        ConstantFactor::Row(v) => json!({"side": "row", "value": rat_value(v)}),
        ConstantFactor::Col(v) => json!({"side": "col", "value": rat_value(v)}),
    }
}

fn factored_certificate_value(cert: &FactoredSumCertificate) -> Value {
    match cert {
        FactoredSumCertificate::Constant { first, second, e, f } => json!({
            "form": "constant",
            "first": constant_factor_value(first),
            "second": constant_factor_value(second),
            "e": rat_array(e),
            "f": rat_array(f),
        }),
        FactoredSumCertificate::Affine { k, k1, k2, e, f } => json!({
            "form": "affine",
            "K": rat_value(k),
            "K1": rat_value(k1),
            "K2": rat_value(k2),
            "e": rat_array(e),
            "f": rat_array(f),
        }),
    }
}

fn not_sum_value(reason: &NotSumReason) -> Value {
    match reason {
        NotSumReason::ConstantMismatch => json!({"reason": "constant-mismatch"}),
        NotSumReason::SharedRowValue { i, j } => json!({"reason": "shared-row-value", "indices": [i + 1, j + 1]}),
        NotSumReason::RowNotAffine { index } => json!({"reason": "row-not-affine", "index": index + 1}),
        NotSumReason::ColNotAffine { index } => json!({"reason": "col-not-affine", "index": index + 1}),
    }
}

fn not_sum_text(reason: &NotSumReason) -> String {
    match reason {
        NotSumReason::ConstantMismatch => "a constant factor has no constant partner".into(),
        NotSumReason::SharedRowValue { i, j } => format!("a differs at {} and {} while c agrees", i + 1, j + 1),
        NotSumReason::RowNotAffine { index } => format!("a is not affine in c at index {}", index + 1),
        NotSumReason::ColNotAffine { index } => format!("d is not affine in b at index {}", index + 1),
    }
}

fn certificate_value(cert: &BlockCertificate) -> Value {
    match cert {
        BlockCertificate::Sum { rows, cols, certificate } => json!({
            "type": "sum",
            "components": [rows + 1, cols + 1],
            "row": rat_array(&certificate.row),
            "col": rat_array(&certificate.col),
        }),
        BlockCertificate::WeakSum { component, certificate } => json!({
            "type": "weak-sum",
            "component": component + 1,
            "w": rat_array(&certificate.w),
        }),
        BlockCertificate::Cycle { component, c } => json!({
            "type": "cycle",
            "component": component + 1,
            "c": rat_array(c),
        }),
        BlockCertificate::Bridge { component } => json!({"type": "bridge", "component": component + 1}),
        BlockCertificate::Factored { certificate, w } => json!({
            "type": "factored",
            "w": rat_array(w),
            "sum": certificate.as_ref().map(factored_certificate_value),
        }),
    }
}

fn weak_witness_value(w: &WeakSumWitness) -> Value {
    json!({
        "pair": [w.pair.0 + 1, w.pair.1 + 1],
        "expected": rat_value(&w.expected),
        "found": rat_value(&w.found),
        "quadruple": w.quadruple.map(|q| q.map(|e| e + 1)),
    })
}

fn witness_value(w: &BlockWitness) -> Value {
    match w {
        BlockWitness::Sum { rows, cols, witness } => json!({
            "type": "sum",
            "components": [rows + 1, cols + 1],
            "rows": [witness.rows.0 + 1, witness.rows.1 + 1],
            "cols": [witness.cols.0 + 1, witness.cols.1 + 1],
        }),
        BlockWitness::WeakSum { component, witness } => {
            let mut v = weak_witness_value(witness);
            v["type"] = json!("weak-sum");
            v["component"] = json!(component + 1);
            v
        }
        BlockWitness::Factored { reason } => {
            let mut v = not_sum_value(reason);
            v["type"] = json!("factored");
            v
        }
    }
}

fn witness_text(w: &BlockWitness) -> String {
    match w {
        BlockWitness::Sum { rows, cols, witness } => format!(
            "block ({},{}) is not a sum matrix: rows e{},e{} x cols e{},e{}",
            rows + 1,
            cols + 1,
            witness.rows.0 + 1,
            witness.rows.1 + 1,
            witness.cols.0 + 1,
            witness.cols.1 + 1
        ),
        BlockWitness::WeakSum { component, witness } => {
            let mut s = format!(
                "component {} is not a weak sum matrix: q(e{},e{}) = {}, expected {}",
                component + 1,
                witness.pair.0 + 1,
                witness.pair.1 + 1,
                rat::format(&witness.found),
                rat::format(&witness.expected)
            );
            if let Some(q) = witness.quadruple {
                s.push_str(&format!(" (quadruple e{},e{},e{},e{})", q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1));
            }
            s
        }
        BlockWitness::Factored { reason } => format!("factored cost is not a weak sum: {}", not_sum_text(reason)),
    }
}

fn certificate_text(cert: &BlockCertificate) -> String {
    match cert {
        BlockCertificate::Sum { rows, cols, certificate } => format!(
            "block ({},{}) = {} + {}",
            rows + 1,
            cols + 1,
            rat::format_vec(&certificate.row),
            rat::format_vec(&certificate.col)
        ),
        BlockCertificate::WeakSum { component, certificate } => {
            format!("component {} weak sum w = {}", component + 1, rat::format_vec(&certificate.w))
        }
        BlockCertificate::Cycle { component, c } => {
            format!("component {} cycle c = {}", component + 1, rat::format_vec(c))
        }
        BlockCertificate::Bridge { component } => format!("component {} bridge", component + 1),
        BlockCertificate::Factored { certificate, w } => {
            format!("factored {}, w = {}", factored_form_text(certificate), abbreviate(w))
        }
    }
}

fn factored_form_text(certificate: &Option<FactoredSumCertificate>) -> String {
    match certificate {
        Some(FactoredSumCertificate::Constant { .. }) => "constant-factor sum".to_string(),
        Some(FactoredSumCertificate::Affine { k, k1, k2, .. }) => format!(
            "affine sum K={} K1={} K2={}",
            rat::format(k),
            rat::format(k1),
            rat::format(k2)
        ),
        None => "off-diagonal weak sum".to_string(),
    }
}

/// Long vectors are cut in text output; JSON always has them in full.
fn abbreviate(values: &[Rat]) -> String {
    const SHOWN: usize = 12;
    if values.len() <= SHOWN {
        return rat::format_vec(values);
    }
    let head: Vec<String> = values[..SHOWN].iter().map(rat::format).collect();
    format!("({},... {} more)", head.join(","), values.len() - SHOWN)
}

fn verdict_status(v: &Verdict) -> ExitStatus {
    match v {
        Verdict::Linearizable { .. } => ExitStatus::Ok,
        Verdict::NotLinearizable { .. } => ExitStatus::Negative,
        Verdict::UnknownOutsideClass { .. } => ExitStatus::Unknown,
    }
}

fn run_check(file: &InstanceFile, linearize_to: Option<Option<&Path>>) -> Result<Report, CliError> {
    let command = if linearize_to.is_some() { "linearize" } else { "check" };
    let inst = file.qmstp()?;
    let (verdict, path) = check(inst)?;
    let decomp = decompose(inst.graph());

    let mut body = header(command, file);
    let mut text = vec![format!(
        "{}: {} vertices, {} edges, path {}",
        file.name.as_deref().unwrap_or("instance"),
        inst.graph().vertex_count(),
        inst.graph().edge_count(),
        path.name()
    )];
    body["path"] = json!(path.name());
    body["components"] = Value::Array(
        decomp
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| json!({"index": i + 1, "class": c.class.name(), "edges": one_based(&c.edges)}))
            .collect(),
    );
    for (i, c) in decomp.components.iter().enumerate() {
        let edges: Vec<String> = c.edges.iter().map(|e| format!("e{}", e + 1)).collect();
        text.push(format!("component {}: {} [{}]", i + 1, c.class.name(), abbreviate_ids(&edges)));
    }
    body["verdict"] = json!(verdict.label());
    text.push(format!("verdict: {}", verdict.label()));
    let (mut certs, mut witnesses, mut unknown) = (vec![], vec![], Value::Null);
    match &verdict {
        Verdict::Linearizable { c, certificates } => {
            for cert in certificates {
                certs.push(certificate_value(cert));
                text.push(format!("  {}", certificate_text(cert)));
            }
            text.push(format!("c = {}", abbreviate(c)));
            body["c"] = rat_array(c);
        }
        Verdict::NotLinearizable { witness } => {
            witnesses.push(witness_value(witness));
            text.push(format!("  {}", witness_text(witness)));
        }
        Verdict::UnknownOutsideClass { components, witnesses: ws } => {
            unknown = one_based(components);
            for w in ws {
                witnesses.push(witness_value(w));
                text.push(format!("  {}", witness_text(w)));
            }
            text.push("  (weak sum is sufficient but not necessary on these components; try `oracle`)".into());
        }
    }
    if verdict.linearization().is_none() {
        body["c"] = Value::Null;
    }
    body["certificates"] = Value::Array(certs);
    body["witnesses"] = Value::Array(witnesses);
    body["unknown_components"] = unknown;

    if let (Some(Some(out)), Some(c)) = (linearize_to, verdict.linearization()) {
        io::write_c(c, out)?;
        body["output"] = json!(out.display().to_string());
        text.push(format!("wrote {}", out.display()));
    }
    Ok(Report {
        status: verdict_status(&verdict),
        body,
        text,
    })
}

fn abbreviate_ids(ids: &[String]) -> String {
    if ids.len() <= 24 {
        ids.join(",")
    } else {
        format!("{},... {} more", ids[..24].join(","), ids.len() - 24)
    }
}

fn run_verify(file: &InstanceFile, c: &[Rat], opts: &Options) -> Result<Report, CliError> {
    let inst = file.qmstp()?;
    let outcome = verify_linearization(inst, c, opts.max_trees)?;
    let mut body = header("verify", file);
    body["c"] = rat_array(c);
    let (status, text) = match &outcome {
        Verification::Pass { trees } => {
            body["result"] = json!("pass");
            body["trees"] = json!(trees);
            body["counterexample"] = Value::Null;
            (ExitStatus::Ok, vec![format!("pass: C(T) = Q(T) on all {trees} spanning trees")])
        }
        Verification::Counterexample { tree, quadratic, linear } => {
            body["result"] = json!("counterexample");
            body["trees"] = Value::Null;
            body["counterexample"] = json!({
                "tree": tree_value(tree),
                "quadratic": rat_value(quadratic),
                "linear": rat_value(linear),
            });
            (
                ExitStatus::Negative,
                vec![format!(
                    "counterexample: tree {tree} has Q(T) = {} but C(T) = {}",
                    rat::format(quadratic),
                    rat::format(linear)
                )],
            )
        }
    };
    Ok(Report { status, body, text })
}

fn run_solve(file: &InstanceFile, opts: &Options) -> Result<Report, CliError> {
    let mut body = header("solve", file);
    let (tree, cost, method, problem) = match &file.problem {
        Problem::Qmstp(inst) => {
            let sol = solve_qmstp(inst, opts.max_trees)?;
            (sol.tree, sol.cost, sol.method.name(), "qmstp")
        }
        Problem::Mmstp(inst) => {
            let (tree, value) = mmstp_brute_force(inst, opts.max_trees)?;
            (tree, value, "brute-force", "mmstp")
        }
    };
    body["problem"] = json!(problem);
    body["method"] = json!(method);
    body["tree"] = tree_value(&tree);
    body["cost"] = rat_value(&cost);
    let text = vec![format!("optimum {} via {method}: tree {tree}", rat::format(&cost))];
    Ok(Report {
        status: ExitStatus::Ok,
        body,
        text,
    })
}

/// The common tree cost when every spanning tree costs the same.
fn constant_tree_cost(inst: &Instance, max_trees: u64) -> Result<Option<Rat>, CliError> {
    let mut value: Option<Rat> = None;
    for tree in enumerate_spanning_trees(inst.graph(), max_trees)? {
        let cost = inst.tree_cost(&tree);
        match &value {
            None => value = Some(cost),
            Some(v) if *v != cost => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(value)
}

fn run_oracle(file: &InstanceFile, opts: &Options) -> Result<Report, CliError> {
    let inst = file.qmstp()?;
    let outcome = oracle_linearize(inst, opts.max_trees)?;
    let mut body = header("oracle", file);
    let mut text = Vec::new();
    let status = match &outcome {
        OracleOutcome::Feasible { c, trees, rank } => {
            body["feasible"] = json!(true);
            body["trees"] = json!(trees);
            body["rank"] = json!(rank);
            body["c"] = rat_array(c);
            body["infeasible_tree"] = Value::Null;
            text.push(format!("linearizable: {trees} trees, system rank {rank}"));
            text.push(format!("c = {}", abbreviate(c)));
            ExitStatus::Ok
        }
        OracleOutcome::Infeasible { tree, trees } => {
            body["feasible"] = json!(false);
            body["trees"] = json!(trees);
            body["rank"] = Value::Null;
            body["c"] = Value::Null;
            body["infeasible_tree"] = tree_value(tree);
            text.push(format!("not linearizable: tree {tree} (#{trees}) makes the system inconsistent"));
            ExitStatus::Negative
        }
    };

    let constant = constant_tree_cost(inst, opts.max_trees)?;
    let vertices = inst.graph().vertex_count() as i64;
    let per_edge = constant.as_ref().map(|k| k / rat::int(vertices - 1));
    body["constant_tree_cost"] = constant.as_ref().map(rat_value).unwrap_or(Value::Null);
    body["constant_linearization"] = per_edge.as_ref().map(rat_value).unwrap_or(Value::Null);
    if let (Some(k), Some(p)) = (&constant, &per_edge) {
        text.push(format!(
            "every spanning tree costs {}; constant linearization c(e) = {}",
            rat::format(k),
            rat::format(p)
        ));
    }

    body["claim"] = match &file.claim {
        None => Value::Null,
        Some(claim) => {
            let check = verify_linearization(inst, &claim.c, opts.max_trees)?;
            let matches_constant = per_edge.as_ref().map(|p| claim.c.iter().all(|x| x == p));
            let counterexample = match &check {
                Verification::Pass { .. } => Value::Null,
                Verification::Counterexample { tree, quadratic, linear } => json!({
                    "tree": tree_value(tree),
                    "quadratic": rat_value(quadratic),
                    "linear": rat_value(linear),
                }),
            };
            text.push(format!(
                "claimed linearization [{}] {}: {}",
                claim.formula,
                abbreviate(&claim.c),
                if check.passed() { "verifies" } else { "does NOT verify" }
            ));
            if let Some(false) = matches_constant {
                text.push("  claimed constant differs from the enumerated one".into());
            }
            json!({
                "formula": claim.formula,
                "status": CLAIM_STATUS,
                "c": rat_array(&claim.c),
                "verifies": check.passed(),
                "counterexample": counterexample,
                "matches_constant": matches_constant,
            })
        }
    };
    Ok(Report { status, body, text })
}

fn parse_list(text: &str, what: &str) -> Result<Vec<Rat>, CliError> {
    text.split(',')
        .map(|t| rat::parse(t).map_err(|e| CliError::Usage(format!("--{what}: {e}"))))
        .collect()
}

fn need<T: Clone>(v: &Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    v.clone()
        .ok_or_else(|| CliError::Usage(format!("{family} needs --{flag}")))
}

pub fn gen_spec(family: &str, p: &GenParams) -> Result<GenSpec, CliError> {
    let shape = |default: &str| -> Result<GraphShape, CliError> {
        Ok(p.graph.as_deref().unwrap_or(default).parse::<GraphShape>()?)
    };
    let family = match family {
        "weak-sum" => Family::WeakSum {
            shape: shape("K4")?,
            perturb: p.perturb,
        },
        "cycle-random" => Family::CycleRandom { n: p.n.unwrap_or(5) },
        "random-dense" => Family::RandomDense { shape: shape("K4")? },
        "k2n-counterexample" => Family::K2nCounterexample {
            n2: p.n2.unwrap_or(3),
            diag: match &p.diag {
                Some(d) => rat::parse(d).map_err(|e| CliError::Usage(format!("--diag: {e}")))?,
                None => rat::int(0),
            },
        },
        "degree2-counterexample" => Family::Degree2Counterexample { k: p.k.unwrap_or(4) },
        "subset-sum-mmstp" => Family::SubsetSumMmstp {
            values: parse_list(&need(&p.a, "a", family)?, "a")?,
            target: rat::parse(&need(&p.target, "target", family)?)
                .map_err(|e| CliError::Usage(format!("--target: {e}")))?,
        },
        other => {
            return Err(CliError::Usage(format!(
                "unknown family {other:?}; expected weak-sum, cycle-random, random-dense, \
                 k2n-counterexample, degree2-counterexample or subset-sum-mmstp"
            )))
        }
    };
    Ok(GenSpec { family, seed: p.seed })
}

pub fn generated_file(generated: Generated, spec: &GenSpec) -> InstanceFile {
    match generated {
        Generated::Qmstp { instance, claim } => InstanceFile {
            name: instance.name().map(str::to_string),
            problem: Problem::Qmstp(instance),
            claim,
        },
        Generated::Mmstp(inst) => InstanceFile {
            name: Some(format!("{} seed {}", spec.family.name(), spec.seed)),
            problem: Problem::Mmstp(inst),
            claim: None,
        },
    }
}

fn run_gen(family: &str, params: &GenParams, out: &Path) -> Result<Report, CliError> {
    let spec = gen_spec(family, params)?;
    let file = generated_file(generate(&spec)?, &spec);
    io::write_instance(&file, out)?;
    let mut body = json!({
        "command": "gen",
        "family": spec.family.name(),
        "seed": spec.seed,
        "output": out.display().to_string(),
    });
    body["instance"] = header("gen", &file)["instance"].clone();
    let text = vec![format!(
        "wrote {} ({}, {} vertices, {} edges)",
        out.display(),
        spec.family.name(),
        file.graph().vertex_count(),
        file.graph().edge_count()
    )];
    Ok(Report {
        status: ExitStatus::Ok,
        body,
        text,
    })
}

fn run_factored_check(file: &InstanceFile) -> Result<Report, CliError> {
    let inst = file.qmstp()?;
    let Cost::Factored(f) = inst.cost() else {
        return Err(CliError::Usage("factored-check needs a factored cost".into()));
    };
    let mut body = header("factored-check", file);
    let mut text = Vec::new();
    let recognition = factored::recognize_factored_sum(&f.a, &f.b, &f.c, &f.d)?;
    match &recognition {
        FactoredRecognition::Sum(cert) => {
            body["sum"] = json!(true);
            body["certificate"] = factored_certificate_value(cert);
            body["reason"] = Value::Null;
            text.push(format!("a∘b + c∘d is a sum matrix ({})", factored_form_text(&Some(cert.clone()))));
        }
        FactoredRecognition::NotSum(reason) => {
            body["sum"] = json!(false);
            body["certificate"] = Value::Null;
            body["reason"] = not_sum_value(reason);
            text.push(format!("a∘b + c∘d is not a sum matrix: {}", not_sum_text(reason)));
        }
    }
    let status = match factored::single_block_class(inst.graph()) {
        None => {
            body["class"] = Value::Null;
            body["verdict"] = Value::Null;
            body["c"] = Value::Null;
            text.push("graph is not a single clique or biclique; no linear-time linearization".into());
            if recognition.is_sum() {
                ExitStatus::Ok
            } else {
                ExitStatus::Negative
            }
        }
        Some(_) => {
            let (class, verdict) = factored::linearize_factored(inst.graph(), f)?;
            body["class"] = json!(class.name());
            match verdict {
                FactoredVerdict::Linearizable { c, w, .. } => {
                    body["verdict"] = json!("linearizable");
                    body["w"] = rat_array(&w);
                    text.push(format!("{}: linearizable, w = {}", class.name(), abbreviate(&w)));
                    text.push(format!("c = {}", abbreviate(&c)));
                    body["c"] = rat_array(&c);
                    ExitStatus::Ok
                }
                FactoredVerdict::NotLinearizable { reason } => {
                    body["verdict"] = json!("not-linearizable");
                    body["c"] = Value::Null;
                    text.push(format!("{}: not linearizable ({})", class.name(), not_sum_text(&reason)));
                    ExitStatus::Negative
                }
            }
        }
    };
    Ok(Report { status, body, text })
}
