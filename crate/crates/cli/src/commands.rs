use std::collections::BTreeMap;
use std::fs;
use std::io::Read as _;

use mcomp_core::generate::{corpus_instance, random_multipartite_tournament, CorpusParams};
use mcomp_core::io::{
    digraph_to_dot, parse_instance, report_json, to_json, to_matrix_text, Format, Instance,
};
use mcomp_core::oracle::{detect_period, m_step_competition_graph};
use mcomp_core::structure::{analyze_with, infer_partite_sets, PartiteStructure};
use mcomp_core::theory::classify_with_budget;
use mcomp_core::verify::{certify, check_instance};
use mcomp_core::Error;
use rayon::prelude::*;
use serde_json::json;

use crate::render;
use crate::{
    ClassifyArgs, ExportArgs, GenerateArgs, InputArgs, InputFormat, OutputFormat, SimulateArgs,
    VerifyArgs, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE,
};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn read_instance(args: &InputArgs) -> Result<Instance, Failure> {
    let path = &args.file;
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
    };
    let format = match args.format {
        Some(InputFormat::Json) => Format::Json,
        Some(InputFormat::Matrix) => Format::Matrix,
        Some(InputFormat::DotIn) => Format::Dot,
        None => Format::sniff(&text),
    };
    parse_instance(&text, format).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Declared partite sets when present, otherwise inferred; both validated.
fn partite_sets(inst: &Instance) -> Result<PartiteStructure, Failure> {
    let ps = match &inst.partite {
        Some(ps) => ps.clone(),
        None => infer_partite_sets(&inst.digraph).map_err(|e| Failure::input(e.to_string()))?,
    };
    ps.validate(&inst.digraph).map_err(|e| Failure::input(e.to_string()))?;
    Ok(ps)
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json values serialize"));
}

pub fn classify(args: &ClassifyArgs, budget: usize) -> Outcome {
    let inst = read_instance(&args.input)?;
    let ps = partite_sets(&inst)?;
    let d = &inst.digraph;
    let analysis = analyze_with(d, ps)?;
    let mut verdict = classify_with_budget(d, &analysis, budget)?;
    let mut code = EXIT_OK;
    let mut mismatch = None;
    if args.certify {
        let report = detect_period(d, budget)?;
        if let Err(m) = certify(&mut verdict, &report) {
            mismatch = Some(m.to_string());
            code = EXIT_MISMATCH;
        }
    }
    if args.json {
        let mut out = render::classify_json(&analysis, &verdict);
        if args.certify {
            out["certified"] = json!(mismatch.is_none());
            out["mismatch"] = json!(mismatch);
        }
        print_json(&out);
    } else {
        print!("{}", render::classify_text(&analysis, &verdict));
        if let Some(m) = mismatch {
            println!("MISMATCH: {m}");
        }
    }
    Ok(code)
}

pub fn simulate(args: &SimulateArgs, budget: usize) -> Outcome {
    let inst = read_instance(&args.input)?;
    let d = &inst.digraph;
    let graphs = (1..=args.m_max)
        .map(|m| m_step_competition_graph(d, m))
        .collect::<Result<Vec<_>, _>>()?;
    let report = detect_period(d, budget)?;
    if args.json {
        let matrices: Vec<_> = graphs
            .iter()
            .enumerate()
            .map(|(i, g)| json!({ "m": i + 1, "matrix": g.adjacency().to_text().lines().collect::<Vec<_>>() }))
            .collect();
        print_json(&json!({ "matrices": matrices, "report": report_json(&report) }));
    } else {
        for (i, g) in graphs.iter().enumerate() {
            println!("m={}:", i + 1);
            print!("{}", g.adjacency().to_text());
        }
        println!("preperiod={} period={}", report.preperiod, report.period);
    }
    Ok(EXIT_OK)
}

fn parse_parts_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::usage(format!("--parts expects K or MIN-MAX, got {text:?}"));
    let (lo, hi) = match text.split_once('-') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let k = text.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if lo < 2 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Outcome of one corpus instance, kept small so results can be merged in
/// index order.
enum Trial {
    Agree(String),
    Disagree { case: String, reason: String, instance: String },
}

pub fn verify(args: &VerifyArgs, budget: usize) -> Outcome {
    let (min_k, max_k) = parse_parts_range(&args.parts)?;
    if args.max_n < min_k {
        return Err(Failure::usage(format!(
            "--max-n {} is smaller than the number of partite sets {min_k}",
            args.max_n
        )));
    }
    let params = CorpusParams {
        seed: args.seed,
        max_n: args.max_n,
        min_k,
        max_k,
    };
    let run = |i: u64| -> Result<Trial, Error> {
        let (d, ps) = corpus_instance(&params, i)?;
        let instance = to_json(&d, Some(&ps));
        Ok(match check_instance(&d, ps, budget) {
            Ok(c) => match c.mismatch {
                None => Trial::Agree(c.verdict.case.to_string()),
                Some(m) => Trial::Disagree {
                    case: c.verdict.case.to_string(),
                    reason: m.to_string(),
                    instance,
                },
            },
            Err(e) => Trial::Disagree {
                case: "error".into(),
                reason: e.to_string(),
                instance,
            },
        })
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
    let trials: Vec<Trial> = pool.install(|| {
        (0..args.count)
            .into_par_iter()
            .map(run)
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for (i, t) in trials.into_iter().enumerate() {
        match t {
            Trial::Agree(case) => *cases.entry(case).or_default() += 1,
            Trial::Disagree { case, reason, instance } => {
                let instance: serde_json::Value = serde_json::from_str(&instance).expect("own output parses");
                counterexamples.push(json!({ "index": i, "case": case, "reason": reason, "instance": instance }));
            }
        }
    }
    let agree = args.count as usize - counterexamples.len();
    if !counterexamples.is_empty() {
        let text = serde_json::to_string_pretty(&counterexamples).expect("json values serialize");
        fs::write(&args.dump, text).map_err(|e| Failure::input(format!("{}: {e}", args.dump.display())))?;
    }
    if args.json {
        print_json(&json!({
            "count": args.count,
            "agree": agree,
            "mismatches": counterexamples.len(),
            "cases": cases,
        }));
    } else {
        for (case, count) in &cases {
            println!("{case:<28} {count}");
        }
        println!("{agree}/{} agree", args.count);
        if !counterexamples.is_empty() {
            println!("{} mismatches written to {}", counterexamples.len(), args.dump.display());
        }
    }
    Ok(if counterexamples.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}

fn emit(inst: &Instance, ps: Option<&PartiteStructure>, to: OutputFormat) {
    match to {
        OutputFormat::Json => println!("{}", to_json(&inst.digraph, ps)),
        OutputFormat::Matrix => print!("{}", to_matrix_text(&inst.digraph)),
        OutputFormat::Dot => print!("{}", digraph_to_dot(&inst.digraph, ps)),
    }
}

pub fn generate(args: &GenerateArgs) -> Outcome {
    let sizes = args
        .parts
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::usage(format!("--parts expects comma-separated sizes, got {:?}", args.parts)))?;
    let (digraph, ps) = random_multipartite_tournament(sizes.len(), &sizes, args.seed)?;
    emit(&Instance { digraph, partite: None }, Some(&ps), args.to);
    Ok(EXIT_OK)
}

pub fn export(args: &ExportArgs) -> Outcome {
    let inst = read_instance(&args.input)?;
    // clusters are a convenience; a digraph that is not a multipartite
    // tournament is still exported
    let ps = match &inst.partite {
        Some(ps) => Some(ps.clone()),
        None => infer_partite_sets(&inst.digraph).ok(),
    };
    emit(&inst, ps.as_ref(), args.to);
    Ok(EXIT_OK)
}
