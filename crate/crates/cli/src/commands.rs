use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use serde_json::json;
use spectral_hist::enumeration::{audit_prescreens, verify_theorem};
use spectral_hist::graph6::encode_graph6;
use spectral_hist::hist::{find_hist_with, is_hist, SearchOptions, TraceOutcome};
use spectral_hist::spectral::extremal_root;
use spectral_hist::{
    decode_graph6, proof_guided_hist, spectral_radius, stream_graph6, verify_certificates, verify_corollaries,
    Certificate, ExtremalFamily, Family, Graph, Graph6Error, HistOutcome, PowerOptions, ProofTheorem, Source,
    VerifyOptions,
};

use crate::error::Failure;
use crate::output::{emit, float, Format};

/// Parses a graph6 string or `family:NAME:params`.
pub fn parse_graph(arg: &str) -> Result<Graph, Failure> {
    match arg.strip_prefix("family:") {
        Some(spec) => Ok(spec.parse::<Family>()?.build()?),
        None => Ok(decode_graph6(arg)?),
    }
}

fn edge_list(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn certificate_json(c: &Certificate) -> serde_json::Value {
    match c {
        Certificate::CutVertexDeg2(v) => json!({ "kind": "cut_vertex_deg2", "vertices": [v] }),
        Certificate::P5Pattern(s) => json!({ "kind": "p5_pattern", "vertices": s }),
        Certificate::ExhaustedSearch => json!({ "kind": "exhausted_search", "vertices": [] }),
    }
}

pub fn rho(format: Format, arg: &str, power: &PowerOptions) -> Result<(), Failure> {
    let g = parse_graph(arg)?;
    let s = spectral_radius(&g, power)?;
    emit(
        format,
        format!("rho={}\nresidual={:e}\niterations={}", float(s.rho), s.residual, s.iterations),
        json!({
            "graph": encode_graph6(&g).ok(),
            "n": g.order(),
            "m": g.edge_count(),
            "rho": s.rho,
            "residual": s.residual,
            "iterations": s.iterations,
        }),
    );
    Ok(())
}

pub fn hist(format: Format, arg: &str, proof: Option<ProofTheorem>, budget: Option<u64>) -> Result<(), Failure> {
    let g = parse_graph(arg)?;
    let outcome = find_hist_with(&g, &SearchOptions { node_budget: budget })?;
    let graph6 = encode_graph6(&g).ok();
    match &outcome {
        HistOutcome::Found(tree) => {
            if !is_hist(&g, tree) {
                return Err(Failure::Check(format!("search returned a non-HIST: {}", edge_list(tree))));
            }
            emit(
                format,
                format!("verdict=Found\ntree={}", edge_list(tree)),
                json!({ "graph": graph6, "verdict": "found", "tree": tree }),
            );
        }
        HistOutcome::NoHist(c) => emit(
            format,
            format!("verdict=NoHist\ncertificate={c}"),
            json!({ "graph": graph6, "verdict": "no_hist", "certificate": certificate_json(c) }),
        ),
    }
    if let Some(theorem) = proof {
        let trace = proof_guided_hist(&g, theorem)?;
        let roles = trace
            .vertex_roles
            .iter()
            .map(|(r, v)| format!("{r}:{v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let result = match &trace.outcome {
            TraceOutcome::Hist(t) => format!("hist {}", edge_list(t)),
            TraceOutcome::Extremal(f) => format!("extremal {f}"),
            TraceOutcome::OutsideProofCases(why) => format!("outside {why}"),
        };
        emit(
            format,
            format!("case={}\nroles={roles}\noutcome={result}", trace.case_label),
            serde_json::to_value(&trace).expect("trace serialises"),
        );
    }
    Ok(())
}

pub fn charpoly(format: Format, family: ExtremalFamily, n: usize) -> Result<(), Failure> {
    let p = family.charpoly(n)?;
    let root = extremal_root(family, n)?;
    let c = p.coefficients();
    let text = c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    emit(
        format,
        format!("family={family}\nn={n}\ncoefficients={text}\nroot={}", float(root)),
        json!({ "family": family, "n": n, "coefficients": c, "root": root }),
    );
    Ok(())
}

pub fn family(format: Format, name: &str, params: &[usize]) -> Result<(), Failure> {
    let spec = std::iter::once(name.to_string())
        .chain(params.iter().map(|p| p.to_string()))
        .collect::<Vec<_>>()
        .join(":");
    let fam: Family = spec.parse()?;
    let g = fam.build()?;
    let graph6 = encode_graph6(&g)?;
    emit(
        format,
        &graph6,
        json!({ "family": fam.to_string(), "n": g.order(), "m": g.edge_count(), "graph6": graph6 }),
    );
    Ok(())
}

pub fn verify(
    format: Format,
    theorem: ProofTheorem,
    n: usize,
    corpus: Option<&Path>,
    opts: &VerifyOptions,
) -> Result<(), Failure> {
    let source = match corpus {
        Some(p) => Source::Graph6Corpus(p.to_path_buf()),
        None => Source::LabeledExhaustive,
    };
    let report = verify_theorem(theorem, n, &source, opts)?;
    emit(format, &report, serde_json::to_value(&report).expect("report serialises"));
    if report.verified() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} counterexample(s)", report.counterexamples.len())))
    }
}

pub fn corollaries(format: Format, from: usize, to: usize, power: &PowerOptions) -> Result<(), Failure> {
    let report = verify_corollaries(from, to, power)?;
    emit(format, &report, serde_json::to_value(&report).expect("report serialises"));
    if report.verified() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} bound violation(s)", report.violations)))
    }
}

pub fn certificates(format: Format, n_max: usize) -> Result<(), Failure> {
    let report = verify_certificates(n_max)?;
    emit(format, &report, serde_json::to_value(&report).expect("report serialises"));
    if report.verified() {
        Ok(())
    } else {
        Err(Failure::Check("certificate check failed".into()))
    }
}

pub fn audit(
    format: Format,
    theorem: ProofTheorem,
    n: usize,
    modulus: u64,
    threads: usize,
    power: PowerOptions,
) -> Result<(), Failure> {
    let opts = VerifyOptions {
        threads,
        power,
        ..VerifyOptions::default()
    };
    let r = audit_prescreens(theorem, n, modulus, &opts)?;
    let mut text = format!(
        "theorem={}\nn={}\nmodulus={}\nsampled={}\nin_class={}\nover_with_prescreens={}\nover_without_prescreens={}\ndiscrepancies={}",
        match r.theorem {
            ProofTheorem::OneConnected => "thm1",
            ProofTheorem::TwoConnected => "thm2",
        },
        r.n,
        r.modulus,
        r.sampled,
        r.in_class,
        r.over_with_prescreens,
        r.over_without_prescreens,
        r.discrepancies.len()
    );
    for d in &r.discrepancies {
        text.push_str("\n  ");
        text.push_str(d);
    }
    emit(format, text, serde_json::to_value(&r).expect("report serialises"));
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} prescreen discrepancies", r.discrepancies.len())))
    }
}

pub fn convert(format: Format, path: &Path) -> Result<(), Failure> {
    let file = File::open(path).map_err(|e| Failure::Usage(format!("cannot open {}: {e}", path.display())))?;
    let (mut records, mut invalid) = (0u64, 0u64);
    let report = |line: usize, offset: Option<usize>, message: String| {
        let at = offset.map(|o| format!(" offset={o}")).unwrap_or_default();
        emit(
            format,
            format!("line={line}{at} error={message}"),
            json!({ "line": line, "offset": offset, "error": message }),
        );
    };
    for item in stream_graph6(BufReader::new(file)) {
        records += 1;
        match item {
            Ok(rec) => {
                let again = encode_graph6(&rec.graph)?;
                if again != rec.line {
                    invalid += 1;
                    report(rec.line_number, None, format!("re-encodes as {again}"));
                }
            }
            Err(Graph6Error::AtLine { line, source }) => {
                invalid += 1;
                report(line, source.offset(), source.to_string());
            }
            Err(e) => return Err(e.into()),
        }
    }
    emit(
        format,
        format!("records={records}\nvalid={}\ninvalid={invalid}", records - invalid),
        json!({ "records": records, "valid": records - invalid, "invalid": invalid }),
    );
    if invalid == 0 {
        Ok(())
    } else {
        Err(Failure::Format(format!("{invalid} invalid record(s)")))
    }
}
