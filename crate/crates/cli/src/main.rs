//! `cstar`: weighted projective embeddings of affine C*-surfaces from pairs of
//! Q-divisors on the affine line.
//!
//! Exit codes: 0 success, 1 construction error, 2 parse error, 3 verification
//! failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cstar_core::dpd::DpdPair;
use cstar_core::embedding::{
    build_embedding, eliminate_z, positive_weight_embedding, toric_replacement, universal_cover_form,
};
use cstar_core::gizatullin::{classify, plane_embedding, toric_embedding, toric_iso_check, GizatullinParams};
use cstar_core::report::{
    classify_report, full_embed_report, gizatullin_full_report, normalize_report, toric_report, CoverReport,
    EliminationReport, FullEmbedReport,
};
use cstar_core::text::{parse_pair, parse_rational};
use cstar_core::verify::{self, CriterionReport};
use cstar_core::Error;

const GRAMMAR: &str = "\
Pair and divisor syntax:
  pair    := '(' divisor ';' divisor ')'
  divisor := '0' | ['-'] term (('+' | '-') term)*
  term    := [coeff '*'] atom
  coeff   := integer | integer '/' positive-integer
  atom    := '[' rational ']' | 'div(' poly ')'
  poly    := polynomial in t with rational coefficients and '^' exponents
'[p]' stands for div(t - p). Example: \"(-1/2*[0]; -1/3*[1])\".

Exit codes: 0 success, 1 construction error, 2 parse error, 3 verification failure.";

#[derive(Parser)]
#[command(name = "cstar", version, about = "Weighted projective embeddings of affine C*-surfaces", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Print a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct PairArg {
    /// A pair of Q-divisors, e.g. "(-1/2*[0]; -1/3*[1])".
    #[arg(long, allow_hyphen_values = true)]
    pair: String,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form (d, e+, e-, k, Q) of a pair and the moves reaching it.
    Normalize {
        #[command(flatten)]
        pair: PairArg,
        #[command(flatten)]
        out: Output,
    },
    /// Hypersurface embedding of a pair, with its checks.
    Embed {
        #[command(flatten)]
        pair: PairArg,
        #[command(flatten)]
        out: Output,
    },
    /// Embedding of the Danilov-Gizatullin surface V(n) from (-(1/d)[0], -(1/(n-d))[1]).
    Dg {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
        #[command(flatten)]
        out: Output,
    },
    /// A^2 / E_d with weights (1, e) as z != 0 in P(1, e, d).
    Toric {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        e: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Whether the toric surfaces (d, e) and (d, e2) are isomorphic.
    ToricIso {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        e2: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Plane embedding of the non-toric surface (-(e/m)[p], (e/m)[p] - c[q]).
    Gizatullin {
        #[arg(long)]
        e: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        c: i64,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        p: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        q: String,
        #[command(flatten)]
        out: Output,
    },
    /// Toric, non-toric Gizatullin with finite class group, or other.
    Classify {
        #[command(flatten)]
        pair: PairArg,
        #[command(flatten)]
        out: Output,
    },
    /// Universal cover x^k y - s^d + 1 with its cyclic action.
    Cover {
        #[arg(long)]
        e: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Eliminates z when it occurs linearly, giving an open set of a weighted plane.
    Eliminate {
        #[command(flatten)]
        pair: PairArg,
        #[command(flatten)]
        out: Output,
    },
    /// Runs the verification grid, or one negative control with --inject.
    Verify {
        /// "default" (all criteria) or "quick".
        #[arg(long, default_value = "default")]
        grid: String,
        /// Corrupt the input of one oracle; the run exits 3 when the oracle rejects it.
        #[arg(long)]
        inject: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Construction(String),
    Parse(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            other => Failure::Construction(other.to_string()),
        }
    }
}

type Run = Result<(), Failure>;

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
    } else {
        print!("{}", text());
    }
}

fn read_pair(text: &str) -> Result<DpdPair, Failure> {
    parse_pair(text).map_err(|e| match &e {
        Error::Parse { position, .. } => {
            Failure::Parse(format!("{e}\n  {text}\n  {}^", " ".repeat(*position)))
        }
        _ => e.into(),
    })
}

fn embed_text(r: &FullEmbedReport) -> String {
    let nf = &r.normal_form;
    let e = &r.embedding;
    let mut s = String::new();
    s += &format!("normal form: d={} e+={} e-={} k={} Q={}\n", nf.d, nf.e_plus, nf.e_minus, nf.k, nf.q);
    s += &format!("F = {}\n", e.f);
    s += &format!("ambient: {} degree {}\n", e.ambient, e.degree);
    s += &format!(
        "checks: homogeneous={} parametrization={} character={}\n",
        e.checks.homogeneous, e.checks.parametrization, e.checks.character
    );
    let p = &r.positive_weight;
    s += &format!("positive weights (alpha={}): F = {} in {}\n", p.flags.alpha_used, p.f, p.ambient);
    s += &format!(
        "normality: certified={} (k=1: {}, zero sum with D0 reduced: {})\n",
        r.normality.certified, r.normality.k_eq_1, r.normality.zero_sum_reduced
    );
    s += &format!("smoothness: literal={} pointwise={}\n", r.smoothness.literal, r.smoothness.pointwise);
    if let Some(t) = &r.toric_replacement {
        s += &format!("toric replacement: F = {} in {}\n", t.f, t.ambient);
    }
    s
}

fn embed_pair(pair: &DpdPair) -> Result<FullEmbedReport, Failure> {
    let (nf, _) = pair.to_normal_form()?;
    let plain = build_embedding(&nf)?;
    let positive = positive_weight_embedding(&nf)?;
    let replacement = toric_replacement(&nf)?;
    let report = full_embed_report(&nf, &plain, &positive, replacement.as_ref(), pair.smoothness_check()?)?;
    Ok(report)
}

fn finish_embed(json: bool, report: &FullEmbedReport) -> Run {
    emit(json, report, || embed_text(report));
    let all = report.embedding.all_checks_pass()
        && report.positive_weight.all_checks_pass()
        && report.toric_replacement.as_ref().map_or(true, |t| t.all_checks_pass());
    if all {
        Ok(())
    } else {
        Err(Failure::Verification("an embedding check failed".into()))
    }
}

#[derive(Serialize)]
struct IsoReport {
    d: i64,
    e: i64,
    e2: i64,
    isomorphic: bool,
}

#[derive(Serialize)]
struct InjectReport<'a> {
    oracle: &'a str,
    status: &'static str,
    locus: String,
}

#[derive(Serialize)]
struct GridReport<'a> {
    grid: &'a str,
    passed: bool,
    criteria: &'a [CriterionReport],
}

fn run_verify(grid: &str, inject: Option<&str>, json: bool) -> Run {
    if let Some(name) = inject {
        let outcome = verify::inject(name)?.ok_or_else(|| {
            Failure::Construction(format!("unknown oracle {name:?}; known: {}", verify::ORACLES.join(", ")))
        })?;
        let report = InjectReport {
            oracle: name,
            status: if outcome { "accepted" } else { "rejected" },
            locus: format!("oracle={name} input=corrupted"),
        };
        emit(json, &report, || format!("{} {}: {}\n", report.status, name, report.locus));
        return if outcome { Ok(()) } else { Err(Failure::Verification(report.locus)) };
    }
    let criteria = match grid {
        "default" => verify::run_default_grid(),
        "quick" => verify::run_quick_grid(),
        other => return Err(Failure::Construction(format!("unknown grid {other:?}; use default or quick"))),
    };
    let passed = criteria.iter().all(CriterionReport::passed);
    let report = GridReport { grid, passed, criteria: &criteria };
    emit(json, &report, || {
        let mut s = String::new();
        for c in &criteria {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            s += &format!("{} {verdict} cases={} {}\n", c.id, c.cases, c.title);
            for f in &c.failures {
                s += &format!("  failed: {f}\n");
            }
        }
        s
    });
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification("grid failures".into()))
    }
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Normalize { pair, out } => {
            let (nf, t) = read_pair(&pair.pair)?.to_normal_form()?;
            let r = normalize_report(&nf, &t);
            emit(out.json, &r, || {
                let n = &r.normal_form;
                let tr = &r.transcript;
                format!(
                    "d={} e+={} e-={} k={} Q={}\nnormal pair: {}\ninterchanged={} t -> {}*t + {} witness {}\n",
                    n.d, n.e_plus, n.e_minus, n.k, n.q, r.pair, tr.interchanged, tr.alpha, tr.beta, tr.witness
                )
            });
            Ok(())
        }
        Command::Embed { pair, out } => {
            let report = embed_pair(&read_pair(&pair.pair)?)?;
            finish_embed(out.json, &report)
        }
        Command::Dg { n, d, out } => {
            if !(n >= 2 && 1 <= d && d < n) {
                return Err(Failure::Construction(format!("need 1 <= d < n, got n = {n}, d = {d}")));
            }
            let report = embed_pair(&verify::dg_pair(n, d))?;
            finish_embed(out.json, &report)
        }
        Command::Toric { d, e, out } => {
            let t = toric_embedding(d, e)?;
            let r = toric_report(&t);
            emit(out.json, &r, || {
                format!("{} in {}\nquotient weights (1, {}) mod {}\ntorus: {}\n", t.open_part, r.ambient, e, d, t.torus_action)
            });
            Ok(())
        }
        Command::ToricIso { d, e, e2, out } => {
            let r = IsoReport { d, e, e2, isomorphic: toric_iso_check(d, e, e2)? };
            emit(out.json, &r, || format!("isomorphic={}\n", r.isomorphic));
            Ok(())
        }
        Command::Gizatullin { e, m, c, p, q, out } => {
            let gp = GizatullinParams::new(e, m, c, parse_rational(&p)?, parse_rational(&q)?)?;
            let pe = plane_embedding(&gp)?;
            let r = gizatullin_full_report(&gp, &pe)?;
            emit(out.json, &r, || {
                format!(
                    "{}\naction: {:?} mod {}\ngamma={} a mod m = {} b mod m = {}\nchecks: generators={} action={}\n",
                    pe.presentation(),
                    pe.action_exponents,
                    pe.d,
                    pe.gamma,
                    pe.a.rem_euclid(m),
                    pe.b.rem_euclid(m),
                    r.checks.generator_relations,
                    r.checks.action_consistency
                )
            });
            if r.checks.generator_relations && r.checks.action_consistency {
                Ok(())
            } else {
                Err(Failure::Verification("a plane embedding check failed".into()))
            }
        }
        Command::Classify { pair, out } => {
            let r = classify_report(&classify(&read_pair(&pair.pair)?)?)?;
            emit(out.json, &r, || {
                let mut s = format!("case: {}\n", r.case);
                if let (Some(d), Some(e)) = (r.d, r.e) {
                    if r.m.is_none() {
                        s += &format!("toric d={d} e={e}\n");
                    }
                }
                if let (Some(e), Some(m), Some(c)) = (r.e, r.m, r.c) {
                    s += &format!(
                        "e={e} m={m} c={c} p={} q={} interchanged={}\n",
                        r.p.as_deref().unwrap_or(""),
                        r.q.as_deref().unwrap_or(""),
                        r.interchanged.unwrap_or(false)
                    );
                }
                if let Some(emb) = &r.embedding {
                    s += &format!("embedding: {} in {}\n", emb.equation, emb.ambient);
                }
                if let Some(reason) = &r.reason {
                    s += &format!("reason: {reason}\n");
                }
                s
            });
            Ok(())
        }
        Command::Cover { e, d, k, out } => {
            let r = CoverReport::from(&universal_cover_form(e, d, k)?);
            emit(out.json, &r, || format!("{}\naction: {:?} mod {}\n", r.equation, r.action, r.order));
            Ok(())
        }
        Command::Eliminate { pair, out } => {
            let (nf, _) = read_pair(&pair.pair)?.to_normal_form()?;
            let el = eliminate_z(&build_embedding(&nf)?).ok_or_else(|| {
                Failure::Construction("z does not occur linearly; the normal form needs deg Q = 1 and e+ + e- = 0".into())
            })?;
            let r = EliminationReport::from(&el);
            emit(out.json, &r, || {
                let note = if r.all_weights_positive { "" } else { " (nonpositive weight)" };
                format!("{}{note}\n", r.presentation)
            });
            Ok(())
        }
        Command::Verify { grid, inject, out } => run_verify(&grid, inject.as_deref(), out.json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Construction(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(m)) => {
            eprintln!("parse error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn caret_points_at_offending_byte() {
        let Err(Failure::Parse(m)) = read_pair("(-1/2*[x]; 0)") else { panic!("expected a parse failure") };
        let lines: Vec<&str> = m.lines().collect();
        assert_eq!(lines[1].find('['), Some(2 + 6));
        assert_eq!(lines[2].find('^'), Some(2 + 7));
    }

    #[test]
    fn truncated_pair_is_a_parse_failure() {
        assert!(matches!(read_pair("(0; 0"), Err(Failure::Parse(_))));
    }
}
