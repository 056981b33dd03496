//! The `sdlab` command line: `semigroup`, `dedekind`, `verify`, `table`.
//!
//! Exit codes are `0` on success, `1` when a verification sweep has a
//! failing check, `2` on usage errors (bad flags, non-coprime input).

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dedekind::{carlitz_poly, dedekind_sum, voronoi_sum, zolotarev, DedekindRoute, SumValue, VoronoiParams};
use crate::identities::{reports_to_csv, reports_to_json, run_suite, sig12, SuiteConfig, SuiteRanges, Summary};
use crate::polyring::rational_to_string;
use crate::semigroup::{alexander_closed_form, CoprimePair, NumericalSemigroup};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "sdlab", version, about = "Numerical semigroups, Dedekind sums and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gaps, Frobenius number, genus, Apéry sets and polynomials of a semigroup.
    Semigroup {
        /// Comma-separated generators, e.g. 4,7,9.
        #[arg(long, value_delimiter = ',', conflicts_with = "pair", required_unless_present = "pair")]
        gens: Vec<u64>,
        /// A coprime pair a,b.
        #[arg(long, value_delimiter = ',', num_args = 1, value_parser = clap::value_parser!(u64))]
        pair: Vec<u64>,
        /// Print the Apéry set with respect to this member (repeatable).
        #[arg(long)]
        apery: Vec<u64>,
        /// Print the gap and semigroup polynomials.
        #[arg(long)]
        polys: bool,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Dedekind sum, Voronoi sums, Dedekind–Carlitz polynomial, Zolotarev permutation.
    Dedekind {
        a: u64,
        b: u64,
        /// s(a,b) by every route (the default when nothing else is asked).
        #[arg(long)]
        sum: bool,
        /// V_{m,n}(a,b).
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        voronoi: Option<Vec<u32>>,
        /// c(q,t;a,b).
        #[arg(long)]
        carlitz: bool,
        /// k -> ak mod b.
        #[arg(long)]
        zolotarev: bool,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Run the identity checkers and write a report.
    Verify {
        /// Cap on b for every pair family and on random generators.
        #[arg(long, default_value_t = 50)]
        pairs_max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only identities whose id starts with this prefix (repeatable).
        #[arg(long)]
        identity: Vec<String>,
        /// Number of random semigroups.
        #[arg(long)]
        semigroups: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Record elapsed_ms (reports are then no longer reproducible).
        #[arg(long)]
        timings: bool,
        /// Worker threads (default: SDLAB_THREADS, else all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Tolerance for every float check, replacing the built-in ones.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Tables over all coprime pairs up to a bound.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 12)]
        b_max: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Dedekind,
    Torus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
    Text,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "sdlab: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let text = match cmd {
        Command::Semigroup { gens, pair, apery, polys, format } => {
            let s = if pair.is_empty() {
                NumericalSemigroup::from_generators(&gens)?
            } else {
                let [a, b] = pair[..] else {
                    return Err(Error::Parse("--pair takes exactly two values a,b".into()));
                };
                CoprimePair::new(a, b)?.semigroup()
            };
            semigroup_output(&s, &apery, polys, format)?
        }
        Command::Dedekind { a, b, sum, voronoi, carlitz, zolotarev, format } => {
            dedekind_output(a, b, sum, voronoi, carlitz, zolotarev, format)?
        }
        Command::Verify { pairs_max, seed, identity, semigroups, out: path, format, timings, threads, tolerance } => {
            if tolerance.is_some_and(|t| t.is_nan() || t < 0.0) {
                return Err(Error::Parse("--tolerance must be a nonnegative number".into()));
            }
            let mut ranges = SuiteRanges::capped(pairs_max);
            if let Some(n) = semigroups {
                ranges.random_count = n;
            }
            let cfg = SuiteConfig {
                ranges,
                seed,
                identities: identity,
                record_timing: timings,
                threads,
                float_tolerance: tolerance,
            };
            let reports = run_suite(&cfg);
            let body = match format {
                ReportFormat::Json => reports_to_json(&reports),
                ReportFormat::Csv => reports_to_csv(&reports),
            };
            let summary = Summary::of(&reports);
            match path {
                Some(p) => {
                    std::fs::write(&p, body).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
                    writeln!(
                        out,
                        "{} checks: {} pass, {} fail, {} expected-discrepancy",
                        reports.len(),
                        summary.pass,
                        summary.fail,
                        summary.expected_discrepancy
                    )
                    .ok();
                }
                None => {
                    out.write_all(body.as_bytes()).ok();
                }
            }
            return Ok(if summary.fail == 0 { 0 } else { 1 });
        }
        Command::Table { kind, b_max, format } => table_output(kind, b_max, format)?,
    };
    out.write_all(text.as_bytes()).ok();
    Ok(0)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn semigroup_output(s: &NumericalSemigroup, apery: &[u64], polys: bool, format: TextOrJson) -> Result<String> {
    let aps = apery.iter().map(|&m| s.apery(m)).collect::<Result<Vec<_>>>()?;
    Ok(match format {
        TextOrJson::Text => {
            let mut t = format!(
                "generators: {}\nfrobenius: {}\ngenus: {}\ngaps: {}\n",
                join(s.generators()),
                s.frobenius(),
                s.genus(),
                join(s.gaps())
            );
            for ap in &aps {
                t += &format!("apery({}): [{}]\n", ap.modulus(), join(ap.elements()));
            }
            if polys {
                t += &format!("gap_poly: {}\nsemigroup_poly: {}\n", s.gap_poly(), s.semigroup_poly());
            }
            t
        }
        TextOrJson::Json => {
            let mut v = serde_json::to_value(s).expect("semigroup serializes");
            if !aps.is_empty() {
                v["apery"] = serde_json::to_value(&aps).expect("apery serializes");
            }
            if polys {
                v["gap_poly"] = serde_json::to_value(s.gap_poly()).expect("poly serializes");
                v["semigroup_poly"] = serde_json::to_value(s.semigroup_poly()).expect("poly serializes");
            }
            pretty(&v)
        }
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn sum_string(v: &SumValue) -> String {
    match v {
        SumValue::Exact(r) => rational_to_string(r),
        SumValue::Float(x) => sig12(*x).to_string(),
    }
}

fn dedekind_output(
    a: u64,
    b: u64,
    sum: bool,
    voronoi: Option<Vec<u32>>,
    carlitz: bool,
    zol: bool,
    format: TextOrJson,
) -> Result<String> {
    CoprimePair::new(a, b)?;
    let sum = sum || (voronoi.is_none() && !carlitz && !zol);
    let mut text = String::new();
    let mut obj = serde_json::Map::new();
    obj.insert("a".into(), json!(a));
    obj.insert("b".into(), json!(b));
    if sum {
        let exact = dedekind_sum(a, b, DedekindRoute::Sawtooth)?;
        text += &format!("s({a},{b}) = {}\n", sum_string(&exact));
        let mut routes = serde_json::Map::new();
        for route in DedekindRoute::ALL {
            let v = sum_string(&dedekind_sum(a, b, route)?);
            text += &format!("  {:<10} {v}\n", route.name());
            routes.insert(route.name().into(), json!(v));
        }
        obj.insert("dedekind_sum".into(), Value::Object(routes));
    }
    if let Some(mn) = voronoi {
        let (m, n) = (mn[0], mn[1]);
        let v = voronoi_sum(&VoronoiParams::new(a, b, m, n))?;
        text += &format!("V_{{{m},{n}}}({a},{b}) = {v}\n");
        obj.insert("voronoi".into(), json!({"m": m, "n": n, "value": v.to_string()}));
    }
    if carlitz {
        let c = carlitz_poly(a, b)?;
        text += &format!("c(q,t;{a},{b}) = {c}\n");
        obj.insert("carlitz".into(), serde_json::to_value(&c).expect("poly serializes"));
    }
    if zol {
        let z = zolotarev(a, b)?;
        text += &format!("zolotarev: [{}]\n", join(z.images()));
        obj.insert("zolotarev".into(), json!(z.images()));
    }
    Ok(match format {
        TextOrJson::Text => text,
        TextOrJson::Json => pretty(&Value::Object(obj)),
    })
}

fn table_output(kind: TableKind, b_max: u64, format: TableFormat) -> Result<String> {
    let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match kind {
        TableKind::Dedekind => {
            let mut rows = Vec::new();
            for (a, b) in coprime_pairs(b_max) {
                let s = dedekind_sum(a, b, DedekindRoute::Sawtooth)?;
                let v = voronoi_sum(&VoronoiParams::new(a, b, 1, 1))?;
                rows.push(vec![a.to_string(), b.to_string(), sum_string(&s), v.to_string()]);
            }
            (vec!["a", "b", "s", "v11"], rows)
        }
        TableKind::Torus => {
            let mut rows = Vec::new();
            for (a, b) in coprime_pairs(b_max) {
                let p = CoprimePair::new(a, b)?;
                let s = p.semigroup();
                rows.push(vec![
                    a.to_string(),
                    b.to_string(),
                    s.genus().to_string(),
                    s.frobenius().to_string(),
                    alexander_closed_form(p)?.to_string(),
                ]);
            }
            (vec!["a", "b", "genus", "frobenius", "alexander"], rows)
        }
    };
    Ok(match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).expect("in-memory write");
            for r in &rows {
                w.write_record(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
        }
        TableFormat::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(header.iter().zip(r).map(|(h, v)| (h.to_string(), json!(v))).collect()))
                .collect();
            pretty(&Value::Array(arr))
        }
        TableFormat::Text => {
            let mut t = header.join("\t") + "\n";
            for r in &rows {
                t += &(r.join("\t") + "\n");
            }
            t
        }
    })
}

fn coprime_pairs(b_max: u64) -> Vec<(u64, u64)> {
    use num_integer::Integer;
    (2..=b_max)
        .flat_map(|b| (1..b).filter(move |a| a.gcd(&b) == 1).map(move |a| (a, b)))
        .collect()
}
