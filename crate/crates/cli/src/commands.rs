use betasplit::asymptotics::{
    beta_inverse_eigen_convergence, bernstein_eigenvalue_rate, durrmeyer_doubling_convergence, f_on_eigen_limit,
    voronovskaya_convergence, ConvergenceReport, RateBand,
};
use betasplit::eigen::{
    bernstein_eigenpolynomial, beta_eigenpolynomial, durrmeyer_eigenpolynomial, durrmeyer_eigenvalue,
    f_eigenpolynomial, limit_eigenpolynomial, spectrum, EigenPair,
};
use betasplit::exact::{rational_to_f64, ratio};
use betasplit::io::{
    csv_preamble, eigenpair_json, format_float, polynomial_json, polynomials_csv, rational_string, spectrum_csv,
    spectrum_json, table_csv,
};
use betasplit::numerics::{
    benchmark_csv, benchmark_errors, g2_contradiction_check, g_moment_sandwich, lebesgue_curve, lebesgue_max,
    lebesgue_table, BenchmarkRow, LebesgueMax, SampleFunction, LEBESGUE_REFERENCE,
};
use betasplit::operators::columns::{
    bernstein_image, beta_image, beta_inverse_image, durrmeyer_image, f_image, stancu_image,
};
use betasplit::operators::{
    bernstein_basis, central_moment, durrmeyer_inverse_differential, moment_from_images, phi_basis, rho_basis,
    OperatorKind,
};
use betasplit::verify::run_exact_suite;
use betasplit::{Error, RationalPolynomial};
use serde_json::{json, Value};

use crate::{BenchFunction, Cli, Command, Family, Format, Op};

pub enum Failure {
    Usage(String),
    Computation(Error),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Computation(err)
    }
}

pub struct Output {
    pub text: String,
    /// Set when a check ran to completion but did not pass.
    pub failed: bool,
}

type Outcome = Result<Output, Failure>;

fn ok(text: String) -> Outcome {
    Ok(Output { text, failed: false })
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| usage(format!("--{flag} is required for this subcommand")))
}

fn need_n(cli: &Cli) -> Result<usize, Failure> {
    let n = need(cli.n, "n")?;
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    Ok(n)
}

fn check_ns(ns: &[usize]) -> Result<(), Failure> {
    if ns.is_empty() || ns.windows(2).any(|w| w[1] <= w[0]) || ns[0] == 0 {
        return Err(usage("--ns must be a strictly increasing list of positive integers"));
    }
    Ok(())
}

fn kind(op: Op) -> OperatorKind {
    match op {
        Op::Bernstein => OperatorKind::Bernstein,
        Op::Beta => OperatorKind::Beta,
        Op::BetaInv => OperatorKind::BetaInverse,
        Op::F => OperatorKind::F,
        Op::Stancu => OperatorKind::Stancu,
        Op::Durrmeyer => OperatorKind::GenuineDurrmeyer,
        Op::DurrmeyerInv => OperatorKind::DurrmeyerInverse,
    }
}

/// Lazy monomial images of the chosen operator.
fn image(op: Op, n: usize, j: usize) -> Result<RationalPolynomial, Error> {
    Ok(match op {
        Op::Bernstein => bernstein_image(n, j),
        Op::Beta => beta_image(n, j),
        Op::BetaInv => beta_inverse_image(n, j),
        Op::F => f_image(n, j),
        Op::Stancu => stancu_image(n, j),
        Op::Durrmeyer => durrmeyer_image(n, j),
        Op::DurrmeyerInv => durrmeyer_inverse_differential(n, &RationalPolynomial::monomial(j))?,
    })
}

macro_rules! with_bits {
    ($bits:expr, $f:ident ( $($arg:expr),* )) => {
        match $bits {
            64 => $f::<64>($($arg),*),
            128 => $f::<128>($($arg),*),
            256 => $f::<256>($($arg),*),
            512 => $f::<512>($($arg),*),
            1024 => $f::<1024>($($arg),*),
            other => return Err(usage(format!("--bits must be one of 64, 128, 256, 512, 1024; got {other}"))),
        }
    };
}

pub fn run(cli: &Cli) -> Outcome {
    if cli.grid < 2 {
        return Err(usage("--grid must be at least 2"));
    }
    if !(cli.tol > 0.0) {
        return Err(usage("--tol must be positive"));
    }
    match &cli.command {
        Command::Monomials => monomials(cli),
        Command::Moments => moments(cli),
        Command::Eigen { limit } => eigen(cli, *limit),
        Command::Basis { family, curve } => basis(cli, *family, *curve),
        Command::Lebesgue { max, table } => lebesgue(cli, *max, *table),
        Command::Voronovskaya { ns } => voronovskaya(cli, ns),
        Command::Limits { ns } => limits(cli, ns),
        Command::Verify => verify(cli),
        Command::Bench { function, ns } => bench(cli, *function, ns),
        Command::Contradiction => contradiction(cli),
    }
}

fn monomials(cli: &Cli) -> Outcome {
    let n = need_n(cli)?;
    let op = cli.op.unwrap_or(Op::Bernstein);
    let js: Vec<usize> = match cli.j {
        Some(j) if j > n => return Err(usage(format!("--j must not exceed --n ({j} > {n})"))),
        Some(j) => vec![j],
        None => (0..=n).collect(),
    };
    let rows = js
        .iter()
        .map(|&j| Ok((format!("e{j}"), image(op, n, j)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let name = kind(op).name();
    ok(match cli.format {
        Format::Csv => polynomials_csv(name, n, &rows),
        Format::Json => json_text(&json!({
            "operator": name,
            "n": n,
            "basis": "monomial",
            "images": js.iter().zip(&rows).map(|(j, (_, p))| json!({
                "j": j,
                "coefficients": polynomial_json(p)["coefficients"].clone(),
            })).collect::<Vec<_>>(),
        })),
    })
}

fn moments(cli: &Cli) -> Outcome {
    let n = need_n(cli)?;
    let op = cli.op.unwrap_or(Op::F);
    let orders: Vec<usize> = match cli.m {
        Some(m) => vec![m],
        None => (0..=6).collect(),
    };
    let rows = orders
        .iter()
        .map(|&m| {
            let p = if op == Op::F {
                central_moment(n, m)
            } else {
                let images = (0..=m).map(|j| image(op, n, j)).collect::<Result<Vec<_>, Error>>()?;
                moment_from_images(m, |j| images[j].clone())
            };
            Ok((format!("M{m}"), p))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let name = kind(op).name();
    ok(match cli.format {
        Format::Csv => polynomials_csv(name, n, &rows),
        Format::Json => json_text(&json!({
            "operator": name,
            "n": n,
            "basis": "monomial",
            "moments": orders.iter().zip(&rows).map(|(m, (_, p))| json!({
                "m": m,
                "coefficients": polynomial_json(p)["coefficients"].clone(),
            })).collect::<Vec<_>>(),
        })),
    })
}

fn pair_csv(name: &str, n: usize, pair: &EigenPair) -> String {
    let mut out = csv_preamble(name, n);
    out.push_str("k,eigenvalue");
    for i in 0..=pair.k {
        out.push_str(&format!(",e{i}"));
    }
    out.push_str(&format!("\n{},{}", pair.k, format_float(rational_to_f64(&pair.eigenvalue))));
    for c in pair.eigenpolynomial.padded(pair.k + 1) {
        out.push_str(&format!(",{}", format_float(rational_to_f64(&c))));
    }
    out.push('\n');
    out
}

fn eigen(cli: &Cli, limit: bool) -> Outcome {
    if limit {
        let k = need(cli.k, "k")?;
        let p = limit_eigenpolynomial(k);
        return ok(match cli.format {
            Format::Csv => polynomials_csv("limit", 0, &[(format!("p{k}*"), p)]),
            Format::Json => json_text(&json!({ "k": k, "limit": polynomial_json(&p) })),
        });
    }
    let n = need_n(cli)?;
    let op = cli.op.unwrap_or(Op::Bernstein);
    if !matches!(op, Op::Bernstein | Op::Beta | Op::F | Op::Durrmeyer) {
        return Err(usage("eigen supports --op bernstein, beta, F or durrmeyer"));
    }
    let name = kind(op).name();
    let Some(k) = cli.k else {
        let s = spectrum(kind(op), n)?;
        return ok(match cli.format {
            Format::Csv => spectrum_csv(&s),
            Format::Json => json_text(&spectrum_json(&s)),
        });
    };
    if k > n {
        return Err(usage(format!("--k must not exceed --n ({k} > {n})")));
    }
    let pair = match op {
        Op::Beta => beta_eigenpolynomial(n, k)?,
        Op::Bernstein => bernstein_eigenpolynomial(n, k)?,
        Op::F => f_eigenpolynomial(n, k)?,
        _ => EigenPair {
            k,
            eigenvalue: durrmeyer_eigenvalue(n, k)?,
            eigenpolynomial: durrmeyer_eigenpolynomial(k).monic(),
        },
    };
    ok(match cli.format {
        Format::Csv => pair_csv(name, n, &pair),
        Format::Json => json_text(&eigenpair_json(name, n, &pair)),
    })
}

fn basis(cli: &Cli, family: Family, curve: bool) -> Outcome {
    let n = need_n(cli)?;
    let (prefix, build): (&str, fn(usize, usize) -> Result<RationalPolynomial, Error>) = match family {
        Family::Phi => ("phi", phi_basis),
        Family::Rho => ("rho", rho_basis),
        Family::Bernstein => ("b", bernstein_basis),
    };
    let polys = (0..=n).map(|i| build(n, i)).collect::<Result<Vec<_>, Error>>()?;
    let labels: Vec<String> = (0..=n).map(|i| format!("{prefix}{i}")).collect();
    if curve {
        let last = cli.grid as i64 - 1;
        let rows: Vec<Vec<f64>> = (0..=last)
            .map(|g| {
                let x = ratio(g, last);
                std::iter::once(rational_to_f64(&x))
                    .chain(polys.iter().map(|p| rational_to_f64(&p.eval(&x))))
                    .collect()
            })
            .collect();
        let mut header = vec!["x"];
        header.extend(labels.iter().map(String::as_str));
        return ok(match cli.format {
            Format::Csv => format!("{}{}", csv_preamble(prefix, n), table_csv(&header, &rows)),
            Format::Json => json_text(&json!({ "family": prefix, "n": n, "columns": header, "rows": rows })),
        });
    }
    let rows: Vec<(String, RationalPolynomial)> = labels.into_iter().zip(polys).collect();
    ok(match cli.format {
        Format::Csv => polynomials_csv(prefix, n, &rows),
        Format::Json => json_text(&json!({
            "family": prefix,
            "n": n,
            "basis": "monomial",
            "polynomials": rows.iter().map(|(l, p)| json!({
                "label": l,
                "coefficients": polynomial_json(p)["coefficients"].clone(),
            })).collect::<Vec<_>>(),
        })),
    })
}

fn lebesgue(cli: &Cli, max: bool, table: bool) -> Outcome {
    if table {
        let ns: Vec<usize> = LEBESGUE_REFERENCE.iter().map(|(n, _)| *n).collect();
        let maxima: Vec<LebesgueMax> = with_bits!(cli.bits, lebesgue_table(&ns))?;
        let rows: Vec<Vec<f64>> = maxima
            .iter()
            .zip(LEBESGUE_REFERENCE)
            .map(|(m, (_, reference))| vec![m.n as f64, m.argmax, m.max, reference])
            .collect();
        return ok(match cli.format {
            Format::Csv => table_csv(&["n", "argmax", "max", "reference"], &rows),
            Format::Json => json_text(&json!({ "bits": cli.bits, "maxima": maxima })),
        });
    }
    let n = need_n(cli)?;
    if max {
        let m: LebesgueMax = with_bits!(cli.bits, lebesgue_max(n))?;
        return ok(match cli.format {
            Format::Csv => table_csv(&["n", "argmax", "max"], &[vec![n as f64, m.argmax, m.max]]),
            Format::Json => json_text(&json!({ "bits": cli.bits, "n": n, "argmax": m.argmax, "max": m.max })),
        });
    }
    let curve: Vec<(f64, f64)> = with_bits!(cli.bits, lebesgue_curve(n, cli.grid))?;
    let rows: Vec<Vec<f64>> = curve.iter().map(|(x, v)| vec![*x, *v]).collect();
    ok(match cli.format {
        Format::Csv => format!("# n={n}\n{}", table_csv(&["x", "psi"], &rows)),
        Format::Json => json_text(&json!({ "n": n, "bits": cli.bits, "curve": rows })),
    })
}

/// Twice the pure `O(1/n)` ratio between the first and last `n`.
fn first_order_band(ns: &[usize]) -> RateBand {
    RateBand::new(0.0, 2.0 * ns[0] as f64 / ns[ns.len() - 1] as f64)
}

fn reports_output(cli: &Cli, reports: &[&ConvergenceReport], extra: Value) -> String {
    match cli.format {
        Format::Csv => reports.iter().map(|r| r.to_csv()).collect::<Vec<_>>().join("\n"),
        Format::Json => json_text(&json!({
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "extra": extra,
        })),
    }
}

fn voronovskaya(cli: &Cli, ns: &[usize]) -> Outcome {
    let m = need(cli.m, "m")?;
    check_ns(ns)?;
    if ns[0] < m {
        return Err(usage(format!("every n in --ns must be at least m = {m}")));
    }
    let p = RationalPolynomial::monomial(m);
    let band = first_order_band(ns);
    let direct = voronovskaya_convergence(&p, ns, cli.grid, band)?;
    let doubling = durrmeyer_doubling_convergence(&p, ns, cli.grid, band)?;
    ok(reports_output(cli, &[&direct, &doubling], Value::Null))
}

fn limits(cli: &Cli, ns: &[usize]) -> Outcome {
    let k = need(cli.k, "k")?;
    check_ns(ns)?;
    if ns[0] < k.max(1) {
        return Err(usage(format!("every n in --ns must be at least k = {k}")));
    }
    let band = first_order_band(ns);
    let beta_inverse = beta_inverse_eigen_convergence(k, ns, cli.grid, band)?;
    let eigen = f_on_eigen_limit(k, ns, cli.grid, band)?;
    let rates = ns
        .iter()
        .map(|&n| Ok((n, bernstein_eigenvalue_rate(n, k)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let reports = [&beta_inverse, &eigen.beta_inverse, &eigen.f, &eigen.f_rate];
    let limit = -((k * k.saturating_sub(1)) as f64) / 2.0;
    let text = match cli.format {
        Format::Csv => {
            let mut out = reports_output(cli, &reports, Value::Null);
            out.push_str(&format!("\n# n(lambda_k - 1), limit {}\nn,value\n", format_float(limit)));
            for (n, r) in &rates {
                out.push_str(&format!("{n},{}\n", format_float(rational_to_f64(r))));
            }
            out
        }
        Format::Json => reports_output(
            cli,
            &reports,
            json!({
                "eigenvalue_rate": rates.iter().map(|(n, r)| json!({ "n": n, "value": rational_string(r) })).collect::<Vec<_>>(),
                "eigenvalue_rate_limit": limit,
            }),
        ),
    };
    ok(text)
}

fn verify(cli: &Cli) -> Outcome {
    let max_n = cli.n.unwrap_or(10);
    if max_n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let results = run_exact_suite(max_n);
    let failed = results.iter().any(|r| !r.passed);
    let text = match cli.format {
        Format::Csv => {
            let mut out = format!("# exact identities for n <= {max_n}\ncheck,status,detail\n");
            for r in &results {
                let status = if r.passed { "pass" } else { "FAIL" };
                out.push_str(&format!("{},{status},{}\n", r.name, r.detail));
            }
            out
        }
        Format::Json => json_text(&json!({ "max_n": max_n, "checks": results })),
    };
    Ok(Output { text, failed })
}

fn bench(cli: &Cli, function: BenchFunction, ns: &[usize]) -> Outcome {
    check_ns(ns)?;
    let functions: Vec<SampleFunction> = match function {
        BenchFunction::All => SampleFunction::ALL.to_vec(),
        BenchFunction::Square => vec![SampleFunction::Square],
        BenchFunction::Kink => vec![SampleFunction::Kink],
        BenchFunction::Sine => vec![SampleFunction::Sine],
    };
    let mut results = Vec::new();
    for f in functions {
        let g = move |x: f64| f.eval(x);
        let rows: Vec<BenchmarkRow> = with_bits!(cli.bits, benchmark_errors(&g, ns, cli.grid))?;
        results.push((f, rows));
    }
    ok(match cli.format {
        Format::Csv => benchmark_csv(&results),
        Format::Json => json_text(&json!({
            "grid": cli.grid,
            "results": results.iter().map(|(f, rows)| json!({ "function": f.name(), "rows": rows })).collect::<Vec<_>>(),
        })),
    })
}

fn contradiction(cli: &Cli) -> Outcome {
    if cli.tol > 1e-4 {
        return Err(usage("--tol must not exceed 1e-4 for this check"));
    }
    let report = g2_contradiction_check(cli.tol)?;
    let mut sandwich = Vec::new();
    for n in 2..=6 {
        for x in [0.25, 0.5] {
            for j in [1, 2] {
                sandwich.push(g_moment_sandwich(n, j, x, cli.tol)?);
            }
        }
    }
    let failed = !report.confirmed() || sandwich.iter().any(|s| !s.holds(cli.tol));
    let text = match cli.format {
        Format::Csv => {
            let mut out = String::from("quantity,value\n");
            for (k, v) in [
                ("quadrature", report.quadrature),
                ("error_estimate", report.error_estimate),
                ("closed_form", report.closed_form),
                ("bernstein", report.bernstein),
                ("distance", report.distance()),
                ("through_f", report.through_f),
            ] {
                out.push_str(&format!("{k},{}\n", format_float(v)));
            }
            out.push_str(&format!("confirmed,{}\n\n", report.confirmed()));
            let rows: Vec<Vec<f64>> = sandwich
                .iter()
                .map(|s| vec![s.n as f64, s.order as f64, s.x, s.lower, s.moment, s.upper])
                .collect();
            out.push_str(&table_csv(&["n", "order", "x", "lower", "moment", "upper"], &rows));
            out
        }
        Format::Json => json_text(&json!({
            "report": report,
            "distance": report.distance(),
            "confirmed": report.confirmed(),
            "moments": sandwich,
        })),
    };
    Ok(Output { text, failed })
}
