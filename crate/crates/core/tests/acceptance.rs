use std::process::ExitCode;
use std::time::Instant;

use betasplit::asymptotics::{beta_inverse_eigen_convergence, bernstein_eigenvalue_rate, voronovskaya_convergence, RateBand};
use betasplit::eigen::{
    beta_eigen_coefficient, beta_eigenpolynomial, beta_eigenvalue, bernstein_eigenpolynomial, bernstein_eigenvalue,
    durrmeyer_dual_coefficient, durrmeyer_eigenvalue, durrmeyer_jacobi_eigenpolynomial, f_eigenvalue,
};
use betasplit::exact::{factorial, int, ratio, rational_to_f64, stirling_second};
use betasplit::numerics::{benchmark_csv, benchmark_errors, closed_form_value, g2_contradiction_check, lebesgue_table, SampleFunction, LEBESGUE_REFERENCE};
use betasplit::operators::columns::{apply_bernstein, apply_beta, f_image};
use betasplit::operators::{
    bernstein_matrix, beta_matrix, central_moment, compose, durrmeyer_matrix, f_matrix,
};
use betasplit::{Rational, RationalPolynomial};
use num_bigint::BigInt;

const GRID: usize = 201;

type Outcome = (bool, String);

fn e(m: usize) -> RationalPolynomial {
    RationalPolynomial::monomial(m)
}

fn q(v: i128) -> Rational {
    int(BigInt::from(v))
}

fn poly(coeffs: &[i128]) -> RationalPolynomial {
    RationalPolynomial::new(coeffs.iter().map(|&c| q(c)).collect())
}

fn w() -> RationalPolynomial {
    poly(&[0, 1, -1])
}

fn inv_pow(n: usize, k: u32) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(n).pow(k))
}

fn fact_ratio(a: usize, b: usize) -> Rational {
    Rational::new(factorial(a), factorial(b))
}

fn decomposition() -> Outcome {
    for n in 1..=50 {
        let lhs = compose(&beta_matrix(n).unwrap(), &f_matrix(n).unwrap()).unwrap();
        if lhs.matrix() != bernstein_matrix(n).unwrap().matrix() {
            return (false, format!("mismatch at n={n}"));
        }
    }
    (true, "beta·F = bernstein for n=1..50".into())
}

/// Closed forms of `F_n e_m`, `m = 2..=6`, as `x/n^{2m-2}` times the bracket.
fn f_closed_form(n: usize, m: usize) -> RationalPolynomial {
    let n = n as i128;
    let s = n * n;
    let a = |j: i128| s - j * j;
    let bracket: Vec<i128> = match m {
        2 => vec![1, a(1)],
        3 => vec![2 - s, 6 * a(1), a(1) * a(2)],
        4 => vec![
            -(n.pow(3) + 5 * s - n - 6),
            -a(1) * (4 * s - n - 42),
            18 * a(1) * a(2),
            a(1) * a(2) * a(3),
        ],
        5 => vec![
            2 * n.pow(4) - 10 * n.pow(3) - 25 * s + 10 * n + 24,
            -5 * a(1) * (n.pow(3) + 13 * s - 6 * n - 72),
            -5 * a(1) * a(2) * (2 * s - n - 60),
            40 * a(1) * a(2) * a(3),
            a(1) * a(2) * a(3) * a(4),
        ],
        6 => vec![
            9 * n.pow(5) + 16 * n.pow(4) - 95 * n.pow(3) - 135 * s + 86 * n + 120,
            a(1) * (22 * n.pow(4) - 144 * n.pow(3) - 919 * s + 626 * n + 3720),
            -15 * a(1) * a(2) * (n.pow(3) + 25 * s - 18 * n - 360),
            -5 * a(1) * a(2) * a(3) * (4 * s - 3 * n - 260),
            75 * a(1) * a(2) * a(3) * a(4),
            a(1) * a(2) * a(3) * a(4) * a(5),
        ],
        _ => unreachable!(),
    };
    (e(1) * poly(&bracket)).scale(&inv_pow(n as usize, 2 * m as u32 - 2))
}

fn monomial_images() -> Outcome {
    for n in 2..=12 {
        for m in 2..=6 {
            if f_image(n, m) != f_closed_form(n, m) {
                return (false, format!("F_n e_{m} differs at n={n}"));
            }
        }
    }
    (true, "F_n e_2..e_6 match the closed forms for n=2..12".into())
}

fn non_positivity() -> Outcome {
    // The closed form carries (n+2)^5; it is the value at 1/(n+2)^2.
    for n in 2..=12usize {
        let ni = n as i128;
        let x = Rational::new(BigInt::from(1), BigInt::from((ni + 2) * (ni + 2)));
        let value = f_image(n, 3).eval(&x);
        let closed = Rational::new(
            BigInt::from(-ni.pow(5) - 6 * ni.pow(4) - 3 * ni.pow(3) + 14 * ni * ni + 17 * ni + 6),
            BigInt::from(ni.pow(4) * (ni + 2).pow(5)),
        );
        if value != closed || value >= int(0) {
            return (false, format!("n={n}: F_n(e_3; 1/(n+2)^2) = {value}, closed form {closed}"));
        }
    }
    (true, "F_n(e_3; 1/(n+2)^2) equals the closed form and is negative for n=2..12".into())
}

fn moment_closed_form(n: usize, m: usize) -> RationalPolynomial {
    let ni = n as i128;
    let s = ni * ni;
    let w = w();
    let c = |v: i128| RationalPolynomial::constant(q(v));
    let odd = poly(&[1, -2]);
    let (body, power) = match m {
        0 => return c(1),
        1 => return RationalPolynomial::zero(),
        2 => (w.clone(), 2),
        3 => (&w * &odd.scale(&q(2 - s)), 4),
        4 => (&w * &(w.scale(&q(3 * (11 * s - 12))) + c(-ni.pow(3) - 5 * s + ni + 6)), 6),
        5 => (
            &(&w * &odd)
                * &(w.scale(&q(-2 * (17 * ni.pow(4) - 160 * s + 144)))
                    + c(2 * ni.pow(4) - 10 * ni.pow(3) - 25 * s + 10 * ni + 24)),
            8,
        ),
        6 => (
            &w * &((&w * &w).scale(&q(-5 * (8 * ni.pow(6) - 653 * ni.pow(4) + 3524 * s - 2880)))
                + w.scale(&q(5 * (2 * ni.pow(6) - 15 * ni.pow(5) - 155 * ni.pow(4) + 123 * ni.pow(3) + 872 * s
                    - 108 * ni
                    - 720)))
                + c(9 * ni.pow(5) + 16 * ni.pow(4) - 95 * ni.pow(3) - 135 * s + 86 * ni + 120)),
            10,
        ),
        _ => unreachable!(),
    };
    body.scale(&inv_pow(n, power))
}

fn moments() -> Outcome {
    for n in 2..=12 {
        for m in 0..=6 {
            if central_moment(n, m) != moment_closed_form(n, m) {
                return (false, format!("M_{{n,{m}}} differs at n={n}"));
            }
        }
    }
    for n in 1..=50 {
        if central_moment(n, 2).scale(&q((n * n) as i128)) != w() {
            return (false, format!("n^2 M_{{n,2}} != x(1-x) at n={n}"));
        }
    }
    (true, "M_{n,0..6} match for n=2..12; n^2 M_{n,2} = x(1-x) for n=1..50".into())
}

fn eigenstructure() -> Outcome {
    for n in 1..=12usize {
        for k in 0..=n {
            let eta = fact_ratio(n - 1, n + k - 1) * q((n as i128).pow(k as u32));
            let lambda = fact_ratio(n, n - k) * inv_pow(n, k as u32);
            let nu = fact_ratio(n - 1 + k, n - k) * inv_pow(n, (2 * k).saturating_sub(1) as u32);
            let qk = beta_eigenpolynomial(n, k).unwrap();
            let pk = bernstein_eigenpolynomial(n, k).unwrap();
            let ok = qk.eigenvalue == eta
                && pk.eigenvalue == lambda
                && beta_eigenvalue(n, k).unwrap() == eta
                && bernstein_eigenvalue(n, k).unwrap() == lambda
                && apply_beta(n, &qk.eigenpolynomial) == qk.eigenpolynomial.scale(&eta)
                && apply_bernstein(n, &pk.eigenpolynomial) == pk.eigenpolynomial.scale(&lambda)
                && qk.eigenpolynomial.degree() == Some(k)
                && pk.eigenpolynomial.degree() == Some(k)
                && f_eigenvalue(n, k).unwrap() == &lambda / &eta
                && (k == 0 || f_eigenvalue(n, k).unwrap() == nu);
            if !ok {
                return (false, format!("eigenpair mismatch at n={n} k={k}"));
            }
            let (ki, ni) = (k as i64, n as i64);
            if k >= 2 && beta_eigen_coefficient(n, k, k - 1).unwrap() != ratio(-ki, 2) {
                return (false, format!("a(n,k,k-1) != -k/2 at n={n} k={k}"));
            }
            if k >= 3 {
                let expected = ratio(ki * (ki - 1) * (ki - 2), 24)
                    * ratio(6 * ni + 3 * ki - 5, (2 * ki - 3) * ni + (ki - 1) * (ki - 2));
                if beta_eigen_coefficient(n, k, k - 2).unwrap() != expected {
                    return (false, format!("a(n,k,k-2) differs at n={n} k={k}"));
                }
            }
        }
    }
    (true, "eigen equations, a(n,k,k-1), a(n,k,k-2) and nu = lambda/eta hold for k<=n<=12".into())
}

fn inverse_formulas() -> Outcome {
    for n in 1..=10usize {
        let beta_inv = beta_matrix(n).unwrap().inverse().unwrap();
        let u_inv = durrmeyer_matrix(n).unwrap().inverse().unwrap();
        for j in 0..=n {
            let mut expected = RationalPolynomial::zero();
            for k in 0..=j {
                let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                let c = fact_ratio(n - 1 + k, n - 1) * int(stirling_second(j, k)) * q(sign);
                expected = expected + e(k).scale(&c);
            }
            expected = expected.scale(&inv_pow(n, j as u32));
            if beta_inv.image(j) != expected {
                return (false, format!("inverse Beta image differs at n={n} j={j}"));
            }
            let p = e(j);
            let mut u = RationalPolynomial::zero();
            for l in 0..n {
                let sign = if l % 2 == 0 { 1 } else { -1 };
                let c = fact_ratio(n - 1 - l, n - 1) * Rational::new(BigInt::from(sign), factorial(l));
                let term = if l == 0 {
                    p.clone()
                } else {
                    let mut wl = RationalPolynomial::constant(int(1));
                    for _ in 0..l {
                        wl = &wl * &w();
                    }
                    (&wl * &p.derivative(l + 1)).derivative(l - 1)
                };
                u = u + term.scale(&c);
            }
            if u_inv.image(j) != u {
                return (false, format!("inverse Durrmeyer image differs at n={n} j={j}"));
            }
        }
    }
    (true, "both inverse formulas agree with matrix inverses on Pi_n, n<=10".into())
}

fn expansions() -> Outcome {
    for n in 2..=10usize {
        let f_mat = f_matrix(n).unwrap();
        for j in 0..=n {
            let f = e(j);
            let bf = apply_bernstein(n, &f);
            let mut recon = RationalPolynomial::zero();
            let mut through = RationalPolynomial::zero();
            for k in 0..=n {
                let p = durrmeyer_jacobi_eigenpolynomial(k);
                let omega = durrmeyer_eigenvalue(n, k).unwrap();
                recon = recon + p.scale(&(omega * durrmeyer_dual_coefficient(n, k, &f).unwrap()));
                through = through + p.scale(&durrmeyer_dual_coefficient(n, k, &bf).unwrap());
            }
            if recon != bf || through != f_mat.image(j) {
                return (false, format!("expansion fails at n={n} j={j}"));
            }
        }
    }
    for n in 1..=30 {
        let b = bernstein_matrix(n).unwrap();
        let lhs = compose(&durrmeyer_matrix(n).unwrap(), &f_matrix(n).unwrap()).unwrap();
        if lhs.matrix() != compose(&b, &b).unwrap().matrix() {
            return (false, format!("U_n F_n != B_n^2 at n={n}"));
        }
    }
    (true, "dual expansions hold for n<=10; U_n F_n = B_n^2 for n<=30".into())
}

fn lebesgue() -> Outcome {
    let ns: Vec<usize> = LEBESGUE_REFERENCE.iter().map(|(n, _)| *n).collect();
    let maxima = lebesgue_table::<256>(&ns).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for (m, (n, reference)) in maxima.iter().zip(LEBESGUE_REFERENCE) {
        let good = (m.max - reference).abs() <= 0.01;
        ok &= good;
        parts.push(format!("{n}:{:.4}/{reference}{}", m.max, if good { "" } else { "(!)" }));
    }
    (ok, format!("max Psi_n vs table within 0.01: {}", parts.join(" ")))
}

fn contradiction() -> Outcome {
    let r = g2_contradiction_check(1e-6).unwrap();
    let close = (r.quadrature - closed_form_value()).abs() <= 1e-4;
    let apart = (r.quadrature - 1.0 / 16.0).abs() > 5e-3;
    (
        close && apart,
        format!("quadrature {:.10}, closed form {:.10}, distance from 1/16 {:.6}", r.quadrature, closed_form_value(), r.distance()),
    )
}

fn voronovskaya() -> Outcome {
    let band = RateBand::new(0.0, 0.25);
    let mut ok = true;
    let mut parts = Vec::new();
    for m in 2..=6 {
        let r = voronovskaya_convergence(&e(m), &[250, 1000], GRID, band).unwrap();
        let good = if m == 2 { r.samples.iter().all(|(_, err)| *err == 0.0) } else { r.passed() };
        ok &= good;
        let ratio = r.ratio().map_or("exact".to_string(), |v| format!("{v:.5}"));
        parts.push(format!("e{m}:{ratio}{}", if good { "" } else { "(!)" }));
    }
    (ok, format!("error ratio n=1000 vs n=250, band <= 0.25: {}", parts.join(" ")))
}

fn limits() -> Outcome {
    let band = RateBand::new(0.05, 0.2);
    let mut ok = true;
    let mut parts = Vec::new();
    for k in 0..=5usize {
        let r = beta_inverse_eigen_convergence(k, &[100, 1000], GRID, band).unwrap();
        let rate = rational_to_f64(&bernstein_eigenvalue_rate(1000, k).unwrap());
        let target = -((k * k.saturating_sub(1)) as f64) / 2.0;
        let good_rate = (rate - target).abs() <= 1e-2;
        ok &= r.passed() && good_rate;
        let ratio = r.ratio().map_or("exact".to_string(), |v| format!("{v:.4}"));
        parts.push(format!(
            "k{k}:ratio {ratio}{} n(lambda-1) {rate:.5}{}",
            if r.passed() { "" } else { "(!)" },
            if good_rate { "" } else { "(!)" }
        ));
    }
    (ok, parts.join("; "))
}

fn benchmark() -> Outcome {
    let rows = benchmark_errors::<256>(&|x: f64| x * x, &[10], GRID).unwrap();
    let row = &rows[0];
    let exact = (row.sup_b - 0.025).abs() <= 1e-10 && (row.sup_f - 0.0025).abs() <= 1e-10;
    let ns = [5, 10, 20, 50];
    let results: Vec<_> = SampleFunction::ALL
        .iter()
        .map(|&f| (f, benchmark_errors::<256>(&move |x: f64| f.eval(x), &ns, GRID).unwrap()))
        .collect();
    let csv = benchmark_csv(&results);
    let lines = csv.lines().count();
    let shaped = results.len() == 3 && lines == 1 + 3 * ns.len();
    (
        exact && shaped,
        format!("e_2 at n=10: sup_B {:.3e}, sup_F {:.3e}; CSV rows {}", row.sup_b, row.sup_f, lines - 1),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("exact decomposition", decomposition),
        ("monomial images", monomial_images),
        ("non-positivity witness", non_positivity),
        ("moments", moments),
        ("eigenstructure", eigenstructure),
        ("inverse formulas", inverse_formulas),
        ("Durrmeyer expansions", expansions),
        ("Lebesgue table", lebesgue),
        ("G_2 contradiction", contradiction),
        ("Voronovskaya rate", voronovskaya),
        ("eigenpolynomial limits", limits),
        ("benchmark", benchmark),
    ];
    let results: Vec<(Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    (f(), start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| ((false, "panicked".into()), 0.0)))
            .collect()
    });
    let mut failed = 0;
    for (i, ((name, _), ((ok, detail), secs))) in criteria.iter().zip(results).enumerate() {
        failed += usize::from(!ok);
        println!("{} {:>2} {name} [{secs:.1}s]: {detail}", if ok { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
