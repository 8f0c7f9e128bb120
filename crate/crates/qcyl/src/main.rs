//! Command-line front end: every verb prints either human-readable lines or
//! a single machine-readable JSON object (`--json`), and the exit code is
//! the CI contract: 0 = success/verified, 1 = a verification found a
//! mismatch, 2 = usage error.

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use qcyl::checks::{self, ConjectureReport};
use qcyl::oracle;
use qcyl::products::{self, f_product, g_product, named_product};
use qcyl::profiles::compositions;
use qcyl::solver::{self, solve_g};
use qcyl::sums::{self, builtin_spec, eval_sum, eval_sum_z1};
use qcyl::{Profile, QSeries, ZQSeries};

#[derive(Parser)]
#[command(
    name = "qcyl",
    about = "Exact q-series computations for cylindric partition generating functions",
    long_about = "All --order values are exclusive truncation bounds (coefficients of q^0..q^{order-1});\n\
                  --zdeg values are inclusive maximal z-degrees."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the Borodin product F_c(1,q), or G_c(1,q) with --g
    Borodin {
        #[arg(long)]
        profile: String,
        #[arg(long, default_value_t = 40)]
        order: usize,
        /// Strip the 1/(q;q)_inf factor (G instead of F)
        #[arg(long)]
        g: bool,
        #[arg(long)]
        json: bool,
    },
    /// Solve the coupled q-difference system for G_c(z,q), or F_c with --f
    Solve {
        #[arg(long)]
        profile: String,
        #[arg(long, default_value_t = 5)]
        zdeg: usize,
        #[arg(long, default_value_t = 40)]
        order: usize,
        /// Recover F_c(z,q) instead of G_c(z,q)
        #[arg(long)]
        f: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a built-in multi-sum as a bivariate series
    Sum {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 3)]
        zdeg: usize,
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force count cylindric partitions on a bounded window
    Oracle {
        #[arg(long)]
        profile: String,
        #[arg(long, default_value_t = 4)]
        max_part: usize,
        #[arg(long, default_value_t = 12)]
        max_size: usize,
        #[arg(long)]
        json: bool,
    },
    /// Verify an identity family coefficient by coefficient
    Verify {
        /// rr | ag | asw7 | asw500 | th-main | sum-side | qdiff | open-problem | symmetry | hooks | oracle
        #[arg(long)]
        identity: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        zdeg: Option<usize>,
        /// Andrews-Gordon r (with --identity ag)
        #[arg(long)]
        r: Option<usize>,
        /// Andrews-Gordon i (with --identity ag)
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Bounded-entry polynomial reports P_{n,c} and Q_{n,c}
    Conjecture {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 120)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the explicit order-4 recurrence for the (4,1,0) coefficients
    Recurrence {
        /// Inclusive range of recurrence indices, e.g. 4..12
        #[arg(long, default_value = "4..12")]
        k: String,
        #[arg(long, default_value_t = 120)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Source::Both)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Solver,
    Sums,
    Both,
}

#[derive(Serialize, Deserialize)]
struct Output {
    argv: Vec<String>,
    verb: String,
    params: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<Value>,
}

fn emit(verb: &str, params: Value, result: Option<Value>, report: Option<Value>) {
    let out = Output {
        argv: std::env::args().collect(),
        verb: verb.to_string(),
        params,
        result,
        report,
    };
    println!("{}", serde_json::to_string(&out).expect("serializable"));
}

fn print_series(s: &QSeries) {
    let strs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    println!("[{}]", strs.join(", "));
}

fn print_zq(s: &ZQSeries) {
    for k in 0..s.zdeg() {
        print_series(s.zcoeff(k));
    }
}

#[derive(Serialize)]
struct VerifyItem {
    label: String,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl VerifyItem {
    fn pass(label: impl Into<String>) -> Self {
        VerifyItem { label: label.into(), ok: true, detail: None }
    }

    fn fail(label: impl Into<String>, detail: impl Into<String>) -> Self {
        VerifyItem { label: label.into(), ok: false, detail: Some(detail.into()) }
    }

    fn from_series(label: impl Into<String>, lhs: &QSeries, rhs: &QSeries) -> Self {
        match lhs.first_diff(rhs) {
            None => Self::pass(label),
            Some(i) => Self::fail(
                label,
                format!("first mismatch at q^{i}: lhs={}, rhs={}", lhs.coeff(i), rhs.coeff(i)),
            ),
        }
    }

    fn from_zq(label: impl Into<String>, lhs: &ZQSeries, rhs: &ZQSeries) -> Self {
        match lhs.first_diff(rhs) {
            None => Self::pass(label),
            Some((k, i)) => Self::fail(
                label,
                format!(
                    "first mismatch at z^{k} q^{i}: lhs={}, rhs={}",
                    lhs.zcoeff(k).coeff(i),
                    rhs.zcoeff(k).coeff(i)
                ),
            ),
        }
    }

    fn from_residual(item: &solver::ResidualItem) -> Self {
        match item.first_nonzero {
            None => Self::pass(&item.label),
            Some((z, q)) => Self::fail(&item.label, format!("nonzero residual at z^{z} q^{q}")),
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> qcyl::Result<i32> {
    match command {
        Command::Borodin { profile, order, g, json } => {
            let c: Profile = profile.parse()?;
            let series = if g { g_product(&c, order) } else { f_product(&c, order) };
            if json {
                emit(
                    "borodin",
                    json!({"profile": c.parts(), "order": order, "g": g}),
                    Some(json!({"coeffs": series})),
                    None,
                );
            } else {
                print_series(&series);
            }
            Ok(0)
        }
        Command::Solve { profile, zdeg, order, f, json } => {
            let c: Profile = profile.parse()?;
            let sol = solve_g(&c, zdeg + 1, order);
            let series = if f {
                sol.f(&c).expect("seed in orbit")
            } else {
                sol.g(&c).expect("seed in orbit").clone()
            };
            if json {
                emit(
                    "solve",
                    json!({"profile": c.parts(), "zdeg": zdeg, "order": order, "f": f}),
                    Some(json!({"kind": if f { "F" } else { "G" }, "zcoeffs": series})),
                    None,
                );
            } else {
                print_zq(&series);
            }
            Ok(0)
        }
        Command::Sum { name, zdeg, order, json } => {
            let spec = builtin_spec(&name)?;
            let series = eval_sum(&spec, zdeg + 1, order)?;
            if json {
                emit(
                    "sum",
                    json!({"name": name, "zdeg": zdeg, "order": order}),
                    Some(json!({"zcoeffs": series})),
                    None,
                );
            } else {
                print_zq(&series);
            }
            Ok(0)
        }
        Command::Oracle { profile, max_part, max_size, json } => {
            let c: Profile = profile.parse()?;
            let table = oracle::enumerate(&c, max_part, max_size)?;
            if json {
                let counts: Vec<Vec<String>> = table
                    .counts
                    .iter()
                    .map(|row| row.iter().map(|v| v.to_string()).collect())
                    .collect();
                emit(
                    "oracle",
                    json!({"profile": c.parts(), "max_part": max_part, "max_size": max_size}),
                    Some(json!({
                        "max_bound": table.max_bound,
                        "size_bound": table.size_bound,
                        "counts": counts,
                    })),
                    None,
                );
            } else {
                for (m, row) in table.counts.iter().enumerate() {
                    let strs: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    println!("max={m}: [{}]", strs.join(", "));
                }
            }
            Ok(0)
        }
        Command::Verify { identity, order, zdeg, r, i, json } => {
            let (items, params) = run_verify(&identity, order, zdeg, r, i)?;
            let ok = items.iter().all(|item| item.ok);
            if json {
                emit(
                    "verify",
                    params,
                    None,
                    Some(json!({"identity": identity, "items": items, "ok": ok})),
                );
            } else {
                for item in &items {
                    match &item.detail {
                        None => println!("PASS {}", item.label),
                        Some(d) => println!("FAIL {}: {d}", item.label),
                    }
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Conjecture { profile, n, order, json } => {
            let c: Profile = profile.parse()?;
            if c.k() != 3 {
                return Err(qcyl::Error::InvalidProfile(
                    "conjecture reports need a three-part profile".into(),
                ));
            }
            let (p, q) = checks::conjecture_reports(&c, n, order);
            let asserted_ok =
                p.passes() && (c.level() % 3 == 0 || q.passes());
            if json {
                emit(
                    "conjecture",
                    json!({"profile": c.parts(), "n": n, "order": order}),
                    None,
                    Some(json!({"p": report_json(&p), "q": report_json(&q), "ok": asserted_ok})),
                );
            } else {
                print_conjecture("P", &p);
                print_conjecture("Q", &q);
            }
            Ok(if asserted_ok { 0 } else { 1 })
        }
        Command::Recurrence { k, order, source, json } => {
            let (k_from, k_max) = parse_range(&k)?;
            let mut items: Vec<VerifyItem> = Vec::new();

            let sol = solve_g(&Profile::new(vec![4, 1, 0]).unwrap(), k_max + 1, order);
            if source != Source::Sums {
                let g410 = sol.g(&Profile::new(vec![4, 1, 0]).unwrap()).unwrap();
                let g: Vec<QSeries> = (0..=k_max).map(|j| g410.zcoeff(j).clone()).collect();
                for item in solver::recg410_residuals(&g, k_from, k_max) {
                    items.push(relabel(VerifyItem::from_residual(&item), " [solver]"));
                }
            }
            if source != Source::Solver {
                let sum = eval_sum(&builtin_spec("sum410")?, k_max + 1, order)?;
                let g: Vec<QSeries> = (0..=k_max).map(|j| sum.zcoeff(j).clone()).collect();
                for item in solver::recg410_residuals(&g, k_from, k_max) {
                    items.push(relabel(VerifyItem::from_residual(&item), " [sums]"));
                }
            }
            for item in solver::qrec410_residuals(&sol, k_max) {
                items.push(VerifyItem::from_residual(&item));
            }

            let ok = items.iter().all(|item| item.ok);
            if json {
                emit(
                    "recurrence",
                    json!({"k": k, "order": order}),
                    None,
                    Some(json!({"items": items, "ok": ok})),
                );
            } else {
                for item in &items {
                    match &item.detail {
                        None => println!("PASS {}", item.label),
                        Some(d) => println!("FAIL {}: {d}", item.label),
                    }
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn relabel(mut item: VerifyItem, suffix: &str) -> VerifyItem {
    item.label.push_str(suffix);
    item
}

fn parse_range(s: &str) -> qcyl::Result<(usize, usize)> {
    let bad = || qcyl::Error::InvalidProfile(format!("bad range `{s}`, expected e.g. 4..12"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let from = a.trim().parse::<usize>().map_err(|_| bad())?;
    let to = b.trim().parse::<usize>().map_err(|_| bad())?;
    if from < 4 || to < from {
        return Err(bad());
    }
    Ok((from, to))
}

fn report_json(r: &ConjectureReport) -> Value {
    json!({
        "profile": r.profile.parts(),
        "n": r.n,
        "order": r.order,
        "degree": r.degree,
        "window_ok": r.window_ok,
        "nonnegative": r.nonnegative,
        "value_at_one": r.value_at_one.as_ref().map(|v| v.to_string()),
        "expected_at_one": r.expected_at_one.as_ref().map(|v| v.to_string()),
        "passes": r.passes(),
    })
}

fn print_conjecture(name: &str, r: &ConjectureReport) {
    println!(
        "{name}_{{{},({})}}: degree {} (order {}), window {}, nonnegative {}, value(1) {} expected {}",
        r.n,
        r.profile,
        r.degree,
        r.order,
        if r.window_ok { "ok" } else { "too short" },
        r.nonnegative,
        r.value_at_one.as_ref().map_or("-".into(), |v| v.to_string()),
        r.expected_at_one.as_ref().map_or("-".into(), |v| v.to_string()),
    );
}

/// The seven level-5 (sum, profile, product) name triples.
const LEVEL5_TRIPLES: [(&str, [usize; 3], &str); 7] = [
    ("sum500", [5, 0, 0], "prod500"),
    ("sum410", [4, 1, 0], "prod410"),
    ("sum401", [4, 0, 1], "prod401"),
    ("sum302", [3, 0, 2], "prod302"),
    ("sum320", [3, 2, 0], "prod320"),
    ("sum311", [3, 1, 1], "prod311"),
    ("sum221", [2, 2, 1], "prod221"),
];

fn run_verify(
    identity: &str,
    order: Option<usize>,
    zdeg: Option<usize>,
    r: Option<usize>,
    i: Option<usize>,
) -> qcyl::Result<(Vec<VerifyItem>, Value)> {
    let mut items = Vec::new();
    let params;
    match identity {
        "rr" => {
            let n = order.unwrap_or(201);
            params = json!({"identity": identity, "order": n});
            for name in ["rr1", "rr2"] {
                let sum = eval_sum_z1(&builtin_spec(name)?, n)?;
                let prod = named_product(name, n)?;
                items.push(VerifyItem::from_series(name, &sum, &prod));
            }
        }
        "ag" => {
            let n = order.unwrap_or(101);
            params = json!({"identity": identity, "order": n, "r": r, "i": i});
            let pairs: Vec<(usize, usize)> = match (r, i) {
                (Some(r), Some(i)) => vec![(r, i)],
                (Some(r), None) => (1..=r).map(|i| (r, i)).collect(),
                _ => (2..=4).flat_map(|r| (1..=r).map(move |i| (r, i))).collect(),
            };
            for (r, i) in pairs {
                let sum = eval_sum_z1(&sums::ag_spec(r, i), n)?;
                let prod = products::ag_product(r, i, n);
                items.push(VerifyItem::from_series(format!("ag({r},{i})"), &sum, &prod));
            }
        }
        "asw7" => {
            let n = order.unwrap_or(201);
            params = json!({"identity": identity, "order": n});
            let sum = eval_sum_z1(&builtin_spec("asw7")?, n)?;
            let prod = named_product("asw7", n)?;
            items.push(VerifyItem::from_series("asw7", &sum, &prod));
        }
        "asw500" => {
            let n = order.unwrap_or(61);
            params = json!({"identity": identity, "order": n});
            let quad = sums::asw500_sum(n);
            let prod = named_product("prod500", n)?;
            let sum = eval_sum_z1(&builtin_spec("sum500")?, n)?;
            items.push(VerifyItem::from_series("asw500 = prod500", &quad, &prod));
            items.push(VerifyItem::from_series("asw500 = sum500(z=1)", &quad, &sum));
        }
        "th-main" => {
            let n = order.unwrap_or(61);
            params = json!({"identity": identity, "order": n});
            for (sum_name, parts, prod_name) in LEVEL5_TRIPLES {
                let c = Profile::new(parts.to_vec()).unwrap();
                let sum = eval_sum_z1(&builtin_spec(sum_name)?, n)?;
                let gp = g_product(&c, n);
                let np = named_product(prod_name, n)?;
                items.push(VerifyItem::from_series(format!("{sum_name} = G_({c})"), &sum, &gp));
                items.push(VerifyItem::from_series(format!("G_({c}) = {prod_name}"), &gp, &np));
            }
        }
        "sum-side" => {
            let m = zdeg.unwrap_or(4) + 1;
            let n = order.unwrap_or(41);
            params = json!({"identity": identity, "zdeg": m - 1, "order": n});
            let sol = solve_g(&Profile::new(vec![5, 0, 0]).unwrap(), m, n);
            for (sum_name, parts, _) in LEVEL5_TRIPLES {
                let c = Profile::new(parts.to_vec()).unwrap();
                let sum = eval_sum(&builtin_spec(sum_name)?, m, n)?;
                let g = sol.g(&c).unwrap();
                items.push(VerifyItem::from_zq(format!("{sum_name} = G_({c})(z,q)"), &sum, g));
            }
        }
        "qdiff" => {
            let m = zdeg.unwrap_or(4) + 1;
            let n = order.unwrap_or(41);
            params = json!({"identity": identity, "zdeg": m - 1, "order": n});
            for item in solver::verify_qdiff_system(m, n) {
                items.push(VerifyItem::from_residual(&item));
            }
            for item in solver::verify_qdiff_derived(m, n) {
                items.push(VerifyItem::from_residual(&item));
            }
        }
        "open-problem" => {
            let n = order.unwrap_or(61);
            params = json!({"identity": identity, "order": n});
            let rep = sums::open_problem_checks(n)?;
            items.push(match rep.z1_diff_410_401 {
                None => VerifyItem::pass("sum410 = sum401 at z=1"),
                Some(e) => VerifyItem::fail("sum410 = sum401 at z=1", format!("differ at q^{e}")),
            });
            items.push(match rep.z1_diff_302_320 {
                None => VerifyItem::pass("sum302 = sum320 at z=1"),
                Some(e) => VerifyItem::fail("sum302 = sum320 at z=1", format!("differ at q^{e}")),
            });
            items.push(match rep.bivariate_witness_410_401 {
                Some((z, q)) => VerifyItem::pass(format!(
                    "sum410 != sum401 bivariate (witness z^{z} q^{q})"
                )),
                None => VerifyItem::fail("sum410 != sum401 bivariate", "no witness found"),
            });
            items.push(match rep.bivariate_witness_302_320 {
                Some((z, q)) => VerifyItem::pass(format!(
                    "sum302 != sum320 bivariate (witness z^{z} q^{q})"
                )),
                None => VerifyItem::fail("sum302 != sum320 bivariate", "no witness found"),
            });
        }
        "symmetry" => {
            let n = order.unwrap_or(81);
            params = json!({"identity": identity, "order": n});
            for level in 1..=5 {
                for parts in compositions(3, level) {
                    let c = Profile::new(parts).unwrap();
                    if products::check_symmetry(&c, n) {
                        items.push(VerifyItem::pass(format!("symmetry ({c})")));
                    } else {
                        items.push(VerifyItem::fail(
                            format!("symmetry ({c})"),
                            "series differ under swap or rotation",
                        ));
                    }
                }
            }
        }
        "hooks" => {
            params = json!({"identity": identity});
            let mut checked = 0;
            let mut bad = Vec::new();
            for k in 1..=4 {
                for level in 1..=6 {
                    for parts in compositions(k, level) {
                        let c = Profile::new(parts).unwrap();
                        checked += 1;
                        if c.borodin_exponents() != c.hook_exponents() {
                            bad.push(c.to_string());
                        }
                    }
                }
            }
            items.push(if bad.is_empty() {
                VerifyItem::pass(format!("borodin = hooks ({checked} compositions)"))
            } else {
                VerifyItem::fail("borodin = hooks", format!("disagree for {bad:?}"))
            });
        }
        "oracle" => {
            let max_part = 4;
            let max_size = order.map_or(12, |n| n.saturating_sub(1).max(1));
            params = json!({"identity": identity, "max_part": max_part, "max_size": max_size});
            for parts in [vec![2, 1], vec![3, 0], vec![1, 1, 0], vec![2, 1, 1], vec![3, 1, 1]] {
                let c = Profile::new(parts).unwrap();
                let brute = oracle::oracle_f(&c, max_part, max_size)?;
                let solved = solver::solve_f(&c, max_part + 1, max_size + 1);
                items.push(VerifyItem::from_zq(format!("oracle = solver ({c})"), &brute, &solved));
            }
        }
        other => return Err(qcyl::Error::UnknownName(other.to_string())),
    }
    Ok((items, params))
}
