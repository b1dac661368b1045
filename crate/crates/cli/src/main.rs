//! Command-line front end: one verb per computation, exit codes
//! 0 pass, 1 mismatch, 2 usage error, 3 resource cutoff.

mod config;
mod params;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pcaxial::algebra::{universal, AlgebraTable, ParameterPoint};
use pcaxial::group::{self, axis_involutions, bfs_closure, matrix_order, Analysis};
use pcaxial::ideals;
use pcaxial::linalg::{char_poly, min_poly, ExactMatrix};
use pcaxial::poly::{Param, ParamPoly};
use pcaxial::repro::{self, ReproOptions};
use pcaxial::roots::{self, TauWord};
use pcaxial::scalars::{Domain, Field, Ring, Scalar};
use pcaxial::sweep::{self, SweepOptions};
use serde_json::json;

use params::Params;

#[derive(Debug)]
pub struct UsageError(pub String);

enum Failure {
    Usage(String),
    Mismatch,
    Cutoff,
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

macro_rules! usage {
    ($($t:tt)*) => { Failure::Usage(format!($($t)*)) };
}

fn wrap<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Out {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "pcaxial", version, about = "Exact computations in 3-generated axial pseudo-composition algebras")]
struct Cli {
    /// Scalar field: Q, Fp:p or NF:f(t)
    #[arg(long, global = true)]
    field: Option<String>,
    /// alpha = (a, b); rational, [c0,c1,...] in a number field, or prop1:k=K:root=R
    #[arg(long, global = true, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// beta = (b, c)
    #[arg(long, global = true, allow_hyphen_values = true)]
    beta: Option<String>,
    /// gamma = (a, c)
    #[arg(long, global = true, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// psi = (b, ac)
    #[arg(long, global = true, allow_hyphen_values = true)]
    psi: Option<String>,
    /// Element cutoff for group enumeration
    #[arg(long, global = true)]
    cutoff: Option<usize>,
    #[arg(long, global = true, value_enum)]
    out: Option<Out>,
    /// Worker threads for sweeps (0 = all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// key=value file supplying defaults for the flags above
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplication table and Gram matrix (symbolic where parameters are unset)
    Table,
    /// Miyamoto involution of an axis: a, b, c or a basis label such as b(ac)
    Tau { axis: String },
    /// Order of a product word: ab, bc, ac, abc (= tau_a tau_b^{tau_c}) or ab2 (subalgebra <a,b,ab>)
    Order {
        word: String,
        #[arg(long, default_value_t = pcaxial::linalg::DEFAULT_ORDER_CUTOFF)]
        max: u64,
    },
    /// Characteristic polynomial of a product word
    Charpoly { word: String },
    /// Minimal polynomial of a product word (over Q(psi) when only psi is unset)
    Minpoly { word: String },
    /// Parameter values giving a product order dividing k
    SolveOrder {
        k: u64,
        /// ab2, ab or abc
        #[arg(long, default_value = "ab2")]
        word: String,
    },
    /// Enumerate <tau_a, tau_b, tau_c> (plus tau of extra axes)
    Group {
        /// Extra axes given by basis label, e.g. b(ac)
        #[arg(long)]
        axis: Vec<String>,
    },
    /// Ideal generated by seeds or by fixed-point defects of tau_a tau_b
    Ideal(IdealArgs),
    /// Quotient by the ideal described as for `ideal`
    Quotient(IdealArgs),
    /// Exhaustive sweep over F_p (from --field), fixed flags filter the grid
    Sweep {
        /// Only the 2-generated order table over alpha
        #[arg(long)]
        pair: bool,
    },
    /// Regenerate a printed claim and compare with golden values (or `all`)
    Repro {
        item: String,
        /// Enable the large q = 7 enumeration
        #[arg(long)]
        extended: bool,
    },
}

#[derive(clap::Args, Debug)]
struct IdealArgs {
    /// Seed vector as comma-separated coordinates, or a basis label
    #[arg(long)]
    seed: Vec<String>,
    /// Add the vectors (tau_a tau_b)^k x_i - x_i
    #[arg(long)]
    defect: Option<u64>,
    /// Use the radical of the form
    #[arg(long)]
    radical: bool,
}

struct Ctx {
    params: Params,
    cutoff: Option<usize>,
    out: Out,
    jobs: usize,
    extended: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Cutoff) => ExitCode::from(3),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let conf = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage!("--config {path}: {e}"))?;
            config::parse(&text)?
        }
        None => Default::default(),
    };
    let pick = |flag: &Option<String>, key: &str| flag.clone().or_else(|| conf.get(key).cloned());
    let field = pick(&cli.field, "field");
    let raw = [pick(&cli.alpha, "alpha"), pick(&cli.beta, "beta"), pick(&cli.gamma, "gamma"), pick(&cli.psi, "psi")];
    let params = params::resolve(field.as_deref(), [0, 1, 2, 3].map(|i| raw[i].as_deref()))?;
    let num = |flag: Option<usize>, key: &str| -> Result<Option<usize>, Failure> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => conf.get(key).map(|v| v.parse().map_err(|_| usage!("config {key}: not a number"))).transpose(),
        }
    };
    let out = match cli.out {
        Some(o) => o,
        None => match conf.get("out") {
            Some(v) => Out::from_str(v, true).map_err(|e| usage!("config out: {e}"))?,
            None => Out::Text,
        },
    };
    let ctx = Ctx {
        params,
        cutoff: num(cli.cutoff, "cutoff")?,
        out,
        jobs: num(cli.jobs, "jobs")?.unwrap_or(0),
        extended: conf.get("extended").is_some_and(|v| v == "1" || v == "true"),
    };
    match cli.command {
        Command::Table => cmd_table(&ctx),
        Command::Tau { axis } => cmd_tau(&ctx, &axis),
        Command::Order { word, max } => cmd_order(&ctx, &word, max),
        Command::Charpoly { word } => cmd_charpoly(&ctx, &word),
        Command::Minpoly { word } => cmd_minpoly(&ctx, &word),
        Command::SolveOrder { k, word } => cmd_solve(&ctx, k, &word),
        Command::Group { axis } => cmd_group(&ctx, &axis),
        Command::Ideal(a) => cmd_ideal(&ctx, &a, false),
        Command::Quotient(a) => cmd_ideal(&ctx, &a, true),
        Command::Sweep { pair } => cmd_sweep(&ctx, pair),
        Command::Repro { item, extended } => cmd_repro(&ctx, &item, extended || ctx.extended),
    }
}

/// Table over the parameter ring when every value is rational or unset.
fn symbolic_table(p: &Params) -> Option<AlgebraTable<ParamPoly>> {
    if p.all_given() {
        return None;
    }
    let fixed = p.rational_values()?;
    Some(universal().substitute(&fixed))
}

fn concrete_table(p: &Params) -> Result<AlgebraTable<Scalar>, Failure> {
    let values = p.require_all()?;
    let point = ParameterPoint::new(p.domain.clone(), values).map_err(wrap)?;
    point.specialize(universal()).map_err(wrap)
}

fn matrix_json<T: Ring>(m: &ExactMatrix<T>) -> serde_json::Value {
    json!(m.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn print_matrix<T: Ring>(ctx: &Ctx, m: &ExactMatrix<T>) -> Result<(), Failure> {
    match ctx.out {
        Out::Text => print!("{}", m.dump()),
        Out::Csv => {
            for r in m.rows() {
                println!("{}", r.iter().map(|x| format!("\"{x}\"")).collect::<Vec<_>>().join(","));
            }
        }
        Out::Json => println!("{}", matrix_json(m)),
    }
    Ok(())
}

fn table_json<T: Ring>(t: &AlgebraTable<T>) -> serde_json::Value {
    let n = t.dim();
    let products: Vec<Vec<Vec<String>>> = (0..n)
        .map(|i| (0..n).map(|j| t.product_of_basis(i, j).iter().map(|x| x.to_string()).collect()).collect())
        .collect();
    json!({ "labels": t.labels(), "products": products, "gram": matrix_json(t.gram()) })
}

fn cmd_table(ctx: &Ctx) -> Result<(), Failure> {
    let (text, js) = match symbolic_table(&ctx.params) {
        Some(t) => (t.dump(), table_json(&t)),
        None => {
            let t = concrete_table(&ctx.params)?;
            (t.dump(), table_json(&t))
        }
    };
    match ctx.out {
        Out::Json => println!("{js}"),
        Out::Text => print!("{text}"),
        Out::Csv => return Err(usage!("table has no CSV form; use --out text or json")),
    }
    Ok(())
}

fn axis_index(labels: &[String], axis: &str) -> Result<usize, Failure> {
    labels.iter().position(|l| l == axis).ok_or_else(|| usage!("unknown basis label {axis:?}; labels are {}", labels.join(", ")))
}

fn cmd_tau(ctx: &Ctx, axis: &str) -> Result<(), Failure> {
    match symbolic_table(&ctx.params) {
        Some(t) => {
            let i = axis_index(t.labels(), axis)?;
            print_matrix(ctx, &t.miyamoto_basis(i).map_err(wrap)?)
        }
        None => {
            let t = concrete_table(&ctx.params)?;
            let i = axis_index(t.labels(), axis)?;
            print_matrix(ctx, &t.miyamoto_basis(i).map_err(wrap)?)
        }
    }
}

fn word_matrix<T: Ring>(t: &AlgebraTable<T>, word: TauWord) -> Result<ExactMatrix<T>, Failure> {
    let tau = |i| t.miyamoto_basis(i).map_err(wrap);
    Ok(match word {
        TauWord::TwoGenerated => {
            let s = t.subtable(&[0, 1, 3]).map_err(wrap)?;
            s.miyamoto_basis(0).map_err(wrap)?.mul(&s.miyamoto_basis(1).map_err(wrap)?)
        }
        TauWord::UniversalAB => tau(0)?.mul(&tau(1)?),
        TauWord::ConjugateProduct => tau(0)?.mul(&tau(2)?).mul(&tau(1)?).mul(&tau(2)?),
    })
}

/// Product words, including the extra `bc` and `ac`.
fn concrete_word(t: &AlgebraTable<Scalar>, word: &str) -> Result<ExactMatrix<Scalar>, Failure> {
    let tau = |i| t.miyamoto_basis(i).map_err(wrap);
    match word {
        "bc" => Ok(tau(1)?.mul(&tau(2)?)),
        "ac" => Ok(tau(0)?.mul(&tau(2)?)),
        w => word_matrix(t, w.parse().map_err(|_| usage!("unknown word {w:?}; use ab2, ab, bc, ac or abc"))?),
    }
}

fn cmd_order(ctx: &Ctx, word: &str, max: u64) -> Result<(), Failure> {
    let t = if word == "ab2" {
        let point = ParameterPoint::new(ctx.params.domain.clone(), ctx.params.zero_filled()).map_err(wrap)?;
        point.specialize(universal()).map_err(wrap)?
    } else {
        concrete_table(&ctx.params)?
    };
    let m = concrete_word(&t, word)?;
    let o = matrix_order(&m, max);
    match ctx.out {
        Out::Json => println!("{}", json!({ "word": word, "order": o.order(), "outcome": o.to_string() })),
        Out::Csv => println!("word,order\n{word},{o}"),
        Out::Text => println!("{o}"),
    }
    if o.order().is_none() {
        return Err(Failure::Cutoff);
    }
    Ok(())
}

fn print_poly_coeffs(ctx: &Ctx, coeffs: &[String], text: String) -> Result<(), Failure> {
    match ctx.out {
        Out::Text => println!("{text}"),
        Out::Json => println!("{}", json!({ "coefficients": coeffs, "polynomial": text })),
        Out::Csv => {
            println!("degree,coefficient");
            for (k, c) in coeffs.iter().enumerate() {
                println!("{k},\"{c}\"");
            }
        }
    }
    Ok(())
}

fn poly_text<T: Ring>(coeffs: &[T]) -> (Vec<String>, String) {
    let strs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    let terms: Vec<String> = strs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| c.as_str() != "0")
        .map(|(k, c)| match k {
            0 => format!("({c})"),
            1 => format!("({c})*x"),
            _ => format!("({c})*x^{k}"),
        })
        .collect();
    (strs, terms.join(" + "))
}

fn cmd_charpoly(ctx: &Ctx, word: &str) -> Result<(), Failure> {
    let w: TauWord = word.parse().map_err(|_| usage!("unknown word {word:?}; use ab2, ab or abc"))?;
    let (c, t) = match symbolic_table(&ctx.params) {
        Some(t) => poly_text(char_poly(&word_matrix(&t, w)?).coeffs()),
        None => {
            let t = concrete_table(&ctx.params)?;
            poly_text(char_poly(&word_matrix(&t, w)?).coeffs())
        }
    };
    print_poly_coeffs(ctx, &c, t)
}

fn cmd_minpoly(ctx: &Ctx, word: &str) -> Result<(), Failure> {
    let w: TauWord = word.parse().map_err(|_| usage!("unknown word {word:?}; use ab2, ab or abc"))?;
    if ctx.params.all_given() {
        let t = concrete_table(&ctx.params)?;
        let m = word_matrix(&t, w)?;
        let (c, s) = poly_text(min_poly(&m).coeffs());
        return print_poly_coeffs(ctx, &c, s);
    }
    let fixed = ctx.params.rational_values().ok_or_else(|| usage!("symbolic minpoly needs rational parameters"))?;
    let unset: Vec<Param> = Param::ALL.iter().copied().filter(|p| fixed[p.index()].is_none()).collect();
    let [var] = unset.as_slice() else {
        return Err(usage!("minpoly needs all parameters, or all but one"));
    };
    let m = w.matrix(&fixed).map_err(wrap)?;
    let mf = m.map(|x| {
        pcaxial::poly::RatFunc::from_poly(x.to_univariate(*var).expect("one parameter left"), var.name())
    });
    let (c, s) = poly_text(min_poly(&mf).coeffs());
    print_poly_coeffs(ctx, &c, s)
}

fn cmd_solve(ctx: &Ctx, k: u64, word: &str) -> Result<(), Failure> {
    let w: TauWord = word.parse().map_err(|_| usage!("unknown word {word:?}; use ab2, ab or abc"))?;
    let sol = match w {
        TauWord::ConjugateProduct => {
            let angle = match &ctx.params.values[0] {
                Some(Scalar::Q(q)) => q.clone(),
                None => roots::default_angle(),
                Some(_) => return Err(usage!("solve-order abc takes a rational --alpha as the common angle")),
            };
            roots::solve_order_3gen_conjugate(k, &angle)
        }
        _ => roots::solve_order(w, Param::Alpha, &[None, None, None, None], k),
    }
    .map_err(wrap)?;
    let rows = sol.rows();
    match ctx.out {
        Out::Json => println!("{}", serde_json::to_string(&rows).map_err(wrap)?),
        Out::Csv => {
            println!("target,minpoly,lower,upper,approx,verified_order");
            for r in &rows {
                println!("{},\"{}\",{},{},{},{}", r.target, r.minpoly, r.lower, r.upper, r.approx, r.verified_order);
            }
        }
        Out::Text => {
            println!("gcd: {}", sol.gcd.to_string_var(sol.param.name()));
            for r in &rows {
                println!("{} ~ {}  in [{}, {}]  order {}", r.minpoly, r.approx, r.lower, r.upper, r.verified_order);
            }
        }
    }
    Ok(())
}

fn cmd_group(ctx: &Ctx, extra: &[String]) -> Result<(), Failure> {
    let values = ctx.params.require_all()?;
    let point = ParameterPoint::new(ctx.params.domain.clone(), values).map_err(wrap)?;
    let mut gens = axis_involutions(&point).map_err(wrap)?;
    if !extra.is_empty() {
        let t = point.specialize(universal()).map_err(wrap)?;
        for a in extra {
            let i = axis_index(t.labels(), a)?;
            gens.push(t.miyamoto_basis(i).map_err(wrap)?);
        }
    }
    let cutoff = ctx.cutoff.unwrap_or(group::FULL_CUTOFF);
    let opts = Analysis { histogram_samples: 64, ..Analysis::default() };
    let report = bfs_closure(&gens, cutoff, &opts).map_err(wrap)?;
    match ctx.out {
        Out::Json => println!("{}", serde_json::to_string(&report).map_err(wrap)?),
        Out::Csv => {
            println!("domain,outcome,order,solvable,perfect,center_order");
            let o = |x: Option<bool>| x.map(|v| v.to_string()).unwrap_or_default();
            println!(
                "{},{},{},{},{},{}",
                report.domain,
                report.outcome(),
                report.order.map(|v| v.to_string()).unwrap_or_default(),
                o(report.solvable),
                o(report.perfect),
                report.center_order.map(|v| v.to_string()).unwrap_or_default()
            );
        }
        Out::Text => {
            println!("domain: {}", report.domain);
            println!("outcome: {}", report.outcome());
            if let Some(s) = report.solvable {
                println!("solvable: {s}");
            }
            if let Some(p) = report.perfect {
                println!("perfect: {p}");
            }
            if let Some(z) = report.center_order {
                println!("center order: {z}");
            }
            if !report.catalog.is_empty() {
                println!("catalog: {}", report.catalog.join(", "));
            }
            println!("layers: {:?}", report.layers);
        }
    }
    if report.order.is_none() {
        return Err(Failure::Cutoff);
    }
    Ok(())
}

fn parse_seed<F: Field>(t: &AlgebraTable<F>, domain: &Domain, s: &str, to_f: &dyn Fn(Scalar) -> F) -> Result<Vec<F>, Failure> {
    if let Some(i) = t.labels().iter().position(|l| l == s) {
        return Ok(t.basis(i));
    }
    let coords: Vec<&str> = s.split(',').collect();
    if coords.len() != t.dim() {
        return Err(usage!("seed {s:?} needs {} coordinates or a basis label", t.dim()));
    }
    coords.iter().map(|c| domain.parse_value(c).map(to_f).map_err(wrap)).collect()
}

fn cmd_ideal(ctx: &Ctx, args: &IdealArgs, quotient: bool) -> Result<(), Failure> {
    let t = concrete_table(&ctx.params)?;
    let mut seeds = Vec::new();
    for s in &args.seed {
        seeds.push(parse_seed(&t, &ctx.params.domain, s, &|x| x)?);
    }
    if let Some(k) = args.defect {
        let m = t.miyamoto_basis(0).map_err(wrap)?.mul(&t.miyamoto_basis(1).map_err(wrap)?);
        seeds.extend(ideals::fixed_point_defect(&t, &m, k).map_err(wrap)?);
    }
    if args.radical {
        seeds.extend(ideals::radical(&t).vectors().to_vec());
    }
    let ideal = ideals::ideal_closure(&t, &seeds);
    let vecs: Vec<Vec<String>> = ideal.vectors().iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
    if !quotient {
        match ctx.out {
            Out::Json => println!("{}", json!({ "dim": ideal.dim(), "basis": vecs })),
            Out::Csv => {
                for v in &vecs {
                    println!("{}", v.iter().map(|x| format!("\"{x}\"")).collect::<Vec<_>>().join(","));
                }
            }
            Out::Text => {
                println!("dim: {}", ideal.dim());
                for v in &vecs {
                    println!("[{}]", v.join(", "));
                }
            }
        }
        return Ok(());
    }
    let q = ideals::quotient(&t, &ideal).map_err(wrap)?;
    let m = t.miyamoto_basis(0).map_err(wrap)?.mul(&t.miyamoto_basis(1).map_err(wrap)?);
    let induced = q.induced(&m).ok().map(|x| matrix_order(&x, 10_000));
    let parent = format!("{} {:?}", ctx.params.domain, ctx.params.values.iter().map(|v| v.as_ref().map(|x| x.to_string())).collect::<Vec<_>>());
    match ctx.out {
        Out::Json => println!(
            "{}",
            json!({ "dim": q.table.dim(), "ideal_dim": ideal.dim(), "parent": parent,
                    "tau_ab_order": induced.map(|o| o.to_string()), "table": table_json(&q.table) })
        ),
        Out::Csv => return Err(usage!("quotient has no CSV form; use --out text or json")),
        Out::Text => {
            print!("{}", q.dump(&parent));
            if let Some(o) = induced {
                println!("tau_ab order on quotient: {o}");
            }
        }
    }
    Ok(())
}

fn cmd_sweep(ctx: &Ctx, pair: bool) -> Result<(), Failure> {
    let p = match &ctx.params.domain {
        Domain::PrimeField(p) => *p,
        _ => return Err(usage!("sweep needs --field Fp:p")),
    };
    if pair {
        let orders = sweep::sweep_two_generated(p).map_err(wrap)?;
        match ctx.out {
            Out::Json => println!("{}", json!(orders.iter().map(|o| o.to_string()).collect::<Vec<_>>())),
            _ => {
                println!("p,alpha,ord_ab");
                for (a, o) in orders.iter().enumerate() {
                    println!("{p},{a},{o}");
                }
            }
        }
        return Ok(());
    }
    let mut opts = SweepOptions::new(p, ctx.cutoff.unwrap_or(group::SWEEP_CUTOFF));
    opts.jobs = ctx.jobs;
    for (slot, v) in opts.fixed.iter_mut().zip(&ctx.params.values) {
        *slot = match v {
            Some(Scalar::Fp(x)) => Some(x.value()),
            _ => None,
        };
    }
    let records = sweep::sweep(&opts).map_err(wrap)?;
    match ctx.out {
        Out::Json => println!("{}", serde_json::to_string(&records).map_err(wrap)?),
        _ => print!("{}", sweep::to_csv(&records)),
    }
    Ok(())
}

fn cmd_repro(ctx: &Ctx, item: &str, extended: bool) -> Result<(), Failure> {
    let opts = ReproOptions { extended };
    let items: Vec<&str> = if item == "all" { repro::ITEMS.to_vec() } else { vec![item] };
    let mut pass = true;
    let mut reports = Vec::new();
    for it in items {
        let r = repro::repro(it, &opts).map_err(wrap)?;
        pass &= r.pass();
        if ctx.out == Out::Text {
            print!("{}", r.text());
        }
        reports.push(r);
    }
    match ctx.out {
        Out::Json => println!("{}", serde_json::to_string(&reports).map_err(wrap)?),
        Out::Csv => {
            println!("item,check,pass,detail");
            for r in &reports {
                for c in &r.checks {
                    println!("{},\"{}\",{},\"{}\"", r.item, c.name, c.pass, c.detail.replace('"', "'"));
                }
            }
        }
        Out::Text => {}
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
