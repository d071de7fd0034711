//! Command-line front end. The `ltrans` binary only forwards its arguments to
//! [`main_with_args`].
//!
//! Exit status: 0 for a computed answer (including "not transitive"), 1 for
//! malformed input, 2 for an exhausted cap or budget, 3 for an internal
//! inconsistency such as two methods disagreeing.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::characters::{character_table, DEFAULT_TABLE_CAP};
use crate::constructions::{
    agl_halved, classical_group, product_construct, BijectionAssignment, GroupKind, DEFAULT_GROUP_CAP,
};
use crate::error::{Error, Result};
use crate::io::{read_bijection_file, read_design_file, read_perm_file, write_perm_file};
use crate::partitions::{partitions_of, Partition};
use crate::perm::{alternating_group, closure, symmetric_group, PermSet, Permutation};
use crate::scheme::{coeffs_m, coeffs_n, krein_by_characters, SchemeContext, DEFAULT_MATRIX_CAP};
use crate::transitivity::{
    check_character, check_group_orbit, check_oracle, class_counts, divisibility_check, dual_from_counts,
    format_rational, inner_from_counts, orbit_count, profile, Method, TransitivityVerdict, Witness,
    DEFAULT_GROUP_CHECK_BUDGET, DEFAULT_ORACLE_BUDGET,
};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "ltrans", version, about = "Exact lambda-transitivity of permutation sets")]
pub struct RunConfig {
    /// Emit deterministic JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for commands that sample at random.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Largest degree for n!-by-n! scheme matrices (at most 6).
    #[arg(long, global = true, default_value_t = DEFAULT_MATRIX_CAP)]
    pub max_n: usize,
    /// Largest group the closure may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CLOSURE_CAP)]
    pub closure_cap: usize,
    /// Bound on tabloids times set size for the direct oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BUDGET)]
    pub oracle_budget: u128,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Oracle,
    Character,
    Orbit,
    /// Oracle and character; any disagreement is reported as a bug.
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a set is lambda-transitive.
    Check {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        perms: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Character)]
        method: MethodArg,
    },
    /// All shapes for which a set is transitive, and the minimal ones.
    Profile {
        #[arg(long)]
        perms: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Character)]
        method: MethodArg,
    },
    /// Inner and dual distributions over the conjugacy classes.
    Dist {
        #[arg(long)]
        perms: PathBuf,
    },
    /// The character table of S_n.
    Chartable {
        #[arg(long)]
        n: usize,
    },
    /// Build a permutation set and print it in the permutation file format.
    #[command(subcommand)]
    Construct(Construct),
    /// The group generated by a set of permutations.
    Closure(ClosureArgs),
    /// Number of orbits of a generated group on tabloids.
    Orbits {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        lambda: Partition,
    },
    /// Whether a set of the given size can be lambda-transitive at all.
    Divisibility {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        size: BigUint,
        #[arg(long)]
        lambda: Partition,
    },
    /// Split basis, idempotents or Krein parameters of the S_n scheme.
    Scheme(SchemeArgs),
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Glue a t-design with t-transitive sets on a block and its complement.
    Design {
        #[arg(long)]
        design: PathBuf,
        /// `sym:K`, `alt:K` or `file:PATH`.
        #[arg(long)]
        d1: String,
        #[arg(long)]
        d2: String,
        /// Per-block orderings; unlisted blocks use ascending order.
        #[arg(long)]
        bij: Option<PathBuf>,
    },
    /// Affine maps `x -> ax + b` with `a` in a half-set of GF(q)*.
    AglHalved {
        #[arg(long)]
        q: u32,
        /// Comma-separated canonical indices of the half-set.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u32>>,
    },
    /// A named group in its natural action.
    Group {
        #[arg(long)]
        kind: GroupKind,
        /// Field order (affine and projective kinds).
        #[arg(long)]
        q: Option<u32>,
        /// Degree (sym, alt, cyclic).
        #[arg(long)]
        n: Option<u32>,
    },
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    /// Generator file in the permutation file format.
    #[arg(long, conflicts_with = "random")]
    pub gens: Option<PathBuf>,
    /// Instead of a file, this many seeded random generators of S_n.
    #[arg(long, requires = "n")]
    pub random: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SchemeArgs {
    #[arg(long)]
    pub n: usize,
    /// Coefficients of the split basis in both bases (the default).
    #[arg(long, group = "what")]
    pub split_basis: bool,
    /// Krein parameters from explicit matrices.
    #[arg(long, group = "what")]
    pub krein: bool,
    /// Primitive idempotents, verified.
    #[arg(long, group = "what")]
    pub idempotents: bool,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status. Reports go to `out`, diagnostics to `err`.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return code;
        }
    };
    match run(&config) {
        Ok(report) => {
            let _ = out.write_all(report.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs one command and returns its report.
pub fn run(config: &RunConfig) -> Result<String> {
    let report = match &config.command {
        Command::Check { lambda, perms, method } => cmd_check(config, lambda, perms, *method)?,
        Command::Profile { perms, method } => cmd_profile(config, perms, *method)?,
        Command::Dist { perms } => cmd_dist(config, perms)?,
        Command::Chartable { n } => cmd_chartable(config, *n)?,
        Command::Construct(c) => cmd_construct(config, c)?,
        Command::Closure(c) => cmd_closure(config, c)?,
        Command::Orbits { gens, lambda } => cmd_orbits(config, gens, lambda)?,
        Command::Divisibility { n, size, lambda } => cmd_divisibility(config, *n, size, lambda)?,
        Command::Scheme(s) => cmd_scheme(config, s)?,
    };
    Ok(report)
}

fn emit(config: &RunConfig, value: Value, text: String) -> String {
    if config.json {
        let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn rational(q: &BigRational) -> Value {
    Value::String(format_rational(q))
}

fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::TabloidPair { from, to, count } => json!({
            "kind": "tabloid_pair",
            "from": from.to_string(),
            "to": to.to_string(),
            "count": count,
        }),
        Witness::DualEntry { mu, value } => json!({
            "kind": "dual_entry",
            "mu": parts(mu),
            "b": rational(value),
        }),
        Witness::Orbit { size, total } => json!({
            "kind": "orbit",
            "size": size,
            "total": total.to_string(),
        }),
    }
}

fn verdict_json(v: &TransitivityVerdict, method: &str) -> Value {
    json!({
        "lambda": parts(&v.lambda),
        "transitive": v.transitive,
        "r": rational(&v.r),
        "method": method,
        "witness": v.witness.as_ref().map_or(Value::Null, witness_json),
    })
}

fn verdict_text(v: &TransitivityVerdict) -> String {
    match &v.witness {
        None => format!("transitive, r={}", format_rational(&v.r)),
        Some(w) => format!("not transitive: {w}"),
    }
}

fn single(config: &RunConfig, d: &PermSet, lambda: &Partition, method: Method) -> Result<TransitivityVerdict> {
    match method {
        Method::Oracle => check_oracle(d, lambda, config.oracle_budget),
        Method::Character => check_character(d, lambda),
        Method::Orbit => check_group_orbit(d, lambda, DEFAULT_GROUP_CHECK_BUDGET),
    }
}

fn disagreement(d: &PermSet, lambda: &Partition, a: &TransitivityVerdict, b: &TransitivityVerdict) -> Error {
    Error::internal(format!(
        "methods disagree on lambda = {lambda}\noracle: {}\ncharacter: {}\nset:\n{}",
        verdict_text(a),
        verdict_text(b),
        write_perm_file(d, None)
    ))
}

fn cmd_check(config: &RunConfig, lambda: &Partition, perms: &Path, method: MethodArg) -> Result<String> {
    let d = read_perm_file(perms)?;
    let single_method = match method {
        MethodArg::Oracle => Method::Oracle,
        MethodArg::Character => Method::Character,
        MethodArg::Orbit => Method::Orbit,
        MethodArg::Both => {
            let a = single(config, &d, lambda, Method::Oracle)?;
            let b = single(config, &d, lambda, Method::Character)?;
            if a.transitive != b.transitive {
                return Err(disagreement(&d, lambda, &a, &b));
            }
            let mut value = verdict_json(&b, "both");
            if let Some(w) = &a.witness {
                value["oracle_witness"] = witness_json(w);
            }
            let text = format!("{}, methods agree\n", verdict_text(&b));
            return Ok(emit(config, value, text));
        }
    };
    let v = single(config, &d, lambda, single_method)?;
    let text = format!("{} ({})\n", verdict_text(&v), v.method);
    Ok(emit(config, verdict_json(&v, v.method.as_str()), text))
}

fn shape_list(ps: &[Partition]) -> String {
    ps.iter().map(Partition::to_string).collect::<Vec<_>>().join("; ")
}

fn cmd_profile(config: &RunConfig, perms: &Path, method: MethodArg) -> Result<String> {
    let d = read_perm_file(perms)?;
    let run_one = |m: Method| profile(&d, m, config.oracle_budget, DEFAULT_GROUP_CHECK_BUDGET);
    let (p, label) = match method {
        MethodArg::Oracle => (run_one(Method::Oracle)?, "oracle"),
        MethodArg::Character => (run_one(Method::Character)?, "character"),
        MethodArg::Orbit => (run_one(Method::Orbit)?, "orbit"),
        MethodArg::Both => {
            let a = run_one(Method::Oracle)?;
            let b = run_one(Method::Character)?;
            if a != b {
                return Err(Error::internal(format!(
                    "methods disagree on the profile\noracle: {}\ncharacter: {}\nset:\n{}",
                    shape_list(&a.transitive),
                    shape_list(&b.transitive),
                    write_perm_file(&d, None)
                )));
            }
            (b, "both")
        }
    };
    let value = json!({
        "n": d.degree(),
        "size": d.len(),
        "method": label,
        "transitive": p.transitive.iter().map(parts).collect::<Vec<_>>(),
        "minimal": p.minimal.iter().map(parts).collect::<Vec<_>>(),
    });
    let text = format!(
        "n = {}, |D| = {}\ntransitive: {}\nminimal: {}\n",
        d.degree(),
        d.len(),
        if p.transitive.is_empty() { "none".into() } else { shape_list(&p.transitive) },
        if p.minimal.is_empty() { "none".into() } else { shape_list(&p.minimal) },
    );
    Ok(emit(config, value, text))
}

fn cmd_dist(config: &RunConfig, perms: &Path) -> Result<String> {
    let d = read_perm_file(perms)?;
    let counts = class_counts(&d)?;
    let inner = inner_from_counts(&counts)?;
    let dual = dual_from_counts(&counts)?;
    let as_map = |index: &[Partition], values: &[BigRational]| -> Value {
        let mut m = Map::new();
        for (p, v) in index.iter().zip(values) {
            m.insert(p.to_string(), rational(v));
        }
        Value::Object(m)
    };
    let value = json!({
        "n": d.degree(),
        "size": d.len(),
        "inner": as_map(&inner.index, &inner.values),
        "dual": as_map(&dual.index, &dual.values),
    });
    let width = inner.index.iter().map(|p| p.to_string().len()).max().unwrap_or(0).max(5);
    let mut text = format!("n = {}, |D| = {}\n{:<width$}  {:>12}  {:>12}\n", d.degree(), d.len(), "class", "a", "b");
    for ((p, a), b) in inner.index.iter().zip(&inner.values).zip(&dual.values) {
        text.push_str(&format!(
            "{:<width$}  {:>12}  {:>12}\n",
            p.to_string(),
            format_rational(a),
            format_rational(b)
        ));
    }
    Ok(emit(config, value, text))
}

fn cmd_chartable(config: &RunConfig, n: usize) -> Result<String> {
    let t = character_table(n, DEFAULT_TABLE_CAP)?;
    t.verify()?;
    let labels: Vec<String> = t.partitions().iter().map(Partition::to_string).collect();
    let value = json!({
        "n": n,
        "partitions": labels,
        "values": t.values().iter().map(|row| row.iter().map(|v| json!(v.to_string().parse::<i64>().ok())).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    let label_w = labels.iter().map(String::len).max().unwrap_or(1);
    let cell_w = t
        .values()
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .chain(labels.iter().map(String::len))
        .max()
        .unwrap_or(1);
    let mut text = format!("{:label_w$}", "");
    for l in &labels {
        text.push_str(&format!(" {l:>cell_w$}"));
    }
    text.push('\n');
    for (l, row) in labels.iter().zip(t.values()) {
        text.push_str(&format!("{l:<label_w$}"));
        for v in row {
            text.push_str(&format!(" {:>cell_w$}", v.to_string()));
        }
        text.push('\n');
    }
    Ok(emit(config, value, text))
}

/// Resolves `sym:K`, `alt:K` or `file:PATH`.
pub fn resolve_component(spec: &str) -> Result<PermSet> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("component {spec:?} must be sym:K, alt:K or file:PATH")))?;
    let degree = || -> Result<usize> {
        arg.trim()
            .parse()
            .ok()
            .filter(|&k| (1..=10).contains(&k))
            .ok_or_else(|| Error::invalid(format!("degree in {spec:?} must be an integer in 1..=10")))
    };
    match kind {
        "sym" => Ok(symmetric_group(degree()?)),
        "alt" => Ok(alternating_group(degree()?)),
        "file" => read_perm_file(Path::new(arg)),
        _ => Err(Error::invalid(format!("unknown component kind {kind:?}"))),
    }
}

fn perm_set_report(config: &RunConfig, set: &PermSet, comment: &str) -> String {
    let value = json!({
        "n": set.degree(),
        "size": set.len(),
        "elements": set.iter().map(Permutation::to_string).collect::<Vec<_>>(),
    });
    emit(config, value, write_perm_file(set, Some(comment)))
}

fn cmd_construct(config: &RunConfig, c: &Construct) -> Result<String> {
    match c {
        Construct::Design { design, d1, d2, bij } => {
            let design = read_design_file(design)?;
            let (d1, d2) = (resolve_component(d1)?, resolve_component(d2)?);
            let bij = match bij {
                Some(path) => read_bijection_file(path, &design)?,
                None => BijectionAssignment::ascending(&design),
            };
            let set = product_construct(&design, &d1, &d2, &bij)?;
            let comment = format!(
                "product of a {}-design with {} blocks, |D1| = {}, |D2| = {}",
                design.strength(),
                design.blocks().len(),
                d1.len(),
                d2.len()
            );
            Ok(perm_set_report(config, &set, &comment))
        }
        Construct::AglHalved { q, set } => {
            let d = agl_halved(*q, set.as_deref())?;
            Ok(perm_set_report(config, &d, &format!("halved affine set over GF({q})")))
        }
        Construct::Group { kind, q, n } => {
            let param = if kind.takes_field() {
                q.ok_or_else(|| Error::invalid(format!("{kind} needs --q")))?
            } else {
                n.or(*q).ok_or_else(|| Error::invalid(format!("{kind} needs --n")))?
            };
            let g = classical_group(*kind, param, DEFAULT_GROUP_CAP.max(config.closure_cap))?;
            Ok(perm_set_report(config, &g, &format!("{kind}({param})")))
        }
    }
}

/// `count` uniformly random elements of `S_n` from a seeded generator.
pub fn random_permutations(n: usize, count: usize, seed: u64) -> Result<Vec<Permutation>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut images: Vec<usize> = (1..=n).collect();
            for i in (1..n).rev() {
                images.swap(i, rng.gen_range(0..=i));
            }
            Permutation::from_images(&images)
        })
        .collect()
}

fn cmd_closure(config: &RunConfig, c: &ClosureArgs) -> Result<String> {
    let gens: Vec<Permutation> = match (&c.gens, c.random, c.n) {
        (Some(path), _, _) => read_perm_file(path)?.elements().to_vec(),
        (None, Some(k), Some(n)) => random_permutations(n, k, config.seed)?,
        _ => return Err(Error::invalid("closure needs --gens FILE or --random K --n N")),
    };
    let g = closure(&gens, config.closure_cap)?;
    let comment = format!("group of order {} generated by {} permutations", g.len(), gens.len());
    Ok(perm_set_report(config, &g, &comment))
}

fn cmd_orbits(config: &RunConfig, gens: &Path, lambda: &Partition) -> Result<String> {
    let gens = read_perm_file(gens)?;
    let g = closure(gens.elements(), config.closure_cap)?;
    let k = orbit_count(&g, lambda, u128::MAX)?;
    let value = json!({
        "lambda": parts(lambda),
        "group_order": g.len(),
        "orbits": k.to_string(),
    });
    let text = format!("group of order {}, {} orbits on tabloids of shape {lambda}\n", g.len(), k);
    Ok(emit(config, value, text))
}

fn cmd_divisibility(config: &RunConfig, n: usize, size: &BigUint, lambda: &Partition) -> Result<String> {
    if lambda.weight() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            found: lambda.weight(),
        });
    }
    let cert = divisibility_check(size, lambda);
    let value = json!({
        "lambda": parts(lambda),
        "size": size.to_string(),
        "possible": cert.holds,
        "failing": cert.failing.iter().map(|(mu, m)| json!({"mu": parts(mu), "multinomial": m.to_string()})).collect::<Vec<_>>(),
    });
    let text = match cert.failing.first() {
        None => format!("possible: every multinomial above {lambda} divides {size}\n"),
        Some((_, m)) => format!("impossible: {m} does not divide {size}\n"),
    };
    Ok(emit(config, value, text))
}

fn rational_map(entries: &[(Partition, BigRational)]) -> Value {
    let mut m = Map::new();
    for (p, v) in entries {
        m.insert(p.to_string(), rational(v));
    }
    Value::Object(m)
}

fn cmd_scheme(config: &RunConfig, s: &SchemeArgs) -> Result<String> {
    let n = s.n;
    if n == 0 {
        return Err(Error::invalid("scheme degree must be at least 1"));
    }
    if s.krein || s.idempotents {
        let ctx = SchemeContext::new(n, config.max_n)?;
        let es = ctx.idempotents()?;
        if s.idempotents {
            let mut rows = Vec::new();
            let mut text = format!("n = {n}: {} primitive idempotents, verified\n", es.len());
            for (mu, e) in ctx.partitions().iter().zip(&es) {
                let values: Vec<(Partition, BigRational)> = ctx
                    .class_coordinates(e)?
                    .into_iter()
                    .zip(ctx.partitions().iter().cloned())
                    .map(|(v, p)| (p, v))
                    .collect();
                text.push_str(&format!("E_({mu}): trace {}\n", format_rational(&e.trace())));
                rows.push(json!({
                    "mu": mu.to_string(),
                    "trace": rational(&e.trace()),
                    "class_values": rational_map(&values),
                }));
            }
            return Ok(emit(config, json!({"n": n, "idempotents": rows}), text));
        }
        let mut tensor = Vec::new();
        let mut text = format!("n = {n}: Krein parameters q^nu (nonzero entries)\n");
        for la in ctx.partitions() {
            for mu in ctx.partitions() {
                let q = ctx.krein(la, mu, &es)?;
                if q != krein_by_characters(ctx.table(), la, mu)? {
                    return Err(Error::internal(format!("Krein parameters at {la}, {mu} differ between methods")));
                }
                let nonzero: Vec<String> = q
                    .iter()
                    .filter(|(_, v)| *v != BigRational::from_integer(0.into()))
                    .map(|(nu, v)| format!("{nu}: {}", format_rational(v)))
                    .collect();
                text.push_str(&format!("({la}) o ({mu}) -> {}\n", nonzero.join(", ")));
                tensor.push(json!({"lambda": la.to_string(), "mu": mu.to_string(), "q": rational_map(&q)}));
            }
        }
        return Ok(emit(config, json!({"n": n, "krein": tensor}), text));
    }

    let mut rows = Vec::new();
    let mut text = format!("n = {n}: split basis C_lambda\n");
    let matrices = if n <= config.max_n.min(crate::scheme::HARD_MATRIX_CAP) {
        let ctx = SchemeContext::new(n, config.max_n)?;
        let es = ctx.idempotents()?;
        Some((ctx, es))
    } else {
        None
    };
    for la in partitions_of(n) {
        let m = coeffs_m(n, &la)?;
        let nn = coeffs_n(n, &la)?;
        if let Some((ctx, es)) = &matrices {
            ctx.verify_split_expansion(&la, es)?;
        }
        let m_nonzero: Vec<String> = m
            .iter()
            .filter(|(_, v)| *v != BigUint::from(0u32))
            .map(|(a, v)| format!("{a}: {v}"))
            .collect();
        let n_nonzero: Vec<String> = nn
            .iter()
            .filter(|(_, v)| *v != BigRational::from_integer(0.into()))
            .map(|(mu, v)| format!("{mu}: {}", format_rational(v)))
            .collect();
        text.push_str(&format!(
            "C_({la})\n  m: {}\n  n: {}\n",
            m_nonzero.join(", "),
            n_nonzero.join(", ")
        ));
        let mut mj = Map::new();
        for (a, v) in &m {
            mj.insert(a.to_string(), Value::String(v.to_string()));
        }
        rows.push(json!({"lambda": la.to_string(), "m": Value::Object(mj), "n": rational_map(&nn)}));
    }
    if matrices.is_some() {
        text.push_str("matrix cross-check passed\n");
    }
    Ok(emit(
        config,
        json!({"n": n, "matrix_checked": matrices.is_some(), "split_basis": rows}),
        text,
    ))
}
