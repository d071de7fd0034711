//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lambda_transitive::characters::{character_table, mn_character, DEFAULT_TABLE_CAP};
use lambda_transitive::cli::{main_with_args, DEFAULT_SEED};
use lambda_transitive::constructions::{
    agl_halved, classical_group, complete_blocks, fano_blocks, nu_identities_check, product_element, r_by_split,
    validate_design, BlockDesign, GroupKind, DEFAULT_GROUP_CAP,
};
use lambda_transitive::io::parse_perm_file;
use lambda_transitive::partitions::{dominates, factorial, kostka, partitions_of, refines};
use lambda_transitive::perm::{alternating_group, closure, parse_perm, symmetric_group};
use lambda_transitive::scheme::{coeffs_m, coeffs_n, krein_by_characters, QMatrix, SchemeContext};
use lambda_transitive::tabloids::{fixed_count_for_type, tabloids_of_shape, young_subgroup, YoungCoset};
use lambda_transitive::transitivity::{
    check_character, check_group_orbit, check_oracle, divisibility_check, dual_from_counts,
    group_class_distribution, orbit_count, pair_class_distribution, Witness, DEFAULT_ORACLE_BUDGET,
};
use lambda_transitive::{Partition, PermSet, Permutation};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ltrans").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

// 1 ------------------------------------------------------------------------

fn fano_construction() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let design = dir.path().join("fano.design");
    let bij = dir.path().join("fano.bij");
    let perms = dir.path().join("fano504.perms");
    let mut text = String::from("# Fano plane\nn 7 k 3\n");
    for b in fano_blocks() {
        text.push_str(&format!("{} {} {}\n", b[0], b[1], b[2]));
    }
    std::fs::write(&design, text).unwrap();
    std::fs::write(&bij, "3 4 6: 3 4 6 | 5 7 1 2\n").unwrap();

    let (code, out, err) = cli(&[
        "construct", "design", "--design", path_str(&design), "--d1", "sym:3", "--d2", "alt:4", "--bij", path_str(&bij),
    ]);
    ensure!(code == 0, "construct failed: {err}");
    let d = parse_perm_file(&out).map_err(|e| e.to_string())?;
    ensure!(d.len() == 504, "expected 504 elements, got {}", d.len());
    let worked = parse_perm("(14)(2365)", 7).unwrap();
    ensure!(d.contains(&worked), "(1 4)(2 3 6 5) missing from the construction");
    let direct = product_element(
        &[3, 4, 6],
        &[5, 7, 1, 2],
        &parse_perm("(1 2)", 3).unwrap(),
        &parse_perm("(1 3)(2 4)", 4).unwrap(),
    )
    .unwrap();
    ensure!(direct == worked, "element for (b, pi, sigma) is {direct}");
    std::fs::write(&perms, &out).unwrap();

    let (code, out, err) = cli(&["check", "--lambda", "5,1,1", "--perms", path_str(&perms), "--method", "both"]);
    ensure!(code == 0, "check failed: {err}");
    ensure!(out.trim() == "transitive, r=12, methods agree", "check printed {out:?}");

    let (code, out, err) = cli(&["construct", "design", "--design", path_str(&design), "--d1", "sym:3", "--d2", "alt:4"]);
    ensure!(code == 0, "construct with default bijections failed: {err}");
    let default = parse_perm_file(&out).unwrap();
    ensure!(default.len() == 504, "default bijections gave {} elements", default.len());
    let v = check_character(&default, &p("5,1,1")).unwrap();
    ensure!(v.transitive && v.r == int(12), "default-bijection set: {v:?}");
    Ok(())
}

// 2 ------------------------------------------------------------------------

fn halved_affine() -> Check {
    for q in [5u32, 7, 9, 11, 13] {
        let d = agl_halved(q, None).map_err(|e| e.to_string())?;
        let n = q as usize;
        ensure!(d.len() == n * (n - 1) / 2, "q={q}: size {}", d.len());
        let two = Partition::new(vec![n - 2, 2]).unwrap();
        let ordered = Partition::new(vec![n - 2, 1, 1]).unwrap();
        let o = check_oracle(&d, &two, DEFAULT_ORACLE_BUDGET).unwrap();
        let c = check_character(&d, &two).unwrap();
        ensure!(o.transitive && c.transitive, "q={q}: not ({},2)-transitive", n - 2);
        ensure!(o.r == int(1) && c.r == int(1), "q={q}: r = {}", o.r);
        let o = check_oracle(&d, &ordered, DEFAULT_ORACLE_BUDGET).unwrap();
        let c = check_character(&d, &ordered).unwrap();
        ensure!(!o.transitive && !c.transitive, "q={q}: unexpectedly ({},1,1)-transitive", n - 2);
        ensure!(
            matches!(o.witness, Some(Witness::TabloidPair { .. })) && matches!(c.witness, Some(Witness::DualEntry { .. })),
            "q={q}: missing witnesses"
        );
    }
    Ok(())
}

// 3 ------------------------------------------------------------------------

fn catalogue() -> Check {
    let cases = [
        (GroupKind::Agl1, 8, 56, "5,3"),
        (GroupKind::AGammaL1, 8, 168, "5,2,1"),
        (GroupKind::Psl2, 7, 168, "5,2,1"),
        (GroupKind::Pgl2, 8, 504, "5,3,1"),
        (GroupKind::PGammaL2, 8, 1512, "5,2,1,1"),
    ];
    for (kind, q, order, shape) in cases {
        let g = classical_group(kind, q, DEFAULT_GROUP_CAP).map_err(|e| e.to_string())?;
        ensure!(g.len() == order, "{kind}({q}) has {} elements", g.len());
        let fresh = PermSet::new(g.degree(), g.elements().to_vec()).unwrap();
        ensure!(fresh.is_group(u128::MAX).unwrap(), "{kind}({q}) is not closed");
        let la = p(shape);
        let c = check_character(&g, &la).unwrap();
        let o = check_oracle(&g, &la, DEFAULT_ORACLE_BUDGET).unwrap();
        let orbit = check_group_orbit(&g, &la, u128::MAX).unwrap();
        ensure!(c.transitive && o.transitive && orbit.transitive, "{kind}({q}) not {shape}-transitive");
        ensure!(c.r == int(1), "{kind}({q}): r = {}", c.r);
        // The stated shape is the full degree: every shape just below it fails.
        for mu in partitions_of(la.weight()) {
            if mu != la && dominates(&la, &mu).unwrap() && covers(&la, &mu) {
                ensure!(!check_character(&g, &mu).unwrap().transitive, "{kind}({q}) is also {mu}-transitive");
            }
        }
    }
    Ok(())
}

/// `la` covers `mu` in dominance order.
fn covers(la: &Partition, mu: &Partition) -> bool {
    let n = la.weight();
    !partitions_of(n).iter().any(|x| {
        x != la && x != mu && dominates(la, x).unwrap() && dominates(x, mu).unwrap()
    })
}

// 4 and 5 ------------------------------------------------------------------

fn random_subsets(n: usize, count: usize, seed: u64) -> Vec<PermSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = symmetric_group(n).elements().to_vec();
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=all.len());
            let chosen: Vec<Permutation> = all.choose_multiple(&mut rng, k).cloned().collect();
            PermSet::new(n, chosen).unwrap()
        })
        .collect()
}

fn corpus() -> Vec<PermSet> {
    let mut c = random_subsets(4, 1000, DEFAULT_SEED);
    c.extend(random_subsets(5, 200, DEFAULT_SEED + 1));
    c
}

fn methods_agree() -> Check {
    let mut compared = 0;
    for d in corpus() {
        for la in partitions_of(d.degree()) {
            let o = check_oracle(&d, &la, DEFAULT_ORACLE_BUDGET).unwrap();
            let c = check_character(&d, &la).unwrap();
            ensure!(
                o.transitive == c.transitive,
                "methods disagree on |D| = {}, lambda = {la}: oracle {:?}, character {:?}",
                d.len(),
                o.witness,
                c.witness
            );
            compared += 1;
        }
    }
    ensure!(compared == 1000 * 5 + 200 * 7, "compared {compared} pairs");
    Ok(())
}

fn upward_closure() -> Check {
    let mut implications = 0;
    for d in corpus() {
        let n = d.degree();
        let verdicts: Vec<(Partition, bool)> = partitions_of(n)
            .into_iter()
            .map(|la| {
                let t = check_character(&d, &la).unwrap().transitive;
                (la, t)
            })
            .collect();
        for (la, t) in &verdicts {
            if !t {
                continue;
            }
            for (mu, tm) in &verdicts {
                if dominates(mu, la).unwrap() {
                    ensure!(*tm, "|D| = {}: {la}-transitive but not {mu}-transitive", d.len());
                    implications += 1;
                }
            }
            let cert = divisibility_check(&BigUint::from(d.len()), la);
            ensure!(cert.holds, "|D| = {} fails divisibility at {:?}", d.len(), cert.failing);
        }
    }
    ensure!(implications > 0, "corpus contained no transitive verdicts");
    Ok(())
}

// 6 ------------------------------------------------------------------------

fn orbit_monotonicity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED + 2);
    let all = symmetric_group(6).elements().to_vec();
    let shapes = partitions_of(6);
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let mut attempts = 0;
    while seen.len() < 100 {
        attempts += 1;
        ensure!(attempts < 50_000, "only {} distinct subgroups found", seen.len());
        let gens = [all.choose(&mut rng).unwrap().clone(), all.choose(&mut rng).unwrap().clone()];
        let g = closure(&gens, 720).unwrap();
        if !seen.insert(g.elements().to_vec()) {
            continue;
        }
        let counts: Vec<BigUint> = shapes.iter().map(|la| orbit_count(&g, la, u128::MAX).unwrap()).collect();
        for (i, la) in shapes.iter().enumerate() {
            for (j, mu) in shapes.iter().enumerate() {
                if dominates(mu, la).unwrap() {
                    ensure!(
                        counts[i] >= counts[j],
                        "|G| = {}: {} orbits on {la} but {} on {mu}",
                        g.len(),
                        counts[i],
                        counts[j]
                    );
                }
            }
        }
    }
    Ok(())
}

// 7 ------------------------------------------------------------------------

fn young_cosets() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED + 3);
    for n in [5usize, 6] {
        let all = symmetric_group(n).elements().to_vec();
        for la in partitions_of(n) {
            let mut subgroups: BTreeSet<Vec<Permutation>> = BTreeSet::new();
            for t in tabloids_of_shape(n, &la).unwrap() {
                let y = young_subgroup(&t, u128::MAX).unwrap();
                if !subgroups.insert(y.elements().to_vec()) {
                    continue;
                }
                let b = dual_from_counts(&group_class_distribution(&y, u128::MAX).unwrap()).unwrap();
                let scale = BigRational::from_integer(BigInt::from(y.len()));
                for (mu, value) in b.index.iter().zip(&b.values) {
                    let nonzero = !value.is_zero();
                    ensure!(nonzero == dominates(mu, &la).unwrap(), "Y of {t}: b_{mu} = {value}");
                    let f = BigRational::from_integer(BigInt::from(mu.hook_degree()));
                    let k = BigRational::from_integer(BigInt::from(kostka(mu, &la).unwrap()));
                    ensure!(value / f == &scale * k, "Y of {t}: b_{mu}/f is not |Y| K");
                }
            }
            let base = tabloids_of_shape(n, &la).unwrap().swap_remove(0);
            let g = all[rng.gen_range(0..all.len())].clone();
            let coset = YoungCoset::of(&g, base).unwrap().elements(u128::MAX).unwrap();
            let b = dual_from_counts(&pair_class_distribution(&coset).unwrap()).unwrap();
            for (mu, value) in b.index.iter().zip(&b.values) {
                ensure!(
                    !value.is_zero() == dominates(mu, &la).unwrap(),
                    "coset of shape {la}: b_{mu} = {value}"
                );
            }
        }
    }
    Ok(())
}

// 8 ------------------------------------------------------------------------

fn character_infrastructure() -> Check {
    for n in 1..=10 {
        let t = character_table(n, DEFAULT_TABLE_CAP).unwrap();
        t.verify().map_err(|e| format!("n={n}: {e}"))?;
    }
    for n in 1..=6 {
        let shapes = partitions_of(n);
        for la in &shapes {
            for alpha in &shapes {
                let fixed = BigInt::from(fixed_count_for_type(alpha, la));
                let sum: BigInt = shapes
                    .iter()
                    .map(|nu| BigInt::from(kostka(nu, la).unwrap()) * mn_character(nu, alpha).unwrap())
                    .sum();
                ensure!(fixed == sum, "Young module of shape {la} at class {alpha}: {fixed} vs {sum}");
            }
        }
    }
    Ok(())
}

// 9 ------------------------------------------------------------------------

fn split_basis() -> Check {
    for n in [4usize, 5] {
        let ctx = SchemeContext::new(n, 5).unwrap();
        let es = ctx.idempotents().map_err(|e| e.to_string())?;
        let dim = ctx.dim();
        for la in partitions_of(n) {
            let m = coeffs_m(n, &la).unwrap();
            for (alpha, v) in &m {
                ensure!(!v.is_zero() == refines(alpha, &la).unwrap(), "m_{{{la},{alpha}}} = {v}");
            }
            ensure!(m.iter().any(|(a, v)| *a == la && !v.is_zero()), "m_{{{la},{la}}} = 0");
            for (mu, v) in coeffs_n(n, &la).unwrap() {
                ensure!(!v.is_zero() == dominates(&mu, &la).unwrap(), "n_{{{la},{mu}}} = {v}");
            }
            let c = ctx.split_matrix(&la).map_err(|e| e.to_string())?;
            let coords = ctx.class_coordinates(&c).map_err(|e| e.to_string())?;
            let expect: Vec<BigRational> = m.iter().map(|(_, v)| BigRational::from_integer(v.clone().into())).collect();
            ensure!(coords == expect, "C_{la} entries differ from m");
            ctx.verify_split_expansion(&la, &es).map_err(|e| e.to_string())?;
        }
        ensure!(ctx.split_matrix(&Partition::column(n)).unwrap() == QMatrix::identity(dim), "C_(1^n) != I");
        let ones = QMatrix::from_fn(dim, 1, |_, _| 1).unwrap();
        ensure!(ctx.split_matrix(&Partition::row(n)).unwrap() == ones, "C_(n) != J");
        let r = ctx.split_rank().unwrap();
        ensure!(r == partitions_of(n).len(), "rank {r}");
        ctx.bose_mesner_check().map_err(|e| e.to_string())?;
    }
    Ok(())
}

// 10 -----------------------------------------------------------------------

fn krein_vanishing() -> Check {
    for n in [4usize, 5] {
        let ctx = SchemeContext::new(n, 5).unwrap();
        let es = ctx.idempotents().unwrap();
        let shapes = ctx.partitions().to_vec();
        let nfact = BigInt::from(factorial(n));
        let mut vanishing = 0;
        for (li, la) in shapes.iter().enumerate() {
            for (mi, mu) in shapes.iter().enumerate() {
                let q = ctx.krein(la, mu, &es).map_err(|e| e.to_string())?;
                ensure!(q == krein_by_characters(ctx.table(), la, mu).unwrap(), "{la},{mu}: methods differ");
                // Reassemble E_la o E_mu from the parameters independently.
                let mut rebuilt = QMatrix::zeros(ctx.dim());
                for ((_, v), e) in q.iter().zip(&es) {
                    let c = v / BigRational::from_integer(nfact.clone());
                    let num: i128 = c.numer().try_into().unwrap();
                    let den: i128 = c.denom().try_into().unwrap();
                    rebuilt = rebuilt.add(&e.scale(num, den).unwrap()).unwrap();
                }
                ensure!(rebuilt == es[li].hadamard(&es[mi]).unwrap(), "{la},{mu}: expansion does not reassemble");
                for (nu, v) in &q {
                    ensure!(!v.is_negative(), "q^{nu}_{{{la},{mu}}} = {v} < 0");
                    if nu.depth() > la.depth() + mu.depth() {
                        ensure!(v.is_zero(), "q^{nu}_{{{la},{mu}}} = {v} should vanish");
                        vanishing += 1;
                    }
                }
            }
        }
        ensure!(vanishing > 0, "n={n}: no vanishing triples tested");
        let top = ctx.krein(&Partition::row(n), &Partition::row(n), &es).unwrap();
        ensure!(top[0].1 == BigRational::one(), "q^(n)_((n),(n)) = {}", top[0].1);
    }
    Ok(())
}

// 11 -----------------------------------------------------------------------

fn design_corpus() -> Vec<BlockDesign> {
    let mut out = vec![validate_design(7, 3, &fano_blocks(), Some(2)).unwrap()];
    let fano_complements: Vec<Vec<usize>> = fano_blocks()
        .iter()
        .map(|b| (1..=7).filter(|x| !b.contains(x)).collect())
        .collect();
    out.push(validate_design(7, 4, &fano_complements, Some(2)).unwrap());
    let mut extended: Vec<Vec<usize>> = fano_blocks()
        .into_iter()
        .map(|mut b| {
            b.push(8);
            b
        })
        .collect();
    extended.extend(fano_complements);
    out.push(validate_design(8, 4, &extended, Some(3)).unwrap());
    let mut affine: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (a, b) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
        for x0 in 0..3 {
            for y0 in 0..3 {
                let mut line: Vec<usize> = (0..3).map(|t| 3 * ((x0 + t * a) % 3) + (y0 + t * b) % 3 + 1).collect();
                line.sort_unstable();
                affine.insert(line);
            }
        }
    }
    out.push(validate_design(9, 3, &affine.into_iter().collect::<Vec<_>>(), Some(2)).unwrap());
    let six: Vec<Vec<usize>> = ["123", "124", "135", "146", "156", "236", "245", "256", "345", "346"]
        .iter()
        .map(|s| s.bytes().map(|c| (c - b'0') as usize).collect())
        .collect();
    out.push(validate_design(6, 3, &six, Some(2)).unwrap());
    for n in 2..=7 {
        for k in 1..n {
            out.push(validate_design(n, k, &complete_blocks(n, k), Some(k)).unwrap());
        }
    }
    out.push(validate_design(3, 2, &[vec![1, 2], vec![1, 3]], None).unwrap());
    out
}

fn lemma_identities() -> Check {
    let corpus = design_corpus();
    for d in &corpus {
        let check = nu_identities_check(d);
        ensure!(check.holds, "identities fail on a {}-({},{}) design: {:?}", d.strength(), d.n(), d.k(), check.failure);
    }
    let fano = &corpus[0];
    let r = r_by_split(fano, &symmetric_group(3), &alternating_group(4)).map_err(|e| e.to_string())?;
    ensure!(r == vec![(0, 12), (1, 12), (2, 12)], "r by split: {r:?}");
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check, u64); 11] = [
        ("Fano product construction", fano_construction, 30),
        ("halved affine sets", halved_affine, 60),
        ("transitivity catalogue of classical groups", catalogue, 300),
        ("oracle and character methods agree on random subsets", methods_agree, 600),
        ("upward closure and divisibility", upward_closure, 600),
        ("orbit counts are monotone in dominance", orbit_monotonicity, 300),
        ("dual distributions of Young subgroups and cosets", young_cosets, 600),
        ("character table identities", character_infrastructure, 120),
        ("split basis triangularity", split_basis, 120),
        ("Krein parameters and vanishing", krein_vanishing, 300),
        ("block count identities and split constants", lemma_identities, 60),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(()) if elapsed > Duration::from_secs(*limit) => Err(format!("exceeded the {limit} s limit")),
            other => other,
        };
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({:.2} s)", i + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name} ({:.2} s): {msg}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
