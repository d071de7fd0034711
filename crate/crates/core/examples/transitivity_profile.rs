//! Inner and dual distributions and the transitivity profile of a permutation file.
//!
//! Usage: `transitivity_profile [FILE]`; without a file, PSL_2(7) is used.
use lambda_transitive::constructions::{classical_group, GroupKind, DEFAULT_GROUP_CAP};
use lambda_transitive::io::read_perm_file;
use lambda_transitive::transitivity::{dual_distribution, inner_distribution, profile, Method, DEFAULT_ORACLE_BUDGET};

fn main() -> lambda_transitive::Result<()> {
    let d = match std::env::args().nth(1) {
        Some(path) => read_perm_file(std::path::Path::new(&path))?,
        None => classical_group(GroupKind::Psl2, 7, DEFAULT_GROUP_CAP)?,
    };
    println!("n = {}, |D| = {}", d.degree(), d.len());
    let inner = inner_distribution(&d)?;
    let dual = dual_distribution(&d)?;
    for (i, p) in inner.index.iter().enumerate() {
        println!("  {:>16}  inner {:>8}  dual {:>8}", format!("({p})"), inner.values[i], dual.values[i]);
    }
    let prof = profile(&d, Method::Character, DEFAULT_ORACLE_BUDGET, 0)?;
    let minimal: Vec<String> = prof.minimal.iter().map(|p| format!("({p})")).collect();
    println!("transitive for {} shapes; minimal: {}", prof.transitive.len(), minimal.join(" "));
    Ok(())
}
