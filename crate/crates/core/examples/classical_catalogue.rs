//! Orders and minimal transitivity shapes of the built-in group families.
use lambda_transitive::constructions::{classical_group, GroupKind, DEFAULT_GROUP_CAP};
use lambda_transitive::transitivity::{profile, Method, DEFAULT_ORACLE_BUDGET};

fn main() -> lambda_transitive::Result<()> {
    let cases = [
        (GroupKind::Cyclic, 6),
        (GroupKind::Alt, 6),
        (GroupKind::Agl1, 8),
        (GroupKind::AGammaL1, 8),
        (GroupKind::Psl2, 7),
        (GroupKind::Pgl2, 7),
        (GroupKind::PGammaL2, 8),
    ];
    for (kind, param) in cases {
        let g = classical_group(kind, param, DEFAULT_GROUP_CAP)?;
        let prof = profile(&g, Method::Character, DEFAULT_ORACLE_BUDGET, 0)?;
        let minimal: Vec<String> = prof.minimal.iter().map(|p| format!("({p})")).collect();
        println!("{kind}({param}): degree {} order {:>5}  minimal {}", g.degree(), g.len(), minimal.join(" "));
    }
    Ok(())
}
