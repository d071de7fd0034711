//! Builds a (5,1,1)-transitive set in S_7 from the Fano plane.
use lambda_transitive::constructions::{fano_blocks, product_construct, r_by_split, validate_design, BijectionAssignment};
use lambda_transitive::perm::{alternating_group, symmetric_group};
use lambda_transitive::transitivity::{check_character, check_oracle, DEFAULT_ORACLE_BUDGET};

fn main() -> lambda_transitive::Result<()> {
    let fano = validate_design(7, 3, &fano_blocks(), None)?;
    println!("Fano plane: t = {}, index {}", fano.strength(), fano.index());

    let (d1, d2) = (symmetric_group(3), alternating_group(4));
    let mut bij = BijectionAssignment::ascending(&fano);
    // Reverse the complement order on one block; any choice works.
    bij.set(&fano, vec![3, 4, 6], vec![7, 5, 2, 1])?;
    let d = product_construct(&fano, &d1, &d2, &bij)?;
    println!("|D| = {}", d.len());

    let la = "5,1,1".parse()?;
    let by_char = check_character(&d, &la)?;
    let by_oracle = check_oracle(&d, &la, DEFAULT_ORACLE_BUDGET)?;
    println!("character: transitive={} r={}", by_char.transitive, by_char.r);
    println!("oracle:    transitive={} r={}", by_oracle.transitive, by_oracle.r);
    for (i, r) in r_by_split(&fano, &d1, &d2)? {
        println!("  split i={i}: r_i = {r}");
    }
    Ok(())
}
