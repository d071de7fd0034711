//! Burnside orbit counts of a generated group on tabloids of every shape.
use lambda_transitive::partitions::partitions_of;
use lambda_transitive::perm::{closure, parse_perm};
use lambda_transitive::transitivity::orbit_count;

fn main() -> lambda_transitive::Result<()> {
    let n = 6;
    // Dihedral group of the hexagon.
    let gens = [parse_perm("(1 2 3 4 5 6)", n)?, parse_perm("(2 6)(3 5)", n)?];
    let g = closure(&gens, 1000)?;
    println!("|G| = {}", g.len());
    for la in partitions_of(n) {
        println!("  ({la}): {} orbits", orbit_count(&g, &la, 0)?);
    }
    Ok(())
}
