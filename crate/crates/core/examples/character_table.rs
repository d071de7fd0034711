//! Prints the character table of S_n (default n = 5).
use lambda_transitive::characters::{character_table, DEFAULT_TABLE_CAP};

fn main() -> lambda_transitive::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let table = character_table(n, DEFAULT_TABLE_CAP)?;
    table.verify()?;
    let header: Vec<String> = table.partitions().iter().map(|p| format!("{:>11}", p.to_string())).collect();
    println!("{:>16} {}", "", header.join(""));
    for (i, mu) in table.partitions().iter().enumerate() {
        let row: Vec<String> = table.values()[i].iter().map(|v| format!("{v:>11}")).collect();
        println!("{:>16} {}", format!("chi_({mu})"), row.join(""));
    }
    println!("largest |value|: {}", table.max_abs());
    Ok(())
}
