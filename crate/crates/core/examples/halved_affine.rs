//! Half of AGL_1(q): transitive on (q-2,2) tabloids but not a group.
use lambda_transitive::constructions::agl_halved;
use lambda_transitive::partitions::Partition;
use lambda_transitive::transitivity::{profile, Method, DEFAULT_ORACLE_BUDGET};

fn main() -> lambda_transitive::Result<()> {
    for q in [5u32, 7, 11, 13] {
        let h = agl_halved(q, None)?;
        let n = q as usize;
        let shown = Partition::new(vec![n - 2, 2])?;
        let prof = profile(&h, Method::Character, DEFAULT_ORACLE_BUDGET, 0)?;
        let minimal: Vec<String> = prof.minimal.iter().map(|p| format!("({p})")).collect();
        println!(
            "q={q:>2} |H|={:>3} group={} ({shown})-transitive={} minimal: {}",
            h.len(),
            h.is_group(u128::MAX)?,
            prof.transitive.contains(&shown),
            minimal.join(" ")
        );
    }
    Ok(())
}
