//! Expands the tabloid class sums C_λ in the conjugacy-class and idempotent bases.
use lambda_transitive::scheme::{coeffs_m, coeffs_n, SchemeContext};

fn main() -> lambda_transitive::Result<()> {
    let n = 4;
    let ctx = SchemeContext::new(n, n)?;
    let es = ctx.idempotents()?;
    for la in ctx.partitions().to_vec() {
        let m: Vec<String> = coeffs_m(n, &la)?.iter().map(|(a, c)| format!("{c}·A_({a})")).collect();
        let e: Vec<String> = coeffs_n(n, &la)?.iter().map(|(mu, c)| format!("{c}·E_({mu})")).collect();
        ctx.verify_split_expansion(&la, &es)?;
        println!("C_({la}) = {}", m.join(" + "));
        println!("{:width$} = {}", "", e.join(" + "), width = la.to_string().len() + 4);
    }
    println!("rank of the split basis: {} (dimension {})", ctx.split_rank()?, ctx.partitions().len());
    Ok(())
}
