//! Krein parameters of the conjugacy scheme of S_4, from matrices and from characters.
use num_traits::Zero;

use lambda_transitive::scheme::{krein_by_characters, SchemeContext};

fn main() -> lambda_transitive::Result<()> {
    let ctx = SchemeContext::new(4, 4)?;
    let es = ctx.idempotents()?;
    let parts = ctx.partitions().to_vec();
    for la in &parts {
        for mu in &parts {
            let q = ctx.krein(la, mu, &es)?;
            assert_eq!(q, krein_by_characters(ctx.table(), la, mu)?);
            let terms: Vec<String> = q
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(nu, v)| format!("q^({nu}) = {v}"))
                .collect();
            println!("({la}) x ({mu}): {}", terms.join(", "));
        }
    }
    Ok(())
}
