//! Compares the torsion search for d_n = n+1 with other admissible parameter choices.
use fcwreath::verify::torsion_search;
use fcwreath::GroupParams;

fn main() -> fcwreath::Result<()> {
    let max_len = 10;
    let families = [
        ("d_n = n+1, k_n = 2n+2", GroupParams::paper()),
        ("d_n = 2n, k_n = 4n", GroupParams::affine(2, 0, 4, 0)?),
        ("d_n = 2n+1, k_n = 4n+2", GroupParams::affine(2, 1, 4, 2)?),
        ("d_n = n+2, k_n = 2n+4", GroupParams::affine(1, 2, 2, 4)?),
    ];
    for (name, gp) in families {
        let report = torsion_search(&gp, max_len, None)?;
        println!("{name}: {} order-2 words up to length {max_len}", report.witnesses.len());
        for w in report.witnesses.iter().take(3) {
            println!("    {w}");
        }
    }
    Ok(())
}
