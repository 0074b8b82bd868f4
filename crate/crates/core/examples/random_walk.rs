//! Return probabilities of the simple random walk on G and on its lamplighter quotient.
use fcwreath::walk::{exact_return_prob, mc_return_prob, Target, WalkConfig};
use fcwreath::GroupParams;

fn main() -> fcwreath::Result<()> {
    let gp = GroupParams::paper();
    println!("steps\tp_G exact\tp_Q exact");
    for steps in (0..=12).step_by(2) {
        let g = exact_return_prob(&WalkConfig::new(steps, Target::G)?, &gp)?;
        let q = exact_return_prob(&WalkConfig::new(steps, Target::Q)?, &gp)?;
        println!("{steps}\t{g}\t{q}");
    }
    println!("\nsteps\tp_G estimate\tstderr");
    for steps in [16, 20, 24, 30] {
        let cfg = WalkConfig::new(steps, Target::G)?.with_trials(200_000, 1).with_shards(4, None);
        let (p, err) = mc_return_prob(&cfg, &gp)?;
        println!("{steps}\t{p:.6}\t{err:.6}");
    }
    Ok(())
}
