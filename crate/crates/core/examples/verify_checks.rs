//! Runs the structural checks for the default parameters.
use fcwreath::verify::check_all;
use fcwreath::GroupParams;

fn main() -> fcwreath::Result<()> {
    let gp = GroupParams::paper();
    for report in check_all(&gp, 12, 12, 20, 10)? {
        println!("{report}");
    }
    Ok(())
}
