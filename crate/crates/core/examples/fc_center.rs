//! Decomposing elements of the FC-center into the Z-coordinate and layer vectors.
use fcwreath::cli::parse_word;
use fcwreath::group::fc_membership;
use fcwreath::GroupParams;

fn main() -> fcwreath::Result<()> {
    let gp = GroupParams::paper();
    for text in ["s^2", "[s, s_1]", "[s, s_3]", "[s, s_2] [s, s_1]^2 s^-4", "s", "s t s t^-1"] {
        match fc_membership(&parse_word(text)?, &gp)? {
            Some(dec) => println!("{text}\n{dec}\n"),
            None => println!("{text}\nnot a member\n"),
        }
    }
    Ok(())
}
