//! Images of words in the lamplighter quotient C2 wr Z.
use fcwreath::cli::parse_word;
use fcwreath::group::quotient_image;

fn main() -> fcwreath::Result<()> {
    for text in ["s", "s t", "s_3", "s^2", "[s, s_4]", "s s_1 s_5", "t s t s t^-2"] {
        let q = quotient_image(&parse_word(text)?);
        println!("{text:<14} -> {q}  order {}", q.order());
    }
    Ok(())
}
