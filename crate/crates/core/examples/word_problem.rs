//! Deciding equality and computing orders of words.
//!
//! Usage: `cargo run --example word_problem -- "<word>" ...`
use fcwreath::cli::parse_word;
use fcwreath::group::{is_identity, normal_form, order, support_bound};
use fcwreath::GroupParams;

fn main() -> fcwreath::Result<()> {
    let gp = GroupParams::paper();
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["s s^-1", "[s, s_1]", "[[s, s_1], [s, s_2]]", "[s^2, t]", "s t s^-1 t^-1"]
            .map(String::from)
            .to_vec();
    }
    for text in &inputs {
        let w = parse_word(text)?;
        let nf = normal_form(&w);
        println!("{text}");
        println!("  normal form   {nf}");
        println!("  layers to check  1..={}", support_bound(&nf, &gp)?);
        println!("  identity      {}", is_identity(&w, &gp)?);
        println!("  order         {}", order(&w, &gp)?);
    }
    Ok(())
}
