//! Projections of commutators [s, s_i] to the layers H_n for the default parameters.
use fcwreath::{GroupParams, LayerElement, Word};

fn main() -> fcwreath::Result<()> {
    let gp = GroupParams::paper();
    for n in 1..=4 {
        let layer = gp.layer(n)?;
        println!("layer {n} (d={}, k={}): sigma = {}", layer.d(), layer.k(), LayerElement::sigma(&layer));
        for i in 0..=4 {
            let c = Word::commutator(&Word::s(), &Word::s_i(i));
            println!("  [s, s_{i}] -> {}", LayerElement::project_word(&layer, &c)?);
        }
    }
    Ok(())
}
