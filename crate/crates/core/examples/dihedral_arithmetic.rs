//! Normal forms, orders and the parity homomorphisms in the infinite dihedral group.
use fcwreath::DihedralElement;

fn main() -> fcwreath::Result<()> {
    let a = DihedralElement::A;
    let b = DihedralElement::B;
    let ba = b.checked_mul(a)?;
    let ba2 = ba.checked_mul(ba)?;
    println!("a = {a}, b = {b}, ba = {ba}, (ba)^2 = {ba2}");
    for x in [DihedralElement::IDENTITY, a, b, ba, ba2, DihedralElement::new(7, true)] {
        let (pa, pb) = x.phi();
        println!("{:>10}  order {:<8}  phi_a {pa}  phi_b {pb}  in D' {}", x.to_string(), x.order().to_string(), x.in_derived());
    }
    Ok(())
}
