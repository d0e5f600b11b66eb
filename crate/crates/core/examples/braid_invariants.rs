// Burau trace, Alexander and Jones polynomials of closed 3-braids.

use bqf_braid::braid3::{self, BraidInvariants};

fn main() -> bqf_braid::Result<()> {
    for text in ["1 2", "1 -2", "1^3 2", "1 -2 1 -2", "1^2 2^-1 1^2 2^-1", "1 2 1^-1 2^4"] {
        let word = braid3::parse_braid(text)?;
        let inv = BraidInvariants::compute(&word)?;
        println!("{text}");
        println!("  exponent sum {}, trace {}, phi {}", inv.exponent_sum, inv.trace, inv.phi);
        println!("  alexander {}", inv.alexander);
        println!("  jones     {}", inv.jones);
        println!("  value at q = -1: {}", inv.special_value);
    }

    // the full twist is central
    let twist = braid3::garside_power(2)?;
    println!("phi(full twist) = {}", braid3::phi(&twist)?);
    Ok(())
}
