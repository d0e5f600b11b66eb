// Reduced forms and classes of discriminant t^2 - 4.

use bqf_braid::quadforms::{self, QForm};

fn main() -> bqf_braid::Result<()> {
    for t in [-1, 0, 3, 5, 7, 11] {
        let classes = quadforms::enumerate_classes(t)?;
        println!("t = {t}: D = {}, h = {}", quadforms::trace_discriminant(t)?, classes.len());
        for c in &classes {
            match &c.cycle {
                Some(cycle) => println!("  {}  cycle of {}", c.key.repr, cycle.len()),
                None => println!("  {}", c.key.repr),
            }
        }
    }

    let f = QForm::new(7, 13, 5);
    println!("{f} reduces to {}", quadforms::reduce(&f)?.repr);
    println!("cycle: {:?}", quadforms::reduced_cycle(&QForm::new(1, 3, -3))?);
    Ok(())
}
