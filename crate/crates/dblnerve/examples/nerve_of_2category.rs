//! Nerves of a 2-category through `H` and `Hsim`, and the comparison map
//! between them.

use dblnerve::corpus;
use dblnerve::dbl::budget_from_env;
use dblnerve::nerve::{comparison_maps, nerve_2cat, Variant};

fn main() -> dblnerve::Result<()> {
    let budget = budget_from_env();
    let a = corpus::iso();
    for (m, k, n) in [(0, 0, 0), (0, 1, 0), (1, 0, 1), (1, 1, 1)] {
        let h = nerve_2cat(&a, Variant::H, m, k, n, budget)?;
        let hs = nerve_2cat(&a, Variant::Hsim, m, k, n, budget)?;
        let c = comparison_maps(&a, m, k, n, budget)?;
        println!(
            "({m},{k},{n}): H {} Hsim {} injective {} retract {:?}",
            h.len(),
            hs.len(),
            c.pi_injective,
            c.retract
        );
    }
    Ok(())
}
