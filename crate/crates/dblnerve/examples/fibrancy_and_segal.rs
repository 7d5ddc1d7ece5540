//! Weak horizontal invariance read directly and off the nerve, and the Segal
//! restriction maps.

use dblnerve::corpus;
use dblnerve::dbl::budget_from_env;
use dblnerve::nerve::{fibrancy_vertical_check, segal_tfib_check};

fn main() -> dblnerve::Result<()> {
    let budget = budget_from_env();
    for (name, a) in corpus::double_categories() {
        let r = fibrancy_vertical_check(&a, budget)?;
        let segal: Vec<bool> = (0..=2)
            .map(|k| segal_tfib_check(&a, k, budget).map(|v| v.holds))
            .collect::<Result<_, _>>()?;
        println!(
            "{name}: fibrant {} {:?}, segal k=0..2 {segal:?}",
            r.verdict.holds, r.verdict.witness
        );
    }
    Ok(())
}
