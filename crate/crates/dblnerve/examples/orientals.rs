//! Orientals with inverted 2-cells: the materialized model against its
//! presentation, counted by 2-functors into small targets.

use dblnerve::corpus;
use dblnerve::dbl::budget_from_env;
use dblnerve::nerve::enumerate_two_functors;
use dblnerve::shapes::{
    oriental, oriental_inv, oriental_presentation, presentation_of_two, OrientalFamily,
};

fn main() -> dblnerve::Result<()> {
    let budget = budget_from_env();
    for n in 0..=3 {
        let o = oriental(n);
        println!(
            "O({n}): {} objects, {} 1-cells, {} 2-cells",
            o.n_objects(),
            o.n_cells1(),
            o.n_cells2()
        );
    }
    for (name, target) in corpus::two_categories() {
        for n in 0..=3 {
            let model =
                enumerate_two_functors(&presentation_of_two(&oriental_inv(n)).0, &target, budget)?
                    .len();
            let pres = enumerate_two_functors(
                &oriental_presentation(OrientalFamily::Inverted, n).0,
                &target,
                budget,
            )?
            .len();
            println!("into {name}, n = {n}: model {model}, presentation {pres}");
        }
    }
    Ok(())
}
