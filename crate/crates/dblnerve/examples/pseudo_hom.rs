//! The 2-category of double functors `V[1] -> A`, horizontal pseudo-natural
//! transformations and modifications, and its equivalences.

use dblnerve::corpus;
use dblnerve::dbl::{budget_from_env, pseudo_hom};
use dblnerve::shapes::v_chain;

fn main() -> dblnerve::Result<()> {
    let a = corpus::hsim(&corpus::iso());
    let hom = pseudo_hom(&v_chain(1), &a, budget_from_env())?;
    let two = &hom.two;
    println!(
        "{} functors, {} transformations, {} modifications",
        two.n_objects(),
        two.n_cells1(),
        two.n_cells2()
    );
    for t in 0..two.n_cells1() {
        let by_definition = two.is_equivalence(t);
        let componentwise = hom.is_hpnt_equivalence(&a, t).holds;
        println!(
            "{}: equivalence {by_definition}, all components whi {componentwise}",
            two.c1_name(t)
        );
    }
    Ok(())
}
