//! Levels of the nerve of a double category, by enumeration and by the
//! structural description, plus face maps and the simplicial identities.

use dblnerve::corpus;
use dblnerve::dbl::budget_from_env;
use dblnerve::nerve::{nerve_dbl, nerve_oracle, Nerve};
use dblnerve::shapes::{face, Axis};

fn main() -> dblnerve::Result<()> {
    let budget = budget_from_env();
    for (name, a) in corpus::double_categories() {
        let mut line = format!("{name}:");
        for (m, k) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            for n in 0..=1 {
                let direct = nerve_dbl(&a, m, k, n, budget)?;
                let oracle = nerve_oracle(&a, m, k, n)?;
                let mark = if direct.same_elements(&oracle) {
                    ""
                } else {
                    "!"
                };
                line += &format!(" ({m},{k},{n})={}{mark}", direct.len());
            }
        }
        println!("{line}");
    }
    let a = corpus::hsim(&corpus::iso());
    let mut nerve = Nerve::new(&a, budget);
    println!(
        "d0 on (0,1,1): {:?}",
        nerve.act(Axis::Space, &face(1, 0), [0, 1, 1])?
    );
    let checks = nerve.simplicial_identities(Axis::Space, [0, 1, 0])?;
    println!(
        "{} simplicial identities on the space axis, {} fail",
        checks.len(),
        checks.iter().filter(|c| !c.1).count()
    );
    Ok(())
}
