//! Weakly horizontally invertible squares in `Hsim I`: which squares are
//! whi, and the weak inverse of each for chosen adjoint data, by pasting
//! and by exhaustive search.

use dblnerve::corpus;

fn main() -> dblnerve::Result<()> {
    let d = corpus::hsim(&corpus::iso());
    println!(
        "{} squares, {} horizontal equivalence data",
        d.n_squares(),
        d.horizontal_equivalences().len()
    );
    for s in 0..d.n_squares() {
        if !d.is_whi(s) {
            println!("{}: not whi", d.sq_name(s));
            continue;
        }
        let [top, bottom, _, _] = d.boundary(s);
        let adj = |f: usize| {
            d.equivalence_data_on(f)
                .find(|e| e.adjoint)
                .copied()
                .expect("adjoint data")
        };
        let (t, b) = (adj(top), adj(bottom));
        let beta = d.weak_inverse(s, &t, &b)?;
        let found = d.weak_inverses_brute(s, &t, &b);
        println!(
            "{}: weak inverse {} (search finds {} candidate(s))",
            d.sq_name(s),
            d.sq_name(beta),
            found.len()
        );
    }
    println!(
        "weakly horizontally invariant: {:?}",
        d.is_weakly_horizontally_invariant()
    );
    Ok(())
}
