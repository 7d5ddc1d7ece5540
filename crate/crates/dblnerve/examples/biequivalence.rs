//! The inclusion of the vertical chain into the vertical oriental with
//! inverted 2-cells is a double biequivalence.

use dblnerve::shapes::chain_inclusion;

fn main() {
    for k in 0..=3 {
        let (a, b, f) = chain_inclusion(k);
        let v = f.is_double_biequivalence(&a, &b);
        println!(
            "k = {k}: {} -> {} squares, double biequivalence {}",
            a.n_squares(),
            b.n_squares(),
            v.holds
        );
    }
}
