//! Trivial fibrations checked directly and through right lifting against the
//! generating cofibrations.

use dblnerve::corpus;
use dblnerve::dbl::{budget_from_env, gen_cofibs_dblcat, hsim_inclusion, DoubleFunctor};
use dblnerve::shapes::{dbl_point, free_square};

fn main() -> dblnerve::Result<()> {
    let set = gen_cofibs_dblcat();
    let budget = budget_from_env();
    let (h, hs, inc) = hsim_inclusion(&corpus::iso());
    let s = free_square();
    let p = dbl_point();
    let cases = [
        (
            "identity on S",
            s.clone(),
            s.clone(),
            DoubleFunctor::identity(&s),
        ),
        (
            "S -> [0]",
            s.clone(),
            p.clone(),
            DoubleFunctor::to_point(&s, &p),
        ),
        ("H I -> Hsim I", h, hs.dbl, inc),
    ];
    for (name, a, b, f) in cases {
        let direct = f.is_trivial_fibration(&a, &b);
        let lifting = f.has_rlp_set(&a, &b, &set, budget)?;
        println!(
            "{name}: direct {} / lifting {} ({:?})",
            direct.holds, lifting.holds, direct.witness
        );
    }
    Ok(())
}
