//! Command dispatch for the `dblnerve` binary. Every command produces a JSON
//! report and an exit code: 0 when the verdict holds or the command simply
//! succeeded, 1 when the verdict fails, 2 on any error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::corpus;
use crate::dbl::{
    budget_from_env, CofibSet, DoubleFunctor, FiniteDoubleCategory, HorizontalEquivalence,
};
use crate::interchange::{load, Document, LoadError, Loaded};
use crate::nerve::{
    comparison_maps, fibrancy_vertical_check, nerve_2cat, nerve_dbl, nerve_oracle,
    segal_tfib_check, Nerve, SimplexSet, Variant,
};
use crate::shapes::{
    chain2, dbl_point, face, free_square, oriental, oriental_inv, oriental_variant, v_chain,
    v_oriental_inv, x_presentation, Axis, OrientalFamily, OrientalFamilySpec,
};
use crate::two::{FiniteTwoCategory, TwoFunctor};
use crate::Verdict;

#[derive(Debug, Parser)]
#[command(
    name = "dblnerve",
    version,
    about = "Finite double categories, weak horizontal invertibility and nerves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and validate a document.
    Validate { file: PathBuf },
    /// Weak horizontal invertibility of one square, or a table of all squares.
    WhiCheck {
        file: PathBuf,
        #[arg(long)]
        square: Option<String>,
    },
    /// The weak inverse of a square for given adjoint data on its top and
    /// bottom, by the pasting formula and by search.
    WeakInverse {
        file: PathBuf,
        #[arg(long)]
        square: String,
        /// `f,g,eta,eps`, once for the top and once for the bottom.
        #[arg(long, num_args = 1)]
        data: Vec<String>,
    },
    /// Every pair of horizontal equivalences over a vertical morphism has a
    /// whi filler.
    WhiInvariant { file: PathBuf },
    /// Trivial fibration, checked directly.
    Tfib(FunctorArgs),
    /// Right lifting property against a generating set.
    Rlp {
        #[command(flatten)]
        functor: FunctorArgs,
        #[arg(long, value_parser = parse_set)]
        set: CofibSet,
    },
    /// Biequivalence of 2-categories.
    Bieq(FunctorArgs),
    /// Double biequivalence.
    DblBieq(FunctorArgs),
    /// One level of the nerve of a double category.
    Nerve {
        file: PathBuf,
        #[command(flatten)]
        level: Level,
        /// Include elements and face maps.
        #[arg(long)]
        list: bool,
        /// Use the structural description instead of enumeration.
        #[arg(long, conflicts_with = "compare")]
        oracle: bool,
        /// Compute both ways and compare.
        #[arg(long)]
        compare: bool,
    },
    /// One level of the nerve of a 2-category through `H` or `Hsim`.
    Nerve2 {
        file: PathBuf,
        #[arg(long)]
        variant: Variant,
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        list: bool,
        /// Compare the two nerves and check the retract identity.
        #[arg(long)]
        compare_retract: bool,
    },
    /// Weak horizontal invariance read two ways, directly and from the nerve.
    Fibrancy { file: PathBuf },
    /// The Segal restriction map at `k` is a trivial fibration.
    Segal {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Shapes.
    Shapes {
        #[command(subcommand)]
        action: ShapesAction,
    },
}

#[derive(Debug, Args)]
pub struct FunctorArgs {
    pub src: PathBuf,
    pub tgt: PathBuf,
    pub map: PathBuf,
}

#[derive(Debug, Args)]
pub struct Level {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum ShapesAction {
    /// Write a shape as an interchange document.
    Emit {
        /// plain, inverted, adjoint (oriental presentations); oriental,
        /// oriental-inv, chain (2-categories); v-chain, v-oriental-inv,
        /// free-square, point (double categories); x (the presentation of
        /// a nerve level, with `--m` and `--k`); iso, arrow, involution,
        /// graded, h-iso, hsim-iso, hsim-arrow, h-arrow (corpus).
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// full, boundary or horn-T, for the oriental presentations.
        #[arg(long)]
        variant: Option<crate::shapes::Variant>,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
}

fn parse_set(s: &str) -> Result<CofibSet, String> {
    s.parse()
}

/// What a command failed with.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Engine(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Load(LoadError::Io { .. }) => "IoError",
            CliError::Load(LoadError::Parse { .. }) => "ParseError",
            CliError::Load(LoadError::Schema { .. }) => "SchemaError",
            CliError::Load(LoadError::Validation { .. }) => "ValidationError",
            CliError::Engine(_) => "EngineError",
            CliError::Usage(_) => "UsageError",
        }
    }
}

/// An exit code and the report for standard output.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

impl Outcome {
    fn done(report: Value) -> Self {
        Outcome { code: 0, report }
    }
    fn verdict(holds: bool, report: Value) -> Self {
        Outcome {
            code: if holds { 0 } else { 1 },
            report,
        }
    }
    fn of(v: &Verdict, mut report: Value) -> Self {
        report["holds"] = json!(v.holds);
        report["witness"] = json!(v.witness);
        Outcome::verdict(v.holds, report)
    }
}

pub fn run(cli: Cli) -> Outcome {
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => Outcome {
            code: 2,
            report: json!({ "error": e.kind(), "message": e.to_string() }),
        },
    }
}

type Res = Result<Outcome, CliError>;

fn dbl(path: &PathBuf) -> Result<FiniteDoubleCategory, CliError> {
    match load(path)? {
        Loaded::DoubleCategory(a) => Ok(a),
        _ => Err(CliError::Usage(format!(
            "{} is not a double-category document",
            path.display()
        ))),
    }
}

fn two(path: &PathBuf) -> Result<FiniteTwoCategory, CliError> {
    match load(path)? {
        Loaded::TwoCategory(a) => Ok(a),
        _ => Err(CliError::Usage(format!(
            "{} is not a two-category document",
            path.display()
        ))),
    }
}

#[allow(clippy::large_enum_variant)]
enum Functor {
    Double(FiniteDoubleCategory, FiniteDoubleCategory, DoubleFunctor),
    Two(FiniteTwoCategory, FiniteTwoCategory, TwoFunctor),
}

fn functor(args: &FunctorArgs) -> Result<Functor, CliError> {
    match (load(&args.src)?, load(&args.tgt)?, load(&args.map)?) {
        (Loaded::DoubleCategory(a), Loaded::DoubleCategory(b), Loaded::DoubleFunctor(f)) => {
            let f = DoubleFunctor::from_raw(&f, &a, &b)?;
            Ok(Functor::Double(a, b, f))
        }
        (Loaded::TwoCategory(a), Loaded::TwoCategory(b), Loaded::TwoFunctor(f)) => {
            let f = TwoFunctor::from_raw(&f, &a, &b)?;
            Ok(Functor::Two(a, b, f))
        }
        _ => Err(CliError::Usage(
            "expected two double categories and a double functor, or two 2-categories and a 2-functor".into(),
        )),
    }
}

fn dispatch(command: Command) -> Res {
    let budget = budget_from_env();
    match command {
        Command::Validate { file } => validate(&file),
        Command::WhiCheck { file, square } => whi_check(&dbl(&file)?, square.as_deref()),
        Command::WeakInverse { file, square, data } => weak_inverse(&dbl(&file)?, &square, &data),
        Command::WhiInvariant { file } => {
            let a = dbl(&file)?;
            Ok(Outcome::of(
                &a.is_weakly_horizontally_invariant(),
                json!({}),
            ))
        }
        Command::Tfib(args) => {
            let v = match functor(&args)? {
                Functor::Double(a, b, f) => f.is_trivial_fibration(&a, &b),
                Functor::Two(a, b, f) => f.is_trivial_fibration(&a, &b),
            };
            Ok(Outcome::of(&v, json!({})))
        }
        Command::Rlp { functor: args, set } => {
            let members = set.members();
            let v = match functor(&args)? {
                Functor::Double(a, b, f) => f.has_rlp_set(&a, &b, &members, budget)?,
                Functor::Two(a, b, f) => {
                    let (ha, hb) = (corpus::h(&a), corpus::h(&b));
                    crate::dbl::horizontal_functor(&f).has_rlp_set(&ha, &hb, &members, budget)?
                }
            };
            let names: Vec<&str> = members.iter().map(|j| j.name.as_str()).collect();
            Ok(Outcome::of(&v, json!({ "set": names })))
        }
        Command::Bieq(args) => match functor(&args)? {
            Functor::Two(a, b, f) => Ok(Outcome::of(&f.is_biequivalence(&a, &b), json!({}))),
            Functor::Double(..) => Err(CliError::Usage(
                "bieq takes 2-categories; use dbl-bieq".into(),
            )),
        },
        Command::DblBieq(args) => match functor(&args)? {
            Functor::Double(a, b, f) => {
                Ok(Outcome::of(&f.is_double_biequivalence(&a, &b), json!({})))
            }
            Functor::Two(..) => Err(CliError::Usage(
                "dbl-bieq takes double categories; use bieq".into(),
            )),
        },
        Command::Nerve {
            file,
            level,
            list,
            oracle,
            compare,
        } => nerve(&dbl(&file)?, &level, list, oracle, compare, budget),
        Command::Nerve2 {
            file,
            variant,
            level,
            list,
            compare_retract,
        } => nerve2(&two(&file)?, variant, &level, list, compare_retract, budget),
        Command::Fibrancy { file } => {
            let r = fibrancy_vertical_check(&dbl(&file)?, budget)?;
            Ok(Outcome::of(
                &r.verdict,
                json!({ "invariant": r.invariant, "lifting": r.lifting }),
            ))
        }
        Command::Segal { file, k } => {
            let v = segal_tfib_check(&dbl(&file)?, k, budget)?;
            Ok(Outcome::of(&v, json!({ "k": k })))
        }
        Command::Shapes {
            action:
                ShapesAction::Emit {
                    family,
                    n,
                    variant,
                    m,
                    k,
                },
        } => {
            let doc = emit(&family, m, k, n, variant)?;
            Ok(Outcome::done(doc.to_json()))
        }
    }
}

fn validate(file: &PathBuf) -> Res {
    let report = match load(file)? {
        Loaded::Category(c) => {
            json!({ "kind": "category", "objects": c.n_objects(), "morphisms": c.n_morphisms() })
        }
        Loaded::TwoCategory(a) => {
            json!({ "kind": "two-category", "objects": a.n_objects(), "cells1": a.n_cells1(), "cells2": a.n_cells2() })
        }
        Loaded::DoubleCategory(a) => json!({
            "kind": "double-category",
            "objects": a.n_objects(),
            "horizontal": a.n_h(),
            "vertical": a.n_v(),
            "squares": a.n_squares(),
        }),
        Loaded::Presentation(p) => json!({
            "kind": "presentation",
            "objects": p.objects.len(),
            "h_gens": p.h_gens.len(),
            "v_gens": p.v_gens.len(),
            "sq_gens": p.sq_gens.len(),
            "relations": p.relations.len(),
        }),
        Loaded::DoubleFunctor(_) => json!({ "kind": "double-functor" }),
        Loaded::TwoFunctor(_) => json!({ "kind": "two-functor" }),
    };
    Ok(Outcome::done(report))
}

fn data_json(a: &FiniteDoubleCategory, e: &HorizontalEquivalence) -> Value {
    json!({ "f": a.h_name(e.f), "g": a.h_name(e.g), "eta": a.sq_name(e.eta), "eps": a.sq_name(e.eps), "adjoint": e.adjoint })
}

fn square(a: &FiniteDoubleCategory, name: &str) -> Result<usize, CliError> {
    a.square(name)
        .ok_or_else(|| CliError::Usage(format!("no square named `{name}`")))
}

fn whi_check(a: &FiniteDoubleCategory, which: Option<&str>) -> Res {
    match which {
        Some(name) => {
            let s = square(a, name)?;
            let report = match a.whi_witness(s) {
                Some(w) => json!({
                    "square": name,
                    "whi": true,
                    "weak_inverse": a.sq_name(w.beta),
                    "top": data_json(a, &w.top),
                    "bottom": data_json(a, &w.bottom),
                }),
                None => json!({ "square": name, "whi": false }),
            };
            Ok(Outcome::verdict(a.is_whi(s), report))
        }
        None => {
            let all: Vec<Value> = (0..a.n_squares())
                .map(|s| json!({ "square": a.sq_name(s), "whi": a.is_whi(s) }))
                .collect();
            Ok(Outcome::done(json!({ "squares": all })))
        }
    }
}

fn parse_data(a: &FiniteDoubleCategory, text: &str) -> Result<HorizontalEquivalence, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [f, g, eta, eps] = parts.as_slice() else {
        return Err(CliError::Usage(format!("`{text}`: expected f,g,eta,eps")));
    };
    let found = a.horizontal_equivalences().iter().find(|e| {
        a.h_name(e.f) == *f
            && a.h_name(e.g) == *g
            && a.sq_name(e.eta) == *eta
            && a.sq_name(e.eps) == *eps
    });
    found
        .copied()
        .ok_or_else(|| CliError::Usage(format!("`{text}` is not equivalence data")))
}

fn weak_inverse(a: &FiniteDoubleCategory, name: &str, data: &[String]) -> Res {
    let s = square(a, name)?;
    let [f, f2, _, _] = a.boundary(s);
    let (top, bottom) = match data {
        [] => {
            let first = |h: usize| {
                a.equivalence_data_on(h)
                    .find(|e| e.adjoint)
                    .copied()
                    .ok_or_else(|| {
                        CliError::Usage(format!(
                            "`{}` carries no adjoint equivalence data",
                            a.h_name(h)
                        ))
                    })
            };
            (first(f)?, first(f2)?)
        }
        [t, b] => (parse_data(a, t)?, parse_data(a, b)?),
        _ => {
            return Err(CliError::Usage(
                "--data is given twice, for the top and then the bottom".into(),
            ))
        }
    };
    if top.f != f || bottom.f != f2 {
        return Err(CliError::Usage(
            "the data does not sit on the top and bottom of the square".into(),
        ));
    }
    if !a.is_whi(s) {
        return Ok(Outcome::verdict(
            false,
            json!({ "square": name, "whi": false }),
        ));
    }
    let beta = a.weak_inverse(s, &top, &bottom)?;
    let brute = a.weak_inverses_brute(s, &top, &bottom);
    let agree = brute == [beta];
    let report = json!({
        "square": name,
        "whi": true,
        "top": data_json(a, &top),
        "bottom": data_json(a, &bottom),
        "weak_inverse": a.sq_name(beta),
        "by_search": brute.iter().map(|&b| a.sq_name(b)).collect::<Vec<_>>(),
        "agree": agree,
    });
    Ok(Outcome::verdict(agree, report))
}

fn set_json(s: &SimplexSet, list: bool) -> Value {
    let mut v = json!({ "level": s.level, "count": s.len(), "provenance": s.provenance });
    if list {
        v["elements"] = json!(s
            .elements
            .iter()
            .map(|e| e
                .iter()
                .cloned()
                .collect::<std::collections::BTreeMap<_, _>>())
            .collect::<Vec<_>>());
    }
    v
}

/// Face maps out of `level`, by axis and index.
fn faces(a: &FiniteDoubleCategory, level: [usize; 3], budget: u64) -> Result<Value, CliError> {
    let mut nerve = Nerve::new(a, budget);
    let mut out = serde_json::Map::new();
    for axis in Axis::ALL {
        let d = level[axis.index()];
        if d == 0 {
            continue;
        }
        let maps = (0..=d)
            .map(|i| nerve.act(axis, &face(d, i), level))
            .collect::<crate::Result<Vec<_>>>()?;
        out.insert(
            serde_json::to_value(axis)
                .expect("axis")
                .as_str()
                .expect("name")
                .to_string(),
            json!(maps),
        );
    }
    Ok(Value::Object(out))
}

fn nerve(
    a: &FiniteDoubleCategory,
    l: &Level,
    list: bool,
    oracle: bool,
    compare: bool,
    budget: u64,
) -> Res {
    let (m, k, n) = (l.m, l.k, l.n);
    if compare {
        let direct = nerve_dbl(a, m, k, n, budget)?;
        let structural = nerve_oracle(a, m, k, n)?;
        let agree = direct.same_elements(&structural);
        let mut report = set_json(&direct, list);
        report["oracle_count"] = json!(structural.len());
        report["agree"] = json!(agree);
        return Ok(Outcome::verdict(agree, report));
    }
    let set = if oracle {
        nerve_oracle(a, m, k, n)?
    } else {
        nerve_dbl(a, m, k, n, budget)?
    };
    let mut report = set_json(&set, list);
    if list && !oracle {
        report["faces"] = faces(a, [m, k, n], budget)?;
    }
    Ok(Outcome::done(report))
}

fn nerve2(
    a: &FiniteTwoCategory,
    variant: Variant,
    l: &Level,
    list: bool,
    retract: bool,
    budget: u64,
) -> Res {
    let (m, k, n) = (l.m, l.k, l.n);
    let set = nerve_2cat(a, variant, m, k, n, budget)?;
    let mut report = set_json(&set, list);
    report["variant"] = json!(variant);
    if !retract {
        return Ok(Outcome::done(report));
    }
    let c = comparison_maps(a, m, k, n, budget)?;
    report["h_count"] = json!(c.h_count);
    report["hsim_count"] = json!(c.hsim_count);
    report["pi_injective"] = json!(c.pi_injective);
    report["retract"] = json!(c.retract);
    Ok(Outcome::verdict(
        c.pi_injective && c.retract != Some(false),
        report,
    ))
}

fn emit(
    family: &str,
    m: usize,
    k: usize,
    n: usize,
    variant: Option<crate::shapes::Variant>,
) -> Result<Document, CliError> {
    if let Ok(f) = family.parse::<OrientalFamily>() {
        let spec = OrientalFamilySpec {
            family: f,
            n,
            variant: variant.unwrap_or(crate::shapes::Variant::Full),
        };
        return Ok(Document::Presentation(oriental_variant(spec)?.0 .0));
    }
    if variant.is_some() {
        return Err(CliError::Usage(format!(
            "--variant applies to the oriental presentations, not `{family}`"
        )));
    }
    let two = |a: FiniteTwoCategory| Document::from(&a);
    let dbl = |a: FiniteDoubleCategory| Document::from(&a);
    Ok(match family {
        "oriental" => two(oriental(n)),
        "oriental-inv" => two(oriental_inv(n)),
        "chain" => two(chain2(n)),
        "v-chain" => dbl(v_chain(n)),
        "v-oriental-inv" => dbl(v_oriental_inv(n)),
        "free-square" => dbl(free_square()),
        "point" => dbl(dbl_point()),
        "x" => Document::Presentation(x_presentation(m, k, n)?),
        "iso" => two(corpus::iso()),
        "arrow" => two(corpus::arrow()),
        "involution" => two(corpus::involution()),
        "graded" => two(corpus::graded()),
        "h-iso" => dbl(corpus::h(&corpus::iso())),
        "hsim-iso" => dbl(corpus::hsim(&corpus::iso())),
        "h-arrow" => dbl(corpus::h(&corpus::arrow())),
        "hsim-arrow" => dbl(corpus::hsim(&corpus::arrow())),
        other => return Err(CliError::Usage(format!("unknown family `{other}`"))),
    })
}
