//! `tractmat`: JSON front end for the tract-matroid library.
//!
//! Exit codes: 0 on success or a passing check, 1 on an axiom violation
//! (a JSON report is still printed), 2 on malformed input.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tract_matroid::flats::{check_lf_axioms, check_lf_star_axioms, gp_from_lattice, lattice_of_t_flats};
use tract_matroid::gp::{tropicalize, GpFunction};
use tract_matroid::hyperarr::{
    check_prop_e, rescaling_factors, verify_flat_intersections, CanonicalArrangement, FieldArrangement, PropEScope,
};
use tract_matroid::json::*;
use tract_matroid::pointline::{check_pl, gp_from_pointline, psi};
use tract_matroid::random::{random_arrangement_matrix, random_integer_matrix, seeded};
use tract_matroid::rep::{check_representation, fundamental_rep, gp_from_rep, is_quotient};
use tract_matroid::spaces::{
    covectors, normal_basis, support_bases, support_bases_of_set, vectors, ENUMERATION_GUARD,
};
use tract_matroid::subset::{self, Subset};
use tract_matroid::tract::{FieldTract, Tract, TractDescriptor};
use tract_matroid::{Error, Krasner, PrimeField, RationalField, TropicalHyperfield};

#[derive(Parser)]
#[command(name = "tractmat", version, about = "Matroids over tracts: checkers and constructors with JSON I/O")]
struct Cli {
    /// Read input from this file instead of stdin.
    #[arg(long, short, global = true)]
    input: Option<String>,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<String>,
    /// Largest number of functions E → T to enumerate.
    #[arg(long, global = true, default_value_t = ENUMERATION_GUARD)]
    guard: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SetArg {
    /// Comma-separated elements, e.g. "0,2".
    #[arg(long, default_value = "")]
    set: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check GP1–GP3 for a Grassmann–Plücker function.
    CheckGp,
    /// Dual function.
    Dual,
    /// Contraction by a set, with the surviving elements.
    Contract(SetArg),
    /// F-quotient by a flat.
    Fquotient(SetArg),
    /// Direct sum of {"left": φ, "right": ψ}.
    DirectSum,
    /// Fundamental hyperplane representation.
    RepFromGp,
    /// Grassmann–Plücker function of a representation.
    GpFromRep,
    /// Check R1 and R2.
    CheckRep,
    /// Is {"low": φ} a matroid quotient of {"high": ψ}?
    QuotientCheck,
    /// Vectors (or covectors) of a function.
    Vectors {
        #[arg(long)]
        covectors: bool,
    },
    /// Support bases of the vector set.
    SupportBases,
    /// Normal basis for a cobasis.
    NormalBasis(SetArg),
    /// Lattice of T-flats.
    Tflats,
    /// Check LF1–LF5 (or LF1*–LF4*) on an explicit collection.
    CheckLf {
        #[arg(long)]
        star: bool,
    },
    /// Function whose lattice of T-flats is the given collection.
    GpFromLattice,
    /// Point-line arrangement of a function of rank at least 2.
    Psi,
    /// Check PL1–PL3.
    CheckPl,
    /// Function of a point-line arrangement.
    GpFromPointline,
    /// Arrangement and minor function of a matrix.
    ArrFromMatrix,
    /// Verify the field arrangement statements for a matrix.
    VerifyThmD {
        /// Seed for the random column rescaling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Canonical hyperplane arrangement of a simple function.
    CanonicalArr,
    /// Check the flat classification of the canonical arrangement.
    CheckPropE {
        #[arg(long)]
        flats_only: bool,
    },
    /// Seeded random matrices or tropical valuations.
    GenRandom(GenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Matrix,
    Valuation,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "matrix")]
    kind: GenKind,
    /// Prime for GF(p) matrices, omitted for rationals; for valuations the
    /// prime of the absolute value.
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, default_value_t = 2)]
    rows: usize,
    #[arg(long, default_value_t = 4)]
    cols: usize,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Entries are drawn from [-bound, bound].
    #[arg(long, default_value_t = 9)]
    bound: i64,
}

/// A command's JSON output and whether its check passed.
type Outcome = Result<(Value, bool), Error>;

macro_rules! with_tract {
    ($desc:expr, $t:ident => $body:expr) => {
        match $desc {
            TractDescriptor::Krasner => {
                let $t = Krasner;
                $body
            }
            TractDescriptor::Tropical => {
                let $t = TropicalHyperfield::new();
                $body
            }
            TractDescriptor::Gf { p } => {
                let $t = PrimeField::new(p)?;
                $body
            }
            TractDescriptor::Rationals => {
                let $t = RationalField::new();
                $body
            }
        }
    };
}

macro_rules! with_field {
    ($desc:expr, $t:ident => $body:expr) => {
        match $desc {
            TractDescriptor::Gf { p } => {
                let $t = PrimeField::new(p)?;
                $body
            }
            TractDescriptor::Rationals => {
                let $t = RationalField::new();
                $body
            }
            other => return Err(Error::Input(format!("{other} is not a field"))),
        }
    };
}

fn parse_set(text: &str, n: usize) -> Result<Subset, Error> {
    subset::parse(text, n).ok_or_else(|| Error::Input(format!("bad element list {text:?}")))
}

fn sub<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Error> {
    v.get(key).ok_or_else(|| Error::Input(format!("missing field {key:?}")))
}

fn ok(v: Value) -> Outcome {
    Ok((v, true))
}

fn subsets_json(sets: &[Subset]) -> Value {
    sets.iter().map(|&s| subset_to_json(s)).collect()
}

fn check_gp(v: &Value) -> Outcome {
    with_tract!(read_descriptor(v, "tract")?, t => match gp_from_json(&t, v) {
        Ok(_) => ok(json!({"gp1": "ok", "gp3": "ok"})),
        Err(Error::Gp1(detail)) => Ok((json!({"gp1": "failed", "detail": detail}), false)),
        Err(Error::Exchange { b1, b2, x }) => Ok((json!({"gp1": "failed", "exchange": {"b1": b1, "b2": b2, "x": x}}), false)),
        Err(Error::NoBases) => Ok((json!({"gp1": "failed", "detail": "no nonzero values"}), false)),
        Err(Error::Gp3 { tuple }) => Ok((json!({"gp1": "ok", "gp3": "failed", "tuple": tuple}), false)),
        Err(e) => Err(e),
    })
}

fn vectors_cmd<T: Tract>(phi: &GpFunction<T>, co: bool, guard: u64) -> Outcome {
    let pred = if co { covectors(phi) } else { vectors(phi) };
    let t = phi.tract();
    if t.is_finite() {
        let members = pred.enumerate(guard)?;
        let list: Vec<Value> = members.iter().map(|x| vector_to_json(t, x)).collect();
        ok(json!({"members": list}))
    } else {
        let list: Vec<Value> = pred.generators().iter().map(|x| vector_to_json(t, x)).collect();
        ok(json!({"orthogonal_to": list}))
    }
}

fn support_bases_cmd<T: Tract>(phi: &GpFunction<T>, guard: u64) -> Outcome {
    let t = phi.tract();
    if t.is_finite() {
        let members = vectors(phi).enumerate(guard)?;
        let found = support_bases_of_set(t, phi.n(), &members);
        let cobases = support_bases(phi);
        ok(json!({"support_bases": subsets_json(&found), "equal_to_cobases": found == cobases}))
    } else {
        ok(json!({"support_bases": subsets_json(&support_bases(phi)), "method": "cobases"}))
    }
}

fn normal_basis_cmd<T: Tract>(phi: &GpFunction<T>, set: &str) -> Outcome {
    let cobasis = parse_set(set, phi.n())?;
    let nf = normal_basis(phi, cobasis)?;
    let rows: serde_json::Map<String, Value> =
        nf.rows().iter().map(|(i, x)| (i.to_string(), vector_to_json(phi.tract(), x))).collect();
    ok(json!({"cobasis": subset_to_json(cobasis), "rows": rows}))
}

fn canonical_cmd<T: Tract>(phi: &GpFunction<T>, guard: u64) -> Outcome {
    let arr = CanonicalArrangement::new(phi)?;
    let t = phi.tract();
    if t.is_finite() {
        let covs = arr.covectors().enumerate(guard)?;
        let hyperplanes: Vec<Value> = (0..phi.n())
            .map(|i| {
                let members: Vec<Value> =
                    covs.iter().filter(|x| arr.in_hyperplane(i, x)).map(|x| vector_to_json(t, x)).collect();
                json!({"i": i, "members": members})
            })
            .collect();
        ok(json!({"hyperplanes": hyperplanes}))
    } else {
        let circuits: Vec<Value> = arr.covectors().generators().iter().map(|x| vector_to_json(t, x)).collect();
        ok(json!({"covectors_orthogonal_to": circuits, "hyperplanes": "H_i = {X covector : X(i) = 0}"}))
    }
}

fn thm_d<T: FieldTract>(field: T, v: &Value, seed: u64) -> Outcome {
    let rows = matrix_from_json(&field, v)?;
    let (a, phi) = FieldArrangement::from_matrix(field.clone(), rows)?;
    let mut rng = seeded(seed);
    let t: Vec<T::Elem> = (0..a.n()).map(|_| field.sample_unit(&mut rng)).collect();
    let scaled = a.rescale_columns(&t)?;
    let rescaling = rescaling_factors(&a, &scaled)?.is_some();
    let matroid_equal = &a.matroid()? == phi.underlying_matroid();
    let flats = verify_flat_intersections(&a)?;
    let (b, back) = CanonicalArrangement::new(&phi)?.to_field_arrangement()?;
    let round_trip = back.projectively_equal(&phi) && rescaling_factors(&a, &b)?.is_some();
    let passed = rescaling && matroid_equal && round_trip && flats.iter().all(|f| f.equal);
    Ok((
        json!({
            "rescaling_equivalent": rescaling,
            "rescaling": vector_to_json(&field, &t),
            "matroid_equal": matroid_equal,
            "flats": serde_json::to_value(&flats).expect("verdicts serialize"),
            "canonical_round_trip": round_trip,
        }),
        passed,
    ))
}

fn gen_random(g: &GenArgs) -> Outcome {
    let mut rng = seeded(g.seed);
    if g.rows == 0 || g.rows > g.cols || g.cols > subset::MAX_GROUND_SET {
        return Err(Error::Input("need 0 < rows <= cols <= 16".into()));
    }
    let mut out = Vec::with_capacity(g.count);
    for _ in 0..g.count {
        match g.kind {
            GenKind::Matrix => match g.prime {
                Some(p) => {
                    let f = PrimeField::new(p)?;
                    out.push(matrix_to_json(&f, &random_arrangement_matrix(&f, g.rows, g.cols, g.bound, &mut rng)));
                }
                None => {
                    let q = RationalField::new();
                    out.push(matrix_to_json(&q, &random_arrangement_matrix(&q, g.rows, g.cols, g.bound, &mut rng)));
                }
            },
            GenKind::Valuation => {
                let q = RationalField::new();
                let m = random_integer_matrix(g.rows, g.cols, g.bound, &mut rng);
                let rows: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&a| q.from_i64(a)).collect()).collect();
                let phi = GpFunction::from_matrix(q, &rows)?;
                out.push(gp_to_json(&tropicalize(g.prime.unwrap_or(2), &phi)?));
            }
        }
    }
    ok(if g.count == 1 { out.pop().expect("one item") } else { Value::Array(out) })
}

fn run(cli: &Cli, input: &str) -> Outcome {
    if let Command::GenRandom(g) = &cli.command {
        return gen_random(g);
    }
    let v: Value = serde_json::from_str(input).map_err(|e| Error::Input(format!("invalid JSON: {e}")))?;
    let guard = cli.guard;
    match &cli.command {
        Command::CheckGp => check_gp(&v),
        Command::Dual => with_tract!(read_descriptor(&v, "tract")?, t => ok(gp_to_json(&gp_from_json(&t, &v)?.dual()))),
        Command::Contract(a) => with_tract!(read_descriptor(&v, "tract")?, t => {
            let phi = gp_from_json(&t, &v)?;
            let (c, labels) = phi.contract(parse_set(&a.set, phi.n())?)?;
            ok(json!({"gp": gp_to_json(&c), "elements": labels}))
        }),
        Command::Fquotient(a) => with_tract!(read_descriptor(&v, "tract")?, t => {
            let phi = gp_from_json(&t, &v)?;
            ok(gp_to_json(&phi.f_quotient(parse_set(&a.set, phi.n())?)?))
        }),
        Command::DirectSum => {
            let left = sub(&v, "left")?;
            with_tract!(read_descriptor(left, "tract")?, t => {
                let a = gp_from_json(&t, left)?;
                let b = gp_from_json(&t, sub(&v, "right")?)?;
                ok(gp_to_json(&a.direct_sum(&b)?))
            })
        }
        Command::RepFromGp => with_tract!(read_descriptor(&v, "tract")?, t => ok(rep_to_json(&fundamental_rep(&gp_from_json(&t, &v)?)))),
        Command::GpFromRep => with_tract!(read_descriptor(&v, "tract")?, t => ok(gp_to_json(&gp_from_rep(&rep_from_json(&t, &v)?)?))),
        Command::CheckRep => with_tract!(read_descriptor(&v, "tract")?, t => {
            check_representation(&rep_from_json(&t, &v)?)?;
            ok(json!({"r1": "ok", "r2": "ok"}))
        }),
        Command::QuotientCheck => {
            let low = sub(&v, "low")?;
            with_tract!(read_descriptor(low, "tract")?, t => {
                let a = gp_from_json(&t, low)?;
                let b = gp_from_json(&t, sub(&v, "high")?)?;
                let q = is_quotient(&a, &b)?;
                Ok((json!({"quotient": q}), q))
            })
        }
        Command::Vectors { covectors } => with_tract!(read_descriptor(&v, "tract")?, t => vectors_cmd(&gp_from_json(&t, &v)?, *covectors, guard)),
        Command::SupportBases => with_tract!(read_descriptor(&v, "tract")?, t => support_bases_cmd(&gp_from_json(&t, &v)?, guard)),
        Command::NormalBasis(a) => with_tract!(read_descriptor(&v, "tract")?, t => normal_basis_cmd(&gp_from_json(&t, &v)?, &a.set)),
        Command::Tflats => with_tract!(read_descriptor(&v, "tract")?, t => ok(lattice_to_json(&lattice_of_t_flats(&gp_from_json(&t, &v)?)?))),
        Command::CheckLf { star } => with_tract!(read_descriptor(&v, "tract")?, t => {
            let c = collection_from_json(&t, &v)?;
            if *star {
                check_lf_star_axioms(&c)?;
                ok(json!({"lf_star": "ok"}))
            } else {
                let s = check_lf_axioms(&c)?;
                ok(json!({"lf": "ok", "coordinate_lattice": subsets_json(&s.flats)}))
            }
        }),
        Command::GpFromLattice => with_tract!(read_descriptor(&v, "tract")?, t => ok(gp_to_json(&gp_from_lattice(&collection_from_json(&t, &v)?)?))),
        Command::Psi => with_tract!(read_descriptor(&v, "tract")?, t => ok(arrangement_to_json(&psi(&gp_from_json(&t, &v)?)?))),
        Command::CheckPl => with_tract!(read_descriptor(&v, "tract")?, t => {
            let m = check_pl(&arrangement_from_json(&t, &v)?)?;
            ok(json!({"pl": "ok", "matroid": matroid_to_json(&m)}))
        }),
        Command::GpFromPointline => with_tract!(read_descriptor(&v, "tract")?, t => ok(gp_to_json(&gp_from_pointline(&arrangement_from_json(&t, &v)?)?))),
        Command::ArrFromMatrix => with_field!(read_descriptor(&v, "field")?, f => {
            let rows = matrix_from_json(&f, &v)?;
            let (a, phi) = FieldArrangement::from_matrix(f, rows)?;
            ok(json!({"gp": gp_to_json(&phi), "matroid": matroid_to_json(&a.matroid()?)}))
        }),
        Command::VerifyThmD { seed } => with_field!(read_descriptor(&v, "field")?, f => thm_d(f, &v, *seed)),
        Command::CanonicalArr => with_tract!(read_descriptor(&v, "tract")?, t => canonical_cmd(&gp_from_json(&t, &v)?, guard)),
        Command::CheckPropE { flats_only } => with_tract!(read_descriptor(&v, "tract")?, t => {
            let scope = if *flats_only { PropEScope::FlatsOnly } else { PropEScope::All };
            let report = check_prop_e(&gp_from_json(&t, &v)?, guard, scope)?;
            let passed = report.passed();
            Ok((serde_json::to_value(&report).expect("report serializes"), passed))
        }),
        Command::GenRandom(_) => unreachable!("handled above"),
    }
}

fn violation_json(e: &Error) -> Value {
    let mut report = match e {
        Error::Lf(v) => json!({"axiom": v.axiom.to_string(), "detail": v.detail}),
        Error::Pl(v) => json!({"axiom": v.axiom.to_string(), "detail": v.detail}),
        Error::Gp3 { tuple } => json!({"axiom": "GP3", "tuple": tuple}),
        Error::R1 { hyperplane, support } => json!({"axiom": "R1", "hyperplane": hyperplane, "support": support}),
        Error::R2 { triple } => json!({"axiom": "R2", "triple": triple}),
        _ => json!({}),
    };
    report["error"] = Value::String(e.to_string());
    report
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut input = String::new();
    let read = match &cli.input {
        Some(path) => fs::read_to_string(path).map(|s| input = s),
        None if matches!(cli.command, Command::GenRandom(_)) => Ok(()),
        None => io::stdin().read_to_string(&mut input).map(|_| ()),
    };
    let (value, code) = match read {
        Err(e) => (json!({"error": format!("cannot read input: {e}")}), 2),
        Ok(()) => match run(&cli, &input) {
            Ok((v, true)) => (v, 0),
            Ok((v, false)) => (v, 1),
            Err(e) if e.is_violation() => (violation_json(&e), 1),
            Err(e) => (json!({"error": e.to_string()}), 2),
        },
    };
    let mut text = serde_json::to_string_pretty(&value).expect("JSON serializes");
    text.push('\n');
    let written = match &cli.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
