//! Command-line front end over the arithyp library: field invariants,
//! quaternion algebra ramification, hyperbolic geometry kernels, zeta
//! values, covolumes and lattice classification, with deterministic plain
//! or JSON output and batch execution.

mod batch;
mod output;
mod parse;

use clap::{Parser, Subcommand};

use arithyp::hyperbolic::{
    bessel_k, evaluate_cusp_expansion, h2_act, h2_distance, h3_act_components, h3_act_quaternion,
    h3_distance, slash_h3, sym_power, CuspExpansion,
};
use arithyp::lattices::{
    classify, clozel_applies, cusp_count, cuspidal_vanishing_known, eisenstein_dimension,
    LatticeKind,
};
use arithyp::numfield::{class_number, splitting_type};
use arithyp::quatalg::{
    discriminant_ideal, is_division, place_label, ramification_set, realize_ramification_set,
    DEFAULT_SEARCH_BOUND,
};
use arithyp::zetavol::{
    arithmetic_covolume, bianchi_volume, dedekind_zeta2, VolumeResult, DEFAULT_EPS,
    DEFAULT_TERM_CAP,
};
use arithyp::{NumberField, QuaternionAlgebra, RamificationSet};

use output::{fmt_f64, json_complex, json_complex_vec, json_str, json_str_array};
use parse::field_spec_string;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "arithyp",
    version,
    about = "Arithmetic invariants of quaternionic Kleinian and Fuchsian lattices"
)]
pub struct Cli {
    /// Emit JSON (stable key order, floats at 10 significant digits)
    #[arg(long, global = true)]
    pub json: bool,
    /// Target accuracy for zeta/volume evaluations (default 1e-7, or the
    /// ARITHYP_EPS environment variable)
    #[arg(long, global = true)]
    pub eps: Option<f64>,
    /// Cap on Dirichlet-series terms in zeta evaluations
    #[arg(long, global = true)]
    pub max_prime: Option<u64>,
    /// Entry bound for the ramification realization search
    #[arg(long, global = true)]
    pub search_bound: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number field constructors and invariants
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Quaternion algebra arithmetic and ramification
    Quat {
        #[command(subcommand)]
        cmd: QuatCmd,
    },
    /// Hyperbolic geometry kernels
    Geom {
        #[command(subcommand)]
        cmd: GeomCmd,
    },
    /// Dedekind zeta value at s = 2 with a certified bound
    Zeta {
        #[arg(long)]
        field: String,
    },
    /// Hyperbolic covolumes
    Volume {
        #[command(subcommand)]
        cmd: VolumeCmd,
    },
    /// Arithmetic lattice classification
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// Run a batch of invocations from a config file
    Batch {
        /// One invocation per line (subcommand and flags, whitespace
        /// separated); '#' starts a comment
        #[arg(long)]
        config: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum FieldCmd {
    /// Discriminant and signature
    Info {
        #[arg(long)]
        field: String,
    },
    /// Splitting type of a rational prime
    Split {
        #[arg(long)]
        field: String,
        #[arg(long)]
        p: u64,
    },
    /// Class number of an imaginary quadratic field
    ClassNumber {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum QuatCmd {
    /// Ramification set, discriminant ideal and division test
    Ramify(AlgebraArgs),
    /// Reduced norm, trace and conjugate of an element
    Norm {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Quaternion coordinates e0;e1;e2;e3 on the basis 1,i,j,ij
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Product of two elements
    Mul {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Find integers (a, b) over Q with a prescribed ramification set
    Realize {
        /// Comma-separated places: primes and/or `inf` (or `none`)
        #[arg(long)]
        places: String,
    },
}

#[derive(clap::Args, Debug)]
pub struct AlgebraArgs {
    #[arg(long)]
    pub field: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Subcommand, Debug)]
pub enum GeomCmd {
    /// Hyperbolic distance in the upper half-plane
    Dist2 {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Hyperbolic distance in upper half-space
    Dist3 {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Action of a real unimodular matrix on the half-plane
    Act2 {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Action of a complex unimodular matrix on half-space
    Act3 {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// `components` (explicit formulas) or `quaternion` (Hamiltonian
        /// division); the two agree to working precision
        #[arg(long, default_value = "components")]
        via: String,
    },
    /// Weight-2 slash of a Fourier-Bessel expansion
    Slash {
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Coefficients m,n:re,im separated by ';'
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Symmetric power of a 2x2 complex matrix
    Sym {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: String,
    },
    /// Modified Bessel function of the second kind, order 0 or 1
    Bessel {
        #[arg(long)]
        nu: u8,
        #[arg(long)]
        y: f64,
    },
    /// Evaluate a Fourier-Bessel expansion at a point
    Expand {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum VolumeCmd {
    /// Volume of a Bianchi orbifold
    Bianchi {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Covolume of the Kleinian lattice of a maximal order in (a, b)/K
    Covol(AlgebraArgs),
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    /// Fuchsian/Kleinian classification and cocompactness
    Classify(AlgebraArgs),
    /// Cusp count of a Bianchi orbifold (the class number)
    Cusps {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Dimension of the Eisenstein part of H^1
    EisDim {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Membership in the known vanishing-cuspidal-cohomology list
    CuspidalVanishing {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Residue-degree-one criterion for the ramified places
    Clozel(AlgebraArgs),
}

enum CmdError {
    Usage(String),
    Domain(String),
    /// Failure that still produced well-formed output (batch with failed
    /// items): the output is printed as-is with a nonzero status.
    PartialOutput(String),
}

fn usage(msg: impl Into<String>) -> CmdError {
    CmdError::Usage(msg.into())
}

/// Domain error carrying the library's error name (nested variants joined
/// with ':', e.g. Field:NotSquarefree).
fn domain<E: core::fmt::Debug + core::fmt::Display>(e: E) -> CmdError {
    let dbg = format!("{e:?}");
    let mut names: Vec<String> = Vec::new();
    for chunk in dbg.split('(') {
        let ident: String = chunk
            .chars()
            .take_while(|c| c.is_alphanumeric() || *c == '_')
            .collect();
        if ident.is_empty() || ident.chars().next().is_some_and(|c| !c.is_uppercase()) {
            break;
        }
        names.push(ident);
    }
    if names.is_empty() {
        names.push("Error".into());
    }
    CmdError::Domain(format!("{}: {e}", names.join(":")))
}

struct Ctx {
    json: bool,
    eps: f64,
    term_cap: u64,
    search_bound: i64,
}

/// Runs one invocation; returns (exit code, output text).
pub fn run(args: &[String]) -> (i32, String) {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let env_eps = std::env::var("ARITHYP_EPS")
        .ok()
        .and_then(|v| v.parse::<f64>().ok());
    let ctx = Ctx {
        json: cli.json,
        eps: cli.eps.or(env_eps).unwrap_or(DEFAULT_EPS),
        term_cap: cli.max_prime.unwrap_or(DEFAULT_TERM_CAP),
        search_bound: cli.search_bound.unwrap_or(DEFAULT_SEARCH_BOUND),
    };
    match dispatch(&ctx, &cli.command) {
        Ok(out) => (EXIT_OK, out),
        Err(CmdError::Usage(msg)) => (EXIT_USAGE, format!("usage error: {msg}\n")),
        Err(CmdError::Domain(msg)) => (EXIT_DOMAIN, format!("error: {msg}\n")),
        Err(CmdError::PartialOutput(body)) => (EXIT_DOMAIN, body),
    }
}

fn dispatch(ctx: &Ctx, command: &Command) -> Result<String, CmdError> {
    match command {
        Command::Field { cmd } => field_cmd(ctx, cmd),
        Command::Quat { cmd } => quat_cmd(ctx, cmd),
        Command::Geom { cmd } => geom_cmd(ctx, cmd),
        Command::Zeta { field } => zeta_cmd(ctx, field),
        Command::Volume { cmd } => volume_cmd(ctx, cmd),
        Command::Lattice { cmd } => lattice_cmd(ctx, cmd),
        Command::Batch { config } => batch::run_batch(ctx.json, config),
    }
}

fn parse_algebra(args: &AlgebraArgs) -> Result<(NumberField, QuaternionAlgebra), CmdError> {
    let field = parse::parse_field_spec(&args.field).map_err(usage)?;
    let a = parse::parse_element(&field, &args.a).map_err(usage)?;
    let b = parse::parse_element(&field, &args.b).map_err(usage)?;
    let alg = QuaternionAlgebra::new(field.clone(), a, b).map_err(domain)?;
    Ok((field, alg))
}

fn ram_labels(field: &NumberField, ram: &RamificationSet) -> (Vec<String>, Vec<String>) {
    let finite = ram.finite_places().map(|p| place_label(field, p)).collect();
    let infinite = ram
        .infinite_places()
        .map(|p| place_label(field, p))
        .collect();
    (finite, infinite)
}

fn field_cmd(ctx: &Ctx, cmd: &FieldCmd) -> Result<String, CmdError> {
    match cmd {
        FieldCmd::Info { field } => {
            let k = parse::parse_field_spec(field).map_err(usage)?;
            let (r, s) = k.signature();
            let disc = k.discriminant();
            if ctx.json {
                Ok(format!(
                    "{{\"field\":{},\"degree\":{},\"discriminant\":{},\"signature\":[{},{}]}}\n",
                    json_str(&field_spec_string(&k)),
                    k.degree(),
                    disc,
                    r,
                    s
                ))
            } else {
                Ok(format!(
                    "field {}: degree {}, discriminant {}, signature ({}, {})\n",
                    field_spec_string(&k),
                    k.degree(),
                    disc,
                    r,
                    s
                ))
            }
        }
        FieldCmd::Split { field, p } => {
            let k = parse::parse_field_spec(field).map_err(usage)?;
            if !arithyp::modpoly::is_prime(*p) {
                return Err(usage(format!("p = {p} is not a prime")));
            }
            let ideals = splitting_type(&k, *p);
            if ctx.json {
                let items: Vec<String> = ideals
                    .iter()
                    .map(|pi| format!("{{\"e\":{},\"f\":{},\"norm\":{}}}", pi.e, pi.f, pi.norm))
                    .collect();
                Ok(format!(
                    "{{\"field\":{},\"p\":{},\"ideals\":[{}]}}\n",
                    json_str(&field_spec_string(&k)),
                    p,
                    items.join(",")
                ))
            } else {
                let items: Vec<String> = ideals
                    .iter()
                    .map(|pi| format!("(e={}, f={}, norm={})", pi.e, pi.f, pi.norm))
                    .collect();
                Ok(format!("{p} factors as: {}\n", items.join(" * ")))
            }
        }
        FieldCmd::ClassNumber { d } => {
            let k = arithyp::numfield::make_quadratic(*d).map_err(domain)?;
            let h = class_number(&k).map_err(domain)?;
            if ctx.json {
                Ok(format!("{{\"d\":{d},\"class_number\":{h}}}\n"))
            } else {
                Ok(format!("h = {h}\n"))
            }
        }
    }
}

fn quat_cmd(ctx: &Ctx, cmd: &QuatCmd) -> Result<String, CmdError> {
    match cmd {
        QuatCmd::Ramify(args) => {
            let (field, alg) = parse_algebra(args)?;
            let ram = ramification_set(&alg).map_err(domain)?;
            let disc = discriminant_ideal(&alg).map_err(domain)?;
            let division = is_division(&alg).map_err(domain)?;
            let (finite, infinite) = ram_labels(&field, &ram);
            if ctx.json {
                Ok(format!(
                    "{{\"finite\":{},\"infinite\":{},\"discriminant_norm\":{},\"division\":{}}}\n",
                    json_str_array(&finite),
                    json_str_array(&infinite),
                    disc.norm_product,
                    division
                ))
            } else {
                Ok(format!(
                    "{{finite: [{}], infinite: [{}]}}, discriminant norm {}, {}\n",
                    finite.join(", "),
                    infinite.join(", "),
                    disc.norm_product,
                    if division {
                        "division algebra"
                    } else {
                        "split (matrix algebra)"
                    }
                ))
            }
        }
        QuatCmd::Norm { alg: args, x } => {
            let (field, alg) = parse_algebra(args)?;
            let coords = parse::parse_quat_coords(&field, x).map_err(usage)?;
            let u = alg.element(coords);
            let nrd = field.format_element(&u.reduced_norm());
            let trd = field.format_element(&u.reduced_trace());
            let conj: Vec<String> = u
                .conjugate()
                .coords()
                .iter()
                .map(|c| field.format_element(c))
                .collect();
            if ctx.json {
                Ok(format!(
                    "{{\"nrd\":{},\"trd\":{},\"conjugate\":{}}}\n",
                    json_str(&nrd),
                    json_str(&trd),
                    json_str_array(&conj)
                ))
            } else {
                Ok(format!(
                    "nrd = {nrd}, trd = {trd}, conjugate = [{}]\n",
                    conj.join("; ")
                ))
            }
        }
        QuatCmd::Mul { alg: args, u, v } => {
            let (field, alg) = parse_algebra(args)?;
            let u = alg.element(parse::parse_quat_coords(&field, u).map_err(usage)?);
            let v = alg.element(parse::parse_quat_coords(&field, v).map_err(usage)?);
            let w = u.multiply(&v).map_err(domain)?;
            let coords: Vec<String> = w.coords().iter().map(|c| field.format_element(c)).collect();
            if ctx.json {
                Ok(format!("{{\"product\":{}}}\n", json_str_array(&coords)))
            } else {
                Ok(format!("product = [{}]\n", coords.join("; ")))
            }
        }
        QuatCmd::Realize { places } => {
            let target = parse::parse_places(places).map_err(usage)?;
            let (a, b) = realize_ramification_set(&target, ctx.search_bound).map_err(domain)?;
            if ctx.json {
                Ok(format!("{{\"a\":{a},\"b\":{b}}}\n"))
            } else {
                Ok(format!("(a, b) = ({a}, {b})\n"))
            }
        }
    }
}

fn geom_cmd(ctx: &Ctx, cmd: &GeomCmd) -> Result<String, CmdError> {
    match cmd {
        GeomCmd::Dist2 { p, q } => {
            let p = parse::parse_point2(p).map_err(usage)?;
            let q = parse::parse_point2(q).map_err(usage)?;
            scalar_out(ctx, "distance", h2_distance(&p, &q))
        }
        GeomCmd::Dist3 { p, q } => {
            let p = parse::parse_point3(p).map_err(usage)?;
            let q = parse::parse_point3(q).map_err(usage)?;
            scalar_out(ctx, "distance", h3_distance(&p, &q))
        }
        GeomCmd::Act2 { gamma, z } => {
            let g = parse::parse_moebius(gamma).map_err(usage)?;
            if !g.has_real_entries(1e-12) {
                return Err(usage("the half-plane action needs real matrix entries"));
            }
            let z = parse::parse_point2(z).map_err(usage)?;
            let w = h2_act(&g, &z);
            if ctx.json {
                Ok(format!(
                    "{{\"x\":{},\"y\":{}}}\n",
                    fmt_f64(w.x),
                    fmt_f64(w.y)
                ))
            } else {
                Ok(format!("gamma z = ({}, {})\n", fmt_f64(w.x), fmt_f64(w.y)))
            }
        }
        GeomCmd::Act3 { gamma, z, via } => {
            let g = parse::parse_moebius(gamma).map_err(usage)?;
            let z = parse::parse_point3(z).map_err(usage)?;
            let w = match via.as_str() {
                "components" => h3_act_components(&g, &z),
                "quaternion" => h3_act_quaternion(&g, &z),
                other => {
                    return Err(usage(format!(
                        "--via must be components or quaternion, got '{other}'"
                    )))
                }
            };
            if ctx.json {
                Ok(format!(
                    "{{\"x1\":{},\"x2\":{},\"y\":{}}}\n",
                    fmt_f64(w.x.re),
                    fmt_f64(w.x.im),
                    fmt_f64(w.y)
                ))
            } else {
                Ok(format!(
                    "gamma z = ({}, {}, {})\n",
                    fmt_f64(w.x.re),
                    fmt_f64(w.x.im),
                    fmt_f64(w.y)
                ))
            }
        }
        GeomCmd::Slash {
            field,
            k,
            gamma,
            z,
            coeffs,
        } => {
            if *k != 2 {
                return Err(usage(
                    "the expansion-backed slash is weight 2 (3-component values)",
                ));
            }
            let kfield = parse::parse_field_spec(field).map_err(usage)?;
            let quad = match kfield {
                NumberField::Quadratic(q) if q.is_imaginary() => q,
                _ => {
                    return Err(usage(
                        "expansions live over imaginary quadratic fields (d=<negative>)",
                    ))
                }
            };
            let g = parse::parse_moebius(gamma).map_err(usage)?;
            let z = parse::parse_point3(z).map_err(usage)?;
            let coeffs = parse::parse_coeffs(coeffs).map_err(usage)?;
            let expansion = CuspExpansion::new(quad, coeffs).map_err(domain)?;
            let f = move |w: &arithyp::hyperbolic::PointH3| {
                evaluate_cusp_expansion(&expansion, w)
                    .map(|v| v.value.to_vec())
                    .unwrap_or_else(|_| vec![Default::default(); 3])
            };
            let slashed = slash_h3(f, 2, g)(&z);
            if ctx.json {
                Ok(format!("{{\"value\":{}}}\n", json_complex_vec(&slashed)))
            } else {
                let parts: Vec<String> = slashed
                    .iter()
                    .map(|c| format!("({}, {})", fmt_f64(c.re), fmt_f64(c.im)))
                    .collect();
                Ok(format!("(F|_2 gamma)(z) = [{}]\n", parts.join(", ")))
            }
        }
        GeomCmd::Sym { k, m } => {
            let m = parse::parse_matrix2(m).map_err(usage)?;
            let s = sym_power(*k, &m);
            let rows: Vec<String> = (0..s.size())
                .map(|i| {
                    let cols: Vec<String> =
                        (0..s.size()).map(|j| json_complex(&s.at(i, j))).collect();
                    format!("[{}]", cols.join(","))
                })
                .collect();
            if ctx.json {
                Ok(format!("{{\"k\":{},\"matrix\":[{}]}}\n", k, rows.join(",")))
            } else {
                Ok(format!("sym^{k}(M) = [{}]\n", rows.join(", ")))
            }
        }
        GeomCmd::Bessel { nu, y } => {
            if *nu > 1 {
                return Err(usage("--nu must be 0 or 1"));
            }
            let v = bessel_k(*nu, *y).map_err(domain)?;
            if ctx.json {
                Ok(format!(
                    "{{\"nu\":{},\"y\":{},\"value\":{}}}\n",
                    nu,
                    fmt_f64(*y),
                    fmt_f64(v)
                ))
            } else {
                Ok(format!("K_{nu}({y}) = {}\n", fmt_f64(v)))
            }
        }
        GeomCmd::Expand { field, coeffs, z } => {
            let kfield = parse::parse_field_spec(field).map_err(usage)?;
            let quad = match kfield {
                NumberField::Quadratic(q) if q.is_imaginary() => q,
                _ => {
                    return Err(usage(
                        "expansions live over imaginary quadratic fields (d=<negative>)",
                    ))
                }
            };
            let coeffs = parse::parse_coeffs(coeffs).map_err(usage)?;
            let z = parse::parse_point3(z).map_err(usage)?;
            let expansion = CuspExpansion::new(quad, coeffs).map_err(domain)?;
            let v = evaluate_cusp_expansion(&expansion, &z).map_err(domain)?;
            if ctx.json {
                Ok(format!(
                    "{{\"value\":{},\"tail_hint\":{}}}\n",
                    json_complex_vec(&v.value),
                    fmt_f64(v.tail_hint)
                ))
            } else {
                let parts: Vec<String> = v
                    .value
                    .iter()
                    .map(|c| format!("({}, {})", fmt_f64(c.re), fmt_f64(c.im)))
                    .collect();
                Ok(format!(
                    "F(z) = [{}], tail hint {}\n",
                    parts.join(", "),
                    fmt_f64(v.tail_hint)
                ))
            }
        }
    }
}

fn scalar_out(ctx: &Ctx, name: &str, v: f64) -> Result<String, CmdError> {
    if ctx.json {
        Ok(format!("{{\"{name}\":{}}}\n", fmt_f64(v)))
    } else {
        Ok(format!("{name} = {}\n", fmt_f64(v)))
    }
}

fn zeta_json(z: &arithyp::zetavol::ZetaResult) -> String {
    format!(
        "{{\"value\":{},\"error_bound\":{},\"terms_used\":{}}}",
        fmt_f64(z.value),
        fmt_f64(z.error_bound),
        z.terms_used
    )
}

fn zeta_cmd(ctx: &Ctx, field: &str) -> Result<String, CmdError> {
    let k = parse::parse_field_spec(field).map_err(usage)?;
    let z = dedekind_zeta2(&k, ctx.eps, ctx.term_cap).map_err(domain)?;
    if ctx.json {
        Ok(format!(
            "{{\"field\":{},\"value\":{},\"error_bound\":{},\"terms_used\":{}}}\n",
            json_str(&field_spec_string(&k)),
            fmt_f64(z.value),
            fmt_f64(z.error_bound),
            z.terms_used
        ))
    } else {
        Ok(format!(
            "zeta_K(2) = {} (error bound {}, {} terms)\n",
            fmt_f64(z.value),
            fmt_f64(z.error_bound),
            z.terms_used
        ))
    }
}

fn volume_json(v: &VolumeResult) -> String {
    let norms: Vec<String> = v.finite_norms.iter().map(|n| n.to_string()).collect();
    format!(
        "{{\"value\":{},\"error_bound\":{},\"zeta\":{},\"finite_norms\":[{}],\"real_places\":{}}}",
        fmt_f64(v.value),
        fmt_f64(v.error_bound),
        zeta_json(&v.zeta),
        norms.join(","),
        v.real_places
    )
}

fn volume_cmd(ctx: &Ctx, cmd: &VolumeCmd) -> Result<String, CmdError> {
    match cmd {
        VolumeCmd::Bianchi { d } => {
            let v = bianchi_volume(*d, ctx.eps, ctx.term_cap).map_err(domain)?;
            if ctx.json {
                Ok(format!("{{\"d\":{d},\"volume\":{}}}\n", volume_json(&v)))
            } else {
                Ok(format!(
                    "vol = {} (error bound {})\n",
                    fmt_f64(v.value),
                    fmt_f64(v.error_bound)
                ))
            }
        }
        VolumeCmd::Covol(args) => {
            let (_, alg) = parse_algebra(args)?;
            let v = arithmetic_covolume(&alg, ctx.eps, ctx.term_cap).map_err(domain)?;
            if ctx.json {
                Ok(format!(
                    "{{\"field\":{},\"volume\":{}}}\n",
                    json_str(&field_spec_string(&v.field)),
                    volume_json(&v)
                ))
            } else {
                let norms: Vec<String> = v.finite_norms.iter().map(|n| n.to_string()).collect();
                Ok(format!(
                    "vol = {} (error bound {}; ramified finite norms [{}], {} real places)\n",
                    fmt_f64(v.value),
                    fmt_f64(v.error_bound),
                    norms.join(", "),
                    v.real_places
                ))
            }
        }
    }
}

fn lattice_cmd(ctx: &Ctx, cmd: &LatticeCmd) -> Result<String, CmdError> {
    match cmd {
        LatticeCmd::Classify(args) => {
            let (field, alg) = parse_algebra(args)?;
            let c = classify(&alg).map_err(domain)?;
            let kind = match c.kind {
                LatticeKind::Fuchsian => "fuchsian",
                LatticeKind::Kleinian => "kleinian",
            };
            let (finite, infinite) = ram_labels(&field, &c.ramification);
            if ctx.json {
                Ok(format!(
                    "{{\"kind\":{},\"cocompact\":{},\"finite\":{},\"infinite\":{}}}\n",
                    json_str(kind),
                    c.cocompact,
                    json_str_array(&finite),
                    json_str_array(&infinite)
                ))
            } else {
                Ok(format!(
                    "{kind}, {}; ramified at {{finite: [{}], infinite: [{}]}}\n",
                    if c.cocompact {
                        "cocompact"
                    } else {
                        "non-cocompact"
                    },
                    finite.join(", "),
                    infinite.join(", ")
                ))
            }
        }
        LatticeCmd::Cusps { d } => {
            let n = cusp_count(*d).map_err(domain)?;
            if ctx.json {
                Ok(format!("{{\"d\":{d},\"cusps\":{n}}}\n"))
            } else {
                Ok(format!("cusps = {n}\n"))
            }
        }
        LatticeCmd::EisDim { d } => {
            let n = eisenstein_dimension(*d).map_err(domain)?;
            if ctx.json {
                Ok(format!("{{\"d\":{d},\"dimension\":{n}}}\n"))
            } else {
                Ok(format!("dim H^1_Eis = {n}\n"))
            }
        }
        LatticeCmd::CuspidalVanishing { d } => {
            let v = cuspidal_vanishing_known(*d).map_err(domain)?;
            if ctx.json {
                Ok(format!("{{\"d\":{d},\"vanishing\":{v}}}\n"))
            } else {
                Ok(format!(
                    "cuspidal cohomology known to vanish: {}\n",
                    if v { "yes" } else { "no" }
                ))
            }
        }
        LatticeCmd::Clozel(args) => {
            let (_, alg) = parse_algebra(args)?;
            let v = clozel_applies(&alg).map_err(domain)?;
            if ctx.json {
                Ok(format!("{{\"applies\":{v}}}\n"))
            } else {
                Ok(format!(
                    "residue-degree-one criterion applies: {}\n",
                    if v { "yes" } else { "no" }
                ))
            }
        }
    }
}
