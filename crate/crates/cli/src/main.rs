mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use borel_ideals::dseries::{
    cell_parameter, cohom_degree, e6_example, fiber_point, k_multiplicity, k_spectrum,
    minimal_k_type, parse_weight, rho_z, weight_label, HCParameter, LeviDatum,
};
use borel_ideals::ideals::{enumerate_abelian, enumerate_ad_nilpotent, generators};
use borel_ideals::lattice::{enumerate, lattice_record, PointSet};
use borel_ideals::rootsys::{parse_type, Family, RootSystem};
use borel_ideals::symmspace::{
    cmpt_fiber, fiber_with_cosets, is_compatible_borel, table_i, Tau,
};
use borel_ideals::verify::{key_for, run_check, systems_up_to, CheckOutcome, KEYS};
use borel_ideals::Error;

use output::{join, Format, Report};

#[derive(Parser)]
#[command(name = "borel", version, about = "Ad-nilpotent ideals, alcoves and discrete-series bookkeeping")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Cartan type, either "E6" or a family letter combined with --rank.
    #[arg(long = "type")]
    cartan_type: String,
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeArgs {
    fn system(&self) -> Result<RootSystem, Error> {
        let (f, n) = parse_type(&self.cartan_type, self.rank)?;
        RootSystem::new(f, n)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Root system data.
    Roots {
        #[command(subcommand)]
        cmd: RootsCmd,
    },
    /// Ad-nilpotent and abelian ideals of the Borel subalgebra.
    Ideals {
        #[command(subcommand)]
        cmd: IdealsCmd,
    },
    /// Coweight lattice points of the simplex D.
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// The set X, its fibers and the special ideals.
    Symm {
        #[command(subcommand)]
        cmd: SymmCmd,
    },
    /// Discrete-series bookkeeping.
    Ds {
        #[command(subcommand)]
        cmd: DsCmd,
    },
    /// Run the invariant checks.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum RootsCmd {
    Info(TypeArgs),
}

#[derive(Subcommand)]
enum IdealsCmd {
    Enum {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        abelian: bool,
    },
    Count {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        abelian: bool,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    Enum {
        #[command(flatten)]
        t: TypeArgs,
        /// ztilde, z, ztilde-ab or z-ab.
        #[arg(long, default_value = "ztilde")]
        set: String,
    },
}

#[derive(Subcommand)]
enum SymmCmd {
    /// Points of X of classes 1-3; without --type, one row per family.
    TableI {
        #[arg(long = "type")]
        cartan_type: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// The abelian fiber over τ, with cosets and compatibility.
    Fiber {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        tau: String,
    },
    /// Same as `verify`, restricted to one check.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct CellArgs {
    #[command(flatten)]
    t: TypeArgs,
    #[arg(long)]
    tau: String,
    /// Index into the fiber over τ, or a coweight such as "-w1-w6".
    #[arg(long)]
    z: String,
    /// "rho" for ρ_z, or a weight Σ c_i ϖ_i written like "3w1+w2".
    #[arg(long, default_value = "rho")]
    lambda: String,
}

#[derive(Subcommand)]
enum DsCmd {
    /// Minimal K-type, cohomological degree and the Levi datum of a cell.
    Ktype {
        #[command(flatten)]
        cell: CellArgs,
        /// Also report the multiplicity of this K-type.
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
    /// K-types from symmetric powers of u ∩ p up to degree nmax.
    Spectrum {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
    },
    /// The E6 example with τ = ω∨_1 + ω∨_6.
    E6 {
        #[arg(long, default_value_t = 2)]
        nmax: usize,
    },
}

#[derive(Args, Clone)]
struct VerifyArgs {
    /// Run every check.
    #[arg(long)]
    all: bool,
    /// A check key such as "2.4", "T2.4" or "PropA".
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long = "type")]
    cartan_type: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, default_value_t = 4)]
    max_rank: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json { Format::Json } else { cli.format };
    match run(cli.command) {
        Ok(report) => {
            report.emit(format);
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "schema_version": output::SCHEMA_VERSION, "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Report, Error> {
    match cmd {
        Command::Roots { cmd: RootsCmd::Info(t) } => roots_info(&t.system()?),
        Command::Ideals { cmd } => match cmd {
            IdealsCmd::Enum { t, abelian } => ideals_enum(&t.system()?, abelian),
            IdealsCmd::Count { t, abelian } => ideals_count(&t.system()?, abelian),
        },
        Command::Lattice { cmd: LatticeCmd::Enum { t, set } } => lattice_enum(&t.system()?, &set),
        Command::Symm { cmd } => match cmd {
            SymmCmd::TableI { cartan_type, rank } => table(cartan_type, rank),
            SymmCmd::Fiber { t, tau } => fiber(&t.system()?, &tau),
            SymmCmd::Verify(v) => verify(&v),
        },
        Command::Ds { cmd } => match cmd {
            DsCmd::Ktype { cell, mu, nmax } => ktype(&cell, mu.as_deref(), nmax),
            DsCmd::Spectrum { cell, nmax } => spectrum(&cell, nmax),
            DsCmd::E6 { nmax } => e6(nmax),
        },
        Command::Verify(v) => verify(&v),
    }
}

fn roots_info(rs: &RootSystem) -> Result<Report, Error> {
    let s = rs.summary();
    let rows = vec![
        vec!["type".into(), s.cartan_type.clone()],
        vec!["rank".into(), s.rank.to_string()],
        vec!["marks".into(), join(&s.marks)],
        vec!["coxeter_number".into(), s.coxeter_number.to_string()],
        vec!["positive_roots".into(), s.positive_roots.to_string()],
        vec!["minuscule".into(), join(&s.minuscule)],
        vec!["center_order".into(), s.center_order.to_string()],
        vec!["highest_root".into(), rs.theta().to_string()],
    ];
    let data = json!({ "summary": s, "highest_root": rs.theta(), "positive_roots": rs.positive_roots() });
    Ok(Report::new("roots info", data).table(&["field", "value"], rows))
}

fn ideal_list(rs: &RootSystem, abelian: bool) -> Vec<borel_ideals::RootSet> {
    if abelian {
        enumerate_abelian(rs)
    } else {
        enumerate_ad_nilpotent(rs)
    }
}

fn ideals_enum(rs: &RootSystem, abelian: bool) -> Result<Report, Error> {
    let list = ideal_list(rs, abelian);
    let mut rows = Vec::new();
    let mut data = Vec::new();
    for (k, &i) in list.iter().enumerate() {
        let gens = generators(rs, i);
        rows.push(vec![k.to_string(), i.len().to_string(), join(&gens)]);
        data.push(json!({ "index": k, "size": i.len(), "generators": gens, "roots": rs.roots_of(i) }));
    }
    let data = json!({ "type": rs.label(), "abelian": abelian, "ideals": data });
    Ok(Report::new("ideals enum", data).table(&["index", "size", "generators"], rows))
}

fn ideals_count(rs: &RootSystem, abelian: bool) -> Result<Report, Error> {
    let n = ideal_list(rs, abelian).len();
    let data = json!({ "type": rs.label(), "abelian": abelian, "count": n });
    Ok(Report::new("ideals count", data)
        .table(&["type", "abelian", "count"], vec![vec![rs.label(), abelian.to_string(), n.to_string()]])
        .text(format!("{n}\n")))
}

fn lattice_enum(rs: &RootSystem, set: &str) -> Result<Report, Error> {
    let set = PointSet::parse(set)?;
    let pts = enumerate(rs, set);
    let records = pts
        .par_iter()
        .map(|p| lattice_record(rs, p))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = records
        .iter()
        .map(|r| {
            vec![
                r.coweight.clone(),
                r.tags.join(" "),
                r.ideal.len().to_string(),
                r.center_coset.clone(),
                join(&r.f_word),
            ]
        })
        .collect();
    let data = json!({ "type": rs.label(), "count": records.len(), "points": records });
    Ok(Report::new("lattice enum", data).table(&["coweight", "sets", "ideal_size", "center_coset", "affine_word"], rows))
}

fn representative_systems() -> Vec<RootSystem> {
    [(Family::A, 4), (Family::B, 4), (Family::C, 4), (Family::D, 5), (Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)]
        .into_iter()
        .map(|(f, n)| RootSystem::new(f, n).expect("valid rank"))
        .collect()
}

fn table(cartan_type: Option<String>, rank: Option<usize>) -> Result<Report, Error> {
    let systems = match cartan_type {
        Some(t) => {
            let (f, n) = parse_type(&t, rank)?;
            vec![RootSystem::new(f, n)?]
        }
        None => representative_systems(),
    };
    let table: Vec<_> = systems.iter().map(table_i).collect();
    let rows = table
        .iter()
        .map(|r| vec![r.cartan_type.clone(), r.type1.join(", "), r.type2.join(", "), r.type3.join(", ")])
        .collect();
    Ok(Report::new("symm table-i", &table).table(&["type", "class 1", "class 2", "class 3"], rows))
}

fn fiber(rs: &RootSystem, tau: &str) -> Result<Report, Error> {
    let tau = Tau::parse(rs, tau)?;
    let fiber = fiber_with_cosets(rs, &tau)?;
    let cmpt = cmpt_fiber(rs, &tau).ok();
    let mut rows = Vec::new();
    let mut data = Vec::new();
    for (k, (p, coset)) in fiber.iter().enumerate() {
        let compatible = is_compatible_borel(rs, &p.point)?;
        let degree = cohom_degree(rs, &p.point)?;
        rows.push(vec![
            k.to_string(),
            p.label(),
            compatible.to_string(),
            degree.to_string(),
            join(&coset.reduced_word().iter().map(|i| i + 1).collect::<Vec<_>>()),
        ]);
        data.push(json!({
            "index": k,
            "z": p.label(),
            "point": p.point,
            "compatible": compatible,
            "cohomological_degree": degree,
            "coset_word": coset.reduced_word().iter().map(|i| i + 1).collect::<Vec<_>>(),
        }));
    }
    let data = json!({
        "type": rs.label(),
        "tau": tau.label(),
        "class": tau.class.number(),
        "weyl_index": tau.weyl_index(rs)?,
        "points": data,
        "compatible_fiber": cmpt,
    });
    Ok(Report::new("symm fiber", data).table(&["index", "z", "compatible", "degree", "coset"], rows))
}

fn cell(cell: &CellArgs) -> Result<(RootSystem, Tau, HCParameter), Error> {
    let rs = cell.t.system()?;
    let tau = Tau::parse(&rs, &cell.tau)?;
    let z = fiber_point(&rs, &tau, &cell.z)?;
    let hc = cell_parameter(&rs, &tau, &z, &cell.lambda)?;
    Ok((rs, tau, hc))
}

fn ktype(args: &CellArgs, mu: Option<&str>, nmax: usize) -> Result<Report, Error> {
    let (rs, tau, hc) = cell(args)?;
    let mu_l = minimal_k_type(&rs, &tau, &hc)?;
    let levi = LeviDatum::new(&rs, &hc.z.point);
    let compatible = is_compatible_borel(&rs, &hc.z.point)?;
    let degree = cohom_degree(&rs, &hc.z.point)?;
    let mut rows = vec![
        vec!["z".into(), hc.z.label()],
        vec!["lambda".into(), weight_label(&rs, &hc.lambda)],
        vec!["rho_z".into(), weight_label(&rs, &rho_z(&rs, &hc.z.point))],
        vec!["minimal_k_type".into(), weight_label(&rs, &mu_l)],
        vec!["cohomological_degree".into(), degree.to_string()],
        vec!["compatible".into(), compatible.to_string()],
        vec!["dim_u_p".into(), levi.u_p.len().to_string()],
        vec!["dim_u_k".into(), levi.u_k.len().to_string()],
    ];
    let mult = match mu {
        Some(m) => {
            let k = k_multiplicity(&rs, &tau, &hc, &parse_weight(&rs, m)?, nmax)?;
            rows.push(vec!["multiplicity".into(), k.total.to_string()]);
            rows.push(vec!["per_degree".into(), join(&k.per_degree)]);
            rows.push(vec!["complete".into(), k.complete.to_string()]);
            Some(k)
        }
        None => None,
    };
    let data = json!({
        "type": rs.label(),
        "tau": tau.label(),
        "parameter": hc,
        "minimal_k_type": mu_l,
        "minimal_k_type_weight": weight_label(&rs, &mu_l),
        "cohomological_degree": degree,
        "compatible": compatible,
        "levi": levi.summary(&rs),
        "multiplicity": mult,
    });
    Ok(Report::new("ds ktype", data).table(&["field", "value"], rows))
}

fn spectrum(args: &CellArgs, nmax: usize) -> Result<Report, Error> {
    let (rs, tau, hc) = cell(args)?;
    let s = k_spectrum(&rs, &tau, &hc, nmax)?;
    let mut rows = Vec::new();
    for slice in &s.slices {
        for t in &slice.k_types {
            rows.push(vec![
                slice.n.to_string(),
                weight_label(&rs, &t.highest_weight),
                t.multiplicity.to_string(),
                t.dimension.to_string(),
            ]);
        }
    }
    Ok(Report::new("ds spectrum", &s).table(&["n", "highest_weight", "multiplicity", "m_dimension"], rows))
}

fn e6(nmax: usize) -> Result<Report, Error> {
    let r = e6_example(nmax)?;
    let rs = RootSystem::new(Family::E, 6)?;
    let mut rows = Vec::new();
    for d in &r.degrees {
        for t in &d.irreducible {
            rows.push(vec![
                d.n.to_string(),
                weight_label(&rs, &t.highest_weight),
                t.multiplicity.to_string(),
                t.dimension.to_string(),
                d.family_terms.len().to_string(),
            ]);
        }
    }
    let mut report = Report::new("ds e6", &r).table(&["n", "highest_weight", "multiplicity", "dimension", "family_terms"], rows);
    report.ok = r.degrees.iter().all(|d| d.character_identity);
    Ok(report)
}

fn verify(v: &VerifyArgs) -> Result<Report, Error> {
    let keys: Vec<&str> = match (&v.theorem, v.all) {
        (Some(t), _) => vec![key_for(t)?],
        (None, true) => KEYS.to_vec(),
        (None, false) => return Err(Error::Parse("pass --all or --theorem".into())),
    };
    let systems = match &v.cartan_type {
        Some(t) => {
            let (f, n) = parse_type(t, v.rank)?;
            vec![RootSystem::new(f, n)?]
        }
        None => systems_up_to(v.max_rank),
    };
    let jobs: Vec<(usize, usize)> = (0..systems.len())
        .flat_map(|s| (0..keys.len()).map(move |k| (s, k)))
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|&(s, k)| run_check(keys[k], &systems[s]))
        .collect::<Result<Vec<CheckOutcome>, _>>()?;
    let failures: Vec<&CheckOutcome> = outcomes.iter().filter(|o| !o.passed).collect();
    for f in &failures {
        eprintln!("{}", serde_json::to_string(f).expect("serializable"));
    }
    let mut header = vec!["type".to_string()];
    header.extend(keys.iter().map(|k| k.to_string()));
    let mut rows = Vec::new();
    for (s, rs) in systems.iter().enumerate() {
        let mut row = vec![rs.label()];
        row.extend((0..keys.len()).map(|k| {
            if outcomes[s * keys.len() + k].passed { "pass" } else { "FAIL" }.to_string()
        }));
        rows.push(row);
    }
    let text = if keys.len() == 1 {
        outcomes
            .iter()
            .map(|o| format!("{} {} {}: {}\n", if o.passed { "pass" } else { "FAIL" }, o.key, o.cartan_type, o.detail))
            .collect()
    } else {
        String::new()
    };
    let data = json!({ "checks": outcomes, "failures": failures.len() });
    let headers: Vec<&str> = header.iter().map(|s| s.as_str()).collect();
    let mut report = Report::new("verify", data).table(&headers, rows);
    if keys.len() == 1 {
        report = report.text(text);
    }
    report.ok = failures.is_empty();
    Ok(report)
}
