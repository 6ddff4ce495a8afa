use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hcsf_core::algebra::{convert, Basis, Polynomial, SymFunc};
use hcsf_core::basis::{
    clique_basis, loop_bases, multipartite_self_basis, p_h, span_rank, union_cliques_basis, Construction, LoopKind,
};
use hcsf_core::chrom::{find_sn1_collision, h_chromatic_polynomial};
use hcsf_core::graph::{all_trees, build_family, parse_edge_list, parse_graph6, to_graph6, Caterpillar, Graph, Spider};
use hcsf_core::hom::{hcsf, hcsf_tilde, hom_count, self_csf, spider_endomorphism_count};
use hcsf_core::pexp::{complete_bipartite_p_expansion, k2n_p_expansion, kmn_oracle, kmn_property_check, star_p_expansion};
use hcsf_core::recursion::{hcsf_disjoint_h, kn1_csf};
use hcsf_core::repro;
use hcsf_core::self_analysis::{
    caterpillar_aut_count, caterpillar_f0fs, caterpillar_spine_degrees, self_csf_report, spider_endo_approximation,
    spider_m21_ratio,
};
use hcsf_core::{Error, Result};

#[derive(Parser)]
#[command(name = "hcsf", version, about = "Exact H-chromatic symmetric functions")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Human-readable layout instead of the line-oriented default.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Mn,
    M,
    Mt,
    P,
}

#[derive(Clone, Copy, ValueEnum)]
enum PexpKind {
    Star,
    K2n,
    Kmn,
}

/// Graphs are given as an edge-list file, a graph6 file, or a family descriptor such as `C:5`.
#[derive(Subcommand)]
enum Command {
    /// X_G^H in the chosen basis.
    Compute {
        g: String,
        h: String,
        #[arg(long, value_enum, default_value = "mn")]
        basis: BasisArg,
        /// Print only the number of homomorphisms.
        #[arg(long)]
        count_only: bool,
    },
    /// Self-CSF of G, optionally with the invariants read off it.
    #[command(name = "self")]
    SelfCsf {
        g: String,
        #[arg(long)]
        report: bool,
        /// Declare G connected, enabling star-sum recovery.
        #[arg(long)]
        connected: bool,
    },
    /// Checks that all trees up to the given order have distinct self-CSFs.
    ScanTrees {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Spider endomorphism counts and m21 ratio.
    Spider {
        #[arg(long, value_delimiter = ',', required = true)]
        legs: Vec<usize>,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        approx: bool,
    },
    /// Caterpillar invariants recovered from its self-CSF.
    Caterpillar {
        /// Leaf counts along the spine.
        #[arg(long, value_delimiter = ',', required = true)]
        leaves: Vec<usize>,
    },
    /// Closed-form p-expansion for complete bipartite targets.
    Pexp {
        #[arg(value_enum)]
        kind: PexpKind,
        g: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        /// Compare with the oracle and check the part-count and sign properties.
        #[arg(long)]
        check: bool,
    },
    /// Basis constructions.
    Basis {
        #[command(subcommand)]
        which: BasisCommand,
        /// Dump the coefficient matrix as TSV.
        #[arg(long, global = true)]
        tsv: bool,
    },
    /// Proportion of n-vertex targets whose H-CSFs span degree n.
    Phn {
        #[arg(long)]
        n: usize,
    },
    /// Rank of symmetric functions read one per line from files.
    Rank {
        #[arg(long, num_args = 1.., required = true)]
        rows: Vec<PathBuf>,
    },
    /// Recursive identities.
    Recurse {
        #[command(subcommand)]
        which: RecurseCommand,
    },
    /// H-chromatic polynomial, coefficients in ascending degree.
    Poly {
        g: String,
        h: String,
        #[arg(long)]
        at: Option<i64>,
    },
    /// Smallest pair with equal S_n^1-chromatic polynomials and different S_n^1-CSFs.
    Sn1Collide {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        max_v: usize,
    },
    /// Runs an acceptance criterion by id or number, or `all`.
    Repro { criterion: String },
}

#[derive(Subcommand)]
enum BasisCommand {
    Multipartite {
        #[arg(long)]
        n: usize,
    },
    Clique {
        h: String,
        #[arg(long)]
        n: usize,
    },
    UnionCliques {
        h: String,
    },
    Loops(LoopArgs),
}

#[derive(Args)]
struct LoopArgs {
    /// `path` or `edgeless`.
    #[arg(long, default_value = "path")]
    kind: String,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum RecurseCommand {
    /// X̃_G^H for H given as disjoint pieces.
    Disjoint {
        g: String,
        #[arg(required = true)]
        pieces: Vec<String>,
    },
    /// X_G^{K_n^1} from weighted CSFs of contractions.
    Kn1 {
        g: String,
        #[arg(long)]
        n: usize,
    },
}

/// Rendered output of one command.
struct Output {
    text: String,
    json: Value,
}

fn load_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
        return if first.parse::<usize>().is_ok() { parse_edge_list(&text) } else { parse_graph6(first) };
    }
    build_family(arg)
}

fn symfunc_json(f: &SymFunc) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(l, c)| json!({ "partition": l.parts(), "coefficient": c.to_string() }))
        .collect();
    json!({ "basis": f.basis().to_string(), "degree": f.degree(), "terms": terms })
}

fn symfunc_text(f: &SymFunc, pretty: bool) -> String {
    if pretty {
        format!("{f}\n")
    } else {
        f.to_machine()
    }
}

fn poly_json(p: &Polynomial) -> Value {
    json!(p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn poly_text(p: &Polynomial, pretty: bool) -> String {
    if pretty {
        format!("{p}\n")
    } else {
        let c: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
        format!("{}\n", c.join(" "))
    }
}

fn graph_label(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("{:?}", g.edges()))
}

fn symfunc_output(f: &SymFunc, pretty: bool) -> Output {
    Output { text: symfunc_text(f, pretty), json: symfunc_json(f) }
}

fn compute(g: &str, h: &str, basis: BasisArg, count_only: bool, pretty: bool) -> Result<Output> {
    let (g, h) = (load_graph(g)?, load_graph(h)?);
    if count_only {
        let c = hom_count(&g, &h);
        return Ok(Output { text: format!("{c}\n"), json: json!({ "homomorphisms": c.to_string() }) });
    }
    let f = match basis {
        BasisArg::Mn => hcsf(&g, &h),
        BasisArg::Mt => hcsf_tilde(&g, &h),
        BasisArg::M => convert(&hcsf(&g, &h), Basis::M)?,
        BasisArg::P => convert(&hcsf(&g, &h), Basis::P)?,
    };
    Ok(symfunc_output(&f, pretty))
}

fn list<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn self_command(g: &str, report: bool, connected: bool, pretty: bool) -> Result<Output> {
    let x = self_csf(&load_graph(g)?);
    if !report {
        return Ok(symfunc_output(&x, pretty));
    }
    let r = self_csf_report(&x, connected)?;
    let stars = r.star_sums.as_ref().map(|s| json!({ "k": s.k, "stars": list(&s.stars), "power_sums": list(&s.power_sums) }));
    let diffs = r.differences.as_ref().map(|d| json!({ "diffs": d.diffs, "base": d.base.to_string() }));
    let value = json!({
        "n": r.n,
        "automorphisms": r.automorphisms.to_string(),
        "bipartite": r.bipartite,
        "tree": r.tree.to_string(),
        "star_sums": stars,
        "differences": diffs,
    });
    let mut text = format!("n {}\nautomorphisms {}\nbipartite {}\ntree {}\n", r.n, r.automorphisms, r.bipartite, r.tree);
    if let Some(s) = &r.star_sums {
        text.push_str(&format!("stars {}\npower_sums {}\n", list(&s.stars).join(" "), list(&s.power_sums).join(" ")));
    }
    if let Some(d) = &r.differences {
        let diffs: Vec<String> = d.diffs.iter().map(ToString::to_string).collect();
        text.push_str(&format!("diffs {}\nbase {}\n", diffs.join(" "), d.base));
    }
    Ok(Output { text, json: value })
}

fn scan_trees(max_n: usize) -> Result<Output> {
    if max_n > 12 {
        return Err(Error::NTooLarge { n: max_n, max: 12 });
    }
    let mut rows = Vec::new();
    let mut text = String::new();
    for n in 1..=max_n {
        let trees = all_trees(n);
        let mut keys: Vec<String> = trees.iter().map(|t| self_csf(t).to_machine()).collect();
        keys.sort_unstable();
        keys.dedup();
        let distinct = keys.len() == trees.len();
        text.push_str(&format!("{n} {} {distinct}\n", trees.len()));
        rows.push(json!({ "n": n, "trees": trees.len(), "distinct": distinct }));
    }
    Ok(Output { text, json: json!(rows) })
}

fn spider(legs: &[usize], exact: bool, approx: bool) -> Result<Output> {
    let graph = Spider::new(legs)?.graph()?;
    let (exact, approx) = if exact || approx { (exact, approx) } else { (true, true) };
    let mut text = format!("vertices {}\n", graph.n());
    let mut value = json!({ "legs": legs, "vertices": graph.n() });
    if exact {
        let e = spider_endomorphism_count(legs)?;
        text.push_str(&format!("endomorphisms {e}\n"));
        value["endomorphisms"] = json!(e.to_string());
    }
    if approx {
        let a = spider_endo_approximation(legs)?;
        text.push_str(&format!("approximation {a:.1}\n"));
        value["approximation"] = json!(a);
    }
    if legs.len() >= 4 {
        let r = spider_m21_ratio(legs)?;
        text.push_str(&format!("m21_ratio {r}\n"));
        value["m21_ratio"] = json!(r.to_string());
    }
    Ok(Output { text, json: value })
}

fn caterpillar(leaves: &[usize]) -> Result<Output> {
    let c = Caterpillar::new(leaves)?;
    let x = self_csf(&c.graph()?);
    let aut = caterpillar_aut_count(&c);
    let degrees = caterpillar_spine_degrees(&x, c.s())?;
    let f0fs = caterpillar_f0fs(&x, leaves)?;
    let d: Vec<String> = degrees.iter().map(ToString::to_string).collect();
    Ok(Output {
        text: format!("vertices {}\nautomorphisms {aut}\nspine_degrees {}\nf0fs {f0fs}\n", c.vertex_count(), d.join(" ")),
        json: json!({
            "vertices": c.vertex_count(),
            "automorphisms": aut.to_string(),
            "spine_degrees": degrees,
            "f0fs": f0fs.to_string(),
        }),
    })
}

fn pexp(kind: PexpKind, g: &str, n: usize, m: Option<usize>, check: bool, pretty: bool) -> Result<Output> {
    let g = load_graph(g)?;
    let m = match kind {
        PexpKind::Star => 1,
        PexpKind::K2n => 2,
        PexpKind::Kmn => m.ok_or_else(|| Error::InvalidParameter("kmn needs --m".into()))?,
    };
    let f = match kind {
        PexpKind::Star => star_p_expansion(&g, n)?,
        PexpKind::K2n => k2n_p_expansion(&g, n)?,
        PexpKind::Kmn => complete_bipartite_p_expansion(&g, m, n)?,
    };
    let mut out = symfunc_output(&f, pretty);
    if check {
        let oracle = f == kmn_oracle(&g, m, n)?;
        let props = kmn_property_check(&g, m, n)?.holds();
        out.text.push_str(&format!("oracle {oracle}\nproperties {props}\n"));
        out.json = json!({ "expansion": out.json, "oracle": oracle, "properties": props });
    }
    Ok(out)
}

fn construction_output(c: &Construction, tsv: bool) -> Output {
    if tsv {
        return Output { text: c.matrix.to_tsv(), json: json!({ "tsv": c.matrix.to_tsv() }) };
    }
    let rows: Vec<Value> = c
        .lambdas
        .iter()
        .zip(&c.pivots)
        .zip(&c.pairs)
        .map(|((l, p), (g, h))| json!({ "lambda": l.to_string(), "pivot": p.to_string(), "g": graph_label(g), "h": graph_label(h) }))
        .collect();
    let mut text = format!("rank {}\nbasis {}\ntriangular {}\n", c.rank(), c.is_basis(), c.is_triangular());
    for ((l, p), (g, h)) in c.lambdas.iter().zip(&c.pivots).zip(&c.pairs) {
        text.push_str(&format!("{l}\t{p}\t{}\t{}\n", graph_label(g), graph_label(h)));
    }
    Output {
        text,
        json: json!({ "rank": c.rank(), "basis": c.is_basis(), "triangular": c.is_triangular(), "rows": rows }),
    }
}

fn basis(which: &BasisCommand, tsv: bool) -> Result<Output> {
    let c = match which {
        BasisCommand::Multipartite { n } => multipartite_self_basis(*n)?,
        BasisCommand::Clique { h, n } => clique_basis(&load_graph(h)?, *n)?,
        BasisCommand::UnionCliques { h } => union_cliques_basis(&load_graph(h)?)?,
        BasisCommand::Loops(a) => loop_bases(a.kind.parse::<LoopKind>()?, a.n)?,
    };
    Ok(construction_output(&c, tsv))
}

fn phn(n: usize) -> Result<Output> {
    let r = p_h(n)?;
    let bad: Vec<(String, usize)> = r.bad.iter().map(|(g, rank)| (graph_label(g), *rank)).collect();
    let mut text = format!("p_H({n}) {r}\n");
    for (g, rank) in &bad {
        text.push_str(&format!("bad {g} {rank}\n"));
    }
    let bad_json: Vec<Value> = bad.iter().map(|(g, rank)| json!({ "graph6": g, "rank": rank })).collect();
    Ok(Output {
        text,
        json: json!({ "n": n, "good": r.good.len(), "total": r.total(), "ratio": r.ratio().to_string(), "bad": bad_json }),
    })
}

fn rank(files: &[PathBuf]) -> Result<Output> {
    let mut rows = Vec::new();
    for path in files {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            rows.push(line.parse::<SymFunc>()?);
        }
    }
    let n = rows.first().map_or(0, SymFunc::degree);
    let r = span_rank(&rows, n)?;
    Ok(Output { text: format!("{r}\n"), json: json!({ "rows": rows.len(), "degree": n, "rank": r }) })
}

fn recurse(which: &RecurseCommand, pretty: bool) -> Result<Output> {
    let f = match which {
        RecurseCommand::Disjoint { g, pieces } => {
            let pieces = pieces.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>>>()?;
            hcsf_disjoint_h(&load_graph(g)?, &pieces)?
        }
        RecurseCommand::Kn1 { g, n } => kn1_csf(&load_graph(g)?, *n)?,
    };
    Ok(symfunc_output(&f, pretty))
}

fn poly(g: &str, h: &str, at: Option<i64>, pretty: bool) -> Result<Output> {
    let p = h_chromatic_polynomial(&load_graph(g)?, &load_graph(h)?);
    match at {
        Some(k) => {
            let v = p.eval_int(k);
            Ok(Output { text: format!("{v}\n"), json: json!({ "k": k, "value": v.to_string() }) })
        }
        None => Ok(Output { text: poly_text(&p, pretty), json: json!({ "coefficients": poly_json(&p) }) }),
    }
}

fn sn1_collide(n: usize, max_v: usize, pretty: bool) -> Result<Output> {
    match find_sn1_collision(n, max_v)? {
        None => Ok(Output { text: "none\n".into(), json: Value::Null }),
        Some(c) => {
            let (a, b) = (graph_label(&c.first), graph_label(&c.second));
            Ok(Output {
                text: format!("{a}\n{b}\n{}", poly_text(&c.polynomial, pretty)),
                json: json!({ "first": a, "second": b, "polynomial": poly_json(&c.polynomial) }),
            })
        }
    }
}

fn repro_command(criterion: &str, pretty: bool) -> Result<Output> {
    let numbers: Vec<u8> = if criterion == "all" {
        repro::CRITERIA.iter().map(|c| c.0).collect()
    } else {
        vec![repro::lookup(criterion)?]
    };
    let mut text = String::new();
    let mut results = Vec::new();
    for number in numbers {
        let r = repro::run(number)?;
        text.push_str(&format!("{r}\n"));
        if pretty {
            text.push_str(&format!("  time {}\n", r.timing()));
        }
        let checks: Vec<Value> = r
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "observed": c.observed, "expected": c.expected, "pass": c.pass }))
            .collect();
        results.push(json!({ "criterion": r.number, "id": r.id, "pass": r.pass(), "checks": checks }));
    }
    Ok(Output { text, json: json!(results) })
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Compute { g, h, basis, count_only } => compute(g, h, *basis, *count_only, pretty),
        Command::SelfCsf { g, report, connected } => self_command(g, *report, *connected, pretty),
        Command::ScanTrees { max_n } => scan_trees(*max_n),
        Command::Spider { legs, exact, approx } => spider(legs, *exact, *approx),
        Command::Caterpillar { leaves } => caterpillar(leaves),
        Command::Pexp { kind, g, n, m, check } => pexp(*kind, g, *n, *m, *check, pretty),
        Command::Basis { which, tsv } => basis(which, *tsv),
        Command::Phn { n } => phn(*n),
        Command::Rank { rows } => rank(rows),
        Command::Recurse { which } => recurse(which, pretty),
        Command::Poly { g, h, at } => poly(g, h, *at, pretty),
        Command::Sn1Collide { n, max_v } => sn1_collide(*n, *max_v, pretty),
        Command::Repro { criterion } => repro_command(criterion, pretty),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match dispatch(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json if cli.pretty => println!("{}", serde_json::to_string_pretty(&out.json).expect("serialisable")),
                Format::Json => println!("{}", out.json),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
