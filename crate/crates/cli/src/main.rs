//! `ncgraded`: exact computations for quadratic monomial algebras, the
//! degenerate Sklyanin family, their quivers, and the K-theory of the
//! associated stationary Bratteli diagram.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ncgraded::emit::{self, EmitFormat};
use ncgraded::report::{Report, ReportEntry};
use ncgraded::suite::{run_suite, SuiteOptions};

use ncgraded_core::exactnum::{IntMatrix, Rational};
use ncgraded_core::k0::{
    dimension_group, is_simple_stationary, lattice_chain_quotients, limit_membership,
    BratteliDiagram,
};
use ncgraded_core::monomial::MonomialAlgebra;
use ncgraded_core::ncalg::{
    parse_presentation, parse_scalar, zhang_twist, GradedAutomorphism, Presentation,
};
use ncgraded_core::points::{annihilator_degree, special_sequence_count, special_sequences};
use ncgraded_core::quiver::{
    mckay_quiver, quiver_iso, skew_group_graded_dim, McKayWeights, Quiver,
};
use ncgraded_core::sklyanin::{
    classify_with_witness, cycle_presentation, squares_presentation, FamilyClass, SklyaninParams,
};

use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "ncgraded", version, about = "Exact graded-algebra computations: monomial algebras, Sklyanin degenerations, quivers, and dimension groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Bound for degree-indexed computations.
    #[arg(long, global = true, env = "NCGRADED_MAXDEG", default_value_t = 8)]
    maxdeg: usize,

    /// Stamp reports with the current time (outputs are otherwise
    /// byte-deterministic).
    #[arg(long, global = true)]
    timestamps: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a parameter point (a, b, c) and validate its witness.
    ///
    /// Scalars are written as `3`, `-1/2`, `w`, `w^2`, or `(1 + 2*w)`.
    Classify {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },

    /// Hilbert series of a quadratic monomial algebra (default: the two
    /// standard three-letter algebras), cross-checked against enumeration.
    Hilbert { file: Option<PathBuf> },

    /// The normal-word graph of a quadratic monomial algebra.
    Ufnarovskii { file: Option<PathBuf> },

    /// Veronese power of the standard graphs or of a presented algebra.
    Veronese { power: usize, file: Option<PathBuf> },

    /// Twist a quadratic presentation by a permutation of its generators
    /// (default: the standard pair of twists between the two monomial
    /// algebras).
    Twist {
        file: Option<PathBuf>,
        /// Permutation like `u->v,v->w,w->u`.
        #[arg(long)]
        map: Option<String>,
    },

    /// Level sizes, simplicity, eigen data, and membership certificates for
    /// a stationary diagram (default: the incidence matrix of the standard
    /// graph).
    K0 {
        /// Incidence matrix, rows separated by `;`: `0,1,1;1,0,1;1,1,0`.
        #[arg(long)]
        matrix: Option<String>,
        /// Level-zero sizes, comma separated.
        #[arg(long)]
        start: Option<String>,
        /// Power of the matrix used for the eigen descriptor.
        #[arg(long, default_value_t = 3)]
        period: usize,
        /// Rational vector to test for membership in the lattice union.
        #[arg(long)]
        member: Option<String>,
        /// Power bound for the membership search.
        #[arg(long, default_value_t = 24)]
        bound: usize,
    },

    /// McKay quiver of a diagonal cyclic action on a free algebra.
    Mckay {
        /// Group order.
        order: usize,
        /// Generator weights, comma separated, one per free generator.
        weights: String,
    },

    /// Corner point sequences and annihilator checks for the
    /// squared-generator algebra.
    Points {
        /// Largest sequence index to count.
        degree: usize,
        /// Print the JSON listing of the sequences instead of a report.
        #[arg(long)]
        list: bool,
    },

    /// Write a graph in DOT or JSON: quiver-Q, quiver-Qprime,
    /// ufnarovskii <file>, bratteli, successor-automaton.
    Emit {
        what: String,
        file: Option<PathBuf>,
        #[arg(long, default_value = "dot")]
        format: String,
        /// Levels to draw for the Bratteli diagram.
        #[arg(long, default_value_t = 2)]
        levels: usize,
    },

    /// Run the whole verification suite.
    VerifyAll {
        /// Also show the informational caveat entries.
        #[arg(long)]
        strict: bool,
        /// Corrupt the claimed value of one named entry (for testing the
        /// failure path).
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let report = match &cli.command {
        Command::Classify { a, b, c } => cmd_classify(a, b, c)?,
        Command::Hilbert { file } => cmd_hilbert(file.as_deref(), cli.maxdeg)?,
        Command::Ufnarovskii { file } => cmd_ufnarovskii(file.as_deref())?,
        Command::Veronese { power, file } => cmd_veronese(*power, file.as_deref())?,
        Command::Twist { file, map } => cmd_twist(file.as_deref(), map.as_deref())?,
        Command::K0 { matrix, start, period, member, bound } => {
            cmd_k0(matrix.as_deref(), start.as_deref(), *period, member.as_deref(), *bound)?
        }
        Command::Mckay { order, weights } => cmd_mckay(*order, weights, cli.maxdeg)?,
        Command::Points { degree, list } => {
            if *list {
                print!("{}", emit::special_sequences_json(*degree));
                return Ok(ExitCode::SUCCESS);
            }
            cmd_points(*degree, cli.maxdeg)?
        }
        Command::Emit { what, file, format, levels } => {
            let format = match format.as_str() {
                "dot" => EmitFormat::Dot,
                "json" => EmitFormat::Json,
                other => return Err(format!("unknown format `{other}` (expected dot or json)")),
            };
            print!("{}", cmd_emit(what, file.as_deref(), format, *levels)?);
            return Ok(ExitCode::SUCCESS);
        }
        Command::VerifyAll { strict, inject_fault } => {
            if cli.maxdeg < 4 {
                return Err("verify-all needs --maxdeg at least 4".into());
            }
            let mut report = Report::new("verify-all")
                .input("maxdeg", cli.maxdeg.to_string())
                .input("strict", strict.to_string());
            let opts = SuiteOptions {
                maxdeg: cli.maxdeg,
                strict: *strict,
                inject_fault: inject_fault.clone(),
            };
            report.extend(run_suite(&opts));
            report
        }
    };
    let mut report = report;
    if cli.timestamps {
        report.timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }
    if cli.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn load_presentation(path: &std::path::Path) -> Result<Presentation, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_presentation(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_monomial(path: &std::path::Path) -> Result<MonomialAlgebra, String> {
    let p = load_presentation(path)?;
    MonomialAlgebra::from_presentation(&p).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_classify(a: &str, b: &str, c: &str) -> Result<Report, String> {
    let parse = |s: &str| parse_scalar(s).map_err(|e| format!("scalar `{s}`: {e}"));
    let point = SklyaninParams::new(parse(a)?, parse(b)?, parse(c)?)
        .map_err(|e| e.to_string())?;
    let mut report = Report::new("classify")
        .input("a", a)
        .input("b", b)
        .input("c", c)
        .input("normalized", point.to_string());
    let (class, witness) = classify_with_witness(&point).map_err(|e| e.to_string())?;
    report.push(ReportEntry::info("class", class.to_string()));
    if let Some((change, valid)) = witness {
        let target = match class {
            FamilyClass::DegenerateSquares(_) => "squares",
            FamilyClass::DegenerateCycle(_) => "cycle",
            FamilyClass::NonDegenerate => unreachable!("witness implies degeneracy"),
        };
        report.push(ReportEntry::info("target", target));
        let rows: Vec<String> = change
            .rows()
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                format!("({})", cells.join(", "))
            })
            .collect();
        report.push(ReportEntry::info("witness-rows", rows.join(" ")));
        report.push(ReportEntry::check(
            "witness-validates",
            "valid",
            if valid { "valid" } else { "invalid" },
        ));
    }
    Ok(report)
}

fn hilbert_entries(report: &mut Report, label: &str, algebra: &MonomialAlgebra, maxdeg: usize) {
    match algebra.hilbert_series() {
        Ok(series) => {
            report.push(ReportEntry::info(format!("series:{label}"), series.to_string()));
            let coeffs: Vec<String> = series
                .series_coefficients(maxdeg)
                .iter()
                .map(Rational::to_string)
                .collect();
            let counts: Vec<String> =
                (0..=maxdeg).map(|n| algebra.normal_words(n).len().to_string()).collect();
            report.push(ReportEntry::check(
                format!("coefficients-match-counts:{label}"),
                counts.join(","),
                coeffs.join(","),
            ));
        }
        Err(e) => report.push(ReportEntry::check(
            format!("series:{label}"),
            "computed",
            format!("error: {e}"),
        )),
    }
}

fn cmd_hilbert(file: Option<&std::path::Path>, maxdeg: usize) -> Result<Report, String> {
    let mut report = Report::new("hilbert").input("maxdeg", maxdeg.to_string());
    match file {
        Some(path) => {
            let algebra = load_monomial(path)?;
            report = report.input("file", path.display().to_string());
            hilbert_entries(&mut report, "input", &algebra, maxdeg);
        }
        None => {
            let squares = MonomialAlgebra::squares(3);
            let cycle = MonomialAlgebra::cycle(3);
            hilbert_entries(&mut report, "squares", &squares, maxdeg);
            hilbert_entries(&mut report, "cycle", &cycle, maxdeg);
            let same = squares.hilbert_series().map_err(|e| e.to_string())?
                == cycle.hilbert_series().map_err(|e| e.to_string())?;
            report.push(ReportEntry::check(
                "series-equal",
                "equal",
                if same { "equal" } else { "different" },
            ));
        }
    }
    Ok(report)
}

fn graph_entries(report: &mut Report, label: &str, algebra: &MonomialAlgebra) {
    let graph = algebra.normal_word_graph();
    report.push(ReportEntry::info(
        format!("adjacency:{label}"),
        format!("{:?}", graph.adjacency()),
    ));
    let arrows: Vec<String> = graph
        .arrows()
        .iter()
        .map(|a| format!("{}:{}->{}", a.label, a.source + 1, a.target + 1))
        .collect();
    report.push(ReportEntry::info(format!("arrows:{label}"), arrows.join(" ")));
}

fn cmd_ufnarovskii(file: Option<&std::path::Path>) -> Result<Report, String> {
    let mut report = Report::new("ufnarovskii");
    match file {
        Some(path) => {
            let algebra = load_monomial(path)?;
            report = report.input("file", path.display().to_string());
            graph_entries(&mut report, "input", &algebra);
        }
        None => {
            graph_entries(&mut report, "squares", &MonomialAlgebra::squares(3));
            graph_entries(&mut report, "cycle", &MonomialAlgebra::cycle(3));
        }
    }
    Ok(report)
}

fn cmd_veronese(power: usize, file: Option<&std::path::Path>) -> Result<Report, String> {
    if power == 0 {
        return Err("veronese power must be positive".into());
    }
    let mut report = Report::new("veronese").input("power", power.to_string());
    let run = |label: &str, algebra: &MonomialAlgebra, report: &mut Report| {
        let graph = algebra.normal_word_graph();
        let veronese = graph.veronese(power);
        report.push(ReportEntry::info(
            format!("adjacency:{label}"),
            format!("{:?}", veronese.adjacency()),
        ));
        report.push(ReportEntry::check(
            format!("adjacency-is-matrix-power:{label}"),
            format!("{:?}", graph.adjacency().pow(power).expect("square")),
            format!("{:?}", veronese.adjacency()),
        ));
    };
    match file {
        Some(path) => {
            let algebra = load_monomial(path)?;
            report = report.input("file", path.display().to_string());
            run("input", &algebra, &mut report);
        }
        None => {
            run("squares", &MonomialAlgebra::squares(3), &mut report);
            run("cycle", &MonomialAlgebra::cycle(3), &mut report);
        }
    }
    Ok(report)
}

fn parse_generator_map(p: &Presentation, text: &str) -> Result<Vec<usize>, String> {
    let mut perm = vec![usize::MAX; p.generator_count()];
    for piece in text.split(',') {
        let (from, to) = piece
            .split_once("->")
            .ok_or_else(|| format!("map entry `{piece}` is not of the form name->name"))?;
        let from_idx = p
            .generator_index(from.trim())
            .ok_or_else(|| format!("unknown generator `{}`", from.trim()))?;
        let to_idx = p
            .generator_index(to.trim())
            .ok_or_else(|| format!("unknown generator `{}`", to.trim()))?;
        perm[from_idx] = to_idx;
    }
    if perm.iter().any(|&i| i == usize::MAX) {
        return Err("map must cover every generator".into());
    }
    Ok(perm)
}

fn cmd_twist(file: Option<&std::path::Path>, map: Option<&str>) -> Result<Report, String> {
    let mut report = Report::new("twist");
    match (file, map) {
        (Some(path), Some(map_text)) => {
            let p = load_presentation(path)?;
            report = report
                .input("file", path.display().to_string())
                .input("map", map_text.to_string());
            let perm = parse_generator_map(&p, map_text)?;
            let tau = GradedAutomorphism::from_permutation(&p, &perm)
                .map_err(|e| format!("map is not an automorphism: {e}"))?;
            let twisted = zhang_twist(&p, &tau).map_err(|e| e.to_string())?;
            report.push(ReportEntry::info("twisted", twisted.serialize().replace('\n', " | ")));
            let same = p.same_relation_span(&twisted).map_err(|e| e.to_string())?;
            report.push(ReportEntry::info(
                "span-compared-to-input",
                if same { "unchanged" } else { "changed" },
            ));
        }
        (None, None) => {
            let squares = squares_presentation();
            let cycle = cycle_presentation();
            let tau = GradedAutomorphism::from_permutation(&cycle, &[1, 2, 0])
                .expect("rotation preserves the cycle span");
            let twisted = zhang_twist(&cycle, &tau).map_err(|e| e.to_string())?;
            report.push(ReportEntry::check(
                "cycle-to-squares",
                "twisted span equals squares relations",
                if twisted.same_relation_span(&squares).map_err(|e| e.to_string())? {
                    "twisted span equals squares relations".to_string()
                } else {
                    "twisted span differs".to_string()
                },
            ));
            let theta = GradedAutomorphism::from_permutation(&squares, &[2, 0, 1])
                .expect("permutations preserve the squares span");
            let twisted = zhang_twist(&squares, &theta).map_err(|e| e.to_string())?;
            report.push(ReportEntry::check(
                "squares-to-cycle",
                "twisted span equals cycle relations",
                if twisted.same_relation_span(&cycle).map_err(|e| e.to_string())? {
                    "twisted span equals cycle relations".to_string()
                } else {
                    "twisted span differs".to_string()
                },
            ));
        }
        _ => return Err("twist needs both --map and a file, or neither".into()),
    }
    Ok(report)
}

fn parse_int_matrix(text: &str) -> Result<IntMatrix, String> {
    let rows: Vec<Vec<i64>> = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|cell| cell.trim().parse::<i64>().map_err(|e| format!("entry `{cell}`: {e}")))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err("matrix rows have unequal lengths".into());
    }
    Ok(IntMatrix::from_rows(&rows))
}

fn parse_rational_vector(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|cell| {
            let cell = cell.trim();
            let scalar = parse_scalar(cell).map_err(|e| format!("entry `{cell}`: {e}"))?;
            if !scalar.is_rational() {
                return Err(format!("entry `{cell}` must be rational"));
            }
            Ok(scalar.rational_part().clone())
        })
        .collect()
}

fn cmd_k0(
    matrix: Option<&str>,
    start: Option<&str>,
    period: usize,
    member: Option<&str>,
    bound: usize,
) -> Result<Report, String> {
    let m = match matrix {
        Some(text) => parse_int_matrix(text)?,
        None => IntMatrix::from_i64(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0]),
    };
    let sizes: Vec<BigInt> = match start {
        Some(text) => parse_rational_vector(text)?
            .into_iter()
            .map(|r| {
                if r.is_integer() {
                    Ok(r.to_integer())
                } else {
                    Err("start sizes must be integers".to_string())
                }
            })
            .collect::<Result<_, _>>()?,
        None => vec![BigInt::from(1); m.rows()],
    };
    let mut report = Report::new("k0")
        .input("matrix", format!("{:?}", m))
        .input("period", period.to_string());
    let diagram = BratteliDiagram::new(m.clone(), sizes).map_err(|e| e.to_string())?;
    let levels: Vec<String> = (0..=2)
        .map(|n| {
            let sizes: Vec<String> = diagram.level_sizes(n).iter().map(BigInt::to_string).collect();
            format!("({})", sizes.join(","))
        })
        .collect();
    report.push(ReportEntry::info("levels", levels.join(" ")));
    let (simple, power) = is_simple_stationary(&m);
    report.push(ReportEntry::info(
        "simplicity",
        match (simple, power) {
            (true, Some(n)) => format!("simple at power {n}"),
            _ => "not simple".into(),
        },
    ));
    match lattice_chain_quotients(&m, 4) {
        Ok(orders) => {
            let text: Vec<String> = orders.iter().map(BigInt::to_string).collect();
            report.push(ReportEntry::info("lattice-quotients", text.join(",")));
        }
        Err(e) => report.push(ReportEntry::info("lattice-quotients", format!("unavailable: {e}"))),
    }
    match dimension_group(&m, period) {
        Ok(d) => {
            report.push(ReportEntry::info(
                "descriptor",
                format!("{}, eigenbasis index {}", d.component_summary(), d.eigenbasis_index),
            ));
            for e in &d.eigen_data {
                let coords: Vec<String> = e.eigenvector.iter().map(BigInt::to_string).collect();
                report.push(ReportEntry::info(
                    format!("eigenvector:{}", e.eigenvalue),
                    format!("({})", coords.join(",")),
                ));
            }
        }
        Err(e) => report.push(ReportEntry::info("descriptor", format!("unavailable: {e}"))),
    }
    if let Some(member_text) = member {
        let v = parse_rational_vector(member_text)?;
        let result = limit_membership(&m, &v, bound).map_err(|e| e.to_string())?;
        report.push(ReportEntry::info(
            "membership",
            match result {
                Some(n) => format!("integral after {n} steps"),
                None => format!("not integral within {bound} steps"),
            },
        ));
    }
    Ok(report)
}

fn cmd_mckay(order: usize, weights: &str, maxdeg: usize) -> Result<Report, String> {
    if order == 0 {
        return Err("group order must be positive".into());
    }
    let weights: Vec<usize> = weights
        .split(',')
        .map(|w| w.trim().parse::<usize>().map_err(|e| format!("weight `{w}`: {e}")))
        .collect::<Result<_, _>>()?;
    let g = weights.len();
    let quiver = mckay_quiver(&McKayWeights::new(order, weights.clone()));
    let mut report = Report::new("mckay")
        .input("order", order.to_string())
        .input("weights", format!("{:?}", weights));
    report.push(ReportEntry::info("adjacency", format!("{:?}", quiver.adjacency())));
    let claimed: Vec<String> =
        (0..=maxdeg).map(|d| skew_group_graded_dim(g, order, d).to_string()).collect();
    let counts: Vec<String> = (0..=maxdeg).map(|d| quiver.path_count(d).to_string()).collect();
    report.push(ReportEntry::check(
        "path-counts-match-skew-dimensions",
        claimed.join(","),
        counts.join(","),
    ));
    if order == 3 && g == 2 {
        let iso = |target: &Quiver| match quiver_iso(&quiver, target) {
            Ok(Some(_)) => "isomorphic".to_string(),
            Ok(None) => "not isomorphic".to_string(),
            Err(_) => "search refused".to_string(),
        };
        report.push(ReportEntry::info(
            "vs-squares-graph",
            iso(&MonomialAlgebra::squares(3).normal_word_graph()),
        ));
        report.push(ReportEntry::info(
            "vs-cycle-graph",
            iso(&MonomialAlgebra::cycle(3).normal_word_graph()),
        ));
    }
    Ok(report)
}

fn cmd_points(degree: usize, maxdeg: usize) -> Result<Report, String> {
    let mut report = Report::new("points").input("degree", degree.to_string());
    let claimed: Vec<String> =
        (0..=degree).map(|n| special_sequence_count(n).to_string()).collect();
    let counted: Vec<String> =
        (0..=degree).map(|n| special_sequences(n).len().to_string()).collect();
    report.push(ReportEntry::check("special-counts", claimed.join(","), counted.join(",")));
    let top = degree.min(maxdeg).max(1);
    let annihilators: Vec<String> =
        (1..=top).map(|n| annihilator_degree(n).to_string()).collect();
    let zeros: Vec<String> = (1..=top).map(|_| "0".to_string()).collect();
    report.push(ReportEntry::check(
        "annihilator-degrees",
        zeros.join(","),
        annihilators.join(","),
    ));
    Ok(report)
}

fn cmd_emit(
    what: &str,
    file: Option<&std::path::Path>,
    format: EmitFormat,
    levels: usize,
) -> Result<String, String> {
    match what {
        "quiver-Q" => Ok(emit::quiver_text(
            &MonomialAlgebra::squares(3).normal_word_graph(),
            format,
        )),
        "quiver-Qprime" => Ok(emit::quiver_text(
            &MonomialAlgebra::cycle(3).normal_word_graph(),
            format,
        )),
        "ufnarovskii" => {
            let path = file.ok_or("ufnarovskii needs a presentation file")?;
            let algebra = load_monomial(path)?;
            Ok(emit::ufnarovskii_graph_of(&algebra, format))
        }
        "bratteli" => {
            let diagram = BratteliDiagram::new(
                IntMatrix::from_i64(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0]),
                vec![BigInt::from(1); 3],
            )
            .expect("standard diagram is well formed");
            Ok(emit::bratteli_text(&diagram, levels, format))
        }
        "successor-automaton" => Ok(emit::successor_automaton_text(format)),
        other => Err(format!(
            "unknown selector `{other}` (expected quiver-Q, quiver-Qprime, ufnarovskii, bratteli, or successor-automaton)"
        )),
    }
}
