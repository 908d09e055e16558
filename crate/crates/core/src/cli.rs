//! Command-line front end. `run` returns the primary output as a string so
//! the binary only has to print it and map errors to exit codes.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cayley::{code_from_group, ldpc_report, ldpc_report_with, GroupSpec, Presentation};
use crate::codespace::{code_from_charges, code_from_cycles, code_report, to_alist, GraphicalCode};
use crate::error::{Error, Result};
use crate::families::{by_name, FamilyInstance};
use crate::graph::{EdgeVector, QuantizedGraph};
use crate::metrics::{distance, essential_girth, gv_bound, gv_bound_improved, optimal_function, optimal_profile};
use crate::model::{exact_diag_oracle, partition_function, spectrum, HamiltonianSpec, MAX_ORACLE_QUBITS};
use crate::pauli::{css_check, oracle_distance, stabilizers, symplectic_check_matrix, PairingConvention};

const EXIT_CODES: &str = "\
Exit codes:
   0 success            1 validation reported a problem
   2 parse error        3 i/o error
  10 vertex not 4-valent   11 graph not connected   12 half-edge reused
  13 not a cycle           14 not an even set
  20 mixed row lengths     21 ambient mismatch      22 budget exhausted
  23 not found             24 too large             25 Hamiltonian terms mismatch
  30 non-commuting         31 -I in group           32 kernel violation
  33 no convention found   34 bad Pauli string
  40 not generating        41 identity generator    42 not a relator
  43 bad group             44 bad word              45 LDPC bound violated";

#[derive(Parser, Debug)]
#[command(name = "graphqec", version, about = "Quantum error-correcting codes from quantized graphs", after_help = EXIT_CODES)]
pub struct Cli {
    /// Search budget (maximum weight or depth explored by exhaustive searches).
    #[arg(long, global = true, default_value_t = 12)]
    pub budget: usize,
    /// Worker threads. Accepted for compatibility; all work runs on one thread.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Alist,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Load a graph file and report its spaces.
    Validate { graph: PathBuf },
    /// Build a code and print its report.
    Code {
        #[command(flatten)]
        input: CodeInput,
        /// Also compute the distance.
        #[arg(long)]
        distance: bool,
    },
    /// Signed stabilizer generators of a code.
    Stabilizers(CodeInput),
    /// Cycle-by-edge check matrix (json or alist), or the symplectic one.
    CheckMatrix {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        symplectic: bool,
    },
    /// Graphical distance with witnesses.
    Distance(CodeInput),
    /// Brute-force Pauli distance.
    Oracle(CodeInput),
    /// Optimal codes on a graph: full profile, or k at one distance.
    Optimal {
        graph: PathBuf,
        #[arg(long)]
        d: Option<usize>,
    },
    /// A named family instance: graph plus code report.
    Family {
        name: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Cayley graph of a finite group and its local-cycle code.
    Cayley {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        presentation: PathBuf,
    },
    /// Spectrum of the commuting cycle-operator Hamiltonian.
    Spectrum {
        #[command(flatten)]
        input: CodeInput,
        /// Inverse temperatures for the partition function.
        #[arg(long, value_delimiter = ',')]
        beta: Vec<f64>,
        /// Cross-check against the exact-diagonalization oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Gilbert-Varshamov style bound n - log2 sum_{j<d} C(n,j) 3^j.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        /// Subtract s; with a graph file, s defaults to |V| - 1.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

/// Ways to specify a code.
#[derive(Args, Debug, Default, Clone)]
pub struct CodeInput {
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// JSON list of cycles, each a list of edge indices.
    #[arg(long, requires = "graph")]
    pub cycles: Option<PathBuf>,
    /// JSON list of charges (even edge sets), each a list of edge indices.
    #[arg(long, requires = "graph", conflicts_with = "cycles")]
    pub charges: Option<PathBuf>,
    #[arg(long, requires = "presentation")]
    pub group: Option<PathBuf>,
    #[arg(long, requires = "group")]
    pub presentation: Option<PathBuf>,
    #[arg(long, conflicts_with_all = ["graph", "group"])]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Pairing letters for slot pairs 01|23, 02|13, 03|12, e.g. ZYX.
    #[arg(long)]
    pub convention: Option<String>,
}

struct Loaded {
    code: GraphicalCode,
    convention: PairingConvention,
    family: Option<FamilyInstance>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn edge_lists(g: &QuantizedGraph, path: &Path) -> Result<Vec<EdgeVector>> {
    let lists: Vec<Vec<usize>> = serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(e.to_string()))?;
    lists
        .into_iter()
        .map(|l| {
            if let Some(&e) = l.iter().find(|&&e| e >= g.edge_count()) {
                return Err(Error::Parse(format!("edge index {e} out of range")));
            }
            let mut v = g.empty_edge_set();
            for e in l {
                v.flip(e);
            }
            Ok(v)
        })
        .collect()
}

fn load(input: &CodeInput) -> Result<Loaded> {
    let explicit = input.convention.as_deref().map(str::parse::<PairingConvention>).transpose()?;
    let (code, default_conv, family) = if let Some(name) = &input.family {
        let f = by_name(name, input.n)?;
        (f.code.clone(), f.convention, Some(f))
    } else if let Some(gp) = &input.graph {
        let g = QuantizedGraph::from_json(&read(gp)?)?;
        let code = match (&input.cycles, &input.charges) {
            (_, Some(c)) => code_from_charges(&g, &edge_lists(&g, c)?)?,
            (Some(c), None) => code_from_cycles(&g, &edge_lists(&g, c)?)?,
            (None, None) => code_from_cycles(&g, &[])?,
        };
        (code, PairingConvention::default(), None)
    } else if let (Some(gp), Some(pp)) = (&input.group, &input.presentation) {
        let spec = GroupSpec::from_json(&read(gp)?)?;
        let p = Presentation::from_json(&read(pp)?)?;
        (code_from_group(&spec, &p)?.1, PairingConvention::default(), None)
    } else {
        return Err(Error::Parse("give --family, --graph, or --group with --presentation".into()));
    };
    Ok(Loaded { code, convention: explicit.unwrap_or(default_conv), family })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn no_alist(format: Format) -> Result<()> {
    if format == Format::Alist {
        return Err(Error::Parse("alist output is only available for check-matrix".into()));
    }
    Ok(())
}

/// Runs one command and returns its output. The outcome flag is false
/// when a validation found a problem.
pub fn run(cli: &Cli) -> Result<(String, bool)> {
    let fmt = cli.format;
    let budget = cli.budget;
    if !matches!(cli.command, Command::CheckMatrix { .. }) {
        no_alist(fmt)?;
    }
    let text = |s: String, v: serde_json::Value| if fmt == Format::Text { s + "\n" } else { to_json(&v) };
    Ok(match &cli.command {
        Command::Validate { graph } => {
            let src = read(graph)?;
            match QuantizedGraph::from_json(&src) {
                Ok(g) => {
                    let v = json!({
                        "ok": true,
                        "vertices": g.n(),
                        "edges": g.edge_count(),
                        "cycle_space_dim": g.cycle_space().dim(),
                        "cut_space_dim": g.cut_space().dim(),
                        "even_space_dim": g.even_space().dim(),
                    });
                    (text(format!("ok: {} vertices, {} edges", g.n(), g.edge_count()), v), true)
                }
                Err(Error::Parse(m)) => return Err(Error::Parse(m)),
                Err(e) => {
                    let v = json!({"ok": false, "error": e.to_string(), "exit_code": e.exit_code()});
                    (text(format!("invalid: {e}"), v), false)
                }
            }
        }
        Command::Code { input, distance: with_d } => {
            let l = load(input)?;
            let mut v = serde_json::to_value(code_report(&l.code)).expect("serializable");
            let mut line = format!("n = {}, k = {}", l.code.n, l.code.k);
            if let Some(f) = &l.family {
                v["expected"] = json!(f.expected);
            }
            if *with_d {
                let d = distance(&l.code, budget)?;
                line += &format!(", d = {}", d.d.map_or("none".into(), |x| x.to_string()));
                v["distance"] = serde_json::to_value(d).expect("serializable");
            }
            (text(line, v), true)
        }
        Command::Stabilizers(input) => {
            let l = load(input)?;
            let s = stabilizers(&l.code, &l.convention)?;
            let gens: Vec<String> = s.generators().iter().map(|p| p.to_string()).collect();
            let v = json!({
                "n": l.code.n,
                "convention": l.convention.to_string(),
                "rank": s.rank(),
                "css": css_check(&s).is_some(),
                "generators": gens,
            });
            (text(gens.join("\n"), v), true)
        }
        Command::CheckMatrix { input, symplectic } => {
            let l = load(input)?;
            if *symplectic {
                let m = symplectic_check_matrix(&stabilizers(&l.code, &l.convention)?);
                match fmt {
                    Format::Alist => (to_alist(&m.rows, 2 * m.n), true),
                    Format::Text => (m.rows.iter().map(|r| r.to_string() + "\n").collect(), true),
                    Format::Json => (to_json(&m), true),
                }
            } else {
                let rows = &l.code.generators;
                let cols = l.code.graph.edge_count();
                match fmt {
                    Format::Alist => (to_alist(rows, cols), true),
                    Format::Text => (rows.iter().map(|r| r.to_string() + "\n").collect(), true),
                    Format::Json => (to_json(&json!({"rows": rows.len(), "cols": cols, "matrix": rows})), true),
                }
            }
        }
        Command::Distance(input) => {
            let l = load(input)?;
            let d = distance(&l.code, budget)?;
            let line = format!("d = {}", d.d.map_or("none".into(), |x| x.to_string()));
            (text(line, serde_json::to_value(d).expect("serializable")), true)
        }
        Command::Oracle(input) => {
            let l = load(input)?;
            let s = stabilizers(&l.code, &l.convention)?;
            let d = if l.code.k == 0 { None } else { Some(oracle_distance(&s, budget)?) };
            let v = json!({"n": l.code.n, "k": l.code.k, "d": d, "budget": budget});
            (text(format!("d = {}", d.map_or("none".into(), |x| x.to_string())), v), true)
        }
        Command::Optimal { graph, d } => {
            let g = QuantizedGraph::from_json(&read(graph)?)?;
            match d {
                Some(d) => {
                    let o = optimal_function(&g, *d)?;
                    (text(format!("k({}) = {}{}", o.d, o.k, if o.exact { "" } else { " (lower bound)" }), serde_json::to_value(&o).expect("serializable")), true)
                }
                None => {
                    let p = optimal_profile(&g)?;
                    let line = format!("d(graph) = {}, k = {:?}", p.code_distance, p.values);
                    (text(line, serde_json::to_value(&p).expect("serializable")), true)
                }
            }
        }
        Command::Family { name, n } => {
            let f = by_name(name, *n)?;
            let ldpc = ldpc_report_with(&f.code, f.bounds)?;
            let v = json!({
                "name": f.name,
                "param": f.param,
                "expected": f.expected,
                "convention": f.convention.to_string(),
                "note": f.note,
                "graph": serde_json::from_str::<serde_json::Value>(&f.code.graph.to_json()).expect("valid json"),
                "code": code_report(&f.code),
                "ldpc": ldpc,
            });
            (text(format!("{} n = {}, k = {}", f.name, f.code.n, f.code.k), v), true)
        }
        Command::Cayley { group, presentation } => {
            let spec = GroupSpec::from_json(&read(group)?)?;
            let p = Presentation::from_json(&read(presentation)?)?;
            let (cg, code) = code_from_group(&spec, &p)?;
            let v = json!({
                "order": cg.group.order(),
                "graph": serde_json::from_str::<serde_json::Value>(&cg.graph.to_json()).expect("valid json"),
                "code": code_report(&code),
                "ldpc": ldpc_report(&code, &p)?,
            });
            (text(format!("order {}, n = {}, k = {}", cg.group.order(), code.n, code.k), v), true)
        }
        Command::Spectrum { input, beta, oracle } => {
            let l = load(input)?;
            let h = HamiltonianSpec::from_code(&l.code)?;
            let rep = spectrum(&h)?;
            let mut v = serde_json::to_value(&rep).expect("serializable");
            v["partition_function"] =
                json!(beta.iter().map(|&b| json!({"beta": b, "z": partition_function(&rep, b)})).collect::<Vec<_>>());
            if *oracle {
                if l.code.n > MAX_ORACLE_QUBITS {
                    return Err(Error::TooLarge(format!("oracle limited to {MAX_ORACLE_QUBITS} qubits")));
                }
                v["oracle_agrees"] = json!(exact_diag_oracle(&h, &l.convention)?.same_levels(&rep));
            }
            let line = format!("ground {} x{}, gap {:?}", rep.ground_energy, rep.ground_degeneracy, rep.gap);
            (text(line, v), true)
        }
        Command::Bound { n, d, s, graph } => {
            let (d, s) = match graph {
                Some(p) => {
                    let g = QuantizedGraph::from_json(&read(p)?)?;
                    let d = match d {
                        Some(d) => *d,
                        None => essential_girth(&g)?.ok_or(Error::NotFound)?,
                    };
                    (d, s.unwrap_or(g.n().saturating_sub(1)))
                }
                None => (d.ok_or_else(|| Error::Parse("--d is required without --graph".into()))?, s.unwrap_or(0)),
            };
            let plain = gv_bound(*n, d);
            let improved = gv_bound_improved(*n, d, s);
            let v = json!({"n": n, "d": d, "s": s, "gv": plain, "gv_improved": improved});
            (text(format!("gv({n},{d}) = {plain:.6}, minus {s}: {improved:.6}"), v), true)
        }
    })
}
