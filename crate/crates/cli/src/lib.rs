//! `tpqr` command line: exposes the diagram/orbit/grading/resolution/Schur/
//! invariant pipeline and the claim-replay report.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error.

use std::io::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use tpqr_core::{
    betti_degree_solve, build_diagram, builtin_equivariant_format, builtin_equivariant_formats,
    degree_of, emit_cas_script, gorenstein_sum, hilbert_numerator, linkage_dual,
    module_grading_from_system, orbit_poset, report, sigma_chain, verify_equivariant_format,
    weight_multiplicities, z_grading_dims, BettiSolution, Dialect, GradedFormat, ReportType,
    TDiagram, Variety, Weight,
};

/// Directory for cached orbit posets (serialized JSON), checked before
/// recomputing `orbit` output.
pub const CACHE_ENV: &str = "TPQR_CACHE_DIR";

#[derive(Parser)]
#[command(name = "tpqr", version, about = "exact Schubert/resolution calculator for T_{p,q,r}")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct DiagramArg {
    /// Arm sizes p,q,r (e.g. 2,3,3)
    #[arg(long, value_parser = parse_pqr, default_value = "2,3,3")]
    diagram: (usize, usize, usize),
}

fn parse_pqr(s: &str) -> Result<(usize, usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected p,q,r".into());
    }
    let mut v = [0usize; 3];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot = part.trim().parse().map_err(|e| format!("{e}"))?;
    }
    Ok((v[0], v[1], v[2]))
}

fn parse_variety(s: &str) -> Result<Variety, String> {
    match s {
        "sigma3" => Ok(Variety::Sigma3),
        "sigma3'" | "sigma3p" | "sigma3prime" => Ok(Variety::Sigma3Prime),
        _ => Err("expected sigma3 or sigma3'".into()),
    }
}

fn parse_ci(s: &str) -> Result<(u32, u32, u32), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected d1,d2,d3".into());
    }
    let mut v = [0u32; 3];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot = part.trim().parse().map_err(|e| format!("{e}"))?;
    }
    Ok((v[0], v[1], v[2]))
}

fn parse_format(s: &str) -> Result<GradedFormat, String> {
    serde_json::from_str(s).map_err(|e| format!("{e}"))
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify the diagram as finite, affine, or indefinite
    Classify(DiagramArg),
    /// Enumerate the coset poset W/W_P
    Orbit {
        #[command(flatten)]
        diagram: DiagramArg,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Print the sigma chain of weights
    Sigma(DiagramArg),
    /// Generator weight list (and degrees) for one variety
    Generators {
        #[command(flatten)]
        diagram: DiagramArg,
        #[arg(long, value_parser = parse_variety, default_value = "sigma3")]
        variety: Variety,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Levi block sizes of the symmetry group of one variety
    Levi {
        #[command(flatten)]
        diagram: DiagramArg,
        #[arg(long, value_parser = parse_variety, default_value = "sigma3")]
        variety: Variety,
    },
    /// Coset counts per length
    Ranks {
        #[command(flatten)]
        diagram: DiagramArg,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Z-grading of the Lie algebra and of the defining module
    Grading {
        #[command(flatten)]
        diagram: DiagramArg,
        /// Also grade the module V_{omega_{x1}} (slow for T_{2,5,3})
        #[arg(long)]
        module: bool,
    },
    /// Resolution format arithmetic
    Rescalc {
        #[command(subcommand)]
        cmd: ResCmd,
    },
    /// Schur functor checks of the built-in equivariant formats
    Schur {
        #[command(subcommand)]
        cmd: SchurCmd,
    },
    /// The degree-4 invariant of trivectors and its generator ideals
    Invariant {
        #[arg(long, value_parser = parse_variety, default_value = "sigma3")]
        variety: Variety,
        /// Emit a computer-algebra script instead of a summary
        #[arg(long)]
        script: bool,
        #[arg(long, default_value = "macaulay2")]
        dialect: String,
    },
    /// Replay every recorded claim for one diagram
    Report {
        #[arg(long = "type", value_name = "TYPE")]
        rtype: String,
    },
}

#[derive(Subcommand)]
enum ResCmd {
    /// Hilbert numerator of a format
    Numerator {
        #[arg(long, value_parser = parse_format)]
        format: GradedFormat,
        #[arg(long, default_value_t = 3)]
        codim: usize,
    },
    /// Degree (multiplicity) of a format
    Degree {
        #[arg(long, value_parser = parse_format)]
        format: GradedFormat,
        #[arg(long, default_value_t = 3)]
        codim: usize,
    },
    /// Linked format via the dualized mapping cone
    Link {
        #[arg(long, value_parser = parse_format)]
        format: GradedFormat,
        #[arg(long, value_parser = parse_ci)]
        ci: (u32, u32, u32),
    },
    /// Length-4 format of the sum of two linked ideals
    Gorenstein {
        #[arg(long, value_parser = parse_format)]
        format: GradedFormat,
        #[arg(long)]
        shift: u32,
    },
    /// Solve for the middle twists from generators and top row
    Solve {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        top: Vec<u32>,
        #[arg(long)]
        middle_rank: usize,
    },
}

#[derive(Subcommand)]
enum SchurCmd {
    /// Verify ranks and twists of the built-in equivariant formats
    Check {
        /// Single format by name (default: all)
        #[arg(long)]
        name: Option<String>,
    },
}

fn diagram_of(arg: &DiagramArg) -> anyhow::Result<TDiagram> {
    let (p, q, r) = arg.diagram;
    Ok(build_diagram(p, q, r)?)
}

fn weight_line(w: &Weight) -> String {
    let parts: Vec<String> = w.0.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Orbit JSON with write-through caching keyed by diagram and bound.
fn orbit_json(d: &TDiagram, max_len: Option<usize>) -> anyhow::Result<serde_json::Value> {
    let (p, q, r) = d.arms();
    let key = format!(
        "poset_{p}_{q}_{r}_{}.json",
        max_len.map_or("full".to_string(), |l| l.to_string())
    );
    let cache = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    if let Some(dir) = &cache {
        let path = dir.join(&key);
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(v) = serde_json::from_str(&text) {
                return Ok(v);
            }
        }
    }
    let poset = orbit_poset(d, max_len)?;
    let v = poset.to_json();
    if let Some(dir) = &cache {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(&key), serde_json::to_string(&v)?)?;
    }
    Ok(v)
}

fn run_cmd(cli: &Cli) -> anyhow::Result<String> {
    let json = cli.json;
    match &cli.cmd {
        Cmd::Classify(arg) => {
            let d = diagram_of(arg)?;
            if json {
                Ok(serde_json::json!({
                    "schema": 1,
                    "diagram": format!("{},{},{}", arg.diagram.0, arg.diagram.1, arg.diagram.2),
                    "nodes": d.node_count(),
                    "class": d.classify(),
                })
                .to_string())
            } else {
                Ok(format!(
                    "T_{{{},{},{}}}: {} ({} nodes)",
                    arg.diagram.0,
                    arg.diagram.1,
                    arg.diagram.2,
                    d.classify(),
                    d.node_count()
                ))
            }
        }
        Cmd::Orbit { diagram, max_length } => {
            let d = diagram_of(diagram)?;
            let v = orbit_json(&d, *max_length)?;
            if json {
                Ok(v.to_string())
            } else {
                Ok(format!(
                    "{} elements, max length {}, complete: {}",
                    v["elements"].as_array().map_or(0, |a| a.len()),
                    v["max_length"],
                    v["complete"]
                ))
            }
        }
        Cmd::Sigma(arg) => {
            let d = diagram_of(arg)?;
            let c = sigma_chain(&d)?;
            if json {
                Ok(serde_json::json!({
                    "schema": 1,
                    "sigma0": c.sigma0.0, "sigma1": c.sigma1.0, "sigma2": c.sigma2.0,
                    "sigma3": c.sigma3.0, "sigma3_prime": c.sigma3_prime.0,
                })
                .to_string())
            } else {
                Ok(format!(
                    "sigma0  {}\nsigma1  {}\nsigma2  {}\nsigma3  {}\nsigma3' {}",
                    weight_line(&c.sigma0),
                    weight_line(&c.sigma1),
                    weight_line(&c.sigma2),
                    weight_line(&c.sigma3),
                    weight_line(&c.sigma3_prime)
                ))
            }
        }
        Cmd::Generators {
            diagram,
            variety,
            max_length,
        } => {
            let d = diagram_of(diagram)?;
            let poset = orbit_poset(&d, None)?;
            let id = poset.variety_id(*variety)?;
            let bound = max_length.unwrap_or_else(|| poset.max_length());
            let gens = poset.complement_filter(id, bound);
            let mut rows = Vec::new();
            for g in &gens {
                let e = poset.element(*g);
                let deg = poset.coordinate_degree(*g)?;
                rows.push((e.weight.clone(), e.length, deg));
            }
            if json {
                let items: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(w, l, deg)| {
                        serde_json::json!({"weight": w.0, "length": l, "degree": deg})
                    })
                    .collect();
                Ok(serde_json::json!({"schema": 1, "variety": variety, "generators": items})
                    .to_string())
            } else {
                let mut out = format!("{} generators for {variety}:\n", rows.len());
                for (w, l, deg) in rows {
                    out.push_str(&format!(
                        "{}  length {}  degree {}\n",
                        weight_line(&w),
                        l,
                        deg
                    ));
                }
                out.pop();
                Ok(out)
            }
        }
        Cmd::Levi { diagram, variety } => {
            let d = diagram_of(diagram)?;
            let poset = orbit_poset(&d, None)?;
            let id = poset.variety_id(*variety)?;
            let (nodes, blocks) = poset.levi_symmetry(id)?;
            if json {
                Ok(serde_json::json!({
                    "schema": 1,
                    "variety": variety,
                    "invariant_nodes": nodes.iter().map(|&n| d.label(n)).collect::<Vec<_>>(),
                    "blocks": blocks,
                })
                .to_string())
            } else {
                let desc: Vec<String> = blocks.iter().map(|b| format!("GL{b}")).collect();
                Ok(format!("{}: {}", variety, desc.join(" x ")))
            }
        }
        Cmd::Ranks { diagram, max_length } => {
            let d = diagram_of(diagram)?;
            let poset = orbit_poset(&d, *max_length)?;
            let sizes = poset.rank_sizes();
            if json {
                Ok(serde_json::json!({"schema": 1, "rank_sizes": sizes}).to_string())
            } else {
                let parts: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                Ok(parts.join(","))
            }
        }
        Cmd::Grading { diagram, module } => {
            let d = diagram_of(diagram)?;
            let x1 = d
                .x1_node()
                .ok_or_else(|| anyhow::anyhow!("diagram has no x1 node"))?;
            let g = z_grading_dims(&d, x1)?;
            let big = tpqr_core::big_cell_dimension(&d, x1)?;
            let module_part = if *module {
                let lam = Weight::fundamental(&d, x1);
                let ws = weight_multiplicities(&d, &lam)?;
                let mg = module_grading_from_system(&ws, x1)?;
                Some((mg, ws.total_dimension()))
            } else {
                None
            };
            if json {
                let mut v = serde_json::json!({
                    "schema": 1,
                    "dims": g.dims,
                    "levi": g.levi,
                    "total": g.total(),
                    "big_cell": big,
                });
                if let Some((mg, dim)) = &module_part {
                    v["module"] = serde_json::json!({
                        "span": mg.span(),
                        "dims": mg.dims.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                        "dimension": dim.to_string(),
                    });
                }
                Ok(v.to_string())
            } else {
                let dims: Vec<String> = g
                    .dims
                    .iter()
                    .map(|(gr, dim)| format!("g[{gr}]={dim}"))
                    .collect();
                let mut out = format!(
                    "{}  total {}  levi {}  big cell {}",
                    dims.join(" "),
                    g.total(),
                    g.levi,
                    big
                );
                if let Some((mg, dim)) = module_part {
                    out.push_str(&format!(
                        "\nmodule span 0..{}  dim {}  ends ({},{})",
                        mg.span(),
                        dim,
                        mg.dim_bottom(),
                        mg.dim_top()
                    ));
                }
                Ok(out)
            }
        }
        Cmd::Rescalc { cmd } => run_rescalc(cmd, json),
        Cmd::Schur { cmd } => run_schur(cmd, json),
        Cmd::Invariant {
            variety,
            script,
            dialect,
        } => {
            if *script {
                let dialect: Dialect = dialect.parse()?;
                Ok(emit_cas_script(dialect, *variety))
            } else {
                let gens = tpqr_core::generator_set(*variety);
                let degs: Vec<usize> = gens.iter().map(|g| g.degree()).collect();
                if json {
                    Ok(serde_json::json!({
                        "schema": 1,
                        "variety": variety,
                        "generators": gens.len(),
                        "degrees": degs,
                        "invariant_terms": gens[0].num_terms(),
                    })
                    .to_string())
                } else {
                    Ok(format!(
                        "{}: {} generators, degrees {:?}, invariant has {} terms",
                        variety,
                        gens.len(),
                        degs,
                        gens[0].num_terms()
                    ))
                }
            }
        }
        Cmd::Report { rtype } => {
            let rt: ReportType = rtype.parse()?;
            let rep = report(rt);
            let ok = rep.all_ok();
            let text = if json {
                serde_json::to_string(&rep)?
            } else {
                rep.render_text()
            };
            if ok {
                Ok(text)
            } else {
                // Emit the checklist, then fail the invocation.
                Err(anyhow::anyhow!("{text}\nreport has failing entries"))
            }
        }
    }
}

fn run_rescalc(cmd: &ResCmd, json: bool) -> anyhow::Result<String> {
    match cmd {
        ResCmd::Numerator { format, codim } => {
            let n = hilbert_numerator(format, *codim)?;
            if json {
                Ok(serde_json::json!({"schema": 1, "coefficients": n.coeffs}).to_string())
            } else {
                Ok(n.to_string())
            }
        }
        ResCmd::Degree { format, codim } => {
            let d = degree_of(format, *codim)?;
            if json {
                Ok(serde_json::json!({"schema": 1, "degree": d}).to_string())
            } else {
                Ok(d.to_string())
            }
        }
        ResCmd::Link { format, ci } => {
            let linked = linkage_dual(format, *ci)?;
            if json {
                Ok(serde_json::json!({"schema": 1, "format": linked}).to_string())
            } else {
                Ok(serde_json::to_string(&linked)?)
            }
        }
        ResCmd::Gorenstein { format, shift } => {
            let sum = gorenstein_sum(format, *shift)?;
            if json {
                Ok(serde_json::json!({"schema": 1, "format": sum}).to_string())
            } else {
                Ok(serde_json::to_string(&sum)?)
            }
        }
        ResCmd::Solve {
            gens,
            top,
            middle_rank,
        } => {
            let sol = betti_degree_solve(gens, top, *middle_rank, 3)?;
            match sol {
                BettiSolution::Unique(d) => {
                    if json {
                        Ok(serde_json::json!({"schema": 1, "unique": d}).to_string())
                    } else {
                        let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                        Ok(parts.join(","))
                    }
                }
                BettiSolution::Indeterminate {
                    sum,
                    sum_of_squares,
                } => {
                    if json {
                        Ok(serde_json::json!({
                            "schema": 1,
                            "indeterminate": {"sum": sum, "sum_of_squares": sum_of_squares}
                        })
                        .to_string())
                    } else {
                        Ok(format!(
                            "indeterminate: sum {sum}, sum of squares {sum_of_squares}"
                        ))
                    }
                }
            }
        }
    }
}

fn run_schur(cmd: &SchurCmd, json: bool) -> anyhow::Result<String> {
    match cmd {
        SchurCmd::Check { name } => {
            let formats = match name {
                Some(n) => vec![builtin_equivariant_format(n)
                    .ok_or_else(|| anyhow::anyhow!("unknown format `{n}`"))?],
                None => builtin_equivariant_formats(),
            };
            let mut reports = Vec::new();
            for ef in &formats {
                reports.push(verify_equivariant_format(ef)?);
            }
            if json {
                Ok(serde_json::json!({"schema": 1, "checks": reports}).to_string())
            } else {
                let mut out = String::new();
                let mut any_rank_fail = false;
                for rep in &reports {
                    any_rank_fail |= !rep.ranks_ok;
                    out.push_str(&format!(
                        "{}: ranks {}, twists {}\n",
                        rep.name,
                        if rep.ranks_ok { "ok" } else { "MISMATCH" },
                        if rep.twists_ok { "ok" } else { "flagged" }
                    ));
                    for tc in rep.twist_checks.iter().filter(|t| !t.ok) {
                        out.push_str(&format!(
                            "  h{}: {}(x){} displayed twist {} but weight rule gives {}\n",
                            tc.hom_degree,
                            tc.lambda,
                            tc.mu,
                            tc.displayed_twist,
                            tc.implied_twist
                        ));
                    }
                }
                out.pop();
                if any_rank_fail {
                    Err(anyhow::anyhow!("{out}\nrank check failed"))
                } else {
                    Ok(out)
                }
            }
        }
    }
}

/// Entry point shared by the binary and tests. `args` excludes argv[0].
pub fn run(args: Vec<String>) -> i32 {
    let mut argv = vec!["tpqr".to_string()];
    argv.extend(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match run_cmd(&cli) {
        Ok(text) => {
            let payload = if text.ends_with('\n') {
                text
            } else {
                format!("{text}\n")
            };
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, payload) {
                        eprintln!("error: {e}");
                        return 1;
                    }
                }
                None => {
                    let mut stdout = std::io::stdout();
                    let _ = stdout.write_all(payload.as_bytes());
                }
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
