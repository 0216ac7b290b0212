//! `dperm`: enumerate D-permutations, compute their statistics, build
//! generating polynomials, expand and transform continued fractions, run
//! the path bijections, and verify the identity suite.

mod render;

use std::collections::HashMap;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use dperm_core::cfrac::{
    augment_restrict, classical_sequences, contract_even, contract_odd, jfraction_from_moments,
    CfSpec, SequenceName, TransformDirection,
};
use dperm_core::families::{build_polynomial, FamilyId};
use dperm_core::paths::{
    biane_inverse, biane_labels, fz_inverse, fz_labels, fz_path, psi, LabelVariant, Path,
    PathKind, Step,
};
use dperm_core::perm::{class_counts, enumerate_d_permutations, DClass, Permutation};
use dperm_core::poly::{Poly, VarTable};
use dperm_core::stats::stat_profile;
use dperm_core::verify::{run_all, run_check, CheckOptions, Mode, Status, VerifyReport};

use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Parser)]
#[command(name = "dperm", version, about = "D-permutation toolkit", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream a D-permutation class in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        class: String,
        /// Print only the count.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Class-count table rows 0..=nmax (CSV).
    Classcounts {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Statistic profile of one permutation.
    Stats {
        /// One-line word, e.g. `3142` or `7 1 9 2 ...` (quoted).
        perm: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a generating polynomial.
    Poly {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Continued-fraction operations.
    Cf {
        #[command(subcommand)]
        cmd: CfCommand,
    },
    /// Permutation <-> labeled-path bijections.
    Bijection {
        #[command(subcommand)]
        cmd: BijectionCommand,
    },
    /// Run one named check, or all of them.
    Verify {
        /// Check id (see `verify list`) or `all`.
        id: String,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run every check and emit the JSON report.
    Report {
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum CfCommand {
    /// Expand an S-, J- or T-fraction with integer coefficients.
    Expand {
        /// Comma-separated alpha coefficients (S/T).
        #[arg(long)]
        alpha: Option<String>,
        /// Comma-separated delta coefficients (T), zero-padded.
        #[arg(long)]
        delta: Option<String>,
        /// Comma-separated gamma coefficients (J).
        #[arg(long)]
        gamma: Option<String>,
        /// Comma-separated beta coefficients (J).
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Contract a T-fraction into a J-fraction (even or odd), or apply the
    /// augmentation/restriction transform.
    Contract {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        delta: Option<String>,
        /// even | odd | augment | restrict
        #[arg(long, default_value = "even")]
        direction: String,
        #[arg(long)]
        json: bool,
    },
    /// Exact J-fraction coefficients from integer or rational moments.
    FromMoments {
        /// Comma-separated moments, `m0` first (e.g. `1,1,2,5,14`).
        #[arg(long)]
        moments: String,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Classical sequences from their continued fractions.
    Sequences {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        /// OEIS-style b-file lines `index value`.
        #[arg(long)]
        bfile: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct BijectionIo {
    /// xi | xihat | biane
    #[arg(long, default_value = "xi")]
    labels: String,
}

#[derive(Subcommand)]
enum BijectionCommand {
    /// Map a permutation to its labeled almost-Dyck path.
    Forward {
        perm: String,
        #[command(flatten)]
        io: BijectionIo,
        /// Also print the 0-Schröder form of the path.
        #[arg(long)]
        schroeder: bool,
        /// Emit a diagram: text | svg
        #[arg(long)]
        dump: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild the permutation from a path and labels.
    Inverse {
        /// Steps as a word over U (rise) and D (fall), e.g. `UUDD`.
        #[arg(long)]
        path: String,
        /// Comma-separated labels; pairs `a:b` for biane.
        #[arg(long)]
        values: String,
        #[command(flatten)]
        io: BijectionIo,
        #[arg(long)]
        json: bool,
    },
    /// Roundtrip every member of a class.
    Roundtrip {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        class: String,
        #[command(flatten)]
        io: BijectionIo,
    },
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap renders help/version itself with status 0
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(2);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Enumerate { n, class, count, json } => {
            let class = DClass::from_str(&class)?;
            let iter = enumerate_d_permutations(n, class);
            if count {
                println!("{}", iter.count());
            } else if json {
                let words: Vec<Vec<u32>> = iter.map(|p| p.word().to_vec()).collect();
                println!("{}", serde_json::to_string(&words)?);
            } else {
                for p in iter {
                    println!("{p}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classcounts { nmax, json } => {
            if json {
                let rows: Vec<serde_json::Value> = (0..=nmax)
                    .map(|n| {
                        let c = class_counts(n);
                        serde_json::json!({
                            "n": n,
                            "dcycle": c.dcycle,
                            "derangement": c.derangement,
                            "semiderangement": c.semiderangement,
                            "semi_union": c.semi_union,
                            "pure": c.pure,
                            "all": c.all,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string(&rows)?);
            } else {
                println!("n,dcycle,derangement,semiderangement,semi_union,pure,all");
                for n in 0..=nmax {
                    let c = class_counts(n);
                    println!(
                        "{n},{},{},{},{},{},{}",
                        c.dcycle, c.derangement, c.semiderangement, c.semi_union, c.pure, c.all
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { perm, json } => {
            let p: Permutation = perm.parse()?;
            if !p.is_d_permutation()? {
                bail!("{p} is not a D-permutation");
            }
            let s = stat_profile(&p);
            if json {
                println!("{}", serde_json::to_string_pretty(&stats_json(&s))?);
            } else {
                for (k, v) in stats_pairs(&s) {
                    println!("{k}: {v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly { family, n, json } => {
            let family = FamilyId::from_str(&family)?;
            let mut vt = VarTable::new();
            let p = build_polynomial(family, n, &mut vt);
            let rendered = p.render(&vt);
            if json {
                println!(
                    "{}",
                    serde_json::json!({"family": format!("{family:?}"), "n": n, "poly": rendered, "terms": p.num_terms()})
                );
            } else {
                println!("{rendered}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cf { cmd } => run_cf(cmd),
        Command::Bijection { cmd } => run_bijection(cmd),
        Command::Verify { id, nmax, mode, seed, cap, json } => {
            if id == "list" {
                for id in dperm_core::verify::all_check_ids() {
                    println!("{id}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let mut opts = CheckOptions {
                n_max: nmax,
                ..CheckOptions::default()
            };
            if let Some(m) = mode {
                opts.mode = Some(Mode::from_str(&m)?);
            }
            if let Some(s) = seed {
                opts.seed = s;
            }
            if let Some(c) = cap {
                opts.cap = c;
            }
            let report = if id == "all" {
                run_all(&opts)
            } else {
                VerifyReport {
                    checks: vec![run_check(&id, &opts)?],
                }
            };
            print_report(&report, json)?;
            Ok(if report.any_failure() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Report { nmax, seed } => {
            let mut opts = CheckOptions {
                n_max: nmax,
                ..CheckOptions::default()
            };
            if let Some(s) = seed {
                opts.seed = s;
            }
            let report = run_all(&opts);
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.any_failure() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn print_report(report: &VerifyReport, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(report)?);
    } else {
        for c in &report.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Counterexample => "counterexample",
            };
            match &c.details {
                Some(d) => println!("{}: {status} ({} ms) -- {d}", c.check_id, c.millis),
                None => println!("{}: {status} ({} ms)", c.check_id, c.millis),
            }
        }
    }
    Ok(())
}

fn parse_int_list(s: &str) -> Result<Vec<Poly>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map(Poly::from_i64)
                .map_err(|_| anyhow!("bad integer `{t}`"))
        })
        .collect()
}

fn parse_rational_list(s: &str) -> Result<Vec<BigRational>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            if let Some((n, d)) = t.split_once('/') {
                Ok(BigRational::new(
                    n.parse::<BigInt>().context("bad numerator")?,
                    d.parse::<BigInt>().context("bad denominator")?,
                ))
            } else {
                Ok(BigRational::from(t.parse::<BigInt>().context("bad integer")?))
            }
        })
        .collect()
}

fn run_cf(cmd: CfCommand) -> Result<ExitCode> {
    match cmd {
        CfCommand::Expand { alpha, delta, gamma, beta, order, json } => {
            let spec = match (alpha, gamma) {
                (Some(a), None) => {
                    let alpha = parse_int_list(&a)?;
                    match delta {
                        Some(d) => {
                            let mut delta = parse_int_list(&d)?;
                            while delta.len() < alpha.len() {
                                delta.push(Poly::zero());
                            }
                            CfSpec::t_fraction(alpha, delta)
                        }
                        None => CfSpec::s_fraction(alpha),
                    }
                }
                (None, Some(g)) => {
                    let beta = beta.ok_or_else(|| anyhow!("a J-fraction needs --beta"))?;
                    CfSpec::j_fraction(parse_int_list(&g)?, parse_int_list(&beta)?)
                }
                _ => bail!("give either --alpha (S/T) or --gamma/--beta (J)"),
            };
            let series = spec.expand(order)?;
            let vals: Vec<String> = series
                .coeffs()
                .iter()
                .map(|c| c.as_constant().map(|v| v.to_string()).unwrap_or_default())
                .collect();
            if json {
                println!("{}", serde_json::to_string(&vals)?);
            } else {
                println!("{}", vals.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        CfCommand::Contract { alpha, delta, direction, json } => {
            let alpha = parse_int_list(&alpha)?;
            let mut delta = match delta {
                Some(d) => parse_int_list(&d)?,
                None => Vec::new(),
            };
            while delta.len() < alpha.len() {
                delta.push(Poly::zero());
            }
            let render = |v: &[Poly]| -> Vec<String> {
                let vt = VarTable::new();
                v.iter().map(|p| p.render(&vt)).collect()
            };
            match direction.as_str() {
                "even" => {
                    let (g, b) = contract_even(&alpha, &delta)?;
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({"gamma": render(&g), "beta": render(&b)})
                        );
                    } else {
                        println!("gamma: {}", render(&g).join(" "));
                        println!("beta: {}", render(&b).join(" "));
                    }
                }
                "odd" => {
                    let (lead, g, b) = contract_odd(&alpha, &delta)?;
                    let vt = VarTable::new();
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({"lead": lead.render(&vt), "gamma": render(&g), "beta": render(&b)})
                        );
                    } else {
                        println!("lead: {}", lead.render(&vt));
                        println!("gamma: {}", render(&g).join(" "));
                        println!("beta: {}", render(&b).join(" "));
                    }
                }
                "augment" | "restrict" => {
                    let dir = if direction == "augment" {
                        TransformDirection::Augment
                    } else {
                        TransformDirection::Restrict
                    };
                    let out = augment_restrict(&CfSpec::t_fraction(alpha, delta), dir)?;
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({"alpha": render(&out.alpha), "delta": render(&out.delta)})
                        );
                    } else {
                        println!("alpha: {}", render(&out.alpha).join(" "));
                        println!("delta: {}", render(&out.delta).join(" "));
                    }
                }
                other => bail!("unknown direction `{other}`"),
            }
            Ok(ExitCode::SUCCESS)
        }
        CfCommand::FromMoments { moments, depth, json } => {
            let m = parse_rational_list(&moments)?;
            let (gamma, beta) = jfraction_from_moments(&m, depth)?;
            let gs: Vec<String> = gamma.iter().map(|v| v.to_string()).collect();
            let bs: Vec<String> = beta.iter().map(|v| v.to_string()).collect();
            if json {
                println!("{}", serde_json::json!({"gamma": gs, "beta": bs}));
            } else {
                println!("gamma: {}", gs.join(" "));
                println!("beta: {}", bs.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        CfCommand::Sequences { name, n, bfile, json } => {
            let name = SequenceName::from_str(&name)?;
            let seq = classical_sequences(name, n);
            if bfile {
                for (i, v) in seq.iter().enumerate() {
                    println!("{i} {v}");
                }
            } else if json {
                let vals: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
                println!("{}", serde_json::to_string(&vals)?);
            } else {
                let vals: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
                println!("{}", vals.join(", "));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_steps(s: &str) -> Result<Path> {
    let steps: Vec<Step> = s
        .chars()
        .map(|c| match c.to_ascii_uppercase() {
            'U' => Ok(Step::Rise),
            'D' => Ok(Step::Fall),
            other => Err(anyhow!("bad step `{other}`; use U and D")),
        })
        .collect::<Result<_>>()?;
    Ok(Path::new(steps, PathKind::AlmostDyck)?)
}

fn steps_string(path: &Path) -> String {
    path.steps
        .iter()
        .map(|s| match s {
            Step::Rise => 'U',
            Step::Fall => 'D',
            Step::LongLevel => 'L',
        })
        .collect()
}

fn run_bijection(cmd: BijectionCommand) -> Result<ExitCode> {
    match cmd {
        BijectionCommand::Forward { perm, io, schroeder, dump, json } => {
            let p: Permutation = perm.parse()?;
            if !p.is_d_permutation()? {
                bail!("{p} is not a D-permutation");
            }
            let path = fz_path(&p);
            let heights = path.heights();
            let labels_str = match io.labels.as_str() {
                "biane" => biane_labels(&p)
                    .iter()
                    .map(|(a, b)| format!("{a}:{b}"))
                    .collect::<Vec<_>>()
                    .join(","),
                v => {
                    let variant = LabelVariant::from_str(v)?;
                    fz_labels(&p, variant)
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                }
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "word": p.word(),
                        "steps": steps_string(&path),
                        "heights": &heights[1..],
                        "labels": labels_str,
                    })
                );
            } else {
                println!("steps: {}", steps_string(&path));
                println!(
                    "heights: {}",
                    heights[1..]
                        .iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                println!("labels: {labels_str}");
                if schroeder {
                    println!("schroeder: {}", steps_string(&psi(&path)?));
                }
            }
            match dump.as_deref() {
                Some("text") => println!("{}", render::path_text(&path)),
                Some("svg") => println!("{}", render::diagram_svg(&p, &path)),
                Some(other) => bail!("unknown dump format `{other}`"),
                None => {}
            }
            Ok(ExitCode::SUCCESS)
        }
        BijectionCommand::Inverse { path, values, io, json } => {
            let path = parse_steps(&path)?;
            let p = match io.labels.as_str() {
                "biane" => {
                    let labels: Vec<(u32, u32)> = values
                        .split(',')
                        .map(|t| -> Result<(u32, u32)> {
                            let (a, b) = t
                                .trim()
                                .split_once(':')
                                .ok_or_else(|| anyhow!("pair labels look like `a:b`"))?;
                            Ok((a.parse()?, b.parse()?))
                        })
                        .collect::<Result<_>>()?;
                    biane_inverse(&path, &labels)?.permutation
                }
                v => {
                    let variant = LabelVariant::from_str(v)?;
                    let labels: Vec<u32> = values
                        .split(',')
                        .map(|t| t.trim().parse().context("bad label"))
                        .collect::<Result<_>>()?;
                    fz_inverse(&path, &labels, variant)?
                }
            };
            if json {
                println!("{}", serde_json::json!({"word": p.word()}));
            } else {
                println!("{p}");
            }
            Ok(ExitCode::SUCCESS)
        }
        BijectionCommand::Roundtrip { n, class, io } => {
            let class = DClass::from_str(&class)?;
            let mut count = 0u64;
            for p in enumerate_d_permutations(n, class) {
                let path = fz_path(&p);
                let back = match io.labels.as_str() {
                    "biane" => {
                        let out = biane_inverse(&path, &biane_labels(&p))?;
                        anyhow::ensure!(
                            out.cycles_closed as usize == p.cycle_count(),
                            "cycle count mismatch for {p}"
                        );
                        out.permutation
                    }
                    v => {
                        let variant = LabelVariant::from_str(v)?;
                        fz_inverse(&path, &fz_labels(&p, variant), variant)?
                    }
                };
                anyhow::ensure!(back == p, "roundtrip failed for {p}");
                count += 1;
            }
            println!("roundtrip ok: {count} permutations");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn stats_pairs(s: &dperm_core::StatProfile) -> Vec<(&'static str, u32)> {
    vec![
        ("eareccpeak", s.eareccpeak),
        ("eareccdfall", s.eareccdfall),
        ("ereccval", s.ereccval),
        ("ereccdrise", s.ereccdrise),
        ("nrcpeak", s.nrcpeak),
        ("nrcdfall", s.nrcdfall),
        ("nrcval", s.nrcval),
        ("nrcdrise", s.nrcdrise),
        ("evennrfix", s.evennrfix),
        ("oddnrfix", s.oddnrfix),
        ("evenrar", s.evenrar),
        ("oddrar", s.oddrar),
        ("ucrosscval", s.ucrosscval),
        ("ucrosscdrise", s.ucrosscdrise),
        ("lcrosscpeak", s.lcrosscpeak),
        ("lcrosscdfall", s.lcrosscdfall),
        ("unestcval", s.unestcval),
        ("unestcdrise", s.unestcdrise),
        ("lnestcpeak", s.lnestcpeak),
        ("lnestcdfall", s.lnestcdfall),
        ("ujoin", s.ujoin),
        ("ljoin", s.ljoin),
        ("psnest_e", s.psnest_e),
        ("psnest_o", s.psnest_o),
        ("cyc", s.cyc),
        ("minval", s.minval),
        ("nminval", s.nminval),
        ("maxpeak", s.maxpeak),
        ("nmaxpeak", s.nmaxpeak),
        ("ereccpeak'", s.ereccpeak_p),
        ("nrcpeak'", s.nrcpeak_p),
        ("ereccdrise'", s.ereccdrise_p),
        ("nrcdrise'", s.nrcdrise_p),
        ("eareccval'", s.eareccval_p),
        ("nrcval'", s.nrcval_p),
        ("eareccdfall'", s.eareccdfall_p),
        ("nrcdfall'", s.nrcdfall_p),
        ("ucrosscpeak'", s.ucrosscpeak_p),
        ("unestcpeak'", s.unestcpeak_p),
        ("ucrosscdrise'", s.ucrosscdrise_p),
        ("unestcdrise'", s.unestcdrise_p),
        ("lcrosscval'", s.lcrosscval_p),
        ("lnestcval'", s.lnestcval_p),
        ("lcrosscdfall'", s.lcrosscdfall_p),
        ("lnestcdfall'", s.lnestcdfall_p),
        ("inv", s.inv),
    ]
}

fn stats_json(s: &dperm_core::StatProfile) -> serde_json::Value {
    let map: HashMap<&str, u32> = stats_pairs(s).into_iter().collect();
    serde_json::json!(map)
}
