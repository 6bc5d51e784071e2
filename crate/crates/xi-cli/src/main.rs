use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use xi_core::closed_formula::xi_formula;
use xi_core::exec::Exec;
use xi_core::magic::magic;
use xi_core::report::VerifyReport;
use xi_core::rou::{specialize, xi_rou_corollary, xi_rou_formula};
use xi_core::verify::{run_all, run_suite, Bounds, Suite};
use xi_core::words::{build_word, default_truncation, xi_oracle, xi_recursive};
use xi_core::{Laurent, Node, Result};

#[derive(Parser)]
#[command(name = "demazure", version, about = "Exact Demazure operator computations in affine type A2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum XiMethod {
    Formula,
    Oracle,
    Recursion,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouMethod {
    /// The closed value at the root of unity.
    Formula,
    /// The closed formula for Xi, then specialized.
    Specialize,
    /// The form depending only on beta and d.
    Corollary,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Xi(a,b,i,k).
    Xi {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "formula")]
        method: XiMethod,
        /// Oracle only: keep terms divisible by x1 x2 x3.
        #[arg(long)]
        no_truncate: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate xi_m(a,i) at a primitive 6m-th root of unity.
    XiRou {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        i: i64,
        #[arg(long, value_enum, default_value = "formula")]
        method: RouMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate magic(nu,k,beta,eps), rendered in q.
    Magic {
        #[arg(long, allow_negative_numbers = true)]
        nu: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        beta: i64,
        #[arg(long, allow_negative_numbers = true)]
        eps: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the letters of w(a,b,i).
    Word {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        i: i64,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long)]
        max_len: Option<u32>,
        #[arg(long)]
        max_nu: Option<i64>,
        #[arg(long)]
        max_m: Option<u32>,
        #[arg(long)]
        max_deg: Option<u32>,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write the report to this file.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn laurent_json(v: &Laurent) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn print_value(format: Format, text: String, value: serde_json::Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

fn cmd_xi(a: u32, b: u32, i: Node, k: u32, method: XiMethod, truncate: bool) -> Result<Laurent> {
    match method {
        XiMethod::Formula => xi_formula(a, b, i, k),
        XiMethod::Oracle => xi_oracle(a, b, i, k, truncate),
        XiMethod::Recursion => xi_recursive(a, b, i, k),
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Xi { a, b, i, k, method, no_truncate, format } => {
            let node = match Node::new(i) {
                Ok(n) => n,
                Err(e) => return usage_error(e),
            };
            let truncate = !no_truncate && default_truncation(a + b + 1);
            match cmd_xi(a, b, node, k, method, truncate) {
                Ok(v) => {
                    let j = json!({"schema": 1, "a": a, "b": b, "i": i, "k": k, "value": laurent_json(&v)});
                    print_value(format, v.to_string(), j);
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::XiRou { m, a, i, method, format } => {
            let node = match Node::new(i) {
                Ok(n) => n,
                Err(e) => return usage_error(e),
            };
            if m < 2 || a >= 3 * m {
                return usage_error(format!("need m >= 2 and a <= 3m - 1, got m={m}, a={a}"));
            }
            let v = match method {
                RouMethod::Formula => xi_rou_formula(m, a, node),
                RouMethod::Corollary => xi_rou_corollary(m, a, node),
                RouMethod::Specialize => {
                    xi_formula(a, 3 * m - a - 1, node, 2 * m).map(|v| specialize(&v, m))
                }
            };
            match v {
                Ok(v) => {
                    let j = json!({"schema": 1, "m": m, "a": a, "i": i, "value": v});
                    print_value(format, v.to_string(), j);
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Magic { nu, k, beta, eps, format } => match magic(nu, k, beta, eps) {
            Ok(v) => {
                let text = v.render_q().unwrap_or_else(|| v.to_string());
                let j = json!({"schema": 1, "nu": nu, "k": k, "beta": beta, "eps": eps, "q": text, "value": laurent_json(&v)});
                print_value(format, text, j);
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Command::Word { a, b, i } => match Node::new(i) {
            Ok(n) => {
                println!("{}", build_word(a, b, n).render());
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Command::Verify { suite, max_len, max_nu, max_m, max_deg, jobs, format, output } => {
            let bounds = Bounds { max_len, max_nu, max_m, max_deg };
            let exec = Exec::with_jobs(jobs);
            let report: VerifyReport = if suite == "all" {
                run_all(&bounds, exec)
            } else {
                match Suite::from_name(&suite) {
                    Some(s) => run_suite(s, &bounds, exec),
                    None => {
                        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                        return usage_error(format!(
                            "unknown suite '{suite}'; expected one of: all, {}",
                            names.join(", ")
                        ));
                    }
                }
            };
            let rendered = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            print!("{rendered}");
            if let Some(path) = output {
                if let Err(e) = std::fs::write(&path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
