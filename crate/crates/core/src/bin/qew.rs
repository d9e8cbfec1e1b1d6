use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use qew::derk::{derk, DerivationResult};
use qew::dp::{DpRows, MomentRows};
use qew::kernel::BiPoly;
use qew::moments::{growth_estimate, moment_series, power_sum_coefficients, stats_rows};
use qew::oeis::oeis_lookup;
use qew::parse::{parse_poly_expr, parse_step_set};
use qew::series::{series_fixed_point_solve, Series};
use qew::steps::StepSet;
use qew::{Error, Result};

#[derive(Parser)]
#[command(name = "qew", version, about = "Exact area enumerators and their q-derivatives for lattice paths")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed-walk area enumerators A_{0,n}(q) by dynamic programming
    Dp {
        #[arg(long, allow_hyphen_values = true)]
        steps: String,
        #[arg(long)]
        max_n: usize,
        /// print path counts A_{0,n}(1) instead
        #[arg(long)]
        at_q1: bool,
        #[arg(long)]
        json: bool,
    },
    /// Closed forms of f^(k)(x,1) for f = P + Q f + R f(x,q) f(qx,q)
    Derive {
        #[command(flatten)]
        eq: Equation,
        #[arg(long)]
        order: usize,
        #[arg(long, conflicts_with = "series")]
        json: bool,
        /// print Maclaurin coefficients to x^N instead of closed forms
        #[arg(long, value_name = "N")]
        series: Option<usize>,
    },
    /// Maclaurin coefficients of f^(k)(x,1)
    Series {
        #[command(flatten)]
        eq: Equation,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// highest power of x
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Per-length sums of area^p
    Moments {
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["p", "q", "r"])]
        steps: Option<String>,
        #[command(flatten)]
        eq: OptEquation,
        #[arg(long)]
        power: usize,
        /// highest length (power of x)
        #[arg(long)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Count, total area, total squared area, mean and variance per length
    Stats {
        #[arg(long, allow_hyphen_values = true)]
        steps: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
        /// also print a numeric growth-rate estimate of the counts
        #[arg(long)]
        growth: bool,
    },
    /// Look a sequence prefix up on OEIS
    Oeis {
        /// comma-separated terms
        #[arg(long, allow_hyphen_values = true)]
        terms: String,
        #[arg(long)]
        online: bool,
    },
}

#[derive(Args)]
struct Equation {
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long, allow_hyphen_values = true)]
    r: String,
}

#[derive(Args)]
struct OptEquation {
    #[arg(long, allow_hyphen_values = true, requires_all = ["q", "r"])]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["p", "r"])]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["p", "q"])]
    r: Option<String>,
}

impl Equation {
    fn parse(&self) -> Result<(BiPoly, BiPoly, BiPoly)> {
        Ok((parse_poly_expr(&self.p)?, parse_poly_expr(&self.q)?, parse_poly_expr(&self.r)?))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let res = run(cli.cmd, &mut out).and_then(|()| out.flush().map_err(io_err));
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            drop(out);
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::InvalidInput(format!("write failed: {e}"))
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|t| t.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn series_ints(s: &Series) -> Vec<String> {
    s.coeffs().iter().map(ToString::to_string).collect()
}

fn run(cmd: Cmd, out: &mut impl Write) -> Result<()> {
    match cmd {
        Cmd::Dp { steps, max_n, at_q1, json } => {
            let steps = parse_step_set(&steps)?;
            let rows = DpRows::new(steps).with_horizon(max_n);
            if json {
                let v: Vec<Value> = rows
                    .map(|row| {
                        let p = row.closed();
                        let terms: Vec<Value> = if at_q1 {
                            vec![json!([0, p.eval_q1().to_string()])]
                        } else {
                            p.terms().map(|(h, c)| json!([h, c.to_string()])).collect()
                        };
                        json!({"n": row.n, "terms": terms})
                    })
                    .collect();
                writeln!(out, "{}", Value::Array(v)).map_err(io_err)?;
            } else if at_q1 {
                writeln!(out, "{}", list(rows.map(|r| r.closed().eval_q1()))).map_err(io_err)?;
            } else {
                writeln!(out, "{}", list(rows.map(|r| r.closed()))).map_err(io_err)?;
            }
        }
        Cmd::Derive { eq, order, json, series } => {
            let (p, q, r) = eq.parse()?;
            let res = derk(&p, &q, &r, order)?;
            print_derivation(&res, json, series, out)?;
        }
        Cmd::Series { eq, k, terms, json } => {
            let (p, q, r) = eq.parse()?;
            let s = if k == 0 {
                series_fixed_point_solve(&p.eval_q1(), &q.eval_q1(), &r.eval_q1(), terms)?
            } else {
                derk(&p, &q, &r, k)?.f[k].to_series(terms)?
            };
            let coeffs = series_ints(&s);
            if json {
                writeln!(out, "{}", json!(coeffs)).map_err(io_err)?;
            } else {
                writeln!(out, "{}", list(coeffs)).map_err(io_err)?;
            }
        }
        Cmd::Moments { steps, eq, power, order, json } => {
            let coeffs = power_moments(steps.as_deref(), &eq, power, order)?;
            if json {
                writeln!(out, "{}", json!(coeffs)).map_err(io_err)?;
            } else {
                writeln!(out, "{}", list(coeffs)).map_err(io_err)?;
            }
        }
        Cmd::Stats { steps, max_n, json, growth } => {
            let steps = parse_step_set(&steps)?;
            if max_n == 0 {
                return Err(Error::InvalidInput("max-n must be at least 1".into()));
            }
            let mut counts = Vec::new();
            if json {
                write!(out, "[").map_err(io_err)?;
            } else {
                writeln!(out, "n a0 a1 a2 mean variance").map_err(io_err)?;
            }
            for row in stats_rows(&steps, max_n) {
                if json {
                    let sep = if row.n == 0 { "" } else { "," };
                    write!(out, "{sep}\n{}", row.to_json()).map_err(io_err)?;
                } else {
                    writeln!(out, "{row}").map_err(io_err)?;
                }
                if row.a0 > BigInt::from(0) {
                    counts.push(BigRational::from_integer(row.a0));
                }
            }
            if json {
                writeln!(out, "\n]").map_err(io_err)?;
            }
            if growth {
                let g = growth_estimate(&counts)?;
                let line = format!("growth estimate of a0 over its nonzero terms: {g:.6}");
                if json {
                    eprintln!("{line}");
                } else {
                    writeln!(out, "{line}").map_err(io_err)?;
                }
            }
        }
        Cmd::Oeis { terms, online } => {
            let prefix = terms
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<BigInt>()
                        .map_err(|_| Error::InvalidInput(format!("'{t}' is not an integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            for hit in oeis_lookup(&prefix, online)? {
                writeln!(out, "{} {}", hit.id, hit.name).map_err(io_err)?;
            }
        }
    }
    Ok(())
}

fn print_derivation(res: &DerivationResult, json: bool, series: Option<usize>, out: &mut impl Write) -> Result<()> {
    if json {
        let entries: Vec<Value> = res
            .f
            .iter()
            .enumerate()
            .map(|(k, fk)| {
                let mut v = fk.to_json();
                v["k"] = json!(k);
                v
            })
            .collect();
        writeln!(out, "{}", Value::Array(entries)).map_err(io_err)?;
        return Ok(());
    }
    if let Some(n) = series {
        for (k, fk) in res.f.iter().enumerate() {
            writeln!(out, "F[{k}] = {}", fk.to_series(n)?).map_err(io_err)?;
        }
        return Ok(());
    }
    writeln!(out, "Delta = {}", res.delta).map_err(io_err)?;
    write!(out, "{res}").map_err(io_err)?;
    Ok(())
}

/// Coefficients of `x^0..=x^order` of the enumerator of `sum area^power`,
/// from the closed forms when the step set has a functional equation and
/// from the moment DP otherwise.
fn power_moments(steps: Option<&str>, eq: &OptEquation, power: usize, order: usize) -> Result<Vec<String>> {
    let weights = power_sum_coefficients(power)?;
    let equation = match (steps, &eq.p, &eq.q, &eq.r) {
        (Some(s), ..) => {
            let steps = parse_step_set(s)?;
            match steps.functional_equation() {
                Some(e) => e,
                None => return Ok(dp_power_moments(&steps, &weights, order)),
            }
        }
        (None, Some(p), Some(q), Some(r)) => (parse_poly_expr(p)?, parse_poly_expr(q)?, parse_poly_expr(r)?),
        _ => return Err(Error::InvalidInput("give either --steps or all of --p, --q, --r".into())),
    };
    let res = derk(&equation.0, &equation.1, &equation.2, power)?;
    Ok(series_ints(&moment_series(&res, power, order)?))
}

fn dp_power_moments(steps: &StepSet, weights: &[BigInt], order: usize) -> Vec<String> {
    MomentRows::new(steps, weights.len(), order)
        .map(|row| {
            let total: BigInt = weights.iter().zip(&row.moments[1..]).map(|(w, m)| w * m).sum();
            total.to_string()
        })
        .collect()
}
