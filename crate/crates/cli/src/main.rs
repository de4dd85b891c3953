mod args;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use tspread::betti::{betti_table, corner_sequence};
use tspread::borel::{bshad, borel_closure_degree, min_bshad_set, min_bshad_single, shadow_power};
use tspread::enumeration::{card_a, card_m, enumerate_a, enumerate_m, rank_in_a, rank_terms, successor_in_a};
use tspread::io::{ideal_to_m2, IdealJson, ReportJson};
use tspread::solver::{max_corners, solve, CornerSpec, Verdict};
use tspread::{Ambient, TIdeal, TMonomial, TMonomialSet};
use tspread_oracle::sweep::run_suite;

use args::{AmbientArgs, BettiFormat, Cli, Command, ListFormat};

const DEFAULT_MAX_CELLS: u128 = 10_000_000;

fn max_cells() -> Result<u128> {
    match std::env::var("TSPREAD_MAX_CELLS") {
        Ok(v) => v.trim().parse().with_context(|| format!("TSPREAD_MAX_CELLS={v:?} is not a number")),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

/// Refuses work whose predicted output exceeds `TSPREAD_MAX_CELLS` indices.
fn check_cells(what: &str, predicted: Option<u128>) -> Result<()> {
    let limit = max_cells()?;
    match predicted {
        Some(p) if p <= limit => Ok(()),
        Some(p) => bail!("{what} would produce about {p} cells, above TSPREAD_MAX_CELLS = {limit}"),
        None => bail!("{what} is too large to size"),
    }
}

/// Upper bound on the cells of any degree-`d` set in the ambient.
fn degree_cells(amb: &Ambient, d: usize) -> Option<u128> {
    card_m(amb.n(), d, amb.t()).ok()?.checked_mul(d.max(1) as u128)
}

fn ambient(a: &AmbientArgs) -> Result<Ambient> {
    Ok(Ambient::new(a.n, a.t)?)
}

fn parse_monomial(s: &str, amb: &Ambient) -> Result<TMonomial> {
    let u: TMonomial = s.parse().map_err(|e| anyhow::anyhow!("{e}"))?;
    u.check_tspread(amb)?;
    Ok(u)
}

/// A JSON array of index arrays, inline or from a file.
fn read_gens(source: &str, amb: &Ambient) -> Result<TMonomialSet> {
    let text = if source.trim_start().starts_with('[') {
        source.to_string()
    } else {
        fs::read_to_string(source).with_context(|| format!("reading {source}"))?
    };
    let gens: Vec<TMonomial> = serde_json::from_str(&text).with_context(|| format!("parsing generators from {source}"))?;
    let Some(d) = gens.first().map(TMonomial::degree) else { bail!("no generators given") };
    Ok(TMonomialSet::new(*amb, d, gens)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn render_list<'a>(items: impl IntoIterator<Item = &'a TMonomial>, format: ListFormat) -> String {
    let items: Vec<&TMonomial> = items.into_iter().collect();
    match format {
        ListFormat::Json => {
            let mut s = serde_json::to_string(&items).expect("monomials serialize");
            s.push('\n');
            s
        }
        ListFormat::Text => items.iter().map(|u| format!("{u}\n")).collect(),
        ListFormat::M2 => {
            let parts: Vec<String> = items.iter().map(|u| u.to_m2()).collect();
            format!("{}\n", parts.join(", "))
        }
    }
}

fn emit(out: &mut impl Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    match cli.command {
        Command::Enumerate { amb, d, k, l, format } => {
            let amb = ambient(&amb)?;
            let list: Vec<TMonomial> = match (d, k, l) {
                (Some(d), _, _) => {
                    check_cells("enumerate", degree_cells(&amb, d))?;
                    enumerate_m(amb.n(), d, amb.t()).collect()
                }
                (None, Some(k), Some(l)) => {
                    amb.check_corner(k, l)?;
                    check_cells("enumerate", card_a(k, l)?.checked_mul(l as u128))?;
                    enumerate_a(k, l, &amb)?.collect()
                }
                _ => bail!("give --d, or both --k and --l"),
            };
            emit(out, &render_list(&list, format))?;
        }
        Command::Rank { amb, corner, monomial, terms } => {
            let amb = ambient(&amb)?;
            let u = parse_monomial(&monomial, &amb)?;
            let r = rank_in_a(&u, corner.k, corner.l, &amb)?;
            emit(out, &format!("{r}\n"))?;
            if terms {
                let parts: Vec<String> = rank_terms(&u, corner.k, corner.l, &amb)?
                    .iter()
                    .map(|b| format!("C({},{})", b.top, b.bottom))
                    .collect();
                emit(out, &format!("{}\n", parts.join(" + ")))?;
            }
        }
        Command::Successor { amb, corner, monomial, format } => {
            let amb = ambient(&amb)?;
            let u = parse_monomial(&monomial, &amb)?;
            match successor_in_a(&u, corner.k, corner.l, &amb)? {
                Some(v) => emit(out, &render_list([&v], format))?,
                None => {
                    eprintln!("[{u}] is the slex-smallest element of A^{}({},{})", amb.t(), corner.k, corner.l);
                    emit(out, &render_list([], format))?;
                }
            }
        }
        Command::Closure { amb, gens, minimal, format } => {
            let amb = ambient(&amb)?;
            let set = read_gens(&gens, &amb)?;
            check_cells("closure", degree_cells(&amb, set.degree()))?;
            let closed = borel_closure_degree(&set);
            if minimal {
                let ideal = TIdeal::from_generators(amb, closed.to_vec())?;
                emit(out, &render_list(ideal.all_generators(), format))?;
            } else {
                emit(out, &render_list(&closed, format))?;
            }
        }
        Command::Shadow { amb, gens, s, format } => {
            let amb = ambient(&amb)?;
            let set = read_gens(&gens, &amb)?;
            for d in set.degree()..=set.degree() + s {
                check_cells("shadow", degree_cells(&amb, d))?;
            }
            emit(out, &render_list(&shadow_power(&set, s), format))?;
        }
        Command::Bshad { amb, gens, k2, l2, format } => {
            let amb = ambient(&amb)?;
            let set = read_gens(&gens, &amb)?;
            for d in set.degree()..=l2 {
                check_cells("bshad", degree_cells(&amb, d))?;
            }
            emit(out, &render_list(&bshad(&set, k2, l2)?, format))?;
        }
        Command::MinBshad { amb, monomial, gens, k2, l2, format } => {
            let amb = ambient(&amb)?;
            let v = match (monomial, gens) {
                (Some(m), _) => min_bshad_single(&parse_monomial(&m, &amb)?, k2, l2, &amb)?,
                (None, Some(g)) => min_bshad_set(&read_gens(&g, &amb)?, k2, l2)?,
                (None, None) => bail!("give --monomial or --gens"),
            };
            emit(out, &render_list([&v], format))?;
        }
        Command::Betti { ideal, format } => {
            let doc: IdealJson = read_json(&ideal)?;
            let ideal = doc.to_ideal()?;
            let table = betti_table(&ideal)?;
            let text = match format {
                BettiFormat::Table => table.to_string(),
                BettiFormat::Json => format!("{}\n", serde_json::to_string_pretty(&table.to_json())?),
                BettiFormat::M2 => ideal_to_m2(&ideal),
            };
            emit(out, &text)?;
        }
        Command::Corners { ideal } => {
            let doc: IdealJson = read_json(&ideal)?;
            let data = corner_sequence(&doc.to_ideal()?);
            emit(out, &format!("{}\n", serde_json::to_string(&data)?))?;
        }
        Command::Solve { spec, report, emit_ideal } => {
            let spec: CornerSpec = read_json(&spec)?;
            let amb = spec.ambient()?;
            let mut predicted: Option<u128> = Some(0);
            for c in &spec.corners {
                predicted = predicted
                    .zip(degree_cells(&amb, c.l))
                    .and_then(|(p, q)| p.checked_add(q))
                    .zip(card_a(c.k, c.l).ok())
                    .and_then(|(p, q)| p.checked_add(q));
            }
            check_cells("solve", predicted)?;
            let result = solve(&spec)?;
            let json = ReportJson::new(&result);
            match &report {
                Some(path) => write_json(path, &json)?,
                None => emit(out, &format!("{}\n", serde_json::to_string_pretty(&json)?))?,
            }
            if let (Some(path), Some(ideal)) = (&emit_ideal, &result.ideal) {
                write_json(path, &IdealJson::from_ideal(ideal))?;
            }
            match result.verdict {
                Verdict::Feasible => eprintln!("feasible"),
                Verdict::Infeasible => {
                    let f = result.failure.as_ref().expect("infeasible reports name a corner");
                    eprintln!(
                        "infeasible: corner {} ({}, {}) asks for {} but at most {} is possible",
                        f.corner, f.k, f.l, f.a, f.bound
                    );
                    return Ok(ExitCode::from(2));
                }
                Verdict::Invalid => {
                    for v in &result.violations {
                        eprintln!("invalid spec: {v}");
                    }
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Verify { suite } => {
            let outcome = run_suite(suite.into());
            emit(out, &outcome.to_string())?;
            if !outcome.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::MaxCorners { amb, l1 } => {
            emit(out, &format!("{}\n", max_corners(amb.n, amb.t, l1)?))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
