mod args;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use monideal::decomposition::{associated_primes, irreducible_decomposition};
use monideal::io::{infer_ring, IdealList};
use monideal::{
    check_containment, family_f, iterated_sum, maximal_associated_primes, parse_ideal,
    parse_monomial, parse_rational, parse_session, pm_ideal, primary_decomposition, product_witness,
    scan, sharp_sum_bound, star_ideal, verify_paper, Emit, Error, MonomialIdeal, RingContext,
    ScanOptions, SymbolicCache, VerifyOptions, WitnessPart,
};
use serde_json::{json, Value};

use args::{Cli, Command, Family, Global, IdealArg};

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::LocalWitness { .. }
            | Error::CertificateRejected(_)
            | Error::BoundViolation(_)
            | Error::SaturationDiverged(_) => Failure::Verification(err.to_string()),
            _ => Failure::Usage(err.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.threads > 1 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.global.threads as usize)
            .build_global();
    }
    match run(&cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if !out.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn render(global: &Global, value: &impl Emit) -> String {
    if global.json {
        value.emit_json()
    } else {
        value.emit_text()
    }
}

fn ring_from_flag(flag: &str) -> Result<RingContext, Error> {
    let names = flag.trim().strip_prefix("ring ").unwrap_or(flag);
    RingContext::new(names.split([',', ' ']).map(str::trim).filter(|s| !s.is_empty()))
}

/// The ring from --ring, or inferred from every text that mentions variables.
fn resolve_ring(global: &Global, texts: &[&str]) -> Result<RingContext, Error> {
    match &global.ring {
        Some(flag) => ring_from_flag(flag),
        None => infer_ring(texts.iter().copied()),
    }
}

fn ideal_text<'a>(global: &'a Global, input: &'a IdealArg) -> Result<&'a str, Failure> {
    input
        .ideal
        .as_deref()
        .or(global.ideal.as_deref())
        .ok_or_else(|| Failure::Usage("no ideal given; pass it as an argument or with --ideal".into()))
}

fn load_ideal(global: &Global, input: &IdealArg) -> Result<MonomialIdeal, Failure> {
    let text = ideal_text(global, input)?;
    let ring = resolve_ring(global, &[text])?;
    Ok(parse_ideal(&ring, text)?)
}

struct SessionView(monideal::Session);

impl Emit for SessionView {
    fn emit_text(&self) -> String {
        let mut out = String::new();
        for (name, value) in self.0.bindings() {
            out.push_str(&format!("{name} = {value}\n"));
        }
        for value in self.0.outputs() {
            out.push_str(&format!("{value}\n"));
        }
        out
    }

    fn json_body(&self) -> Value {
        let ideal = |i: &MonomialIdeal| -> Value {
            serde_json::from_str::<Value>(&i.emit_json()).expect("emitted JSON parses")
        };
        json!({
            "kind": "session",
            "ring": self.0.context().map(|r| r.names().to_vec()),
            "bindings": self.0.bindings().iter().map(|(k, v)| (k.clone(), ideal(v))).collect::<serde_json::Map<_, _>>(),
            "outputs": self.0.outputs().map(ideal).collect::<Vec<_>>(),
        })
    }
}

struct Membership {
    answer: bool,
}

impl Emit for Membership {
    fn emit_text(&self) -> String {
        format!("{}\n", if self.answer { "yes" } else { "no" })
    }

    fn json_body(&self) -> Value {
        json!({ "kind": "membership", "member": self.answer })
    }
}

fn parse_part(ring: &RingContext, spec: &str) -> Result<WitnessPart, Failure> {
    let bad = || Failure::Usage(format!("part `{spec}` is not of the form IDEAL:m:r:WITNESS"));
    let mut fields = spec.rsplitn(4, ':');
    let witness = fields.next().ok_or_else(bad)?;
    let r = fields.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let m = fields.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let ideal = fields.next().ok_or_else(bad)?;
    Ok(WitnessPart {
        ideal: parse_ideal(ring, ideal)?,
        m,
        r,
        witness: parse_monomial(ring, witness)?,
    })
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let threads = g.threads as usize;
    let done = |s: String| Ok((s, true));
    match &cli.command {
        Command::Parse { text } => {
            let text = match &g.ring {
                Some(flag) => format!("ring {};\n{text}", ring_from_flag(flag)?.names().join(",")),
                None => text.clone(),
            };
            done(render(g, &SessionView(parse_session(&text)?)))
        }
        Command::Symbolic { input, n, blockwise } => {
            let ideal = load_ideal(g, input)?;
            let cache = SymbolicCache::new();
            let value = if *blockwise {
                cache.symbolic_power_blockwise(&monideal::detect_blocks(&ideal)?, *n)?
            } else {
                cache.symbolic_power(&ideal, *n)?
            };
            done(render(g, &value))
        }
        Command::Power { input, n } => done(render(g, &load_ideal(g, input)?.power(*n)?)),
        Command::Contains { input, monomial, power, symbolic } => {
            let text = ideal_text(g, input)?;
            let ring = resolve_ring(g, &[text, monomial])?;
            let ideal = parse_ideal(&ring, text)?;
            let mono = parse_monomial(&ring, monomial)?;
            let answer = match (power, symbolic) {
                (Some(n), _) => ideal.power_contains(&mono, *n)?,
                (None, Some(n)) => SymbolicCache::new().symbolic_contains(&ideal, *n, &mono)?,
                (None, None) => ideal.contains_monomial(&mono)?,
            };
            done(render(g, &Membership { answer }))
        }
        Command::Decompose { input, irreducible } => {
            let ideal = load_ideal(g, input)?;
            let (kind, ideals) = if *irreducible {
                let comps = irreducible_decomposition(&ideal)?
                    .iter()
                    .map(|c| c.to_ideal(ideal.ring()))
                    .collect::<Result<Vec<_>, _>>()?;
                ("irreducible-decomposition", comps)
            } else {
                ("primary-decomposition", primary_decomposition(&ideal)?)
            };
            done(render(g, &IdealList { kind: kind.into(), ideals }))
        }
        Command::Assprimes { input, maximal } => {
            let ideal = load_ideal(g, input)?;
            let primes = if *maximal {
                maximal_associated_primes(&ideal)?
            } else {
                associated_primes(&ideal)?
            };
            let ideals = primes
                .iter()
                .map(|p| p.to_ideal(ideal.ring()))
                .collect::<Result<Vec<_>, _>>()?;
            done(render(g, &IdealList { kind: "associated-primes".into(), ideals }))
        }
        Command::Check { input, m, r } => {
            done(render(g, &check_containment(&load_ideal(g, input)?, *m, *r)?))
        }
        Command::Scan { input, max_m, max_r, no_shortcuts } => {
            let ideal = load_ideal(g, input)?;
            let report = scan(
                &ideal,
                ScanOptions {
                    max_m: *max_m,
                    max_r: *max_r,
                    shortcuts: !no_shortcuts,
                    threads,
                },
            )?;
            done(render(g, &report))
        }
        Command::Bounds { a, b } => {
            done(render(g, &sharp_sum_bound(&parse_rational(a)?, &parse_rational(b)?)?))
        }
        Command::CertifyProduct { parts } => {
            let texts: Vec<&str> = parts
                .iter()
                .flat_map(|p| {
                    let mut f = p.rsplitn(4, ':');
                    let witness = f.next().unwrap_or("");
                    let ideal = f.nth(2).unwrap_or("");
                    [ideal, witness]
                })
                .collect();
            let ring = resolve_ring(g, &texts)?;
            let parts = parts
                .iter()
                .map(|p| parse_part(&ring, p))
                .collect::<Result<Vec<_>, _>>()?;
            done(render(g, &product_witness(&parts)?))
        }
        Command::Family { kind } => {
            let ideal = match kind {
                Family::F { d } => family_f(*d)?,
                Family::Star { m, d } => star_ideal(*m, *d)?,
                Family::Pm { m } => pm_ideal(*m)?,
                Family::Iterated { k } => {
                    iterated_sum(&load_ideal(g, &IdealArg { ideal: None })?, *k)?
                }
            };
            done(render(g, &ideal))
        }
        Command::VerifyPaper => {
            let report = verify_paper(&VerifyOptions {
                example_override: None,
                threads,
            })?;
            Ok((render(g, &report), report.all_passed()))
        }
    }
}
