use anyhow::{bail, Result};
use serde_json::{json, Value};

use hyparr_core::betti::PoincareReport;
use hyparr_core::circuit_rings::{self, buchberger, MonomialIdeal, MultiPoly, OrderKind, TermOrder};
use hyparr_core::ffield;
use hyparr_core::invariants::{self, characteristic_polynomial, num_regions};
use hyparr_core::verify::{self, Status};
use hyparr_core::{Arrangement, Error};

use crate::input::{self, InputError};
use crate::{Command, CountArgs, CountWhat, GroebnerArgs, LinearForms, OrderArg, VerifyArgs};

/// Runs one subcommand; the flag is false when a suite failed.
pub fn run(command: Command) -> Result<(Value, bool)> {
    let value = match command {
        Command::Info(f) => info(&input::load(&f.file)?),
        Command::Flats(f) => serde_json::to_value(input::load(&f.file)?.flats())?,
        Command::Circuits(f) => circuits(&input::load(&f.file)?),
        Command::Tutte { file, whitney } => {
            let a = input::load(&file.file)?;
            let t = if whitney { invariants::tutte_whitney(&a) } else { invariants::tutte(&a) };
            serde_json::to_value(t)?
        }
        Command::Charpoly(f) => {
            let a = input::load(&f.file)?;
            json!({ "chi": core(characteristic_polynomial(&a))?, "regions": core(num_regions(&a))? })
        }
        Command::Betti(f) => serde_json::to_value(core(PoincareReport::compute(&input::load(&f.file)?))?)?,
        Command::Count(args) => count(&args)?,
        Command::Groebner(args) => groebner(&args)?,
        Command::Verify(args) => return verify_suites(&args),
    };
    Ok((value, true))
}

/// Usage-level core errors become input errors.
fn core<T>(r: hyparr_core::Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(_) | Error::InvalidArrangement(_) | Error::NotPrime(_) => InputError(e.to_string()).into(),
        e => e.into(),
    })
}

fn info(a: &Arrangement) -> Value {
    let c = a.classify();
    json!({
        "d": a.dim(),
        "n": a.n(),
        "k": a.k(),
        "rank": a.rank(a.ground()),
        "classification": c,
        "kernel_basis": a.kernel_basis(),
        "flats": a.flats().len(),
        "circuits": a.circuits().len(),
    })
}

fn circuits(a: &Arrangement) -> Value {
    let list: Vec<Value> = a.circuits().iter().map(|c| json!({ "members": c.members, "signs": c.signs })).collect();
    json!({ "count": list.len(), "circuits": list })
}

fn count(args: &CountArgs) -> Result<Value> {
    let a = input::load(&args.file)?;
    let q = args.q;
    core(ffield::PrimeField::new(q))?;
    let lam = args.lam.as_deref();
    Ok(match args.what {
        CountWhat::Complement => {
            let count = core(ffield::count_complement(&a, q))?;
            let formula = core(characteristic_polynomial(&a))?.eval(q as i64);
            plain(q, count, formula)
        }
        CountWhat::LocallyFree => {
            let count = core(ffield::count_locally_free(&a, q))?;
            let formula: i64 = a
                .ground()
                .subsets()
                .filter(|&s| a.is_independent(s))
                .map(|s| (q as i64 - 1).pow((a.n() - s.len()) as u32))
                .sum();
            plain(q, count, formula)
        }
        CountWhat::Fiber => {
            let Some(lam) = lam else { bail!(InputError("--what fiber needs --lam".into())) };
            json!({ "q": q, "lam": lam, "count": core(ffield::count_moment_fiber(&a, lam, q))? })
        }
        CountWhat::Smooth => {
            let lam = match lam {
                Some(l) => l.to_vec(),
                None => match ffield::regular_value_mod_p(&a, q) {
                    Some(l) => l,
                    None => bail!("no regular value modulo {q}"),
                },
            };
            let mut v = serde_json::to_value(core(ffield::count_smooth_points(&a, &lam, q))?)?;
            v["lam"] = json!(lam);
            v
        }
        CountWhat::Stratum => serde_json::to_value(core(ffield::count_generic_stratum(&a, q))?)?,
        CountWhat::Hypertoric => serde_json::to_value(core(ffield::hypertoric_report(&a, q))?)?,
    })
}

fn plain(q: u64, count: i64, formula: i64) -> Value {
    json!({ "q": q, "count": count, "formula_value": formula, "match": count == formula })
}

fn groebner(args: &GroebnerArgs) -> Result<Value> {
    let a = input::load(&args.file)?;
    let n = a.n();
    let sigma: Vec<usize> = match &args.sigma {
        Some(s) => {
            let zero_based: Vec<usize> = s.iter().map(|&i| i.wrapping_sub(1)).collect();
            let mut sorted = zero_based.clone();
            sorted.sort_unstable();
            if sorted != (0..n).collect::<Vec<_>>() {
                bail!(InputError(format!("--sigma must be a permutation of 1..{n}")));
            }
            zero_based
        }
        None => (0..n).collect(),
    };
    let kind = match args.order {
        OrderArg::Lex => OrderKind::Lex,
        OrderArg::Grlex => OrderKind::Grlex,
        OrderArg::Grevlex => OrderKind::Grevlex,
    };
    let order = TermOrder::new(kind, sigma);

    let mut gens = circuit_rings::circuit_ideal(&a);
    if args.squares {
        gens.extend((0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = 2;
            MultiPoly::from_terms(n, [(e, 1)])
        }));
    }
    if matches!(args.linear_forms, LinearForms::Auto) {
        gens.extend(circuit_rings::linear_forms(&a));
    }
    let run = buchberger(&gens, &order);
    let initial =
        if run.basis.is_empty() { MonomialIdeal::new(n, []) } else { circuit_rings::initial_ideal(&run.basis, &order) };
    let hilbert = initial.hilbert_series();
    Ok(json!({
        "order": { "kind": order.kind, "sigma": order.sigma.iter().map(|i| i + 1).collect::<Vec<_>>() },
        "generators": gens.len(),
        "added": run.added,
        "basis": run.basis.iter().map(|g| g.display_with(&order)).collect::<Vec<_>>(),
        "initial_ideal": initial.generators(),
        "hilbert": hilbert,
        "krull_dimension": initial.krull_dimension(),
    }))
}

fn verify_suites(args: &VerifyArgs) -> Result<(Value, bool)> {
    let suites: Vec<&str> = if args.suite == "all" {
        verify::SUITES.to_vec()
    } else if verify::SUITES.contains(&args.suite.as_str()) {
        vec![args.suite.as_str()]
    } else {
        bail!(InputError(format!(
            "unknown suite {:?}; expected one of {} or all",
            args.suite,
            verify::SUITES.join(", ")
        )));
    };
    let mut instances = verify::catalog();
    instances.extend(input::load_instances(&args.paths)?);

    let mut reports = Vec::new();
    for suite in suites {
        let report = verify::run_suite(suite, &instances, !args.no_random).expect("suite names are checked above");
        reports.push(if args.timings { report } else { report.without_timings() });
    }
    let ok = reports.iter().all(|r| r.passed());
    let status = reports.iter().map(|r| r.status).max().unwrap_or(Status::Pass);
    let summary = json!({
        "pass": reports.iter().map(|r| r.count(Status::Pass)).sum::<usize>(),
        "warn": reports.iter().map(|r| r.count(Status::Warn)).sum::<usize>(),
        "fail": reports.iter().map(|r| r.count(Status::Fail)).sum::<usize>(),
    });
    Ok((json!({ "status": status, "summary": summary, "suites": reports }), ok))
}
