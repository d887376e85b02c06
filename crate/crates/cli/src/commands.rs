use anyhow::{bail, Result};
use betti_core::chordal::{cone_bound_holds, hvt_betti, realize_chordal};
use betti_core::cyclic::{cyclic_betti, gale_boundary_complex, realize_cyclic};
use betti_core::fvector::{colex_complex, kalai_decompose, kk_valid, realize_acyclic};
use betti_core::gorenstein::{admissible, betti_symmetric, construct_gorenstein, gorenstein_shape, is_gorenstein_complex};
use betti_core::homology::{alternating_sum_check, betti, hochster_betti, is_acyclic, taylor_bound_holds};
use betti_core::ideal::{complex_of_ideal, stanley_reisner_ideal};
use betti_core::io::{parse_complex, parse_graph, parse_ideal};
use betti_core::special::{
    betti_to_c, ek_betti, is_stable, nearly_scarf_acyclic_realization, nearly_scarf_expected, nearly_scarf_ideal,
    realize_componentwise_linear, StableStats,
};
use betti_core::suites::{
    chordal_suite, cyclic_suite, fvector_suite, gorenstein_suite, nearly_scarf_suite, property_suite, six_cycle_suite,
    stable_suite, worked_example_suite, ChordalConfig, PropertyConfig, StableConfig, SuiteOutcome,
};
use betti_core::{BettiSequence, Error, FVector, FieldSelector, SimplicialComplex};
use serde_json::{json, Value};

use crate::report::{facets_json, read_input, write_out, Report};
use crate::{
    BettiCommand, Cli, Command, CyclicCommand, FvectorCommand, GorensteinCommand, Method, RealizeCommand,
    StableCommand, Suite,
};

pub fn run(cli: &Cli) -> Result<Report> {
    let field = cli.field;
    match &cli.command {
        Command::Betti(BettiCommand::Graph { file, method }) => {
            let input = read_input(file)?;
            let g = parse_graph(&input.text)?;
            let inputs = json!({
                "file": input.digest,
                "vertices": g.vertex_count(),
                "edges": g.num_edges(),
                "method": format!("{method:?}").to_lowercase(),
                "field": field,
            });
            let hvt = matches!(method, Method::Hvt | Method::Both).then(|| hvt_betti(&g)).transpose()?;
            let oracle = matches!(method, Method::Hochster | Method::Both)
                .then(|| hochster_betti(&g.edge_ideal(), field))
                .transpose()?;
            let beta = hvt.clone().or_else(|| oracle.clone()).expect("one method ran");
            let mut report = Report::new("betti graph", inputs, json!({ "betti": beta }));
            if let (Some(h), Some(o)) = (&hvt, &oracle) {
                report = report.check("hvt_equals_oracle", h == o);
            }
            Ok(report)
        }
        Command::Betti(BettiCommand::Ideal { file }) => {
            let input = read_input(file)?;
            let ideal = parse_ideal(&input.text, 0)?;
            let beta = betti(&ideal, field)?;
            let inputs = json!({ "file": input.digest, "ideal": ideal.to_string(), "field": field });
            let results = json!({
                "betti": beta,
                "projective_dimension": beta.projective_dimension(),
                "squarefree": ideal.is_squarefree(),
            });
            Ok(Report::new("betti ideal", inputs, results)
                .check("alternating_sum", alternating_sum_check(&beta))
                .check("taylor_bound", taylor_bound_holds(&beta, ideal.generators().len())))
        }
        Command::Realize(RealizeCommand::Graph { file, out }) => {
            let input = read_input(file)?;
            let g = parse_graph(&input.text)?;
            let beta = hvt_betti(&g)?;
            let complex = realize_chordal(&g)?;
            write_out(out.as_deref(), &complex, None)?;
            let f = complex.f_vector()?;
            let inputs = json!({ "file": input.digest, "out": out.as_ref().map(|p| p.display().to_string()) });
            let results = json!({
                "betti": beta,
                "f_vector": f,
                "vertex_count": complex.vertex_count(),
                "facets": facets_json(&complex),
            });
            Ok(Report::new("realize graph", inputs, results)
                .check("f_vector_equals_betti", f.entries() == beta.entries())
                .check("downward_closed", complex.is_downward_closed())
                .check("cone_bound", cone_bound_holds(&g)?))
        }
        Command::Realize(RealizeCommand::BettiCwl { betti: seq, out }) => {
            let beta = BettiSequence::new(seq.0.clone())?;
            let Some(c) = betti_to_c(&beta) else {
                bail!(Error::InvalidParameters(format!(
                    "{beta} is not the Betti sequence of a componentwise linear ideal"
                )));
            };
            let complex = realize_componentwise_linear(&beta)?;
            write_out(out.as_deref(), &complex, None)?;
            let f = complex.f_vector()?;
            let inputs = json!({ "betti": beta, "out": out.as_ref().map(|p| p.display().to_string()), "field": field });
            let results = json!({ "c": c.values(), "f_vector": f, "facets": facets_json(&complex) });
            Ok(Report::new("realize betti-cwl", inputs, results)
                .check("f_vector_equals_betti", f.entries() == beta.entries())
                .check("acyclic", is_acyclic(&complex, field)?))
        }
        Command::Fvector(FvectorCommand::Check { f }) => {
            let f = FVector::new(f.0.clone())?;
            let results = json!({ "kk_valid": kk_valid(&f), "kalai": kalai_decompose(&f) });
            Ok(Report::new("fvector check", json!({ "f": f }), results))
        }
        Command::Fvector(FvectorCommand::Realize { f, acyclic, out }) => {
            let f = FVector::new(f.0.clone())?;
            let complex = if *acyclic { realize_acyclic(&f)? } else { colex_complex(&f)? };
            write_out(out.as_deref(), &complex, None)?;
            let got = complex.f_vector()?;
            let inputs = json!({ "f": f, "acyclic": acyclic, "out": out.as_ref().map(|p| p.display().to_string()) });
            let mut report = Report::new("fvector realize", inputs, json!({ "facets": facets_json(&complex) }))
                .check("f_vector_matches", got == f);
            if *acyclic {
                report = report.check("acyclic", is_acyclic(&complex, field)?);
            }
            Ok(report)
        }
        Command::Stable(StableCommand::Betti { file }) => {
            let input = read_input(file)?;
            let ideal = parse_ideal(&input.text, 0)?;
            if !is_stable(&ideal) {
                bail!(Error::NotStable);
            }
            let ek = ek_betti(&ideal)?;
            let stats = StableStats::of(&ideal)?;
            let oracle = optional(betti(&ideal, field))?;
            let inputs = json!({ "file": input.digest, "ideal": ideal.to_string(), "field": field });
            let results = json!({ "betti": ek, "m": stats.m, "oracle": oracle });
            let mut report = Report::new("stable betti", inputs, results);
            if let Some(o) = &oracle {
                report = report.check("eliahou_kervaire_equals_oracle", *o == ek);
            }
            Ok(report)
        }
        Command::Cyclic(CyclicCommand::Betti { v, d }) => {
            let beta = cyclic_betti(*v, *d)?;
            Ok(Report::new("cyclic betti", json!({ "v": v, "d": d }), json!({ "betti": beta })))
        }
        Command::Cyclic(CyclicCommand::Realize { v, d, out }) => {
            let beta = cyclic_betti(*v, *d)?;
            let complex = realize_cyclic(*v, *d)?;
            write_out(out.as_deref(), &complex, None)?;
            let f = complex.f_vector()?;
            let inputs = json!({ "v": v, "d": d, "out": out.as_ref().map(|p| p.display().to_string()) });
            let results = json!({ "betti": beta, "f_vector": f, "facets": facets_json(&complex) });
            Ok(Report::new("cyclic realize", inputs, results)
                .check("f_vector_equals_betti", f.entries() == beta.entries())
                .check("downward_closed", complex.is_downward_closed()))
        }
        Command::Cyclic(CyclicCommand::Verify { v, d }) => {
            let formula = cyclic_betti(*v, *d)?;
            let boundary = gale_boundary_complex(*v, *d)?;
            let oracle = hochster_betti(&stanley_reisner_ideal(&boundary), field)?;
            let results = json!({ "formula": formula, "oracle": oracle, "facets": boundary.facets().len() });
            Ok(Report::new("cyclic verify", json!({ "v": v, "d": d, "field": field }), results)
                .check("formula_equals_oracle", formula == oracle))
        }
        Command::Gorenstein(GorensteinCommand::Shape { p, m }) => {
            let shape = gorenstein_shape(*p, *m)?;
            Ok(Report::new("gorenstein shape", json!({ "p": p, "m": m }), json!(shape)))
        }
        Command::Gorenstein(GorensteinCommand::Witness { m, p }) => {
            let inputs = json!({ "m": m, "p": p, "field": field });
            let Some(ideal) = construct_gorenstein(*m, *p)? else {
                let results = json!({ "ideal": null, "reason": "no construction for an even base with m >= 8" });
                return Ok(Report::new("gorenstein witness", inputs, results));
            };
            let beta = betti(&ideal, field)?;
            let complex = complex_of_ideal(&ideal)?;
            let results = json!({ "ideal": ideal.to_string(), "betti": beta });
            Ok(Report::new("gorenstein witness", inputs, results)
                .check("first_betti_is_m_plus_1", beta.at(0) == m + 1)
                .check("projective_dimension_is_p", beta.len() as u64 == p + 1)
                .check("symmetric", betti_symmetric(&beta))
                .check("gorenstein_complex", is_gorenstein_complex(&complex, field)?))
        }
        Command::Gorenstein(GorensteinCommand::Admissible { m, p }) => {
            let ok = admissible(*m, *p)?;
            Ok(Report::new("gorenstein admissible", json!({ "m": m, "p": p }), json!({ "admissible": ok })))
        }
        Command::NearlyScarf { file, out } => {
            let input = read_input(file)?;
            let omega = parse_complex(&input.text)?;
            nearly_scarf(&omega.complex, field, input.digest, out.as_deref())
        }
        Command::Verify { suite, max_vertices, seed } => {
            let outcomes = verify(*suite, *max_vertices, *seed);
            let mut report = Report::new(
                "verify",
                json!({ "suite": format!("{suite:?}"), "max_vertices": max_vertices, "seed": seed }),
                json!(outcomes),
            );
            for o in &outcomes {
                report = report.check(&o.name, o.passed());
            }
            Ok(report)
        }
    }
}

/// Oracle results that only fail because the ideal is too large become
/// `None`.
fn optional(r: betti_core::Result<BettiSequence>) -> Result<Option<BettiSequence>> {
    match r {
        Ok(b) => Ok(Some(b)),
        Err(Error::VariableCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn nearly_scarf(
    omega: &SimplicialComplex,
    field: FieldSelector,
    digest: Value,
    out: Option<&std::path::Path>,
) -> Result<Report> {
    let ideal = nearly_scarf_ideal(omega)?;
    let expected = nearly_scarf_expected(omega, field)?;
    let oracle = optional(hochster_betti(&ideal, field))?;
    let realization = nearly_scarf_acyclic_realization(omega, field)?;
    write_out(out, &realization, None)?;
    let inputs = json!({ "file": digest, "field": field, "out": out.map(|p| p.display().to_string()) });
    let results = json!({
        "ideal": ideal.to_string(),
        "betti": expected,
        "oracle": oracle,
        "realization": facets_json(&realization),
    });
    let mut report = Report::new("nearly-scarf", inputs, results)
        .check("realization_f_vector", realization.f_vector()?.entries() == expected.entries())
        .check("realization_acyclic", is_acyclic(&realization, field)?);
    if let Some(o) = &oracle {
        report = report.check("formula_equals_oracle", *o == expected);
    }
    Ok(report)
}

fn verify(suite: Suite, max_vertices: Option<usize>, seed: u64) -> Vec<SuiteOutcome> {
    let chordal = || {
        chordal_suite(&ChordalConfig {
            max_vertices: max_vertices.unwrap_or(6),
            seed,
            ..Default::default()
        })
    };
    let cyclic = || {
        let v = max_vertices.unwrap_or(10);
        cyclic_suite(v.min(9), v)
    };
    let nearly = || nearly_scarf_suite(max_vertices.unwrap_or(4).min(4));
    let stable = || stable_suite(&StableConfig { seed, ..Default::default() });
    let properties = || property_suite(&PropertyConfig { seed, ..Default::default() });
    match suite {
        Suite::SixCycle => vec![six_cycle_suite()],
        Suite::WorkedExample => vec![worked_example_suite()],
        Suite::Chordal => vec![chordal()],
        Suite::Cyclic => vec![cyclic()],
        Suite::Fvector => vec![fvector_suite(200, seed)],
        Suite::Stable => vec![stable()],
        Suite::NearlyScarf => vec![nearly()],
        Suite::Gorenstein => vec![gorenstein_suite()],
        Suite::Properties => vec![properties()],
        Suite::All => vec![
            six_cycle_suite(),
            worked_example_suite(),
            chordal(),
            cyclic(),
            fvector_suite(200, seed),
            stable(),
            nearly(),
            gorenstein_suite(),
            properties(),
        ],
    }
}
