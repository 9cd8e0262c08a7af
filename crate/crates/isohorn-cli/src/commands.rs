use std::collections::BTreeMap;
use std::fmt::Display;

use isohorn::coinvariant::{
    deformed_nonvanishing, grain_check, horn_b_check, horn_c_check, ig_point_coefficient, ig_product, og_product,
    HornRecord,
};
use isohorn::eigencone::{compare_cones, generate_system, membership, Generation, EigenSystem};
use isohorn::field::PrimeField;
use isohorn::flag::{mc_properness, properness_scan, theorem_key_check};
use isohorn::index::{AIndex, BIndex, CIndex};
use isohorn::parse::{
    parse_group, parse_index_list, parse_partition, parse_partition_list, parse_rational_list, parse_weight_list,
};
use isohorn::partition::Partition;
use isohorn::rep::{clef_transfer_check, invariant_dim, saturation_scan, walk_check, SaturationCase};
use isohorn::schubert_a::{gr_product, lr_coefficient};
use isohorn::verify::{self, Settings};
use isohorn::weyl::BcType;
use isohorn::{Error, Result};
use serde_json::{json, Value};

use crate::output::Doc;
use crate::{Cli, Command, ModeArg, TypeArg};

fn text<T: Display>(x: &T) -> Value {
    Value::String(x.to_string())
}

fn list<T: Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(text).collect())
}

fn class_map<K: Display, V: Display>(m: &BTreeMap<K, V>) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.to_string(), text(v))).collect())
}

fn a_indices(s: &str, m: usize, ambient: usize) -> Result<Vec<AIndex>> {
    let out: Vec<AIndex> = parse_index_list(s)?.into_iter().map(|v| AIndex::new(v, ambient)).collect::<Result<_>>()?;
    if let Some(a) = out.iter().find(|a| a.len() != m) {
        return Err(Error::Mismatch(format!("{a} is not a cell of {m}-planes")));
    }
    Ok(out)
}

fn c_indices(s: &str, r: usize, n: usize) -> Result<Vec<CIndex>> {
    let out: Vec<CIndex> = parse_index_list(s)?.into_iter().map(|v| CIndex::new(v, n)).collect::<Result<_>>()?;
    if let Some(i) = out.iter().find(|i| i.r() != r) {
        return Err(Error::Mismatch(format!("{i} does not have {r} elements")));
    }
    Ok(out)
}

fn b_indices(s: &str, r: usize, n: usize) -> Result<Vec<BIndex>> {
    let out: Vec<BIndex> = parse_index_list(s)?.into_iter().map(|v| BIndex::new(v, n)).collect::<Result<_>>()?;
    if let Some(j) = out.iter().find(|j| j.r() != r) {
        return Err(Error::Mismatch(format!("{j} does not have {r} elements")));
    }
    Ok(out)
}

fn horn_fields(doc: &mut Doc, rec: &HornRecord) {
    doc.field("alpha", rec.alpha)
        .field("beta1", rec.beta1)
        .field("beta2", rec.beta2)
        .field("beta3", rec.beta3)
        .field("beta2_inequalities", rec.beta2_inequalities.map_or(Value::Null, Value::Bool))
        .field("mu", list(&rec.mu))
        .field("consistent", rec.consistent())
        .verdict(rec.consistent());
}

fn case_value(c: &SaturationCase) -> Value {
    json!({ "weights": list(&c.weights), "invariants": list(&c.invariants) })
}

fn system_value(sys: &EigenSystem) -> Value {
    Value::Array(
        sys.inequalities
            .iter()
            .map(|q| {
                json!({
                    "node": q.node,
                    "cells": list(&q.cells),
                    "coeffs": q.coeffs,
                    "scale": q.scale.to_string(),
                    "degree": q.degree.to_string(),
                })
            })
            .collect(),
    )
}

fn check_rank(r: usize, n: usize) -> Result<()> {
    if r == 0 || r > n {
        return Err(Error::Precondition(format!("need 1 <= r <= n, got r={r}, n={n}")));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Doc> {
    let common = &cli.common;
    let field = PrimeField::new(common.prime)?;
    let mut doc = Doc::new(cli.command.name());
    match &cli.command {
        Command::Lrcoef { lambda, mu, nu } => {
            let (l, m, v) = (parse_partition(lambda)?, parse_partition(mu)?, parse_partition(nu)?);
            doc.param("lambda", text(&l)).param("mu", text(&m)).param("nu", text(&v));
            doc.field("coefficient", lr_coefficient(&l, &m, &v).to_string());
        }
        Command::GrProduct { m, ambient, indices } => {
            if *m == 0 || m > ambient {
                return Err(Error::Precondition(format!("no Grassmannian of {m}-planes in dimension {ambient}")));
            }
            let a = a_indices(indices, *m, *ambient)?;
            doc.param("m", *m).param("ambient", *ambient).param("indices", list(&a));
            doc.field("product", class_map(&gr_product(&a, *m, *ambient)?));
        }
        Command::IgProduct { n, r, indices } => {
            check_rank(*r, *n)?;
            let c = c_indices(indices, *r, *n)?;
            doc.param("n", *n).param("r", *r).param("indices", list(&c));
            doc.field("product", class_map(&ig_product(&c)?));
        }
        Command::OgProduct { n, r, indices } => {
            check_rank(*r, *n)?;
            let b = b_indices(indices, *r, *n)?;
            doc.param("n", *n).param("r", *r).param("indices", list(&b));
            doc.field("product", class_map(&og_product(&b)?));
        }
        Command::Deformed { n, r, indices } => {
            check_rank(*r, *n)?;
            let c = c_indices(indices, *r, *n)?;
            doc.param("n", *n).param("r", *r).param("indices", list(&c));
            let ordinary = ig_point_coefficient(&c)?;
            let deformed = deformed_nonvanishing(&c, *r, *n)?;
            doc.field("ordinary_point_coefficient", ordinary.to_string()).field("deformed_nonvanishing", deformed);
            doc.verdict(deformed);
        }
        Command::HornC { n, r, indices } => {
            check_rank(*r, *n)?;
            let c = c_indices(indices, *r, *n)?;
            doc.param("n", *n).param("r", *r).param("indices", list(&c));
            horn_fields(&mut doc, &horn_c_check(&c, *r, *n)?);
        }
        Command::HornB { n, r, indices } => {
            check_rank(*r, *n)?;
            let b = b_indices(indices, *r, *n)?;
            doc.param("n", *n).param("r", *r).param("indices", list(&b));
            horn_fields(&mut doc, &horn_b_check(&b, *r, *n)?);
        }
        Command::Grain { n } => {
            doc.param("n", *n);
            let ok = grain_check(*n)?;
            doc.field("identity_holds", ok).verdict(ok);
        }
        Command::HomDim { n, mu, trials } | Command::KeyCheck { n, mu, trials } => {
            let mu: Vec<Partition> = parse_partition_list(mu)?;
            doc.param("n", *n).param("mu", list(&mu));
            let rec = theorem_key_check(&mu, *n, *trials, common.seed, &field)?;
            doc.field("hom_dim", rec.hom_dim).field("expected", rec.expected);
            if matches!(cli.command, Command::KeyCheck { .. }) {
                doc.field("expected_dimension_attained", rec.a_holds)
                    .field("horn_inequalities_hold", rec.b_holds)
                    .verdict(rec.agrees());
            }
            doc.provenance("seed", rec.seed).provenance("prime", rec.prime).provenance("trials", rec.trials);
        }
        Command::Properness { form, ambient, indices, m, s, trials } => {
            doc.param("form", text(form)).param("ambient", *ambient);
            match indices {
                Some(ix) => {
                    let raw = parse_index_list(ix)?;
                    let m = m.unwrap_or_else(|| raw[0].len());
                    let a: Vec<AIndex> = raw.into_iter().map(|v| AIndex::new(v, *ambient)).collect::<Result<_>>()?;
                    if a.iter().any(|x| x.len() != m) {
                        return Err(Error::Mismatch("cells of different sizes".into()));
                    }
                    doc.param("indices", list(&a));
                    let rep = mc_properness(&a, *form, *trials, common.seed, &field)?;
                    doc.field("expected", rep.expected)
                        .field("observed", rep.observed.clone())
                        .field("redraws", rep.redraws)
                        .verdict(rep.passed());
                    doc.provenance("seed", common.seed)
                        .provenance("trial_seeds", rep.seeds.clone())
                        .provenance("prime", rep.prime)
                        .provenance("trials", *trials);
                }
                None => {
                    let m = m.ok_or_else(|| Error::Precondition("give --indices or --m".into()))?;
                    doc.param("m", m).param("s", *s);
                    let rep = properness_scan(*form, *ambient, m, *s, *trials, common.seed, &field)?;
                    let failures: Vec<Value> = rep
                        .failures
                        .iter()
                        .map(|x| {
                            json!({
                                "indices": list(&x.indices),
                                "trial_seed": x.trial_seed,
                                "expected": x.expected,
                                "observed": x.observed,
                            })
                        })
                        .collect();
                    doc.field("tuples", rep.tuples).field("failures", failures).verdict(rep.passed());
                    doc.provenance("seed", rep.seed).provenance("prime", rep.prime).provenance("trials", rep.trials);
                }
            }
        }
        Command::InvariantDim { group, weights } => {
            let g = parse_group(group)?;
            let w = parse_weight_list(weights, g)?;
            doc.param("group", text(&g)).param("weights", list(&w));
            doc.field("dimension", invariant_dim(g, &w)?.to_string());
        }
        Command::ClefCheck { group, weights } => {
            let g = parse_group(group)?;
            let w = parse_weight_list(weights, g)?;
            doc.param("group", text(&g)).param("weights", list(&w));
            let rep = clef_transfer_check(&w)?;
            doc.field("source_invariant", rep.source.to_string())
                .field("target_invariant", rep.target.as_ref().map_or(Value::Null, text))
                .field("restricted", list(&rep.restricted))
                .field("applicable", rep.applicable())
                .verdict(true);
        }
        Command::WalkCheck { n, mu } => {
            let mu = parse_partition_list(mu)?;
            doc.param("n", *n).param("mu", list(&mu));
            let rep = walk_check(&mu, *n)?;
            doc.field("sl_invariant", rep.sl_invariant.to_string())
                .field("sp_invariant", rep.sp_invariant.as_ref().map_or(Value::Null, text))
                .field("flipped", list(&rep.flipped))
                .field("restricted", list(&rep.restricted))
                .field("applicable", rep.applicable())
                .verdict(true);
        }
        Command::SaturationScan { group, bound, n_max } => {
            let g = parse_group(group)?;
            doc.param("group", text(&g)).param("bound", *bound).param("n_max", *n_max);
            let rep = saturation_scan(g, *bound, *n_max)?;
            doc.field("factor", rep.factor)
                .field("triples", rep.triples)
                .field("violations", Value::Array(rep.violations.iter().map(case_value).collect()))
                .field("witnesses", Value::Array(rep.witnesses.iter().map(case_value).collect()))
                .verdict(rep.passed());
        }
        Command::EigenconeGen { group, s, mode } => {
            let g = parse_group(group)?;
            let (mode, label) = match mode {
                ModeArg::Point => (Generation::PointClass, "point"),
                ModeArg::Nonvanishing => (Generation::Nonvanishing, "nonvanishing"),
            };
            doc.param("group", text(&g)).param("s", *s).param("mode", label);
            if *s < 2 {
                return Err(Error::Precondition("need at least two factors".into()));
            }
            let sys = generate_system(g, *s, mode)?;
            doc.field("count", sys.inequalities.len()).field("inequalities", system_value(&sys));
        }
        Command::EigenconeMember { group, h } => {
            let g = parse_group(group)?;
            let h = parse_rational_list(h)?;
            let shown: Vec<Value> = h.iter().map(|x| list(x)).collect();
            doc.param("group", text(&g)).param("h", shown);
            let sys = generate_system(g, h.len(), Generation::PointClass)?;
            let violated = sys.first_violation(&h)?;
            debug_assert_eq!(violated.is_none(), membership(g, &h)?);
            doc.field("member", violated.is_none()).field("inequalities", sys.inequalities.len());
            if let Some(k) = violated {
                let q = &sys.inequalities[k];
                doc.field(
                    "violated",
                    json!({ "node": q.node, "cells": list(&q.cells), "value": q.value(&h).to_string() }),
                );
            }
            doc.verdict(violated.is_none());
        }
        Command::CompareCones { ty, n, s, samples } => {
            let bc = match ty {
                TypeArg::B => BcType::B,
                TypeArg::C => BcType::C,
            };
            doc.param("type", text(&bc)).param("n", *n).param("s", *s).param("samples", *samples);
            let rep = compare_cones(bc, *n, *s, *samples, common.seed)?;
            let dis: Vec<Value> = rep
                .disagreements
                .iter()
                .map(|d| {
                    let point: Vec<Value> = d.point.iter().map(|x| list(x)).collect();
                    json!({ "point": point, "isotropic": d.isotropic, "ambient": d.ambient })
                })
                .collect();
            doc.field("members", rep.members)
                .field("boundary", rep.boundary)
                .field("degenerate", rep.degenerate)
                .field("isotropic_inequalities", rep.isotropic_inequalities)
                .field("ambient_inequalities", rep.ambient_inequalities)
                .field("identity_checks", rep.identity_checks)
                .field("disagreements", dis)
                .verdict(rep.passed());
            doc.provenance("seed", rep.seed);
        }
        Command::VerifyAll { only, properness_trials, key_samples, cone_samples } => {
            let settings = Settings {
                seed: common.seed,
                prime: field,
                properness_trials: *properness_trials,
                key_samples: *key_samples,
                cone_samples: *cone_samples,
            };
            let ids: Vec<usize> = match only {
                Some(id) if (1..=verify::TITLES.len()).contains(id) => vec![*id],
                Some(id) => return Err(Error::Precondition(format!("no criterion {id}"))),
                None => (1..=verify::TITLES.len()).collect(),
            };
            let outcomes: Vec<_> = ids.iter().map(|&id| verify::run(id, &settings)).collect();
            let all = outcomes.iter().all(|o| o.passed);
            let rows: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "id": o.id,
                        "title": o.title,
                        "verdict": if o.passed { "PASS" } else { "FAIL" },
                        "details": o.details,
                    })
                })
                .collect();
            for o in &outcomes {
                doc.field(&format!("criterion.{}", o.id), format!("{} {}", if o.passed { "PASS" } else { "FAIL" }, o.title));
            }
            doc.field("criteria", rows).verdict(all);
            doc.provenance("seed", settings.seed)
                .provenance("prime", settings.prime.modulus())
                .provenance("properness_trials", settings.properness_trials)
                .provenance("key_samples", settings.key_samples)
                .provenance("cone_samples", settings.cone_samples);
        }
    }
    Ok(doc)
}
