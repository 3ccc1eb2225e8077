//! Dispatch of a [`JobSpec`] to the core library.

use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Value};

use fsing_core::cohomology::{DegreeZeroAction, GradedHypersurface};
use fsing_core::field::{is_prime, FieldScalar, FiniteField};
use fsing_core::frobenius_ideals::{
    bracket_power, e_structure_module, fedder_is_fpure, fedder_is_fpure_principal, is_rf_submodule,
};
use fsing_core::groebner::{GroebnerBudget, Ideal};
use fsing_core::parse::{parse_field_matrix, parse_polynomial, parse_polynomial_list, parse_twisted_matrix};
use fsing_core::poly::{MonomialOrder, OrderKind, PolyRing, Polynomial, RingRef};
use fsing_core::semilinear::{
    counterexample_search, format_polynomial, is_irreducible, root_search, AlphaEquation, DegreeStatus, SemilinearMap,
};
use fsing_core::{Matrix, TwistedPoly};

use crate::job::{JobSpec, Report};

/// Structured results plus their plain-text rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub results: Value,
    pub text: String,
}

/// Run a job and time it.
pub fn run_report(job: &JobSpec) -> Result<(Report, String)> {
    let start = Instant::now();
    let outcome = run(job)?;
    let report = Report::new(job.clone(), outcome.results, start.elapsed().as_millis());
    Ok((report, outcome.text))
}

pub fn run(job: &JobSpec) -> Result<Outcome> {
    let command = job.command.trim();
    if let Some(inner) = command.strip_prefix("sweep ") {
        return sweep(job, inner.trim());
    }
    match command {
        "gb" => gb(job),
        "member" => member(job),
        "colon" => colon(job),
        "bracket-power" => bracket(job),
        "fedder" => fedder(job),
        "e-structures" => e_structures(job),
        "rf-submodule" => rf_submodule(job),
        "semilinear iterate" => semilinear_iterate(job),
        "semilinear base-change" => semilinear_base_change(job),
        "semilinear fixed" => semilinear_fixed(job),
        "semilinear fixed-basis" => semilinear_fixed_basis(job),
        "semilinear stable" => semilinear_stable(job),
        "semilinear counterexample" => semilinear_counterexample(job),
        "lc basis" => lc_basis(job),
        "lc frobenius" => lc_frobenius(job),
        "lc verdict" => lc_verdict(job),
        "lc socle" => lc_socle(job),
        "lc dual-check" => lc_dual_check(job),
        other => bail!("unknown command `{other}`"),
    }
}

/// Identifiers in the expressions, sorted, when `variables` is not given.
fn infer_variables(job: &JobSpec) -> Vec<String> {
    let mut sources: Vec<&str> = Vec::new();
    sources.extend(job.f.as_deref());
    for list in [&job.generators, &job.by, &job.tau].into_iter().flatten() {
        sources.extend(list.iter().map(String::as_str));
    }
    sources.extend(job.class.as_deref());
    let mut names: Vec<String> = Vec::new();
    for s in sources {
        let mut cur = String::new();
        for ch in s.chars().chain(std::iter::once(' ')) {
            if ch.is_alphabetic() || ch == '_' || (!cur.is_empty() && ch.is_alphanumeric()) {
                cur.push(ch);
            } else if !cur.is_empty() {
                names.push(std::mem::take(&mut cur));
            }
        }
    }
    names.sort();
    names.dedup();
    names
}

fn ring(job: &JobSpec) -> Result<RingRef> {
    let p = job.p.context("missing prime `p`")?;
    let vars = match &job.variables {
        Some(v) => v.clone(),
        None => infer_variables(job),
    };
    if vars.is_empty() {
        bail!("no variables given or found in the expressions");
    }
    let weights = job.weights.clone().unwrap_or_else(|| vec![1; vars.len()]);
    Ok(PolyRing::with_weights(p, &vars, weights)?)
}

fn budget(job: &JobSpec) -> GroebnerBudget {
    let d = GroebnerBudget::default();
    GroebnerBudget {
        max_basis_size: job.max_basis_size.unwrap_or(d.max_basis_size),
        max_reduction_steps: job.max_reduction_steps.unwrap_or(d.max_reduction_steps),
    }
}

fn polys(ring: &RingRef, srcs: &[String], what: &str) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for s in srcs {
        out.extend(parse_polynomial_list(s, ring).with_context(|| format!("in {what} `{s}`"))?);
    }
    Ok(out)
}

/// The ideal from `generators`, falling back to `f`.
fn ideal(job: &JobSpec, ring: &RingRef) -> Result<Ideal> {
    let gens = match (&job.generators, &job.f) {
        (Some(g), _) => polys(ring, g, "generators")?,
        (None, Some(f)) => polys(ring, std::slice::from_ref(f), "f")?,
        (None, None) => bail!("missing ideal generators"),
    };
    Ok(Ideal::new(ring, gens)?.with_budget(budget(job)))
}

fn single_f(job: &JobSpec, ring: &RingRef) -> Result<Polynomial> {
    let src = match (&job.f, &job.generators) {
        (Some(f), _) => f.clone(),
        (None, Some(g)) if g.len() == 1 => g[0].clone(),
        _ => bail!("missing polynomial `f`"),
    };
    parse_polynomial(&src, ring).with_context(|| format!("in f `{src}`"))
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn order(job: &JobSpec, n: usize) -> Result<MonomialOrder> {
    let kind = match job.order.as_deref().unwrap_or("grevlex") {
        "grevlex" => OrderKind::Grevlex,
        "lex" => OrderKind::Lex,
        "grlex" => OrderKind::Grlex,
        other => bail!("unknown monomial order `{other}` (use grevlex, lex or grlex)"),
    };
    Ok(MonomialOrder::new(kind, n))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn gb(job: &JobSpec) -> Result<Outcome> {
    let r = ring(job)?;
    let i = ideal(job, &r)?;
    let ord = order(job, r.nvars())?;
    let basis = i.groebner_basis_in(&ord)?;
    let elems = strings(&basis.elements());
    let criterion = basis.satisfies_buchberger_criterion();
    Ok(Outcome {
        text: elems.join("\n"),
        results: json!({ "basis": elems, "order": job.order.as_deref().unwrap_or("grevlex"), "buchberger_criterion": criterion }),
    })
}

fn member(job: &JobSpec) -> Result<Outcome> {
    let r = ring(job)?;
    let i = Ideal::new(&r, polys(&r, job.generators.as_deref().context("missing generators")?, "generators")?)?
        .with_budget(budget(job));
    let f = parse_polynomial(job.f.as_deref().context("missing polynomial `f`")?, &r)?;
    let nf = i.groebner_basis()?.normal_form(&f);
    Ok(Outcome {
        text: format!("member: {}\nnormal form: {nf}", yes_no(nf.is_zero())),
        results: json!({ "member": nf.is_zero(), "normal_form": nf.to_string() }),
    })
}

fn colon(job: &JobSpec) -> Result<Outcome> {
    let r = ring(job)?;
    let i = ideal(job, &r)?;
    let by = polys(&r, job.by.as_deref().context("missing `by` (the divisor ideal)")?, "by")?;
    let j = Ideal::new(&r, by)?;
    let q = i.quotient(&j)?;
    let gens = strings(q.generators());
    Ok(Outcome { text: gens.join("\n"), results: json!({ "colon": gens }) })
}

fn bracket(job: &JobSpec) -> Result<Outcome> {
    let r = ring(job)?;
    let i = ideal(job, &r)?;
    let b = bracket_power(&i, job.e.unwrap_or(1))?;
    let gens = strings(b.generators());
    Ok(Outcome { text: gens.join("\n"), results: json!({ "generators": gens }) })
}

fn fedder(job: &JobSpec) -> Result<Outcome> {
    let r = ring(job)?;
    let i = ideal(job, &r)?;
    let general = fedder_is_fpure(&i)?;
    let principal = match i.generators() {
        [f] => Some(fedder_is_fpure_principal(f)?),
        _ => None,
    };
    let mut text = format!("F-pure: {}", yes_no(general));
    if let Some(fast) = principal {
        text.push_str(&format!("\nF-pure (coefficient test): {}", yes_no(fast)));
    }
    Ok(Outcome { text, results: json!({ "fpure": general, "fpure_principal": principal }) })
}

fn e_structures(job: &JobSpec) -> Result<Outcome> {
    let r = ring(job)?;
    let i = ideal(job, &r)?;
    let m = e_structure_module(&i, job.e.unwrap_or(1))?;
    let colon = strings(m.colon.generators());
    let cosets = strings(&m.coset_generators);
    Ok(Outcome {
        text: format!("colon: {}\ncoset generators: {}", colon.join(", "), cosets.join(", ")),
        results: json!({ "colon": colon, "coset_generators": cosets }),
    })
}

fn rf_submodule(job: &JobSpec) -> Result<Outcome> {
    let r = ring(job)?;
    let i = ideal(job, &r)?;
    let tau = Ideal::new(&r, polys(&r, job.tau.as_deref().context("missing `tau`")?, "tau")?)?.with_budget(budget(job));
    let ok = is_rf_submodule(&tau, &i, job.e.unwrap_or(1))?;
    Ok(Outcome { text: format!("R[F]-submodule: {}", yes_no(ok)), results: json!({ "rf_submodule": ok }) })
}

/// `(p, e)` with `q = p^e`.
fn split_q(q: u64) -> Result<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0).context("q must be at least 2")?;
    if !is_prime(p) {
        bail!("q = {q} is not a prime power");
    }
    let e = fsing_core::scalar::power_of(p, q).with_context(|| format!("q = {q} is not a prime power"))?;
    Ok((p, e))
}

fn coefficient_field(job: &JobSpec) -> Result<(fsing_core::FieldRef, u32)> {
    let q = job.q.context("missing `q`")?;
    let (p, e) = split_q(q)?;
    let m = job.field_degree.unwrap_or(1);
    Ok((FiniteField::extension(p, m)?, e))
}

fn matrix_src(job: &JobSpec) -> Result<&str> {
    job.matrix.as_deref().context("missing matrix `A`")
}

fn twisted_map(job: &JobSpec) -> Result<SemilinearMap<TwistedPoly>> {
    let (k, e) = coefficient_field(job)?;
    let a = parse_twisted_matrix(matrix_src(job)?, &k)?;
    Ok(SemilinearMap::new(a, e)?)
}

fn field_map(job: &JobSpec) -> Result<SemilinearMap<FieldScalar>> {
    let (k, e) = coefficient_field(job)?;
    let a = parse_field_matrix(matrix_src(job)?, &k)?;
    Ok(SemilinearMap::new(a, e)?)
}

fn vector_string(v: &[FieldScalar]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn semilinear_iterate(job: &JobSpec) -> Result<Outcome> {
    let map = twisted_map(job)?;
    let m = map.iterate_matrix(job.r.unwrap_or(1))?;
    let det = m.determinant()?;
    Ok(Outcome { text: m.to_string(), results: json!({ "matrix": m.to_string(), "determinant": det.to_string() }) })
}

fn semilinear_base_change(job: &JobSpec) -> Result<Outcome> {
    let map = twisted_map(job)?;
    let map = match job.r {
        Some(r) if r > 1 => map.iterate(r)?,
        _ => map,
    };
    let (k, _) = coefficient_field(job)?;
    let c = parse_twisted_matrix(job.change.as_deref().context("missing change of basis `C`")?, &k)?;
    let b = map.base_change(&c)?;
    Ok(Outcome {
        text: b.matrix().to_string(),
        results: json!({ "matrix": b.matrix().to_string(), "q": b.q() }),
    })
}

const LISTING_LIMIT: u128 = 729;

fn semilinear_fixed(job: &JobSpec) -> Result<Outcome> {
    let map = field_map(job)?;
    let fixed = map.fixed_vectors()?;
    let basis: Vec<String> = fixed.fp_basis().iter().map(|v| vector_string(v)).collect();
    let listed: Option<Vec<String>> =
        fixed.vectors(LISTING_LIMIT).ok().map(|vs| vs.iter().map(|v| vector_string(v)).collect());
    let mut text = format!(
        "fixed vectors: {} (F_p-dimension {}, span rank {})\nF_p-basis: {}",
        fixed.cardinality(),
        fixed.fp_dimension(),
        fixed.span_rank(),
        if basis.is_empty() { "none".to_string() } else { basis.join(" ") }
    );
    if let Some(l) = &listed {
        text.push_str(&format!("\nall: {}", l.join(" ")));
    }
    Ok(Outcome {
        text,
        results: json!({
            "count": fixed.cardinality().to_string(),
            "fp_dimension": fixed.fp_dimension(),
            "span_rank": fixed.span_rank(),
            "fp_basis": basis,
            "vectors": listed,
        }),
    })
}

fn semilinear_fixed_basis(job: &JobSpec) -> Result<Outcome> {
    let map = field_map(job)?;
    let found = map.f_fixed_basis(job.max_ext.unwrap_or(8))?;
    let basis: Vec<String> = found.basis.iter().map(|v| vector_string(v)).collect();
    Ok(Outcome {
        text: format!("extension degree: {}\nfield: {}\nbasis: {}", found.extension_degree, found.field, basis.join(" ")),
        results: json!({ "extension_degree": found.extension_degree, "field": found.field.to_string(), "basis": basis }),
    })
}

fn semilinear_stable(job: &JobSpec) -> Result<Outcome> {
    let map = field_map(job)?;
    let horizon = job.r.unwrap_or(1);
    let levels = map.stable_subspaces(horizon, 1_000_000)?;
    let cp = map.characteristic_polynomial();
    let cp_text = format_polynomial(&cp, "t");
    let irreducible = is_irreducible(&cp);
    let mut text = format!(
        "characteristic polynomial: {cp_text} ({})",
        match irreducible {
            Some(true) => "irreducible",
            Some(false) => "reducible",
            None => "irreducibility not decided",
        }
    );
    let mut out = Vec::new();
    for l in &levels {
        let counts: Vec<String> = l.counts.iter().map(|(d, s, t)| format!("dim {d}: {s}/{t} stable")).collect();
        text.push_str(&format!("\nr={}: {}; {}", l.r, if l.simple { "simple" } else { "not simple" }, counts.join(", ")));
        out.push(json!({
            "r": l.r,
            "simple": l.simple,
            "counts": l.counts.iter().map(|(d, s, t)| json!({ "dimension": d, "stable": s, "total": t })).collect::<Vec<_>>(),
            "stable_lines": l.stable_lines.iter().map(|v| vector_string(v)).collect::<Vec<_>>(),
        }));
    }
    Ok(Outcome {
        text,
        results: json!({ "characteristic_polynomial": cp_text, "irreducible": irreducible, "levels": out }),
    })
}

fn semilinear_counterexample(job: &JobSpec) -> Result<Outcome> {
    let q = job.q.context("missing `q`")?;
    let (p, _) = split_q(q)?;
    let t_max = job.t_max.unwrap_or(2);
    let deg_max = job.deg_max.unwrap_or(30);
    let budget = 1u128 << 24;
    let (cert, obstruction, label) = if job.control.unwrap_or(false) {
        let k = FiniteField::extension(p, fsing_core::scalar::power_of(p, q).unwrap_or(1) as usize)?;
        (root_search(&AlphaEquation::artin_schreier(&k, q), t_max, deg_max, budget), None, "alpha^q - alpha")
    } else {
        let (c, o) = counterexample_search(p, q, t_max, deg_max, budget)?;
        (c, Some(o), "alpha^(q+1) + x*alpha - 1")
    };
    let over: Vec<String> = cert
        .records
        .iter()
        .filter_map(|r| match r.status {
            DegreeStatus::OverBudget { candidates } => Some(format!("t={} n={:?}: {candidates}", r.depth, r.degree)),
            _ => None,
        })
        .collect();
    let roots: Vec<String> = cert.roots.iter().map(|r| r.to_string()).collect();
    let mut text = format!(
        "equation: {label} = 0, q = {q}\nsearch: t <= {t_max}, u-degree <= {deg_max}\ndegrees pruned: {}\ncandidates scanned: {}\ncomplete: {}\nroots: {}",
        cert.pruned(),
        cert.scanned_candidates(),
        yes_no(cert.complete),
        if roots.is_empty() { "none".to_string() } else { roots.join(", ") }
    );
    if let Some(o) = obstruction {
        text.push_str(&format!("\ndegree obstruction (q+1)n = 1+n has no solution: {}", yes_no(o)));
    }
    Ok(Outcome {
        text,
        results: json!({
            "equation": label,
            "q": q,
            "t_max": t_max,
            "deg_max": deg_max,
            "pruned_degrees": cert.pruned(),
            "scanned_candidates": cert.scanned_candidates().to_string(),
            "complete": cert.complete,
            "over_budget": over,
            "roots": roots,
            "degree_obstruction": obstruction,
        }),
    })
}

fn hypersurface(job: &JobSpec) -> Result<GradedHypersurface> {
    let r = ring(job)?;
    let f = single_f(job, &r)?;
    Ok(GradedHypersurface::new(&f)?)
}

fn lc_basis(job: &JobSpec) -> Result<Outcome> {
    let h = hypersurface(job)?;
    let basis = h.degree_zero_basis();
    let classes: Vec<String> = basis.iter().map(|b| b.class.to_string()).collect();
    Ok(Outcome {
        text: if classes.is_empty() { "(empty)".into() } else { classes.join("\n") },
        results: json!({
            "a_invariant": h.a_invariant(),
            "classes": classes,
            "exponents": basis.iter().map(|b| b.exponents.clone()).collect::<Vec<_>>(),
        }),
    })
}

fn lc_frobenius(job: &JobSpec) -> Result<Outcome> {
    let h = hypersurface(job)?;
    if let Some(src) = &job.class {
        let c = h.parse_class(src)?;
        let image = h.frobenius_on_class(&c);
        return Ok(Outcome {
            text: format!("F({c}) = {image}"),
            results: json!({ "class": c.to_string(), "image": image.to_string(), "degree": image.degree() }),
        });
    }
    let basis = h.degree_zero_basis();
    let m = h.frobenius_matrix_degree_zero();
    let images: Vec<String> = basis.iter().map(|b| format!("F({}) = {}", b.class, h.frobenius_on_class(&b.class))).collect();
    let matrix = if basis.is_empty() { "[]".to_string() } else { m.to_string() };
    Ok(Outcome { text: format!("{matrix}\n{}", images.join("\n")), results: json!({ "matrix": matrix, "images": images }) })
}

fn action_text(a: &DegreeZeroAction) -> String {
    match a {
        DegreeZeroAction::Nilpotent { order } => format!("nilpotent of order {order}"),
        DegreeZeroAction::Injective => "injective".into(),
        DegreeZeroAction::Mixed { f_reduced_dimension } => format!("mixed, F-reduced dimension {f_reduced_dimension}"),
    }
}

fn lc_verdict(job: &JobSpec) -> Result<Outcome> {
    let h = hypersurface(job)?;
    let report = h.d_simplicity_verdict()?;
    let matrix = if report.frobenius_matrix.is_empty() {
        "[]".to_string()
    } else {
        let rows: Vec<String> = report
            .frobenius_matrix
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(", "))
            .collect();
        format!("[{}]", rows.join("; "))
    };
    let mut text = format!(
        "verdict: {}\nf: {}\np: {}\na-invariant: {}\ndegree-zero dimension: {}\nfrobenius matrix: {matrix}\ndegree-zero action: {}\nisolated singularity: {}\nlarge-p hypothesis for 0*: assumed",
        report.verdict,
        report.f,
        report.p,
        report.a_invariant,
        report.analysis.degree_zero_dimension,
        action_text(&report.analysis.action),
        yes_no(report.hypotheses.isolated_singularity),
    );
    for l in &report.socle_lines {
        text.push_str(&format!("\nsocle line: {} (c = {}), annihilator ({})", l.class, l.eigencoefficient, l.annihilator.join(", ")));
    }
    Ok(Outcome { text, results: serde_json::to_value(&report)? })
}

fn lc_socle(job: &JobSpec) -> Result<Outcome> {
    let h = hypersurface(job)?;
    let lines = h.socle_line_data()?;
    let mut text = Vec::new();
    let mut out = Vec::new();
    for l in &lines {
        let ann = strings(l.annihilator.generators());
        text.push(format!(
            "{} c={} annihilator=({}) parameter ideal: {} F-stable: {}",
            l.class,
            l.eigencoefficient,
            ann.join(", "),
            l.annihilator_is_parameter_ideal.map_or("n/a", yes_no),
            yes_no(l.rf_stable)
        ));
        out.push(json!({
            "class": l.class.to_string(),
            "exponents": l.exponents,
            "eigencoefficient": l.eigencoefficient,
            "annihilator": ann,
            "annihilator_is_parameter_ideal": l.annihilator_is_parameter_ideal,
            "rf_stable": l.rf_stable,
        }));
    }
    Ok(Outcome { text: if text.is_empty() { "(no F-stable lines)".into() } else { text.join("\n") }, results: json!({ "lines": out }) })
}

fn lc_dual_check(job: &JobSpec) -> Result<Outcome> {
    let h = hypersurface(job)?;
    let lines = h.socle_line_data()?;
    let mut text = Vec::new();
    let mut out = Vec::new();
    for l in lines.iter().filter(|l| l.exponents.is_some()) {
        let ok = h.dual_square_check(l)?;
        text.push(format!("{} c={}: {}", l.class, l.eigencoefficient, if ok { "commutes" } else { "FAILS" }));
        out.push(json!({ "class": l.class.to_string(), "eigencoefficient": l.eigencoefficient, "commutes": ok }));
    }
    Ok(Outcome { text: if text.is_empty() { "(no socle lines)".into() } else { text.join("\n") }, results: json!({ "checks": out }) })
}

/// Degree of `f` (or of the first generator) for the `p mod d` column.
fn sweep_degree(job: &JobSpec, p: u64) -> Option<u64> {
    let mut j = job.clone();
    j.p = Some(p);
    let r = ring(&j).ok()?;
    let src = job.f.clone().or_else(|| job.generators.as_ref().and_then(|g| g.first().cloned()))?;
    parse_polynomial(&src, &r).ok()?.weighted_degree().ok()
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Run `inner` for every prime; rows come out ordered by `p`.
fn sweep(job: &JobSpec, inner: &str) -> Result<Outcome> {
    if inner.starts_with("semilinear") || inner.starts_with("sweep") {
        bail!("`{inner}` cannot be swept over primes");
    }
    let primes = job.primes.as_ref().context("missing `primes`")?.expand()?;
    let results: Vec<(u64, Result<Outcome>)> = primes
        .par_iter()
        .map(|&p| {
            let mut j = job.clone();
            j.command = inner.to_string();
            j.p = Some(p);
            j.primes = None;
            (p, run(&j))
        })
        .collect();
    let mut rows = Vec::new();
    for (p, r) in results {
        let outcome = r.map_err(|e| anyhow!("p = {p}: {e:#}"))?;
        rows.push((p, outcome.results));
    }
    let header: Vec<&str> = match inner {
        "lc verdict" => vec!["p", "p_mod_d", "verdict", "degree_zero_action", "frobenius_matrix"],
        "fedder" => vec!["p", "p_mod_d", "fpure", "fpure_principal"],
        _ => vec!["p", "p_mod_d", "result"],
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header)?;
    let mut json_rows = Vec::new();
    for (p, res) in &rows {
        let p_mod_d = sweep_degree(job, *p).filter(|&d| d > 0).map(|d| (p % d).to_string()).unwrap_or_default();
        let record: Vec<String> = match inner {
            "lc verdict" => {
                let action = serde_json::from_value::<DegreeZeroAction>(res["analysis"]["action"].clone())
                    .map(|a| action_text(&a))
                    .unwrap_or_default();
                let m: Vec<String> = res["frobenius_matrix"]
                    .as_array()
                    .map(|rows| {
                        rows.iter()
                            .map(|r| r.as_array().map(|c| c.iter().map(csv_cell).collect::<Vec<_>>().join(" ")).unwrap_or_default())
                            .collect()
                    })
                    .unwrap_or_default();
                vec![p.to_string(), p_mod_d.clone(), csv_cell(&res["verdict"]), action, m.join("; ")]
            }
            "fedder" => vec![p.to_string(), p_mod_d.clone(), csv_cell(&res["fpure"]), csv_cell(&res["fpure_principal"])],
            _ => vec![p.to_string(), p_mod_d.clone(), res.to_string()],
        };
        w.write_record(&record)?;
        json_rows.push(json!({ "p": p, "p_mod_d": p_mod_d, "result": res }));
    }
    let csv = String::from_utf8(w.into_inner()?)?;
    Ok(Outcome { text: csv.trim_end().to_string(), results: json!({ "command": inner, "rows": json_rows }) })
}

/// Exposed for tests: a [`Matrix`] rendering helper stays in the core.
#[doc(hidden)]
pub fn _matrix_text<S: fsing_core::FrobeniusScalar>(m: &Matrix<S>) -> String {
    m.to_string()
}
