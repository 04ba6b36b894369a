//! One function per subcommand; each returns the full output document
//! as a string so nothing is written on failure.

use cechml_core::cech::{build_complex, cohomology_with, Nerve, SheafDatum};
use cechml_core::p1::{
    ml_obstruction, ml_solve, pn_tables, riemann_roch_check, od_cohomology, DivisorP1,
    MLDistribution, TruncationPolicy,
};
use cechml_core::plane::{
    assemble, evaluate, group_poles, verify_principal_part, Complex64,
};
use cechml_core::torus::{
    check_periodicity, residue_test, torus_solve, torus_solve_unchecked, Lattice,
    TorusDistribution, WeierstrassContext,
};
use cechml_core::Poly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

use crate::config::Numerics;
use crate::error::CliError;
use crate::schema::{self, SCHEMA_VERSION};

fn poly_value(p: &Poly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::from(schema::gaussian_str(c)))
            .collect(),
    )
}

pub fn cmd_cech(input: &str, representatives: bool) -> Result<String, CliError> {
    let doc = schema::parse_json(input)?;
    let parsed = schema::parse_cech_input(&doc)?;
    let faces: Vec<Vec<usize>> = parsed.faces.iter().map(|(f, _)| f.clone()).collect();
    let nerve = Nerve::new(parsed.n_opens, faces).map_err(CliError::math)?;
    let mut datum = SheafDatum::new();
    for (face, dim) in &parsed.faces {
        datum.set_dim(face.clone(), *dim);
    }
    for (face, coface, matrix) in &parsed.restrictions {
        let rows = datum.dim(coface);
        let cols = datum.dim(face);
        let m = schema::parse_matrix(matrix, rows, cols)?;
        datum.set_restriction(face.clone(), coface.clone(), m);
    }
    let cx = build_complex(&nerve, &datum).map_err(CliError::math)?;
    let report = cohomology_with(&cx, representatives);
    let mut out = Map::new();
    out.insert(
        String::from("ranks"),
        Value::Array(report.ranks.iter().map(|&r| Value::from(r as u64)).collect()),
    );
    if let Some(reps) = report.representatives {
        out.insert(
            String::from("representatives"),
            Value::Array(
                reps.iter()
                    .map(|degree| {
                        Value::Array(
                            degree
                                .iter()
                                .map(|vec| {
                                    Value::Array(
                                        vec.iter()
                                            .map(|g| Value::from(schema::gaussian_str(g)))
                                            .collect(),
                                    )
                                })
                                .collect(),
                        )
                    })
                    .collect(),
            ),
        );
    }
    out.insert(String::from("schema_version"), Value::from(SCHEMA_VERSION));
    Ok(schema::render(&Value::Object(out)))
}

fn rr_value(d: &DivisorP1, window: Option<i64>) -> Result<Value, CliError> {
    let (h0, h1) = match window {
        Some(m) => {
            let policy = TruncationPolicy::new(m);
            policy.validate_for(d).map_err(|e| CliError::schema(e.to_string()))?;
            od_cohomology(d, &policy).map_err(CliError::math)?
        }
        None => {
            let report = riemann_roch_check(d).map_err(CliError::math)?;
            ((report.h0 as usize), (report.h1 as usize))
        }
    };
    let (h0, h1) = (h0 as i64, h1 as i64);
    let degree = d.degree();
    let mut out = Map::new();
    out.insert(String::from("degree"), Value::from(degree));
    out.insert(String::from("h0"), Value::from(h0));
    out.insert(String::from("h1"), Value::from(h1));
    out.insert(String::from("lhs"), Value::from(h0 - h1));
    out.insert(String::from("rhs"), Value::from(1 + degree));
    out.insert(String::from("rr"), Value::from(h0 - h1 == 1 + degree));
    out.insert(String::from("schema_version"), Value::from(SCHEMA_VERSION));
    Ok(Value::Object(out))
}

pub fn cmd_p1(divisor: &str, numerics: &Numerics) -> Result<String, CliError> {
    let doc = schema::parse_json(divisor)?;
    schema::check_schema_version(&doc)?;
    let d = schema::parse_divisor(&doc)?;
    Ok(schema::render(&rr_value(&d, numerics.window)?))
}

fn divisor_label(d: &DivisorP1) -> String {
    if d.entries().is_empty() {
        return String::from("0");
    }
    d.entries()
        .iter()
        .map(|(p, n)| format!("{p}:{n}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn cmd_rr_sweep(
    points: &str,
    min: i64,
    max: i64,
    samples: u64,
    seed: u64,
) -> Result<String, CliError> {
    if min > max {
        return Err(CliError::schema("empty coefficient range"));
    }
    let support: Vec<_> = points
        .split(',')
        .map(|s| schema::parse_point(s.trim()))
        .collect::<Result<_, _>>()?;
    if support.is_empty() {
        return Err(CliError::schema("empty support list"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::from("divisor,degree,h0,h1,lhs,rhs,holds\n");
    for _ in 0..samples {
        let entries: Vec<_> = support
            .iter()
            .map(|p| (p.clone(), rng.gen_range(min..=max)))
            .collect();
        let d = DivisorP1::from_entries(entries);
        let report = riemann_roch_check(&d).map_err(CliError::math)?;
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            divisor_label(&d),
            report.degree,
            report.h0,
            report.h1,
            report.lhs,
            report.rhs,
            report.holds
        ));
    }
    Ok(out)
}

pub fn cmd_ml_p1(parts: &str) -> Result<String, CliError> {
    let doc = schema::parse_json(parts)?;
    schema::check_schema_version(&doc)?;
    let parts = schema::parse_exact_parts(&doc)?;
    let mu = MLDistribution::new(parts).map_err(CliError::math)?;
    let obstruction = ml_obstruction(&mu).map_err(CliError::math)?;
    let solution = ml_solve(&mu);
    // re-expand the solution at every pole: the output only claims
    // "verified" after an exact Laurent comparison
    let mut verified = true;
    for part in mu.parts() {
        let order = part.order() as i64;
        let window = solution
            .laurent_expand(part.pole(), -order, 0)
            .map_err(CliError::math)?;
        for (&j, c) in part.coeffs() {
            if &window.coeff(-(j as i64)) != c {
                verified = false;
            }
        }
    }
    let mut sol = Map::new();
    sol.insert(String::from("den"), poly_value(solution.den()));
    sol.insert(String::from("num"), poly_value(solution.num()));
    let mut out = Map::new();
    out.insert(
        String::from("class_is_zero"),
        Value::from(obstruction.class_is_zero),
    );
    out.insert(
        String::from("ranks"),
        Value::Array(
            obstruction
                .ranks
                .iter()
                .map(|&r| Value::from(r as u64))
                .collect(),
        ),
    );
    out.insert(String::from("schema_version"), Value::from(SCHEMA_VERSION));
    out.insert(String::from("solution"), Value::Object(sol));
    out.insert(String::from("verified"), Value::from(verified));
    Ok(schema::render(&Value::Object(out)))
}

/// Grid spec `"x0:x1:nx,y0:y1:ny"` for the CSV evaluation sweep.
fn parse_grid(spec: &str) -> Result<(f64, f64, usize, f64, f64, usize), CliError> {
    let bad = || {
        CliError::schema(format!(
            "invalid grid {spec:?}; expected \"x0:x1:nx,y0:y1:ny\""
        ))
    };
    let (xs, ys) = spec.split_once(',').ok_or_else(bad)?;
    let axis = |s: &str| -> Result<(f64, f64, usize), CliError> {
        let p: Vec<&str> = s.split(':').collect();
        if p.len() != 3 {
            return Err(bad());
        }
        let lo: f64 = p[0].trim().parse().map_err(|_| bad())?;
        let hi: f64 = p[1].trim().parse().map_err(|_| bad())?;
        let n: usize = p[2].trim().parse().map_err(|_| bad())?;
        if n < 1 {
            return Err(bad());
        }
        Ok((lo, hi, n))
    };
    let (x0, x1, nx) = axis(xs)?;
    let (y0, y1, ny) = axis(ys)?;
    Ok((x0, x1, nx, y0, y1, ny))
}

fn axis_point(lo: f64, hi: f64, n: usize, k: usize) -> f64 {
    if n == 1 {
        lo
    } else {
        lo + (hi - lo) * k as f64 / (n - 1) as f64
    }
}

pub fn cmd_plane_ml(
    domain: &str,
    poles: &str,
    stages: Option<u32>,
    grid: Option<&str>,
    verify: bool,
    numerics: &Numerics,
) -> Result<String, CliError> {
    let domain_doc = schema::parse_json(domain)?;
    schema::check_schema_version(&domain_doc)?;
    let domain = schema::parse_domain(&domain_doc)?;
    let poles_doc = schema::parse_json(poles)?;
    let parts = schema::parse_float_parts(&poles_doc)?;
    let grouping = group_poles(parts, &domain, numerics.stages).map_err(CliError::math)?;
    let max_stage = grouping.stage_of.iter().copied().max().unwrap_or(1);
    let n_trunc = stages.unwrap_or(max_stage);
    let series = assemble(&grouping, n_trunc).map_err(CliError::math)?;

    if let Some(spec) = grid {
        let (x0, x1, nx, y0, y1, ny) = parse_grid(spec)?;
        let mut out = String::from("z_re,z_im,f_re,f_im,bound\n");
        for ky in 0..ny {
            for kx in 0..nx {
                let z = Complex64::new(axis_point(x0, x1, nx, kx), axis_point(y0, y1, ny, ky));
                // points outside K_N or inside a pole-exclusion radius
                // carry no certified value and are skipped
                if let Ok((f, bound)) = evaluate(&series, z) {
                    out.push_str(&format!("{},{},{},{},{}\n", z.re, z.im, f.re, f.im, bound));
                }
            }
        }
        return Ok(out);
    }

    let mut stage_list = Vec::new();
    for stage in &series.stages {
        let mut m = Map::new();
        m.insert(
            String::from("certified_bound"),
            Value::from(stage.certified_bound),
        );
        m.insert(String::from("n"), Value::from(stage.n));
        m.insert(String::from("parts"), Value::from(stage.parts.len() as u64));
        stage_list.push(Value::Object(m));
    }
    let mut out = Map::new();
    out.insert(String::from("n_trunc"), Value::from(n_trunc));
    out.insert(String::from("schema_version"), Value::from(SCHEMA_VERSION));
    out.insert(String::from("stages"), Value::Array(stage_list));
    out.insert(String::from("tail_bound"), Value::from(series.tail_bound));
    if verify {
        let mut checks = Vec::new();
        for part in &grouping.parts {
            let err = verify_principal_part(&series, part, numerics.rho, numerics.q_samples)
                .map_err(CliError::math)?;
            let mut m = Map::new();
            m.insert(String::from("max_rel_err"), Value::from(err));
            m.insert(String::from("pass"), Value::from(err <= numerics.tolerance));
            m.insert(String::from("pole"), schema::complex_value(part.pole));
            checks.push(Value::Object(m));
        }
        out.insert(String::from("verification"), Value::Array(checks));
    }
    Ok(schema::render(&Value::Object(out)))
}

pub fn cmd_torus_ml(
    lattice: &str,
    parts: &str,
    check: bool,
    numerics: &Numerics,
) -> Result<String, CliError> {
    let gens: Vec<&str> = lattice.split(',').collect();
    if gens.len() != 2 {
        return Err(CliError::schema(format!(
            "lattice must be \"w1,w2\", got {lattice:?}"
        )));
    }
    let w1 = schema::parse_complex_str(gens[0])?;
    let w2 = schema::parse_complex_str(gens[1])?;
    let lattice = Lattice::new(w1, w2).map_err(CliError::math)?;
    let ctx = WeierstrassContext::new(lattice.clone()).map_err(CliError::math)?;
    let parts_doc = schema::parse_json(parts)?;
    let parts = schema::parse_float_parts(&parts_doc)?;
    let mu = TorusDistribution::new(parts, &lattice).map_err(CliError::math)?;
    let (residue_sum, solvable) = residue_test(&mu);
    let dev = if check {
        let dev = if solvable {
            let sol = torus_solve(&mu, &ctx).map_err(CliError::math)?;
            check_periodicity(|z| sol.eval(z), &ctx, numerics.periodicity_samples)
                .map_err(CliError::math)?
        } else {
            let raw = torus_solve_unchecked(&mu, &ctx);
            check_periodicity(|z| raw.eval(z), &ctx, numerics.periodicity_samples)
                .map_err(CliError::math)?
        };
        Value::from(dev)
    } else {
        Value::Null
    };
    let mut out = Map::new();
    out.insert(String::from("g2"), schema::complex_value(ctx.g2));
    out.insert(String::from("g3"), schema::complex_value(ctx.g3));
    out.insert(String::from("max_periodicity_dev"), dev);
    out.insert(
        String::from("parts"),
        Value::Array(mu.parts().iter().map(schema::float_part_value).collect()),
    );
    out.insert(
        String::from("residue_sum"),
        schema::complex_value(residue_sum),
    );
    out.insert(String::from("schema_version"), Value::from(SCHEMA_VERSION));
    out.insert(String::from("solvable"), Value::from(solvable));
    Ok(schema::render(&Value::Object(out)))
}

pub fn cmd_tables(n: u32) -> Result<String, CliError> {
    let betti: Vec<Value> = (0..=2 * n)
        .map(|k| {
            pn_tables(n, k, 0)
                .map(|(b, _)| Value::from(b))
                .map_err(CliError::math)
        })
        .collect::<Result<_, _>>()?;
    let mut hodge = Vec::new();
    for p in 0..=n {
        let row: Vec<Value> = (0..=n)
            .map(|q| {
                pn_tables(n, p, q)
                    .map(|(_, h)| Value::from(h))
                    .map_err(CliError::math)
            })
            .collect::<Result<_, _>>()?;
        hodge.push(Value::Array(row));
    }
    let mut out = Map::new();
    out.insert(String::from("betti"), Value::Array(betti));
    out.insert(String::from("hodge"), Value::Array(hodge));
    out.insert(String::from("n"), Value::from(n));
    out.insert(String::from("schema_version"), Value::from(SCHEMA_VERSION));
    Ok(schema::render(&Value::Object(out)))
}
