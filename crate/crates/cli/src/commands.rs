use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use opprank_core::characters::FormalCharacter;
use opprank_core::exactlinalg::{check_eigen_powers, gram, MatrixModP, MAX_SPECTRAL_SIZE};
use opprank_core::finitegeom::{GeometryProblem, IncidenceMatrix};
use opprank_core::jantzen::{
    jantzen_sum, lambda_opp, resolve_simple, steinberg_rank_power,
    truncated_poly_dim, OppositeWeightSpec, Twist,
};
use opprank_core::{Error, Family, RootSystem, RootSystemSpec, TypeSet, Weight};

use crate::cache::{load_or_build, read_matrix_file};
use crate::config::JobConfig;
use crate::report::{
    FormStats, GeometryStats, Header, Prediction, PredictReport, ResolutionSummary,
    SpectrumResult, TypeACheck, Verdict, VerifyReport,
};
use crate::{CliError, Outcome};

fn to_value<T: Serialize>(report: &T) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

/// The resolved job inputs shared by the prediction commands.
struct Job {
    rs: RootSystem,
    cotype: TypeSet,
    p: u64,
    t: u32,
    twist: Option<Twist>,
}

impl Job {
    fn from_config(cfg: &JobConfig) -> Result<Job, CliError> {
        let rs = RootSystem::new(cfg.require_system()?);
        let twist = cfg
            .twist_orbits
            .clone()
            .map(|o| Twist::new(&rs, o))
            .transpose()?;
        let n = twist.as_ref().map_or(rs.rank(), Twist::num_orbits);
        let cotype = cfg.require_cotype(n)?;
        let p = cfg.require_p()?;
        Ok(Job {
            rs,
            cotype,
            p,
            t: cfg.t,
            twist,
        })
    }

    fn spec(&self) -> RootSystemSpec {
        self.rs.spec()
    }

    fn order(&self) -> u32 {
        self.twist.as_ref().map_or(1, Twist::order)
    }

    fn weight_spec(&self, t: u32) -> OppositeWeightSpec {
        OppositeWeightSpec {
            cotype: self.cotype.clone(),
            p: self.p,
            t,
            twist: self.twist.clone(),
        }
    }

    fn q(&self) -> u64 {
        self.p.pow(self.t)
    }
}

fn predict_job(job: &Job, depth: usize) -> Result<Prediction, CliError> {
    let rs = &job.rs;
    let e = job.order();
    let lambda_q = lambda_opp(rs, &job.weight_spec(job.t))?;
    // over the prime subfield of the coefficient field: q₀ = p
    let lambda_p = lambda_opp(rs, &job.weight_spec(e))?;
    let res = resolve_simple(rs, &lambda_p, job.p, depth)?;
    let steinberg_exponent = job.t / e;
    let predicted = res.dim.as_ref().map(|d| steinberg_rank_power(d, steinberg_exponent));

    let type_a_check = match (job.spec().family(), &job.twist) {
        (Family::A, None) => {
            let free = job.cotype.complement(rs.rank());
            match free.nodes() {
                &[i] => {
                    let l = rs.rank() as u64;
                    let degree = (l + 1 - i as u64) * (job.p - 1);
                    let value = truncated_poly_dim(l as u32 + 1, job.p, degree);
                    Some(TypeACheck {
                        nvars: l as u32 + 1,
                        degree,
                        agrees: res.dim.as_ref().map(|d| *d == value),
                        truncated_poly_dim: value.to_string(),
                    })
                }
                _ => None,
            }
        }
        _ => None,
    };

    Ok(Prediction {
        lambda_opp: lambda_q,
        lambda_at_prime: lambda_p,
        twist_order: job.twist.as_ref().map(Twist::order),
        steinberg_exponent,
        resolution: ResolutionSummary {
            status: res.status,
            depth: res.depth(),
            chain: res.chain.iter().map(|l| l.weight.clone()).collect(),
            dim: res.dim.as_ref().map(BigInt::to_string),
        },
        predicted_rank: predicted.as_ref().map(BigInt::to_string),
        type_a_check,
    })
}

fn prediction_notes(job: &Job) -> Vec<String> {
    let mut notes = Vec::new();
    let rs = &job.rs;
    let all_but_first = TypeSet::new((2..=rs.rank()).collect(), rs.rank()).ok();
    if job.spec().to_string() == "E6"
        && job.twist.is_none()
        && Some(&job.cotype) == all_but_first.as_ref()
        && job.p < 11
    {
        notes.push(
            "E6 points: the five-term alternating Jantzen sum needs p >= 11; for smaller p the chain is whatever the generic method finds"
                .into(),
        );
    }
    if job.twist.is_some() {
        notes.push("twisted groups: only the highest weight is modelled, not the geometry".into());
    }
    notes
}

pub fn predict(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let job = Job::from_config(cfg)?;
    let prediction = predict_job(&job, cfg.depth)?;
    let code = if prediction.predicted_rank.is_some() {
        0
    } else {
        Verdict::UnresolvedPrediction.exit_code()
    };
    let report = PredictReport {
        header: Header::new("predict"),
        system: job.spec().to_string(),
        cotype: job.cotype.clone(),
        p: job.p,
        t: job.t,
        q: job.q(),
        prediction,
        notes: prediction_notes(&job),
    };
    Ok(Outcome::json(&to_value(&report), code))
}

fn geometry_problem(cfg: &JobConfig) -> Result<GeometryProblem, CliError> {
    if cfg.twist_orbits.is_some() {
        return Err(Error::UnsupportedGeometry("twisted groups".into()).into());
    }
    let spec = cfg.require_system()?;
    let cotype = cfg.require_cotype(spec.rank())?;
    Ok(GeometryProblem::new(spec, cfg.require_p()?, cfg.t, cotype)?)
}

fn geometry_stats(problem: &GeometryProblem, m: &IncidenceMatrix, file: String) -> GeometryStats {
    GeometryStats {
        cotype_j: problem.cotype_j().clone(),
        cotype_k: problem.cotype_k().clone(),
        ambient_dim: problem.ambient_dim(),
        nrows: m.nrows(),
        ncols: m.ncols(),
        w_star_length: problem.w_star_length(),
        row_sum: problem.expected_row_sum(),
        form: problem.form().map(|f| FormStats {
            kind: f.kind().to_string(),
            gram: f.gram().to_vec(),
        }),
        matrix_file: file,
    }
}

pub fn build(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let problem = geometry_problem(cfg)?;
    let (m, paths) = load_or_build(&problem, &cfg.out)?;
    let stats = geometry_stats(&problem, &m, paths.matrix.display().to_string());
    let report = json!({
        "schema": crate::report::SCHEMA,
        "command": "build",
        "system": problem.system().spec().to_string(),
        "q": problem.q(),
        "geometry": stats,
        "row_labels_file": paths.row_labels.display().to_string(),
        "col_labels_file": paths.col_labels.display().to_string(),
    });
    Ok(Outcome::json(&report, 0))
}

/// The matrix named by `matrix=`, or the one the config determines.
fn matrix_for(cfg: &JobConfig) -> Result<(IncidenceMatrix, String), CliError> {
    match &cfg.matrix {
        Some(path) => Ok((read_matrix_file(path)?, path.display().to_string())),
        None => {
            let problem = geometry_problem(cfg)?;
            let (m, paths) = load_or_build(&problem, &cfg.out)?;
            Ok((m, paths.matrix.display().to_string()))
        }
    }
}

fn rank_of(m: &IncidenceMatrix, p: u64) -> Result<usize, CliError> {
    Ok(MatrixModP::from_incidence(m, p)?.rank())
}

pub fn rank(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let (m, file) = matrix_for(cfg)?;
    let p = cfg.p.unwrap_or(m.p);
    let r = rank_of(&m, p)?;
    let report = json!({
        "schema": crate::report::SCHEMA,
        "command": "rank",
        "matrix_file": file,
        "nrows": m.nrows(),
        "ncols": m.ncols(),
        "p": p,
        "rank": r.to_string(),
    });
    Ok(Outcome::json(&report, 0))
}

fn spectrum_of(m: &IncidenceMatrix) -> Result<SpectrumResult, CliError> {
    let spec = RootSystemSpec::new(m.family, m.rank)?;
    let rs = RootSystem::new(spec);
    let max_exp = 2 * rs.w_star_length(&m.cotype_j) as u32;
    let report = check_eigen_powers(&gram(m), m.q, max_exp)?;
    let q = BigInt::from(m.q);
    Ok(SpectrumResult {
        size: m.nrows(),
        q: m.q,
        max_exp,
        ok: report.ok,
        eigenvalues: report
            .exponents
            .iter()
            .map(|&a| num_traits::pow(q.clone(), a as usize).to_string())
            .collect(),
        exponents: report.exponents,
        zero_eigenvalue: report.zero_eigenvalue,
    })
}

pub fn spectrum(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let (m, file) = matrix_for(cfg)?;
    let result = spectrum_of(&m)?;
    let code = if result.ok { 0 } else { Verdict::Mismatch.exit_code() };
    let report = json!({
        "schema": crate::report::SCHEMA,
        "command": "spectrum",
        "matrix_file": file,
        "spectrum": result,
    });
    Ok(Outcome::json(&report, code))
}

pub fn verify(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let job = Job::from_config(cfg)?;
    let prediction = predict_job(&job, cfg.depth)?;
    let mut notes = prediction_notes(&job);

    let problem = match geometry_problem(cfg) {
        Ok(pr) => Some(pr),
        Err(CliError::Core(e @ Error::UnsupportedGeometry(_))) => {
            notes.push(e.to_string());
            None
        }
        Err(e) => return Err(e),
    };
    let (geometry, measured, spectrum) = match &problem {
        Some(pr) => {
            let (m, paths) = load_or_build(pr, &cfg.out)?;
            let measured = rank_of(&m, job.p)?.to_string();
            let spectrum = if m.nrows() <= MAX_SPECTRAL_SIZE {
                Some(spectrum_of(&m)?)
            } else {
                notes.push(format!(
                    "spectral check skipped: {} rows exceed {MAX_SPECTRAL_SIZE}",
                    m.nrows()
                ));
                None
            };
            let stats = geometry_stats(pr, &m, paths.matrix.display().to_string());
            (Some(stats), Some(measured), spectrum)
        }
        None => (None, None, None),
    };
    let verdict = VerifyReport::decide(&prediction, geometry.is_some(), measured.as_ref());
    let report = VerifyReport {
        header: Header::new("verify"),
        system: job.spec().to_string(),
        cotype: job.cotype.clone(),
        p: job.p,
        t: job.t,
        q: job.q(),
        prediction,
        geometry,
        measured_rank: measured,
        spectrum,
        verdict,
        notes,
    };
    Ok(Outcome::json(&to_value(&report), verdict.exit_code()))
}

pub fn lambda_opp_cmd(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let job = Job::from_config(cfg)?;
    let spec = job.weight_spec(job.t);
    let lambda = lambda_opp(&job.rs, &spec)?;
    let report = json!({
        "schema": crate::report::SCHEMA,
        "command": "lambda-opp",
        "system": job.spec().to_string(),
        "cotype": job.cotype,
        "ambient_cotype": spec.ambient_cotype(&job.rs)?,
        "p": job.p,
        "t": job.t,
        "q": job.q(),
        "twist_order": job.twist.as_ref().map(Twist::order),
        "coefficient": spec.coefficient_base()? - 1,
        "lambda_opp": lambda,
    });
    Ok(Outcome::json(&report, 0))
}

/// `weight=` if given, otherwise `λ_opp` at the prime.
fn weight_for(cfg: &JobConfig) -> Result<(RootSystem, Weight), CliError> {
    match &cfg.weight {
        Some(w) => Ok((RootSystem::new(cfg.require_system()?), w.clone())),
        None => {
            let job = Job::from_config(cfg)?;
            let w = lambda_opp(&job.rs, &job.weight_spec(job.order()))?;
            Ok((job.rs, w))
        }
    }
}

/// `χ(a) − χ(b) + …`, highest weight first.
pub fn expression(x: &FormalCharacter) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, c)) in x.terms().rev().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        if i > 0 {
            out.push_str(&format!(" {sign} "));
        } else if c < 0 {
            out.push('-');
        }
        if c.abs() != 1 {
            out.push_str(&format!("{}", c.abs()));
        }
        out.push_str(&format!("χ{w}"));
    }
    out
}

pub fn jantzen_sum_cmd(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let (rs, w) = weight_for(cfg)?;
    let p = cfg.require_p()?;
    let sum = jantzen_sum(&rs, &w, p)?;
    let report = json!({
        "schema": crate::report::SCHEMA,
        "command": "jantzen-sum",
        "system": rs.spec().to_string(),
        "weight": w,
        "p": p,
        "terms": sum,
        "expression": expression(&sum),
    });
    Ok(Outcome::json(&report, 0))
}

pub fn weyl_dim_cmd(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let (rs, w) = weight_for(cfg)?;
    let dim = rs.weyl_dim(&w)?;
    let report = json!({
        "schema": crate::report::SCHEMA,
        "command": "weyl-dim",
        "system": rs.spec().to_string(),
        "weight": w,
        "dim": dim.to_string(),
    });
    Ok(Outcome::json(&report, 0))
}
