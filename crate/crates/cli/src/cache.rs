//! Matrix files in the output directory, keyed by a hash of the inputs that
//! determine them.

use std::fs;
use std::path::{Path, PathBuf};

use opprank_core::finitegeom::io::{parse_matrix, write_labels, write_matrix};
use opprank_core::finitegeom::{GeometryProblem, IncidenceMatrix};
use sha2::{Digest, Sha256};

use crate::CliError;

pub fn cache_key(problem: &GeometryProblem) -> String {
    let text = format!(
        "opprank/1 matrix\nsystem={}\np={}\nt={}\ncotype={}\n",
        problem.system().spec(),
        problem.field().p(),
        problem.field().t(),
        problem.cotype_j()
    );
    let digest = Sha256::digest(text.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPaths {
    pub matrix: PathBuf,
    pub row_labels: PathBuf,
    pub col_labels: PathBuf,
}

pub fn paths(problem: &GeometryProblem, out: &Path) -> MatrixPaths {
    let stem = format!(
        "{}-q{}-{}",
        problem.system().spec(),
        problem.q(),
        cache_key(problem)
    );
    MatrixPaths {
        matrix: out.join(format!("{stem}.matrix")),
        row_labels: out.join(format!("{stem}.rows")),
        col_labels: out.join(format!("{stem}.cols")),
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}

/// A cached matrix is reused only if its header matches the problem and its
/// line sums are intact.
fn load_cached(problem: &GeometryProblem, path: &Path) -> Option<IncidenceMatrix> {
    let text = fs::read_to_string(path).ok()?;
    let m = parse_matrix(&text).ok()?;
    let n = problem.expected_count();
    let fits = m.family == problem.system().spec().family()
        && m.rank == problem.system().rank()
        && m.q == problem.q()
        && &m.cotype_j == problem.cotype_j()
        && &m.cotype_k == problem.cotype_k()
        && m.nrows() as u128 == n
        && m.check_line_sums(problem.expected_row_sum()).is_ok();
    fits.then_some(m)
}

/// Returns the matrix and where it lives, building and persisting it with
/// its object labels on a cache miss.
pub fn load_or_build(
    problem: &GeometryProblem,
    out: &Path,
) -> Result<(IncidenceMatrix, MatrixPaths), CliError> {
    let p = paths(problem, out);
    if let Some(m) = load_cached(problem, &p.matrix) {
        return Ok((m, p));
    }
    let m = problem.build_incidence()?;
    fs::create_dir_all(out).map_err(|e| CliError::io(out, e))?;
    write_atomic(&p.row_labels, &write_labels(m.row_labels()))?;
    write_atomic(&p.col_labels, &write_labels(m.col_labels()))?;
    write_atomic(&p.matrix, &write_matrix(&m))?;
    Ok((m, p))
}

pub fn read_matrix_file(path: &Path) -> Result<IncidenceMatrix, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    Ok(parse_matrix(&text)?)
}
