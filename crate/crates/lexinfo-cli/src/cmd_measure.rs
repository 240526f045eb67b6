use serde_json::Map;

use lexinfo::measures::{report, Lambda};
use lexinfo::LexicalMatrix;

use crate::output::{measure, render, LogBase, RunManifest};
use crate::CliError;

pub fn run(
    matrix_file: &str,
    lambda: Option<f64>,
    log_base: LogBase,
    base_label: &str,
) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(matrix_file)?;
    let mx = LexicalMatrix::from_edge_list(&text)?;
    let lambda = lambda.map(Lambda::new).transpose()?;
    let rep = report(&mx, lambda, true)?;

    let mut manifest = RunManifest::new("measure")
        .input(matrix_file)
        .flag("log_base", base_label);
    if let Some(l) = lambda {
        manifest = manifest.flag("lambda", l.value());
    }

    let mut body = Map::new();
    body.insert("h_s".into(), measure(rep.h_s, log_base));
    body.insert("h_s_given_r".into(), measure(rep.h_s_given_r, log_base));
    body.insert("i_sr".into(), measure(rep.i_sr, log_base));
    if let Some(l_s) = rep.l_s {
        body.insert("l_s".into(), measure(l_s, log_base));
    }
    if let Some(cost) = rep.omega_cost {
        body.insert("omega_cost".into(), measure(cost, log_base));
    }
    if let Some(l) = rep.lambda {
        body.insert("lambda".into(), l.into());
    }
    print!("{}", render(&manifest, body));
    Ok(0)
}
