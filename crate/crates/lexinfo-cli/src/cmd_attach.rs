use serde_json::Map;

use lexinfo::learning::{attach_new_word, predict_delta_cond_entropy, AttachmentPlan};
use lexinfo::LexicalMatrix;

use crate::output::{measure, render, LogBase, RunManifest};
use crate::CliError;

pub fn run(
    matrix_file: &str,
    meanings: &[usize],
    word: Option<usize>,
    out: Option<&str>,
    log_base: LogBase,
    base_label: &str,
) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(matrix_file)?;
    let mut mx = LexicalMatrix::from_edge_list(&text)?;
    let word = match word {
        Some(w) => w,
        None => mx.next_unlinked_word()?,
    };
    let plan = AttachmentPlan::new(&mx, word, meanings)?;
    let predicted = predict_delta_cond_entropy(&mx, &plan)?;
    let report = attach_new_word(&mut mx, &plan)?;

    let out_path = out
        .map(str::to_string)
        .unwrap_or_else(|| format!("{matrix_file}.attached"));
    std::fs::write(&out_path, mx.to_edge_list())?;

    let meanings_csv = meanings
        .iter()
        .map(|j| j.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let manifest = RunManifest::new("attach")
        .input(matrix_file)
        .flag("meanings", meanings_csv)
        .flag("word", word as u64)
        .flag("log_base", base_label)
        .output(&out_path);

    let mut body = Map::new();
    body.insert("word".into(), word.into());
    body.insert("meanings".into(), meanings.to_vec().into());
    body.insert("alpha".into(), plan.alpha.into());
    body.insert("alpha0".into(), plan.alpha0.into());
    body.insert("h_s_after".into(), measure(report.h_s_after, log_base));
    body.insert(
        "h_s_given_r_after".into(),
        measure(report.h_s_given_r_after, log_base),
    );
    body.insert("i_sr_after".into(), measure(report.i_sr_after, log_base));
    body.insert(
        "delta_h_s_given_r".into(),
        measure(report.delta_h_s_given_r, log_base),
    );
    body.insert(
        "delta_h_s_given_r_predicted".into(),
        measure(predicted, log_base),
    );
    body.insert("matrix_out".into(), out_path.into());
    print!("{}", render(&manifest, body));
    Ok(0)
}
