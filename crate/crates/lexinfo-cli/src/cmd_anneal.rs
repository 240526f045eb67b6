use std::fmt::Write as _;
use std::path::Path;

use serde_json::Map;

use lexinfo::measures::Lambda;
use lexinfo::search::{run_chains, AnnealConfig, AnnealResult};

use crate::output::{render, sig12, RunManifest};
use crate::CliError;

pub struct Args {
    pub vs: usize,
    pub vr: usize,
    pub lambda: f64,
    pub steps: u64,
    pub seed: u64,
    pub chains: u32,
    pub t_initial: f64,
    pub cooling: f64,
    pub out: String,
}

/// Costs and temperatures are always reported in bits: the schedule is
/// defined in bits and the trajectory column is named accordingly.
pub fn run(args: Args) -> Result<i32, CliError> {
    let config = AnnealConfig {
        vs_max: args.vs,
        vr_max: args.vr,
        lambda: Lambda::new(args.lambda)?,
        steps: args.steps,
        t_initial: args.t_initial,
        cooling: args.cooling,
        seed: args.seed,
        chains: args.chains,
    };
    config.validate()?;
    let results = run_chains(&config)?;

    let out_dir = Path::new(&args.out);
    std::fs::create_dir_all(out_dir)?;

    let manifest = || {
        RunManifest::new("anneal")
            .flag("vs", args.vs as u64)
            .flag("vr", args.vr as u64)
            .flag("lambda", args.lambda)
            .flag("steps", args.steps)
            .flag("chains", args.chains as u64)
            .flag("t_initial", args.t_initial)
            .flag("cooling", args.cooling)
            .seed(args.seed)
            .output(&args.out)
    };

    for (c, result) in results.iter().enumerate() {
        let csv_name = format!("chain_{c:02}.csv");
        std::fs::write(out_dir.join(&csv_name), trajectory_csv(result))?;

        let mut body = chain_body(&config, result);
        body.insert("chain".into(), c.into());
        body.insert("trajectory_csv".into(), csv_name.into());
        std::fs::write(
            out_dir.join(format!("chain_{c:02}.json")),
            render(&manifest(), body),
        )?;
    }

    // summary: the best chain, lowest cost first, earliest chain on ties
    let best_chain = results
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.best_cost.total_cmp(&b.best_cost))
        .map(|(c, _)| c)
        .expect("at least one chain");
    let mut body = chain_body(&config, &results[best_chain]);
    body.insert("chains".into(), results.len().into());
    body.insert("best_chain".into(), best_chain.into());
    let summary = render(&manifest(), body);
    std::fs::write(out_dir.join("summary.json"), &summary)?;
    print!("{summary}");
    Ok(0)
}

fn chain_body(config: &AnnealConfig, result: &AnnealResult) -> Map<String, serde_json::Value> {
    let mut body = Map::new();
    body.insert(
        "config".into(),
        serde_json::to_value(config).expect("config serializes"),
    );
    body.insert("best_cost".into(), sig12(result.best_cost).into());
    body.insert(
        "best_matrix".into(),
        serde_json::to_value(&result.best_matrix).expect("matrix serializes"),
    );
    body.insert(
        "rank_freq".into(),
        result
            .rank_freq
            .iter()
            .map(|&p| sig12(p))
            .collect::<Vec<_>>()
            .into(),
    );
    body.insert(
        "zipf_exponent".into(),
        match result.zipf_exponent {
            Some(e) => sig12(e).into(),
            None => serde_json::Value::Null,
        },
    );
    body
}

fn trajectory_csv(result: &AnnealResult) -> String {
    let mut csv = String::from("step,temperature,cost_bits,m,linked_words\n");
    for pt in &result.trajectory {
        let _ = writeln!(
            csv,
            "{},{},{},{},{}",
            pt.step,
            sig12(pt.temperature),
            sig12(pt.cost),
            pt.links,
            pt.linked_words
        );
    }
    csv
}
