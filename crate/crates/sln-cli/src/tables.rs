//! `sln tables`: sweep the tableau-count / bounded-subsequence coincidence
//! and the fixed-flag variety dimension over a rectangle of (m, n) values.

use serde_json::json;
use sln_workbench::partition_comb::{kostka, lis_count, spaltenstein_dim, Partition};

use crate::config::{OutputFormat, Settings};
use crate::{report, Failure};

struct Row {
    m: usize,
    n: usize,
    kostka: u64,
    lis: u64,
    dim: i64,
}

fn weight(m: usize, n: usize) -> Partition {
    let thick = (n as u64).saturating_sub(1);
    Partition::new(
        std::iter::repeat(1)
            .take(m)
            .chain(std::iter::repeat(thick).take(m)),
    )
}

pub fn run(m_arg: Option<usize>, n_arg: Option<usize>, settings: &Settings) -> Result<(), Failure> {
    let max_m = settings.m(m_arg, 5);
    let max_n = settings.n(n_arg, 4);
    if max_m < 1 {
        return Err(Failure::Usage("--m must be at least 1".into()));
    }
    if max_n < 2 {
        return Err(Failure::Usage("--n must be at least 2".into()));
    }

    let mut rows = Vec::new();
    for m in 1..=max_m {
        for n in 2..=max_n {
            let shape = Partition::rectangle(m, n as u64);
            let w = weight(m, n);
            let k = kostka(&shape, &w).map_err(|e| Failure::Usage(e.to_string()))?;
            let l = lis_count(m, n).map_err(|e| Failure::Usage(e.to_string()))?;
            let dim = spaltenstein_dim(&shape, &w).map_err(|e| Failure::Usage(e.to_string()))?;
            rows.push(Row { m, n, kostka: k, lis: l, dim });
        }
    }

    let output = match settings.format()? {
        OutputFormat::Text | OutputFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.write_record(["m", "n", "kostka", "lis", "equal", "dim"])
                .map_err(csv_failure)?;
            for r in &rows {
                wtr.write_record([
                    r.m.to_string(),
                    r.n.to_string(),
                    r.kostka.to_string(),
                    r.lis.to_string(),
                    (r.kostka == r.lis).to_string(),
                    r.dim.to_string(),
                ])
                .map_err(csv_failure)?;
            }
            let bytes = wtr.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
            String::from_utf8(bytes).expect("CSV output is UTF-8")
        }
        OutputFormat::Json => {
            let value = json!(rows
                .iter()
                .map(|r| json!({
                    "m": r.m,
                    "n": r.n,
                    "kostka": r.kostka,
                    "lis": r.lis,
                    "equal": r.kostka == r.lis,
                    "dim": r.dim,
                }))
                .collect::<Vec<_>>());
            report::render(&value)
        }
    };

    print!("{output}");
    if let Some(dir) = settings.out_dir() {
        let name = match settings.format()? {
            OutputFormat::Json => "tables.json",
            _ => "tables.csv",
        };
        report::write_file(&dir, name, &output)?;
    }

    if rows.iter().any(|r| r.kostka != r.lis) {
        return Err(Failure::Check(
            "kostka and bounded-subsequence counts disagree".into(),
        ));
    }
    Ok(())
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure::Usage(e.to_string())
}
