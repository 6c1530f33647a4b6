//! `sln poly`: evaluate the quantum sl(n) polynomial of a braid closure.

use serde_json::json;
use sln_workbench::braid_core::{format_braid, parse_braid};
use sln_workbench::skein_poly::sl_n_polynomial;

use crate::config::{OutputFormat, Settings};
use crate::{report, Failure};

pub fn run(word: &str, n_arg: Option<usize>, settings: &Settings) -> Result<(), Failure> {
    let braid = parse_braid(word)
        .map_err(|e| Failure::Usage(format!("cannot parse braid {word:?}: {e}")))?;
    let n = settings.n(n_arg, 2);
    if n == 0 {
        return Err(Failure::Usage("rank n must be at least 1".into()));
    }

    let poly = sl_n_polynomial(&braid, n);
    let eval = poly.eval_at_minus_one();

    let output = match settings.format()? {
        OutputFormat::Text => {
            format!("{poly}\nP(-1) = {eval}\n")
        }
        OutputFormat::Json => {
            let value = json!({
                "braid": format_braid(&braid),
                "eval_at_minus_one": eval.to_string(),
                "n": n,
                "polynomial": poly.to_json(),
                "rendered": poly.to_string(),
            });
            report::render(&value)
        }
        OutputFormat::Csv => {
            let mut out = String::from("exponent,coefficient\n");
            for (exponent, coeff) in poly.terms() {
                out.push_str(&format!("{exponent},{coeff}\n"));
            }
            out
        }
    };

    print!("{output}");
    if let Some(dir) = settings.out_dir() {
        let name = match settings.format()? {
            OutputFormat::Csv => "poly.csv",
            OutputFormat::Json => "poly.json",
            OutputFormat::Text => "poly.txt",
        };
        report::write_file(&dir, name, &output)?;
    }
    Ok(())
}
