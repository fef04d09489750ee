use std::io::Write;

use normed_forms_core::classify::{SearchBounds, DEFAULT_BOX_BOUND};
use normed_forms_core::forms::{reduced_forms, reduced_indefinite_forms};
use normed_forms_core::{BigInt, Form};
use rayon::prelude::*;

use crate::cli::{CatalogArgs, CatalogFormat};
use crate::commands::{classification_record, probe_record};
use crate::error::{CliError, Status};
use crate::records::{CatalogRow, OutputRecord};
use crate::THREADS_ENV;

/// Reduced primitive forms for every discriminant in `dmin..=dmax`, in
/// increasing discriminant and then `(m, k, n)` order.
pub fn catalog_forms(dmin: i64, dmax: i64) -> Vec<Form> {
    (dmin..=dmax)
        .flat_map(|d| {
            let d = BigInt::from(d);
            if d < BigInt::from(0) {
                reduced_forms(&d)
            } else {
                reduced_indefinite_forms(&d)
            }
        })
        .collect()
}

pub fn catalog_record(f: &Form, bounds: &SearchBounds, sample_bound: &BigInt) -> Result<OutputRecord, CliError> {
    let mut rec = classification_record(f, bounds)?;
    rec.command = "catalog".to_string();
    rec.semigroup = probe_record(f, sample_bound, &bounds.box_bound)?.semigroup;
    Ok(rec)
}

/// Worker count from the environment, if set.
pub fn thread_count() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Input(format!("{THREADS_ENV}: {e}"))),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Input(format!("{THREADS_ENV} must be a positive integer, got {s:?}"))),
        },
    }
}

pub fn catalog_records(a: &CatalogArgs) -> Result<Vec<OutputRecord>, CliError> {
    if a.dmax > 0 && a.box_bound.is_none() {
        return Err(CliError::Input("positive discriminants need an explicit --box".into()));
    }
    let bounds = SearchBounds::new(a.box_bound.clone().unwrap_or_else(|| BigInt::from(DEFAULT_BOX_BOUND)));
    let forms = catalog_forms(a.dmin, a.dmax);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_count()? {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| CliError::Input(e.to_string()))?;
    // collect() on an indexed parallel iterator keeps input order
    pool.install(|| {
        forms
            .par_iter()
            .map(|f| catalog_record(f, &bounds, &a.sample_bound))
            .collect()
    })
}

pub fn render(records: &[OutputRecord], format: CatalogFormat) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    match format {
        CatalogFormat::Jsonl => {
            for r in records {
                writeln!(buf, "{}", r.to_json_line())?;
            }
        }
        CatalogFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut buf);
            for r in records {
                w.serialize(CatalogRow::from_record(r).expect("catalog records are complete"))?;
            }
            w.flush()?;
        }
    }
    Ok(buf)
}

pub fn catalog(a: &CatalogArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let bytes = render(&catalog_records(a)?, a.format)?;
    match &a.out {
        Some(path) => std::fs::write(path, bytes)?,
        None => out.write_all(&bytes)?,
    }
    Ok(Status::Ok)
}
