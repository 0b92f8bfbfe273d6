use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::catalog::catalog_small_groups;

use super::build::{construct_with, PipelineOptions};
use super::certificate::Certificate;

/// Largest `max_order` accepted by [`theorem_sweep`].
pub const MAX_SWEEP_ORDER: usize = 32;

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub group: String,
    pub order: usize,
    pub class: String,
    pub construction: String,
    pub graph_order: usize,
    pub aut_order: BigUint,
    pub valid: bool,
    pub elapsed: Duration,
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    /// In catalog order.
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    /// Tab-separated rows under a header; wall time only if `timings`.
    pub fn to_tsv(&self, timings: bool) -> String {
        let mut out =
            String::from("group\torder\tclass\tconstruction\tgraph-order\taut-order\tvalid");
        out.push_str(if timings { "\tms\n" } else { "\n" });
        for r in &self.rows {
            let _ = write!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.group, r.order, r.class, r.construction, r.graph_order, r.aut_order, r.valid
            );
            if timings {
                let _ = write!(out, "\t{}", r.elapsed.as_millis());
            }
            out.push('\n');
        }
        out
    }

    pub fn all_valid(&self) -> bool {
        self.rows.iter().all(|r| r.valid)
    }
}

fn in_group(e: Error, group: &str) -> Error {
    match e {
        Error::Resource { what, limit } => Error::Resource {
            what: format!("{group}: {what}"),
            limit,
        },
        Error::Precondition(m) => Error::Precondition(format!("{group}: {m}")),
        Error::Validation(m) => Error::Validation(format!("{group}: {m}")),
        Error::Parse { offset, message } => Error::Parse {
            offset,
            message: format!("{group}: {message}"),
        },
        Error::Inconclusive(m) => Error::Inconclusive(format!("{group}: {m}")),
        Error::Verification(m) => Error::Verification(format!("{group}: {m}")),
    }
}

/// Certifies every catalog group of order at most `max_order`. The first
/// failure in catalog order aborts the sweep.
pub fn theorem_sweep(max_order: usize, options: &PipelineOptions) -> Result<SweepReport> {
    if max_order > MAX_SWEEP_ORDER {
        return Err(Error::resource("sweep order", MAX_SWEEP_ORDER));
    }
    let entries = catalog_small_groups(max_order);
    let rows: Vec<Result<SweepRow>> = entries
        .par_iter()
        .map(|e| {
            let start = Instant::now();
            let w =
                construct_with(&e.name, &e.table, options).map_err(|err| in_group(err, &e.name))?;
            Ok(SweepRow {
                group: e.name.clone(),
                order: e.order(),
                class: w.class.to_string(),
                construction: w.certificate.construction.clone(),
                graph_order: w.graph.order(),
                aut_order: w.certificate.aut_order.clone(),
                valid: w.certificate.is_valid(),
                elapsed: start.elapsed(),
                certificate: w.certificate,
            })
        })
        .collect();
    Ok(SweepReport {
        rows: rows.into_iter().collect::<Result<_>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_sweeps() {
        let one = theorem_sweep(1, &PipelineOptions::default()).unwrap();
        assert_eq!(one.rows.len(), 1);
        assert_eq!(one.rows[0].graph_order, 2);
        let tsv = one.to_tsv(false);
        assert_eq!(tsv.lines().count(), 2);
        assert!(tsv
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("C1\t1\thas-grr\ttrivial-k2\t2\t2\ttrue"));
        assert!(one
            .to_tsv(true)
            .starts_with("group\torder\tclass\tconstruction\tgraph-order\taut-order\tvalid\tms\n"));
        assert!(theorem_sweep(33, &PipelineOptions::default()).is_err());
    }
}
