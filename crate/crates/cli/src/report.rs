//! CSV report rendering: '.' decimal, 17 significant digits, LF endings,
//! fixed column order. Bytes are a pure function of the report contents.

use std::fmt::Write as _;

use crate::bounds_cli::BoundRow;
use crate::formats::fmt_f64;
use crate::harness::{ExperimentReport, PhaseRow};

pub const EXPERIMENT_COLUMNS: &str = "theta,Theta,n,d,trials,type1_rate,type1_ci_low,type1_ci_high,type2_rate,type2_ci_low,type2_ci_high,condition_holds,condition_name";

pub fn experiment_csv(report: &ExperimentReport) -> String {
    let mut out = String::from(EXPERIMENT_COLUMNS);
    out.push('\n');
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},\"{}\"",
            fmt_f64(row.theta),
            fmt_f64(row.big_theta),
            row.n,
            row.d,
            row.type1.trials,
            fmt_f64(row.type1.rate),
            fmt_f64(row.type1.ci_low),
            fmt_f64(row.type1.ci_high),
            fmt_f64(row.type2.rate),
            fmt_f64(row.type2.ci_low),
            fmt_f64(row.type2.ci_high),
            u8::from(row.condition_holds),
            row.condition_name,
        );
    }
    out
}

pub const PHASE_COLUMNS: &str =
    "theta,type1,type2,error_sum,condition_holds,lb_impossible,ub_impossible";

pub fn phase_csv(rows: &[PhaseRow]) -> String {
    let mut out = String::from(PHASE_COLUMNS);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_f64(r.theta),
            fmt_f64(r.type1),
            fmt_f64(r.type2),
            fmt_f64(r.error_sum),
            u8::from(r.condition_holds),
            u8::from(r.lb_impossible),
            u8::from(r.ub_impossible),
        );
    }
    out
}

pub const BOUNDS_COLUMNS: &str = "bound_name,lhs,rhs,holds,applicable";

pub fn bounds_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from(BOUNDS_COLUMNS);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.bound_name,
            fmt_f64(r.lhs),
            fmt_f64(r.rhs),
            u8::from(r.holds),
            u8::from(r.applicable),
        );
    }
    out
}

/// One oracle-suite check outcome.
#[derive(Clone, Debug)]
pub struct OracleRow {
    pub suite: String,
    pub check: String,
    /// Worst-case margin; negative or zero passes for dominance-style
    /// checks, interpretation is per check.
    pub margin: f64,
    pub pass: bool,
}

pub const ORACLE_COLUMNS: &str = "suite,check,worst_margin,pass";

pub fn oracle_csv(rows: &[OracleRow]) -> String {
    let mut out = String::from(ORACLE_COLUMNS);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.suite, r.check, fmt_f64(r.margin), u8::from(r.pass));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_is_17_significant_digits() {
        assert_eq!(fmt_f64(0.05), "5.0000000000000003e-2");
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
        // round-trips exactly
        let x = 0.1f64 + 0.2;
        let parsed: f64 = fmt_f64(x).parse().unwrap();
        assert_eq!(parsed, x);
    }

    #[test]
    fn csv_uses_lf_only() {
        let rows = vec![OracleRow {
            suite: "a".into(),
            check: "b".into(),
            margin: 0.5,
            pass: true,
        }];
        let csv = oracle_csv(&rows);
        assert!(!csv.contains('\r'));
        assert_eq!(csv.lines().count(), 2);
    }
}
