use std::io::Write;

use airylog_core::{
    accelerate, build_constants, coefficient_table, fit_tail, integrate_i, AiryEvalConfig,
    SigmaSet, TailCoefficients, TailSource,
};

use crate::config::{Command, OutputFormat, RunConfig};
use crate::error::AppError;
use crate::output::*;
use crate::verify;

/// Executes one command, writing its artifact to `out`.
pub fn run<W: Write>(cfg: &RunConfig, mut out: W) -> Result<(), AppError> {
    cfg.validate()?;
    let constants = build_constants();
    let airy = AiryEvalConfig::default();
    let fmt = cfg.output_format;

    match cfg.command {
        Command::Oracle => {
            let r = integrate_i(&airy, cfg.tol)?;
            match fmt {
                OutputFormat::Json => write_json(out, &r),
                OutputFormat::Csv => write_csv(
                    out,
                    &ORACLE_HEADER,
                    &[vec![
                        fmt_real(r.value),
                        fmt_real(r.abs_error_estimate),
                        r.n_evaluations.to_string(),
                        fmt_real(r.truncation_point),
                    ]],
                ),
                OutputFormat::Text => {
                    writeln!(out, "I                  = {:.15}", r.value)?;
                    writeln!(out, "abs_error_estimate = {:.3e}", r.abs_error_estimate)?;
                    writeln!(out, "n_evaluations      = {}", r.n_evaluations)?;
                    writeln!(out, "truncation_point   = {}", r.truncation_point)?;
                    Ok(())
                }
            }
        }
        Command::Coeffs => {
            let t = coefficient_table(cfg.k_max, &constants)?;
            match fmt {
                OutputFormat::Json => write_json(out, &t),
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = t
                        .rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.k.to_string(),
                                fmt_real(r.a_k_bell),
                                fmt_real(r.a_k_reversion),
                                fmt_real(r.rel_gap),
                                fmt_real(r.s_k),
                                fmt_real(r.w_k),
                                fmt_real(r.i_k),
                                fmt_real(r.partial_sum),
                            ]
                        })
                        .collect();
                    write_csv(out, &COEFFS_HEADER, &rows)
                }
                OutputFormat::Text => {
                    writeln!(
                        out,
                        "{:>3} {:>22} {:>22} {:>9} {:>20} {:>20} {:>20} {:>20}",
                        "k", "a_k (Bell)", "a_k (reversion)", "rel gap", "S_k", "w_k", "I_k", "partial sum"
                    )?;
                    for r in &t.rows {
                        writeln!(
                            out,
                            "{:>3} {:>22.15e} {:>22.15e} {:>9.1e} {:>20.15} {:>20.15} {:>20.15} {:>20.15}",
                            r.k, r.a_k_bell, r.a_k_reversion, r.rel_gap, r.s_k, r.w_k, r.i_k, r.partial_sum
                        )?;
                    }
                    Ok(())
                }
            }
        }
        Command::Series => {
            let t = coefficient_table(cfg.k_max, &constants)?;
            let oracle = integrate_i(&airy, cfg.tol)?.value;
            let rows: Vec<SeriesRow> = t
                .rows
                .iter()
                .map(|r| SeriesRow { k: r.k, i_k: r.i_k, partial_sum: r.partial_sum, ratio_to_oracle: r.partial_sum / oracle })
                .collect();
            let head_sum = rows[cfg.k_head - 1].partial_sum;
            let report = SeriesReport { i_oracle: oracle, k_head: cfg.k_head, head_sum, head_ratio: head_sum / oracle, rows };
            match fmt {
                OutputFormat::Json => write_json(out, &report),
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = report
                        .rows
                        .iter()
                        .map(|r| vec![r.k.to_string(), fmt_real(r.i_k), fmt_real(r.partial_sum), fmt_real(r.ratio_to_oracle)])
                        .collect();
                    write_csv(out, &SERIES_HEADER, &rows)
                }
                OutputFormat::Text => {
                    writeln!(out, "{:>3} {:>20} {:>20} {:>10}", "k", "I_k", "partial sum", "ratio")?;
                    for r in &report.rows {
                        writeln!(out, "{:>3} {:>20.15} {:>20.15} {:>10.6}", r.k, r.i_k, r.partial_sum, r.ratio_to_oracle)?;
                    }
                    writeln!(out, "oracle I = {:.12}", report.i_oracle)?;
                    writeln!(
                        out,
                        "partial sum over k ≤ {} is {:.2}% of the oracle value",
                        report.k_head,
                        100.0 * report.head_ratio
                    )?;
                    Ok(())
                }
            }
        }
        Command::Sigmas => {
            let report = SigmasReport::new(SigmaSet::compute(&constants)?);
            let s = &report.sigmas;
            let entries = [
                ("sigma1", s.sigma1_closed, s.sigma1_direct, if report.sigma1_agrees { "pass" } else { "fail" }),
                ("sigma2", s.sigma2_closed, s.sigma2_direct, if report.sigma2_printed_flagged { "flagged" } else { "unexpected-agreement" }),
                ("sigma2_corrected", s.sigma2_corrected, s.sigma2_direct, if report.sigma2_corrected_agrees { "pass" } else { "fail" }),
                ("sigma3", s.sigma3_closed, s.sigma3_direct, if report.sigma3_agrees { "pass" } else { "fail" }),
            ];
            match fmt {
                OutputFormat::Json => write_json(out, &report),
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = entries
                        .iter()
                        .map(|(n, c, d, st)| vec![n.to_string(), fmt_real(*c), fmt_real(*d), fmt_real((c - d).abs()), st.to_string()])
                        .collect();
                    write_csv(out, &SIGMAS_HEADER, &rows)
                }
                OutputFormat::Text => {
                    writeln!(out, "{:<17} {:>20} {:>20} {:>10}  status", "sum", "closed form", "direct sum", "|gap|")?;
                    for (n, c, d, st) in entries {
                        writeln!(out, "{n:<17} {c:>20.15} {d:>20.15} {:>10.1e}  {st}", (c - d).abs())?;
                    }
                    writeln!(out, "direct sums are authoritative; sigma2_corrected uses 11/64 ζ(3)")?;
                    Ok(())
                }
            }
        }
        Command::Fit => {
            let t = coefficient_table(cfg.k_max, &constants)?;
            let fit = fit_tail(&t, cfg.fit_lo, cfg.fit_hi)?;
            let model = fit.coefficients();
            let rows: Vec<FitRow> =
                t.rows.iter().map(|r| FitRow { k: r.k, s_k: r.s_k, model: model.model(r.k as f64) }).collect();
            let report = FitReport { fit, published: TailCoefficients::PUBLISHED, rows };
            match fmt {
                OutputFormat::Json => write_json(out, &report),
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> =
                        report.rows.iter().map(|r| vec![r.k.to_string(), fmt_real(r.s_k), fmt_real(r.model)]).collect();
                    write_csv(out, &FIT_HEADER, &rows)
                }
                OutputFormat::Text => {
                    let p = TailCoefficients::PUBLISHED;
                    writeln!(out, "fit of S_k ≈ a/k + b/k² + c/k³ over k ∈ [{}, {}]", fit.k_lo, fit.k_hi)?;
                    writeln!(out, "            {:>16} {:>16}", "fitted", "published")?;
                    writeln!(out, "a           {:>16.9} {:>16.9}", fit.a, p.a)?;
                    writeln!(out, "b           {:>16.8} {:>16.8}", fit.b, p.b)?;
                    writeln!(out, "c           {:>16.9} {:>16.9}", fit.c, p.c)?;
                    writeln!(out, "max relative residual {:.3e}", fit.max_rel_residual)?;
                    Ok(())
                }
            }
        }
        Command::Accelerate => {
            let t = coefficient_table(cfg.k_max, &constants)?;
            let sigmas = SigmaSet::compute(&constants)?;
            let oracle = integrate_i(&airy, cfg.tol)?.value;
            let source = if cfg.use_published_fit { TailSource::Published } else { TailSource::Fitted };
            let r = accelerate(&t, &sigmas, oracle, cfg.k_head, (cfg.fit_lo, cfg.fit_hi), source)?;
            match fmt {
                OutputFormat::Json => write_json(out, &r),
                OutputFormat::Csv => write_csv(
                    out,
                    &ACCELERATE_HEADER,
                    &[vec![
                        r.k_head.to_string(),
                        r.fit_lo.to_string(),
                        r.fit_hi.to_string(),
                        fmt_real(r.a),
                        fmt_real(r.b),
                        fmt_real(r.c),
                        fmt_real(r.fitted.a),
                        fmt_real(r.fitted.b),
                        fmt_real(r.fitted.c),
                        fmt_real(r.fitted.max_rel_residual),
                        r.used_published_fit.to_string(),
                        fmt_real(r.head_sum),
                        fmt_real(r.remainder_bracket),
                        fmt_real(r.remainder),
                        fmt_real(r.i_accelerated),
                        fmt_real(r.i_oracle),
                        fmt_real(r.rel_error_vs_oracle),
                    ]],
                ),
                OutputFormat::Text => {
                    let src = if r.used_published_fit { "published" } else { "fitted" };
                    writeln!(out, "head sum (k ≤ {})      = {:.12}", r.k_head, r.head_sum)?;
                    writeln!(out, "tail ({src}, fit k ∈ [{}, {}]): a = {:.9}, b = {:.8}, c = {:.9}", r.fit_lo, r.fit_hi, r.a, r.b, r.c)?;
                    writeln!(out, "remainder bracket       = {:.12}", r.remainder_bracket)?;
                    writeln!(out, "remainder (× 8/3^(1/3)) = {:.12}", r.remainder)?;
                    writeln!(out, "accelerated I           = {:.12}", r.i_accelerated)?;
                    writeln!(out, "oracle I                = {:.12}", r.i_oracle)?;
                    writeln!(out, "relative error          = {:.3e}", r.rel_error_vs_oracle)?;
                    Ok(())
                }
            }
        }
        Command::Verify => {
            let report = verify::run_all()?;
            match fmt {
                OutputFormat::Json => write_json(&mut out, &report)?,
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = report
                        .checks
                        .iter()
                        .map(|c| vec![c.id.clone(), c.status().to_string(), c.description.clone(), c.detail.clone()])
                        .collect();
                    write_csv(&mut out, &VERIFY_HEADER, &rows)?;
                }
                OutputFormat::Text => {
                    for c in &report.checks {
                        writeln!(out, "{}", c.line())?;
                    }
                    writeln!(out, "{} passed, {} failed", report.passed, report.failed)?;
                }
            }
            if report.failed > 0 {
                return Err(AppError::VerifyFailed(report.failed, report.checks.len()));
            }
            Ok(())
        }
    }
}
