//! Text, CSV, JSON and ASCII Gantt output.

use std::fmt::Write as _;

use serde::Serialize;

use crate::report::RunReport;

pub const CSV_HEADER: [&str; 5] = ["policy", "mode", "makespan", "vm_id", "utilization"];

pub fn fmt_table(headings: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headings.iter().map(|h| h.chars().count() + 1).collect();
    for row in rows {
        assert_eq!(row.len(), headings.len());
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count() + 1);
        }
    }

    let mut out = String::new();
    append_row(&mut out, headings.iter().copied(), &widths);
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&rule.join("+-"));
    for row in rows {
        out.push('\n');
        append_row(&mut out, row.iter().map(String::as_str), &widths);
    }
    out.push('\n');
    out
}

fn append_row<'a>(out: &mut String, cells: impl Iterator<Item = &'a str>, widths: &[usize]) {
    let cells: Vec<String> = cells
        .zip(widths)
        .map(|(cell, w)| format!("{cell:w$}"))
        .collect();
    out.push_str(cells.join("| ").trim_end());
}

pub fn run_table(report: &RunReport) -> String {
    let mut out = format!(
        "policy {}  mode {}  tie-break {}  makespan {}\n\n",
        report.policy, report.mode, report.tie_break, report.makespan
    );
    let rows: Vec<Vec<String>> = report
        .cloudlets
        .iter()
        .map(|c| {
            vec![
                format!("C{}", c.cloudlet_id),
                format!("VM{}", c.vm_id),
                c.start.to_string(),
                c.finish.to_string(),
            ]
        })
        .collect();
    out.push_str(&fmt_table(&["cloudlet", "vm", "start", "finish"], &rows));
    out.push('\n');

    let rows: Vec<Vec<String>> = report
        .vms
        .iter()
        .map(|v| {
            vec![
                format!("VM{}", v.vm_id),
                v.busy_time.to_string(),
                v.utilization.to_string(),
            ]
        })
        .collect();
    out.push_str(&fmt_table(&["vm", "busy", "utilization"], &rows));

    if !report.decisions.is_empty() {
        out.push('\n');
        let rows: Vec<Vec<String>> = report
            .decisions
            .iter()
            .map(|d| {
                vec![
                    d.step.to_string(),
                    d.case.clone(),
                    format!("C{} -> VM{}", d.cloudlet_id, d.vm_id),
                    d.c_remaining.to_string(),
                    d.mean.to_string(),
                    d.sd.to_string(),
                    d.gap_location
                        .map_or_else(|| "-".to_string(), |l| l.to_string()),
                ]
            })
            .collect();
        out.push_str(&fmt_table(
            &["step", "case", "binding", "remaining", "mean", "sd", "gap"],
            &rows,
        ));
    }
    out
}

pub fn comparison_table(reports: &[RunReport]) -> String {
    let vm_count = reports.first().map_or(0, |r| r.vms.len());
    let util_headers: Vec<String> = (0..vm_count).map(|j| format!("util VM{j}")).collect();
    let mut headings = vec!["policy", "mode", "makespan"];
    headings.extend(util_headers.iter().map(String::as_str));
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let mut row = vec![r.policy.clone(), r.mode.clone(), r.makespan.to_string()];
            row.extend(r.vms.iter().map(|v| v.utilization.to_string()));
            row
        })
        .collect();
    fmt_table(&headings, &rows)
}

/// One row per (report, VM).
pub fn reports_csv(reports: &[RunReport]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for r in reports {
        for v in &r.vms {
            writer
                .write_record([
                    r.policy.clone(),
                    r.mode.clone(),
                    r.makespan.to_string(),
                    v.vm_id.to_string(),
                    v.utilization.to_string(),
                ])
                .expect("in-memory write");
        }
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports always serialize");
    text.push('\n');
    text
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GanttBar {
    pub cloudlet_id: usize,
    /// Half-open column range.
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GanttRow {
    pub label: String,
    pub bars: Vec<GanttBar>,
}

fn column(t: f64, makespan: f64, width: usize) -> usize {
    if makespan <= 0.0 {
        return 0;
    }
    ((t / makespan) * width as f64)
        .round()
        .clamp(0.0, width as f64) as usize
}

/// Space-shared reports get one row per VM; time-shared ones one row per cloudlet, since
/// everything on a VM runs concurrently.
pub fn gantt_rows(report: &RunReport, width: usize) -> Vec<GanttRow> {
    let bar = |c: &crate::report::CloudletTiming| GanttBar {
        cloudlet_id: c.cloudlet_id,
        from: column(c.start, report.makespan, width),
        to: column(c.finish, report.makespan, width),
    };
    let mut rows = Vec::new();
    for vm in &report.vms {
        let on_vm = report.cloudlets.iter().filter(|c| c.vm_id == vm.vm_id);
        if report.mode == "time" {
            for c in on_vm {
                rows.push(GanttRow {
                    label: format!("VM{} C{}", vm.vm_id, c.cloudlet_id),
                    bars: vec![bar(c)],
                });
            }
        } else {
            rows.push(GanttRow {
                label: format!("VM{}", vm.vm_id),
                bars: on_vm.map(bar).collect(),
            });
        }
    }
    rows
}

fn glyph(cloudlet_id: usize) -> char {
    const GLYPHS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    GLYPHS.get(cloudlet_id).map_or('#', |&b| b as char)
}

pub fn gantt(report: &RunReport, width: usize) -> String {
    let rows = gantt_rows(report, width);
    let label_width = rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
    let mut out = String::new();
    for row in &rows {
        let mut line = vec![' '; width];
        for bar in &row.bars {
            for cell in &mut line[bar.from..bar.to] {
                *cell = glyph(bar.cloudlet_id);
            }
        }
        let line: String = line.into_iter().collect();
        let _ = writeln!(out, "{:label_width$} |{line}|", row.label);
    }
    let _ = writeln!(
        out,
        "{:label_width$} 0{:>w$}",
        "",
        report.makespan,
        w = width + 1
    );
    out
}
