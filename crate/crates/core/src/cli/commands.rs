use std::fs;
use std::io::Write;
use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use super::cache::{cache_dir, load_or_build_lattice};
use super::{Cli, CliError, Command, ConfigArgs, ExcludeArgs, Format, FpdimArgs, OliverArgs};
use crate::chartab::CharacterTable;
use crate::exclusion::{exclude, scan, verify_report, ExclusionContext, ExclusionReport, Query};
use crate::fixtures;
use crate::group::{format_group_file, parse_group_file, FiniteGroup};
use crate::lattice::SubgroupLattice;
use crate::oliver::{oliver_verdict, verify_witness, OliverVerdict};

type Out<'a> = &'a mut dyn Write;

/// Inputs resolved from the shared options, built lazily per command.
struct Session<'a> {
    config: &'a ConfigArgs,
    group: Arc<FiniteGroup>,
}

impl<'a> Session<'a> {
    fn open(config: &'a ConfigArgs) -> Result<Self, CliError> {
        let text = match config.group.as_str() {
            "sl25c2" => fixtures::SL25C2_GROUP.to_string(),
            "s5" => {
                let s5 = fixtures::s5();
                format_group_file(s5.degree(), s5.generators())
            }
            path => fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read group file {path}: {e}")))?,
        };
        let (_, gens) = parse_group_file(&text)?;
        let group = FiniteGroup::generate(&gens, config.max_order)?;
        Ok(Session {
            config,
            group: Arc::new(group),
        })
    }

    fn table(&self) -> Result<Arc<CharacterTable>, CliError> {
        let text = match (&self.config.chartab, self.config.group.as_str()) {
            (Some(path), _) => fs::read_to_string(path).map_err(|e| {
                CliError::Usage(format!(
                    "cannot read character table {}: {e}",
                    path.display()
                ))
            })?,
            (None, "sl25c2") => fixtures::SL25C2_CHARTAB.to_string(),
            (None, _) => {
                return Err(CliError::Usage(
                    "this command needs a character table; pass --chartab FILE".into(),
                ))
            }
        };
        Ok(Arc::new(CharacterTable::load(
            Arc::clone(&self.group),
            &text,
        )?))
    }

    fn lattice(&self) -> Result<Arc<SubgroupLattice>, CliError> {
        let dir = if self.config.no_cache {
            None
        } else {
            cache_dir()
        };
        let cap = self.config.max_order;
        Ok(Arc::new(load_or_build_lattice(
            Arc::clone(&self.group),
            cap,
            dir.as_deref(),
        )?))
    }

    fn json(&self) -> bool {
        self.config.format == Format::Json
    }
}

pub(super) fn dispatch(cli: &Cli, out: Out) -> Result<(), CliError> {
    let session = Session::open(&cli.config)?;
    match &cli.command {
        Command::Classes => cmd_classes(&session, out),
        Command::Chartab => cmd_chartab(&session, out),
        Command::Lattice => cmd_lattice(&session, out),
        Command::Fpdim(args) => cmd_fpdim(&session, args, out),
        Command::Oliver(args) => cmd_oliver(&session, args, out),
        Command::Exclude(args) => cmd_exclude(&session, args, out),
    }
}

fn write_json(out: Out, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("output serializes");
    writeln!(out, "{text}")?;
    Ok(())
}

/// Writes rows as space-separated columns, each padded to its widest cell.
fn write_columns(out: Out, rows: &[Vec<String>]) -> Result<(), CliError> {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.get(i))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s:>w$}", w = widths[i]))
            .collect();
        writeln!(out, "{}", cells.join("  ").trim_end())?;
    }
    Ok(())
}

fn cmd_classes(session: &Session, out: Out) -> Result<(), CliError> {
    let group = &session.group;
    let classes = &group.classes().classes;
    let labels: Vec<String> = match session.table() {
        Ok(t) => t.class_labels().to_vec(),
        Err(_) => classes.iter().map(|c| c.label.clone()).collect(),
    };
    if session.json() {
        let rows: Vec<_> = classes
            .iter()
            .zip(&labels)
            .map(|(c, l)| {
                json!({
                    "label": l,
                    "size": c.size(),
                    "order": c.order_of_rep,
                    "representative": group.element(c.representative).to_string(),
                })
            })
            .collect();
        return write_json(
            out,
            &json!({ "group_order": group.order(), "classes": rows }),
        );
    }
    let mut rows = vec![vec!["class".to_string(), "size".into(), "order".into()]];
    for (c, l) in classes.iter().zip(&labels) {
        rows.push(vec![
            l.clone(),
            c.size().to_string(),
            c.order_of_rep.to_string(),
        ]);
    }
    write_columns(out, &rows)
}

fn indicator_mark(i: i8) -> &'static str {
    match i {
        1 => "+",
        -1 => "-",
        _ => "o",
    }
}

fn cmd_chartab(session: &Session, out: Out) -> Result<(), CliError> {
    let table = session.table()?;
    let labels = table.class_labels();
    let values = |c: &crate::chartab::Character| -> Vec<String> {
        c.values().iter().map(ToString::to_string).collect()
    };
    if session.json() {
        let complex: Vec<_> = table
            .complex()
            .iter()
            .zip(table.indicators())
            .map(|(c, &i)| json!({ "name": c.name(), "indicator": i, "values": values(c) }))
            .collect();
        let real: Vec<_> = table
            .real()
            .iter()
            .map(|c| json!({ "name": c.name(), "values": values(c) }))
            .collect();
        return write_json(
            out,
            &json!({ "group": table.name(), "classes": labels, "complex": complex, "real": real }),
        );
    }
    let header = |first: &str, second: Option<&str>| {
        let mut row = vec![first.to_string()];
        row.extend(second.map(str::to_string));
        row.extend(labels.iter().cloned());
        row
    };
    writeln!(out, "complex characters of {}", table.name())?;
    let mut rows = vec![header("", Some("fs"))];
    for (c, &i) in table.complex().iter().zip(table.indicators()) {
        let mut row = vec![c.name().to_string(), indicator_mark(i).to_string()];
        row.extend(values(c));
        rows.push(row);
    }
    write_columns(out, &rows)?;
    writeln!(out)?;
    writeln!(out, "real irreducible characters")?;
    let mut rows = vec![header("", None)];
    for c in table.real() {
        let mut row = vec![c.name().to_string()];
        row.extend(values(c));
        rows.push(row);
    }
    write_columns(out, &rows)
}

fn cmd_lattice(session: &Session, out: Out) -> Result<(), CliError> {
    let lattice = session.lattice()?;
    if session.json() {
        return write_json(out, &lattice.export());
    }
    write!(out, "{}", lattice.to_text())?;
    Ok(())
}

fn class_by_label(lattice: &SubgroupLattice, label: &str) -> Result<usize, CliError> {
    if label == "trivial" {
        return Ok(lattice.trivial_class());
    }
    lattice
        .by_label(label)
        .ok_or_else(|| CliError::Usage(format!("unknown subgroup class {label:?}")))
}

fn cmd_fpdim(session: &Session, args: &FpdimArgs, out: Out) -> Result<(), CliError> {
    let table = session.table()?;
    let lattice = session.lattice()?;
    if args.all {
        let labels: Vec<&str> = lattice.classes().iter().map(|c| c.label.as_str()).collect();
        let mut matrix = Vec::new();
        for chi in table.real() {
            let row = lattice
                .classes()
                .iter()
                .map(|c| table.fp_dim(chi, &c.representative))
                .collect::<Result<Vec<u64>, _>>()?;
            matrix.push((chi.name(), row));
        }
        if session.json() {
            let rows: Vec<_> = matrix
                .iter()
                .map(|(name, row)| json!({ "module": name, "values": row }))
                .collect();
            return write_json(out, &json!({ "classes": labels, "rows": rows }));
        }
        let mut rows = vec![std::iter::once(String::new())
            .chain(labels.iter().map(|l| l.to_string()))
            .collect::<Vec<_>>()];
        for (name, row) in &matrix {
            rows.push(
                std::iter::once(name.to_string())
                    .chain(row.iter().map(u64::to_string))
                    .collect(),
            );
        }
        return write_columns(out, &rows);
    }
    let (Some(module), Some(class)) = (&args.module, &args.class) else {
        return Err(CliError::Usage(
            "--module and --class are required without --all".into(),
        ));
    };
    let v = table
        .parse_module(module)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let c = class_by_label(&lattice, class)?;
    let dim = table.module_fp_dim(&v, &lattice.class(c).representative)?;
    if session.json() {
        return write_json(
            out,
            &json!({ "module": module, "class": lattice.class(c).label, "fp_dim": dim }),
        );
    }
    writeln!(out, "{dim}")?;
    Ok(())
}

/// `Oliver`, `non-Oliver, witness P=H=X` or `non-Oliver, witness P=X, H=Y`.
fn oliver_line(lattice: &SubgroupLattice, verdict: &OliverVerdict) -> String {
    match &verdict.witness {
        None => "Oliver".to_string(),
        Some(w) => {
            let label = |s| lattice.class(lattice.identify_class(s)).label.clone();
            if w.p == w.h {
                format!("non-Oliver, witness P=H={}", label(&w.h))
            } else {
                format!("non-Oliver, witness P={}, H={}", label(&w.p), label(&w.h))
            }
        }
    }
}

fn cmd_oliver(session: &Session, args: &OliverArgs, out: Out) -> Result<(), CliError> {
    let lattice = session.lattice()?;
    let classes: Vec<usize> = match &args.subgroup {
        Some(label) => vec![class_by_label(&lattice, label)?],
        None => (0..lattice.len()).collect(),
    };
    let mut results = Vec::new();
    for c in classes {
        let x = &lattice.class(c).representative;
        let verdict = oliver_verdict(&lattice, x);
        if let Some(w) = &verdict.witness {
            verify_witness(lattice.group(), x, w)?;
        }
        results.push((c, oliver_line(&lattice, &verdict), verdict));
    }
    if session.json() {
        let rows: Vec<_> = results
            .iter()
            .map(|(c, line, v)| {
                let label = |s| lattice.class(lattice.identify_class(s)).label.clone();
                json!({
                    "class": lattice.class(*c).label,
                    "oliver": v.is_oliver,
                    "p": v.witness.as_ref().map(|w| label(&w.p)),
                    "h": v.witness.as_ref().map(|w| label(&w.h)),
                    "verdict": line,
                })
            })
            .collect();
        return write_json(out, &rows);
    }
    if args.subgroup.is_some() {
        writeln!(out, "{}", results[0].1)?;
    } else {
        let rows: Vec<Vec<String>> = results
            .iter()
            .map(|(c, line, _)| vec![lattice.class(*c).label.clone(), line.clone()])
            .collect();
        for row in rows {
            writeln!(out, "{}: {}", row[0], row[1])?;
        }
    }
    Ok(())
}

fn cmd_exclude(session: &Session, args: &ExcludeArgs, out: Out) -> Result<(), CliError> {
    let table = session.table()?;
    let lattice = session.lattice()?;
    let ctx = ExclusionContext::new(Arc::clone(&table), lattice)?;
    let template = Query {
        dimension: args.dim.unwrap_or(0),
        mode: args.mode,
        scope: args.scope,
        effective: args.effective,
        pseudofree: args.pseudofree,
    };
    let check = |report: &ExclusionReport| -> Result<(), CliError> {
        verify_report(report, &table)?;
        Ok(())
    };

    if !args.scan {
        let report = exclude(&ctx, &template);
        if args.trace {
            check(&report)?;
        }
        let shown = if args.trace {
            report.clone()
        } else {
            report.without_trace()
        };
        if session.json() {
            writeln!(out, "{}", shown.to_json())?;
        } else {
            writeln!(out, "{report}")?;
            if args.trace {
                writeln!(out, "{}", shown.to_json())?;
            }
        }
        return Ok(());
    }

    let mut reports = Vec::new();
    let mut failure = None;
    let summary = scan(&ctx, &template, session.config.max_dim, |r| {
        if args.trace && failure.is_none() {
            failure = check(r).err();
        }
        reports.push(r.clone());
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if session.json() && !args.trace {
        writeln!(out, "{}", summary.to_json())?;
        return Ok(());
    }
    if session.json() {
        // JSON Lines: the summary, then one traced report per dimension
        writeln!(
            out,
            "{}",
            serde_json::to_string(&summary).expect("reports serialize")
        )?;
    } else {
        for r in &reports {
            writeln!(out, "{}: {r}", r.dimension)?;
        }
        let dims: Vec<String> = summary.admissible.iter().map(u64::to_string).collect();
        writeln!(
            out,
            "admissible: {}",
            if dims.is_empty() {
                "none".into()
            } else {
                dims.join(" ")
            }
        )?;
    }
    if args.trace {
        for r in &reports {
            writeln!(
                out,
                "{}",
                serde_json::to_string(r).expect("reports serialize")
            )?;
        }
    }
    Ok(())
}
