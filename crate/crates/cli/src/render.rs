//! Text and CSV renderers for the model types.  Every function returns a
//! complete, newline-terminated string so a command's bytes depend only on
//! its exact results.

use crate::model::{
    ActionRow, ChevalleyElement, Conventions, IrrepReport, KernelReport, MulTable, RootInfo,
    StructureTable, VerifyReport,
};

/// Joins already-padded cells and strips the trailing pad of the last one.
fn grid_line(cells: impl IntoIterator<Item = String>) -> String {
    let mut line: String = cells.into_iter().collect();
    line.truncate(line.trim_end().len());
    line.push('\n');
    line
}

/// A coefficient applied to a symbol: `1` and `-1` collapse, compound
/// scalars are parenthesized.
fn scaled_symbol(value: &str, symbol: &str) -> String {
    if value == "1" {
        return symbol.to_string();
    }
    if value == "-1" {
        return format!("-{symbol}");
    }
    let compound = value.contains('+') || value[1..].contains('-');
    if compound {
        format!("({value}) {symbol}")
    } else {
        format!("{value} {symbol}")
    }
}

/// Joins signed terms with ` + ` / ` - `.
fn join_terms<'a>(terms: impl IntoIterator<Item = &'a str>) -> String {
    let mut out = String::new();
    for term in terms {
        if out.is_empty() {
            out.push_str(term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn csv_from_records<'a>(
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("write csv header");
    for row in rows {
        writer.write_record(&row).expect("write csv row");
    }
    let bytes = writer.into_inner().expect("finish csv buffer");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

pub fn multable_text(table: &MulTable) -> String {
    let width = 2 + table
        .products
        .iter()
        .flatten()
        .map(|p| table.symbol(p).len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let header = std::iter::once(" ".repeat(width))
        .chain(table.basis.iter().map(|b| format!("{b:<width$}")));
    out.push_str(&grid_line(header));
    for (symbol, row) in table.basis.iter().zip(&table.products) {
        let cells = std::iter::once(format!("{symbol:<width$}")).chain(
            row.iter()
                .map(|p| format!("{:<width$}", table.symbol(p))),
        );
        out.push_str(&grid_line(cells));
    }
    out
}

pub fn multable_csv(table: &MulTable) -> String {
    let rows = table.basis.iter().zip(&table.products).flat_map(|(left, row)| {
        table.basis.iter().zip(row).map(|(right, product)| {
            vec![
                left.clone(),
                right.clone(),
                product.sign.to_string(),
                product.index.to_string(),
                table.symbol(product),
            ]
        })
    });
    csv_from_records(&["left", "right", "sign", "index", "product"], rows)
}

pub fn roots_text(roots: &[RootInfo]) -> String {
    let mut out = String::new();
    let header = ["label", "kind", "twist", "neg", "(m, n)", "(p, q)", "norm2"];
    let widths = [10, 7, 7, 5, 10, 10, 5];
    out.push_str(&grid_line(
        header
            .iter()
            .zip(widths)
            .map(|(h, w)| format!("{h:<w$}")),
    ));
    for r in roots {
        let cells = [
            r.label.clone(),
            r.kind.clone(),
            r.twist.to_string(),
            if r.negative { "yes".to_string() } else { "no".to_string() },
            format!("({}, {})", r.m, r.n),
            format!("({}, {})", r.p, r.q),
            r.norm2.to_string(),
        ];
        out.push_str(&grid_line(
            cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}")),
        ));
    }
    out
}

pub fn roots_csv(roots: &[RootInfo]) -> String {
    let rows = roots.iter().map(|r| {
        vec![
            r.label.clone(),
            r.m.to_string(),
            r.n.to_string(),
            r.kind.clone(),
            r.twist.to_string(),
            r.negative.to_string(),
            r.p.to_string(),
            r.q.to_string(),
            r.norm2.to_string(),
        ]
    });
    csv_from_records(
        &["label", "m", "n", "kind", "twist", "negative", "p", "q", "norm2"],
        rows,
    )
}

pub fn chevalley_text(elements: &[ChevalleyElement]) -> String {
    let mut out = String::new();
    for element in elements {
        let terms: Vec<String> = element
            .combination
            .iter()
            .map(|t| scaled_symbol(&t.display, &t.pair))
            .collect();
        out.push_str(&format!(
            "{:>2}  {:<12} = {}\n",
            element.index,
            element.label,
            join_terms(terms.iter().map(String::as_str)),
        ));
        if let Some(matrix) = &element.matrix {
            let width = matrix
                .iter()
                .flatten()
                .map(|e| e.display.len())
                .max()
                .unwrap_or(1);
            for row in matrix {
                let rendered: Vec<String> = row
                    .iter()
                    .map(|e| format!("{:>width$}", e.display))
                    .collect();
                out.push_str(&format!("      [ {} ]\n", rendered.join("  ")));
            }
        }
    }
    out
}

pub fn chevalley_csv(elements: &[ChevalleyElement], with_matrices: bool) -> String {
    if with_matrices {
        let rows = elements.iter().flat_map(|element| {
            let matrix = element.matrix.as_ref().expect("matrices were requested");
            matrix.iter().enumerate().flat_map(move |(r, row)| {
                row.iter().enumerate().filter_map(move |(c, entry)| {
                    (entry.display != "0").then(|| {
                        vec![
                            element.index.to_string(),
                            element.label.clone(),
                            r.to_string(),
                            c.to_string(),
                            entry.display.clone(),
                        ]
                    })
                })
            })
        });
        csv_from_records(&["index", "label", "row", "col", "value"], rows)
    } else {
        let rows = elements.iter().flat_map(|element| {
            element.combination.iter().map(move |t| {
                vec![
                    element.index.to_string(),
                    element.label.clone(),
                    t.pair.clone(),
                    t.display.clone(),
                ]
            })
        });
        csv_from_records(&["index", "label", "pair", "coefficient"], rows)
    }
}

/// Text keeps only the nonzero upper-triangle brackets for readability; the
/// JSON and CSV forms carry all 196 ordered pairs.
pub fn structure_text(table: &StructureTable) -> String {
    let mut out = String::new();
    for line in &table.brackets {
        if line.left_index >= line.right_index || line.terms.is_empty() {
            continue;
        }
        let terms: Vec<String> = line
            .terms
            .iter()
            .map(|t| scaled_symbol(&t.coefficient.to_string(), &t.target))
            .collect();
        out.push_str(&format!(
            "[{}, {}] = {}\n",
            line.left,
            line.right,
            join_terms(terms.iter().map(String::as_str)),
        ));
    }
    out
}

pub fn structure_csv(table: &StructureTable) -> String {
    let mut header: Vec<&str> = vec!["left", "right"];
    header.extend(table.labels.iter().map(String::as_str));
    let rows = table.brackets.iter().map(|line| {
        let mut row = vec![line.left.clone(), line.right.clone()];
        row.extend(
            line.dense_row(&table.labels)
                .iter()
                .map(|c| c.to_string()),
        );
        row
    });
    csv_from_records(&header, rows)
}

pub fn action_table_text(rows: &[ActionRow]) -> String {
    let mut out = String::new();
    let label_width = 12;
    let cell_width = 2 + rows
        .iter()
        .flat_map(|r| r.images.iter())
        .map(|i| i.result.len())
        .max()
        .unwrap_or(1);
    if let Some(first) = rows.first() {
        let header = std::iter::once(format!("{:<label_width$}", "root"))
            .chain(first.images.iter().map(|i| {
                let w = format!("v_{}", i.weight);
                format!("{w:<cell_width$}")
            }));
        out.push_str(&grid_line(header));
    }
    for row in rows {
        let cells = std::iter::once(format!("{:<label_width$}", format!("E_{}", row.root)))
            .chain(row.images.iter().map(|i| format!("{:<cell_width$}", i.result)));
        out.push_str(&grid_line(cells));
    }
    out
}

pub fn action_table_csv(rows: &[ActionRow]) -> String {
    let records = rows.iter().flat_map(|row| {
        row.images.iter().map(move |image| {
            vec![
                row.root.clone(),
                image.weight.clone(),
                image.coefficient.to_string(),
                image.target.clone().unwrap_or_default(),
            ]
        })
    });
    csv_from_records(&["root", "weight", "coefficient", "target"], records)
}

pub fn kernel_text(report: &KernelReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("map rank: {}\n", report.rank));
    out.push_str(&format!("kernel dimension: {}\n", report.dimension));
    out.push_str(&format!("generator: {}\n", report.generator));
    out.push_str("orbit under the order-7 index shift:\n");
    for (k, element) in report.orbit.iter().enumerate() {
        out.push_str(&format!("  k={k}: {element}\n"));
    }
    out
}

pub fn kernel_csv(report: &KernelReport) -> String {
    let mut rows = vec![
        vec!["rank".to_string(), report.rank.to_string()],
        vec!["dimension".to_string(), report.dimension.to_string()],
        vec!["generator".to_string(), report.generator.clone()],
    ];
    for (k, element) in report.orbit.iter().enumerate() {
        rows.push(vec![format!("orbit{k}"), element.clone()]);
    }
    csv_from_records(&["element", "expression"], rows)
}

pub fn irrep_text(report: &IrrepReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "highest weight: ({}, {})\n",
        report.highest_weight[0], report.highest_weight[1]
    ));
    out.push_str(&format!(
        "tableau rows: ({}, {})\n",
        report.shape[0], report.shape[1]
    ));
    out.push_str(&format!("tensor degree: {}\n", report.degree));
    out.push_str(&format!("ambient dimension: {}\n", report.ambient_dimension));
    out.push_str(&format!("module dimension: {}\n", report.dimension));
    out.push_str(&format!("degree formula: {}\n", report.formula_dimension));
    out.push_str(&format!(
        "dim = {} (weyl oracle: {})\n",
        report.dimension, report.formula_dimension
    ));
    if let Some(weights) = &report.weights {
        out.push_str("weight multiplicities:\n");
        for line in weights {
            out.push_str(&format!(
                "  ({}, {}): {}\n",
                line.mn[0], line.mn[1], line.multiplicity
            ));
        }
    }
    out
}

pub fn irrep_csv(report: &IrrepReport) -> String {
    if let Some(weights) = &report.weights {
        let rows = weights.iter().map(|line| {
            vec![
                line.mn[0].to_string(),
                line.mn[1].to_string(),
                line.multiplicity.to_string(),
            ]
        });
        csv_from_records(&["m", "n", "multiplicity"], rows)
    } else {
        let row = vec![
            report.highest_weight[0].to_string(),
            report.highest_weight[1].to_string(),
            report.shape[0].to_string(),
            report.shape[1].to_string(),
            report.degree.to_string(),
            report.ambient_dimension.to_string(),
            report.dimension.to_string(),
            report.formula_dimension.to_string(),
        ];
        csv_from_records(
            &["a", "b", "row1", "row2", "degree", "ambient", "dimension", "formula"],
            std::iter::once(row),
        )
    }
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for suite in &report.suites {
        out.push_str(&format!(
            "suite {}: {}\n",
            suite.suite,
            if suite.passed { "pass" } else { "FAIL" }
        ));
        for check in &suite.checks {
            out.push_str(&format!(
                "  {} {}: {}\n",
                if check.passed { "pass" } else { "FAIL" },
                check.name,
                check.detail
            ));
        }
    }
    out.push_str(&format!(
        "overall: {}\n",
        if report.passed { "pass" } else { "FAIL" }
    ));
    out
}

pub fn verify_csv(report: &VerifyReport) -> String {
    let rows = report.suites.iter().flat_map(|suite| {
        suite.checks.iter().map(move |check| {
            vec![
                suite.suite.clone(),
                check.name.clone(),
                check.passed.to_string(),
                check.detail.clone(),
            ]
        })
    });
    csv_from_records(&["suite", "check", "passed", "detail"], rows)
}

pub fn conventions_text(c: &Conventions) -> String {
    let mut out = String::new();
    out.push_str(&format!("field relation: {}\n", c.field_relation));
    out.push_str(&format!("multiplication rule: {}\n", c.multiplication_rule));
    out.push_str(&format!("coordinate order: {}\n", c.coordinate_order.join(" ")));
    out.push_str(&format!("basis order: {}\n", c.basis_order.join(" ")));
    out.push_str(&format!("weight order: {}\n", c.weight_order.join(" ")));
    out.push_str(&format!(
        "simple roots: {} {}\n",
        c.simple_roots[0], c.simple_roots[1]
    ));
    out.push_str(&format!(
        "cartan matrix: [{} {}; {} {}]\n",
        c.cartan_matrix[0][0], c.cartan_matrix[0][1], c.cartan_matrix[1][0], c.cartan_matrix[1][1]
    ));
    out.push_str("coroot eigenvalue pairs:\n");
    for pair in &c.eigenvalue_pairs {
        out.push_str(&format!("  {pair}\n"));
    }
    out.push_str(&format!("opposite bracket: {}\n", c.opposite_bracket));
    out.push_str(&format!("scalar encoding: {}\n", c.scalar_encoding));
    out.push_str("notes:\n");
    for note in &c.notes {
        out.push_str(&format!("  - {note}\n"));
    }
    out
}

pub fn conventions_csv(c: &Conventions) -> String {
    let rows = vec![
        vec!["field_relation".to_string(), c.field_relation.clone()],
        vec!["multiplication_rule".to_string(), c.multiplication_rule.clone()],
        vec!["coordinate_order".to_string(), c.coordinate_order.join(" ")],
        vec!["basis_order".to_string(), c.basis_order.join(" ")],
        vec!["weight_order".to_string(), c.weight_order.join(" ")],
        vec!["simple_roots".to_string(), c.simple_roots.join(" ")],
        vec![
            "cartan_matrix".to_string(),
            format!(
                "[{} {}; {} {}]",
                c.cartan_matrix[0][0],
                c.cartan_matrix[0][1],
                c.cartan_matrix[1][0],
                c.cartan_matrix[1][1]
            ),
        ],
        vec!["eigenvalue_pairs".to_string(), c.eigenvalue_pairs.join("; ")],
        vec!["opposite_bracket".to_string(), c.opposite_bracket.clone()],
        vec!["scalar_encoding".to_string(), c.scalar_encoding.clone()],
        vec!["notes".to_string(), c.notes.join("; ")],
    ];
    csv_from_records(&["key", "value"], rows)
}
