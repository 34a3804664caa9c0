//! Plain-text rendering of the payloads: aligned columns, LF endings, no
//! trailing whitespace.

use crate::payload::*;

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let columns = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut out = String::new();
        for (k, cell) in cells.iter().enumerate() {
            out.push_str(cell);
            if k + 1 < columns {
                let pad = widths[k] - cell.chars().count() + 2;
                out.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        out
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn set(values: &[u8]) -> String {
    let inner: Vec<String> = values.iter().map(u8::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn names(list: &[String]) -> String {
    list.join(",")
}

pub fn monoid(doc: &MonoidDoc) -> String {
    let mut out = String::from("elements\n");
    let rows: Vec<Vec<String>> = doc
        .elements
        .iter()
        .map(|e| {
            vec![
                e.label.clone(),
                format!("z -> {}z+{}", e.multiplier, e.offset),
            ]
        })
        .collect();
    out.push_str(&table(&["label", "map"], &rows));
    out.push_str("\ncomposition (row o column)\n");
    let mut header = vec!["o"];
    header.extend(doc.elements.iter().map(|e| e.label.as_str()));
    let rows: Vec<Vec<String>> = doc
        .elements
        .iter()
        .zip(&doc.table)
        .map(|(e, row)| {
            std::iter::once(e.label.clone())
                .chain(row.iter().cloned())
                .collect()
        })
        .collect();
    out.push_str(&table(&header, &rows));
    out
}

pub fn omega(doc: &OmegaDoc) -> String {
    let mut out = String::from("left ideals\n");
    let rows: Vec<Vec<String>> = doc
        .ideals
        .iter()
        .map(|i| vec![i.name.clone(), format!("{{{}}}", names(&i.elements))])
        .collect();
    out.push_str(&table(&["name", "elements"], &rows));
    out.push_str("\naction m.B (row m, column B)\n");
    let mut header = vec!["m"];
    header.extend(doc.ideals.iter().map(|i| i.name.as_str()));
    let rows: Vec<Vec<String>> = doc
        .action
        .iter()
        .map(|r| {
            std::iter::once(r.element.clone())
                .chain(r.images.iter().cloned())
                .collect()
        })
        .collect();
    out.push_str(&table(&header, &rows));
    out
}

pub fn topologies(doc: &TopologiesDoc) -> String {
    let mut header = vec!["topology"];
    header.extend(doc.omega.iter().map(String::as_str));
    header.extend(["upgrade of C", "type"]);
    let rows: Vec<Vec<String>> = doc
        .topologies
        .iter()
        .map(|t| {
            let mut row = vec![format!("{} ({})", t.symbol, t.key)];
            row.extend(t.table.iter().cloned());
            row.push(set(&t.upgrade_of_c));
            row.push(t.upgrade_type.clone());
            row
        })
        .collect();
    table(&header, &rows)
}

pub fn chi(doc: &ChiDoc) -> String {
    let mut out = format!(
        "chi of {} under the {}-conjugated action\n",
        set(&doc.set),
        doc.conjugate
    );
    let header: Vec<String> = (0..12).map(|z| z.to_string()).collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    out.push_str(&table(&header, std::slice::from_ref(&doc.table)));
    out
}

pub fn upgrade(doc: &UpgradeDoc) -> String {
    let rows = vec![
        vec!["set".to_string(), set(&doc.set)],
        vec![
            "topology".to_string(),
            format!("{} ({})", doc.symbol, doc.topology),
        ],
        vec!["conjugate".to_string(), doc.conjugate.clone()],
        vec!["upgrade".to_string(), set(&doc.upgrade)],
        vec!["via image".to_string(), set(&doc.via_image)],
        vec!["cover".to_string(), names(&doc.cover)],
        vec!["covered".to_string(), doc.covered.to_string()],
    ];
    let mut out = String::new();
    for row in rows {
        out.push_str(&format!("{:<10} {}\n", row[0], row[1]));
    }
    out
}

fn system(out: &mut String, doc: &SystemDoc, group: &str) {
    out.push_str(&format!(
        "seed {}\norbit {}\n",
        doc.seed,
        doc.orbit.join(" ")
    ));
    for (title, elements) in [
        (format!("{group} restricted"), &doc.g0),
        ("T/I partner restricted".to_string(), &doc.h0),
    ] {
        out.push_str(&format!("{title} ({} elements)\n", elements.len()));
        let rows: Vec<Vec<String>> = elements
            .iter()
            .map(|e| vec![format!("  {}", e.name), e.cycles.clone()])
            .collect();
        let rendered = table(&["", ""], &rows);
        // drop the blank header line
        out.push_str(
            rendered
                .split_once('\n')
                .map(|(_, rest)| rest)
                .unwrap_or(""),
        );
    }
}

pub fn dual(doc: &DualDoc) -> String {
    let mut out = String::new();
    system(&mut out, &doc.system, &doc.group);
    out
}

pub fn systems(doc: &SystemsDoc) -> String {
    let mut out = String::new();
    for (k, sys) in doc.systems.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        system(&mut out, sys, &doc.group);
    }
    out
}

pub fn enumerate(doc: &EnumerateDoc) -> String {
    let rows: Vec<Vec<String>> = doc
        .rows
        .iter()
        .map(|r| {
            let cover = if r.cover.len() == 24 {
                "all 24 triads".to_string()
            } else {
                names(&r.cover)
            };
            let elements = if r.subgroup_elements.len() == 24 {
                "all 24 elements".to_string()
            } else {
                names(&r.subgroup_elements)
            };
            vec![
                r.name.clone(),
                subgroup_label(&r.name).to_string(),
                elements,
                cover,
            ]
        })
        .collect();
    let mut out = table(&["type", "subgroup", "elements", "cover"], &rows);
    out.push('\n');
    let rows: Vec<Vec<String>> = doc
        .rows
        .iter()
        .map(|r| {
            let notes: Vec<&str> = r
                .carrier
                .iter()
                .map(|&v| triadic::PitchClass::new(v as i64).name())
                .collect();
            vec![r.name.clone(), set(&r.carrier), notes.join(" ")]
        })
        .collect();
    out.push_str(&table(&["type", "carrier", "notes"], &rows));
    out
}

pub fn audit(doc: &AuditDoc) -> String {
    let rows: Vec<Vec<String>> = doc
        .p_containing
        .iter()
        .map(|c| {
            let verdict = if c.closed && c.simply_transitive {
                "accepted"
            } else if !c.closed {
                "rejected: not closed"
            } else {
                "rejected: not simply transitive"
            };
            vec![
                format!("<{}>", names(&c.generators)),
                c.order.to_string(),
                set(&c.pitch_union),
                c.cover.len().to_string(),
                verdict.to_string(),
            ]
        })
        .collect();
    let mut out = String::from("subgroups containing P\n");
    out.push_str(&table(
        &["group", "order", "pitch union", "cover size", "outcome"],
        &rows,
    ));
    let p = &doc.p_free;
    out.push_str("\nsubgroups without P\n");
    out.push_str(&format!(
        "closed covered sets with 3 contain C and c: {}\n",
        p.excludes_3
    ));
    out.push_str(&format!(
        "closed sets with 5 contain Db and db: {}\n",
        p.excludes_5
    ));
    out.push_str(&format!(
        "closed covered sets with Gb and 9 contain gb: {}\n",
        p.excludes_9
    ));
    out.push_str("T/I subgroups whose orbit of C is a maximal cover:\n");
    for c in &p.candidates {
        out.push_str(&format!(
            "  {{{}}} on {}\n",
            names(&c.elements),
            names(&c.orbit)
        ));
    }
    out
}

pub fn verify(doc: &VerifyDoc) -> String {
    let mut out = String::new();
    for row in &doc.rows {
        if row.ok {
            out.push_str(&format!("ok    {}\n", row.name));
        } else {
            out.push_str(&format!(
                "FAIL  {}: {}\n",
                row.name,
                row.problems.join("; ")
            ));
        }
    }
    out.push_str(if doc.all_ok {
        "all rows verified\n"
    } else {
        "verification failed\n"
    });
    out
}
