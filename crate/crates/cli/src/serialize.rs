//! Canonical text form of a [`Document`]; `parse(&serialize(d)) == d`.

use std::fmt::Write;

use wcpkit_core::Field;

use crate::ast::*;

const ENTRIES_PER_LINE: usize = 8;

fn obj_list(names: &[String]) -> String {
    if names.is_empty() {
        UNIT_NAME.to_string()
    } else {
        names.join("*")
    }
}

pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    match doc.field {
        Field::Rationals => out.push_str("field Q\n"),
        Field::Prime(p) => writeln!(out, "field Fp {p}").unwrap(),
    }
    for item in &doc.items {
        match item {
            Item::Obj { name, dim } => writeln!(out, "obj {name} dim {dim}").unwrap(),
            Item::Mor(m) => write_mor(&mut out, m),
            Item::Decl(d) => {
                write!(out, "{} {}", d.kind.keyword(), d.name).unwrap();
                for ((key, _), arg) in d.kind.params().iter().zip(&d.args) {
                    write!(out, " {key} {arg}").unwrap();
                }
                out.push('\n');
            }
            Item::Directive(d) => writeln!(out, "{d}").unwrap(),
        }
    }
    out
}

fn write_mor(out: &mut String, m: &MorDecl) {
    write!(
        out,
        "mor {} : {} -> {} {{",
        m.name,
        obj_list(&m.dom),
        obj_list(&m.cod)
    )
    .unwrap();
    let cells: Vec<String> = m
        .entries
        .iter()
        .map(|(r, c, v)| format!("{r} {c} {}", Field::format_scalar(v)))
        .collect();
    if cells.len() <= ENTRIES_PER_LINE {
        if !cells.is_empty() {
            write!(out, " {} ", cells.join("; ")).unwrap();
        }
        out.push_str("}\n");
        return;
    }
    out.push('\n');
    for chunk in cells.chunks(ENTRIES_PER_LINE) {
        writeln!(out, "  {};", chunk.join("; ")).unwrap();
    }
    out.push_str("}\n");
}
