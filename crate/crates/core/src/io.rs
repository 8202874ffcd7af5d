//! Text formats and DOT export.
//!
//! Structure files hold one directive per line: `event <id>`,
//! `cover <parent> <child>` or `conflict <a> <b>`. Label files hold
//! `label <id> <letter>` lines. In both, `#` starts a comment.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::domain::DomainPoset;
use crate::error::{Error, Result};
use crate::label::{Labelling, Strategy};
use crate::model::{is_token, EventId, EventStructure};

/// Directives of a structure file, in file order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EsInput {
    pub events: Vec<EventId>,
    pub covers: Vec<(EventId, EventId)>,
    pub conflicts: Vec<(EventId, EventId)>,
}

impl EsInput {
    pub fn build(self) -> Result<EventStructure> {
        EventStructure::build(self.events, self.covers, self.conflicts)
    }
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, col, message: message.into() }
}

/// Whitespace-separated tokens of one line with their 1-based columns,
/// comments stripped.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in code.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &code[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &code[s..]));
    }
    out.into_iter().map(|(s, t)| (code[..s].chars().count() + 1, t)).collect()
}

fn id_at(line: usize, (col, tok): (usize, &str)) -> Result<EventId> {
    if is_token(tok) {
        Ok(EventId::new(tok)?)
    } else {
        Err(syntax(line, col, format!("invalid event id {tok:?}")))
    }
}

fn arity(line: usize, toks: &[(usize, &str)], want: usize) -> Result<()> {
    if toks.len() == want + 1 {
        return Ok(());
    }
    let col = toks.get(want + 1).map(|t| t.0).unwrap_or_else(|| toks[0].0 + toks[0].1.len());
    Err(syntax(line, col, format!("`{}` takes {want} argument(s), found {}", toks[0].1, toks.len() - 1)))
}

pub fn parse_es(text: &str) -> Result<EsInput> {
    let mut input = EsInput::default();
    let mut declared = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = tokens(raw);
        let Some(&(col, directive)) = toks.first() else { continue };
        match directive {
            "event" => {
                arity(line, &toks, 1)?;
                let id = id_at(line, toks[1])?;
                if !declared.insert(id.clone()) {
                    return Err(Error::DuplicateEvent(id.to_string()));
                }
                input.events.push(id);
            }
            "cover" => {
                arity(line, &toks, 2)?;
                input.covers.push((id_at(line, toks[1])?, id_at(line, toks[2])?));
            }
            "conflict" => {
                arity(line, &toks, 2)?;
                let (a, b) = (id_at(line, toks[1])?, id_at(line, toks[2])?);
                if a == b {
                    return Err(syntax(line, toks[2].0, format!("event {a} cannot conflict with itself")));
                }
                input.conflicts.push((a, b));
            }
            other => return Err(syntax(line, col, format!("unknown directive {other:?}"))),
        }
    }
    let pairs = input.covers.iter().chain(&input.conflicts);
    if let Some(missing) = pairs.flat_map(|(a, b)| [a, b]).find(|id| !declared.contains(*id)) {
        return Err(Error::UnknownEvent(missing.to_string()));
    }
    Ok(input)
}

/// Parses and builds in one step.
pub fn read_es(text: &str) -> Result<EventStructure> {
    parse_es(text)?.build()
}

/// Canonical text: sorted events, sorted covers, minimal conflicts as generators.
pub fn serialize_es(es: &EventStructure) -> String {
    let mut out = String::new();
    for id in es.ids() {
        writeln!(out, "event {id}").expect("writing to a String");
    }
    for (p, c) in es.covers() {
        writeln!(out, "cover {} {}", es.name(p), es.name(c)).expect("writing to a String");
    }
    for (a, b) in es.minimal_conflicts() {
        writeln!(out, "conflict {} {}", es.name(a), es.name(b)).expect("writing to a String");
    }
    out
}

/// `label` lines as an id to letter map.
pub fn parse_labels(text: &str) -> Result<BTreeMap<EventId, usize>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = tokens(raw);
        let Some(&(col, directive)) = toks.first() else { continue };
        if directive != "label" {
            return Err(syntax(line, col, format!("unknown directive {directive:?}")));
        }
        arity(line, &toks, 2)?;
        let id = id_at(line, toks[1])?;
        let (lcol, ltok) = toks[2];
        let letter: usize = match ltok.parse() {
            Ok(l) if ltok.bytes().all(|b| b.is_ascii_digit()) => l,
            _ => return Err(syntax(line, lcol, format!("letter {ltok:?} is not a non-negative integer"))),
        };
        if out.insert(id.clone(), letter).is_some() {
            return Err(syntax(line, toks[1].0, format!("duplicate label for {id}")));
        }
    }
    Ok(out)
}

/// Reads a label file against `es`; the alphabet is `0..=max letter`.
pub fn read_labels(es: &EventStructure, text: &str) -> Result<Labelling> {
    let assignment = parse_labels(text)?;
    if let Some(stray) = assignment.keys().find(|id| es.index_of(id.as_str()).is_err()) {
        return Err(Error::UnknownEvent(stray.to_string()));
    }
    let alphabet_size = assignment.values().map(|&l| l + 1).max().unwrap_or(0);
    Ok(Labelling { assignment, alphabet_size, strategy: Strategy::External })
}

pub fn serialize_labels(lab: &Labelling) -> String {
    let mut out = String::new();
    for (id, letter) in &lab.assignment {
        writeln!(out, "label {id} {letter}").expect("writing to a String");
    }
    out
}

/// Concurrent pairs not dominated by another concurrent pair above them.
pub fn maximal_concurrent_pairs(es: &EventStructure) -> Vec<(usize, usize)> {
    let pairs: Vec<(usize, usize)> = es
        .events()
        .flat_map(|x| es.events().filter(move |&y| x < y).map(move |y| (x, y)))
        .filter(|&(x, y)| es.concurrent(x, y))
        .collect();
    pairs
        .iter()
        .copied()
        .filter(|&(x, y)| {
            !pairs
                .iter()
                .any(|&(a, b)| (a, b) != (x, y) && ((es.leq(x, a) && es.leq(y, b)) || (es.leq(x, b) && es.leq(y, a))))
        })
        .collect()
}

/// Events as nodes; Hasse edges dotted, minimal conflicts bold, maximal
/// concurrent pairs solid.
pub fn export_dot_graph(es: &EventStructure) -> String {
    let mut out = String::from("graph es {\n  node [shape=circle];\n");
    for id in es.ids() {
        writeln!(out, "  \"{id}\";").expect("writing to a String");
    }
    let edge = |out: &mut String, a: usize, b: usize, style: &str| {
        writeln!(out, "  \"{}\" -- \"{}\" [style={style}];", es.name(a), es.name(b)).expect("writing to a String");
    };
    for (p, c) in es.covers() {
        edge(&mut out, p, c, "dotted");
    }
    for (a, b) in es.minimal_conflicts() {
        edge(&mut out, a, b, "bold");
    }
    for (a, b) in maximal_concurrent_pairs(es) {
        edge(&mut out, a, b, "solid");
    }
    out.push_str("}\n");
    out
}

/// Configurations as nodes; each Hasse edge carries the added event, or its
/// letter when a labelling is given.
pub fn export_dot_domain(d: &DomainPoset, es: &EventStructure, lab: Option<&Labelling>) -> Result<String> {
    let letters = lab.map(|l| l.letters_by_index(es)).transpose()?;
    let mut out = String::from("digraph domain {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, c) in d.configs.iter().enumerate() {
        let names: Vec<&str> = c.members.iter().map(|&x| es.name(x)).collect();
        writeln!(out, "  c{i} [label=\"{{{}}}\"];", names.join(",")).expect("writing to a String");
    }
    for e in &d.hasse {
        let label = match &letters {
            Some(ls) => ls[e.event].to_string(),
            None => es.name(e.event).to_string(),
        };
        writeln!(out, "  c{} -> c{} [label=\"{label}\"];", e.lower, e.upper).expect("writing to a String");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{configurations, DEFAULT_MAX_CONFIGS};
    use crate::fixtures::fixture;

    #[test]
    fn parse_small() {
        let input = parse_es("event a\nevent b # second\n\ncover a b\n").unwrap();
        assert_eq!(input.events.len(), 2);
        assert_eq!(input.covers.len(), 1);
        let es = input.build().unwrap();
        assert!(es.lt(0, 1));
    }

    #[test]
    fn forward_references_are_allowed() {
        let es = read_es("cover a b\nevent a\nevent b\n").unwrap();
        assert_eq!(es.len(), 2);
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse_es("event a\nconflict a a\n") {
            Err(Error::Syntax { line: 2, col: 12, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_es("event a\n  frob a\n") {
            Err(Error::Syntax { line: 2, col: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_es("event a b\n") {
            Err(Error::Syntax { line: 1, col: 9, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_es("event a!\n") {
            Err(Error::Syntax { line: 1, col: 7, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_es("event a\nevent a\n"), Err(Error::DuplicateEvent(_))));
        assert!(matches!(parse_es("event a\ncover a z\n"), Err(Error::UnknownEvent(z)) if z == "z"));
    }

    #[test]
    fn serialize_s() {
        let es = fixture("S").unwrap();
        let text = serialize_es(&es);
        let conflicts: Vec<&str> = text.lines().filter(|l| l.starts_with("conflict")).collect();
        assert_eq!(conflicts, ["conflict 3 5", "conflict 6 7", "conflict 8 9"]);
        assert_eq!(read_es(&text).unwrap(), es);
        assert_eq!(serialize_es(&read_es(&text).unwrap()), text);
    }

    #[test]
    fn empty_round_trip() {
        assert_eq!(serialize_es(&EventStructure::empty()), "");
        assert_eq!(read_es("# nothing here\n").unwrap(), EventStructure::empty());
    }

    #[test]
    fn labels_round_trip() {
        let es = fixture("ANTI3").unwrap();
        let lab = Labelling::from_indices(&es, vec![2, 0, 1], Strategy::Exact);
        let text = serialize_labels(&lab);
        assert_eq!(text, "label a 2\nlabel b 0\nlabel c 1\n");
        let back = read_labels(&es, &text).unwrap();
        assert_eq!(back.assignment, lab.assignment);
        assert!(matches!(parse_labels("label a 1\nlabel a 2\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_labels("label a -1\n"), Err(Error::Syntax { line: 1, col: 9, .. })));
        assert!(matches!(read_labels(&es, "label q 0\n"), Err(Error::UnknownEvent(_))));
    }

    #[test]
    fn dot_inventories() {
        let chain = export_dot_graph(&fixture("CHAIN3").unwrap());
        assert_eq!(chain.matches("dotted").count(), 2);
        assert_eq!(chain.matches("--").count(), 2);

        // The figure of S: 8 Hasse edges, 3 generators, 4 maximal concurrencies.
        let s = export_dot_graph(&fixture("S").unwrap());
        assert_eq!(s.matches("style=dotted").count(), 8);
        assert_eq!(s.matches("style=bold").count(), 3);
        assert_eq!(s.matches("style=solid").count(), 4);
        assert_eq!(s, export_dot_graph(&fixture("S").unwrap()));
    }

    #[test]
    fn domain_dot() {
        let es = fixture("ANTI3").unwrap();
        let d = configurations(&es, DEFAULT_MAX_CONFIGS).unwrap();
        let lab = Labelling::from_indices(&es, vec![0, 1, 2], Strategy::External);
        let dot = export_dot_domain(&d, &es, Some(&lab)).unwrap();
        assert_eq!(dot.matches("->").count(), 12);
        assert_eq!(dot.matches("label=\"0\"").count(), 4);
        let mut partial = lab.clone();
        partial.assignment.remove("a");
        assert!(matches!(export_dot_domain(&d, &es, Some(&partial)), Err(Error::UnlabelledEvent(_))));
    }
}
