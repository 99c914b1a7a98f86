//! Line-based input documents.
//!
//! ```text
//! # M1
//! matroid
//! elements 1 2 3 4
//! bases {1,3} {1,4} {2,3} {2,4} {3,4}
//! ```
//!
//! The first significant line names the kind: `matroid`, `graph`,
//! `perspective` or `major`. Blank lines and `#` comments are ignored.
//! Declaration order (`elements`, or `edge` lines for graphs) is the linear
//! order of the ground set.
//!
//! * `matroid`: `elements …` and `bases {…} …` or `circuits {…} …`
//! * `graph`: `vertex …` lines and `edge LABEL V1 V2` lines
//! * `perspective`: `elements …`, `m bases|circuits …`,
//!   `mprime bases|circuits …`
//! * `major`: a matroid or graph body plus `ports {…}`; the perspective is
//!   `N \ ports → N / ports` on the remaining elements

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;
use tutte_core::{GroundSet, Matroid, Perspective, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown label `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("line {line}: duplicate label `{label}`")]
    DuplicateLabel { line: usize, label: String },
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error("empty document")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Matroid,
    Graph,
    Perspective,
    Major,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Matroid => "matroid",
            Kind::Graph => "graph",
            Kind::Perspective => "perspective",
            Kind::Major => "major",
        }
    }

    fn parse(word: &str) -> Option<Kind> {
        match word {
            "matroid" => Some(Kind::Matroid),
            "graph" => Some(Kind::Graph),
            "perspective" => Some(Kind::Perspective),
            "major" => Some(Kind::Major),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Bases,
    Circuits,
}

impl SetKind {
    fn name(self) -> &'static str {
        match self {
            SetKind::Bases => "bases",
            SetKind::Circuits => "circuits",
        }
    }
}

/// A list of bases or a list of circuits, labels kept as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    pub kind: SetKind,
    pub sets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Sets {
        elements: Vec<String>,
        family: SetFamily,
    },
    Graph {
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
    },
}

impl Body {
    /// Element labels in declaration order.
    pub fn elements(&self) -> Vec<String> {
        match self {
            Body::Sets { elements, .. } => elements.clone(),
            Body::Graph { edges, .. } => edges.iter().map(|e| e.0.clone()).collect(),
        }
    }

    fn matroid(&self, checked: bool) -> tutte_core::Result<Matroid> {
        match self {
            Body::Sets { elements, family } => build_matroid(&GroundSet::new(elements.clone())?, family, checked),
            Body::Graph { vertices, edges } => {
                Matroid::graphic(&tutte_core::Graph::new(vertices.clone(), edges.clone())?)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDocument {
    Matroid(Body),
    Perspective {
        elements: Vec<String>,
        m: SetFamily,
        m_prime: SetFamily,
    },
    Major {
        body: Body,
        ports: Vec<String>,
    },
}

fn build_matroid(ground: &GroundSet, family: &SetFamily, checked: bool) -> tutte_core::Result<Matroid> {
    let sets = family
        .sets
        .iter()
        .map(|s| ground.subset(s))
        .collect::<tutte_core::Result<Vec<Subset>>>()?;
    match family.kind {
        SetKind::Bases if checked => Matroid::from_bases(ground.clone(), sets),
        SetKind::Bases => Matroid::from_bases_unchecked(ground.clone(), sets),
        SetKind::Circuits => Matroid::from_circuits(ground.clone(), sets),
    }
}

impl InputDocument {
    pub fn kind(&self) -> Kind {
        match self {
            InputDocument::Matroid(Body::Sets { .. }) => Kind::Matroid,
            InputDocument::Matroid(Body::Graph { .. }) => Kind::Graph,
            InputDocument::Perspective { .. } => Kind::Perspective,
            InputDocument::Major { .. } => Kind::Major,
        }
    }

    /// Ground set labels of the matroid or perspective the document
    /// describes (ports excluded).
    pub fn elements(&self) -> Vec<String> {
        match self {
            InputDocument::Matroid(body) => body.elements(),
            InputDocument::Perspective { elements, .. } => elements.clone(),
            InputDocument::Major { body, ports } => {
                body.elements().into_iter().filter(|e| !ports.contains(e)).collect()
            }
        }
    }

    /// True for a plain matroid, whose Tutte polynomial has no `z`.
    pub fn is_matroid(&self) -> bool {
        matches!(self, InputDocument::Matroid(_))
    }

    /// Build and validate the described object; a matroid becomes its
    /// identity perspective.
    pub fn perspective(&self) -> tutte_core::Result<Perspective> {
        self.build(true)
    }

    /// Like [`InputDocument::perspective`] but skips the basis exchange and
    /// circuit/cocircuit tests, so the verification harness can be pointed
    /// at inputs that are not matroids or not perspectives. Rank codrops
    /// must still be nonnegative.
    pub fn perspective_unchecked(&self) -> tutte_core::Result<Perspective> {
        self.build(false)
    }

    fn build(&self, checked: bool) -> tutte_core::Result<Perspective> {
        match self {
            InputDocument::Matroid(body) => Ok(Perspective::identity(body.matroid(checked)?)),
            InputDocument::Perspective { elements, m, m_prime } => {
                let ground = GroundSet::new(elements.clone())?;
                let (m, m_prime) = (build_matroid(&ground, m, checked)?, build_matroid(&ground, m_prime, checked)?);
                if checked {
                    Perspective::new(m, m_prime)
                } else {
                    Perspective::new_unchecked(m, m_prime)
                }
            }
            InputDocument::Major { body, ports } => {
                let n = body.matroid(checked)?;
                let ports = n.ground().subset(ports)?;
                Perspective::from_major(&n, ports)
            }
        }
    }

    /// Canonical text; `parse(doc.to_text()) == doc`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(self.kind().name());
        out.push('\n');
        match self {
            InputDocument::Matroid(body) => write_body(&mut out, body),
            InputDocument::Perspective { elements, m, m_prime } => {
                out.push_str(&format!("elements {}\n", elements.join(" ")));
                write_family(&mut out, "m ", m);
                write_family(&mut out, "mprime ", m_prime);
            }
            InputDocument::Major { body, ports } => {
                write_body(&mut out, body);
                out.push_str(&format!("ports {}\n", set_literal(ports)));
            }
        }
        out
    }
}

fn set_literal(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn write_family(out: &mut String, prefix: &str, family: &SetFamily) {
    out.push_str(prefix);
    out.push_str(family.kind.name());
    for s in &family.sets {
        out.push(' ');
        out.push_str(&set_literal(s));
    }
    out.push('\n');
}

fn write_body(out: &mut String, body: &Body) {
    match body {
        Body::Sets { elements, family } => {
            out.push_str(&format!("elements {}\n", elements.join(" ")));
            write_family(out, "", family);
        }
        Body::Graph { vertices, edges } => {
            out.push_str(&format!("vertex {}\n", vertices.join(" ")));
            for (l, a, b) in edges {
                out.push_str(&format!("edge {l} {a} {b}\n"));
            }
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn check_label(line: usize, label: &str) -> Result<(), ParseError> {
    if label.is_empty() || label.contains(|c: char| c.is_whitespace() || "{},#".contains(c)) {
        Err(syntax(line, format!("invalid label `{label}`")))
    } else {
        Ok(())
    }
}

/// Brace literals such as `{1,3} {} {2, 4}`.
fn parse_sets(line: usize, text: &str) -> Result<Vec<Vec<String>>, ParseError> {
    let mut sets = Vec::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        let Some(inner) = rest.strip_prefix('{') else {
            return Err(syntax(line, format!("expected `{{` at `{rest}`")));
        };
        let close = inner
            .find('}')
            .ok_or_else(|| syntax(line, "unterminated set literal"))?;
        let body = inner[..close].trim();
        let labels: Vec<String> = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',').map(|l| l.trim().to_string()).collect()
        };
        for l in &labels {
            check_label(line, l)?;
        }
        sets.push(labels);
        rest = inner[close + 1..].trim_start();
    }
    Ok(sets)
}

fn check_members(line: usize, known: &HashSet<String>, sets: &[Vec<String>]) -> Result<(), ParseError> {
    for s in sets {
        let mut seen = HashSet::new();
        for l in s {
            if !known.contains(l) {
                return Err(ParseError::UnknownLabel {
                    line,
                    label: l.clone(),
                });
            }
            if !seen.insert(l) {
                return Err(ParseError::DuplicateLabel {
                    line,
                    label: l.clone(),
                });
            }
        }
    }
    Ok(())
}

fn parse_family_kind(line: usize, word: &str) -> Result<SetKind, ParseError> {
    match word {
        "bases" => Ok(SetKind::Bases),
        "circuits" => Ok(SetKind::Circuits),
        _ => Err(syntax(line, format!("expected `bases` or `circuits`, found `{word}`"))),
    }
}

/// A `bases`/`circuits` line: line number, `m`/`mprime` role, kind, sets.
type FamilyLine = (usize, Option<String>, SetKind, Vec<Vec<String>>);

#[derive(Default)]
struct Collected {
    elements: Option<(usize, Vec<String>)>,
    vertices: Vec<(usize, String)>,
    edges: Vec<(usize, String, String, String)>,
    families: Vec<FamilyLine>,
    ports: Option<(usize, Vec<String>)>,
}

/// Parse one document.
pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (kind_line, first) = lines.next().ok_or(ParseError::Empty)?;
    let kind = Kind::parse(first).ok_or_else(|| syntax(kind_line, format!("unknown kind `{first}`")))?;

    let mut c = Collected::default();
    for (n, l) in lines {
        let (keyword, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match keyword {
            "elements" => {
                if c.elements.is_some() {
                    return Err(syntax(n, "second `elements` line"));
                }
                let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                let mut seen = HashSet::new();
                for l in &labels {
                    check_label(n, l)?;
                    if !seen.insert(l.clone()) {
                        return Err(ParseError::DuplicateLabel { line: n, label: l.clone() });
                    }
                }
                c.elements = Some((n, labels));
            }
            "vertex" => {
                for v in rest.split_whitespace() {
                    check_label(n, v)?;
                    c.vertices.push((n, v.to_string()));
                }
            }
            "edge" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [label, a, b] = parts[..] else {
                    return Err(syntax(n, "expected `edge LABEL V1 V2`"));
                };
                check_label(n, label)?;
                c.edges.push((n, label.into(), a.into(), b.into()));
            }
            "bases" | "circuits" => {
                c.families.push((n, None, parse_family_kind(n, keyword)?, parse_sets(n, rest)?));
            }
            "m" | "mprime" => {
                let (word, sets) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let fk = parse_family_kind(n, word)?;
                c.families.push((n, Some(keyword.to_string()), fk, parse_sets(n, sets)?));
            }
            "ports" => {
                if c.ports.is_some() {
                    return Err(syntax(n, "second `ports` line"));
                }
                match parse_sets(n, rest)?.as_slice() {
                    [one] => c.ports = Some((n, one.clone())),
                    _ => return Err(syntax(n, "expected exactly one set literal")),
                }
            }
            other => return Err(syntax(n, format!("unknown keyword `{other}`"))),
        }
    }
    assemble(kind, c)
}

fn single_family(
    families: &[FamilyLine],
    role: Option<&str>,
    known: &HashSet<String>,
) -> Result<SetFamily, ParseError> {
    let mut out: Option<SetFamily> = None;
    for (n, r, kind, sets) in families {
        if r.as_deref() != role {
            continue;
        }
        check_members(*n, known, sets)?;
        match &mut out {
            None => {
                out = Some(SetFamily {
                    kind: *kind,
                    sets: sets.clone(),
                })
            }
            Some(f) if f.kind == *kind => f.sets.extend(sets.iter().cloned()),
            Some(_) => return Err(syntax(*n, "mixes `bases` and `circuits`")),
        }
    }
    out.ok_or(ParseError::Missing(match role {
        None => "bases/circuits",
        Some("m") => "m",
        _ => "mprime",
    }))
}

fn body_of(c: &Collected) -> Result<Body, ParseError> {
    if !c.edges.is_empty() || !c.vertices.is_empty() {
        if let Some((n, _)) = &c.elements {
            return Err(syntax(*n, "`elements` in a graph body"));
        }
        if let Some((n, ..)) = c.families.first() {
            return Err(syntax(*n, "set family in a graph body"));
        }
        let mut vertices = HashSet::new();
        for (n, v) in &c.vertices {
            if !vertices.insert(v.clone()) {
                return Err(ParseError::DuplicateLabel { line: *n, label: v.clone() });
            }
        }
        let mut labels = HashSet::new();
        for (n, l, a, b) in &c.edges {
            if !labels.insert(l.clone()) {
                return Err(ParseError::DuplicateLabel { line: *n, label: l.clone() });
            }
            for v in [a, b] {
                if !vertices.contains(v) {
                    return Err(syntax(*n, format!("unknown vertex `{v}`")));
                }
            }
        }
        if c.edges.is_empty() {
            return Err(ParseError::Missing("edge"));
        }
        return Ok(Body::Graph {
            vertices: c.vertices.iter().map(|v| v.1.clone()).collect(),
            edges: c.edges.iter().map(|(_, l, a, b)| (l.clone(), a.clone(), b.clone())).collect(),
        });
    }
    let (_, elements) = c.elements.clone().ok_or(ParseError::Missing("elements"))?;
    if let Some((n, Some(_), ..)) = c.families.iter().find(|f| f.1.is_some()) {
        return Err(syntax(*n, "`m`/`mprime` outside a perspective"));
    }
    let known: HashSet<String> = elements.iter().cloned().collect();
    let family = single_family(&c.families, None, &known)?;
    Ok(Body::Sets { elements, family })
}

fn assemble(kind: Kind, c: Collected) -> Result<InputDocument, ParseError> {
    let reject_ports = |c: &Collected| match &c.ports {
        Some((n, _)) => Err(syntax(*n, format!("`ports` in a {} document", kind.name()))),
        None => Ok(()),
    };
    match kind {
        Kind::Matroid | Kind::Graph => {
            reject_ports(&c)?;
            let body = body_of(&c)?;
            let found = match body {
                Body::Sets { .. } => Kind::Matroid,
                Body::Graph { .. } => Kind::Graph,
            };
            if found != kind {
                return Err(syntax(1, format!("{kind} document with a {found} body")));
            }
            Ok(InputDocument::Matroid(body))
        }
        Kind::Perspective => {
            reject_ports(&c)?;
            if let Some((n, ..)) = c.edges.first() {
                return Err(syntax(*n, "`edge` in a perspective document"));
            }
            let (_, elements) = c.elements.clone().ok_or(ParseError::Missing("elements"))?;
            if let Some((n, ..)) = c.families.iter().find(|f| f.1.is_none()) {
                return Err(syntax(*n, "expected `m` or `mprime` before the set family"));
            }
            let known: HashSet<String> = elements.iter().cloned().collect();
            let m = single_family(&c.families, Some("m"), &known)?;
            let m_prime = single_family(&c.families, Some("mprime"), &known)?;
            Ok(InputDocument::Perspective { elements, m, m_prime })
        }
        Kind::Major => {
            let body = body_of(&c)?;
            let (n, ports) = c.ports.clone().ok_or(ParseError::Missing("ports"))?;
            let known: HashSet<String> = body.elements().into_iter().collect();
            check_members(n, &known, std::slice::from_ref(&ports))?;
            Ok(InputDocument::Major { body, ports })
        }
    }
}
