//! The textual quiver file format and relation-set export.
//!
//! Files are line-oriented UTF-8 with `#` comments:
//!
//! ```text
//! quiver <name>
//! param <ident>            # repeatable
//! vertex <ident> dim <int>
//! arrow <ident> : <src> -> <dst>
//! matrix <arrow-ident>     # followed by d_dst rows of d_src entries
//! dimvector <ident>=<int> ...
//! ```
//!
//! Matrix entries are sums of terms `<rational>`, `<rational>*<param>` or
//! `<param>` (plus `^<int>` powers), e.g. `1/2`, `lambda`, `-3*lambda`.
//! Parsing yields either a fully validated model or line/column-anchored
//! diagnostics, never a partial result.

use crate::model::{
    validate_representation, DimensionVector, Quiver, Representation, ScalarMatrix,
};
use crate::poly::{Labeling, PlueckerVariable};
use crate::relations::RelationSet;
use crate::scalar::Scalar;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

/// A parse or validation problem, anchored to the input text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

/// The parsed and validated content of a quiver file.
#[derive(Debug, Clone)]
pub struct QuiverFile {
    pub name: String,
    pub representation: Representation,
    pub sub_dims: DimensionVector,
}

struct Parser<'a> {
    lines: Vec<(usize, &'a str)>, // (1-based line number, comment-stripped text)
    pos: usize,
    diagnostics: Vec<Diagnostic>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, strip_comment(l)))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        Parser {
            lines,
            pos: 0,
            diagnostics: Vec::new(),
        }
    }

    fn error(&mut self, line: usize, column: usize, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic {
            line,
            column,
            message: message.into(),
        });
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<(usize, &'a str)> {
        let out = self.peek();
        if out.is_some() {
            self.pos += 1;
        }
        out
    }

    fn column_of(line: &str, token: &str) -> usize {
        line.find(token).map_or(1, |i| i + 1)
    }
}

/// Parses a matrix entry: a sum of rational/parameter terms with no spaces.
fn parse_entry(text: &str, declared: &[String]) -> Result<Scalar, String> {
    // split into signed terms at top-level + and -
    let chars: Vec<char> = text.chars().collect();
    if chars.is_empty() {
        return Err("empty entry".to_string());
    }
    let mut terms: Vec<(bool, String)> = Vec::new(); // (negative, body)
    let mut start = 0;
    let mut i = 0;
    let mut negative = false;
    while i < chars.len() {
        let c = chars[i];
        if (c == '+' || c == '-') && i > start {
            terms.push((negative, chars[start..i].iter().collect()));
            negative = c == '-';
            start = i + 1;
        } else if (c == '+' || c == '-') && i == start {
            if c == '-' {
                negative = !negative;
            }
            start = i + 1;
        }
        i += 1;
    }
    if start >= chars.len() {
        return Err(format!("dangling sign in `{text}`"));
    }
    terms.push((negative, chars[start..].iter().collect()));

    let mut acc = Scalar::zero();
    for (neg, body) in terms {
        let mut coeff = BigRational::from_integer(1.into());
        let mut param_part = Scalar::one();
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(format!("empty factor in `{text}`"));
            }
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let exp: u32 = e
                        .parse()
                        .map_err(|_| format!("invalid exponent `{e}` in `{text}`"))?;
                    (b, exp)
                }
                None => (factor, 1),
            };
            if base.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                let r = BigRational::from_str(base)
                    .map_err(|_| format!("invalid rational `{base}` in `{text}`"))?;
                for _ in 0..exp {
                    coeff *= &r;
                }
            } else if base.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                && !base.is_empty()
            {
                if !declared.iter().any(|p| p == base) {
                    return Err(format!("undeclared parameter `{base}`"));
                }
                let p = Scalar::parameter(base);
                for _ in 0..exp {
                    param_part = param_part.mul(&p);
                }
            } else {
                return Err(format!("invalid factor `{base}` in `{text}`"));
            }
        }
        let mut term = param_part.scale(&coeff);
        if neg {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Parse a quiver file into a validated model, or report every problem found.
pub fn parse_quiver_file(text: &str) -> Result<QuiverFile, Vec<Diagnostic>> {
    let mut p = Parser::new(text);

    let mut name: Option<String> = None;
    let mut params: Vec<String> = Vec::new();
    let mut vertices: Vec<(usize, String, usize)> = Vec::new(); // (line, name, dim)
    let mut arrows: Vec<(usize, String, String, String)> = Vec::new();
    let mut matrices: BTreeMap<String, (usize, Vec<Vec<Scalar>>)> = BTreeMap::new();
    let mut dimvector: Vec<(usize, String, usize)> = Vec::new();

    match p.peek() {
        None => {
            return Err(vec![Diagnostic {
                line: 1,
                column: 1,
                message: "no quiver declared".to_string(),
            }])
        }
        Some((line, l)) => {
            let mut tokens = l.split_whitespace();
            if tokens.next() != Some("quiver") {
                p.error(line, 1, "expected `quiver <name>` as the first declaration");
            } else {
                match tokens.next() {
                    Some(n) => name = Some(n.to_string()),
                    None => p.error(line, Parser::column_of(l, "quiver"), "missing quiver name"),
                }
                p.pos += 1;
            }
        }
    }

    while let Some((line, l)) = p.bump() {
        let mut tokens = l.split_whitespace();
        let Some(keyword) = tokens.next() else {
            continue;
        };
        match keyword {
            "param" => match tokens.next() {
                Some(id) => {
                    if params.iter().any(|q| q == id) {
                        p.error(
                            line,
                            Parser::column_of(l, id),
                            format!("duplicate parameter `{id}`"),
                        );
                    } else {
                        params.push(id.to_string());
                    }
                }
                None => p.error(line, 1, "param: missing identifier"),
            },
            "vertex" => {
                let id = tokens.next();
                let kw = tokens.next();
                let dim = tokens.next();
                match (id, kw, dim) {
                    (Some(id), Some("dim"), Some(d)) => match d.parse::<usize>() {
                        Ok(d) => {
                            if vertices.iter().any(|(_, v, _)| v == id) {
                                p.error(
                                    line,
                                    Parser::column_of(l, id),
                                    format!("duplicate vertex `{id}`"),
                                );
                            } else {
                                vertices.push((line, id.to_string(), d));
                            }
                        }
                        Err(_) => p.error(
                            line,
                            Parser::column_of(l, d),
                            format!("invalid dimension `{d}`"),
                        ),
                    },
                    _ => p.error(line, 1, "expected `vertex <ident> dim <int>`"),
                }
            }
            "arrow" => {
                // arrow <ident> : <src> -> <dst>
                let rest: Vec<&str> = tokens.collect();
                if rest.len() == 5 && rest[1] == ":" && rest[3] == "->" {
                    let (id, src, dst) = (rest[0], rest[2], rest[4]);
                    if arrows.iter().any(|(_, a, _, _)| a == id) {
                        p.error(
                            line,
                            Parser::column_of(l, id),
                            format!("duplicate arrow `{id}`"),
                        );
                    } else {
                        arrows.push((line, id.to_string(), src.to_string(), dst.to_string()));
                    }
                } else {
                    p.error(line, 1, "expected `arrow <ident> : <src> -> <dst>`");
                }
            }
            "matrix" => {
                let Some(id) = tokens.next() else {
                    p.error(line, 1, "matrix: missing arrow identifier");
                    continue;
                };
                let Some((_, _, src, dst)) = arrows.iter().find(|(_, a, _, _)| a == id) else {
                    p.error(
                        line,
                        Parser::column_of(l, id),
                        format!("matrix for unknown arrow `{id}`"),
                    );
                    continue;
                };
                let d_src = vertices
                    .iter()
                    .find(|(_, v, _)| v == src)
                    .map(|&(_, _, d)| d);
                let d_dst = vertices
                    .iter()
                    .find(|(_, v, _)| v == dst)
                    .map(|&(_, _, d)| d);
                let (Some(d_src), Some(d_dst)) = (d_src, d_dst) else {
                    p.error(
                        line,
                        1,
                        format!(
                            "matrix `{id}`: endpoints `{src}`/`{dst}` are not declared vertices"
                        ),
                    );
                    continue;
                };
                if matrices.contains_key(id) {
                    p.error(
                        line,
                        Parser::column_of(l, id),
                        format!("duplicate matrix for arrow `{id}`"),
                    );
                    continue;
                }
                const DIRECTIVES: [&str; 6] =
                    ["quiver", "param", "vertex", "arrow", "matrix", "dimvector"];
                let mut rows = Vec::with_capacity(d_dst);
                for r in 0..d_dst {
                    // a directive keyword means the matrix block ended early
                    let next = p.peek();
                    if next.is_none_or(|(_, t)| {
                        t.split_whitespace()
                            .next()
                            .is_some_and(|w| DIRECTIVES.contains(&w))
                    }) {
                        p.error(
                            line,
                            1,
                            format!(
                                "matrix `{id}`: expected {d_dst} rows of {d_src} entries, found {r}"
                            ),
                        );
                        break;
                    }
                    let Some((row_line, row_text)) = p.bump() else {
                        unreachable!("peeked above");
                    };
                    let entries: Vec<&str> = row_text.split_whitespace().collect();
                    if entries.len() != d_src {
                        p.error(
                            row_line,
                            1,
                            format!(
                                "matrix `{id}`: row has {} entries, expected {d_src} (shape {d_dst}x{d_src})",
                                entries.len()
                            ),
                        );
                    }
                    let mut row = Vec::with_capacity(d_src);
                    for entry in entries {
                        match parse_entry(entry, &params) {
                            Ok(s) => row.push(s),
                            Err(msg) => {
                                p.error(row_line, Parser::column_of(row_text, entry), msg);
                                row.push(Scalar::zero());
                            }
                        }
                    }
                    row.resize(d_src, Scalar::zero());
                    rows.push(row);
                }
                if rows.len() == d_dst {
                    matrices.insert(id.to_string(), (line, rows));
                }
            }
            "dimvector" => {
                for item in tokens {
                    match item.split_once('=') {
                        Some((v, n)) => match n.parse::<usize>() {
                            Ok(n) => dimvector.push((line, v.to_string(), n)),
                            Err(_) => p.error(
                                line,
                                Parser::column_of(l, item),
                                format!("invalid dimension `{n}`"),
                            ),
                        },
                        None => p.error(
                            line,
                            Parser::column_of(l, item),
                            format!("expected `<vertex>=<int>`, got `{item}`"),
                        ),
                    }
                }
            }
            other => p.error(
                line,
                Parser::column_of(l, other),
                format!("unknown directive `{other}`"),
            ),
        }
    }

    // cross-reference checks
    let vertex_names: Vec<String> = vertices.iter().map(|(_, v, _)| v.clone()).collect();
    for (line, id, src, dst) in &arrows {
        for endpoint in [src, dst] {
            if !vertex_names.contains(endpoint) {
                p.error(
                    *line,
                    1,
                    format!("arrow `{id}`: unknown vertex `{endpoint}`"),
                );
            }
        }
        if !matrices.contains_key(id) {
            p.error(*line, 1, format!("arrow `{id}` has no matrix"));
        }
    }
    let mut sub_entries: BTreeMap<String, usize> = BTreeMap::new();
    for (line, v, n) in &dimvector {
        if !vertex_names.contains(v) {
            p.error(*line, 1, format!("dimvector: unknown vertex `{v}`"));
        } else if sub_entries.insert(v.clone(), *n).is_some() {
            p.error(*line, 1, format!("dimvector: vertex `{v}` listed twice"));
        }
    }
    for (line, v, d) in &vertices {
        match sub_entries.get(v) {
            None => p.error(*line, 1, format!("dimvector: vertex `{v}` missing")),
            Some(&e) if e > *d => p.error(
                *line,
                1,
                format!("dimvector: entry {e} at `{v}` exceeds dimension {d}"),
            ),
            _ => {}
        }
    }
    if name.is_none() && p.diagnostics.is_empty() {
        p.error(1, 1, "no quiver declared");
    }
    if !p.diagnostics.is_empty() {
        return Err(p.diagnostics);
    }

    let quiver = Quiver::new(
        vertex_names.clone(),
        arrows
            .iter()
            .map(|(_, a, s, t)| (a.clone(), s.clone(), t.clone()))
            .collect(),
    )
    .expect("cross-references checked above");
    let dims = DimensionVector::new(vertices.iter().map(|&(_, _, d)| d).collect());
    let arrow_matrices: Vec<ScalarMatrix> = arrows
        .iter()
        .map(|(_, a, _, _)| ScalarMatrix::from_rows(matrices[a].1.clone()))
        .collect();
    let representation = Representation::new(quiver, dims, arrow_matrices, params);
    if let Err(violations) = validate_representation(&representation) {
        return Err(violations
            .into_iter()
            .map(|v| Diagnostic {
                line: 1,
                column: 1,
                message: v.to_string(),
            })
            .collect());
    }
    let sub_dims = DimensionVector::new(vertex_names.iter().map(|v| sub_entries[v]).collect());
    Ok(QuiverFile {
        name: name.expect("present when no diagnostics"),
        representation,
        sub_dims,
    })
}

/// Space-free entry rendering, parseable by `parse_entry`.
fn render_entry(s: &Scalar) -> String {
    format!("{s}").replace(' ', "")
}

impl QuiverFile {
    /// Canonical printing; `parse(print(f))` reproduces `f` exactly for
    /// files already in canonical form.
    pub fn to_canonical_string(&self) -> String {
        let rep = &self.representation;
        let quiver = rep.quiver();
        let mut out = String::new();
        let _ = writeln!(out, "quiver {}", self.name);
        for param in rep.parameters() {
            let _ = writeln!(out, "param {param}");
        }
        for (i, v) in quiver.vertex_names().enumerate() {
            let _ = writeln!(out, "vertex {v} dim {}", rep.dims().entries()[i]);
        }
        for (_, arrow) in quiver.arrows() {
            let _ = writeln!(
                out,
                "arrow {} : {} -> {}",
                arrow.id,
                quiver.vertex_name(arrow.source),
                quiver.vertex_name(arrow.target)
            );
        }
        for (idx, arrow) in quiver.arrows() {
            let m = rep.matrix(idx);
            let _ = writeln!(out, "matrix {}", arrow.id);
            for r in 0..m.nrows() {
                let row: Vec<String> = (0..m.ncols()).map(|c| render_entry(&m[(r, c)])).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
        let dv: Vec<String> = quiver
            .vertex_names()
            .enumerate()
            .map(|(i, v)| format!("{v}={}", self.sub_dims.entries()[i]))
            .collect();
        let _ = writeln!(out, "dimvector {}", dv.join(" "));
        out
    }
}

/// Export target for a relation set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// One labeled relation per line, after a count header.
    Plain,
    /// A ring declaration plus an ideal, loadable by a computer algebra
    /// system (Singular syntax).
    CasScript,
}

fn cas_variable_name(rep: &Representation, var: &PlueckerVariable) -> String {
    let labels: Vec<String> = var
        .subset
        .members()
        .iter()
        .map(|&m| rep.global_label(var.subset.vertex(), m).to_string())
        .collect();
    format!("D_{}", labels.join("_"))
}

/// Renders a relation set as text.
pub fn export_relations(
    rep: &Representation,
    rels: &RelationSet,
    format: ExportFormat,
    labeling: Labeling,
) -> String {
    match format {
        ExportFormat::Plain => {
            let mut out = String::new();
            let _ = writeln!(out, "# {} relation(s)", rels.len());
            for r in rels.relations() {
                let _ = writeln!(
                    out,
                    "{}: {}",
                    r.label.render(rep, labeling),
                    r.poly.canonical_string(rep, labeling)
                );
            }
            out
        }
        ExportFormat::CasScript => {
            let mut vars: Vec<String> = rep.parameters().to_vec();
            for (v, name) in rep.quiver().vertex_names().enumerate() {
                let vertex = crate::model::VertexIdx(v);
                let _ = name;
                let d = rep.dim(vertex);
                let e = rels.sub_dims().get(vertex);
                for subset in crate::combinatorics::k_subsets(vertex, d, e)
                    .expect("within checked desk-scale bounds")
                {
                    vars.push(cas_variable_name(rep, &PlueckerVariable::new(subset)));
                }
            }
            let mut out = String::new();
            let _ = writeln!(out, "ring R = 0, ({}), dp;", vars.join(", "));
            let gens: Vec<String> = rels
                .relations()
                .iter()
                .map(|r| r.poly.render_with(&|v| cas_variable_name(rep, v)))
                .collect();
            if gens.is_empty() {
                let _ = writeln!(out, "ideal I = 0;");
            } else {
                let _ = writeln!(out, "ideal I =\n  {};", gens.join(",\n  "));
            }
            out
        }
    }
}
