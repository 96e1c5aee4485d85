//! Edge-list and DOT-subset readers.

use kappatree::Graph;

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One edge per line as two tokens; a single token declares a vertex.
    #[default]
    Edgelist,
    /// An undirected `graph { ... }` with node ids and `--` edges only.
    DotSubset,
}

/// Parses `text` and checks that the result is a connected graph.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph, CliError> {
    let (vertices, edges) = match format {
        Format::Edgelist => edgelist(text)?,
        Format::DotSubset => dot_subset(text)?,
    };
    let g = Graph::new(vertices, edges)?;
    g.require_connected()?;
    Ok(g)
}

type Parsed = (Vec<String>, Vec<(String, String)>);

fn edgelist(text: &str) -> Result<Parsed, CliError> {
    let (mut vertices, mut edges) = (Vec::new(), Vec::new());
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => vertices.push(v.to_string()),
            [a, b] => edges.push((a.to_string(), b.to_string())),
            _ => {
                return Err(CliError::Parse {
                    line: i + 1,
                    message: format!("expected one or two tokens, found {}", tokens.len()),
                })
            }
        }
    }
    Ok((vertices, edges))
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Id(String),
    Edge,
    Open,
    Close,
    Semi,
    Comma,
    Equals,
    LBracket,
    RBracket,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| CliError::Parse { line, message };
        if raw.trim_start().starts_with('#') {
            continue;
        }
        let mut chars = raw.chars().peekable();
        while let Some(ch) = chars.next() {
            let token = match ch {
                c if c.is_whitespace() => continue,
                '/' if chars.peek() == Some(&'/') => break,
                '{' => Token::Open,
                '}' => Token::Close,
                ';' => Token::Semi,
                ',' => Token::Comma,
                '=' => Token::Equals,
                '[' => Token::LBracket,
                ']' => Token::RBracket,
                '-' if chars.peek() == Some(&'-') => {
                    chars.next();
                    Token::Edge
                }
                '-' if chars.peek() == Some(&'>') => {
                    return Err(err("directed edges are not supported".into()))
                }
                '"' => {
                    let mut id = String::new();
                    loop {
                        match chars.next() {
                            Some('"') => break,
                            Some('\\') => id.extend(chars.next()),
                            Some(c) => id.push(c),
                            None => return Err(err("unterminated string".into())),
                        }
                    }
                    Token::Id(id)
                }
                c if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' => {
                    let mut id = c.to_string();
                    while let Some(&c) = chars.peek() {
                        if c.is_alphanumeric() || c == '_' || c == '.' {
                            id.push(c);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    Token::Id(id)
                }
                c => return Err(err(format!("unexpected character `{c}`"))),
            };
            out.push((line, token));
        }
    }
    Ok(out)
}

/// Accepts `[strict] graph [name] { stmt* }` where a statement is a node id
/// or a chain `a -- b -- c`, optionally followed by an attribute list that
/// is read and ignored. `node [...]` and `edge [...]` defaults are skipped.
fn dot_subset(text: &str) -> Result<Parsed, CliError> {
    let tokens = tokenize(text)?;
    let last_line = tokens.last().map_or(1, |t| t.0);
    let mut it = tokens.into_iter().peekable();
    let err = |line: usize, message: &str| CliError::Parse {
        line,
        message: message.to_string(),
    };

    let mut header = Vec::new();
    loop {
        match it.next() {
            Some((_, Token::Open)) => break,
            Some((line, Token::Id(id))) => header.push((line, id)),
            Some((line, _)) => return Err(err(line, "expected `graph {`")),
            None => return Err(err(last_line, "missing `graph {`")),
        }
    }
    let keywords: Vec<String> = header
        .iter()
        .map(|(_, id)| id.to_ascii_lowercase())
        .collect();
    let rest = match keywords.as_slice() {
        [s, rest @ ..] if s == "strict" => rest,
        all => all,
    };
    let ok = matches!(rest, [g] | [g, _] if g == "graph");
    if !ok {
        let line = header.first().map_or(1, |h| h.0);
        let message = if keywords.iter().any(|k| k == "digraph") {
            "directed graphs are not supported"
        } else {
            "expected `graph {`"
        };
        return Err(err(line, message));
    }

    let (mut vertices, mut edges) = (Vec::new(), Vec::new());
    loop {
        let (line, token) = it.next().ok_or_else(|| err(last_line, "missing `}`"))?;
        match token {
            Token::Close => break,
            Token::Semi | Token::Comma => {}
            Token::Id(first) => {
                if matches!(it.peek(), Some((_, Token::Equals))) {
                    return Err(err(line, "graph attributes are not supported"));
                }
                let mut chain = vec![first];
                while matches!(it.peek(), Some((_, Token::Edge))) {
                    it.next();
                    match it.next() {
                        Some((_, Token::Id(id))) => chain.push(id),
                        _ => return Err(err(line, "expected a node id after `--`")),
                    }
                }
                if matches!(it.peek(), Some((_, Token::LBracket))) {
                    loop {
                        match it.next() {
                            Some((_, Token::RBracket)) => break,
                            Some(_) => {}
                            None => return Err(err(line, "unterminated attribute list")),
                        }
                    }
                }
                let defaults = matches!(chain[0].to_ascii_lowercase().as_str(), "node" | "edge");
                if chain.len() == 1 && !defaults {
                    vertices.extend(chain);
                } else if chain.len() > 1 {
                    edges.extend(chain.windows(2).map(|w| (w[0].clone(), w[1].clone())));
                }
            }
            _ => return Err(err(line, "expected a node id or edge")),
        }
    }
    if let Some((line, _)) = it.next() {
        return Err(err(line, "trailing input after `}`"));
    }
    Ok((vertices, edges))
}

/// Renders a graph in the edge-list format, vertices first.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.labels() {
        out.push_str(v);
        out.push('\n');
    }
    for (a, b) in g.edge_labels() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
