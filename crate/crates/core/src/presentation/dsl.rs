use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Arrow, Presentation, PresentationError, Relation};

/// Parses the line-oriented quiver DSL:
///
/// ```text
/// vertex v w
/// arrow x: v -> w
/// relation x*y - 2*z*t   # comment
/// ```
pub fn parse_quiver_dsl(text: &str) -> Result<Presentation, PresentationError> {
    let mut pres = Presentation::default();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap();
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (kw, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed, ""),
        };
        let rest_col = indent + kw.len() + 1;
        match kw {
            "vertex" | "vertices" => {
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(syntax(line_no, rest_col, "expected at least one vertex name"));
                }
                for n in names {
                    check_ident(n, line_no, col_of(raw, n), true)?;
                    if pres.quiver.vertex(n).is_some() {
                        return Err(syntax(line_no, col_of(raw, n), &format!("duplicate vertex '{}'", n)));
                    }
                    pres.quiver.vertices.push(n.to_string());
                }
            }
            "arrow" => {
                let (name, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line_no, rest_col, "expected 'arrow NAME: SOURCE -> TARGET'"))?;
                let name = name.trim();
                check_ident(name, line_no, col_of(raw, name), false)?;
                if pres.quiver.arrow(name).is_some() {
                    return Err(syntax(line_no, col_of(raw, name), &format!("duplicate arrow '{}'", name)));
                }
                let (s, t) = ends
                    .split_once("->")
                    .ok_or_else(|| syntax(line_no, col_of(raw, ends.trim()), "expected '->'"))?;
                let (s, t) = (s.trim(), t.trim());
                let source = pres.quiver.vertex(s).ok_or_else(|| unknown(line_no, "vertex", s))?;
                let target = pres.quiver.vertex(t).ok_or_else(|| unknown(line_no, "vertex", t))?;
                pres.quiver.arrows.push(Arrow { name: name.to_string(), source, target });
            }
            "relation" => {
                let rel = parse_combination(&pres, rest, line_no, rest_col)?;
                check_relation(&pres, &rel, line_no)?;
                pres.relations.push(rel);
            }
            other => {
                return Err(syntax(line_no, indent + 1, &format!("unknown keyword '{}'", other)));
            }
        }
    }
    Ok(pres)
}

fn syntax(line: usize, col: usize, msg: &str) -> PresentationError {
    PresentationError::Syntax { line, col, msg: msg.to_string() }
}

fn unknown(line: usize, kind: &'static str, name: &str) -> PresentationError {
    PresentationError::UnknownName { line, kind, name: name.to_string() }
}

fn col_of(raw: &str, piece: &str) -> usize {
    raw.find(piece).map_or(1, |i| i + 1)
}

fn check_ident(s: &str, line: usize, col: usize, allow_numeric: bool) -> Result<(), PresentationError> {
    let word = !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
    let numeric = s.chars().next().is_some_and(|c| c.is_ascii_digit());
    if word && (allow_numeric || !numeric) {
        Ok(())
    } else {
        Err(syntax(line, col, &format!("invalid name '{}'", s)))
    }
}

fn parse_combination(
    pres: &Presentation,
    text: &str,
    line: usize,
    col0: usize,
) -> Result<Relation, PresentationError> {
    // Split into signed terms.
    let mut terms: Vec<(bool, usize, String)> = Vec::new();
    let mut cur = String::new();
    let mut cur_col = col0;
    let mut sign = true;
    let mut pending_sign = false;
    for (i, ch) in text.char_indices() {
        match ch {
            '+' | '-' => {
                if !cur.trim().is_empty() {
                    terms.push((sign, cur_col, std::mem::take(&mut cur)));
                } else if pending_sign {
                    return Err(syntax(line, col0 + i, "two signs in a row"));
                }
                cur.clear();
                sign = ch == '+';
                pending_sign = true;
                cur_col = col0 + i + 1;
            }
            _ => {
                if cur.trim().is_empty() && !ch.is_whitespace() {
                    cur_col = col0 + i;
                    pending_sign = false;
                }
                cur.push(ch);
            }
        }
    }
    if pending_sign {
        return Err(syntax(line, col0 + text.len(), "dangling sign"));
    }
    if !cur.trim().is_empty() {
        terms.push((sign, cur_col, cur));
    }
    if terms.is_empty() {
        return Err(syntax(line, col0, "empty relation"));
    }
    let mut out: Vec<(BigRational, Vec<usize>)> = Vec::new();
    for (positive, col, term) in terms {
        let mut coeff = BigRational::one();
        let mut path = Vec::new();
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(syntax(line, col, "empty factor in product"));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                if !path.is_empty() {
                    return Err(syntax(line, col, "coefficients must precede the path"));
                }
                coeff *= parse_rational(factor).ok_or_else(|| syntax(line, col, &format!("bad coefficient '{}'", factor)))?;
            } else {
                let a = pres.quiver.arrow(factor).ok_or_else(|| unknown(line, "arrow", factor))?;
                path.push(a);
            }
        }
        if path.is_empty() {
            return Err(PresentationError::BadRelation { line, msg: "relation term without a path".into() });
        }
        if !positive {
            coeff = -coeff;
        }
        match out.iter_mut().find(|(_, p)| *p == path) {
            Some((c, _)) => *c += coeff,
            None => out.push((coeff, path)),
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    if out.is_empty() {
        return Err(PresentationError::BadRelation { line, msg: "relation is identically zero".into() });
    }
    Ok(Relation { terms: out })
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        None
    } else {
        Some(BigRational::new(n, d))
    }
}

fn check_relation(pres: &Presentation, rel: &Relation, line: usize) -> Result<(), PresentationError> {
    let q = &pres.quiver;
    for (_, p) in &rel.terms {
        for w in p.windows(2) {
            if q.arrows[w[0]].target != q.arrows[w[1]].source {
                return Err(PresentationError::BadRelation {
                    line,
                    msg: format!("'{}' is not a path: {} does not end where {} starts", q.path_name(p), q.arrows[w[0]].name, q.arrows[w[1]].name),
                });
            }
        }
    }
    let (s0, t0) = (q.path_source(&rel.terms[0].1), q.path_target(&rel.terms[0].1));
    for (_, p) in &rel.terms {
        if q.path_source(p) != s0 || q.path_target(p) != t0 {
            return Err(PresentationError::BadRelation {
                line,
                msg: format!("paths '{}' and '{}' are not parallel", q.path_name(&rel.terms[0].1), q.path_name(p)),
            });
        }
    }
    for (_, p) in &rel.terms {
        if p.len() < 2 {
            return Err(PresentationError::BadRelation {
                line,
                msg: format!("path '{}' has length {} < 2", q.path_name(p), p.len()),
            });
        }
    }
    Ok(())
}
