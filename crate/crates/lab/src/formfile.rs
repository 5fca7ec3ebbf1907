//! Form files: UTF-8 text in the polynomial grammar, possibly over several
//! lines. Lines starting with `#` are comments; a comment of the form
//! `# vars: X,Y,Z,U,V,W` declares the form variables (operator names are the
//! lower-case versions). Without a declaration the variables are `X,Y,Z,U,V`.

use std::path::Path;
use std::sync::Arc;

use gorenstein_core::poly::{parse_poly, Polynomial, Side, VariableContext};
use gorenstein_core::Error;

use crate::{LabError, Result};

/// Parses a comma-separated list of form variable names.
pub fn parse_vars(list: &str) -> Result<Arc<VariableContext>> {
    let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if names.is_empty() {
        return Err(LabError::Usage("empty variable list".into()));
    }
    Ok(VariableContext::from_upper(&names)?)
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

/// Reads a form from `text`; `vars` overrides any declaration in the file.
pub fn read_form(text: &str, vars: Option<&str>, path: &str) -> Result<Polynomial> {
    let mut declared = None;
    // Comment lines are blanked rather than removed so offsets keep their line numbers.
    let body: String = text
        .lines()
        .map(|line| {
            let trimmed = line.trim_start();
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(list) = comment.trim().strip_prefix("vars:") {
                    declared = Some(list.trim().to_string());
                }
                String::new()
            } else {
                line.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    let ctx = match vars.map(str::to_string).or(declared) {
        Some(list) => parse_vars(&list)?,
        None => VariableContext::threefold(),
    };
    parse_poly(&body, &ctx, Side::S).map_err(|e| {
        let position = match &e {
            Error::Syntax { position, .. }
            | Error::UnknownVariable { position, .. }
            | Error::WrongSide { position, .. } => *position,
            _ => return LabError::Core(e),
        };
        let (line, column) = line_column(&body, position);
        LabError::Parse {
            path: path.to_string(),
            line,
            column,
            source: e,
        }
    })
}

pub fn load_form(path: &Path, vars: Option<&str>) -> Result<Polynomial> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| LabError::Io {
        path: display.clone(),
        source,
    })?;
    read_form(&text, vars, &display)
}
