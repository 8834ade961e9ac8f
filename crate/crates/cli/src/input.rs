use std::fs;
use std::path::Path;

use locinv::fibres::FamilySpec;
use locinv::poly::OrderingKind;
use locinv::FieldDescriptor;

use crate::args::PolyInput;
use crate::error::CliError;

/// Generators with the ring they live in, after flags and file headers
/// have been merged.
#[derive(Debug, Clone)]
pub struct Germ {
    pub vars: Vec<String>,
    pub field: FieldDescriptor,
    pub ordering: OrderingKind,
    pub gens: Vec<String>,
    /// `inline` or the file path as given.
    pub source: String,
}

#[derive(Debug, Default)]
struct FileContents {
    vars: Option<Vec<String>>,
    field: Option<FieldDescriptor>,
    ordering: Option<OrderingKind>,
    gens: Vec<String>,
}

fn split_vars(s: &str) -> Vec<String> {
    s.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect()
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn parse_file(path: &Path) -> Result<FileContents, CliError> {
    let text = read(path)?;
    let mut out = FileContents::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| CliError::input(format!("{}:{}: {msg}", path.display(), idx + 1));
        match line.split_once(':') {
            Some((key, _)) if !out.gens.is_empty() => {
                return Err(at(format!("header `{}` after generators", key.trim())));
            }
            Some((key, value)) => match key.trim() {
                "vars" => out.vars = Some(split_vars(value)),
                "field" => out.field = Some(value.trim().parse().map_err(|e| at(format!("{e}")))?),
                "ordering" => out.ordering = Some(value.parse().map_err(at)?),
                other => return Err(at(format!("unknown header `{other}`"))),
            },
            None => out.gens.push(line.to_string()),
        }
    }
    Ok(out)
}

/// Exactly one of the inline expressions, `--file` and `--family` must be
/// present.
pub fn check_single_source(input: &PolyInput, family: bool) -> Result<(), CliError> {
    let count = usize::from(!input.exprs.is_empty()) + usize::from(input.file.is_some()) + usize::from(family);
    match count {
        1 => Ok(()),
        0 => Err(CliError::input("no input: give expressions, --file or --family")),
        _ => Err(CliError::input("give exactly one input source")),
    }
}

pub fn load_germ(input: &PolyInput) -> Result<Germ, CliError> {
    check_single_source(input, false)?;
    let (file, source) = match &input.file {
        Some(path) => (parse_file(path)?, path.display().to_string()),
        None => (FileContents { gens: input.exprs.clone(), ..FileContents::default() }, "inline".to_string()),
    };
    let vars = match (&input.ring.vars, file.vars) {
        (Some(v), _) => split_vars(v),
        (None, Some(v)) => v,
        (None, None) => return Err(CliError::input("missing --vars")),
    };
    if file.gens.is_empty() {
        return Err(CliError::input("no generators given"));
    }
    Ok(Germ {
        vars,
        field: input.ring.field.or(file.field).unwrap_or(FieldDescriptor::Q),
        ordering: input.ring.ordering.or(file.ordering).unwrap_or(OrderingKind::Ds),
        gens: file.gens,
        source,
    })
}

pub fn load_family(path: &Path) -> Result<FamilySpec, CliError> {
    let text = read(path)?;
    FamilySpec::parse(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}
