//! Factor specs: `family:size`, `file:PATH`, or `paw`.

use std::fs;

use wreathlab::{format, Family, Graph};

use crate::CliError;

#[derive(Debug, Clone)]
pub struct Factor {
    pub spec: String,
    pub graph: Graph,
}

pub fn resolve(spec: &str) -> Result<Factor, CliError> {
    let graph = if spec == "paw" {
        Graph::paw()
    } else if let Some(path) = spec.strip_prefix("file:") {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
        format::parse(&text)?
    } else {
        let (family, size) = spec.split_once(':').ok_or_else(|| {
            CliError::Usage(format!(
                "factor spec {spec:?} is not family:size, file:PATH or paw"
            ))
        })?;
        let family: Family = family.parse()?;
        let n: usize = size
            .parse()
            .map_err(|_| CliError::Usage(format!("bad size {size:?} in factor spec {spec:?}")))?;
        Graph::family(family, n)?
    };
    Ok(Factor {
        spec: spec.to_string(),
        graph,
    })
}

/// Comma-separated 1-based labels to 0-based vertices.
pub fn parse_labels(list: &str, n: usize) -> Result<Vec<usize>, CliError> {
    if list.trim().is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|t| {
            let label: usize = t
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad vertex label {t:?}")))?;
            if label == 0 || label > n {
                return Err(CliError::Usage(format!(
                    "vertex label {label} outside 1..={n}"
                )));
            }
            Ok(label - 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs() {
        assert_eq!(resolve("complete:4").unwrap().graph, Graph::complete(4));
        assert_eq!(resolve("C:5").unwrap().graph, Graph::cycle(5));
        assert_eq!(resolve("paw").unwrap().graph, Graph::paw());
        assert!(matches!(resolve("cycle"), Err(CliError::Usage(_))));
        assert!(matches!(resolve("cycle:x"), Err(CliError::Usage(_))));
        assert!(matches!(resolve("cycle:2"), Err(CliError::Usage(_))));
        assert!(matches!(resolve("star:4"), Err(CliError::Usage(_))));
        assert!(matches!(
            resolve("file:/nonexistent/graph.txt"),
            Err(CliError::Io(_))
        ));
    }

    #[test]
    fn labels() {
        assert_eq!(parse_labels("3,5, 6", 9).unwrap(), vec![2, 4, 5]);
        assert_eq!(parse_labels("", 9).unwrap(), Vec::<usize>::new());
        assert!(parse_labels("0", 9).is_err());
        assert!(parse_labels("10", 9).is_err());
        assert!(parse_labels("a", 9).is_err());
    }
}
