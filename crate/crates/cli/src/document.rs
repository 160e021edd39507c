//! JSON input documents: an IFS with optional probabilities, every number an
//! exact rational string.

use serde_json::Value;
use thiserror::Error;

use fracnet::geometry::{RatVec, Rational, SignedPermutation, Similarity};
use fracnet::ifs::IfsSystem;
use fracnet::measures::SelfSimilarMeasure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

impl DocumentError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        DocumentError::Field {
            field: field.into(),
            message: message.into(),
        }
    }

    pub fn field_path(&self) -> Option<&str> {
        match self {
            DocumentError::Field { field, .. } => Some(field),
            DocumentError::Syntax { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IfsDocument {
    pub sys: IfsSystem,
    pub probs: Option<Vec<Rational>>,
}

impl IfsDocument {
    pub fn measure(&self) -> Option<SelfSimilarMeasure> {
        self.probs.as_ref().map(|p| {
            SelfSimilarMeasure::new(self.sys.clone(), p.clone()).expect("checked at parse time")
        })
    }
}

fn rational(v: &Value, path: &str) -> Result<Rational, DocumentError> {
    match v {
        Value::String(s) => s.parse().map_err(|_| {
            DocumentError::field(path, format!("\"{s}\" is not an exact rational p/q"))
        }),
        Value::Number(n) => Err(DocumentError::field(
            path,
            format!("{n} must be given as a string such as \"1/2\""),
        )),
        _ => Err(DocumentError::field(path, "expected a rational string")),
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, DocumentError> {
    v.as_array()
        .ok_or_else(|| DocumentError::field(path, "expected an array"))
}

fn rational_list(v: &Value, path: &str) -> Result<Vec<Rational>, DocumentError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| rational(x, &format!("{path}[{i}]")))
        .collect()
}

fn rotation(v: &Value, dim: usize, path: &str) -> Result<SignedPermutation, DocumentError> {
    let perm_path = format!("{path}.perm");
    let perm = array(v.get("perm").unwrap_or(&Value::Null), &perm_path)?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|p| p as usize)
                .ok_or_else(|| DocumentError::field(&perm_path, "entries must be axis indices"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let signs_path = format!("{path}.signs");
    let signs = array(v.get("signs").unwrap_or(&Value::Null), &signs_path)?
        .iter()
        .map(|x| match x.as_i64() {
            Some(1) => Ok(1i8),
            Some(-1) => Ok(-1i8),
            _ => Err(DocumentError::field(&signs_path, "entries must be 1 or -1")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if perm.len() != dim {
        return Err(DocumentError::field(
            perm_path,
            format!("expected {dim} entries"),
        ));
    }
    SignedPermutation::new(perm, signs).map_err(|e| DocumentError::field(path, e.to_string()))
}

pub fn parse_document(text: &str) -> Result<IfsDocument, DocumentError> {
    let root: Value = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let dim = root
        .get("dim")
        .and_then(Value::as_u64)
        .filter(|&d| d >= 1)
        .ok_or_else(|| DocumentError::field("dim", "expected a positive integer"))?
        as usize;
    let raw_maps = array(root.get("maps").unwrap_or(&Value::Null), "maps")?;
    if raw_maps.is_empty() {
        return Err(DocumentError::field("maps", "at least one map is required"));
    }
    let mut maps = Vec::with_capacity(raw_maps.len());
    for (i, m) in raw_maps.iter().enumerate() {
        let at = |f: &str| format!("maps[{i}].{f}");
        let ratio = rational(m.get("ratio").unwrap_or(&Value::Null), &at("ratio"))?;
        if !(ratio.is_positive() && ratio < Rational::one()) {
            return Err(DocumentError::field(
                at("ratio"),
                format!("{ratio} is not in (0, 1)"),
            ));
        }
        let trans = rational_list(
            m.get("translation").unwrap_or(&Value::Null),
            &at("translation"),
        )?;
        if trans.len() != dim {
            return Err(DocumentError::field(
                at("translation"),
                format!("expected {dim} entries, found {}", trans.len()),
            ));
        }
        let rot = match m.get("rotation") {
            None | Some(Value::Null) => SignedPermutation::identity(dim),
            Some(r) => rotation(r, dim, &at("rotation"))?,
        };
        let s = Similarity::new(ratio, rot, RatVec::new(trans))
            .map_err(|e| DocumentError::field(format!("maps[{i}]"), e.to_string()))?;
        maps.push(s);
    }
    let sys = IfsSystem::new(maps).map_err(|e| DocumentError::field("maps", e.to_string()))?;
    let probs = match root.get("probabilities") {
        None | Some(Value::Null) => None,
        Some(p) => {
            let probs = rational_list(p, "probabilities")?;
            SelfSimilarMeasure::new(sys.clone(), probs.clone())
                .map_err(|e| DocumentError::field("probabilities", e.to_string()))?;
            Some(probs)
        }
    };
    Ok(IfsDocument { sys, probs })
}

#[cfg(test)]
mod tests {
    use super::*;

    const HALVES: &str = r#"{
        "dim": 1,
        "maps": [
            {"ratio": "1/2", "translation": ["-1/4"]},
            {"ratio": "1/2", "translation": ["1/4"]}
        ],
        "probabilities": ["1/2", "1/2"]
    }"#;

    #[test]
    fn parses_a_measure() {
        let doc = parse_document(HALVES).unwrap();
        assert_eq!(doc.sys.len(), 2);
        assert!(doc.measure().is_some());
    }

    #[test]
    fn decimal_ratio_names_the_field() {
        let text = HALVES.replacen(
            "\"1/2\", \"translation\": [\"-1/4\"]",
            "\"0.5\", \"translation\": [\"-1/4\"]",
            1,
        );
        let err = parse_document(&text).unwrap_err();
        assert_eq!(err.field_path(), Some("maps[0].ratio"));
    }

    #[test]
    fn json_number_is_rejected() {
        let text = HALVES.replacen(
            "\"1/2\", \"translation\": [\"-1/4\"]",
            "0.5, \"translation\": [\"-1/4\"]",
            1,
        );
        let err = parse_document(&text).unwrap_err();
        assert_eq!(err.field_path(), Some("maps[0].ratio"));
    }

    #[test]
    fn probabilities_must_sum_to_one() {
        let text = HALVES.replace("[\"1/2\", \"1/2\"]", "[\"1/2\", \"1/3\"]");
        let err = parse_document(&text).unwrap_err();
        assert_eq!(err.field_path(), Some("probabilities"));
        assert!(err.to_string().contains("Σp_i=1"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_document("{\n  \"dim\": 1,\n  \"maps\": [\n}").unwrap_err();
        assert!(matches!(err, DocumentError::Syntax { line: 4, .. }));
    }

    #[test]
    fn rotations_are_checked() {
        let text = r#"{"dim": 2, "maps": [{"ratio": "1/2", "translation": ["0", "0"],
            "rotation": {"perm": [0, 0], "signs": [1, 1]}}]}"#;
        let err = parse_document(text).unwrap_err();
        assert_eq!(err.field_path(), Some("maps[0].rotation"));
    }
}
