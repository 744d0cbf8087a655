//! Quiver and orbit input documents.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use qloci::{BipartiteQuiver, Error, LacingDiagram, OrbitData};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    n: Option<usize>,
    dy: Vec<usize>,
    dx: Vec<usize>,
    orbit: Option<OrbitDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrbitDoc {
    lacing: Option<Vec<Vec<Vec<u8>>>>,
    multiplicities: Option<BTreeMap<String, usize>>,
}

/// A parsed input: the quiver, and the orbit when one was given.
#[derive(Debug)]
pub struct Instance {
    pub quiver: BipartiteQuiver,
    pub orbit: Option<OrbitData>,
    /// The diagram the orbit was given by, if any.
    pub lacing: Option<LacingDiagram>,
}

impl Instance {
    pub fn require_orbit(&self) -> Result<&OrbitData, Error> {
        self.orbit.as_ref().ok_or_else(|| Error::InvalidOrbit("input has no \"orbit\"".into()))
    }
}

/// Reads `path`, or standard input for `-`.
pub fn read_source(path: &Path) -> Result<String, Error> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

pub fn parse(text: &str) -> Result<Instance, Error> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.dy.len() != doc.dx.len() + 1 {
        return Err(Error::InvalidQuiver(format!(
            "dy must have one more entry than dx, got {} and {}",
            doc.dy.len(),
            doc.dx.len()
        )));
    }
    if let Some(n) = doc.n {
        if n != doc.dx.len() {
            return Err(Error::InvalidQuiver(format!("n = {n} but dx has {} entries", doc.dx.len())));
        }
    }
    let quiver = BipartiteQuiver::new(doc.dy, doc.dx)?;
    let Some(orbit_doc) = doc.orbit else {
        return Ok(Instance { quiver, orbit: None, lacing: None });
    };
    let lacing = orbit_doc.lacing.as_deref().map(|m| LacingDiagram::from_matrices(&quiver, m)).transpose()?;
    let from_lacing = lacing.as_ref().map(|w| w.orbit(&quiver));
    let from_table = orbit_doc.multiplicities.as_ref().map(|t| OrbitData::from_named(&quiver, t)).transpose()?;
    let orbit = match (from_lacing, from_table) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::InvalidOrbit(format!(
                "lacing diagram has orbit {} but multiplicities give {}",
                a.describe(&quiver),
                b.describe(&quiver)
            )))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => return Err(Error::InvalidOrbit("\"orbit\" needs \"lacing\" or \"multiplicities\"".into())),
    };
    Ok(Instance { quiver, orbit: Some(orbit), lacing })
}

#[cfg(test)]
mod tests {
    use super::*;

    const RUNNING: &str = r#"{"n": 2, "dy": [1, 3, 2], "dx": [2, 3],
        "orbit": {"multiplicities": {"y2,y0": 1, "y2,y1": 1, "x2,x1": 1}}}"#;

    #[test]
    fn parses_multiplicities() {
        let inst = parse(RUNNING).unwrap();
        assert_eq!(inst.quiver.dy(), &[1, 3, 2]);
        assert_eq!(inst.orbit.unwrap(), qloci::examples::running_orbit());
    }

    #[test]
    fn lacing_and_table_must_agree() {
        let q = qloci::examples::running_quiver();
        let mats = qloci::examples::running_minimal().to_matrices();
        let both = serde_json::json!({"dy": q.dy(), "dx": q.dx(), "orbit": {
            "lacing": mats, "multiplicities": {"y2,y0": 1, "y2,y1": 1, "x2,x1": 1}}});
        assert!(parse(&both.to_string()).is_ok());
        let dense = qloci::lacing::dense_orbit(&q).to_named(&q);
        let wrong = serde_json::json!({"dy": q.dy(), "dx": q.dx(), "orbit": {"lacing": mats, "multiplicities": dense}});
        assert!(matches!(parse(&wrong.to_string()), Err(Error::InvalidOrbit(_))));
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(matches!(parse(r#"{"dy": [1, 2], "dx": [1, 1]}"#), Err(Error::InvalidQuiver(_))));
        assert!(matches!(parse(r#"{"n": 3, "dy": [1, 2], "dx": [1]}"#), Err(Error::InvalidQuiver(_))));
        assert!(matches!(parse(r#"{"dy": [1, 2], "dx": [1], "orbit": {}}"#), Err(Error::InvalidOrbit(_))));
        assert!(matches!(parse("not json"), Err(Error::Parse(_))));
    }
}
