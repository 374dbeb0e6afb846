//! Native TOML diagram format. Signs and component cycles are explicit, so
//! this format is authoritative where PD sign conventions could be ambiguous.
//!
//! ```toml
//! name = "3_1"
//! components = [[1, 2, 3, 4, 5, 6]]
//!
//! [[crossings]]
//! id = 0
//! slots = [1, 4, 2, 5]
//! sign = -1
//! ```

use serde::{Deserialize, Serialize};

use super::{Arc, Crossing, OrientedDiagram, Sign};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct NativeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    components: Vec<Vec<Arc>>,
    #[serde(default)]
    crossings: Vec<NativeCrossing>,
}

#[derive(Serialize, Deserialize)]
struct NativeCrossing {
    id: usize,
    slots: [Arc; 4],
    sign: i64,
}

pub fn parse_native(text: &str) -> Result<OrientedDiagram> {
    let doc: NativeDoc = toml::from_str(text).map_err(|e| Error::Native(e.to_string()))?;
    let crossings = doc
        .crossings
        .into_iter()
        .map(|c| {
            let sign = Sign::from_value(c.sign)
                .ok_or_else(|| Error::Native(format!("crossing {}: sign must be 1 or -1", c.id)))?;
            Ok(Crossing {
                id: c.id,
                slots: c.slots,
                sign,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    OrientedDiagram::new(crossings, doc.components, doc.name)
}

pub fn emit_native(d: &OrientedDiagram) -> String {
    let doc = NativeDoc {
        name: d.name().map(str::to_owned),
        components: d.components().to_vec(),
        crossings: d
            .crossings()
            .iter()
            .map(|c| NativeCrossing {
                id: c.id,
                slots: c.slots,
                sign: c.sign.value(),
            })
            .collect(),
    };
    toml::to_string(&doc).expect("native document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, reverse_all};

    #[test]
    fn round_trip() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
            .unwrap()
            .with_name("3_1");
        let text = emit_native(&d);
        assert_eq!(parse_native(&text).unwrap(), d);
        let r = reverse_all(&d);
        assert_eq!(parse_native(&emit_native(&r)).unwrap(), r);
    }

    #[test]
    fn unknot_round_trip() {
        let u = OrientedDiagram::unknot();
        assert_eq!(parse_native(&emit_native(&u)).unwrap(), u);
    }

    #[test]
    fn sign_must_match_components() {
        let text = "components = [[1, 2, 3, 4, 5, 6]]\n\
            [[crossings]]\nid = 0\nslots = [1, 4, 2, 5]\nsign = 1\n\
            [[crossings]]\nid = 1\nslots = [3, 6, 4, 1]\nsign = -1\n\
            [[crossings]]\nid = 2\nslots = [5, 2, 6, 3]\nsign = -1\n";
        assert!(parse_native(text).is_err());
    }

    #[test]
    fn bad_sign_value() {
        let text = "components = [[1, 2]]\n[[crossings]]\nid = 0\nslots = [1, 2, 2, 1]\nsign = 0\n";
        assert!(matches!(parse_native(text), Err(Error::Native(_))));
    }
}
