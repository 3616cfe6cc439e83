// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! JSON documents exchanged by the command-line tool.
//!
//! Both documents carry `"format": 1`. An instance file lists the edges,
//! the token on each vertex and, for coloured instances, a colour per vertex
//! and per start token plus an optional weight per colour:
//!
//! ```json
//! {"format": 1, "n": 3, "edges": [[0, 1], [1, 2]], "tokens": [2, 1, 0]}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use tokswap::{
    Colour, Colouring, Configuration, Instance, SwapSequence, Tree, Weight, WeightTable,
};

pub const FORMAT: u32 = 1;

fn format_one() -> u32 {
    FORMAT
}

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: line {line}, column {column}: {message}")]
    Syntax {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {source}")]
    Invalid {
        path: String,
        #[source]
        source: tokswap::Error,
    },
    #[error("{path}: unsupported format {found}, expected {FORMAT}")]
    Format { path: String, found: u32 },
    #[error("{path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default = "format_one")]
    pub format: u32,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub tokens: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_colours: Option<Vec<Colour>>,
    /// Colour of the token that starts on each vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub token_colours: Option<Vec<Colour>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<Colour, Weight>>,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> InstanceFile {
        let col = inst.colouring();
        InstanceFile {
            format: FORMAT,
            n: inst.n(),
            edges: inst.tree().edges().iter().map(|&(u, v)| [u, v]).collect(),
            tokens: inst.start().as_slice().to_vec(),
            vertex_colours: col.map(|c| c.vertex_colour.clone()),
            token_colours: col.map(|c| c.token_colour.clone()),
            weights: inst.weights().map(|w| w.iter().collect()),
        }
    }

    pub fn to_instance(&self) -> tokswap::Result<Instance> {
        let edges = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let tree = Tree::new(self.n, edges)?;
        let start = Configuration::new(self.tokens.clone())?;
        let colouring = match (&self.vertex_colours, &self.token_colours) {
            (None, None) => None,
            (Some(v), Some(t)) => Some(Colouring {
                vertex_colour: v.clone(),
                token_colour: t.clone(),
            }),
            _ => {
                return Err(tokswap::Error::InvalidInstance(
                    "vertex_colours and token_colours must be given together".into(),
                ))
            }
        };
        let weights = self.weights.as_ref().map(|w| WeightTable::new(w.clone()));
        Instance::new(tree, start, colouring, weights)
    }

    pub fn parse(text: &str, path: &str) -> Result<InstanceFile, IoError> {
        let file: InstanceFile = parse_json(text, path)?;
        if file.format != FORMAT {
            return Err(IoError::Format {
                path: path.into(),
                found: file.format,
            });
        }
        Ok(file)
    }

    /// Parses and validates in one go.
    pub fn load(path: &str) -> Result<Instance, IoError> {
        let file = InstanceFile::parse(&read(path)?, path)?;
        file.to_instance().map_err(|source| IoError::Invalid {
            path: path.into(),
            source,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub algorithm: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub states_expanded: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    #[serde(default = "format_one")]
    pub format: u32,
    pub cost: u64,
    pub length: usize,
    pub swaps: Vec<[usize; 2]>,
    pub meta: Meta,
}

impl SolutionFile {
    pub fn new(cost: u64, seq: &SwapSequence, meta: Meta) -> SolutionFile {
        SolutionFile {
            format: FORMAT,
            cost,
            length: seq.len(),
            swaps: seq.iter().map(|&(u, v)| [u, v]).collect(),
            meta,
        }
    }

    pub fn sequence(&self) -> SwapSequence {
        self.swaps.iter().map(|&[u, v]| (u, v)).collect()
    }

    pub fn parse(text: &str, path: &str) -> Result<SolutionFile, IoError> {
        let file: SolutionFile = parse_json(text, path)?;
        if file.format != FORMAT {
            return Err(IoError::Format {
                path: path.into(),
                found: file.format,
            });
        }
        Ok(file)
    }

    pub fn load(path: &str) -> Result<SolutionFile, IoError> {
        SolutionFile::parse(&read(path)?, path)
    }
}

fn read(path: &str) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.into(),
        source,
    })
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, path: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Syntax {
        path: path.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_line_of_error() {
        let text = "{\n  \"n\": 3,\n  \"edges\": [[0, 1], [1, 2]],\n  \"tokens\": [2, 1 0]\n}";
        match InstanceFile::parse(text, "x.json") {
            Err(IoError::Syntax { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_format() {
        let text = r#"{"format": 2, "n": 1, "edges": [], "tokens": [0]}"#;
        assert!(matches!(
            InstanceFile::parse(text, "x"),
            Err(IoError::Format { found: 2, .. })
        ));
    }

    #[test]
    fn weights_use_integer_keys() {
        let text = r#"{"n": 2, "edges": [[0, 1]], "tokens": [1, 0],
            "vertex_colours": [0, 1], "token_colours": [1, 0], "weights": {"0": 3, "1": 4}}"#;
        let inst = InstanceFile::parse(text, "x")
            .unwrap()
            .to_instance()
            .unwrap();
        assert_eq!(inst.swap_cost(0, 1), 7);
    }

    #[test]
    fn non_tree_is_invalid() {
        let text = r#"{"n": 3, "edges": [[0, 1]], "tokens": [0, 1, 2]}"#;
        let file = InstanceFile::parse(text, "x").unwrap();
        assert!(file.to_instance().is_err());
    }
}
