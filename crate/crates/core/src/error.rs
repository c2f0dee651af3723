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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not a tree ({edges} edges on {n} vertices)")]
    NotATree { n: usize, edges: usize },
    #[error("vertex count overflows: {0} x {1}")]
    Overflow(usize, usize),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
    #[error("category {0} is empty")]
    EmptyCategory(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(
        "search exhausted caps without finding a good system (memdim cap {memdim_cap}, category cap {category_cap})"
    )]
    CapExhausted { memdim_cap: usize, category_cap: usize },
    #[error("graph too large for exhaustive search: {n} vertices (limit {limit})")]
    GraphTooLarge { n: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
