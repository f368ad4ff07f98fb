//! Recognition of graphs whose vertices split into a part in an additive
//! hereditary class `P` and a part in a co-additive hereditary class `Q`,
//! together with brute-force oracles, Ramsey thresholds and hardness gadgets.

pub mod error;
pub mod graph;
pub mod properties;
pub mod ramsey;
pub mod recognizer;
pub mod reductions;

pub use error::{Error, Result};
pub use graph::{Family, Graph, VertexSet};
pub use properties::{check, parse_spec, CliqueBound, PropertySpec};
pub use recognizer::{
    brute_force, recognize, Decision, PartitionCertificate, Recognizer, RecognizerTrace,
};
