//! Directed graphs, exact Cuntz-Krieger computations, the fixed-point
//! isomorphism of the five-sphere graph, freeness witnesses for the twistor
//! circle action, and graph-algebra K-theory with positive cones.

pub mod ck;
pub mod cone;
pub mod freeness;
pub mod graph;
pub mod ktheory;
pub mod path;
pub mod phi;
pub mod snf;

pub use ck::{CKElement, GradedCKElement};
pub use cone::{order_iso_check, positive_cone, positive_in_f, positive_in_g, positive_in_total_space, Cone};
pub use freeness::{apply_phi, freeness_witness, verify_witness, FreenessWitness, PathPartition};
pub use graph::{preset, preset_f, preset_g, preset_l3, preset_l5, preset_l7, EdgeFamily, Graph, GraphRef, GraphSpec, Multiplicity};
pub use ktheory::{k_theory, k_theory_via_minors, vertex_matrix, KTheory};
pub use path::{paths_of_length, EdgeInstance, Path};
pub use phi::{fixedpoint_generator_list, phi_edges_up_to, phi_image, phi_vertex, span_membership, verify_phi_ck, PhiCheck, PhiEdge, SpanResult};
pub use snf::{divisors_via_minors, smith_normal_form, IntMatrix, SmithNormalForm};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("unknown edge family '{0}'")]
    UnknownEdge(String),
    #[error("unknown graph preset '{0}'")]
    UnknownPreset(String),
    #[error("cannot read graph file: {0}")]
    BadGraphFile(String),
    #[error("elements live on different graphs")]
    MixedGraphs,
    #[error("vertex '{0}' emits infinitely many edges")]
    InfiniteEmitter(String),
    #[error("vertex '{0}' emits no edges")]
    SinkVertex(String),
    #[error("index violation: {0}")]
    IndexViolation(String),
    #[error("expected {0} coordinates, got {1}")]
    ArityMismatch(usize, usize),
    #[error("witness search failed: {0}")]
    WitnessNotFound(String),
}
