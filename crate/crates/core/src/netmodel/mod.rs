//! Network descriptions, laws and the synchronous round engine.
//!
//! One round `ℓ` executes, in order: edge map on `x(t_ℓ)`; message arrays
//! built from the pre-update logic `w(t_{ℓ-1})`; logic update to `w(t_ℓ)`;
//! motion to `x(t_{ℓ+1})` driven by the updated logic. Communication happens
//! at `t_ℓ = ℓ` and every round lasts one time unit.

mod engine;
mod export;
mod law;
mod message;
mod network;
mod rk4;

pub use engine::{evolve, evolve_round, EvolutionTrace, EvolveOptions, NetworkState, RoundRecord, TaskFn};
pub use export::{write_trace_csv, write_trace_jsonl};
pub use law::Law;
pub use message::{msg_std, natural_projection, MessageArray, StdPayload};
pub use network::{EdgeMapKind, NetworkSpec, StateSpace};
pub use rk4::integrate_rk4;
