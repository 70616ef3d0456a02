//! Sharpness/disturbance tradeoffs: closed-form optimal curves, grid-search
//! maximizers over compatible channels, and the single-channel inequalities.

mod closed;
mod search;
mod bounds;

pub use closed::{
    best_fidelity_unital_closed, best_lqu_unital_closed, best_quantumness_unital_closed,
};
pub use search::{
    best_fidelity_search, best_lqu_search, best_quantumness_search, compatible_grid, scan,
    search_directions, SearchConfig, SearchOutcome, TradeoffKind, TradeoffPoint,
};
pub use bounds::{
    counterexample_pm_below_half, fidelity_bound_check, fidelity_bound_lhs, sharpness_bound_check, FidelityBoundCheck,
    SharpnessBoundCheck,
};
