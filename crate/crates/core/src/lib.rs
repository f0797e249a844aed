pub mod algebra;
pub mod exec;
pub mod scalars;
pub mod braided;
pub mod morphisms;
pub mod repcalc;
pub mod numeric;
pub mod verify;
pub mod cli;
