pub mod asummability;
pub mod cli;
pub mod error;
pub mod highorder;
pub mod lp;
pub mod multithreshold;
pub mod ptf;
pub mod table;
pub mod text;
