pub mod actions;
pub mod cli;
pub mod hopf;
pub mod ncalg;
pub mod qcoeff;
pub mod report;
pub mod rtensor;
