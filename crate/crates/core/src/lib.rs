pub mod abelian;
pub mod cli;
pub mod higher;
pub mod object;
pub mod polygon;
pub mod reference;
