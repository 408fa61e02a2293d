pub mod analyze;
pub mod build;
pub mod catalog;
pub mod exactlin;
pub mod homalg;
