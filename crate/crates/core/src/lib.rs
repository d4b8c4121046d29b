pub mod algebra;
pub mod bimodule_lab;
pub mod corpus;
pub mod homology;
pub mod modrep;
pub mod exactlin;
pub mod presentation;
