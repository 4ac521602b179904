pub mod catalog;
pub mod geometry;
pub mod gronwall;
pub mod series;
pub mod varcheck;
pub mod yamabe;
