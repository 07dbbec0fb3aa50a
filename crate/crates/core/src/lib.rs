pub mod arith;
pub mod linalg;
pub mod grouprep;
pub mod poly;
pub mod groebner;
pub mod epw;
