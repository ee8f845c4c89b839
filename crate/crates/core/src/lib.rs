pub mod camina;
pub mod chartable;
pub mod constructions;
pub mod cyclotomic;
pub mod field;
pub mod group;
pub mod linalg;
pub mod numtheory;
pub mod spec;
pub mod suzuki;
pub mod verify;
