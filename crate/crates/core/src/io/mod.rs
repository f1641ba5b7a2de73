//! Text front end and serialization: the session language, text rendering and
//! the versioned JSON schema.

mod emit;
mod lexer;
mod session;

pub use emit::{
    certificate_from_json, ideal_from_json, Emit, IdealList, SCHEMA_VERSION,
};
pub use lexer::{tokenize, Pos, Spanned, Token};
pub use session::{infer_ring, parse_ideal, parse_monomial, parse_session, Command, Session};
