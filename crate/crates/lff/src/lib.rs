//! Session files, verification suites and the `lff` command line front end
//! for [`lff_core`].

pub mod oracles;
pub mod run;
pub mod session;
pub mod style;
pub mod suites;

pub use run::{run, RunReport};
pub use session::{parse_session, ParseError, Session};
pub use style::Style;
