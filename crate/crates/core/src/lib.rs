//! Codes that correct position errors (deletions and sticky insertions) in
//! racetrack-style memories read by several heads at fixed offsets.
//!
//! Every head reads all of the stored word, and one physical shift fault
//! shows up in every head's output at a known offset. The constructions
//! here exploit that correlation: constrained codebooks (run-limited and
//! period-limited words, optionally intersected with a Varshamov-Tenengolts
//! class) paired with leftmost-difference splice decoders.
//!
//! The crate is organised around five layers:
//!
//! * [`word`] - binary words and the run/period/deletion primitives,
//! * [`constraints`] - code families, membership, exact counting and
//!   enumerative (rank/unrank) encoding,
//! * [`channel`] - the correlated multi-head read process,
//! * [`decoders`] - the splice decoders for every supported error class,
//! * [`oracle`] - brute-force verifiers that establish ground truth at
//!   small block lengths.
//!
//! Everything is a pure function over immutable values, so all types are
//! safe to share across threads; the only stateful object is the seeded
//! [`channel::PatternSampler`].

pub mod channel;
pub mod constraints;
pub mod decoders;
mod error;
pub mod oracle;
pub mod word;

pub use channel::{read, ErrorClass, ErrorPattern, Event, HeadLayout, PatternSampler, ReadOut};
pub use constraints::{CodeSpec, CodebookIndex, Family, Goal};
pub use decoders::{DecodeResult, StageRecord};
pub use error::{Error, Result};
pub use word::Word;
