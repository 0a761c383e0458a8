//! Regenerates the first-55 ordering asset. Usage:
//!
//! ```text
//! cargo run --release -p isoperimetry --example generate_first55 > crates/isoperimetry/assets/first55.jsonl
//! ```

use isoperimetry::sequencer::{entries_to_jsonl, generate_first55};

fn main() {
    let entries = generate_first55().expect("the prefix-optimal ordering exists");
    print!("{}", entries_to_jsonl(&entries));
}
