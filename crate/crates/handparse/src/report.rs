use crate::error::ParseError;
use crate::raw::parse_hand;
use crate::record::HandRecord;
use rayon::prelude::*;
use serde::Serialize;

/// One hand that could not be interpreted. `line` points into the source
/// stream; `hand_id` is recovered from the header when readable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParseFailure {
    pub line: usize,
    pub hand_id: Option<String>,
    pub reason: String,
}

/// Result of parsing a stream of raw hands: the good ones in input order,
/// plus a failure entry for every hand that was rejected.
#[derive(Debug, Default)]
pub struct ParseOutcome {
    pub attempted: usize,
    pub records: Vec<HandRecord>,
    pub failures: Vec<ParseFailure>,
}

impl ParseOutcome {
    pub fn failure_fraction(&self) -> f64 {
        if self.attempted == 0 {
            0.0
        } else {
            self.failures.len() as f64 / self.attempted as f64
        }
    }

    pub fn merge(&mut self, other: ParseOutcome) {
        self.attempted += other.attempted;
        self.records.extend(other.records);
        self.failures.extend(other.failures);
    }
}

/// Splits the text into hand blocks at blank-line runs and parses them in
/// parallel. Output order matches input order regardless of thread count.
pub fn parse_stream(text: &str) -> ParseOutcome {
    let blocks = split_blocks(text);
    let results: Vec<Result<HandRecord, ParseFailure>> = blocks
        .par_iter()
        .map(|block| parse_hand(block.text, block.line_offset).map_err(|err| describe(block, &err)))
        .collect();

    let mut outcome = ParseOutcome {
        attempted: blocks.len(),
        ..ParseOutcome::default()
    };
    for result in results {
        match result {
            Ok(record) => outcome.records.push(record),
            Err(failure) => outcome.failures.push(failure),
        }
    }
    outcome
}

struct Block<'a> {
    text: &'a str,
    /// Lines preceding this block in the stream.
    line_offset: usize,
}

fn split_blocks(text: &str) -> Vec<Block<'_>> {
    let mut blocks = Vec::new();
    let mut start: Option<usize> = None;
    let mut start_line = 0usize;
    let mut line_no = 0usize;
    let mut byte = 0usize;
    for line in text.split_inclusive('\n') {
        let blank = line.trim().is_empty();
        match (blank, start) {
            (false, None) => {
                start = Some(byte);
                start_line = line_no;
            }
            (true, Some(s)) => {
                blocks.push(Block {
                    text: &text[s..byte],
                    line_offset: start_line,
                });
                start = None;
            }
            _ => {}
        }
        byte += line.len();
        line_no += 1;
    }
    if let Some(s) = start {
        blocks.push(Block {
            text: &text[s..],
            line_offset: start_line,
        });
    }
    blocks
}

fn describe(block: &Block<'_>, err: &ParseError) -> ParseFailure {
    let first = block.text.lines().next().unwrap_or("");
    let hand_id = first.find('#').and_then(|h| {
        let rest = &first[h + 1..];
        let end = rest.find(':')?;
        let id = rest[..end].trim();
        (!id.is_empty() && id.chars().all(|c| c.is_ascii_digit())).then(|| id.to_string())
    });
    ParseFailure {
        line: err.line().unwrap_or(block.line_offset + 1),
        hand_id,
        reason: err.to_string(),
    }
}
