//! Structural generation of `S_n(132)`.
//!
//! Every 132-avoider of length `n` with `n` at position `i` is a 132-avoider
//! on the `i - 1` largest remaining values, then `n`, then a 132-avoider on
//! the smallest `n - i` values. The iterator walks that decomposition
//! depth-first with an explicit stack, so nothing is filtered.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest `n` enumerated without an explicit cap override.
pub const DEFAULT_ENUMERATION_CAP: usize = 14;

/// Fill positions `pos..pos + len` with an avoider on values `low..low + len`.
#[derive(Debug, Clone, Copy)]
struct Block {
    pos: usize,
    low: u32,
    len: usize,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    block: Block,
    /// 1-based offset of the block maximum; 0 for empty blocks.
    choice: usize,
}

/// Iterator over `S_n(132)` (or the part of it with `n` at a fixed position).
#[derive(Debug, Clone)]
pub struct Avoiders {
    buf: Vec<u32>,
    pending: Vec<Block>,
    frames: Vec<Frame>,
    /// Frames below this depth are fixed by the constructor.
    floor: usize,
    descending: bool,
    done: bool,
}

/// All of `S_n(132)`; `n` above `cap` is refused.
pub fn avoiders(n: usize, cap: usize) -> Result<Avoiders> {
    check_cap(n, cap)?;
    Ok(Avoiders::new(n, None))
}

/// The avoiders with `n` at 1-based position `i`; these partition `S_n(132)`
/// into `n` independent streams.
pub fn avoiders_with_max_at(n: usize, i: usize, cap: usize) -> Result<Avoiders> {
    check_cap(n, cap)?;
    if i == 0 || i > n {
        return Err(Error::InvalidPosition { index: i, len: n });
    }
    Ok(Avoiders::new(n, Some(i)))
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

impl Avoiders {
    fn new(n: usize, max_at: Option<usize>) -> Self {
        let root = Block {
            pos: 0,
            low: 1,
            len: n,
        };
        let mut it = Avoiders {
            buf: alloc::vec![0; n],
            pending: alloc::vec![root],
            frames: Vec::new(),
            floor: 0,
            descending: true,
            done: false,
        };
        if let Some(i) = max_at {
            let block = it.pending.pop().expect("root block");
            it.apply(block, i);
            it.frames.push(Frame { block, choice: i });
            it.floor = 1;
        }
        it
    }

    fn apply(&mut self, block: Block, choice: usize) {
        let left = choice - 1;
        let right = block.len - choice;
        self.buf[block.pos + left] = block.low + block.len as u32 - 1;
        self.pending.push(Block {
            pos: block.pos + choice,
            low: block.low,
            len: right,
        });
        self.pending.push(Block {
            pos: block.pos,
            low: block.low + right as u32,
            len: left,
        });
    }

    fn undo(&mut self, frame: Frame) {
        if frame.block.len > 0 {
            self.pending.pop();
            self.pending.pop();
        }
        self.pending.push(frame.block);
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        loop {
            if self.descending {
                match self.pending.pop() {
                    None => {
                        self.descending = false;
                        return Some(Permutation::from_values_unchecked(self.buf.clone()));
                    }
                    Some(block) if block.len == 0 => self.frames.push(Frame { block, choice: 0 }),
                    Some(block) => {
                        self.apply(block, 1);
                        self.frames.push(Frame { block, choice: 1 });
                    }
                }
            } else {
                if self.frames.len() <= self.floor {
                    self.done = true;
                    return None;
                }
                let frame = self.frames.pop().expect("frame above floor");
                self.undo(frame);
                if frame.choice >= 1 && frame.choice < frame.block.len {
                    let block = self.pending.pop().expect("restored block");
                    self.apply(block, frame.choice + 1);
                    self.frames.push(Frame {
                        block,
                        choice: frame.choice + 1,
                    });
                    self.descending = true;
                }
            }
        }
    }
}

impl core::iter::FusedIterator for Avoiders {}
