//! Software model of the unified datapath: one six-lane register file and
//! one set of shared functional units, switched between MD5 and SHA-192 by a
//! mode select. MD5 runs on lanes B..E with lanes A and F parked at zero;
//! SHA-192 uses all six lanes. Digests are bit-identical to the standalone
//! engines, which the differential suite enforces.

use std::fmt;

use crate::word::{
    pad_message, serialize_digest, words_from_block, Block, ByteOrder, LengthEncoding, Word,
};
use crate::{md5, sha, DigestError};

/// Datapath mode selected by the mode line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Md5,
    Sha192,
}

impl Mode {
    /// Steps per block: 64 for MD5, 80 for SHA-192.
    pub fn steps(self) -> usize {
        match self {
            Mode::Md5 => 64,
            Mode::Sha192 => sha::STEPS,
        }
    }

    /// Chaining-state arity: 4 or 6 words.
    pub fn state_words(self) -> usize {
        match self {
            Mode::Md5 => 4,
            Mode::Sha192 => 6,
        }
    }

    pub fn digest_bytes(self) -> usize {
        self.state_words() * 4
    }

    pub fn byte_order(self) -> ByteOrder {
        match self {
            Mode::Md5 => ByteOrder::LittleEndian,
            Mode::Sha192 => ByteOrder::BigEndian,
        }
    }

    pub fn length_encoding(self) -> LengthEncoding {
        match self {
            Mode::Md5 => LengthEncoding::LittleEndian64,
            Mode::Sha192 => LengthEncoding::BigEndian64,
        }
    }

    /// Initial chaining value.
    pub fn iv(self) -> Vec<Word> {
        match self {
            Mode::Md5 => md5::IV.to_vec(),
            Mode::Sha192 => sha::sha192::IV.to_vec(),
        }
    }
}

/// Errors from driving the unified core.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnifiedError {
    /// Chaining-state word count does not match the mode.
    ArityMismatch { expected: usize, got: usize },
    /// Stepped or finished without a loaded block, or past the final step.
    BlockExhausted,
}

impl fmt::Display for UnifiedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnifiedError::ArityMismatch { expected, got } => {
                write!(f, "chaining state has {got} words, mode needs {expected}")
            }
            UnifiedError::BlockExhausted => write!(f, "no block steps remaining"),
        }
    }
}

impl std::error::Error for UnifiedError {}

/// Register lanes after one step, for tracing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepTrace {
    pub step: usize,
    pub mode: Mode,
    /// Lanes A..F; parked lanes read zero in MD5 mode.
    pub regs: [Word; 6],
}

/// The shared datapath: six register lanes, a loaded block and a step
/// counter. One instance processes one block at a time.
#[derive(Debug, Clone)]
pub struct UnifiedCore {
    mode: Mode,
    regs: [Word; 6],
    step: usize,
    chaining: [Word; 6],
    schedule: [Word; sha::STEPS],
    loaded: bool,
}

impl UnifiedCore {
    pub fn new(mode: Mode) -> Self {
        UnifiedCore {
            mode,
            regs: [0; 6],
            step: 0,
            chaining: [0; 6],
            schedule: [0; sha::STEPS],
            loaded: false,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Lane values A..F.
    pub fn regs(&self) -> [Word; 6] {
        self.regs
    }

    /// Seeds the lanes from a chaining state and parses the block with the
    /// mode's byte order. MD5 chaining words land on lanes B..E; lanes A and
    /// F are parked at zero.
    pub fn load_block(&mut self, cv: &[Word], block: &Block) -> Result<(), UnifiedError> {
        debug_assert!(
            !self.loaded || self.step == self.mode.steps(),
            "loading over a block in progress"
        );
        let expected = self.mode.state_words();
        if cv.len() != expected {
            return Err(UnifiedError::ArityMismatch { expected, got: cv.len() });
        }

        let words = words_from_block(block, self.mode.byte_order());
        self.regs = [0; 6];
        self.chaining = [0; 6];
        self.chaining[..expected].copy_from_slice(cv);
        match self.mode {
            Mode::Md5 => {
                self.regs[1..5].copy_from_slice(cv);
                self.schedule = [0; sha::STEPS];
                self.schedule[..16].copy_from_slice(&words);
            }
            Mode::Sha192 => {
                self.regs.copy_from_slice(cv);
                self.schedule = sha::expand_schedule(&words);
            }
        }
        self.step = 0;
        self.loaded = true;
        Ok(())
    }

    /// Applies one data-transformation step on the live lanes.
    pub fn step(&mut self) -> Result<StepTrace, UnifiedError> {
        if !self.loaded || self.step >= self.mode.steps() {
            return Err(UnifiedError::BlockExhausted);
        }
        let i = self.step;
        match self.mode {
            Mode::Md5 => {
                let round = i / 16 + 1;
                let x = self.schedule[md5::msg_index(round, i % 16)];
                let live = [self.regs[1], self.regs[2], self.regs[3], self.regs[4]];
                let next = md5::step(live, x, md5::t_table()[i], md5::SHIFTS[i], round);
                self.regs[1..5].copy_from_slice(&next);
            }
            Mode::Sha192 => {
                self.regs = sha::sha192::step(self.regs, self.schedule[i], sha::kt(i), i);
            }
        }
        self.step += 1;
        Ok(StepTrace { step: i, mode: self.mode, regs: self.regs })
    }

    /// Runs any remaining steps, applies the chaining addition and returns
    /// the updated chaining state (4 or 6 words).
    pub fn run_block(&mut self) -> Result<Vec<Word>, UnifiedError> {
        if !self.loaded {
            return Err(UnifiedError::BlockExhausted);
        }
        while self.step < self.mode.steps() {
            self.step()?;
        }
        self.loaded = false;
        let live = match self.mode {
            Mode::Md5 => &self.regs[1..5],
            Mode::Sha192 => &self.regs[..6],
        };
        Ok(self
            .chaining
            .iter()
            .zip(live)
            .map(|(&h, &r)| h.wrapping_add(r))
            .collect())
    }
}

/// Full digest of a message through the unified core; byte-identical to the
/// standalone engine of the selected mode.
pub fn unified_digest(mode: Mode, message: &[u8]) -> Result<Vec<u8>, DigestError> {
    let blocks = pad_message(message, mode.length_encoding())?;
    let mut core = UnifiedCore::new(mode);
    let mut cv = mode.iv();
    for block in &blocks {
        core.load_block(&cv, block).expect("arity fixed by mode");
        cv = core.run_block().expect("freshly loaded block");
    }
    Ok(serialize_digest(&cv, mode.byte_order()))
}

/// Modeled functional-unit counts for one datapath configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitCounts {
    pub modular_adders: usize,
    pub fixed_rotators: usize,
    pub variable_rotators: usize,
    pub nonlinear_units: usize,
    pub registers_32bit: usize,
}

impl UnitCounts {
    pub fn total(&self) -> usize {
        self.modular_adders
            + self.fixed_rotators
            + self.variable_rotators
            + self.nonlinear_units
            + self.registers_32bit
    }

    fn each_at_most(&self, other: &UnitCounts) -> bool {
        self.modular_adders <= other.modular_adders
            && self.fixed_rotators <= other.fixed_rotators
            && self.variable_rotators <= other.variable_rotators
            && self.nonlinear_units <= other.nonlinear_units
            && self.registers_32bit <= other.registers_32bit
    }
}

impl fmt::Display for UnitCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "modular_adders={} fixed_rotators={} variable_rotators={} nonlinear_units={} registers_32bit={}",
            self.modular_adders,
            self.fixed_rotators,
            self.variable_rotators,
            self.nonlinear_units,
            self.registers_32bit
        )
    }
}

/// Unit counts for the two standalone datapaths and the unified one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceReport {
    pub md5_only: UnitCounts,
    pub sha192_only: UnitCounts,
    pub unified: UnitCounts,
    /// Select points the mode line switches in the unified datapath; not a
    /// shared unit, so kept out of the per-unit comparison.
    pub unified_mode_muxes: usize,
}

impl ResourceReport {
    /// Whether the unified configuration uses no more of any unit than the
    /// two standalone datapaths combined, and strictly fewer units in total.
    pub fn unified_saves_units(&self) -> bool {
        let combined = UnitCounts {
            modular_adders: self.md5_only.modular_adders + self.sha192_only.modular_adders,
            fixed_rotators: self.md5_only.fixed_rotators + self.sha192_only.fixed_rotators,
            variable_rotators: self.md5_only.variable_rotators + self.sha192_only.variable_rotators,
            nonlinear_units: self.md5_only.nonlinear_units + self.sha192_only.nonlinear_units,
            registers_32bit: self.md5_only.registers_32bit + self.sha192_only.registers_32bit,
        };
        self.unified.each_at_most(&combined)
            && self.unified.total() < self.md5_only.total() + self.sha192_only.total()
    }
}

/// Static unit model counted from the step dataflow of each mode.
///
/// The MD5 step needs four modular additions (A + aux + x + t, then B + the
/// rotated sum), one variable rotator for the per-round shifts, one
/// nonlinear unit and four registers. The SHA-192 step needs six additions
/// (four into TEMP1, two more into TEMP2), fixed rotators for S5, S30 and
/// S15, one nonlinear unit and six registers. The unified datapath keeps the
/// six-adder bank, drops the S5 rotator into the variable rotator, and
/// shares the nonlinear unit and register file, at the cost of mode muxes on
/// the function select, rotation amount, constant source and write-back
/// routing.
pub fn resource_report() -> ResourceReport {
    ResourceReport {
        md5_only: UnitCounts {
            modular_adders: 4,
            fixed_rotators: 0,
            variable_rotators: 1,
            nonlinear_units: 1,
            registers_32bit: 4,
        },
        sha192_only: UnitCounts {
            modular_adders: 6,
            fixed_rotators: 3,
            variable_rotators: 0,
            nonlinear_units: 1,
            registers_32bit: 6,
        },
        unified: UnitCounts {
            modular_adders: 6,
            fixed_rotators: 2,
            variable_rotators: 1,
            nonlinear_units: 1,
            registers_32bit: 6,
        },
        unified_mode_muxes: 4,
    }
}
