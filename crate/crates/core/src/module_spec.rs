//! Representations W = V_{d_1} + ... + V_{d_k} of Z/p and their variables.
//!
//! Each summand V_d contributes a chain of variables z, Δz, ..., Δ^{d-1}z in
//! the dual. Variables are numbered globally in ascending monomial-order
//! position: summand 1 first, and inside a summand the deepest variable
//! Δ^{d-1}z comes first and the generator z last. So for (k-1)V_2 + V_3 the
//! ascending order is x_1 < y_1 < ... < x < y < z.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;

/// The basis element Δ^depth(z_summand) of W*. Summands are 0-based here and
/// printed 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VariableId {
    pub summand: usize,
    pub depth: usize,
}

impl VariableId {
    pub fn new(summand: usize, depth: usize) -> Self {
        Self { summand, depth }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleSpec {
    field: PrimeField,
    blocks: Vec<usize>,
    offsets: Vec<usize>,
}

impl ModuleSpec {
    pub fn new(p: u32, blocks: Vec<usize>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        for &n in &blocks {
            if n == 0 {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: "block size must be positive".into(),
                });
            }
            if n > p as usize {
                return Err(Error::BlockTooLarge { n, p });
            }
        }
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut acc = 0;
        for &n in &blocks {
            offsets.push(acc);
            acc += n;
        }
        Ok(Self {
            field,
            blocks,
            offsets,
        })
    }

    /// Parses `term ("+" term)*` with `term := [multiplier] "V" n`.
    pub fn parse(text: &str, p: u32) -> Result<Self> {
        let blocks = parse_blocks(text)?;
        Self::new(p, blocks)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Number of indecomposable summands, which is also dim W^{Z/p}.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn num_vars(&self) -> usize {
        self.dim()
    }

    pub fn fixed_point_dim(&self) -> usize {
        self.k()
    }

    pub fn reduced_blocks(&self) -> Vec<usize> {
        self.blocks.iter().copied().filter(|&d| d >= 2).collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.blocks.iter().all(|&d| d >= 2)
    }

    /// The same representation with all trivial summands removed.
    pub fn reduced(&self) -> ModuleSpec {
        ModuleSpec::new(self.p(), self.reduced_blocks()).expect("sub-multiset of a valid spec")
    }

    /// k(p-1) + p - 2 for the reduced module: the coinvariant top-degree and
    /// Noether bound.
    pub fn upper_bound(&self) -> usize {
        let k = self.reduced_blocks().len();
        let p = self.p() as usize;
        k * (p - 1) + p - 2
    }

    pub fn var_index(&self, v: VariableId) -> usize {
        let d = self.blocks[v.summand];
        debug_assert!(v.depth < d);
        self.offsets[v.summand] + (d - 1 - v.depth)
    }

    pub fn variable(&self, index: usize) -> VariableId {
        let summand = self.summand_of(index);
        let d = self.blocks[summand];
        VariableId {
            summand,
            depth: d - 1 - (index - self.offsets[summand]),
        }
    }

    pub fn summand_of(&self, index: usize) -> usize {
        match self.offsets.binary_search(&index) {
            Ok(i) => i,
            Err(i) => i - 1,
        }
    }

    pub fn depth_of(&self, index: usize) -> usize {
        self.variable(index).depth
    }

    /// Global index range of the variables of one summand.
    pub fn summand_range(&self, summand: usize) -> std::ops::Range<usize> {
        let start = self.offsets[summand];
        start..start + self.blocks[summand]
    }

    /// Index of Δ(v) if v is not terminal.
    pub fn delta_of(&self, index: usize) -> Option<usize> {
        let v = self.variable(index);
        if v.depth + 1 < self.blocks[v.summand] {
            Some(index - 1)
        } else {
            None
        }
    }

    /// Index of the unique w with Δ(w) = v, if v has positive depth.
    pub fn delta_preimage(&self, index: usize) -> Option<usize> {
        let v = self.variable(index);
        if v.depth >= 1 {
            Some(index + 1)
        } else {
            None
        }
    }

    pub fn multidegree(&self, m: &Monomial) -> Vec<u32> {
        (0..self.k())
            .map(|s| self.summand_range(s).map(|i| m.exponent(i) as u32).sum())
            .collect()
    }

    pub fn var_name(&self, index: usize) -> String {
        let v = self.variable(index);
        match v.depth {
            0 => format!("z{}", v.summand + 1),
            1 => format!("dz{}", v.summand + 1),
            t => format!("d{}z{}", t, v.summand + 1),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "0");
        }
        // collapse consecutive equal blocks into multipliers
        let mut first = true;
        let mut i = 0;
        while i < self.blocks.len() {
            let n = self.blocks[i];
            let mut j = i;
            while j < self.blocks.len() && self.blocks[j] == n {
                j += 1;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{}", j - i)?;
            }
            write!(f, "V{n}")?;
            i = j;
        }
        Ok(())
    }
}

fn parse_blocks(text: &str) -> Result<Vec<usize>> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let end = text.len();
    let mut pos = 0;
    let mut blocks = Vec::new();

    let at = |pos: usize| chars.get(pos).map(|&(i, _)| i).unwrap_or(end);
    let syntax = |pos: usize, msg: &str| Error::Syntax {
        pos: at(pos),
        msg: msg.to_string(),
    };

    let read_number = |pos: &mut usize| -> Result<Option<usize>> {
        let start = *pos;
        match chars.get(*pos) {
            Some(&(_, c)) if c.is_ascii_digit() => {
                if c == '0' {
                    return Err(syntax(start, "numbers may not start with 0"));
                }
            }
            _ => return Ok(None),
        }
        let mut value: usize = 0;
        while let Some(&(_, c)) = chars.get(*pos) {
            match c.to_digit(10) {
                Some(d) => {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as usize))
                        .ok_or_else(|| syntax(start, "number too large"))?;
                    *pos += 1;
                }
                None => break,
            }
        }
        Ok(Some(value))
    };

    loop {
        let multiplier = read_number(&mut pos)?.unwrap_or(1);
        match chars.get(pos) {
            Some(&(_, 'V')) | Some(&(_, 'v')) => pos += 1,
            _ => return Err(syntax(pos, "expected 'V'")),
        }
        let n = read_number(&mut pos)?.ok_or_else(|| syntax(pos, "expected block size after 'V'"))?;
        blocks.extend(std::iter::repeat_n(n, multiplier));
        match chars.get(pos) {
            None => break,
            Some(&(_, '+')) => pos += 1,
            Some(_) => return Err(syntax(pos, "expected '+' or end of input")),
        }
    }
    Ok(blocks)
}
