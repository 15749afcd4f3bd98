use std::cmp::Ordering;
use std::fmt;

use super::PolyError;

/// Comparison rule applied inside one block of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GrLex => "grlex",
            OrderKind::GrevLex => "grevlex",
        }
    }
}

/// A group of variables listed from most to least significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    pub vars: Vec<usize>,
    pub kind: OrderKind,
}

/// A monomial order on exponent vectors of a fixed length.
///
/// Every order is stored as a sequence of blocks; the plain `lex`, `grlex`
/// and `grevlex` orders are a single block holding every variable. Earlier
/// blocks dominate later ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    nvars: usize,
    blocks: Vec<Block>,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        Self::single(OrderKind::Lex, (0..nvars).collect())
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::single(OrderKind::GrLex, (0..nvars).collect())
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::single(OrderKind::GrevLex, (0..nvars).collect())
    }

    pub fn of_kind(kind: OrderKind, nvars: usize) -> Self {
        Self::single(kind, (0..nvars).collect())
    }

    fn single(kind: OrderKind, vars: Vec<usize>) -> Self {
        MonomialOrder {
            nvars: vars.len(),
            blocks: vec![Block { vars, kind }],
        }
    }

    /// A single-block order whose variable precedence is the given
    /// permutation (most significant first).
    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self, PolyError> {
        Self::block(vec![Block {
            vars: precedence,
            kind,
        }])
    }

    /// A block order; the blocks must partition `0..nvars`.
    pub fn block(blocks: Vec<Block>) -> Result<Self, PolyError> {
        let nvars: usize = blocks.iter().map(|b| b.vars.len()).sum();
        let mut seen = vec![false; nvars];
        for b in &blocks {
            if b.vars.is_empty() {
                return Err(PolyError::InvalidOrder("empty block".into()));
            }
            for &v in &b.vars {
                if v >= nvars || seen[v] {
                    return Err(PolyError::InvalidOrder(format!(
                        "blocks do not partition the {} variables",
                        nvars
                    )));
                }
                seen[v] = true;
            }
        }
        Ok(MonomialOrder { nvars, blocks })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_block(&self) -> bool {
        self.blocks.len() > 1
    }

    /// True when every monomial involving one of `vars` is larger than every
    /// monomial free of them, i.e. the order eliminates `vars`.
    pub fn eliminates(&self, vars: &[usize]) -> bool {
        // Lex-like prefix: the variables must fill leading blocks exactly,
        // or be a prefix of a leading lex block.
        let mut remaining: Vec<usize> = vars.to_vec();
        for b in &self.blocks {
            if remaining.is_empty() {
                return true;
            }
            let inside = b.vars.iter().filter(|v| remaining.contains(v)).count();
            if inside == b.vars.len() {
                remaining.retain(|v| !b.vars.contains(v));
                continue;
            }
            if b.kind == OrderKind::Lex {
                let prefix = &b.vars[..inside];
                if prefix.iter().all(|v| remaining.contains(v)) {
                    remaining.retain(|v| !prefix.contains(v));
                    return remaining.is_empty();
                }
            }
            return false;
        }
        remaining.is_empty()
    }

    #[inline]
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), self.nvars);
        debug_assert_eq!(b.len(), self.nvars);
        for block in &self.blocks {
            let ord = compare_block(block, a, b);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

#[inline]
fn compare_block(block: &Block, a: &[u32], b: &[u32]) -> Ordering {
    match block.kind {
        OrderKind::Lex => {
            for &v in &block.vars {
                match a[v].cmp(&b[v]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
        OrderKind::GrLex => {
            let da: u64 = block.vars.iter().map(|&v| a[v] as u64).sum();
            let db: u64 = block.vars.iter().map(|&v| b[v] as u64).sum();
            da.cmp(&db).then_with(|| {
                for &v in &block.vars {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
        }
        OrderKind::GrevLex => {
            let da: u64 = block.vars.iter().map(|&v| a[v] as u64).sum();
            let db: u64 = block.vars.iter().map(|&v| b[v] as u64).sum();
            da.cmp(&db).then_with(|| {
                for &v in block.vars.iter().rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            })
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.len() == 1 {
            return write!(f, "{}", self.blocks[0].kind.name());
        }
        write!(f, "block(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " > ")?;
            }
            write!(f, "{}{:?}", b.kind.name(), b.vars)?;
        }
        write!(f, ")")
    }
}
