//! Shared domain types: node identities, information bits, and BPSK symbols.

use std::fmt;
use std::ops::{BitXor, Mul, Neg};

/// One of the three nodes in the two-way relay topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Node {
    A,
    B,
    R,
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::A => write!(f, "A"),
            Node::B => write!(f, "B"),
            Node::R => write!(f, "R"),
        }
    }
}

/// An end node (A or B). The relay is excluded; several operations are
/// only defined for the two terminals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndNode {
    A,
    B,
}

impl EndNode {
    /// The opposite end node.
    pub fn partner(self) -> EndNode {
        match self {
            EndNode::A => EndNode::B,
            EndNode::B => EndNode::A,
        }
    }
}

impl From<EndNode> for Node {
    fn from(n: EndNode) -> Node {
        match n {
            EndNode::A => Node::A,
            EndNode::B => Node::B,
        }
    }
}

impl fmt::Display for EndNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Node::from(*self).fmt(f)
    }
}

/// A binary information digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    /// Numeric value, 0 or 1.
    pub fn value(self) -> u8 {
        match self {
            Bit::Zero => 0,
            Bit::One => 1,
        }
    }
}

impl BitXor for Bit {
    type Output = Bit;

    fn bitxor(self, rhs: Bit) -> Bit {
        if self == rhs {
            Bit::Zero
        } else {
            Bit::One
        }
    }
}

/// An antipodal BPSK symbol, +1 or -1.
///
/// Bit 1 maps to `Plus` and bit 0 to `Minus`, so the relay's network-coded
/// symbol `-s_a * s_b` is the modulated image of the bitwise XOR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BpskSymbol {
    Plus,
    Minus,
}

impl BpskSymbol {
    /// The symbol amplitude, +1.0 or -1.0.
    pub fn value(self) -> f64 {
        match self {
            BpskSymbol::Plus => 1.0,
            BpskSymbol::Minus => -1.0,
        }
    }
}

impl Neg for BpskSymbol {
    type Output = BpskSymbol;

    fn neg(self) -> BpskSymbol {
        match self {
            BpskSymbol::Plus => BpskSymbol::Minus,
            BpskSymbol::Minus => BpskSymbol::Plus,
        }
    }
}

/// Sign algebra: the product of two antipodal symbols.
impl Mul for BpskSymbol {
    type Output = BpskSymbol;

    fn mul(self, rhs: BpskSymbol) -> BpskSymbol {
        if self == rhs {
            BpskSymbol::Plus
        } else {
            BpskSymbol::Minus
        }
    }
}
