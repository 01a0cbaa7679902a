use std::fmt;

use crate::rational::Rational;

/// Functions that can be applied in an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FuncName {
    Sin,
    Cos,
    Tan,
    Asin,
    Atan,
    Exp,
    Log1p,
}

impl FuncName {
    pub const ALL: [FuncName; 7] = [
        FuncName::Sin,
        FuncName::Cos,
        FuncName::Tan,
        FuncName::Asin,
        FuncName::Atan,
        FuncName::Exp,
        FuncName::Log1p,
    ];

    /// Accepts the canonical spelling and the `arcsin`/`arctan` aliases.
    pub fn from_ident(ident: &str) -> Option<Self> {
        Some(match ident {
            "sin" => FuncName::Sin,
            "cos" => FuncName::Cos,
            "tan" => FuncName::Tan,
            "asin" | "arcsin" => FuncName::Asin,
            "atan" | "arctan" => FuncName::Atan,
            "exp" => FuncName::Exp,
            "log1p" => FuncName::Log1p,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            FuncName::Sin => "sin",
            FuncName::Cos => "cos",
            FuncName::Tan => "tan",
            FuncName::Asin => "asin",
            FuncName::Atan => "atan",
            FuncName::Exp => "exp",
            FuncName::Log1p => "log1p",
        }
    }
}

impl fmt::Display for FuncName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Expression in the single variable `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(Rational),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Apply(FuncName, Box<Expr>),
    /// Compositional inverse of the operand.
    Inverse(Box<Expr>),
}

impl Expr {
    pub fn constant(c: impl Into<Rational>) -> Self {
        Expr::Const(c.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(e: Expr) -> Self {
        Expr::Neg(Box::new(e))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Expr, b: Expr) -> Self {
        Expr::Add(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(a: Expr, b: Expr) -> Self {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Expr, b: Expr) -> Self {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(a: Expr, b: Expr) -> Self {
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn pow(a: Expr, k: u32) -> Self {
        Expr::Pow(Box::new(a), k)
    }

    pub fn apply(f: FuncName, a: Expr) -> Self {
        Expr::Apply(f, Box::new(a))
    }

    pub fn inverse(a: Expr) -> Self {
        Expr::Inverse(Box::new(a))
    }

    // Binding strength when printed: 1 additive, 2 multiplicative (and
    // fraction literals), 3 prefix minus (and negative literals), 4 power,
    // 5 atoms.
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Const(c) if c.is_negative() => 3,
            Expr::Const(c) if !c.is_integer() => 2,
            Expr::Pow(..) => 4,
            Expr::Const(_) | Expr::Var | Expr::Apply(..) | Expr::Inverse(_) => 5,
        }
    }

    // Printed text ends in a bare integer literal.
    fn ends_with_integer(&self) -> bool {
        match self {
            Expr::Const(c) => c.is_integer(),
            Expr::Neg(e) => e.precedence() >= 3 && e.ends_with_integer(),
            Expr::Add(_, b) | Expr::Sub(_, b) => b.precedence() >= 2 && b.ends_with_integer(),
            Expr::Mul(_, b) | Expr::Div(_, b) => b.precedence() >= 3 && b.ends_with_integer(),
            _ => false,
        }
    }

    // Printed text, in divisor position, starts with a digit.
    fn starts_with_digit(&self) -> bool {
        match self {
            Expr::Const(c) => !c.is_negative(),
            Expr::Pow(a, _) => a.precedence() >= 4 && a.starts_with_digit(),
            _ => false,
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    /// Canonical text form: reparsing it yields an expression that prints
    /// identically.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) if c.is_negative() => {
                f.write_str("-")?;
                Expr::Const(-c).write_operand(f, 3)
            }
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var => f.write_str("x"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.write_operand(f, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_operand(f, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write_operand(f, 2)
            }
            Expr::Mul(a, b) => {
                a.write_operand(f, 2)?;
                f.write_str("*")?;
                b.write_operand(f, 3)
            }
            Expr::Div(a, b) => {
                a.write_operand(f, 2)?;
                f.write_str("/")?;
                // `2/3` would read back as a single fraction literal
                if a.ends_with_integer() && b.starts_with_digit() {
                    write!(f, "({b})")
                } else {
                    b.write_operand(f, 3)
                }
            }
            Expr::Pow(a, k) => {
                a.write_operand(f, 4)?;
                write!(f, "^{k}")
            }
            Expr::Apply(func, a) => write!(f, "{func}({a})"),
            Expr::Inverse(a) => write!(f, "inverse({a})"),
        }
    }
}
