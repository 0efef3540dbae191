//! Rational functions of (x, y) used as series arguments and power bases.

use std::fmt;

/// A rational function of the evaluation point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArgExpr {
    X,
    Y,
    OneMinusX,
    OneMinusY,
    OneMinusXMinusY,
    NegX,
    NegY,
    InvX,
    InvY,
    NegInvX,
    NegInvY,
    InvOneMinusX,
    InvOneMinusY,
    XOverXMinus1,
    YOverYMinus1,
    NegXOverXMinus1,
    NegYOverYMinus1,
    XOverOneMinusY,
    YOverOneMinusX,
    XOverYMinus1,
    YOverXMinus1,
    OneMinusXOverY,
    OneMinusYOverX,
    XMinus1OverX,
    YMinus1OverY,
    XOverS,
    YOverS,
    NegXOverS,
    NegYOverS,
    SOverX,
    SOverY,
    XMinus1OverS,
    YMinus1OverS,
    SOverXMinus1,
    SOverYMinus1,
    NegXOverY,
    NegYOverX,
}

impl ArgExpr {
    /// Value at (x, y); s denotes x + y − 1.
    pub fn eval(self, x: f64, y: f64) -> f64 {
        use ArgExpr::*;
        let s = x + y - 1.0;
        match self {
            X => x,
            Y => y,
            OneMinusX => 1.0 - x,
            OneMinusY => 1.0 - y,
            OneMinusXMinusY => 1.0 - x - y,
            NegX => -x,
            NegY => -y,
            InvX => 1.0 / x,
            InvY => 1.0 / y,
            NegInvX => -1.0 / x,
            NegInvY => -1.0 / y,
            InvOneMinusX => 1.0 / (1.0 - x),
            InvOneMinusY => 1.0 / (1.0 - y),
            XOverXMinus1 => x / (x - 1.0),
            YOverYMinus1 => y / (y - 1.0),
            NegXOverXMinus1 => -x / (x - 1.0),
            NegYOverYMinus1 => -y / (y - 1.0),
            XOverOneMinusY => x / (1.0 - y),
            YOverOneMinusX => y / (1.0 - x),
            XOverYMinus1 => x / (y - 1.0),
            YOverXMinus1 => y / (x - 1.0),
            OneMinusXOverY => (1.0 - x) / y,
            OneMinusYOverX => (1.0 - y) / x,
            XMinus1OverX => (x - 1.0) / x,
            YMinus1OverY => (y - 1.0) / y,
            XOverS => x / s,
            YOverS => y / s,
            NegXOverS => -x / s,
            NegYOverS => -y / s,
            SOverX => s / x,
            SOverY => s / y,
            XMinus1OverS => (x - 1.0) / s,
            YMinus1OverS => (y - 1.0) / s,
            SOverXMinus1 => s / (x - 1.0),
            SOverYMinus1 => s / (y - 1.0),
            NegXOverY => -x / y,
            NegYOverX => -y / x,
        }
    }

    /// The same expression after exchanging x and y.
    pub fn swapped(self) -> Self {
        use ArgExpr::*;
        match self {
            X => Y,
            Y => X,
            OneMinusX => OneMinusY,
            OneMinusY => OneMinusX,
            OneMinusXMinusY => OneMinusXMinusY,
            NegX => NegY,
            NegY => NegX,
            InvX => InvY,
            InvY => InvX,
            NegInvX => NegInvY,
            NegInvY => NegInvX,
            InvOneMinusX => InvOneMinusY,
            InvOneMinusY => InvOneMinusX,
            XOverXMinus1 => YOverYMinus1,
            YOverYMinus1 => XOverXMinus1,
            NegXOverXMinus1 => NegYOverYMinus1,
            NegYOverYMinus1 => NegXOverXMinus1,
            XOverOneMinusY => YOverOneMinusX,
            YOverOneMinusX => XOverOneMinusY,
            XOverYMinus1 => YOverXMinus1,
            YOverXMinus1 => XOverYMinus1,
            OneMinusXOverY => OneMinusYOverX,
            OneMinusYOverX => OneMinusXOverY,
            XMinus1OverX => YMinus1OverY,
            YMinus1OverY => XMinus1OverX,
            XOverS => YOverS,
            YOverS => XOverS,
            NegXOverS => NegYOverS,
            NegYOverS => NegXOverS,
            SOverX => SOverY,
            SOverY => SOverX,
            XMinus1OverS => YMinus1OverS,
            YMinus1OverS => XMinus1OverS,
            SOverXMinus1 => SOverYMinus1,
            SOverYMinus1 => SOverXMinus1,
            NegXOverY => NegYOverX,
            NegYOverX => NegXOverY,
        }
    }

    pub const ALL: [ArgExpr; 37] = {
        use ArgExpr::*;
        [
            X, Y, OneMinusX, OneMinusY, OneMinusXMinusY, NegX, NegY, InvX, InvY, NegInvX,
            NegInvY, InvOneMinusX, InvOneMinusY, XOverXMinus1, YOverYMinus1, NegXOverXMinus1,
            NegYOverYMinus1, XOverOneMinusY, YOverOneMinusX, XOverYMinus1, YOverXMinus1,
            OneMinusXOverY, OneMinusYOverX, XMinus1OverX, YMinus1OverY, XOverS, YOverS,
            NegXOverS, NegYOverS, SOverX, SOverY, XMinus1OverS, YMinus1OverS, SOverXMinus1,
            SOverYMinus1, NegXOverY, NegYOverX,
        ]
    };
}

impl fmt::Display for ArgExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ArgExpr::*;
        let s = match self {
            X => "x",
            Y => "y",
            OneMinusX => "1-x",
            OneMinusY => "1-y",
            OneMinusXMinusY => "1-x-y",
            NegX => "-x",
            NegY => "-y",
            InvX => "1/x",
            InvY => "1/y",
            NegInvX => "-1/x",
            NegInvY => "-1/y",
            InvOneMinusX => "1/(1-x)",
            InvOneMinusY => "1/(1-y)",
            XOverXMinus1 => "x/(x-1)",
            YOverYMinus1 => "y/(y-1)",
            NegXOverXMinus1 => "-x/(x-1)",
            NegYOverYMinus1 => "-y/(y-1)",
            XOverOneMinusY => "x/(1-y)",
            YOverOneMinusX => "y/(1-x)",
            XOverYMinus1 => "x/(y-1)",
            YOverXMinus1 => "y/(x-1)",
            OneMinusXOverY => "(1-x)/y",
            OneMinusYOverX => "(1-y)/x",
            XMinus1OverX => "(x-1)/x",
            YMinus1OverY => "(y-1)/y",
            XOverS => "x/(x+y-1)",
            YOverS => "y/(x+y-1)",
            NegXOverS => "-x/(x+y-1)",
            NegYOverS => "-y/(x+y-1)",
            SOverX => "(x+y-1)/x",
            SOverY => "(x+y-1)/y",
            XMinus1OverS => "(x-1)/(x+y-1)",
            YMinus1OverS => "(y-1)/(x+y-1)",
            SOverXMinus1 => "(x+y-1)/(x-1)",
            SOverYMinus1 => "(x+y-1)/(y-1)",
            NegXOverY => "-x/y",
            NegYOverX => "-y/x",
        };
        f.write_str(s)
    }
}

/// Side condition deciding how a power of a possibly negative base is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RewriteCondition {
    /// Plain principal branch.
    None,
    XMinusYPlus1,
    XMinusYMinus1,
    YMinusXPlus1,
    YMinusXMinus1,
    /// Always rewritten as (1/f)^(−α).
    Never,
}

impl RewriteCondition {
    /// Whether f^α is taken directly (true) or as (1/f)^(−α) (false).
    pub fn holds(self, x: f64, y: f64) -> bool {
        match self {
            RewriteCondition::None => true,
            RewriteCondition::XMinusYPlus1 => x - y + 1.0 > 0.0,
            RewriteCondition::XMinusYMinus1 => x - y - 1.0 > 0.0,
            RewriteCondition::YMinusXPlus1 => -x + y + 1.0 > 0.0,
            RewriteCondition::YMinusXMinus1 => -x + y - 1.0 > 0.0,
            RewriteCondition::Never => false,
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            RewriteCondition::None => "principal",
            RewriteCondition::XMinusYPlus1 => "x-y+1>0",
            RewriteCondition::XMinusYMinus1 => "x-y-1>0",
            RewriteCondition::YMinusXPlus1 => "-x+y+1>0",
            RewriteCondition::YMinusXMinus1 => "-x+y-1>0",
            RewriteCondition::Never => "False",
        }
    }
}

/// Branch rule for a power base.
///
/// Bases that can become negative inside some region of convergence carry a
/// side condition; bases whose principal branch is already correct use `None`.
pub fn rewrite_condition(base: ArgExpr) -> RewriteCondition {
    use ArgExpr::*;
    match base {
        XOverYMinus1 | SOverYMinus1 => RewriteCondition::XMinusYPlus1,
        NegYOverS | XMinus1OverS => RewriteCondition::XMinusYMinus1,
        YOverXMinus1 | SOverXMinus1 => RewriteCondition::YMinusXPlus1,
        NegXOverS | YMinus1OverS => RewriteCondition::YMinusXMinus1,
        InvOneMinusX | InvOneMinusY | NegXOverXMinus1 | NegYOverYMinus1 => RewriteCondition::Never,
        _ => RewriteCondition::None,
    }
}
