//! The closed catalog of Book II identities and the conditional identities
//! derived from them.

use std::fmt;
use std::str::FromStr;

use super::poly::{poly, Poly, Var};
use super::Book2Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropositionId {
    II1,
    II2,
    II3,
    II4,
    II5,
    II6,
    II7,
    II8,
    II9,
    II10,
    Elegant,
    SubtractiveElegant,
    Chrystal,
    Fowler,
    ExcessStep2,
    ExcessStep3,
    CrossProduct,
}

/// Side condition under which a conditional identity holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// `a^2 = 2b^2`
    Diagonal,
    /// `b^2 = 2b*c1 + c1^2`
    Excess,
}

impl Hypothesis {
    /// The monic quadratic as `(variable, value of its square)`.
    pub fn rule(self) -> (Var, Poly) {
        match self {
            Hypothesis::Diagonal => (Var::A, poly("2b^2").expect("static")),
            Hypothesis::Excess => (Var::B, poly("2b c1 + c1^2").expect("static")),
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Hypothesis::Diagonal => "a^2 = 2b^2",
            Hypothesis::Excess => "b^2 = 2b*c1 + c1^2",
        }
    }
}

/// One registered identity `lhs = rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Proposition {
    pub id: PropositionId,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub hypothesis: Option<Hypothesis>,
}

impl Proposition {
    /// `lhs - rhs`, expanded.
    pub fn difference(&self) -> Poly {
        let l = poly(self.lhs).expect("registered statements parse");
        let r = poly(self.rhs).expect("registered statements parse");
        &l - &r
    }

    pub fn statement(&self) -> String {
        match self.hypothesis {
            Some(h) => format!("if {} then {} = {}", h.statement(), self.lhs, self.rhs),
            None => format!("{} = {}", self.lhs, self.rhs),
        }
    }
}

impl PropositionId {
    pub const ALL: [PropositionId; 17] = [
        PropositionId::II1,
        PropositionId::II2,
        PropositionId::II3,
        PropositionId::II4,
        PropositionId::II5,
        PropositionId::II6,
        PropositionId::II7,
        PropositionId::II8,
        PropositionId::II9,
        PropositionId::II10,
        PropositionId::Elegant,
        PropositionId::SubtractiveElegant,
        PropositionId::Chrystal,
        PropositionId::Fowler,
        PropositionId::ExcessStep2,
        PropositionId::ExcessStep3,
        PropositionId::CrossProduct,
    ];

    pub fn label(self) -> &'static str {
        use PropositionId::*;
        match self {
            II1 => "II.1",
            II2 => "II.2",
            II3 => "II.3",
            II4 => "II.4",
            II5 => "II.5",
            II6 => "II.6",
            II7 => "II.7",
            II8 => "II.8",
            II9 => "II.9",
            II10 => "II.10",
            Elegant => "Elegant",
            SubtractiveElegant => "SubtractiveElegant",
            Chrystal => "Chrystal",
            Fowler => "Fowler",
            ExcessStep2 => "ExcessStep2",
            ExcessStep3 => "ExcessStep3",
            CrossProduct => "CrossProduct",
        }
    }

    pub fn proposition(self) -> Proposition {
        use Hypothesis::Diagonal;
        use PropositionId::*;
        let (lhs, rhs, hypothesis) = match self {
            // three summands stand in for any finite number
            II1 => ("(a + c + d)b", "ab + cb + db", None),
            // II.2 and II.3 with a = b + c and a = b - c substituted
            II2 => ("(b + c)^2", "b(b + c) + c(b + c)", None),
            II3 => ("(b - c)^2", "b(b - c) - c(b - c)", None),
            II4 => ("(a + b)^2", "a^2 + b^2 + 2ab", None),
            // II.5 and II.6 multiplied through by 4 to clear the halves
            II5 => ("a^2 - (a - 2x)^2", "4x(a - x)", None),
            II6 => ("(a + 2x)^2", "a^2 + 4x(a + x)", None),
            II7 => ("(a - b)^2", "a^2 + b^2 - 2ab", None),
            II8 => ("(a + 2b)^2", "a^2 + 4b(a + b)", None),
            II9 => ("a^2 + (2b - a)^2", "2b^2 + 2(a - b)^2", None),
            II10 => ("(a + 2b)^2 + a^2", "2(a + b)^2 + 2b^2", None),
            Elegant => ("(a + 2b)^2", "2(a + b)^2", Some(Diagonal)),
            SubtractiveElegant => ("(2b - a)^2", "2(a - b)^2", Some(Diagonal)),
            Chrystal => ("(2b - a)^2", "6b^2 - 4ab", Some(Diagonal)),
            Fowler => ("(a + 2b)^2", "6b^2 + 4ab", Some(Diagonal)),
            // a = b + c1 squared against 2b^2 gives the excess application for x = b - 2c1
            ExcessStep2 => ("(b + c1)^2 - 2b^2", "c1^2 - (b - 2c1)(2c1 + (b - 2c1))", None),
            // b = 2c1 + c2 substituted into the excess form gives c2^2 = c1(c1 - 2c2)
            ExcessStep3 => ("(2c1 + c2)^2 - 2(2c1 + c2)c1 - c1^2", "c2^2 + 2c1c2 - c1^2", None),
            CrossProduct => ("a(a + b)", "b(a + 2b)", Some(Diagonal)),
        };
        Proposition { id: self, lhs, rhs, hypothesis }
    }
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PropositionId {
    type Err = Book2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let want = s.trim();
        PropositionId::ALL
            .into_iter()
            .find(|id| id.label().eq_ignore_ascii_case(want))
            .ok_or_else(|| Book2Error::UnknownProposition(s.to_string()))
    }
}

/// `lhs - rhs` expands to zero. Only meaningful for identities without a
/// hypothesis; for conditional ones it reports whether the identity happens
/// to hold unconditionally.
pub fn verify_identity(id: PropositionId) -> bool {
    id.proposition().difference().is_zero()
}

/// `lhs - rhs` reduces to zero modulo the identity's hypothesis (or expands
/// to zero outright when it has none).
pub fn verify_conditional(id: PropositionId) -> bool {
    let prop = id.proposition();
    let diff = prop.difference();
    match prop.hypothesis {
        None => diff.is_zero(),
        Some(h) => {
            let (v, rhs) = h.rule();
            diff.reduce(v, &rhs).is_zero()
        }
    }
}

/// Verifies the identity in whichever mode it is registered under.
pub fn verify(id: PropositionId) -> bool {
    match id.proposition().hypothesis {
        None => verify_identity(id),
        Some(_) => verify_conditional(id),
    }
}
