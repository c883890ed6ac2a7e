//! Formulas and judgements of the Lambek-Grishin calculus.

use std::fmt;
use std::sync::Arc;

/// An atomic formula name. Two atoms are equal iff their names are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(Arc<str>);

impl Atom {
    /// Creates an atom; the name must be a nonempty string without whitespace.
    pub fn new(name: &str) -> Atom {
        assert!(
            !name.is_empty() && !name.chars().any(char::is_whitespace),
            "invalid atom name {name:?}"
        );
        Atom(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The six binary connectives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Connective {
    /// `⊗`
    Prod,
    /// `⇒`
    ImpR,
    /// `⇐`
    ImpL,
    /// `⊕`
    Sum,
    /// `⇚`
    DiffL,
    /// `⇛`
    DiffR,
}

impl Connective {
    pub const ALL: [Connective; 6] = [
        Connective::Prod,
        Connective::ImpR,
        Connective::ImpL,
        Connective::Sum,
        Connective::DiffL,
        Connective::DiffR,
    ];

    pub fn unicode(self) -> &'static str {
        match self {
            Connective::Prod => "⊗",
            Connective::ImpR => "⇒",
            Connective::ImpL => "⇐",
            Connective::Sum => "⊕",
            Connective::DiffL => "⇚",
            Connective::DiffR => "⇛",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Connective::Prod => "*",
            Connective::ImpR => "=>",
            Connective::ImpL => "<=",
            Connective::Sum => "+",
            Connective::DiffL => "-<",
            Connective::DiffR => ">-",
        }
    }
}

/// The main connective of a formula, with `El` standing for atoms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MainConnective {
    El,
    Bin(Connective),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    El(Atom),
    Bin(Connective, Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn el(name: &str) -> Formula {
        Formula::El(Atom::new(name))
    }

    pub fn bin(conn: Connective, l: Formula, r: Formula) -> Formula {
        Formula::Bin(conn, Arc::new(l), Arc::new(r))
    }

    pub fn prod(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::Prod, l, r)
    }

    pub fn imp_r(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::ImpR, l, r)
    }

    pub fn imp_l(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::ImpL, l, r)
    }

    pub fn sum(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::Sum, l, r)
    }

    pub fn diff_l(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::DiffL, l, r)
    }

    pub fn diff_r(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::DiffR, l, r)
    }

    pub fn main_connective(&self) -> MainConnective {
        match self {
            Formula::El(_) => MainConnective::El,
            Formula::Bin(c, _, _) => MainConnective::Bin(*c),
        }
    }

    /// Number of nodes (atoms and connectives).
    pub fn size(&self) -> usize {
        match self {
            Formula::El(_) => 1,
            Formula::Bin(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Height of the formula tree; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::El(_) => 0,
            Formula::Bin(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn as_bin(&self) -> Option<(Connective, &Formula, &Formula)> {
        match self {
            Formula::El(_) => None,
            Formula::Bin(c, l, r) => Some((*c, l, r)),
        }
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Formula::El(a) => out.push(a.clone()),
            Formula::Bin(_, l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Renders with the given connective glyphs; binary subformulas are always
    /// parenthesised, the outermost connective is not.
    pub fn render(&self, notation: Notation) -> String {
        let mut s = String::new();
        self.render_into(notation, false, &mut s);
        s
    }

    fn render_into(&self, notation: Notation, nested: bool, out: &mut String) {
        match self {
            Formula::El(a) => out.push_str(a.name()),
            Formula::Bin(c, l, r) => {
                if nested {
                    out.push('(');
                }
                l.render_into(notation, true, out);
                out.push(' ');
                out.push_str(match notation {
                    Notation::Unicode => c.unicode(),
                    Notation::Ascii => c.ascii(),
                });
                out.push(' ');
                r.render_into(notation, true, out);
                if nested {
                    out.push(')');
                }
            }
        }
    }
}

/// Glyph set used when printing formulas and judgements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Notation {
    Unicode,
    Ascii,
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Unicode))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sequent `lhs ⊢ rhs` with a single formula on each side.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Judgement {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Judgement {
    pub fn new(lhs: Formula, rhs: Formula) -> Judgement {
        Judgement { lhs, rhs }
    }

    pub fn size(&self) -> usize {
        self.lhs.size() + self.rhs.size()
    }

    pub fn side(&self, side: Side) -> &Formula {
        match side {
            Side::Antecedent => &self.lhs,
            Side::Succedent => &self.rhs,
        }
    }

    pub fn render(&self, notation: Notation) -> String {
        let turnstile = match notation {
            Notation::Unicode => "⊢",
            Notation::Ascii => "|-",
        };
        format!(
            "{} {} {}",
            self.lhs.render(notation),
            turnstile,
            self.rhs.render(notation)
        )
    }
}

impl fmt::Display for Judgement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Unicode))
    }
}

impl fmt::Debug for Judgement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Side of the turnstile.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Antecedent,
    Succedent,
}
