//! Atomic symbols of the jet space and the monomials built from them.
//!
//! The polynomial ring is generated by the independent variables `t`, `x`,
//! the jet coordinates of the four dependent variables (`u`, `v` and the
//! nonlocal pair `ubar`, `vbar`), and two kinds of bookkeeping atoms that
//! never appear in user-facing expressions: ansatz coefficients (`Coeff`)
//! and equation markers (`EqMarker`) used to trace reductions.

use std::fmt;

/// A dependent variable of the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dependent {
    U,
    V,
    UBar,
    VBar,
}

impl Dependent {
    pub const ALL: [Dependent; 4] = [Dependent::U, Dependent::V, Dependent::UBar, Dependent::VBar];

    pub fn name(self) -> &'static str {
        match self {
            Dependent::U => "u",
            Dependent::V => "v",
            Dependent::UBar => "ubar",
            Dependent::VBar => "vbar",
        }
    }

    /// The nonlocal partner variable: `u ↦ ubar`, `v ↦ vbar`.
    pub fn bar(self) -> Dependent {
        match self {
            Dependent::U => Dependent::UBar,
            Dependent::V => Dependent::VBar,
            other => other,
        }
    }
}

/// A derivative coordinate of one dependent variable.
///
/// `(dependent, t_order, x_order)` uniquely identifies the coordinate:
/// `u` is `(U, 0, 0)`, `u_t` is `(U, 1, 0)`, `u_txx` is `(U, 1, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetCoordinate {
    pub dependent: Dependent,
    pub t_order: u32,
    pub x_order: u32,
}

impl JetCoordinate {
    pub fn new(dependent: Dependent, t_order: u32, x_order: u32) -> Self {
        JetCoordinate {
            dependent,
            t_order,
            x_order,
        }
    }

    pub fn base(dependent: Dependent) -> Self {
        JetCoordinate::new(dependent, 0, 0)
    }

    /// Total derivative order `t_order + x_order`.
    pub fn order(&self) -> u32 {
        self.t_order + self.x_order
    }

    /// The coordinate with the derivative order in `dir` raised by one.
    pub fn raised(&self, dir: Direction) -> Self {
        match dir {
            Direction::T => JetCoordinate::new(self.dependent, self.t_order + 1, self.x_order),
            Direction::X => JetCoordinate::new(self.dependent, self.t_order, self.x_order + 1),
        }
    }
}

impl fmt::Display for JetCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dependent.name())?;
        if self.order() > 0 {
            write!(f, "_")?;
            for _ in 0..self.t_order {
                write!(f, "t")?;
            }
            for _ in 0..self.x_order {
                write!(f, "x")?;
            }
        }
        Ok(())
    }
}

/// A direction of total differentiation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    T,
    X,
}

/// An atomic generator of the polynomial ring.
///
/// The derived `Ord` fixes the symbol enumeration used by the monomial
/// order: `t`, `x`, then jet coordinates sorted by (dependent, t_order,
/// x_order), then the internal bookkeeping atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// The independent variable `t`.
    T,
    /// The independent variable `x`.
    X,
    /// A jet coordinate of a dependent variable.
    Jet(JetCoordinate),
    /// An unknown ansatz coefficient, internal to the determining-system
    /// solvers.
    Coeff(u32),
    /// Marker for `D_t^j D_x^k` applied to equation `eq` (1-based), internal
    /// to reduction traces.
    EqMarker { eq: u8, t_order: u32, x_order: u32 },
}

impl Symbol {
    pub fn jet(dependent: Dependent, t_order: u32, x_order: u32) -> Self {
        Symbol::Jet(JetCoordinate::new(dependent, t_order, x_order))
    }

    pub fn dep(dependent: Dependent) -> Self {
        Symbol::Jet(JetCoordinate::base(dependent))
    }

    /// The derivative of this atom in direction `dir`, if the atom is
    /// differentiable (jet coordinates and equation markers); `None` for
    /// atoms with zero derivative handled elsewhere (`t`, `x`, `Coeff`).
    pub fn raised(&self, dir: Direction) -> Option<Symbol> {
        match self {
            Symbol::Jet(z) => Some(Symbol::Jet(z.raised(dir))),
            Symbol::EqMarker { eq, t_order, x_order } => Some(match dir {
                Direction::T => Symbol::EqMarker {
                    eq: *eq,
                    t_order: t_order + 1,
                    x_order: *x_order,
                },
                Direction::X => Symbol::EqMarker {
                    eq: *eq,
                    t_order: *t_order,
                    x_order: x_order + 1,
                },
            }),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::T => write!(f, "t"),
            Symbol::X => write!(f, "x"),
            Symbol::Jet(z) => write!(f, "{z}"),
            Symbol::Coeff(i) => write!(f, "c{i}"),
            Symbol::EqMarker { eq, t_order, x_order } => {
                write!(f, "<F{eq}")?;
                if t_order + x_order > 0 {
                    write!(f, "_")?;
                    for _ in 0..*t_order {
                        write!(f, "t")?;
                    }
                    for _ in 0..*x_order {
                        write!(f, "x")?;
                    }
                }
                write!(f, ">")
            }
        }
    }
}

/// A power product of symbols with positive exponents, kept sorted by symbol.
///
/// The ordering is degree-lexicographic: higher total degree first, ties
/// broken by comparing exponents along the symbol enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Symbol, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn symbol(s: Symbol) -> Self {
        Monomial {
            factors: vec![(s, 1)],
        }
    }

    /// Builds from possibly unsorted, possibly repeated factors.
    pub fn from_factors(factors: impl IntoIterator<Item = (Symbol, u32)>) -> Self {
        let mut v: Vec<(Symbol, u32)> = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable_by_key(|&(s, _)| s);
        v.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        Monomial { factors: v }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.factors
    }

    pub fn exponent_of(&self, s: Symbol) -> u32 {
        self.factors
            .iter()
            .find(|&&(sym, _)| sym == s)
            .map_or(0, |&(_, e)| e)
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.exponent_of(s) > 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (sa, ea) = self.factors[i];
            let (sb, eb) = other.factors[j];
            match sa.cmp(&sb) {
                std::cmp::Ordering::Less => {
                    out.push((sa, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((sb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((sa, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// Divides out one power of `s`; `None` if `s` does not occur.
    pub fn without_one(&self, s: Symbol) -> Option<Monomial> {
        let pos = self.factors.iter().position(|&(sym, _)| sym == s)?;
        let mut factors = self.factors.clone();
        if factors[pos].1 == 1 {
            factors.remove(pos);
        } else {
            factors[pos].1 -= 1;
        }
        Some(Monomial { factors })
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.factors.iter().map(|&(s, _)| s)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Lexicographic tie-break: at the smallest symbol where the
        // exponents differ, the larger exponent wins.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(sa, ea)), Some(&(sb, eb))) => match sa.cmp(&sb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (s, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{s}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_enumeration_order() {
        let ut = Symbol::jet(Dependent::U, 1, 0);
        let ux = Symbol::jet(Dependent::U, 0, 1);
        let v = Symbol::dep(Dependent::V);
        assert!(Symbol::T < Symbol::X);
        assert!(Symbol::X < Symbol::dep(Dependent::U));
        assert!(Symbol::dep(Dependent::U) < ux);
        // t-derivatives sort above all pure x-derivatives of the same
        // dependent: (1,0) > (0,k) lexicographically on (t_order, x_order).
        assert!(ux < ut);
        assert!(ut < v);
        assert!(v < Symbol::Coeff(0));
    }

    #[test]
    fn monomial_deglex() {
        let u = Monomial::symbol(Symbol::dep(Dependent::U));
        let v = Monomial::symbol(Symbol::dep(Dependent::V));
        let u2 = u.mul(&u);
        let uv = u.mul(&v);
        assert!(u2 > u);
        assert!(u2 > uv); // same degree, u^2 has the higher exponent at u
        assert!(uv > v.mul(&v));
        assert_eq!(u.mul(&v), v.mul(&u));
    }

    #[test]
    fn monomial_merge_and_divide() {
        let u = Symbol::dep(Dependent::U);
        let m = Monomial::from_factors([(u, 1), (Symbol::X, 2), (u, 2)]);
        assert_eq!(m.exponent_of(u), 3);
        assert_eq!(m.degree(), 5);
        let d = m.without_one(u).unwrap();
        assert_eq!(d.exponent_of(u), 2);
        assert!(m.without_one(Symbol::T).is_none());
    }

    #[test]
    fn coordinate_display() {
        assert_eq!(JetCoordinate::new(Dependent::U, 1, 2).to_string(), "u_txx");
        assert_eq!(JetCoordinate::base(Dependent::VBar).to_string(), "vbar");
        assert_eq!(JetCoordinate::new(Dependent::V, 0, 3).to_string(), "v_xxx");
    }
}
