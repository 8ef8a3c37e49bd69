use std::collections::BTreeSet;
use std::fmt;

/// First-order formula over a graph signature: one symmetric, irreflexive
/// edge relation `E` and equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Edge(String, String),
    Eq(String, String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

pub fn edge(x: &str, y: &str) -> Formula {
    Formula::Edge(x.into(), y.into())
}

pub fn eq(x: &str, y: &str) -> Formula {
    Formula::Eq(x.into(), y.into())
}

pub fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

pub fn implies(a: Formula, b: Formula) -> Formula {
    Formula::Implies(Box::new(a), Box::new(b))
}

pub fn exists(x: &str, f: Formula) -> Formula {
    Formula::Exists(x.into(), Box::new(f))
}

pub fn forall(x: &str, f: Formula) -> Formula {
    Formula::Forall(x.into(), Box::new(f))
}

impl Formula {
    /// Number of AST nodes; atoms count as one.
    pub fn size(&self) -> usize {
        match self {
            Formula::Edge(..) | Formula::Eq(..) => 1,
            Formula::Not(f) | Formula::Exists(_, f) | Formula::Forall(_, f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Edge(..) | Formula::Eq(..) => 0,
            Formula::Not(f) => f.quantifier_depth(),
            Formula::Exists(_, f) | Formula::Forall(_, f) => 1 + f.quantifier_depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.quantifier_depth().max(b.quantifier_depth())
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        let mut atom = |vars: [&String; 2], bound: &Vec<&str>| {
            for v in vars {
                if !bound.contains(&v.as_str()) {
                    out.insert(v.clone());
                }
            }
        };
        match self {
            Formula::Edge(x, y) | Formula::Eq(x, y) => atom([x, y], bound),
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(x, f) | Formula::Forall(x, f) => {
                bound.push(x);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit_vars(&mut |v| {
            out.insert(v.to_string());
        });
        out
    }

    fn visit_vars(&self, f: &mut impl FnMut(&str)) {
        match self {
            Formula::Edge(x, y) | Formula::Eq(x, y) => {
                f(x);
                f(y);
            }
            Formula::Not(g) => g.visit_vars(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.visit_vars(f);
                b.visit_vars(f);
            }
            Formula::Exists(x, g) | Formula::Forall(x, g) => {
                f(x);
                g.visit_vars(f);
            }
        }
    }
}

/// Prints the concrete syntax accepted by the parser, e.g.
/// `exists x. (E(x,y) & ~x=y)`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Edge(x, y) => write!(f, "E({x},{y})"),
            Formula::Eq(x, y) => write!(f, "{x}={y}"),
            Formula::Not(g) => write!(f, "~{g}"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
            Formula::Exists(x, g) => write!(f, "exists {x}. {g}"),
            Formula::Forall(x, g) => write!(f, "forall {x}. {g}"),
        }
    }
}
