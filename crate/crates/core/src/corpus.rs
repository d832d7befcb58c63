//! A fixed set of formulas over atoms `p, q` and games `g, h`, touching
//! every constructor, nesting depth at most 5.

use crate::syntax::{parse_formula, Formula};

pub const CORPUS: [&str; 50] = [
    "p",
    "!p",
    "p & q",
    "p | !q",
    "!(p & q)",
    "<g>p",
    "<g^d>p",
    "!<g>p",
    "<g ; h>p",
    "<g u h>q",
    "<g n h>p",
    "<g^*>p",
    "<g^x>p",
    "<p?>q",
    "<p!>q",
    "<(g ; h)^d>p",
    "<(g u h)^d>!p",
    "<(g^*)^d>p",
    "<(g^x)^d>q",
    "<(p? ; g)^*>q",
    "<(g ; p!)^x>q",
    "<g^*><h^x>p",
    "<(g^* n h)^x>p",
    "<(g^x u h)^*>!q",
    "<g^*>p & <h^*>!p",
    "<(g u h)^*>(p & q)",
    "<(g n h)^x>(p | q)",
    "<(<g>p)?>q",
    "<(<h^*>q)!>p",
    "<((g ; h)^*)^d>p",
    "<(g^d ; h^d)^*>q",
    "<(g^* ; h^*)^x>p",
    "<((g^*)^x)^*>p",
    "<g><h>p | <h><g>q",
    "<p? u q?>(<g>p)",
    "<(p! ; g) u q?>q",
    "<(p? ; g^*)^x>q",
    "<(g^* n (p? ; p!))^x>q",
    "!<g^*>!p",
    "!<(g ; h)^x>(p & !q)",
    "<(g u h^d)^x>p",
    "<(!p)? ; g>q",
    "<((p & q)! ; h)^*>p",
    "<g>(p & <h>q)",
    "<h^d>(<g^*>p | q)",
    "<(g ; (h ; g)^*)^d>p",
    "<(g n h^d)^*>!p",
    "<(q? ; g)^x ; h>p",
    "<g^x>p | <g^*>q",
    "<((g ; q?)^x)^d>!q",
];

pub fn corpus() -> Vec<Formula> {
    CORPUS.iter().map(|t| parse_formula(t).expect("corpus parses")).collect()
}
