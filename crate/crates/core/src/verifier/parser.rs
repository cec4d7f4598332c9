//! Expression parser for polynomials, points, maps and 2×2 matrices over
//! ℚ(ζ₁₂).
//!
//! Grammar: rationals, `w` (ω), `i`, the variables X, Y, Z or s, t (or y in
//! matrix entries), `+ - * / ^` and parentheses. Division is only by nonzero
//! constants. `−`, `·` and `ω` are accepted as aliases.

use num_bigint::BigInt;

use crate::birational::{FunctionFieldMatrix, RationalMapP2};
use crate::covers::MobiusMap;
use crate::error::{Error, Result};
use crate::exactnum::{BigRational, Cyclo, Field, RatFun, Ring};
use crate::plane::ProjPoint;
use crate::polykernel::{vars, MultiPoly, Vars};

const XYZ: [&str; 3] = ["X", "Y", "Z"];
const ST: [&str; 2] = ["s", "t"];

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
    /// Fixed variable set, or chosen by the first variable seen.
    vars: Option<Vars>,
    allowed: &'a [&'a [&'a str]],
    /// Inside a matrix, a top-level `/` separates rows.
    in_matrix: bool,
    depth: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, allowed: &'a [&'a [&'a str]]) -> Self {
        let chars = src
            .char_indices()
            .map(|(_, c)| match c {
                '−' => '-',
                '·' => '*',
                'ω' => 'w',
                c => c,
            })
            .enumerate()
            .collect();
        let vars = (allowed.len() == 1).then(|| vars(allowed[0]));
        Parser { chars, pos: 0, src, vars, allowed, in_matrix: false, depth: 0 }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn here(&self) -> usize {
        self.chars.get(self.pos).map_or(self.chars.len(), |&(i, _)| i)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(err(self.here(), format!("expected '{want}', found '{c}'"))),
            None => Err(err(self.here(), format!("expected '{want}', found end of input"))),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(err(self.here(), format!("unexpected '{c}'"))),
        }
    }

    fn current_vars(&self) -> Vars {
        self.vars.clone().unwrap_or_else(|| vars(self.allowed[0]))
    }

    fn constant(&self, c: Cyclo) -> MultiPoly<Cyclo> {
        MultiPoly::constant(self.current_vars(), c)
    }

    fn expr(&mut self) -> Result<MultiPoly<Cyclo>> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = self.unify(acc);
            let rhs = self.unify(rhs);
            acc = if c == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly<Cyclo>> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            if c == '/' && self.in_matrix && self.depth == 0 {
                break;
            }
            self.pos += 1;
            let at = self.here();
            let rhs = self.unary()?;
            acc = self.unify(acc);
            let rhs = self.unify(rhs);
            if c == '*' {
                acc = acc.mul(&rhs);
            } else {
                let d = rhs
                    .constant_value()
                    .filter(|d| !d.is_zero())
                    .ok_or_else(|| err(at, "division only by nonzero constants"))?;
                acc = acc.scale(&d.inv().expect("nonzero"));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly<Cyclo>> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly<Cyclo>> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.here();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(err(at, "expected a nonnegative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| err(at, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn atom(&mut self) -> Result<MultiPoly<Cyclo>> {
        let at = self.here();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                self.depth += 1;
                let e = self.expr()?;
                self.depth -= 1;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().expect("digits");
                Ok(self.constant(Cyclo::from_rational(BigRational::from_integer(n))))
            }
            Some(c) if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some(&(_, c)) = self.chars.get(self.pos) {
                    if !c.is_alphanumeric() {
                        break;
                    }
                    name.push(c);
                    self.pos += 1;
                }
                self.identifier(&name, at)
            }
            Some(c) => Err(err(at, format!("unexpected '{c}'"))),
            None => Err(err(at, "unexpected end of input")),
        }
    }

    fn identifier(&mut self, name: &str, at: usize) -> Result<MultiPoly<Cyclo>> {
        match name {
            "w" => return Ok(self.constant(Cyclo::omega())),
            "i" => return Ok(self.constant(Cyclo::i())),
            _ => {}
        }
        let Some(set) = self.allowed.iter().find(|set| set.contains(&name)) else {
            return Err(err(at, format!("unknown symbol '{name}'")));
        };
        let v = vars(set);
        match &self.vars {
            Some(cur) if cur.as_ref() != v.as_ref() => {
                return Err(err(at, format!("variable '{name}' mixes variable sets")));
            }
            _ => self.vars = Some(v.clone()),
        }
        let idx = set.iter().position(|n| *n == name).unwrap();
        Ok(MultiPoly::var(v, idx))
    }

    /// Re-embed a constant built before the variable set was known.
    fn unify(&self, p: MultiPoly<Cyclo>) -> MultiPoly<Cyclo> {
        let v = self.current_vars();
        if p.vars().as_ref() == v.as_ref() {
            return p;
        }
        match p.constant_value() {
            Some(c) => MultiPoly::constant(v, c),
            None => p,
        }
    }

    fn full_expr(&mut self) -> Result<MultiPoly<Cyclo>> {
        let e = self.expr()?;
        Ok(self.unify(e))
    }

    fn tuple(&mut self, n: usize, sep: char) -> Result<Vec<MultiPoly<Cyclo>>> {
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            if k > 0 {
                self.expect(sep)?;
            }
            out.push(self.full_expr()?);
        }
        Ok(out.into_iter().map(|p| self.unify(p)).collect())
    }
}

/// Polynomial in X, Y, Z or in s, t (constants default to X, Y, Z).
pub fn parse_poly(text: &str) -> Result<MultiPoly<Cyclo>> {
    let mut p = Parser::new(text, &[&XYZ, &ST]);
    let e = p.full_expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_scalar(text: &str) -> Result<Cyclo> {
    let mut p = Parser::new(text, &[&XYZ]);
    let e = p.full_expr()?;
    p.finish()?;
    e.constant_value().ok_or_else(|| err(0, format!("'{}' is not a constant", p.src)))
}

/// "(a : b : c)" with constant coordinates.
pub fn parse_point(text: &str) -> Result<ProjPoint> {
    ProjPoint::new(parse_point_coords(text)?)
}

/// Coordinates of "(a : b : c)" as written, before normalization.
pub fn parse_point_coords(text: &str) -> Result<[Cyclo; 3]> {
    let mut p = Parser::new(text, &[&XYZ]);
    p.expect('(')?;
    let at = p.here();
    let c = p.tuple(3, ':')?;
    p.expect(')')?;
    p.finish()?;
    let coords: Vec<Cyclo> = c
        .iter()
        .map(|e| e.constant_value().ok_or_else(|| err(at, "point coordinates must be constants")))
        .collect::<Result<_>>()?;
    Ok(coords.try_into().expect("three coordinates"))
}

/// "(F0 : F1 : F2)" with homogeneous components of one degree in X, Y, Z.
pub fn parse_map(text: &str) -> Result<RationalMapP2> {
    let mut p = Parser::new(text, &[&XYZ]);
    p.expect('(')?;
    let c = p.tuple(3, ':')?;
    p.expect(')')?;
    p.finish()?;
    RationalMapP2::new(c.try_into().expect("three components"))
}

/// "[a, b / c, d]" with polynomial entries in y.
pub fn parse_ffmatrix(text: &str) -> Result<FunctionFieldMatrix> {
    let mut p = Parser::new(text, &[&["y"]]);
    p.in_matrix = true;
    p.expect('[')?;
    let top = p.tuple(2, ',')?;
    p.expect('/')?;
    let bottom = p.tuple(2, ',')?;
    p.expect(']')?;
    p.finish()?;
    let entry = |e: &MultiPoly<Cyclo>| RatFun::from_poly(e.to_univariate(0).expect("univariate in y"));
    MobiusMap::new([[entry(&top[0]), entry(&top[1])], [entry(&bottom[0]), entry(&bottom[1])]])
}

/// "[a, b / c, d]" with constant entries.
pub fn parse_mobius(text: &str) -> Result<MobiusMap<Cyclo>> {
    let mut p = Parser::new(text, &[&XYZ]);
    p.in_matrix = true;
    p.expect('[')?;
    let at = p.here();
    let top = p.tuple(2, ',')?;
    p.expect('/')?;
    let bottom = p.tuple(2, ',')?;
    p.expect(']')?;
    p.finish()?;
    let entry = |e: &MultiPoly<Cyclo>| e.constant_value().ok_or_else(|| err(at, "matrix entries must be constants"));
    MobiusMap::new([[entry(&top[0])?, entry(&top[1])?], [entry(&bottom[0])?, entry(&bottom[1])?]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birational::{sigma1, sigma1_fiber_matrix};
    use crate::plane::curve_a;

    #[test]
    fn polynomials() {
        assert_eq!(&parse_poly("X^4 - X^3*Y + Y^3*Z").unwrap(), curve_a().defining());
        assert!(parse_poly("0").unwrap().is_zero());
        let f = parse_poly("s^3 − 3*s*t^2").unwrap();
        assert_eq!(f.to_string(), "s^3 - 3*s*t^2");
        assert_eq!(parse_poly("(1/2)*X + w*i").unwrap().to_string(), "1/2*X + (w*i)");
        assert_eq!(parse_scalar("ω^3").unwrap(), Cyclo::one());
        assert_eq!(parse_scalar("-3/4").unwrap(), Cyclo::frac(-3, 4));
    }

    #[test]
    fn maps_points_matrices() {
        let m = parse_map("(X*Y : Y*((w-1)*X + w*Y) : Z*((w-1)*X + w*Y))").unwrap();
        assert_eq!(m, sigma1());
        assert_eq!(parse_point("(8 : -16 : 3)").unwrap(), ProjPoint::from_ints([8, -16, 3]));
        let f = parse_ffmatrix("[y, 0 / w - 1, w*y]").unwrap();
        assert!(f.projectively_eq(&sigma1_fiber_matrix()));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("X + * Y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly("X + s"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("X / Y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("X / 0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("q*X"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_map("(X : Y^2 : Z)"), Err(Error::Degree { .. })));
        assert!(matches!(parse_point("(X : 1 : 0)"), Err(Error::Parse { .. })));
    }
}
