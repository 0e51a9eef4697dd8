//! S-expression syntax for operator expressions, e.g.
//! `(qbr q (E 1 0) (Hp 1 1))` or `(prod (scalar q^2) (Ep 0 0))`.
//!
//! Atoms: `(E i k)`, `(F i k)`, `(K i pow)`, `(H i r)`, `(kappa pow)`,
//! `(qc pow)`, `(scalar lit)`; perpendicular atoms `(Ep i k)`, `(Fp i k)`,
//! `(Kp i pow)`, `(phip sign i m)` (the unicode spellings `E⊥` etc. are
//! accepted too); nodes `(sum ...)`, `(prod ...)`, `(qbr p A B)`.
//! Scalar literals are products like `2*q^-1*d^3` or `1/2`.

use super::expr::{OpArena, OpId};
use super::perp::{PerpDict, PerpGen};
use crate::symrat::{Mono, Rat};

#[derive(Debug, PartialEq)]
enum Tok {
    Open,
    Close,
    Word(String),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut word = String::new();
    for ch in s.chars() {
        match ch {
            '(' | ')' => {
                if !word.is_empty() {
                    out.push(Tok::Word(std::mem::take(&mut word)));
                }
                out.push(if ch == '(' { Tok::Open } else { Tok::Close });
            }
            c if c.is_whitespace() => {
                if !word.is_empty() {
                    out.push(Tok::Word(std::mem::take(&mut word)));
                }
            }
            c => word.push(c),
        }
    }
    if !word.is_empty() {
        out.push(Tok::Word(word));
    }
    Ok(out)
}

/// Parse a scalar literal: integer, fraction a/b, or a `*`-separated product
/// of variable powers q^k, d^k, u^k (and uN^k).
pub fn parse_scalar(s: &str) -> Result<Rat, String> {
    let mut acc = Rat::one();
    for piece in s.split('*') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        if let Some((a, b)) = piece.split_once('/') {
            let av: i64 = a.trim().parse().map_err(|_| format!("bad scalar {piece:?}"))?;
            let bv: i64 = b.trim().parse().map_err(|_| format!("bad scalar {piece:?}"))?;
            if bv == 0 {
                return Err("division by zero".into());
            }
            acc = &acc * &(&Rat::from_int(av) / &Rat::from_int(bv));
            continue;
        }
        if let Ok(v) = piece.parse::<i64>() {
            acc = &acc * &Rat::from_int(v);
            continue;
        }
        let (var, exp) = match piece.split_once('^') {
            Some((v, e)) => {
                (v, e.parse::<i32>().map_err(|_| format!("bad exponent in {piece:?}"))?)
            }
            None => (piece, 1),
        };
        let m = match var {
            "q" => Mono::q_pow(exp),
            "d" => Mono::d_pow(exp),
            "u" | "u1" => Mono::u_pow(0, exp),
            "u2" => Mono::u_pow(1, exp),
            "u3" => Mono::u_pow(2, exp),
            "u4" => Mono::u_pow(3, exp),
            _ => return Err(format!("unknown variable {var:?}")),
        };
        acc = &acc * &Rat::from_mono(m);
    }
    Ok(acc)
}

struct Parser<'t, 'a> {
    toks: &'t [Tok],
    pos: usize,
    dict: &'a PerpDict<'a>,
}

impl<'t, 'a> Parser<'t, 'a> {
    fn arena(&self) -> &'a OpArena {
        self.dict.arena
    }

    fn next(&mut self) -> Result<&'t Tok, String> {
        let t = self.toks.get(self.pos).ok_or("unexpected end of expression")?;
        self.pos += 1;
        Ok(t)
    }

    fn word(&mut self) -> Result<&'t str, String> {
        match self.next()? {
            Tok::Word(w) => Ok(w),
            t => Err(format!("expected word, found {t:?}")),
        }
    }

    fn int(&mut self) -> Result<i64, String> {
        let w = self.word()?;
        w.parse().map_err(|_| format!("expected integer, found {w:?}"))
    }

    fn expr(&mut self) -> Result<OpId, String> {
        match self.next()? {
            Tok::Open => {}
            t => return Err(format!("expected '(', found {t:?}")),
        }
        let head = self.word()?.to_string();
        let a = self.arena();
        let id = match head.as_str() {
            "E" => {
                let (i, k) = (self.int()?, self.int()?);
                a.e(i as usize, k as i32)
            }
            "F" => {
                let (i, k) = (self.int()?, self.int()?);
                a.f(i as usize, k as i32)
            }
            "K" => {
                let (i, p) = (self.int()?, self.int()?);
                a.k(i as usize, p as i32)
            }
            "H" => {
                let (i, r) = (self.int()?, self.int()?);
                a.h(i as usize, r as i32)
            }
            "kappa" => a.kappa(self.int()? as i32),
            "qc" => a.qc(self.int()? as i32),
            "scalar" => {
                let w = self.word()?;
                a.scalar(parse_scalar(w)?)
            }
            "Ep" | "E⊥" => {
                let (i, k) = (self.int()?, self.int()?);
                self.dict.perp_mode(PerpGen::E, i as usize, k as i32)
            }
            "Fp" | "F⊥" => {
                let (i, k) = (self.int()?, self.int()?);
                self.dict.perp_mode(PerpGen::F, i as usize, k as i32)
            }
            "Kp" | "K⊥" => {
                let (i, p) = (self.int()?, self.int()?);
                self.dict.perp_k(i as usize, p as i32)
            }
            "Hp" | "H⊥" => {
                let (i, r) = (self.int()?, self.int()?);
                match r {
                    1 => self.dict.perp_h1(i as usize, 1),
                    -1 => self.dict.perp_h1(i as usize, -1),
                    _ => return Err("perpendicular H modes only at r = +-1".into()),
                }
            }
            "phip" | "φ⊥" => {
                let (s, i, m) = (self.int()?, self.int()?, self.int()?);
                self.dict.perp_phi(s as i8, i as usize, m as i32)
            }
            "sum" | "prod" => {
                let mut xs = Vec::new();
                while self.toks.get(self.pos) != Some(&Tok::Close) {
                    xs.push(self.expr()?);
                }
                if head == "sum" {
                    a.sum(xs)
                } else {
                    a.prod(xs)
                }
            }
            "qbr" => {
                let p = parse_scalar(self.word()?)?;
                let x = self.expr()?;
                let y = self.expr()?;
                a.br(x, y, p)
            }
            other => return Err(format!("unknown operator head {other:?}")),
        };
        match self.next()? {
            Tok::Close => Ok(id),
            t => Err(format!("expected ')', found {t:?}")),
        }
    }
}

/// Parse an s-expression into the arena, resolving perpendicular atoms
/// through the dictionary.
pub fn parse(dict: &PerpDict<'_>, input: &str) -> Result<OpId, String> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks: &toks, pos: 0, dict };
    let id = p.expr()?;
    if p.pos != toks.len() {
        return Err("trailing input after expression".into());
    }
    Ok(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::Params;

    #[test]
    fn parse_round_trip() {
        let arena = OpArena::new();
        let dict = PerpDict::new(&arena, 2, Params::unit());
        let id = parse(&dict, "(qbr q^2 (E 1 0) (prod (scalar 2*d^-1) (F 0 1)))").unwrap();
        let s = arena.render(id);
        assert!(s.contains("(E 1 0)") && s.contains("(F 0 1)"));
        assert!(parse(&dict, "(Ep 0 0)").is_ok());
        assert!(parse(&dict, "(oops 1)").is_err());
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(parse_scalar("3").unwrap(), Rat::from_int(3));
        assert_eq!(
            parse_scalar("q^-1*d^2").unwrap(),
            Rat::from_mono(Mono::new(-1, 2))
        );
        assert_eq!(
            parse_scalar("1/2").unwrap(),
            &Rat::from_int(1) / &Rat::from_int(2)
        );
    }
}
