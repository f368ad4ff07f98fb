//! Text grammar for property specs:
//!
//! ```text
//! spec  := term ( "∘" term )*
//! term  := NAME | "free(" atom ("," atom)* ")" | "co(" spec ")"
//! atom  := "K"INT | "Kbar"INT | "P"INT | "C"INT | "2K2" | "g6:"GRAPH6
//! ```
//!
//! `*` is accepted as an ASCII spelling of `∘`. Whitespace between tokens is
//! ignored.

use super::PropertySpec;
use crate::error::{Error, Result};
use crate::graph::{format::parse_graph6, Family, Graph};

pub fn parse_spec(text: &str) -> Result<PropertySpec> {
    let mut p = Parser { text, pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error(format!("unexpected `{}`", p.rest_token())));
    }
    Ok(spec)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::SpecParse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn rest_token(&self) -> &'a str {
        let rest = self.rest();
        let end = rest
            .char_indices()
            .find(|&(i, c)| i > 0 && !c.is_alphanumeric() && c != '_')
            .map_or(rest.len(), |(i, _)| i);
        &rest[..end]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else if self.pos >= self.text.len() {
            Err(self.error(format!("expected `{token}`, found end of input")))
        } else {
            Err(self.error(format!("expected `{token}`, found `{}`", self.rest_token())))
        }
    }

    fn spec(&mut self) -> Result<PropertySpec> {
        let mut factors = vec![self.term()?];
        while self.eat("∘") || self.eat("*") {
            factors.push(self.term()?);
        }
        if factors.len() == 1 {
            Ok(factors.pop().expect("one factor"))
        } else {
            PropertySpec::product_of(factors)
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .char_indices()
            .find(|&(_, c)| !(c.is_ascii_lowercase() || c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += end;
        &rest[..end]
    }

    fn term(&mut self) -> Result<PropertySpec> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident();
        let spec = match name {
            "edgeless" => PropertySpec::Edgeless,
            "complete" => PropertySpec::Complete,
            "cluster" => PropertySpec::Cluster,
            "complete_multipartite" => PropertySpec::CompleteMultipartite,
            "bipartite" => PropertySpec::Bipartite,
            "co_bipartite" => PropertySpec::CoBipartite,
            "complete_bipartite" => PropertySpec::CompleteBipartite,
            "co" => {
                self.expect("(")?;
                let inner = self.spec()?;
                self.expect(")")?;
                PropertySpec::complement_of(inner)
            }
            "free" => {
                self.expect("(")?;
                self.skip_ws();
                if self.rest().starts_with(')') {
                    return Err(self.error("empty forbidden list"));
                }
                let mut atoms = vec![self.atom()?];
                while self.eat(",") {
                    atoms.push(self.atom()?);
                }
                self.expect(")")?;
                PropertySpec::free_of(atoms).map_err(|e| Error::SpecParse {
                    offset: start,
                    message: e.to_string(),
                })?
            }
            "" if self.pos >= self.text.len() => {
                return Err(self.error("expected a property, found end of input"));
            }
            "" => {
                return Err(self.error(format!(
                    "expected a property, found `{}`",
                    self.rest_token()
                )))
            }
            other => {
                return Err(Error::SpecParse {
                    offset: start,
                    message: format!("unknown property `{other}`"),
                })
            }
        };
        Ok(spec)
    }

    fn int(&mut self, what: &str) -> Result<usize> {
        let rest = self.rest();
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.error(format!("malformed atom: `{what}` needs a vertex count")));
        }
        let n = rest[..end]
            .parse()
            .map_err(|_| self.error(format!("vertex count `{}` is too large", &rest[..end])))?;
        self.pos += end;
        Ok(n)
    }

    fn atom(&mut self) -> Result<Graph> {
        self.skip_ws();
        let start = self.pos;
        let malformed = |message: String| Error::SpecParse {
            offset: start,
            message,
        };
        let family = if self.rest().starts_with("2K2") {
            self.pos += 3;
            let k2 = Family::Complete(2).generate()?;
            return k2.disjoint_union(&k2);
        } else if let Some(rest) = self.rest().strip_prefix("g6:") {
            let end = rest
                .find(|c: char| !('?'..='~').contains(&c))
                .unwrap_or(rest.len());
            let code = &rest[..end];
            self.pos += 3 + end;
            let g = parse_graph6(code).map_err(|e| malformed(format!("malformed atom: {e}")))?;
            if g.order() == 0 {
                return Err(malformed(
                    "forbidden graph must have at least one vertex".into(),
                ));
            }
            return Ok(g);
        } else if self.eat("Kbar") {
            Family::Empty(self.int("Kbar")?)
        } else if self.eat("K") {
            Family::Complete(self.int("K")?)
        } else if self.eat("P") {
            Family::Path(self.int("P")?)
        } else if self.eat("C") {
            Family::Cycle(self.int("C")?)
        } else {
            return Err(malformed(format!("malformed atom `{}`", self.rest_token())));
        };
        let order = match family {
            Family::Empty(n) | Family::Complete(n) | Family::Path(n) | Family::Cycle(n) => n,
            _ => unreachable!(),
        };
        if order == 0 {
            return Err(malformed(
                "forbidden graph must have at least one vertex".into(),
            ));
        }
        family
            .generate()
            .map_err(|e| malformed(format!("malformed atom: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn offset_of(text: &str) -> (usize, String) {
        match parse_spec(text) {
            Err(Error::SpecParse { offset, message }) => (offset, message),
            other => panic!("expected a parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn grammar_examples() {
        let k3 = Family::Complete(3).generate().unwrap();
        let p3 = Family::Path(3).generate().unwrap();
        assert_eq!(
            parse_spec("free(K3,P3)").unwrap(),
            PropertySpec::free_of(vec![k3, p3]).unwrap()
        );
        assert_eq!(
            parse_spec("co(bipartite)").unwrap(),
            PropertySpec::ComplementOf(Box::new(PropertySpec::Bipartite))
        );
        assert_eq!(
            parse_spec("edgeless∘complete").unwrap(),
            PropertySpec::ProductOf(vec![PropertySpec::Edgeless, PropertySpec::Complete])
        );
        assert_eq!(
            parse_spec(" edgeless * complete ").unwrap(),
            parse_spec("edgeless∘complete").unwrap()
        );
        assert_eq!(
            parse_spec("co(co(cluster))").unwrap(),
            PropertySpec::Cluster
        );
        assert_eq!(
            parse_spec("co_bipartite").unwrap(),
            PropertySpec::CoBipartite
        );
        assert_eq!(
            parse_spec("free( Kbar3 , g6:Dhc )").unwrap(),
            PropertySpec::free_of(vec![
                Family::Empty(3).generate().unwrap(),
                Family::Cycle(5).generate().unwrap()
            ])
            .unwrap()
        );
        assert_eq!(
            parse_spec("a∘b")
                .err()
                .map(|e| matches!(e, Error::SpecParse { offset: 0, .. })),
            Some(true)
        );
    }

    #[test]
    fn products_of_three() {
        let s = parse_spec("edgeless∘edgeless∘co(edgeless)").unwrap();
        assert_eq!(s.factors().len(), 3);
        assert_eq!(s.to_string(), "edgeless∘edgeless∘co(edgeless)");
    }

    #[test]
    fn diagnostics_carry_byte_offsets() {
        let (off, msg) = offset_of("bipartit");
        assert_eq!(off, 0);
        assert!(msg.contains("unknown property"), "{msg}");

        let (off, msg) = offset_of("free()");
        assert_eq!(off, 5);
        assert!(msg.contains("empty"), "{msg}");

        let (off, msg) = offset_of("free(K3,Q4)");
        assert_eq!(off, 8);
        assert!(msg.contains("malformed atom"), "{msg}");

        let (off, msg) = offset_of("free(K)");
        assert_eq!(off, 6);
        assert!(msg.contains("vertex count"), "{msg}");

        let (_, msg) = offset_of("free(C2)");
        assert!(msg.contains("cycle"), "{msg}");

        let (_, msg) = offset_of("free(K0)");
        assert!(msg.contains("at least one vertex"), "{msg}");

        let (off, msg) = offset_of("co(edgeless");
        assert_eq!(off, 11);
        assert!(msg.contains("end of input"), "{msg}");

        let (off, _) = offset_of("edgeless complete");
        assert_eq!(off, 9);

        let (off, _) = offset_of("edgeless∘");
        assert_eq!(off, "edgeless∘".len());

        let (_, msg) = offset_of("free(g6:D)");
        assert!(msg.contains("truncated"), "{msg}");
    }
}
