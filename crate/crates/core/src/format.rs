//! Line-oriented text formats.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.
//!
//! Type D structure:
//! ```text
//! gen v1 i0
//! arrow v1 r12 v2
//! ```
//! A∞-module (`ring` defaults to `F2`; `unbounded` marks a truncation):
//! ```text
//! ring laurent
//! gen p i0
//! action p [r12] -> t q
//! action p [] -> 1 q
//! unbounded
//! ```
//! Multicurve, one component per line, `L` and `M` the inverses of `l` and
//! `m`, with `@z` on the component through the basepoint:
//! ```text
//! lll
//! l @z
//! ```
//! Seifert data: `base=disk; cones=1/2,-1/2`.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;

use crate::algebra::{Basis, Idempotent, LaurentPoly};
use crate::curves::{CurveComponent, Letter, MultiCurve};
use crate::seifert::{Base, SeifertData};
use crate::structures::{AInftyMod, Arrow, Generator, Ring, TypeD};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    TypeD,
    AInfty,
    Curve,
    Seifert,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::TypeD => "typed",
            Kind::AInfty => "ainfty",
            Kind::Curve => "curve",
            Kind::Seifert => "seifert",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    TypeD(TypeD),
    AInfty(AInftyMod),
    Curve(MultiCurve),
    Seifert(SeifertData),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::TypeD(_) => Kind::TypeD,
            Document::AInfty(_) => Kind::AInfty,
            Document::Curve(_) => Kind::Curve,
            Document::Seifert(_) => Kind::Seifert,
        }
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Document::TypeD(p) => f.write_str(&print_typed(p)),
            Document::AInfty(m) => f.write_str(&print_ainfty(m)),
            Document::Curve(c) => f.write_str(&print_curve(c)),
            Document::Seifert(s) => writeln!(f, "{s}"),
        }
    }
}

/// Content lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        msg: msg.into(),
    }
}

/// Guesses the kind from the leading keywords.
pub fn detect_kind(text: &str) -> Kind {
    let mut kind = Kind::Curve;
    for (_, l) in lines(text) {
        let t = l.trim_start();
        if t.starts_with("base=") || t.starts_with("base =") {
            return Kind::Seifert;
        }
        let head = t.split_whitespace().next().unwrap_or("");
        match head {
            "action" | "ring" | "unbounded" => return Kind::AInfty,
            "gen" | "arrow" => kind = Kind::TypeD,
            _ => {}
        }
    }
    kind
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    Ok(match detect_kind(text) {
        Kind::TypeD => Document::TypeD(parse_typed(text)?),
        Kind::AInfty => Document::AInfty(parse_ainfty(text)?),
        Kind::Curve => Document::Curve(parse_curve(text)?),
        Kind::Seifert => Document::Seifert(parse_seifert(text)?),
    })
}

#[derive(Default)]
struct Gens {
    list: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl Gens {
    fn add(&mut self, ln: usize, toks: &[(usize, &str)]) -> Result<(), ParseError> {
        let [_, (nc, name), (ic, idem)] = toks else {
            return Err(err(ln, 1, "expected `gen NAME i0|i1`"));
        };
        let idem: Idempotent = idem
            .parse()
            .map_err(|_| err(ln, *ic, format!("expected i0 or i1, found `{idem}`")))?;
        if self.index.insert(name.to_string(), self.list.len()).is_some() {
            return Err(err(ln, *nc, format!("duplicate generator `{name}`")));
        }
        self.list.push(Generator {
            name: name.to_string(),
            idem,
        });
        Ok(())
    }

    fn get(&self, ln: usize, (col, name): (usize, &str)) -> Result<usize, ParseError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| err(ln, col, format!("unknown generator `{name}`")))
    }
}

fn chord(ln: usize, (col, s): (usize, &str)) -> Result<Basis, ParseError> {
    s.parse()
        .map_err(|_| err(ln, col, format!("unknown algebra element `{s}`")))
}

pub fn parse_typed(text: &str) -> Result<TypeD, ParseError> {
    let mut gens = Gens::default();
    let mut arrows: Vec<(usize, Arrow)> = Vec::new();
    for (ln, l) in lines(text) {
        let toks = tokens(l);
        match toks[0].1 {
            "gen" => gens.add(ln, &toks)?,
            "arrow" => {
                let [_, s, a, d] = toks[..] else {
                    return Err(err(ln, 1, "expected `arrow SRC LABEL DST`"));
                };
                arrows.push((
                    ln,
                    Arrow {
                        src: gens.get(ln, s)?,
                        label: chord(ln, a)?,
                        dst: gens.get(ln, d)?,
                    },
                ));
            }
            other => return Err(err(ln, toks[0].0, format!("unexpected `{other}`"))),
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for (ln, a) in &arrows {
        if !seen.insert(*a) {
            return Err(err(*ln, 1, "duplicate arrow"));
        }
    }
    Ok(TypeD::new(gens.list, arrows.into_iter().map(|x| x.1)).expect("names and arrows checked"))
}

pub fn print_typed(p: &TypeD) -> String {
    let mut out = String::new();
    for g in p.generators() {
        out += &format!("gen {} {}\n", g.name, g.idem);
    }
    let g = p.generators();
    for a in p.arrows() {
        out += &format!("arrow {} {} {}\n", g[a.src].name, a.label, g[a.dst].name);
    }
    out
}

pub fn parse_ainfty(text: &str) -> Result<AInftyMod, ParseError> {
    let mut ring = Ring::F2;
    let mut unbounded = false;
    let mut gens = Gens::default();
    let mut actions = Vec::new();
    for (ln, l) in lines(text) {
        let toks = tokens(l);
        match toks[0].1 {
            "ring" => {
                ring = match toks.get(1).map(|t| t.1) {
                    Some("F2") if toks.len() == 2 => Ring::F2,
                    Some("laurent") if toks.len() == 2 => Ring::Laurent,
                    _ => return Err(err(ln, 1, "expected `ring F2|laurent`")),
                }
            }
            "unbounded" if toks.len() == 1 => unbounded = true,
            "gen" => gens.add(ln, &toks)?,
            "action" => {
                let src = *toks.get(1).ok_or_else(|| err(ln, 1, "missing source generator"))?;
                let src = gens.get(ln, src)?;
                let open = l.find('[').ok_or_else(|| err(ln, 1, "missing `[`"))?;
                let close = l.find(']').ok_or_else(|| err(ln, 1, "missing `]`"))?;
                if close < open {
                    return Err(err(ln, close + 1, "unbalanced brackets"));
                }
                let labels = tokens(&l[open + 1..close])
                    .into_iter()
                    .map(|(c, s)| chord(ln, (c + open + 1, s)))
                    .collect::<Result<Vec<_>, _>>()?;
                let rest: Vec<(usize, &str)> = tokens(&l[close + 1..])
                    .into_iter()
                    .map(|(c, s)| (c + close + 1, s))
                    .collect();
                let [(ac, arrow), (cc, coeff), dst] = rest[..] else {
                    return Err(err(ln, close + 2, "expected `-> COEFF DST`"));
                };
                if arrow != "->" {
                    return Err(err(ln, ac, "expected `->`"));
                }
                let coeff: LaurentPoly = coeff
                    .parse()
                    .map_err(|_| err(ln, cc, format!("bad coefficient `{coeff}`")))?;
                actions.push((src, labels, coeff, gens.get(ln, dst)?));
            }
            other => return Err(err(ln, toks[0].0, format!("unexpected `{other}`"))),
        }
    }
    Ok(AInftyMod::new(ring, gens.list, actions, unbounded).expect("names checked"))
}

pub fn print_ainfty(m: &AInftyMod) -> String {
    let mut out = format!("ring {}\n", m.ring().name());
    let g = m.generators();
    for x in g {
        out += &format!("gen {} {}\n", x.name, x.idem);
    }
    for ((x, labels), value) in m.actions() {
        let labels: Vec<&str> = labels.iter().map(|b| b.name()).collect();
        for (y, c) in value {
            out += &format!("action {} [{}] -> {} {}\n", g[*x].name, labels.join(" "), c, g[*y].name);
        }
    }
    if m.declared_unbounded() {
        out += "unbounded\n";
    }
    out
}

pub fn parse_curve(text: &str) -> Result<MultiCurve, ParseError> {
    let mut comps = Vec::new();
    let mut basepoint_line = None;
    for (ln, l) in lines(text) {
        let toks = tokens(l);
        let (wc, word) = toks[0];
        let z = match &toks[1..] {
            [] => false,
            [(_, "@z")] => true,
            [(c, other), ..] => return Err(err(ln, *c, format!("unexpected `{other}`"))),
        };
        let letters = word
            .chars()
            .enumerate()
            .map(|(i, ch)| {
                Letter::from_char(ch).ok_or_else(|| err(ln, wc + i, format!("unexpected letter `{ch}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if z {
            if let Some(first) = basepoint_line {
                return Err(err(ln, 1, format!("second `@z` component (first on line {first})")));
            }
            basepoint_line = Some(ln);
        }
        comps.push(
            CurveComponent::new(&letters, z).map_err(|e| err(ln, wc, e.to_string()))?,
        );
    }
    Ok(MultiCurve::new(comps).expect("one basepoint component at most"))
}

pub fn print_curve(c: &MultiCurve) -> String {
    c.components().iter().map(|x| format!("{x}\n")).collect()
}

fn rational(ln: usize, col: usize, s: &str) -> Result<Ratio<i64>, ParseError> {
    let bad = || err(ln, col, format!("bad cone invariant `{s}`; expected b/a with a >= 1"));
    let (b, a) = match s.split_once('/') {
        Some((b, a)) => (b.trim(), a.trim()),
        None => (s.trim(), "1"),
    };
    let b: i64 = b.parse().map_err(|_| bad())?;
    let a: i64 = a.parse().map_err(|_| bad())?;
    if a < 1 {
        return Err(bad());
    }
    Ok(Ratio::new(b, a))
}

pub fn parse_seifert(text: &str) -> Result<SeifertData, ParseError> {
    let mut found: Option<SeifertData> = None;
    for (ln, l) in lines(text) {
        if found.is_some() {
            return Err(err(ln, 1, "expected a single line of Seifert data"));
        }
        let mut base = None;
        let mut cones = None;
        let mut col = 1;
        for field in l.split(';') {
            let fc = col + field.len() - field.trim_start().len();
            col += field.chars().count() + 1;
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let Some((key, value)) = field.split_once('=') else {
                return Err(err(ln, fc, format!("expected key=value, found `{field}`")));
            };
            let vc = fc + key.len() + 1;
            match key.trim() {
                "base" => {
                    let b: Base = value.trim().parse().map_err(|e: crate::seifert::SeifertError| err(ln, vc, e.to_string()))?;
                    base = Some(b);
                }
                "cones" => {
                    let mut list = Vec::new();
                    let mut c = vc;
                    for item in value.split(',') {
                        if !item.trim().is_empty() {
                            list.push(rational(ln, c, item)?);
                        }
                        c += item.chars().count() + 1;
                    }
                    cones = Some(list);
                }
                other => return Err(err(ln, fc, format!("unknown key `{other}`"))),
            }
        }
        let base = base.ok_or_else(|| err(ln, 1, "missing base=disk|mobius"))?;
        found = Some(SeifertData {
            base,
            cones: cones.unwrap_or_default(),
        });
    }
    found.ok_or_else(|| err(1, 1, "empty Seifert file"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{longitude_cycle, solid_torus_module};

    #[test]
    fn typed_round_trip() {
        let p = longitude_cycle(3);
        let text = print_typed(&p);
        assert_eq!(text, "gen v1 i0\ngen v2 i0\ngen v3 i0\narrow v1 r12 v2\narrow v2 r12 v3\narrow v3 r12 v1\n");
        assert_eq!(parse_typed(&text).unwrap(), p);
        assert_eq!(detect_kind(&text), Kind::TypeD);
    }

    #[test]
    fn ainfty_round_trip() {
        for twisted in [false, true] {
            let m = solid_torus_module(twisted);
            let text = print_ainfty(&m);
            assert_eq!(parse_document(&text).unwrap(), Document::AInfty(m));
        }
        let text = print_ainfty(&solid_torus_module(true));
        assert!(text.contains("action n [r2] -> t q\n"));
        assert!(text.contains("action p [] -> 1 q\n"));
    }

    #[test]
    fn curve_and_seifert() {
        let c = parse_curve("# fig 3\nlll\n\nlLm @z\n").unwrap();
        assert_eq!(print_curve(&c), "lll\nm @z\n");
        let s = parse_seifert("base=disk; cones=1/2,-1/2").unwrap();
        assert_eq!(s.cones, [Ratio::new(1, 2), Ratio::new(-1, 2)]);
        assert_eq!(parse_seifert(&s.to_string()).unwrap(), s);
        assert_eq!(parse_seifert("base=mobius; cones=").unwrap().cones, []);
        assert_eq!(detect_kind("base=mobius"), Kind::Seifert);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_typed("gen x i0\narrow x r12 y\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 13));
        let e = parse_typed("gen x i2\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 7));
        let e = parse_curve("llx\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 3));
        let e = parse_seifert("base=disk; cones=1/2,1/0").unwrap_err();
        assert_eq!((e.line, e.col), (1, 22));
        let e = parse_ainfty("gen p i0\naction p [r9] -> 1 p\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 11));
        let e = parse_curve("lM\nmL\n").unwrap();
        assert_eq!(e.len(), 2);
        assert!(parse_curve("l @z\nm @z\n").is_err());
        assert!(parse_curve("lL\n").is_err());
    }
}
