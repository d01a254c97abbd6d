//! Line-oriented text formats for structures and maps.
//!
//! A structure file is a sequence of directives, one per line, with `#`
//! starting a comment:
//!
//! ```text
//! kind unary        # sgpd | unary | category | ordered-category | biordered-category
//! size 2
//! label 1 g         # optional display names
//! mul 0 1 1         # defined products only
//! plus 1 0
//! star 1 0
//! ```
//!
//! Category kinds use `object i`, `dom i j`, `ran i j` and `mul` for
//! composition; `dom`/`ran` may be omitted for objects. Ordered categories
//! add `leq i j`, biordered ones `leq_l i j` and `leq_r i j`. Orders are
//! closed reflexively and nothing else.
//!
//! A map file names its two ends and gives every image:
//!
//! ```text
//! src a.txt         # relative to the map file
//! dst b.txt
//! send 0 1
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::PathBuf;

use esnkit_core::{BiorderedCategory, FiniteCategory, OrderRel, PartialTable, UnaryStructure};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}{msg}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
pub struct ParseError {
    pub line: Option<usize>,
    pub msg: String,
}

fn at(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line: Some(line),
        msg: msg.into(),
    }
}

fn whole(msg: impl Into<String>) -> ParseError {
    ParseError {
        line: None,
        msg: msg.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FileKind {
    Sgpd,
    Unary,
    Category,
    OrderedCategory,
    BiorderedCategory,
}

impl FileKind {
    pub const ALL: [FileKind; 5] = [
        FileKind::Sgpd,
        FileKind::Unary,
        FileKind::Category,
        FileKind::OrderedCategory,
        FileKind::BiorderedCategory,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FileKind::Sgpd => "sgpd",
            FileKind::Unary => "unary",
            FileKind::Category => "category",
            FileKind::OrderedCategory => "ordered-category",
            FileKind::BiorderedCategory => "biordered-category",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    fn allows(self, directive: &str) -> bool {
        let category = matches!(
            self,
            FileKind::Category | FileKind::OrderedCategory | FileKind::BiorderedCategory
        );
        match directive {
            "label" | "mul" => true,
            "plus" | "star" => self == FileKind::Unary,
            "object" | "dom" | "ran" => category,
            "leq" => self == FileKind::OrderedCategory,
            "leq_l" | "leq_r" => self == FileKind::BiorderedCategory,
            _ => false,
        }
    }
}

/// The parsed content of a structure file.
#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Sgpd(PartialTable),
    Unary(UnaryStructure),
    Category(FiniteCategory),
    Ordered(FiniteCategory, OrderRel),
    Biordered(BiorderedCategory),
}

impl Body {
    pub fn kind(&self) -> FileKind {
        match self {
            Body::Sgpd(_) => FileKind::Sgpd,
            Body::Unary(_) => FileKind::Unary,
            Body::Category(_) => FileKind::Category,
            Body::Ordered(..) => FileKind::OrderedCategory,
            Body::Biordered(_) => FileKind::BiorderedCategory,
        }
    }

    pub fn size(&self) -> usize {
        self.table().size()
    }

    /// The multiplication or composition table.
    pub fn table(&self) -> &PartialTable {
        match self {
            Body::Sgpd(t) => t,
            Body::Unary(s) => s.base(),
            Body::Category(c) | Body::Ordered(c, _) => c.comp_table(),
            Body::Biordered(b) => b.cat().comp_table(),
        }
    }

    pub fn category(&self) -> Option<&FiniteCategory> {
        match self {
            Body::Category(c) | Body::Ordered(c, _) => Some(c),
            Body::Biordered(b) => Some(b.cat()),
            _ => None,
        }
    }

    /// The biordered view: a single order is used on both sides.
    pub fn biordered(&self) -> Option<BiorderedCategory> {
        match self {
            Body::Ordered(c, o) => Some(BiorderedCategory::single(c.clone(), o.clone()).expect("sizes checked")),
            Body::Biordered(b) => Some(b.clone()),
            _ => None,
        }
    }
}

/// A structure together with the optional display names of its elements.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureFile {
    pub labels: BTreeMap<usize, String>,
    pub body: Body,
}

impl StructureFile {
    pub fn new(body: Body) -> Self {
        Self {
            labels: BTreeMap::new(),
            body,
        }
    }

    /// Takes the labels attached to `s`'s table, if any.
    pub fn from_unary(s: UnaryStructure) -> Self {
        let labels = labels_of(s.base());
        Self {
            labels,
            body: Body::Unary(s),
        }
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Self {
        self.labels = labels;
        self
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.get(&i).cloned().unwrap_or_else(|| i.to_string())
    }

    pub fn has_labels(&self) -> bool {
        !self.labels.is_empty()
    }
}

fn labels_of(t: &PartialTable) -> BTreeMap<usize, String> {
    match t.labels() {
        Some(l) => l
            .iter()
            .enumerate()
            .filter(|(i, name)| **name != i.to_string())
            .map(|(i, name)| (i, name.clone()))
            .collect(),
        None => BTreeMap::new(),
    }
}

struct Line<'a> {
    no: usize,
    directive: &'a str,
    args: Vec<&'a str>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = content.split_whitespace();
            let directive = tokens.next()?;
            Some(Line {
                no: i + 1,
                directive,
                args: tokens.collect(),
            })
        })
        .collect()
}

fn arity(l: &Line<'_>, n: usize) -> Result<(), ParseError> {
    if l.args.len() == n {
        Ok(())
    } else {
        Err(at(
            l.no,
            format!("`{}` takes {n} argument(s), found {}", l.directive, l.args.len()),
        ))
    }
}

fn number(l: &Line<'_>, k: usize) -> Result<usize, ParseError> {
    l.args[k]
        .parse()
        .map_err(|_| at(l.no, format!("`{}` is not a non-negative integer", l.args[k])))
}

fn id(l: &Line<'_>, k: usize, size: usize) -> Result<usize, ParseError> {
    let v = number(l, k)?;
    if v >= size {
        return Err(at(l.no, format!("id {v} out of range for size {size}")));
    }
    Ok(v)
}

/// A directive that may appear more than once only with the same value.
fn single<'a>(all: &[Line<'a>], name: &str) -> Result<(usize, &'a str), ParseError> {
    let mut found: Option<(usize, &'a str)> = None;
    for l in all.iter().filter(|l| l.directive == name) {
        arity(l, 1)?;
        match found {
            Some((_, v)) if v != l.args[0] => {
                return Err(at(l.no, format!("contradictory `{name}`: {v} and {}", l.args[0])));
            }
            Some(_) => {}
            None => found = Some((l.no, l.args[0])),
        }
    }
    found.ok_or_else(|| whole(format!("missing `{name}` directive")))
}

/// Sets `slot` to `value` unless it already holds a different one.
fn assign<T: PartialEq + std::fmt::Debug>(
    slot: &mut Option<T>,
    value: T,
    l: &Line<'_>,
    what: &str,
) -> Result<(), ParseError> {
    match slot {
        Some(old) if *old != value => Err(at(
            l.no,
            format!("contradictory `{}` for {what}: {old:?} and {value:?}", l.directive),
        )),
        _ => {
            *slot = Some(value);
            Ok(())
        }
    }
}

type Slots = Vec<Option<usize>>;

pub fn parse_structure(text: &str) -> Result<StructureFile, ParseError> {
    let all = lines(text);
    for l in &all {
        if !matches!(
            l.directive,
            "kind" | "size" | "label" | "mul" | "plus" | "star" | "object" | "dom" | "ran" | "leq" | "leq_l" | "leq_r"
        ) {
            return Err(at(l.no, format!("unknown directive `{}`", l.directive)));
        }
    }
    let (kline, kname) = single(&all, "kind")?;
    let kind = FileKind::from_name(kname).ok_or_else(|| at(kline, format!("unknown kind `{kname}`")))?;
    let (sline, sraw) = single(&all, "size")?;
    let n: usize = sraw
        .parse()
        .map_err(|_| at(sline, format!("`{sraw}` is not a non-negative integer")))?;

    let mut labels = BTreeMap::new();
    let mut mul: Slots = vec![None; n * n];
    let mut plus: Slots = vec![None; n];
    let mut star: Slots = vec![None; n];
    let mut dom: Slots = vec![None; n];
    let mut ran: Slots = vec![None; n];
    let mut objects = BTreeSet::new();
    let (mut leq, mut leq_l, mut leq_r) = (Vec::new(), Vec::new(), Vec::new());
    let mut end_lines: Vec<(usize, usize)> = Vec::new();

    for l in all.iter().filter(|l| !matches!(l.directive, "kind" | "size")) {
        if !kind.allows(l.directive) {
            return Err(at(
                l.no,
                format!("`{}` is not allowed in a `{}` file", l.directive, kind.name()),
            ));
        }
        match l.directive {
            "label" => {
                arity(l, 2)?;
                let i = id(l, 0, n)?;
                let mut slot = labels.remove(&i);
                assign(&mut slot, l.args[1].to_string(), l, &format!("element {i}"))?;
                labels.insert(i, slot.expect("just assigned"));
            }
            "mul" => {
                arity(l, 3)?;
                let (i, j, k) = (id(l, 0, n)?, id(l, 1, n)?, id(l, 2, n)?);
                assign(&mut mul[i * n + j], k, l, &format!("({i}, {j})"))?;
            }
            "plus" | "star" | "dom" | "ran" => {
                arity(l, 2)?;
                let (i, j) = (id(l, 0, n)?, id(l, 1, n)?);
                let map = match l.directive {
                    "plus" => &mut plus,
                    "star" => &mut star,
                    "dom" => {
                        end_lines.push((l.no, j));
                        &mut dom
                    }
                    _ => {
                        end_lines.push((l.no, j));
                        &mut ran
                    }
                };
                assign(&mut map[i], j, l, &format!("element {i}"))?;
            }
            "object" => {
                arity(l, 1)?;
                objects.insert(id(l, 0, n)?);
            }
            _ => {
                arity(l, 2)?;
                let pair = (id(l, 0, n)?, id(l, 1, n)?);
                match l.directive {
                    "leq" => leq.push(pair),
                    "leq_l" => leq_l.push(pair),
                    _ => leq_r.push(pair),
                }
            }
        }
    }

    let table = PartialTable::from_entries(n, mul).map_err(|e| whole(e.to_string()))?;
    let core = |e: esnkit_core::Error| whole(e.to_string());
    let body = match kind {
        FileKind::Sgpd => Body::Sgpd(table),
        FileKind::Unary => {
            let plus = total(plus, "plus")?;
            let star = if star.iter().all(Option::is_none) && n > 0 {
                None
            } else {
                Some(total(star, "star")?)
            };
            Body::Unary(UnaryStructure::new(table, plus, star).map_err(core)?)
        }
        _ => {
            for &(no, v) in &end_lines {
                if !objects.contains(&v) {
                    return Err(at(no, format!("{v} is not an object")));
                }
            }
            let ends = |map: Slots, what: &str| -> Result<Vec<usize>, ParseError> {
                (0..n)
                    .map(|i| match map[i] {
                        Some(v) => Ok(v),
                        None if objects.contains(&i) => Ok(i),
                        None => Err(whole(format!("arrow {i} has no `{what}`"))),
                    })
                    .collect()
            };
            let (dom, ran) = (ends(dom, "dom")?, ends(ran, "ran")?);
            let cat = FiniteCategory::new(objects.iter().copied().collect(), dom, ran, table).map_err(core)?;
            let order = |pairs: &[(usize, usize)]| OrderRel::from_pairs_reflexive(n, pairs).map_err(core);
            match kind {
                FileKind::Category => Body::Category(cat),
                FileKind::OrderedCategory => Body::Ordered(cat, order(&leq)?),
                _ => Body::Biordered(BiorderedCategory::new(cat, order(&leq_l)?, order(&leq_r)?).map_err(core)?),
            }
        }
    };
    Ok(StructureFile { labels, body })
}

fn total(map: Slots, what: &str) -> Result<Vec<usize>, ParseError> {
    map.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| whole(format!("element {i} has no `{what}`"))))
        .collect()
}

/// Canonical text: directives grouped in a fixed order, each group sorted
/// by its numeric arguments. Orders are written without their diagonal.
pub fn serialize_structure(f: &StructureFile) -> String {
    let mut out = String::new();
    let b = &f.body;
    let n = b.size();
    writeln!(out, "kind {}", b.kind().name()).unwrap();
    writeln!(out, "size {n}").unwrap();
    for (i, name) in &f.labels {
        writeln!(out, "label {i} {name}").unwrap();
    }
    for (i, j, k) in b.table().products() {
        writeln!(out, "mul {i} {j} {k}").unwrap();
    }
    if let Body::Unary(s) = b {
        for i in 0..n {
            writeln!(out, "plus {i} {}", s.plus(i)).unwrap();
        }
        if let Some(star) = s.star_map() {
            for (i, v) in star.iter().enumerate() {
                writeln!(out, "star {i} {v}").unwrap();
            }
        }
    }
    if let Some(c) = b.category() {
        for e in c.objects() {
            writeln!(out, "object {e}").unwrap();
        }
        for i in 0..n {
            writeln!(out, "dom {i} {}", c.dom(i)).unwrap();
        }
        for i in 0..n {
            writeln!(out, "ran {i} {}", c.ran(i)).unwrap();
        }
    }
    let mut order = |name: &str, o: &OrderRel| {
        for (i, j) in o.strict_pairs() {
            writeln!(out, "{name} {i} {j}").unwrap();
        }
    };
    match b {
        Body::Ordered(_, o) => order("leq", o),
        Body::Biordered(c) => {
            order("leq_l", c.leq_l());
            order("leq_r", c.leq_r());
        }
        _ => {}
    }
    out
}

/// A parsed map file; images are checked against the ends once they are
/// loaded, see [`MapFile::resolve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapFile {
    pub src: PathBuf,
    pub dst: PathBuf,
    /// Element to (image, line).
    pub send: BTreeMap<usize, (usize, usize)>,
}

pub fn parse_map(text: &str) -> Result<MapFile, ParseError> {
    let all = lines(text);
    let mut send = BTreeMap::new();
    for l in &all {
        match l.directive {
            "src" | "dst" => {}
            "send" => {
                arity(l, 2)?;
                let (i, j) = (number(l, 0)?, number(l, 1)?);
                if let Some(&(old, _)) = send.get(&i) {
                    if old != j {
                        return Err(at(l.no, format!("contradictory `send` for element {i}: {old} and {j}")));
                    }
                } else {
                    send.insert(i, (j, l.no));
                }
            }
            other => return Err(at(l.no, format!("unknown directive `{other}`"))),
        }
    }
    let (_, src) = single(&all, "src")?;
    let (_, dst) = single(&all, "dst")?;
    Ok(MapFile {
        src: src.into(),
        dst: dst.into(),
        send,
    })
}

impl MapFile {
    /// The images as a vector, checking totality on `0..src_size` and the
    /// range `0..dst_size`.
    pub fn resolve(&self, src_size: usize, dst_size: usize) -> Result<Vec<usize>, ParseError> {
        if let Some((&i, &(_, no))) = self.send.range(src_size..).next() {
            return Err(at(no, format!("element {i} out of range for source size {src_size}")));
        }
        (0..src_size)
            .map(|i| match self.send.get(&i) {
                Some(&(j, no)) if j >= dst_size => {
                    Err(at(no, format!("image {j} out of range for target size {dst_size}")))
                }
                Some(&(j, _)) => Ok(j),
                None => Err(whole(format!("map is not total: no `send` for element {i}"))),
            })
            .collect()
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("src {}\ndst {}\n", self.src.display(), self.dst.display());
        for (i, (j, _)) in &self.send {
            writeln!(out, "send {i} {j}").unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_semilattice() {
        let f = parse_structure("kind sgpd\nsize 1\nmul 0 0 0\n").unwrap();
        match &f.body {
            Body::Sgpd(t) => assert_eq!(t.get(0, 0), Some(0)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn orders_are_closed_reflexively_only() {
        let text = "kind ordered-category\nsize 3\nobject 0\nobject 1\nobject 2\nleq 0 1\nleq 1 2\n";
        let f = parse_structure(text).unwrap();
        let Body::Ordered(_, o) = &f.body else { panic!() };
        assert!((0..3).all(|i| o.leq(i, i)));
        assert!(o.leq(0, 1) && o.leq(1, 2) && !o.leq(0, 2));
    }

    #[test]
    fn range_error_names_the_line() {
        let e = parse_structure("kind sgpd\nsize 3\n\nmul 0 0 5\n").unwrap_err();
        assert_eq!(e.line, Some(4));
    }

    #[test]
    fn contradictory_products() {
        let e = parse_structure("kind sgpd\nsize 2\nmul 0 0 0\nmul 0 0 0\nmul 0 0 1\n").unwrap_err();
        assert_eq!(e.line, Some(5));
    }

    #[test]
    fn unknown_and_misplaced_directives() {
        assert_eq!(parse_structure("kind sgpd\nsize 1\nfoo 1\n").unwrap_err().line, Some(3));
        assert_eq!(parse_structure("kind sgpd\nsize 1\nplus 0 0\n").unwrap_err().line, Some(3));
        assert!(parse_structure("size 1\n").is_err());
        assert_eq!(parse_structure("kind monoid\nsize 1\n").unwrap_err().line, Some(1));
    }

    #[test]
    fn comments_and_blank_lines() {
        let f = parse_structure("# a comment\nkind sgpd # trailing\n\n  size 1\n").unwrap();
        assert_eq!(f.body.size(), 1);
    }

    #[test]
    fn category_ends_default_for_objects() {
        let text = "kind category\nsize 3\nobject 0\nobject 1\ndom 2 1\nran 2 0\nmul 0 0 0\nmul 1 1 1\nmul 0 2 2\nmul 2 1 2\n";
        let f = parse_structure(text).unwrap();
        let c = f.body.category().unwrap();
        assert_eq!((c.dom(0), c.ran(1), c.dom(2), c.ran(2)), (0, 1, 1, 0));
        assert_eq!(parse_structure(&serialize_structure(&f)).unwrap(), f);
        let bad = "kind category\nsize 2\nobject 0\ndom 1 1\nran 1 0\n";
        assert_eq!(parse_structure(bad).unwrap_err().line, Some(4));
        let missing = "kind category\nsize 2\nobject 0\nran 1 0\n";
        assert_eq!(parse_structure(missing).unwrap_err().line, None);
    }

    #[test]
    fn partial_plus_is_rejected() {
        assert!(parse_structure("kind unary\nsize 2\nplus 0 0\n").is_err());
        let f = parse_structure("kind unary\nsize 1\nmul 0 0 0\nplus 0 0\n").unwrap();
        let Body::Unary(s) = &f.body else { panic!() };
        assert!(!s.has_star());
    }

    #[test]
    fn maps() {
        let m = parse_map("src a.txt\ndst b.txt\nsend 1 0\nsend 0 0\n").unwrap();
        assert_eq!(m.resolve(2, 1).unwrap(), vec![0, 0]);
        assert_eq!(m.resolve(3, 1).unwrap_err().line, None);
        assert_eq!(m.resolve(1, 1).unwrap_err().line, Some(3));
        assert_eq!(m.resolve(2, 0).unwrap_err().line, Some(4));
        assert_eq!(parse_map(&m.serialize()).unwrap().resolve(2, 1).unwrap(), vec![0, 0]);
        assert!(parse_map("src a\nsend 0 0\n").is_err());
        assert_eq!(parse_map("src a\ndst b\nsend 0 0\nsend 0 1\n").unwrap_err().line, Some(4));
    }
}
