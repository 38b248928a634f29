//! GAP/QPA export: the trivial extension of an incidence algebra of a
//! bounded poset as a bound quiver algebra.
//!
//! The presentation: take the Hasse quiver, adjoin one arrow `w` from the
//! top element back to the bottom, and impose three families of relations —
//! differences of parallel Hasse paths, the "full cycle" relations (any
//! arrow composed with the cycle through `w` at a vertex vanishes), and the
//! incomparability relations (going `a -> top -> w -> bottom -> b` vanishes
//! whenever `a` and `b` are incomparable). The emitted script also carries
//! a routine that walks the syzygy orbit of every simple module, so the
//! verdicts of `trivext resolve` can be cross-checked inside QPA.

use std::fmt::Write as _;

use trivext_core::poset::Poset;

#[derive(Debug, thiserror::Error)]
pub enum QpaError {
    #[error("poset is not bounded with distinct top and bottom: {0}")]
    Unbounded(String),
    #[error("export supports at most {1} elements, got {0}")]
    TooLarge(usize, usize),
}

const MAX_EXPORT_SIZE: usize = 20;

struct Hasse<'a> {
    p: &'a Poset,
    /// upper covers of each element, ascending
    up: Vec<Vec<usize>>,
    /// arrow label of each cover pair, in `covers()` order
    label_of: std::collections::HashMap<(usize, usize), String>,
    bottom: usize,
    top: usize,
}

impl<'a> Hasse<'a> {
    fn build(p: &'a Poset) -> Result<Hasse<'a>, QpaError> {
        let n = p.size();
        let mut up = vec![Vec::new(); n];
        let mut down_count = vec![0usize; n];
        let mut label_of = std::collections::HashMap::new();
        for (i, &(a, b)) in p.covers().iter().enumerate() {
            up[a].push(b);
            down_count[b] += 1;
            label_of.insert((a, b), format!("a{}", i + 1));
        }
        for u in &mut up {
            u.sort_unstable();
        }
        let minimals: Vec<usize> = (0..n).filter(|&v| down_count[v] == 0).collect();
        let maximals: Vec<usize> = (0..n).filter(|&v| up[v].is_empty()).collect();
        match (minimals.as_slice(), maximals.as_slice()) {
            ([b], [t]) if b != t => Ok(Hasse {
                p,
                up,
                label_of,
                bottom: *b,
                top: *t,
            }),
            _ => Err(QpaError::Unbounded(format!(
                "{} minimal and {} maximal elements",
                minimals.len(),
                maximals.len()
            ))),
        }
    }

    /// One fixed chain from `x` up to `y` (x < y), as arrow labels.
    fn chain(&self, x: usize, y: usize) -> Vec<String> {
        let mut cur = x;
        let mut out = Vec::new();
        while cur != y {
            let next = *self.up[cur]
                .iter()
                .find(|&&c| self.p.leq(c, y))
                .expect("x < y so some upper cover stays below y");
            out.push(self.label_of[&(cur, next)].clone());
            cur = next;
        }
        out
    }

    /// Every maximal chain from `x` to `y`, each as arrow labels.
    fn all_chains(&self, x: usize, y: usize) -> Vec<Vec<String>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.chains_rec(x, y, &mut stack, &mut out);
        out
    }

    fn chains_rec(
        &self,
        cur: usize,
        y: usize,
        stack: &mut Vec<String>,
        out: &mut Vec<Vec<String>>,
    ) {
        if cur == y {
            out.push(stack.clone());
            return;
        }
        for &c in &self.up[cur] {
            if self.p.leq(c, y) {
                stack.push(self.label_of[&(cur, c)].clone());
                self.chains_rec(c, y, stack, out);
                stack.pop();
            }
        }
    }

    /// The unique nontrivial cycle at `l`: up to the top, through `w`, and
    /// back up from the bottom.
    fn cycle(&self, l: usize) -> Vec<String> {
        let mut out = Vec::new();
        if l != self.top {
            out.extend(self.chain(l, self.top));
        }
        out.push("w".into());
        if l != self.bottom {
            out.extend(self.chain(self.bottom, l));
        }
        out
    }
}

fn product(labels: &[String]) -> String {
    labels
        .iter()
        .map(|l| format!("kQ.{l}"))
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Emits a complete GAP script presenting T(k[P]) in QPA.
pub fn export_qpa(p: &Poset) -> Result<String, QpaError> {
    if p.size() > MAX_EXPORT_SIZE {
        return Err(QpaError::TooLarge(p.size(), MAX_EXPORT_SIZE));
    }
    let h = Hasse::build(p)?;
    let n = p.size();

    let mut s = String::new();
    let _ = writeln!(s, "# Trivial extension of the incidence algebra of {}", p.name());
    let _ = writeln!(s, "# ({} elements); generated by trivext export-qpa.", n);
    let _ = writeln!(s, "#");
    let _ = writeln!(s, "# Vertex dictionary:");
    for v in 0..n {
        let _ = writeln!(s, "#   v{} = {}", v + 1, p.element_name(v));
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "LoadPackage( \"qpa\" );;");
    let _ = writeln!(s);

    // quiver: Hasse arrows in covers() order, then w
    let mut arrow_triples: Vec<String> = p
        .covers()
        .iter()
        .map(|&(a, b)| format!("[ {}, {}, \"{}\" ]", a + 1, b + 1, h.label_of[&(a, b)]))
        .collect();
    arrow_triples.push(format!("[ {}, {}, \"w\" ]", h.top + 1, h.bottom + 1));
    let _ = writeln!(s, "quiver := Quiver( {}, [", n);
    let _ = writeln!(s, "    {}", arrow_triples.join(",\n    "));
    let _ = writeln!(s, "] );;");
    let _ = writeln!(s, "kQ := PathAlgebra( Rationals, quiver );;");
    let _ = writeln!(s);

    let mut rels: Vec<String> = Vec::new();
    // parallel-path differences: all maximal chains of every interval agree
    for x in 0..n {
        for y in 0..n {
            if x != y && p.leq(x, y) {
                let chains = h.all_chains(x, y);
                for other in chains.iter().skip(1) {
                    rels.push(format!("{} - {}", product(&chains[0]), product(other)));
                }
            }
        }
    }
    // cycle relations: any arrow against the full cycle at its endpoint
    let mut arrows: Vec<(usize, usize, String)> = p
        .covers()
        .iter()
        .map(|&(a, b)| (a, b, h.label_of[&(a, b)].clone()))
        .collect();
    arrows.push((h.top, h.bottom, "w".into()));
    for (src, tgt, label) in &arrows {
        let mut after = vec![label.clone()];
        after.extend(h.cycle(*tgt));
        rels.push(product(&after));
        let mut before = h.cycle(*src);
        before.push(label.clone());
        rels.push(product(&before));
    }
    // incomparability relations: a -> top -> w -> bottom -> b dies
    for a in 0..n {
        for b in 0..n {
            if a != b && !p.leq(a, b) && !p.leq(b, a) {
                let mut path = h.chain(a, h.top);
                path.push("w".into());
                path.extend(h.chain(h.bottom, b));
                rels.push(product(&path));
            }
        }
    }

    let _ = writeln!(s, "rels := [");
    let _ = writeln!(s, "    {}", rels.join(",\n    "));
    let _ = writeln!(s, "];;");
    let _ = writeln!(s, "A := kQ / Ideal( kQ, rels );;");
    let _ = writeln!(s);
    let _ = writeln!(
        s,
        r#"CheckSimplePeriodicity := function( algebra, bound )
    local simples, s, m, n, periods, hit;
    periods := [];
    for s in SimpleModules( algebra ) do
        m := s;
        hit := fail;
        for n in [ 1 .. bound ] do
            m := NthSyzygy( m, 1 );
            if Dimension( m ) = 0 then
                break;
            fi;
            if DimensionVector( m ) = DimensionVector( s ) and IsomorphicModules( m, s ) then
                hit := n;
                break;
            fi;
        od;
        Add( periods, hit );
    od;
    return periods;
end;;"#
    );
    let _ = writeln!(s);
    let _ = writeln!(s, "periods := CheckSimplePeriodicity( A, 60 );;");
    let _ = writeln!(s, "Print( \"simple syzygy periods: \", periods, \"\\n\" );;");
    Ok(s)
}

/// Grammar-level GAP smoke check: string literals terminate, brackets
/// balance, `do`/`od`, `if`/`fi` and `function`/`end` pair up, and the
/// script's last statement is terminated. Running GAP is out of scope.
pub fn lint_gap(script: &str) -> Result<(), String> {
    // strip strings and comments first
    let mut stripped = String::new();
    let mut chars = script.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '"' => {
                let mut closed = false;
                for c2 in chars.by_ref() {
                    if c2 == '"' {
                        closed = true;
                        break;
                    }
                    if c2 == '\n' {
                        return Err("newline inside string literal".into());
                    }
                }
                if !closed {
                    return Err("unterminated string literal".into());
                }
                stripped.push_str("\"\"");
            }
            '#' => {
                for c2 in chars.by_ref() {
                    if c2 == '\n' {
                        stripped.push('\n');
                        break;
                    }
                }
            }
            _ => stripped.push(c),
        }
    }

    let mut stack = Vec::new();
    for (i, c) in stripped.char_indices() {
        match c {
            '(' | '[' | '{' => stack.push((c, i)),
            ')' | ']' | '}' => {
                let want = match c {
                    ')' => '(',
                    ']' => '[',
                    _ => '{',
                };
                match stack.pop() {
                    Some((open, _)) if open == want => {}
                    _ => return Err(format!("unbalanced {c:?} at byte {i}")),
                }
            }
            _ => {}
        }
    }
    if let Some((open, i)) = stack.pop() {
        return Err(format!("unclosed {open:?} at byte {i}"));
    }

    let words: Vec<&str> = stripped
        .split(|c: char| !c.is_ascii_alphanumeric() && c != '_')
        .filter(|w| !w.is_empty())
        .collect();
    for (opener, closer) in [("do", "od"), ("if", "fi"), ("function", "end")] {
        let opens = words.iter().filter(|&&w| w == opener).count();
        let closes = words.iter().filter(|&&w| w == closer).count();
        if opens != closes {
            return Err(format!("{opens} {opener:?} vs {closes} {closer:?}"));
        }
    }

    let tail = stripped.trim_end();
    if !tail.ends_with(';') {
        return Err("script does not end with a terminated statement".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain_export() {
        let p = Poset::named_chain(2);
        let script = export_qpa(&p).unwrap();
        assert!(script.contains("Quiver( 2,"));
        assert!(script.contains("[ 1, 2, \"a1\" ]"));
        assert!(script.contains("[ 2, 1, \"w\" ]"));
        // the four cycle relations of the 2-cycle with zero composites
        assert!(script.contains("kQ.a1 * kQ.w * kQ.a1"));
        assert!(script.contains("kQ.w * kQ.a1 * kQ.w"));
        lint_gap(&script).unwrap();
    }

    #[test]
    fn boolean_square_export() {
        let p = Poset::named_boolean(2);
        let script = export_qpa(&p).unwrap();
        // 4 Hasse arrows plus w
        assert_eq!(script.matches(", \"a").count(), 4);
        assert!(script.contains(", \"w\" ]"));
        // the two maximal chains of the square agree
        assert!(script.contains("kQ.a1 * kQ.a3 - kQ.a2 * kQ.a4"));
        // both incomparability relations for the two middle atoms:
        // 1 -> top -> w -> bottom -> 2 and the reverse
        assert!(script.contains("kQ.a3 * kQ.w * kQ.a2"));
        assert!(script.contains("kQ.a4 * kQ.w * kQ.a1"));
        lint_gap(&script).unwrap();
    }

    #[test]
    fn unbounded_posets_are_rejected() {
        let anti = Poset::named_antichain(2);
        assert!(matches!(export_qpa(&anti), Err(QpaError::Unbounded(_))));
        let single = Poset::named_chain(1);
        assert!(matches!(export_qpa(&single), Err(QpaError::Unbounded(_))));
    }

    #[test]
    fn linter_catches_breakage() {
        assert!(lint_gap("f := function( x ) return x; end;").is_ok());
        assert!(lint_gap("a := [ 1, 2 );").is_err());
        assert!(lint_gap("s := \"oops;").is_err());
        assert!(lint_gap("for i in [1..3] do Print(i); od").is_err());
        assert!(lint_gap("if x then y(); fi; fi;").is_err());
    }
}
