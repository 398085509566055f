//! Text rendering of tower pairs.

use serde::Serialize;
use sturmian_core::towers::RokhlinTower;
use sturmian_core::word::Word;

#[derive(Serialize)]
pub struct LevelView {
    pub m: i64,
    pub start: String,
    pub end: String,
    pub letter: Option<String>,
}

#[derive(Serialize)]
pub struct TowerView {
    pub name: String,
    pub height: usize,
    /// Levels from the top down.
    pub levels: Vec<LevelView>,
}

impl TowerView {
    /// `code` is the tower code, read from the top down.
    pub fn new(name: String, tower: &RokhlinTower, code: Option<Word>) -> Self {
        let levels = (tower.lo()..tower.hi())
            .rev()
            .enumerate()
            .map(|(i, m)| {
                let arc = tower.level(m);
                LevelView {
                    m,
                    start: arc.start.to_string(),
                    end: arc.end.to_string(),
                    letter: code.as_ref().map(|c| c[i].to_string()),
                }
            })
            .collect();
        TowerView {
            name,
            height: tower.height(),
            levels,
        }
    }

    fn lines(&self) -> Vec<String> {
        self.levels
            .iter()
            .map(|l| {
                let mut s = format!("{:>3}  [{}, {})", l.m, l.start, l.end);
                if let Some(letter) = &l.letter {
                    s.push_str("  ");
                    s.push_str(letter);
                }
                s
            })
            .collect()
    }
}

/// A box per tower, side by side and aligned at the bottom, each level
/// annotated with its index, its endpoints and, if known, its code letter.
pub fn render_towers_ascii(k: usize, left: &TowerView, right: &TowerView) -> String {
    let boxed = |t: &TowerView| -> Vec<String> {
        let lines = t.lines();
        let width = lines
            .iter()
            .map(|l| l.chars().count())
            .chain([t.name.chars().count()])
            .max()
            .unwrap_or(0);
        let rule = format!("+{}+", "-".repeat(width + 2));
        let mut out = vec![format!(" {:<w$}  ", t.name, w = width), rule.clone()];
        for (i, l) in lines.iter().enumerate() {
            if i > 0 {
                out.push(format!("|{}|", " ".repeat(width + 2)));
            }
            out.push(format!("| {:<w$} |", l, w = width));
        }
        out.push(rule);
        out
    };
    let (a, b) = (boxed(left), boxed(right));
    let rows = a.len().max(b.len());
    let pad = |v: &Vec<String>| -> Vec<String> {
        let w = v.iter().map(|s| s.chars().count()).max().unwrap_or(0);
        let mut out = vec![" ".repeat(w); rows - v.len()];
        out.extend(v.iter().map(|s| format!("{:<w$}", s, w = w)));
        out
    };
    let (a, b) = (pad(&a), pad(&b));
    let mut text = format!("k = {k}\n");
    for (x, y) in a.iter().zip(&b) {
        text.push_str(format!("{x}    {y}").trim_end());
        text.push('\n');
    }
    text
}
