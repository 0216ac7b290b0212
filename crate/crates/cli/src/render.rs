//! Plain-text and SVG diagram dumps: the lattice path and the arc diagram
//! of a permutation. Display only.

use dperm_core::paths::{Path, Step};
use dperm_core::perm::Permutation;

/// ASCII rendering of a path: one row per height, `/`, `\` and `_`.
pub fn path_text(path: &Path) -> String {
    let hs = path.heights();
    let max = *hs.iter().max().unwrap_or(&0);
    let min = *hs.iter().min().unwrap_or(&0);
    let mut rows =
        vec![vec![b' '; path.length()]; (max - min) as usize + 1];
    let mut x = 0usize;
    let mut h = 0i64;
    for s in &path.steps {
        match s {
            Step::Rise => {
                rows[(max - h - 1) as usize][x] = b'/';
                h += 1;
                x += 1;
            }
            Step::Fall => {
                rows[(max - h) as usize][x] = b'\\';
                h -= 1;
                x += 1;
            }
            Step::LongLevel => {
                rows[(max - h) as usize][x] = b'_';
                rows[(max - h) as usize][x + 1] = b'_';
                x += 2;
            }
        }
    }
    rows.into_iter()
        .map(|r| String::from_utf8(r).unwrap().trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

/// SVG with the arc diagram of the permutation above the lattice path.
pub fn diagram_svg(p: &Permutation, path: &Path) -> String {
    let n = p.len();
    let unit = 28.0;
    let arc_h = 90.0;
    let hs = path.heights();
    let max_h = *hs.iter().max().unwrap_or(&0) as f64;
    let path_top = arc_h + 2.0 * unit;
    let base = path_top + max_h * unit / 2.0;
    let width = (n as f64 + 1.0) * unit;
    let height = base + 2.0 * unit;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    ));
    // arc diagram: vertices on a horizontal axis, arcs above for
    // excedances, below for anti-excedances
    let cx = |i: usize| i as f64 * unit;
    out.push_str(&format!(
        "<line x1=\"{:.1}\" y1=\"{arc_h:.1}\" x2=\"{:.1}\" y2=\"{arc_h:.1}\" stroke=\"black\"/>\n",
        cx(1) - 8.0,
        cx(n) + 8.0
    ));
    for i in 1..=n {
        out.push_str(&format!(
            "<circle cx=\"{:.1}\" cy=\"{arc_h:.1}\" r=\"2.5\" fill=\"black\"/>\n",
            cx(i)
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"9\" text-anchor=\"middle\">{i}</text>\n",
            cx(i),
            arc_h + 14.0
        ));
        let j = p.sigma(i) as usize;
        if j != i {
            let (a, b) = (cx(i), cx(j));
            let sweep = if j > i { 1 } else { 0 };
            let r = (b - a).abs() / 2.0;
            out.push_str(&format!(
                "<path d=\"M {a:.1} {arc_h:.1} A {r:.1} {:.1} 0 0 {sweep} {b:.1} {arc_h:.1}\" \
                 fill=\"none\" stroke=\"{}\"/>\n",
                r.min(40.0),
                if j > i { "crimson" } else { "steelblue" }
            ));
        }
    }
    // lattice path
    let py = |h: i64| base - h as f64 * unit / 2.0;
    let mut d = format!("M {:.1} {:.1}", cx(1) - unit, py(0));
    let mut x = 0usize;
    for s in &path.steps {
        let w = if *s == Step::LongLevel { 2 } else { 1 };
        x += w;
        let h_after = match s {
            Step::Rise => hs[x],
            Step::Fall => hs[x],
            Step::LongLevel => hs[x],
        };
        d.push_str(&format!(" L {:.1} {:.1}", cx(1) - unit + x as f64 * unit, py(h_after)));
    }
    out.push_str(&format!(
        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#bbb\"/>\n",
        cx(1) - unit,
        py(0),
        cx(1) - unit + path.length() as f64 * unit,
        py(0)
    ));
    out.push_str(&format!(
        "<path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
    ));
    out.push_str("</svg>");
    out
}
