//! ASCII sketches: arc diagrams, path profiles and layered Hasse diagrams.

use fishburn::{DyckPath, Matching, Poset};

/// Columns per position in an arc diagram.
const SPACING: usize = 3;

pub fn matching(m: &Matching) -> String {
    if m.is_empty() {
        return "(empty matching)\n".into();
    }
    let len = 2 * m.size();
    let width = SPACING * (len - 1) + 2;
    let mut arcs = m.arcs();
    arcs.sort_by_key(|a| (std::cmp::Reverse(a.closer - a.opener), a.opener));
    let col = |p: usize| SPACING * (p - 1);
    let mut grid = vec![vec![' '; width]; arcs.len()];
    for (row, a) in arcs.iter().enumerate() {
        for cell in &mut grid[row][col(a.opener)..col(a.closer)] {
            *cell = '-';
        }
        grid[row][col(a.opener)] = '+';
        grid[row][col(a.closer)] = '+';
    }
    for (row, a) in arcs.iter().enumerate() {
        for line in grid.iter_mut().skip(row + 1) {
            line[col(a.opener)] = '|';
            line[col(a.closer)] = '|';
        }
    }
    let mut out: String = grid.iter().map(|r| r.iter().collect::<String>().trim_end().to_string() + "\n").collect();
    let mut labels = String::new();
    for p in 1..=len {
        labels.push_str(&format!("{:<w$}", p, w = SPACING));
    }
    out.push_str(labels.trim_end());
    out.push('\n');
    out
}

pub fn dyck(d: &DyckPath) -> String {
    if d.steps().is_empty() {
        return "(empty path)\n".into();
    }
    let h = d.height();
    let mut grid = vec![vec![' '; d.steps().len()]; h];
    let mut level = 0;
    for (i, &up) in d.steps().iter().enumerate() {
        if up {
            grid[h - 1 - level][i] = '/';
            level += 1;
        } else {
            level -= 1;
            grid[h - 1 - level][i] = '\\';
        }
    }
    grid.iter().map(|r| r.iter().collect::<String>().trim_end().to_string() + "\n").collect()
}

pub fn poset(p: &Poset) -> String {
    let n = p.len();
    if n == 0 {
        return "(empty poset)\n".into();
    }
    // level = size of a longest chain ending at the element
    let mut level = vec![0usize; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| p.down_set(x).count_ones());
    for &x in &order {
        level[x] = 1 + (0..n).filter(|&y| p.less(y, x)).map(|y| level[y]).max().unwrap_or(0);
    }
    let top = *level.iter().max().expect("nonempty");
    let mut out = String::new();
    for l in (1..=top).rev() {
        let elems: Vec<String> = (0..n).filter(|&x| level[x] == l).map(|x| x.to_string()).collect();
        out.push_str(&format!("level {l}: {}\n", elems.join("  ")));
    }
    let covers: Vec<String> = p
        .relations()
        .into_iter()
        .filter(|&(a, b)| !(0..n).any(|z| p.less(a, z) && p.less(z, b)))
        .map(|(a, b)| format!("{a}<{b}"))
        .collect();
    out.push_str(&format!("covers: {}\n", if covers.is_empty() { "none".into() } else { covers.join(", ") }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc() {
        assert_eq!(matching(&"1-2".parse().unwrap()), "+--+\n1  2\n");
    }

    #[test]
    fn crossing_pair() {
        let out = matching(&"1-3,2-4".parse().unwrap());
        assert_eq!(out, "+-----+\n|  +--|--+\n1  2  3  4\n");
    }

    #[test]
    fn path_profile() {
        assert_eq!(dyck(&"UUDD".parse().unwrap()), " /\\\n/  \\\n");
    }

    #[test]
    fn chain_levels() {
        let out = poset(&Poset::chain(3));
        assert_eq!(out, "level 3: 2\nlevel 2: 1\nlevel 1: 0\ncovers: 0<1, 1<2\n");
    }
}
