//! Specht modules over the integers in the polytabloid basis, reduced into a
//! field on demand.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::field::Field;
use super::linalg::{rank, Mat};
use super::module::MatrixModule;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A filling of a Young diagram, row by row.
pub type Tableau = Vec<Vec<u8>>;

/// Integer matrices, column `j` holding the image of basis vector `j`.
pub type IntMatrix = Vec<Vec<i64>>;

fn column_word(t: &Tableau) -> Vec<u8> {
    let width = t.first().map_or(0, |r| r.len());
    (0..width)
        .flat_map(|c| t.iter().filter(move |r| r.len() > c).map(move |r| r[c]))
        .collect()
}

/// Standard tableaux of `shape`, ordered by column reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let m = shape.size();
    let mut out = Vec::new();
    fill(shape.parts(), &mut vec![Vec::new(); shape.len()], 1, m as u8, &mut out);
    out.sort_by_key(column_word);
    out
}

/// Adds `next..=m` to a partially filled standard tableau.
fn fill(shape: &[usize], cur: &mut Tableau, next: u8, m: u8, out: &mut Vec<Tableau>) {
    if next > m {
        out.push(cur.clone());
        return;
    }
    for r in 0..shape.len() {
        let len = cur[r].len();
        let fits = len < shape[r] && (r == 0 || cur[r - 1].len() > len);
        if fits {
            cur[r].push(next);
            fill(shape, cur, next + 1, m, out);
            cur[r].pop();
        }
    }
}

fn perm_sign(from: &[u8], to: &[u8]) -> i64 {
    // Sign of the permutation sending from[i] to to[i].
    let map: HashMap<u8, u8> = from.iter().copied().zip(to.iter().copied()).collect();
    let mut seen = std::collections::HashSet::new();
    let mut sign = 1;
    for &start in from {
        if seen.contains(&start) {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while seen.insert(x) {
            x = map[&x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Sorts every column ascending; returns the sorted tableau and the sign of
/// the column permutation used.
fn column_sort(t: &Tableau) -> (Tableau, i64) {
    let mut out = t.clone();
    let mut sign = 1;
    let width = t.first().map_or(0, |r| r.len());
    for c in 0..width {
        let rows: Vec<usize> = (0..t.len()).filter(|&r| t[r].len() > c).collect();
        let before: Vec<u8> = rows.iter().map(|&r| t[r][c]).collect();
        let mut after = before.clone();
        after.sort_unstable();
        sign *= perm_sign(&before, &after);
        for (&r, v) in rows.iter().zip(after) {
            out[r][c] = v;
        }
    }
    (out, sign)
}

fn subsets(pool: &[u8], k: usize) -> Vec<Vec<u8>> {
    fn go(pool: &[u8], k: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, k, 0, &mut Vec::new(), &mut out);
    out
}

/// A vector in the standard basis as `(index, coefficient)` pairs.
type Expansion = Vec<(usize, i64)>;

/// The integral Specht module of one shape.
#[derive(Debug)]
pub struct IntegralSpecht {
    shape: Partition,
    tableaux: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    memo: Mutex<HashMap<Tableau, Arc<Expansion>>>,
    /// Matrices of the adjacent transpositions `s_1 .. s_{m-1}`.
    adjacent: Vec<IntMatrix>,
    perms: Mutex<HashMap<Vec<usize>, Arc<IntMatrix>>>,
}

impl IntegralSpecht {
    fn new(shape: &Partition) -> Self {
        let tableaux = standard_tableaux(shape);
        let index = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mut s = IntegralSpecht {
            shape: shape.clone(),
            tableaux,
            index,
            memo: Mutex::new(HashMap::new()),
            adjacent: Vec::new(),
            perms: Mutex::new(HashMap::new()),
        };
        let m = shape.size();
        s.adjacent = (1..m).map(|i| s.matrix_of_values(|v| swap_value(v, i as u8))).collect();
        s
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn adjacent(&self) -> &[IntMatrix] {
        &self.adjacent
    }

    fn matrix_of_values(&self, relabel: impl Fn(u8) -> u8) -> IntMatrix {
        let d = self.dim();
        let mut m = vec![vec![0i64; d]; d];
        for (j, t) in self.tableaux.iter().enumerate() {
            let moved: Tableau = t.iter().map(|r| r.iter().map(|&v| relabel(v)).collect()).collect();
            for (i, c) in self.straighten(&moved).iter() {
                m[*i][j] += c;
            }
        }
        m
    }

    /// Coordinates of the polytabloid `e_t` in the standard basis.
    pub fn straighten(&self, t: &Tableau) -> Vec<(usize, i64)> {
        let (sorted, sign) = column_sort(t);
        if let Some(&i) = self.index.get(&sorted) {
            return vec![(i, sign)];
        }
        if let Some(v) = self.memo.lock().unwrap().get(&sorted).cloned() {
            return v.iter().map(|&(i, c)| (i, c * sign)).collect();
        }
        let (r, c) = (0..sorted.len())
            .flat_map(|r| (0..sorted[r].len().saturating_sub(1)).map(move |c| (r, c)))
            .find(|&(r, c)| sorted[r][c] > sorted[r][c + 1])
            .expect("column-sorted non-standard tableau has a row descent");
        // Garnir relation on column c from row r down and column c+1 up to row r.
        let a_rows: Vec<usize> = (r..sorted.len()).filter(|&i| sorted[i].len() > c).collect();
        let b_rows: Vec<usize> = (0..=r).collect();
        let mut pool: Vec<u8> = a_rows.iter().map(|&i| sorted[i][c]).collect();
        let original_b: Vec<u8> = b_rows.iter().map(|&i| sorted[i][c + 1]).collect();
        pool.extend(&original_b);
        pool.sort_unstable();
        let positions: Vec<(usize, usize)> =
            a_rows.iter().map(|&i| (i, c)).chain(b_rows.iter().map(|&i| (i, c + 1))).collect();
        let before: Vec<u8> = positions.iter().map(|&(i, j)| sorted[i][j]).collect();
        let mut sorted_b = original_b.clone();
        sorted_b.sort_unstable();
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for chosen in subsets(&pool, b_rows.len()) {
            if chosen == sorted_b {
                continue;
            }
            let rest: Vec<u8> = pool.iter().copied().filter(|v| !chosen.contains(v)).collect();
            let mut moved = sorted.clone();
            for (&i, &v) in a_rows.iter().zip(&rest) {
                moved[i][c] = v;
            }
            for (&i, &v) in b_rows.iter().zip(&chosen) {
                moved[i][c + 1] = v;
            }
            let after: Vec<u8> = positions.iter().map(|&(i, j)| moved[i][j]).collect();
            let sgn = perm_sign(&before, &after);
            for (i, x) in self.straighten(&moved) {
                *acc.entry(i).or_insert(0) -= sgn * x;
            }
        }
        let mut result: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, x)| x != 0).collect();
        result.sort_unstable();
        self.memo.lock().unwrap().insert(sorted, Arc::new(result.clone()));
        result.into_iter().map(|(i, x)| (i, x * sign)).collect()
    }

    /// Matrix of the permutation `w` of `{0..m-1}`, acting on entries by
    /// `v -> w[v-1] + 1`.
    pub fn permutation_matrix(&self, w: &[usize]) -> Arc<IntMatrix> {
        if let Some(m) = self.perms.lock().unwrap().get(w) {
            return m.clone();
        }
        let m = Arc::new(self.matrix_of_values(|v| w[v as usize - 1] as u8 + 1));
        self.perms.lock().unwrap().insert(w.to_vec(), m.clone());
        m
    }

    /// Signed tabloid expansion of `e_t`: tabloid (value -> row) to coefficient.
    pub fn tabloid_expansion(t: &Tableau) -> HashMap<Vec<u8>, i64> {
        let m: usize = t.iter().map(|r| r.len()).sum();
        let width = t.first().map_or(0, |r| r.len());
        let columns: Vec<Vec<usize>> =
            (0..width).map(|c| (0..t.len()).filter(|&r| t[r].len() > c).collect()).collect();
        let mut out = HashMap::new();
        let mut perms_per_column: Vec<Vec<(Vec<usize>, i64)>> = Vec::new();
        for col in &columns {
            perms_per_column.push(all_perms(col.len()));
        }
        let mut choice = vec![0usize; width];
        loop {
            let mut rows_of = vec![0u8; m];
            let mut sign = 1;
            for (c, col) in columns.iter().enumerate() {
                let (perm, s) = &perms_per_column[c][choice[c]];
                sign *= s;
                for (k, &r) in col.iter().enumerate() {
                    rows_of[t[r][c] as usize - 1] = col[perm[k]] as u8;
                }
            }
            *out.entry(rows_of).or_insert(0) += sign;
            let mut c = 0;
            loop {
                if c == width {
                    return out;
                }
                choice[c] += 1;
                if choice[c] < perms_per_column[c].len() {
                    break;
                }
                choice[c] = 0;
                c += 1;
            }
        }
    }

    /// Gram matrix of the standard form on the polytabloid basis.
    pub fn gram(&self) -> IntMatrix {
        let expansions: Vec<HashMap<Vec<u8>, i64>> =
            self.tableaux.iter().map(IntegralSpecht::tabloid_expansion).collect();
        let d = self.dim();
        let mut g = vec![vec![0; d]; d];
        for i in 0..d {
            for j in i..d {
                let v: i64 = expansions[i]
                    .iter()
                    .filter_map(|(k, a)| expansions[j].get(k).map(|b| a * b))
                    .sum();
                g[i][j] = v;
                g[j][i] = v;
            }
        }
        g
    }
}

fn swap_value(v: u8, i: u8) -> u8 {
    if v == i {
        i + 1
    } else if v == i + 1 {
        i
    } else {
        v
    }
}

/// All permutations of `0..k` with their signs.
fn all_perms(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if rest.is_empty() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in 0..rest.len() {
            // Taking the i-th remaining element passes over i smaller ones.
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, if i % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..k).collect(), &mut Vec::new(), 1, &mut out);
    out
}

/// Shared integral Specht modules, built once per shape.
pub fn integral_specht(shape: &Partition) -> Arc<IntegralSpecht> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<IntegralSpecht>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(shape) {
        return s.clone();
    }
    let s = Arc::new(IntegralSpecht::new(shape));
    cache.lock().unwrap().entry(shape.clone()).or_insert(s).clone()
}

pub fn reduce_matrix<F: Field>(f: &F, m: &IntMatrix) -> Mat<F::Elem> {
    let cols = m.first().map_or(0, |r| r.len());
    Mat::from_rows(m.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect(), cols)
}

/// `S^shape` as a module for the symmetric group, generated by the adjacent
/// transpositions.
pub fn specht_module<F: Field>(shape: &Partition, f: &F) -> MatrixModule<F> {
    let s = integral_specht(shape);
    let gens = s.adjacent().iter().map(|m| reduce_matrix(f, m)).collect();
    MatrixModule::new(f.clone(), s.dim(), gens).with_label(shape.clone())
}

/// Rank of the Gram matrix of the standard form, which is the dimension of
/// the simple head when the shape is `p`-regular.
pub fn specht_gram_rank<F: Field>(shape: &Partition, f: &F) -> Result<usize> {
    let p = f.characteristic();
    if p > 0 && !shape.is_p_regular(p) {
        return Err(Error::PSingularLabel(shape.to_string()));
    }
    let g = integral_specht(shape).gram();
    Ok(rank(f, &reduce_matrix(f, &g)))
}
