use std::collections::{BTreeMap, HashMap, VecDeque};

use super::{FiniteAbelianGroup, GroupError};

/// A finite group given by a verified Cayley table over indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
    names: Vec<String>,
}

/// The conjugacy class `{t_1 = s, ..., t_k}` of `s` together with representatives `g_i`
/// satisfying `g_i s g_i^{-1} = t_i`, each the least index doing so.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub class: Vec<usize>,
    pub reps: Vec<usize>,
    pub centralizer: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<usize>, names: Vec<String>) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 || table.len() != n * n {
            return Err(GroupError::InvalidTable("table size does not match element count".into()));
        }
        if table.iter().any(|&x| x >= n) {
            return Err(GroupError::InvalidTable("entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] == a && table[a * n + e] == a))
            .ok_or_else(|| GroupError::InvalidTable("no identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]] {
                        return Err(GroupError::InvalidTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a * n + b] == identity)
                .ok_or_else(|| GroupError::InvalidTable(format!("element {a} has no inverse")))?;
        }
        Ok(FiniteGroup { n, table, inverse, identity, names })
    }

    /// Verifies a table that a construction produced; an invalid one is a bug.
    pub(crate) fn from_construction(table: Vec<usize>, names: Vec<String>) -> Self {
        Self::from_table(table, names).expect("construction produced an invalid group table")
    }

    /// `D_8 = <x, y | x^4 = y^2 = 1, yxy = x^{-1}>`, element `x^i y^j` at index `i + 4j`.
    pub fn dihedral8() -> Self {
        let mul = |(i, j): (i64, i64), (k, l): (i64, i64)| {
            let k = if j == 0 { k } else { -k };
            ((i + k).rem_euclid(4), (j + l) % 2)
        };
        let elems: Vec<(i64, i64)> = (0..2).flat_map(|j| (0..4).map(move |i| (i, j))).collect();
        let idx = |e: (i64, i64)| (e.0 + 4 * e.1) as usize;
        let mut table = vec![0; 64];
        for (a, &ea) in elems.iter().enumerate() {
            for (b, &eb) in elems.iter().enumerate() {
                table[a * 8 + b] = idx(mul(ea, eb));
            }
        }
        let names = ["1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::from_construction(table, names)
    }

    /// The quaternion group, used as a non-isomorphic twin of `D_8`.
    pub fn quaternion8() -> Self {
        // Elements ±1, ±i, ±j, ±k; index = 2·unit + sign.
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            // returns (unit, negate) for units 0=1, 1=i, 2=j, 3=k
            match (a, b) {
                (0, u) | (u, 0) => (u, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 1) => (3, true),
                (2, 3) => (1, false),
                (3, 2) => (1, true),
                (3, 1) => (2, false),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let mut table = vec![0; 64];
        for a in 0..8 {
            for b in 0..8 {
                let (u, neg) = unit_mul(a / 2, b / 2);
                let sign = (a % 2) ^ (b % 2) ^ (neg as usize);
                table[a * 8 + b] = 2 * u + sign;
            }
        }
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::from_construction(table, names)
    }

    /// `H^ × K` with `(ρ, k)(ρ', k') = (ρ ρ' F^(k, k'), k k')`, for a normalized 2-cocycle `F^: K × K → H^`.
    ///
    /// The pair `(ρ, k)` sits at index `ρ·|K| + k`, with the abelian indexing on each side.
    pub fn central_extension<F>(k: &FiniteAbelianGroup, hhat: &FiniteAbelianGroup, fhat: F) -> Result<Self, GroupError>
    where
        F: Fn(usize, usize) -> usize,
    {
        let nk = k.order();
        let nh = hhat.order();
        let kelems: Vec<Vec<u64>> = k.elements().collect();
        let helems: Vec<Vec<u64>> = hhat.elements().collect();
        let kmul = |a: usize, b: usize| k.index_of(&k.mul(&kelems[a], &kelems[b]));
        let hmul = |a: usize, b: usize| hhat.index_of(&hhat.mul(&helems[a], &helems[b]));
        let f: Vec<usize> = (0..nk * nk).map(|i| fhat(i / nk, i % nk)).collect();
        if f.iter().any(|&v| v >= nh) {
            return Err(GroupError::InvalidTable("F^ value outside H^".into()));
        }
        for a in 0..nk {
            if f[a] != 0 || f[a * nk] != 0 {
                return Err(GroupError::NotNormalized);
            }
        }
        for a in 0..nk {
            for b in 0..nk {
                for c in 0..nk {
                    let lhs = hmul(f[a * nk + b], f[kmul(a, b) * nk + c]);
                    let rhs = hmul(f[b * nk + c], f[a * nk + kmul(b, c)]);
                    if lhs != rhs {
                        return Err(GroupError::NotACocycle { k1: a, k2: b, k3: c });
                    }
                }
            }
        }
        let n = nk * nh;
        let mut table = vec![0; n * n];
        for x in 0..n {
            let (r1, k1) = (x / nk, x % nk);
            for y in 0..n {
                let (r2, k2) = (y / nk, y % nk);
                let r = hmul(hmul(r1, r2), f[k1 * nk + k2]);
                table[x * n + y] = r * nk + kmul(k1, k2);
            }
        }
        let names = (0..n)
            .map(|x| format!("({}, {})", helems[x / nk].iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","), kelems[x % nk].iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        Ok(Self::from_construction(table, names))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        (0..e.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    /// `g s g^{-1}`.
    pub fn conj(&self, g: usize, s: usize) -> usize {
        self.mul(self.mul(g, s), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Result<usize, GroupError> {
        self.names
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| GroupError::UnknownElement(name.to_string()))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn centralizer(&self, s: usize) -> Vec<usize> {
        (0..self.n).filter(|&g| self.commute(g, s)).collect()
    }

    pub fn conjugacy_data(&self, s: usize) -> ConjugacyData {
        let mut class = Vec::new();
        let mut reps = Vec::new();
        for g in 0..self.n {
            let t = self.conj(g, s);
            if !class.contains(&t) {
                class.push(t);
                reps.push(g);
            }
        }
        ConjugacyData { class, reps, centralizer: self.centralizer(s) }
    }

    /// The subgroup generated by `gens`, sorted by index.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        (0..self.n).filter(|&a| seen[a]).collect()
    }

    /// Is `map` (indexed by elements of `self`) a homomorphism into `target`?
    pub fn is_homomorphism(&self, map: &[usize], target: &FiniteGroup) -> bool {
        map.len() == self.n
            && map.iter().all(|&x| x < target.order())
            && (0..self.n).all(|a| (0..self.n).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }

    fn class_sizes(&self) -> Vec<usize> {
        (0..self.n).map(|s| self.n / self.centralizer(s).len()).collect()
    }

    /// Multiset of (element order, class size) pairs; equal for isomorphic groups.
    fn fingerprint(&self) -> BTreeMap<(usize, usize), usize> {
        let sizes = self.class_sizes();
        let mut fp = BTreeMap::new();
        for a in 0..self.n {
            *fp.entry((self.element_order(a), sizes[a])).or_insert(0) += 1;
        }
        fp
    }

    /// Greedy generating set: elements of largest order first.
    fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.n).collect();
        by_order.sort_by_key(|&a| std::cmp::Reverse(self.element_order(a)));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in by_order {
            if span.len() == self.n {
                break;
            }
            if !span.contains(&a) {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }
}

/// Decides isomorphism by fingerprint comparison followed by a backtracking
/// search over images of a generating set. Limited to order 64.
pub fn is_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<bool, GroupError> {
    let n = g1.order();
    if n > 64 || g2.order() > 64 {
        return Err(GroupError::TooLarge(n.max(g2.order())));
    }
    if n != g2.order() || g1.is_abelian() != g2.is_abelian() || g1.fingerprint() != g2.fingerprint() {
        return Ok(false);
    }
    Ok(find_isomorphism(g1, g2).is_some())
}

/// An explicit isomorphism `g1 → g2`, indexed by elements of `g1`.
pub fn find_isomorphism(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<Vec<usize>> {
    if g1.order() != g2.order() {
        return None;
    }
    let gens = g1.generating_set();
    let s1 = g1.class_sizes();
    let s2 = g2.class_sizes();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            (0..g2.order())
                .filter(|&h| g2.element_order(h) == g1.element_order(g) && s2[h] == s1[g])
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(g1, g2, &gens, &candidates, &mut images)
}

fn search(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if k > 0 && extend(g1, g2, &gens[..k], images).is_none() {
        return None;
    }
    if k == gens.len() {
        let map = extend(g1, g2, gens, images)?;
        let mut hit = vec![false; g2.order()];
        for &m in &map {
            if std::mem::replace(&mut hit[m], true) {
                return None;
            }
        }
        return Some(map);
    }
    for &c in &candidates[k] {
        images.push(c);
        if let Some(m) = search(g1, g2, gens, candidates, images) {
            return Some(m);
        }
        images.pop();
    }
    None
}

/// Extends generator images to the generated subgroup, failing on any inconsistency.
/// Returns a full-length map when `gens` generate `g1`.
fn extend(g1: &FiniteGroup, g2: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map: HashMap<usize, usize> = HashMap::from([(g1.identity(), g2.identity())]);
    let mut queue = VecDeque::from([g1.identity()]);
    while let Some(a) = queue.pop_front() {
        let fa = map[&a];
        for (&g, &h) in gens.iter().zip(images) {
            let b = g1.mul(a, g);
            let fb = g2.mul(fa, h);
            match map.get(&b) {
                Some(&x) if x != fb => return None,
                Some(_) => {}
                None => {
                    map.insert(b, fb);
                    queue.push_back(b);
                }
            }
        }
    }
    // A consistent extension along right multiplication by generators is a homomorphism
    // on the subgroup only if it also respects products of arbitrary elements.
    let elems: Vec<usize> = map.keys().copied().collect();
    for &a in &elems {
        for &b in &elems {
            if map[&g1.mul(a, b)] != g2.mul(map[&a], map[&b]) {
                return None;
            }
        }
    }
    if map.len() == g1.order() {
        Some((0..g1.order()).map(|a| map[&a]).collect())
    } else {
        Some(Vec::new())
    }
}

/// Invariant factors (ascending, each dividing the next) of an abelian group.
pub fn invariant_factors_of(g: &FiniteGroup) -> Result<Vec<u64>, GroupError> {
    if !g.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let n = g.order() as u64;
    let orders: Vec<u64> = (0..g.order()).map(|a| g.element_order(a) as u64).collect();
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // Per prime: exponents of the cyclic p-parts, largest first.
    let mut parts: Vec<(u64, Vec<u32>)> = Vec::new();
    for &p in &primes {
        let log_p = |mut x: u64| {
            let mut k = 0;
            while x > 1 {
                x /= p;
                k += 1;
            }
            k
        };
        let sylow = p_part(n, p);
        let mut counts = vec![0u32];
        let mut k = 1;
        loop {
            let pk = p.pow(k);
            let c = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            counts.push(log_p(c));
            if c == sylow {
                break;
            }
            k += 1;
        }
        // counts[k] - counts[k-1] = number of cyclic factors of order >= p^k
        let mut exps = Vec::new();
        let kmax = counts.len() - 1;
        for k in (1..=kmax).rev() {
            let at_least_k = counts[k] - counts[k - 1];
            let at_least_k1 = if k < kmax { counts[k + 1] - counts[k] } else { 0 };
            for _ in 0..(at_least_k - at_least_k1) {
                exps.push(k as u32);
            }
        }
        parts.push((p, exps));
    }
    let len = parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|i| parts.iter().map(|(p, e)| e.get(i).map_or(1, |&k| p.pow(k))).product())
        .collect();
    factors.reverse();
    Ok(factors)
}

fn p_part(mut o: u64, p: u64) -> u64 {
    let mut r = 1;
    while o.is_multiple_of(p) {
        o /= p;
        r *= p;
    }
    r
}
