use num_bigint::BigUint;

/// Permutation of `0..n` as an image list: `p[i]` is the image of `i`.
pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn is_identity(p: &[u8]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x as usize)
}

/// First `a`, then `b`.
pub fn compose(a: &[u8], b: &[u8]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inverse(p: &[u8]) -> Perm {
    let mut q = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x as usize] = i as u8;
    }
    q
}

struct Level {
    base: u8,
    /// Generators added at this level; level `i` works with all of `gens[i..]`.
    gens: Vec<Perm>,
    transversal: Vec<Option<Perm>>,
}

/// Stabilizer chain built by the deterministic Schreier–Sims algorithm.
pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(n: usize, gens: &[Perm]) -> StabChain {
        let mut chain = StabChain {
            n,
            levels: Vec::new(),
        };
        for g in gens {
            if let Some((h, j)) = chain.sift(g.clone(), 0) {
                chain.add(h, j);
            }
        }
        chain.complete();
        chain
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .map(|l| l.transversal.iter().filter(|u| u.is_some()).count())
            .fold(BigUint::from(1u32), |acc, s| acc * BigUint::from(s))
    }

    pub fn contains(&self, g: &[u8]) -> bool {
        self.sift(g.to_vec(), 0).is_none()
    }

    fn add(&mut self, h: Perm, j: usize) {
        if j == self.levels.len() {
            let base = h
                .iter()
                .enumerate()
                .find(|(i, &x)| *i != x as usize)
                .map(|(i, _)| i as u8)
                .unwrap();
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal: Vec::new(),
            });
        }
        self.levels[j].gens.push(h);
        for l in 0..=j {
            self.rebuild(l);
        }
    }

    fn gens_from(&self, i: usize) -> Vec<&Perm> {
        self.levels[i..]
            .iter()
            .flat_map(|l| l.gens.iter())
            .collect()
    }

    fn rebuild(&mut self, i: usize) {
        let gens: Vec<Perm> = self.gens_from(i).into_iter().cloned().collect();
        let b = self.levels[i].base as usize;
        let mut t: Vec<Option<Perm>> = vec![None; self.n];
        t[b] = Some(identity(self.n));
        let mut queue = vec![b];
        while let Some(x) = queue.pop() {
            let ux = t[x].clone().unwrap();
            for s in &gens {
                let y = s[x] as usize;
                if t[y].is_none() {
                    t[y] = Some(compose(&ux, s));
                    queue.push(y);
                }
            }
        }
        self.levels[i].transversal = t;
    }

    /// Strips `g` through levels `from..`; returns the nontrivial residue and
    /// the level where it stuck, or `None` if `g` is in the group.
    fn sift(&self, mut g: Perm, from: usize) -> Option<(Perm, usize)> {
        for (j, l) in self.levels.iter().enumerate().skip(from) {
            let x = g[l.base as usize] as usize;
            match &l.transversal[x] {
                Some(u) => g = compose(&g, &inverse(u)),
                None => return Some((g, j)),
            }
        }
        (!is_identity(&g)).then_some((g, self.levels.len()))
    }

    fn complete(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.find_residue(i) {
                Some((h, j)) => {
                    self.add(h, j);
                    i = j;
                }
                None if i == 0 => return,
                None => i -= 1,
            }
        }
    }

    fn find_residue(&self, i: usize) -> Option<(Perm, usize)> {
        let gens = self.gens_from(i);
        let t = &self.levels[i].transversal;
        for (x, ux) in t
            .iter()
            .enumerate()
            .filter_map(|(x, u)| u.as_ref().map(|u| (x, u)))
        {
            for s in &gens {
                let y = s[x] as usize;
                let uy = t[y].as_ref().unwrap();
                let sg = compose(&compose(ux, s), &inverse(uy));
                if let Some(r) = self.sift(sg, i + 1) {
                    return Some(r);
                }
            }
        }
        None
    }
}

/// Orbit labels of the group generated by `gens` (smallest point of each orbit).
pub fn orbits(n: usize, gens: &[&Perm]) -> Vec<u8> {
    let mut parent: Vec<u8> = identity(n);
    fn find(p: &mut [u8], x: u8) -> u8 {
        let mut r = x;
        while p[r as usize] != r {
            r = p[r as usize];
        }
        let mut y = x;
        while p[y as usize] != r {
            let nx = p[y as usize];
            p[y as usize] = r;
            y = nx;
        }
        r
    }
    for g in gens {
        for (i, &x) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, i as u8), find(&mut parent, x));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    (0..n as u8).map(|x| find(&mut parent, x)).collect()
}
