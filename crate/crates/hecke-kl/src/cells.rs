//! Cells of the KL basis, Lusztig's asymptotics and the Schützenberger involution.
//!
//! Left cells have a fixed recording tableau `Q`, right cells a fixed insertion tableau `P`,
//! two-sided cells a fixed shape. `w_0` sits in the lowest cell `(1^n)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::SymGroup;
use crate::hecke::{all_left_products, full_twist_std, half_twist_kl, kl_left_mul_gen, kl_mul, kl_right_mul_gen, kl_table, structure_constant, to_kl, Basis};
use crate::perm::{all_permutations, Permutation};
use crate::tableau::{rsk, rsk_inverse, schutzenberger_dual, Partition, Tableau};
use crate::{Hecke, Laurent};

/// Coordinates of `w` in the cell decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellDescriptor {
    pub two_sided: Partition,
    /// Recording tableau; fixed along a left cell.
    pub left: Tableau,
    /// Insertion tableau; fixed along a right cell.
    pub right: Tableau,
}

impl CellDescriptor {
    pub fn of(w: &Permutation) -> Self {
        let (p, q) = rsk(w);
        CellDescriptor { two_sided: p.shape(), left: q, right: p }
    }

    pub fn to_json(&self) -> Value {
        json!({ "lambda": self.two_sided.to_json(), "Q": self.left.to_json(), "P": self.right.to_json() })
    }
}

pub fn shape_of(w: &Permutation) -> Partition {
    rsk(w).0.shape()
}

pub fn same_left_cell(x: &Permutation, y: &Permutation) -> bool {
    rsk(x).1 == rsk(y).1
}

pub fn same_right_cell(x: &Permutation, y: &Permutation) -> bool {
    rsk(x).0 == rsk(y).0
}

#[derive(Clone, Debug)]
pub struct LeftCell {
    pub q: Tableau,
    pub members: Vec<Permutation>,
}

#[derive(Clone, Debug)]
pub struct CellReport {
    pub lambda: Partition,
    pub left_cells: Vec<LeftCell>,
    pub distinguished: Vec<Permutation>,
}

impl CellReport {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.to_json(),
            "left_cells": self.left_cells.iter().map(|c| json!({
                "Q": c.q.to_json(),
                "members": c.members.iter().map(|w| w.to_json()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "distinguished": self.distinguished.iter().map(|w| w.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// One report per two-sided cell of `S_n`, from `(n)` down to `(1^n)`.
pub fn cell_report(n: usize) -> Result<Vec<CellReport>> {
    Partition::all(n)
        .into_iter()
        .map(|lambda| {
            let tabs = Tableau::all_standard(&lambda);
            let left_cells = tabs
                .iter()
                .map(|q| {
                    let mut members = tabs.iter().map(|p| rsk_inverse(p, q)).collect::<Result<Vec<_>>>()?;
                    members.sort_by_key(|w| (w.length(), w.clone()));
                    Ok(LeftCell { q: q.clone(), members })
                })
                .collect::<Result<Vec<_>>>()?;
            let distinguished = distinguished_involutions(n, &lambda)?;
            Ok(CellReport { lambda, left_cells, distinguished })
        })
        .collect()
}

/// `r(w)` as the row statistic of the RSK shape.
pub fn r_statistic(w: &Permutation) -> usize {
    shape_of(w).r()
}

/// `r(w)` computed twice: from the RSK shape, and as minus the lowest power of `v` in `c^d_{d,d}`
/// for the involution `d` in the left cell of `w`.
pub fn r_function(w: &Permutation) -> Result<usize> {
    let (p, q) = rsk(w);
    let d = rsk_inverse(&q, &q)?;
    let c = structure_constant(&d, &d, &d)?;
    let from_product = -c.min_exp().ok_or_else(|| Error::Violation(format!("c^d_(d,d) vanishes for d = {}", d.name())))?;
    let from_shape = p.shape().r() as i32;
    if from_product != from_shape {
        return Err(Error::MethodDisagreement(format!("r({}) is {} by shape but {} by structure constants", w.name(), from_shape, from_product)));
    }
    Ok(from_shape as usize)
}

/// `Δ(w)`: the lowest power of `v` in `h_{1,w}`.
pub fn delta(w: &Permutation) -> usize {
    let t = kl_table(w.n());
    let g = t.group();
    t.h_idx(0, g.index_of(w)).min_exp().expect("1 <= w in Bruhat order") as usize
}

pub fn delta_pair(p: &Tableau, q: &Tableau) -> Result<usize> {
    Ok(delta(&rsk_inverse(p, q)?))
}

/// `d(P, Q) = Δ(w(P, Q)) - r(λ)`.
pub fn d_stat(p: &Tableau, q: &Tableau) -> Result<i64> {
    Ok(delta_pair(p, q)? as i64 - p.shape().r() as i64)
}

/// The distinguished involutions of cell `λ`, computed as `{w(P, P)}` and as `{w : Δ(w) = r(λ)}`.
pub fn distinguished_involutions(n: usize, lambda: &Partition) -> Result<Vec<Permutation>> {
    if lambda.size() != n {
        return Err(Error::ShapeMismatch(format!("{} is not a partition of {}", lambda, n)));
    }
    let tabs = Tableau::all_standard(lambda);
    let by_tableaux: BTreeSet<Permutation> = tabs.iter().map(|p| rsk_inverse(p, p)).collect::<Result<_>>()?;
    let r = lambda.r();
    let mut by_delta = BTreeSet::new();
    for p in &tabs {
        for q in &tabs {
            let w = rsk_inverse(p, q)?;
            if delta(&w) == r {
                by_delta.insert(w);
            }
        }
    }
    if by_tableaux != by_delta {
        return Err(Error::MethodDisagreement(format!("distinguished involutions of {} differ between the two descriptions", lambda)));
    }
    let mut out: Vec<Permutation> = by_tableaux.into_iter().collect();
    out.sort_by_key(|w| (w.length(), w.clone()));
    Ok(out)
}

/// `w` with `τ(w) = w^{-1}`, i.e. `w_0 w` is an involution.
pub fn twisted_involutions(n: usize) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = all_permutations(n).into_iter().filter(|w| w.tau() == w.inverse()).collect();
    out.sort_by_key(|w| (w.length(), w.clone()));
    out
}

/// `t^z_{x,y}`: the coefficient of `v^{-r(z)}` in `c^z_{x,y}`.
pub fn j_constant(x: &Permutation, y: &Permutation, z: &Permutation) -> Result<i64> {
    let c = structure_constant(x, y, z)?;
    Ok(c.coeff(-(r_statistic(z) as i32)))
}

/// Element of the asymptotic ring `J`, as coefficients of `j_x`.
pub type JElement = BTreeMap<Permutation, i64>;

pub fn j_multiply(a: &JElement, b: &JElement) -> Result<JElement> {
    let mut out = JElement::new();
    for (x, cx) in a {
        for (y, cy) in b {
            let bx = Hecke::basis_element(x, Basis::Kl);
            let by = Hecke::basis_element(y, Basis::Kl);
            let g = bx.group();
            for (&z, c) in kl_mul(&bx, &by)?.indexed_terms() {
                let zp = g.elem(z);
                let t = c.coeff(-(r_statistic(zp) as i32));
                if t != 0 {
                    *out.entry(zp.clone()).or_insert(0) += cx * cy * t;
                }
            }
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

fn cellular_form_at(p: &Tableau, q: &Tableau, u: &Tableau, v: &Tableau) -> Result<Laurent> {
    let x = rsk_inverse(p, q)?;
    let y = rsk_inverse(u, v)?;
    let target = rsk_inverse(p, v)?;
    let prod = kl_mul(&Hecke::basis_element(&x, Basis::Kl), &Hecke::basis_element(&y, Basis::Kl))?;
    Ok(prod.coeff(&target))
}

/// `φ(Q, U)`: the coefficient of `b_{P,V}` in `b_{P,Q} b_{U,V}`, checked for two choices of `(P, V)`.
pub fn cellular_form(q: &Tableau, u: &Tableau) -> Result<Laurent> {
    if q.shape() != u.shape() {
        return Err(Error::ShapeMismatch(format!("{} and {} have different shapes", q, u)));
    }
    let tabs = Tableau::all_standard(&q.shape());
    let first = cellular_form_at(&tabs[0], q, u, &tabs[tabs.len() - 1])?;
    let second = cellular_form_at(&tabs[tabs.len() - 1], q, u, &tabs[0])?;
    if first != second {
        return Err(Error::MethodDisagreement(format!("cellular form of ({}, {}) depends on the outer tableaux", q, u)));
    }
    Ok(first)
}

/// Lowest power of `v` in `φ(P, Q)`, or `None` when the form vanishes.
pub fn cellular_min_exponent(p: &Tableau, q: &Tableau) -> Result<Option<i32>> {
    Ok(cellular_form(p, q)?.min_exp())
}

/// `Sch_L(w(P, Q)) = w(P^∨, Q)`.
pub fn schutzenberger_l_combinatorial(w: &Permutation) -> Permutation {
    let (p, q) = rsk(w);
    rsk_inverse(&schutzenberger_dual(&p), &q).expect("dual keeps the shape")
}

/// Sch_L by the tableau rule and by the head of `H_{w_0} b_w`; errors if they differ.
pub fn schutzenberger_l(w: &Permutation) -> Result<Permutation> {
    let comb = schutzenberger_l_combinatorial(w);
    let m = mathas_decompose(w)?;
    if m.head != comb {
        return Err(Error::MethodDisagreement(format!("Sch_L({}) is {} by tableaux but {} from the half twist", w.name(), comb.name(), m.head.name())));
    }
    Ok(comb)
}

/// `Sch_R(y) = Sch_L(y^{-1})^{-1}`.
pub fn schutzenberger_r(w: &Permutation) -> Permutation {
    schutzenberger_l_combinatorial(&w.inverse()).inverse()
}

#[derive(Clone, Debug)]
pub struct MathasDecomposition {
    /// `c(λ)`; the sign of the head is `(-1)^c(λ)`.
    pub sign_exponent: usize,
    /// `x(λ)`.
    pub v_power: i64,
    pub head: Permutation,
    /// `H_{w_0} b_y` minus the head term, supported in cells strictly below `λ`.
    pub remainder: Hecke,
}

impl MathasDecomposition {
    pub fn to_json(&self) -> Value {
        json!({
            "sign_exponent": self.sign_exponent,
            "v_power": self.v_power,
            "head": self.head.to_json(),
            "remainder": self.remainder.to_json(),
        })
    }
}

/// Split `H_{w_0} b_y` into its unique term in the cell of `y` and a part in strictly lower cells.
pub fn mathas_decompose(y: &Permutation) -> Result<MathasDecomposition> {
    let n = y.n();
    let lambda = shape_of(y);
    let prod = kl_mul(&half_twist_kl::<i64>(n), &Hecke::basis_element(y, Basis::Kl))?;
    let (head, coeff) = split_cell_head(&prod, &lambda, y)?;
    let expected = Laurent::v(lambda.x() as i32).scale(&if lambda.c().is_multiple_of(2) { 1 } else { -1 });
    if coeff != expected {
        return Err(Error::Violation(format!("H_w0 b_{}: head coefficient {} differs from {}", y.name(), coeff, expected)));
    }
    let g = prod.group();
    let mut remainder = prod.clone();
    remainder.add_term(g.index_of(&head), &(-&coeff));
    Ok(MathasDecomposition { sign_exponent: lambda.c(), v_power: lambda.x(), head, remainder })
}

/// The unique cell-`λ` term of `e`; all other terms must lie strictly below `λ`.
fn split_cell_head(e: &Hecke, lambda: &Partition, y: &Permutation) -> Result<(Permutation, Laurent)> {
    let g = e.group();
    let mut head = None;
    for (&z, c) in e.indexed_terms() {
        let zp = g.elem(z);
        let mu = shape_of(zp);
        if &mu == lambda {
            if head.is_some() {
                return Err(Error::Violation(format!("several terms of cell {} in the product with b_{}", lambda, y.name())));
            }
            head = Some((zp.clone(), c.clone()));
        } else if !mu.dominance_lt(lambda)? {
            return Err(Error::Violation(format!("term b_{} of cell {} is not below {}", zp.name(), mu, lambda)));
        }
    }
    head.ok_or_else(|| Error::Violation(format!("no term of cell {} in the product with b_{}", lambda, y.name())))
}

/// The full twist acts on `b_y` modulo lower cells by `v^{2x(λ)}`.
pub fn full_twist_eigen_check(y: &Permutation) -> Result<()> {
    let n = y.n();
    let lambda = shape_of(y);
    let ft = to_kl(&full_twist_std::<i64>(n));
    let prod = kl_mul(&ft, &Hecke::basis_element(y, Basis::Kl))?;
    let (head, coeff) = split_cell_head(&prod, &lambda, y)?;
    let expected = Laurent::v(2 * lambda.x() as i32);
    if &head != y || coeff != expected {
        return Err(Error::Violation(format!("full twist on b_{}: head {} with coefficient {}, expected {}", y.name(), head.name(), coeff, expected)));
    }
    Ok(())
}

/// All products `b_x b_y` of `S_n`, kept in memory.
pub struct StructureTable {
    group: Arc<SymGroup>,
    /// `cols[y][x] = b_x b_y`.
    cols: Vec<Vec<Hecke>>,
    shapes: Vec<Partition>,
    r: Vec<i32>,
}

/// Largest rank for which the full product table is built.
pub const STRUCTURE_TABLE_MAX_RANK: usize = 5;

impl StructureTable {
    pub fn new(n: usize) -> Result<Self> {
        if n > STRUCTURE_TABLE_MAX_RANK {
            return Err(Error::RankTooLarge(n, STRUCTURE_TABLE_MAX_RANK));
        }
        let t = kl_table(n);
        let g = t.group().clone();
        let order = g.order();
        let threads = std::thread::available_parallelism().map_or(1, |p| p.get()).min(order.max(1));
        let mut cols: Vec<Option<Vec<Hecke>>> = vec![None; order];
        std::thread::scope(|scope| {
            let chunks: Vec<_> = cols.chunks_mut(order.div_ceil(threads)).enumerate().collect();
            let per = order.div_ceil(threads);
            for (ci, chunk) in chunks {
                let g = &g;
                scope.spawn(move || {
                    for (k, slot) in chunk.iter_mut().enumerate() {
                        let y = (ci * per + k) as u32;
                        let b = Hecke::basis_element(g.elem(y), Basis::Kl);
                        *slot = Some(all_left_products(&b).expect("KL basis"));
                    }
                });
            }
        });
        let cols = cols.into_iter().map(|c| c.unwrap()).collect();
        let shapes: Vec<Partition> = g.elements().iter().map(shape_of).collect();
        let r = shapes.iter().map(|s| s.r() as i32).collect();
        Ok(StructureTable { group: g, cols, shapes, r })
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn group(&self) -> &Arc<SymGroup> {
        &self.group
    }

    pub fn product(&self, x: u32, y: u32) -> &Hecke {
        &self.cols[y as usize][x as usize]
    }

    pub fn c(&self, x: u32, y: u32, z: u32) -> Laurent {
        self.product(x, y).coeff_idx(z)
    }

    /// `t^z_{x,y}` with `r(z)` from the shape of `z`.
    pub fn t(&self, x: u32, y: u32, z: u32) -> i64 {
        self.product(x, y).indexed_terms().get(&z).map_or(0, |c| c.coeff(-self.r[z as usize]))
    }

    pub fn shape(&self, w: u32) -> &Partition {
        &self.shapes[w as usize]
    }

    pub fn r(&self, w: u32) -> usize {
        self.r[w as usize] as usize
    }

    /// `r(z)` by its definition: minus the lowest power of `v` in any `c^z_{x,y}`.
    pub fn r_by_definition(&self) -> Vec<usize> {
        let order = self.group.order();
        let mut lowest = vec![0i32; order];
        for col in &self.cols {
            for e in col {
                for (&z, c) in e.indexed_terms() {
                    let m = c.min_exp().unwrap();
                    if m < lowest[z as usize] {
                        lowest[z as usize] = m;
                    }
                }
            }
        }
        lowest.into_iter().map(|m| (-m) as usize).collect()
    }
}

/// The preorders `<=_L`, `<=_R`, `<=_LR` obtained by closing the generator actions on the KL basis.
pub struct CellOrders {
    group: Arc<SymGroup>,
    leq_l: Vec<Vec<bool>>,
    leq_r: Vec<Vec<bool>>,
    leq_lr: Vec<Vec<bool>>,
}

impl CellOrders {
    pub fn new(n: usize) -> Self {
        let g = kl_table(n).group().clone();
        let order = g.order();
        let mut left: Vec<Vec<u32>> = vec![Vec::new(); order];
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); order];
        for y in 0..order as u32 {
            let by = Hecke::basis_element(g.elem(y), Basis::Kl);
            for s in 1..n {
                left[y as usize].extend(kl_left_mul_gen(s, &by).indexed_terms().keys());
                right[y as usize].extend(kl_right_mul_gen(&by, s).indexed_terms().keys());
            }
        }
        let both: Vec<Vec<u32>> = left.iter().zip(&right).map(|(a, b)| a.iter().chain(b).copied().collect()).collect();
        CellOrders { leq_l: closure(&left), leq_r: closure(&right), leq_lr: closure(&both), group: g }
    }

    /// `x <=_L y`.
    pub fn leq_l(&self, x: u32, y: u32) -> bool {
        self.leq_l[y as usize][x as usize]
    }

    pub fn leq_r(&self, x: u32, y: u32) -> bool {
        self.leq_r[y as usize][x as usize]
    }

    pub fn leq_lr(&self, x: u32, y: u32) -> bool {
        self.leq_lr[y as usize][x as usize]
    }

    pub fn group(&self) -> &Arc<SymGroup> {
        &self.group
    }
}

// reach[y][x] = x is reachable from y
fn closure(edges: &[Vec<u32>]) -> Vec<Vec<bool>> {
    let order = edges.len();
    (0..order)
        .map(|start| {
            let mut seen = vec![false; order];
            seen[start] = true;
            let mut queue = VecDeque::from([start as u32]);
            while let Some(y) = queue.pop_front() {
                for &z in &edges[y as usize] {
                    if !seen[z as usize] {
                        seen[z as usize] = true;
                        queue.push_back(z);
                    }
                }
            }
            seen
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub instances: usize,
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub n: usize,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "checks": self.checks.iter().map(|c| json!({"name": c.name, "instances": c.instances})).collect::<Vec<_>>(),
        })
    }
}

fn violation(name: &str, witness: String) -> Error {
    Error::Violation(format!("{}: {}", name, witness))
}

/// Exhaustive check of the cell-theoretic properties over `S_n` (`n <= 5`).
/// The first failure is returned as an error naming a witness.
pub fn verify_p_properties(n: usize) -> Result<PropertyReport> {
    let table = StructureTable::new(n)?;
    let orders = CellOrders::new(n);
    verify_p_properties_with(&table, &orders)
}

pub fn verify_p_properties_with(table: &StructureTable, orders: &CellOrders) -> Result<PropertyReport> {
    let g = table.group().clone();
    let n = g.n();
    let order = g.order() as u32;
    let kl = kl_table(n);
    let name = |w: u32| g.elem(w).name();
    let mut checks = Vec::new();
    let mut record = |name: &'static str, instances: usize| checks.push(PropertyCheck { name, instances });

    let rsk_pairs: Vec<(Tableau, Tableau)> = g.elements().iter().map(rsk).collect();

    // cells from the closure agree with the tableau description; two-sided order is dominance
    let mut count = 0;
    for x in 0..order {
        for y in 0..order {
            let (px, qx) = &rsk_pairs[x as usize];
            let (py, qy) = &rsk_pairs[y as usize];
            let sim_l = orders.leq_l(x, y) && orders.leq_l(y, x);
            let sim_r = orders.leq_r(x, y) && orders.leq_r(y, x);
            let lam_x = table.shape(x);
            let lam_y = table.shape(y);
            if sim_l != (qx == qy) || sim_r != (px == py) {
                return Err(violation("cells-by-tableaux", format!("{} and {}", name(x), name(y))));
            }
            if orders.leq_lr(x, y) != lam_x.dominance_leq(lam_y)? {
                return Err(violation("two-sided-order-is-dominance", format!("{} and {}", name(x), name(y))));
            }
            count += 1;
        }
    }
    record("cells-by-tableaux", count);
    record("two-sided-order-is-dominance", count);

    let r_def = table.r_by_definition();
    for z in 0..order {
        if r_def[z as usize] != table.r(z) {
            return Err(violation("r-definition", format!("{}: {} vs {}", name(z), r_def[z as usize], table.r(z))));
        }
    }
    record("r-definition", order as usize);

    // P14
    for w in 0..order {
        if table.shape(w) != table.shape(g.inverse(w)) || !orders.leq_lr(w, g.inverse(w)) || !orders.leq_lr(g.inverse(w), w) {
            return Err(violation("P14", name(w)));
        }
    }
    record("P14 w ~LR w^-1", order as usize);

    // P7 and P8, over every nonzero t
    let mut nonzero = 0;
    for x in 0..order {
        for y in 0..order {
            for &z in table.product(x, y).indexed_terms().keys() {
                let t = table.t(x, y, z);
                if t == 0 {
                    continue;
                }
                nonzero += 1;
                let (px, qx) = &rsk_pairs[x as usize];
                let qy = &rsk_pairs[y as usize].1;
                let (pz, qz) = &rsk_pairs[z as usize];
                let yi = g.inverse(y);
                if px != pz || qy != qz || *qx != rsk_pairs[yi as usize].1 {
                    return Err(violation("P8", format!("t^{}_({},{}) = {}", name(z), name(x), name(y), t)));
                }
                let rotated = table.t(y, g.inverse(z), g.inverse(x));
                if rotated != t {
                    return Err(violation("P7", format!("t^{}_({},{}) = {} but rotated constant is {}", name(z), name(x), name(y), t, rotated)));
                }
            }
        }
    }
    record("P7 rotation of t", nonzero);
    record("P8 support of t", nonzero);

    // P4 and P9-10
    let mut count = 0;
    for x in 0..order {
        for y in 0..order {
            if orders.leq_lr(x, y) && table.r(x) < table.r(y) {
                return Err(violation("P4", format!("{} <=LR {}", name(x), name(y))));
            }
            let same_r = table.r(x) == table.r(y);
            if orders.leq_l(x, y) && same_r && !orders.leq_l(y, x) {
                return Err(violation("P9-10 left", format!("{} <=L {}", name(x), name(y))));
            }
            if orders.leq_r(x, y) && same_r && !orders.leq_r(y, x) {
                return Err(violation("P9-10 right", format!("{} <=R {}", name(x), name(y))));
            }
            // distinct left cells inside one two-sided cell are incomparable
            if table.shape(x) == table.shape(y) && orders.leq_l(x, y) && rsk_pairs[x as usize].1 != rsk_pairs[y as usize].1 {
                return Err(violation("left-cells-incomparable", format!("{} <=L {}", name(x), name(y))));
            }
            count += 1;
        }
    }
    record("P4 r is order reversing", count);
    record("P9-10 comparable cells with equal r", count);
    record("left-cells-incomparable", count);

    // P11
    let parts = Partition::all(n);
    let mut count = 0;
    for a in &parts {
        for b in &parts {
            if a.dominance_lt(b)? && a.r() <= b.r() {
                return Err(violation("P11", format!("{} < {}", a, b)));
            }
            count += 1;
        }
    }
    record("P11 r strictly decreasing", count);

    // P1, distinguished set, P13/P6, P5
    let deltas: Vec<usize> = (0..order).map(|w| delta(g.elem(w))).collect();
    let mut dist = Vec::new();
    for w in 0..order {
        if deltas[w as usize] < table.r(w) {
            return Err(violation("P1", format!("Δ({}) = {} < r = {}", name(w), deltas[w as usize], table.r(w))));
        }
        if deltas[w as usize] == table.r(w) {
            dist.push(w);
        }
    }
    record("P1 delta >= r", order as usize);
    for &d in &dist {
        if !g.elem(d).is_involution() {
            return Err(violation("P13", format!("{} is distinguished but not an involution", name(d))));
        }
        let lead = kl.h_idx(0, d).coeff(deltas[d as usize] as i32);
        if lead != 1 {
            return Err(violation("P5", format!("coefficient {} in h_(1,{})", lead, name(d))));
        }
    }
    let involutions = (0..order).filter(|&w| g.elem(w).is_involution()).count();
    if involutions != dist.len() {
        return Err(violation("P13", format!("{} involutions but {} distinguished elements", involutions, dist.len())));
    }
    for w in 0..order {
        let in_left = dist.iter().filter(|&&d| rsk_pairs[d as usize].1 == rsk_pairs[w as usize].1).count();
        let in_right = dist.iter().filter(|&&d| rsk_pairs[d as usize].0 == rsk_pairs[w as usize].0).count();
        if in_left != 1 || in_right != 1 {
            return Err(violation("P6", format!("cells of {} contain {} and {} distinguished elements", name(w), in_left, in_right)));
        }
    }
    record("P13/P6 one distinguished involution per one-sided cell", order as usize);
    record("P5 leading coefficient of h_(1,d)", dist.len());

    // t^d_{x,y} != 0 iff x = y^-1 and y ~L d, with value 1
    let mut count = 0;
    for &d in &dist {
        for x in 0..order {
            for y in 0..order {
                let t = table.t(x, y, d);
                let expect = x == g.inverse(y) && rsk_pairs[y as usize].1 == rsk_pairs[d as usize].1;
                if (t != 0) != expect || (expect && t != 1) {
                    return Err(violation("P3", format!("t^{}_({},{}) = {}", name(d), name(x), name(y), t)));
                }
                count += 1;
            }
        }
    }
    record("P3 distinguished constants", count);

    // multiplying by w_0 reverses all three orders
    let mut count = 0;
    for x in 0..order {
        for y in 0..order {
            let (lx, ly) = (g.left_w0(x), g.left_w0(y));
            let (rx, ry) = (g.right_w0(x), g.right_w0(y));
            let ok = [
                (orders.leq_l(x, y), orders.leq_l(ly, lx), orders.leq_l(ry, rx)),
                (orders.leq_r(x, y), orders.leq_r(ly, lx), orders.leq_r(ry, rx)),
                (orders.leq_lr(x, y), orders.leq_lr(ly, lx), orders.leq_lr(ry, rx)),
            ]
            .iter()
            .all(|&(a, b, c)| a == b && b == c);
            if !ok {
                return Err(violation("w0-reverses-orders", format!("{} and {}", name(x), name(y))));
            }
            count += 1;
        }
    }
    record("w0-reverses-orders", count);

    Ok(PropertyReport { n, checks })
}

/// Checks tying the half twist to duality of cells, over `S_n`:
/// the constants `t^z_{w_0 d, y}`, Sch_L on distinguished involutions, and the action of `b_d`.
pub fn verify_duality_lemmas(table: &StructureTable) -> Result<PropertyReport> {
    let g = table.group().clone();
    let n = g.n();
    let order = g.order() as u32;
    let name = |w: u32| g.elem(w).name();
    let mut checks = Vec::new();
    let dist: Vec<u32> = (0..order).filter(|&w| g.elem(w).is_involution()).collect();

    // exactly one pair (d in λ^t, z) with t^z_{w_0 d, y} nonzero, and that constant is 1
    for y in 0..order {
        let lt = table.shape(y).transpose();
        let mut hits = Vec::new();
        for &d in dist.iter().filter(|&&d| table.shape(d) == &lt) {
            let x = g.left_w0(d);
            for &z in table.product(x, y).indexed_terms().keys() {
                let t = table.t(x, y, z);
                if t != 0 && table.shape(z) == table.shape(y) {
                    hits.push((d, z, t));
                }
            }
        }
        if hits.len() != 1 || hits[0].2 != 1 {
            return Err(violation("twisted-distinguished-constant", format!("y = {}: {} nonzero constants", name(y), hits.len())));
        }
    }
    checks.push(PropertyCheck { name: "twisted-distinguished-constant", instances: order as usize });

    // Sch_L(D ∩ λ) = w_0 (D ∩ λ^t)
    for lambda in Partition::all(n) {
        let lt = lambda.transpose();
        let image: BTreeSet<u32> = dist.iter().filter(|&&d| table.shape(d) == &lambda).map(|&d| g.index_of(&schutzenberger_l_combinatorial(g.elem(d)))).collect();
        let twisted: BTreeSet<u32> = dist.iter().filter(|&&d| table.shape(d) == &lt).map(|&d| g.left_w0(d)).collect();
        if image != twisted {
            return Err(violation("schutzenberger-on-distinguished", format!("cell {}", lambda)));
        }
    }
    checks.push(PropertyCheck { name: "schutzenberger-on-distinguished", instances: Partition::all(n).len() });

    // v^{r} b_d b_x ≡ δ b_x modulo vZ[v] on cell λ
    let mut count = 0;
    for &d in &dist {
        let lambda = table.shape(d);
        let r = table.r(d) as i32;
        for x in (0..order).filter(|&x| table.shape(x) == lambda) {
            let same_right = rsk(g.elem(x)).0 == rsk(g.elem(d)).0;
            for (&z, c) in table.product(d, x).indexed_terms() {
                if table.shape(z) != lambda {
                    continue;
                }
                let mut c = c.shift(r);
                if z == x && same_right {
                    c -= &Laurent::one();
                }
                if !c.in_v_zv() {
                    return Err(violation("distinguished-action", format!("b_{} b_{}: coefficient of b_{}", name(d), name(x), name(z))));
                }
            }
            count += 1;
        }
    }
    checks.push(PropertyCheck { name: "distinguished-action", instances: count });
    Ok(PropertyReport { n, checks })
}

/// Search `S_n` for standard tableaux `P, Q, R` of one shape with `d(P,Q) + d(Q,R) < d(P,R)`.
pub fn triangle_inequality_witness(n: usize) -> Result<Option<(Tableau, Tableau, Tableau)>> {
    for lambda in Partition::all(n) {
        let tabs = Tableau::all_standard(&lambda);
        let k = tabs.len();
        let mut d = vec![vec![0i64; k]; k];
        for i in 0..k {
            for j in 0..k {
                d[i][j] = d_stat(&tabs[i], &tabs[j])?;
            }
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if d[a][b] + d[b][c] < d[a][c] {
                        return Ok(Some((tabs[a].clone(), tabs[b].clone(), tabs[c].clone())));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    fn part(x: &[usize]) -> Partition {
        Partition::new(x).unwrap()
    }

    #[test]
    fn r_function_examples() {
        assert_eq!(r_function(&p(4, "tsut")).unwrap(), 2);
        assert_eq!(shape_of(&p(4, "tsut")), part(&[2, 2]));
        assert_eq!(r_function(&p(4, "sutsu")).unwrap(), 3);
        assert_eq!(shape_of(&p(4, "sutsu")), part(&[2, 1, 1]));
        for w in all_permutations(4) {
            r_function(&w).unwrap();
        }
        assert_eq!(r_function(&Permutation::identity(5)).unwrap(), 0);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&p(4, "tsut")), 2);
        let t = kl_table(4);
        for w in all_permutations(4) {
            assert_eq!(delta(&w), delta(&w.inverse()));
            if t.is_smooth(&w).unwrap() {
                assert_eq!(delta(&w), w.length());
            }
        }
        for n in 1..=5 {
            for l in Partition::all(n) {
                for q in Tableau::all_standard(&l) {
                    assert_eq!(d_stat(&q, &q).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn distinguished_in_s3() {
        let total: usize = Partition::all(3).iter().map(|l| distinguished_involutions(3, l).unwrap().len()).sum();
        assert_eq!(total, 4);
        assert_eq!(distinguished_involutions(3, &part(&[2, 1])).unwrap(), vec![p(3, "t"), p(3, "s")]);
    }

    #[test]
    fn j_ring_of_the_simple_cell_of_s3() {
        let j = |w: &str| JElement::from([(p(3, w), 1)]);
        assert_eq!(j_multiply(&j("s"), &j("s")).unwrap(), j("s"));
        assert!(j_multiply(&j("s"), &j("t")).unwrap().is_empty());
        assert_eq!(j_multiply(&j("st"), &j("ts")).unwrap(), j("s"));
        let x = p(4, "tsut");
        assert_eq!(j_constant(&x, &x, &x).unwrap(), 1);
    }

    #[test]
    fn cellular_form_examples() {
        for n in 2..=4 {
            for l in Partition::all(n) {
                let tabs = Tableau::all_standard(&l);
                for q in &tabs {
                    for u in &tabs {
                        let phi = cellular_form(q, u).unwrap();
                        if q == u {
                            assert_eq!(phi.min_exp(), Some(-(l.r() as i32)));
                            assert_eq!(phi.coeff(-(l.r() as i32)), 1);
                        } else if let Some(m) = phi.min_exp() {
                            assert!(m > -(l.r() as i32));
                        }
                    }
                }
            }
        }
        let q = Tableau::parse("12/3").unwrap();
        assert_eq!(cellular_form(&q, &q).unwrap(), Laurent::quantum(2));
    }

    #[test]
    fn schutzenberger_examples() {
        assert_eq!(schutzenberger_l(&p(3, "s")).unwrap(), p(3, "ts"));
        let w0 = Permutation::longest(4);
        assert_eq!(schutzenberger_l(&w0).unwrap(), w0);
        for w in all_permutations(4) {
            let s = schutzenberger_l(&w).unwrap();
            assert_eq!(schutzenberger_l_combinatorial(&s), w);
            assert_eq!(rsk(&s).1, rsk(&w).1);
            let (pp, qq) = rsk(&w);
            assert_eq!(w.tau(), rsk_inverse(&schutzenberger_dual(&pp), &schutzenberger_dual(&qq)).unwrap());
        }
    }

    #[test]
    fn twisted_involutions_of_s4() {
        let expected: BTreeSet<Permutation> =
            ["stsuts", "tstut", "tutst", "sutsu", "su", "tsut", "stu", "t", "uts", "id"].iter().map(|w| p(4, w)).collect();
        let found: BTreeSet<Permutation> = twisted_involutions(4).into_iter().collect();
        assert_eq!(found, expected);
        let via_tableaux: BTreeSet<Permutation> = Partition::all(4)
            .iter()
            .flat_map(Tableau::all_standard)
            .map(|t| rsk_inverse(&schutzenberger_dual(&t), &t).unwrap())
            .collect();
        assert_eq!(via_tableaux, expected);
    }

    #[test]
    fn mathas_examples() {
        let m = mathas_decompose(&p(3, "s")).unwrap();
        assert_eq!((m.head.clone(), m.sign_exponent % 2, m.v_power), (p(3, "ts"), 1, 0));
        let m = mathas_decompose(&Permutation::longest(3)).unwrap();
        assert_eq!((m.head, m.v_power, m.sign_exponent), (Permutation::longest(3), -3, 0));
        assert!(m.remainder.is_zero());
        for w in all_permutations(4) {
            full_twist_eigen_check(&w).unwrap();
        }
    }

    #[test]
    fn p_properties_small_ranks() {
        for n in 1..=4 {
            let table = StructureTable::new(n).unwrap();
            let orders = CellOrders::new(n);
            verify_p_properties_with(&table, &orders).unwrap();
            verify_duality_lemmas(&table).unwrap();
        }
        assert!(StructureTable::new(6).is_err());
    }

    #[test]
    fn cell_reports() {
        let reports = cell_report(4).unwrap();
        assert_eq!(reports.len(), 5);
        let sizes: Vec<usize> = reports.iter().map(|r| r.left_cells.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2, 3, 1]);
        assert_eq!(reports.iter().map(|r| r.distinguished.len()).sum::<usize>(), 10);
    }
}
