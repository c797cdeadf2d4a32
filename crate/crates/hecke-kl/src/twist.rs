//! Twists, Jucys-Murphy elements, relative cells and Young idempotents.
//!
//! `ft_k` is `H_{w_0}^2` of `H_k`, embedded in `H_n` on the first `k` strands. The quasi-idempotent
//! `k_T` diagonalizes the tower `ft_2, ..., ft_n` along the path of `T`, and `p_T = k_T / γ_T`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::group;
use crate::hecke::{full_twist_std, half_twist_std, kl_mul, std_left_mul_gen, std_mul, std_right_mul_gen, to_kl, to_std, Basis, HeckeElement};
use crate::perm::Permutation;
use crate::scalar::{laurent_div_exact, laurent_lcm, Coeff};
use crate::tableau::{rsk, rsk_inverse, schutzenberger_dual, Partition, Tableau};
use crate::{BigHecke, BigLaurent, Hecke, Laurent, RationalScalar};

/// `a ⊔ b` in `H_{i+j}`; `b` is first converted to the basis of `a`.
pub fn external_product<C: Coeff>(a: &HeckeElement<C>, b: &HeckeElement<C>) -> HeckeElement<C> {
    let b = match a.basis() {
        Basis::Standard => to_std(b),
        Basis::Kl => to_kl(b),
    };
    let n = a.n() + b.n();
    let g = group(n);
    let mut out = HeckeElement::zero(n, a.basis());
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            out.add_term(g.index_of(&x.external(&y)), &(cx * cy));
        }
    }
    out
}

/// `a ⊔ 1_m`.
pub fn embed<C: Coeff>(a: &HeckeElement<C>, m: usize) -> HeckeElement<C> {
    external_product(a, &HeckeElement::one(m, a.basis()))
}

/// Image of the Jucys-Murphy braid `y_k` in `H_n` (standard basis), with `y_1 = σ_1^2` and
/// `y_{k+1} = σ_{k+1} y_k σ_{k+1}`. Defined for `1 <= k <= n-1`.
pub fn jm_element<C: Coeff>(k: usize, n: usize) -> Result<HeckeElement<C>> {
    if k == 0 || k >= n {
        return Err(Error::InvalidPermutation(format!("y_{} needs 1 <= k < n = {}", k, n)));
    }
    let mut y = std_right_mul_gen(&HeckeElement::basis_element(&Permutation::simple(n, 1)?, Basis::Standard), 1);
    for i in 2..=k {
        y = std_right_mul_gen(&std_left_mul_gen(i, &y), i);
    }
    Ok(y)
}

/// `y_1 y_2 ... y_{n-1}`, which equals `ft_n`.
pub fn jm_product<C: Coeff>(n: usize) -> Result<HeckeElement<C>> {
    let mut out = HeckeElement::one(n, Basis::Standard);
    for k in 1..n {
        out = std_mul(&out, &jm_element(k, n)?)?;
    }
    Ok(out)
}

/// `ft_k ⊔ 1_{n-k}` in the KL basis.
pub fn full_twist<C: Coeff>(k: usize, n: usize) -> Result<HeckeElement<C>> {
    if k == 0 || k > n {
        return Err(Error::InvalidPartition(format!("ft_{} needs 1 <= k <= n = {}", k, n)));
    }
    Ok(embed(&to_kl(&full_twist_std::<C>(k)), n - k))
}

/// `H_{w_0^{(k)}} ⊔ 1_{n-k}` in the KL basis.
pub fn half_twist<C: Coeff>(k: usize, n: usize) -> Result<HeckeElement<C>> {
    if k == 0 || k > n {
        return Err(Error::InvalidPartition(format!("ht_{} needs 1 <= k <= n = {}", k, n)));
    }
    Ok(embed(&to_kl(&half_twist_std::<C>(k)), n - k))
}

/// `v^{2x(λ)}`, the scalar by which the full twist acts on cell `λ` modulo lower cells.
pub fn eigenvalue(lambda: &Partition) -> Laurent {
    Laurent::v(2 * lambda.x() as i32)
}

/// Chain of shapes `λ^1 ⊂ ... ⊂ λ^n`, one box at a time.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableauPath {
    shapes: Vec<Partition>,
}

impl TableauPath {
    pub fn new(shapes: Vec<Partition>) -> Result<Self> {
        Tableau::from_path(&shapes)?;
        Ok(TableauPath { shapes })
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        TableauPath { shapes: t.path() }
    }

    pub fn tableau(&self) -> Tableau {
        Tableau::from_path(&self.shapes).expect("validated on construction")
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn n(&self) -> usize {
        self.shapes.len()
    }

    pub fn shape(&self) -> &Partition {
        self.shapes.last().expect("nonempty path")
    }

    /// All paths ending in shapes of size `n`.
    pub fn all(n: usize) -> Vec<TableauPath> {
        Partition::all(n).iter().flat_map(Tableau::all_standard).map(|t| TableauPath::from_tableau(&t)).collect()
    }

    /// Parses `"1;1,1;2,1"` (shapes separated by `;`).
    pub fn parse(text: &str) -> Result<Self> {
        let shapes = text.split(';').map(Partition::parse).collect::<Result<Vec<_>>>()?;
        TableauPath::new(shapes)
    }

    pub fn to_json(&self) -> Value {
        json!(self.shapes.iter().map(|s| s.to_json()).collect::<Vec<_>>())
    }
}

impl fmt::Display for TableauPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.shapes.iter().map(|p| p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", s.join(";"))
    }
}

/// For each step `k >= 2`: the eigenvalue of the chosen shape and those of the other shapes
/// reachable from `λ^{k-1}`.
fn steps(path: &TableauPath) -> Vec<(usize, BigLaurent, Vec<BigLaurent>)> {
    let sh = path.shapes();
    (2..=sh.len())
        .map(|k| {
            let chosen = &sh[k - 1];
            let others = sh[k - 2].children().into_iter().filter(|nu| nu != chosen).map(|nu| eigenvalue(&nu).convert()).collect();
            (k, eigenvalue(chosen).convert(), others)
        })
        .collect()
}

/// `γ_T = prod (v^{2x(λ^k)} - v^{2x(ν)})` over the same factors as `k_T`.
pub fn gamma(path: &TableauPath) -> BigLaurent {
    let mut g = BigLaurent::one();
    for (_, kappa, others) in steps(path) {
        for nu in others {
            g = &g * &(&kappa - &nu);
        }
    }
    g
}

/// `k_T = prod_k prod_ν (ft_k - v^{2x(ν)})`, in the KL basis of `H_n`.
pub fn quasi_idempotent(path: &TableauPath) -> Result<BigHecke> {
    quasi_idempotent_ordered(path, false)
}

fn quasi_idempotent_ordered(path: &TableauPath, reversed: bool) -> Result<BigHecke> {
    let n = path.n();
    let mut factors = Vec::new();
    for (k, _, others) in steps(path) {
        let ft: BigHecke = full_twist(k, n)?;
        for nu in others {
            factors.push(ft.try_sub(&BigHecke::scalar(n, Basis::Kl, nu))?);
        }
    }
    if reversed {
        factors.reverse();
    }
    let mut out = BigHecke::one(n, Basis::Kl);
    for f in &factors {
        out = kl_mul(&out, f)?;
    }
    Ok(out)
}

/// `p_T`, as the product of the normalized factors `(ft_k - κ_ν) / (κ_λ - κ_ν)`.
pub fn young_idempotent(path: &TableauPath) -> Result<RationalHecke> {
    let n = path.n();
    let mut out = RationalHecke::one(n);
    for (k, kappa, others) in steps(path) {
        let ft: BigHecke = full_twist(k, n)?;
        for nu in others {
            let num = RationalHecke::from_hecke(&ft.try_sub(&BigHecke::scalar(n, Basis::Kl, nu.clone()))?);
            let den = &kappa - &nu;
            if den.is_zero() {
                return Err(Error::Violation(format!("vanishing eigenvalue gap along {}", path)));
            }
            let inv = RationalScalar::new(BigLaurent::one(), den)?;
            out = out.mul(&num.scale(&inv))?;
        }
    }
    Ok(out)
}

/// `p_λ = sum over T of shape λ of p_T`.
pub fn central_idempotent(lambda: &Partition) -> Result<RationalHecke> {
    let n = lambda.size();
    let mut out = RationalHecke::zero(n);
    for t in Tableau::all_standard(lambda) {
        out = out.add(&young_idempotent(&TableauPath::from_tableau(&t))?)?;
    }
    Ok(out)
}

/// Element of `H_n ⊗ Q(v)` in the KL basis.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalHecke {
    n: usize,
    terms: BTreeMap<u32, RationalScalar>,
}

impl RationalHecke {
    pub fn zero(n: usize) -> Self {
        RationalHecke { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        RationalHecke::from_hecke(&BigHecke::one(n, Basis::Kl))
    }

    pub fn from_hecke(a: &BigHecke) -> Self {
        let a = to_kl(a);
        RationalHecke { n: a.n(), terms: a.indexed_terms().iter().map(|(&i, c)| (i, RationalScalar::from_laurent(c.clone()))).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> RationalScalar {
        let g = group(self.n);
        self.terms.get(&g.index_of(w)).cloned().unwrap_or_else(RationalScalar::zero)
    }

    pub fn terms(&self) -> Vec<(Permutation, &RationalScalar)> {
        let g = group(self.n);
        self.terms.iter().map(|(&i, c)| (g.elem(i).clone(), c)).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            let sum = match out.terms.get(&i) {
                Some(a) => a + c,
                None => c.clone(),
            };
            if sum.is_zero() {
                out.terms.remove(&i);
            } else {
                out.terms.insert(i, sum);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-&RationalScalar::one()))
    }

    pub fn scale(&self, s: &RationalScalar) -> Self {
        let terms = self.terms.iter().map(|(&i, c)| (i, c * s)).filter(|(_, c)| !c.is_zero()).collect();
        RationalHecke { n: self.n, terms }
    }

    /// `(A, D)` with `self = A / D`, `A` integral.
    pub fn common_denominator(&self) -> (BigHecke, BigLaurent) {
        let den = self.terms.values().fold(BigLaurent::one(), |acc, c| laurent_lcm(&acc, c.denom()));
        let mut num = BigHecke::zero(self.n, Basis::Kl);
        for (&i, c) in &self.terms {
            let factor = laurent_div_exact(&den, c.denom()).expect("lcm is a multiple");
            num.add_term(i, &(c.numer() * &factor));
        }
        (num, den)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (a, da) = self.common_denominator();
        let (b, db) = other.common_denominator();
        let prod = kl_mul(&a, &b)?;
        let den = &da * &db;
        let mut terms = BTreeMap::new();
        for (&i, c) in prod.indexed_terms() {
            terms.insert(i, RationalScalar::new(c.clone(), den.clone())?);
        }
        Ok(RationalHecke { n: self.n, terms })
    }

    pub fn mul_hecke(&self, h: &BigHecke) -> Result<Self> {
        self.mul(&RationalHecke::from_hecke(h))
    }

    pub fn hecke_mul(&self, h: &BigHecke) -> Result<Self> {
        RationalHecke::from_hecke(h).mul(self)
    }

    /// Specialize `v = 1`; `None` if some denominator vanishes there.
    pub fn eval_one(&self) -> Option<BTreeMap<Permutation, BigRational>> {
        let g = group(self.n);
        let mut out = BTreeMap::new();
        for (&i, c) in &self.terms {
            let (num, den) = c.eval_one()?;
            let q = BigRational::new(num, den);
            if q != BigRational::from_integer(BigInt::from(0)) {
                out.insert(g.elem(i).clone(), q);
            }
        }
        Some(out)
    }

    pub fn to_json(&self) -> Value {
        let g = group(self.n);
        let terms: Vec<Value> = self.terms.iter().map(|(&i, c)| json!([g.elem(i).to_json(), c.to_json()])).collect();
        json!({ "n": self.n, "basis": Basis::Kl.name(), "terms": terms })
    }
}

impl fmt::Debug for RationalHecke {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = group(self.n);
        let parts: Vec<String> = self.terms.iter().map(|(&i, c)| format!("({})b_{}", c, g.elem(i).name())).collect();
        write!(f, "{}", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })
    }
}

/// Shape of `P^k`, the insertion tableau of `w` restricted to entries `<= k`.
pub fn sh_l_k(w: &Permutation, k: usize) -> Result<Partition> {
    if k > w.n() {
        return Err(Error::InvalidPartition(format!("k = {} exceeds n = {}", k, w.n())));
    }
    Ok(rsk(w).0.restrict(k).shape())
}

fn restrict_to(w: &Permutation, k: usize) -> Result<Permutation> {
    Permutation::from_images(&w.images()[..k])
}

/// Coset factors of `w` see the restricted tableaux: for `w = x t` with `t` in `S_k`,
/// `Q(t) = Q^k`; for `w = u y` with `u` in `S_k`, `P(u) = P^k`.
pub fn coset_vtab_check(w: &Permutation, k: usize) -> Result<()> {
    let (p, q) = rsk(w);
    let (t, _) = w.coset_decompose_left(k)?;
    let t = restrict_to(&t, k)?;
    if rsk(&t).1 != q.restrict(k) {
        return Err(Error::Violation(format!("Q of the coset factor of {} differs from Q^{}", w.name(), k)));
    }
    let (ti, _) = w.inverse().coset_decompose_left(k)?;
    let u = restrict_to(&ti.inverse(), k)?;
    if rsk(&u).0 != p.restrict(k) {
        return Err(Error::Violation(format!("P of the coset factor of {} differs from P^{}", w.name(), k)));
    }
    Ok(())
}

/// With `μ` the shape of `V`: every term of `v^{r(μ)} (b_{V,V} ⊔ 1) b_w` either has `sh_{L,k} = μ`
/// and coefficient `δ_{V,P^k} δ_{y,w}` modulo `vZ[v]`, or has `sh_{L,k}` strictly below `μ`.
pub fn relative_action_check(v_tab: &Tableau, w: &Permutation) -> Result<()> {
    let k = v_tab.size();
    let n = w.n();
    if k > n {
        return Err(Error::ShapeMismatch(format!("V has {} boxes but n = {}", k, n)));
    }
    let mu = v_tab.shape();
    let d = rsk_inverse(v_tab, v_tab)?;
    let left = embed(&Hecke::basis_element(&d, Basis::Kl), n - k);
    let e = kl_mul(&left, &Hecke::basis_element(w, Basis::Kl))?;
    let pk = rsk(w).0.restrict(k);
    let g = e.group();
    for (&yi, c) in e.indexed_terms() {
        let y = g.elem(yi);
        let sh = sh_l_k(y, k)?;
        let mut c = c.shift(mu.r() as i32);
        if sh == mu {
            if y == w && pk == *v_tab {
                c -= &Laurent::one();
            }
            if !c.in_v_zv() {
                return Err(Error::Violation(format!("V = {}, w = {}: coefficient of b_{} is {} modulo lower terms", v_tab, w.name(), y.name(), c)));
            }
        } else if !sh.dominance_lt(&mu)? {
            return Err(Error::Violation(format!("V = {}, w = {}: b_{} has relative shape {} not below {}", v_tab, w.name(), y.name(), sh, mu)));
        }
    }
    Ok(())
}

/// `H_{s_1...s_k} b_{w_k ⊔ 1} = b_{w_{k+1}} - v b_y` in `H_{k+1}`, with `y = (s_2...s_k)(w_k ⊔ 1)`.
/// Also checks that `y = w(T^∨, T)` where `k+1` is the only entry of the second column of `T`.
pub fn thick_crossing_identity(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidPartition("k must be positive".into()));
    }
    let n = k + 1;
    let word: Vec<usize> = (1..=k).collect();
    let crossing = Permutation::from_word(n, &word)?;
    let wk = Permutation::longest(k).embed(1);
    let lhs = to_kl(&std_mul(&Hecke::basis_element(&crossing, Basis::Standard), &to_std(&Hecke::basis_element(&wk, Basis::Kl)))?);
    let tail = Permutation::from_word(n, &word[1..])?;
    let y = tail.compose(&wk)?;
    let mut rhs = Hecke::basis_element(&Permutation::longest(n), Basis::Kl);
    rhs.add_term(group(n).index_of(&y), &-&Laurent::v(1));
    if lhs != rhs {
        return Err(Error::Violation(format!("thick crossing for k = {}: {} vs {}", k, lhs, rhs)));
    }
    let (p, q) = rsk(&y);
    let second_column: Vec<usize> = q.rows().iter().filter_map(|r| r.get(1).copied()).collect();
    if k >= 2 && second_column != vec![k + 1] {
        return Err(Error::Violation(format!("thick crossing for k = {}: second column of Q is {:?}", k, second_column)));
    }
    if p != schutzenberger_dual(&q) {
        return Err(Error::Violation(format!("thick crossing for k = {}: P(y) is not Q(y) dual", k)));
    }
    Ok(())
}

/// `b_{P,Q} p_T = 0` unless `Q >= T`, and `p_T b_{P,Q} = 0` unless `P >= T`, for all `(P, Q)`.
/// Returns the number of vanishing products checked.
pub fn annihilation_check(path: &TableauPath) -> Result<usize> {
    let n = path.n();
    let t = path.tableau();
    let kt = quasi_idempotent(path)?;
    let mut count = 0;
    for lambda in Partition::all(n) {
        let tabs = Tableau::all_standard(&lambda);
        for p in &tabs {
            for q in &tabs {
                let b = BigHecke::basis_element(&rsk_inverse(p, q)?, Basis::Kl);
                if !dominates(q, &t)? {
                    if !kl_mul(&b, &kt)?.is_zero() {
                        return Err(Error::Violation(format!("b_(P,Q) p_T nonzero for P = {}, Q = {}, T = {}", p, q, t)));
                    }
                    count += 1;
                }
                if !dominates(p, &t)? {
                    if !kl_mul(&kt, &b)?.is_zero() {
                        return Err(Error::Violation(format!("p_T b_(P,Q) nonzero for P = {}, Q = {}, T = {}", p, q, t)));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// `a >= b` in the dominance order on tableaux.
fn dominates(a: &Tableau, b: &Tableau) -> Result<bool> {
    b.dominance_leq(a)
}

/// `p_T` agrees with `k_T / γ_T`, and reordering the factors of `k_T` changes nothing.
pub fn check_quasi_idempotent(path: &TableauPath) -> Result<()> {
    let kt = quasi_idempotent(path)?;
    if quasi_idempotent_ordered(path, true)? != kt {
        return Err(Error::Violation(format!("factors of k_T do not commute for {}", path)));
    }
    let pt = young_idempotent(path)?;
    let scaled = pt.scale(&RationalScalar::from_laurent(gamma(path)));
    if scaled != RationalHecke::from_hecke(&kt) {
        return Err(Error::Violation(format!("k_T differs from γ_T p_T for {}", path)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    fn bl(t: &[(i32, i64)]) -> BigLaurent {
        BigLaurent::from_i64_terms(t)
    }

    #[test]
    fn external_products() {
        let hs = Hecke::basis_element(&p(2, "s"), Basis::Standard);
        assert_eq!(embed(&hs, 1), Hecke::basis_element(&p(3, "s"), Basis::Standard));
        let b = Hecke::basis_element(&p(2, "s"), Basis::Kl);
        assert_eq!(external_product(&b, &b), Hecke::basis_element(&p(4, "su"), Basis::Kl));
        assert_eq!(to_std(&external_product(&b, &b)), external_product(&to_std(&b), &to_std(&b)));
    }

    #[test]
    fn jm_elements_multiply_to_the_full_twist() {
        for n in 2..=4 {
            let ft: Hecke = full_twist_std(n);
            assert_eq!(jm_product::<i64>(n).unwrap(), ft);
        }
        assert!(jm_element::<i64>(3, 3).is_err());
        // ft_2 = 1 + (v^{-1} - v) H_s
        let expected = Hecke::from_terms(2, Basis::Standard, [(p(2, "id"), Laurent::one()), (p(2, "s"), Laurent::from_i64_terms(&[(-1, 1), (1, -1)]))]).unwrap();
        assert_eq!(full_twist_std::<i64>(2), expected);
    }

    #[test]
    fn full_twist_is_central() {
        for n in 2..=4 {
            let ft: Hecke = full_twist_std(n);
            for s in 1..n {
                assert_eq!(std_right_mul_gen(&ft, s), std_left_mul_gen(s, &ft));
            }
        }
    }

    #[test]
    fn eigenvalues_and_gamma() {
        assert_eq!(eigenvalue(&Partition::row(3)), Laurent::v(6));
        assert_eq!(eigenvalue(&Partition::column(3)), Laurent::v(-6));
        assert_eq!(eigenvalue(&Partition::new(&[2, 1]).unwrap()), Laurent::one());
        assert_eq!(gamma(&TableauPath::parse("1").unwrap()), BigLaurent::one());
        assert_eq!(gamma(&TableauPath::parse("1;1,1").unwrap()), bl(&[(-2, 1), (2, -1)]));
        assert_eq!(gamma(&TableauPath::parse("1;2").unwrap()), bl(&[(2, 1), (-2, -1)]));
        assert!(TableauPath::parse("1;3").is_err());
    }

    #[test]
    fn rank_two_idempotents() {
        let col = TableauPath::parse("1;1,1").unwrap();
        let row = TableauPath::parse("1;2").unwrap();
        let bs = BigHecke::basis_element(&p(2, "s"), Basis::Kl);
        assert_eq!(quasi_idempotent(&col).unwrap(), bs.scale(&bl(&[(-1, 1), (1, -1)])));
        let q2 = RationalScalar::new(BigLaurent::one(), BigLaurent::quantum(2)).unwrap();
        let pc = RationalHecke::from_hecke(&bs).scale(&q2);
        assert_eq!(young_idempotent(&col).unwrap(), pc);
        assert_eq!(young_idempotent(&row).unwrap(), RationalHecke::one(2).sub(&pc).unwrap());
    }

    #[test]
    fn idempotents_rank_three() {
        let paths = TableauPath::all(3);
        let ps: Vec<RationalHecke> = paths.iter().map(|t| young_idempotent(t).unwrap()).collect();
        let mut total = RationalHecke::zero(3);
        for (i, a) in ps.iter().enumerate() {
            total = total.add(a).unwrap();
            for (j, b) in ps.iter().enumerate() {
                let prod = a.mul(b).unwrap();
                if i == j {
                    assert_eq!(&prod, a);
                } else {
                    assert!(prod.is_zero());
                }
            }
            check_quasi_idempotent(&paths[i]).unwrap();
            annihilation_check(&paths[i]).unwrap();
            assert!(a.eval_one().is_some());
        }
        assert_eq!(total, RationalHecke::one(3));
    }

    #[test]
    fn relative_cells_in_s4() {
        for w in all_permutations(4) {
            for k in 0..=4 {
                coset_vtab_check(&w, k).unwrap();
            }
            assert_eq!(sh_l_k(&w, 4).unwrap(), rsk(&w).0.shape());
            for k in [2, 3] {
                for l in Partition::all(k) {
                    for v in Tableau::all_standard(&l) {
                        relative_action_check(&v, &w).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn thick_crossings() {
        for k in 1..=4 {
            thick_crossing_identity(k).unwrap();
        }
    }

    #[test]
    fn tableau_dominance_example() {
        let a = Tableau::parse("13/2").unwrap();
        let b = Tableau::parse("12/3").unwrap();
        assert!(a.dominance_leq(&b).unwrap());
        assert!(!b.dominance_leq(&a).unwrap());
        assert!(a.dominance_leq(&a).unwrap());
    }
}
