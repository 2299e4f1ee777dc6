//! Generating-function engine.
//!
//! Expansions here come in two exact flavours and one numeric one:
//!
//! - univariate and bivariate polynomial identities for a fixed n,
//!   obtained by truncating the infinite j-sums a guard window past the
//!   provable degree and asserting that every guard coefficient
//!   vanishes (a surviving guard coefficient means an arithmetic bug,
//!   not truncation error);
//! - the trivariate exponential series B(x,y,z) = sum F(n,d,k) x^d y^k
//!   z^n/n!, which satisfies the first-order relation
//!   (1/y - 1) dB/dz + (1 - x) B = (1 - y) + A(x,z)/x - y A(x,yz)
//!   coefficientwise; this is checked in exact rationals;
//! - a floating-point comparison of the truncated triple sum against
//!   the closed integral form (1/theta) int_theta^{theta^y}
//!   dt / (x - t^(1-1/y)) with theta = exp(z (1-x)/(1/y - 1)), via
//!   adaptive Simpson quadrature. This is the only floating point in
//!   the crate.

use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{binomial, count_to_ratio, factorial, ratio, Count, Ratio};
use crate::error::{Error, Result};
use crate::exact::{EulerRow, RefinedTable, DEFAULT_METHOD};
use crate::poly::Poly;

/// Extra coefficients computed past the provable degree; all of them
/// must come out exactly zero.
pub const DEFAULT_GUARD: usize = 5;

/// sum_d F(n, d, k) x^d as a polynomial of degree <= n-1, computed as
/// (1-x)^n sum_j j^(k-1) (j+1)^(n-k) x^j with the j-sum truncated at
/// n-1 plus the guard window.
pub fn gf_nk(n: u32, k: u32) -> Result<Poly> {
    gf_nk_with_guard(n, k, DEFAULT_GUARD)
}

pub fn gf_nk_with_guard(n: u32, k: u32, guard: usize) -> Result<Poly> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "gf_nk needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let top = n as usize - 1 + guard;
    let summand: Vec<Count> = (0..=top as u64)
        .map(|j| crate::arith::upow(j, k - 1) * crate::arith::upow(j + 1, n - k))
        .collect();
    let coeffs = multiply_by_one_minus_x_pow(&summand, n as usize, top);
    finish_guarded(coeffs, n as usize - 1, guard, "gf_nk")
}

/// a_n(x) = sum_d E(n, d) x^(d+1), computed as
/// (1-x)^(n+1) sum_j j^n x^j with the same guard technique. The result
/// has degree n and is divisible by x.
pub fn eulerian_poly_gf(n: u32, guard: usize) -> Result<Poly> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "eulerian_poly_gf: n must be >= 1, got {n}"
        )));
    }
    let top = n as usize + guard;
    let summand: Vec<Count> = (0..=top as u64).map(|j| crate::arith::upow(j, n)).collect();
    let coeffs = multiply_by_one_minus_x_pow(&summand, n as usize + 1, top);
    finish_guarded(coeffs, n as usize, guard, "eulerian_poly_gf")
}

/// Coefficients 0..=top of (1-x)^pow * sum_j summand[j] x^j. Each
/// retained coefficient only involves summand entries of index <= top,
/// so it is exact despite the truncation.
fn multiply_by_one_minus_x_pow(summand: &[Count], pow: usize, top: usize) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    let binoms: Vec<Count> = (0..=pow as i64).map(|i| binomial(pow as u64, i)).collect();
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (t, c) in coeffs.iter_mut().enumerate() {
        for i in 0..=pow.min(t) {
            let term = BigInt::from(&binoms[i] * &summand[t - i]);
            if i % 2 == 0 {
                *c += term;
            } else {
                *c -= term;
            }
        }
    }
    coeffs
}

fn finish_guarded(
    coeffs: Vec<num_bigint::BigInt>,
    degree: usize,
    guard: usize,
    what: &str,
) -> Result<Poly> {
    for (t, c) in coeffs.iter().enumerate().skip(degree + 1).take(guard) {
        if !c.is_zero() {
            return Err(Error::Internal(format!(
                "{what}: guard coefficient of x^{t} is {c}, expected 0"
            )));
        }
    }
    let kept: Vec<Ratio> = coeffs[..=degree]
        .iter()
        .map(|c| Ratio::from_integer(c.clone()))
        .collect();
    Ok(Poly::from_coeffs(kept))
}

/// sum_k F(n, d, k) y^k as a polynomial in y with zero constant term,
/// from the finite expansion of ((j+1)^n - (jy)^n) / (j+1 - jy).
pub fn gf_nd(n: u32, d: i64) -> Result<Poly> {
    use num_bigint::BigInt;
    if n < 1 {
        return Err(Error::InvalidArgument(format!("gf_nd: n must be >= 1, got {n}")));
    }
    // coefficient of y^(t+1) accumulates (-1)^(d-j) C(n,d-j) (j+1)^(n-1-t) j^t
    let mut acc = vec![BigInt::zero(); n as usize];
    let lo = (d - n as i64).max(0);
    for j in lo..=d {
        let b = binomial(n as u64, d - j);
        if b.is_zero() {
            continue;
        }
        let sign_pos = (d - j) % 2 == 0;
        let mut jp = Count::one(); // j^t
        for t in 0..n as usize {
            let term = BigInt::from(&b * &jp * crate::arith::upow(j as u64 + 1, n - 1 - t as u32));
            if sign_pos {
                acc[t] += term;
            } else {
                acc[t] -= term;
            }
            jp *= Count::from(j as u64);
        }
    }
    let mut coeffs = vec![Ratio::zero()];
    coeffs.extend(acc.into_iter().map(Ratio::from_integer));
    Ok(Poly::from_coeffs(coeffs))
}

/// The bivariate table polynomial sum_{d,k} F(n, d, k) x^d y^k,
/// represented as one polynomial in y per power of x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Poly>,
}

impl BiPoly {
    /// Coefficient polynomials in y, indexed by the power of x.
    pub fn x_coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of x^d y^k.
    pub fn coeff(&self, d: usize, k: usize) -> Ratio {
        self.coeffs.get(d).map_or_else(Ratio::zero, |p| p.coeff(k))
    }

    pub fn eval(&self, x: &Ratio, y: &Ratio) -> Ratio {
        let mut acc = Ratio::zero();
        for p in self.coeffs.iter().rev() {
            acc = acc * x + p.eval(y);
        }
        acc
    }
}

/// sum_{d,k} F(n, d, k) x^d y^k via
/// (1-x)^n y sum_j [((j+1)^n - (jy)^n) / (j+1 - jy)] x^j, guarded in x.
pub fn gf_n(n: u32) -> Result<BiPoly> {
    gf_n_with_guard(n, DEFAULT_GUARD)
}

pub fn gf_n_with_guard(n: u32, guard: usize) -> Result<BiPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("gf_n: n must be >= 1, got {n}")));
    }
    let top = n as usize - 1 + guard;
    // q_j(y) = y * sum_t (j+1)^(n-1-t) (j y)^t
    let summand: Vec<Poly> = (0..=top as u64)
        .map(|j| {
            let mut c = vec![Ratio::zero()];
            let mut jp = Count::one();
            for t in 0..n {
                c.push(count_to_ratio(&(&jp * crate::arith::upow(j + 1, n - 1 - t))));
                jp *= Count::from(j);
            }
            Poly::from_coeffs(c)
        })
        .collect();
    let binoms: Vec<Ratio> = (0..=n as i64).map(|i| count_to_ratio(&binomial(n as u64, i))).collect();
    let mut coeffs = Vec::with_capacity(top + 1);
    for t in 0..=top {
        let mut acc = Poly::zero();
        for i in 0..=(n as usize).min(t) {
            let scaled = summand[t - i].scale(&binoms[i]);
            acc = if i % 2 == 0 { &acc + &scaled } else { &acc - &scaled };
        }
        coeffs.push(acc);
    }
    for (t, p) in coeffs.iter().enumerate().skip(n as usize).take(guard) {
        if !p.is_zero() {
            return Err(Error::Internal(format!(
                "gf_n: guard coefficient of x^{t} is nonzero: {p}"
            )));
        }
    }
    coeffs.truncate(n as usize);
    Ok(BiPoly { coeffs })
}

/// Truncated trivariate power series with exact rational coefficients.
/// Orders are inclusive maximal exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriSeries {
    x_order: usize,
    y_order: usize,
    z_order: usize,
    coeffs: Vec<Ratio>,
}

impl TriSeries {
    pub fn new(x_order: usize, y_order: usize, z_order: usize) -> TriSeries {
        TriSeries {
            x_order,
            y_order,
            z_order,
            coeffs: vec![Ratio::zero(); (x_order + 1) * (y_order + 1) * (z_order + 1)],
        }
    }

    pub fn orders(&self) -> (usize, usize, usize) {
        (self.x_order, self.y_order, self.z_order)
    }

    fn idx(&self, i: usize, k: usize, m: usize) -> usize {
        (i * (self.y_order + 1) + k) * (self.z_order + 1) + m
    }

    pub fn get(&self, i: usize, k: usize, m: usize) -> Ratio {
        if i > self.x_order || k > self.y_order || m > self.z_order {
            return Ratio::zero();
        }
        self.coeffs[self.idx(i, k, m)].clone()
    }

    pub fn set(&mut self, i: usize, k: usize, m: usize, v: Ratio) {
        let at = self.idx(i, k, m);
        self.coeffs[at] = v;
    }

    pub fn add_at(&mut self, i: usize, k: usize, m: usize, v: Ratio) {
        if i > self.x_order || k > self.y_order || m > self.z_order {
            return;
        }
        let at = self.idx(i, k, m);
        self.coeffs[at] += v;
    }

    /// Termwise derivative in z; the z-order drops by one.
    pub fn d_dz(&self) -> TriSeries {
        let mut out = TriSeries::new(self.x_order, self.y_order, self.z_order.saturating_sub(1));
        for i in 0..=self.x_order {
            for k in 0..=self.y_order {
                for m in 0..=out.z_order {
                    out.set(i, k, m, self.get(i, k, m + 1) * ratio(m as i64 + 1, 1));
                }
            }
        }
        out
    }

    /// Division by y as an index shift; errors if any retained term has
    /// y-power 0.
    pub fn shift_y_down(&self) -> Result<TriSeries> {
        let mut out = TriSeries::new(self.x_order, self.y_order.saturating_sub(1), self.z_order);
        for i in 0..=self.x_order {
            for m in 0..=self.z_order {
                if !self.get(i, 0, m).is_zero() {
                    return Err(Error::Internal(format!(
                        "shift_y_down: term x^{i} y^0 z^{m} is nonzero"
                    )));
                }
                for k in 0..=out.y_order {
                    out.set(i, k, m, self.get(i, k + 1, m));
                }
            }
        }
        Ok(out)
    }

    /// Multiplication by (1 - x), exact on every retained coefficient.
    pub fn mul_one_minus_x(&self) -> TriSeries {
        let mut out = TriSeries::new(self.x_order, self.y_order, self.z_order);
        for i in 0..=self.x_order {
            for k in 0..=self.y_order {
                for m in 0..=self.z_order {
                    let mut v = self.get(i, k, m);
                    if i >= 1 {
                        v -= self.get(i - 1, k, m);
                    }
                    out.set(i, k, m, v);
                }
            }
        }
        out
    }

    /// Restriction to smaller orders.
    pub fn truncated(&self, x_order: usize, y_order: usize, z_order: usize) -> TriSeries {
        let mut out = TriSeries::new(
            x_order.min(self.x_order),
            y_order.min(self.y_order),
            z_order.min(self.z_order),
        );
        for i in 0..=out.x_order {
            for k in 0..=out.y_order {
                for m in 0..=out.z_order {
                    out.set(i, k, m, self.get(i, k, m));
                }
            }
        }
        out
    }
}

/// The exponential series A(x, z) = sum_{n>=1} a_n(x) z^n / n! with
/// a_n(x) = sum_d E(n, d) x^(d+1), truncated to the given orders. The
/// n = 0 term is deliberately absent. Returned with y-order 0 so it
/// composes with the trivariate machinery.
pub fn egf_a(x_order: usize, z_order: usize) -> Result<TriSeries> {
    if x_order < 1 || z_order < 1 {
        return Err(Error::InvalidArgument(
            "egf_a: both orders must be >= 1".into(),
        ));
    }
    let mut out = TriSeries::new(x_order, 0, z_order);
    for n in 1..=z_order as u32 {
        let row = EulerRow::build(n)?;
        let fact = count_to_ratio(&factorial(n as u64));
        for d in 0..n as i64 {
            let i = d as usize + 1;
            if i <= x_order {
                out.add_at(i, 0, n as usize, count_to_ratio(&row.get(d)) / &fact);
            }
        }
    }
    Ok(out)
}

/// B(x, y, z) = sum_{n>=1} sum_{d,k} F(n, d, k) x^d y^k z^n / n!,
/// truncated to the given orders.
pub fn build_b(x_order: usize, y_order: usize, z_order: usize) -> Result<TriSeries> {
    let mut out = TriSeries::new(x_order, y_order, z_order);
    for n in 1..=z_order as u32 {
        let table = RefinedTable::cached(n, DEFAULT_METHOD)?;
        let fact = count_to_ratio(&factorial(n as u64));
        for d in 0..(n as usize).min(x_order + 1) {
            for k in 1..=(n as usize).min(y_order) {
                let c = table.count(d as i64, k as i64);
                if !c.is_zero() {
                    out.add_at(d, k, n as usize, count_to_ratio(&c) / &fact);
                }
            }
        }
    }
    Ok(out)
}

/// Verifies coefficientwise, in exact rationals, that B satisfies
/// (1/y - 1) dB/dz + (1 - x) B = (1 - y) + A(x,z)/x - y A(x, yz)
/// on the box x^0..=x_order, y^0..=y_order, z^0..=z_order-1.
pub fn pde_check(x_order: usize, y_order: usize, z_order: usize) -> Result<bool> {
    let b = build_b(x_order, y_order + 1, z_order)?;
    pde_check_with(&b, x_order, y_order, z_order)
}

/// As [`pde_check`], with the series supplied by the caller (built at
/// orders (x_order, y_order + 1, z_order)). Exposed so tests can
/// corrupt a coefficient and watch the check fail.
pub fn pde_check_with(
    b: &TriSeries,
    x_order: usize,
    y_order: usize,
    z_order: usize,
) -> Result<bool> {
    if x_order < 1 || y_order < 1 || z_order < 1 {
        return Err(Error::InvalidArgument(
            "pde_check: all orders must be >= 1 for a nonempty comparison".into(),
        ));
    }
    if b.orders() != (x_order, y_order + 1, z_order) {
        return Err(Error::InvalidArgument(format!(
            "pde_check: series has orders {:?}, expected {:?}",
            b.orders(),
            (x_order, y_order + 1, z_order)
        )));
    }
    let zc = z_order - 1; // the z-derivative costs one order
    let db = b.d_dz();
    // left side: (1/y) dB/dz - dB/dz + (1 - x) B
    let mut lhs = db.shift_y_down()?.truncated(x_order, y_order, zc);
    let db_t = db.truncated(x_order, y_order, zc);
    let b_t = b.truncated(x_order, y_order, zc).mul_one_minus_x();
    for i in 0..=x_order {
        for k in 0..=y_order {
            for m in 0..=zc {
                let v = lhs.get(i, k, m) - db_t.get(i, k, m) + b_t.get(i, k, m);
                lhs.set(i, k, m, v);
            }
        }
    }
    // right side: (1 - y) + A(x,z)/x - y A(x, yz)
    let mut rhs = TriSeries::new(x_order, y_order, zc);
    rhs.add_at(0, 0, 0, ratio(1, 1));
    rhs.add_at(0, 1, 0, ratio(-1, 1));
    for n in 1..=zc as u32 {
        let row = EulerRow::build(n)?;
        let fact = count_to_ratio(&factorial(n as u64));
        for d in 0..n as i64 {
            let v = count_to_ratio(&row.get(d)) / &fact;
            // A(x,z)/x contributes at (d, 0, n)
            rhs.add_at(d as usize, 0, n as usize, v.clone());
            // y A(x, yz) contributes at (d+1, n+1, n)
            rhs.add_at(d as usize + 1, n as usize + 1, n as usize, -v);
        }
    }
    Ok(lhs == rhs)
}

/// Compares the truncated triple sum for B against the closed integral
/// form at one numeric point, returning |triple sum - integral|.
///
/// Both sides are evaluated to a working tolerance of tol/10: the
/// truncation tail estimate must stay below it, and the quadrature
/// refines until its local error estimate does. The returned residual
/// is expected to land below tol.
pub fn gfall_numeric_check(x: f64, y: f64, z: f64, n_max: u32, tol: f64) -> Result<f64> {
    // written so that NaN arguments fail the checks
    let x_ok = x.abs() > 0.0 && x.abs() < 1.0;
    let y_ok = y > 0.0 && y < 1.0;
    if !x_ok || !y_ok {
        return Err(Error::InvalidArgument(format!(
            "gfall_numeric_check needs 0 < |x| < 1 and 0 < y < 1, got x={x}, y={y}"
        )));
    }
    let tol_ok = tol > 0.0;
    if !tol_ok || n_max < 1 {
        return Err(Error::InvalidArgument(
            "gfall_numeric_check needs tol > 0 and n_max >= 1".into(),
        ));
    }
    let az = z.abs();
    if az >= 1.0 {
        return Err(Error::Domain(format!(
            "truncation tail diverges for |z| = {az} >= 1"
        )));
    }
    // each z^n term is bounded by |z|^n since sum_{d,k} F(n,d,k) = n!
    let tail = az.powi(n_max as i32 + 1) / (1.0 - az);
    let tail_ok = tail < tol / 10.0;
    if !tail_ok {
        return Err(Error::Domain(format!(
            "truncation estimate {tail:.3e} at n_max={n_max} exceeds tol/10 = {:.3e}; \
             raise n_max or shrink |z|",
            tol / 10.0
        )));
    }
    // truncated triple sum
    let mut lhs = 0.0f64;
    let mut zn = 1.0f64;
    let mut fact = 1.0f64;
    for n in 1..=n_max {
        zn *= z;
        fact *= n as f64;
        let table = RefinedTable::cached(n, DEFAULT_METHOD)?;
        let mut level = 0.0f64;
        let mut xd = 1.0f64;
        for d in 0..n {
            // Horner in y over the row
            let mut row_val = 0.0f64;
            for k in (1..=n).rev() {
                let c = table.count(d as i64, k as i64).to_f64().unwrap_or(f64::INFINITY);
                row_val = (row_val + c) * y;
            }
            level += xd * row_val;
            xd *= x;
        }
        lhs += zn / fact * level;
    }
    // closed form: (1/theta) int_theta^{theta^y} dt / (x - t^(1-1/y))
    let alpha = (1.0 - x) / (1.0 / y - 1.0);
    let theta = (alpha * z).exp();
    let a = theta;
    let b = theta.powf(y);
    let expo = 1.0 - 1.0 / y;
    let g = |t: f64| x - t.powf(expo);
    // t^expo is monotone in t, so the integrand can only become singular
    // if g changes sign between the endpoints
    if g(a) * g(b) <= 0.0 {
        return Err(Error::Domain(format!(
            "integrand denominator vanishes on the path [{b:.6}, {a:.6}]"
        )));
    }
    let f = |t: f64| 1.0 / g(t);
    let integral = adaptive_simpson(&f, a, b, tol / 10.0);
    let rhs = integral / theta;
    Ok((lhs - rhs).abs())
}

/// Adaptive Simpson quadrature with interval bisection; handles a > b
/// by the sign of the width. Deterministic.
fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let c = 0.5 * (a + b);
    let fa = f(a);
    let fb = f(b);
    let fc = f(c);
    let whole = simpson_rule(a, b, fa, fb, fc);
    adaptive_step(f, a, b, fa, fb, fc, whole, tol, 50)
}

fn simpson_rule(a: f64, b: f64, fa: f64, fb: f64, fc: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fc + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    fc: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let c = 0.5 * (a + b);
    let d = 0.5 * (a + c);
    let e = 0.5 * (c + b);
    let fd = f(d);
    let fe = f(e);
    let left = simpson_rule(a, c, fa, fc, fd);
    let right = simpson_rule(c, b, fc, fb, fe);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive_step(f, a, c, fa, fc, fd, left, tol / 2.0, depth - 1)
        + adaptive_step(f, c, b, fc, fb, fe, right, tol / 2.0, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{eulerian, refined_first, Method};

    #[test]
    fn gf_nk_examples() {
        assert_eq!(gf_nk(3, 2).unwrap(), Poly::from_i64(&[0, 2]));
        assert_eq!(gf_nk(1, 1).unwrap(), Poly::one());
        // the k = 1 column is the previous Eulerian row
        for n in 2..=9u32 {
            let p = gf_nk(n, 1).unwrap();
            for d in 0..n as i64 {
                assert_eq!(
                    p.coeff(d as usize),
                    count_to_ratio(&eulerian(n - 1, d).unwrap())
                );
            }
        }
    }

    #[test]
    fn gf_nk_matches_tables() {
        for n in 1..=10u32 {
            let t = RefinedTable::build(n, Method::Rec1).unwrap();
            for k in 1..=n {
                let p = gf_nk(n, k).unwrap();
                assert!(p.degree().map_or(0, |d| d) <= n as usize - 1);
                for d in 0..n as i64 {
                    assert_eq!(p.coeff(d as usize), count_to_ratio(&t.count(d, k as i64)));
                }
            }
        }
    }

    #[test]
    fn gf_nd_examples() {
        assert_eq!(gf_nd(3, 1).unwrap(), Poly::from_i64(&[0, 1, 2, 1]));
        assert_eq!(gf_nd(4, 4).unwrap(), Poly::zero());
        assert_eq!(gf_nd(4, -2).unwrap(), Poly::zero());
        for n in 1..=9u32 {
            for d in 0..n as i64 {
                let p = gf_nd(n, d).unwrap();
                assert!(p.coeff(0).is_zero());
                for k in 1..=n {
                    assert_eq!(
                        p.coeff(k as usize),
                        count_to_ratio(&refined_first(n, d, k).unwrap())
                    );
                }
                // evaluation at y = 1 recovers the Eulerian number
                assert_eq!(
                    p.eval(&ratio(1, 1)),
                    count_to_ratio(&eulerian(n, d).unwrap())
                );
            }
        }
    }

    #[test]
    fn gf_n_examples() {
        let b = gf_n(2).unwrap();
        assert_eq!(b.coeff(0, 1), ratio(1, 1)); // 12
        assert_eq!(b.coeff(1, 2), ratio(1, 1)); // 21
        assert_eq!(b.coeff(0, 2), ratio(0, 1));
        // total evaluation at x = y = 1 is n!
        for n in 1..=8u32 {
            let b = gf_n(n).unwrap();
            assert_eq!(
                b.eval(&ratio(1, 1), &ratio(1, 1)),
                count_to_ratio(&factorial(n as u64))
            );
            assert!(b.x_coeffs().len() <= n as usize);
            for p in b.x_coeffs() {
                assert!(p.degree().map_or(0, |d| d) <= n as usize);
            }
        }
    }

    #[test]
    fn gf_n_matches_tables() {
        for n in 1..=9u32 {
            let t = RefinedTable::build(n, Method::Rec2).unwrap();
            let b = gf_n(n).unwrap();
            for d in 0..n as usize {
                for k in 1..=n as usize {
                    assert_eq!(
                        b.coeff(d, k),
                        count_to_ratio(&t.count(d as i64, k as i64)),
                        "n={n} d={d} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn eulerian_poly_gf_matches_rows() {
        for n in 1..=15u32 {
            let p = eulerian_poly_gf(n, DEFAULT_GUARD).unwrap();
            let row = EulerRow::build(n).unwrap();
            assert!(p.coeff(0).is_zero());
            for d in 0..n as i64 {
                assert_eq!(p.coeff(d as usize + 1), count_to_ratio(&row.get(d)));
            }
        }
    }

    #[test]
    fn egf_slices() {
        let a = egf_a(12, 10).unwrap();
        // z^1 slice is x
        assert_eq!(a.get(1, 0, 1), ratio(1, 1));
        assert_eq!(a.get(2, 0, 1), ratio(0, 1));
        // z^3 slice is (x + 4x^2 + x^3)/6
        assert_eq!(a.get(1, 0, 3), ratio(1, 6));
        assert_eq!(a.get(2, 0, 3), ratio(4, 6));
        assert_eq!(a.get(3, 0, 3), ratio(1, 6));
        // n = 0 term absent, and a_n(1) = n! means each slice sums to 1
        assert_eq!(a.get(0, 0, 0), ratio(0, 1));
        for n in 1..=10usize {
            let slice_sum: Ratio = (0..=12).map(|i| a.get(i, 0, n)).sum();
            assert_eq!(slice_sum, ratio(1, 1), "slice n={n}");
        }
    }

    #[test]
    fn pde_holds_at_small_orders() {
        assert!(pde_check(4, 5, 4).unwrap());
        assert!(pde_check(1, 1, 1).unwrap(), "degenerate but well-defined");
        assert!(pde_check(0, 1, 1).is_err());
    }

    #[test]
    fn pde_detects_corruption() {
        let mut b = build_b(4, 6, 4).unwrap();
        let v = b.get(1, 2, 3) + ratio(1, 1);
        b.set(1, 2, 3, v);
        assert!(!pde_check_with(&b, 4, 5, 4).unwrap());
    }

    #[test]
    fn numeric_check_at_probe_points() {
        let r = gfall_numeric_check(0.3, 0.5, 0.2, 14, 1e-6).unwrap();
        assert!(r < 1e-6, "residual {r}");
        let r2 = gfall_numeric_check(-0.4, 0.7, 0.15, 14, 1e-6).unwrap();
        assert!(r2 < 1e-6, "residual {r2}");
    }

    #[test]
    fn numeric_check_z_zero_is_exact() {
        let r = gfall_numeric_check(0.3, 0.5, 0.0, 4, 1e-9).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn numeric_check_truncation_shrinks_with_n_max() {
        let coarse = gfall_numeric_check(0.3, 0.5, 0.2, 4, 1e-2).unwrap();
        let mid = gfall_numeric_check(0.3, 0.5, 0.2, 6, 1e-2).unwrap();
        let fine = gfall_numeric_check(0.3, 0.5, 0.2, 8, 1e-2).unwrap();
        assert!(coarse > mid && mid > fine, "{coarse} {mid} {fine}");
    }

    #[test]
    fn numeric_check_refuses_coarse_truncation() {
        assert!(matches!(
            gfall_numeric_check(0.3, 0.5, 0.5, 3, 1e-9),
            Err(Error::Domain(_))
        ));
    }
}
