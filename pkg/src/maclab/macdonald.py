"""Macdonald polynomials E_mu, E_mu^z, f_mu, F_mu and P_lambda.

E_mu is built by walking the box-greedy word of u_mu from the constant
polynomial: a pi letter applies g_vee, an s_i letter applies the
intertwiner step t^(1/2) T_i + (1 - t)/(1 - a_nu), and each new leading
coefficient is normalized to 1.  Everything else is a Hecke-operator
twist of some E.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import hecke
from . import permutations as fperm
from .affine import box_greedy_word, decompose_mu
from .errors import InvalidInputError, InvariantViolation
from .laurent import LaurentPoly, check_weight
from .ratfunc import RF_ONE, RF_T, RatFunc, one_minus


@dataclass(frozen=True)
class EigenData:
    """The scalars of the H-action at (mu, i)."""

    mu: tuple
    i: int
    a_mu: RatFunc
    a_simu: RatFunc
    d_mu: RatFunc


def eigen_data(mu, i: int) -> EigenData:
    mu = check_weight(mu)
    v = fperm.v_increasing(mu)
    if mu[i - 1] == mu[i]:
        a = RatFunc.t_power(-1)
        return EigenData(mu, i, a, a.inverse(), RF_ONE)
    a = RatFunc.qt_monomial(mu[i - 1] - mu[i], v[i - 1] - v[i])
    ainv = a.inverse()
    d = (one_minus(RF_T * a) * one_minus(RF_T * ainv)) / (
        one_minus(a) * one_minus(ainv)
    )
    return EigenData(mu, i, a, ainv, d)


def eigenvalue(mu, i: int) -> RatFunc:
    """The Y_i eigenvalue q^(-mu_i) t^(-(v_mu(i)-1) + (n-1)/2)."""
    mu = check_weight(mu)
    n = len(mu)
    v = fperm.v_increasing(mu)
    return RatFunc.q_power(-mu[i - 1]) * RatFunc.v_power(
        -2 * (v[i - 1] - 1) + (n - 1)
    )


@dataclass(frozen=True)
class MacdonaldResult:
    mu: tuple
    poly: LaurentPoly
    route: str
    z: tuple | None = None


# ---------------------------------------------------------------------------
# E_mu by the intertwiner walk


@lru_cache(maxsize=4096)
def _compute_E_poly(mu) -> LaurentPoly:
    n = len(mu)
    f = LaurentPoly.one(n)
    nu = (0,) * n
    for letter in reversed(box_greedy_word(mu)):
        if letter == "pi":
            f = hecke.apply_gvee(f)
            nu = (nu[-1] + 1,) + nu[:-1]
            lead = f.coeff(nu)
            if lead.is_zero():
                raise InvariantViolation(f"vanishing leading term at {nu}")
            if not lead.is_one():
                f = f.scale(lead.inverse())
        else:
            i = int(letter[1:])
            if nu[i - 1] <= nu[i]:
                raise InvariantViolation(
                    f"box-greedy word hit s_{i} at weight {nu}"
                )
            scalar = one_minus(RF_T) / one_minus(eigen_data(nu, i).a_mu)
            f = hecke.apply_tT(i, f) + f.scale(scalar)
            nu = nu[: i - 1] + (nu[i], nu[i - 1]) + nu[i + 1 :]
    if nu != mu:
        raise InvariantViolation(f"walk ended at {nu}, wanted {mu}")
    return f


def compute_E(mu) -> MacdonaldResult:
    """The nonsymmetric Macdonald polynomial E_mu, mu in Z_{>=0}^n."""
    mu = check_weight(mu, nonneg=True)
    return MacdonaldResult(mu, _compute_E_poly(mu), "operator-chain")


def compute_E_rel(mu, z) -> MacdonaldResult:
    """E_mu^z = t^(-(l(z v_mu^-1) - l(v_mu^-1))/2) T_z E_mu."""
    mu = check_weight(mu, nonneg=True)
    z = fperm.check_perm(z, len(mu))
    vinv = fperm.inverse(fperm.v_increasing(mu))
    shift = fperm.length(fperm.compose(z, vinv)) - fperm.length(vinv)
    f = hecke.apply_T_perm(z, _compute_E_poly(mu))
    return MacdonaldResult(
        mu, f.scale(RatFunc.v_power(-shift)), "operator-chain", z
    )


def compute_f(mu) -> MacdonaldResult:
    """f_mu = t^(l(z_mu)/2) T_{z_mu} E_lambda, the KZ-family member."""
    mu = check_weight(mu, nonneg=True)
    lam = tuple(sorted(mu, reverse=True))
    z = fperm.min_coset_rep(mu)
    f = hecke.apply_tT_word(
        fperm.reduced_word(z), _compute_E_poly(lam)
    )
    return MacdonaldResult(mu, f, "operator-chain", z)


def compute_P(lam, method: str = "sum-rel") -> MacdonaldResult:
    """P_lambda, by summing f_nu over rearrangements or by symmetrizing."""
    lam = check_weight(lam, nonneg=True)
    if list(lam) != sorted(lam, reverse=True):
        raise InvalidInputError(f"{lam} is not weakly decreasing")
    n = len(lam)
    if method == "sum-rel":
        total = LaurentPoly.zero(n)
        for nu in fperm.weight_orbit(lam):
            total = total + compute_f(nu).poly
        return MacdonaldResult(lam, total, "operator-chain")
    if method == "symmetrize":
        w_lam = hecke.poincare_stabilizer(lam)
        f = hecke.hecke_symmetrize_sum(_compute_E_poly(lam))
        return MacdonaldResult(lam, f.scale(w_lam.inverse()), "symmetrization")
    raise InvalidInputError(f"unknown method {method!r}")


def compute_F(mu) -> MacdonaldResult:
    """F_mu = 1_0 E_mu (coefficients may carry odd powers of t^(1/2))."""
    mu = check_weight(mu, nonneg=True)
    return MacdonaldResult(
        mu, hecke.apply_symmetrizer(_compute_E_poly(mu)), "symmetrization"
    )


def symmetrization_constant(mu) -> RatFunc:
    """c(mu) with c(mu) F_mu = P_lambda:

    c(mu) = t^(l(w0)/2) / W_lambda(t) *
            prod over (i,j) in Inv(z_mu) of
            (1 - q^(lam_i - lam_j) t^e) / (1 - q^(lam_i - lam_j) t^(e+1)),

    where e = v_lam(i) - v_lam(j).  When the parts of lam are distinct,
    e = j - i and this is the familiar display; for repeated parts the
    step-by-step derivation forces the v_lam exponents (the telescoping
    eigenvalues are q^(lam_i - lam_j) t^(v_lam(i) - v_lam(j))).
    """
    mu = check_weight(mu, nonneg=True)
    n = len(mu)
    lam = tuple(sorted(mu, reverse=True))
    v_lam = fperm.v_increasing(lam)
    z = fperm.min_coset_rep(mu)
    c = RatFunc.v_power(n * (n - 1) // 2) / hecke.poincare_stabilizer(lam)
    for i, j in fperm.inversions(z):
        e = v_lam[i - 1] - v_lam[j - 1]
        c = c * (
            one_minus(RatFunc.qt_monomial(lam[i - 1] - lam[j - 1], e))
            / one_minus(RatFunc.qt_monomial(lam[i - 1] - lam[j - 1], e + 1))
        )
    return c


# ---------------------------------------------------------------------------
# closed forms


def closed_single_box(j: int, z) -> MacdonaldResult:
    """E_{eps_j}^z = sum_a c_a x_{z(a)} with the explicit c_a.

    c_j = 1; for a < j, with B = (1-t)/(1 - q t^(n-j+1)),
    c_a = B q t^C(a) if z(j) < z(a) and B t^C(a) if z(j) > z(a), where
    C(a) counts k in {j+1..n} strictly between in the stated sense.
    """
    z = fperm.check_perm(z)
    n = len(z)
    if not 1 <= j <= n:
        raise InvalidInputError(f"box row {j} out of range")
    base = one_minus(RF_T) / one_minus(RatFunc.qt_monomial(1, n - j + 1))
    terms = {}
    mu = [0] * n
    mu[j - 1] = 1

    def x_of(val):
        e = [0] * n
        e[val - 1] = 1
        return tuple(e)

    terms[x_of(z[j - 1])] = RF_ONE
    for a in range(1, j):
        za, zj = z[a - 1], z[j - 1]
        if zj < za:
            cnt = sum(
                1
                for k in range(j + 1, n + 1)
                if z[k - 1] < zj < za or zj < za < z[k - 1]
            )
            c = base * RatFunc.qt_monomial(1, cnt)
        else:
            cnt = sum(1 for k in range(j + 1, n + 1) if za < z[k - 1] < zj)
            c = base * RatFunc.t_power(cnt)
        terms[x_of(za)] = c
    return MacdonaldResult(
        tuple(mu), LaurentPoly(n, terms), "closed-form", z
    )


def closed_column(r: int, z) -> MacdonaldResult:
    """t^(l(z)/2) T_z E_{omega_r} = x_{z(1)} ... x_{z(r)} for minimal z."""
    z = fperm.check_perm(z)
    n = len(z)
    if not 1 <= r <= n:
        raise InvalidInputError(f"column height {r} out of range")
    if list(z[:r]) != sorted(z[:r]) or list(z[r:]) != sorted(z[r:]):
        raise InvalidInputError(
            f"{z} is not minimal in its (S_{r} x S_{n - r})-coset"
        )
    e = [0] * n
    for i in range(r):
        e[z[i] - 1] = 1
    mu = (1,) * r + (0,) * (n - r)
    return MacdonaldResult(
        mu, LaurentPoly.monomial(tuple(e)), "closed-form", z
    )


def _sum_x(n, ks):
    out = LaurentPoly.zero(n)
    for k in ks:
        out = out + LaurentPoly.x(k, n)
    return out


def closed_three_box(shape: str, n: int, symmetric: bool = False) -> MacdonaldResult:
    """The displayed three-box formulas: shapes '3e1', '2e1+e2', 'e1+e2+e3'.

    With symmetric=True returns P of the same shape instead of E.
    """
    if n < 3:
        raise InvalidInputError("three-box closed forms need n >= 3")
    t = RF_T
    q = RatFunc.q_power(1)
    one = RF_ONE
    A = one_minus(t) / one_minus(RatFunc.qt_monomial(1, 1))  # (1-t)/(1-qt)
    B = one_minus(t) / one_minus(RatFunc.qt_monomial(2, 1))  # (1-t)/(1-q^2 t)
    if shape == "3e1":
        mu = (3,) + (0,) * (n - 1)
        if not symmetric:
            x1 = LaurentPoly.x(1, n)
            out = x1 * x1 * x1
            sq = LaurentPoly.zero(n)
            lin = LaurentPoly.zero(n)
            for k in range(2, n + 1):
                xk = LaurentPoly.x(k, n)
                sq = sq + x1 * xk * xk
                lin = lin + x1 * x1 * xk
            out = out + sq.scale(B * q * q)
            out = out + lin.scale(A * (one + B * q) * q)
            cross = LaurentPoly.zero(n)
            for k in range(2, n + 1):
                for l in range(k + 1, n + 1):
                    cross = cross + x1 * LaurentPoly.x(k, n) * LaurentPoly.x(l, n)
            out = out + cross.scale(A * B * (one + q) * q * q)
            return MacdonaldResult(mu, out, "closed-form")
        out = _monomial_sym(mu, n)
        c21 = (one_minus(RatFunc.q_power(3)) / one_minus(RatFunc.qt_monomial(2, 1))) * (
            one_minus(t) / one_minus(q)
        )
        c111 = c21 * (
            one_minus(RatFunc.q_power(2)) / one_minus(RatFunc.qt_monomial(1, 1))
        ) * (one_minus(t) / one_minus(q))
        out = out + _monomial_sym((2, 1) + (0,) * (n - 2), n).scale(c21)
        out = out + _monomial_sym((1, 1, 1) + (0,) * (n - 3), n).scale(c111)
        return MacdonaldResult(mu, out, "closed-form")
    if shape == "2e1+e2":
        mu = (2, 1) + (0,) * (n - 2)
        if not symmetric:
            x1 = LaurentPoly.x(1, n)
            C = one_minus(t) / one_minus(RatFunc.qt_monomial(1, 2))
            out = x1 * x1 * LaurentPoly.x(2, n)
            rest = LaurentPoly.zero(n)
            for k in range(3, n + 1):
                rest = rest + x1 * LaurentPoly.x(2, n) * LaurentPoly.x(k, n)
            return MacdonaldResult(mu, out + rest.scale(C * q), "closed-form")
        out = _monomial_sym(mu, n)
        c = (one_minus(RatFunc.t_power(2)) / one_minus(RatFunc.qt_monomial(1, 1))) * (
            one_minus(RatFunc.qt_monomial(2, 1)) / one_minus(RatFunc.qt_monomial(1, 2))
        ) + (one_minus(t) / one_minus(q)) * (
            one_minus(RatFunc.q_power(2)) / one_minus(RatFunc.qt_monomial(1, 1))
        )
        out = out + _monomial_sym((1, 1, 1) + (0,) * (n - 3), n).scale(c)
        return MacdonaldResult(mu, out, "closed-form")
    if shape == "e1+e2+e3":
        mu = (1, 1, 1) + (0,) * (n - 3)
        if not symmetric:
            out = (
                LaurentPoly.x(1, n) * LaurentPoly.x(2, n) * LaurentPoly.x(3, n)
            )
            return MacdonaldResult(mu, out, "closed-form")
        return MacdonaldResult(mu, _monomial_sym(mu, n), "closed-form")
    raise InvalidInputError(f"unknown three-box shape {shape!r}")


def _monomial_sym(lam, n) -> LaurentPoly:
    """The monomial symmetric polynomial m_lambda in n variables."""
    lam = tuple(lam)
    out = {}
    for nu in fperm.weight_orbit(lam):
        out[nu] = RF_ONE
    return LaurentPoly(n, out, _clean=True)


def _poch(qexp: int, texp: int, r: int) -> RatFunc:
    """(q^qexp t^texp ; q)_r = prod_{k=0}^{r-1} (1 - q^(qexp+k) t^texp)."""
    out = RF_ONE
    for k in range(r):
        out = out * one_minus(RatFunc.qt_monomial(qexp + k, texp))
    return out


def closed_n2(mu) -> MacdonaldResult:
    """The n = 2 closed form via q-binomials in q-Pochhammer form.

    General (a, b) reduces to (0, m) or (m+1, 0) by pulling out powers
    of x1 x2.
    """
    mu = check_weight(mu, 2, nonneg=True)
    a, b = mu
    c = min(a, b)
    a, b = a - c, b - c
    if a == 0:
        m = b
        leading_row = False
    else:
        if b != 0:
            raise InvariantViolation("reduction left a mixed weight")
        m = a - 1
        leading_row = True
    # [k+m, m] -> (qt; q)_m / (q; q)_m, [k+i-1, i] -> (t; q)_i / (q; q)_i
    norm = _poch(1, 0, m) / _poch(1, 1, m)
    out = LaurentPoly.zero(2)
    for i in range(m + 1):
        j = m - i
        coef = (
            (_poch(0, 1, i) / _poch(1, 0, i))
            * (_poch(1, 1, j) / _poch(1, 0, j))
            * norm
        )
        if leading_row:
            coef = coef * RatFunc.q_power(i)
            e = (j + 1, i)
        else:
            e = (i, j)
        out = out + LaurentPoly.monomial(e, coef)
    if c:
        out = out.mul_monomial((c, c))
    return MacdonaldResult(tuple(mu), out, "closed-form")


# ---------------------------------------------------------------------------
# verification reports


@dataclass(frozen=True)
class CheckLine:
    name: str
    ok: bool
    detail: str = ""


def _diff_detail(got: LaurentPoly, want: LaurentPoly) -> str:
    d = got - want
    return "" if d.is_zero() else f"difference {d.to_string()}"


def verify_eigen(mu) -> list:
    """Check Y_i E_mu = eigenvalue * E_mu for every i."""
    mu = check_weight(mu, nonneg=True)
    E = _compute_E_poly(mu)
    out = []
    for i in range(1, len(mu) + 1):
        got = hecke.apply_Y(i, E)
        want = E.scale(eigenvalue(mu, i))
        out.append(
            CheckLine(f"Y_{i} E_{mu}", got == want, _diff_detail(got, want))
        )
    return out


def verify_haction(mu, i: int) -> list:
    """Check the H-action table at (mu, i).

    For mu_i > mu_{i+1} (with E = E_mu, Es = E_{s_i mu}):
      Y_i^-1 Y_{i+1} E = a_mu E
      t^(1/2) T_i E  = -(1-t)/(1-a_mu) E + Es
      t^(1/2) T_i Es = D_mu E - (1-t)/(1-a_simu) Es
    and for mu_i = mu_{i+1}:
      Y_i^-1 Y_{i+1} E = t^-1 E,  t^(1/2) tau_i E = 0,  t^(1/2) T_i E = t E.
    """
    mu = check_weight(mu, nonneg=True)
    if not 1 <= i <= len(mu) - 1:
        raise InvalidInputError(f"index {i} out of range")
    E = _compute_E_poly(mu)
    ed = eigen_data(mu, i)
    out = []
    yy = hecke.apply_Y_inv(i, hecke.apply_Y(i + 1, E))
    want = E.scale(ed.a_mu)
    out.append(CheckLine(f"Y_{i}^-1 Y_{i + 1} E_{mu}", yy == want, _diff_detail(yy, want)))
    tTE = hecke.apply_tT(i, E)
    if mu[i - 1] == mu[i]:
        tau = tTE + E.scale(one_minus(RF_T) / one_minus(ed.a_mu))
        out.append(CheckLine(f"t^1/2 tau_{i} E_{mu} = 0", tau.is_zero()))
        want = E.scale(RF_T)
        out.append(CheckLine(f"t^1/2 T_{i} E_{mu} = t E", tTE == want, _diff_detail(tTE, want)))
        return out
    if mu[i - 1] < mu[i]:
        # swap roles so that mu_i > mu_{i+1}
        return verify_haction(
            mu[: i - 1] + (mu[i], mu[i - 1]) + mu[i + 1 :], i
        )
    smu = mu[: i - 1] + (mu[i], mu[i - 1]) + mu[i + 1 :]
    Es = _compute_E_poly(smu)
    want = E.scale(-(one_minus(RF_T) / one_minus(ed.a_mu))) + Es
    out.append(
        CheckLine(f"t^1/2 T_{i} E_{mu}", tTE == want, _diff_detail(tTE, want))
    )
    tTEs = hecke.apply_tT(i, Es)
    want = E.scale(ed.d_mu) - Es.scale(one_minus(RF_T) / one_minus(ed.a_simu))
    out.append(
        CheckLine(f"t^1/2 T_{i} E_{smu}", tTEs == want, _diff_detail(tTEs, want))
    )
    tau = tTE + E.scale(one_minus(RF_T) / one_minus(ed.a_mu))
    out.append(
        CheckLine(f"t^1/2 tau_{i} E_{mu} = E_{smu}", tau == Es, _diff_detail(tau, Es))
    )
    taus = tTEs + Es.scale(one_minus(RF_T) / one_minus(ed.a_simu))
    want = E.scale(ed.d_mu)
    out.append(
        CheckLine(f"t^1/2 tau_{i} E_{smu} = D E_{mu}", taus == want, _diff_detail(taus, want))
    )
    return out


def verify_kz(lam) -> list:
    """Check the KZ-family relations on the orbit of lam.

    t^(1/2) T_i f_mu = f_{s_i mu} (mu_i > mu_{i+1}), = t f_mu (equal),
    = t f_{s_i mu} + (t-1) f_mu (mu_i < mu_{i+1}, derived), and
    g f_mu = q^(-mu_n) f_{(mu_n, mu_1, ..., mu_{n-1})}.
    """
    lam = check_weight(lam, nonneg=True)
    if list(lam) != sorted(lam, reverse=True):
        raise InvalidInputError(f"{lam} is not weakly decreasing")
    n = len(lam)
    orbit = fperm.weight_orbit(lam)
    fs = {nu: compute_f(nu).poly for nu in orbit}
    out = []
    for nu in orbit:
        for i in range(1, n):
            got = hecke.apply_tT(i, fs[nu])
            snu = nu[: i - 1] + (nu[i], nu[i - 1]) + nu[i + 1 :]
            if nu[i - 1] > nu[i]:
                want = fs[snu]
                name = f"t^1/2 T_{i} f_{nu} = f_{snu}"
            elif nu[i - 1] == nu[i]:
                want = fs[nu].scale(RF_T)
                name = f"t^1/2 T_{i} f_{nu} = t f_{nu}"
            else:
                want = fs[snu].scale(RF_T) + fs[nu].scale(RF_T - RF_ONE)
                name = f"t^1/2 T_{i} f_{nu} (ascent case)"
            out.append(CheckLine(name, got == want, _diff_detail(got, want)))
        got = hecke.apply_g(fs[nu])
        cyc = (nu[-1],) + nu[:-1]
        want = fs[cyc].scale(RatFunc.q_power(-nu[-1]))
        out.append(
            CheckLine(
                f"g f_{nu} = q^-{nu[-1]} f_{cyc}", got == want, _diff_detail(got, want)
            )
        )
    return out
