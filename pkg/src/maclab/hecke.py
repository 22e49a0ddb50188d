"""The polynomial representation of the affine Hecke algebra.

Operators act on LaurentPoly values; an operator product written
A B C applies C first.  T_i is the Demazure-Lusztig operator

    T_i = t^(-1/2) (t - (t x_i - x_{i+1})/(x_i - x_{i+1}) (1 - s_i)),

g = s_1 ... s_{n-1} followed by x_n -> q^(-1) x_n, and g_vee multiplies
by x_1 after T_1 ... T_{n-1}.  Most internal work uses t^(1/2) T_i,
which keeps coefficients free of odd powers of v.
"""

from __future__ import annotations

from . import permutations as fperm
from .errors import InvalidInputError, InvariantViolation
from .laurent import LaurentPoly
from .ratfunc import RF_ONE, RF_T, RatFunc

_V = RatFunc.v_power(1)
_VINV = RatFunc.v_power(-1)
_T_MINUS_1 = RF_T - RF_ONE
_ONE_MINUS_T = RF_ONE - RF_T


def _acc(out, e, c):
    prev = out.get(e)
    if prev is None:
        if not c.is_zero():
            out[e] = c
    else:
        s = prev + c
        if s.is_zero():
            del out[e]
        else:
            out[e] = s


def apply_tT(i: int, f: LaurentPoly) -> LaurentPoly:
    """t^(1/2) T_i f, computed termwise.

    On a monomial with exponents (a, b) at positions (i, i+1):
      a = b:  t x^e
      a > b:  x^(s_i e) + (1 - t) * (the monomials strictly between)
      a < b:  t x^(s_i e) + (t - 1) x^e + (t - 1) * (strictly between)
    which is the divided difference expanded into a geometric sum.
    """
    n = f.n
    if not 1 <= i <= n - 1:
        raise InvalidInputError(f"T_{i} needs 1 <= i <= {n - 1}")
    out = {}
    ia, ib = i - 1, i
    for e, c in f.terms.items():
        a, b = e[ia], e[ib]
        if a == b:
            _acc(out, e, c * RF_T)
            continue
        swapped = list(e)
        swapped[ia], swapped[ib] = b, a
        swapped = tuple(swapped)
        if a > b:
            _acc(out, swapped, c)
            if a - b > 1:
                cm = c * _ONE_MINUS_T
                mid = list(e)
                for k in range(1, a - b):
                    mid[ia] = a - k
                    mid[ib] = b + k
                    _acc(out, tuple(mid), cm)
        else:
            _acc(out, swapped, c * RF_T)
            cm = c * _T_MINUS_1
            _acc(out, e, cm)
            mid = list(e)
            for k in range(1, b - a):
                mid[ia] = b - k
                mid[ib] = a + k
                _acc(out, tuple(mid), cm)
    return LaurentPoly(n, out, _clean=True)


def apply_T(i: int, f: LaurentPoly) -> LaurentPoly:
    """T_i f."""
    return apply_tT(i, f).scale(_VINV)


def apply_T_inv(i: int, f: LaurentPoly) -> LaurentPoly:
    """T_i^(-1) f = (T_i - (t^(1/2) - t^(-1/2))) f."""
    return apply_T(i, f) - f.scale(_V - _VINV)


def divided_difference_part(i: int, f: LaurentPoly) -> LaurentPoly:
    """(t x_i - x_{i+1}) (f - s_i f) / (x_i - x_{i+1}) by exact division.

    The slow reference route for T_i; the division must be exact, and a
    nonzero remainder means a bug, not bad input.
    """
    n = f.n
    si = fperm.simple(i, n)
    num = (LaurentPoly.x(i, n).scale(RF_T) - LaurentPoly.x(i + 1, n)) * (
        f - f.subst_perm(si)
    )
    return lp_divexact_xdiff(num, i)


def lp_divexact_xdiff(f: LaurentPoly, i: int) -> LaurentPoly:
    """Exact division of f by (x_i - x_{i+1})."""
    n = f.n
    ia, ib = i - 1, i
    rem = dict(f.terms)
    quo = {}
    while rem:
        e = max(rem, key=lambda m: (m[ia], m[ib]))
        c = rem[e]
        if e[ia] == min(m[ia] for m in rem):
            # no term can be reduced further
            raise InvariantViolation(
                f"polynomial not divisible by x_{i} - x_{i + 1}"
            )
        qe = list(e)
        qe[ia] -= 1
        qe = tuple(qe)
        _acc(quo, qe, c)
        del rem[e]
        lower = list(qe)
        lower[ib] += 1
        _acc(rem, tuple(lower), c)
    return LaurentPoly(n, quo, _clean=True)


def apply_T_reference(i: int, f: LaurentPoly) -> LaurentPoly:
    """T_i through the explicit divided difference; used as an oracle."""
    return (f.scale(RF_T) - divided_difference_part(i, f)).scale(_VINV)


# ---------------------------------------------------------------------------
# g, g_vee, Y_i

_CYCLE_CACHE = {}


def _long_cycle(n):
    """s_1 s_2 ... s_{n-1} as a one-line permutation: i -> i + 1 mod n."""
    if n not in _CYCLE_CACHE:
        _CYCLE_CACHE[n] = tuple(list(range(2, n + 1)) + [1])
    return _CYCLE_CACHE[n]


def apply_g(f: LaurentPoly) -> LaurentPoly:
    """g f: substitute x_n -> q^(-1) x_n, then x_i -> x_{cycle(i)}."""
    return f.shift_qn().subst_perm(_long_cycle(f.n))


def apply_g_inv(f: LaurentPoly) -> LaurentPoly:
    cycle_inv = fperm.inverse(_long_cycle(f.n))
    return f.subst_perm(cycle_inv).shift_qn_inv()


def apply_gvee(f: LaurentPoly) -> LaurentPoly:
    """g_vee f = x_1 T_1 ... T_{n-1} f (T_{n-1} first)."""
    n = f.n
    out = apply_tT_chain(range(n - 1, 0, -1), f)
    return out.mul_monomial((1,) + (0,) * (n - 1), RatFunc.v_power(-(n - 1)))


def apply_tT_chain(indices, f: LaurentPoly) -> LaurentPoly:
    """Apply t^(1/2) T_i for each i in indices, first entry first."""
    for i in indices:
        f = apply_tT(i, f)
    return f


def apply_Y(i: int, f: LaurentPoly) -> LaurentPoly:
    """Y_i f via Y_1 = g T_{n-1} ... T_1 and Y_{i+1} = T_i^{-1} Y_i T_i^{-1}."""
    n = f.n
    if not 1 <= i <= n:
        raise InvalidInputError(f"Y_{i} needs 1 <= i <= {n}")
    for j in range(i - 1, 0, -1):
        f = apply_T_inv(j, f)
    f = apply_g(apply_tT_chain(range(1, n), f)).scale(
        RatFunc.v_power(-(n - 1))
    )
    for j in range(1, i):
        f = apply_T_inv(j, f)
    return f


def apply_Y_inv(i: int, f: LaurentPoly) -> LaurentPoly:
    """Y_i^(-1) f."""
    n = f.n
    if not 1 <= i <= n:
        raise InvalidInputError(f"Y_{i} needs 1 <= i <= {n}")
    for j in range(1, i):
        f = apply_T(j, f)
    f = apply_g_inv(f)
    for j in range(n - 1, 0, -1):
        f = apply_T_inv(j, f)
    for j in range(i - 1, 0, -1):
        f = apply_T(j, f)
    return f


# ---------------------------------------------------------------------------
# operator words, T_z, the symmetrizer, and X^{omega_r}


def apply_operator_word(word, f: LaurentPoly) -> LaurentPoly:
    """Apply a word of operator tags, rightmost tag first.

    Tags: 'T<i>', 'T<i>^-1', 'Y<i>', 'g', 'g^-1', 'gvee', '1_0'.

    >>> from .laurent import LaurentPoly
    >>> f = LaurentPoly.x(1, 2)
    >>> apply_operator_word(["T1^-1", "T1"], f) == f
    True
    """
    n = f.n
    for tag in reversed(list(word)):
        if tag == "g":
            f = apply_g(f)
        elif tag == "g^-1":
            f = apply_g_inv(f)
        elif tag == "gvee":
            f = apply_gvee(f)
        elif tag == "1_0":
            f = apply_symmetrizer(f)
        elif tag.startswith("T") and tag.endswith("^-1"):
            f = apply_T_inv(_op_index(tag[1:-3], n, n - 1), f)
        elif tag.startswith("T"):
            f = apply_T(_op_index(tag[1:], n, n - 1), f)
        elif tag.startswith("Y"):
            f = apply_Y(_op_index(tag[1:], n, n), f)
        else:
            raise InvalidInputError(f"bad operator tag {tag!r}")
    return f


def _op_index(text, n, top):
    try:
        i = int(text)
    except ValueError:
        raise InvalidInputError(f"bad operator index {text!r}")
    if not 1 <= i <= top:
        raise InvalidInputError(f"operator index {i} out of range for n={n}")
    return i


def apply_T_word(word, f: LaurentPoly, inverse: bool = False) -> LaurentPoly:
    """T_z f for z = s_{word[0]} s_{word[1]} ... (rightmost letter first).

    With inverse=True applies T_z^(-1) instead.
    """
    if inverse:
        for i in word:
            f = apply_T_inv(i, f)
    else:
        for i in reversed(word):
            f = apply_T(i, f)
    return f


def apply_tT_word(word, f: LaurentPoly) -> LaurentPoly:
    """t^(l(z)/2) T_z f along a reduced word."""
    for i in reversed(word):
        f = apply_tT(i, f)
    return f


def apply_T_perm(z, f: LaurentPoly, inverse: bool = False) -> LaurentPoly:
    """T_z (or T_z^-1) along the lex-smallest reduced word of z."""
    return apply_T_word(fperm.reduced_word(z), f, inverse=inverse)


def hecke_symmetrize_sum(f: LaurentPoly) -> LaurentPoly:
    """sum over z in S_n of t^(l(z)/2) T_z f.

    Uses the coset factorization z = (s_j s_{j+1} .. s_{n-1}) y with
    y in S_{n-1} and additive lengths, so the sum needs only O(n^2)
    applications of t^(1/2) T_i.
    """

    def level(m: int, g: LaurentPoly) -> LaurentPoly:
        if m <= 1:
            return g
        inner = level(m - 1, g)
        total = inner
        cur = inner
        for j in range(m - 1, 0, -1):
            cur = apply_tT(j, cur)
            total = total + cur
        return total

    return level(f.n, f)


def apply_symmetrizer(f: LaurentPoly) -> LaurentPoly:
    """1_0 f = t^(-l(w0)/2) sum_z t^(l(z)/2) T_z f."""
    n = f.n
    lw0 = n * (n - 1) // 2
    return hecke_symmetrize_sum(f).scale(RatFunc.v_power(-lw0))


def poincare_poly(n: int) -> RatFunc:
    """W_0(t) = sum over S_n of t^length."""
    out = RF_ONE
    for m in range(2, n + 1):
        out = out * sum(
            (RatFunc.t_power(k) for k in range(1, m)), RF_ONE
        )
    return out


def poincare_stabilizer(lam) -> RatFunc:
    """W_lambda(t) for the stabilizer of lam in S_n."""
    out = RF_ONE
    m = 1
    for i in range(1, len(lam)):
        if lam[i] == lam[i - 1]:
            m += 1
        else:
            out = out * poincare_poly(m)
            m = 1
    return out * poincare_poly(m)


def _coset_word_A(r: int, n: int):
    """Reduced word of w_r, descending runs: (s_{n-r} .. s_1)(s_{n-r+1} .. s_2)..."""
    word = []
    for m in range(1, r + 1):
        word.extend(range(n - r + m - 1, m - 1, -1))
    return word


def _coset_word_B(r: int, n: int):
    """Reduced word of w_r, ascending runs: (s_{n-r} .. ) down to (s_1 ..)."""
    word = []
    for k in range(n - r, 0, -1):
        word.extend(range(k, k + r))
    return word


def apply_X_omega(r: int, f: LaurentPoly, word_form: str = "A") -> LaurentPoly:
    """X^{omega_r} f = (g_vee)^r T_{w_r}^(-1) f.

    In the polynomial representation this is multiplication by
    x_1 ... x_r.  word_form selects one of the two reduced words of w_r.
    """
    n = f.n
    if not 1 <= r <= n:
        raise InvalidInputError(f"X^omega_{r} needs 1 <= r <= {n}")
    word = _coset_word_A(r, n) if word_form == "A" else _coset_word_B(r, n)
    for i in reversed(word):
        f = apply_T_inv(i, f)
    for _ in range(r):
        f = apply_gvee(f)
    return f
