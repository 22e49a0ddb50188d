"""Laurent polynomials in x_1..x_n over the fraction field Q(q, v).

Exponent vectors are dense integer tuples of length n; coefficients are
canonical RatFunc values and zero coefficients are never stored.

>>> x1 = LaurentPoly.x(1, 2)
>>> x2 = LaurentPoly.x(2, 2)
>>> (x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2
True
"""

from __future__ import annotations

from .errors import InvalidInputError
from .ratfunc import RF_ONE, RF_ZERO, RatFunc

Weight = tuple  # vector of n integers


def check_weight(mu, n=None, nonneg=False):
    """Validate a weight vector and return it as a tuple."""
    mu = tuple(int(x) for x in mu)
    if n is not None and len(mu) != n:
        raise InvalidInputError(f"weight {mu} does not have length {n}")
    if nonneg and any(x < 0 for x in mu):
        raise InvalidInputError(f"weight {mu} has negative entries")
    return mu


class LaurentPoly:
    """Finite sum of RatFunc-weighted monomials x^e, e in Z^n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None, _clean=False):
        self.n = n
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            self.terms = {
                tuple(e): c for e, c in dict(terms).items() if not c.is_zero()
            }
            for e in self.terms:
                if len(e) != n:
                    raise InvalidInputError(f"exponent {e} has wrong length")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(n: int) -> "LaurentPoly":
        return LaurentPoly(n, {}, _clean=True)

    @staticmethod
    def one(n: int) -> "LaurentPoly":
        return LaurentPoly(n, {(0,) * n: RF_ONE}, _clean=True)

    @staticmethod
    def x(i: int, n: int) -> "LaurentPoly":
        """The variable x_i, 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return LaurentPoly(n, {tuple(e): RF_ONE}, _clean=True)

    @staticmethod
    def monomial(e, coeff: RatFunc = RF_ONE) -> "LaurentPoly":
        e = tuple(e)
        if coeff.is_zero():
            return LaurentPoly.zero(len(e))
        return LaurentPoly(len(e), {e: coeff}, _clean=True)

    # -- ring operations ------------------------------------------------

    def _check_same(self, other):
        if self.n != other.n:
            raise InvalidInputError("dimension mismatch")

    def __add__(self, other):
        self._check_same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = prev + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return LaurentPoly(self.n, out, _clean=True)

    def __neg__(self):
        return LaurentPoly(
            self.n, {e: -c for e, c in self.terms.items()}, _clean=True
        )

    def __sub__(self, other):
        self._check_same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = -c
            else:
                s = prev - c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return LaurentPoly(self.n, out, _clean=True)

    def __mul__(self, other):
        self._check_same(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
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
        return LaurentPoly(self.n, out, _clean=True)

    def scale(self, c: RatFunc) -> "LaurentPoly":
        if c.is_zero():
            return LaurentPoly.zero(self.n)
        if c.is_one():
            return self
        return LaurentPoly(
            self.n, {e: x * c for e, x in self.terms.items()}, _clean=True
        )

    def mul_monomial(self, shift, coeff: RatFunc = RF_ONE) -> "LaurentPoly":
        """Multiply by coeff * x^shift."""
        shift = tuple(shift)
        out = {}
        for e, c in self.terms.items():
            c2 = c * coeff
            if not c2.is_zero():
                out[tuple(a + b for a, b in zip(e, shift))] = c2
        return LaurentPoly(self.n, out, _clean=True)

    def is_zero(self) -> bool:
        return not self.terms

    # -- the operations used by the Hecke operators ----------------------

    def coeff(self, mu) -> RatFunc:
        """Coefficient of x^mu (zero when absent)."""
        mu = check_weight(mu, self.n)
        return self.terms.get(mu, RF_ZERO)

    def subst_perm(self, w) -> "LaurentPoly":
        """Simultaneous substitution x_i -> x_{w(i)} for w in S_n.

        w is a permutation of {1..n} in one-line notation.
        """
        if sorted(w) != list(range(1, self.n + 1)):
            raise InvalidInputError(f"{w} is not a permutation of 1..{self.n}")
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * self.n
            for i in range(self.n):
                e2[w[i] - 1] = e[i]
            out[tuple(e2)] = c
        return LaurentPoly(self.n, out, _clean=True)

    def shift_qn(self) -> "LaurentPoly":
        """x_n -> q^(-1) x_n: term with x_n-exponent k picks up q^(-k)."""
        out = {}
        for e, c in self.terms.items():
            k = e[-1]
            out[e] = c * RatFunc.q_power(-k) if k else c
        return LaurentPoly(self.n, out, _clean=True)

    def shift_qn_inv(self) -> "LaurentPoly":
        """x_n -> q x_n, the inverse of shift_qn."""
        out = {}
        for e, c in self.terms.items():
            k = e[-1]
            out[e] = c * RatFunc.q_power(k) if k else c
        return LaurentPoly(self.n, out, _clean=True)

    # -- comparison and presentation --------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms sorted lexicographically by exponent vector."""
        return sorted(self.terms.items(), key=lambda t: t[0])

    def has_even_v(self) -> bool:
        return all(c.has_even_v() for c in self.terms.values())

    def to_json_obj(self):
        return [
            {"x": list(e), "coeff": c.to_json_obj()} for e, c in self.sorted_terms()
        ]

    def to_string(self, latex: bool = False) -> str:
        """Human-readable form with coefficients rendered in q, t."""
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = []
            for i, a in enumerate(e):
                if a == 0:
                    continue
                name = f"x_{{{i + 1}}}" if latex else f"x{i + 1}"
                if a == 1:
                    mono.append(name)
                else:
                    mono.append(f"{name}^{{{a}}}" if latex else f"{name}^{a}")
            mono_s = (" " if latex else "*").join(mono)
            cs = c.to_t_string(latex=latex)
            if c.is_one() and mono_s:
                bits.append(mono_s)
            elif not mono_s:
                bits.append(cs)
            else:
                sep = " " if latex else "*"
                if c.is_v_monomial():
                    wrap = cs
                elif latex:
                    wrap = f"\\left({cs}\\right)"
                else:
                    wrap = f"({cs})"
                bits.append(f"{wrap}{sep}{mono_s}")
        return " + ".join(bits)

    def __repr__(self):
        return f"LaurentPoly({self.n}, '{self.to_string()}')"


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    """Ring arithmetic dispatcher: op in {'add','sub','mul'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def lp_coeff(a: LaurentPoly, mu) -> RatFunc:
    return a.coeff(mu)


def lp_subst_perm(a: LaurentPoly, w) -> LaurentPoly:
    return a.subst_perm(tuple(w))


def lp_shift_qn(a: LaurentPoly) -> LaurentPoly:
    return a.shift_qn()
