"""Box diagrams, fillings, queue tableaux, pipe dreams, alcove walks.

Boxes of dg(mu) are (row i, column j) with 1 <= j <= mu_i; the basement
column j = 0 holds z(i).  The cylindrical coordinate of (i, j) is
i + n*j, and attack_mu(b) is the window of the n - 1 preceding
cylindrical coordinates intersected with the extended diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import permutations as fperm
from .affine import AffineRoot, PeriodicPerm, box_greedy_word
from .errors import InvalidInputError, InvariantViolation
from .laurent import LaurentPoly, check_weight
from .macdonald import MacdonaldResult
from .ratfunc import RF_ONE, RF_T, RatFunc, one_minus

# ---------------------------------------------------------------------------
# diagrams and box statistics


def boxes_of(mu):
    """Boxes of dg(mu) in increasing cylindrical coordinate."""
    n = len(mu)
    out = [(i, j) for i in range(1, n + 1) for j in range(1, mu[i - 1] + 1)]
    out.sort(key=lambda b: b[0] + n * b[1])
    return out


@dataclass(frozen=True)
class Diagram:
    """dg(mu): the boxes (i, j), 1 <= j <= mu_i, with their coordinates."""

    mu: tuple
    boxes: tuple
    coordinate: dict  # box -> i + n*j

    @staticmethod
    def of(mu) -> "Diagram":
        mu = check_weight(mu, nonneg=True)
        n = len(mu)
        boxes = tuple(boxes_of(mu))
        return Diagram(mu, boxes, {(i, j): i + n * j for (i, j) in boxes})


def in_extended(mu, i, j):
    """Membership in the extended diagram (basement column included)."""
    return 1 <= i <= len(mu) and (j == 0 or 1 <= j <= mu[i - 1])


def _coord_box(n, c):
    i = (c - 1) % n + 1
    return i, (c - i) // n


def attack_set(mu, i, j):
    """Attack set of box (i, j), as boxes, basement included."""
    n = len(mu)
    b = i + n * j
    out = []
    for c in range(b - n + 1, b):
        if c < 1:
            continue
        i2, j2 = _coord_box(n, c)
        if in_extended(mu, i2, j2):
            out.append((i2, j2))
    return out


def nleg_set(mu, i, j):
    """Boxes of dg(mu) at coordinates b + n, b + 2n, ... (same row, right)."""
    return [(i, j2) for j2 in range(j + 1, mu[i - 1] + 1)]


def narm_set(mu, i, j):
    """Attackers whose Nleg is no longer than that of (i, j)."""
    mine = len(nleg_set(mu, i, j))
    out = []
    for (i2, j2) in attack_set(mu, i, j):
        if j2 == 0:
            other = mu[i2 - 1]
        else:
            other = len(nleg_set(mu, i2, j2))
        if other <= mine:
            out.append((i2, j2))
    return out


def nleg_count_formula(mu, i, j):
    return mu[i - 1] - j


def narm_count_formula(mu, i, j):
    """#{i' < i : (i',j) in dg, mu_i' <= mu_i} + #{i' > i : (i',j-1) in ext, mu_i' < mu_i}."""
    n = len(mu)
    first = sum(
        1
        for i2 in range(1, i)
        if mu[i2 - 1] >= j and mu[i2 - 1] <= mu[i - 1]
    )
    second = sum(
        1
        for i2 in range(i + 1, n + 1)
        if (j - 1 == 0 or mu[i2 - 1] >= j - 1) and mu[i2 - 1] < mu[i - 1]
    )
    return first + second


def u_stat(mu, i, j):
    """u_mu(i, j) with u + 1 = n - #attack(i, j)."""
    return len(mu) - 1 - len(attack_set(mu, i, j))


@dataclass(frozen=True)
class BoxStats:
    mu: tuple
    attack: dict
    nleg: dict
    narm: dict
    u: dict


def box_stats(mu) -> BoxStats:
    """All per-box statistics; set and closed-form counts must agree."""
    mu = check_weight(mu, nonneg=True)
    attack, nleg, narm, u = {}, {}, {}, {}
    for (i, j) in boxes_of(mu):
        attack[i, j] = attack_set(mu, i, j)
        nleg[i, j] = len(nleg_set(mu, i, j))
        narm[i, j] = len(narm_set(mu, i, j))
        if nleg[i, j] != nleg_count_formula(mu, i, j):
            raise InvariantViolation("nleg set/formula mismatch")
        if narm[i, j] != narm_count_formula(mu, i, j):
            raise InvariantViolation("narm set/formula mismatch")
        u[i, j] = u_stat(mu, i, j)
    return BoxStats(mu, attack, nleg, narm, u)


# ---------------------------------------------------------------------------
# counting formulas


def conjugate_partition(lam):
    lam = [x for x in lam if x > 0]
    if not lam:
        return ()
    return tuple(
        sum(1 for x in lam if x >= j) for j in range(1, max(lam) + 1)
    )


def count(mu, what: str):
    """Exact counts: 'aw', 'naf' for any mu; 'cst', 't', 'c', 'r' for
    partitions (entries weakly decreasing)."""
    mu = check_weight(mu, nonneg=True)
    n = len(mu)
    if what in ("aw", "naf"):
        total = 1
        for (i, j) in boxes_of(mu):
            u = u_stat(mu, i, j)
            total *= 2**u if what == "aw" else u + 1
        return total
    if list(mu) != sorted(mu, reverse=True):
        raise InvalidInputError(f"{what} needs a partition, got {mu}")
    lam = mu
    lamc = conjugate_partition(lam)
    if what == "cst":
        prod = Fraction(1)
        for (i, j) in boxes_of(lam):
            content = j - i
            hook = (lam[i - 1] - j) + (lamc[j - 1] - i) + 1
            prod *= Fraction(n + content, hook)
        if prod.denominator != 1:
            raise InvalidInputError("cst count did not come out integral")
        return int(prod)
    if what == "t":
        total = factorial(n)
        for (i, j) in boxes_of(lam):
            if j > 1:
                total *= n - lamc[j - 2] + 1
        return total
    if what == "c":
        prod = Fraction(1)
        for (i, j) in boxes_of(lam):
            if j > 1:
                prod *= Fraction(2 ** (n - lamc[j - 2]), n - lamc[j - 2] + 1)
        return prod
    if what == "r":
        prod = Fraction(1)
        for (i, j) in boxes_of(lam):
            if j > 1:
                prod *= Fraction(n - lamc[j - 1] + 1, n - lamc[j - 2] + 1)
        return prod
    raise InvalidInputError(f"unknown count {what!r}")


def qt_special_count(shape: str, n: int, r: int) -> int:
    """#QT closed forms: n^(r-1) for both (r,0,...,0) and (r,...,r,0)."""
    if r < 1:
        raise InvalidInputError("need r >= 1")
    if shape not in ("row", "rect"):
        raise InvalidInputError("shape is 'row' (r,0,..,0) or 'rect' (r,..,r,0)")
    return n ** (r - 1)


# ---------------------------------------------------------------------------
# fillings


@dataclass(frozen=True)
class Filling:
    mu: tuple
    z: tuple
    values: tuple  # box values in cylindrical order
    kind: str = "nonattacking"

    def value(self, i, j):
        if j == 0:
            return self.z[i - 1]
        return self.values[boxes_of(self.mu).index((i, j))]

    def as_dict(self):
        return dict(zip(boxes_of(self.mu), self.values))

    def to_json_obj(self):
        return {
            "mu": list(self.mu),
            "z": list(self.z),
            "boxes": [
                {"i": i, "j": j, "v": v}
                for (i, j), v in zip(boxes_of(self.mu), self.values)
            ],
        }


def _qt_run_excluded(mu, z, fill, i, j):
    """Values excluded at (i, j) by the queue-tableau run condition."""
    out = set()
    r = i - 1
    while r >= 1 and mu[r - 1] == mu[i - 1]:
        out.add(fill.get((r, j - 1)) if j - 1 >= 1 else z[r - 1])
        r -= 1
    return out


def enumerate_fillings(mu, z, kind: str = "nonattacking"):
    """All fillings in cylindrical box order, values chosen ascending."""
    mu = check_weight(mu, nonneg=True)
    n = len(mu)
    z = fperm.check_perm(z, n)
    if kind not in ("nonattacking", "queue"):
        raise InvalidInputError(f"unknown filling kind {kind!r}")
    boxes = boxes_of(mu)
    attacks = {b: attack_set(mu, *b) for b in boxes}
    out = []
    fill = {}

    def backtrack(k):
        if k == len(boxes):
            out.append(
                Filling(mu, z, tuple(fill[b] for b in boxes), kind)
            )
            return
        i, j = boxes[k]
        banned = set()
        for (i2, j2) in attacks[i, j]:
            banned.add(z[i2 - 1] if j2 == 0 else fill[i2, j2])
        if kind == "queue":
            banned |= _qt_run_excluded(mu, z, fill, i, j)
        for val in range(1, n + 1):
            if val in banned:
                continue
            fill[i, j] = val
            backtrack(k + 1)
            del fill[i, j]

    backtrack(0)
    return out


def filling_word(T: Filling):
    """The word of T (variable indices in cylindrical box order) and the
    endpoint sum of the corresponding straight-line path."""
    endpoint = [0] * len(T.mu)
    for v in T.values:
        endpoint[v - 1] += 1
    return tuple(T.values), tuple(endpoint)


# ---------------------------------------------------------------------------
# pipe dreams


def pipedream_convert(T: Filling):
    """P(k, j) = i iff T(i, j) = k, with 0 where k is absent; column 0 is
    the basement."""
    mu = T.mu
    n = len(mu)
    width = (max(mu) if any(mu) else 0) + 1
    P = [[0] * width for _ in range(n)]
    for i in range(1, n + 1):
        P[T.z[i - 1] - 1][0] = i
    fill = T.as_dict()
    for (i, j), v in fill.items():
        if P[v - 1][j]:
            raise InvalidInputError("filling is not column distinct")
        P[v - 1][j] = i
    return [row[:] for row in P]


def pipedream_invert(P, mu, z) -> Filling:
    mu = check_weight(mu, nonneg=True)
    n = len(mu)
    z = fperm.check_perm(z, n)
    fill = {}
    for k in range(1, n + 1):
        for j in range(1, len(P[k - 1])):
            i = P[k - 1][j]
            if i:
                fill[i, j] = k
    try:
        values = tuple(fill[b] for b in boxes_of(mu))
    except KeyError as e:
        raise InvalidInputError(f"pipe dream misses box {e}") from None
    return Filling(mu, z, values)


# ---------------------------------------------------------------------------
# alcove walks


@dataclass(frozen=True)
class AlcoveWalk:
    mu: tuple
    z: tuple
    word: tuple  # letters of the reduced word for u_mu
    folds: tuple  # per s-letter: False = cross, True = fold
    states: tuple  # p_0 .. p_r, PeriodicPerm

    def shorthand(self) -> str:
        bits = []
        k = 0
        for L in self.word:
            if L == "pi":
                bits.append("pi")
            else:
                bits.append("1" if self.folds[k] else L)
                k += 1
        return " ".join(bits)


def iter_walks(mu, z):
    """Generate all alcove walks of type (z, box-greedy word of u_mu).

    Depth-first with the cross branch taken before the fold branch, so
    walks arrive ordered by their binary fold vector (cross = 0 before
    fold = 1, first s-letter most significant).  Prefixes are shared, so
    iterating all 2^l(u_mu) walks costs one group operation per tree node.
    """
    mu = check_weight(mu, nonneg=True)
    n = len(mu)
    z = fperm.check_perm(z, n)
    word = box_greedy_word(mu)
    pi = PeriodicPerm.pi(n)
    simples = {L: PeriodicPerm.s(int(L[1:]), n) for L in set(word) - {"pi"}}
    start = PeriodicPerm.from_finite(z)

    def rec(k, states, folds):
        if k == len(word):
            yield AlcoveWalk(mu, z, word, tuple(folds), tuple(states))
            return
        L = word[k]
        p = states[-1]
        if L == "pi":
            states.append(p * pi)
            yield from rec(k + 1, states, folds)
            states.pop()
            return
        states.append(p * simples[L])
        folds.append(False)
        yield from rec(k + 1, states, folds)
        states.pop()
        folds.pop()
        states.append(p)
        folds.append(True)
        yield from rec(k + 1, states, folds)
        states.pop()
        folds.pop()

    yield from rec(0, [start], [])


def enumerate_walks(mu, z):
    """All alcove walks of type (z, box-greedy word of u_mu), in the
    deterministic fold-vector order."""
    return list(iter_walks(mu, z))


@dataclass(frozen=True)
class PathSegment:
    kind: str  # 'c', 'f', or 'omega'
    direction: tuple  # vector in Q^n
    root: object = None  # AffineRoot for folds


@dataclass(frozen=True)
class PathRealization:
    walk: AlcoveWalk
    segments: tuple
    rho: tuple

    def endpoint(self):
        out = [Fraction(0)] * len(self.rho)
        for seg in self.segments:
            for a in range(len(out)):
                out[a] += seg.direction[a]
        return tuple(out)

    def to_json_obj(self):
        segs = []
        for s in self.segments:
            segs.append(
                {
                    "kind": s.kind,
                    "dir": [str(x) for x in s.direction],
                    "root": None
                    if s.root is None
                    else {"i": s.root.i, "j": s.root.j, "level": s.root.level},
                }
            )
        return {"segments": segs, "rho": [str(x) for x in self.rho]}


def walk_geometry(walk: AlcoveWalk) -> PathRealization:
    """Per-step path segments: omega for pi, c/f in direction of the
    moved coroot, fold steps also carrying their hyperplane root."""
    n = len(walk.mu)
    segments = []
    k = 0
    idx = 0
    for L in walk.word:
        p = walk.states[idx]
        idx += 1
        if L == "pi":
            segments.append(
                PathSegment("omega", tuple(Fraction(1, n) for _ in range(n)))
            )
            continue
        i = int(L[1:])
        window = p.window
        vi = (window[i - 1] - 1) % n + 1
        vi1 = (window[i] - 1) % n + 1
        ci = (window[i - 1] - vi) // n
        ci1 = (window[i] - vi1) // n
        direction = [Fraction(0)] * n
        direction[vi - 1] = Fraction(1)
        direction[vi1 - 1] = Fraction(-1)
        if walk.folds[k]:
            root = AffineRoot(vi1, vi, ci - ci1)
            segments.append(PathSegment("f", tuple(direction), root))
        else:
            segments.append(PathSegment("c", tuple(direction)))
        k += 1
    rho = tuple(
        Fraction(n - 1, 2) - (a - 1) for a in range(1, n + 1)
    )
    return PathRealization(walk, tuple(segments), rho)


# ---------------------------------------------------------------------------
# the column strict tableau formula for P_lambda


def _strip_ok(lam, mu):
    """lam >= mu with lam/mu a horizontal strip."""
    lam = list(lam) + [0] * (len(mu) - len(lam))
    mu = list(mu) + [0] * (len(lam) - len(mu))
    for i in range(len(lam)):
        if lam[i] < mu[i]:
            return False
        if i + 1 < len(lam) and mu[i] < lam[i + 1]:
            return False
    return True


def _poch_qt(qexp: int, texp: int, r: int) -> RatFunc:
    out = RF_ONE
    for k in range(r):
        out = out * one_minus(RatFunc.qt_monomial(qexp + k, texp))
    return out


def psi_strip(lam, mu) -> RatFunc:
    """psi_{lam/mu} for a horizontal strip, as a finite q-Pochhammer
    product over pairs 1 <= i <= j <= l(mu):

      (q^(mu_i - mu_j) t^(j-i+1); q)_{lam_i - mu_i}
      (q^(mu_i - lam_{j+1} + 1) t^(j-i); q)_{lam_i - mu_i}
      / (q^(mu_i - lam_{j+1}) t^(j-i+1); q)_{lam_i - mu_i}
      / (q^(mu_i - mu_j + 1) t^(j-i); q)_{lam_i - mu_i}
    """
    lam = tuple(int(x) for x in lam)
    mu = tuple(int(x) for x in mu)
    if list(lam) != sorted(lam, reverse=True) or list(mu) != sorted(
        mu, reverse=True
    ):
        raise InvalidInputError("psi needs partitions")
    if not _strip_ok(lam, mu):
        raise InvalidInputError(f"{lam}/{mu} is not a horizontal strip")
    ell = len([x for x in mu if x > 0])
    lam_pad = list(lam) + [0] * (ell + 2)
    mu_pad = list(mu) + [0] * (ell + 2)
    out = RF_ONE
    for i in range(1, ell + 1):
        r = lam_pad[i - 1] - mu_pad[i - 1]
        if r == 0:
            continue
        for j in range(i, ell + 1):
            d = j - i
            out = out * _poch_qt(mu_pad[i - 1] - mu_pad[j - 1], d + 1, r)
            out = out * _poch_qt(mu_pad[i - 1] - lam_pad[j] + 1, d, r)
            out = out / _poch_qt(mu_pad[i - 1] - lam_pad[j], d + 1, r)
            out = out / _poch_qt(mu_pad[i - 1] - mu_pad[j - 1] + 1, d, r)
    return out


def column_strict_tableaux(lam, n):
    """All column strict tableaux of shape lam with entries in {1..n},
    as chains (lam^(0) = empty, ..., lam^(n) = lam) of partitions."""
    lam = tuple(int(x) for x in lam)
    if list(lam) != sorted(lam, reverse=True):
        raise InvalidInputError("shape must be a partition")

    def chains(shape, steps):
        if steps == 0:
            if any(shape):
                return
            yield ((0,) * len(lam),)
            return
        for prev in _substrips(shape):
            for chain in chains(prev, steps - 1):
                yield chain + (shape,)

    def _substrips(shape):
        # all partitions mu with shape/mu a horizontal strip:
        # shape_{i+1} <= mu_i <= shape_i, mu weakly decreasing
        padded = list(shape) + [0]

        def rec(i, acc):
            if i == len(shape):
                yield tuple(acc)
                return
            for v in range(padded[i + 1], shape[i] + 1):
                if acc and v > acc[-1]:
                    continue
                yield from rec(i + 1, acc + [v])

        yield from rec(0, [])

    return list(chains(lam, n))


def cst_expand(lam, n) -> MacdonaldResult:
    """P_lambda = sum over column strict tableaux of psi_T x^T."""
    lam = tuple(int(x) for x in lam)
    if len([x for x in lam if x > 0]) > n:
        raise InvalidInputError("shape has more rows than variables")
    out = LaurentPoly.zero(n)
    for chain in column_strict_tableaux(lam, n):
        psi = RF_ONE
        weight = []
        for step in range(1, n + 1):
            prev, cur = chain[step - 1], chain[step]
            psi = psi * psi_strip(cur, prev)
            weight.append(sum(cur) - sum(prev))
        out = out + LaurentPoly.monomial(tuple(weight), psi)
    mu_full = tuple(list(lam) + [0] * (n - len(lam))) if len(lam) < n else lam[:n]
    return MacdonaldResult(mu_full, out, "cst")


# ---------------------------------------------------------------------------
# filling weights on the two tabulated one- and two-box families


def filling_weight(T: Filling) -> RatFunc:
    """wt(T) for mu = eps_j (any basement) or mu = eps_j1 + eps_j2 with
    the identity basement, per the tabulated single- and two-box weights.
    """
    mu = T.mu
    n = len(mu)
    boxes = boxes_of(mu)
    if len(boxes) == 1 and max(mu) == 1:
        (j, _), = boxes
        a = T.z.index(T.values[0]) + 1
        return _single_box_weight(n, j, T.z, a)
    if len(boxes) == 2 and max(mu) == 1:
        if T.z != fperm.identity(n):
            raise InvalidInputError(
                "two-box column weights are tabulated for the identity basement"
            )
        j1, j2 = (b[0] for b in boxes)
        return _two_box_column_weight(n, j1, j2, T.values[0], T.values[1])
    raise InvalidInputError("weights are tabulated only for <= 2 box columns")


def _single_box_weight(n, j, z, a) -> RatFunc:
    """c_a from the closed single-box expansion."""
    if a == j:
        return RF_ONE
    base = one_minus(RF_T) / one_minus(RatFunc.qt_monomial(1, n - j + 1))
    za, zj = z[a - 1], z[j - 1]
    if zj < za:
        cnt = sum(
            1
            for k in range(j + 1, n + 1)
            if z[k - 1] < zj < za or zj < za < z[k - 1]
        )
        return base * RatFunc.qt_monomial(1, cnt)
    cnt = sum(1 for k in range(j + 1, n + 1) if za < z[k - 1] < zj)
    return base * RatFunc.t_power(cnt)


def _two_box_column_weight(n, j1, j2, a, b) -> RatFunc:
    """Weight of the (eps_j1 + eps_j2) filling with T(j1,1) = a, T(j2,1) = b.

    w1 = (1-t)/(1 - q t^(n-j1)), w2 = (1-t)/(1 - q t^(n-j2+2)); the
    descending pair below j1 carries an extra factor t, pinned by
    matching the operator route on the full two-box family.
    """
    w1 = one_minus(RF_T) / one_minus(RatFunc.qt_monomial(1, n - j1))
    w2 = one_minus(RF_T) / one_minus(RatFunc.qt_monomial(1, n - j2 + 2))
    if (a, b) == (j1, j2):
        return RF_ONE
    if b == j2:
        return w1
    if a == j1 and j1 < b < j2:
        return w2
    if b == j1:
        return w1 * w2
    if a == j1 and b < j1:
        return w2 * RF_T
    if a < j1 and j1 < b < j2:
        return w1 * w2
    if a < j1 and b < j1:
        return w1 * w2 if a < b else w1 * w2 * RF_T
    raise InvalidInputError(f"values ({a}, {b}) are not a valid filling")
