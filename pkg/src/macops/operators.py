"""The q-difference operator family: builds, applications, alternative forms.

Fourteen operator kinds are supported.  The index m is a column height
(or the order r for the basic Macdonald family); "plus" variants shift
the chosen subset, "minus" variants shift its complement:

    macdonald_r      order-r Macdonald operator
    macdonald_u      its generating combination, linear in u per order
    raise_plus/minus        column adders, specialized parameter
    raise_u_plus/_minus     the same with the parameter u left symbolic
    raise_gen_plus/_minus   generating form, one v per added column
    lower_plus/minus        column removers, specialized parameter
    lower_u_plus/_minus     symbolic-u column removers
    lower_gen_plus/_minus   generating form of the removers

Two routes to every named operator exist.  ``build`` assembles the printed
double sum over subsets J and I literally, clearing each divided-difference
product into an exact polynomial; it is the reference implementation used
by tests.  ``apply_operator`` is the production route: the outer J sum is
collapsed into an elementary-polynomial factor, the Vandermonde stays as a
single t-shifted coefficient, and one exact division happens at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .bases import elementary, vandermonde
from .errors import IndexOutOfRange, OutOfRange, SpecializationRequired
from .rings import (
    Poly,
    Ring,
    _positive_trail,
    negate_var_exponents,
    permute_x,
    poly_exact_div,
    poly_gcd,
    scalar_shift,
    vector_shift,
    xring,
)

RAISE_KINDS = ("raise_plus", "raise_minus", "raise_u_plus", "raise_u_minus")
LOWER_KINDS = ("lower_plus", "lower_minus", "lower_u_plus", "lower_u_minus")
GEN_KINDS = (
    "raise_gen_plus",
    "raise_gen_minus",
    "lower_gen_plus",
    "lower_gen_minus",
)
MACDONALD_KINDS = ("macdonald_r", "macdonald_u")
ALL_KINDS = MACDONALD_KINDS + RAISE_KINDS + LOWER_KINDS + GEN_KINDS

_NEEDS_INDEX = frozenset(ALL_KINDS) - frozenset(GEN_KINDS) - {"macdonald_u"}
_NEEDS_U = frozenset(k for k in ALL_KINDS if "_u_" in k or k == "macdonald_u")
_NEEDS_V = frozenset(GEN_KINDS)


@dataclass(frozen=True)
class OperatorSpec:
    kind: str
    index: int | None = None

    def __post_init__(self):
        if self.kind not in ALL_KINDS:
            raise OutOfRange(f"unknown operator kind {self.kind!r}")
        if self.kind in _NEEDS_INDEX and self.index is None:
            raise IndexOutOfRange(f"{self.kind} needs an index")
        if self.kind not in _NEEDS_INDEX and self.index is not None:
            raise IndexOutOfRange(f"{self.kind} takes no index")


def operator_ring(n: int, kind: str) -> Ring:
    extra = ["q", "t"]
    if kind in _NEEDS_U or kind in _NEEDS_V:
        extra.append("u")
    if kind in _NEEDS_V:
        extra.append("v")
    return xring(n, tuple(extra))


def _check_index(m: int, n: int):
    if not 0 <= m <= n:
        raise IndexOutOfRange(f"index {m} outside [0, {n}]")


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def _subsets(n: int, size: int | None = None):
    items = tuple(range(1, n + 1))
    if size is not None:
        yield from combinations(items, size)
        return
    for k in range(n + 1):
        yield from combinations(items, k)


def _comp(I, n: int) -> tuple[int, ...]:
    s = set(I)
    return tuple(i for i in range(1, n + 1) if i not in s)


def _xmono(ring: Ring, idxs) -> Poly:
    e = [0] * len(ring.names)
    for i in idxs:
        e[i - 1] = 1
    return ring.monomial(tuple(e))


@lru_cache(maxsize=None)
def _tshift_delta(n: int, S: tuple[int, ...], names: tuple[str, ...]) -> Poly:
    ring = Ring(names)
    return scalar_shift(vandermonde(n, ring), S, "t")


@lru_cache(maxsize=None)
def cross_cleared(n: int, I: tuple[int, ...], pattern: str, names: tuple[str, ...]) -> Poly:
    """Vandermonde times the divided-difference product over crossing pairs.

    pattern "plus" clears prod (t x_i - x_j)/(x_i - x_j), "minus" clears
    prod (x_i - t x_j)/(x_i - x_j), both over i in I, j outside; the result
    is an exact polynomial with all orientation signs folded in.
    """
    ring = Ring(names)
    inside = set(I)
    res = ring.one
    t = ring.var("t")
    for a in range(1, n + 1):
        xa = ring.var(f"x{a}")
        for b in range(a + 1, n + 1):
            xb = ring.var(f"x{b}")
            a_in, b_in = a in inside, b in inside
            if a_in == b_in:
                res = res * (xa - xb)
            elif pattern == "plus":
                res = res * ((t * xa - xb) if a_in else (xa - t * xb))
            elif pattern == "minus":
                res = res * ((xa - t * xb) if a_in else (t * xa - xb))
            else:
                raise OutOfRange(f"unknown pattern {pattern!r}")
    return res


# -- explicit normal form ------------------------------------------------


class QDiffOp:
    """Sum of polynomial coefficients times q-shifts, over a common denominator.

    terms maps a shift vector (one integer per x variable; negative values
    appear only inside dualized operators) to its numerator coefficient.
    """

    __slots__ = ("ring", "nvars", "terms", "den")

    def __init__(self, ring: Ring, nvars: int, terms: dict, den: Poly):
        self.ring = ring
        self.nvars = nvars
        self.terms = {s: p for s, p in terms.items() if p}
        self.den = den

    def apply(self, f: Poly, raw: bool = False):
        """Apply to f; with raw=True return (numerator, denominator) instead.

        The raw form exists because the symbolic-parameter lowering kinds
        do not map every symmetric polynomial to a polynomial; equality
        checks then cross-multiply rather than divide.
        """
        if f.ring is not self.ring:
            f = f.cast(self.ring)
        acc = self.ring.zero
        for shift, num in self.terms.items():
            acc = acc + num * vector_shift(f, shift, "q")
        if raw:
            return acc, self.den
        return poly_exact_div(acc, self.den)

    def scaled(self, c) -> "QDiffOp":
        return QDiffOp(
            self.ring, self.nvars, {s: p * c for s, p in self.terms.items()}, self.den
        )

    def with_global_qshift(self) -> "QDiffOp":
        """Compose on the right with the shift of every x variable."""
        return QDiffOp(
            self.ring,
            self.nvars,
            {tuple(x + 1 for x in s): p for s, p in self.terms.items()},
            self.den,
        )

    def normalized(self) -> "QDiffOp":
        """Clear negative q,t exponents by scaling numerators and denominator."""
        polys = list(self.terms.values()) + [self.den]
        scale = self.ring.one
        for nm in ("q", "t"):
            low = min(p.var_min(nm) for p in polys)
            if low < 0:
                scale = scale * self.ring.var(nm, -low)
        if scale == self.ring.one:
            return self
        return QDiffOp(
            self.ring,
            self.nvars,
            {s: p * scale for s, p in self.terms.items()},
            self.den * scale,
        )

    def reduced(self) -> "QDiffOp":
        """Cancel the overall polynomial content shared with the denominator."""
        g = self.den
        for p in self.terms.values():
            g = poly_gcd(g, p)
            if g.is_const() and abs(g.const_value()) == 1:
                return self
        den = poly_exact_div(self.den, g)
        if _positive_trail(den) is not den:
            g = -g
            den = -den
        return QDiffOp(
            self.ring,
            self.nvars,
            {s: poly_exact_div(p, g) for s, p in self.terms.items()},
            den,
        )

    def equals(self, other: "QDiffOp") -> bool:
        if self.ring is not other.ring or self.nvars != other.nvars:
            return False
        for s in set(self.terms) | set(other.terms):
            a = self.terms.get(s, self.ring.zero)
            b = other.terms.get(s, other.ring.zero)
            if a * other.den != b * self.den:
                return False
        return True

    def __repr__(self):
        return f"<QDiffOp n={self.nvars} shifts={sorted(self.terms)}>"


def dualize(op: QDiffOp) -> QDiffOp:
    """The bar involution: invert q and t and invert every shift.

    Inverting shifts is part of the involution; inverting only the scalars
    does not reproduce the minus-family and fails the duality law.
    """
    terms = {
        tuple(-x for x in s): negate_var_exponents(p, ("q", "t"))
        for s, p in op.terms.items()
    }
    den = negate_var_exponents(op.den, ("q", "t"))
    return QDiffOp(op.ring, op.nvars, terms, den).normalized()


# -- reference builds of the printed double sums -------------------------


def build(spec: OperatorSpec, n: int) -> QDiffOp:
    """Assemble the printed subset sum for the operator, literally.

    Quadratic in the number of subset pairs, so for checking at small n
    only; production applications go through :func:`apply_operator`.
    """
    kind = spec.kind
    ring = operator_ring(n, kind)
    names = ring.names
    delta = vandermonde(n, ring)
    xall = _xmono(ring, range(1, n + 1))
    terms: dict = {}

    def add(shift_idxs, coeff):
        key = tuple(1 if i + 1 in set(shift_idxs) else 0 for i in range(n))
        terms[key] = terms.get(key, ring.zero) + coeff

    def tpow(e):
        return ring.var("t", e)

    def upow(e):
        return ring.var("u", e)

    if kind == "macdonald_r":
        r = spec.index
        _check_index(r, n)
        for I in _subsets(n, r):
            add(I, tpow(_binom2(r)) * cross_cleared(n, I, "plus", names))
        return QDiffOp(ring, n, terms, delta)

    if kind == "macdonald_u":
        for I in _subsets(n):
            k = len(I)
            c = tpow(_binom2(k)) * cross_cleared(n, I, "plus", names) * upow(k)
            add(I, c if k % 2 == 0 else -c)
        return QDiffOp(ring, n, terms, delta)

    if kind in RAISE_KINDS or kind in LOWER_KINDS:
        m = spec.index
        _check_index(m, n)
        lower = kind in LOWER_KINDS
        minus = kind.endswith("minus")
        symbolic = "_u_" in kind
        for J in _subsets(n, m):
            xfac = _xmono(ring, _comp(J, n)) if lower else _xmono(ring, J)
            for ksz in range(m + 1):
                for I in combinations(J, ksz):
                    k = len(I)
                    if not minus:
                        cross = cross_cleared(n, I, "plus", names)
                        if symbolic:
                            c = upow(k) * tpow(_binom2(k)) * cross
                        elif lower:
                            c = tpow(_binom2(k)) * cross
                        else:
                            # parameter specialized to a power of t, which may
                            # be negative: normalized() clears it afterwards
                            c = tpow((m - n + 1) * k + _binom2(k)) * cross
                        if k % 2:
                            c = -c
                        add(I, xfac * c)
                    else:
                        cross = cross_cleared(n, I, "minus", names)
                        a = m - k
                        if symbolic:
                            c = upow(a) * tpow(_binom2(n - k)) * cross
                        elif lower:
                            c = tpow((n - m) * a + _binom2(a)) * cross
                        else:
                            c = tpow(a + _binom2(a)) * cross
                        if a % 2:
                            c = -c
                        add(_comp(I, n), xfac * c)
        den = xall * delta if lower else delta
        return QDiffOp(ring, n, terms, den).normalized()

    # generating kinds: every subset size, one power of v per element of J
    lower = kind.startswith("lower")
    minus = kind.endswith("minus")
    for J in _subsets(n):
        xfac = _xmono(ring, _comp(J, n)) if lower else _xmono(ring, J)
        vfac = ring.var("v", len(J)) if J else ring.one
        for ksz in range(len(J) + 1):
            for I in combinations(J, ksz):
                k = len(I)
                if not minus:
                    c = ring.var("u", k) * tpow(_binom2(k)) * cross_cleared(
                        n, I, "plus", names
                    )
                    if k % 2:
                        c = -c
                    add(I, xfac * vfac * c)
                else:
                    a = len(J) - k
                    c = ring.var("u", a) * tpow(_binom2(n - k)) * cross_cleared(
                        n, I, "minus", names
                    )
                    if a % 2:
                        c = -c
                    add(_comp(I, n), xfac * vfac * c)
    den = xall * delta if lower else delta
    return QDiffOp(ring, n, terms, den)


# -- production applications --------------------------------------------


@lru_cache(maxsize=None)
def _plan(kind: str, m: int | None, n: int, names: tuple[str, ...]):
    """Collapsed form: list of (q-shift subset, coefficient), denominator.

    The outer sum over J is already folded into an elementary factor, and
    any negative powers of the specialized parameter are cleared into the
    denominator, so coefficients are honest polynomials.
    """
    ring = Ring(names)
    delta = vandermonde(n, ring)
    xall = _xmono(ring, range(1, n + 1))

    def tsd(S):
        return _tshift_delta(n, tuple(S), names)

    def esk(k, skip):
        return elementary(k, n, ring, skip=frozenset(skip))

    out: list[tuple[tuple[int, ...], Poly]] = []
    den = delta

    if kind == "macdonald_r":
        for I in _subsets(n, m):
            out.append((I, tsd(I)))
    elif kind == "macdonald_u":
        for I in _subsets(n):
            c = tsd(I) * ring.var("u", len(I))
            out.append((I, c if len(I) % 2 == 0 else -c))
    elif kind in ("raise_plus", "raise_minus"):
        shiftn = max(0, (n - 1 - m) * m)
        if kind == "raise_minus":
            shiftn += _binom2(n - m)
        for ksz in range(m + 1):
            for I in _subsets(n, ksz):
                k = len(I)
                if kind == "raise_plus":
                    e = (m - n + 1) * k + shiftn
                    c = ring.var("t", e) * tsd(I) * _xmono(ring, I) * esk(m - k, I)
                    out.append((I, c if k % 2 == 0 else -c))
                else:
                    a = m - k
                    e = (m - n + 1) * a - _binom2(n - m) + shiftn
                    comp = _comp(I, n)
                    c = ring.var("t", e) * tsd(comp) * _xmono(ring, I) * esk(m - k, I)
                    out.append((comp, c if a % 2 == 0 else -c))
        den = delta * ring.var("t", shiftn)
    elif kind in ("raise_u_plus", "raise_u_minus"):
        for ksz in range(m + 1):
            for I in _subsets(n, ksz):
                k = len(I)
                if kind == "raise_u_plus":
                    c = ring.var("u", k) * tsd(I) * _xmono(ring, I) * esk(m - k, I)
                    out.append((I, c if k % 2 == 0 else -c))
                else:
                    a = m - k
                    comp = _comp(I, n)
                    c = ring.var("u", a) * tsd(comp) * _xmono(ring, I) * esk(m - k, I)
                    out.append((comp, c if a % 2 == 0 else -c))
    elif kind in ("lower_plus", "lower_u_plus"):
        for ksz in range(m + 1):
            for I in _subsets(n, ksz):
                k = len(I)
                c = tsd(I) * esk(n - m, I)
                if kind == "lower_u_plus":
                    c = c * ring.var("u", k)
                out.append((I, c if k % 2 == 0 else -c))
        den = delta * xall
    elif kind in ("lower_minus", "lower_u_minus"):
        shiftn = _binom2(n - m) if kind == "lower_minus" else 0
        for ksz in range(m + 1):
            for I in _subsets(n, ksz):
                k = len(I)
                a = m - k
                comp = _comp(I, n)
                c = tsd(comp) * esk(n - m, I)
                if kind == "lower_u_minus":
                    c = c * ring.var("u", a)
                out.append((comp, c if a % 2 == 0 else -c))
        den = delta * xall * ring.var("t", shiftn)
    elif kind in GEN_KINDS:
        uv = ring.var("u") * ring.var("v")
        for I in _subsets(n):
            k = len(I)
            comp = _comp(I, n)
            if kind == "raise_gen_plus":
                c = uv**k * tsd(I) * _xmono(ring, I)
                for j in comp:
                    c = c * (1 + ring.var("v") * ring.var(f"x{j}"))
                out.append((I, c if k % 2 == 0 else -c))
            elif kind == "raise_gen_minus":
                c = ring.var("v", k) * tsd(comp) * _xmono(ring, I)
                for j in comp:
                    c = c * (1 - uv * ring.var(f"x{j}"))
                out.append((comp, c))
            elif kind == "lower_gen_plus":
                c = uv**k * tsd(I)
                for j in comp:
                    c = c * (ring.var(f"x{j}") + ring.var("v"))
                out.append((I, c if k % 2 == 0 else -c))
            else:
                c = ring.var("v", k) * tsd(comp)
                for j in comp:
                    c = c * (ring.var(f"x{j}") - uv)
                out.append((comp, c))
        if kind.startswith("lower"):
            den = delta * xall
    else:
        raise OutOfRange(f"unknown operator kind {kind!r}")
    return tuple(out), den


def apply_operator(spec: OperatorSpec, f: Poly, n: int, raw: bool = False):
    """Apply a named operator to an x-polynomial, exactly.

    raw=True skips the final division and returns (numerator, denominator);
    needed when a symbolic-parameter lowering kind lands outside the
    polynomial ring and only cross-multiplied comparisons make sense.
    """
    kind = spec.kind
    if kind in _NEEDS_INDEX:
        _check_index(spec.index, n)
    for nm in ("q", "t"):
        f.ring.pos(nm)
    if kind in _NEEDS_U or kind in _NEEDS_V:
        if "u" not in f.ring.names:
            raise SpecializationRequired(f"{kind} needs a ring with u")
    if kind in _NEEDS_V and "v" not in f.ring.names:
        raise SpecializationRequired(f"{kind} needs a ring with v")
    plan, den = _plan(kind, spec.index, n, f.ring.names)
    acc = f.ring.zero
    for subset, coeff in plan:
        acc = acc + coeff * scalar_shift(f, subset, "q")
    if raw:
        return acc, den
    return poly_exact_div(acc, den)


# -- determinant route ---------------------------------------------------

_DET_KINDS = (
    "macdonald_u",
    "raise_gen_plus",
    "raise_gen_minus",
    "lower_gen_plus",
    "lower_gen_minus",
)


def apply_determinantal(kind: str, n: int, f: Poly, raw: bool = False):
    """Apply via the operator-entry determinant expansion.

    Entries in one Leibniz product act on distinct variables and commute;
    each permutation term is an n-fold composition applied to f.  The
    lower kinds use entries pre-cleared by one power of x_j so everything
    stays polynomial until the final division.
    """
    if kind not in _DET_KINDS:
        raise OutOfRange(f"no determinant form for {kind!r}")
    ring = f.ring
    u = ring.var("u")
    v = ring.var("v") if "v" in ring.names else None

    def entry(i, j, g):
        # row i, column j, both 1-based; delta = n - i
        d = n - i
        xj = ring.var(f"x{j}")
        td = ring.var("t", d)
        shifted = scalar_shift(g, (j,), "q")
        if kind == "macdonald_u":
            return xj**d * (g - u * td * shifted)
        if kind == "raise_gen_plus":
            return xj**d * (g + v * xj * g - u * v * xj * td * shifted)
        if kind == "raise_gen_minus":
            return xj**d * (td * shifted + v * xj * g - u * v * xj * td * shifted)
        if kind == "lower_gen_plus":
            return xj**d * (xj * g + v * g - u * v * td * shifted)
        return xj**d * (td * xj * shifted + v * g - u * v * td * shifted)

    acc = ring.zero
    for perm in permutations(range(1, n + 1)):
        inv = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        g = f
        for j in range(1, n + 1):
            g = entry(perm[j - 1], j, g)
        acc = acc + (-g if inv & 1 else g)
    den = vandermonde(n, ring)
    if kind.startswith("lower"):
        den = den * _xmono(ring, range(1, n + 1))
    if raw:
        return acc, den
    return poly_exact_div(acc, den)


# -- factorized route at q = t ------------------------------------------


def apply_factorized_qt(kind: str, n: int, f: Poly, raw: bool = False):
    """Apply the q = t specialization through its commuting product form.

    The ring of f must use t for the shift variable (no q present); each
    factor is a single-variable two-term operator acting on Delta * f.
    """
    if kind not in _DET_KINDS:
        raise OutOfRange(f"no factorized form for {kind!r}")
    ring = f.ring
    if "q" in ring.names:
        raise OutOfRange("factorized route works in the q-specialized ring")
    u = ring.var("u")
    v = ring.var("v") if "v" in ring.names else None
    g = f * vandermonde(n, ring)
    for j in range(1, n + 1):
        xj = ring.var(f"x{j}")
        sh = scalar_shift(g, (j,), "t")
        if kind == "macdonald_u":
            g = g - u * sh
        elif kind == "raise_gen_plus":
            g = g + v * xj * g - u * v * xj * sh
        elif kind == "raise_gen_minus":
            g = sh + v * xj * (g - u * sh)
        elif kind == "lower_gen_plus":
            g = (xj + v) * g - u * v * sh
        else:
            g = xj * sh + v * (g - u * sh)
    den = vandermonde(n, ring)
    if kind.startswith("lower"):
        den = den * _xmono(ring, range(1, n + 1))
    if raw:
        return g, den
    return poly_exact_div(g, den)


# -- antisymmetrized route ----------------------------------------------


def antisymmetrize(f: Poly, n: int) -> Poly:
    """Sum of sign * permuted f over the symmetric group on x1..xn."""
    acc = f.ring.zero
    for perm in permutations(range(1, n + 1)):
        inv = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        g = permute_x(f, n, perm)
        acc = acc + (-g if inv & 1 else g)
    return acc


def apply_antisym_raise(m: int, n: int, f: Poly, minus: bool = False) -> Poly:
    """Column adders via the staircase-antisymmetrization form.

    Defined for symmetric f.  The plus form expands the elementary
    polynomial in the commuting single-variable operators
    x_i (1 - t^(m-i+1) T_i); the minus form composes each with the
    inverse shift and a staircase power of t, with the global shift
    of f applied first.
    """
    _check_index(m, n)
    ring = f.ring
    base = scalar_shift(f, range(1, n + 1), "q") if minus else f
    acc = ring.zero
    for S in _subsets(n, m):
        for ksz in range(m + 1):
            for A in combinations(S, ksz):
                if not minus:
                    e = sum(m - i + 1 for i in A)
                    c = ring.var("t", e)
                    g = c * _xmono(ring, S) * scalar_shift(f, A, "q")
                    acc = acc + (-g if len(A) % 2 else g)
                else:
                    a = len(S) - len(A)
                    e = (m - n + 1) * a - sum(n - i for i in A)
                    g = ring.var("t", e) * _xmono(ring, S) * scalar_shift(
                        base, A, "q", mult=-1
                    )
                    acc = acc + (-g if a % 2 else g)
    stair = [n - i for i in range(1, n + 1)] + [0] * (len(ring.names) - n)
    acc = acc * ring.monomial(tuple(stair))
    res = poly_exact_div(antisymmetrize(acc, n), vandermonde(n, ring))
    if minus:
        res = res * ring.var("t", _binom2(n) - _binom2(n - m))
    return res
