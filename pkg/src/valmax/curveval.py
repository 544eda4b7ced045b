"""Exact valuations along parametrised branches.

Polynomials in x1..xm are substituted into truncated parametrisations with
rational coefficients; the t-order on each branch gives one coordinate of
the value.  Orders at or beyond the truncation order T are unknown and are
reported as ``None``.

Polynomial grammar (whitespace ignored)::

    poly   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := atom ["^" INTEGER]
    atom   := INTEGER ["/" INTEGER] | VAR | "(" poly ")"
    VAR    := "x" INTEGER            (x1 .. xm)
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .core import GoodIdeal, GoodSemigroup, NormalizationError, normalize, validate
from .lattice import Box, Point

Poly = Dict[Tuple[int, ...], Fraction]


class PolySyntaxError(ValueError):
    def __init__(self, text, pos, msg):
        self.text, self.pos = text, pos
        super().__init__(f"{msg} at position {pos} in {text!r}")


class FitError(RuntimeError):
    pass


class NotStabilizedError(FitError):
    pass


# -- polynomials --------------------------------------------------------------


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + c
        if out[k] == 0:
            del out[k]
    return out


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for (ka, ca), (kb, cb) in itertools.product(a.items(), b.items()):
        k = tuple(x + y for x, y in zip(ka, kb))
        out[k] = out.get(k, 0) + ca * cb
        if out[k] == 0:
            del out[k]
    return out


def _pscale(a: Poly, c) -> Poly:
    return {k: v * c for k, v in a.items()} if c else {}


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|(.))")


class _Parser:
    def __init__(self, text: str, m: int):
        self.text, self.m = text, m
        self.toks = []
        pos = 0
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if mt.end() == pos or mt.group(0).strip() == "":
                break
            start = mt.start(mt.lastindex)
            num, var, ch = mt.groups()
            if ch is not None and ch not in "+-*^/()":
                raise PolySyntaxError(text, start, f"unexpected character {ch!r}")
            self.toks.append((("num", int(num)) if num else ("var", var) if var else ("op", ch), start))
            pos = mt.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (("end", None), len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect_op(self, op):
        (kind, val), pos = self.take()
        if kind != "op" or val != op:
            raise PolySyntaxError(self.text, pos, f"expected {op!r}")

    def const(self, c) -> Poly:
        return {(0,) * self.m: Fraction(c)} if c else {}

    def poly(self) -> Poly:
        (kind, val), _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        out = _pscale(self.term(), sign)
        while True:
            (kind, val), _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                out = _padd(out, _pscale(self.term(), -1 if val == "-" else 1))
            else:
                return out

    def term(self) -> Poly:
        out = self.factor()
        while self.peek()[0] == ("op", "*"):
            self.take()
            out = _pmul(out, self.factor())
        return out

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == ("op", "^"):
            self.take()
            (kind, val), pos = self.take()
            if kind != "num":
                raise PolySyntaxError(self.text, pos, "expected a nonnegative integer exponent")
            out = self.const(1)
            for _ in range(val):
                out = _pmul(out, base)
            return out
        return base

    def atom(self) -> Poly:
        (kind, val), pos = self.take()
        if kind == "num":
            if self.peek()[0] == ("op", "/"):
                self.take()
                (k2, den), p2 = self.take()
                if k2 != "num" or den == 0:
                    raise PolySyntaxError(self.text, p2, "expected a nonzero integer denominator")
                return self.const(Fraction(val, den))
            return self.const(val)
        if kind == "var":
            j = int(val[1:])
            if not 1 <= j <= self.m:
                raise PolySyntaxError(self.text, pos, f"variable {val} outside x1..x{self.m}")
            return {tuple(1 if k == j - 1 else 0 for k in range(self.m)): Fraction(1)}
        if (kind, val) == ("op", "("):
            out = self.poly()
            self.expect_op(")")
            return out
        if kind == "end":
            raise PolySyntaxError(self.text, pos, "unexpected end of input")
        raise PolySyntaxError(self.text, pos, f"unexpected {val!r}")


def parse_poly(text: str, m: int) -> Poly:
    """Parse a polynomial in x1..xm with rational coefficients."""
    p = _Parser(text, m)
    if not p.toks:
        raise PolySyntaxError(text, 0, "empty polynomial")
    out = p.poly()
    (kind, val), pos = p.peek()
    if kind != "end":
        raise PolySyntaxError(text, pos, f"unexpected {val!r}")
    return out


# -- truncated series ---------------------------------------------------------


def series_mul(a: List[Fraction], b: List[Fraction], T: int) -> List[Fraction]:
    out = [Fraction(0)] * T
    for i, x in enumerate(a):
        if x:
            for j in range(T - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def order(s: Sequence[Fraction]) -> Optional[int]:
    for k, c in enumerate(s):
        if c:
            return k
    return None


@dataclass
class CurveSpec:
    m: int
    T: int
    branches: List[List[List[Fraction]]]  # branch -> variable -> series
    generators: List[Poly]
    shift: Optional[Point] = None
    _powers: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def p(self) -> int:
        return len(self.branches)

    def __post_init__(self):
        if self.T < 1:
            raise ValueError("truncation order must be at least 1")
        for b, br in enumerate(self.branches):
            if not any(any(c for c in s[1:]) for s in br):
                raise ValueError(f"branch {b + 1} is constant")

    def power(self, b: int, var: int, e: int) -> List[Fraction]:
        key = (b, var, e)
        if key not in self._powers:
            if e == 0:
                s = [Fraction(1)] + [Fraction(0)] * (self.T - 1)
            else:
                s = series_mul(self.power(b, var, e - 1), self.branches[b][var], self.T)
            self._powers[key] = s
        return self._powers[key]

    def series(self, f: Poly, b: int) -> List[Fraction]:
        out = [Fraction(0)] * self.T
        for exps, c in f.items():
            term = [Fraction(0)] * self.T
            term[0] = Fraction(1)
            for var, e in enumerate(exps):
                if e:
                    term = series_mul(term, self.power(b, var, e), self.T)
            for k in range(self.T):
                out[k] += c * term[k]
        return out

    @classmethod
    def from_dict(cls, doc: dict) -> "CurveSpec":
        m, T = int(doc["m"]), int(doc["T"])
        branches = []
        for br in doc["branches"]:
            series = [[Fraction(0)] * T for _ in range(m)]
            for name, terms in br.items():
                if not re.fullmatch(r"x\d+", name) or not 1 <= int(name[1:]) <= m:
                    raise ValueError(f"unknown variable {name!r}")
                for num, den, exp in terms:
                    if exp < 0:
                        raise ValueError("negative exponent in a parametrisation")
                    if exp < T:
                        series[int(name[1:]) - 1][exp] += Fraction(num, den)
            branches.append(series)
        gens = [parse_poly(g, m) for g in doc["generators"]]
        shift = tuple(doc["shift"]) if doc.get("shift") is not None else None
        return cls(m, T, branches, gens, shift)


def value_of(f, spec: CurveSpec) -> tuple:
    """Per-branch orders of f; None where the order is at least T."""
    if isinstance(f, str):
        f = parse_poly(f, spec.m)
    return tuple(order(spec.series(f, b)) for b in range(spec.p))


def _monomials(m: int, degree: int):
    for exps in itertools.product(range(degree + 1), repeat=m):
        if sum(exps) <= degree:
            yield exps


def _span_rows(spec: CurveSpec, degree_bound: int):
    """Value vectors (concatenated branch series) of monomial multiples of the generators."""
    rows = []
    for g in spec.generators:
        for exps in _monomials(spec.m, degree_bound):
            f = _pmul({exps: Fraction(1)}, g)
            rows.append([c for b in range(spec.p) for c in spec.series(f, b)])
    return rows


def _vector_value(vec, p, T):
    return tuple(order(vec[b * T:(b + 1) * T]) for b in range(p))


def sample_value_set(spec: CurveSpec, degree_bound: int, coefficient_trials: int, seed: int) -> set:
    """Values of elements in the span of monomial multiples of the generators.

    Every emitted point is the value of an explicit combination, evaluated
    exactly, with all orders below T; the result is a lower approximation of
    the value set.  Besides the spanning elements themselves, for each target
    v with all v_i < T a seeded random element of {orders >= v} is tried
    whenever rank counting says the value v is attained in the span.
    """
    if degree_bound < 0 or coefficient_trials < 1:
        raise ValueError("bounds must be positive")
    rng = random.Random(seed)
    p, T = spec.p, spec.T
    rows = _span_rows(spec, degree_bound)
    out = set()

    def emit(vec):
        v = _vector_value(vec, p, T)
        if all(x is not None for x in v):
            out.add(tuple(v))

    for r in rows:
        emit(r)
    if not rows:
        return out
    M = DomainMatrix([[QQ(c.numerator, c.denominator) for c in r] for r in rows],
                     (len(rows), p * T), QQ)
    basis = M.rref()[0]
    R = [r for r in basis.to_list() if any(r)]
    n = len(R)
    if not n:
        return out
    RD = DomainMatrix(R, (n, p * T), QQ)

    def cols(v):
        return [b * T + k for b in range(p) for k in range(v[b])]

    rank_cache = {}

    def dim_above(v):
        if v not in rank_cache:
            c = cols(v)
            rank_cache[v] = n - (RD.extract(list(range(n)), c).rank() if c else 0)
        return rank_cache[v]

    for v in itertools.product(range(T), repeat=p):
        d = dim_above(v)
        if d == 0:
            continue
        up = [tuple(x + (1 if j == i else 0) for j, x in enumerate(v)) for i in range(p)]
        if any(dim_above(u) >= d for u in up):
            continue
        c = cols(v)
        if c:
            null = RD.extract(list(range(n)), c).transpose().nullspace().to_list()
        else:
            null = [[QQ(int(i == k)) for i in range(n)] for k in range(n)]
        for _ in range(coefficient_trials):
            coeffs = [QQ(rng.randint(-9, 9)) for _ in null]
            x = [sum((a * row[i] for a, row in zip(coeffs, null)), QQ(0)) for i in range(n)]
            vec = [sum((x[i] * R[i][j] for i in range(n)), QQ(0)) for j in range(p * T)]
            before = len(out)
            emit(vec)
            if len(out) > before and tuple(v) in out:
                break
    if spec.shift is not None:
        out = {tuple(a + s for a, s in zip(v, spec.shift)) for v in out}
    return out


def fit_good_ideal(sample, ambient_sample, window: Box, ambient_window: Optional[Box] = None) -> GoodIdeal:
    """Turn sampled values into a validated good ideal over a fitted semigroup.

    Both samples are restricted to their windows and closed under inf there;
    the conductor is the least corner whose upper orthant inside the window
    is fully sampled, and it must sit strictly inside the window.
    """
    ambient_window = ambient_window or Box(tuple(0 for _ in window.lo), window.hi)
    S_min, S_cond, S_small = _fit(ambient_sample, ambient_window, "ambient")
    if S_min != tuple(0 for _ in S_min):
        raise FitError(f"ambient sample has minimum {S_min}, expected 0")
    S = GoodSemigroup(S_cond, S_small)
    mu, cond, small = _fit(sample, window, "ideal")
    E = GoodIdeal(S, mu, cond, small)
    report = validate(E)
    if not report.ok:
        v = report.violations[0]
        raise FitError(f"fitted set is not a good ideal ({v.axiom}: {v.message}); "
                       "increase the degree bound or the truncation order")
    return E


def _inf_closure(pts) -> set:
    out = set(pts)
    frontier = list(out)
    while frontier:
        new = set()
        for a in frontier:
            for b in out:
                c = tuple(min(x, y) for x, y in zip(a, b))
                if c not in out:
                    new.add(c)
        out |= new
        frontier = list(new)
    return out


def _fit(sample, window: Box, what: str):
    pts = _inf_closure(v for v in sample if v in window)
    if not pts:
        raise FitError(f"no {what} sample points inside the window")
    try:
        mu, cond, small = normalize(sorted(pts), window.lo, window.hi)
    except NormalizationError as exc:
        raise FitError(f"{what} sample does not determine a conductor ({exc}); "
                       "increase the degree bound or the truncation order") from exc
    if not all(c < h for c, h in zip(cond, window.hi)):
        raise FitError(f"{what} conductor {cond} touches the window top {window.hi}; increase T")
    return mu, cond, small


def default_window(spec: CurveSpec) -> Box:
    lo = spec.shift or (0,) * spec.p
    return Box(tuple(lo), tuple(l + spec.T - 1 for l in lo))


def ingest_curve(spec: CurveSpec, degree_bound: Optional[int] = None, coefficient_trials: int = 3,
                 seed: int = 0, window: Optional[Box] = None) -> GoodIdeal:
    """Sample the ring and the ideal, require the window content to be unchanged
    by one more degree, and fit a good ideal."""
    window = window or default_window(spec)
    if degree_bound is None:
        degree_bound = spec.T
    ring = CurveSpec(spec.m, spec.T, spec.branches, [{(0,) * spec.m: Fraction(1)}])
    ring_window = Box((0,) * spec.p, window.hi)
    runs = []
    for d in (degree_bound, degree_bound + 1):
        amb = sample_value_set(ring, d, coefficient_trials, seed)
        val = sample_value_set(spec, d, coefficient_trials, seed)
        runs.append(({v for v in amb if v in ring_window}, {v for v in val if v in window}))
    if runs[0] != runs[1]:
        raise NotStabilizedError(f"sample changed between degree bounds {degree_bound} and "
                                 f"{degree_bound + 1}; increase the degree bound")
    amb, val = runs[1]
    return fit_good_ideal(val, amb, window, ring_window)
